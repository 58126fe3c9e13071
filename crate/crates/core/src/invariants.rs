//! Elementary symmetric polynomials and families of `G`-invariant polynomials.

use crate::combinat::{Composition, Index, SimpleReflection};
use crate::exactalg::{Polynomial, VarId, Q};

/// `e_k` in the variables of row `row`.
pub fn elementary(lambda: &Composition, row: u32, k: u32) -> Polynomial {
    let vars: Vec<Polynomial> = lambda.row(row).into_iter().map(|a| Polynomial::var(a.var())).collect();
    // coefficients of Π (1 + x_j t)
    let mut e = vec![Polynomial::one()];
    for x in &vars {
        let mut next = e.clone();
        next.push(Polynomial::zero());
        for d in 1..next.len() {
            next[d] = &e.get(d).cloned().unwrap_or_else(Polynomial::zero) + &(&e[d - 1] * x);
        }
        e = next;
    }
    e.get(k as usize).cloned().unwrap_or_else(Polynomial::zero)
}

/// True iff `f` is fixed by every simple reflection of every row.
pub fn is_g_invariant(lambda: &Composition, f: &Polynomial) -> bool {
    (1..=lambda.k()).all(|i| {
        (1..lambda.part(i)).all(|p| {
            let s = SimpleReflection::new(i, p);
            swap_vars(f, s.left(), s.right()) == *f
        })
    })
}

pub fn swap_vars(f: &Polynomial, a: Index, b: Index) -> Polynomial {
    let (va, vb) = (a.var(), b.var());
    f.rename(|v| {
        if v == va {
            vb
        } else if v == vb {
            va
        } else {
            v
        }
    })
}

/// Generator of the invariant ring with its weighted degree.
#[derive(Clone, Debug)]
pub struct InvariantGenerator {
    pub row: u32,
    pub k: u32,
    pub poly: Polynomial,
}

pub fn generators(lambda: &Composition, rows: &[u32]) -> Vec<InvariantGenerator> {
    rows.iter()
        .flat_map(|&i| {
            (1..=lambda.part(i)).map(move |k| InvariantGenerator { row: i, k, poly: elementary(lambda, i, k) })
        })
        .collect()
}

/// Every product of the elementary symmetric polynomials of the listed rows
/// with total degree at most `degree`, starting with `1`, in a fixed order.
pub fn family(lambda: &Composition, rows: &[u32], degree: u32) -> Vec<Polynomial> {
    let gens = generators(lambda, rows);
    let mut out = Vec::new();
    fn rec(gens: &[InvariantGenerator], start: usize, budget: u32, acc: &Polynomial, out: &mut Vec<Polynomial>) {
        out.push(acc.clone());
        for (idx, g) in gens.iter().enumerate().skip(start) {
            if g.k <= budget {
                rec(gens, idx, budget - g.k, &(acc * &g.poly), out);
            }
        }
    }
    rec(&gens, 0, degree, &Polynomial::one(), &mut out);
    out
}

/// Exponent vectors of the products in [`family`], same order.
pub fn family_labels(lambda: &Composition, rows: &[u32], degree: u32) -> Vec<Vec<(u32, u32)>> {
    let gens = generators(lambda, rows);
    let mut out = Vec::new();
    fn rec(
        gens: &[InvariantGenerator],
        start: usize,
        budget: u32,
        acc: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        out.push(acc.clone());
        for (idx, g) in gens.iter().enumerate().skip(start) {
            if g.k <= budget {
                acc.push((g.row, g.k));
                rec(gens, idx, budget - g.k, acc, out);
                acc.pop();
            }
        }
    }
    rec(&gens, 0, degree, &mut Vec::new(), &mut out);
    out
}

/// A pseudo-random invariant polynomial of degree at most `degree`, built as
/// a combination of family members with small integer coefficients.
pub fn random_invariant<R: rand_like::Source>(lambda: &Composition, degree: u32, rng: &mut R) -> Polynomial {
    let rows: Vec<u32> = (1..=lambda.k()).collect();
    let fam = family(lambda, &rows, degree);
    let mut f = Polynomial::zero();
    for p in &fam {
        let c = rng.next_small();
        if c != 0 {
            f = &f + &p.scale(&Q::from_integer(c.into()));
        }
    }
    if f.is_zero() {
        f = fam.last().cloned().unwrap_or_else(Polynomial::one);
    }
    f
}

/// Minimal randomness interface so the library does not depend on a RNG crate.
pub mod rand_like {
    pub trait Source {
        /// An integer in `-3..=3`.
        fn next_small(&mut self) -> i64;
    }

    /// SplitMix64 generator, deterministic from its seed.
    #[derive(Clone, Debug)]
    pub struct SplitMix(pub u64);

    impl SplitMix {
        pub fn next_u64(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        }
    }

    impl Source for SplitMix {
        fn next_small(&mut self) -> i64 {
            (self.next_u64() % 7) as i64 - 3
        }
    }
}

pub fn var_poly(a: Index) -> Polynomial {
    Polynomial::var(VarId::X(a.row, a.col))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_of_two_variables() {
        let l = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(elementary(&l, 1, 2), &Polynomial::x(1, 1) * &Polynomial::x(1, 2));
        assert_eq!(elementary(&l, 1, 1), &Polynomial::x(1, 1) + &Polynomial::x(1, 2));
        assert!(elementary(&l, 1, 3).is_zero());
        assert!(is_g_invariant(&l, &elementary(&l, 1, 2)));
        assert!(!is_g_invariant(&l, &Polynomial::x(1, 1)));
    }

    #[test]
    fn family_counts_weighted_monomials() {
        let l = Composition::new(vec![2, 1]).unwrap();
        // a + 2b <= 12 has 49 solutions
        assert_eq!(family(&l, &[1], 12).len(), 49);
        assert!(family(&l, &[1, 2], 3).iter().all(|f| is_g_invariant(&l, f)));
        assert_eq!(family(&l, &[1], 4).len(), family_labels(&l, &[1], 4).len());
    }
}
