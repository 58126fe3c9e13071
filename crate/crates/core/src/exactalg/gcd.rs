//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive content / primitive-part decomposition with a primitive
//! pseudo-remainder sequence in a chosen main variable. The result is
//! normalised to leading coefficient 1 under the graded-lex order.

use super::poly::{Polynomial, Q};
use num_traits::{One, Zero};

/// Gcd of two polynomials, monic (leading coefficient 1). `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a == b {
        return a.monic();
    }
    // trial division catches the very common "one divides the other" case
    if a.num_terms() >= b.num_terms() && a.div_exact(b).is_some() {
        return b.monic();
    }
    if b.num_terms() >= a.num_terms() && b.div_exact(a).is_some() {
        return a.monic();
    }
    gcd_rec(a, b).monic()
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a.num_terms() == 1 && b.num_terms() == 1 {
        return monomial_gcd(a, b);
    }

    let va = a.vars();
    let vb = b.vars();
    // a variable present in only one argument: the gcd divides every
    // coefficient with respect to that variable
    if let Some(&v) = va.symmetric_difference(&vb).next() {
        let (with, without) = if va.contains(&v) { (a, b) } else { (b, a) };
        let mut g = without.clone();
        for c in with.to_univariate(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd_rec(&g, &c);
            if g.is_constant() {
                return Polynomial::one();
            }
        }
        return g;
    }

    let main = va
        .iter()
        .copied()
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .expect("non-constant polynomial has a variable");

    let ua = a.to_univariate(main);
    let ub = b.to_univariate(main);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd_rec(&ca, &cb);

    let mut f = primitive(ua, &ca);
    let mut g = primitive(ub, &cb);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.len() == 1 {
            // primitive polynomials of degree zero in `main` are units here
            return c;
        }
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            let pg = Polynomial::from_univariate(&g, main);
            return (&c * &pg).integer_primitive();
        }
        let cr = content(&r);
        f = g;
        g = primitive(r, &cr);
    }
}

fn monomial_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (ma, _) = a.leading_term().unwrap();
    let (mb, _) = b.leading_term().unwrap();
    let pairs = ma
        .pairs()
        .iter()
        .filter_map(|&(v, e)| {
            let f = mb.exponent(v);
            (f > 0).then_some((v, e.min(f)))
        })
        .collect();
    Polynomial::monomial(super::poly::Monomial::from_pairs(pairs), Q::one())
}

fn content(coeffs: &[Polynomial]) -> Polynomial {
    let mut g = Polynomial::zero();
    // cheapest coefficients first
    let mut order: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    order.sort_by_key(|c| (c.num_terms(), c.total_degree()));
    for c in order {
        g = gcd_rec(&g, c);
        if g.is_constant() {
            return Polynomial::one();
        }
    }
    g.integer_primitive()
}

fn primitive(coeffs: Vec<Polynomial>, content: &Polynomial) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = if content.is_one() {
        coeffs
    } else {
        coeffs.iter().map(|c| c.div_exact(content).expect("content divides coefficients")).collect()
    };
    // rational scaling keeps coefficient growth in check
    let lc = out.last().map(|p| p.leading_coeff()).unwrap_or_else(Q::one);
    if !lc.is_zero() && !lc.is_one() {
        let inv = lc.recip();
        out = out.iter().map(|c| c.scale(&inv)).collect();
    }
    out
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
/// Returns an empty vector for a zero remainder.
fn pseudo_rem(f: &[Polynomial], g: &[Polynomial]) -> Vec<Polynomial> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r: Vec<Polynomial> = f.to_vec();
    while r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (k, gk) in g.iter().enumerate() {
            let t = &lr * gk;
            r[k + shift] = &r[k + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        while r.last().is_some_and(Polynomial::is_zero) {
            r.pop();
        }
    }
    r
}
