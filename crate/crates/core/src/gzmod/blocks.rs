use std::collections::BTreeMap;

use serde::Serialize;

use super::action::{Coeffs, PreparedGenerator};
use super::point::GZCharacter;
use super::window::ModuleWindow;
use crate::error::Result;
use crate::exactalg::{nullity, Scalar};
use crate::skewops::build_generators;

#[derive(Clone, Debug, Serialize)]
pub struct BlockRow {
    pub character: String,
    pub shift: String,
    pub dim: usize,
    pub coset_reps: usize,
    pub socle_dim: usize,
    pub nilpotent: bool,
}

impl ModuleWindow {
    /// Basis indices grouped by the character of their block.
    pub fn block_decompose(&self) -> BTreeMap<GZCharacter, Vec<usize>> {
        let mut out: BTreeMap<GZCharacter, Vec<usize>> = BTreeMap::new();
        for b in 0..self.len() {
            out.entry(self.character(b).clone()).or_default().push(b);
        }
        out
    }

    fn gamma_generators(&self) -> Result<Vec<(crate::combinat::Index, PreparedGenerator)>> {
        let g = build_generators(&self.lambda);
        g.gammas().map(|(a, op)| Ok((*a, self.prepare(op)?))).collect()
    }

    /// Matrices of `γ_a − χ(γ_a)` on the block of orbit `j`, rows indexed
    /// by the block's basis elements.
    fn shifted_gamma_matrices(
        &self,
        j: usize,
        gammas: &[(crate::combinat::Index, PreparedGenerator)],
    ) -> Result<Vec<Vec<Vec<Scalar>>>> {
        let members: Vec<usize> = (0..self.len()).filter(|b| self.basis[*b].orbit == j).collect();
        let chi = &self.orbits[j].character;
        let mut out = Vec::new();
        for (a, gen) in gammas {
            let eig = chi.gamma_value(*a);
            let mut m = vec![vec![Scalar::zero(); members.len()]; members.len()];
            for (r, &b) in members.iter().enumerate() {
                let img: Coeffs = self.act_prepared(gen, b)?;
                for (c, s) in img {
                    let col = members.iter().position(|&x| x == c).expect("γ preserves blocks");
                    m[r][col] = s;
                }
                m[r][r] = m[r][r].sub(&eig);
            }
            out.push(m);
        }
        Ok(out)
    }

    /// Dimension of `{φ ∈ M(χ) : φ ∘ γ = χ(γ) φ for all γ}` for the block of orbit `j`.
    pub fn socle_dim(&self, j: usize) -> Result<usize> {
        let gammas = self.gamma_generators()?;
        self.socle_dim_with(j, &gammas)
    }

    fn socle_dim_with(&self, j: usize, gammas: &[(crate::combinat::Index, PreparedGenerator)]) -> Result<usize> {
        let mats = self.shifted_gamma_matrices(j, gammas)?;
        let n = self.orbits[j].reps.len();
        // φ = Σ a_b b; the condition reads Σ_b a_b M[b][c] = 0 for every c
        let mut eqs: Vec<Vec<Scalar>> = Vec::new();
        for m in &mats {
            eqs.extend((0..n).map(|c| m.iter().map(|row| row[c].clone()).collect()));
        }
        Ok(nullity(&eqs, n))
    }

    /// True iff every `γ_a − χ(γ_a)` is nilpotent on the block of orbit `j`.
    pub fn gamma_nilpotent(&self, j: usize) -> Result<bool> {
        let gammas = self.gamma_generators()?;
        self.gamma_nilpotent_with(j, &gammas)
    }

    fn gamma_nilpotent_with(&self, j: usize, gammas: &[(crate::combinat::Index, PreparedGenerator)]) -> Result<bool> {
        let mats = self.shifted_gamma_matrices(j, gammas)?;
        let n = self.orbits[j].reps.len();
        Ok(mats.iter().all(|m| {
            let mut p = m.clone();
            for _ in 1..n {
                p = mat_mul(&p, m);
            }
            p.iter().flatten().all(Scalar::is_zero)
        }))
    }

    pub fn block_table(&self) -> Result<Vec<BlockRow>> {
        let gammas = self.gamma_generators()?;
        let mut rows = Vec::new();
        for (j, o) in self.orbits.iter().enumerate() {
            let dim = (0..self.len()).filter(|b| self.basis[*b].orbit == j).count();
            rows.push(BlockRow {
                character: o.character.to_string(),
                shift: o.shift.render(&self.lambda),
                dim,
                coset_reps: o.reps.len(),
                socle_dim: self.socle_dim_with(j, &gammas)?,
                nilpotent: self.gamma_nilpotent_with(j, &gammas)?,
            });
        }
        Ok(rows)
    }
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|r| (0..m).map(|c| (0..b.len()).fold(Scalar::zero(), |acc, k| acc.add(&a[r][k].mul(&b[k][c])))).collect())
        .collect()
}
