//! The adjoint structure table over Z and the checks that run on it.

use rayon::prelude::*;
use serde::Serialize;
use smallvec::SmallVec;

use super::ChevalleyConstants;
use crate::scalar::Q;

type Vector = SmallVec<[(u32, i64); 4]>;

/// Integral Lie algebra with basis `H_1..H_r` (simple coroots) followed by
/// one `e_α` per root, in root-index order.
#[derive(Debug, Clone)]
pub struct IntegralAlgebra {
    rank: usize,
    dim: usize,
    table: Vec<Vector>,
}

/// Outcome of the exhaustive Jacobi check.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct JacobiReport {
    pub dim: usize,
    pub triples: u64,
    pub antisymmetry_failures: u64,
    pub jacobi_failures: u64,
    pub first_failure: Option<String>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry_failures == 0 && self.jacobi_failures == 0
    }
}

impl IntegralAlgebra {
    pub(super) fn from_constants(c: &ChevalleyConstants) -> Self {
        let rs = c.root_system();
        let r = rs.rank();
        let nr = rs.num_roots();
        let dim = r + nr;
        let mut table = vec![Vector::new(); dim * dim];
        let a = rs.cartan_matrix();
        for x in 0..nr {
            let root = rs.root(x);
            for i in 0..r {
                // [H_i, e_α] = ⟨α, α_i^∨⟩ e_α
                let v: i64 = (0..r).map(|j| root.0[j] * a[j][i]).sum();
                if v != 0 {
                    table[i * dim + r + x].push(((r + x) as u32, v));
                    table[(r + x) * dim + i].push(((r + x) as u32, -v));
                }
            }
            for y in 0..nr {
                let cell = &mut table[(r + x) * dim + r + y];
                if y == rs.neg_index(x) {
                    // [e_α, e_{−α}] = α^∨, written over the simple coroots.
                    for (j, cj) in rs.coroot_coords(x).iter().enumerate() {
                        if !num_traits::Zero::is_zero(cj) {
                            assert!(cj.is_integer());
                            cell.push((j as u32, *cj.numer() as i64));
                        }
                    }
                } else if let Some(s) = rs.sum_index(x, y) {
                    cell.push(((r + s) as u32, c.n(x, y)));
                }
            }
        }
        Self { rank: r, dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.table[i * self.dim + j]
    }

    fn bracket_into(&self, i: usize, v: &[(u32, i64)], scale: i64, out: &mut Vec<(u32, i64)>) {
        for &(k, c) in v {
            for &(m, d) in self.bracket_basis(i, k as usize) {
                out.push((m, scale * c * d));
            }
        }
    }

    /// Exhaustive Jacobi and antisymmetry check over all basis triples.
    pub fn jacobi(&self) -> JacobiReport {
        let d = self.dim;
        let mut anti = 0u64;
        let mut first = None;
        for i in 0..d {
            for j in 0..=i {
                let mut sum: Vec<(u32, i64)> = self.bracket_basis(i, j).to_vec();
                sum.extend(self.bracket_basis(j, i).iter().copied());
                if !is_zero_combination(&mut sum) {
                    anti += 1;
                    first.get_or_insert(format!("[x{i}, x{j}] + [x{j}, x{i}] != 0"));
                }
            }
        }
        let (failures, first_jacobi) = (0..d)
            .into_par_iter()
            .map(|i| {
                let mut fails = 0u64;
                let mut first: Option<String> = None;
                let mut acc: Vec<(u32, i64)> = Vec::new();
                for j in i + 1..d {
                    for k in j + 1..d {
                        acc.clear();
                        self.bracket_into(i, self.bracket_basis(j, k), 1, &mut acc);
                        self.bracket_into(j, self.bracket_basis(k, i), 1, &mut acc);
                        self.bracket_into(k, self.bracket_basis(i, j), 1, &mut acc);
                        if !is_zero_combination(&mut acc) {
                            fails += 1;
                            first.get_or_insert(format!("Jacobi fails on (x{i}, x{j}, x{k})"));
                        }
                    }
                }
                (fails, first)
            })
            .reduce(|| (0, None), |a, b| (a.0 + b.0, a.1.or(b.1)));
        let triples = (d as u64) * (d as u64 - 1) * (d as u64 - 2) / 6;
        JacobiReport {
            dim: d,
            triples,
            antisymmetry_failures: anti,
            jacobi_failures: failures,
            first_failure: first.or(first_jacobi),
        }
    }

    /// Killing form `tr(ad x_i ad x_j)` on every pair of basis vectors.
    pub fn killing_matrix(&self) -> Vec<Vec<i64>> {
        let d = self.dim;
        (0..d)
            .into_par_iter()
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut tr = 0i64;
                        for b in 0..d {
                            for &(c, v) in self.bracket_basis(j, b) {
                                for &(m, w) in self.bracket_basis(i, c as usize) {
                                    if m as usize == b {
                                        tr += v * w;
                                    }
                                }
                            }
                        }
                        tr
                    })
                    .collect()
            })
            .collect()
    }

    /// Killing form on the simple coroots predicted from a Killing-dual gram:
    /// `κ(H_i, H_j) = 4 g_ij / (g_ii g_jj)`.
    pub fn predicted_coroot_killing(gram: &[Vec<Q>], i: usize, j: usize) -> Q {
        Q::from_integer(4) * gram[i][j] / (gram[i][i] * gram[j][j])
    }
}

fn is_zero_combination(v: &mut [(u32, i64)]) -> bool {
    v.sort_unstable_by_key(|t| t.0);
    let mut k = 0;
    while k < v.len() {
        let idx = v[k].0;
        let mut s = 0;
        while k < v.len() && v[k].0 == idx {
            s += v[k].1;
            k += 1;
        }
        if s != 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::chevalley::build_chevalley;
    use crate::rootsys::RootSystem;

    fn algebra(t: &str) -> (Arc<RootSystem>, IntegralAlgebra) {
        let rs = Arc::new(RootSystem::new(t.parse().unwrap()));
        let a = build_chevalley(&rs).algebra();
        (rs, a)
    }

    #[test]
    fn jacobi_small_types() {
        for t in ["A1", "A3", "B2", "C3", "D4", "G2", "F4"] {
            let (_, a) = algebra(t);
            let rep = a.jacobi();
            assert!(rep.passed(), "{t}: {rep:?}");
        }
    }

    #[test]
    fn jacobi_detects_a_flipped_sign() {
        let (rs, mut a) = algebra("A2");
        let r = rs.rank();
        let (x, y) = (0, 1);
        let d = a.dim;
        for cell in [&mut a.table[(r + x) * d + r + y]] {
            cell[0].1 = -cell[0].1;
        }
        assert!(!a.jacobi().passed());
    }

    #[test]
    fn killing_trace_matches_dual_gram() {
        // Independent oracle: invert the trace form on the coroots.
        for t in ["A1", "A2", "B3", "G2"] {
            let (rs, a) = algebra(t);
            let k = a.killing_matrix();
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    let pred = IntegralAlgebra::predicted_coroot_killing(rs.gram(), i, j);
                    assert_eq!(Q::from_integer(k[i][j] as i128), pred, "{t}");
                }
            }
        }
    }
}
