//! Chevalley and Weyl bases.
//!
//! [`ChevalleyConstants`] holds the integral structure constants of a
//! Chevalley basis, with signs fixed on extraspecial pairs under the
//! lexicographic order of root coordinates. [`WeylBasis`] rescales it so that
//! the Killing form pairs `e_α` and `e_{−α}` to 1; its constants involve square
//! roots and live in [`Scalar`](crate::scalar::Scalar).

mod integral;
mod verify;
mod weyl_basis;

use std::sync::Arc;

use num_traits::Zero;

pub use integral::{IntegralAlgebra, JacobiReport};
pub use verify::{
    helgason_check, string_identity_check, verify_weyl_basis, verify_weyl_properties, ClauseReport,
    IdentityReport, StringIdentity, WeylReport,
};
pub use weyl_basis::{LieElement, TraceForm, WeylBasis};

use crate::rootsys::RootSystem;
use crate::scalar::{qi, Q};

/// Integral structure constants `[e_α, e_β] = N_{α,β} e_{α+β}`.
#[derive(Debug)]
pub struct ChevalleyConstants {
    rs: Arc<RootSystem>,
    n: Vec<i32>,
}

/// Builds a Chevalley basis.
///
/// Positive sums `ξ` are processed by height. The lexicographically smallest
/// special pair `(α, β)` of `ξ` gets `N = p + 1`, where `p` is maximal with
/// `β − pα` a root; every other constant follows from antisymmetry, the
/// three-root relation and the four-root relation applied to
/// `(α, β, −α', −β')` with `(α', β')` extraspecial.
pub fn build_chevalley(rs: &Arc<RootSystem>) -> ChevalleyConstants {
    let nr = rs.num_roots();
    let np = rs.num_positive();
    let mut b = Builder { rs, table: vec![0; nr * nr], known: vec![false; nr * nr] };

    let mut by_sum: Vec<Vec<(usize, usize)>> = vec![Vec::new(); np];
    for a in 0..np {
        for c in 0..np {
            if let Some(s) = rs.sum_index(a, c) {
                if rs.root(a) < rs.root(c) {
                    by_sum[s].push((a, c));
                }
            }
        }
    }
    // Positive roots are stored by increasing height.
    for pairs in by_sum.iter_mut() {
        if pairs.is_empty() {
            continue;
        }
        pairs.sort_by(|x, y| rs.root(x.0).cmp(rs.root(y.0)));
        let (a0, b0) = pairs[0];
        let p = rs.string_indices(b0, a0).0;
        b.set(a0, b0, (p + 1) as i32);
        for &(a, c) in &pairs[1..] {
            let v = b.four_root(a, c, a0, b0);
            b.set(a, c, v);
        }
    }
    for x in 0..nr {
        for y in 0..nr {
            if rs.sum_index(x, y).is_some() {
                let v = b.get(x, y);
                b.table[x * nr + y] = v;
            }
        }
    }
    ChevalleyConstants { rs: Arc::clone(rs), n: b.table }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    table: Vec<i32>,
    known: Vec<bool>,
}

impl Builder<'_> {
    fn set(&mut self, a: usize, c: usize, v: i32) {
        let nr = self.rs.num_roots();
        self.table[a * nr + c] = v;
        self.table[c * nr + a] = -v;
        self.known[a * nr + c] = true;
        self.known[c * nr + a] = true;
    }

    /// Constant for any pair whose sum is a root, using already-known
    /// positive constants of smaller height.
    fn get(&self, a: usize, c: usize) -> i32 {
        let rs = self.rs;
        let nr = rs.num_roots();
        if rs.sum_index(a, c).is_none() {
            return 0;
        }
        if self.known[a * nr + c] {
            return self.table[a * nr + c];
        }
        let (pa, pc) = (rs.is_positive_index(a), rs.is_positive_index(c));
        match (pa, pc) {
            (true, true) => panic!("positive constant requested before it was fixed"),
            (false, false) => -self.get(rs.neg_index(a), rs.neg_index(c)),
            (false, true) => -self.get(c, a),
            (true, false) => {
                let s = rs.sum_index(a, c).unwrap();
                let ratio = if rs.is_positive_index(s) {
                    // (a, c, −s) sums to zero.
                    -rs.norm(s) / rs.norm(a) * qi(self.get(rs.neg_index(c), s) as i128)
                } else {
                    rs.norm(s) / rs.norm(c) * qi(self.get(rs.neg_index(s), a) as i128)
                };
                to_int(ratio)
            }
        }
    }

    fn four_root(&self, a: usize, c: usize, a0: usize, b0: usize) -> i32 {
        let rs = self.rs;
        let s = rs.sum_index(a, c).unwrap();
        let na0 = rs.neg_index(a0);
        let nb0 = rs.neg_index(b0);
        let mut total = Q::zero();
        // N_{β,−α'} N_{α,−β'} / |β−α'|²
        if let Some(d) = rs.sum_index(c, na0) {
            let v = self.get(c, na0) as i128 * self.get(a, nb0) as i128;
            if v != 0 {
                total += qi(v) / rs.norm(d);
            }
        }
        // N_{−α',α} N_{β,−β'} / |α−α'|²
        if let Some(d) = rs.sum_index(a, na0) {
            let v = self.get(na0, a) as i128 * self.get(c, nb0) as i128;
            if v != 0 {
                total += qi(v) / rs.norm(d);
            }
        }
        let n0 = self.get(a0, b0);
        to_int(total * rs.norm(s) / qi(n0 as i128))
    }
}

fn to_int(x: Q) -> i32 {
    assert!(x.is_integer(), "non-integral Chevalley constant {x}");
    *x.numer() as i32
}

impl ChevalleyConstants {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// `N_{α,β}`, zero when `α + β` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.rs.num_roots() + b] as i64
    }

    /// Adjoint structure table in the basis `(H_1..H_r, e_α...)`.
    pub fn algebra(&self) -> IntegralAlgebra {
        IntegralAlgebra::from_constants(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn consts(t: &str) -> ChevalleyConstants {
        build_chevalley(&Arc::new(RootSystem::new(t.parse().unwrap())))
    }

    #[test]
    fn a1_has_no_constants() {
        let c = consts("A1");
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(c.n(a, b), 0);
            }
        }
    }

    #[test]
    fn magnitudes_follow_strings() {
        for t in ["A2", "B3", "C3", "G2", "F4", "D4"] {
            let c = consts(t);
            let rs = c.root_system();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    if rs.sum_index(a, b).is_some() {
                        let (p, _) = rs.string_indices(a, b);
                        assert_eq!(c.n(a, b).abs(), p + 1, "{t} {} {}", rs.root(a), rs.root(b));
                        assert_eq!(c.n(rs.neg_index(a), rs.neg_index(b)), -c.n(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn g2_reaches_two_and_three() {
        let c = consts("G2");
        let rs = c.root_system();
        let a = rs.index_of(&Root(vec![1, 0])).unwrap();
        let ab = rs.index_of(&Root(vec![1, 1])).unwrap();
        let a2b = rs.index_of(&Root(vec![2, 1])).unwrap();
        assert_eq!(c.n(a, ab).abs(), 2);
        assert_eq!(c.n(a, a2b).abs(), 3);
    }
}
