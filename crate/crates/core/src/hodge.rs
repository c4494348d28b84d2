//! Hodge data as gradings of a root system.
//!
//! A marking assigns a nonnegative degree to each simple root. The degree of
//! a root is the marked sum of its coefficients. Degree-0 roots form the Levi
//! part, odd-degree roots are noncompact, and the positive roots of degree 1
//! are the horizontal roots.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{subsystem_signature, CartanType, Root, RootSystem};

/// JSON form of a datum: `{"type": "A3", "marking": [0,1,0]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumSpec {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub marking: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct HodgeDatum {
    rs: Arc<RootSystem>,
    marking: Vec<u32>,
    degree: Vec<i64>,
    horizontal: Vec<usize>,
    phi: Vec<usize>,
}

/// Horizontal roots sharing one anchor, i.e. congruent modulo Levi roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Index of the anchoring simple root (marking 1).
    pub anchor: usize,
    /// Root indices, in the total order of the horizontal roots.
    pub roots: Vec<usize>,
}

/// Root sets of the parabolic subalgebra `q = l ⊕ n` and its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicData {
    /// Degree-0 roots, both signs.
    pub levi: Vec<usize>,
    /// Negative-degree roots.
    pub nilradical: Vec<usize>,
    /// Positive-degree roots.
    pub complement: Vec<usize>,
}

impl HodgeDatum {
    pub fn from_marking(rs: Arc<RootSystem>, marking: &[i64]) -> Result<Self> {
        if marking.len() != rs.rank() {
            return Err(Error::MarkingLength { expected: rs.rank(), got: marking.len() });
        }
        if let Some((node, &value)) = marking.iter().enumerate().find(|(_, &m)| m < 0) {
            return Err(Error::NegativeMarking { node: node + 1, value });
        }
        let marking: Vec<u32> = marking.iter().map(|&m| m as u32).collect();
        let degree: Vec<i64> = rs
            .roots()
            .iter()
            .map(|a| a.0.iter().zip(&marking).map(|(c, &m)| c * m as i64).sum())
            .collect();
        let mut horizontal: Vec<usize> = (0..rs.num_positive()).filter(|&i| degree[i] == 1).collect();
        horizontal.sort_by(|&a, &b| rs.root(a).cmp(rs.root(b)));
        let phi = (0..rs.rank()).filter(|&i| marking[i] == 0).collect();
        let hd = Self { rs, marking, degree, horizontal, phi };
        hd.assert_additive();
        Ok(hd)
    }

    pub fn from_spec(spec: &DatumSpec) -> Result<Self> {
        let t: CartanType = spec.cartan_type.parse()?;
        Self::from_marking(Arc::new(RootSystem::new(t)), &spec.marking)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: DatumSpec = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        Self::from_spec(&spec)
    }

    fn assert_additive(&self) {
        let rs = &self.rs;
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if let Some(s) = rs.sum_index(a, b) {
                    assert_eq!(self.degree[s], self.degree[a] + self.degree[b]);
                }
            }
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn marking(&self) -> &[u32] {
        &self.marking
    }

    pub fn spec(&self) -> DatumSpec {
        DatumSpec {
            cartan_type: self.rs.cartan_type().to_string(),
            marking: self.marking.iter().map(|&m| m as i64).collect(),
        }
    }

    pub fn label(&self) -> String {
        let m: Vec<String> = self.marking.iter().map(|m| m.to_string()).collect();
        format!("{}({})", self.rs.cartan_type(), m.join(","))
    }

    pub fn degree(&self, a: usize) -> i64 {
        self.degree[a]
    }

    /// `+1` on noncompact (odd) roots, `−1` on compact (even) roots.
    pub fn epsilon(&self, a: usize) -> i64 {
        if self.degree[a] % 2 != 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_compact(&self, a: usize) -> bool {
        self.degree[a] % 2 == 0
    }

    /// A zero marking: the grading is trivial and nothing is horizontal.
    pub fn is_trivial(&self) -> bool {
        self.marking.iter().all(|&m| m == 0)
    }

    /// Horizontal roots in lexicographic order of coordinates.
    pub fn horizontal(&self) -> &[usize] {
        &self.horizontal
    }

    /// Position of a root in [`horizontal`](Self::horizontal).
    pub fn horizontal_position(&self, a: usize) -> Option<usize> {
        self.horizontal.iter().position(|&h| h == a)
    }

    pub fn require_horizontal(&self, a: &Root) -> Result<usize> {
        let i = self.rs.require(a).map_err(|_| Error::NotHorizontal(a.to_string()))?;
        if self.rs.is_positive_index(i) && self.degree[i] == 1 {
            Ok(i)
        } else {
            Err(Error::NotHorizontal(a.to_string()))
        }
    }

    /// Simple roots of marking zero.
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// Positive roots of degree zero, `⟨Φ⟩`.
    pub fn levi_positive(&self) -> Vec<usize> {
        (0..self.rs.num_positive()).filter(|&i| self.degree[i] == 0).collect()
    }

    /// Positive compact roots (even degree).
    pub fn compact_positive(&self) -> Vec<usize> {
        (0..self.rs.num_positive()).filter(|&i| self.is_compact(i)).collect()
    }

    /// True iff every degree lies in `{−1, 0, 1}`.
    pub fn is_hermitian_grading(&self) -> bool {
        self.degree.iter().all(|d| d.abs() <= 1)
    }

    pub fn max_degree(&self) -> i64 {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    /// Partition of the horizontal roots by anchor.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = Vec::new();
        for anchor in 0..self.rs.rank() {
            if self.marking[anchor] != 1 {
                continue;
            }
            let roots: Vec<usize> = self.horizontal.iter().copied().filter(|&h| self.rs.root(h).0[anchor] == 1).collect();
            if !roots.is_empty() {
                out.push(Block { anchor, roots });
            }
        }
        let covered: usize = out.iter().map(|b| b.roots.len()).sum();
        assert_eq!(covered, self.horizontal.len(), "blocks do not partition the horizontal roots");
        out
    }

    pub fn parabolic_data(&self) -> ParabolicData {
        let n = self.rs.num_roots();
        ParabolicData {
            levi: (0..n).filter(|&i| self.degree[i] == 0).collect(),
            nilradical: (0..n).filter(|&i| self.degree[i] < 0).collect(),
            complement: (0..n).filter(|&i| self.degree[i] > 0).collect(),
        }
    }

    /// Signature `(rank, positive roots)` of the irreducible factors of the
    /// compact subsystem and the dimension of the central torus.
    pub fn isotropy_signature(&self) -> (Vec<(usize, usize)>, usize) {
        let sig = subsystem_signature(&self.rs, &self.compact_positive());
        let r: usize = sig.iter().map(|s| s.0).sum();
        (sig, self.rs.rank() - r)
    }

    /// Same as [`isotropy_signature`](Self::isotropy_signature) for the Levi.
    pub fn levi_signature(&self) -> (Vec<(usize, usize)>, usize) {
        let sig = subsystem_signature(&self.rs, &self.levi_positive());
        let r: usize = sig.iter().map(|s| s.0).sum();
        (sig, self.rs.rank() - r)
    }
}

/// Every nonzero 0/1 marking of a type, in binary order.
pub fn binary_markings(rank: usize) -> Vec<Vec<i64>> {
    (1u32..(1 << rank)).map(|bits| (0..rank).map(|i| ((bits >> i) & 1) as i64).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hd(t: &str, m: &[i64]) -> HodgeDatum {
        HodgeDatum::from_spec(&DatumSpec { cartan_type: t.into(), marking: m.to_vec() }).unwrap()
    }

    fn names(h: &HodgeDatum, v: &[usize]) -> Vec<String> {
        v.iter().map(|&i| h.root_system().root(i).to_string()).collect()
    }

    #[test]
    fn a3_hermitian() {
        let h = hd("A3", &[0, 1, 0]);
        assert_eq!(names(&h, h.horizontal()), ["[0,1,0]", "[0,1,1]", "[1,1,0]", "[1,1,1]"]);
        assert_eq!(h.phi(), &[0, 2]);
        assert!(h.is_hermitian_grading());
        let b = h.blocks();
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].anchor, b[0].roots.len()), (1, 4));
        let p = h.parabolic_data();
        assert_eq!(names(&h, &p.levi), ["[0,0,1]", "[1,0,0]", "[0,0,-1]", "[-1,0,0]"]);
    }

    #[test]
    fn c2_has_degree_two() {
        let h = hd("C2", &[1, 0]);
        assert_eq!(names(&h, h.horizontal()), ["[1,0]", "[1,1]"]);
        assert!(!h.is_hermitian_grading());
        assert_eq!(h.max_degree(), 2);
    }

    #[test]
    fn blocks_and_degenerate_cases() {
        let h = hd("A3", &[1, 0, 1]);
        let anchors: Vec<usize> = h.blocks().iter().map(|b| b.anchor).collect();
        assert_eq!(anchors, [0, 2]);
        let z = hd("A3", &[0, 0, 0]);
        assert!(z.is_trivial() && z.is_hermitian_grading() && z.horizontal().is_empty());
        assert_eq!(z.parabolic_data().levi.len(), 12);
        let borel = hd("A3", &[1, 1, 1]);
        assert!(borel.parabolic_data().levi.is_empty());
        assert_eq!(
            HodgeDatum::from_spec(&DatumSpec { cartan_type: "A2".into(), marking: vec![1, -1] }).unwrap_err(),
            Error::NegativeMarking { node: 2, value: -1 }
        );
        assert!(HodgeDatum::from_json(r#"{"type":"A3","marking":[0,1,0]}"#).is_ok());
    }

    #[test]
    fn epsilon_sign_rule() {
        let h = hd("G2", &[0, 1]);
        let rs = h.root_system();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if let Some(s) = rs.sum_index(a, b) {
                    assert_eq!(h.epsilon(s), -h.epsilon(a) * h.epsilon(b));
                }
            }
        }
    }
}
