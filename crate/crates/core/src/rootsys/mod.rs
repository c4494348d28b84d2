//! Root systems of the simple complex Lie algebras.
//!
//! Roots are integer vectors over the simple roots (Bourbaki numbering). The
//! full root set is generated by reflection closure from the Cartan matrix.
//! Inner products default to the form dual to the Killing form; the Bourbaki
//! scaling (long roots of squared length 2) is available through
//! [`Normalization`].

mod cartan;
mod weyl;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

pub use cartan::{CartanType, Series};
pub use weyl::{invariant_degrees, order_of_subdiagram, weyl_group_order, WeylData};

use crate::error::{Error, Result};
use crate::scalar::{fmt_q, qi, Q};

/// A vector of simple-root coefficients. Used both for roots and for
/// arbitrary elements of the root lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Root {
    /// Compact coefficient string, e.g. `[0,1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Scaling of the invariant inner product on the dual Cartan subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Normalization {
    /// Dual of the Killing form.
    #[default]
    Killing,
    /// Long roots have squared length 2.
    Bourbaki,
}

/// A frozen root system.
///
/// Root indices: positive roots occupy `0..n_pos` sorted by height and then
/// lexicographically; the negative of root `i` has index `i + n_pos`.
#[derive(Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    bourbaki: Vec<Vec<Q>>,
    gram: Vec<Vec<Q>>,
    killing_scale: Q,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Root, usize>,
    sum_table: Vec<u32>,
    norms: Vec<Q>,
}

const NO_ROOT: u32 = u32::MAX;

impl RootSystem {
    pub fn new(ty: CartanType) -> Self {
        let cartan = ty.cartan_matrix();
        let bourbaki = ty.bourbaki_gram();
        let r = ty.rank;

        let positives = reflection_closure(&cartan);
        let mut pos: Vec<Root> = positives.into_iter().collect();
        pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(Root::neg));
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();

        let bform = |a: &Root, b: &Root| -> Q {
            let mut s = Q::zero();
            for i in 0..r {
                if a.0[i] == 0 {
                    continue;
                }
                for j in 0..r {
                    if b.0[j] != 0 {
                        s += bourbaki[i][j] * qi((a.0[i] * b.0[j]) as i128);
                    }
                }
            }
            s
        };
        // Killing form restricted to h: κ(t, t') = Σ_α α(t)α(t'). Its dual on
        // h* is Bourbaki / c with c = Σ_α B(α_1, α)² / B(α_1, α_1).
        let a1 = Root::simple(r, 0);
        let mut c = Q::zero();
        for a in &roots {
            let v = bform(&a1, a);
            c += v * v;
        }
        c /= bourbaki[0][0];
        let gram: Vec<Vec<Q>> = bourbaki.iter().map(|row| row.iter().map(|x| x / c).collect()).collect();
        let norms: Vec<Q> = roots.iter().map(|a| bform(a, a) / c).collect();

        let nr = roots.len();
        let mut sum_table = vec![NO_ROOT; nr * nr];
        for i in 0..nr {
            for j in 0..nr {
                if let Some(&k) = index.get(&roots[i].add(&roots[j])) {
                    sum_table[i * nr + j] = k as u32;
                }
            }
        }

        Self { ty, cartan, bourbaki, gram, killing_scale: c, roots, n_pos, index, sum_table, norms }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the simple roots in the Killing-dual normalization.
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn gram_in(&self, norm: Normalization) -> &[Vec<Q>] {
        match norm {
            Normalization::Killing => &self.gram,
            Normalization::Bourbaki => &self.bourbaki,
        }
    }

    /// Ratio Bourbaki / Killing-dual.
    pub fn killing_scale(&self) -> Q {
        self.killing_scale
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| Root::simple(self.rank(), i)).collect()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, a: &Root) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn require(&self, a: &Root) -> Result<usize> {
        self.index_of(a).ok_or_else(|| Error::NotARoot(a.to_string()))
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// Index of `roots[i] + roots[j]` when that sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sum_table[i * self.roots.len() + j];
        (k != NO_ROOT).then_some(k as usize)
    }

    /// Killing-dual squared length of root `i`.
    pub fn norm(&self, i: usize) -> Q {
        self.norms[i]
    }

    /// Killing-dual inner product of two lattice vectors.
    pub fn inner_product(&self, a: &Root, b: &Root) -> Q {
        self.inner_product_in(Normalization::Killing, a, b)
    }

    pub fn inner_product_in(&self, norm: Normalization, a: &Root, b: &Root) -> Q {
        let g = self.gram_in(norm);
        let mut s = Q::zero();
        for i in 0..self.rank() {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                if b.0[j] != 0 {
                    s += g[i][j] * qi((a.0[i] * b.0[j]) as i128);
                }
            }
        }
        s
    }

    /// Inner product of root indices.
    pub fn ip(&self, i: usize, j: usize) -> Q {
        self.inner_product(&self.roots[i], &self.roots[j])
    }

    /// `⟨a, b^∨⟩ = 2⟨a,b⟩/⟨b,b⟩`.
    pub fn cartan_integer(&self, a: &Root, b: &Root) -> i64 {
        let v = self.inner_product(a, b) * qi(2) / self.inner_product(b, b);
        assert!(v.is_integer(), "non-integral Cartan integer");
        *v.numer() as i64
    }

    /// Reflection `s_b(a)`.
    pub fn reflect(&self, a: &Root, b: &Root) -> Root {
        a.sub(&b.scaled(self.cartan_integer(a, b)))
    }

    /// Largest `p, q ≥ 0` with `a − p·b` and `a + q·b` roots.
    pub fn root_string(&self, a: &Root, b: &Root) -> Result<(i64, i64)> {
        let ia = self.require(a)?;
        let ib = self.require(b)?;
        Ok(self.string_indices(ia, ib))
    }

    /// `root_string` on indices; requires `b ≠ ±a`.
    pub fn string_indices(&self, ia: usize, ib: usize) -> (i64, i64) {
        assert!(ia != ib && ia != self.neg_index(ib), "string along a proportional root");
        let nb = self.neg_index(ib);
        let walk = |step: usize| {
            let mut n = 0;
            let mut cur = ia;
            while let Some(k) = self.sum_index(cur, step) {
                n += 1;
                cur = k;
            }
            n
        };
        (walk(nb), walk(ib))
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.n_pos - 1]
    }

    /// Squared-length classes present, ascending.
    pub fn root_lengths(&self) -> Vec<Q> {
        let mut v: Vec<Q> = self.norms[..self.n_pos].to_vec();
        v.sort();
        v.dedup();
        v
    }

    /// Pretty name of a root, e.g. `α1+2α2`.
    pub fn root_name(&self, a: &Root) -> String {
        let mut s = String::new();
        let neg = !a.is_positive() && !a.is_zero();
        let a = if neg { a.neg() } else { a.clone() };
        for (i, &c) in a.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c != 1 {
                s.push_str(&c.to_string());
            }
            s.push_str(&format!("α{}", i + 1));
        }
        if neg {
            format!("-({s})")
        } else {
            s
        }
    }

    pub fn fmt_norm(&self, i: usize) -> String {
        fmt_q(&self.norms[i])
    }
}

/// Positive roots by closure of the simple roots under simple reflections.
fn reflection_closure(cartan: &[Vec<i64>]) -> HashSet<Root> {
    let r = cartan.len();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..r {
        let a = Root::simple(r, i);
        seen.insert(a.clone());
        queue.push_back(a);
    }
    while let Some(a) = queue.pop_front() {
        for j in 0..r {
            // ⟨a, α_j^∨⟩ = Σ_i a_i A[i][j]
            let pairing: i64 = (0..r).map(|i| a.0[i] * cartan[i][j]).sum();
            let mut b = a.clone();
            b.0[j] -= pairing;
            if b.is_positive() && !seen.contains(&b) {
                seen.insert(b.clone());
                queue.push_back(b);
            }
        }
    }
    seen
}

/// Connected components of the Dynkin subdiagram on `nodes`.
pub fn diagram_components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut done = vec![false; cartan.len()];
    for &start in nodes {
        if done[start] {
            continue;
        }
        let mut comp = vec![start];
        done[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in nodes {
                if !done[j] && cartan[i][j] != 0 {
                    done[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

/// An irreducible component of a closed subsystem of positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub series: Series,
    pub rank: usize,
    /// Simple roots of the component, as ambient root indices.
    pub simple: Vec<usize>,
    pub positive: Vec<usize>,
}

impl Component {
    /// Cartan matrix on [`simple`](Self::simple), in the ambient order.
    pub fn cartan_matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let s = &self.simple;
        s.iter()
            .map(|&i| s.iter().map(|&j| to_int(qi(2) * rs.ip(i, j) / rs.norm(j))).collect())
            .collect()
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.series, self.rank)
    }
}

fn to_int(x: Q) -> i64 {
    assert!(x.is_integer());
    *x.numer() as i64
}

/// Irreducible components of a closed set of positive roots (a Levi or an
/// isotropy subsystem), largest first. Components are classes of the
/// "not orthogonal" relation; the type is read from rank, root count and
/// the number of long roots.
pub fn subsystem_components(rs: &RootSystem, positive: &[usize]) -> Vec<Component> {
    let n = positive.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX && !rs.ip(positive[i], positive[j]).is_zero() {
                    comp[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    let set: HashSet<usize> = positive.iter().copied().collect();
    let mut out = Vec::new();
    for c in 0..next {
        let members: Vec<usize> = (0..n).filter(|&i| comp[i] == c).map(|i| positive[i]).collect();
        // Simple roots: members that are not a member plus a positive root of the set.
        let simple: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&a| {
                !members.iter().any(|&b| {
                    let d = rs.root(a).sub(rs.root(b));
                    rs.index_of(&d).is_some_and(|k| set.contains(&k))
                })
            })
            .collect();
        let rank = simple.len();
        let np = members.len();
        let longest = members.iter().map(|&a| rs.norm(a)).max().unwrap();
        let long = members.iter().filter(|&&a| rs.norm(a) == longest).count();
        let single = long == np;
        let series = if np == rank * (rank + 1) / 2 && single {
            Series::A
        } else if np == rank * rank && !single {
            if rank > 2 && long == rank {
                Series::C
            } else {
                Series::B
            }
        } else if single && rank >= 4 && np == rank * (rank - 1) {
            Series::D
        } else {
            match (rank, np) {
                (6, 36) | (7, 63) | (8, 120) => Series::E,
                (4, 24) => Series::F,
                (2, 6) => Series::G,
                _ => panic!("unrecognised component of rank {rank} with {np} positive roots"),
            }
        };
        out.push(Component { series, rank, simple, positive: members });
    }
    out.sort_by(|a, b| (b.rank, b.positive.len()).cmp(&(a.rank, a.positive.len())));
    out
}

/// Rank and positive-root count of each irreducible component, largest first.
pub fn subsystem_signature(rs: &RootSystem, positive: &[usize]) -> Vec<(usize, usize)> {
    subsystem_components(rs, positive).iter().map(|c| (c.rank, c.positive.len())).collect()
}

/// Name of an irreducible component from its rank and positive-root count.
/// `B` and `C` share counts; the name `B` is used for both.
pub fn component_name(rank: usize, n_pos: usize) -> String {
    let name = if n_pos == rank * (rank + 1) / 2 {
        "A"
    } else if n_pos == rank * rank {
        "B"
    } else if rank >= 4 && n_pos == rank * (rank - 1) {
        "D"
    } else {
        match (rank, n_pos) {
            (6, 36) | (7, 63) | (8, 120) => "E",
            (4, 24) => "F",
            (2, 6) => "G",
            _ => "?",
        }
    };
    format!("{name}{rank}")
}

impl RootSystem {
    /// Sum of all roots; zero for any root system.
    pub fn root_sum(&self) -> Root {
        self.roots.iter().fold(Root(vec![0; self.rank()]), |acc, a| acc.add(a))
    }

    /// Coroot `a^∨` written over the simple coroots.
    pub fn coroot_coords(&self, i: usize) -> Vec<Q> {
        let a = &self.roots[i];
        let na = self.norms[i];
        (0..self.rank())
            .map(|j| qi(a.0[j] as i128) * self.gram[j][j] / na)
            .collect()
    }

    /// True iff `1/⟨a,a⟩` is the same for every root (simply laced).
    pub fn single_length(&self) -> bool {
        self.root_lengths().len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn small_systems() {
        let a1 = rs("A1");
        assert_eq!(a1.num_roots(), 2);
        assert_eq!(a1.norm(0), q(1, 2));
        let a2 = rs("A2");
        let pos: Vec<String> = a2.positive_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(pos, ["[0,1]", "[1,0]", "[1,1]"]);
        assert_eq!(a2.norm(0), q(1, 3));
        assert_eq!(a2.gram()[0][1], q(-1, 6));
        let g2 = rs("G2");
        assert_eq!(g2.num_roots(), 12);
        let l = g2.root_lengths();
        assert_eq!(l.len(), 2);
        assert_eq!(l[1] / l[0], qi(3));
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [("A8", 36), ("B5", 25), ("C4", 16), ("D6", 30), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)] {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
    }

    #[test]
    fn strings() {
        let a2 = rs("A2");
        let (a1, a2r) = (Root(vec![1, 0]), Root(vec![0, 1]));
        assert_eq!(a2.root_string(&a1, &a2r).unwrap(), (0, 1));
        let g2 = rs("G2");
        let (short, long) = (Root(vec![1, 0]), Root(vec![0, 1]));
        assert_eq!(g2.root_string(&long, &short).unwrap(), (0, 3));
        assert!(g2.root_string(&Root(vec![5, 0]), &short).is_err());
        let b2 = rs("B2");
        let (x, y) = (Root(vec![1, 0]), Root(vec![1, 2]));
        assert!(b2.ip(b2.index_of(&x).unwrap(), b2.index_of(&y).unwrap()).is_zero());
        assert_eq!(b2.root_string(&x, &y).unwrap(), (0, 0));
    }

    #[test]
    fn signatures() {
        let e8 = rs("E8");
        let all: Vec<usize> = (0..e8.num_positive()).collect();
        assert_eq!(subsystem_signature(&e8, &all), vec![(8, 120)]);
        let a3 = rs("A3");
        // roots of degree 0 for marking (0,1,0): α1, α3
        let levi = [a3.index_of(&Root(vec![1, 0, 0])).unwrap(), a3.index_of(&Root(vec![0, 0, 1])).unwrap()];
        assert_eq!(subsystem_signature(&a3, &levi), vec![(1, 1), (1, 1)]);
        assert_eq!(component_name(4, 24), "F4");
        assert_eq!(component_name(5, 20), "D5");
    }
}
