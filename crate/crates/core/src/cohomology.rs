//! Cohomology of compact homogeneous spaces `U/V` with `rk U = rk V`.
//!
//! Poincaré polynomials come from the Hirsch quotient of invariant degrees.
//! Two independent oracles back it up: Weyl group orders computed from
//! Dynkin diagrams (for `P(1)`), and the dimension of `W_V`-invariant linear
//! and quadratic forms on the Cartan subalgebra (for `h²` and `h⁴`).

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hodge::HodgeDatum;
use crate::rootsys::{
    invariant_degrees, order_of_subdiagram, subsystem_components, weyl_group_order, CartanType, Component,
    RootSystem, Series,
};
use crate::scalar::{fmt_q, qi, Q};

/// Betti numbers indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincarePolynomial {
    pub coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn betti(&self, k: usize) -> u64 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn at_one(&self) -> u128 {
        self.coefficients.iter().map(|&c| c as u128).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    pub fn odd_vanishes(&self) -> bool {
        self.coefficients.iter().skip(1).step_by(2).all(|&c| c == 0)
    }
}

impl Serialize for PoincarePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coefficients.serialize(s)
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `Π(1 − t^{s_i}) / Π(1 − t^{r_j})`, divided exactly over the integers.
pub fn hirsch_polynomial(s: &[u32], r: &[u32]) -> Result<PoincarePolynomial> {
    if s.len() != r.len() {
        return Err(Error::NonPolynomialQuotient(format!("{} numerator factors, {} denominator factors", s.len(), r.len())));
    }
    if s.iter().chain(r).any(|&d| d == 0) {
        return Err(Error::NonPolynomialQuotient("zero degree".into()));
    }
    let mut p: Vec<i128> = vec![1];
    for &d in s {
        let d = d as usize;
        let mut next = vec![0i128; p.len() + d];
        for (k, &c) in p.iter().enumerate() {
            next[k] += c;
            next[k + d] -= c;
        }
        p = next;
    }
    for &d in r {
        let d = d as usize;
        // p = (1 − t^d)·out  ⇔  out[k] = p[k] + out[k − d]
        if p.len() <= d {
            return Err(Error::NonPolynomialQuotient(format!("degree too small to divide by 1 − t^{d}")));
        }
        let m = p.len() - d;
        let mut out = vec![0i128; m];
        for k in 0..m {
            out[k] = p[k] + if k >= d { out[k - d] } else { 0 };
        }
        for k in m..p.len() {
            let back = if k >= d && k - d < m { out[k - d] } else { 0 };
            if p[k] + back != 0 {
                return Err(Error::NonPolynomialQuotient(format!("nonzero remainder dividing by 1 − t^{d}")));
            }
        }
        p = out;
    }
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    if let Some((k, c)) = p.iter().enumerate().find(|(_, &c)| c < 0) {
        return Err(Error::NonPolynomialQuotient(format!("negative coefficient {c} in degree {k}")));
    }
    Ok(PoincarePolynomial { coefficients: p.into_iter().map(|c| c as u64).collect() })
}

/// Semisimple factors and central torus of a compact connected group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KType {
    pub factors: Vec<(Series, usize)>,
    pub torus: usize,
}

impl KType {
    pub fn new(mut factors: Vec<(Series, usize)>, torus: usize) -> Self {
        for f in factors.iter_mut() {
            *f = canonical(*f);
        }
        factors.sort_by(|a, b| (b.1, b.0 as u8).cmp(&(a.1, a.0 as u8)));
        Self { factors, torus }
    }

    pub fn from_components(comps: &[Component], torus: usize) -> Self {
        Self::new(comps.iter().map(|c| (c.series, c.rank)).collect(), torus)
    }

    /// `SO(n)` as a product of simple factors and a torus.
    pub fn so(n: usize) -> Self {
        match n {
            0 | 1 => Self::new(vec![], 0),
            2 => Self::new(vec![], 1),
            3 => Self::new(vec![(Series::A, 1)], 0),
            4 => Self::new(vec![(Series::A, 1), (Series::A, 1)], 0),
            5 => Self::new(vec![(Series::B, 2)], 0),
            6 => Self::new(vec![(Series::A, 3)], 0),
            _ if n % 2 == 1 => Self::new(vec![(Series::B, n / 2)], 0),
            _ => Self::new(vec![(Series::D, n / 2)], 0),
        }
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().copied());
        Self::new(f, self.torus + other.torus)
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum::<usize>() + self.torus
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|&(s, r)| simple_dim(s, r)).sum::<usize>() + self.torus
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.torus == 0
    }

    /// Cohomological degrees of the generators of `H•(BK)`.
    pub fn cohomological_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = vec![2; self.torus];
        for &(s, r) in &self.factors {
            let t = CartanType::new(s, r).expect("canonical factor");
            d.extend(invariant_degrees(t).expect("valid type").cohomological_degrees());
        }
        d.sort();
        d
    }
}

impl fmt::Display for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|(s, r)| format!("{s:?}{r}")).collect();
        if self.torus > 0 {
            parts.push(format!("T{}", self.torus));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        f.write_str(&parts.join("+"))
    }
}

impl Serialize for KType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for KType {
    type Err = Error;

    /// Parses `"A1+A1+T1"`; `"1"` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::new(vec![], 0));
        }
        let mut factors = Vec::new();
        let mut torus = 0;
        for part in s.split('+').map(str::trim) {
            if let Some(t) = part.strip_prefix('T') {
                torus += t.parse::<usize>().map_err(|_| Error::InvalidType(part.into()))?;
                continue;
            }
            let t: CartanType = part
                .parse()
                .or_else(|_| match part {
                    "B1" | "C1" => "A1".parse(),
                    "D3" => "A3".parse(),
                    _ => Err(Error::InvalidType(part.into())),
                })?;
            factors.push((t.series, t.rank));
        }
        Ok(Self::new(factors, torus))
    }
}

/// Identifies isomorphic small types: `C2 = B2`, `D3 = A3`, `B1 = C1 = A1`.
fn canonical(f: (Series, usize)) -> (Series, usize) {
    match f {
        (Series::C, 2) => (Series::B, 2),
        (Series::B | Series::C, 1) => (Series::A, 1),
        (Series::D, 3) => (Series::A, 3),
        other => other,
    }
}

fn simple_dim(s: Series, r: usize) -> usize {
    let np = match s {
        Series::A => r * (r + 1) / 2,
        Series::B | Series::C => r * r,
        Series::D => r * (r - 1),
        Series::E => [36, 63, 120][r - 6],
        Series::F => 24,
        Series::G => 6,
    };
    r + 2 * np
}

/// Cohomological degrees of `H•(BV)` for the Levi factor of a datum.
pub fn levi_degrees(hd: &HodgeDatum) -> Vec<u32> {
    let rs = hd.root_system();
    let comps = subsystem_components(rs, &hd.levi_positive());
    let r: usize = comps.iter().map(|c| c.rank).sum();
    KType::from_components(&comps, rs.rank() - r).cohomological_degrees()
}

/// Poincaré polynomial of the flag manifold `U/V`, `V` the compact Levi.
pub fn flag_poincare(hd: &HodgeDatum) -> Result<PoincarePolynomial> {
    let s = invariant_degrees(hd.root_system().cartan_type())?.cohomological_degrees();
    hirsch_polynomial(&s, &levi_degrees(hd))
}

/// `2·#(Δ₊ ∖ ⟨Φ⟩)`, the real dimension of the flag manifold.
pub fn flag_dimension(hd: &HodgeDatum) -> usize {
    2 * (hd.root_system().num_positive() - hd.levi_positive().len())
}

/// `|W_U| / |W_V|` for the Levi of a datum, from Dynkin-diagram orders.
pub fn flag_euler_characteristic(hd: &HodgeDatum) -> u128 {
    let rs = hd.root_system();
    weyl_group_order(rs.cartan_type()) / order_of_subdiagram(rs.cartan_matrix(), hd.phi())
}

/// An irreducible symmetric pair `U/K` of compact type, named after the
/// noncompact real form whose compact dual it is.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricPair {
    pub name: String,
    /// Cartan's label (AI, AIII, BDI, ...).
    pub family: String,
    pub u_type: CartanType,
    /// Equal-rank pairs: the grading whose even part is `k_C`.
    pub marking: Option<Vec<i64>>,
    /// `K` as listed; for equal-rank pairs it is checked against the grading.
    pub k_declared: KType,
}

impl SymmetricPair {
    fn equal(name: String, family: &str, u: &str, node: usize, k: KType) -> Self {
        let u_type: CartanType = u.parse().expect("catalog type");
        let mut m = vec![0; u_type.rank];
        m[node - 1] = 1;
        Self { name, family: family.into(), u_type, marking: Some(m), k_declared: k }
    }

    fn outer(name: String, family: &str, u: &str, k: KType) -> Self {
        Self { name, family: family.into(), u_type: u.parse().expect("catalog type"), marking: None, k_declared: k }
    }

    pub fn is_equal_rank(&self) -> bool {
        self.marking.is_some()
    }

    pub fn datum(&self) -> Option<HodgeDatum> {
        let m = self.marking.as_ref()?;
        Some(HodgeDatum::from_marking(Arc::new(RootSystem::new(self.u_type)), m).expect("catalog marking"))
    }

    /// `K` read off the compact roots of the grading, or the declared type.
    pub fn k_type(&self) -> KType {
        match self.datum() {
            Some(hd) => {
                let comps = subsystem_components(hd.root_system(), &hd.compact_positive());
                let r: usize = comps.iter().map(|c| c.rank).sum();
                KType::from_components(&comps, self.u_type.rank - r)
            }
            None => self.k_declared.clone(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.datum().is_some_and(|hd| hd.is_hermitian_grading())
    }

    pub fn k_simple(&self) -> bool {
        self.k_type().is_simple()
    }

    pub fn u_dim(&self) -> usize {
        simple_dim(self.u_type.series, self.u_type.rank)
    }

    pub fn dim(&self) -> usize {
        self.u_dim() - self.k_type().dim()
    }

    pub fn u_degrees(&self) -> Vec<u32> {
        invariant_degrees(self.u_type).expect("catalog type").cohomological_degrees()
    }

    pub fn k_degrees(&self) -> Vec<u32> {
        self.k_type().cohomological_degrees()
    }

    pub fn poincare(&self) -> Result<PoincarePolynomial> {
        if !self.is_equal_rank() {
            return Err(Error::NonEqualRank(self.name.clone()));
        }
        hirsch_polynomial(&self.u_degrees(), &self.k_degrees())
    }
}

fn add_family(out: &mut Vec<SymmetricPair>, max_rank: usize) {
    // AIII: SU(p,q), node p.
    for n in 2..=max_rank {
        for p in 1..=(n + 1) / 2 {
            let q = n + 1 - p;
            let k = KType::new(vec![(Series::A, p - 1), (Series::A, q - 1)].into_iter().filter(|f| f.1 > 0).collect(), 1);
            out.push(SymmetricPair::equal(format!("SU({p},{q})"), "AIII", &format!("A{n}"), p, k));
        }
    }
    // AI: SL(n,R).
    for n in 3..=max_rank + 1 {
        out.push(SymmetricPair::outer(format!("SL({n},R)"), "AI", &format!("A{}", n - 1), KType::so(n)));
    }
    // AII: SL(n,H).
    for n in 2..=(max_rank + 1) / 2 {
        let k = KType::new(vec![(Series::C, n)], 0);
        out.push(SymmetricPair::outer(format!("SL({n},H)"), "AII", &format!("A{}", 2 * n - 1), k));
    }
    // BDI, U = B_n: SO(2k, 2n+1−2k), node k.
    for n in 2..=max_rank {
        for k in 1..=n {
            let (p, q) = (2 * k, 2 * n + 1 - 2 * k);
            let name = format!("SO({},{})", p.min(q), p.max(q));
            out.push(SymmetricPair::equal(name, "BDI", &format!("B{n}"), k, KType::so(p).product(&KType::so(q))));
        }
    }
    // BDI, U = D_n.
    for n in 4..=max_rank {
        for k in 1..=n / 2 {
            let (p, q) = (2 * k, 2 * n - 2 * k);
            out.push(SymmetricPair::equal(format!("SO({p},{q})"), "BDI", &format!("D{n}"), k, KType::so(p).product(&KType::so(q))));
        }
        for p in (1..=n).step_by(2) {
            let q = 2 * n - p;
            out.push(SymmetricPair::outer(format!("SO({p},{q})"), "BDI", &format!("D{n}"), KType::so(p).product(&KType::so(q))));
        }
    }
    // DIII: SO*(2n), node n.
    for n in 4..=max_rank {
        let k = KType::new(vec![(Series::A, n - 1)], 1);
        out.push(SymmetricPair::equal(format!("SO*({})", 2 * n), "DIII", &format!("D{n}"), n, k));
    }
    // CI: Sp(n,R), node n.
    for n in 2..=max_rank {
        let k = KType::new(vec![(Series::A, n - 1)], 1);
        out.push(SymmetricPair::equal(format!("Sp({n},R)"), "CI", &format!("C{n}"), n, k));
    }
    // CII: Sp(p,q), node p.
    for n in 2..=max_rank {
        for p in 1..=n / 2 {
            let q = n - p;
            let k = KType::new(vec![(Series::C, p), (Series::C, q)], 0);
            out.push(SymmetricPair::equal(format!("Sp({p},{q})"), "CII", &format!("C{n}"), p, k));
        }
    }
}

fn add_exceptional(out: &mut Vec<SymmetricPair>) {
    use Series::*;
    let eq = |name: &str, fam: &str, u: &str, node: usize, f: Vec<(Series, usize)>, t: usize| {
        SymmetricPair::equal(name.into(), fam, u, node, KType::new(f, t))
    };
    out.push(SymmetricPair::outer("E6(6)".into(), "EI", "E6", KType::new(vec![(C, 4)], 0)));
    out.push(eq("E6(2)", "EII", "E6", 2, vec![(A, 5), (A, 1)], 0));
    out.push(eq("E6(-14)", "EIII", "E6", 1, vec![(D, 5)], 1));
    out.push(SymmetricPair::outer("E6(-26)".into(), "EIV", "E6", KType::new(vec![(F, 4)], 0)));
    out.push(eq("E7(7)", "EV", "E7", 2, vec![(A, 7)], 0));
    out.push(eq("E7(-5)", "EVI", "E7", 1, vec![(D, 6), (A, 1)], 0));
    out.push(eq("E7(-25)", "EVII", "E7", 7, vec![(E, 6)], 1));
    out.push(eq("E8(8)", "EVIII", "E8", 1, vec![(D, 8)], 0));
    out.push(eq("E8(-24)", "EIX", "E8", 8, vec![(E, 7), (A, 1)], 0));
    out.push(eq("F4(4)", "FI", "F4", 1, vec![(C, 3), (A, 1)], 0));
    out.push(eq("F4(-20)", "FII", "F4", 4, vec![(B, 4)], 0));
    out.push(eq("G2(2)", "G", "G2", 2, vec![(A, 1), (A, 1)], 0));
}

/// Irreducible symmetric pairs with `dim U > 3`: classical families with
/// `rk U ≤ max_rank` and all exceptional pairs.
pub fn symmetric_pairs(max_rank: usize) -> Vec<SymmetricPair> {
    let mut out = Vec::new();
    add_family(&mut out, max_rank);
    add_exceptional(&mut out);
    out
}

pub fn find_pair(name: &str) -> Result<SymmetricPair> {
    let key = normalize_name(name);
    let swapped = crate::classify::swap_args(&key);
    symmetric_pairs(8)
        .into_iter()
        .find(|p| {
            let n = normalize_name(&p.name);
            n == key || Some(&n) == swapped.as_ref()
        })
        .ok_or_else(|| Error::UnknownForm(name.into()))
}

fn normalize_name(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase().replace('−', "-")
}

/// Linear and quadratic `W_K`-invariants on the Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantData {
    pub linear: usize,
    pub quadratic: usize,
}

fn rank_q(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, piv);
        let inv = Q::one() / rows[rank][col];
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col] * inv;
                for j in col..ncols {
                    let v = rows[rank][j] * f;
                    rows[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Gram-twisted root vector `Gα`, so that `⟨α, λ⟩ = (Gα)·λ` in root coordinates.
fn covector(rs: &RootSystem, a: usize) -> Vec<Q> {
    let g = rs.gram();
    let r = rs.root(a);
    (0..rs.rank()).map(|i| (0..rs.rank()).map(|j| g[i][j] * qi(r.0[j] as i128)).sum()).collect()
}

/// Matrix of the reflection `s_β` on root coordinates.
fn reflection(rs: &RootSystem, b: usize) -> Vec<Vec<Q>> {
    let n = rs.rank();
    let gb = covector(rs, b);
    let c = qi(2) / rs.norm(b);
    let bv = &rs.root(b).0;
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() } - c * qi(bv[i] as i128) * gb[j]).collect())
        .collect()
}

fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Dimensions of the `W_K`-fixed linear and quadratic forms, `W_K` generated
/// by the reflections in `simple`.
pub fn invariant_dimensions(rs: &RootSystem, simple: &[usize]) -> InvariantData {
    let n = rs.rank();
    // Fixed linear forms on h*: λ with ⟨λ, β⟩ = 0 for each generator.
    let lin_rows: Vec<Vec<Q>> = simple.iter().map(|&b| covector(rs, b)).collect();
    let linear = n - rank_q(lin_rows);
    // Symmetric M with SᵀMS = M; unknowns are the upper triangle of M.
    let idx = sym_pairs(n);
    let mut rows = Vec::new();
    for &b in simple {
        let s = reflection(rs, b);
        for &(i, j) in &idx {
            // (SᵀMS)_{ij} − M_{ij} = Σ_{k,l} S_{ki} M_{kl} S_{lj} − M_{ij}
            let mut row = vec![Q::zero(); idx.len()];
            for (u, &(k, l)) in idx.iter().enumerate() {
                let mut c = s[k][i] * s[l][j];
                if k != l {
                    c += s[l][i] * s[k][j];
                }
                row[u] += c;
                if (k, l) == (i, j) {
                    row[u] -= Q::one();
                }
            }
            rows.push(row);
        }
    }
    let quadratic = idx.len() - rank_q(rows);
    InvariantData { linear, quadratic }
}

/// `Σ_{α ∈ S} ⟨α,·⟩²` over a set of positive roots, as a symmetric matrix.
fn root_quadratic(rs: &RootSystem, roots: &[usize]) -> Vec<Vec<Q>> {
    let n = rs.rank();
    let mut m = vec![vec![Q::zero(); n]; n];
    for &a in roots {
        let v = covector(rs, a);
        for i in 0..n {
            for j in 0..n {
                m[i][j] += v[i] * v[j];
            }
        }
    }
    m
}

/// How a pair of Betti numbers was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BettiMethod {
    Hirsch,
    Branch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowBetti {
    pub pair: String,
    pub h2: u64,
    pub h4: u64,
    pub method: BettiMethod,
    /// From the Hirsch quotient (equal rank only).
    pub hirsch: Option<(u64, u64)>,
    /// From `W_K`-invariant forms (equal rank only).
    pub invariant: Option<(u64, u64)>,
    /// Case split on `K` simple / `U` Hermitian / otherwise.
    pub branch: (u64, u64),
    pub poincare: Option<PoincarePolynomial>,
}

impl LowBetti {
    /// Hirsch, invariant and branch values agree wherever defined.
    pub fn consistent(&self) -> bool {
        [self.hirsch, self.invariant].iter().flatten().all(|&v| v == self.branch)
    }
}

/// `h²` is 1 for Hermitian `U/K` and 0 otherwise; `h⁴` is 0 for `K` simple,
/// 2 for Hermitian `U/K` and 1 otherwise.
pub fn branch_betti(pair: &SymmetricPair) -> (u64, u64) {
    let herm = pair.is_hermitian();
    let h2 = herm as u64;
    let h4 = if pair.k_simple() {
        0
    } else if herm {
        2
    } else {
        1
    };
    (h2, h4)
}

pub fn low_betti(pair: &SymmetricPair) -> Result<LowBetti> {
    if pair.u_dim() <= 3 {
        return Err(Error::NotIrreducible(format!("{}: dim U = {}", pair.name, pair.u_dim())));
    }
    let branch = branch_betti(pair);
    let (hirsch, invariant, poincare) = match pair.datum() {
        Some(hd) => {
            let p = pair.poincare()?;
            let rs = hd.root_system();
            let comps = subsystem_components(rs, &hd.compact_positive());
            let simple: Vec<usize> = comps.iter().flat_map(|c| c.simple.iter().copied()).collect();
            let inv = invariant_dimensions(rs, &simple);
            (Some((p.betti(2), p.betti(4))), Some((inv.linear as u64, inv.quadratic as u64 - 1)), Some(p))
        }
        None => (None, None, None),
    };
    let (h2, h4, method) = match hirsch {
        Some((a, b)) => (a, b, BettiMethod::Hirsch),
        None => (branch.0, branch.1, BettiMethod::Branch),
    };
    Ok(LowBetti { pair: pair.name.clone(), h2, h4, method, hirsch, invariant, branch, poincare })
}

/// `|W_U| / |W_K|` with both orders computed from Dynkin diagrams.
pub fn euler_characteristic(pair: &SymmetricPair) -> Result<u128> {
    let hd = pair.datum().ok_or_else(|| Error::NonEqualRank(pair.name.clone()))?;
    let rs = hd.root_system();
    let comps = subsystem_components(rs, &hd.compact_positive());
    let wk: u128 = comps
        .iter()
        .map(|c| {
            let a = c.cartan_matrix(rs);
            let nodes: Vec<usize> = (0..a.len()).collect();
            order_of_subdiagram(&a, &nodes)
        })
        .product();
    Ok(weyl_group_order(pair.u_type) / wk)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PontryaginReport {
    pub pair: String,
    pub k_type: KType,
    /// Dimension of `W_K`-invariant quadratic forms on the Cartan subalgebra.
    pub invariant_quadratics: usize,
    /// `c` with `q_k = c·q_U` when the two forms are proportional.
    #[serde(serialize_with = "crate::scalar::ser_opt_q")]
    pub proportional_to_u: Option<Q>,
    pub nonvanishing: bool,
}

/// Whether the image `q_k` of `p₁(U ×_K k)` is nonzero in `H⁴(U/K)`, i.e.
/// `q_k ∉ span{q_U}` among the `W_K`-invariant quadratics.
pub fn pontryagin_nonvanishing(pair: &SymmetricPair) -> Result<PontryaginReport> {
    let hd = pair.datum().ok_or_else(|| Error::NonEqualRank(pair.name.clone()))?;
    let rs = hd.root_system();
    let qk = root_quadratic(rs, &hd.compact_positive());
    let all: Vec<usize> = (0..rs.num_positive()).collect();
    let qu = root_quadratic(rs, &all);
    let comps = subsystem_components(rs, &hd.compact_positive());
    let simple: Vec<usize> = comps.iter().flat_map(|c| c.simple.iter().copied()).collect();
    let inv = invariant_dimensions(rs, &simple);
    let idx = sym_pairs(rs.rank());
    let flat = |m: &Vec<Vec<Q>>| idx.iter().map(|&(i, j)| m[i][j]).collect::<Vec<Q>>();
    let (fk, fu) = (flat(&qk), flat(&qu));
    let independent = rank_q(vec![fk.clone(), fu.clone()]) == 2;
    let proportional_to_u = if independent {
        None
    } else {
        let p = fu.iter().position(|x| !x.is_zero()).expect("q_U is nondegenerate");
        Some(fk[p] / fu[p])
    };
    Ok(PontryaginReport {
        pair: pair.name.clone(),
        k_type: pair.k_type(),
        invariant_quadratics: inv.quadratic,
        proportional_to_u,
        nonvanishing: independent,
    })
}

impl fmt::Display for PontryaginReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: K = {}, dim S²(t)^W_K = {}", self.pair, self.k_type, self.invariant_quadratics)?;
        if let Some(c) = &self.proportional_to_u {
            write!(f, ", q_k = {}·q_U", fmt_q(c))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::DatumSpec;

    fn poly(v: &[u64]) -> PoincarePolynomial {
        PoincarePolynomial { coefficients: v.to_vec() }
    }

    #[test]
    fn hirsch_small_cases() {
        assert_eq!(hirsch_polynomial(&[4, 6], &[4, 6]).unwrap(), poly(&[1]));
        assert_eq!(hirsch_polynomial(&[4, 6], &[2, 2]).unwrap(), poly(&[1, 0, 2, 0, 2, 0, 1]));
        assert_eq!(hirsch_polynomial(&[4, 6, 8], &[2, 4, 6]).unwrap(), poly(&[1, 0, 1, 0, 1, 0, 1]));
        assert!(matches!(hirsch_polynomial(&[4, 6], &[4, 4]), Err(Error::NonPolynomialQuotient(_))));
        assert!(matches!(hirsch_polynomial(&[4], &[2, 2]), Err(Error::NonPolynomialQuotient(_))));
        assert_eq!(poly(&[1, 0, 2, 0, 1]).to_string(), "1 + 2t^2 + t^4");
    }

    #[test]
    fn catalog_k_matches_declared() {
        for p in symmetric_pairs(8) {
            assert_eq!(p.k_type(), p.k_declared, "{} ({})", p.name, p.family);
            if p.is_equal_rank() {
                assert_eq!(p.k_type().rank(), p.u_type.rank, "{}", p.name);
            } else {
                assert!(p.k_type().rank() < p.u_type.rank, "{}", p.name);
            }
        }
    }

    #[test]
    fn flag_manifolds() {
        let hd = HodgeDatum::from_spec(&DatumSpec { cartan_type: "A2".into(), marking: vec![1, 1] }).unwrap();
        assert_eq!(flag_poincare(&hd).unwrap(), poly(&[1, 0, 2, 0, 2, 0, 1]));
        assert_eq!(flag_euler_characteristic(&hd), 6);
        assert_eq!(flag_dimension(&hd), 6);
    }

    #[test]
    fn grassmannian_and_projective_space() {
        let g24 = find_pair("SU(2,2)").unwrap();
        let b = low_betti(&g24).unwrap();
        assert_eq!((b.h2, b.h4), (1, 2));
        assert!(b.consistent());
        let cp2 = find_pair("SU(1,2)").unwrap();
        let b = low_betti(&cp2).unwrap();
        assert_eq!((b.h2, b.h4), (1, 1));
        assert_eq!(b.invariant, Some((1, 1)));
        assert_eq!(euler_characteristic(&cp2).unwrap(), 3);
    }

    #[test]
    fn pontryagin_on_quaternionic_grassmannian() {
        let r = pontryagin_nonvanishing(&find_pair("Sp(1,2)").unwrap()).unwrap();
        assert!(r.nonvanishing);
        assert_eq!(r.invariant_quadratics, 2);
        let s = pontryagin_nonvanishing(&find_pair("E8(8)").unwrap()).unwrap();
        assert_eq!(s.invariant_quadratics, 1);
        assert!(!s.nonvanishing && s.proportional_to_u.is_some());
    }
}
