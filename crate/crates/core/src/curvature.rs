//! The curvature tensor `Ξ` of the first Pontryagin form on horizontal
//! vectors.
//!
//! Three evaluators are provided:
//!
//! * [`xi_eval_direct`] brackets `ξ, η` with their conjugates and pairs the
//!   results with an invariant form on `k_C`;
//! * [`xi_eval_tensor`] contracts the coefficient tensor of [`xi_coefficient`]
//!   with the 2×2 minors `w^{αβ} = ξ^α η^β − ξ^β η^α`;
//! * [`xi_eval_commuting`] is the closed form `Σ C_{αβ} |w^{αβ}|²` valid on
//!   commuting pairs, with `C_{αβ}` from [`diagonal_coefficient`].

use std::cmp::Ordering;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::{LieElement, WeylBasis};
use crate::error::{Error, Result};
use crate::hodge::{Block, HodgeDatum};
use crate::rootsys::{Normalization, Root};
use crate::scalar::{fmt_q, qi, ser_opt_q, Scalar, Q};

/// `ξ = Σ ξ^α e_α` over the horizontal roots of a datum, indexed by position
/// in [`HodgeDatum::horizontal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalVector {
    pub components: Vec<Scalar>,
}

impl HorizontalVector {
    pub fn zero(n: usize) -> Self {
        Self { components: vec![Scalar::zero(); n] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.components[i] = Scalar::one();
        v
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { components: self.components.iter().map(|x| x * c).collect() }
    }

    pub fn to_lie(&self, hd: &HodgeDatum) -> LieElement {
        let mut x = LieElement::zero(hd.root_system().rank());
        for (pos, c) in self.components.iter().enumerate() {
            x.add_root(hd.horizontal()[pos], c);
        }
        x
    }

    /// Reads back a horizontal element of `g_C`.
    pub fn from_lie(hd: &HodgeDatum, x: &LieElement) -> Result<Self> {
        if x.cartan.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotHorizontal("Cartan component".into()));
        }
        let mut v = Self::zero(hd.horizontal().len());
        for (&a, c) in &x.roots {
            let pos = hd
                .horizontal_position(a)
                .ok_or_else(|| Error::NotHorizontal(hd.root_system().root(a).to_string()))?;
            v.components[pos] = c.clone();
        }
        Ok(v)
    }

    /// `w^{ij} = ξ^i η^j − ξ^j η^i`.
    pub fn minor(&self, other: &Self, i: usize, j: usize) -> Scalar {
        &(&self.components[i] * &other.components[j]) - &(&self.components[j] * &other.components[i])
    }

    /// True iff every 2×2 minor with `other` vanishes.
    pub fn proportional(&self, other: &Self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.minor(other, i, j).is_zero()))
    }
}

fn check_len(hd: &HodgeDatum, v: &HorizontalVector) -> Result<()> {
    if v.len() == hd.horizontal().len() {
        Ok(())
    } else {
        Err(Error::BasisMismatch)
    }
}

/// Invariant form used by the direct evaluator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DirectForm {
    /// Killing form of `g_C` restricted to `k_C`.
    #[default]
    Killing,
    /// Trace form of `ad` on `k_C`.
    Isotropy,
}

/// `B([ξ,τξ],[η,τη]) − B([ξ,τη],[η,τξ])`.
pub fn xi_eval_direct(wb: &WeylBasis, hd: &HodgeDatum, xi: &HorizontalVector, eta: &HorizontalVector) -> Result<Scalar> {
    xi_eval_direct_with(wb, hd, xi, eta, DirectForm::Killing)
}

pub fn xi_eval_direct_with(
    wb: &WeylBasis,
    hd: &HodgeDatum,
    xi: &HorizontalVector,
    eta: &HorizontalVector,
    form: DirectForm,
) -> Result<Scalar> {
    check_len(hd, xi)?;
    check_len(hd, eta)?;
    let x = xi.to_lie(hd);
    let y = eta.to_lie(hd);
    let tx = wb.tau(&x);
    let ty = wb.tau(&y);
    let a = wb.bracket(&x, &tx);
    let b = wb.bracket(&y, &ty);
    let c = wb.bracket(&x, &ty);
    let d = wb.bracket(&y, &tx);
    for z in [&a, &b, &c, &d] {
        assert!(z.roots.keys().all(|&r| hd.degree(r) == 0), "bracket left degree 0");
    }
    let compact = |r: usize| hd.is_compact(r);
    Ok(match form {
        DirectForm::Killing => &wb.killing(&a, &b) - &wb.killing(&c, &d),
        DirectForm::Isotropy => &wb.isotropy_form(&a, &b, &compact) - &wb.isotropy_form(&c, &d, &compact),
    })
}

/// Coefficient `Ξ_{αβγ̄ε̄}` on root indices (no horizontality check).
///
/// * `α = γ, β = ε`: `N_{α,−β}² + ⟨α,β⟩`;
/// * `α ≠ γ`, `α + β = γ + ε`: `−N_{α,β} N_{γ,ε}`;
/// * zero otherwise.
pub fn xi_coefficient_idx(wb: &WeylBasis, a: usize, b: usize, c: usize, e: usize) -> Scalar {
    let rs = wb.root_system();
    if a == c && b == e {
        return Scalar::from_q(wb.n_sq(a, rs.neg_index(b)) + rs.ip(a, b));
    }
    if a != c && rs.root(a).add(rs.root(b)) == rs.root(c).add(rs.root(e)) {
        return -(wb.n(a, b) * wb.n(c, e));
    }
    Scalar::zero()
}

pub fn xi_coefficient(wb: &WeylBasis, hd: &HodgeDatum, a: &Root, b: &Root, c: &Root, e: &Root) -> Result<Scalar> {
    let a = hd.require_horizontal(a)?;
    let b = hd.require_horizontal(b)?;
    let c = hd.require_horizontal(c)?;
    let e = hd.require_horizontal(e)?;
    Ok(xi_coefficient_idx(wb, a, b, c, e))
}

/// Sparse coefficient tensor over horizontal positions `i < j`, `k < l`.
#[derive(Clone, Debug)]
pub struct XiTensor {
    pub entries: Vec<((usize, usize, usize, usize), Scalar)>,
}

impl XiTensor {
    pub fn build(wb: &WeylBasis, hd: &HodgeDatum) -> Self {
        let h = hd.horizontal();
        let n = h.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for l in k + 1..n {
                        let v = xi_coefficient_idx(wb, h[i], h[j], h[k], h[l]);
                        if !v.is_zero() {
                            entries.push(((i, j, k, l), v));
                        }
                    }
                }
            }
        }
        Self { entries }
    }

    /// The tensor of the direct evaluator, read off basis vectors:
    /// `B([e_α, τe_γ], [e_β, τe_ε]) − B([e_α, τe_ε], [e_β, τe_γ])`.
    pub fn from_direct(wb: &WeylBasis, hd: &HodgeDatum) -> Self {
        let h = hd.horizontal();
        let n = h.len();
        let r = wb.rank();
        let e: Vec<LieElement> = h.iter().map(|&a| LieElement::root_vector(r, a)).collect();
        let te: Vec<LieElement> = e.iter().map(|x| wb.tau(x)).collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for l in k + 1..n {
                        let v = &wb.killing(&wb.bracket(&e[i], &te[k]), &wb.bracket(&e[j], &te[l]))
                            - &wb.killing(&wb.bracket(&e[i], &te[l]), &wb.bracket(&e[j], &te[k]));
                        if !v.is_zero() {
                            entries.push(((i, j, k, l), v));
                        }
                    }
                }
            }
        }
        Self { entries }
    }

    pub fn get(&self, idx: (usize, usize, usize, usize)) -> Scalar {
        self.entries.iter().find(|e| e.0 == idx).map(|e| e.1.clone()).unwrap_or_default()
    }

    /// `Σ w^{ij} \bar w^{kl} Ξ_{ijkl}`.
    pub fn eval(&self, xi: &HorizontalVector, eta: &HorizontalVector) -> Scalar {
        let mut s = Scalar::zero();
        for ((i, j, k, l), v) in &self.entries {
            let w1 = xi.minor(eta, *i, *j);
            if w1.is_zero() {
                continue;
            }
            let w2 = xi.minor(eta, *k, *l).conj();
            s += &(&(&w1 * &w2) * v);
        }
        s
    }
}

/// Contraction of the coefficient tensor with the minors of `ξ ∧ η`.
pub fn xi_eval_tensor(wb: &WeylBasis, hd: &HodgeDatum, xi: &HorizontalVector, eta: &HorizontalVector) -> Result<Scalar> {
    check_len(hd, xi)?;
    check_len(hd, eta)?;
    Ok(XiTensor::build(wb, hd).eval(xi, eta))
}

/// `N_{α,−β}² + ⟨α,β⟩ + N_{α,β}²` for distinct horizontal roots.
pub fn diagonal_coefficient(wb: &WeylBasis, hd: &HodgeDatum, a: &Root, b: &Root) -> Result<Q> {
    diagonal_coefficient_in(wb, hd, a, b, Normalization::Killing)
}

/// [`diagonal_coefficient`] with the inner product in a chosen scaling.
pub fn diagonal_coefficient_in(wb: &WeylBasis, hd: &HodgeDatum, a: &Root, b: &Root, norm: Normalization) -> Result<Q> {
    let ia = hd.require_horizontal(a)?;
    let ib = hd.require_horizontal(b)?;
    if ia == ib {
        return Err(Error::Input("diagonal coefficient needs two distinct roots".into()));
    }
    let c = diagonal_coefficient_idx(wb, ia, ib);
    Ok(match norm {
        Normalization::Killing => c,
        Normalization::Bourbaki => c * wb.root_system().killing_scale(),
    })
}

pub fn diagonal_coefficient_idx(wb: &WeylBasis, a: usize, b: usize) -> Q {
    let rs = wb.root_system();
    wb.n_sq(a, rs.neg_index(b)) + rs.ip(a, b) + wb.n_sq(a, b)
}

/// Closed form on commuting pairs.
pub fn xi_eval_commuting(wb: &WeylBasis, hd: &HodgeDatum, xi: &HorizontalVector, eta: &HorizontalVector) -> Result<Scalar> {
    let order: Vec<usize> = (0..hd.horizontal().len()).collect();
    xi_eval_commuting_ordered(wb, hd, xi, eta, &order)
}

/// Same sum, with the pairs `α <_t β` taken in the total order given by
/// `order` (a permutation of horizontal positions).
pub fn xi_eval_commuting_ordered(
    wb: &WeylBasis,
    hd: &HodgeDatum,
    xi: &HorizontalVector,
    eta: &HorizontalVector,
    order: &[usize],
) -> Result<Scalar> {
    check_len(hd, xi)?;
    check_len(hd, eta)?;
    let br = wb.bracket(&xi.to_lie(hd), &eta.to_lie(hd));
    if !br.is_zero() {
        let terms: Vec<String> = br.roots.iter().map(|(a, c)| format!("{}·e{}", c, wb.root_system().root(*a))).collect();
        return Err(Error::NonCommuting(terms.join(" + ")));
    }
    let h = hd.horizontal();
    let mut s = Scalar::zero();
    for (p, &i) in order.iter().enumerate() {
        for &j in &order[p + 1..] {
            let w = xi.minor(eta, i, j);
            if w.is_zero() {
                continue;
            }
            let c = diagonal_coefficient_idx(wb, h[i], h[j]);
            if !c.is_zero() {
                s += &w.norm_sqr().scale(&c);
            }
        }
    }
    Ok(s)
}

/// How nonnegativity of a coefficient is argued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `⟨α,β⟩ ≥ 0`: every term is nonnegative.
    NonnegativeInner,
    /// `⟨α,β⟩ < 0`: relies on `N_{α,β}² = −⟨α,β⟩`.
    StringIdentity,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairEntry {
    pub alpha: String,
    pub beta: String,
    pub inner: String,
    pub coefficient: String,
    pub branch: Branch,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NonnegativityReport {
    pub datum: String,
    pub pairs_checked: usize,
    #[serde(serialize_with = "ser_opt_q")]
    pub min_coefficient: Option<Q>,
    pub violations: Vec<PairEntry>,
    /// Pairs with `⟨α,β⟩ < 0` where `N_{α,β}² ≠ −⟨α,β⟩`.
    pub string_branch_exceptions: Vec<PairEntry>,
    pub pairs: Vec<PairEntry>,
}

impl NonnegativityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sweep of every unordered pair of horizontal roots.
pub fn verify_nonnegativity(wb: &WeylBasis, hd: &HodgeDatum) -> NonnegativityReport {
    let rs = wb.root_system();
    let h = hd.horizontal();
    let mut rep = NonnegativityReport {
        datum: hd.label(),
        pairs_checked: 0,
        min_coefficient: None,
        violations: Vec::new(),
        string_branch_exceptions: Vec::new(),
        pairs: Vec::new(),
    };
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            let (a, b) = (h[i], h[j]);
            let c = diagonal_coefficient_idx(wb, a, b);
            let ip = rs.ip(a, b);
            let branch = if ip < Q::zero() { Branch::StringIdentity } else { Branch::NonnegativeInner };
            let entry = PairEntry {
                alpha: rs.root_name(rs.root(a)),
                beta: rs.root_name(rs.root(b)),
                inner: fmt_q(&ip),
                coefficient: fmt_q(&c),
                branch,
            };
            rep.pairs_checked += 1;
            rep.min_coefficient = Some(rep.min_coefficient.map_or(c, |m| m.min(c)));
            if c < Q::zero() {
                rep.violations.push(entry.clone());
            }
            if branch == Branch::StringIdentity && wb.n_sq(a, b) != -ip {
                rep.string_branch_exceptions.push(entry.clone());
            }
            rep.pairs.push(entry);
        }
    }
    rep
}

/// Verdict of the block argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BlockPositivity {
    StrictlyPositive,
    NotTotallyOrdered { a: String, b: String },
    HasZeroPair { a: String, b: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub anchor: usize,
    pub roots: Vec<String>,
    pub verdict: BlockPositivity,
    /// Smallest `⟨α,β⟩` over comparable pairs `β < α`.
    #[serde(serialize_with = "ser_opt_q")]
    pub min_inner: Option<Q>,
    /// Whether `⟨α,β⟩ ≥ ⟨β,β⟩` held for every comparable pair `β < α`.
    pub length_bound_holds: bool,
}

fn dominates(a: &Root, b: &Root) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x >= y)
}

/// Strict positivity of `Ξ` on a block.
///
/// The block must be a chain for the root order, and every pair `β < α` must
/// have `⟨α,β⟩ > 0`; then `α − β` is a root, `N_{α,−β} ≠ 0` and every
/// coefficient `C_{αβ}` is positive.
pub fn block_positivity(wb: &WeylBasis, _hd: &HodgeDatum, block: &Block) -> BlockReport {
    let rs = wb.root_system();
    let mut verdict = BlockPositivity::StrictlyPositive;
    let mut min_inner: Option<Q> = None;
    let mut length_bound_holds = true;
    let name = |i: usize| rs.root_name(rs.root(i));
    'outer: for (p, &x) in block.roots.iter().enumerate() {
        for &y in &block.roots[p + 1..] {
            let (hi, lo) = if dominates(rs.root(x), rs.root(y)) {
                (x, y)
            } else if dominates(rs.root(y), rs.root(x)) {
                (y, x)
            } else {
                verdict = BlockPositivity::NotTotallyOrdered { a: name(x), b: name(y) };
                break 'outer;
            };
            let ip = rs.ip(hi, lo);
            min_inner = Some(min_inner.map_or(ip, |m| m.min(ip)));
            if ip < rs.norm(lo) {
                length_bound_holds = false;
            }
            if ip <= Q::zero() && verdict == BlockPositivity::StrictlyPositive {
                verdict = BlockPositivity::HasZeroPair { a: name(hi), b: name(lo) };
            }
        }
    }
    BlockReport {
        anchor: block.anchor,
        roots: block.roots.iter().map(|&i| name(i)).collect(),
        verdict,
        min_inner,
        length_bound_holds,
    }
}

/// `−[ξ, σ(ξ)]`, which lies in the Cartan-plus-Levi part.
pub fn theta_pair(wb: &WeylBasis, hd: &HodgeDatum, xi: &HorizontalVector) -> Result<LieElement> {
    check_len(hd, xi)?;
    let x = xi.to_lie(hd);
    let eps = |a: usize| hd.epsilon(a);
    let out = wb.bracket(&x, &wb.sigma(&x, &eps)).neg();
    assert!(out.roots.keys().all(|&r| hd.degree(r) == 0), "theta left degree 0");
    Ok(out)
}

/// Generator of commuting horizontal pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairStrategy {
    /// `(e_α, e_β)` for `α <_t β` with `α + β` not a root.
    Basis,
    /// Gaussian-integer vectors supported on a random maximal set of
    /// horizontal roots no two of which add to a root.
    RandomNonAdding,
    /// `RandomNonAdding` pairs moved by `exp(ad t·e_γ)` for a Levi root `γ`.
    Conjugated,
    /// All basis pairs, then alternating random and conjugated pairs.
    Mixed,
}

/// Up to `count` commuting pairs, each verified by an exact bracket.
pub fn commuting_pairs(
    hd: &HodgeDatum,
    wb: &WeylBasis,
    strategy: PairStrategy,
    seed: u64,
    count: usize,
) -> Vec<(HorizontalVector, HorizontalVector)> {
    let n = hd.horizontal().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    match strategy {
        PairStrategy::Basis => out.extend(basis_pairs(hd, wb).into_iter().take(count)),
        PairStrategy::RandomNonAdding => {
            if n > 0 {
                for _ in 0..count {
                    out.push(random_pair(hd, wb, &mut rng));
                }
            }
        }
        PairStrategy::Conjugated => {
            if n > 0 {
                for _ in 0..count {
                    out.push(conjugated_pair(hd, wb, &mut rng));
                }
            }
        }
        PairStrategy::Mixed => {
            out.extend(basis_pairs(hd, wb).into_iter().take(count));
            let mut k = 0;
            while n > 0 && out.len() < count {
                let p = if k % 2 == 0 { random_pair(hd, wb, &mut rng) } else { conjugated_pair(hd, wb, &mut rng) };
                out.push(p);
                k += 1;
            }
        }
    }
    for (x, y) in &out {
        assert!(wb.bracket(&x.to_lie(hd), &y.to_lie(hd)).is_zero(), "generated pair does not commute");
    }
    out
}

fn basis_pairs(hd: &HodgeDatum, wb: &WeylBasis) -> Vec<(HorizontalVector, HorizontalVector)> {
    let rs = wb.root_system();
    let h = hd.horizontal();
    let n = h.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rs.sum_index(h[i], h[j]).is_none() {
                out.push((HorizontalVector::basis(n, i), HorizontalVector::basis(n, j)));
            }
        }
    }
    out
}

fn random_support(hd: &HodgeDatum, wb: &WeylBasis, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let rs = wb.root_system();
    let h = hd.horizontal();
    let mut order: Vec<usize> = (0..h.len()).collect();
    order.shuffle(rng);
    let mut support: Vec<usize> = Vec::new();
    for i in order {
        if support.iter().all(|&j| rs.sum_index(h[i], h[j]).is_none()) {
            support.push(i);
        }
    }
    support.sort();
    support
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

fn random_pair(hd: &HodgeDatum, wb: &WeylBasis, rng: &mut ChaCha8Rng) -> (HorizontalVector, HorizontalVector) {
    let n = hd.horizontal().len();
    let support = random_support(hd, wb, rng);
    let mut x = HorizontalVector::zero(n);
    let mut y = HorizontalVector::zero(n);
    for &i in &support {
        x.components[i] = random_gaussian(rng);
        y.components[i] = random_gaussian(rng);
    }
    (x, y)
}

fn conjugated_pair(hd: &HodgeDatum, wb: &WeylBasis, rng: &mut ChaCha8Rng) -> (HorizontalVector, HorizontalVector) {
    let (x, y) = random_pair(hd, wb, rng);
    let levi = hd.parabolic_data().levi;
    if levi.is_empty() {
        return (x, y);
    }
    let g = levi[rng.gen_range(0..levi.len())];
    let t = Scalar::from_q(Q::new(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=2)));
    let z = LieElement::root_vector(wb.rank(), g).scale(&t);
    let move_ = |v: &HorizontalVector| {
        HorizontalVector::from_lie(hd, &wb.exp_ad(&z, &v.to_lie(hd))).expect("Levi action preserves degree 1")
    };
    (move_(&x), move_(&y))
}

/// Sign of a real scalar value; `None` if it is not real.
pub fn sign(x: &Scalar) -> Option<Ordering> {
    x.real_sign()
}

/// Exact ratio `x / y` of two rational-valued scalars, if defined.
pub fn rational_ratio(x: &Scalar, y: &Scalar) -> Option<Q> {
    let (a, b) = (x.to_q()?, y.to_q()?);
    (!b.is_zero()).then(|| a / b)
}

/// Marker used in reports: the coefficient `2N_{α,−β}²` by which the closed
/// form exceeds the direct evaluator on a basis pair.
pub fn closed_form_excess(wb: &WeylBasis, a: usize, b: usize) -> Q {
    qi(2) * wb.n_sq(a, wb.root_system().neg_index(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::DatumSpec;
    use std::sync::Arc;

    fn setup(t: &str, m: &[i64]) -> (WeylBasis, HodgeDatum) {
        let hd = HodgeDatum::from_spec(&DatumSpec { cartan_type: t.into(), marking: m.to_vec() }).unwrap();
        let wb = WeylBasis::new(Arc::clone(hd.root_system()));
        (wb, hd)
    }

    #[test]
    fn bilinearity_edge_cases() {
        let (wb, hd) = setup("A3", &[0, 1, 0]);
        let n = hd.horizontal().len();
        let x = HorizontalVector { components: (0..n).map(|i| Scalar::gaussian(i as i64 + 1, 1 - i as i64)).collect() };
        let zero = HorizontalVector::zero(n);
        assert!(xi_eval_direct(&wb, &hd, &x, &zero).unwrap().is_zero());
        let y = x.scale(&Scalar::gaussian(2, -1));
        assert!(xi_eval_direct(&wb, &hd, &x, &y).unwrap().is_zero());
        assert!(xi_eval_commuting(&wb, &hd, &x, &y).unwrap().is_zero());
        assert_eq!(xi_eval_direct(&wb, &hd, &x, &HorizontalVector::zero(n + 1)), Err(Error::BasisMismatch));
    }

    #[test]
    fn theta_of_root_vector() {
        let (wb, hd) = setup("B3", &[0, 1, 0]);
        let n = hd.horizontal().len();
        for i in 0..n {
            let e = HorizontalVector::basis(n, i);
            let t = theta_pair(&wb, &hd, &e).unwrap();
            let a = hd.horizontal()[i];
            let want: Vec<Q> = wb.root_system().root(a).0.iter().map(|&c| qi(-c as i128)).collect();
            assert_eq!(t, LieElement::cartan_element(&want));
            let x = e.to_lie(&hd);
            assert_eq!(t, wb.bracket(&x, &wb.tau(&x)));
        }
    }

    #[test]
    fn non_commuting_is_rejected() {
        let (wb, hd) = setup("G2", &[1, 0]);
        let n = hd.horizontal().len();
        let rs = wb.root_system();
        let h = hd.horizontal();
        let (i, j) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| rs.sum_index(h[i], h[j]).is_some())
            .expect("G2 (1,0) has summable horizontal roots");
        let r = xi_eval_commuting(&wb, &hd, &HorizontalVector::basis(n, i), &HorizontalVector::basis(n, j));
        assert!(matches!(r, Err(Error::NonCommuting(_))));
    }

    #[test]
    fn generated_pairs_are_reproducible() {
        let (wb, hd) = setup("C3", &[0, 0, 1]);
        let a = commuting_pairs(&hd, &wb, PairStrategy::Mixed, 7, 50);
        let b = commuting_pairs(&hd, &wb, PairStrategy::Mixed, 7, 50);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        let (wb1, hd1) = setup("A1", &[1]);
        assert!(commuting_pairs(&hd1, &wb1, PairStrategy::Basis, 0, 10).is_empty());
    }
}

#[cfg(test)]
mod kernel_tests {
    use super::*;
    use crate::hodge::DatumSpec;
    use std::sync::Arc;

    fn setup(t: &str, m: &[i64]) -> (WeylBasis, HodgeDatum) {
        let hd = HodgeDatum::from_spec(&DatumSpec { cartan_type: t.into(), marking: m.to_vec() }).unwrap();
        (WeylBasis::new(Arc::clone(hd.root_system())), hd)
    }

    #[test]
    fn direct_kernel_is_off_diagonal_product() {
        for (t, m) in [("A3", vec![0, 1, 0]), ("B3", vec![1, 0, 1]), ("G2", vec![1, 0]), ("C3", vec![0, 1, 0])] {
            let (wb, hd) = setup(t, &m);
            let h = hd.horizontal();
            let rs = wb.root_system();
            let d = XiTensor::from_direct(&wb, &hd);
            let n = h.len();
            for i in 0..n {
                for j in i + 1..n {
                    for k in 0..n {
                        for l in k + 1..n {
                            let same = rs.root(h[i]).add(rs.root(h[j])) == rs.root(h[k]).add(rs.root(h[l]));
                            let want = if same { -(wb.n(h[i], h[j]) * wb.n(h[k], h[l])) } else { Scalar::zero() };
                            assert_eq!(d.get((i, j, k, l)), want, "{t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn routes_on_commuting_pairs() {
        let (wb, hd) = setup("B3", &[0, 1, 0]);
        for (x, y) in commuting_pairs(&hd, &wb, PairStrategy::Mixed, 3, 40) {
            assert!(xi_eval_direct(&wb, &hd, &x, &y).unwrap().is_zero());
            assert_eq!(xi_eval_tensor(&wb, &hd, &x, &y).unwrap(), xi_eval_commuting(&wb, &hd, &x, &y).unwrap());
        }
        let h = hd.horizontal();
        for i in 0..h.len() {
            for j in i + 1..h.len() {
                assert_eq!(diagonal_coefficient_idx(&wb, h[i], h[j]), closed_form_excess(&wb, h[i], h[j]));
            }
        }
    }

    #[test]
    fn block_verdicts() {
        let (wb, hd) = setup("A3", &[0, 0, 1]);
        let b = &hd.blocks()[0];
        assert_eq!(block_positivity(&wb, &hd, b).verdict, BlockPositivity::StrictlyPositive);
        let (wb, hd) = setup("A3", &[0, 1, 0]);
        let b = &hd.blocks()[0];
        assert!(matches!(block_positivity(&wb, &hd, b).verdict, BlockPositivity::NotTotallyOrdered { .. }));
    }
}
