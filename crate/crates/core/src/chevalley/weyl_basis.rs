use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{build_chevalley, ChevalleyConstants};
use crate::rootsys::RootSystem;
use crate::scalar::{qi, Scalar, Q};

/// Element of `g_C`: a Cartan part `t_λ` with `λ` in simple-root
/// coordinates, plus root-vector coefficients keyed by root index.
///
/// `t_λ` is the Killing dual of `λ`, so `κ(t_λ, t_μ) = ⟨λ, μ⟩` and
/// `[t_λ, e_α] = ⟨λ, α⟩ e_α`. With this convention `h_α = t_α`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LieElement {
    pub cartan: Vec<Scalar>,
    pub roots: BTreeMap<usize, Scalar>,
}

impl LieElement {
    pub fn zero(rank: usize) -> Self {
        Self { cartan: vec![Scalar::zero(); rank], roots: BTreeMap::new() }
    }

    /// The root vector `e_α`.
    pub fn root_vector(rank: usize, alpha: usize) -> Self {
        let mut x = Self::zero(rank);
        x.roots.insert(alpha, Scalar::one());
        x
    }

    /// `t_λ` for a rational `λ`.
    pub fn cartan_element(coords: &[Q]) -> Self {
        Self { cartan: coords.iter().map(|c| Scalar::from_q(*c)).collect(), roots: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.iter().all(Scalar::is_zero) && self.roots.is_empty()
    }

    /// True iff the root part vanishes.
    pub fn in_cartan(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn add_root(&mut self, alpha: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.roots.entry(alpha).or_default();
        *e += c;
        if e.is_zero() {
            self.roots.remove(&alpha);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.cartan.iter_mut().zip(&other.cartan) {
            *a += b;
        }
        for (k, v) in &other.roots {
            out.add_root(*k, v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.cartan.len());
        }
        Self {
            cartan: self.cartan.iter().map(|x| x * c).collect(),
            roots: self.roots.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// Killing-normalised Weyl basis: `κ(e_α, e_{−α}) = 1`, `[e_α, e_{−α}] = t_α`.
#[derive(Debug)]
pub struct WeylBasis {
    rs: Arc<RootSystem>,
    chevalley: ChevalleyConstants,
    n: Vec<Scalar>,
    n_sq: Vec<Q>,
    /// `⟨α_i, β⟩` for simple `i` and every root `β`.
    simple_ip: Vec<Vec<Q>>,
}

/// Invariant form used by [`WeylBasis::trace_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceForm {
    /// Killing form of `g_C`.
    Ambient,
    /// Trace form of the adjoint action restricted to `k_C`, the even-degree
    /// part of a grading.
    Isotropy,
}

impl WeylBasis {
    /// Rescales a Chevalley basis by `c_α = √(⟨α,α⟩/2)`.
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let chevalley = build_chevalley(&rs);
        Self::from_chevalley(chevalley)
    }

    pub fn from_type(t: crate::rootsys::CartanType) -> Self {
        Self::new(Arc::new(RootSystem::new(t)))
    }

    pub fn from_chevalley(chevalley: ChevalleyConstants) -> Self {
        let rs = Arc::clone(chevalley.root_system());
        let nr = rs.num_roots();
        let mut n = vec![Scalar::zero(); nr * nr];
        let mut n_sq = vec![Q::zero(); nr * nr];
        for a in 0..nr {
            for b in 0..nr {
                if let Some(s) = rs.sum_index(a, b) {
                    let k = qi(chevalley.n(a, b) as i128);
                    let factor = rs.norm(a) * rs.norm(b) / (qi(2) * rs.norm(s));
                    n_sq[a * nr + b] = k * k * factor;
                    n[a * nr + b] = Scalar::sqrt_q(&factor).scale(&k);
                }
            }
        }
        let simple_ip = (0..rs.rank())
            .map(|i| {
                let ai = crate::rootsys::Root::simple(rs.rank(), i);
                (0..nr).map(|b| rs.inner_product(&ai, rs.root(b))).collect()
            })
            .collect();
        Self { rs, chevalley, n, n_sq, simple_ip }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn chevalley(&self) -> &ChevalleyConstants {
        &self.chevalley
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `N_{α,β}` in the Weyl basis; zero unless `α + β` is a root.
    pub fn n(&self, a: usize, b: usize) -> &Scalar {
        &self.n[a * self.rs.num_roots() + b]
    }

    /// `N_{α,β}²`, always rational.
    pub fn n_sq(&self, a: usize, b: usize) -> Q {
        self.n_sq[a * self.rs.num_roots() + b]
    }

    /// `⟨λ, β⟩` for `λ` given by scalar simple-root coordinates.
    fn pairing(&self, lambda: &[Scalar], b: usize) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in lambda.iter().enumerate() {
            if !x.is_zero() {
                s += &x.scale(&self.simple_ip[i][b]);
            }
        }
        s
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let rs = &self.rs;
        let mut out = LieElement::zero(self.rank());
        for (&b, yb) in &y.roots {
            let v = self.pairing(&x.cartan, b);
            if !v.is_zero() {
                out.add_root(b, &(&v * yb));
            }
        }
        for (&a, xa) in &x.roots {
            let v = self.pairing(&y.cartan, a);
            if !v.is_zero() {
                out.add_root(a, &-(&v * xa));
            }
        }
        for (&a, xa) in &x.roots {
            for (&b, yb) in &y.roots {
                if b == rs.neg_index(a) {
                    let c = xa * yb;
                    for (i, &k) in rs.root(a).0.iter().enumerate() {
                        if k != 0 {
                            out.cartan[i] += &c.scale(&qi(k as i128));
                        }
                    }
                } else if let Some(s) = rs.sum_index(a, b) {
                    out.add_root(s, &(&(xa * yb) * self.n(a, b)));
                }
            }
        }
        out
    }

    /// Killing form, from the normalization: `κ(e_α, e_{−α}) = 1` and
    /// `κ(t_λ, t_μ) = ⟨λ, μ⟩`.
    pub fn killing(&self, x: &LieElement, y: &LieElement) -> Scalar {
        let g = self.rs.gram();
        let mut s = Scalar::zero();
        for (i, xi) in x.cartan.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.cartan.iter().enumerate() {
                if !yj.is_zero() && !g[i][j].is_zero() {
                    s += &(xi * yj).scale(&g[i][j]);
                }
            }
        }
        for (&a, xa) in &x.roots {
            if let Some(yb) = y.roots.get(&self.rs.neg_index(a)) {
                s += &(xa * yb);
            }
        }
        s
    }

    /// `tr(ad x ∘ ad y)` over the whole basis (ambient) or over the
    /// `k_C`-part of a grading (isotropy), computed by brackets.
    /// `compact(α)` selects the root vectors spanning `k_C`.
    pub fn trace_form(&self, x: &LieElement, y: &LieElement, form: TraceForm, compact: &dyn Fn(usize) -> bool) -> Scalar {
        let r = self.rank();
        let mut s = Scalar::zero();
        for i in 0..r {
            let mut q = vec![Q::zero(); r];
            q[i] = qi(1);
            let z = self.bracket(x, &self.bracket(y, &LieElement::cartan_element(&q)));
            s += &z.cartan[i];
        }
        for a in 0..self.rs.num_roots() {
            if form == TraceForm::Isotropy && !compact(a) {
                continue;
            }
            let z = self.bracket(x, &self.bracket(y, &LieElement::root_vector(r, a)));
            if let Some(c) = z.roots.get(&a) {
                s += c;
            }
        }
        s
    }

    /// Closed form of the isotropy trace form on `k_C`, given the compact roots:
    /// on the Cartan `Σ_{δ compact} ⟨δ,λ⟩⟨δ,μ⟩`, and
    /// `B(e_γ, e_{−γ}) = Σ_{δ compact} ⟨δ,γ⟩² / ⟨γ,γ⟩`.
    pub fn isotropy_form(&self, x: &LieElement, y: &LieElement, compact: &dyn Fn(usize) -> bool) -> Scalar {
        let rs = &self.rs;
        let comp: Vec<usize> = (0..rs.num_roots()).filter(|&d| compact(d)).collect();
        let mut s = Scalar::zero();
        if x.cartan.iter().any(|c| !c.is_zero()) && y.cartan.iter().any(|c| !c.is_zero()) {
            for &d in &comp {
                let a = self.pairing(&x.cartan, d);
                let b = self.pairing(&y.cartan, d);
                s += &(&a * &b);
            }
        }
        for (&g, xg) in &x.roots {
            if let Some(yg) = y.roots.get(&rs.neg_index(g)) {
                let mut w = Q::zero();
                for &d in &comp {
                    let v = rs.ip(d, g);
                    w += v * v;
                }
                w /= rs.norm(g);
                s += &(xg * yg).scale(&w);
            }
        }
        s
    }

    /// Compact conjugation `τ`: conjugate-linear, `τ(e_α) = −e_{−α}`,
    /// `τ(t_λ) = −t_λ` for real `λ`.
    pub fn tau(&self, x: &LieElement) -> LieElement {
        let mut out = LieElement::zero(self.rank());
        for (o, c) in out.cartan.iter_mut().zip(&x.cartan) {
            *o = -c.conj();
        }
        for (&a, c) in &x.roots {
            out.add_root(self.rs.neg_index(a), &-c.conj());
        }
        out
    }

    /// `σ = C∘τ` with `C = (−1)^degree`: `σ(e_α) = ε_α e_{−α}`.
    pub fn sigma(&self, x: &LieElement, eps: &dyn Fn(usize) -> i64) -> LieElement {
        let mut out = LieElement::zero(self.rank());
        for (o, c) in out.cartan.iter_mut().zip(&x.cartan) {
            *o = -c.conj();
        }
        for (&a, c) in &x.roots {
            let b = self.rs.neg_index(a);
            out.add_root(b, &c.conj().scale(&qi(eps(a) as i128)));
        }
        out
    }

    /// `exp(ad z)(x)` for nilpotent `ad z` (e.g. a root vector).
    pub fn exp_ad(&self, z: &LieElement, x: &LieElement) -> LieElement {
        let mut term = x.clone();
        let mut out = x.clone();
        let mut k = 1i128;
        loop {
            term = self.bracket(z, &term).scale(&Scalar::from_q(Q::new(1, k)));
            if term.is_zero() {
                return out;
            }
            out = out.add(&term);
            k += 1;
            assert!(k < 64, "ad z is not nilpotent");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;
    use crate::scalar::q;

    fn wb(t: &str) -> WeylBasis {
        WeylBasis::from_type(t.parse().unwrap())
    }

    #[test]
    fn a2_constant_squared() {
        let w = wb("A2");
        let rs = w.root_system();
        let a = rs.index_of(&Root(vec![1, 0])).unwrap();
        let b = rs.index_of(&Root(vec![0, 1])).unwrap();
        assert_eq!(w.n_sq(a, b), q(1, 6));
        assert_eq!((w.n(a, b) * w.n(a, b)).to_q(), Some(q(1, 6)));
        let r = w.bracket(&LieElement::root_vector(2, a), &LieElement::root_vector(2, b));
        let s = rs.sum_index(a, b).unwrap();
        assert_eq!(r.roots.get(&s), Some(w.n(a, b)));
    }

    #[test]
    fn e_alpha_e_minus_alpha_is_t_alpha() {
        let w = wb("B3");
        let rs = w.root_system();
        for a in 0..rs.num_roots() {
            let x = LieElement::root_vector(3, a);
            let y = LieElement::root_vector(3, rs.neg_index(a));
            let h = w.bracket(&x, &y);
            let want: Vec<Q> = rs.root(a).0.iter().map(|&c| qi(c as i128)).collect();
            assert_eq!(h, LieElement::cartan_element(&want));
            assert_eq!(w.killing(&x, &y), Scalar::one());
        }
    }

    #[test]
    fn trace_forms_match_closed_forms() {
        let w = wb("A3");
        let rs = w.root_system().clone();
        let compact = |a: usize| rs.root(a).0[1] % 2 == 0;
        let amb = |_: usize| true;
        let mut elems = vec![LieElement::cartan_element(&[q(1, 2), qi(-1), qi(3)])];
        for a in 0..rs.num_roots() {
            elems.push(LieElement::root_vector(3, a));
        }
        for x in &elems {
            for y in &elems {
                assert_eq!(w.trace_form(x, y, TraceForm::Ambient, &amb), w.killing(x, y));
            }
        }
        let in_k = |x: &LieElement| x.roots.keys().all(|&a| compact(a));
        for x in elems.iter().filter(|x| in_k(x)) {
            for y in elems.iter().filter(|y| in_k(y)) {
                assert_eq!(w.trace_form(x, y, TraceForm::Isotropy, &compact), w.isotropy_form(x, y, &compact));
            }
        }
    }
}
