//! Exact scalars.
//!
//! [`Q`] is the rational field. [`Scalar`] is a finite sum `Σ (a_d + i·b_d)·√d`
//! over square-free radicands `d`, with `a_d, b_d ∈ Q`. Structure constants of
//! a Killing-normalised Weyl basis and all curvature values live in this ring,
//! so every identity can be checked by exact equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

/// Exact rational numbers.
pub type Q = Ratio<i128>;

/// Shorthand for the rational `n/d`.
pub fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

/// Integer as a rational.
pub fn qi(n: i128) -> Q {
    Q::from_integer(n)
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serializes a rational as its exact string.
pub fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

/// Serializes an optional rational as an exact string or null.
pub fn ser_opt_q<S: serde::Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&fmt_q(v)),
        None => s.serialize_none(),
    }
}

/// Split `n = s²·d` with `d` square-free.
pub fn squarefree_split(mut n: u128) -> (u128, u128) {
    assert!(n > 0, "squarefree_split of zero");
    let mut s = 1u128;
    let mut d = 1u128;
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= p;
        }
        if e % 2 == 1 {
            d *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, d * n)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Term {
    radicand: u64,
    re: Q,
    im: Q,
}

impl Term {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// Element of `Q(i)[√2, √3, √5, ...]` in canonical form.
///
/// Terms are sorted by radicand and never zero, so derived equality is exact
/// equality of numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: SmallVec<[Term; 2]>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::complex(Q::zero(), Q::one())
    }

    pub fn from_int(n: i128) -> Self {
        Self::from_q(qi(n))
    }

    pub fn from_q(x: Q) -> Self {
        Self::complex(x, Q::zero())
    }

    /// `re + i·im`.
    pub fn complex(re: Q, im: Q) -> Self {
        Self::radical(re, im, 1)
    }

    fn radical(re: Q, im: Q, radicand: u64) -> Self {
        let t = Term { radicand, re, im };
        let mut terms = SmallVec::new();
        if !t.is_zero() {
            terms.push(t);
        }
        Self { terms }
    }

    /// Gaussian integer `a + b·i`.
    pub fn gaussian(a: i64, b: i64) -> Self {
        Self::complex(qi(a as i128), qi(b as i128))
    }

    /// Nonnegative square root of a nonnegative rational.
    ///
    /// # Panics
    /// If `x < 0`.
    pub fn sqrt_q(x: &Q) -> Self {
        assert!(!x.is_negative(), "square root of a negative rational");
        if x.is_zero() {
            return Self::zero();
        }
        let n = (*x.numer() as u128) * (*x.denom() as u128);
        let (s, d) = squarefree_split(n);
        let coeff = Q::new(s as i128, *x.denom());
        Self::radical(coeff, Q::zero(), d as u64)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if every imaginary coefficient vanishes.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.im.is_zero())
    }

    /// The value as a rational, if it is one.
    pub fn to_q(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [t] if t.radicand == 1 && t.im.is_zero() => Some(t.re),
            _ => None,
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for t in out.terms.iter_mut() {
            t.im = -t.im;
        }
        out
    }

    /// `|z|²`, which is real but not necessarily rational.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for t in out.terms.iter_mut() {
            t.re *= c;
            t.im *= c;
        }
        out
    }

    /// Sign of a real scalar, decided exactly.
    ///
    /// Returns `None` for non-real values. Uses repeated squaring of the
    /// radical expansion, which terminates because each step removes one prime.
    pub fn real_sign(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        Some(sign_of_real(
            &self.terms.iter().map(|t| (t.radicand, t.re)).collect::<Vec<_>>(),
        ))
    }

    /// Floating-point approximation `(re, im)`, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for t in &self.terms {
            let r = (t.radicand as f64).sqrt();
            re += t.re.to_f64().unwrap_or(f64::NAN) * r;
            im += t.im.to_f64().unwrap_or(f64::NAN) * r;
        }
        (re, im)
    }

    fn push_term(terms: &mut SmallVec<[Term; 2]>, t: Term) {
        match terms.binary_search_by(|x| x.radicand.cmp(&t.radicand)) {
            Ok(i) => {
                terms[i].re += t.re;
                terms[i].im += t.im;
                if terms[i].is_zero() {
                    terms.remove(i);
                }
            }
            Err(i) => {
                if !t.is_zero() {
                    terms.insert(i, t);
                }
            }
        }
    }
}

/// Exact sign of `Σ c_d √d` for distinct square-free `d`.
fn sign_of_real(terms: &[(u64, Q)]) -> Ordering {
    let terms: Vec<(u64, Q)> = terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
    if terms.is_empty() {
        return Ordering::Equal;
    }
    if terms.len() == 1 {
        return terms[0].1.cmp(&Q::zero());
    }
    // A floating-point value far from zero relative to its rounding error
    // bound already fixes the sign; the exact descent below squares
    // coefficients and is kept for the near-cancelling cases.
    let (mut sum, mut mag) = (0.0f64, 0.0f64);
    for (d, c) in &terms {
        let v = c.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt();
        sum += v;
        mag += v.abs();
    }
    if sum.is_finite() && sum.abs() > mag * 1e-9 {
        return if sum > 0.0 { Ordering::Greater } else { Ordering::Less };
    }
    // Pick a prime p dividing some radicand and write x = a + b√p with a, b
    // free of p. Then sign(x) follows from sign(a), sign(b), sign(a² − p b²).
    let p = smallest_prime_factor(terms.iter().map(|t| t.0).find(|&d| d > 1).unwrap());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (d, c) in &terms {
        if d % p == 0 {
            b.push((d / p, *c));
        } else {
            a.push((*d, *c));
        }
    }
    let sa = sign_of_real(&a);
    let sb = sign_of_real(&b);
    if sa == sb || sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    let a2 = square_real(&a);
    let mut diff = square_real(&b);
    for t in diff.iter_mut() {
        t.1 *= -Q::from_integer(p as i128);
    }
    let mut all = a2;
    for t in diff {
        add_real_term(&mut all, t);
    }
    match sign_of_real(&all) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sa,
        Ordering::Less => sb,
    }
}

fn add_real_term(v: &mut Vec<(u64, Q)>, t: (u64, Q)) {
    if let Some(e) = v.iter_mut().find(|e| e.0 == t.0) {
        e.1 += t.1;
    } else {
        v.push(t);
    }
}

fn square_real(v: &[(u64, Q)]) -> Vec<(u64, Q)> {
    let mut out = Vec::new();
    for (d1, c1) in v {
        for (d2, c2) in v {
            let (g, r) = radical_product(*d1, *d2);
            add_real_term(&mut out, (r, c1 * c2 * Q::from_integer(g as i128)));
        }
    }
    out
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}

/// `√a·√b = g·√r` for square-free `a, b`.
fn radical_product(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    (g, (a / g) * (b / g))
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for t in &rhs.terms {
            Scalar::push_term(&mut self.terms, t.clone());
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = self.clone();
        for t in out.terms.iter_mut() {
            t.re = -t.re;
            t.im = -t.im;
        }
        out
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for t in &rhs.terms {
            Scalar::push_term(
                &mut self.terms,
                Term { radicand: t.radicand, re: -t.re, im: -t.im },
            );
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                let (g, r) = radical_product(a.radicand, b.radicand);
                let g = Q::from_integer(g as i128);
                let re = (a.re * b.re - a.im * b.im) * g;
                let im = (a.re * b.im + a.im * b.re) * g;
                Scalar::push_term(&mut out.terms, Term { radicand: r, re, im });
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Q> for Scalar {
    fn from(x: Q) -> Self {
        Scalar::from_q(x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n as i128)
    }
}

impl fmt::Display for Scalar {
    /// Exact rendering such as `3/2`, `-1/6·√6` or `(1/2+2i)·√3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for t in &self.terms {
            let coeff = match (t.re.is_zero(), t.im.is_zero()) {
                (false, true) => fmt_q(&t.re),
                (true, false) => {
                    if t.im == Q::one() {
                        "i".to_string()
                    } else if t.im == -Q::one() {
                        "-i".to_string()
                    } else {
                        format!("{}i", fmt_q(&t.im))
                    }
                }
                _ => {
                    let sign = if t.im.is_negative() { "-" } else { "+" };
                    let im = t.im.abs();
                    let im = if im == Q::one() { String::new() } else { fmt_q(&im) };
                    format!("({}{}{}i)", fmt_q(&t.re), sign, im)
                }
            };
            if t.radicand == 1 {
                parts.push(coeff);
            } else if coeff == "1" {
                parts.push(format!("√{}", t.radicand));
            } else if coeff == "-1" {
                parts.push(format!("-√{}", t.radicand));
            } else {
                parts.push(format!("{}·√{}", coeff, t.radicand));
            }
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_collapses_squares() {
        assert_eq!(Scalar::sqrt_q(&q(9, 4)).to_q(), Some(q(3, 2)));
        let r = Scalar::sqrt_q(&q(1, 6));
        assert_eq!(r.to_string(), "1/6·√6");
        assert_eq!((&r * &r).to_q(), Some(q(1, 6)));
    }

    #[test]
    fn radical_products_merge() {
        let a = Scalar::sqrt_q(&qi(6));
        let b = Scalar::sqrt_q(&qi(10));
        // √6·√10 = 2√15
        assert_eq!((&a * &b).to_string(), "2·√15");
        let i = Scalar::i();
        assert_eq!((&i * &i).to_q(), Some(qi(-1)));
    }

    #[test]
    fn exact_sign_of_radical_sums() {
        let s2 = Scalar::sqrt_q(&qi(2));
        let s3 = Scalar::sqrt_q(&qi(3));
        let x = &(&s2 + &s3) - &Scalar::from_q(qi(3));
        assert_eq!(x.real_sign(), Some(Ordering::Greater));
        let y = &s2.scale(&qi(7)) - &Scalar::from_q(qi(10));
        assert_eq!(y.real_sign(), Some(Ordering::Less));
        assert_eq!(Scalar::zero().real_sign(), Some(Ordering::Equal));
        assert_eq!(Scalar::i().real_sign(), None);
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_split(72), (6, 2));
        assert_eq!(squarefree_split(1), (1, 1));
        assert_eq!(squarefree_split(30), (1, 30));
    }
}
