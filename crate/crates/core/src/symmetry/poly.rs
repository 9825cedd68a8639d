//! Sparse multivariate polynomials over an abstract scalar, with monomials
//! stored as sorted multisets of variable labels.

use crate::{Int, Rational};
use num::{FromPrimitive, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Coefficient ring abstraction: exact rationals for everything except the
/// dihedral (cosine-valued) blocks, which live in `f64`.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Exact division by a nonzero integer.
    fn div_int(&self, v: &Int) -> Self;
    fn from_int(v: &Int) -> Self {
        Self::from_rational(&Rational::from(v.clone()))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn div_int(&self, v: &Int) -> Self {
        self / Rational::from(v.clone())
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }
    fn div_int(&self, v: &Int) -> Self {
        self / v.to_f64().unwrap()
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or_else(|| {
        // fall back via string for huge values; not expected in practice
        r.numer().to_string().parse().unwrap()
    }) / r.denom().to_f64().unwrap()
}

/// A monomial: sorted multiset of variable labels.
pub type Monomial = Vec<u32>;

fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S: Scalar> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![], c);
        p
    }

    pub fn one() -> Self {
        Poly::constant(S::one())
    }

    /// The degree-1 polynomial `c * label`.
    pub fn linear(label: u32, c: S) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![label], c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, S)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly<S>) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Poly<S> {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_int(&self, c: &Int) -> Poly<S> {
        self.scale(&S::from_int(c))
    }

    pub fn div_int(&self, c: &Int) -> Poly<S> {
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.div_int(c));
        }
        out
    }

    pub fn neg(&self) -> Poly<S> {
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.neg());
        }
        out
    }

    pub fn mul(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(merge(ma, mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<S> {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Maximum total degree among the stored monomials.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Partial derivative with respect to a single variable label.
    pub fn derivative(&self, label: u32) -> Poly<S> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mult = m.iter().filter(|&&v| v == label).count();
            if mult == 0 {
                continue;
            }
            let mut reduced = m.clone();
            let pos = reduced.iter().position(|&v| v == label).unwrap();
            reduced.remove(pos);
            out.add_term(reduced, c.mul(&S::from_int(&Int::from_usize(mult).unwrap())));
        }
        out
    }

    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl Poly<Rational> {
    /// Converts an exact polynomial into floating point.
    pub fn to_f64(&self) -> Poly<f64> {
        self.map_scalar(rational_to_f64)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().abs() == Int::from(1))
    }
}

/// Determinant of a square matrix of polynomials, by Leibniz expansion
/// (matrices here are at most 4 x 4).
pub fn det<S: Scalar>(m: &[Vec<Poly<S>>]) -> Poly<S> {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut out = Poly::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let mut prod = Poly::one();
        for (i, &j) in perm.iter().enumerate() {
            prod = prod.mul(&m[i][j]);
        }
        if sign {
            out.add_assign(&prod);
        } else {
            out.add_assign(&prod.neg());
        }
    });
    out
}

/// Enumerates permutations by swaps, tracking the parity (true = even).
fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], bool)) {
    fn rec(perm: &mut Vec<usize>, k: usize, parity: bool, f: &mut impl FnMut(&[usize], bool)) {
        if k == perm.len() {
            f(perm, parity);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            let p = if i == k { parity } else { !parity };
            rec(perm, k + 1, p, f);
            perm.swap(k, i);
        }
    }
    rec(perm, k, true, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    
    fn r(v: i64) -> Rational {
        Rational::from_i64(v).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let x = Poly::linear(0, r(1));
        let y = Poly::linear(1, r(1));
        let mut s = x.clone();
        s.add_assign(&y);
        let sq = s.mul(&s); // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.coefficient(&vec![0, 0]), r(1));
        assert_eq!(sq.coefficient(&vec![0, 1]), r(2));
        assert_eq!(sq.coefficient(&vec![1, 1]), r(1));
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.degree(), 2);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = Poly::linear(0, r(1));
        let mut s = x.clone();
        s.add_assign(&x.neg());
        assert!(s.is_zero());
    }

    #[test]
    fn derivative_of_powers() {
        let x = Poly::linear(0, r(1));
        let p = x.pow(3); // x^3
        let d = p.derivative(0); // 3 x^2
        assert_eq!(d.coefficient(&vec![0, 0]), r(3));
    }

    #[test]
    fn determinant_of_two_by_two() {
        let m = vec![
            vec![Poly::linear(0, r(1)), Poly::linear(1, r(1))],
            vec![Poly::linear(2, r(1)), Poly::linear(3, r(1))],
        ];
        let d = det(&m);
        assert_eq!(d.coefficient(&vec![0, 3]), r(1));
        assert_eq!(d.coefficient(&vec![1, 2]), r(-1));
    }
}
