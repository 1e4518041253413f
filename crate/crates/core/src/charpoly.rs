//! The character ring `Q[q, q^{-1}][Lambda]` and its truncated q-series.
//!
//! A [`CharPoly`] is a finite sum of `c q^n e^lambda` with exact rational
//! coefficients. A [`CharSeries`] is a polynomial cut off above q-degree `N`
//! together with a watermark `V <= N`: coefficients in degrees `<= V` are exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rootdata::{RootSystem, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("division is not exact: {0}")]
    NotDivisible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
}

pub type Result<T> = std::result::Result<T, CharError>;

/// `q^q e^wt`, ordered by q-degree and then weight lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub q: i64,
    pub wt: Weight,
}

impl Monomial {
    pub fn new(q: i64, wt: Weight) -> Self {
        Monomial { q, wt }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { q: self.q + other.q, wt: &self.wt + &other.wt }
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial { q: self.q - other.q, wt: &self.wt - &other.wt }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CharPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CharPoly {
    pub fn zero() -> Self {
        CharPoly::default()
    }

    /// `e^0` in rank `r`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(0, Weight::zero(rank))
    }

    /// `q^n e^wt`.
    pub fn monomial(n: i64, wt: Weight) -> Self {
        Self::term(n, wt, BigRational::one())
    }

    pub fn term(n: i64, wt: Weight, c: BigRational) -> Self {
        let mut p = CharPoly::zero();
        p.add_term(Monomial::new(n, wt), c);
        p
    }

    /// `e^wt`.
    pub fn exp(wt: Weight) -> Self {
        Self::monomial(0, wt)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Weight, BigRational)>>(it: I) -> Self {
        let mut p = CharPoly::zero();
        for (n, w, c) in it {
            p.add_term(Monomial::new(n, w), c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, n: i64, wt: &Weight) -> BigRational {
        self.terms
            .get(&Monomial::new(n, wt.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.q).min()
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.q).max()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn lowest(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next()
    }

    /// Distinct weights in the support.
    pub fn weights(&self) -> Vec<Weight> {
        let mut w: Vec<Weight> = self.terms.keys().map(|m| m.wt.clone()).collect();
        w.sort();
        w.dedup();
        w
    }

    pub fn scale(&self, c: &BigRational) -> CharPoly {
        if c.is_zero() {
            return CharPoly::zero();
        }
        CharPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Multiplication by `q^s`.
    pub fn shift_q(&self, s: i64) -> CharPoly {
        CharPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.q + s, m.wt.clone()), v.clone()))
                .collect(),
        }
    }

    /// Multiplication by `e^mu`.
    pub fn shift_wt(&self, mu: &Weight) -> CharPoly {
        CharPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.q, &m.wt + mu), v.clone()))
                .collect(),
        }
    }

    /// Drops all terms of q-degree above `n`.
    pub fn truncate(&self, n: i64) -> CharPoly {
        CharPoly {
            terms: self.terms.iter().filter(|(m, _)| m.q <= n).map(|(m, v)| (m.clone(), v.clone())).collect(),
        }
    }

    /// The bar involution `e^lambda -> e^{-lambda}`.
    pub fn bar(&self) -> CharPoly {
        CharPoly {
            terms: self.terms.iter().map(|(m, v)| (Monomial::new(m.q, -&m.wt), v.clone())).collect(),
        }
    }

    /// `q -> q^{-1}`.
    pub fn invert_q(&self) -> CharPoly {
        CharPoly {
            terms: self.terms.iter().map(|(m, v)| (Monomial::new(-m.q, m.wt.clone()), v.clone())).collect(),
        }
    }

    /// Value at `q = 1`, `e^lambda = 1`.
    pub fn total(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Specialization `q = 1` keeping the weights.
    pub fn at_q_one(&self) -> CharPoly {
        let mut p = CharPoly::zero();
        for (m, v) in &self.terms {
            p.add_term(Monomial::new(0, m.wt.clone()), v.clone());
        }
        p
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / d`, by long division from the top monomial.
    pub fn exact_divide(&self, d: &CharPoly) -> Result<CharPoly> {
        let (dlead, dc) = d.leading().ok_or(CharError::DivisionByZero)?;
        let (dlead, dc) = (dlead.clone(), dc.clone());
        let Some((flow, _)) = self.lowest() else { return Ok(CharPoly::zero()) };
        let (dlow, _) = d.lowest().unwrap();
        let floor = flow.div(dlow);
        let mut rem = self.clone();
        let mut quo = CharPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&dlead);
            if qm < floor {
                return Err(CharError::NotDivisible(format!("remainder {rem}")));
            }
            let qc = c / &dc;
            let t = CharPoly::term(qm.q, qm.wt.clone(), qc.clone());
            rem -= &(&t * d);
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }

    /// Finds `c` with `self = q^m * other` for a single integer `m`.
    pub fn q_ratio(&self, other: &CharPoly) -> Option<i64> {
        let (a, _) = self.lowest()?;
        let (b, _) = other.lowest()?;
        let m = a.q - b.q;
        (self == &other.shift_q(m)).then_some(m)
    }

    /// First monomial where `self` and `other` differ, in monomial order.
    pub fn first_difference(&self, other: &CharPoly) -> Option<(Monomial, BigRational, BigRational)> {
        let diff = self - other;
        diff.lowest().map(|(m, _)| {
            (m.clone(), self.coeff(m.q, &m.wt), other.coeff(m.q, &m.wt))
        })
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut parts = Vec::new();
            if !a.is_one() {
                parts.push(a.to_string());
            }
            match m.q {
                0 => {}
                1 => parts.push("q".into()),
                n => parts.push(format!("q^{n}")),
            }
            if !m.wt.is_zero() || parts.is_empty() {
                parts.push(format!("e^{}", m.wt));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &CharPoly {
    type Output = CharPoly;
    fn add(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;
    fn sub(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&CharPoly> for CharPoly {
    fn add_assign(&mut self, rhs: &CharPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&CharPoly> for CharPoly {
    fn sub_assign(&mut self, rhs: &CharPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;
    fn neg(self) -> CharPoly {
        CharPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Add for CharPoly {
    type Output = CharPoly;
    fn add(mut self, rhs: CharPoly) -> CharPoly {
        self += &rhs;
        self
    }
}

impl Sub for CharPoly {
    type Output = CharPoly;
    fn sub(mut self, rhs: CharPoly) -> CharPoly {
        self -= &rhs;
        self
    }
}

impl Mul for CharPoly {
    type Output = CharPoly;
    fn mul(self, rhs: CharPoly) -> CharPoly {
        &self * &rhs
    }
}

/// `D_i` on a single monomial, accumulated into `out` with coefficient `c`.
fn demazure_monomial(rs: &RootSystem, i: usize, m: &Monomial, c: &BigRational, out: &mut CharPoly) {
    // shifting by -j alpha_i; for i = 0, -j alpha_0 = j theta - j delta
    let (k, root, qstep) = if i == 0 {
        (-rs.theta_coroot().pair(&m.wt), -rs.theta(), 1i64)
    } else {
        (m.wt.coord(i), rs.simple_root(i), 0i64)
    };
    if k >= 0 {
        for j in 0..=k {
            out.add_term(Monomial::new(m.q - j * qstep, &m.wt - &root.scaled(j)), c.clone());
        }
    } else if k <= -2 {
        for j in 1..=(-k - 1) {
            out.add_term(Monomial::new(m.q + j * qstep, &m.wt + &root.scaled(j)), -c.clone());
        }
    }
}

/// The Demazure operator `D_i`, `i` an affine node.
pub fn demazure_op(rs: &RootSystem, i: usize, f: &CharPoly) -> CharPoly {
    let mut out = CharPoly::zero();
    for (m, c) in f.terms() {
        demazure_monomial(rs, i, m, c, &mut out);
    }
    out
}

/// `D_{i_1} ... D_{i_l}`, applied right to left.
pub fn demazure_word(rs: &RootSystem, word: &[usize], f: &CharPoly) -> CharPoly {
    word.iter().rev().fold(f.clone(), |acc, &i| demazure_op(rs, i, &acc))
}

/// `T_i = D_i - 1`.
pub fn t_op(rs: &RootSystem, i: usize, f: &CharPoly) -> CharPoly {
    &demazure_op(rs, i, f) - f
}

/// Level-zero image of a monomial under the affine simple reflection `s_i`.
pub fn reflect_monomial(rs: &RootSystem, i: usize, m: &Monomial) -> Monomial {
    if i == 0 {
        let (n, w) = crate::affine::s0_action(rs, m.q, &m.wt);
        Monomial::new(n, w)
    } else {
        Monomial::new(m.q, rs.reflect(i, &m.wt))
    }
}

/// `prod_{k=1}^{n} (1 - q^k)^{-1}` truncated above degree `order`, as q-coefficients.
fn inverse_q_pochhammer(n: i64, order: i64) -> Vec<BigInt> {
    let len = (order.max(-1) + 1) as usize;
    let mut c = vec![BigInt::zero(); len];
    if len == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for k in 1..=n as usize {
        // multiply by 1/(1-q^k): c[d] += c[d-k]
        for d in k..len {
            let prev = c[d - k].clone();
            c[d] += prev;
        }
    }
    c
}

/// Hilbert series `prod_i prod_{k=1}^{lambda_i} (1-q^k)^{-1}` of the ring of
/// symmetric functions attached to `lambda`.
pub fn freeness_factor(lambda: &Weight, order: i64) -> Result<CharSeries> {
    if !lambda.is_dominant() {
        return Err(CharError::NotDominant(lambda.clone()));
    }
    let len = (order + 1) as usize;
    let mut coeffs = vec![BigInt::zero(); len];
    coeffs[0] = BigInt::one();
    for &li in &lambda.0 {
        let factor = inverse_q_pochhammer(li, order);
        let mut next = vec![BigInt::zero(); len];
        for (a, ca) in coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in factor.iter().enumerate().take(len - a) {
                next[a + b] += ca * cb;
            }
        }
        coeffs = next;
    }
    let zero = Weight::zero(lambda.rank());
    let poly = CharPoly::from_terms(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(d, c)| (d as i64, zero.clone(), BigRational::from_integer(c))),
    );
    Ok(CharSeries { poly, order, watermark: order })
}

/// A q-series truncated above degree `order`, exact in degrees `<= watermark`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeries {
    poly: CharPoly,
    order: i64,
    watermark: i64,
}

impl CharSeries {
    /// An exact polynomial viewed as a series.
    pub fn from_poly(p: &CharPoly, order: i64) -> Self {
        CharSeries { poly: p.truncate(order), order, watermark: order }
    }

    pub fn with_watermark(p: &CharPoly, order: i64, watermark: i64) -> Self {
        CharSeries { poly: p.truncate(order), order, watermark: watermark.min(order) }
    }

    pub fn poly(&self) -> &CharPoly {
        &self.poly
    }

    /// The certified part: terms of degree at most the watermark.
    pub fn certified(&self) -> CharPoly {
        self.poly.truncate(self.watermark)
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn watermark(&self) -> i64 {
        self.watermark
    }

    pub fn add(&self, other: &CharSeries) -> CharSeries {
        let order = self.order.min(other.order);
        CharSeries {
            poly: (&self.poly + &other.poly).truncate(order),
            order,
            watermark: self.watermark.min(other.watermark),
        }
    }

    pub fn sub(&self, other: &CharSeries) -> CharSeries {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> CharSeries {
        CharSeries { poly: self.poly.scale(c), ..self.clone() }
    }

    pub fn mul(&self, other: &CharSeries) -> CharSeries {
        let order = self.order.min(other.order);
        let lo1 = self.poly.min_q().unwrap_or(self.watermark + 1);
        let lo2 = other.poly.min_q().unwrap_or(other.watermark + 1);
        let watermark = (self.watermark + lo2).min(other.watermark + lo1).min(order);
        CharSeries { poly: (&self.poly * &other.poly).truncate(order), order, watermark }
    }

    /// Product with an exact polynomial.
    pub fn mul_poly(&self, p: &CharPoly) -> CharSeries {
        self.mul(&CharSeries::from_poly(p, self.order.max(p.max_q().unwrap_or(0))))
            .with_order(self.order)
    }

    fn with_order(mut self, order: i64) -> CharSeries {
        self.order = order;
        self.watermark = self.watermark.min(order);
        self.poly = self.poly.truncate(order);
        self
    }

    /// Multiplication by `q^s`.
    pub fn shift_q(&self, s: i64) -> CharSeries {
        let watermark = if s > 0 { (self.watermark + s).min(self.order) } else { self.watermark + s };
        CharSeries { poly: self.poly.shift_q(s).truncate(self.order), order: self.order, watermark }
    }

    /// `D_i`, lowering the watermark by the largest downward q-shift the
    /// unknown tail could produce.
    pub fn demazure(&self, rs: &RootSystem, i: usize) -> CharSeries {
        let drop = if i == 0 {
            self.poly.weights().iter().map(|w| rs.theta_coroot().pair(w).abs()).max().unwrap_or(0)
        } else {
            0
        };
        CharSeries {
            poly: demazure_op(rs, i, &self.poly).truncate(self.order),
            order: self.order,
            watermark: self.watermark - drop,
        }
    }

    pub fn demazure_word(&self, rs: &RootSystem, word: &[usize]) -> CharSeries {
        word.iter().rev().fold(self.clone(), |acc, &i| acc.demazure(rs, i))
    }

    pub fn t_op(&self, rs: &RootSystem, i: usize) -> CharSeries {
        self.demazure(rs, i).sub(self)
    }

    /// Equality on the degrees both operands certify.
    pub fn agrees_with(&self, other: &CharSeries) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn common_watermark(&self, other: &CharSeries) -> i64 {
        self.watermark.min(other.watermark)
    }

    pub fn first_difference(&self, other: &CharSeries) -> Option<(Monomial, BigRational, BigRational)> {
        let v = self.common_watermark(other);
        self.poly.truncate(v).first_difference(&other.poly.truncate(v))
    }
}

impl fmt::Display for CharSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.certified(), self.watermark + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::new(label.parse().unwrap())
    }

    fn e(w: &[i64]) -> CharPoly {
        CharPoly::exp(Weight(w.to_vec()))
    }

    fn qe(n: i64, w: &[i64]) -> CharPoly {
        CharPoly::monomial(n, Weight(w.to_vec()))
    }

    #[test]
    fn a1_demazure_anchors() {
        let a1 = rs("A1");
        assert_eq!(demazure_op(&a1, 1, &e(&[1])), &e(&[1]) + &e(&[-1]));
        assert!(demazure_op(&a1, 1, &e(&[-1])).is_zero());
        assert_eq!(demazure_op(&a1, 1, &e(&[-2])), -&e(&[0]));
        assert_eq!(demazure_op(&a1, 0, &e(&[-1])), &e(&[-1]) + &qe(-1, &[1]));
        assert!(demazure_op(&a1, 0, &e(&[1])).is_zero());
    }

    #[test]
    fn t_op_anchors() {
        let a1 = rs("A1");
        assert_eq!(t_op(&a1, 1, &e(&[1])), e(&[-1]));
        assert_eq!(t_op(&a1, 1, &e(&[-1])), -&e(&[-1]));
        assert!(t_op(&a1, 0, &e(&[0])).is_zero());
        assert!(t_op(&a1, 1, &qe(3, &[0])).is_zero());
    }

    #[test]
    fn a2_braid_on_fundamental() {
        let a2 = rs("A2");
        let x = e(&[1, 0]);
        let lhs = demazure_word(&a2, &[1, 2, 1], &x);
        let rhs = demazure_word(&a2, &[2, 1, 2], &x);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, &(&e(&[1, 0]) + &e(&[-1, 1])) + &e(&[0, -1]));
        assert_eq!(demazure_word(&a2, &[], &x), x);
    }

    #[test]
    fn a1_loop_composition() {
        let a1 = rs("A1");
        let f = &e(&[1]) + &qe(1, &[-1]);
        assert_eq!(demazure_word(&a1, &[0, 1], &f), &qe(-1, &[1]) + &e(&[-1]));
    }

    #[test]
    fn defining_fraction() {
        for label in ["A2", "G2", "B3"] {
            let r = rs(label);
            for i in 0..=r.rank() {
                let root = if i == 0 {
                    // alpha_0 = delta - theta
                    Monomial::new(1, -r.theta())
                } else {
                    Monomial::new(0, r.simple_root(i))
                };
                let one_minus = &CharPoly::one(r.rank()) - &CharPoly::monomial(-root.q, -&root.wt);
                for a in -3..=3 {
                    for b in -2..=2 {
                        let mut w = vec![0; r.rank()];
                        w[0] = a;
                        w[r.rank() - 1] += b;
                        let m = Monomial::new(1, Weight(w));
                        let mono = CharPoly::monomial(m.q, m.wt.clone());
                        let lhs = &one_minus * &demazure_op(&r, i, &mono);
                        let s = reflect_monomial(&r, i, &m);
                        let image = CharPoly::monomial(s.q - root.q, &s.wt - &root.wt);
                        assert_eq!(lhs, &mono - &image, "{label} i={i} {m:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn division() {
        let one = CharPoly::one(1);
        let one_minus_q = &one - &qe(1, &[0]);
        let f = &one_minus_q * &e(&[1]);
        assert_eq!(f.exact_divide(&one_minus_q).unwrap(), e(&[1]));
        let g = &e(&[2]) - &qe(2, &[2]);
        assert_eq!(g.exact_divide(&one_minus_q).unwrap(), &e(&[2]) + &qe(1, &[2]));
        assert!(e(&[1]).exact_divide(&one_minus_q).is_err());
        assert!(e(&[1]).exact_divide(&CharPoly::zero()).is_err());
    }

    #[test]
    fn freeness() {
        let f = freeness_factor(&Weight(vec![0]), 10).unwrap();
        assert_eq!(*f.poly(), CharPoly::one(1));
        let f = freeness_factor(&Weight(vec![1]), 5).unwrap();
        assert_eq!(f.poly().len(), 6);
        assert!(f.poly().terms().all(|(_, c)| c.is_one()));
        // 1/((1-q)(1-q^2)): coefficients floor(n/2)+1
        let f = freeness_factor(&Weight(vec![2]), 8).unwrap();
        for n in 0..=8 {
            assert_eq!(f.poly().coeff(n, &Weight(vec![0])), rat(n / 2 + 1));
        }
        assert!(freeness_factor(&Weight(vec![-1]), 3).is_err());
    }

    #[test]
    fn series_shift_watermarks() {
        let f = freeness_factor(&Weight(vec![1]), 10).unwrap();
        let up = f.shift_q(3);
        assert_eq!(up.watermark(), 10);
        assert_eq!(up.poly().min_q(), Some(3));
        let down = f.shift_q(-2);
        assert_eq!(down.watermark(), 8);
        let a1 = rs("A1");
        let g = f.mul_poly(&(&e(&[1]) + &e(&[-1])));
        let h = g.demazure(&a1, 0);
        assert_eq!(h.watermark(), 9);
    }

    #[test]
    fn display_plain() {
        let p = &e(&[1]) + &qe(1, &[-1]).scale(&rat(-2));
        assert_eq!(p.to_string(), "e^(1) - 2*q*e^(-1)");
        assert_eq!(CharPoly::zero().to_string(), "0");
        assert_eq!(CharPoly::one(2).to_string(), "e^(0,0)");
    }
}
