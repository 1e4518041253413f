//! Exact polynomials and rational functions over `Q` in one variable `q`
//! ([`UPoly`], [`QRat`]) and in two variables `q, t` ([`BiPoly`], [`QTRat`]).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense univariate polynomial, coefficients from degree 0 up, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<BigRational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(a: BigRational) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// `a x^k`.
    pub fn monomial(k: usize, a: BigRational) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = a;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.c.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn lc(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, a: &BigRational) -> UPoly {
        if a.is_zero() {
            return UPoly::zero();
        }
        UPoly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// Euclidean division, `self = q * d + r`.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lc();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] / &lc;
            if !f.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] -= &f * b;
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&(BigRational::one() / self.lc()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a)
    }

    /// Truncation to degrees `< n`.
    pub fn truncate(&self, n: usize) -> UPoly {
        Self::from_coeffs(self.c.iter().take(n).cloned().collect())
    }

    /// `x^{deg} p(1/x)` for the given degree bound.
    pub fn reverse(&self, deg: usize) -> UPoly {
        let mut c = vec![BigRational::zero(); deg + 1];
        for (k, a) in self.c.iter().enumerate() {
            c[deg - k] = a.clone();
        }
        Self::from_coeffs(c)
    }
}

/// A univariate rational function `num / den`, reduced with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: UPoly,
    den: UPoly,
}

impl QRat {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QRat { num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let lc = d.lc();
        QRat { num: n.scale(&(BigRational::one() / &lc)), den: d.monic() }
    }

    pub fn from_poly(p: UPoly) -> Self {
        QRat { num: p, den: UPoly::one() }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self::from_poly(UPoly::constant(a))
    }

    /// `sum_k c_k x^k` with possibly negative exponents.
    pub fn from_laurent(terms: &[(i64, BigRational)]) -> Self {
        let low = terms.iter().map(|(k, _)| *k).min().unwrap_or(0).min(0);
        let mut num = UPoly::zero();
        for (k, c) in terms {
            num = num.add(&UPoly::monomial((k - low) as usize, c.clone()));
        }
        Self::new(num, UPoly::monomial((-low) as usize, BigRational::one()))
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    /// The Laurent expansion when the denominator is a monomial.
    pub fn to_laurent(&self) -> Option<Vec<(i64, BigRational)>> {
        let k = self.den.valuation()?;
        if self.den.degree() != Some(k) {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j as i64 - k as i64, c.clone()))
                .collect(),
        )
    }
}

impl crate::linalg::Field for QRat {
    fn zero() -> Self {
        QRat::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        QRat::from_poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return QRat::new(self.num.add(&o.num), self.den.clone());
        }
        QRat::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        QRat::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        QRat::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
    fn neg(&self) -> Self {
        QRat { num: self.num.neg(), den: self.den.clone() }
    }
}

/// A polynomial in `q, t` stored as a polynomial in `t` with [`UPoly`]
/// coefficients in `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    c: Vec<UPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::from_t_coeffs(vec![UPoly::one()])
    }

    pub fn constant(a: BigRational) -> Self {
        Self::from_t_coeffs(vec![UPoly::constant(a)])
    }

    /// `a q^i t^j`.
    pub fn monomial(i: usize, j: usize, a: BigRational) -> Self {
        let mut c = vec![UPoly::zero(); j + 1];
        c[j] = UPoly::monomial(i, a);
        Self::from_t_coeffs(c)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    pub fn from_t_coeffs(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        BiPoly { c }
    }

    /// From `(q-exponent, t-exponent, coefficient)` triples.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, BigRational)>>(it: I) -> Self {
        let mut out = BiPoly::zero();
        for (i, j, a) in it {
            out = out.add(&Self::monomial(i, j, a));
        }
        out
    }

    pub fn from_upoly_q(p: UPoly) -> Self {
        Self::from_t_coeffs(vec![p])
    }

    pub fn t_coeffs(&self) -> &[UPoly] {
        &self.c
    }

    pub fn t_coeff(&self, j: usize) -> UPoly {
        self.c.get(j).cloned().unwrap_or_else(UPoly::zero)
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.c.get(j).map(|p| p.coeff(i)).unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_q(&self) -> Option<usize> {
        self.c.iter().filter_map(|p| p.degree()).max()
    }

    /// Lowest power of `t` present.
    pub fn val_t(&self) -> Option<usize> {
        self.c.iter().position(|p| !p.is_zero())
    }

    /// Nonzero terms as `(q-exponent, t-exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(usize, usize, BigRational)> {
        let mut out = Vec::new();
        for (j, p) in self.c.iter().enumerate() {
            for (i, a) in p.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out.push((i, j, a.clone()));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let n = self.c.len().max(o.c.len());
        Self::from_t_coeffs((0..n).map(|k| self.t_coeff(k).add(&o.t_coeff(k))).collect())
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        let n = self.c.len().max(o.c.len());
        Self::from_t_coeffs((0..n).map(|k| self.t_coeff(k).sub(&o.t_coeff(k))).collect())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly { c: self.c.iter().map(|p| p.neg()).collect() }
    }

    pub fn scale(&self, a: &BigRational) -> BiPoly {
        Self::from_t_coeffs(self.c.iter().map(|p| p.scale(a)).collect())
    }

    pub fn scale_q(&self, p: &UPoly) -> BiPoly {
        Self::from_t_coeffs(self.c.iter().map(|x| x.mul(p)).collect())
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let mut c = vec![UPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::from_t_coeffs(c)
    }

    /// Multiplication by `t^k`.
    pub fn shift_t(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut c = vec![UPoly::zero(); k];
        c.extend(self.c.iter().cloned());
        BiPoly { c }
    }

    /// Content in `Q[q]`: monic gcd of the `t`-coefficients.
    pub fn content_q(&self) -> UPoly {
        self.c.iter().fold(UPoly::zero(), |g, p| g.gcd(p))
    }

    fn div_q(&self, p: &UPoly) -> BiPoly {
        Self::from_t_coeffs(self.c.iter().map(|x| x.exact_div(p).expect("content divides")).collect())
    }

    fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        self.div_q(&self.content_q())
    }

    /// Pseudo-remainder in `t`.
    fn prem(&self, d: &BiPoly) -> BiPoly {
        let dd = d.deg_t().expect("nonzero divisor");
        let lc = d.c[dd].clone();
        let mut r = self.clone();
        while let Some(dr) = r.deg_t() {
            if dr < dd {
                break;
            }
            let top = r.c[dr].clone();
            r = r.scale_q(&lc).sub(&d.scale_q(&top).shift_t(dr - dd));
        }
        r
    }

    /// Greatest common divisor, normalized by [`BiPoly::normalize_sign`] up to a rational factor.
    pub fn gcd(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let c = self.content_q().gcd(&o.content_q());
        let (mut a, mut b) = (self.primitive_part(), o.primitive_part());
        if a.deg_t() < b.deg_t() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale_q(&c)
    }

    /// Exact division in `Q[q][t]`.
    pub fn exact_div(&self, d: &BiPoly) -> Option<BiPoly> {
        let dd = d.deg_t()?;
        let lc = &d.c[dd];
        let mut r = self.clone();
        let mut quo = BiPoly::zero();
        while let Some(dr) = r.deg_t() {
            if dr < dd {
                return None;
            }
            let f = r.c[dr].exact_div(lc)?;
            let term = BiPoly::from_upoly_q(f).shift_t(dr - dd);
            r = r.sub(&term.mul(d));
            quo = quo.add(&term);
        }
        Some(quo)
    }

    /// Ordering used to pick the "first" monomial: total degree, then
    /// `t`-degree, then `q`-degree.
    fn term_key(i: usize, j: usize) -> (usize, usize, usize) {
        (i + j, j, i)
    }

    pub fn lowest_term(&self) -> Option<(usize, usize, BigRational)> {
        self.terms().into_iter().min_by_key(|(i, j, _)| Self::term_key(*i, *j))
    }

    /// Integer-primitive multiple with positive lowest term, and the factor used.
    pub fn integer_normal_form(&self) -> (BiPoly, BigRational) {
        let terms = self.terms();
        if terms.is_empty() {
            return (BiPoly::zero(), BigRational::one());
        }
        let l = terms.iter().fold(BigInt::one(), |a, (_, _, c)| a.lcm(c.denom()));
        let g = terms
            .iter()
            .fold(BigInt::zero(), |a, (_, _, c)| a.gcd(&(c.numer() * (&l / c.denom()))));
        let mut f = BigRational::new(l, g);
        let (_, _, low) = self.lowest_term().unwrap();
        if low.is_negative() {
            f = -f;
        }
        (self.scale(&f), f)
    }

    /// Value at a rational `t`.
    pub fn eval_t(&self, t: &BigRational) -> UPoly {
        self.c.iter().rev().fold(UPoly::zero(), |acc, p| acc.scale(t).add(p))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by(|a, b| Self::term_key(a.0, a.1).cmp(&Self::term_key(b.0, b.1)));
        for (k, (i, j, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || (*i == 0 && *j == 0) {
                parts.push(a.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("q".to_string()),
                _ => parts.push(format!("q^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("t".to_string()),
                _ => parts.push(format!("t^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// A rational function in `q, t`, kept in lowest terms with integer primitive
/// numerator and denominator and a positive lowest denominator term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QTRat {
    num: BiPoly,
    den: BiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LimitError {
    #[error("{0} diverges in the requested limit")]
    Diverges(String),
    #[error("limit {0} is not a Laurent polynomial in q")]
    NotLaurent(String),
}

impl QTRat {
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return <Self as crate::linalg::Field>::zero();
        }
        let g = num.gcd(&den);
        let n = num.exact_div(&g).expect("gcd divides numerator");
        let d = den.exact_div(&g).expect("gcd divides denominator");
        let (d, f) = d.integer_normal_form();
        let n = n.scale(&f);
        // move the rational content of the numerator into lowest form
        let (n_int, fnum) = n.integer_normal_form();
        let c = BigRational::one() / fnum;
        let (cn, cd) = (BigRational::from_integer(c.numer().clone()), BigRational::from_integer(c.denom().clone()));
        QTRat { num: n_int.scale(&cn), den: d.scale(&cd) }
    }

    pub fn from_bipoly(p: BiPoly) -> Self {
        Self::new(p, BiPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bipoly(BiPoly::constant(rat(n)))
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn inv(&self) -> QTRat {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at `t = 0`, as a Laurent polynomial in `q`.
    pub fn limit_t_zero(&self) -> Result<Vec<(i64, BigRational)>, LimitError> {
        if self.num.is_zero() {
            return Ok(vec![]);
        }
        let (a, b) = (self.num.val_t().unwrap(), self.den.val_t().unwrap());
        match a.cmp(&b) {
            Ordering::Greater => Ok(vec![]),
            Ordering::Less => Err(LimitError::Diverges(self.to_string())),
            Ordering::Equal => self.laurent_ratio(&self.num.t_coeff(a), &self.den.t_coeff(b)),
        }
    }

    /// Limit `t -> infinity`, as a Laurent polynomial in `q`.
    pub fn limit_t_infinity(&self) -> Result<Vec<(i64, BigRational)>, LimitError> {
        if self.num.is_zero() {
            return Ok(vec![]);
        }
        let (a, b) = (self.num.deg_t().unwrap(), self.den.deg_t().unwrap());
        match a.cmp(&b) {
            Ordering::Less => Ok(vec![]),
            Ordering::Greater => Err(LimitError::Diverges(self.to_string())),
            Ordering::Equal => self.laurent_ratio(&self.num.t_coeff(a), &self.den.t_coeff(b)),
        }
    }

    fn laurent_ratio(&self, n: &UPoly, d: &UPoly) -> Result<Vec<(i64, BigRational)>, LimitError> {
        QRat::new(n.clone(), d.clone())
            .to_laurent()
            .ok_or_else(|| LimitError::NotLaurent(self.to_string()))
    }

    /// Numerator and denominator strings.
    pub fn parts(&self) -> (String, String) {
        (self.num.to_string(), self.den.to_string())
    }
}

impl crate::linalg::Field for QTRat {
    fn zero() -> Self {
        QTRat { num: BiPoly::zero(), den: BiPoly::one() }
    }
    fn one() -> Self {
        QTRat { num: BiPoly::one(), den: BiPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return QTRat::new(self.num.add(&o.num), self.den.clone());
        }
        QTRat::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        QTRat::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        QTRat::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
    fn neg(&self) -> Self {
        QTRat { num: self.num.neg(), den: self.den.clone() }
    }
}

impl fmt::Display for QTRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl BiPoly {
    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn bp(terms: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, rat(c))))
    }

    #[test]
    fn upoly_gcd_and_division() {
        let a = UPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = UPoly::from_ints(&[1, 1]);
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.divrem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert!(UPoly::from_ints(&[1, 0, 1]).exact_div(&b).is_none());
    }

    #[test]
    fn qtrat_reduces() {
        // (1 - t^2) / (1 - t) = 1 + t
        let r = QTRat::new(bp(&[(0, 0, 1), (0, 2, -1)]), bp(&[(0, 0, 1), (0, 1, -1)]));
        assert_eq!(r, QTRat::from_bipoly(bp(&[(0, 0, 1), (0, 1, 1)])));
        // (q - q t) / (q - q^2 t) = (1 - t)/(1 - q t)
        let r = QTRat::new(bp(&[(1, 0, 1), (1, 1, -1)]), bp(&[(1, 0, 1), (2, 1, -1)]));
        assert_eq!(r.parts(), ("1-t".to_string(), "1-q*t".to_string()));
        // sign normalization
        let s = QTRat::new(bp(&[(0, 1, 1), (0, 0, -1)]), bp(&[(1, 1, 1), (0, 0, -1)]));
        assert_eq!(s, r);
    }

    #[test]
    fn qtrat_field_ops() {
        let a = QTRat::new(bp(&[(0, 0, 1), (0, 1, -1)]), bp(&[(0, 0, 1), (1, 1, -1)]));
        let b = QTRat::from_bipoly(bp(&[(1, 0, 2)]));
        let c = a.mul(&b).div(&b);
        assert_eq!(c, a);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a), a.mul(&QTRat::from_int(2)));
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn limits() {
        let a = QTRat::new(bp(&[(0, 0, 1), (0, 1, -1)]), bp(&[(0, 0, 1), (1, 1, -1)]));
        assert_eq!(a.limit_t_infinity().unwrap(), vec![(-1, rat(1))]);
        assert_eq!(a.limit_t_zero().unwrap(), vec![(0, rat(1))]);
        let t = QTRat::from_bipoly(bp(&[(0, 1, 1)]));
        assert!(t.limit_t_infinity().is_err());
        assert!(t.limit_t_zero().unwrap().is_empty());
        let bad = QTRat::new(bp(&[(0, 1, 1)]), bp(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(bad.limit_t_infinity().unwrap(), vec![(-1, rat(1))]);
        let notl = QTRat::new(bp(&[(0, 1, 1)]), bp(&[(0, 0, 1), (0, 1, 1), (1, 1, 1)]));
        assert!(notl.limit_t_infinity().is_err());
    }

    #[test]
    fn bipoly_gcd_multivariate() {
        let f = bp(&[(0, 0, 1), (1, 1, -1)]); // 1 - q t
        let g = bp(&[(0, 0, 1), (2, 0, 1), (0, 1, 3)]);
        let h = bp(&[(1, 0, 1), (0, 2, 1)]);
        let a = f.mul(&g);
        let b = f.mul(&h);
        let d = a.gcd(&b);
        assert!(d.exact_div(&f).is_some());
        assert_eq!(d.deg_t(), Some(1));
    }
}
