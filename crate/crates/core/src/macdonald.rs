//! Nonsymmetric Macdonald polynomials `E_gamma(q, t)` by triangular
//! Gram-Schmidt against the constant-term density, computed as exact power
//! series in `q` over `Z[t]` and then reconstructed as rational functions.
//!
//! Conventions: the pairing is `<f, g> = ct(f g* Delta)` with `g*` the bar
//! involution and
//! `Delta = prod_{alpha>0} prod_{j>=0} (1 - q^j e^alpha)(1 - q^{j+1} e^{-alpha})
//!          / ((1 - t q^j e^alpha)(1 - t q^{j+1} e^{-alpha}))`,
//! and `E_gamma = e^gamma + (lower terms)` in the order of [`precedes`].

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::charpoly::CharPoly;
use crate::linalg::{nullspace, Field};
use crate::qtpoly::{BiPoly, LimitError, QTRat, UPoly};
use crate::rootdata::{RootSystem, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacError {
    #[error("integer overflow in the density expansion at order {0}")]
    Overflow(usize),
    #[error("Gram-Schmidt system is singular at {0}")]
    Singular(String),
    #[error("coefficient of e^{0} did not stabilize up to truncation order {1}")]
    Unstable(Weight, usize),
    #[error("orthogonality fails against e^{0}")]
    NotOrthogonal(Weight),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error("generic-t coefficients need a t specialization")]
    NeedsTLimit,
    #[error("unknown specialization {0:?}")]
    BadSpec(String),
}

pub type Result<T> = std::result::Result<T, MacError>;

type TPoly = Vec<i128>;

fn tp_trim(mut p: TPoly) -> TPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn tp_add_into(acc: &mut TPoly, p: &[i128], shift: usize, sign: i128, order: usize) -> Result<()> {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        if c != 0 {
            let v = c.checked_mul(sign).ok_or(MacError::Overflow(order))?;
            acc[k + shift] = acc[k + shift].checked_add(v).ok_or(MacError::Overflow(order))?;
        }
    }
    Ok(())
}

fn tp_mul_into(acc: &mut TPoly, a: &[i128], b: &[i128], order: usize) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Ok(());
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, 0);
    }
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                let v = x.checked_mul(y).ok_or(MacError::Overflow(order))?;
                acc[i + j] = acc[i + j].checked_add(v).ok_or(MacError::Overflow(order))?;
            }
        }
    }
    Ok(())
}

/// A power series in `q` with coefficients in `Z[t]`, truncated above `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    c: Vec<TPoly>,
}

impl TSeries {
    pub fn zero(order: usize) -> Self {
        TSeries { c: vec![vec![]; order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = vec![1];
        s
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|p| p.iter().all(|&x| x == 0))
    }

    fn min_q(&self) -> Option<usize> {
        self.c.iter().position(|p| p.iter().any(|&x| x != 0))
    }

    /// Coefficient of `q^n t^m`.
    pub fn coeff(&self, n: usize, m: usize) -> i128 {
        self.c.get(n).and_then(|p| p.get(m)).copied().unwrap_or(0)
    }

    /// `self += sign * t^tshift q^qshift * other`, truncated.
    fn add_shifted(&mut self, other: &TSeries, qshift: usize, tshift: usize, sign: i128) -> Result<()> {
        let order = self.order();
        for n in 0..=order {
            if n < qshift {
                continue;
            }
            let src = &other.c[n - qshift];
            if !src.is_empty() {
                tp_add_into(&mut self.c[n], src, tshift, sign, order)?;
            }
        }
        Ok(())
    }

    fn mul(&self, other: &TSeries) -> Result<TSeries> {
        let order = self.order();
        let mut out = TSeries::zero(order);
        for a in 0..=order {
            if self.c[a].is_empty() {
                continue;
            }
            for b in 0..=order - a {
                tp_mul_into(&mut out.c[a + b], &self.c[a], &other.c[b], order)?;
            }
        }
        out.trim();
        Ok(out)
    }

    fn sub(&self, other: &TSeries) -> Result<TSeries> {
        let mut out = self.clone();
        out.add_shifted(other, 0, 0, -1)?;
        out.trim();
        Ok(out)
    }

    fn neg(&self) -> TSeries {
        TSeries { c: self.c.iter().map(|p| p.iter().map(|x| -x).collect()).collect() }
    }

    /// Inverse of a series with constant term exactly 1.
    fn inverse_unit(&self) -> Option<Result<TSeries>> {
        if tp_trim(self.c[0].clone()) != vec![1] {
            return None;
        }
        let order = self.order();
        let mut x = TSeries::zero(order);
        x.c[0] = vec![1];
        for n in 1..=order {
            let mut acc: TPoly = vec![];
            for k in 1..=n {
                if let Err(e) = tp_mul_into(&mut acc, &self.c[k], &x.c[n - k], order) {
                    return Some(Err(e));
                }
            }
            x.c[n] = tp_trim(acc.into_iter().map(|v| -v).collect());
        }
        Some(Ok(x))
    }

    fn trim(&mut self) {
        for p in self.c.iter_mut() {
            *p = tp_trim(std::mem::take(p));
        }
    }

    fn truncated(&self, order: usize) -> TSeries {
        TSeries { c: self.c[..=order].to_vec() }
    }

    /// Integer series from rational `t`-polynomials, if every coefficient fits.
    fn from_upolys(s: &[UPoly]) -> Option<TSeries> {
        let c = s
            .iter()
            .map(|u| {
                u.coeffs()
                    .iter()
                    .map(|x| if x.is_integer() { i128::try_from(x.to_integer()).ok() } else { None })
                    .collect::<Option<TPoly>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(TSeries { c })
    }

    /// Coefficient of `q^n` as a polynomial in `t` over `Q`.
    fn t_coeff_rat(&self, n: usize) -> Vec<BigRational> {
        self.c[n].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }
}

/// Coefficients `[e^d] Delta` for a requested finite set of root-lattice points `d`.
pub struct DensityTable {
    order: usize,
    coeffs: HashMap<Vec<i64>, TSeries>,
}

impl DensityTable {
    pub fn new(rs: &RootSystem, needed: &[Vec<i64>], order: usize) -> Result<Self> {
        let r = rs.rank();
        let height = |k: &[i64]| k.iter().sum::<i64>();
        let mut s: HashMap<Vec<i64>, TSeries> = HashMap::from([(vec![0; r], TSeries::one(order))]);

        let mut dmax = vec![i64::MIN; r];
        for d in needed {
            for (m, x) in dmax.iter_mut().zip(d) {
                *m = (*m).max(*x);
            }
        }
        // each later step back down costs at least one power of q and lowers
        // coordinate i by at most theta_i
        let theta = rs.theta_root();
        let return_cost = |k: &[i64]| -> usize {
            k.iter()
                .zip(&dmax)
                .zip(theta)
                .map(|((x, m), th)| if x > m { ((x - m) + th - 1) / th } else { 0 })
                .max()
                .unwrap_or(0) as usize
        };

        // q-dependent factors: bounded support in the root lattice
        for a in rs.positive_roots() {
            for sign in [1i64, -1] {
                let step: Vec<i64> = a.iter().map(|x| x * sign).collect();
                for j in 1..=order {
                    s = Self::mul_factor(&s, &step, j, order, sign, &height, &return_cost, |_| true)?;
                }
            }
        }

        // q-free factors (1 - e^alpha)/(1 - t e^alpha) inside the window below the needed points
        let below = |k: &[i64]| k.iter().zip(&dmax).all(|(x, m)| x <= m);
        s.retain(|k, _| below(k));
        for a in rs.positive_roots() {
            s = Self::mul_factor(&s, a, 0, order, 1, &height, &|_| 0, below)?;
        }
        let coeffs = needed
            .iter()
            .map(|d| (d.clone(), s.get(d).cloned().unwrap_or_else(|| TSeries::zero(order))))
            .collect();
        Ok(DensityTable { order, coeffs })
    }

    /// Multiplies by `(1 - z)/(1 - t z)` with `z = q^j e^{step}`.
    fn mul_factor(
        s: &HashMap<Vec<i64>, TSeries>,
        step: &[i64],
        j: usize,
        order: usize,
        sign: i64,
        height: &dyn Fn(&[i64]) -> i64,
        cost: &dyn Fn(&[i64]) -> usize,
        keep: impl Fn(&[i64]) -> bool,
    ) -> Result<HashMap<Vec<i64>, TSeries>> {
        let mut keys: HashSet<Vec<i64>> = HashSet::new();
        for (k, ser) in s {
            let Some(lo) = ser.min_q() else { continue };
            let mut cur = k.clone();
            let mut deg = lo;
            while keep(&cur) && deg + cost(&cur) <= order {
                keys.insert(cur.clone());
                cur = cur.iter().zip(step).map(|(x, y)| x + y).collect();
                deg += j;
            }
        }
        let mut order_keys: Vec<Vec<i64>> = keys.into_iter().collect();
        order_keys.sort_by_key(|k| (height(k) * sign, k.clone()));
        let mut u: HashMap<Vec<i64>, TSeries> = HashMap::with_capacity(order_keys.len());
        for k in &order_keys {
            let mut val = s.get(k).cloned().unwrap_or_else(|| TSeries::zero(order));
            let prev: Vec<i64> = k.iter().zip(step).map(|(x, y)| x - y).collect();
            if let Some(p) = u.get(&prev) {
                val.add_shifted(p, j, 1, 1)?;
            }
            u.insert(k.clone(), val);
        }
        let mut out = HashMap::with_capacity(u.len());
        for k in &order_keys {
            let mut val = u[k].clone();
            let prev: Vec<i64> = k.iter().zip(step).map(|(x, y)| x - y).collect();
            if let Some(p) = u.get(&prev) {
                val.add_shifted(p, j, 0, -1)?;
            }
            val.trim();
            if val.min_q().is_some_and(|m| m + cost(k) <= order) {
                out.insert(k.clone(), val);
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `[e^d] Delta` for `d` in simple-root coordinates.
    pub fn coeff(&self, d: &[i64]) -> &TSeries {
        &self.coeffs[d]
    }
}

/// `<f, g> = ct(f g* Delta)` as a `q`-series over `Z[t]`, for integer combinations of weights.
pub fn density_ct_pair(rs: &RootSystem, f: &[(Weight, i64)], g: &[(Weight, i64)], order: usize) -> Result<TSeries> {
    let diffs: Vec<(Vec<i64>, i64)> = f
        .iter()
        .flat_map(|(a, ca)| g.iter().map(move |(b, cb)| (b - a, ca * cb)))
        .filter_map(|(d, c)| rs.weight_to_root(&d).map(|k| (k, c)))
        .collect();
    let needed: Vec<Vec<i64>> = diffs.iter().map(|(k, _)| k.clone()).collect();
    if needed.is_empty() {
        return Ok(TSeries::zero(order));
    }
    let table = DensityTable::new(rs, &needed, order)?;
    let mut out = TSeries::zero(order);
    for (k, c) in &diffs {
        out.add_shifted(table.coeff(k), 0, 0, *c as i128)?;
    }
    out.trim();
    Ok(out)
}

/// Sort key refining the triangular order.
fn order_key(rs: &RootSystem, nu: &Weight) -> (i64, usize) {
    let (dom, v) = rs.dominant_conjugate(nu);
    (rs.rho_vee_pairing2(&dom), rs.length(&v))
}

/// Strict order: `nu < mu` if `nu^+ < mu^+` in dominance, or `nu^+ = mu^+` and
/// the minimal `v` with `nu = v nu^+` is below that of `mu` in Bruhat order.
pub fn precedes(rs: &RootSystem, nu: &Weight, mu: &Weight) -> bool {
    if nu == mu {
        return false;
    }
    let (dn, vn) = rs.dominant_conjugate(nu);
    let (dm, vm) = rs.dominant_conjugate(mu);
    if dn == dm {
        return rs.bruhat_le(&vn, &vm);
    }
    match rs.weight_to_root(&(&dm - &dn)) {
        Some(c) => c.iter().all(|&x| x >= 0),
        None => false,
    }
}

/// Tie-breaking rule for the linear extension of [`precedes`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Forward,
    Reverse,
}

/// `{nu : nu <= gamma}`, listed along a linear extension of [`precedes`].
pub fn triangular_order_ideal(rs: &RootSystem, gamma: &Weight) -> Vec<Weight> {
    triangular_order_ideal_with(rs, gamma, TieBreak::Forward)
}

pub fn triangular_order_ideal_with(rs: &RootSystem, gamma: &Weight, tie: TieBreak) -> Vec<Weight> {
    let (dom, _) = rs.dominant_conjugate(gamma);
    let mut out: Vec<Weight> = rs
        .saturated_weights(&dom)
        .into_iter()
        .filter(|nu| nu == gamma || precedes(rs, nu, gamma))
        .collect();
    out.sort_by(|a, b| {
        let ka = order_key(rs, a);
        let kb = order_key(rs, b);
        ka.cmp(&kb).then_with(|| match tie {
            TieBreak::Forward => a.cmp(b),
            TieBreak::Reverse => b.cmp(a),
        })
    });
    out
}

/// A Laurent polynomial in `e^lambda` with coefficients in `Q(q, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPoly {
    pub gamma: Weight,
    pub conjugated: bool,
    pub coeffs: BTreeMap<Weight, QTRat>,
}

/// Which limit or substitution to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Specialization {
    TZero,
    TInfinity,
    QInverse,
}

impl FromStr for Specialization {
    type Err = MacError;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "t-0" | "t0" | "t-zero" => Ok(Specialization::TZero),
            "t-inf" | "tinf" | "t-infinity" => Ok(Specialization::TInfinity),
            "q-inv" | "qinv" | "q-inverse" => Ok(Specialization::QInverse),
            other => Err(MacError::BadSpec(other.to_string())),
        }
    }
}

pub fn parse_specs(s: &str) -> Result<Vec<Specialization>> {
    s.split(',').filter(|x| !x.trim().is_empty()).map(str::parse).collect()
}

impl EPoly {
    pub fn coeff(&self, w: &Weight) -> QTRat {
        self.coeffs.get(w).cloned().unwrap_or_else(<QTRat as Field>::zero)
    }

    /// The bar involution `e^lambda -> e^{-lambda}`.
    pub fn bar(&self) -> EPoly {
        EPoly {
            gamma: self.gamma.clone(),
            conjugated: !self.conjugated,
            coeffs: self.coeffs.iter().map(|(w, c)| (-w, c.clone())).collect(),
        }
    }

    /// Applies a t-limit and then, if requested, `q -> q^{-1}`.
    pub fn specialize(&self, modes: &[Specialization]) -> Result<CharPoly> {
        let tlimit = modes
            .iter()
            .find(|m| matches!(m, Specialization::TZero | Specialization::TInfinity))
            .ok_or(MacError::NeedsTLimit)?;
        let mut out = CharPoly::zero();
        for (w, c) in &self.coeffs {
            let terms = match tlimit {
                Specialization::TZero => c.limit_t_zero()?,
                _ => c.limit_t_infinity()?,
            };
            for (n, a) in terms {
                out += &CharPoly::term(n, w.clone(), a);
            }
        }
        if modes.contains(&Specialization::QInverse) {
            out = out.invert_q();
        }
        Ok(out)
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(w, c)| format!("[{c}]*e^{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Options for [`gram_schmidt_e`].
#[derive(Debug, Clone, Copy)]
pub struct GsOptions {
    /// Truncation order; `None` picks `4 <gamma^+, sum alpha_i^vee> + 8`.
    pub order: Option<usize>,
    pub tie: TieBreak,
    /// Extra rounds of `+5` if reconstruction does not stabilize.
    pub max_retries: usize,
}

impl Default for GsOptions {
    fn default() -> Self {
        GsOptions { order: None, tie: TieBreak::Forward, max_retries: 4 }
    }
}

pub fn default_order(rs: &RootSystem, gamma: &Weight) -> usize {
    let (dom, _) = rs.dominant_conjugate(gamma);
    (4 * dom.level() + 8) as usize
}

/// `E_gamma(q, t)` by Gram-Schmidt.
pub fn gram_schmidt_e(rs: &RootSystem, gamma: &Weight, opts: GsOptions) -> Result<EPoly> {
    let ideal = triangular_order_ideal_with(rs, gamma, opts.tie);
    let lower: Vec<Weight> = ideal.iter().filter(|w| *w != gamma).cloned().collect();
    let mut coeffs = BTreeMap::from([(gamma.clone(), <QTRat as Field>::one())]);
    if lower.is_empty() {
        return Ok(EPoly { gamma: gamma.clone(), conjugated: false, coeffs });
    }
    let mut order = opts.order.unwrap_or_else(|| default_order(rs, gamma));
    for _ in 0..=opts.max_retries {
        match solve_at(rs, gamma, &lower, order) {
            Ok(found) => {
                coeffs.extend(found);
                return Ok(EPoly { gamma: gamma.clone(), conjugated: false, coeffs });
            }
            Err(MacError::Unstable(..)) => order += 5,
            Err(e) => return Err(e),
        }
    }
    Err(MacError::Unstable(gamma.clone(), order))
}

fn solve_at(rs: &RootSystem, gamma: &Weight, lower: &[Weight], order: usize) -> Result<BTreeMap<Weight, QTRat>> {
    let full = order + 5;
    let mut all: Vec<Weight> = lower.to_vec();
    all.push(gamma.clone());
    let root = |w: &Weight| rs.weight_to_root(w).expect("ideal lies in one root-lattice coset");
    let mut needed: Vec<Vec<i64>> = Vec::new();
    for nu in lower {
        for mu in &all {
            needed.push(root(&(nu - mu)));
        }
    }
    needed.sort();
    needed.dedup();
    let table = DensityTable::new(rs, &needed, full)?;
    let pair = |nu: &Weight, mu: &Weight| table.coeff(&root(&(nu - mu))).clone();

    // rows and columns sorted by height: the system is unitriangular mod q
    let mut idx: Vec<usize> = (0..lower.len()).collect();
    idx.sort_by_key(|&k| rs.rho_vee_pairing2(&lower[k]));
    let n = idx.len();
    let mut m: Vec<Vec<TSeries>> = idx
        .iter()
        .map(|&r| idx.iter().map(|&c| pair(&lower[r], &lower[c])).collect())
        .collect();
    let mut rhs: Vec<TSeries> = idx.iter().map(|&r| pair(&lower[r], gamma).neg()).collect();

    let singular = || MacError::Singular(gamma.to_string());
    let mut inv_piv = Vec::with_capacity(n);
    for k in 0..n {
        let inv = m[k][k].inverse_unit().ok_or_else(singular)??;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].mul(&inv)?;
            for j in k..n {
                let d = f.mul(&m[k][j])?;
                m[i][j] = m[i][j].sub(&d)?;
            }
            let d = f.mul(&rhs[k])?;
            rhs[i] = rhs[i].sub(&d)?;
        }
        inv_piv.push(inv);
    }
    let mut x = vec![TSeries::zero(full); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k].clone();
        for j in k + 1..n {
            let d = m[k][j].mul(&x[j])?;
            acc = acc.sub(&d)?;
        }
        x[k] = acc.mul(&inv_piv[k])?;
    }

    let mut dens: Vec<BiPoly> = vec![BiPoly::one()];
    let mut out = BTreeMap::new();
    for (pos, &k) in idx.iter().enumerate() {
        let series = &x[pos];
        let a = reconstruct(&series.truncated(order), series, &mut dens);
        let b = reconstruct(series, series, &mut dens);
        match (a, b) {
            (Some(a), Some(b)) if a == b => {
                if !<QTRat as Field>::is_zero(&a) {
                    out.insert(lower[k].clone(), a);
                }
            }
            _ => return Err(MacError::Unstable(lower[k].clone(), order)),
        }
    }

    // orthogonality against every lower e^nu, checked on all computed orders
    let mut all_coeffs: Vec<(Weight, QTRat)> = out.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    all_coeffs.push((gamma.clone(), <QTRat as Field>::one()));
    let expanded: Option<Vec<Vec<UPoly>>> = all_coeffs.iter().map(|(_, c)| expand_in_q(c, full)).collect();
    let integral: Option<Vec<TSeries>> =
        expanded.as_ref().and_then(|ser| ser.iter().map(|s| TSeries::from_upolys(s)).collect());
    for nu in lower {
        let fast = integral.as_ref().and_then(|ser| {
            let mut acc = TSeries::zero(full);
            for ((mu, _), s) in all_coeffs.iter().zip(ser) {
                let p = pair(nu, mu);
                let prod = s.mul(&p).ok()?;
                acc.add_shifted(&prod, 0, 0, 1).ok()?;
            }
            Some(!acc.is_zero())
        });
        let residual = match (fast, &expanded) {
            (Some(r), _) => r,
            (None, Some(ser)) => {
                let mut acc = vec![UPoly::zero(); full + 1];
                for ((mu, _), s) in all_coeffs.iter().zip(ser) {
                    let p = pair(nu, mu);
                    for n in 0..=full.min(p.order()) {
                        let pt = UPoly::from_coeffs(p.t_coeff_rat(n));
                        if pt.is_zero() {
                            continue;
                        }
                        for (k, sk) in s.iter().enumerate().take(full + 1 - n) {
                            if !sk.is_zero() {
                                acc[n + k] = acc[n + k].add(&sk.mul(&pt));
                            }
                        }
                    }
                }
                acc.iter().any(|p| !p.is_zero())
            }
            (None, None) => {
                let common = all_coeffs.iter().fold(BiPoly::one(), |l, (_, c)| lcm(&l, c.den()));
                let mut acc: Vec<BiPoly> = vec![BiPoly::zero(); full + 1];
                for (mu, c) in &all_coeffs {
                    let scaled = c.num().mul(&common.exact_div(c.den()).expect("lcm"));
                    add_bipoly_times_series(&mut acc, &scaled, &pair(nu, mu));
                }
                acc.iter().any(|p| !p.is_zero())
            }
        };
        if residual {
            return Err(MacError::NotOrthogonal(nu.clone()));
        }
    }
    Ok(out)
}

/// Power series in `q` with coefficients in `Q[t]`, when the denominator is a
/// nonzero constant at `q = 0`.
fn expand_in_q(c: &QTRat, order: usize) -> Option<Vec<UPoly>> {
    let den: Vec<UPoly> = (0..=order).map(|a| UPoly::from_coeffs(q_slice_t(c.den(), a))).collect();
    let num: Vec<UPoly> = (0..=order).map(|a| UPoly::from_coeffs(q_slice_t(c.num(), a))).collect();
    if den[0].coeffs().len() != 1 {
        return None;
    }
    let d0 = den[0].coeff(0);
    let mut s: Vec<UPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut x = num[n].clone();
        for k in 1..=n {
            if !den[k].is_zero() {
                x = x.sub(&den[k].mul(&s[n - k]));
            }
        }
        s.push(x.scale(&(<BigRational as num_traits::One>::one() / &d0)));
    }
    Some(s)
}

/// The coefficient of `q^a` as a list of t-coefficients.
fn q_slice_t(p: &BiPoly, a: usize) -> Vec<BigRational> {
    p.t_coeffs().iter().map(|u| u.coeff(a)).collect()
}

fn lcm(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let g = a.gcd(b);
    a.mul(&b.exact_div(&g).expect("gcd divides"))
}

/// `acc += p * s` on q-degrees up to the length of `acc`.
fn add_bipoly_times_series(acc: &mut [BiPoly], p: &BiPoly, s: &TSeries) {
    let order = acc.len() - 1;
    for n in 0..=order.min(s.order()) {
        let st = BiPoly::from_t_coeffs(
            s.t_coeff_rat(n).into_iter().map(UPoly::constant).collect(),
        );
        if st.is_zero() {
            continue;
        }
        for (a, tcoef) in (0..=p.deg_q().unwrap_or(0)).map(|a| (a, q_slice(p, a))) {
            if a + n > order || tcoef.is_zero() {
                continue;
            }
            acc[a + n] = acc[a + n].add(&tcoef.mul(&st));
        }
    }
}

/// The coefficient of `q^a` as a polynomial in `t` (stored with constant q-coefficients).
fn q_slice(p: &BiPoly, a: usize) -> BiPoly {
    BiPoly::from_t_coeffs(p.t_coeffs().iter().map(|u| UPoly::constant(u.coeff(a))).collect())
}

/// `(Q s)` restricted to q-degrees `lo..=hi`, as t-polynomials.
fn times_series(qpoly: &BiPoly, s: &TSeries, hi: usize) -> Vec<BiPoly> {
    let mut acc = vec![BiPoly::zero(); hi + 1];
    add_bipoly_times_series(&mut acc, qpoly, s);
    acc
}

/// Rational reconstruction of a series by bivariate Padé approximation.
/// `fit` supplies the equations; `check` must be reproduced exactly.
fn reconstruct(fit: &TSeries, check: &TSeries, dens: &mut Vec<BiPoly>) -> Option<QTRat> {
    let nfit = fit.order();
    let accept = |qden: &BiPoly, d: usize| -> Option<QTRat> {
        let prod = times_series(qden, check, check.order());
        if prod.iter().skip(d + 1).any(|p| !p.is_zero()) {
            return None;
        }
        let num = prod
            .iter()
            .take(d + 1)
            .enumerate()
            .fold(BiPoly::zero(), |acc, (a, tp)| {
                acc.add(&BiPoly::from_t_coeffs(
                    tp.t_coeffs().iter().map(|u| UPoly::monomial(a, u.coeff(0))).collect(),
                ))
            });
        Some(QTRat::new(num, qden.clone()))
    };
    let dmax = nfit.saturating_sub(2) / 2;

    // denominators seen for sibling coefficients first
    for qden in dens.clone() {
        let dq = qden.deg_q().unwrap_or(0);
        let prod = times_series(&qden, fit, nfit);
        let Some(top) = prod.iter().rposition(|p| !p.is_zero()) else {
            return Some(<QTRat as Field>::zero());
        };
        if top <= dmax && dq <= dmax {
            if let Some(r) = accept(&qden, top) {
                return Some(r);
            }
        }
    }

    let tdeg = (0..=nfit).map(|n| fit.c[n].len()).max().unwrap_or(0);
    for total in 0..=(dmax + tdeg) {
        for d in 0..=total.min(dmax) {
            let e = total - d;
            if e > tdeg {
                continue;
            }
            if let Some(qden) = pade_denominator(fit, d, e) {
                if let Some(r) = accept(&qden, d) {
                    if !dens.contains(r.den()) {
                        dens.push(r.den().clone());
                    }
                    return Some(r);
                }
            }
        }
    }
    None
}

/// A nonzero `Q` with `deg_q Q <= d`, `deg_t Q <= e`, `Q(0, t) != 0` and
/// `[q^n](Q s) = 0` for `d < n <= order`.
const SCREEN_PRIME: u64 = (1 << 61) - 1;

/// Rank modulo a large prime, a lower bound for the rank over `Q`.
fn rank_mod_p(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    let p = SCREEN_PRIME;
    let reduce = |x: &BigRational| -> Option<u64> {
        let pb = BigInt::from(p);
        let n = ((x.numer() % &pb) + &pb) % &pb;
        let d = ((x.denom() % &pb) + &pb) % &pb;
        let n = u64::try_from(n).ok()?;
        let d = u64::try_from(d).ok()?;
        (d != 0).then(|| mulmod(n, powmod(d, p - 2, p), p))
    };
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for r in rows {
        match r.iter().map(reduce).collect::<Option<Vec<u64>>>() {
            Some(v) => m.push(v),
            // a denominator divisible by p: give up on the screen
            None => return 0,
        }
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        let inv = powmod(m[rank][col], p - 2, p);
        let prow: Vec<u64> = m[rank].iter().map(|&x| mulmod(x, inv, p)).collect();
        for r in rank + 1..m.len() {
            let f = m[r][col];
            if f != 0 {
                for (x, &y) in m[r].iter_mut().zip(&prow).skip(col) {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn pade_denominator(s: &TSeries, d: usize, e: usize) -> Option<BiPoly> {
    let nfit = s.order();
    let unknowns: Vec<(usize, usize)> = (0..=d).flat_map(|a| (0..=e).map(move |b| (a, b))).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for n in d + 1..=nfit {
        let width = (0..=d).map(|a| s.c[n - a].len()).max().unwrap_or(0) + e;
        for m in 0..width {
            let row: Vec<BigRational> = unknowns
                .iter()
                .map(|&(a, b)| {
                    if m >= b {
                        BigRational::from_integer(BigInt::from(s.coeff(n - a, m - b)))
                    } else {
                        <BigRational as Zero>::zero()
                    }
                })
                .collect();
            if row.iter().any(|x| !Zero::is_zero(x)) {
                rows.push(row);
            }
        }
    }
    // a kernel of dimension two or more cannot single out a denominator
    if rows.len() + 1 < unknowns.len() || rank_mod_p(&rows, unknowns.len()) == unknowns.len() {
        return None;
    }
    let basis = nullspace(&rows, unknowns.len());
    let v = basis
        .into_iter()
        .find(|v| unknowns.iter().zip(v).any(|(&(a, _), x)| a == 0 && !Zero::is_zero(x)))?;
    let q = BiPoly::from_terms(unknowns.iter().zip(v).map(|(&(a, b), x)| (a, b, x)));
    Some(q)
}

/// `E^dagger_gamma = bar(E_gamma)` specialized, for a weight `gamma`.
pub fn e_dagger_specialized(rs: &RootSystem, gamma: &Weight, modes: &[Specialization]) -> Result<CharPoly> {
    gram_schmidt_e(rs, gamma, GsOptions::default())?.bar().specialize(modes)
}
