//! Exact q-analog arithmetic.
//!
//! [`IntLaurentPoly`] is a sparse Laurent polynomial in `q` with big-integer
//! coefficients. Everything downstream (symmetric function specializations,
//! every sieving polynomial) is built from it, and root-of-unity evaluation
//! is done by reduction modulo a cyclotomic polynomial so no floating point
//! ever enters a verification.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl IntLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds `c[0] + c[1] q + c[2] q^2 + ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, BigInt::from(c))))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// The constant value if this is a constant (zero counts).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + s, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "q -> q^0 collapses the polynomial");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at an integer point. Returns `None` when a negative exponent
    /// would leave the integers (only `x = +-1` is safe then).
    pub fn eval(&self, x: &BigInt) -> Option<BigInt> {
        let unit = x.abs().is_one();
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 && !unit {
                return None;
            }
            let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
            acc += c * p;
        }
        Some(acc)
    }

    /// Exact Laurent division. Fails when the quotient is not a Laurent
    /// polynomial with integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (Some(dmin), Some(ddeg)) = (divisor.min_exponent(), divisor.degree()) else {
            return Err(inexact());
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = divisor.terms[&ddeg].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; stops once the remainder's span is
        // shorter than the divisor's.
        while let (Some(rdeg), Some(rmin)) = (rem.degree(), rem.min_exponent()) {
            if rdeg - rmin < ddeg - dmin {
                return Err(inexact());
            }
            let rc = &rem.terms[&rdeg];
            let (qc, r) = rc.div_rem(&lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            let shift = rdeg - ddeg;
            let step = divisor.shift(shift).scale(&qc);
            rem = &rem - &step;
            quot.add_term(shift, qc);
        }
        Ok(quot)
    }

    /// Remainder modulo a monic polynomial. `self` must be a genuine
    /// polynomial.
    fn rem_monic(&self, modulus: &Self) -> Self {
        let mdeg = modulus.degree().expect("nonzero modulus");
        debug_assert!(modulus.terms[&mdeg].is_one());
        debug_assert!(self.is_polynomial());
        let mut rem = self.clone();
        while let Some(rdeg) = rem.degree() {
            if rdeg < mdeg {
                break;
            }
            let c = rem.terms[&rdeg].clone();
            rem = &rem - &modulus.shift(rdeg - mdeg).scale(&c);
        }
        rem
    }
}

impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntLaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<i64, String> =
            self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntLaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<i64, String>::deserialize(d)?;
        let mut out = IntLaurentPoly::zero();
        for (e, c) in map {
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl Add for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(mut self, rhs: IntLaurentPoly) -> IntLaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntLaurentPoly> for IntLaurentPoly {
    fn add_assign(&mut self, rhs: &IntLaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: IntLaurentPoly) -> IntLaurentPoly {
        &self - &rhs
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        IntLaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = IntLaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: IntLaurentPoly) -> IntLaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntLaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntLaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for IntLaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntLaurentPoly::one(), |acc, p| acc * p)
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`; `[0]_q = 0`.
pub fn q_int(m: u32) -> IntLaurentPoly {
    IntLaurentPoly::from_terms((0..m as i64).map(|e| (e, BigInt::one())))
}

/// `[m]!_q`, with the empty product equal to 1.
pub fn q_factorial(m: u32) -> IntLaurentPoly {
    (1..=m).map(q_int).product()
}

/// Gaussian binomial `[m choose r]_q`. Zero when `r > m`.
pub fn q_binomial(m: u32, r: u32) -> IntLaurentPoly {
    if r > m {
        return IntLaurentPoly::zero();
    }
    let denom = &q_factorial(r) * &q_factorial(m - r);
    q_factorial(m)
        .div_exact(&denom)
        .expect("q-factorial quotient must be exact")
}

/// Gaussian binomial with the usual zero convention for negative or
/// out-of-range arguments.
pub fn q_binomial_signed(m: i64, r: i64) -> IntLaurentPoly {
    if m < 0 || r < 0 || r > m {
        IntLaurentPoly::zero()
    } else {
        q_binomial(m as u32, r as u32)
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, IntLaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntLaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `m`-th cyclotomic polynomial, by exact division of `q^m - 1` by the
/// cyclotomic polynomials of the proper divisors of `m`. Memoized.
pub fn cyclotomic(m: u64) -> IntLaurentPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = &IntLaurentPoly::monomial(1, m as i64) - &IntLaurentPoly::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = num
            .div_exact(&cyclotomic(d))
            .expect("cyclotomic division must be exact");
    }
    cyclotomic_cache().lock().unwrap().insert(m, num.clone());
    num
}

/// Serde adapter writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact value of a polynomial at a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootEvaluation {
    Integer(#[serde(with = "decimal")] BigInt),
    /// The value is irrational; `residue` is the reduction modulo
    /// `Phi_{modulus_order}`.
    NonRational {
        residue: IntLaurentPoly,
        modulus_order: u64,
    },
}

impl RootEvaluation {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RootEvaluation::Integer(v) => Some(v),
            RootEvaluation::NonRational { .. } => None,
        }
    }
}

impl fmt::Display for RootEvaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootEvaluation::Integer(v) => write!(f, "{v}"),
            RootEvaluation::NonRational {
                residue,
                modulus_order,
            } => write!(f, "nonrational[{residue} mod Phi_{modulus_order}]"),
        }
    }
}

/// Evaluates `p` at `zeta^d` with `zeta = exp(2 pi i / m)`.
///
/// `zeta^d` is a primitive `m'`-th root with `m' = m / gcd(m, d)`, so the
/// exponents of `p` are scaled by `d' = d / gcd(m, d)` and folded mod `m'`
/// (this also absorbs negative exponents), then the result is reduced modulo
/// `Phi_{m'}`. Since `1, zeta', ..., zeta'^{phi(m')-1}` is a rational basis
/// of the cyclotomic field, the value is rational exactly when the residue
/// is constant.
pub fn eval_at_unity_root(p: &IntLaurentPoly, m: u64, d: u64) -> RootEvaluation {
    assert!(m >= 1, "root of unity order must be positive");
    let g = m.gcd(&d);
    let order = m / g;
    let step = (d / g) as i64;
    let folded = IntLaurentPoly::from_terms(
        p.terms()
            .map(|(e, c)| ((e * step).rem_euclid(order as i64), c.clone())),
    );
    let residue = folded.rem_monic(&cyclotomic(order));
    match residue.as_constant() {
        Some(v) => RootEvaluation::Integer(v),
        None => RootEvaluation::NonRational {
            residue,
            modulus_order: order,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn p(c: &[i64]) -> IntLaurentPoly {
        IntLaurentPoly::from_coeffs(c)
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0).is_zero());
        assert!(q_int(1).is_one());
        assert_eq!(q_int(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_factorial_examples() {
        assert!(q_factorial(0).is_one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        // [2]_q [3]_q multiplied out by hand
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        assert!(q_binomial(5, 0).is_one());
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial_signed(2, -1).is_zero());
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_is_q_m_minus_one() {
        for m in 1..=30u64 {
            let prod: IntLaurentPoly = (1..=m).filter(|d| m % d == 0).map(cyclotomic).product();
            let expect = &IntLaurentPoly::monomial(1, m as i64) - &IntLaurentPoly::one();
            assert_eq!(prod, expect, "m = {m}");
        }
    }

    #[test]
    fn eval_examples() {
        let x = p(&[1, 1, 2, 1, 1]);
        assert_eq!(eval_at_unity_root(&x, 4, 4), RootEvaluation::Integer(6.into()));
        assert_eq!(eval_at_unity_root(&x, 4, 2), RootEvaluation::Integer(2.into()));
        assert_eq!(eval_at_unity_root(&x, 4, 1), RootEvaluation::Integer(0.into()));
        assert_eq!(eval_at_unity_root(&x, 4, 0), RootEvaluation::Integer(6.into()));
    }

    #[test]
    fn eval_nonrational_is_reported() {
        // 1 + q at a primitive cube root of unity is -zeta^2, not rational
        let r = eval_at_unity_root(&p(&[1, 1]), 3, 1);
        assert!(matches!(r, RootEvaluation::NonRational { modulus_order: 3, .. }));
    }

    #[test]
    fn eval_handles_negative_exponents() {
        // q^-1 + q at i is -i + i = 0
        let x = &IntLaurentPoly::monomial(1, -1) + &IntLaurentPoly::q();
        assert_eq!(eval_at_unity_root(&x, 4, 1), RootEvaluation::Integer(0.into()));
    }

    #[test]
    fn div_exact_rejects_remainder() {
        assert!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])).is_err());
        assert_eq!(p(&[1, 0, -1]).div_exact(&p(&[1, 1])).unwrap(), p(&[1, -1]));
        let lp = IntLaurentPoly::monomial(2, -3);
        assert_eq!(lp.div_exact(&IntLaurentPoly::monomial(2, -1)).unwrap(), IntLaurentPoly::monomial(1, -2));
    }

    #[test]
    fn display_and_json() {
        let x = &p(&[1, -2, 0, 1]) + &IntLaurentPoly::monomial(3, -1);
        assert_eq!(x.to_string(), "3q^-1 + 1 - 2q + q^3");
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"-1":"3","0":"1","1":"-2","3":"1"}"#);
        let back: IntLaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for m in 0..=20u32 {
            for r in 0..=m {
                assert_eq!(q_binomial(m, r), q_binomial(m, m - r));
                if r >= 1 && r < m {
                    let rhs = &q_binomial(m - 1, r - 1) + &q_binomial(m - 1, r).shift(r as i64);
                    assert_eq!(q_binomial(m, r), rhs, "pascal ({m},{r})");
                }
            }
        }
    }

    fn float_eval(x: &IntLaurentPoly, m: u64, d: u64) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * d as f64 / m as f64);
        x.terms()
            .map(|(e, c)| {
                let c: f64 = c.to_string().parse().unwrap();
                z.powi(e as i32) * c
            })
            .sum()
    }

    #[test]
    fn exact_eval_agrees_with_floating_point() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let len = rng.gen_range(1..10);
            let lo = rng.gen_range(-4..3);
            let x = IntLaurentPoly::from_terms(
                (0..len).map(|i| (lo + i as i64, BigInt::from(rng.gen_range(-5..=5)))),
            );
            let m = rng.gen_range(1..=16u64);
            let d = rng.gen_range(0..=2 * m);
            let exact = eval_at_unity_root(&x, m, d);
            let approx = float_eval(&x, m, d);
            match exact {
                RootEvaluation::Integer(v) => {
                    let v: f64 = v.to_string().parse().unwrap();
                    assert!((approx - Complex64::new(v, 0.0)).norm() < 1e-6, "{x} m={m} d={d}");
                }
                RootEvaluation::NonRational { .. } => {
                    // an irrational value cannot be a real integer
                    let near_int = (approx.re - approx.re.round()).abs() < 1e-6 && approx.im.abs() < 1e-6;
                    assert!(!near_int, "{x} m={m} d={d} looked rational: {approx}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn eval_at_full_power_is_value_at_one(
            coeffs in prop::collection::vec(-20i64..20, 0..12),
            lo in -5i64..5,
            m in 1u64..20,
        ) {
            let x = IntLaurentPoly::from_coeffs(&coeffs).shift(lo);
            prop_assert_eq!(eval_at_unity_root(&x, m, m), RootEvaluation::Integer(x.value_at_one()));
        }

        #[test]
        fn product_then_divide_round_trips(
            a in prop::collection::vec(-9i64..9, 1..8),
            b in prop::collection::vec(-9i64..9, 1..6),
        ) {
            let pa = IntLaurentPoly::from_coeffs(&a);
            let pb = IntLaurentPoly::from_coeffs(&b);
            prop_assume!(!pb.is_zero());
            let prod = &pa * &pb;
            prop_assert_eq!(prod.div_exact(&pb).unwrap(), pa);
        }
    }
}
