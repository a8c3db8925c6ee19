//! Two-row Schur and complete homogeneous functions at exact points, and
//! the sieving polynomials built from them.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{q_binomial_signed, q_int, IntLaurentPoly};
use crate::tableaux::{ssyt_content_counts, TwoRowShape};

/// An ordered list of exact evaluation values for the variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecPoint {
    pub values: Vec<IntLaurentPoly>,
}

impl SpecPoint {
    pub fn new(values: Vec<IntLaurentPoly>) -> Self {
        Self { values }
    }

    /// `(1, q^step, q^{2 step}, ..., q^{(n-1) step})`.
    pub fn principal(n: u32, step: i64) -> Self {
        Self::new((0..n as i64).map(|i| IntLaurentPoly::monomial(1, i * step)).collect())
    }

    /// `(1, ..., 1)` with `n` entries.
    pub fn ones(n: u32) -> Self {
        Self::new(vec![IntLaurentPoly::one(); n as usize])
    }

    pub fn integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| IntLaurentPoly::constant(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `s_shape(point)` as a sum over semistandard tableaux.
pub fn schur_eval(shape: TwoRowShape, point: &SpecPoint) -> IntLaurentPoly {
    let n = point.len() as u32;
    if shape.length() > point.len() {
        return IntLaurentPoly::zero();
    }
    ssyt_content_counts(shape, n)
        .into_iter()
        .map(|(content, count)| {
            let term: IntLaurentPoly = content
                .counts()
                .iter()
                .zip(&point.values)
                .map(|(&c, v)| v.pow(c))
                .product();
            term.scale(&BigInt::from(count))
        })
        .sum()
}

/// `h_k(point)`, by the recursion `h_k(x_1..x_m) = sum_j x_m^j h_{k-j}(x_1..x_{m-1})`.
pub fn homog_eval(k: u32, point: &SpecPoint) -> IntLaurentPoly {
    let k = k as usize;
    let mut h = vec![IntLaurentPoly::zero(); k + 1];
    h[0] = IntLaurentPoly::one();
    for x in &point.values {
        // In-place update in increasing degree: h_j += x * h_{j-1} (new).
        for j in 1..=k {
            let add = x * &h[j - 1];
            h[j] += &add;
        }
    }
    h.swap_remove(k)
}

/// `h_k` with `h_k = 0` for negative `k`.
fn homog_signed(k: i64, point: &SpecPoint) -> IntLaurentPoly {
    if k < 0 {
        IntLaurentPoly::zero()
    } else {
        homog_eval(k as u32, point)
    }
}

/// Compares `schur_eval` with `h_a h_b - h_{a+1} h_{b-1}`.
pub fn jacobi_trudi_check(shape: TwoRowShape, point: &SpecPoint) -> bool {
    let (a, b) = (shape.first() as i64, shape.second() as i64);
    let det = &homog_signed(a, point) * &homog_signed(b, point)
        - &homog_signed(a + 1, point) * &homog_signed(b - 1, point);
    det == schur_eval(shape, point)
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(what()))
    }
}

/// Type A sieving polynomial `q^{-k} s_(k,k)(1, q, ..., q^{n-1})`.
pub fn build_x_type_a(n: u32, k: u32) -> Result<IntLaurentPoly> {
    require(n >= 3, || format!("type A needs n >= 3, got {n}"))?;
    let x = schur_eval(TwoRowShape::rectangle(k), &SpecPoint::principal(n, 1)).shift(-(k as i64));
    if let Some(e) = x.min_exponent().filter(|&e| e < 0) {
        return Err(Error::NegativeExponent { exponent: e });
    }
    Ok(x)
}

/// Type C sieving polynomial `h_k(1, q, ..., q^{n-1})^2`.
pub fn build_x_type_c(n: u32, k: u32) -> Result<IntLaurentPoly> {
    require(n >= 2, || format!("type C needs n >= 2, got {n}"))?;
    Ok(homog_eval(k, &SpecPoint::principal(n, 1)).pow(2))
}

/// Type D sieving polynomial
/// `sum_l s_(k-l,l)(1, q^2, ..., q^{2(n-1)}) h_{k-2l}(1, q^n)`.
pub fn build_x_type_d(n: u32, k: u32) -> Result<IntLaurentPoly> {
    require(n >= 2, || format!("type D needs n >= 2, got {n}"))?;
    let even = SpecPoint::principal(n, 2);
    let pair = SpecPoint::principal(2, n as i64);
    Ok((0..=k / 2)
        .map(|l| {
            let shape = TwoRowShape::new(k - l, l).expect("k - l >= l");
            &schur_eval(shape, &even) * &homog_eval(k - 2 * l, &pair)
        })
        .sum())
}

/// Which binomials to use in the centrally symmetric classical formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalVariant {
    /// `[n+k+1, k]_{q^2} [n+1, k]_{q^2}` as usually printed.
    Printed,
    /// `[n+k-1, k]_{q^2} [n-1, k]_{q^2}`, which matches the actual counts.
    Shifted,
}

impl std::str::FromStr for ClassicalVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "printed" => Ok(Self::Printed),
            "shifted" => Ok(Self::Shifted),
            _ => Err(Error::InvalidParameters(format!("unknown variant `{s}`"))),
        }
    }
}

impl std::fmt::Display for ClassicalVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Printed => "printed",
            Self::Shifted => "shifted",
        })
    }
}

fn qbin(m: i64, r: i64) -> IntLaurentPoly {
    q_binomial_signed(m, r)
}

fn qbin_sq(m: i64, r: i64) -> IntLaurentPoly {
    qbin(m, r).substitute_power(2)
}

/// Sieving polynomials for classical dissections: `part` 1 is the
/// polygon, 2 the centrally symmetric polygon, 3 the D-dissections.
/// `variant` only affects part 2.
pub fn build_x_classical(part: u8, n: u32, k: u32, variant: ClassicalVariant) -> Result<IntLaurentPoly> {
    let (n, k) = (n as i64, k as i64);
    match part {
        1 => {
            require(n >= 3, || format!("part 1 needs n >= 3, got {n}"))?;
            let num = &qbin(n + k, k + 1) * &qbin(n - 3, k);
            num.div_exact(&q_int((n + k) as u32))
        }
        2 => {
            require(n >= 2, || format!("part 2 needs n >= 2, got {n}"))?;
            let (top, low) = match variant {
                ClassicalVariant::Printed => (n + k + 1, n + 1),
                ClassicalVariant::Shifted => (n + k - 1, n - 1),
            };
            Ok(&qbin_sq(top, k) * &qbin_sq(low, k))
        }
        3 => {
            require(n >= 2, || format!("part 3 needs n >= 2, got {n}"))?;
            let q_n = IntLaurentPoly::monomial(1, n);
            let lead = qbin_sq(n + k - 1, k);
            let t1 = &lead * &qbin_sq(n - 1, k);
            let t2 = &(&lead * &qbin_sq(n - 2, k - 1)) * &q_n;
            let t3 = &lead * &qbin_sq(n - 2, k - 2);
            let t4 = &(&qbin_sq(n + k - 2, k) * &qbin_sq(n - 2, k - 2)) * &q_n;
            Ok(t1 + t2 + t3 + t4)
        }
        _ => Err(Error::InvalidParameters(format!("unknown classical part {part}"))),
    }
}

/// Count of `k`-edge D-multidissections of `P_{2n}` in the parity form
/// `2 h_(k) + 2 h_(k-1,1) + ... [+ h_(k/2,k/2)]` at `1^n`.
pub fn d_count_parity_form(n: u32, k: u32) -> BigInt {
    let h = |j: u32| homog_eval(j, &SpecPoint::ones(n)).value_at_one();
    let mut total = BigInt::zero();
    for l in 0..=k / 2 {
        let prod = h(k - l) * h(l);
        if 2 * l == k {
            total += prod;
        } else {
            total += prod * 2;
        }
    }
    total
}

/// The same count as `sum_l (k - 2l + 1) s_(k-l,l)(1^n)`.
pub fn d_count_schur_form(n: u32, k: u32) -> BigInt {
    (0..=k / 2)
        .map(|l| {
            let shape = TwoRowShape::new(k - l, l).expect("k - l >= l");
            schur_eval(shape, &SpecPoint::ones(n)).value_at_one() * (k - 2 * l + 1)
        })
        .sum()
}
