//! Pairs fixed-point counts with root-of-unity evaluations and collects
//! the results into serializable reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::actions::{fold_target, orbits, RotationAction};
use crate::error::{Error, Result};
use crate::polygons::{enumerate_multidissections, Family};
use crate::qseries::{eval_at_unity_root, IntLaurentPoly, RootEvaluation};
use crate::symfunc::{
    build_x_classical, build_x_type_a, build_x_type_c, build_x_type_d, d_count_parity_form,
    d_count_schur_form, homog_eval, ClassicalVariant, SpecPoint,
};

/// Which sieving statement an instance is checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// A-multidissections with the shifted rectangular Schur polynomial.
    TypeA,
    /// C-multidissections with the squared complete homogeneous polynomial.
    TypeC,
    /// D-multidissections with the Schur/homogeneous sum.
    TypeD,
    /// Classical dissections of `P_n`.
    ClassicalA,
    /// Centrally symmetric dissections of `P_{2n}`.
    ClassicalBC,
    /// D-dissections of `P_{2n}`.
    ClassicalD,
    /// Any family against its orbit polynomial.
    OrbitPolynomial,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::TypeA,
        Statement::TypeC,
        Statement::TypeD,
        Statement::ClassicalA,
        Statement::ClassicalBC,
        Statement::ClassicalD,
        Statement::OrbitPolynomial,
    ];

    /// The family a statement is about (`None` for the orbit polynomial,
    /// which takes the family from the caller).
    pub fn family(self) -> Option<Family> {
        match self {
            Statement::TypeA => Some(Family::A),
            Statement::TypeC => Some(Family::C),
            Statement::TypeD => Some(Family::D),
            Statement::ClassicalA => Some(Family::ClassicalA),
            Statement::ClassicalBC => Some(Family::ClassicalBC),
            Statement::ClassicalD => Some(Family::ClassicalD),
            Statement::OrbitPolynomial => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statement::TypeA => "type-a",
            Statement::TypeC => "type-c",
            Statement::TypeD => "type-d",
            Statement::ClassicalA => "classical-a",
            Statement::ClassicalBC => "classical-bc",
            Statement::ClassicalD => "classical-d",
            Statement::OrbitPolynomial => "orbit-poly",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown statement `{s}`")))
    }
}

/// A triple (set, cyclic group, polynomial) to check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspInstance {
    pub statement: Statement,
    pub family: Family,
    pub n: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<ClassicalVariant>,
    pub generator_step: u32,
    pub group_order: u64,
    pub polynomial: IntLaurentPoly,
}

/// Options for building an instance from a statement.
#[derive(Clone, Copy, Debug, Default)]
pub struct InstanceOptions {
    /// Family for the orbit polynomial.
    pub family: Option<Family>,
    /// Binomials for the centrally symmetric classical formula.
    pub variant: Option<ClassicalVariant>,
    /// Generator step override (only meaningful for classicalBC).
    pub step: Option<u32>,
}

impl CspInstance {
    /// Wraps a caller-supplied polynomial with the family's standard action.
    pub fn new(family: Family, n: u32, k: u32, polynomial: IntLaurentPoly) -> Self {
        let action = RotationAction::new(family, n);
        Self {
            statement: Statement::OrbitPolynomial,
            family,
            n,
            k,
            variant: None,
            generator_step: action.step,
            group_order: action.group_order(),
            polynomial,
        }
    }

    pub fn for_statement(statement: Statement, n: u32, k: u32, opts: InstanceOptions) -> Result<Self> {
        let family = match (statement.family(), opts.family) {
            (Some(f), _) => f,
            (None, Some(f)) => f,
            (None, None) => {
                return Err(Error::InvalidParameters("the orbit polynomial needs a family".into()));
            }
        };
        family.check_n(n)?;
        let mut action = RotationAction::new(family, n);
        if let Some(step) = opts.step {
            action = action.with_step(step);
        }
        let variant = (statement == Statement::ClassicalBC)
            .then(|| opts.variant.unwrap_or(ClassicalVariant::Shifted));
        let polynomial = match statement {
            Statement::TypeA => build_x_type_a(n, k)?,
            Statement::TypeC => build_x_type_c(n, k)?,
            Statement::TypeD => build_x_type_d(n, k)?,
            Statement::ClassicalA => build_x_classical(1, n, k, ClassicalVariant::Printed)?,
            Statement::ClassicalBC => build_x_classical(2, n, k, variant.unwrap())?,
            Statement::ClassicalD => build_x_classical(3, n, k, ClassicalVariant::Printed)?,
            Statement::OrbitPolynomial => orbit_polynomial_with(&action, k)?,
        };
        Ok(Self {
            statement,
            family,
            n,
            k,
            variant,
            generator_step: action.step,
            group_order: action.group_order(),
            polynomial,
        })
    }

    pub fn action(&self) -> RotationAction {
        RotationAction::new(self.family, self.n).with_step(self.generator_step)
    }
}

/// One comparison `|X^{c^d}|` against `X(zeta^d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspCheck {
    pub d: u64,
    pub fixed: u64,
    pub evaluation: RootEvaluation,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspReport {
    #[serde(flatten)]
    pub instance: CspInstance,
    pub cardinality: u64,
    pub checks: Vec<CspCheck>,
    pub csp_holds: bool,
    /// Human-readable explanation of failures, such as a cardinality
    /// mismatch at `q = 1`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CspReport {
    pub fn failures(&self) -> impl Iterator<Item = &CspCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One flat row per check, for tabular output.
    pub fn rows(&self) -> Vec<CheckRow> {
        self.checks
            .iter()
            .map(|c| CheckRow {
                statement: self.instance.statement.to_string(),
                family: self.instance.family.to_string(),
                n: self.instance.n,
                k: self.instance.k,
                variant: self.instance.variant.map(|v| v.to_string()).unwrap_or_default(),
                generator_step: self.instance.generator_step,
                group_order: self.instance.group_order,
                d: c.d,
                fixed: c.fixed,
                evaluation: c.evaluation.to_string(),
                pass: c.pass,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub statement: String,
    pub family: String,
    pub n: u32,
    pub k: u32,
    pub variant: String,
    pub generator_step: u32,
    pub group_order: u64,
    pub d: u64,
    pub fixed: u64,
    pub evaluation: String,
    pub pass: bool,
}

/// Compares fixed points of every power `1..=group_order` with the
/// polynomial at the corresponding root of unity. Failures are recorded,
/// never raised.
pub fn verify(instance: CspInstance) -> Result<CspReport> {
    let action = instance.action();
    let all = enumerate_multidissections(instance.family, instance.n, instance.k)?;
    let order = instance.group_order;
    let checks: Vec<CspCheck> = (1..=order)
        .into_par_iter()
        .map(|d| {
            let fixed = all.iter().filter(|f| action.is_fixed(f, d)).count() as u64;
            let evaluation = eval_at_unity_root(&instance.polynomial, order, d);
            let pass = evaluation.as_integer() == Some(&BigInt::from(fixed));
            CspCheck {
                d,
                fixed,
                evaluation,
                pass,
            }
        })
        .collect();
    let csp_holds = checks.iter().all(|c| c.pass);
    let cardinality = all.len() as u64;
    let mut notes = Vec::new();
    let at_one = instance.polynomial.value_at_one();
    if at_one != BigInt::from(cardinality) {
        notes.push(format!(
            "cardinality mismatch: polynomial at q = 1 is {at_one}, but the set has {cardinality} elements"
        ));
    }
    let nonrational = checks.iter().filter(|c| c.evaluation.as_integer().is_none()).count();
    if nonrational > 0 {
        notes.push(format!("{nonrational} root-of-unity evaluations are not rational integers"));
    }
    Ok(CspReport {
        cardinality,
        instance,
        checks,
        csp_holds,
        notes,
    })
}

/// `sum_i a_i q^i` over `0 <= i < group_order`, where `a_i` counts orbits
/// whose stabilizer order divides `i`.
pub fn orbit_polynomial(family: Family, n: u32, k: u32) -> Result<IntLaurentPoly> {
    family.check_n(n)?;
    orbit_polynomial_with(&RotationAction::new(family, n), k)
}

pub fn orbit_polynomial_with(action: &RotationAction, k: u32) -> Result<IntLaurentPoly> {
    let order = action.group_order();
    let stabilizers: Vec<u64> = orbits(action, k)?
        .iter()
        .map(|o| order / o.len() as u64)
        .collect();
    Ok(IntLaurentPoly::from_terms((0..order).map(|i| {
        let count = stabilizers.iter().filter(|&&s| i % s == 0).count();
        (i as i64, BigInt::from(count))
    })))
}

/// Fixed-point count under `r^d` against the fold target (even `d`) or
/// the invariant C-side count (odd `d`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldingRow {
    pub d: u32,
    pub fixed: u64,
    pub target: u64,
    pub target_description: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldingReport {
    pub n: u32,
    pub k: u32,
    pub rows: Vec<FoldingRow>,
    pub pass: bool,
}

pub fn verify_folding_consistency(n: u32, k: u32) -> Result<FoldingReport> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("folding needs n >= 2, got {n}")));
    }
    let action = RotationAction::new(Family::D, n);
    let all = enumerate_multidissections(Family::D, n, k)?;
    let c_all = if k.is_multiple_of(2) {
        enumerate_multidissections(Family::C, n, k / 2)?
    } else {
        Vec::new()
    };
    let c_action = RotationAction::new(Family::C, n);
    let rows: Vec<FoldingRow> = (1..=2 * n)
        .filter(|d| (2 * n).is_multiple_of(*d))
        .map(|d| -> Result<FoldingRow> {
            let fixed = all.iter().filter(|f| action.is_fixed(f, d as u64)).count() as u64;
            let (target, target_description) = if d % 2 == 0 {
                let (half, count) = fold_target(n, d, k)?;
                match count {
                    Some(c) => (
                        enumerate_multidissections(Family::D, half, c)?.len() as u64,
                        format!("{c}-edge D-multidissections of P_{}", 2 * half),
                    ),
                    None => (0, format!("empty (non-integer edge count on P_{})", 2 * half)),
                }
            } else {
                let count = c_all.iter().filter(|f| c_action.is_fixed(f, d as u64)).count() as u64;
                (count, format!("rotation^{d}-invariant {}-edge C-multidissections", k / 2))
            };
            Ok(FoldingRow {
                d,
                fixed,
                target,
                target_description,
                pass: fixed == target,
            })
        })
        .collect::<Result<_>>()?;
    let pass = rows.iter().all(|r| r.pass);
    Ok(FoldingReport { n, k, rows, pass })
}

/// `h_k` at the powers of a primitive root of unity of order `order`
/// (dividing `n`) against `h_{k/order}(1^{n/order})` or zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootOfUnityHomogRow {
    pub n: u32,
    pub order: u32,
    pub k: u32,
    pub evaluation: RootEvaluation,
    #[serde(with = "crate::qseries::decimal")]
    pub expected: BigInt,
    pub pass: bool,
}

pub fn homog_root_of_unity_identity(n: u32, order: u32, k: u32) -> Result<RootOfUnityHomogRow> {
    if order == 0 || !n.is_multiple_of(order) {
        return Err(Error::InvalidParameters(format!("{order} does not divide {n}")));
    }
    let h = homog_eval(k, &SpecPoint::principal(n, 1));
    let evaluation = eval_at_unity_root(&h, n as u64, (n / order) as u64);
    let expected = if k.is_multiple_of(order) {
        homog_eval(k / order, &SpecPoint::ones(n / order)).value_at_one()
    } else {
        BigInt::from(0)
    };
    let pass = evaluation.as_integer() == Some(&expected);
    Ok(RootOfUnityHomogRow {
        n,
        order,
        k,
        evaluation,
        expected,
        pass,
    })
}

/// Enumerated D-multidissection count against both closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DCountRow {
    pub n: u32,
    pub k: u32,
    pub enumerated: u64,
    #[serde(with = "crate::qseries::decimal")]
    pub parity_form: BigInt,
    #[serde(with = "crate::qseries::decimal")]
    pub schur_form: BigInt,
    pub pass: bool,
}

pub fn d_count_identity(n: u32, k: u32) -> Result<DCountRow> {
    let enumerated = enumerate_multidissections(Family::D, n, k)?.len() as u64;
    let parity_form = d_count_parity_form(n, k);
    let schur_form = d_count_schur_form(n, k);
    let e = BigInt::from(enumerated);
    Ok(DCountRow {
        n,
        k,
        enumerated,
        pass: parity_form == e && schur_form == e,
        parity_form,
        schur_form,
    })
}
