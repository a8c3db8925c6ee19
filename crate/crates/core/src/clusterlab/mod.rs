//! Polynomial models of multidissections: products of `2 x 2` minors,
//! rotation substitutions, basis and ideal-membership audits.
//!
//! Type A and C polynomials live in the `n x 2` variable matrix. Type D
//! polynomials live in the `(n+2) x 2` matrix and stand for classes modulo
//! the principal ideal `J` generated by `Δ_{n+1,n+2}`.

mod characters;
pub mod gauss;
pub mod rank;
pub mod xpoly;

pub use characters::{
    alt_proof_d, character_check_a, character_check_c, character_check_d, rotation_trace,
    AltProofReport, AltProofRow, CharacterReport, TraceReport,
};
pub use gauss::GaussRat;
pub use rank::{rank, Insertion, LinearSpan};
pub use xpoly::{var_index, Monomial, VarSubstitution, XPoly};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::actions::{rotate, rotate_edge};
use crate::error::{Error, Result};
use crate::polygons::{
    enumerate_multidissections, enumerate_weighted, AEdge, CEdge, Color, DEdge, Edge, Family,
    Multidissection,
};
use crate::qseries::q_binomial;
use crate::symfunc::d_count_parity_form;
use crate::tableaux::{ssyt_content_counts, TwoRowShape};

/// `Δ_{ij} = x_{i1} x_{j2} - x_{i2} x_{j1}` in the ring with `nrows` rows.
pub fn minor(i: u32, j: u32, nrows: u32) -> Result<XPoly> {
    if i >= j || i == 0 || j > nrows {
        return Err(Error::MinorOrientation {
            i: i as usize,
            j: j as usize,
        });
    }
    Ok(delta(i, j, nrows))
}

fn delta(i: u32, j: u32, nrows: u32) -> XPoly {
    let x = |r, c| XPoly::var(nrows, r, c);
    &(&x(i, 1) * &x(j, 2)) - &(&x(i, 2) * &x(j, 1))
}

fn product_over(f: &Multidissection, nrows: u32, edge_poly: impl Fn(&Edge) -> XPoly) -> XPoly {
    f.support()
        .iter()
        .fold(XPoly::one(nrows), |acc, (e, &m)| &acc * &edge_poly(e).pow(m))
}

fn require_base(f: &Multidissection, base: Family) -> Result<()> {
    if f.family().base() != base {
        return Err(Error::InvalidParameters(format!(
            "expected a {base}-type multidissection, got {}",
            f.family()
        )));
    }
    Ok(())
}

/// Product of minors `Δ_{ij}^{f(ij)}`.
pub fn z_a(f: &Multidissection) -> Result<XPoly> {
    require_base(f, Family::A)?;
    let n = f.n();
    Ok(product_over(f, n, |e| match e {
        Edge::A(AEdge { i, j }) => delta(*i, *j, n),
        _ => unreachable!(),
    }))
}

/// C-edge polynomials: diameters `x_{a1} x_{a2}`, integrated pairs
/// `(x_{a1} x_{b2} + x_{a2} x_{b1}) / 2`, segregated pairs
/// `(x_{a1} x_{b2} - x_{a2} x_{b1}) / (2i)`.
pub fn z_c_edge(e: &Edge, n: u32) -> XPoly {
    let x = |r, c| XPoly::var(n, r, c);
    match *e {
        Edge::C(CEdge::Diameter(a)) => &x(a, 1) * &x(a, 2),
        Edge::C(CEdge::Integrated(a, b)) => (&(&x(a, 1) * &x(b, 2)) + &(&x(a, 2) * &x(b, 1)))
            .scale(&GaussRat::from_ratio(1, 2)),
        Edge::C(CEdge::Segregated(a, b)) => (&(&x(a, 1) * &x(b, 2)) - &(&x(a, 2) * &x(b, 1)))
            .scale(&minus_half_i()),
        _ => panic!("not a C-edge: {e}"),
    }
}

/// `1 / (2i)`.
fn minus_half_i() -> GaussRat {
    &GaussRat::from_ratio(-1, 2) * &GaussRat::i()
}

pub fn z_c(f: &Multidissection) -> Result<XPoly> {
    require_base(f, Family::C)?;
    let n = f.n();
    Ok(product_over(f, n, |e| z_c_edge(e, n)))
}

/// D-edge polynomials in the ring with `n + 2` rows.
pub fn z_d_edge(e: &Edge, n: u32) -> XPoly {
    let nr = n + 2;
    let (s, t) = (n + 1, n + 2);
    match *e {
        Edge::D(DEdge::Diameter(i, Color::Solid)) => delta(i, s, nr),
        Edge::D(DEdge::Diameter(i, Color::Dotted)) => delta(i, t, nr),
        Edge::D(DEdge::Segregated(i, j)) => &(&delta(i, s, nr) * &delta(j, t, nr)) + &delta(i, j, nr),
        Edge::D(DEdge::Integrated(i, j)) => &(&delta(i, s, nr) * &delta(j, t, nr)) - &delta(i, j, nr),
        _ => panic!("not a D-edge: {e}"),
    }
}

pub fn z_d(f: &Multidissection) -> Result<XPoly> {
    require_base(f, Family::D)?;
    let n = f.n();
    Ok(product_over(f, n + 2, |e| z_d_edge(e, n)))
}

/// The polynomial of `f` in its family's ambient ring.
pub fn z(f: &Multidissection) -> Result<XPoly> {
    match f.family().base() {
        Family::A => z_a(f),
        Family::C => z_c(f),
        _ => z_d(f),
    }
}

pub fn d_degree(p: &XPoly, n: u32) -> Result<u32> {
    p.d_degree(n)
}

/// Generator `Δ_{n+1,n+2}` of `J`.
pub fn j_generator(n: u32) -> XPoly {
    delta(n + 1, n + 2, n + 2)
}

fn j_priority(n: u32) -> [usize; 2] {
    [var_index(n + 1, 1), var_index(n + 2, 2)]
}

/// `p / Δ_{n+1,n+2}` when the division is exact.
pub fn j_quotient(p: &XPoly, n: u32) -> Option<XPoly> {
    let (q, r) = p.div_rem(&j_generator(n), &j_priority(n));
    r.is_zero().then_some(q)
}

pub fn j_member(p: &XPoly, n: u32) -> bool {
    j_quotient(p, n).is_some()
}

/// Rank audit of a proposed basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub count: usize,
    pub rank: usize,
    pub expected_dim: u64,
    pub pass: bool,
    /// A vanishing linear combination, when one was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

fn witness_text(coeffs: &[(usize, GaussRat)], labels: &[String]) -> Vec<String> {
    coeffs.iter().map(|(i, c)| format!("{c} * z{}", labels[*i])).collect()
}

fn basis_report(family: Family, n: u32, k: u32, expected_dim: u64) -> Result<BasisReport> {
    let all = enumerate_multidissections(family, n, k)?;
    let labels: Vec<String> = all.iter().map(|f| f.to_string()).collect();
    let mut span = LinearSpan::new();
    let mut witness = None;
    for f in &all {
        if let Insertion::Dependent(w) = span.insert(&z(f)?) {
            witness.get_or_insert_with(|| witness_text(&w, &labels));
        }
    }
    let (count, rank) = (all.len(), span.rank());
    Ok(BasisReport {
        family,
        n,
        k,
        count,
        rank,
        expected_dim,
        pass: count == rank && rank as u64 == expected_dim,
        witness,
    })
}

/// The products of minors over `k`-edge A-multidissections against the
/// number of semistandard tableaux of shape `(k, k)`.
pub fn check_basis_a(n: u32, k: u32) -> Result<BasisReport> {
    Family::A.check_n(n)?;
    let expected: u64 = ssyt_content_counts(TwoRowShape::rectangle(k), n).values().sum();
    basis_report(Family::A, n, k, expected)
}

/// The C-monomials against `dim Sym^k ⊗ Sym^k = C(n+k-1, k)^2`.
pub fn check_basis_c(n: u32, k: u32) -> Result<BasisReport> {
    Family::C.check_n(n)?;
    let binom = q_binomial(n + k - 1, k).value_at_one();
    let expected = (&binom * &binom).to_u64().expect("dimension fits in u64");
    basis_report(Family::C, n, k, expected)
}

/// Index set of the quotient basis: A-multidissections of `P_{n+2}`
/// avoiding the edge `(n+1, n+2)`, graded by the number of endpoints in
/// `1..=n`.
pub fn quotient_basis_index(n: u32, k: u32) -> Vec<Multidissection> {
    let weight = move |e: &Edge| match *e {
        Edge::A(AEdge { i, j }) => {
            let w = (i <= n) as u32 + (j <= n) as u32;
            (w > 0).then_some(w)
        }
        _ => None,
    };
    enumerate_weighted(Family::A, n + 2, &weight, k)
}

/// Evidence for the conjectured D-basis at one `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: u32,
    pub k: u32,
    pub count: usize,
    pub quotient_basis_count: usize,
    pub ideal_spanning_count: usize,
    pub rank: usize,
    pub expected_dim: u64,
    #[serde(rename = "independent_mod_J")]
    pub independent_mod_j: bool,
    pub spans: bool,
    pub pass: bool,
    pub scope: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

/// Spanning set of `J` in the relevant graded pieces: `z_A(g) Δ^m` with
/// `m >= 1`, `g` from the quotient index set, total degree at most
/// `max_degree`.
fn ideal_spanning_set(n: u32, k: u32, max_degree: u32) -> Vec<(String, XPoly)> {
    let gen = j_generator(n);
    let mut out = Vec::new();
    for g in quotient_basis_index(n, k) {
        let base_degree = 2 * g.support().values().sum::<u32>();
        let zg = z_a(&g).expect("family A");
        let mut m = 1;
        let mut acc = &zg * &gen;
        while base_degree + 2 * m <= max_degree {
            out.push((format!("{g}·Δ^{m}"), acc.clone()));
            acc = &acc * &gen;
            m += 1;
        }
    }
    out
}

/// Builds the span `B_J ∪ B_D` in insertion order (ideal part first).
struct QuotientSpan {
    span: LinearSpan,
    ideal_count: usize,
    d_objects: Vec<Multidissection>,
    labels: Vec<String>,
    first_dependency: Option<Vec<(usize, GaussRat)>>,
}

fn quotient_span(n: u32, k: u32) -> Result<QuotientSpan> {
    let d_objects = enumerate_multidissections(Family::D, n, k)?;
    let d_polys: Vec<XPoly> = d_objects.iter().map(z_d).collect::<Result<_>>()?;
    let max_degree = d_polys.iter().map(XPoly::max_degree).max().unwrap_or(0);
    let ideal = ideal_spanning_set(n, k, max_degree);
    let mut span = LinearSpan::new();
    let mut labels = Vec::new();
    let mut first_dependency = None;
    for (label, p) in &ideal {
        labels.push(label.clone());
        if let Insertion::Dependent(w) = span.insert(p) {
            first_dependency.get_or_insert(w);
        }
    }
    for (f, p) in d_objects.iter().zip(&d_polys) {
        labels.push(f.to_string());
        if let Insertion::Dependent(w) = span.insert(p) {
            first_dependency.get_or_insert(w);
        }
    }
    Ok(QuotientSpan {
        span,
        ideal_count: ideal.len(),
        d_objects,
        labels,
        first_dependency,
    })
}

/// Independence of the `z_D` modulo `J` plus a dimension count against
/// the quotient basis and the closed-form count. A pass is evidence for
/// these parameters only.
pub fn check_conjecture_d(n: u32, k: u32) -> Result<ConjectureReport> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("needs n >= 2, got {n}")));
    }
    let qs = quotient_span(n, k)?;
    let count = qs.d_objects.len();
    let quotient_basis_count = quotient_basis_index(n, k).len();
    let expected_dim = d_count_parity_form(n, k).to_u64().expect("dimension fits in u64");
    let rank = qs.span.rank();
    let independent_mod_j = rank == qs.ideal_count + count;
    let spans = count == quotient_basis_count && count as u64 == expected_dim;
    Ok(ConjectureReport {
        n,
        k,
        count,
        quotient_basis_count,
        ideal_spanning_count: qs.ideal_count,
        rank,
        expected_dim,
        independent_mod_j,
        spans,
        pass: independent_mod_j && spans,
        scope: format!("verified for n = {n}, k = {k} only"),
        witness: qs.first_dependency.map(|w| witness_text(&w, &qs.labels)),
    })
}

/// Substitution realizing one rotation step on the polynomial models.
pub fn rotation_substitution(family: Family, n: u32) -> VarSubstitution {
    match family.base() {
        Family::A => {
            let mut s = VarSubstitution::identity(n);
            for c in 1..=2 {
                for i in 1..n {
                    s.set(i, c, XPoly::var(n, i + 1, c));
                }
                s.set(n, c, XPoly::var(n, 1, c).scale(&GaussRat::from_int(-1)));
            }
            s
        }
        Family::C => {
            let mut s = VarSubstitution::identity(n);
            for c in 1..=2 {
                for i in 1..n {
                    s.set(i, c, XPoly::var(n, i + 1, c));
                }
            }
            let i = GaussRat::i();
            s.set(n, 1, XPoly::var(n, 1, 1).scale(&-&i));
            s.set(n, 2, XPoly::var(n, 1, 2).scale(&i));
            s
        }
        _ => {
            let nr = n + 2;
            let mut s = VarSubstitution::identity(nr);
            for c in 1..=2 {
                for i in 1..=n {
                    s.set(i, c, XPoly::var(nr, i % n + 1, c));
                }
                s.set(n + 1, c, XPoly::var(nr, n + 2, c));
                s.set(n + 2, c, XPoly::var(nr, n + 1, c));
            }
            s
        }
    }
}

/// Equivariance audit of the rotation substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    /// `exact` for A and C, `mod-J` for D.
    pub mode: String,
    pub count: usize,
    pub exact_matches: usize,
    pub ideal_matches: usize,
    /// D only: every single-edge discrepancy is zero or a unit times
    /// `Δ_{ij} Δ_{n+1,n+2}`, with `ij` the rotated pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy_is_minor_times_generator: Option<bool>,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn edge_discrepancy_ok(n: u32, sub: &VarSubstitution, e: &Edge) -> bool {
    let image = rotate_edge(Family::D, n, e);
    let diff = &sub.apply(&z_d_edge(e, n)) - &z_d_edge(&image, n);
    if diff.is_zero() {
        return true;
    }
    let (i, j) = match image {
        Edge::D(DEdge::Segregated(i, j) | DEdge::Integrated(i, j)) => (i, j),
        _ => return false,
    };
    let Some(q) = j_quotient(&diff, n) else { return false };
    let target = delta(i, j, n + 2);
    let (m, c) = target.terms().iter().next().unwrap();
    let Some(qc) = q.terms().get(m) else { return false };
    let unit = qc / c;
    unit.is_unit_root_of_four() && q == target.scale(&unit)
}

pub fn verify_equivariance(family: Family, n: u32, k: u32) -> Result<EquivarianceReport> {
    let base = family.base();
    family.check_n(n)?;
    if base == Family::D && n < 2 {
        return Err(Error::InvalidParameters("type D equivariance needs n >= 2".into()));
    }
    let sub = rotation_substitution(base, n);
    let all = enumerate_multidissections(base, n, k)?;
    let mut exact_matches = 0;
    let mut ideal_matches = 0;
    let mut failures = Vec::new();
    for f in &all {
        let lhs = sub.apply(&z(f)?);
        let rhs = z(&rotate(base, n, f))?;
        if lhs == rhs {
            exact_matches += 1;
        } else if base == Family::D && j_member(&(&lhs - &rhs), n) {
            ideal_matches += 1;
        } else {
            failures.push(f.to_string());
        }
    }
    let discrepancy = (base == Family::D).then(|| {
        crate::polygons::edge_set(Family::D, n)
            .iter()
            .all(|e| edge_discrepancy_ok(n, &sub, e))
    });
    let pass = failures.is_empty() && discrepancy.unwrap_or(true);
    Ok(EquivarianceReport {
        family: base,
        n,
        k,
        mode: if base == Family::D { "mod-J" } else { "exact" }.to_string(),
        count: all.len(),
        exact_matches,
        ideal_matches,
        discrepancy_is_minor_times_generator: discrepancy,
        failures,
        pass,
    })
}
