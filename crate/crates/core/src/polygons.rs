//! Edge systems, crossing predicates and multidissection enumeration.
//!
//! Vertices are 0-indexed internally. For the centrally symmetric families
//! the polygon `P_{2n}` carries the labels `1..n, 1̄..n̄` clockwise, with
//! `a -> a-1` and `ā -> n+a-1`. Every display and serialization uses the
//! 1-based labels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Which edge system and counting convention is in play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Multidissections of `P_n`, all edges of weight 1.
    A,
    /// Multidissections of `P_{2n}` by C-edges.
    C,
    /// Multidissections of `P_{2n}` by D-edges; centrally symmetric pairs
    /// weigh 2, colored diameters weigh 1.
    D,
    /// Classical dissections of `P_n` (diagonals only, no repeats).
    ClassicalA,
    /// Centrally symmetric dissections of `P_{2n}`; a pair counts once.
    ClassicalBC,
    /// D-dissections of `P_{2n}`; every D-diagonal counts once.
    ClassicalD,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::A,
        Family::C,
        Family::D,
        Family::ClassicalA,
        Family::ClassicalBC,
        Family::ClassicalD,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::ClassicalA | Family::ClassicalBC | Family::ClassicalD)
    }

    /// The family whose edge shapes this family uses.
    pub fn base(self) -> Family {
        match self {
            Family::A | Family::ClassicalA => Family::A,
            Family::C | Family::ClassicalBC => Family::C,
            Family::D | Family::ClassicalD => Family::D,
        }
    }

    /// Number of vertices of the underlying polygon.
    pub fn polygon_size(self, n: u32) -> u32 {
        match self.base() {
            Family::A => n,
            _ => 2 * n,
        }
    }

    pub fn check_n(self, n: u32) -> Result<()> {
        let ok = match self {
            Family::A | Family::ClassicalA => n >= 3,
            Family::D => n >= 1,
            _ => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!(
                "family {self} is not defined for n = {n}"
            )))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::C => "C",
            Family::D => "D",
            Family::ClassicalA => "classicalA",
            Family::ClassicalBC => "classicalBC",
            Family::ClassicalD => "classicalD",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown family `{s}`")))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Solid,
    Dotted,
}

impl Color {
    pub fn swapped(self) -> Color {
        match self {
            Color::Solid => Color::Dotted,
            Color::Dotted => Color::Solid,
        }
    }
}

/// Chord of `P_m` with 0-indexed endpoints `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub u: u32,
    pub v: u32,
}

impl Chord {
    pub fn new(x: u32, y: u32) -> Self {
        assert_ne!(x, y, "chord endpoints must be distinct");
        Chord {
            u: x.min(y),
            v: x.max(y),
        }
    }

    /// Rotation by `steps` vertices on `P_m`.
    pub fn rotated(self, m: u32, steps: u64) -> Self {
        let s = (steps % m as u64) as u32;
        Chord::new((self.u + s) % m, (self.v + s) % m)
    }

    /// Length of the shorter boundary arc between the endpoints.
    pub fn span(self, m: u32) -> u32 {
        let d = self.v - self.u;
        d.min(m - d)
    }
}

/// Endpoints strictly interleave around the circle. Chords sharing an
/// endpoint never cross.
pub fn chords_cross(_m: u32, c1: Chord, c2: Chord) -> bool {
    let inside = |x: u32| c1.u < x && x < c1.v;
    let shared = c1.u == c2.u || c1.u == c2.v || c1.v == c2.u || c1.v == c2.v;
    !shared && (inside(c2.u) != inside(c2.v))
}

/// Edge `ij` of `P_n`, `1 <= i < j <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AEdge {
    pub i: u32,
    pub j: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CEdge {
    /// `a ā`
    Diameter(u32),
    /// `ab, āb̄` with `a < b`
    Segregated(u32, u32),
    /// `ab̄, āb` with `a < b`
    Integrated(u32, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DEdge {
    Diameter(u32, Color),
    Segregated(u32, u32),
    Integrated(u32, u32),
}

/// An edge of any family. The derived order is the canonical edge order:
/// family tag, kind, indices, color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    A(AEdge),
    C(CEdge),
    D(DEdge),
}

/// Shape of a centrally symmetric edge, shared by the C and D systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum CsShape {
    Diameter(u32),
    Segregated(u32, u32),
    Integrated(u32, u32),
}

/// Classifies a chord of `P_{2n}` by the centrally symmetric edge that
/// contains it.
pub(crate) fn cs_shape_of_chord(n: u32, c: Chord) -> CsShape {
    let (a, ha) = (c.u % n + 1, c.u / n);
    let (b, hb) = (c.v % n + 1, c.v / n);
    if a == b {
        return CsShape::Diameter(a);
    }
    let (lo, hi) = (a.min(b), a.max(b));
    if ha == hb {
        CsShape::Segregated(lo, hi)
    } else {
        CsShape::Integrated(lo, hi)
    }
}

fn cs_chords(n: u32, s: CsShape) -> Vec<Chord> {
    let (x, bar) = (|a: u32| a - 1, |a: u32| n + a - 1);
    match s {
        CsShape::Diameter(a) => vec![Chord::new(x(a), bar(a))],
        CsShape::Segregated(a, b) => vec![Chord::new(x(a), x(b)), Chord::new(bar(a), bar(b))],
        CsShape::Integrated(a, b) => vec![Chord::new(x(a), bar(b)), Chord::new(bar(a), x(b))],
    }
}

impl Edge {
    pub fn family_base(&self) -> Family {
        match self {
            Edge::A(_) => Family::A,
            Edge::C(_) => Family::C,
            Edge::D(_) => Family::D,
        }
    }

    pub(crate) fn cs_shape(&self) -> Option<CsShape> {
        match *self {
            Edge::A(_) => None,
            Edge::C(CEdge::Diameter(a)) | Edge::D(DEdge::Diameter(a, _)) => Some(CsShape::Diameter(a)),
            Edge::C(CEdge::Segregated(a, b)) | Edge::D(DEdge::Segregated(a, b)) => {
                Some(CsShape::Segregated(a, b))
            }
            Edge::C(CEdge::Integrated(a, b)) | Edge::D(DEdge::Integrated(a, b)) => {
                Some(CsShape::Integrated(a, b))
            }
        }
    }

    /// Rebuilds an edge of the same system from a shape (keeping `color`
    /// for D-diameters).
    pub(crate) fn with_shape(base: Family, s: CsShape, color: Color) -> Edge {
        match (base, s) {
            (Family::C, CsShape::Diameter(a)) => Edge::C(CEdge::Diameter(a)),
            (Family::C, CsShape::Segregated(a, b)) => Edge::C(CEdge::Segregated(a, b)),
            (Family::C, CsShape::Integrated(a, b)) => Edge::C(CEdge::Integrated(a, b)),
            (Family::D, CsShape::Diameter(a)) => Edge::D(DEdge::Diameter(a, color)),
            (Family::D, CsShape::Segregated(a, b)) => Edge::D(DEdge::Segregated(a, b)),
            (Family::D, CsShape::Integrated(a, b)) => Edge::D(DEdge::Integrated(a, b)),
            _ => unreachable!("centrally symmetric shapes live in C or D"),
        }
    }

    pub fn color(&self) -> Option<Color> {
        match self {
            Edge::D(DEdge::Diameter(_, c)) => Some(*c),
            _ => None,
        }
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self, Edge::C(CEdge::Diameter(_)) | Edge::D(DEdge::Diameter(..)))
    }

    fn indices_valid(&self, n: u32) -> bool {
        match *self {
            Edge::A(AEdge { i, j }) => 1 <= i && i < j && j <= n,
            _ => match self.cs_shape().unwrap() {
                CsShape::Diameter(a) => 1 <= a && a <= n,
                CsShape::Segregated(a, b) | CsShape::Integrated(a, b) => 1 <= a && a < b && b <= n,
            },
        }
    }

    /// True for boundary edges of the polygon (excluded from classical
    /// dissections).
    pub fn is_boundary(&self, n: u32) -> bool {
        match *self {
            Edge::A(AEdge { i, j }) => j == i + 1 || (i == 1 && j == n),
            _ => match self.cs_shape().unwrap() {
                CsShape::Diameter(_) => n == 1,
                CsShape::Segregated(a, b) => b == a + 1,
                CsShape::Integrated(a, b) => a == 1 && b == n,
            },
        }
    }

    fn label(&self) -> String {
        let bar = |a: u32| format!("{a}\u{0304}");
        match *self {
            Edge::A(AEdge { i, j }) => format!("{i}-{j}"),
            _ => {
                let body = match self.cs_shape().unwrap() {
                    CsShape::Diameter(a) => format!("{a}-{}", bar(a)),
                    CsShape::Segregated(a, b) => format!("{a}-{b}|{}-{}", bar(a), bar(b)),
                    CsShape::Integrated(a, b) => format!("{a}-{}|{}-{b}", bar(b), bar(a)),
                };
                match self.color() {
                    Some(c) => format!("{body}:{}", if c == Color::Solid { "solid" } else { "dotted" }),
                    None => body,
                }
            }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The constituent chords of `e`, on `P_n` (family A) or `P_{2n}`.
pub fn edge_chords(family: Family, n: u32, e: &Edge) -> Vec<Chord> {
    debug_assert_eq!(family.base(), e.family_base());
    match *e {
        Edge::A(AEdge { i, j }) => vec![Chord::new(i - 1, j - 1)],
        _ => cs_chords(n, e.cs_shape().unwrap()),
    }
}

/// Crossing relation of the family. An edge never crosses itself; in the
/// D system two colored diameters cross exactly when the diameters differ
/// and the colors differ.
pub fn edges_cross(family: Family, n: u32, e1: &Edge, e2: &Edge) -> bool {
    if e1 == e2 {
        return false;
    }
    if let (Edge::D(DEdge::Diameter(a, c1)), Edge::D(DEdge::Diameter(b, c2))) = (e1, e2) {
        return a != b && c1 != c2;
    }
    let m = family.polygon_size(n);
    let ch1 = edge_chords(family, n, e1);
    let ch2 = edge_chords(family, n, e2);
    ch1.iter().any(|&x| ch2.iter().any(|&y| chords_cross(m, x, y)))
}

/// Every edge available to `family` on `P_n` / `P_{2n}`, in canonical order.
pub fn edge_set(family: Family, n: u32) -> Vec<Edge> {
    let mut out: Vec<Edge> = match family.base() {
        Family::A => (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| Edge::A(AEdge { i, j })))
            .collect(),
        base => {
            let mut v = Vec::new();
            for a in 1..=n {
                if base == Family::C {
                    v.push(Edge::C(CEdge::Diameter(a)));
                } else {
                    v.push(Edge::D(DEdge::Diameter(a, Color::Solid)));
                    v.push(Edge::D(DEdge::Diameter(a, Color::Dotted)));
                }
            }
            for a in 1..=n {
                for b in a + 1..=n {
                    v.push(Edge::with_shape(base, CsShape::Segregated(a, b), Color::Solid));
                    v.push(Edge::with_shape(base, CsShape::Integrated(a, b), Color::Solid));
                }
            }
            v
        }
    };
    if family.is_classical() {
        out.retain(|e| !e.is_boundary(n));
    }
    out.sort();
    out
}

/// Contribution of one copy of `e` to the edge count.
pub fn edge_weight(family: Family, e: &Edge) -> u32 {
    match (family, e) {
        (Family::D, Edge::D(DEdge::Segregated(..) | DEdge::Integrated(..))) => 2,
        _ => 1,
    }
}

/// A family-tagged multiset of pairwise noncrossing edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidissection {
    family: Family,
    n: u32,
    support: BTreeMap<Edge, u32>,
}

impl Multidissection {
    /// Validates indices, multiplicities and the noncrossing condition.
    /// Zero multiplicities are dropped.
    pub fn new(family: Family, n: u32, mut support: BTreeMap<Edge, u32>) -> Result<Self> {
        support.retain(|_, m| *m > 0);
        for (e, &m) in &support {
            let boundary_ok = !family.is_classical() || !e.is_boundary(n);
            if e.family_base() != family.base() || !e.indices_valid(n) || !boundary_ok {
                return Err(Error::InvalidEdge {
                    family: family.to_string(),
                    n,
                    edge: e.to_string(),
                });
            }
            if family.is_classical() && m > 1 {
                return Err(Error::InvalidParameters(format!(
                    "classical dissections cannot repeat {e}"
                )));
            }
        }
        let edges: Vec<&Edge> = support.keys().collect();
        for (i, e1) in edges.iter().enumerate() {
            for e2 in &edges[i + 1..] {
                if edges_cross(family, n, e1, e2) {
                    return Err(Error::Crossing(e1.to_string(), e2.to_string()));
                }
            }
        }
        Ok(Self { family, n, support })
    }

    pub(crate) fn from_parts_unchecked(family: Family, n: u32, support: BTreeMap<Edge, u32>) -> Self {
        Self { family, n, support }
    }

    pub fn empty(family: Family, n: u32) -> Self {
        Self::from_parts_unchecked(family, n, BTreeMap::new())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn support(&self) -> &BTreeMap<Edge, u32> {
        &self.support
    }

    pub fn multiplicity(&self, e: &Edge) -> u32 {
        self.support.get(e).copied().unwrap_or(0)
    }

    /// Weighted edge count of the family.
    pub fn edge_count(&self) -> u32 {
        self.support
            .iter()
            .map(|(e, &m)| edge_weight(self.family, e) * m)
            .sum()
    }

    /// Re-checks the pairwise noncrossing invariant.
    pub fn is_noncrossing(&self) -> bool {
        let edges: Vec<&Edge> = self.support.keys().collect();
        edges.iter().enumerate().all(|(i, e1)| {
            edges[i + 1..]
                .iter()
                .all(|e2| !edges_cross(self.family, self.n, e1, e2))
        })
    }
}

impl fmt::Display for Multidissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (e, m)) in self.support.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeRecord {
    kind: String,
    a: u32,
    b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    color: Option<Color>,
    #[serde(default)]
    label: String,
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
struct MultidissectionRecord {
    family: Family,
    n: u32,
    edges: Vec<EdgeRecord>,
}

impl Serialize for Multidissection {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges = self
            .support
            .iter()
            .map(|(e, &m)| {
                let (kind, a, b) = match *e {
                    Edge::A(AEdge { i, j }) => ("chord", i, Some(j)),
                    _ => match e.cs_shape().unwrap() {
                        CsShape::Diameter(a) => ("diameter", a, None),
                        CsShape::Segregated(a, b) => ("segregated", a, Some(b)),
                        CsShape::Integrated(a, b) => ("integrated", a, Some(b)),
                    },
                };
                EdgeRecord {
                    kind: kind.to_string(),
                    a,
                    b,
                    color: e.color(),
                    label: e.label(),
                    multiplicity: m,
                }
            })
            .collect();
        MultidissectionRecord {
            family: self.family,
            n: self.n,
            edges,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multidissection {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = MultidissectionRecord::deserialize(d)?;
        let base = rec.family.base();
        let mut support = BTreeMap::new();
        for er in rec.edges {
            let shape = match (er.kind.as_str(), er.b) {
                ("chord", Some(b)) if base == Family::A => {
                    support.insert(Edge::A(AEdge { i: er.a, j: b }), er.multiplicity);
                    continue;
                }
                ("diameter", None) => CsShape::Diameter(er.a),
                ("segregated", Some(b)) => CsShape::Segregated(er.a, b),
                ("integrated", Some(b)) => CsShape::Integrated(er.a, b),
                _ => return Err(D::Error::custom(format!("bad edge record `{}`", er.kind))),
            };
            if base == Family::A {
                return Err(D::Error::custom("centrally symmetric edge in family A"));
            }
            let color = er.color.unwrap_or(Color::Solid);
            support.insert(Edge::with_shape(base, shape, color), er.multiplicity);
        }
        Multidissection::new(rec.family, rec.n, support).map_err(D::Error::custom)
    }
}

/// Precomputed edges, weights and crossing lists for backtracking.
struct EdgeSystem {
    family: Family,
    n: u32,
    edges: Vec<Edge>,
    weights: Vec<u32>,
    crossings: Vec<Vec<usize>>,
    cap: u32,
}

impl EdgeSystem {
    fn new(family: Family, n: u32, weight: &dyn Fn(&Edge) -> Option<u32>) -> Self {
        let (edges, weights): (Vec<Edge>, Vec<u32>) = edge_set(family, n)
            .into_iter()
            .filter_map(|e| weight(&e).map(|w| (e, w)))
            .unzip();
        let crossings = edges
            .iter()
            .map(|e| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, o)| edges_cross(family, n, e, o))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let cap = if family.is_classical() { 1 } else { u32::MAX };
        Self {
            family,
            n,
            edges,
            weights,
            crossings,
            cap,
        }
    }

    fn enumerate(&self, target: u32) -> Vec<Multidissection> {
        let mut out = Vec::new();
        let mut blocked = vec![0u32; self.edges.len()];
        let mut mults = vec![0u32; self.edges.len()];
        self.grow(0, target, &mut blocked, &mut mults, &mut out);
        out
    }

    // Multiplicities are assigned in canonical edge order, 0 first, so the
    // output order is deterministic.
    fn grow(
        &self,
        idx: usize,
        remaining: u32,
        blocked: &mut [u32],
        mults: &mut [u32],
        out: &mut Vec<Multidissection>,
    ) {
        if remaining == 0 {
            let support = self
                .edges
                .iter()
                .zip(mults.iter())
                .filter(|(_, &m)| m > 0)
                .map(|(e, &m)| (*e, m))
                .collect();
            out.push(Multidissection::from_parts_unchecked(self.family, self.n, support));
            return;
        }
        if idx == self.edges.len() {
            return;
        }
        self.grow(idx + 1, remaining, blocked, mults, out);
        let w = self.weights[idx];
        if blocked[idx] > 0 || w == 0 || w > remaining {
            return;
        }
        for &c in &self.crossings[idx] {
            blocked[c] += 1;
        }
        let max_m = (remaining / w).min(self.cap);
        for m in 1..=max_m {
            mults[idx] = m;
            self.grow(idx + 1, remaining - m * w, blocked, mults, out);
        }
        mults[idx] = 0;
        for &c in &self.crossings[idx] {
            blocked[c] -= 1;
        }
    }
}

/// All multidissections of `family` with weighted edge count exactly `k`.
pub fn enumerate_multidissections(family: Family, n: u32, k: u32) -> Result<Vec<Multidissection>> {
    family.check_n(n)?;
    let sys = EdgeSystem::new(family, n, &|e| Some(edge_weight(family, e)));
    Ok(sys.enumerate(k))
}

/// Classical dissections with exactly `k` diagonals (0/1 multiplicities,
/// boundary excluded, centrally symmetric pairs counting once).
pub fn enumerate_classical(family: Family, n: u32, k: u32) -> Result<Vec<Multidissection>> {
    if !family.is_classical() {
        return Err(Error::InvalidParameters(format!(
            "{family} is not a classical family"
        )));
    }
    enumerate_multidissections(family, n, k)
}

/// Enumeration with caller-supplied weights; edges mapped to `None` are
/// excluded. The weighted sum must equal `target`.
pub fn enumerate_weighted(
    family: Family,
    n: u32,
    weight: &dyn Fn(&Edge) -> Option<u32>,
    target: u32,
) -> Vec<Multidissection> {
    EdgeSystem::new(family, n, weight).enumerate(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(i: u32, j: u32) -> Edge {
        Edge::A(AEdge { i, j })
    }

    fn count(f: Family, n: u32, k: u32) -> usize {
        enumerate_multidissections(f, n, k).unwrap().len()
    }

    #[test]
    fn chord_crossing_examples() {
        // 1-based labels shifted to 0-based
        assert!(chords_cross(4, Chord::new(0, 2), Chord::new(1, 3)));
        assert!(!chords_cross(4, Chord::new(0, 1), Chord::new(1, 2)));
        assert!(!chords_cross(9, Chord::new(0, 4), Chord::new(2, 4)));
        assert!(!chords_cross(6, Chord::new(0, 3), Chord::new(0, 3)));
    }

    #[test]
    fn edge_chords_examples() {
        assert_eq!(edge_chords(Family::A, 5, &a(2, 4)), vec![Chord::new(1, 3)]);
        // n = 4: 1..4 -> 0..3, 1̄..4̄ -> 4..7; a b̄ = {0,6}, ā b = {4,2}
        assert_eq!(
            edge_chords(Family::C, 4, &Edge::C(CEdge::Integrated(1, 3))),
            vec![Chord::new(0, 6), Chord::new(2, 4)]
        );
        assert_eq!(
            edge_chords(Family::D, 3, &Edge::D(DEdge::Diameter(1, Color::Solid))),
            vec![Chord::new(0, 3)]
        );
    }

    #[test]
    fn chord_classification_round_trips() {
        for n in 1..=6u32 {
            for e in edge_set(Family::C, n) {
                for ch in edge_chords(Family::C, n, &e) {
                    assert_eq!(Some(cs_shape_of_chord(n, ch)), e.cs_shape());
                }
            }
        }
    }

    #[test]
    fn d_crossing_rules() {
        let d = |a, c| Edge::D(DEdge::Diameter(a, c));
        assert!(!edges_cross(Family::D, 3, &d(1, Color::Solid), &d(2, Color::Solid)));
        assert!(!edges_cross(Family::D, 3, &d(1, Color::Solid), &d(1, Color::Dotted)));
        assert!(edges_cross(Family::D, 3, &d(1, Color::Solid), &d(2, Color::Dotted)));
        // C diameters always cross each other
        assert!(edges_cross(Family::C, 3, &Edge::C(CEdge::Diameter(1)), &Edge::C(CEdge::Diameter(2))));
    }

    #[test]
    fn edge_set_sizes() {
        for n in 1..=8u32 {
            if n >= 3 {
                assert_eq!(edge_set(Family::A, n).len() as u32, n * (n - 1) / 2);
            }
            assert_eq!(edge_set(Family::C, n).len() as u32, n + n * (n - 1));
            assert_eq!(edge_set(Family::D, n).len() as u32, 2 * n + n * (n - 1));
        }
    }

    #[test]
    fn edge_set_is_canonically_ordered() {
        let es = edge_set(Family::D, 3);
        let mut sorted = es.clone();
        sorted.sort();
        assert_eq!(es, sorted);
        assert_eq!(es[0], Edge::D(DEdge::Diameter(1, Color::Solid)));
        assert_eq!(es[1], Edge::D(DEdge::Diameter(1, Color::Dotted)));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(count(Family::A, 4, 1), 6);
        assert_eq!(count(Family::D, 2, 1), 4);
        for k in 0..=10 {
            assert_eq!(count(Family::D, 1, k), k as usize + 1);
        }
    }

    #[test]
    fn classical_examples() {
        assert_eq!(enumerate_classical(Family::ClassicalA, 6, 3).unwrap().len(), 14);
        assert_eq!(enumerate_classical(Family::ClassicalA, 6, 1).unwrap().len(), 9);
        assert_eq!(enumerate_classical(Family::ClassicalBC, 3, 1).unwrap().len(), 6);
        assert_eq!(enumerate_classical(Family::ClassicalBC, 2, 1).unwrap().len(), 2);
        assert!(enumerate_classical(Family::A, 6, 1).is_err());
        // D_n has n^2 almost positive roots
        for n in 2..=5 {
            assert_eq!(enumerate_classical(Family::ClassicalD, n, 1).unwrap().len() as u32, n * n);
        }
    }

    #[test]
    fn bad_n_is_rejected() {
        assert!(enumerate_multidissections(Family::A, 2, 1).is_err());
        assert!(enumerate_multidissections(Family::C, 1, 1).is_err());
        assert!(enumerate_multidissections(Family::D, 0, 1).is_err());
    }

    #[test]
    fn constructor_validates() {
        let crossing = [(a(1, 3), 1), (a(2, 4), 1)].into_iter().collect();
        assert!(matches!(Multidissection::new(Family::A, 4, crossing), Err(Error::Crossing(..))));
        let out_of_range = [(a(1, 5), 1)].into_iter().collect();
        assert!(Multidissection::new(Family::A, 4, out_of_range).is_err());
        let boundary = [(a(1, 2), 1)].into_iter().collect();
        assert!(Multidissection::new(Family::ClassicalA, 4, boundary).is_err());
        let repeated = [(a(1, 3), 2)].into_iter().collect();
        assert!(Multidissection::new(Family::ClassicalA, 4, repeated).is_err());
    }

    #[test]
    fn enumerated_objects_satisfy_invariants() {
        for family in Family::ALL {
            for n in 1..=5 {
                if family.check_n(n).is_err() {
                    continue;
                }
                for k in 0..=4 {
                    let all = enumerate_multidissections(family, n, k).unwrap();
                    let mut uniq = all.clone();
                    uniq.sort();
                    uniq.dedup();
                    assert_eq!(uniq.len(), all.len());
                    for f in &all {
                        assert!(f.is_noncrossing(), "{family} {f}");
                        assert_eq!(f.edge_count(), k);
                        assert!(Multidissection::new(family, n, f.support().clone()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn json_uses_barred_vertex_labels() {
        let f = Multidissection::new(
            Family::D,
            2,
            [(Edge::D(DEdge::Diameter(1, Color::Dotted)), 2)].into_iter().collect(),
        )
        .unwrap();
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(
            js,
            r#"{"family":"D","n":2,"edges":[{"kind":"diameter","a":1,"b":null,"color":"dotted","label":"1-1̄:dotted","multiplicity":2}]}"#
        );
    }

    proptest! {
        #[test]
        fn json_round_trips(family_idx in 0usize..6, n in 1u32..6, k in 0u32..4, pick in 0usize..1000) {
            let family = Family::ALL[family_idx];
            prop_assume!(family.check_n(n).is_ok());
            let all = enumerate_multidissections(family, n, k).unwrap();
            prop_assume!(!all.is_empty());
            let f = &all[pick % all.len()];
            let back: Multidissection = serde_json::from_str(&serde_json::to_string(f).unwrap()).unwrap();
            prop_assert_eq!(&back, f);
        }
    }
}
