//! Folding invariant D-multidissections onto smaller polygons.
//!
//! Let `rho` be D-rotation to the power `d` (even, dividing `2n`), i.e.
//! rotation by `d` vertices with no net color change. The target polygon
//! has `T` vertices, `T = 2d` when `d | n` and `T = d` otherwise, and
//! vertices of `P_{2n}` project by `v -> v mod T`. Each `rho`-orbit of
//! edges maps to one target edge, except an inscribed polygon (an orbit of
//! chords of span `T/2`), which maps to both colors of one diameter.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{rotate_edge_steps, RotationAction};
use crate::error::{Error, Result};
use crate::polygons::{
    cs_shape_of_chord, edge_chords, enumerate_multidissections, Chord, Color, CsShape, DEdge, Edge,
    Family, Multidissection,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    /// Monochromatic set of diameters.
    Diameters,
    /// Orbit projecting to a segregated pair.
    Segregated,
    /// Orbit projecting to an integrated pair.
    Integrated,
    /// Boundary of an inscribed polygon, split into centrally symmetric pairs.
    InscribedPolygon,
}

/// One `rho`-orbit of edges carrying a common multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub kind: OrbitKind,
    pub edges: Vec<Edge>,
    pub multiplicity: u32,
}

/// Source and image of the fold, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldWitness {
    pub source: Multidissection,
    pub image: Multidissection,
}

/// Vertex count `T` of the target polygon for an even divisor `d` of `2n`.
fn target_size(n: u32, d: u32) -> Result<u32> {
    if d == 0 || d % 2 == 1 || !(2 * n).is_multiple_of(d) {
        return Err(Error::Fold(format!("d = {d} must be an even divisor of 2n = {}", 2 * n)));
    }
    Ok(if n.is_multiple_of(d) { 2 * d } else { d })
}

/// Target D-family parameter and edge count, or `None` when the edge
/// count is not an integer (the target set is then empty).
pub fn fold_target(n: u32, d: u32, k: u32) -> Result<(u32, Option<u32>)> {
    let t = target_size(n, d)?;
    let num = k * t;
    let count = num.is_multiple_of(2 * n).then(|| num / (2 * n));
    Ok((t / 2, count))
}

fn rho_orbit(n: u32, d: u32, e: &Edge) -> Vec<Edge> {
    let mut orbit = vec![*e];
    let mut cur = rotate_edge_steps(Family::D, n, e, d as u64);
    while cur != *e {
        orbit.push(cur);
        cur = rotate_edge_steps(Family::D, n, &cur, d as u64);
    }
    orbit
}

/// A non-diameter chord written as `start -> start + span` clockwise with
/// `span < n`.
fn short_form(n: u32, c: Chord) -> (u32, u32) {
    let len = c.v - c.u;
    if len < n {
        (c.u, len)
    } else {
        (c.v, 2 * n - len)
    }
}

fn cs_pair_of_chord(n: u32, c: Chord) -> Edge {
    Edge::with_shape(Family::D, cs_shape_of_chord(n, c), Color::Solid)
}

/// Splits a `rho`-invariant D-multidissection into orbits with their
/// common multiplicities.
pub fn decompose(n: u32, d: u32, f: &Multidissection) -> Result<Vec<Orbit>> {
    let t = target_size(n, d)?;
    if f.family() != Family::D || f.n() != n {
        return Err(Error::Fold(format!("expected a D-multidissection with n = {n}")));
    }
    let half = t / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (e, &m) in f.support() {
        if seen.contains(e) {
            continue;
        }
        let edges = rho_orbit(n, d, e);
        if let Some(bad) = edges.iter().find(|o| f.multiplicity(o) != m) {
            return Err(Error::Fold(format!("not invariant: {e} has multiplicity {m} but {bad} differs")));
        }
        seen.extend(edges.iter().copied());
        let kind = if e.is_diameter() {
            OrbitKind::Diameters
        } else {
            let (_, span) = short_form(n, edge_chords(Family::D, n, e)[0]);
            match span.cmp(&half) {
                std::cmp::Ordering::Equal => OrbitKind::InscribedPolygon,
                std::cmp::Ordering::Greater => {
                    return Err(Error::Fold(format!("orbit of {e} crosses itself")));
                }
                std::cmp::Ordering::Less => match project_pair(n, t, e) {
                    CsShape::Segregated(..) => OrbitKind::Segregated,
                    _ => OrbitKind::Integrated,
                },
            }
        };
        out.push(Orbit {
            kind,
            edges,
            multiplicity: m,
        });
    }
    Ok(out)
}

fn project_pair(n: u32, t: u32, e: &Edge) -> CsShape {
    let (start, span) = short_form(n, edge_chords(Family::D, n, e)[0]);
    cs_shape_of_chord(t / 2, Chord::new(start % t, (start + span) % t))
}

/// The folding bijection from `rho`-invariant D-multidissections of
/// `P_{2n}` to D-multidissections of the target polygon.
pub fn fold(n: u32, d: u32, f: &Multidissection) -> Result<Multidissection> {
    let t = target_size(n, d)?;
    let half = t / 2;
    let mut support: BTreeMap<Edge, u32> = BTreeMap::new();
    for orbit in decompose(n, d, f)? {
        let rep = orbit.edges[0];
        let c = orbit.multiplicity;
        match orbit.kind {
            OrbitKind::Diameters => {
                let Edge::D(DEdge::Diameter(a, color)) = rep else {
                    unreachable!("diameter orbit")
                };
                *support.entry(Edge::D(DEdge::Diameter((a - 1) % half + 1, color))).or_default() += c;
            }
            OrbitKind::InscribedPolygon => {
                let (start, _) = short_form(n, edge_chords(Family::D, n, &rep)[0]);
                let a = start % half + 1;
                for color in [Color::Solid, Color::Dotted] {
                    *support.entry(Edge::D(DEdge::Diameter(a, color))).or_default() += c;
                }
            }
            OrbitKind::Segregated | OrbitKind::Integrated => {
                let target = Edge::with_shape(Family::D, project_pair(n, t, &rep), Color::Solid);
                *support.entry(target).or_default() += c;
            }
        }
    }
    Multidissection::new(Family::D, half, support)
}

/// Inverse of [`fold`].
pub fn unfold(n: u32, d: u32, g: &Multidissection) -> Result<Multidissection> {
    let t = target_size(n, d)?;
    let half = t / 2;
    if g.family() != Family::D || g.n() != half {
        return Err(Error::Fold(format!("expected a D-multidissection with n = {half}")));
    }
    let mut remaining = g.support().clone();
    let mut support: BTreeMap<Edge, u32> = BTreeMap::new();
    let add_orbit = |e: Edge, c: u32, support: &mut BTreeMap<Edge, u32>| {
        for o in rho_orbit(n, d, &e) {
            *support.entry(o).or_default() += c;
        }
    };
    if half < n {
        for a in 1..=half {
            let solid = Edge::D(DEdge::Diameter(a, Color::Solid));
            let dotted = Edge::D(DEdge::Diameter(a, Color::Dotted));
            let m = g.multiplicity(&solid).min(g.multiplicity(&dotted));
            if m > 0 {
                add_orbit(cs_pair_of_chord(n, Chord::new(a - 1, a - 1 + half)), m, &mut support);
                for e in [solid, dotted] {
                    *remaining.get_mut(&e).unwrap() -= m;
                }
            }
        }
    }
    for (e, c) in remaining {
        if c == 0 {
            continue;
        }
        if e.is_diameter() {
            let Edge::D(DEdge::Diameter(a, color)) = e else { unreachable!() };
            add_orbit(Edge::D(DEdge::Diameter(a, color)), c, &mut support);
        } else {
            let (start, span) = short_form(half, edge_chords(Family::D, half, &e)[0]);
            let lifted = Chord::new(start, (start + span) % (2 * n));
            add_orbit(cs_pair_of_chord(n, lifted), c, &mut support);
        }
    }
    Multidissection::new(Family::D, n, support)
}

/// Round-trip audit of the fold for one even rotation power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldBijection {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub half: u32,
    /// `None` when the target edge count is not an integer.
    pub target_edges: Option<u32>,
    pub invariant: usize,
    pub targets: usize,
    /// Every image has the target edge count.
    pub edge_counts_ok: bool,
    /// `unfold(fold(f)) == f` for every invariant `f`.
    pub round_trip: bool,
    pub bijective: bool,
}

pub fn verify_fold_bijection(n: u32, d: u32, k: u32) -> Result<FoldBijection> {
    let (half, target_edges) = fold_target(n, d, k)?;
    let act = RotationAction::new(Family::D, n);
    let invariant: Vec<_> = enumerate_multidissections(Family::D, n, k)?
        .into_iter()
        .filter(|f| act.is_fixed(f, d as u64))
        .collect();
    let targets: BTreeSet<_> = match target_edges {
        Some(c) => enumerate_multidissections(Family::D, half, c)?.into_iter().collect(),
        None => BTreeSet::new(),
    };
    let mut images = BTreeSet::new();
    let mut edge_counts_ok = true;
    let mut round_trip = true;
    for f in &invariant {
        let g = fold(n, d, f)?;
        edge_counts_ok &= Some(g.edge_count()) == target_edges;
        round_trip &= unfold(n, d, &g)? == *f;
        images.insert(g);
    }
    let bijective = edge_counts_ok && round_trip && images.len() == invariant.len() && images == targets;
    Ok(FoldBijection {
        n,
        d,
        k,
        half,
        target_edges,
        invariant: invariant.len(),
        targets: targets.len(),
        edge_counts_ok,
        round_trip,
        bijective,
    })
}

/// Pairing between `r^d`-invariant D-multidissections (odd `d`) and
/// rotation-invariant C-multidissections with half as many edges.
#[derive(Clone, Debug, Serialize)]
pub struct OddCorrespondence {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub pairs: Vec<(Multidissection, Multidissection)>,
    pub d_side: usize,
    pub c_side: usize,
    /// Every invariant D-object has equal solid and dotted multiplicity on
    /// each diameter.
    pub balanced: bool,
    /// The pairing is injective and hits every invariant C-object.
    pub bijective: bool,
}

fn to_c_side(n: u32, f: &Multidissection) -> Option<Multidissection> {
    let mut support = BTreeMap::new();
    for (e, &m) in f.support() {
        match *e {
            Edge::D(DEdge::Diameter(a, Color::Solid)) => {
                if f.multiplicity(&Edge::D(DEdge::Diameter(a, Color::Dotted))) != m {
                    return None;
                }
                support.insert(Edge::with_shape(Family::C, CsShape::Diameter(a), Color::Solid), m);
            }
            Edge::D(DEdge::Diameter(a, Color::Dotted)) => {
                if f.multiplicity(&Edge::D(DEdge::Diameter(a, Color::Solid))) != m {
                    return None;
                }
            }
            _ => {
                support.insert(Edge::with_shape(Family::C, e.cs_shape().unwrap(), Color::Solid), m);
            }
        }
    }
    Multidissection::new(Family::C, n, support).ok()
}

pub fn odd_power_correspondence(n: u32, d: u32, k: u32) -> Result<OddCorrespondence> {
    if d.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("d = {d} must be odd")));
    }
    if n < 2 {
        return Err(Error::InvalidParameters("the C side needs n >= 2".into()));
    }
    let d_act = RotationAction::new(Family::D, n);
    let d_fixed: Vec<_> = enumerate_multidissections(Family::D, n, k)?
        .into_iter()
        .filter(|f| d_act.is_fixed(f, d as u64))
        .collect();
    let c_fixed: BTreeSet<_> = if k.is_multiple_of(2) {
        let c_act = RotationAction::new(Family::C, n);
        enumerate_multidissections(Family::C, n, k / 2)?
            .into_iter()
            .filter(|f| c_act.is_fixed(f, d as u64))
            .collect()
    } else {
        BTreeSet::new()
    };
    let mut pairs = Vec::new();
    let mut balanced = true;
    for f in &d_fixed {
        match to_c_side(n, f) {
            Some(g) => pairs.push((f.clone(), g)),
            None => balanced = false,
        }
    }
    let images: BTreeSet<_> = pairs.iter().map(|(_, g)| g.clone()).collect();
    let bijective = balanced && images.len() == pairs.len() && images == c_fixed;
    Ok(OddCorrespondence {
        n,
        d,
        k,
        d_side: d_fixed.len(),
        c_side: c_fixed.len(),
        pairs,
        balanced,
        bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diam(a: u32, c: Color) -> Edge {
        Edge::D(DEdge::Diameter(a, c))
    }

    fn md(n: u32, edges: &[(Edge, u32)]) -> Multidissection {
        Multidissection::new(Family::D, n, edges.iter().copied().collect()).unwrap()
    }

    #[test]
    fn fold_examples() {
        let f = md(2, &[(diam(1, Color::Solid), 2)]);
        assert_eq!(fold(2, 2, &f).unwrap(), f);

        let f = md(4, &[(diam(1, Color::Solid), 1), (diam(3, Color::Solid), 1)]);
        assert_eq!(fold(4, 2, &f).unwrap(), md(2, &[(diam(1, Color::Solid), 1)]));

        let square = md(
            4,
            &[(Edge::D(DEdge::Segregated(1, 3)), 1), (Edge::D(DEdge::Integrated(1, 3)), 1)],
        );
        let both = md(2, &[(diam(1, Color::Solid), 1), (diam(1, Color::Dotted), 1)]);
        assert_eq!(fold(4, 2, &square).unwrap(), both);
        assert_eq!(decompose(4, 2, &square).unwrap()[0].kind, OrbitKind::InscribedPolygon);
        assert_eq!(unfold(4, 2, &both).unwrap(), square);
    }

    #[test]
    fn unfold_segregated_pair() {
        let g = md(2, &[(Edge::D(DEdge::Segregated(1, 2)), 1)]);
        let f = unfold(4, 2, &g).unwrap();
        // r^2 orbit of {1 2, 1̄ 2̄}: {1 2, 1̄ 2̄} and {3 4, 3̄ 4̄}
        assert_eq!(
            f,
            md(4, &[(Edge::D(DEdge::Segregated(1, 2)), 1), (Edge::D(DEdge::Segregated(3, 4)), 1)])
        );
        assert_eq!(fold(4, 2, &f).unwrap(), g);
    }

    #[test]
    fn fold_rejects_bad_input() {
        let f = md(4, &[(diam(1, Color::Solid), 1)]);
        assert!(fold(4, 2, &f).is_err());
        assert!(fold(4, 3, &f).is_err());
        assert!(fold(4, 6, &f).is_err());
    }

    #[test]
    fn fold_is_a_bijection_onto_the_target() {
        let mut empty_cases = 0;
        for n in 1..=5u32 {
            for d in (2..=2 * n).step_by(2).filter(|d| (2 * n) % d == 0) {
                for k in 0..=5u32 {
                    let r = verify_fold_bijection(n, d, k).unwrap();
                    assert!(r.bijective, "{r:?}");
                    if r.target_edges.is_none() {
                        assert_eq!(r.invariant, 0);
                        empty_cases += 1;
                    }
                }
            }
        }
        assert!(empty_cases > 0);
    }

    #[test]
    fn odd_power_examples() {
        let c = odd_power_correspondence(2, 1, 1).unwrap();
        assert_eq!((c.d_side, c.c_side), (0, 0));
        let c = odd_power_correspondence(2, 1, 2).unwrap();
        assert_eq!((c.d_side, c.c_side), (0, 0));
        let c = odd_power_correspondence(3, 3, 2).unwrap();
        assert_eq!((c.d_side, c.c_side), (9, 9));
        assert!(c.bijective);
    }

    #[test]
    fn odd_power_is_bijective() {
        for n in 2..=4u32 {
            for d in (1..=2 * n).step_by(2).filter(|d| (2 * n) % d == 0) {
                for k in 0..=4 {
                    let c = odd_power_correspondence(n, d, k).unwrap();
                    assert!(c.balanced && c.bijective, "n={n} d={d} k={k}");
                }
            }
        }
    }
}
