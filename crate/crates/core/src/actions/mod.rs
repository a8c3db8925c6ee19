//! Rotation and D-rotation, fixed points and orbits.

mod fold;

pub use fold::{
    decompose, fold, fold_target, odd_power_correspondence, unfold, verify_fold_bijection,
    FoldBijection, FoldWitness, OddCorrespondence,
    Orbit, OrbitKind,
};

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::Result;
use crate::polygons::{
    cs_shape_of_chord, edge_chords, edge_set, enumerate_multidissections, AEdge, Chord, Edge, Family,
    Multidissection,
};

/// A cyclic group acting on the multidissections of one family, generated
/// by rotation through `step` vertices (plus a color swap per vertex step
/// in the D systems).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotationAction {
    pub family: Family,
    pub n: u32,
    pub step: u32,
}

impl RotationAction {
    /// The standard generator: one vertex step, except classicalBC, which
    /// rotates by two vertices of `P_{2n}` so that the group has order `n`.
    pub fn new(family: Family, n: u32) -> Self {
        let step = if family == Family::ClassicalBC { 2 } else { 1 };
        Self { family, n, step }
    }

    pub fn with_step(mut self, step: u32) -> Self {
        self.step = step;
        self
    }

    /// Order of the cyclic group the sieving statement is phrased over.
    pub fn group_order(&self) -> u64 {
        match self.family {
            Family::D | Family::ClassicalD => 2 * self.n as u64,
            _ => self.n as u64,
        }
    }

    /// `generator^power` applied to an edge.
    pub fn apply_edge(&self, e: &Edge, power: u64) -> Edge {
        rotate_edge_steps(self.family, self.n, e, power * self.step as u64)
    }

    /// `generator^power` applied to a multidissection.
    pub fn apply(&self, f: &Multidissection, power: u64) -> Multidissection {
        let support: BTreeMap<Edge, u32> = f
            .support()
            .iter()
            .map(|(e, &m)| (self.apply_edge(e, power), m))
            .collect();
        Multidissection::from_parts_unchecked(f.family(), f.n(), support)
    }

    /// Smallest positive power of the generator fixing every edge.
    pub fn order(&self) -> u64 {
        let edges = edge_set(self.family, self.n);
        let bound = 4 * self.n as u64 * self.step.max(1) as u64;
        (1..=bound)
            .find(|&p| edges.iter().all(|e| self.apply_edge(e, p) == *e))
            .expect("rotation has finite order")
    }

    pub fn is_fixed(&self, f: &Multidissection, power: u64) -> bool {
        self.apply(f, power) == *f
    }
}

/// Rotation through `steps` vertex positions; in the D systems every odd
/// step count also swaps diameter colors.
pub fn rotate_edge_steps(family: Family, n: u32, e: &Edge, steps: u64) -> Edge {
    let m = family.polygon_size(n);
    let chord = edge_chords(family, n, e)[0].rotated(m, steps);
    match *e {
        Edge::A(_) => Edge::A(AEdge {
            i: chord.u + 1,
            j: chord.v + 1,
        }),
        _ => {
            let color = match e.color() {
                Some(c) if steps % 2 == 1 => c.swapped(),
                Some(c) => c,
                None => crate::polygons::Color::Solid,
            };
            Edge::with_shape(family.base(), cs_shape_of_chord(n, chord), color)
        }
    }
}

/// One application of the standard generator.
pub fn rotate_edge(family: Family, n: u32, e: &Edge) -> Edge {
    RotationAction::new(family, n).apply_edge(e, 1)
}

pub fn rotate(family: Family, n: u32, f: &Multidissection) -> Multidissection {
    RotationAction::new(family, n).apply(f, 1)
}

/// Exact order of the standard generator on the edge set.
pub fn action_order(family: Family, n: u32) -> u64 {
    RotationAction::new(family, n).order()
}

/// Number of `k`-edge objects fixed by `generator^d`.
pub fn count_fixed(family: Family, n: u32, k: u32, d: u64) -> Result<u64> {
    count_fixed_with(&RotationAction::new(family, n), k, d)
}

pub fn count_fixed_with(action: &RotationAction, k: u32, d: u64) -> Result<u64> {
    let all = enumerate_multidissections(action.family, action.n, k)?;
    Ok(all.par_iter().filter(|f| action.is_fixed(f, d)).count() as u64)
}

pub fn fixed_points(action: &RotationAction, k: u32, d: u64) -> Result<Vec<Multidissection>> {
    let all = enumerate_multidissections(action.family, action.n, k)?;
    Ok(all.into_par_iter().filter(|f| action.is_fixed(f, d)).collect())
}

/// Orbits of the action on `k`-edge objects, each listed in generator
/// order from its least element; orbits are sorted by that element.
pub fn orbits(action: &RotationAction, k: u32) -> Result<Vec<Vec<Multidissection>>> {
    let all = enumerate_multidissections(action.family, action.n, k)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut sorted = all;
    sorted.sort();
    for f in sorted {
        if seen.contains(&f) {
            continue;
        }
        let mut orbit = vec![f.clone()];
        let mut g = action.apply(&f, 1);
        while g != f {
            orbit.push(g.clone());
            g = action.apply(&g, 1);
        }
        seen.extend(orbit.iter().cloned());
        out.push(orbit);
    }
    Ok(out)
}

/// Chord-level rotation re-exported for callers working with raw chords.
pub fn rotate_chord(m: u32, c: Chord, steps: u64) -> Chord {
    c.rotated(m, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::{CEdge, Color, DEdge};

    #[test]
    fn rotate_edge_examples() {
        assert_eq!(
            rotate_edge(Family::A, 4, &Edge::A(AEdge { i: 1, j: 4 })),
            Edge::A(AEdge { i: 1, j: 2 })
        );
        assert_eq!(
            rotate_edge(Family::D, 2, &Edge::D(DEdge::Diameter(1, Color::Solid))),
            Edge::D(DEdge::Diameter(2, Color::Dotted))
        );
        assert_eq!(
            rotate_edge(Family::C, 2, &Edge::C(CEdge::Diameter(2))),
            Edge::C(CEdge::Diameter(1))
        );
        for n in 2..=6 {
            for a in 1..n {
                assert_eq!(
                    rotate_edge(Family::C, n, &Edge::C(CEdge::Segregated(a, n))),
                    Edge::C(CEdge::Integrated(1, a + 1))
                );
                assert_eq!(
                    rotate_edge(Family::C, n, &Edge::C(CEdge::Integrated(a, n))),
                    Edge::C(CEdge::Segregated(1, a + 1))
                );
            }
        }
    }

    #[test]
    fn action_order_examples() {
        assert_eq!(action_order(Family::D, 2), 2);
        assert_eq!(action_order(Family::D, 3), 6);
        assert_eq!(action_order(Family::A, 5), 5);
        for n in 2..=8 {
            if n >= 3 {
                assert_eq!(action_order(Family::A, n), n as u64);
            }
            assert_eq!(action_order(Family::C, n), n as u64);
            let d = if n % 2 == 0 { n } else { 2 * n } as u64;
            assert_eq!(action_order(Family::D, n), d);
        }
    }

    #[test]
    fn generator_power_is_identity() {
        for family in Family::ALL {
            for n in 1..=8 {
                if family.check_n(n).is_err() {
                    continue;
                }
                let act = RotationAction::new(family, n);
                let ord = act.order();
                assert_eq!(act.group_order() % ord, 0, "{family} n={n}");
                for e in edge_set(family, n) {
                    assert_eq!(act.apply_edge(&e, act.group_order()), e);
                }
            }
        }
    }

    #[test]
    fn count_fixed_examples() {
        assert_eq!(count_fixed(Family::A, 4, 1, 2).unwrap(), 2);
        assert_eq!(count_fixed(Family::D, 2, 1, 1).unwrap(), 0);
        assert_eq!(count_fixed(Family::C, 2, 1, 1).unwrap(), 0);
    }

    #[test]
    fn rotation_preserves_structure() {
        for family in Family::ALL {
            for n in 1..=5 {
                if family.check_n(n).is_err() {
                    continue;
                }
                let act = RotationAction::new(family, n);
                for k in 0..=4 {
                    let all: BTreeSet<_> = enumerate_multidissections(family, n, k).unwrap().into_iter().collect();
                    for f in &all {
                        let g = act.apply(f, 1);
                        assert_eq!(g.edge_count(), k);
                        assert!(g.is_noncrossing());
                        assert!(all.contains(&g));
                    }
                }
            }
        }
    }

    #[test]
    fn orbits_partition_the_set() {
        let act = RotationAction::new(Family::C, 3);
        let orbs = orbits(&act, 2).unwrap();
        let total: usize = orbs.iter().map(Vec::len).sum();
        assert_eq!(total, enumerate_multidissections(Family::C, 3, 2).unwrap().len());
        for o in &orbs {
            assert_eq!(act.group_order() as usize % o.len(), 0);
        }
    }

    #[test]
    fn classical_bc_step_one_breaks_q_squared_symmetry() {
        let one = RotationAction::new(Family::ClassicalBC, 2).with_step(1);
        assert_eq!(count_fixed_with(&one, 1, 1).unwrap(), 0);
        assert_eq!(count_fixed_with(&one, 1, 2).unwrap(), 2);
    }
}
