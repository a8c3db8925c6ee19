//! Incremental row echelon form over the Gaussian rationals, with the
//! combination of inserted polynomials behind every stored row.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::xpoly::{Monomial, XPoly};

type Vector = BTreeMap<Monomial, GaussRat>;
type Combination = BTreeMap<usize, GaussRat>;

#[derive(Clone, Debug)]
struct Row {
    vec: Vector,
    combo: Combination,
}

/// Outcome of inserting a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    Independent,
    /// Coefficients `c_i` with `sum c_i p_i = 0`, indexed by insertion
    /// order; the new polynomial has coefficient 1.
    Dependent(Vec<(usize, GaussRat)>),
}

/// Span of a growing list of polynomials. Pivots are the least monomial
/// of each row, so elimination order is deterministic.
#[derive(Clone, Debug, Default)]
pub struct LinearSpan {
    rows: BTreeMap<Monomial, Row>,
    inserted: usize,
}

fn axpy(target: &mut Vector, coef: &GaussRat, source: &Vector) {
    for (m, c) in source {
        let delta = coef * c;
        match target.get_mut(m) {
            Some(v) => {
                *v -= &delta;
                if v.is_zero() {
                    target.remove(m);
                }
            }
            None => {
                target.insert(m.clone(), -&delta);
            }
        }
    }
}

fn axpy_combo(target: &mut Combination, coef: &GaussRat, source: &Combination) {
    for (i, c) in source {
        let delta = coef * c;
        let v = target.entry(*i).or_insert_with(GaussRat::zero);
        *v -= &delta;
        if v.is_zero() {
            target.remove(i);
        }
    }
}

impl LinearSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of polynomials inserted so far (independent or not).
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce(&self, vec: &mut Vector, combo: &mut Combination) {
        let mut cursor: Option<Monomial> = None;
        loop {
            let next = match &cursor {
                None => vec.keys().next().cloned(),
                Some(c) => vec
                    .range((Bound::Excluded(c.clone()), Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                let coef = vec[&key].clone();
                axpy(vec, &coef, &row.vec);
                axpy_combo(combo, &coef, &row.combo);
            }
            cursor = Some(key);
        }
    }

    pub fn insert(&mut self, p: &XPoly) -> Insertion {
        let idx = self.inserted;
        self.inserted += 1;
        let mut vec = p.terms().clone();
        let mut combo: Combination = [(idx, GaussRat::one())].into_iter().collect();
        self.reduce(&mut vec, &mut combo);
        match vec.keys().next().cloned() {
            None => Insertion::Dependent(combo.into_iter().collect()),
            Some(pivot) => {
                let inv = vec[&pivot].inv();
                for v in vec.values_mut() {
                    *v = &*v * &inv;
                }
                for v in combo.values_mut() {
                    *v = &*v * &inv;
                }
                self.rows.insert(pivot, Row { vec, combo });
                Insertion::Independent
            }
        }
    }

    /// Coefficients expressing `p` in the inserted polynomials, or `None`
    /// when `p` lies outside the span.
    pub fn coordinates(&self, p: &XPoly) -> Option<BTreeMap<usize, GaussRat>> {
        let mut vec = p.terms().clone();
        let mut combo = Combination::new();
        self.reduce(&mut vec, &mut combo);
        if !vec.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|(i, c)| (i, -&c)).collect())
    }

    pub fn contains(&self, p: &XPoly) -> bool {
        let mut vec = p.terms().clone();
        self.reduce(&mut vec, &mut Combination::new());
        vec.is_empty()
    }
}

/// Rank of the coefficient matrix of `polys`.
pub fn rank(polys: &[XPoly]) -> usize {
    let mut span = LinearSpan::new();
    for p in polys {
        span.insert(p);
    }
    span.rank()
}
