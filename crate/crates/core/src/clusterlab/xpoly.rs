//! Sparse polynomials in the entries `x_{r,c}` of an `N x 2` matrix of
//! variables, with Gaussian-rational coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::GaussRat;
use crate::error::{Error, Result};

/// Exponent vector; entry `2 (r - 1) + (c - 1)` is the exponent of `x_{r,c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nrows: u32) -> Self {
        Monomial(vec![0; 2 * nrows as usize])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Total exponent on rows `1..=n`.
    pub fn degree_in_rows(&self, n: u32) -> u32 {
        self.0[..2 * n as usize].iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

pub fn var_index(row: u32, col: u32) -> usize {
    debug_assert!(row >= 1 && (col == 1 || col == 2));
    2 * (row as usize - 1) + (col as usize - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    nrows: u32,
    terms: BTreeMap<Monomial, GaussRat>,
}

impl XPoly {
    pub fn zero(nrows: u32) -> Self {
        Self {
            nrows,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nrows: u32, c: GaussRat) -> Self {
        let mut p = Self::zero(nrows);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nrows), c);
        }
        p
    }

    pub fn one(nrows: u32) -> Self {
        Self::constant(nrows, GaussRat::one())
    }

    /// The variable `x_{row,col}`.
    pub fn var(nrows: u32, row: u32, col: u32) -> Self {
        assert!(row >= 1 && row <= nrows, "row {row} outside 1..={nrows}");
        let mut m = Monomial::one(nrows);
        m.0[var_index(row, col)] = 1;
        Self {
            nrows,
            terms: [(m, GaussRat::one())].into_iter().collect(),
        }
    }

    pub fn from_terms(nrows: u32, terms: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut p = Self::zero(nrows);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nrows(&self) -> u32 {
        self.nrows
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GaussRat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: &GaussRat) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nrows);
        }
        Self {
            nrows: self.nrows,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nrows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(Monomial::degree).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The common exponent count on rows `1..=n`; errors when monomials
    /// disagree.
    pub fn d_degree(&self, n: u32) -> Result<u32> {
        let degs: BTreeSet<u32> = self.terms.keys().map(|m| m.degree_in_rows(n)).collect();
        match degs.len() {
            0 => Err(Error::InvalidParameters("the zero polynomial has no D-degree".into())),
            1 => Ok(*degs.iter().next().unwrap()),
            _ => Err(Error::MixedDegree),
        }
    }

    /// Division by `g` with respect to the lex order in which the
    /// variables listed in `priority` come first (in that order). Returns
    /// `(quotient, remainder)`; when `g` alone is a Groebner basis of the
    /// ideal it generates (always the case for one generator), the
    /// remainder vanishes exactly when `g` divides `self`.
    pub fn div_rem(&self, g: &XPoly, priority: &[usize]) -> (XPoly, XPoly) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let width = 2 * self.nrows as usize;
        let mut order: Vec<usize> = priority.to_vec();
        order.extend((0..width).filter(|i| !priority.contains(i)));
        let key = |m: &Monomial| -> Vec<u16> { order.iter().map(|&i| m.0[i]).collect() };

        let mut work: BTreeMap<Vec<u16>, (Monomial, GaussRat)> =
            self.terms.iter().map(|(m, c)| (key(m), (m.clone(), c.clone()))).collect();
        let (g_lead_m, g_lead_c) = g
            .terms
            .iter()
            .max_by_key(|(m, _)| key(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let g_lead_inv = g_lead_c.inv();
        let mut quotient = XPoly::zero(self.nrows);
        let mut remainder = XPoly::zero(self.nrows);
        while let Some((_, (m, c))) = work.pop_last() {
            if !g_lead_m.divides(&m) {
                remainder.add_term(m, &c);
                continue;
            }
            let t = m.div(&g_lead_m);
            let coef = &c * &g_lead_inv;
            quotient.add_term(t.clone(), &coef);
            for (gm, gc) in &g.terms {
                if *gm == g_lead_m {
                    continue;
                }
                let prod = gm.mul(&t);
                let delta = -&(&coef * gc);
                let k = key(&prod);
                match work.get_mut(&k) {
                    Some((_, existing)) => {
                        *existing += &delta;
                        if existing.is_zero() {
                            work.remove(&k);
                        }
                    }
                    None => {
                        work.insert(k, (prod, delta));
                    }
                }
            }
        }
        (quotient, remainder)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, o: &XPoly) -> XPoly {
        assert_eq!(self.nrows, o.nrows, "ambient rings differ");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, o: &XPoly) -> XPoly {
        self + &(-o)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            nrows: self.nrows,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, o: &XPoly) -> XPoly {
        assert_eq!(self.nrows, o.nrows, "ambient rings differ");
        let mut out = XPoly::zero(self.nrows);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (idx, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{}{}", idx / 2 + 1, idx % 2 + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A substitution `x_{r,c} -> image` with linear images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSubstitution {
    nrows: u32,
    images: Vec<XPoly>,
}

impl VarSubstitution {
    pub fn identity(nrows: u32) -> Self {
        let images = (1..=nrows)
            .flat_map(|r| [XPoly::var(nrows, r, 1), XPoly::var(nrows, r, 2)])
            .collect();
        Self { nrows, images }
    }

    pub fn set(&mut self, row: u32, col: u32, image: XPoly) {
        assert_eq!(image.nrows, self.nrows);
        self.images[var_index(row, col)] = image;
    }

    pub fn image(&self, row: u32, col: u32) -> &XPoly {
        &self.images[var_index(row, col)]
    }

    pub fn apply(&self, p: &XPoly) -> XPoly {
        assert_eq!(p.nrows, self.nrows, "ambient rings differ");
        let mut powers: HashMap<(usize, u16), XPoly> = HashMap::new();
        let mut out = XPoly::zero(self.nrows);
        for (m, c) in &p.terms {
            let mut term = XPoly::constant(self.nrows, c.clone());
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((idx, e))
                    .or_insert_with(|| self.images[idx].pow(e as u32));
                term = &term * pw;
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, &tc);
            }
        }
        out
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VarSubstitution) -> VarSubstitution {
        VarSubstitution {
            nrows: self.nrows,
            images: self.images.iter().map(|p| next.apply(p)).collect(),
        }
    }

    pub fn power(&self, e: u64) -> VarSubstitution {
        let mut acc = VarSubstitution::identity(self.nrows);
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: u32, r: u32, c: u32) -> XPoly {
        XPoly::var(n, r, c)
    }

    #[test]
    fn arithmetic_is_canonical() {
        let a = x(2, 1, 1);
        let b = x(2, 2, 2);
        assert!((&(&a * &b) - &(&b * &a)).is_zero());
        assert_eq!((&a + &b).len(), 2);
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &b).pow(2).len(), 3);
    }

    #[test]
    fn d_degree_rules() {
        let n = 2;
        let p = &x(4, 1, 1) * &x(4, 3, 2);
        assert_eq!(p.d_degree(n).unwrap(), 1);
        assert_eq!((&x(4, 3, 1) * &x(4, 4, 2)).d_degree(n).unwrap(), 0);
        assert_eq!((&p + &x(4, 1, 2).pow(2)).d_degree(n), Err(Error::MixedDegree));
    }

    #[test]
    fn division_by_single_generator() {
        let n = 3;
        let g = &(&x(n, 2, 1) * &x(n, 3, 2)) - &(&x(n, 2, 2) * &x(n, 3, 1));
        let h = &x(n, 1, 1) + &x(n, 3, 1).pow(2);
        let prio = [var_index(2, 1), var_index(3, 2)];
        let (q, r) = (&g * &h).div_rem(&g, &prio);
        assert!(r.is_zero());
        assert_eq!(q, h);
        let (_, r) = (&(&g * &h) + &x(n, 1, 2)).div_rem(&g, &prio);
        assert_eq!(r, x(n, 1, 2));
    }

    #[test]
    fn substitution_composes() {
        let mut s = VarSubstitution::identity(2);
        s.set(1, 1, x(2, 2, 1));
        s.set(2, 1, x(2, 1, 1).scale(&GaussRat::from_int(-1)));
        let p = &x(2, 1, 1) * &x(2, 2, 2);
        assert_eq!(s.apply(&p), &x(2, 2, 1) * &x(2, 2, 2));
        let s4 = s.power(4);
        assert_eq!(s4, VarSubstitution::identity(2));
        assert_eq!(s.then(&s).apply(&p), s.apply(&s.apply(&p)));
    }
}
