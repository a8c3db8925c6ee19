//! Two-row semistandard and seminoncrossing tableaux.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygons::{AEdge, Edge, Family, Multidissection};

/// Shape `(a, b)` with `a >= b >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwoRowShape {
    a: u32,
    b: u32,
}

impl TwoRowShape {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < b {
            return Err(Error::BadShape { a, b });
        }
        Ok(Self { a, b })
    }

    /// The rectangle `(k, k)`.
    pub fn rectangle(k: u32) -> Self {
        Self { a: k, b: k }
    }

    /// The single row `(k)`.
    pub fn row(k: u32) -> Self {
        Self { a: k, b: 0 }
    }

    pub fn first(&self) -> u32 {
        self.a
    }

    pub fn second(&self) -> u32 {
        self.b
    }

    pub fn size(&self) -> u32 {
        self.a + self.b
    }

    /// Number of nonzero rows.
    pub fn length(&self) -> usize {
        (self.a > 0) as usize + (self.b > 0) as usize
    }
}

impl fmt::Display for TwoRowShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Letter multiplicities of a tableau. Trailing zeros are trimmed so that
/// equal contents compare equal regardless of the alphabet size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ContentVector(Vec<u32>);

impl ContentVector {
    pub fn from_counts(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self(counts)
    }

    fn from_letters<'a>(letters: impl IntoIterator<Item = &'a u32>) -> Self {
        let mut counts = Vec::new();
        for &l in letters {
            let i = l as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        Self::from_counts(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// Multiplicity of letter `v` (1-based).
    pub fn get(&self, v: u32) -> u32 {
        self.0.get(v as usize - 1).copied().unwrap_or(0)
    }
}

/// A semistandard tableau with at most two rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoRowTableau {
    pub shape: TwoRowShape,
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl TwoRowTableau {
    pub fn content(&self) -> ContentVector {
        ContentVector::from_letters(self.top.iter().chain(&self.bottom))
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.top.len() == self.shape.a as usize
            && self.bottom.len() == self.shape.b as usize
            && self.top.windows(2).all(|w| w[0] <= w[1])
            && self.bottom.windows(2).all(|w| w[0] <= w[1])
            && self.bottom.iter().zip(&self.top).all(|(b, t)| t < b)
    }

    /// Reading of a standard tableau as a word in {1, 2}: letter `i` is
    /// written 1 if it sits in the top row, 2 otherwise.
    pub fn row_word(&self) -> Vec<u32> {
        let n = self.shape.size();
        (1..=n)
            .map(|i| if self.top.contains(&i) { 1 } else { 2 })
            .collect()
    }
}

impl Serialize for TwoRowTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.top, &self.bottom].serialize(s)
    }
}

/// Calls `visit` with every SSYT of `shape` with entries in `1..=n`, in
/// lexicographic order of (top row, bottom row).
pub fn for_each_ssyt(shape: TwoRowShape, n: u32, mut visit: impl FnMut(&[u32], &[u32])) {
    let (a, b) = (shape.a as usize, shape.b as usize);
    let mut top = vec![0u32; a];
    let mut bottom = vec![0u32; b];
    fill_top(0, 1, n, &mut top, &mut bottom, &mut visit);

    fn fill_top(
        i: usize,
        lo: u32,
        n: u32,
        top: &mut [u32],
        bottom: &mut [u32],
        visit: &mut impl FnMut(&[u32], &[u32]),
    ) {
        if i == top.len() {
            fill_bottom(0, 1, n, top, bottom, visit);
            return;
        }
        for v in lo..=n {
            top[i] = v;
            fill_top(i + 1, v, n, top, bottom, visit);
        }
    }

    fn fill_bottom(
        j: usize,
        lo: u32,
        n: u32,
        top: &[u32],
        bottom: &mut [u32],
        visit: &mut impl FnMut(&[u32], &[u32]),
    ) {
        if j == bottom.len() {
            visit(top, bottom);
            return;
        }
        for v in lo.max(top[j] + 1)..=n {
            bottom[j] = v;
            fill_bottom(j + 1, v, n, top, bottom, visit);
        }
    }
}

pub fn enumerate_ssyt(shape: TwoRowShape, n: u32) -> Vec<TwoRowTableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |t, b| {
        out.push(TwoRowTableau {
            shape,
            top: t.to_vec(),
            bottom: b.to_vec(),
        })
    });
    out
}

/// Number of SSYT of `shape` with entries `<= n`, grouped by content.
pub fn ssyt_content_counts(shape: TwoRowShape, n: u32) -> BTreeMap<ContentVector, u64> {
    let mut out = BTreeMap::new();
    for_each_ssyt(shape, n, |t, b| {
        *out.entry(ContentVector::from_letters(t.iter().chain(b))).or_insert(0) += 1;
    });
    out
}

/// Seminoncrossing tableau of rectangular shape `(k, k)`, stored as its
/// sorted column multiset so that column permutations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SNCTableau {
    columns: Vec<(u32, u32)>,
}

/// `[a, b]` and `[c, d]` cross as intervals.
pub fn intervals_cross((a, b): (u32, u32), (c, d): (u32, u32)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl SNCTableau {
    /// Validates and canonicalizes a column multiset.
    pub fn new(mut columns: Vec<(u32, u32)>) -> Result<Self> {
        for &(a, b) in &columns {
            if a >= b || a == 0 {
                return Err(Error::InvalidParameters(format!(
                    "column ({a},{b}) is not strictly increasing"
                )));
            }
        }
        for (i, &c1) in columns.iter().enumerate() {
            for &c2 in &columns[i + 1..] {
                if intervals_cross(c1, c2) {
                    return Err(Error::CrossingColumns(
                        format!("{},{}", c1.0, c1.1),
                        format!("{},{}", c2.0, c2.1),
                    ));
                }
            }
        }
        columns.sort_unstable();
        Ok(Self { columns })
    }

    pub fn columns(&self) -> &[(u32, u32)] {
        &self.columns
    }

    pub fn shape(&self) -> TwoRowShape {
        TwoRowShape::rectangle(self.columns.len() as u32)
    }

    pub fn content(&self) -> ContentVector {
        ContentVector::from_letters(self.columns.iter().flat_map(|(a, b)| [a, b]))
    }

    /// The tableau rows, columns in canonical order.
    pub fn rows(&self) -> (Vec<u32>, Vec<u32>) {
        self.columns.iter().copied().unzip()
    }
}

impl Serialize for SNCTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (t, b) = self.rows();
        [t, b].serialize(s)
    }
}

/// All seminoncrossing tableaux of shape `(k, k)` with entries `<= n`.
pub fn enumerate_sncr(k: u32, n: u32) -> Vec<SNCTableau> {
    let cols: Vec<(u32, u32)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(&cols, 0, k as usize, &mut chosen, &mut out);
    return out;

    // Columns are chosen as a nondecreasing index sequence, so every
    // multiset is produced exactly once and already sorted.
    fn grow(
        cols: &[(u32, u32)],
        start: usize,
        k: usize,
        chosen: &mut Vec<(u32, u32)>,
        out: &mut Vec<SNCTableau>,
    ) {
        if chosen.len() == k {
            out.push(SNCTableau {
                columns: chosen.clone(),
            });
            return;
        }
        for i in start..cols.len() {
            let c = cols[i];
            if chosen.iter().any(|&o| intervals_cross(o, c)) {
                continue;
            }
            chosen.push(c);
            grow(cols, i, k, chosen, out);
            chosen.pop();
        }
    }
}

/// Edge `(i, j)` with multiplicity `m` becomes `m` copies of the column `i`
/// over `j`.
pub fn multidissection_to_sncr(f: &Multidissection) -> Result<SNCTableau> {
    if f.family() != Family::A {
        return Err(Error::InvalidParameters(format!(
            "expected an A-multidissection, got family {}",
            f.family()
        )));
    }
    let mut cols = Vec::new();
    for (e, &m) in f.support() {
        let Edge::A(AEdge { i, j }) = *e else {
            unreachable!("family A holds only A-edges")
        };
        cols.extend(std::iter::repeat_n((i, j), m as usize));
    }
    SNCTableau::new(cols)
}

/// Inverse of [`multidissection_to_sncr`] on the polygon `P_n`.
pub fn sncr_to_multidissection(t: &SNCTableau, n: u32) -> Result<Multidissection> {
    let mut support = BTreeMap::new();
    for &(i, j) in &t.columns {
        *support.entry(Edge::A(AEdge { i, j })).or_insert(0) += 1;
    }
    Multidissection::new(Family::A, n, support)
}

/// Per-content comparison of SSYT against seminoncrossing tableaux.
#[derive(Clone, Debug, Serialize)]
pub struct ContentComparison {
    pub k: u32,
    pub n: u32,
    pub rows: Vec<(ContentVector, u64, u64)>,
    pub ssyt_total: u64,
    pub sncr_total: u64,
    pub pass: bool,
}

pub fn content_equinumerosity(k: u32, n: u32) -> ContentComparison {
    let ssyt = ssyt_content_counts(TwoRowShape::rectangle(k), n);
    let mut sncr: BTreeMap<ContentVector, u64> = BTreeMap::new();
    for t in enumerate_sncr(k, n) {
        *sncr.entry(t.content()).or_insert(0) += 1;
    }
    let mut keys: Vec<&ContentVector> = ssyt.keys().chain(sncr.keys()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<_> = keys
        .into_iter()
        .map(|c| {
            (
                c.clone(),
                ssyt.get(c).copied().unwrap_or(0),
                sncr.get(c).copied().unwrap_or(0),
            )
        })
        .collect();
    let pass = rows.iter().all(|(_, a, b)| a == b);
    ContentComparison {
        k,
        n,
        ssyt_total: rows.iter().map(|r| r.1).sum(),
        sncr_total: rows.iter().map(|r| r.2).sum(),
        rows,
        pass,
    }
}

/// Every prefix has at least as many `i`s as `(i+1)`s, for every `i`.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &w in word {
        if w == 0 {
            return false;
        }
        let i = w as usize - 1;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
        if i > 0 && counts[i] > counts[i - 1] {
            return false;
        }
    }
    true
}
