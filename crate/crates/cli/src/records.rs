//! Report types emitted by the commands and their text/CSV renderings.

use serde::Serialize;
use sieve_lab::actions::FoldBijection;
use sieve_lab::clusterlab::{
    AltProofReport, BasisReport, CharacterReport, ConjectureReport, EquivarianceReport, TraceReport,
};
use sieve_lab::cspverify::{CspReport, FoldingReport};
use sieve_lab::{Family, Multidissection};

use crate::output::{cells_of, Record};

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub count: usize,
    /// True when `--limit` cut the listing short.
    pub truncated: bool,
    pub items: Vec<Multidissection>,
}

#[derive(Serialize)]
struct EnumerationRow<'a> {
    family: String,
    n: u32,
    k: u32,
    index: usize,
    multidissection: &'a str,
}

impl Record for Enumeration {
    fn pass(&self) -> bool {
        true
    }

    fn text(&self) -> String {
        let mut out = format!("{} n={} k={}: {} items", self.family, self.n, self.k, self.count);
        for f in &self.items {
            out.push_str(&format!("\n  {f}"));
        }
        if self.truncated {
            out.push_str(&format!("\n  ... ({} not listed)", self.count - self.items.len()));
        }
        out
    }

    fn csv_rows(&self) -> Vec<Vec<(String, String)>> {
        self.items
            .iter()
            .enumerate()
            .map(|(index, f)| {
                cells_of(&EnumerationRow {
                    family: self.family.to_string(),
                    n: self.n,
                    k: self.k,
                    index,
                    multidissection: &f.to_string(),
                })
            })
            .collect()
    }
}

impl Record for CspReport {
    fn pass(&self) -> bool {
        self.csp_holds
    }

    fn text(&self) -> String {
        let i = &self.instance;
        let variant = i.variant.map(|v| format!(" variant={v}")).unwrap_or_default();
        let mut out = format!(
            "{} {} n={} k={}{variant} step={} order={} |X|={} X={}: {}",
            verdict(self.csp_holds),
            i.statement,
            i.n,
            i.k,
            i.generator_step,
            i.group_order,
            self.cardinality,
            i.polynomial,
            if self.csp_holds { "CSP holds" } else { "CSP fails" }
        );
        for c in self.failures() {
            out.push_str(&format!("\n  d={}: fixed {} but X(root) = {}", c.d, c.fixed, c.evaluation));
        }
        for note in &self.notes {
            out.push_str(&format!("\n  note: {note}"));
        }
        out
    }

    fn csv_rows(&self) -> Vec<Vec<(String, String)>> {
        self.rows().iter().map(cells_of).collect()
    }
}

impl Record for BasisReport {
    fn pass(&self) -> bool {
        self.pass
    }

    fn text(&self) -> String {
        let mut out = format!(
            "{} basis {} n={} k={}: count {}, rank {}, expected dimension {}",
            verdict(self.pass),
            self.family,
            self.n,
            self.k,
            self.count,
            self.rank,
            self.expected_dim
        );
        if let Some(w) = &self.witness {
            out.push_str(&format!("\n  vanishing combination: {}", w.join(" + ")));
        }
        out
    }
}

impl Record for ConjectureReport {
    fn pass(&self) -> bool {
        self.pass
    }

    fn text(&self) -> String {
        let mut out = format!(
            "{} D-basis n={} k={}: count {}, quotient basis {}, expected dimension {}, ideal part {}, rank {}, independent mod J {} ({})",
            verdict(self.pass),
            self.n,
            self.k,
            self.count,
            self.quotient_basis_count,
            self.expected_dim,
            self.ideal_spanning_count,
            self.rank,
            self.independent_mod_j,
            self.scope
        );
        if let Some(w) = &self.witness {
            out.push_str(&format!("\n  vanishing combination: {}", w.join(" + ")));
        }
        out
    }
}

impl Record for EquivarianceReport {
    fn pass(&self) -> bool {
        self.pass
    }

    fn text(&self) -> String {
        let mut out = format!(
            "{} equivariance {} n={} k={} ({}): {} objects, {} exact, {} modulo J",
            verdict(self.pass),
            self.family,
            self.n,
            self.k,
            self.mode,
            self.count,
            self.exact_matches,
            self.ideal_matches
        );
        if let Some(ok) = self.discrepancy_is_minor_times_generator {
            out.push_str(&format!(", edge discrepancies are unit multiples of minor times generator: {ok}"));
        }
        for f in &self.failures {
            out.push_str(&format!("\n  fails for {f}"));
        }
        out
    }
}

/// Character identity and rotation traces for one family at `(n, k)`.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterAudit {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub character: CharacterReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub traces: Vec<TraceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alt_proof: Option<AltProofReport>,
    pub pass: bool,
}

impl Record for CharacterAudit {
    fn pass(&self) -> bool {
        self.pass
    }

    fn text(&self) -> String {
        let mut out = format!(
            "{} characters {} n={} k={}: {} = {}",
            verdict(self.pass),
            self.family,
            self.n,
            self.k,
            self.character.lhs,
            self.character.rhs
        );
        for t in &self.traces {
            out.push_str(&format!("\n  d={}: trace {} fixed {}", t.d, t.trace, t.fixed));
        }
        if let Some(alt) = &self.alt_proof {
            for r in &alt.rows {
                out.push_str(&format!(
                    "\n  d={}: character {} fixed {} polynomial {} trace {}",
                    r.d,
                    r.character,
                    r.fixed,
                    r.polynomial,
                    r.trace.as_deref().unwrap_or("-")
                ));
            }
            out.push_str(&format!("\n  {}", alt.scope));
        }
        out
    }
}

/// Odd rotation powers: sizes of the two sides of the correspondence.
#[derive(Clone, Debug, Serialize)]
pub struct OddSummary {
    pub d: u32,
    pub d_side: usize,
    pub c_side: usize,
    pub bijective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FoldingAudit {
    pub n: u32,
    pub k: u32,
    pub counts: FoldingReport,
    pub even: Vec<FoldBijection>,
    pub odd: Vec<OddSummary>,
    pub pass: bool,
}

impl Record for FoldingAudit {
    fn pass(&self) -> bool {
        self.pass
    }

    fn text(&self) -> String {
        let mut out = format!("{} folding n={} k={}", verdict(self.pass), self.n, self.k);
        for b in &self.even {
            let target = match b.target_edges {
                Some(c) => format!("{c}-edge D-multidissections of P_{}", 2 * b.half),
                None => "empty (non-integer edge count)".to_string(),
            };
            out.push_str(&format!(
                "\n  d={}: {} invariant -> {} targets, {target}, bijective {}",
                b.d, b.invariant, b.targets, b.bijective
            ));
        }
        for o in &self.odd {
            out.push_str(&format!(
                "\n  d={}: {} invariant -> {} invariant C-objects, bijective {}",
                o.d, o.d_side, o.c_side, o.bijective
            ));
        }
        out
    }
}
