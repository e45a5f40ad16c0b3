//! Registry of known `BR_m` values with the provenance of each bound.

use std::fmt;

use crate::error::{Error, Result};
use crate::search::{find_br_m, nonexistence_criterion, SearchConfig};
use crate::witness::{
    star_witness, verify_good_coloring, witness_6x39, witness_8x29, WitnessCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrValue {
    Exact(usize),
    /// Only a lower bound is established.
    AtLeast(usize),
    Nonexistent,
}

impl fmt::Display for BrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrValue::Exact(v) => write!(f, "{v}"),
            BrValue::AtLeast(v) => write!(f, ">= {v}"),
            BrValue::Nonexistent => f.write_str("NONEXISTENT"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Backed by a good coloring re-verified here.
    VerifiedWitness,
    /// Established by this engine's exhaustive search.
    Searched,
    /// Quoted from published work, not recomputed.
    TrustedLiterature,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Provenance::VerifiedWitness => "verified-witness",
            Provenance::Searched => "searched",
            Provenance::TrustedLiterature => "trusted-literature",
        })
    }
}

/// `BR_m(K_{left,left}, K_{t,t})` and where its bounds come from.
///
/// A `VerifiedWitness` lower bound on `Exact(v)` carries a good coloring of
/// `K_{m,v-1}`; on `Nonexistent` it carries a star coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownValueRecord {
    pub m: usize,
    pub left: usize,
    pub t: usize,
    pub value: BrValue,
    pub lower: Provenance,
    pub upper: Option<Provenance>,
    pub witness: Option<WitnessCertificate>,
    pub note: Option<String>,
}

impl KnownValueRecord {
    fn literature(m: usize, left: usize, t: usize, value: BrValue) -> Self {
        let upper = matches!(value, BrValue::Exact(_)).then_some(Provenance::TrustedLiterature);
        Self {
            m,
            left,
            t,
            value,
            lower: Provenance::TrustedLiterature,
            upper,
            witness: None,
            note: None,
        }
    }

    pub fn pattern(&self) -> String {
        format!(
            "BR_{}(K_{{{l},{l}}}, K_{{{t},{t}}})",
            self.m,
            l = self.left,
            t = self.t
        )
    }

    /// Re-checks the attached witness against the claimed bound.
    pub fn reverify(&self) -> Result<()> {
        if self.lower != Provenance::VerifiedWitness {
            return Ok(());
        }
        let fail = || Error::Reverification(self.pattern());
        let w = self.witness.as_ref().ok_or_else(fail)?;
        let fresh = verify_good_coloring(&w.graph, self.t)?;
        if self.left != 2 || !fresh.is_valid() || w.graph.m() != self.m {
            return Err(fail());
        }
        match self.value {
            BrValue::Exact(v) | BrValue::AtLeast(v) if w.graph.n() + 1 != v => Err(fail()),
            BrValue::Nonexistent if !nonexistence_criterion(self.m, self.t) => Err(fail()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for KnownValueRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.pattern(), self.value)?;
        match self.value {
            BrValue::Nonexistent => write!(
                f,
                " ({})",
                self.note.as_deref().unwrap_or(&self.lower.to_string())
            )?,
            _ => {
                write!(f, ", lower bound {}", self.lower)?;
                if let Some(up) = self.upper {
                    write!(f, ", upper bound {up}")?;
                }
                if let Some(note) = &self.note {
                    write!(f, " ({note})")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub source: &'static str,
    pub record: KnownValueRecord,
}

/// The reproduced value tables for `(K_{2,2}, K_{3,3})`, `(K_{3,3}, K_{3,3})`,
/// `(K_{2,2}, K_{4,4})` and `(K_{2,2}, K_{5,5})`, plus the symmetric
/// `BR(K_{2,2}, K_{5,5}) = 17`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremTable {
    pub entries: Vec<TableEntry>,
    pub symmetric_br_k22_k55: usize,
}

const STAR_REPRESENTATIVE_N: usize = 100;

fn star_record(m: usize, t: usize) -> Result<KnownValueRecord> {
    let witness = verify_good_coloring(&star_witness(m, STAR_REPRESENTATIVE_N)?, t)?;
    Ok(KnownValueRecord {
        m,
        left: 2,
        t,
        value: BrValue::Nonexistent,
        lower: Provenance::VerifiedWitness,
        upper: None,
        witness: Some(witness),
        note: Some("m ≤ t: star construction".into()),
    })
}

fn witness_record(
    m: usize,
    t: usize,
    value: usize,
    witness: WitnessCertificate,
) -> KnownValueRecord {
    KnownValueRecord {
        m,
        left: 2,
        t,
        value: BrValue::Exact(value),
        lower: Provenance::VerifiedWitness,
        upper: Some(Provenance::TrustedLiterature),
        witness: Some(witness),
        note: None,
    }
}

impl TheoremTable {
    /// Builds the registry, re-verifying every witness-backed row.
    pub fn build() -> Result<Self> {
        let mut entries = Vec::new();
        let mut push = |source: &'static str, record: KnownValueRecord| {
            entries.push(TableEntry { source, record })
        };

        const K22_K33: &str = "BR_m(K22,K33)";
        for m in 2..=3 {
            push(K22_K33, star_record(m, 3)?);
        }
        for (m, v) in [(4, 15), (5, 12), (6, 12), (7, 9), (8, 9)] {
            push(
                K22_K33,
                KnownValueRecord::literature(m, 2, 3, BrValue::Exact(v)),
            );
        }

        const K33_K33: &str = "BR_m(K33,K33)";
        for m in 2..=4 {
            push(
                K33_K33,
                KnownValueRecord::literature(m, 3, 3, BrValue::Nonexistent),
            );
        }
        for (m, v) in [(5, 41), (6, 41), (7, 29), (8, 29)] {
            push(
                K33_K33,
                KnownValueRecord::literature(m, 3, 3, BrValue::Exact(v)),
            );
        }

        const K22_K44: &str = "BR_m(K22,K44)";
        for m in 2..=4 {
            push(K22_K44, star_record(m, 4)?);
        }
        for (m, v) in [(5, 26), (6, 22), (7, 22), (8, 16)] {
            push(
                K22_K44,
                KnownValueRecord::literature(m, 2, 4, BrValue::Exact(v)),
            );
        }
        for m in 9..=13 {
            push(
                K22_K44,
                KnownValueRecord::literature(m, 2, 4, BrValue::Exact(14)),
            );
        }

        const K22_K55: &str = "BR_m(K22,K55)";
        for m in 2..=5 {
            push(K22_K55, star_record(m, 5)?);
        }
        push(
            K22_K55,
            witness_record(6, 5, 40, verify_good_coloring(&witness_6x39(), 5)?),
        );
        let w8 = witness_8x29();
        push(
            K22_K55,
            witness_record(
                7,
                5,
                30,
                verify_good_coloring(&w8.select_rows(&[0, 1, 2, 3, 4, 5, 6])?, 5)?,
            ),
        );
        push(
            K22_K55,
            witness_record(8, 5, 30, verify_good_coloring(&w8, 5)?),
        );

        Self::from_entries(entries)
    }

    /// Assembles a table, refusing any witness-backed row that fails re-verification.
    pub fn from_entries(entries: Vec<TableEntry>) -> Result<Self> {
        for e in &entries {
            e.record.reverify()?;
        }
        Ok(Self {
            entries,
            symmetric_br_k22_k55: 17,
        })
    }

    /// Replaces literature rows for `(K_{2,2}, K_{t,t})` with `t <= max_t`
    /// and value `<= max_value` by searched results, when the search completes.
    pub fn upgrade_by_search(
        &mut self,
        max_t: usize,
        max_value: usize,
        cfg: &SearchConfig,
    ) -> Result<()> {
        for e in &mut self.entries {
            let r = &e.record;
            let BrValue::Exact(v) = r.value else { continue };
            if r.left != 2 || r.t > max_t || v > max_value || r.upper == Some(Provenance::Searched)
            {
                continue;
            }
            let found = find_br_m(r.m, r.t, v, cfg)?;
            if found.value == BrValue::Exact(v) {
                e.record = found;
            }
        }
        Ok(())
    }

    pub fn find(&self, left: usize, t: usize, m: usize) -> Option<&KnownValueRecord> {
        self.entries
            .iter()
            .map(|e| &e.record)
            .find(|r| r.left == left && r.t == t && r.m == m)
    }
}

impl fmt::Display for TheoremTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<15} {:>3}  {:<12} {:<18} {:<18}",
            "pattern", "m", "value", "lower bound", "upper bound"
        )?;
        for e in &self.entries {
            let r = &e.record;
            let upper = match (r.value, r.upper) {
                (BrValue::Nonexistent, _) => "-".to_string(),
                (_, Some(p)) => p.to_string(),
                (_, None) => "open".to_string(),
            };
            writeln!(
                f,
                "{:<15} {:>3}  {:<12} {:<18} {:<18}",
                e.source,
                r.m,
                r.value.to_string(),
                r.lower,
                upper
            )?;
        }
        write!(
            f,
            "BR(K22,K55) = {} (trusted-literature)",
            self.symmetric_br_k22_k55
        )
    }
}
