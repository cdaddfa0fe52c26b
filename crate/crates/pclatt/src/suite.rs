//! The verification campaign: every registered law on every bundled and
//! generated lattice in range.
//!
//! Laws are evaluated on every pseudocomplemented lattice, whether or not
//! the law's hypothesis class is satisfied; each entry records the
//! hypothesis status. A failure inside the hypothesis class is FATAL (an
//! implementation bug or a broken law); a failure outside is
//! informational and shows that the hypothesis is necessary.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::Classification;
use crate::genlat::{generate_all, GenError};
use crate::io::Fixture;
use crate::lattice::FiniteLattice;
use crate::laws::{evaluate_law, law, registry, Law, LawContext, UnknownLaw};

/// One (lattice, law) evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub lattice: String,
    pub law: String,
    pub hypothesis_met: bool,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl SuiteEntry {
    pub fn is_fatal(&self) -> bool {
        self.hypothesis_met && !self.holds
    }

    pub fn is_informational_failure(&self) -> bool {
        !self.hypothesis_met && !self.holds
    }
}

/// The full report; serializes as a bare array of entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn fatal(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| e.is_fatal())
    }

    pub fn informational_failures(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| e.is_informational_failure())
    }

    pub fn lattice_count(&self) -> usize {
        let mut ids: Vec<&str> = self.entries.iter().map(|e| e.lattice.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks on {} lattices: {} fatal, {} informational failures",
            self.entries.len(),
            self.lattice_count(),
            self.fatal().count(),
            self.informational_failures().count(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<SuiteReport, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Size(#[from] GenError),
    #[error(transparent)]
    UnknownLaw(#[from] UnknownLaw),
}

/// Run `laws` (all registered laws when empty) over the three bundled
/// lattices and every generated lattice with 2..=`max_n` elements
/// (deduplicated). Entries appear for every pseudocomplemented lattice;
/// lattices without a pseudocomplement operation have nothing to
/// evaluate and are skipped.
pub fn run_suite(max_n: usize, law_ids: &[String]) -> Result<SuiteReport, SuiteError> {
    let selected: Vec<&'static Law> = if law_ids.is_empty() {
        registry().iter().collect()
    } else {
        law_ids
            .iter()
            .map(|id| law(id).ok_or_else(|| UnknownLaw(id.clone())))
            .collect::<Result<_, _>>()?
    };
    if max_n > crate::genlat::MAX_N {
        return Err(SuiteError::Size(GenError::SizeLimit(max_n)));
    }

    let mut lattices: Vec<(String, FiniteLattice)> = Fixture::ALL
        .into_iter()
        .map(|f| (f.name().to_string(), f.lattice()))
        .collect();
    for n in 2..=max_n {
        for (i, l) in generate_all(n, true)?.enumerate() {
            lattices.push((format!("n{n}-{i:02}"), l));
        }
    }

    let mut entries = Vec::new();
    for (name, l) in &lattices {
        let cls = Classification::of(l);
        let Some(star) = cls.star.as_ref() else {
            continue;
        };
        let ctx = LawContext::new(l, star);
        for &law in &selected {
            let lv = evaluate_law(&cls, &ctx, law);
            entries.push(SuiteEntry {
                lattice: name.clone(),
                law: law.id.to_string(),
                hypothesis_met: lv.hypothesis_met,
                holds: lv.verdict.holds,
                counterexample: lv.verdict.counterexample.as_ref().map(|c| c.render(l)),
            });
        }
    }
    Ok(SuiteReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_to_four_has_no_fatal_entries() {
        let report = run_suite(4, &[]).unwrap();
        let fatal: Vec<&SuiteEntry> = report.fatal().collect();
        assert!(fatal.is_empty(), "{fatal:?}");
    }

    #[test]
    fn lem1_i_fails_informationally_on_the_pentagon() {
        let report = run_suite(2, &["lem1-i".to_string()]).unwrap();
        let on_a = report
            .entries
            .iter()
            .find(|e| e.lattice == "fig1a")
            .unwrap();
        assert!(!on_a.hypothesis_met);
        assert!(!on_a.holds);
        assert!(on_a.is_informational_failure());
        let on_b = report
            .entries
            .iter()
            .find(|e| e.lattice == "fig1b")
            .unwrap();
        assert!(on_b.hypothesis_met && on_b.holds);
    }

    #[test]
    fn unknown_law_is_rejected() {
        assert!(matches!(
            run_suite(2, &["no-such-law".to_string()]),
            Err(SuiteError::UnknownLaw(_))
        ));
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = run_suite(3, &[]).unwrap();
        let json = report.to_json();
        let back = SuiteReport::from_json(&json).unwrap();
        assert_eq!(report, back);
        // and the schema is a bare array of objects
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(value.is_array());
        let first = &value.as_array().unwrap()[0];
        for key in ["lattice", "law", "hypothesis_met", "holds"] {
            assert!(first.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn campaign_holds_at_the_generator_ceiling() {
        let report = run_suite(8, &[]).unwrap();
        assert_eq!(report.fatal().count(), 0, "{}", report.summary());
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_suite(4, &[]).unwrap();
        let b = run_suite(4, &[]).unwrap();
        assert_eq!(a, b);
    }
}
