//! Machine-readable analysis and verification reports.

use std::collections::BTreeSet;
use std::fmt::Display;

use num_bigint::BigUint;
use serde::Serialize;

use equimon::counting::CardinalityReport;
use equimon::oracle;
use equimon::subgroup::generators_of;
use equimon::{BoxDecomposition, EquivariantMap};

use crate::instance::{Instance, InputError};

/// Default bound on the number of maps the oracle may enumerate.
pub const DEFAULT_VERIFY_CAP: u64 = 1_000_000;

/// Largest `|End_G(X)|` for which the generation check closes the monoid.
pub const CLOSURE_LIMIT: u64 = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub instance: InstanceSummary,
    pub boxes: Vec<BoxRow>,
    pub counts: Counts,
    pub type_accounting: TypeAccounting,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<CheckVerdict>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceSummary {
    pub group_order: usize,
    pub n_points: usize,
    pub orbit_count: usize,
}

/// One box `B_[H]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxRow {
    pub class_id: usize,
    pub subgroup_order: usize,
    /// Generators of the class representative, as image arrays.
    pub generators: Vec<Vec<u32>>,
    pub alpha: usize,
    pub normalizer_index: usize,
    /// Admissible images for a point of this box.
    pub options: String,
}

/// Counts as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub end: String,
    pub aut: String,
    pub fixing_collapsings: String,
    pub collapsing_types: String,
}

/// `Σ |U(H)|` and the correction term implied by the realizable type count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeAccounting {
    pub u_total: usize,
    pub kappa: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub check: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckVerdict {
    pub fn compare(check: &str, formula: impl Display, oracle: impl Display) -> Self {
        let (formula, oracle) = (formula.to_string(), oracle.to_string());
        CheckVerdict {
            check: check.to_string(),
            verdict: if formula == oracle {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            formula: Some(formula),
            oracle: Some(oracle),
            note: None,
        }
    }

    pub fn skipped(check: &str, note: impl Into<String>) -> Self {
        CheckVerdict {
            check: check.to_string(),
            verdict: Verdict::Skipped,
            formula: None,
            oracle: None,
            note: Some(note.into()),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl Report {
    pub fn analyze(inst: &Instance) -> Result<(Report, BoxDecomposition, CardinalityReport), InputError> {
        let b = inst.gset.box_decomposition(inst.limits.subgroup_cap)?;
        let card = CardinalityReport::new(&b);
        let group = b.group();
        let boxes = b
            .classes()
            .iter()
            .map(|&c| BoxRow {
                class_id: c,
                subgroup_order: b.representative(c).size(),
                generators: generators_of(group, b.representative(c))
                    .into_iter()
                    .map(|e| group.element(e).images().to_vec())
                    .collect(),
                alpha: b.alpha(c),
                normalizer_index: b.normalizer_index(c),
                options: card.per_class_options[&c].to_string(),
            })
            .collect();
        let report = Report {
            instance: InstanceSummary {
                group_order: group.order(),
                n_points: inst.gset.n_points(),
                orbit_count: b.orbits().len(),
            },
            boxes,
            counts: Counts {
                end: card.end_count.to_string(),
                aut: card.aut_count.to_string(),
                fixing_collapsings: card.fixing_collapsing_count.to_string(),
                collapsing_types: card.collapsing_type_count.to_string(),
            },
            type_accounting: TypeAccounting {
                u_total: card.u_total,
                kappa: card.kappa,
            },
            verification: None,
        };
        Ok((report, b, card))
    }

    /// Runs every formula-against-oracle comparison the cap allows.
    pub fn verify(inst: &Instance, cap: u64, skip_closure: bool) -> Result<Report, InputError> {
        let (mut report, b, card) = Report::analyze(inst)?;
        let x = &inst.gset;
        let cap_big = BigUint::from(cap);
        let mut checks = Vec::new();

        // End: materialize every map and check it.
        let mut end_maps: Option<Vec<EquivariantMap>> = None;
        let mut keep = oracle::count_endomorphisms_by_search(x) <= BigUint::from(CLOSURE_LIMIT);
        let mut bad = 0u64;
        let mut stored = Vec::new();
        match oracle::visit_endomorphisms(x, cap, |f| {
            if !oracle::is_equivariant(x, f.images()) {
                bad += 1;
            }
            if keep {
                stored.push(f.clone());
            }
        }) {
            Ok(n) => {
                let mut v = CheckVerdict::compare("endomorphisms", &card.end_count, n);
                if bad > 0 {
                    v.verdict = Verdict::Fail;
                    v = v.with_note(format!("{bad} enumerated maps are not equivariant"));
                }
                checks.push(v);
                end_maps = Some(stored);
            }
            Err(_) => {
                keep = false;
                checks.push(CheckVerdict::skipped(
                    "endomorphisms",
                    format!("more than {cap} maps"),
                ));
            }
        }

        let auts = if card.aut_count <= cap_big {
            let auts = oracle::enumerate_automorphisms(x);
            checks.push(CheckVerdict::compare("automorphisms", &card.aut_count, auts.len()));
            Some(auts)
        } else {
            checks.push(CheckVerdict::skipped(
                "automorphisms",
                format!("more than {cap} maps"),
            ));
            None
        };

        let fixing = oracle::enumerate_fixing_collapsings(x);
        checks.push(CheckVerdict::compare(
            "fixing_collapsings",
            &card.fixing_collapsing_count,
            fixing.len(),
        ));

        let (types, unclassified) = oracle::enumerate_collapsing_types(x, b.lattice());
        let mut v = CheckVerdict::compare("collapsing_types", card.collapsing_type_count, types.len());
        if !unclassified.is_empty() {
            v.verdict = Verdict::Fail;
            v = v.with_note(format!(
                "{} maps [x -> y] fail the collapsing definition",
                unclassified.len()
            ));
        }
        checks.push(v);

        // Every fixing collapsing among all of End has the form [x -> y].
        match &end_maps {
            Some(maps) if keep => {
                let classified: BTreeSet<EquivariantMap> = maps
                    .iter()
                    .filter(|f| oracle::classify_collapsing(x, b.lattice(), f).is_some())
                    .cloned()
                    .collect();
                let mut v = CheckVerdict::compare("collapsing_form", fixing.len(), classified.len());
                if classified != fixing {
                    v.verdict = Verdict::Fail;
                }
                checks.push(v);
            }
            _ => checks.push(CheckVerdict::skipped(
                "collapsing_form",
                format!("needs |End| <= {}", CLOSURE_LIMIT.min(cap)),
            )),
        }

        if skip_closure {
            checks.push(CheckVerdict::skipped("generation", "--skip-closure"));
        } else {
            match (&end_maps, &auts) {
                (Some(maps), Some(auts)) if keep => {
                    let mut gens = auts.clone();
                    gens.extend(fixing.iter().cloned());
                    match oracle::monoid_closure(x.n_points(), &gens, maps.len() + 1) {
                        Ok(closure) => {
                            checks.push(CheckVerdict::compare("generation", maps.len(), closure.len()))
                        }
                        Err(_) => checks.push(
                            CheckVerdict::compare("generation", maps.len(), format!("> {}", maps.len()))
                                .with_note("closure grew past |End|"),
                        ),
                    }
                }
                _ => checks.push(CheckVerdict::skipped(
                    "generation",
                    format!("needs |End| <= {}", CLOSURE_LIMIT.min(cap)),
                )),
            }
        }

        if let Some(expected) = &inst.file.expected {
            let pairs = [
                ("expected.end", &expected.end, report.counts.end.clone()),
                ("expected.aut", &expected.aut, report.counts.aut.clone()),
                (
                    "expected.fixing_collapsings",
                    &expected.fixing_collapsings,
                    report.counts.fixing_collapsings.clone(),
                ),
                (
                    "expected.collapsing_types",
                    &expected.collapsing_types,
                    report.counts.collapsing_types.clone(),
                ),
            ];
            for (name, want, got) in pairs {
                if let Some(want) = want {
                    checks.push(CheckVerdict::compare(name, got, want).with_note("oracle column holds the expected value"));
                }
            }
        }

        report.verification = Some(checks);
        Ok(report)
    }

    pub fn all_passed(&self) -> bool {
        self.verification
            .iter()
            .flatten()
            .all(|c| c.verdict != Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}
