//! Subcommand implementations. Each returns the text to print and an exit
//! code.

use std::path::Path;

use serde::Serialize;

use equimon::oracle;

use crate::dot;
use crate::instance::{InputError, Instance, Limits};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    End,
    Aut,
    Collapsings,
}

#[derive(Serialize)]
struct Enumeration {
    what: &'static str,
    count: String,
    shown: usize,
    maps: Vec<Vec<u32>>,
}

pub fn analyze(path: &Path, limits: Limits) -> Result<String, InputError> {
    let inst = Instance::load(path, limits)?;
    Ok(Report::analyze(&inst)?.0.to_json())
}

/// Returns the report and whether every check passed.
pub fn verify(path: &Path, limits: Limits, cap: u64, skip_closure: bool) -> Result<(String, bool), InputError> {
    let inst = Instance::load(path, limits)?;
    let report = Report::verify(&inst, cap, skip_closure)?;
    Ok((report.to_json(), report.all_passed()))
}

pub fn enumerate(path: &Path, limits: Limits, what: What, limit: usize) -> Result<String, InputError> {
    let inst = Instance::load(path, limits)?;
    let x = &inst.gset;
    let (name, count, maps): (_, String, Vec<Vec<u32>>) = match what {
        What::End => {
            let count = oracle::count_endomorphisms_by_search(x);
            let shown = oracle::first_endomorphisms(x, limit)
                .into_iter()
                .map(|f| f.images().to_vec())
                .collect();
            ("end", count.to_string(), shown)
        }
        What::Aut => {
            let all = oracle::enumerate_automorphisms(x);
            let shown = all.iter().take(limit).map(|f| f.images().to_vec()).collect();
            ("aut", all.len().to_string(), shown)
        }
        What::Collapsings => {
            let all = oracle::enumerate_fixing_collapsings(x);
            let shown = all.iter().take(limit).map(|f| f.images().to_vec()).collect();
            ("collapsings", all.len().to_string(), shown)
        }
    };
    let out = Enumeration {
        what: name,
        count,
        shown: maps.len(),
        maps,
    };
    Ok(serde_json::to_string(&out).expect("enumerations always serialize"))
}

pub fn poset(path: &Path, limits: Limits) -> Result<String, InputError> {
    let inst = Instance::load(path, limits)?;
    let b = inst.gset.box_decomposition(limits.subgroup_cap)?;
    Ok(dot::box_poset(&b))
}
