//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p equimon-cli --test acceptance`.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equimon::counting::{self, CardinalityReport};
use equimon::subgroup::{conjugate_subgroup, n_conjugacy_class, normalizer};
use equimon::{fixtures, oracle, Error, EquivariantMap, GSet, GroupTable, Subgroup, SubgroupLattice};
use equimon_cli::{Instance, Limits, Report};

const SEED: u64 = 0x5eed_2024;
const PER_GROUP: usize = 8;
const MAX_POINTS: usize = 16;
const MAX_END: u64 = 1_000_000;
const CLOSURE_MAX_END: u64 = 5_000;
const CAP: usize = 64;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

struct CorpusInstance {
    group_name: &'static str,
    subgroup_orders: Vec<usize>,
    gset: GSet,
}

impl CorpusInstance {
    fn label(&self) -> String {
        format!("{} on cosets of subgroups of orders {:?}", self.group_name, self.subgroup_orders)
    }
}

fn corpus_groups() -> Vec<(&'static str, Arc<GroupTable>)> {
    vec![
        ("Z2", Arc::new(fixtures::cyclic(2))),
        ("Z3", Arc::new(fixtures::cyclic(3))),
        ("Z4", Arc::new(fixtures::cyclic(4))),
        ("Z2xZ2", Arc::new(fixtures::klein4())),
        ("S3", Arc::new(fixtures::symmetric3())),
        ("D4", Arc::new(fixtures::dihedral(4))),
        ("Z6", Arc::new(fixtures::cyclic(6))),
    ]
}

/// Seeded corpus: for each group, `PER_GROUP` G-sets built from 1 to 4
/// coset spaces of random subgroups (weighted by index), with at most
/// `MAX_POINTS` points and predicted `|End|` at most `MAX_END`.
fn corpus() -> Vec<CorpusInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for (name, group) in corpus_groups() {
        let subgroups = SubgroupLattice::new(&group, CAP).unwrap().subgroups().to_vec();
        let mut made = 0;
        let mut attempts = 0;
        while made < PER_GROUP {
            attempts += 1;
            assert!(attempts < 10_000, "corpus generation stalled on {name}");
            let k = rng.gen_range(1..=4);
            // weight by index so that large orbits are common
            let picked: Vec<Subgroup> = (0..k)
                .map(|_| {
                    subgroups
                        .choose_weighted(&mut rng, |h| h.index_in(&group))
                        .unwrap()
                        .clone()
                })
                .collect();
            let points: usize = picked.iter().map(|h| h.index_in(&group)).sum();
            if points > MAX_POINTS {
                continue;
            }
            let gset = GSet::from_coset_spaces(group.clone(), &picked);
            let b = gset.box_decomposition(CAP).unwrap();
            if counting::count_endomorphisms(&b) > BigUint::from(MAX_END) {
                continue;
            }
            out.push(CorpusInstance {
                group_name: name,
                subgroup_orders: picked.iter().map(Subgroup::size).collect(),
                gset,
            });
            made += 1;
        }
    }
    out
}

/// Brute-force counts: every equivariant map is enumerated and each one
/// is checked against the literal collapsing definition.
struct Brute {
    end: Vec<EquivariantMap>,
    aut: usize,
    fixing: BTreeSet<EquivariantMap>,
    types: BTreeSet<oracle::CollapsingType>,
}

fn brute_force(x: &GSet, lattice: &SubgroupLattice) -> Brute {
    let end = oracle::enumerate_endomorphisms(x, MAX_END).unwrap();
    let mut fixing = BTreeSet::new();
    let mut types = BTreeSet::new();
    for f in &end {
        if let Some(t) = oracle::classify_collapsing(x, lattice, f) {
            fixing.insert(f.clone());
            types.insert(t);
        }
    }
    Brute {
        aut: oracle::enumerate_automorphisms(x).len(),
        end,
        fixing,
        types,
    }
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn example_table(x: &GSet) -> BTreeSet<EquivariantMap> {
    [(0, 2), (2, 0), (0, 3), (2, 1), (0, 4), (2, 4), (0, 5), (2, 5), (4, 5), (5, 4)]
        .iter()
        .map(|&(a, b)| oracle::collapsing_map(x, a, b).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let (out, elapsed) = timed(|| {
        let x = fixtures::worked_example();
        let b = x.box_decomposition(CAP).unwrap();
        let end = counting::count_endomorphisms(&b);
        let aut = counting::count_automorphisms(&b);
        let fix = counting::count_fixing_collapsings(&b);
        let brute = brute_force(&x, b.lattice());
        let table = example_table(&x);
        let same_as_1_3 = oracle::collapsing_map(&x, 0, 2).unwrap() == oracle::collapsing_map(&x, 1, 3).unwrap();
        let pass = end == 144u32.into()
            && aut == 16u32.into()
            && fix == 10u32.into()
            && brute.end.len() == 144
            && brute.aut == 16
            && table.len() == 10
            && brute.fixing == table
            && same_as_1_3;
        Outcome::new(
            pass,
            format!(
                "end={end} aut={aut} fixing={fix}; enumerated {} collapsings, equal to table: {}",
                brute.fixing.len(),
                brute.fixing == table
            ),
        )
    });
    let pass = out.pass && elapsed < Duration::from_secs(1);
    Outcome::new(pass, format!("{} ({elapsed:.2?})", out.detail))
}

fn criterion_2(corpus: &[CorpusInstance]) -> Outcome {
    let (out, elapsed) = timed(|| {
        let mut failures = Vec::new();
        let mut largest = 0;
        for inst in corpus {
            let b = inst.gset.box_decomposition(CAP).unwrap();
            let card = CardinalityReport::new(&b);
            let brute = brute_force(&inst.gset, b.lattice());
            largest = largest.max(brute.end.len());
            let got = (
                card.end_count.clone(),
                card.aut_count.clone(),
                card.fixing_collapsing_count.clone(),
                card.collapsing_type_count,
            );
            let want = (
                BigUint::from(brute.end.len()),
                BigUint::from(brute.aut),
                BigUint::from(brute.fixing.len()),
                brute.types.len(),
            );
            if got != want {
                failures.push(format!("{}: formula {got:?} vs brute force {want:?}", inst.label()));
            }
        }
        Outcome::new(
            failures.is_empty() && corpus.len() >= 40,
            if failures.is_empty() {
                format!("{} instances agree on End, Aut, fixing collapsings and types (largest End {largest})", corpus.len())
            } else {
                failures.join("; ")
            },
        )
    });
    let pass = out.pass && elapsed < Duration::from_secs(60);
    Outcome::new(pass, format!("{} ({elapsed:.2?})", out.detail))
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=6u32 {
        let x = fixtures::trivial_action(Arc::new(GroupTable::trivial(1)), n as usize);
        let b = x.box_decomposition(CAP).unwrap();
        let want = (BigUint::from(n).pow(n), factorial(n), BigUint::from(n * (n - 1)));
        let formula = (
            counting::count_endomorphisms(&b),
            counting::count_automorphisms(&b),
            counting::count_fixing_collapsings(&b),
        );
        let brute = brute_force(&x, b.lattice());
        let enumerated = (
            BigUint::from(brute.end.len()),
            BigUint::from(brute.aut),
            BigUint::from(brute.fixing.len()),
        );
        if formula != want || enumerated != want {
            failures.push(format!("trivial n={n}: formula {formula:?}, brute {enumerated:?}, want {want:?}"));
        }
    }
    for (name, group) in corpus_groups() {
        let order = group.order();
        let x = fixtures::regular(group);
        let b = x.box_decomposition(CAP).unwrap();
        let formula = (
            counting::count_endomorphisms(&b),
            counting::count_automorphisms(&b),
            counting::count_fixing_collapsings(&b),
        );
        let brute = brute_force(&x, b.lattice());
        let want = (BigUint::from(order), BigUint::from(order), BigUint::from(0u32));
        let enumerated = (BigUint::from(brute.end.len()), BigUint::from(brute.aut), BigUint::from(brute.fixing.len()));
        if formula != want || enumerated != want {
            failures.push(format!("regular {name}: formula {formula:?}, brute {enumerated:?}"));
        }
    }
    Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            "trivial group n=1..6 and 7 regular actions match the closed forms".to_string()
        } else {
            failures.join("; ")
        },
    )
}

fn criterion_4(corpus: &[CorpusInstance]) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for inst in corpus {
        let x = &inst.gset;
        let b = x.box_decomposition(CAP).unwrap();
        let end = counting::count_endomorphisms(&b);
        if end > BigUint::from(CLOSURE_MAX_END) {
            continue;
        }
        checked += 1;
        let mut gens = oracle::enumerate_automorphisms(x);
        gens.extend(oracle::enumerate_fixing_collapsings(x));
        match oracle::monoid_closure(x.n_points(), &gens, CLOSURE_MAX_END as usize + 1) {
            Ok(closure) if BigUint::from(closure.len()) == end => {}
            Ok(closure) => failures.push(format!("{}: closure {} vs End {end}", inst.label(), closure.len())),
            Err(e) => failures.push(format!("{}: {e}", inst.label())),
        }
    }
    Outcome::new(
        failures.is_empty() && checked > 0,
        if failures.is_empty() {
            format!("closure of Aut and fixing collapsings is all of End on {checked} instances with |End| <= {CLOSURE_MAX_END}")
        } else {
            failures.join("; ")
        },
    )
}

/// `G_{g·x}` against the left-action conjugate, and the normalizer test.
fn stabilizer_translates(x: &GSet) -> Option<String> {
    let group = x.group();
    for p in 0..x.n_points() {
        let h = x.stabilizer(p);
        let n = normalizer(group, &h);
        for g in 0..group.order() {
            let moved = x.stabilizer(x.act(g, p));
            if moved != conjugate_subgroup(group, &h, group.inv(g)) {
                return Some(format!("G_(g.x) != gG_xg^-1 at x={p}, g={g}"));
            }
            if (moved == h) != n.contains(g) {
                return Some(format!("G_(g.x) = G_x does not match g in N(G_x) at x={p}, g={g}"));
            }
        }
    }
    None
}

/// `n1·x = n2·x` iff `n1 H = n2 H` for `n1, n2` in the normalizer of `H = G_x`.
fn normalizer_cosets(x: &GSet) -> Option<String> {
    let group = x.group();
    for p in 0..x.n_points() {
        let h = x.stabilizer(p);
        let n: Vec<usize> = normalizer(group, &h).members().collect();
        for &a in &n {
            for &c in &n {
                let same_point = x.act(a, p) == x.act(c, p);
                let same_coset = h.contains(group.mul(group.inv(a), c));
                if same_point != same_coset {
                    return Some(format!("x={p}, n1={a}, n2={c}"));
                }
            }
        }
    }
    None
}

/// `|B_{G_x} ∩ Gx| = [N_G(G_x) : G_x]`.
fn exact_stabilizer_fibers(x: &GSet) -> Option<String> {
    let group = x.group();
    for p in 0..x.n_points() {
        let h = x.stabilizer(p);
        let fiber = x.orbit(p).into_iter().filter(|&q| x.stabilizer(q) == h).count();
        let index = h.index_of_in(&normalizer(group, &h));
        if fiber != index {
            return Some(format!("x={p}: {fiber} points vs index {index}"));
        }
    }
    None
}

/// `|[K]_{N_H}| = |[gKg⁻¹]_{N_H}|`; when `overgroups_only`, only for `K`
/// and `gKg⁻¹` both containing `H`.
fn nclass_invariance(group: &GroupTable, overgroups_only: bool) -> Option<String> {
    let lattice = SubgroupLattice::new(group, CAP).unwrap();
    for h in lattice.subgroups() {
        let n_h = lattice.normalizer_of(h);
        for k in lattice.subgroups() {
            if overgroups_only && !h.is_subgroup_of(k) {
                continue;
            }
            let size = n_conjugacy_class(group, k, n_h).len();
            for g in 0..group.order() {
                let moved = conjugate_subgroup(group, k, g);
                if overgroups_only && !h.is_subgroup_of(&moved) {
                    continue;
                }
                let moved_size = n_conjugacy_class(group, &moved, n_h).len();
                if moved_size != size {
                    return Some(format!(
                        "H={h:?}, K={k:?}, g={}: |[K]_N_H|={size} but |[g^-1Kg]_N_H|={moved_size}",
                        group.element(g)
                    ));
                }
            }
        }
    }
    None
}

fn criterion_5(corpus: &[CorpusInstance]) -> (Outcome, Outcome) {
    let mut part_failures: [Vec<String>; 4] = Default::default();
    let mut overgroup_failures = Vec::new();
    let mut seen_groups = BTreeSet::new();
    for inst in corpus {
        let x = &inst.gset;
        for (i, check) in [stabilizer_translates, normalizer_cosets, exact_stabilizer_fibers]
            .iter()
            .enumerate()
        {
            if let Some(msg) = check(x) {
                part_failures[i].push(format!("{}: {msg}", inst.label()));
            }
        }
        if seen_groups.insert(inst.group_name) {
            if let Some(msg) = nclass_invariance(x.group(), false) {
                part_failures[3].push(format!("{}: {msg}", inst.group_name));
            }
            if let Some(msg) = nclass_invariance(x.group(), true) {
                overgroup_failures.push(format!("{}: {msg}", inst.group_name));
            }
        }
    }
    let summary: Vec<String> = part_failures
        .iter()
        .enumerate()
        .map(|(i, f)| format!("({}) {}", i + 1, if f.is_empty() { "ok" } else { "FAILED" }))
        .collect();
    let mut detail = summary.join(" ");
    for (i, f) in part_failures.iter().enumerate() {
        if let Some(first) = f.first() {
            detail.push_str(&format!("\n      part ({}) fails on {} case(s), first: {first}", i + 1, f.len()));
        }
    }
    let all = Outcome::new(part_failures.iter().all(Vec::is_empty), detail);
    let variant = Outcome::new(
        overgroup_failures.is_empty(),
        if overgroup_failures.is_empty() {
            format!("holds on all {} corpus groups", seen_groups.len())
        } else {
            overgroup_failures.join("; ")
        },
    );
    (all, variant)
}

fn criterion_6() -> Outcome {
    let mut problems = Vec::new();

    let z2 = Arc::new(fixtures::cyclic(2));
    let three_cycle = equimon::Perm::new(vec![1, 2, 0]).unwrap();
    match GSet::from_generator_action(z2, &[three_cycle], 3) {
        Err(e @ Error::InconsistentAction { .. }) if e.to_string().contains("inconsistent action") => {}
        other => problems.push(format!("library accepted or misreported the 3-cycle action: {other:?}")),
    }
    let fixture = r#"{
        "group": { "degree": 2, "generators": [[1, 0]] },
        "action": { "generator_images": [[1, 2, 0]] }
    }"#;
    match Instance::parse(fixture, Limits::default()) {
        Err(e) if e.to_string().contains("inconsistent action") => {}
        other => problems.push(format!("instance with 3-cycle action: {:?}", other.map(|_| ()))),
    }

    let bad_group = r#"{
        "group": { "degree": 3, "generators": [[0, 0, 1]] },
        "action": { "coset_spaces": [[]] }
    }"#;
    let bad_action = r#"{
        "group": { "degree": 2, "generators": [[1, 0]] },
        "action": { "generator_images": [[1, 1, 2]] }
    }"#;
    for (what, text) in [("group generator", bad_group), ("action image", bad_action)] {
        match Instance::parse(text, Limits::default()) {
            Err(e) if e.to_string().contains("not a permutation") => {}
            other => problems.push(format!("{what} [0,0,1]-style array: {:?}", other.map(|_| ()))),
        }
    }
    if equimon::Perm::new(vec![0, 3, 1]).is_ok() {
        problems.push("out-of-range image accepted".into());
    }
    Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            "inconsistent action and non-permutation arrays rejected".to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn criterion_7(corpus: &[CorpusInstance]) -> Outcome {
    let mut failures = Vec::new();
    let mut kappas = BTreeSet::new();
    for inst in corpus {
        let b = inst.gset.box_decomposition(CAP).unwrap();
        let card = CardinalityReport::new(&b);
        let (types, unclassified) = oracle::enumerate_collapsing_types(&inst.gset, b.lattice());
        if types.len() != card.collapsing_type_count || !unclassified.is_empty() {
            failures.push(format!(
                "{}: formula {} vs oracle {} ({} unclassified)",
                inst.label(),
                card.collapsing_type_count,
                types.len(),
                unclassified.len()
            ));
        }
        if card.kappa + card.collapsing_type_count != card.u_total {
            failures.push(format!("{}: kappa does not account for U", inst.label()));
        }
        kappas.insert(card.kappa);
    }

    // the CLI report carries the same field
    let text = r#"{
        "group": { "degree": 2, "generators": [[1, 0]] },
        "action": { "generator_images": [[1, 0, 3, 2, 4, 5]] }
    }"#;
    let inst = Instance::parse(text, Limits::default()).unwrap();
    let (report, _, card) = Report::analyze(&inst).unwrap();
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    if json["type_accounting"]["kappa"] != card.kappa || json["counts"]["collapsing_types"] != "3" {
        failures.push(format!("report type accounting: {}", json["type_accounting"]));
    }

    Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "type counts match the oracle on {} instances; kappa reported (values seen: {kappas:?})",
                corpus.len()
            )
        } else {
            failures.join("; ")
        },
    )
}

fn report(id: &str, title: &str, out: &Outcome) {
    let mark = if out.pass { "PASS" } else { "FAIL" };
    println!("{mark} [{id}] {title}: {}", out.detail);
}

fn main() {
    let corpus = corpus();
    println!("acceptance: {} corpus instances, seed {SEED:#x}", corpus.len());

    let mut results = Vec::new();
    let mut run = |id: &'static str, title: &str, out: Outcome| {
        report(id, title, &out);
        results.push((id, out.pass));
    };
    run("1", "worked example regression", criterion_1());
    run("2", "formula equals brute force on the corpus", criterion_2(&corpus));
    run("3", "closed-form families", criterion_3());
    run("4", "Aut and fixing collapsings generate End", criterion_4(&corpus));
    let (structural, variant) = criterion_5(&corpus);
    run("5", "structural invariants of stabilizers and normalizer classes", structural);
    println!(
        "     [{}] n-class size invariance restricted to overgroups (informational): {}",
        if variant.pass { "ok" } else { "violated" },
        variant.detail
    );
    run("6", "input validation", criterion_6());
    run("7", "collapsing types and kappa", criterion_7(&corpus));

    let failed: Vec<_> = results.iter().filter(|(_, p)| !p).map(|(id, _)| *id).collect();
    println!(
        "acceptance: {}/{} criteria passed{}",
        results.len() - failed.len(),
        results.len(),
        if failed.is_empty() { String::new() } else { format!("; failing: {}", failed.join(", ")) }
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
