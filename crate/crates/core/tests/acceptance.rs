//! One line per acceptance criterion. Runs without the test harness so the
//! lines land in the plain `cargo test` output.

mod common;

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use sepchoose_core::alon_tarsi::{find_at_orientation, is_alon_tarsi};
use sepchoose_core::choose::*;
use sepchoose_core::config::load_catalog;
use sepchoose_core::discharge::ledger::{check_transfer, Step};
use sepchoose_core::discharge::*;
use sepchoose_core::graph::Graph;
use sepchoose_core::merge::*;
use sepchoose_core::rational::{int, q};
use sepchoose_core::template::template_instances;

const CATALOG: &str = include_str!("../fixtures/catalog.cfg");
const AT_ENTRIES: [&str; 11] =
    ["cycle4", "cycle6", "diamond2", "4fan", "d2", "3paths", "3pathsB", "d1", "d9", "d7", "bigneedy"];

/// Pairs of X that may be identified, with their classification.
const MERGEABLE: [&str; 16] = [
    "d1 3-6 candidate",
    "d9 2-7 candidate",
    "d9 3-6 candidate",
    "d7 5-7 candidate",
    "d7 6-8 candidate",
    "bigneedy 3-6 candidate",
    "bigneedy 4-11 candidate",
    "bigneedy 6-10 candidate",
    "bigneedy 6-11 candidate",
    "bigneedy 6-12 candidate",
    "bigneedy 7-11 candidate",
    "bigneedy 8-11 candidate",
    "d8 3-9 candidate",
    "lastconf 3-9 overflow",
    "lastconf 4-8 overflow",
    "d4b 5-9 overflow",
];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Engine verdicts for the whole catalog, shared by the first two criteria.
static CATALOG_RUN: OnceLock<(BTreeMap<String, bool>, Duration)> = OnceLock::new();

fn catalog_run() -> &'static (BTreeMap<String, bool>, Duration) {
    CATALOG_RUN.get_or_init(|| {
        let t = Instant::now();
        let verdicts = load_catalog(CATALOG)
            .unwrap()
            .iter()
            .map(|c| (c.name.clone(), is_reducible(c).map(|v| v.choosable).unwrap_or(false)))
            .collect();
        (verdicts, t.elapsed())
    })
}

fn catalog_reducible() -> Outcome {
    let (verdicts, elapsed) = catalog_run();
    let bad: Vec<&String> = verdicts.iter().filter(|(_, &ok)| !ok).map(|(n, _)| n).collect();
    ensure(bad.is_empty(), || format!("not reducible: {bad:?}"))?;
    ensure(*elapsed < Duration::from_secs(600), || format!("took {elapsed:.0?}"))?;
    Ok(format!("{} entries reducible in {:.1?}", verdicts.len(), elapsed))
}

fn alon_tarsi_bridge() -> Outcome {
    let confs = load_catalog(CATALOG).unwrap();
    let (verdicts, _) = catalog_run();
    for name in AT_ENTRIES {
        let c = confs.iter().find(|c| c.name == name).ok_or(format!("missing {name}"))?;
        let o = find_at_orientation(c.graph(), &c.f()).map_err(|e| e.to_string())?.ok_or(format!("{name}: no orientation"))?;
        ensure(is_alon_tarsi(&o, &c.f()).unwrap(), || format!("{name}: orientation fails its own check"))?;
        ensure(verdicts[name], || format!("{name}: engine disagrees"))?;
    }
    Ok(format!("{} orientations found, 0 disagreements with the engine", AT_ENTRIES.len()))
}

fn odd_cycles() -> Outcome {
    let mut counts = Vec::new();
    for n in [3usize, 5, 7, 9] {
        let g = Graph::cycle(n);
        let colorer = MaskColorer::new(&g);
        let (mut total, mut bad, mut nodes) = (0u64, 0u64, 0u64);
        for_each_assignment(&g, &vec![2; n], 2, |l| {
            let agree = if n < 9 {
                let lists = ListAssignment::from_masks(l);
                odd_cycle_2list_colorable(&lists.lists).unwrap() == find_coloring(&g, &lists).is_some()
            } else {
                odd_cycle_2mask_colorable(l).unwrap() == colorer.solve(l, &mut nodes, None)
            };
            bad += !agree as u64;
            total += 1;
            ControlFlow::Continue(())
        })
        .map_err(|e| e.to_string())?;
        ensure(bad == 0, || format!("C{n}: {bad} of {total} disagree"))?;
        counts.push(format!("C{n} {total}"));
    }
    Ok(format!("predicate agrees on all assignments ({})", counts.join(", ")))
}

fn templates() -> Outcome {
    let all = template_instances(10);
    for c in &all {
        ensure(is_reducible(c).map(|v| v.choosable).unwrap_or(false), || format!("{} not reducible", c.name))?;
    }
    let special = common::special_paths();
    for p in &special {
        let last = p.lists.len() - 1;
        for &a in &p.lists[0] {
            let g = path_block_set(p, PathEnd::Start, a).unwrap();
            ensure(g.len() <= 1, || format!("{p:?}: |g({a})| = {}", g.len()))?;
            if let [b] = g[..] {
                ensure(path_block_set(p, PathEnd::End, b).unwrap() == vec![a] && p.lists[last].contains(&b), || {
                    format!("{p:?}: g not symmetric at {a}")
                })?;
            }
        }
    }
    let extra = common::extra_special_paths();
    for p in &extra {
        let n = p.lists[0].iter().filter(|&&a| !path_block_set(p, PathEnd::Start, a).unwrap().is_empty()).count();
        ensure(n <= 1, || format!("{p:?}: {n} start colors blocked"))?;
    }
    Ok(format!("{} templates reducible; {} special and {} extra-special paths checked", all.len(), special.len(), extra.len()))
}

fn charge_sums() -> Outcome {
    let fixtures = parse_plane_fixtures(PLANE_FIXTURES).map_err(|e| e.to_string())?;
    for (v, want) in [(Variant::C5, -12), (Variant::Cc6, -8), (Variant::Dcc67, -8)] {
        for fx in &fixtures {
            let s = audit_initial_sum(&fx.plane, v, None).map_err(|e| format!("{v} {}: {e}", fx.name))?;
            ensure(s == int(want), || format!("{v} {}: {s}", fx.name))?;
        }
    }
    let mut with_p = 0;
    for fx in fixtures.iter().filter(|f| !f.precolored.is_empty()) {
        let s = audit_initial_sum(&fx.plane, Variant::Cc7, Some(&fx.precolored)).map_err(|e| format!("cc7 {}: {e}", fx.name))?;
        ensure(s <= int(-1), || format!("cc7 {}: {s}", fx.name))?;
        with_p += 1;
    }
    ensure(fixtures.len() >= 5 && with_p >= 5, || "too few fixtures".into())?;
    Ok(format!("{} fixtures exact for c5/cc6/dcc67; {with_p} precoloured cc7 fixtures at most -1", fixtures.len()))
}

fn ledgers() -> Outcome {
    let (mut cases, mut mutations) = (0, 0);
    for v in Variant::ALL {
        for it in run_case_suite(v).map_err(|e| e.to_string())? {
            ensure(it.passed(), || format!("{v} {}: {:?}", it.name, it.failures))?;
            ensure(it.value.is_some_and(|x| it.name.starts_with("transfer/") || x >= int(0)), || format!("{v} {} negative", it.name))?;
            cases += 1;
        }
        let set = parse_ledgers(shipped_ledgers(v)).unwrap();
        for (ci, case) in set.cases.iter().enumerate() {
            for ei in 0..case.entries().count() {
                for sign in [1, -1] {
                    let mut m = set.clone();
                    m.cases[ci].entries_mut().nth(ei).unwrap().amount += q(sign, 72);
                    let caught = !check_ledger(&m.cases[ci]).unwrap().passed()
                        || m.transfers.iter().any(|t| !check_transfer(&m, t).is_empty());
                    ensure(caught, || format!("{} entry {ei} survives a 1/72 change", case.name))?;
                    mutations += 1;
                }
            }
        }
    }
    let find = |v: Variant, n: &str| parse_ledgers(shipped_ledgers(v)).unwrap().cases.into_iter().find(|c| c.name == n).unwrap();
    ensure(evaluate_ledger(&find(Variant::Cc6, "cc6-K3")).unwrap() == int(0), || "cc6 K3 is not 0".into())?;
    ensure(evaluate_ledger(&find(Variant::Dcc67, "dcc67-f5")).unwrap() == q(2, 9), || "dcc67 5-face is not 2/9".into())?;
    let f6 = find(Variant::Cc7, "cc7-f6");
    let before: Vec<_> = f6.steps.iter().filter_map(|s| if let Step::Checkpoint(c) = s { Some(*c) } else { None }).collect();
    ensure(before == vec![q(-1, 4)] && evaluate_ledger(&f6).unwrap() == int(0), || "cc7 6-face is not -1/4 then 0".into())?;
    Ok(format!("{cases} cases and transfers nonnegative; {mutations} mutations all caught"))
}

fn lp() -> Outcome {
    let a = audit_lp();
    ensure(a.integer_min == q(17, 4), || format!("integer min {}", a.integer_min))?;
    ensure(a.relaxation_min == q(161, 40), || format!("relaxation {}", a.relaxation_min))?;
    ensure(!a.printed_vs_derived.feasible && !a.printed_vs_printed.feasible, || "printed certificate feasible".into())?;
    ensure(a.certificate_feasible && a.certificate_objective > int(4), || "no certificate above 4".into())?;
    Ok(format!(
        "integer min 17/4, relaxation 161/40, printed certificate infeasible under both readings, certificate objective {}",
        a.certificate_objective
    ))
}

fn bounds() -> Outcome {
    let mut n = 0;
    for v in Variant::ALL {
        for it in run_bound_suite(v).map_err(|e| e.to_string())? {
            ensure(it.passed(), || format!("{v} {}: {:?}", it.name, it.failures))?;
            n += 1;
        }
    }
    let d6 = verify_vertex_bound(Variant::Cc6, 6).map_err(|e| e.to_string())?;
    ensure(d6 == q(2, 9), || format!("cc6 d=6 gives {d6}"))?;
    Ok(format!("{n} bounds nonnegative, cc6 d=6 is 2/9"))
}

fn merges() -> Outcome {
    let confs = load_catalog(CATALOG).unwrap();
    let (mut pairs, mut merged, mut by_orientation) = (0, 0, 0);
    let mut identifiable = Vec::new();
    for name in LARGE_ENTRIES {
        let c = confs.iter().find(|c| c.name == name).unwrap();
        let classes = classify_pairs(c, 5).map_err(|e| e.to_string())?;
        pairs += classes.len();
        for (a, b, class) in &classes {
            if class.merged().is_some() {
                identifiable.push(format!("{name} {a}-{b} {}", class.tag()));
            }
        }
        for l in enumerate_merge_lists(c, 5).map_err(|e| e.to_string())? {
            let v = verify_merged(&l.merged, MERGE_BUDGET).map_err(|e| format!("{name} {:?}: {e}", l.pairs))?;
            ensure(v.reducible, || format!("{name} {:?} not reducible", l.pairs))?;
            by_orientation += matches!(v.proof, Some(MergedProof::AlonTarsi { .. })) as usize;
            merged += 1;
        }
        let t = identifiable_triples(c, 5).map_err(|e| e.to_string())?;
        ensure(t.is_empty(), || format!("{name}: triples {t:?}"))?;
    }
    ensure(identifiable == MERGEABLE, || format!("partition differs: {identifiable:?}"))?;
    Ok(format!("{pairs} pairs classified; {merged} merges reducible ({by_orientation} via orientation); no triples"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("catalog reducibility", catalog_reducible),
        ("Alon-Tarsi bridge", alon_tarsi_bridge),
        ("odd cycles", odd_cycles),
        ("templates", templates),
        ("charge sums", charge_sums),
        ("ledgers", ledgers),
        ("LP audit", lp),
        ("vertex and face bounds", bounds),
        ("merges", merges),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let (tag, msg) = match r {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("criterion {} {title}: {tag}: {msg} [{:.1?}]", i + 1, t.elapsed());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
