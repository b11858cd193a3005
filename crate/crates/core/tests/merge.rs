use proptest::prelude::*;
use sepchoose_core::config::{load_catalog, Configuration, ExtDegree};
use sepchoose_core::merge::*;

const CATALOG: &str = include_str!("../fixtures/catalog.cfg");

fn catalog() -> Vec<Configuration> {
    load_catalog(CATALOG).unwrap()
}

fn entry(name: &str) -> Configuration {
    catalog().into_iter().find(|c| c.name == name).unwrap()
}

fn matrix(c: &Configuration) -> Vec<Vec<bool>> {
    let n = c.graph().vertex_count();
    (0..n).map(|u| (0..n).map(|v| c.graph().has_edge(u, v)).collect()).collect()
}

fn floyd(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut d: Vec<Vec<usize>> =
        (0..n).map(|u| (0..n).map(|v| if u == v { 0 } else if adj[u][v] { 1 } else { usize::MAX / 4 }).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

/// Some sequence of `len` distinct vertices is a cycle with an extra edge.
fn has_chorded_cycle(adj: &[Vec<bool>], len: usize) -> bool {
    fn go(adj: &[Vec<bool>], len: usize, seq: &mut Vec<usize>) -> bool {
        if seq.len() == len {
            if !adj[seq[len - 1]][seq[0]] {
                return false;
            }
            return (0..len).any(|i| (i + 2..len).any(|j| !(i == 0 && j == len - 1) && adj[seq[i]][seq[j]]));
        }
        let last = *seq.last().unwrap();
        for w in seq[0] + 1..adj.len() {
            if adj[last][w] && !seq.contains(&w) {
                seq.push(w);
                if go(adj, len, seq) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    (0..adj.len()).any(|s| go(adj, len, &mut vec![s]))
}

fn oracle_tag(c: &Configuration, a: usize, b: usize, len: usize) -> &'static str {
    let adj = matrix(c);
    if floyd(&adj)[a][b] <= 2 {
        return "too-close";
    }
    let n = adj.len();
    let map = |v: usize| if v == b { a } else { v };
    let mut m = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            if adj[u][v] && map(u) != map(v) {
                m[map(u)][map(v)] = true;
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| v != b).collect();
    let merged: Vec<Vec<bool>> = keep.iter().map(|&u| keep.iter().map(|&v| m[u][v]).collect()).collect();
    if has_chorded_cycle(&merged, len) {
        return "chord";
    }
    let room = |v: usize| {
        let ExtDegree::Finite(k) = c.ex(v) else { unreachable!() };
        adj[v].iter().filter(|&&e| e).count() + k as usize
    };
    let merged_degree = m[a].iter().filter(|&&e| e).count();
    if room(a).min(room(b)) < merged_degree {
        "overflow"
    } else {
        "candidate"
    }
}

#[test]
fn classification_matches_the_oracle() {
    for name in LARGE_ENTRIES {
        let c = entry(name);
        for (a, b, class) in classify_pairs(&c, 5).unwrap() {
            assert_eq!(class.tag(), oracle_tag(&c, a, b, 5), "{name} {a}-{b}");
        }
    }
}

#[test]
fn frozen_partition() {
    let mut got = Vec::new();
    for name in LARGE_ENTRIES {
        let c = entry(name);
        for (a, b, class) in classify_pairs(&c, 5).unwrap() {
            if matches!(class.tag(), "candidate" | "overflow") {
                got.push(format!("{name} {a}-{b} {}", class.tag()));
            }
        }
    }
    let want = [
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
    assert_eq!(got, want);
    let d2 = classify_pairs(&entry("d2"), 5).unwrap();
    assert_eq!(d2.iter().filter(|p| p.2 == MergeClassification::CreatesChord).count(), 1);
    assert_eq!(d2.iter().filter(|p| p.2 == MergeClassification::TooClose).count(), 14);
}

#[test]
fn frozen_merge_lists() {
    let lists = |name: &str| -> Vec<String> {
        enumerate_merge_lists(&entry(name), 5)
            .unwrap()
            .iter()
            .map(|l| l.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(","))
            .collect()
    };
    assert_eq!(lists("d1"), ["3-6"]);
    assert_eq!(lists("d9"), ["2-7", "3-6"]);
    assert_eq!(lists("d7"), ["5-7", "6-8"]);
    assert_eq!(lists("bigneedy"), ["3-6", "6-10", "6-11", "6-12", "3-6,4-11", "3-6,8-11"]);
    assert_eq!(lists("d8"), ["3-9"]);
    for name in ["d2", "3paths", "3pathsB", "d5", "d6", "lastconf", "d4", "d4b"] {
        assert!(lists(name).is_empty(), "{name}");
    }
}

#[test]
fn no_identifiable_triples() {
    for name in LARGE_ENTRIES {
        assert!(identifiable_triples(&entry(name), 5).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn small_merges_verify_exhaustively() {
    let l = &enumerate_merge_lists(&entry("d1"), 5).unwrap()[0];
    let v = verify_merged(&l.merged, MERGE_BUDGET).unwrap();
    assert!(v.reducible);
    assert!(matches!(v.proof, Some(MergedProof::Exhaustive { .. })));
}

#[test]
fn longer_forbidden_cycles_change_the_partition() {
    let c = entry("bigneedy");
    let five = classify_pairs(&c, 5).unwrap();
    let six = classify_pairs(&c, 6).unwrap();
    assert_ne!(five, six);
    for (a, b, class) in &six {
        assert_eq!(class.tag(), oracle_tag(&c, *a, *b, 6));
    }
    assert!(classify_pairs(&c, 3).is_err());
}

fn perm_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_ignores_relabeling((idx, perm) in (0usize..22).prop_flat_map(|i| {
        let n = catalog()[i].graph().vertex_count();
        (Just(i), perm_of(n))
    })) {
        let c = &catalog()[idx];
        prop_assert_eq!(canonical_form(c), canonical_form(&permute(c, &perm).unwrap()));
    }

    #[test]
    fn merging_commutes_with_relabeling((idx, perm) in (0usize..5).prop_flat_map(|i| {
        let n = entry(["d1", "d9", "d7", "d8", "lastconf"][i]).graph().vertex_count();
        (Just(i), perm_of(n))
    })) {
        let c = entry(["d1", "d9", "d7", "d8", "lastconf"][idx]);
        let p = permute(&c, &perm).unwrap();
        for (a, b, class) in classify_pairs(&c, 5).unwrap() {
            let other = merge_pair(&p, perm[a], perm[b], 5).unwrap();
            prop_assert_eq!(class.tag(), other.tag());
            if let (Some(x), Some(y)) = (class.merged(), other.merged()) {
                prop_assert_eq!(canonical_form(x), canonical_form(y));
            }
        }
    }
}
