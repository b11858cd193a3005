mod common;

use common::{extra_special_paths, special_paths};
use sepchoose_core::choose::{is_reducible, path_block_set, ListPath, PathEnd, Tripod};
use sepchoose_core::config::ExtDegree;
use sepchoose_core::template::{build_template, template_instances, TemplateKind};

#[test]
fn single_inner_vertex_forces_its_other_color() {
    let p = ListPath { lists: vec![vec![1, 5], vec![1, 2], vec![2, 7]], tripod: None };
    assert_eq!(path_block_set(&p, PathEnd::Start, 1).unwrap(), vec![2]);
    assert_eq!(path_block_set(&p, PathEnd::Start, 5).unwrap(), Vec::<u32>::new());
    assert_eq!(path_block_set(&p, PathEnd::End, 2).unwrap(), vec![1]);
}

#[test]
fn malformed_paths_are_rejected() {
    let short = ListPath { lists: vec![vec![1]], tripod: None };
    assert!(path_block_set(&short, PathEnd::Start, 1).is_err());
    let wide = ListPath { lists: vec![vec![1], vec![1, 2, 3], vec![2]], tripod: None };
    assert!(path_block_set(&wide, PathEnd::Start, 1).is_err());
    let bad_tripod =
        ListPath { lists: vec![vec![1], vec![1, 2, 3], vec![2, 3, 4], vec![5]], tripod: Some(Tripod { x: 2, z_list: vec![3] }) };
    assert!(path_block_set(&bad_tripod, PathEnd::Start, 1).is_err());
}

#[test]
fn special_paths_block_at_most_one_color_symmetrically() {
    let all = special_paths();
    assert!(all.len() > 100);
    for p in &all {
        let last = p.lists.len() - 1;
        for &a in &p.lists[0] {
            let g = path_block_set(p, PathEnd::Start, a).unwrap();
            assert!(g.len() <= 1, "{p:?} a={a} g={g:?}");
            if let [b] = g[..] {
                assert!(p.lists[last].contains(&b));
                assert_eq!(path_block_set(p, PathEnd::End, b).unwrap(), vec![a], "{p:?}");
            }
        }
    }
}

#[test]
fn extra_special_paths_block_from_at_most_one_start_color() {
    let all = extra_special_paths();
    assert!(all.len() > 100);
    for p in &all {
        let blocking = p.lists[0].iter().filter(|&&a| !path_block_set(p, PathEnd::Start, a).unwrap().is_empty()).count();
        assert!(blocking <= 1, "{p:?}");
    }
}

#[test]
fn templates_up_to_ten_vertices_are_reducible() {
    let all = template_instances(10);
    let b1 = all.iter().filter(|c| c.name.starts_with("B1")).count();
    assert!(b1 > 0 && b1 < all.len());
    for c in &all {
        assert!(is_reducible(c).unwrap().choosable, "{}", c.name);
    }
}

#[test]
fn template_external_degrees() {
    let b2 = build_template(TemplateKind::B2, 3, 1, 3).unwrap();
    assert_eq!(b2.ex(0), ExtDegree::Finite(2));
    assert_eq!(b2.ex(1), ExtDegree::Finite(0));
    assert_eq!(b2.ex(2), ExtDegree::Finite(1));
    assert_eq!(b2.ex(3), ExtDegree::Inf);
    assert!(!b2.in_x(3));
    let b1 = build_template(TemplateKind::B1, 3, 1, 2).unwrap();
    assert_eq!(b1.ex(2), ExtDegree::Finite(2));
    assert!(b1.graph().has_edge(0, 2));
}
