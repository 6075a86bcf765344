use std::collections::BTreeMap;

use num_traits::One;
use skewgentle::algebra_core::*;
use skewgentle::fixtures;
use skewgentle::groebner::{Coeff, PathCombination};

fn names(q: &Quiver, arrows: &[usize]) -> Vec<String> {
    arrows.iter().map(|&a| q.arrow_name(a).to_string()).collect()
}

#[test]
fn e3_without_loop_is_gentle() {
    let p = fixtures::e3().gentle_part();
    let r = validate_gentle(&p);
    assert_eq!(r.class, "gentle");
    assert!(r.is_admissible());
}

#[test]
fn single_vertex_is_gentle() {
    let p = presentation(&["1"], &[], &[], &[]).unwrap();
    assert_eq!(validate_gentle(&p).class, "gentle");
    assert_eq!(validate_skew_gentle(&p).class, "skew-gentle");
}

/// Every path of length 3 around the cycle contains a relation, so the ideal
/// contains all paths of length 3 and is admissible.
#[test]
fn saturated_three_cycle_is_gentle() {
    let p = fixtures::e4().gentle_part();
    let q = p.quiver();
    for a in 0..3 {
        let b = q.out_arrows(q.target(a))[0];
        let c = q.out_arrows(q.target(b))[0];
        assert!(p.is_relation(a, b) || p.is_relation(b, c));
    }
    let r = validate_gentle(&p);
    assert!(r.is_valid());
    assert!(r.is_admissible());
}

#[test]
fn free_cycle_is_only_locally_gentle() {
    let p = presentation(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[], &[]).unwrap();
    let r = validate_gentle(&p);
    assert_eq!(r.class, "locally gentle");
    assert!(r.is_valid());
    assert!(!r.is_admissible());
}

#[test]
fn fixtures_are_skew_gentle() {
    for (name, p) in fixtures::all() {
        let r = validate_skew_gentle(&p);
        assert!(r.is_admissible(), "{name}: {:?}", r.failures());
    }
}

/// Vertex 1 then meets two ordinary arrows and no relation joins them.
#[test]
fn e1_with_extra_arrow_is_invalid() {
    let p = presentation(
        &["1", "2", "3", "4", "5"],
        &[("a1", "4", "3"), ("a2", "3", "2"), ("a3", "2", "1"), ("b", "1", "5")],
        &[],
        &["1"],
    )
    .unwrap();
    let r = validate_skew_gentle(&p);
    assert_eq!(r.class, "invalid");
    let failed: Vec<&AxiomCheck> = r.failures();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].axiom.starts_with("(S2)"));
    assert_eq!(failed[0].offenders, vec!["1".to_string()]);
}

#[test]
fn special_vertex_in_a_non_relation_is_invalid() {
    let p = presentation(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[], &["2"]).unwrap();
    assert!(!validate_skew_gentle(&p).is_valid());
}

#[test]
fn repeated_special_vertex_is_reported() {
    let p = presentation(&["1", "2"], &[("a", "1", "2")], &[], &["2", "2"]).unwrap();
    let r = validate_skew_gentle(&p);
    let dup = r.checks.iter().find(|c| c.axiom.starts_with("(S3)")).unwrap();
    assert!(!dup.passed);
}

#[test]
fn dangling_arrow_is_a_structural_error() {
    let err = presentation(&["1"], &[("a", "1", "9")], &[], &[]).unwrap_err();
    assert!(matches!(err, AlgebraError::DanglingArrow { .. }));
    let err = presentation(&["1", "2"], &[("a", "1", "2")], &[("a", "a")], &[]).unwrap_err();
    assert!(matches!(err, AlgebraError::NotComposable(..)));
}

/// A connected tree on five vertices with one branch vertex whose three
/// branches have lengths 1, 1 and 2 is a D5 diagram.
fn is_d5(q: &Quiver) -> bool {
    let n = q.vertex_count();
    if n != 5 || q.arrow_count() != 4 {
        return false;
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..q.arrow_count() {
        adj.entry(q.source(a)).or_default().push(q.target(a));
        adj.entry(q.target(a)).or_default().push(q.source(a));
    }
    if adj.len() != 5 {
        return false;
    }
    let branch: Vec<usize> = adj.iter().filter(|(_, v)| v.len() == 3).map(|(&k, _)| k).collect();
    if branch.len() != 1 || adj.values().any(|v| v.len() > 3) {
        return false;
    }
    let mut lengths: Vec<usize> = adj[&branch[0]]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (branch[0], start, 1);
            while adj[&cur].len() == 2 {
                let next = *adj[&cur].iter().find(|&&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    lengths.sort();
    lengths == vec![1, 1, 2]
}

#[test]
fn e1_presentation_is_d5_without_relations() {
    let a = admissible_presentation(&fixtures::e1()).unwrap();
    assert!(a.relations.is_empty());
    assert!(is_d5(&a.quiver));
    let mut arrows: Vec<String> = a.quiver.arrows().iter().map(|x| x.name.clone()).collect();
    arrows.sort();
    assert_eq!(arrows, vec!["(2,a3,1+)", "(2,a3,1-)", "a1", "a2"]);
    assert_eq!(a.quiver.vertex_count(), 5);
}

/// Each relation is `(i,a1,2+)(2+,a2,1) - (i,a1,2-)(2-,a2,1)` for i = 3+, 3-.
#[test]
fn e2_presentation_has_two_binomials() {
    let a = admissible_presentation(&fixtures::e2()).unwrap();
    let q = &a.quiver;
    assert_eq!(q.vertex_count(), 5);
    assert_eq!(a.relations.len(), 2);
    let mut starts = Vec::new();
    for r in &a.relations {
        assert_eq!(r.len(), 2);
        let mut by_middle: BTreeMap<String, Coeff> = BTreeMap::new();
        for (p, c) in r.terms() {
            assert_eq!(p.len(), 2);
            assert_eq!(q.vertex_name(p.end), "1");
            let mid = q.target(p.arrows[0]);
            by_middle.insert(q.vertex_name(mid).to_string(), c.clone());
            starts.push(q.vertex_name(p.start).to_string());
        }
        let plus = &by_middle["2+"];
        let minus = &by_middle["2-"];
        assert_eq!(*plus, -minus.clone());
        assert!(plus.is_one() || (-plus.clone()).is_one());
    }
    starts.sort();
    starts.dedup();
    assert_eq!(starts, vec!["3+", "3-"]);
    let shown = a.relation_strings();
    assert!(shown.contains(&"-(3-,a1,2-).(2-,a2,1) + (3-,a1,2+).(2+,a2,1)".to_string()), "{shown:?}");
}

#[test]
fn gentle_input_is_unchanged() {
    let p = fixtures::e3().gentle_part();
    let a = admissible_presentation(&p).unwrap();
    assert_eq!(&a.quiver, p.quiver());
    assert_eq!(a.relations.len(), p.relations().len());
    for (r, &(x, y)) in a.relations.iter().zip(p.relations()) {
        assert!(r.is_monomial());
        assert_eq!(r.paths().next().unwrap().arrows, vec![x, y]);
    }
}

#[test]
fn derived_presentations_of_e3() {
    let (lambda, plus) = derived_presentations(&fixtures::e3());
    let rels = |p: &AlgebraPresentation| p.relation_names();
    let expected = vec![("a1".to_string(), "a2".to_string()), ("a4".to_string(), "a3".to_string())];
    assert_eq!(rels(&lambda), expected);
    assert_eq!(rels(&plus), expected);
    assert!(lambda.special_list().is_empty());
}

/// The relation of E2 passes through the special vertex 2, so A+ drops it.
#[test]
fn derived_presentations_of_e2() {
    let (lambda, plus) = derived_presentations(&fixtures::e2());
    assert_eq!(lambda.relation_names(), vec![("a1".to_string(), "a2".to_string())]);
    assert!(plus.relations().is_empty());
}

#[test]
fn derived_presentations_without_special_agree() {
    let p = fixtures::e3().gentle_part();
    let (lambda, plus) = derived_presentations(&p);
    assert_eq!(lambda, plus);
}

#[test]
fn threads_of_e3() {
    let p = fixtures::e3().gentle_part();
    let q = p.quiver();
    let rel = |a: usize, b: usize| p.is_relation(a, b);
    let t = threads(q, &rel).unwrap();
    let mut found: Vec<Vec<String>> = t.threads.iter().map(|th| names(q, &th.arrows)).collect();
    found.sort();
    assert_eq!(found, vec![vec!["a1"], vec!["a2", "a3"], vec!["a4"]]);
    assert!(t.threads.iter().all(|th| !th.cyclic));
}

#[test]
fn collapse_inverts_the_split() {
    for (name, p) in fixtures::all() {
        let a = admissible_presentation(&p).unwrap();
        let back = collapse(&a).unwrap();
        assert!(is_isomorphic(&back, &p).unwrap(), "{name}");
    }
}

#[test]
fn collapse_rejects_a_lone_binomial_half() {
    let a = admissible_presentation(&fixtures::e2()).unwrap();
    let mut broken = a.clone();
    broken.relations.truncate(1);
    assert!(collapse(&broken).is_err());
}

#[test]
fn canonical_form_ignores_names() {
    let p = fixtures::e3();
    let renamed = presentation(
        &["w", "x", "y", "z"],
        &[("g", "y", "w"), ("h", "w", "x"), ("k", "y", "x"), ("m", "x", "z")],
        &[("g", "h"), ("k", "m")],
        &["z"],
    )
    .unwrap();
    assert_eq!(canonical_form(&p).unwrap(), canonical_form(&renamed).unwrap());
    let other_special = p.with_special(vec![]);
    assert_ne!(canonical_form(&p).unwrap(), canonical_form(&other_special).unwrap());
}

#[test]
fn presentation_json_round_trip() {
    for (_, p) in fixtures::all() {
        let back = AlgebraPresentation::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn json_schema_errors() {
    assert!(matches!(AlgebraPresentation::from_json_str("[]"), Err(AlgebraError::Schema(_))));
    assert!(matches!(AlgebraPresentation::from_json_str("{\"arrows\": []}"), Err(AlgebraError::Schema(_))));
    assert!(matches!(
        AlgebraPresentation::from_json_str(r#"{"vertices": ["1"], "relations": [["a"]]}"#),
        Err(AlgebraError::Schema(_))
    ));
    assert!(matches!(
        AlgebraPresentation::from_json_str(r#"{"vertices": ["1"], "special": ["7"]}"#),
        Err(AlgebraError::UnknownSpecial(_))
    ));
}

#[test]
fn split_signs() {
    assert!(Split::Plus.sign().is_one());
    assert_eq!(Split::Minus.sign(), -Coeff::one());
    let a = admissible_presentation(&fixtures::e3()).unwrap();
    let four_plus = a.quiver.vertex_index("4+").unwrap();
    assert_eq!(a.split_of(four_plus), Split::Plus);
    assert_eq!(a.copies(3).len(), 2);
    let zero = PathCombination::zero();
    assert!(zero.is_zero());
}
