use std::collections::BTreeSet;

use num_traits::One;
use skewgentle::algebra_core::*;
use skewgentle::fixtures;
use skewgentle::groebner::*;

fn arrow(a: &AdmissiblePresentation, name: &str) -> usize {
    a.quiver.arrow_index(name).unwrap_or_else(|| panic!("no arrow {name}"))
}

fn path(a: &AdmissiblePresentation, names: &[&str]) -> Path {
    let arrows: Vec<usize> = names.iter().map(|n| arrow(a, n)).collect();
    Path::from_arrows(&a.quiver, &arrows).expect("composable")
}

/// From 3-, the arrow into 2- ranks as (-,-) and beats the (-,+) arrow into
/// 2+, so the tip of that E2 binomial runs through 2-.
#[test]
fn tip_of_e2_binomial() {
    let a = admissible_presentation(&fixtures::e2()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let high = path(&a, &["(3-,a1,2-)", "(2-,a2,1)"]);
    let low = path(&a, &["(3-,a1,2+)", "(2+,a2,1)"]);
    let x = PathCombination::from_terms([(coeff(1), high.clone()), (coeff(-1), low)]).unwrap();
    assert_eq!(tip(&x, &ord).unwrap(), high);
}

#[test]
fn tip_of_single_path_and_zero() {
    let a = admissible_presentation(&fixtures::e3()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let p = path(&a, &["a1", "a2"]);
    assert_eq!(tip(&PathCombination::from_path(p.clone()), &ord).unwrap(), p);
    assert_eq!(tip(&PathCombination::zero(), &ord), Err(GroebnerError::ZeroTip));
}

/// Length-lex with arrows ranked by declaration: compare the two length-2
/// paths of E3 by hand.
#[test]
fn tip_under_length_lex() {
    let p = fixtures::e3().gentle_part();
    let a = admissible_presentation(&p).unwrap();
    let ord = AdmissibleOrder::length_lex(&a.quiver);
    let ab = path(&a, &["a4", "a3"]);
    let cd = path(&a, &["a1", "a2"]);
    // a4 is declared after a1, so a4.a3 is larger.
    assert!(ord.greater(&ab, &cd));
    let x = PathCombination::from_terms([(coeff(2), Path::from_arrows(&a.quiver, &[0, 1]).unwrap())]).unwrap();
    assert_eq!(tip(&x, &ord).unwrap(), cd);
    let longer = path(&a, &["a2", "a3"]);
    assert!(ord.greater(&longer, &Path::arrow(&a.quiver, arrow(&a, "a4"))));
}

#[test]
fn split_tie_break() {
    let a = admissible_presentation(&fixtures::chain_two_special()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let key = |n: &str| ord.arrow_key(arrow(&a, n));
    assert!(key("(2+,b,3+)") > key("(2-,b,3-)"));
    assert!(key("(2-,b,3-)") > key("(2+,b,3-)"));
    assert!(key("(2+,b,3-)") > key("(2-,b,3+)"));
    assert!(key("(1,a,2+)") > key("(1,a,2-)"));
    assert!(key("(3+,c,4)") > key("(3-,c,4)"));
    // A different base arrow dominates any tie-break.
    assert!(key("(1,a,2-)") < key("(2-,b,3+)"));
}

#[test]
fn monomial_is_killed_in_one_step() {
    let a = admissible_presentation(&fixtures::e3()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let x = PathCombination::from_term(coeff(3), path(&a, &["a1", "a2"]));
    match simple_reduce(&x, &a.relations, &ord) {
        SimpleReduction::Reduced { result, generator, left, right } => {
            assert!(result.is_zero());
            assert_eq!(generator, 0);
            assert!(left.is_trivial() && right.is_trivial());
        }
        SimpleReduction::Irreducible => panic!("a1.a2 is a relation"),
    }
    let r = complete_reduce(&x, &a.relations, &ord, &a.quiver).unwrap();
    assert!(r.result.is_zero());
    assert_eq!(r.steps, 1);
}

#[test]
fn irreducible_stays() {
    let a = admissible_presentation(&fixtures::e3()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let x = PathCombination::from_path(path(&a, &["a2", "(2,a3,4+)"]));
    assert_eq!(simple_reduce(&x, &a.relations, &ord), SimpleReduction::Irreducible);
    let r = complete_reduce(&x, &a.relations, &ord, &a.quiver).unwrap();
    assert_eq!(r.result, x);
    assert_eq!(r.steps, 0);
}

/// Overlap of two binomials along `a b c` in the chain with both middle
/// vertices special. The first simple step replaces the term routed through
/// `(2+, b, 3-)`, the only one divisible by a tip, by the same path routed
/// through `2-`; the second step reaches zero.
#[test]
fn binomial_overlap_reduces_in_two_steps() {
    let a = admissible_presentation(&fixtures::chain_two_special()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let g = &a.relations;
    let find = |t: &[&str]| {
        let want = path(&a, t);
        g.iter().position(|r| tip(r, &ord).unwrap() == want).expect("generator with this tip")
    };
    let x = find(&["(1,a,2+)", "(2+,b,3+)"]);
    let y = find(&["(2+,b,3+)", "(3+,c,4)"]);
    let os = overlap(&g[x], &g[y], &ord);
    assert_eq!(os.len(), 1);
    let o = &os[0];
    assert_eq!(o.n, path(&a, &["(1,a,2+)"]));
    assert_eq!(o.m, path(&a, &["(3+,c,4)"]));
    let detour_a = path(&a, &["(1,a,2-)", "(2-,b,3+)", "(3+,c,4)"]);
    let detour_b = path(&a, &["(1,a,2+)", "(2+,b,3-)", "(3-,c,4)"]);
    let keys: BTreeSet<&Path> = o.relation.paths().collect();
    assert_eq!(keys, BTreeSet::from([&detour_a, &detour_b]));
    assert_eq!(o.relation.coeff_of(&detour_a), -o.relation.coeff_of(&detour_b));

    let SimpleReduction::Reduced { result, .. } = simple_reduce(&o.relation, g, &ord) else {
        panic!("overlap must be reducible");
    };
    let both_minus = path(&a, &["(1,a,2-)", "(2-,b,3-)", "(3-,c,4)"]);
    let keys: BTreeSet<&Path> = result.paths().collect();
    assert_eq!(keys, BTreeSet::from([&detour_a, &both_minus]));
    let full = complete_reduce(&o.relation, g, &ord, &a.quiver).unwrap();
    assert!(full.result.is_zero());
    assert_eq!(full.steps, 2);
}

#[test]
fn quadratic_overlap_shape() {
    let a = admissible_presentation(&fixtures::e4().gentle_part()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let (x, y) = (&a.relations[0], &a.relations[1]);
    let os = overlap(x, y, &ord);
    assert_eq!(os.len(), 1);
    assert_eq!(os[0].n, path(&a, &["a1"]));
    assert_eq!(os[0].m, path(&a, &["a3"]));
    // Both sides are the same path, so the overlap is zero.
    assert!(os[0].relation.is_zero());
}

#[test]
fn e2_binomials_do_not_overlap() {
    let a = admissible_presentation(&fixtures::e2()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    for x in &a.relations {
        for y in &a.relations {
            assert!(overlap(x, y, &ord).is_empty());
        }
    }
}

#[test]
fn certificates_on_fixtures() {
    for (name, p) in fixtures::all() {
        let a = admissible_presentation(&p).unwrap();
        let (cert, g) = certify_strong_koszul(&a);
        assert!(cert.certified, "{name}: {:?}", cert.failure);
        assert!(g.certified);
        assert_eq!(cert.basis.len(), a.relations.len());
        assert!(cert.overlaps.iter().all(|o| o.result == "0"), "{name}");
    }
    let (cert, _) = certify_strong_koszul(&admissible_presentation(&fixtures::e1()).unwrap());
    assert!(cert.basis.is_empty() && cert.overlaps.is_empty());
}

/// E4 has one binomial (through the special vertex) and four monomials. The
/// binomials never overlap each other, so every overlap involves a monomial.
#[test]
fn e4_overlaps_involve_a_monomial() {
    let a = admissible_presentation(&fixtures::e4()).unwrap();
    let ord = AdmissibleOrder::for_presentation(&a);
    let binomials: Vec<&PathCombination> = a.relations.iter().filter(|r| !r.is_monomial()).collect();
    assert_eq!(binomials.len(), 1);
    assert_eq!(a.relations.len(), 5);
    assert!(overlap(binomials[0], binomials[0], &ord).is_empty());
    let (cert, _) = certify_strong_koszul(&a);
    assert!(cert.certified);
    assert!(!cert.overlaps.is_empty());
}

#[test]
fn certificate_json_fields() {
    let a = admissible_presentation(&fixtures::chain_two_special()).unwrap();
    let (cert, _) = certify_strong_koszul(&a);
    let v = cert.to_json();
    for key in ["basis", "overlaps", "certified"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!(!cert.overlaps.is_empty());
    let first = &v["overlaps"][0];
    assert!(first["pair"].is_array() && first["trace"].is_array());
}

#[test]
fn uncertifiable_basis_is_reported() {
    // Two monomials and a binomial that do not form a Groebner basis.
    let p = fixtures::e4().gentle_part();
    let mut a = admissible_presentation(&p).unwrap();
    let extra = PathCombination::from_terms([
        (coeff(1), Path::from_arrows(&a.quiver, &[0]).unwrap()),
    ])
    .unwrap();
    a.relations.push(extra);
    let (cert, g) = certify_strong_koszul(&a);
    assert!(!cert.certified);
    assert!(!g.certified);
    assert!(cert.failure.is_some());
}

#[test]
fn normal_forms_of_e1() {
    let a = admissible_presentation(&fixtures::e1()).unwrap();
    let (_, g) = certify_strong_koszul(&a);
    let v = |n: &str| a.quiver.vertex_index(n).unwrap();
    assert_eq!(normal_form_count(&a, &g, v("4"), v("1+"), None).unwrap(), vec![0, 0, 0, 1]);
    assert_eq!(normal_form_count(&a, &g, v("4"), v("1+"), Some(3)).unwrap(), vec![0, 0, 0, 1]);
    for i in 0..a.vertex_count() {
        for j in 0..a.vertex_count() {
            let c = normal_form_count(&a, &g, i, j, None).unwrap();
            assert_eq!(c[0], u64::from(i == j));
        }
    }
}

#[test]
fn normal_forms_of_e3() {
    let a = admissible_presentation(&fixtures::e3()).unwrap();
    let (_, g) = certify_strong_koszul(&a);
    let v = |n: &str| a.quiver.vertex_index(n).unwrap();
    assert_eq!(normal_form_count(&a, &g, v("1"), v("4+"), None).unwrap(), vec![0, 0, 1]);
    assert_eq!(normal_form_count(&a, &g, v("3"), v("4+"), None).unwrap(), vec![0]);
    assert_eq!(longest_normal_path(&a, &g), Some(2));
}

#[test]
fn free_cycle_is_infinite_dimensional() {
    let p = presentation(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[], &[]).unwrap();
    let a = admissible_presentation(&p).unwrap();
    let (cert, g) = certify_strong_koszul(&a);
    assert!(cert.certified);
    assert!(!is_finite_dimensional(&a, &g));
    assert_eq!(normal_form_count(&a, &g, 0, 1, None), Err(GroebnerError::InfiniteDimensional));
    assert_eq!(normal_form_count(&a, &g, 0, 1, Some(4)).unwrap(), vec![0, 1, 0, 1]);
}

fn length_two_paths(q: &Quiver) -> usize {
    (0..q.arrow_count()).map(|x| q.out_arrows(q.target(x)).len()).sum()
}

#[test]
fn dual_of_e1_is_radical_square_zero() {
    let a = admissible_presentation(&fixtures::e1()).unwrap();
    let d = quadratic_dual(&a).unwrap();
    assert_eq!(length_two_paths(&d.quiver), 3);
    assert_eq!(d.relations.len(), 3);
    assert!(d.relations.iter().all(PathCombination::is_monomial));
}

/// Every length-2 path of E2's split quiver occurs in a binomial, so the dual
/// has just the two opposite commutativity relations.
#[test]
fn dual_of_e2_is_two_commutativity_relations() {
    let a = admissible_presentation(&fixtures::e2()).unwrap();
    assert_eq!(length_two_paths(&a.quiver), 4);
    let d = quadratic_dual(&a).unwrap();
    assert_eq!(d.relations.len(), 2);
    for r in &d.relations {
        assert_eq!(r.len(), 2);
        let cs: Vec<Coeff> = r.terms().map(|(_, c)| c.clone()).collect();
        assert_eq!(cs[0], -cs[1].clone());
        assert!(cs[0].is_one() || cs[1].is_one());
        let starts: BTreeSet<String> = r.paths().map(|p| d.quiver.vertex_name(p.start).to_string()).collect();
        assert_eq!(starts, BTreeSet::from(["1".to_string()]));
    }
    assert!(collapse(&d).is_ok());
}

#[test]
fn dual_is_an_involution() {
    for (name, p) in fixtures::all() {
        let a = admissible_presentation(&p).unwrap();
        let dd = quadratic_dual(&quadratic_dual(&a).unwrap()).unwrap();
        let back = collapse(&dd).unwrap();
        assert!(is_isomorphic(&back, &p).unwrap(), "{name}");
    }
}

#[test]
fn ceiling_formula() {
    let a = admissible_presentation(&fixtures::e3()).unwrap();
    let x = PathCombination::from_path(path(&a, &["a1", "a2"]));
    assert_eq!(reduction_ceiling(&x, &a.relations), 2 * 3);
}
