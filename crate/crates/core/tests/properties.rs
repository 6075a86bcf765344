use std::cmp::Ordering;
use std::collections::BTreeMap;

use proptest::prelude::*;
use skewgentle::algebra_core::*;
use skewgentle::complexes::{band_complex, graded_dimension_vector, square_is_zero, string_complex, BandParameter};
use skewgentle::corpus::corpus_generate;
use skewgentle::groebner::*;
use skewgentle::strings_curves::*;
use skewgentle::surface::*;

fn corpus_algebra(seed: u64) -> Option<AlgebraPresentation> {
    corpus_generate(seed, 1).into_iter().next()
}

/// An arbitrary quiver on up to four vertices with some composable pairs as
/// relations, gentle or not.
fn arbitrary_presentation() -> impl Strategy<Value = AlgebraPresentation> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=5), prop::collection::vec(any::<bool>(), 25)))
        .prop_map(|(n, arrows, pick)| {
            let vnames: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let anames: Vec<String> = (0..arrows.len()).map(|i| format!("a{i}")).collect();
            let mut rels = Vec::new();
            let mut k = 0;
            for (i, &(_, t)) in arrows.iter().enumerate() {
                for (j, &(s, _)) in arrows.iter().enumerate() {
                    if t == s {
                        if pick[k % pick.len()] {
                            rels.push((anames[i].as_str(), anames[j].as_str()));
                        }
                        k += 1;
                    }
                }
            }
            let vs: Vec<&str> = vnames.iter().map(String::as_str).collect();
            let arr: Vec<(&str, &str, &str)> = arrows
                .iter()
                .enumerate()
                .map(|(i, &(s, t))| (anames[i].as_str(), vnames[s].as_str(), vnames[t].as_str()))
                .collect();
            presentation(&vs, &arr, &rels, &[]).unwrap()
        })
}

/// All paths of the split quiver with at most `max` arrows.
fn short_paths(q: &Quiver, max: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut frontier: Vec<Path> = (0..q.arrow_count()).map(|a| Path::arrow(q, a)).collect();
    for _ in 0..max {
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            for &b in q.out_arrows(p.end) {
                if let Some(x) = p.concat(&Path::arrow(q, b)) {
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    out
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn split_quiver_size_and_quadratic_relations(seed in any::<u64>()) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let a = admissible_presentation(&p).unwrap();
        prop_assert_eq!(a.quiver.vertex_count(), p.quiver().vertex_count() + p.special_list().len());
        for r in &a.relations {
            prop_assert!(r.is_homogeneous(2));
        }
    }

    #[test]
    fn without_special_vertices_the_two_checks_agree(p in arbitrary_presentation()) {
        prop_assert_eq!(validate_skew_gentle(&p).is_valid(), validate_gentle(&p).is_valid());
        prop_assert_eq!(validate_skew_gentle(&p).is_admissible(), validate_gentle(&p).is_admissible());
    }

    #[test]
    fn certificates_never_hit_the_ceiling(seed in any::<u64>()) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let a = admissible_presentation(&p).unwrap();
        let (cert, g) = certify_strong_koszul(&a);
        prop_assert!(cert.certified, "{:?}", cert.failure);
        prop_assert!(g.certified);
    }

    #[test]
    fn order_is_admissible(seed in any::<u64>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 6)) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let a = admissible_presentation(&p).unwrap();
        let ord = AdmissibleOrder::for_presentation(&a);
        let paths = short_paths(&a.quiver, 4);
        let x = picks[0].get(&paths);
        let y = picks[1].get(&paths);
        let z = picks[2].get(&paths);
        prop_assert_eq!(ord.compare(x, y), ord.compare(y, x).reverse());
        prop_assert_eq!(ord.compare(x, x), Ordering::Equal);
        if ord.greater(x, y) && ord.greater(y, z) {
            prop_assert!(ord.greater(x, z));
        }
        if x.len() > y.len() {
            prop_assert!(ord.greater(x, y));
        }
        // Multiplying both sides by the same paths keeps the order.
        let (r, s) = (picks[3].get(&paths), picks[4].get(&paths));
        if let (Some(rx), Some(ry)) = (r.concat(x), r.concat(y)) {
            if let (Some(rxs), Some(rys)) = (rx.concat(s), ry.concat(s)) {
                prop_assert_eq!(ord.compare(&rxs, &rys), ord.compare(x, y));
            }
        }
    }

    #[test]
    fn multiples_of_generators_reduce_to_zero(seed in any::<u64>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let a = admissible_presentation(&p).unwrap();
        let (_, g) = certify_strong_koszul(&a);
        if g.generators.is_empty() {
            return Ok(());
        }
        let paths = short_paths(&a.quiver, 2);
        let h = picks[0].get(&g.generators);
        let (r, s) = (picks[1].get(&paths), picks[2].get(&paths));
        let x = h.sandwich(r, s);
        let red = complete_reduce(&x, &g.generators, &g.order, &a.quiver).unwrap();
        prop_assert!(red.result.is_zero());
    }

    #[test]
    fn degree_zero_normal_forms_are_idempotents(seed in any::<u64>()) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let a = admissible_presentation(&p).unwrap();
        let (_, g) = certify_strong_koszul(&a);
        let n = a.quiver.vertex_count();
        for i in 0..n {
            for j in 0..n {
                let c = normal_form_count(&a, &g, i, j, Some(0)).unwrap();
                prop_assert_eq!(c[0], u64::from(i == j));
            }
        }
    }

    #[test]
    fn koszul_dual_is_an_involution(seed in any::<u64>()) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let a = admissible_presentation(&p).unwrap();
        let twice = quadratic_dual(&quadratic_dual(&a).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&collapse(&twice).unwrap(), &p).unwrap());
    }

    #[test]
    fn surfaces(seed in any::<u64>()) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let direct = generalised_ribbon_graph(&p).unwrap();
        let replaced = generalised_by_replacement(&p).unwrap();
        prop_assert_eq!(direct.descriptor(false), replaced.descriptor(false));
        let d = dissection(&p).unwrap();
        prop_assert!(euler_check(&d.ribbon, &d.topology).holds);
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for poly in &d.polygons.polygons {
            prop_assert_eq!(poly.boundary, poly.marked_vertex.is_some());
            prop_assert_eq!(poly.is_degenerate(), !poly.orbifold.is_empty());
            for &o in &poly.orbifold {
                *seen.entry(o).or_default() += 1;
            }
        }
        // Each special edge lies in exactly one face.
        prop_assert_eq!(seen.len(), d.ribbon.orbifold_count());
        prop_assert!(seen.values().all(|&c| c == 1));
        let back = algebra_of_dissection(&d.ribbon).unwrap();
        prop_assert!(is_isomorphic(&back, &p).unwrap());
        let dd = dual_graph(&d).unwrap();
        prop_assert_eq!(dual_graph(&dd).unwrap().ribbon.descriptor(false), d.ribbon.descriptor(false));
        let a = admissible_presentation(&p).unwrap();
        let koszul = collapse(&quadratic_dual(&a).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&algebra_of_dissection(&dd.ribbon).unwrap(), &koszul).unwrap());
    }

    #[test]
    fn words_curves_and_complexes(seed in any::<u64>(), m in -3i64..=3) {
        let Some(p) = corpus_algebra(seed) else { return Ok(()) };
        let d = dissection(&p).unwrap();
        let a = admissible_presentation(&p).unwrap();
        let (_, g) = certify_strong_koszul(&a);
        let q = p.quiver();
        let words: Vec<HomotopyWord> =
            enumerate_strings(&p, 3, 3).into_iter().chain(enumerate_bands(&p, 4, 4)).collect();
        for w in &words {
            let c = word_to_curve(w, &p, &d.ribbon).unwrap();
            prop_assert!(same_word(&curve_to_word(&c, &p, &d.ribbon).unwrap(), w));
            prop_assert_eq!(word_to_curve(&w.shifted(m), &p, &d.ribbon).unwrap(), c.shifted(m));
            let reduced = reduce_curve(&c, &d.ribbon).unwrap();
            prop_assert_eq!(reduce_curve(&reduced, &d.ribbon).unwrap(), reduced);
            if w.is_band() {
                prop_assert_eq!(2 * w.direct_count(), w.letters.len());
                prop_assert_eq!(c.grading.first(), c.grading.last());
            }
            if classify_symmetry(w, &p).is_symmetric() {
                continue;
            }
            let (cx, n) = if w.is_band() {
                (band_complex(w, &p, &a, &BandParameter::polynomial(vec![coeff(1), coeff(1), coeff(1)])).unwrap(), 2)
            } else {
                (string_complex(w, &p, &a).unwrap(), 1)
            };
            prop_assert_eq!(square_is_zero(&cx, &a, &g).unwrap(), Some(true));
            // Rank bookkeeping: each boundary gives one or two projectives, n times.
            let dims = graded_dimension_vector(&cx, &a);
            let total: usize = dims.values().flat_map(|m| m.values()).sum();
            let positions = if w.is_band() { &w.positions(q)[..w.letters.len()] } else { &w.positions(q)[..] };
            let expected: usize = positions.iter().map(|&v| if p.is_special(v) { 2 } else { 1 }).sum::<usize>() * n;
            prop_assert_eq!(total, expected);
            let by_degree: BTreeMap<i64, usize> = dims.iter().map(|(k, m)| (*k, m.values().sum())).collect();
            let shifted = graded_dimension_vector(&skewgentle::complexes::shift(&cx, m), &a);
            for (k, count) in by_degree {
                prop_assert_eq!(shifted[&(k + m)].values().sum::<usize>(), count);
            }
        }
    }
}
