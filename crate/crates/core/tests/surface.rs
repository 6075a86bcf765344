use std::collections::BTreeMap;

use skewgentle::algebra_core::*;
use skewgentle::fixtures;
use skewgentle::surface::*;

fn labels(r: &RibbonComplex, kind: VertexKind) -> Vec<String> {
    let mut out: Vec<String> = r.vertices().iter().filter(|v| v.kind == kind).map(|v| v.label.clone()).collect();
    out.sort();
    out
}

fn edge_names(r: &RibbonComplex, v: &RibbonVertex) -> Vec<String> {
    v.halves.iter().map(|&h| r.edge_name(r.edge_of(h)).to_string()).collect()
}

#[test]
fn star_graph_of_a4() {
    let r = ribbon_graph_of_gentle(&fixtures::e1().gentle_part()).unwrap();
    assert_eq!(r.edge_count(), 4);
    assert_eq!(labels(&r, VertexKind::Marked), vec!["a1.a2.a3", "e_1", "e_2", "e_3", "e_4"]);
    let centre = r.vertices().iter().find(|v| v.label == "a1.a2.a3").unwrap();
    assert_eq!(edge_names(&r, centre), vec!["4", "3", "2", "1"]);
    let d = OrbifoldDissection::from_ribbon(r);
    // Four chords from one marked point cut the disk into five pieces.
    assert_eq!(d.polygons.polygons.len(), 5);
    assert!(d.polygons.polygons.iter().all(|p| p.boundary));
    assert_eq!(d.topology.genus, 0);
    assert_eq!(d.topology.boundary, 1);
}

#[test]
fn algebra_k_is_one_edge() {
    let k = presentation(&["1"], &[], &[], &[]).unwrap();
    let r = ribbon_graph_of_gentle(&k).unwrap();
    assert_eq!(r.edge_count(), 1);
    assert_eq!(r.vertex_count(), 2);
    assert!(r.vertices().iter().all(|v| v.halves.len() == 1));
}

/// The three maximal paths of E3 without its loop, plus e4 for the vertex
/// that ends only one arrow.
#[test]
fn ribbon_graph_of_e3_gentle_part() {
    let r = ribbon_graph_of_gentle(&fixtures::e3().gentle_part()).unwrap();
    assert_eq!(labels(&r, VertexKind::Marked), vec!["a1", "a2.a3", "a4", "e_4"]);
}

#[test]
fn generalised_graph_of_e1() {
    let r = generalised_ribbon_graph(&fixtures::e1()).unwrap();
    assert_eq!(labels(&r, VertexKind::Marked), vec!["a1.a2.a3.eps_1", "e_2", "e_3", "e_4"]);
    assert_eq!(labels(&r, VertexKind::Orbifold), vec!["e_1"]);
}

#[test]
fn generalised_graph_of_e2() {
    let r = generalised_ribbon_graph(&fixtures::e2()).unwrap();
    assert_eq!(labels(&r, VertexKind::Marked), vec!["e_1", "eps_3.a1.eps_2.a2"]);
    assert_eq!(labels(&r, VertexKind::Orbifold), vec!["e_2", "e_3"]);
}

#[test]
fn generalised_graph_of_e3() {
    let r = generalised_ribbon_graph(&fixtures::e3()).unwrap();
    assert_eq!(labels(&r, VertexKind::Marked), vec!["a1", "a2.a3.eps_4", "a4"]);
    assert_eq!(labels(&r, VertexKind::Orbifold), vec!["e_4"]);
}

#[test]
fn generalised_graph_without_special_is_the_gentle_one() {
    for (_, p) in fixtures::all() {
        let lambda = p.gentle_part();
        assert_eq!(generalised_ribbon_graph(&lambda).unwrap(), ribbon_graph_of_gentle(&lambda).unwrap());
    }
}

#[test]
fn both_constructions_agree() {
    for (name, p) in fixtures::all() {
        let direct = generalised_ribbon_graph(&p).unwrap();
        let replaced = generalised_by_replacement(&p).unwrap();
        assert_eq!(direct.descriptor(false), replaced.descriptor(false), "{name}");
    }
}

fn polygon_shape(d: &OrbifoldDissection) -> Vec<(usize, bool, bool)> {
    let mut out: Vec<(usize, bool, bool)> =
        d.polygons.polygons.iter().map(|p| (p.size(), p.boundary, p.is_degenerate())).collect();
    out.sort();
    out
}

/// A digon and two 4-gons, each touching the boundary once. The orbifold
/// point sits in one of the 4-gons: its special edge is one of three edges
/// of that polygon, while the digon has the single edge 1.
#[test]
fn polygons_of_e3() {
    let d = dissection(&fixtures::e3()).unwrap();
    assert_eq!(polygon_shape(&d), vec![(2, true, false), (4, true, false), (4, true, true)]);
    assert_eq!(d.polygons.interior().count(), 0);
    let internal: Vec<usize> = {
        let mut v: Vec<usize> = d.polygons.polygons.iter().map(|p| p.internal_edges).collect();
        v.sort();
        v
    };
    assert_eq!(internal, vec![1, 3, 3]);
}

#[test]
fn e4_has_an_interior_triangle() {
    let d = dissection(&fixtures::e4()).unwrap();
    let interior: Vec<&Polygon> = d.polygons.interior().collect();
    assert_eq!(interior.len(), 1);
    assert_eq!(interior[0].size(), 3);
    let lambda = fixtures::e4().gentle_part();
    let q = lambda.quiver();
    // The saturated cycle a1 a2 a3 has all three consecutive pairs in I.
    assert!((0..3).all(|a| lambda.is_relation(a, q.out_arrows(q.target(a))[0])));
}

#[test]
fn topology_of_fixtures() {
    let t = |p: &AlgebraPresentation| dissection(p).unwrap().topology;
    let e1 = t(&fixtures::e1());
    assert_eq!((e1.genus, e1.boundary, e1.punctures, e1.orbifold), (0, 1, 0, 1));
    let e2 = t(&fixtures::e2());
    assert_eq!((e2.genus, e2.boundary, e2.punctures, e2.orbifold), (0, 1, 0, 2));
    // The 3-cycle with two relations: a disk with one inner boundary
    // component and one orbifold point.
    let open = t(&fixtures::e4_open());
    assert_eq!((open.genus, open.boundary + open.punctures, open.orbifold), (0, 2, 1));
    let e4 = t(&fixtures::e4());
    assert_eq!((e4.genus, e4.boundary, e4.punctures, e4.orbifold), (0, 1, 1, 1));
}

#[test]
fn faces_and_orbifold_points() {
    for (name, p) in fixtures::all() {
        let d = dissection(&p).unwrap();
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for poly in &d.polygons.polygons {
            assert_eq!(poly.boundary, poly.marked_vertex.is_some(), "{name}");
            for &o in &poly.orbifold {
                *seen.entry(o).or_default() += 1;
            }
        }
        assert_eq!(seen.len(), d.ribbon.orbifold_count(), "{name}");
        assert!(seen.values().all(|&c| c == 1), "{name}");
        assert!(euler_check(&d.ribbon, &d.topology).holds, "{name}");
        assert!(surface_characteristic_check(&d.ribbon, &d.topology), "{name}");
    }
}

#[test]
fn ribbon_involutions() {
    let r = generalised_ribbon_graph(&fixtures::e3()).unwrap();
    for h in 0..r.half_count() {
        assert_ne!(r.iota(h), h);
        assert_eq!(r.iota(r.iota(h)), h);
        assert_eq!(r.sigma_inv(r.sigma(h)), h);
        assert_eq!(r.owner(r.sigma(h)).0, r.owner(h).0);
    }
    for v in r.vertices() {
        if v.kind == VertexKind::Orbifold {
            assert_eq!(v.halves.len(), 1);
        }
    }
}

#[test]
fn dual_of_e1() {
    let d = dissection(&fixtures::e1()).unwrap();
    let dd = dual_graph(&d).unwrap();
    assert_eq!(dd.ribbon.vertices().iter().filter(|v| v.kind == VertexKind::Marked).count(), 4);
    assert_eq!(dd.ribbon.orbifold_count(), 1);
    assert_eq!(dd.ribbon.edge_count(), 4);
    assert_eq!(dd.topology, d.topology);
    let special: Vec<usize> = (0..4).filter(|&e| dd.ribbon.is_special_edge(e)).collect();
    assert_eq!(special.len(), 1);
    assert_eq!(dd.ribbon.edge_name(special[0]), "1");
}

#[test]
fn dual_of_e2() {
    let d = dissection(&fixtures::e2()).unwrap();
    let dd = dual_graph(&d).unwrap();
    assert_eq!(dd.ribbon.vertices().iter().filter(|v| v.kind == VertexKind::Marked).count(), 2);
    assert_eq!(dd.ribbon.orbifold_count(), 2);
    assert_eq!(dd.topology, d.topology);
}

#[test]
fn dual_of_dual_is_the_original() {
    for (name, p) in fixtures::all() {
        let d = dissection(&p).unwrap();
        let back = dual_graph(&dual_graph(&d).unwrap()).unwrap();
        assert_eq!(back.ribbon.descriptor(false), d.ribbon.descriptor(false), "{name}");
    }
}

#[test]
fn algebra_of_dissection_round_trip() {
    for (name, p) in fixtures::all() {
        let d = dissection(&p).unwrap();
        let back = algebra_of_dissection(&d.ribbon).unwrap();
        assert!(is_isomorphic(&back, &p).unwrap(), "{name}");
        let again = dissection(&back).unwrap();
        assert_eq!(again.ribbon.descriptor(false), d.ribbon.descriptor(false), "{name}");
    }
}

#[test]
fn one_edge_disk_gives_k() {
    let specs = vec![
        VertexSpec { kind: VertexKind::Marked, label: "x".into(), edges: vec![0], corners: vec![Corner::Gap] },
        VertexSpec { kind: VertexKind::Marked, label: "y".into(), edges: vec![0], corners: vec![Corner::Gap] },
    ];
    let r = RibbonComplex::from_specs(vec!["1".into()], specs).unwrap();
    let p = algebra_of_dissection(&r).unwrap();
    assert_eq!(p.quiver().vertex_count(), 1);
    assert_eq!(p.quiver().arrow_count(), 0);
    assert!(p.special_list().is_empty());
}

/// Two vertices, one arrow and a special loop at each end.
#[test]
fn exceptional_pattern_is_rejected() {
    let p = presentation(&["1", "2"], &[("a", "1", "2")], &[], &["1", "2"]).unwrap();
    let d = dissection(&p).unwrap();
    assert_eq!(algebra_of_dissection(&d.ribbon), Err(SurfaceError::Exceptional));
}

#[test]
fn dual_algebra_matches_koszul_dual() {
    for (name, p) in fixtures::all() {
        let d = dissection(&p).unwrap();
        let from_dual = algebra_of_dissection(&dual_graph(&d).unwrap().ribbon).unwrap();
        let a = admissible_presentation(&p).unwrap();
        let koszul = collapse(&skewgentle::groebner::quadratic_dual(&a).unwrap()).unwrap();
        assert!(is_isomorphic(&from_dual, &koszul).unwrap(), "{name}");
    }
}

#[test]
fn dissection_json_round_trip() {
    for (_, p) in fixtures::all() {
        let d = dissection(&p).unwrap();
        let back = OrbifoldDissection::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }
    assert!(matches!(OrbifoldDissection::from_json(&serde_json::json!({"edges": 3})), Err(SurfaceError::Schema(_))));
}

#[test]
fn malformed_ribbon_is_rejected() {
    let specs = vec![VertexSpec {
        kind: VertexKind::Marked,
        label: "x".into(),
        edges: vec![0],
        corners: vec![Corner::Gap],
    }];
    assert!(matches!(RibbonComplex::from_specs(vec!["1".into()], specs), Err(SurfaceError::Malformed(_))));
}

#[test]
fn dot_export_marks_orbifold_points() {
    let d = dissection(&fixtures::e2()).unwrap();
    let dot = to_dot(&d.ribbon);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("shape=point").count(), 2);
    assert!(dot.contains("orbifold=true"));
    let dd = dual_graph(&d).unwrap();
    let both = to_dot_with_dual(&d.ribbon, &dd.ribbon);
    assert!(both.len() > dot.len());
}
