use skewgentle::algebra_core::{admissible_presentation, presentation, AlgebraPresentation};
use skewgentle::fixtures;
use skewgentle::groebner::certify_strong_koszul;
use skewgentle::invariants::*;
use skewgentle::surface::dissection;

type Poly = Vec<i64>;

fn padd(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut total = Vec::new();
    for j in 0..n {
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let mut term = pmul(&m[0][j], &cofactor_det(&minor));
        if j % 2 == 1 {
            term = term.iter().map(|x| -x).collect();
        }
        total = padd(&total, &term);
    }
    total
}

fn as_i64(m: &QMatrix) -> Vec<Vec<Poly>> {
    m.iter().map(|row| row.iter().map(|x| x.to_i64s().unwrap()).collect()).collect()
}

fn cartan(p: &AlgebraPresentation) -> (QMatrix, skewgentle::algebra_core::AdmissiblePresentation) {
    let a = admissible_presentation(p).unwrap();
    let (_, g) = certify_strong_koszul(&a);
    (q_cartan(&a, &g).unwrap(), a)
}

#[test]
fn e3_invariants() {
    let p = fixtures::e3();
    let r = invariant_report(&p).unwrap();
    assert!(r.profile.is_trivial());
    assert_eq!(r.gorenstein, 2);
    assert_eq!(r.gorenstein_oracle, 2);
    let c = r.cartan.unwrap();
    assert_eq!(c.det, QPolynomial::one());
    assert!(c.all_match());
}

#[test]
fn e3_cartan_entries() {
    let (m, a) = cartan(&fixtures::e3());
    let at = |i: &str, j: &str| m[a.quiver.vertex_index(i).unwrap()][a.quiver.vertex_index(j).unwrap()].clone();
    for i in 0..m.len() {
        assert_eq!(m[i][i], QPolynomial::one());
    }
    assert_eq!(at("3", "4+"), QPolynomial::zero());
    assert_eq!(at("1", "4+"), QPolynomial::monomial(1, 2));
    assert_eq!(cofactor_det(&as_i64(&m)), vec![1]);
}

#[test]
fn e4_determinant() {
    let p = fixtures::e4();
    let d = dissection(&p).unwrap();
    assert_eq!(singularity_profile(&d).sizes, vec![3]);
    assert_eq!(saturated_cycles(&p.gentle_part()), vec![3]);
    let (m, _) = cartan(&p);
    // 1 - (-q)^3
    assert_eq!(cofactor_det(&as_i64(&m)), vec![1, 0, 0, 1]);
    let c = cartan_determinant_check(&p).unwrap();
    assert_eq!(c.det, QPolynomial::from_i64(&[1, 0, 0, 1]));
    assert!(c.all_match());
    // The radical squares to zero on the cycle, so it is self-injective.
    assert_eq!(gorenstein_dimension(&d), 0);
}

#[test]
fn e1_cartan() {
    let (m, a) = cartan(&fixtures::e1());
    let i = a.quiver.vertex_index("4").unwrap();
    let j = a.quiver.vertex_index("1+").unwrap();
    assert_eq!(m[i][j], QPolynomial::monomial(1, 3));
    assert_eq!(m[j][i], QPolynomial::zero());
    assert_eq!(cofactor_det(&as_i64(&m)), vec![1]);
}

#[test]
fn every_fixture_matches() {
    for (name, p) in fixtures::all() {
        let r = invariant_report(&p).unwrap();
        assert_eq!(r.gorenstein, r.gorenstein_oracle, "{name}");
        let c = r.cartan.unwrap();
        assert!(c.all_match(), "{name}: {} {} {}", c.det, c.product, c.gentle_det);
        assert_eq!(cofactor_det(&as_i64(&c.matrix)), c.det.to_i64s().unwrap(), "{name}");
    }
}

#[test]
fn tree_has_trivial_product() {
    let p = presentation(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[("a", "b")], &[]).unwrap();
    let d = dissection(&p).unwrap();
    assert!(singularity_profile(&d).is_trivial());
    assert_eq!(product_formula(&singularity_profile(&d)), QPolynomial::one());
    assert_eq!(longest_saturated_path(&p), 2);
    // Global dimension 2: the simple at 1 has a projective resolution of length 2.
    assert_eq!(gorenstein_dimension(&d), 2);
}

#[test]
fn free_cycle_is_infinite_dimensional() {
    let p = presentation(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[], &[]).unwrap();
    let a = admissible_presentation(&p).unwrap();
    let (_, g) = certify_strong_koszul(&a);
    assert_eq!(q_cartan(&a, &g), Err(InvariantError::InfiniteDimensional));
}

#[test]
fn product_formula_signs() {
    let profile = |sizes: Vec<usize>| SingularityProfile { sizes };
    assert_eq!(product_formula(&profile(vec![2])), QPolynomial::from_i64(&[1, 0, -1]));
    assert_eq!(product_formula(&profile(vec![1])), QPolynomial::from_i64(&[1, 1]));
    assert_eq!(product_formula(&profile(vec![3, 3])), QPolynomial::from_i64(&[1, 0, 0, 2, 0, 0, 1]));
}

#[test]
fn qpolynomial_arithmetic() {
    let a = QPolynomial::from_i64(&[1, 1]);
    let b = QPolynomial::from_i64(&[1, -1]);
    assert_eq!(&a * &b, QPolynomial::from_i64(&[1, 0, -1]));
    assert_eq!(&a + &b, QPolynomial::from_i64(&[2]));
    assert_eq!(&a - &a, QPolynomial::zero());
    assert_eq!(a.pow(3), QPolynomial::from_i64(&[1, 3, 3, 1]));
    assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
    assert_eq!(QPolynomial::from_i64(&[1, 0, 1]).div_exact(&a), None);
    assert_eq!(QPolynomial::from_i64(&[0, 0, 5]).degree(), Some(2));
    assert_eq!(QPolynomial::zero().degree(), None);
    assert_eq!(a.to_string(), "1 + q");
    let m = vec![vec![a.clone(), b.clone()], vec![QPolynomial::one(), QPolynomial::one()]];
    assert_eq!(determinant(&m), QPolynomial::from_i64(&[0, 2]));
}
