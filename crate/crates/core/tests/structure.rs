use hopfwork::library::{self, MonoidTable};
use hopfwork::linalg::vector;
use hopfwork::structure::{hopf_morphism, Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use hopfwork::{Field, Matrix, SparseTensor3, Witness};
use proptest::prelude::*;

fn q() -> Field {
    Field::Rational
}

fn hopf_examples() -> Vec<(String, HopfAlgebra)> {
    let q = q();
    let mut out = Vec::new();
    for n in 1..=6 {
        let h = library::cyclic_group_algebra(q, n).unwrap();
        out.push((format!("kZ{n}*"), h.dual()));
        out.push((format!("kZ{n}"), h));
    }
    let s3 = library::s3_group_algebra(q).unwrap();
    out.push(("kS3*".into(), s3.dual()));
    out.push(("kS3".into(), s3));
    let h4 = library::sweedler(q).unwrap();
    out.push(("H4*".into(), h4.dual()));
    out.push(("H4".into(), h4));
    let f13 = Field::prime(13).unwrap();
    out.push(("Taft(3,3)/F13".into(), library::taft(f13, 3, &f13.from_int(3)).unwrap()));
    out
}

fn bialgebra_examples() -> Vec<(String, Bialgebra)> {
    let q = q();
    let mut out = vec![(
        "k{1,z}".to_string(),
        library::monoid_bialgebra(q, &MonoidTable::idempotent()).unwrap(),
    )];
    let capped = MonoidTable::new(
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
        0,
        vec!["1".into(), "x".into(), "x2".into()],
    )
    .unwrap();
    out.push(("k{1,x,x2=x3}".into(), library::monoid_bialgebra(q, &capped).unwrap()));
    out.push(("kZ3 as monoid".into(), library::monoid_bialgebra(q, &MonoidTable::cyclic(3)).unwrap()));
    out
}

fn bumped(t: &SparseTensor3, i: usize, j: usize, k: usize) -> SparseTensor3 {
    let mut t = t.clone();
    t.accumulate(i, j, k, &t.field().one()).unwrap();
    t
}

fn mutated_bialgebras(b: &Bialgebra) -> Vec<Bialgebra> {
    let mut out = Vec::new();
    let (a, c) = (b.algebra(), b.coalgebra());
    for (i, j, k, _) in a.mult().iter() {
        let m = Algebra::from_parts_unchecked(bumped(a.mult(), i, j, k), a.unit().to_vec()).unwrap();
        out.push(Bialgebra::from_parts_unchecked(m, c.clone()).unwrap());
    }
    for (i, j, k, _) in c.comult().iter() {
        let d = Coalgebra::from_parts_unchecked(bumped(c.comult(), i, j, k), c.counit().to_vec()).unwrap();
        out.push(Bialgebra::from_parts_unchecked(a.clone(), d).unwrap());
    }
    out
}

#[test]
fn every_built_in_passes_its_checks() {
    for (name, h) in hopf_examples() {
        assert!(h.check().unwrap().is_yes(), "{name}");
        assert!(h.bialgebra().check().is_yes(), "{name}");
    }
    for (name, b) in bialgebra_examples() {
        assert!(b.check().is_yes(), "{name}");
    }
    for n in 1..=3 {
        assert!(library::matrix_algebra(q(), n).unwrap().check().is_yes());
        assert!(library::matrix_coalgebra(q(), n).unwrap().check().is_yes());
        assert!(library::diagonal_algebra(q(), n).unwrap().check().is_yes());
        assert!(library::grouplike_coalgebra(q(), n).unwrap().check().is_yes());
    }
}

#[test]
fn single_constant_mutations_are_caught() {
    for (name, h) in hopf_examples() {
        let s = h.antipode().unwrap().clone();
        for b in mutated_bialgebras(h.bialgebra()) {
            let m = HopfAlgebra::from_parts_unchecked(b, Some(s.clone())).unwrap();
            assert!(m.check().unwrap().is_no(), "{name}");
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let mut t = s.clone();
                t.add_to(i, j, &h.field().one());
                let m = HopfAlgebra::from_parts_unchecked(h.bialgebra().clone(), Some(t)).unwrap();
                assert!(m.check().unwrap().is_no(), "{name} antipode ({i}, {j})");
            }
        }
    }
    for (name, b) in bialgebra_examples() {
        for m in mutated_bialgebras(&b) {
            assert!(m.check().is_no(), "{name}");
        }
    }
    let m2 = library::matrix_coalgebra(q(), 2).unwrap();
    for (i, j, k, _) in m2.comult().iter() {
        let c = Coalgebra::from_parts_unchecked(bumped(m2.comult(), i, j, k), m2.counit().to_vec()).unwrap();
        assert!(c.check().is_no());
    }
    let m2 = library::matrix_algebra(q(), 2).unwrap();
    for (i, j, k, _) in m2.mult().iter() {
        let a = Algebra::from_parts_unchecked(bumped(m2.mult(), i, j, k), m2.unit().to_vec()).unwrap();
        assert!(a.check().is_no());
    }
}

#[test]
fn algebra_without_unit_is_rejected() {
    let q = q();
    let mult = SparseTensor3::from_entries(q, 2, [(0, 0, 1, q.one()), (1, 0, 0, q.one())]).unwrap();
    let a = Algebra::from_parts_unchecked(mult, vector::zeros(q, 2)).unwrap();
    let r = a.check();
    assert!(r.is_no());
    assert!(r.witness.is_some());
    assert!(r.detail.contains("unit"), "{}", r.detail);
    assert!(Algebra::new(a.mult().clone(), vector::zeros(q, 2)).is_err());
}

#[test]
fn sweedler_with_identity_antipode_fails_at_x() {
    let h = library::sweedler(q()).unwrap();
    assert!(HopfAlgebra::new(h.bialgebra().clone(), Matrix::identity(q(), 4)).is_err());
    let raw = HopfAlgebra::from_parts_unchecked(h.bialgebra().clone(), Some(Matrix::identity(q(), 4))).unwrap();
    let r = raw.check().unwrap();
    assert!(r.is_no());
    let x = h.names().iter().position(|n| n == "x").unwrap();
    assert_eq!(r.witness, Some(Witness::Index(x)));
}

#[test]
fn z2_with_identity_antipode() {
    let z2 = library::cyclic_group_algebra(q(), 2).unwrap();
    assert!(z2.antipode().unwrap().is_identity());
    assert!(z2.op_cop().antipode().unwrap().is_identity());
    assert_eq!(z2.op_cop().algebra().mult(), z2.algebra().mult());
    assert_eq!(z2.op_cop().coalgebra().comult(), z2.coalgebra().comult());
}

#[test]
fn op_cop_of_sweedler_is_hopf_and_s_is_a_morphism() {
    let h = library::sweedler(q()).unwrap();
    let oc = h.op_cop();
    assert!(oc.check().unwrap().is_yes());
    let s = h.antipode().unwrap();
    assert!(hopf_morphism(&h, &oc, s).unwrap().is_yes());
    assert!(!hopf_morphism(&h, &h, s).unwrap().is_yes());
}

#[test]
fn matrix_algebra_dual_is_matrix_coalgebra() {
    for n in 1..=3 {
        let a = library::matrix_algebra(q(), n).unwrap();
        let c = library::matrix_coalgebra(q(), n).unwrap();
        assert_eq!(a.dual().comult(), c.comult());
        assert_eq!(a.dual().counit(), c.counit());
    }
}

#[test]
fn dual_of_z2_has_idempotent_basis() {
    let q = q();
    let z2 = library::cyclic_group_algebra(q, 2).unwrap();
    let fun = z2.dual();
    assert!(fun.check().unwrap().is_yes());
    // The dual basis consists of the point masses δ_1, δ_g.
    let a = fun.algebra();
    let (d1, dg) = (vector::basis(q, 2, 0), vector::basis(q, 2, 1));
    assert_eq!(a.product(&d1, &d1), d1);
    assert_eq!(a.product(&dg, &dg), dg);
    assert!(vector::is_zero(&a.product(&d1, &dg)));
    assert_eq!(a.unit(), &[q.one(), q.one()][..]);
    assert!(fun.antipode().unwrap().is_identity());
}

#[test]
fn morphism_examples() {
    let q = q();
    let z4 = library::cyclic_group_algebra(q, 4).unwrap();
    let z2 = library::cyclic_group_algebra(q, 2).unwrap();
    assert!(hopf_morphism(&z4, &z2, &library::cyclic_projection(q, 4, 2)).unwrap().is_yes());
    assert!(hopf_morphism(&z2, &z4, &library::cyclic_inclusion(q, 2, 4)).unwrap().is_yes());
    let wrong = library::monoid_map_matrix(q, 2, 4, &[0, 2]);
    assert!(hopf_morphism(&z2, &z4, &wrong).unwrap().is_yes());
    let wrong = library::monoid_map_matrix(q, 2, 4, &[0, 1]);
    assert!(hopf_morphism(&z2, &z4, &wrong).unwrap().is_no());
    for (name, h) in hopf_examples() {
        assert!(hopf_morphism(&h, &h, &Matrix::identity(h.field(), h.dim())).unwrap().is_yes(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn involutions(idx in 0usize..17) {
        let all = hopf_examples();
        let (_, h) = &all[idx % all.len()];
        let oo = h.opposite().opposite();
        prop_assert_eq!(oo.algebra().mult(), h.algebra().mult());
        let cc = h.coopposite().coopposite();
        prop_assert_eq!(cc.coalgebra().comult(), h.coalgebra().comult());
        let dd = h.dual().dual();
        prop_assert_eq!(dd.algebra().mult(), h.algebra().mult());
        prop_assert_eq!(dd.coalgebra().comult(), h.coalgebra().comult());
        prop_assert_eq!(dd.antipode(), h.antipode());
        prop_assert!(h.op_cop().check().unwrap().is_yes());
        prop_assert!(h.dual().check().unwrap().is_yes());
        let hd = h.dual();
        prop_assert_eq!(hd.antipode().unwrap(), &h.antipode().unwrap().transpose());
    }

    #[test]
    fn products_are_bilinear(idx in 0usize..17, x in proptest::collection::vec(-3i64..=3, 6), y in proptest::collection::vec(-3i64..=3, 6)) {
        let all = hopf_examples();
        let (_, h) = &all[idx % all.len()];
        let f = h.field();
        let n = h.dim();
        let x: Vec<_> = (0..n).map(|i| f.from_int(x[i % 6])).collect();
        let y: Vec<_> = (0..n).map(|i| f.from_int(y[i % 6])).collect();
        let a = h.algebra();
        let c = h.coalgebra();
        // Δ is multiplicative on arbitrary vectors, not just basis pairs.
        let lhs = c.coproduct(&a.product(&x, &y));
        let rhs = a.tensor_square_product(&c.coproduct(&x), &c.coproduct(&y));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(c.counit_of(&a.product(&x, &y)), &c.counit_of(&x) * &c.counit_of(&y));
    }
}
