use hopfwork::categorical::{
    consistency_harness, coradical, epi_test_alg, epi_test_hopf, faithful_coflatness_test, faithful_flatness_test,
    grouplikes_in, is_subcoalgebra, mono_test_coalg, mono_test_hopf, scorad_check, standard_corpus, CotensorSpace,
    FlatnessConfig, RelativeTensorSquare, Subspace,
};
use hopfwork::library::{self, MonoidTable};
use hopfwork::linalg::vector;
use hopfwork::{Error, Field, HopfAlgebra, Matrix, Scalar, Verdict, Witness};

fn q() -> Field {
    Field::Rational
}

fn built_in_hopf() -> Vec<HopfAlgebra> {
    let q = q();
    let mut out: Vec<HopfAlgebra> = (1..=6).map(|n| library::cyclic_group_algebra(q, n).unwrap()).collect();
    out.push(library::s3_group_algebra(q).unwrap());
    out.push(library::sweedler(q).unwrap());
    let f13 = Field::prime(13).unwrap();
    out.push(library::taft(f13, 3, &f13.from_int(3)).unwrap());
    let duals: Vec<HopfAlgebra> = out.iter().map(HopfAlgebra::dual).collect();
    out.extend(duals);
    out
}

#[test]
fn surjection_z4_to_z2_is_epi() {
    let q = q();
    let (z4, z2) = (library::cyclic_group_algebra(q, 4).unwrap(), library::cyclic_group_algebra(q, 2).unwrap());
    let f = library::cyclic_projection(q, 4, 2);
    assert!(epi_test_hopf(&z4, &z2, &f).unwrap().is_yes());
    assert_eq!(RelativeTensorSquare::new(z4.algebra(), z2.algebra(), &f).unwrap().quotient_dim, 2);
}

#[test]
fn inclusion_z2_into_z4_is_not_epi() {
    let q = q();
    let (z2, z4) = (library::cyclic_group_algebra(q, 2).unwrap(), library::cyclic_group_algebra(q, 4).unwrap());
    let f = library::cyclic_inclusion(q, 2, 4);
    let t = RelativeTensorSquare::new(z2.algebra(), z4.algebra(), &f).unwrap();
    assert_eq!(t.quotient_dim, 8);
    assert!(t.multiplication_descends(z4.algebra()));
    let r = epi_test_hopf(&z2, &z4, &f).unwrap();
    assert!(r.is_no());
    // 1⊗g − g⊗1 with g the generator e1 of Z4.
    let mut expected = vector::zeros(q, 16);
    expected[1] = q.one();
    expected[4] = q.from_int(-1);
    assert_eq!(r.witness, Some(Witness::Vector(expected)));
}

#[test]
fn identity_is_epi_and_mono() {
    for h in built_in_hopf() {
        let id = Matrix::identity(h.field(), h.dim());
        assert!(epi_test_hopf(&h, &h, &id).unwrap().is_yes());
        assert!(mono_test_hopf(&h, &h, &id).unwrap().is_yes());
    }
}

#[test]
fn antipode_into_op_cop_is_epi_and_mono() {
    for h in built_in_hopf() {
        let oc = h.op_cop();
        let s = h.antipode().unwrap();
        assert!(hopfwork::structure::hopf_morphism(&h, &oc, s).unwrap().is_yes());
        assert!(epi_test_hopf(&h, &oc, s).unwrap().is_yes());
        assert!(mono_test_hopf(&h, &oc, s).unwrap().is_yes());
    }
}

#[test]
fn dual_statements_for_mono() {
    let q = q();
    let (z2, z4) = (library::cyclic_group_algebra(q, 2).unwrap(), library::cyclic_group_algebra(q, 4).unwrap());
    let proj = library::cyclic_projection(q, 4, 2);
    let inc = library::cyclic_inclusion(q, 2, 4);
    assert!(mono_test_hopf(&z2.dual(), &z4.dual(), &proj.transpose()).unwrap().is_yes());
    let r = mono_test_hopf(&z4.dual(), &z2.dual(), &inc.transpose()).unwrap();
    assert!(r.is_no());
    assert_eq!(r.witness, Some(Witness::Dimension { expected: 4, found: 8 }));
    assert!(mono_test_hopf(&z2, &z4, &inc).unwrap().is_yes());
}

#[test]
fn non_morphisms_are_rejected_before_testing() {
    let q = q();
    let z4 = library::cyclic_group_algebra(q, 4).unwrap();
    let bad = Matrix::from_ints(q, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    let z2 = library::cyclic_group_algebra(q, 2).unwrap();
    assert!(matches!(epi_test_hopf(&z4, &z2, &bad), Err(Error::NotMorphism { .. })));
    // Grouplikes to grouplikes, so this one is a coalgebra map.
    assert!(mono_test_coalg(z4.coalgebra(), z2.coalgebra(), &bad).is_ok());
    let bad = Matrix::from_ints(q, &[&[1, 0, 0, 0], &[1, 1, 1, 1]]);
    assert!(matches!(mono_test_coalg(z4.coalgebra(), z2.coalgebra(), &bad), Err(Error::NotMorphism { .. })));
}

#[test]
fn duality_transport_across_the_corpus() {
    for e in standard_corpus().unwrap() {
        if let Some((a, b)) = &e.algebras {
            let epi = epi_test_alg(a, b, &e.map).unwrap();
            let (bd, ad) = (b.dual(), a.dual());
            let mono = mono_test_coalg(&bd, &ad, &e.map.transpose()).unwrap();
            assert_eq!(epi.verdict, mono.verdict, "{}", e.name);
            let t = RelativeTensorSquare::new(a, b, &e.map).unwrap();
            let c = CotensorSpace::new(&bd, &ad, &e.map.transpose()).unwrap();
            assert_eq!(t.quotient_dim, c.dim(), "{}", e.name);
        }
    }
}

#[test]
fn surjections_are_epi_and_injections_mono() {
    for e in standard_corpus().unwrap() {
        if let (Some((a, b)), true) = (&e.algebras, e.is_surjective()) {
            assert!(epi_test_alg(a, b, &e.map).unwrap().is_yes(), "{}", e.name);
        }
        if let (Some((c, d)), true) = (&e.coalgebras, e.is_injective()) {
            assert!(mono_test_coalg(c, d, &e.map).unwrap().is_yes(), "{}", e.name);
        }
    }
}

#[test]
fn freeness_examples() {
    let q = q();
    let cfg = FlatnessConfig::default();
    let (z2, z4) = (library::cyclic_group_algebra(q, 2).unwrap(), library::cyclic_group_algebra(q, 4).unwrap());
    let inc = library::cyclic_inclusion(q, 2, 4);
    let r = faithful_flatness_test(z2.algebra(), z4.algebra(), &inc, &cfg).unwrap();
    assert!(r.is_yes());
    let Some(Witness::Certificate(basis)) = &r.witness else { panic!("{r}") };
    assert_eq!(basis.cols(), 2);

    for h in built_in_hopf() {
        let k = library::cyclic_group_algebra(h.field(), 1).unwrap();
        let unit = Matrix::from_columns(h.field(), h.dim(), &[h.algebra().unit().to_vec()]).unwrap();
        assert!(faithful_flatness_test(k.algebra(), h.algebra(), &unit, &cfg).unwrap().is_yes());
    }

    let idem = library::monoid_bialgebra(q, &MonoidTable::idempotent()).unwrap();
    let diag = library::diagonal_algebra(q, 3).unwrap();
    let emb = Matrix::from_ints(q, &[&[1, 1], &[1, 1], &[1, 0]]);
    let r = faithful_flatness_test(idem.algebra(), &diag, &emb, &cfg).unwrap();
    assert!(r.is_no());
    assert!(matches!(r.witness, Some(Witness::Dimension { .. })));
    let r = faithful_coflatness_test(&diag.dual(), &idem.algebra().dual(), &emb.transpose(), &cfg).unwrap();
    assert!(r.is_no());

    let proj = library::cyclic_projection(q, 4, 2);
    assert!(faithful_coflatness_test(z4.coalgebra(), z2.coalgebra(), &proj, &cfg).unwrap().is_yes());
    let c = z4.dual();
    assert!(faithful_coflatness_test(c.coalgebra(), c.coalgebra(), &Matrix::identity(q, 4), &cfg).unwrap().is_yes());
    assert!(matches!(
        faithful_flatness_test(z4.algebra(), z2.algebra(), &proj, &cfg),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn freeness_over_small_prime_is_exhaustive_and_seed_independent() {
    let f3 = Field::prime(3).unwrap();
    let (z2, z4) = (library::cyclic_group_algebra(f3, 2).unwrap(), library::cyclic_group_algebra(f3, 4).unwrap());
    let inc = library::cyclic_inclusion(f3, 2, 4);
    let verdicts: Vec<Verdict> = (0..4)
        .map(|seed| {
            let cfg = FlatnessConfig { samples: 1, seed };
            faithful_flatness_test(z2.algebra(), z4.algebra(), &inc, &cfg).unwrap().verdict
        })
        .collect();
    assert_eq!(verdicts, vec![Verdict::Yes; 4]);
}

#[test]
fn sampling_without_budget_is_inconclusive_not_no() {
    let q = q();
    let cfg = FlatnessConfig { samples: 0, seed: 0 };
    let (z2, z4) = (library::cyclic_group_algebra(q, 2).unwrap(), library::cyclic_group_algebra(q, 4).unwrap());
    let r = faithful_flatness_test(z2.algebra(), z4.algebra(), &library::cyclic_inclusion(q, 2, 4), &cfg).unwrap();
    assert_ne!(r.verdict, Verdict::No);
}

#[test]
fn harness_on_standard_corpus() {
    let corpus = standard_corpus().unwrap();
    assert!(corpus.len() >= 12);
    let r = consistency_harness(&corpus, &FlatnessConfig::default()).unwrap();
    assert!(r.passed(), "{:?}", r.violations().map(ToString::to_string).collect::<Vec<_>>());
    assert_eq!(r.entries.len(), corpus.len());
    // Non-bijective epis exist in the corpus, so the implication is not vacuous everywhere.
    assert!(r.entries.iter().any(|e| e.epi == Some(Verdict::Yes) && !e.bijective()));
    assert!(r.entries.iter().any(|e| e.flat == Some(Verdict::Yes) && !e.bijective()));
}

/// Brute-force grouplikes over a small prime field.
fn all_grouplikes(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let field = h.field();
    let n = h.dim();
    let elems: Vec<Scalar> = field.elements().unwrap().collect();
    let mut vectors = vec![Vec::new()];
    for _ in 0..n {
        vectors = vectors
            .into_iter()
            .flat_map(|v: Vec<Scalar>| {
                elems.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    grouplikes_in(h.coalgebra(), vectors.iter().map(Vec::as_slice))
}

#[test]
fn sweedler_coradical_matches_grouplike_oracle() {
    let q = q();
    let h = library::sweedler(q).unwrap();
    let h0 = coradical(h.coalgebra()).unwrap();
    assert_eq!(h0.dim(), 2);
    assert!(is_subcoalgebra(h.coalgebra(), &h0));

    let f5 = Field::prime(5).unwrap();
    let h5 = library::sweedler(f5).unwrap();
    let g = all_grouplikes(&h5);
    assert_eq!(g.len(), 2);
    let span = Subspace::span(&Matrix::from_columns(f5, 4, &g).unwrap());
    let c5 = coradical(h5.coalgebra()).unwrap();
    assert!(c5.contains_subspace(&span) && span.contains_subspace(&c5));
    assert_eq!(g.len(), 2);
    assert!(g.contains(&vector::basis(f5, 4, 0)) && g.contains(&vector::basis(f5, 4, 1)));
    assert!(h0.contains(&vector::basis(q, 4, 0)) && h0.contains(&vector::basis(q, 4, 1)));
}

#[test]
fn cosemisimple_coradicals() {
    let q = q();
    for n in 1..=6 {
        let h = library::cyclic_group_algebra(q, n).unwrap();
        assert!(coradical(h.coalgebra()).unwrap().is_everything());
    }
    assert!(coradical(library::s3_group_algebra(q).unwrap().coalgebra()).unwrap().is_everything());
    assert!(coradical(&library::matrix_coalgebra(q, 2).unwrap()).unwrap().is_everything());
    let h = library::sweedler(q).unwrap().dual();
    assert_eq!(coradical(h.coalgebra()).unwrap().dim(), 2);
}

#[test]
fn scorad_holds_on_every_built_in() {
    for h in built_in_hopf() {
        if h.field().characteristic() != 0 && h.field().characteristic() as usize <= h.dim() {
            continue;
        }
        let r = scorad_check(&h).unwrap();
        assert!(r.result.is_yes());
        assert!(r.contained && r.surjective);
        assert_eq!(r.image_dim, h.dim());
    }
}
