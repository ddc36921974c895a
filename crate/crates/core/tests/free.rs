use hopfwork::free::*;
use hopfwork::library::*;
use hopfwork::linalg::vector;
use hopfwork::{Error, Field, Scalar, Verdict};

fn q() -> Field {
    Field::Rational
}

fn fast() -> TruncationOptions {
    TruncationOptions {
        check_stability: false,
        ..TruncationOptions::default()
    }
}

/// Reduced words of length ≤ l in the free group on m letters, counted by
/// brute-force enumeration of all words over the 2m letters and their inverses.
fn reduced_word_counts(m: usize, d: usize) -> Vec<usize> {
    let letters = 2 * m;
    let mut out = Vec::new();
    let mut total = 0;
    for len in 0..=d {
        let mut count = 0;
        for code in 0..letters.pow(len as u32) {
            let mut w = Vec::with_capacity(len);
            let mut c = code;
            for _ in 0..len {
                w.push(c % letters);
                c /= letters;
            }
            // letter x and x + m are inverse to each other
            if w.windows(2).all(|p| (p[0] + m) % letters != p[1]) {
                count += 1;
            }
        }
        total += count;
        out.push(total);
    }
    out
}

fn geometric(dim: usize, d: usize) -> Vec<usize> {
    (0..=d).map(|l| (0..=l).map(|j| dim.pow(j as u32)).sum()).collect()
}

#[test]
fn oracle_counts_match_closed_form() {
    assert_eq!(reduced_word_counts(1, 4), vec![1, 3, 5, 7, 9]);
    assert_eq!(reduced_word_counts(2, 3), vec![1, 5, 17, 53]);
}

#[test]
fn tensor_algebra_dims_are_geometric() {
    for m in 1..=3 {
        let c = grouplike_coalgebra(q(), m).unwrap();
        for d in 0..=3 {
            let t = free_bialgebra(&c, d).unwrap();
            assert_eq!(t.level_dims, geometric(m, d), "m = {m}, d = {d}");
            assert!(t.antipode.is_none());
        }
    }
    let t = free_bialgebra(&grouplike_coalgebra(q(), 1).unwrap(), 2).unwrap();
    assert_eq!(t.level_dims, vec![1, 2, 3]);
}

#[test]
fn tensor_algebra_on_matrix_coalgebra_is_a_bialgebra() {
    let c = matrix_coalgebra(q(), 2).unwrap();
    let t = free_bialgebra(&c, 2).unwrap();
    assert_eq!(t.level_dims, vec![1, 5, 21]);
    assert_eq!(t.check_axioms().verdict, Verdict::Yes);
}

#[test]
fn one_grouplike_gives_laurent_polynomials() {
    let c = grouplike_coalgebra(q(), 1).unwrap();
    let t = free_hopf_on_coalgebra(&c, 2, 2).unwrap();
    assert_eq!(t.level_dims, reduced_word_counts(1, 2));
    assert_eq!(t.stable(), Some(true));
    assert_eq!(t.n_max, 4);
    assert_eq!(t.check_axioms().verdict, Verdict::Yes);
}

#[test]
fn one_grouplike_over_prime_field() {
    let f = Field::prime(5).unwrap();
    let c = grouplike_coalgebra(f, 1).unwrap();
    let t = free_hopf_on_presentation(&BialgebraPresentation::from_coalgebra(&c), 3, 2, &fast()).unwrap();
    assert_eq!(t.level_dims, reduced_word_counts(1, 3));
}

#[test]
fn two_grouplikes_give_the_free_group() {
    let c = grouplike_coalgebra(q(), 2).unwrap();
    let t = free_hopf_on_presentation(&BialgebraPresentation::from_coalgebra(&c), 3, 2, &fast()).unwrap();
    assert_eq!(t.level_dims, reduced_word_counts(2, 3));
    assert_eq!(t.check_axioms().verdict, Verdict::Yes);
    for row in antipode_image_dims(&t) {
        assert_eq!(row.image_dim, row.full_dim, "level {}", row.level);
        assert_eq!(row.undefined, 0);
    }
}

#[test]
fn more_slack_never_increases_dims_with_fixed_families() {
    let c = grouplike_coalgebra(q(), 2).unwrap();
    let p = BialgebraPresentation::from_coalgebra(&c);
    let opts = TruncationOptions {
        families: Some(4),
        ..fast()
    };
    let mut prev: Option<Vec<usize>> = None;
    for s in 0..=2 {
        let t = free_hopf_on_presentation(&p, 2, s, &opts).unwrap();
        if let Some(p) = &prev {
            assert!(t.level_dims.iter().zip(p).all(|(a, b)| a <= b), "{:?} vs {:?}", t.level_dims, p);
        }
        prev = Some(t.level_dims);
    }
}

#[test]
fn dims_nondecreasing_in_cutoff() {
    let c = grouplike_coalgebra(q(), 1).unwrap();
    let p = BialgebraPresentation::from_coalgebra(&c);
    let a = free_hopf_on_presentation(&p, 2, 2, &fast()).unwrap();
    let b = free_hopf_on_presentation(&p, 3, 2, &fast()).unwrap();
    assert!(a.level_dims.iter().zip(&b.level_dims).all(|(x, y)| x <= y));
}

#[test]
fn basis_words_are_products_of_generators() {
    let c = grouplike_coalgebra(q(), 2).unwrap();
    let t = free_hopf_on_presentation(&BialgebraPresentation::from_coalgebra(&c), 2, 2, &fast()).unwrap();
    let n = t.dim();
    for (i, w) in t.basis.iter().enumerate() {
        let mut acc = vector::basis(q(), n, 0);
        for &l in w.letters() {
            let j = t.basis.iter().position(|b| b.letters() == [l]).expect("letter is a normal word");
            let mut next = vec![q().zero(); n];
            for (a, x) in acc.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (k, c) in t.mult.slice12(a, j) {
                    next[k] += &(x * c);
                }
            }
            acc = next;
        }
        assert_eq!(acc, vector::basis(q(), n, i), "word {}", t.names[i]);
    }
}

#[test]
fn coproduct_respects_the_filtration() {
    let c = matrix_coalgebra(q(), 2).unwrap();
    let t = free_hopf_on_presentation(&BialgebraPresentation::from_coalgebra(&c), 2, 0, &fast()).unwrap();
    for (i, j, k, _) in t.comult.iter() {
        assert!(t.weight(j) <= t.weight(i) && t.weight(k) <= t.weight(i));
    }
    for (i, j, k, _) in t.mult.iter() {
        assert!(t.weight(k) <= t.weight(i) + t.weight(j));
    }
}

#[test]
fn idempotent_monoid_collapses() {
    let b = monoid_bialgebra(q(), &MonoidTable::idempotent()).unwrap();
    let t = free_hopf_on_bialgebra(&b, 2, 2).unwrap();
    assert_eq!(t.level_dims, vec![1, 1, 1]);
    assert_eq!(t.stable(), Some(true));
    let r = unit_arrow_report(&t);
    assert!(!r.injective_on_base);
    assert_eq!(r.image_dim, 1);
    // basis of k{1, z} is [1, z]; z − 1 is in the kernel
    let w = r.kernel_witness.unwrap();
    let scale = w[1].clone();
    let w: Vec<Scalar> = w.iter().map(|x| x.checked_div(&scale).unwrap()).collect();
    assert_eq!(w, vec![q().from_int(-1), q().one()]);
}

#[test]
fn capped_natural_numbers_give_laurent_dims() {
    let p = BialgebraPresentation::nat_monoid_cap(q(), 2).unwrap();
    let t = free_hopf_on_presentation(&p, 2, 2, &TruncationOptions::default()).unwrap();
    assert_eq!(t.construction, Construction::FreeHopfOnPresentation);
    assert_eq!(t.level_dims, reduced_word_counts(1, 2));
    assert_eq!(t.stable(), Some(true));
    assert!(unit_arrow_report(&t).injective_on_base);
    assert_eq!(t.check_axioms().verdict, Verdict::Yes);
}

#[test]
fn group_algebra_with_involutive_antipode_stabilizes_at_its_dim() {
    let h = cyclic_group_algebra(q(), 2).unwrap();
    let t = free_hopf_on_bialgebra(h.bialgebra(), 2, 2).unwrap();
    assert_eq!(t.level_dims, vec![1, 2, 2]);
    assert_eq!(t.stable(), Some(true));
    let r = unit_arrow_report(&t);
    assert!(r.injective_on_base);
    assert_eq!(r.image_dim, 2);
    for row in antipode_image_dims(&t) {
        assert_eq!(row.image_dim, row.full_dim);
    }
}

#[test]
fn k_star_is_op_of_free_hopf_on_op() {
    for h in [cyclic_group_algebra(q(), 2).unwrap(), sweedler(q()).unwrap()] {
        let k = k_star_with(&h, 2, 2, &fast()).unwrap();
        let inner =
            free_hopf_on_presentation(&BialgebraPresentation::from_bialgebra(&h.bialgebra().opposite()), 2, 2, &fast())
                .unwrap();
        let op = inner.opposite();
        assert_eq!(k.mult, op.mult);
        assert_eq!(k.comult, op.comult);
        assert_eq!(k.counit, op.counit);
        assert_eq!(k.antipode, op.antipode);
        assert_eq!(k.unit_arrow, op.unit_arrow);
        assert_eq!(k.basis, inner.basis);
        assert_eq!(k.mult.permuted([1, 0, 2]), inner.mult);
        assert_eq!(k.construction, Construction::EnvelopingBijective);
    }
}

#[test]
fn k_star_collapses_to_the_colimit() {
    let h = cyclic_group_algebra(q(), 2).unwrap();
    let k = k_star(&h, 2, 2).unwrap();
    assert_eq!(k.stable(), Some(true));
    assert_eq!(k.level_dims, colimit_oracle(&h, 2).unwrap());

    let h4 = sweedler(q()).unwrap();
    let k = k_star_with(&h4, 2, 2, &fast()).unwrap();
    assert_eq!(k.level_dims, vec![1, 4, 4]);
    assert_eq!(k.level_dims, colimit_oracle(&h4, 2).unwrap());
    assert_eq!(k.check_axioms().verdict, Verdict::Yes);
}

#[test]
fn unit_arrow_of_k_star_is_an_isomorphism_of_algebras() {
    let h = sweedler(q()).unwrap();
    let k = k_star_with(&h, 2, 2, &fast()).unwrap();
    let alpha = &k.unit_arrow;
    assert_eq!(alpha.shape(), (4, 4));
    assert!(alpha.inverse().is_some());
    let a = h.algebra();
    for i in 0..4 {
        for j in 0..4 {
            let lhs = alpha.apply(&a.basis_product(i, j));
            let (x, y) = (alpha.column(i), alpha.column(j));
            let mut rhs = vec![q().zero(); 4];
            for (p, u) in x.iter().enumerate() {
                for (r, v) in y.iter().enumerate() {
                    if u.is_zero() || v.is_zero() {
                        continue;
                    }
                    for (t, c) in k.mult.slice12(p, r) {
                        rhs[t] += &(&(u * v) * c);
                    }
                }
            }
            assert_eq!(lhs, rhs, "α(e{i} e{j})");
        }
    }
}

#[test]
fn colimit_oracle_values() {
    assert_eq!(colimit_oracle(&cyclic_group_algebra(q(), 2).unwrap(), 2).unwrap(), vec![1, 2, 2]);
    let h4 = sweedler(q()).unwrap();
    assert_eq!(colimit_oracle(&h4, 1).unwrap(), vec![1, 4]);
    assert_eq!(colimit_oracle(&h4.dual(), 1).unwrap(), vec![1, 4]);
}

#[test]
fn matrix_coalgebra_report_is_pinned() {
    let c = matrix_coalgebra(q(), 2).unwrap();
    let t = free_hopf_on_presentation(&BialgebraPresentation::from_coalgebra(&c), 2, 1, &fast()).unwrap();
    assert_eq!(t.level_dims, vec![1, 17, 249]);
    let rows: Vec<(usize, usize, usize)> = antipode_image_dims(&t)
        .iter()
        .map(|r| (r.full_dim, r.image_dim, r.undefined))
        .collect();
    assert_eq!(rows, vec![(1, 1, 0), (17, 13, 4), (249, 141, 108)]);
    assert!(unit_arrow_report(&t).injective_on_base);
    assert_eq!(t.check_axioms().verdict, Verdict::Yes);
}

#[test]
fn corrupted_product_is_detected() {
    let c = grouplike_coalgebra(q(), 1).unwrap();
    let t = free_hopf_on_coalgebra(&c, 2, 2).unwrap();
    let mut bad = t.clone();
    bad.mult.accumulate(1, 1, 0, &q().one()).unwrap();
    assert_eq!(bad.check_axioms().verdict, Verdict::No);
    let mut bad = t.clone();
    bad.comult.accumulate(1, 1, 1, &q().one()).unwrap();
    assert_eq!(bad.check_axioms().verdict, Verdict::No);
}

#[test]
fn budget_is_reported() {
    let c = grouplike_coalgebra(q(), 2).unwrap();
    let opts = TruncationOptions {
        budget: 100,
        ..fast()
    };
    let e = free_hopf_on_presentation(&BialgebraPresentation::from_coalgebra(&c), 3, 2, &opts).unwrap_err();
    assert!(matches!(e, Error::Budget(_)));
}
