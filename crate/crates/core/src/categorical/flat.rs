use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::categorical::{require_algebra_morphism, require_coalgebra_morphism};
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};
use crate::structure::{Algebra, Coalgebra};
use crate::verdict::{CheckResult, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatnessConfig {
    /// Random candidate tuples to try before giving up.
    pub samples: usize,
    pub seed: u64,
}

impl Default for FlatnessConfig {
    fn default() -> Self {
        FlatnessConfig { samples: 32, seed: 0 }
    }
}

/// Largest search space (`p^(n·dim B)`) enumerated exhaustively over 𝔽_p.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// `B` as a left `A`-module through `f`.
struct Module<'a> {
    b: &'a Algebra,
    /// Left multiplication by `f(a_k)` for each basis vector `a_k`.
    actions: Vec<Matrix>,
}

impl<'a> Module<'a> {
    fn new(b: &'a Algebra, f: &Matrix) -> Self {
        let actions = f.columns().iter().map(|fa| b.left_mult_matrix(fa)).collect();
        Module { b, actions }
    }

    /// Matrix of `A^n → B`, `(x_i) ↦ Σ f(x_i)·b_i`.
    fn hom_matrix(&self, gens: &[Vec<Scalar>]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = gens
            .iter()
            .flat_map(|g| self.actions.iter().map(move |l| l.apply(g)))
            .collect();
        Matrix::from_columns(self.b.field(), self.b.dim(), &cols).expect("columns match dim B")
    }

    fn is_basis(&self, gens: &[Vec<Scalar>]) -> bool {
        self.hom_matrix(gens).rank() == self.b.dim()
    }
}

/// `dim End_A(B)`, the space of linear `φ` with `φ(f(a)b) = f(a)φ(b)`.
pub fn endomorphism_dim(a: &Algebra, b: &Algebra, f: &Matrix) -> Result<usize> {
    require_algebra_morphism(a, b, f)?;
    let m = Module::new(b, f);
    let (field, d) = (b.field(), b.dim());
    // Unknown Φ[r, s] at column r·d + s; one block of d equations per (a_k, b_j).
    let mut sys = Matrix::zeros(field, m.actions.len() * d * d, d * d);
    for (k, l) in m.actions.iter().enumerate() {
        for j in 0..d {
            let block = (k * d + j) * d;
            // φ(L e_j) = Σ_s L[s, j] φ(e_s)
            for s in 0..d {
                let c = l.get(s, j);
                if !c.is_zero() {
                    for r in 0..d {
                        sys.add_to(block + r, r * d + s, c);
                    }
                }
            }
            // − L φ(e_j) = − Σ_r L[t, r] Φ[r, j]
            for t in 0..d {
                for r in 0..d {
                    let c = l.get(t, r);
                    if !c.is_zero() {
                        sys.add_to(block + t, r * d + j, &-c);
                    }
                }
            }
        }
    }
    Ok(d * d - sys.rank())
}

fn describe(b: &Algebra, gens: &[Vec<Scalar>]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .map(|g| {
            let nz: Vec<usize> = (0..g.len()).filter(|&i| !g[i].is_zero()).collect();
            if nz.len() == 1 && g[nz[0]].is_one() {
                b.names()[nz[0]].clone()
            } else {
                vector::format(g)
            }
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn certificate(b: &Algebra, gens: &[Vec<Scalar>]) -> CheckResult {
    let m = Matrix::from_columns(b.field(), b.dim(), gens).expect("generators live in B");
    CheckResult::yes_with(
        Witness::Certificate(m),
        format!("free of rank {}, basis {}", gens.len(), describe(b, gens)),
    )
}

fn random_vector(rng: &mut ChaCha8Rng, field: Field, d: usize, height: i64) -> Vec<Scalar> {
    (0..d)
        .map(|_| match field {
            Field::Rational => field.from_int(rng.gen_range(-height..=height)),
            Field::Prime(p) => field.from_int(rng.gen_range(0..p) as i64),
        })
        .collect()
}

/// Decides whether `B` is a free left `A`-module via the injection `f`.
/// Freeness is the tested surrogate for faithful flatness; a "no" means
/// "not free".
pub fn faithful_flatness_test(a: &Algebra, b: &Algebra, f: &Matrix, cfg: &FlatnessConfig) -> Result<CheckResult> {
    require_algebra_morphism(a, b, f)?;
    if f.rank() != a.dim() {
        return Err(Error::Precondition("freeness test needs an injective map".into()));
    }
    let (m, d, field) = (a.dim(), b.dim(), b.field());
    if d % m != 0 {
        return Ok(CheckResult::no(
            Witness::Dimension { expected: m * d.div_ceil(m), found: d },
            format!("not free: dim A = {m} does not divide dim B = {d}"),
        ));
    }
    let n = d / m;
    let end = endomorphism_dim(a, b, f)?;
    if end != n * n * m {
        return Ok(CheckResult::no(
            Witness::Dimension { expected: n * n * m, found: end },
            format!("not free: dim End_A(B) = {end}, a free module of rank {n} would give {}", n * n * m),
        ));
    }
    let module = Module::new(b, f);

    // Greedy choice among basis vectors, keeping each one that enlarges the
    // generated submodule by a full copy of A.
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    let mut rank = 0;
    for j in 0..d {
        let mut trial = gens.clone();
        trial.push(vector::basis(field, d, j));
        let r = module.hom_matrix(&trial).rank();
        if r == rank + m {
            gens = trial;
            rank = r;
            if gens.len() == n {
                return Ok(certificate(b, &gens));
            }
        }
    }

    if let Field::Prime(p) = field {
        let exponent = (n * d) as u32;
        if p.checked_pow(exponent).is_some_and(|s| s <= EXHAUSTIVE_LIMIT) {
            let total = p.pow(exponent);
            let elems: Vec<Scalar> = field.elements().expect("prime field").collect();
            let mut best = 0;
            for code in 0..total {
                let mut c = code;
                let gens: Vec<Vec<Scalar>> = (0..n)
                    .map(|_| {
                        (0..d)
                            .map(|_| {
                                let s = elems[(c % p) as usize].clone();
                                c /= p;
                                s
                            })
                            .collect()
                    })
                    .collect();
                let r = module.hom_matrix(&gens).rank();
                if r == d {
                    return Ok(certificate(b, &gens));
                }
                best = best.max(r);
            }
            return Ok(CheckResult::no(
                Witness::Dimension { expected: d, found: best },
                format!("not free: exhaustive search over {total} generator tuples"),
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for sample in 0..cfg.samples {
        let height = 1 + (sample / 4) as i64;
        let gens: Vec<Vec<Scalar>> = (0..n).map(|_| random_vector(&mut rng, field, d, height)).collect();
        if module.is_basis(&gens) {
            return Ok(certificate(b, &gens));
        }
    }
    Ok(CheckResult::inconclusive(format!(
        "no free basis found in {} samples (seed {})",
        cfg.samples, cfg.seed
    )))
}

/// Coflatness of a surjection `C ↠ D`, tested as freeness of `C*` over `D*`.
pub fn faithful_coflatness_test(c: &Coalgebra, d: &Coalgebra, f: &Matrix, cfg: &FlatnessConfig) -> Result<CheckResult> {
    require_coalgebra_morphism(c, d, f)?;
    if f.rank() != d.dim() {
        return Err(Error::Precondition("coflatness test needs a surjective map".into()));
    }
    faithful_flatness_test(&d.dual(), &c.dual(), &f.transpose(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    fn idempotent_into_diagonal(q: Field) -> (Algebra, Algebra, Matrix) {
        let a = library::monoid_bialgebra(q, &library::MonoidTable::idempotent())
            .unwrap()
            .algebra()
            .clone();
        let b = library::diagonal_algebra(q, 3).unwrap();
        let f = Matrix::from_ints(q, &[&[1, 1], &[1, 1], &[1, 0]]);
        (a, b, f)
    }

    #[test]
    fn z2_in_z4_is_free_on_cosets() {
        let q = Field::Rational;
        let a = library::cyclic_group_algebra(q, 2).unwrap();
        let b = library::cyclic_group_algebra(q, 4).unwrap();
        let f = library::cyclic_inclusion(q, 2, 4);
        let r = faithful_flatness_test(a.algebra(), b.algebra(), &f, &FlatnessConfig::default()).unwrap();
        assert!(r.is_yes());
        assert!(r.detail.contains("{1, g}"), "{}", r.detail);
    }

    #[test]
    fn ground_field_inclusion() {
        let q = Field::Rational;
        let k = library::cyclic_group_algebra(q, 1).unwrap();
        let h = library::sweedler(q).unwrap();
        let unit = Matrix::from_columns(q, 4, &[h.algebra().unit().to_vec()]).unwrap();
        let r = faithful_flatness_test(k.algebra(), h.algebra(), &unit, &FlatnessConfig::default()).unwrap();
        assert!(r.is_yes());
    }

    #[test]
    fn dimension_obstruction() {
        let (a, b, f) = idempotent_into_diagonal(Field::Rational);
        let r = faithful_flatness_test(&a, &b, &f, &FlatnessConfig::default()).unwrap();
        assert!(r.is_no());
        assert!(matches!(r.witness, Some(Witness::Dimension { .. })));
        let r = faithful_coflatness_test(&b.dual(), &a.dual(), &f.transpose(), &FlatnessConfig::default()).unwrap();
        assert!(r.is_no());
    }

    #[test]
    fn dual_surjection_is_coflat() {
        let q = Field::Rational;
        let z4 = library::cyclic_group_algebra(q, 4).unwrap().dual();
        let z2 = library::cyclic_group_algebra(q, 2).unwrap().dual();
        let f = library::cyclic_inclusion(q, 2, 4).transpose();
        let r = faithful_coflatness_test(z4.coalgebra(), z2.coalgebra(), &f, &FlatnessConfig::default()).unwrap();
        assert!(r.is_yes());
    }

    #[test]
    fn end_dimension_of_free_module() {
        let q = Field::Rational;
        let a = library::cyclic_group_algebra(q, 2).unwrap();
        let b = library::cyclic_group_algebra(q, 4).unwrap();
        let f = library::cyclic_inclusion(q, 2, 4);
        assert_eq!(endomorphism_dim(a.algebra(), b.algebra(), &f).unwrap(), 8);
    }

    #[test]
    fn end_obstruction_on_non_free_module() {
        // A = k[z]/(z²) into A × A by z ↦ (z, 0). As an A-module B ≅ A ⊕ k ⊕ k,
        // so dim End_A(B) = 10 while A² would give 8.
        let q = Field::Rational;
        let dual_numbers = |q: Field| {
            let mut m = crate::linalg::SparseTensor3::new(q, (2, 2, 2));
            m.insert(0, 0, 0, q.one()).unwrap();
            m.insert(0, 1, 1, q.one()).unwrap();
            m.insert(1, 0, 1, q.one()).unwrap();
            Algebra::new(m, vector::basis(q, 2, 0)).unwrap()
        };
        let a = dual_numbers(q);
        let mut m = crate::linalg::SparseTensor3::new(q, (4, 4, 4));
        for (off, i, j, k) in [(0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (2, 0, 0, 0), (2, 0, 1, 1), (2, 1, 0, 1)] {
            m.insert(off + i, off + j, off + k, q.one()).unwrap();
        }
        let mut unit = vector::zeros(q, 4);
        unit[0] = q.one();
        unit[2] = q.one();
        let b = Algebra::new(m, unit).unwrap();
        let f = Matrix::from_ints(q, &[&[1, 0], &[0, 1], &[1, 0], &[0, 0]]);
        let r = faithful_flatness_test(&a, &b, &f, &FlatnessConfig::default()).unwrap();
        assert!(r.is_no(), "{r}");
    }
}
