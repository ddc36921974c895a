//! Built-in examples: group algebras and their duals, Taft algebras (Sweedler's
//! four-dimensional algebra among them), matrix (co)algebras and monoid
//! bialgebras, plus the standard maps between them.

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar, SparseTensor3};
use crate::structure::{Algebra, Bialgebra, Coalgebra, HopfAlgebra};

/// Multiplication table of a finite monoid: `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidTable {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub names: Vec<String>,
}

impl MonoidTable {
    pub fn new(table: Vec<Vec<usize>>, identity: usize, names: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n || identity >= n {
            return Err(Error::UnsupportedExample("monoid table shape".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::UnsupportedExample("monoid table entries out of range".into()));
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::UnsupportedExample(format!("{} is not an identity", names[identity])));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::UnsupportedExample("monoid table is not associative".into()));
                    }
                }
            }
        }
        Ok(MonoidTable { table, identity, names })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        MonoidTable {
            table,
            identity: 0,
            names: cyclic_names(n),
        }
    }

    /// `S_3` as permutations of `{0, 1, 2}`, composed right to left.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["1", "(01)", "(02)", "(12)", "(012)", "(021)"];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        MonoidTable {
            table,
            identity: 0,
            names: names.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// `{1, z}` with `z² = z`.
    pub fn idempotent() -> Self {
        MonoidTable {
            table: vec![vec![0, 1], vec![1, 1]],
            identity: 0,
            names: vec!["1".into(), "z".into()],
        }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.table[a][b] == self.identity && self.table[b][a] == self.identity)
    }
}

fn cyclic_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect()
}

/// The monoid bialgebra `k[M]`: basis `M`, every element grouplike.
pub fn monoid_bialgebra(field: Field, m: &MonoidTable) -> Result<Bialgebra> {
    let n = m.len();
    let one = field.one();
    let mult = SparseTensor3::from_entries(
        field,
        n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, m.table[a][b], one.clone())),
    )?;
    let algebra = Algebra::new(mult, vector::basis(field, n, m.identity))?.with_names(m.names.clone())?;
    let comult = SparseTensor3::from_entries(field, n, (0..n).map(|a| (a, a, a, one.clone())))?;
    let coalgebra = Coalgebra::new(comult, vec![one.clone(); n])?;
    Bialgebra::new(algebra, coalgebra)
}

/// The group algebra `kG`, antipode `g ↦ g⁻¹`.
pub fn group_algebra(field: Field, g: &MonoidTable) -> Result<HopfAlgebra> {
    let n = g.len();
    let b = monoid_bialgebra(field, g)?;
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        let inv = g
            .inverse(a)
            .ok_or_else(|| Error::UnsupportedExample(format!("{} has no inverse", g.names[a])))?;
        s.set(inv, a, field.one());
    }
    HopfAlgebra::new(b, s)
}

pub fn cyclic_group_algebra(field: Field, n: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::UnsupportedExample("cyclic group of order 0".into()));
    }
    group_algebra(field, &MonoidTable::cyclic(n))
}

pub fn s3_group_algebra(field: Field) -> Result<HopfAlgebra> {
    group_algebra(field, &MonoidTable::symmetric3())
}

/// Functions on a finite group, the dual of `kG`.
pub fn dual_group_algebra(field: Field, g: &MonoidTable) -> Result<HopfAlgebra> {
    Ok(group_algebra(field, g)?.dual())
}

/// The Taft algebra `T_n(q)`: generated by `g, x` with `gⁿ = 1`, `xⁿ = 0`,
/// `xg = q·gx`, `g` grouplike and `Δ(x) = x⊗1 + g⊗x`. The basis element
/// `g^i x^j` has index `j·n + i`.
pub fn taft(field: Field, n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::UnsupportedExample("Taft algebra needs n ≥ 2".into()));
    }
    if q.field() != field {
        return Err(Error::FieldMismatch);
    }
    let primitive = q.pow(n as u64).is_one() && (1..n).all(|k| !q.pow(k as u64).is_one());
    if !primitive {
        return Err(Error::UnsupportedExample(format!(
            "{q} is not a primitive {n}-th root of unity in {field}"
        )));
    }
    let idx = |i: usize, j: usize| j * n + i;
    let dim = n * n;
    let mut mult = SparseTensor3::new(field, (dim, dim, dim));
    for j in 0..n {
        for i in 0..n {
            for l in 0..n {
                for k in 0..n {
                    if j + l < n {
                        let c = q.pow((j * k) as u64);
                        mult.insert(idx(i, j), idx(k, l), idx((i + k) % n, j + l), c)?;
                    }
                }
            }
        }
    }
    let algebra = Algebra::new(mult, vector::basis(field, dim, 0))?;
    let basis = |k: usize| vector::basis(field, dim, k);
    let g = basis(idx(1, 0));
    let x = basis(idx(0, 1));
    let one = basis(0);
    let delta_g = vector::tensor(&g, &g);
    let mut delta_x = vector::tensor(&x, &one);
    vector::add_scaled(&mut delta_x, &field.one(), &vector::tensor(&g, &x));

    let mut comult = SparseTensor3::new(field, (dim, dim, dim));
    let mut s_cols = vec![Vec::new(); dim];
    let g_inv = basis(idx(n - 1, 0));
    let s_x: Vec<Scalar> = algebra
        .product(&g_inv, &x)
        .iter()
        .map(|c| -c)
        .collect();
    for j in 0..n {
        for i in 0..n {
            let mut d = vector::tensor(&one, &one);
            let mut s = one.clone();
            for _ in 0..i {
                d = algebra.tensor_square_product(&d, &delta_g);
            }
            for _ in 0..j {
                d = algebra.tensor_square_product(&d, &delta_x);
                s = algebra.product(&s_x, &s);
            }
            for _ in 0..i {
                s = algebra.product(&s, &g_inv);
            }
            for (t, c) in d.iter().enumerate() {
                if !c.is_zero() {
                    comult.insert(idx(i, j), t / dim, t % dim, c.clone())?;
                }
            }
            s_cols[idx(i, j)] = s;
        }
    }
    let counit = (0..dim).map(|k| if k < n { field.one() } else { field.zero() }).collect();
    let coalgebra = Coalgebra::new(comult, counit)?;
    let names = (0..dim)
        .map(|k| {
            let (i, j) = (k % n, k / n);
            let gp = match i {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{i}"),
            };
            let xp = match j {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{j}"),
            };
            if gp.is_empty() && xp.is_empty() {
                "1".into()
            } else {
                gp + &xp
            }
        })
        .collect();
    let algebra = algebra.with_names(names)?;
    let s = Matrix::from_columns(field, dim, &s_cols)?;
    HopfAlgebra::new(Bialgebra::new(algebra, coalgebra)?, s)
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx`.
pub fn sweedler(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedExample("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    taft(field, 2, &field.from_int(-1))
}

fn matrix_unit_names(n: usize) -> Vec<String> {
    (0..n * n).map(|k| format!("e{}{}", k / n + 1, k % n + 1)).collect()
}

/// `M_n(k)` on matrix units `e_ij` (index `i·n + j`).
pub fn matrix_algebra(field: Field, n: usize) -> Result<Algebra> {
    let d = n * n;
    let mut mult = SparseTensor3::new(field, (d, d, d));
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult.insert(i * n + j, j * n + l, i * n + l, field.one())?;
            }
        }
    }
    let mut unit = vector::zeros(field, d);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    Algebra::new(mult, unit)?.with_names(matrix_unit_names(n))
}

/// The matrix coalgebra `M_n(k)*`: `Δ(e_ij) = Σ_l e_il ⊗ e_lj`, `ε(e_ij) = δ_ij`.
pub fn matrix_coalgebra(field: Field, n: usize) -> Result<Coalgebra> {
    let d = n * n;
    let mut comult = SparseTensor3::new(field, (d, d, d));
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                comult.insert(i * n + j, i * n + l, l * n + j, field.one())?;
            }
        }
    }
    let counit = (0..d)
        .map(|k| if k / n == k % n { field.one() } else { field.zero() })
        .collect();
    Coalgebra::new(comult, counit)?.with_names(matrix_unit_names(n))
}

/// Span of `m` grouplikes.
pub fn grouplike_coalgebra(field: Field, m: usize) -> Result<Coalgebra> {
    let comult = SparseTensor3::from_entries(field, m, (0..m).map(|i| (i, i, i, field.one())))?;
    let names = (0..m)
        .map(|i| ["g", "h", "k", "l"].get(i).map_or(format!("g{i}"), |s| s.to_string()))
        .collect();
    Coalgebra::new(comult, vec![field.one(); m])?.with_names(names)
}

/// `k^n` with its idempotent basis.
pub fn diagonal_algebra(field: Field, n: usize) -> Result<Algebra> {
    let mult = SparseTensor3::from_entries(field, n, (0..n).map(|i| (i, i, i, field.one())))?;
    Algebra::new(mult, vec![field.one(); n])
}

/// The matrix of the linear extension of a map of monoid elements.
pub fn monoid_map_matrix(field: Field, source_len: usize, target_len: usize, images: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(field, target_len, source_len);
    for (a, &b) in images.iter().enumerate() {
        m.set(b, a, field.one());
    }
    m
}

/// `kZ_n ↠ kZ_m` (`m | n`), `g ↦ g`.
pub fn cyclic_projection(field: Field, n: usize, m: usize) -> Matrix {
    let images: Vec<usize> = (0..n).map(|i| i % m).collect();
    monoid_map_matrix(field, n, m, &images)
}

/// `kZ_m ↪ kZ_n` (`m | n`), `h ↦ g^{n/m}`.
pub fn cyclic_inclusion(field: Field, m: usize, n: usize) -> Matrix {
    let images: Vec<usize> = (0..m).map(|i| i * (n / m)).collect();
    monoid_map_matrix(field, m, n, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_basics() {
        let h = sweedler(Field::Rational).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.names(), &["1", "g", "x", "gx"]);
        let s = h.antipode().unwrap();
        assert!(!s.pow(2).is_identity());
        assert!(s.pow(4).is_identity());
    }

    #[test]
    fn taft_over_f13() {
        let f = Field::prime(13).unwrap();
        let h = taft(f, 3, &f.from_int(3)).unwrap();
        assert_eq!(h.dim(), 9);
        let s = h.antipode().unwrap();
        assert!((1..6).all(|k| !s.pow(k).is_identity()));
        assert!(s.pow(6).is_identity());
    }

    #[test]
    fn taft_rejects_non_primitive_root() {
        let f = Field::prime(13).unwrap();
        assert!(taft(f, 3, &f.from_int(1)).is_err());
        assert!(taft(f, 3, &f.from_int(2)).is_err());
    }

    #[test]
    fn monoid_table_validation() {
        let bad = MonoidTable::new(vec![vec![0, 1], vec![1, 0]], 1, vec!["a".into(), "b".into()]);
        assert!(bad.is_err());
        assert!(MonoidTable::new(MonoidTable::symmetric3().table, 0, MonoidTable::symmetric3().names).is_ok());
    }

    #[test]
    fn idempotent_monoid_is_not_a_group() {
        assert!(group_algebra(Field::Rational, &MonoidTable::idempotent()).is_err());
        assert!(monoid_bialgebra(Field::Rational, &MonoidTable::idempotent()).is_ok());
    }

    #[test]
    fn matrix_coalgebra_is_dual_of_matrix_algebra() {
        let q = Field::Rational;
        let dual = matrix_algebra(q, 2).unwrap().dual();
        let builtin = matrix_coalgebra(q, 2).unwrap();
        assert_eq!(dual.comult(), builtin.comult());
        assert_eq!(dual.counit(), builtin.counit());
    }
}
