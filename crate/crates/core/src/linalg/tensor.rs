use std::collections::BTreeMap;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A sparse order-3 tensor holding structure constants.
///
/// For a multiplication, `(i, j, k) ↦ c` means `e_i · e_j` has coefficient
/// `c` on `e_k`; for a comultiplication it means `Δ(e_i)` has coefficient `c`
/// on `e_j ⊗ e_k`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseTensor3 {
    field: Field,
    dims: (usize, usize, usize),
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl SparseTensor3 {
    pub fn new(field: Field, dims: (usize, usize, usize)) -> Self {
        SparseTensor3 {
            field,
            dims,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a cubic tensor from entries; duplicates are an error.
    pub fn from_entries(
        field: Field,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut t = Self::new(field, (dim, dim, dim));
        for (i, j, k, c) in entries {
            if t.entries.contains_key(&(i, j, k)) {
                return Err(Error::InvalidEntry(format!("duplicate entry ({i}, {j}, {k})")));
            }
            t.insert(i, j, k, c)?;
        }
        Ok(t)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Sets an entry (removing it when `c` is zero).
    pub fn insert(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> Result<()> {
        let (a, b, d) = self.dims;
        if i >= a || j >= b || k >= d {
            return Err(Error::InvalidEntry(format!(
                "entry ({i}, {j}, {k}) out of range for dims ({a}, {b}, {d})"
            )));
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), c);
        }
        Ok(())
    }

    pub fn accumulate(&mut self, i: usize, j: usize, k: usize, c: &Scalar) -> Result<()> {
        let next = match self.entries.get(&(i, j, k)) {
            Some(old) => old + c,
            None => c.clone(),
        };
        self.insert(i, j, k, next)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    /// Entries with first index `i`, as `(j, k, c)`.
    pub fn slice1(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries
            .range((i, 0, 0)..(i + 1, 0, 0))
            .map(|(&(_, j, k), c)| (j, k, c))
    }

    /// Entries with leading indices `(i, j)`, as `(k, c)`.
    pub fn slice12(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries
            .range((i, j, 0)..=(i, j, usize::MAX))
            .map(|(&(_, _, k), c)| (k, c))
    }

    /// Reindexes entries: input `idx = (i, j, k)` moves to
    /// `(idx[perm[0]], idx[perm[1]], idx[perm[2]])`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let d = [self.dims.0, self.dims.1, self.dims.2];
        let mut out = Self::new(self.field, (d[perm[0]], d[perm[1]], d[perm[2]]));
        for (&(i, j, k), c) in &self.entries {
            let idx = [i, j, k];
            out.entries
                .insert((idx[perm[0]], idx[perm[1]], idx[perm[2]]), c.clone());
        }
        out
    }

    pub fn map_scalars(&self, field: Field, f: impl Fn(&Scalar) -> Option<Scalar>) -> Option<Self> {
        let mut out = Self::new(field, self.dims);
        for (&(i, j, k), c) in &self.entries {
            out.insert(i, j, k, f(c)?).ok()?;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_not_stored() {
        let q = Field::Rational;
        let mut t = SparseTensor3::new(q, (2, 2, 2));
        t.insert(0, 1, 1, q.from_int(3)).unwrap();
        t.insert(0, 1, 1, q.zero()).unwrap();
        assert_eq!(t.nnz(), 0);
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        let q = Field::Rational;
        let mut t = SparseTensor3::new(q, (2, 2, 2));
        assert!(t.insert(2, 0, 0, q.one()).is_err());
        let dup = SparseTensor3::from_entries(q, 2, vec![(0, 0, 0, q.one()), (0, 0, 0, q.one())]);
        assert!(dup.is_err());
    }

    #[test]
    fn slices_and_permutation() {
        let q = Field::Rational;
        let t = SparseTensor3::from_entries(
            q,
            3,
            vec![(1, 0, 2, q.one()), (1, 2, 0, q.from_int(2)), (2, 0, 0, q.one())],
        )
        .unwrap();
        assert_eq!(t.slice1(1).count(), 2);
        assert_eq!(t.slice12(1, 2).collect::<Vec<_>>(), vec![(0, &q.from_int(2))]);
        let p = t.permuted([1, 0, 2]);
        assert_eq!(p.get(0, 1, 2), q.one());
        assert_eq!(p.permuted([1, 0, 2]), t);
    }
}
