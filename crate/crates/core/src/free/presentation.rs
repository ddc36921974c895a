use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::free::word::{normalize, Generator, Poly, Word};
use crate::linalg::{Field, Scalar, SparseTensor3};
use crate::structure::{Bialgebra, Coalgebra};

/// Input of the free Hopf construction: a coalgebra whose basis elements
/// become generators, optional weights, and the (possibly partial)
/// multiplication to be imposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraPresentation {
    pub coalgebra: Coalgebra,
    pub weights: Vec<u32>,
    /// `e_i e_j = Σ c_k e_k` for the pairs where the product is imposed.
    pub products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    /// Coordinates of `1`; `None` when `1` is not a basis element and is
    /// represented by the empty word alone.
    pub unit: Option<Vec<Scalar>>,
}

impl BialgebraPresentation {
    /// A bare coalgebra: no products imposed.
    pub fn from_coalgebra(c: &Coalgebra) -> Self {
        BialgebraPresentation {
            coalgebra: c.clone(),
            weights: vec![1; c.dim()],
            products: BTreeMap::new(),
            unit: None,
        }
    }

    pub fn from_bialgebra(b: &Bialgebra) -> Self {
        let a = b.algebra();
        let mut products = BTreeMap::new();
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let terms: Vec<(usize, Scalar)> = a.mult().slice12(i, j).map(|(k, c)| (k, c.clone())).collect();
                products.insert((i, j), terms);
            }
        }
        BialgebraPresentation {
            coalgebra: b.coalgebra().clone(),
            weights: vec![1; b.dim()],
            products,
            unit: Some(a.unit().to_vec()),
        }
    }

    /// The monoid bialgebra `k[ℕ]` cut off at `x^cap`: grouplikes
    /// `x, x², …, x^cap` with `x^i` of weight `i`, products `x^i x^j = x^{i+j}`
    /// for `i + j ≤ cap`, and `1 = x⁰` the empty word.
    pub fn nat_monoid_cap(field: Field, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::UnsupportedExample("ℕ cap must be at least 1".into()));
        }
        let comult = SparseTensor3::from_entries(field, cap, (0..cap).map(|i| (i, i, i, field.one())))?;
        let names = (1..=cap).map(|i| if i == 1 { "x".to_string() } else { format!("x^{i}") }).collect();
        let coalgebra = Coalgebra::new(comult, vec![field.one(); cap])?.with_names(names)?;
        let mut products = BTreeMap::new();
        for i in 0..cap {
            for j in 0..cap {
                if i + j + 2 <= cap {
                    products.insert((i, j), vec![(i + j + 1, field.one())]);
                }
            }
        }
        Ok(BialgebraPresentation {
            coalgebra,
            weights: (1..=cap as u32).collect(),
            products,
            unit: None,
        })
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    /// Checks shapes, positive weights, and compatibility of Δ and ε with
    /// the imposed products.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        if self.weights.len() != n || self.weights.contains(&0) {
            return Err(Error::DimensionMismatch("one positive weight per basis element".into()));
        }
        if let Some(u) = &self.unit {
            if u.len() != n {
                return Err(Error::DimensionMismatch("unit length".into()));
            }
        }
        let c = &self.coalgebra;
        let field = self.field();
        for (&(i, j), terms) in &self.products {
            if i >= n || j >= n || terms.iter().any(|(k, _)| *k >= n) {
                return Err(Error::InvalidEntry(format!("product ({i}, {j}) out of range")));
            }
            let mut prod = crate::linalg::vector::zeros(field, n);
            for (k, s) in terms {
                prod[*k] += s;
            }
            let lhs = c.counit_of(&prod);
            if lhs != &c.counit()[i] * &c.counit()[j] {
                return Err(Error::Precondition(format!("ε is not multiplicative on ({i}, {j})")));
            }
        }
        Ok(())
    }
}

/// Generators `c_n` (index `n·dim + c`), their coproducts, and the relation
/// list of the free Hopf algebra truncation.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub field: Field,
    pub base_dim: usize,
    pub n_max: usize,
    pub generators: Vec<Generator>,
    pub weights: Vec<u32>,
    pub relations: Vec<Poly>,
    /// `Δ(g) = Σ c · l ⊗ r` on generators.
    pub coproducts: Vec<Vec<(u16, u16, Scalar)>>,
    pub counits: Vec<Scalar>,
}

impl GradedPresentation {
    fn skeleton(p: &BialgebraPresentation, n_max: usize) -> Result<Self> {
        p.validate()?;
        let dim = p.dim();
        let count = dim * (n_max + 1);
        if count > u16::MAX as usize {
            return Err(Error::Budget(format!("{count} generators")));
        }
        let c = &p.coalgebra;
        let mut generators = Vec::with_capacity(count);
        let mut coproducts = Vec::with_capacity(count);
        let mut counits = Vec::with_capacity(count);
        let mut weights = Vec::with_capacity(count);
        for n in 0..=n_max {
            for b in 0..dim {
                generators.push(Generator {
                    family: n,
                    base: b,
                    weight: p.weights[b],
                    name: format!("{}_{n}", c.names()[b]),
                });
                weights.push(p.weights[b]);
                let g = |x: usize| (n * dim + x) as u16;
                coproducts.push(
                    c.comult()
                        .slice1(b)
                        .map(|(j, k, s)| if n % 2 == 0 { (g(j), g(k), s.clone()) } else { (g(k), g(j), s.clone()) })
                        .collect(),
                );
                counits.push(c.counit()[b].clone());
            }
        }
        Ok(GradedPresentation {
            field: p.field(),
            base_dim: dim,
            n_max,
            generators,
            weights,
            relations: Vec::new(),
            coproducts,
            counits,
        })
    }

    pub fn generator(&self, family: usize, base: usize) -> u16 {
        (family * self.base_dim + base) as u16
    }

    fn word(&self, letters: &[u16]) -> Word {
        Word::from_letters(letters, &self.weights)
    }

    /// The tensor algebra on a coalgebra: family 0 only, no relations.
    pub fn free_bialgebra(c: &Coalgebra) -> Result<Self> {
        Self::skeleton(&BialgebraPresentation::from_coalgebra(c), 0)
    }

    /// Antipode relations for every family `n < n_max`, plus the imposed
    /// products and unit in every family.
    pub fn free_hopf(p: &BialgebraPresentation, n_max: usize) -> Result<Self> {
        let mut gp = Self::skeleton(p, n_max)?;
        let field = gp.field;
        let c = &p.coalgebra;
        let one = Word::empty();
        let mut rels = Vec::new();
        for n in 0..n_max {
            for b in 0..gp.base_dim {
                let eps = c.counit()[b].clone();
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (j, k, s) in c.comult().slice1(b) {
                    let (jn, jm, kn, km) = (
                        gp.generator(n, j),
                        gp.generator(n + 1, j),
                        gp.generator(n, k),
                        gp.generator(n + 1, k),
                    );
                    if n % 2 == 0 {
                        left.push((gp.word(&[jm, kn]), s.clone()));
                        right.push((gp.word(&[jn, km]), s.clone()));
                    } else {
                        left.push((gp.word(&[km, jn]), s.clone()));
                        right.push((gp.word(&[kn, jm]), s.clone()));
                    }
                }
                for mut r in [left, right] {
                    if !eps.is_zero() {
                        r.push((one.clone(), -&eps));
                    }
                    let r = normalize(r);
                    if !r.is_empty() {
                        rels.push(r);
                    }
                }
            }
        }
        for n in 0..=n_max {
            for (&(i, j), terms) in &p.products {
                let (gi, gj) = (gp.generator(n, i), gp.generator(n, j));
                let lead = if n % 2 == 0 { [gi, gj] } else { [gj, gi] };
                let mut r = vec![(gp.word(&lead), field.one())];
                for (k, s) in terms {
                    r.push((gp.word(&[gp.generator(n, *k)]), -s));
                }
                let r = normalize(r);
                if !r.is_empty() {
                    rels.push(r);
                }
            }
            if let Some(u) = &p.unit {
                let mut r = vec![(one.clone(), -field.one())];
                for (z, s) in u.iter().enumerate() {
                    if !s.is_zero() {
                        r.push((gp.word(&[gp.generator(n, z)]), s.clone()));
                    }
                }
                let r = normalize(r);
                if !r.is_empty() {
                    rels.push(r);
                }
            }
        }
        gp.relations = rels;
        Ok(gp)
    }

    /// `S(w)`: letters reversed, every family shifted up by one; `None` when
    /// some letter is already in the top family.
    pub fn antipode_word(&self, w: &Word) -> Option<Word> {
        let mut letters: Vec<u16> = Vec::with_capacity(w.len());
        for &l in w.letters().iter().rev() {
            let g = &self.generators[l as usize];
            if g.family >= self.n_max {
                return None;
            }
            letters.push(self.generator(g.family + 1, g.base));
        }
        Some(self.word(&letters))
    }

    pub fn counit_of_word(&self, w: &Word) -> Scalar {
        let mut acc = self.field.one();
        for &l in w.letters() {
            acc *= &self.counits[l as usize];
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// `Δ(w)` in the free algebra, as `(left word, right word, coefficient)`.
    pub fn coproduct_of_word(&self, w: &Word) -> Vec<(Word, Word, Scalar)> {
        let mut acc: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
        acc.insert((Word::empty(), Word::empty()), self.field.one());
        for &l in w.letters() {
            let mut next: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
            for ((a, b), c) in &acc {
                for (x, y, s) in &self.coproducts[l as usize] {
                    let mut a2 = a.clone();
                    a2.push(*x, self.weights[*x as usize]);
                    let mut b2 = b.clone();
                    b2.push(*y, self.weights[*y as usize]);
                    let e = next.entry((a2, b2)).or_insert_with(|| self.field.zero());
                    *e += &(c * s);
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        acc.into_iter().map(|((a, b), c)| (a, b, c)).collect()
    }
}
