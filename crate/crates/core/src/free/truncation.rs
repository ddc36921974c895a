use std::collections::{BTreeMap, HashMap};

use crate::convolution::DEFAULT_MAX_ORDER;
use crate::error::Result;
use crate::free::elimination::Eliminator;
use crate::free::presentation::{BialgebraPresentation, GradedPresentation};
use crate::free::word::{words_by_weight, Generator, Word, WordDisplay};
use crate::linalg::{vector, Field, Matrix, Scalar, SparseTensor3};
use crate::structure::{Bialgebra, Coalgebra, HopfAlgebra};
use crate::verdict::{CheckResult, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    FreeBialgebra,
    FreeHopfOnCoalgebra,
    FreeHopfOnBialgebra,
    /// Products imposed on part of the basis only, with `1` the empty word.
    FreeHopfOnPresentation,
    /// `(H*(H^op))^op`.
    EnvelopingBijective,
}

impl Construction {
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::FreeBialgebra => "free-bialgebra",
            Construction::FreeHopfOnCoalgebra => "free-hopf",
            Construction::FreeHopfOnBialgebra => "free-hopf-bialgebra",
            Construction::FreeHopfOnPresentation => "free-hopf-presentation",
            Construction::EnvelopingBijective => "kstar",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationOptions {
    /// Maximum number of relation multiples fed to the elimination.
    pub budget: usize,
    /// Also run slack `s + 1` and compare dimension series.
    pub check_stability: bool,
    /// Highest generator family; `d + s` when unset.
    pub families: Option<usize>,
}

impl Default for TruncationOptions {
    fn default() -> Self {
        TruncationOptions {
            budget: 20_000_000,
            check_stability: true,
            families: None,
        }
    }
}

/// A free construction cut off at weight `degree`: normal words, partial
/// multiplication table, comultiplication, counit, antipode and unit arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBialgebra {
    pub construction: Construction,
    pub field: Field,
    pub degree: usize,
    pub slack: usize,
    /// Highest generator family.
    pub n_max: usize,
    /// Weight bound of the relation multiples used for every level.
    pub window: u32,
    pub generators: Vec<Generator>,
    /// Normal words of weight ≤ degree, ascending.
    pub basis: Vec<Word>,
    pub names: Vec<String>,
    /// `level_dims[l]` = number of normal words of weight ≤ l.
    pub level_dims: Vec<usize>,
    /// Entries only for pairs whose weights add up to at most `degree`.
    pub mult: SparseTensor3,
    pub comult: SparseTensor3,
    pub counit: Vec<Scalar>,
    /// Column `j` is `S(basis[j])`, or `None` when a letter of the word is in
    /// the top family. Absent for the free bialgebra.
    pub antipode: Option<Vec<Option<Vec<Scalar>>>>,
    /// `α`: column `c` is the class of `c_0`; zero for base elements heavier
    /// than the cutoff.
    pub unit_arrow: Matrix,
    pub base_names: Vec<String>,
    /// Dimension series at slack `s + 1` (with families up to `d + s + 1`),
    /// when computed and within budget.
    pub next_dims: Option<Vec<usize>>,
    pub relation_count: usize,
    pub multiples: usize,
    pub pivots: usize,
    pub opposite: bool,
}

type Sparse = BTreeMap<usize, Scalar>;

fn add_to(v: &mut Sparse, k: usize, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.entry(k) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += &c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn level_dims(basis: &[Word], degree: usize) -> Vec<usize> {
    (0..=degree)
        .map(|l| basis.iter().filter(|w| w.weight() as usize <= l).count())
        .collect()
}

fn normal_words(e: &Eliminator, weights: &[u32], degree: usize) -> Vec<Word> {
    let mut basis: Vec<Word> = words_by_weight(weights, degree as u32)
        .into_iter()
        .flatten()
        .filter(|w| !e.is_lead(w))
        .collect();
    basis.sort();
    basis
}

fn build(
    gp: &GradedPresentation,
    presentation: Option<&BialgebraPresentation>,
    base: &Coalgebra,
    construction: Construction,
    degree: usize,
    slack: usize,
    opts: &TruncationOptions,
) -> Result<TruncatedBialgebra> {
    let field = gp.field;
    let window = (degree + slack) as u32;
    let e = Eliminator::run(field, &gp.weights, &gp.relations, window, opts.budget)?;
    let basis = normal_words(&e, &gp.weights, degree);
    let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    let to_vec = |nf: &BTreeMap<Word, Scalar>| -> Vec<(usize, Scalar)> {
        nf.iter()
            .filter_map(|(w, c)| index.get(w).map(|&i| (i, c.clone())))
            .collect()
    };
    let nf_word = |w: &Word| e.normal_form([(w.clone(), field.one())]);

    let mut mult = SparseTensor3::new(field, (n, n, n));
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            if (u.weight() + v.weight()) as usize > degree {
                continue;
            }
            for (k, c) in to_vec(&nf_word(&u.concat(v))) {
                mult.insert(i, j, k, c)?;
            }
        }
    }

    let mut comult = SparseTensor3::new(field, (n, n, n));
    let mut cache: HashMap<Word, Vec<(usize, Scalar)>> = HashMap::new();
    for (i, w) in basis.iter().enumerate() {
        for (a, b, c) in gp.coproduct_of_word(w) {
            for x in [&a, &b] {
                if !cache.contains_key(x) {
                    cache.insert(x.clone(), to_vec(&nf_word(x)));
                }
            }
            for (ka, ca) in &cache[&a] {
                for (kb, cb) in &cache[&b] {
                    comult.accumulate(i, *ka, *kb, &(&c * &(ca * cb)))?;
                }
            }
        }
    }

    let counit: Vec<Scalar> = basis.iter().map(|w| gp.counit_of_word(w)).collect();

    let antipode = if construction == Construction::FreeBialgebra {
        None
    } else {
        Some(
            basis
                .iter()
                .map(|w| {
                    gp.antipode_word(w).map(|sw| {
                        let mut col = vector::zeros(field, n);
                        for (k, c) in to_vec(&nf_word(&sw)) {
                            col[k] = c;
                        }
                        col
                    })
                })
                .collect(),
        )
    };

    let mut unit_arrow = Matrix::zeros(field, n, gp.base_dim);
    for c in 0..gp.base_dim {
        let g = Word::from_letters(&[gp.generator(0, c)], &gp.weights);
        if g.weight() as usize <= degree {
            for (k, s) in to_vec(&nf_word(&g)) {
                unit_arrow.set(k, c, s);
            }
        }
    }

    let next_dims = match presentation {
        Some(p) if opts.check_stability => {
            let next = GradedPresentation::free_hopf(p, opts.families.unwrap_or(degree + slack + 1))?;
            Eliminator::run(field, &next.weights, &next.relations, window + 1, opts.budget)
                .ok()
                .map(|e| level_dims(&normal_words(&e, &next.weights, degree), degree))
        }
        _ => None,
    };

    let names = basis
        .iter()
        .map(|w| {
            WordDisplay {
                word: w,
                generators: &gp.generators,
            }
            .to_string()
        })
        .collect();
    Ok(TruncatedBialgebra {
        construction,
        field,
        degree,
        slack,
        n_max: gp.n_max,
        window,
        generators: gp.generators.clone(),
        level_dims: level_dims(&basis, degree),
        basis,
        names,
        mult,
        comult,
        counit,
        antipode,
        unit_arrow,
        base_names: base.names().to_vec(),
        next_dims,
        relation_count: gp.relations.len(),
        multiples: e.rows_processed,
        pivots: e.pivot_count(),
        opposite: false,
    })
}

/// The tensor algebra `T(C)` cut off at degree `d`, with `Δ` extended
/// multiplicatively.
pub fn free_bialgebra(c: &Coalgebra, d: usize) -> Result<TruncatedBialgebra> {
    let gp = GradedPresentation::free_bialgebra(c)?;
    build(&gp, None, c, Construction::FreeBialgebra, d, 0, &TruncationOptions::default())
}

pub fn free_hopf_on_coalgebra(c: &Coalgebra, d: usize, s: usize) -> Result<TruncatedBialgebra> {
    free_hopf_on_presentation(
        &BialgebraPresentation::from_coalgebra(c),
        d,
        s,
        &TruncationOptions::default(),
    )
}

pub fn free_hopf_on_bialgebra(b: &Bialgebra, d: usize, s: usize) -> Result<TruncatedBialgebra> {
    free_hopf_on_presentation(
        &BialgebraPresentation::from_bialgebra(b),
        d,
        s,
        &TruncationOptions::default(),
    )
}

/// Generator families run up to `n_max = d + s` unless overridden.
pub fn free_hopf_on_presentation(
    p: &BialgebraPresentation,
    d: usize,
    s: usize,
    opts: &TruncationOptions,
) -> Result<TruncatedBialgebra> {
    let gp = GradedPresentation::free_hopf(p, opts.families.unwrap_or(d + s))?;
    let construction = match (&p.unit, p.products.is_empty()) {
        (Some(_), _) => Construction::FreeHopfOnBialgebra,
        (None, true) => Construction::FreeHopfOnCoalgebra,
        (None, false) => Construction::FreeHopfOnPresentation,
    };
    build(&gp, Some(p), &p.coalgebra, construction, d, s, opts)
}

/// `K*(H) = (H*(H^op))^op`.
pub fn k_star(h: &HopfAlgebra, d: usize, s: usize) -> Result<TruncatedBialgebra> {
    k_star_with(h, d, s, &TruncationOptions::default())
}

pub fn k_star_with(h: &HopfAlgebra, d: usize, s: usize, opts: &TruncationOptions) -> Result<TruncatedBialgebra> {
    let p = BialgebraPresentation::from_bialgebra(&h.bialgebra().opposite());
    let mut t = free_hopf_on_presentation(&p, d, s, opts)?.opposite();
    t.construction = Construction::EnvelopingBijective;
    Ok(t)
}

/// Direct limit of `H → H → …` with transition `S²`, filtered by the image
/// of `α`: degree 0 is `k·1`, every higher degree is the eventual image of `S²`.
pub fn colimit_oracle(h: &HopfAlgebra, d: usize) -> Result<Vec<usize>> {
    let s = h.require_antipode()?;
    let s2 = s * s;
    let mut p = s2.clone();
    let mut rank = p.rank();
    for _ in 0..DEFAULT_MAX_ORDER {
        p = &p * &s2;
        let r = p.rank();
        if r == rank {
            break;
        }
        rank = r;
    }
    Ok((0..=d).map(|l| if l == 0 { 1 } else { rank }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageDims {
    pub level: usize,
    pub full_dim: usize,
    pub image_dim: usize,
    /// Basis words of this level on which `S` is not defined in the truncation.
    pub undefined: usize,
}

/// Per level, `dim span S(F_l)` over the words where `S` is defined.
pub fn antipode_image_dims(t: &TruncatedBialgebra) -> Vec<ImageDims> {
    let Some(cols) = &t.antipode else {
        return Vec::new();
    };
    (0..=t.degree)
        .map(|l| {
            let idx: Vec<usize> = (0..t.basis.len()).filter(|&i| t.basis[i].weight() as usize <= l).collect();
            let defined: Vec<Vec<Scalar>> = idx.iter().filter_map(|&i| cols[i].clone()).collect();
            let image_dim = if defined.is_empty() {
                0
            } else {
                Matrix::from_columns(t.field, t.basis.len(), &defined).expect("columns").rank()
            };
            ImageDims {
                level: l,
                full_dim: idx.len(),
                image_dim,
                undefined: idx.len() - defined.len(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitArrowReport {
    /// No kernel vector found at this cutoff.
    pub injective_on_base: bool,
    pub image_dim: usize,
    /// A base vector mapped to zero, when one exists.
    pub kernel_witness: Option<Vec<Scalar>>,
}

pub fn unit_arrow_report(t: &TruncatedBialgebra) -> UnitArrowReport {
    let rk = t.unit_arrow.rank_kernel_image();
    UnitArrowReport {
        injective_on_base: rk.kernel.cols() == 0,
        image_dim: rk.rank,
        kernel_witness: (rk.kernel.cols() > 0).then(|| rk.kernel.column(0)),
    }
}

impl TruncatedBialgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn weight(&self, i: usize) -> usize {
        self.basis[i].weight() as usize
    }

    /// Whether the product of basis elements `i` and `j` is inside the cutoff.
    pub fn in_range(&self, i: usize, j: usize) -> bool {
        self.weight(i) + self.weight(j) <= self.degree
    }

    /// Whether slacks `s` and `s + 1` give the same dimension series. The
    /// free bialgebra has no relations and is always stable.
    pub fn stable(&self) -> Option<bool> {
        if self.construction == Construction::FreeBialgebra {
            return Some(true);
        }
        self.next_dims.as_ref().map(|p| *p == self.level_dims)
    }

    /// The antipode as a matrix when it is defined on every basis word.
    pub fn antipode_matrix(&self) -> Option<Matrix> {
        let cols: Option<Vec<Vec<Scalar>>> = self.antipode.as_ref()?.iter().cloned().collect();
        Matrix::from_columns(self.field, self.dim(), &cols?).ok()
    }

    /// Opposite multiplication; the antipode becomes `S⁻¹` when `S` is
    /// defined everywhere and invertible, and is dropped otherwise.
    pub fn opposite(&self) -> TruncatedBialgebra {
        let antipode = self.antipode.as_ref().map(|cols| {
            match self.antipode_matrix().and_then(|m| m.inverse()) {
                Some(inv) => inv.columns().into_iter().map(Some).collect(),
                None => vec![None; cols.len()],
            }
        });
        TruncatedBialgebra {
            mult: self.mult.permuted([1, 0, 2]),
            antipode,
            opposite: !self.opposite,
            ..self.clone()
        }
    }

    fn product(&self, x: &Sparse, y: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (&i, a) in x {
            for (&j, b) in y {
                let ab = a * b;
                for (k, c) in self.mult.slice12(i, j) {
                    add_to(&mut out, k, &ab * c);
                }
            }
        }
        out
    }

    fn coproduct(&self, x: &Sparse) -> Sparse {
        let n = self.dim();
        let mut out = Sparse::new();
        for (&i, a) in x {
            for (j, k, c) in self.comult.slice1(i) {
                add_to(&mut out, j * n + k, a * c);
            }
        }
        out
    }

    fn max_weight(&self, x: &Sparse) -> usize {
        x.keys().map(|&i| self.weight(i)).max().unwrap_or(0)
    }

    fn antipode_sparse(&self, x: &Sparse) -> Option<Sparse> {
        let cols = self.antipode.as_ref()?;
        let mut out = Sparse::new();
        for (&i, a) in x {
            for (k, c) in cols[i].as_ref()?.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                add_to(&mut out, k, a * c);
            }
        }
        Some(out)
    }

    /// Degreewise bialgebra axioms, plus the antipode identities and
    /// anti-multiplicativity of `S` wherever the words involved stay inside
    /// the cutoff and `S` is defined.
    pub fn check_axioms(&self) -> CheckResult {
        let n = self.dim();
        let f = self.field;
        let e = |i: usize| Sparse::from([(i, f.one())]);
        if self.basis.first().is_none_or(|w| !w.is_empty()) {
            return CheckResult::no(Witness::Index(0), "the empty word is not a normal word");
        }
        let unit = e(0);
        let eps = |x: &Sparse| x.iter().fold(f.zero(), |acc, (&k, c)| acc + c * &self.counit[k]);
        let deltas: Vec<Sparse> = (0..n).map(|i| self.coproduct(&e(i))).collect();
        for i in 0..n {
            if self.product(&unit, &e(i)) != e(i) || self.product(&e(i), &unit) != e(i) {
                return CheckResult::no(Witness::Index(i), "unit law fails");
            }
            let mut left = Sparse::new();
            let mut right = Sparse::new();
            let mut counit_l = Sparse::new();
            let mut counit_r = Sparse::new();
            for (&p, c) in &deltas[i] {
                let (a, b) = (p / n, p % n);
                for (&q, d) in &deltas[a] {
                    add_to(&mut left, q * n + b, c * d);
                }
                for (&q, d) in &deltas[b] {
                    add_to(&mut right, a * n * n + q, c * d);
                }
                add_to(&mut counit_l, b, c * &self.counit[a]);
                add_to(&mut counit_r, a, c * &self.counit[b]);
            }
            if left != right {
                return CheckResult::no(Witness::Index(i), "coassociativity fails");
            }
            if counit_l != e(i) || counit_r != e(i) {
                return CheckResult::no(Witness::Index(i), "counit law fails");
            }
            for j in 0..n {
                if !self.in_range(i, j) {
                    continue;
                }
                let ij = self.product(&e(i), &e(j));
                for k in 0..n {
                    if self.weight(i) + self.weight(j) + self.weight(k) > self.degree {
                        continue;
                    }
                    let jk = self.product(&e(j), &e(k));
                    if self.product(&ij, &e(k)) != self.product(&e(i), &jk) {
                        return CheckResult::no(Witness::Triple(i, j, k), "associativity fails in range");
                    }
                }
                let mut rhs = Sparse::new();
                for (&p, a) in &deltas[i] {
                    for (&q, b) in &deltas[j] {
                        let ab = a * b;
                        let l = self.product(&e(p / n), &e(q / n));
                        let r = self.product(&e(p % n), &e(q % n));
                        for (&x, c) in &l {
                            for (&y, d) in &r {
                                add_to(&mut rhs, x * n + y, &ab * &(c * d));
                            }
                        }
                    }
                }
                if self.coproduct(&ij) != rhs {
                    return CheckResult::no(Witness::Pair(i, j), "Δ is not multiplicative in range");
                }
                if eps(&ij) != &self.counit[i] * &self.counit[j] {
                    return CheckResult::no(Witness::Pair(i, j), "ε is not multiplicative in range");
                }
            }
        }
        if self.coproduct(&unit) != Sparse::from([(0, f.one())]) || !self.counit[0].is_one() {
            return CheckResult::no(Witness::Index(0), "1 is not grouplike");
        }
        if let Some(cols) = &self.antipode {
            for (i, d) in deltas.iter().enumerate() {
                let defined = d.keys().all(|&p| cols[p / n].is_some() && cols[p % n].is_some());
                if defined && 2 * self.weight(i) <= self.degree {
                    let mut left = Sparse::new();
                    let mut right = Sparse::new();
                    for (&p, c) in d {
                        let (a, b) = (p / n, p % n);
                        for (k, x) in self.product(&self.antipode_sparse(&e(a)).unwrap(), &e(b)) {
                            add_to(&mut left, k, c * &x);
                        }
                        for (k, x) in self.product(&e(a), &self.antipode_sparse(&e(b)).unwrap()) {
                            add_to(&mut right, k, c * &x);
                        }
                    }
                    let mut expected = Sparse::new();
                    add_to(&mut expected, 0, self.counit[i].clone());
                    if left != expected || right != expected {
                        return CheckResult::no(Witness::Index(i), format!("antipode identity fails on {}", self.names[i]));
                    }
                }
                for j in 0..n {
                    if !self.in_range(i, j) {
                        continue;
                    }
                    let (Some(si), Some(sj)) = (self.antipode_sparse(&e(i)), self.antipode_sparse(&e(j))) else {
                        continue;
                    };
                    let Some(sij) = self.antipode_sparse(&self.product(&e(i), &e(j))) else {
                        continue;
                    };
                    if self.max_weight(&sj) + self.max_weight(&si) > self.degree {
                        continue;
                    }
                    if sij != self.product(&sj, &si) {
                        return CheckResult::no(Witness::Pair(i, j), "S is not anti-multiplicative in range");
                    }
                }
            }
        }
        CheckResult::yes("axioms hold wherever the truncation defines them")
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let cols = self.antipode.as_ref()?;
        let mut out = vector::zeros(self.field, self.dim());
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            vector::add_scaled(&mut out, a, cols[i].as_ref()?);
        }
        Some(out)
    }
}
