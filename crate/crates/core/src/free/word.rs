use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::linalg::Scalar;

/// A monomial in the free algebra: generator indices plus the cached total
/// weight. Words are ordered by weight, then lexicographically by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    weight: u32,
    letters: SmallVec<[u16; 8]>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            weight: 0,
            letters: SmallVec::new(),
        }
    }

    pub fn from_letters(letters: &[u16], weights: &[u32]) -> Self {
        Word {
            weight: letters.iter().map(|&l| weights[l as usize]).sum(),
            letters: SmallVec::from_slice(letters),
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            weight: self.weight + other.weight,
            letters,
        }
    }

    pub fn concat3(a: &Word, b: &Word, c: &Word) -> Word {
        let mut letters = SmallVec::with_capacity(a.len() + b.len() + c.len());
        letters.extend_from_slice(&a.letters);
        letters.extend_from_slice(&b.letters);
        letters.extend_from_slice(&c.letters);
        Word {
            weight: a.weight + b.weight + c.weight,
            letters,
        }
    }

    pub fn push(&mut self, letter: u16, weight: u32) {
        self.letters.push(letter);
        self.weight += weight;
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A generator `c_n`: family `n`, base basis index `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub family: usize,
    pub base: usize,
    pub weight: u32,
    pub name: String,
}

/// Sparse polynomial: terms sorted by descending word, no zero coefficients.
pub type Poly = Vec<(Word, Scalar)>;

pub(crate) fn normalize(mut terms: Vec<(Word, Scalar)>) -> Poly {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Poly = Vec::with_capacity(terms.len());
    for (w, c) in terms {
        match out.last_mut() {
            Some((lw, lc)) if *lw == w => *lc += &c,
            _ => out.push((w, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `a − c·b` for descending-sorted polys.
pub(crate) fn sub_scaled(a: &[(Word, Scalar)], c: &Scalar, b: &[(Word, Scalar)]) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => y.0.cmp(&x.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0.clone(), -&(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) struct WordDisplay<'a> {
    pub word: &'a Word,
    pub generators: &'a [Generator],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.generators[l as usize].name)?;
        }
        Ok(())
    }
}

/// All words of each exact weight `0..=max`.
pub(crate) fn words_by_weight(weights: &[u32], max: u32) -> Vec<Vec<Word>> {
    let mut by: Vec<Vec<Word>> = vec![Vec::new(); max as usize + 1];
    by[0].push(Word::empty());
    for w in 1..=max {
        let mut level = Vec::new();
        for (g, &gw) in weights.iter().enumerate() {
            if gw == 0 || gw > w {
                continue;
            }
            for prefix in &by[(w - gw) as usize] {
                let mut x = prefix.clone();
                x.push(g as u16, gw);
                level.push(x);
            }
        }
        by[w as usize] = level;
    }
    by
}
