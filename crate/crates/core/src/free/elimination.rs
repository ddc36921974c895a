use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::free::word::{sub_scaled, words_by_weight, Poly, Word};
use crate::linalg::{Field, Scalar};

/// Echelon basis of the span of all multiples `u·r·v` of the relations with
/// total weight at most `window`. Pivot rows are monic with their lead as key.
///
/// Left factors `u` containing the lead of some relation are skipped: such a
/// multiple is a combination of multiples with a shorter or smaller left factor.
#[derive(Clone, Debug)]
pub struct Eliminator {
    field: Field,
    pivots: HashMap<Word, Poly>,
    pub rows_processed: usize,
}

impl Eliminator {
    pub fn run(field: Field, weights: &[u32], relations: &[Poly], window: u32, budget: usize) -> Result<Self> {
        let by_weight = words_by_weight(weights, window);
        let leads: HashSet<&[u16]> = relations.iter().map(|r| r[0].0.letters()).collect();
        let longest = leads.iter().map(|l| l.len()).max().unwrap_or(0);
        let left: Vec<Vec<Word>> = by_weight
            .iter()
            .map(|ws| ws.iter().filter(|w| !contains_factor(w.letters(), &leads, longest)).cloned().collect())
            .collect();
        let mut e = Eliminator {
            field,
            pivots: HashMap::new(),
            rows_processed: 0,
        };
        let mut planned = 0usize;
        for r in relations {
            let rw = r[0].0.weight();
            if rw > window {
                continue;
            }
            let free = (window - rw) as usize;
            for (a, us) in left.iter().enumerate().take(free + 1) {
                for vs in by_weight.iter().take(free - a + 1) {
                    planned = planned.saturating_add(us.len().saturating_mul(vs.len()));
                }
            }
        }
        if planned > budget {
            return Err(Error::Budget(format!(
                "{planned} relation multiples exceed the budget of {budget}"
            )));
        }
        // Low-weight multiples first keeps the echelon rows short.
        for total in 0..=window {
            for r in relations {
                let rw = r[0].0.weight();
                if rw > total {
                    continue;
                }
                let free = (total - rw) as usize;
                for a in 0..=free {
                    for u in &left[a] {
                        for v in &by_weight[free - a] {
                            let row: Poly = r.iter().map(|(w, c)| (Word::concat3(u, w, v), c.clone())).collect();
                            e.insert(row);
                        }
                    }
                }
            }
        }
        Ok(e)
    }

    fn insert(&mut self, mut row: Poly) {
        self.rows_processed += 1;
        loop {
            let Some((lead, c)) = row.first() else {
                return;
            };
            match self.pivots.get(lead) {
                Some(p) => {
                    let c = c.clone();
                    row = sub_scaled(&row, &c, p);
                }
                None => break,
            }
        }
        let inv = row[0].1.inv().expect("nonzero lead");
        for (_, c) in row.iter_mut() {
            *c *= &inv;
        }
        let lead = row[0].0.clone();
        self.pivots.insert(lead, row);
    }

    pub fn is_lead(&self, w: &Word) -> bool {
        self.pivots.contains_key(w)
    }

    pub fn pivot_count(&self) -> usize {
        self.pivots.len()
    }

    /// Fully reduced form: no remaining term is a pivot lead.
    pub fn normal_form(&self, terms: impl IntoIterator<Item = (Word, Scalar)>) -> BTreeMap<Word, Scalar> {
        let mut work: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in terms {
            *work.entry(w).or_insert_with(|| self.field.zero()) += &c;
        }
        let mut out = BTreeMap::new();
        while let Some((w, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.pivots.get(&w) {
                Some(p) => {
                    for (pw, pc) in &p[1..] {
                        *work.entry(pw.clone()).or_insert_with(|| self.field.zero()) -= &(&c * pc);
                    }
                }
                None => {
                    out.insert(w, c);
                }
            }
        }
        out
    }
}

fn contains_factor(w: &[u16], leads: &HashSet<&[u16]>, longest: usize) -> bool {
    (0..w.len()).any(|i| (1..=longest.min(w.len() - i)).any(|l| leads.contains(&w[i..i + l])))
}
