use std::fmt;

use crate::categorical::{
    epi_test_alg, faithful_coflatness_test, faithful_flatness_test, mono_test_coalg, require_algebra_morphism,
    require_coalgebra_morphism, require_hopf_morphism, FlatnessConfig,
};
use crate::error::Result;
use crate::library::{self, MonoidTable};
use crate::linalg::{Field, Matrix};
use crate::structure::{Algebra, Coalgebra, HopfAlgebra};
use crate::verdict::Verdict;

/// A verified morphism together with the levels at which it can be tested.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebras: Option<(Algebra, Algebra)>,
    pub coalgebras: Option<(Coalgebra, Coalgebra)>,
    pub map: Matrix,
}

impl CorpusEntry {
    pub fn algebra(name: impl Into<String>, a: &Algebra, b: &Algebra, map: Matrix) -> Result<Self> {
        require_algebra_morphism(a, b, &map)?;
        Ok(CorpusEntry {
            name: name.into(),
            algebras: Some((a.clone(), b.clone())),
            coalgebras: None,
            map,
        })
    }

    pub fn coalgebra(name: impl Into<String>, c: &Coalgebra, d: &Coalgebra, map: Matrix) -> Result<Self> {
        require_coalgebra_morphism(c, d, &map)?;
        Ok(CorpusEntry {
            name: name.into(),
            algebras: None,
            coalgebras: Some((c.clone(), d.clone())),
            map,
        })
    }

    pub fn hopf(name: impl Into<String>, h: &HopfAlgebra, k: &HopfAlgebra, map: Matrix) -> Result<Self> {
        require_hopf_morphism(h, k, &map)?;
        Ok(CorpusEntry {
            name: name.into(),
            algebras: Some((h.algebra().clone(), k.algebra().clone())),
            coalgebras: Some((h.coalgebra().clone(), k.coalgebra().clone())),
            map,
        })
    }

    /// The transpose `f*: B* → A*`, with algebra and coalgebra levels swapped.
    pub fn dual(&self) -> CorpusEntry {
        CorpusEntry {
            name: format!("dual({})", self.name),
            algebras: self.coalgebras.as_ref().map(|(c, d)| (d.dual(), c.dual())),
            coalgebras: self.algebras.as_ref().map(|(a, b)| (b.dual(), a.dual())),
            map: self.map.transpose(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.map.rank() == self.map.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.map.rank() == self.map.rows()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

#[derive(Clone, Debug)]
pub struct EntryReport {
    pub name: String,
    pub epi: Option<Verdict>,
    /// Freeness of the target over the source; only evaluated on injections.
    pub flat: Option<Verdict>,
    pub mono: Option<Verdict>,
    /// Only evaluated on surjections.
    pub coflat: Option<Verdict>,
    pub injective: bool,
    pub surjective: bool,
    pub violation: Option<String>,
}

impl EntryReport {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

fn show(v: Option<Verdict>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: epi={} ff={} mono={} coflat={} bijective={}",
            self.name,
            show(self.epi),
            show(self.flat),
            show(self.mono),
            show(self.coflat),
            self.bijective()
        )?;
        if let Some(v) = &self.violation {
            write!(f, " VIOLATION: {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct HarnessReport {
    pub entries: Vec<EntryReport>,
    /// Flatness verdicts that came back inconclusive.
    pub inconclusive: usize,
}

impl HarnessReport {
    pub fn violations(&self) -> impl Iterator<Item = &EntryReport> {
        self.entries.iter().filter(|e| e.violation.is_some())
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Checks `epi ∧ faithfully flat ⇒ bijective` and
/// `mono ∧ faithfully coflat ⇒ bijective` on every entry.
pub fn consistency_harness(corpus: &[CorpusEntry], cfg: &FlatnessConfig) -> Result<HarnessReport> {
    let mut entries = Vec::new();
    let mut inconclusive = 0;
    for e in corpus {
        let injective = e.is_injective();
        let surjective = e.is_surjective();
        let (mut epi, mut flat, mut mono, mut coflat) = (None, None, None, None);
        if let Some((a, b)) = &e.algebras {
            epi = Some(epi_test_alg(a, b, &e.map)?.verdict);
            if injective {
                flat = Some(faithful_flatness_test(a, b, &e.map, cfg)?.verdict);
            }
        }
        if let Some((c, d)) = &e.coalgebras {
            mono = Some(mono_test_coalg(c, d, &e.map)?.verdict);
            if surjective {
                coflat = Some(faithful_coflatness_test(c, d, &e.map, cfg)?.verdict);
            }
        }
        inconclusive += [flat, coflat].iter().filter(|v| **v == Some(Verdict::Inconclusive)).count();
        let bijective = injective && surjective;
        let violation = if epi == Some(Verdict::Yes) && flat == Some(Verdict::Yes) && !bijective {
            Some("epi and faithfully flat but not bijective".to_string())
        } else if mono == Some(Verdict::Yes) && coflat == Some(Verdict::Yes) && !bijective {
            Some("mono and faithfully coflat but not bijective".to_string())
        } else {
            None
        };
        entries.push(EntryReport {
            name: e.name.clone(),
            epi,
            flat,
            mono,
            coflat,
            injective,
            surjective,
            violation,
        });
    }
    Ok(HarnessReport { entries, inconclusive })
}

/// The built-in morphism corpus: maps between group algebras, their duals,
/// Sweedler's algebra, a Taft algebra over 𝔽_13, antipodes into
/// `H^{op,cop}`, and a non-Hopf algebra inclusion with its dual.
pub fn standard_corpus() -> Result<Vec<CorpusEntry>> {
    let q = Field::Rational;
    let z = |n| library::cyclic_group_algebra(q, n);
    let (k, z2, z3, z4, z6) = (z(1)?, z(2)?, z(3)?, z(4)?, z(6)?);
    let s3 = library::s3_group_algebra(q)?;
    let h4 = library::sweedler(q)?;
    let f13 = Field::prime(13)?;
    let taft = library::taft(f13, 3, &f13.from_int(3))?;
    let s3n = MonoidTable::symmetric3().len();

    let mut out = vec![
        CorpusEntry::hopf("kZ2 -> kZ4", &z2, &z4, library::cyclic_inclusion(q, 2, 4))?,
        CorpusEntry::hopf("kZ4 -> kZ2", &z4, &z2, library::cyclic_projection(q, 4, 2))?,
        CorpusEntry::hopf("kZ6 -> kZ3", &z6, &z3, library::cyclic_projection(q, 6, 3))?,
        CorpusEntry::hopf("kZ3 -> kZ6", &z3, &z6, library::cyclic_inclusion(q, 3, 6))?,
        CorpusEntry::hopf("kZ3 -> kS3", &z3, &s3, library::monoid_map_matrix(q, 3, s3n, &[0, 4, 5]))?,
        CorpusEntry::hopf("kZ2 -> kS3", &z2, &s3, library::monoid_map_matrix(q, 2, s3n, &[0, 1]))?,
        CorpusEntry::hopf("sign: kS3 -> kZ2", &s3, &z2, library::monoid_map_matrix(q, s3n, 2, &[0, 1, 1, 1, 0, 0]))?,
        CorpusEntry::hopf("id: H4", &h4, &h4, Matrix::identity(q, 4))?,
        CorpusEntry::hopf(
            "unit: k -> H4",
            &k,
            &h4,
            Matrix::from_columns(q, 4, &[h4.algebra().unit().to_vec()])?,
        )?,
        CorpusEntry::hopf(
            "counit: H4 -> k",
            &h4,
            &k,
            Matrix::from_rows(q, vec![h4.coalgebra().counit().to_vec()])?,
        )?,
        CorpusEntry::hopf("kZ2 -> H4", &z2, &h4, library::monoid_map_matrix(q, 2, 4, &[0, 1]))?,
        CorpusEntry::hopf(
            "H4 -> kZ2",
            &h4,
            &z2,
            Matrix::from_ints(q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
        )?,
        CorpusEntry::hopf("S: H4 -> H4^opcop", &h4, &h4.op_cop(), h4.require_antipode()?.clone())?,
        CorpusEntry::hopf("S: Taft -> Taft^opcop", &taft, &taft.op_cop(), taft.require_antipode()?.clone())?,
        CorpusEntry::hopf("S: kS3 -> kS3^opcop", &s3, &s3.op_cop(), s3.require_antipode()?.clone())?,
    ];

    let idem = library::monoid_bialgebra(q, &MonoidTable::idempotent())?;
    let diag = library::diagonal_algebra(q, 3)?;
    out.push(CorpusEntry::algebra(
        "k{1,z} -> k^3",
        idem.algebra(),
        &diag,
        Matrix::from_ints(q, &[&[1, 1], &[1, 1], &[1, 0]]),
    )?);

    let duals: Vec<CorpusEntry> = out.iter().map(CorpusEntry::dual).collect();
    out.extend(duals);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpora() {
        let q = Field::Rational;
        let z2 = library::cyclic_group_algebra(q, 2).unwrap();
        let z4 = library::cyclic_group_algebra(q, 4).unwrap();
        let inc = CorpusEntry::hopf("inc", &z2, &z4, library::cyclic_inclusion(q, 2, 4)).unwrap();
        let r = consistency_harness(std::slice::from_ref(&inc), &FlatnessConfig::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.entries[0].flat, Some(Verdict::Yes));
        assert_eq!(r.entries[0].epi, Some(Verdict::No));

        let id = CorpusEntry::hopf("id", &z2, &z2, Matrix::identity(q, 2)).unwrap();
        let r = consistency_harness(&[id], &FlatnessConfig::default()).unwrap();
        let e = &r.entries[0];
        assert_eq!((e.epi, e.flat, e.bijective()), (Some(Verdict::Yes), Some(Verdict::Yes), true));

        let proj = CorpusEntry::hopf("proj", &z4, &z2, library::cyclic_projection(q, 4, 2)).unwrap();
        let r = consistency_harness(&[proj.clone(), proj.dual()], &FlatnessConfig::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.entries[0].flat, None);
        assert_eq!(r.entries[1].mono, Some(Verdict::Yes));
        assert_eq!(r.entries[1].coflat, None);
    }
}
