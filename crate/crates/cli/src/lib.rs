//! Command-line front end for `hopfwork`: object and morphism files,
//! built-in examples, and one command per checker or construction.

pub mod examples;
pub mod format;
pub mod report;

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hopfwork::categorical::{
    consistency_harness, coradical, epi_test_alg, epi_test_hopf, faithful_coflatness_test, faithful_flatness_test,
    mono_test_coalg, mono_test_hopf, scorad_check, standard_corpus, CorpusEntry, CotensorSpace, FlatnessConfig,
    RelativeTensorSquare,
};
use hopfwork::convolution::{antipode_report, antipode_solve, skew_antipode, Inverse};
use hopfwork::free::{
    antipode_image_dims, free_bialgebra, free_hopf_on_presentation, k_star_with, unit_arrow_report,
    BialgebraPresentation, TruncatedBialgebra, TruncationOptions,
};
use hopfwork::linalg::vector;
use hopfwork::{CheckResult, Field, Verdict};

use crate::format::{load_morphism, load_object, render_object, Level, Morphism, Object, MORPHISM_HEADER};
use crate::report::{matrix_text, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportMode {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "hopfwork", version, about = "Exact computations with finite-dimensional Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Field for examples and constructions, or to reduce a file into: `q` or `p:<prime>`.
    #[arg(long, global = true)]
    pub field: Option<Field>,
    /// Cutoff degree of free constructions.
    #[arg(long, global = true, default_value_t = 2)]
    pub degree: usize,
    /// Slack of free constructions.
    #[arg(long, global = true, default_value_t = 2)]
    pub slack: usize,
    /// Seed of the randomized freeness search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random samples tried by the freeness search.
    #[arg(long, global = true, default_value_t = 32)]
    pub samples: usize,
    /// Largest antipode order searched for.
    #[arg(long, global = true, default_value_t = hopfwork::convolution::DEFAULT_MAX_ORDER)]
    pub max_order: u32,
    /// Relation multiples allowed in free constructions.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    pub budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = ReportMode::Text)]
    pub report: ReportMode,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of an object or morphism file at its declared level.
    Check { file: PathBuf },
    /// Solve for the antipode of a bialgebra as the convolution inverse of id.
    Antipode { file: PathBuf },
    /// Solve for the skew antipode (convolution inverse of id in Hom(H^cop, H)).
    Skew { file: PathBuf },
    /// Is the morphism an epimorphism of algebras (or of Hopf algebras)?
    Epi { morphism: PathBuf },
    /// Is the morphism a monomorphism of coalgebras (or of Hopf algebras)?
    Mono { morphism: PathBuf },
    /// Coradical of a coalgebra.
    Coradical { file: PathBuf },
    /// Does S(H) ⊇ H_0 force S to be surjective?
    Scorad { file: PathBuf },
    /// Is the target free over the source (faithful flatness)?
    Flat { morphism: PathBuf },
    /// Is the source cofree over the target (faithful coflatness)?
    Coflat { morphism: PathBuf },
    /// Epi/mono versus flatness consistency over the built-in corpus plus extra morphisms.
    Harness { morphisms: Vec<PathBuf> },
    /// Truncated tensor bialgebra on a coalgebra.
    FreeBialg { file: PathBuf },
    /// Truncated free Hopf algebra on a coalgebra.
    FreeHopf { file: PathBuf },
    /// Truncated free Hopf algebra on a bialgebra.
    FreeHopfBialg {
        file: Option<PathBuf>,
        /// Use the monoid bialgebra k[x] of ℕ, capped at the cutoff degree.
        #[arg(long, conflicts_with = "file")]
        nat_cap: bool,
    },
    /// Truncated K*(H) = (H*(H^op))^op.
    Kstar { file: PathBuf },
    /// Per-level dimension of the image of S on a free Hopf truncation.
    ImageDims { file: PathBuf },
    /// Print a built-in example as an object file.
    Example {
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
}

/// Result of running one command.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(Some(report)) => Outcome {
            code: report.exit_code(),
            stdout: report.render(cli.report),
            stderr: String::new(),
        },
        Ok(None) => Outcome {
            code: 0,
            stdout: String::new(),
            stderr: String::new(),
        },
        Err(e) => {
            let msg = format!("{e:#}");
            let stdout = match cli.report {
                ReportMode::Machine => format!("error={}\n", msg.replace('\n', " ")),
                ReportMode::Text => String::new(),
            };
            Outcome {
                code: 1,
                stdout,
                stderr: format!("error: {msg}\n"),
            }
        }
    }
}

impl Cli {
    fn load(&self, path: &Path) -> anyhow::Result<Object> {
        let obj = load_object(path)?;
        match self.field {
            Some(f) => obj.change_field(f),
            None => Ok(obj),
        }
    }

    fn load_morphism(&self, path: &Path) -> anyhow::Result<Morphism> {
        let m = load_morphism(path)?;
        if let Some(f) = self.field {
            if f != m.source.field() {
                bail!("--field {f} does not match the morphism field {}", m.source.field());
            }
        }
        Ok(m)
    }

    fn field(&self) -> Field {
        self.field.unwrap_or(Field::Rational)
    }

    fn flat_config(&self) -> FlatnessConfig {
        FlatnessConfig {
            samples: self.samples,
            seed: self.seed,
        }
    }

    fn truncation_options(&self) -> TruncationOptions {
        TruncationOptions {
            budget: self.budget,
            ..TruncationOptions::default()
        }
    }
}

fn need<'a, T>(x: Option<&'a T>, what: &str, path: &Path) -> anyhow::Result<&'a T> {
    x.ok_or_else(|| anyhow!("{} is not a {what}", path.display()))
}

fn verdict_lines(r: &mut Report, c: &CheckResult) {
    r.verdict(c.verdict);
    if let Some(w) = &c.witness {
        r.push("witness", w.to_string());
    }
    r.push("detail", &c.detail);
}

fn dispatch(cli: &Cli) -> anyhow::Result<Option<Report>> {
    let report = match &cli.command {
        Command::Check { file } => check(cli, file)?,
        Command::Antipode { file } => {
            let obj = cli.load(file)?;
            let b = need(obj.bialgebra(), "bialgebra", file)?;
            let mut r = Report::new("antipode");
            r.push("input", file.display());
            match antipode_solve(b)? {
                Inverse::Invertible(s) => {
                    r.verdict(Verdict::Yes);
                    r.push("result", "Antipode");
                    r.push("antipode", matrix_text(&s));
                    let h = hopfwork::HopfAlgebra::new(b.clone(), s)?;
                    let rep = antipode_report(&h, cli.max_order)?;
                    r.push("bijective", rep.bijective);
                    r.push("order", rep.order.map_or("none".into(), |o| o.to_string()));
                    r.push("max_order", rep.max_order);
                    r.push("image_dim", rep.image_dim);
                }
                Inverse::NotInvertible { witness, detail } => {
                    r.verdict(Verdict::No);
                    r.push("result", "NoAntipode");
                    if let Some(i) = witness {
                        r.push("witness", format!("e{i}"));
                    }
                    r.push("detail", detail);
                }
            }
            r
        }
        Command::Skew { file } => {
            let obj = cli.load(file)?;
            let h = need(obj.hopf(), "Hopf algebra", file)?;
            let mut r = Report::new("skew");
            r.push("input", file.display());
            match skew_antipode(h)? {
                Inverse::Invertible(s) => {
                    r.verdict(Verdict::Yes);
                    r.push("skew_antipode", matrix_text(&s));
                    let sinv = h.require_antipode()?.inverse();
                    r.push("equals_s_inverse", sinv.as_ref() == Some(&s));
                }
                Inverse::NotInvertible { witness, detail } => {
                    r.verdict(Verdict::No);
                    if let Some(i) = witness {
                        r.push("witness", format!("e{i}"));
                    }
                    r.push("detail", detail);
                }
            }
            r
        }
        Command::Epi { morphism } => {
            let m = cli.load_morphism(morphism)?;
            let mut r = Report::new("epi");
            r.push("input", morphism.display());
            r.push("level", m.level.name());
            let (a, b) = (
                need(m.source.algebra(), "algebra morphism", morphism)?,
                need(m.target.algebra(), "algebra morphism", morphism)?,
            );
            let res = match (m.level, m.source.hopf(), m.target.hopf()) {
                (Level::Hopf, Some(h), Some(k)) => epi_test_hopf(h, k, &m.matrix)?,
                _ => epi_test_alg(a, b, &m.matrix)?,
            };
            r.push("tensor_square_dim", RelativeTensorSquare::new(a, b, &m.matrix)?.quotient_dim);
            verdict_lines(&mut r, &res);
            r
        }
        Command::Mono { morphism } => {
            let m = cli.load_morphism(morphism)?;
            let mut r = Report::new("mono");
            r.push("input", morphism.display());
            r.push("level", m.level.name());
            let (c, d) = (
                need(m.source.coalgebra(), "coalgebra morphism", morphism)?,
                need(m.target.coalgebra(), "coalgebra morphism", morphism)?,
            );
            let res = match (m.level, m.source.hopf(), m.target.hopf()) {
                (Level::Hopf, Some(h), Some(k)) => mono_test_hopf(h, k, &m.matrix)?,
                _ => mono_test_coalg(c, d, &m.matrix)?,
            };
            r.push("cotensor_dim", CotensorSpace::new(c, d, &m.matrix)?.dim());
            verdict_lines(&mut r, &res);
            r
        }
        Command::Coradical { file } => {
            let obj = cli.load(file)?;
            let c = need(obj.coalgebra(), "coalgebra", file)?;
            let h0 = coradical(c)?;
            let mut r = Report::new("coradical");
            r.push("input", file.display());
            r.push("dim", h0.dim());
            r.push("ambient_dim", h0.ambient_dim);
            r.push("everything", h0.is_everything());
            for (i, v) in h0.basis.columns().iter().enumerate() {
                r.push(&format!("basis.{i}"), vector::format(v));
            }
            r
        }
        Command::Scorad { file } => {
            let obj = cli.load(file)?;
            let h = need(obj.hopf(), "Hopf algebra", file)?;
            let rep = scorad_check(h)?;
            let mut r = Report::new("scorad");
            r.push("input", file.display());
            r.push("coradical_dim", rep.coradical_dim);
            r.push("image_dim", rep.image_dim);
            r.push("contained", rep.contained);
            r.push("surjective", rep.surjective);
            verdict_lines(&mut r, &rep.result);
            r
        }
        Command::Flat { morphism } => {
            let m = cli.load_morphism(morphism)?;
            let (a, b) = (
                need(m.source.algebra(), "algebra morphism", morphism)?,
                need(m.target.algebra(), "algebra morphism", morphism)?,
            );
            let mut r = Report::new("flat");
            r.push("input", morphism.display());
            r.push("seed", cli.seed);
            verdict_lines(&mut r, &faithful_flatness_test(a, b, &m.matrix, &cli.flat_config())?);
            r
        }
        Command::Coflat { morphism } => {
            let m = cli.load_morphism(morphism)?;
            let (c, d) = (
                need(m.source.coalgebra(), "coalgebra morphism", morphism)?,
                need(m.target.coalgebra(), "coalgebra morphism", morphism)?,
            );
            let mut r = Report::new("coflat");
            r.push("input", morphism.display());
            r.push("seed", cli.seed);
            verdict_lines(&mut r, &faithful_coflatness_test(c, d, &m.matrix, &cli.flat_config())?);
            r
        }
        Command::Harness { morphisms } => harness(cli, morphisms)?,
        Command::FreeBialg { file } => {
            let obj = cli.load(file)?;
            let c = need(obj.coalgebra(), "coalgebra", file)?;
            truncation_report("free-bialg", Some(file), &free_bialgebra(c, cli.degree)?)
        }
        Command::FreeHopf { file } => {
            let obj = cli.load(file)?;
            let c = need(obj.coalgebra(), "coalgebra", file)?;
            let p = BialgebraPresentation::from_coalgebra(c);
            let t = free_hopf_on_presentation(&p, cli.degree, cli.slack, &cli.truncation_options())?;
            truncation_report("free-hopf", Some(file), &t)
        }
        Command::FreeHopfBialg { file, nat_cap } => {
            let p = match (file, nat_cap) {
                (_, true) => BialgebraPresentation::nat_monoid_cap(cli.field(), cli.degree.max(1))?,
                (Some(file), false) => {
                    let obj = cli.load(file)?;
                    BialgebraPresentation::from_bialgebra(need(obj.bialgebra(), "bialgebra", file)?)
                }
                (None, false) => bail!("free-hopf-bialg needs a bialgebra file or --nat-cap"),
            };
            let t = free_hopf_on_presentation(&p, cli.degree, cli.slack, &cli.truncation_options())?;
            truncation_report("free-hopf-bialg", file.as_deref(), &t)
        }
        Command::Kstar { file } => {
            let obj = cli.load(file)?;
            let h = need(obj.hopf(), "Hopf algebra", file)?;
            let t = k_star_with(h, cli.degree, cli.slack, &cli.truncation_options())?;
            truncation_report("kstar", Some(file), &t)
        }
        Command::ImageDims { file } => {
            let obj = cli.load(file)?;
            let p = match obj.bialgebra() {
                Some(b) => BialgebraPresentation::from_bialgebra(b),
                None => BialgebraPresentation::from_coalgebra(need(obj.coalgebra(), "coalgebra", file)?),
            };
            let opts = TruncationOptions {
                check_stability: false,
                ..cli.truncation_options()
            };
            let t = free_hopf_on_presentation(&p, cli.degree, cli.slack, &opts)?;
            let mut r = Report::new("image-dims");
            r.push("input", file.display());
            r.push("construction", t.construction.tag());
            r.push("degree", t.degree);
            r.push("slack", t.slack);
            for row in antipode_image_dims(&t) {
                r.push(
                    &format!("level.{}", row.level),
                    format!("full={} image={} undefined={}", row.full_dim, row.image_dim, row.undefined),
                );
            }
            r
        }
        Command::Example { name, output, list } => {
            if *list {
                let mut r = Report::new("example");
                for (n, d) in examples::NAMES {
                    r.push(n, d);
                }
                return Ok(Some(r));
            }
            let name = name.as_deref().ok_or_else(|| anyhow!("example needs a name (see --list)"))?;
            let obj = examples::make_example(name, cli.field())?;
            let text = render_object(&obj);
            match output {
                Some(path) => {
                    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                    return Ok(None);
                }
                None => {
                    let mut r = Report::new("example");
                    r.raw(text);
                    r
                }
            }
        }
    };
    Ok(Some(report))
}

fn check(cli: &Cli, file: &Path) -> anyhow::Result<Report> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let mut r = Report::new("check");
    r.push("input", file.display());
    let is_morphism = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')) == Some(MORPHISM_HEADER);
    if is_morphism {
        let mf = format::MorphismFile::parse(&text)?;
        let base = file.parent().unwrap_or(Path::new("."));
        let source = cli.load(&base.join(&mf.source))?;
        let target = cli.load(&base.join(&mf.target))?;
        r.push("kind", "morphism");
        r.push("level", mf.level.name());
        verdict_lines(&mut r, &format::check_morphism(mf.level, &source, &target, &mf.matrix)?);
        return Ok(r);
    }
    let raw = format::ObjectFile::parse(&text)?;
    let level = raw.level;
    let missing_antipode = level == Level::Hopf && raw.antipode.is_none();
    let mut obj = raw.into_unchecked()?;
    if let Some(f) = cli.field {
        obj = obj.change_field(f)?;
    }
    r.push("kind", "object");
    r.push("level", level.name());
    r.push("field", obj.field());
    r.push("dim", obj.dim());
    let res = match (&obj, missing_antipode) {
        (Object::Hopf(h), true) => {
            let b = h.bialgebra().check();
            if !b.is_yes() {
                b
            } else {
                match antipode_solve(h.bialgebra())? {
                    Inverse::Invertible(_) => CheckResult::yes("bialgebra axioms hold and the antipode exists"),
                    Inverse::NotInvertible { witness, detail } => CheckResult::no(
                        hopfwork::Witness::Index(witness.unwrap_or(0)),
                        format!("no antipode: {detail}"),
                    ),
                }
            }
        }
        _ => obj.check()?,
    };
    verdict_lines(&mut r, &res);
    Ok(r)
}

fn harness(cli: &Cli, extra: &[PathBuf]) -> anyhow::Result<Report> {
    let mut corpus = standard_corpus()?;
    for path in extra {
        let m = cli.load_morphism(path)?;
        let name = path.display().to_string();
        let entry = match (m.level, &m.source, &m.target) {
            (Level::Hopf, Object::Hopf(h), Object::Hopf(k)) => CorpusEntry::hopf(name, h, k, m.matrix.clone())?,
            (Level::Coalgebra, s, t) => CorpusEntry::coalgebra(
                name,
                need(s.coalgebra(), "coalgebra morphism", path)?,
                need(t.coalgebra(), "coalgebra morphism", path)?,
                m.matrix.clone(),
            )?,
            (_, s, t) => CorpusEntry::algebra(
                name,
                need(s.algebra(), "algebra morphism", path)?,
                need(t.algebra(), "algebra morphism", path)?,
                m.matrix.clone(),
            )?,
        };
        let dual = entry.dual();
        corpus.push(entry);
        corpus.push(dual);
    }
    let rep = consistency_harness(&corpus, &cli.flat_config())?;
    let mut r = Report::new("harness");
    r.push("entries", rep.entries.len());
    for (i, e) in rep.entries.iter().enumerate() {
        r.push(&format!("entry.{i}"), e);
    }
    let violations = rep.violations().count();
    r.push("violations", violations);
    r.push("inconclusive", rep.inconclusive);
    r.verdict(if violations > 0 {
        Verdict::No
    } else if rep.inconclusive > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Yes
    });
    Ok(r)
}

fn list(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

fn truncation_report(command: &str, input: Option<&Path>, t: &TruncatedBialgebra) -> Report {
    let mut r = Report::new(command);
    if let Some(p) = input {
        r.push("input", p.display());
    }
    r.push("construction", t.construction.tag());
    r.push("field", t.field);
    r.push("degree", t.degree);
    r.push("slack", t.slack);
    r.push("n_max", t.n_max);
    r.push("window", t.window);
    r.push("dims", list(&t.level_dims));
    if let Some(n) = &t.next_dims {
        r.push("next_dims", list(n));
    }
    r.push(
        "stable",
        match t.stable() {
            Some(true) => "true",
            Some(false) => "false",
            None => "unknown",
        },
    );
    r.push("relations", t.relation_count);
    r.push("multiples", t.multiples);
    let axioms = t.check_axioms();
    r.push("axioms", axioms.verdict);
    if !axioms.is_yes() {
        r.push("axioms_detail", &axioms.detail);
    }
    let alpha = unit_arrow_report(t);
    r.push("unit_arrow.injective_on_base", alpha.injective_on_base);
    r.push("unit_arrow.image_dim", alpha.image_dim);
    if let Some(w) = &alpha.kernel_witness {
        r.push("unit_arrow.kernel_witness", combination(w, &t.base_names));
    }
    for row in antipode_image_dims(t) {
        r.push(
            &format!("image_dims.{}", row.level),
            format!("full={} image={} undefined={}", row.full_dim, row.image_dim, row.undefined),
        );
    }
    r
}

/// `Σ c_i·name_i`, highest index first and scaled so that its coefficient is 1.
fn combination(v: &[hopfwork::Scalar], names: &[String]) -> String {
    let Some(last) = v.iter().rev().find(|c| !c.is_zero()) else {
        return "0".into();
    };
    let inv = last.inv().expect("nonzero");
    let mut out = String::new();
    for (c, n) in v.iter().zip(names).rev() {
        if c.is_zero() {
            continue;
        }
        let c = c * &inv;
        let neg = c == -&c.field().one() || c.to_string().starts_with('-');
        let mag = if neg { -&c } else { c };
        let sign = if neg { "-" } else if out.is_empty() { "" } else { "+" };
        let term = if mag.is_one() { n.clone() } else { format!("{mag}·{n}") };
        if out.is_empty() {
            out = format!("{sign}{term}");
        } else {
            out = format!("{out} {sign} {term}");
        }
    }
    out
}
