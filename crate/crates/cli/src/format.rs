//! Line-oriented text format for objects and morphisms. See `docs/FORMAT.md`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use hopfwork::structure::{algebra_morphism, coalgebra_morphism, hopf_morphism};
use hopfwork::{Algebra, Bialgebra, CheckResult, Coalgebra, Error, Field, HopfAlgebra, Matrix, Scalar, SparseTensor3};

pub const OBJECT_HEADER: &str = "hopfwork-object 1";
pub const MORPHISM_HEADER: &str = "hopfwork-morphism 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl Level {
    pub fn name(&self) -> &'static str {
        match self {
            Level::Algebra => "algebra",
            Level::Coalgebra => "coalgebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        }
    }

    fn parse(s: &str) -> Option<Level> {
        Some(match s {
            "algebra" => Level::Algebra,
            "coalgebra" => Level::Coalgebra,
            "bialgebra" => Level::Bialgebra,
            "hopf" => Level::Hopf,
            _ => return None,
        })
    }

    fn has_algebra(&self) -> bool {
        *self != Level::Coalgebra
    }

    fn has_coalgebra(&self) -> bool {
        *self != Level::Algebra
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Bialgebra(Bialgebra),
    Hopf(HopfAlgebra),
}

impl Object {
    pub fn level(&self) -> Level {
        match self {
            Object::Algebra(_) => Level::Algebra,
            Object::Coalgebra(_) => Level::Coalgebra,
            Object::Bialgebra(_) => Level::Bialgebra,
            Object::Hopf(_) => Level::Hopf,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Object::Algebra(a) => a.field(),
            Object::Coalgebra(c) => c.field(),
            Object::Bialgebra(b) => b.field(),
            Object::Hopf(h) => h.field(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Object::Algebra(a) => a.dim(),
            Object::Coalgebra(c) => c.dim(),
            Object::Bialgebra(b) => b.dim(),
            Object::Hopf(h) => h.dim(),
        }
    }

    pub fn names(&self) -> &[String] {
        match self {
            Object::Algebra(a) => a.names(),
            Object::Coalgebra(c) => c.names(),
            Object::Bialgebra(b) => b.names(),
            Object::Hopf(h) => h.names(),
        }
    }

    pub fn algebra(&self) -> Option<&Algebra> {
        match self {
            Object::Algebra(a) => Some(a),
            Object::Coalgebra(_) => None,
            Object::Bialgebra(b) => Some(b.algebra()),
            Object::Hopf(h) => Some(h.algebra()),
        }
    }

    pub fn coalgebra(&self) -> Option<&Coalgebra> {
        match self {
            Object::Algebra(_) => None,
            Object::Coalgebra(c) => Some(c),
            Object::Bialgebra(b) => Some(b.coalgebra()),
            Object::Hopf(h) => Some(h.coalgebra()),
        }
    }

    pub fn bialgebra(&self) -> Option<&Bialgebra> {
        match self {
            Object::Bialgebra(b) => Some(b),
            Object::Hopf(h) => Some(h.bialgebra()),
            _ => None,
        }
    }

    pub fn hopf(&self) -> Option<&HopfAlgebra> {
        match self {
            Object::Hopf(h) => Some(h),
            _ => None,
        }
    }

    /// Linear dual: algebras and coalgebras swap, bialgebras and Hopf
    /// algebras stay at their level.
    pub fn dual(&self) -> Object {
        match self {
            Object::Algebra(a) => Object::Coalgebra(a.dual()),
            Object::Coalgebra(c) => Object::Algebra(c.dual()),
            Object::Bialgebra(b) => Object::Bialgebra(b.dual()),
            Object::Hopf(h) => Object::Hopf(h.dual()),
        }
    }

    /// Reduction of every structure constant into `field`.
    pub fn change_field(&self, field: Field) -> anyhow::Result<Object> {
        if field == self.field() {
            return Ok(self.clone());
        }
        let f = |s: &Scalar| match s.as_rational() {
            Some(q) => field.from_rational(q),
            None => None,
        };
        let out = match self {
            Object::Algebra(a) => a.change_field(field, &f).map(Object::Algebra),
            Object::Coalgebra(c) => c.change_field(field, &f).map(Object::Coalgebra),
            Object::Bialgebra(b) => b.change_field(field, &f).map(Object::Bialgebra),
            Object::Hopf(h) => h.change_field(field, &f).map(Object::Hopf),
        };
        out.ok_or_else(|| anyhow!("cannot move structure constants from {} to {field}", self.field()))
    }

    /// The level's own axiom check.
    pub fn check(&self) -> hopfwork::Result<CheckResult> {
        match self {
            Object::Algebra(a) => Ok(a.check()),
            Object::Coalgebra(c) => Ok(c.check()),
            Object::Bialgebra(b) => Ok(b.check()),
            Object::Hopf(h) => h.check(),
        }
    }
}

/// Raw file contents, before any axiom is checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectFile {
    pub field: Field,
    pub level: Level,
    pub dim: usize,
    pub names: Vec<String>,
    pub mult: Option<SparseTensor3>,
    pub unit: Option<Vec<Scalar>>,
    pub comult: Option<SparseTensor3>,
    pub counit: Option<Vec<Scalar>>,
    pub antipode: Option<Matrix>,
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-blank, non-comment line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            let l = l.trim();
            if !l.is_empty() && !l.starts_with('#') {
                return Some((i + 1, l));
            }
        }
        None
    }
}

fn perr(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn parse_usize(line: usize, what: &str, s: &str) -> hopfwork::Result<usize> {
    s.parse().map_err(|_| perr(line, format!("{what} `{s}` is not a nonnegative integer")))
}

fn parse_list(line: usize, field: Field, s: &str, len: usize, what: &str) -> hopfwork::Result<Vec<Scalar>> {
    let s = s.trim();
    let items: Vec<Scalar> = if s.is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|t| field.parse_scalar(t).map_err(|e| perr(line, format!("{what}: {e}"))))
            .collect::<hopfwork::Result<_>>()?
    };
    if items.len() != len {
        return Err(perr(line, format!("{what} has {} entries, expected {len}", items.len())));
    }
    Ok(items)
}

fn expect_key<'a>(lines: &mut Lines<'a>, key: &str) -> hopfwork::Result<(usize, &'a str)> {
    let (n, l) = lines.next().ok_or_else(|| Error::Parse(format!("missing `{key}` line")))?;
    match l.split_once(char::is_whitespace) {
        Some((k, rest)) if k == key => Ok((n, rest.trim())),
        _ => Err(perr(n, format!("expected `{key} …`, found `{l}`"))),
    }
}

fn parse_tensor(lines: &mut Lines, field: Field, dim: usize, block: &str) -> hopfwork::Result<SparseTensor3> {
    let mut t = SparseTensor3::new(field, (dim, dim, dim));
    loop {
        let (n, l) = lines.next().ok_or_else(|| Error::Parse(format!("unterminated `{block}` block")))?;
        if l == "end" {
            return Ok(t);
        }
        let (idx, value) = l
            .split_once('=')
            .ok_or_else(|| perr(n, format!("{block} entry must read `i j k = value`, found `{l}`")))?;
        let idx: Vec<&str> = idx.split_whitespace().collect();
        if idx.len() != 3 {
            return Err(perr(n, format!("{block} entry needs three indices, found `{l}`")));
        }
        let (i, j, k) = (
            parse_usize(n, "index", idx[0])?,
            parse_usize(n, "index", idx[1])?,
            parse_usize(n, "index", idx[2])?,
        );
        if i >= dim || j >= dim || k >= dim {
            return Err(perr(n, format!("{block} entry ({i}, {j}, {k}) out of range for dim {dim}")));
        }
        let c = field.parse_scalar(value).map_err(|e| perr(n, format!("{block} entry ({i}, {j}, {k}): {e}")))?;
        if !t.get(i, j, k).is_zero() {
            return Err(perr(n, format!("{block} entry ({i}, {j}, {k}) given twice")));
        }
        t.insert(i, j, k, c)?;
    }
}

fn parse_matrix_rows(lines: &mut Lines, field: Field, rows: usize, cols: usize, block: &str) -> hopfwork::Result<Matrix> {
    let mut m = Matrix::zeros(field, rows, cols);
    loop {
        let (n, l) = lines.next().ok_or_else(|| Error::Parse(format!("unterminated `{block}` block")))?;
        if l == "end" {
            return Ok(m);
        }
        let rest = l
            .strip_prefix("row")
            .ok_or_else(|| perr(n, format!("{block} line must read `row i = …`, found `{l}`")))?;
        let (i, values) = rest
            .split_once('=')
            .ok_or_else(|| perr(n, format!("{block} line must read `row i = …`, found `{l}`")))?;
        let i = parse_usize(n, "row", i.trim())?;
        if i >= rows {
            return Err(perr(n, format!("{block} row {i} out of range for {rows} rows")));
        }
        for (j, v) in parse_list(n, field, values, cols, &format!("{block} row {i}"))?.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
}

fn render_tensor(out: &mut String, name: &str, t: &SparseTensor3) {
    let _ = writeln!(out, "{name}");
    for (i, j, k, c) in t.iter() {
        let _ = writeln!(out, "{i} {j} {k} = {c}");
    }
    let _ = writeln!(out, "end");
}

fn render_list(v: &[Scalar]) -> String {
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
}

fn render_matrix_rows(out: &mut String, m: &Matrix) {
    for i in 0..m.rows() {
        let _ = writeln!(out, "row {i} = {}", render_list(m.row(i)));
    }
    let _ = writeln!(out, "end");
}

impl ObjectFile {
    pub fn parse(text: &str) -> hopfwork::Result<ObjectFile> {
        let mut lines = Lines::new(text);
        match lines.next() {
            Some((_, OBJECT_HEADER)) => {}
            Some((n, l)) => return Err(perr(n, format!("expected header `{OBJECT_HEADER}`, found `{l}`"))),
            None => return Err(Error::Parse("empty file".into())),
        }
        let (n, f) = expect_key(&mut lines, "field")?;
        let field: Field = f.parse().map_err(|e| perr(n, e))?;
        let (n, l) = expect_key(&mut lines, "level")?;
        let level = Level::parse(l).ok_or_else(|| perr(n, format!("unknown level `{l}`")))?;
        let (n, d) = expect_key(&mut lines, "dim")?;
        let dim = parse_usize(n, "dim", d)?;
        if dim == 0 {
            return Err(perr(n, "dim must be positive"));
        }
        let mut file = ObjectFile {
            field,
            level,
            dim,
            names: (0..dim).map(|i| format!("e{i}")).collect(),
            mult: None,
            unit: None,
            comult: None,
            counit: None,
            antipode: None,
        };
        while let Some((n, l)) = lines.next() {
            let key = l.split(|c: char| c.is_whitespace() || c == '=').next().unwrap_or("");
            let rest = l[key.len()..].trim();
            let value = || {
                rest.strip_prefix('=')
                    .ok_or_else(|| perr(n, format!("`{key}` must read `{key} = …`")))
            };
            match key {
                "names" => {
                    let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                    if names.len() != dim {
                        return Err(perr(n, format!("{} names for dim {dim}", names.len())));
                    }
                    file.names = names;
                }
                "mult" if file.mult.is_none() => file.mult = Some(parse_tensor(&mut lines, field, dim, "mult")?),
                "comult" if file.comult.is_none() => {
                    file.comult = Some(parse_tensor(&mut lines, field, dim, "comult")?)
                }
                "unit" if file.unit.is_none() => file.unit = Some(parse_list(n, field, value()?, dim, "unit")?),
                "counit" if file.counit.is_none() => {
                    file.counit = Some(parse_list(n, field, value()?, dim, "counit")?)
                }
                "antipode" if file.antipode.is_none() => {
                    file.antipode = Some(parse_matrix_rows(&mut lines, field, dim, dim, "antipode")?)
                }
                "mult" | "comult" | "unit" | "counit" | "antipode" => {
                    return Err(perr(n, format!("`{key}` given twice")))
                }
                _ => return Err(perr(n, format!("unknown field `{key}`"))),
            }
        }
        let need = |present: bool, what: &str| {
            if present {
                Ok(())
            } else {
                Err(Error::Parse(format!("level {} requires `{what}`", level.name())))
            }
        };
        if level.has_algebra() {
            need(file.mult.is_some(), "mult")?;
            need(file.unit.is_some(), "unit")?;
        }
        if level.has_coalgebra() {
            need(file.comult.is_some(), "comult")?;
            need(file.counit.is_some(), "counit")?;
        }
        let extra = |present: bool, what: &str| {
            if present {
                Err(Error::Parse(format!("level {} does not take `{what}`", level.name())))
            } else {
                Ok(())
            }
        };
        if !level.has_algebra() {
            extra(file.mult.is_some(), "mult")?;
            extra(file.unit.is_some(), "unit")?;
        }
        if !level.has_coalgebra() {
            extra(file.comult.is_some(), "comult")?;
            extra(file.counit.is_some(), "counit")?;
        }
        if level != Level::Hopf {
            extra(file.antipode.is_some(), "antipode")?;
        }
        Ok(file)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{OBJECT_HEADER}");
        let _ = writeln!(out, "field {}", self.field);
        let _ = writeln!(out, "level {}", self.level.name());
        let _ = writeln!(out, "dim {}", self.dim);
        let _ = writeln!(out, "names {}", self.names.join(" "));
        if let Some(m) = &self.mult {
            render_tensor(&mut out, "mult", m);
        }
        if let Some(u) = &self.unit {
            let _ = writeln!(out, "unit = {}", render_list(u));
        }
        if let Some(c) = &self.comult {
            render_tensor(&mut out, "comult", c);
        }
        if let Some(e) = &self.counit {
            let _ = writeln!(out, "counit = {}", render_list(e));
        }
        if let Some(s) = &self.antipode {
            let _ = writeln!(out, "antipode");
            render_matrix_rows(&mut out, s);
        }
        out
    }

    pub fn from_object(obj: &Object) -> ObjectFile {
        let a = obj.algebra();
        let c = obj.coalgebra();
        ObjectFile {
            field: obj.field(),
            level: obj.level(),
            dim: obj.dim(),
            names: obj.names().to_vec(),
            mult: a.map(|a| a.mult().clone()),
            unit: a.map(|a| a.unit().to_vec()),
            comult: c.map(|c| c.comult().clone()),
            counit: c.map(|c| c.counit().to_vec()),
            antipode: obj.hopf().and_then(|h| h.antipode().cloned()),
        }
    }

    /// Shapes only; the axioms are not inspected.
    pub fn into_unchecked(self) -> hopfwork::Result<Object> {
        let algebra = match (self.mult, self.unit) {
            (Some(m), Some(u)) => Some(Algebra::from_parts_unchecked(m, u)?.with_names(self.names.clone())?),
            _ => None,
        };
        let coalgebra = match (self.comult, self.counit) {
            (Some(m), Some(e)) => Some(Coalgebra::from_parts_unchecked(m, e)?.with_names(self.names.clone())?),
            _ => None,
        };
        Ok(match self.level {
            Level::Algebra => Object::Algebra(algebra.expect("checked in parse")),
            Level::Coalgebra => Object::Coalgebra(coalgebra.expect("checked in parse")),
            Level::Bialgebra => Object::Bialgebra(Bialgebra::from_parts_unchecked(
                algebra.expect("checked in parse"),
                coalgebra.expect("checked in parse"),
            )?),
            Level::Hopf => Object::Hopf(HopfAlgebra::from_parts_unchecked(
                Bialgebra::from_parts_unchecked(algebra.expect("checked in parse"), coalgebra.expect("checked in parse"))?,
                self.antipode,
            )?),
        })
    }

    /// Validating conversion. A Hopf file without an `antipode` block gets
    /// its antipode solved for.
    pub fn into_object(self) -> hopfwork::Result<Object> {
        let missing_antipode = self.level == Level::Hopf && self.antipode.is_none();
        let obj = self.into_unchecked()?;
        if let Object::Hopf(h) = &obj {
            h.bialgebra().check().into_result()?;
            if missing_antipode {
                let s = hopfwork::convolution::antipode_solve(h.bialgebra())?
                    .into_matrix()
                    .ok_or_else(|| Error::Precondition("level hopf but the bialgebra has no antipode".into()))?;
                return Ok(Object::Hopf(h.with_antipode(s)?));
            }
        }
        obj.check()?.into_result()?;
        Ok(obj)
    }
}

pub fn parse_object(text: &str) -> hopfwork::Result<Object> {
    ObjectFile::parse(text)?.into_object()
}

pub fn render_object(obj: &Object) -> String {
    ObjectFile::from_object(obj).render()
}

pub fn load_object(path: &Path) -> anyhow::Result<Object> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_object(&text).with_context(|| format!("loading {}", path.display()))
}

pub fn save_object(obj: &Object, path: &Path) -> anyhow::Result<()> {
    fs::write(path, render_object(obj)).with_context(|| format!("writing {}", path.display()))
}

/// A morphism file: level, two object paths (relative to the morphism file)
/// and the matrix, column `j` = image of source basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismFile {
    pub level: Level,
    pub source: String,
    pub target: String,
    pub field: Field,
    pub matrix: Matrix,
}

impl MorphismFile {
    pub fn parse(text: &str) -> hopfwork::Result<MorphismFile> {
        let mut lines = Lines::new(text);
        match lines.next() {
            Some((_, MORPHISM_HEADER)) => {}
            Some((n, l)) => return Err(perr(n, format!("expected header `{MORPHISM_HEADER}`, found `{l}`"))),
            None => return Err(Error::Parse("empty file".into())),
        }
        let (n, f) = expect_key(&mut lines, "field")?;
        let field: Field = f.parse().map_err(|e| perr(n, e))?;
        let (n, l) = expect_key(&mut lines, "level")?;
        let level = Level::parse(l).ok_or_else(|| perr(n, format!("unknown level `{l}`")))?;
        let (_, source) = expect_key(&mut lines, "source")?;
        let (_, target) = expect_key(&mut lines, "target")?;
        let (n, shape) = expect_key(&mut lines, "matrix")?;
        let dims: Vec<&str> = shape.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(perr(n, "`matrix` needs `rows cols`"));
        }
        let (rows, cols) = (parse_usize(n, "rows", dims[0])?, parse_usize(n, "cols", dims[1])?);
        let matrix = parse_matrix_rows(&mut lines, field, rows, cols, "matrix")?;
        if let Some((n, l)) = lines.next() {
            return Err(perr(n, format!("unexpected `{l}` after matrix")));
        }
        Ok(MorphismFile {
            level,
            source: source.to_string(),
            target: target.to_string(),
            field,
            matrix,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{MORPHISM_HEADER}");
        let _ = writeln!(out, "field {}", self.field);
        let _ = writeln!(out, "level {}", self.level.name());
        let _ = writeln!(out, "source {}", self.source);
        let _ = writeln!(out, "target {}", self.target);
        let _ = writeln!(out, "matrix {} {}", self.matrix.rows(), self.matrix.cols());
        render_matrix_rows(&mut out, &self.matrix);
        out
    }
}

/// A morphism whose axioms have been re-checked at its declared level.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub level: Level,
    pub source: Object,
    pub target: Object,
    pub matrix: Matrix,
    pub source_path: PathBuf,
    pub target_path: PathBuf,
}

/// Validates `f` at `level` between two loaded objects.
pub fn check_morphism(level: Level, source: &Object, target: &Object, f: &Matrix) -> anyhow::Result<CheckResult> {
    if f.shape() != (target.dim(), source.dim()) {
        bail!(
            "matrix is {}x{}, expected {}x{} (target × source)",
            f.rows(),
            f.cols(),
            target.dim(),
            source.dim()
        );
    }
    let too_low = || anyhow!("objects are not {} level", level.name());
    Ok(match level {
        Level::Algebra => algebra_morphism(source.algebra().ok_or_else(too_low)?, target.algebra().ok_or_else(too_low)?, f),
        Level::Coalgebra => {
            coalgebra_morphism(source.coalgebra().ok_or_else(too_low)?, target.coalgebra().ok_or_else(too_low)?, f)
        }
        Level::Bialgebra => {
            let a = algebra_morphism(source.algebra().ok_or_else(too_low)?, target.algebra().ok_or_else(too_low)?, f);
            if !a.is_yes() || source.bialgebra().is_none() || target.bialgebra().is_none() {
                if !a.is_yes() {
                    return Ok(a);
                }
                return Err(too_low());
            }
            coalgebra_morphism(source.coalgebra().unwrap(), target.coalgebra().unwrap(), f)
        }
        Level::Hopf => {
            if source.level() != Level::Hopf || target.level() != Level::Hopf {
                return Err(too_low());
            }
            hopf_morphism(source.hopf().unwrap(), target.hopf().unwrap(), f)?
        }
    })
}

pub fn load_morphism(path: &Path) -> anyhow::Result<Morphism> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = MorphismFile::parse(&text).with_context(|| format!("loading {}", path.display()))?;
    let base = path.parent().unwrap_or(Path::new("."));
    let source_path = base.join(&file.source);
    let target_path = base.join(&file.target);
    let source = load_object(&source_path)?;
    let target = load_object(&target_path)?;
    if source.field() != file.field || target.field() != file.field {
        bail!("{}: objects are not over field {}", path.display(), file.field);
    }
    let r = check_morphism(file.level, &source, &target, &file.matrix)
        .with_context(|| format!("validating {}", path.display()))?;
    if !r.is_yes() {
        return Err(Error::NotMorphism {
            level: file.level.name(),
            result: r,
        })
        .with_context(|| format!("validating {}", path.display()));
    }
    Ok(Morphism {
        level: file.level,
        source,
        target,
        matrix: file.matrix,
        source_path,
        target_path,
    })
}
