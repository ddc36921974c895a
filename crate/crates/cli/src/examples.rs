//! Built-in example objects, addressed by short spec strings.

use anyhow::{anyhow, bail, Context};
use hopfwork::free::BialgebraPresentation;
use hopfwork::library::{self, MonoidTable};
use hopfwork::{Field, HopfAlgebra};

use crate::format::Object;

pub const NAMES: &[(&str, &str)] = &[
    ("cyclic:N", "group algebra kZ_N"),
    ("s3", "group algebra kS_3"),
    ("sweedler", "Sweedler's 4-dimensional Hopf algebra (char ≠ 2)"),
    ("taft:N:Q", "Taft algebra, Q a primitive N-th root of unity in the field"),
    ("matrix-coalgebra:N", "the coalgebra M_N(k)^*"),
    ("matrix-algebra:N", "the algebra M_N(k)"),
    ("diagonal:N", "the algebra k^N"),
    ("grouplikes:M", "span of M grouplikes"),
    ("idempotent-monoid", "monoid bialgebra of {1, z}, z² = z"),
    ("monoid:TABLE", "monoid bialgebra; TABLE rows separated by `;`, entries by `,`"),
    ("nat-monoid-cap:D", "grouplikes x, …, x^D of the ℕ-monoid coalgebra"),
    ("dual-NAME", "linear dual of any example above"),
];

fn param<T: std::str::FromStr>(spec: &str, s: Option<&str>) -> anyhow::Result<T> {
    s.ok_or_else(|| anyhow!("example `{spec}` needs a parameter"))?
        .parse()
        .map_err(|_| anyhow!("bad parameter in example `{spec}`"))
}

fn monoid_table(spec: &str, rows: &str) -> anyhow::Result<MonoidTable> {
    let table: Vec<Vec<usize>> = rows
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|_| anyhow!("bad table in example `{spec}`"))?;
    let n = table.len();
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e].get(a) == Some(&a) && table.get(a).and_then(|r| r.get(e)) == Some(&a)))
        .ok_or_else(|| anyhow!("monoid table in `{spec}` has no identity"))?;
    let names = (0..n).map(|i| if i == identity { "1".to_string() } else { format!("m{i}") }).collect();
    Ok(MonoidTable::new(table, identity, names)?)
}

pub fn make_example(spec: &str, field: Field) -> anyhow::Result<Object> {
    if let Some(inner) = spec.strip_prefix("dual-") {
        return Ok(make_example(inner, field)?.dual());
    }
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or("");
    let (p1, p2) = (parts.next(), parts.next());
    let hopf = |h: hopfwork::Result<HopfAlgebra>| -> anyhow::Result<Object> { Ok(Object::Hopf(h?)) };
    let obj = match name {
        "cyclic" => hopf(library::cyclic_group_algebra(field, param(spec, p1)?))?,
        "s3" => hopf(library::s3_group_algebra(field))?,
        "sweedler" => hopf(library::sweedler(field))?,
        "taft" => {
            let n: usize = param(spec, p1)?;
            let q = field.parse_scalar(p2.ok_or_else(|| anyhow!("taft needs N:Q"))?)?;
            hopf(library::taft(field, n, &q))?
        }
        "matrix-coalgebra" => Object::Coalgebra(library::matrix_coalgebra(field, param(spec, p1)?)?),
        "matrix-algebra" => Object::Algebra(library::matrix_algebra(field, param(spec, p1)?)?),
        "diagonal" => Object::Algebra(library::diagonal_algebra(field, param(spec, p1)?)?),
        "grouplikes" => Object::Coalgebra(library::grouplike_coalgebra(field, param(spec, p1)?)?),
        "idempotent-monoid" => Object::Bialgebra(library::monoid_bialgebra(field, &MonoidTable::idempotent())?),
        "monoid" => {
            let t = monoid_table(spec, p1.ok_or_else(|| anyhow!("monoid needs a table"))?)?;
            Object::Bialgebra(library::monoid_bialgebra(field, &t)?)
        }
        "nat-monoid-cap" => Object::Coalgebra(BialgebraPresentation::nat_monoid_cap(field, param(spec, p1)?)?.coalgebra),
        _ => bail!("unknown example `{spec}` (try `example --list`)"),
    };
    if parts.next().is_some() {
        bail!("too many parameters in example `{spec}`");
    }
    obj.check()
        .context("example failed its own check")?
        .into_result()
        .context("example failed its own check")?;
    Ok(obj)
}
