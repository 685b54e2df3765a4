//! Name resolution: user catalogs, the shipped data files, family
//! expressions such as `null:4`, and products written `Z2*N2`.

use std::path::Path;

use subdirect_core::catalog::Family;
use subdirect_core::semigroup::DEFAULT_SIZE_CAP;
use subdirect_core::{Error, FiniteSemigroup};

use crate::error::{CliError, CliResult};
use crate::io;

macro_rules! shipped {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../catalog/", $name, ".json")))),*]
    };
}

/// The named corpus as Cayley-document JSON.
pub const SHIPPED: &[(&str, &str)] = shipped!(
    "T1", "L2", "SL3", "L2xL2", "Z2", "Z3", "S3", "N2", "N3", "NIL3", "MONO4", "GN3", "LZ2", "RB22", "Z2xN2", "SL2N",
    "LZ2_0",
);

pub fn shipped(name: &str) -> Option<CliResult<FiniteSemigroup>> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, doc)| io::from_json(doc))
}

fn user(dir: &Path, name: &str) -> Option<CliResult<FiniteSemigroup>> {
    ["json", "txt"].iter().find_map(|ext| {
        let path = dir.join(format!("{name}.{ext}"));
        path.is_file().then(|| {
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
            io::parse_table(&text)
        })
    })
}

fn numbers(params: &str, sep: char) -> CliResult<Vec<usize>> {
    params.split(sep).map(|p| p.trim().parse().map_err(|_| CliError::Usage(format!("not a number: {p:?}")))).collect()
}

/// `cyclic:n`, `null:n`, `chain:n`, `nilpotent:k`, `rectangular-band:AxB`,
/// `group-extension:G+R`.
pub fn parse_family(expr: &str) -> CliResult<Option<Family>> {
    let Some((kind, params)) = expr.split_once(':') else {
        return Ok(None);
    };
    let one = || -> CliResult<usize> { Ok(numbers(params, ',')?[0]) };
    let two = |sep| -> CliResult<(usize, usize)> {
        match numbers(params, sep)?.as_slice() {
            &[a, b] => Ok((a, b)),
            _ => Err(CliError::Usage(format!("{kind} takes two parameters separated by {sep:?}"))),
        }
    };
    let family = match kind {
        "cyclic" => Family::Cyclic(one()?),
        "null" => Family::Null(one()?),
        "chain" => Family::Chain(one()?),
        "nilpotent" => Family::MonogenicNilpotent(one()?),
        "rectangular-band" => {
            let (a, b) = two('x')?;
            Family::RectangularBand(a, b)
        }
        "group-extension" => {
            let (group, extra) = two('+')?;
            Family::GroupExtension { group, extra }
        }
        _ => return Err(CliError::Core(Error::UnknownName(expr.to_string()))),
    };
    Ok(Some(family))
}

fn atom(name: &str, user_dir: Option<&Path>) -> CliResult<FiniteSemigroup> {
    if let Some(found) = user_dir.and_then(|d| user(d, name)) {
        return found;
    }
    if let Some(found) = shipped(name) {
        return found;
    }
    match parse_family(name)? {
        Some(family) => Ok(subdirect_core::catalog::family(&family)?),
        None => Err(CliError::Core(Error::UnknownName(name.to_string()))),
    }
}

/// Resolves a catalog expression; factors of `A*B*…` are multiplied left to
/// right.
pub fn resolve(expr: &str, user_dir: Option<&Path>) -> CliResult<FiniteSemigroup> {
    let mut factors = expr.split('*').map(str::trim);
    let mut s = atom(factors.next().unwrap_or_default(), user_dir)?;
    for f in factors {
        s = s.direct_product(&atom(f, user_dir)?, DEFAULT_SIZE_CAP)?;
    }
    Ok(s)
}
