use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use degix_core::families::{generate, FamilySpec};
use degix_core::graph::{graph6_decode, parse_edge_list, Graph};

use crate::{CliError, Source};

/// Graphs named by a source, plus whether the source is a single graph.
pub struct Loaded {
    pub graphs: Vec<Graph>,
    pub single: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))
}

pub fn family(spec: &str) -> Result<(FamilySpec, Graph), CliError> {
    let spec: FamilySpec = spec.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    let g = generate(&spec).map_err(|e| CliError::Failed(e.to_string()))?;
    Ok((spec, g))
}

pub fn graph6_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = read(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6_decode(line)
            .map_err(|e| CliError::Failed(format!("{}:{}: {e}", path.display(), i + 1)))?;
        out.push(g);
    }
    Ok(out)
}

pub fn load(source: &Source) -> Result<Loaded, CliError> {
    if let Some(spec) = &source.family {
        return Ok(Loaded { graphs: vec![family(spec)?.1], single: true });
    }
    if let Some(path) = &source.g6 {
        return Ok(Loaded { graphs: graph6_file(path)?, single: false });
    }
    if let Some(path) = &source.edges {
        let g = parse_edge_list(&read(path)?).map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
        return Ok(Loaded { graphs: vec![g], single: true });
    }
    Err(CliError::Usage("one of --family, --g6 or --edges is required".into()))
}

/// `LO..HI` (inclusive); `LO..=HI` and a single `N` are also accepted.
pub fn range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("range must look like LO..HI, got `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(CliError::Usage(format!("empty range `{s}`")));
            }
            Ok(lo..=hi)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}
