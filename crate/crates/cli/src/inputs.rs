//! Input resolution: groups come either from a JSON file or a built-in name;
//! rings, G-rings, and functors always come from files.

use crate::error::CliError;
use std::path::Path;
use std::sync::Arc;
use tambara::grings::GRing;
use tambara::groups::{FiniteGroup, SubgroupLattice};
use tambara::io::{named_group, parse_functor, parse_gring, parse_group};
use tambara::tambara::{Strictness, TambaraFunctor};

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read file '{path}': {e}")))
}

/// Resolve a `--group` argument: an existing file is parsed as a group file;
/// anything path-shaped that does not exist is a usage error; everything else
/// is looked up among the built-in group names.
pub fn load_group(arg: &str) -> Result<FiniteGroup, CliError> {
    if Path::new(arg).is_file() {
        return Ok(parse_group(&read_file(arg)?)?);
    }
    if arg.contains('/') || arg.contains('.') {
        return Err(CliError::Usage(format!("group file '{arg}' does not exist")));
    }
    Ok(named_group(arg)?)
}

pub fn load_lattice(arg: &str) -> Result<Arc<SubgroupLattice>, CliError> {
    Ok(Arc::new(SubgroupLattice::new(Arc::new(load_group(arg)?))?))
}

pub fn load_functor(path: &str) -> Result<TambaraFunctor, CliError> {
    Ok(parse_functor(&read_file(path)?, Strictness::Standard)?)
}

pub fn load_gring(path: &str) -> Result<GRing, CliError> {
    Ok(parse_gring(&read_file(path)?)?)
}

/// Parse one `--generator LEVEL:ELEM` occurrence into lattice and element
/// indices.
pub fn parse_generator(arg: &str) -> Result<(usize, usize), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "generator '{arg}' is not of the form LEVEL:ELEM (two indices separated by ':')"
        ))
    };
    let (level, elem) = arg.split_once(':').ok_or_else(bad)?;
    Ok((level.trim().parse().map_err(|_| bad())?, elem.trim().parse().map_err(|_| bad())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups_resolve_and_unknown_paths_are_usage_errors() {
        assert_eq!(load_group("C6").unwrap().order(), 6);
        assert!(matches!(load_group("no/such/file.json"), Err(CliError::Usage(_))));
        // An unknown bare name is a domain error from the io module.
        assert!(matches!(load_group("X9"), Err(CliError::Io(_))));
    }

    #[test]
    fn generators_parse_as_index_pairs() {
        assert_eq!(parse_generator("0:2").unwrap(), (0, 2));
        assert_eq!(parse_generator(" 3 : 14 ").unwrap(), (3, 14));
        assert!(parse_generator("3").is_err());
        assert!(parse_generator("a:b").is_err());
    }
}
