//! Group descriptor grammar: `Z:n` cyclic, `x`-separated factors for
//! products (`Z:3xZ:9`), `D:n` dihedral, `Dic:m` dicyclic, `table:<path>`
//! Cayley table, `A4` the bundled alternating group.

use poeg::catalog;
use poeg::group::{Group, GroupSpec};
use std::path::PathBuf;

const GRAMMAR: &str =
    "expected Z:n | D:n | Dic:m | A4 | table:<path> | factors joined with 'x' (e.g. Z:2xZ:4)";

pub fn parse_group_descriptor(text: &str) -> Result<GroupSpec, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err(format!("empty group descriptor; {GRAMMAR}"));
    }
    // table paths may contain 'x'; treat them whole
    if let Some(path) = text.strip_prefix("table:") {
        if path.is_empty() {
            return Err(format!("empty table path in `{text}`; {GRAMMAR}"));
        }
        return Ok(GroupSpec::CayleyTable(PathBuf::from(path)));
    }
    let factors: Vec<&str> = text.split('x').collect();
    let mut specs = Vec::with_capacity(factors.len());
    for tok in factors {
        specs.push(parse_factor(tok)?);
    }
    if specs.len() == 1 {
        Ok(specs.pop().unwrap())
    } else {
        Ok(GroupSpec::Product(specs))
    }
}

fn parse_factor(tok: &str) -> Result<GroupSpec, String> {
    let parse_n = |s: &str, what: &str| -> Result<usize, String> {
        s.parse::<usize>()
            .map_err(|_| format!("bad {what} index `{s}` in token `{tok}`; {GRAMMAR}"))
    };
    if let Some(n) = tok.strip_prefix("Z:") {
        Ok(GroupSpec::Cyclic(parse_n(n, "cyclic")?))
    } else if let Some(m) = tok.strip_prefix("Dic:") {
        Ok(GroupSpec::Dicyclic(parse_n(m, "dicyclic")?))
    } else if let Some(n) = tok.strip_prefix("D:") {
        Ok(GroupSpec::Dihedral(parse_n(n, "dihedral")?))
    } else {
        Err(format!("unrecognized token `{tok}`; {GRAMMAR}"))
    }
}

/// Builds the group for a descriptor, handling the bundled `A4` name.
pub fn build_group(text: &str) -> Result<Group, String> {
    if text.trim() == "A4" {
        return Ok(catalog::alternating_4().group);
    }
    let spec = parse_group_descriptor(text)?;
    Group::new(&spec).map_err(|e| format!("cannot construct `{text}`: {e}"))
}
