//! Locating group data files.
//!
//! Lookup order: an explicit directory, then `$SUBDEG_DATA`, then the
//! directory bundled with the crate.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::format::{parse_group_file, parse_perm_group_text, GroupFile};
use crate::perm::PermGroup;

pub const DATA_ENV: &str = "SUBDEG_DATA";

const BUNDLED: &[(&str, &str)] = &[
    ("mathieu11.grp", include_str!("../data/mathieu11.grp")),
    ("mathieu23.grp", include_str!("../data/mathieu23.grp")),
    ("mathieu24.grp", include_str!("../data/mathieu24.grp")),
];

fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// First existing path for `name` among the search locations.
pub fn find_data_file(name: &str, dir: Option<&Path>) -> Option<PathBuf> {
    let mut dirs: Vec<PathBuf> = Vec::new();
    if let Some(d) = dir {
        dirs.push(d.to_path_buf());
    }
    if let Some(d) = std::env::var_os(DATA_ENV) {
        dirs.push(PathBuf::from(d));
    }
    dirs.push(bundled_dir());
    dirs.into_iter().map(|d| d.join(name)).find(|p| p.is_file())
}

/// Reads a permutation group data file, falling back to the copies compiled
/// into the library for the bundled files.
pub fn load_perm_group(name: &str, dir: Option<&Path>) -> Result<PermGroup> {
    if let Some(path) = find_data_file(name, dir) {
        return match parse_group_file(&path)? {
            GroupFile::Perm(g) => Ok(g),
            GroupFile::Mat(_) => Err(Error::InvalidArgument(format!("{} is a matrix group", path.display()))),
        };
    }
    match BUNDLED.iter().find(|(n, _)| *n == name) {
        Some((_, text)) => parse_perm_group_text(text),
        None => Err(Error::MissingData(name.to_string())),
    }
}
