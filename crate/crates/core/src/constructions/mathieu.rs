use std::path::Path;

use crate::data::load_perm_group;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

pub fn mathieu_order(n: usize) -> Option<u128> {
    match n {
        11 => Some(7920),
        23 => Some(10_200_960),
        24 => Some(244_823_040),
        _ => None,
    }
}

/// The Mathieu group of degree 11, 23 or 24 from its data file.
pub fn mathieu(n: usize) -> Result<PermGroup> {
    mathieu_in(n, None)
}

pub fn mathieu_in(n: usize, dir: Option<&Path>) -> Result<PermGroup> {
    let expected = mathieu_order(n).ok_or_else(|| Error::InvalidArgument(format!("no Mathieu group of degree {n}")))?;
    let g = load_perm_group(&format!("mathieu{n}.grp"), dir)?;
    if g.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: g.degree() });
    }
    if g.order() != expected {
        return Err(Error::OrderMismatch { expected, computed: g.order() });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(mathieu(11).unwrap().order(), 7920);
        let m23 = mathieu(23).unwrap();
        assert_eq!(m23.point_stabilizer(0).order(), 443_520);
        let m24 = mathieu(24).unwrap();
        assert_eq!(m24.order() / m24.point_stabilizer(0).order(), 24);
        assert!(mathieu(12).is_err());
    }

    #[test]
    fn tampered_file_rejected() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("mathieu11.grp"),
            "degree 11\norder 7920\ngen (1 2 3 4 5 6 7 8 9 10 11)\ngen (3 7 11 8)(4 10 6 5)\n",
        )
        .unwrap();
        assert!(mathieu_in(11, Some(dir.path())).is_err());
    }
}
