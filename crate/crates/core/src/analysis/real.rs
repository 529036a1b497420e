use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Mat, MatGroup};

pub const DEFAULT_REAL_CAP: u128 = 200_000;

/// Which elements may conjugate.
#[derive(Clone, Debug)]
pub enum Extension {
    /// The group itself.
    None,
    /// The group together with `τ: x ↦ (xᵀ)⁻¹`.
    Tau,
    /// A larger matrix group normalizing the base group.
    Overgroup(MatGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealClassesReport {
    pub group_order: u128,
    /// Classes of the base group under conjugation by the extension.
    pub classes: usize,
    pub non_real: usize,
    pub first_counterexample: Option<String>,
    pub passed: bool,
}

/// Whether every element of `base` is conjugate to its inverse in the
/// extended group. Orbits of the extension, acting by conjugation on the
/// elements of `base`, are compared with inversion.
pub fn real_classes_check(base: &MatGroup, extension: &Extension, cap: u128) -> Result<RealClassesReport> {
    let order = base.order();
    if order > cap {
        return Err(Error::CapExceeded { what: "element enumeration", size: order, cap });
    }
    let elements = base.elements(cap)?;
    let index: HashMap<&Mat, usize> = elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut maps: Vec<Box<dyn Fn(&Mat) -> Mat + '_>> = Vec::new();
    let conjugators: Vec<Mat> = match extension {
        Extension::Overgroup(g) => g.generators().to_vec(),
        _ => base.generators().to_vec(),
    };
    for x in conjugators {
        let xinv = x.inverse()?;
        maps.push(Box::new(move |m: &Mat| xinv.mul(m).mul(&x)));
    }
    if let Extension::Tau = extension {
        maps.push(Box::new(|m: &Mat| m.transpose().inverse().expect("invertible")));
    }
    let mut label = vec![usize::MAX; elements.len()];
    let mut classes = 0;
    for start in 0..elements.len() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = classes;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for f in &maps {
                let image = f(&elements[i]);
                let j = *index
                    .get(&image)
                    .ok_or_else(|| Error::InvalidArgument("extension does not normalize the group".into()))?;
                if label[j] == usize::MAX {
                    label[j] = classes;
                    queue.push(j);
                }
            }
        }
        classes += 1;
    }
    let mut non_real = 0;
    let mut first = None;
    for (i, m) in elements.iter().enumerate() {
        let inv = m.inverse()?;
        if label[index[&inv]] != label[i] {
            non_real += 1;
            first.get_or_insert_with(|| m.to_string());
        }
    }
    Ok(RealClassesReport { group_order: order, classes, non_real, first_counterexample: first, passed: non_real == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{classical, Family, Variant};

    #[test]
    fn gl23() {
        let g = classical(Family::GL, 2, 3, Variant::Plain).unwrap().group;
        let with_tau = real_classes_check(&g, &Extension::Tau, DEFAULT_REAL_CAP).unwrap();
        assert!(with_tau.passed);
        assert_eq!(with_tau.group_order, 48);
        let plain = real_classes_check(&g, &Extension::None, DEFAULT_REAL_CAP).unwrap();
        assert_eq!(plain.classes, 8);
        assert!(!plain.passed);
    }
}
