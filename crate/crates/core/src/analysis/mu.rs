use serde::Serialize;

use crate::error::Result;
use crate::perm::PermGroup;

use super::coprime::max_coprime_set;
use super::subgroups::{all_subgroups, GroupTable, DEFAULT_SUBGROUP_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuReport {
    pub group_order: u128,
    /// Distinct indices of proper subgroups, ascending.
    pub indices: Vec<u64>,
    pub mu: usize,
    pub witness: Vec<u64>,
}

/// Largest number of proper subgroups with pairwise coprime indices.
pub fn mu(group: &PermGroup, cap: Option<u128>) -> Result<MuReport> {
    let mut table = GroupTable::new(group, cap.unwrap_or(DEFAULT_SUBGROUP_CAP))?;
    let n = table.len();
    let mut indices: Vec<u64> =
        all_subgroups(&mut table).iter().filter(|s| s.order < n).map(|s| (n / s.order) as u64).collect();
    indices.sort_unstable();
    indices.dedup();
    let witness = max_coprime_set(&indices);
    Ok(MuReport { group_order: n as u128, mu: witness.len(), witness, indices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alt, cyclic, psl2};

    #[test]
    fn small_values() {
        let a5 = mu(&alt(5).unwrap(), None).unwrap();
        assert_eq!(a5.indices, vec![5, 6, 10, 12, 15, 20, 30, 60]);
        assert_eq!((a5.mu, a5.witness.clone()), (2, vec![5, 6]));
        assert_eq!(mu(&psl2(7).unwrap(), None).unwrap().mu, 2);
        let c30 = mu(&cyclic(30).unwrap(), None).unwrap();
        assert_eq!((c30.mu, c30.witness), (3, vec![2, 3, 5]));
        assert_eq!(mu(&cyclic(1).unwrap(), None).unwrap().mu, 0);
    }
}
