use crate::perm::gcd;

/// Distinct non-trivial values, ascending.
fn nontrivial_distinct(values: &[u64]) -> Vec<u64> {
    let mut v: Vec<u64> = values.iter().copied().filter(|&x| x > 1).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Pairs `m < n` of distinct non-trivial values with `gcd(m, n) = 1`.
pub fn coprime_pairs(values: &[u64]) -> Vec<(u64, u64)> {
    let v = nontrivial_distinct(values);
    let mut out = Vec::new();
    for (i, &m) in v.iter().enumerate() {
        for &n in &v[i + 1..] {
            if gcd(m, n) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

/// A largest set of pairwise coprime non-trivial values; among those of
/// maximum size, the lexicographically smallest ascending one.
pub fn max_coprime_set(values: &[u64]) -> Vec<u64> {
    fn extend(cands: &[u64], current: &mut Vec<u64>, best: &mut Vec<u64>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        for (i, &x) in cands.iter().enumerate() {
            if current.len() + cands.len() - i <= best.len() {
                return;
            }
            let rest: Vec<u64> = cands[i + 1..].iter().copied().filter(|&y| gcd(x, y) == 1).collect();
            current.push(x);
            extend(&rest, current, best);
            current.pop();
        }
    }
    let v = nontrivial_distinct(values);
    let mut best = Vec::new();
    extend(&v, &mut Vec::new(), &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques() {
        assert_eq!(max_coprime_set(&[1, 3, 4, 11]), vec![3, 4, 11]);
        assert_eq!(max_coprime_set(&[1, 576, 49, 28224]), vec![49, 576]);
        assert_eq!(max_coprime_set(&[5, 6, 10, 12, 15, 20, 30]), vec![5, 6]);
        assert_eq!(max_coprime_set(&[1, 1]), Vec::<u64>::new());
        assert_eq!(max_coprime_set(&[4, 4, 4]), vec![4]);
        assert_eq!(coprime_pairs(&[1, 15, 32, 90, 480]), vec![(15, 32)]);
    }
}
