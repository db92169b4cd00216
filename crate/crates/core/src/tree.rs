//! The semigroup tree: every numerical semigroup of genus `g + 1` arises
//! exactly once as `S \ {x}` for a semigroup `S` of genus `g` and a minimal
//! generator `x > F(S)`.

use crate::semigroup::NumericalSemigroup;

/// Children of `s` in the semigroup tree, ordered by the removed generator.
pub fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    s.generators()
        .iter()
        .filter(|&&x| x > s.frobenius())
        .map(|&x| s.remove_generator(x))
        .collect()
}

/// All semigroups of genus exactly `genus`, depth-first.
pub fn enumerate_by_genus(genus: usize) -> Vec<NumericalSemigroup> {
    enumerate_subtree(&NumericalSemigroup::naturals(), genus)
}

/// Descendants of `root` (including `root` itself) with the given genus,
/// depth-first with children in generator order. Disjoint roots at a common
/// genus give disjoint partitions of the full enumeration.
pub fn enumerate_subtree(root: &NumericalSemigroup, genus: usize) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    if root.genus() <= genus {
        walk(root, genus, &mut out);
    }
    out
}

fn walk(s: &NumericalSemigroup, genus: usize, out: &mut Vec<NumericalSemigroup>) {
    if s.genus() == genus {
        out.push(s.clone());
        return;
    }
    for child in children(s) {
        walk(&child, genus, out);
    }
}

/// Every semigroup of genus `0..=max_genus`, genus by genus.
pub fn enumerate_up_to_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut level = vec![NumericalSemigroup::naturals()];
    for _ in 0..=max_genus {
        let next = level.iter().flat_map(children).collect();
        out.append(&mut level);
        level = next;
    }
    out
}

/// Brute-force enumeration: all subsets of `{1..2g}` of size `g` whose
/// complement in `ℕ` is additively closed. Exponential; for cross-checks.
pub fn enumerate_by_gap_sets(genus: usize) -> Vec<Vec<i64>> {
    let bound = 2 * genus as i64;
    let mut out = Vec::new();
    let mut current = Vec::new();
    choose(1, bound, genus, &mut current, &mut out);
    out.retain(|gaps| {
        let member = |z: i64| z >= 0 && !gaps.contains(&z);
        (1..=bound).all(|a| {
            !member(a) || (a..=bound).all(|b| !member(b) || member(a + b))
        })
    });
    out
}

fn choose(from: i64, to: i64, k: usize, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for v in from..=to {
        current.push(v);
        choose(v + 1, to, k, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero_is_naturals() {
        assert_eq!(enumerate_by_genus(0), vec![NumericalSemigroup::naturals()]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=8).map(|g| enumerate_by_genus(g).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
        assert_eq!(enumerate_up_to_genus(8).len(), 156);
    }

    #[test]
    fn genus_three_semigroups() {
        let names: Vec<String> = enumerate_by_genus(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["4,5,6,7", "3,5,7", "3,4", "2,7"]);
    }

    #[test]
    fn subtrees_partition_the_level() {
        let roots = enumerate_by_genus(2);
        let joined: Vec<_> = roots.iter().flat_map(|r| enumerate_subtree(r, 6)).collect();
        assert_eq!(joined, enumerate_by_genus(6));
    }
}
