//! Isomorphism classes of monomial fractional ideals over a semigroup.

use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// All normalized fractional ideals `S ∪ G` with `G` a set of gaps, one per
/// translation class.
///
/// Order: with gaps `g_0 < g_1 < ...`, a class is identified with the bitmask
/// `Σ 2^i` over `g_i ∈ G`, and classes appear by increasing mask. Index 0 is
/// always `S` and the last index is always `ℕ`.
#[derive(Debug, Clone)]
pub struct IdealClassList {
    parent: NumericalSemigroup,
    classes: Vec<RelativeIdeal>,
}

impl IdealClassList {
    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    pub fn classes(&self) -> &[RelativeIdeal] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RelativeIdeal> {
        self.classes.iter()
    }

    /// Position of the class of `e` (any translate).
    pub fn index_of(&self, e: &RelativeIdeal) -> Option<usize> {
        let (n, _) = e.normalize();
        self.classes.binary_search_by_key(&mask_key(&self.parent, &n), |c| mask_key(&self.parent, c)).ok()
    }
}

/// Sort key reproducing the bitmask order: gap indices read from the top.
fn mask_key(s: &NumericalSemigroup, e: &RelativeIdeal) -> Vec<bool> {
    s.gaps().iter().rev().map(|&g| e.contains(g)).collect()
}

impl<'a> IntoIterator for &'a IdealClassList {
    type Item = &'a RelativeIdeal;
    type IntoIter = std::slice::Iter<'a, RelativeIdeal>;

    fn into_iter(self) -> Self::IntoIter {
        self.classes.iter()
    }
}

/// Enumerates the ideal classes of `s`.
///
/// A set of gaps `G` gives an ideal iff `g + n ∈ S ∪ G` for every `g ∈ G` and
/// minimal generator `n`; since `g + n > g`, deciding gaps from the largest
/// down lets every constraint be checked when `g` is considered. Excluding
/// before including yields increasing bitmask order.
pub fn enumerate_ideal_classes(s: &NumericalSemigroup) -> IdealClassList {
    let gaps = s.gaps();
    let required: Vec<Vec<usize>> = gaps
        .iter()
        .map(|&g| {
            s.generators()
                .iter()
                .filter_map(|&n| gaps.binary_search(&(g + n)).ok())
                .collect()
        })
        .collect();
    let mut chosen = vec![false; gaps.len()];
    let mut classes = Vec::new();
    descend(s, &required, gaps.len(), &mut chosen, &mut classes);
    IdealClassList {
        parent: s.clone(),
        classes,
    }
}

fn descend(
    s: &NumericalSemigroup,
    required: &[Vec<usize>],
    remaining: usize,
    chosen: &mut [bool],
    out: &mut Vec<RelativeIdeal>,
) {
    if remaining == 0 {
        let gaps = s.gaps();
        out.push(RelativeIdeal::from_predicate(s, 0, |z| {
            s.contains(z) || gaps.binary_search(&z).is_ok_and(|i| chosen[i])
        }));
        return;
    }
    let i = remaining - 1;
    chosen[i] = false;
    descend(s, required, i, chosen, out);
    if required[i].iter().all(|&j| chosen[j]) {
        chosen[i] = true;
        descend(s, required, i, chosen, out);
        chosen[i] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    #[test]
    fn two_three_has_ring_and_normalization() {
        let s = ns("2,3");
        let list = enumerate_ideal_classes(&s);
        assert_eq!(list.classes(), &[RelativeIdeal::ring(&s), RelativeIdeal::normalization(&s)]);
    }

    #[test]
    fn three_five_seven_has_six_classes() {
        let s = ns("3,5,7");
        let list = enumerate_ideal_classes(&s);
        let gap_parts: Vec<Vec<i64>> = list
            .iter()
            .map(|e| s.gaps().iter().copied().filter(|&g| e.contains(g)).collect())
            .collect();
        assert_eq!(
            gap_parts,
            vec![vec![], vec![2], vec![4], vec![1, 4], vec![2, 4], vec![1, 2, 4]]
        );
        assert_eq!(list.index_of(&RelativeIdeal::tail(&s, 5)), Some(5));
        assert_eq!(list.index_of(&RelativeIdeal::principal(&s, -3)), Some(0));
    }

    #[test]
    fn naturals_has_one_class() {
        assert_eq!(enumerate_ideal_classes(&NumericalSemigroup::naturals()).len(), 1);
    }

    #[test]
    fn brute_force_agreement() {
        for s in crate::tree::enumerate_up_to_genus(6) {
            let gaps = s.gaps();
            let mut expected = Vec::new();
            for mask in 0u32..(1 << gaps.len()) {
                let member = |z: i64| {
                    s.contains(z) || gaps.iter().position(|&g| g == z).is_some_and(|i| mask >> i & 1 == 1)
                };
                let closed = gaps.iter().enumerate().all(|(i, &g)| {
                    mask >> i & 1 == 0 || s.generators().iter().all(|&n| member(g + n))
                });
                if closed {
                    expected.push(RelativeIdeal::from_predicate(&s, 0, member));
                }
            }
            assert_eq!(enumerate_ideal_classes(&s).classes(), expected.as_slice(), "{s:?}");
        }
    }
}
