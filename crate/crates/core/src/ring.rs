//! Ring-level invariants: conductor, blowups, Ulrich predicates, the
//! canonical reduction number, and the Gorenstein-flavour classification.

use serde::Serialize;
use thiserror::Error;

use crate::ideal::{canonical_ideal, IdealError, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("canonical reduction number {found} exceeds multiplicity - 1 = {bound}")]
    InternalBoundExceeded { found: usize, bound: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub far_flung_gorenstein: bool,
    pub canonical_reduction_number: usize,
    pub med: bool,
    pub canonical_trace: RelativeIdeal,
    pub conductor: RelativeIdeal,
}

/// `{z >= F + 1}`, the largest common ideal of `S` and `ℕ`.
pub fn conductor_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    RelativeIdeal::tail(s, s.frobenius() + 1)
}

/// Smallest `n` with `(n+1)E` a translate of `nE`.
///
/// After normalization the chain `nE - n·min(E)` is increasing inside `ℕ`
/// and constant from the first repeat on, so this terminates within
/// `genus + 1` steps.
pub fn reduction_number(e: &RelativeIdeal) -> usize {
    let mut power = RelativeIdeal::ring(e.parent());
    for n in 0.. {
        let next = power.sum(e).expect("same parent");
        if power.translate_of(&next) {
            return n;
        }
        power = next;
    }
    unreachable!()
}

/// `B(E) = ⋃ₙ (nE - nE)`.
///
/// The chain of colons is increasing and, once `(r+1)E = a + rE`, constant,
/// so the union is `rE - rE` at the reduction number `r`.
pub fn blowup(e: &RelativeIdeal) -> RelativeIdeal {
    let power = e.n_fold_sum(reduction_number(e));
    power.difference(&power).expect("same parent")
}

/// `b(E) = S - B(E)`, the conductor of `S` into the blowup.
pub fn b_ideal(e: &RelativeIdeal) -> RelativeIdeal {
    RelativeIdeal::ring(e.parent())
        .difference(&blowup(e))
        .expect("same parent")
}

/// `E` is `I`-Ulrich: `I + E` is a translate of `E`.
pub fn is_ulrich(e: &RelativeIdeal, i: &RelativeIdeal) -> Result<bool, IdealError> {
    Ok(i.sum(e)?.translate_of(e))
}

/// Smallest `n` with `(n+1)K` a translate of `nK` for the monomial canonical
/// ideal `K`; 0 when `K` is principal.
pub fn canonical_reduction_number(s: &NumericalSemigroup) -> Result<usize, RingError> {
    let found = reduction_number(&canonical_ideal(s));
    let bound = (s.multiplicity() - 1).max(0) as usize;
    if found > bound {
        return Err(RingError::InternalBoundExceeded { found, bound });
    }
    Ok(found)
}

pub fn classify(s: &NumericalSemigroup) -> Result<ClassificationRecord, RingError> {
    let canonical_trace = canonical_ideal(s).trace();
    let conductor = conductor_ideal(s);
    Ok(ClassificationRecord {
        gorenstein: s.is_symmetric(),
        almost_gorenstein: s.is_almost_symmetric(),
        nearly_gorenstein: RelativeIdeal::maximal(s).is_subset(&canonical_trace),
        far_flung_gorenstein: canonical_trace == conductor,
        canonical_reduction_number: canonical_reduction_number(s)?,
        med: s.embedding_dimension() as i64 == s.multiplicity(),
        canonical_trace,
        conductor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    #[test]
    fn conductors() {
        let s = ns("3,5,7");
        assert_eq!(conductor_ideal(&s), RelativeIdeal::tail(&s, 5));
        assert_eq!(conductor_ideal(&s), RelativeIdeal::ring(&s).difference(&RelativeIdeal::normalization(&s)).unwrap());
        let t = ns("2,3");
        assert_eq!(conductor_ideal(&t), RelativeIdeal::tail(&t, 2));
        let n = NumericalSemigroup::naturals();
        assert_eq!(conductor_ideal(&n), RelativeIdeal::ring(&n));
    }

    #[test]
    fn blowups() {
        let s = ns("3,5,7");
        let k = canonical_ideal(&s);
        assert_eq!(blowup(&k).to_string(), "{0}∪[2,∞)");
        assert_eq!(blowup(&RelativeIdeal::ring(&s)), RelativeIdeal::ring(&s));
        for t in ["2,3", "3,5,7", "5,6,7"] {
            let t = ns(t);
            let n = RelativeIdeal::normalization(&t);
            assert_eq!(blowup(&n), n);
        }
    }

    #[test]
    fn b_ideals() {
        let s = ns("3,5,7");
        assert_eq!(b_ideal(&canonical_ideal(&s)).to_string(), "{3}∪[5,∞)");
        assert_eq!(b_ideal(&RelativeIdeal::ring(&s)), RelativeIdeal::ring(&s));
        assert_eq!(b_ideal(&RelativeIdeal::normalization(&s)), RelativeIdeal::tail(&s, 5));
    }

    #[test]
    fn ulrich_examples() {
        let s = ns("3,5,7");
        let m = RelativeIdeal::maximal(&s);
        assert!(is_ulrich(&m, &canonical_ideal(&s)).unwrap());
        let t = ns("5,6,7");
        let mt = RelativeIdeal::maximal(&t);
        let kt = canonical_ideal(&t);
        assert!(!is_ulrich(&mt, &kt).unwrap());
        assert!(kt.sum(&mt).unwrap().contains(8));
        assert!(is_ulrich(&kt, &RelativeIdeal::ring(&t)).unwrap());
        assert_eq!(is_ulrich(&m, &kt), Err(IdealError::ParentMismatch));
    }

    #[test]
    fn canonical_reduction_numbers() {
        assert_eq!(canonical_reduction_number(&ns("2,3")), Ok(0));
        assert_eq!(canonical_reduction_number(&ns("3,5,7")), Ok(2));
        assert_eq!(canonical_reduction_number(&ns("3,4,5")), Ok(2));
        assert_eq!(canonical_reduction_number(&NumericalSemigroup::naturals()), Ok(0));
    }

    #[test]
    fn classifications() {
        let c = classify(&ns("3,5,7")).unwrap();
        assert!(!c.gorenstein && c.almost_gorenstein && c.nearly_gorenstein && !c.far_flung_gorenstein);
        assert_eq!(c.canonical_reduction_number, 2);
        assert!(c.med);
        assert_eq!(c.canonical_trace.to_string(), "{3}∪[5,∞)");

        let c = classify(&ns("2,3")).unwrap();
        assert!(c.gorenstein && !c.far_flung_gorenstein);
        assert_eq!(c.canonical_reduction_number, 0);

        let n = NumericalSemigroup::naturals();
        let c = classify(&n).unwrap();
        assert!(c.gorenstein);
        assert_eq!(c.conductor, RelativeIdeal::ring(&n));
    }
}
