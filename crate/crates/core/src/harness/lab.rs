use crate::annihilator::stable_annihilator;
use crate::classes::{enumerate_ideal_classes, IdealClassList};
use crate::ideal::{canonical_ideal, RelativeIdeal};
use crate::ring::{canonical_reduction_number, conductor_ideal, RingError};
use crate::semigroup::{InvariantRecord, NumericalSemigroup};

/// Per-class data shared by the suites.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub ideal: RelativeIdeal,
    pub principal: bool,
    pub generators: Vec<i64>,
    pub reflexive: bool,
    pub ring_dual: RelativeIdeal,
    pub dual: RelativeIdeal,
    pub dual_reflexive: bool,
    pub trace: RelativeIdeal,
    pub annihilator: RelativeIdeal,
}

/// Everything the suites need about one semigroup, computed once.
#[derive(Debug, Clone)]
pub struct Lab {
    pub semigroup: NumericalSemigroup,
    pub invariants: InvariantRecord,
    pub classes: IdealClassList,
    pub data: Vec<ClassData>,
    pub ring: RelativeIdeal,
    pub canonical: RelativeIdeal,
    pub maximal: RelativeIdeal,
    pub normalization: RelativeIdeal,
    pub conductor: RelativeIdeal,
    pub canonical_trace: RelativeIdeal,
    pub canred: Result<usize, RingError>,
}

impl Lab {
    pub fn new(s: &NumericalSemigroup) -> Self {
        let classes = enumerate_ideal_classes(s);
        let data = classes
            .iter()
            .map(|e| {
                let dual = e.canonical_dual();
                let ring_dual = e.ring_dual();
                ClassData {
                    principal: e.is_principal(),
                    generators: e.minimal_generators(),
                    reflexive: e.is_reflexive(),
                    dual_reflexive: dual.is_reflexive(),
                    trace: e.trace(),
                    annihilator: stable_annihilator(e),
                    ideal: e.clone(),
                    ring_dual,
                    dual,
                }
            })
            .collect();
        let canonical = canonical_ideal(s);
        Lab {
            invariants: s.invariants(),
            classes,
            data,
            ring: RelativeIdeal::ring(s),
            canonical_trace: canonical.trace(),
            canonical,
            maximal: RelativeIdeal::maximal(s),
            normalization: RelativeIdeal::normalization(s),
            conductor: conductor_ideal(s),
            canred: canonical_reduction_number(s),
            semigroup: s.clone(),
        }
    }

    pub fn canred(&self) -> Option<usize> {
        self.canred.as_ref().ok().copied()
    }
}
