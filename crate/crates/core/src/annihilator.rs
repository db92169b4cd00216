//! Stable annihilators of rank-one modules and certified cohomology
//! annihilators.
//!
//! For a monomial ideal `E`, `End(E)` is the overring `E - E` and the maps
//! factoring through a free module are the sums of compositions
//! `E → R → E`, which span `E + (S - E)`. The stable annihilator is therefore
//! the colon `(E + (S - E)) - (E - E)`. An independent pointwise evaluation
//! of the same definition is kept alongside for cross-checking.

use serde::Serialize;

use crate::classes::{enumerate_ideal_classes, IdealClassList};
use crate::ideal::RelativeIdeal;
use crate::ring::conductor_ideal;
use crate::semigroup::NumericalSemigroup;

/// Annihilator of the stable endomorphism module of `e`, as an ideal of `S`.
pub fn stable_annihilator(e: &RelativeIdeal) -> RelativeIdeal {
    let endo = e.difference(e).expect("same parent");
    e.trace().difference(&endo).expect("same parent")
}

/// The stable annihilator evaluated from its definition: `r ∈ S` belongs iff
/// for every endomorphism `t^z` (`z + E ⊆ E`) the map `t^(r+z)` is a sum of
/// compositions `t^v ∘ t^u` with `u + E ⊆ S` and `v ∈ E`.
///
/// Everything is evaluated point by point on explicit integer ranges; no
/// colon or sumset routine is used.
pub fn stable_annihilator_by_factorization(e: &RelativeIdeal) -> RelativeIdeal {
    let s = e.parent();
    let f = s.frobenius().max(0);
    let lo = e.min();
    // A degree shift maps E into an ideal iff it does so on [min E, min E + F]:
    // beyond that E is min E + S.
    let maps_into = |z: i64, target: &dyn Fn(i64) -> bool| {
        (lo..=lo + f).all(|x| !e.contains(x) || target(x + z))
    };
    let horizon = 3 * f + 6;
    let endo: Vec<i64> = (0..=horizon)
        .filter(|&z| maps_into(z, &|y| e.contains(y)))
        .collect();
    let to_ring = |u: i64| u >= -lo && maps_into(u, &|y| s.contains(y));
    let factoring = |w: i64| (-lo..=w - lo).any(|u| to_ring(u) && e.contains(w - u));
    RelativeIdeal::from_predicate(s, 0, |r| {
        s.contains(r) && endo.iter().all(|&z| factoring(r + z))
    })
}

/// Intersection of the stable annihilators of all ideal classes of `s`.
pub fn category_annihilator(s: &NumericalSemigroup) -> RelativeIdeal {
    category_annihilator_of(&enumerate_ideal_classes(s))
}

pub fn category_annihilator_of(classes: &IdealClassList) -> RelativeIdeal {
    classes
        .iter()
        .map(stable_annihilator)
        .reduce(|a, b| a.intersection(&b).expect("same parent"))
        .expect("the ring itself is always a class")
}

/// Result of the duality-closure test on reflexive rank-one classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityClosure {
    pub closed: bool,
    /// First non-principal reflexive class (in enumeration order) whose
    /// canonical dual is not reflexive.
    pub witness: Option<RelativeIdeal>,
}

/// Whether every non-principal reflexive class has a reflexive canonical dual.
pub fn duality_closure_shadow(s: &NumericalSemigroup) -> DualityClosure {
    duality_closure_of(&enumerate_ideal_classes(s))
}

pub fn duality_closure_of(classes: &IdealClassList) -> DualityClosure {
    let witness = classes
        .iter()
        .find(|e| !e.is_principal() && e.is_reflexive() && !e.canonical_dual().is_reflexive())
        .cloned();
    DualityClosure {
        closed: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaStatus {
    ExactRegular,
    ExactGorenstein,
    ExactAlmostGorenstein,
    Interval,
}

/// Facts a certificate relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Justification {
    /// Finite global dimension: `ca(R) = R` for the regular ring.
    FiniteGlobalDimension,
    /// `ca = conductor` for analytically unramified one-dimensional Gorenstein rings.
    GorensteinConductor,
    /// `ca = conductor` for one-dimensional almost Gorenstein rings.
    TheoremB,
    /// Closure of reflexive classes under the canonical dual, verified on
    /// rank-one monomial classes only.
    TheoremAShadow,
    /// The conductor annihilates `Ext¹` between maximal Cohen-Macaulay modules.
    WangConductor,
    /// The stable annihilator of the normalization is the conductor.
    ConductorStableAnnihilator,
    /// `ca ⊆ m` for a singular local ring.
    SingularUpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CaValue {
    Exact(RelativeIdeal),
    Interval {
        lower: RelativeIdeal,
        upper: RelativeIdeal,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaCertificate {
    pub semigroup: NumericalSemigroup,
    pub status: CaStatus,
    pub value: CaValue,
    pub conductor: RelativeIdeal,
    pub category_annihilator_shadow: RelativeIdeal,
    pub duality_closure: DualityClosure,
    /// `conductor ⊆ category_annihilator_shadow`, checked on this semigroup.
    pub wang_verified: bool,
    pub justification: Vec<Justification>,
}

impl CaCertificate {
    pub fn lower(&self) -> &RelativeIdeal {
        match &self.value {
            CaValue::Exact(v) => v,
            CaValue::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> &RelativeIdeal {
        match &self.value {
            CaValue::Exact(v) => v,
            CaValue::Interval { upper, .. } => upper,
        }
    }

    /// Flat JSON: `{"semigroup", "status", "value" | "lower"/"upper", ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "semigroup": self.semigroup,
            "status": self.status,
        });
        let map = obj.as_object_mut().unwrap();
        match &self.value {
            CaValue::Exact(v) => {
                map.insert("value".into(), serde_json::json!(v));
                map.insert("value_generators".into(), serde_json::json!(v.minimal_generators()));
            }
            CaValue::Interval { lower, upper } => {
                map.insert("lower".into(), serde_json::json!(lower));
                map.insert("upper".into(), serde_json::json!(upper));
            }
        }
        map.insert("conductor".into(), serde_json::json!(self.conductor));
        map.insert(
            "category_annihilator_shadow".into(),
            serde_json::json!(self.category_annihilator_shadow),
        );
        map.insert("duality_closure".into(), serde_json::json!(self.duality_closure.closed));
        map.insert("duality_witness".into(), serde_json::json!(self.duality_closure.witness));
        map.insert("wang_verified".into(), serde_json::json!(self.wang_verified));
        map.insert("justification".into(), serde_json::json!(self.justification));
        obj
    }
}

pub fn certify_cohomology_annihilator(s: &NumericalSemigroup) -> CaCertificate {
    let classes = enumerate_ideal_classes(s);
    let conductor = conductor_ideal(s);
    let shadow = category_annihilator_of(&classes);
    let duality_closure = duality_closure_of(&classes);
    let wang_verified = conductor.is_subset(&shadow);
    let conductor_identity = stable_annihilator(&RelativeIdeal::normalization(s)) == conductor;

    let mut justification = Vec::new();
    let (status, value) = if s.is_naturals() {
        justification.push(Justification::FiniteGlobalDimension);
        (CaStatus::ExactRegular, CaValue::Exact(RelativeIdeal::ring(s)))
    } else {
        let status = if s.is_symmetric() {
            justification.push(Justification::GorensteinConductor);
            CaStatus::ExactGorenstein
        } else if s.is_almost_symmetric() {
            justification.push(Justification::TheoremB);
            CaStatus::ExactAlmostGorenstein
        } else {
            CaStatus::Interval
        };
        if wang_verified {
            justification.push(Justification::WangConductor);
        }
        if conductor_identity {
            justification.push(Justification::ConductorStableAnnihilator);
        }
        if status == CaStatus::Interval {
            justification.push(Justification::SingularUpperBound);
            if duality_closure.closed {
                justification.push(Justification::TheoremAShadow);
            }
            let upper = RelativeIdeal::maximal(s);
            debug_assert!(conductor.is_subset(&upper));
            (
                status,
                CaValue::Interval {
                    lower: conductor.clone(),
                    upper,
                },
            )
        } else {
            (status, CaValue::Exact(conductor.clone()))
        }
    };

    CaCertificate {
        semigroup: s.clone(),
        status,
        value,
        conductor,
        category_annihilator_shadow: shadow,
        duality_closure,
        wang_verified,
        justification,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::canonical_ideal;

    fn ns(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    #[test]
    fn stable_annihilator_examples() {
        let s = ns("3,5,7");
        assert_eq!(stable_annihilator(&RelativeIdeal::ring(&s)), RelativeIdeal::ring(&s));
        assert_eq!(
            stable_annihilator(&RelativeIdeal::normalization(&s)),
            RelativeIdeal::tail(&s, 5)
        );
        let t = ns("2,3");
        assert_eq!(stable_annihilator(&RelativeIdeal::maximal(&t)), RelativeIdeal::tail(&t, 2));
    }

    #[test]
    fn factorization_route_agrees_on_small_semigroups() {
        for s in crate::tree::enumerate_up_to_genus(5) {
            for e in enumerate_ideal_classes(&s).iter() {
                for shift in [0, 3, -4] {
                    let e = e.translate(shift);
                    assert_eq!(
                        stable_annihilator_by_factorization(&e),
                        stable_annihilator(&e),
                        "{e:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn category_annihilators() {
        let s = ns("3,5,7");
        assert_eq!(category_annihilator(&s), RelativeIdeal::tail(&s, 5));
        let t = ns("2,3");
        assert_eq!(category_annihilator(&t), RelativeIdeal::tail(&t, 2));
        let n = NumericalSemigroup::naturals();
        assert_eq!(category_annihilator(&n), RelativeIdeal::ring(&n));
    }

    #[test]
    fn duality_closure_examples() {
        assert!(duality_closure_shadow(&ns("2,3")).closed);
        assert!(duality_closure_shadow(&ns("3,5,7")).closed);
        let c = duality_closure_shadow(&ns("4,7,9,10"));
        assert!(!c.closed);
        let w = c.witness.unwrap();
        assert!(w.is_reflexive() && !w.canonical_dual().is_reflexive());
    }

    #[test]
    fn certificates() {
        let s = ns("3,5,7");
        let c = certify_cohomology_annihilator(&s);
        assert_eq!(c.status, CaStatus::ExactAlmostGorenstein);
        assert_eq!(c.value, CaValue::Exact(RelativeIdeal::tail(&s, 5)));
        assert_eq!(c.lower().minimal_generators(), vec![5, 6, 7]);
        assert!(c.justification.contains(&Justification::TheoremB));

        let t = ns("2,3");
        let c = certify_cohomology_annihilator(&t);
        assert_eq!(c.status, CaStatus::ExactGorenstein);
        assert_eq!(c.value, CaValue::Exact(RelativeIdeal::tail(&t, 2)));

        let u = ns("5,6,7");
        let c = certify_cohomology_annihilator(&u);
        assert_eq!(c.status, CaStatus::Interval);
        assert_eq!(c.lower(), &RelativeIdeal::tail(&u, 10));
        assert_eq!(c.upper(), &RelativeIdeal::maximal(&u));

        let n = NumericalSemigroup::naturals();
        let c = certify_cohomology_annihilator(&n);
        assert_eq!(c.status, CaStatus::ExactRegular);
        assert_eq!(c.value, CaValue::Exact(RelativeIdeal::ring(&n)));
    }

    #[test]
    fn certificate_json_shape() {
        let json = certify_cohomology_annihilator(&ns("3,5,7")).to_json();
        assert_eq!(json["semigroup"], "3,5,7");
        assert_eq!(json["status"], "ExactAlmostGorenstein");
        assert_eq!(json["value"], "[5,∞)");
        assert_eq!(json["value_generators"], serde_json::json!([5, 6, 7]));
        assert_eq!(json["duality_closure"], true);
        let json = certify_cohomology_annihilator(&ns("5,6,7")).to_json();
        assert_eq!(json["lower"], "[10,∞)");
        assert!(json.get("value").is_none());
    }

    #[test]
    fn canonical_dual_of_maximal_ideal_in_med_case() {
        let s = ns("3,4,5");
        let dm = RelativeIdeal::maximal(&s).canonical_dual();
        assert_eq!(dm, RelativeIdeal::normalization(&s));
        assert_eq!(stable_annihilator(&dm), RelativeIdeal::maximal(&s));
        let _ = canonical_ideal(&s);
    }
}
