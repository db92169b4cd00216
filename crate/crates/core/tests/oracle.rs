//! The ideal calculus against a naive model: members below an explicit tail
//! kept in a `BTreeSet`, every operation evaluated point by point.

use std::collections::BTreeSet;

use monocurve::{canonical_ideal, stable_annihilator, NumericalSemigroup, RelativeIdeal};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct Model {
    tail: i64,
    below: BTreeSet<i64>,
}

impl Model {
    fn from_pred(lo: i64, tail: i64, pred: impl Fn(i64) -> bool) -> Model {
        Model {
            tail,
            below: (lo..tail).filter(|&z| pred(z)).collect(),
        }
    }

    fn contains(&self, z: i64) -> bool {
        z >= self.tail || self.below.contains(&z)
    }

    fn min(&self) -> i64 {
        self.below.first().copied().unwrap_or(self.tail)
    }
}

struct Semi {
    gens: Vec<i64>,
    members: Vec<bool>,
    tail: i64,
}

impl Semi {
    fn new(gens: &[i64]) -> Semi {
        let top = gens.iter().max().unwrap();
        let len = (top * top + top + 2) as usize;
        let mut members = vec![false; len];
        members[0] = true;
        for z in 1..len {
            members[z] = gens.iter().any(|&g| z as i64 >= g && members[z - g as usize]);
        }
        let tail = (0..len).rev().find(|&z| !members[z]).map_or(0, |f| f as i64 + 1);
        Semi {
            gens: gens.to_vec(),
            members,
            tail,
        }
    }

    fn contains(&self, z: i64) -> bool {
        z >= self.tail || (z >= 0 && self.members[z as usize])
    }

    fn ring(&self) -> Model {
        Model::from_pred(0, self.tail, |z| self.contains(z))
    }

    fn ideal(&self, gens: &[i64]) -> Model {
        let lo = *gens.iter().min().unwrap();
        Model::from_pred(lo, lo + self.tail, |z| gens.iter().any(|&g| self.contains(z - g)))
    }

    fn canonical(&self) -> Model {
        let f = self.tail - 1;
        Model::from_pred(0, f + 1, |x| !self.contains(f - x))
    }
}

fn sum(a: &Model, b: &Model) -> Model {
    let (ma, mb) = (a.min(), b.min());
    let tail = (a.tail + mb).min(b.tail + ma);
    Model::from_pred(ma + mb, tail, |z| (ma..=z - mb).any(|x| a.contains(x) && b.contains(z - x)))
}

/// `a - b = {z : z + b ⊆ a}`.
fn colon(a: &Model, b: &Model) -> Model {
    let (ma, mb) = (a.min(), b.min());
    Model::from_pred(ma - mb, a.tail - mb, |z| {
        (mb..=b.tail.max(a.tail - z)).all(|y| !b.contains(y) || a.contains(z + y))
    })
}

fn same(lib: &RelativeIdeal, model: &Model) -> Result<(), TestCaseError> {
    prop_assert_eq!(lib.min(), model.min(), "min of {} vs {:?}", lib, model);
    let lo = lib.min().min(model.min()) - 3;
    let hi = lib.tail_start().max(model.tail) + 3;
    for z in lo..=hi {
        prop_assert_eq!(lib.contains(z), model.contains(z), "degree {} of {} vs {:?}", z, lib, model);
    }
    Ok(())
}

fn generators() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=11, 1..=4)
        .prop_filter("gcd 1", |g| g.iter().fold(0, |a, &b| num_gcd(a, b)) == 1)
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn ideal_generators() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=14, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn semigroup_membership(gens in generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = Semi::new(&gens);
        prop_assert_eq!(s.frobenius(), m.tail - 1);
        for z in -2..m.tail + 12 {
            prop_assert_eq!(s.contains(z), m.contains(z));
        }
        let gaps: Vec<i64> = (0..m.tail).filter(|&z| !m.contains(z)).collect();
        prop_assert_eq!(s.gaps(), gaps.as_slice());
        for &g in s.generators() {
            prop_assert!(m.gens.contains(&g));
        }
    }

    #[test]
    fn ideal_operations(gens in generators(), a in ideal_generators(), b in ideal_generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = Semi::new(&gens);
        let (e, f) = (RelativeIdeal::from_generators(&s, &a).unwrap(), RelativeIdeal::from_generators(&s, &b).unwrap());
        let (me, mf) = (m.ideal(&a), m.ideal(&b));
        same(&e, &me)?;
        same(&e.sum(&f).unwrap(), &sum(&me, &mf))?;
        same(&e.difference(&f).unwrap(), &colon(&me, &mf))?;
        same(&e.ring_dual(), &colon(&m.ring(), &me))?;
        same(&e.canonical_dual(), &colon(&m.canonical(), &me))?;
        same(&e.trace(), &sum(&me, &colon(&m.ring(), &me)))?;
    }

    #[test]
    fn stable_annihilator_and_reflexivity(gens in generators(), a in ideal_generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = Semi::new(&gens);
        let e = RelativeIdeal::from_generators(&s, &a).unwrap();
        let me = m.ideal(&a);
        let tr = sum(&me, &colon(&m.ring(), &me));
        same(&stable_annihilator(&e), &colon(&tr, &colon(&me, &me)))?;
        let bidual = colon(&m.ring(), &colon(&m.ring(), &me));
        let equal = (me.min() - 2..=me.tail.max(bidual.tail) + 2).all(|z| me.contains(z) == bidual.contains(z));
        prop_assert_eq!(e.is_reflexive(), equal);
        same(&canonical_ideal(&s), &m.canonical())?;
    }

    #[test]
    fn two_generated_syzygy(gens in generators(), a in -5i64..10, d in 1i64..12) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = Semi::new(&gens);
        let e = RelativeIdeal::from_generators(&s, &[a, a + d]).unwrap();
        let mingens = e.minimal_generators();
        prop_assume!(mingens.len() == 2);
        let shift = mingens[1] - mingens[0];
        let kernel = Model::from_pred(0, m.tail, |z| m.contains(z) && m.contains(z + shift));
        let offset = kernel.min();
        let normal = Model::from_pred(0, kernel.tail - offset, |z| kernel.contains(z + offset));
        same(&e.syzygy_two_generated().unwrap(), &normal)?;
    }
}

#[test]
fn model_sanity() {
    let m = Semi::new(&[3, 5, 7]);
    assert_eq!(m.tail, 5);
    let k = m.canonical();
    assert_eq!(k.below, BTreeSet::from([0, 2, 3]));
    let tr = sum(&k, &colon(&m.ring(), &k));
    assert_eq!((tr.tail, tr.below.clone()), (5, BTreeSet::from([3])));
}
