use std::collections::BTreeSet;

use num_integer::Integer;

use super::{Findings, Lab, Suite};
use crate::annihilator::{
    category_annihilator_of, duality_closure_of, stable_annihilator,
    stable_annihilator_by_factorization,
};
use crate::ideal::{IdealError, RelativeIdeal};
use crate::ring::{b_ideal, blowup, is_ulrich};
use crate::tree::{enumerate_by_gap_sets, enumerate_by_genus};

/// Above this many classes the third ideal of a colon-adjunction triple is
/// drawn from an evenly spaced sample of this many classes, at offset 0.
/// Principal third ideals are always exhaustive.
const FULL_TRIPLES_MAX_CLASSES: usize = 64;
const SAMPLED_THIRD_IDEALS: usize = 16;

/// Largest genus for the brute-force enumeration cross-check.
const BRUTE_FORCE_GENUS_MAX: usize = 6;

pub(super) fn run(suite: Suite, lab: &Lab, f: &mut Findings) {
    match suite {
        Suite::SemigroupFacts => semigroup_facts(lab, f),
        Suite::ColonAdjunction => colon_adjunction(lab, f),
        Suite::Biduality => biduality(lab, f),
        Suite::SyzygyExactness => syzygy_exactness(lab, f),
        Suite::TraceFacts => trace_facts(lab, f),
        Suite::ConductorStableAnn => conductor_stable_ann(lab, f),
        Suite::WangLowerBound => wang_lower_bound(lab, f),
        Suite::LemmaChain => annihilator_chain(lab, f),
        Suite::PropSyzygyStability => prop_syzygy_stability(lab, f),
        Suite::CocohomDuality => cocohom_duality(lab, f),
        Suite::TraceContainment => trace_containment(lab, f),
        Suite::TraceCriterion => trace_criterion(lab, f),
        Suite::UlrichFacts => ulrich_facts(lab, f),
        Suite::CanredFacts => canred_facts(lab, f),
        Suite::AgClosure => ag_closure(lab, f),
        Suite::TheoremB => category_is_conductor(lab, f),
        Suite::MedShadow => med_shadow(lab, f),
        Suite::FarFlung => far_flung(lab, f),
        Suite::Multiplicity3 => multiplicity3(lab, f),
    }
}

fn sum(a: &RelativeIdeal, b: &RelativeIdeal) -> RelativeIdeal {
    a.sum(b).expect("same parent")
}

fn colon(a: &RelativeIdeal, b: &RelativeIdeal) -> RelativeIdeal {
    a.difference(b).expect("same parent")
}

fn translate_of(a: &RelativeIdeal, b: &RelativeIdeal) -> bool {
    a.is_translate(b).expect("same parent").is_some()
}

/// Tree enumeration against the brute-force gap-set filter.
pub(super) fn enumeration_cross_check(genus_max: usize, f: &mut Findings) {
    for g in 0..=genus_max.min(BRUTE_FORCE_GENUS_MAX) {
        let tree: BTreeSet<Vec<i64>> = enumerate_by_genus(g).iter().map(|s| s.gaps().to_vec()).collect();
        let brute: BTreeSet<Vec<i64>> = enumerate_by_gap_sets(g).into_iter().collect();
        let listed = enumerate_by_genus(g).len();
        f.check("enumerationMatchesBruteForce", tree == brute && listed == tree.len(), &[], || {
            format!("genus {g}: tree gives {listed} semigroups, brute force {}", brute.len())
        });
    }
}

fn semigroup_facts(lab: &Lab, f: &mut Findings) {
    let s = &lab.semigroup;
    let fr = s.frobenius();
    let inv = &lab.invariants;

    let members: Vec<i64> = (0..=2 * fr + 2).filter(|&z| s.contains(z)).collect();
    let closure_failure = members
        .iter()
        .flat_map(|&a| members.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| !s.contains(a + b));
    f.check("additiveClosure", closure_failure.is_none(), &[], || {
        let (a, b) = closure_failure.unwrap();
        format!("{a} and {b} are members but {} is not", a + b)
    });

    let gens = s.generators();
    let gcd = gens.iter().fold(0i64, |g, &x| g.gcd(&x));
    f.check("generatorGcd", gcd == 1, &[], || format!("gcd = {gcd}"));
    let decomposable = gens.iter().copied().find(|&x| {
        (1..x).any(|a| s.contains(a) && s.contains(x - a))
    });
    f.check("generatorsMinimal", decomposable.is_none(), &[], || {
        format!("generator {} is a sum of nonzero members", decomposable.unwrap())
    });
    let max_gap = s.gaps().last().copied().unwrap_or(-1);
    let tail_ok = (fr + 1..=fr + 1 + s.multiplicity()).all(|z| s.contains(z)) && !s.contains(fr);
    f.check("frobeniusIsMaxGap", max_gap == fr && tail_ok, &[], || {
        format!("frobenius {fr}, largest gap {max_gap}")
    });

    let xor = (-1..=fr + 1).all(|z| s.contains(z) != s.contains(fr - z));
    f.check("symmetricXor", inv.symmetric == xor, &[], || {
        format!("symmetric = {}, membership xor reflection = {xor}", inv.symmetric)
    });
    let by_genus = 2 * inv.genus as i64 == fr + 1;
    f.check("symmetricGenus", inv.symmetric == by_genus, &[], || {
        format!("symmetric = {}, 2g = F + 1 is {by_genus}", inv.symmetric)
    });
    f.check("symmetricType", inv.symmetric == (inv.cm_type == 1), &[], || {
        format!("symmetric = {}, type = {}", inv.symmetric, inv.cm_type)
    });
    f.check("symmetricImpliesAlmost", !inv.symmetric || inv.almost_symmetric, &[], || {
        "symmetric but not almost symmetric".into()
    });
    let ed = inv.embedding_dimension as i64;
    f.check("medDefinition", inv.med == (ed == inv.multiplicity), &[], || {
        format!("med = {}, e = {}, ν = {ed}", inv.med, inv.multiplicity)
    });
    f.check("embeddingDimensionBound", ed <= inv.multiplicity, &[], || {
        format!("ν = {ed} > e = {}", inv.multiplicity)
    });
    f.check(
        "medType",
        !(inv.med && inv.multiplicity >= 2) || inv.cm_type as i64 == inv.multiplicity - 1,
        &[],
        || format!("med with e = {} but type {}", inv.multiplicity, inv.cm_type),
    );

    for &n in gens {
        let ap = s.apery_set(n).expect("generators are members");
        let max = ap.iter().copied().max().unwrap_or(i64::MIN);
        f.check("aperySize", ap.len() as i64 == n, &[], || format!("|Ap(S, {n})| = {}", ap.len()));
        f.check("aperyMax", max == fr + n, &[], || format!("max Ap(S, {n}) = {max}, F + n = {}", fr + n));
    }

    // Class list invariants.
    let classes = lab.classes.classes();
    f.check("classesContainRing", classes.first() == Some(&lab.ring), &[], || {
        "first class is not S".into()
    });
    f.check("classesContainNormalization", classes.last() == Some(&lab.normalization), &[], || {
        "last class is not ℕ".into()
    });
    let distinct: BTreeSet<String> = classes.iter().map(|e| e.to_string()).collect();
    f.check("classesDistinct", distinct.len() == classes.len(), &[], || {
        format!("{} classes, {} distinct", classes.len(), distinct.len())
    });
    for e in classes {
        f.check("classNormalized", e.is_normalized() && e.contains(0), &[e], || {
            format!("min = {}", e.min())
        });
        let open = (0..=fr + 1).find(|&x| e.contains(x) && gens.iter().any(|&g| !e.contains(x + g)));
        f.check("classIsIdeal", open.is_none(), &[e], || {
            format!("{} ∈ E but E + S ⊄ E", open.unwrap())
        });
    }
}

fn colon_adjunction(lab: &Lab, f: &mut Findings) {
    let s = &lab.semigroup;
    let classes = lab.classes.classes();
    let full = classes.len() <= FULL_TRIPLES_MAX_CLASSES;
    let offsets: &[i64] = if full { &[-1, 0, 1] } else { &[0] };
    let step = if full { 1 } else { classes.len().div_ceil(SAMPLED_THIRD_IDEALS) };
    for e in classes {
        for g in classes {
            let d = colon(e, g);
            let back = sum(&d, g);
            f.check("colonTimesDivisor", back.is_subset(e), &[e, g], || {
                format!("(E - F) + F = {back} ⊄ E")
            });
            let lo = d.min();
            for z in lo - 2..=lo + s.frobenius() + 3 {
                let p = RelativeIdeal::principal(s, z);
                let left = d.contains(z);
                let right = g.translate(z).is_subset(e);
                f.check("principalAdjunction", left == right, &[e, g, &p], || {
                    format!("z = {z}: z ∈ E - F is {left}, z + F ⊆ E is {right}; E - F = {d}")
                });
            }
            for h in classes.iter().step_by(step) {
                for &t in offsets {
                    let h = h.translate(lo + t);
                    let left = h.is_subset(&d);
                    let right = sum(&h, g).is_subset(e);
                    f.check("adjunction", left == right, &[e, g, &h], || {
                        format!("G ⊆ E - F is {left}, G + F ⊆ E is {right}; E - F = {d}")
                    });
                }
            }
        }
    }
}

fn biduality(lab: &Lab, f: &mut Findings) {
    for c in &lab.data {
        let e = &c.ideal;
        let dd = c.dual.canonical_dual();
        f.check("canonicalBiduality", translate_of(&dd, e), &[e], || {
            format!("D(D(E)) = {dd}, E = {e}")
        });
        let rr = c.ring_dual.ring_dual();
        f.check("ringBidualContains", e.is_subset(&rr), &[e], || {
            format!("E = {e} ⊄ S - (S - E) = {rr}")
        });
        f.check("reflexiveIffBidualEqual", (rr == *e) == c.reflexive, &[e], || {
            format!("S - (S - E) = {rr}, E = {e}, reflexive = {}", c.reflexive)
        });
    }
    let dk = lab.canonical.canonical_dual();
    f.check("dualOfCanonical", translate_of(&dk, &lab.ring), &[&lab.canonical], || {
        format!("D(K) = {dk}")
    });
    let ds = lab.ring.canonical_dual();
    f.check("dualOfRing", translate_of(&ds, &lab.canonical), &[&lab.ring], || {
        format!("D(S) = {ds}, K = {}", lab.canonical)
    });
}

fn syzygy_exactness(lab: &Lab, f: &mut Findings) {
    for c in &lab.data {
        let e = &c.ideal;
        if c.generators.len() != 2 {
            let refused = matches!(e.syzygy_kernel(), Err(IdealError::NotTwoGenerated(_)));
            f.check("notTwoGeneratedRefused", refused, &[e], || {
                format!("{} generators but a syzygy was produced", c.generators.len())
            });
            continue;
        }
        let syz = e.syzygy_kernel().expect("two generators");
        let defect = syz.exactness_defect(e);
        f.check("perDegreeExactness", defect.is_none(), &[e], || {
            format!("degree {}: kernel {}", defect.unwrap(), syz.kernel)
        });
        let omega = e.syzygy_two_generated().expect("two generators");
        let (normal, _) = syz.kernel.normalize();
        f.check("normalizedSyzygy", omega == normal, &[e], || {
            format!("syzygy {omega}, normalized kernel {normal}")
        });
    }
}

fn trace_facts(lab: &Lab, f: &mut Findings) {
    let s = &lab.semigroup;
    let shifts = [-(s.frobenius() + 1), -1, 1, s.multiplicity()];
    for c in &lab.data {
        let e = &c.ideal;
        for x in shifts {
            let t = e.translate(x).trace();
            f.check("translationInvariant", t == c.trace, &[e], || {
                format!("tr({x} + E) = {t}, tr(E) = {}", c.trace)
            });
        }
        f.check("traceInRing", c.trace.is_subset(&lab.ring), &[e], || {
            format!("tr(E) = {}", c.trace)
        });
        f.check("traceIsRingIffPrincipal", (c.trace == lab.ring) == c.principal, &[e], || {
            format!("tr(E) = {}, principal = {}", c.trace, c.principal)
        });
        for shift in [0, 1, s.multiplicity() + 1] {
            let two = sum(e, &e.translate(shift));
            let three = sum(&two, e);
            for g in [&two, &three] {
                let t = g.trace();
                f.check("generatedTraceContained", t.is_subset(&c.trace), &[e, g], || {
                    format!("tr(F) = {t} ⊄ tr(E) = {}", c.trace)
                });
            }
        }
    }
}

fn conductor_stable_ann(lab: &Lab, f: &mut Findings) {
    let n = stable_annihilator(&lab.normalization);
    f.check("normalizationAnnihilator", n == lab.conductor, &[&lab.normalization], || {
        format!("ann(ℕ) = {n}, conductor = {}", lab.conductor)
    });
    let colon_form = colon(&lab.ring, &lab.normalization);
    f.check("conductorIsColon", colon_form == lab.conductor, &[], || {
        format!("S - ℕ = {colon_form}, conductor = {}", lab.conductor)
    });
    for c in &lab.data {
        let e = &c.ideal;
        let direct = stable_annihilator_by_factorization(e);
        f.check("formulaMatchesDefinition", direct == c.annihilator, &[e], || {
            format!("formula {}, pointwise {direct}", c.annihilator)
        });
        f.check("principalAnnihilatorIsRing", !c.principal || c.annihilator == lab.ring, &[e], || {
            format!("principal with ann = {}", c.annihilator)
        });
    }
}

fn wang_lower_bound(lab: &Lab, f: &mut Findings) {
    for c in &lab.data {
        f.check("conductorAnnihilates", lab.conductor.is_subset(&c.annihilator), &[&c.ideal], || {
            format!("conductor {} ⊄ ann(E) = {}", lab.conductor, c.annihilator)
        });
    }
}

/// Two-generated classes with their normalized syzygy.
fn two_generated(lab: &Lab) -> impl Iterator<Item = (&super::ClassData, RelativeIdeal)> {
    lab.data
        .iter()
        .filter(|c| c.generators.len() == 2)
        .map(|c| (c, c.ideal.syzygy_two_generated().expect("two generators")))
}

fn annihilator_chain(lab: &Lab, f: &mut Findings) {
    for (c, omega) in two_generated(lab) {
        let e = &c.ideal;
        let ann_e = &c.annihilator;
        let ann_omega = stable_annihilator(&omega);
        let ann_d_omega = stable_annihilator(&omega.canonical_dual());
        f.check("dualSyzygyBelow", ann_d_omega.is_subset(ann_e), &[e, &omega], || {
            format!("ann(DΩ) = {ann_d_omega} ⊄ ann(E) = {ann_e}")
        });
        f.check("syzygyAbove", ann_e.is_subset(&ann_omega), &[e, &omega], || {
            format!("ann(E) = {ann_e} ⊄ ann(Ω) = {ann_omega}")
        });
    }
}

fn prop_syzygy_stability(lab: &Lab, f: &mut Findings) {
    for (c, omega) in two_generated(lab) {
        if !omega.canonical_dual().is_reflexive() {
            continue;
        }
        let ann_omega = stable_annihilator(&omega);
        f.check("annihilatorStable", c.annihilator == ann_omega, &[&c.ideal, &omega], || {
            format!("ann(E) = {}, ann(Ω) = {ann_omega}", c.annihilator)
        });
    }
}

fn cocohom_duality(lab: &Lab, f: &mut Findings) {
    for c in lab.data.iter().filter(|c| c.reflexive && c.dual_reflexive) {
        let ann_d = stable_annihilator(&c.dual);
        f.check("dualAnnihilatorEqual", c.annihilator == ann_d, &[&c.ideal, &c.dual], || {
            format!("ann(E) = {}, ann(D(E)) = {ann_d}", c.annihilator)
        });
    }
}

fn trace_containment(lab: &Lab, f: &mut Findings) {
    for c in lab.data.iter().filter(|c| c.dual_reflexive) {
        f.check("traceInCanonicalTrace", c.trace.is_subset(&lab.canonical_trace), &[&c.ideal], || {
            format!("tr(E) = {} ⊄ tr(K) = {}", c.trace, lab.canonical_trace)
        });
    }
}

fn trace_criterion(lab: &Lab, f: &mut Findings) {
    if !lab.canred().is_some_and(|r| r <= 2) {
        return;
    }
    for c in lab.data.iter().filter(|c| c.reflexive) {
        let contained = c.trace.is_subset(&lab.canonical_trace);
        f.check("dualReflexiveIffTraceContained", c.dual_reflexive == contained, &[&c.ideal], || {
            format!(
                "D(E) reflexive = {}, tr(E) = {} ⊆ tr(K) = {} is {contained}",
                c.dual_reflexive, c.trace, lab.canonical_trace
            )
        });
    }
}

fn ulrich_facts(lab: &Lab, f: &mut Findings) {
    let k = &lab.canonical;
    let blowups: Vec<RelativeIdeal> = lab.data.iter().map(|c| blowup(&c.ideal)).collect();
    for (ci, bi) in lab.data.iter().zip(&blowups) {
        let i = &ci.ideal;
        for c in &lab.data {
            let e = &c.ideal;
            let ulrich = is_ulrich(e, i).expect("same parent");
            let stable = sum(bi, e) == *e;
            f.check("ulrichIffBlowupStable", ulrich == stable, &[e, i], || {
                format!("I-Ulrich = {ulrich}, B(I) + E = E is {stable}; B(I) = {bi}")
            });
        }
        let n_ulrich = is_ulrich(&lab.normalization, i).expect("same parent");
        f.check("normalizationUlrich", n_ulrich, &[i], || "ℕ is not I-Ulrich".into());
    }
    for i in [k, &lab.maximal] {
        for c in lab.data.iter().filter(|c| is_ulrich(&c.ideal, i).expect("same parent")) {
            for g in &lab.data {
                let h = colon(&g.ideal, &c.ideal);
                f.check("colonPreservesUlrich", is_ulrich(&h, i).expect("same parent"), &[&c.ideal, &g.ideal, i], || {
                    format!("F - E = {h} is not I-Ulrich")
                });
            }
        }
    }
    for c in &lab.data {
        let e = &c.ideal;
        let b = b_ideal(e);
        f.check("bInsideTrace", b.is_subset(&c.trace), &[e], || {
            format!("b(E) = {b} ⊄ tr(E) = {}", c.trace)
        });
        let equal = b == c.trace;
        let iso = translate_of(&c.trace, &c.ring_dual);
        f.check("bEqualsTraceIffTraceIsDual", equal == iso, &[e], || {
            format!("b(E) = {b}, tr(E) = {}, S - E = {}", c.trace, c.ring_dual)
        });
        let omega_ulrich = is_ulrich(e, k).expect("same parent");
        let duals_agree = translate_of(&c.ring_dual, &c.dual);
        f.check("omegaUlrichIffDualsAgree", omega_ulrich == duals_agree, &[e], || {
            format!("ω-Ulrich = {omega_ulrich}, S - E = {}, K - E = {}", c.ring_dual, c.dual)
        });
        f.check("omegaUlrichDualReflexive", !omega_ulrich || c.dual_reflexive, &[e], || {
            format!("ω-Ulrich but D(E) = {} is not reflexive", c.dual)
        });
    }
}

fn canred_facts(lab: &Lab, f: &mut Findings) {
    let e = lab.semigroup.multiplicity();
    let canred = match &lab.canred {
        Ok(r) => *r,
        Err(err) => {
            f.check("boundedByMultiplicity", false, &[&lab.canonical], || err.to_string());
            return;
        }
    };
    f.check("boundedByMultiplicity", canred as i64 <= (e - 1).max(0), &[&lab.canonical], || {
        format!("can.red = {canred}, e = {e}")
    });
    let gorenstein = lab.invariants.symmetric;
    f.check("gorensteinIffAtMostOne", gorenstein == (canred <= 1), &[&lab.canonical], || {
        format!("symmetric = {gorenstein}, can.red = {canred}")
    });
    let iso = translate_of(&lab.canonical_trace, &lab.canonical.ring_dual());
    f.check("atMostTwoIffTraceIsDual", (canred <= 2) == iso, &[&lab.canonical], || {
        format!(
            "can.red = {canred}, tr(K) = {}, S - K = {}",
            lab.canonical_trace,
            lab.canonical.ring_dual()
        )
    });
    let top = canred.max((e - 1).max(0) as usize);
    for n in 0..=top {
        let nk = lab.canonical.n_fold_sum(n);
        let ulrich = is_ulrich(&nk, &lab.canonical).expect("same parent");
        f.check("powersUlrichFromThreshold", ulrich == (n >= canred), &[&nk], || {
            format!("n = {n}, can.red = {canred}, nK ω-Ulrich = {ulrich}")
        });
    }
    f.check("almostSymmetricAtMostTwo", !lab.invariants.almost_symmetric || canred <= 2, &[], || {
        format!("almost symmetric with can.red = {canred}")
    });
}

fn ag_closure(lab: &Lab, f: &mut Findings) {
    let inv = &lab.invariants;
    let m_ulrich = is_ulrich(&lab.maximal, &lab.canonical).expect("same parent");
    f.check("almostSymmetricIffMaximalUlrich", inv.almost_symmetric == m_ulrich, &[&lab.maximal], || {
        format!("almost symmetric = {}, m ω-Ulrich = {m_ulrich}", inv.almost_symmetric)
    });
    let nearly = lab.maximal.is_subset(&lab.canonical_trace);
    f.check("almostImpliesNearly", !inv.almost_symmetric || nearly, &[], || {
        format!("almost symmetric but tr(K) = {}", lab.canonical_trace)
    });
    let closure = duality_closure_of(&lab.classes);
    if inv.almost_symmetric {
        for c in lab.data.iter().filter(|c| c.reflexive && !c.principal) {
            let u = is_ulrich(&c.ideal, &lab.canonical).expect("same parent");
            f.check("reflexiveAreOmegaUlrich", u, &[&c.ideal], || {
                format!("reflexive but K + E is not a translate of E; D(E) = {}", c.dual)
            });
        }
        let w: Vec<&RelativeIdeal> = closure.witness.iter().collect();
        f.check("dualityClosed", closure.closed, &w, || "D(E) not reflexive".into());
    } else if closure.closed {
        f.note(
            "dualityClosedWithoutAlmostSymmetry",
            &[],
            "every non-principal reflexive class has reflexive canonical dual".into(),
        );
    }
}

fn category_is_conductor(lab: &Lab, f: &mut Findings) {
    if !lab.invariants.almost_symmetric {
        return;
    }
    let ca = category_annihilator_of(&lab.classes);
    f.check("categoryIsConductor", ca == lab.conductor, &[], || {
        format!("category annihilator {ca}, conductor {}", lab.conductor)
    });
}

fn med_shadow(lab: &Lab, f: &mut Findings) {
    let inv = &lab.invariants;
    if !inv.med || inv.multiplicity < 2 {
        return;
    }
    let dm = lab.maximal.canonical_dual();
    let ann = stable_annihilator(&dm);
    let equal = ann == lab.maximal;
    let closure = duality_closure_of(&lab.classes);
    if inv.almost_symmetric {
        f.check("dualMaximalAnnihilator", equal, &[&dm], || {
            format!("ann(D(m)) = {ann}, m = {}", lab.maximal)
        });
        let w: Vec<&RelativeIdeal> = closure.witness.iter().collect();
        f.check("dualityClosed", closure.closed, &w, || "D(E) not reflexive".into());
    } else {
        if equal {
            f.note("converseAnnihilator", &[&dm], format!("ann(D(m)) = m = {ann} without almost symmetry"));
        }
        if closure.closed {
            f.note("converseClosure", &[], "duality closed without almost symmetry".into());
        }
    }
}

fn far_flung(lab: &Lab, f: &mut Findings) {
    let b = b_ideal(&lab.canonical);
    let chain = lab.conductor.is_subset(&b) && b.is_subset(&lab.canonical_trace);
    f.check("conductorInsideBInsideTrace", chain, &[&lab.canonical], || {
        format!("conductor {}, b(K) = {b}, tr(K) = {}", lab.conductor, lab.canonical_trace)
    });
    if lab.canonical_trace != lab.conductor {
        return;
    }
    f.check("farFlungAtMostTwo", lab.canred().is_some_and(|r| r <= 2), &[], || {
        format!("far-flung with can.red {:?}", lab.canred())
    });
    for c in lab.data.iter().filter(|c| c.reflexive && !c.principal && c.dual_reflexive) {
        f.check("onlyNormalization", translate_of(&c.ideal, &lab.normalization), &[&c.ideal], || {
            format!("E = {} and D(E) = {} are reflexive", c.ideal, c.dual)
        });
    }
}

fn multiplicity3(lab: &Lab, f: &mut Findings) {
    if lab.semigroup.multiplicity() != 3 {
        return;
    }
    f.check("canredAtMostTwo", lab.canred().is_some_and(|r| r <= 2), &[], || {
        format!("can.red {:?}", lab.canred())
    });
    for c in lab.data.iter().filter(|c| c.reflexive) {
        let contained = c.trace.is_subset(&lab.canonical_trace);
        f.check("traceCriterion", c.dual_reflexive == contained, &[&c.ideal], || {
            format!("D(E) reflexive = {}, tr(E) ⊆ tr(K) is {contained}", c.dual_reflexive)
        });
    }
}
