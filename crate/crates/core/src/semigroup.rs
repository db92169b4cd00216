//! Numerical semigroups: cofinite additive submonoids of the nonnegative
//! integers, standing in for the monomial curve ring `k[[t^S]]`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, not 1")]
    GcdNotOne(i64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("cannot parse generator list {0:?}")]
    Parse(String),
}

struct Inner {
    generators: Vec<i64>,
    frobenius: i64,
    multiplicity: i64,
    gaps: Vec<i64>,
    /// Membership over `[0, frobenius]`; everything above is a member.
    members: Window,
}

/// A numerical semigroup `S ⊆ ℕ`.
///
/// Values are immutable and cheap to clone; equality compares the minimal
/// generating sets.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

/// Derived invariants of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub embedding_dimension: usize,
    pub multiplicity: i64,
    pub genus: usize,
    pub frobenius: i64,
    pub pseudo_frobenius: Vec<i64>,
    pub cm_type: usize,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub med: bool,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`; the input need not be minimal.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator(g));
        }
        let g = gens.iter().fold(0, |acc, &x| num_integer::gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let m = *gens.iter().min().unwrap();
        let apery = apery_by_shortest_paths(m, gens);
        let frobenius = apery.iter().max().unwrap() - m;
        let members = Window::from_fn((frobenius + 1) as usize, |z| {
            let z = z as i64;
            z >= apery[(z % m) as usize]
        });
        Ok(Self::from_members(members))
    }

    /// The semigroup `ℕ` (the regular ring).
    pub fn naturals() -> Self {
        Self::from_members(Window::empty(0))
    }

    /// Builds from a membership window over `[0, F]` whose last position is
    /// the Frobenius number (or an empty window for `ℕ`). The window must
    /// describe an additively closed set containing 0.
    pub(crate) fn from_members(members: Window) -> Self {
        let frobenius = members.len() as i64 - 1;
        debug_assert!(frobenius < 0 || !members.get(frobenius as usize));
        debug_assert!(members.get(0));
        let contains = |z: i64| z >= 0 && members.get(z as usize);
        let multiplicity = (1..).find(|&z| contains(z)).unwrap();
        let gaps: Vec<i64> = (1..=frobenius).filter(|&z| !contains(z)).collect();
        // Minimal generators live in [m, F + m].
        let generators = (multiplicity..=(frobenius + multiplicity).max(multiplicity))
            .filter(|&s| contains(s))
            .filter(|&s| !(multiplicity..=s / 2).any(|a| contains(a) && contains(s - a)))
            .collect();
        NumericalSemigroup(Arc::new(Inner {
            generators,
            frobenius,
            multiplicity,
            gaps,
            members,
        }))
    }

    pub fn generators(&self) -> &[i64] {
        &self.0.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.0.frobenius
    }

    pub fn multiplicity(&self) -> i64 {
        self.0.multiplicity
    }

    pub fn gaps(&self) -> &[i64] {
        &self.0.gaps
    }

    pub fn genus(&self) -> usize {
        self.0.gaps.len()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.0.generators.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.0.frobenius < 0
    }

    pub(crate) fn members(&self) -> &Window {
        &self.0.members
    }

    /// Width of every ideal window over this semigroup: `F + 1`.
    pub(crate) fn window_len(&self) -> usize {
        (self.0.frobenius + 1) as usize
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.0.frobenius {
            true
        } else {
            self.0.members.get(z as usize)
        }
    }

    /// Gaps `x` with `x + s ∈ S` for every nonzero `s ∈ S`; `{-1}` for `ℕ`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_naturals() {
            return vec![-1];
        }
        self.gaps()
            .iter()
            .copied()
            .filter(|&g| self.generators().iter().all(|&n| self.contains(g + n)))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius() + 1
    }

    /// Every gap `g` whose reflection `F - g` is also a gap is pseudo-Frobenius.
    pub fn is_almost_symmetric(&self) -> bool {
        let pf = self.pseudo_frobenius();
        let f = self.frobenius();
        self.gaps()
            .iter()
            .all(|&g| self.contains(f - g) || pf.contains(&g))
    }

    pub fn invariants(&self) -> InvariantRecord {
        let pseudo_frobenius = self.pseudo_frobenius();
        InvariantRecord {
            embedding_dimension: self.embedding_dimension(),
            multiplicity: self.multiplicity(),
            genus: self.genus(),
            frobenius: self.frobenius(),
            cm_type: pseudo_frobenius.len(),
            pseudo_frobenius,
            symmetric: self.is_symmetric(),
            almost_symmetric: self.is_almost_symmetric(),
            med: self.embedding_dimension() as i64 == self.multiplicity(),
        }
    }

    /// Apéry set with respect to `n`, indexed by residue: entry `r` is the
    /// least element of `S` congruent to `r` modulo `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>, SemigroupError> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotAMember(n));
        }
        let mut out = vec![-1i64; n as usize];
        let mut missing = n as usize;
        let mut z = 0;
        while missing > 0 {
            let r = (z % n) as usize;
            if out[r] < 0 && self.contains(z) {
                out[r] = z;
                missing -= 1;
            }
            z += 1;
        }
        Ok(out)
    }

    /// `S \ {x}` for a minimal generator `x` above the Frobenius number.
    pub(crate) fn remove_generator(&self, x: i64) -> NumericalSemigroup {
        debug_assert!(x > self.frobenius() && self.generators().contains(&x));
        let members = Window::from_fn(x as usize + 1, |z| {
            let z = z as i64;
            z != x && self.contains(z)
        });
        NumericalSemigroup::from_members(members)
    }
}

/// Least element of each residue class mod `m` reachable from the generators.
fn apery_by_shortest_paths(m: i64, gens: &[i64]) -> Vec<i64> {
    let mut dist = vec![i64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nr = ((r as i64 + g) % m) as usize;
            if d + g < dist[nr] {
                dist[nr] = d + g;
                heap.push(Reverse((d + g, nr)));
            }
        }
    }
    dist
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.generators == other.0.generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.generators.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self)
    }
}

impl FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    /// Comma-separated generators, e.g. `"3,5,7"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let gens = s
            .split(',')
            .map(|p| p.trim())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i64>().map_err(|_| SemigroupError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        NumericalSemigroup::from_generators(&gens)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
