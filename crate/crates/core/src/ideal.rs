//! Fractional monomial ideals `E ⊆ ℤ` with `E + S ⊆ E`: the rank-one maximal
//! Cohen-Macaulay modules over `k[[t^S]]`.
//!
//! Every ideal is stored as its least element `min` plus a membership window
//! over `[min, min + F]`. Because `min + S ⊆ E`, every integer
//! `>= min + F + 1` is a member, so the window is always exact. All operations
//! derive their output window from the input minima, and two ideals over the
//! same semigroup are isomorphic exactly when they are translates.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;
use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("ideals live over different semigroups")]
    ParentMismatch,
    #[error("ideal has {0} minimal generators, syzygy formula needs exactly 2")]
    NotTwoGenerated(usize),
    #[error("cannot parse ideal {0:?}")]
    Parse(String),
    #[error("set {0:?} is not closed under adding semigroup elements")]
    NotAnIdeal(String),
}

#[derive(Clone)]
pub struct RelativeIdeal {
    parent: NumericalSemigroup,
    min: i64,
    window: Window,
}

impl RelativeIdeal {
    /// Reads the window relative to `low` and re-anchors it at its first member.
    fn anchored(parent: &NumericalSemigroup, low: i64, w: Window) -> Self {
        let f = w.first_one();
        let window = if f == 0 { w } else { w.shift_down(f) };
        RelativeIdeal {
            parent: parent.clone(),
            min: low + f as i64,
            window,
        }
    }

    /// Builds `{z >= low : pred(z)}` assuming every `z >= low + F + 1` is a
    /// member; the caller guarantees the result is an ideal.
    pub(crate) fn from_predicate(
        parent: &NumericalSemigroup,
        low: i64,
        mut pred: impl FnMut(i64) -> bool,
    ) -> Self {
        let w = Window::from_fn(parent.window_len(), |i| pred(low + i as i64));
        Self::anchored(parent, low, w)
    }

    /// The ring `S` itself, the free module of rank one.
    pub fn ring(parent: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            parent: parent.clone(),
            min: 0,
            window: parent.members().clone(),
        }
    }

    /// `ℕ`, the normalization.
    pub fn normalization(parent: &NumericalSemigroup) -> Self {
        Self::tail(parent, 0)
    }

    /// `{z >= start}`.
    pub fn tail(parent: &NumericalSemigroup, start: i64) -> Self {
        RelativeIdeal {
            parent: parent.clone(),
            min: start,
            window: Window::full(parent.window_len()),
        }
    }

    /// `x + S`.
    pub fn principal(parent: &NumericalSemigroup, x: i64) -> Self {
        Self::ring(parent).translate(x)
    }

    /// The maximal ideal `S \ {0}`.
    pub fn maximal(parent: &NumericalSemigroup) -> Self {
        Self::from_predicate(parent, 1, |z| parent.contains(z))
    }

    /// `⋃ (g + S)` over the given generators.
    pub fn from_generators(parent: &NumericalSemigroup, gens: &[i64]) -> Result<Self, IdealError> {
        let &min = gens.iter().min().ok_or(IdealError::EmptyGenerators)?;
        let mut w = Window::empty(parent.window_len());
        for &g in gens {
            w.or_shifted(parent.members(), (g - min) as usize);
        }
        Ok(Self::anchored(parent, min, w))
    }

    pub fn parent(&self) -> &NumericalSemigroup {
        &self.parent
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.min && self.window.get((z - self.min) as usize)
    }

    /// Least `c` with `[c, ∞) ⊆ E`.
    pub fn tail_start(&self) -> i64 {
        self.min + self.window.tail_start() as i64
    }

    /// Members strictly below the tail start.
    pub fn listed_members(&self) -> Vec<i64> {
        let t = self.tail_start();
        (self.min..t).filter(|&z| self.contains(z)).collect()
    }

    fn check_parent(&self, other: &Self) -> Result<(), IdealError> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(IdealError::ParentMismatch)
        }
    }

    pub fn translate(&self, x: i64) -> Self {
        RelativeIdeal {
            parent: self.parent.clone(),
            min: self.min + x,
            window: self.window.clone(),
        }
    }

    /// `(E - min(E), min(E))`.
    pub fn normalize(&self) -> (Self, i64) {
        (self.translate(-self.min), self.min)
    }

    pub fn is_normalized(&self) -> bool {
        self.min == 0
    }

    /// The sumset `E + F`, i.e. the product of monomial ideals.
    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_parent(other)?;
        let mut w = Window::empty(self.window.len());
        for i in self.window.iter_ones() {
            w.or_shifted(&other.window, i);
        }
        Ok(Self::anchored(&self.parent, self.min + other.min, w))
    }

    /// `n·E`, with `0·E = S`.
    pub fn n_fold_sum(&self, n: usize) -> Self {
        let mut acc = Self::ring(&self.parent);
        for _ in 0..n {
            acc = acc.sum(self).expect("same parent");
        }
        acc
    }

    /// The colon `E - F = {z : z + F ⊆ E}`.
    pub fn difference(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_parent(other)?;
        // z + min(F) ∈ E forces z >= min(E) - min(F); once z + min(F) reaches
        // the tail of E the whole of z + F does, since F ⊆ min(F) + ℕ.
        let mut w = Window::full(self.window.len());
        for j in other.window.iter_ones() {
            w.and_assign(&self.window.shift_down(j));
        }
        Ok(Self::anchored(&self.parent, self.min - other.min, w))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_parent(other)?;
        let low = self.min.max(other.min);
        Ok(Self::from_predicate(&self.parent, low, |z| {
            self.contains(z) && other.contains(z)
        }))
    }

    /// Set inclusion `E ⊆ F`.
    pub fn is_subset(&self, other: &Self) -> bool {
        if self.min < other.min {
            return false;
        }
        let shift = (self.min - other.min) as usize;
        self.window.is_subset(&other.window.shift_down(shift))
    }

    /// `Some(x)` when `other = x + self`.
    pub fn is_translate(&self, other: &Self) -> Result<Option<i64>, IdealError> {
        self.check_parent(other)?;
        Ok((self.window == other.window).then_some(other.min - self.min))
    }

    pub(crate) fn translate_of(&self, other: &Self) -> bool {
        self.window == other.window
    }

    /// `S - E`, the ring dual `E* = Hom(E, R)`.
    pub fn ring_dual(&self) -> Self {
        Self::ring(&self.parent).difference(self).expect("same parent")
    }

    /// `K - E`, the canonical dual `Hom(E, ω)`.
    pub fn canonical_dual(&self) -> Self {
        canonical_ideal(&self.parent)
            .difference(self)
            .expect("same parent")
    }

    /// `E + (S - E)`: the ideal generated by images of maps `E → R`.
    pub fn trace(&self) -> Self {
        self.sum(&self.ring_dual()).expect("same parent")
    }

    /// `E \ (E + m)`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let em = self
            .sum(&Self::maximal(&self.parent))
            .expect("same parent");
        (self.min..em.tail_start())
            .filter(|&z| self.contains(z) && !em.contains(z))
            .collect()
    }

    pub fn is_principal(&self) -> bool {
        self.window == *self.parent.members()
    }

    /// `S - (S - E)` is a translate of `E`.
    pub fn is_reflexive(&self) -> bool {
        self.ring_dual().ring_dual().translate_of(self)
    }

    /// First syzygy of a 2-generated ideal, normalized.
    ///
    /// For generators `a < b` the kernel of `R(-a) ⊕ R(-b) → E` is
    /// `{z ∈ S : z + (b - a) ∈ S}`.
    pub fn syzygy_two_generated(&self) -> Result<Self, IdealError> {
        Ok(self.syzygy_kernel()?.kernel.normalize().0)
    }

    /// The syzygy before normalization, together with the generator pair.
    pub fn syzygy_kernel(&self) -> Result<Syzygy, IdealError> {
        let gens = self.minimal_generators();
        let &[a, b] = gens.as_slice() else {
            return Err(IdealError::NotTwoGenerated(gens.len()));
        };
        let s = &self.parent;
        let kernel = Self::from_predicate(s, 0, |z| s.contains(z) && s.contains(z + b - a));
        let syz = Syzygy {
            generators: (a, b),
            kernel,
        };
        debug_assert!(syz.exactness_defect(self).is_none());
        Ok(syz)
    }

    /// Parses the textual form produced by `Display`:
    /// `{a,b,...}∪[t,∞)` or `[t,∞)`. The ASCII spellings `U` and `inf` are
    /// accepted as well.
    pub fn parse(parent: &NumericalSemigroup, text: &str) -> Result<Self, IdealError> {
        let err = || IdealError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace("inf", "∞");
        let (listed, tail) = match compact.split_once('∪').or_else(|| compact.split_once('U')) {
            Some((l, t)) => (Some(l), t),
            None if compact.starts_with('[') => (None, compact.as_str()),
            None => return Err(err()),
        };
        let mut members: Vec<i64> = match listed {
            Some(l) => {
                let inner = l.strip_prefix('{').and_then(|l| l.strip_suffix('}')).ok_or_else(err)?;
                inner
                    .split(',')
                    .filter(|p| !p.is_empty())
                    .map(|p| p.parse::<i64>().map_err(|_| err()))
                    .collect::<Result<_, _>>()?
            }
            None => Vec::new(),
        };
        let start: i64 = tail
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(",∞)"))
            .ok_or_else(err)?
            .parse()
            .map_err(|_| err())?;
        members.sort_unstable();
        if members.last().is_some_and(|&m| m >= start) {
            return Err(err());
        }
        let low = members.first().copied().unwrap_or(start);
        let is_member = |z: i64| z >= start || members.binary_search(&z).is_ok();
        let out = Self::from_predicate(parent, low, is_member);
        let closed = (out.min..start + parent.window_len() as i64).all(|z| {
            out.contains(z) == is_member(z)
                && (!is_member(z) || parent.generators().iter().all(|&g| is_member(z + g)))
        });
        if !closed {
            return Err(IdealError::NotAnIdeal(text.to_string()));
        }
        Ok(out)
    }
}

/// First syzygy `J` of a 2-generated ideal with generators `a < b`,
/// anchored so that `d - b ∈ J` is the degree-`d` kernel element.
#[derive(Debug, Clone)]
pub struct Syzygy {
    pub generators: (i64, i64),
    pub kernel: RelativeIdeal,
}

impl Syzygy {
    /// Checks `[d-a ∈ S] + [d-b ∈ S] = [d ∈ E] + [d-b ∈ J]` in every degree of
    /// `[min(E) - 1, a + b + 2F + 2]`; returns the first failing degree.
    pub fn exactness_defect(&self, ideal: &RelativeIdeal) -> Option<i64> {
        let s = ideal.parent();
        let (a, b) = self.generators;
        let top = a + b + 2 * s.frobenius() + 2;
        (ideal.min() - 1..=top).find(|&d| {
            let free = s.contains(d - a) as u8 + s.contains(d - b) as u8;
            let image = ideal.contains(d) as u8 + self.kernel.contains(d - b) as u8;
            free != image
        })
    }
}

/// The canonical ideal `K = {x : F - x ∉ S}`, normalized to minimum 0.
pub fn canonical_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let f = s.frobenius();
    RelativeIdeal::from_predicate(s, 0, |x| !s.contains(f - x))
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.min == other.min && self.window == other.window && self.parent == other.parent
    }
}

impl Eq for RelativeIdeal {}

impl Hash for RelativeIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min.hash(state);
        self.window.hash(state);
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let listed = self.listed_members();
        if !listed.is_empty() {
            let parts: Vec<String> = listed.iter().map(|z| z.to_string()).collect();
            write!(f, "{{{}}}∪", parts.join(","))?;
        }
        write!(f, "[{},∞)", self.tail_start())
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over <{}>", self, self.parent)
    }
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
