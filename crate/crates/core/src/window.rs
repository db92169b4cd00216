//! Fixed-length bit windows with an implicit all-ones tail.
//!
//! Every set handled by this crate is bounded below and eventually contains
//! every integer, so a set is stored as a finite window `[0, len)` of explicit
//! bits; every position `>= len` is a member and every negative position is
//! not. Bits at positions `>= len` inside the last word are kept zero so that
//! derived equality and hashing are structural.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Window {
    len: usize,
    words: Vec<u64>,
}

impl Window {
    /// A window with no explicit members (only the tail).
    pub(crate) fn empty(len: usize) -> Self {
        Window {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// A window in which every position is a member.
    pub(crate) fn full(len: usize) -> Self {
        let mut w = Window {
            len,
            words: vec![u64::MAX; len.div_ceil(WORD)],
        };
        w.trim();
        w
    }

    pub(crate) fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut w = Window::empty(len);
        for i in 0..len {
            if f(i) {
                w.set(i);
            }
        }
        w
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Membership of a position; positions past the window are members.
    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        if i >= self.len {
            return true;
        }
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1u64 << (i % WORD);
    }

    /// Word `wi` with tail positions reported as ones.
    #[inline]
    fn word_ext(&self, wi: usize) -> u64 {
        let start = wi * WORD;
        if start >= self.len {
            return u64::MAX;
        }
        let w = self.words[wi];
        let valid = self.len - start;
        if valid >= WORD {
            w
        } else {
            w | (u64::MAX << valid)
        }
    }

    /// 64 consecutive membership bits starting at (possibly negative) `start`.
    fn extract(&self, start: isize) -> u64 {
        if start < 0 {
            let s = start.unsigned_abs();
            if s >= WORD {
                return 0;
            }
            return self.extract(0) << s;
        }
        let s = start as usize;
        let (wi, bo) = (s / WORD, s % WORD);
        let lo = self.word_ext(wi) >> bo;
        if bo == 0 {
            lo
        } else {
            lo | (self.word_ext(wi + 1) << (WORD - bo))
        }
    }

    /// Window of the same length whose position `i` is position `i + k` here.
    pub(crate) fn shift_down(&self, k: usize) -> Window {
        let mut out = Window::empty(self.len);
        for (wi, word) in out.words.iter_mut().enumerate() {
            *word = self.extract((wi * WORD + k) as isize);
        }
        out.trim();
        out
    }

    /// Window of the same length whose position `i` is position `i - k` here.
    #[cfg(test)]
    pub(crate) fn shift_up(&self, k: usize) -> Window {
        let mut out = Window::empty(self.len);
        out.or_shifted(self, k);
        out
    }

    /// `self[i] |= other[i - k]` for every position of `self`.
    pub(crate) fn or_shifted(&mut self, other: &Window, k: usize) {
        for (wi, word) in self.words.iter_mut().enumerate() {
            *word |= other.extract(wi as isize * WORD as isize - k as isize);
        }
        self.trim();
    }

    pub(crate) fn and_assign(&mut self, other: &Window) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Subset test of the explicit windows (tails agree by construction).
    pub(crate) fn is_subset(&self, other: &Window) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Least member; `len` when the window holds no explicit member.
    pub(crate) fn first_one(&self) -> usize {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return wi * WORD + w.trailing_zeros() as usize;
            }
        }
        self.len
    }

    /// Least position from which every position is a member.
    pub(crate) fn tail_start(&self) -> usize {
        let mut t = self.len;
        while t > 0 && self.get(t - 1) {
            t -= 1;
        }
        t
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    #[cfg(test)]
    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Window[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "|1...]")
    }
}
