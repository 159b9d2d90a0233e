//! Permutations of `S_∞` in one-line notation.
//!
//! Positions and values are 1-indexed in every public method. A permutation
//! of `S_n` is identified with its extension by fixed points to any larger
//! `S_n'`; [`Permutation::normalize`] picks the canonical representative by
//! stripping trailing fixed points, so the identity normalizes to `[1]`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates a one-line word. The result is not normalized.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = word.len();
        let mut seen = alloc::vec![false; n + 1];
        for (idx, &value) in word.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::ValueOutOfRange { index: idx + 1, value, n });
            }
            if seen[value] {
                return Err(Error::DuplicateValue { index: idx + 1, value });
            }
            seen[value] = true;
        }
        Ok(Permutation { word: word.to_vec() })
    }

    /// The identity, as the single-entry word `[1]`.
    pub fn identity() -> Self {
        Permutation { word: alloc::vec![1] }
    }

    /// The simple transposition `s_k = t_{k↔k+1}`, `k >= 1`.
    pub fn simple(k: usize) -> Self {
        assert!(k >= 1, "simple transpositions are indexed from 1");
        let mut word: Vec<usize> = (1..=k + 1).collect();
        word.swap(k - 1, k);
        Permutation { word }
    }

    /// The longest element `n n-1 ... 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1);
        Permutation { word: (1..=n).rev().collect() }
    }

    /// Wraps a word already known to be a permutation.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Self::from_one_line(&word).is_ok());
        Permutation { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Length of the stored word, which is `n` for the `S_n` it was built in.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for any `i >= 1`, with fixed points beyond the stored word.
    pub fn value(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.word.get(i - 1).copied().unwrap_or(i)
    }

    /// One-line word of `w^{-1}`.
    pub fn inverse_word(&self) -> Vec<usize> {
        let mut inv = alloc::vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        Permutation { word: self.inverse_word() }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions `#{i < j : w(i) > w(j)}`.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Ascending positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn last_descent(&self) -> Option<usize> {
        self.descents().last().copied()
    }

    /// Copy of the word padded with fixed points up to `n` entries.
    pub fn extended_word(&self, n: usize) -> Vec<usize> {
        let mut word = self.word.clone();
        while word.len() < n {
            word.push(word.len() + 1);
        }
        word
    }

    /// Same permutation stored on at least `n` positions.
    pub fn extended(&self, n: usize) -> Self {
        Permutation { word: self.extended_word(n) }
    }

    /// `w · t_{a↔b}`: the entries at positions `a` and `b` are exchanged.
    /// The result is normalized.
    pub fn apply_transposition(&self, a: usize, b: usize) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::InvalidTransposition { a, b });
        }
        let mut word = self.extended_word(b);
        word.swap(a - 1, b - 1);
        Ok(Permutation { word }.normalize())
    }

    /// Whether `ℓ(w · t_{a↔b}) = ℓ(w) + 1`, decided by the cover criterion:
    /// `w(a) < w(b)` and no `a < c < b` has `w(a) < w(c) < w(b)`.
    pub fn is_length_increasing_transposition(&self, a: usize, b: usize) -> bool {
        if a == 0 || a >= b {
            return false;
        }
        let (lo, hi) = (self.value(a), self.value(b));
        lo < hi && (a + 1..b).all(|c| {
            let v = self.value(c);
            v < lo || v > hi
        })
    }

    /// Strips trailing fixed points. Idempotent; the identity becomes `[1]`.
    pub fn normalize(&self) -> Self {
        let mut word = self.word.clone();
        while word.len() > 1 && word[word.len() - 1] == word.len() {
            word.pop();
        }
        Permutation { word }
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.word.len();
        n == 1 || self.word[n - 1] != n
    }

    /// Canonical `S_∞` equality: equal after normalization.
    pub fn same_as(&self, other: &Permutation) -> bool {
        let n = self.size().max(other.size());
        (1..=n).all(|i| self.value(i) == other.value(i))
    }

    /// All of `S_n` in lexicographic order of one-line words.
    pub fn enumerate(n: usize) -> Result<LexPermutations> {
        if n == 0 {
            return Err(Error::EmptySymmetricGroup);
        }
        Ok(LexPermutations { next: Some((1..=n).collect()) })
    }

    /// The bigrassmannian permutation whose only essential box is `(p, q)`
    /// with rank value `r`, so its effective region is the `p × q` rectangle.
    ///
    /// The word is `1..r`, then `q+1..q+p-r`, then `r+1..q`, normalized.
    /// The middle block has `p - r` entries; with `p` entries the essential
    /// box would sit in row `p + r`.
    pub fn bigrassmannian(r: usize, p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 || r >= p.min(q) {
            return Err(Error::InvalidBigrassmannian { r, p, q });
        }
        let mut word: Vec<usize> = (1..=r).collect();
        word.extend(q + 1..=q + p - r);
        word.extend(r + 1..=q);
        Ok(Permutation { word }.normalize())
    }
}

/// Lexicographic iterator over `S_n`, produced by [`Permutation::enumerate`].
#[derive(Debug, Clone)]
pub struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

// Standard in-place successor; false once the word is decreasing.
fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Builds the word of a Demazure product of simple reflections, applied
/// left to right: `u ← u·s_i` when that increases length, else `u` is kept.
pub fn demazure_product(letters: &[usize]) -> Permutation {
    let top = letters.iter().copied().max().unwrap_or(0);
    let mut word: Vec<usize> = (1..=top + 1).collect();
    demazure_fold(&mut word, letters);
    Permutation { word }.normalize()
}

/// In-place Demazure fold on a word long enough for every letter.
pub(crate) fn demazure_fold(word: &mut [usize], letters: &[usize]) {
    for &i in letters {
        debug_assert!(i >= 1 && i < word.len());
        if word[i - 1] < word[i] {
            word.swap(i - 1, i);
        }
    }
}

impl fmt::Display for Permutation {
    /// Compact digits when every value is at most 9, otherwise commas.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.word.iter().all(|&v| v <= 9);
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2,5,3,1,4"` or the compact digit string `"25314"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyWord);
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<usize>().map_err(|_| Error::Parse("expected a positive integer")))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(Error::Parse("expected digits or a comma-separated list")))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&word)
    }
}

impl From<&Permutation> for String {
    fn from(p: &Permutation) -> String {
        alloc::format!("{p}")
    }
}
