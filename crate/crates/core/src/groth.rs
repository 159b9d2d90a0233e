//! Grothendieck polynomials.
//!
//! Two independent engines:
//!
//! * [`GrothendieckEngine`] runs Lascoux's transition recursion
//!   `G_w = G_{w'} + (x_g - 1)·[G_{w'}·(Id - t_{i_1↔g})⋯(Id - t_{i_s↔g})]`
//!   from `G_id = 1`, memoized on normalized words.
//! * [`PipeDreamTable`] sums over all (not necessarily reduced) pipe dreams
//!   in the staircase, bucketed by Demazure product.
//!
//! Pipe dream conventions: crosses live in `{(i,j) : i + j <= n}`, the cross
//! at `(i,j)` carries the letter `s_{i+j-1}`, the word is read row by row
//! from the top and right to left inside each row, and a cross set `D`
//! with Demazure product `w` contributes `(-1)^{|D| - ℓ(w)} ∏ x_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::{self, BoxSet};
use crate::perm::demazure_fold;
use crate::{Error, MultiPoly, Permutation, Result};

/// One application of the transition theorem to `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionData {
    /// Last descent of `w`.
    pub g: usize,
    /// Largest `m > g` with `w(m) < w(g)`.
    pub m: usize,
    /// `w · t_{g↔m}`, normalized.
    pub w_prime: Permutation,
    /// Ascending `i < g` with `ℓ(w'·t_{i↔g}) = ℓ(w') + 1`.
    pub i_list: Vec<usize>,
}

pub fn transition_step(w: &Permutation) -> Result<TransitionData> {
    let g = w.last_descent().ok_or(Error::NoDescent)?;
    let wg = w.value(g);
    let m = (g + 1..=w.size())
        .rev()
        .find(|&m| w.value(m) < wg)
        .expect("a descent at g has w(g+1) < w(g)");
    let w_prime = w.apply_transposition(g, m)?;
    let i_list = (1..g)
        .filter(|&i| w_prime.is_length_increasing_transposition(i, g))
        .collect();
    Ok(TransitionData { g, m, w_prime, i_list })
}

/// Signed permutations `(sign, w'')` of `G_{w'}·(Id - t_{i_1↔g})⋯(Id - t_{i_s↔g})`.
///
/// Subset `S ⊆ {i_1, …, i_s}` gives `w'·t_{j_1↔g}·t_{j_2↔g}⋯` with
/// `j_1 < j_2 < …` and sign `(-1)^{|S|}`. Entries are not merged.
pub fn operator_expansion(data: &TransitionData) -> Vec<(i32, Permutation)> {
    let s = data.i_list.len();
    let base = data.w_prime.extended_word(data.g);
    let mut out = Vec::with_capacity(1 << s);
    for mask in 0u32..(1u32 << s) {
        let mut word = base.clone();
        for (bit, &i) in data.i_list.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                word.swap(i - 1, data.g - 1);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.push((sign, Permutation::from_word_unchecked(word).normalize()));
    }
    out
}

/// Transition-recursion engine with a memo cache keyed by normalized word.
///
/// The cache is owned by the engine; concurrent sweeps use one engine per
/// worker.
#[derive(Debug, Clone, Default)]
pub struct GrothendieckEngine {
    cache: BTreeMap<Vec<usize>, MultiPoly>,
}

impl GrothendieckEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached(&self) -> usize {
        self.cache.len()
    }

    pub fn grothendieck(&mut self, w: &Permutation) -> MultiPoly {
        let w = w.normalize();
        if let Some(p) = self.cache.get(w.word()) {
            return p.clone();
        }
        let result = if w.is_identity() {
            MultiPoly::one()
        } else {
            let data = transition_step(&w).expect("non-identity permutations have a descent");
            let g_prime = self.grothendieck(&data.w_prime);
            let mut bracket = MultiPoly::zero();
            for (sign, u) in operator_expansion(&data) {
                debug_assert!(
                    {
                        let lam_w = diagram::effective_region(&w);
                        let lam_u = diagram::effective_region(&u);
                        lam_u.is_subset(&lam_w) && lam_u != lam_w
                    },
                    "transition term {u} does not shrink the effective region of {w}"
                );
                let g_u = self.grothendieck(&u);
                bracket.add_scaled(&g_u, &BigInt::from(sign));
            }
            let factor = &MultiPoly::var(data.g) - &MultiPoly::one();
            &g_prime + &(&factor * &bracket)
        };
        self.cache.insert(w.word().to_vec(), result.clone());
        result
    }

    /// `deg(G_w)`; never fails because `G_w` is nonzero.
    pub fn degree(&mut self, w: &Permutation) -> usize {
        self.grothendieck(w).total_degree().expect("Grothendieck polynomials are nonzero") as usize
    }
}

/// `G_w` from a fresh engine.
pub fn grothendieck(w: &Permutation) -> MultiPoly {
    GrothendieckEngine::new().grothendieck(w)
}

pub fn groth_degree(w: &Permutation) -> usize {
    GrothendieckEngine::new().degree(w)
}

pub use crate::perm::demazure_product;

/// A set of crosses in the staircase of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipeDream {
    n: usize,
    crosses: BoxSet,
}

impl PipeDream {
    /// Rejects crosses outside `{(i,j) : i + j <= n}`.
    pub fn new(n: usize, crosses: BoxSet) -> Option<Self> {
        let inside = crosses.iter().all(|(i, j)| i + j <= n);
        inside.then_some(PipeDream { n, crosses })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BoxSet {
        &self.crosses
    }

    /// Letters `i + j - 1`, rows top to bottom, right to left in each row.
    pub fn word(&self) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.crosses.len());
        for i in 1..self.n {
            for j in (1..=self.n - i).rev() {
                if self.crosses.contains(i, j) {
                    letters.push(i + j - 1);
                }
            }
        }
        letters
    }

    pub fn demazure_product(&self) -> Permutation {
        demazure_product(&self.word())
    }

    /// Exponent of `x_i` is the number of crosses in row `i`.
    pub fn weight(&self) -> Vec<u32> {
        self.crosses.row_counts().into_iter().map(|c| c as u32).collect()
    }
}

/// Largest staircase the subset enumeration accepts (`n = 8`).
pub const MAX_STAIRCASE_CELLS: usize = 28;

/// `G_w` for every `w ∈ S_n` from a single pass over all cross subsets of
/// the staircase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipeDreamTable {
    n: usize,
    table: BTreeMap<Permutation, MultiPoly>,
}

impl PipeDreamTable {
    pub fn build(n: usize) -> Result<Self> {
        let cells = Self::cell_count(n)?;
        Self::build_masks(n, 0..1u64 << cells)
    }

    /// Staircase cells in reading order; bit `k` of a mask is cell `k`.
    pub fn cells(n: usize) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for i in 1..n {
            for j in (1..=n - i).rev() {
                cells.push((i, j));
            }
        }
        cells
    }

    pub fn cell_count(n: usize) -> Result<usize> {
        if n == 0 {
            return Err(Error::EmptySymmetricGroup);
        }
        let cells = n * (n - 1) / 2;
        if cells > MAX_STAIRCASE_CELLS {
            return Err(Error::TooLarge {
                what: "staircase cells",
                count: cells as u128,
                limit: MAX_STAIRCASE_CELLS as u128,
            });
        }
        Ok(cells)
    }

    /// Accumulates only the cross subsets whose masks lie in `masks`, so a
    /// caller can split the enumeration and [`merge`](Self::merge) parts.
    pub fn build_masks(n: usize, masks: Range<u64>) -> Result<Self> {
        let cells = Self::cell_count(n)?;
        let end = masks.end.min(1u64 << cells);
        let layout = Self::cells(n);
        let mut table: BTreeMap<Permutation, MultiPoly> = BTreeMap::new();
        let mut letters = Vec::with_capacity(cells);
        let mut word = alloc::vec![0usize; n];
        let mut exps = alloc::vec![0u32; n];
        for mask in masks.start..end {
            letters.clear();
            exps.iter_mut().for_each(|e| *e = 0);
            for (k, &(i, j)) in layout.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    letters.push(i + j - 1);
                    exps[i - 1] += 1;
                }
            }
            word.iter_mut().enumerate().for_each(|(i, v)| *v = i + 1);
            demazure_fold(&mut word, &letters);
            let w = Permutation::from_word_unchecked(word.clone()).normalize();
            let excess = letters.len() - w.coxeter_length();
            let sign = if excess.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            let mut monomial = MultiPoly::zero();
            monomial.add_term(exps.clone(), sign);
            table
                .entry(w)
                .and_modify(|p| *p = &*p + &monomial)
                .or_insert(monomial);
        }
        table.retain(|_, p| !p.is_zero());
        Ok(PipeDreamTable { n, table })
    }

    pub fn merge(mut self, other: PipeDreamTable) -> PipeDreamTable {
        assert_eq!(self.n, other.n, "merging tables of different staircases");
        for (w, p) in other.table {
            let entry = self.table.entry(w).or_default();
            *entry = &*entry + &p;
        }
        self.table.retain(|_, p| !p.is_zero());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `G_w`, or `None` when `w` does not fit in `S_n`.
    pub fn get(&self, w: &Permutation) -> Option<&MultiPoly> {
        self.table.get(&w.normalize())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &MultiPoly)> + '_ {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// `G_w` from the pipe dreams of the size-`n` staircase.
pub fn pipe_dream_grothendieck(w: &Permutation, n: usize) -> Result<MultiPoly> {
    let needed = w.normalize().size();
    if n < needed {
        return Err(Error::GridTooSmall { needed, given: n });
    }
    let table = PipeDreamTable::build(n)?;
    Ok(table.get(w).cloned().unwrap_or_default())
}
