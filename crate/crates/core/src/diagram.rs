//! Rank matrices, Rothe diagrams, essential sets and effective regions.
//!
//! Box sets are reported on the grid of the normalized permutation; by the
//! `S_∞` identification they do not depend on the ambient `n`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, Permutation, Result};

/// A finite set of `(row, col)` cells, 1-indexed, iterated row-major.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxSet {
    boxes: BTreeSet<(usize, usize)>,
}

impl BoxSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, row: usize, col: usize) -> bool {
        debug_assert!(row >= 1 && col >= 1);
        self.boxes.insert((row, col))
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.boxes.contains(&(row, col))
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Row-major iteration.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn is_subset(&self, other: &BoxSet) -> bool {
        self.boxes.is_subset(&other.boxes)
    }

    /// Number of boxes in each row `1..=max_row`, where `max_row` is the
    /// last non-empty row.
    pub fn row_counts(&self) -> Vec<usize> {
        let rows = self.boxes.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut counts = alloc::vec![0; rows];
        for &(r, _) in &self.boxes {
            counts[r - 1] += 1;
        }
        counts
    }

    /// Whether the cells form a Young diagram in English notation: each row
    /// is an initial segment `1..=len`, rows are consecutive from row 1 and
    /// the lengths are weakly decreasing.
    pub fn is_young_diagram(&self) -> bool {
        let counts = self.row_counts();
        let left_justified = self.boxes.iter().all(|&(r, c)| c <= counts[r - 1]);
        left_justified
            && counts.iter().all(|&c| c > 0)
            && counts.windows(2).all(|pair| pair[0] >= pair[1])
    }
}

impl FromIterator<(usize, usize)> for BoxSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        BoxSet { boxes: iter.into_iter().collect() }
    }
}

/// `r_{ij}` = number of 1's of the permutation matrix in the northwest
/// `i × j` corner, for `1 <= i, j <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl RankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `r_{ij}`; row or column 0 gives 0.
    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(i <= self.n && j <= self.n, "rank matrix index out of range");
        if i == 0 || j == 0 {
            return 0;
        }
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Row-major rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n).map(|row| row.to_vec()).collect()
    }
}

pub fn rank_matrix(w: &Permutation, n: usize) -> Result<RankMatrix> {
    let needed = w.normalize().size();
    if n < needed {
        return Err(Error::GridTooSmall { needed, given: n });
    }
    let mut entries = alloc::vec![0; n * n];
    for i in 1..=n {
        let wi = w.value(i);
        for j in 1..=n {
            let above = if i > 1 { entries[(i - 2) * n + (j - 1)] } else { 0 };
            entries[(i - 1) * n + (j - 1)] = above + usize::from(wi <= j);
        }
    }
    Ok(RankMatrix { n, entries })
}

/// `D(w) = {(i,j) : j < w(i), i < w^{-1}(j)}`.
pub fn rothe_diagram(w: &Permutation) -> BoxSet {
    let w = w.normalize();
    let n = w.size();
    let inv = w.inverse_word();
    let mut d = BoxSet::new();
    for i in 1..=n {
        for j in 1..w.value(i) {
            if i < inv[j - 1] {
                d.insert(i, j);
            }
        }
    }
    d
}

/// Boxes of `D(w)` with neither an east nor a south neighbour in `D(w)`.
pub fn essential_set(w: &Permutation) -> BoxSet {
    let d = rothe_diagram(w);
    d.iter()
        .filter(|&(i, j)| !d.contains(i, j + 1) && !d.contains(i + 1, j))
        .collect()
}

/// `λ(w)`: boxes weakly northwest of some essential box.
pub fn effective_region(w: &Permutation) -> BoxSet {
    region_below(&essential_set(w))
}

fn region_below(corners: &BoxSet) -> BoxSet {
    let mut region = BoxSet::new();
    for (ei, ej) in corners.iter() {
        for i in 1..=ei {
            for j in 1..=ej {
                region.insert(i, j);
            }
        }
    }
    region
}

/// `λ(w) = D(w)`.
pub fn is_dominant(w: &Permutation) -> bool {
    effective_region(w) == rothe_diagram(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_one_line(word).unwrap()
    }

    fn boxes(list: &[(usize, usize)]) -> BoxSet {
        list.iter().copied().collect()
    }

    #[test]
    fn rank_matrix_examples() {
        let r = rank_matrix(&Permutation::identity(), 2).unwrap();
        assert_eq!(r.rows(), vec![vec![1, 1], vec![1, 2]]);
        let r = rank_matrix(&p(&[2, 5, 3, 1, 4]), 5).unwrap();
        assert_eq!(r.get(3, 1), 0);
        assert_eq!(r.get(2, 4), 1);
        assert_eq!(r.get(5, 5), 5);
        assert_eq!(rank_matrix(&p(&[1, 3, 2]), 3).unwrap().get(2, 2), 1);
        assert_eq!(
            rank_matrix(&p(&[2, 5, 3, 1, 4]), 4),
            Err(Error::GridTooSmall { needed: 5, given: 4 })
        );
        // Trailing fixed points do not count towards the needed size.
        assert!(rank_matrix(&p(&[2, 1, 3]), 2).is_ok());
    }

    #[test]
    fn rothe_examples() {
        assert!(rothe_diagram(&Permutation::identity()).is_empty());
        assert_eq!(rothe_diagram(&p(&[2, 1])), boxes(&[(1, 1)]));
        assert_eq!(
            rothe_diagram(&p(&[2, 5, 3, 1, 4])),
            boxes(&[(1, 1), (2, 1), (2, 3), (2, 4), (3, 1)])
        );
    }

    #[test]
    fn essential_examples() {
        assert_eq!(essential_set(&p(&[2, 1])), boxes(&[(1, 1)]));
        assert_eq!(essential_set(&p(&[2, 5, 3, 1, 4])), boxes(&[(2, 4), (3, 1)]));
        assert_eq!(essential_set(&p(&[1, 3, 2])), boxes(&[(2, 2)]));
    }

    #[test]
    fn effective_examples() {
        assert!(effective_region(&Permutation::identity()).is_empty());
        let lam = effective_region(&p(&[2, 5, 3, 1, 4]));
        assert_eq!(lam.len(), 9);
        assert_eq!(lam.row_counts(), vec![4, 4, 1]);
        for k in 1..=5 {
            let lam = effective_region(&Permutation::simple(k));
            assert_eq!(lam.len(), k * k);
            assert!(lam.is_young_diagram());
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(&Permutation::identity()));
        assert!(is_dominant(&p(&[3, 1, 2])));
        assert!(!is_dominant(&p(&[1, 3, 2])));
        assert!(is_dominant(&p(&[3, 4, 1, 2])));
    }

    #[test]
    fn young_diagram_shapes() {
        assert!(BoxSet::new().is_young_diagram());
        assert!(boxes(&[(1, 1), (1, 2), (2, 1)]).is_young_diagram());
        assert!(!boxes(&[(2, 2)]).is_young_diagram());
        assert!(!boxes(&[(1, 1), (2, 1), (2, 2)]).is_young_diagram());
        assert!(!boxes(&[(1, 1), (3, 1)]).is_young_diagram());
        assert!(!boxes(&[(1, 2)]).is_young_diagram());
    }
}
