//! Fulton's generators for Schubert determinantal ideals, and a brute-force
//! oracle for the graded dimensions of their quotient rings.
//!
//! Matrix entries `z_{ij}` are linearized in row-major order over the
//! ambient variable list, so `z_{ij}` is polynomial variable `p + 1` where
//! `p` is the position of `(i, j)` in [`GeneratorSet::variables`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::diagram::{self, rank_matrix};
use crate::groth::GrothendieckEngine;
use crate::hilbert::{self, Ambient};
use crate::linalg::{IntegerEchelon, SparseRow};
use crate::poly::binomial;
use crate::{Error, MultiPoly, Permutation, Result};

/// A minor of the generic matrix, taken from the northwest `i × j` corner
/// of its source box `(i, j)` whose rank value is `rank`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub source: (usize, usize),
    pub rank: usize,
}

impl MinorSpec {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Leibniz expansion in the ambient variables.
    pub fn expand(&self, variables: &[(usize, usize)]) -> Result<MultiPoly> {
        expand_minor(self, variables)
    }
}

/// Deduplicated minors together with the ambient variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub variables: Vec<(usize, usize)>,
    pub minors: Vec<MinorSpec>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    pub fn polynomials(&self) -> Result<Vec<MultiPoly>> {
        self.minors.iter().map(|m| expand_minor(m, &self.variables)).collect()
    }

    /// Whether every minor only touches ambient variables.
    pub fn within_ambient(&self) -> bool {
        let vars: BTreeSet<_> = self.variables.iter().copied().collect();
        self.minors
            .iter()
            .all(|m| m.rows.iter().all(|&r| m.cols.iter().all(|&c| vars.contains(&(r, c)))))
    }
}

/// Size `r_{ij} + 1` minors of the northwest `i × j` submatrix for every
/// selected box `(i, j)`.
///
/// With `essential_only` the boxes are `E(w)`. Otherwise they are every
/// box of the ambient grid: all of `[n] × [n]` for the full ambient, and
/// `λ(w)` for the effective one, whose ring only has those variables.
/// Minors repeated across boxes are kept once, at their first source.
pub fn fulton_generators(w: &Permutation, essential_only: bool, ambient: Ambient) -> Result<GeneratorSet> {
    let variables = match ambient.variables(w) {
        Ok(v) => v,
        Err(Error::EmptyAmbient) => Vec::new(),
        Err(e) => return Err(e),
    };
    let grid = match ambient {
        Ambient::Full(n) => n,
        Ambient::Effective => w.normalize().size(),
    };
    let ranks = rank_matrix(w, grid)?;
    let boxes: Vec<(usize, usize)> = if essential_only {
        diagram::essential_set(w).iter().collect()
    } else {
        variables.clone()
    };
    let mut seen = BTreeSet::new();
    let mut minors = Vec::new();
    for (i, j) in boxes {
        let rank = ranks.get(i, j);
        let size = rank + 1;
        if size > i.min(j) {
            continue;
        }
        for rows in combinations(i, size) {
            for cols in combinations(j, size) {
                if seen.insert((rows.clone(), cols.clone())) {
                    minors.push(MinorSpec { rows: rows.clone(), cols, source: (i, j), rank });
                }
            }
        }
    }
    Ok(GeneratorSet { variables, minors })
}

/// All `size`-subsets of `1..=n` in lexicographic order.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let remaining = size - current.len();
        for v in start..=n + 1 - remaining {
            current.push(v);
            go(v + 1, n, size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if size <= n {
        go(1, n, size, &mut Vec::with_capacity(size), &mut out);
    }
    out
}

/// Determinant of the minor by the Leibniz formula.
pub fn expand_minor(m: &MinorSpec, variables: &[(usize, usize)]) -> Result<MultiPoly> {
    let index = |row: usize, col: usize| {
        variables
            .binary_search(&(row, col))
            .map_err(|_| Error::VariableOutsideAmbient { row, col })
    };
    let size = m.size();
    let mut det = MultiPoly::zero();
    if size == 0 {
        return Ok(MultiPoly::one());
    }
    for sigma in Permutation::enumerate(size)? {
        let sign = if sigma.coxeter_length() % 2 == 0 { 1 } else { -1 };
        let mut exps = alloc::vec![0u32; variables.len()];
        for (k, &row) in m.rows.iter().enumerate() {
            let col = m.cols[sigma.value(k + 1) - 1];
            exps[index(row, col)?] += 1;
        }
        det.add_term(exps, BigInt::from(sign));
    }
    Ok(det)
}

/// Size limits for the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Ceiling on `C(V+k-1, k)`, the number of degree-`k` monomials.
    pub max_monomials: u128,
    /// Ceiling on the number of `monomial · generator` rows.
    pub max_multiples: u128,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_monomials: 20_000, max_multiples: 200_000 }
    }
}

/// Graded dimensions of `S/I` by linear algebra on the degree-`k` piece.
///
/// `dim (S/I)_k = C(V+k-1, k) - rank` of the integer matrix whose rows are
/// the coefficient vectors of `m·g` for generators `g` and monomials `m`
/// of degree `k - deg g`.
#[derive(Debug, Clone)]
pub struct BruteForceOracle {
    n_vars: usize,
    generators: Vec<(u32, MultiPoly)>,
    limits: OracleLimits,
}

impl BruteForceOracle {
    pub fn new(gens: &GeneratorSet, limits: OracleLimits) -> Result<Self> {
        let generators = gens
            .polynomials()?
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| Ok((p.total_degree()?, p)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BruteForceOracle { n_vars: gens.variables.len(), generators, limits })
    }

    fn monomial_count(&self, degree: u32) -> u128 {
        if self.n_vars == 0 {
            return u128::from(degree == 0);
        }
        let v = self.n_vars as u64;
        binomial(v + u64::from(degree) - 1, u64::from(degree)).to_u128().unwrap_or(u128::MAX)
    }

    /// Checks the size guards for degree `k` without doing the work.
    pub fn check_limits(&self, k: usize) -> Result<()> {
        let k = k as u32;
        let count = self.monomial_count(k);
        if count > self.limits.max_monomials {
            return Err(Error::TooLarge { what: "monomials", count, limit: self.limits.max_monomials });
        }
        let multiples: u128 = self
            .generators
            .iter()
            .filter(|(d, _)| *d <= k)
            .map(|(d, _)| self.monomial_count(k - d))
            .fold(0u128, u128::saturating_add);
        if multiples > self.limits.max_multiples {
            return Err(Error::TooLarge {
                what: "generator multiples",
                count: multiples,
                limit: self.limits.max_multiples,
            });
        }
        Ok(())
    }

    pub fn hilbert_function(&self, k: usize) -> Result<BigInt> {
        self.check_limits(k)?;
        let total = self.monomial_count(k as u32);
        let columns: BTreeMap<Vec<u32>, usize> = monomials(self.n_vars, k as u32)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut echelon = IntegerEchelon::new();
        for (d, g) in &self.generators {
            if *d > k as u32 {
                continue;
            }
            for multiplier in monomials(self.n_vars, k as u32 - d) {
                let mut row: SparseRow = g
                    .terms()
                    .map(|(exps, c)| {
                        let mut shifted = multiplier.clone();
                        for (slot, e) in shifted.iter_mut().zip(exps) {
                            *slot += e;
                        }
                        (columns[&shifted], c.clone())
                    })
                    .collect();
                row.sort_by_key(|(col, _)| *col);
                echelon.insert(row);
            }
        }
        Ok(BigInt::from(total) - BigInt::from(echelon.rank()))
    }
}

/// Exponent vectors of length `n_vars` and total degree `degree`.
fn monomials(n_vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(idx: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == current.len() {
            current[idx] = left;
            out.push(current.clone());
            current[idx] = 0;
            return;
        }
        for e in (0..=left).rev() {
            current[idx] = e;
            go(idx + 1, left - e, current, out);
        }
        current[idx] = 0;
    }
    let mut out = Vec::new();
    if n_vars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, degree, &mut alloc::vec![0; n_vars], &mut out);
    out
}

/// One-shot brute-force `dim (S/I)_k`.
pub fn brute_force_hf(gens: &GeneratorSet, k: usize, limits: OracleLimits) -> Result<BigInt> {
    BruteForceOracle::new(gens, limits)?.hilbert_function(k)
}

/// Which generator list a mismatch came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorList {
    EssentialBoxes,
    AllBoxes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckRow {
    pub k: usize,
    /// Series coefficient of `K(t)/(1-t)^N`.
    pub expected: BigInt,
    pub essential: BigInt,
    pub all_boxes: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub permutation: Permutation,
    pub k: usize,
    pub generators: GeneratorList,
    pub expected: BigInt,
    pub actual: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub permutation: Permutation,
    pub ambient: Ambient,
    pub variable_count: usize,
    pub rows: Vec<CrossCheckRow>,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the brute-force graded dimensions of both Fulton generator
/// lists with the series of `G_w(x_i ↦ 1-t)` for `0 <= k <= k_max`.
pub fn cross_check(w: &Permutation, ambient: Ambient, k_max: usize, limits: OracleLimits) -> Result<CrossCheckReport> {
    cross_check_with(&mut GrothendieckEngine::new(), w, ambient, k_max, limits)
}

pub fn cross_check_with(
    engine: &mut GrothendieckEngine,
    w: &Permutation,
    ambient: Ambient,
    k_max: usize,
    limits: OracleLimits,
) -> Result<CrossCheckReport> {
    let n_vars = ambient.variable_count(w)?;
    let k_poly = hilbert::k_polynomial_of(&engine.grothendieck(w));
    let essential = BruteForceOracle::new(&fulton_generators(w, true, ambient)?, limits)?;
    let all_boxes = BruteForceOracle::new(&fulton_generators(w, false, ambient)?, limits)?;
    for k in 0..=k_max {
        essential.check_limits(k)?;
        all_boxes.check_limits(k)?;
    }
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for k in 0..=k_max {
        let expected = hilbert::hilbert_function(&k_poly, n_vars, k);
        let ess = essential.hilbert_function(k)?;
        let all = all_boxes.hilbert_function(k)?;
        for (generators, actual) in [(GeneratorList::EssentialBoxes, &ess), (GeneratorList::AllBoxes, &all)] {
            if *actual != expected {
                mismatches.push(Mismatch {
                    permutation: w.clone(),
                    k,
                    generators,
                    expected: expected.clone(),
                    actual: actual.clone(),
                });
            }
        }
        rows.push(CrossCheckRow { k, expected, essential: ess, all_boxes: all });
    }
    Ok(CrossCheckReport { permutation: w.clone(), ambient, variable_count: n_vars, rows, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_one_line(word).unwrap()
    }

    fn minor(rows: &[usize], cols: &[usize]) -> (Vec<usize>, Vec<usize>) {
        (rows.to_vec(), cols.to_vec())
    }

    fn shapes(g: &GeneratorSet) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        g.minors.iter().map(|m| (m.rows.clone(), m.cols.clone())).collect()
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn generator_examples() {
        let g = fulton_generators(&Permutation::identity(), true, Ambient::Full(2)).unwrap();
        assert!(g.is_empty());
        assert_eq!(g.variables.len(), 4);

        let g = fulton_generators(&p(&[2, 5, 3, 1, 4]), true, Ambient::Full(5)).unwrap();
        let mut expected: BTreeSet<_> =
            [minor(&[1], &[1]), minor(&[2], &[1]), minor(&[3], &[1])].into_iter().collect();
        for cols in combinations(4, 2) {
            expected.insert(minor(&[1, 2], &cols));
        }
        assert_eq!(shapes(&g), expected);
        assert_eq!(g.len(), 9);

        let w = Permutation::bigrassmannian(1, 2, 2).unwrap();
        let g = fulton_generators(&w, true, Ambient::Full(3)).unwrap();
        assert_eq!(shapes(&g), [minor(&[1, 2], &[1, 2])].into_iter().collect());
    }

    #[test]
    fn effective_generators_stay_in_lambda() {
        let w = p(&[2, 5, 3, 1, 4]);
        for essential_only in [true, false] {
            let g = fulton_generators(&w, essential_only, Ambient::Effective).unwrap();
            assert_eq!(g.variables.len(), 9);
            assert!(g.within_ambient());
        }
    }

    #[test]
    fn expansion_examples() {
        let vars: Vec<_> = (1..=3).flat_map(|i| (1..=3).map(move |j| (i, j))).collect();
        let z = |i: usize, j: usize| MultiPoly::var((i - 1) * 3 + j);
        let m = MinorSpec { rows: vec![3], cols: vec![1], source: (3, 1), rank: 0 };
        assert_eq!(expand_minor(&m, &vars).unwrap(), z(3, 1));
        let m = MinorSpec { rows: vec![1, 2], cols: vec![1, 2], source: (2, 2), rank: 1 };
        let det = &(&z(1, 1) * &z(2, 2)) - &(&z(1, 2) * &z(2, 1));
        assert_eq!(expand_minor(&m, &vars).unwrap(), det);
        let m = MinorSpec { rows: vec![1, 2, 3], cols: vec![1, 2, 3], source: (3, 3), rank: 2 };
        let det = expand_minor(&m, &vars).unwrap();
        assert_eq!(det.num_terms(), 6);
        assert_eq!(det.evaluate_all_ones(), BigInt::from(0));
        assert!(det.is_homogeneous());
        assert_eq!(det.total_degree(), Ok(3));
        let outside = MinorSpec { rows: vec![4], cols: vec![1], source: (4, 1), rank: 0 };
        assert_eq!(expand_minor(&outside, &vars), Err(Error::VariableOutsideAmbient { row: 4, col: 1 }));
    }

    #[test]
    fn brute_force_examples() {
        let limits = OracleLimits::default();
        let w = p(&[1, 3, 2]);
        let g = fulton_generators(&w, true, Ambient::Full(3)).unwrap();
        assert_eq!(brute_force_hf(&g, 0, limits).unwrap(), BigInt::from(1));
        assert_eq!(brute_force_hf(&g, 2, limits).unwrap(), BigInt::from(44));

        let g = fulton_generators(&p(&[2, 1]), true, Ambient::Effective).unwrap();
        assert_eq!(g.variables, vec![(1, 1)]);
        assert_eq!(brute_force_hf(&g, 0, limits).unwrap(), BigInt::from(1));
        assert_eq!(brute_force_hf(&g, 1, limits).unwrap(), BigInt::from(0));
    }

    #[test]
    fn guard_refuses_large_problems() {
        let g = fulton_generators(&p(&[1, 3, 2]), true, Ambient::Full(3)).unwrap();
        let tight = OracleLimits { max_monomials: 10, max_multiples: 200_000 };
        assert!(matches!(
            brute_force_hf(&g, 2, tight),
            Err(Error::TooLarge { what: "monomials", count: 45, limit: 10 })
        ));
        let tight = OracleLimits { max_monomials: 20_000, max_multiples: 5 };
        assert!(matches!(
            brute_force_hf(&g, 3, tight),
            Err(Error::TooLarge { what: "generator multiples", count: 9, .. })
        ));
    }

    #[test]
    fn cross_check_examples() {
        let limits = OracleLimits::default();
        let r = cross_check(&Permutation::identity(), Ambient::Full(2), 3, limits).unwrap();
        assert!(r.passed());
        let expected: Vec<BigInt> = (0..=3u64).map(|k| binomial(k + 3, 3)).collect();
        let got: Vec<BigInt> = r.rows.iter().map(|row| row.essential.clone()).collect();
        assert_eq!(got, expected);

        assert!(cross_check(&p(&[1, 3, 2]), Ambient::Full(3), 4, limits).unwrap().passed());
        assert!(cross_check(&p(&[2, 5, 3, 1, 4]), Ambient::Effective, 3, limits).unwrap().passed());
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 4), vec![vec![4]]);
        assert_eq!(monomials(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials(0, 1).is_empty());
        assert_eq!(monomials(4, 0), vec![vec![0; 4]]);
    }
}
