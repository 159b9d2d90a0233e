//! Hilbert-theoretic invariants of full and effective matrix Schubert
//! varieties.
//!
//! For a quotient `S/I` of a polynomial ring in `N` variables the Hilbert
//! series is `K(t)/(1-t)^N`. The coordinate ring of the matrix Schubert
//! variety of `w` has `K(t) = G_w(x_i ↦ 1-t)`; the same numerator serves the
//! effective ring on the `|λ(w)|` variables of the effective region. Both
//! rings are Cohen–Macaulay domains, which gives
//! `post = deg K - N` and `reg = deg K - ℓ(w)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagram;
use crate::groth::GrothendieckEngine;
use crate::poly::binomial;
use crate::{Error, MultiPoly, Permutation, RatUniPoly, Result, UniPoly};

/// Polynomial ring a Schubert determinantal ideal lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// All `n²` entries of the generic `n × n` matrix.
    Full(usize),
    /// Only the entries in the effective region `λ(w)`.
    Effective,
}

impl Ambient {
    /// Full ambient on the smallest grid holding `w`.
    pub fn full_for(w: &Permutation) -> Self {
        Ambient::Full(w.normalize().size())
    }

    /// Ambient variables `z_{ij}` as boxes in row-major order.
    pub fn variables(&self, w: &Permutation) -> Result<Vec<(usize, usize)>> {
        match *self {
            Ambient::Full(n) => {
                let needed = w.normalize().size();
                if n < needed {
                    return Err(Error::GridTooSmall { needed, given: n });
                }
                Ok((1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect())
            }
            Ambient::Effective => {
                let lam = diagram::effective_region(w);
                if lam.is_empty() {
                    return Err(Error::EmptyAmbient);
                }
                Ok(lam.iter().collect())
            }
        }
    }

    /// `N`: `n²` for the full ambient, `|λ(w)|` for the effective one.
    pub fn variable_count(&self, w: &Permutation) -> Result<usize> {
        match *self {
            Ambient::Full(n) => {
                let needed = w.normalize().size();
                if n < needed {
                    return Err(Error::GridTooSmall { needed, given: n });
                }
                Ok(n * n)
            }
            Ambient::Effective => match diagram::effective_region(w).len() {
                0 => Err(Error::EmptyAmbient),
                len => Ok(len),
            },
        }
    }
}

/// `K(t) = G(x_i ↦ 1-t)` for a Grothendieck polynomial `G`.
pub fn k_polynomial_of(groth: &MultiPoly) -> UniPoly {
    groth.specialize_to_1_minus_t()
}

pub fn k_polynomial(w: &Permutation) -> UniPoly {
    k_polynomial_of(&GrothendieckEngine::new().grothendieck(w))
}

/// Coefficient of `t^k` in `K(t)/(1-t)^N`:
/// `Σ_j K_j · C(N-1+k-j, N-1)`, terms with `j > k` dropped.
pub fn hilbert_function(k_poly: &UniPoly, n_vars: usize, k: usize) -> BigInt {
    assert!(n_vars >= 1, "the ambient ring needs at least one variable");
    let r = (n_vars - 1) as u64;
    k_poly
        .coeffs()
        .iter()
        .enumerate()
        .take(k + 1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| c * binomial(r + (k - j) as u64, r))
        .sum()
}

/// `Σ_j K_j · (k-j+N-1)(k-j+N-2)⋯(k-j+1)` as an integer polynomial in `k`,
/// together with `(N-1)!`; their quotient is the Hilbert polynomial.
pub fn hilbert_numerator(k_poly: &UniPoly, n_vars: usize) -> (UniPoly, BigInt) {
    assert!(n_vars >= 1, "the ambient ring needs at least one variable");
    let mut factorial = BigInt::one();
    for m in 1..n_vars {
        factorial *= BigInt::from(m);
    }
    let mut total = alloc::vec![BigInt::zero(); n_vars];
    for (j, c) in k_poly.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = alloc::vec![c.clone()];
        for m in 1..n_vars {
            let shift = BigInt::from(m as i64 - j as i64);
            term.push(BigInt::zero());
            for d in (0..term.len() - 1).rev() {
                let low = &term[d] * &shift;
                let high = core::mem::take(&mut term[d]);
                term[d + 1] += high;
                term[d] = low;
            }
        }
        for (acc, t) in total.iter_mut().zip(term) {
            *acc += t;
        }
    }
    (UniPoly::from_coeffs(total), factorial)
}

/// `Σ_j K_j · (k-j+N-1)(k-j+N-2)⋯(k-j+1)/(N-1)!` as a polynomial in `k`.
pub fn hilbert_polynomial(k_poly: &UniPoly, n_vars: usize) -> RatUniPoly {
    let (numerator, factorial) = hilbert_numerator(k_poly, n_vars);
    RatUniPoly::from_coeffs(
        numerator.coeffs().iter().map(|c| BigRational::new(c.clone(), factorial.clone())).collect(),
    )
}

/// `deg K - N`. Valid for Cohen–Macaulay domains; other numerators are out of contract.
pub fn postulation(k_poly: &UniPoly, n_vars: usize) -> Result<i64> {
    let deg = k_poly.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(deg as i64 - n_vars as i64)
}

/// Largest `k` in `0..=k_upper` with `HF(k) != HP(k)`, found by scanning.
pub fn empirical_postulation(k_poly: &UniPoly, n_vars: usize, k_upper: usize) -> Option<usize> {
    let (numerator, factorial) = hilbert_numerator(k_poly, n_vars);
    (0..=k_upper).rev().find(|&k| hilbert_function(k_poly, n_vars, k) * &factorial != numerator.eval(&BigInt::from(k)))
}

/// Whether the closed-form postulation agrees with the scan over
/// `0..=deg K + 3`: the last disagreement sits exactly at `deg K - N` when
/// that is nonnegative, and there is none otherwise.
pub fn postulation_is_consistent(k_poly: &UniPoly, n_vars: usize) -> bool {
    let Ok(post) = postulation(k_poly, n_vars) else { return false };
    let upper = k_poly.degree().unwrap_or(0) + 3;
    let observed = empirical_postulation(k_poly, n_vars, upper);
    match usize::try_from(post) {
        Ok(p) => observed == Some(p),
        Err(_) => observed.is_none(),
    }
}

/// `deg(G_w) - ℓ(w)`, the same for the full and effective ambients.
pub fn regularity(w: &Permutation) -> usize {
    regularity_with(&mut GrothendieckEngine::new(), w)
}

pub fn regularity_with(engine: &mut GrothendieckEngine, w: &Permutation) -> usize {
    engine.degree(w) - w.coxeter_length()
}

/// All Hilbert invariants of one `(w, ambient)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertReport {
    pub permutation: Permutation,
    pub ambient: Ambient,
    pub variable_count: usize,
    pub k_polynomial: UniPoly,
    /// `HF(k)` for `k = 0..=k_max`.
    pub hf_table: Vec<BigInt>,
    pub hilbert_polynomial: RatUniPoly,
    pub postulation: i64,
    pub regularity: usize,
    pub hilbertian: bool,
}

impl HilbertReport {
    pub fn build(w: &Permutation, ambient: Ambient, k_max: Option<usize>) -> Result<Self> {
        Self::build_with(&mut GrothendieckEngine::new(), w, ambient, k_max)
    }

    /// Without `k_max` the table runs to `max(deg K - N + 3, 5)`.
    pub fn build_with(
        engine: &mut GrothendieckEngine,
        w: &Permutation,
        ambient: Ambient,
        k_max: Option<usize>,
    ) -> Result<Self> {
        let n_vars = ambient.variable_count(w)?;
        let groth = engine.grothendieck(w);
        let k_poly = k_polynomial_of(&groth);
        let post = postulation(&k_poly, n_vars)?;
        let k_max = k_max.unwrap_or_else(|| default_k_max(post));
        let hf_table = (0..=k_max).map(|k| hilbert_function(&k_poly, n_vars, k)).collect();
        let degree = groth.total_degree()? as usize;
        Ok(HilbertReport {
            permutation: w.clone(),
            ambient,
            variable_count: n_vars,
            hilbert_polynomial: hilbert_polynomial(&k_poly, n_vars),
            k_polynomial: k_poly,
            hf_table,
            postulation: post,
            regularity: degree - w.coxeter_length(),
            hilbertian: post < 0,
        })
    }
}

pub fn default_k_max(post: i64) -> usize {
    (post + 3).max(5) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_one_line(word).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// HF of a polynomial ring in `n` variables, by counting monomials of
    /// degree `k` through the stars-and-bars recursion.
    fn monomial_count(n: usize, k: usize) -> u64 {
        let mut row = vec![1u64; k + 1];
        for _ in 1..n {
            for d in 1..=k {
                row[d] += row[d - 1];
            }
        }
        if n == 0 {
            return u64::from(k == 0);
        }
        row[k]
    }

    #[test]
    fn k_polynomial_examples() {
        assert_eq!(k_polynomial(&Permutation::identity()), UniPoly::one());
        assert_eq!(k_polynomial(&p(&[2, 1])), UniPoly::from_i64s(&[1, -1]));
        assert_eq!(k_polynomial(&p(&[1, 3, 2])), UniPoly::from_i64s(&[1, 0, -1]));
    }

    #[test]
    fn hilbert_function_examples() {
        let quadric = UniPoly::from_i64s(&[1, 0, -1]);
        assert_eq!(hilbert_function(&quadric, 9, 0), int(1));
        // 45 quadratic monomials in 9 variables minus the one generator
        assert_eq!(hilbert_function(&quadric, 9, 2), int(monomial_count(9, 2) as i64 - 1));
        assert_eq!(hilbert_function(&quadric, 9, 2), int(44));
        // polynomial ring in 3 variables
        let linear = UniPoly::from_i64s(&[1, -1]);
        assert_eq!(hilbert_function(&linear, 4, 3), int(monomial_count(3, 3) as i64));
        assert_eq!(hilbert_function(&linear, 4, 3), int(10));
        for n in 1..6 {
            for k in 0..6 {
                assert_eq!(hilbert_function(&UniPoly::one(), n, k), int(monomial_count(n, k) as i64));
            }
        }
    }

    #[test]
    fn hilbert_polynomial_examples() {
        assert_eq!(hilbert_polynomial(&UniPoly::one(), 1), RatUniPoly::constant(BigRational::one()));
        assert!(hilbert_polynomial(&UniPoly::from_i64s(&[1, -1]), 1).is_zero());
        let quadric = UniPoly::from_i64s(&[1, 0, -1]);
        let hp = hilbert_polynomial(&quadric, 9);
        assert_eq!(hp.degree(), Some(7));
        assert_eq!(hp.eval(&int(2)), BigRational::from_integer(int(44)));
        for k in 2..=10 {
            assert_eq!(
                hp.eval(&int(k as i64)),
                BigRational::from_integer(hilbert_function(&quadric, 9, k))
            );
        }
    }

    #[test]
    fn numerator_matches_rational_product() {
        let k_poly = k_polynomial(&p(&[2, 5, 3, 1, 4]));
        for n_vars in [1, 2, 9, 25] {
            let mut expected = RatUniPoly::zero();
            for (j, c) in k_poly.coeffs().iter().enumerate() {
                let mut term = RatUniPoly::constant(BigRational::from_integer(c.clone()));
                for m in 1..n_vars {
                    term = term.mul_linear(&int(m as i64 - j as i64));
                }
                expected = &expected + &term;
            }
            let (_, factorial) = hilbert_numerator(&k_poly, n_vars);
            assert_eq!(hilbert_polynomial(&k_poly, n_vars), expected.scale(&BigRational::new(int(1), factorial)));
        }
    }

    #[test]
    fn postulation_examples() {
        let w = p(&[2, 5, 3, 1, 4]);
        let k = k_polynomial(&w);
        // deg K = 6, so 6 - 25 = -19 in the full 5×5 ambient
        assert_eq!(k.degree(), Some(6));
        assert_eq!(postulation(&k, 25), Ok(-19));
        assert_eq!(postulation(&k, 9), Ok(-3));
        let k21 = UniPoly::from_i64s(&[1, -1]);
        assert_eq!(postulation(&k21, 1), Ok(0));
        assert_eq!(empirical_postulation(&k21, 1, 4), Some(0));
        assert!(postulation_is_consistent(&k21, 1));
        assert!(postulation_is_consistent(&k, 9));
        assert_eq!(empirical_postulation(&k, 9, 9), None);
        assert_eq!(postulation(&UniPoly::zero(), 3), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&Permutation::identity()), 0);
        assert_eq!(regularity(&p(&[2, 5, 3, 1, 4])), 1);
        assert_eq!(regularity(&p(&[3, 4, 1, 2])), 0);
        assert_eq!(regularity(&p(&[3, 1, 2])), 0);
    }

    #[test]
    fn report_examples() {
        let r = HilbertReport::build(&p(&[2, 1]), Ambient::Full(2), None).unwrap();
        assert!(r.hilbertian);
        assert_eq!(r.postulation, -3);
        assert_eq!(r.variable_count, 4);

        let r = HilbertReport::build(&p(&[2, 5, 3, 1, 4]), Ambient::Effective, None).unwrap();
        assert!(r.hilbertian);
        assert_eq!(r.postulation, -3);
        assert_eq!(r.regularity, 1);
        assert_eq!(r.hf_table.len(), 6);

        let r = HilbertReport::build(&p(&[2, 1]), Ambient::Effective, None).unwrap();
        assert!(!r.hilbertian);
        assert_eq!(r.postulation, 0);
        assert_eq!(r.hf_table[0], int(1));
        assert!(r.hf_table[1..].iter().all(Zero::is_zero));
        assert!(r.hilbert_polynomial.is_zero());

        assert_eq!(
            HilbertReport::build(&p(&[2, 5, 3, 1, 4]), Ambient::Full(4), None),
            Err(Error::GridTooSmall { needed: 5, given: 4 })
        );
        assert_eq!(
            HilbertReport::build(&Permutation::identity(), Ambient::Effective, None),
            Err(Error::EmptyAmbient)
        );
    }

    #[test]
    fn default_k_max_straddles_postulation() {
        assert_eq!(default_k_max(-17), 5);
        assert_eq!(default_k_max(0), 5);
        assert_eq!(default_k_max(4), 7);
    }
}
