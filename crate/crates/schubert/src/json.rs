//! Versioned JSON documents.
//!
//! Big integers are decimal strings, rationals are `"a/b"` strings with
//! `b >= 1`, boxes are `[row, col]`, and every list is in a canonical order,
//! so output is byte-stable across runs and thread counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use schubert_core::diagram::{effective_region, essential_set, is_dominant, rank_matrix, rothe_diagram};
use schubert_core::ideal::{CrossCheckReport, GeneratorList};
use schubert_core::{Ambient, BoxSet, GeneratorSet, HilbertReport, MultiPoly, Permutation, UniPoly};
use serde::Serialize;

use crate::verify::{CheckOutcome, JobReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Term {
    pub coeff: String,
    pub exps: Vec<u32>,
}

pub fn poly_terms(p: &MultiPoly) -> Vec<Term> {
    p.terms().map(|(exps, c)| Term { coeff: c.to_string(), exps: exps.to_vec() }).collect()
}

pub fn int(v: &BigInt) -> String {
    v.to_string()
}

pub fn rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Ascending coefficient list.
pub fn uni_coeffs(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(int).collect()
}

pub fn boxes(b: &BoxSet) -> Vec<[usize; 2]> {
    b.iter().map(|(i, j)| [i, j]).collect()
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AmbientDoc {
    Full { n: usize },
    Effective,
}

impl From<Ambient> for AmbientDoc {
    fn from(a: Ambient) -> Self {
        match a {
            Ambient::Full(n) => AmbientDoc::Full { n },
            Ambient::Effective => AmbientDoc::Effective,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GrothDoc {
    pub schema_version: u32,
    pub permutation: Vec<usize>,
    pub engine: &'static str,
    pub degree: u32,
    pub min_degree: u32,
    pub terms: Vec<Term>,
}

impl GrothDoc {
    pub fn new(w: &Permutation, engine: &'static str, g: &MultiPoly) -> Self {
        GrothDoc {
            schema_version: SCHEMA_VERSION,
            permutation: w.word().to_vec(),
            engine,
            degree: g.total_degree().unwrap_or(0),
            min_degree: g.min_total_degree().unwrap_or(0),
            terms: poly_terms(g),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DiagramDoc {
    pub schema_version: u32,
    pub permutation: Vec<usize>,
    pub n: usize,
    pub coxeter_length: usize,
    pub descents: Vec<usize>,
    pub rank_matrix: Vec<Vec<usize>>,
    pub rothe_diagram: Vec<[usize; 2]>,
    pub essential_set: Vec<[usize; 2]>,
    pub effective_region: Vec<[usize; 2]>,
    pub dominant: bool,
}

impl DiagramDoc {
    pub fn new(w: &Permutation, n: usize) -> schubert_core::Result<Self> {
        Ok(DiagramDoc {
            schema_version: SCHEMA_VERSION,
            permutation: w.word().to_vec(),
            n,
            coxeter_length: w.coxeter_length(),
            descents: w.descents(),
            rank_matrix: rank_matrix(w, n)?.rows(),
            rothe_diagram: boxes(&rothe_diagram(w)),
            essential_set: boxes(&essential_set(w)),
            effective_region: boxes(&effective_region(w)),
            dominant: is_dominant(w),
        })
    }
}

#[derive(Debug, Serialize)]
pub struct MinorDoc {
    pub source: [usize; 2],
    pub rank: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
}

#[derive(Debug, Serialize)]
pub struct IdealDoc {
    pub schema_version: u32,
    pub permutation: Vec<usize>,
    pub ambient: AmbientDoc,
    pub essential_only: bool,
    /// Polynomial variable `p + 1` is `variables[p]`.
    pub variables: Vec<[usize; 2]>,
    pub generators: Vec<MinorDoc>,
}

impl IdealDoc {
    pub fn new(
        w: &Permutation,
        ambient: Ambient,
        essential_only: bool,
        gens: &GeneratorSet,
        expand: bool,
    ) -> schubert_core::Result<Self> {
        let polys = if expand { Some(gens.polynomials()?) } else { None };
        let generators = gens
            .minors
            .iter()
            .enumerate()
            .map(|(idx, m)| MinorDoc {
                source: [m.source.0, m.source.1],
                rank: m.rank,
                rows: m.rows.clone(),
                cols: m.cols.clone(),
                terms: polys.as_ref().map(|ps| poly_terms(&ps[idx])),
            })
            .collect();
        Ok(IdealDoc {
            schema_version: SCHEMA_VERSION,
            permutation: w.word().to_vec(),
            ambient: ambient.into(),
            essential_only,
            variables: gens.variables.iter().map(|&(i, j)| [i, j]).collect(),
            generators,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct HilbertDoc {
    pub schema_version: u32,
    pub permutation: Vec<usize>,
    pub ambient: AmbientDoc,
    pub variable_count: usize,
    pub k_polynomial: Vec<String>,
    pub hf_table: Vec<String>,
    pub hilbert_polynomial: Vec<String>,
    pub postulation: i64,
    pub regularity: usize,
    pub hilbertian: bool,
}

impl From<&HilbertReport> for HilbertDoc {
    fn from(r: &HilbertReport) -> Self {
        HilbertDoc {
            schema_version: SCHEMA_VERSION,
            permutation: r.permutation.word().to_vec(),
            ambient: r.ambient.into(),
            variable_count: r.variable_count,
            k_polynomial: uni_coeffs(&r.k_polynomial),
            hf_table: r.hf_table.iter().map(int).collect(),
            hilbert_polynomial: r.hilbert_polynomial.coeffs().iter().map(rational).collect(),
            postulation: r.postulation,
            regularity: r.regularity,
            hilbertian: r.hilbertian,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OracleRowDoc {
    pub k: usize,
    pub expected: String,
    pub essential: String,
    pub all_boxes: String,
}

#[derive(Debug, Serialize)]
pub struct MismatchDoc {
    pub k: usize,
    pub generators: &'static str,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Serialize)]
pub struct OracleDoc {
    pub schema_version: u32,
    pub permutation: Vec<usize>,
    pub ambient: AmbientDoc,
    pub variable_count: usize,
    pub passed: bool,
    pub rows: Vec<OracleRowDoc>,
    pub mismatches: Vec<MismatchDoc>,
}

pub fn generator_list_name(g: GeneratorList) -> &'static str {
    match g {
        GeneratorList::EssentialBoxes => "essential",
        GeneratorList::AllBoxes => "all-boxes",
    }
}

impl From<&CrossCheckReport> for OracleDoc {
    fn from(r: &CrossCheckReport) -> Self {
        OracleDoc {
            schema_version: SCHEMA_VERSION,
            permutation: r.permutation.word().to_vec(),
            ambient: r.ambient.into(),
            variable_count: r.variable_count,
            passed: r.passed(),
            rows: r
                .rows
                .iter()
                .map(|row| OracleRowDoc {
                    k: row.k,
                    expected: int(&row.expected),
                    essential: int(&row.essential),
                    all_boxes: int(&row.all_boxes),
                })
                .collect(),
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchDoc {
                    k: m.k,
                    generators: generator_list_name(m.generators),
                    expected: int(&m.expected),
                    actual: int(&m.actual),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub check: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub counterexamples: Vec<CounterexampleDoc>,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleDoc {
    pub permutation: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub schema_version: u32,
    pub n: usize,
    pub permutations: usize,
    pub passing: usize,
    pub dominant: usize,
    pub checks: Vec<CheckDoc>,
}

impl From<&JobReport> for VerifyDoc {
    fn from(r: &JobReport) -> Self {
        VerifyDoc {
            schema_version: SCHEMA_VERSION,
            n: r.n,
            permutations: r.permutations,
            passing: r.passing,
            dominant: r.dominant,
            checks: r
                .checks
                .iter()
                .map(|c| CheckDoc {
                    check: c.check.name(),
                    passed: c.passed,
                    failed: c.counterexamples.len(),
                    skipped: c.skipped,
                    counterexamples: c.counterexamples.iter().map(counterexample).collect(),
                })
                .collect(),
        }
    }
}

fn counterexample(c: &CheckOutcome) -> CounterexampleDoc {
    CounterexampleDoc { permutation: c.permutation.word().to_vec(), detail: c.detail.clone() }
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents contain only strings, integers and arrays")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_formats() {
        assert_eq!(rational(&BigRational::new(BigInt::from(3), BigInt::from(1))), "3/1");
        assert_eq!(rational(&BigRational::new(BigInt::from(-2), BigInt::from(4))), "-1/2");
        assert_eq!(int(&BigInt::from(-17)), "-17");
    }

    #[test]
    fn poly_terms_follow_canonical_order() {
        let w: Permutation = "132".parse().unwrap();
        let g = schubert_core::groth::grothendieck(&w);
        let doc = to_string(&poly_terms(&g));
        let parsed: serde_json::Value = serde_json::from_str(&doc).unwrap();
        let exps: Vec<_> = parsed.as_array().unwrap().iter().map(|t| t["exps"].clone()).collect();
        assert_eq!(exps, vec![serde_json::json!([1, 1]), serde_json::json!([1]), serde_json::json!([0, 1])]);
        assert_eq!(parsed[0]["coeff"], "-1");
    }

    #[test]
    fn ambient_tagging() {
        assert_eq!(to_string(&AmbientDoc::from(Ambient::Full(5))), "{\n  \"kind\": \"full\",\n  \"n\": 5\n}");
        assert_eq!(to_string(&AmbientDoc::from(Ambient::Effective)), "{\n  \"kind\": \"effective\"\n}");
    }
}
