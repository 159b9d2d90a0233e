//! Exhaustive sweeps over `S_n`.
//!
//! Permutations are processed in parallel with one memoizing engine per
//! worker; results come back in lexicographic order whatever the thread
//! count, so reports are deterministic.

use std::fmt::Write;
use std::ops::Range;

use num_traits::Zero;
use rayon::prelude::*;
use schubert_core::diagram::{effective_region, essential_set, is_dominant, rothe_diagram};
use schubert_core::hilbert::{hilbert_function, hilbert_polynomial, k_polynomial_of, postulation, postulation_is_consistent};
use schubert_core::ideal::cross_check_with;
use schubert_core::{Ambient, Error, GrothendieckEngine, OracleLimits, Permutation, PipeDreamTable};

use crate::render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Check {
    EngineAgreement,
    DegreeBound,
    BinomialBound,
    HilbertianFull,
    HilbertianEffective,
    LengthDiagram,
    Oracle,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::EngineAgreement,
        Check::DegreeBound,
        Check::BinomialBound,
        Check::HilbertianFull,
        Check::HilbertianEffective,
        Check::LengthDiagram,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::EngineAgreement => "engine-agreement",
            Check::DegreeBound => "degree-bound",
            Check::BinomialBound => "binomial-bound",
            Check::HilbertianFull => "hilbertian-full",
            Check::HilbertianEffective => "hilbertian-effective",
            Check::LengthDiagram => "length-diagram",
            Check::Oracle => "oracle",
        }
    }
}

/// Scope of the brute-force oracle inside a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleSettings {
    pub k_max: usize,
    /// Effective-ambient runs only for `|λ(w)|` up to this.
    pub max_effective_boxes: usize,
    /// Full-ambient runs only for `n` up to this.
    pub full_up_to_n: usize,
    pub limits: OracleLimits,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings { k_max: 4, max_effective_boxes: 6, full_up_to_n: 3, limits: OracleLimits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationJob {
    pub n: usize,
    pub checks: Vec<Check>,
    /// Worker threads; `None` uses the global pool.
    pub parallelism: Option<usize>,
    pub oracle: OracleSettings,
}

impl VerificationJob {
    pub fn new(n: usize, checks: &[Check]) -> Self {
        let mut checks = checks.to_vec();
        checks.sort();
        checks.dedup();
        VerificationJob { n, checks, parallelism: None, oracle: OracleSettings::default() }
    }

    pub fn all_checks(n: usize) -> Self {
        Self::new(n, &Check::ALL)
    }

    pub fn run(&self) -> schubert_core::Result<JobReport> {
        match self.parallelism {
            Some(threads) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .expect("thread pool with a positive worker count");
                pool.install(|| self.run_in_pool())
            }
            None => self.run_in_pool(),
        }
    }

    fn run_in_pool(&self) -> schubert_core::Result<JobReport> {
        let perms: Vec<Permutation> = Permutation::enumerate(self.n)?.collect();
        let table = if self.checks.contains(&Check::EngineAgreement) {
            Some(parallel_pipe_dreams(self.n)?)
        } else {
            None
        };
        let verdicts: Vec<Vec<Verdict>> = perms
            .par_iter()
            .map_init(GrothendieckEngine::new, |engine, w| {
                self.checks.iter().map(|&c| self.evaluate(c, engine, table.as_ref(), w)).collect()
            })
            .collect();

        let mut summaries: Vec<CheckSummary> = self
            .checks
            .iter()
            .map(|&check| CheckSummary { check, passed: 0, skipped: 0, counterexamples: Vec::new() })
            .collect();
        let mut passing = 0;
        for (w, row) in perms.iter().zip(verdicts) {
            let mut ok = true;
            for (summary, verdict) in summaries.iter_mut().zip(row) {
                match verdict {
                    Verdict::Pass => summary.passed += 1,
                    Verdict::Skip => summary.skipped += 1,
                    Verdict::Fail(detail) => {
                        ok = false;
                        summary.counterexamples.push(CheckOutcome { permutation: w.clone(), detail });
                    }
                }
            }
            passing += usize::from(ok);
        }
        Ok(JobReport {
            n: self.n,
            permutations: perms.len(),
            passing,
            dominant: perms.iter().filter(|w| is_dominant(w)).count(),
            checks: summaries,
        })
    }

    fn evaluate(
        &self,
        check: Check,
        engine: &mut GrothendieckEngine,
        table: Option<&PipeDreamTable>,
        w: &Permutation,
    ) -> Verdict {
        match check {
            Check::EngineAgreement => {
                let transition = engine.grothendieck(w);
                let table = table.expect("table is built whenever engine agreement is selected");
                let pipe = table.get(w).cloned().unwrap_or_default();
                if transition == pipe {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!(
                        "transition: {transition}\npipe dreams: {pipe}\n{}",
                        render::grid(w, self.n)
                    ))
                }
            }
            Check::DegreeBound => {
                let deg = engine.degree(w);
                let lam = effective_region(w).len();
                let dominant = is_dominant(w);
                if deg <= lam && (deg == lam) == dominant {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!(
                        "deg G = {deg}, |λ| = {lam}, dominant = {dominant}\nG = {}\n{}",
                        engine.grothendieck(w),
                        render::grid(w, self.n)
                    ))
                }
            }
            Check::BinomialBound => {
                let deg = engine.degree(w);
                let bound = self.n * self.n.saturating_sub(1) / 2;
                if deg <= bound {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!("deg G = {deg} exceeds C(n,2) = {bound}"))
                }
            }
            Check::HilbertianFull => {
                let k = k_polynomial_of(&engine.grothendieck(w));
                let n_vars = self.n * self.n;
                match postulation(&k, n_vars) {
                    Ok(post) if post < 0 && postulation_is_consistent(&k, n_vars) => Verdict::Pass,
                    Ok(post) => Verdict::Fail(format!("K = {k}, N = {n_vars}, post = {post}")),
                    Err(e) => Verdict::Fail(e.to_string()),
                }
            }
            Check::HilbertianEffective => self.hilbertian_effective(engine, w),
            Check::LengthDiagram => {
                let d = rothe_diagram(w);
                let e = essential_set(w);
                let lam = effective_region(w);
                let ok = w.coxeter_length() == d.len()
                    && e.is_subset(&d)
                    && d.is_subset(&lam)
                    && lam.is_young_diagram()
                    && is_dominant(w) == d.is_young_diagram();
                if ok {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!(
                        "ℓ = {}, D = {}, E = {}, λ = {}\n{}",
                        w.coxeter_length(),
                        render::box_list(&d),
                        render::box_list(&e),
                        render::box_list(&lam),
                        render::grid(w, self.n)
                    ))
                }
            }
            Check::Oracle => self.oracle(engine, w),
        }
    }

    fn hilbertian_effective(&self, engine: &mut GrothendieckEngine, w: &Permutation) -> Verdict {
        let dominant = is_dominant(w);
        if w.is_identity() {
            // The effective ring is the field itself: HF = 1, 0, 0, … and HP = 0.
            return Verdict::Pass;
        }
        let k = k_polynomial_of(&engine.grothendieck(w));
        let n_vars = effective_region(w).len();
        let post = match postulation(&k, n_vars) {
            Ok(p) => p,
            Err(e) => return Verdict::Fail(e.to_string()),
        };
        let mut ok = (post < 0) == !dominant && postulation_is_consistent(&k, n_vars);
        if dominant {
            let hf0 = hilbert_function(&k, n_vars, 0);
            let hp0 = hilbert_polynomial(&k, n_vars).eval(&0.into());
            ok &= post == 0 && hf0 == 1.into() && hp0.is_zero();
        }
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("K = {k}, N = {n_vars}, post = {post}, dominant = {dominant}"))
        }
    }

    fn oracle(&self, engine: &mut GrothendieckEngine, w: &Permutation) -> Verdict {
        let s = &self.oracle;
        let mut ambients = Vec::new();
        if self.n <= s.full_up_to_n {
            ambients.push(Ambient::Full(self.n));
        }
        if !w.is_identity() && effective_region(w).len() <= s.max_effective_boxes {
            ambients.push(Ambient::Effective);
        }
        let mut ran = false;
        let mut failures = String::new();
        for ambient in ambients {
            match cross_check_with(engine, w, ambient, s.k_max, s.limits) {
                Ok(report) => {
                    ran = true;
                    for m in &report.mismatches {
                        let _ = writeln!(
                            failures,
                            "{ambient:?} k = {}: {:?} gives {}, series gives {}",
                            m.k, m.generators, m.actual, m.expected
                        );
                    }
                }
                Err(Error::TooLarge { .. }) => {}
                Err(e) => {
                    ran = true;
                    let _ = writeln!(failures, "{ambient:?}: {e}");
                }
            }
        }
        if !failures.is_empty() {
            Verdict::Fail(failures)
        } else if ran {
            Verdict::Pass
        } else {
            Verdict::Skip
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Verdict {
    Pass,
    Skip,
    Fail(String),
}

/// One failing permutation with diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub permutation: Permutation,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSummary {
    pub check: Check,
    pub passed: usize,
    pub skipped: usize,
    /// Failing permutations in lexicographic order.
    pub counterexamples: Vec<CheckOutcome>,
}

impl CheckSummary {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobReport {
    pub n: usize,
    pub permutations: usize,
    /// Permutations passing every selected check.
    pub passing: usize,
    pub dominant: usize,
    pub checks: Vec<CheckSummary>,
}

impl JobReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::ok)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{}: {} pass, {} fail", c.check.name(), c.passed, c.counterexamples.len());
            if c.skipped > 0 {
                let _ = write!(out, ", {} skipped", c.skipped);
            }
            out.push('\n');
            for ce in &c.counterexamples {
                let _ = writeln!(out, "  counterexample {}:", ce.permutation);
                for line in ce.detail.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let _ = writeln!(out, "dominant permutations: {}", self.dominant);
        let _ = writeln!(out, "{}/{} permutations pass", self.passing, self.permutations);
        out
    }
}

/// Mask ranges covering `0..2^cells` in at most `parts` pieces.
fn mask_chunks(cells: usize, parts: u64) -> Vec<Range<u64>> {
    let total = 1u64 << cells;
    let step = total.div_ceil(parts.max(1)).max(1);
    (0..total).step_by(step as usize).map(|start| start..(start + step).min(total)).collect()
}

/// The pipe-dream table for `S_n`, with the subset enumeration split into
/// chunks across the pool and the partial tables merged.
pub fn parallel_pipe_dreams(n: usize) -> schubert_core::Result<PipeDreamTable> {
    let cells = PipeDreamTable::cell_count(n)?;
    let parts = (rayon::current_num_threads() as u64 * 4).max(1);
    mask_chunks(cells, parts)
        .into_par_iter()
        .map(|range| PipeDreamTable::build_masks(n, range))
        .try_reduce(|| PipeDreamTable::build_masks(n, 0..0).expect("size checked above"), |a, b| Ok(a.merge(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_the_range() {
        for cells in [0, 1, 3, 10] {
            for parts in [1, 3, 7, 64] {
                let chunks = mask_chunks(cells, parts);
                assert_eq!(chunks.first().unwrap().start, 0);
                assert_eq!(chunks.last().unwrap().end, 1 << cells);
                assert!(chunks.windows(2).all(|p| p[0].end == p[1].start));
            }
        }
    }

    #[test]
    fn parallel_table_matches_serial() {
        for n in 1..=4 {
            assert_eq!(parallel_pipe_dreams(n).unwrap(), PipeDreamTable::build(n).unwrap());
        }
    }

    #[test]
    fn degree_bound_on_s4() {
        let report = VerificationJob::new(4, &[Check::DegreeBound]).run().unwrap();
        assert!(report.passed());
        assert_eq!(report.passing, 24);
        assert_eq!(report.dominant, 14);
        assert!(report.to_text().ends_with("24/24 permutations pass\n"));
    }

    #[test]
    fn all_checks_on_s3_independent_of_threads() {
        let mut job = VerificationJob::all_checks(3);
        job.parallelism = Some(1);
        let one = job.run().unwrap();
        job.parallelism = Some(4);
        let four = job.run().unwrap();
        assert_eq!(one, four);
        assert!(one.passed(), "{}", one.to_text());
        let oracle = one.checks.iter().find(|c| c.check == Check::Oracle).unwrap();
        assert_eq!(oracle.passed, 6);
    }
}
