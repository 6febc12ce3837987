//! Exhaustive census of self-converse mixed graphs on small vertex sets.
//!
//! The census scans every packed edge code on `n` vertices, keeps one
//! canonical representative per isomorphism class of self-converse graphs,
//! buckets the representatives by generalized spectrum, and derives from the
//! buckets everything else: determined-by-spectrum verdicts, summary table
//! rows, and verification reports for the level and square-free-condition
//! statements.
//!
//! Invariants:
//! - representatives are exactly the canonical (minimal) codes of their
//!   classes, listed in increasing order, so every run is deterministic
//!   regardless of worker count;
//! - each representative lands in exactly one bucket, and co-members of a
//!   bucket are pairwise R-cospectral while members of different buckets are
//!   not;
//! - a class is determined by its generalized spectrum (among self-converse
//!   graphs) precisely when its bucket is a singleton;
//! - classes whose walk matrix is singular still count in every denominator.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigUint;

use crate::exactla::IntPolynomial;
use crate::gaussint::GaussInt;
use crate::genspec::{self, GenSpectrum};
use crate::mixedgraph::{self, code_to_bytes, packed, MixedGraph};

/// Errors from census runs and exports.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Exhaustive scans are limited to small vertex counts.
    #[error("census supports 2 <= n <= 6, got {0}")]
    OutOfRange(usize),
    /// The billion-code scan at `n = 6` must be requested explicitly.
    #[error("the n=6 census scans 4^15 codes; enable the long-run option to proceed")]
    LongRunDisabled,
    /// The five-vertex search found no pair with the target spectra.
    #[error("no five-vertex pair matches the target generalized spectrum")]
    ExampleNotFound,
    /// A file export failed.
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Failure bubbled up from the graph layer.
    #[error(transparent)]
    Graph(#[from] mixedgraph::Error),
    /// Failure bubbled up from the spectral layer.
    #[error(transparent)]
    Spectral(#[from] genspec::Error),
}

// --- domain types ---------------------------------------------------------------

/// One row of the census summary table.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    /// Vertex count.
    pub n: usize,
    /// Number of isomorphism classes of self-converse mixed graphs.
    pub class_count: usize,
    /// Fraction of classes determined by their generalized spectrum,
    /// rounded half-up to three decimals.
    pub dgs_fraction: f64,
    /// Fraction of classes with a nonzero walk determinant whose reduced
    /// part is square-free, rounded half-up to three decimals.
    pub condition_fraction: f64,
}

/// All classes sharing one generalized spectrum.
#[derive(Debug, Clone)]
pub struct SpectrumBucket {
    /// The shared pair of characteristic polynomials.
    pub spectrum: GenSpectrum,
    /// Canonical codes of the member classes, in increasing order.
    pub members: Vec<Vec<u8>>,
}

/// Knobs for a census run.
#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Worker threads for the code scan.
    pub jobs: usize,
    /// Permission to run the `n = 6` scan.
    pub allow_long: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
            allow_long: false,
        }
    }
}

/// Level statistics and violation counts over all cospectral class pairs.
///
/// Every violation field is expected to stay zero; the CLI turns a nonzero
/// count into a failing exit code rather than panicking mid-report.
#[derive(Debug, Clone, Default)]
pub struct TheoremReport {
    /// Vertex count.
    pub n: usize,
    /// Ordered pairs of distinct classes sharing a bucket.
    pub cospectral_pairs: usize,
    /// Pairs whose two walk matrices are both nonsingular.
    pub unitary_pairs: usize,
    /// Pairs skipped because a walk matrix was singular.
    pub singular_pairs: usize,
    /// Observed levels, keyed by their literal, with multiplicities.
    pub level_histogram: BTreeMap<String, usize>,
    /// Pairs whose walk Gram matrices differ (expected zero).
    pub gram_violations: usize,
    /// Levels that are neither an integer nor an integer times 1+1i.
    pub shape_violations: usize,
    /// Levels that fail to divide the last elementary divisor of the walk
    /// matrix.
    pub divisor_violations: usize,
    /// Pairs whose first graph satisfies the square-free condition.
    pub condition_pairs: usize,
    /// Condition pairs whose level landed outside {1, 1+1i}.
    pub condition_violations: usize,
    /// Condition pairs whose first graph is undirected.
    pub undirected_pairs: usize,
    /// Undirected condition pairs whose level was not 1.
    pub undirected_violations: usize,
}

impl TheoremReport {
    /// Whether every verified statement held.
    pub fn all_clear(&self) -> bool {
        self.gram_violations == 0
            && self.shape_violations == 0
            && self.divisor_violations == 0
            && self.condition_violations == 0
            && self.undirected_violations == 0
    }
}

/// Outcome of checking that condition-satisfying classes are determined by
/// their spectrum.
#[derive(Debug, Clone, Default)]
pub struct ConjectureReport {
    /// Vertex count.
    pub n: usize,
    /// Classes satisfying the square-free condition.
    pub condition_classes: usize,
    /// How many of those have a singleton bucket.
    pub dgs_of_condition: usize,
    /// Canonical codes of condition-satisfying classes that share a bucket
    /// (expected empty).
    pub counterexamples: Vec<Vec<u8>>,
}

impl ConjectureReport {
    /// Whether no counterexample was found.
    pub fn all_clear(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

// --- the census -----------------------------------------------------------------

/// A completed census: class representatives plus their spectral bucketing.
#[derive(Debug, Clone)]
pub struct Census {
    n: usize,
    /// Canonical codes, ascending.
    reps: Vec<u128>,
    /// Square-free-condition verdict per representative.
    condition: Vec<bool>,
    /// Bucket index per representative.
    bucket_index: Vec<usize>,
    /// Member indices per bucket, parallel to `buckets`.
    bucket_members: Vec<Vec<usize>>,
    buckets: Vec<SpectrumBucket>,
}

impl Census {
    /// Runs the full scan-and-bucket pipeline for `2 <= n <= 6`.
    pub fn compute(n: usize, options: &CensusOptions) -> Result<Census, Error> {
        if !(2..=6).contains(&n) {
            return Err(Error::OutOfRange(n));
        }
        if n == 6 && !options.allow_long {
            return Err(Error::LongRunDisabled);
        }
        let reps = scan_self_converse(n, options.jobs);

        let mut keyed: BTreeMap<(IntPolynomial, IntPolynomial), Vec<usize>> = BTreeMap::new();
        let mut condition = Vec::with_capacity(reps.len());
        for (idx, &code) in reps.iter().enumerate() {
            let g = MixedGraph::from_packed(n, code);
            let spectrum = genspec::generalized_spectrum(&g);
            condition.push(genspec::satisfies_main_condition(&g));
            keyed.entry((spectrum.p_a, spectrum.p_c)).or_default().push(idx);
        }

        let slots = packed::slot_count(n);
        let mut bucket_index = vec![0usize; reps.len()];
        let mut bucket_members = Vec::with_capacity(keyed.len());
        let mut buckets = Vec::with_capacity(keyed.len());
        for (b, ((p_a, p_c), members)) in keyed.into_iter().enumerate() {
            for &idx in &members {
                bucket_index[idx] = b;
            }
            buckets.push(SpectrumBucket {
                spectrum: GenSpectrum { p_a, p_c },
                members: members.iter().map(|&idx| code_to_bytes(reps[idx], slots)).collect(),
            });
            bucket_members.push(members);
        }
        Ok(Census {
            n,
            reps,
            condition,
            bucket_index,
            bucket_members,
            buckets,
        })
    }

    /// Vertex count of the census.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of self-converse isomorphism classes.
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    /// One representative graph per class, in canonical-code order.
    pub fn representatives(&self) -> Vec<MixedGraph> {
        self.reps.iter().map(|&code| MixedGraph::from_packed(self.n, code)).collect()
    }

    /// The spectral buckets, sorted by their polynomial pair.
    pub fn buckets(&self) -> &[SpectrumBucket] {
        &self.buckets
    }

    /// Classes satisfying the square-free condition.
    pub fn condition_count(&self) -> usize {
        self.condition.iter().filter(|&&c| c).count()
    }

    /// Classes alone in their bucket.
    pub fn dgs_count(&self) -> usize {
        self.bucket_members.iter().filter(|m| m.len() == 1).count()
    }

    /// Verdict per class: determined by its generalized spectrum or not.
    pub fn dgs_verdicts(&self) -> BTreeMap<Vec<u8>, bool> {
        let slots = packed::slot_count(self.n);
        self.reps
            .iter()
            .zip(&self.bucket_index)
            .map(|(&code, &b)| {
                (code_to_bytes(code, slots), self.bucket_members[b].len() == 1)
            })
            .collect()
    }

    /// The summary row: class count plus rounded fractions.
    pub fn table_row(&self) -> CensusRow {
        CensusRow {
            n: self.n,
            class_count: self.class_count(),
            dgs_fraction: round_half_up_3(self.dgs_count(), self.class_count()),
            condition_fraction: round_half_up_3(self.condition_count(), self.class_count()),
        }
    }

    /// Checks the level statements across every cospectral class pair.
    ///
    /// For each ordered pair in a shared bucket: the walk Gram matrices must
    /// agree; when both walk matrices are nonsingular the transfer unitary's
    /// level must be an integer or an integer times `1+1i` and must divide
    /// the last elementary divisor of the first walk matrix; when the first
    /// graph also satisfies the square-free condition the level must lie in
    /// `{1, 1+1i}`, and must equal 1 if that graph is undirected.
    pub fn verify_main_theorem(&self) -> TheoremReport {
        let mut report = TheoremReport {
            n: self.n,
            ..TheoremReport::default()
        };
        for members in &self.bucket_members {
            if members.len() < 2 {
                continue;
            }
            for &i in members {
                let g = MixedGraph::from_packed(self.n, self.reps[i]);
                let report_g = genspec::walk_report(&g);
                for &j in members {
                    if i == j {
                        continue;
                    }
                    report.cospectral_pairs += 1;
                    let h = MixedGraph::from_packed(self.n, self.reps[j]);
                    let wh = genspec::walk_matrix(&h);
                    let gram_g = report_g.w.conj_transpose().mul(&report_g.w);
                    let gram_h = wh.conj_transpose().mul(&wh);
                    if gram_g != gram_h {
                        report.gram_violations += 1;
                        continue;
                    }
                    if report_g.det_w.is_zero() {
                        report.singular_pairs += 1;
                        continue;
                    }
                    // Equal Grams force the other determinant nonzero too.
                    let transfer = genspec::transfer_unitary(&g, &h)
                        .expect("cospectral pair with nonsingular walk matrices");
                    report.unitary_pairs += 1;
                    let level = transfer.level;
                    *report.level_histogram.entry(level.to_string()).or_insert(0) += 1;

                    let integerish = level.im == 0.into();
                    let one_plus_i_multiple = level.re == level.im;
                    if !integerish && !one_plus_i_multiple {
                        report.shape_violations += 1;
                    }
                    let d_n = report_g.snf_d.last().expect("n >= 2");
                    if !level.divides(d_n) {
                        report.divisor_violations += 1;
                    }
                    if self.condition[i] {
                        report.condition_pairs += 1;
                        let small = level.is_one() || level == GaussInt::new(1, 1);
                        if !small {
                            report.condition_violations += 1;
                        }
                        if g.is_undirected() {
                            report.undirected_pairs += 1;
                            if !level.is_one() {
                                report.undirected_violations += 1;
                            }
                        }
                    }
                }
            }
        }
        report
    }

    /// Checks that every condition-satisfying class is alone in its bucket.
    pub fn verify_conjecture(&self) -> ConjectureReport {
        let slots = packed::slot_count(self.n);
        let mut report = ConjectureReport {
            n: self.n,
            ..ConjectureReport::default()
        };
        for (idx, &code) in self.reps.iter().enumerate() {
            if !self.condition[idx] {
                continue;
            }
            report.condition_classes += 1;
            if self.bucket_members[self.bucket_index[idx]].len() == 1 {
                report.dgs_of_condition += 1;
            } else {
                report.counterexamples.push(code_to_bytes(code, slots));
            }
        }
        report
    }
}

/// Scans all codes and returns the canonical self-converse ones, ascending.
///
/// Workers process disjoint contiguous code ranges with no shared state;
/// their outputs are concatenated and sorted, so the result is independent
/// of the worker count.
fn scan_self_converse(n: usize, jobs: usize) -> Vec<u128> {
    let slots = packed::slot_count(n);
    let tables = packed::slot_tables(n);
    let total = 1u128 << (2 * slots);
    let jobs = jobs.clamp(1, 64) as u128;
    let mut chunks: Vec<Vec<u128>> = Vec::new();
    std::thread::scope(|scope| {
        let tables = &tables;
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let lo = total * w / jobs;
                let hi = total * (w + 1) / jobs;
                scope.spawn(move || {
                    let mut found = Vec::new();
                    for code in lo..hi {
                        if !packed::is_canonical(code, tables, slots) {
                            continue;
                        }
                        let conv = packed::converse_code(code, slots);
                        if packed::is_isomorphic_code(code, conv, tables, slots) {
                            found.push(code);
                        }
                    }
                    if slots >= 15 {
                        eprintln!(
                            "census: scanned codes {lo}..{hi}, kept {} classes",
                            found.len()
                        );
                    }
                    found
                })
            })
            .collect();
        chunks = handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect();
    });
    let mut reps = chunks.concat();
    reps.sort_unstable();
    reps
}

/// Rounds `num / den` half-up to three decimal places.
fn round_half_up_3(num: usize, den: usize) -> f64 {
    assert!(den > 0, "fractions need a nonempty census");
    let millis = (2000 * num as u64 + den as u64) / (2 * den as u64);
    millis as f64 / 1000.0
}

// --- spec-level entry points ------------------------------------------------------

/// One representative per isomorphism class of self-converse mixed graphs.
pub fn enumerate_self_converse(n: usize) -> Result<Vec<MixedGraph>, Error> {
    Ok(Census::compute(n, &CensusOptions::default())?.representatives())
}

/// The spectral buckets of the self-converse census.
pub fn spectrum_buckets(n: usize) -> Result<Vec<SpectrumBucket>, Error> {
    Ok(Census::compute(n, &CensusOptions::default())?.buckets().to_vec())
}

/// Determined-by-spectrum verdict per class, keyed by canonical code.
pub fn dgs_verdicts(n: usize) -> Result<BTreeMap<Vec<u8>, bool>, Error> {
    Ok(Census::compute(n, &CensusOptions::default())?.dgs_verdicts())
}

/// The summary table row for one vertex count.
pub fn table_row(n: usize) -> Result<CensusRow, Error> {
    Ok(Census::compute(n, &CensusOptions::default())?.table_row())
}

/// Level verification across all cospectral pairs.
pub fn verify_main_theorem(n: usize) -> Result<TheoremReport, Error> {
    Ok(Census::compute(n, &CensusOptions::default())?.verify_main_theorem())
}

/// Square-free-condition verification across all classes.
pub fn verify_conjecture(n: usize) -> Result<ConjectureReport, Error> {
    Ok(Census::compute(n, &CensusOptions::default())?.verify_conjecture())
}

// --- the five-vertex example pair ---------------------------------------------------

/// Target spectrum of the canonical five-vertex cospectral pair, ascending
/// coefficients: `x^5 - 7x^3 - 4x^2 + 7x + 4` and its companion for
/// `J - I - A`.
const EXAMPLE_P_A: [i64; 6] = [4, 7, -4, -7, 0, 1];
const EXAMPLE_P_C: [i64; 6] = [4, 5, -16, -13, 0, 1];

/// Searches the five-vertex code space for the classic R-cospectral pair: a
/// self-converse graph `G` and a non-self-converse `H` sharing the spectrum
/// above, not isomorphic, with `|det W(G)| = 68`.
///
/// Returns the canonical representatives with the smallest codes, so the
/// result is deterministic.
pub fn find_example_pair() -> Result<(MixedGraph, MixedGraph), Error> {
    let n = 5;
    let slots = packed::slot_count(n);
    let tables = packed::slot_tables(n);
    let target_a = IntPolynomial::from_i64(&EXAMPLE_P_A);
    let target_c = IntPolynomial::from_i64(&EXAMPLE_P_C);
    // The x^{n-2} coefficient is minus the edge count, so only 7-edge codes
    // can match; a machine-word characteristic polynomial screens the rest
    // before the exact arithmetic confirms.
    let edge_target = (-EXAMPLE_P_A[n - 2]) as u32;
    let mut slot_mask = 0u128;
    for s in 0..slots {
        slot_mask |= 1u128 << (2 * s);
    }

    let mut self_converse: Option<u128> = None;
    let mut other: Option<u128> = None;
    for code in 0..1u128 << (2 * slots) {
        let occupied = (code | (code >> 1)) & slot_mask;
        if occupied.count_ones() != edge_target {
            continue;
        }
        if !fast_charpoly_matches(code, n, &EXAMPLE_P_A) {
            continue;
        }
        let g = MixedGraph::from_packed(n, code);
        let spectrum = genspec::generalized_spectrum(&g);
        assert_eq!(
            spectrum.p_a, target_a,
            "exact arithmetic must confirm the fast screen"
        );
        if spectrum.p_c != target_c {
            continue;
        }
        let canon = packed::canonical_code(code, &tables, slots);
        let conv = packed::converse_code(code, slots);
        let slot = if packed::is_isomorphic_code(code, conv, &tables, slots) {
            &mut self_converse
        } else {
            &mut other
        };
        *slot = Some(match *slot {
            Some(best) => best.min(canon),
            None => canon,
        });
    }

    let (Some(g_code), Some(h_code)) = (self_converse, other) else {
        return Err(Error::ExampleNotFound);
    };
    let g = MixedGraph::from_packed(n, g_code);
    let h = MixedGraph::from_packed(n, h_code);
    assert!(g.is_self_converse()?.is_some());
    assert!(h.is_self_converse()?.is_none());
    assert!(g.isomorphic(&h)?.is_none(), "distinct canonical codes");
    assert!(genspec::r_cospectral(&g, &h)?);
    let det = genspec::walk_report(&g).det_w;
    assert_eq!(
        det.norm(),
        BigUint::from(68u32 * 68u32),
        "the self-converse side has walk determinant of absolute value 68"
    );
    Ok((g, h))
}

/// Machine-word characteristic polynomial screen for 5-vertex codes.
///
/// Runs the exact trace recursion in `i64` Gaussian pairs — entries stay far
/// below overflow for these sizes — and bails out at the first coefficient
/// that differs from `target` (ascending, length `n + 1`).
fn fast_charpoly_matches(code: u128, n: usize, target: &[i64]) -> bool {
    let slots = packed::slot_count(n);
    let mut a = [[(0i64, 0i64); 5]; 5];
    for u in 0..n {
        for v in (u + 1)..n {
            let s = packed::slot_index(u, v, n);
            let (x, y) = match packed::get_slot(code, s, slots) {
                0 => continue,
                1 => ((1, 0), (1, 0)),
                2 => ((0, 1), (0, -1)),
                _ => ((0, -1), (0, 1)),
            };
            a[u][v] = x;
            a[v][u] = y;
        }
    }
    // aux starts as the identity; step k yields the coefficient of x^{n-k}.
    let mut aux = [[(0i64, 0i64); 5]; 5];
    for (d, row) in aux.iter_mut().enumerate() {
        row[d] = (1, 0);
    }
    for k in 1..=n {
        let mut prod = [[(0i64, 0i64); 5]; 5];
        for r in 0..n {
            for c in 0..n {
                let mut acc = (0i64, 0i64);
                for m in 0..n {
                    let (ar, ai) = a[r][m];
                    let (br, bi) = aux[m][c];
                    acc.0 += ar * br - ai * bi;
                    acc.1 += ar * bi + ai * br;
                }
                prod[r][c] = acc;
            }
        }
        let trace: i64 = (0..n).map(|d| prod[d][d].0).sum();
        debug_assert_eq!((0..n).map(|d| prod[d][d].1).sum::<i64>(), 0, "traces stay real");
        debug_assert_eq!(trace % k as i64, 0, "trace recursion divides exactly");
        let coeff = -trace / k as i64;
        if coeff != target[n - k] {
            return false;
        }
        aux = prod;
        for (d, row) in aux.iter_mut().enumerate() {
            row[d].0 += coeff;
        }
    }
    true
}

// --- exports ------------------------------------------------------------------------

/// Writes summary rows as CSV with a fixed header and three-decimal fractions.
pub fn export_csv(rows: &[CensusRow], path: &Path) -> Result<(), Error> {
    let mut out = String::from("n,classes,dgs_fraction,condition_fraction\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{:.3},{:.3}\n",
            row.n, row.class_count, row.dgs_fraction, row.condition_fraction
        ));
    }
    std::fs::write(path, out).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The bucket list as a JSON value: coefficient arrays plus hex member codes.
pub fn buckets_json(buckets: &[SpectrumBucket]) -> serde_json::Value {
    let items: Vec<serde_json::Value> = buckets
        .iter()
        .map(|bucket| {
            serde_json::json!({
                "charpoly_a": genspec::poly_coeffs(&bucket.spectrum.p_a),
                "charpoly_c": genspec::poly_coeffs(&bucket.spectrum.p_c),
                "members": bucket.members.iter().map(|code| hex_string(code)).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::Value::Array(items)
}

/// Writes the spectral buckets as pretty-printed JSON.
pub fn export_json(buckets: &[SpectrumBucket], path: &Path) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(&buckets_json(buckets)).expect("buckets serialize");
    std::fs::write(path, text + "\n").map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Lowercase hex of a canonical code's bytes.
fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

// --------------------------------------------------------------------------------
