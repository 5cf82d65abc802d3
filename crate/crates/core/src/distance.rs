//! Minimum Hamming distance with certificates.
//!
//! Two methods:
//! - exhaustive: enumerate all `q^k - 1` nonzero codewords;
//! - column dependence: `d` is the size of the smallest linearly dependent
//!   set of parity-check columns. All smaller subsets are shown independent
//!   and a minimal dependent subset yields a weight-`d` codeword.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::linear_code::LinearCode;
use crate::matrix::{self, Row};
use crate::par::{self, Execution};

pub const DEFAULT_D_MAX: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerBoundMethod {
    Exhaustive,
    ColumnDependence,
}

impl fmt::Display for LowerBoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBoundMethod::Exhaustive => "exhaustive",
            LowerBoundMethod::ColumnDependence => "column-dependence",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub d: usize,
    /// A codeword of weight exactly `d`.
    pub witness: Row,
    pub lower_bound_method: LowerBoundMethod,
    /// Codewords enumerated (exhaustive) or column subsets proven independent.
    pub checked_subsets: u64,
}

impl DistanceCertificate {
    /// The witness is a codeword of weight `d`.
    pub fn witness_is_valid(&self, code: &LinearCode) -> bool {
        weight(&self.witness) == self.d && code.contains_word(&self.witness)
    }

    /// Plain-text audit record.
    pub fn to_text(&self, field: &Field) -> String {
        let w: Vec<String> = self.witness.iter().map(|&x| field.format(x)).collect();
        format!(
            "d = {}\nmethod = {}\nchecked_subsets = {}\nwitness = {}\n",
            self.d,
            self.lower_bound_method,
            self.checked_subsets,
            w.join(" ")
        )
    }
}

pub fn weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

fn message_from_index(field: &Field, mut idx: u64, k: usize) -> Vec<FieldElement> {
    let q = field.order();
    (0..k)
        .map(|_| {
            let e = field.from_index(idx % q);
            idx /= q;
            e
        })
        .collect()
}

/// Exact distance by enumerating every nonzero codeword. The witness is the
/// lightest codeword with the smallest message index.
pub fn min_distance_exhaustive(code: &LinearCode, bound: u64, exec: Execution) -> Result<DistanceCertificate> {
    let k = code.k();
    if k == 0 {
        return Err(Error::EmptyCode);
    }
    let total = (code.field().order() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > bound as u128 {
        return Err(Error::EnumerationBound { needed: total, bound });
    }
    let field = code.field();
    let (d, _, witness) = par::min_by_key_range(exec, 1..total as u64, |idx| {
        let c = code.encode(&message_from_index(field, idx, k));
        Some((weight(&c), c))
    })
    .expect("at least one nonzero message");
    Ok(DistanceCertificate {
        d,
        witness,
        lower_bound_method: LowerBoundMethod::Exhaustive,
        checked_subsets: (total - 1) as u64,
    })
}

/// Whether the given columns are linearly dependent (incremental elimination).
fn columns_dependent(field: &Field, cols: &[&Row]) -> bool {
    let mut basis: Vec<(usize, Row)> = Vec::with_capacity(cols.len());
    for col in cols {
        let mut v: Row = (*col).clone();
        for (pivot, b) in &basis {
            let c = v[*pivot];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = field.sub(*x, field.mul(c, y));
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return true,
            Some(p) => {
                let inv = field.inv(v[p]).expect("nonzero pivot");
                for x in v.iter_mut() {
                    *x = field.mul(*x, inv);
                }
                basis.push((p, v));
            }
        }
    }
    false
}

/// Advances `a` (strictly increasing, entries `< limit`) to the next subset in
/// colexicographic order. Returns `false` after the last one.
fn next_colex(a: &mut [usize], limit: usize) -> bool {
    let s = a.len();
    for i in 0..s {
        let cap = if i + 1 < s { a[i + 1] } else { limit };
        if a[i] + 1 < cap {
            a[i] += 1;
            for (j, x) in a.iter_mut().enumerate().take(i) {
                *x = j;
            }
            return true;
        }
    }
    false
}

/// Colex-first dependent column subset of size `s`, if any.
fn first_dependent_subset(field: &Field, cols: &[Row], s: usize, exec: Execution) -> Option<Vec<usize>> {
    let n = cols.len();
    if s == 0 || s > n {
        return None;
    }
    // colex order sorts first by the largest element
    par::find_map_first(exec, (s - 1) as u64..n as u64, |top| {
        let top = top as usize;
        let mut rest: Vec<usize> = (0..s - 1).collect();
        loop {
            let mut chosen: Vec<&Row> = rest.iter().map(|&i| &cols[i]).collect();
            chosen.push(&cols[top]);
            if columns_dependent(field, &chosen) {
                let mut subset = rest.clone();
                subset.push(top);
                return Some(subset);
            }
            if s == 1 || !next_colex(&mut rest, top) {
                return None;
            }
        }
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Certified distance from parity-check column dependence, for `d <= d_max`.
pub fn min_distance_columns(code: &LinearCode, d_max: usize, exec: Execution) -> Result<DistanceCertificate> {
    if code.k() == 0 {
        return Err(Error::EmptyCode);
    }
    let field = code.field();
    let n = code.n();
    let cols = matrix::transpose(code.parity_check(), n);
    let mut checked = 0u64;
    for s in 1..=d_max.min(n) {
        if let Some(subset) = first_dependent_subset(field, &cols, s, exec) {
            // every (s-1)-subset is independent, so the dependency is unique up
            // to scaling and has full support
            let sub_cols: Vec<Row> = subset.iter().map(|&i| cols[i].clone()).collect();
            let rows = matrix::transpose(&sub_cols, code.parity_check().len());
            let kernel = matrix::nullspace(field, &rows, s);
            debug_assert_eq!(kernel.len(), 1);
            let coeffs = &kernel[0];
            let norm = field.inv(coeffs[0]).expect("minimal dependency has full support");
            let mut witness = vec![field.zero(); n];
            for (&pos, &c) in subset.iter().zip(coeffs) {
                witness[pos] = field.mul(norm, c);
            }
            return Ok(DistanceCertificate {
                d: s,
                witness,
                lower_bound_method: LowerBoundMethod::ColumnDependence,
                checked_subsets: checked,
            });
        }
        checked += binomial(n, s);
    }
    Err(Error::DistanceAboveBound { d_max })
}

/// Column method first; if the distance is above `d_max`, fall back to
/// exhaustive enumeration within `bound`.
pub fn min_distance(code: &LinearCode, d_max: usize, bound: u64, exec: Execution) -> Result<DistanceCertificate> {
    match min_distance_columns(code, d_max, exec) {
        Err(Error::DistanceAboveBound { d_max }) => {
            min_distance_exhaustive(code, bound, exec).map_err(|_| Error::DistanceAboveBound { d_max })
        }
        other => other,
    }
}

/// Samples random nonzero codewords and returns one lighter than `d`, if found.
pub fn sample_lighter_codeword(code: &LinearCode, d: usize, samples: u64, seed: u64, exec: Execution) -> Option<Row> {
    const CHUNK: u64 = 4096;
    let field = code.field();
    let k = code.k();
    let chunks = samples.div_ceil(CHUNK);
    par::find_map_first(exec, 0..chunks, |chunk| {
        let mut rng = StdRng::seed_from_u64(seed ^ chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let todo = CHUNK.min(samples - chunk * CHUNK);
        for _ in 0..todo {
            let msg: Vec<FieldElement> = (0..k).map(|_| field.random(&mut rng)).collect();
            if msg.iter().all(|x| x.is_zero()) {
                continue;
            }
            let c = code.encode(&msg);
            if weight(&c) < d {
                return Some(c);
            }
        }
        None
    })
}

/// Uniform random message helper for tests and benches.
pub fn random_message<R: Rng + ?Sized>(field: &Field, k: usize, rng: &mut R) -> Vec<FieldElement> {
    (0..k).map(|_| field.random(rng)).collect()
}
