//! Dual containment of skew constacyclic codes and CSS parameters.
//!
//! For `x^n - λ = h·f` with `λ = ±1`, the code `⟨f⟩` contains its dual
//! exactly when `x^n - λ` right-divides `h*·h`, `h*` the skew reciprocal of
//! `h`. A code over `R` contains its dual iff all three components do, and a
//! dual-containing `[3n, k, d]` Gray image gives a `[[3n, 2k - 3n, d]]` code.

use std::cmp::Reverse;
use std::fmt;
use std::sync::Arc;

use crate::distance::{self, DistanceCertificate};
use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement, DEFAULT_ENUMERATION_BOUND};
use crate::gray::{gray_image, GrayMatrix, GrayOrder};
use crate::linear_code::RCode;
use crate::par::{self, Execution};
use crate::ring_r::{RingElement, RingR};
use crate::skew_poly::{SkewPoly, SkewRing};

/// Intermediate polynomials of the divisibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualContainment {
    /// Left cofactor: `x^n - λ = h·f`.
    pub h: SkewPoly,
    pub h_star: SkewPoly,
    /// `h*·h`.
    pub product: SkewPoly,
    /// `h*·h = quotient·(x^n - λ) + remainder`.
    pub quotient: SkewPoly,
    pub remainder: SkewPoly,
    pub holds: bool,
}

fn check_sign(field: &Field, lambda: FieldElement) -> Result<()> {
    if lambda == field.one() || lambda == field.from_int(-1) {
        Ok(())
    } else {
        Err(Error::LambdaNotUnitSign(field.format(lambda)))
    }
}

/// Runs the divisibility test and keeps every intermediate polynomial.
pub fn dual_containment(ring: &SkewRing, f: &SkewPoly, n: usize, lambda: FieldElement) -> Result<DualContainment> {
    let field = ring.field();
    check_sign(field, lambda)?;
    if !ring.is_central_modulus(n, lambda) {
        return Err(Error::NotCentral { n, lambda: field.format(lambda), twist: ring.twist() });
    }
    let modulus = ring.x_n_minus(n, lambda);
    let (h, rem) = ring.right_divmod(&modulus, f)?;
    if !rem.is_zero() {
        return Err(Error::NotRightDivisor { n, lambda: field.format(lambda) });
    }
    let h_star = ring.skew_reciprocal(&h)?;
    let product = ring.mul(&h_star, &h);
    let (quotient, remainder) = ring.right_divmod(&product, &modulus)?;
    let holds = remainder.is_zero();
    Ok(DualContainment { h, h_star, product, quotient, remainder, holds })
}

pub fn dual_containing(ring: &SkewRing, f: &SkewPoly, n: usize, lambda: FieldElement) -> Result<bool> {
    Ok(dual_containment(ring, f, n, lambda)?.holds)
}

/// Conjunction of the three component tests.
pub fn r_dual_containing(ring: &SkewRing, f: &[SkewPoly; 3], n: usize, lambdas: [FieldElement; 3]) -> Result<bool> {
    for i in 0..3 {
        if !dual_containing(ring, &f[i], n, lambdas[i])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same question answered with generator and parity-check matrices.
pub fn r_dual_containing_matrix(ring: &SkewRing, f: &[SkewPoly; 3], n: usize, lambdas: [FieldElement; 3]) -> Result<bool> {
    Ok(RCode::from_skew_generators(ring, f.clone(), n, lambdas)?.contains_dual())
}

/// `[[n, k, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl QuantumParams {
    /// `(n + 2) - (2d + k)`; zero for quantum MDS codes.
    pub fn singleton_slack(&self) -> i64 {
        (self.n as i64 + 2) - (2 * self.d as i64 + self.k as i64)
    }

    pub fn is_mds(&self) -> bool {
        self.singleton_slack() == 0
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// `[[n3, 2k - n3, d]]` from a dual-containing `[n3, k, d]` code.
pub fn css_parameters(n3: usize, k: usize, d: usize) -> Result<QuantumParams> {
    if 2 * k < n3 {
        return Err(Error::DegenerateQuantum { n: n3, k });
    }
    Ok(QuantumParams { n: n3, k: 2 * k - n3, d })
}

pub fn singleton_slack(q: &QuantumParams) -> i64 {
    q.singleton_slack()
}

/// `[n, k, d]` of a classical code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// Everything needed to reproduce one quantum code.
#[derive(Clone, Debug)]
pub struct QuantumCodeRecord {
    pub field: Arc<Field>,
    pub twist: u32,
    pub n_ring: usize,
    pub delta: RingElement,
    pub lambdas: [FieldElement; 3],
    pub f_polys: [SkewPoly; 3],
    pub gray: GrayMatrix,
    pub gray_order: GrayOrder,
    pub gray_params: ClassicalParams,
    pub certificate: DistanceCertificate,
    pub quantum: QuantumParams,
    pub singleton_slack: i64,
    pub is_mds: bool,
}

impl QuantumCodeRecord {
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn m(&self) -> usize {
        self.field.m()
    }

    /// `[[n,k,d]]_q`.
    pub fn quantum_label(&self) -> String {
        format!("{}_{}", self.quantum, self.field.order())
    }
}

/// Shared context for evaluating generator triples.
#[derive(Clone, Debug)]
pub struct CodeContext {
    pub ring: SkewRing,
    pub ring_r: RingR,
    pub n: usize,
    pub delta: RingElement,
    pub lambdas: [FieldElement; 3],
    pub gray: GrayMatrix,
    pub gray_order: GrayOrder,
    pub d_max: usize,
    pub enum_bound: u64,
}

impl CodeContext {
    /// Validates `δ`: a unit whose CRT coordinates are all `±1`, with every
    /// `x^n - λi` central.
    pub fn new(
        field: Arc<Field>,
        twist: u32,
        n: usize,
        delta: RingElement,
        gray: GrayMatrix,
        gray_order: GrayOrder,
    ) -> Result<CodeContext> {
        let ring_r = RingR::new(field.clone());
        let ring = SkewRing::new(field.clone(), twist);
        if !ring_r.is_unit(delta) {
            return Err(Error::NotAUnit(ring_r.format(delta)));
        }
        let lambdas = ring_r.to_crt(delta).as_array();
        for &l in &lambdas {
            check_sign(&field, l)?;
            if !ring.is_central_modulus(n, l) {
                return Err(Error::NotCentral { n, lambda: field.format(l), twist: ring.twist() });
            }
        }
        Ok(CodeContext {
            ring,
            ring_r,
            n,
            delta,
            lambdas,
            gray,
            gray_order,
            d_max: distance::DEFAULT_D_MAX,
            enum_bound: DEFAULT_ENUMERATION_BOUND,
        })
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn code(&self, f: &[SkewPoly; 3]) -> Result<RCode> {
        RCode::from_skew_generators(&self.ring, f.clone(), self.n, self.lambdas)
    }

    /// Builds the record for `f` if the code and its Gray image contain their
    /// duals; `Ok(None)` otherwise. Disagreement between the polynomial and
    /// matrix criteria, or a Singleton violation, is an internal error.
    pub fn evaluate(&self, f: &[SkewPoly; 3], exec: Execution) -> Result<Option<QuantumCodeRecord>> {
        let poly = r_dual_containing(&self.ring, f, self.n, self.lambdas)?;
        let code = self.code(f)?;
        if poly != code.contains_dual() {
            return Err(Error::Internal(format!(
                "polynomial and matrix dual-containment disagree for {:?}",
                f.iter().map(|p| self.ring.format_coeff_string(p)).collect::<Vec<_>>()
            )));
        }
        if !poly {
            return Ok(None);
        }
        let image = gray_image(&code, &self.gray, self.gray_order)?;
        // guaranteed when M M^T = αI; other matrices may lose it
        if !image.contains_dual() {
            return Ok(None);
        }
        let cert = distance::min_distance(&image, self.d_max, self.enum_bound, exec)?;
        let gray_params = ClassicalParams { n: image.n(), k: image.k(), d: cert.d };
        let quantum = css_parameters(image.n(), image.k(), cert.d)?;
        let slack = quantum.singleton_slack();
        if slack < 0 {
            return Err(Error::Internal(format!("{quantum} violates the quantum Singleton bound")));
        }
        Ok(Some(QuantumCodeRecord {
            field: self.ring.field_arc().clone(),
            twist: self.ring.twist(),
            n_ring: self.n,
            delta: self.delta,
            lambdas: self.lambdas,
            f_polys: f.clone(),
            gray: self.gray.clone(),
            gray_order: self.gray_order,
            gray_params,
            certificate: cert,
            quantum,
            singleton_slack: slack,
            is_mds: slack == 0,
        }))
    }

    /// Monic right divisors of `x^n - λi` with degree `<= max_degree` whose
    /// codes contain their duals.
    pub fn dual_containing_divisors(&self, i: usize, max_degree: usize, exec: Execution) -> Result<Vec<SkewPoly>> {
        let lambda = self.lambdas[i];
        let mut out = Vec::new();
        for d in 0..=max_degree.min(self.n) {
            for g in self.ring.enumerate_monic_right_divisors(self.n, lambda, d, self.enum_bound, exec)? {
                if dual_containing(&self.ring, &g, self.n, lambda)? {
                    out.push(g);
                }
            }
        }
        Ok(out)
    }
}

/// Result of [`search`].
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub records: Vec<QuantumCodeRecord>,
    /// Dual-containing divisors found per component.
    pub candidates: [usize; 3],
    /// Triples whose distance exceeded `d_max` and the exhaustive bound.
    pub uncertified: usize,
}

/// Enumerates dual-containing generator triples within `degree_bounds` and
/// certifies each Gray image. Records are sorted by descending `k`, then
/// descending `d`, ties kept in enumeration order.
pub fn search(ctx: &CodeContext, degree_bounds: [usize; 3], exec: Execution) -> Result<SearchReport> {
    let lists = [
        ctx.dual_containing_divisors(0, degree_bounds[0], exec)?,
        ctx.dual_containing_divisors(1, degree_bounds[1], exec)?,
        ctx.dual_containing_divisors(2, degree_bounds[2], exec)?,
    ];
    let total = lists.iter().map(|l| l.len() as u128).product::<u128>();
    if total > ctx.enum_bound as u128 {
        return Err(Error::EnumerationBound { needed: total, bound: ctx.enum_bound });
    }
    let mut triples = Vec::with_capacity(total as usize);
    for f0 in &lists[0] {
        for f1 in &lists[1] {
            for f2 in &lists[2] {
                triples.push([f0.clone(), f1.clone(), f2.clone()]);
            }
        }
    }
    // parallelism lives at the triple level; each certification runs sequentially
    let results = par::map_slice(exec, &triples, |f| ctx.evaluate(f, Execution::Sequential));
    let mut records = Vec::new();
    let mut uncertified = 0;
    for r in results {
        match r {
            Ok(Some(rec)) => records.push(rec),
            Ok(None) => {}
            Err(Error::DistanceAboveBound { .. }) => uncertified += 1,
            Err(e) => return Err(e),
        }
    }
    records.sort_by_key(|r| (r.n_ring, Reverse(r.gray_params.k), Reverse(r.gray_params.d)));
    Ok(SearchReport { records, candidates: [lists[0].len(), lists[1].len(), lists[2].len()], uncertified })
}
