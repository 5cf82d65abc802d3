use std::fmt::Write as _;
use std::sync::Arc;

use itertools::Itertools;

use super::config::{GraySpec, JobConfig};
use super::data::{self, example1 as ex, TableRow};
use crate::distance;
use crate::error::{Error, Result};
use crate::finite_field::{conway_polynomial, monic_irreducibles, Field};
use crate::gray::{gray_image, GrayMatrix, GrayOrder};
use crate::linear_code::RCode;
use crate::par::Execution;
use crate::quantum::{self, ClassicalParams, CodeContext, QuantumCodeRecord, QuantumParams, SearchReport};
use crate::ring_r::RingR;
use crate::skew_poly::{SkewPoly, SkewRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Line-item verification report.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub items: Vec<CheckItem>,
    pub verdict: String,
}

impl Report {
    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { label: label.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        !self.items.is_empty() && self.items.iter().all(|i| i.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let tag = if item.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag}  {}: {}", item.label, item.detail);
        }
        let _ = writeln!(out, "{}", self.verdict);
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Replace `δ` by `-δ`; every check downstream of `λ` must then fail.
    pub negate_lambda: bool,
    pub gray_order: GrayOrder,
    pub exec: Execution,
}

/// The first factor order (printed order first) whose product is `target`.
fn validating_order(ring: &SkewRing, factors: &[&str], target: &SkewPoly) -> Result<Option<Vec<usize>>> {
    let polys: Vec<SkewPoly> = factors.iter().map(|s| ring.parse(s)).collect::<Result<_>>()?;
    for order in (0..polys.len()).permutations(polys.len()) {
        let prod = order.iter().fold(ring.one(), |acc, &i| ring.mul(&acc, &polys[i]));
        if &prod == target {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

fn order_detail(order: &Option<Vec<usize>>) -> String {
    match order {
        Some(o) if o.iter().enumerate().all(|(i, &j)| i == j) => "printed order multiplies out".into(),
        Some(o) => format!("validated in order {:?}", o.iter().map(|i| i + 1).collect::<Vec<_>>()),
        None => "no order of the factors multiplies out".into(),
    }
}

fn example_field() -> Result<Arc<Field>> {
    Ok(Arc::new(Field::new(ex::P, ex::M, &ex::MODULUS)?))
}

/// Re-derives every intermediate of the worked `F_25` example.
pub fn verify_example1(opts: VerifyOptions) -> Result<Report> {
    let field = example_field()?;
    let ring = SkewRing::new(field.clone(), 1);
    let rr = RingR::new(field.clone());
    let mut report = Report::default();
    let n = ex::N;

    let t = field.generator();
    let t_sq = field.mul(t, t);
    let conway = conway_polynomial(ex::P, ex::M).as_deref() == Some(&ex::MODULUS[..]);
    report.check(
        "modulus",
        t_sq == field.add(t, field.from_int(3)),
        format!("t^2 = {}, modulus is the Conway polynomial: {conway}", field.format(t_sq)),
    );

    let mut delta = rr.parse(ex::DELTA)?;
    if opts.negate_lambda {
        delta = rr.neg(delta);
    }
    let lambdas = rr.to_crt(delta).as_array();
    let printed = ex::LAMBDAS.map(|l| field.from_int(l));
    report.check(
        "delta",
        rr.is_unit(delta) && lambdas == printed,
        format!("δ = {} has CRT coordinates ({})", rr.format(delta), lambdas.iter().map(|&l| field.format(l)).join(",")),
    );

    let one = field.one();
    let minus_one = field.from_int(-1);
    for (label, factors, lam) in [
        ("x^12 - 1 factorisation", &ex::X12_MINUS_1, one),
        ("x^12 + 1 factorisation (first)", &ex::X12_PLUS_1_A, minus_one),
        ("x^12 + 1 factorisation (second)", &ex::X12_PLUS_1_B, minus_one),
    ] {
        let order = validating_order(&ring, factors, &ring.x_n_minus(n, lam))?;
        report.check(label, order.is_some(), order_detail(&order));
    }

    let f: [SkewPoly; 3] = [ring.parse(ex::F[0])?, ring.parse(ex::F[1])?, ring.parse(ex::F[2])?];
    let mut all_contain = true;
    for i in 0..3 {
        let divides = ring.right_divides(&f[i], &ring.x_n_minus(n, lambdas[i]))?;
        report.check(
            format!("f{i} right-divides x^12 - λ{i}"),
            divides,
            format!("f{i} = {}, λ{i} = {}", ring.format(&f[i]), field.format(lambdas[i])),
        );
        match quantum::dual_containment(&ring, &f[i], n, lambdas[i]) {
            Ok(dc) => {
                report.check(format!("h{i}"), dc.h == ring.parse(ex::H[i])?, ring.format(&dc.h));
                report.check(format!("h{i}*"), dc.h_star == ring.parse(ex::H_STAR[i])?, ring.format(&dc.h_star));
                report.check(
                    format!("h{i}* h{i} = q{i} (x^12 - λ{i})"),
                    dc.holds && dc.quotient == ring.parse(ex::QUOTIENTS[i])?,
                    format!("q{i} = {}, remainder zero: {}", ring.format(&dc.quotient), dc.holds),
                );
                all_contain &= dc.holds;
            }
            Err(e) => {
                report.check(format!("h{i}* h{i} = q{i} (x^12 - λ{i})"), false, e.to_string());
                all_contain = false;
            }
        }
    }

    let gray = GrayMatrix::preset(ex::GRAY_PRESET, &field)?;
    report.check(
        "M M^T = 4 I",
        gray.alpha() == Some(field.from_int(ex::GRAY_ALPHA)),
        format!("M = [{}], α = {}", gray.format(&field), gray.alpha().map_or("none".into(), |a| field.format(a))),
    );

    let code = match RCode::from_skew_generators(&ring, f.clone(), n, lambdas) {
        Ok(code) => code,
        Err(e) => {
            report.check("code over R", false, e.to_string());
            report.verdict = verdict(false);
            return Ok(report);
        }
    };
    report.check(
        "matrix criterion",
        code.contains_dual() == all_contain && all_contain,
        format!("every component contains its dual: {}", code.contains_dual()),
    );

    let image = gray_image(&code, &gray, opts.gray_order)?;
    let cert = distance::min_distance_columns(&image, distance::DEFAULT_D_MAX, opts.exec)?;
    let params = ClassicalParams { n: image.n(), k: image.k(), d: cert.d };
    let (en, ek, ed) = ex::GRAY_PARAMS;
    report.check(
        "Gray image",
        params == ClassicalParams { n: en, k: ek, d: ed } && cert.witness_is_valid(&image),
        format!("{params}, {} subsets independent, weight-{} witness", cert.checked_subsets, cert.d),
    );

    let dual_image = gray_image(&code.r_dual(), &gray, opts.gray_order)?;
    report.check(
        "ψ(C^⊥) = ψ(C)^⊥",
        dual_image == image.dual(),
        format!("dimensions {} and {}", dual_image.k(), image.dual().k()),
    );
    report.check("Gray image contains its dual", image.contains_dual(), format!("{}", image.contains_dual()));

    let q = quantum::css_parameters(params.n, params.k, params.d)?;
    let (qn, qk, qd) = ex::QUANTUM;
    report.check(
        "quantum code",
        q == QuantumParams { n: qn, k: qk, d: qd },
        format!("{q}, Singleton slack {}", q.singleton_slack()),
    );
    report.verdict = verdict(report.passed());
    Ok(report)
}

fn verdict(ok: bool) -> String {
    let (n, k, d) = ex::QUANTUM;
    let q = ex::P.pow(ex::M as u32);
    if ok {
        format!("[[{n},{k},{d}]]_{q} CONFIRMED")
    } else {
        format!("[[{n},{k},{d}]]_{q} NOT CONFIRMED")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Confirmed,
    Mismatch,
    Unresolved,
}

impl std::fmt::Display for RowStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RowStatus::Confirmed => "CONFIRMED",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::Unresolved => "UNRESOLVED",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RowOutcome {
    /// 1-based row number.
    pub row: usize,
    pub printed: TableRow,
    pub status: RowStatus,
    /// The record that confirmed the row, or the first resolved one.
    pub record: Option<QuantumCodeRecord>,
    /// One line per modulus tried.
    pub attempts: Vec<String>,
}

impl RowOutcome {
    pub fn modulus(&self) -> Option<&[u32]> {
        self.record.as_ref().map(|r| r.field.modulus())
    }

    pub fn summary(&self) -> String {
        let p = self.printed;
        let q = p.p.pow(p.m as u32);
        let (gn, gk, gd) = p.gray;
        let (qn, qk, qd) = p.quantum;
        let mut s = format!("row {:>2}: n={} δ={} printed [{gn},{gk},{gd}] [[{qn},{qk},{qd}]]_{q}", self.row, p.n, p.delta);
        if let Some(rec) = &self.record {
            let _ = write!(
                s,
                "; derived {} {} (modulus {:?}, {} witness, slack {}{})",
                rec.gray_params,
                rec.quantum_label(),
                rec.field.modulus(),
                rec.certificate.lower_bound_method,
                rec.singleton_slack,
                if rec.is_mds { ", MDS" } else { "" }
            );
        }
        let _ = write!(s, " -> {}", self.status);
        s
    }
}

/// Conway polynomial first, then the remaining monic irreducibles in
/// lexicographic order.
fn candidate_moduli(p: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if let Some(c) = conway_polynomial(p, m) {
        out.push(c);
    }
    for poly in monic_irreducibles(p, m) {
        if !out.contains(&poly) {
            out.push(poly);
        }
    }
    out
}

fn try_modulus(row: &TableRow, modulus: &[u32], exec: Execution) -> Result<std::result::Result<QuantumCodeRecord, String>> {
    let field = Arc::new(Field::new(row.p, row.m, modulus)?);
    let ring = SkewRing::new(field.clone(), 1);
    let rr = RingR::new(field.clone());
    let delta = rr.parse(row.delta)?;
    let lambdas = rr.to_crt(delta).as_array();
    if lambdas != row.lambdas.map(|l| field.from_int(l)) {
        return Ok(Err("δ does not have the printed λ-triple".into()));
    }
    let gray = GrayMatrix::default_for(&field);
    let f: [SkewPoly; 3] = [
        ring.parse_coeff_string(row.f[0])?,
        ring.parse_coeff_string(row.f[1])?,
        ring.parse_coeff_string(row.f[2])?,
    ];
    for i in 0..3 {
        if !ring.right_divides(&f[i], &ring.x_n_minus(row.n, lambdas[i]))? {
            return Ok(Err(format!("f{i} does not right-divide x^{} - ({})", row.n, field.format(lambdas[i]))));
        }
    }
    let ctx = CodeContext::new(field, 1, row.n, delta, gray, GrayOrder::Blocks)?;
    Ok(match ctx.evaluate(&f, exec)? {
        Some(rec) => Ok(rec),
        None => Err("code or its Gray image does not contain its dual".into()),
    })
}

fn matches_printed(row: &TableRow, rec: &QuantumCodeRecord) -> bool {
    let (gn, gk, gd) = row.gray;
    let (qn, qk, qd) = row.quantum;
    rec.gray_params == ClassicalParams { n: gn, k: gk, d: gd } && rec.quantum == QuantumParams { n: qn, k: qk, d: qd }
}

/// Resolves the field modulus for one row (1-based) and compares the derived
/// parameters with the printed ones.
pub fn reproduce_row(row_number: usize, exec: Execution) -> Result<RowOutcome> {
    let row = *data::TABLE
        .get(row_number.wrapping_sub(1))
        .ok_or_else(|| Error::Parse { input: row_number.to_string(), reason: format!("rows are 1..={}", data::TABLE.len()) })?;
    let mut attempts = Vec::new();
    let mut first_resolved = None;
    for modulus in candidate_moduli(row.p, row.m) {
        match try_modulus(&row, &modulus, exec)? {
            Ok(rec) if matches_printed(&row, &rec) => {
                attempts.push(format!("{modulus:?}: matches"));
                return Ok(RowOutcome { row: row_number, printed: row, status: RowStatus::Confirmed, record: Some(rec), attempts });
            }
            Ok(rec) => {
                attempts.push(format!("{modulus:?}: derived {} {}", rec.gray_params, rec.quantum));
                first_resolved.get_or_insert(rec);
            }
            Err(reason) => attempts.push(format!("{modulus:?}: {reason}")),
        }
    }
    let status = if first_resolved.is_some() { RowStatus::Mismatch } else { RowStatus::Unresolved };
    Ok(RowOutcome { row: row_number, printed: row, status, record: first_resolved, attempts })
}

/// All rows when `rows` is empty.
pub fn reproduce_table(rows: &[usize], exec: Execution) -> Result<Vec<RowOutcome>> {
    let all: Vec<usize> = (1..=data::TABLE.len()).collect();
    let rows = if rows.is_empty() { &all[..] } else { rows };
    rows.iter().map(|&r| reproduce_row(r, exec)).collect()
}

/// Builds the field, ring and Gray matrix described by a job file.
pub fn context_from_config(cfg: &JobConfig) -> Result<CodeContext> {
    let field = Arc::new(match &cfg.modulus {
        Some(modulus) => Field::new(cfg.p, cfg.m, modulus)?,
        None => Field::with_default_modulus(cfg.p, cfg.m)?,
    });
    let gray = match &cfg.gray {
        GraySpec::Auto => GrayMatrix::default_for(&field),
        GraySpec::Identity => GrayMatrix::identity(&field),
        GraySpec::Preset(name) => GrayMatrix::preset(name, &field)?,
        GraySpec::Explicit(rows) => {
            let r = |i: usize| [rows[i][0].as_str(), rows[i][1].as_str(), rows[i][2].as_str()];
            GrayMatrix::parse(&field, [r(0), r(1), r(2)])?
        }
    };
    let rr = RingR::new(field.clone());
    let delta = match cfg.delta.split(',').collect::<Vec<_>>().as_slice() {
        [a, b, c] => rr.element(field.parse(a)?, field.parse(b)?, field.parse(c)?),
        _ => rr.parse(&cfg.delta)?,
    };
    let mut ctx = CodeContext::new(field, cfg.twist, cfg.n, delta, gray, cfg.gray_order)?;
    ctx.d_max = cfg.d_max;
    ctx.enum_bound = cfg.enum_bound;
    Ok(ctx)
}

/// Evaluates the fixed triple if the job names one, otherwise searches.
pub fn run_search(cfg: &JobConfig, exec: Execution) -> Result<SearchReport> {
    let ctx = context_from_config(cfg)?;
    match &cfg.f {
        Some(fs) => {
            let f = [
                ctx.ring.parse_coeff_string(&fs[0])?,
                ctx.ring.parse_coeff_string(&fs[1])?,
                ctx.ring.parse_coeff_string(&fs[2])?,
            ];
            let records: Vec<_> = ctx.evaluate(&f, exec)?.into_iter().collect();
            Ok(SearchReport { candidates: [1, 1, 1], records, uncertified: 0 })
        }
        None => quantum::search(&ctx, cfg.degree_bounds, exec),
    }
}

const COLUMNS: [&str; 10] = ["n", "delta", "lambdas", "f0", "f1", "f2", "gray", "quantum", "slack", "mds"];

fn record_fields(rec: &QuantumCodeRecord) -> [String; 10] {
    let field = &rec.field;
    let ring = SkewRing::new(field.clone(), rec.twist);
    let rr = RingR::new(field.clone());
    let sign = |x| if x == field.one() { "1".to_string() } else { "-1".to_string() };
    [
        rec.n_ring.to_string(),
        rr.format(rec.delta),
        format!("({})", rec.lambdas.iter().map(|&l| sign(l)).join(",")),
        ring.format_coeff_string(&rec.f_polys[0]),
        ring.format_coeff_string(&rec.f_polys[1]),
        ring.format_coeff_string(&rec.f_polys[2]),
        rec.gray_params.to_string(),
        rec.quantum_label(),
        rec.singleton_slack.to_string(),
        rec.is_mds.to_string(),
    ]
}

pub fn records_csv(records: &[QuantumCodeRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(COLUMNS).map_err(io)?;
    for rec in records {
        w.write_record(record_fields(rec)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

pub fn records_table(records: &[QuantumCodeRecord]) -> String {
    let rows: Vec<[String; 10]> = records.iter().map(record_fields).collect();
    let widths: Vec<usize> = (0..COLUMNS.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([COLUMNS[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(COLUMNS.to_vec());
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

/// Structure of `R` over `F_{p^m}`.
pub fn ring_info(p: u32, m: usize) -> Result<String> {
    let field = Arc::new(Field::with_default_modulus(p, m)?);
    let rr = RingR::new(field.clone());
    let q = field.order();
    let mut out = String::new();
    let poly = field.modulus().iter().rev().map(u32::to_string).join(",");
    let _ = writeln!(out, "field      F_{q} = F_{p}[t]/(modulus {poly}, descending)");
    let _ = writeln!(out, "zeta       {}", field.format(rr.zeta()));
    for (i, e) in rr.idempotents().iter().enumerate() {
        let _ = writeln!(out, "eta{i}       {}", rr.format(*e));
    }
    let _ = writeln!(out, "|R|        {}", (q as u128).pow(3));
    let _ = writeln!(out, "units      {}", ((q - 1) as u128).pow(3));
    let eta = rr.idempotents();
    let sum = eta.iter().fold(rr.zero(), |a, &b| rr.add(a, b));
    let mut orthogonal = sum == rr.one();
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j { eta[i] } else { rr.zero() };
            orthogonal &= rr.mul(eta[i], eta[j]) == expected;
        }
    }
    let _ = writeln!(out, "eta checks {}", if orthogonal { "orthogonal, sum to 1" } else { "FAILED" });
    if q <= 9 {
        let elements = rr.elements()?;
        let idempotents = elements.iter().filter(|&&r| rr.mul(r, r) == r).count();
        let units = elements.iter().filter(|&&r| rr.is_unit(r)).count();
        let _ = writeln!(out, "exhaustive {idempotents} idempotents, {units} units");
    }
    Ok(out)
}
