//! Gray map `ψ: R^n -> F_q^{3n}`, `r -> (β0, β1, β2)·M` for an invertible `M`,
//! and the section-wise quasi-twist operator.
//!
//! The image of a word is laid out either in blocks (all first components,
//! then all second, then all third) or interleaved (the three components of
//! each coordinate side by side). The two layouts differ by a fixed
//! coordinate permutation, so weights and distances agree; only the block
//! layout makes the quasi-twist sections contiguous of length `n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::linear_code::{tau_shift, tau_shift_ring, LinearCode, RCode};
use crate::matrix::{self, Row};
use crate::ring_r::{CrtCoords, RingElement, RingR};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GrayOrder {
    #[default]
    Blocks,
    Interleaved,
}

impl GrayOrder {
    /// Output position of component `l` of coordinate `j` for word length `n`.
    pub fn position(self, n: usize, j: usize, l: usize) -> usize {
        match self {
            GrayOrder::Blocks => l * n + j,
            GrayOrder::Interleaved => 3 * j + l,
        }
    }
}

impl fmt::Display for GrayOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrayOrder::Blocks => "blocks",
            GrayOrder::Interleaved => "interleaved",
        })
    }
}

impl FromStr for GrayOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "blocks" => Ok(GrayOrder::Blocks),
            "interleaved" => Ok(GrayOrder::Interleaved),
            other => Err(Error::Parse { input: other.into(), reason: "expected blocks or interleaved".into() }),
        }
    }
}

/// Matrices shipped with the crate, as `(name, p, m, rows)` in field-element syntax.
pub const PRESETS: &[(&str, u32, usize, [[&str; 3]; 3])] = &[
    ("ref-3-2", 3, 2, [["t^2", "2", "t"], ["2", "t", "t^2"], ["t", "t^2", "2"]]),
    ("ref-5-2", 5, 2, [["3", "2", "1"], ["3", "4", "3"], ["4", "3", "2"]]),
    ("ref-7-2", 7, 2, [["1", "6", "3"], ["4", "1", "6"], ["6", "3", "6"]]),
    ("ref-11-2", 11, 2, [["7", "4", "2"], ["9", "7", "4"], ["4", "2", "4"]]),
    ("ref-13-2", 13, 2, [["9", "4", "2"], ["11", "9", "4"], ["4", "2", "4"]]),
];

/// An invertible 3×3 matrix over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayMatrix {
    rows: [[FieldElement; 3]; 3],
    alpha: Option<FieldElement>,
}

fn det3(f: &Field, m: &[[FieldElement; 3]; 3]) -> FieldElement {
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][c], m[2][d]))
    };
    let t0 = f.mul(m[0][0], minor(1, 2, 2, 1));
    let t1 = f.mul(m[0][1], minor(0, 2, 2, 0));
    let t2 = f.mul(m[0][2], minor(0, 1, 1, 0));
    f.add(f.sub(t0, t1), t2)
}

impl GrayMatrix {
    pub fn new(field: &Field, rows: [[FieldElement; 3]; 3]) -> Result<GrayMatrix> {
        if det3(field, &rows).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let mut m = GrayMatrix { rows, alpha: None };
        m.alpha = m.check_orthogonality(field);
        Ok(m)
    }

    pub fn identity(field: &Field) -> GrayMatrix {
        let (o, z) = (field.one(), field.zero());
        GrayMatrix::new(field, [[o, z, z], [z, o, z], [z, z, o]]).expect("identity is invertible")
    }

    pub fn parse(field: &Field, rows: [[&str; 3]; 3]) -> Result<GrayMatrix> {
        let mut out = [[field.zero(); 3]; 3];
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                out[i][j] = field.parse(s)?;
            }
        }
        GrayMatrix::new(field, out)
    }

    /// A named matrix from [`PRESETS`]; the name must match the field.
    pub fn preset(name: &str, field: &Field) -> Result<GrayMatrix> {
        let (_, p, m, rows) = PRESETS
            .iter()
            .find(|(n, ..)| *n == name)
            .ok_or_else(|| Error::UnknownPreset(name.into()))?;
        if *p != field.p() || *m != field.m() {
            return Err(Error::UnknownPreset(format!("{name} for F_{}^{}", field.p(), field.m())));
        }
        GrayMatrix::parse(field, *rows)
    }

    /// The preset for this field's `(p, m)` if there is one, else the identity.
    pub fn default_for(field: &Field) -> GrayMatrix {
        PRESETS
            .iter()
            .find(|(_, p, m, _)| *p == field.p() && *m == field.m())
            .and_then(|(name, ..)| GrayMatrix::preset(name, field).ok())
            .unwrap_or_else(|| GrayMatrix::identity(field))
    }

    pub fn rows(&self) -> &[[FieldElement; 3]; 3] {
        &self.rows
    }

    /// `α` with `M M^T = α I`, when it exists.
    pub fn alpha(&self) -> Option<FieldElement> {
        self.alpha
    }

    /// `Some(α)` if `M M^T = α I_3` with `α ≠ 0`.
    pub fn check_orthogonality(&self, field: &Field) -> Option<FieldElement> {
        let gram = |i: usize, j: usize| matrix::dot(field, &self.rows[i], &self.rows[j]);
        let alpha = gram(0, 0);
        if alpha.is_zero() {
            return None;
        }
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { alpha } else { field.zero() };
                if gram(i, j) != expected {
                    return None;
                }
            }
        }
        Some(alpha)
    }

    /// `(β0, β1, β2)·M`.
    pub fn apply(&self, field: &Field, beta: [FieldElement; 3]) -> [FieldElement; 3] {
        let mut out = [field.zero(); 3];
        for (l, o) in out.iter_mut().enumerate() {
            for (i, &b) in beta.iter().enumerate() {
                *o = field.add(*o, field.mul(b, self.rows[i][l]));
            }
        }
        out
    }

    /// `M^{-1}` by the adjugate formula.
    pub fn inverse(&self, field: &Field) -> [[FieldElement; 3]; 3] {
        let m = &self.rows;
        let det_inv = field.inv(det3(field, m)).expect("matrix was checked invertible");
        let mut out = [[field.zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                // cofactor of (j, i)
                let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
                let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
                let cof = field.sub(field.mul(m[r0][c0], m[r1][c1]), field.mul(m[r0][c1], m[r1][c0]));
                *x = field.mul(cof, det_inv);
            }
        }
        out
    }

    pub fn format(&self, field: &Field) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| field.format(x)).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// `ψ(word)` in the requested layout.
pub fn gray_map(ring: &RingR, word: &[RingElement], m: &GrayMatrix, order: GrayOrder) -> Row {
    let f = ring.field();
    let n = word.len();
    let mut out = vec![f.zero(); 3 * n];
    for (j, &r) in word.iter().enumerate() {
        let u = m.apply(f, ring.to_crt(r).as_array());
        for (l, &x) in u.iter().enumerate() {
            out[order.position(n, j, l)] = x;
        }
    }
    out
}

/// `ψ^{-1}` on a word of length `3n`.
pub fn gray_unmap(ring: &RingR, word: &[FieldElement], m: &GrayMatrix, order: GrayOrder) -> Result<Vec<RingElement>> {
    if !word.len().is_multiple_of(3) {
        return Err(Error::SectionMismatch { len: word.len(), sections: 3 });
    }
    let f = ring.field();
    let n = word.len() / 3;
    let inv = m.inverse(f);
    Ok((0..n)
        .map(|j| {
            let mut beta = [f.zero(); 3];
            for (i, b) in beta.iter_mut().enumerate() {
                for (l, row) in inv.iter().enumerate() {
                    *b = f.add(*b, f.mul(word[order.position(n, j, l)], row[i]));
                }
            }
            ring.from_crt(CrtCoords::from_array(beta))
        })
        .collect())
}

/// `ψ(C)` as a linear code of length `3n`. A row `g` of `Ai` contributes
/// `ψ(ηi g)`, whose `l`-th component at coordinate `j` is `g_j M[i][l]`.
pub fn gray_image(code: &RCode, m: &GrayMatrix, order: GrayOrder) -> Result<LinearCode> {
    let f = code.components[0].field_arc().clone();
    let n = code.n();
    let mut rows = Vec::with_capacity(code.log_q_size());
    for (i, comp) in code.components.iter().enumerate() {
        for g in comp.generator() {
            let mut row = vec![f.zero(); 3 * n];
            for (j, &x) in g.iter().enumerate() {
                for l in 0..3 {
                    row[order.position(n, j, l)] = f.mul(x, m.rows[i][l]);
                }
            }
            rows.push(row);
        }
    }
    LinearCode::new(f, 3 * n, rows)
}

/// `Υ`: applies `τ_{σ,λ}` independently to each of `sections` contiguous
/// sections of the word.
pub fn quasi_twist(field: &Field, word: &[FieldElement], sections: usize, lambda: FieldElement, twist: u32) -> Result<Row> {
    if sections == 0 || !word.len().is_multiple_of(sections) {
        return Err(Error::SectionMismatch { len: word.len(), sections });
    }
    let s = word.len() / sections;
    Ok(word.chunks(s).flat_map(|sec| tau_shift(field, sec, lambda, twist)).collect())
}

/// `Υ` over `R` with a unit `δ`.
pub fn quasi_twist_ring(
    ring: &RingR,
    word: &[RingElement],
    sections: usize,
    delta: RingElement,
    twist: u32,
) -> Result<Vec<RingElement>> {
    if sections == 0 || !word.len().is_multiple_of(sections) {
        return Err(Error::SectionMismatch { len: word.len(), sections });
    }
    let s = word.len() / sections;
    Ok(word
        .chunks(s)
        .flat_map(|sec| tau_shift_ring(ring, sec, delta, twist))
        .collect())
}

/// Whether `Υ(C) ⊆ C`. `Υ` is semilinear, so the generator rows suffice.
pub fn is_quasi_twisted(code: &LinearCode, sections: usize, lambda: FieldElement, twist: u32) -> Result<bool> {
    for row in code.generator() {
        if !code.contains_word(&quasi_twist(code.field(), row, sections, lambda, twist)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the Gray image is closed under `ψ ∘ τ_{σ,δ} ∘ ψ^{-1}`, the shift
/// carried over from `R^n`. Reduces to the section-wise quasi-twist with
/// `λ = δ` when `δ = ±1` and `M` has entries fixed by `Θ`.
pub fn is_gray_shift_invariant(
    ring: &RingR,
    image: &LinearCode,
    m: &GrayMatrix,
    order: GrayOrder,
    delta: RingElement,
    twist: u32,
) -> Result<bool> {
    for row in image.generator() {
        let c = gray_unmap(ring, row, m, order)?;
        let shifted = tau_shift_ring(ring, &c, delta, twist);
        if !image.contains_word(&gray_map(ring, &shifted, m, order)) {
            return Ok(false);
        }
    }
    Ok(true)
}
