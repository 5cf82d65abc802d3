//! The skew polynomial ring `F_q[x; σ]` with `σ = Θ^k`, `Θ` the Frobenius map.
//!
//! Multiplication follows `(a x^i)(b x^j) = a σ^i(b) x^{i+j}`, so the ring is
//! non-commutative whenever `σ` is not the identity. Division is always
//! *right* division: `f = q·g + r` with the divisor `g` on the right and the
//! quotient `q` on the left.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::par::{self, Execution};

/// A polynomial with ascending coefficients and no trailing zeros. The zero
/// polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl SkewPoly {
    pub fn zero() -> SkewPoly {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn constant(c: FieldElement) -> SkewPoly {
        SkewPoly::from_coeffs(vec![c])
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Coefficient vector padded with zeros to `len`.
    pub fn to_vector(&self, len: usize) -> Vec<FieldElement> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), FieldElement::ZERO);
        v
    }
}

/// `F_q[x; Θ^twist]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRing {
    field: Arc<Field>,
    twist: u32,
}

impl SkewRing {
    pub fn new(field: Arc<Field>, twist: u32) -> SkewRing {
        let twist = twist % field.m() as u32;
        SkewRing { field, twist }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    /// Order of `σ`.
    pub fn automorphism_order(&self) -> usize {
        self.field.automorphism_order(self.twist)
    }

    /// `σ^i(a)`.
    pub fn sigma(&self, a: FieldElement, i: usize) -> FieldElement {
        let k = (self.twist as u64 * i as u64) % self.field.m() as u64;
        self.field.frobenius(a, k as u32)
    }

    pub fn one(&self) -> SkewPoly {
        SkewPoly::constant(self.field.one())
    }

    pub fn x(&self) -> SkewPoly {
        self.monomial(self.field.one(), 1)
    }

    pub fn monomial(&self, c: FieldElement, k: usize) -> SkewPoly {
        let mut v = vec![FieldElement::ZERO; k + 1];
        v[k] = c;
        SkewPoly::from_coeffs(v)
    }

    /// `x^n - λ`.
    pub fn x_n_minus(&self, n: usize, lambda: FieldElement) -> SkewPoly {
        let mut v = vec![FieldElement::ZERO; n + 1];
        v[0] = self.field.neg(lambda);
        v[n] = self.field.add(v[n], self.field.one());
        SkewPoly::from_coeffs(v)
    }

    /// Validates every coefficient against the field.
    pub fn check(&self, f: &SkewPoly) -> Result<()> {
        match f.coeffs.iter().find(|c| !self.field.contains(c)) {
            Some(c) => Err(Error::InvalidElement(c.raw_coeffs().to_vec())),
            None => Ok(()),
        }
    }

    pub fn is_monic(&self, f: &SkewPoly) -> bool {
        f.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let len = f.coeffs.len().max(g.coeffs.len());
        SkewPoly::from_coeffs((0..len).map(|i| self.field.add(f.coeff(i), g.coeff(i))).collect())
    }

    pub fn sub(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let len = f.coeffs.len().max(g.coeffs.len());
        SkewPoly::from_coeffs((0..len).map(|i| self.field.sub(f.coeff(i), g.coeff(i))).collect())
    }

    pub fn neg(&self, f: &SkewPoly) -> SkewPoly {
        SkewPoly::from_coeffs(f.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    /// The twisted product `f·g`.
    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        if f.is_zero() || g.is_zero() {
            return SkewPoly::zero();
        }
        let fd = self.field.as_ref();
        let order = self.automorphism_order();
        // σ^i(g) only depends on i mod order
        let twisted: Vec<Vec<FieldElement>> = (0..order.min(f.coeffs.len()))
            .map(|i| g.coeffs.iter().map(|&b| self.sigma(b, i)).collect())
            .collect();
        let mut out = vec![FieldElement::ZERO; f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in twisted[i % order].iter().enumerate() {
                out[i + j] = fd.add(out[i + j], fd.mul(a, b));
            }
        }
        SkewPoly::from_coeffs(out)
    }

    /// `(q, r)` with `f = q·g + r` and `deg r < deg g`.
    pub fn right_divmod(&self, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let fd = self.field.as_ref();
        let lc = g.leading().unwrap();
        let mut r = f.coeffs.clone();
        let mut q = vec![FieldElement::ZERO; f.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = r.len().checked_sub(1) {
            if dr < dg {
                break;
            }
            let shift = dr - dg;
            // leading term of (c x^shift)·g is c σ^shift(lc) x^dr
            let c = fd.div(r[dr], self.sigma(lc, shift))?;
            q[shift] = c;
            for (j, &b) in g.coeffs.iter().enumerate() {
                let term = fd.mul(c, self.sigma(b, shift));
                r[shift + j] = fd.sub(r[shift + j], term);
            }
            debug_assert!(r[dr].is_zero());
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((SkewPoly::from_coeffs(q), SkewPoly::from_coeffs(r)))
    }

    /// Whether `g` right-divides `f`, i.e. `f = q·g` for some `q`.
    pub fn right_divides(&self, g: &SkewPoly, f: &SkewPoly) -> Result<bool> {
        Ok(self.right_divmod(f, g)?.1.is_zero())
    }

    /// `h*(x) = Σ_j σ^j(h_{k-j}) x^j` for `k = deg h`.
    pub fn skew_reciprocal(&self, h: &SkewPoly) -> Result<SkewPoly> {
        let k = h.degree().ok_or(Error::DivisionByZero)?;
        Ok(SkewPoly::from_coeffs((0..=k).map(|j| self.sigma(h.coeffs[k - j], j)).collect()))
    }

    /// `x^n - λ` is central iff `σ` fixes `λ` and the order of `σ` divides `n`.
    pub fn is_central_modulus(&self, n: usize, lambda: FieldElement) -> bool {
        n.is_multiple_of(self.automorphism_order()) && self.sigma(lambda, 1) == lambda
    }

    /// Monic degree-`d` right divisors of `x^n - λ`, ordered by the index
    /// `Σ_j index(c_j) q^j` of their non-leading coefficients.
    pub fn enumerate_monic_right_divisors(
        &self,
        n: usize,
        lambda: FieldElement,
        d: usize,
        bound: u64,
        exec: Execution,
    ) -> Result<Vec<SkewPoly>> {
        let q = self.field.order();
        let needed = (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if needed > bound as u128 {
            return Err(Error::EnumerationBound { needed, bound });
        }
        if d > n {
            return Ok(Vec::new());
        }
        let modulus = self.x_n_minus(n, lambda);
        let candidate = |mut idx: u64| {
            let mut v = Vec::with_capacity(d + 1);
            for _ in 0..d {
                v.push(self.field.from_index(idx % q));
                idx /= q;
            }
            v.push(self.field.one());
            SkewPoly::from_coeffs(v)
        };
        Ok(par::filter_map_range(exec, 0..needed as u64, |idx| {
            let g = candidate(idx);
            self.right_divides(&g, &modulus).unwrap_or(false).then_some(g)
        }))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, degree: usize) -> SkewPoly {
        let mut v: Vec<FieldElement> = (0..degree).map(|_| self.field.random(rng)).collect();
        v.push(self.field.random_nonzero(rng));
        SkewPoly::from_coeffs(v)
    }

    /// Ascending coefficient string: one bare digit per small prime-field
    /// coefficient, everything else parenthesised, e.g. `(3t+3)(2t+3)1`.
    pub fn format_coeff_string(&self, f: &SkewPoly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        f.coeffs
            .iter()
            .map(|&c| {
                let s = self.field.format(c);
                if self.field.in_prime_field(c) && s.len() == 1 {
                    s
                } else {
                    format!("({s})")
                }
            })
            .collect()
    }

    pub fn parse_coeff_string(&self, input: &str) -> Result<SkewPoly> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let mut coeffs = Vec::new();
        let mut chars = input.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                c if c.is_whitespace() => {}
                '(' => {
                    let mut inner = String::new();
                    loop {
                        match chars.next() {
                            Some(')') => break,
                            Some(c) => inner.push(c),
                            None => return Err(err("unclosed '('")),
                        }
                    }
                    coeffs.push(self.field.parse(&inner)?);
                }
                c if c.is_ascii_digit() => coeffs.push(self.field.from_int(c.to_digit(10).unwrap() as i64)),
                _ => return Err(err("expected a digit or '('")),
            }
        }
        if coeffs.is_empty() {
            return Err(err("empty polynomial"));
        }
        Ok(SkewPoly::from_coeffs(coeffs))
    }

    /// Human-readable form, highest degree first: `x^2 + (3t+2)x + 2t+1`.
    pub fn format(&self, f: &SkewPoly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, &c) in f.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = self.field.format(c);
            let coef = if k == 0 {
                cs
            } else if self.field.is_one(c) {
                String::new()
            } else if cs.contains('+') {
                format!("({cs})")
            } else {
                cs
            };
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            terms.push(format!("{coef}{mono}"));
        }
        terms.join(" + ")
    }

    /// Parses the human form, e.g. `x^{12} + (3t + 2)x^2 - 2tx + 4t + 1`.
    /// Constant fragments separated by top-level `+` are summed.
    pub fn parse(&self, input: &str) -> Result<SkewPoly> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let s: String = input.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        if s.is_empty() {
            return Err(err("empty polynomial"));
        }
        let fd = self.field.as_ref();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        let mut negative = false;
        for ch in s.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !current.is_empty() {
                        terms.push((negative, std::mem::take(&mut current)));
                    } else if !terms.is_empty() {
                        return Err(err("dangling sign"));
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if depth != 0 {
            return Err(err("unbalanced parentheses"));
        }
        if current.is_empty() {
            return Err(err("trailing sign"));
        }
        terms.push((negative, current));

        let mut acc: Vec<FieldElement> = Vec::new();
        for (neg, term) in terms {
            let (coef_str, power) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("unexpected text after x"));
                    };
                    (&term[..pos], power)
                }
            };
            let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
            let coef = if coef_str.is_empty() {
                fd.one()
            } else if let Some(inner) = coef_str.strip_prefix('(').and_then(|c| c.strip_suffix(')')) {
                fd.parse(inner)?
            } else {
                fd.parse(coef_str)?
            };
            let coef = if neg { fd.neg(coef) } else { coef };
            if acc.len() <= power {
                acc.resize(power + 1, FieldElement::ZERO);
            }
            acc[power] = fd.add(acc[power], coef);
        }
        Ok(SkewPoly::from_coeffs(acc))
    }
}
