//! The ring `R = F_q[v]/(v^3 - v) = F_q + vF_q + v^2F_q`.
//!
//! `R` is a finite commutative non-chain ring with three maximal ideals. With
//! `ζ = 2^{-1} mod p` its primitive orthogonal idempotents are
//!
//! ```text
//! η0 = 1 - v^2,   η1 = ζ(v^2 + v),   η2 = ζ(v^2 - v)
//! ```
//!
//! and every `r = a + bv + cv^2` splits uniquely as `β0η0 + β1η1 + β2η2`.
//! Multiplying `r` by `ηi` kills the other two idempotents, so `βi` is the
//! value of `a + bv + cv^2` at the root of `v^3 - v` that `ηi` selects:
//!
//! ```text
//! β0 = a          (v = 0)
//! β1 = a + b + c  (v = 1)
//! β2 = a - b + c  (v = -1)
//! ```
//!
//! The CRT map `r -> (β0, β1, β2)` is a ring isomorphism `R -> F_q^3`, so
//! `r` is a unit exactly when all three coordinates are nonzero.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};

/// `a + bv + cv^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingElement {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

/// Coordinates of `β0η0 + β1η1 + β2η2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct CrtCoords {
    pub beta0: FieldElement,
    pub beta1: FieldElement,
    pub beta2: FieldElement,
}

impl CrtCoords {
    pub fn as_array(&self) -> [FieldElement; 3] {
        [self.beta0, self.beta1, self.beta2]
    }

    pub fn from_array(b: [FieldElement; 3]) -> CrtCoords {
        CrtCoords { beta0: b[0], beta1: b[1], beta2: b[2] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingR {
    field: Arc<Field>,
    zeta: FieldElement,
}

impl RingR {
    pub fn new(field: Arc<Field>) -> RingR {
        // p is odd, so 2 is invertible in the prime field
        let zeta = field.inv(field.from_int(2)).expect("odd characteristic");
        RingR { field, zeta }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    /// `ζ` with `2ζ ≡ 1 (mod p)`.
    pub fn zeta(&self) -> FieldElement {
        self.zeta
    }

    pub fn element(&self, a: FieldElement, b: FieldElement, c: FieldElement) -> RingElement {
        RingElement { a, b, c }
    }

    pub fn zero(&self) -> RingElement {
        RingElement::default()
    }

    pub fn one(&self) -> RingElement {
        self.scalar(self.field.one())
    }

    pub fn scalar(&self, a: FieldElement) -> RingElement {
        RingElement { a, ..RingElement::default() }
    }

    pub fn v(&self) -> RingElement {
        RingElement { b: self.field.one(), ..RingElement::default() }
    }

    pub fn idempotents(&self) -> [RingElement; 3] {
        let f = &self.field;
        let one = f.one();
        let z = self.zeta;
        [
            RingElement { a: one, b: f.zero(), c: f.neg(one) },
            RingElement { a: f.zero(), b: z, c: z },
            RingElement { a: f.zero(), b: f.neg(z), c: z },
        ]
    }

    pub fn add(&self, r: RingElement, s: RingElement) -> RingElement {
        let f = &self.field;
        RingElement { a: f.add(r.a, s.a), b: f.add(r.b, s.b), c: f.add(r.c, s.c) }
    }

    pub fn sub(&self, r: RingElement, s: RingElement) -> RingElement {
        let f = &self.field;
        RingElement { a: f.sub(r.a, s.a), b: f.sub(r.b, s.b), c: f.sub(r.c, s.c) }
    }

    pub fn neg(&self, r: RingElement) -> RingElement {
        self.sub(self.zero(), r)
    }

    /// Product reduced with `v^3 = v`, `v^4 = v^2`.
    pub fn mul(&self, r: RingElement, s: RingElement) -> RingElement {
        let f = &self.field;
        let m = |x, y| f.mul(x, y);
        let a = m(r.a, s.a);
        let b = f.add(f.add(m(r.a, s.b), m(r.b, s.a)), f.add(m(r.b, s.c), m(r.c, s.b)));
        let c = f.add(f.add(m(r.a, s.c), m(r.c, s.a)), f.add(m(r.b, s.b), m(r.c, s.c)));
        RingElement { a, b, c }
    }

    pub fn scale(&self, k: FieldElement, r: RingElement) -> RingElement {
        let f = &self.field;
        RingElement { a: f.mul(k, r.a), b: f.mul(k, r.b), c: f.mul(k, r.c) }
    }

    pub fn to_crt(&self, r: RingElement) -> CrtCoords {
        let f = &self.field;
        let ac = f.add(r.a, r.c);
        CrtCoords { beta0: r.a, beta1: f.add(ac, r.b), beta2: f.sub(ac, r.b) }
    }

    /// `β0η0 + β1η1 + β2η2 = β0 + ζ(β1 - β2)v + (ζ(β1 + β2) - β0)v^2`.
    pub fn from_crt(&self, x: CrtCoords) -> RingElement {
        let f = &self.field;
        RingElement {
            a: x.beta0,
            b: f.mul(self.zeta, f.sub(x.beta1, x.beta2)),
            c: f.sub(f.mul(self.zeta, f.add(x.beta1, x.beta2)), x.beta0),
        }
    }

    pub fn is_unit(&self, r: RingElement) -> bool {
        self.to_crt(r).as_array().iter().all(|b| !b.is_zero())
    }

    pub fn inv(&self, r: RingElement) -> Result<RingElement> {
        let x = self.to_crt(r);
        let f = &self.field;
        let inv = |b| f.inv(b).map_err(|_| Error::NotAUnit(self.format(r)));
        Ok(self.from_crt(CrtCoords { beta0: inv(x.beta0)?, beta1: inv(x.beta1)?, beta2: inv(x.beta2)? }))
    }

    /// `σ(a + bv + cv^2) = Θ^k(a) + Θ^k(b)v + Θ^k(c)v^2`.
    pub fn sigma(&self, r: RingElement, twist: u32) -> RingElement {
        let f = &self.field;
        RingElement { a: f.frobenius(r.a, twist), b: f.frobenius(r.b, twist), c: f.frobenius(r.c, twist) }
    }

    /// Every element of `R`, `a` varying fastest.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let elems: Vec<FieldElement> = self.field.elements()?.collect();
        let mut out = Vec::with_capacity(elems.len().pow(3));
        for &c in &elems {
            for &b in &elems {
                for &a in &elems {
                    out.push(RingElement { a, b, c });
                }
            }
        }
        Ok(out)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElement {
        RingElement { a: self.field.random(rng), b: self.field.random(rng), c: self.field.random(rng) }
    }

    /// `a + (b)v + (c)v^2`, omitting zero terms.
    pub fn format(&self, r: RingElement) -> String {
        let f = &self.field;
        let mut parts = Vec::new();
        if !r.a.is_zero() {
            parts.push(f.format(r.a));
        }
        for (coef, mono) in [(r.b, "v"), (r.c, "v^2")] {
            if coef.is_zero() {
                continue;
            }
            let s = f.format(coef);
            parts.push(if f.is_one(coef) {
                mono.to_string()
            } else if s.contains('+') {
                format!("({s}){mono}")
            } else {
                format!("{s}{mono}")
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Parses forms such as `1-2v^2`, `2v^2-1`, `3 + (t+1)v`.
    pub fn parse(&self, input: &str) -> Result<RingElement> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty ring element"));
        }
        let f = &self.field;
        let mut out = self.zero();
        let mut depth = 0;
        let mut start = 0;
        let bytes: Vec<char> = s.chars().collect();
        let mut pieces = Vec::new();
        for (i, &ch) in bytes.iter().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > 0 => {
                    pieces.push(bytes[start..i].iter().collect::<String>());
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(bytes[start..].iter().collect::<String>());
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coef_str, slot) = if let Some(c) = body.strip_suffix("v^2") {
                (c, 2)
            } else if let Some(c) = body.strip_suffix('v') {
                (c, 1)
            } else {
                (body, 0)
            };
            let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
            let coef = if coef_str.is_empty() {
                if slot == 0 {
                    return Err(err("empty term"));
                }
                f.one()
            } else if let Some(inner) = coef_str.strip_prefix('(').and_then(|c| c.strip_suffix(')')) {
                f.parse(inner)?
            } else {
                f.parse(coef_str)?
            };
            let coef = if neg { f.neg(coef) } else { coef };
            match slot {
                0 => out.a = f.add(out.a, coef),
                1 => out.b = f.add(out.b, coef),
                _ => out.c = f.add(out.c, coef),
            }
        }
        Ok(out)
    }
}
