//! Arithmetic in `F_{p^m}` for an odd prime `p`.
//!
//! Elements are polynomials in a generator `t` of degree `< m` with residues in
//! `[0, p)`, reduced by a monic irreducible modulus. The [`Field`] value is the
//! context every operation goes through; [`FieldElement`] is a plain `Copy`
//! value that only makes sense together with the field it was created in.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 8;

/// Default cap on the number of candidates any exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000_000;

/// An element of `F_{p^m}`: ascending coefficients in `t`, zero beyond degree `m - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement([u32; MAX_DEGREE]);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement([0; MAX_DEGREE]);

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All `MAX_DEGREE` stored coefficients; entries at index `>= m` are zero.
    pub fn raw_coeffs(&self) -> &[u32; MAX_DEGREE] {
        &self.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c != 0).unwrap_or(0);
        write!(f, "FE{:?}", &self.0[..=last])
    }
}

/// Defining data of `F_{p^m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldParams {
    pub p: u32,
    pub m: usize,
    /// Monic modulus, ascending, length `m + 1`.
    pub modulus: Vec<u32>,
}

/// Conway polynomials for the fields used by the bundled presets.
const CONWAY: &[(u32, usize, &[u32])] = &[
    (3, 1, &[1, 1]),
    (5, 1, &[3, 1]),
    (7, 1, &[4, 1]),
    (11, 1, &[9, 1]),
    (13, 1, &[11, 1]),
    (17, 1, &[14, 1]),
    (19, 1, &[17, 1]),
    (23, 1, &[18, 1]),
    (3, 2, &[2, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
    (17, 2, &[3, 16, 1]),
    (19, 2, &[2, 18, 1]),
    (23, 2, &[5, 21, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
];

/// The Conway polynomial for `F_{p^m}`, if it is in the built-in table.
pub fn conway_polynomial(p: u32, m: usize) -> Option<Vec<u32>> {
    CONWAY
        .iter()
        .find(|(cp, cm, _)| *cp == p && *cm == m)
        .map(|(_, _, c)| c.to_vec())
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// Dense polynomial helpers over F_p (ascending, untrimmed inputs allowed).

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo `b` over F_p; `b` must be nonzero.
fn poly_rem_fp(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lc_inv = inv_mod_p(b[db], p) as u64;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (*r.last().unwrap() as u64 * lc_inv) % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let sub = c * bi as u64 % p as u64;
            let slot = &mut r[shift + i];
            *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

/// Every monic polynomial of degree `d` over F_p, ascending, in lexicographic
/// order of the non-leading coefficients (constant term varies fastest).
fn monic_polys(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        v.push(1);
        v
    })
}

/// Irreducibility over F_p by trial division with all monic polynomials of
/// degree `1..=deg/2`.
pub fn is_irreducible_fp(poly: &[u32], p: u32) -> bool {
    let mut f = poly.to_vec();
    trim(&mut f);
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        if monic_polys(p, d).any(|g| poly_rem_fp(&f, &g, p).is_empty()) {
            return false;
        }
    }
    true
}

/// All monic irreducible polynomials of degree `m` over F_p, in lexicographic order.
pub fn monic_irreducibles(p: u32, m: usize) -> Vec<Vec<u32>> {
    monic_polys(p, m)
        .filter(|g| is_irreducible_fp(g, p))
        .collect()
}

/// The finite field `F_{p^m}` with a fixed modulus.
#[derive(Clone, Debug)]
pub struct Field {
    params: FieldParams,
    order: u64,
    /// Images of `t^i` under the Frobenius map `a -> a^p`.
    frob_basis: Vec<FieldElement>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: u32, m: usize, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(m));
        }
        if p as u64 >= 1 << 16 {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() != m + 1 || modulus[m] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus { expected: m, got: modulus.to_vec() });
        }
        if !is_irreducible_fp(modulus, p) {
            return Err(Error::ReducibleModulus(modulus.to_vec()));
        }
        let mut field = Field {
            params: FieldParams { p, m, modulus: modulus.to_vec() },
            order: (p as u64).pow(m as u32),
            frob_basis: Vec::new(),
        };
        let mut basis = Vec::with_capacity(m);
        let mut t_i = field.one();
        let t = field.generator();
        for _ in 0..m {
            basis.push(field.pow(t_i, p as u64));
            t_i = field.mul(t_i, t);
        }
        field.frob_basis = basis;
        Ok(field)
    }

    /// `F_{p^m}` with its Conway polynomial when known, otherwise the
    /// lexicographically first monic irreducible. For `m = 1` the modulus is `x`.
    pub fn with_default_modulus(p: u32, m: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(m));
        }
        let modulus = match conway_polynomial(p, m) {
            Some(c) => c,
            None => monic_polys(p, m)
                .find(|g| is_irreducible_fp(g, p))
                .expect("irreducible polynomials exist in every degree"),
        };
        Field::new(p, m, &modulus)
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn p(&self) -> u32 {
        self.params.p
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    /// `q = p^m`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.params.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The generator `t` (for `m = 1`, the root of the degree-one modulus).
    pub fn generator(&self) -> FieldElement {
        if self.params.m == 1 {
            let c = self.params.modulus[0];
            return self.from_int(-(c as i64));
        }
        let mut c = [0; MAX_DEGREE];
        c[1] = 1;
        FieldElement(c)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let mut c = [0; MAX_DEGREE];
        c[0] = v.rem_euclid(self.params.p as i64) as u32;
        FieldElement(c)
    }

    /// Validates an ascending coefficient list (length at most `m`, residues `< p`).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.params.m || coeffs.iter().any(|&c| c >= self.params.p) {
            return Err(Error::InvalidElement(coeffs.to_vec()));
        }
        let mut c = [0; MAX_DEGREE];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(FieldElement(c))
    }

    /// The `m` coefficients of `a`.
    pub fn coeffs<'a>(&self, a: &'a FieldElement) -> &'a [u32] {
        &a.0[..self.params.m]
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.0[..self.params.m].iter().all(|&c| c < self.params.p)
            && a.0[self.params.m..].iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: FieldElement) -> bool {
        a == self.one()
    }

    pub fn in_prime_field(&self, a: FieldElement) -> bool {
        a.0[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.params.p;
        let mut c = [0; MAX_DEGREE];
        for ((ci, &x), &y) in c.iter_mut().zip(&a.0).zip(&b.0).take(self.params.m) {
            let s = x + y;
            *ci = if s >= p { s - p } else { s };
        }
        FieldElement(c)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.params.p;
        let mut c = [0; MAX_DEGREE];
        for ((ci, &x), &y) in c.iter_mut().zip(&a.0).zip(&b.0).take(self.params.m) {
            *ci = if x >= y { x - y } else { x + p - y };
        }
        FieldElement(c)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement::ZERO, a)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let m = self.params.m;
        let p = self.params.p as u64;
        if m == 1 {
            let mut c = [0; MAX_DEGREE];
            c[0] = ((a.0[0] as u64 * b.0[0] as u64) % p) as u32;
            return FieldElement(c);
        }
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] += a.0[i] as u64 * b.0[j] as u64;
            }
        }
        for v in prod.iter_mut().take(2 * m - 1) {
            *v %= p;
        }
        let modulus = &self.params.modulus;
        for top in (m..2 * m - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            // t^m = -(modulus[0] + ... + modulus[m-1] t^{m-1})
            for (k, &mk) in modulus.iter().take(m).enumerate() {
                let idx = top - m + k;
                prod[idx] = (prod[idx] + (p - mk as u64) * c) % p;
            }
        }
        let mut out = [0; MAX_DEGREE];
        for i in 0..m {
            out[i] = prod[i] as u32;
        }
        FieldElement(out)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `Θ^k(a) = a^{p^k}`, applied as `k mod m` successive `p`-th powers.
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        let mut x = a;
        for _ in 0..(k as usize % self.params.m) {
            x = self.frobenius_once(x);
        }
        x
    }

    /// One `p`-th power; linear over F_p, so the cached images of `t^i` suffice.
    fn frobenius_once(&self, a: FieldElement) -> FieldElement {
        let p = self.params.p as u64;
        let m = self.params.m;
        let mut acc = [0u64; MAX_DEGREE];
        for (i, img) in self.frob_basis.iter().enumerate() {
            let c = a.0[i] as u64;
            if c == 0 {
                continue;
            }
            for (acc_j, &b) in acc.iter_mut().zip(&img.0).take(m) {
                *acc_j += c * b as u64;
            }
        }
        let mut out = [0; MAX_DEGREE];
        for j in 0..m {
            out[j] = (acc[j] % p) as u32;
        }
        FieldElement(out)
    }

    /// Order of `Θ^k` in the automorphism group: `m / gcd(m, k)`.
    pub fn automorphism_order(&self, k: u32) -> usize {
        let m = self.params.m;
        m / gcd(m, k as usize % m)
    }

    /// Position of `a` in the enumeration order: `Σ c_i p^i`.
    pub fn index(&self, a: FieldElement) -> u64 {
        let p = self.params.p as u64;
        a.0[..self.params.m].iter().rev().fold(0, |acc, &c| acc * p + c as u64)
    }

    pub fn from_index(&self, mut idx: u64) -> FieldElement {
        let p = self.params.p as u64;
        let mut c = [0; MAX_DEGREE];
        for slot in c.iter_mut().take(self.params.m) {
            *slot = (idx % p) as u32;
            idx /= p;
        }
        FieldElement(c)
    }

    /// Every element exactly once, in index order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn elements_bounded(&self, bound: u64) -> Result<impl Iterator<Item = FieldElement> + '_> {
        if self.order > bound {
            return Err(Error::EnumerationBound { needed: self.order as u128, bound });
        }
        Ok((0..self.order).map(move |i| self.from_index(i)))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.from_index(rng.gen_range(0..self.order))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.from_index(rng.gen_range(1..self.order))
    }

    /// Renders `a` as a polynomial in `t`, highest power first, e.g. `4t+1`.
    pub fn format(&self, a: FieldElement) -> String {
        let mut out = String::new();
        for i in (0..self.params.m).rev() {
            let c = a.0[i];
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            match (i, c) {
                (0, _) => out.push_str(&c.to_string()),
                (1, 1) => out.push('t'),
                (1, _) => out.push_str(&format!("{c}t")),
                (_, 1) => out.push_str(&format!("t^{i}")),
                _ => out.push_str(&format!("{c}t^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses a sum of terms `c`, `ct`, `t`, `ct^k` with `+`/`-`, ignoring whitespace.
    pub fn parse(&self, input: &str) -> Result<FieldElement> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty field element"));
        }
        let mut acc = self.zero();
        let mut pos = 0;
        let mut first = true;
        while pos < s.len() {
            let mut negative = false;
            if s[pos] == '+' || s[pos] == '-' {
                negative = s[pos] == '-';
                pos += 1;
            } else if !first {
                return Err(err("expected '+' or '-'"));
            }
            first = false;
            let start = pos;
            while pos < s.len() && s[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<i64> = if pos > start {
                let digits: String = s[start..pos].iter().collect();
                Some(digits.parse().map_err(|_| err("integer overflow"))?)
            } else {
                None
            };
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
            }
            let mut power = 0u64;
            if pos < s.len() && s[pos] == 't' {
                pos += 1;
                power = 1;
                if pos < s.len() && s[pos] == '^' {
                    pos += 1;
                    let ps = pos;
                    while pos < s.len() && s[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if ps == pos {
                        return Err(err("missing exponent"));
                    }
                    let digits: String = s[ps..pos].iter().collect();
                    power = digits.parse().map_err(|_| err("bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(err("expected a number or t"));
            }
            let c = self.from_int(coeff.unwrap_or(1));
            let term = self.mul(c, self.pow(self.generator(), power));
            acc = if negative { self.sub(acc, term) } else { self.add(acc, term) };
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f25() -> Field {
        // t^2 = t + 3
        Field::new(5, 2, &[2, 4, 1]).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert_eq!(Field::new(2, 1, &[0, 1]).unwrap_err(), Error::EvenCharacteristic(2));
        assert_eq!(Field::new(9, 1, &[0, 1]).unwrap_err(), Error::NotPrime(9));
        // x^2 + 1 = (x+2)(x+3) over F_5
        assert!(matches!(Field::new(5, 2, &[1, 0, 1]), Err(Error::ReducibleModulus(_))));
        assert!(matches!(Field::new(5, 2, &[2, 4, 2]), Err(Error::BadModulus { .. })));
    }

    #[test]
    fn addition_examples() {
        let f = f25();
        let t = f.generator();
        let a = f.parse("4t+1").unwrap();
        assert_eq!(f.add(t, a), f.one());
        assert_eq!(f.add(a, f.zero()), a);
        assert!(f.add(a, f.neg(a)).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        let f = f25();
        let t = f.generator();
        assert_eq!(f.mul(t, t), f.parse("t+3").unwrap());
        assert_eq!(f.mul(t, f.parse("2t+3").unwrap()), f.one());
        let a = f.parse("3t+4").unwrap();
        assert_eq!(f.mul(a, f.one()), a);
    }

    #[test]
    fn inverse_examples() {
        let f = f25();
        assert_eq!(f.inv(f.one()).unwrap(), f.one());
        // brute force inverse of t
        let t = f.generator();
        let brute = f.elements().unwrap().find(|&x| f.mul(x, t) == f.one()).unwrap();
        assert_eq!(brute, f.parse("2t+3").unwrap());
        assert_eq!(f.inv(t).unwrap(), brute);
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(3));
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_examples() {
        let f = f25();
        let t = f.generator();
        let theta_t = f.frobenius(t, 1);
        assert_eq!(theta_t, f.parse("4t+1").unwrap());
        assert_eq!(theta_t, f.pow(t, 5));
        // the conjugate root of x^2 - x - 3
        let r = theta_t;
        assert!(f.sub(f.sub(f.mul(r, r), r), f.from_int(3)).is_zero());
        for a in f.elements().unwrap() {
            assert_eq!(f.frobenius(a, 2), a);
        }
        assert_eq!(f.frobenius(f.from_int(3), 1), f.from_int(3));
    }

    #[test]
    fn automorphism_orders() {
        let f = f25();
        assert_eq!(f.automorphism_order(1), 2);
        assert_eq!(f.automorphism_order(2), 1);
        let f81 = Field::with_default_modulus(3, 4).unwrap();
        assert_eq!(f81.automorphism_order(2), 2);
        assert_eq!(f81.automorphism_order(1), 4);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Field::with_default_modulus(5, 1).unwrap().elements().unwrap().count(), 5);
        assert_eq!(f25().elements().unwrap().count(), 25);
        assert_eq!(Field::with_default_modulus(7, 2).unwrap().elements().unwrap().count(), 49);
        assert!(matches!(
            f25().elements_bounded(10).map(|_| ()),
            Err(Error::EnumerationBound { needed: 25, bound: 10 })
        ));
    }

    #[test]
    fn conway_table_entries_are_irreducible() {
        for (p, m, c) in CONWAY {
            assert!(is_irreducible_fp(c, *p), "p={p} m={m}");
        }
    }

    #[test]
    fn format_and_parse() {
        let f = f25();
        for a in f.elements().unwrap() {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
        assert_eq!(f.format(f.parse("5t").unwrap()), "0");
        assert_eq!(f.parse("-1").unwrap(), f.from_int(4));
        assert_eq!(f.parse("t^2").unwrap(), f.parse("t+3").unwrap());
        assert!(f.parse("").is_err());
        assert!(f.parse("3x").is_err());
    }

    #[test]
    fn monic_irreducible_count_quadratic() {
        // (p^2 - p) / 2 monic irreducible quadratics
        for p in [3u32, 5, 7, 11, 13] {
            assert_eq!(monic_irreducibles(p, 2).len() as u32, (p * p - p) / 2);
        }
    }
}
