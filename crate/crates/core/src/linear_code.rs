//! Linear codes over `F_q` and codes over `R` held through their CRT components.
//!
//! A code over `R` is `C = η0A0 ⊕ η1A1 ⊕ η2A2` with each `Ai` a linear code
//! over `F_q`, `Ai` being the set of `i`-th CRT components. Its dual is
//! `η0A0^⊥ ⊕ η1A1^⊥ ⊕ η2A2^⊥`, so every `R`-level question is answered
//! component-wise.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::matrix::{self, Row};
use crate::ring_r::{CrtCoords, RingElement, RingR};
use crate::skew_poly::{SkewPoly, SkewRing};

/// A linear `[n, k]` code over `F_q`. Rows of `gen` are codewords; `par` is
/// a basis of the dual, so `c ∈ C ⟺ c · par^T = 0`.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    gen: Vec<Row>,
    par: Vec<Row>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k() == other.k() && self.contains(other)
    }
}

impl LinearCode {
    /// The code spanned by `rows`. Dependent rows are replaced by an echelon basis.
    pub fn new(field: Arc<Field>, n: usize, rows: Vec<Row>) -> Result<LinearCode> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch(r.len(), n));
        }
        let (red, _) = matrix::rref(&field, &rows, n);
        let gen = if red.len() == rows.len() { rows } else { red };
        let par = matrix::nullspace(&field, &gen, n);
        Ok(LinearCode { field, n, gen, par })
    }

    pub fn full(field: Arc<Field>, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![field.zero(); n];
                r[i] = field.one();
                r
            })
            .collect();
        LinearCode::new(field, n, rows).expect("identity rows have length n")
    }

    pub fn zero(field: Arc<Field>, n: usize) -> LinearCode {
        LinearCode::new(field, n, Vec::new()).expect("no rows")
    }

    /// Skew `(Θ^k, λ)`-constacyclic code `⟨f⟩`: row `j` is the coefficient
    /// vector of `x^j · f` for `0 <= j < n - deg f`.
    pub fn from_skew_generator(ring: &SkewRing, f: &SkewPoly, n: usize, lambda: FieldElement) -> Result<LinearCode> {
        let fd = ring.field();
        if !ring.is_monic(f) {
            return Err(Error::NotMonic);
        }
        if !ring.is_central_modulus(n, lambda) {
            return Err(Error::NotCentral { n, lambda: fd.format(lambda), twist: ring.twist() });
        }
        let deg = f.degree().unwrap();
        if deg > n || !ring.right_divides(f, &ring.x_n_minus(n, lambda))? {
            return Err(Error::NotRightDivisor { n, lambda: fd.format(lambda) });
        }
        let rows = (0..n - deg)
            .map(|j| ring.mul(&ring.monomial(fd.one(), j), f).to_vector(n))
            .collect();
        LinearCode::new(ring.field_arc().clone(), n, rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.len()
    }

    pub fn generator(&self) -> &[Row] {
        &self.gen
    }

    pub fn parity_check(&self) -> &[Row] {
        &self.par
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode { field: self.field.clone(), n: self.n, gen: self.par.clone(), par: self.gen.clone() }
    }

    pub fn contains_word(&self, word: &[FieldElement]) -> bool {
        word.len() == self.n && self.par.iter().all(|h| matrix::dot(&self.field, h, word).is_zero())
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &LinearCode) -> bool {
        other.n == self.n && other.gen.iter().all(|r| self.contains_word(r))
    }

    pub fn contains_dual(&self) -> bool {
        self.contains(&self.dual())
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.dual().contains(self)
    }

    /// `message · gen`.
    pub fn encode(&self, message: &[FieldElement]) -> Row {
        matrix::combine(&self.field, message, &self.gen, self.n)
    }

    /// Whether `τ(c) ∈ C` for all codewords. `τ` is `σ`-semilinear, so
    /// checking the generator rows suffices.
    pub fn is_closed_under_tau(&self, lambda: FieldElement, twist: u32) -> bool {
        self.gen.iter().all(|r| self.contains_word(&tau_shift(&self.field, r, lambda, twist)))
    }

    /// One row per line, space-separated field elements.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for row in &self.gen {
            let cells: Vec<String> = row.iter().map(|&x| self.field.format(x)).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// `τ_{σ,λ}(c) = (σ(λ c_{n-1}), σ(c_0), ..., σ(c_{n-2}))` over `F_q`.
pub fn tau_shift(field: &Field, word: &[FieldElement], lambda: FieldElement, twist: u32) -> Row {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(field.frobenius(field.mul(lambda, word[n - 1]), twist));
    out.extend(word[..n - 1].iter().map(|&c| field.frobenius(c, twist)));
    out
}

/// The same shift over `R` with a unit `δ`.
pub fn tau_shift_ring(ring: &RingR, word: &[RingElement], delta: RingElement, twist: u32) -> Vec<RingElement> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(ring.sigma(ring.mul(delta, word[n - 1]), twist));
    out.extend(word[..n - 1].iter().map(|&c| ring.sigma(c, twist)));
    out
}

/// Generator polynomials and constants of a skew constacyclic code over `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewProvenance {
    pub f: [SkewPoly; 3],
    pub lambdas: [FieldElement; 3],
    pub twist: u32,
}

/// `C = η0A0 ⊕ η1A1 ⊕ η2A2`.
#[derive(Clone, Debug)]
pub struct RCode {
    pub components: [LinearCode; 3],
    pub provenance: Option<SkewProvenance>,
}

impl RCode {
    pub fn assemble(a0: LinearCode, a1: LinearCode, a2: LinearCode) -> Result<RCode> {
        let n = a0.n();
        for a in [&a1, &a2] {
            if a.n() != n {
                return Err(Error::LengthMismatch(a.n(), n));
            }
        }
        Ok(RCode { components: [a0, a1, a2], provenance: None })
    }

    /// `C = ⟨η0 f0, η1 f1, η2 f2⟩` with `Ai` skew `(σ, λi)`-constacyclic.
    pub fn from_skew_generators(ring: &SkewRing, f: [SkewPoly; 3], n: usize, lambdas: [FieldElement; 3]) -> Result<RCode> {
        let a0 = LinearCode::from_skew_generator(ring, &f[0], n, lambdas[0])?;
        let a1 = LinearCode::from_skew_generator(ring, &f[1], n, lambdas[1])?;
        let a2 = LinearCode::from_skew_generator(ring, &f[2], n, lambdas[2])?;
        let mut code = RCode::assemble(a0, a1, a2)?;
        code.provenance = Some(SkewProvenance { f, lambdas, twist: ring.twist() });
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.components[0].n()
    }

    pub fn field(&self) -> &Field {
        self.components[0].field()
    }

    /// `k0 + k1 + k2`; `|C| = q^{k0+k1+k2}`.
    pub fn log_q_size(&self) -> usize {
        self.components.iter().map(LinearCode::k).sum()
    }

    /// `log_p |C| = m (k0 + k1 + k2)`.
    pub fn log_p_size(&self) -> usize {
        self.field().m() * self.log_q_size()
    }

    pub fn r_dual(&self) -> RCode {
        RCode {
            components: [self.components[0].dual(), self.components[1].dual(), self.components[2].dual()],
            provenance: None,
        }
    }

    pub fn contains(&self, other: &RCode) -> bool {
        self.components.iter().zip(&other.components).all(|(a, b)| a.contains(b))
    }

    /// `C^⊥ ⊆ C` checked on generator and parity-check matrices.
    pub fn contains_dual(&self) -> bool {
        self.components.iter().all(LinearCode::contains_dual)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.components.iter().all(LinearCode::is_self_orthogonal)
    }

    /// `η0 x0 + η1 x1 + η2 x2`, coordinate by coordinate.
    pub fn combine_components(ring: &RingR, x: [&[FieldElement]; 3]) -> Vec<RingElement> {
        (0..x[0].len())
            .map(|j| ring.from_crt(CrtCoords { beta0: x[0][j], beta1: x[1][j], beta2: x[2][j] }))
            .collect()
    }

    /// Membership of an `R`-word: each CRT component lies in its `Ai`.
    pub fn contains_word(&self, ring: &RingR, word: &[RingElement]) -> bool {
        let coords: Vec<CrtCoords> = word.iter().map(|&r| ring.to_crt(r)).collect();
        (0..3).all(|i| {
            let comp: Row = coords.iter().map(|c| c.as_array()[i]).collect();
            self.components[i].contains_word(&comp)
        })
    }

    /// The stacked matrix `(η0 G0; η1 G1; η2 G2)` over `R`, for display.
    pub fn stacked_generator(&self, ring: &RingR) -> Vec<Vec<RingElement>> {
        let etas = ring.idempotents();
        let mut rows = Vec::new();
        for (eta, comp) in etas.iter().zip(&self.components) {
            for g in comp.generator() {
                rows.push(g.iter().map(|&x| ring.mul(*eta, ring.scalar(x))).collect());
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f25() -> Arc<Field> {
        Arc::new(Field::new(5, 2, &[2, 4, 1]).unwrap())
    }

    #[test]
    fn trivial_generators() {
        let field = f25();
        let ring = SkewRing::new(field.clone(), 1);
        let one = field.one();
        let c = LinearCode::from_skew_generator(&ring, &ring.one(), 12, one).unwrap();
        assert_eq!(c.k(), 12);
        assert_eq!(c, LinearCode::full(field.clone(), 12));
        let z = LinearCode::from_skew_generator(&ring, &ring.x_n_minus(12, one), 12, one).unwrap();
        assert_eq!(z.k(), 0);
    }

    #[test]
    fn generator_rows_are_twisted_shifts() {
        let field = f25();
        let ring = SkewRing::new(field.clone(), 1);
        let minus_one = field.from_int(-1);
        let f1 = ring.parse("x + 4t + 3").unwrap();
        let c = LinearCode::from_skew_generator(&ring, &f1, 12, minus_one).unwrap();
        assert_eq!(c.k(), 11);
        // Θ(4t+3) = 4(4t+1) + 3 = 16t + 7 = t + 2
        let twisted = field.frobenius(field.parse("4t+3").unwrap(), 1);
        assert_eq!(twisted, field.parse("t+2").unwrap());
        let row1 = &c.generator()[1];
        assert_eq!(row1[0], field.zero());
        assert_eq!(row1[1], twisted);
        assert_eq!(row1[2], field.one());
        assert!(c.is_closed_under_tau(minus_one, 1));
    }

    #[test]
    fn generator_errors() {
        let field = f25();
        let ring = SkewRing::new(field.clone(), 1);
        let one = field.one();
        let not_monic = SkewPoly::from_coeffs(vec![one, field.from_int(2)]);
        assert_eq!(LinearCode::from_skew_generator(&ring, &not_monic, 12, one).unwrap_err(), Error::NotMonic);
        assert!(matches!(
            LinearCode::from_skew_generator(&ring, &ring.x(), 7, one),
            Err(Error::NotCentral { .. })
        ));
        let x_minus_t = ring.x_n_minus(1, field.generator());
        assert!(matches!(
            LinearCode::from_skew_generator(&ring, &x_minus_t, 12, one),
            Err(Error::NotRightDivisor { .. })
        ));
    }

    #[test]
    fn duality() {
        let field = Arc::new(Field::with_default_modulus(5, 1).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(LinearCode::full(field.clone(), 6).dual().k(), 0);
        for _ in 0..20 {
            let rows = (0..3).map(|_| (0..7).map(|_| field.random(&mut rng)).collect()).collect();
            let c = LinearCode::new(field.clone(), 7, rows).unwrap();
            let d = c.dual();
            assert_eq!(d.k(), 7 - c.k());
            for g in c.generator() {
                for h in d.generator() {
                    assert!(matrix::dot(&field, g, h).is_zero());
                }
            }
            assert_eq!(d.dual(), c);
            assert!(c.contains(&c));
            assert!(LinearCode::full(field.clone(), 7).contains(&c));
        }
    }

    #[test]
    fn plain_cyclic_shift() {
        let field = Arc::new(Field::with_default_modulus(5, 1).unwrap());
        let w: Row = (1..=4).map(|i| field.from_int(i)).collect();
        let s = tau_shift(&field, &w, field.one(), 0);
        assert_eq!(s, vec![w[3], w[0], w[1], w[2]]);
        let mut x = w.clone();
        for _ in 0..4 {
            x = tau_shift(&field, &x, field.one(), 0);
        }
        assert_eq!(x, w);
    }

    #[test]
    fn tau_power_n_is_identity_when_order_divides_n() {
        let field = f25();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let w: Row = (0..6).map(|_| field.random(&mut rng)).collect();
        let mut x = w.clone();
        for _ in 0..6 {
            x = tau_shift(&field, &x, field.one(), 1);
        }
        assert_eq!(x, w);
    }

    #[test]
    fn assemble_rejects_length_mismatch() {
        let field = f25();
        let err = RCode::assemble(
            LinearCode::full(field.clone(), 4),
            LinearCode::full(field.clone(), 5),
            LinearCode::full(field.clone(), 4),
        )
        .unwrap_err();
        assert_eq!(err, Error::LengthMismatch(5, 4));
        let z = RCode::assemble(
            LinearCode::zero(field.clone(), 4),
            LinearCode::zero(field.clone(), 4),
            LinearCode::zero(field.clone(), 4),
        )
        .unwrap();
        assert_eq!(z.log_q_size(), 0);
    }

    #[test]
    fn export_has_one_line_per_row() {
        let field = f25();
        let c = LinearCode::full(field, 3);
        assert_eq!(c.export_text(), "1 0 0\n0 1 0\n0 0 1\n");
    }
}
