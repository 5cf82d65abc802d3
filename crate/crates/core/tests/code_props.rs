use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcodes::distance::{min_distance_columns, min_distance_exhaustive, weight};
use skewcodes::gray::{gray_image, gray_map};
use skewcodes::linear_code::tau_shift_ring;
use skewcodes::matrix::Row;
use skewcodes::quantum::{r_dual_containing, r_dual_containing_matrix};
use skewcodes::{Execution, Field, FieldElement, GrayMatrix, GrayOrder, LinearCode, RCode, RingElement, RingR, SkewPoly, SkewRing};

fn field(p: u32, m: usize) -> Arc<Field> {
    Arc::new(Field::with_default_modulus(p, m).unwrap())
}

/// Raw `(a | b | c)` coordinates of an `R`-word, independent of the CRT.
fn raw(word: &[RingElement]) -> Row {
    let mut out: Row = word.iter().map(|r| r.a).collect();
    out.extend(word.iter().map(|r| r.b));
    out.extend(word.iter().map(|r| r.c));
    out
}

/// `C` as an `F_q`-code of length `3n` in raw coordinates, spanned by `ηi g`.
fn raw_code(rr: &RingR, code: &RCode) -> (LinearCode, Vec<Vec<RingElement>>) {
    let basis = code.stacked_generator(rr);
    let rows: Vec<Row> = basis.iter().map(|w| raw(w)).collect();
    (LinearCode::new(rr.field_arc().clone(), 3 * code.n(), rows).unwrap(), basis)
}

fn r_closed_under_tau(rr: &RingR, code: &RCode, delta: RingElement, twist: u32) -> bool {
    let (lin, basis) = raw_code(rr, code);
    basis.iter().all(|w| lin.contains_word(&raw(&tau_shift_ring(rr, w, delta, twist))))
}

/// Monic right divisors of degree at most 3, plus `x^n - λ` itself.
fn small_divisors(ring: &SkewRing, n: usize, lambda: FieldElement) -> Vec<SkewPoly> {
    let mut out: Vec<SkewPoly> = (0..=n.min(3))
        .flat_map(|d| ring.enumerate_monic_right_divisors(n, lambda, d, 1 << 24, Execution::Parallel).unwrap())
        .collect();
    if n > 3 {
        out.push(ring.x_n_minus(n, lambda));
    }
    out
}

fn all_divisor_codes(ring: &SkewRing, n: usize, lambda: FieldElement) -> Vec<LinearCode> {
    small_divisors(ring, n, lambda)
        .iter()
        .map(|g| LinearCode::from_skew_generator(ring, g, n, lambda).unwrap())
        .collect()
}

fn sign_deltas(rr: &RingR) -> Vec<RingElement> {
    let f = rr.field();
    let signs = [f.one(), f.from_int(-1)];
    let mut out = Vec::new();
    for &a in &signs {
        for &b in &signs {
            for &c in &signs {
                out.push(rr.from_crt(skewcodes::CrtCoords::from_array([a, b, c])));
            }
        }
    }
    out
}

#[test]
fn constacyclic_over_r_iff_components_are_exhaustive_n4_f5() {
    let f = field(5, 1);
    let ring = SkewRing::new(f.clone(), 1);
    let rr = RingR::new(f.clone());
    let n = 4;
    let mut pool = all_divisor_codes(&ring, n, f.one());
    pool.extend(all_divisor_codes(&ring, n, f.from_int(-1)));
    assert_eq!(pool.len(), 20);
    let (mut closed, mut open) = (0, 0);
    for delta in sign_deltas(&rr) {
        let lambdas = rr.to_crt(delta).as_array();
        let comp_closed: Vec<[bool; 3]> =
            pool.iter().map(|c| std::array::from_fn(|i| c.is_closed_under_tau(lambdas[i], 1))).collect();
        for (i0, a0) in pool.iter().enumerate() {
            for (i1, a1) in pool.iter().enumerate() {
                for (i2, a2) in pool.iter().enumerate() {
                    let code = RCode::assemble(a0.clone(), a1.clone(), a2.clone()).unwrap();
                    let expected = comp_closed[i0][0] && comp_closed[i1][1] && comp_closed[i2][2];
                    assert_eq!(r_closed_under_tau(&rr, &code, delta, 1), expected);
                    if expected {
                        closed += 1;
                    } else {
                        open += 1;
                    }
                }
            }
        }
    }
    assert!(closed > 0 && open > 0);
}

#[test]
fn dual_is_constacyclic_for_the_inverse_unit() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (p, n) in [(3u32, 4usize), (5, 4), (3, 6), (5, 6)] {
        let f = field(p, 2);
        let ring = SkewRing::new(f.clone(), 1);
        let rr = RingR::new(f.clone());
        let pools = [all_divisor_codes(&ring, n, f.one()), all_divisor_codes(&ring, n, f.from_int(-1))];
        for delta in sign_deltas(&rr) {
            let lambdas = rr.to_crt(delta).as_array();
            let delta_inv = rr.inv(delta).unwrap();
            for _ in 0..4 {
                let pick = |i: usize, rng: &mut ChaCha8Rng| {
                    let pool = &pools[usize::from(lambdas[i] != f.one())];
                    pool[rng.gen_range(0..pool.len())].clone()
                };
                let code = RCode::assemble(pick(0, &mut rng), pick(1, &mut rng), pick(2, &mut rng)).unwrap();
                assert!(r_closed_under_tau(&rr, &code, delta, 1));
                let dual = code.r_dual();
                assert!(r_closed_under_tau(&rr, &dual, delta_inv, 1));
                for (comp, &l) in dual.components.iter().zip(&lambdas) {
                    assert!(comp.is_closed_under_tau(f.inv(l).unwrap(), 1));
                }
            }
        }
    }
}

#[test]
fn polynomial_and_matrix_dual_containment_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut counts = [0usize; 2];
    for (p, n) in [(3u32, 4usize), (3, 6), (5, 4), (5, 6)] {
        let f = field(p, 2);
        let ring = SkewRing::new(f.clone(), 1);
        let signs = [f.one(), f.from_int(-1)];
        let divisors: Vec<Vec<SkewPoly>> = signs
            .iter()
            .map(|&l| small_divisors(&ring, n, l))
            .collect();
        for _ in 0..40 {
            let s: [usize; 3] = std::array::from_fn(|_| rng.gen_range(0..2));
            let lambdas = s.map(|i| signs[i]);
            let triple: [SkewPoly; 3] = std::array::from_fn(|i| {
                let list = &divisors[s[i]];
                list[rng.gen_range(0..list.len())].clone()
            });
            let poly = r_dual_containing(&ring, &triple, n, lambdas).unwrap();
            assert_eq!(poly, r_dual_containing_matrix(&ring, &triple, n, lambdas).unwrap());
            counts[usize::from(poly)] += 1;
        }
    }
    assert!(counts[0] + counts[1] >= 50);
    assert!(counts[0] > 0 && counts[1] > 0, "{counts:?}");
}

fn random_code(f: &Arc<Field>, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let rows: Vec<Row> = (0..k).map(|_| (0..n).map(|_| f.random(rng)).collect()).collect();
        let code = LinearCode::new(f.clone(), n, rows).unwrap();
        if code.k() == k {
            return code;
        }
    }
}

#[test]
fn column_method_agrees_with_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let fields = [field(3, 1), field(5, 1), field(7, 1), field(3, 2), field(5, 2)];
    let mut done = 0;
    while done < 120 {
        let f = &fields[rng.gen_range(0..fields.len())];
        let n = rng.gen_range(3..=10);
        let max_k = (1..n).take_while(|&k| f.order().pow(k as u32) <= 100_000).last().unwrap_or(1);
        let k = rng.gen_range(1..=max_k);
        let code = random_code(f, n, k, &mut rng);
        let ex = min_distance_exhaustive(&code, 100_000, Execution::Sequential).unwrap();
        let col = min_distance_columns(&code, n, Execution::Sequential).unwrap();
        assert_eq!(ex.d, col.d);
        assert!(ex.witness_is_valid(&code) && col.witness_is_valid(&code));
        assert_eq!(min_distance_columns(&code, n, Execution::Parallel).unwrap(), col);
        assert_eq!(min_distance_exhaustive(&code, 100_000, Execution::Parallel).unwrap(), ex);
        done += 1;
    }
}

#[test]
fn gray_dual_commutes_for_orthogonal_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (p, name) in [(5u32, "ref-5-2"), (7, "ref-7-2"), (13, "ref-13-2")] {
        let f = field(p, 2);
        let m = GrayMatrix::preset(name, &f).unwrap();
        assert!(m.alpha().is_some());
        for _ in 0..10 {
            let n = rng.gen_range(2..=5);
            let comps: [LinearCode; 3] = std::array::from_fn(|_| {
                let k = rng.gen_range(0..=n);
                if k == 0 { LinearCode::zero(f.clone(), n) } else { random_code(&f, n, k, &mut rng) }
            });
            let code = RCode::assemble(comps[0].clone(), comps[1].clone(), comps[2].clone()).unwrap();
            for order in [GrayOrder::Blocks, GrayOrder::Interleaved] {
                let img = gray_image(&code, &m, order).unwrap();
                assert_eq!(img.k(), code.log_q_size());
                assert_eq!(gray_image(&code.r_dual(), &m, order).unwrap(), img.dual());
            }
        }
    }
}

#[test]
fn gray_image_matches_pointwise_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f = field(5, 2);
    let rr = RingR::new(f.clone());
    let m = GrayMatrix::preset("ref-5-2", &f).unwrap();
    let comps: [LinearCode; 3] = std::array::from_fn(|i| random_code(&f, 5, i + 1, &mut rng));
    let code = RCode::assemble(comps[0].clone(), comps[1].clone(), comps[2].clone()).unwrap();
    let img = gray_image(&code, &m, GrayOrder::Blocks).unwrap();
    for _ in 0..50 {
        let msgs: [Row; 3] = std::array::from_fn(|i| (0..i + 1).map(|_| f.random(&mut rng)).collect());
        let parts: [Row; 3] = std::array::from_fn(|i| code.components[i].encode(&msgs[i]));
        let word = RCode::combine_components(&rr, [&parts[0], &parts[1], &parts[2]]);
        assert!(code.contains_word(&rr, &word));
        assert!(img.contains_word(&gray_map(&rr, &word, &m, GrayOrder::Blocks)));
    }
}

proptest! {
    #[test]
    fn gray_map_is_linear(xs in prop::collection::vec(0u64..49, 24), k in 0u64..49) {
        let f = field(7, 2);
        let rr = RingR::new(f.clone());
        let m = GrayMatrix::preset("ref-7-2", &f).unwrap();
        let el = |i: usize| rr.element(f.from_index(xs[i]), f.from_index(xs[i + 1]), f.from_index(xs[i + 2]));
        let u: Vec<RingElement> = (0..4).map(|j| el(3 * j)).collect();
        let w: Vec<RingElement> = (0..4).map(|j| el(12 + 3 * j)).collect();
        let lam = f.from_index(k);
        let comb: Vec<RingElement> = u.iter().zip(&w).map(|(&a, &b)| rr.add(a, rr.scale(lam, b))).collect();
        for order in [GrayOrder::Blocks, GrayOrder::Interleaved] {
            let (gu, gw) = (gray_map(&rr, &u, &m, order), gray_map(&rr, &w, &m, order));
            let expected: Row = gu.iter().zip(&gw).map(|(&a, &b)| f.add(a, f.mul(lam, b))).collect();
            prop_assert_eq!(gray_map(&rr, &comb, &m, order), expected);
            // distance depends only on the difference
            let diff: Vec<RingElement> = u.iter().zip(&w).map(|(&a, &b)| rr.sub(a, b)).collect();
            let d_h = gu.iter().zip(&gw).filter(|(a, b)| a != b).count();
            prop_assert_eq!(d_h, weight(&gray_map(&rr, &diff, &m, order)));
        }
    }
}
