use std::sync::Arc;

use proptest::prelude::*;
use skewcodes::{CrtCoords, Error, Field, RingElement, RingR};

fn ring(p: u32, m: usize) -> RingR {
    RingR::new(Arc::new(Field::with_default_modulus(p, m).unwrap()))
}

/// `v` acts on `(a, b, c)` with `v^3 = v`; multiplication by hand.
fn naive_mul(r: &RingR, x: RingElement, y: RingElement) -> RingElement {
    let f = r.field();
    // (a + bv + cv^2)(d + ev + gv^2), v^3 = v, v^4 = v^2
    let a = f.mul(x.a, y.a);
    let b = f.add(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.add(f.mul(x.b, y.c), f.mul(x.c, y.b)));
    let c = f.add(f.add(f.mul(x.a, y.c), f.mul(x.c, y.a)), f.add(f.mul(x.b, y.b), f.mul(x.c, y.c)));
    r.element(a, b, c)
}

#[test]
fn crt_is_a_ring_isomorphism() {
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let r = ring(p, m);
        let f = r.field();
        let els = r.elements().unwrap();
        assert_eq!(els.len() as u64, f.order().pow(3));
        for &x in &els {
            assert_eq!(r.from_crt(r.to_crt(x)), x);
            let cx = r.to_crt(x).as_array();
            // β0 = a, β1 = a+b+c, β2 = a-b+c
            assert_eq!(cx[0], x.a);
            assert_eq!(cx[1], f.add(f.add(x.a, x.b), x.c));
            assert_eq!(cx[2], f.add(f.sub(x.a, x.b), x.c));
        }
        let step = if f.order() > 5 { 7 } else { 1 };
        for &x in &els {
            for &y in els.iter().step_by(step) {
                let (cx, cy) = (r.to_crt(x).as_array(), r.to_crt(y).as_array());
                let prod = r.to_crt(r.mul(x, y)).as_array();
                let sum = r.to_crt(r.add(x, y)).as_array();
                for i in 0..3 {
                    assert_eq!(prod[i], f.mul(cx[i], cy[i]));
                    assert_eq!(sum[i], f.add(cx[i], cy[i]));
                }
                assert_eq!(r.mul(x, y), naive_mul(&r, x, y));
            }
        }
    }
}

#[test]
fn idempotents_exhaustive() {
    for (p, m) in [(3, 1), (5, 1), (3, 2)] {
        let r = ring(p, m);
        let eta = r.idempotents();
        let els = r.elements().unwrap();
        let idem: Vec<RingElement> = els.iter().copied().filter(|&x| r.mul(x, x) == x).collect();
        assert_eq!(idem.len(), 8);
        // every idempotent is a sum of a subset of the η's
        for mask in 0..8u32 {
            let s = (0..3).filter(|i| mask >> i & 1 == 1).fold(r.zero(), |acc, i| r.add(acc, eta[i]));
            assert!(idem.contains(&s));
        }
        let total = eta.iter().fold(r.zero(), |acc, &e| r.add(acc, e));
        assert_eq!(total, r.one());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.mul(eta[i], eta[j]), if i == j { eta[i] } else { r.zero() });
            }
            let mut e = [r.field().zero(); 3];
            e[i] = r.field().one();
            assert_eq!(r.from_crt(CrtCoords::from_array(e)), eta[i]);
        }
    }
}

#[test]
fn units_are_exactly_the_invertible_elements() {
    for (p, m) in [(3, 1), (5, 1), (3, 2)] {
        let r = ring(p, m);
        let q = r.field().order();
        let els = r.elements().unwrap();
        let mut units = 0;
        for &x in &els {
            let has_inverse = els.iter().any(|&y| r.mul(x, y) == r.one());
            assert_eq!(r.is_unit(x), has_inverse);
            match r.inv(x) {
                Ok(y) => {
                    units += 1;
                    assert_eq!(r.mul(x, y), r.one());
                }
                Err(e) => assert!(matches!(e, Error::NotAUnit(_))),
            }
        }
        assert_eq!(units as u64, (q - 1).pow(3));
    }
}

#[test]
fn v_cubed_is_v_and_sigma_fixes_prime_field_deltas() {
    let r = ring(7, 2);
    let v = r.v();
    assert_eq!(r.mul(v, r.mul(v, v)), v);
    for s in ["1", "-1", "1-2v^2", "2v^2-1"] {
        let d = r.parse(s).unwrap();
        assert!(r.is_unit(d));
        assert_eq!(r.sigma(d, 1), d);
        assert_eq!(r.mul(d, d), r.one());
    }
}

proptest! {
    #[test]
    fn ring_text_round_trip(a in 0u64..49, b in 0u64..49, c in 0u64..49) {
        let r = ring(7, 2);
        let f = r.field();
        let x = r.element(f.from_index(a), f.from_index(b), f.from_index(c));
        prop_assert_eq!(r.parse(&r.format(x)).unwrap(), x);
    }

    #[test]
    fn sigma_is_a_ring_automorphism(xs in prop::array::uniform6(0u64..121)) {
        let r = ring(11, 2);
        let f = r.field();
        let x = r.element(f.from_index(xs[0]), f.from_index(xs[1]), f.from_index(xs[2]));
        let y = r.element(f.from_index(xs[3]), f.from_index(xs[4]), f.from_index(xs[5]));
        prop_assert_eq!(r.sigma(r.mul(x, y), 1), r.mul(r.sigma(x, 1), r.sigma(y, 1)));
        prop_assert_eq!(r.sigma(r.add(x, y), 1), r.add(r.sigma(x, 1), r.sigma(y, 1)));
        prop_assert_eq!(r.sigma(r.sigma(x, 1), 1), x);
    }
}
