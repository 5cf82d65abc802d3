use proptest::prelude::*;
use skewcodes::finite_field::{conway_polynomial, is_irreducible_fp, monic_irreducibles};
use skewcodes::{Error, Field, FieldElement};

const SMALL_FIELDS: [(u32, usize); 10] = [(3, 1), (5, 1), (3, 2), (13, 1), (5, 2), (3, 3), (7, 2), (11, 2), (13, 2), (3, 4)];

fn all(f: &Field) -> Vec<FieldElement> {
    f.elements().unwrap().collect()
}

#[test]
fn axioms_exhaustive_up_to_169() {
    for (p, m) in SMALL_FIELDS {
        let f = Field::with_default_modulus(p, m).unwrap();
        let els = all(&f);
        assert_eq!(els.len() as u64, f.order());
        let (zero, one) = (f.zero(), f.one());
        for &a in &els {
            assert_eq!(f.add(a, zero), a);
            assert_eq!(f.mul(a, one), a);
            assert_eq!(f.add(a, f.neg(a)), zero);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), one);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                if !a.is_zero() && !b.is_zero() {
                    assert!(!f.mul(a, b).is_zero(), "zero divisor in F_{}", f.order());
                }
            }
        }
        // associativity and distributivity over every triple
        for &a in &els {
            for &b in &els {
                let ab = f.mul(a, b);
                let a_plus_b = f.add(a, b);
                for &c in &els {
                    assert_eq!(f.mul(ab, c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(a_plus_b, c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(ab, f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn frobenius_is_an_automorphism_fixing_the_prime_field() {
    for (p, m) in SMALL_FIELDS {
        let f = Field::with_default_modulus(p, m).unwrap();
        let els = all(&f);
        for k in 0..=m as u32 {
            let images: std::collections::HashSet<_> = els.iter().map(|&a| f.frobenius(a, k)).collect();
            assert_eq!(images.len(), els.len());
        }
        for &a in &els {
            assert_eq!(f.frobenius(a, 1), f.pow(a, p as u64));
            assert_eq!(f.frobenius(a, m as u32), a);
            assert_eq!(f.frobenius(a, 1) == a, f.in_prime_field(a));
            for &b in els.iter().step_by(3) {
                assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
            }
        }
        assert_eq!(f.automorphism_order(1), m);
    }
}

#[test]
fn default_moduli_are_primitive() {
    for (p, m) in SMALL_FIELDS {
        let f = Field::with_default_modulus(p, m).unwrap();
        let g = f.generator();
        let q1 = f.order() - 1;
        let mut x = f.one();
        for i in 1..=q1 {
            x = f.mul(x, g);
            assert_eq!(x == f.one(), i == q1, "t has order below q-1 in F_{}", f.order());
        }
    }
}

#[test]
fn conway_table_entries_are_irreducible() {
    for (p, m) in [(3, 2), (5, 2), (7, 2), (11, 2), (13, 2)] {
        let c = conway_polynomial(p, m).unwrap();
        assert!(is_irreducible_fp(&c, p));
        assert!(monic_irreducibles(p, m).contains(&c));
    }
    // q(q-1)/2 monic irreducible quadratics
    for p in [3u32, 5, 7, 11, 13] {
        assert_eq!(monic_irreducibles(p, 2).len() as u32, p * (p - 1) / 2);
    }
}

#[test]
fn construction_errors() {
    assert_eq!(Field::new(4, 1, &[0, 1]), Err(Error::NotPrime(4)));
    assert_eq!(Field::new(2, 2, &[1, 1, 1]), Err(Error::EvenCharacteristic(2)));
    assert!(matches!(Field::new(5, 2, &[1, 0, 1]), Err(Error::ReducibleModulus(_))));
    assert!(matches!(Field::new(5, 2, &[2, 4, 2]), Err(Error::BadModulus { .. })));
    assert!(matches!(Field::new(3, 9, &[1; 10]), Err(Error::UnsupportedDegree(9))));
    let f = Field::new(5, 2, &[2, 4, 1]).unwrap();
    assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    assert!(matches!(f.element(&[5, 0]), Err(Error::InvalidElement(_))));
    assert!(matches!(f.parse("t^"), Err(Error::Parse { .. })));
}

#[test]
fn format_parse_round_trip_exhaustive() {
    for (p, m) in SMALL_FIELDS {
        let f = Field::with_default_modulus(p, m).unwrap();
        for a in all(&f) {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
            assert_eq!(f.from_index(f.index(a)), a);
        }
    }
}

proptest! {
    #[test]
    fn pow_adds_exponents(i in 0u64..169, e1 in 0u64..400, e2 in 0u64..400) {
        let f = Field::new(13, 2, &[2, 12, 1]).unwrap();
        let a = f.from_index(i);
        prop_assert_eq!(f.mul(f.pow(a, e1), f.pow(a, e2)), f.pow(a, e1 + e2));
    }

    #[test]
    fn division_inverts_multiplication(i in 0u64..121, j in 1u64..121) {
        let f = Field::new(11, 2, &[2, 7, 1]).unwrap();
        let (a, b) = (f.from_index(i), f.from_index(j));
        prop_assert_eq!(f.div(f.mul(a, b), b).unwrap(), a);
    }
}
