use dunwoody_core::oracle::{resultant, torus_alexander, IntPolynomial, OracleError};
use dunwoody_core::presentations::{smith_normal_form, IntegerMatrix};
use dunwoody_core::TorusKnot;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn coprime_pairs(max_p: u32, max_q: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=max_p)
        .flat_map(move |p| (2..=max_q).map(move |q| (p, q)))
        .filter(|&(p, q)| num_integer::gcd(p, q) == 1)
}

#[test]
fn alexander_at_one_is_unit_and_symmetric() {
    for (p, q) in coprime_pairs(8, 20) {
        let delta = torus_alexander(p, q).unwrap();
        assert_eq!(
            delta.eval(&BigInt::one()).abs(),
            BigInt::one(),
            "t({p},{q})"
        );
        assert_eq!(delta, torus_alexander(q, p).unwrap());
        assert_eq!(delta.degree(), Some(((p - 1) * (q - 1)) as usize));
        let mut rev = delta.coeffs().to_vec();
        rev.reverse();
        assert_eq!(rev, delta.coeffs(), "t({p},{q}) not palindromic");
    }
    assert!(matches!(
        torus_alexander(4, 6),
        Err(OracleError::InexactDivision { .. })
    ));
}

#[test]
fn alexander_examples() {
    assert_eq!(
        torus_alexander(2, 3).unwrap(),
        IntPolynomial::from_i64s(&[1, -1, 1])
    );
    assert_eq!(
        torus_alexander(2, 5).unwrap(),
        IntPolynomial::from_i64s(&[1, -1, 1, -1, 1])
    );
}

#[test]
fn covering_order_equals_resultant() {
    for p in 2..=5i64 {
        for m in 1..=8 {
            for q in [m * p - 1, m * p + 1] {
                if !(2..=16).contains(&q) {
                    continue;
                }
                let knot = TorusKnot::new(p, q).unwrap();
                let delta = knot.alexander_polynomial();
                for n in 2..=8 {
                    let h = knot.branched_cover_homology(n).unwrap();
                    let res = resultant(&delta, &IntPolynomial::cyclotomic_binomial(n));
                    if res.is_zero() {
                        assert!(h.free_rank > 0, "t({p},{q}) n={n}");
                    } else {
                        assert_eq!(h.free_rank, 0);
                        assert_eq!(h.order().unwrap(), res.abs(), "t({p},{q}) n={n}");
                    }
                }
            }
        }
    }
}

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..=6, 1..6).prop_map(|c| IntPolynomial::from_i64s(&c))
}

fn matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-20i64..=20, c), r)
            .prop_map(move |rows| IntegerMatrix::from_rows(c, &rows))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_form_is_certified(m in matrix()) {
        let snf = smith_normal_form(&m);
        prop_assert!(snf.certifies(&m));
        prop_assert!(snf.u.is_unimodular() && snf.v.is_unimodular());
        prop_assert!(snf.d.is_diagonal());
        let diag = snf.d.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        if m.rows() == m.cols() {
            let product: BigInt = diag.iter().product();
            prop_assert_eq!(product, m.determinant().abs());
        }
    }

    #[test]
    fn resultant_with_linear_factor_evaluates(g in poly(), a in -5i64..=5) {
        // Res(t - a, g) = g(a)
        let linear = IntPolynomial::from_i64s(&[-a, 1]);
        prop_assert_eq!(resultant(&linear, &g), g.eval(&BigInt::from(a)));
    }

    #[test]
    fn resultant_is_multiplicative(f in poly(), g in poly(), h in poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let gh = &g * &h;
        prop_assert_eq!(resultant(&f, &gh), resultant(&f, &g) * resultant(&f, &h));
    }

    #[test]
    fn polynomial_ring_laws(f in poly(), g in poly(), x in -4i64..=4) {
        let x = BigInt::from(x);
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!((&f + &g).eval(&x), f.eval(&x) + g.eval(&x));
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).div_exact(&g), Some(f));
        }
    }
}
