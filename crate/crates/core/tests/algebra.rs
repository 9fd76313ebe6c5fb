//! Group-law and Lie-algebra invariants, checked against a plain 3×3
//! unipotent-matrix model of the Heisenberg group.

use heis_deform::{GammaWord, HeisHom, HeisPoint, LieVector, Rational, Scalar};
use proptest::prelude::*;

type Q = Rational;
type M3 = [[Q; 3]; 3];

fn rational() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=7).prop_map(|(p, q)| Q::ratio(p, q))
}

fn point() -> impl Strategy<Value = HeisPoint<Q>> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| HeisPoint::new(a, b, c))
}

fn vector() -> impl Strategy<Value = LieVector<Q>> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| LieVector::new(x, y, z))
}

fn word() -> impl Strategy<Value = GammaWord> {
    (-6i64..=6, -6i64..=6, -6i64..=6).prop_map(|(m, n, k)| GammaWord::new(m, n, k))
}

fn hom() -> impl Strategy<Value = HeisHom<Q>> {
    (point(), point()).prop_map(|(g1, g2)| HeisHom::new(g1, g2))
}

fn matrix(p: &HeisPoint<Q>) -> M3 {
    let (o, z) = (Q::one(), Q::zero());
    [
        [o.clone(), p.a.clone(), p.c.clone()],
        [z.clone(), o.clone(), p.b.clone()],
        [z.clone(), z, o],
    ]
}

fn matmul(x: &M3, y: &M3) -> M3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Q::zero(), |acc, k| acc + &(x[i][k].clone() * &y[k][j]))
        })
    })
}

fn from_matrix(m: &M3) -> HeisPoint<Q> {
    HeisPoint::new(m[0][1].clone(), m[1][2].clone(), m[0][2].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn multiplication_is_matrix_multiplication(g in point(), h in point()) {
        prop_assert_eq!(g.mul(&h), from_matrix(&matmul(&matrix(&g), &matrix(&h))));
    }

    #[test]
    fn group_axioms(g in point(), h in point(), k in point()) {
        prop_assert_eq!(g.mul(&h).mul(&k), g.mul(&h.mul(&k)));
        prop_assert!(g.mul(&g.inv()).is_identity());
        prop_assert!(g.inv().mul(&g).is_identity());
        prop_assert_eq!(g.mul(&HeisPoint::identity()), g.clone());
    }

    #[test]
    fn exp_and_log_are_inverse(g in point(), v in vector()) {
        prop_assert_eq!(g.log().exp(), g);
        prop_assert_eq!(v.exp().log(), v);
    }

    #[test]
    fn two_step_bch(x in vector(), y in vector()) {
        let half_bracket = x.bracket(&y).scale(&Q::half(&Q::one()));
        prop_assert_eq!(x.exp().mul(&y.exp()), x.add(&y).add(&half_bracket).exp());
    }

    #[test]
    fn adjoint_is_conjugation(g in point(), v in vector()) {
        let conjugated = g.mul(&v.exp()).mul(&g.inv());
        prop_assert_eq!(g.adjoint(&v).exp(), conjugated);
    }

    #[test]
    fn powers_match_repeated_products(g in point(), m in -8i64..=8) {
        let mut acc = HeisPoint::identity();
        let step = if m >= 0 { g.clone() } else { g.inv() };
        for _ in 0..m.abs() {
            acc = acc.mul(&step);
        }
        prop_assert_eq!(g.pow(m), acc);
    }

    #[test]
    fn word_product_matches_lattice_product(u in word(), w in word()) {
        let lhs: HeisPoint<Q> = u.mul(&w).to_point();
        prop_assert_eq!(lhs, u.to_point().mul(&w.to_point()));
    }

    #[test]
    fn apply_is_a_homomorphism(rho in hom(), u in word(), w in word()) {
        prop_assert_eq!(rho.apply(&u.mul(&w)), rho.apply(&u).mul(&rho.apply(&w)));
        prop_assert!(rho.apply(&GammaWord::IDENTITY).is_identity());
    }

    #[test]
    fn extension_restricts_to_rho(rho in hom(), w in word()) {
        prop_assert_eq!(rho.extend(&w.to_point()), rho.apply(&w));
    }

    #[test]
    fn hom_matrix_respects_brackets(rho in hom(), x in vector(), y in vector()) {
        let m = rho.hom_matrix();
        let image = |v: &LieVector<Q>| LieVector::from_array(m.apply(&v.to_array()));
        prop_assert_eq!(image(&x.bracket(&y)), image(&x).bracket(&image(&y)));
    }

    #[test]
    fn commutator_of_generator_images_is_det_a(rho in hom()) {
        let z = rho.g1.commutator(&rho.g2);
        prop_assert_eq!(z, HeisPoint::new(Q::zero(), Q::zero(), rho.det_a()));
        prop_assert_eq!(rho.apply(&GammaWord::CENTER), rho.central_image());
    }

    #[test]
    fn conjugating_hom_conjugates_images(rho in hom(), h in point(), w in word()) {
        let conj = rho.conjugate(&h);
        prop_assert_eq!(conj.apply(&w), h.mul(&rho.apply(&w)).mul(&h.inv()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn float_path_tracks_exact_path(g in point(), h in point(), x in vector(), y in vector()) {
        let f = |v: &Q| v.to_f64();
        let close = |u: [f64; 3], v: [f64; 3]| {
            u.iter().zip(v).all(|(a, b)| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0))
        };
        prop_assert!(close(g.map(f).mul(&h.map(f)).to_array(), g.mul(&h).map(f).to_array()));
        let (xf, yf) = (LieVector::from_array(x.to_array().map(|v| v.to_f64())), LieVector::from_array(y.to_array().map(|v| v.to_f64())));
        let bch = xf.add(&yf).add(&xf.bracket(&yf).scale(&0.5)).exp();
        prop_assert!(close(xf.exp().mul(&yf.exp()).to_array(), bch.to_array()));
        prop_assert!(close(g.map(f).log().exp().to_array(), g.map(f).to_array()));
    }
}
