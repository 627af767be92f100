use proptest::prelude::*;

use qsp_core::hecke::{laurent_params, HeckeAlgebra, HeckeElement};
use qsp_core::linalg::{ExactMatrix, SparseVec, Subspace};
use qsp_core::rep::TensorRep;
use qsp_core::scalars::{rational, LaurentPoly2, Params, Rational, RationalFunction, Ring, Specialization};
use qsp_core::weyl::{SignedPermutation, TensorIndex};

fn signed_perm(d: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=d as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), d)).prop_map(
        |(p, signs)| {
            let images = p.into_iter().zip(signs).map(|(x, s)| if s { -x } else { x }).collect();
            SignedPermutation::new(images).unwrap()
        },
    )
}

fn laurent() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 0..4)
        .prop_map(|ts| ts.into_iter().fold(LaurentPoly2::zero(), |acc, (c, a, b)| acc.add_ref(&LaurentPoly2::monomial(c, a, b))))
}

fn hecke_element(d: usize) -> impl Strategy<Value = HeckeElement<LaurentPoly2>> {
    prop::collection::vec((signed_perm(d), laurent()), 0..4)
        .prop_map(move |terms| HeckeElement::from_terms(d, terms).unwrap())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (laurent(), laurent()).prop_map(|(n, m)| {
        let den = m.add_ref(&LaurentPoly2::monomial(1, 1, 0));
        if den.is_zero() {
            RationalFunction::from_laurent(&n)
        } else {
            RationalFunction::new(&n, &den).unwrap()
        }
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rational(n, d))
}

fn vectors(dim: usize) -> impl Strategy<Value = Vec<SparseVec<Rational>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..4).prop_map(|vs| {
        vs.into_iter()
            .map(|v| v.into_iter().enumerate().filter(|&(_, x)| x != 0).map(|(i, x)| (i, rational(x, 1))).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_product_is_associative(x in hecke_element(3), y in hecke_element(3), z in hecke_element(3)) {
        let h = HeckeAlgebra::new(3, laurent_params());
        let left = h.mul(&h.mul(&x, &y).unwrap(), &z).unwrap();
        let right = h.mul(&x, &h.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hecke_product_distributes(x in hecke_element(2), y in hecke_element(2), z in hecke_element(2)) {
        let h = HeckeAlgebra::new(2, laurent_params());
        let left = h.mul(&x, &y.add(&z).unwrap()).unwrap();
        let right = h.mul(&x, &y).unwrap().add(&h.mul(&x, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn basis_products_follow_lengths(u in signed_perm(3), v in signed_perm(3)) {
        let h = HeckeAlgebra::new(3, laurent_params());
        let uv = u.compose(&v).unwrap();
        if uv.length() == u.length() + v.length() {
            let p = h.mul(&h.basis(&u).unwrap(), &h.basis(&v).unwrap()).unwrap();
            prop_assert_eq!(p, h.basis(&uv).unwrap());
        }
    }

    #[test]
    fn rho_reverses_products(x in hecke_element(2), y in hecke_element(2)) {
        let s = Specialization::default_point(8);
        let h = HeckeAlgebra::new(2, laurent_params());
        let at = |e: &HeckeElement<LaurentPoly2>| e.try_map(|c| Ok(s.eval_laurent(c))).unwrap();
        let rep = TensorRep::new(2, 2, Params::at(&s));
        let xy = rep.rho(&at(&h.mul(&x, &y).unwrap())).unwrap();
        let yx = rep.rho(&at(&y)).unwrap().mul(&rep.rho(&at(&x)).unwrap()).unwrap();
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn signed_permutations_form_a_group(u in signed_perm(4), v in signed_perm(4), w in signed_perm(4)) {
        let a = u.compose(&v).unwrap().compose(&w).unwrap();
        let b = u.compose(&v.compose(&w).unwrap()).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(u.compose(&u.inverse()).unwrap().is_identity());
        prop_assert_eq!(u.inverse().length(), u.length());
    }

    #[test]
    fn reduced_words_have_the_right_length(w in signed_perm(5)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(SignedPermutation::from_word(&word, 5).unwrap(), w);
    }

    #[test]
    fn action_on_indices_is_a_left_action(u in signed_perm(3), v in signed_perm(3), flat in 0usize..125) {
        let a = TensorIndex::from_flat(5, 3, flat);
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.act(&a).unwrap(), u.act(&v.act(&a).unwrap()).unwrap());
        prop_assert_eq!(u.act(&a).unwrap().dominant(), a.dominant());
    }

    #[test]
    fn subspace_dimension_formula(us in vectors(5), ws in vectors(5)) {
        let u = Subspace::span(5, us.clone());
        let w = Subspace::span(5, ws);
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u) && sum.contains_subspace(&w));
        prop_assert!(u.contains_subspace(&cap) && w.contains_subspace(&cap));
        for v in &us {
            prop_assert!(u.contains(v));
        }
    }

    #[test]
    fn image_of_invariant_subspace(us in vectors(4), entries in prop::collection::vec(-2i64..=2, 16)) {
        let rows = entries.chunks(4).map(|r| r.iter().map(|&x| rational(x, 1)).collect()).collect();
        let a = ExactMatrix::<Rational>::from_dense(rows).unwrap();
        let u = Subspace::span(4, us);
        let image = u.apply(&a).unwrap();
        prop_assert!(image.dim() <= u.dim());
        let stable = u.sum(&image).unwrap();
        let krylov = stable.sum(&stable.apply(&a).unwrap()).unwrap();
        if krylov.dim() == stable.dim() {
            prop_assert!(stable.is_invariant(&a));
        }
    }

    #[test]
    fn rational_functions_form_a_field(x in ratfun(), y in ratfun(), z in ratfun()) {
        prop_assert_eq!(x.add_ref(&y).mul_ref(&z), x.mul_ref(&z).add_ref(&y.mul_ref(&z)));
        prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
        prop_assert_eq!(x.sub_ref(&x), RationalFunction::zero());
        if !x.is_zero() {
            prop_assert_eq!(x.mul_ref(&x.inverse().unwrap()), RationalFunction::one());
        }
        prop_assert_eq!(RationalFunction::parse(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn specialization_is_a_homomorphism(x in ratfun(), y in ratfun(), a in small_rational(), b in small_rational()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let Ok(s) = Specialization::new(a, b, 4) else { return Ok(()) };
        let (Ok(ex), Ok(ey)) = (s.eval(&x), s.eval(&y)) else { return Ok(()) };
        prop_assert_eq!(s.eval(&x.add_ref(&y)).unwrap(), ex.plus(&ey));
        prop_assert_eq!(s.eval(&x.mul_ref(&y)).unwrap(), ex.times(&ey));
    }
}
