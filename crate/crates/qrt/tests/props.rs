use proptest::prelude::*;
use qrt::exactfield::FieldSpec;
use qrt::forms::TitsForm;
use qrt::quiver::{catalog, CatalogId};
use qrt::rep::{ext, hom_dim, iso_check, random_catalog_rep, random_gl, Representation};
use qrt::semiinv::{evaluate, semi_invariant, transformation_check};
use qrt::tubes::Family;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c2222() -> Family {
    let f = FieldSpec::Rationals;
    Family::new(&CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![f.int(2)] }, f).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms_mod_p(a in -50i64..50, b in -50i64..50, c in -50i64..50, p in prop::sample::select(vec![2u32, 3, 5, 7, 101])) {
        let f = FieldSpec::Prime(p);
        let (x, y, z) = (f.int(a), f.int(b), f.int(c));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !y.is_zero() {
            prop_assert_eq!((&x * &y).div(&y).unwrap(), x);
        }
    }

    #[test]
    fn tits_form_is_bilinear(d in prop::collection::vec(0i64..5, 6), e in prop::collection::vec(-4i64..5, 6), g in prop::collection::vec(-4i64..5, 6)) {
        let (bq, _) = catalog(&CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![FieldSpec::Rationals.int(2)] }, FieldSpec::Rationals).unwrap();
        let t = TitsForm::new(&bq);
        let eg: Vec<i64> = e.iter().zip(&g).map(|(a, b)| a + b).collect();
        prop_assert_eq!(t.bilinear(&d, &eg), t.bilinear(&d, &e) + t.bilinear(&d, &g));
        prop_assert!(t.quadratic(&d) >= 0);
    }

    #[test]
    fn euler_form_matches_homology(seed in any::<u64>(), dm in prop::collection::vec(0usize..3, 6), dn in prop::collection::vec(0usize..3, 6)) {
        let fam = c2222();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_catalog_rep(&fam.bq, &fam.shape, &dm, &mut rng, 0.3);
        let n = random_catalog_rep(&fam.bq, &fam.shape, &dn, &mut rng, 0.3);
        let (e1, e2) = ext(&m, &n).unwrap();
        let lhs = fam.form.bilinear(&m.dim_vector(), &n.dim_vector());
        prop_assert_eq!(lhs, hom_dim(&m, &n).unwrap() as i64 - e1 as i64 + e2 as i64);
    }

    #[test]
    fn gl_action_preserves_isoclass_and_hom(seed in any::<u64>()) {
        let fam = c2222();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_catalog_rep(&fam.bq, &fam.shape, &[2, 1, 1, 1, 1, 1], &mut rng, 0.2);
        let g = random_gl(m.dims(), m.field(), &mut rng);
        let gm = m.act(&g).unwrap();
        prop_assert!(gm.validate());
        prop_assert!(iso_check(&m, &gm).unwrap());
        let s = Representation::simple(fam.bq.clone(), 0);
        prop_assert_eq!(hom_dim(&s, &m).unwrap(), hom_dim(&s, &gm).unwrap());
    }

    #[test]
    fn semi_invariants_are_semi_invariant(seed in any::<u64>(), k in 0usize..4) {
        let fam = c2222();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = fam.exceptional[k].simples[1].clone();
        let c = semi_invariant(&v, &fam.h).unwrap();
        let m = random_catalog_rep(&fam.bq, &fam.shape, &[1; 6], &mut rng, 0.2);
        let g = random_gl(m.dims(), m.field(), &mut rng);
        prop_assert!(transformation_check(&c, &m, &g).unwrap());
        prop_assert_eq!(evaluate(&c, &m).unwrap().is_zero(), hom_dim(&v, &m).unwrap() > 0);
    }

    #[test]
    fn direct_sums_add_hom(seed in any::<u64>()) {
        let fam = c2222();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_catalog_rep(&fam.bq, &fam.shape, &[1, 1, 0, 1, 1, 1], &mut rng, 0.2);
        let b = random_catalog_rep(&fam.bq, &fam.shape, &[1, 0, 1, 1, 0, 1], &mut rng, 0.2);
        let x = random_catalog_rep(&fam.bq, &fam.shape, &[1, 1, 1, 1, 1, 0], &mut rng, 0.2);
        let s = Representation::direct_sum(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(hom_dim(&x, &s).unwrap(), hom_dim(&x, &a).unwrap() + hom_dim(&x, &b).unwrap());
    }
}
