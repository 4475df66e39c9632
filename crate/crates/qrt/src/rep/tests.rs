use super::*;
use crate::quiver::{catalog, CatalogId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn kron(f: FieldSpec) -> Arc<BoundQuiver> {
    catalog(&CatalogId::Kronecker, f).unwrap().0
}

fn mat(f: FieldSpec, rows: &[&[i64]]) -> Matrix {
    Matrix::from_ints(f, rows)
}

/// Kronecker `R_mu`: `a = 1`, `b = mu`.
fn r_mu(bq: &Arc<BoundQuiver>, mu: i64) -> Representation {
    let f = bq.field();
    Representation::new(bq.clone(), vec![1, 1], vec![mat(f, &[&[1]]), mat(f, &[&[mu]])]).unwrap()
}

fn c2222() -> (Arc<BoundQuiver>, crate::quiver::CatalogShape) {
    catalog(&CatalogId::Canonical { arms: vec![2, 2, 2, 2], lambdas: vec![q().int(2)] }, q()).unwrap()
}

#[test]
fn validate_examples() {
    let k = kron(q());
    assert!(r_mu(&k, 3).validate());
    let (bq, _) = c2222();
    let ones = Representation::new(bq.clone(), vec![1; 6], (0..8).map(|_| mat(q(), &[&[1]])).collect()).unwrap();
    assert!(!ones.validate());
    assert!(Representation::zero_maps(bq.clone(), vec![2; 6]).validate());
    assert!(Representation::new(bq, vec![1; 6], vec![]).is_err());
}

#[test]
fn hom_examples() {
    let k = kron(q());
    let s1 = Representation::simple(k.clone(), 0);
    assert_eq!(end_dim(&s1), 1);
    assert_eq!(hom_dim(&r_mu(&k, 0), &r_mu(&k, 1)).unwrap(), 0);
    let p1 = Representation::projective(k.clone(), 0);
    let m = Representation::direct_sum(&[r_mu(&k, 2), r_mu(&k, 5), s1.clone()]).unwrap();
    assert_eq!(hom_dim(&p1, &m).unwrap(), m.dims()[0]);
    let hb = hom(&m, &m).unwrap();
    // identity lies in the span
    let id: EndoTuple = m.dims().iter().map(|&d| Matrix::identity(d, q())).collect();
    let flat = |t: &EndoTuple| t.iter().flat_map(|x| x.entries().to_vec()).collect::<Vec<_>>();
    let cols: Vec<Vec<Scalar>> = hb.basis.iter().map(flat).collect();
    let b = Matrix::from_columns(q(), flat(&id).len(), &cols);
    assert!(linalg::solve(&b, &Matrix::column_vector(q(), flat(&id))).is_some());
}

#[test]
fn projective_examples() {
    let k = kron(q());
    assert_eq!(Representation::projective(k.clone(), 0).dims(), &[1, 2]);
    assert_eq!(Representation::projective(k.clone(), 1), Representation::simple(k, 1));
    let (bq, sh) = c2222();
    let p = Representation::projective(bq.clone(), sh.source);
    assert_eq!(p.dims()[sh.sink], 2);
    assert!(p.validate());
    let i = Representation::injective(bq.clone(), sh.sink);
    assert_eq!(i.dims()[sh.source], 2);
    assert!(i.validate());
}

#[test]
fn top_radical_examples() {
    let k = kron(q());
    let (t, r) = top_and_radical(&Representation::simple(k.clone(), 1));
    assert_eq!((t, r.dims().to_vec()), (vec![0, 1], vec![0, 0]));
    let (t, r) = top_and_radical(&Representation::projective(k.clone(), 0));
    assert_eq!((t, r.dims().to_vec()), (vec![1, 0], vec![0, 2]));
    for mu in [0, 1, 7] {
        assert_eq!(top_and_radical(&r_mu(&k, mu)).0, vec![1, 0]);
    }
}

#[test]
fn presentation_examples() {
    let k = kron(q());
    let p = minimal_presentation(&Representation::projective(k.clone(), 0)).unwrap();
    assert_eq!((p.p1().to_vec(), p.p0().to_vec()), (vec![], vec![0]));
    let p = minimal_presentation(&r_mu(&k, 0)).unwrap();
    assert_eq!((p.p1().to_vec(), p.p0().to_vec()), (vec![1], vec![0]));
    assert_eq!(p.omega(0, 0), &[q().zero(), q().one()]);
    let p = minimal_presentation(&Representation::simple(k.clone(), 0)).unwrap();
    assert_eq!(p.p1(), &[1, 1]);
    let col: Vec<Vec<Scalar>> = (0..2).map(|i| p.omega(i, 0).to_vec()).collect();
    assert_eq!(col, vec![vec![q().one(), q().zero()], vec![q().zero(), q().one()]]);
}

#[test]
fn ext_examples() {
    let k = kron(q());
    let s1 = Representation::simple(k.clone(), 0);
    let s2 = Representation::simple(k.clone(), 1);
    let p1 = Representation::projective(k.clone(), 0);
    assert_eq!(ext(&p1, &s2).unwrap(), (0, 0));
    assert_eq!(ext(&s1, &s2).unwrap(), (2, 0));
    assert_eq!(ext(&r_mu(&k, 3), &r_mu(&k, 3)).unwrap(), (1, 0));
    let (bq, sh) = c2222();
    let s_src = Representation::simple(bq.clone(), sh.source);
    let s_sink = Representation::simple(bq.clone(), sh.sink);
    // two relations from source to sink
    assert_eq!(ext(&s_src, &s_sink).unwrap(), (0, 2));
}

#[test]
fn cocycles_agree_with_resolution() {
    let (bq, sh) = c2222();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..6 {
        let a = random_catalog_rep(&bq, &sh, &[1, 1, 0, 1, 1, 1], &mut rng, 0.2);
        let b = random_catalog_rep(&bq, &sh, &[2, 1, 1, 1, 1, 1], &mut rng, 0.2);
        assert!(a.validate() && b.validate());
        let e = ext1_cocycles(&a, &b);
        assert_eq!(e.dim(), ext(&a, &b).unwrap().0);
        for z in &e.classes {
            assert!(extension_middle(&b, &a, z).unwrap().validate());
        }
    }
}

#[test]
fn tau_examples() {
    let k = kron(q());
    assert!(tau(&Representation::projective(k.clone(), 0)).unwrap().is_zero());
    let s1 = Representation::simple(k.clone(), 0);
    let t = tau(&s1).unwrap();
    assert_eq!(t.dims(), &[3, 2]);
    assert!(t.validate());
    assert!(iso_check(&tau_minus(&t).unwrap(), &s1).unwrap());
    let r = r_mu(&k, 4);
    assert!(iso_check(&tau(&r).unwrap(), &r).unwrap());
    assert_eq!(is_periodic(&r, 3).unwrap(), Some(1));
    assert_eq!(is_periodic(&Representation::projective(k, 0), 3).unwrap(), None);
}

#[test]
fn iso_examples() {
    let k = kron(q());
    let m = r_mu(&k, 2);
    assert!(iso_check(&m, &m).unwrap());
    assert!(!iso_check(&r_mu(&k, 0), &r_mu(&k, 1)).unwrap());
    let p1 = Representation::projective(k.clone(), 0);
    let p2 = Representation::projective(k.clone(), 1);
    let a = Representation::direct_sum(&[p1.clone(), p2.clone()]).unwrap();
    let b = Representation::direct_sum(&[p2, p1]).unwrap();
    assert!(iso_check(&a, &b).unwrap());
    // R_0 + R_0 against the length-two tube module with the same factors
    let j = Representation::new(k.clone(), vec![2, 2], vec![mat(q(), &[&[1, 0], &[0, 1]]), mat(q(), &[&[0, 1], &[0, 0]])]).unwrap();
    let rr = Representation::direct_sum(&[r_mu(&k, 0), r_mu(&k, 0)]).unwrap();
    assert!(!iso_check(&j, &rr).unwrap());
}

#[test]
fn decompose_examples() {
    let k = kron(q());
    let s = Representation::simple(k.clone(), 0);
    let d = decompose(&Representation::direct_sum(&[s.clone(), s.clone()]).unwrap()).unwrap();
    assert_eq!(d.len(), 2);
    let d = decompose(&Representation::direct_sum(&[r_mu(&k, 0), r_mu(&k, 1)]).unwrap()).unwrap();
    assert_eq!(d.iter().map(|r| r.dims().to_vec()).collect::<Vec<_>>(), vec![vec![1, 1], vec![1, 1]]);
    let j = Representation::new(k.clone(), vec![2, 2], vec![mat(q(), &[&[1, 0], &[0, 1]]), mat(q(), &[&[0, 1], &[0, 0]])]).unwrap();
    assert_eq!(decompose(&j).unwrap().len(), 1);
    assert!(is_local(&j));
    // conjugated sum over a prime field
    let f5 = FieldSpec::prime(5).unwrap();
    let k5 = kron(f5);
    let m = Representation::direct_sum(&[r_mu(&k5, 2), r_mu(&k5, 2), Representation::simple(k5.clone(), 1)]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random_gl(m.dims(), f5, &mut rng);
    let gm = m.act(&g).unwrap();
    let parts = decompose(&gm).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(iso_check(&gm, &m).unwrap());
}

#[test]
fn json_round_trip() {
    let (bq, sh) = c2222();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let m = random_catalog_rep(&bq, &sh, &[2, 1, 1, 1, 1, 1], &mut rng, 0.0);
    let back = Representation::from_json(bq, &m.to_json()).unwrap();
    assert_eq!(back, m);
}
