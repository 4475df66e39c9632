//! Orbits in representation varieties: dimensions, tangent spaces, maximal
//! orbits, closure equations, degenerations and the hom order.

use crate::error::{Error, Result};
use crate::exactfield::{FieldSpec, Scalar};
use crate::forms::{TitsForm, DEFAULT_SEARCH_CAP};
use crate::linalg::{self, Matrix};
use crate::oracle::{self, Budget, Predicate};
use crate::par::Exec;
use crate::quiver::{CatalogId, DimVector};
use crate::rep::{
    end_dim, ext1_cocycles, extension_middle, hom_dim, iso_check, tangent_space, tau, Representation, TangentSpace,
};
use crate::semiinv::{differential, evaluate, semi_invariant, Distinguished, SemiInvariant};
use crate::tubes::{Family, TubeModuleId, TubePoint};
use rand::Rng;
use serde_json::{json, Value};

/// `dim O(M) = sum_x d(x)^2 - dim End(M)`.
pub fn orbit_dim(m: &Representation) -> i64 {
    m.dims().iter().map(|&d| (d * d) as i64).sum::<i64>() - end_dim(m) as i64
}

pub fn tangent_dim(m: &Representation) -> usize {
    tangent_space(m).dim()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpiReport {
    pub tangent: usize,
    pub orbit: i64,
    pub ext1: usize,
    pub holds: bool,
}

/// Compares `dim T_M rep(d)` with `dim O(M) + dim Ext^1(M, M)`.
pub fn ext_epi_check(fam: &Family, m: &Representation) -> Result<EpiReport> {
    if fam.decompose_vector(&m.dim_vector()).is_none() {
        return Err(Error::Parameters("dimension vector is not in the regular cone".into()));
    }
    let tangent = tangent_dim(m);
    let orbit = orbit_dim(m);
    let ext1 = ext1_cocycles(m, m).dim();
    Ok(EpiReport { tangent, orbit, ext1, holds: tangent as i64 == orbit + ext1 as i64 })
}

/// `dim O(M) = a(d) - p^d`.
pub fn maximality_check(fam: &Family, m: &Representation) -> Result<bool> {
    let d = m.dim_vector();
    let dec = fam
        .decompose_vector(&d)
        .ok_or_else(|| Error::Parameters("dimension vector is not in the regular cone".into()))?;
    Ok(orbit_dim(m) == fam.form.a_const(&d) - dec.p)
}

/// `c_{lambda_l, i_l} - mu_l c_{lambda_0, i_0}`.
#[derive(Debug, Clone)]
pub struct ClosureEquation {
    pub label: String,
    pub i: usize,
    pub mu: Scalar,
    pub c: SemiInvariant,
}

#[derive(Debug, Clone)]
pub struct ClosureSystem {
    pub d: DimVector,
    pub anchor_label: String,
    pub anchor_i: usize,
    pub anchor: SemiInvariant,
    pub equations: Vec<ClosureEquation>,
    pub codim: i64,
    pub singular: bool,
}

impl ClosureSystem {
    pub fn evaluate(&self, n: &Representation) -> Result<Vec<Scalar>> {
        let c0 = evaluate(&self.anchor, n)?;
        self.equations.iter().map(|e| Ok(&evaluate(&e.c, n)? - &(&e.mu * &c0))).collect()
    }

    /// Anchor first, then the equation semi-invariants.
    pub fn semi_invariants(&self) -> Vec<&SemiInvariant> {
        std::iter::once(&self.anchor).chain(self.equations.iter().map(|e| &e.c)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "anchor": {"lambda": self.anchor_label, "i": self.anchor_i},
            "equations": self.equations.iter().map(|e| json!({"lambda": e.label, "i": e.i, "mu": e.mu.render()})).collect::<Vec<_>>(),
            "codim": self.codim,
            "singular": self.singular,
        })
    }
}

/// Equations whose common zeros form the closure of the maximal orbit of
/// `m`: one `c_{lambda,i}` for each distinguished semi-invariant vanishing at
/// `m`, padded by homogeneous ratios `c_mu - (c_mu(m)/c_anchor(m)) c_anchor`.
pub fn closure_system(fam: &Family, m: &Representation) -> Result<ClosureSystem> {
    let d = m.dim_vector();
    let dec = fam
        .decompose_vector(&d)
        .ok_or_else(|| Error::Parameters("dimension vector is not in the regular cone".into()))?;
    let p = dec.p;
    if p == 0 {
        return Err(Error::Parameters("p^d = 0: the orbit closure is the whole variety".into()));
    }
    if !maximality_check(fam, m)? {
        return Err(Error::Parameters("the orbit is not maximal".into()));
    }
    let singular = fam.form.classify_singular(&d, DEFAULT_SEARCH_CAP)?.singular;
    let table = crate::semiinv::distinguished(fam, &d, &[])?;
    let mut hat: Vec<Distinguished> = Vec::new();
    for e in table.entries {
        if evaluate(&e.c, m)?.is_zero() {
            if hat.iter().any(|h| h.label == e.label) {
                return Err(Error::invariant("closure", format!("two vanishing semi-invariants at {}", e.label)));
            }
            hat.push(e);
        }
    }
    let q = hat.len() as i64;
    if q > p {
        return Err(Error::invariant("closure", "more vanishing distinguished semi-invariants than p^d"));
    }
    let needed = (p - q) as usize + 1;
    let mut picked: Vec<(Scalar, SemiInvariant, Scalar)> = Vec::new();
    let mut tried = 0;
    let mut pool = needed + 4;
    while picked.len() < needed {
        let samples = fam.available_homogeneous(pool);
        if tried == samples.len() {
            return Err(Error::Parameters(format!(
                "not enough homogeneous parameters in {} outside the support of M",
                fam.field()
            )));
        }
        for mu in &samples[tried..] {
            let c = semi_invariant(&fam.homogeneous(mu)?, &d)?;
            let v = evaluate(&c, m)?;
            if !v.is_zero() {
                picked.push((mu.clone(), c, v));
                if picked.len() == needed {
                    break;
                }
            }
        }
        tried = samples.len();
        pool *= 2;
    }
    let (mu0, anchor, v0) = picked.remove(0);
    let mut equations: Vec<ClosureEquation> = hat
        .into_iter()
        .map(|e| ClosureEquation { label: e.label, i: e.i, mu: m.field().zero(), c: e.c })
        .collect();
    for (mu, c, v) in picked {
        equations.push(ClosureEquation { label: mu.render(), i: 0, mu: v.div(&v0)?, c });
    }
    if singular && (equations.len() != 1 || !equations[0].mu.is_zero()) {
        return Err(Error::invariant("closure", "singular dimension vector without a single vanishing equation"));
    }
    Ok(ClosureSystem { d, anchor_label: mu0.render(), anchor_i: 0, anchor, equations, codim: p, singular })
}

pub fn closure_membership(sys: &ClosureSystem, n: &Representation) -> Result<bool> {
    Ok(sys.evaluate(n)?.iter().all(Scalar::is_zero))
}

/// Rank of the differentials of `cs` at `m` as functionals on the tangent
/// space of the variety.
pub fn differential_rank(cs: &[&SemiInvariant], m: &Representation) -> Result<usize> {
    let t = tangent_space(m);
    let f = m.field();
    let zs: Vec<Vec<Matrix>> = (0..t.dim()).map(|j| TangentSpace::to_arrows(m, &t.basis.col(j))).collect();
    let mut rows = Vec::new();
    for c in cs {
        rows.push(zs.iter().map(|z| differential(c, m, z)).collect::<Result<Vec<Scalar>>>()?);
    }
    Ok(linalg::rank(&Matrix::from_rows(f, t.dim(), rows)))
}

/// The split degeneration `sub + quot` of the middle term of the chosen
/// extension class (`None` for the split class), after checking that the
/// middle term is isomorphic to `m`.
pub fn extension_degeneration(
    m: &Representation,
    sub: &Representation,
    quot: &Representation,
    class: Option<usize>,
) -> Result<Representation> {
    let middle = match class {
        None => Representation::direct_sum(&[sub.clone(), quot.clone()])?,
        Some(k) => {
            let e = ext1_cocycles(quot, sub);
            let z = e
                .classes
                .get(k)
                .ok_or_else(|| Error::Parameters(format!("Ext^1 has dimension {}, no class {k}", e.dim())))?;
            extension_middle(sub, quot, z)?
        }
    };
    if !iso_check(&middle, m)? {
        return Err(Error::Parameters("the extension does not assemble to M".into()));
    }
    Representation::direct_sum(&[sub.clone(), quot.clone()])
}

/// Smallest subrepresentation containing the columns of `gens[x]`.
pub fn generated_subspaces(m: &Representation, gens: &[Matrix]) -> Vec<Matrix> {
    let f = m.field();
    let mut span: Vec<Matrix> = gens.iter().map(linalg::column_basis).collect();
    loop {
        let mut grown = false;
        for (a, ar) in m.bq().quiver().arrows().iter().enumerate() {
            if span[ar.from].cols() == 0 {
                continue;
            }
            let img = m.map(a).mul(&span[ar.from]);
            let both = linalg::column_basis(&Matrix::hstack(f, m.dims()[ar.to], &[&span[ar.to], &img]));
            if both.cols() > span[ar.to].cols() {
                span[ar.to] = both;
                grown = true;
            }
        }
        if !grown {
            return span;
        }
    }
}

/// `U + M/U` for the subrepresentation `U` generated by `gens`.
pub fn degenerate_by_sub(m: &Representation, gens: &[Matrix]) -> Result<(Representation, Representation)> {
    let span = generated_subspaces(m, gens);
    let u = m.restrict(&span)?;
    let (quot, _) = m.quotient(&span)?;
    Ok((u, quot))
}

/// Degenerations `U + M/U` for subrepresentations generated by single random
/// vectors; trivial ones are skipped.
pub fn random_degenerations<R: Rng>(m: &Representation, rng: &mut R, count: usize) -> Result<Vec<Representation>> {
    let f = m.field();
    let support: Vec<usize> = (0..m.dims().len()).filter(|&x| m.dims()[x] > 0).collect();
    let mut out = Vec::new();
    if support.is_empty() {
        return Ok(out);
    }
    for _ in 0..count * 4 {
        if out.len() == count {
            break;
        }
        let x = support[rng.gen_range(0..support.len())];
        let gens: Vec<Matrix> = (0..m.dims().len())
            .map(|y| {
                let n = m.dims()[y];
                if y == x {
                    Matrix::from_fn(n, 1, f, |_, _| crate::rep::random_scalar(f, rng, 3))
                } else {
                    Matrix::zeros(n, 0, f)
                }
            })
            .collect();
        let (u, q) = degenerate_by_sub(m, &gens)?;
        if !u.is_zero() && !q.is_zero() {
            out.push(Representation::direct_sum(&[u, q])?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomOrderReport {
    /// `dim Hom(X, m) <= dim Hom(X, n)` for every tested `X`.
    pub consistent: bool,
    /// Index of the first test module violating the inequality.
    pub violated_at: Option<usize>,
    pub strict: usize,
    pub checked: usize,
    pub note: String,
}

pub fn hom_order_compare(m: &Representation, n: &Representation, tests: &[Representation]) -> Result<HomOrderReport> {
    if m.dims() != n.dims() {
        return Err(Error::Parameters("different dimension vectors".into()));
    }
    let mut strict = 0;
    for (k, x) in tests.iter().enumerate() {
        let (a, b) = (hom_dim(x, m)?, hom_dim(x, n)?);
        if a > b {
            return Ok(HomOrderReport {
                consistent: false,
                violated_at: Some(k),
                strict,
                checked: k + 1,
                note: format!("dim Hom(X, m) = {a} > {b} = dim Hom(X, n)"),
            });
        }
        if a < b {
            strict += 1;
        }
    }
    Ok(HomOrderReport {
        consistent: true,
        violated_at: None,
        strict,
        checked: tests.len(),
        note: "finite test list: a necessary condition for the hom order only".into(),
    })
}

/// Projectives, injectives and the regular tube modules of length at most
/// two, plus (over a finite field) every indecomposable with entries at
/// most one.
pub fn test_battery(fam: &Family, budget: Budget, mode: Exec) -> Result<Vec<Representation>> {
    let bq = fam.bq.clone();
    let n = bq.n_vertices();
    let mut out: Vec<Representation> = (0..n).map(|x| Representation::projective(bq.clone(), x)).collect();
    out.extend((0..n).map(|x| Representation::injective(bq.clone(), x)));
    if bq.field().size().is_some() {
        out.extend(oracle::harvest(&bq, 1, budget, mode)?);
        return Ok(out);
    }
    for (k, t) in fam.exceptional.iter().enumerate() {
        for i in 0..t.rank as i64 {
            for len in 1..=2 {
                out.push(fam.tube_module(&TubeModuleId { lambda: TubePoint::Exceptional(k), i, n: len })?);
            }
        }
    }
    for mu in fam.available_homogeneous(3) {
        out.push(fam.homogeneous(&mu)?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct PairReport {
    pub x: usize,
    pub y: usize,
    pub orbit_n: i64,
    /// `dim O(N) + dim Ext^1(X, X) + dim Ext^1(Y, Y)`.
    pub family_dim: i64,
    pub isomorphic_to_r: bool,
    pub hom: HomOrderReport,
}

#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub field: FieldSpec,
    pub d: DimVector,
    pub a: i64,
    pub r: Representation,
    pub orbit_r: i64,
    pub xs: Vec<Representation>,
    pub ys: Vec<Representation>,
    pub pairs: Vec<PairReport>,
    pub battery: usize,
    pub searched: Vec<(String, u128, usize)>,
    pub holds: bool,
}

impl CounterexampleReport {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field.label(),
            "d": self.d,
            "a": self.a,
            "orbit_dim_R": self.orbit_r,
            "R": self.r.to_json(),
            "X_count": self.xs.len(),
            "Y_count": self.ys.len(),
            "battery": self.battery,
            "searched": self.searched.iter().map(|(n, pts, found)| json!({"d": n, "points": pts.to_string(), "found": found})).collect::<Vec<_>>(),
            "pairs": self.pairs.iter().map(|p| json!({
                "x": p.x, "y": p.y, "orbit_dim_N": p.orbit_n, "family_dim": p.family_dim,
                "isomorphic": p.isomorphic_to_r, "hom_consistent": p.hom.consistent, "strict": p.hom.strict,
            })).collect::<Vec<_>>(),
            "holds": self.holds,
        })
    }
}

/// Lines in `k^2` at the sink, one per arm, source empty.
fn four_lines(fam: &Family, lines: [(i64, i64); 4]) -> Result<Representation> {
    let f = fam.field();
    let mut dims = vec![0usize; fam.bq.n_vertices()];
    dims[fam.shape.sink] = 2;
    for arm in &fam.shape.arm_vertices {
        dims[arm[0]] = 1;
    }
    let mut maps: Vec<Matrix> = fam
        .bq
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.to], dims[a.from], f))
        .collect();
    for (i, arm) in fam.shape.arm_arrows.iter().enumerate() {
        let (u, v) = lines[i];
        maps[arm[0]] = Matrix::from_ints(f, &[&[u], &[v]]);
    }
    Representation::new(fam.bq.clone(), dims, maps)
}

/// Hom order without degeneration on the canonical algebra of type
/// `(2,2,2,2)` with `lambda = 2`, at `d = (3;2,2,2,2;1)`: `R = R'' + tau R''`
/// for a `tau`-period-two `R''` of dimension `(1;1,1,1,0;0)`, against
/// `N = X + Y` with `X` of dimension `(2;1,1,1,1;0)` and `Y` of dimension
/// `(1;1,1,1,1;1)`. Over a finite field all candidates come from exhaustive
/// search; over the rationals they are written down directly.
pub fn homdeg_counterexample(field: FieldSpec, budget: Budget, mode: Exec) -> Result<CounterexampleReport> {
    let id = CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![field.int(2)] };
    let fam = Family::new(&id, field)?;
    let bq = fam.bq.clone();
    let form = TitsForm::new(&bq);
    let d: DimVector = vec![3, 2, 2, 2, 2, 1];
    let dr: DimVector = vec![1, 1, 1, 1, 0, 0];
    let dx: DimVector = vec![2, 1, 1, 1, 1, 0];
    let dy: DimVector = vec![1; 6];
    let mut searched = Vec::new();
    let (r2, xs, ys) = if field.size().is_some() {
        let sr = oracle::search_indecomposable(&bq, &dr, &Predicate::Periodic(2), None, budget, mode)?;
        let sx = oracle::search_indecomposable(&bq, &dx, &Predicate::Any, None, budget, mode)?;
        let sy = oracle::search_indecomposable(&bq, &dy, &Predicate::Any, None, budget, mode)?;
        for (dv, s) in [(&dr, &sr), (&dx, &sx), (&dy, &sy)] {
            searched.push((format!("{dv:?}"), s.searched, s.found.len()));
        }
        let r2 = sr.found.first().cloned().ok_or_else(|| {
            Error::invariant("counterexample", format!("no tau-period-two module of dimension {dr:?} among {} orbits", sr.orbits))
        })?;
        (r2, sx.found, sy.found)
    } else {
        let mut r2 = Representation::zero_maps(bq.clone(), dr.iter().map(|&x| x as usize).collect());
        let mut maps = r2.maps().to_vec();
        for arm in &fam.shape.arm_arrows[..3] {
            maps[arm[0]] = Matrix::identity(1, field);
        }
        r2 = r2.with_maps(maps)?;
        let xs = vec![four_lines(&fam, [(1, 0), (0, 1), (1, 1), (1, 3)])?, four_lines(&fam, [(1, 0), (0, 1), (1, 1), (1, 5)])?];
        let mu = fam.available_homogeneous(1);
        let mut ys = vec![fam.tube_module(&TubeModuleId { lambda: TubePoint::Exceptional(0), i: 0, n: 2 })?];
        if let Some(mu) = mu.first() {
            ys.push(fam.homogeneous(mu)?);
        }
        (r2, xs, ys)
    };
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::invariant("counterexample", "no indecomposable X or Y found"));
    }
    let tr = tau(&r2)?;
    if !iso_check(&tau(&tr)?, &r2)? {
        return Err(Error::invariant("counterexample", "R'' is not tau-periodic of period two"));
    }
    let r = Representation::direct_sum(&[r2, tr])?;
    if r.dim_vector() != d {
        return Err(Error::invariant("counterexample", format!("dim R = {:?}", r.dim_vector())));
    }
    let a = form.a_const(&d);
    let orbit_r = orbit_dim(&r);
    let battery = test_battery(&fam, budget, mode)?;
    let mut pairs = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        let ex = ext1_cocycles(x, x).dim() as i64;
        for (j, y) in ys.iter().enumerate() {
            let ey = ext1_cocycles(y, y).dim() as i64;
            let n = Representation::direct_sum(&[x.clone(), y.clone()])?;
            let orbit_n = orbit_dim(&n);
            pairs.push(PairReport {
                x: i,
                y: j,
                orbit_n,
                family_dim: orbit_n + ex + ey,
                isomorphic_to_r: iso_check(&r, &n)?,
                hom: hom_order_compare(&r, &n, &battery)?,
            });
        }
    }
    let holds = orbit_r == a - 2
        && pairs
            .iter()
            .all(|p| p.family_dim == a - 2 && !p.isomorphic_to_r && p.hom.consistent && p.hom.strict > 0);
    Ok(CounterexampleReport {
        field,
        d,
        a,
        r,
        orbit_r,
        xs,
        ys,
        pairs,
        battery: battery.len(),
        searched,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{random_catalog_rep, random_gl};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }
    fn kron() -> Family {
        Family::new(&CatalogId::Kronecker, q()).unwrap()
    }
    fn c2222() -> Family {
        Family::new(&CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![q().int(2)] }, q()).unwrap()
    }
    fn hid(mu: i64, n: usize) -> TubeModuleId {
        TubeModuleId { lambda: TubePoint::Homogeneous(q().int(mu)), i: 0, n }
    }
    fn sum(parts: &[Representation]) -> Representation {
        Representation::direct_sum(parts).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let k = kron();
        assert_eq!(orbit_dim(&Representation::simple(k.bq.clone(), 0)), 0);
        let r0 = k.homogeneous(&q().int(0)).unwrap();
        let r1 = k.homogeneous(&q().int(1)).unwrap();
        assert_eq!(orbit_dim(&sum(&[r0.clone(), r1.clone()])), 6);
        assert_eq!(orbit_dim(&k.tube_module(&hid(0, 2)).unwrap()), 6);
        assert!(maximality_check(&k, &sum(&[r0.clone(), r1.clone()])).unwrap());
        assert!(!maximality_check(&k, &sum(&[r0.clone(), r0.clone()])).unwrap());
        let c = c2222();
        assert!(maximality_check(&c, &c.homogeneous(&q().int(3)).unwrap()).unwrap());
    }

    #[test]
    fn tangent_and_epi_examples() {
        let k = kron();
        let m = sum(&[k.homogeneous(&q().int(0)).unwrap(), k.homogeneous(&q().int(1)).unwrap()]);
        assert_eq!(tangent_dim(&m), 8);
        let rep = ext_epi_check(&k, &m).unwrap();
        assert_eq!((rep.tangent, rep.orbit, rep.ext1, rep.holds), (8, 6, 2, true));
        assert!(ext_epi_check(&k, &Representation::zero(k.bq.clone())).unwrap().holds);
        let c = c2222();
        assert!(ext_epi_check(&c, &c.homogeneous(&q().int(3)).unwrap()).unwrap().holds);
        let s = Representation::zero_maps(c.bq.clone(), vec![1; 6]);
        assert_eq!(tangent_dim(&s), 8);
        assert!(ext_epi_check(&k, &Representation::projective(k.bq.clone(), 0)).is_err());
    }

    #[test]
    fn kronecker_closure_system() {
        let k = kron();
        let m = sum(&[k.homogeneous(&q().int(0)).unwrap(), k.homogeneous(&q().int(1)).unwrap()]);
        let sys = closure_system(&k, &m).unwrap();
        assert_eq!(sys.equations.len(), 2);
        assert_eq!(sys.anchor_label, "2");
        let mus: Vec<(String, Scalar)> = sys.equations.iter().map(|e| (e.label.clone(), e.mu.clone())).collect();
        assert_eq!(mus, vec![("3".into(), q().int(3)), ("4".into(), q().int(6))]);
        assert!(closure_membership(&sys, &m).unwrap());
        assert!(closure_membership(&sys, &Representation::zero_maps(k.bq.clone(), vec![2, 2])).unwrap());
        let far = sum(&[k.homogeneous(&q().int(2)).unwrap(), k.homogeneous(&q().int(3)).unwrap()]);
        assert!(!closure_membership(&sys, &far).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in random_degenerations(&m, &mut rng, 5).unwrap() {
            assert!(closure_membership(&sys, &n).unwrap());
            let g = random_gl(n.dims(), q(), &mut rng);
            assert!(closure_membership(&sys, &n.act(&g).unwrap()).unwrap());
        }
        let w = sum(&[Representation::projective(k.bq.clone(), 0), Representation::simple(k.bq.clone(), 0)]);
        assert!(closure_membership(&sys, &w).unwrap());
        assert_eq!(differential_rank(&sys.semi_invariants(), &w).unwrap(), 3);
        assert_eq!(sys.to_json()["codim"], 2);
        let bad = sum(&[k.homogeneous(&q().int(0)).unwrap(), k.homogeneous(&q().int(0)).unwrap()]);
        assert!(closure_system(&k, &bad).is_err());
    }

    #[test]
    fn canonical_closure_system() {
        let c = c2222();
        let m = c.tube_module(&TubeModuleId { lambda: TubePoint::Exceptional(0), i: 0, n: 2 }).unwrap();
        let sys = closure_system(&c, &m).unwrap();
        assert_eq!(sys.equations.len(), 1);
        assert_eq!((sys.equations[0].label.as_str(), sys.equations[0].i), ("x1", 1));
        assert!(sys.equations[0].mu.is_zero());
        assert!(!sys.singular);
        assert!(closure_membership(&sys, &m).unwrap());
        let other = c.tube_module(&TubeModuleId { lambda: TubePoint::Exceptional(0), i: 1, n: 2 }).unwrap();
        assert!(!closure_membership(&sys, &other).unwrap());
        assert!(!closure_membership(&sys, &c.homogeneous(&q().int(3)).unwrap()).unwrap());
        let r = sum(&c.exceptional[0].simples);
        assert!(closure_membership(&sys, &r).unwrap());
        assert_eq!(differential_rank(&[&sys.equations[0].c], &m).unwrap(), 1);
        let p = closure_system(&kron(), &kron().homogeneous(&q().int(1)).unwrap()).unwrap();
        assert_eq!(p.equations.len(), 1);
    }

    #[test]
    fn degeneration_examples() {
        let k = kron();
        let r0 = k.homogeneous(&q().int(0)).unwrap();
        let r1 = k.homogeneous(&q().int(1)).unwrap();
        let j = k.tube_module(&hid(0, 2)).unwrap();
        let n = extension_degeneration(&j, &r0, &r0, Some(0)).unwrap();
        assert!(iso_check(&n, &sum(&[r0.clone(), r0.clone()])).unwrap());
        let z = Representation::zero(k.bq.clone());
        assert!(iso_check(&extension_degeneration(&j, &z, &j, None).unwrap(), &j).unwrap());
        let m = sum(&[r0.clone(), r1.clone()]);
        assert!(iso_check(&extension_degeneration(&m, &r0, &r1, None).unwrap(), &m).unwrap());
        assert!(extension_degeneration(&j, &r0, &r0, None).is_err());
        assert!(extension_degeneration(&j, &r0, &r0, Some(3)).is_err());
    }

    #[test]
    fn hom_order_examples() {
        let k = kron();
        let r0 = k.homogeneous(&q().int(0)).unwrap();
        let j = k.tube_module(&hid(0, 2)).unwrap();
        let rr = sum(&[r0.clone(), r0.clone()]);
        let tests = vec![r0.clone(), Representation::simple(k.bq.clone(), 1), Representation::projective(k.bq.clone(), 0)];
        let rep = hom_order_compare(&j, &rr, &tests).unwrap();
        assert!(rep.consistent && rep.strict == 1);
        let back = hom_order_compare(&rr, &j, &tests).unwrap();
        assert_eq!(back.violated_at, Some(0));
        assert!(hom_order_compare(&j, &j, &tests).unwrap().consistent);
    }

    #[test]
    fn random_maximal_points() {
        let c = c2222();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..3 {
            let m = random_catalog_rep(&c.bq, &c.shape, &[1; 6], &mut rng, 0.0);
            assert!(ext_epi_check(&c, &m).unwrap().holds);
        }
    }

    #[test]
    fn counterexample_over_rationals() {
        let rep = homdeg_counterexample(q(), Budget::default(), Exec::default_mode()).unwrap();
        assert_eq!(rep.orbit_r, rep.a - 2);
        for p in &rep.pairs {
            assert_eq!(p.orbit_n, rep.a - 4);
            assert_eq!(p.family_dim, rep.a - 2);
        }
        assert!(rep.holds, "{}", rep.to_json());
    }

    #[test]
    fn counterexample_over_f3() {
        let rep = homdeg_counterexample(FieldSpec::Prime(3), Budget::default(), Exec::default_mode()).unwrap();
        assert!(!rep.xs.is_empty() && !rep.ys.is_empty());
        assert_eq!(rep.orbit_r, rep.a - 2);
        assert!(rep.holds, "{}", rep.to_json());
    }
}
