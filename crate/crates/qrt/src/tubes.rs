//! Tube combinatorics of the standard separating family of a catalog
//! algebra: regular simples, tube modules, decomposition of dimension
//! vectors along `h` and the exceptional vectors, Hom and Euler formulas.

use crate::error::{Error, Result};
use crate::exactfield::{parse_scalar, FieldSpec, Scalar};
use crate::forms::TitsForm;
use crate::linalg::{self, char_poly, roots_in_field, Matrix};
use crate::quiver::{catalog, BoundQuiver, CatalogId, CatalogShape, DimVector};
use crate::rep::{decompose, ext1_cocycles, extension_middle, hom_dim, is_local, is_periodic, iso_check, tau, Representation};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A tube of rank at least two.
#[derive(Debug, Clone)]
pub struct ExceptionalTube {
    /// Catalog label `x1`..`x4` (arm index plus one).
    pub label: String,
    pub arm: usize,
    /// Point of the projective line (`inf`, `0`, `1` or a lambda).
    pub point: String,
    pub rank: usize,
    /// Regular simples, ordered so that `tau R_i = R_{i-1}`.
    pub simples: Vec<Representation>,
    pub e: Vec<DimVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TubePoint {
    /// Index into [`Family::exceptional`].
    Exceptional(usize),
    Homogeneous(Scalar),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeModuleId {
    pub lambda: TubePoint,
    pub i: i64,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeDecomposition {
    pub p: i64,
    /// `coords[k][i]` for the `k`-th exceptional tube.
    pub coords: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    P,
    R,
    Q,
}

#[derive(Debug, Clone)]
pub struct Trichotomy {
    pub class: Component,
    pub defect: i64,
    pub period: Option<usize>,
    /// `(test module label, hom dimension)` spot checks.
    pub evidence: Vec<(String, usize)>,
}

/// Separating family data for a catalog algebra.
#[derive(Debug, Clone)]
pub struct Family {
    pub bq: Arc<BoundQuiver>,
    pub shape: CatalogShape,
    pub form: TitsForm,
    pub h: DimVector,
    pub exceptional: Vec<ExceptionalTube>,
}

fn rem(i: i64, r: usize) -> usize {
    i.rem_euclid(r as i64) as usize
}

impl Family {
    pub fn new(id: &CatalogId, field: FieldSpec) -> Result<Family> {
        let (bq, shape) = catalog(id, field)?;
        let form = TitsForm::new(&bq);
        let h = vec![1i64; bq.n_vertices()];
        let mut fam = Family { bq, shape, form, h, exceptional: vec![] };
        for arm in 0..fam.shape.arms.len() {
            let r = fam.shape.arms[arm];
            if r < 2 {
                continue;
            }
            let e0 = fam.exceptional_simple(arm)?;
            let mut simples = vec![e0.clone(); r];
            let mut cur = e0.clone();
            for k in 1..r {
                cur = tau(&cur)?;
                let slot = r - k;
                let dv = cur.dim_vector();
                let nz: Vec<usize> = (0..dv.len()).filter(|&v| dv[v] != 0).collect();
                simples[slot] = if nz.len() == 1 && dv[nz[0]] == 1 {
                    Representation::simple(fam.bq.clone(), nz[0])
                } else {
                    cur.clone()
                };
            }
            let back = tau(&simples[1])?;
            if !iso_check(&back, &simples[0])? {
                return Err(Error::invariant("tube", format!("tau is not cyclic on the tube of arm {}", arm + 1)));
            }
            let e = simples.iter().map(|s| s.dim_vector()).collect();
            fam.exceptional.push(ExceptionalTube {
                label: format!("x{}", arm + 1),
                arm,
                point: fam.shape.arm_point(arm),
                rank: r,
                simples,
                e,
            });
        }
        fam.check()?;
        Ok(fam)
    }

    pub fn field(&self) -> FieldSpec {
        self.bq.field()
    }

    fn check(&self) -> Result<()> {
        if self.form.quadratic(&self.h) != 0 {
            return Err(Error::invariant("tube", "q(h) != 0"));
        }
        if self.h.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::invariant("tube", "h is divisible"));
        }
        for t in &self.exceptional {
            let mut sum = vec![0i64; self.h.len()];
            for e in &t.e {
                for (s, x) in sum.iter_mut().zip(e) {
                    *s += x;
                }
            }
            if sum != self.h {
                return Err(Error::invariant("tube", format!("regular simples of {} do not add up to h", t.label)));
            }
        }
        Ok(())
    }

    /// Rank-one-per-vertex module at the point `(a : b)`; arm `zero_arm`
    /// (if given) is cut away from the interior.
    fn point_rep(&self, a: &Scalar, b: &Scalar, zero_arm: Option<usize>) -> Result<Representation> {
        let f = self.field();
        let mut dims = vec![1usize; self.bq.n_vertices()];
        if let Some(i) = zero_arm {
            for &v in &self.shape.arm_vertices[i] {
                dims[v] = 0;
            }
        }
        let mut maps: Vec<Matrix> = self
            .bq
            .quiver()
            .arrows()
            .iter()
            .map(|ar| Matrix::from_fn(dims[ar.to], dims[ar.from], f, |_, _| f.one()))
            .collect();
        for (j, arm) in self.shape.arm_arrows.iter().enumerate() {
            let lead = *arm.last().unwrap();
            let x = self.shape.arm_scalar(j, a, b);
            maps[lead] = Matrix::from_fn(maps[lead].rows(), maps[lead].cols(), f, |_, _| x.clone());
        }
        let r = Representation::new(self.bq.clone(), dims, maps)?;
        if !r.validate() {
            return Err(Error::invariant("tube", "point template violates a relation"));
        }
        Ok(r)
    }

    fn exceptional_simple(&self, arm: usize) -> Result<Representation> {
        let f = self.field();
        let (a, b) = match arm {
            0 => (f.zero(), f.one()),
            1 => (f.one(), f.zero()),
            2 => (f.one(), -f.one()),
            j => (f.one(), -&self.shape.lambdas[j - 3]),
        };
        self.point_rep(&a, &b, Some(arm))
    }

    pub fn is_exceptional_scalar(&self, mu: &Scalar) -> bool {
        let t = self.shape.arms.len();
        if t <= 2 {
            // only the point 0 (second arm) can be exceptional among scalars
            return mu.is_zero() && self.shape.arms[1] >= 2;
        }
        self.shape.exceptional_scalars().contains(mu)
    }

    /// Up to `max` homogeneous parameters from `2, 3, 4, ...`; fewer when
    /// the field runs out.
    pub fn available_homogeneous(&self, max: usize) -> Vec<Scalar> {
        let f = self.field();
        let mut out = Vec::new();
        let mut k = 2u64;
        while out.len() < max && f.size().is_none_or(|q| k < q) {
            let mu = f.int(k as i64);
            if !self.is_exceptional_scalar(&mu) {
                out.push(mu);
            }
            k += 1;
        }
        out
    }

    /// Homogeneous regular simple at `mu`.
    pub fn homogeneous(&self, mu: &Scalar) -> Result<Representation> {
        if mu.field() != self.field() {
            return Err(Error::Field("parameter from another field".into()));
        }
        if self.is_exceptional_scalar(mu) {
            return Err(Error::Parameters(format!("{mu} is an exceptional point")));
        }
        let (a, b) = self.shape.homogeneous_point(mu);
        self.point_rep(&a, &b, None)
    }

    /// The first `count` homogeneous parameters from `2, 3, 4, ...`.
    pub fn homogeneous_samples(&self, count: usize) -> Result<Vec<Scalar>> {
        let out = self.available_homogeneous(count);
        if out.len() < count {
            return Err(Error::Parameters(format!("only {} homogeneous samples in {}", out.len(), self.field())));
        }
        Ok(out)
    }

    pub fn rank(&self, p: &TubePoint) -> usize {
        match p {
            TubePoint::Exceptional(k) => self.exceptional[*k].rank,
            TubePoint::Homogeneous(_) => 1,
        }
    }

    pub fn point_label(&self, p: &TubePoint) -> String {
        match p {
            TubePoint::Exceptional(k) => self.exceptional[*k].label.clone(),
            TubePoint::Homogeneous(mu) => mu.render(),
        }
    }

    /// Parses `x1`..`x4` or a scalar.
    pub fn parse_point(&self, s: &str) -> Result<TubePoint> {
        if let Some(k) = self.exceptional.iter().position(|t| t.label == s) {
            return Ok(TubePoint::Exceptional(k));
        }
        let mu = parse_scalar(s, self.field())?;
        if self.is_exceptional_scalar(&mu) {
            return Err(Error::Parameters(format!("{s} is exceptional; use its label")));
        }
        Ok(TubePoint::Homogeneous(mu))
    }

    pub fn id_from_json(&self, v: &Value) -> Result<TubeModuleId> {
        let bad = |m: &str| Error::Parse(format!("tube id: {m}"));
        let lambda = self.parse_point(v.get("lambda").and_then(Value::as_str).ok_or_else(|| bad("lambda"))?)?;
        let i = v.get("i").and_then(Value::as_i64).ok_or_else(|| bad("i"))?;
        let n = v.get("n").and_then(Value::as_u64).filter(|&n| n >= 1).ok_or_else(|| bad("n >= 1"))? as usize;
        Ok(TubeModuleId { lambda, i, n })
    }

    pub fn id_to_json(&self, id: &TubeModuleId) -> Value {
        json!({"lambda": self.point_label(&id.lambda), "i": id.i, "n": id.n})
    }

    pub fn regular_simple(&self, p: &TubePoint, i: i64) -> Result<Representation> {
        match p {
            TubePoint::Exceptional(k) => {
                let t = &self.exceptional[*k];
                Ok(t.simples[rem(i, t.rank)].clone())
            }
            TubePoint::Homogeneous(mu) => self.homogeneous(mu),
        }
    }

    /// `e_{lambda, i}`.
    pub fn e_vector(&self, p: &TubePoint, i: i64) -> DimVector {
        match p {
            TubePoint::Exceptional(k) => self.exceptional[*k].e[rem(i, self.exceptional[*k].rank)].clone(),
            TubePoint::Homogeneous(_) => self.h.clone(),
        }
    }

    /// `e^n_{lambda, i} = sum_{j = i-n+1}^{i} e_{lambda, j}`.
    pub fn e_n(&self, id: &TubeModuleId) -> DimVector {
        let mut out = vec![0i64; self.h.len()];
        for j in (id.i - id.n as i64 + 1)..=id.i {
            for (o, x) in out.iter_mut().zip(self.e_vector(&id.lambda, j)) {
                *o += x;
            }
        }
        out
    }

    /// Uniserial module with top `R_{lambda,i}` and length `n`, built by
    /// successive non-split extensions.
    pub fn tube_module(&self, id: &TubeModuleId) -> Result<Representation> {
        if id.n == 0 {
            return Err(Error::Parameters("tube modules have length at least 1".into()));
        }
        let mut cur = self.regular_simple(&id.lambda, id.i)?;
        for n in 1..id.n {
            let sub = self.regular_simple(&id.lambda, id.i - n as i64)?;
            let e = ext1_cocycles(&cur, &sub);
            let z = e.classes.first().ok_or_else(|| {
                Error::invariant("tube", format!("Ext^1 vanishes while building length {}", n + 1))
            })?;
            cur = extension_middle(&sub, &cur, z)?;
        }
        if cur.dim_vector() != self.e_n(id) {
            return Err(Error::invariant("tube", "tube module has the wrong dimension vector"));
        }
        if !is_local(&cur) {
            return Err(Error::invariant("tube", "tube module is not indecomposable"));
        }
        Ok(cur)
    }

    /// Solves `d = p h + sum p_{lambda,i} e_{lambda,i}` with a zero
    /// coordinate in each exceptional tube; `None` if no non-negative
    /// integral solution exists.
    pub fn decompose_vector(&self, d: &[i64]) -> Option<TubeDecomposition> {
        let f = FieldSpec::Rationals;
        let ranks: Vec<usize> = self.exceptional.iter().map(|t| t.rank).collect();
        let mut choice = vec![0usize; ranks.len()];
        loop {
            let mut cols: Vec<Vec<Scalar>> = vec![self.h.iter().map(|&x| f.int(x)).collect()];
            let mut slots = vec![];
            for (k, t) in self.exceptional.iter().enumerate() {
                for i in 0..t.rank {
                    if i != choice[k] {
                        cols.push(t.e[i].iter().map(|&x| f.int(x)).collect());
                        slots.push((k, i));
                    }
                }
            }
            let a = Matrix::from_columns(f, d.len(), &cols);
            let b = Matrix::column_vector(f, d.iter().map(|&x| f.int(x)).collect());
            if let Some(x) = linalg::solve(&a, &b) {
                let vals: Option<Vec<i64>> = (0..x.rows())
                    .map(|r| {
                        let v = x.get(r, 0).as_rational().unwrap();
                        (v.is_integer() && !v.is_negative()).then(|| v.to_integer().try_into().ok()).flatten()
                    })
                    .collect();
                if let Some(vals) = vals {
                    let mut coords: Vec<Vec<i64>> = ranks.iter().map(|&r| vec![0; r]).collect();
                    for (s, &(k, i)) in slots.iter().enumerate() {
                        coords[k][i] = vals[s + 1];
                    }
                    return Some(TubeDecomposition { p: vals[0], coords });
                }
            }
            // next choice
            let mut k = 0;
            loop {
                if k == ranks.len() {
                    return None;
                }
                choice[k] += 1;
                if choice[k] < ranks[k] {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    fn p_coord(&self, dec: &TubeDecomposition, p: &TubePoint, i: i64) -> i64 {
        match p {
            TubePoint::Exceptional(k) => dec.coords[*k][rem(i, self.exceptional[*k].rank)],
            TubePoint::Homogeneous(_) => 0,
        }
    }

    /// Number of composition factors `R_{lambda, j}` of the tube module `id`.
    pub fn q_coord(&self, id: &TubeModuleId, j: i64) -> i64 {
        let r = self.rank(&id.lambda);
        ((id.i - id.n as i64 + 1)..=id.i).filter(|&k| rem(k, r) == rem(j, r)).count() as i64
    }

    /// `dim Hom(R^{(n)}_{lambda,i}, R^{(m)}_{mu,j})` by the min formula.
    pub fn hom_formula(&self, a: &TubeModuleId, b: &TubeModuleId) -> i64 {
        if a.lambda != b.lambda {
            return 0;
        }
        let x = self.q_coord(b, a.i);
        let y = self.q_coord(a, b.i - b.n as i64 + 1);
        x.min(y)
    }

    /// The two Euler-form values `<e^n, d>` and `<d, e^n>` from the
    /// decomposition of `d`, checked against the Tits form.
    pub fn euler_tube_formula(&self, id: &TubeModuleId, d: &[i64]) -> Result<(i64, i64)> {
        let dec = self
            .decompose_vector(d)
            .ok_or_else(|| Error::Parameters("dimension vector is not in the regular cone".into()))?;
        let n = id.n as i64;
        let left = self.p_coord(&dec, &id.lambda, id.i) - self.p_coord(&dec, &id.lambda, id.i - n);
        let right = self.p_coord(&dec, &id.lambda, id.i - n + 1) - self.p_coord(&dec, &id.lambda, id.i + 1);
        let en = self.e_n(id);
        if left != self.form.bilinear(&en, d) || right != self.form.bilinear(d, &en) {
            return Err(Error::invariant("euler", "tube formula disagrees with the Tits form"));
        }
        Ok((left, right))
    }

    /// Defect `<h, d>`.
    pub fn defect(&self, d: &[i64]) -> i64 {
        self.form.bilinear(&self.h, d)
    }

    fn lcm_ranks(&self) -> usize {
        self.exceptional.iter().fold(1usize, |l, t| l.lcm(&t.rank))
    }

    /// Preprojective, regular or preinjective, with Hom spot checks.
    pub fn trichotomy(&self, m: &Representation) -> Result<Trichotomy> {
        let parts = decompose(m)?;
        if parts.len() != 1 {
            return Err(Error::Parameters(format!("module has {} summands", parts.len())));
        }
        let defect = self.defect(&m.dim_vector());
        let period = is_periodic(m, 2 * self.lcm_ranks())?;
        let class = if period.is_some() {
            Component::R
        } else if defect < 0 {
            Component::P
        } else if defect > 0 {
            Component::Q
        } else {
            return Err(Error::invariant("trichotomy", "defect zero but not periodic"));
        };
        let mut tests: Vec<(String, Representation)> = Vec::new();
        for t in &self.exceptional {
            for (i, s) in t.simples.iter().enumerate() {
                tests.push((format!("{}_{i}", t.label), s.clone()));
            }
        }
        for mu in self.available_homogeneous(3) {
            tests.push((mu.render(), self.homogeneous(&mu)?));
        }
        let mut evidence = Vec::new();
        for (label, r) in &tests {
            let v = match class {
                Component::P => hom_dim(r, m)?,
                Component::Q => hom_dim(m, r)?,
                Component::R => continue,
            };
            if v != 0 {
                return Err(Error::invariant(
                    "trichotomy",
                    format!("defect sign contradicted by Hom against {label}"),
                ));
            }
            evidence.push((label.clone(), v));
        }
        Ok(Trichotomy { class, defect, period, evidence })
    }

    /// Homogeneous parameter of a module of dimension `n h` in a homogeneous
    /// tube, read off from the two first arms.
    fn homogeneous_parameter(&self, m: &Representation) -> Option<Scalar> {
        let x1 = m.eval_path(&self.shape.arm_path(0));
        let x2 = m.eval_path(&self.shape.arm_path(1));
        let inv = linalg::inverse(&x1).ok()?;
        let roots = roots_in_field(&char_poly(&inv.mul(&x2)));
        if roots.len() != 1 {
            return None;
        }
        let r = roots[0].clone();
        Some(if self.shape.arms.len() <= 2 { r } else { -r })
    }

    /// Identifies an indecomposable regular module as a tube module.
    pub fn recognize(&self, m: &Representation) -> Result<Option<TubeModuleId>> {
        let d = m.dim_vector();
        let mut cands = Vec::new();
        let total: i64 = d.iter().sum();
        for (k, t) in self.exceptional.iter().enumerate() {
            for i in 0..t.rank as i64 {
                for n in 1..=total as usize {
                    let id = TubeModuleId { lambda: TubePoint::Exceptional(k), i, n };
                    if self.e_n(&id) == d {
                        cands.push(id);
                    }
                }
            }
        }
        let hs: i64 = self.h.iter().sum();
        if total % hs == 0 && d.iter().zip(&self.h).all(|(a, b)| *a == b * (total / hs)) {
            if let Some(mu) = self.homogeneous_parameter(m) {
                if !self.is_exceptional_scalar(&mu) {
                    cands.push(TubeModuleId { lambda: TubePoint::Homogeneous(mu), i: 0, n: (total / hs) as usize });
                }
            }
        }
        for id in cands {
            if iso_check(&self.tube_module(&id)?, m)? {
                return Ok(Some(id));
            }
        }
        Ok(None)
    }

    /// Composition-factor table `(point label, i) -> multiplicity` of a
    /// module in the additive closure of the regular tubes.
    pub fn s_equivalence_class(&self, m: &Representation) -> Result<BTreeMap<(String, usize), i64>> {
        let mut table = BTreeMap::new();
        for part in decompose(m)? {
            let id = self
                .recognize(&part)?
                .ok_or_else(|| Error::Parameters("summand not recognized as a tube module".into()))?;
            let r = self.rank(&id.lambda);
            for j in 0..r {
                let c = self.q_coord(&id, j as i64);
                if !c.is_zero() {
                    *table.entry((self.point_label(&id.lambda), j)).or_insert(0) += c;
                }
            }
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }
    fn kron() -> Family {
        Family::new(&CatalogId::Kronecker, q()).unwrap()
    }
    fn c2222() -> Family {
        Family::new(&CatalogId::Canonical { arms: vec![2, 2, 2, 2], lambdas: vec![q().int(2)] }, q()).unwrap()
    }
    fn hom_id(mu: i64, i: i64, n: usize) -> TubeModuleId {
        TubeModuleId { lambda: TubePoint::Homogeneous(q().int(mu)), i, n }
    }

    #[test]
    fn kronecker_family() {
        let k = kron();
        assert!(k.exceptional.is_empty());
        assert_eq!(k.h, vec![1, 1]);
        let r0 = k.tube_module(&hom_id(0, 0, 1)).unwrap();
        assert_eq!(r0.map(0), &Matrix::from_ints(q(), &[&[1]]));
        assert_eq!(r0.map(1), &Matrix::from_ints(q(), &[&[0]]));
        let r02 = k.tube_module(&hom_id(0, 0, 2)).unwrap();
        assert_eq!(r02.dims(), &[2, 2]);
        let j = Representation::new(
            k.bq.clone(),
            vec![2, 2],
            vec![Matrix::from_ints(q(), &[&[1, 0], &[0, 1]]), Matrix::from_ints(q(), &[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        assert!(iso_check(&r02, &j).unwrap());
    }

    #[test]
    fn canonical_family() {
        let c = c2222();
        assert_eq!(c.exceptional.len(), 4);
        for (k, t) in c.exceptional.iter().enumerate() {
            assert_eq!(t.rank, 2);
            let id = TubeModuleId { lambda: TubePoint::Exceptional(k), i: 0, n: 2 };
            assert_eq!(c.tube_module(&id).unwrap().dim_vector(), c.h);
            assert_eq!(is_periodic(&t.simples[0], 4).unwrap(), Some(2));
        }
        assert_eq!(c.exceptional[3].point, "2");
        let mu = q().int(3);
        let r = c.homogeneous(&mu).unwrap();
        assert!(iso_check(&tau(&r).unwrap(), &r).unwrap());
        assert!(c.homogeneous(&q().int(2)).is_err());
    }

    #[test]
    fn decompose_vector_examples() {
        let c = c2222();
        let d = c.decompose_vector(&c.h).unwrap();
        assert_eq!(d.p, 1);
        assert!(d.coords.iter().all(|v| v.iter().all(|&x| x == 0)));
        assert!(kron().decompose_vector(&[2, 3]).is_none());
        let mut d = c.h.clone();
        for (x, y) in d.iter_mut().zip(&c.exceptional[0].e[0]) {
            *x += y;
        }
        let dec = c.decompose_vector(&d).unwrap();
        assert_eq!((dec.p, dec.coords[0].clone()), (1, vec![1, 0]));
        assert!(dec.coords[1..].iter().all(|v| v.iter().all(|&x| x == 0)));
    }

    #[test]
    fn hom_formula_examples() {
        let k = kron();
        assert_eq!(k.hom_formula(&hom_id(0, 0, 1), &hom_id(1, 0, 1)), 0);
        assert_eq!(k.hom_formula(&hom_id(0, 0, 2), &hom_id(0, 0, 1)), 1);
        let c = c2222();
        let a = TubeModuleId { lambda: TubePoint::Exceptional(0), i: 0, n: 2 };
        let b = TubeModuleId { lambda: TubePoint::Exceptional(0), i: 1, n: 2 };
        assert_eq!(c.hom_formula(&a, &b), 1);
        let (ma, mb) = (c.tube_module(&a).unwrap(), c.tube_module(&b).unwrap());
        assert_eq!(hom_dim(&ma, &mb).unwrap(), 1);
    }

    #[test]
    fn euler_examples() {
        let c = c2222();
        let id = TubeModuleId { lambda: TubePoint::Exceptional(0), i: 0, n: 1 };
        assert_eq!(c.euler_tube_formula(&id, &c.h).unwrap(), (0, 0));
        let mut d = c.h.clone();
        for (x, y) in d.iter_mut().zip(&c.exceptional[0].e[0]) {
            *x += y;
        }
        assert_eq!(c.euler_tube_formula(&id, &d).unwrap().0, 1);
        let id2 = TubeModuleId { n: 2, ..id };
        assert_eq!(c.euler_tube_formula(&id2, &d).unwrap().0, 0);
    }

    #[test]
    fn trichotomy_examples() {
        let k = kron();
        let p1 = Representation::projective(k.bq.clone(), 0);
        assert_eq!(k.trichotomy(&p1).unwrap().class, Component::P);
        let s1 = Representation::simple(k.bq.clone(), 0);
        assert_eq!(k.trichotomy(&s1).unwrap().class, Component::Q);
        assert_eq!(k.trichotomy(&k.tube_module(&hom_id(5, 0, 2)).unwrap()).unwrap().class, Component::R);
    }

    #[test]
    fn s_equivalence_examples() {
        let c = c2222();
        let m = c.tube_module(&TubeModuleId { lambda: TubePoint::Exceptional(1), i: 0, n: 2 }).unwrap();
        let t = c.s_equivalence_class(&m).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[&("x2".to_string(), 0)], 1);
        assert_eq!(t[&("x2".to_string(), 1)], 1);
        let k = kron();
        let r0 = k.tube_module(&hom_id(0, 0, 1)).unwrap();
        let r1 = k.tube_module(&hom_id(1, 0, 1)).unwrap();
        let t = k.s_equivalence_class(&Representation::direct_sum(&[r0.clone(), r1]).unwrap()).unwrap();
        assert_eq!(t.len(), 2);
        let a = k.s_equivalence_class(&Representation::direct_sum(&[r0.clone(), r0.clone()]).unwrap()).unwrap();
        let b = k.s_equivalence_class(&k.tube_module(&hom_id(0, 0, 2)).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
