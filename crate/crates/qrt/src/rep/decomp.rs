use super::hom::{end_dim, hom, hom_dim, EndoTuple};
use super::random::random_scalar;
use super::resolve::tau;
use super::{same_quiver, Representation};
use crate::error::{Error, Result};
use crate::exactfield::{FieldSpec, Scalar};
use crate::linalg::{self, char_poly, roots_in_field, Matrix, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x005e_ed0f_1e11;
const RANDOM_TRIES: usize = 48;
const EXHAUSTIVE_LIMIT: u64 = 1 << 14;

/// Indecomposable summands, in the order they split off.
pub type Decomposition = Vec<Representation>;

fn compose(a: &EndoTuple, b: &EndoTuple) -> EndoTuple {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

fn shift(a: &EndoTuple, c: &Scalar) -> EndoTuple {
    a.iter().map(|x| x.sub(&Matrix::identity(x.rows(), x.field()).scale(c))).collect()
}

fn is_nilpotent(a: &EndoTuple) -> bool {
    a.iter().all(|x| x.rows() == 0 || x.pow(x.rows()).is_zero())
}

fn flatten(a: &EndoTuple) -> Vec<Scalar> {
    a.iter().flat_map(|x| x.entries().iter().cloned()).collect()
}

fn is_invertible(a: &EndoTuple) -> bool {
    a.iter().all(|x| linalg::rank(x) == x.rows())
}

fn poly_of(p: &Poly, a: &EndoTuple) -> EndoTuple {
    a.iter()
        .map(|x| {
            let f = x.field();
            let mut acc = Matrix::zeros(x.rows(), x.cols(), f);
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(x).add(&Matrix::identity(x.rows(), f).scale(c));
            }
            acc
        })
        .collect()
}

/// Scalar `c` with `a - c` nilpotent, if any.
fn scalar_part(a: &EndoTuple) -> Option<Scalar> {
    let x = a.iter().find(|x| x.rows() > 0)?;
    let roots = roots_in_field(&char_poly(x));
    if roots.len() != 1 {
        return None;
    }
    let c = roots[0].clone();
    is_nilpotent(&shift(a, &c)).then_some(c)
}

/// Certificate that `End(m)` is local: every basis element is a scalar plus
/// a nilpotent, and the nilpotent parts span a codimension-one nilpotent
/// ideal.
fn local_certificate(m: &Representation, basis: &[EndoTuple]) -> bool {
    if m.is_zero() {
        return false;
    }
    let f = m.field();
    let mut nil = Vec::with_capacity(basis.len());
    for e in basis {
        match scalar_part(e) {
            Some(c) => nil.push(shift(e, &c)),
            None => return false,
        }
    }
    let len = flatten(&basis[0]).len();
    let span_of = |v: &[EndoTuple]| -> Matrix {
        let cols: Vec<Vec<Scalar>> = v.iter().map(flatten).collect();
        Matrix::from_columns(f, len, &cols)
    };
    let nspan = linalg::column_basis(&span_of(&nil));
    if nspan.cols() + 1 != basis.len() {
        return false;
    }
    let nbasis: Vec<EndoTuple> = (0..nspan.cols()).map(|k| unflatten(m, &nspan.col(k))).collect();
    // closure under products
    let prods: Vec<EndoTuple> =
        nbasis.iter().flat_map(|a| nbasis.iter().map(move |b| compose(a, b))).collect();
    if !prods.is_empty() {
        let both = Matrix::hstack(f, len, &[&nspan, &span_of(&prods)]);
        if linalg::rank(&both) != nspan.cols() {
            return false;
        }
    }
    // nilpotency of the ideal: its powers reach zero
    let mut level = nbasis.clone();
    for _ in 0..=m.total_dim() {
        if level.is_empty() {
            return true;
        }
        let next: Vec<EndoTuple> = level.iter().flat_map(|a| nbasis.iter().map(move |b| compose(a, b))).collect();
        if next.is_empty() {
            return true;
        }
        let sp = linalg::column_basis(&span_of(&next));
        level = (0..sp.cols()).map(|k| unflatten(m, &sp.col(k))).collect();
    }
    level.is_empty()
}

fn unflatten(m: &Representation, v: &[Scalar]) -> EndoTuple {
    let f = m.field();
    let mut off = 0;
    m.dims()
        .iter()
        .map(|&d| {
            let x = Matrix::from_fn(d, d, f, |i, j| v[off + i * d + j].clone());
            off += d * d;
            x
        })
        .collect()
}

/// True iff `End(m)` is certified local (so `m` is indecomposable).
pub fn is_local(m: &Representation) -> bool {
    if m.is_zero() {
        return false;
    }
    if end_dim(m) == 1 {
        return true;
    }
    let b = hom(m, m).expect("same quiver").basis;
    local_certificate(m, &b)
}

/// Fitting splitting of `m` along `y`: generalized kernel and image of `y`.
fn fitting_split(m: &Representation, y: &EndoTuple) -> Option<(Representation, Representation)> {
    let n = m.dims().iter().copied().max().unwrap_or(0);
    let yn: EndoTuple = y.iter().map(|x| x.pow(n)).collect();
    let ker: Vec<Matrix> = yn.iter().map(linalg::kernel_basis).collect();
    let img: Vec<Matrix> = yn.iter().map(linalg::column_basis).collect();
    let kd: usize = ker.iter().map(|k| k.cols()).sum();
    if kd == 0 || kd == m.total_dim() {
        return None;
    }
    Some((m.restrict(&ker).ok()?, m.restrict(&img).ok()?))
}

fn quadratic_factors(field: FieldSpec, chi: &Poly) -> Vec<Poly> {
    let FieldSpec::Prime(p) = field else { return vec![] };
    if p > 64 {
        return vec![];
    }
    let mut out = Vec::new();
    for a in 0..p as i64 {
        for b in 0..p as i64 {
            let g = Poly::new(field, vec![field.int(b), field.int(a), field.one()]);
            if !roots_in_field(&g).is_empty() {
                continue;
            }
            if chi.divrem(&g).map(|(_, r)| r.is_zero()).unwrap_or(false) {
                out.push(g);
            }
        }
    }
    out
}

fn try_split(m: &Representation, x: &EndoTuple) -> Option<(Representation, Representation)> {
    let f = m.field();
    let mut chi = Poly::constant(f.one());
    for v in x {
        if v.rows() > 0 {
            chi = chi.mul(&char_poly(v));
        }
    }
    for c in roots_in_field(&chi) {
        if let Some(s) = fitting_split(m, &shift(x, &c)) {
            return Some(s);
        }
    }
    for g in quadratic_factors(f, &chi) {
        if let Some(s) = fitting_split(m, &poly_of(&g, x)) {
            return Some(s);
        }
    }
    None
}

fn split(m: &Representation, rng: &mut ChaCha8Rng) -> Result<Option<(Representation, Representation)>> {
    let hb = hom(m, m)?;
    if hb.dim() <= 1 {
        return Ok(None);
    }
    if local_certificate(m, &hb.basis) {
        return Ok(None);
    }
    for e in &hb.basis {
        if let Some(s) = try_split(m, e) {
            return Ok(Some(s));
        }
    }
    let f = m.field();
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..hb.dim()).map(|_| random_scalar(f, rng, 7)).collect();
        let x = hb.combine(&coeffs, m, m);
        if let Some(s) = try_split(m, &x) {
            return Ok(Some(s));
        }
    }
    for a in &hb.basis {
        for b in &hb.basis {
            if let Some(s) = try_split(m, &compose(a, b)) {
                return Ok(Some(s));
            }
        }
    }
    Err(Error::Inconclusive(format!(
        "no splitting found and End (dim {}) not certified local over {}",
        hb.dim(),
        f
    )))
}

/// Splits `m` into indecomposable summands, each with a certified local
/// endomorphism ring.
pub fn decompose(m: &Representation) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(r) = stack.pop() {
        if r.is_zero() {
            continue;
        }
        match split(&r, &mut rng)? {
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
            None => out.push(r),
        }
    }
    Ok(out)
}

/// Isomorphism of two modules with local endomorphism rings.
fn indecomposables_isomorphic(a: &Representation, b: &Representation) -> Result<bool> {
    if a.dims() != b.dims() {
        return Ok(false);
    }
    let f = hom(a, b)?;
    let g = hom(b, a)?;
    for x in &f.basis {
        for y in &g.basis {
            if !is_nilpotent(&compose(y, x)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn for_each_combination(field: FieldSpec, k: usize, mut f: impl FnMut(&[Scalar]) -> bool) -> bool {
    let q = field.size().unwrap();
    let mut digits = vec![0u64; k];
    loop {
        let c: Vec<Scalar> = digits.iter().map(|&d| field.element(d)).collect();
        if f(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Decides `m ~ n` exactly, or reports an inconclusive decomposition.
pub fn iso_check(m: &Representation, n: &Representation) -> Result<bool> {
    if !same_quiver(m.bq(), n.bq()) {
        return Err(Error::Parameters("iso_check across different bound quivers".into()));
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let h = hom(m, n)?;
    let k = h.dim();
    if k == 0 || hom_dim(n, m)? != k || end_dim(m) != k || end_dim(n) != k {
        return Ok(false);
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..16 {
        let coeffs: Vec<Scalar> = (0..k).map(|_| random_scalar(f, &mut rng, 1000)).collect();
        if is_invertible(&h.combine(&coeffs, m, n)) {
            return Ok(true);
        }
    }
    if let Some(q) = f.size() {
        if (q as f64).powi(k as i32) <= EXHAUSTIVE_LIMIT as f64 {
            return Ok(for_each_combination(f, k, |c| is_invertible(&h.combine(c, m, n))));
        }
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for a in &dm {
        let mut found = false;
        for (j, b) in dn.iter().enumerate() {
            if !used[j] && indecomposables_isomorphic(a, b)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `n <= bound` with `tau^n m ~ m`.
pub fn is_periodic(m: &Representation, bound: usize) -> Result<Option<usize>> {
    let mut cur = m.clone();
    for n in 1..=bound {
        cur = tau(&cur)?;
        if cur.is_zero() {
            return Ok(None);
        }
        if iso_check(&cur, m)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
