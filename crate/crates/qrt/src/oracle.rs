//! Brute force over tiny prime fields: point counts of representation
//! varieties, orbit census, and searches for indecomposables.
//!
//! Points of `rep(d)(F_q)` are indexed by integers whose little-endian base
//! `q` digits are the matrix entries, arrow by arrow, each matrix row-major.

use crate::error::{Error, Result};
use crate::exactfield::FieldSpec;
use crate::forms::TitsForm;
use crate::linalg::{self, Matrix};
use crate::par::{self, Exec};
use crate::quiver::BoundQuiver;
use crate::rep::{hom, is_local, is_periodic, Representation};
use crate::tubes::{Component, Family};
use std::collections::HashMap;
use std::sync::Arc;

pub const DEFAULT_MAX_POINTS: u128 = 100_000_000;
pub const SUPPORTED_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Ceiling on enumerated points (and group elements).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_points: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_points: DEFAULT_MAX_POINTS }
    }
}

impl Budget {
    /// Default budget, overridden by `QRT_BUDGET` when set.
    pub fn from_env() -> Result<Budget> {
        match std::env::var("QRT_BUDGET") {
            Ok(v) => v
                .trim()
                .parse::<u128>()
                .map(|max_points| Budget { max_points })
                .map_err(|_| Error::Usage(format!("QRT_BUDGET={v:?} is not a count"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    fn check(&self, what: &str, n: u128) -> Result<()> {
        if n > self.max_points {
            return Err(Error::Budget(format!("{what}: {n} exceeds the budget {}", self.max_points)));
        }
        Ok(())
    }
}

type RawRelation = (usize, usize, Vec<(u64, Vec<usize>)>);

/// Matrix tuples as flat residue vectors.
struct Raw {
    p: u64,
    dims: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    ambient: usize,
    rels: Vec<RawRelation>,
}

fn matmul(a: &[u64], ar: usize, ac: usize, b: &[u64], bc: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; ar * bc];
    for i in 0..ar {
        for k in 0..ac {
            let x = a[i * ac + k];
            if x == 0 {
                continue;
            }
            for j in 0..bc {
                out[i * bc + j] = (out[i * bc + j] + x * b[k * bc + j]) % p;
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl Raw {
    fn new(bq: &BoundQuiver, d: &[i64]) -> Result<Raw> {
        let p = match bq.field() {
            FieldSpec::Prime(p) if SUPPORTED_PRIMES.contains(&(p as u64)) => p as u64,
            f => return Err(Error::Field(format!("enumeration needs q in {{2,3,5,7}}, got {f}"))),
        };
        if d.len() != bq.n_vertices() || d.iter().any(|&x| x < 0) {
            return Err(Error::Shape("dimension vector does not match the quiver".into()));
        }
        let dims: Vec<usize> = d.iter().map(|&x| x as usize).collect();
        let arrows: Vec<(usize, usize)> = bq.quiver().arrows().iter().map(|a| (a.from, a.to)).collect();
        let mut offsets = Vec::new();
        let mut ambient = 0;
        for &(s, t) in &arrows {
            offsets.push(ambient);
            ambient += dims[s] * dims[t];
        }
        let rels = bq
            .relations()
            .iter()
            .map(|r| {
                let terms = r.terms.iter().map(|(c, path)| (c.residue() as u64, path.arrows.clone())).collect();
                (r.source, r.target, terms)
            })
            .collect();
        Ok(Raw { p, dims, arrows, offsets, ambient, rels })
    }

    fn total(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.ambient as u32)
    }

    fn decode(&self, mut k: u128, out: &mut [u64]) {
        let q = self.p as u128;
        for e in out.iter_mut() {
            *e = (k % q) as u64;
            k /= q;
        }
    }

    fn encode(&self, e: &[u64]) -> u128 {
        e.iter().rev().fold(0u128, |acc, &x| acc * self.p as u128 + x as u128)
    }

    fn block<'a>(&self, e: &'a [u64], a: usize) -> &'a [u64] {
        let (s, t) = self.arrows[a];
        &e[self.offsets[a]..self.offsets[a] + self.dims[s] * self.dims[t]]
    }

    fn valid(&self, e: &[u64]) -> bool {
        for (s, t, terms) in &self.rels {
            let (ds, dt) = (self.dims[*s], self.dims[*t]);
            if ds == 0 || dt == 0 {
                continue;
            }
            let mut acc = vec![0u64; dt * ds];
            for (c, path) in terms {
                if *c == 0 {
                    continue;
                }
                let mut m = identity(ds);
                let mut rows = ds;
                for &a in path.iter().rev() {
                    let (_, to) = self.arrows[a];
                    m = matmul(self.block(e, a), self.dims[to], rows, &m, ds, self.p);
                    rows = self.dims[to];
                }
                for (x, y) in acc.iter_mut().zip(&m) {
                    *x = (*x + c * y) % self.p;
                }
            }
            if acc.iter().any(|&x| x != 0) {
                return false;
            }
        }
        true
    }

    fn to_rep(&self, bq: &Arc<BoundQuiver>, e: &[u64]) -> Representation {
        let f = bq.field();
        let maps = (0..self.arrows.len())
            .map(|a| {
                let (s, t) = self.arrows[a];
                let b = self.block(e, a);
                Matrix::from_fn(self.dims[t], self.dims[s], f, |i, j| f.int(b[i * self.dims[s] + j] as i64))
            })
            .collect();
        Representation::new(bq.clone(), self.dims.clone(), maps).expect("shapes")
    }

    /// `g . e` for `g` acting at vertex `x` only.
    fn act(&self, e: &[u64], x: usize, g: &[u64], ginv: &[u64]) -> Vec<u64> {
        let n = self.dims[x];
        let mut out = e.to_vec();
        for a in 0..self.arrows.len() {
            let (s, t) = self.arrows[a];
            let (r, c) = (self.dims[t], self.dims[s]);
            if r * c == 0 || (s != x && t != x) {
                continue;
            }
            let mut m = self.block(e, a).to_vec();
            if t == x {
                m = matmul(g, n, n, &m, c, self.p);
            }
            if s == x {
                m = matmul(&m, r, n, ginv, n, self.p);
            }
            out[self.offsets[a]..self.offsets[a] + r * c].copy_from_slice(&m);
        }
        out
    }

    /// Generators of `GL(d, F_p)`, one vertex at a time, with inverses.
    fn generators(&self) -> Vec<(usize, Vec<u64>, Vec<u64>)> {
        let p = self.p;
        let omega = (1..p).find(|&w| (1..p - 1).all(|k| pow_mod(w, k, p) != 1)).unwrap_or(1);
        let omega_inv = pow_mod(omega, p - 2, p);
        let mut out = Vec::new();
        for (x, &n) in self.dims.iter().enumerate() {
            for i in 0..n {
                if p > 2 {
                    let (mut g, mut gi) = (identity(n), identity(n));
                    g[i * n + i] = omega;
                    gi[i * n + i] = omega_inv;
                    out.push((x, g, gi));
                }
                for j in 0..n {
                    if i != j {
                        let (mut g, mut gi) = (identity(n), identity(n));
                        g[i * n + j] = 1;
                        gi[i * n + j] = p - 1;
                        out.push((x, g, gi));
                    }
                }
            }
        }
        out
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn chunks(start: u128, end: u128) -> Vec<(u128, u128)> {
    let n = end.saturating_sub(start);
    let parts = n.clamp(1, 256);
    let step = n.div_ceil(parts).max(1);
    let mut out = Vec::new();
    let mut s = start;
    while s < end {
        out.push((s, (s + step).min(end)));
        s += step;
    }
    out
}

/// Result of an exhaustive point count.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCount {
    pub q: u64,
    pub ambient: usize,
    /// Points in the scanned range.
    pub total: u128,
    pub valid: u128,
    pub start: u128,
    /// Cursor to resume from, if the range stopped short of the end.
    pub next: Option<u128>,
    pub a_const: i64,
    /// `valid / q^{a(d)}`; meaningful for complete scans only.
    pub ratio: f64,
    /// Heuristic window: the ratio lies in `[1/4, 4]`.
    pub within_window: bool,
}

fn finish_count(bq: &BoundQuiver, d: &[i64], raw: &Raw, start: u128, end: u128, valid: u128) -> PointCount {
    let a = TitsForm::new(bq).a_const(d);
    let ratio = valid as f64 / (raw.p as f64).powi(a as i32);
    let full = raw.total().unwrap_or(u128::MAX);
    PointCount {
        q: raw.p,
        ambient: raw.ambient,
        total: end - start,
        valid,
        start,
        next: (end < full).then_some(end),
        a_const: a,
        ratio,
        within_window: (0.25..=4.0).contains(&ratio),
    }
}

fn count_range(raw: &Raw, start: u128, end: u128, mode: Exec) -> u128 {
    let parts = chunks(start, end);
    par::map_with(mode, &parts, |&(s, e)| {
        let mut buf = vec![0u64; raw.ambient];
        let mut c = 0u128;
        for k in s..e {
            raw.decode(k, &mut buf);
            if raw.valid(&buf) {
                c += 1;
            }
        }
        c
    })
    .into_iter()
    .sum()
}

/// Exhaustive count of `rep(d)(F_q)`.
pub fn count_points(bq: &BoundQuiver, d: &[i64], budget: Budget, mode: Exec) -> Result<PointCount> {
    let raw = Raw::new(bq, d)?;
    let total = raw.total().ok_or_else(|| Error::Budget("ambient space too large".into()))?;
    budget.check("points", total)?;
    let valid = count_range(&raw, 0, total, mode);
    Ok(finish_count(bq, d, &raw, 0, total, valid))
}

/// Counts at most `budget` points starting at cursor `start`.
pub fn count_points_from(bq: &BoundQuiver, d: &[i64], start: u128, budget: Budget, mode: Exec) -> Result<PointCount> {
    let raw = Raw::new(bq, d)?;
    let total = raw.total().ok_or_else(|| Error::Budget("ambient space too large".into()))?;
    if start > total {
        return Err(Error::Usage(format!("cursor {start} beyond the {total} points")));
    }
    let end = total.min(start.saturating_add(budget.max_points));
    let valid = count_range(&raw, start, end, mode);
    Ok(finish_count(bq, d, &raw, start, end, valid))
}

fn valid_points(raw: &Raw, total: u128, mode: Exec) -> Vec<u128> {
    let parts = chunks(0, total);
    par::map_with(mode, &parts, |&(s, e)| {
        let mut buf = vec![0u64; raw.ambient];
        (s..e)
            .filter(|&k| {
                raw.decode(k, &mut buf);
                raw.valid(&buf)
            })
            .collect::<Vec<u128>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A `GL(d)`-orbit: its size and the point of least index.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub size: u128,
    pub index: u128,
    pub representative: Representation,
}

/// Partition of `rep(d)(F_q)` into orbits, by union-find over generators of
/// `GL(d, F_q)`; orbits sorted by representative index.
pub fn orbits(bq: &Arc<BoundQuiver>, d: &[i64], budget: Budget, mode: Exec) -> Result<Vec<Orbit>> {
    let raw = Raw::new(bq, d)?;
    let total = raw.total().ok_or_else(|| Error::Budget("ambient space too large".into()))?;
    budget.check("points", total)?;
    let pts = valid_points(&raw, total, mode);
    let gens = raw.generators();
    budget.check("group moves", pts.len() as u128 * gens.len().max(1) as u128)?;
    let pos: HashMap<u128, usize> = pts.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let edges: Vec<Vec<usize>> = par::map_with(mode, &pts, |&k| {
        let mut e = vec![0u64; raw.ambient];
        raw.decode(k, &mut e);
        gens.iter()
            .map(|(x, g, gi)| {
                let img = raw.encode(&raw.act(&e, *x, g, gi));
                *pos.get(&img).expect("the group preserves the variety")
            })
            .collect()
    });
    let mut parent: Vec<usize> = (0..pts.len()).collect();
    for (i, nbrs) in edges.iter().enumerate() {
        for &j in nbrs {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut sizes: HashMap<usize, u128> = HashMap::new();
    for i in 0..pts.len() {
        *sizes.entry(find(&mut parent, i)).or_insert(0) += 1;
    }
    let mut roots: Vec<usize> = sizes.keys().copied().collect();
    roots.sort_unstable();
    let mut buf = vec![0u64; raw.ambient];
    Ok(roots
        .into_iter()
        .map(|r| {
            raw.decode(pts[r], &mut buf);
            Orbit { size: sizes[&r], index: pts[r], representative: raw.to_rep(bq, &buf) }
        })
        .collect())
}

/// `|GL(d, F_q)|`.
pub fn gl_order(d: &[i64], q: u64) -> u128 {
    let q = q as u128;
    d.iter()
        .map(|&n| {
            let n = n as u32;
            (0..n).map(|i| q.pow(n) - q.pow(i)).product::<u128>()
        })
        .product()
}

/// `|Aut(M)(F_q)|` by enumerating `End(M)`.
pub fn aut_count(m: &Representation, budget: Budget) -> Result<u128> {
    let q = m.field().size().ok_or_else(|| Error::Field("finite field required".into()))? as u128;
    let hb = hom(m, m)?;
    let e = hb.dim() as u32;
    let total = q.checked_pow(e).ok_or_else(|| Error::Budget("End too large".into()))?;
    budget.check("endomorphisms", total)?;
    let f = m.field();
    let mut count = 0u128;
    for k in 0..total {
        let mut c = Vec::with_capacity(e as usize);
        let mut r = k;
        for _ in 0..e {
            c.push(f.int((r % q) as i64));
            r /= q;
        }
        let t = hb.combine(&c, m, m);
        if t.iter().all(|g| g.rows() == 0 || !linalg::det(g).map(|x| x.is_zero()).unwrap_or(true)) {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub orbit: Orbit,
    pub aut: u128,
    /// `size * |Aut| = |GL(d)|`.
    pub stabilizer_ok: bool,
}

#[derive(Debug, Clone)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    pub gl_order: u128,
    pub valid: u128,
}

pub fn orbit_census(bq: &Arc<BoundQuiver>, d: &[i64], budget: Budget, mode: Exec) -> Result<Census> {
    let orbs = orbits(bq, d, budget, mode)?;
    let q = bq.field().size().unwrap();
    let gl = gl_order(d, q);
    let entries: Vec<Result<CensusEntry>> = par::map_with(mode, &orbs, |o| {
        let aut = aut_count(&o.representative, budget)?;
        Ok(CensusEntry { orbit: o.clone(), aut, stabilizer_ok: o.size * aut == gl })
    });
    let entries = entries.into_iter().collect::<Result<Vec<_>>>()?;
    let valid = entries.iter().map(|e| e.orbit.size).sum();
    Ok(Census { entries, gl_order: gl, valid })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Any,
    /// Minimal `tau`-period equal to the given value.
    Periodic(usize),
    Class(Component),
}

impl Predicate {
    pub fn parse(s: &str) -> Result<Predicate> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "none" | "any" => Ok(Predicate::Any),
            "p" => Ok(Predicate::Class(Component::P)),
            "r" => Ok(Predicate::Class(Component::R)),
            "q" => Ok(Predicate::Class(Component::Q)),
            _ => s
                .strip_prefix("periodic:")
                .and_then(|n| n.parse().ok())
                .filter(|&n: &usize| n >= 1)
                .map(Predicate::Periodic)
                .ok_or_else(|| Error::Usage(format!("unknown predicate {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// One indecomposable per isomorphism class, by orbit index.
    pub found: Vec<Representation>,
    pub orbits: usize,
    pub valid: u128,
    pub searched: u128,
}

/// All indecomposables of dimension `d` over `F_q` satisfying `pred`, up to
/// isomorphism. Orbits are isomorphism classes, so one representative per
/// orbit suffices.
pub fn search_indecomposable(
    bq: &Arc<BoundQuiver>,
    d: &[i64],
    pred: &Predicate,
    fam: Option<&Family>,
    budget: Budget,
    mode: Exec,
) -> Result<SearchResult> {
    if matches!(pred, Predicate::Class(_)) && fam.is_none() {
        return Err(Error::Usage("classification needs a family".into()));
    }
    let orbs = orbits(bq, d, budget, mode)?;
    let valid = orbs.iter().map(|o| o.size).sum();
    let keep: Vec<Result<bool>> = par::map_with(mode, &orbs, |o| {
        let m = &o.representative;
        if m.is_zero() || !is_local(m) {
            return Ok(false);
        }
        Ok(match pred {
            Predicate::Any => true,
            Predicate::Periodic(n) => is_periodic(m, *n)? == Some(*n),
            Predicate::Class(c) => fam.unwrap().trichotomy(m)?.class == *c,
        })
    });
    let mut found = Vec::new();
    for (o, k) in orbs.iter().zip(keep) {
        if k? {
            found.push(o.representative.clone());
        }
    }
    let raw = Raw::new(bq, d)?;
    Ok(SearchResult { found, orbits: orbs.len(), valid, searched: raw.total().unwrap() })
}

/// Every indecomposable with entries at most `bound` (nonzero dimension
/// vectors in lexicographic order).
pub fn harvest(bq: &Arc<BoundQuiver>, bound: i64, budget: Budget, mode: Exec) -> Result<Vec<Representation>> {
    let form = TitsForm::new(bq);
    let mut out = Vec::new();
    for d in form.box_vectors(bound) {
        if d.iter().all(|&x| x == 0) {
            continue;
        }
        out.extend(search_indecomposable(bq, &d, &Predicate::Any, None, budget, mode)?.found);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{catalog, catalog_degenerate, CatalogId};
    use crate::rep::iso_check;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }
    fn kron(p: u64) -> Arc<BoundQuiver> {
        catalog(&CatalogId::Kronecker, f(p)).unwrap().0
    }
    fn c2222(p: u64) -> Arc<BoundQuiver> {
        let id = CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![f(p).int(2)] };
        if p == 2 {
            catalog_degenerate(&id, f(p)).unwrap().0
        } else {
            catalog(&id, f(p)).unwrap().0
        }
    }
    const B: Budget = Budget { max_points: DEFAULT_MAX_POINTS };

    #[test]
    fn count_examples() {
        let k = kron(3);
        let c = count_points(&k, &[2, 2], B, Exec::default_mode()).unwrap();
        assert_eq!((c.total, c.valid), (3u128.pow(8), 3u128.pow(8)));
        let c = count_points(&c2222(3), &[0; 6], B, Exec::Sequential).unwrap();
        assert_eq!(c.valid, 1);
        let h = count_points(&c2222(3), &[1; 6], B, Exec::Sequential).unwrap();
        let hp = count_points(&c2222(3), &[1; 6], B, Exec::Parallel).unwrap();
        assert_eq!(h, hp);
        assert!(h.within_window, "{h:?}");
        assert!(count_points(&k, &[3, 3], Budget { max_points: 1000 }, Exec::Sequential).is_err());
        assert!(count_points(&kron(11), &[1, 1], B, Exec::Sequential).is_err());
        // resumable ranges add up
        let a = count_points_from(&c2222(3), &[1; 6], 0, Budget { max_points: 4000 }, Exec::Sequential).unwrap();
        let b = count_points_from(&c2222(3), &[1; 6], a.next.unwrap(), B, Exec::Sequential).unwrap();
        assert_eq!(a.valid + b.valid, h.valid);
        assert_eq!(b.next, None);
    }

    #[test]
    fn census_examples() {
        let k = kron(2);
        let cen = orbit_census(&k, &[1, 1], B, Exec::default_mode()).unwrap();
        assert_eq!(cen.entries.len(), 4);
        assert!(cen.entries.iter().all(|e| e.orbit.size == 1 && e.stabilizer_ok));
        let s = orbit_census(&k, &[1, 0], B, Exec::Sequential).unwrap();
        assert_eq!(s.entries.len(), 1);
        for (bq, d) in [(kron(2), vec![2, 2]), (kron(3), vec![1, 2]), (c2222(3), vec![1; 6])] {
            let cen = orbit_census(&bq, &d, B, Exec::default_mode()).unwrap();
            assert_eq!(cen.valid, count_points(&bq, &d, B, Exec::Sequential).unwrap().valid);
            assert!(cen.entries.iter().all(|e| e.stabilizer_ok));
        }
    }

    #[test]
    fn search_examples() {
        let k = kron(2);
        let r = search_indecomposable(&k, &[1, 1], &Predicate::Any, None, B, Exec::Sequential).unwrap();
        assert_eq!(r.found.len(), 3);
        let r = search_indecomposable(&k, &[2, 1], &Predicate::Any, None, B, Exec::Sequential).unwrap();
        assert_eq!(r.found.len(), 1);
        let d = [2, 1, 1, 1, 1, 0];
        let r3 = search_indecomposable(&c2222(3), &d, &Predicate::Any, None, B, Exec::default_mode()).unwrap();
        assert!(!r3.found.is_empty());
        for m in &r3.found {
            assert!(m.validate() && is_local(m));
        }
        // four pairwise distinct lines exist over F_3
        let distinct = |m: &Representation| {
            let lines: Vec<Matrix> = (0..4).map(|i| m.map(2 * i).clone()).collect();
            (0..4).all(|i| (0..i).all(|j| linalg::rank(&Matrix::hstack(m.field(), 2, &[&lines[i], &lines[j]])) == 2))
        };
        assert!(r3.found.iter().any(distinct));
        // over F_2 only non-generic configurations remain
        let r2 = search_indecomposable(&c2222(2), &d, &Predicate::Any, None, B, Exec::default_mode()).unwrap();
        assert!(!r2.found.is_empty());
        assert!(!r2.found.iter().any(distinct));
        for (i, a) in r3.found.iter().enumerate() {
            for b in &r3.found[..i] {
                assert!(!iso_check(a, b).unwrap());
            }
        }
    }

    #[test]
    fn predicate_parsing() {
        assert_eq!(Predicate::parse("periodic:2").unwrap(), Predicate::Periodic(2));
        assert_eq!(Predicate::parse("P").unwrap(), Predicate::Class(Component::P));
        assert!(Predicate::parse("periodic:0").is_err());
        assert!(Predicate::parse("foo").is_err());
    }

    #[test]
    fn gl_order_examples() {
        assert_eq!(gl_order(&[2], 2), 6);
        assert_eq!(gl_order(&[1, 1], 3), 4);
        assert_eq!(gl_order(&[0], 5), 1);
    }
}
