//! Quivers, paths, relations and the morphism spaces of the bound path
//! category, plus a catalog of Euclidean and canonical bound quivers.
//!
//! A path is stored as `[a_1, ..., a_n]` with `a_n` applied first, so
//! `s(path) = s(a_n)` and `t(path) = t(a_1)`; a representation evaluates it
//! as `M(a_1) ... M(a_n)`.

use crate::error::{Error, Result};
use crate::exactfield::{parse_scalar, FieldSpec, Scalar};
use crate::linalg::{rref, Matrix};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Vertex-indexed integer vector, in the quiver's vertex order.
pub type DimVector = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vindex: HashMap<String, usize>,
    aindex: HashMap<String, usize>,
}

fn check_name(kind: &str, s: &str) -> Result<()> {
    if s.is_empty() || !s.is_ascii() || s.chars().any(|c| c.is_whitespace()) {
        return Err(Error::Quiver(format!("invalid {kind} name {s:?}")));
    }
    Ok(())
}

impl Quiver {
    /// `arrows` are `(name, from, to)` triples of vertex names.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut vindex = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            check_name("vertex", v)?;
            if vindex.insert(v.clone(), i).is_some() {
                return Err(Error::Quiver(format!("duplicate vertex {v}")));
            }
        }
        let mut aindex = HashMap::new();
        let mut arr = Vec::new();
        for (i, (name, from, to)) in arrows.into_iter().enumerate() {
            check_name("arrow", &name)?;
            let f = *vindex.get(&from).ok_or_else(|| Error::Quiver(format!("arrow {name}: unknown vertex {from}")))?;
            let t = *vindex.get(&to).ok_or_else(|| Error::Quiver(format!("arrow {name}: unknown vertex {to}")))?;
            if aindex.insert(name.clone(), i).is_some() {
                return Err(Error::Quiver(format!("duplicate arrow {name}")));
            }
            arr.push(Arrow { name, from: f, to: t });
        }
        let q = Quiver { vertices, arrows: arr, vindex, aindex };
        if q.topological_order().is_none() {
            return Err(Error::Quiver("the quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }
    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vindex.get(name).copied().ok_or_else(|| Error::Quiver(format!("unknown vertex {name}")))
    }
    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.aindex.get(name).copied().ok_or_else(|| Error::Quiver(format!("unknown arrow {name}")))
    }

    /// Kahn's algorithm; `None` iff there is an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            out.push(v);
            for a in &self.arrows {
                if a.from == v {
                    indeg[a.to] -= 1;
                    if indeg[a.to] == 0 {
                        ready.push(a.to);
                    }
                }
            }
        }
        (out.len() == n).then_some(out)
    }

    /// Every path from `x` to `y`, sorted lexicographically by arrow names.
    pub fn all_paths(&self, x: usize, y: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path::trivial(x)];
        while let Some(p) = stack.pop() {
            if p.target == y {
                out.push(p.clone());
            }
            for (i, a) in self.arrows.iter().enumerate() {
                if a.from == p.target {
                    let mut arrows = vec![i];
                    arrows.extend_from_slice(&p.arrows);
                    stack.push(Path { source: x, target: a.to, arrows });
                }
            }
        }
        out.sort_by(|a, b| self.path_names(a).cmp(&self.path_names(b)));
        out
    }

    pub fn path_names(&self, p: &Path) -> Vec<&str> {
        p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect()
    }

    /// Builds a path from arrow names, checking composability.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        if names.is_empty() {
            return Err(Error::Quiver("use Path::trivial for trivial paths".into()));
        }
        let arrows: Vec<usize> = names.iter().map(|n| self.arrow_index(n)).collect::<Result<_>>()?;
        for w in arrows.windows(2) {
            if self.arrows[w[0]].from != self.arrows[w[1]].to {
                return Err(Error::Quiver(format!(
                    "{} cannot follow {}",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        Ok(Path {
            source: self.arrows[*arrows.last().unwrap()].from,
            target: self.arrows[arrows[0]].to,
            arrows,
        })
    }

    pub fn opposite(&self) -> Quiver {
        Quiver::new(
            self.vertices.clone(),
            self.arrows
                .iter()
                .map(|a| (a.name.clone(), self.vertices[a.to].clone(), self.vertices[a.from].clone()))
                .collect(),
        )
        .expect("opposite of an acyclic quiver is acyclic")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    /// `[a_1, ..., a_n]`, `a_n` applied first.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(x: usize) -> Self {
        Path { source: x, target: x, arrows: vec![] }
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    /// `self` after `first`: requires `first.target == self.source`.
    pub fn after(&self, first: &Path) -> Path {
        assert_eq!(first.target, self.source, "paths not composable");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&first.arrows);
        Path { source: first.source, target: self.target, arrows }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Result<Self> {
        let first = terms.first().ok_or_else(|| Error::Quiver("empty relation".into()))?;
        let (s, t) = (first.1.source, first.1.target);
        for (_, p) in &terms {
            if p.source != s || p.target != t {
                return Err(Error::Quiver("relation terms have different endpoints".into()));
            }
            if p.len() < 2 {
                return Err(Error::Quiver("relation term of length below 2".into()));
            }
        }
        Ok(Relation { source: s, target: t, terms })
    }
}

/// `k`-basis of the morphism space from `source` to `target` in the bound
/// path category. Basis elements are classes of single paths: the
/// lexicographically earliest paths independent modulo the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismSpace {
    pub source: usize,
    pub target: usize,
    /// All paths from source to target, in lexicographic order.
    pub paths: Vec<Path>,
    /// Indices into `paths` of the basis representatives.
    pub basis: Vec<usize>,
    /// `dim x |paths|`: column `j` gives the class of `paths[j]` in the basis.
    pub reduce: Matrix,
    pub ideal_dim: usize,
    index: HashMap<Vec<usize>, usize>,
}

impl MorphismSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis_path(&self, i: usize) -> &Path {
        &self.paths[self.basis[i]]
    }
    /// Coordinates of the class of a single path.
    pub fn coords_of_path(&self, p: &Path) -> Vec<Scalar> {
        let j = self.index[&p.arrows];
        self.reduce.col(j)
    }
    fn path_position(&self, p: &Path) -> Option<usize> {
        self.index.get(&p.arrows).copied()
    }
}

#[derive(Debug, Clone)]
pub struct BoundQuiver {
    quiver: Quiver,
    relations: Vec<Relation>,
    field: FieldSpec,
    spaces: Vec<MorphismSpace>,
    op_cache: OnceLock<Arc<BoundQuiver>>,
}

impl PartialEq for BoundQuiver {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.quiver == o.quiver && self.relations == o.relations
    }
}
impl Eq for BoundQuiver {}

/// Coordinate vector of `p . rho . q` spanning the ideal in one space.
fn ideal_vectors(
    q: &Quiver,
    rels: &[&Relation],
    x: usize,
    y: usize,
    paths: &[Path],
    index: &HashMap<Vec<usize>, usize>,
    field: FieldSpec,
) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for rho in rels {
        let pre = q.all_paths(x, rho.source);
        let post = q.all_paths(rho.target, y);
        for a in &pre {
            for b in &post {
                let mut v = vec![field.zero(); paths.len()];
                for (c, p) in &rho.terms {
                    let full = b.after(&p.after(a));
                    let j = index[&full.arrows];
                    v[j] = &v[j] + c;
                }
                out.push(v);
            }
        }
    }
    out
}

fn ideal_rank(q: &Quiver, rels: &[&Relation], x: usize, y: usize, field: FieldSpec) -> usize {
    let paths = q.all_paths(x, y);
    let index: HashMap<Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p.arrows.clone(), i)).collect();
    let vecs = ideal_vectors(q, rels, x, y, &paths, &index, field);
    if vecs.is_empty() {
        return 0;
    }
    crate::linalg::rank(&Matrix::from_rows(field, paths.len(), vecs))
}

fn build_space(q: &Quiver, rels: &[&Relation], x: usize, y: usize, field: FieldSpec) -> MorphismSpace {
    let paths = q.all_paths(x, y);
    let n = paths.len();
    let index: HashMap<Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p.arrows.clone(), i)).collect();
    let vecs = ideal_vectors(q, rels, x, y, &paths, &index, field);
    // reversed columns: pivots fall on lexicographically late paths
    let rev: Vec<Vec<Scalar>> = vecs.iter().map(|v| v.iter().rev().cloned().collect()).collect();
    let (r, piv_rev) = rref(&Matrix::from_rows(field, n, rev));
    let pivots: Vec<usize> = piv_rev.iter().map(|&c| n - 1 - c).collect();
    let basis: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &j)| (j, i)).collect();
    let mut reduce = Matrix::zeros(basis.len(), n, field);
    for (k, &j) in basis.iter().enumerate() {
        reduce.set(k, j, field.one());
    }
    for (row, &pj) in pivots.iter().enumerate() {
        for &bj in &basis {
            let c = r.get(row, n - 1 - bj);
            if !c.is_zero() {
                reduce.set(pos[&bj], pj, -c);
            }
        }
    }
    MorphismSpace { source: x, target: y, paths, basis, reduce, ideal_dim: pivots.len(), index }
}

impl BoundQuiver {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, field: FieldSpec) -> Result<Self> {
        for r in &relations {
            for (c, p) in &r.terms {
                if c.field() != field {
                    return Err(Error::Field("relation coefficient from another field".into()));
                }
                for w in p.arrows.windows(2) {
                    if quiver.arrows[w[0]].from != quiver.arrows[w[1]].to {
                        return Err(Error::Quiver("relation path not composable".into()));
                    }
                }
            }
        }
        let n = quiver.n_vertices();
        let rels: Vec<&Relation> = relations.iter().collect();
        let spaces = crate::par::map_range(n * n, |k| build_space(&quiver, &rels, k / n, k % n, field));
        Ok(BoundQuiver { quiver, relations, field, spaces, op_cache: OnceLock::new() })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }
    pub fn n_arrows(&self) -> usize {
        self.quiver.n_arrows()
    }
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.quiver.vertex(name)
    }

    /// The morphism space from `x` to `y`.
    pub fn space(&self, x: usize, y: usize) -> &MorphismSpace {
        &self.spaces[x * self.n_vertices() + y]
    }

    /// Coordinates (in the basis of `space(x,z)`) of `v . u` for
    /// `u` in `space(x,y)`, `v` in `space(y,z)`.
    pub fn compose(&self, x: usize, y: usize, z: usize, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let (sxy, syz, sxz) = (self.space(x, y), self.space(y, z), self.space(x, z));
        let mut acc = vec![self.field.zero(); sxz.dim()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let p = syz.basis_path(j).after(sxy.basis_path(i));
                let col = sxz.path_position(&p).expect("composite path listed");
                let c = ui * vj;
                for (k, a) in acc.iter_mut().enumerate() {
                    let r = sxz.reduce.get(k, col);
                    if !r.is_zero() {
                        *a = &*a + &(&c * r);
                    }
                }
            }
        }
        acc
    }

    /// Matrix of `u -> v . u` from `space(x,y)` to `space(x,z)`.
    pub fn left_mul_matrix(&self, x: usize, y: usize, z: usize, v: &[Scalar]) -> Matrix {
        let dxy = self.space(x, y).dim();
        let cols: Vec<Vec<Scalar>> = (0..dxy).map(|i| self.compose(x, y, z, &unit(self.field, dxy, i), v)).collect();
        Matrix::from_columns(self.field, self.space(x, z).dim(), &cols)
    }

    /// Matrix of `v -> v . u` from `space(y,z)` to `space(x,z)`.
    pub fn right_mul_matrix(&self, x: usize, y: usize, z: usize, u: &[Scalar]) -> Matrix {
        let dyz = self.space(y, z).dim();
        let cols: Vec<Vec<Scalar>> = (0..dyz).map(|j| self.compose(x, y, z, u, &unit(self.field, dyz, j))).collect();
        Matrix::from_columns(self.field, self.space(x, z).dim(), &cols)
    }

    /// Coordinates of a single arrow as an element of `space(s, t)`.
    pub fn arrow_coords(&self, a: usize) -> Vec<Scalar> {
        let ar = self.quiver.arrow(a);
        let p = Path { source: ar.from, target: ar.to, arrows: vec![a] };
        self.space(ar.from, ar.to).coords_of_path(&p)
    }

    /// True iff no relation is redundant: removing any one of them shrinks
    /// the ideal in some morphism space.
    pub fn check_minimal(&self) -> bool {
        let n = self.n_vertices();
        for skip in 0..self.relations.len() {
            let rest: Vec<&Relation> =
                self.relations.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, r)| r).collect();
            let shrinks = (0..n * n).any(|k| {
                let (x, y) = (k / n, k % n);
                ideal_rank(&self.quiver, &rest, x, y, self.field) < self.space(x, y).ideal_dim
            });
            if !shrinks {
                return false;
            }
        }
        true
    }

    /// Arrows reversed and relation paths reversed; arrow and vertex names
    /// are kept, so taking the opposite twice gives back an equal value.
    pub fn opposite(&self) -> BoundQuiver {
        let q = self.quiver.opposite();
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                source: r.target,
                target: r.source,
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        let mut arrows = p.arrows.clone();
                        arrows.reverse();
                        (c.clone(), Path { source: p.target, target: p.source, arrows })
                    })
                    .collect(),
            })
            .collect();
        BoundQuiver::new(q, rels, self.field).expect("opposite is well formed")
    }

    /// Shared handle to the opposite, built once.
    pub fn opposite_arc(&self) -> Arc<BoundQuiver> {
        self.op_cache.get_or_init(|| Arc::new(self.opposite())).clone()
    }

    /// Parses the quiver JSON format.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("quiver json: {m}"));
        let field = field_from_json(v.get("field").ok_or_else(|| bad("missing field"))?)?;
        let vertices: Vec<String> = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing vertices"))?
            .iter()
            .map(|x| x.as_str().map(String::from).ok_or_else(|| bad("vertex not a string")))
            .collect::<Result<_>>()?;
        let mut arrows = Vec::new();
        for a in v.get("arrows").and_then(Value::as_array).ok_or_else(|| bad("missing arrows"))? {
            let s = |k: &str| a.get(k).and_then(Value::as_str).map(String::from).ok_or_else(|| bad(k));
            arrows.push((s("name")?, s("from")?, s("to")?));
        }
        let q = Quiver::new(vertices, arrows)?;
        let mut rels = Vec::new();
        if let Some(rs) = v.get("relations") {
            for r in rs.as_array().ok_or_else(|| bad("relations not a list"))? {
                let mut terms = Vec::new();
                for t in r.get("terms").and_then(Value::as_array).ok_or_else(|| bad("relation terms"))? {
                    let c = parse_scalar(t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("coeff"))?, field)?;
                    let names: Vec<&str> = t
                        .get("path")
                        .and_then(Value::as_array)
                        .ok_or_else(|| bad("path"))?
                        .iter()
                        .map(|x| x.as_str().ok_or_else(|| bad("path entry")))
                        .collect::<Result<_>>()?;
                    terms.push((c, q.path(&names)?));
                }
                rels.push(Relation::new(terms)?);
            }
        }
        BoundQuiver::new(q, rels, field)
    }

    pub fn to_json(&self) -> Value {
        let q = &self.quiver;
        json!({
            "field": field_to_json(self.field),
            "vertices": q.vertices,
            "arrows": q.arrows.iter().map(|a| json!({
                "name": a.name, "from": q.vertices[a.from], "to": q.vertices[a.to]
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| json!({
                "terms": r.terms.iter().map(|(c, p)| json!({
                    "coeff": c.render(), "path": q.path_names(p)
                })).collect::<Vec<_>>()
            })).collect::<Vec<_>>(),
        })
    }

    /// Parses a `{vertex: n}` object into a dimension vector.
    pub fn dims_from_json(&self, v: &Value) -> Result<DimVector> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("dimension vector must be an object".into()))?;
        let mut d = vec![0i64; self.n_vertices()];
        let mut seen = vec![false; self.n_vertices()];
        for (k, x) in obj {
            let i = self.vertex(k)?;
            let n = x.as_i64().filter(|n| *n >= 0).ok_or_else(|| Error::Parse(format!("bad entry for {k}")))?;
            d[i] = n;
            seen[i] = true;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::Parse(format!("dimension vector misses vertex {}", self.quiver.vertices[i])));
        }
        Ok(d)
    }

    pub fn dims_to_json(&self, d: &[i64]) -> Value {
        let mut m = serde_json::Map::new();
        for (i, v) in self.quiver.vertices.iter().enumerate() {
            m.insert(v.clone(), json!(d[i]));
        }
        Value::Object(m)
    }
}

fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match v.get("kind").and_then(Value::as_str) {
        Some("Q") => Ok(FieldSpec::Rationals),
        Some("Fp") => {
            let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| Error::Parse("Fp field needs p".into()))?;
            FieldSpec::prime(p)
        }
        _ => Err(Error::Parse("field kind must be Q or Fp".into())),
    }
}

pub fn field_to_json(f: FieldSpec) -> Value {
    match f {
        FieldSpec::Rationals => json!({"kind": "Q"}),
        FieldSpec::Prime(p) => json!({"kind": "Fp", "p": p}),
    }
}

// ---------------------------------------------------------------------------
// Catalog

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogId {
    Kronecker,
    EuclideanA(usize, usize),
    /// Arm lengths `p_1..p_t` and parameters `lambda_4..lambda_t`.
    Canonical { arms: Vec<usize>, lambdas: Vec<Scalar> },
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::Kronecker => write!(f, "kronecker"),
            CatalogId::EuclideanA(p, q) => write!(f, "euclidean_a({p},{q})"),
            CatalogId::Canonical { arms, lambdas } => {
                let a: Vec<String> = arms.iter().map(|x| x.to_string()).collect();
                write!(f, "canonical({}", a.join(","))?;
                if !lambdas.is_empty() {
                    let l: Vec<String> = lambdas.iter().map(|x| x.render()).collect();
                    write!(f, ";{}", l.join(","))?;
                }
                write!(f, ")")
            }
        }
    }
}

impl CatalogId {
    /// Parses `kronecker`, `euclidean_a(p,q)` or `canonical(p1,..,pt[;l4,..])`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self> {
        let t = text.trim().to_ascii_lowercase();
        let bad = || Error::Parse(format!("unknown catalog id {text:?}"));
        if t == "kronecker" {
            return Ok(CatalogId::Kronecker);
        }
        let args = |prefix: &str| -> Option<String> {
            t.strip_prefix(prefix).and_then(|r| r.strip_prefix('(')).and_then(|r| r.strip_suffix(')')).map(String::from)
        };
        let nums = |s: &str| -> Result<Vec<usize>> {
            s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect()
        };
        if let Some(a) = args("euclidean_a") {
            let v = nums(&a)?;
            if v.len() != 2 {
                return Err(bad());
            }
            return Ok(CatalogId::EuclideanA(v[0], v[1]));
        }
        if let Some(a) = args("canonical") {
            let (arms, lams) = match a.split_once(';') {
                Some((x, y)) => (x.to_string(), Some(y.to_string())),
                None => (a.clone(), None),
            };
            let arms = nums(&arms)?;
            let lambdas = match lams {
                Some(l) => l.split(',').map(|x| parse_scalar(x.trim(), field)).collect::<Result<_>>()?,
                None => vec![],
            };
            return Ok(CatalogId::Canonical { arms, lambdas });
        }
        Err(bad())
    }
}

/// Combinatorial shape of a catalog bound quiver: a source, a sink and `t`
/// arms. Arm `i` is the path `X_i = [a_1, ..., a_{p_i}]` from source to sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogShape {
    pub id: CatalogId,
    pub arms: Vec<usize>,
    /// Parameters `lambda_4..lambda_t` (the first three arms sit at
    /// infinity, 0 and 1).
    pub lambdas: Vec<Scalar>,
    pub sink: usize,
    pub source: usize,
    /// Arrow ids of each arm, `[a_1, ..., a_p]` (`a_1` enters the sink).
    pub arm_arrows: Vec<Vec<usize>>,
    /// `arm_vertices[i][k-1]` is the vertex between `a_{k+1}` and `a_k`.
    pub arm_vertices: Vec<Vec<usize>>,
}

impl CatalogShape {
    pub fn arm_path(&self, i: usize) -> Path {
        Path { source: self.source, target: self.sink, arrows: self.arm_arrows[i].clone() }
    }

    /// Scalar by which arm `i` acts at the point `(a : b)` of the projective
    /// line: `x_1 = a`, `x_2 = b`, `x_3 = -a - b`, `x_j = -lambda_j a - b`.
    /// For two arms, `x_2 = b` and no relation is imposed.
    pub fn arm_scalar(&self, i: usize, a: &Scalar, b: &Scalar) -> Scalar {
        match i {
            0 => a.clone(),
            1 => b.clone(),
            2 => -(a + b),
            j => -(&(&self.lambdas[j - 3] * a) + b),
        }
    }

    /// Point of the projective line at which arm `i` degenerates.
    pub fn arm_point(&self, i: usize) -> String {
        match i {
            0 => "inf".into(),
            1 => "0".into(),
            2 => "1".into(),
            j => self.lambdas[j - 3].render(),
        }
    }

    /// `(a, b)` with `a = 1` such that homogeneous parameter `mu` is the
    /// point where `x_2 / x_1 = mu` (two arms) or `-mu` (three or more).
    pub fn homogeneous_point(&self, mu: &Scalar) -> (Scalar, Scalar) {
        let f = mu.field();
        if self.arms.len() <= 2 {
            (f.one(), mu.clone())
        } else {
            (f.one(), -mu)
        }
    }

    /// Exceptional parameters: 0, 1 and the lambdas (and infinity).
    pub fn exceptional_scalars(&self) -> Vec<Scalar> {
        let f = self.lambdas.first().map(|s| s.field());
        let mut v = Vec::new();
        if let Some(f) = f {
            v.push(f.zero());
            v.push(f.one());
        }
        v.extend(self.lambdas.iter().cloned());
        v
    }
}

const ARM_NAMES: [&str; 4] = ["alpha", "beta", "gamma", "delta"];
const ARM_LETTERS: [&str; 4] = ["a", "b", "c", "d"];

/// Builds a catalog bound quiver.
pub fn catalog(id: &CatalogId, field: FieldSpec) -> Result<(Arc<BoundQuiver>, CatalogShape)> {
    build_catalog(id, field, true)
}

/// Like [`catalog`] but accepts lambdas equal to 0, 1 or to each other (the
/// reduction of a catalog algebra modulo a small prime). The result is in
/// general not tame concealed-canonical.
pub fn catalog_degenerate(id: &CatalogId, field: FieldSpec) -> Result<(Arc<BoundQuiver>, CatalogShape)> {
    build_catalog(id, field, false)
}

fn build_catalog(id: &CatalogId, field: FieldSpec, strict: bool) -> Result<(Arc<BoundQuiver>, CatalogShape)> {
    if let CatalogId::Kronecker = id {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into()), ("b".into(), "1".into(), "2".into())],
        )?;
        let bq = BoundQuiver::new(q, vec![], field)?;
        let shape = CatalogShape {
            id: id.clone(),
            arms: vec![1, 1],
            lambdas: vec![],
            sink: 1,
            source: 0,
            arm_arrows: vec![vec![0], vec![1]],
            arm_vertices: vec![vec![], vec![]],
        };
        return Ok((Arc::new(bq), shape));
    }
    let (arms, lambdas) = match id {
        CatalogId::EuclideanA(p, q) => (vec![*p, *q], vec![]),
        CatalogId::Canonical { arms, lambdas } => (arms.clone(), lambdas.clone()),
        CatalogId::Kronecker => unreachable!(),
    };
    let t = arms.len();
    if !(2..=4).contains(&t) {
        return Err(Error::Parameters(format!("{t} arms; between 2 and 4 supported")));
    }
    if arms.contains(&0) || (t >= 3 && arms.iter().any(|&p| p < 2)) {
        return Err(Error::Parameters("arm lengths must be at least 1, and at least 2 with three or more arms".into()));
    }
    // tameness: sum 1/p_i >= t - 2, compared over the integers
    let prod: usize = arms.iter().product();
    let lhs: usize = arms.iter().map(|p| prod / p).sum();
    if lhs < (t - 2) * prod {
        return Err(Error::Parameters(format!("type {arms:?} is not tame")));
    }
    let need = t.saturating_sub(3);
    if lambdas.len() != need {
        return Err(Error::Parameters(format!("{need} lambda parameters expected, {} given", lambdas.len())));
    }
    for (i, l) in lambdas.iter().enumerate() {
        if l.field() != field {
            return Err(Error::Field("lambda from another field".into()));
        }
        if strict && (l.is_zero() || l.is_one()) {
            return Err(Error::Parameters("lambda must avoid 0 and 1".into()));
        }
        if strict && lambdas[..i].contains(l) {
            return Err(Error::Parameters("repeated lambda".into()));
        }
    }
    let mut vertices = vec!["sink".to_string()];
    let mut arrows = Vec::new();
    for (i, &p) in arms.iter().enumerate() {
        for k in 1..p {
            vertices.push(format!("{}{k}", ARM_LETTERS[i]));
        }
        for k in 1..=p {
            let to = if k == 1 { "sink".to_string() } else { format!("{}{}", ARM_LETTERS[i], k - 1) };
            let from = if k == p { "source".to_string() } else { format!("{}{k}", ARM_LETTERS[i]) };
            arrows.push((format!("{}{k}", ARM_NAMES[i]), from, to));
        }
    }
    vertices.push("source".to_string());
    let q = Quiver::new(vertices, arrows)?;
    let arm_arrows: Vec<Vec<usize>> = arms
        .iter()
        .enumerate()
        .map(|(i, &p)| (1..=p).map(|k| q.arrow_index(&format!("{}{k}", ARM_NAMES[i])).unwrap()).collect())
        .collect();
    let arm_vertices: Vec<Vec<usize>> = arms
        .iter()
        .enumerate()
        .map(|(i, &p)| (1..p).map(|k| q.vertex(&format!("{}{k}", ARM_LETTERS[i])).unwrap()).collect())
        .collect();
    let (sink, source) = (q.vertex("sink")?, q.vertex("source")?);
    let arm = |i: usize| Path { source, target: sink, arrows: arm_arrows[i].clone() };
    let mut rels = Vec::new();
    if t >= 3 {
        let one = field.one();
        rels.push(Relation::new(vec![(one.clone(), arm(0)), (one.clone(), arm(1)), (one.clone(), arm(2))])?);
        for j in 3..t {
            rels.push(Relation::new(vec![(lambdas[j - 3].clone(), arm(0)), (one.clone(), arm(1)), (one.clone(), arm(j))])?);
        }
    }
    let bq = BoundQuiver::new(q, rels, field)?;
    let shape = CatalogShape { id: id.clone(), arms, lambdas, sink, source, arm_arrows, arm_vertices };
    Ok((Arc::new(bq), shape))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn c2222() -> (Arc<BoundQuiver>, CatalogShape) {
        catalog(&CatalogId::Canonical { arms: vec![2, 2, 2, 2], lambdas: vec![q().int(2)] }, q()).unwrap()
    }

    #[test]
    fn kronecker_paths() {
        let (bq, _) = catalog(&CatalogId::Kronecker, q()).unwrap();
        let qv = bq.quiver();
        let p = qv.all_paths(0, 1);
        assert_eq!(p.iter().map(|p| qv.path_names(p)).collect::<Vec<_>>(), vec![vec!["a"], vec!["b"]]);
        assert_eq!(qv.all_paths(0, 0), vec![Path::trivial(0)]);
        assert_eq!(bq.space(0, 1).dim(), 2);
        assert_eq!(bq.space(1, 0).dim(), 0);
        assert!(bq.check_minimal());
    }

    #[test]
    fn canonical_2222_spaces() {
        let (bq, sh) = c2222();
        let qv = bq.quiver();
        let paths = qv.all_paths(sh.source, sh.sink);
        let names: Vec<Vec<&str>> = paths.iter().map(|p| qv.path_names(p)).collect();
        assert_eq!(
            names,
            vec![vec!["alpha1", "alpha2"], vec!["beta1", "beta2"], vec!["delta1", "delta2"], vec!["gamma1", "gamma2"]]
        );
        let s = bq.space(sh.source, sh.sink);
        assert_eq!((s.dim(), s.ideal_dim), (2, 2));
        // basis: the two lexicographically first paths
        assert_eq!(s.basis, vec![0, 1]);
        assert!(bq.check_minimal());
    }

    #[test]
    fn redundant_relation_detected() {
        let (bq, _) = c2222();
        let mut rels = bq.relations().to_vec();
        let mut doubled = rels[0].clone();
        for t in doubled.terms.iter_mut() {
            t.0 = &t.0 * &q().int(2);
        }
        rels.push(doubled);
        let b2 = BoundQuiver::new(bq.quiver().clone(), rels, q()).unwrap();
        assert!(!b2.check_minimal());
    }

    #[test]
    fn opposite_involution() {
        let (bq, sh) = c2222();
        let op = bq.opposite();
        assert_eq!(op.opposite(), *bq);
        assert_eq!(op.space(sh.sink, sh.source).dim(), 2);
        for x in 0..bq.n_vertices() {
            for y in 0..bq.n_vertices() {
                assert_eq!(bq.space(x, y).dim(), op.space(y, x).dim());
            }
        }
        let p = &op.relations()[0].terms[0].1;
        assert_eq!(op.quiver().path_names(p), vec!["alpha2", "alpha1"]);
    }

    #[test]
    fn json_round_trip() {
        let (bq, _) = c2222();
        let back = BoundQuiver::from_json(&bq.to_json()).unwrap();
        assert_eq!(back, *bq);
    }

    #[test]
    fn catalog_rejects_bad_parameters() {
        let f = q();
        assert!(catalog(&CatalogId::Canonical { arms: vec![2, 2, 2, 2], lambdas: vec![f.one()] }, f).is_err());
        assert!(catalog(&CatalogId::Canonical { arms: vec![3, 3, 4], lambdas: vec![] }, f).is_err());
        assert!(catalog(&CatalogId::Canonical { arms: vec![2, 3, 5], lambdas: vec![] }, f).is_ok());
        assert!(catalog(&CatalogId::Canonical { arms: vec![2, 2, 2, 3], lambdas: vec![f.int(2)] }, f).is_err());
        assert!(Quiver::new(
            vec!["x".into(), "y".into()],
            vec![("a".into(), "x".into(), "y".into()), ("b".into(), "y".into(), "x".into())]
        )
        .is_err());
    }

    #[test]
    fn parse_ids() {
        let f = q();
        assert_eq!(CatalogId::parse("Kronecker", f).unwrap(), CatalogId::Kronecker);
        let id = CatalogId::parse("canonical(2,2,2,2;2)", f).unwrap();
        assert_eq!(id.to_string(), "canonical(2,2,2,2;2)");
        assert_eq!(CatalogId::parse("euclidean_a(1,2)", f).unwrap(), CatalogId::EuclideanA(1, 2));
    }

    #[test]
    fn path_counts_match_adjacency_powers() {
        let (bq, _) = catalog(&CatalogId::Canonical { arms: vec![2, 2, 3], lambdas: vec![] }, q()).unwrap();
        let qv = bq.quiver();
        let n = qv.n_vertices();
        let mut a = vec![vec![0u64; n]; n];
        for ar in qv.arrows() {
            a[ar.from][ar.to] += 1;
        }
        let mut total = vec![vec![0u64; n]; n];
        let mut pw: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect();
        for _ in 0..=n {
            for i in 0..n {
                for j in 0..n {
                    total[i][j] += pw[i][j];
                }
            }
            pw = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| pw[i][k] * a[k][j]).sum()).collect()).collect();
        }
        for x in 0..n {
            for y in 0..n {
                let s = bq.space(x, y);
                assert_eq!(qv.all_paths(x, y).len() as u64, total[x][y]);
                assert_eq!(s.dim() + s.ideal_dim, s.paths.len());
            }
        }
    }
}
