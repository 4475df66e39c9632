//! Representations of bound quivers and their homological algebra.

mod decomp;
mod extension;
mod hom;
mod random;
mod resolve;

pub use decomp::{decompose, is_local, is_periodic, iso_check, Decomposition};
pub use extension::{
    coboundary_matrix, ext1_cocycles, extension_middle, linearized_relations, tangent_space, Ext1Data,
    TangentSpace,
};
pub use hom::{end_dim, hom, hom_dim, EndoTuple, HomBasis};
pub use random::{random_catalog_rep, random_gl, random_scalar};
pub use resolve::{
    ext, minimal_presentation, resolution, ProjMap, tau, tau_minus, top_and_radical, transpose, ProjectivePresentation,
    Resolution,
};

use crate::error::{Error, Result};
use crate::exactfield::{parse_scalar, FieldSpec, Scalar};
use crate::linalg::{self, Matrix};
use crate::quiver::{BoundQuiver, DimVector, Path};
use serde_json::{json, Value};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Representation {
    bq: Arc<BoundQuiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, o: &Self) -> bool {
        same_quiver(&self.bq, &o.bq) && self.dims == o.dims && self.maps == o.maps
    }
}

pub(crate) fn same_quiver(a: &Arc<BoundQuiver>, b: &Arc<BoundQuiver>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Checks shapes; relations are checked by [`Representation::validate`].
    pub fn new(bq: Arc<BoundQuiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != bq.n_vertices() || maps.len() != bq.n_arrows() {
            return Err(Error::Shape("dims or maps do not match the quiver".into()));
        }
        for (i, a) in bq.quiver().arrows().iter().enumerate() {
            if maps[i].shape() != (dims[a.to], dims[a.from]) || maps[i].field() != bq.field() {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.to],
                    dims[a.from],
                    maps[i].rows(),
                    maps[i].cols()
                )));
            }
        }
        Ok(Representation { bq, dims, maps })
    }

    pub fn zero_maps(bq: Arc<BoundQuiver>, dims: Vec<usize>) -> Self {
        let f = bq.field();
        let maps = bq.quiver().arrows().iter().map(|a| Matrix::zeros(dims[a.to], dims[a.from], f)).collect();
        Representation { bq, dims, maps }
    }

    pub fn zero(bq: Arc<BoundQuiver>) -> Self {
        let n = bq.n_vertices();
        Self::zero_maps(bq, vec![0; n])
    }

    pub fn simple(bq: Arc<BoundQuiver>, x: usize) -> Self {
        let mut d = vec![0; bq.n_vertices()];
        d[x] = 1;
        Self::zero_maps(bq, d)
    }

    /// `P_x(y)` is the morphism space from `x` to `y`; arrows act by left
    /// composition.
    pub fn projective(bq: Arc<BoundQuiver>, x: usize) -> Self {
        let n = bq.n_vertices();
        let dims: Vec<usize> = (0..n).map(|y| bq.space(x, y).dim()).collect();
        let maps = bq
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| bq.left_mul_matrix(x, a.from, a.to, &bq.arrow_coords(i)))
            .collect();
        Representation { bq, dims, maps }
    }

    /// Dual of the projective of the opposite at `x`.
    pub fn injective(bq: Arc<BoundQuiver>, x: usize) -> Self {
        let op = bq.opposite_arc();
        Representation::projective(op, x).dual_onto(&bq)
    }

    pub fn bq(&self) -> &Arc<BoundQuiver> {
        &self.bq
    }
    pub fn field(&self) -> FieldSpec {
        self.bq.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim_vector(&self) -> DimVector {
        self.dims.iter().map(|&d| d as i64).collect()
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn with_maps(&self, maps: Vec<Matrix>) -> Result<Self> {
        Representation::new(self.bq.clone(), self.dims.clone(), maps)
    }

    /// `M(a_1) ... M(a_n)`; identity for a trivial path.
    pub fn eval_path(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.dims[p.source], self.field());
        for &a in p.arrows.iter().rev() {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// `M(w)` for `w` given in the basis of the morphism space from `x` to `y`.
    pub fn eval_morphism(&self, x: usize, y: usize, coords: &[Scalar]) -> Matrix {
        let s = self.bq.space(x, y);
        let mut acc = Matrix::zeros(self.dims[y], self.dims[x], self.field());
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.eval_path(s.basis_path(k)).scale(c));
            }
        }
        acc
    }

    /// True iff every relation evaluates to zero.
    pub fn validate(&self) -> bool {
        self.bq.relations().iter().all(|r| {
            let mut acc = Matrix::zeros(self.dims[r.target], self.dims[r.source], self.field());
            for (c, p) in &r.terms {
                acc = acc.add(&self.eval_path(p).scale(c));
            }
            acc.is_zero()
        })
    }

    /// Dual representation over the opposite bound quiver `target`.
    pub fn dual_onto(&self, target: &Arc<BoundQuiver>) -> Representation {
        Representation { bq: target.clone(), dims: self.dims.clone(), maps: self.maps.iter().map(|m| m.transpose()).collect() }
    }

    pub fn dual(&self) -> Representation {
        self.dual_onto(&self.bq.opposite_arc())
    }

    pub fn direct_sum(parts: &[Representation]) -> Result<Representation> {
        let first = parts.first().ok_or_else(|| Error::Parameters("empty direct sum".into()))?;
        let bq = first.bq.clone();
        if parts.iter().any(|p| !same_quiver(&p.bq, &bq)) {
            return Err(Error::Parameters("summands over different bound quivers".into()));
        }
        let f = bq.field();
        let n = bq.n_vertices();
        let dims: Vec<usize> = (0..n).map(|x| parts.iter().map(|p| p.dims[x]).sum()).collect();
        let maps = (0..bq.n_arrows())
            .map(|a| Matrix::block_diag(f, &parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Ok(Representation { bq, dims, maps })
    }

    /// Subrepresentation spanned by the columns of `incl[x]` at each vertex.
    /// The columns must be independent and the spans closed under the arrows.
    pub fn restrict(&self, incl: &[Matrix]) -> Result<Representation> {
        let dims: Vec<usize> = incl.iter().map(|m| m.cols()).collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (i, a) in self.bq.quiver().arrows().iter().enumerate() {
            let img = self.maps[i].mul(&incl[a.from]);
            let m = linalg::solve(&incl[a.to], &img)
                .ok_or_else(|| Error::invariant("subrepresentation", format!("not closed under {}", a.name)))?;
            maps.push(m);
        }
        Ok(Representation { bq: self.bq.clone(), dims, maps })
    }

    /// Quotient by the subrepresentation whose spaces are spanned by the
    /// columns of `gens[x]` (not necessarily independent). Returns the
    /// quotient and the projection matrices.
    pub fn quotient(&self, gens: &[Matrix]) -> Result<(Representation, Vec<Matrix>)> {
        let f = self.field();
        let mut proj = Vec::new();
        let mut sect = Vec::new();
        for (x, g) in gens.iter().enumerate() {
            let n = self.dims[x];
            let basis = linalg::column_basis(g);
            let comp = linalg::complement_units(&basis);
            let comp_m = Matrix::identity(n, f).select_columns(&comp);
            let full = Matrix::hstack(f, n, &[&basis, &comp_m]);
            let inv = linalg::inverse(&full)?;
            proj.push(inv.submatrix(basis.cols(), n, 0, n));
            sect.push(comp_m);
        }
        let dims: Vec<usize> = proj.iter().map(|p| p.rows()).collect();
        let maps = self
            .bq
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| proj[a.to].mul(&self.maps[i]).mul(&sect[a.from]))
            .collect();
        Ok((Representation { bq: self.bq.clone(), dims, maps }, proj))
    }

    /// `(g . M)(a) = g_t M(a) g_s^{-1}`.
    pub fn act(&self, g: &[Matrix]) -> Result<Representation> {
        let inv: Vec<Matrix> = g.iter().map(linalg::inverse).collect::<Result<_>>()?;
        let maps = self
            .bq
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| g[a.to].mul(&self.maps[i]).mul(&inv[a.from]))
            .collect();
        Ok(Representation { bq: self.bq.clone(), dims: self.dims.clone(), maps })
    }

    /// Parses the representation JSON format.
    pub fn from_json(bq: Arc<BoundQuiver>, v: &Value) -> Result<Representation> {
        let bad = |m: String| Error::Parse(format!("representation json: {m}"));
        let dv = bq.dims_from_json(v.get("dims").ok_or_else(|| bad("missing dims".into()))?)?;
        let dims: Vec<usize> = dv.iter().map(|&d| d as usize).collect();
        let maps = matrices_from_json(&bq, &dims, v.get("matrices").unwrap_or(&Value::Null))?;
        Representation::new(bq, dims, maps)
    }

    pub fn to_json(&self) -> Value {
        let mut mats = serde_json::Map::new();
        for (i, a) in self.bq.quiver().arrows().iter().enumerate() {
            let m = &self.maps[i];
            let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(|s| s.render()).collect()).collect();
            mats.insert(a.name.clone(), json!(rows));
        }
        json!({"dims": self.bq.dims_to_json(&self.dim_vector()), "matrices": Value::Object(mats)})
    }
}

/// Parses `{arrow: [[entry, ..], ..]}` for the given vertex dimensions;
/// missing arrows with an empty matrix default to zero. Relations are not
/// checked.
pub fn matrices_from_json(bq: &BoundQuiver, dims: &[usize], v: &Value) -> Result<Vec<Matrix>> {
    let bad = |m: String| Error::Parse(format!("representation json: {m}"));
    let f = bq.field();
    let mats = v.as_object();
    let mut maps = Vec::new();
    for a in bq.quiver().arrows() {
        let (r, c) = (dims[a.to], dims[a.from]);
        let m = match mats.and_then(|m| m.get(&a.name)) {
            None if r == 0 || c == 0 => Matrix::zeros(r, c, f),
            None => return Err(bad(format!("missing matrix for {}", a.name))),
            Some(rows) => {
                let rows = rows.as_array().ok_or_else(|| bad(format!("{} is not a list", a.name)))?;
                if rows.len() != r {
                    return Err(Error::Shape(format!("{}: {} rows, expected {r}", a.name, rows.len())));
                }
                let mut data = Vec::with_capacity(r * c);
                for row in rows {
                    let row = row.as_array().ok_or_else(|| bad("row is not a list".into()))?;
                    if row.len() != c {
                        return Err(Error::Shape(format!("{}: row of length {}, expected {c}", a.name, row.len())));
                    }
                    for e in row {
                        let s = match e {
                            Value::String(s) => parse_scalar(s, f)?,
                            Value::Number(n) => parse_scalar(&n.to_string(), f)?,
                            _ => return Err(bad("entry must be a scalar string".into())),
                        };
                        data.push(s);
                    }
                }
                Matrix::new(r, c, f, data)?
            }
        };
        maps.push(m);
    }
    Ok(maps)
}

#[cfg(test)]
mod tests;
