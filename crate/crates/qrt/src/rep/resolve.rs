use super::Representation;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::linalg::{self, Matrix};
use crate::quiver::{BoundQuiver, DimVector};
use std::sync::Arc;

/// Unit vectors of `M(x)` spanning a complement of the radical, per vertex.
fn top_generators(m: &Representation) -> Vec<Vec<usize>> {
    let f = m.field();
    let arrows = m.bq().quiver().arrows();
    (0..m.dims().len())
        .map(|x| {
            let parts: Vec<&Matrix> = arrows.iter().enumerate().filter(|(_, a)| a.to == x).map(|(i, _)| m.map(i)).collect();
            let img = Matrix::hstack(f, m.dims()[x], &parts);
            linalg::complement_units(&linalg::column_basis(&img))
        })
        .collect()
}

/// The top as a dimension vector and the radical as a subrepresentation.
pub fn top_and_radical(m: &Representation) -> (DimVector, Representation) {
    let f = m.field();
    let arrows = m.bq().quiver().arrows();
    let incl: Vec<Matrix> = (0..m.dims().len())
        .map(|x| {
            let parts: Vec<&Matrix> = arrows.iter().enumerate().filter(|(_, a)| a.to == x).map(|(i, _)| m.map(i)).collect();
            linalg::column_basis(&Matrix::hstack(f, m.dims()[x], &parts))
        })
        .collect();
    let rad = m.restrict(&incl).expect("radical is a subrepresentation");
    let top = m.dims().iter().zip(rad.dims()).map(|(&a, &b)| (a - b) as i64).collect();
    (top, rad)
}

/// A map between direct sums of indecomposable projectives:
/// generator `e_{from[i]}` goes to `sum_j omega[i][j]`, with `omega[i][j]`
/// in the morphism space from `to[j]` to `from[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjMap {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub omega: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMap {
    /// `Hom(f, N)`: block matrix `[N(omega_ij)]` from `+_j N(to_j)` to
    /// `+_i N(from_i)`.
    pub fn hom_matrix(&self, n: &Representation) -> Matrix {
        let f = n.field();
        let d = n.dims();
        let rows: usize = self.from.iter().map(|&x| d[x]).sum();
        let cols: usize = self.to.iter().map(|&y| d[y]).sum();
        let mut out = Matrix::zeros(rows, cols, f);
        let mut r = 0;
        for (i, &x) in self.from.iter().enumerate() {
            let mut c = 0;
            for (j, &y) in self.to.iter().enumerate() {
                if d[x] > 0 && d[y] > 0 {
                    out.put(r, c, &n.eval_morphism(y, x, &self.omega[i][j]));
                }
                c += d[y];
            }
            r += d[x];
        }
        out
    }
}

/// Minimal projective presentation `+_i P_{x_i} -> +_j P_{y_j} -> V -> 0`.
#[derive(Debug, Clone)]
pub struct ProjectivePresentation {
    pub target: Representation,
    /// Generators of the cover: vertex `y_j` and vector in `V(y_j)`.
    pub generators: Vec<Vec<Scalar>>,
    pub map: ProjMap,
}

impl ProjectivePresentation {
    pub fn p1(&self) -> &[usize] {
        &self.map.from
    }
    pub fn p0(&self) -> &[usize] {
        &self.map.to
    }
    pub fn omega(&self, i: usize, j: usize) -> &[Scalar] {
        &self.map.omega[i][j]
    }
    pub fn hom_matrix(&self, n: &Representation) -> Matrix {
        self.map.hom_matrix(n)
    }
}

struct Cover {
    vertices: Vec<usize>,
    vectors: Vec<Vec<Scalar>>,
    /// Kernel of the cover as a subrepresentation of the projective sum.
    kernel: Representation,
    kernel_incl: Vec<Matrix>,
}

fn cover(m: &Representation) -> Result<Cover> {
    let bq = m.bq().clone();
    let f = m.field();
    let n = bq.n_vertices();
    let gens = top_generators(m);
    let mut vertices = Vec::new();
    let mut vectors = Vec::new();
    for (x, units) in gens.iter().enumerate() {
        for &u in units {
            let mut v = vec![f.zero(); m.dims()[x]];
            v[u] = f.one();
            vertices.push(x);
            vectors.push(v);
        }
    }
    let parts: Vec<Representation> = vertices.iter().map(|&y| Representation::projective(bq.clone(), y)).collect();
    let p0 = if parts.is_empty() { Representation::zero(bq.clone()) } else { Representation::direct_sum(&parts)? };
    let mut incl = Vec::with_capacity(n);
    for z in 0..n {
        let mut cols = Vec::new();
        for (j, &y) in vertices.iter().enumerate() {
            let s = bq.space(y, z);
            for k in 0..s.dim() {
                cols.push(m.eval_path(s.basis_path(k)).mul_vec(&vectors[j]));
            }
        }
        let pi = Matrix::from_columns(f, m.dims()[z], &cols);
        if linalg::rank(&pi) != m.dims()[z] {
            return Err(Error::invariant("cover", "projective cover is not surjective"));
        }
        incl.push(linalg::kernel_basis(&pi));
    }
    let kernel = p0.restrict(&incl)?;
    Ok(Cover { vertices, vectors, kernel, kernel_incl: incl })
}

/// Expresses the generators of the cover of `k` (a subrepresentation of the
/// projective sum on `to`) as morphisms into that sum.
fn omega_table(bq: &BoundQuiver, to: &[usize], c: &Cover, prev_incl: &[Matrix]) -> ProjMap {
    let mut omega = Vec::with_capacity(c.vertices.len());
    for (i, &x) in c.vertices.iter().enumerate() {
        let full = prev_incl[x].mul_vec(&c.vectors[i]);
        let mut row = Vec::with_capacity(to.len());
        let mut off = 0;
        for &y in to {
            let d = bq.space(y, x).dim();
            row.push(full[off..off + d].to_vec());
            off += d;
        }
        omega.push(row);
    }
    ProjMap { from: c.vertices.clone(), to: to.to_vec(), omega }
}

pub fn minimal_presentation(m: &Representation) -> Result<ProjectivePresentation> {
    let c0 = cover(m)?;
    let c1 = cover(&c0.kernel)?;
    let map = omega_table(m.bq(), &c0.vertices, &c1, &c0.kernel_incl);
    Ok(ProjectivePresentation { target: m.clone(), generators: c0.vectors, map })
}

/// Minimal projective resolution `P2 -> P1 -> P0 -> M`, verified to stop.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub p0: Vec<usize>,
    pub d1: ProjMap,
    pub d2: ProjMap,
}

impl Resolution {
    pub fn projective_dimension(&self) -> usize {
        if !self.d2.from.is_empty() {
            2
        } else if !self.d1.from.is_empty() {
            1
        } else {
            0
        }
    }
}

pub fn resolution(m: &Representation) -> Result<Resolution> {
    let c0 = cover(m)?;
    let c1 = cover(&c0.kernel)?;
    let c2 = cover(&c1.kernel)?;
    if !c2.kernel.is_zero() {
        return Err(Error::invariant(
            "resolution",
            "projective resolution longer than 2; Ext^2 would need a longer complex",
        ));
    }
    let d1 = omega_table(m.bq(), &c0.vertices, &c1, &c0.kernel_incl);
    let d2 = omega_table(m.bq(), &c1.vertices, &c2, &c1.kernel_incl);
    Ok(Resolution { p0: c0.vertices, d1, d2 })
}

/// Dimensions of `Ext^1(m, n)` and `Ext^2(m, n)` from the minimal resolution
/// of `m`.
pub fn ext(m: &Representation, n: &Representation) -> Result<(usize, usize)> {
    let r = resolution(m)?;
    ext_from(&r, n)
}

pub(crate) fn ext_from(r: &Resolution, n: &Representation) -> Result<(usize, usize)> {
    let d0 = r.d1.hom_matrix(n);
    let d1 = r.d2.hom_matrix(n);
    let c1 = d0.rows();
    let c2 = d1.rows();
    let r0 = linalg::rank(&d0);
    let r1 = linalg::rank(&d1);
    Ok((c1 - r1 - r0, c2 - r1))
}

/// Transpose `Tr M`: cokernel of `Hom(f, A)` for the minimal presentation
/// `f`, a representation of the opposite bound quiver `target`.
pub(crate) fn transpose_onto(m: &Representation, target: &Arc<BoundQuiver>) -> Result<Representation> {
    let bq = m.bq();
    let f = m.field();
    let pres = minimal_presentation(m)?;
    let (xs, ys) = (pres.p1(), pres.p0());
    let n = bq.n_vertices();
    let dim_sum = |z: usize, ends: &[usize]| -> usize { ends.iter().map(|&e| bq.space(z, e).dim()).sum() };
    let d0: Vec<usize> = (0..n).map(|z| dim_sum(z, ys)).collect();
    let d1: Vec<usize> = (0..n).map(|z| dim_sum(z, xs)).collect();
    // arrows of the opposite act by precomposition
    let op_maps = |ends: &[usize]| -> Vec<Matrix> {
        bq.quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let blocks: Vec<Matrix> =
                    ends.iter().map(|&e| bq.right_mul_matrix(a.from, a.to, e, &bq.arrow_coords(i))).collect();
                Matrix::block_diag(f, &blocks.iter().collect::<Vec<_>>())
            })
            .collect()
    };
    let t1 = Representation::new(target.clone(), d1.clone(), op_maps(xs))?;
    let image: Vec<Matrix> = (0..n)
        .map(|z| {
            let mut h = Matrix::zeros(d1[z], d0[z], f);
            let mut r = 0;
            for (i, &x) in xs.iter().enumerate() {
                let mut c = 0;
                for (j, &y) in ys.iter().enumerate() {
                    let blk = bq.left_mul_matrix(z, y, x, pres.omega(i, j));
                    h.put(r, c, &blk);
                    c += bq.space(z, y).dim();
                }
                r += bq.space(z, x).dim();
            }
            h
        })
        .collect();
    Ok(t1.quotient(&image)?.0)
}

pub fn transpose(m: &Representation) -> Result<Representation> {
    transpose_onto(m, &m.bq().opposite_arc())
}

/// Auslander-Reiten translate `D Tr M`.
pub fn tau(m: &Representation) -> Result<Representation> {
    Ok(transpose(m)?.dual_onto(m.bq()))
}

/// Inverse translate `Tr D M`.
pub fn tau_minus(m: &Representation) -> Result<Representation> {
    transpose_onto(&m.dual(), m.bq())
}
