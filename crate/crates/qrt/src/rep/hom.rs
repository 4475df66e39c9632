use super::{same_quiver, Representation};
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::linalg::{self, Matrix};

/// A morphism given vertex by vertex.
pub type EndoTuple = Vec<Matrix>;

#[derive(Debug, Clone)]
pub struct HomBasis {
    pub basis: Vec<EndoTuple>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `sum_k c_k basis[k]`.
    pub fn combine(&self, coeffs: &[Scalar], m: &Representation, n: &Representation) -> EndoTuple {
        let f = m.field();
        let mut acc: EndoTuple = (0..m.dims().len()).map(|x| Matrix::zeros(n.dims()[x], m.dims()[x], f)).collect();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, a) in acc.iter_mut().enumerate() {
                *a = a.add(&self.basis[k][x].scale(c));
            }
        }
        acc
    }
}

/// Coefficient matrix of the intertwining equations `N(a) f_s = f_t M(a)`,
/// unknowns ordered vertex by vertex, each `f_x` row-major.
fn intertwiner_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    let f = m.field();
    let dm = m.dims();
    let dn = n.dims();
    let mut offs = Vec::with_capacity(dm.len());
    let mut total = 0;
    for x in 0..dm.len() {
        offs.push(total);
        total += dm[x] * dn[x];
    }
    let arrows = m.bq().quiver().arrows();
    let rows: usize = arrows.iter().map(|a| dn[a.to] * dm[a.from]).sum();
    let mut sys = Matrix::zeros(rows, total, f);
    let mut r0 = 0;
    for (i, a) in arrows.iter().enumerate() {
        let (s, t) = (a.from, a.to);
        let (na, ma) = (n.map(i), m.map(i));
        for r in 0..dn[t] {
            for c in 0..dm[s] {
                let row = r0 + r * dm[s] + c;
                // + sum_k N(a)[r,k] f_s[k,c]
                for k in 0..dn[s] {
                    let v = na.get(r, k);
                    if !v.is_zero() {
                        let col = offs[s] + k * dm[s] + c;
                        let cur = sys.get(row, col) + v;
                        sys.set(row, col, cur);
                    }
                }
                // - sum_k f_t[r,k] M(a)[k,c]
                for k in 0..dm[t] {
                    let v = ma.get(k, c);
                    if !v.is_zero() {
                        let col = offs[t] + r * dm[t] + k;
                        let cur = sys.get(row, col) - v;
                        sys.set(row, col, cur);
                    }
                }
            }
        }
        r0 += dn[t] * dm[s];
    }
    (sys, offs)
}

/// Basis of `Hom(m, n)`, canonical for the RREF of the intertwiner system.
pub fn hom(m: &Representation, n: &Representation) -> Result<HomBasis> {
    if !same_quiver(m.bq(), n.bq()) {
        return Err(Error::Parameters("hom between representations of different bound quivers".into()));
    }
    let (sys, offs) = intertwiner_system(m, n);
    let ker = linalg::kernel_basis(&sys);
    let f = m.field();
    let basis = (0..ker.cols())
        .map(|k| {
            (0..m.dims().len())
                .map(|x| {
                    let (r, c) = (n.dims()[x], m.dims()[x]);
                    Matrix::from_fn(r, c, f, |i, j| ker.get(offs[x] + i * c + j, k).clone())
                })
                .collect()
        })
        .collect();
    Ok(HomBasis { basis })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !same_quiver(m.bq(), n.bq()) {
        return Err(Error::Parameters("hom between representations of different bound quivers".into()));
    }
    let (sys, _) = intertwiner_system(m, n);
    Ok(sys.cols() - linalg::rank(&sys))
}

pub fn end_dim(m: &Representation) -> usize {
    hom_dim(m, m).expect("same quiver")
}
