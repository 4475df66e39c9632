use super::Representation;
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::linalg::{self, Matrix};

/// Product `R(a_1) ... R(a_k)` of consecutive arrows; identity at `end`
/// when the slice is empty.
fn eval_slice(r: &Representation, arrows: &[usize], end: usize) -> Matrix {
    let f = r.field();
    match arrows.last() {
        None => Matrix::identity(r.dims()[end], f),
        Some(&last) => {
            let s = r.bq().quiver().arrow(last).from;
            let mut acc = Matrix::identity(r.dims()[s], f);
            for &a in arrows.iter().rev() {
                acc = r.map(a).mul(&acc);
            }
            acc
        }
    }
}

/// Offsets of the arrow blocks `Z(a): N(s a) -> L(t a)` in a flat vector.
fn arrow_offsets(l: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut offs = Vec::new();
    let mut tot = 0;
    for a in l.bq().quiver().arrows() {
        offs.push(tot);
        tot += l.dims()[a.to] * n.dims()[a.from];
    }
    (offs, tot)
}

/// First-order part of the relations in the upper-right block of
/// `[[L, Z], [0, N]]`, as a linear system in the entries of `Z`.
pub fn linearized_relations(l: &Representation, n: &Representation) -> Matrix {
    let f = l.field();
    let bq = l.bq();
    let (offs, tot) = arrow_offsets(l, n);
    let rows: usize = bq.relations().iter().map(|r| l.dims()[r.target] * n.dims()[r.source]).sum();
    let mut sys = Matrix::zeros(rows, tot, f);
    let mut r0 = 0;
    for rel in bq.relations() {
        let (lt, ns) = (l.dims()[rel.target], n.dims()[rel.source]);
        for (c, p) in &rel.terms {
            for k in 0..p.arrows.len() {
                let ak = p.arrows[k];
                let arr = bq.quiver().arrow(ak);
                let pre = eval_slice(l, &p.arrows[..k], rel.target);
                let post = eval_slice(n, &p.arrows[k + 1..], rel.source);
                let (za, zb) = (l.dims()[arr.to], n.dims()[arr.from]);
                for r in 0..lt {
                    for a in 0..za {
                        let pa = pre.get(r, a);
                        if pa.is_zero() {
                            continue;
                        }
                        let cpa = c * pa;
                        for b in 0..zb {
                            for col in 0..ns {
                                let pb = post.get(b, col);
                                if pb.is_zero() {
                                    continue;
                                }
                                let row = r0 + r * ns + col;
                                let var = offs[ak] + a * zb + b;
                                let v = sys.get(row, var) + &(&cpa * pb);
                                sys.set(row, var, v);
                            }
                        }
                    }
                }
            }
        }
        r0 += lt * ns;
    }
    sys
}

/// Columns span `{(L(a) H_s - H_t N(a))_a}` over all `H_v: N(v) -> L(v)`.
pub fn coboundary_matrix(l: &Representation, n: &Representation) -> Matrix {
    let f = l.field();
    let (offs, tot) = arrow_offsets(l, n);
    let nv = l.dims().len();
    let mut cols = Vec::new();
    for v in 0..nv {
        for i in 0..l.dims()[v] {
            for j in 0..n.dims()[v] {
                // H = E_ij at vertex v
                let mut col = vec![f.zero(); tot];
                for (k, a) in l.bq().quiver().arrows().iter().enumerate() {
                    let zb = n.dims()[a.from];
                    if a.from == v {
                        // L(a) E_ij: column j gets L(a)[:, i]
                        for r in 0..l.dims()[a.to] {
                            let x = l.map(k).get(r, i);
                            if !x.is_zero() {
                                let idx = offs[k] + r * zb + j;
                                col[idx] = &col[idx] + x;
                            }
                        }
                    }
                    if a.to == v {
                        // - E_ij N(a): row i gets N(a)[j, :]
                        for c in 0..zb {
                            let x = n.map(k).get(j, c);
                            if !x.is_zero() {
                                let idx = offs[k] + i * zb + c;
                                col[idx] = &col[idx] - x;
                            }
                        }
                    }
                }
                cols.push(col);
            }
        }
    }
    Matrix::from_columns(f, tot, &cols)
}

/// Cocycle description of `Ext^1(n, l)`: extensions `0 -> l -> E -> n -> 0`.
#[derive(Debug, Clone)]
pub struct Ext1Data {
    /// Columns: basis of the cocycles.
    pub cocycles: Matrix,
    /// Columns: basis of the coboundaries.
    pub coboundaries: Matrix,
    /// Cocycles whose classes form a basis of `Ext^1`.
    pub classes: Vec<Vec<Scalar>>,
}

impl Ext1Data {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }
}

pub fn ext1_cocycles(n: &Representation, l: &Representation) -> Ext1Data {
    let f = l.field();
    let cocycles = linalg::kernel_basis(&linearized_relations(l, n));
    let coboundaries = linalg::column_basis(&coboundary_matrix(l, n));
    let tot = cocycles.rows();
    let mut span = coboundaries.clone();
    let mut rk = span.cols();
    let mut classes = Vec::new();
    for c in 0..cocycles.cols() {
        let cand = Matrix::hstack(f, tot, &[&span, &cocycles.select_columns(&[c])]);
        let r = linalg::rank(&cand);
        if r > rk {
            span = cand;
            rk = r;
            classes.push(cocycles.col(c));
        }
    }
    Ext1Data { cocycles, coboundaries, classes }
}

/// Middle term `E(a) = [[L(a), Z(a)], [0, N(a)]]` on `E(v) = L(v) + N(v)`.
pub fn extension_middle(l: &Representation, n: &Representation, z: &[Scalar]) -> Result<Representation> {
    let f = l.field();
    let (offs, tot) = arrow_offsets(l, n);
    if z.len() != tot {
        return Err(Error::Shape(format!("cocycle of length {}, expected {tot}", z.len())));
    }
    let dims: Vec<usize> = l.dims().iter().zip(n.dims()).map(|(a, b)| a + b).collect();
    let maps = l
        .bq()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (lt, ls, nt, ns) = (l.dims()[a.to], l.dims()[a.from], n.dims()[a.to], n.dims()[a.from]);
            let mut m = Matrix::zeros(lt + nt, ls + ns, f);
            m.put(0, 0, l.map(k));
            m.put(lt, ls, n.map(k));
            let zm = Matrix::from_fn(lt, ns, f, |i, j| z[offs[k] + i * ns + j].clone());
            m.put(0, ls, &zm);
            m
        })
        .collect();
    let e = Representation::new(l.bq().clone(), dims, maps)?;
    if !e.validate() {
        return Err(Error::invariant("extension", "middle term violates a relation; class is not a cocycle"));
    }
    Ok(e)
}

/// Tangent space of the representation variety at `m`.
#[derive(Debug, Clone)]
pub struct TangentSpace {
    /// Columns: tangent vectors, arrow blocks `Z(a)` flattened row-major.
    pub basis: Matrix,
}

impl TangentSpace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Splits a flat tangent vector into per-arrow matrices.
    pub fn to_arrows(m: &Representation, z: &[Scalar]) -> Vec<Matrix> {
        let f = m.field();
        let mut off = 0;
        m.bq()
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (m.dims()[a.to], m.dims()[a.from]);
                let mm = Matrix::from_fn(r, c, f, |i, j| z[off + i * c + j].clone());
                off += r * c;
                mm
            })
            .collect()
    }
}

pub fn tangent_space(m: &Representation) -> TangentSpace {
    TangentSpace { basis: linalg::kernel_basis(&linearized_relations(m, m)) }
}
