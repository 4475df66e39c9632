use super::Representation;
use crate::exactfield::{FieldSpec, Scalar};
use crate::linalg::{self, Matrix};
use crate::quiver::CatalogShape;
use rand::Rng;

/// Uniform residue over a prime field, uniform integer in `[-bound, bound]`
/// over the rationals.
pub fn random_scalar<R: Rng>(field: FieldSpec, rng: &mut R, bound: i64) -> Scalar {
    match field {
        FieldSpec::Prime(p) => field.int(rng.gen_range(0..p as i64)),
        FieldSpec::Rationals => field.int(rng.gen_range(-bound..=bound)),
    }
}

fn random_matrix<R: Rng>(r: usize, c: usize, field: FieldSpec, rng: &mut R, zero_prob: f64) -> Matrix {
    Matrix::from_fn(r, c, field, |_, _| {
        if rng.gen_bool(zero_prob) {
            field.zero()
        } else {
            random_scalar(field, rng, 3)
        }
    })
}

/// Random invertible matrix per vertex.
pub fn random_gl<R: Rng>(dims: &[usize], field: FieldSpec, rng: &mut R) -> Vec<Matrix> {
    dims.iter()
        .map(|&d| loop {
            let m = random_matrix(d, d, field, rng, 0.0);
            if linalg::rank(&m) == d {
                break m;
            }
        })
        .collect()
}

/// Random valid representation of a catalog bound quiver with the given
/// dimension vector. Arrows entering the sink on the third and later arms
/// are solved for from the relations, with a random kernel component; if
/// the system is inconsistent the first two arms are cut at the sink.
pub fn random_catalog_rep<R: Rng>(
    bq: &std::sync::Arc<crate::quiver::BoundQuiver>,
    shape: &CatalogShape,
    dims: &[usize],
    rng: &mut R,
    zero_prob: f64,
) -> Representation {
    let f = bq.field();
    let arrows = bq.quiver().arrows();
    let mut maps: Vec<Matrix> =
        arrows.iter().map(|a| random_matrix(dims[a.to], dims[a.from], f, rng, zero_prob)).collect();
    let t = shape.arms.len();
    if t < 3 {
        return Representation::new(bq.clone(), dims.to_vec(), maps).expect("shapes");
    }
    let attempt = |maps: &mut Vec<Matrix>, rng: &mut R| -> bool {
        let m = Representation::new(bq.clone(), dims.to_vec(), maps.clone()).expect("shapes");
        let x = |i: usize| m.eval_path(&shape.arm_path(i));
        let (x1, x2) = (x(0), x(1));
        for j in 2..t {
            let c1 = if j == 2 { f.one() } else { shape.lambdas[j - 3].clone() };
            let rhs = x1.scale(&c1).add(&x2).neg();
            let arm = &shape.arm_arrows[j];
            let head = arm[0];
            let tail = crate::quiver::Path {
                source: shape.source,
                target: arrows[head].from,
                arrows: arm[1..].to_vec(),
            };
            let b = m.eval_path(&tail);
            // head * b = rhs  <=>  b^T head^T = rhs^T
            let Some(sol) = linalg::solve(&b.transpose(), &rhs.transpose()) else { return false };
            let ker = linalg::kernel_basis(&b.transpose());
            let noise = random_matrix(ker.cols(), sol.cols(), f, rng, zero_prob);
            maps[head] = sol.add(&ker.mul(&noise)).transpose();
        }
        true
    };
    if !attempt(&mut maps, rng) {
        for i in 0..2 {
            let h = shape.arm_arrows[i][0];
            maps[h] = Matrix::zeros(maps[h].rows(), maps[h].cols(), f);
        }
        assert!(attempt(&mut maps, rng), "homogeneous system is consistent");
    }
    let r = Representation::new(bq.clone(), dims.to_vec(), maps).expect("shapes");
    debug_assert!(r.validate());
    r
}
