//! Tits forms of a bound quiver.
//!
//! `<d, e> = sum_x d(x) e(x) - sum_a d(s a) e(t a) + sum_rho d(s rho) e(t rho)`
//! and `q(d) = <d, d>`.

use crate::error::{Error, Result};
use crate::quiver::{BoundQuiver, DimVector};

/// Default cap on the number of candidates examined by
/// [`TitsForm::classify_singular`].
pub const DEFAULT_SEARCH_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TitsForm {
    n: usize,
    arrows: Vec<(usize, usize)>,
    relations: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityCertificate {
    pub singular: bool,
    pub witness: Option<DimVector>,
    pub candidates_checked: u128,
    pub note: String,
}

impl TitsForm {
    pub fn new(bq: &BoundQuiver) -> Self {
        TitsForm {
            n: bq.n_vertices(),
            arrows: bq.quiver().arrows().iter().map(|a| (a.from, a.to)).collect(),
            relations: bq.relations().iter().map(|r| (r.source, r.target)).collect(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn bilinear(&self, d: &[i64], e: &[i64]) -> i64 {
        assert_eq!(d.len(), self.n);
        assert_eq!(e.len(), self.n);
        let mut s: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        for &(x, y) in &self.arrows {
            s -= d[x] * e[y];
        }
        for &(x, y) in &self.relations {
            s += d[x] * e[y];
        }
        s
    }

    pub fn quadratic(&self, d: &[i64]) -> i64 {
        self.bilinear(d, d)
    }

    /// `a(d) = sum_x d(x)^2 - q(d)`.
    pub fn a_const(&self, d: &[i64]) -> i64 {
        d.iter().map(|x| x * x).sum::<i64>() - self.quadratic(d)
    }

    /// Decides whether `d` is singular: `q(d) = 0` and some `0 <= x <= d` has
    /// `q(x) = 0` and `|<x, d>| = 2`. Candidates are scanned in lexicographic
    /// order (first vertex most significant); the first witness is returned.
    pub fn classify_singular(&self, d: &[i64], cap: u128) -> Result<SingularityCertificate> {
        if d.iter().any(|&x| x < 0) {
            return Err(Error::Parameters("dimension vectors are non-negative".into()));
        }
        let space: u128 = d.iter().map(|&x| x as u128 + 1).product();
        if space > cap {
            return Err(Error::Budget(format!("{space} candidates exceed the cap {cap}")));
        }
        if self.quadratic(d) != 0 {
            return Ok(SingularityCertificate {
                singular: false,
                witness: None,
                candidates_checked: 0,
                note: "q(d) != 0".into(),
            });
        }
        let mut x = vec![0i64; self.n];
        let mut checked = 0u128;
        loop {
            checked += 1;
            if self.quadratic(&x) == 0 && self.bilinear(&x, d).abs() == 2 {
                debug_assert!(x.iter().zip(d).all(|(a, b)| a <= b));
                return Ok(SingularityCertificate {
                    singular: true,
                    witness: Some(x),
                    candidates_checked: checked,
                    note: format!("exhaustive over {space} candidates"),
                });
            }
            // odometer, last vertex fastest
            let mut i = self.n;
            loop {
                if i == 0 {
                    return Ok(SingularityCertificate {
                        singular: false,
                        witness: None,
                        candidates_checked: checked,
                        note: format!("exhaustive over {space} candidates"),
                    });
                }
                i -= 1;
                if x[i] < d[i] {
                    x[i] += 1;
                    break;
                }
                x[i] = 0;
            }
        }
    }

    /// Every vector with entries in `[0, bound]`, lexicographic order.
    pub fn box_vectors(&self, bound: i64) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut x = vec![0i64; self.n];
        loop {
            out.push(x.clone());
            let mut i = self.n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if x[i] < bound {
                    x[i] += 1;
                    break;
                }
                x[i] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldSpec;
    use crate::quiver::{catalog, CatalogId};

    fn form(id: CatalogId) -> TitsForm {
        TitsForm::new(&catalog(&id, FieldSpec::Rationals).unwrap().0)
    }

    fn c2222() -> TitsForm {
        form(CatalogId::Canonical { arms: vec![2, 2, 2, 2], lambdas: vec![FieldSpec::Rationals.int(2)] })
    }

    #[test]
    fn quadratic_examples() {
        let k = form(CatalogId::Kronecker);
        assert_eq!(k.quadratic(&[0, 0]), 0);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(k.quadratic(&[a, b]), (a - b) * (a - b));
            }
        }
        // vertex order: sink, a1, b1, c1, d1, source
        let c = c2222();
        assert_eq!(c.bilinear(&[1, 1, 1, 1, 1, 1], &[3, 2, 2, 2, 2, 1]), -2);
        assert_eq!(c.quadratic(&[1; 6]), 0);
    }

    #[test]
    fn a_const_examples() {
        let k = form(CatalogId::Kronecker);
        assert_eq!(k.a_const(&[0, 0]), 0);
        assert_eq!(k.a_const(&[2, 2]), 8);
        for n in 0..5 {
            assert_eq!(k.a_const(&[n, n]), 2 * n * n);
        }
    }

    #[test]
    fn singular_examples() {
        let c = c2222();
        let d = [3, 2, 2, 2, 2, 1];
        let cert = c.classify_singular(&d, DEFAULT_SEARCH_CAP).unwrap();
        assert!(cert.singular);
        assert_eq!(cert.witness, Some(vec![1, 1, 1, 1, 1, 1]));
        let other = [2, 1, 1, 1, 1, 0];
        assert_eq!(c.quadratic(&other), 0);
        assert_eq!(c.bilinear(&other, &d).abs(), 2);
        let k = form(CatalogId::Kronecker);
        for n in 0..=4 {
            assert!(!k.classify_singular(&[n, n], DEFAULT_SEARCH_CAP).unwrap().singular);
        }
        assert!(matches!(c.classify_singular(&[9; 6], 1000), Err(Error::Budget(_))));
    }

    #[test]
    fn standard_h_is_not_singular() {
        assert!(!c2222().classify_singular(&[1; 6], DEFAULT_SEARCH_CAP).unwrap().singular);
    }
}
