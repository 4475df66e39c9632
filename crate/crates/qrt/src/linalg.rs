//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! All routines are deterministic: RREF pivots are chosen left to right and
//! kernel bases put free variables to unit vectors in column order.

use crate::error::{Error, Result};
use crate::exactfield::{FieldSpec, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|s| s.render()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: FieldSpec, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::Shape("entries from a different field".into()));
        }
        Ok(Matrix { rows, cols, field, data })
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldSpec, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, field, |i, j| field.int(rows[i][j]))
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols);
        Matrix { rows: r, cols, field, data }
    }

    /// A single column.
    pub fn column_vector(field: FieldSpec, v: Vec<Scalar>) -> Self {
        Matrix { rows: v.len(), cols: 1, field, data: v }
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_fn(rows, cols.len(), field, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "product of {}x{} and {}x{}", self.rows, self.cols, o.rows, o.cols);
        let mut out = Matrix::zeros(self.rows, o.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.shape(), o.shape());
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        self.with_data(data)
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.shape(), o.shape());
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i);
        }
        acc
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), self.field, |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, self.field, |i, j| self.get(idx[i], j).clone())
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(r1 - r0, c1 - c0, self.field, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Writes `block` with its top-left corner at `(r, c)`.
    pub fn put(&mut self, r: usize, c: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols, field);
        let mut c = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            out.put(0, c, p);
            c += p.cols;
        }
        out
    }

    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Matrix::zeros(rows, cols, field);
        let mut r = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            out.put(r, 0, p);
            r += p.rows;
        }
        out
    }

    pub fn block_diag(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols, field);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            out.put(r, c, p);
            r += p.rows;
            c += p.cols;
        }
        out
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j) - &(&f * a.get(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Columns form a basis of the null space, free variables set to unit vectors.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let field = m.field();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zeros(cols, free.len(), field);
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, field.one());
        for (row, &p) in pivots.iter().enumerate() {
            let v = -r.get(row, f);
            out.set(p, k, v);
        }
    }
    out
}

/// Pivot columns of `m`: a basis of its column space drawn from its own columns.
pub fn column_basis(m: &Matrix) -> Matrix {
    let (_, p) = rref(m);
    m.select_columns(&p)
}

/// Unit vectors completing the column space of `m` to the whole space,
/// chosen greedily in index order.
pub fn complement_units(m: &Matrix) -> Vec<usize> {
    let n = m.rows();
    let aug = Matrix::hstack(m.field(), n, &[m, &Matrix::identity(n, m.field())]);
    let (_, p) = rref(&aug);
    p.into_iter().filter(|&c| c >= m.cols()).map(|c| c - m.cols()).collect()
}

/// Some `X` with `a X = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(a.rows(), b.rows());
    let field = a.field();
    let aug = Matrix::hstack(field, a.rows(), &[a, b]);
    let (r, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= a.cols()) {
        return None;
    }
    let mut x = Matrix::zeros(a.cols(), b.cols(), field);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, r.get(row, a.cols() + j).clone());
        }
    }
    Some(x)
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Shape("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let aug = Matrix::hstack(m.field(), n, &[m, &Matrix::identity(n, m.field())]);
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return Err(Error::DivisionByZero);
    }
    Ok(r.submatrix(0, n, n, 2 * n))
}

/// Determinant: Bareiss over the integers after clearing row denominators
/// for the rationals, plain elimination for prime fields.
pub fn det(m: &Matrix) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.rows(), m.cols())));
    }
    let field = m.field();
    let n = m.rows();
    if n == 0 {
        return Ok(field.one());
    }
    match field {
        FieldSpec::Rationals => {
            let mut scale = BigInt::one();
            let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
            for i in 0..n {
                let row: Vec<&BigRational> = m.row(i).iter().map(|s| s.as_rational().unwrap()).collect();
                let l = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                scale *= &l;
                a.push(row.iter().map(|r| r.numer() * (&l / r.denom())).collect());
            }
            let d = bareiss(a);
            Ok(Scalar::Rat(BigRational::new(d, scale)))
        }
        FieldSpec::Prime(p) => {
            let p = p as u64;
            let mut a: Vec<Vec<u64>> = (0..n).map(|i| m.row(i).iter().map(|s| s.residue() as u64).collect()).collect();
            let mut d = 1u64;
            for c in 0..n {
                let Some(r) = (c..n).find(|&i| a[i][c] != 0) else { return Ok(field.zero()) };
                if r != c {
                    a.swap(r, c);
                    d = (p - d) % p;
                }
                d = d * a[c][c] % p;
                let inv = field.int(a[c][c] as i64).inv()?.residue() as u64;
                for i in c + 1..n {
                    if a[i][c] == 0 {
                        continue;
                    }
                    let f = a[i][c] * inv % p;
                    for j in c..n {
                        a[i][j] = (a[i][j] + p * p - f * a[c][j] % p) % p;
                    }
                }
            }
            Ok(field.int(d as i64))
        }
    }
}

/// Fraction-free determinant of an integer matrix.
pub fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(r, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Cofactor expansion; exponential, used as a reference in tests.
pub fn det_cofactor(m: &Matrix) -> Scalar {
    let n = m.rows();
    let field = m.field();
    if n == 0 {
        return field.one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = field.zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = m.submatrix(1, n, 0, n).select_columns(&keep);
        let term = m.get(0, j) * &det_cofactor(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Classical adjugate, by cofactors; `adj(m) m = det(m) I`.
pub fn adjugate(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Shape("adjugate of a non-square matrix".into()));
    }
    let n = m.rows();
    let field = m.field();
    if n == 0 {
        return Ok(Matrix::zeros(0, 0, field));
    }
    if n == 1 {
        return Ok(Matrix::identity(1, field));
    }
    let mut out = Matrix::zeros(n, n, field);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = m.select_rows(&rows).select_columns(&cols);
            let d = det(&minor)?;
            out.set(i, j, if (i + j) % 2 == 0 { d } else { -d });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Univariate polynomials

/// Polynomial with coefficients lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|s| s.render()).collect();
        write!(f, "Poly[{}]", c.join(", "))
    }
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }
    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: vec![] }
    }
    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }
    /// `t - c`.
    pub fn linear_root(c: &Scalar) -> Self {
        let f = c.field();
        Poly::new(f, vec![-c, f.one()])
    }
    pub fn from_ints(field: FieldSpec, c: &[i64]) -> Self {
        Poly::new(field, c.iter().map(|&x| field.int(x)).collect())
    }
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }
    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field, (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field, (0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().unwrap())
    }
    /// Quotient and remainder.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((Poly::new(self.field, q), Poly::new(self.field, r)))
    }
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).unwrap().1;
            a = b;
            b = r;
        }
        a.monic()
    }
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &self.field.int(k as i64)).collect(),
        )
    }
    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.divrem(m).unwrap().1;
        let mut acc = Poly::constant(self.field.one()).divrem(m).unwrap().1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(m).unwrap().1;
            }
            base = base.mul(&base).divrem(m).unwrap().1;
            e >>= 1;
        }
        acc
    }
}

/// The unique polynomial of degree `< points.len()` through all points.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> Result<Poly> {
    let Some(first) = points.first() else {
        return Err(Error::Parameters("interpolation needs at least one point".into()));
    };
    let field = first.0.field();
    if let Some(q) = field.size() {
        if (points.len() as u64) > q {
            return Err(Error::Parameters(format!("{} points requested in a field of size {q}", points.len())));
        }
    }
    for i in 0..points.len() {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::Parameters(format!("repeated abscissa {}", points[i].0)));
            }
        }
    }
    let mut acc = Poly::zero(field);
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::constant(field.one());
        let mut denom = field.one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Poly::linear_root(xj));
                denom = &denom * &(xi - xj);
            }
        }
        acc = acc.add(&basis.scale(&(yi * &denom.inv()?)));
    }
    Ok(acc)
}

/// Characteristic polynomial `det(t I - m)` via Hessenberg reduction.
pub fn char_poly(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let field = m.field();
    let mut h = m.clone();
    for mcol in 1..n.saturating_sub(1) {
        let c = mcol - 1;
        let Some(i) = (mcol..n).find(|&i| !h.get(i, c).is_zero()) else { continue };
        if i != mcol {
            for j in 0..n {
                h.data.swap(i * n + j, mcol * n + j);
            }
            for r in 0..n {
                h.data.swap(r * n + i, r * n + mcol);
            }
        }
        let piv = h.get(mcol, c).inv().unwrap();
        for j in mcol + 1..n {
            let u = h.get(j, c) * &piv;
            if u.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = h.get(j, k) - &(&u * h.get(mcol, k));
                h.set(j, k, v);
            }
            for r in 0..n {
                let v = h.get(r, mcol) + &(&u * h.get(r, j));
                h.set(r, mcol, v);
            }
        }
    }
    // 1-indexed recurrence on the Hessenberg form
    let hh = |i: usize, j: usize| h.get(i - 1, j - 1).clone();
    let mut p: Vec<Poly> = vec![Poly::constant(field.one())];
    for k in 1..=n {
        let mut pk = Poly::linear_root(&hh(k, k)).mul(&p[k - 1]);
        let mut t = field.one();
        for i in (1..k).rev() {
            t = &t * &hh(i + 1, i);
            let c = &hh(i, k) * &t;
            pk = pk.sub(&p[i - 1].scale(&c));
        }
        p.push(pk);
    }
    p.pop().unwrap()
}

/// Roots of `f` lying in its field, without multiplicity, sorted by rendering.
pub fn roots_in_field(f: &Poly) -> Vec<Scalar> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let mut out = match f.field() {
        FieldSpec::Prime(p) if p <= 4096 => (0..p as i64).map(|k| f.field().int(k)).filter(|x| f.eval(x).is_zero()).collect(),
        FieldSpec::Prime(p) => prime_field_roots(f, p as u64),
        FieldSpec::Rationals => rational_roots(f),
    };
    out.sort_by_key(|s| s.render());
    out.dedup();
    out
}

fn prime_field_roots(f: &Poly, p: u64) -> Vec<Scalar> {
    let field = f.field();
    let t = Poly::new(field, vec![field.zero(), field.one()]);
    let tp = t.powmod(p, f);
    let g = f.gcd(&tp.sub(&t));
    let mut out = Vec::new();
    let mut stack = vec![g];
    let mut a = 1i64;
    while let Some(g) = stack.pop() {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => out.push(-&g.monic().coeff(0)),
            Some(_) => {
                // equal-degree splitting with (t + a)^((p-1)/2) - 1
                let mut split = None;
                while split.is_none() {
                    let shift = Poly::new(field, vec![field.int(a), field.one()]);
                    a += 1;
                    let h = shift.powmod((p - 1) / 2, &g).sub(&Poly::constant(field.one()));
                    let d = g.gcd(&h);
                    if let Some(dd) = d.degree() {
                        if dd > 0 && dd < g.degree().unwrap() {
                            split = Some(d);
                        }
                    }
                }
                let d = split.unwrap();
                let q = g.divrem(&d).unwrap().0;
                stack.push(d);
                stack.push(q);
            }
        }
    }
    out
}

fn divisors(n: &BigInt, cap: u64) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64()?;
    if small > cap {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots by the rational root theorem; coefficients whose integer
/// normalization exceeds 10^12 are not factored and yield no candidates.
fn rational_roots(f: &Poly) -> Vec<Scalar> {
    let field = f.field();
    let l = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().unwrap().denom()));
    let mut ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&l / r.denom())
        })
        .collect();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(field.zero());
        while ints.first().is_some_and(|c| c.is_zero()) {
            ints.remove(0);
        }
    }
    if ints.len() < 2 {
        return out;
    }
    let (Some(us), Some(vs)) = (divisors(&ints[0], 1_000_000_000_000), divisors(ints.last().unwrap(), 1_000_000_000_000)) else {
        return out;
    };
    let g = Poly::new(field, ints.iter().map(|c| field.bigint(c)).collect());
    for u in &us {
        for v in &vs {
            for s in [1, -1] {
                let cand = Scalar::Rat(BigRational::new(u * s, v.clone()));
                if g.eval(&cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(2, q());
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));
        let m = Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(rref(&m), (Matrix::from_ints(q(), &[&[1, 2], &[0, 0]]), vec![0]));
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(rref(&Matrix::from_ints(f2, &[&[1, 1], &[1, 2]])).1, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3, q())).cols(), 0);
        let k = kernel_basis(&Matrix::zeros(2, 3, q()));
        assert_eq!(k, Matrix::identity(3, q()));
        let k = kernel_basis(&Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]));
        assert_eq!(k, Matrix::from_ints(q(), &[&[-2], &[1]]));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&Matrix::identity(4, q())).unwrap(), q().one());
        assert_eq!(det(&Matrix::from_ints(q(), &[&[0, 1], &[1, 0]])).unwrap(), q().int(-1));
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(det(&Matrix::from_ints(f3, &[&[2, 1], &[1, 2]])).unwrap(), f3.zero());
        assert!(det(&Matrix::zeros(2, 3, q())).is_err());
        let half = q().fraction(1, 2).unwrap();
        let m = Matrix::from_fn(2, 2, q(), |i, j| if i == j { half.clone() } else { q().zero() });
        assert_eq!(det(&m).unwrap(), q().fraction(1, 4).unwrap());
    }

    #[test]
    fn interpolation_examples() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| (q().int(a), q().int(b))).collect::<Vec<_>>();
        assert_eq!(interpolate(&pts(&[(0, 1), (1, 1)])).unwrap(), Poly::from_ints(q(), &[1]));
        assert_eq!(interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap(), Poly::from_ints(q(), &[0, 0, 1]));
        assert_eq!(interpolate(&pts(&[(0, 0), (1, 0), (2, 2)])).unwrap(), Poly::from_ints(q(), &[0, -1, 1]));
        assert!(interpolate(&pts(&[(1, 0), (1, 2)])).is_err());
        let f2 = FieldSpec::prime(2).unwrap();
        let three: Vec<_> = (0..3).map(|k| (f2.int(k), f2.zero())).collect();
        assert!(interpolate(&three).is_err());
    }

    #[test]
    fn char_poly_and_roots() {
        let m = Matrix::from_ints(q(), &[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let cp = char_poly(&m);
        assert_eq!(cp, Poly::from_ints(q(), &[-12, 16, -7, 1]));
        assert_eq!(roots_in_field(&cp), vec![q().int(2), q().int(3)]);
        let f = FieldSpec::prime(1_000_003).unwrap();
        let g = Poly::linear_root(&f.int(5)).mul(&Poly::linear_root(&f.int(77))).mul(&Poly::from_ints(f, &[1, 0, 1]));
        let r = roots_in_field(&g);
        assert!(r.contains(&f.int(5)) && r.contains(&f.int(77)));
        let h = Poly::from_ints(q(), &[-1, 0, 2]);
        assert!(roots_in_field(&h).is_empty());
        let k = Poly::from_ints(q(), &[3, -7, 2]);
        assert_eq!(roots_in_field(&k), vec![q().fraction(1, 2).unwrap(), q().int(3)]);
    }

    #[test]
    fn adjugate_identity() {
        let m = Matrix::from_ints(q(), &[&[1, 2, 0], &[3, -1, 4], &[0, 2, 2]]);
        let a = adjugate(&m).unwrap();
        let d = det(&m).unwrap();
        assert_eq!(a.mul(&m), Matrix::identity(3, q()).scale(&d));
    }
}
