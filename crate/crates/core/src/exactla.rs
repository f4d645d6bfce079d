//! Dense exact linear algebra over a prime field `F_p`.
//!
//! Everything here is deterministic: echelon forms are fully reduced, so two
//! subspaces are equal exactly when their stored bases are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Default modulus used throughout the crate.
pub const DEFAULT_PRIME: u64 = 10007;

/// A prime field `F_p`. Elements are `u64` values in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldPrime {
    p: u64,
}

impl Default for FieldPrime {
    fn default() -> Self {
        FieldPrime { p: DEFAULT_PRIME }
    }
}

impl FieldPrime {
    /// Returns `None` unless `p` is a prime below 2^31 (products must fit in `u64`).
    pub fn new(p: u64) -> Option<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return None;
        }
        Some(FieldPrime { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Signed representative in `(-p/2, p/2]`, for display.
    pub fn signed(self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldPrime,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} mod {} [", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.signed(self.get(r, c)))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldPrime, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows. All rows must have length `cols`.
    pub fn from_rows(field: FieldPrime, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Self {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let mut m = Matrix::zeros(field, rows, cols);
        for (r, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), cols, "column count mismatch in row {r}");
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, field.reduce(x));
            }
        }
        m
    }

    /// Builds a matrix from already reduced row-major data.
    pub fn from_data(field: FieldPrime, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.p));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: FieldPrime, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Rows as signed integers, for serialization and display.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let p = f.p;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: u64) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix::from_data(f, self.rows, self.cols, data)
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// Block-diagonal matrix of the given blocks.
    pub fn block_diag(field: FieldPrime, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Stacks matrices with equal column count on top of each other.
    pub fn vstack(field: FieldPrime, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for b in parts {
            assert_eq!(b.cols, cols);
            out.paste(r0, 0, b);
            r0 += b.rows;
        }
        out
    }

    /// Places matrices with equal row count side by side.
    pub fn hstack(field: FieldPrime, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for b in parts {
            assert_eq!(b.rows, rows);
            out.paste(0, c0, b);
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    /// Sub-block `rows x cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    /// Reduced row echelon form together with the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if pr != lead {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, lead * cols + k);
                }
            }
            let inv = f.inv(self.get(lead, c));
            for k in c..cols {
                let v = self.data[lead * cols + k];
                self.data[lead * cols + k] = v * inv % p;
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for k in c..cols {
                    let l = self.data[lead * cols + k];
                    if l != 0 {
                        let idx = r * cols + k;
                        self.data[idx] = (self.data[idx] + neg * l) % p;
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            vectors.push(v);
        }
        Subspace::span(f, self.cols, &vectors)
    }

    /// Column space as a subspace of `F_p^rows`.
    pub fn column_space(&self) -> Subspace {
        let cols: Vec<Vec<u64>> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::span(self.field, self.rows, &cols)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::hstack(self.field, n, &[self, &Matrix::identity(self.field, n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// One solution of `A x = b`, if the system is consistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let bcol = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        let aug = Matrix::hstack(self.field, self.rows, &[self, &bcol]);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from constant term upwards.
    ///
    /// Uses the Hessenberg reduction, so it works in every characteristic.
    pub fn charpoly(&self) -> Vec<u64> {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity transforms
        for col in 0..n.saturating_sub(2) {
            let Some(piv) = (col + 1..n).find(|&r| h.get(r, col) != 0) else {
                continue;
            };
            if piv != col + 1 {
                h.swap_rows(piv, col + 1);
                h.swap_cols(piv, col + 1);
            }
            let inv = f.inv(h.get(col + 1, col));
            for r in col + 2..n {
                let factor = f.mul(h.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                // row_r -= factor * row_{col+1}; col_{col+1} += factor * col_r
                for k in 0..n {
                    let v = f.sub(h.get(r, k), f.mul(factor, h.get(col + 1, k)));
                    h.set(r, k, v);
                }
                for k in 0..n {
                    let v = f.add(h.get(k, col + 1), f.mul(factor, h.get(k, r)));
                    h.set(k, col + 1, v);
                }
            }
        }
        // recurrence for leading principal minors of xI - H
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_{i,k} * prod_{j=i+1..k} h_{j,j-1} * p_i
            let mut next = poly_mul_linear(f, &polys[k], f.neg(h.get(k, k)));
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                if prod == 0 {
                    break;
                }
                let coef = f.mul(h.get(i, k), prod);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Distinct eigenvalues lying in `F_p`, ascending.
    pub fn eigenvalues(&self) -> Vec<u64> {
        poly_roots(self.field, &self.charpoly())
    }
}

fn poly_mul_linear(f: FieldPrime, poly: &[u64], c: u64) -> Vec<u64> {
    // (x + c) * poly
    let mut out = vec![0u64; poly.len() + 1];
    for (d, &a) in poly.iter().enumerate() {
        out[d + 1] = f.add(out[d + 1], a);
        out[d] = f.add(out[d], f.mul(a, c));
    }
    out
}

fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

fn poly_rem(f: FieldPrime, a: &[u64], b: &[u64]) -> Vec<u64> {
    let b = poly_trim(b.to_vec());
    let mut r = poly_trim(a.to_vec());
    let lead_inv = f.inv(*b.last().unwrap());
    while r.len() >= b.len() && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - b.len();
        let factor = f.mul(*r.last().unwrap(), lead_inv);
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, c));
        }
        r = poly_trim(r);
        if r.len() < b.len() {
            break;
        }
    }
    r
}

fn poly_mulmod(f: FieldPrime, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    poly_rem(f, &out, m)
}

fn poly_gcd(f: FieldPrime, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Distinct roots in `F_p` of a polynomial (constant term first), ascending.
pub fn poly_roots(f: FieldPrime, poly: &[u64]) -> Vec<u64> {
    let poly = poly_trim(poly.to_vec());
    if poly.len() <= 1 {
        return Vec::new();
    }
    // split off the product of linear factors: gcd(poly, x^p - x)
    let mut xp = vec![1u64];
    let mut base = poly_rem(f, &[0, 1], &poly);
    let mut e = f.p();
    while e > 0 {
        if e & 1 == 1 {
            xp = poly_mulmod(f, &xp, &base, &poly);
        }
        base = poly_mulmod(f, &base, &base, &poly);
        e >>= 1;
    }
    xp.resize(xp.len().max(2), 0);
    xp[1] = f.sub(xp[1], 1);
    let g = poly_gcd(f, &poly, &xp);
    let degree = poly_trim(g.clone()).len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    let eval = |x: u64| g.iter().rev().fold(0u64, |acc, &c| f.add(f.mul(acc, x), c));
    let mut roots = Vec::with_capacity(degree);
    for x in 0..f.p() {
        if eval(x) == 0 {
            roots.push(x);
            if roots.len() == degree {
                break;
            }
        }
    }
    roots
}

/// A subspace of `F_p^n`, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldPrime,
    ambient_dim: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldPrime, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldPrime, ambient_dim: usize) -> Self {
        Matrix::identity(field, ambient_dim).column_space()
    }

    /// Span of the given vectors, in canonical form.
    pub fn span(field: FieldPrime, ambient_dim: usize, vectors: &[Vec<u64>]) -> Self {
        if vectors.is_empty() || ambient_dim == 0 {
            return Subspace::zero(field, ambient_dim);
        }
        let mut m = Matrix::zeros(field, vectors.len(), ambient_dim);
        for (r, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient_dim);
            m.data[r * ambient_dim..(r + 1) * ambient_dim].copy_from_slice(v);
        }
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in the echelon basis; `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        let c: Vec<u64> = self.pivots.iter().map(|&p| v[p]).collect();
        let f = self.field;
        let mut recon = vec![0u64; self.ambient_dim];
        for (coef, b) in c.iter().zip(&self.basis) {
            if *coef == 0 {
                continue;
            }
            for (r, &x) in recon.iter_mut().zip(b) {
                *r = f.add(*r, f.mul(*coef, x));
            }
        }
        (recon.as_slice() == v).then_some(c)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x = A a = B b  <=>  [A | -B] (a, b) = 0
        let f = self.field;
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(f, self.ambient_dim);
        }
        let a = self.basis_matrix();
        let b = other.basis_matrix().scale(f.neg(1));
        let ns = Matrix::hstack(f, self.ambient_dim, &[&a, &b]).nullspace();
        let vecs: Vec<Vec<u64>> = ns.basis.iter().map(|v| a.mul_vec(&v[..k])).collect();
        Subspace::span(f, self.ambient_dim, &vecs)
    }

    /// Projection onto the quotient `ambient / self` and a section of it.
    ///
    /// The complement is spanned by the standard basis vectors at the
    /// non-pivot coordinates of the echelon basis.
    pub fn quotient_data(&self) -> QuotientData {
        let f = self.field;
        let n = self.ambient_dim;
        let mut is_pivot = vec![None; n];
        for (i, &p) in self.pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let complement: Vec<usize> = (0..n).filter(|&c| is_pivot[c].is_none()).collect();
        let q = complement.len();
        let mut position = vec![usize::MAX; n];
        for (j, &c) in complement.iter().enumerate() {
            position[c] = j;
        }
        let mut projection = Matrix::zeros(f, q, n);
        for c in 0..n {
            match is_pivot[c] {
                None => projection.set(position[c], c, 1),
                Some(i) => {
                    // e_c = u_i - (u_i - e_c); the class of e_c is minus the non-pivot tail of u_i
                    for &d in &complement {
                        let v = self.basis[i][d];
                        if v != 0 {
                            projection.set(position[d], c, f.neg(v));
                        }
                    }
                }
            }
        }
        let mut section = Matrix::zeros(f, n, q);
        for (j, &c) in complement.iter().enumerate() {
            section.set(c, j, 1);
        }
        QuotientData {
            projection,
            section,
        }
    }
}

/// Projection `ambient -> ambient / U` and its canonical right inverse.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub projection: Matrix,
    pub section: Matrix,
}

impl QuotientData {
    pub fn quotient_dim(&self) -> usize {
        self.projection.rows()
    }
}

/// Map induced on quotients: `V/A -> W/B` by `f: V -> W`, assuming `f(A) ⊆ B`.
pub fn induced_on_quotients(f: &Matrix, source: &QuotientData, target: &QuotientData) -> Matrix {
    target.projection.mul(f).mul(&source.section)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> FieldPrime {
        FieldPrime::default()
    }

    #[test]
    fn rank_examples() {
        let f = fp();
        assert_eq!(Matrix::identity(f, 3).rank(), 3);
        assert_eq!(Matrix::zeros(f, 2, 5).rank(), 0);
        let m = Matrix::from_rows(f, 2, 2, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        let f = fp();
        assert_eq!(Matrix::identity(f, 3).nullspace().dim(), 0);
        assert_eq!(Matrix::zeros(f, 2, 3).nullspace().dim(), 3);
        let ns = Matrix::from_rows(f, 1, 2, &[vec![1, 1]]).nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis()[0], vec![1, f.reduce(-1)]);
    }

    #[test]
    fn quotient_examples() {
        let f = fp();
        let q = Subspace::zero(f, 2).quotient_data();
        assert_eq!(q.projection, Matrix::identity(f, 2));
        let q = Subspace::full(f, 2).quotient_data();
        assert_eq!(q.quotient_dim(), 0);
        let u = Subspace::span(f, 2, &[vec![1, 0]]);
        let q = u.quotient_data();
        assert_eq!(q.quotient_dim(), 1);
        assert_eq!(q.projection, Matrix::from_rows(f, 1, 2, &[vec![0, 1]]));
    }

    #[test]
    fn quotient_kills_subspace_and_section_splits() {
        let f = fp();
        let u = Subspace::span(f, 4, &[vec![1, 2, 0, 3], vec![0, 1, 1, 1]]);
        let q = u.quotient_data();
        for b in u.basis() {
            assert!(q.projection.mul_vec(b).iter().all(|&x| x == 0));
        }
        let id = q.projection.mul(&q.section);
        assert_eq!(id, Matrix::identity(f, 2));
    }

    #[test]
    fn intersection_and_sum() {
        let f = fp();
        let a = Subspace::span(f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(f, 3, &[vec![0, 1, 0]]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn inverse_and_solve() {
        let f = fp();
        let m = Matrix::from_rows(f, 2, 2, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let sing = Matrix::from_rows(f, 2, 2, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
        let x = m.solve(&[3, 2]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![3, 2]);
        assert!(sing.solve(&[1, 0]).is_none());
        assert_eq!(Matrix::zeros(f, 0, 0).inverse(), Some(Matrix::zeros(f, 0, 0)));
    }

    #[test]
    fn charpoly_and_eigenvalues() {
        let f = fp();
        // diag(2, 5) conjugated by an upper triangular matrix
        let m = Matrix::from_rows(f, 3, 3, &[vec![2, 1, 0], vec![0, 5, 7], vec![0, 0, 2]]);
        assert_eq!(m.eigenvalues(), vec![2, 5]);
        let cp = m.charpoly();
        // (x-2)^2 (x-5) = x^3 - 9x^2 + 24x - 20
        assert_eq!(cp, vec![f.reduce(-20), 24, f.reduce(-9), 1]);
        let nil = Matrix::from_rows(f, 2, 2, &[vec![0, 1], vec![0, 0]]);
        assert_eq!(nil.eigenvalues(), vec![0]);
        // x^2 + 1 has no roots mod 10007 (10007 = 3 mod 4)
        let rot = Matrix::from_rows(f, 2, 2, &[vec![0, -1], vec![1, 0]]);
        assert!(rot.eigenvalues().is_empty());
    }

    #[test]
    fn charpoly_matches_cayley_hamilton() {
        let f = fp();
        let m = Matrix::from_rows(
            f,
            4,
            4,
            &[
                vec![1, 2, 3, 4],
                vec![0, 1, 5, 2],
                vec![3, 0, 0, 1],
                vec![7, 1, 1, 1],
            ],
        );
        let cp = m.charpoly();
        let mut acc = Matrix::zeros(f, 4, 4);
        for (d, &c) in cp.iter().enumerate() {
            acc = acc.add(&m.pow(d as u32).scale(c));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn field_rejects_composites() {
        assert!(FieldPrime::new(10007).is_some());
        assert!(FieldPrime::new(2).is_some());
        assert!(FieldPrime::new(10005).is_none());
        assert!(FieldPrime::new(1).is_none());
    }
}
