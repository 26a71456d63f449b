//! Exact linear algebra: rational matrices, integer Hermite normal forms, and
//! full-rank lattices in Q^n.
//!
//! Lattices represent diagonal symmetry groups: a finite subgroup of (Q/Z)^n is
//! the quotient L/Z^n of a full-rank lattice Z^n ⊆ L ⊆ Q^n. Orders, duals,
//! intersections, membership and congruence solving are all exact. Integer
//! arithmetic is `i128` with checked operations; overflow surfaces as
//! `SizeLimitExceeded` rather than a wrong answer.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{denominator_lcm, QmodZ, Rational};

// ---------------------------------------------------------------------------
// rational matrices
// ---------------------------------------------------------------------------

/// Dense matrix over Q, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        QMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = QMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Rational::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        (0..self.cols).map(|j| self[(i, j)]).collect()
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)];
                    for j in 0..n {
                        let x = a[(col, j)];
                        let y = inv[(col, j)];
                        a[(r, j)] -= f * x;
                        inv[(r, j)] -= f * y;
                    }
                }
            }
        }
        Some(inv)
    }
}

impl core::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

// ---------------------------------------------------------------------------
// checked i128 helpers
// ---------------------------------------------------------------------------

const OVERFLOW: Error = Error::SizeLimitExceeded("integer overflow in lattice arithmetic");

fn cadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(OVERFLOW)
}

fn cmul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(OVERFLOW)
}

fn igcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns (g, x, y) with a·x + b·y = g ≥ 0.
fn extgcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = extgcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

// ---------------------------------------------------------------------------
// integer column Hermite normal form
// ---------------------------------------------------------------------------

type IntMatrix = Vec<Vec<i128>>;

/// Column-style HNF. Returns `h` with the same column span as `a`, where the
/// first `rank` columns are in lower-triangular Hermite form (positive pivots,
/// entries left of a pivot reduced into `[0, pivot)`), remaining columns zero.
/// When `transform` is requested, also returns the unimodular `u` with
/// `a · u = h`.
fn column_hnf(a: &[Vec<i128>], transform: bool) -> Result<(IntMatrix, Option<IntMatrix>, usize)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h: Vec<Vec<i128>> = a.to_vec();
    let mut u: Option<Vec<Vec<i128>>> = if transform {
        let mut id = vec![vec![0i128; cols]; cols];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = 1;
        }
        Some(id)
    } else {
        None
    };

    let col_op = |m: &mut [Vec<i128>],
                  j: usize,
                  k: usize,
                  x: i128,
                  y: i128,
                  z: i128,
                  w: i128|
     -> Result<()> {
        // (col_j, col_k) <- (x·col_j + y·col_k, z·col_j + w·col_k)
        for row in m.iter_mut() {
            let a0 = row[j];
            let b0 = row[k];
            row[j] = cadd(cmul(x, a0)?, cmul(y, b0)?)?;
            row[k] = cadd(cmul(z, a0)?, cmul(w, b0)?)?;
        }
        Ok(())
    };

    let mut pivot_col = 0usize;
    for i in 0..rows {
        if pivot_col >= cols {
            break;
        }
        // eliminate right of the pivot column in row i
        for j in (pivot_col + 1)..cols {
            if h[i][j] == 0 {
                continue;
            }
            let aa = h[i][pivot_col];
            let bb = h[i][j];
            let (g, x, y) = extgcd(aa, bb);
            // det of [[x, y], [-bb/g, aa/g]] is +1
            col_op(&mut h, pivot_col, j, x, y, -(bb / g), aa / g)?;
            if let Some(ref mut um) = u {
                col_op(um, pivot_col, j, x, y, -(bb / g), aa / g)?;
            }
        }
        if h[i][pivot_col] == 0 {
            // no pivot in this row; try to pull one from the right
            if let Some(j) = ((pivot_col + 1)..cols).find(|&j| h[i][j] != 0) {
                h.iter_mut().for_each(|row| row.swap(pivot_col, j));
                if let Some(ref mut um) = u {
                    um.iter_mut().for_each(|row| row.swap(pivot_col, j));
                }
            } else {
                continue;
            }
        }
        if h[i][pivot_col] < 0 {
            for row in h.iter_mut() {
                row[pivot_col] = -row[pivot_col];
            }
            if let Some(ref mut um) = u {
                for row in um.iter_mut() {
                    row[pivot_col] = -row[pivot_col];
                }
            }
        }
        // reduce columns left of the pivot
        let p = h[i][pivot_col];
        for j in 0..pivot_col {
            let q = h[i][j].div_euclid(p);
            if q != 0 {
                for row in h.iter_mut() {
                    row[j] = cadd(row[j], cmul(-q, row[pivot_col])?)?;
                }
                if let Some(ref mut um) = u {
                    for row in um.iter_mut() {
                        row[j] = cadd(row[j], cmul(-q, row[pivot_col])?)?;
                    }
                }
            }
        }
        pivot_col += 1;
    }
    Ok((h, u, pivot_col))
}

/// Solve `a · x = b` over the integers (any shape). Returns one solution.
pub fn solve_integer(a: &[Vec<i128>], b: &[i128]) -> Result<Option<Vec<i128>>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let (h, u, _) = column_hnf(a, true)?;
    let u = u.unwrap();
    // forward substitution on the echelon columns
    let mut y = vec![0i128; cols];
    let mut col = 0usize;
    let mut resid: Vec<i128> = b.to_vec();
    for i in 0..rows {
        if col < cols && h[i][col] != 0 {
            if resid[i] % h[i][col] != 0 {
                return Ok(None);
            }
            let q = resid[i] / h[i][col];
            y[col] = q;
            if q != 0 {
                for r in i..rows {
                    resid[r] = cadd(resid[r], cmul(-q, h[r][col])?)?;
                }
            }
            col += 1;
        } else if resid[i] != 0 {
            return Ok(None);
        }
    }
    // x = u · y
    let mut x = vec![0i128; cols];
    for (r, row) in u.iter().enumerate() {
        let mut acc: i128 = 0;
        for (c, &coef) in row.iter().enumerate() {
            acc = cadd(acc, cmul(coef, y[c])?)?;
        }
        x[r] = acc;
    }
    Ok(Some(x))
}

/// Solve `t · y ≡ rhs (mod Z^k)` for `y ∈ Z^n`, where `t` is a rational k×n
/// matrix. Returns one solution.
pub fn solve_congruence(t: &QMatrix, rhs: &[Rational]) -> Result<Option<Vec<i128>>> {
    assert_eq!(t.rows, rhs.len());
    let mut den = denominator_lcm(rhs.iter());
    for i in 0..t.rows {
        for j in 0..t.cols {
            den = num_integer::lcm(den, *t[(i, j)].denom());
        }
    }
    let d = den as i128;
    let mut a: Vec<Vec<i128>> = Vec::with_capacity(t.rows);
    for i in 0..t.rows {
        let mut row = Vec::with_capacity(t.cols + t.rows);
        for j in 0..t.cols {
            let r = t[(i, j)];
            row.push(d / (*r.denom() as i128) * (*r.numer() as i128));
        }
        for k in 0..t.rows {
            row.push(if k == i { d } else { 0 });
        }
        a.push(row);
    }
    let b: Vec<i128> = rhs
        .iter()
        .map(|r| d / (*r.denom() as i128) * (*r.numer() as i128))
        .collect();
    Ok(solve_integer(&a, &b)?.map(|x| x[..t.cols].to_vec()))
}

// ---------------------------------------------------------------------------
// lattices
// ---------------------------------------------------------------------------

/// A full-rank lattice in Q^n, stored as `(1/den) · mat` where `mat` is an
/// integer n×n basis in canonical column Hermite form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    pub n: usize,
    den: i128,
    mat: Vec<Vec<i128>>, // row-major, columns are basis vectors
}

impl Lattice {
    /// Lattice spanned by the given rational generator columns together with
    /// the extra columns (used to adjoin Z^n). Must have full rank.
    pub fn from_generators(n: usize, gens: &[Vec<Rational>], include_z: bool) -> Result<Lattice> {
        let mut den: i64 = 1;
        for g in gens {
            assert_eq!(g.len(), n);
            den = num_integer::lcm(den, denominator_lcm(g.iter()));
        }
        let d = den as i128;
        let extra = if include_z { n } else { 0 };
        let mut cols: Vec<Vec<i128>> = Vec::with_capacity(gens.len() + extra);
        for g in gens {
            cols.push(
                g.iter()
                    .map(|r| d / (*r.denom() as i128) * (*r.numer() as i128))
                    .collect(),
            );
        }
        if include_z {
            for i in 0..n {
                let mut e = vec![0i128; n];
                e[i] = d;
                cols.push(e);
            }
        }
        // row-major matrix whose columns are the generators
        let mut a = vec![vec![0i128; cols.len()]; n];
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                a[i][j] = c[i];
            }
        }
        let (h, _, rank) = column_hnf(&a, false)?;
        if rank < n {
            return Err(Error::DegenerateWeights);
        }
        let mat: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| h[i][j]).collect()).collect();
        Ok(Lattice { n, den: d, mat }.normalized())
    }

    /// The lattice Z^n.
    pub fn standard(n: usize) -> Lattice {
        let mut mat = vec![vec![0i128; n]; n];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = 1;
        }
        Lattice { n, den: 1, mat }
    }

    fn normalized(mut self) -> Lattice {
        let mut g = self.den;
        for row in &self.mat {
            for &x in row {
                g = igcd(g, x);
                if g == 1 {
                    return self;
                }
            }
        }
        if g > 1 {
            self.den /= g;
            for row in self.mat.iter_mut() {
                for x in row.iter_mut() {
                    *x /= g;
                }
            }
        }
        self
    }

    /// Basis as a rational matrix (columns are basis vectors).
    pub fn basis(&self) -> QMatrix {
        let mut m = QMatrix::zero(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m[(i, j)] = Rational::new(self.mat[i][j] as i64, self.den as i64);
            }
        }
        m
    }

    fn from_basis(b: &QMatrix) -> Result<Lattice> {
        let cols: Vec<Vec<Rational>> = (0..b.cols).map(|j| b.col(j)).collect();
        // basis is known to be full rank; reuse the generator path without Z^n
        Lattice::from_generators(b.rows, &cols, false)
    }

    /// `[L : Z^n]`, valid when Z^n ⊆ L.
    pub fn order_over_z(&self) -> Result<u128> {
        // order = den^n / prod(diag), computed with interleaved gcd reduction
        let mut num: i128 = 1;
        let mut d: i128 = 1;
        for i in 0..self.n {
            num = cmul(num, self.den)?;
            d = cmul(d, self.mat[i][i])?;
            let g = igcd(num, d);
            num /= g;
            d /= g;
        }
        if d != 1 || num <= 0 {
            return Err(Error::NotDiagonalSubgroup);
        }
        Ok(num as u128)
    }

    /// Does `v` lie in the lattice?
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.n);
        // solve mat · x = den · v by forward substitution (mat lower triangular)
        let mut resid: Vec<Rational> = v
            .iter()
            .map(|r| *r * Rational::from_integer(self.den as i64))
            .collect();
        for j in 0..self.n {
            let p = self.mat[j][j];
            let target = resid[j];
            if !target.denom().is_one() {
                return false;
            }
            let t = *target.numer() as i128;
            if t % p != 0 {
                return false;
            }
            let q = (t / p) as i64;
            if q != 0 {
                for (res, row) in resid[j..].iter_mut().zip(&self.mat[j..]) {
                    *res -= Rational::from_integer(q) * Rational::new(row[j] as i64, 1);
                }
            }
        }
        true
    }

    pub fn contains_qmodz(&self, v: &[QmodZ]) -> bool {
        let vr: Vec<Rational> = v.iter().map(|q| q.rep()).collect();
        self.contains(&vr)
    }

    /// Canonical representative of `v + L`: the unique element of the
    /// fundamental parallelepiped of the Hermite basis.
    pub fn canonical_residue(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w: Vec<Rational> = v.to_vec();
        for j in 0..self.n {
            let col_j = Rational::new(self.mat[j][j] as i64, self.den as i64);
            let q = (w[j] / col_j).floor();
            if !q.is_zero() {
                let qi = q.to_integer();
                for (res, row) in w[j..].iter_mut().zip(&self.mat[j..]) {
                    *res -= Rational::from_integer(qi)
                        * Rational::new(row[j] as i64, self.den as i64);
                }
            }
        }
        w
    }

    /// Dual lattice `{v : v·L ⊆ Z}` (no containment assumptions).
    pub fn dual(&self) -> Result<Lattice> {
        let inv = self.basis().inverse().ok_or(Error::DegenerateWeights)?;
        Lattice::from_basis(&inv.transpose())
    }

    /// Smallest lattice containing both.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        assert_eq!(self.n, other.n);
        let mut gens: Vec<Vec<Rational>> = Vec::with_capacity(2 * self.n);
        let b1 = self.basis();
        let b2 = other.basis();
        for j in 0..self.n {
            gens.push(b1.col(j));
            gens.push(b2.col(j));
        }
        Lattice::from_generators(self.n, &gens, false)
    }

    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.dual()?.sum(&other.dual()?)?.dual()
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        (0..self.n).all(|j| other.contains(&self.basis().col(j)))
    }

    /// Image lattice `m·L + Z^k` for a rational k×n matrix `m`.
    pub fn image(&self, m: &QMatrix) -> Result<Lattice> {
        assert_eq!(m.cols, self.n);
        let b = m.mul(&self.basis());
        let gens: Vec<Vec<Rational>> = (0..b.cols).map(|j| b.col(j)).collect();
        Lattice::from_generators(m.rows, &gens, true)
    }

    /// `{x ∈ L : m·x ∈ Z^k}`. Writing `x = B·y` with `y ∈ Z^n`, the condition
    /// becomes `(m·B)·y ∈ Z^k`, whose solution set in Z^n is the dual of the
    /// lattice spanned by the rows of `m·B` together with Z^n.
    pub fn preimage_integral(&self, m: &QMatrix) -> Result<Lattice> {
        let t = m.mul(&self.basis());
        let rows: Vec<Vec<Rational>> = (0..t.rows).map(|i| t.row(i)).collect();
        let constraints = Lattice::from_generators(self.n, &rows, true)?;
        let k = constraints.dual()?;
        let new_basis = self.basis().mul(&k.basis());
        Lattice::from_basis(&new_basis)
    }

    /// Enumerate the residues of L/Z^n as canonical `[0,1)^n` vectors.
    /// Fails when the order exceeds `cap`.
    pub fn enumerate_mod_z(&self, cap: usize) -> Result<Vec<Vec<QmodZ>>> {
        let order = self.order_over_z()?;
        if order > cap as u128 {
            return Err(Error::SizeLimitExceeded("diagonal group enumeration"));
        }
        let gens: Vec<Vec<QmodZ>> = (0..self.n)
            .map(|j| self.basis().col(j).iter().map(|r| QmodZ::new(*r)).collect())
            .collect();
        let mut seen = alloc::collections::BTreeSet::new();
        let mut work = alloc::vec![vec![QmodZ::zero(); self.n]];
        seen.insert(work[0].clone());
        while let Some(v) = work.pop() {
            for g in &gens {
                let w: Vec<QmodZ> = v.iter().zip(g).map(|(a, b)| *a + *b).collect();
                if seen.insert(w.clone()) {
                    work.push(w);
                }
            }
        }
        debug_assert_eq!(seen.len() as u128, order);
        Ok(seen.into_iter().collect())
    }

    /// Representatives of the quotient L/sub (sub must be a sublattice),
    /// canonicalized by `sub.canonical_residue`. Fails above `cap`.
    pub fn quotient_reps(&self, sub: &Lattice, cap: usize) -> Result<Vec<Vec<Rational>>> {
        let count = self.index_over(sub)?;
        if count > cap as u128 {
            return Err(Error::SearchLimitExceeded);
        }
        let gens: Vec<Vec<Rational>> = (0..self.n).map(|j| self.basis().col(j)).collect();
        let zero = sub.canonical_residue(&vec![Rational::zero(); self.n]);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut work = alloc::vec![zero.clone()];
        seen.insert(zero);
        while let Some(v) = work.pop() {
            for g in &gens {
                let sum: Vec<Rational> = v.iter().zip(g).map(|(a, b)| *a + *b).collect();
                let w = sub.canonical_residue(&sum);
                if seen.insert(w.clone()) {
                    work.push(w);
                }
            }
        }
        debug_assert_eq!(seen.len() as u128, count);
        Ok(seen.into_iter().collect())
    }

    /// `[self : sub]` for a sublattice.
    pub fn index_over(&self, sub: &Lattice) -> Result<u128> {
        // det(sub basis) / det(self basis), a positive integer
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 0..self.n {
            num = cmul(num, sub.mat[i][i])?;
            num = cmul(num, self.den)?;
            den = cmul(den, self.mat[i][i])?;
            den = cmul(den, sub.den)?;
            let g = igcd(num, den);
            num /= g;
            den /= g;
        }
        if den != 1 || num <= 0 {
            return Err(Error::NotDiagonalSubgroup);
        }
        Ok(num as u128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn qv(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn inverse_of_chain_matrix() {
        let a = QMatrix::from_int_rows(&[
            vec![4, 1, 0, 0],
            vec![0, 5, 1, 0],
            vec![0, 0, 3, 1],
            vec![0, 0, 0, 2],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv[(0, 3)], rat(-1, 120));
        assert_eq!(inv[(1, 3)], rat(1, 30));
        assert_eq!(a.mul(&inv), QMatrix::identity(4));
    }

    #[test]
    fn lattice_order_and_membership() {
        // <(1/4, 1/4)> + Z^2 has order 4
        let l = Lattice::from_generators(2, &[qv(&[(1, 4), (1, 4)])], true).unwrap();
        assert_eq!(l.order_over_z().unwrap(), 4);
        assert!(l.contains(&qv(&[(1, 2), (1, 2)])));
        assert!(l.contains(&qv(&[(3, 4), (-1, 4)])));
        assert!(!l.contains(&qv(&[(1, 4), (0, 1)])));
        assert_eq!(l.enumerate_mod_z(10).unwrap().len(), 4);
    }

    #[test]
    fn lattice_sum_intersect_dual() {
        let l1 = Lattice::from_generators(2, &[qv(&[(1, 2), (0, 1)])], true).unwrap();
        let l2 = Lattice::from_generators(2, &[qv(&[(0, 1), (1, 3)])], true).unwrap();
        let s = l1.sum(&l2).unwrap();
        assert_eq!(s.order_over_z().unwrap(), 6);
        let i = l1.intersect(&l2).unwrap();
        assert_eq!(i.order_over_z().unwrap(), 1);
        // dual of (1/2)Z x Z is 2Z x Z
        let d = l1.dual().unwrap();
        assert!(d.contains(&qv(&[(2, 1), (0, 1)])));
        assert!(!d.contains(&qv(&[(1, 1), (0, 1)])));
        assert!(d.contains(&qv(&[(0, 1), (1, 1)])));
    }

    #[test]
    fn congruence_solver() {
        // y ∈ Z^2 with (1/4)y1 + (1/2)y2 ≡ 3/4 (mod Z)
        let t = QMatrix::from_rows(vec![vec![rat(1, 4), rat(1, 2)]]);
        let y = solve_congruence(&t, &[rat(3, 4)]).unwrap().unwrap();
        let lhs = rat(y[0] as i64, 4) + rat(y[1] as i64, 2);
        assert_eq!(QmodZ::new(lhs), QmodZ::from_parts(3, 4));
        // unsolvable: (1/2)y ≡ 1/3
        let t2 = QMatrix::from_rows(vec![vec![rat(1, 2)]]);
        assert!(solve_congruence(&t2, &[rat(1, 3)]).unwrap().is_none());
    }

    #[test]
    fn quotient_reps_count() {
        let big =
            Lattice::from_generators(2, &[qv(&[(1, 4), (0, 1)]), qv(&[(0, 1), (1, 4)])], true)
                .unwrap();
        let sub =
            Lattice::from_generators(2, &[qv(&[(1, 2), (0, 1)]), qv(&[(0, 1), (1, 2)])], true)
                .unwrap();
        assert_eq!(big.index_over(&sub).unwrap(), 4);
        let reps = big.quotient_reps(&sub, 100).unwrap();
        assert_eq!(reps.len(), 4);
    }
}
