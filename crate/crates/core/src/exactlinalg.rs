//! Exact rational scalars and sparse matrices.
//!
//! Everything downstream (structure constants, action matrices, coboundary
//! operators) runs on [`Rational`] entries, so ranks and kernels are exact and
//! no tolerance questions arise. Rank and kernel use fraction-free
//! Bareiss-style elimination on integer-scaled rows with pivot selection
//! favoring sparse rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Sparse vector: sorted `(index, nonzero value)` pairs.
pub type SVec = Vec<(usize, Rational)>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("gram matrix must be diagonal with positive entries")]
    BadGram,
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `num/den` (reporting format; exact round trip).
pub fn rat_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Adds `c * v` into the accumulator map kept as a sorted sparse vector.
pub fn svec_add_scaled(acc: &mut SVec, v: &SVec, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let mut merged: SVec = Vec::with_capacity(acc.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < v.len() {
        if j >= v.len() || (i < acc.len() && acc[i].0 < v[j].0) {
            merged.push(acc[i].clone());
            i += 1;
        } else if i >= acc.len() || v[j].0 < acc[i].0 {
            let val = c * &v[j].1;
            if !val.is_zero() {
                merged.push((v[j].0, val));
            }
            j += 1;
        } else {
            let val = &acc[i].1 + c * &v[j].1;
            if !val.is_zero() {
                merged.push((acc[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    *acc = merged;
}

pub fn svec_scale(v: &SVec, c: &Rational) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

pub fn svec_dot(a: &SVec, b: &SVec) -> Rational {
    let mut acc = Rational::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn svec_unit(i: usize) -> SVec {
    vec![(i, Rational::one())]
}

/// Sparse matrix over the rationals. No zero entries are stored and all
/// indices lie within `rows x cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    /// Row-major storage; each row is sorted by column index.
    data: Vec<SVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zero(n, n);
        for i in 0..n {
            m.data[i].push((i, Rational::one()));
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SVec>) -> Self {
        for r in &rows {
            debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(r.iter().all(|(j, v)| *j < cols && !v.is_zero()));
        }
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_dense(entries: &[Vec<Rational>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let data = entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: SVec = Vec::new();
            for (k, v) in row {
                svec_add_scaled(&mut acc, &other.data[*k], v);
            }
            data.push(acc);
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Matrix-vector product with a sparse vector.
    pub fn mul_svec(&self, v: &SVec) -> SVec {
        let mut out: SVec = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let x = svec_dot(row, v);
            if !x.is_zero() {
                out.push((i, x));
            }
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut data = Vec::with_capacity(self.rows);
        for (a, b) in self.data.iter().zip(&other.data) {
            let mut acc = a.clone();
            svec_add_scaled(&mut acc, b, &Rational::one());
            data.push(acc);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut data = Vec::with_capacity(self.rows);
        for (a, b) in self.data.iter().zip(&other.data) {
            let mut acc = a.clone();
            svec_add_scaled(&mut acc, b, &-Rational::one());
            data.push(acc);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| svec_scale(r, c)).collect(),
        }
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        SparseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Rows scaled to integers: the common scaffold for rank and kernel.
struct IntRows {
    rows: Vec<Vec<(usize, BigInt)>>,
}

fn to_int_rows(m: &SparseMatrix) -> IntRows {
    let rows = m
        .data
        .iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for (_, v) in row {
                lcm = lcm.lcm(v.denom());
            }
            row.iter()
                .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
                .collect()
        })
        .collect();
    IntRows { rows }
}

/// Fraction-free elimination to row echelon form. Returns the pivot columns;
/// the echelon rows replace `rows` in place. Pivot rows are chosen sparsest
/// first to limit fill-in; divisions by the previous pivot are exact.
fn bareiss_echelon(rows: &mut Vec<Vec<(usize, BigInt)>>, cols: usize) -> Vec<usize> {
    let mut pivot_cols = Vec::new();
    let mut prev_pivot = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        // Pick, among rows with a nonzero entry in this column, one of minimal
        // length (fewest nonzeros).
        let mut best: Option<(usize, usize)> = None;
        for i in r..rows.len() {
            if rows[i].binary_search_by_key(&col, |(c, _)| *c).is_ok() {
                let len = rows[i].len();
                if best.map_or(true, |(_, blen)| len < blen) {
                    best = Some((i, len));
                }
            }
        }
        let Some((pi, _)) = best else { continue };
        rows.swap(r, pi);
        let pivot_row = rows[r].clone();
        let pivot = pivot_row
            .iter()
            .find(|(c, _)| *c == col)
            .map(|(_, v)| v.clone())
            .unwrap();
        for row in rows.iter_mut().skip(r + 1) {
            let Ok(k) = row.binary_search_by_key(&col, |(c, _)| *c) else {
                // Still scale by the pivot to keep the Bareiss division exact.
                for (_, v) in row.iter_mut() {
                    *v = &*v * &pivot / &prev_pivot;
                }
                continue;
            };
            let factor = row[k].1.clone();
            let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut a, mut b) = (0, 0);
            while a < row.len() || b < pivot_row.len() {
                if b >= pivot_row.len() || (a < row.len() && row[a].0 < pivot_row[b].0) {
                    let v = (&row[a].1 * &pivot) / &prev_pivot;
                    if !v.is_zero() {
                        merged.push((row[a].0, v));
                    }
                    a += 1;
                } else if a >= row.len() || pivot_row[b].0 < row[a].0 {
                    let v = (-&factor * &pivot_row[b].1) / &prev_pivot;
                    if !v.is_zero() {
                        merged.push((pivot_row[b].0, v));
                    }
                    b += 1;
                } else {
                    let v = (&row[a].1 * &pivot - &factor * &pivot_row[b].1) / &prev_pivot;
                    if !v.is_zero() {
                        merged.push((row[a].0, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            *row = merged;
        }
        pivot_cols.push(col);
        prev_pivot = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivot_cols
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut int_rows = to_int_rows(m).rows;
    bareiss_echelon(&mut int_rows, m.cols).len()
}

impl SparseMatrix {
    pub fn rank(&self) -> usize {
        rank(self)
    }
}

/// Subspace of `Q^ambient_dim` given by a list of linearly independent sparse
/// basis vectors.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<SVec>,
}

impl Subspace {
    /// Wraps a spanning set, asserting linear independence.
    pub fn new(ambient_dim: usize, basis: Vec<SVec>) -> Self {
        let m = SparseMatrix::from_rows(ambient_dim, basis.clone());
        assert_eq!(m.rank(), basis.len(), "subspace basis must be independent");
        Subspace { ambient_dim, basis }
    }

    /// Reduces a (possibly dependent) spanning set to a basis.
    pub fn from_span(ambient_dim: usize, span: Vec<SVec>) -> Self {
        let mut basis: Vec<SVec> = Vec::new();
        let mut echelon: Vec<Vec<(usize, BigInt)>> = Vec::new();
        for v in span {
            if v.is_empty() {
                continue;
            }
            let mut trial = echelon.clone();
            trial.extend(to_int_rows(&SparseMatrix::from_rows(ambient_dim, vec![v.clone()])).rows);
            let mut t = trial.clone();
            if bareiss_echelon(&mut t, ambient_dim).len() > basis.len() {
                basis.push(v);
                echelon = t;
            }
        }
        Subspace { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(svec_unit).collect(),
        }
    }

    pub fn as_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_rows(self.ambient_dim, self.basis.clone())
    }

    /// Exact membership test.
    pub fn contains(&self, v: &SVec) -> bool {
        if v.is_empty() {
            return true;
        }
        let stacked = self
            .as_matrix()
            .vstack(&SparseMatrix::from_rows(self.ambient_dim, vec![v.clone()]));
        stacked.rank() == self.dim()
    }

    /// Exact subspace inclusion `self ⊆ other`.
    pub fn contained_in(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }
}

/// Basis of the right null space of `m`, with `dim = cols - rank`.
pub fn kernel_basis(m: &SparseMatrix) -> Subspace {
    let mut rows = to_int_rows(m).rows;
    let pivot_cols = bareiss_echelon(&mut rows, m.cols);
    let rank = pivot_cols.len();
    rows.truncate(rank);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; m.cols];
        for &c in &pivot_cols {
            s[c] = true;
        }
        s
    };
    let mut basis = Vec::with_capacity(m.cols - rank);
    for free in (0..m.cols).filter(|c| !pivot_set[*c]) {
        // Back-substitute: x[free] = 1, other free vars 0.
        let mut x: Vec<Rational> = vec![Rational::zero(); m.cols];
        x[free] = Rational::one();
        for r in (0..rank).rev() {
            let pc = pivot_cols[r];
            let mut acc = Rational::zero();
            let mut pivot = Rational::one();
            for (c, v) in &rows[r] {
                let vr = Rational::from_integer(v.clone());
                if *c == pc {
                    pivot = vr;
                } else if !x[*c].is_zero() {
                    acc += vr * &x[*c];
                }
            }
            x[pc] = -acc / pivot;
        }
        let sv: SVec = x
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        basis.push(sv);
    }
    Subspace {
        ambient_dim: m.cols,
        basis,
    }
}

/// Basis of `a ∩ b`, via the kernel of the stacked coefficient system.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinalgError::DimensionMismatch(a.ambient_dim, b.ambient_dim));
    }
    let n = a.ambient_dim;
    let (ka, kb) = (a.dim(), b.dim());
    // Columns: x-coordinates (in a-basis) then y-coordinates (in b-basis);
    // rows: ambient equations A^T x - B^T y = 0.
    let mut sys = SparseMatrix::zero(n, ka + kb);
    for (i, v) in a.basis.iter().enumerate() {
        for (j, c) in v {
            sys.set(*j, i, c.clone());
        }
    }
    for (i, v) in b.basis.iter().enumerate() {
        for (j, c) in v {
            sys.set(*j, ka + i, -c.clone());
        }
    }
    let ker = kernel_basis(&sys);
    let basis = ker
        .basis
        .iter()
        .map(|xy| {
            let mut v: SVec = Vec::new();
            for (i, c) in xy.iter().filter(|(i, _)| *i < ka) {
                svec_add_scaled(&mut v, &a.basis[*i], c);
            }
            v
        })
        .collect();
    Ok(Subspace {
        ambient_dim: n,
        basis,
    })
}

/// Diagonal positive Gram data: one positive rational per basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalGram {
    pub norms: Vec<Rational>,
}

impl DiagonalGram {
    pub fn new(norms: Vec<Rational>) -> Result<Self, LinalgError> {
        if norms.iter().any(|x| !x.is_positive()) {
            return Err(LinalgError::BadGram);
        }
        Ok(DiagonalGram { norms })
    }

    pub fn ones(n: usize) -> Self {
        DiagonalGram {
            norms: vec![Rational::one(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.norms.len()
    }
}

/// Formal adjoint of `m : dom -> cod` with respect to diagonal positive inner
/// products: the unique `A` with `<m x, y>_cod = <x, A y>_dom`, i.e.
/// `A = gram_dom^{-1} m^T gram_cod`.
pub fn gram_adjoint(
    m: &SparseMatrix,
    gram_dom: &DiagonalGram,
    gram_cod: &DiagonalGram,
) -> Result<SparseMatrix, LinalgError> {
    if gram_dom.dim() != m.cols || gram_cod.dim() != m.rows {
        return Err(LinalgError::DimensionMismatch(gram_dom.dim(), m.cols));
    }
    let mut out = m.transpose();
    for (i, row) in out.data.iter_mut().enumerate() {
        for (j, v) in row.iter_mut() {
            *v = &*v * &gram_cod.norms[*j] / &gram_dom.norms[i];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|x| rat(*x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_empty_matrix() {
        assert_eq!(SparseMatrix::zero(0, 0).rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(SparseMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_dependent_rows() {
        // Hand elimination: second row is twice the first.
        assert_eq!(mat(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(kernel_basis(&SparseMatrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        assert_eq!(kernel_basis(&SparseMatrix::zero(2, 4)).dim(), 4);
    }

    #[test]
    fn kernel_annihilates_exactly() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = kernel_basis(&m);
        assert_eq!(ker.dim(), 2);
        for v in &ker.basis {
            assert!(m.mul_svec(v).is_empty());
        }
    }

    #[test]
    fn intersect_self() {
        let a = Subspace::new(3, vec![svec_unit(0), svec_unit(1)]);
        let i = intersect(&a, &a).unwrap();
        assert_eq!(i.dim(), 2);
    }

    #[test]
    fn intersect_complementary_is_zero() {
        let a = Subspace::new(4, vec![svec_unit(0), svec_unit(1)]);
        let b = Subspace::new(4, vec![svec_unit(2), svec_unit(3)]);
        assert_eq!(intersect(&a, &b).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_overlapping_planes() {
        // span{e1,e2} ∩ span{e2,e3} = span{e2} in Q^3.
        let a = Subspace::new(3, vec![svec_unit(0), svec_unit(1)]);
        let b = Subspace::new(3, vec![svec_unit(1), svec_unit(2)]);
        let i = intersect(&a, &b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(Subspace::new(3, vec![svec_unit(1)]).contains(&i.basis[0]));
    }

    #[test]
    fn intersect_dimension_mismatch() {
        let a = Subspace::new(3, vec![svec_unit(0)]);
        let b = Subspace::new(4, vec![svec_unit(0)]);
        assert!(intersect(&a, &b).is_err());
    }

    #[test]
    fn gram_adjoint_identity_grams() {
        let m = mat(&[&[1, 2], &[0, 3], &[4, 0]]);
        let a = gram_adjoint(&m, &DiagonalGram::ones(2), &DiagonalGram::ones(3)).unwrap();
        assert_eq!(a, m.transpose());
        let id = SparseMatrix::identity(2);
        let a2 = gram_adjoint(&id, &DiagonalGram::ones(2), &DiagonalGram::ones(2)).unwrap();
        assert_eq!(a2, id);
    }

    #[test]
    fn gram_adjoint_weighted() {
        // <2x, y> * 5 = <x, A y> * 3 forces A = 10/3.
        let m = mat(&[&[2]]);
        let gd = DiagonalGram::new(vec![rat(3)]).unwrap();
        let gc = DiagonalGram::new(vec![rat(5)]).unwrap();
        let a = gram_adjoint(&m, &gd, &gc).unwrap();
        assert_eq!(a.get(0, 0), frac(10, 3));
    }

    #[test]
    fn gram_adjoint_requires_positive_entries() {
        let m = mat(&[&[1]]);
        assert!(DiagonalGram::new(vec![rat(-1)]).is_err());
        assert!(gram_adjoint(
            &m,
            &DiagonalGram::ones(2),
            &DiagonalGram::ones(1)
        )
        .is_err());
    }

    #[test]
    fn double_adjoint_returns_original() {
        let m = mat(&[&[1, 2, 0], &[0, 5, 7]]);
        let gd = DiagonalGram::new(vec![rat(2), rat(3), frac(1, 2)]).unwrap();
        let gc = DiagonalGram::new(vec![rat(1), frac(7, 3)]).unwrap();
        let a = gram_adjoint(&m, &gd, &gc).unwrap();
        let back = gram_adjoint(&a, &gc, &gd).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn row_space_plus_kernel_fills_ambient() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let r = m.rank();
        let k = kernel_basis(&m).dim();
        assert_eq!(r + k, m.ncols());
        let mut stacked = m.clone();
        for v in kernel_basis(&m).basis {
            stacked = stacked.vstack(&SparseMatrix::from_rows(4, vec![v]));
        }
        assert_eq!(stacked.rank(), 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix() -> impl Strategy<Value = SparseMatrix> {
            (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(
                    proptest::collection::vec((-4i64..5, 1i64..4), c),
                    r,
                )
                .prop_map(move |rows| {
                    let dense: Vec<Vec<Rational>> = rows
                        .iter()
                        .map(|row| row.iter().map(|(n, d)| frac(*n, *d)).collect())
                        .collect();
                    SparseMatrix::from_dense(&dense)
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in arb_matrix()) {
                let ker = kernel_basis(&m);
                prop_assert_eq!(m.rank() + ker.dim(), m.ncols());
                for v in &ker.basis {
                    prop_assert!(m.mul_svec(v).is_empty());
                }
            }

            #[test]
            fn adjoint_is_involutive(m in arb_matrix()) {
                let gd = DiagonalGram::new((1..=m.ncols() as i64).map(rat).collect()).unwrap();
                let gc = DiagonalGram::new((1..=m.nrows() as i64).map(|i| frac(i, 2)).collect()).unwrap();
                let a = gram_adjoint(&m, &gd, &gc).unwrap();
                prop_assert_eq!(gram_adjoint(&a, &gc, &gd).unwrap(), m);
            }
        }
    }
}
