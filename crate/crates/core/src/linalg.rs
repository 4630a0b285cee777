//! Exact sparse linear algebra over ℚ.
//!
//! Rank uses fraction-free (Bareiss) elimination on integer rows obtained by
//! clearing denominators; kernels come from a reduced row echelon form over
//! the rationals. Pivots are always the first nonzero entry in column order,
//! so every basis produced here is deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

pub fn unit_vector(i: usize) -> SparseVec {
    BTreeMap::from([(i, Rational::one())])
}

fn axpy(y: &mut SparseVec, a: &Rational, x: &SparseVec) {
    for (i, v) in x {
        let e = y.entry(*i).or_insert_with(Rational::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(i);
        }
    }
}

/// Sparse rational matrix stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            columns: vec![SparseVec::new(); cols],
        }
    }

    /// Panics on an out-of-range row index.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for col in &columns {
            if let Some((&r, _)) = col.iter().next_back() {
                assert!(r < rows, "row index {r} out of bounds ({rows} rows)");
            }
        }
        let columns = columns
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        RatMatrix { rows, columns }
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = RatMatrix::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, BigRational::from_integer(BigInt::from(*v)));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(
            r < self.rows && c < self.cols(),
            "index ({r}, {c}) out of bounds"
        );
        if v.is_zero() {
            self.columns[c].remove(&r);
        } else {
            self.columns[c].insert(r, v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c]
            .get(&r)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut cols = vec![SparseVec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                cols[*r].insert(c, v.clone());
            }
        }
        RatMatrix {
            rows: self.cols(),
            columns: cols,
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, a) in v {
            axpy(&mut out, a, &self.columns[*c]);
        }
        out
    }

    fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r].insert(c, v.clone());
            }
        }
        rows
    }
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &SparseVec) -> BTreeMap<usize, BigInt> {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect()
}

/// Exact rank by fraction-free elimination.
pub fn rank(m: &RatMatrix) -> usize {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = m
        .sparse_rows()
        .iter()
        .filter(|r| !r.is_empty())
        .map(integer_row)
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..m.cols() {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].contains_key(&col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        let pivot = pivot_row[&col].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let a = row.get(&col).cloned().unwrap_or_else(BigInt::zero);
            let mut next = BTreeMap::new();
            let keys: std::collections::BTreeSet<usize> =
                row.keys().chain(pivot_row.keys()).copied().collect();
            for k in keys {
                let lhs = row.get(&k).map_or_else(BigInt::zero, |v| &pivot * v);
                let rhs = pivot_row.get(&k).map_or_else(BigInt::zero, |v| &a * v);
                let num = lhs - rhs;
                if num.is_zero() {
                    continue;
                }
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                next.insert(k, q);
            }
            *row = next;
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Reduced row echelon form: nonzero rows (pivot entry 1) and pivot columns.
pub fn rref(m: &RatMatrix) -> (Vec<SparseVec>, Vec<usize>) {
    let mut rows: Vec<SparseVec> = m
        .sparse_rows()
        .into_iter()
        .filter(|r| !r.is_empty())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols() {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].contains_key(&col)) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][&col].recip();
        let pivot_row: SparseVec = rows[r].iter().map(|(k, v)| (*k, v * &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            if let Some(a) = row.get(&col).cloned() {
                axpy(row, &-a, &pivot_row);
            }
        }
        rows[r] = pivot_row;
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KernelBasis {
    pub vectors: Vec<SparseVec>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// One kernel vector per free column `f`: `e_f − Σ rref[p][f]·e_p`.
pub fn kernel(m: &RatMatrix) -> KernelBasis {
    let (rows, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vector(f);
            for (row, &p) in rows.iter().zip(&pivots) {
                if let Some(a) = row.get(&f) {
                    v.insert(p, -a.clone());
                }
            }
            v
        })
        .collect();
    KernelBasis { vectors }
}

/// Incrementally built subspace in echelon form, keyed by leading index.
#[derive(Debug, Clone, Default)]
pub struct Span {
    basis: BTreeMap<usize, SparseVec>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> Self {
        let mut s = Span::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        while let Some((&lead, coeff)) = v.iter().next() {
            match self.basis.get(&lead) {
                Some(b) => {
                    let c = -coeff.clone();
                    axpy(&mut v, &c, b);
                }
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&lead, coeff)) = r.iter().next() else {
            return false;
        };
        let inv = coeff.recip();
        let normalized = r.iter().map(|(k, x)| (*k, x * &inv)).collect();
        self.basis.insert(lead, normalized);
        true
    }
}

/// Rank of a set of column vectors.
pub fn rank_of_vectors(vs: &[SparseVec]) -> usize {
    Span::from_vectors(vs).dim()
}

/// `true` iff `v` is a rational combination of the image vectors.
pub fn membership(v: &SparseVec, image: &[SparseVec]) -> bool {
    Span::from_vectors(image).contains(v)
}

fn check_image_in_kernel(kernel: &KernelBasis, image: &[SparseVec]) -> Result<Span> {
    let span = Span::from_vectors(&kernel.vectors);
    if let Some(idx) = image.iter().position(|b| !span.contains(b)) {
        return Err(Error::ImageNotInKernel(idx));
    }
    Ok(span)
}

/// `dim(ker / im)`, after checking `im ⊆ ker`.
pub fn quotient_dim(kernel: &KernelBasis, image: &[SparseVec]) -> Result<usize> {
    check_image_in_kernel(kernel, image)?;
    Ok(kernel.len() - rank_of_vectors(image))
}

/// Kernel vectors, in order, that are independent modulo the image and the
/// previously chosen ones.
pub fn complement_basis(kernel: &KernelBasis, image: &[SparseVec]) -> Result<Vec<SparseVec>> {
    check_image_in_kernel(kernel, image)?;
    let mut span = Span::from_vectors(image);
    Ok(kernel
        .vectors
        .iter()
        .filter(|v| span.insert(v))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn vec_of(entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .map(|(i, v)| (*i, int(*v)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    #[test]
    fn identity_and_zero() {
        let id = RatMatrix::from_rows_i64(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(rank(&id), 2);
        assert!(kernel(&id).is_empty());
        let z = RatMatrix::zeros(3, 4);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel(&z).len(), 4);
    }

    #[test]
    fn rank_one_example() {
        let m = RatMatrix::from_rows_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&m), 1);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        // (-2, 1) is (2, -1) up to scale.
        assert_eq!(k.vectors[0], vec_of(&[(0, -2), (1, 1)]));
        assert!(m.mul_vec(&k.vectors[0]).is_empty());
    }

    #[test]
    fn rational_entries() {
        let mut m = RatMatrix::zeros(2, 2);
        m.set(0, 0, rat(1, 2));
        m.set(0, 1, rat(1, 3));
        m.set(1, 0, rat(3, 2));
        m.set(1, 1, int(1));
        assert_eq!(rank(&m), 1);
        m.set(1, 1, rat(2, 3));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn no_rows() {
        let m = RatMatrix::zeros(0, 3);
        assert_eq!(rank(&m), 0);
        assert_eq!(kernel(&m).len(), 3);
    }

    #[test]
    fn quotient_examples() {
        let k = KernelBasis {
            vectors: vec![unit_vector(0), unit_vector(1)],
        };
        assert_eq!(quotient_dim(&k, &[]), Ok(2));
        assert_eq!(quotient_dim(&k, &k.vectors.clone()), Ok(0));
        assert!(complement_basis(&k, &k.vectors.clone()).unwrap().is_empty());

        let k = KernelBasis {
            vectors: vec![unit_vector(0), unit_vector(1), vec_of(&[(0, 1), (2, 1)])],
        };
        let image = vec![unit_vector(1)];
        assert_eq!(quotient_dim(&k, &image), Ok(2));
        let comp = complement_basis(&k, &image).unwrap();
        assert_eq!(comp, vec![unit_vector(0), vec_of(&[(0, 1), (2, 1)])]);
    }

    #[test]
    fn image_outside_kernel_is_an_error() {
        let k = KernelBasis {
            vectors: vec![unit_vector(0)],
        };
        assert_eq!(
            quotient_dim(&k, &[unit_vector(1)]),
            Err(Error::ImageNotInKernel(0))
        );
    }

    #[test]
    fn membership_examples() {
        assert!(membership(&SparseVec::new(), &[]));
        assert!(!membership(&unit_vector(1), &[unit_vector(0)]));
        assert!(membership(
            &vec_of(&[(0, 3), (1, 3)]),
            &[vec_of(&[(0, 1), (1, 1)])]
        ));
    }
}
