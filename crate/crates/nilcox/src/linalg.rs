//! Dense linear algebra over an exact [`Field`]: Gauss-Jordan elimination with
//! the first nonzero entry as pivot.

use crate::exactnum::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<E> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols);
        Matrix {
            rows: r,
            cols,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = Matrix::filled(n, n, f.zero());
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn matmul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = Matrix::filled(a.rows, b.cols, f.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if f.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if !f.is_zero(bkj) {
                    let idx = i * out.cols + j;
                    f.mul_add_assign(&mut out.data[idx], aik, bkj);
                }
            }
        }
    }
    out
}

pub fn is_zero_matrix<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(f: &F, a: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        for j in 0..a.cols {
            a.data.swap(p * a.cols + j, r * a.cols + j);
        }
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..a.cols {
            let v = f.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        let pivot_row: Vec<F::Elem> = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..a.cols {
                if !f.is_zero(&pivot_row[j]) {
                    let v = f.sub(a.get(i, j), &f.mul(&factor, &pivot_row[j]));
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, a: &Matrix<F::Elem>) -> usize {
    let mut b = a.clone();
    rref(f, &mut b).len()
}

/// A basis of `{v : a v = 0}`.
pub fn kernel<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut b = a.clone();
    let pivots = rref(f, &mut b);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); a.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(b.get(r, fc));
            }
            v
        })
        .collect()
}

/// A basis of `{v : v a = 0}`.
pub fn left_kernel<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    kernel(f, &a.transpose())
}

pub fn determinant<F: Field>(f: &F, a: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut b = a.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(b.get(i, c))) else {
            return f.zero();
        };
        if p != c {
            for j in 0..n {
                b.data.swap(p * n + j, c * n + j);
            }
            det = f.neg(&det);
        }
        let piv = b.get(c, c).clone();
        det = f.mul(&det, &piv);
        let inv = f.inv(&piv).expect("pivot is nonzero");
        for i in (c + 1)..n {
            let factor = f.mul(b.get(i, c), &inv);
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..n {
                let v = f.sub(b.get(i, j), &f.mul(&factor, b.get(c, j)));
                b.set(i, j, v);
            }
        }
    }
    det
}

/// An incrementally built row-echelon basis of a subspace of `F^cols`.
///
/// Each stored row is zero at the pivots of all rows stored before it and
/// has a unit at its own pivot, so reducing a vector against the rows in
/// insertion order clears every pivot coordinate.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, cols: usize) -> Self {
        EchelonBasis {
            field,
            cols,
            rows: vec![],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The stored basis vectors.
    pub fn vectors(&self) -> impl Iterator<Item = &Vec<F::Elem>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// `v` minus its projection along the stored pivots.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (j, x) in row.iter().enumerate().skip(*p) {
                if !f.is_zero(x) {
                    v[j] = f.sub(&v[j], &f.mul(&c, x));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("pivot is nonzero");
        let r: Vec<F::Elem> = r.iter().map(|x| f.mul(x, &inv)).collect();
        self.rows.push((p, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{CyclotomicField, Ring, ResidueField};

    #[test]
    fn rank_kernel_det() {
        let f = CyclotomicField::new(3, 2);
        let i = |k| f.from_int(k);
        let a = Matrix::from_rows(
            vec![vec![i(1), i(2), i(3)], vec![i(2), i(4), i(6)], vec![i(0), i(1), f.xi()]],
            3,
        );
        assert_eq!(rank(&f, &a), 2);
        let ker = kernel(&f, &a);
        assert_eq!(ker.len(), 1);
        let col = Matrix::from_rows(ker[0].iter().map(|x| vec![x.clone()]).collect(), 1);
        assert!(is_zero_matrix(&f, &matmul(&f, &a, &col)));
        assert!(f.is_zero(&determinant(&f, &a)));
        assert_eq!(determinant(&f, &identity(&f, 4)), f.one());
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let f = ResidueField::new(12, 0);
        let mut b = EchelonBasis::new(f.clone(), 3);
        assert!(b.insert(&[1, 2, 3]));
        assert!(b.insert(&[0, 1, 1]));
        assert!(!b.insert(&[1, 3, 4]));
        assert!(b.contains(&[2, 5, 7]));
        assert_eq!(b.dim(), 2);
    }
}
