//! Exact dense linear algebra over the coefficient field, plus the graded
//! piece extraction it supports. Pivoting is fully deterministic: first
//! usable column, lowest row index.

use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
            data.extend(r);
        }
        let _ = field;
        Matrix { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.ncols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.ncols + j] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == self.nrows {
                break;
            }
            let Some(p) = (row..self.nrows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.ncols {
                    self.data.swap(row * self.ncols + j, p * self.ncols + j);
                }
            }
            let inv = self.at(row, col).inv().expect("pivot nonzero");
            for j in col..self.ncols {
                let v = self.at(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.nrows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for j in col..self.ncols {
                    let v = self.at(r, j).sub(&factor.mul(self.at(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right kernel, one vector per free column, deterministic.
    pub fn kernel_basis(mut self, field: &FieldSpec) -> Vec<Vec<FieldElement>> {
        let pivots = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.ncols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![field.zero(); self.ncols];
            vec[free] = field.one();
            for (col, pr) in pivot_set.iter().enumerate() {
                if let Some(r) = pr {
                    vec[col] = self.at(*r, free).neg();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn determinant(mut self, field: &FieldSpec) -> FieldElement {
        assert_eq!(self.nrows, self.ncols, "determinant needs a square matrix");
        let n = self.nrows;
        let mut det = field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !self.at(r, col).is_zero()) else {
                return field.zero();
            };
            if p != col {
                for j in 0..n {
                    self.data.swap(col * n + j, p * n + j);
                }
                det = det.neg();
            }
            det = det.mul(self.at(col, col));
            let inv = self.at(col, col).inv().expect("pivot nonzero");
            for r in col + 1..n {
                if self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).mul(&inv);
                for j in col..n {
                    let v = self.at(r, j).sub(&factor.mul(self.at(col, j)));
                    self.set(r, j, v);
                }
            }
        }
        det
    }
}

/// A linearly independent spanning set for the degree-`d` piece of the ideal
/// generated by homogeneous `gens`: multiply each generator by every
/// monomial of complementary degree, then row-reduce over the field.
/// Generators of degree above `d` cannot contribute and are skipped.
pub fn graded_piece_basis(gens: &[Polynomial], d: u32) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let columns = monomials_of_degree(ring.nvars(), d);
    let col_index: std::collections::BTreeMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for g in gens {
        let h = g.homogeneity();
        if !h.is_homogeneous() {
            return Err(crate::error::Error::NonHomogeneous(g.to_string()));
        }
        let Some(e) = h.degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), d - e) {
            let prod = g.mul_term(&m, &ring.field().one());
            let mut row = vec![ring.field().zero(); columns.len()];
            for (mm, c) in prod.terms() {
                row[col_index[mm]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let mut mat = Matrix::from_rows(ring.field(), rows);
    let pivots = mat.rref();
    let mut out = Vec::new();
    for (r, _) in pivots.iter().enumerate() {
        let poly = Polynomial::from_terms(
            &ring,
            columns
                .iter()
                .enumerate()
                .filter(|(j, _)| !mat.at(r, *j).is_zero())
                .map(|(j, m)| (m.clone(), mat.at(r, j).clone())),
        );
        out.push(poly);
    }
    Ok(out)
}

/// Coordinates of a homogeneous polynomial in the degree-`d` monomial basis.
pub fn coordinates_in_degree(p: &Polynomial, d: u32, columns: &[Monomial]) -> Vec<FieldElement> {
    let field = p.ring().field();
    let mut row = vec![field.zero(); columns.len()];
    let index: std::collections::BTreeMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    for (m, c) in p.terms() {
        debug_assert_eq!(m.total_degree(), d);
        row[index[m]] = c.clone();
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::RingContext;

    fn ring2() -> Ring {
        RingContext::new(vec!["x".into(), "y".into()], FieldSpec::Rational).unwrap()
    }

    fn ring3() -> Ring {
        RingContext::new(
            vec!["x".into(), "y".into(), "z".into()],
            FieldSpec::Rational,
        )
        .unwrap()
    }

    #[test]
    fn rref_rank_kernel() {
        let f = FieldSpec::Rational;
        let e = |n: i64| f.from_i64(n);
        let mut m = Matrix::from_rows(
            &f,
            vec![
                vec![e(1), e(2), e(3)],
                vec![e(2), e(4), e(6)],
                vec![e(0), e(1), e(1)],
            ],
        );
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        let m2 = Matrix::from_rows(
            &f,
            vec![vec![e(1), e(2), e(3)], vec![e(2), e(4), e(6)], vec![e(0), e(1), e(1)]],
        );
        let kernel = m2.kernel_basis(&f);
        assert_eq!(kernel.len(), 1);
        // (1, 1, -1) spans the kernel
        assert_eq!(kernel[0], vec![e(-1), e(-1), e(1)]);
    }

    #[test]
    fn determinant_values() {
        let f = FieldSpec::Rational;
        let e = |n: i64| f.from_i64(n);
        let d = Matrix::from_rows(&f, vec![vec![e(2), e(1)], vec![e(1), e(1)]]).determinant(&f);
        assert_eq!(d, e(1));
        let d0 = Matrix::from_rows(&f, vec![vec![e(1), e(2)], vec![e(2), e(4)]]).determinant(&f);
        assert!(d0.is_zero());
    }

    #[test]
    fn graded_piece_linear_case() {
        let r = ring3();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let basis = graded_piece_basis(&[x.clone(), y.clone()], 1).unwrap();
        assert_eq!(basis, vec![x, y]);
    }

    #[test]
    fn graded_piece_monomial_multiplication() {
        // degree-2 piece of (x) in k[x,y] is spanned by x^2 and x*y
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let basis = graded_piece_basis(&[x.clone()], 2).unwrap();
        assert_eq!(
            basis,
            vec![x.pow(2), x.checked_mul(&y).unwrap()]
        );
    }

    #[test]
    fn graded_piece_degree_too_low() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let basis = graded_piece_basis(&[x.pow(2)], 1).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn graded_piece_rows_independent() {
        let r = ring3();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // redundant generators still produce an independent basis
        let two_x = x.scale(&r.field().from_i64(2));
        let basis = graded_piece_basis(&[x.clone(), two_x, y.clone()], 2).unwrap();
        let columns = monomials_of_degree(3, 2);
        let rows: Vec<Vec<FieldElement>> = basis
            .iter()
            .map(|p| coordinates_in_degree(p, 2, &columns))
            .collect();
        let n = rows.len();
        let rank = Matrix::from_rows(r.field(), rows).rank();
        assert_eq!(rank, n);
    }
}
