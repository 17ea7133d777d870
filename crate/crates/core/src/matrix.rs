//! Square matrices and vectors over the localized ring.
//!
//! Column `j` of a matrix is the image of basis vector `j`; matrices act on
//! column vectors from the left, so `(A * B) v = A (B v)`.

use std::fmt;
use std::ops::{Index, Mul};

use num_rational::BigRational;

use crate::polyring::{LaurentPoly, Localized, PolyError};
use crate::scalar::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is singular")]
    Singular,
    #[error("determinant {0} is not a unit of the localized ring")]
    NonUnitDeterminant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Coordinate vector over the localized ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<C> {
    coords: Vec<Localized<C>>,
}

impl<C: Coeff> Vector<C> {
    pub fn new(coords: Vec<Localized<C>>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords: vec![Localized::zero(); n] }
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.coords[i] = Localized::one();
        v
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Localized<C>] {
        &self.coords
    }

    pub fn scale(&self, s: &Localized<C>) -> Self {
        Self { coords: self.coords.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self {
            coords: self.coords.iter().zip(&other.coords).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn is_denominator_free(&self) -> bool {
        self.coords.iter().all(Localized::is_laurent)
    }
}

impl<C> Index<usize> for Vector<C> {
    type Output = Localized<C>;
    fn index(&self, i: usize) -> &Localized<C> {
        &self.coords[i]
    }
}

impl<C: Coeff> fmt::Debug for Vector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

/// `n × n` matrix over the localized ring, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<C> {
    n: usize,
    entries: Vec<Localized<C>>,
}

impl<C: Coeff> Matrix<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![Localized::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Localized::one(); n])
    }

    pub fn diagonal(d: &[Localized<C>]) -> Self {
        let n = d.len();
        let mut m = Self::zero(n);
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    /// Builds a matrix from its rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Localized<C>>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, entries: rows.into_iter().flatten().collect() }
    }

    /// Parses each entry with the polynomial text parser.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self, PolyError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_rows(parsed))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &Localized<C> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Localized<C>) {
        self.entries[i * self.n + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Localized<C>] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vector<C> {
        Vector::new((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = &Localized<C>> {
        self.entries.iter()
    }

    pub fn scale(&self, s: &Localized<C>) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Localized::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector<C>) -> Vector<C> {
        assert_eq!(self.n, v.len(), "dimension mismatch");
        Vector::new(
            (0..self.n)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.coords())
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| acc.mul_mat(self))
    }

    pub fn is_denominator_free(&self) -> bool {
        self.entries.iter().all(Localized::is_laurent)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul_mat(other) == other.mul_mat(self)
    }

    /// Smallest `(a, b)` with `(q - 1)^a (q + 1)^b · self` denominator-free.
    fn common_denominator(&self) -> (u32, u32) {
        self.entries.iter().fold((0, 0), |(a, b), x| {
            let (xa, xb) = x.denominator_exps();
            (a.max(xa), b.max(xb))
        })
    }

    /// Rows of `d · self` as Laurent polynomials, with `d` the common denominator.
    fn cleared_rows(&self) -> (Vec<Vec<LaurentPoly<C>>>, (u32, u32)) {
        let (a, b) = self.common_denominator();
        let rows = (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.numerator_over(a, b)).collect())
            .collect();
        (rows, (a, b))
    }

    /// Determinant.
    pub fn det(&self) -> Localized<C> {
        let (rows, (a, b)) = self.cleared_rows();
        let n = self.n as u32;
        match gauss_jordan(rows, self.n) {
            Ok(GaussJordan { pivot, sign, .. }) => {
                let d = Localized::new(pivot, a * n, b * n);
                if sign < 0 {
                    -d
                } else {
                    d
                }
            }
            Err(_) => Localized::zero(),
        }
    }

    /// Inverse over the localized ring.
    ///
    /// Clears denominators, runs fraction-free Gauss–Jordan on `[B | I]`, and
    /// divides by the final pivot, which must be a unit.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.n;
        let (mut rows, (a, b)) = self.cleared_rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }));
        }
        let GaussJordan { pivot, rows, .. } = gauss_jordan(rows, n)?;
        let pivot_inv = Localized::from_poly(pivot.clone())
            .inverse()
            .map_err(|_| MatrixError::NonUnitDeterminant(pivot.to_string()))?;
        let factor = &Localized::from_poly(&LaurentPoly::q_minus_one().pow(a) * &LaurentPoly::q_plus_one().pow(b))
            * &pivot_inv;
        let mut out = Self::zero(n);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().skip(n).enumerate() {
                out.set(i, j, &Localized::from_poly(x) * &factor);
            }
        }
        Ok(out)
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        let (mut m, _) = self.cleared_rows();
        let n = self.n;
        let mut prev = LaurentPoly::one();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..n {
                for j in col + 1..n {
                    let t = &(&m[r][col] * &m[i][j]) - &(&m[i][col] * &m[r][j]);
                    m[i][j] = t.exact_div(&prev).expect("fraction-free elimination is exact");
                }
                m[i][col] = LaurentPoly::zero();
            }
            prev = m[r][col].clone();
            r += 1;
        }
        r
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix { n: self.n, entries: self.entries.iter().map(|x| x.map_coeffs(&f)).collect() }
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map_coeffs(|c| c.to_rational())
    }

    /// Entries in canonical text form, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.n).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect()
    }
}

struct GaussJordan<C> {
    pivot: LaurentPoly<C>,
    sign: i32,
    rows: Vec<Vec<LaurentPoly<C>>>,
}

/// Fraction-free Gauss–Jordan on the first `n` columns.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact. On return the left `n × n` block is `pivot · I`
/// and `sign · pivot` is its determinant.
fn gauss_jordan<C: Coeff>(
    mut m: Vec<Vec<LaurentPoly<C>>>,
    n: usize,
) -> Result<GaussJordan<C>, MatrixError> {
    let width = m.first().map_or(0, Vec::len);
    let mut prev = LaurentPoly::one();
    let mut sign = 1;
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(MatrixError::Singular)?;
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        let pk = m[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m[i][k].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let t = &(&pk * &m[i][j]) - &(&f * &m[k][j]);
                m[i][j] = t.exact_div(&prev)?;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = pk;
    }
    Ok(GaussJordan { pivot: prev, sign, rows: m })
}

impl<'a, C: Coeff> Mul<&'a Matrix<C>> for &'a Matrix<C> {
    type Output = Matrix<C>;
    fn mul(self, rhs: &'a Matrix<C>) -> Matrix<C> {
        self.mul_mat(rhs)
    }
}

impl<'a, C: Coeff> Mul<&'a Vector<C>> for &'a Matrix<C> {
    type Output = Vector<C>;
    fn mul(self, rhs: &'a Vector<C>) -> Vector<C> {
        self.mul_vec(rhs)
    }
}

impl<C: Coeff> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_strings().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{CoreMatrix, LocalizedScalar};

    fn m(rows: &[&[&str]]) -> CoreMatrix {
        Matrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn inverse_of_block_matrix() {
        let a = m(&[&["q^2", "q"], &["q", "q^2"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert_eq!(&inv * &a, Matrix::identity(2));
        let expected = m(&[
            &["1/(q^2 - 1)", "-1/(q^3 - q)"],
            &["-1/(q^3 - q)", "1/(q^2 - 1)"],
        ]);
        assert_eq!(inv, expected);
    }

    #[test]
    fn inverse_needs_pivoting_and_fractions() {
        let a = m(&[&["0", "1/(q + 1)", "0"], &["q - 1", "0", "0"], &["1", "1", "q"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(3));
    }

    #[test]
    fn inverse_errors() {
        let singular = m(&[&["q", "q^2"], &["1", "q"]]);
        assert_eq!(singular.inverse(), Err(MatrixError::Singular));
        assert_eq!(singular.rank(), 1);
        let non_unit = m(&[&["q^2 + 1", "0"], &["0", "1"]]);
        assert!(matches!(non_unit.inverse(), Err(MatrixError::NonUnitDeterminant(_))));
    }

    #[test]
    fn determinant_and_rank() {
        let a = m(&[&["0", "1"], &["q - 1", "5"]]);
        assert_eq!(a.det(), "1 - q".parse::<LocalizedScalar>().unwrap());
        assert_eq!(a.rank(), 2);
        assert_eq!(CoreMatrix::zero(3).rank(), 0);
        let b = m(&[&["1/(q - 1)", "0"], &["0", "q"]]);
        assert_eq!(b.det(), "q/(q - 1)".parse::<LocalizedScalar>().unwrap());
    }

    #[test]
    fn column_convention() {
        // column j is the image of e_j
        let a = m(&[&["1", "2"], &["3", "4"]]);
        let img = a.mul_vec(&Vector::basis(2, 1));
        assert_eq!(img, a.column(1));
        assert_eq!(img[0], LocalizedScalar::from_int(2));
    }
}
