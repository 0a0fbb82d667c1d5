use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest size accepted by the Ryser permanent.
pub const RYSER_LIMIT: usize = 30;

/// Square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<BigInt>]) -> Result<Self> {
        let mut m = Self::from_rows(cols)?;
        m = m.transpose();
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.n, self.n, other.n, other.n
            )));
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {}x{}",
                v.len(),
                self.n,
                self.n
            )));
        }
        Ok((0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Product of a sequence of matrices in written order.
    pub fn product<'a, I: IntoIterator<Item = &'a IntMatrix>>(n: usize, ms: I) -> Result<Self> {
        ms.into_iter()
            .try_fold(Self::identity(n), |acc, m| acc.try_mul(m))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x.abs()).collect(),
        }
    }

    /// Drops row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::DimensionMismatch("minor of a 1x1 matrix".into()));
        }
        let rows: Vec<Vec<BigInt>> = (0..self.n)
            .filter(|&i| i != r)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| j != c)
                    .map(|j| self.get(i, j).clone())
                    .collect()
            })
            .collect();
        Self::from_rows(&rows)
    }

    /// Fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v.div_floor(&prev);
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * &a[n * n - 1]
    }

    /// Ryser's formula with Gray-code updates of the row sums.
    pub fn permanent(&self) -> Result<BigInt> {
        let n = self.n;
        if n > RYSER_LIMIT {
            return Err(Error::TooLarge {
                what: "permanent",
                size: n,
                limit: RYSER_LIMIT,
            });
        }
        let mut sums = vec![BigInt::zero(); n];
        let mut total = BigInt::zero();
        let mut gray: u64 = 0;
        for k in 1u64..(1u64 << n) {
            let j = k.trailing_zeros() as usize;
            gray ^= 1 << j;
            let adding = gray & (1 << j) != 0;
            for (i, s) in sums.iter_mut().enumerate() {
                let x = self.get(i, j);
                if adding {
                    *s += x;
                } else {
                    *s -= x;
                }
            }
            let prod: BigInt = sums.iter().product();
            if gray.count_ones().is_multiple_of(2) {
                total += prod;
            } else {
                total -= prod;
            }
        }
        if n % 2 == 1 {
            total = -total;
        }
        Ok(total)
    }

    /// Inverse of a determinant-one 2x2 or a unimodular matrix via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let d = self.det();
        if !(d.is_one() || (-&d).is_one()) {
            return Err(Error::NotUnimodular(self.to_string()));
        }
        let n = self.n;
        if n == 1 {
            return Ok(Self::from_rows(&[vec![d]]).unwrap());
        }
        let mut inv = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i)?.det();
                let c = if (i + j) % 2 == 0 { c } else { -c };
                inv.set(i, j, c * &d);
            }
        }
        Ok(inv)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on a dimension mismatch; use `try_mul` to handle it.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.try_mul(rhs).expect("matrix dimensions differ")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Sum over all permutations; reference implementation for small matrices.
pub fn permanent_bruteforce(m: &IntMatrix) -> Result<BigInt> {
    const LIMIT: usize = 9;
    let n = m.dim();
    if n > LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force permanent",
            size: n,
            limit: LIMIT,
        });
    }
    fn go(m: &IntMatrix, row: usize, used: &mut Vec<bool>, acc: &BigInt, total: &mut BigInt) {
        if row == m.dim() {
            *total += acc;
            return;
        }
        for j in 0..m.dim() {
            if used[j] || m.get(row, j).is_zero() {
                continue;
            }
            used[j] = true;
            go(m, row + 1, used, &(acc * m.get(row, j)), total);
            used[j] = false;
        }
    }
    let mut total = BigInt::zero();
    go(m, 0, &mut vec![false; n], &BigInt::one(), &mut total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    // Leibniz expansion, independent of Bareiss
    fn det_leibniz(a: &IntMatrix) -> BigInt {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = vec![];
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.dim();
        let mut total = BigInt::zero();
        for p in perms(n) {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let prod: BigInt = (0..n).map(|i| a.get(i, p[i]).clone()).product();
            if inv % 2 == 0 {
                total += prod;
            } else {
                total -= prod;
            }
        }
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&[3, 5], &[7, 12]]).det(), BigInt::from(1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), BigInt::from(-1));
        assert_eq!(m(&[&[0, 0], &[0, 5]]).det(), BigInt::from(0));
        assert_eq!(
            m(&[&[0, 3, 37], &[0, 4, 53], &[1, 9, 115]]).det(),
            BigInt::from(11)
        );
    }

    #[test]
    fn ryser_small() {
        assert_eq!(m(&[&[1, 1], &[1, 1]]).permanent().unwrap(), BigInt::from(2));
        assert_eq!(m(&[&[5]]).permanent().unwrap(), BigInt::from(5));
        let j3 = m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(j3.permanent().unwrap(), BigInt::from(6));
    }

    #[test]
    fn ryser_limit() {
        let big = IntMatrix::identity(31);
        assert!(matches!(big.permanent(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn inverse_2x2() {
        let a = m(&[&[3, 2], &[4, 3]]);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(inv, m(&[&[3, -2], &[-4, 3]]));
        assert_eq!(&a * &inv, IntMatrix::identity(2));
        assert!(m(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(m(&[&[1, -2], &[3, 4]]).to_string(), "[[1,-2],[3,4]]");
    }

    fn matrix(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(proptest::collection::vec(lo..=hi, n), n)
                .prop_map(|rows| IntMatrix::from_rows(&rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(a in matrix(5, -6, 6)) {
            prop_assert_eq!(a.det(), det_leibniz(&a));
        }

        #[test]
        fn ryser_matches_bruteforce(a in matrix(6, -4, 4)) {
            prop_assert_eq!(a.permanent().unwrap(), permanent_bruteforce(&a).unwrap());
        }

        #[test]
        fn det_multiplicative(a in matrix(3, -5, 5), b in matrix(3, -5, 5)) {
            prop_assume!(a.dim() == b.dim());
            prop_assert_eq!((&a * &b).det(), a.det() * b.det());
        }
    }
}
