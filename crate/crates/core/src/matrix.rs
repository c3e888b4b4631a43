//! Dense integer matrices and exact characteristic polynomials.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics when the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            data: self.data.iter().map(|x| -x).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// `xᵀ·self·y`
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> i64 {
        x.iter().zip(self.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// `Mᵀ·self·M == self`
    pub fn preserved_by(&self, m: &IntMatrix) -> bool {
        &(&m.transpose() * self) * m == *self
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        *self == self.transpose().neg()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.checked_mul(rhs[(k, j)]).expect("integer overflow in matrix product");
                    out[(i, j)] = out[(i, j)]
                        .checked_add(prod)
                        .expect("integer overflow in matrix product");
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Integer polynomial in `t`, ascending coefficients, no trailing zeros
/// (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharPoly(pub Vec<BigInt>);

impl CharPoly {
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn coefficient_strings(&self) -> Vec<String> {
        self.0.iter().map(BigInt::to_string).collect()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin; these bases are exact for all `u64`.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, largest first.
fn moduli() -> impl Iterator<Item = u64> {
    (1..(1u64 << 61)).rev().map(|k| 2 * k + 1).filter(|&n| is_prime(n))
}

/// `det(tI − A) mod m` via reduction to upper Hessenberg form.
fn char_poly_mod(a: &IntMatrix, m: u64) -> Vec<u64> {
    let n = a.rows();
    let red = |x: i64| x.rem_euclid(m as i64) as u64;
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| red(a[(i, j)])).collect()).collect();
    for k in 1..n.saturating_sub(1) {
        let Some(piv) = (k..n).find(|&i| h[i][k - 1] != 0) else {
            continue;
        };
        if piv != k {
            h.swap(piv, k);
            for row in h.iter_mut() {
                row.swap(piv, k);
            }
        }
        let inv = pow_mod(h[k][k - 1], m - 2, m);
        for i in k + 1..n {
            let u = mul_mod(h[i][k - 1], inv, m);
            if u == 0 {
                continue;
            }
            let (top, bottom) = h.split_at_mut(i);
            for (x, &y) in bottom[0].iter_mut().zip(&top[k]) {
                *x = (*x + m - mul_mod(u, y, m)) % m;
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], m);
                row[k] = (row[k] + t) % m;
            }
        }
    }
    // p_{k+1} = (t − h_kk) p_k − Σ_{i<k} h_ik (h_{i+1,i} ⋯ h_{k,k−1}) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % m;
            next[d] = (next[d] + m - mul_mod(h[k][k], c, m)) % m;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h[i + 1][i], m);
            let f = mul_mod(h[i][k], prod, m);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + m - mul_mod(f, c, m)) % m;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

/// Bits needed for `2·max|c_k| < Π moduli`. Each coefficient is a signed sum
/// of `C(n,k)` principal minors, each at most `R^k` by Hadamard, where `R`
/// bounds the Euclidean row norms; so `|c_k| ≤ (1+R)^n`.
fn coefficient_bits(a: &IntMatrix) -> u64 {
    let r = (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| (a[(i, j)] as f64).powi(2)).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    (a.rows() as f64 * (1.0 + r).log2()).ceil() as u64 + 2
}

/// `det(tI − A)` with exact integer coefficients, constant term first.
/// Computed modulo enough large primes to pin down every coefficient.
pub fn char_poly(a: &IntMatrix) -> CharPoly {
    assert!(a.is_square(), "characteristic polynomial needs a square matrix");
    let n = a.rows();
    let need = coefficient_bits(a);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut modulus = BigInt::one();
    for m in moduli() {
        let residues = char_poly_mod(a, m);
        let bm = BigInt::from(m);
        let inv = BigInt::from(pow_mod((&modulus % &bm).to_u64().expect("reduced"), m - 2, m));
        for (c, r) in coeffs.iter_mut().zip(residues) {
            // c ← c + M·((r − c)·M⁻¹ mod m)
            let delta = ((BigInt::from(r) - &*c) * &inv).mod_floor(&bm);
            *c += &modulus * delta;
        }
        modulus *= bm;
        if modulus.bits() > need {
            break;
        }
    }
    let half = &modulus >> 1;
    for c in coeffs.iter_mut() {
        if *c > half {
            *c -= &modulus;
        }
    }
    CharPoly(coeffs)
}
