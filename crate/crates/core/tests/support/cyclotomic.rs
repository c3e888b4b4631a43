//! Exact arithmetic in Z[ζ_N] used as an eigenvalue oracle.
//!
//! Elements are integer polynomials reduced modulo the N-th cyclotomic
//! polynomial, so equality is structural. Nothing here touches matrices or
//! vanishing cycles: the oracle only expands products of linear factors
//! `t - ζ^e` and checks that the result has rational (hence integer)
//! coefficients.

#![allow(dead_code)]

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut a: Vec<i128>) -> Vec<i128> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Exact division by a monic polynomial. Panics if the remainder is nonzero.
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let den = trim(den.to_vec());
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = trim(num.to_vec());
    if rem.len() < den.len() {
        assert!(rem.iter().all(|&c| c == 0));
        return vec![0];
    }
    let mut quot = vec![0i128; rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + den.len() - 1];
        quot[k] = c;
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    trim(quot)
}

/// Φ_n as ascending integer coefficients.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i128> {
    let mut xn_minus_1 = vec![0i128; n + 1];
    xn_minus_1[0] = -1;
    xn_minus_1[n] = 1;
    let mut acc = xn_minus_1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            acc = poly_div_exact(&acc, &cyclotomic_polynomial(d));
        }
    }
    acc
}

/// Element of Z[x]/Φ_N(x).
#[derive(Clone, Debug, PartialEq, Eq)]
struct CycElem(Vec<i128>);

struct CycRing {
    n: usize,
    phi: Vec<i128>,
}

impl CycRing {
    fn new(n: usize) -> Self {
        CycRing {
            n,
            phi: cyclotomic_polynomial(n),
        }
    }

    fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, a: Vec<i128>) -> CycElem {
        let d = self.degree();
        let mut a = a;
        for k in (d..a.len()).rev() {
            let c = a[k];
            if c == 0 {
                continue;
            }
            for (i, ph) in self.phi.iter().enumerate() {
                a[k - d + i] -= c * ph;
            }
        }
        a.truncate(d.max(1));
        a.resize(d.max(1), 0);
        CycElem(a)
    }

    fn constant(&self, c: i128) -> CycElem {
        self.reduce(vec![c])
    }

    fn zeta_pow(&self, e: usize) -> CycElem {
        let mut v = vec![0i128; e % self.n + 1];
        v[e % self.n] = 1;
        self.reduce(v)
    }

    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn neg(&self, a: &CycElem) -> CycElem {
        CycElem(a.0.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        self.reduce(poly_mul(&a.0, &b.0))
    }

    fn as_integer(&self, a: &CycElem) -> Option<i128> {
        if a.0.iter().skip(1).all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Expands ∏_{1≤i<p, 1≤j<q} (t - sign·ζ_p^i ζ_q^j) with exact cyclotomic
/// arithmetic. `sign` is +1 for the curve fibre, -1 for the suspended fibre.
/// Returns ascending integer coefficients.
pub fn torus_eigen_polynomial(p: usize, q: usize, sign: i32) -> Vec<i64> {
    let l = p / gcd(p, q) * q;
    let n = 2 * l;
    let ring = CycRing::new(n);
    // coefficients in t, ascending, each in Z[ζ_N]
    let mut poly: Vec<CycElem> = vec![ring.constant(1)];
    for i in 1..p {
        for j in 1..q {
            let mut e = i * (n / p) + j * (n / q);
            if sign < 0 {
                e += n / 2;
            }
            let root = ring.zeta_pow(e);
            let minus_root = ring.neg(&root);
            let mut next = vec![ring.constant(0); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = ring.add(&next[k + 1], c);
                next[k] = ring.add(&next[k], &ring.mul(c, &minus_root));
            }
            poly = next;
        }
    }
    poly.iter()
        .map(|c| {
            let v = ring
                .as_integer(c)
                .expect("eigenvalue product must have integer coefficients");
            i64::try_from(v).unwrap()
        })
        .collect()
}

#[test]
fn cyclotomic_polynomials_small() {
    assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
    assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
    assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
    assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
    assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
}

#[test]
fn oracle_hand_values() {
    // trefoil: ζ3·ζ2, ζ3²·ζ2 are the primitive sixth roots
    assert_eq!(torus_eigen_polynomial(3, 2, 1), vec![1, -1, 1]);
    assert_eq!(torus_eigen_polynomial(2, 3, 1), vec![1, -1, 1]);
    // Hopf: ζ2·ζ2 = 1
    assert_eq!(torus_eigen_polynomial(2, 2, 1), vec![-1, 1]);
    assert_eq!(torus_eigen_polynomial(2, 2, -1), vec![1, 1]);
    // suspended trefoil: primitive cube roots
    assert_eq!(torus_eigen_polynomial(3, 2, -1), vec![1, 1, 1]);
}
