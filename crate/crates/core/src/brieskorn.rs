//! Critical loci of morsified Brieskorn polynomials
//!
//! `π(z) = z0^p + z1^q + z2² + … + z_{s+1}² − δ0·z0 − δ1·z1`
//!
//! The gradient system decouples into `p·z0^{p−1} = δ0` and
//! `q·z1^{q−1} = δ1`, so every critical point is a pair of radial roots and
//! nothing here calls a general polynomial solver.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Two critical values collide when closer than this times `max|v|`.
pub const DISTINCT_TOLERANCE: f64 = 1e-12;
/// Hessian determinants at or below this modulus count as degenerate.
pub const HESSIAN_TOLERANCE: f64 = 1e-300;
/// Re-draws of the random morsification phase after the first attempt.
pub const MORSIFICATION_RETRIES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BrieskornError {
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("degenerate morsification: {0}")]
    DegenerateMorsification(String),
    #[error("epsilon {epsilon} is not a regular value above max critical modulus {max_modulus}")]
    InvalidEpsilon { epsilon: f64, max_modulus: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorsifiedBrieskornMap {
    p: u32,
    q: u32,
    delta: (Complex64, Complex64),
    suspensions: u32,
}

impl MorsifiedBrieskornMap {
    pub fn new(p: u32, q: u32, delta: (Complex64, Complex64), suspensions: u32) -> Result<Self, BrieskornError> {
        if p < 2 || q < 2 {
            return Err(BrieskornError::InvalidMap(format!(
                "exponents must be at least 2, got ({p}, {q})"
            )));
        }
        for (name, e, d) in [("delta0", p, delta.0), ("delta1", q, delta.1)] {
            if !d.re.is_finite() || !d.im.is_finite() {
                return Err(BrieskornError::InvalidMap(format!("{name} is not finite")));
            }
            if d.is_zero() && e != 2 {
                return Err(BrieskornError::InvalidMap(format!(
                    "{name} = 0 is only allowed for exponent 2 (exponent is {e})"
                )));
            }
        }
        Ok(MorsifiedBrieskornMap {
            p,
            q,
            delta,
            suspensions,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn delta(&self) -> (Complex64, Complex64) {
        self.delta
    }

    pub fn suspensions(&self) -> u32 {
        self.suspensions
    }

    /// Number of complex coordinates, `2 + s`.
    pub fn dimension(&self) -> usize {
        2 + self.suspensions as usize
    }

    pub fn conjugate(&self) -> Self {
        MorsifiedBrieskornMap {
            delta: (self.delta.0.conj(), self.delta.1.conj()),
            ..self.clone()
        }
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.dimension());
        let mut v = z[0].powu(self.p) + z[1].powu(self.q) - self.delta.0 * z[0] - self.delta.1 * z[1];
        for w in &z[2..] {
            v += w * w;
        }
        v
    }

    pub fn gradient(&self, z: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(z.len(), self.dimension());
        let mut g = vec![
            z[0].powu(self.p - 1) * self.p as f64 - self.delta.0,
            z[1].powu(self.q - 1) * self.q as f64 - self.delta.1,
        ];
        g.extend(z[2..].iter().map(|w| w * 2.0));
        g
    }

    /// Diagonal of the complex Hessian at `z`.
    pub fn hessian_diagonal(&self, z: &[Complex64]) -> Vec<Complex64> {
        let (p, q) = (self.p, self.q);
        let mut h = vec![
            z[0].powu(p - 2) * (p * (p - 1)) as f64,
            z[1].powu(q - 2) * (q * (q - 1)) as f64,
        ];
        h.extend(std::iter::repeat_n(Complex64::new(2.0, 0.0), self.suspensions as usize));
        h
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub coords: Vec<Complex64>,
    pub value: Complex64,
    pub hessian_det: Complex64,
    /// `(k, l)`: which (p−1)-th root of `δ0/p` and (q−1)-th root of `δ1/q`.
    pub root_index: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalLocus {
    map: MorsifiedBrieskornMap,
    points: Vec<CriticalPoint>,
    epsilon: f64,
}

impl CriticalLocus {
    pub fn map(&self) -> &MorsifiedBrieskornMap {
        &self.map
    }

    pub fn points(&self) -> &[CriticalPoint] {
        &self.points
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn max_value_modulus(&self) -> f64 {
        self.points.iter().map(|c| c.value.norm()).fold(0.0, f64::max)
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.points.iter().map(|c| c.value).collect()
    }

    /// Replace the reference regular value. It must exceed every critical
    /// value modulus.
    pub fn with_epsilon(mut self, epsilon: f64) -> Result<Self, BrieskornError> {
        let max_modulus = self.max_value_modulus();
        if !(epsilon.is_finite() && epsilon > max_modulus) {
            return Err(BrieskornError::InvalidEpsilon { epsilon, max_modulus });
        }
        self.epsilon = epsilon;
        Ok(self)
    }
}

/// Counts for the Milnor fibre `V_ε(p,q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorNumbers {
    pub mu: i64,
    pub euler_char: i64,
    pub h1_rank: i64,
}

pub fn milnor_numbers(p: u32, q: u32) -> MilnorNumbers {
    let mu = (p as i64 - 1) * (q as i64 - 1);
    MilnorNumbers {
        mu,
        euler_char: 1 - mu,
        h1_rank: mu,
    }
}

/// `e^{2πi·num/den}` with exact values on quarter turns.
fn unit_root(turns: f64) -> Complex64 {
    let quarters = turns * 4.0;
    if (quarters - quarters.round()).abs() < 1e-15 {
        match (quarters.round() as i64).rem_euclid(4) {
            0 => return Complex64::new(1.0, 0.0),
            1 => return Complex64::new(0.0, 1.0),
            2 => return Complex64::new(-1.0, 0.0),
            _ => return Complex64::new(0.0, -1.0),
        }
    }
    Complex64::from_polar(1.0, 2.0 * PI * turns)
}

/// All solutions of `e·z^{e−1} = δ`, ordered by root index.
fn radial_roots(e: u32, delta: Complex64) -> Vec<Complex64> {
    let m = e - 1;
    if m == 1 {
        return vec![delta / e as f64];
    }
    let base = delta / e as f64;
    let r = base.norm().powf(1.0 / m as f64);
    let theta_turns = base.arg() / (2.0 * PI);
    (0..m)
        .map(|k| unit_root((theta_turns + k as f64) / m as f64) * r)
        .collect()
}

fn build_point(map: &MorsifiedBrieskornMap, z0: Complex64, z1: Complex64, idx: (usize, usize)) -> CriticalPoint {
    let mut coords = vec![z0, z1];
    coords.resize(map.dimension(), Complex64::zero());
    let value = map.evaluate(&coords);
    let hessian_det = map
        .hessian_diagonal(&coords)
        .into_iter()
        .fold(Complex64::new(1.0, 0.0), |a, b| a * b);
    CriticalPoint {
        coords,
        value,
        hessian_det,
        root_index: idx,
    }
}

fn default_epsilon(max_modulus: f64) -> f64 {
    if max_modulus < 1.0 {
        1.0
    } else {
        (2.0 * max_modulus).ceil()
    }
}

fn check_generic(points: &[CriticalPoint]) -> Result<(), BrieskornError> {
    for (i, c) in points.iter().enumerate() {
        let d = c.hessian_det.norm();
        if !d.is_finite() || d <= HESSIAN_TOLERANCE {
            return Err(BrieskornError::DegenerateMorsification(format!(
                "Hessian determinant at critical point {i} is {d:e}"
            )));
        }
    }
    let max_mod = points.iter().map(|c| c.value.norm()).fold(0.0, f64::max);
    let tol = DISTINCT_TOLERANCE * max_mod;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (points[i].value - points[j].value).norm() <= tol {
                return Err(BrieskornError::DegenerateMorsification(format!(
                    "critical values {i} and {j} collide"
                )));
            }
        }
    }
    Ok(())
}

/// All `(p−1)(q−1)` critical points, ordered lexicographically by root index.
pub fn critical_locus(map: &MorsifiedBrieskornMap) -> Result<CriticalLocus, BrieskornError> {
    let roots0 = radial_roots(map.p, map.delta.0);
    let roots1 = radial_roots(map.q, map.delta.1);
    let mut points = Vec::with_capacity(roots0.len() * roots1.len());
    for (k, &z0) in roots0.iter().enumerate() {
        for (l, &z1) in roots1.iter().enumerate() {
            points.push(build_point(map, z0, z1, (k, l)));
        }
    }
    check_generic(&points)?;
    let max_mod = points.iter().map(|c| c.value.norm()).fold(0.0, f64::max);
    Ok(CriticalLocus {
        map: map.clone(),
        points,
        epsilon: default_epsilon(max_mod),
    })
}

/// Locus of the same map with one more square term appended.
pub fn suspend(locus: &CriticalLocus) -> CriticalLocus {
    let mut map = locus.map.clone();
    map.suspensions += 1;
    let points = locus
        .points
        .iter()
        .map(|c| {
            let mut coords = c.coords.clone();
            coords.push(Complex64::zero());
            CriticalPoint {
                coords,
                value: c.value,
                hessian_det: c.hessian_det * 2.0,
                root_index: c.root_index,
            }
        })
        .collect();
    CriticalLocus {
        map,
        points,
        epsilon: locus.epsilon,
    }
}

fn default_delta(e: u32, rng: &mut ChaCha8Rng) -> Complex64 {
    if e == 2 {
        return Complex64::zero();
    }
    let modulus = e as f64 * 0.1f64.powi(e as i32 - 1);
    let phase: f64 = rng.gen_range(0.0..1.0);
    Complex64::from_polar(modulus, 2.0 * PI * phase)
}

/// Critical locus under the default morsification: `δ = 0` for exponent 2,
/// otherwise modulus `e·10^{1−e}` with a seeded random phase, re-drawn until
/// the critical values are pairwise distinct.
pub fn default_critical_locus(p: u32, q: u32, suspensions: u32, seed: u64) -> Result<CriticalLocus, BrieskornError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_err = None;
    for _ in 0..=MORSIFICATION_RETRIES {
        let delta = (default_delta(p, &mut rng), default_delta(q, &mut rng));
        let map = MorsifiedBrieskornMap::new(p, q, delta, suspensions)?;
        match critical_locus(&map) {
            Ok(locus) => return Ok(locus),
            Err(e @ BrieskornError::DegenerateMorsification(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

/// Exact real root of `e·z^{e−1} = δ` for rational `δ`, when the root is
/// itself rational. Returned with its root index in the ordering of
/// [`critical_locus`].
pub fn rational_real_roots(e: u32, delta: &BigRational) -> Vec<(usize, BigRational)> {
    let m = e - 1;
    let base = delta / BigRational::from_integer(BigInt::from(e));
    if m == 1 {
        return vec![(0, base)];
    }
    if base.is_zero() {
        return Vec::new();
    }
    let root_of = |x: &BigRational| -> Option<BigRational> {
        let n = x.numer().abs();
        let d = x.denom().abs();
        let rn = n.nth_root(m);
        let rd = d.nth_root(m);
        if num_traits::pow(rn.clone(), m as usize) == n && num_traits::pow(rd.clone(), m as usize) == d {
            Some(BigRational::new(rn, rd))
        } else {
            None
        }
    };
    let Some(r) = root_of(&base) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if base.is_positive() {
        out.push((0, r.clone()));
        if m.is_multiple_of(2) {
            out.push((m as usize / 2, -r));
        }
    } else if m % 2 == 1 {
        // arg(base) = π, the real root sits at angle (π + 2πk)/m = π
        out.push(((m as usize - 1) / 2, -r));
    }
    out
}

/// Exact value `z^e − δ·z` of one decoupled summand.
pub fn rational_summand_value(e: u32, delta: &BigRational, z: &BigRational) -> BigRational {
    num_traits::pow(z.clone(), e as usize) - delta * z
}

/// Exact critical points for rational real `δ`: every pair of rational real
/// roots with its exact critical value. Points whose roots are not rational
/// are omitted.
pub fn rational_critical_points(
    p: u32,
    q: u32,
    delta0: &BigRational,
    delta1: &BigRational,
) -> Vec<((usize, usize), [BigRational; 2], BigRational)> {
    let r0 = if p == 2 || !delta0.is_zero() {
        rational_real_roots(p, delta0)
    } else {
        Vec::new()
    };
    let r1 = if q == 2 || !delta1.is_zero() {
        rational_real_roots(q, delta1)
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for (k, z0) in &r0 {
        for (l, z1) in &r1 {
            let v = rational_summand_value(p, delta0, z0) + rational_summand_value(q, delta1, z1);
            out.push(((*k, *l), [z0.clone(), z1.clone()], v));
        }
    }
    out.sort_by_key(|a| a.0);
    out
}

/// `BigRational` → `f64` without going through strings.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}
