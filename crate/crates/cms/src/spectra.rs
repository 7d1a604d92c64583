//! Singular values two ways: a numeric route through a two-sided
//! cyclic rotation eigensolve of the exact Gram matrix, and exact
//! closed forms for the compound families, plus the fourth-power
//! indices L and R and the order-3 characteristic-polynomial checks.

use crate::construction::FriersonSpec;
use crate::error::{Error, Result};
use crate::matrix::IntSquareMatrix;
use num_bigint::BigInt;

/// A singular value counts toward the rank iff it exceeds this
/// fraction of the leading one. The closed-form zero/nonzero gap is
/// many orders of magnitude at every tested size.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Absolute window for reading an exact integer back out of a
/// floating-point squared singular value.
const SIGMA_SQ_RECONSTRUCT_TOL: f64 = 1e-6;

/// An exact-integer index when the spectrum supports it, otherwise a
/// float flagged inexact (non-magic inputs like AT_3 have irrational
/// leading singular values).
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Exact(BigInt),
    Approx(f64),
}

impl IndexValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            IndexValue::Exact(v) => big_to_f64(v),
            IndexValue::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            IndexValue::Exact(v) => Some(v),
            IndexValue::Approx(_) => None,
        }
    }
}

fn big_to_f64(v: &BigInt) -> f64 {
    v.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

/// The singular-value profile of one square.
#[derive(Debug, Clone)]
pub struct SpectralProfile {
    /// Singular values, descending, length n.
    pub sigmas: Vec<f64>,
    /// Exact squared singular values (descending, nonzero head only
    /// padded with zeros to n) when available.
    pub sigma_sq_exact: Option<Vec<i128>>,
    pub rank: usize,
    /// L = sum of fourth powers of all singular values.
    pub l_index: IndexValue,
    /// R = L minus the fourth power of the leading singular value.
    pub r_index: IndexValue,
}

impl SpectralProfile {
    pub fn sigma_1(&self) -> f64 {
        self.sigmas.first().copied().unwrap_or(0.0)
    }

    fn from_exact_sigma_sq(mut sigma_sq: Vec<i128>, order: usize) -> Self {
        sigma_sq.sort_unstable_by(|a, b| b.cmp(a));
        sigma_sq.resize(order, 0);
        let rank = sigma_sq.iter().filter(|&&s| s > 0).count();
        let sigmas: Vec<f64> = sigma_sq.iter().map(|&s| (s as f64).sqrt()).collect();
        let (l, r) = fourth_power_indices(&sigma_sq);
        Self {
            sigmas,
            sigma_sq_exact: Some(sigma_sq),
            rank,
            l_index: IndexValue::Exact(l),
            r_index: IndexValue::Exact(r),
        }
    }
}

/// L = sum over i of (sigma_i^2)^2 and R = L - (sigma_1^2)^2, from an
/// exact descending list of squared singular values.
pub fn fourth_power_indices(sigma_sq: &[i128]) -> (BigInt, BigInt) {
    let l: BigInt = sigma_sq
        .iter()
        .map(|&s| {
            let b = BigInt::from(s);
            &b * &b
        })
        .sum();
    let head = BigInt::from(sigma_sq.first().copied().unwrap_or(0));
    let r = &l - &head * &head;
    (l, r)
}

/// Eigenvalues of a symmetric matrix by cyclic two-sided rotations
/// (the classic threshold scheme from Numerical Recipes 11.1).
/// Rotations continue until every off-diagonal element underflows
/// against its diagonal neighbours, capped at 100 sweeps.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 1..=100 {
        let mut sm = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                sm += a[p * n + q].abs();
            }
        }
        if sm == 0.0 {
            break;
        }
        let tresh = if sweep < 4 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n {
            for q in p + 1..n {
                let g = 100.0 * a[p * n + q].abs();
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                } else if a[p * n + q].abs() > tresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        a[p * n + q] / h
                    } else {
                        let theta = 0.5 * h / a[p * n + q];
                        let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            t = -t;
                        }
                        t
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * a[p * n + q];
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * n + q] = 0.0;
                    let rot = |a: &mut Vec<f64>, i: usize, j: usize, k: usize, l: usize| {
                        let g = a[i * n + j];
                        let h = a[k * n + l];
                        a[i * n + j] = g - s * (h + g * tau);
                        a[k * n + l] = h + s * (g - h * tau);
                    };
                    for j in 0..p {
                        rot(&mut a, j, p, j, q);
                    }
                    for j in p + 1..q {
                        rot(&mut a, p, j, j, q);
                    }
                    for j in q + 1..n {
                        rot(&mut a, p, j, q, j);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    d
}

/// Numeric singular values: forms G = M * M^T exactly in integers,
/// diagonalizes it in floating point, and takes square roots.
///
/// L is always exact (it equals the sum of the squared Gram entries);
/// R is exact only when sigma_1^2 reads back as an integer.
pub fn singular_values_numeric(m: &IntSquareMatrix) -> SpectralProfile {
    singular_values_numeric_with_tol(m, DEFAULT_RANK_TOL)
}

pub fn singular_values_numeric_with_tol(m: &IntSquareMatrix, rank_tol: f64) -> SpectralProfile {
    let n = m.order();
    let gram = m.gram();
    let gf: Vec<f64> = gram.entries().iter().map(|&e| e as f64).collect();
    let mut eigen = symmetric_eigenvalues(&gf, n);
    eigen.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
    // Eigenvalues at roundoff scale are exact zeros smeared by the
    // rotations; clamp them before the square root amplifies the noise.
    let noise_floor = eigen[0].max(0.0) * f64::EPSILON * 16.0 * n as f64;
    let sigmas: Vec<f64> = eigen
        .iter()
        .map(|&ev| if ev <= noise_floor { 0.0 } else { ev.sqrt() })
        .collect();

    let sigma_1 = sigmas[0];
    let rank = sigmas.iter().filter(|&&s| s > rank_tol * sigma_1).count();

    // L = ||G||_F^2 = sum of fourth powers of the SVs, exactly.
    let l_exact: BigInt = gram
        .entries()
        .iter()
        .map(|&e| {
            let b = BigInt::from(e);
            &b * &b
        })
        .sum();

    // Try to read every squared SV back as an integer; validate the
    // reconstruction against the exact trace of G.
    let sigma_sq_exact = reconstruct_sigma_sq(&sigmas, &gram);

    let r_index = match &sigma_sq_exact {
        Some(sq) => {
            let head = BigInt::from(sq[0]);
            IndexValue::Exact(&l_exact - &head * &head)
        }
        None => {
            let s1_sq = sigma_1 * sigma_1;
            IndexValue::Approx(big_to_f64(&l_exact) - s1_sq * s1_sq)
        }
    };

    SpectralProfile {
        sigmas,
        sigma_sq_exact,
        rank,
        l_index: IndexValue::Exact(l_exact),
        r_index,
    }
}

fn reconstruct_sigma_sq(sigmas: &[f64], gram: &IntSquareMatrix) -> Option<Vec<i128>> {
    let n = gram.order();
    let mut out = Vec::with_capacity(n);
    for &s in sigmas {
        let sq = s * s;
        let rounded = sq.round();
        if (sq - rounded).abs() > SIGMA_SQ_RECONSTRUCT_TOL {
            return None;
        }
        out.push(rounded as i128);
    }
    let trace: i128 = (0..n).map(|i| gram.get(i, i)).sum();
    if out.iter().sum::<i128>() == trace {
        Some(out)
    } else {
        None
    }
}

/// Exact squared singular values of a compound spec of order 3^l:
/// the line-sum value n(k + sum of members), and for each couple
/// (a, b) the signed pair 3^(2l-1) (a +/- b)^2; the rest are zeros.
pub fn closed_form_svs(spec: &FriersonSpec) -> Result<SpectralProfile> {
    let l = spec.level();
    if l == 0 {
        return Err(Error::EmptySpec);
    }
    let n = spec.order() as i128;
    let members: i128 = spec.couples.iter().map(|c| c.a + c.b).sum();
    let sigma_1 = n * (spec.k + members);
    let factor = 3i128.pow((2 * l - 1) as u32);
    let mut sigma_sq = vec![sigma_1 * sigma_1];
    for c in &spec.couples {
        sigma_sq.push(factor * (c.a + c.b) * (c.a + c.b));
        sigma_sq.push(factor * (c.a - c.b) * (c.a - c.b));
    }
    Ok(SpectralProfile::from_exact_sigma_sq(sigma_sq, spec.order()))
}

/// Exact squared singular values of the compounded most-perfect
/// order-4 square at a given level: order n = 4^level, leading value
/// n(n^2+1)/2, and a tail of 2*level values sqrt(5) * 2^e with
/// exponents 6*level-3, 6*level-5, ...
pub fn closed_form_svs_mppd(level: usize) -> Result<SpectralProfile> {
    if level == 0 {
        return Err(Error::InvalidLevel(0, 1, 8));
    }
    let n = 4usize.pow(level as u32);
    let ni = n as i128;
    let sigma_1 = ni * (ni * ni + 1) / 2;
    let mut sigma_sq = vec![sigma_1 * sigma_1];
    for t in 0..2 * level {
        let e = (6 * level - 3 - 2 * t) as u32;
        sigma_sq.push(5 * (1i128 << (2 * e)));
    }
    Ok(SpectralProfile::from_exact_sigma_sq(sigma_sq, n))
}

/// Exact characteristic polynomials for the order-3 case: the
/// eigenvalue cubic of M_3 and the singular-value cubic of its Gram
/// matrix, with their integer root checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicChecks {
    /// Monic coefficients [1, c2, c1, c0] of det(xI - M_3).
    pub ev_poly: [i128; 4],
    /// Monic coefficients [1, c2, c1, c0] of det(XI - M_3 M_3^T).
    pub gram_poly: [i128; 4],
    /// The integer roots of the Gram cubic, descending.
    pub gram_roots: [i128; 3],
}

fn char_poly_3x3(m: &IntSquareMatrix) -> [i128; 4] {
    assert_eq!(m.order(), 3);
    let g = |i, j| m.get(i, j);
    let trace = g(0, 0) + g(1, 1) + g(2, 2);
    let minors = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0))
        + (g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0))
        + (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1));
    let det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
        - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
        + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
    // det(xI - M) = x^3 - tr x^2 + m2 x - det
    [1, -trace, minors, -det]
}

fn eval_poly(p: &[i128; 4], x: i128) -> i128 {
    p.iter().fold(0, |acc, &c| acc * x + c)
}

/// Verifies the printed order-3 spectral algebra: the eigenvalue
/// cubic x^3 - 15x^2 - 24x + 360 with roots 15 and +/- 2*sqrt(6),
/// and the Gram cubic factoring as (X - 225)(X - 48)(X - 12).
pub fn m3_characteristic_checks() -> Result<CharacteristicChecks> {
    let m3 = crate::construction::catalog("m3")?;
    let ev_poly = char_poly_3x3(&m3);
    if ev_poly != [1, -15, -24, 360] {
        return Err(Error::VerificationFailure(format!(
            "eigenvalue cubic of M_3 came out as {ev_poly:?}"
        )));
    }
    // roots 15 and x^2 = 24: the cubic factors as (x - 15)(x^2 - 24)
    if eval_poly(&ev_poly, 15) != 0 {
        return Err(Error::VerificationFailure("15 is not an eigenvalue of M_3".into()));
    }

    let gram_poly = char_poly_3x3(&m3.gram());
    let gram_roots = [225, 48, 12];
    for root in gram_roots {
        if eval_poly(&gram_poly, root) != 0 {
            return Err(Error::VerificationFailure(format!(
                "{root} is not a root of the Gram cubic {gram_poly:?}"
            )));
        }
    }
    Ok(CharacteristicChecks {
        ev_poly,
        gram_poly,
        gram_roots,
    })
}
