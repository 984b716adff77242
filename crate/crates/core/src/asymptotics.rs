//! Growth of the summatory function A(H) = R(0) + ... + R(H).
//!
//! A(H) grows like H^alpha with alpha = log 2 / log phi, but the normalized
//! ratio A(H)/H^alpha does not converge: it oscillates log-periodically
//! between two constants (~0.52534 and ~0.54338). The limiting shape is
//! controlled by the fair-coin Bernoulli convolution in base phi: writing
//! G for the CDF of sum_i eps_i phi^{-i} (eps_i iid uniform on {0,1},
//! support [0, phi]), one period of the profile is
//!     value(gamma) = (phi*sqrt(5))^alpha * G(gamma/phi^3) / gamma^alpha,
//! gamma in [1, phi].
//!
//! G itself is bracketed by exact dyadic rationals: each count n <= H
//! corresponds order-isomorphically to the lattice coordinate
//! x_n = a_n + n*phi, and the number of length-k 0/1 words decoding to a
//! value <= H equals a two-sided approximation of 2^k G(x_H / phi^{k+2})
//! with slack phi^3. Inverting that relation gives rigorous lower/upper
//! bounds with denominator 2^k, all in exact arithmetic.

use crate::counting::RStream;
use crate::dynamics::orbit_point;
use crate::golden::GoldenNum;
use crate::zeckendorf::fib;
use crate::{Error, Ratio, Result};
use dashu_float::DBig;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// log 2 / log phi, correctly rounded to f64.
pub const ALPHA_F64: f64 = 1.4404200904125566;

/// phi, correctly rounded to f64.
pub const PHI_F64: f64 = 1.618033988749895;

fn alpha_hp(precision: usize) -> DBig {
    let two = DBig::from(2).with_precision(precision).value();
    let five = DBig::from(5).with_precision(precision).value();
    let phi = (DBig::ONE + five.sqrt()) / DBig::from(2);
    two.ln() / phi.with_precision(precision).value().ln()
}

/// The exponent constant at `digits` decimal places (computed once per call
/// at guard precision; library hot paths use the threaded f64 constant).
pub fn alpha_decimal(digits: usize) -> String {
    assert!(digits <= 100, "supported up to 100 digits");
    format!("{:.*}", digits, alpha_hp(digits + 12))
}

/// One point of the normalized growth curve.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthSample {
    pub h: u64,
    pub log_h: f64,
    /// A(H) / H^alpha.
    pub ratio: f64,
}

fn ratio_f64(a: u128, h: u64) -> f64 {
    a as f64 / (h as f64).powf(ALPHA_F64)
}

/// The normalized profile A(H)/H^alpha for every H in [hmin, hmax], from
/// one exact streaming pass of the counts. A(H) here is far below 2^53, so
/// the float conversion is exact; the transcendental step is validated
/// against the high-precision path by `growth_ratio_hp`.
pub fn growth_curve(hmin: u64, hmax: u64) -> Vec<GrowthSample> {
    assert!(1 <= hmin && hmin <= hmax, "need 1 <= hmin <= hmax");
    let mut out = Vec::with_capacity((hmax - hmin + 1) as usize);
    let mut acc: u128 = 0;
    for (n, r) in RStream::new().take(hmax as usize + 1) {
        acc += r.to_u128().expect("count exceeds u128");
        if n >= hmin {
            out.push(GrowthSample { h: n, log_h: (n as f64).ln(), ratio: ratio_f64(acc, n) });
        }
    }
    out
}

/// A(H)/H^alpha at `digits` decimal places through the arbitrary-precision
/// path (exact A(H) supplied by the caller), for validating the f64 curve.
pub fn growth_ratio_hp(h: u64, a_h: &BigInt, digits: usize) -> String {
    let precision = digits + 16;
    let alpha = alpha_hp(precision);
    let num: DBig = a_h.to_string().parse().expect("integer parses");
    let num = num.with_precision(precision).value();
    let hf = DBig::from(h).with_precision(precision).value();
    format!("{:.*}", digits, num / hf.powf(&alpha))
}

/// Extremes of the normalized profile over a scanned range.
#[derive(Clone, Debug, PartialEq)]
pub struct Extremes {
    pub min_ratio: f64,
    pub argmin: u64,
    pub max_ratio: f64,
    pub argmax: u64,
}

/// Streaming min/max of A(H)/H^alpha over H in [hmin, hmax].
pub fn extremes(hmin: u64, hmax: u64) -> Extremes {
    assert!(1 <= hmin && hmin <= hmax, "need 1 <= hmin <= hmax");
    let mut acc: u128 = 0;
    let mut ext = Extremes { min_ratio: f64::INFINITY, argmin: 0, max_ratio: 0.0, argmax: 0 };
    for (n, r) in RStream::new().take(hmax as usize + 1) {
        acc += r.to_u128().expect("count exceeds u128");
        if n < hmin {
            continue;
        }
        let ratio = ratio_f64(acc, n);
        if ratio < ext.min_ratio {
            ext.min_ratio = ratio;
            ext.argmin = n;
        }
        if ratio > ext.max_ratio {
            ext.max_ratio = ratio;
            ext.argmax = n;
        }
    }
    ext
}

/// Two-sided dyadic bounds on G at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct CdfBound {
    /// The query point, for display only; the computation is exact.
    pub x: f64,
    pub k: u32,
    /// lower <= G(x) <= upper, both with denominator dividing 2^k.
    pub lower: Ratio,
    pub upper: Ratio,
}

/// Shared state for CDF queries at one depth k: the exact prefix sums
/// A(0..F_{k+2}) computed once by a single pass, plus the phi powers. The
/// context is immutable afterwards, so queries may run concurrently.
pub struct CdfContext {
    k: u32,
    /// prefix[n] = A(n) for n < F_{k+2}.
    prefix: Vec<u64>,
    /// 2^k, the number of length-k words.
    full: u64,
    /// F_{k+3} - 2, the largest value a length-k word can decode to.
    smax: u64,
    f_k2: u64,
    pow_k2: GoldenNum, // phi^{k+2}
    phi3: GoldenNum,   // phi^3
}

fn scale(g: &GoldenNum, c: &BigInt) -> GoldenNum {
    GoldenNum { p: &g.p * c, q: &g.q * c }
}

impl CdfContext {
    pub fn new(k: u32) -> Self {
        assert!((2..=34).contains(&k), "depth must lie in 2..=34");
        let f_k2 = fib(u64::from(k) + 2).to_u64().expect("Fibonacci index in range");
        let f_k3 = fib(u64::from(k) + 3).to_u64().expect("Fibonacci index in range");
        let mut prefix = Vec::with_capacity(f_k2 as usize);
        let mut acc = 0u64;
        for (n, r) in RStream::new() {
            if n >= f_k2 {
                break;
            }
            acc += r.to_u64().expect("count fits u64 at these depths");
            prefix.push(acc);
        }
        CdfContext {
            k,
            prefix,
            full: 1u64 << k,
            smax: f_k3 - 2,
            f_k2,
            pow_k2: GoldenNum::phi_pow(i64::from(k) + 2),
            phi3: GoldenNum::phi_pow(3),
        }
    }

    pub fn depth(&self) -> u32 {
        self.k
    }

    /// #{length-k 0/1 words w : decode(w) <= n}. Equals A(n) while every
    /// witness fits (n < F_{k+2}); above that, counted by complementing
    /// digits, which reflects decode values n -> smax - n.
    fn word_count(&self, n: Option<u64>) -> u64 {
        match n {
            None => 0,
            Some(n) if n < self.f_k2 => self.prefix[n as usize],
            Some(n) if n < self.smax => self.full - self.prefix[(self.smax - 1 - n) as usize],
            Some(_) => self.full,
        }
    }

    /// Largest n with x_n * den <= target, where x_n = orbit_point(n).x is
    /// strictly increasing (None when even x_0 = 0 exceeds the target).
    fn largest_n_below(&self, target: &GoldenNum, den: &BigInt) -> Option<u64> {
        let le = |n: u64| (&scale(&orbit_point(n).x, den) - target).signum() <= 0;
        if !le(0) {
            return None;
        }
        let mut hi = 1u64;
        while le(hi) {
            hi = hi.checked_mul(2).expect("search bracket overflow");
        }
        let mut lo = hi / 2;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if le(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(lo)
    }

    /// Bounds at a point of Q[phi] given as num/den with den > 0.
    pub fn bounds_qphi(&self, num: &GoldenNum, den: &BigInt) -> Result<CdfBound> {
        assert!(den.is_positive(), "denominator must be positive");
        if num.signum() < 0 || (num - &scale(&GoldenNum::phi(), den)).signum() > 0 {
            return Err(Error::OutOfDomain(
                format!("({num})/{den}"),
                "[0, phi], the support of the convolution",
            ));
        }
        // targets: x*phi^{k+2} and x*phi^{k+2} - phi^3, cleared of den
        let upper_target = num * &self.pow_k2;
        let lower_target = &upper_target - &scale(&self.phi3, den);
        let h_upper = self.largest_n_below(&upper_target, den);
        let h_lower = self.largest_n_below(&lower_target, den);
        let two_k = BigInt::from(self.full);
        Ok(CdfBound {
            x: num.to_f64() / den.to_f64().expect("denominator fits f64"),
            k: self.k,
            lower: Ratio::new(BigInt::from(self.word_count(h_lower)), two_k.clone()),
            upper: Ratio::new(BigInt::from(self.word_count(h_upper)), two_k),
        })
    }

    /// Bounds at a rational point.
    pub fn bounds(&self, x: &Ratio) -> Result<CdfBound> {
        let num = GoldenNum { p: x.numer().clone(), q: BigInt::from(0) };
        self.bounds_qphi(&num, x.denom())
    }
}

/// One-shot bounds at a rational x (builds a fresh context; reuse
/// `CdfContext` for batched queries at one depth).
pub fn cdf_bounds(x: &Ratio, k: u32) -> Result<CdfBound> {
    CdfContext::new(k).bounds(x)
}

/// The exact sample grid for one period gamma in [1, phi]:
/// gamma_i = ((m-1-i) + i*phi)/(m-1), i = 0..m-1, as (numerator, denominator).
pub fn gamma_grid(samples: usize) -> Vec<(GoldenNum, BigInt)> {
    assert!(samples >= 2, "need at least two samples");
    let m = samples as i64;
    (0..m)
        .map(|i| (GoldenNum::new(m - 1 - i, i), BigInt::from(m - 1)))
        .collect()
}

/// One point of the predicted limit curve.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileSample {
    pub gamma: f64,
    /// (phi*sqrt(5))^alpha * G(gamma/phi^3) / gamma^alpha, with G read at
    /// the midpoint of its depth-k bounds.
    pub value: f64,
}

/// The log-periodic limit profile on gamma in [1, phi] at the default CDF
/// depth 24.
pub fn limit_profile(samples: usize) -> Result<Vec<ProfileSample>> {
    limit_profile_with_depth(samples, 24)
}

pub fn limit_profile_with_depth(samples: usize, k: u32) -> Result<Vec<ProfileSample>> {
    let ctx = CdfContext::new(k);
    let inv_phi3 = GoldenNum::phi_pow(-3);
    let front = (PHI_F64 * 5f64.sqrt()).powf(ALPHA_F64);
    gamma_grid(samples)
        .into_iter()
        .map(|(num, den)| {
            let bound = ctx.bounds_qphi(&(&num * &inv_phi3), &den)?;
            let mid = (ratio_to_f64(&bound.lower) + ratio_to_f64(&bound.upper)) / 2.0;
            let gamma = num.to_f64() / den.to_f64().expect("denominator fits f64");
            Ok(ProfileSample { gamma, value: front * mid / gamma.powf(ALPHA_F64) })
        })
        .collect()
}

/// Exact-to-f64 for the small dyadic rationals used here.
pub fn ratio_to_f64(r: &Ratio) -> f64 {
    r.numer().to_f64().expect("numerator fits f64") / r.denom().to_f64().expect("denominator fits f64")
}
