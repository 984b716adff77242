//! The golden rotation and its orbit lattice.
//!
//! T translates the half-open strip [-1/phi^2, 1/phi) by 1/phi^2, wrapping
//! by 1 past the right end; the orbit of 0 under T is y_n, and pairing each
//! y_n with its conjugate x_n = n*phi + a_n embeds the orbit as the lattice
//! points of an irrational strip. The staircase functions evaluate exactly:
//! h(y_n) = R(n+1)/R(n) and k(y_n) = R(n)/R(n-1), with h = k after one
//! rotation step, and R(n) telescopes to the cocycle product of h along the
//! orbit.

use crate::golden::{floor_mul_psi, GoldenNum};
use crate::{Error, Ratio, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// -1/phi^2, the closed left end of the strip.
pub fn strip_lo() -> GoldenNum {
    GoldenNum::new(-2, 1)
}

/// 1/phi, the open right end of the strip.
pub fn strip_hi() -> GoldenNum {
    GoldenNum::new(-1, 1)
}

/// 1/phi^3 = 2*phi - 3, the rotation's wrap threshold and the staircase
/// breakpoint.
pub fn breakpoint() -> GoldenNum {
    GoldenNum::new(-3, 2)
}

fn in_strip(y: &GoldenNum) -> bool {
    (y - &strip_lo()).signum() >= 0 && (y - &strip_hi()).signum() < 0
}

/// One rotation step: y + 1/phi^2, reduced back into [-1/phi^2, 1/phi).
/// The branch split is exactly at 1/phi^3.
pub fn rotate(y: &GoldenNum) -> Result<GoldenNum> {
    if !in_strip(y) {
        return Err(Error::OutOfDomain(
            y.to_string(),
            "the strip [-1/phi^2, 1/phi)",
        ));
    }
    if (y - &breakpoint()).signum() < 0 {
        Ok(y + &GoldenNum::new(2, -1))
    } else {
        Ok(y + &GoldenNum::new(1, -1))
    }
}

/// A lattice point (x_n, y_n): y_n = T^n(0) and x_n is its conjugate, so
/// x_n - y_n = n*sqrt(5).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitPoint {
    pub n: u64,
    pub x: GoldenNum,
    pub y: GoldenNum,
}

/// Random access to the orbit in O(1) arithmetic operations: y_n is the
/// unique representative of n*psi + Z inside the strip, located with one
/// integer square root through floor(n*psi).
pub fn orbit_point(n: u64) -> OrbitPoint {
    let nn = BigInt::from(n);
    let m = floor_mul_psi(&nn);
    // frac = n*psi - floor(n*psi), in [0, 1)
    let frac = GoldenNum { p: &nn - &m, q: -&nn };
    let a = if (&frac - &strip_hi()).signum() < 0 { -&m } else { -&m - 1 };
    let x = GoldenNum { p: a, q: nn };
    let y = x.conjugate();
    debug_assert!(in_strip(&y));
    OrbitPoint { n, x, y }
}

/// The next lattice point. Adds (1 + phi, 1 + psi) while y_n < 1/phi^3 and
/// (phi, psi) after the wrap; both increments keep y = conjugate(x).
pub fn successor(pt: &OrbitPoint) -> OrbitPoint {
    debug_assert_eq!(pt.y, pt.x.conjugate());
    let (dx, dy) = if (&pt.y - &breakpoint()).signum() < 0 {
        (GoldenNum::new(1, 1), GoldenNum::new(2, -1)) // (1+phi, 1+psi)
    } else {
        (GoldenNum::new(0, 1), GoldenNum::new(1, -1)) // (phi, psi)
    };
    OrbitPoint { n: pt.n + 1, x: &pt.x + &dx, y: &pt.y + &dy }
}

/// Reads the orbit index off a lattice point: g(x, y) = (x - y)/sqrt(5),
/// which is the phi-coefficient of x. Errors unless y = conjugate(x), y is
/// in the strip, and the index is nonnegative.
pub fn g_index(x: &GoldenNum, y: &GoldenNum) -> Result<BigInt> {
    if *y != x.conjugate() || !in_strip(y) {
        return Err(Error::InvalidPoint { x: x.to_string(), y: y.to_string() });
    }
    if x.q.is_negative() {
        return Err(Error::InvalidPoint { x: x.to_string(), y: y.to_string() });
    }
    Ok(x.q.clone())
}

/// Default recursion allowance for the staircase evaluations: generous in
/// the coefficient size, since each branch strips one Zeckendorf digit of an
/// on-orbit point.
fn default_depth(y: &GoldenNum) -> usize {
    let bits = y.p.bits().max(y.q.bits()) as usize;
    4 * bits + 64
}

/// h at an exact point of (-1/phi^2, 1/phi) \ {1/phi^3}, as a reduced ratio.
///
/// Branches (left-closed/right-open, with the closed plateau [-1/phi^4, 0]
/// where h = 1):
///   ( -1/phi^2, -1/phi^4 )  h(y) = 1 + h(-phi*y)
///   [ -1/phi^4, 0 ]         h(y) = 1
///   ( 0, 1/phi^3 )          h(y) = h'/(1 + h'), h' = h(-phi*y + 1/phi)
///   ( 1/phi^3, 1/phi )      h(y) = h(-phi*y + 1/phi)
pub fn h_eval(y: &GoldenNum) -> Result<Ratio> {
    h_eval_with_depth(y, default_depth(y))
}

pub fn h_eval_with_depth(y: &GoldenNum, max_depth: usize) -> Result<Ratio> {
    h_rec(y, max_depth)
}

fn neg_phi_times(y: &GoldenNum) -> GoldenNum {
    // -phi * (p + q*phi) = -q - (p+q)*phi
    GoldenNum { p: -&y.q, q: -(&y.p + &y.q) }
}

/// -phi*y + 1/phi, the folding map shared by the two right-hand branches of
/// h (and the last branch of k). Fixes 1/phi^3.
fn fold(y: &GoldenNum) -> GoldenNum {
    let mut z = neg_phi_times(y);
    z += &GoldenNum::new(-1, 1);
    z
}

fn h_rec(y: &GoldenNum, depth: usize) -> Result<Ratio> {
    let lo = (y - &strip_lo()).signum();
    let hi = (y - &strip_hi()).signum();
    if lo < 0 || hi > 0 {
        return Err(Error::OutOfDomain(
            y.to_string(),
            "the open interval (-1/phi^2, 1/phi)",
        ));
    }
    if lo == 0 || hi == 0 || *y == breakpoint() {
        return Err(Error::Breakpoint(y.to_string()));
    }
    if depth == 0 {
        return Err(Error::DepthExceeded { what: "h evaluation", limit: 0 });
    }
    let against_zero = y.signum();
    if against_zero <= 0 {
        // [-1/phi^4, 0] is the unit plateau; left of it, climb by 1.
        let above_plateau = (y - &GoldenNum::new(-5, 3)).signum(); // y vs -1/phi^4
        if above_plateau >= 0 {
            Ok(Ratio::one())
        } else {
            Ok(Ratio::one() + h_rec(&neg_phi_times(y), depth - 1)?)
        }
    } else if (y - &breakpoint()).signum() < 0 {
        let u = h_rec(&fold(y), depth - 1)?;
        Ok(&u / (Ratio::one() + &u))
    } else {
        h_rec(&fold(y), depth - 1)
    }
}

/// k on [-1/phi^2, 1/phi): k(y_n) = R(n)/R(n-1) on the orbit, and
/// h(y) = k(T(y)) pointwise. Branches:
///   [ -1/phi^2, 0 )         k(y) = k(-phi*y)
///   ( 0, 1/phi^3 )          k(y) = 1 + k(-phi*y)
///   [ 1/phi^3, 1/phi^2 ]    k(y) = 1
///   ( 1/phi^2, 1/phi )      k(y) = k'/(1 + k'), k' = k(-phi*y + 1/phi)
/// k diverges at the orbit origin 0 (and hence at -1/phi^2, whose first step
/// lands on the excluded right end), so those points report errors.
pub fn k_eval(y: &GoldenNum) -> Result<Ratio> {
    k_eval_with_depth(y, default_depth(y))
}

pub fn k_eval_with_depth(y: &GoldenNum, max_depth: usize) -> Result<Ratio> {
    k_rec(y, max_depth)
}

fn k_rec(y: &GoldenNum, depth: usize) -> Result<Ratio> {
    let lo = (y - &strip_lo()).signum();
    let hi = (y - &strip_hi()).signum();
    if lo < 0 || hi > 0 {
        return Err(Error::OutOfDomain(
            y.to_string(),
            "the strip [-1/phi^2, 1/phi)",
        ));
    }
    if hi == 0 {
        return Err(Error::Breakpoint(y.to_string()));
    }
    if y.is_zero() {
        return Err(Error::Breakpoint("0 (the orbit origin; k diverges)".to_string()));
    }
    if depth == 0 {
        return Err(Error::DepthExceeded { what: "k evaluation", limit: 0 });
    }
    let s = y.signum();
    if s < 0 {
        k_rec(&neg_phi_times(y), depth - 1)
    } else if (y - &breakpoint()).signum() < 0 {
        // (0, 1/phi^3)
        Ok(Ratio::one() + k_rec(&neg_phi_times(y), depth - 1)?)
    } else if (y - &GoldenNum::new(2, -1)).signum() <= 0 {
        // [1/phi^3, 1/phi^2]: the base plateau
        Ok(Ratio::one())
    } else {
        let u = k_rec(&fold(y), depth - 1)?;
        Ok(&u / (Ratio::one() + &u))
    }
}

/// R(n) as the cocycle product h(y_0) h(y_1) ... h(y_{n-1}), maintained as
/// an integer: each reduced factor R(k+1)/R(k) divides into the running
/// value exactly. Third, independent route to R(n).
pub fn cocycle_r(n: u64) -> Result<BigInt> {
    let mut y = GoldenNum::zero();
    let mut cur = BigInt::one(); // R(0)
    for _ in 0..n {
        let h = h_eval(&y)?;
        let scaled = &cur * h.numer();
        let (quot, rem) = num_integer::Integer::div_rem(&scaled, h.denom());
        assert!(rem.is_zero(), "cocycle factor failed to divide exactly");
        cur = quot;
        y = rotate(&y)?;
    }
    Ok(cur)
}
