//! Exact arithmetic in Z[phi], phi = (1 + sqrt 5)/2.
//!
//! Every value is a canonical pair p + q*phi with unbounded integer
//! coefficients. Working identities:
//!
//! * phi^2 = phi + 1
//! * psi = 1 - phi = -1/phi (the algebraic conjugate of phi)
//! * 1/phi = phi - 1, 1/phi^2 = 2 - phi, 1/phi^3 = 2*phi - 3
//!
//! psi is never stored; conjugation rewrites p + q*psi as (p+q) - q*phi.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// p + q*phi with unbounded integer coefficients. The representation is
/// unique, so derived equality is exact equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GoldenNum {
    pub p: BigInt,
    pub q: BigInt,
}

impl GoldenNum {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        GoldenNum { p: p.into(), q: q.into() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenNum { p: n.into(), q: BigInt::zero() }
    }

    pub fn zero() -> Self {
        GoldenNum::new(0, 0)
    }

    pub fn one() -> Self {
        GoldenNum::new(1, 0)
    }

    pub fn phi() -> Self {
        GoldenNum::new(0, 1)
    }

    /// phi^k for any integer k. Positive powers use phi^k = F_k*phi + F_{k-1};
    /// negative powers use phi^-k = (-1)^k * (F_{k+1} - F_k*phi).
    pub fn phi_pow(k: i64) -> Self {
        if k == 0 {
            return GoldenNum::one();
        }
        let m = k.unsigned_abs();
        let (f_km1, f_k) = fib_pair(m);
        if k > 0 {
            GoldenNum { p: f_km1, q: f_k }
        } else if m % 2 == 0 {
            GoldenNum { p: &f_km1 + &f_k, q: -f_k }
        } else {
            GoldenNum { p: -(&f_km1 + &f_k), q: f_k }
        }
    }

    /// Algebraic conjugate: p + q*phi |-> p + q*psi = (p+q) - q*phi.
    /// An involutive ring homomorphism.
    pub fn conjugate(&self) -> Self {
        GoldenNum { p: &self.p + &self.q, q: -&self.q }
    }

    /// Exact sign of the real value p + q*phi: -1, 0, or +1.
    ///
    /// Writes the value as ((2p+q) + q*sqrt5)/2 and compares (2p+q)^2 with
    /// 5q^2 when the two terms disagree in sign. sqrt 5 is irrational, so the
    /// squares tie only when both coefficients vanish.
    pub fn signum(&self) -> i32 {
        let a: BigInt = 2 * &self.p + &self.q;
        let b = &self.q;
        match (a.sign(), b.sign()) {
            (num_bigint::Sign::NoSign, num_bigint::Sign::NoSign) => 0,
            (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
                let five_b2: BigInt = 5 * b * b;
                match five_b2.cmp(&(&a * &a)) {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                }
            }
            (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
                let five_b2: BigInt = 5 * b * b;
                match (&a * &a).cmp(&five_b2) {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                }
            }
            (num_bigint::Sign::Minus, _) | (_, num_bigint::Sign::Minus) => -1,
            _ => 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// floor((p + q*phi) / den) for den > 0, computed exactly.
    ///
    /// With A = 2p + q the value is (A + q*sqrt5)/(2*den); floor(q*sqrt5) is
    /// available through the integer square root of 5q^2, and no integer can
    /// separate the remaining unit interval, so the floor passes through.
    pub fn floor_div(&self, den: &BigInt) -> BigInt {
        assert!(den.is_positive(), "floor_div requires a positive denominator");
        let a: BigInt = 2 * &self.p + &self.q;
        let m = a + floor_sqrt5_mul(&self.q);
        m.div_floor(&(2 * den))
    }

    /// floor(p + q*phi).
    pub fn floor(&self) -> BigInt {
        self.floor_div(&BigInt::one())
    }

    /// Decimal rendering with `digits` places after the point, correctly
    /// rounded to nearest (ties cannot occur: the value is either an exact
    /// integer times a power of ten or irrational).
    pub fn to_decimal(&self, digits: usize) -> String {
        let pow10 = BigInt::from(10u32).pow(digits as u32);
        let a: BigInt = (2 * &self.p + &self.q) * &pow10;
        let b: BigInt = &self.q * &pow10;
        let m: BigInt = a + 1 + floor_sqrt5_mul(&b);
        let r = m.div_floor(&BigInt::from(2));
        render_scaled(&r, digits)
    }

    /// Lossy double view for plots and coarse scans; exact paths must use
    /// signum/to_decimal instead.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        const PHI: f64 = 1.618_033_988_749_894_9;
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * PHI
    }
}

/// floor(n * psi) for a nonnegative integer n, exactly. psi = 1 - phi, so
/// n*psi = n - n*phi and the Z[phi] floor applies.
pub fn floor_mul_psi(n: &BigInt) -> BigInt {
    GoldenNum { p: n.clone(), q: -n }.floor()
}

/// floor(q * sqrt 5) for any integer q. 5q^2 is never a perfect square for
/// q != 0, so the truncated square root decides the floor on both signs.
fn floor_sqrt5_mul(q: &BigInt) -> BigInt {
    let five_q2: BigInt = 5 * q * q;
    match q.sign() {
        num_bigint::Sign::NoSign => BigInt::zero(),
        num_bigint::Sign::Plus => five_q2.sqrt(),
        num_bigint::Sign::Minus => -five_q2.sqrt() - 1,
    }
}

/// (F_{k-1}, F_k) with F_1 = F_2 = 1 and F_0 = 0.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for _ in 1..k {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

fn render_scaled(r: &BigInt, digits: usize) -> String {
    let neg = r.is_negative();
    let mag = r.magnitude().to_string();
    let (int_part, frac_part) = if mag.len() > digits {
        let split = mag.len() - digits;
        (mag[..split].to_string(), mag[split..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", mag, width = digits))
    };
    let sign = if neg && (int_part != "0" || frac_part.bytes().any(|b| b != b'0')) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

impl PartialOrd for GoldenNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNum {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = GoldenNum { p: &self.p - &other.p, q: &self.q - &other.q };
        diff.signum().cmp(&0)
    }
}

impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else if self.p.is_zero() {
            write!(f, "{}*phi", self.q)
        } else if self.q.is_negative() {
            write!(f, "{} - {}*phi", self.p, self.q.magnitude())
        } else {
            write!(f, "{} + {}*phi", self.p, self.q)
        }
    }
}

impl Add for GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: GoldenNum) -> GoldenNum {
        GoldenNum { p: self.p + rhs.p, q: self.q + rhs.q }
    }
}

impl Add for &GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum { p: &self.p + &rhs.p, q: &self.q + &rhs.q }
    }
}

impl AddAssign<&GoldenNum> for GoldenNum {
    fn add_assign(&mut self, rhs: &GoldenNum) {
        self.p += &rhs.p;
        self.q += &rhs.q;
    }
}

impl Sub for GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: GoldenNum) -> GoldenNum {
        GoldenNum { p: self.p - rhs.p, q: self.q - rhs.q }
    }
}

impl Sub for &GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum { p: &self.p - &rhs.p, q: &self.q - &rhs.q }
    }
}

impl SubAssign<&GoldenNum> for GoldenNum {
    fn sub_assign(&mut self, rhs: &GoldenNum) {
        self.p -= &rhs.p;
        self.q -= &rhs.q;
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum { p: -self.p, q: -self.q }
    }
}

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum { p: -&self.p, q: -&self.q }
    }
}

/// (p + q*phi)(r + s*phi) = (pr + qs) + (ps + qr + qs)*phi, using phi^2 = phi + 1.
impl Mul for &GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &GoldenNum) -> GoldenNum {
        let qs = &self.q * &rhs.q;
        GoldenNum {
            p: &self.p * &rhs.p + &qs,
            q: &self.p * &rhs.q + &self.q * &rhs.p + qs,
        }
    }
}

impl Mul for GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: GoldenNum) -> GoldenNum {
        (&self).mul(&rhs)
    }
}
