//! Zeckendorf numeration. Every n >= 0 has a unique representation as a sum
//! of non-adjacent Fibonacci numbers drawn from F_2 = 1, F_3 = 2, F_4 = 3, ...
//! A word b_1 ... b_k (most significant first) assigns bit i the weight
//! F_{k+2-i}, so the trailing bit always weighs F_2 = 1.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// F_k with F_1 = F_2 = 1 (and F_0 = 0 for convenience).
pub fn fib(k: u64) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    cur
}

/// A canonical Zeckendorf word: leading bit 1, no two adjacent 1s. The empty
/// word encodes 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZeckWord {
    bits: Vec<u8>,
}

impl ZeckWord {
    /// Validates canonical form: bits in {0,1}, leading 1, no adjacent 1s.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(&first) = bits.first() {
            if first != 1 {
                return Err(Error::OutOfDomain(
                    format!("word starting with {first}"),
                    "canonical Zeckendorf words (leading bit must be 1)",
                ));
            }
        }
        for w in bits.windows(2) {
            if w[0] > 1 || w[1] > 1 || (w[0] == 1 && w[1] == 1) {
                return Err(Error::OutOfDomain(
                    "word with adjacent 1s or non-binary digit".to_string(),
                    "canonical Zeckendorf words",
                ));
            }
        }
        Ok(ZeckWord { bits })
    }

    pub fn empty() -> Self {
        ZeckWord { bits: Vec::new() }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn to_int(&self) -> BigInt {
        decode(&self.bits)
    }
}

impl fmt::Display for ZeckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for ZeckWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(Error::OutOfDomain(
                    format!("character {other:?}"),
                    "binary words over {0,1}",
                )),
            })
            .collect::<Result<Vec<u8>>>()?;
        ZeckWord::from_bits(bits)
    }
}

/// Greedy Zeckendorf encoding of n >= 0. Taking the largest Fibonacci part
/// leaves a remainder below the next-lower index, so adjacency never occurs.
pub fn encode(n: &BigInt) -> ZeckWord {
    assert!(!n.is_negative(), "Zeckendorf encoding requires n >= 0");
    if n.is_zero() {
        return ZeckWord::empty();
    }
    // ladder[i] = F_{i+2}, the usable parts 1, 2, 3, 5, ...
    let mut ladder = vec![BigInt::one()];
    let mut next = BigInt::from(2);
    while next <= *n {
        let after = &next + ladder.last().unwrap();
        ladder.push(std::mem::replace(&mut next, after));
    }
    let mut bits = Vec::with_capacity(ladder.len());
    let mut rem = n.clone();
    for f in ladder.iter().rev() {
        if *f <= rem {
            bits.push(1);
            rem -= f;
        } else {
            bits.push(0);
        }
    }
    debug_assert!(rem.is_zero());
    ZeckWord { bits }
}

/// Weighted sum of an arbitrary 0/1 word under Zeckendorf weights. Adjacent
/// 1s and leading 0s are allowed here; only the canonical form is unique.
pub fn decode(bits: &[u8]) -> BigInt {
    let mut total = BigInt::zero();
    let mut weight = BigInt::one(); // F_2 at the trailing position
    let mut next = BigInt::from(2); // F_3
    for &b in bits.iter().rev() {
        debug_assert!(b <= 1, "decode expects a 0/1 word");
        if b == 1 {
            total += &weight;
        }
        let after = &weight + &next;
        weight = std::mem::replace(&mut next, after);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(n: u64) -> String {
        encode(&BigInt::from(n)).to_string()
    }

    #[test]
    fn fibonacci_frozen_values() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(1), BigInt::one());
        assert_eq!(fib(2), BigInt::one());
        assert_eq!(fib(3), BigInt::from(2));
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(30), BigInt::from(832_040));
        assert_eq!(fib(90), BigInt::from(2_880_067_194_370_816_120u64));
    }

    #[test]
    fn encoding_frozen_values() {
        assert_eq!(enc(0), "");
        assert_eq!(enc(1), "1");
        assert_eq!(enc(2), "10");
        assert_eq!(enc(3), "100");
        assert_eq!(enc(4), "101");
        assert_eq!(enc(5), "1000");
        assert_eq!(enc(6), "1001");
        assert_eq!(enc(7), "1010");
        assert_eq!(enc(12), "10101");
        assert_eq!(enc(100), "1000010100");
    }

    #[test]
    fn decoding_accepts_noncanonical_words() {
        let d = |s: &str| {
            let bits: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
            decode(&bits)
        };
        assert_eq!(d(""), BigInt::zero());
        assert_eq!(d("1001"), BigInt::from(6));
        assert_eq!(d("0111"), BigInt::from(6)); // 3 + 2 + 1
        assert_eq!(d("00101"), BigInt::from(4));
        assert_eq!(d("11"), BigInt::from(3));
    }

    #[test]
    fn canonical_validation() {
        assert!(ZeckWord::from_str("1001").is_ok());
        assert!(ZeckWord::from_str("").is_ok());
        assert!(ZeckWord::from_str("0110").is_err()); // leading zero
        assert!(ZeckWord::from_str("1011").is_err()); // adjacent ones
        assert!(ZeckWord::from_str("102").is_err());
    }

    #[test]
    fn roundtrip_small_range() {
        for n in 0u64..5000 {
            let n = BigInt::from(n);
            let w = encode(&n);
            assert_eq!(w.to_int(), n);
            assert!(ZeckWord::from_bits(w.bits().to_vec()).is_ok());
        }
    }

    #[test]
    fn word_length_brackets_by_fibonacci() {
        // Words of length m cover exactly [F_{m+1}, F_{m+2}).
        for n in 1u64..2000 {
            let w = encode(&BigInt::from(n));
            let m = w.len() as u64;
            assert!(fib(m + 1) <= BigInt::from(n));
            assert!(BigInt::from(n) < fib(m + 2));
        }
    }
}
