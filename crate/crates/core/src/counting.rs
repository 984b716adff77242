//! R(n): the number of partitions of n into distinct Fibonacci numbers
//! (parts drawn from F_2 = 1, F_3 = 2, F_4 = 3, ..., so the two units are
//! one part, not two).
//!
//! Two independent routes live here. `r_bruteforce` enumerates subsets
//! directly and is the oracle. `r_pair` folds the transfer matrices
//!
//! ```text
//!       | 1 0 1 |        | 1 0 0 |
//! A_1 = | 0 0 1 |  A_0 = | 1 0 1 |
//!       | 0 0 0 |        | 0 1 0 |
//! ```
//!
//! over the Zeckendorf word b_1 ... b_k of n (and only that word): the row
//! vector (1 0 0) A_{b_1} ... A_{b_k} has first entry R(n), and its last two
//! entries sum to R(n-1). A third route, the rotation cocycle, lives in
//! `dynamics` and must not be merged with these.

use crate::zeckendorf::{encode, ZeckWord};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Transfer matrix applied when the next Zeckendorf digit is 1.
pub const A1: [[u8; 3]; 3] = [[1, 0, 1], [0, 0, 1], [0, 0, 0]];
/// Transfer matrix applied when the next Zeckendorf digit is 0.
pub const A0: [[u8; 3]; 3] = [[1, 0, 0], [1, 0, 1], [0, 1, 0]];

/// Row vector (a, b, c) = (1 0 0) A_{b_1} ... A_{b_i} after consuming a
/// digit prefix. Invariant: at most one of b, c is nonzero (one-sided
/// support); `step` asserts it after every digit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountState {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl CountState {
    pub fn start() -> Self {
        CountState { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero() }
    }

    /// Right-multiply by A_0 or A_1:
    /// digit 0: (a, b, c) -> (a+b, c, b); digit 1: (a, b, c) -> (a, 0, a+b).
    pub fn step(&mut self, digit: u8) {
        match digit {
            0 => {
                self.a += &self.b;
                std::mem::swap(&mut self.b, &mut self.c);
            }
            1 => {
                self.c = &self.a + &self.b;
                self.b.set_zero();
            }
            other => panic!("Zeckendorf digit must be 0 or 1, got {other}"),
        }
        assert!(
            self.b.is_zero() || self.c.is_zero(),
            "one-sided support violated: both trailing entries nonzero"
        );
    }

    /// R(n) once the whole word of n has been consumed: the (1,0,0) contraction.
    pub fn r_n(&self) -> &BigInt {
        &self.a
    }

    /// R(n-1) once the whole word of n has been consumed: the (0,1,1) contraction.
    pub fn r_prev(&self) -> BigInt {
        &self.b + &self.c
    }
}

/// (R(n), R(n-1)) from one matrix product over the Zeckendorf word of n.
/// R(-1) does not exist, so the second component is None exactly at n = 0.
pub fn r_pair(n: &BigInt) -> (BigInt, Option<BigInt>) {
    let word = encode(n);
    let mut state = CountState::start();
    for &d in word.bits() {
        state.step(d);
    }
    let prev = if n.is_zero() { None } else { Some(state.r_prev()) };
    (state.a, prev)
}

/// R(n) by transfer matrices.
pub fn r_of(n: &BigInt) -> BigInt {
    r_pair(n).0
}

/// (R(n), R(n-1)) for a word already in canonical form, without re-encoding.
pub fn r_pair_of_word(word: &ZeckWord) -> (BigInt, Option<BigInt>) {
    let mut state = CountState::start();
    for &d in word.bits() {
        state.step(d);
    }
    let prev = if word.is_empty() { None } else { Some(state.r_prev()) };
    (state.a, prev)
}

pub const DEFAULT_BRUTE_BOUND: u64 = 10_000;

/// Brute-force oracle with the default input bound.
pub fn r_bruteforce(n: &BigInt) -> Result<BigInt> {
    r_bruteforce_bounded(n, DEFAULT_BRUTE_BOUND)
}

/// Counts subsets of distinct Fibonacci values summing to n by backtracking,
/// largest part first, pruning on the remaining suffix sum. Independent of
/// the matrix route by construction. Refuses n above `bound`.
pub fn r_bruteforce_bounded(n: &BigInt, bound: u64) -> Result<BigInt> {
    if n.is_zero() {
        return Ok(BigInt::one());
    }
    let small = match n.to_u64() {
        Some(v) if !num_traits::Signed::is_negative(n) && v <= bound => v,
        _ => {
            return Err(Error::OracleBoundExceeded {
                n: n.clone(),
                bound: BigInt::from(bound),
            })
        }
    };
    // Distinct Fibonacci values <= n, descending, with suffix sums for pruning.
    let mut parts: Vec<u64> = Vec::new();
    let (mut a, mut b) = (1u64, 2u64); // F_2, F_3
    while a <= small {
        parts.push(a);
        let next = a + b;
        a = b;
        b = next;
    }
    parts.reverse();
    let mut suffix = vec![0u64; parts.len() + 1];
    for i in (0..parts.len()).rev() {
        suffix[i] = suffix[i + 1] + parts[i];
    }
    fn count(parts: &[u64], suffix: &[u64], idx: usize, rem: u64) -> u64 {
        if rem == 0 {
            return 1;
        }
        if idx == parts.len() || suffix[idx] < rem {
            return 0;
        }
        let mut total = 0;
        if parts[idx] <= rem {
            total += count(parts, suffix, idx + 1, rem - parts[idx]);
        }
        total += count(parts, suffix, idx + 1, rem);
        total
    }
    Ok(BigInt::from(count(&parts, &suffix, 0, small)))
}

/// Streaming enumeration of (n, R(n)) in increasing n.
///
/// Walks the no-adjacent-1s words in numeric order: within the block
/// F_{m+1} <= n < F_{m+2} all words have length m and lexicographic order
/// agrees with numeric order, so an odometer over the word plus a stack of
/// prefix states advances in amortized O(1) matrix steps per n. Block
/// boundaries restart the stack with the word 10...0.
pub struct RStream {
    next_n: u64,
    // stack[i] = (digit b_{i+1}, state after consuming b_1 ... b_{i+1})
    stack: Vec<(u8, CountState)>,
}

impl RStream {
    pub fn new() -> Self {
        RStream { next_n: 0, stack: Vec::new() }
    }

    /// Stream positioned so the next item is (start, R(start)). Seeds the
    /// prefix stack from the Zeckendorf word of start, which is what makes
    /// deterministic chunked parallel scans possible.
    pub fn starting_at(start: u64) -> Self {
        let word = encode(&BigInt::from(start));
        let mut stack = Vec::with_capacity(word.len() + 8);
        let mut state = CountState::start();
        for &d in word.bits() {
            state.step(d);
            stack.push((d, state.clone()));
        }
        RStream { next_n: start, stack }
    }

    fn state_at(&self, len: usize) -> CountState {
        if len == 0 {
            CountState::start()
        } else {
            self.stack[len - 1].1.clone()
        }
    }

    /// Advance the word to the next valid one of length `len`, or open the
    /// next block with 1 0...0 when this block is exhausted.
    fn advance_word(&mut self, len: usize) {
        // Rightmost position that can flip 0 -> 1 (its left neighbour must be 0).
        let mut flip = None;
        for i in (1..len).rev() {
            if self.stack[i].0 == 0 && self.stack[i - 1].0 == 0 {
                flip = Some(i);
                break;
            }
        }
        match flip {
            Some(i) => {
                let mut state = self.state_at(i);
                state.step(1);
                self.stack.truncate(i);
                self.stack.push((1, state));
                self.refill_zeros(len);
            }
            None => {
                self.stack.clear();
                let mut state = CountState::start();
                state.step(1);
                self.stack.push((1, state));
                self.refill_zeros(len + 1);
            }
        }
    }

    fn refill_zeros(&mut self, target_len: usize) {
        while self.stack.len() < target_len {
            let mut state = self.stack.last().unwrap().1.clone();
            state.step(0);
            self.stack.push((0, state));
        }
    }
}

impl Default for RStream {
    fn default() -> Self {
        RStream::new()
    }
}

impl Iterator for RStream {
    type Item = (u64, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.next_n;
        let value = if self.stack.is_empty() {
            BigInt::one() // R(0): the empty word
        } else {
            self.stack.last().unwrap().1.r_n().clone()
        };
        self.next_n += 1;
        if n == 0 {
            let mut state = CountState::start();
            state.step(1);
            self.stack.push((1, state)); // word of n = 1
        } else {
            let len = self.stack.len();
            self.advance_word(len);
        }
        Some((n, value))
    }
}

/// (n, R(n)) for n = 0 ..= limit.
pub fn batch_r(limit: u64) -> impl Iterator<Item = (u64, BigInt)> {
    RStream::new().take((limit + 1) as usize)
}

/// A(H) = sum of R(n) for n <= H.
pub fn a_of(h: u64) -> BigInt {
    let mut total = BigInt::zero();
    for (_, r) in batch_r(h) {
        total += r;
    }
    total
}

/// A at each of several cutoffs in one sweep. `hs` must be sorted ascending.
pub fn a_of_sorted(hs: &[u64]) -> Vec<BigInt> {
    assert!(hs.windows(2).all(|w| w[0] <= w[1]), "cutoffs must be sorted");
    let mut out = Vec::with_capacity(hs.len());
    let Some(&max) = hs.last() else { return out };
    let mut total = BigInt::zero();
    let mut idx = 0;
    for (n, r) in batch_r(max) {
        total += r;
        while idx < hs.len() && hs[idx] == n {
            out.push(total.clone());
            idx += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeckendorf::fib;

    fn r(n: u64) -> u64 {
        r_of(&BigInt::from(n)).to_u64().unwrap()
    }

    /// The sequence R(0..=13), the anchor for everything else.
    const HEAD: [u64; 14] = [1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3];

    #[test]
    fn matrix_route_matches_frozen_head() {
        for (n, want) in HEAD.iter().enumerate() {
            assert_eq!(r(n as u64), *want, "R({n})");
        }
    }

    #[test]
    fn pair_route_frozen_examples() {
        let (r6, r5) = r_pair(&BigInt::from(6));
        assert_eq!((r6, r5), (BigInt::from(2), Some(BigInt::from(2))));
        let (r0, rm1) = r_pair(&BigInt::from(0));
        assert_eq!((r0, rm1), (BigInt::one(), None));
        let (r12, r11) = r_pair(&BigInt::from(12));
        assert_eq!((r12, r11), (BigInt::one(), Some(BigInt::from(3))));
    }

    #[test]
    fn brute_force_frozen_examples() {
        let bf = |n: u64| r_bruteforce(&BigInt::from(n)).unwrap().to_u64().unwrap();
        assert_eq!(bf(0), 1);
        assert_eq!(bf(6), 2); // 5+1 and 3+2+1
        assert_eq!(bf(13), 3); // 13, 8+5, 8+3+2
        for (n, want) in HEAD.iter().enumerate() {
            assert_eq!(bf(n as u64), *want);
        }
    }

    #[test]
    fn brute_force_bound_is_enforced() {
        let big = BigInt::from(DEFAULT_BRUTE_BOUND + 1);
        assert!(matches!(
            r_bruteforce(&big),
            Err(Error::OracleBoundExceeded { .. })
        ));
        assert!(r_bruteforce_bounded(&big, DEFAULT_BRUTE_BOUND + 1).is_ok());
        assert!(r_bruteforce(&BigInt::from(-1)).is_err());
    }

    #[test]
    fn matrix_route_agrees_with_oracle() {
        for n in 0u64..600 {
            let n = BigInt::from(n);
            assert_eq!(r_of(&n), r_bruteforce(&n).unwrap(), "R({n})");
        }
    }

    #[test]
    fn pair_second_component_is_shifted_first() {
        for n in 1u64..400 {
            let (_, prev) = r_pair(&BigInt::from(n));
            assert_eq!(prev.unwrap(), r_of(&BigInt::from(n - 1)), "R({} - 1)", n);
        }
    }

    #[test]
    fn step_matches_explicit_matrix_product() {
        // Fold digits both ways: through CountState and through literal
        // row-times-matrix arithmetic over A0/A1.
        let words: [&[u8]; 5] = [&[1], &[1, 0, 1], &[1, 0, 0, 1], &[1, 0, 1, 0, 1], &[1, 0, 0, 0]];
        for word in words {
            let mut state = CountState::start();
            let mut row = [1i64, 0, 0];
            for &d in word {
                state.step(d);
                let m = if d == 1 { A1 } else { A0 };
                let mut next = [0i64; 3];
                for (j, slot) in next.iter_mut().enumerate() {
                    for i in 0..3 {
                        *slot += row[i] * i64::from(m[i][j]);
                    }
                }
                row = next;
            }
            assert_eq!(state.a, BigInt::from(row[0]));
            assert_eq!(state.b, BigInt::from(row[1]));
            assert_eq!(state.c, BigInt::from(row[2]));
        }
    }

    #[test]
    fn stream_matches_per_n_encoding() {
        for (n, r_stream) in batch_r(1500) {
            assert_eq!(r_stream, r_of(&BigInt::from(n)), "R({n})");
        }
    }

    #[test]
    fn stream_can_start_mid_block() {
        let full: Vec<_> = batch_r(400).collect();
        for start in [1u64, 2, 3, 5, 12, 13, 54, 55, 88, 89, 100, 233, 377, 399] {
            let tail: Vec<_> = RStream::starting_at(start)
                .take((401 - start) as usize)
                .collect();
            assert_eq!(tail, full[start as usize..], "starting at {start}");
        }
    }

    #[test]
    fn summatory_frozen_values() {
        assert_eq!(a_of(0), BigInt::one());
        assert_eq!(a_of(13), BigInt::from(25));
        let hs = [0u64, 4, 13, 20];
        let many = a_of_sorted(&hs);
        assert_eq!(many[0], BigInt::one());
        assert_eq!(many[2], BigInt::from(25));
        assert_eq!(many[3], a_of(20));
    }

    #[test]
    fn block_sizes_follow_fibonacci() {
        // Words of length m occupy [F_{m+1}, F_{m+2}); check stream block
        // restarts land exactly on Fibonacci values.
        let mut prev_len = 0usize;
        let mut stream = RStream::new();
        stream.next();
        for n in 1u64..1000 {
            let word = encode(&BigInt::from(n));
            if word.len() != prev_len {
                assert_eq!(BigInt::from(n), fib(word.len() as u64 + 1));
                prev_len = word.len();
            }
            stream.next();
        }
    }
}
