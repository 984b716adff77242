//! Level sets of the staircase, patch windows, and cut-and-project
//! enumeration of patch occurrences.
//!
//! The staircase h is constant on a full-measure union of closed intervals.
//! Writing core = (-1/phi^2, 1/phi^3) and mirror = (1/phi^3, 1/phi), the
//! expanding map mu(y) = -phi*y + 1/phi carries mirror onto core with h
//! unchanged, and the two affine contractions
//!   c1(w) = w/phi^2 - 1/phi^3   (value v -> v + 1, image in (-1/phi^2, -1/phi^4))
//!   c3(w) = w/phi^2 + 1/phi^4   (value v -> v/(1+v), image in (0, 1/phi^3))
//! carry core onto the two recursive branches. Every level set is therefore
//! one closed interval in the core (found by running the value's
//! Stern-Brocot descent down to 1, whose plateau is [-1/phi^4, 0])
//! together with its mu-mirror image — exactly two intervals.
//!
//! A patch P = (p_1, ..., p_k) occurs at n when R(n+i) = p_i * R(n) for all
//! i; equivalently the orbit point y_n lies in the window
//! W(P) = L(p_1/p_0) ∩ T^{-1}( L(p_2/p_1) ∩ T^{-1}( ... L(p_k/p_{k-1}) ))
//! with p_0 = 1, where L(q) is the level set of h at q. Membership of y_n is
//! an O(1) test, so patch occurrences form a cut-and-project set.

use crate::counting::RStream;
use crate::dynamics::{orbit_point, strip_hi, strip_lo};
use crate::golden::GoldenNum;
use crate::{Error, Ratio, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// A (possibly degenerate) interval with exact Z[phi] endpoints and
/// explicit endpoint membership. Constructors return None for empty sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: GoldenNum,
    pub hi: GoldenNum,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: GoldenNum, hi: GoldenNum, lo_closed: bool, hi_closed: bool) -> Option<Self> {
        match lo.cmp(&hi) {
            std::cmp::Ordering::Less => Some(Interval { lo, hi, lo_closed, hi_closed }),
            std::cmp::Ordering::Equal if lo_closed && hi_closed => {
                Some(Interval { lo, hi, lo_closed, hi_closed })
            }
            _ => None,
        }
    }

    pub fn closed(lo: GoldenNum, hi: GoldenNum) -> Option<Self> {
        Interval::new(lo, hi, true, true)
    }

    pub fn length(&self) -> GoldenNum {
        &self.hi - &self.lo
    }

    pub fn contains(&self, y: &GoldenNum) -> bool {
        let at_lo = (y - &self.lo).signum();
        let at_hi = (y - &self.hi).signum();
        (at_lo > 0 || (at_lo == 0 && self.lo_closed))
            && (at_hi < 0 || (at_hi == 0 && self.hi_closed))
    }

    pub fn translate(&self, d: &GoldenNum) -> Interval {
        Interval {
            lo: &self.lo + d,
            hi: &self.hi + d,
            lo_closed: self.lo_closed,
            hi_closed: self.hi_closed,
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, hi, lo_closed, hi_closed)
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' },
        )
    }
}

/// A finite union of pairwise-disjoint intervals inside the strip, kept
/// sorted. Construct through `Window::new`, which normalizes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Window {
    pub intervals: Vec<Interval>,
}

impl Window {
    pub fn empty() -> Self {
        Window { intervals: Vec::new() }
    }

    /// Sorts the pieces and merges any that overlap or touch with at least
    /// one closed endpoint at the junction.
    pub fn new(mut pieces: Vec<Interval>) -> Self {
        pieces.sort_by(|a, b| {
            a.lo.cmp(&b.lo).then_with(|| b.lo_closed.cmp(&a.lo_closed))
        });
        let mut merged: Vec<Interval> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            if let Some(last) = merged.last_mut() {
                let gap = (&piece.lo - &last.hi).signum();
                let touches = gap < 0 || (gap == 0 && (last.hi_closed || piece.lo_closed));
                if touches {
                    match piece.hi.cmp(&last.hi) {
                        std::cmp::Ordering::Greater => {
                            last.hi = piece.hi;
                            last.hi_closed = piece.hi_closed;
                        }
                        std::cmp::Ordering::Equal => {
                            last.hi_closed = last.hi_closed || piece.hi_closed;
                        }
                        std::cmp::Ordering::Less => {}
                    }
                    continue;
                }
            }
            merged.push(piece);
        }
        Window { intervals: merged }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, y: &GoldenNum) -> bool {
        // Sorted disjoint pieces: the only candidate starts at the last lo <= y.
        let idx = self.intervals.partition_point(|i| (&i.lo - y).signum() <= 0);
        idx > 0 && self.intervals[idx - 1].contains(y)
    }

    pub fn total_length(&self) -> GoldenNum {
        let mut acc = GoldenNum::zero();
        for i in &self.intervals {
            acc += &i.length();
        }
        acc
    }

    pub fn intersect(&self, other: &Window) -> Window {
        let mut pieces = Vec::new();
        for a in &self.intervals {
            for b in &other.intervals {
                if let Some(c) = a.intersect(b) {
                    pieces.push(c);
                }
            }
        }
        Window::new(pieces)
    }

    /// The rotation preimage T^{-1}(W). T adds 1/phi^2 on [-1/phi^2, 1/phi^3)
    /// (landing in [0, 1/phi)) and subtracts 1/phi on [1/phi^3, 1/phi)
    /// (landing in [-1/phi^2, 0)), so the preimage pulls the two halves of W
    /// back by the opposite shifts.
    pub fn rotate_preimage(&self) -> Window {
        let zero = GoldenNum::zero();
        let right_half = Interval::new(zero.clone(), strip_hi(), true, false).unwrap();
        let left_half = Interval::new(strip_lo(), zero, true, false).unwrap();
        let back_small = GoldenNum::new(-2, 1); // -1/phi^2
        let back_large = GoldenNum::new(-1, 1); // +1/phi
        let mut pieces = Vec::new();
        for i in &self.intervals {
            if let Some(j) = i.intersect(&right_half) {
                pieces.push(j.translate(&back_small));
            }
            if let Some(j) = i.intersect(&left_half) {
                pieces.push(j.translate(&back_large));
            }
        }
        Window::new(pieces)
    }
}

/// A patch (p_1, ..., p_k): the pattern R(n+i) = p_i * R(n), i = 1..k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Patch {
    ratios: Vec<Ratio>,
}

impl Patch {
    pub fn new(ratios: Vec<Ratio>) -> Result<Self> {
        if ratios.is_empty() {
            return Err(Error::EmptyPatch);
        }
        if let Some(bad) = ratios.iter().find(|r| !r.is_positive()) {
            return Err(Error::NonpositiveRatio(bad.to_string()));
        }
        Ok(Patch { ratios })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Patch::new(
            entries
                .iter()
                .map(|&e| Ratio::from_integer(BigInt::from(e)))
                .collect(),
        )
    }

    pub fn ratios(&self) -> &[Ratio] {
        &self.ratios
    }

    /// Consecutive-step ratios p_i / p_{i-1} with p_0 = 1.
    fn steps(&self) -> Vec<Ratio> {
        let mut prev = Ratio::one();
        self.ratios
            .iter()
            .map(|p| {
                let s = p / &prev;
                prev = p.clone();
                s
            })
            .collect()
    }
}

/// The base plateau of h: the value-1 core interval [-1/phi^4, 0].
fn base_plateau() -> Interval {
    Interval::closed(GoldenNum::new(-5, 3), GoldenNum::zero()).unwrap()
}

/// c1: core -> (-1/phi^2, -1/phi^4), w -> w/phi^2 - 1/phi^3 (orientation-
/// preserving); h-value v pulls back from v to v + 1.
fn map_c1(i: &Interval) -> Interval {
    let shrink = GoldenNum::new(2, -1); // 1/phi^2
    let shift = GoldenNum::new(3, -2); // -1/phi^3
    Interval {
        lo: &(&i.lo * &shrink) + &shift,
        hi: &(&i.hi * &shrink) + &shift,
        lo_closed: i.lo_closed,
        hi_closed: i.hi_closed,
    }
}

/// c3: core -> (0, 1/phi^3), w -> w/phi^2 + 1/phi^4 (orientation-
/// preserving); h-value v pulls back from v to v/(1+v).
fn map_c3(i: &Interval) -> Interval {
    let shrink = GoldenNum::new(2, -1); // 1/phi^2
    let shift = GoldenNum::new(5, -3); // 1/phi^4
    Interval {
        lo: &(&i.lo * &shrink) + &shift,
        hi: &(&i.hi * &shrink) + &shift,
        lo_closed: i.lo_closed,
        hi_closed: i.hi_closed,
    }
}

/// mu^{-1}: core -> mirror, w -> (1/phi - w)/phi = 1/phi^2 - w/phi
/// (orientation-reversing, h-value preserved).
fn map_mirror(i: &Interval) -> Interval {
    let inv_phi2 = GoldenNum::new(2, -1);
    let neg_inv_phi = GoldenNum::new(1, -1); // -1/phi = psi
    Interval {
        lo: &inv_phi2 + &(&i.hi * &neg_inv_phi),
        hi: &inv_phi2 + &(&i.lo * &neg_inv_phi),
        lo_closed: i.hi_closed,
        hi_closed: i.lo_closed,
    }
}

/// The exact level set {y : h(y) = q}: one closed core interval plus its
/// mirror image — always exactly two disjoint closed intervals, for every
/// positive rational q (the Stern-Brocot descent q -> q-1 / q -> q/(1-q)
/// reaches 1 in finitely many steps).
pub fn level_set(q: &Ratio) -> Result<Window> {
    level_set_with_depth(q, 64)
}

/// As `level_set` with an explicit bound on the descent length (which
/// equals the sum of the continued-fraction partial quotients of q).
pub fn level_set_with_depth(q: &Ratio, max_steps: usize) -> Result<Window> {
    let core = core_level_set(q, max_steps)?;
    let mirror = map_mirror(&core);
    Ok(Window::new(vec![core, mirror]))
}

fn core_level_set(q: &Ratio, max_steps: usize) -> Result<Interval> {
    if !q.is_positive() {
        return Err(Error::NonpositiveRatio(q.to_string()));
    }
    #[derive(Clone, Copy)]
    enum Step {
        AddOne,   // entered through c1: h = 1 + h'
        Harmonic, // entered through c3: h = h'/(1 + h')
    }
    let one = Ratio::one();
    let mut cur = q.clone();
    let mut steps = Vec::new();
    while cur != one {
        if steps.len() >= max_steps {
            return Err(Error::DepthExceeded { what: "level-set descent", limit: max_steps });
        }
        if cur > one {
            cur -= &one;
            steps.push(Step::AddOne);
        } else {
            cur = &cur / &(&one - &cur);
            steps.push(Step::Harmonic);
        }
    }
    let mut interval = base_plateau();
    for step in steps.iter().rev() {
        interval = match step {
            Step::AddOne => map_c1(&interval),
            Step::Harmonic => map_c3(&interval),
        };
    }
    Ok(interval)
}

/// The plateau decomposition of h to recursion depth d: every constancy
/// interval obtained from the base plateau by at most d pullbacks, plus the
/// mirror copies — 2(2^{d+1} - 1) disjoint closed intervals, sorted. The
/// count doubles with each extra level of depth.
pub fn staircase_table(depth: usize) -> Vec<(Interval, Ratio)> {
    let one = Ratio::one();
    let mut core: Vec<(Interval, Ratio)> = vec![(base_plateau(), one.clone())];
    let mut frontier = core.clone();
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (i, v) in &frontier {
            next.push((map_c1(i), v + &one));
            next.push((map_c3(i), v / (&one + v)));
        }
        core.extend(next.iter().cloned());
        frontier = next;
    }
    let mirrors: Vec<(Interval, Ratio)> =
        core.iter().map(|(i, v)| (map_mirror(i), v.clone())).collect();
    let mut all = core;
    all.extend(mirrors);
    all.sort_by(|a, b| a.0.lo.cmp(&b.0.lo));
    all
}

/// Exact total length of the depth-d table, in closed form:
/// (1/phi^4) * phi * sum_{j=0}^{d} (2/phi^2)^j.
pub fn staircase_table_length(depth: usize) -> GoldenNum {
    let ratio = GoldenNum::new(4, -2); // 2/phi^2
    let mut term = GoldenNum::one();
    let mut acc = GoldenNum::zero();
    for _ in 0..=depth {
        acc += &term;
        term = &term * &ratio;
    }
    let base_len = GoldenNum::new(5, -3); // 1/phi^4
    &(&base_len * &GoldenNum::phi()) * &acc
}

/// Exact uncovered length after depth d: 1 - table length = (2/phi^2)^{d+1}.
/// This decays by a factor 2/phi^2 ~ 0.7639 per level; it first drops below
/// 10^{-3} at depth 25.
pub fn staircase_residual(depth: usize) -> GoldenNum {
    let ratio = GoldenNum::new(4, -2); // 2/phi^2
    let mut acc = GoldenNum::one();
    for _ in 0..=depth {
        acc = &acc * &ratio;
    }
    acc
}

/// The acceptance window W(P): y_n lands in it exactly when the patch
/// occurs at n. Built as L(s_1) ∩ T^{-1}(L(s_2) ∩ T^{-1}(...)) over the
/// step ratios s_i = p_i/p_{i-1}.
pub fn patch_window(p: &Patch) -> Result<Window> {
    let steps = p.steps();
    let mut w = level_set(steps.last().expect("patch is nonempty"))?;
    for s in steps.iter().rev().skip(1) {
        w = level_set(s)?.intersect(&w.rotate_preimage());
    }
    Ok(w)
}

/// All n <= limit at which the patch occurs, enumerated by O(1) window-
/// membership tests on the directly computed orbit points (no rotation
/// iteration), so disjoint ranges can be scanned independently.
pub fn patch_hits(p: &Patch, limit: u64) -> Result<Vec<u64>> {
    let w = patch_window(p)?;
    Ok(patch_hits_in_window(&w, 0, limit))
}

/// The window-membership scan over n in [from, to] for a precomputed window.
pub fn patch_hits_in_window(w: &Window, from: u64, to: u64) -> Vec<u64> {
    (from..=to)
        .filter(|&n| w.contains(&orbit_point(n).y))
        .collect()
}

/// The same set, straight from the definition R(n+i) = p_i * R(n), by a
/// single streaming sweep of the counts. Dual route to `patch_hits`.
pub fn patch_hits_by_scan(p: &Patch, limit: u64) -> Result<Vec<u64>> {
    let k = p.ratios.len();
    let mut stream = RStream::new();
    let mut buf: std::collections::VecDeque<BigInt> =
        (&mut stream).take(k + 1).map(|(_, v)| v).collect();
    let mut hits = Vec::new();
    for n in 0..=limit {
        let r_n = &buf[0];
        let ok = p
            .ratios
            .iter()
            .zip(buf.iter().skip(1))
            .all(|(p_i, r_ni)| r_ni * p_i.denom() == r_n * p_i.numer());
        if ok {
            hits.push(n);
        }
        buf.pop_front();
        let (_, v) = stream.next().expect("count stream is unbounded");
        buf.push_back(v);
    }
    Ok(hits)
}

/// Exact density of the patch's occurrence set (unique ergodicity turns
/// window length into asymptotic frequency; the strip has total length 1),
/// with a 12-digit decimal rendering.
pub fn density(p: &Patch) -> Result<(GoldenNum, String)> {
    let len = patch_window(p)?.total_length();
    let dec = len.to_decimal(12);
    Ok((len, dec))
}

/// Maximal run statistics for one comparison discipline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunStats {
    /// Largest k with R(n) <= R(n+1) <= ... <= R(n+k) (or < for strict)
    /// over starts n <= limit.
    pub k_max: usize,
    /// Starts achieving k_max, capped at the first 1000.
    pub witnesses: Vec<u64>,
    /// Total number of starts achieving k_max.
    pub witness_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub weak: RunStats,
    pub strict: RunStats,
}

/// Scans the counts and reports the longest nondecreasing and strictly
/// increasing runs with starts n <= limit (runs may extend past the limit;
/// the scan continues until every candidate run has terminated).
pub fn run_statistics(limit: u64) -> RunReport {
    struct Tracker {
        seg_start: u64,
        stats: RunStats,
    }
    impl Tracker {
        fn close(&mut self, end: u64, limit: u64) {
            if self.seg_start <= limit {
                let k = (end - self.seg_start) as usize;
                if k > self.stats.k_max {
                    self.stats.k_max = k;
                    self.stats.witnesses = vec![self.seg_start];
                    self.stats.witness_count = 1;
                } else if k == self.stats.k_max {
                    self.stats.witness_count += 1;
                    if self.stats.witnesses.len() < 1000 {
                        self.stats.witnesses.push(self.seg_start);
                    }
                }
            }
        }
    }
    let empty = RunStats { k_max: 0, witnesses: Vec::new(), witness_count: 0 };
    let mut weak = Tracker { seg_start: 0, stats: empty.clone() };
    let mut strict = Tracker { seg_start: 0, stats: empty };
    let mut stream = RStream::new();
    let (_, mut prev) = stream.next().expect("count stream is unbounded");
    for (i, val) in stream {
        match prev.cmp(&val) {
            std::cmp::Ordering::Greater => {
                weak.close(i - 1, limit);
                weak.seg_start = i;
                strict.close(i - 1, limit);
                strict.seg_start = i;
            }
            std::cmp::Ordering::Equal => {
                strict.close(i - 1, limit);
                strict.seg_start = i;
            }
            std::cmp::Ordering::Less => {}
        }
        prev = val;
        if i > limit && weak.seg_start > limit && strict.seg_start > limit {
            break;
        }
    }
    RunReport { weak: weak.stats, strict: strict.stats }
}

/// The longest nondecreasing run with start n <= limit: (k_max, witnesses).
pub fn longest_nondecreasing_run(limit: u64) -> (usize, Vec<u64>) {
    let report = run_statistics(limit);
    (report.weak.k_max, report.weak.witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::batch_r;
    use crate::dynamics::{breakpoint, h_eval, rotate};

    fn g(p: i64, q: i64) -> GoldenNum {
        GoldenNum::new(p, q)
    }

    fn rat(n: i64, d: i64) -> Ratio {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn unit_level_set_matches_the_exact_endpoints() {
        let w = level_set(&Ratio::one()).unwrap();
        assert_eq!(w.intervals.len(), 2);
        // [-1/phi^4, 0]
        assert_eq!(w.intervals[0], Interval::closed(g(-5, 3), g(0, 0)).unwrap());
        // [1/phi^2, 1/phi^2 + 1/phi^5]
        assert_eq!(w.intervals[1], Interval::closed(g(2, -1), g(-6, 4)).unwrap());
        // total length 1/phi^4 + 1/phi^5 = 1/phi^3
        assert_eq!(w.total_length(), g(-3, 2));
    }

    #[test]
    fn level_sets_have_two_intervals_and_agree_with_h() {
        for q in [rat(1, 3), rat(1, 2), rat(2, 3), rat(1, 1), rat(3, 2), rat(2, 1), rat(3, 1)] {
            let w = level_set(&q).unwrap();
            assert_eq!(w.intervals.len(), 2, "level_set({q})");
            for i in &w.intervals {
                assert!(i.lo_closed && i.hi_closed);
                assert_eq!(h_eval(&i.lo).unwrap(), q, "left endpoint of {i}");
                assert_eq!(h_eval(&i.hi).unwrap(), q, "right endpoint of {i}");
            }
            // the two pieces sit on opposite sides of the breakpoint
            assert!((&w.intervals[0].hi - &breakpoint()).signum() < 0);
            assert!((&w.intervals[1].lo - &breakpoint()).signum() > 0);
        }
    }

    #[test]
    fn level_set_rejects_nonpositive_and_deep_ratios() {
        assert!(matches!(
            level_set(&rat(-1, 2)),
            Err(Error::NonpositiveRatio(_))
        ));
        assert!(matches!(
            level_set(&Ratio::from_integer(BigInt::from(0))),
            Err(Error::NonpositiveRatio(_))
        ));
        // descent length for an integer q is q - 1
        assert!(matches!(
            level_set(&Ratio::from_integer(BigInt::from(100))),
            Err(Error::DepthExceeded { .. })
        ));
        assert!(level_set_with_depth(&Ratio::from_integer(BigInt::from(100)), 128).is_ok());
    }

    #[test]
    fn table_depth_zero_is_the_unit_plateau_pair() {
        let t = staircase_table(0);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].0, Interval::closed(g(-5, 3), g(0, 0)).unwrap());
        assert_eq!(t[0].1, Ratio::one());
        assert_eq!(t[1].0, Interval::closed(g(2, -1), g(-6, 4)).unwrap());
        assert_eq!(t[1].1, Ratio::one());
    }

    #[test]
    fn table_is_disjoint_sorted_and_sums_to_the_closed_form() {
        for d in 0..=8 {
            let t = staircase_table(d);
            assert_eq!(t.len(), 2 * ((1 << (d + 1)) - 1), "size at depth {d}");
            let mut sum = GoldenNum::zero();
            for pair in t.windows(2) {
                assert!(
                    (&pair[0].0.hi - &pair[1].0.lo).signum() < 0,
                    "gap between {} and {}",
                    pair[0].0,
                    pair[1].0
                );
            }
            for (i, _) in &t {
                sum += &i.length();
            }
            assert_eq!(sum, staircase_table_length(d), "length at depth {d}");
        }
    }

    #[test]
    fn table_length_and_residual_are_complementary() {
        for d in 0..=12 {
            let total = &staircase_table_length(d) + &staircase_residual(d);
            assert_eq!(total, GoldenNum::one(), "depth {d}");
        }
        // nondecreasing coverage
        for d in 0..12 {
            assert!(
                (&staircase_table_length(d + 1) - &staircase_table_length(d)).signum() > 0
            );
        }
    }

    #[test]
    fn residual_crosses_one_thousandth_between_depths_20_and_25() {
        let thousandth = |r: &GoldenNum| {
            (&(r * &GoldenNum::from_int(1000)) - &GoldenNum::one()).signum()
        };
        // (2/phi^2)^21 ~ 3.5e-3: still above 10^-3 at depth 20 ...
        assert!(thousandth(&staircase_residual(20)) > 0);
        // ... and below it from depth 25 on (~9.1e-4).
        assert!(thousandth(&staircase_residual(25)) < 0);
    }

    #[test]
    fn table_values_match_h_on_the_orbit() {
        let t = staircase_table(12);
        let mut covered = 0usize;
        for n in 0..=2582u64 {
            let y = orbit_point(n).y;
            let idx = t.partition_point(|(i, _)| (&i.lo - &y).signum() <= 0);
            if idx > 0 && t[idx - 1].0.contains(&y) {
                covered += 1;
                assert_eq!(h_eval(&y).unwrap(), t[idx - 1].1, "h(y_{n})");
            }
        }
        // depth 12 leaves ~3% of the strip uncovered
        assert!(covered > 2300, "only {covered} orbit points landed in the table");
    }

    #[test]
    fn preimage_membership_tracks_the_rotation() {
        let w = level_set(&Ratio::one()).unwrap();
        let pre = w.rotate_preimage();
        assert_eq!(pre.total_length(), w.total_length());
        let mut y = GoldenNum::zero();
        for n in 0..2000u64 {
            let next = rotate(&y).unwrap();
            assert_eq!(pre.contains(&y), w.contains(&next), "at n = {n}");
            y = next;
        }
    }

    #[test]
    fn single_entry_patch_window_is_the_level_set() {
        let p = Patch::from_ints(&[1]).unwrap();
        assert_eq!(patch_window(&p).unwrap(), level_set(&Ratio::one()).unwrap());
        let (len, dec) = density(&p).unwrap();
        assert_eq!(len, g(-3, 2)); // 1/phi^3
        assert_eq!(dec, "0.236067977500");
    }

    #[test]
    fn double_patch_window_nests_inside_the_single_one() {
        let p11 = Patch::from_ints(&[1, 1]).unwrap();
        let w11 = patch_window(&p11).unwrap();
        let w1 = level_set(&Ratio::one()).unwrap();
        assert!(!w11.is_empty());
        for i in &w11.intervals {
            assert!(
                w1.contains(&i.lo) && w1.contains(&i.hi),
                "{i} sticks out of the level set"
            );
        }
        assert!((&w11.total_length() - &w1.total_length()).signum() < 0);
    }

    #[test]
    fn patch_constructors_reject_bad_input() {
        assert!(matches!(Patch::new(vec![]), Err(Error::EmptyPatch)));
        assert!(matches!(
            Patch::new(vec![rat(-2, 1)]),
            Err(Error::NonpositiveRatio(_))
        ));
    }

    #[test]
    fn equal_pair_hits_match_the_reference_values() {
        // n <= 13 with R(n+1) = R(n), off the head of the count sequence
        // 1,1,1,2,1,2,2,1,3,2,2,3,1,3,3: equal consecutive pairs start at
        // 0, 1, 5, 9, 13.
        let p = Patch::from_ints(&[1]).unwrap();
        assert_eq!(patch_hits(&p, 13).unwrap(), vec![0, 1, 5, 9, 13]);
        let p11 = Patch::from_ints(&[1, 1]).unwrap();
        assert!(patch_hits(&p11, 2).unwrap().contains(&0)); // R(0)=R(1)=R(2)=1
    }

    #[test]
    fn window_route_equals_scan_route() {
        for entries in [&[1][..], &[1, 1][..], &[2, 2][..], &[3][..]] {
            let p = Patch::from_ints(entries).unwrap();
            assert_eq!(
                patch_hits(&p, 3000).unwrap(),
                patch_hits_by_scan(&p, 3000).unwrap(),
                "patch {entries:?}"
            );
        }
    }

    #[test]
    fn empirical_density_approaches_the_window_length() {
        let p = Patch::from_ints(&[1, 1]).unwrap();
        let hits = patch_hits(&p, 100_000).unwrap().len() as f64;
        let exact = patch_window(&p).unwrap().total_length().to_f64();
        assert!(
            (hits / 100_001.0 - exact).abs() < 1e-2,
            "empirical {} vs exact {exact}",
            hits / 100_001.0
        );
    }

    #[test]
    fn runs_at_ten_thousand_match_the_known_maximum() {
        let (k, witnesses) = longest_nondecreasing_run(10_000);
        assert_eq!(k, 3);
        assert_eq!(witnesses, vec![0]); // R(0..3) = 1,1,1,2
        let report = run_statistics(10_000);
        assert_eq!(report.weak.witness_count, 1);
        assert!(report.strict.k_max >= 1); // e.g. R(2) = 1 < R(3) = 2
        assert!(report.strict.k_max <= 3);
    }

    #[test]
    fn run_scan_agrees_with_a_direct_quadratic_check() {
        let limit = 300u64;
        let values: Vec<BigInt> = batch_r(limit + 16).map(|(_, v)| v).collect();
        let mut best = 0usize;
        let mut starts = Vec::new();
        for n in 0..=limit as usize {
            let mut k = 0;
            while values[n + k] <= values[n + k + 1] {
                k += 1;
            }
            if k > best {
                best = k;
                starts = vec![n as u64];
            } else if k == best {
                starts.push(n as u64);
            }
        }
        let report = run_statistics(limit);
        assert_eq!(report.weak.k_max, best);
        assert_eq!(report.weak.witnesses, starts);
    }

    #[test]
    fn window_normalization_merges_touching_pieces() {
        // [0, 1/phi^2) followed by [1/phi^2, 1/phi] merges at the shared end
        let a = Interval::new(g(0, 0), g(2, -1), true, false).unwrap();
        let b = Interval::closed(g(2, -1), g(-1, 1)).unwrap();
        let w = Window::new(vec![b.clone(), a.clone()]);
        assert_eq!(w.intervals.len(), 1);
        assert_eq!(w.intervals[0], Interval::closed(g(0, 0), g(-1, 1)).unwrap());
        // open junction on both sides stays split
        let c = Interval::new(g(2, -1), g(-1, 1), false, true).unwrap();
        let w2 = Window::new(vec![a, c]);
        assert_eq!(w2.intervals.len(), 2);
    }
}
