//! Higher additive energies and the ordered-tuple count `T`.
//!
//! `t_count(D, A, k)` is the number of ordered k-tuples from `A` whose
//! pairwise differences all lie in `D`; equivalently the number of ordered
//! k-cliques (with repetition when `0 ∈ D`) in the graph on `A` whose
//! adjacency is `a - a' ∈ D \ {0}`. The engine is a recursive candidate
//! bit-vector intersection with translation-canonical memoization; a naive
//! tuple loop lives in the tests as the independent oracle.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::caps::EnumCap;
use crate::error::{Error, Result};
use crate::group::{
    and_translate_words, iter_set_bits, popcount, rot_into, shr_into, Element, GSet, GroupSpec,
};
use crate::rep::{higher_rep, rep_table, SparseRepTable};
use crate::report::{CheckReport, Verdict};

/// Exact ordered-tuple count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCount {
    pub k: u32,
    pub value: BigUint,
}

/// Which side of the commutation identity an energy was computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergySide {
    /// Sum the l-th powers over the support of the order-k table.
    ViaRk,
    /// Sum the k-th powers over the support of the order-l table.
    ViaRl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyValue {
    pub k: u32,
    pub l: u32,
    pub side: EnergySide,
    pub value: BigUint,
}

/// Moment sum defining the `(k,l)` energy, on the requested side.
pub fn energy_kl(a: &GSet, k: u32, l: u32, side: EnergySide, cap: &EnumCap) -> Result<EnergyValue> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidParameter("energy needs k, l >= 2".into()));
    }
    let value = match side {
        EnergySide::ViaRk => higher_rep(a, k, cap)?.moment(l),
        EnergySide::ViaRl => higher_rep(a, l, cap)?.moment(k),
    };
    Ok(EnergyValue { k, l, side, value })
}

/// Same, reusing an already-enumerated support table.
pub fn energy_from_table(table: &SparseRepTable, other: u32) -> BigUint {
    table.moment(other)
}

/// `E_k(A) = Σ_x r_A(x)^k`, the cheap route through the plain
/// representation table.
pub fn energy_k(a: &GSet, k: u32) -> Result<BigUint> {
    let t = rep_table(a)?;
    let mut acc = BigUint::zero();
    for &c in t.counts() {
        if c > 0 {
            acc += BigUint::from(c).pow(k);
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Counting engine.

/// Accumulator abstraction: u128 when the final count provably fits,
/// arbitrary precision otherwise.
trait Count: Clone + Zero {
    fn add_usize(&mut self, n: usize);
    fn accumulate(&mut self, other: &Self);
    fn into_biguint(self) -> BigUint;
}

impl Count for u128 {
    fn add_usize(&mut self, n: usize) {
        *self += n as u128;
    }
    fn accumulate(&mut self, other: &Self) {
        *self += *other;
    }
    fn into_biguint(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Count for BigUint {
    fn add_usize(&mut self, n: usize) {
        *self += n;
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn into_biguint(self) -> BigUint {
        self
    }
}

/// True when `card^k < 2^126`, so u128 accumulation cannot overflow.
fn fits_u128(card: usize, k: u32) -> bool {
    if card <= 1 {
        return true;
    }
    let bits = usize::BITS - card.leading_zeros();
    (bits as u64) * (k as u64) <= 126
}

const MEMO_MAX_ENTRIES: usize = 1 << 20;

struct TupleEngine<'a, C: Count> {
    group: &'a GroupSpec,
    dsym: &'a GSet,
    levels: Vec<Vec<u64>>,
    scratch: Vec<u64>,
    canon_tmp: Vec<u64>,
    canon_best: Vec<u64>,
    memo: HashMap<(u32, Box<[u64]>), C>,
    use_memo: bool,
}

impl<'a, C: Count> TupleEngine<'a, C> {
    fn new(group: &'a GroupSpec, dsym: &'a GSet, depth: usize) -> Self {
        let nw = dsym.words().len();
        TupleEngine {
            group,
            dsym,
            levels: vec![vec![0u64; nw]; depth + 1],
            scratch: vec![0u64; nw],
            canon_tmp: vec![0u64; nw],
            canon_best: vec![0u64; nw],
            memo: HashMap::new(),
            // canonical hashing only pays off beyond single-word carriers
            use_memo: group.carrier() > 64,
        }
    }

    /// Number of `remaining`-tuples from the set in `levels[level]` whose
    /// pairwise differences lie in `dsym`.
    fn count_level(&mut self, level: usize, remaining: u32) -> C {
        if remaining == 1 {
            let mut c = C::zero();
            c.add_usize(popcount(&self.levels[level]));
            return c;
        }
        let key = if self.use_memo {
            let k = self.canonical_key(level);
            if let Some(v) = self.memo.get(&(remaining, k.clone())) {
                return v.clone();
            }
            Some(k)
        } else {
            None
        };
        let nw = self.levels[level].len();
        let mut total = C::zero();
        for widx in 0..nw {
            let mut w = self.levels[level][widx];
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                let x = Element(widx * 64 + b);
                {
                    let (head, tail) = self.levels.split_at_mut(level + 1);
                    and_translate_words(
                        self.group,
                        &head[level],
                        self.dsym,
                        x,
                        &mut self.scratch,
                        &mut tail[0],
                    );
                }
                let pc = popcount(&self.levels[level + 1]);
                if pc == 0 {
                    continue;
                }
                if remaining == 2 {
                    total.add_usize(pc);
                } else {
                    let sub = self.count_level(level + 1, remaining - 1);
                    total.accumulate(&sub);
                }
            }
        }
        if let Some(k) = key {
            if self.memo.len() < MEMO_MAX_ENTRIES {
                self.memo.insert((remaining, k), total.clone());
            }
        }
        total
    }

    /// Translation-canonical form of `levels[level]`: counts are invariant
    /// under translating the candidate set, so translates share memo slots.
    fn canonical_key(&mut self, level: usize) -> Box<[u64]> {
        let cur = &self.levels[level];
        match self.group {
            GroupSpec::Cyclic { order } => {
                let n = *order as usize;
                let elems: Vec<usize> = iter_set_bits(cur).collect();
                let t = elems.len();
                if t == 0 || t == n {
                    return cur.clone().into_boxed_slice();
                }
                // rotate the element following the longest circular gap to 0
                let mut best_gap = 0usize;
                let mut followers: Vec<usize> = Vec::new();
                for i in 0..t {
                    let (cur_e, next_e) =
                        if i + 1 < t { (elems[i], elems[i + 1]) } else { (elems[t - 1], elems[0] + n) };
                    let gap = next_e - cur_e;
                    let follower = next_e % n;
                    if gap > best_gap {
                        best_gap = gap;
                        followers.clear();
                        followers.push(follower);
                    } else if gap == best_gap {
                        followers.push(follower);
                    }
                }
                if followers.len() > 4 {
                    // highly regular set; identity form is still a sound key
                    return cur.clone().into_boxed_slice();
                }
                let mut have_best = false;
                for &f in &followers {
                    let shift = (n - f) % n;
                    rot_into(&mut self.canon_tmp, cur, shift, n);
                    if !have_best || self.canon_tmp[..] < self.canon_best[..] {
                        self.canon_best.copy_from_slice(&self.canon_tmp);
                        have_best = true;
                    }
                }
                self.canon_best.clone().into_boxed_slice()
            }
            GroupSpec::IntegerWindow { .. } => {
                // shift the least member to the left edge of the window
                match iter_set_bits(cur).next() {
                    Some(min) => {
                        shr_into(&mut self.canon_tmp, cur, min);
                        self.canon_tmp.clone().into_boxed_slice()
                    }
                    None => cur.clone().into_boxed_slice(),
                }
            }
            GroupSpec::Product { .. } => cur.clone().into_boxed_slice(),
        }
    }
}

fn t_count_generic<C: Count>(dsym: &GSet, a: &GSet, k: u32) -> C {
    let mut engine: TupleEngine<C> = TupleEngine::new(a.group(), dsym, k as usize);
    engine.levels[0].copy_from_slice(a.words());
    engine.count_level(0, k)
}

/// Ordered k-tuples from `A` with all pairwise differences in `D`.
///
/// Only `D ∩ (-D)` can ever separate a pair (both orders are required), so
/// the set is symmetrized up front; repetitions are allowed exactly when
/// `0 ∈ D`.
pub fn t_count(d: &GSet, a: &GSet, k: u32) -> Result<TCount> {
    if d.group() != a.group() {
        return Err(Error::GroupMismatch);
    }
    if k < 1 {
        return Err(Error::InvalidParameter("tuple count needs k >= 1".into()));
    }
    if k == 1 || a.is_empty() {
        let value = if a.is_empty() { BigUint::zero() } else { BigUint::from(a.cardinality()) };
        return Ok(TCount { k, value });
    }
    let dsym = d.intersect(&d.negated())?;
    let value = if fits_u128(a.cardinality(), k) {
        t_count_generic::<u128>(&dsym, a, k).into_biguint()
    } else {
        t_count_generic::<BigUint>(&dsym, a, k).into_biguint()
    };
    Ok(TCount { k, value })
}

/// Closed form for the tuple count of a centered interval `[-m, m]` inside
/// a large enough prime-order group: `(m+1)^{k+1} - m^{k+1}`.
pub fn t_interval_closed_form(m: u64, k: u32) -> BigUint {
    BigUint::from(m + 1).pow(k + 1) - BigUint::from(m).pow(k + 1)
}

/// Upper bound `3k·2^{-k-1}·|D|^k`, valid for `3 <= k <= |D|` with `D`
/// symmetric around 0 in a prime-order group of order `>= 3|D|/2 - 1`.
pub fn corollary_bound(size_d: u64, k: u32) -> Result<BigRational> {
    if k < 3 {
        return Err(Error::HypothesisViolated(format!("bound needs k >= 3, got {k}")));
    }
    if (k as u64) > size_d {
        return Err(Error::HypothesisViolated(format!(
            "bound needs k <= |D|, got k={k}, |D|={size_d}"
        )));
    }
    let num = BigUint::from(3u32) * BigUint::from(k) * BigUint::from(size_d).pow(k);
    let den = BigUint::from(2u32).pow(k + 1);
    Ok(BigRational::new(num.into(), den.into()))
}

/// Dense-set bound `(1 - k(k-1)τ/4)·|D|^k`, requiring
/// `0 < τ <= min(1/2, 2/(k²-k+2))`.
pub fn dense_bound(size_d: u64, tau: &BigRational, k: u32) -> Result<BigRational> {
    if k < 1 {
        return Err(Error::HypothesisViolated("bound needs k >= 1".into()));
    }
    if !tau.is_positive() {
        return Err(Error::HypothesisViolated("tau must be positive".into()));
    }
    let half = BigRational::new(1.into(), 2.into());
    let kk = BigRational::from_integer((k as i64 * (k as i64 - 1) + 2).into());
    let cap = (BigRational::from_integer(2.into()) / kk).min(half);
    if tau > &cap {
        return Err(Error::HypothesisViolated(format!(
            "tau must be <= min(1/2, 2/(k^2-k+2)), got {tau}"
        )));
    }
    let quarter_term = BigRational::from_integer((k as i64 * (k as i64 - 1)).into())
        / BigRational::from_integer(4.into())
        * tau;
    let factor = BigRational::one() - quarter_term;
    let size = BigRational::from_integer(BigUint::from(size_d).pow(k).into());
    Ok(factor * size)
}

// ---------------------------------------------------------------------------
// Identity check: the (k+1)-tuple count three ways.

fn id_ax_tuple_sum<C: Count>(a: &GSet, d: &GSet, k: u32) -> C {
    // Sum of |A ∩ (A+d_1) ∩ ... ∩ (A+d_k)| over k-tuples from D whose
    // pairwise differences stay in D. Two parallel refinements: candidate
    // translates from D, and the running intersection of A-translates.
    let nw = a.words().len();
    let depth = k as usize;
    let mut cd: Vec<Vec<u64>> = vec![vec![0u64; nw]; depth + 1];
    let mut ia: Vec<Vec<u64>> = vec![vec![0u64; nw]; depth + 1];
    let mut scratch = vec![0u64; nw];
    cd[0].copy_from_slice(d.words());
    ia[0].copy_from_slice(a.words());

    fn rec<C: Count>(
        a: &GSet,
        d: &GSet,
        cd: &mut [Vec<u64>],
        ia: &mut [Vec<u64>],
        scratch: &mut [u64],
        level: usize,
        remaining: u32,
        total: &mut C,
    ) {
        let nw = scratch.len();
        for widx in 0..nw {
            let mut w = cd[level][widx];
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                let x = Element(widx * 64 + b);
                {
                    let (head, tail) = ia.split_at_mut(level + 1);
                    and_translate_words(a.group(), &head[level], a, x, scratch, &mut tail[0]);
                }
                let pc = popcount(&ia[level + 1]);
                if pc == 0 {
                    continue;
                }
                if remaining == 1 {
                    total.add_usize(pc);
                    continue;
                }
                {
                    let (head, tail) = cd.split_at_mut(level + 1);
                    and_translate_words(a.group(), &head[level], d, x, scratch, &mut tail[0]);
                }
                if popcount(&cd[level + 1]) == 0 {
                    continue;
                }
                rec(a, d, cd, ia, scratch, level + 1, remaining - 1, total);
            }
        }
    }

    let mut total = C::zero();
    rec(a, d, &mut cd, &mut ia, &mut scratch, 0, k, &mut total);
    total
}

/// Check the two tuple-count identities: the direct count of
/// `(k+1)`-tuples, the sum of higher representation values over admissible
/// difference tuples, and the sum of k-tuple counts over translated slices
/// must agree exactly.
pub fn verify_id_ax(a: &GSet, d: &GSet, k: u32) -> Result<CheckReport> {
    if a.group() != d.group() {
        return Err(Error::GroupMismatch);
    }
    if k < 1 {
        return Err(Error::InvalidParameter("identity check needs k >= 1".into()));
    }
    if !d.is_symmetric_with_zero() {
        return Err(Error::NotSymmetric);
    }
    if a.is_empty() {
        return Err(Error::EmptySet);
    }

    let direct = t_count(d, a, k + 1)?.value;

    let tuple_sum = if fits_u128(a.cardinality(), k + 1) {
        id_ax_tuple_sum::<u128>(a, d, k).into_biguint()
    } else {
        id_ax_tuple_sum::<BigUint>(a, d, k).into_biguint()
    };

    let nw = a.words().len();
    let mut scratch = vec![0u64; nw];
    let mut slice = vec![0u64; nw];
    let mut slice_sum = BigUint::zero();
    for e in a.iter() {
        a.and_translate_into(d, e, &mut scratch, &mut slice);
        let part = GSet::from_words(a.group().clone(), slice.clone());
        slice_sum += t_count(d, &part, k)?.value;
    }

    let ok = direct == tuple_sum && direct == slice_sum;
    let mut report = CheckReport::new("id-ax");
    report.hypotheses_met = true;
    report.lhs = Some(direct.to_string());
    report.rhs = Some(tuple_sum.to_string());
    report.verdict = if ok { Verdict::Holds } else { Verdict::Violated };
    report.detail("k", k);
    report.detail("direct", &direct);
    report.detail("via_tuple_sum", &tuple_sum);
    report.detail("via_slice_sum", &slice_sum);
    Ok(report)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{centered_interval, enumerate_symmetric_sets};

    fn cyc(n: u64) -> GroupSpec {
        GroupSpec::cyclic(n)
    }

    #[test]
    fn t_count_hand_values() {
        let g = cyc(7);
        let d = GSet::from_ints(g.clone(), &[-1, 0, 1]).unwrap();
        assert_eq!(t_count(&d, &d, 2).unwrap().value, BigUint::from(7u32));
        assert_eq!(t_count(&d, &d, 3).unwrap().value, BigUint::from(15u32));
        let d2 = GSet::from_ints(g.clone(), &[-2, -1, 0, 1, 2]).unwrap();
        assert_eq!(t_count(&d2, &d2, 2).unwrap().value, BigUint::from(19u32));
        // with 0 in D, single tuples are unconstrained
        let a = GSet::from_ints(g, &[0, 2, 3]).unwrap();
        assert_eq!(t_count(&d, &a, 1).unwrap().value, BigUint::from(3u32));
    }

    #[test]
    fn t_count_group_mismatch() {
        let d = GSet::from_ints(cyc(7), &[0]).unwrap();
        let a = GSet::from_ints(cyc(5), &[0]).unwrap();
        assert_eq!(t_count(&d, &a, 2), Err(Error::GroupMismatch));
    }

    #[test]
    fn t_count_matches_naive_oracle() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..60 {
            let p = *[5u64, 7, 11, 13].choose(&mut rng).unwrap();
            let g = cyc(p);
            let size_a = rng.gen_range(1..=p.min(8)) as usize;
            let size_d = rng.gen_range(1..=p) as usize;
            let a_members: Vec<i64> =
                rand::seq::index::sample(&mut rng, p as usize, size_a)
                    .into_iter()
                    .map(|x| x as i64)
                    .collect();
            let d_members: Vec<i64> =
                rand::seq::index::sample(&mut rng, p as usize, size_d)
                    .into_iter()
                    .map(|x| x as i64)
                    .collect();
            let a = GSet::from_ints(g.clone(), &a_members).unwrap();
            let d = GSet::from_ints(g.clone(), &d_members).unwrap();
            for k in 1..=3u32 {
                let fast = t_count(&d, &a, k).unwrap().value;
                let slow = oracle::t_count_naive(&d, &a, k);
                assert_eq!(fast, BigUint::from(slow), "trial {trial} p={p} k={k}");
            }
        }
    }

    #[test]
    fn t_count_matches_naive_on_window_and_product() {
        let g = GroupSpec::integer_window(6);
        let d = GSet::from_ints(g.clone(), &[-2, 0, 1, 2]).unwrap();
        let a = GSet::from_ints(g.clone(), &[-3, -1, 0, 2, 3]).unwrap();
        for k in 1..=4u32 {
            assert_eq!(
                t_count(&d, &a, k).unwrap().value,
                BigUint::from(oracle::t_count_naive(&d, &a, k))
            );
        }
        let g = GroupSpec::product(vec![2, 4]);
        let d = GSet::from_values(
            g.clone(),
            &[
                crate::group::ElemValue::Tuple(vec![0, 0]),
                crate::group::ElemValue::Tuple(vec![1, 1]),
                crate::group::ElemValue::Tuple(vec![1, 3]),
                crate::group::ElemValue::Tuple(vec![0, 2]),
            ],
        )
        .unwrap();
        let a = GSet::from_values(
            g.clone(),
            &[
                crate::group::ElemValue::Tuple(vec![0, 0]),
                crate::group::ElemValue::Tuple(vec![0, 1]),
                crate::group::ElemValue::Tuple(vec![1, 2]),
                crate::group::ElemValue::Tuple(vec![1, 0]),
            ],
        )
        .unwrap();
        for k in 1..=3u32 {
            assert_eq!(
                t_count(&d, &a, k).unwrap().value,
                BigUint::from(oracle::t_count_naive(&d, &a, k))
            );
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(t_interval_closed_form(1, 2), BigUint::from(7u32));
        assert_eq!(t_interval_closed_form(2, 3), BigUint::from(65u32));
        assert_eq!(t_interval_closed_form(0, 5), BigUint::from(1u32));
    }

    #[test]
    fn closed_form_matches_engine() {
        for m in 0..=4u64 {
            let width = 2 * m + 1;
            let p = crate::group::next_prime(3 * width);
            let g = cyc(p);
            let d = centered_interval(&g, width as usize).unwrap();
            for k in 1..=4u32 {
                assert_eq!(
                    t_count(&d, &d, k).unwrap().value,
                    t_interval_closed_form(m, k),
                    "m={m} k={k} p={p}"
                );
            }
        }
    }

    #[test]
    fn corollary_bound_values() {
        let b = corollary_bound(3, 3).unwrap();
        assert_eq!(b, BigRational::new(243.into(), 16.into()));
        let b = corollary_bound(5, 3).unwrap();
        assert_eq!(b, BigRational::new(1125.into(), 16.into()));
        assert!(matches!(corollary_bound(5, 2), Err(Error::HypothesisViolated(_))));
        assert!(matches!(corollary_bound(2, 3), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn dense_bound_values() {
        // order 9, D = everything but {4, 5}: tau = 2/7, k = 2 bound is 42
        let tau = BigRational::new(2.into(), 7.into());
        let b = dense_bound(7, &tau, 2).unwrap();
        assert_eq!(b, BigRational::from_integer(42.into()));
        let g = cyc(9);
        let d = GSet::from_ints(g, &[0, 1, 2, 3, 6, 7, 8]).unwrap();
        assert!(d.is_symmetric_with_zero());
        assert_eq!(t_count(&d, &d, 2).unwrap().value, BigUint::from(39u32));

        // k = 1: the tau term vanishes and the bound is |D| itself
        let b = dense_bound(7, &tau, 1).unwrap();
        assert_eq!(b, BigRational::from_integer(7.into()));

        let too_big = BigRational::new(3.into(), 4.into());
        assert!(matches!(dense_bound(7, &too_big, 1), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn energy_hand_values() {
        let cap = EnumCap::default();
        let g = cyc(11);
        let a = GSet::from_ints(g, &[0, 1]).unwrap();
        let e22 = energy_kl(&a, 2, 2, EnergySide::ViaRk, &cap).unwrap();
        assert_eq!(e22.value, BigUint::from(6u32));
        let via2 = energy_kl(&a, 3, 2, EnergySide::ViaRl, &cap).unwrap();
        let via3 = energy_kl(&a, 3, 2, EnergySide::ViaRk, &cap).unwrap();
        assert_eq!(via2.value, BigUint::from(10u32));
        assert_eq!(via3.value, BigUint::from(10u32));
        assert_eq!(energy_k(&a, 3).unwrap(), BigUint::from(10u32));
    }

    #[test]
    fn energy_commutes_on_random_sets() {
        use rand::prelude::*;
        let cap = EnumCap::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let size = rng.gen_range(2..=8);
            let members: Vec<i64> = rand::seq::index::sample(&mut rng, 17, size)
                .into_iter()
                .map(|x| x as i64)
                .collect();
            let a = GSet::from_ints(cyc(17), &members).unwrap();
            for (k, l) in [(2u32, 3u32), (2, 4), (3, 4), (3, 3)] {
                let lhs = energy_kl(&a, k, l, EnergySide::ViaRk, &cap).unwrap().value;
                let rhs = energy_kl(&a, k, l, EnergySide::ViaRl, &cap).unwrap().value;
                assert_eq!(lhs, rhs, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn energy_upper_bound_via_mu() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let size = rng.gen_range(2..=10);
            let members: Vec<i64> = rand::seq::index::sample(&mut rng, 19, size)
                .into_iter()
                .map(|x| x as i64)
                .collect();
            let a = GSet::from_ints(cyc(19), &members).unwrap();
            let mu = crate::rep::mu(&a).unwrap();
            for k in 2..=4u32 {
                let ek = energy_k(&a, k).unwrap();
                let card = BigUint::from(a.cardinality());
                let bound = card.pow(k) + BigUint::from(mu).pow(k - 1) * card.pow(2);
                assert!(ek <= bound, "k={k}");
            }
        }
    }

    #[test]
    fn support_bounded_by_tuple_count() {
        use rand::prelude::*;
        let cap = EnumCap::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let size = rng.gen_range(2..=7);
            let members: Vec<i64> = rand::seq::index::sample(&mut rng, 13, size)
                .into_iter()
                .map(|x| x as i64)
                .collect();
            let a = GSet::from_ints(cyc(13), &members).unwrap();
            let d = crate::rep::diff_set(&a).unwrap();
            for k in 2..=4u32 {
                let supp = crate::rep::support_size_higher(&a, k, &cap).unwrap();
                let t = t_count(&d, &d, k - 1).unwrap().value;
                assert!(BigUint::from(supp) <= t, "k={k}");
            }
        }
    }

    #[test]
    fn id_ax_three_ways() {
        let g = cyc(7);
        let d = GSet::from_ints(g.clone(), &[-1, 0, 1]).unwrap();
        let r = verify_id_ax(&d, &d, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.details["direct"], "7");

        let a = GSet::from_ints(g.clone(), &[0, 1, 2]).unwrap();
        let r = verify_id_ax(&a, &d, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let expect = oracle::t_count_naive(&d, &a, 3);
        assert_eq!(r.details["direct"], expect.to_string());

        let single = GSet::from_ints(g.clone(), &[4]).unwrap();
        let full = GSet::from_ints(g.clone(), &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        for k in 1..=3 {
            let r = verify_id_ax(&single, &full, k).unwrap();
            assert_eq!(r.verdict, Verdict::Holds);
            assert_eq!(r.details["direct"], "1");
        }

        let asym = GSet::from_ints(g, &[0, 1]).unwrap();
        let a2 = asym.clone();
        assert_eq!(verify_id_ax(&a2, &asym, 1), Err(Error::NotSymmetric));
    }

    #[test]
    fn id_ax_over_symmetric_sets() {
        for dset in enumerate_symmetric_sets(&cyc(7), 31).unwrap() {
            let a = GSet::from_ints(cyc(7), &[0, 2, 3, 6]).unwrap();
            for k in 1..=2 {
                let r = verify_id_ax(&a, &dset, k).unwrap();
                assert_eq!(r.verdict, Verdict::Holds);
            }
        }
    }

    #[test]
    fn memoized_engine_matches_naive_on_larger_interval() {
        // multi-word carrier so the canonical memoization path is exercised
        let p = crate::group::next_prime(3 * 21);
        let g = cyc(p);
        let d = centered_interval(&g, 21).unwrap();
        let t = t_count(&d, &d, 3).unwrap().value;
        assert_eq!(t, t_interval_closed_form(10, 3));
        let naive = oracle::t_count_naive(&d, &d, 3);
        assert_eq!(t, BigUint::from(naive));
    }
}
