//! Difference representation counts.
//!
//! `r_A(d) = |A ∩ (A+d)|` is the number of representations of `d` as a
//! difference of two elements of `A`; its second-largest value is `mu(A)`.
//! The higher variant counts the elements surviving an intersection of
//! several translates, `|A ∩ (A+x_1) ∩ ... ∩ (A+x_{k-1})|`, stored sparsely
//! on its support.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rustfft::{num_complex::Complex, FftPlanner};

use crate::caps::EnumCap;
use crate::error::{Error, Result};
use crate::group::{Element, GSet, GroupSpec};

/// Orders below this use direct bit-vector counting; from here on the
/// autocorrelation goes through an FFT whose integer recovery is verified.
const FFT_MIN_ORDER: usize = 512;

/// Full table of difference-representation counts, indexed by the canonical
/// element encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTable {
    group: GroupSpec,
    counts: Vec<u64>,
}

impl RepTable {
    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn count(&self, d: Element) -> u64 {
        self.counts.get(d.0).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Elements with a nonzero count, ascending; this is the difference set.
    pub fn support(&self) -> Vec<Element> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| Element(i))
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Largest count over nonzero differences together with a witness (the
    /// smallest such element in canonical order). Errors when no nonzero
    /// difference exists, i.e. `|A| <= 1`.
    pub fn second_largest(&self) -> Result<(u64, Element)> {
        let zero = self.group.zero();
        let mut best: Option<(u64, Element)> = None;
        for (i, &c) in self.counts.iter().enumerate() {
            if c == 0 || i == zero.0 {
                continue;
            }
            if best.map_or(true, |(b, _)| c > b) {
                best = Some((c, Element(i)));
            }
        }
        best.ok_or_else(|| Error::Degenerate("mu needs |A| >= 2".into()))
    }

    /// `(value, count)` rows for the nonzero entries.
    pub fn entries(&self) -> Vec<(crate::group::ElemValue, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (self.group.signed_value(Element(i)), c))
            .collect()
    }
}

/// The difference set `A - A`, built as the union of the translates `A - a`.
pub fn diff_set(a: &GSet) -> Result<GSet> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let g = a.group().clone();
    if let GroupSpec::IntegerWindow { halfwidth } = &g {
        let elems = a.elements();
        let span = elems.last().unwrap().0 as i64 - elems[0].0 as i64;
        if span > *halfwidth {
            return Err(Error::WindowOverflow { value: span, halfwidth: *halfwidth });
        }
    }
    let nbits = g.carrier();
    let nw = a.words().len();
    let mut acc = vec![0u64; nw];
    let mut scratch = vec![0u64; nw];
    match &g {
        GroupSpec::Cyclic { .. } => {
            for e in a.iter() {
                let shift = g.neg(e)?;
                crate::group::rot_into(&mut scratch, a.words(), shift.0, nbits);
                for (o, s) in acc.iter_mut().zip(&scratch) {
                    *o |= s;
                }
            }
        }
        GroupSpec::IntegerWindow { halfwidth } => {
            // span <= halfwidth was checked above, so no shift can escape
            for e in a.iter() {
                let s = e.0 as i64 - halfwidth;
                if s <= 0 {
                    crate::group::shl_into(&mut scratch, a.words(), (-s) as usize, nbits);
                } else {
                    crate::group::shr_into(&mut scratch, a.words(), s as usize);
                }
                for (o, sw) in acc.iter_mut().zip(&scratch) {
                    *o |= sw;
                }
            }
        }
        GroupSpec::Product { .. } => {
            for x in a.iter() {
                for y in a.iter() {
                    let d = g.sub(x, y)?;
                    acc[d.0 / 64] |= 1 << (d.0 % 64);
                }
            }
        }
    }
    Ok(GSet::from_words(g, acc))
}

/// Representation table of `A`, choosing between direct counting and the
/// verified FFT autocorrelation.
pub fn rep_table(a: &GSet) -> Result<RepTable> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if let GroupSpec::Cyclic { order } = a.group() {
        let n = *order as usize;
        if n >= FFT_MIN_ORDER {
            if let Some(t) = rep_table_fft(a, n) {
                return Ok(t);
            }
            // fall through to the exact path if integer recovery failed
        }
    }
    rep_table_direct(a)
}

/// Direct `O(carrier)` intersection counting; the exact reference route.
pub fn rep_table_direct(a: &GSet) -> Result<RepTable> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let g = a.group().clone();
    if let GroupSpec::IntegerWindow { halfwidth } = &g {
        let elems = a.elements();
        let span = elems.last().unwrap().0 as i64 - elems[0].0 as i64;
        if span > *halfwidth {
            return Err(Error::WindowOverflow { value: span, halfwidth: *halfwidth });
        }
    }
    let carrier = g.carrier();
    let nw = a.words().len();
    let mut scratch = vec![0u64; nw];
    let mut inter = vec![0u64; nw];
    let mut counts = vec![0u64; carrier];
    for d in 0..carrier {
        a.and_translate_into(a, Element(d), &mut scratch, &mut inter);
        counts[d] = crate::group::popcount(&inter) as u64;
    }
    Ok(RepTable { group: g, counts })
}

/// FFT autocorrelation with rounding, verified against the exact total mass
/// `|A|^2`, the center value `|A|`, and symmetry; returns `None` if any of
/// those checks fail.
fn rep_table_fft(a: &GSet, n: usize) -> Option<RepTable> {
    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n);
    let mut buf: Vec<Complex<f64>> = vec![Complex::new(0.0, 0.0); n];
    for e in a.iter() {
        buf[e.0].re = 1.0;
    }
    forward.process(&mut buf);
    for v in buf.iter_mut() {
        *v = Complex::new(v.norm_sqr(), 0.0);
    }
    inverse.process(&mut buf);
    let card = a.cardinality() as u64;
    let scale = 1.0 / n as f64;
    let mut counts = vec![0u64; n];
    for (d, v) in buf.iter().enumerate() {
        let x = v.re * scale;
        let r = x.round();
        if (x - r).abs() > 0.25 || r < 0.0 || r > card as f64 {
            return None;
        }
        counts[d] = r as u64;
    }
    let total: u128 = counts.iter().map(|&c| c as u128).sum();
    if total != (card as u128) * (card as u128) || counts[0] != card {
        return None;
    }
    for d in 1..n {
        if counts[d] != counts[n - d] {
            return None;
        }
    }
    Some(RepTable { group: a.group().clone(), counts })
}

/// Second largest value of the representation counts (the largest over
/// nonzero differences).
pub fn mu(a: &GSet) -> Result<u64> {
    Ok(rep_table(a)?.second_largest()?.0)
}

/// Sparse table of the order-`k` representation counts, keyed by the
/// `(k-1)`-tuple of translates; only the support is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRepTable {
    group: GroupSpec,
    k: u32,
    map: BTreeMap<Vec<u32>, u64>,
}

impl SparseRepTable {
    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn arity(&self) -> usize {
        self.k as usize - 1
    }

    pub fn get(&self, tuple: &[Element]) -> u64 {
        let key: Vec<u32> = tuple.iter().map(|e| e.0 as u32).collect();
        self.map.get(&key).copied().unwrap_or(0)
    }

    pub fn support_size(&self) -> usize {
        self.map.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<Element>, u64)> + '_ {
        self.map
            .iter()
            .map(|(k, &c)| (k.iter().map(|&i| Element(i as usize)).collect(), c))
    }

    pub fn total_mass(&self) -> BigUint {
        let mut acc = BigUint::from(0u32);
        for &c in self.map.values() {
            acc += c;
        }
        acc
    }

    /// Sum of the `l`-th powers of the counts over the support.
    pub fn moment(&self, l: u32) -> BigUint {
        let mut acc = BigUint::from(0u32);
        for &c in self.map.values() {
            acc += BigUint::from(c).pow(l);
        }
        acc
    }
}

/// Support of the order-`k` representation function, enumerated by pruned
/// depth-first intersection refinement.
///
/// The total mass of the result is checked against `|A|^k` before returning.
pub fn higher_rep(a: &GSet, k: u32, cap: &EnumCap) -> Result<SparseRepTable> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if k < 2 {
        return Err(Error::InvalidParameter("higher representation needs k >= 2".into()));
    }
    let d = diff_set(a)?;
    let candidates = d.elements();
    let nw = a.words().len();
    let depth = (k - 1) as usize;
    let mut levels: Vec<Vec<u64>> = vec![vec![0u64; nw]; depth];
    let mut scratch = vec![0u64; nw];
    let mut tuple: Vec<u32> = Vec::with_capacity(depth);
    let mut map = BTreeMap::new();
    let mut nodes: u64 = 0;

    // iterative DFS over tuple prefixes; levels[j] holds the running
    // intersection after j+1 chosen translates
    fn rec(
        a: &GSet,
        candidates: &[Element],
        levels: &mut [Vec<u64>],
        scratch: &mut [u64],
        tuple: &mut Vec<u32>,
        map: &mut BTreeMap<Vec<u32>, u64>,
        nodes: &mut u64,
        cap: u64,
        depth: usize,
        level: usize,
    ) -> Result<()> {
        for &x in candidates {
            *nodes += 1;
            if *nodes > cap {
                return Err(Error::CapExceeded(format!(
                    "support enumeration exceeded {cap} nodes"
                )));
            }
            let (done, rest) = levels.split_at_mut(level);
            let cur: &[u64] = if level == 0 { a.words() } else { &done[level - 1] };
            crate::group::and_translate_words(a.group(), cur, a, x, scratch, &mut rest[0]);
            let pc = crate::group::popcount(&rest[0]);
            if pc == 0 {
                continue;
            }
            tuple.push(x.0 as u32);
            if level + 1 == depth {
                map.insert(tuple.clone(), pc as u64);
            } else {
                rec(a, candidates, levels, scratch, tuple, map, nodes, cap, depth, level + 1)?;
            }
            tuple.pop();
        }
        Ok(())
    }

    rec(
        a,
        &candidates,
        &mut levels,
        &mut scratch,
        &mut tuple,
        &mut map,
        &mut nodes,
        cap.max_support_nodes,
        depth,
        0,
    )?;

    let table = SparseRepTable { group: a.group().clone(), k, map };
    let mass = table.total_mass();
    let expect = BigUint::from(a.cardinality()).pow(k);
    assert_eq!(mass, expect, "support enumeration lost mass");
    Ok(table)
}

/// `mu^(k)`: maximum of the order-`k` representation function over tuples of
/// pairwise distinct, nonzero translates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuK {
    pub value: u64,
    /// A maximizing tuple, or `None` when no eligible tuple has a nonzero
    /// count.
    pub witness: Option<Vec<Element>>,
}

pub fn mu_k(a: &GSet, k: u32, cap: &EnumCap) -> Result<MuK> {
    if k < 2 {
        return Err(Error::InvalidParameter("mu^(k) needs k >= 2".into()));
    }
    if a.cardinality() < k as usize {
        return Err(Error::Degenerate(format!(
            "mu^({k}) needs |A| >= {k}, got {}",
            a.cardinality()
        )));
    }
    let table = rep_table(a)?;
    let zero = a.group().zero();
    // candidates sorted by descending count: good first bounds for the
    // branch-and-bound search
    let mut cand: Vec<(Element, u64)> = table
        .support()
        .into_iter()
        .filter(|&e| e != zero)
        .map(|e| (e, table.count(e)))
        .collect();
    cand.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));

    let nw = a.words().len();
    let depth = (k - 1) as usize;
    let mut levels: Vec<Vec<u64>> = vec![vec![0u64; nw]; depth];
    let mut scratch = vec![0u64; nw];
    let mut used: Vec<Element> = Vec::with_capacity(depth);
    let mut best: u64 = 0;
    let mut witness: Option<Vec<Element>> = None;
    let mut nodes: u64 = 0;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: &GSet,
        cand: &[(Element, u64)],
        levels: &mut [Vec<u64>],
        scratch: &mut [u64],
        used: &mut Vec<Element>,
        best: &mut u64,
        witness: &mut Option<Vec<Element>>,
        nodes: &mut u64,
        cap: u64,
        depth: usize,
        level: usize,
    ) -> Result<()> {
        for &(x, r) in cand {
            if r <= *best {
                break; // sorted: nothing below can beat the current best
            }
            if used.contains(&x) {
                continue;
            }
            *nodes += 1;
            if *nodes > cap {
                return Err(Error::CapExceeded(format!(
                    "mu^(k) search exceeded {cap} nodes"
                )));
            }
            let (done, rest) = levels.split_at_mut(level);
            let cur: &[u64] = if level == 0 { a.words() } else { &done[level - 1] };
            crate::group::and_translate_words(a.group(), cur, a, x, scratch, &mut rest[0]);
            let pc = crate::group::popcount(&rest[0]) as u64;
            if pc <= *best {
                continue; // the intersection can only shrink further
            }
            used.push(x);
            if level + 1 == depth {
                *best = pc;
                *witness = Some(used.clone());
            } else {
                rec(a, cand, levels, scratch, used, best, witness, nodes, cap, depth, level + 1)?;
            }
            used.pop();
        }
        Ok(())
    }

    rec(
        a,
        &cand,
        &mut levels,
        &mut scratch,
        &mut used,
        &mut best,
        &mut witness,
        &mut nodes,
        cap.max_support_nodes,
        depth,
        0,
    )?;
    Ok(MuK { value: best, witness })
}

/// `|supp|` of the order-`k` representation function.
pub fn support_size_higher(a: &GSet, k: u32, cap: &EnumCap) -> Result<u64> {
    Ok(higher_rep(a, k, cap)?.support_size() as u64)
}
