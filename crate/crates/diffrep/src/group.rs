//! Ambient groups, dense bit-vector sets, intervals, and the centered
//! rearrangement.
//!
//! Three carriers are supported: the cyclic group of order `n`, a bounded
//! integer window `[-W, W]` (a stand-in for Z that errors loudly instead of
//! wrapping), and finite products of cyclic groups. Elements are canonical
//! indices into the carrier; sets are dense bit vectors over those indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest carrier a dense bit-vector set may have.
pub const MAX_CARRIER: usize = 1 << 22;

/// Ambient group of a [`GSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    /// Cyclic group of order `order >= 1`; elements are residues `0..order`.
    Cyclic { order: u64 },
    /// Integers `[-halfwidth, halfwidth]`; any escape is an error.
    IntegerWindow { halfwidth: i64 },
    /// Product of cyclic groups, each of order `>= 2`.
    Product { orders: Vec<u64> },
}

/// Canonical element encoding: an index into the group carrier.
///
/// Cyclic: the residue. Integer window: `value + halfwidth`. Product: the
/// little-endian mixed-radix index of the coordinate tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub usize);

/// Human-facing element value: a residue / signed integer, or a coordinate
/// tuple for product groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemValue {
    Int(i64),
    Tuple(Vec<i64>),
}

impl std::fmt::Display for ElemValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ElemValue::Int(v) => write!(f, "{v}"),
            ElemValue::Tuple(t) => {
                write!(f, "(")?;
                for (i, c) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl GroupSpec {
    pub fn cyclic(order: u64) -> Self {
        GroupSpec::Cyclic { order }
    }

    pub fn integer_window(halfwidth: i64) -> Self {
        GroupSpec::IntegerWindow { halfwidth }
    }

    pub fn product(orders: Vec<u64>) -> Self {
        GroupSpec::Product { orders }
    }

    pub fn validate(&self) -> Result<()> {
        let carrier = match self {
            GroupSpec::Cyclic { order } => {
                if *order < 1 {
                    return Err(Error::InvalidParameter("cyclic order must be >= 1".into()));
                }
                *order as u128
            }
            GroupSpec::IntegerWindow { halfwidth } => {
                if *halfwidth < 1 {
                    return Err(Error::InvalidParameter("window halfwidth must be >= 1".into()));
                }
                2 * (*halfwidth as u128) + 1
            }
            GroupSpec::Product { orders } => {
                if orders.is_empty() || orders.iter().any(|&n| n < 2) {
                    return Err(Error::InvalidParameter(
                        "product orders must be nonempty and each >= 2".into(),
                    ));
                }
                orders.iter().map(|&n| n as u128).product()
            }
        };
        if carrier > MAX_CARRIER as u128 {
            return Err(Error::SizeOutOfRange { size: carrier as usize, carrier: MAX_CARRIER });
        }
        Ok(())
    }

    /// Number of elements in the carrier.
    pub fn carrier(&self) -> usize {
        match self {
            GroupSpec::Cyclic { order } => *order as usize,
            GroupSpec::IntegerWindow { halfwidth } => 2 * (*halfwidth as usize) + 1,
            GroupSpec::Product { orders } => orders.iter().map(|&n| n as usize).product(),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            GroupSpec::Cyclic { .. } => Element(0),
            GroupSpec::IntegerWindow { halfwidth } => Element(*halfwidth as usize),
            GroupSpec::Product { .. } => Element(0),
        }
    }

    /// Group sum. Cyclic and product coordinates wrap; the integer window
    /// errors when the sum escapes `[-W, W]`.
    pub fn add(&self, a: Element, b: Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        match self {
            GroupSpec::Cyclic { order } => {
                let n = *order as usize;
                Ok(Element((a.0 + b.0) % n))
            }
            GroupSpec::IntegerWindow { halfwidth } => {
                let w = *halfwidth;
                let v = (a.0 as i64 - w) + (b.0 as i64 - w);
                if v.abs() > w {
                    return Err(Error::WindowOverflow { value: v, halfwidth: w });
                }
                Ok(Element((v + w) as usize))
            }
            GroupSpec::Product { orders } => {
                let mut idx = 0usize;
                let mut mult = 1usize;
                let (mut ra, mut rb) = (a.0, b.0);
                for &n in orders {
                    let n = n as usize;
                    let c = (ra % n + rb % n) % n;
                    idx += c * mult;
                    mult *= n;
                    ra /= n;
                    rb /= n;
                }
                Ok(Element(idx))
            }
        }
    }

    /// Group difference `a - b`. Total for cyclic/product; window errors on
    /// escape.
    pub fn sub(&self, a: Element, b: Element) -> Result<Element> {
        self.add(a, self.neg(b)?)
    }

    /// Negation; always stays in the carrier.
    pub fn neg(&self, a: Element) -> Result<Element> {
        self.check_element(a)?;
        match self {
            GroupSpec::Cyclic { order } => {
                let n = *order as usize;
                Ok(Element((n - a.0) % n))
            }
            GroupSpec::IntegerWindow { halfwidth } => {
                Ok(Element(2 * (*halfwidth as usize) - a.0))
            }
            GroupSpec::Product { orders } => {
                let mut idx = 0usize;
                let mut mult = 1usize;
                let mut r = a.0;
                for &n in orders {
                    let n = n as usize;
                    let c = (n - r % n) % n;
                    idx += c * mult;
                    mult *= n;
                    r /= n;
                }
                Ok(Element(idx))
            }
        }
    }

    fn check_element(&self, e: Element) -> Result<()> {
        if e.0 < self.carrier() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(format!("index {}", e.0)))
        }
    }

    /// Canonical element for a human-facing value.
    ///
    /// Cyclic residues and product coordinates are reduced; window values
    /// must already lie in `[-W, W]`.
    pub fn element(&self, value: &ElemValue) -> Result<Element> {
        match (self, value) {
            (GroupSpec::Cyclic { order }, ElemValue::Int(v)) => {
                Ok(Element(v.rem_euclid(*order as i64) as usize))
            }
            (GroupSpec::IntegerWindow { halfwidth }, ElemValue::Int(v)) => {
                if v.abs() > *halfwidth {
                    return Err(Error::WindowOverflow { value: *v, halfwidth: *halfwidth });
                }
                Ok(Element((v + halfwidth) as usize))
            }
            (GroupSpec::Product { orders }, ElemValue::Tuple(coords)) => {
                if coords.len() != orders.len() {
                    return Err(Error::ElementOutOfRange(format!(
                        "tuple arity {} != {}",
                        coords.len(),
                        orders.len()
                    )));
                }
                let mut idx = 0usize;
                let mut mult = 1usize;
                for (&c, &n) in coords.iter().zip(orders) {
                    idx += c.rem_euclid(n as i64) as usize * mult;
                    mult *= n as usize;
                }
                Ok(Element(idx))
            }
            _ => Err(Error::ElementOutOfRange("value shape does not match group".into())),
        }
    }

    pub fn int_element(&self, v: i64) -> Result<Element> {
        self.element(&ElemValue::Int(v))
    }

    /// Human-facing value of a canonical element.
    pub fn value(&self, e: Element) -> ElemValue {
        match self {
            GroupSpec::Cyclic { .. } => ElemValue::Int(e.0 as i64),
            GroupSpec::IntegerWindow { halfwidth } => ElemValue::Int(e.0 as i64 - halfwidth),
            GroupSpec::Product { orders } => {
                let mut coords = Vec::with_capacity(orders.len());
                let mut r = e.0;
                for &n in orders {
                    coords.push((r % n as usize) as i64);
                    r /= n as usize;
                }
                ElemValue::Tuple(coords)
            }
        }
    }

    /// Signed representative in `(-n/2, n/2]` for cyclic groups, the plain
    /// value otherwise. Handy for interval logic and display.
    pub fn signed_value(&self, e: Element) -> ElemValue {
        match self {
            GroupSpec::Cyclic { order } => {
                let n = *order as i64;
                let v = e.0 as i64;
                ElemValue::Int(if 2 * v > n { v - n } else { v })
            }
            _ => self.value(e),
        }
    }

    /// `Some(p)` when the group is cyclic of prime order `p`.
    pub fn prime_order(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic { order } if is_prime(*order) => Some(*order),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Bit-vector plumbing. All sets are `carrier`-bit vectors stored LSB-first in
// u64 words; bits beyond the carrier stay zero.

pub(crate) fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(64).max(1)
}

pub(crate) fn mask_tail(words: &mut [u64], nbits: usize) {
    let excess = words.len() * 64 - nbits;
    if excess > 0 {
        let last = words.len() - 1;
        words[last] &= u64::MAX >> excess;
    }
}

pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// dst = src << k (toward higher indices), bits >= nbits dropped.
pub(crate) fn shl_into(dst: &mut [u64], src: &[u64], k: usize, nbits: usize) {
    let nw = src.len();
    let ws = k / 64;
    let bs = (k % 64) as u32;
    for i in (0..nw).rev() {
        let mut w = 0u64;
        if i >= ws {
            w = src[i - ws] << bs;
            if bs > 0 && i > ws {
                w |= src[i - ws - 1] >> (64 - bs);
            }
        }
        dst[i] = w;
    }
    mask_tail(dst, nbits);
}

/// dst = src >> k (toward lower indices).
pub(crate) fn shr_into(dst: &mut [u64], src: &[u64], k: usize) {
    let nw = src.len();
    let ws = k / 64;
    let bs = (k % 64) as u32;
    for i in 0..nw {
        let mut w = 0u64;
        if i + ws < nw {
            w = src[i + ws] >> bs;
            if bs > 0 && i + ws + 1 < nw {
                w |= src[i + ws + 1] << (64 - bs);
            }
        }
        dst[i] = w;
    }
}

/// dst |= src >> k.
fn or_shr_into(dst: &mut [u64], src: &[u64], k: usize) {
    let nw = src.len();
    let ws = k / 64;
    let bs = (k % 64) as u32;
    for i in 0..nw {
        if i + ws < nw {
            let mut w = src[i + ws] >> bs;
            if bs > 0 && i + ws + 1 < nw {
                w |= src[i + ws + 1] << (64 - bs);
            }
            dst[i] |= w;
        }
    }
}

/// dst = src rotated left by k within an nbits-bit ring.
pub(crate) fn rot_into(dst: &mut [u64], src: &[u64], k: usize, nbits: usize) {
    let k = k % nbits;
    if k == 0 {
        dst.copy_from_slice(src);
        return;
    }
    shl_into(dst, src, k, nbits);
    or_shr_into(dst, src, nbits - k);
}

pub(crate) fn iter_set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

// ---------------------------------------------------------------------------

/// Finite subset of a group: dense bit vector plus cached cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    group: GroupSpec,
    words: Vec<u64>,
    len: usize,
}

impl GSet {
    pub fn empty(group: GroupSpec) -> Result<Self> {
        group.validate()?;
        let nw = word_count(group.carrier());
        Ok(GSet { group, words: vec![0; nw], len: 0 })
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(
        group: GroupSpec,
        elems: I,
    ) -> Result<Self> {
        let mut s = GSet::empty(group)?;
        for e in elems {
            s.group.check_element(e)?;
            s.insert(e);
        }
        Ok(s)
    }

    pub fn from_values(group: GroupSpec, values: &[ElemValue]) -> Result<Self> {
        let mut s = GSet::empty(group)?;
        for v in values {
            let e = s.group.element(v)?;
            s.insert(e);
        }
        Ok(s)
    }

    /// Convenience for scalar groups: build from plain integers.
    pub fn from_ints(group: GroupSpec, values: &[i64]) -> Result<Self> {
        let vals: Vec<ElemValue> = values.iter().map(|&v| ElemValue::Int(v)).collect();
        GSet::from_values(group, &vals)
    }

    fn insert(&mut self, e: Element) {
        let (w, b) = (e.0 / 64, e.0 % 64);
        if self.words[w] & (1 << b) == 0 {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn cardinality(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, e: Element) -> bool {
        e.0 < self.group.carrier() && self.words[e.0 / 64] & (1 << (e.0 % 64)) != 0
    }

    /// Ascending canonical order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        iter_set_bits(&self.words).map(Element)
    }

    /// Sorted-element view, derived from the bit vector on demand.
    pub fn elements(&self) -> Vec<Element> {
        self.iter().collect()
    }

    pub fn values(&self) -> Vec<ElemValue> {
        self.iter().map(|e| self.group.value(e)).collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(group: GroupSpec, words: Vec<u64>) -> Self {
        let len = popcount(&words);
        GSet { group, words, len }
    }

    /// Set translate `A + d`. Errors when a member escapes an integer window.
    pub fn translate(&self, d: Element) -> Result<GSet> {
        self.group.check_element(d)?;
        let nbits = self.group.carrier();
        let mut out = vec![0u64; self.words.len()];
        match &self.group {
            GroupSpec::Cyclic { .. } => rot_into(&mut out, &self.words, d.0, nbits),
            GroupSpec::IntegerWindow { halfwidth } => {
                let s = d.0 as i64 - halfwidth;
                if s >= 0 {
                    shl_into(&mut out, &self.words, s as usize, nbits);
                } else {
                    shr_into(&mut out, &self.words, (-s) as usize);
                }
                if popcount(&out) != self.len {
                    // some member left the window; report one of them
                    for e in self.iter() {
                        let v = (e.0 as i64 - halfwidth) + s;
                        if v.abs() > *halfwidth {
                            return Err(Error::WindowOverflow { value: v, halfwidth: *halfwidth });
                        }
                    }
                }
            }
            GroupSpec::Product { .. } => {
                for e in self.iter() {
                    let t = self.group.add(e, d)?;
                    out[t.0 / 64] |= 1 << (t.0 % 64);
                }
            }
        }
        Ok(GSet::from_words(self.group.clone(), out))
    }

    pub fn intersect(&self, other: &GSet) -> Result<GSet> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let words: Vec<u64> =
            self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(GSet::from_words(self.group.clone(), words))
    }

    pub fn union(&self, other: &GSet) -> Result<GSet> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let words: Vec<u64> =
            self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Ok(GSet::from_words(self.group.clone(), words))
    }

    /// The set `-A`.
    pub fn negated(&self) -> GSet {
        let mut out = vec![0u64; self.words.len()];
        for e in self.iter() {
            let n = self.group.neg(e).expect("carrier element");
            out[n.0 / 64] |= 1 << (n.0 % 64);
        }
        GSet::from_words(self.group.clone(), out)
    }

    /// True iff `0 in D` and `D = -D`.
    pub fn is_symmetric_with_zero(&self) -> bool {
        self.contains(self.group.zero()) && self.negated().words == self.words
    }

    /// `out = self AND (base + d)`, computed without materializing the
    /// translate; bits that would escape an integer window are dropped,
    /// which is exact because `self` lies inside the carrier.
    pub(crate) fn and_translate_into(
        &self,
        base: &GSet,
        d: Element,
        scratch: &mut [u64],
        out: &mut [u64],
    ) {
        and_translate_words(&self.group, &self.words, base, d, scratch, out);
    }
}

/// `out = cur AND (base + d)` on raw word slices, all over `group`.
pub(crate) fn and_translate_words(
    group: &GroupSpec,
    cur: &[u64],
    base: &GSet,
    d: Element,
    scratch: &mut [u64],
    out: &mut [u64],
) {
    let nbits = group.carrier();
    match group {
        GroupSpec::Cyclic { .. } => {
            rot_into(scratch, &base.words, d.0, nbits);
            for (o, (a, s)) in out.iter_mut().zip(cur.iter().zip(scratch.iter())) {
                *o = a & s;
            }
        }
        GroupSpec::IntegerWindow { halfwidth } => {
            let s = d.0 as i64 - halfwidth;
            if s >= 0 {
                shl_into(scratch, &base.words, s as usize, nbits);
            } else {
                shr_into(scratch, &base.words, (-s) as usize);
            }
            for (o, (a, sb)) in out.iter_mut().zip(cur.iter().zip(scratch.iter())) {
                *o = a & sb;
            }
        }
        GroupSpec::Product { .. } => {
            out.fill(0);
            for e in iter_set_bits(cur).map(Element) {
                let back = group.sub(e, d).expect("carrier element");
                if base.contains(back) {
                    out[e.0 / 64] |= 1 << (e.0 % 64);
                }
            }
        }
    }
}

/// Centered interval rearrangement: the interval of the given size centered
/// at 0, with the extra element on the right for even sizes.
pub fn centered_interval(g: &GroupSpec, size: usize) -> Result<GSet> {
    g.validate()?;
    let carrier = g.carrier();
    if size < 1 || size > carrier {
        return Err(Error::SizeOutOfRange { size, carrier });
    }
    let (lo, hi) = if size % 2 == 0 {
        let m = size as i64 / 2;
        (-(m - 1), m)
    } else {
        let m = size as i64 / 2;
        (-m, m)
    };
    match g {
        GroupSpec::Cyclic { .. } | GroupSpec::IntegerWindow { .. } => {
            let vals: Vec<ElemValue> = (lo..=hi).map(ElemValue::Int).collect();
            GSet::from_values(g.clone(), &vals)
        }
        GroupSpec::Product { .. } => Err(Error::InvalidParameter(
            "centered interval requires a cyclic or integer-window group".into(),
        )),
    }
}

/// All sets `D` with `0 in D = -D`, in a fixed deterministic order.
///
/// The negation orbits `{x, -x}` are toggled independently; for a cyclic
/// group of odd prime order `p` this yields exactly `2^((p-1)/2)` sets.
pub fn enumerate_symmetric_sets(
    g: &GroupSpec,
    max_order: u64,
) -> Result<impl Iterator<Item = GSet>> {
    g.validate()?;
    let carrier = g.carrier();
    if carrier as u64 > max_order {
        return Err(Error::CapExceeded(format!(
            "carrier {carrier} exceeds symmetric-set enumeration cap {max_order}"
        )));
    }
    // orbit representatives: self-inverse elements first, then {x, -x} pairs
    let mut orbits: Vec<(Element, Element)> = Vec::new();
    let zero = g.zero();
    for i in 0..carrier {
        let e = Element(i);
        if e == zero {
            continue;
        }
        let ne = g.neg(e)?;
        if ne == e {
            orbits.push((e, e));
        } else if e.0 < ne.0 {
            orbits.push((e, ne));
        }
    }
    if orbits.len() >= 48 {
        return Err(Error::CapExceeded(format!("{} negation orbits", orbits.len())));
    }
    let total: u64 = 1 << orbits.len();
    let g = g.clone();
    let mut mask = 0u64;
    Ok(std::iter::from_fn(move || {
        if mask >= total {
            return None;
        }
        let mut elems = vec![zero];
        for (bit, &(a, b)) in orbits.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                elems.push(a);
                if b != a {
                    elems.push(b);
                }
            }
        }
        mask += 1;
        Some(GSet::from_elements(g.clone(), elems).expect("orbit elements are in the carrier"))
    }))
}

/// Trial-division primality; carriers here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u64) -> GroupSpec {
        GroupSpec::cyclic(n)
    }

    #[test]
    fn add_cyclic_wraps() {
        let g = c(7);
        let s = g.add(g.int_element(5).unwrap(), g.int_element(4).unwrap()).unwrap();
        assert_eq!(g.value(s), ElemValue::Int(2));
    }

    #[test]
    fn add_window_and_overflow() {
        let g = GroupSpec::integer_window(10);
        let s = g.add(g.int_element(3).unwrap(), g.int_element(-5).unwrap()).unwrap();
        assert_eq!(g.value(s), ElemValue::Int(-2));
        let e = g.add(g.int_element(7).unwrap(), g.int_element(6).unwrap());
        assert!(matches!(e, Err(Error::WindowOverflow { value: 13, .. })));
    }

    #[test]
    fn add_product() {
        let g = GroupSpec::product(vec![2, 3]);
        let a = g.element(&ElemValue::Tuple(vec![1, 2])).unwrap();
        let s = g.add(a, a).unwrap();
        assert_eq!(g.value(s), ElemValue::Tuple(vec![0, 1]));
    }

    #[test]
    fn translate_cyclic() {
        let a = GSet::from_ints(c(5), &[0, 1]).unwrap();
        let t = a.translate(a.group().int_element(4).unwrap()).unwrap();
        assert_eq!(t, GSet::from_ints(c(5), &[4, 0]).unwrap());
        let id = a.translate(a.group().int_element(0).unwrap()).unwrap();
        assert_eq!(id, a);
    }

    #[test]
    fn translate_window_overflow() {
        let g = GroupSpec::integer_window(3);
        let a = GSet::from_ints(g.clone(), &[2, 3]).unwrap();
        let e = a.translate(g.int_element(1).unwrap());
        assert!(matches!(e, Err(Error::WindowOverflow { value: 4, .. })));
    }

    #[test]
    fn intersect_basic() {
        let g = GroupSpec::integer_window(5);
        let a = GSet::from_ints(g.clone(), &[0, 1, 3]).unwrap();
        let b = GSet::from_ints(g.clone(), &[1, 3, 4]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), GSet::from_ints(g, &[1, 3]).unwrap());
        let aa = a.intersect(&a).unwrap();
        assert_eq!(aa, a);
    }

    #[test]
    fn intersect_group_mismatch() {
        let a = GSet::from_ints(c(5), &[0]).unwrap();
        let b = GSet::from_ints(c(7), &[0]).unwrap();
        assert_eq!(a.intersect(&b), Err(Error::GroupMismatch));
    }

    #[test]
    fn centered_interval_shapes() {
        let g = GroupSpec::integer_window(8);
        let s4 = centered_interval(&g, 4).unwrap();
        assert_eq!(s4, GSet::from_ints(g.clone(), &[-1, 0, 1, 2]).unwrap());
        let s5 = centered_interval(&g, 5).unwrap();
        assert_eq!(s5, GSet::from_ints(g.clone(), &[-2, -1, 0, 1, 2]).unwrap());
        let s1 = centered_interval(&g, 1).unwrap();
        assert_eq!(s1, GSet::from_ints(g, &[0]).unwrap());
        assert!(centered_interval(&c(5), 6).is_err());
    }

    #[test]
    fn centered_interval_sizes_and_symmetry() {
        let g = c(11);
        for size in 1..=11 {
            let s = centered_interval(&g, size).unwrap();
            assert_eq!(s.cardinality(), size);
            if size % 2 == 1 {
                assert!(s.is_symmetric_with_zero());
            }
        }
    }

    #[test]
    fn symmetry_predicate() {
        assert!(GSet::from_ints(c(7), &[0, 1, 6]).unwrap().is_symmetric_with_zero());
        assert!(!GSet::from_ints(c(7), &[0, 1]).unwrap().is_symmetric_with_zero());
        // in C_10 the element 5 is its own negation
        let all_but_5 = GSet::from_ints(c(10), &[0, 1, 2, 3, 4, 6, 7, 8, 9]).unwrap();
        assert!(all_but_5.is_symmetric_with_zero());
    }

    #[test]
    fn symmetric_enumeration_counts() {
        let sets: Vec<GSet> = enumerate_symmetric_sets(&c(5), 31).unwrap().collect();
        assert_eq!(sets.len(), 4);
        let expected: Vec<GSet> = [vec![0], vec![0, 1, 4], vec![0, 2, 3], vec![0, 1, 2, 3, 4]]
            .iter()
            .map(|v| GSet::from_ints(c(5), v).unwrap())
            .collect();
        assert_eq!(sets, expected);
        assert_eq!(enumerate_symmetric_sets(&c(3), 31).unwrap().count(), 2);
        assert_eq!(enumerate_symmetric_sets(&c(7), 31).unwrap().count(), 8);
        for p in [5u64, 7, 11, 13] {
            let n = enumerate_symmetric_sets(&c(p), 31).unwrap().count();
            assert_eq!(n, 1 << ((p - 1) / 2));
        }
        assert!(enumerate_symmetric_sets(&c(37), 31).is_err());
        for s in enumerate_symmetric_sets(&c(12), 31).unwrap() {
            assert!(s.is_symmetric_with_zero());
        }
        assert_eq!(enumerate_symmetric_sets(&c(12), 31).unwrap().count(), 1 << 6);
    }

    #[test]
    fn symmetric_enumeration_product() {
        let g = GroupSpec::product(vec![2, 4]);
        let sets: Vec<GSet> = enumerate_symmetric_sets(&g, 31).unwrap().collect();
        assert_eq!(sets.len(), 32);
        assert!(sets.iter().all(|s| s.is_symmetric_with_zero()));
    }

    #[test]
    fn translation_preserves_cardinality() {
        let g = c(23);
        let a = GSet::from_ints(g.clone(), &[0, 3, 7, 8, 15]).unwrap();
        for d in 0..23 {
            let t = a.translate(g.int_element(d).unwrap()).unwrap();
            assert_eq!(t.cardinality(), a.cardinality());
        }
    }

    #[test]
    fn rotation_matches_elementwise() {
        // multi-word carrier to exercise the word-shift paths
        let g = c(131);
        let a = GSet::from_ints(g.clone(), &[0, 1, 2, 63, 64, 65, 100, 130]).unwrap();
        for d in [1i64, 63, 64, 65, 66, 127, 130] {
            let de = g.int_element(d).unwrap();
            let fast = a.translate(de).unwrap();
            let slow = GSet::from_elements(
                g.clone(),
                a.iter().map(|e| g.add(e, de).unwrap()),
            )
            .unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(13) && is_prime(809));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
        assert_eq!(next_prime(51), 53);
        assert_eq!(next_prime(800), 809);
    }
}
