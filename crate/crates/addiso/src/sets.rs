//! Set algebra over a fixed finite abelian group: Minkowski sums, stabilizers,
//! boundaries, arithmetic-progression structure, and coset decompositions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Element, Group, Subgroup};
use crate::quotient::QuotientMap;

/// A subset of a group, held as a membership bitmap over element indices.
#[derive(Clone)]
pub struct GroupSet {
    group: Group,
    bits: Vec<u64>,
}

fn word_count(order: u32) -> usize {
    ((order as usize) + 63) / 64
}

impl GroupSet {
    pub fn empty(group: &Group) -> GroupSet {
        GroupSet { group: group.clone(), bits: vec![0; word_count(group.order())] }
    }

    pub fn full(group: &Group) -> GroupSet {
        let mut s = GroupSet::empty(group);
        for e in 0..group.order() {
            s.insert(Element(e));
        }
        s
    }

    pub fn singleton(group: &Group, e: Element) -> GroupSet {
        let mut s = GroupSet::empty(group);
        s.insert(e);
        s
    }

    pub fn from_indices(group: &Group, indices: impl IntoIterator<Item = u32>) -> Result<GroupSet> {
        let mut s = GroupSet::empty(group);
        for i in indices {
            s.insert(group.element(i)?);
        }
        Ok(s)
    }

    pub fn from_elements(group: &Group, elems: impl IntoIterator<Item = Element>) -> GroupSet {
        let mut s = GroupSet::empty(group);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn insert(&mut self, e: Element) {
        debug_assert!(e.0 < self.group.order());
        self.bits[(e.0 / 64) as usize] |= 1u64 << (e.0 % 64);
    }

    pub fn remove(&mut self, e: Element) {
        debug_assert!(e.0 < self.group.order());
        self.bits[(e.0 / 64) as usize] &= !(1u64 << (e.0 % 64));
    }

    pub fn contains(&self, e: Element) -> bool {
        debug_assert!(e.0 < self.group.order());
        self.bits[(e.0 / 64) as usize] >> (e.0 % 64) & 1 == 1
    }

    pub fn len(&self) -> u32 {
        self.bits.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| WordBits {
            word,
            base: (w * 64) as u32,
        })
    }

    pub fn indices(&self) -> Vec<u32> {
        self.iter().map(|e| e.0).collect()
    }

    pub fn min_element(&self) -> Option<Element> {
        self.iter().next()
    }

    fn assert_same_group(&self, other: &GroupSet) {
        assert!(
            self.group == other.group,
            "sets from different groups: {} vs {}",
            self.group,
            other.group
        );
    }

    pub fn union(&self, other: &GroupSet) -> GroupSet {
        self.assert_same_group(other);
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &GroupSet) -> GroupSet {
        self.assert_same_group(other);
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &GroupSet) -> GroupSet {
        self.assert_same_group(other);
        self.zip_words(other, |a, b| a & !b)
    }

    fn zip_words(&self, other: &GroupSet, f: impl Fn(u64, u64) -> u64) -> GroupSet {
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(&a, &b)| f(a, b))
            .collect();
        GroupSet { group: self.group.clone(), bits }
    }

    pub fn complement(&self) -> GroupSet {
        let n = self.group.order();
        let mut bits: Vec<u64> = self.bits.iter().map(|&w| !w).collect();
        let tail = n % 64;
        if tail != 0 {
            let last = bits.len() - 1;
            bits[last] &= (1u64 << tail) - 1;
        }
        GroupSet { group: self.group.clone(), bits }
    }

    pub fn is_subset(&self, other: &GroupSet) -> bool {
        self.assert_same_group(other);
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &GroupSet) -> bool {
        self.assert_same_group(other);
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & b == 0)
    }

    pub fn translate(&self, d: Element) -> GroupSet {
        let mut out = GroupSet::empty(&self.group);
        for a in self.iter() {
            out.insert(Element(self.group.add_idx(a.0, d.0)));
        }
        out
    }

    pub fn negate(&self) -> GroupSet {
        let mut out = GroupSet::empty(&self.group);
        for a in self.iter() {
            out.insert(Element(self.group.neg_idx(a.0)));
        }
        out
    }

    /// Total order by cardinality, then by bitmap value; used everywhere a
    /// deterministic enumeration or tie-break is needed.
    pub fn canonical_cmp(&self, other: &GroupSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.bitmap_cmp(other))
    }

    /// Compares bitmaps as integers (element 0 least significant).
    pub fn bitmap_cmp(&self, other: &GroupSet) -> Ordering {
        for i in (0..self.bits.len()).rev() {
            match self.bits[i].cmp(&other.bits[i]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn to_mask64(&self) -> u64 {
        debug_assert!(self.group.order() <= 64);
        self.bits[0]
    }

    pub(crate) fn from_mask64(group: &Group, mask: u64) -> GroupSet {
        debug_assert!(group.order() <= 64);
        debug_assert!(group.order() == 64 || mask >> group.order() == 0);
        GroupSet { group: group.clone(), bits: vec![mask] }
    }

    /// Minkowski sum `{a + b : a in A, b in B}`.
    pub fn sumset(&self, other: &GroupSet) -> Result<GroupSet> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.name().to_string(),
                right: other.group.name().to_string(),
            });
        }
        let n = self.group.order();
        let mut out = GroupSet::empty(&self.group);
        if n <= 64 && self.group.factor_orders().len() == 1 {
            let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let a = self.bits[0];
            let mut acc = 0u64;
            for b in other.iter() {
                let d = b.0;
                acc |= if d == 0 { a } else { ((a << d) | (a >> (n - d))) & full };
            }
            out.bits[0] = acc;
            return Ok(out);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for b in small.iter() {
            for a in large.iter() {
                out.insert(Element(self.group.add_idx(a.0, b.0)));
            }
        }
        Ok(out)
    }

    /// The stabilizer `{x : A + x = A}`.
    pub fn period(&self) -> Result<Subgroup> {
        let m = self.min_element().ok_or(Error::EmptySet)?;
        let g = self.group.clone();
        let mut stab = GroupSet::empty(&g);
        let candidates = self.translate(g.neg(m));
        'cand: for d in candidates.iter() {
            for a in self.iter() {
                if !self.contains(Element(g.add_idx(a.0, d.0))) {
                    continue 'cand;
                }
            }
            stab.insert(d);
        }
        let sub = g.subgroup_generated(&stab);
        debug_assert_eq!(sub.members, stab);
        Ok(sub)
    }

    /// True iff the stabilizer is trivial.
    pub fn is_aperiodic(&self) -> Result<bool> {
        let m = self.min_element().ok_or(Error::EmptySet)?;
        let g = &self.group;
        let candidates = self.translate(g.neg(m));
        'cand: for d in candidates.iter() {
            if d.0 == 0 {
                continue;
            }
            for a in self.iter() {
                if !self.contains(Element(g.add_idx(a.0, d.0))) {
                    continue 'cand;
                }
            }
            return Ok(false);
        }
        Ok(true)
    }

    /// All differences realizing the set as an arithmetic progression of its
    /// full cardinality with distinct terms. Singletons admit every difference;
    /// an empty result means the set is not a progression.
    pub fn ap_differences(&self) -> Result<GroupSet> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        let g = self.group.clone();
        let k = self.len();
        if k == 1 {
            return Ok(GroupSet::full(&g));
        }
        let mut out = GroupSet::empty(&g);
        for d in 1..g.order() {
            let d = Element(d);
            if g.element_order(d) < k {
                continue;
            }
            let mut starts = self.clone();
            for a in self.iter() {
                let pred = Element(g.add_idx(a.0, g.neg_idx(d.0)));
                if self.contains(pred) {
                    starts.remove(a);
                }
            }
            match starts.len() {
                0 => {
                    if g.element_order(d) == k {
                        out.insert(d);
                    }
                }
                1 => {
                    let mut x = starts.min_element().unwrap();
                    let mut ok = true;
                    for _ in 1..k {
                        x = g.add(x, d);
                        if !self.contains(x) {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        out.insert(d);
                    }
                }
                _ => {}
            }
        }
        Ok(out)
    }

    /// Splits the set into its nonempty intersections with cosets of `h`,
    /// keyed by the minimum element index of each coset, in that order.
    pub fn h_decomposition(&self, h: &Subgroup) -> HDecomposition {
        let g = self.group.clone();
        let mut seen = GroupSet::empty(&g);
        let mut parts: Vec<(Element, GroupSet)> = Vec::new();
        for a in self.iter() {
            if seen.contains(a) {
                continue;
            }
            let coset = h.members.translate(a);
            let trace = self.intersection(&coset);
            let rep = coset.min_element().unwrap();
            seen = seen.union(&coset);
            parts.push((rep, trace));
        }
        parts.sort_by_key(|(rep, _)| rep.0);
        HDecomposition { subgroup: h.clone(), parts }
    }

    /// A coset representative `x` such that the set minus the coset `x + H` is
    /// `H`-periodic, if one exists. An `H`-periodic set (and any set under the
    /// trivial subgroup) yields the canonical witness 0.
    pub fn quasi_periodic_witness(&self, h: &Subgroup) -> Option<Element> {
        let dec = self.h_decomposition(h);
        let hsize = h.order();
        let mut partial: Option<Element> = None;
        for (rep, trace) in &dec.parts {
            if trace.len() < hsize {
                if partial.is_some() {
                    return None;
                }
                partial = Some(*rep);
            }
        }
        Some(partial.unwrap_or(Element(0)))
    }

    /// Projects to the quotient by `h` and collects progression differences there.
    pub fn modular_progression_differences(
        &self,
        h: &Subgroup,
    ) -> Result<(QuotientMap, GroupSet)> {
        let map = QuotientMap::new(&self.group, h)?;
        let diffs = self.modular_progression_differences_with(&map)?;
        Ok((map, diffs))
    }

    pub fn modular_progression_differences_with(&self, map: &QuotientMap) -> Result<GroupSet> {
        map.project_set(self).ap_differences()
    }

    /// All `c` with exactly one representation `c = a + b`, `a` in `self`, `b` in `other`.
    pub fn uniquely_representable(&self, other: &GroupSet) -> Result<GroupSet> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.name().to_string(),
                right: other.group.name().to_string(),
            });
        }
        let g = &self.group;
        let mut counts = vec![0u32; g.order() as usize];
        for a in self.iter() {
            for b in other.iter() {
                counts[g.add_idx(a.0, b.0) as usize] += 1;
            }
        }
        let mut out = GroupSet::empty(g);
        for (i, &c) in counts.iter().enumerate() {
            if c == 1 {
                out.insert(Element(i as u32));
            }
        }
        Ok(out)
    }
}

struct WordBits {
    word: u64,
    base: u32,
}

impl Iterator for WordBits {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.word == 0 {
            return None;
        }
        let t = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(Element(self.base + t))
    }
}

impl PartialEq for GroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.bits == other.bits
    }
}

impl Eq for GroupSet {}

impl std::hash::Hash for GroupSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Display for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.group.format_element(e))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊂{}", self, self.group)
    }
}

impl Serialize for GroupSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A set split along the cosets of a subgroup.
#[derive(Clone, Debug)]
pub struct HDecomposition {
    pub subgroup: Subgroup,
    pub parts: Vec<(Element, GroupSet)>,
}

impl HDecomposition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Parts whose trace fills the whole coset.
    pub fn full_part_count(&self) -> usize {
        let h = self.subgroup.order();
        self.parts.iter().filter(|(_, t)| t.len() == h).count()
    }

    pub fn partial_part_count(&self) -> usize {
        self.parts.len() - self.full_part_count()
    }

    pub fn is_periodic_decomposition(&self) -> bool {
        self.partial_part_count() == 0
    }

    /// Rebuilds the decomposed set.
    pub fn union_all(&self) -> GroupSet {
        let g = self.subgroup.group();
        let mut out = GroupSet::empty(g);
        for (_, t) in &self.parts {
            out = out.union(t);
        }
        out
    }
}

/// `(X + S) \ X`; requires `0 ∈ S` so that `X ⊆ X + S`.
pub fn boundary(s: &GroupSet, x: &GroupSet) -> Result<GroupSet> {
    if !s.contains(s.group().zero()) {
        return Err(Error::ZeroNotInSet);
    }
    Ok(x.sumset(s)?.difference(x))
}

/// `G \ (X + S)`.
pub fn outside(s: &GroupSet, x: &GroupSet) -> Result<GroupSet> {
    Ok(x.sumset(s)?.complement())
}

/// `(X^S)^{-S}`, the largest set with the same sum neighborhood as `X`.
///
/// The result `Y` always satisfies `X ⊆ Y` and `Y + S == X + S`; both are
/// re-checked on every call as a bug trap.
pub fn lee_double_dual(s: &GroupSet, x: &GroupSet) -> Result<GroupSet> {
    let xs = outside(s, x)?;
    let y = outside(&s.negate(), &xs)?;
    if !x.is_subset(&y) || y.sumset(s)? != x.sumset(s)? {
        return Err(Error::Internal(format!(
            "double dual violated its contract for S={} X={}",
            s, x
        )));
    }
    Ok(y)
}
