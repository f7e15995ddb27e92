//! Finite abelian groups given as explicit products of cyclic factors.
//!
//! Elements are dense indices in `[0, order)` under mixed-radix encoding with
//! the last factor varying fastest, so bitmaps, reports, and set literals are
//! bit-exact reproducible across runs.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sets::GroupSet;

/// Largest group order accepted by `Group::new`.
pub const DEFAULT_MAX_ORDER: u64 = 4096;

/// Dense add table is materialized only below this order.
const ADD_TABLE_MAX: u32 = 1024;

#[derive(Debug)]
struct GroupInner {
    orders: Vec<u32>,
    order: u32,
    strides: Vec<u32>,
    add_table: Option<Vec<u32>>,
    neg_table: Vec<u32>,
    elem_order: Vec<u32>,
    name: String,
}

/// A finite abelian group `Z_{n_1} x ... x Z_{n_k}`, cheaply clonable.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupInner>,
}

/// An element of a `Group`, stored as its canonical index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Element(pub(crate) u32);

impl Element {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({})", self.inner.name)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.name)
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.orders == other.inner.orders
    }
}

impl Eq for Group {}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.orders.hash(state);
    }
}

impl Group {
    /// Builds the group with the given cyclic factor orders.
    pub fn new(orders: &[u32]) -> Result<Group> {
        Group::with_limit(orders, DEFAULT_MAX_ORDER)
    }

    /// Like `new` but with an explicit order cap.
    pub fn with_limit(orders: &[u32], limit: u64) -> Result<Group> {
        if orders.is_empty() {
            return Err(Error::EmptyFactors);
        }
        let mut product: u64 = 1;
        for &m in orders {
            if m < 2 {
                return Err(Error::BadFactor(m));
            }
            product *= m as u64;
            if product > limit {
                return Err(Error::OrderLimit { order: product, limit });
            }
        }
        Ok(Group::build(orders.to_vec()))
    }

    /// The order-1 group, produced only as a quotient by the full group.
    pub(crate) fn trivial() -> Group {
        Group::build(Vec::new())
    }

    fn build(orders: Vec<u32>) -> Group {
        let order: u32 = orders.iter().product();
        let k = orders.len();
        let mut strides = vec![1u32; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let name = if orders.is_empty() {
            "Z1".to_string()
        } else {
            let parts: Vec<String> = orders.iter().map(|m| format!("Z{m}")).collect();
            parts.join("x")
        };

        let mut neg_table = vec![0u32; order as usize];
        let mut elem_order = vec![1u32; order as usize];
        for e in 0..order {
            let mut neg = 0u32;
            let mut ord = 1u32;
            let mut rem = e;
            for i in 0..k {
                let c = rem / strides[i];
                rem %= strides[i];
                if c != 0 {
                    neg += (orders[i] - c) * strides[i];
                    ord = lcm(ord, orders[i] / gcd(orders[i], c));
                }
            }
            neg_table[e as usize] = neg;
            elem_order[e as usize] = ord;
        }

        let add_table = if order <= ADD_TABLE_MAX {
            let n = order as usize;
            let mut t = vec![0u32; n * n];
            for a in 0..order {
                for b in 0..order {
                    t[(a as usize) * n + b as usize] =
                        add_coords(&orders, &strides, a, b);
                }
            }
            Some(t)
        } else {
            None
        };

        Group {
            inner: Arc::new(GroupInner {
                orders,
                order,
                strides,
                add_table,
                neg_table,
                elem_order,
                name,
            }),
        }
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn factor_orders(&self) -> &[u32] {
        &self.inner.orders
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn zero(&self) -> Element {
        Element(0)
    }

    /// Validates an index into an element handle.
    pub fn element(&self, index: u32) -> Result<Element> {
        if index < self.inner.order {
            Ok(Element(index))
        } else {
            Err(Error::ElementRange { index, order: self.inner.order })
        }
    }

    /// Builds an element from per-factor residues; rejects out-of-range coordinates.
    pub fn element_from_coords(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.inner.orders.len() {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                self.inner.orders.len(),
                coords.len()
            )));
        }
        let mut idx = 0u32;
        for (i, &c) in coords.iter().enumerate() {
            let m = self.inner.orders[i];
            if c < 0 || c >= m as i64 {
                return Err(Error::CoordRange { value: c, modulus: m });
            }
            idx += (c as u32) * self.inner.strides[i];
        }
        Ok(Element(idx))
    }

    pub fn coords(&self, e: Element) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.inner.orders.len());
        let mut rem = e.0;
        for &s in &self.inner.strides {
            out.push(rem / s);
            rem %= s;
        }
        out
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(self.add_idx(a.0, b.0))
    }

    pub fn neg(&self, a: Element) -> Element {
        Element(self.neg_idx(a.0))
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        Element(self.add_idx(a.0, self.neg_idx(b.0)))
    }

    /// Order of the cyclic subgroup generated by `a`.
    pub fn element_order(&self, a: Element) -> u32 {
        self.inner.elem_order[a.0 as usize]
    }

    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.inner.order && b < self.inner.order);
        match &self.inner.add_table {
            Some(t) => t[(a as usize) * (self.inner.order as usize) + b as usize],
            None => add_coords(&self.inner.orders, &self.inner.strides, a, b),
        }
    }

    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        debug_assert!(a < self.inner.order);
        self.inner.neg_table[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.inner.order).map(Element)
    }

    /// Renders an element as a bare residue or a coordinate tuple.
    pub fn format_element(&self, e: Element) -> String {
        if self.inner.orders.len() <= 1 {
            format!("{}", e.0)
        } else {
            let coords = self.coords(e);
            let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    /// Smallest subgroup containing the given set; the empty set generates `{0}`.
    pub fn subgroup_generated(&self, a: &GroupSet) -> Subgroup {
        debug_assert_eq!(*self, *a.group());
        let mut members = GroupSet::singleton(self, self.zero());
        let mut generators = Vec::new();
        for g in a.iter() {
            if members.contains(g) {
                continue;
            }
            generators.push(g);
            let ord = self.element_order(g);
            let base = members.clone();
            let mut shift = self.zero();
            for _ in 1..ord {
                shift = self.add(shift, g);
                members = members.union(&base.translate(shift));
            }
        }
        Subgroup { members, generators }
    }

    pub fn subgroup_from_gens(&self, gens: &[Element]) -> Subgroup {
        let set = GroupSet::from_elements(self, gens.iter().copied());
        self.subgroup_generated(&set)
    }

    pub(crate) fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: GroupSet::singleton(self, self.zero()),
            generators: Vec::new(),
        }
    }

    pub(crate) fn full_subgroup(&self) -> Subgroup {
        self.subgroup_generated(&GroupSet::full(self))
    }

    /// Every subgroup exactly once, sorted by cardinality then canonical set order.
    ///
    /// Closure of generated subgroups with dedup; fine for the small orders the
    /// sweeps use.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![self.trivial_subgroup()];
        let mut frontier: Vec<usize> = vec![0];
        while let Some(i) = frontier.pop() {
            let h = found[i].clone();
            for g in self.elements() {
                if h.members.contains(g) {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.push(g);
                let ext = self.subgroup_from_gens(&gens);
                if !found.iter().any(|s| s.members == ext.members) {
                    found.push(ext);
                    frontier.push(found.len() - 1);
                }
            }
        }
        found.sort_by(|a, b| a.members.canonical_cmp(&b.members));
        found
    }
}

fn add_coords(orders: &[u32], strides: &[u32], a: u32, b: u32) -> u32 {
    let mut res = 0u32;
    let mut ra = a;
    let mut rb = b;
    for i in 0..orders.len() {
        let s = strides[i];
        let ca = ra / s;
        ra %= s;
        let cb = rb / s;
        rb %= s;
        let mut c = ca + cb;
        if c >= orders[i] {
            c -= orders[i];
        }
        res += c * s;
    }
    res
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// A subgroup, carried as its member set plus a small generating witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub members: GroupSet,
    pub generators: Vec<Element>,
}

impl Subgroup {
    pub fn order(&self) -> u32 {
        self.members.len()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e)
    }

    pub fn group(&self) -> &Group {
        self.members.group()
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.group().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Full-scan subgroup check: zero, closure, Lagrange.
    pub fn verify(&self) -> Result<()> {
        let g = self.group().clone();
        if !self.members.contains(g.zero()) {
            return Err(Error::NotASubgroup);
        }
        for a in self.members.iter() {
            if !self.members.contains(g.neg(a)) {
                return Err(Error::NotASubgroup);
            }
            for b in self.members.iter() {
                if !self.members.contains(g.add(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        if g.order() % self.order() != 0 {
            return Err(Error::NotASubgroup);
        }
        Ok(())
    }
}

impl serde::Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(ser)
    }
}

/// One representative per isomorphism class of abelian group of each order in
/// `2..=n_max`, in deterministic order.
pub fn abelian_group_catalog(n_max: u32) -> Vec<Group> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let factored = prime_factorization(n);
        let partition_sets: Vec<Vec<Vec<u32>>> = factored
            .iter()
            .map(|&(_, e)| partitions(e))
            .collect();
        let mut choice = vec![0usize; factored.len()];
        loop {
            let max_len = factored
                .iter()
                .enumerate()
                .map(|(i, _)| partition_sets[i][choice[i]].len())
                .max()
                .unwrap_or(0);
            let mut factors = Vec::new();
            for j in 0..max_len {
                let mut d = 1u64;
                for (i, &(p, _)) in factored.iter().enumerate() {
                    let part = &partition_sets[i][choice[i]];
                    if j < part.len() {
                        d *= (p as u64).pow(part[j]);
                    }
                }
                factors.push(d as u32);
            }
            factors.reverse();
            factors.retain(|&d| d > 1);
            classes.push(factors);

            let mut i = 0;
            loop {
                if i == choice.len() {
                    break;
                }
                choice[i] += 1;
                if choice[i] < partition_sets[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
        classes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for factors in classes {
            out.push(Group::new(&factors).expect("catalog entries fit the default limit"));
        }
    }
    out
}

fn prime_factorization(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `e` as descending part lists.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = rem.min(max);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(rem - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}
