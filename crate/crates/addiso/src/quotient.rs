//! Quotients of a group by a subgroup, with explicit projection and section
//! tables derived from a Smith normal form computation.

use crate::error::{Error, Result};
use crate::group::{Element, Group, Subgroup};
use crate::sets::GroupSet;

/// The canonical morphism onto a quotient group, tabulated in both directions.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Group,
    kernel: Subgroup,
    quotient: Group,
    project: Vec<u32>,
    section: Vec<u32>,
}

impl QuotientMap {
    /// Builds the quotient of `g` by `h` along with projection tables.
    pub fn new(g: &Group, h: &Subgroup) -> Result<QuotientMap> {
        assert_eq!(*g, *h.group(), "subgroup belongs to a different group");
        h.verify()?;
        let regen = g.subgroup_from_gens(&h.generators);
        if regen.members != h.members {
            return Err(Error::NotASubgroup);
        }

        let k = g.factor_orders().len();
        let gens = &h.generators;
        let cols = k + gens.len();
        let mut a = vec![vec![0i64; cols]; k];
        for i in 0..k {
            a[i][i] = g.factor_orders()[i] as i64;
        }
        for (j, &gen) in gens.iter().enumerate() {
            let coords = g.coords(gen);
            for i in 0..k {
                a[i][k + j] = coords[i] as i64;
            }
        }
        let (diag, u) = smith_normal_form(&mut a);

        let kept: Vec<(usize, u32)> = diag
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= 2)
            .map(|(i, &d)| (i, d as u32))
            .collect();
        let quotient = if kept.is_empty() {
            Group::trivial()
        } else {
            let factors: Vec<u32> = kept.iter().map(|&(_, d)| d).collect();
            Group::with_limit(&factors, g.order() as u64)?
        };

        let qn = quotient.order();
        let n = g.order();
        if (n / h.order()) != qn {
            return Err(Error::Internal(format!(
                "quotient order {} does not match index {}/{}",
                qn,
                n,
                h.order()
            )));
        }

        let mut project = vec![0u32; n as usize];
        for e in 0..n {
            let coords = g.coords(Element(e));
            let mut qcoords = Vec::with_capacity(kept.len());
            for &(row, d) in &kept {
                let mut acc = 0i64;
                for j in 0..k {
                    acc += u[row][j] * coords[j] as i64;
                }
                qcoords.push(acc.rem_euclid(d as i64));
            }
            project[e as usize] = quotient
                .element_from_coords(&qcoords)
                .expect("reduced coordinates are in range")
                .index();
        }

        let mut section = vec![u32::MAX; qn as usize];
        let mut fiber_sizes = vec![0u32; qn as usize];
        for e in 0..n {
            let q = project[e as usize] as usize;
            fiber_sizes[q] += 1;
            if section[q] == u32::MAX {
                section[q] = e;
            }
        }
        for (q, &size) in fiber_sizes.iter().enumerate() {
            if size != h.order() {
                return Err(Error::Internal(format!(
                    "fiber over {} has size {}, expected {}",
                    q,
                    size,
                    h.order()
                )));
            }
        }
        for e in h.members.iter() {
            if project[e.index() as usize] != 0 {
                return Err(Error::Internal(format!(
                    "kernel element {} does not project to zero",
                    g.format_element(e)
                )));
            }
        }

        let map = QuotientMap {
            source: g.clone(),
            kernel: h.clone(),
            quotient,
            project,
            section,
        };
        if n <= 256 {
            for x in 0..n {
                for y in 0..n {
                    let lhs = map.project[g.add_idx(x, y) as usize];
                    let rhs = map
                        .quotient
                        .add_idx(map.project[x as usize], map.project[y as usize]);
                    if lhs != rhs {
                        return Err(Error::Internal("projection is not a homomorphism".into()));
                    }
                }
            }
        }
        Ok(map)
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn quotient(&self) -> &Group {
        &self.quotient
    }

    pub fn project(&self, e: Element) -> Element {
        Element(self.project[e.index() as usize])
    }

    /// The stored coset representative (smallest source index in the fiber).
    pub fn section(&self, q: Element) -> Element {
        Element(self.section[q.index() as usize])
    }

    pub fn project_set(&self, a: &GroupSet) -> GroupSet {
        debug_assert_eq!(*a.group(), self.source);
        GroupSet::from_elements(&self.quotient, a.iter().map(|e| self.project(e)))
    }

    pub fn preimage(&self, q: &GroupSet) -> GroupSet {
        debug_assert_eq!(*q.group(), self.quotient);
        GroupSet::from_elements(
            &self.source,
            self.source
                .elements()
                .filter(|&e| q.contains(self.project(e))),
        )
    }
}

/// In-place Smith normal form; returns the diagonal and the row transform `U`
/// with `U * A_original * V = diag`. Only `U` is tracked.
fn smith_normal_form(a: &mut Vec<Vec<i64>>) -> (Vec<i64>, Vec<Vec<i64>>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut u: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..rows).map(|j| i64::from(i == j)).collect())
        .collect();

    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = pivot_position(a, t) else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = div_round(a[i][t], a[t][t]);
                    for j in 0..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= q * u[t][j];
                    }
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        u.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = div_round(a[t][j], a[t][t]);
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            let mut fixed = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if a[i][j] % a[t][t] != 0 {
                        fixed = Some(i);
                        break 'scan;
                    }
                }
            }
            match fixed {
                Some(i) => {
                    for j in 0..cols {
                        a[t][j] += a[i][j];
                    }
                    for j in 0..rows {
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in 0..cols {
                a[t][j] = -a[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
        t += 1;
    }

    let diag = (0..rows).map(|i| if i < cols { a[i][i] } else { 0 }).collect();
    (diag, u)
}

fn pivot_position(a: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.len() {
        for j in t..a[i].len() {
            if a[i][j] != 0 {
                match best {
                    Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
    }
    best
}

fn div_round(a: i64, b: i64) -> i64 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r < 0) == (b < 0) { 1 } else { -1 }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zn(n: u32) -> Group {
        Group::new(&[n]).unwrap()
    }

    #[test]
    fn cyclic_quotients() {
        let z8 = zn(8);
        let h = z8.subgroup_from_gens(&[Element(4)]);
        let map = QuotientMap::new(&z8, &h).unwrap();
        assert_eq!(map.quotient().name(), "Z4");
        for x in 0..8 {
            assert_eq!(map.project(Element(x)).index(), x % 4);
        }
        for q in 0..4 {
            assert_eq!(map.section(Element(q)).index(), q);
            assert_eq!(map.project(map.section(Element(q))).index(), q);
        }

        let z6 = zn(6);
        let h2 = z6.subgroup_from_gens(&[Element(2)]);
        let map2 = QuotientMap::new(&z6, &h2).unwrap();
        assert_eq!(map2.quotient().order(), 2);
    }

    #[test]
    fn product_group_quotient() {
        let g = Group::new(&[2, 4]).unwrap();
        let h = g.subgroup_from_gens(&[g.element_from_coords(&[0, 2]).unwrap()]);
        let map = QuotientMap::new(&g, &h).unwrap();
        assert_eq!(map.quotient().name(), "Z2xZ2");
        let a = g.element_from_coords(&[1, 3]).unwrap();
        let b = g.element_from_coords(&[0, 1]).unwrap();
        assert_eq!(
            map.project(g.add(a, b)),
            map.quotient().add(map.project(a), map.project(b))
        );
    }

    #[test]
    fn degenerate_quotients() {
        let z6 = zn(6);
        let full = z6.subgroup_from_gens(&[Element(1)]);
        let map = QuotientMap::new(&z6, &full).unwrap();
        assert_eq!(map.quotient().order(), 1);
        assert_eq!(map.quotient().name(), "Z1");

        let trivial = z6.subgroup_from_gens(&[]);
        let map2 = QuotientMap::new(&z6, &trivial).unwrap();
        assert_eq!(map2.quotient().order(), 6);
        for x in 0..6 {
            assert_eq!(
                map2.section(map2.project(Element(x))).index(),
                x,
                "trivial kernel should make project injective"
            );
        }
    }

    #[test]
    fn project_and_preimage_roundtrip() {
        let z8 = zn(8);
        let h = z8.subgroup_from_gens(&[Element(4)]);
        let map = QuotientMap::new(&z8, &h).unwrap();
        let a = GroupSet::from_indices(&z8, [0, 1, 4, 5]).unwrap();
        let img = map.project_set(&a);
        assert_eq!(img.indices(), vec![0, 1]);
        let pre = map.preimage(&img);
        assert_eq!(pre.indices(), vec![0, 1, 4, 5]);
    }

    proptest! {
        #[test]
        fn all_quotients_are_homomorphic(n in 2u32..=16, seed in 0u32..1000) {
            let g = zn(n);
            let subs = g.all_subgroups();
            let h = &subs[(seed as usize) % subs.len()];
            let map = QuotientMap::new(&g, h).unwrap();
            prop_assert_eq!(g.order(), h.order() * map.quotient().order());
            for x in g.elements() {
                for y in g.elements() {
                    prop_assert_eq!(
                        map.project(g.add(x, y)),
                        map.quotient().add(map.project(x), map.project(y))
                    );
                }
            }
        }

        #[test]
        fn product_quotients_consistent(hx in 0u32..8, hy in 0u32..8) {
            let g = Group::new(&[2, 2, 2]).unwrap();
            let h = g.subgroup_from_gens(&[Element(hx % 8), Element(hy % 8)]);
            let map = QuotientMap::new(&g, &h).unwrap();
            prop_assert_eq!(g.order(), h.order() * map.quotient().order());
        }
    }
}
