//! Critical pairs `|A+B| = |A|+|B|-1` and their structure: the four weak
//! pair types, elementary pairs, Kemperman's recursive characterization, and
//! transfer results that push progression structure through quotients.

use crate::error::{Error, Result};
use crate::group::{Element, Subgroup};
use crate::iso::{hyper_atom, is_vosper, kappa, VosperMode};
use crate::quotient::QuotientMap;
use crate::report::Verdict;
use crate::sets::GroupSet;

/// Which weak pair types `(A, B)` falls under, with a witness per type.
///
/// - type 1: one side is a singleton;
/// - type 2: both sides are progressions with a common difference of order
///   at least `|A|+|B|-1`;
/// - type 3: `A` is aperiodic and, for some subgroup `H` with both sides
///   inside `H`-cosets, `g - B` is the complement of `A` in its coset;
/// - type 4: both sides inside `H`-cosets with `|A|+|B| = |H|+1` and some
///   `c` having exactly one representation `a + b`.
///
/// The strict variants pin down the representation count: type 3 with no
/// uniquely representable element at all, type 4 with exactly one.
#[derive(Clone, Debug)]
pub struct PairClass {
    pub wp1: bool,
    pub wp2: bool,
    pub wp3: bool,
    pub wp4: bool,
    pub sp3: bool,
    pub sp4: bool,
    /// Common progression differences of sufficient order (type 2).
    pub wp2_differences: GroupSet,
    /// `(H, g)` pairs realizing type 3.
    pub wp3_witnesses: Vec<(Subgroup, Element)>,
    /// `(H, c)` pairs realizing type 4.
    pub wp4_witnesses: Vec<(Subgroup, Element)>,
}

impl PairClass {
    pub fn is_weak(&self) -> bool {
        self.wp1 || self.wp2 || self.wp3 || self.wp4
    }

    /// Weak of type 1 or 2, or strictly of type 3 or 4.
    pub fn is_elementary(&self) -> bool {
        self.wp1 || self.wp2 || self.sp3 || self.sp4
    }
}

fn check_same_group(a: &GroupSet, b: &GroupSet) -> Result<()> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch {
            left: a.group().name().to_string(),
            right: b.group().name().to_string(),
        });
    }
    Ok(())
}

fn single_coset(x: &GroupSet, h: &Subgroup) -> bool {
    x.h_decomposition(h).part_count() == 1
}

pub fn classify_pair(a: &GroupSet, b: &GroupSet) -> Result<PairClass> {
    check_same_group(a, b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let g = a.group().clone();
    let n = g.order();
    let wp1 = a.len() == 1 || b.len() == 1;

    let need = a.len() + b.len() - 1;
    let mut wp2_differences = GroupSet::empty(&g);
    for d in a.ap_differences()?.intersection(&b.ap_differences()?).iter() {
        if g.element_order(d) >= need {
            wp2_differences.insert(d);
        }
    }
    let wp2 = !wp2_differences.is_empty();

    let unique = a.uniquely_representable(b)?;

    let mut wp3_witnesses = Vec::new();
    if a.is_aperiodic() {
        let neg_b = b.negate();
        for h in g.all_subgroups() {
            if !single_coset(a, &h) || !single_coset(b, &h) {
                continue;
            }
            let coset = h.members.translate(a.min_element().unwrap());
            let target = coset.difference(a);
            if target.len() != b.len() {
                continue;
            }
            for gi in 0..n {
                if neg_b.translate(Element(gi)) == target {
                    wp3_witnesses.push((h.clone(), Element(gi)));
                }
            }
        }
    }
    let wp3 = !wp3_witnesses.is_empty();

    let mut wp4_witnesses = Vec::new();
    if !unique.is_empty() {
        for h in g.all_subgroups() {
            if h.order() + 1 != a.len() + b.len() {
                continue;
            }
            if !single_coset(a, &h) || !single_coset(b, &h) {
                continue;
            }
            for c in unique.iter() {
                wp4_witnesses.push((h.clone(), c));
            }
        }
    }
    let wp4 = !wp4_witnesses.is_empty();

    Ok(PairClass {
        wp1,
        wp2,
        wp3,
        wp4,
        sp3: wp3 && unique.is_empty(),
        sp4: wp4 && unique.len() == 1,
        wp2_differences,
        wp3_witnesses,
        wp4_witnesses,
    })
}

pub fn is_elementary_pair(a: &GroupSet, b: &GroupSet) -> Result<bool> {
    Ok(classify_pair(a, b)?.is_elementary())
}

/// The sumset is critical and either aperiodic or some element has a unique
/// representation.
pub fn kst_condition(a: &GroupSet, b: &GroupSet) -> Result<bool> {
    check_same_group(a, b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let ab = a.sumset(b)?;
    if ab.len() != a.len() + b.len() - 1 {
        return Ok(false);
    }
    Ok(ab.is_aperiodic() || !a.uniquely_representable(b)?.is_empty())
}

/// A recursive decomposition: both sides quasi-periodic modulo `H`, the
/// distinguished single-coset parts forming an elementary pair whose
/// projected sum is uniquely representable in the image.
#[derive(Clone, Debug)]
pub struct KSTWitness {
    pub subgroup: Subgroup,
    pub a_part: GroupSet,
    pub b_part: GroupSet,
    /// `φ(a_part + b_part)` in the quotient.
    pub sigma: Element,
    pub distinguished_class: PairClass,
}

/// Indices of the parts that may serve as the distinguished one: the unique
/// partial part, or every part when the set is fully periodic.
fn distinguished_candidates(
    parts: &[(Element, GroupSet)],
    hsize: u32,
) -> Vec<usize> {
    let partial: Vec<usize> = parts
        .iter()
        .enumerate()
        .filter(|(_, (_, t))| t.len() < hsize)
        .map(|(i, _)| i)
        .collect();
    if partial.len() == 1 {
        partial
    } else {
        (0..parts.len()).collect()
    }
}

/// Searches nontrivial subgroups (the whole group included) in canonical
/// order for the recursive decomposition; the first witness is returned.
pub fn kst_decomposition(a: &GroupSet, b: &GroupSet) -> Result<Option<KSTWitness>> {
    check_same_group(a, b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let g = a.group().clone();
    for h in g.all_subgroups() {
        if h.order() < 2 {
            continue;
        }
        let adec = a.h_decomposition(&h);
        let bdec = b.h_decomposition(&h);
        if adec.partial_part_count() > 1 || bdec.partial_part_count() > 1 {
            continue;
        }
        let map = QuotientMap::new(&g, &h)?;
        let pa = map.project_set(a);
        let pb = map.project_set(b);
        let unique = pa.uniquely_representable(&pb)?;
        for &ia in &distinguished_candidates(&adec.parts, h.order()) {
            for &ib in &distinguished_candidates(&bdec.parts, h.order()) {
                let (ra, ta) = &adec.parts[ia];
                let (rb, tb) = &bdec.parts[ib];
                let sigma = map.quotient().add(map.project(*ra), map.project(*rb));
                if !unique.contains(sigma) {
                    continue;
                }
                let class = classify_pair(ta, tb)?;
                if !class.is_elementary() {
                    continue;
                }
                return Ok(Some(KSTWitness {
                    subgroup: h.clone(),
                    a_part: ta.clone(),
                    b_part: tb.clone(),
                    sigma,
                    distinguished_class: class,
                }));
            }
        }
    }
    Ok(None)
}

/// The unique-expression condition and the recursive decomposition are
/// equivalent; any divergence is a counterexample.
pub fn check_kst_equivalence(a: &GroupSet, b: &GroupSet) -> Result<Verdict> {
    let cond = kst_condition(a, b)?;
    let witness = kst_decomposition(a, b)?;
    if cond == witness.is_some() {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::fail(
            format!(
                "unique-expression condition is {cond} but decomposition witness {}",
                if witness.is_some() { "exists" } else { "is absent" }
            ),
            "both sides of the equivalence agree",
        ))
    }
}

/// For a weak pair, extracts the subgroup and distinguished parts whose
/// induced pair is elementary.
pub fn elementary_refinement(
    a: &GroupSet,
    b: &GroupSet,
) -> Result<Option<(Subgroup, GroupSet, GroupSet)>> {
    if !classify_pair(a, b)?.is_weak() {
        return Err(Error::NotAWeakPair);
    }
    Ok(kst_decomposition(a, b)?.map(|w| (w.subgroup, w.a_part, w.b_part)))
}

#[derive(Clone, Debug)]
pub struct TwoThirdWitness {
    pub subgroup: Subgroup,
    /// Quasi-periodicity witnesses: the coset representative whose removal
    /// leaves each set periodic.
    pub s_witness: Element,
    pub t_witness: Element,
    /// Common progression differences of the two images in the quotient.
    pub common_differences: GroupSet,
}

/// For a critical aperiodic sum filling at most two thirds of the group,
/// both sets are quasi-periodic modulo the hyper-atom of `S` and their
/// images are progressions with a common difference.
pub fn check_twothird(
    s: &GroupSet,
    t: &GroupSet,
) -> Result<(Verdict, Option<TwoThirdWitness>)> {
    check_same_group(s, t)?;
    let g = s.group().clone();
    let skip = |r: &str| Ok((Verdict::skipped(r), None));
    if g.order() < 2 {
        return skip("the group is trivial");
    }
    if s.is_empty() || t.is_empty() || !s.contains(g.zero()) || !t.contains(g.zero()) {
        return skip("both sets must contain 0");
    }
    if s.len() < 2 || s.len() > t.len() {
        return skip("sizes must satisfy 2 <= |S| <= |T|");
    }
    if !g.subgroup_generated(s).is_full() {
        return skip("S does not generate the group");
    }
    let st = s.sumset(t)?;
    if st.len() != s.len() + t.len() - 1 {
        return skip("|S+T| is not |S|+|T|-1");
    }
    if !st.is_aperiodic() {
        return skip("S+T is periodic");
    }
    if 3 * st.len() > 2 * g.order() + 2 {
        return skip("3|S+T| exceeds 2|G|+2");
    }
    let h = hyper_atom(s)?.subgroup;
    let s_witness = s.quasi_periodic_witness(&h);
    let t_witness = t.quasi_periodic_witness(&h);
    let (s_witness, t_witness) = match (s_witness, t_witness) {
        (Some(sw), Some(tw)) => (sw, tw),
        _ => {
            return Ok((
                Verdict::fail(
                    format!("a set is not quasi-periodic modulo the hyper-atom {}", h.members),
                    "both S and T decompose into full cosets plus one partial coset",
                ),
                None,
            ))
        }
    };
    let map = QuotientMap::new(&g, &h)?;
    let common = map
        .project_set(s)
        .ap_differences()?
        .intersection(&map.project_set(t).ap_differences()?);
    if common.is_empty() {
        return Ok((
            Verdict::fail(
                "the images modulo the hyper-atom share no progression difference".to_string(),
                "a common difference exists",
            ),
            None,
        ));
    }
    Ok((
        Verdict::Pass,
        Some(TwoThirdWitness {
            subgroup: h,
            s_witness,
            t_witness,
            common_differences: common,
        }),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DichotomyBranch {
    Progression,
    Vosper,
    Both,
}

/// Modulo its hyper-atom, a set with small connectivity projects to a
/// progression or to a Vosper set.
pub fn check_hyperatom_dichotomy(
    s: &GroupSet,
) -> Result<(Verdict, Option<DichotomyBranch>)> {
    let g = s.group().clone();
    let skip = |r: &str| Ok((Verdict::skipped(r), None));
    if s.is_empty() || !s.contains(g.zero()) {
        return skip("S must contain 0");
    }
    if !g.subgroup_generated(s).is_full() {
        return skip("S does not generate the group");
    }
    if 2 * s.len() > g.order() + 1 {
        return skip("2|S| exceeds |G|+1");
    }
    let kr = match kappa(s, 2) {
        Ok(kr) => kr,
        Err(e @ Error::SearchLimit { .. }) => return Err(e),
        Err(_) => return skip("κ_2(S) is undefined for this set"),
    };
    if !kr.separable {
        return skip("S is not 2-separable");
    }
    if kr.value > s.len() as i64 - 1 {
        return skip("κ_2(S) exceeds |S|-1");
    }
    let h = hyper_atom(s)?.subgroup;
    let map = QuotientMap::new(&g, &h)?;
    let image = map.project_set(s);
    let progression = !image.ap_differences()?.is_empty();
    let vosper = if map.quotient().order() >= 3 {
        is_vosper(&image, VosperMode::Fast)?
    } else {
        false
    };
    match (progression, vosper) {
        (true, true) => Ok((Verdict::Pass, Some(DichotomyBranch::Both))),
        (true, false) => Ok((Verdict::Pass, Some(DichotomyBranch::Progression))),
        (false, true) => Ok((Verdict::Pass, Some(DichotomyBranch::Vosper))),
        (false, false) => Ok((
            Verdict::fail(
                format!("the image {image} modulo the hyper-atom is neither branch", ),
                "a progression or a Vosper set",
            ),
            None,
        )),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinalcorCase {
    /// `<S>` is proper: `T` is quasi-periodic modulo it.
    SpanSProper,
    /// `<U>` is proper for the recentred complement `U`: both sets are.
    SpanUProper,
    /// Some hyper-atom (of `S` or of `U`) makes both sets quasi-periodic
    /// with progression images.
    HyperAtomQuasi,
}

#[derive(Clone, Debug)]
pub struct FinalcorWitness {
    pub case: FinalcorCase,
    pub subgroup: Subgroup,
    /// Whether the verdict depends on which element of the sumset
    /// complement was used to recentre `U`.
    pub a_sensitivity: bool,
}

fn quasi(x: &GroupSet, h: &Subgroup) -> bool {
    x.quasi_periodic_witness(h).is_some()
}

fn finalcor_recentred(
    s: &GroupSet,
    t: &GroupSet,
    w: &GroupSet,
    a: Element,
) -> Result<(bool, FinalcorCase, Option<Subgroup>)> {
    let g = s.group().clone();
    let u = w.translate(g.neg(a));
    let span_u = g.subgroup_generated(&u);
    if !span_u.is_full() {
        let ok = quasi(s, &span_u) && quasi(t, &span_u);
        return Ok((ok, FinalcorCase::SpanUProper, ok.then_some(span_u)));
    }
    let mut candidates = vec![hyper_atom(s)?.subgroup, hyper_atom(&u)?.subgroup];
    candidates.dedup_by(|x, y| x.members == y.members);
    for h in candidates {
        if !quasi(s, &h) || !quasi(t, &h) {
            continue;
        }
        let map = QuotientMap::new(&g, &h)?;
        if !map.project_set(s).ap_differences()?.is_empty()
            && !map.project_set(t).ap_differences()?.is_empty()
        {
            return Ok((true, FinalcorCase::HyperAtomQuasi, Some(h)));
        }
    }
    Ok((false, FinalcorCase::HyperAtomQuasi, None))
}

/// Critical aperiodic pairs that are not weak still carry subgroup
/// structure: from the span of `S`, the span of the recentred sumset
/// complement, or a hyper-atom making both sets quasi-periodic with
/// progression images.
pub fn check_finalcor(
    s: &GroupSet,
    t: &GroupSet,
) -> Result<(Verdict, Option<FinalcorWitness>)> {
    check_same_group(s, t)?;
    let g = s.group().clone();
    let skip = |r: &str| Ok((Verdict::skipped(r), None));
    if s.is_empty() || t.is_empty() || !s.contains(g.zero()) || !t.contains(g.zero()) {
        return skip("both sets must contain 0");
    }
    if s.len() > t.len() {
        return skip("|S| must not exceed |T|");
    }
    if !g.subgroup_generated(&s.union(t)).is_full() {
        return skip("S and T together do not generate the group");
    }
    let st = s.sumset(t)?;
    if st.len() != s.len() + t.len() - 1 {
        return skip("|S+T| is not |S|+|T|-1");
    }
    if !st.is_aperiodic() {
        return skip("S+T is periodic");
    }
    if classify_pair(s, t)?.is_weak() {
        return skip("the pair is already weak");
    }
    let span_s = g.subgroup_generated(s);
    if !span_s.is_full() {
        let ok = quasi(t, &span_s);
        return Ok(if ok {
            (
                Verdict::Pass,
                Some(FinalcorWitness {
                    case: FinalcorCase::SpanSProper,
                    subgroup: span_s,
                    a_sensitivity: false,
                }),
            )
        } else {
            (
                Verdict::fail(
                    format!("T is not quasi-periodic modulo <S> = {}", span_s.members),
                    "T decomposes into full cosets plus one partial coset",
                ),
                None,
            )
        });
    }
    let w = st.complement();
    if w.is_empty() {
        return skip("the sumset covers the group");
    }
    let mut outcomes = Vec::new();
    for a in w.iter() {
        outcomes.push(finalcor_recentred(s, t, &w, a)?);
    }
    let (ok, case, subgroup) = outcomes[0].clone();
    let a_sensitivity = outcomes.iter().any(|(o, _, _)| *o != ok);
    if ok {
        Ok((
            Verdict::Pass,
            Some(FinalcorWitness {
                case,
                subgroup: subgroup.expect("passing case carries its subgroup"),
                a_sensitivity,
            }),
        ))
    } else {
        Ok((
            Verdict::fail(
                "no qualifying subgroup structures the pair".to_string(),
                "span or hyper-atom structure applies",
            ),
            None,
        ))
    }
}

/// A critical pair satisfying the unique-expression condition becomes weak
/// after factoring out some proper subgroup modulo which both sets are
/// quasi-periodic.
pub fn check_lev(a: &GroupSet, b: &GroupSet) -> Result<(Verdict, Option<Subgroup>)> {
    check_same_group(a, b)?;
    let g = a.group().clone();
    let skip = |r: &str| Ok((Verdict::skipped(r), None));
    if a.is_empty() || b.is_empty() {
        return skip("both sets must be nonempty");
    }
    if a.len() > b.len() {
        return skip("|A| must not exceed |B|");
    }
    let ab = a.sumset(b)?;
    if ab.len() != a.len() + b.len() - 1 {
        return skip("|A+B| is not |A|+|B|-1");
    }
    if !ab.is_aperiodic() && a.uniquely_representable(b)?.is_empty() {
        return skip("A+B is periodic with every element multiply representable");
    }
    for h in g.all_subgroups() {
        if h.is_full() {
            continue;
        }
        if !quasi(a, &h) || !quasi(b, &h) {
            continue;
        }
        let map = QuotientMap::new(&g, &h)?;
        if classify_pair(&map.project_set(a), &map.project_set(b))?.is_weak() {
            return Ok((Verdict::Pass, Some(h)));
        }
    }
    Ok((
        Verdict::fail(
            "no proper subgroup renders the image pair weak".to_string(),
            "some proper subgroup quotient yields a weak pair",
        ),
        None,
    ))
}

/// A set critical against a progression (with a side condition ruling out
/// the full-span coincidence) shares a difference with it.
pub fn ap1_check(y: &GroupSet, x: &GroupSet) -> Result<Verdict> {
    check_same_group(y, x)?;
    let g = y.group().clone();
    if y.is_empty() || !y.contains(g.zero()) {
        return Ok(Verdict::skipped("Y must contain 0"));
    }
    let y_diffs = y.ap_differences()?;
    if y_diffs.is_empty() {
        return Ok(Verdict::skipped("Y is not a progression"));
    }
    if x.is_empty() {
        return Ok(Verdict::skipped("X is empty"));
    }
    let span = g.subgroup_generated(y);
    if !x.is_subset(&span.members) {
        return Ok(Verdict::skipped("X is not contained in <Y>"));
    }
    let xy = x.sumset(y)?;
    if xy.len() != x.len() + y.len() - 1 {
        return Ok(Verdict::skipped("|X+Y| is not |X|+|Y|-1"));
    }
    if span.order() == xy.len() && y.len() != 2 {
        return Ok(Verdict::skipped("X+Y fills <Y> and |Y| is not 2"));
    }
    if x.ap_differences()?.intersection(&y_diffs).is_empty() {
        Ok(Verdict::fail(
            "X and Y share no progression difference".to_string(),
            "a common difference exists",
        ))
    } else {
        Ok(Verdict::Pass)
    }
}

/// When `S` does not generate and does not absorb `T`, a critical aperiodic
/// sum forces `T` to be quasi-periodic modulo the span of `S`.
pub fn nongenerating_check(s: &GroupSet, t: &GroupSet) -> Result<Verdict> {
    check_same_group(s, t)?;
    let g = s.group().clone();
    if s.is_empty() || t.is_empty() || !s.contains(g.zero()) || !t.contains(g.zero()) {
        return Ok(Verdict::skipped("both sets must contain 0"));
    }
    if s.len() < 2 {
        return Ok(Verdict::skipped("|S| must be at least 2"));
    }
    let st = s.sumset(t)?;
    if st.len() != s.len() + t.len() - 1 {
        return Ok(Verdict::skipped("|S+T| is not |S|+|T|-1"));
    }
    if !st.is_aperiodic() {
        return Ok(Verdict::skipped("S+T is periodic"));
    }
    let span = g.subgroup_generated(s);
    if t.is_subset(&span.members) {
        return Ok(Verdict::skipped("T lies inside <S>"));
    }
    if quasi(t, &span) {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::fail(
            format!("T is not quasi-periodic modulo <S> = {}", span.members),
            "T decomposes into full cosets plus one partial coset",
        ))
    }
}

/// The oriented progression condition modulo `h`: the image is a
/// progression with difference `dq` and any partial coset sits at the
/// progression's last term (vacuous for a full cycle).
fn side_ok(a: &GroupSet, map: &QuotientMap, h: &Subgroup, dq: Element) -> Result<bool> {
    let image = map.project_set(a);
    if !image.ap_differences()?.contains(dq) {
        return Ok(false);
    }
    let dec = a.h_decomposition(h);
    let partial: Vec<&(Element, GroupSet)> = dec
        .parts
        .iter()
        .filter(|(_, tr)| tr.len() < h.order())
        .collect();
    match partial.len() {
        0 => Ok(true),
        1 => {
            let q = map.quotient();
            if image.len() == q.element_order(dq) {
                return Ok(true);
            }
            let last = image
                .iter()
                .find(|&e| !image.contains(q.add(e, dq)))
                .ok_or_else(|| Error::Internal("no last term in a non-cycle progression".into()))?;
            Ok(map.project(partial[0].0) == last)
        }
        _ => Ok(false),
    }
}

/// If the `S` side of a critical aperiodic sum satisfies the oriented
/// progression condition modulo `h` with difference `d`, so does the `T`
/// side.
pub fn transfer_check(s: &GroupSet, t: &GroupSet, h: &Subgroup, d: Element) -> Result<Verdict> {
    check_same_group(s, t)?;
    h.verify()?;
    let g = s.group().clone();
    if s.is_empty() || t.is_empty() || !s.contains(g.zero()) || !t.contains(g.zero()) {
        return Ok(Verdict::skipped("both sets must contain 0"));
    }
    if !g.subgroup_generated(s).is_full() {
        return Ok(Verdict::skipped("S does not generate the group"));
    }
    let st = s.sumset(t)?;
    if st.len() != s.len() + t.len() - 1 {
        return Ok(Verdict::skipped("|S+T| is not |S|+|T|-1"));
    }
    if !st.is_aperiodic() {
        return Ok(Verdict::skipped("S+T is periodic"));
    }
    let map = QuotientMap::new(&g, h)?;
    let dq = map.project(d);
    if !side_ok(s, &map, h, dq)? {
        return Ok(Verdict::skipped(
            "S does not satisfy the oriented progression condition",
        ));
    }
    if side_ok(t, &map, h, dq)? {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::fail(
            "T fails the oriented progression condition".to_string(),
            "the condition transfers from S to T",
        ))
    }
}

/// The complement of a critical aperiodic sum, translated by `-S`, is again
/// critical and aperiodic.
pub fn tpowers_check(s: &GroupSet, t: &GroupSet) -> Result<Verdict> {
    check_same_group(s, t)?;
    let g = s.group().clone();
    if s.is_empty() || t.is_empty() || !s.contains(g.zero()) || !t.contains(g.zero()) {
        return Ok(Verdict::skipped("both sets must contain 0"));
    }
    if !g.subgroup_generated(s).is_full() {
        return Ok(Verdict::skipped("S does not generate the group"));
    }
    let st = s.sumset(t)?;
    if st.len() != s.len() + t.len() - 1 {
        return Ok(Verdict::skipped("|S+T| is not |S|+|T|-1"));
    }
    if !st.is_aperiodic() {
        return Ok(Verdict::skipped("S+T is periodic"));
    }
    let w = st.complement();
    if w.is_empty() {
        return Ok(Verdict::skipped("the sumset covers the group"));
    }
    let spread = w.sumset(&s.negate())?;
    let critical = spread.len() == w.len() + s.len() - 1;
    let aperiodic = spread.is_aperiodic();
    if critical && aperiodic {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::fail(
            format!(
                "complement spread has size {} (aperiodic: {aperiodic})",
                spread.len()
            ),
            format!("size {} and aperiodic", w.len() + s.len() - 1),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    fn set(g: &Group, idx: &[u32]) -> GroupSet {
        GroupSet::from_indices(g, idx.iter().copied()).unwrap()
    }

    fn normalized_sets(g: &Group) -> Vec<GroupSet> {
        let n = g.order();
        (0u64..(1 << (n - 1)))
            .map(|bits| {
                GroupSet::from_indices(
                    g,
                    (0..n).filter(|&i| i == 0 || (bits >> (i - 1)) & 1 == 1),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn classify_intervals_in_z4() {
        let z4 = Group::new(&[4]).unwrap();
        let a = set(&z4, &[0, 1]);
        let b = set(&z4, &[1, 2]);
        let c = classify_pair(&a, &b).unwrap();
        assert!(!c.wp1 && c.wp2 && c.wp3 && !c.wp4);
        assert_eq!(c.wp2_differences, set(&z4, &[1, 3]));
        assert_eq!(c.wp3_witnesses.len(), 1);
        assert!(c.wp3_witnesses[0].0.is_full());
        assert_eq!(c.wp3_witnesses[0].1, z4.zero());
        assert!(!c.sp3 && !c.sp4);
        assert!(c.is_weak() && c.is_elementary());
    }

    #[test]
    fn classify_singletons_and_subgroup_pairs() {
        let z6 = Group::new(&[6]).unwrap();
        let c = classify_pair(&set(&z6, &[3]), &set(&z6, &[0, 2, 5])).unwrap();
        assert!(c.wp1 && c.is_weak());
        let z8 = Group::new(&[8]).unwrap();
        let h = set(&z8, &[0, 4]);
        let c = classify_pair(&h, &h).unwrap();
        assert!(!c.is_weak(), "subgroup against itself is not a weak pair");
    }

    #[test]
    fn weakness_is_symmetric_on_small_groups() {
        for g in [Group::new(&[6]).unwrap(), Group::new(&[8]).unwrap()] {
            let sets = normalized_sets(&g);
            for a in &sets {
                for b in &sets {
                    let ab = classify_pair(a, b).unwrap();
                    let ba = classify_pair(b, a).unwrap();
                    assert_eq!(ab.is_weak(), ba.is_weak(), "asymmetric weakness {a:?} {b:?}");
                    assert_eq!(
                        ab.is_elementary(),
                        ba.is_elementary(),
                        "asymmetric elementarity {a:?} {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn classification_is_translation_covariant() {
        let z6 = Group::new(&[6]).unwrap();
        let a = set(&z6, &[0, 1]);
        let b = set(&z6, &[0, 1, 2]);
        let base = classify_pair(&a, &b).unwrap();
        for da in 0..6 {
            for db in 0..6 {
                let c = classify_pair(
                    &a.translate(z6.element(da).unwrap()),
                    &b.translate(z6.element(db).unwrap()),
                )
                .unwrap();
                let flags = |p: &PairClass| (p.wp1, p.wp2, p.wp3, p.wp4, p.sp3, p.sp4);
                assert_eq!(flags(&base), flags(&c), "flags moved under ({da},{db})");
            }
        }
    }

    #[test]
    fn every_true_flag_has_a_witness() {
        for g in [Group::new(&[6]).unwrap(), Group::new(&[2, 4]).unwrap()] {
            let sets = normalized_sets(&g);
            for a in &sets {
                for b in &sets {
                    let c = classify_pair(a, b).unwrap();
                    assert_eq!(c.wp2, !c.wp2_differences.is_empty());
                    assert_eq!(c.wp3, !c.wp3_witnesses.is_empty());
                    assert_eq!(c.wp4, !c.wp4_witnesses.is_empty());
                    if c.sp3 {
                        assert!(c.wp3);
                    }
                    if c.sp4 {
                        assert!(c.wp4);
                    }
                }
            }
        }
    }

    #[test]
    fn kst_witness_at_the_full_group() {
        let z6 = Group::new(&[6]).unwrap();
        let a = set(&z6, &[0, 1]);
        let b = set(&z6, &[0, 1, 2]);
        assert!(kst_condition(&a, &b).unwrap());
        let w = kst_decomposition(&a, &b).unwrap().unwrap();
        assert!(w.subgroup.is_full());
        assert_eq!(w.a_part, a);
        assert_eq!(w.b_part, b);
        assert_eq!(w.sigma.index(), 0);
        assert!(w.distinguished_class.wp2);
    }

    #[test]
    fn kst_negative_case() {
        let z8 = Group::new(&[8]).unwrap();
        let a = set(&z8, &[0, 1, 4, 5]);
        let b = set(&z8, &[0, 4]);
        assert!(!kst_condition(&a, &b).unwrap());
        assert!(kst_decomposition(&a, &b).unwrap().is_none());
        assert!(check_kst_equivalence(&a, &b).unwrap().is_pass());
    }

    #[test]
    fn kst_equivalence_over_all_pairs_in_z6() {
        let z6 = Group::new(&[6]).unwrap();
        let mut both_true = 0u32;
        for abits in 1u64..64 {
            for bbits in 1u64..64 {
                let a = GroupSet::from_mask64(&z6, abits);
                let b = GroupSet::from_mask64(&z6, bbits);
                let v = check_kst_equivalence(&a, &b).unwrap();
                assert!(v.is_pass(), "equivalence failed on {a:?}, {b:?}");
                if kst_condition(&a, &b).unwrap() {
                    both_true += 1;
                }
            }
        }
        assert!(both_true > 0, "the equivalence never bit");
    }

    #[test]
    fn kst_equivalence_over_normalized_pairs_in_z8() {
        let z8 = Group::new(&[8]).unwrap();
        let sets = normalized_sets(&z8);
        for a in &sets {
            for b in &sets {
                let v = check_kst_equivalence(a, b).unwrap();
                assert!(v.is_pass(), "equivalence failed on {a:?}, {b:?}");
            }
        }
    }

    #[test]
    fn refinement_of_a_weak_pair() {
        let z6 = Group::new(&[6]).unwrap();
        let a = set(&z6, &[0, 1]);
        let b = set(&z6, &[0, 1, 2]);
        let (h, pa, pb) = elementary_refinement(&a, &b).unwrap().unwrap();
        assert!(h.is_full());
        assert_eq!((pa, pb), (a, b));
        let z8 = Group::new(&[8]).unwrap();
        let sub = set(&z8, &[0, 4]);
        assert!(matches!(
            elementary_refinement(&sub, &sub),
            Err(Error::NotAWeakPair)
        ));
    }

    #[test]
    fn twothird_pass_and_skip() {
        let z6 = Group::new(&[6]).unwrap();
        let (v, w) = check_twothird(&set(&z6, &[0, 1]), &set(&z6, &[0, 1, 2])).unwrap();
        assert!(v.is_pass());
        let w = w.unwrap();
        assert!(w.subgroup.is_trivial());
        assert_eq!(w.common_differences, set(&z6, &[1, 5]));
        let z8 = Group::new(&[8]).unwrap();
        let s = set(&z8, &[0, 1, 4, 5]);
        let (v, w) = check_twothird(&s, &s).unwrap();
        assert!(v.is_skipped());
        assert!(w.is_none());
    }

    #[test]
    fn twothird_holds_on_small_groups() {
        let mut tested = 0u32;
        for g in [
            Group::new(&[6]).unwrap(),
            Group::new(&[7]).unwrap(),
            Group::new(&[8]).unwrap(),
            Group::new(&[2, 4]).unwrap(),
        ] {
            let sets = normalized_sets(&g);
            for s in &sets {
                for t in &sets {
                    let (v, _) = check_twothird(s, t).unwrap();
                    assert!(!v.is_fail(), "failed on {s:?}, {t:?}");
                    if v.is_pass() {
                        tested += 1;
                    }
                }
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn dichotomy_examples() {
        let z8 = Group::new(&[8]).unwrap();
        let (v, b) = check_hyperatom_dichotomy(&set(&z8, &[0, 1, 4, 5])).unwrap();
        assert!(v.is_pass());
        assert_eq!(b, Some(DichotomyBranch::Both));
        let z6 = Group::new(&[6]).unwrap();
        let (v, b) = check_hyperatom_dichotomy(&set(&z6, &[0, 1])).unwrap();
        assert!(v.is_pass());
        assert_eq!(b, Some(DichotomyBranch::Progression));
        let z5 = Group::new(&[5]).unwrap();
        let (v, b) = check_hyperatom_dichotomy(&set(&z5, &[0, 1, 2])).unwrap();
        assert!(v.is_skipped());
        assert!(b.is_none());
    }

    #[test]
    fn dichotomy_holds_on_small_groups() {
        let mut tested = 0u32;
        for g in [
            Group::new(&[6]).unwrap(),
            Group::new(&[8]).unwrap(),
            Group::new(&[9]).unwrap(),
            Group::new(&[10]).unwrap(),
            Group::new(&[2, 4]).unwrap(),
            Group::new(&[3, 3]).unwrap(),
        ] {
            for s in normalized_sets(&g) {
                let (v, _) = check_hyperatom_dichotomy(&s).unwrap();
                assert!(!v.is_fail(), "failed on {s:?}");
                if v.is_pass() {
                    tested += 1;
                }
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn finalcor_known_instances() {
        let z9 = Group::new(&[9]).unwrap();
        // <S> proper, T quasi-periodic modulo it.
        let s = set(&z9, &[0, 3]);
        let t = set(&z9, &[0, 1, 4, 7]);
        let (v, w) = check_finalcor(&s, &t).unwrap();
        assert!(v.is_pass(), "{v:?}");
        let w = w.unwrap();
        assert_eq!(w.case, FinalcorCase::SpanSProper);
        assert_eq!(w.subgroup.members, set(&z9, &[0, 3, 6]));
        assert!(!w.a_sensitivity);
        // <S> full but the recentred complement spans a proper subgroup.
        let s = set(&z9, &[0, 1, 4, 7]);
        let (v, w) = check_finalcor(&s, &s).unwrap();
        assert!(v.is_pass(), "{v:?}");
        let w = w.unwrap();
        assert_eq!(w.case, FinalcorCase::SpanUProper);
        assert_eq!(w.subgroup.members, set(&z9, &[0, 3, 6]));
        assert!(!w.a_sensitivity);
    }

    #[test]
    fn finalcor_skips_weak_pairs() {
        let z6 = Group::new(&[6]).unwrap();
        let (v, _) = check_finalcor(&set(&z6, &[0, 1]), &set(&z6, &[0, 1, 2])).unwrap();
        assert!(v.is_skipped());
    }

    #[test]
    fn finalcor_holds_on_small_groups() {
        for g in [
            Group::new(&[6]).unwrap(),
            Group::new(&[8]).unwrap(),
            Group::new(&[9]).unwrap(),
        ] {
            let sets = normalized_sets(&g);
            for s in &sets {
                for t in &sets {
                    if s.len() > t.len() {
                        continue;
                    }
                    let (v, _) = check_finalcor(s, t).unwrap();
                    assert!(!v.is_fail(), "failed on {s:?}, {t:?}");
                }
            }
        }
    }

    #[test]
    fn lev_finds_the_trivial_subgroup_for_a_weak_pair() {
        let z6 = Group::new(&[6]).unwrap();
        let (v, h) = check_lev(&set(&z6, &[0, 1]), &set(&z6, &[0, 1, 2])).unwrap();
        assert!(v.is_pass());
        assert!(h.unwrap().is_trivial());
        let (v, h) = check_lev(&set(&z6, &[0, 2]), &set(&z6, &[0, 1, 2])).unwrap();
        assert!(v.is_skipped(), "{v:?}");
        assert!(h.is_none());
    }

    #[test]
    fn lev_holds_on_small_groups() {
        let mut tested = 0u32;
        for g in [Group::new(&[6]).unwrap(), Group::new(&[8]).unwrap(), Group::new(&[9]).unwrap()] {
            let sets = normalized_sets(&g);
            for a in &sets {
                for b in &sets {
                    let (v, _) = check_lev(a, b).unwrap();
                    assert!(!v.is_fail(), "failed on {a:?}, {b:?}");
                    if v.is_pass() {
                        tested += 1;
                    }
                }
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn ap1_pass_and_skip() {
        let z6 = Group::new(&[6]).unwrap();
        let y = set(&z6, &[0, 1]);
        assert!(ap1_check(&y, &set(&z6, &[0, 1, 2])).unwrap().is_pass());
        // X+Y fills <Y> while |Y| > 2.
        let y3 = set(&z6, &[0, 2, 4]);
        assert!(ap1_check(&y3, &set(&z6, &[0])).unwrap().is_skipped());
        // Not a progression.
        let z8 = Group::new(&[8]).unwrap();
        assert!(ap1_check(&set(&z8, &[0, 1, 4, 5]), &set(&z8, &[0]))
            .unwrap()
            .is_skipped());
    }

    #[test]
    fn ap1_holds_on_small_groups() {
        let mut tested = 0u32;
        for g in [Group::new(&[6]).unwrap(), Group::new(&[7]).unwrap(), Group::new(&[8]).unwrap()] {
            let sets = normalized_sets(&g);
            for y in &sets {
                for x in &sets {
                    let v = ap1_check(y, x).unwrap();
                    assert!(!v.is_fail(), "failed on Y={y:?}, X={x:?}");
                    if v.is_pass() {
                        tested += 1;
                    }
                }
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn nongenerating_instance_in_z9() {
        let z9 = Group::new(&[9]).unwrap();
        let s = set(&z9, &[0, 3]);
        let t = set(&z9, &[0, 1, 3, 6]);
        assert!(nongenerating_check(&s, &t).unwrap().is_pass());
        let inside = set(&z9, &[0, 3, 6]);
        assert!(nongenerating_check(&s, &inside).unwrap().is_skipped());
    }

    #[test]
    fn nongenerating_holds_on_small_groups() {
        let mut tested = 0u32;
        for g in [Group::new(&[8]).unwrap(), Group::new(&[9]).unwrap(), Group::new(&[2, 4]).unwrap()] {
            let sets = normalized_sets(&g);
            for s in &sets {
                for t in &sets {
                    let v = nongenerating_check(s, t).unwrap();
                    assert!(!v.is_fail(), "failed on {s:?}, {t:?}");
                    if v.is_pass() {
                        tested += 1;
                    }
                }
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn transfer_examples() {
        let z6 = Group::new(&[6]).unwrap();
        let s = set(&z6, &[0, 1]);
        let t = set(&z6, &[0, 1, 2]);
        let h0 = z6.trivial_subgroup();
        assert!(transfer_check(&s, &t, &h0, z6.element(1).unwrap())
            .unwrap()
            .is_pass());
        // Partial parts on both sides, sitting at the progressions' ends.
        let s2 = set(&z6, &[0, 1, 3]);
        let t2 = set(&z6, &[0]);
        let h = z6.subgroup_generated(&set(&z6, &[3]));
        assert!(transfer_check(&s2, &t2, &h, z6.element(1).unwrap())
            .unwrap()
            .is_pass());
        // Wrong orientation: d = 2 in the quotient is not a difference of φ(S).
        assert!(transfer_check(&s2, &t2, &h, z6.element(2).unwrap())
            .unwrap()
            .is_skipped());
    }

    #[test]
    fn transfer_holds_on_small_groups() {
        let mut tested = 0u32;
        for g in [Group::new(&[6]).unwrap(), Group::new(&[8]).unwrap(), Group::new(&[2, 4]).unwrap()] {
            let subs = g.all_subgroups();
            let sets = normalized_sets(&g);
            for s in &sets {
                for t in &sets {
                    let st = s.sumset(t).unwrap();
                    if st.len() != s.len() + t.len() - 1 || !st.is_aperiodic() {
                        continue;
                    }
                    for h in &subs {
                        for d in 0..g.order() {
                            let v = transfer_check(s, t, h, Element(d)).unwrap();
                            assert!(
                                !v.is_fail(),
                                "failed on {s:?}, {t:?}, H={:?}, d={d}",
                                h.members
                            );
                            if v.is_pass() {
                                tested += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn tpowers_example_and_sweep() {
        let z6 = Group::new(&[6]).unwrap();
        assert!(tpowers_check(&set(&z6, &[0, 1]), &set(&z6, &[0, 1, 2]))
            .unwrap()
            .is_pass());
        let mut tested = 0u32;
        for g in [Group::new(&[6]).unwrap(), Group::new(&[8]).unwrap(), Group::new(&[9]).unwrap()] {
            let sets = normalized_sets(&g);
            for s in &sets {
                for t in &sets {
                    let v = tpowers_check(s, t).unwrap();
                    assert!(!v.is_fail(), "failed on {s:?}, {t:?}");
                    if v.is_pass() {
                        tested += 1;
                    }
                }
            }
        }
        assert!(tested > 0);
    }
}
