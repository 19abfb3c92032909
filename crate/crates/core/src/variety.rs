//! Finitely generated varieties: FSI members, membership, epic subalgebras, and the
//! ES decision.
//!
//! Every variety here is `V(K)` for a finite set `K` of finite algebras, so its FSI
//! members lie in `HS(K)` and are finite. Dually, an FSI member of `V(K)` is a rooted
//! quotient of an upset of some generator dual.
//!
//! Representatives are taken from principal upsets `↑x` only. This loses nothing: if
//! `Q` is an upset of `P` and `Q/R` is rooted with root class `C`, pick `x ∈ C`; then
//! `↑x` is an upset of `Q`, `R` restricted to `↑x` is again correct, and the
//! back condition forces every class to meet `↑x`, so `↑x / R` and `Q/R` coincide.
//! Conversely every quotient of a rooted poset is rooted.
//!
//! `is_epic` looks for two different Esakia maps `g, h: Y → B_*` with `g(y) R_A h(y)`
//! for every `y`. It first tries `Y = B_*` with `g` the identity and `h` a nontrivial
//! automorphism, and then every FSI representative `Y`, building `g` and `h` together
//! from the top of `Y` down. The second stage is complete: a separating pair into an
//! arbitrary `C ∈ V` restricts to a separating pair on `↑y` for a point `y` where the
//! maps differ, and `↑y` is the dual of an FSI quotient of `C`, hence finite and
//! isomorphic to a listed representative.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Elem, HeytingAlgebra, SubalgebraHandle};
use crate::constructions::x_n_space;
use crate::duality::{
    dual_space, enumerate_correct_partitions, enumerate_subalgebras, extend_ok, is_correct_partition,
    is_esakia_morphism, quotient_space, subalgebra_to_partition, CorrectPartition, EsakiaMap,
};
use crate::error::{Error, Result};
use crate::poset::{invariant_key, FinitePoset, IsoClasses};

/// Largest generator dual accepted by [`VarietyPresentation::new`].
pub const MAX_GENERATOR_POINTS: usize = 8;
/// Largest dual accepted by [`contains`].
pub const MAX_MEMBER_POINTS: usize = 24;
/// Largest dual accepted by [`is_epic`].
pub const MAX_EPIC_POINTS: usize = 8;
/// Largest level accepted by [`kg_es_certificate`].
pub const MAX_KG_LEVEL: usize = 4;

/// `V(K)` for a finite nonempty list `K` of finite algebras.
#[derive(Debug, Clone)]
pub struct VarietyPresentation {
    generators: Vec<HeytingAlgebra>,
    duals: Vec<FinitePoset>,
    reps: OnceLock<Vec<FinitePoset>>,
}

impl VarietyPresentation {
    pub fn new(generators: Vec<HeytingAlgebra>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::invalid("a variety needs at least one generator"));
        }
        let mut duals = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            g.verify_heyting()
                .map_err(|v| Error::invalid(format!("generator {i} is not a Heyting algebra: {v}")))?;
            let d = dual_space(g)?.poset.without_labels();
            if d.len() > MAX_GENERATOR_POINTS {
                return Err(Error::cap(format!(
                    "generator {i} has a dual of {} points; at most {MAX_GENERATOR_POINTS} are supported",
                    d.len()
                )));
            }
            duals.push(d);
        }
        Ok(VarietyPresentation { generators, duals, reps: OnceLock::new() })
    }

    pub fn single(g: HeytingAlgebra) -> Result<Self> {
        Self::new(vec![g])
    }

    pub fn generators(&self) -> &[HeytingAlgebra] {
        &self.generators
    }

    pub fn generator_duals(&self) -> &[FinitePoset] {
        &self.duals
    }
}

/// Duals of the FSI members of `v` up to isomorphism, smallest first.
pub fn fsi_representatives(v: &VarietyPresentation) -> Result<&[FinitePoset]> {
    if let Some(r) = v.reps.get() {
        return Ok(r);
    }
    let mut found = Vec::new();
    for p in &v.duals {
        for x in 0..p.len() {
            let (q, _) = p.restrict(p.up(x));
            for r in enumerate_correct_partitions(&q)? {
                found.push(quotient_space(&q, &r)?.0);
            }
        }
    }
    let mut classes = IsoClasses::new();
    for q in found {
        classes.insert(q);
    }
    let mut reps = classes.into_reps();
    reps.sort_by_cached_key(|q| (q.len(), q.relation_size(), invariant_key(q)));
    Ok(v.reps.get_or_init(|| reps))
}

/// How one point of a candidate member's dual was matched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCertificate {
    pub point: usize,
    /// Index into [`fsi_representatives`] isomorphic to `↑point`, if any.
    pub representative: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub points: Vec<PointCertificate>,
}

impl Membership {
    /// First point whose principal upset has no match.
    pub fn failing_point(&self) -> Option<usize> {
        self.points.iter().find(|c| c.representative.is_none()).map(|c| c.point)
    }
}

/// Whether `b ∈ v`: every principal upset of `b`'s dual must be an FSI representative.
pub fn contains(v: &VarietyPresentation, b: &HeytingAlgebra) -> Result<Membership> {
    let x = dual_space(b)?.poset.without_labels();
    contains_dual(v, &x)
}

/// [`contains`] for an algebra given by its dual.
pub fn contains_dual(v: &VarietyPresentation, x: &FinitePoset) -> Result<Membership> {
    if x.len() > MAX_MEMBER_POINTS {
        return Err(Error::cap(format!("membership supports duals of at most {MAX_MEMBER_POINTS} points")));
    }
    let reps = fsi_representatives(v)?;
    let mut index = IsoClasses::new();
    for r in reps {
        index.insert(r.clone());
    }
    let points: Vec<PointCertificate> = (0..x.len())
        .into_par_iter()
        .map(|p| {
            let (up, _) = x.restrict(x.up(p));
            PointCertificate { point: p, representative: index.find(&up).map(|(i, _)| i) }
        })
        .collect();
    Ok(Membership { member: points.iter().all(|c| c.representative.is_some()), points })
}

/// Where a separating pair was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessSource {
    /// `C = B` itself, `g` the identity.
    Automorphism,
    /// `C` is the FSI member whose dual is representative `index`.
    Representative { index: usize },
}

/// Two different Esakia maps `g, h: Y → B_*` that agree modulo the subalgebra's partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpicWitness {
    pub source: WitnessSource,
    /// Dual of the separating algebra `C`.
    pub c_dual: FinitePoset,
    pub g: EsakiaMap,
    pub h: EsakiaMap,
    /// Least point of `Y` where `g` and `h` differ.
    pub differ_at: usize,
}

impl EpicWitness {
    /// Re-check the witness against `B_*` and the partition `r` of the subalgebra.
    pub fn verify(&self, b_dual: &FinitePoset, r: &CorrectPartition) -> std::result::Result<(), String> {
        is_esakia_morphism(&self.g.map, &self.c_dual, b_dual).map_err(|e| format!("g: {e}"))?;
        is_esakia_morphism(&self.h.map, &self.c_dual, b_dual).map_err(|e| format!("h: {e}"))?;
        if let Some(y) = (0..self.c_dual.len()).find(|&y| !r.related(self.g.map[y], self.h.map[y])) {
            return Err(format!("g({y}) and h({y}) lie in different classes"));
        }
        if self.g.map.get(self.differ_at) == self.h.map.get(self.differ_at) {
            return Err(format!("g and h agree at {}", self.differ_at));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpicVerdict {
    pub epic: bool,
    pub witness: Option<EpicWitness>,
}

/// Whether the subalgebra `a` of `b` is `v`-epic, with a separating pair when it is not.
pub fn is_epic(b: &HeytingAlgebra, a: &SubalgebraHandle, v: &VarietyPresentation) -> Result<EpicVerdict> {
    if a.parent_len() != b.len() {
        return Err(Error::invalid("the subalgebra does not belong to this algebra"));
    }
    let x = dual_space(b)?.poset.without_labels();
    if x.len() > MAX_EPIC_POINTS {
        return Err(Error::cap(format!("epic checks support duals of at most {MAX_EPIC_POINTS} points")));
    }
    let m = contains_dual(v, &x)?;
    if !m.member {
        return Err(Error::precondition(format!(
            "the algebra is not in the variety (point {} fails)",
            m.failing_point().unwrap_or(0)
        )));
    }
    let r = subalgebra_to_partition(b, a)?;
    epic_on_dual(&x, &r, fsi_representatives(v)?)
}

fn epic_on_dual(x: &FinitePoset, r: &CorrectPartition, reps: &[FinitePoset]) -> Result<EpicVerdict> {
    let class = r.class_of();
    if let Some(h) = related_automorphism(x, &class) {
        let differ_at = (0..x.len()).find(|&p| h[p] != p).expect("nontrivial");
        return Ok(EpicVerdict {
            epic: false,
            witness: Some(EpicWitness {
                source: WitnessSource::Automorphism,
                c_dual: x.clone(),
                g: EsakiaMap { map: (0..x.len()).collect() },
                h: EsakiaMap { map: h },
                differ_at,
            }),
        });
    }
    for (index, y) in reps.iter().enumerate() {
        if let Some((g, h)) = separating_pair(y, x, &class) {
            let differ_at = (0..y.len()).find(|&p| g[p] != h[p]).expect("separating");
            return Ok(EpicVerdict {
                epic: false,
                witness: Some(EpicWitness {
                    source: WitnessSource::Representative { index },
                    c_dual: y.clone(),
                    g: EsakiaMap { map: g },
                    h: EsakiaMap { map: h },
                    differ_at,
                }),
            });
        }
    }
    Ok(EpicVerdict { epic: true, witness: None })
}

/// First non-identity automorphism of `x`, in top-down search order, that maps every
/// point into its own class.
fn related_automorphism(x: &FinitePoset, class: &[usize]) -> Option<Vec<usize>> {
    let mut order = x.linear_extension();
    order.reverse();
    let mut h = vec![usize::MAX; x.len()];
    let mut used = 0u64;
    fn rec(x: &FinitePoset, class: &[usize], order: &[usize], k: usize, h: &mut Vec<usize>, used: &mut u64) -> bool {
        if k == order.len() {
            return h.iter().enumerate().any(|(p, &q)| p != q);
        }
        let p = order[k];
        for u in 0..x.len() {
            if *used & (1u64 << u) == 0 && class[u] == class[p] && extend_ok(x, x, h, p, u) {
                h[p] = u;
                *used |= 1u64 << u;
                if rec(x, class, order, k + 1, h, used) {
                    return true;
                }
                *used &= !(1u64 << u);
            }
        }
        h[p] = usize::MAX;
        false
    }
    rec(x, class, &order, 0, &mut h, &mut used).then_some(h)
}

/// First pair of different Esakia maps `y → x` related pointwise by `class`, built
/// together from the top of `y` down.
fn separating_pair(y: &FinitePoset, x: &FinitePoset, class: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut order = y.linear_extension();
    order.reverse();
    let mut g = vec![usize::MAX; y.len()];
    let mut h = vec![usize::MAX; y.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        y: &FinitePoset,
        x: &FinitePoset,
        class: &[usize],
        order: &[usize],
        k: usize,
        g: &mut Vec<usize>,
        h: &mut Vec<usize>,
        split: bool,
    ) -> bool {
        if k == order.len() {
            return split;
        }
        let p = order[k];
        for t in 0..x.len() {
            if !extend_ok(y, x, g, p, t) {
                continue;
            }
            g[p] = t;
            for u in 0..x.len() {
                if class[u] == class[t] && extend_ok(y, x, h, p, u) {
                    h[p] = u;
                    if rec(y, x, class, order, k + 1, g, h, split || t != u) {
                        return true;
                    }
                }
            }
        }
        g[p] = usize::MAX;
        h[p] = usize::MAX;
        false
    }
    rec(y, x, class, &order, 0, &mut g, &mut h, false).then_some((g, h))
}

/// One `(B, A)` pair examined by [`es_property`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EsLogEntry {
    /// Index into [`fsi_representatives`]; `B` is the algebra of upsets of that poset.
    pub representative: usize,
    pub subalgebra: Vec<Elem>,
    pub partition: CorrectPartition,
    pub verdict: EpicVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EsReport {
    pub holds: bool,
    pub representatives: Vec<FinitePoset>,
    pub log: Vec<EsLogEntry>,
}

/// The ES property of `v`: no FSI member has a proper `v`-epic subalgebra.
pub fn es_property(v: &VarietyPresentation) -> Result<EsReport> {
    let reps = fsi_representatives(v)?;
    if let Some(big) = reps.iter().find(|r| r.len() > MAX_EPIC_POINTS) {
        return Err(Error::cap(format!("an FSI member has a dual of {} points", big.len())));
    }
    let mut tasks = Vec::new();
    for (i, y) in reps.iter().enumerate() {
        let b = HeytingAlgebra::from_upsets(y)?;
        for a in enumerate_subalgebras(&b)? {
            if a.is_proper() {
                let r = subalgebra_to_partition(&b, &a)?;
                tasks.push((i, a.members().to_vec(), r));
            }
        }
    }
    let log: Vec<EsLogEntry> = tasks
        .into_par_iter()
        .map(|(i, members, r)| {
            debug_assert!(is_correct_partition(&r, &reps[i]).is_ok());
            let verdict = epic_on_dual(&reps[i], &r, reps)?;
            Ok(EsLogEntry { representative: i, subalgebra: members, partition: r, verdict })
        })
        .collect::<Result<_>>()?;
    Ok(EsReport { holds: log.iter().all(|e| !e.verdict.epic), representatives: reps.to_vec(), log })
}

/// Summands of the test sums `A_1 + ... + A_n + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KgSummand {
    /// The four-element Boolean algebra, dual of the 2-antichain.
    D2,
    /// The algebra of upsets of `X_2`.
    X2,
}

impl KgSummand {
    pub fn dual(self) -> FinitePoset {
        match self {
            KgSummand::D2 => FinitePoset::antichain(2),
            KgSummand::X2 => x_n_space(2).without_labels(),
        }
    }

    pub fn algebra(self) -> HeytingAlgebra {
        HeytingAlgebra::from_upsets(&self.dual()).expect("small dual")
    }
}

/// The algebra `A_1 + ... + A_n + 2`.
pub fn kg_test_sum(parts: &[KgSummand]) -> HeytingAlgebra {
    let mut algs: Vec<HeytingAlgebra> = parts.iter().map(|s| s.algebra()).collect();
    algs.push(HeytingAlgebra::bool2());
    HeytingAlgebra::sum_of(&algs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KgSumMembership {
    pub summands: Vec<KgSummand>,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KgLevel {
    pub n: usize,
    pub sums: Vec<KgSumMembership>,
    /// No sum at this level is a member.
    pub excluded: bool,
}

/// Result of the certificate search. `certificate = Some(n)` means every sum
/// `A_1 + ... + A_n + 2` is excluded, which is sufficient for the ES property when the
/// variety lies inside the variety generated by finite sums of one-generated algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KgCertificate {
    pub certificate: Option<usize>,
    pub levels: Vec<KgLevel>,
    /// Every level after an excluded level is excluded too.
    pub monotone: bool,
}

/// Test membership of all `2^n` sums `A_1 + ... + A_n + 2` for `n = 1..=n_max`.
pub fn kg_es_certificate(v: &VarietyPresentation, n_max: usize) -> Result<KgCertificate> {
    if n_max == 0 || n_max > MAX_KG_LEVEL {
        return Err(Error::cap(format!("the level bound must lie in 1..={MAX_KG_LEVEL}")));
    }
    fsi_representatives(v)?;
    let mut levels = Vec::new();
    for n in 1..=n_max {
        let sums = (0..1usize << n)
            .into_par_iter()
            .map(|code| {
                let summands: Vec<KgSummand> = (0..n)
                    .map(|i| if code >> (n - 1 - i) & 1 == 0 { KgSummand::D2 } else { KgSummand::X2 })
                    .collect();
                let member = contains(v, &kg_test_sum(&summands))?.member;
                Ok(KgSumMembership { summands, member })
            })
            .collect::<Result<Vec<_>>>()?;
        let excluded = sums.iter().all(|s| !s.member);
        levels.push(KgLevel { n, sums, excluded });
    }
    let certificate = levels.iter().find(|l| l.excluded).map(|l| l.n);
    let monotone = levels.windows(2).all(|w| !w[0].excluded || w[1].excluded);
    Ok(KgCertificate { certificate, levels, monotone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{enumerate_esakia_morphisms, prime_filters};
    use crate::poset::{are_isomorphic, enumerate_posets_up_to};

    fn v_of(p: &FinitePoset) -> VarietyPresentation {
        VarietyPresentation::single(HeytingAlgebra::from_upsets(p).unwrap()).unwrap()
    }

    /// All upsets, all partitions, keep the rooted quotients.
    fn reps_oracle(v: &VarietyPresentation) -> Vec<FinitePoset> {
        let mut classes = IsoClasses::new();
        for p in v.generator_duals() {
            for u in p.all_upsets() {
                let (q, _) = p.restrict(u);
                for r in enumerate_correct_partitions(&q).unwrap() {
                    let (z, _) = quotient_space(&q, &r).unwrap();
                    if z.is_rooted() {
                        classes.insert(z);
                    }
                }
            }
        }
        classes.into_reps()
    }

    fn same_classes(a: &[FinitePoset], b: &[FinitePoset]) -> bool {
        a.len() == b.len() && a.iter().all(|p| b.iter().any(|q| are_isomorphic(p, q).is_some()))
    }

    #[test]
    fn representative_examples() {
        let one = FinitePoset::chain(1);
        let reps = fsi_representatives(&v_of(&one)).unwrap().to_vec();
        assert_eq!(reps, vec![one.clone()]);
        let reps = fsi_representatives(&v_of(&FinitePoset::antichain(2))).unwrap().to_vec();
        assert_eq!(reps, vec![one.clone()]);
        let reps = fsi_representatives(&v_of(&FinitePoset::chain(2))).unwrap().to_vec();
        assert_eq!(reps, vec![one, FinitePoset::chain(2)]);
    }

    #[test]
    fn principal_upsets_match_all_upsets() {
        for p in enumerate_posets_up_to(5).unwrap().into_iter().filter(|p| !p.is_empty()) {
            let v = v_of(&p);
            assert!(same_classes(fsi_representatives(&v).unwrap(), &reps_oracle(&v)), "{p:?}");
        }
    }

    #[test]
    fn membership_examples() {
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let v = VarietyPresentation::single(d.clone()).unwrap();
        assert!(contains(&v, &d).unwrap().member);
        let m = contains(&v, &HeytingAlgebra::chain(3)).unwrap();
        assert!(!m.member);
        assert_eq!(m.failing_point(), Some(0));
        let two = HeytingAlgebra::bool2();
        let big = VarietyPresentation::single(HeytingAlgebra::sum_of(&[two.clone(), d.clone(), two.clone()])).unwrap();
        assert!(contains(&big, &d.alg_sum(&two)).unwrap().member);
        // Prime filters and provenance give the same verdict.
        let c4 = HeytingAlgebra::chain(4).without_provenance();
        assert_eq!(
            contains(&big, &c4).unwrap().member,
            contains(&big, &HeytingAlgebra::from_upsets(&prime_filters(&c4).unwrap()).unwrap()).unwrap().member
        );
    }

    #[test]
    fn representatives_are_members() {
        for p in enumerate_posets_up_to(4).unwrap().into_iter().filter(|p| !p.is_empty()) {
            let v = v_of(&p);
            for r in fsi_representatives(&v).unwrap() {
                assert!(r.is_rooted());
                let m = contains(&v, &HeytingAlgebra::from_upsets(r).unwrap()).unwrap();
                assert!(m.member);
            }
        }
    }

    #[test]
    fn epic_examples() {
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let v = VarietyPresentation::single(d.clone()).unwrap();
        let whole = SubalgebraHandle::whole(&d);
        assert!(is_epic(&d, &whole, &v).unwrap().epic);
        let bounds = d.subalgebra_generated(&[]);
        assert_eq!(bounds.len(), 2);
        let verdict = is_epic(&d, &bounds, &v).unwrap();
        assert!(!verdict.epic);
        let w = verdict.witness.unwrap();
        assert_eq!(w.source, WitnessSource::Automorphism);
        assert_eq!(w.g.map, vec![0, 1]);
        assert_eq!(w.h.map, vec![1, 0]);
        let x = dual_space(&d).unwrap().poset;
        w.verify(&x, &subalgebra_to_partition(&d, &bounds).unwrap()).unwrap();
        let c3 = HeytingAlgebra::chain(3);
        assert!(matches!(is_epic(&c3, &SubalgebraHandle::whole(&c3), &v), Err(Error::Precondition(_))));
    }

    /// Brute force over all pairs of Esakia maps from each representative.
    fn epic_oracle(x: &FinitePoset, r: &CorrectPartition, reps: &[FinitePoset]) -> bool {
        reps.iter().all(|y| {
            let maps = enumerate_esakia_morphisms(y, x).unwrap();
            maps.iter().all(|g| {
                maps.iter().all(|h| g == h || (0..y.len()).any(|p| !r.related(g.map[p], h.map[p])))
            })
        })
    }

    #[test]
    fn epic_search_matches_oracle() {
        for p in enumerate_posets_up_to(4).unwrap().into_iter().filter(|p| !p.is_empty()) {
            let v = v_of(&p);
            let reps = fsi_representatives(&v).unwrap();
            for y in reps {
                let b = HeytingAlgebra::from_upsets(y).unwrap();
                for a in enumerate_subalgebras(&b).unwrap() {
                    let r = subalgebra_to_partition(&b, &a).unwrap();
                    let verdict = is_epic(&b, &a, &v).unwrap();
                    assert_eq!(verdict.epic, epic_oracle(y, &r, reps));
                    if let Some(w) = verdict.witness {
                        w.verify(y, &r).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn es_examples() {
        for g in [HeytingAlgebra::bool2(), HeytingAlgebra::chain(4)] {
            assert!(es_property(&VarietyPresentation::single(g).unwrap()).unwrap().holds);
        }
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let report = es_property(&VarietyPresentation::single(d.alg_sum(&d)).unwrap()).unwrap();
        assert!(report.holds);
        assert!(!report.log.is_empty());
        assert!(report.log.iter().all(|e| e.verdict.witness.is_some()));
    }

    #[test]
    fn kg_examples() {
        let two = VarietyPresentation::single(HeytingAlgebra::bool2()).unwrap();
        let c = kg_es_certificate(&two, 2).unwrap();
        assert_eq!(c.certificate, Some(1));
        assert!(c.monotone);
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let v = VarietyPresentation::single(d.alg_sum(&HeytingAlgebra::bool2())).unwrap();
        let c = kg_es_certificate(&v, 3).unwrap();
        assert!(c.levels[0].sums[0].member);
        assert_eq!(c.certificate, Some(2));
        assert!(c.monotone);
        assert!(kg_es_certificate(&v, 5).is_err());
    }

    #[test]
    fn kg_sum_sizes() {
        assert_eq!(kg_test_sum(&[KgSummand::D2]).len(), 5);
        assert_eq!(kg_test_sum(&[KgSummand::X2]).len(), 9);
        assert_eq!(KgSummand::X2.algebra().len(), 8);
    }
}
