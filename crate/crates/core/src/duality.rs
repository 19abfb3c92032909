//! Esakia duality for finite algebras and finite posets.
//!
//! Finite Esakia spaces carry the discrete topology, so every subset is clopen. For a
//! correct partition this makes the separation condition automatic: given unrelated
//! points, the saturation of a singleton class is a clopen union of classes that
//! separates them. Only the back condition is therefore checked.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Elem, HeytingAlgebra, SubalgebraHandle};
use crate::error::{Error, Result};
use crate::poset::{bits, FinitePoset, Mask, Upset};

/// Dual space of an algebra together with the map sending each element to its upset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSpace {
    pub poset: FinitePoset,
    /// `gamma[e]` is the set of points (prime filters) containing element `e`.
    pub gamma: Vec<Upset>,
}

/// Prime filters of `a` ordered by inclusion, computed from the tables alone.
///
/// In a finite lattice every filter is `↑x`; it is prime and proper exactly when `x`
/// is join-prime. Points are listed in increasing order of their generator.
pub fn prime_filter_space(a: &HeytingAlgebra) -> Result<DualSpace> {
    let m = a.len();
    let gens: Vec<Elem> = (0..m)
        .into_par_iter()
        .filter(|&x| {
            x != a.bottom()
                && (0..m).all(|u| (0..m).all(|v| !a.leq(x, a.join(u, v)) || a.leq(x, u) || a.leq(x, v)))
        })
        .collect();
    if gens.len() > 64 {
        return Err(Error::cap(format!("{} prime filters exceed 64 points", gens.len())));
    }
    // ↑j ⊆ ↑k  iff  k ≤ j.
    let up: Vec<Mask> = gens
        .iter()
        .map(|&j| gens.iter().enumerate().filter(|&(_, &k)| a.leq(k, j)).fold(0, |acc, (q, _)| acc | (1u64 << q)))
        .collect();
    let mut poset = FinitePoset::from_up_masks(up).map_err(Error::from)?;
    if a.labels().is_some() {
        poset = poset.with_labels(gens.iter().map(|&j| format!("^{}", a.label(j))).collect()).unwrap();
    }
    let gamma = a
        .elements()
        .map(|x| gens.iter().enumerate().filter(|&(_, &j)| a.leq(j, x)).fold(0, |acc, (q, _)| acc | (1u64 << q)))
        .collect();
    Ok(DualSpace { poset, gamma })
}

/// The dual poset `A_*` (prime filters under inclusion).
pub fn prime_filters(a: &HeytingAlgebra) -> Result<FinitePoset> {
    prime_filter_space(a).map(|d| d.poset)
}

/// The working dual of `a`: the recorded poset when `a` was built from upsets,
/// otherwise the prime filter space.
pub fn dual_space(a: &HeytingAlgebra) -> Result<DualSpace> {
    match a.provenance() {
        Some(p) => Ok(DualSpace { poset: p.dual.clone(), gamma: p.upsets.clone() }),
        None => prime_filter_space(a),
    }
}

/// `X*`, the algebra of upsets of `x`.
pub fn dual_algebra(x: &FinitePoset) -> Result<HeytingAlgebra> {
    HeytingAlgebra::from_upsets(x)
}

/// A point map between finite posets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EsakiaMap {
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismViolation {
    #[error("map has {0} entries for {1} points")]
    NotTotal(usize, usize),
    #[error("image of {0} is out of range")]
    OutOfRange(usize),
    #[error("order not preserved: {0} <= {1} but images are not ordered")]
    OrderPreservation(usize, usize),
    #[error("back condition fails: f({x}) <= {y} but no z >= {x} maps to {y}")]
    BackCondition { x: usize, y: usize },
}

/// Order preservation plus the back condition: `f(x) ≤ y` implies `y = f(z)` for some `z ≥ x`.
pub fn is_esakia_morphism(f: &[usize], x: &FinitePoset, y: &FinitePoset) -> std::result::Result<(), MorphismViolation> {
    if f.len() != x.len() {
        return Err(MorphismViolation::NotTotal(f.len(), x.len()));
    }
    if let Some(p) = (0..x.len()).find(|&p| f[p] >= y.len()) {
        return Err(MorphismViolation::OutOfRange(p));
    }
    for p in 0..x.len() {
        for q in bits(x.up(p)) {
            if !y.leq(f[p], f[q]) {
                return Err(MorphismViolation::OrderPreservation(p, q));
            }
        }
    }
    for p in 0..x.len() {
        let image = bits(x.up(p)).fold(0u64, |acc, q| acc | (1u64 << f[q]));
        let missing = y.up(f[p]) & !image;
        if missing != 0 {
            return Err(MorphismViolation::BackCondition { x: p, y: missing.trailing_zeros() as usize });
        }
    }
    Ok(())
}

/// Largest side accepted by [`enumerate_esakia_morphisms`].
pub const MAX_MORPHISM_POINTS: usize = 16;

/// Every Esakia morphism `x → y`, in lexicographic order of the map vectors.
pub fn enumerate_esakia_morphisms(x: &FinitePoset, y: &FinitePoset) -> Result<Vec<EsakiaMap>> {
    if x.len() > MAX_MORPHISM_POINTS || y.len() > MAX_MORPHISM_POINTS {
        return Err(Error::cap(format!("morphism enumeration supports at most {MAX_MORPHISM_POINTS} points per side")));
    }
    let mut order = x.linear_extension();
    order.reverse();
    let mut f = vec![usize::MAX; x.len()];
    let mut out = Vec::new();
    morph_rec(x, y, &order, 0, &mut f, &mut out);
    out.sort();
    Ok(out)
}

/// Whether `t` is an admissible value for `f(p)` given the already assigned strict upper bounds of `p`.
#[inline]
pub(crate) fn extend_ok(x: &FinitePoset, y: &FinitePoset, f: &[usize], p: usize, t: usize) -> bool {
    let strict = x.up(p) & !(1u64 << p);
    let mut image = 1u64 << t;
    for q in bits(strict) {
        if !y.leq(t, f[q]) {
            return false;
        }
        image |= 1u64 << f[q];
    }
    y.up(t) & !image == 0
}

fn morph_rec(x: &FinitePoset, y: &FinitePoset, order: &[usize], k: usize, f: &mut Vec<usize>, out: &mut Vec<EsakiaMap>) {
    if k == order.len() {
        out.push(EsakiaMap { map: f.clone() });
        return;
    }
    let p = order[k];
    for t in 0..y.len() {
        if extend_ok(x, y, f, p, t) {
            f[p] = t;
            morph_rec(x, y, order, k + 1, f, out);
        }
    }
    f[p] = usize::MAX;
}

/// The homomorphism `Y* → X*` dual to an Esakia map `f: X → Y`, `U ↦ f⁻¹(U)`,
/// between the upset algebras in canonical element order.
pub fn dual_homomorphism(f: &[usize], x: &FinitePoset, y: &FinitePoset) -> Vec<Elem> {
    let ux = x.all_upsets();
    y.all_upsets()
        .into_iter()
        .map(|u| {
            let pre = (0..x.len()).filter(|&p| u & (1u64 << f[p]) != 0).fold(0u64, |a, p| a | (1u64 << p));
            ux.binary_search_by_key(&(pre.count_ones(), pre), |&v| (v.count_ones(), v)).expect("preimage of an upset")
        })
        .collect()
}

/// An equivalence relation on the points of a finite poset, stored as sorted classes
/// listed by their least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CorrectPartition {
    pub classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("back condition fails: {x} ~ {y} and {x} <= {z}, but no w >= {y} has w ~ {z}")]
pub struct PartitionViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl CorrectPartition {
    /// Canonicalise `classes` after checking they partition `0..n`.
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut cls: Vec<Vec<usize>> = Vec::new();
        for mut c in classes {
            if c.is_empty() {
                continue;
            }
            c.sort_unstable();
            c.dedup();
            for &p in &c {
                if p >= n || seen[p] {
                    return Err(Error::invalid(format!("point {p} is out of range or in two classes")));
                }
                seen[p] = true;
            }
            cls.push(c);
        }
        if let Some(p) = seen.iter().position(|&s| !s) {
            return Err(Error::invalid(format!("point {p} is in no class")));
        }
        cls.sort();
        Ok(CorrectPartition { classes: cls })
    }

    pub fn identity(n: usize) -> Self {
        CorrectPartition { classes: (0..n).map(|p| vec![p]).collect() }
    }

    /// From a class id per point.
    pub fn from_ids(ids: &[usize]) -> Self {
        let k = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); k];
        for (p, &c) in ids.iter().enumerate() {
            classes[c].push(p);
        }
        Self::new(ids.len(), classes).expect("ids describe a partition")
    }

    pub fn len(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Class index of each point.
    pub fn class_of(&self) -> Vec<usize> {
        let mut v = vec![0; self.len()];
        for (k, c) in self.classes.iter().enumerate() {
            for &p in c {
                v[p] = k;
            }
        }
        v
    }

    pub fn class_masks(&self) -> Vec<Mask> {
        self.classes.iter().map(|c| c.iter().fold(0, |a, &p| a | (1u64 << p))).collect()
    }

    pub fn related(&self, p: usize, q: usize) -> bool {
        let c = self.class_of();
        c[p] == c[q]
    }

    /// Restriction to the points of `s`, renumbered in increasing order.
    pub fn restrict(&self, s: Mask) -> CorrectPartition {
        let old: Vec<usize> = bits(s).collect();
        let class = self.class_of();
        let mut ids = Vec::with_capacity(old.len());
        let mut seen: Vec<Option<usize>> = vec![None; self.num_classes()];
        let mut next = 0;
        for &p in &old {
            let c = class[p];
            let id = *seen[c].get_or_insert_with(|| {
                next += 1;
                next - 1
            });
            ids.push(id);
        }
        Self::from_ids(&ids)
    }
}

/// The back condition: `x R y` and `x ≤ z` imply `z R w` for some `w ≥ y`.
pub fn is_correct_partition(r: &CorrectPartition, x: &FinitePoset) -> std::result::Result<(), PartitionViolation> {
    assert_eq!(r.len(), x.len(), "partition and poset sizes differ");
    let class = r.class_of();
    let masks = r.class_masks();
    for c in &r.classes {
        for &a in c {
            for &b in c {
                for z in bits(x.up(a)) {
                    if masks[class[z]] & x.up(b) == 0 {
                        return Err(PartitionViolation { x: a, y: b, z });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `X/R`: classes ordered by `C ≤ D` iff some member of `C` is below some member of `D`.
/// Fails if that relation is not a partial order. Also returns the quotient map.
pub fn quotient_space(x: &FinitePoset, r: &CorrectPartition) -> Result<(FinitePoset, Vec<usize>)> {
    if r.len() != x.len() {
        return Err(Error::invalid("partition and poset sizes differ"));
    }
    let class = r.class_of();
    let up: Vec<Mask> = r
        .classes
        .iter()
        .map(|c| c.iter().flat_map(|&p| bits(x.up(p))).fold(0u64, |a, q| a | (1u64 << class[q])))
        .collect();
    let mut q = FinitePoset::from_up_masks(up).map_err(|e| Error::invalid(format!("quotient order: {e}")))?;
    if x.labels().is_some() {
        let labels = r
            .classes
            .iter()
            .map(|c| c.iter().map(|&p| x.label(p)).collect::<Vec<_>>().join("~"))
            .collect();
        q = q.with_labels(labels).unwrap();
    }
    Ok((q, class))
}

/// The correct partition on the dual of `b` induced by the subalgebra `a`:
/// points are related when they contain the same members of `a`.
pub fn subalgebra_to_partition(b: &HeytingAlgebra, a: &SubalgebraHandle) -> Result<CorrectPartition> {
    let d = dual_space(b)?;
    let n = d.poset.len();
    let keys: Vec<Vec<bool>> = (0..n)
        .map(|p| a.members().iter().map(|&e| d.gamma[e] & (1u64 << p) != 0).collect())
        .collect();
    let mut ids = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for p in 0..n {
        ids[p] = match reps.iter().position(|&r| keys[r] == keys[p]) {
            Some(k) => k,
            None => {
                reps.push(p);
                reps.len() - 1
            }
        };
    }
    Ok(CorrectPartition::from_ids(&ids))
}

/// Elements of `b` whose upsets are unions of classes of `r` (a partition of the dual of `b`).
pub fn partition_to_subalgebra(b: &HeytingAlgebra, r: &CorrectPartition) -> Result<SubalgebraHandle> {
    let d = dual_space(b)?;
    if r.len() != d.poset.len() {
        return Err(Error::invalid("partition does not match the dual of the algebra"));
    }
    let masks = r.class_masks();
    let members: Vec<Elem> = b
        .elements()
        .filter(|&e| masks.iter().all(|&c| d.gamma[e] & c == 0 || d.gamma[e] & c == c))
        .collect();
    SubalgebraHandle::new(b, &members)
}

/// Largest space accepted by [`enumerate_correct_partitions`].
pub const MAX_PARTITION_POINTS: usize = 10;

/// Every correct partition of `x`, in lexicographic order of restricted growth strings.
pub fn enumerate_correct_partitions(x: &FinitePoset) -> Result<Vec<CorrectPartition>> {
    let n = x.len();
    if n > MAX_PARTITION_POINTS {
        return Err(Error::cap(format!("partition enumeration supports at most {MAX_PARTITION_POINTS} points")));
    }
    let mut out = Vec::new();
    let mut ids = vec![0usize; n];
    rgs_rec(x, 0, 0, &mut ids, &mut out);
    Ok(out)
}

fn rgs_rec(x: &FinitePoset, k: usize, used: usize, ids: &mut Vec<usize>, out: &mut Vec<CorrectPartition>) {
    if k == ids.len() {
        let r = CorrectPartition::from_ids(ids);
        if is_correct_partition(&r, x).is_ok() {
            out.push(r);
        }
        return;
    }
    for c in 0..=used {
        ids[k] = c;
        rgs_rec(x, k + 1, used.max(c + 1), ids, out);
    }
}

/// Every subalgebra of `b`, through the correct partitions of its dual.
pub fn enumerate_subalgebras(b: &HeytingAlgebra) -> Result<Vec<SubalgebraHandle>> {
    let d = dual_space(b)?;
    enumerate_correct_partitions(&d.poset)?
        .iter()
        .map(|r| partition_to_subalgebra(b, r))
        .collect()
}

/// A congruence given by an upset `U` of the dual: the quotient is `U*` and `map` sends
/// each element `e` of the algebra to the class `γ(e) ∩ U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub upset: Upset,
    pub quotient: HeytingAlgebra,
    pub map: Vec<Elem>,
}

/// Largest dual accepted by [`congruences_via_upsets`].
pub const MAX_CONGRUENCE_POINTS: usize = 12;

/// One congruence per upset of the dual, in canonical upset order.
pub fn congruences_via_upsets(a: &HeytingAlgebra) -> Result<Vec<Congruence>> {
    let d = dual_space(a)?;
    if d.poset.len() > MAX_CONGRUENCE_POINTS {
        return Err(Error::cap(format!("congruence enumeration supports duals of at most {MAX_CONGRUENCE_POINTS} points")));
    }
    d.poset
        .all_upsets()
        .into_iter()
        .map(|u| {
            let (sub, old) = d.poset.restrict(u);
            let quotient = HeytingAlgebra::from_upsets(&sub)?;
            let ups = &quotient.provenance().expect("upset algebra").upsets;
            let map = a
                .elements()
                .map(|e| {
                    let g = d.gamma[e] & u;
                    let local = old.iter().enumerate().filter(|&(_, &p)| g & (1u64 << p) != 0).fold(0u64, |acc, (k, _)| acc | (1u64 << k));
                    ups.binary_search_by_key(&(local.count_ones(), local), |&v| (v.count_ones(), v)).expect("restricted upset")
                })
                .collect();
            Ok(Congruence { upset: u, quotient, map })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrickWidthError {
    #[error("not an Esakia morphism: {0}")]
    NotEsakia(MorphismViolation),
    #[error("domain has no minimum")]
    NoMinimum,
    #[error("{space} has width {width} > {n}")]
    WidthExceeded { space: &'static str, width: usize, n: usize },
    #[error("point {z} lies in no antichain of {n} elements inside the upset of f(min)")]
    NoAntichain { z: usize, n: usize },
    #[error("preimage of {z} is not a chain: {a} and {c} are incomparable")]
    NotChain { z: usize, a: usize, c: usize },
    #[error("restriction is not a poset isomorphism")]
    NotIsomorphism,
}

/// Result of [`trick_width_subposet`]: `f` restricted to `z` is an order isomorphism onto `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrickWidth {
    pub z: Vec<usize>,
    pub target: Vec<usize>,
}

/// Given an Esakia map `f: Y → X` between spaces of width at most `n`, with `Y` rooted at
/// `⊥` and every `z > f(⊥)` (other than the maximum of `X`) inside an `n`-antichain of
/// `↑f(⊥)`, return `Z = {max f⁻¹(z)} ∪ {⊥}` together with a checked isomorphism onto
/// `↑f(⊥)` minus the maximum of `X`.
pub fn trick_width_subposet(
    f: &[usize],
    y: &FinitePoset,
    x: &FinitePoset,
    n: usize,
) -> std::result::Result<TrickWidth, TrickWidthError> {
    is_esakia_morphism(f, y, x).map_err(TrickWidthError::NotEsakia)?;
    let bot = y.root().ok_or(TrickWidthError::NoMinimum)?;
    let width_ok = |space: &'static str, p: &FinitePoset| {
        let w = p.width();
        if w > n {
            Err(TrickWidthError::WidthExceeded { space, width: w, n })
        } else {
            Ok(())
        }
    };
    width_ok("codomain", x)?;
    let fb = f[bot];
    let max = x.maximum();
    let strip = |m: Mask| max.map_or(m, |t| m & !(1u64 << t));
    let target_mask = strip(x.up(fb));
    for z in bits(strip(x.up(fb) & !(1u64 << fb))) {
        if x.max_antichain_in(x.up(fb) & x.incomparable(z)) + 1 < n {
            return Err(TrickWidthError::NoAntichain { z, n });
        }
    }
    let mut zset: Mask = 1u64 << bot;
    for z in bits(target_mask & !(1u64 << fb)) {
        let pre: Vec<usize> = (0..y.len()).filter(|&a| f[a] == z).collect();
        for (i, &a) in pre.iter().enumerate() {
            for &c in &pre[i + 1..] {
                if !y.comparable(a, c) {
                    return Err(TrickWidthError::NotChain { z, a, c });
                }
            }
        }
        let top = *pre.iter().max_by_key(|&&a| y.down(a).count_ones()).expect("Esakia maps onto the upset of f(min)");
        zset |= 1u64 << top;
    }
    // Checked after the chains so that a wide domain reports the offending preimages.
    width_ok("domain", y)?;
    let zs: Vec<usize> = bits(zset).collect();
    let target: Vec<usize> = zs.iter().map(|&a| f[a]).collect();
    let onto = target.iter().fold(0u64, |acc, &t| acc | (1u64 << t));
    let reflects = zs.iter().all(|&a| zs.iter().all(|&b| y.leq(a, b) == x.leq(f[a], f[b])));
    if onto != target_mask || target.len() != zs.len() || !reflects {
        return Err(TrickWidthError::NotIsomorphism);
    }
    Ok(TrickWidth { z: zs, target })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebra_iso, is_homomorphism};
    use crate::poset::{are_isomorphic, enumerate_posets_up_to};

    #[test]
    fn prime_filter_examples() {
        assert_eq!(prime_filters(&HeytingAlgebra::bool2()).unwrap().len(), 1);
        let d = HeytingAlgebra::bool2().product(&HeytingAlgebra::bool2()).unwrap();
        assert_eq!(prime_filters(&d).unwrap(), FinitePoset::antichain(2));
        let c3 = HeytingAlgebra::chain(3).without_provenance();
        assert!(are_isomorphic(&prime_filters(&c3).unwrap(), &FinitePoset::chain(2)).is_some());
    }

    #[test]
    fn dual_algebra_examples() {
        assert_eq!(dual_algebra(&FinitePoset::empty()).unwrap().len(), 1);
        let a = dual_algebra(&FinitePoset::chain(2)).unwrap();
        assert!(algebra_iso(&a, &HeytingAlgebra::chain(3)).is_some());
    }

    #[test]
    fn morphism_examples() {
        let c2 = FinitePoset::chain(2);
        assert!(is_esakia_morphism(&[0, 1], &c2, &c2).is_ok());
        assert!(matches!(is_esakia_morphism(&[0, 0], &c2, &c2), Err(MorphismViolation::BackCondition { .. })));
        assert_eq!(enumerate_esakia_morphisms(&FinitePoset::chain(1), &c2).unwrap().len(), 1);
        assert_eq!(enumerate_esakia_morphisms(&c2, &FinitePoset::chain(1)).unwrap().len(), 1);
        let d2 = FinitePoset::antichain(2);
        assert_eq!(enumerate_esakia_morphisms(&d2, &d2).unwrap().len(), 4);
    }

    #[test]
    fn tower_fold_is_esakia() {
        let d2 = FinitePoset::antichain(2);
        let two = FinitePoset::tower(&[d2.clone(), d2.clone()], false);
        let one = FinitePoset::tower(&[d2], false);
        let verdict = is_esakia_morphism(&[0, 1, 0, 1], &two, &one);
        let brute = enumerate_esakia_morphisms(&two, &one).unwrap().contains(&EsakiaMap { map: vec![0, 1, 0, 1] });
        assert_eq!(verdict.is_ok(), brute);
    }

    #[test]
    fn partition_examples() {
        let c2 = FinitePoset::chain(2);
        let merge = CorrectPartition::new(2, vec![vec![0, 1]]).unwrap();
        assert!(is_correct_partition(&merge, &c2).is_ok());
        assert_eq!(quotient_space(&c2, &merge).unwrap().0.len(), 1);
        let c3 = FinitePoset::chain(3);
        let ends = CorrectPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        assert!(is_correct_partition(&ends, &c3).is_err());
        let id = CorrectPartition::identity(3);
        assert_eq!(quotient_space(&c3, &id).unwrap().0, c3);
        assert_eq!(enumerate_correct_partitions(&FinitePoset::chain(1)).unwrap().len(), 1);
        assert_eq!(enumerate_correct_partitions(&FinitePoset::antichain(2)).unwrap().len(), 2);
        assert_eq!(enumerate_correct_partitions(&c2).unwrap().len(), 2);
    }

    #[test]
    fn subalgebra_partition_examples() {
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let whole = SubalgebraHandle::whole(&d);
        assert!(subalgebra_to_partition(&d, &whole).unwrap().is_identity());
        let small = d.subalgebra_generated(&[]);
        assert_eq!(subalgebra_to_partition(&d, &small).unwrap().num_classes(), 1);
        assert_eq!(enumerate_subalgebras(&d).unwrap().len(), 2);
        assert_eq!(enumerate_subalgebras(&HeytingAlgebra::chain(3)).unwrap().len(), 2);
    }

    #[test]
    fn subalgebra_round_trip_small() {
        for p in enumerate_posets_up_to(4).unwrap() {
            let b = HeytingAlgebra::from_upsets(&p).unwrap();
            for r in enumerate_correct_partitions(&p).unwrap() {
                let s = partition_to_subalgebra(&b, &r).unwrap();
                assert_eq!(subalgebra_to_partition(&b, &s).unwrap(), r);
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let cs = congruences_via_upsets(&d).unwrap();
        let sizes: Vec<usize> = cs.iter().map(|c| c.quotient.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 4]);
        for c in &cs {
            assert!(is_homomorphism(&d, &c.quotient, &c.map));
        }
        assert!(algebra_iso(&cs[3].quotient, &d).is_some());
    }

    #[test]
    fn trick_width_identity_and_failure() {
        let rooted = FinitePoset::tower(&[FinitePoset::chain(1), FinitePoset::antichain(2)], false);
        let id: Vec<usize> = (0..3).collect();
        let t = trick_width_subposet(&id, &rooted, &rooted, 2).unwrap();
        assert_eq!(t.z, vec![0, 1, 2]);
        // Width 3 domain over a width 2 codomain.
        let wide = FinitePoset::tower(&[FinitePoset::chain(1), FinitePoset::antichain(3)], false);
        let f = [0, 1, 2, 2];
        assert!(is_esakia_morphism(&f, &wide, &rooted).is_ok());
        assert!(matches!(
            trick_width_subposet(&f, &wide, &rooted, 2),
            Err(TrickWidthError::NotChain { z: 2, a: 2, c: 3 })
        ));
    }
}
