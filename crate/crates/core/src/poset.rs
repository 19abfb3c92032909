//! Finite posets over at most 64 points, with subsets encoded as `u64` masks.
//!
//! A finite poset with the discrete topology is exactly a finite Esakia space,
//! so this type doubles as the space side of the duality.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::error::{Error, Result};

/// Hard limit on the number of points; subsets must fit in one machine word.
pub const MAX_POINTS: usize = 64;

/// A set of points encoded as a bit mask over point indices.
pub type Mask = u64;

/// An upward closed point set. Kept as a plain mask; see [`FinitePoset::is_upset`].
pub type Upset = Mask;

/// Iterate the indices of the set bits of `m` in increasing order.
pub fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Mask with the lowest `n` bits set.
pub fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn bit(i: usize) -> Mask {
    1u64 << i
}

/// Why a relation failed to be a partial order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderViolation {
    #[error("too many points: {0} > {MAX_POINTS}")]
    TooLarge(usize),
    #[error("relation is not square")]
    NotSquare,
    #[error("reflexivity fails at {0}")]
    Reflexivity(usize),
    #[error("antisymmetry fails for ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("transitivity fails for ({0}, {1}, {2})")]
    Transitivity(usize, usize, usize),
    #[error("cover ({0}, {1}) refers to a missing point")]
    OutOfRange(usize, usize),
    #[error("label count {0} does not match point count {1}")]
    Labels(usize, usize),
}

impl From<OrderViolation> for Error {
    fn from(v: OrderViolation) -> Self {
        match v {
            OrderViolation::TooLarge(_) => Error::Cap(v.to_string()),
            _ => Error::Invalid(v.to_string()),
        }
    }
}

/// A finite partial order on points `0..n`.
///
/// `up[i]` is the mask of `↑i`, `down[i]` the mask of `↓i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    up: Vec<Mask>,
    down: Vec<Mask>,
    labels: Option<Vec<String>>,
}

impl FinitePoset {
    /// Check the partial order axioms on an explicit `n × n` relation.
    pub fn validate(rel: &[Vec<bool>]) -> std::result::Result<Self, OrderViolation> {
        let n = rel.len();
        if n > MAX_POINTS {
            return Err(OrderViolation::TooLarge(n));
        }
        if rel.iter().any(|row| row.len() != n) {
            return Err(OrderViolation::NotSquare);
        }
        let mut up = vec![0; n];
        for (i, row) in rel.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b {
                    up[i] |= bit(j);
                }
            }
        }
        Self::from_up_masks(up)
    }

    /// Build from the masks `↑i`, checking the axioms.
    pub fn from_up_masks(up: Vec<Mask>) -> std::result::Result<Self, OrderViolation> {
        let n = up.len();
        if n > MAX_POINTS {
            return Err(OrderViolation::TooLarge(n));
        }
        let full = full_mask(n);
        for i in 0..n {
            if up[i] & !full != 0 {
                return Err(OrderViolation::OutOfRange(i, (up[i] & !full).trailing_zeros() as usize));
            }
            if up[i] & bit(i) == 0 {
                return Err(OrderViolation::Reflexivity(i));
            }
        }
        for i in 0..n {
            for j in bits(up[i]) {
                if j != i && up[j] & bit(i) != 0 {
                    return Err(OrderViolation::Antisymmetry(i.min(j), i.max(j)));
                }
                if up[j] & !up[i] != 0 {
                    let k = (up[j] & !up[i]).trailing_zeros() as usize;
                    return Err(OrderViolation::Transitivity(i, j, k));
                }
            }
        }
        Ok(Self::from_trusted_up(up))
    }

    fn from_trusted_up(up: Vec<Mask>) -> Self {
        let n = up.len();
        let mut down = vec![0; n];
        for (i, &u) in up.iter().enumerate() {
            for j in bits(u) {
                down[j] |= bit(i);
            }
        }
        FinitePoset { n, up, down, labels: None }
    }

    /// Reflexive-transitive closure of a cover list; `(i, j)` means `i` is below `j`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> std::result::Result<Self, OrderViolation> {
        if n > MAX_POINTS {
            return Err(OrderViolation::TooLarge(n));
        }
        let mut up: Vec<Mask> = (0..n).map(bit).collect();
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(OrderViolation::OutOfRange(i, j));
            }
            up[i] |= bit(j);
        }
        // Warshall on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i] & bit(k) != 0 {
                    up[i] |= up[k];
                }
            }
        }
        Self::from_up_masks(up)
    }

    pub fn empty() -> Self {
        Self::from_trusted_up(Vec::new())
    }

    /// The chain `0 < 1 < ... < k-1`.
    pub fn chain(k: usize) -> Self {
        assert!(k <= MAX_POINTS);
        Self::from_trusted_up((0..k).map(|i| full_mask(k) & !full_mask(i)).collect())
    }

    pub fn antichain(k: usize) -> Self {
        assert!(k <= MAX_POINTS);
        Self::from_trusted_up((0..k).map(bit).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> std::result::Result<Self, OrderViolation> {
        if labels.len() != self.n {
            return Err(OrderViolation::Labels(labels.len(), self.n));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of point `i`; falls back to the index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// Index of the point carrying `name`, if labeled.
    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i] & bit(j) != 0
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        (self.up[i] | self.down[i]) & bit(j) != 0
    }

    /// `↑i`.
    #[inline]
    pub fn up(&self, i: usize) -> Mask {
        self.up[i]
    }

    /// `↓i`.
    #[inline]
    pub fn down(&self, i: usize) -> Mask {
        self.down[i]
    }

    /// Points incomparable with `i`.
    #[inline]
    pub fn incomparable(&self, i: usize) -> Mask {
        self.full() & !(self.up[i] | self.down[i])
    }

    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.leq(i, j)).collect()).collect()
    }

    /// Smallest upset containing `s`.
    pub fn up_closure(&self, s: Mask) -> Upset {
        bits(s).fold(0, |acc, i| acc | self.up[i])
    }

    /// Smallest downset containing `s`.
    pub fn down_closure(&self, s: Mask) -> Mask {
        bits(s).fold(0, |acc, i| acc | self.down[i])
    }

    pub fn is_upset(&self, s: Mask) -> bool {
        s & !self.full() == 0 && self.up_closure(s) == s
    }

    pub fn is_downset(&self, s: Mask) -> bool {
        s & !self.full() == 0 && self.down_closure(s) == s
    }

    /// Minimal points of `s` (with respect to the order restricted to `s`).
    pub fn minimal_in(&self, s: Mask) -> Mask {
        bits(s).filter(|&i| self.down[i] & s == bit(i)).fold(0, |a, i| a | bit(i))
    }

    /// Maximal points of `s`.
    pub fn maximal_in(&self, s: Mask) -> Mask {
        bits(s).filter(|&i| self.up[i] & s == bit(i)).fold(0, |a, i| a | bit(i))
    }

    /// Pairs `(i, j)` with `j` covering `i`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let strict = self.up[i] & !bit(i);
            for j in bits(strict) {
                if self.down[j] & strict & !bit(j) == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The least element, if any.
    pub fn root(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.up[i] == self.full())
    }

    /// The greatest element, if any.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.down[i] == self.full())
    }

    /// Nonempty with a least element.
    pub fn is_rooted(&self) -> bool {
        self.root().is_some()
    }

    /// Points listed so that `i < j` in the order implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).collect();
        v.sort_by_key(|&i| (self.down[i].count_ones(), i));
        v
    }

    /// The subposet on `s`, with points renumbered in increasing index order.
    /// Returns the subposet and the old index of every new point.
    pub fn restrict(&self, s: Mask) -> (FinitePoset, Vec<usize>) {
        let old: Vec<usize> = bits(s & self.full()).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (k, &i) in old.iter().enumerate() {
            pos[i] = k;
        }
        let up = old
            .iter()
            .map(|&i| bits(self.up[i] & s).fold(0, |a, j| a | bit(pos[j])))
            .collect();
        let mut p = Self::from_trusted_up(up);
        if let Some(l) = &self.labels {
            p.labels = Some(old.iter().map(|&i| l[i].clone()).collect());
        }
        (p, old)
    }

    /// Rename points: point `i` of `self` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> FinitePoset {
        let mut up = vec![0; self.n];
        for i in 0..self.n {
            up[perm[i]] = bits(self.up[i]).fold(0, |a, j| a | bit(perm[j]));
        }
        let mut p = Self::from_trusted_up(up);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for i in 0..self.n {
                nl[perm[i]] = l[i].clone();
            }
            p.labels = Some(nl);
        }
        p
    }

    /// Every upset, ordered by cardinality and then by mask value.
    pub fn all_upsets(&self) -> Vec<Upset> {
        let mut order = self.linear_extension();
        order.reverse();
        let mut out = Vec::new();
        self.upsets_rec(&order, 0, 0, &mut out);
        out.sort_by_key(|&m| (m.count_ones(), m));
        out
    }

    fn upsets_rec(&self, order: &[usize], k: usize, cur: Mask, out: &mut Vec<Upset>) {
        if k == order.len() {
            out.push(cur);
            return;
        }
        let i = order[k];
        self.upsets_rec(order, k + 1, cur, out);
        if self.up[i] & !bit(i) & !cur == 0 {
            self.upsets_rec(order, k + 1, cur | bit(i), out);
        }
    }

    /// Every downset, in the same canonical order as [`Self::all_upsets`].
    pub fn all_downsets(&self) -> Vec<Mask> {
        let mut v: Vec<Mask> = self.all_upsets().into_iter().map(|u| self.full() & !u).collect();
        v.sort_by_key(|&m| (m.count_ones(), m));
        v
    }

    /// Longest-chain length inside `s`.
    pub fn longest_chain_in(&self, s: Mask) -> usize {
        let mut h = vec![0usize; self.n];
        let mut best = 0;
        for i in self.linear_extension() {
            if s & bit(i) == 0 {
                continue;
            }
            let below = self.down[i] & s & !bit(i);
            h[i] = 1 + bits(below).map(|j| h[j]).max().unwrap_or(0);
            best = best.max(h[i]);
        }
        best
    }

    /// Size of the largest antichain inside `s` (Dilworth via bipartite matching).
    pub fn max_antichain_in(&self, s: Mask) -> usize {
        let pts: Vec<usize> = bits(s & self.full()).collect();
        let mut match_right: Vec<Option<usize>> = vec![None; self.n];
        let mut matched = 0;
        for &u in &pts {
            let mut seen: Mask = 0;
            if self.augment(u, s, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        pts.len() - matched
    }

    fn augment(&self, u: usize, s: Mask, seen: &mut Mask, match_right: &mut [Option<usize>]) -> bool {
        for v in bits(self.up[u] & s & !bit(u)) {
            if *seen & bit(v) != 0 {
                continue;
            }
            *seen |= bit(v);
            let free = match match_right[v] {
                None => true,
                Some(w) => self.augment(w, s, seen, match_right),
            };
            if free {
                match_right[v] = Some(u);
                return true;
            }
        }
        false
    }

    /// Size of the longest chain; 0 for the empty poset.
    pub fn depth(&self) -> usize {
        self.longest_chain_in(self.full())
    }

    /// Max over points `x` of the largest antichain inside `↑x`; 0 for the empty poset.
    pub fn width(&self) -> usize {
        (0..self.n).map(|x| self.max_antichain_in(self.up[x])).max().unwrap_or(0)
    }

    /// Max over `x` and `y ∈ ↑x` of the number of points of `↑x` incomparable with `y`.
    pub fn incomparability_degree(&self) -> usize {
        let mut best = 0;
        for x in 0..self.n {
            let ux = self.up[x];
            for y in bits(ux) {
                best = best.max((self.incomparable(y) & ux).count_ones() as usize);
            }
        }
        best
    }

    /// `self + other`: `other` placed above `self`.
    pub fn sum(&self, other: &FinitePoset) -> FinitePoset {
        Self::tower(&[self.clone(), other.clone()], false)
    }

    /// Stack `parts` bottom to top; optionally add a fresh top point.
    pub fn tower(parts: &[FinitePoset], with_top: bool) -> FinitePoset {
        let total: usize = parts.iter().map(|p| p.n).sum::<usize>() + usize::from(with_top);
        assert!(total <= MAX_POINTS, "tower exceeds {MAX_POINTS} points");
        let mut up = Vec::with_capacity(total);
        let mut offset = 0;
        for p in parts {
            let above = full_mask(total) & !full_mask(offset + p.n);
            for i in 0..p.n {
                up.push((p.up[i] << offset) | above);
            }
            offset += p.n;
        }
        if with_top {
            up.push(bit(total - 1));
        }
        let mut out = Self::from_trusted_up(up);
        if parts.iter().any(|p| p.labels.is_some()) {
            let mut l = Vec::with_capacity(total);
            let mut offset = 0;
            for p in parts {
                for i in 0..p.n {
                    l.push(match &p.labels {
                        Some(pl) => pl[i].clone(),
                        None => (offset + i).to_string(),
                    });
                }
                offset += p.n;
            }
            if with_top {
                l.push("top".to_string());
            }
            out.labels = Some(l);
        }
        out
    }

    /// The order-dual poset.
    pub fn opposite(&self) -> FinitePoset {
        let mut p = Self::from_trusted_up(self.down.clone());
        p.labels = self.labels.clone();
        p
    }

    /// Number of pairs `i ≤ j`, reflexive pairs included.
    pub fn relation_size(&self) -> usize {
        self.up.iter().map(|u| u.count_ones() as usize).sum()
    }
}

/// Iteratively refined point colours; equal colours are necessary for an isomorphism
/// to match two points. Both posets are coloured against one shared palette.
fn joint_colours(p: &FinitePoset, q: &FinitePoset) -> (Vec<usize>, Vec<usize>) {
    fn heights(x: &FinitePoset) -> (Vec<usize>, Vec<usize>) {
        let ext = x.linear_extension();
        let mut below = vec![0usize; x.n];
        for &i in &ext {
            below[i] = bits(x.down[i] & !bit(i)).map(|j| below[j] + 1).max().unwrap_or(0);
        }
        let mut above = vec![0usize; x.n];
        for &i in ext.iter().rev() {
            above[i] = bits(x.up[i] & !bit(i)).map(|j| above[j] + 1).max().unwrap_or(0);
        }
        (below, above)
    }
    let init = |x: &FinitePoset| -> Vec<Vec<usize>> {
        let (b, a) = heights(x);
        (0..x.n)
            .map(|i| {
                vec![
                    x.up[i].count_ones() as usize,
                    x.down[i].count_ones() as usize,
                    b[i],
                    a[i],
                ]
            })
            .collect()
    };
    let mut sp = init(p);
    let mut sq = init(q);
    let mut classes = 0;
    loop {
        // Number signatures in sorted order so colours do not depend on point order.
        let palette: BTreeSet<&Vec<usize>> = sp.iter().chain(sq.iter()).collect();
        let ids: BTreeMap<&Vec<usize>, usize> =
            palette.into_iter().enumerate().map(|(k, s)| (s, k)).collect();
        let cp: Vec<usize> = sp.iter().map(|s| ids[s]).collect();
        let cq: Vec<usize> = sq.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cp, cq);
        }
        classes = ids.len();
        let refine = |x: &FinitePoset, c: &[usize]| -> Vec<Vec<usize>> {
            (0..x.n)
                .map(|i| {
                    let mut ups: Vec<usize> = bits(x.up[i] & !bit(i)).map(|j| c[j]).collect();
                    let mut downs: Vec<usize> = bits(x.down[i] & !bit(i)).map(|j| c[j]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    let mut sig = vec![c[i], ups.len()];
                    sig.extend(ups);
                    sig.push(usize::MAX);
                    sig.extend(downs);
                    sig
                })
                .collect()
        };
        sp = refine(p, &cp);
        sq = refine(q, &cq);
    }
}

/// Find an order isomorphism `p → q`, returned as `map[i] = image of i`.
///
/// Deterministic: points of `p` are matched in index order against candidates of
/// `q` in index order, so the first isomorphism in that search order is returned.
pub fn are_isomorphic(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.n != q.n || p.relation_size() != q.relation_size() {
        return None;
    }
    let (cp, cq) = joint_colours(p, q);
    let mut hp = cp.clone();
    let mut hq = cq.clone();
    hp.sort_unstable();
    hq.sort_unstable();
    if hp != hq {
        return None;
    }
    // Match rarer colours first; ties in index order.
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in &cp {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..p.n).collect();
    order.sort_by_key(|&i| (freq[&cp[i]], i));
    let mut map = vec![usize::MAX; p.n];
    let mut used: Mask = 0;
    if iso_rec(p, q, &cp, &cq, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_rec(
    p: &FinitePoset,
    q: &FinitePoset,
    cp: &[usize],
    cq: &[usize],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut Mask,
) -> bool {
    if k == order.len() {
        return true;
    }
    let i = order[k];
    for j in 0..q.n {
        if *used & bit(j) != 0 || cq[j] != cp[i] {
            continue;
        }
        let consistent = order[..k].iter().all(|&i2| {
            let j2 = map[i2];
            p.leq(i, i2) == q.leq(j, j2) && p.leq(i2, i) == q.leq(j2, j)
        });
        if !consistent {
            continue;
        }
        map[i] = j;
        *used |= bit(j);
        if iso_rec(p, q, cp, cq, order, k + 1, map, used) {
            return true;
        }
        *used &= !bit(j);
        map[i] = usize::MAX;
    }
    false
}

/// Check that `map` is an order isomorphism `p → q`.
pub fn is_order_isomorphism(p: &FinitePoset, q: &FinitePoset, map: &[usize]) -> bool {
    if p.n != q.n || map.len() != p.n {
        return false;
    }
    let mut seen: Mask = 0;
    for &j in map {
        if j >= q.n || seen & bit(j) != 0 {
            return false;
        }
        seen |= bit(j);
    }
    (0..p.n).all(|i| (0..p.n).all(|i2| p.leq(i, i2) == q.leq(map[i], map[i2])))
}

/// Isomorphism-invariant key used to bucket posets before exact comparison.
pub fn invariant_key(p: &FinitePoset) -> Vec<usize> {
    let (c, _) = joint_colours(p, p);
    let mut key: Vec<usize> = c;
    key.sort_unstable();
    key.push(p.relation_size());
    key.push(p.n);
    key
}

/// Deduplicating collection of posets up to isomorphism, preserving insertion order.
#[derive(Debug, Default, Clone)]
pub struct IsoClasses {
    reps: Vec<FinitePoset>,
    buckets: HashMap<Vec<usize>, Vec<usize>>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of the stored representative isomorphic to `p`, with an isomorphism `p → rep`.
    pub fn find(&self, p: &FinitePoset) -> Option<(usize, Vec<usize>)> {
        let key = invariant_key(p);
        let bucket = self.buckets.get(&key)?;
        bucket
            .iter()
            .find_map(|&r| are_isomorphic(p, &self.reps[r]).map(|m| (r, m)))
    }

    /// Insert `p` unless an isomorphic copy is present; returns its class index.
    pub fn insert(&mut self, p: FinitePoset) -> usize {
        let key = invariant_key(&p);
        if let Some(bucket) = self.buckets.get(&key) {
            for &r in bucket {
                if are_isomorphic(&p, &self.reps[r]).is_some() {
                    return r;
                }
            }
        }
        let idx = self.reps.len();
        self.reps.push(p);
        self.buckets.entry(key).or_default().push(idx);
        idx
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[FinitePoset] {
        &self.reps
    }

    pub fn into_reps(self) -> Vec<FinitePoset> {
        self.reps
    }
}

/// Largest `n` accepted by [`enumerate_posets`].
pub const MAX_UNLABELED: usize = 7;
/// Largest `m` accepted by [`enumerate_labeled_posets`].
pub const MAX_LABELED: usize = 4;

/// One representative of every isomorphism class of posets on `n` points.
///
/// Representatives on `n` points are built from those on `n - 1` by adding a new
/// maximal point above each downset, then deduplicated. Output order is the
/// (deterministic) generation order.
pub fn enumerate_posets(n: usize) -> Result<Vec<FinitePoset>> {
    if n > MAX_UNLABELED {
        return Err(Error::cap(format!("enumerate_posets supports n <= {MAX_UNLABELED}, got {n}")));
    }
    let mut level = vec![FinitePoset::empty()];
    for size in 1..=n {
        let mut classes = IsoClasses::new();
        for p in &level {
            for d in p.all_downsets() {
                let mut up: Vec<Mask> = (0..p.n).map(|i| p.up[i]).collect();
                for i in bits(d) {
                    up[i] |= bit(size - 1);
                }
                up.push(bit(size - 1));
                classes.insert(FinitePoset::from_trusted_up(up));
            }
        }
        level = classes.into_reps();
    }
    Ok(level)
}

/// All posets on `0..n` for every `n <= max`, smallest first.
pub fn enumerate_posets_up_to(max: usize) -> Result<Vec<FinitePoset>> {
    let mut out = Vec::new();
    for n in 0..=max {
        out.extend(enumerate_posets(n)?);
    }
    Ok(out)
}

/// All partial orders on the labeled points `0..m`, in lexicographic order of their
/// relation matrices read row by row (`false < true`).
pub fn enumerate_labeled_posets(m: usize) -> Result<Vec<FinitePoset>> {
    if m > MAX_LABELED {
        return Err(Error::cap(format!("enumerate_labeled_posets supports m <= {MAX_LABELED}, got {m}")));
    }
    let cells: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let k = cells.len();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << k) {
        let mut up: Vec<Mask> = (0..m).map(bit).collect();
        for (t, &(i, j)) in cells.iter().enumerate() {
            if code & (1u64 << (k - 1 - t)) != 0 {
                up[i] |= bit(j);
            }
        }
        if let Ok(p) = FinitePoset::from_up_masks(up) {
            out.push(p);
        }
    }
    Ok(out)
}
