//! Named algebras and spaces: `X_n` and its towers with the partition `R_n`, the
//! `D_2` tower, principal downsets of the Rieger-Nishimura lattice, subalgebra
//! extractors for those downsets, decomposition into one-generated blocks, and the
//! algebras `B_n` and `D`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{algebra_iso, Elem, HeytingAlgebra, SubalgebraHandle};
use crate::duality::{is_correct_partition, CorrectPartition};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// The four-element Boolean algebra, `D_2*`.
pub fn diamond() -> HeytingAlgebra {
    HeytingAlgebra::from_upsets(&d2_space()).expect("two points")
}

/// Two incomparable points.
pub fn d2_space() -> FinitePoset {
    FinitePoset::antichain(2).with_labels(vec!["l".into(), "r".into()]).unwrap()
}

/// `X_n` on points `a_1..a_n` (indices `0..n`) and `b_1..b_n` (indices `n..2n`):
/// `a_1 < b_j` for `j ≥ 2`, and `a_m < b_1`, `a_m < b_m` for `m > 1`.
pub fn x_n_space(n: usize) -> FinitePoset {
    assert!(n >= 2, "X_n needs n >= 2");
    let mut covers = Vec::new();
    for j in 2..=n {
        covers.push((0, n + j - 1));
    }
    for m in 2..=n {
        covers.push((m - 1, n));
        covers.push((m - 1, n + m - 1));
    }
    let labels = (1..=n).map(|m| format!("a{m}")).chain((1..=n).map(|m| format!("b{m}"))).collect();
    FinitePoset::from_covers(2 * n, &covers).unwrap().with_labels(labels).unwrap()
}

/// A result of [`named`].
#[derive(Debug, Clone)]
pub enum Named {
    Algebra(HeytingAlgebra),
    Space(FinitePoset),
}

/// Look up `bool2`, `chain` (k), `diamond`, `d2-space`, `xn-space` (n).
pub fn named(name: &str, param: Option<usize>) -> Result<Named> {
    let need = |what: &str| param.ok_or_else(|| Error::invalid(format!("{name} needs {what}")));
    Ok(match name {
        "bool2" => Named::Algebra(HeytingAlgebra::bool2()),
        "chain" => {
            let k = need("a length")?;
            if k == 0 {
                return Err(Error::invalid("a chain algebra has at least one element"));
            }
            Named::Algebra(HeytingAlgebra::chain(k))
        }
        "diamond" => Named::Algebra(diamond()),
        "d2-space" | "d2_space" => Named::Space(d2_space()),
        "xn-space" | "x_n_space" => {
            let n = need("n")?;
            if n < 2 {
                return Err(Error::invalid("X_n needs n >= 2"));
            }
            Named::Space(x_n_space(n))
        }
        _ => return Err(Error::invalid(format!("unknown name {name:?}"))),
    })
}

/// Copies of a space stacked upward, with names for every point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledTower {
    pub poset: FinitePoset,
    /// Copy number of each point; `None` for the top.
    pub copy_index: Vec<Option<usize>>,
    pub labels: Vec<String>,
    pub has_top: bool,
}

impl LabeledTower {
    fn build(part: &FinitePoset, k: usize, with_top: bool, labels: Vec<String>) -> Self {
        let parts = vec![part.clone().without_labels(); k];
        let poset = FinitePoset::tower(&parts, with_top).with_labels(labels.clone()).unwrap();
        let mut copy_index: Vec<Option<usize>> = (0..k).flat_map(|c| vec![Some(c); part.len()]).collect();
        if with_top {
            copy_index.push(None);
        }
        LabeledTower { poset, copy_index, labels, has_top: with_top }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn point(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn top(&self) -> Option<usize> {
        self.has_top.then(|| self.len() - 1)
    }
}

/// `k` copies of `X_n`, copy `c + 1` above copy `c`.
///
/// Copy 0 is labeled `bot, x1..x(n-1)` on its `a` row and `xn, y1..y(n-1)` on its `b`
/// row. Copy `c ≥ 1` is labeled `y(cn), x(cn+1)..x(cn+n-1)` and
/// `x((c+1)n), y(cn+1)..y(cn+n-1)`.
pub fn x_n_tower(n: usize, k: usize, with_top: bool) -> LabeledTower {
    assert!(n >= 2 && k >= 1, "x_n_tower needs n >= 2 and k >= 1");
    let mut labels = Vec::with_capacity(2 * n * k + 1);
    for c in 0..k {
        labels.push(if c == 0 { "bot".to_string() } else { format!("y{}", c * n) });
        for m in 1..n {
            labels.push(format!("x{}", c * n + m));
        }
        labels.push(format!("x{}", (c + 1) * n));
        for m in 1..n {
            labels.push(format!("y{}", c * n + m));
        }
    }
    if with_top {
        labels.push("top".into());
    }
    LabeledTower::build(&x_n_space(n), k, with_top, labels)
}

fn union_find_partition(n: usize, pairs: &[(usize, usize)]) -> CorrectPartition {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let ids: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    CorrectPartition::from_ids(&ids)
}

fn checked(t: &LabeledTower, r: CorrectPartition) -> Result<CorrectPartition> {
    is_correct_partition(&r, &t.poset).map_err(|v| Error::invalid(format!("partition fails the back condition: {v}")))?;
    Ok(r)
}

/// `R_n` on a tower from [`x_n_tower`]: classes `{x_k, y_k}`.
///
/// The last `x_(kn)` has no partner inside a finite truncation. With a top it joins
/// the top's class; without one, the whole `b` row of the highest copy is merged with
/// it (and the closure taken with the other pairs).
pub fn r_n_partition(t: &LabeledTower) -> Result<CorrectPartition> {
    let mut pairs = Vec::new();
    let mut dangling = Vec::new();
    for (p, l) in t.labels.iter().enumerate() {
        if let Some(idx) = l.strip_prefix('x') {
            match t.point(&format!("y{idx}")) {
                Some(q) => pairs.push((p, q)),
                None => dangling.push(p),
            }
        }
    }
    let k = t.copy_index.iter().flatten().max().map_or(0, |c| c + 1);
    let per_copy = t.copy_index.iter().filter(|c| **c == Some(0)).count();
    for &d in &dangling {
        match t.top() {
            Some(top) => pairs.push((d, top)),
            None => {
                let n = per_copy / 2;
                let base = (k - 1) * per_copy;
                for b in base + n..base + 2 * n {
                    pairs.push((d, b));
                }
            }
        }
    }
    checked(t, union_find_partition(t.len(), &pairs))
}

/// `k` copies of `D_2`, copy `j` labeled `l<j>`, `r<j>`.
pub fn d2_tower_labeled(k: usize, with_top: bool) -> LabeledTower {
    assert!(k >= 1, "d2_tower_labeled needs k >= 1");
    let mut labels: Vec<String> = (0..k).flat_map(|j| [format!("l{j}"), format!("r{j}")]).collect();
    if with_top {
        labels.push("top".into());
    }
    LabeledTower::build(&FinitePoset::antichain(2), k, with_top, labels)
}

/// Staggered classes `{r_j, l_(j+1)}`. The highest `r` joins the top's class; without
/// a top it joins the class `{r_(k-2), l_(k-1)}`.
pub fn d2_partition(t: &LabeledTower) -> Result<CorrectPartition> {
    let k = t.copy_index.iter().flatten().max().map_or(0, |c| c + 1);
    if k < 2 {
        return Err(Error::invalid("the staggered partition needs at least two copies"));
    }
    let (l, r) = (|j: usize| 2 * j, |j: usize| 2 * j + 1);
    let mut pairs: Vec<(usize, usize)> = (0..k - 1).map(|j| (r(j), l(j + 1))).collect();
    match t.top() {
        Some(top) => pairs.push((r(k - 1), top)),
        None => pairs.push((r(k - 1), l(k - 1))),
    }
    checked(t, union_find_partition(t.len(), &pairs))
}

/// An element of the Rieger-Nishimura lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RNElement {
    Zero,
    W(usize),
    /// `a_i` for `i ≥ 1`.
    A(usize),
}

impl fmt::Display for RNElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RNElement::Zero => f.write_str("0"),
            RNElement::W(i) => write!(f, "w{i}"),
            RNElement::A(i) => write!(f, "a{i}"),
        }
    }
}

impl std::str::FromStr for RNElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("not an RN element: {s:?}"));
        if s == "0" {
            return Ok(RNElement::Zero);
        }
        let (head, idx) = s.split_at(1.min(s.len()));
        let i: usize = idx.parse().map_err(|_| bad())?;
        match head {
            "w" => Ok(RNElement::W(i)),
            "a" if i >= 1 => Ok(RNElement::A(i)),
            _ => Err(bad()),
        }
    }
}

/// Largest index accepted by [`rn_downset`].
pub const MAX_RN_INDEX: usize = 30;

impl RNElement {
    /// Elements this one covers.
    pub fn lower_covers(self) -> Vec<RNElement> {
        use RNElement::*;
        match self {
            Zero => vec![],
            W(0) | W(1) => vec![Zero],
            W(2) => vec![W(0)],
            W(k) => vec![A(k - 2)],
            A(1) => vec![W(0), W(1)],
            A(k) => vec![W(k), A(k - 1)],
        }
    }

    /// `↓self`, listed by a breadth-first walk down the covers, then sorted.
    pub fn down_set(self) -> Vec<RNElement> {
        let mut seen = vec![self];
        let mut i = 0;
        while i < seen.len() {
            for c in seen[i].lower_covers() {
                if !seen.contains(&c) {
                    seen.push(c);
                }
            }
            i += 1;
        }
        seen.sort_by_key(|e| (e.height(), *e));
        seen
    }

    fn height(self) -> usize {
        match self {
            RNElement::Zero => 0,
            RNElement::W(i) => i + 1,
            RNElement::A(i) => i + 2,
        }
    }

    fn index(self) -> usize {
        match self {
            RNElement::Zero => 0,
            RNElement::W(i) | RNElement::A(i) => i,
        }
    }
}

/// The principal downset `↓top` of the Rieger-Nishimura lattice, labeled `0, w0, a1, ...`.
pub fn rn_downset(top: RNElement) -> Result<HeytingAlgebra> {
    if top.index() > MAX_RN_INDEX {
        return Err(Error::cap(format!("RN indices above {MAX_RN_INDEX} are not supported")));
    }
    if top == RNElement::A(0) {
        return Err(Error::invalid("a0 is not an RN element"));
    }
    let els = top.down_set();
    let below: Vec<Vec<RNElement>> = els.iter().map(|e| e.down_set()).collect();
    let leq: Vec<Vec<bool>> = els.iter().map(|x| (0..els.len()).map(|j| below[j].contains(x)).collect()).collect();
    let a = HeytingAlgebra::from_order(&leq)?;
    a.verify_heyting()
        .map_err(|v| Error::invalid(format!("RN downset is not a Heyting algebra: {v}")))?;
    a.with_labels(els.iter().map(|e| e.to_string()).collect())
}

fn labeled(a: &HeytingAlgebra, names: &[String]) -> Result<Vec<Elem>> {
    names
        .iter()
        .map(|n| a.find_label(n).ok_or_else(|| Error::precondition(format!("the algebra has no element {n}"))))
        .collect()
}

/// `{b, 0} ∪ ⋃_{k<n} {w_(1+3k), w_(2+3k), a_(2+3k)}` inside an RN downset with top `b`;
/// a subalgebra isomorphic to `2 + D_2* + ... + D_2*` with `n` diamonds.
pub fn lemma_kg_i_subalgebra(a: &HeytingAlgebra, n: usize) -> Result<SubalgebraHandle> {
    if a.len() < 6 * n + 1 {
        return Err(Error::precondition(format!("need at least {} elements, have {}", 6 * n + 1, a.len())));
    }
    let mut names = vec!["0".to_string()];
    for k in 0..n {
        names.extend([format!("w{}", 1 + 3 * k), format!("w{}", 2 + 3 * k), format!("a{}", 2 + 3 * k)]);
    }
    let mut members = labeled(a, &names)?;
    members.push(a.top());
    let sub = SubalgebraHandle::new(a, &members)?;
    let mut parts = vec![HeytingAlgebra::bool2()];
    parts.extend(std::iter::repeat_with(diamond).take(n));
    if algebra_iso(&sub.algebra(a), &HeytingAlgebra::sum_of(&parts)).is_none() {
        return Err(Error::invalid("extracted subalgebra has the wrong shape"));
    }
    Ok(sub)
}

/// Label set `C_m` for `↓a_m` (with `1` the top, and `a0` read as `w0`).
pub fn kg_ii_labels(m: usize) -> Vec<String> {
    fn c(m: isize) -> Vec<String> {
        let a = |i: isize| if i == 0 { "w0".to_string() } else { format!("a{i}") };
        if m == -1 {
            return vec!["0".into()];
        }
        let k = m.div_euclid(3);
        match m.rem_euclid(3) {
            2 => {
                let mut v = vec!["0".to_string()];
                v.extend((1..=m).filter(|t| t % 3 != 0).map(|t| format!("w{t}")));
                v.extend((0..=k).map(|t| a(3 * t + 2)));
                v
            }
            1 => {
                let mut v = c(3 * k - 1);
                v.extend([a(3 * k + 1), a(3 * k), format!("w{}", 3 * k + 1)]);
                v
            }
            _ => {
                let mut v = c(3 * k - 1);
                v.extend([a(3 * k), format!("w{}", 3 * k), a(3 * k - 2), a(3 * k - 3)]);
                v
            }
        }
    }
    let mut v = c(m as isize);
    v.sort();
    v.dedup();
    v
}

/// The subalgebra `C_m` of `↓a_m` together with its decomposition into blocks, each
/// isomorphic to `X_2*` or `D_2*` (top block first).
pub fn lemma_kg_ii_universe(a: &HeytingAlgebra) -> Result<(SubalgebraHandle, Vec<HeytingAlgebra>)> {
    let top = a.label(a.top());
    let m = match top.parse::<RNElement>() {
        Ok(RNElement::A(m)) => m,
        _ => return Err(Error::precondition(format!("the top {top} is not an a-element"))),
    };
    let mut members = labeled(a, &kg_ii_labels(m))?;
    members.push(a.top());
    let sub = SubalgebraHandle::new(a, &members)?;
    let blocks = split_at_nodes(&sub.algebra(a))?;
    let x2 = HeytingAlgebra::from_upsets(&x_n_space(2))?;
    let d = diamond();
    for b in &blocks {
        if algebra_iso(b, &x2).is_none() && algebra_iso(b, &d).is_none() {
            return Err(Error::invalid(format!("a block of {} elements is neither X2* nor D2*", b.len())));
        }
    }
    Ok((sub, blocks))
}

/// Intervals between consecutive nodes, top first.
fn split_at_nodes(a: &HeytingAlgebra) -> Result<Vec<HeytingAlgebra>> {
    let nodes = a.nodes();
    nodes.windows(2).rev().map(|w| a.interval(w[0], w[1]).map(|(b, _)| b)).collect()
}

/// Split an algebra at every node; each block must be one-generated. Blocks are
/// listed top first, so `sum_of(blocks)` is isomorphic to `a`.
///
/// FSI algebras of the variety generated by finite sums of one-generated algebras
/// decompose this way, but so do non-FSI sums such as `↓a_k + ...`, which are accepted.
pub fn kg_decompose(a: &HeytingAlgebra) -> Result<Vec<HeytingAlgebra>> {
    if a.len() < 2 {
        return Err(Error::precondition("the trivial algebra has no blocks"));
    }
    let nodes = a.nodes();
    let blocks = split_at_nodes(a)?;
    for (i, b) in blocks.iter().enumerate() {
        if b.is_one_generated().is_none() {
            let hi = nodes[nodes.len() - 1 - i];
            let lo = nodes[nodes.len() - 2 - i];
            return Err(Error::invalid(format!(
                "not KG-decomposable: the interval [{}, {}] is not one-generated",
                a.label(lo),
                a.label(hi)
            )));
        }
    }
    Ok(blocks)
}

/// `B_n = 2 + (2 × 3-chain) + D_2* + ... + D_2*` with `n - 2` diamonds.
pub fn b_n_family(n: usize) -> Result<HeytingAlgebra> {
    if n < 2 {
        return Err(Error::invalid("B_n needs n >= 2"));
    }
    let mut parts = vec![HeytingAlgebra::bool2(), HeytingAlgebra::bool2().product(&HeytingAlgebra::chain(3))?];
    parts.extend(std::iter::repeat_with(diamond).take(n - 2));
    Ok(HeytingAlgebra::sum_of(&parts))
}

/// `D = 2 + ↓a_3 + 2`, ten elements.
pub fn algebra_d() -> HeytingAlgebra {
    let two = HeytingAlgebra::bool2().with_labels(vec!["0".into(), "1".into()]).unwrap();
    let mid = rn_downset(RNElement::A(3)).expect("small downset");
    HeytingAlgebra::sum_of(&[two.clone(), mid, two.with_labels(vec!["0".into(), "glue".into()]).unwrap()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{dual_space, partition_to_subalgebra, quotient_space};
    use crate::terms::{comparability_term, validates, Equation, Validity};

    #[test]
    fn named_structures() {
        assert!(algebra_iso(&diamond(), &HeytingAlgebra::bool2().product(&HeytingAlgebra::bool2()).unwrap()).is_some());
        let x2 = x_n_space(2);
        assert!(x2.lt(0, 3) && x2.lt(1, 2) && x2.lt(1, 3));
        assert!(!x2.leq(0, 2));
        assert_eq!(x2.covers().len(), 3);
        for n in 2..6 {
            let x = x_n_space(n);
            assert_eq!(x.len(), 2 * n);
            assert_eq!(x.depth(), 2);
            let rooted = FinitePoset::tower(&[FinitePoset::chain(1), x], false);
            assert_eq!(rooted.width(), n);
        }
        assert!(matches!(named("chain", Some(3)), Ok(Named::Algebra(a)) if a.len() == 3));
        assert!(named("nope", None).is_err());
        assert!(named("xn-space", Some(1)).is_err());
    }

    #[test]
    fn x_n_tower_labels() {
        let t = x_n_tower(2, 1, true);
        assert_eq!(t.labels, vec!["bot", "x1", "x2", "y1", "top"]);
        let t = x_n_tower(3, 2, false);
        assert_eq!(
            t.labels,
            vec!["bot", "x1", "x2", "x3", "y1", "y2", "y3", "x4", "x5", "x6", "y4", "y5"]
        );
        assert!(t.poset.lt(t.point("x3").unwrap(), t.point("y3").unwrap()));
        for n in 2..4 {
            for k in 1..4 {
                let t = x_n_tower(n, k, true);
                assert_eq!(t.poset.depth(), 2 * k + 1);
                assert_eq!(t.poset.maximum(), t.top());
                for p in 0..t.len() {
                    for q in 0..t.len() {
                        if let (Some(a), Some(b)) = (t.copy_index[p], t.copy_index[q]) {
                            if a < b {
                                assert!(t.poset.lt(p, q));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn towers_carry_correct_partitions() {
        for with_top in [true, false] {
            for n in 2..=3 {
                for k in 2..=4 {
                    let t = x_n_tower(n, k, with_top);
                    let r = r_n_partition(&t).unwrap();
                    let b = HeytingAlgebra::from_upsets(&t.poset).unwrap();
                    assert!(partition_to_subalgebra(&b, &r).unwrap().is_proper());
                }
            }
            for k in 2..=4 {
                let t = d2_tower_labeled(k, with_top);
                let r = d2_partition(&t).unwrap();
                let b = HeytingAlgebra::from_upsets(&t.poset).unwrap();
                assert!(partition_to_subalgebra(&b, &r).unwrap().is_proper());
            }
        }
    }

    #[test]
    fn d2_partition_shapes() {
        let t = d2_tower_labeled(3, true);
        let r = d2_partition(&t).unwrap();
        let name = |c: &Vec<usize>| c.iter().map(|&p| t.labels[p].clone()).collect::<Vec<_>>();
        let classes: Vec<Vec<String>> = r.classes.iter().map(name).collect();
        assert_eq!(classes, vec![vec!["l0"], vec!["r0", "l1"], vec!["r1", "l2"], vec!["r2", "top"]]);
        // Leaving r2 alone breaks the back condition at r1 ≤ r2.
        let loose = CorrectPartition::new(7, vec![vec![0], vec![1, 2], vec![3, 4], vec![5], vec![6]]).unwrap();
        assert!(is_correct_partition(&loose, &t.poset).is_err());
        let id = CorrectPartition::identity(t.len());
        assert_eq!(quotient_space(&t.poset, &id).unwrap().0.without_labels(), t.poset.clone().without_labels());
    }

    #[test]
    fn r_n_dangling_point_needs_merging() {
        let t = x_n_tower(2, 2, true);
        let pairs: Vec<Vec<usize>> = (0..t.len())
            .map(|p| {
                let l = &t.labels[p];
                let other = match l.strip_prefix('x') {
                    Some(i) => t.point(&format!("y{i}")),
                    None => l.strip_prefix('y').and_then(|i| t.point(&format!("x{i}"))),
                };
                let mut c = vec![p];
                c.extend(other);
                c.sort();
                c
            })
            .collect();
        let mut classes = pairs;
        classes.sort();
        classes.dedup();
        let singletons = CorrectPartition::new(t.len(), classes).unwrap();
        assert!(is_correct_partition(&singletons, &t.poset).is_err());
        assert!(r_n_partition(&t).is_ok());
    }

    #[test]
    fn rn_covers() {
        use RNElement::*;
        let d = |e: RNElement| rn_downset(e).unwrap();
        assert!(algebra_iso(&d(A(1)), &diamond()).is_some());
        assert!(algebra_iso(&d(W(2)), &HeytingAlgebra::chain(3)).is_some());
        for k in 1..10 {
            assert_eq!(d(A(k)).len(), 2 * k + 2);
            assert_eq!(d(A(k)).nodes().len(), 2);
        }
        for k in 2..10 {
            assert_eq!(d(W(k)).len(), 2 * k - 1);
        }
        for k in 3..10 {
            let expect = HeytingAlgebra::bool2().alg_sum(&d(A(k - 2)));
            assert!(algebra_iso(&d(W(k)), &expect).is_some());
        }
        assert!(algebra_iso(&d(A(3)), &HeytingAlgebra::from_upsets(&x_n_space(2)).unwrap()).is_some());
        for e in [W(0), W(1), A(1), W(3), A(4), W(7)] {
            let a = d(e);
            assert!(a.is_one_generated().is_some(), "{e}");
            // a_k = w_k ∨ a_(k-1) is join-reducible; w_k covers a single element.
            assert_eq!(dual_space(&a).unwrap().poset.is_rooted(), matches!(e, W(_)), "{e}");
            assert_eq!(a.is_fsi(), matches!(e, W(_)));
        }
        assert!(rn_downset(A(31)).is_err());
        assert_eq!("w12".parse::<RNElement>().unwrap(), W(12));
        assert!("a0".parse::<RNElement>().is_err());
    }

    #[test]
    fn kg_i_examples() {
        use RNElement::*;
        let a3 = rn_downset(A(3)).unwrap();
        let s = lemma_kg_i_subalgebra(&a3, 1).unwrap();
        let names: Vec<String> = s.members().iter().map(|&e| a3.label(e)).collect();
        assert_eq!(s.len(), 5);
        for n in ["0", "w1", "w2", "a2", "a3"] {
            assert!(names.contains(&n.to_string()));
        }
        // {b, 0, w1, w2, a1} is not join-closed: w1 ∨ w2 = a2.
        let bad: Vec<Elem> = ["0", "w1", "w2", "a1", "a3"].iter().map(|n| a3.find_label(n).unwrap()).collect();
        assert!(SubalgebraHandle::new(&a3, &bad).is_err());
        assert_eq!(lemma_kg_i_subalgebra(&a3, 0).unwrap().len(), 2);
        assert_eq!(lemma_kg_i_subalgebra(&rn_downset(W(7)).unwrap(), 2).unwrap().len(), 8);
        assert!(matches!(lemma_kg_i_subalgebra(&rn_downset(A(5)).unwrap(), 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn kg_ii_examples() {
        for m in 1..=12 {
            let a = rn_downset(RNElement::A(m)).unwrap();
            let (sub, blocks) = lemma_kg_ii_universe(&a).unwrap();
            assert!(algebra_iso(&HeytingAlgebra::sum_of(&blocks), &sub.algebra(&a)).is_some());
            for b in &blocks {
                assert!(b.is_one_generated().is_some());
            }
        }
        let a3 = rn_downset(RNElement::A(3)).unwrap();
        assert_eq!(lemma_kg_ii_universe(&a3).unwrap().0.len(), a3.len());
        assert!(lemma_kg_ii_universe(&rn_downset(RNElement::W(4)).unwrap()).is_err());
    }

    #[test]
    fn decomposition() {
        use RNElement::*;
        let (a2, a1) = (rn_downset(A(2)).unwrap(), rn_downset(A(1)).unwrap());
        let blocks = kg_decompose(&a2.alg_sum(&a1)).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(algebra_iso(&blocks[0], &a2).is_some());
        assert!(algebra_iso(&blocks[1], &a1).is_some());
        assert_eq!(kg_decompose(&diamond()).unwrap().len(), 1);
        let c3 = HeytingAlgebra::chain(3);
        assert!(matches!(kg_decompose(&c3.product(&c3).unwrap()), Err(Error::Invalid(_))));
        // 2 × 3-chain is ↓a2, so B_2 splits into 2 and ↓a2.
        let blocks = kg_decompose(&b_n_family(2).unwrap()).unwrap();
        assert_eq!(blocks.iter().map(|b| b.len()).collect::<Vec<_>>(), vec![2, 6]);
        let broken = HeytingAlgebra::bool2().alg_sum(&rn_downset(A(2)).unwrap().product(&HeytingAlgebra::bool2()).unwrap());
        assert!(matches!(kg_decompose(&broken), Err(Error::Invalid(_))));
    }

    #[test]
    fn continuum_algebras() {
        let b2 = b_n_family(2).unwrap();
        assert_eq!(b2.len(), 7);
        assert!(b2.verify_heyting().is_ok());
        assert_eq!(b_n_family(4).unwrap().len(), 13);
        let d = algebra_d();
        assert_eq!(d.len(), 10);
        assert!(d.verify_heyting().is_ok());
        assert!(d.is_fsi());
        let nodes: Vec<String> = d.nodes().iter().map(|&e| d.label(e)).collect();
        assert_eq!(nodes, vec!["0", "glue", "a3", "1"]);
        let eq = Equation::is_one(comparability_term(3));
        assert!(matches!(validates(&d, &eq).unwrap(), Validity::Falsified { .. }));
    }
}
