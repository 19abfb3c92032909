//! Finite Heyting algebras stored as explicit operation tables.
//!
//! Tables are kept even when the algebra comes from a dual poset, so the duality
//! can be checked against an independent computation instead of assumed.

use rayon::prelude::*;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::poset::{are_isomorphic, bits, FinitePoset, Mask, Upset};

/// Element index.
pub type Elem = usize;

/// Largest element count for which tables are built.
pub const MAX_ELEMENTS: usize = 2048;
/// Largest element count accepted by [`HeytingAlgebra::from_order`].
pub const MAX_ORDER_ELEMENTS: usize = 512;

/// Link from an algebra to the poset whose upsets it consists of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub dual: FinitePoset,
    /// `upsets[e]` is the upset of `dual` that element `e` stands for.
    pub upsets: Vec<Upset>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    m: usize,
    leq: Vec<bool>,
    meet: Vec<u16>,
    join: Vec<u16>,
    imp: Vec<u16>,
    bottom: Elem,
    top: Elem,
    labels: Option<Vec<String>>,
    provenance: Option<Provenance>,
}

/// First violated axiom found by [`HeytingAlgebra::verify_heyting`], with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{axiom} fails at {witness:?}")]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub witness: Vec<Elem>,
}

fn table(m: usize, f: impl Fn(usize, usize) -> usize + Sync) -> Vec<u16> {
    (0..m * m).into_par_iter().map(|k| f(k / m, k % m) as u16).collect()
}

impl HeytingAlgebra {
    /// Assemble an algebra from raw tables. Only shapes and ranges are checked;
    /// use [`Self::verify_heyting`] for the axioms.
    pub fn from_tables(
        leq: &[Vec<bool>],
        meet: &[Vec<usize>],
        join: &[Vec<usize>],
        imp: &[Vec<usize>],
        bottom: Elem,
        top: Elem,
    ) -> Result<Self> {
        let m = leq.len();
        if m == 0 {
            return Err(Error::invalid("an algebra needs at least one element"));
        }
        if m > MAX_ELEMENTS {
            return Err(Error::cap(format!("{m} elements exceeds {MAX_ELEMENTS}")));
        }
        let square_bool = leq.iter().all(|r| r.len() == m);
        let square = |t: &[Vec<usize>]| t.len() == m && t.iter().all(|r| r.len() == m && r.iter().all(|&x| x < m));
        if !square_bool || !square(meet) || !square(join) || !square(imp) || bottom >= m || top >= m {
            return Err(Error::invalid("tables must be square and refer to existing elements"));
        }
        let flat = |t: &[Vec<usize>]| t.iter().flatten().map(|&x| x as u16).collect();
        Ok(HeytingAlgebra {
            m,
            leq: leq.iter().flatten().copied().collect(),
            meet: flat(meet),
            join: flat(join),
            imp: flat(imp),
            bottom,
            top,
            labels: None,
            provenance: None,
        })
    }

    /// Derive meet, join and implication from a lattice order.
    pub fn from_order(leq: &[Vec<bool>]) -> Result<Self> {
        let m = leq.len();
        if m == 0 {
            return Err(Error::invalid("an algebra needs at least one element"));
        }
        if m > MAX_ORDER_ELEMENTS {
            return Err(Error::cap(format!("from_order supports at most {MAX_ORDER_ELEMENTS} elements")));
        }
        if leq.iter().any(|r| r.len() != m) {
            return Err(Error::invalid("order must be square"));
        }
        for a in 0..m {
            if !leq[a][a] {
                return Err(Error::invalid(format!("order not reflexive at {a}")));
            }
            for b in 0..m {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::invalid(format!("order not antisymmetric at ({a}, {b})")));
                }
                for c in 0..m {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::invalid(format!("order not transitive at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let greatest = |cands: &mut dyn Iterator<Item = usize>| -> Option<usize> {
            let v: Vec<usize> = cands.collect();
            v.iter().copied().find(|&g| v.iter().all(|&x| leq[x][g]))
        };
        let least = |cands: &mut dyn Iterator<Item = usize>| -> Option<usize> {
            let v: Vec<usize> = cands.collect();
            v.iter().copied().find(|&g| v.iter().all(|&x| leq[g][x]))
        };
        let bottom = least(&mut (0..m)).ok_or_else(|| Error::invalid("no least element"))?;
        let top = greatest(&mut (0..m)).ok_or_else(|| Error::invalid("no greatest element"))?;
        let mut meet = vec![vec![0; m]; m];
        let mut join = vec![vec![0; m]; m];
        for a in 0..m {
            for b in 0..m {
                meet[a][b] = greatest(&mut (0..m).filter(|&c| leq[c][a] && leq[c][b]))
                    .ok_or_else(|| Error::invalid(format!("no meet of {a} and {b}")))?;
                join[a][b] = least(&mut (0..m).filter(|&c| leq[a][c] && leq[b][c]))
                    .ok_or_else(|| Error::invalid(format!("no join of {a} and {b}")))?;
            }
        }
        let mut imp = vec![vec![0; m]; m];
        for a in 0..m {
            for b in 0..m {
                imp[a][b] = greatest(&mut (0..m).filter(|&c| leq[meet[c][a]][b]))
                    .ok_or_else(|| Error::invalid(format!("no relative pseudocomplement {a} -> {b}")))?;
            }
        }
        Self::from_tables(leq, &meet, &join, &imp, bottom, top)
    }

    /// The algebra of all upsets of `p`, elements in canonical upset order.
    pub fn from_upsets(p: &FinitePoset) -> Result<Self> {
        let ups = p.all_upsets();
        let m = ups.len();
        if m > MAX_ELEMENTS {
            return Err(Error::cap(format!("{m} upsets exceeds {MAX_ELEMENTS}")));
        }
        let index = |u: Upset| ups.binary_search_by_key(&(u.count_ones(), u), |&v| (v.count_ones(), v)).unwrap();
        let full = p.full();
        let leq = (0..m * m).map(|k| ups[k / m] & !ups[k % m] == 0).collect();
        let meet = table(m, |a, b| index(ups[a] & ups[b]));
        let join = table(m, |a, b| index(ups[a] | ups[b]));
        // U -> V = X \ ↓(U \ V)
        let imp = table(m, |a, b| index(full & !p.down_closure(ups[a] & !ups[b])));
        Ok(HeytingAlgebra {
            m,
            leq,
            meet,
            join,
            imp,
            bottom: 0,
            top: m - 1,
            labels: None,
            provenance: Some(Provenance { dual: p.clone(), upsets: ups }),
        })
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        Self::from_upsets(&FinitePoset::empty()).unwrap()
    }

    /// The two-element Boolean algebra.
    pub fn bool2() -> Self {
        Self::from_upsets(&FinitePoset::chain(1)).unwrap()
    }

    /// The chain with `k >= 1` elements.
    pub fn chain(k: usize) -> Self {
        assert!(k >= 1);
        Self::from_upsets(&FinitePoset::chain(k - 1)).unwrap()
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.m
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.m + b]
    }

    #[inline]
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.m + b] as Elem
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.m + b] as Elem
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.m + b] as Elem
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.bottom)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub(crate) fn meet_table(&self) -> &[u16] {
        &self.meet
    }

    pub(crate) fn join_table(&self) -> &[u16] {
        &self.join
    }

    pub(crate) fn imp_table(&self) -> &[u16] {
        &self.imp
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.m).map(|a| (0..self.m).map(|b| self.leq(a, b)).collect()).collect()
    }

    pub fn meet_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.m).map(|a| (0..self.m).map(|b| self.meet(a, b)).collect()).collect()
    }

    pub fn join_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.m).map(|a| (0..self.m).map(|b| self.join(a, b)).collect()).collect()
    }

    pub fn imp_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.m).map(|a| (0..self.m).map(|b| self.imp(a, b)).collect()).collect()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn without_provenance(mut self) -> Self {
        self.provenance = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.m {
            return Err(Error::invalid(format!("{} labels for {} elements", labels.len(), self.m)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn find_label(&self, name: &str) -> Option<Elem> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// Check lattice, boundedness, distributivity and residuation, in that order.
    pub fn verify_heyting(&self) -> std::result::Result<(), AxiomViolation> {
        let m = self.m;
        let fail = |axiom: &'static str, witness: Vec<Elem>| Err(AxiomViolation { axiom, witness });
        for a in 0..m {
            if !self.leq(a, a) {
                return fail("reflexivity", vec![a]);
            }
            for b in 0..m {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return fail("antisymmetry", vec![a, b]);
                }
            }
        }
        let triples = |check: &(dyn Fn(Elem, Elem, Elem) -> bool + Sync)| -> Option<Vec<Elem>> {
            (0..m).into_par_iter().find_map_first(|a| {
                for b in 0..m {
                    for c in 0..m {
                        if !check(a, b, c) {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
                None
            })
        };
        if let Some(w) = triples(&|a, b, c| !(self.leq(a, b) && self.leq(b, c)) || self.leq(a, c)) {
            return fail("transitivity", w);
        }
        if let Some(w) = triples(&|a, b, c| self.leq(c, self.meet(a, b)) == (self.leq(c, a) && self.leq(c, b))) {
            return fail("meet is greatest lower bound", w);
        }
        if let Some(w) = triples(&|a, b, c| self.leq(self.join(a, b), c) == (self.leq(a, c) && self.leq(b, c))) {
            return fail("join is least upper bound", w);
        }
        for a in 0..m {
            if !self.leq(self.bottom, a) {
                return fail("bottom is least", vec![self.bottom, a]);
            }
            if !self.leq(a, self.top) {
                return fail("top is greatest", vec![a, self.top]);
            }
        }
        if let Some(w) =
            triples(&|a, b, c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c)))
        {
            return fail("distributivity", w);
        }
        if let Some(w) = triples(&|a, b, c| self.leq(self.meet(a, b), c) == self.leq(a, self.imp(b, c))) {
            return fail("residuation", w);
        }
        Ok(())
    }

    /// Finitely subdirectly irreducible: nontrivial, and `x ∨ y = 1` forces `x = 1` or `y = 1`.
    pub fn is_fsi(&self) -> bool {
        if self.m == 1 {
            return false;
        }
        (0..self.m).all(|x| (0..self.m).all(|y| self.join(x, y) != self.top || x == self.top || y == self.top))
    }

    /// Elements comparable with every element, in ascending order.
    pub fn nodes(&self) -> Vec<Elem> {
        let mut v: Vec<Elem> = (0..self.m)
            .filter(|&a| (0..self.m).all(|b| self.leq(a, b) || self.leq(b, a)))
            .collect();
        v.sort_by_key(|&a| (0..self.m).filter(|&b| self.leq(b, a)).count());
        v
    }

    /// Join-irreducible elements (nonzero, not the join of the elements strictly below).
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        (0..self.m)
            .filter(|&j| {
                j != self.bottom && (0..self.m).filter(|&x| self.lt(x, j)).fold(self.bottom, |acc, x| self.join(acc, x)) != j
            })
            .collect()
    }

    /// `self + lower`: `lower` pasted below `self`, gluing the top of `lower` to the
    /// bottom of `self`. Elements of `lower` come first, then the nonzero elements of
    /// `self` in their original order.
    pub fn alg_sum(&self, lower: &HeytingAlgebra) -> HeytingAlgebra {
        let a = self;
        let b = lower;
        let mb = b.m;
        let m = mb + a.m - 1;
        // Position of each element of `a` in the sum; 0_A is glued to 1_B.
        let mut pos_a = vec![0usize; a.m];
        let mut back_a: Vec<Option<Elem>> = vec![None; m];
        let mut k = mb;
        for x in 0..a.m {
            if x == a.bottom {
                pos_a[x] = b.top;
            } else {
                pos_a[x] = k;
                back_a[k] = Some(x);
                k += 1;
            }
        }
        let top = pos_a[a.top];
        let side = |x: Elem| -> std::result::Result<Elem, Elem> {
            // Ok(element of b) or Err(nonzero element of a)
            if x < mb {
                Ok(x)
            } else {
                Err(back_a[x].unwrap())
            }
        };
        let leq = (0..m * m)
            .map(|kk| match (side(kk / m), side(kk % m)) {
                (Ok(x), Ok(y)) => b.leq(x, y),
                (Err(x), Err(y)) => a.leq(x, y),
                (Ok(_), Err(_)) => true,
                (Err(_), Ok(_)) => false,
            })
            .collect();
        let meet = table(m, |x, y| match (side(x), side(y)) {
            (Ok(x), Ok(y)) => b.meet(x, y),
            (Err(x), Err(y)) => pos_a[a.meet(x, y)],
            (Ok(x), Err(_)) => x,
            (Err(_), Ok(y)) => y,
        });
        let join = table(m, |x, y| match (side(x), side(y)) {
            (Ok(x), Ok(y)) => b.join(x, y),
            (Err(x), Err(y)) => pos_a[a.join(x, y)],
            (Ok(_), Err(y)) => pos_a[y],
            (Err(x), Ok(_)) => pos_a[x],
        });
        let imp = table(m, |x, y| match (side(x), side(y)) {
            (Ok(x), Ok(y)) => {
                let r = b.imp(x, y);
                if r == b.top {
                    top
                } else {
                    r
                }
            }
            (Err(x), Err(y)) => pos_a[a.imp(x, y)],
            (Ok(_), Err(_)) => top,
            (Err(x), Ok(y)) => {
                if y == b.top {
                    pos_a[a.imp(x, a.bottom)]
                } else {
                    y
                }
            }
        });
        let labels = if a.labels.is_some() || b.labels.is_some() {
            let mut l: Vec<String> = (0..mb).map(|x| b.label(x)).collect();
            for x in (0..a.m).filter(|&x| x != a.bottom) {
                l.push(a.label(x));
            }
            Some(l)
        } else {
            None
        };
        HeytingAlgebra { m, leq, meet, join, imp, bottom: b.bottom, top, labels, provenance: None }
    }

    /// `parts[0] + parts[1] + ...`, the first part on top.
    pub fn sum_of(parts: &[HeytingAlgebra]) -> HeytingAlgebra {
        let mut it = parts.iter().rev();
        let mut acc = it.next().expect("sum of no algebras").clone();
        for p in it {
            acc = p.alg_sum(&acc);
        }
        acc
    }

    /// Componentwise product; element `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &HeytingAlgebra) -> Result<HeytingAlgebra> {
        let (ma, mb) = (self.m, other.m);
        let m = ma * mb;
        if m > MAX_ELEMENTS {
            return Err(Error::cap(format!("product has {m} elements, cap is {MAX_ELEMENTS}")));
        }
        let split = |x: usize| (x / mb, x % mb);
        let leq = (0..m * m)
            .map(|k| {
                let ((a1, b1), (a2, b2)) = (split(k / m), split(k % m));
                self.leq(a1, a2) && other.leq(b1, b2)
            })
            .collect();
        let op = |f: &(dyn Fn(&HeytingAlgebra, Elem, Elem) -> Elem + Sync)| {
            table(m, |x, y| {
                let ((a1, b1), (a2, b2)) = (split(x), split(y));
                f(self, a1, a2) * mb + f(other, b1, b2)
            })
        };
        let labels = if self.labels.is_some() || other.labels.is_some() {
            Some((0..m).map(|x| format!("({},{})", self.label(x / mb), other.label(x % mb))).collect())
        } else {
            None
        };
        Ok(HeytingAlgebra {
            m,
            leq,
            meet: op(&|h, a, b| h.meet(a, b)),
            join: op(&|h, a, b| h.join(a, b)),
            imp: op(&|h, a, b| h.imp(a, b)),
            bottom: self.bottom * mb + other.bottom,
            top: self.top * mb + other.top,
            labels,
            provenance: None,
        })
    }

    /// The interval `[lo, hi]` as a Heyting algebra, with `x → y` taken as `(x → y) ∧ hi`.
    /// Returns the algebra and the parent index of each of its elements.
    pub fn interval(&self, lo: Elem, hi: Elem) -> Result<(HeytingAlgebra, Vec<Elem>)> {
        if !self.leq(lo, hi) {
            return Err(Error::invalid(format!("{lo} is not below {hi}")));
        }
        let els: Vec<Elem> = (0..self.m).filter(|&x| self.leq(lo, x) && self.leq(x, hi)).collect();
        let sub = self.restrict_to(&els, |a, x, y| a.meet(a.imp(x, y), hi))?;
        Ok((sub, els))
    }

    /// Tables restricted to `els`, which must be closed under the operations given.
    fn restrict_to(
        &self,
        els: &[Elem],
        imp: impl Fn(&HeytingAlgebra, Elem, Elem) -> Elem + Sync,
    ) -> Result<HeytingAlgebra> {
        let k = els.len();
        let mut pos = vec![usize::MAX; self.m];
        for (i, &e) in els.iter().enumerate() {
            pos[e] = i;
        }
        let look = |e: Elem| -> Elem { pos[e] };
        let meet = table(k, |x, y| look(self.meet(els[x], els[y])));
        let join = table(k, |x, y| look(self.join(els[x], els[y])));
        let impt = table(k, |x, y| look(imp(self, els[x], els[y])));
        if meet.iter().chain(join.iter()).chain(impt.iter()).any(|&v| v as usize >= k) {
            return Err(Error::invalid("element set is not closed under the operations"));
        }
        let leq = (0..k * k).map(|kk| self.leq(els[kk / k], els[kk % k])).collect();
        let lo = els.iter().copied().find(|&x| els.iter().all(|&y| self.leq(x, y)));
        let hi = els.iter().copied().find(|&x| els.iter().all(|&y| self.leq(y, x)));
        let (lo, hi) = lo.zip(hi).ok_or_else(|| Error::invalid("element set has no bounds"))?;
        let labels = self.labels.as_ref().map(|l| els.iter().map(|&e| l[e].clone()).collect());
        Ok(HeytingAlgebra {
            m: k,
            leq,
            meet,
            join,
            imp: impt,
            bottom: pos[lo],
            top: pos[hi],
            labels,
            provenance: None,
        })
    }

    /// Least subalgebra containing `gens` (and 0, 1).
    pub fn subalgebra_generated(&self, gens: &[Elem]) -> SubalgebraHandle {
        let mut inside = vec![false; self.m];
        let mut members: Vec<Elem> = Vec::new();
        let push = |e: Elem, inside: &mut Vec<bool>, members: &mut Vec<Elem>| {
            if !inside[e] {
                inside[e] = true;
                members.push(e);
            }
        };
        push(self.bottom, &mut inside, &mut members);
        push(self.top, &mut inside, &mut members);
        for &g in gens {
            push(g, &mut inside, &mut members);
        }
        // Each new element is combined with everything found before it.
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let mut j = 0;
            while j <= i {
                let y = members[j];
                for z in [
                    self.meet(x, y),
                    self.join(x, y),
                    self.imp(x, y),
                    self.imp(y, x),
                ] {
                    push(z, &mut inside, &mut members);
                }
                j += 1;
            }
            i += 1;
        }
        members.sort_unstable();
        SubalgebraHandle { parent_len: self.m, members }
    }

    /// Some single generator of the whole algebra, if one exists.
    pub fn is_one_generated(&self) -> Option<Elem> {
        (0..self.m).find(|&a| self.subalgebra_generated(&[a]).len() == self.m)
    }
}

/// A subset of an algebra closed under the operations and containing 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubalgebraHandle {
    parent_len: usize,
    members: Vec<Elem>,
}

impl SubalgebraHandle {
    /// Wrap `members` after checking closure in `parent`.
    pub fn new(parent: &HeytingAlgebra, members: &[Elem]) -> Result<Self> {
        let mut v: Vec<Elem> = members.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.iter().any(|&e| e >= parent.len()) {
            return Err(Error::invalid("member out of range"));
        }
        let mut inside = vec![false; parent.len()];
        for &e in &v {
            inside[e] = true;
        }
        if !inside[parent.bottom()] || !inside[parent.top()] {
            return Err(Error::invalid("a subalgebra must contain 0 and 1"));
        }
        for &x in &v {
            for &y in &v {
                for (op, z) in [
                    ("meet", parent.meet(x, y)),
                    ("join", parent.join(x, y)),
                    ("implication", parent.imp(x, y)),
                ] {
                    if !inside[z] {
                        return Err(Error::invalid(format!(
                            "not closed under {op}: {} and {} give {}",
                            parent.label(x),
                            parent.label(y),
                            parent.label(z)
                        )));
                    }
                }
            }
        }
        Ok(SubalgebraHandle { parent_len: parent.len(), members: v })
    }

    pub fn whole(parent: &HeytingAlgebra) -> Self {
        SubalgebraHandle { parent_len: parent.len(), members: parent.elements().collect() }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_len(&self) -> usize {
        self.parent_len
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.parent_len
    }

    /// The subalgebra as a standalone algebra; element `i` is parent element `members()[i]`.
    pub fn algebra(&self, parent: &HeytingAlgebra) -> HeytingAlgebra {
        parent
            .restrict_to(&self.members, |a, x, y| a.imp(x, y))
            .expect("subalgebra handle is closed")
    }
}

/// Bitmask over the join-irreducibles `js` below `a`.
fn ji_mask(a: &HeytingAlgebra, js: &[Elem], x: Elem) -> Mask {
    js.iter().enumerate().filter(|&(_, &j)| a.leq(j, x)).fold(0, |acc, (k, _)| acc | (1u64 << k))
}

/// Poset of join-irreducibles under the algebra order (at most 64 of them).
pub(crate) fn ji_poset(a: &HeytingAlgebra) -> Option<(FinitePoset, Vec<Elem>)> {
    let js = a.join_irreducibles();
    if js.len() > 64 {
        return None;
    }
    let up = js.iter().map(|&j| ji_mask_up(a, &js, j)).collect();
    FinitePoset::from_up_masks(up).ok().map(|p| (p, js))
}

fn ji_mask_up(a: &HeytingAlgebra, js: &[Elem], x: Elem) -> Mask {
    js.iter().enumerate().filter(|&(_, &j)| a.leq(x, j)).fold(0, |acc, (k, _)| acc | (1u64 << k))
}

/// Heyting isomorphism `a → b` as an element map, if one exists.
///
/// Works through the posets of join-irreducibles (Birkhoff duality); the induced map is
/// checked against every table before it is returned.
pub fn algebra_iso(a: &HeytingAlgebra, b: &HeytingAlgebra) -> Option<Vec<Elem>> {
    if a.len() != b.len() {
        return None;
    }
    let (pa, ja) = ji_poset(a)?;
    let (pb, jb) = ji_poset(b)?;
    let phi = are_isomorphic(&pa, &pb)?;
    // Element of b for each down-set of join-irreducibles.
    let mut by_mask = std::collections::HashMap::new();
    for y in b.elements() {
        by_mask.insert(ji_mask(b, &jb, y), y);
    }
    let mut f = Vec::with_capacity(a.len());
    for x in a.elements() {
        let ma = ji_mask(a, &ja, x);
        let mb = bits(ma).fold(0u64, |acc, k| acc | (1u64 << phi[k]));
        f.push(*by_mask.get(&mb)?);
    }
    is_algebra_iso(a, b, &f).then_some(f)
}

/// Check that `f` is a bijective homomorphism `a → b`.
pub fn is_algebra_iso(a: &HeytingAlgebra, b: &HeytingAlgebra, f: &[Elem]) -> bool {
    if f.len() != a.len() || a.len() != b.len() {
        return false;
    }
    let mut seen = vec![false; b.len()];
    for &y in f {
        if y >= b.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    is_homomorphism(a, b, f)
}

/// Check that `f` preserves 0, 1, meet, join and implication.
pub fn is_homomorphism(a: &HeytingAlgebra, b: &HeytingAlgebra, f: &[Elem]) -> bool {
    f.len() == a.len()
        && f[a.bottom()] == b.bottom()
        && f[a.top()] == b.top()
        && a.elements().all(|x| {
            a.elements().all(|y| {
                f[a.meet(x, y)] == b.meet(f[x], f[y])
                    && f[a.join(x, y)] == b.join(f[x], f[y])
                    && f[a.imp(x, y)] == b.imp(f[x], f[y])
            })
        })
}
