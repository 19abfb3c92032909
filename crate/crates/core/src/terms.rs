//! Terms over `∧, ∨, →, 0, 1`, evaluation, and brute-force validity of equations.
//!
//! Text syntax: `&`, `|`, `->`, `0`, `1`, variables `x0, x1, ...`. `&` binds tighter
//! than `|`, which binds tighter than `->`; `->` associates to the right, the others
//! to the left. An equation is `lhs = rhs`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Elem, HeytingAlgebra};
use crate::error::{Error, Result};
use crate::poset::{enumerate_labeled_posets, FinitePoset};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Term, b: Term) -> Term {
        Term::Imp(Box::new(a), Box::new(b))
    }

    /// Left-nested join; the empty join is `0`.
    pub fn join_all(parts: impl IntoIterator<Item = Term>) -> Term {
        parts.into_iter().reduce(Term::join).unwrap_or(Term::Zero)
    }

    /// Left-nested meet; the empty meet is `1`.
    pub fn meet_all(parts: impl IntoIterator<Item = Term>) -> Term {
        parts.into_iter().reduce(Term::meet).unwrap_or(Term::One)
    }

    /// Sorted indices of the variables that occur.
    pub fn vars(&self) -> Vec<usize> {
        let mut v = Vec::new();
        self.collect_vars(&mut v);
        v.sort_unstable();
        v.dedup();
        v
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(i) => out.push(*i),
            Term::Zero | Term::One => {}
            Term::Meet(a, b) | Term::Join(a, b) | Term::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 1,
            Term::Meet(a, b) | Term::Join(a, b) | Term::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Term::Imp(..) => 1,
            Term::Join(..) => 2,
            Term::Meet(..) => 3,
            _ => 4,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        let paren = self.prec() < ctx;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Term::Var(i) => write!(f, "x{i}")?,
            Term::Zero => f.write_str("0")?,
            Term::One => f.write_str("1")?,
            Term::Meet(a, b) => {
                a.write_prec(f, 3)?;
                f.write_str(" & ")?;
                b.write_prec(f, 4)?;
            }
            Term::Join(a, b) => {
                a.write_prec(f, 2)?;
                f.write_str(" | ")?;
                b.write_prec(f, 3)?;
            }
            Term::Imp(a, b) => {
                a.write_prec(f, 2)?;
                f.write_str(" -> ")?;
                b.write_prec(f, 1)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

impl std::str::FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        let mut p = Parser { toks: tokenize(s)?, pos: 0 };
        let t = p.imp()?;
        if p.pos != p.toks.len() {
            return Err(Error::invalid(format!("unexpected {:?} in term", p.toks[p.pos])));
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    /// `t ≈ 1`.
    pub fn is_one(t: Term) -> Self {
        Equation { lhs: t, rhs: Term::One }
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut v = self.lhs.vars();
        v.extend(self.rhs.vars());
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl std::str::FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Equation> {
        let s = s.replace('≈', "=");
        let mut parts = s.splitn(2, '=');
        let lhs = parts.next().unwrap_or("");
        let rhs = parts.next().ok_or_else(|| Error::invalid("equation needs '='"))?;
        if rhs.contains('=') {
            return Err(Error::invalid("equation has more than one '='"));
        }
        Ok(Equation { lhs: lhs.parse()?, rhs: rhs.parse()? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Zero,
    One,
    Var(usize),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '&' | '∧' => {
                out.push(Tok::And);
                i += 1;
            }
            '|' | '∨' => {
                out.push(Tok::Or);
                i += 1;
            }
            '→' => {
                out.push(Tok::Arrow);
                i += 1;
            }
            '-' if cs.get(i + 1) == Some(&'>') => {
                out.push(Tok::Arrow);
                i += 2;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0' => {
                out.push(Tok::Zero);
                i += 1;
            }
            '1' => {
                out.push(Tok::One);
                i += 1;
            }
            'x' => {
                let start = i + 1;
                let mut j = start;
                while j < cs.len() && cs[j].is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return Err(Error::invalid(format!("variable without index at column {i}")));
                }
                let idx: String = cs[start..j].iter().collect();
                out.push(Tok::Var(idx.parse().map_err(|_| Error::invalid("variable index too large"))?));
                i = j;
            }
            _ => return Err(Error::invalid(format!("unexpected character {c:?} at column {i}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn imp(&mut self) -> Result<Term> {
        let lhs = self.join()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.imp()?;
            return Ok(Term::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Term> {
        let mut t = self.meet()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            t = Term::join(t, self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            t = Term::meet(t, self.atom()?);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        let tok = self.peek().cloned().ok_or_else(|| Error::invalid("unexpected end of term"))?;
        self.pos += 1;
        match tok {
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::Var(i) => Ok(Term::Var(i)),
            Tok::LParen => {
                let t = self.imp()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::invalid("missing ')'"));
                }
                self.pos += 1;
                Ok(t)
            }
            other => Err(Error::invalid(format!("unexpected {other:?}"))),
        }
    }
}

/// Value of `t` in `a` under `assignment` (variable index → element).
pub fn eval(t: &Term, a: &HeytingAlgebra, assignment: &BTreeMap<usize, Elem>) -> Result<Elem> {
    Ok(match t {
        Term::Var(i) => {
            let e = *assignment.get(i).ok_or_else(|| Error::invalid(format!("no value for x{i}")))?;
            if e >= a.len() {
                return Err(Error::invalid(format!("x{i} is assigned a missing element")));
            }
            e
        }
        Term::Zero => a.bottom(),
        Term::One => a.top(),
        Term::Meet(l, r) => a.meet(eval(l, a, assignment)?, eval(r, a, assignment)?),
        Term::Join(l, r) => a.join(eval(l, a, assignment)?, eval(r, a, assignment)?),
        Term::Imp(l, r) => a.imp(eval(l, a, assignment)?, eval(r, a, assignment)?),
    })
}

/// Outcome of a validity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Validity {
    Valid,
    /// The least falsifying assignment in mixed-radix order.
    Falsified { assignment: BTreeMap<usize, Elem>, lhs: Elem, rhs: Elem },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Default bound on the number of assignments examined.
pub const DEFAULT_SEARCH_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy)]
enum Op {
    Var(usize),
    Const(Elem),
    Meet(usize, usize),
    Join(usize, usize),
    Imp(usize, usize),
}

/// Shared-subterm postfix program; node `k` is computed once the variable at position
/// `stage[k]` (in the occurring-variable order) has its value.
struct Program {
    ops: Vec<Op>,
    by_stage: Vec<Vec<usize>>,
    constants: Vec<usize>,
    lhs: usize,
    rhs: usize,
}

impl Program {
    fn compile(eq: &Equation, a: &HeytingAlgebra, vars: &[usize]) -> Program {
        let pos: HashMap<usize, usize> = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut ops = Vec::new();
        let mut stage: Vec<Option<usize>> = Vec::new();
        let mut memo: HashMap<Term, usize> = HashMap::new();
        fn go(
            t: &Term,
            a: &HeytingAlgebra,
            pos: &HashMap<usize, usize>,
            ops: &mut Vec<Op>,
            stage: &mut Vec<Option<usize>>,
            memo: &mut HashMap<Term, usize>,
        ) -> usize {
            if let Some(&k) = memo.get(t) {
                return k;
            }
            let (op, st) = match t {
                Term::Var(i) => (Op::Var(pos[i]), Some(pos[i])),
                Term::Zero => (Op::Const(a.bottom()), None),
                Term::One => (Op::Const(a.top()), None),
                Term::Meet(l, r) | Term::Join(l, r) | Term::Imp(l, r) => {
                    let x = go(l, a, pos, ops, stage, memo);
                    let y = go(r, a, pos, ops, stage, memo);
                    let st = stage[x].max(stage[y]);
                    let op = match t {
                        Term::Meet(..) => Op::Meet(x, y),
                        Term::Join(..) => Op::Join(x, y),
                        _ => Op::Imp(x, y),
                    };
                    (op, st)
                }
            };
            ops.push(op);
            stage.push(st);
            memo.insert(t.clone(), ops.len() - 1);
            ops.len() - 1
        }
        let lhs = go(&eq.lhs, a, &pos, &mut ops, &mut stage, &mut memo);
        let rhs = go(&eq.rhs, a, &pos, &mut ops, &mut stage, &mut memo);
        let mut by_stage = vec![Vec::new(); vars.len()];
        let mut constants = Vec::new();
        for (k, s) in stage.iter().enumerate() {
            match s {
                Some(s) => by_stage[*s].push(k),
                None => constants.push(k),
            }
        }
        Program { ops, by_stage, constants, lhs, rhs }
    }

    #[inline]
    fn run(&self, a: &HeytingAlgebra, nodes: &[usize], slots: &mut [u16], vals: &[u16]) {
        let m = a.len();
        let (mt, jt, it) = (a.meet_table(), a.join_table(), a.imp_table());
        for &k in nodes {
            slots[k] = match self.ops[k] {
                Op::Var(p) => vals[p],
                Op::Const(c) => c as u16,
                Op::Meet(x, y) => mt[slots[x] as usize * m + slots[y] as usize],
                Op::Join(x, y) => jt[slots[x] as usize * m + slots[y] as usize],
                Op::Imp(x, y) => it[slots[x] as usize * m + slots[y] as usize],
            };
        }
    }

    /// Depth-first search over variables `k..`; returns the first falsifier below the prefix.
    fn search(&self, a: &HeytingAlgebra, k: usize, slots: &mut [u16], vals: &mut [u16]) -> bool {
        if k == vals.len() {
            return slots[self.lhs] == slots[self.rhs];
        }
        for v in 0..a.len() {
            vals[k] = v as u16;
            self.run(a, &self.by_stage[k], slots, vals);
            if !self.search(a, k + 1, slots, vals) {
                return false;
            }
        }
        true
    }
}

/// Check `eq` in `a` over every assignment of its variables, with the default cap.
pub fn validates(a: &HeytingAlgebra, eq: &Equation) -> Result<Validity> {
    validates_with_cap(a, eq, DEFAULT_SEARCH_CAP)
}

/// Check `eq` in `a`, refusing when `|A|^#vars` exceeds `cap`.
///
/// Only variables occurring in `eq` are enumerated, in increasing index order with the
/// smallest index most significant. The reported falsifier is the least one in that
/// order; the first variable is split across threads.
pub fn validates_with_cap(a: &HeytingAlgebra, eq: &Equation, cap: u128) -> Result<Validity> {
    let vars = eq.vars();
    let space = (a.len() as u128).checked_pow(vars.len() as u32).unwrap_or(u128::MAX);
    if space > cap {
        return Err(Error::cap(format!("{space} assignments exceed the search cap {cap}")));
    }
    let prog = Program::compile(eq, a, &vars);
    let n = prog.ops.len();
    let falsifier = |first: Option<usize>| -> Option<Vec<u16>> {
        let mut slots = vec![0u16; n];
        let mut vals = vec![0u16; vars.len()];
        prog.run(a, &prog.constants, &mut slots, &vals);
        let start = match first {
            Some(v0) => {
                vals[0] = v0 as u16;
                prog.run(a, &prog.by_stage[0], &mut slots, &vals);
                1
            }
            None => 0,
        };
        (!prog.search(a, start, &mut slots, &mut vals)).then(|| {
            let mut out = vals.clone();
            out.push(slots[prog.lhs]);
            out.push(slots[prog.rhs]);
            out
        })
    };
    let found = if vars.is_empty() {
        falsifier(None)
    } else {
        (0..a.len()).into_par_iter().find_map_first(|v0| falsifier(Some(v0)))
    };
    Ok(match found {
        None => Validity::Valid,
        Some(mut v) => {
            let rhs = v.pop().unwrap() as Elem;
            let lhs = v.pop().unwrap() as Elem;
            Validity::Falsified {
                assignment: vars.iter().zip(v).map(|(&x, e)| (x, e as Elem)).collect(),
                lhs,
                rhs,
            }
        }
    })
}

/// `d_1 = x1 ∨ (x1 → 0)`, `d_{k+1} = x_{k+1} ∨ (x_{k+1} → d_k)`.
pub fn depth_term(n: usize) -> Term {
    assert!(n >= 1, "depth_term needs n >= 1");
    let mut t = Term::join(Term::var(1), Term::imp(Term::var(1), Term::Zero));
    for k in 2..=n {
        t = Term::join(Term::var(k), Term::imp(Term::var(k), t));
    }
    t
}

/// `w_n = ⋁_{i=0}^{n} (x_i → ⋁_{j≠i} x_j)`.
pub fn width_term(n: usize) -> Term {
    assert!(n >= 1, "width_term needs n >= 1");
    Term::join_all((0..=n).map(|i| Term::imp(Term::var(i), Term::join_all((0..=n).filter(|&j| j != i).map(Term::var)))))
}

/// `ψ` for the order `z` on `y_1..y_{m}` (point `i` of `z` is `y_{i+1}`, `x` is `x0`):
/// `⋁_i (y_i → (x ∨ ⋁_{j: y_i ≰ y_j} y_j))`.
pub fn psi_term(z: &FinitePoset) -> Term {
    let m = z.len();
    Term::join_all((0..m).map(|i| {
        let above = Term::join_all((0..m).filter(|&j| !z.leq(i, j)).map(|j| Term::var(j + 1)));
        Term::imp(Term::var(i + 1), Term::join(Term::var(0), above))
    }))
}

/// `δ = ψ ∨ (x → ⋁_i y_i)`.
pub fn delta_term(z: &FinitePoset) -> Term {
    let ys = Term::join_all((0..z.len()).map(|i| Term::var(i + 1)));
    Term::join(psi_term(z), Term::imp(Term::var(0), ys))
}

/// Largest `n` accepted by [`sigma_axioms`].
pub const MAX_SIGMA: usize = 3;

/// `Σ_n`: one equation `δ_{n,k} ≈ 1` per labeled order on `n + 1` points, in the fixed
/// lexicographic enumeration order.
pub fn sigma_axioms(n: usize) -> Result<Vec<Equation>> {
    if n > MAX_SIGMA {
        return Err(Error::cap(format!("sigma_axioms supports n <= {MAX_SIGMA}")));
    }
    Ok(enumerate_labeled_posets(n + 1)?.iter().map(|z| Equation::is_one(delta_term(z))).collect())
}

/// `⋁_{i=1}^{k} ((x0 → x_i) ∨ (x_i → x0))`.
pub fn comparability_term(k: usize) -> Term {
    Term::join_all((1..=k).map(|i| {
        Term::join(Term::imp(Term::var(0), Term::var(i)), Term::imp(Term::var(i), Term::var(0)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;

    fn asg(pairs: &[(usize, Elem)]) -> BTreeMap<usize, Elem> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn parse_and_print() {
        let t: Term = "x0 -> x1 -> x2".parse().unwrap();
        assert_eq!(t, Term::imp(Term::var(0), Term::imp(Term::var(1), Term::var(2))));
        let t: Term = "x0 & x1 | x2".parse().unwrap();
        assert_eq!(t, Term::join(Term::meet(Term::var(0), Term::var(1)), Term::var(2)));
        for s in ["(x0 -> x1) | (x1 -> x0)", "(x0 -> x1) -> x2", "x0 & (x1 | x2)", "0 | 1"] {
            let t: Term = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
            assert_eq!(t.to_string().parse::<Term>().unwrap(), t);
        }
        assert!("x0 &".parse::<Term>().is_err());
        assert!("x".parse::<Term>().is_err());
        let e: Equation = "(x0->x1)|(x1->x0) = 1".parse().unwrap();
        assert_eq!(e.rhs, Term::One);
        assert!("x0".parse::<Equation>().is_err());
    }

    #[test]
    fn eval_examples() {
        let c3 = HeytingAlgebra::chain(3);
        let t: Term = "x0 -> x0".parse().unwrap();
        for a in c3.elements() {
            assert_eq!(eval(&t, &c3, &asg(&[(0, a)])).unwrap(), c3.top());
        }
        let two = HeytingAlgebra::bool2();
        assert_eq!(eval(&depth_term(1), &two, &asg(&[(1, two.bottom())])).unwrap(), two.top());
        assert_eq!(eval(&width_term(1), &c3, &asg(&[(0, 1), (1, 2)])).unwrap(), c3.top());
        assert!(eval(&t, &c3, &BTreeMap::new()).is_err());
    }

    #[test]
    fn validity_examples() {
        let two = HeytingAlgebra::bool2();
        let d1 = Equation::is_one(depth_term(1));
        assert!(validates(&two, &d1).unwrap().is_valid());
        let c3 = HeytingAlgebra::chain(3);
        match validates(&c3, &d1).unwrap() {
            Validity::Falsified { assignment, .. } => assert_eq!(assignment, asg(&[(1, 1)])),
            v => panic!("{v:?}"),
        }
        let prelin: Equation = "(x0->x1)|(x1->x0) = 1".parse().unwrap();
        assert!(validates(&c3, &prelin).unwrap().is_valid());
        let big = HeytingAlgebra::from_upsets(&FinitePoset::antichain(6)).unwrap();
        assert!(matches!(validates(&big, &Equation::is_one(width_term(3))), Err(Error::Cap(_))));
    }

    #[test]
    fn term_family_shapes() {
        assert_eq!(depth_term(1).to_string(), "x1 | (x1 -> 0)");
        assert_eq!(depth_term(2).to_string(), "x2 | (x2 -> x1 | (x1 -> 0))");
        for n in 1..5 {
            assert_eq!(depth_term(n).vars().len(), n);
        }
        assert_eq!(width_term(1).to_string(), "(x0 -> x1) | (x1 -> x0)");
        let w2 = width_term(2);
        let mut disjuncts = 0;
        let mut t = &w2;
        while let Term::Join(l, r) = t {
            assert!(matches!(**r, Term::Imp(..)));
            disjuncts += 1;
            t = l;
        }
        assert_eq!(disjuncts + 1, 3);
        let d = HeytingAlgebra::from_upsets(&FinitePoset::antichain(2)).unwrap();
        let rooted = HeytingAlgebra::from_upsets(&FinitePoset::tower(
            &[FinitePoset::chain(1), FinitePoset::antichain(2)],
            false,
        ))
        .unwrap();
        assert!(validates(&d, &Equation::is_one(width_term(1))).unwrap().is_valid());
        assert!(validates(&rooted, &Equation::is_one(width_term(2))).unwrap().is_valid());
        assert!(!validates(&rooted, &Equation::is_one(width_term(1))).unwrap().is_valid());
    }

    #[test]
    fn sigma_shapes() {
        assert_eq!(sigma_axioms(1).unwrap().len(), 3);
        assert_eq!(sigma_axioms(2).unwrap().len(), 19);
        for eq in sigma_axioms(2).unwrap() {
            assert!(eq.vars().iter().all(|&v| v <= 3));
        }
        // On the antichain every y_i has all others above-incomparable.
        let psi = psi_term(&FinitePoset::chain(1));
        assert_eq!(psi.to_string(), "x1 -> x0 | 0");
        assert_eq!(Term::join_all(std::iter::empty()), Term::Zero);
        assert_eq!(Term::meet_all(std::iter::empty()), Term::One);
    }

    #[test]
    fn staged_search_matches_naive_eval() {
        let a = HeytingAlgebra::from_upsets(&FinitePoset::tower(
            &[FinitePoset::chain(1), FinitePoset::antichain(2), FinitePoset::chain(1)],
            false,
        ))
        .unwrap();
        for eq in sigma_axioms(1).unwrap().into_iter().chain([Equation::is_one(width_term(2))]) {
            let vars = eq.vars();
            let mut naive = None;
            let m = a.len();
            'outer: for code in 0..m.pow(vars.len() as u32) {
                let mut rest = code;
                let mut vals = vec![0; vars.len()];
                for k in (0..vars.len()).rev() {
                    vals[k] = rest % m;
                    rest /= m;
                }
                let s: BTreeMap<usize, Elem> = vars.iter().copied().zip(vals).collect();
                if eval(&eq.lhs, &a, &s).unwrap() != eval(&eq.rhs, &a, &s).unwrap() {
                    naive = Some(s);
                    break 'outer;
                }
            }
            match validates(&a, &eq).unwrap() {
                Validity::Valid => assert!(naive.is_none()),
                Validity::Falsified { assignment, .. } => assert_eq!(Some(assignment), naive),
            }
        }
    }
}
