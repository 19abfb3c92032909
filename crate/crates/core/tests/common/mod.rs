//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use esakia::poset::FinitePoset;
use esakia::HeytingAlgebra;
use rand::Rng;

/// Number of partial orders on `n` points up to isomorphism, by listing every
/// reflexive, antisymmetric, transitive relation and canonicalising under all
/// permutations.
pub fn count_posets_brute(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    for code in 0u64..(1u64 << pairs.len()) {
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                r[i][j] = true;
            }
        }
        let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(r[i][j] && r[j][i])));
        let trans = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(r[i][j] && r[j][k]) || r[i][k])));
        if !antisym || !trans {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut v = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        v[p[i] * n + p[j]] = r[i][j];
                    }
                }
                v
            })
            .min()
            .unwrap_or_default();
        seen.insert(canon);
    }
    seen.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// A random order on `n` points: each pair `i < j` is related with probability `density`,
/// then the transitive closure is taken.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> FinitePoset {
    let covers: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(density)).collect();
    FinitePoset::from_covers(n, &covers).unwrap()
}

/// Every closed set of a closure operator on `0..m`, in lectic order.
pub fn next_closure(m: usize, close: impl Fn(&[bool]) -> Vec<bool>) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut a = close(&vec![false; m]);
    loop {
        out.push(a.clone());
        let mut next = None;
        for i in (0..m).rev() {
            if a[i] {
                continue;
            }
            let mut seed: Vec<bool> = (0..m).map(|j| j < i && a[j]).collect();
            seed[i] = true;
            let b = close(&seed);
            if (0..i).all(|j| b[j] == a[j]) {
                next = Some(b);
                break;
            }
        }
        match next {
            Some(b) => a = b,
            None => return out,
        }
    }
}

/// All subsets of `a` that contain 0 and 1 and are closed under `∧, ∨, →`.
pub fn subalgebras_brute(a: &HeytingAlgebra) -> Vec<Vec<usize>> {
    let m = a.len();
    let close = |s: &[bool]| {
        let mut s = s.to_vec();
        s[a.bottom()] = true;
        s[a.top()] = true;
        loop {
            let members: Vec<usize> = (0..m).filter(|&x| s[x]).collect();
            let mut grew = false;
            for &x in &members {
                for &y in &members {
                    for z in [a.meet(x, y), a.join(x, y), a.imp(x, y)] {
                        if !s[z] {
                            s[z] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return s;
            }
        }
    };
    next_closure(m, close).into_iter().map(|s| (0..m).filter(|&x| s[x]).collect()).collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], x: usize, y: usize) -> bool {
    let (rx, ry) = (find(parent, x), find(parent, y));
    if rx == ry {
        return false;
    }
    parent[rx.max(ry)] = rx.min(ry);
    true
}

/// All equivalence relations on `a` compatible with `∧, ∨, →`, as class-id vectors.
pub fn congruences_brute(a: &HeytingAlgebra) -> Vec<Vec<usize>> {
    let m = a.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let close = |s: &[bool]| {
        let mut parent: Vec<usize> = (0..m).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if s[k] {
                union(&mut parent, i, j);
            }
        }
        loop {
            let mut grew = false;
            for x in 0..m {
                let r = find(&mut parent, x);
                if r == x {
                    continue;
                }
                for c in 0..m {
                    grew |= union(&mut parent, a.meet(x, c), a.meet(r, c));
                    grew |= union(&mut parent, a.join(x, c), a.join(r, c));
                    grew |= union(&mut parent, a.imp(x, c), a.imp(r, c));
                    grew |= union(&mut parent, a.imp(c, x), a.imp(c, r));
                }
            }
            if !grew {
                break;
            }
        }
        pairs.iter().map(|&(i, j)| find(&mut parent, i) == find(&mut parent, j)).collect()
    };
    next_closure(pairs.len(), close)
        .into_iter()
        .map(|s| {
            let mut ids: Vec<usize> = (0..m).collect();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if s[k] {
                    ids[j] = ids[j].min(ids[i]);
                }
            }
            ids
        })
        .collect()
}
