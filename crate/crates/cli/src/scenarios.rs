//! Packaged check suites. Each scenario builds its inputs, runs the library and
//! compares against known outcomes; the sampled parts draw from a seeded ChaCha stream.

use std::time::Instant;

use esakia::algebra::{algebra_iso, is_homomorphism};
use esakia::constructions::{
    algebra_d, b_n_family, d2_partition, d2_tower_labeled, diamond, kg_decompose, lemma_kg_i_subalgebra,
    lemma_kg_ii_universe, r_n_partition, rn_downset, x_n_space, x_n_tower, LabeledTower, RNElement,
};
use esakia::duality::{
    congruences_via_upsets, enumerate_correct_partitions, is_correct_partition, is_esakia_morphism,
    partition_to_subalgebra, prime_filters, quotient_space, subalgebra_to_partition, trick_width_subposet,
    TrickWidthError,
};
use esakia::poset::{are_isomorphic, enumerate_posets, enumerate_posets_up_to};
use esakia::terms::{comparability_term, depth_term, eval, sigma_axioms, validates_with_cap, width_term};
use esakia::variety::{es_property, fsi_representatives, kg_es_certificate, KgSummand, WitnessSource};
use esakia::{Equation, Error, FinitePoset, HeytingAlgebra, Result, Validity, VarietyPresentation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

pub const DEFAULT_SEED: u64 = 20;

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

type Scenario = fn(u64) -> Result<Checks>;

const CATALOG: [(&str, Scenario); 13] = [
    ("duality-roundtrip", duality_roundtrip),
    ("depth-width-axioms", depth_width_axioms),
    ("sigma-axioms", sigma_axioms_suite),
    ("correspondences", correspondences),
    ("sum-duality", sum_duality),
    ("rn-towers", rn_towers),
    ("d2-tower", d2_tower),
    ("trick-width", trick_width),
    ("fg-es", fg_es),
    ("kg-lemma81", kg_lemma81),
    ("kg-decompose", kg_decompose_suite),
    ("kg-cert", kg_cert),
    ("algebra-d", algebra_d_suite),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(n, _)| *n)
}

fn run_one(name: &str, f: Scenario, seed: u64) -> Result<(Value, bool)> {
    let start = Instant::now();
    let checks = f(seed)?.0;
    let passed = checks.iter().all(|c| c.passed);
    let report = json!({
        "scenario": name,
        "seed": seed,
        "passed": passed,
        "seconds": (start.elapsed().as_secs_f64() * 10.0).round() / 10.0,
        "checks": checks,
    });
    Ok((report, passed))
}

/// Run `name` (or every scenario for `all`); the flag is true when every check passed.
pub fn run(name: &str, seed: u64) -> Result<(Value, bool)> {
    if name == "all" {
        let mut reports = Vec::new();
        let mut all = true;
        for (n, f) in CATALOG {
            let (r, ok) = run_one(n, f, seed)?;
            all &= ok;
            reports.push(r);
        }
        return Ok((json!({ "passed": all, "scenarios": reports }), all));
    }
    let (_, f) = CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::invalid(format!("unknown scenario {name:?}; known: all, {}", names().collect::<Vec<_>>().join(", "))))?;
    run_one(name, *f, seed)
}

fn upsets(p: &FinitePoset) -> HeytingAlgebra {
    HeytingAlgebra::from_upsets(p).expect("small poset")
}

fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> FinitePoset {
    let density = rng.gen_range(0.1..0.6);
    let covers: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(density)).collect();
    FinitePoset::from_covers(n, &covers).expect("i < j keeps it acyclic")
}

fn round_trips(p: &FinitePoset) -> Result<bool> {
    let a = upsets(p).without_provenance();
    let back = prime_filters(&a)?;
    Ok(are_isomorphic(&back, p).is_some() && algebra_iso(&upsets(&back), &a).is_some())
}

fn duality_roundtrip(seed: u64) -> Result<Checks> {
    let mut c = Checks::default();
    for n in 0..=5 {
        let ps = enumerate_posets(n)?;
        let bad = ps.iter().filter(|p| !round_trips(p).unwrap_or(false)).count();
        c.push(format!("all posets on {n} points"), bad == 0, format!("{} posets, {bad} failures", ps.len()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..100 {
        let n = rng.gen_range(5..=7);
        bad += usize::from(!round_trips(&random_poset(&mut rng, n))?);
    }
    c.push("sampled posets on 5-7 points", bad == 0, format!("100 samples, {bad} failures"));
    Ok(c)
}

fn depth_width_axioms(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let posets = enumerate_posets_up_to(5)?;
    let algs: Vec<HeytingAlgebra> = posets.iter().map(upsets).collect();
    let cap = 32u128.pow(4);
    for n in 1..=4 {
        let eq = Equation::is_one(depth_term(n));
        let mut bad = 0;
        for (p, a) in posets.iter().zip(&algs) {
            bad += usize::from(validates_with_cap(a, &eq, cap)?.is_valid() != (p.depth() <= n));
        }
        c.push(format!("d_{n} holds iff depth <= {n}"), bad == 0, format!("{} posets, {bad} mismatches", posets.len()));
    }
    for n in 1..=3 {
        let eq = Equation::is_one(width_term(n));
        let mut bad = 0;
        for (p, a) in posets.iter().zip(&algs) {
            bad += usize::from(validates_with_cap(a, &eq, cap)?.is_valid() != (p.width() <= n));
        }
        c.push(format!("w_{n} holds iff width <= {n}"), bad == 0, format!("{} posets, {bad} mismatches", posets.len()));
    }
    Ok(c)
}

fn sigma_axioms_suite(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let posets = enumerate_posets_up_to(5)?;
    for n in 1..=2 {
        let sigma = sigma_axioms(n)?;
        let mut bad = 0;
        for p in &posets {
            let a = upsets(p);
            let mut ok = true;
            for eq in &sigma {
                if !validates_with_cap(&a, eq, 32u128.pow(4))?.is_valid() {
                    ok = false;
                    break;
                }
            }
            bad += usize::from(ok != (p.incomparability_degree() <= n));
        }
        c.push(
            format!("Sigma_{n} holds iff incomparability degree <= {n}"),
            bad == 0,
            format!("{} equations, {} posets, {bad} mismatches", sigma.len(), posets.len()),
        );
    }
    Ok(c)
}

fn correspondences(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let (mut subs, mut congs, mut bad_sub, mut bad_cong) = (0, 0, 0, 0);
    for p in enumerate_posets_up_to(5)? {
        let b = upsets(&p);
        for r in enumerate_correct_partitions(&p)? {
            let s = partition_to_subalgebra(&b, &r)?;
            let (q, _) = quotient_space(&p, &r)?;
            let ok = subalgebra_to_partition(&b, &s)? == r && algebra_iso(&s.algebra(&b), &upsets(&q)).is_some();
            bad_sub += usize::from(!ok);
            subs += 1;
        }
        let cs = congruences_via_upsets(&b)?;
        bad_cong += usize::from(cs.len() != p.all_upsets().len());
        for k in &cs {
            let onto = (0..k.quotient.len()).all(|q| k.map.contains(&q));
            bad_cong += usize::from(!is_homomorphism(&b, &k.quotient, &k.map) || !onto);
            congs += 1;
        }
    }
    c.push("subalgebras <-> correct partitions", bad_sub == 0, format!("{subs} pairs, {bad_sub} failures"));
    c.push("congruences <-> upsets", bad_cong == 0, format!("{congs} congruences, {bad_cong} failures"));
    Ok(c)
}

fn sum_duality(seed: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let small: Vec<FinitePoset> = enumerate_posets_up_to(4)?.into_iter().filter(|p| !p.is_empty()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut bad, mut bad_depth) = (0, 0);
    for _ in 0..100 {
        let p = small.choose(&mut rng).expect("nonempty");
        let q = small.choose(&mut rng).expect("nonempty");
        let (a, b) = (upsets(p).without_provenance(), upsets(q).without_provenance());
        let sum = a.alg_sum(&b);
        bad += usize::from(sum.verify_heyting().is_err() || are_isomorphic(&prime_filters(&sum)?, &p.sum(q)).is_none());
        bad_depth += usize::from(p.sum(q).depth() != p.depth() + q.depth());
    }
    c.push("dual of A + B is the dual of A below the dual of B", bad == 0, format!("100 sampled pairs, {bad} failures"));
    c.push("depth adds under sums", bad_depth == 0, format!("{bad_depth} failures"));
    Ok(c)
}

fn tower_check(c: &mut Checks, name: String, t: &LabeledTower, r: Result<esakia::CorrectPartition>) -> Result<()> {
    let r = match r {
        Ok(r) => r,
        Err(e) => {
            c.push(name, false, e.to_string());
            return Ok(());
        }
    };
    let correct = is_correct_partition(&r, &t.poset).is_ok();
    let b = upsets(&t.poset);
    let s = partition_to_subalgebra(&b, &r)?;
    let (q, _) = quotient_space(&t.poset, &r)?;
    c.push(
        name,
        correct && s.is_proper(),
        format!("{} points, {} classes, subalgebra {} of {} elements, quotient width {}", t.len(), r.num_classes(), s.len(), b.len(), q.width()),
    );
    Ok(())
}

fn rn_towers(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    for n in 2..=3 {
        c.push(format!("X_{n} has width <= {n}"), x_n_space(n).width() <= n, format!("width {}", x_n_space(n).width()));
        for k in 2..=4 {
            for top in [true, false] {
                let t = x_n_tower(n, k, top);
                tower_check(&mut c, format!("R_{n} on {k} copies{}", if top { " with top" } else { "" }), &t, r_n_partition(&t))?;
            }
        }
    }
    Ok(c)
}

fn d2_tower(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    for k in 2..=6 {
        for top in [true, false] {
            let t = d2_tower_labeled(k, top);
            tower_check(&mut c, format!("D2 tower of {k} copies{}", if top { " with top" } else { "" }), &t, d2_partition(&t))?;
        }
    }
    Ok(c)
}

/// `x` with point `z` replaced by a two-element chain; the new upper copy gets index
/// `x.len()` and the map folds it back onto `z`.
fn split_point(x: &FinitePoset, z: usize) -> (FinitePoset, Vec<usize>) {
    let n = x.len();
    let mut up: Vec<u64> = (0..n).map(|a| x.up(a) | if x.leq(a, z) { 1 << n } else { 0 }).collect();
    up.push((x.up(z) & !(1 << z)) | 1 << n);
    let y = FinitePoset::from_up_masks(up).expect("splitting a point keeps an order");
    let mut f: Vec<usize> = (0..n).collect();
    f.push(z);
    (y, f)
}

fn trick_width(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let root = FinitePoset::chain(1);
    let over = |p: FinitePoset, top: bool| FinitePoset::tower(&[root.clone(), p], top);
    let mut bases = vec![("root + 2-chain".to_string(), over(FinitePoset::chain(2), false), 1)];
    for m in 2..=3 {
        for top in [false, true] {
            let suffix = if top { " + top" } else { "" };
            bases.push((format!("root + {m}-antichain{suffix}"), over(FinitePoset::antichain(m), top), m));
            bases.push((format!("root + X_{m}{suffix}"), over(x_n_space(m).without_labels(), top), m));
        }
    }
    for (name, x, n) in &bases {
        let r = x.root().expect("rooted base");
        let max = x.maximum();
        let (mut ok, mut runs) = (true, 0);
        let mut detail = String::new();
        for z in (0..x.len()).filter(|&z| z != r && Some(z) != max) {
            let (y, f) = split_point(x, z);
            if is_esakia_morphism(&f, &y, x).is_err() {
                ok = false;
                detail = format!("split at {z} is not an Esakia map");
                break;
            }
            match trick_width_subposet(&f, &y, x, *n) {
                Ok(t) => {
                    let expect: Vec<usize> = (0..x.len()).filter(|&p| Some(p) != max).collect();
                    let mut got = t.target.clone();
                    got.sort_unstable();
                    if got != expect || !t.z.contains(&x.len()) || t.z.contains(&z) {
                        ok = false;
                        detail = format!("split at {z}: Z = {:?}, target {:?}", t.z, t.target);
                        break;
                    }
                }
                Err(e) => {
                    ok = false;
                    detail = format!("split at {z}: {e}");
                    break;
                }
            }
            runs += 1;
        }
        if ok {
            detail = format!("width {n}, {runs} split points, Z keeps the upper copy each time");
        }
        c.push(format!("{name}, split one point"), ok, detail);
    }

    let wide = FinitePoset::tower(&[root.clone(), FinitePoset::antichain(3)], false);
    let narrow = FinitePoset::tower(&[root, FinitePoset::antichain(2)], false);
    let outcome = trick_width_subposet(&[0, 1, 2, 2], &wide, &narrow, 2);
    c.push(
        "two incomparable points over one",
        matches!(outcome, Err(TrickWidthError::NotChain { z: 2, a: 2, c: 3 })),
        format!("{outcome:?}"),
    );

    // The R_n quotient of a tower does not meet the hypotheses: the tower has two
    // minimal points, and once a root is added the quotient is too narrow.
    for n in 2..=3 {
        let t = x_n_tower(n, 3, true);
        let r = r_n_partition(&t)?;
        let (q, f) = quotient_space(&t.poset, &r)?;
        let outcome = trick_width_subposet(&f, &t.poset, &q, n);
        c.push(
            format!("X_{n} tower over its R_{n} quotient has no minimum"),
            matches!(outcome, Err(TrickWidthError::NoMinimum)),
            format!("{outcome:?}"),
        );
        let y = FinitePoset::tower(&[FinitePoset::chain(1), t.poset.clone()], false);
        let mut classes = vec![vec![0]];
        classes.extend(r.classes.iter().map(|k| k.iter().map(|p| p + 1).collect()));
        let (q, f) = quotient_space(&y, &esakia::CorrectPartition::new(y.len(), classes)?)?;
        let outcome = trick_width_subposet(&f, &y, &q, n);
        c.push(
            format!("rooted X_{n} tower over its quotient lacks {n}-antichains"),
            matches!(outcome, Err(TrickWidthError::NoAntichain { .. })),
            format!("quotient width {}: {outcome:?}", q.width()),
        );
    }
    Ok(c)
}

fn fg_es(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    for (i, p) in enumerate_posets_up_to(4)?.iter().enumerate() {
        let v = VarietyPresentation::single(upsets(p))?;
        let report = es_property(&v)?;
        let reps = fsi_representatives(&v)?;
        let mut replay = Ok(());
        for e in &report.log {
            replay = match &e.verdict.witness {
                None => Err("missing witness".to_string()),
                Some(w) => w.verify(&reps[e.representative], &e.partition).and_then(|_| match w.source {
                    WitnessSource::Representative { index } if are_isomorphic(&w.c_dual, &reps[index]).is_none() => {
                        Err("witness source mismatch".into())
                    }
                    _ => Ok(()),
                }),
            };
            if replay.is_err() {
                break;
            }
        }
        let covers: Vec<_> = p.covers();
        c.push(
            format!("generator {i}: {} points, covers {covers:?}", p.len()),
            report.holds && replay.is_ok(),
            format!(
                "ES = {}; {} FSI representatives, {} proper subalgebras, witnesses {}",
                report.holds,
                reps.len(),
                report.log.len(),
                replay.err().unwrap_or_else(|| "replayed".into())
            ),
        );
    }
    Ok(c)
}

fn kg_lemma81(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    for n in 1..=2 {
        let mut parts = vec![HeytingAlgebra::bool2()];
        parts.extend(std::iter::repeat_with(diamond).take(n));
        let want = HeytingAlgebra::sum_of(&parts);
        let mut tops = Vec::new();
        let mut bad = Vec::new();
        for top in (0..=12).map(RNElement::W).chain((1..=12).map(RNElement::A)) {
            let a = rn_downset(top)?;
            if a.len() < 6 * n + 1 {
                continue;
            }
            match lemma_kg_i_subalgebra(&a, n) {
                Ok(s) if algebra_iso(&s.algebra(&a), &want).is_some() => tops.push(top.to_string()),
                Ok(_) => bad.push(format!("{top}: wrong shape")),
                Err(e) => bad.push(format!("{top}: {e}")),
            }
        }
        c.push(
            format!("2 + {n} diamond(s) inside RN downsets"),
            bad.is_empty(),
            if bad.is_empty() { format!("{} downsets", tops.len()) } else { bad.join("; ") },
        );
    }
    let x2 = upsets(&x_n_space(2));
    let mut bad = Vec::new();
    let mut shapes = Vec::new();
    for m in 1..=12 {
        let a = rn_downset(RNElement::A(m))?;
        match lemma_kg_ii_universe(&a) {
            Ok((s, blocks)) => shapes.push(format!(
                "a{m}: {} elements, blocks {}",
                s.len(),
                blocks.iter().map(|b| if algebra_iso(b, &x2).is_some() { "X2*" } else { "D2*" }).collect::<Vec<_>>().join("+")
            )),
            Err(e) => bad.push(format!("a{m}: {e}")),
        }
    }
    c.push(
        "C_m inside the downset of a_m splits into X2* and D2* blocks",
        bad.is_empty(),
        if bad.is_empty() { shapes.join("; ") } else { bad.join("; ") },
    );
    for m in 1..=8 {
        let w = rn_downset(RNElement::W(m))?;
        let a = rn_downset(RNElement::A(m))?;
        c.push(format!("downset of w{m} is FSI, of a{m} is not"), w.is_fsi() && !a.is_fsi(), format!("{} and {} elements", w.len(), a.len()));
    }
    Ok(c)
}

fn kg_decompose_suite(seed: u64) -> Result<Checks> {
    use RNElement::*;
    let mut c = Checks::default();
    let single = kg_decompose(&diamond())?;
    c.push("the diamond is one block", single.len() == 1, format!("{} blocks", single.len()));
    let square = HeytingAlgebra::chain(3).product(&HeytingAlgebra::chain(3))?;
    let stuck = kg_decompose(&square);
    c.push("3-chain x 3-chain is not decomposable", matches!(stuck, Err(Error::Invalid(_))), format!("{stuck:?}").chars().take(120).collect::<String>());
    for n in 2..=4 {
        let b = b_n_family(n)?;
        let blocks = kg_decompose(&b)?;
        let sizes: Vec<usize> = blocks.iter().map(HeytingAlgebra::len).collect();
        let mut want = vec![2, 6];
        want.extend(vec![4; n - 2]);
        c.push(format!("B_{n} decomposes"), sizes == want, format!("block sizes {sizes:?}, top first"));
    }
    let tops = [W(0), W(1), W(2), W(3), W(4), A(1), A(2), A(3)];
    let blocks_of = |e: RNElement| -> Result<Vec<HeytingAlgebra>> {
        let a = rn_downset(e)?;
        if a.len() == 2 {
            Ok(vec![a])
        } else {
            kg_decompose(&a)
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..50 {
        let k = rng.gen_range(2..=3);
        let picks: Vec<RNElement> = (0..k).map(|_| *tops.choose(&mut rng).expect("nonempty")).collect();
        let parts: Vec<HeytingAlgebra> = picks.iter().map(|&e| rn_downset(e)).collect::<Result<_>>()?;
        let sum = HeytingAlgebra::sum_of(&parts);
        let got = kg_decompose(&sum)?;
        let mut want = Vec::new();
        for &e in &picks {
            want.extend(blocks_of(e)?);
        }
        let same = got.len() == want.len() && got.iter().zip(&want).all(|(g, w)| algebra_iso(g, w).is_some());
        if !same || algebra_iso(&HeytingAlgebra::sum_of(&got), &sum).is_none() {
            bad.push(format!("{picks:?}"));
        }
    }
    c.push("random sums of RN downsets", bad.is_empty(), if bad.is_empty() { "50 sums recovered".into() } else { bad.join("; ") });
    Ok(c)
}

fn kg_cert(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let cases = [
        ("V(2)", HeytingAlgebra::bool2(), 2, Some(1)),
        ("V(3-chain)", HeytingAlgebra::chain(3), 2, Some(2)),
        ("V(diamond + 2)", diamond().alg_sum(&HeytingAlgebra::bool2()), 3, Some(2)),
        ("V(X2* + 2)", upsets(&x_n_space(2)).alg_sum(&HeytingAlgebra::bool2()), 2, None),
    ];
    for (name, g, n_max, want) in cases {
        let cert = kg_es_certificate(&VarietyPresentation::single(g)?, n_max)?;
        let members: Vec<String> = cert
            .levels
            .iter()
            .flat_map(|l| l.sums.iter().filter(|s| s.member).map(|s| format!("{:?}+2", s.summands)))
            .collect();
        c.push(
            format!("{name} up to n = {n_max}"),
            cert.certificate == want && cert.monotone,
            format!("certificate {:?}, monotone {}, member sums [{}]", cert.certificate, cert.monotone, members.join(", ")),
        );
    }
    let d2_sum = esakia::variety::kg_test_sum(&[KgSummand::D2]);
    let dual = prime_filters(&d2_sum)?;
    c.push(
        "the dual of D2* + 2 is two points under a top",
        dual.len() == 3 && dual.depth() == 2 && dual.maximum().is_some() && dual.root().is_none(),
        format!("{} points, depth {}", dual.len(), dual.depth()),
    );
    Ok(c)
}

fn algebra_d_suite(_: u64) -> Result<Checks> {
    let mut c = Checks::default();
    let d = algebra_d();
    c.push("D has ten elements and is FSI", d.len() == 10 && d.is_fsi(), format!("{} elements", d.len()));
    let eq = Equation::is_one(comparability_term(3));
    match validates_with_cap(&d, &eq, u128::MAX)? {
        Validity::Falsified { assignment, lhs, .. } => {
            let replay = eval(&eq.lhs, &d, &assignment)? == lhs && lhs != d.top();
            let shown: Vec<String> = assignment.iter().map(|(v, &e)| format!("x{v} = {}", d.label(e))).collect();
            c.push(format!("{eq} fails in D"), replay, format!("falsified at {}, lhs = {}", shown.join(", "), d.label(lhs)));
        }
        Validity::Valid => c.push(format!("{eq} fails in D"), false, "the equation holds"),
    }
    let names: Vec<String> = d.nodes().iter().map(|&e| d.label(e)).collect();
    c.push("nodes of D", names == ["0", "glue", "a3", "1"], names.join(" < "));
    let sizes: Vec<usize> = kg_decompose(&d)?.iter().map(HeytingAlgebra::len).collect();
    c.push("D = 2 + (downset of a3) + 2", sizes == [2, 8, 2], format!("block sizes {sizes:?}"));
    Ok(c)
}
