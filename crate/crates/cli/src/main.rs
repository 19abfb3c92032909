//! `esakia`: build, inspect and decide things about finite Heyting algebras.
//!
//! Exit status: 0 when the computation succeeds and the verdict is true, 1 when it
//! succeeds with a false verdict, 2 on bad input or usage, 3 when a size cap is hit.

mod input;
mod scenarios;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use esakia::duality::{
    congruences_via_upsets, dual_space, enumerate_subalgebras, is_esakia_morphism, subalgebra_to_partition,
};
use esakia::io::{algebra_dot, algebra_to_json, morphism_dot, poset_dot, poset_to_json};
use esakia::terms::{validates_with_cap, DEFAULT_SEARCH_CAP};
use esakia::variety::{contains, es_property, is_epic, kg_es_certificate};
use esakia::{Equation, Error, HeytingAlgebra, Validity, VarietyPresentation};
use serde_json::{json, Value};

use input::{element, load_algebra, load_map, load_partition, load_poset, Built, Recipe};

#[derive(Parser)]
#[command(name = "esakia", version, about = "Finite Heyting algebras, Esakia duality and epimorphisms")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Algebra file (JSON), or `@name:params`.
    #[arg(long, conflicts_with = "poset")]
    alg: Option<String>,
    /// Poset file (JSON), or `@name:params`.
    #[arg(long)]
    poset: Option<String>,
}

#[derive(Args)]
struct Gens {
    /// Generator algebras, comma separated or repeated.
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named algebra or space: bool2, chain, diamond, d2-space, xn-space,
    /// xn-tower, d2-tower, rn-downset, bn, algebra-d.
    Make {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Put a top point on towers.
        #[arg(long)]
        top: bool,
        /// Top element of an RN downset, e.g. w3 or a2.
        #[arg(long)]
        elem: Option<String>,
        /// Emit Graphviz instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Dual space of an algebra, or algebra of upsets of a poset.
    Dualize {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether an equation holds, with a falsifying assignment if not.
    CheckEq {
        #[arg(long)]
        alg: String,
        #[arg(long)]
        eq: String,
        /// Largest number of assignments to try.
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Depth, width and incomparability degree of a poset (or of an algebra's dual).
    Measures {
        #[command(flatten)]
        src: Source,
    },
    /// Every subalgebra with its correct partition.
    Subalgebras {
        #[command(flatten)]
        src: Source,
    },
    /// Every congruence with its upset of the dual.
    Congruences {
        #[command(flatten)]
        src: Source,
    },
    /// Decisions about the variety generated by finitely many finite algebras.
    Variety {
        #[command(subcommand)]
        command: VarietyCommand,
    },
    /// Run a packaged check suite, or `all` of them.
    Scenario {
        name: String,
        /// Seed for the sampled parts.
        #[arg(long, default_value_t = scenarios::DEFAULT_SEED)]
        seed: u64,
    },
    /// Graphviz for an algebra or poset, optionally with a partition or a morphism.
    EmitDot {
        #[command(flatten)]
        src: Source,
        /// Partition file to colour (defaults to one stored with the poset).
        #[arg(long)]
        partition: Option<String>,
        /// Point map `{"map": [...]}` from the poset into `--target`.
        #[arg(long, requires = "target")]
        morphism: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
}

#[derive(Subcommand)]
enum VarietyCommand {
    /// Whether no FSI member has a proper epic subalgebra.
    Es {
        #[command(flatten)]
        gens: Gens,
    },
    /// Whether an algebra lies in the variety.
    Member {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        alg: String,
    },
    /// Whether the subalgebra generated by `--sub` is epic in `--alg`.
    Epic {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        alg: String,
        /// Generators of the subalgebra, by label or index.
        #[arg(long, value_delimiter = ',')]
        sub: Vec<String>,
    },
    /// Search for the least n excluding every sum A1 + ... + An + 2.
    KgCert {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

/// What a command produced.
enum Output {
    Json(Value, bool),
    Text(String),
}

fn verdict(v: Value, ok: bool) -> Output {
    Output::Json(v, ok)
}

fn source(src: &Source) -> esakia::Result<Built> {
    match (&src.alg, &src.poset) {
        (Some(a), _) => Ok(Built::Algebra(load_algebra(a)?)),
        (None, Some(p)) => {
            let (p, r) = load_poset(p)?;
            Ok(Built::Space(p, r))
        }
        (None, None) => Err(Error::invalid("pass --alg or --poset")),
    }
}

fn source_algebra(src: &Source) -> esakia::Result<HeytingAlgebra> {
    match source(src)? {
        Built::Algebra(a) => Ok(a),
        Built::Space(p, _) => HeytingAlgebra::from_upsets(&p),
    }
}

fn variety(gens: &Gens) -> esakia::Result<VarietyPresentation> {
    VarietyPresentation::new(gens.gens.iter().map(|g| load_algebra(g)).collect::<esakia::Result<_>>()?)
}

fn built_json(b: &Built) -> Value {
    match b {
        Built::Algebra(a) => algebra_to_json(a),
        Built::Space(p, r) => {
            let mut v = poset_to_json(p);
            if let Some(r) = r {
                v["partition"] = json!(r);
            }
            v
        }
    }
}

fn built_dot(b: &Built) -> String {
    match b {
        Built::Algebra(a) => algebra_dot(a),
        Built::Space(p, r) => poset_dot(p, r.as_ref()),
    }
}

fn labels(a: &HeytingAlgebra, es: &[usize]) -> Vec<String> {
    es.iter().map(|&e| a.label(e)).collect()
}

fn run(cmd: Command) -> esakia::Result<Output> {
    match cmd {
        Command::Make { name, n, k, top, elem, dot } => {
            let b = Recipe { name, n, k, top, elem }.build()?;
            Ok(if dot { Output::Text(built_dot(&b)) } else { verdict(built_json(&b), true) })
        }
        Command::Dualize { src, dot } => {
            let out = match source(&src)? {
                Built::Algebra(a) => Built::Space(dual_space(&a)?.poset, None),
                Built::Space(p, _) => Built::Algebra(HeytingAlgebra::from_upsets(&p)?),
            };
            Ok(if dot { Output::Text(built_dot(&out)) } else { verdict(built_json(&out), true) })
        }
        Command::CheckEq { alg, eq, cap } => {
            let a = load_algebra(&alg)?;
            let eq: Equation = eq.parse()?;
            let report = match validates_with_cap(&a, &eq, cap.unwrap_or(DEFAULT_SEARCH_CAP))? {
                Validity::Valid => json!({ "equation": eq.to_string(), "verdict": "valid" }),
                Validity::Falsified { assignment, lhs, rhs } => {
                    let shown: serde_json::Map<String, Value> =
                        assignment.iter().map(|(v, &e)| (format!("x{v}"), json!(a.label(e)))).collect();
                    json!({
                        "equation": eq.to_string(),
                        "verdict": "falsified",
                        "assignment": shown,
                        "lhs": a.label(lhs),
                        "rhs": a.label(rhs),
                    })
                }
            };
            let ok = report["verdict"] == "valid";
            Ok(verdict(report, ok))
        }
        Command::Measures { src } => {
            let (p, alg) = match source(&src)? {
                Built::Algebra(a) => (dual_space(&a)?.poset, Some(a)),
                Built::Space(p, _) => (p, None),
            };
            let mut v = json!({
                "points": p.len(),
                "depth": p.depth(),
                "width": p.width(),
                "incomparability_degree": p.incomparability_degree(),
                "rooted": p.is_rooted(),
            });
            if let Some(a) = alg {
                v["elements"] = json!(a.len());
                v["fsi"] = json!(a.is_fsi());
            }
            Ok(verdict(v, true))
        }
        Command::Subalgebras { src } => {
            let b = source_algebra(&src)?;
            let subs = enumerate_subalgebras(&b)?;
            let list: Vec<Value> = subs
                .iter()
                .map(|s| {
                    let r = subalgebra_to_partition(&b, s)?;
                    Ok(json!({ "elements": labels(&b, s.members()), "proper": s.is_proper(), "partition": r }))
                })
                .collect::<esakia::Result<_>>()?;
            Ok(verdict(json!({ "count": list.len(), "subalgebras": list }), true))
        }
        Command::Congruences { src } => {
            let a = source_algebra(&src)?;
            let x = dual_space(&a)?.poset;
            let list: Vec<Value> = congruences_via_upsets(&a)?
                .iter()
                .map(|c| {
                    let upset: Vec<String> = esakia::poset::bits(c.upset).map(|i| x.label(i)).collect();
                    let classes: Vec<Vec<String>> = (0..c.quotient.len())
                        .map(|q| labels(&a, &a.elements().filter(|&e| c.map[e] == q).collect::<Vec<_>>()))
                        .collect();
                    json!({ "upset": upset, "quotient_size": c.quotient.len(), "classes": classes })
                })
                .collect();
            Ok(verdict(json!({ "count": list.len(), "congruences": list }), true))
        }
        Command::Variety { command } => run_variety(command),
        Command::Scenario { name, seed } => {
            let (report, ok) = scenarios::run(&name, seed)?;
            Ok(verdict(report, ok))
        }
        Command::EmitDot { src, partition, morphism, target } => {
            let b = source(&src)?;
            if let Some(m) = morphism {
                let Built::Space(x, _) = &b else {
                    return Err(Error::invalid("--morphism needs --poset"));
                };
                let (y, _) = load_poset(target.as_deref().expect("clap requires --target"))?;
                let f = load_map(&m)?;
                is_esakia_morphism(&f, x, &y).map_err(|e| Error::invalid(e.to_string()))?;
                return Ok(Output::Text(morphism_dot(x, &y, &f)));
            }
            match (b, partition) {
                (Built::Space(p, _), Some(file)) => {
                    let r = load_partition(&file, &p)?;
                    Ok(Output::Text(poset_dot(&p, Some(&r))))
                }
                (Built::Algebra(_), Some(_)) => Err(Error::invalid("--partition needs --poset")),
                (b, None) => Ok(Output::Text(built_dot(&b))),
            }
        }
    }
}

fn run_variety(cmd: VarietyCommand) -> esakia::Result<Output> {
    match cmd {
        VarietyCommand::Es { gens } => {
            let v = variety(&gens)?;
            let report = es_property(&v)?;
            Ok(verdict(json!(report), report.holds))
        }
        VarietyCommand::Member { gens, alg } => {
            let v = variety(&gens)?;
            let m = contains(&v, &load_algebra(&alg)?)?;
            Ok(verdict(json!(m), m.member))
        }
        VarietyCommand::Epic { gens, alg, sub } => {
            let v = variety(&gens)?;
            let b = load_algebra(&alg)?;
            let g: Vec<usize> = sub.iter().map(|s| element(&b, s)).collect::<esakia::Result<_>>()?;
            let a = b.subalgebra_generated(&g);
            let verdict_ = is_epic(&b, &a, &v)?;
            let report = json!({
                "subalgebra": labels(&b, a.members()),
                "partition": subalgebra_to_partition(&b, &a)?,
                "epic": verdict_.epic,
                "witness": verdict_.witness,
            });
            Ok(verdict(report, verdict_.epic))
        }
        VarietyCommand::KgCert { gens, max_n } => {
            let v = variety(&gens)?;
            let c = kg_es_certificate(&v, max_n)?;
            let ok = c.certificate.is_some();
            Ok(verdict(json!(c), ok))
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (text, code) = match run(cli.command) {
        Ok(Output::Json(v, ok)) => {
            let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
            s.push('\n');
            (s, if ok { 0 } else { 1 })
        }
        Ok(Output::Text(s)) => (s, 0),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::Cap(_) => 3,
                Error::Invalid(_) | Error::Precondition(_) => 2,
            });
        }
    };
    if let Err(e) = emit(&cli.out, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
