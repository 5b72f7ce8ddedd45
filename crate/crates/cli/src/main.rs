use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use sympbw_core::correspondence::{monomial_to_tableau, tableau_to_monomial};
use sympbw_core::fflv::{dyck_paths, lattice_points, MultiExponent};
use sympbw_core::liealg::{positive_roots, root_vector_weight, DominantWeight};
use sympbw_core::pluecker::Ring;
use sympbw_core::relations::{generate_ideal, IdealKind};
use sympbw_core::straighten::{Straightener, TableauMonomial};
use sympbw_core::tableaux::{enumerate_tableaux, is_symplectic_pbw_semistandard, Tableau};
use sympbw_core::verify::{
    check_commutativity, check_counts, check_isotropy_projection, check_roundtrip, check_vanishing, eval_s_family,
    sample_points, FlagPoint, Provenance,
};

/// Worker threads for point sampling.
const WORKERS_VAR: &str = "SYMPBW_WORKERS";

fn workers() -> usize {
    std::env::var(WORKERS_VAR).ok().and_then(|s| s.parse().ok()).unwrap_or(1)
}

#[derive(Parser)]
#[command(name = "sympbw", version, about = "Symplectic PBW degenerate flag varieties")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Rank of sp(2n).
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Render barred entries as i' instead of a combining overline.
    #[arg(long)]
    ascii: bool,
}

#[derive(Args)]
struct WithLambda {
    #[command(flatten)]
    common: Common,
    /// Fundamental-weight multiplicities m_1,...,m_n.
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<u32>,
}

#[derive(Args)]
struct WithInput {
    #[command(flatten)]
    common: Common,
    /// JSON input file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Classical,
    Degenerate,
    SFamily,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Classical,
    Degenerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Counts,
    Roundtrip,
    ClassicalIdeal,
    DegenerateIdeal,
    SFamily,
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Positive roots with their weights.
    Roots(Common),
    /// Symplectic Dyck paths.
    Dyck(Common),
    /// Lattice points of the FFLV polytope.
    Polytope(WithLambda),
    /// Symplectic PBW-semistandard tableaux.
    Tableaux(WithLambda),
    /// Map a multi-exponent (JSON) to its tableau.
    ToTableau {
        #[command(flatten)]
        input: WithInput,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
    },
    /// Map a tableau (JSON) to its multi-exponent.
    ToMonomial(WithInput),
    /// Generators of the classical, degenerate or s-family ideal.
    Relations {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "classical")]
        kind: Kind,
    },
    /// Straighten a tableau monomial (JSON) into standard monomials.
    Straighten {
        #[command(flatten)]
        input: WithInput,
        #[arg(long, value_enum, default_value = "classical")]
        ring: RingArg,
        /// Include the rewrite trace.
        #[arg(long)]
        trace: bool,
    },
    /// Run a verification suite and emit a report.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<u32>>,
        /// Number of sample points.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// First seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        report: Report,
        /// Include the sampled points in the report.
        #[arg(long)]
        points: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(&'static str, String),
}

impl From<sympbw_core::Error> for Failure {
    fn from(e: sympbw_core::Error) -> Self {
        Failure::Domain(e.code(), e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn lambda(n: usize, m: &[u32]) -> Result<DominantWeight, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    if m.len() != n {
        return Err(Failure::Usage(format!("--lambda has {} entries, expected {n}", m.len())));
    }
    Ok(DominantWeight::new(m.to_vec()))
}

fn rank(n: usize) -> Result<usize, Failure> {
    if n == 0 {
        Err(Failure::Usage("--n must be positive".into()))
    } else {
        Ok(n)
    }
}

fn read_input<T: serde::de::DeserializeOwned>(path: &Option<PathBuf>) -> Result<T, Failure> {
    let mut s = String::new();
    match path {
        Some(p) => s = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        }
    }
    serde_json::from_str(&s).map_err(|e| Failure::Domain("invalid_input", e.to_string()))
}

fn lambda_json(l: &DominantWeight) -> Value {
    json!({ "m": l.m, "partition": l.partition() })
}

fn run(verb: Verb) -> Result<(String, bool, Option<PathBuf>), Failure> {
    let (text, ok, out) = match verb {
        Verb::Roots(c) => (roots(&c)?, true, c.out),
        Verb::Dyck(c) => (dyck(&c)?, true, c.out),
        Verb::Polytope(a) => (polytope(&a)?, true, a.common.out),
        Verb::Tableaux(a) => (tableaux(&a)?, true, a.common.out),
        Verb::ToTableau { input, lambda: l } => (to_tableau(&input, &l)?, true, input.common.out),
        Verb::ToMonomial(i) => (to_monomial(&i)?, true, i.common.out),
        Verb::Relations { common, kind } => (relations(&common, kind)?, true, common.out),
        Verb::Straighten { input, ring, trace } => (straighten(&input, ring, trace)?, true, input.common.out),
        Verb::Verify { n, suite, lambda: l, seeds, seed, report, points, out } => {
            let (s, ok) = verify(n, suite, l, seeds, seed, report, points)?;
            (s, ok, out)
        }
    };
    Ok((text, ok, out))
}

fn roots(c: &Common) -> Result<String, Failure> {
    let n = rank(c.n)?;
    let rs = positive_roots(n);
    Ok(match c.format {
        Format::Json => {
            to_json(&rs.iter().map(|&a| json!({ "root": a, "weight": root_vector_weight(n, a).0 })).collect::<Vec<_>>())
        }
        Format::Text => rs.iter().map(|a| format!("{}\n", a.pretty(c.ascii))).collect(),
    })
}

fn dyck(c: &Common) -> Result<String, Failure> {
    let ps = dyck_paths(rank(c.n)?);
    Ok(match c.format {
        Format::Json => to_json(&ps),
        Format::Text => ps
            .iter()
            .map(|p| p.roots.iter().map(|a| a.pretty(c.ascii)).collect::<Vec<_>>().join(" -> ") + "\n")
            .collect(),
    })
}

fn polytope(a: &WithLambda) -> Result<String, Failure> {
    let l = lambda(a.common.n, &a.lambda)?;
    let pts = lattice_points(a.common.n, &l)?;
    Ok(match a.common.format {
        Format::Json => to_json(&json!({ "n": a.common.n, "lambda": lambda_json(&l), "points": pts })),
        Format::Text => pts.iter().map(|p| p.pretty(a.common.ascii) + "\n").collect(),
    })
}

fn tableaux(a: &WithLambda) -> Result<String, Failure> {
    let n = a.common.n;
    let l = lambda(n, &a.lambda)?;
    let ts = enumerate_tableaux(n, &l)?;
    Ok(match a.common.format {
        Format::Json => to_json(&json!({ "n": n, "lambda": lambda_json(&l), "count": ts.len(), "tableaux": ts })),
        Format::Text => ts.iter().map(|t| t.pretty(n, a.common.ascii) + "\n\n").collect(),
    })
}

fn to_tableau(i: &WithInput, m: &[u32]) -> Result<String, Failure> {
    let n = i.common.n;
    let l = lambda(n, m)?;
    let p: MultiExponent = read_input(&i.input)?;
    p.validate(n)?;
    let t = monomial_to_tableau(n, &l, &p)?;
    Ok(match i.common.format {
        Format::Json => to_json(&t),
        Format::Text => t.pretty(n, i.common.ascii) + "\n",
    })
}

fn to_monomial(i: &WithInput) -> Result<String, Failure> {
    let n = rank(i.common.n)?;
    let t: Tableau = read_input(&i.input)?;
    if !is_symplectic_pbw_semistandard(n, &t)? {
        return Err(sympbw_core::Error::NotSemistandard.into());
    }
    let (l, p) = tableau_to_monomial(n, &t)?;
    Ok(match i.common.format {
        Format::Json => to_json(&json!({ "lambda": lambda_json(&l), "monomial": p })),
        Format::Text => p.pretty(i.common.ascii) + "\n",
    })
}

fn relations(c: &Common, kind: Kind) -> Result<String, Failure> {
    let n = rank(c.n)?;
    let k = match kind {
        Kind::Classical => IdealKind::Classical,
        Kind::Degenerate => IdealKind::Degenerate,
        Kind::SFamily => IdealKind::SFamily,
    };
    let rels = generate_ideal(n, k)?;
    Ok(match c.format {
        Format::Json => to_json(
            &rels
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "label": r.id.label(n, c.ascii),
                        "ring": r.polynomial.ring,
                        "terms": r.polynomial,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => rels
            .iter()
            .map(|r| format!("{} := {}\n", r.id.label(n, c.ascii), r.polynomial.pretty(n, c.ascii)))
            .collect(),
    })
}

fn straighten(i: &WithInput, ring: RingArg, trace: bool) -> Result<String, Failure> {
    let n = rank(i.common.n)?;
    let m: TableauMonomial = read_input(&i.input)?;
    let ring = match ring {
        RingArg::Classical => Ring::Classical,
        RingArg::Degenerate => Ring::Degenerate,
    };
    let (p, rep) = Straightener::new(n, ring)?.straighten(&m, trace)?;
    Ok(match i.common.format {
        Format::Json => {
            let mut v = json!({
                "n": n,
                "ring": ring,
                "input": m,
                "terms": rep.terms.iter().map(|(t, c)| json!({ "coeff": c, "tableau": t })).collect::<Vec<_>>(),
                "steps": rep.steps,
            });
            if trace {
                v["trace"] = serde_json::to_value(&rep.trace).expect("serializable");
            }
            to_json(&v)
        }
        Format::Text => {
            let mut s = format!("{} = {}\n", m.pretty(n, i.common.ascii), p.pretty(n, i.common.ascii));
            if trace {
                for st in &rep.trace {
                    s.push_str(&format!("  {} via {}\n", st.from.pretty(n, i.common.ascii), st.relation));
                }
            }
            s
        }
    })
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Counts => "counts",
        Suite::Roundtrip => "roundtrip",
        Suite::ClassicalIdeal => "classical-ideal",
        Suite::DegenerateIdeal => "degenerate-ideal",
        Suite::SFamily => "s-family",
    }
}

fn verify(n: usize, suite: Suite, l: Option<Vec<u32>>, seeds: u64, seed: u64, report: Report, points: bool) -> Outcome {
    let n = rank(n)?;
    let seed_list: Vec<u64> = (seed..seed + seeds).collect();
    let mut sampled: Vec<FlagPoint> = Vec::new();
    let (passed, details, summary): (bool, Value, String) = match suite {
        Suite::Counts | Suite::Roundtrip => {
            let l = lambda(
                n,
                &l.ok_or_else(|| Failure::Usage(format!("--suite {} requires --lambda", suite_name(suite))))?,
            )?;
            if suite == Suite::Counts {
                let r = check_counts(n, &l)?;
                let s = format!("{} = {} = {}", r.lattice_points, r.tableaux, r.weyl_dimension);
                (r.passed, serde_json::to_value(&r).expect("serializable"), s)
            } else {
                let r = check_roundtrip(n, &l)?;
                let s = format!("{} checked, {} failures", r.checked, r.failures.len());
                (r.passed, serde_json::to_value(&r).expect("serializable"), s)
            }
        }
        Suite::ClassicalIdeal => {
            sampled = sample_points(n, Provenance::Classical, &seed_list, workers())?;
            let r = check_vanishing(n, &generate_ideal(n, IdealKind::Classical)?, &sampled)?;
            let s = format!("{} relations x {} points, {} nonzero", r.relations, r.points, r.failures.len());
            (r.passed, serde_json::to_value(&r).expect("serializable"), s)
        }
        Suite::DegenerateIdeal => {
            check_commutativity(n)?;
            sampled = sample_points(n, Provenance::Degenerate, &seed_list, workers())?;
            let iso: Vec<_> = sampled.iter().map(check_isotropy_projection).collect();
            let r = check_vanishing(n, &generate_ideal(n, IdealKind::Degenerate)?, &sampled)?;
            let iso_ok = iso.iter().all(|i| i.passed);
            let s = format!(
                "{} relations x {} points, {} nonzero, isotropy {}",
                r.relations,
                r.points,
                r.failures.len(),
                if iso_ok { "ok" } else { "violated" }
            );
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["isotropy"] = serde_json::to_value(&iso).expect("serializable");
            v["commutativity"] = json!(true);
            (r.passed && iso_ok, v, s)
        }
        Suite::SFamily => {
            sampled = sample_points(n, Provenance::Classical, &seed_list, workers())?;
            let rels = generate_ideal(n, IdealKind::SFamily)?;
            let mut failures = Vec::new();
            for p in &sampled {
                for r in &rels {
                    let v = eval_s_family(&r.polynomial, &p.coords)?;
                    if !v.is_empty() {
                        failures.push(json!({
                            "relation": r.id.label(n, true),
                            "seed": p.seed,
                            "laurent": v.iter().map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() })).collect::<Vec<_>>(),
                        }));
                    }
                }
            }
            let s = format!("{} relations x {} points, {} nonzero", rels.len(), sampled.len(), failures.len());
            let ok = failures.is_empty();
            (ok, json!({ "relations": rels.len(), "points": sampled.len(), "failures": failures }), s)
        }
    };
    let text = match report {
        Report::Json => {
            let mut v = json!({
                "suite": suite_name(suite),
                "n": n,
                "seed": seed,
                "seeds": seeds,
                "passed": passed,
                "details": details,
            });
            if points {
                v["points"] = serde_json::to_value(&sampled).expect("serializable");
            }
            to_json(&v)
        }
        Report::Text => format!("{} {} n={n}: {summary}\n", if passed { "PASS" } else { "FAIL" }, suite_name(suite)),
    };
    Ok((text, passed))
}

fn emit_error(kind: &str, code: &str, message: &str) {
    let v = json!({ "error": { "kind": kind, "code": code, "message": message } });
    eprintln!("{}", serde_json::to_string(&v).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.verb) {
        Ok((text, ok, out)) => {
            let written = match out {
                Some(p) => std::fs::write(&p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                emit_error("io", "io", &e);
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            emit_error("usage", "usage", &m);
            ExitCode::from(2)
        }
        Err(Failure::Domain(code, m)) => {
            emit_error("domain", code, &m);
            ExitCode::from(1)
        }
    }
}
