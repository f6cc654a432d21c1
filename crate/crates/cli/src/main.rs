//! `weylhom` command-line front end.
//!
//! Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded,
//! 1 internal error. Failures print one `error: <kind>: <reason>` line to
//! standard error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use weylhom::{
    build_psi, carter_payne_witnesses, check_nonvanishing, check_stability, enumerate_sst, hom_space_with, is_hom_with,
    kostka, sweep_dk_with, Error, FormalSum, HomVector, Limits, PairStraightener, Partition, Prime, Tableau, Verdict,
    Weight,
};

#[derive(Parser)]
#[command(name = "weylhom", version, about = "Homomorphisms between Weyl modules of GL_n over F_p")]
struct Cli {
    /// Cap on the monomials held by any single linear-algebra problem.
    #[arg(long, global = true, env = "WEYLHOM_MAX_DIM", value_name = "N")]
    max_dim: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List (or count) the semistandard tableaux of shape mu and weight.
    Sst {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        weight: Weight,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// Express a tableau in the semistandard basis.
    Straighten {
        #[arg(long)]
        p: u64,
        /// Matrix rows joined by ';', e.g. "0,1,2;2,0,0".
        #[arg(long)]
        tableau: Tableau,
    },
    /// Dimension of Hom(Δ(lambda), Δ(mu)).
    Hom {
        #[command(flatten)]
        pair: Pair,
        /// Also print a reduced echelon basis.
        #[arg(long)]
        basis: bool,
    },
    /// The sum of all semistandard phi_T: is it a nonzero homomorphism?
    Psi {
        #[command(flatten)]
        pair: Pair,
        /// Also print the tableaux.
        #[arg(long)]
        basis: bool,
    },
    /// Check theorem hypotheses for a pair.
    Check {
        #[command(subcommand)]
        which: Check,
    },
    /// d_k = dim Hom(Δ(lambda + k nu), Δ(mu + k nu)) for k = 0..=kmax.
    Sweep {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        kmax: usize,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Stability under adding gamma.
    Stability {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        gamma: Partition,
    },
    /// Nonvanishing of the sum of all semistandard phi_T.
    Nonvanishing {
        #[command(flatten)]
        pair: Pair,
    },
    /// Carter–Payne witnesses.
    CarterPayne {
        #[command(flatten)]
        pair: Pair,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
}

impl Pair {
    fn validate(&self) -> Result<(), Error> {
        Prime::new(self.p)?;
        if self.lambda.size() != self.mu.size() {
            return Err(Error::SizeMismatch { left: self.lambda.size(), right: self.mu.size() });
        }
        Ok(())
    }

    fn header(&self) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("p".into(), json!(self.p));
        m.insert("lambda".into(), json!(self.lambda.parts()));
        m.insert("mu".into(), json!(self.mu.parts()));
        m
    }
}

struct Failure {
    code: u8,
    kind: &'static str,
    reason: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::ResourceCap { .. } | Error::OracleCap(_) => (3, "resource-cap"),
            Error::Internal(_) => (1, "internal"),
            _ => (2, "invalid-input"),
        };
        Failure { code, kind, reason: e.to_string() }
    }
}

/// Output plus an optional failure reported after it (partial sweeps).
type Outcome = Result<(String, Option<Failure>), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: invalid-input: {line}");
            return ExitCode::from(2);
        }
    };
    let (out, failure) = match run(&cli) {
        Ok(pair) => pair,
        Err(f) => (String::new(), Some(f)),
    };
    print!("{out}");
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error: {}: {}", f.kind, f.reason);
            ExitCode::from(f.code)
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    match cli.max_dim {
        Some(0) => return Err(Error::invalid("--max-dim must be positive").into()),
        Some(n) => limits.monomial_cap = n,
        None => {}
    }
    Ok(limits)
}

fn run(cli: &Cli) -> Outcome {
    let limits = limits(cli)?;
    let done = |s: String| Ok((s, None));
    match &cli.command {
        Command::Sst { mu, weight, count } => done(sst(mu, weight, *count, cli.json)?),
        Command::Straighten { p, tableau } => done(straighten(*p, tableau, limits, cli.json)?),
        Command::Hom { pair, basis } => done(hom(pair, *basis, limits, cli.json)?),
        Command::Psi { pair, basis } => done(psi(pair, *basis, limits, cli.json)?),
        Command::Check { which } => done(check(which, cli.json)?),
        Command::Sweep { pair, nu, kmax } => sweep(pair, nu, *kmax, limits, cli.json),
    }
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().fold(String::new(), |mut s, x| {
        let _ = writeln!(s, "{x}");
        s
    })
}

fn pretty(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialize"))
}

fn terms_json<'a>(terms: impl Iterator<Item = (&'a Tableau, u32)>) -> Value {
    terms.map(|(t, c)| json!({ "tableau": t.to_string(), "coeff": c })).collect()
}

fn terms_text<'a>(terms: impl Iterator<Item = (&'a Tableau, u32)>) -> String {
    let parts: Vec<String> = terms.map(|(t, c)| format!("{c}*[{t}]")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn sst(mu: &Partition, weight: &Weight, count: bool, as_json: bool) -> Result<String, Failure> {
    if mu.size() != weight.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: weight.size() }.into());
    }
    let header = json!({ "mu": mu.parts(), "weight": weight.entries() });
    if count {
        let k = kostka(mu, weight)?;
        return Ok(if as_json {
            let mut v = header;
            v["count"] = json!(k);
            pretty(v)
        } else {
            format!("{k}\n")
        });
    }
    let tableaux = enumerate_sst(mu, weight)?;
    Ok(if as_json {
        let mut v = header;
        v["count"] = json!(tableaux.len());
        v["tableaux"] = tableaux.iter().map(|t| json!(t.to_string())).collect();
        pretty(v)
    } else {
        lines(&tableaux)
    })
}

fn straighten(p: u64, tableau: &Tableau, limits: Limits, as_json: bool) -> Result<String, Failure> {
    let prime = Prime::new(p)?;
    let rows = tableau.row_sums();
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!("row lengths {rows:?} of [{tableau}] are not a partition")).into());
    }
    let mut engine = PairStraightener::with_cap(prime, limits.monomial_cap);
    let v = engine.straighten(&FormalSum::monomial(tableau.clone(), prime))?;
    Ok(if as_json {
        pretty(json!({
            "p": p,
            "mu": Partition::new(rows)?.parts(),
            "weight": tableau.col_sums(),
            "terms": terms_json(v.terms()),
        }))
    } else {
        lines(v.terms().map(|(t, c)| format!("{c} {t}")).chain(v.is_zero().then(|| "0".to_string())))
    })
}

fn hom(pair: &Pair, basis: bool, limits: Limits, as_json: bool) -> Result<String, Failure> {
    pair.validate()?;
    let res = hom_space_with(&pair.lambda, &pair.mu, pair.p, limits)?;
    if as_json {
        let mut m = pair.header();
        m.insert("dim".into(), json!(res.dim));
        if basis {
            m.insert("basis".into(), res.basis.iter().map(|v| terms_json(v.terms())).collect());
        }
        return Ok(pretty(Value::Object(m)));
    }
    let mut out = format!("dim {}\n", res.dim);
    if basis {
        for (k, v) in res.basis.iter().enumerate() {
            let _ = writeln!(out, "v{}: {}", k + 1, terms_text(v.terms()));
        }
    }
    Ok(out)
}

fn psi(pair: &Pair, basis: bool, limits: Limits, as_json: bool) -> Result<String, Failure> {
    pair.validate()?;
    let v: HomVector = build_psi(&pair.lambda, &pair.mu, pair.p)?;
    let nonzero = !v.is_zero();
    let hom = nonzero && is_hom_with(&v, limits)?;
    if as_json {
        let mut m = pair.header();
        m.insert("tableaux".into(), json!(v.basis.len()));
        m.insert("nonzero".into(), json!(nonzero));
        m.insert("is_hom".into(), json!(hom));
        if basis {
            m.insert("basis".into(), terms_json(v.terms()));
        }
        return Ok(pretty(Value::Object(m)));
    }
    let mut out = format!("tableaux {}\nnonzero {nonzero}\nis_hom {hom}\n", v.basis.len());
    if basis {
        out.push_str(&lines(v.terms().map(|(t, _)| t)));
    }
    Ok(out)
}

fn verdict_json(v: &Verdict) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("applicable".into(), json!(v.applicable));
    m.insert("failed".into(), json!(v.failed_conditions));
    m.insert("prediction".into(), json!(v.prediction));
    if let Some(note) = &v.note {
        m.insert("note".into(), json!(note));
    }
    Value::Object(m)
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("applicable {}\n", v.applicable);
    for f in &v.failed_conditions {
        let _ = writeln!(out, "failed: {f}");
    }
    let _ = writeln!(out, "prediction: {}", v.prediction);
    if let Some(note) = &v.note {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

fn check(which: &Check, as_json: bool) -> Result<String, Failure> {
    let (pair, verdict, extra) = match which {
        Check::Stability { pair, gamma } => {
            pair.validate()?;
            let v = check_stability(&pair.lambda, &pair.mu, gamma, pair.p)?;
            (pair, v, Some(("gamma", json!(gamma.parts()))))
        }
        Check::Nonvanishing { pair } => {
            pair.validate()?;
            (pair, check_nonvanishing(&pair.lambda, &pair.mu, pair.p)?, None)
        }
        Check::CarterPayne { pair } => {
            pair.validate()?;
            let w = carter_payne_witnesses(&pair.lambda, &pair.mu, pair.p)?;
            let failed = if w.is_empty() {
                vec!["no (i, j, q) with mu = lambda + q e_i - q e_j and p^{l_p(q)} | lambda_i - lambda_j + j - i + q".into()]
            } else {
                Vec::new()
            };
            let v = Verdict {
                applicable: !w.is_empty(),
                failed_conditions: failed,
                prediction: format!("Hom(Δ({}), Δ({})) is nonzero", pair.lambda, pair.mu),
                note: None,
            };
            let witnesses: Value = w.iter().map(|&(i, j, q)| json!({ "i": i, "j": j, "q": q })).collect();
            (pair, v, Some(("witnesses", witnesses)))
        }
    };
    if as_json {
        let mut m = pair.header();
        if let Some((k, v)) = extra {
            m.insert(k.into(), v);
        }
        m.insert("verdict".into(), verdict_json(&verdict));
        return Ok(pretty(Value::Object(m)));
    }
    let mut out = verdict_text(&verdict);
    if let Some(("witnesses", Value::Array(ws))) = extra {
        for w in ws {
            let _ = writeln!(out, "witness: i={} j={} q={}", w["i"], w["j"], w["q"]);
        }
    }
    Ok(out)
}

fn sweep(pair: &Pair, nu: &Partition, kmax: usize, limits: Limits, as_json: bool) -> Outcome {
    pair.validate()?;
    let s = sweep_dk_with(&pair.lambda, &pair.mu, nu, pair.p, kmax, limits)?;
    let failure = s.failure.map(|(k, e)| {
        let mut f = Failure::from(e);
        f.reason = format!("at k={k}: {}", f.reason);
        (k, f)
    });
    let out = if as_json {
        let mut m = pair.header();
        m.insert("nu".into(), json!(nu.parts()));
        m.insert("values".into(), json!(s.values));
        if let Some((k, f)) = &failure {
            m.insert("failed_at".into(), json!(k));
            m.insert("reason".into(), json!(f.reason));
        }
        pretty(Value::Object(m))
    } else {
        let mut out = String::from("k,dim\n");
        for (k, d) in s.values.iter().enumerate() {
            let _ = writeln!(out, "{k},{d}");
        }
        out
    };
    Ok((out, failure.map(|(_, f)| f)))
}
