//! `opdcalc`: replicators, successors and Koszul duals of binary quadratic operads.

mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use opdcalc_core::algcheck::{find_violation, is_di_average, is_tri_average, replicate_di, replicate_tri};
use opdcalc_core::catalog::{map_from_spec, run_identity_table, Catalog, RowKind};
use opdcalc_core::dsl::{parse_operads, print_algebra, print_operad, print_operads, AlgebraFile};
use opdcalc_core::quad::{
    bisuccessor, duality_check, duplicator, equal_presentations, koszul_dual, tridality_check, triplicator,
    trisuccessor, verify_morphism,
};
use opdcalc_core::scalar::parse_rat;
use opdcalc_core::{Error, Mode, Presentation, Rat, Result};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "opdcalc", version, about = "Exact calculus of binary quadratic operads")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Output {
    /// Print the full result as `.opd` / algebra text.
    #[arg(long)]
    print: bool,
    /// Write a JSON report to PATH (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Catalog name, FILE#NAME, FILE.opd, or an expression such as `dual(tri(Lie))`.
    #[arg(long, value_name = "EXPR")]
    catalog: String,
    /// Use the nonsymmetric variants of catalog names.
    #[arg(long)]
    ns: bool,
}

#[derive(Args)]
struct Single {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Compare {
    #[arg(long, value_name = "EXPR")]
    left: String,
    #[arg(long, value_name = "EXPR")]
    right: String,
    /// Generator map, e.g. `l=(b,vdash)` or `b=m-mp`.
    #[arg(long)]
    map: String,
    #[arg(long)]
    ns: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct AlgCheck {
    /// Algebra file.
    file: PathBuf,
    #[command(flatten)]
    input: Input,
    /// `generator=operation`, repeatable or comma-separated.
    #[arg(long, required = true)]
    bind: Vec<String>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct AvgCheck {
    file: PathBuf,
    /// Operation the operator averages.
    #[arg(long)]
    op: String,
    /// Name of the operator declared in the algebra file.
    #[arg(long, value_name = "NAME")]
    map: String,
    /// Check the tri-average identities instead.
    #[arg(long)]
    tri: bool,
    /// Weight of the tri-average operator.
    #[arg(long, default_value = "1")]
    weight: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Replicate {
    file: PathBuf,
    #[command(flatten)]
    input: Input,
    #[arg(long, required = true)]
    bind: Vec<String>,
    /// Name of the operator declared in the algebra file.
    #[arg(long, value_name = "NAME")]
    map: String,
    /// Build the triplicated algebra (operator of weight 1).
    #[arg(long)]
    tri: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the entries.
    List(Output),
    /// Show one entry or expression.
    Show {
        name: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check every identity and morphism in the table.
    VerifyAll(Output),
}

#[derive(Subcommand)]
enum Cmd {
    /// Duplicator Du(P).
    Dup(Single),
    /// Triplicator Tri(P).
    Tri(Single),
    /// Bisuccessor BSu(P).
    Bsu(Single),
    /// Trisuccessor TSu(P).
    Tsu(Single),
    /// Koszul dual P!.
    Dual(Single),
    /// Equality `left = right` via a map from the generators of `right` to those of `left`.
    Eq(Compare),
    /// Morphism `left -> right` given on the generators of `left`.
    Morphism(Compare),
    /// Du(P)! = BSu(P!).
    DualityCheck(Single),
    /// Tri(P)! = TSu(P!), stability and involutivity.
    TridalityCheck(Single),
    /// Check an algebra against a presentation.
    AlgCheck(AlgCheck),
    /// Di- or tri-average identities of an operator.
    AvgCheck(AvgCheck),
    /// Replicate an algebra along an average operator and check the result.
    Replicate(Replicate),
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Parse an `.opd` or algebra file and print it canonically.
    Parse {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

struct Outcome {
    text: String,
    result: Value,
    holds: Option<bool>,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn value(text: String, result: Value) -> Self {
        Outcome { text, result, holds: None, diagnostics: Vec::new() }
    }

    fn check(line: String, holds: bool, result: Value) -> Self {
        let verdict = if holds { "PASS" } else { "FAIL" };
        Outcome { text: format!("{line} : {verdict}\n"), result, holds: Some(holds), diagnostics: Vec::new() }
    }
}

fn summary(p: &Presentation) -> String {
    let mode = if p.mode() == Mode::Symmetric { "" } else { ", nonsymmetric" };
    format!(
        "{}: generators {}{mode}; {} relations, closure rank {} of {}\n",
        p.name(),
        p.gens().names().join(", "),
        p.relations().len(),
        p.closure().rank(),
        p.ambient_dim()
    )
}

fn show(p: &Presentation, out: &Output) -> Result<Outcome> {
    let text = if out.print { print_operad(p)? } else { summary(p) };
    Ok(Outcome::value(text, report::presentation(p)))
}

fn construct(s: &Single, f: fn(&Presentation) -> Result<Presentation>) -> Result<Outcome> {
    show(&f(&input::presentation(&s.input.catalog, s.input.ns)?)?, &s.out)
}

fn compare(c: &Compare, kind: RowKind) -> Result<Outcome> {
    let left = input::presentation(&c.left, c.ns)?;
    let right = input::presentation(&c.right, c.ns)?;
    let (holds, line, map) = match kind {
        RowKind::Equal => {
            let f = map_from_spec(&right, &left, &c.map)?;
            (equal_presentations(&right, &left, &f)?, format!("{} = {}", left.name(), right.name()), f)
        }
        RowKind::Morphism => {
            let f = map_from_spec(&left, &right, &c.map)?;
            (verify_morphism(&left, &right, &f)?, format!("{} -> {}", left.name(), right.name()), f)
        }
    };
    let details = json!({
        "left": report::presentation(&left),
        "right": report::presentation(&right),
        "map": report::matrix(map.matrix()),
    });
    Ok(Outcome::check(line, holds, report::check(&c.map, holds, details)))
}

fn duality(s: &Single) -> Result<Outcome> {
    let p = input::presentation(&s.input.catalog, s.input.ns)?;
    let r = duality_check(&p)?;
    let line = format!("Du({0})! = BSu({0}!)", p.name());
    let details = json!({
        "relations_rank": r.relations_rank,
        "lhs_rank": r.lhs_rank,
        "rhs_rank": r.rhs_rank,
        "ambient": r.ambient,
        "bsu_bound": r.bsu_bound,
    });
    let mut o = Outcome::check(line.clone(), r.holds, report::check(&line, r.holds, details));
    o.diagnostics.push(format!(
        "rank R = {}; rank Du(P)! = {}, rank BSu(P!) = {} in dimension {}",
        r.relations_rank, r.lhs_rank, r.rhs_rank, r.ambient
    ));
    if r.relations_rank == 0 {
        o.diagnostics.push(format!("R = 0: BSu(P!) is spanned by at most {} vectors", r.bsu_bound));
    }
    Ok(o)
}

fn triduality(s: &Single) -> Result<Outcome> {
    let p = input::presentation(&s.input.catalog, s.input.ns)?;
    let r = tridality_check(&p)?;
    let name = p.name();
    let text = format!(
        "Tri({name})! = TSu({name}!) : {}\nTri({name})! is S3-stable : {}\n(Tri({name})!)! = Tri({name}) : {}\n",
        verdict(r.holds),
        verdict(r.stable),
        verdict(r.involutive)
    );
    let details = json!({ "holds": r.holds, "stable": r.stable, "involutive": r.involutive });
    Ok(Outcome {
        text,
        result: report::check("triduality", r.all(), details),
        holds: Some(r.all()),
        diagnostics: vec![],
    })
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn alg_check(a: &AlgCheck) -> Result<Outcome> {
    let file = input::algebra(&a.file)?;
    let p = input::presentation(&a.input.catalog, a.input.ns)?;
    let binding = input::binding(&a.bind)?;
    let v = find_violation(&file.algebra, &p, &binding)?;
    let line = format!("{} is a {} algebra", file.algebra.name(), p.name());
    let details = json!({ "violation": v.as_ref().map(|v| json!({ "relation": v.relation, "triple": v.triple })) });
    let mut o = Outcome::check(line.clone(), v.is_none(), report::check(&line, v.is_none(), details));
    if let Some(v) = v {
        let [i, j, k] = v.triple.map(|t| t + 1);
        o.diagnostics.push(format!("relation {} fails on (e{i}, e{j}, e{k})", v.relation + 1));
    }
    Ok(o)
}

fn operator<'a>(file: &'a AlgebraFile<Rat>, name: &str) -> Result<&'a opdcalc_core::Mat> {
    file.operators.get(name).ok_or_else(|| Error::UnknownOp(name.to_string()))
}

fn avg_check(a: &AvgCheck) -> Result<Outcome> {
    let file = input::algebra(&a.file)?;
    let p = operator(&file, &a.map)?;
    let (holds, line) = if a.tri {
        let w = parse_rat(&a.weight).ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("bad weight `{}`", a.weight),
        })?;
        let holds = is_tri_average(&file.algebra, &a.op, p, &w)?;
        (holds, format!("{} is a tri-average operator of weight {} for {}", a.map, a.weight, a.op))
    } else {
        (is_di_average(&file.algebra, &a.op, p)?, format!("{} is a di-average operator for {}", a.map, a.op))
    };
    Ok(Outcome::check(line.clone(), holds, report::check(&line, holds, json!({}))))
}

fn replicate(r: &Replicate) -> Result<Outcome> {
    let file = input::algebra(&r.file)?;
    let p = input::presentation(&r.input.catalog, r.input.ns)?;
    let binding = input::binding(&r.bind)?;
    let op = operator(&file, &r.map)?;
    let (alg, new_binding, target) = if r.tri {
        let (a, b) = replicate_tri(&file.algebra, &p, &binding, op)?;
        (a, b, triplicator(&p)?)
    } else {
        let (a, b) = replicate_di(&file.algebra, &p, &binding, op)?;
        (a, b, duplicator(&p)?)
    };
    let v = find_violation(&alg, &target, &new_binding)?;
    let out = AlgebraFile { algebra: alg, operators: Default::default() };
    let line = format!("{} is a {} algebra", out.algebra.name(), target.name());
    let bind: Vec<String> = new_binding.iter().map(|(g, o)| format!("{g}={o}")).collect();
    let mut text = format!("{line} : {}\n", verdict(v.is_none()));
    if r.out.print {
        text = print_algebra(&out) + &text;
    }
    let details = json!({ "algebra": report::algebra(&out), "binding": bind });
    let mut o = Outcome {
        text,
        result: report::check(&line, v.is_none(), details),
        holds: Some(v.is_none()),
        diagnostics: vec![],
    };
    o.diagnostics.push(format!("binding {}", bind.join(",")));
    Ok(o)
}

fn catalog_cmd(c: &CatalogCmd) -> Result<Outcome> {
    let catalog = Catalog::load()?;
    match c {
        CatalogCmd::List(_) => {
            let mut text = String::new();
            let mut entries = Vec::new();
            for e in catalog.entries() {
                let p = &e.presentation;
                text += &format!(
                    "{:<12} {:<12} rank {:>2} of {:<3} {}\n",
                    e.name,
                    if e.mode == Mode::Symmetric { "symmetric" } else { "nonsymmetric" },
                    p.closure().rank(),
                    p.ambient_dim(),
                    e.provenance
                );
                let mut v = report::presentation(p);
                v["provenance"] = json!(e.provenance);
                entries.push(v);
            }
            Ok(Outcome::value(text, json!({ "kind": "catalog", "entries": entries })))
        }
        CatalogCmd::Show { name, out } => {
            let p = catalog.eval(name)?;
            let mut o = show(&p, &Output { print: true, json: out.json.clone() })?;
            if let Ok(e) = catalog.get(name) {
                o.text = format!("% provenance: {}\n{}", e.provenance, o.text);
                o.result["provenance"] = json!(e.provenance);
            }
            Ok(o)
        }
        CatalogCmd::VerifyAll(_) => {
            let rows = run_identity_table(&catalog);
            let mut text = String::new();
            for r in &rows {
                let rel = match r.row.kind {
                    RowKind::Equal => "=",
                    RowKind::Morphism => "->",
                };
                let mut line =
                    format!("{}  {} {rel} {}  [{}]", verdict(r.passed()), r.row.left, r.row.right, r.row.map);
                if !r.row.expected {
                    line += "  (recorded counterexample)";
                }
                if let Err(e) = &r.outcome {
                    line += &format!("  error: {e}");
                }
                text += &line;
                text.push('\n');
            }
            let holds = rows.iter().all(|r| r.as_expected());
            let mut o = Outcome { text, result: report::rows(&rows), holds: Some(holds), diagnostics: vec![] };
            for r in rows.iter().filter(|r| !r.passed() && !r.detail.is_empty()) {
                o.diagnostics.push(format!("{}: {}", r.row.label, r.detail));
            }
            Ok(o)
        }
    }
}

fn parse_file(file: &Path) -> Result<Outcome> {
    let src = input::source(file)?;
    let first =
        src.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('%') && !l.starts_with("//")).unwrap_or("");
    if first.starts_with("algebra") {
        let a = input::algebra(file)?;
        return Ok(Outcome::value(print_algebra(&a), report::algebra(&a)));
    }
    let ps = parse_operads::<Rat>(&src).map_err(|e| match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{}: {msg}", file.display()) },
        other => other,
    })?;
    let operads: Vec<Value> = ps.iter().map(report::presentation).collect();
    Ok(Outcome::value(print_operads(&ps)?, json!({ "kind": "operads", "operads": operads })))
}

fn output(cmd: &Cmd) -> Option<&Output> {
    match cmd {
        Cmd::Dup(s) | Cmd::Tri(s) | Cmd::Bsu(s) | Cmd::Tsu(s) | Cmd::Dual(s) => Some(&s.out),
        Cmd::DualityCheck(s) | Cmd::TridalityCheck(s) => Some(&s.out),
        Cmd::Eq(c) | Cmd::Morphism(c) => Some(&c.out),
        Cmd::AlgCheck(a) => Some(&a.out),
        Cmd::AvgCheck(a) => Some(&a.out),
        Cmd::Replicate(r) => Some(&r.out),
        Cmd::Catalog(CatalogCmd::List(o) | CatalogCmd::VerifyAll(o)) => Some(o),
        Cmd::Catalog(CatalogCmd::Show { out, .. }) => Some(out),
        Cmd::Parse { out, .. } => Some(out),
    }
}

fn run(cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Dup(s) => construct(s, duplicator),
        Cmd::Tri(s) => construct(s, triplicator),
        Cmd::Bsu(s) => construct(s, bisuccessor),
        Cmd::Tsu(s) => construct(s, trisuccessor),
        Cmd::Dual(s) => construct(s, koszul_dual),
        Cmd::Eq(c) => compare(c, RowKind::Equal),
        Cmd::Morphism(c) => compare(c, RowKind::Morphism),
        Cmd::DualityCheck(s) => duality(s),
        Cmd::TridalityCheck(s) => triduality(s),
        Cmd::AlgCheck(a) => alg_check(a),
        Cmd::AvgCheck(a) => avg_check(a),
        Cmd::Replicate(r) => replicate(r),
        Cmd::Catalog(c) => catalog_cmd(c),
        Cmd::Parse { file, .. } => parse_file(file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let o = match run(&cli.cmd) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json_path = output(&cli.cmd).and_then(|o| o.json.as_ref());
    let to_stdout = json_path.is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        print!("{}", o.text);
        for d in &o.diagnostics {
            println!("  {d}");
        }
    }
    if let Some(path) = json_path {
        let doc = report::envelope(&command, o.result, &o.diagnostics);
        let body = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
        if to_stdout {
            print!("{body}");
        } else if let Err(e) = std::fs::write(path, body) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match o.holds {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}
