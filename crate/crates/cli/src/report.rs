//! JSON renderings of results; rationals are strings `p` or `p/q`.

use opdcalc_core::catalog::RowResult;
use opdcalc_core::dsl::AlgebraFile;
use opdcalc_core::scalar::rat_string;
use opdcalc_core::{FinAlgebra, Mat, Mode, Presentation, Rat};
use serde_json::{json, Value};

pub fn matrix(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| m.row(i).iter().map(|q| Value::String(rat_string(q))).collect()).collect())
}

pub fn presentation(p: &Presentation) -> Value {
    let gens = p.gens();
    let generators: Vec<Value> = (0..gens.len())
        .map(|i| json!({ "name": gens.name(i), "tag": gens.origin(i).map(|(_, t)| t.ascii()) }))
        .collect();
    let basis = p.basis();
    let relations: Vec<Value> = p
        .relations()
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| *c != &Rat::from_integer(0.into()))
                .map(|(k, c)| {
                    let (u, i, j) = basis.decode(k);
                    json!([gens.name(i), gens.name(j), u.label(), rat_string(c)])
                })
                .collect()
        })
        .collect();
    json!({
        "kind": "presentation",
        "name": p.name(),
        "mode": if p.mode() == Mode::Symmetric { "symmetric" } else { "nonsymmetric" },
        "generators": generators,
        "action": gens.action().map(matrix),
        "ambient_dim": p.ambient_dim(),
        "relations": relations,
        "closure_rank": p.closure().rank(),
    })
}

pub fn check(label: &str, holds: bool, details: Value) -> Value {
    json!({ "kind": "check", "label": label, "holds": holds, "details": details })
}

pub fn rows(rows: &[RowResult]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            let outcome = match &r.outcome {
                Ok(true) => "pass".to_string(),
                Ok(false) => "fail".to_string(),
                Err(e) => format!("error: {e}"),
            };
            json!({
                "label": r.row.label,
                "left": r.row.left,
                "right": r.row.right,
                "map": r.row.map,
                "expected": r.row.expected,
                "outcome": outcome,
                "detail": r.detail,
            })
        })
        .collect();
    json!({ "kind": "table", "rows": rows })
}

fn tensor(a: &FinAlgebra, name: &str) -> Value {
    let t = a.op(name).expect("listed operation");
    let d = a.dim();
    Value::Array(
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| Value::String(rat_string(t.get(i, j, k)))).collect::<Value>())
                    .collect::<Value>()
            })
            .collect(),
    )
}

pub fn algebra(f: &AlgebraFile<Rat>) -> Value {
    let a = &f.algebra;
    let ops: serde_json::Map<String, Value> = a.ops().keys().map(|k| (k.clone(), tensor(a, k))).collect();
    let operators: serde_json::Map<String, Value> = f.operators.iter().map(|(k, m)| (k.clone(), matrix(m))).collect();
    json!({ "kind": "algebra", "name": a.name(), "dim": a.dim(), "ops": ops, "operators": operators })
}

/// The envelope written by `--json`.
pub fn envelope(command: &str, result: Value, diagnostics: &[String]) -> Value {
    json!({ "command": command, "result": result, "diagnostics": diagnostics })
}
