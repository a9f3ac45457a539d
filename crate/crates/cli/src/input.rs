//! Resolving command-line inputs: catalog expressions, algebra files, bindings.

use std::path::Path;

use opdcalc_core::algcheck::Binding;
use opdcalc_core::catalog::Catalog;
use opdcalc_core::dsl::{parse_algebra, AlgebraFile};
use opdcalc_core::{Error, Mode, Presentation, Rat, Result};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{}: {msg}", path.display()) },
        other => other,
    }
}

/// Prefixes leaf names with `ns` where the catalog has such an entry.
fn nonsymmetric_names(catalog: &Catalog, expr: &str) -> String {
    let mut out = String::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String, next: Option<char>| {
        if !word.is_empty() {
            let ns = format!("ns{word}");
            if next != Some('(') && catalog.get(&ns).is_ok() {
                out.push_str(&ns);
            } else {
                out.push_str(word);
            }
            word.clear();
        }
    };
    let chars: Vec<char> = expr.chars().collect();
    for (k, &c) in chars.iter().enumerate() {
        if c.is_alphanumeric() || c == '_' {
            word.push(c);
            continue;
        }
        let next = chars[k..].iter().copied().find(|c| !c.is_whitespace());
        flush(&mut word, &mut out, next);
        out.push(c);
    }
    flush(&mut word, &mut out, None);
    out
}

/// Evaluates `NAME`, `FILE#NAME`, `FILE.opd` or a construction expression.
pub fn presentation(spec: &str, ns: bool) -> Result<Presentation> {
    let mut catalog = Catalog::load()?;
    let expr = match spec.split_once('#') {
        Some((file, expr)) => {
            let path = Path::new(file);
            catalog.overlay(&read(path)?).map_err(|e| in_file(path, e))?;
            expr.to_string()
        }
        None if spec.ends_with(".opd") && Path::new(spec).is_file() => {
            let path = Path::new(spec);
            let src = read(path)?;
            let parsed = opdcalc_core::dsl::parse_operads::<Rat>(&src).map_err(|e| in_file(path, e))?;
            let [only] = parsed.as_slice() else {
                return Err(Error::Precondition(format!("{spec} defines {} operads; use FILE#NAME", parsed.len())));
            };
            let name = only.name().to_string();
            catalog.overlay(&src)?;
            name
        }
        None => spec.to_string(),
    };
    let expr = if ns { nonsymmetric_names(&catalog, &expr) } else { expr };
    let p = catalog.eval(&expr)?;
    if ns && p.mode() != Mode::Nonsymmetric {
        return Err(Error::Precondition(format!("`{spec}` has no nonsymmetric variant")));
    }
    Ok(p)
}

pub fn algebra(path: &Path) -> Result<AlgebraFile<Rat>> {
    parse_algebra(&read(path)?).map_err(|e| in_file(path, e))
}

pub fn source(path: &Path) -> Result<String> {
    read(path)
}

/// `g=op` pairs, given repeatedly or comma-separated.
pub fn binding(items: &[String]) -> Result<Binding> {
    let mut b = Binding::new();
    for item in items.iter().flat_map(|s| s.split(',')) {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (g, op) = item
            .split_once('=')
            .ok_or_else(|| Error::Binding(format!("`{item}` is not of the form generator=operation")))?;
        b.insert(g.trim().to_string(), op.trim().to_string());
    }
    Ok(b)
}
