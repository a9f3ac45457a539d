use super::lexer::{describe, Cursor, Tok, Token};
use super::{convert, parse_rat};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::quad::{normalize_weight3, Presentation, Weight3Basis};
use crate::scalar::Scalar;
use crate::trees::{DecoratedTree, GenSpace, Vertex};

const KEYWORDS: [&str; 9] = ["operad", "op", "rel", "sym", "antisym", "pair", "matrix", "nonsymmetric", "algebra"];

enum Kind<F> {
    Sym,
    Antisym,
    PairFirst(usize),
    PairSecond(usize),
    Row(Vec<F>, Token),
    Plain,
}

/// Parses every operad block in `src`.
pub fn parse_operads<F: Scalar>(src: &str) -> Result<Vec<Presentation<F>>> {
    let mut c = Cursor::new(src)?;
    let mut out = Vec::new();
    while !c.at_eof() {
        out.push(operad(&mut c)?);
    }
    Ok(out)
}

/// Parses a source holding exactly one operad block.
pub fn parse_operad<F: Scalar>(src: &str) -> Result<Presentation<F>> {
    let mut all = parse_operads(src)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(Error::Parse { line: 1, col: 1, msg: "no operad definition found".into() }),
        k => Err(Error::Parse { line: 1, col: 1, msg: format!("expected one operad, found {k}") }),
    }
}

fn check_name(name: &str, at: &Token) -> Result<()> {
    if ["x", "y", "z"].contains(&name) || KEYWORDS.contains(&name) {
        return Cursor::error_at(at, format!("`{name}` is reserved and cannot name a generator"));
    }
    Ok(())
}

fn operad<F: Scalar>(c: &mut Cursor) -> Result<Presentation<F>> {
    c.expect_keyword("operad")?;
    let (name, _) = c.expect_ident("an operad name")?;
    c.expect_sym('{')?;
    let mut nonsymmetric = false;
    let mut names: Vec<String> = Vec::new();
    let mut kinds: Vec<Kind<F>> = Vec::new();
    while c.at_keyword("nonsymmetric") || c.at_keyword("op") {
        if c.at_keyword("nonsymmetric") {
            if !names.is_empty() {
                return c.error("`nonsymmetric` must precede the generator declarations");
            }
            c.next();
            nonsymmetric = true;
            c.eat_sym(';');
            continue;
        }
        c.next();
        let (g, at) = c.expect_ident("a generator name")?;
        check_name(&g, &at)?;
        if names.contains(&g) {
            return Cursor::error_at(&at, format!("generator `{g}` declared twice"));
        }
        let kind_at = c.peek().clone();
        let kind = match &kind_at.tok {
            Tok::Ident(k) if ["sym", "antisym", "pair", "matrix"].contains(&k.as_str()) && nonsymmetric => {
                return Cursor::error_at(&kind_at, "nonsymmetric generators carry no symmetry declaration")
            }
            Tok::Ident(k) if k == "sym" => {
                c.next();
                Kind::Sym
            }
            Tok::Ident(k) if k == "antisym" => {
                c.next();
                Kind::Antisym
            }
            Tok::Ident(k) if k == "pair" => {
                c.next();
                let (h, at2) = c.expect_ident("the partner generator name")?;
                check_name(&h, &at2)?;
                if h == g || names.contains(&h) {
                    return Cursor::error_at(&at2, format!("generator `{h}` declared twice"));
                }
                names.push(g);
                kinds.push(Kind::PairFirst(names.len()));
                names.push(h);
                kinds.push(Kind::PairSecond(names.len() - 2));
                c.eat_sym(';');
                continue;
            }
            Tok::Ident(k) if k == "matrix" => {
                c.next();
                c.expect_sym('[')?;
                let mut row = Vec::new();
                loop {
                    let at = c.peek().clone();
                    row.push(convert::<F>(&parse_rat(c)?, &at)?);
                    if !c.eat_sym(',') {
                        break;
                    }
                }
                c.expect_sym(']')?;
                Kind::Row(row, kind_at.clone())
            }
            _ if nonsymmetric => Kind::Plain,
            other => {
                return Cursor::error_at(
                    &kind_at,
                    format!("expected `sym`, `antisym`, `pair` or `matrix`, found {}", describe(other)),
                )
            }
        };
        names.push(g);
        kinds.push(kind);
        c.eat_sym(';');
    }
    if names.is_empty() {
        return c.error("an operad needs at least one `op` declaration");
    }
    let gens = if nonsymmetric {
        GenSpace::nonsymmetric(names)?
    } else {
        let n = names.len();
        let mut rows = Vec::with_capacity(n);
        for (i, k) in kinds.into_iter().enumerate() {
            let mut row = vec![F::zero(); n];
            match k {
                Kind::Sym => row[i] = F::one(),
                Kind::Antisym => row[i] = F::one().negated(),
                Kind::PairFirst(j) | Kind::PairSecond(j) => row[j] = F::one(),
                Kind::Row(r, at) => {
                    if r.len() != n {
                        return Cursor::error_at(&at, format!("matrix row needs {n} entries, found {}", r.len()));
                    }
                    row = r;
                }
                Kind::Plain => unreachable!("symmetric mode requires a symmetry kind"),
            }
            rows.push(row);
        }
        let action = Mat::from_rows(rows, n)?;
        let at = c.peek().clone();
        GenSpace::symmetric(names, action).or_else(|e| Cursor::error_at(&at, e.to_string()))?
    };
    let mut rels = Vec::new();
    while c.at_keyword("rel") {
        c.next();
        let v = relation(c, &gens)?;
        if v.iter().any(|x| !x.is_negligible()) {
            rels.push(v);
        }
        c.eat_sym(';');
    }
    if c.at_keyword("op") || c.at_keyword("nonsymmetric") {
        return c.error("declarations must precede relations");
    }
    c.expect_sym('}')?;
    Presentation::new(name, gens, rels)
}

fn relation<F: Scalar>(c: &mut Cursor, gens: &GenSpace<F>) -> Result<Vec<F>> {
    let mut out = vec![F::zero(); Weight3Basis::of(gens).dim()];
    let mut first = true;
    loop {
        let neg = if c.eat_sym('-') {
            true
        } else if c.eat_sym('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let at = c.peek().clone();
        let coef = if matches!(at.tok, Tok::Int(_)) {
            let q = parse_rat(c)?;
            c.expect_sym('*')?;
            convert::<F>(&q, &at)?
        } else {
            F::one()
        };
        let coef = if neg { coef.negated() } else { coef };
        let t = app(c, gens)?;
        let weight = t.vertex_count();
        if weight != 2 {
            return Cursor::error_at(&at, format!("monomial has weight {}; relations must have weight 3", weight + 1));
        }
        let mut leaves = t.leaves();
        leaves.sort_unstable();
        if leaves != [1, 2, 3] {
            return Cursor::error_at(&at, "each of x, y, z must occur exactly once in a monomial");
        }
        let v = normalize_weight3(gens, &t).or_else(|e| Cursor::error_at(&at, e.to_string()))?;
        for (o, x) in out.iter_mut().zip(v) {
            *o = o.clone() + coef.clone() * x;
        }
    }
    Ok(out)
}

fn app<F: Scalar>(c: &mut Cursor, gens: &GenSpace<F>) -> Result<DecoratedTree> {
    let (name, at) = c.expect_ident("a generator application")?;
    let Some(g) = gens.index_of(&name) else {
        return Cursor::error_at(&at, format!("unknown generator `{name}`"));
    };
    c.expect_sym('(')?;
    let l = arg(c, gens)?;
    c.expect_sym(',')?;
    let r = arg(c, gens)?;
    c.expect_sym(')')?;
    Ok(DecoratedTree::Node(Vertex::new(g), Box::new(l), Box::new(r)))
}

fn arg<F: Scalar>(c: &mut Cursor, gens: &GenSpace<F>) -> Result<DecoratedTree> {
    let leaf = match &c.peek().tok {
        Tok::Ident(s) if s == "x" => 1,
        Tok::Ident(s) if s == "y" => 2,
        Tok::Ident(s) if s == "z" => 3,
        _ => return app(c, gens),
    };
    c.next();
    Ok(DecoratedTree::Leaf(leaf))
}
