use std::collections::BTreeMap;

use super::lexer::{Cursor, Tok};
use super::print::identifier;
use super::{convert, parse_rat};
use crate::algcheck::{FinAlgebra, Tensor};
use crate::error::Result;
use crate::exactlin::Mat;
use crate::scalar::{rat_string, Scalar};

/// An algebra together with the named operators declared next to it.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraFile<F> {
    pub algebra: FinAlgebra<F>,
    pub operators: BTreeMap<String, Mat<F>>,
}

enum Nested<F> {
    Leaf(F),
    List(Vec<Nested<F>>),
}

fn nested<F: Scalar>(c: &mut Cursor) -> Result<Nested<F>> {
    if c.eat_sym('[') {
        let mut items = Vec::new();
        if !c.at_sym(']') {
            loop {
                items.push(nested(c)?);
                if !c.eat_sym(',') {
                    break;
                }
            }
        }
        c.expect_sym(']')?;
        Ok(Nested::List(items))
    } else {
        let at = c.peek().clone();
        Ok(Nested::Leaf(convert(&parse_rat(c)?, &at)?))
    }
}

/// Flattens a nested list of the given depth whose every level has length `d`.
fn flatten<F: Scalar>(n: Nested<F>, depth: usize, d: usize, out: &mut Vec<F>) -> std::result::Result<(), String> {
    match (n, depth) {
        (Nested::Leaf(v), 0) => {
            out.push(v);
            Ok(())
        }
        (Nested::List(items), k) if k > 0 => {
            if items.len() != d {
                return Err(format!("expected {d} entries, found {}", items.len()));
            }
            items.into_iter().try_for_each(|i| flatten(i, k - 1, d, out))
        }
        (Nested::Leaf(_), _) => Err("array nested too shallowly".into()),
        (Nested::List(_), _) => Err("array nested too deeply".into()),
    }
}

/// Parses `algebra NAME { dim d; op NAME tensor [...]; map NAME matrix [...]; }`.
pub fn parse_algebra<F: Scalar>(src: &str) -> Result<AlgebraFile<F>> {
    let mut c = Cursor::new(src)?;
    c.expect_keyword("algebra")?;
    let (name, _) = c.expect_ident("an algebra name")?;
    c.expect_sym('{')?;
    c.expect_keyword("dim")?;
    let at = c.peek().clone();
    let d = c.expect_int()?;
    if d == 0 {
        return Cursor::error_at(&at, "dimension must be positive");
    }
    c.eat_sym(';');
    let mut algebra = FinAlgebra::new(name, d);
    let mut operators = BTreeMap::new();
    loop {
        let kw = match &c.peek().tok {
            Tok::Ident(k) if k == "op" || k == "map" => k.clone(),
            _ => break,
        };
        c.next();
        let (item, name_at) = c.expect_ident("a name")?;
        if algebra.ops().contains_key(&item) || operators.contains_key(&item) {
            return Cursor::error_at(&name_at, format!("`{item}` defined twice"));
        }
        let at = c.peek().clone();
        if kw == "op" {
            c.expect_keyword("tensor")?;
            let mut flat = Vec::new();
            if let Err(msg) = flatten(nested::<F>(&mut c)?, 3, d, &mut flat) {
                return Cursor::error_at(&at, format!("tensor of `{item}`: {msg}"));
            }
            let mut t = Tensor::zeros(d);
            for (k, v) in flat.into_iter().enumerate() {
                t.set(k / (d * d), (k / d) % d, k % d, v);
            }
            algebra.insert_op(item, t)?;
        } else {
            c.expect_keyword("matrix")?;
            let mut flat = Vec::new();
            if let Err(msg) = flatten(nested::<F>(&mut c)?, 2, d, &mut flat) {
                return Cursor::error_at(&at, format!("matrix of `{item}`: {msg}"));
            }
            let rows = flat.chunks(d).map(|r| r.to_vec()).collect();
            operators.insert(item, Mat::from_rows(rows, d)?);
        }
        c.eat_sym(';');
    }
    c.expect_sym('}')?;
    if !c.at_eof() {
        return c.error("unexpected input after the algebra block");
    }
    Ok(AlgebraFile { algebra, operators })
}

fn scalar_string<F: Scalar>(v: &F) -> String {
    match v.to_rational() {
        Some(q) if F::EXACT => rat_string(&q),
        _ => v.to_string(),
    }
}

fn list(items: Vec<String>) -> String {
    format!("[{}]", items.join(", "))
}

/// Canonical text of an algebra file.
pub fn print_algebra<F: Scalar>(a: &AlgebraFile<F>) -> String {
    let d = a.algebra.dim();
    let mut s = format!("algebra {} {{\n    dim {d};\n", identifier(a.algebra.name()));
    for (name, t) in a.algebra.ops() {
        let planes = (0..d)
            .map(|i| list((0..d).map(|j| list((0..d).map(|k| scalar_string(t.get(i, j, k))).collect())).collect()))
            .collect();
        s += &format!("    op {name} tensor {};\n", list(planes));
    }
    for (name, m) in &a.operators {
        let rows = (0..d).map(|i| list((0..d).map(|j| scalar_string(m.get(i, j))).collect())).collect();
        s += &format!("    map {name} matrix {};\n", list(rows));
    }
    s + "}\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use num_rational::BigRational;

    type Q = BigRational;

    const POINTWISE: &str =
        "algebra K2 {\n dim 2;\n op mul tensor [[[1,0],[0,0]],[[0,0],[0,1]]];\n map P matrix [[1,0],[1,0]];\n}";

    #[test]
    fn pointwise_file() {
        let f: AlgebraFile<Q> = parse_algebra(POINTWISE).unwrap();
        let t = f.algebra.op("mul").unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let want = i64::from(i == j && j == k);
                    assert_eq!(*t.get(i, j, k), Q::from_integer(want.into()));
                }
            }
        }
        let p = &f.operators["P"];
        let one = Q::from_integer(1.into());
        let zero = Q::from_integer(0.into());
        let img = crate::algcheck::apply_operator(p, &[Q::from_integer(3.into()), Q::from_integer(5.into())]);
        assert_eq!(img, vec![Q::from_integer(3.into()), Q::from_integer(3.into())]);
        assert_eq!(p.row(0), &[one, zero]);
    }

    #[test]
    fn round_trip() {
        let f: AlgebraFile<Q> = parse_algebra(POINTWISE).unwrap();
        let printed = print_algebra(&f);
        assert_eq!(parse_algebra::<Q>(&printed).unwrap(), f);
        assert_eq!(print_algebra(&parse_algebra::<Q>(&printed).unwrap()), printed);
    }

    #[test]
    fn malformed() {
        let bad = POINTWISE.replace("[[[1,0]", "[[[1/0,0]");
        assert!(matches!(parse_algebra::<Q>(&bad), Err(Error::Parse { .. })));
        let bad = POINTWISE.replace("[[1,0],[1,0]]", "[[1,0],[1,0,0]]");
        let Err(Error::Parse { msg, .. }) = parse_algebra::<Q>(&bad) else { panic!() };
        assert!(msg.contains("expected 2 entries"), "{msg}");
        let bad = POINTWISE.replace("[[[1,0],[0,0]],[[0,0],[0,1]]]", "[[1,0],[0,1]]");
        assert!(parse_algebra::<Q>(&bad).is_err());
    }
}
