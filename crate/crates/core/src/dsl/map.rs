use num_rational::BigRational;
use num_traits::One;

use super::lexer::{Cursor, Tok};
use super::parse_rat;
use crate::error::Result;

/// `generator = Σ coefficient · generator`; an empty list means zero.
pub type MapAssignment = (String, Vec<(BigRational, String)>);

/// Parses `src=c1*(gen,tag)+gen2-...; other=0`.
///
/// `(g,t)` names the replicated generator `g_t`, and nests: `((m,dashv),vdash)` is `m_dashv_vdash`.
pub fn parse_map(src: &str) -> Result<Vec<MapAssignment>> {
    let mut c = Cursor::new(src)?;
    let mut out = Vec::new();
    while !c.at_eof() {
        if c.eat_sym(';') {
            continue;
        }
        let lhs = gen_ref(&mut c)?;
        c.expect_sym('=')?;
        out.push((lhs, combo(&mut c)?));
        if !c.at_eof() {
            c.expect_sym(';')?;
        }
    }
    Ok(out)
}

fn gen_ref(c: &mut Cursor) -> Result<String> {
    if c.eat_sym('(') {
        let base = gen_ref(c)?;
        c.expect_sym(',')?;
        let (tag, _) = c.expect_ident("a tag name")?;
        c.expect_sym(')')?;
        Ok(format!("{base}_{tag}"))
    } else {
        Ok(c.expect_ident("a generator")?.0)
    }
}

fn combo(c: &mut Cursor) -> Result<Vec<(BigRational, String)>> {
    if c.peek().tok == Tok::Int("0".into()) && matches!(c.peek_at(1), Tok::Sym(';') | Tok::Eof) {
        c.next();
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
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
        let coef = if matches!(c.peek().tok, Tok::Int(_)) {
            let q = parse_rat(c)?;
            c.expect_sym('*')?;
            q
        } else {
            BigRational::one()
        };
        terms.push((if neg { -coef } else { coef }, gen_ref(c)?));
    }
    if terms.is_empty() {
        return c.error("expected an image");
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn syntax() {
        let m = parse_map("cdot=(omega,vdash)").unwrap();
        assert_eq!(m, vec![("cdot".into(), vec![(q(1, 1), "omega_vdash".into())])]);
        let m = parse_map("d = dashv - vdashp; br=perp-1/2*perpp;").unwrap();
        assert_eq!(m[0].1, vec![(q(1, 1), "dashv".into()), (q(-1, 1), "vdashp".into())]);
        assert_eq!(m[1].1[1], (q(-1, 2), "perpp".into()));
        let m = parse_map("(m,perp)=0; ((m,dashv),vdash)=-m").unwrap();
        assert_eq!(m[0], ("m_perp".into(), vec![]));
        assert_eq!(m[1], ("m_dashv_vdash".into(), vec![(q(-1, 1), "m".into())]));
        assert!(parse_map("a=").is_err());
        assert!(parse_map("a b").is_err());
    }
}
