//! Text formats: operad definitions (`.opd`), algebra files and generator maps.

mod algebra;
mod lexer;
mod map;
mod operad;
mod print;

pub use algebra::{parse_algebra, print_algebra, AlgebraFile};
pub use map::{parse_map, MapAssignment};
pub use operad::{parse_operad, parse_operads};
pub use print::{format_monomial, format_relation, identifier, print_operad, print_operads};

use lexer::Cursor;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::scalar::Scalar;

/// `INT ["/" INT]`, with an optional leading minus sign.
fn parse_rat(c: &mut Cursor) -> Result<BigRational> {
    let neg = c.eat_sym('-');
    let n = int_literal(c)?;
    let d = if c.eat_sym('/') {
        let at = c.peek().clone();
        let d = int_literal(c)?;
        if d.is_zero() {
            return Cursor::error_at(&at, "zero denominator");
        }
        d
    } else {
        BigInt::from(1)
    };
    let q = BigRational::new(n, d);
    Ok(if neg { -q } else { q })
}

fn int_literal(c: &mut Cursor) -> Result<BigInt> {
    match c.peek().tok.clone() {
        lexer::Tok::Int(s) => {
            c.next();
            Ok(s.parse().expect("lexer only produces digits"))
        }
        other => c.error(format!("expected a number, found {}", lexer::describe(&other))),
    }
}

fn convert<F: Scalar>(q: &BigRational, at: &lexer::Token) -> Result<F> {
    match F::from_rational(q) {
        Some(v) => Ok(v),
        None => Cursor::error_at(at, format!("{q} does not fit the scalar type")),
    }
}
