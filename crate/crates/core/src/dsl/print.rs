use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::quad::{Presentation, Slot};
use crate::scalar::{rat_string, Scalar};
use crate::trees::{GenSpace, Mode};

/// `e_i ∘_u e_j` written as a function-call monomial in x, y, z.
pub fn format_monomial<F: Scalar>(gens: &GenSpace<F>, u: Slot, i: usize, j: usize) -> String {
    let (gi, gj) = (gens.name(i), gens.name(j));
    match u {
        Slot::I | Slot::Left => format!("{gi}({gj}(x,y),z)"),
        Slot::II => format!("{gi}({gj}(y,z),x)"),
        Slot::III => format!("{gi}({gj}(z,x),y)"),
        Slot::Right => format!("{gi}(x,{gj}(y,z))"),
    }
}

/// A relation vector as a signed sum of monomials; the zero vector prints as `0`.
pub fn format_relation<F: Scalar>(p: &Presentation<F>, v: &[F]) -> Result<String> {
    let basis = p.basis();
    let mut s = String::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_negligible() {
            continue;
        }
        let q = c.to_rational().ok_or_else(|| Error::Conversion(c.to_string()))?;
        let (u, i, j) = basis.decode(idx);
        let mono = format_monomial(p.gens(), u, i, j);
        let sign = if q.is_negative() { "-" } else { "+" };
        if s.is_empty() {
            if q.is_negative() {
                s.push('-');
            }
        } else {
            s += &format!(" {sign} ");
        }
        let a = q.abs();
        if !a.is_one() {
            s += &format!("{}*", rat_string(&a));
        }
        s += &mono;
    }
    if s.is_empty() {
        s.push('0');
    }
    Ok(s)
}

fn declarations<F: Scalar>(gens: &GenSpace<F>) -> Result<Vec<String>> {
    let n = gens.len();
    let Some(a) = gens.action() else {
        return Ok(gens.names().iter().map(|g| format!("op {g};")).collect());
    };
    let row_is = |i: usize, j: usize, v: i64| {
        (0..n).all(|k| {
            let want = if k == j { F::from_i64(v) } else { F::zero() };
            (a.get(i, k).clone() - want).is_negligible()
        })
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let g = gens.name(i);
        if row_is(i, i, 1) {
            out.push(format!("op {g} sym;"));
        } else if row_is(i, i, -1) {
            out.push(format!("op {g} antisym;"));
        } else if i + 1 < n && row_is(i, i + 1, 1) && row_is(i + 1, i, 1) {
            out.push(format!("op {g} pair {};", gens.name(i + 1)));
            i += 1;
        } else {
            let row = a
                .row(i)
                .iter()
                .map(|x| x.to_rational().map(|q| rat_string(&q)).ok_or_else(|| Error::Conversion(x.to_string())))
                .collect::<Result<Vec<_>>>()?;
            out.push(format!("op {g} matrix [{}];", row.join(", ")));
        }
        i += 1;
    }
    Ok(out)
}

/// `Tri(Lie)!` becomes `Tri_Lie_dual`; plain identifiers are unchanged.
pub fn identifier(name: &str) -> String {
    let mut s = String::new();
    for c in name.chars() {
        match c {
            '!' => s += "_dual",
            ')' | ' ' => {}
            c if c.is_ascii_alphanumeric() || c == '_' => s.push(c),
            _ => s.push('_'),
        }
    }
    s
}

/// Canonical `.opd` text of one presentation.
pub fn print_operad<F: Scalar>(p: &Presentation<F>) -> Result<String> {
    let mut s = format!("operad {} {{\n", identifier(p.name()));
    if p.mode() == Mode::Nonsymmetric {
        s += "    nonsymmetric;\n";
    }
    for d in declarations(p.gens())? {
        s += &format!("    {d}\n");
    }
    for r in p.relations() {
        s += &format!("    rel {};\n", format_relation(p, r)?);
    }
    s.push_str("}\n");
    Ok(s)
}

/// Canonical text of several presentations, separated by blank lines.
pub fn print_operads<F: Scalar>(ps: &[Presentation<F>]) -> Result<String> {
    Ok(ps.iter().map(print_operad).collect::<Result<Vec<_>>>()?.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::dsl::parse_operad;
    use crate::exactlin::subspace_equal;
    use crate::Rat;

    #[test]
    fn derived_presentations_reparse() {
        let c = Catalog::builtin().unwrap();
        for expr in ["dup(Lie)", "dual(tri(Lie))", "bsu(Ass)", "tsu(Comm)", "tri(nsAss)"] {
            let p = c.eval(expr).unwrap();
            let text = print_operad(&p).unwrap();
            let back = parse_operad::<Rat>(&text).unwrap();
            assert_eq!(back.gens().names(), p.gens().names(), "{expr}");
            assert_eq!(back.gens().action(), p.gens().action(), "{expr}");
            assert!(subspace_equal(back.closure(), p.closure()).unwrap(), "{expr}");
        }
        assert_eq!(identifier("Tri(Lie)!"), "Tri_Lie_dual");
    }
}
