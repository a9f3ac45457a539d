//! The acceptance criteria, one PASS/FAIL line each.

mod common;

use std::process::ExitCode;

use common::*;
use opdcalc_core::algcheck::{check_algebra, is_di_average, is_tri_average, replicate_di, replicate_tri};
use opdcalc_core::catalog::{check_row, IDENTITY_TABLE};
use opdcalc_core::dsl::{parse_operads, print_operad};
use opdcalc_core::exactlin::{annihilator, subspace_equal};
use opdcalc_core::quad::*;
use opdcalc_core::{Mat, Mode, Presentation, Rat, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    fn row(&mut self, label: &str) {
        let row = IDENTITY_TABLE.iter().find(|r| r.label == label).unwrap_or_else(|| panic!("no row `{label}`"));
        let r = check_row(catalog(), row);
        let msg = match &r.outcome {
            Ok(true) => String::new(),
            Ok(false) => format!("{label}: {}", r.detail),
            Err(e) => format!("{label}: {e}"),
        };
        self.check(r.passed(), msg);
    }
}

fn criterion1() -> Result<Outcome> {
    let mut o = Outcome::new();
    for label in [
        "duplicator of Lie",
        "duplicator of Comm",
        "duplicator of Pois",
        "duplicator of PreLie",
        "triplicator of Comm",
        "triplicator of Lie",
    ] {
        o.row(label);
    }
    let tl = eval("TriLeib");
    o.check(tl.relations().len() == 4 && tl.closure().rank() == eval("tri(Lie)").closure().rank(), "TriLeib relations");
    Ok(o)
}

fn criterion2() -> Result<Outcome> {
    let mut o = Outcome::new();
    let du = duplicator(&eval("nsAss"))?;
    o.check(du.closure().rank() == 5, format!("Du(nsAss) rank {}", du.closure().rank()));
    o.row("nonsymmetric duplicator of Ass");
    let tri = triplicator(&eval("nsAss"))?;
    o.check((tri.closure().rank(), tri.ambient_dim()) == (11, 18), format!("Tri(nsAss) rank {}", tri.closure().rank()));
    o.row("nonsymmetric triplicator of Ass");
    Ok(o)
}

fn criterion3() -> Result<Outcome> {
    let mut o = Outcome::new();
    for name in ["Lie", "Comm", "Ass", "PreLie", "Pois"] {
        let d = duality_check(&eval(name))?;
        o.check(d.holds, format!("Du({name})! != BSu({name}!)"));
        let t = tridality_check(&eval(name))?;
        o.check(t.all(), format!("{name}: {t:?}"));
    }
    Ok(o)
}

fn criterion4() -> Result<Outcome> {
    let mut o = Outcome::new();
    for label in ["Koszul dual of Lie", "Koszul dual of Comm", "Koszul dual of Ass"] {
        o.row(label);
    }
    for e in catalog().entries().iter().filter(|e| e.mode == Mode::Symmetric) {
        let p = &e.presentation;
        let d = koszul_dual(p)?;
        o.check(p.closure().rank() + d.closure().rank() == p.ambient_dim(), format!("rank law for {}", e.name));
        let dd = koszul_dual(&d)?;
        o.check(equal_presentations(p, &dd, &GenMap::identity(p.gens().len()))?, format!("double dual of {}", e.name));
    }
    Ok(o)
}

fn criterion5() -> Result<Outcome> {
    let mut o = Outcome::new();
    let r = duality_check(&eval("Free"))?;
    o.check(!r.holds, "duality holds for the free operad");
    o.check(r.ambient == 12 && r.rhs_rank <= r.bsu_bound && r.bsu_bound == 9, format!("{r:?}"));
    Ok(o)
}

fn criterion6() -> Result<Outcome> {
    let mut o = Outcome::new();
    for p in ["Lie", "Comm", "Ass"] {
        for m in ["eta", "zeta", "rho", "phi"] {
            o.row(&format!("{m} for {p}"));
        }
    }
    for label in [
        "TriLeib to Trias by derived operations",
        "Lie to Ass, commutator",
        "Ass to Comm",
        "Leib to Lie",
        "Leib to Dias",
        "Dias to Ass",
        "Dias to Perm",
        "Perm to Comm",
        "Trias to Dias, perp to zero",
    ] {
        o.row(label);
    }
    Ok(o)
}

fn criterion7() -> Result<Outcome> {
    let mut o = Outcome::new();
    for base in ["Lie", "Ass", "Pois"] {
        let p = eval(base);
        for m in du_table_mismatches(&p).into_iter().chain(bsu_table_mismatches(&p)) {
            o.check(false, format!("{base}: {m}"));
        }
    }
    Ok(o)
}

fn criterion8() -> Result<Outcome> {
    let mut o = Outcome::new();
    let a = pointwise();
    let m = bind(&[("m", "mul")]);
    o.check(is_di_average(&a, "mul", &proj())?, "projection is not di-average");
    o.check(is_tri_average(&a, "mul", &proj(), &q(1))?, "projection is not tri-average");
    let (du, _) = replicate_di(&a, &eval("Comm"), &m, &proj())?;
    o.check(check_algebra(&du, &eval("Perm"), &bind(&[("p", "mul_vdash")]))?, "Perm check");
    let (tri, _) = replicate_tri(&a, &eval("Comm"), &m, &proj())?;
    let ct = bind(&[("star", "mul_dashv"), ("bullet", "mul_perp")]);
    o.check(check_algebra(&tri, &eval("ComTrias"), &ct)?, "ComTrias check");
    for alg in [pointwise(), nilpotent2(), lie2(), upper3()] {
        let op = alg.ops().keys().next().expect("one operation").clone();
        let d = alg.dim();
        o.check(is_di_average(&alg, &op, &Mat::identity(d))?, format!("identity on {}", alg.name()));
        o.check(is_di_average(&alg, &op, &Mat::zeros(d, d))?, format!("zero on {}", alg.name()));
    }
    let (leib, _) = replicate_di(&lie2(), &eval("Lie"), &bind(&[("b", "br")]), &Mat::identity(2))?;
    o.check(check_algebra(&leib, &eval("Leib"), &bind(&[("l", "br_vdash")]))?, "Leibniz check");
    Ok(o)
}

type Build = fn(&Presentation) -> Result<Presentation>;
type Criterion = fn() -> Result<Outcome>;

fn block_diag(m: &Mat, copies: usize) -> Mat {
    let n = m.rows();
    let mut out = Mat::zeros(n * copies, n * copies);
    for c in 0..copies {
        for i in 0..n {
            for j in 0..n {
                out.set(c * n + i, c * n + j, m.get(i, j).clone());
            }
        }
    }
    out
}

fn criterion9() -> Result<Outcome> {
    let mut o = Outcome::new();
    let sym: Vec<&Presentation> =
        catalog().entries().iter().filter(|e| e.mode == Mode::Symmetric).map(|e| &e.presentation).collect();
    for p in &sym {
        let dim = p.ambient_dim();
        for s in Perm::ALL {
            for t in Perm::ALL {
                let lhs = s3_matrix(p.gens(), t)?.mul(&s3_matrix(p.gens(), s)?)?;
                o.check(lhs == s3_matrix(p.gens(), s.compose(t))?, format!("S3 law on {}", p.name()));
            }
        }
        let again = closure(p.gens(), p.closure().basis())?;
        o.check(
            subspace_equal(&again, p.closure())? && is_s3_stable(p.gens(), p.closure())?,
            format!("closure of {}", p.name()),
        );
        let perp = annihilator(p.closure(), &Mat::identity(dim))?;
        o.check(perp.rank() + p.closure().rank() == dim, format!("annihilator rank for {}", p.name()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let names = ["Lie", "Comm", "Ass", "Pois", "PreLie", "Perm", "Leib", "Zinb"];
    let flavors: [(Build, usize); 3] = [(duplicator, 2), (triplicator, 3), (bisuccessor, 2)];
    for round in 0..20 {
        let p = eval(names[round % names.len()]);
        let n = p.gens().len();
        let a = p.gens().action().expect("symmetric");
        let m = loop {
            let rows = (0..n).map(|_| (0..n).map(|_| q(rng.gen_range(-3..=3))).collect()).collect();
            let m = Mat::from_rows(rows, n)?;
            let ama = a.mul(&m)?.mul(a)?;
            let mut avg = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    avg.set(i, j, (m.get(i, j) + ama.get(i, j)) * qq(1, 2));
                }
            }
            if avg.rank() == n {
                break avg;
            }
        };
        let moved = GenMap::new(m.clone()).transport(p.closure(), p.mode())?;
        let p2 = Presentation::new("P'", p.gens().clone(), moved.basis().to_vec())?;
        for (build, copies) in flavors {
            let g = GenMap::new(block_diag(&m, copies));
            o.check(
                equal_presentations(&build(&p)?, &build(&p2)?, &g)?,
                format!("basis change {round} on {}", p.name()),
            );
        }
    }

    for e in catalog().entries() {
        let printed = print_operad(&e.presentation)?;
        let back = parse_operads::<Rat>(&printed)?;
        let stable = back.len() == 1
            && subspace_equal(back[0].closure(), e.presentation.closure())?
            && print_operad(&back[0])? == printed;
        o.check(stable, format!("round trip of {}", e.name));
    }
    Ok(o)
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("replicator identities", criterion1),
        ("nonsymmetric mode", criterion2),
        ("Koszul duality of the calculus", criterion3),
        ("Koszul dual sanity", criterion4),
        ("free operad failure branch", criterion5),
        ("morphism suite", criterion6),
        ("weight-3 table fidelity", criterion7),
        ("average operators", criterion8),
        ("property suites", criterion9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run().unwrap_or_else(|e| Outcome { ok: false, notes: vec![format!("error: {e}")] });
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        if o.ok {
            println!("criterion {}: {verdict} ({name})", k + 1);
        } else {
            failed += 1;
            println!("criterion {}: {verdict} ({name}): {}", k + 1, o.notes.join("; "));
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
