mod common;

use common::*;
use opdcalc_core::dsl::parse_operads;
use opdcalc_core::exactlin::{annihilator, span};
use opdcalc_core::quad::*;
use opdcalc_core::{Error, Mat, Mode, Presentation, Rat, ReplicaTag};

fn unit(dim: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![q(0); dim];
    v[k] = q(1);
    v
}

#[test]
fn du_weight3_table() {
    for base in ["Lie", "Ass", "Pois"] {
        assert_eq!(du_table_mismatches(&eval(base)), Vec::<String>::new());
    }
}

#[test]
fn bsu_weight3_table() {
    for base in ["Lie", "Ass", "Pois"] {
        assert_eq!(bsu_table_mismatches(&eval(base)), Vec::<String>::new());
    }
}

#[test]
fn replicated_generators_are_tag_major() {
    let rep = make_replicated(eval("Ass").gens(), Flavor::Tri).unwrap();
    assert_eq!(rep.names(), ["m_dashv", "mp_dashv", "m_vdash", "mp_vdash", "m_perp", "mp_perp"]);
    assert_eq!(rep.origin(3), Some((1, ReplicaTag::Vdash)));
    // (m,⊣)^(12) = (mp,⊢)
    assert_eq!(rep.action().unwrap().row(0), &[q(0), q(0), q(0), q(1), q(0), q(0)]);
}

#[test]
fn duality_reports() {
    for name in ["Lie", "Comm", "Ass", "PreLie", "Pois", "Perm", "Leib", "Zinb"] {
        let r = duality_check(&eval(name)).unwrap();
        assert!(r.holds, "{name}: {r:?}");
        assert_eq!(r.lhs_rank, r.rhs_rank);
        assert_eq!(r.lhs_rank + duplicator(&eval(name)).unwrap().closure().rank(), r.ambient);
    }
    let r = duality_check(&eval("Free")).unwrap();
    assert!(!r.holds);
    assert_eq!(r.relations_rank, 0);
    assert_eq!(r.ambient, 12);
    assert_eq!(r.bsu_bound, 9);
    assert!(r.rhs_rank <= 9, "{r:?}");
    assert_eq!(r.lhs_rank, 12);
}

#[test]
fn triduality_reports() {
    for name in ["Lie", "Comm", "Ass", "PreLie", "Pois"] {
        let r = tridality_check(&eval(name)).unwrap();
        assert!(r.all(), "{name}: {r:?}");
    }
    let r = tridality_check(&eval("Free")).unwrap();
    assert!(r.stable && r.involutive && !r.holds);
}

#[test]
fn koszul_duals() {
    assert_eq!(koszul_dual(&eval("Lie")).unwrap().name(), "Lie!");
    for e in catalog().entries().iter().filter(|e| e.mode == Mode::Symmetric) {
        let p = &e.presentation;
        let d = koszul_dual(p).unwrap();
        assert_eq!(p.closure().rank() + d.closure().rank(), p.ambient_dim(), "{}", e.name);
        let dd = koszul_dual(&d).unwrap();
        assert!(equal_presentations(p, &dd, &GenMap::identity(p.gens().len())).unwrap(), "{}", e.name);
        assert_eq!(dd.gens().action(), p.gens().action());
    }
}

#[test]
fn nonsymmetric_rejections() {
    let ns = eval("nsAss");
    assert!(matches!(koszul_dual(&ns), Err(Error::NonsymmetricUnsupported(_))));
    assert!(matches!(bisuccessor(&ns), Err(Error::NonsymmetricUnsupported(_))));
    assert!(matches!(trisuccessor(&ns), Err(Error::NonsymmetricUnsupported(_))));
    assert!(matches!(duality_check(&ns), Err(Error::NonsymmetricUnsupported(_))));
}

#[test]
fn trisuccessor_of_the_full_space() {
    let gens = eval("Comm").gens().clone();
    let all: Vec<Vec<Rat>> = (0..3).map(|k| unit(3, k)).collect();
    let full = Presentation::new("Zero", gens, all).unwrap();
    assert!(matches!(trisuccessor(&full), Err(Error::TrisuccessorPrecondition)));
    assert!(trisuccessor(&eval("Free")).is_ok());
}

#[test]
fn nonsymmetric_replicators() {
    let du = duplicator(&eval("nsAss")).unwrap();
    assert_eq!((du.closure().rank(), du.ambient_dim()), (5, 8));
    let tri = triplicator(&eval("nsAss")).unwrap();
    assert_eq!((tri.closure().rank(), tri.ambient_dim()), (11, 18));
    let dias = eval("nsDias");
    let ident = GenMap::identity(2);
    assert!(equal_presentations(&dias, &du, &ident).unwrap());
}

/// `dim P(3) = ambient − rank R`, against the known dimensions.
#[test]
fn arity_three_dimensions() {
    let known = [
        ("Lie", 2),
        ("Comm", 1),
        ("Ass", 6),
        ("Free", 3),
        ("Leib", 6),
        ("Perm", 3),
        ("Pois", 6),
        ("PreLie", 9),
        ("Zinb", 6),
        ("Dias", 18),
        ("Dend", 30),
        ("Trias", 42),
        ("TriDend", 66),
        ("ComTrias", 7),
        ("nsAss", 1),
        ("nsDias", 3),
        ("nsTrias", 7),
    ];
    for (name, dim) in known {
        let p = eval(name);
        assert_eq!(p.ambient_dim() - p.closure().rank(), dim, "{name}");
    }
}

fn substitute(src: &str, perm: [char; 3]) -> String {
    let chars: Vec<char> = src.chars().collect();
    let word = |c: Option<&char>| c.is_some_and(|c| c.is_alphanumeric() || *c == '_');
    let mut out = String::with_capacity(src.len());
    for (k, &c) in chars.iter().enumerate() {
        let alone = !word(k.checked_sub(1).and_then(|p| chars.get(p))) && !word(chars.get(k + 1));
        match c {
            'x' | 'y' | 'z' if alone => out.push(perm[(c as u8 - b'x') as usize]),
            _ => out.push(c),
        }
    }
    out
}

/// Closure recomputed by renaming variables in the source text.
#[test]
fn closure_matches_textual_relabeling() {
    let perms = [['x', 'y', 'z'], ['y', 'x', 'z'], ['z', 'y', 'x'], ['x', 'z', 'y'], ['y', 'z', 'x'], ['z', 'x', 'y']];
    for e in catalog().entries().iter().filter(|e| e.mode == Mode::Symmetric) {
        let mut rels = Vec::new();
        for perm in perms {
            let parsed = parse_operads::<Rat>(&substitute(&e.source, perm)).unwrap();
            let p = parsed.iter().find(|p| p.name() == e.name).unwrap();
            rels.extend(p.relations().iter().cloned());
        }
        let s = span(&rels, e.presentation.ambient_dim()).unwrap();
        assert_eq!(s.rank(), e.presentation.closure().rank(), "{}", e.name);
        assert!(s.contains_subspace(e.presentation.closure()).unwrap());
    }
}

#[test]
fn annihilator_of_the_closure_pairs_to_zero() {
    let p = eval("Perm");
    let perp = annihilator(p.closure(), &Mat::identity(p.ambient_dim())).unwrap();
    for a in p.closure().basis() {
        for b in perp.basis() {
            let dot = a.iter().zip(b).fold(q(0), |s, (x, y)| s + x * y);
            assert_eq!(dot, q(0));
        }
    }
}

#[test]
fn morphisms_and_maps() {
    let lie = eval("Lie");
    let ass = eval("Ass");
    let f = GenMap::new(mat(&[&[1, -1]]));
    assert!(f.is_equivariant(lie.gens(), ass.gens()).unwrap());
    assert!(verify_morphism(&lie, &ass, &f).unwrap());
    let g = GenMap::new(mat(&[&[1, 0]]));
    assert!(!g.is_equivariant(lie.gens(), ass.gens()).unwrap());
    assert!(matches!(verify_morphism(&lie, &ass, &g), Err(Error::NotEquivariant)));
    let bad = GenMap::new(mat(&[&[1, 0, 0]]));
    assert!(verify_morphism(&lie, &ass, &bad).is_err());
    let swap = GenMap::new(mat(&[&[0, 1], &[1, 0]]));
    assert!(equal_presentations(&ass, &ass, &swap).unwrap());
    let singular = GenMap::new(mat(&[&[1, 1], &[1, 1]]));
    assert!(equal_presentations(&ass, &ass, &singular).is_err());
}

#[test]
fn completion_of_partial_maps() {
    let perm = eval("Perm");
    let du = eval("dup(Comm)");
    let f = opdcalc_core::catalog::map_from_spec(&perm, &du, "p=(m,vdash)").unwrap();
    assert_eq!(f.matrix().row(1), &[q(1), q(0)]);
    assert!(equal_presentations(&perm, &du, &f).is_ok());
    let half = opdcalc_core::catalog::map_from_spec(&eval("Lie"), &eval("Ass"), "b=1/2*m-1/2*mp").unwrap();
    assert_eq!(half.matrix().row(0), &[qq(1, 2), qq(-1, 2)]);
}
