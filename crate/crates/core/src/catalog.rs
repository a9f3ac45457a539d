//! Built-in presentations and the table of identities and morphisms between them.

use std::path::Path;

use crate::dsl::{parse_map, parse_operads};
use crate::error::{Error, Result};
use crate::quad::{
    bisuccessor, duplicator, equal_presentations, koszul_dual, triplicator, trisuccessor, verify_morphism, GenMap,
    Presentation,
};
use crate::scalar::Scalar;
use crate::trees::Mode;
use crate::Rat;

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/catalog/", $name, ".opd")))),*]
    };
}

/// Shipped `.opd` sources, by file stem.
pub const BUILTIN: &[(&str, &str)] = builtin!(
    "Lie",
    "Comm",
    "Ass",
    "Free",
    "Leib",
    "Perm",
    "Pois",
    "DualPrePois",
    "PreLie",
    "DiPreLie",
    "ComTrias",
    "TriLeib",
    "DualCTD",
    "Dias",
    "Trias",
    "Dend",
    "Zinb",
    "TriDend",
    "CTD",
    "nsAss",
    "nsDias",
    "nsTrias",
);

/// Environment variable naming a directory of `.opd` files to load instead of the built-ins.
pub const DATA_ENV: &str = "OPDCALC_DATA";

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub presentation: Presentation<Rat>,
    pub provenance: String,
    pub mode: Mode,
    pub source: String,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn provenance(src: &str) -> String {
    src.lines().find_map(|l| l.trim().strip_prefix("% provenance:")).map(|s| s.trim().to_string()).unwrap_or_default()
}

impl Catalog {
    pub fn builtin() -> Result<Self> {
        let mut c = Catalog::default();
        for (_, src) in BUILTIN {
            c.add_source(src)?;
        }
        Ok(c)
    }

    /// The directory named by `OPDCALC_DATA` if set, the built-in entries otherwise.
    pub fn load() -> Result<Self> {
        match std::env::var_os(DATA_ENV) {
            Some(dir) => Self::from_dir(Path::new(&dir)),
            None => Self::builtin(),
        }
    }

    /// Every `*.opd` file in `dir`, in file-name order.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
        let mut files: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "opd"))
            .collect();
        files.sort();
        let mut c = Catalog::default();
        for f in files {
            let src = std::fs::read_to_string(&f).map_err(io)?;
            c.add_source(&src).map_err(|e| match e {
                Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{}: {msg}", f.display()) },
                other => other,
            })?;
        }
        Ok(c)
    }

    /// Adds every operad defined in `src`.
    pub fn add_source(&mut self, src: &str) -> Result<()> {
        let prov = provenance(src);
        for p in parse_operads::<Rat>(src)? {
            if self.get(p.name()).is_ok() {
                return Err(Error::Map(format!("catalog entry `{}` defined twice", p.name())));
            }
            self.entries.push(CatalogEntry {
                name: p.name().to_string(),
                mode: p.mode(),
                presentation: p,
                provenance: prov.clone(),
                source: src.to_string(),
            });
        }
        Ok(())
    }

    /// Adds every operad defined in `src`, replacing entries of the same name.
    pub fn overlay(&mut self, src: &str) -> Result<()> {
        let names: Vec<String> = parse_operads::<Rat>(src)?.iter().map(|p| p.name().to_string()).collect();
        self.entries.retain(|e| !names.contains(&e.name));
        self.add_source(src)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownCatalog(name.to_string()))
    }

    pub fn presentation(&self, name: &str) -> Result<Presentation<Rat>> {
        Ok(self.get(name)?.presentation.clone())
    }

    /// Evaluates `dup(...)`, `tri(...)`, `bsu(...)`, `tsu(...)` and `dual(...)` over catalog names.
    pub fn eval(&self, expr: &str) -> Result<Presentation<Rat>> {
        let e = expr.trim();
        let bad = || Error::Parse { line: 1, col: 1, msg: format!("malformed expression `{expr}`") };
        let Some(open) = e.find('(') else {
            return self.presentation(e);
        };
        if !e.ends_with(')') {
            return Err(bad());
        }
        let inner = self.eval(&e[open + 1..e.len() - 1])?;
        match e[..open].trim() {
            "dup" | "du" => duplicator(&inner),
            "tri" => triplicator(&inner),
            "bsu" => bisuccessor(&inner),
            "tsu" => trisuccessor(&inner),
            "dual" => koszul_dual(&inner),
            other => Err(Error::Parse { line: 1, col: 1, msg: format!("unknown construction `{other}`") }),
        }
    }
}

/// Builds a generator map from the `--map` mini-syntax.
pub fn map_from_spec<F: Scalar>(src: &Presentation<F>, tgt: &Presentation<F>, spec: &str) -> Result<GenMap<F>> {
    let parsed = parse_map(spec)?;
    let mut assignments = Vec::with_capacity(parsed.len());
    for (lhs, terms) in parsed {
        let terms = terms
            .into_iter()
            .map(|(c, g)| F::from_rational(&c).map(|c| (c, g)).ok_or_else(|| Error::Conversion(c.to_string())))
            .collect::<Result<Vec<_>>>()?;
        assignments.push((lhs, terms));
    }
    GenMap::from_assignments(src.gens(), tgt.gens(), &assignments)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// `left = right` via a map from the generators of `right` to those of `left`.
    Equal,
    /// A morphism from `left` to `right`, given on the generators of `left`.
    Morphism,
}

#[derive(Clone, Copy, Debug)]
pub struct IdentityRow {
    pub kind: RowKind,
    pub left: &'static str,
    pub right: &'static str,
    pub map: &'static str,
    pub label: &'static str,
    /// False for rows recorded as counterexamples: the claimed map is not a morphism.
    pub expected: bool,
}

const fn eq(left: &'static str, right: &'static str, map: &'static str, label: &'static str) -> IdentityRow {
    IdentityRow { kind: RowKind::Equal, left, right, map, label, expected: true }
}

const fn mor(left: &'static str, right: &'static str, map: &'static str, label: &'static str) -> IdentityRow {
    IdentityRow { kind: RowKind::Morphism, left, right, map, label, expected: true }
}

const fn non(left: &'static str, right: &'static str, map: &'static str, label: &'static str) -> IdentityRow {
    IdentityRow { kind: RowKind::Morphism, left, right, map, label, expected: false }
}

/// Every identity and morphism the catalog is expected to satisfy.
pub const IDENTITY_TABLE: &[IdentityRow] = &[
    eq("dup(Lie)", "Leib", "l=(b,vdash)", "duplicator of Lie"),
    eq("dup(Comm)", "Perm", "p=(m,vdash)", "duplicator of Comm"),
    eq("dup(Pois)", "DualPrePois", "l=(b,vdash); p=(c,vdash)", "duplicator of Pois"),
    eq("dup(PreLie)", "DiPreLie", "dashv=(q,dashv); vdash=(q,vdash)", "duplicator of PreLie"),
    eq("tri(Comm)", "ComTrias", "star=(m,dashv); bullet=(m,perp)", "triplicator of Comm"),
    eq("tri(Lie)", "TriLeib", "d=(b,dashv); br=(b,perp)", "triplicator of Lie"),
    eq("dup(Ass)", "Dias", "dashv=(m,dashv); vdash=(m,vdash)", "duplicator of Ass"),
    eq("tri(Ass)", "Trias", "dashv=(m,dashv); vdash=(m,vdash); perp=(m,perp)", "triplicator of Ass"),
    eq("dup(nsAss)", "nsDias", "dashv=(m,dashv); vdash=(m,vdash)", "nonsymmetric duplicator of Ass"),
    eq("tri(nsAss)", "nsTrias", "dashv=(m,dashv); vdash=(m,vdash); perp=(m,perp)", "nonsymmetric triplicator of Ass"),
    eq("bsu(Ass)", "Dend", "prec=(m,prec); succ=(m,succ)", "bisuccessor of Ass"),
    eq("bsu(Comm)", "Zinb", "zn=(m,prec)", "bisuccessor of Comm"),
    eq("tsu(Ass)", "TriDend", "prec=(m,prec); succ=(m,succ); dot=(m,dot)", "trisuccessor of Ass"),
    eq("tsu(Comm)", "CTD", "prec=(m,prec); dot=(m,dot)", "trisuccessor of Comm"),
    eq("dual(Lie)", "Comm", "m=b", "Koszul dual of Lie"),
    eq("dual(Comm)", "Lie", "b=m", "Koszul dual of Comm"),
    eq("dual(Ass)", "Ass", "m=m", "Koszul dual of Ass"),
    eq("dual(Dias)", "Dend", "prec=dashv; succ=vdash", "Koszul dual of Dias"),
    eq("dual(Trias)", "TriDend", "prec=dashv; succ=vdash; dot=perp", "Koszul dual of Trias"),
    eq("dual(tri(Lie))", "CTD", "prec=(b,dashv); dot=(b,perp)", "Koszul dual of Tri(Lie)"),
    eq("dual(CTD)", "DualCTD", "d=prec; br=dot", "Koszul dual of CTD"),
    eq("dual(Leib)", "Zinb", "zn=lp", "Koszul dual of Leib"),
    eq("dual(Perm)", "PreLie", "q=p", "Koszul dual of Perm"),
    mor("dup(Lie)", "Lie", "(b,dashv)=b; (b,vdash)=b", "eta for Lie"),
    mor("dup(Comm)", "Comm", "(m,dashv)=m; (m,vdash)=m", "eta for Comm"),
    mor("dup(Ass)", "Ass", "(m,dashv)=m; (m,vdash)=m", "eta for Ass"),
    mor("tri(Lie)", "Lie", "(b,dashv)=b; (b,vdash)=b; (b,perp)=b", "zeta for Lie"),
    mor("tri(Comm)", "Comm", "(m,dashv)=m; (m,vdash)=m; (m,perp)=m", "zeta for Comm"),
    mor("tri(Ass)", "Ass", "(m,dashv)=m; (m,vdash)=m; (m,perp)=m", "zeta for Ass"),
    mor("tri(Lie)", "Lie", "(b,perp)=b; (b,dashv)=0; (b,vdash)=0", "rho for Lie"),
    mor("tri(Comm)", "Comm", "(m,perp)=m; (m,dashv)=0; (m,vdash)=0", "rho for Comm"),
    mor("tri(Ass)", "Ass", "(m,perp)=m; (m,dashv)=0; (m,vdash)=0", "rho for Ass"),
    non("tri(Lie)", "dup(Lie)", "(b,dashv)=(b,dashv); (b,vdash)=(b,vdash); (b,perp)=0", "phi for Lie"),
    non("tri(Comm)", "dup(Comm)", "(m,dashv)=(m,dashv); (m,vdash)=(m,vdash); (m,perp)=0", "phi for Comm"),
    non("tri(Ass)", "dup(Ass)", "(m,dashv)=(m,dashv); (m,vdash)=(m,vdash); (m,perp)=0", "phi for Ass"),
    non("Trias", "Dias", "dashv=dashv; vdash=vdash; perp=0", "Trias to Dias, perp to zero"),
    mor("TriLeib", "Trias", "d=dashv-vdashp; br=perp-perpp", "TriLeib to Trias by derived operations"),
    mor("Lie", "Ass", "b=m-mp", "Lie to Ass, commutator"),
    mor("Ass", "Comm", "m=m", "Ass to Comm"),
    mor("Leib", "Lie", "l=b", "Leib to Lie"),
    mor("Leib", "Dias", "l=vdash-dashvp", "Leib to Dias"),
    mor("Dias", "Ass", "dashv=m; vdash=m", "Dias to Ass"),
    mor("Dias", "Perm", "dashv=pp; vdash=p", "Dias to Perm"),
    mor("Perm", "Comm", "p=m", "Perm to Comm"),
    mor("Dias", "Trias", "dashv=dashv; vdash=vdash", "Dias to Trias"),
    mor("dup(Lie)", "tri(Lie)", "(b,dashv)=(b,dashv); (b,vdash)=(b,vdash)", "inclusion for Lie"),
    mor("dup(Comm)", "tri(Comm)", "(m,dashv)=(m,dashv); (m,vdash)=(m,vdash)", "inclusion for Comm"),
    mor("dup(Ass)", "tri(Ass)", "(m,dashv)=(m,dashv); (m,vdash)=(m,vdash)", "inclusion for Ass"),
    mor("Leib", "TriLeib", "l=dp", "Leib to TriLeib"),
    mor("Lie", "PreLie", "b=q-qp", "Lie to PreLie, commutator"),
    mor("PreLie", "Dend", "q=succ-precp", "PreLie to Dend"),
    mor("Ass", "Dend", "m=prec+succ", "Ass to Dend"),
    mor("Comm", "Zinb", "m=zn+znp", "Comm to Zinb"),
    mor("Dend", "Zinb", "prec=zn; succ=znp", "Dend to Zinb"),
    non("nsTrias", "nsDias", "dashv=dashv; vdash=vdash; perp=0", "nonsymmetric Trias to Dias"),
];

/// Outcome of one table row: `Ok(true)` passes, `Ok(false)` is a mathematical failure.
#[derive(Clone, Debug)]
pub struct RowResult {
    pub row: IdentityRow,
    pub outcome: Result<bool>,
    pub detail: String,
}

impl RowResult {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Ok(true))
    }

    /// The outcome agrees with `row.expected`.
    pub fn as_expected(&self) -> bool {
        matches!(self.outcome, Ok(b) if b == self.row.expected)
    }
}

pub fn check_row(catalog: &Catalog, row: &IdentityRow) -> RowResult {
    let mut detail = String::new();
    let outcome = (|| {
        let left = catalog.eval(row.left)?;
        let right = catalog.eval(row.right)?;
        match row.kind {
            RowKind::Equal => {
                let f = map_from_spec(&right, &left, row.map)?;
                let ok = equal_presentations(&right, &left, &f)?;
                if !ok {
                    let image = f.transport(right.closure(), right.mode())?;
                    detail = format!(
                        "transported closure rank {} vs {} rank {}",
                        image.rank(),
                        row.left,
                        left.closure().rank()
                    );
                }
                Ok(ok)
            }
            RowKind::Morphism => {
                let f = map_from_spec(&left, &right, row.map)?;
                let ok = verify_morphism(&left, &right, &f)?;
                if !ok {
                    let image = f.transport(left.closure(), left.mode())?;
                    let missing =
                        image.basis().iter().filter(|v| !right.closure().contains(v).unwrap_or(false)).count();
                    detail = format!("{missing} image vectors fall outside the relations of {}", row.right);
                }
                Ok(ok)
            }
        }
    })();
    RowResult { row: *row, outcome, detail }
}

pub fn run_identity_table(catalog: &Catalog) -> Vec<RowResult> {
    IDENTITY_TABLE.iter().map(|r| check_row(catalog, r)).collect()
}
