//! Koszul duals, the trisuccessor and the duality checks.

use super::basis::is_s3_stable;
use super::morph::{equal_presentations, GenMap};
use super::replicate::{bisuccessor, duplicator, make_replicated, triplicator, Flavor};
use super::Presentation;
use crate::error::{Error, Result};
use crate::exactlin::{annihilator, Mat};
use crate::scalar::Scalar;
use crate::trees::{GenSpace, Mode};

/// `P!`: generators with involution `−Aᵀ`, relations the annihilator of the closure.
pub fn koszul_dual<F: Scalar>(p: &Presentation<F>) -> Result<Presentation<F>> {
    p.require_symmetric("the Koszul dual")?;
    let gens = p.gens();
    let a = gens.action().expect("symmetric mode has an action");
    let dual_action = a.transpose().scale(&F::one().negated());
    let origin = (0..gens.len()).map(|i| gens.origin(i)).collect();
    let dual_gens = GenSpace::build(gens.names().to_vec(), Mode::Symmetric, Some(dual_action), origin)?;
    let perp = annihilator(p.closure(), &Mat::identity(p.ambient_dim()))?;
    if !is_s3_stable(&dual_gens, &perp)? {
        return Err(Error::UnstableClosure(format!("{}!", p.name())));
    }
    Ok(Presentation::from_closed(format!("{}!", p.name()), dual_gens, perp))
}

/// `TSu(Q) = Tri(Q!)!`, with `(e,⊣), (e,⊢), (e,⊥)` renamed `(e,≺), (e,≻), (e,·)`.
pub fn trisuccessor<F: Scalar>(q: &Presentation<F>) -> Result<Presentation<F>> {
    q.require_symmetric("the trisuccessor")?;
    if q.closure().is_full() {
        return Err(Error::TrisuccessorPrecondition);
    }
    let t = koszul_dual(&triplicator(&koszul_dual(q)?)?)?;
    let tsu = make_replicated(q.gens(), Flavor::Tsu)?;
    let gens = GenSpace::build(
        tsu.names().to_vec(),
        Mode::Symmetric,
        t.gens().action().cloned(),
        (0..tsu.len()).map(|i| tsu.origin(i)).collect(),
    )?;
    Ok(Presentation::from_closed(format!("TSu({})", q.name()), gens, t.closure().clone()))
}

/// Outcome of comparing `Du(P)!` with `BSu(P!)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityReport {
    pub holds: bool,
    pub relations_rank: usize,
    pub lhs_rank: usize,
    pub rhs_rank: usize,
    pub ambient: usize,
    /// Upper bound `9n²` on the rank of `BSu(P!)` when `R = 0`.
    pub bsu_bound: usize,
}

/// Checks `Du(P)! = BSu(P!)` under `(e,⊣)∨ ↦ (e∨,≺)`, `(e,⊢)∨ ↦ (e∨,≻)`.
pub fn duality_check<F: Scalar>(p: &Presentation<F>) -> Result<DualityReport> {
    p.require_symmetric("the duality check")?;
    let lhs = koszul_dual(&duplicator(p)?)?;
    let rhs = bisuccessor(&koszul_dual(p)?)?;
    let n = p.gens().len();
    let holds = equal_presentations(&lhs, &rhs, &GenMap::identity(2 * n))?;
    Ok(DualityReport {
        holds,
        relations_rank: p.closure().rank(),
        lhs_rank: lhs.closure().rank(),
        rhs_rank: rhs.closure().rank(),
        ambient: lhs.ambient_dim(),
        bsu_bound: 9 * n * n,
    })
}

/// Outcome of the triplicator/trisuccessor consistency check.
#[derive(Clone, Debug, PartialEq)]
pub struct TridualityReport {
    /// `Tri(P)! = TSu(P!)` under `(e,⊣)∨ ↦ (e∨,≺)`, `(e,⊢)∨ ↦ (e∨,≻)`, `(e,⊥)∨ ↦ (e∨,·)`.
    pub holds: bool,
    /// Closure of the relations of `Tri(P)!` is S₃-stable.
    pub stable: bool,
    /// `(Tri(P)!)! = Tri(P)`.
    pub involutive: bool,
}

impl TridualityReport {
    pub fn all(&self) -> bool {
        self.holds && self.stable && self.involutive
    }
}

pub fn tridality_check<F: Scalar>(p: &Presentation<F>) -> Result<TridualityReport> {
    p.require_symmetric("the triduality check")?;
    let tri = triplicator(p)?;
    let lhs = koszul_dual(&tri)?;
    let stable = is_s3_stable(lhs.gens(), lhs.closure())?;
    let n3 = tri.gens().len();
    let involutive = equal_presentations(&koszul_dual(&lhs)?, &tri, &GenMap::identity(n3))?;
    let holds = match trisuccessor(&koszul_dual(p)?) {
        Ok(rhs) => equal_presentations(&lhs, &rhs, &GenMap::identity(n3))?,
        Err(Error::TrisuccessorPrecondition) => false,
        Err(e) => return Err(e),
    };
    Ok(TridualityReport { holds, stable, involutive })
}
