//! Binary quadratic presentations and the constructions on them.

mod basis;
mod dual;
mod morph;
mod replicate;

pub use basis::{
    closure, is_s3_stable, normalize_weight3, s3_act, s3_matrix, sum_to_vector, vector_to_sum, Perm, Slot, Weight3Basis,
};
pub use dual::{duality_check, koszul_dual, tridality_check, trisuccessor, DualityReport, TridualityReport};
pub use morph::{equal_presentations, verify_morphism, GenMap};
pub use replicate::{bisuccessor, duplicator, make_replicated, triplicator, Flavor};

use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::scalar::Scalar;
use crate::trees::{GenSpace, Mode};

/// Generators, relation vectors and the cached closure of the relations.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<F> {
    name: String,
    gens: GenSpace<F>,
    relations: Vec<Vec<F>>,
    closure: Subspace<F>,
}

impl<F: Scalar> Presentation<F> {
    pub fn new(name: impl Into<String>, gens: GenSpace<F>, relations: Vec<Vec<F>>) -> Result<Self> {
        let closure = closure(&gens, &relations)?;
        Ok(Presentation { name: name.into(), gens, relations, closure })
    }

    /// Presentation whose relations are the RREF basis of an already closed subspace.
    pub(crate) fn from_closed(name: impl Into<String>, gens: GenSpace<F>, closure: Subspace<F>) -> Self {
        Presentation { name: name.into(), gens, relations: closure.basis().to_vec(), closure }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn gens(&self) -> &GenSpace<F> {
        &self.gens
    }

    pub fn mode(&self) -> Mode {
        self.gens.mode()
    }

    pub fn relations(&self) -> &[Vec<F>] {
        &self.relations
    }

    pub fn closure(&self) -> &Subspace<F> {
        &self.closure
    }

    pub fn basis(&self) -> Weight3Basis {
        Weight3Basis::of(&self.gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis().dim()
    }

    /// Same relations over renamed generators.
    pub fn rename_generators(&self, names: Vec<String>) -> Result<Self> {
        Ok(Presentation { gens: self.gens.with_names(names)?, ..self.clone() })
    }

    /// Relations reduced to the RREF basis of the closure.
    pub fn reduced(&self) -> Self {
        Self::from_closed(self.name.clone(), self.gens.clone(), self.closure.clone())
    }

    pub(crate) fn require_symmetric(&self, what: &'static str) -> Result<()> {
        if self.mode() == Mode::Nonsymmetric {
            return Err(Error::NonsymmetricUnsupported(what));
        }
        Ok(())
    }
}
