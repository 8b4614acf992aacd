//! Truncated completed preprojective algebras and their modules: the
//! tilting ideals `I_w`, the quotient modules `Λ_k = Λ/T_k` and their
//! summands, Hom and Ext¹, Gabriel quivers of endomorphism algebras,
//! summand exchange, syzygies, and flag counting over finite fields.

pub mod algebra;
pub mod endquiver;
pub mod exchange;
pub mod ext;
pub mod flags;
pub mod hom;
pub mod ideal;
pub mod module;

pub use algebra::{DArrow, DoubledQuiver, GradedAlgebra, PathElem};
pub use endquiver::{end_quiver, mark_frozen, standard_family, StandardFamily};
pub use exchange::{exchange_summand, syzygy, Exchange, ShortExactSequence};
pub use ext::{cover_over, ext1, ext1_by_form, projective_cover, Cover};
pub use flags::{count_flags, flag_euler, DEFAULT_PRIMES};
pub use hom::{hom, indecomposable, is_isomorphic_indecomposable, radical_of_end, HomSpace};
pub use ideal::{
    hom_formula, ideal_for_word, ideal_i, ideal_product, ideal_times_i, GradedIdeal, HomFormula,
};
pub use module::{
    quotient_module, quotient_module_with_paths, ArrowMatrixJson, ModuleJson, ModuleMap, ModuleRep,
};

use crate::coxeter::{CoxeterError, Word};

/// Errors raised by the preprojective-algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PreprojError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u32),
    #[error("truncation too small: need N >= {needed}, have {have}")]
    TruncationTooSmall { needed: usize, have: usize },
    #[error("word {0} is not reduced")]
    NotReduced(Word),
    #[error("summand {0} is decomposable")]
    DecomposableSummand(usize),
    #[error("family is not cluster tilting: {0}")]
    NotClusterTilting(String),
    #[error("no exchange: {0}")]
    NoExchange(String),
    #[error("point counts do not fit one polynomial: {0}")]
    InterpolationInconsistent(String),
    #[error("module entries are not integral at p = {0}")]
    NotIntegral(u64),
    #[error("modules live over different quivers")]
    QuiverMismatch,
    #[error("malformed module: {0}")]
    Malformed(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}
