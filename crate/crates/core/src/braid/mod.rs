//! Surface braid words with weighted marked points, their permutation and
//! Abel–Jacobi images, and factorization of kernel words.

mod certify;
mod factorize;
mod lattice;
mod word;

pub use certify::{
    certify_i_commutator, certify_null_rho, certify_square_transposition, certify_transposition,
    null_rho_direction, FactorCertificate, FactorTag,
};
pub use factorize::{
    factor_by_permutation, factorize_kernel_word, permutation_part, CommutatorSwap, Factorization, PeelStage,
};
pub use lattice::{minimal_d, MinimalRelation};
pub use word::{free_reduce_letters, BraidWord, Generator, HomologyVector, Letter, MarkedSurface, Permutation};
