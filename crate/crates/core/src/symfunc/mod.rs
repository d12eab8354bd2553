//! Symmetric functions: Schur expansions, determinantal formulas, characters.

mod character;
mod hg;
mod jt;
mod kostka;
mod lr;
mod maps;
mod principal;
mod ring;
mod vector;

pub use character::{character, character_vector, frobenius_rank, z_nu};
pub use hg::{hamel_goulden, hamel_goulden_matrix};
pub use jt::{dual_jacobi_trudi, e_in_h, h_to_schur, jacobi_trudi, omega_h, omega_schur, schur_to_h, straight_in_h};
pub use kostka::{kostka_expand, kostka_number, schur_to_monomial};
pub use lr::{pictures, pieri, schur_expand_lr, schur_multiply, Picture};
pub use maps::{circ_map, circ_omega_map, h_coeff, phi_ell};
pub use principal::{principal_eval, PrincipalPolynomial};
pub use ring::{determinant, Ring};
pub use vector::{CharacterVector, HPolynomial, MonomialVector, SchurVector};
