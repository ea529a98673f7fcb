//! Exact computations for two-parameter quantum groups `U_{v,t}`: the free
//! algebra and its bilinear forms, the Drinfeld pairing, quasi-R-matrices,
//! finite weight modules, and the resulting invariants of oriented tangles.

pub mod cartan;
pub mod config;
pub mod freealg;
pub mod lincomb;
pub mod matrix;
pub mod modules;
pub mod pairing;
pub mod quasir;
pub mod ratfield;
pub mod tangle;
pub mod verify;
