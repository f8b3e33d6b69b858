//! Frobenius-Perron invariants of nonnegative matrices, quivers, bound
//! quiver algebras and their module categories, computed with exact
//! rational arithmetic wherever the answer is an integer fact.

#![no_std]

extern crate alloc;

pub mod digraph;
pub mod exactlin;
pub mod spectral;
pub mod quiver;
pub mod algebra;
pub mod repmod;
pub mod fixtures;
pub mod fpcore;
pub mod tables;
