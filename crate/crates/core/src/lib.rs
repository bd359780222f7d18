//! Exact-arithmetic library for the two-parameter quantum superalgebra
//! U_qs(sl(1|2)): Laurent-polynomial ring, graded linear algebra, both Hopf
//! structures, the FRT layer, three Casimir families, and the deformed t-J
//! chain Hamiltonians they generate.

pub mod algebra;
pub mod casimir;
pub mod chain;
pub mod frt;
pub mod glinalg;
pub mod report;
pub mod ring;
