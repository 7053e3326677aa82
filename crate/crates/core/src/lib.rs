//! Construction, classification and recognition of nilpotent Lie algebras of
//! dimension at most six over the rationals and prime fields of odd
//! characteristic.

pub mod field;
pub mod linalg;
pub mod liealg;
pub mod cohomology;
pub mod catalog;
pub mod oracle;
pub mod recognize;
