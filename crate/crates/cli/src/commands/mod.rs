pub mod analyze;
pub mod closed;
pub mod compare;
pub mod figure;
pub mod simulate;
pub mod symmetry;
