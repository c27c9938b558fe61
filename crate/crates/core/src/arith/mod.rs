//! Exact arithmetic: rationals, cyclotomic numbers and truncated series.

pub mod cyclo;
pub mod rat;
pub mod series;
