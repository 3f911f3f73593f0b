//! Exact-arithmetic toolkit for root systems, Weyl-group combinatorics and
//! spherical Tits systems (BN-pairs) in explicit finite groups.

pub mod error;
pub mod rootsys;
pub mod weyl;
pub mod cosets;
pub mod fingrp;
pub mod titssys;

pub use error::{Error, Result};
