#![allow(dead_code)]

pub mod cyclotomic;
pub mod diagrams;
pub mod grids;
