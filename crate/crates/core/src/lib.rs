//! Crossings and nestings of set partitions and matchings, via walks on
//! Young's lattice.

pub mod setpart;
pub mod walks;
pub mod young;
pub mod stats;
pub mod paths;
pub mod counting;
pub mod verify;
