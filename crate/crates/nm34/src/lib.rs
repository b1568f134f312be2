//! Command-line companion to `nm34_core`: graph file formats, the claim
//! verifier and its reports.

#![forbid(unsafe_code)]

pub mod claims;
pub mod cli;
pub mod formats;
pub mod report;
