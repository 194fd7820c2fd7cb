//! Library side of the `quadrics` command-line tool.
//!
//! The binary itself only parses flags and renders output; everything with
//! testable behavior lives here: the bundle-spec file parser, the report
//! document with its canonical JSON form, and the exhaustive property sweep.

pub mod bundlefile;
pub mod document;
pub mod sweep;
