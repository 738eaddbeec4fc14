//! File formats, SVG rendering and the command line for `stickkit-core`.

pub mod cli;
pub mod json;
pub mod svg;
