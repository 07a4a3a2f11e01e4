//! Library half of the `gegenlab` command. It holds the polynomial JSON
//! format and the on-disk cache, plus the verification suites that check
//! the bundled appendix data.

pub mod cache;
pub mod golden;
pub mod json;
pub mod verify;
