//! Combinatorial machinery for braided surfaces and fibered links: braid
//! words in Artin and band generators, exact HOMFLY-PT polynomials of braid
//! closures with canonical-genus lower bounds, mergers and braided Stallings
//! plumbing on band words, torus-grid diagrams of braided open books, and a
//! Seifert-algorithm pipeline that produces arc-presentation data.

pub mod braid;
pub mod cli;
pub mod homfly;
pub mod perm;
pub mod plumb;
pub mod poly;
pub mod rampichini;
pub mod seifert;

pub use braid::{ArtinWord, BklWord, BandLetter};
pub use perm::Permutation;
pub use plumb::Merger;
pub use poly::LaurentPoly2;
pub use rampichini::RampichiniDiagram;
pub use seifert::PlanarDiagram;
