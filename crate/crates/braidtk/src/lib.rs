//! Combinatorics of positive braids: brick diagrams, linking graphs,
//! Seifert forms, curve configurations on fibre surfaces, ordered Morse
//! divides, and a search for assemblage certificates.

pub mod braid;
pub mod linking;
pub mod forms;
pub mod divide;
pub mod surface;
pub mod certifier;
pub mod cli;
