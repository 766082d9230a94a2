//! Group actions on chords of the twelve-tone scale.
//!
//! Chords are pitch-class sets rooted at 0 ([`Chord`]). Three operators act on
//! them: inversion `i`, major-minor duality `d`, and, on four-tone chords,
//! augmented-diminished duality `a` (see [`transform`]). Their orbits classify
//! the harmonic triads and seventh chords ([`classify`]), and the seventh
//! chords with their operator edges form a small graph ([`graph`]).
//!
//! ```
//! use chordgroup::{classify::classify, transform::dual, Chord};
//!
//! let major: Chord = "0,4,7".parse().unwrap();
//! assert_eq!(dual(&major).to_string(), "0,5,8");
//! assert_eq!(classify(&major).unwrap().to_string(), "Major0");
//! ```

pub mod chord;
pub mod classify;
pub mod cli;
mod error;
pub mod graph;
pub mod transform;
pub mod verify;

pub use chord::{Chord, Composition, Partition, PitchClass};
pub use classify::{ChordLabel, Classification, Family, SeventhFamily, TriadFamily};
pub use error::{Error, Result};
pub use graph::{ChordGraph, ComponentMap};
pub use transform::{OperatorSymbol, OperatorWord};
