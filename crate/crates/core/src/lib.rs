//! Fano pentads of the three-qubit symplectic polar space W(5,2).
//!
//! The 63 non-identity three-qubit Pauli observables are the points of
//! W(5,2); commuting pairs span its 315 isotropic lines and maximal commuting
//! sets its 135 Fano planes. This crate enumerates all 12,096 Fano pentads,
//! derives from each its Mermin pentagram and its `10_6 15_2 − 30_3`
//! configuration, checks both as Kochen–Specker parity proofs, and classifies
//! the configurations into 47 types.
//!
//! ```
//! use fano_pentad::{analyze, ContextSet, Verdict};
//!
//! let pentagram = ContextSet::from_words(&[
//!     vec!["XII", "IYI", "IIY", "XYY"],
//!     vec!["YII", "IXI", "IIY", "YXY"],
//!     vec!["YII", "IYI", "IIX", "YYX"],
//!     vec!["XII", "IXI", "IIX", "XXX"],
//!     vec!["XYY", "YXY", "YYX", "XXX"],
//! ])
//! .unwrap();
//! let report = analyze(&pentagram);
//! assert_eq!(report.verdict, Verdict::ValidParityProof);
//! assert_eq!(report.negative_count, 1);
//! ```

pub mod cli;
pub mod contextuality;
pub mod dense;
pub mod geometry;
pub mod io;
pub mod pauli;
pub mod pentads;
pub mod pointset;
pub mod taxonomy;

pub use contextuality::{analyze, wa_symbol, ContextSet, ProofReport, Verdict, WaSymbol};
pub use geometry::{Geometry, Line, LineId, Plane, PlaneClass, PlaneId};
pub use io::Pipeline;
pub use pauli::{
    commutes, context_sign, format_observable, multiply, parse_observable, symplectic_form, Observable, ObservableType,
    PauliLetter, Phase, Sign,
};
pub use pentads::{
    enumerate_pentads, par_enumerate_pentads, pentad_to_config, pentad_to_pentagram, pentagram_to_pentad,
    ContextualConfig, Pentad, Pentagram,
};
pub use pointset::PointSet;
pub use taxonomy::{
    classify_census, compare_with_table1, config_signature, structural_laws, table1_fixture, Census, ConfigSignature,
    ParameterTuple, PentagramSignature,
};
