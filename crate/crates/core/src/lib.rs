//! Multichannel FIR control-filter design for loudspeaker-array sound field
//! reproduction in reverberant enclosures.
//!
//! The crate covers the full design/evaluation chain: a shoebox image-source
//! simulator producing synthetic acoustic channels, delay-and-sum spatial
//! power maps, a composite time/frequency/spatial objective with exact
//! gradients, three filter-design solvers (frequency deconvolution, proximal
//! convex shaping, and deep optimization through a reparameterizing network),
//! and the objective evaluation metrics (nPRQ, octave-band spectral
//! deviation, stacked spatial power maps).

pub mod beam;
pub mod error;
pub mod io;
pub mod metrics;
pub mod objective;
pub mod optimize;
pub mod room;
pub mod signal;

pub use error::{Result, SfrError};
pub use signal::{BandMask, ConvolutionMatrix, Fir, Spectrum};
