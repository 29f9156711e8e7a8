//! Sound-source localization with a phased microphone array.
//!
//! The crate covers three ways of recovering a source-power map from the
//! cross-spectral matrix (CSM) of a planar microphone array:
//!
//! * conventional delay-and-sum beamforming ([`beamform`]),
//! * DAMAS deconvolution of the beamformer map ([`damas`]),
//! * a small convolutional network trained on synthesized CSMs ([`nn`] +
//!   [`datagen`]).
//!
//! [`geometry`] holds the array / scan-grid setup and steering vectors,
//! [`csm`] builds cross-spectral matrices from time data or synthesizes them
//! from point sources. Everything is plain CPU code; the heavy loops
//! parallelize with rayon and stay bitwise reproducible at any thread count.

pub mod beamform;
pub mod csm;
pub mod damas;
pub mod datagen;
mod error;
pub mod geometry;
pub mod nn;

pub use error::{Error, Result};
