//! The affine matrix-ball construction.

pub mod channels;
pub mod stats;
pub mod steps;
pub mod triple;

pub use channels::{
    canonical_channels, channel_distance, channel_distance_at, channel_numbering, channel_numbering_raw,
    channel_sw_leq, find_channels, greene_kleitman_brute, is_stream, northeast_channel, river_of, rivers, shi_less,
    southwest_channel, width, ChannelSequence, Numbering, Stream,
};
pub use stats::{delta_vector, is_dominant, local_charge, omega_tabloid, reduced_weight, symmetrized_offset};
pub use steps::{
    backward_numbering, backward_numbering_with, bk, bk_with, check_compatible, forward_step, forward_step_with,
    stream_from, ScanOrder,
};
pub use triple::{forward_streams, phi, psi, psi_with, triple_stream, AmbcTriple};

use crate::tabloid::Partition;
use crate::window::Window;

/// Greene–Kleitman partition of the Shi poset. Total windows read it off
/// the shape of `Φ(w)`; partial windows fall back to exhaustive search.
pub fn greene_kleitman(w: &Window) -> Partition {
    match phi(w) {
        Ok(t) => t.shape(),
        Err(_) => greene_kleitman_brute(w),
    }
}
