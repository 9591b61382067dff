//! Two independent prime-counting backends: a streaming segmented sieve and
//! a Legendre φ(x, a) counter for isolated points.

mod legendre;
mod sieve;
mod stream;

pub(crate) use legendre::count_up_to;
pub use legendre::{phi, pi_point, pi_point_with, LegendreContext, DEFAULT_MEMO_CUTOFF};
pub use sieve::{
    sieve_segment, BasePrimes, SegmentPrimes, SieveConfig, SieveSegment, DEFAULT_SEGMENT_BITS,
};
pub use stream::{pi_stream, pi_stream_with, PiCheckpoint, PiStream};
