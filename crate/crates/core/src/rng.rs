//! Counter-based random streams.
//!
//! Every stochastic routine takes a `u64` master seed. Independent
//! substreams are addressed by a tag and up to two indices (for example
//! replication and bootstrap index), so work can be split across threads
//! without changing any draw.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

pub(crate) const TAG_LP_SAMPLE: u64 = 0x6c70_7361;
pub(crate) const TAG_DIST_SAMPLE: u64 = 0x6469_7374;
pub(crate) const TAG_DIRECTIONS: u64 = 0x6469_7273;
pub(crate) const TAG_REFINE: u64 = 0x7265_666e;
pub(crate) const TAG_SIGNS: u64 = 0x7369_676e;
pub(crate) const TAG_STUDY_DATA: u64 = 0x7374_6461;
pub(crate) const TAG_STUDY_TEST: u64 = 0x7374_7473;
pub(crate) const TAG_ALPHA: u64 = 0x616c_7068;
pub(crate) const TAG_SEQUENCE: u64 = 0x7365_7173;
pub(crate) const TAG_BALL: u64 = 0x6261_6c6c;

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a child seed from `(seed, tag, index)`.
pub fn derive_seed(seed: u64, tag: u64, index: u64) -> u64 {
    mix64(mix64(seed ^ mix64(tag)) ^ index)
}

/// The `index`-th ChaCha stream under key `(seed, tag)`.
pub fn stream(seed: u64, tag: u64, index: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(mix64(seed ^ mix64(tag)));
    rng.set_stream(index);
    rng
}

/// Two-level addressing: `(seed, tag, outer)` selects the key, `inner` the stream.
pub fn substream(seed: u64, tag: u64, outer: u64, inner: u64) -> StreamRng {
    stream(derive_seed(seed, tag, outer), tag, inner)
}
