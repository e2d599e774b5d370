//! Deterministic 64-bit generator used by the Monte Carlo routines.
//!
//! The sequence is fixed by contract so that simulation results are
//! bit-reproducible across implementations and platforms: the state
//! advances by the additive constant `0x9E3779B97F4A7C15`, and the output
//! is the advanced state passed through the SplitMix64 finalizer
//! (`z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//! z *= 0x94D049BB133111EB; z ^= z >> 31`). Uniform deviates take the top
//! 53 bits: `(z >> 11) * 2^-53`, giving values in `[0, 1)`.
//!
//! Parallel replicate schemes derive replicate `k`'s generator from
//! `seed + k` (wrapping), so results never depend on scheduling.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX1: u64 = 0xBF58_476D_1CE4_E5B9;
const MIX2: u64 = 0x94D0_49BB_1331_11EB;

/// SplitMix64-style deterministic generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Creates a generator whose initial state is exactly `seed`.
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Creates the generator for replicate `k` of a simulation seeded with
    /// `seed`: initial state `seed + k` (wrapping).
    pub fn for_replicate(seed: u64, k: u64) -> Self {
        SplitMix64 {
            state: seed.wrapping_add(k),
        }
    }

    /// Next 64-bit output.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(MIX1);
        z = (z ^ (z >> 27)).wrapping_mul(MIX2);
        z ^ (z >> 31)
    }

    /// Next uniform deviate in `[0, 1)`: the output's top 53 bits scaled
    /// by `2^-53`.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * 2.0_f64.powi(-53)
    }
}
