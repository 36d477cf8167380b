//! Deterministic pseudo-randomness for the graph generators.
//!
//! Seeds must mean the same graph on every platform and in every
//! implementation, so the generators use a fixed, documented algorithm
//! instead of a language-default RNG: the splitmix64 state advance.
//! Each step adds the constant `0x9E3779B97F4A7C15` to the state, then
//! mixes the state with two xor-shift-multiply rounds using
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` and a final `z ^ (z >> 31)`.

/// Seed for a deterministic generator run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSeed(pub u64);

impl From<u64> for GeneratorSeed {
    fn from(seed: u64) -> Self {
        GeneratorSeed(seed)
    }
}

/// splitmix64 generator, 64 bits per step.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: GeneratorSeed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejection sampling, so the
    /// distribution is exact rather than modulo-biased. `bound` must be
    /// nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // Reject draws below 2^64 mod bound; what remains is a whole
        // number of congruence classes.
        let cutoff = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= cutoff {
                return r % bound;
            }
        }
    }
}
