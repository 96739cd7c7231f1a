//! Seeded deterministic random numbers for the verification harnesses.
//!
//! All randomized checks in this crate take an explicit seed; there is no
//! wall-clock entropy anywhere. SplitMix64 is enough for sampling small
//! integer tensors.

/// SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (`bound > 0`); bias is irrelevant at our sizes.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Tensor entry in `-3..=3`: small enough that degree-(n-1) products
    /// cannot overflow `i64`, large enough to exercise cancellation.
    pub fn small_int(&mut self) -> i64 {
        (self.below(7) as i64) - 3
    }
}
