//! The seeded generator behind every random instance.
//!
//! The algorithm is fixed so that instances, hunts and witnesses reproduce
//! bit-for-bit in any implementation:
//!
//! * state: one `u64`, initialised to the seed;
//! * step: `state += 0x9E3779B97F4A7C15` (wrapping), then
//!   `z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;`
//!   `z = (z ^ (z >> 27)) * 0x94D049BB133111EB; output z ^ (z >> 31)`
//!   (wrapping multiplications; this is SplitMix64);
//! * `below(m)` for `m >= 1`: let `limit = 2^64 - 1 - ((2^64 - 1) mod m)`; draw
//!   outputs until one is `< limit`, return it `mod m`.
//!
//! Each consumer documents the exact order in which it calls `below`.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `0..m`.
    pub fn below(&mut self, m: usize) -> usize {
        assert!(m > 0, "below(0)");
        let m = m as u64;
        let limit = u64::MAX - u64::MAX % m;
        loop {
            let x = self.next_u64();
            if x < limit {
                return (x % m) as usize;
            }
        }
    }

    /// Fisher-Yates from the back: for `i = len-1 .. 1`, swap `i` with `below(i+1)`.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}
