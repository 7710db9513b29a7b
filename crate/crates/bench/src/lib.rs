//! Fixtures shared by the benchmarks.

use instanton_core::families::sample_instanton;
use instanton_core::{Fp, OmegaTensor};

pub fn field() -> Fp {
    Fp::default_field()
}

/// A fixed member of M(n, r), sampled once per benchmark.
pub fn member(n: usize, r: usize) -> OmegaTensor<Fp> {
    sample_instanton(&field(), n, r, 0).expect("reachable (n, r)")
}
