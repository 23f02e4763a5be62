//! Fixtures shared by the benchmarks in `benches/`.

use unproj_core::{build_scroll, parse_polynomial, Polynomial, ScrollData};

/// Scrolls timed by the benchmarks.
pub const CELLS: [(usize, usize); 4] = [(1, 2), (2, 2), (2, 3), (3, 3)];

pub fn scroll(m: usize, n: usize) -> ScrollData {
    build_scroll(m, n).expect("valid scroll")
}

/// `x1n^k + x00·x1n^(k-1)`, which needs the normalization step.
pub fn test_f(s: &ScrollData, k: u32) -> Polynomial {
    let text = format!("x1{n}^{k} + x00*x1{n}^{}", k - 1, n = s.n());
    parse_polynomial(s.ring(), &text).expect("valid polynomial")
}
