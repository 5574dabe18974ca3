//! Published reference values the computations are checked against.

/// Robbins numbers A_0 .. A_11 (OEIS A005130).
pub const ROBBINS: [u64; 12] = [1, 1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460, 129534272700, 31095744852375];

/// 20-vertex model numbers B_1 .. B_9 (OEIS A358069).
pub const TWENTY_VERTEX: [u64; 9] = [1, 3, 23, 433, 19705, 2151843, 561696335, 349667866305, 518369549769169];

/// Leading principal minors of the symmetrized R_r, one row per r = 0..5.
pub const R_FAMILY_MINORS: [[u64; 6]; 6] = [
    [1, 1, 1, 1, 1, 1],
    [1, 2, 7, 42, 429, 7436],
    [1, 3, 23, 433, 19705, 2151843],
    [1, 4, 55, 2494, 365953, 171944344],
    [1, 5, 109, 9993, 3791001, 5898286349],
    [1, 6, 191, 31306, 26094301, 109913708076],
];

/// Minors of the symmetrization of ((1-2x)(1-rx+rx^2), x(1-x)) for r = 0.
pub const INVERSE_FAMILY_MINORS_R0: [i64; 9] = [1, -3, -13, 81, 144, -2017, -1757, 79513, 22704];

/// Same for r = 1.
pub const INVERSE_FAMILY_MINORS_R1: [i64; 9] = [1, -4, -33, 427, 5046, -56241, -316626, 7178034, 26671624];

/// Minors of the symmetrization of the second family at r = 2.
pub const TILDE_R2_MINORS: [u64; 6] = [1, 4, 55, 2494, 365953, 171944344];
