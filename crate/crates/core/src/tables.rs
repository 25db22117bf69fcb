//! Transcribed reference data: the four fundamental essential-signature
//! tables and the enumerated inequality list for the cone Σ^f_ℚ.
//!
//! These are literal data. The computed counterparts live in
//! [`crate::signatures`] and [`crate::cone`] and are compared against them.

/// One inequality Σ_j a_j p_j ≤ Σ_i b_i k_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub a: [u32; 12],
    pub b: [u32; 4],
}

const fn ineq(a: [u32; 12], b: [u32; 4]) -> Inequality {
    Inequality { a, b }
}

/// Essential signatures of highest weight ω_1, in table order.
#[rustfmt::skip]
pub const OMEGA1_TABLE: [[u32; 12]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Essential signatures of highest weight ω_2, in table order.
#[rustfmt::skip]
pub const OMEGA2_TABLE: [[u32; 12]; 28] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

/// Essential signatures of highest weight ω_3, in table order.
#[rustfmt::skip]
pub const OMEGA3_TABLE: [[u32; 12]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
];

/// Essential signatures of highest weight ω_4, in table order.
#[rustfmt::skip]
pub const OMEGA4_TABLE: [[u32; 12]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
];

/// Fundamental table for ω_i, `i` in 1..=4.
pub fn fundamental_table(i: usize) -> &'static [[u32; 12]] {
    match i {
        1 => &OMEGA1_TABLE,
        2 => &OMEGA2_TABLE,
        3 => &OMEGA3_TABLE,
        4 => &OMEGA4_TABLE,
        _ => panic!("no fundamental weight ω{i}"),
    }
}

/// The enumerated cone inequalities, item 1 first.
#[rustfmt::skip]
pub const CONE_INEQUALITIES: [Inequality; 70] = [
    /*  1 */ ineq([0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1], [1, 0, 0, 0]),
    /*  2 */ ineq([0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0], [0, 1, 0, 0]),
    /*  3 */ ineq([0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0], [0, 0, 1, 0]),
    /*  4 */ ineq([0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 1]),
    /*  5 */ ineq([0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1], [1, 1, 0, 0]),
    /*  6 */ ineq([0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1], [1, 1, 1, 0]),
    /*  7 */ ineq([0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1], [1, 1, 1, 0]),
    /*  8 */ ineq([0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0], [0, 1, 1, 0]),
    /*  9 */ ineq([0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1], [1, 1, 0, 1]),
    /* 10 */ ineq([0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1], [1, 1, 0, 1]),
    /* 11 */ ineq([0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0], [0, 1, 0, 1]),
    /* 12 */ ineq([0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0], [0, 1, 1, 1]),
    /* 13 */ ineq([0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0], [0, 1, 1, 1]),
    /* 14 */ ineq([0, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1], [1, 1, 1, 1]),
    /* 15 */ ineq([0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1], [1, 1, 1, 1]),
    /* 16 */ ineq([0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1], [1, 1, 1, 1]),
    /* 17 */ ineq([0, 1, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1], [1, 1, 1, 1]),
    /* 18 */ ineq([0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1], [1, 1, 1, 1]),
    /* 19 */ ineq([0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1], [1, 1, 1, 1]),
    /* 20 */ ineq([1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0], [1, 2, 1, 1]),
    /* 21 */ ineq([1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0], [1, 2, 1, 1]),
    /* 22 */ ineq([0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1], [1, 2, 1, 1]),
    /* 23 */ ineq([0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1], [1, 2, 1, 1]),
    /* 24 */ ineq([1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0], [1, 2, 1, 1]),
    /* 25 */ ineq([0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1], [1, 2, 1, 1]),
    /* 26 */ ineq([1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0], [1, 2, 1, 1]),
    /* 27 */ ineq([0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1], [1, 2, 1, 1]),
    /* 28 */ ineq([0, 1, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1], [1, 2, 2, 1]),
    /* 29 */ ineq([0, 0, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1], [1, 2, 2, 1]),
    /* 30 */ ineq([1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 1, 0], [1, 2, 2, 1]),
    /* 31 */ ineq([1, 0, 1, 1, 1, 1, 1, 1, 2, 1, 1, 0], [1, 2, 2, 1]),
    /* 32 */ ineq([0, 1, 0, 1, 1, 0, 1, 1, 2, 2, 1, 1], [1, 2, 2, 1]),
    /* 33 */ ineq([0, 1, 1, 2, 1, 1, 1, 1, 1, 0, 1, 1], [1, 2, 1, 2]),
    /* 34 */ ineq([0, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 1], [1, 2, 1, 2]),
    /* 35 */ ineq([1, 1, 1, 2, 1, 1, 1, 1, 1, 0, 1, 0], [1, 2, 1, 2]),
    /* 36 */ ineq([1, 1, 0, 2, 1, 1, 1, 1, 1, 1, 1, 0], [1, 2, 1, 2]),
    /* 37 */ ineq([0, 1, 1, 2, 2, 1, 1, 0, 1, 0, 1, 1], [1, 2, 1, 2]),
    /* 38 */ ineq([0, 1, 0, 2, 2, 1, 1, 0, 1, 1, 1, 1], [1, 2, 1, 2]),
    /* 39 */ ineq([0, 0, 1, 1, 1, 1, 2, 1, 1, 0, 1, 2], [2, 2, 1, 1]),
    /* 40 */ ineq([0, 0, 0, 1, 1, 1, 2, 1, 1, 1, 1, 2], [2, 2, 1, 1]),
    /* 41 */ ineq([0, 1, 1, 1, 1, 0, 2, 1, 1, 0, 1, 2], [2, 2, 1, 1]),
    /* 42 */ ineq([0, 1, 0, 1, 1, 0, 2, 1, 1, 1, 1, 2], [2, 2, 1, 1]),
    /* 43 */ ineq([1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 0], [1, 2, 2, 2]),
    /* 44 */ ineq([0, 1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1], [1, 2, 2, 2]),
    /* 45 */ ineq([0, 1, 1, 2, 2, 1, 1, 0, 2, 1, 1, 1], [1, 2, 2, 2]),
    /* 46 */ ineq([0, 1, 1, 2, 1, 1, 2, 1, 1, 0, 1, 2], [2, 2, 1, 2]),
    /* 47 */ ineq([0, 1, 0, 2, 1, 1, 2, 1, 1, 1, 1, 2], [2, 2, 1, 2]),
    /* 48 */ ineq([0, 1, 1, 2, 2, 1, 2, 0, 1, 0, 1, 2], [2, 2, 1, 2]),
    /* 49 */ ineq([0, 1, 0, 2, 2, 1, 2, 0, 1, 1, 1, 2], [2, 2, 1, 2]),
    /* 50 */ ineq([0, 1, 1, 1, 1, 0, 2, 1, 2, 1, 1, 2], [2, 2, 2, 1]),
    /* 51 */ ineq([0, 0, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2], [2, 2, 2, 1]),
    /* 52 */ ineq([0, 1, 0, 1, 1, 0, 2, 1, 2, 2, 1, 2], [2, 2, 2, 1]),
    /* 53 */ ineq([0, 1, 1, 2, 1, 1, 2, 1, 2, 1, 1, 2], [2, 2, 2, 2]),
    /* 54 */ ineq([0, 1, 1, 2, 2, 1, 2, 0, 2, 1, 1, 2], [2, 2, 2, 2]),
    /* 55 */ ineq([0, 1, 1, 2, 2, 1, 1, 1, 1, 0, 2, 1], [1, 3, 1, 2]),
    /* 56 */ ineq([0, 1, 0, 2, 2, 1, 1, 1, 1, 1, 2, 1], [1, 3, 1, 2]),
    /* 57 */ ineq([1, 1, 1, 2, 2, 1, 1, 1, 1, 0, 2, 0], [1, 3, 1, 2]),
    /* 58 */ ineq([1, 1, 0, 2, 2, 1, 1, 1, 1, 1, 2, 0], [1, 3, 1, 2]),
    /* 59 */ ineq([1, 1, 0, 2, 2, 1, 1, 1, 2, 2, 2, 0], [1, 3, 2, 2]),
    /* 60 */ ineq([0, 1, 0, 2, 2, 1, 1, 1, 2, 2, 2, 1], [1, 3, 2, 2]),
    /* 61 */ ineq([1, 1, 0, 2, 2, 1, 2, 1, 1, 1, 2, 1], [2, 3, 1, 2]),
    /* 62 */ ineq([1, 1, 1, 2, 2, 1, 2, 1, 1, 0, 2, 1], [2, 3, 1, 2]),
    /* 63 */ ineq([1, 1, 0, 2, 2, 1, 2, 1, 2, 2, 2, 1], [2, 3, 2, 2]),
    /* 64 */ ineq([0, 1, 1, 2, 2, 1, 1, 1, 3, 2, 2, 1], [1, 3, 3, 2]),
    /* 65 */ ineq([1, 1, 1, 2, 2, 1, 1, 1, 3, 2, 2, 0], [1, 3, 3, 2]),
    /* 66 */ ineq([0, 1, 1, 2, 2, 1, 3, 1, 1, 0, 2, 3], [3, 3, 1, 2]),
    /* 67 */ ineq([0, 1, 0, 2, 2, 1, 3, 1, 1, 1, 2, 3], [3, 3, 1, 2]),
    /* 68 */ ineq([0, 1, 1, 2, 2, 1, 3, 1, 3, 2, 2, 3], [3, 3, 3, 2]),
    /* 69 */ ineq([1, 1, 1, 2, 2, 1, 2, 1, 3, 2, 2, 1], [2, 3, 3, 2]),
    /* 70 */ ineq([0, 1, 0, 2, 2, 1, 3, 1, 2, 2, 2, 3], [3, 3, 2, 2]),
];
