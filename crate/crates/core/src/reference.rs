//! Published sequences and parameter lists used as golden data.

/// Associated sequences of `x_1`, `x_2` and `x_1 x_2 + 1` over `Z_3`, `m = 2`.
pub const EBF_EXAMPLE: [[u32; 9]; 3] = [
    [0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 0, 0, 1, 1, 1, 2, 2, 2],
    [1, 1, 1, 1, 2, 0, 1, 0, 2],
];

/// The printed quinary `(5, 25)`-CSS, rows in printed order.
pub const QUINARY_CSS: [[u32; 25]; 5] = [
    [0, 4, 3, 3, 0, 1, 1, 1, 2, 0, 3, 4, 0, 2, 1, 4, 1, 3, 1, 1, 2, 0, 3, 2, 3],
    [0, 4, 3, 3, 0, 2, 2, 2, 3, 1, 0, 1, 2, 4, 3, 2, 4, 1, 4, 4, 1, 4, 2, 1, 2],
    [0, 4, 3, 3, 0, 3, 3, 3, 4, 2, 2, 3, 4, 1, 0, 0, 2, 4, 2, 2, 0, 3, 1, 0, 1],
    [0, 4, 3, 3, 0, 4, 4, 4, 0, 3, 4, 0, 1, 3, 2, 3, 0, 2, 0, 0, 4, 2, 0, 4, 0],
    [0, 4, 3, 3, 0, 0, 0, 0, 1, 4, 1, 2, 3, 0, 4, 1, 3, 0, 3, 3, 3, 1, 4, 3, 4],
];

/// The printed ternary `(9, 3, 27, 9)`-ZCCS.
pub const TERNARY_ZCCS: [[[u32; 27]; 3]; 9] = [
    [
        [0, 1, 2, 0, 0, 0, 2, 1, 0, 0, 1, 2, 0, 0, 0, 2, 1, 0, 1, 2, 0, 1, 1, 1, 0, 2, 1],
        [0, 2, 1, 0, 1, 2, 2, 2, 2, 0, 2, 1, 0, 1, 2, 2, 2, 2, 1, 0, 2, 1, 2, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 1, 2, 0, 1, 0, 0, 0, 0, 2, 1, 2, 0, 1, 1, 1, 1, 1, 0, 2, 0, 1, 2],
    ],
    [
        [0, 1, 2, 1, 1, 1, 1, 0, 2, 0, 1, 2, 1, 1, 1, 1, 0, 2, 1, 2, 0, 2, 2, 2, 2, 1, 0],
        [0, 2, 1, 1, 2, 0, 1, 1, 1, 0, 2, 1, 1, 2, 0, 1, 1, 1, 1, 0, 2, 2, 0, 1, 2, 2, 2],
        [0, 0, 0, 1, 0, 2, 1, 2, 0, 0, 0, 0, 1, 0, 2, 1, 2, 0, 1, 1, 1, 2, 1, 0, 2, 0, 1],
    ],
    [
        [0, 1, 2, 2, 2, 2, 0, 2, 1, 0, 1, 2, 2, 2, 2, 0, 2, 1, 1, 2, 0, 0, 0, 0, 1, 0, 2],
        [0, 2, 1, 2, 0, 1, 0, 0, 0, 0, 2, 1, 2, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 2, 1, 1, 1],
        [0, 0, 0, 2, 1, 0, 0, 1, 2, 0, 0, 0, 2, 1, 0, 0, 1, 2, 1, 1, 1, 0, 2, 1, 1, 2, 0],
    ],
    [
        [0, 1, 2, 0, 0, 0, 2, 1, 0, 1, 2, 0, 1, 1, 1, 0, 2, 1, 0, 1, 2, 0, 0, 0, 2, 1, 0],
        [0, 2, 1, 0, 1, 2, 2, 2, 2, 1, 0, 2, 1, 2, 0, 0, 0, 0, 0, 2, 1, 0, 1, 2, 2, 2, 2],
        [0, 0, 0, 0, 2, 1, 2, 0, 1, 1, 1, 1, 1, 0, 2, 0, 1, 2, 0, 0, 0, 0, 2, 1, 2, 0, 1],
    ],
    [
        [0, 1, 2, 1, 1, 1, 1, 0, 2, 1, 2, 0, 2, 2, 2, 2, 1, 0, 0, 1, 2, 1, 1, 1, 1, 0, 2],
        [0, 2, 1, 1, 2, 0, 1, 1, 1, 1, 0, 2, 2, 0, 1, 2, 2, 2, 0, 2, 1, 1, 2, 0, 1, 1, 1],
        [0, 0, 0, 1, 0, 2, 1, 2, 0, 1, 1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 2, 1, 2, 0],
    ],
    [
        [0, 1, 2, 2, 2, 2, 0, 2, 1, 1, 2, 0, 0, 0, 0, 1, 0, 2, 0, 1, 2, 2, 2, 2, 0, 2, 1],
        [0, 2, 1, 2, 0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 2, 1, 1, 1, 0, 2, 1, 2, 0, 1, 0, 0, 0],
        [0, 0, 0, 2, 1, 0, 0, 1, 2, 1, 1, 1, 0, 2, 1, 1, 2, 0, 0, 0, 0, 2, 1, 0, 0, 1, 2],
    ],
    [
        [0, 1, 2, 0, 0, 0, 2, 1, 0, 2, 0, 1, 2, 2, 2, 1, 0, 2, 2, 0, 1, 2, 2, 2, 1, 0, 2],
        [0, 2, 1, 0, 1, 2, 2, 2, 2, 2, 1, 0, 2, 0, 1, 1, 1, 1, 2, 1, 0, 2, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 2, 1, 2, 0, 1, 2, 2, 2, 2, 1, 0, 1, 2, 0, 2, 2, 2, 2, 1, 0, 1, 2, 0],
    ],
    [
        [0, 1, 2, 1, 1, 1, 1, 0, 2, 2, 0, 1, 0, 0, 0, 0, 2, 1, 2, 0, 1, 0, 0, 0, 0, 2, 1],
        [0, 2, 1, 1, 2, 0, 1, 1, 1, 2, 1, 0, 0, 1, 2, 0, 0, 0, 2, 1, 0, 0, 1, 2, 0, 0, 0],
        [0, 0, 0, 1, 0, 2, 1, 2, 0, 2, 2, 2, 0, 2, 1, 0, 1, 2, 2, 2, 2, 0, 2, 1, 0, 1, 2],
    ],
    [
        [0, 1, 2, 2, 2, 2, 0, 2, 1, 2, 0, 1, 1, 1, 1, 2, 1, 0, 2, 0, 1, 1, 1, 1, 2, 1, 0],
        [0, 2, 1, 2, 0, 1, 0, 0, 0, 2, 1, 0, 1, 2, 0, 2, 2, 2, 2, 1, 0, 1, 2, 0, 2, 2, 2],
        [0, 0, 0, 2, 1, 0, 0, 1, 2, 2, 2, 2, 1, 0, 2, 2, 0, 1, 2, 2, 2, 1, 0, 2, 2, 0, 1],
    ],
];

/// Printed lengths of binary `(2, 4, L)`-MOCSS from the length-sum construction.
pub const BINARY_MOCSS_LENGTHS: [usize; 26] = [
    3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 17, 18, 20, 21, 22, 24, 26, 27, 28, 32, 33, 34, 36, 40,
];
