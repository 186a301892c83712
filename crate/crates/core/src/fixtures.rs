//! Worked grids, transcribed cell-for-cell, used as exact-match fixtures.
//!
//! Zeros stand for the blank cells of the printed grids.

use crate::kotzig::RectArray;
use crate::square::Square;

/// Regular SAMS(5,2); also the density-2 output for `n = 5`.
pub const SAMS_5_2: [[u64; 5]; 5] =
    [[1, 6, 0, 0, 0], [0, 0, 2, 8, 0], [5, 0, 0, 0, 3], [0, 9, 7, 0, 0], [0, 0, 0, 4, 10]];

/// The diagonal Latin square `b(i,j) = <2i+j-1>_7`.
pub const LATIN_7: [[u64; 7]; 7] = [
    [2, 3, 4, 5, 6, 7, 1],
    [4, 5, 6, 7, 1, 2, 3],
    [6, 7, 1, 2, 3, 4, 5],
    [1, 2, 3, 4, 5, 6, 7],
    [3, 4, 5, 6, 7, 1, 2],
    [5, 6, 7, 1, 2, 3, 4],
    [7, 1, 2, 3, 4, 5, 6],
];

/// Density-2 placement for `n = 7` (a regular SAMS(7,2) as is).
pub const W_7: [[u64; 7]; 7] = [
    [0, 7, 0, 1, 0, 0, 0],
    [0, 6, 0, 0, 0, 0, 14],
    [0, 0, 0, 0, 13, 0, 5],
    [0, 0, 12, 0, 4, 0, 0],
    [11, 0, 10, 0, 0, 0, 0],
    [3, 0, 0, 0, 0, 9, 0],
    [0, 0, 0, 8, 0, 2, 0],
];

/// Density-2 placement for `n = 11`, before the column exchanges.
pub const W_11: [[u64; 11]; 11] = [
    [0, 0, 0, 11, 0, 1, 0, 0, 0, 0, 0],
    [0, 22, 0, 10, 0, 0, 0, 0, 0, 0, 0],
    [0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 21],
    [0, 0, 0, 0, 0, 0, 0, 0, 20, 0, 8],
    [0, 0, 0, 0, 0, 0, 19, 0, 7, 0, 0],
    [0, 0, 0, 0, 18, 0, 6, 0, 0, 0, 0],
    [0, 0, 17, 0, 16, 0, 0, 0, 0, 0, 0],
    [15, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 0, 0, 0, 0, 0, 0, 0, 0, 14, 0],
    [0, 0, 0, 0, 0, 0, 0, 13, 0, 3, 0],
    [0, 0, 0, 0, 0, 12, 0, 2, 0, 0, 0],
];

/// `W_11` after exchanging columns 2<->4 and 10<->8.
pub const W_STAR_11: [[u64; 11]; 11] = [
    [0, 11, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 10, 0, 22, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 9, 0, 0, 0, 0, 0, 0, 21],
    [0, 0, 0, 0, 0, 0, 0, 0, 20, 0, 8],
    [0, 0, 0, 0, 0, 0, 19, 0, 7, 0, 0],
    [0, 0, 0, 0, 18, 0, 6, 0, 0, 0, 0],
    [0, 0, 17, 0, 16, 0, 0, 0, 0, 0, 0],
    [15, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 0, 0, 0, 0, 0, 0, 14, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 3, 0, 13, 0],
    [0, 0, 0, 0, 0, 12, 0, 0, 0, 2, 0],
];

/// SFD(6,11) over [1,66].
pub const SFD_6_11: [[u64; 11]; 6] = [
    [11, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6],
    [12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22],
    [28, 33, 27, 32, 26, 31, 25, 30, 24, 29, 23],
    [44, 38, 43, 37, 42, 36, 41, 35, 40, 34, 39],
    [45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55],
    [61, 66, 60, 65, 59, 64, 58, 63, 57, 62, 56],
];

/// SFD(6,11) over [23,88].
pub const SFD_6_11_SHIFTED: [[u64; 11]; 6] = [
    [33, 27, 32, 26, 31, 25, 30, 24, 29, 23, 28],
    [34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44],
    [50, 55, 49, 54, 48, 53, 47, 52, 46, 51, 45],
    [66, 60, 65, 59, 64, 58, 63, 57, 62, 56, 61],
    [67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77],
    [83, 88, 82, 87, 81, 86, 80, 85, 79, 84, 78],
];

/// Regular SMS(11,6) built from `SFD_6_11_SHIFTED`, entries in [23,88].
pub const SMS_11_6_SHIFTED: [[u64; 11]; 11] = [
    [42, 0, 51, 0, 0, 0, 66, 0, 68, 24, 82],
    [46, 0, 0, 0, 61, 0, 67, 30, 88, 41, 0],
    [0, 0, 56, 0, 77, 25, 83, 40, 0, 52, 0],
    [62, 0, 76, 31, 78, 39, 0, 47, 0, 0, 0],
    [75, 26, 84, 38, 0, 53, 0, 0, 0, 57, 0],
    [79, 37, 0, 48, 0, 0, 0, 63, 0, 74, 32],
    [0, 54, 0, 0, 0, 58, 0, 73, 27, 85, 36],
    [0, 0, 0, 64, 0, 72, 33, 80, 35, 0, 49],
    [0, 59, 0, 71, 28, 86, 34, 0, 55, 0, 0],
    [0, 70, 23, 81, 44, 0, 50, 0, 0, 0, 65],
    [29, 87, 43, 0, 45, 0, 0, 0, 60, 0, 69],
];

/// SFD(7,13) over [1,91].
pub const SFD_7_13: [[u64; 13]; 7] = [
    [1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 7],
    [20, 26, 25, 24, 23, 22, 21, 19, 18, 17, 16, 15, 14],
    [39, 32, 38, 31, 37, 30, 36, 29, 35, 28, 34, 27, 33],
    [40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52],
    [59, 65, 58, 64, 57, 63, 56, 62, 55, 61, 54, 60, 53],
    [78, 77, 76, 75, 74, 73, 71, 70, 69, 68, 67, 66, 72],
    [85, 79, 80, 81, 82, 83, 84, 86, 87, 88, 89, 90, 91],
];

/// SFD(7,13) over [27,117].
pub const SFD_7_13_SHIFTED: [[u64; 13]; 7] = [
    [27, 28, 29, 30, 31, 32, 34, 35, 36, 37, 38, 39, 33],
    [46, 52, 51, 50, 49, 48, 47, 45, 44, 43, 42, 41, 40],
    [65, 58, 64, 57, 63, 56, 62, 55, 61, 54, 60, 53, 59],
    [66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78],
    [85, 91, 84, 90, 83, 89, 82, 88, 81, 87, 80, 86, 79],
    [104, 103, 102, 101, 100, 99, 97, 96, 95, 94, 93, 92, 98],
    [111, 105, 106, 107, 108, 109, 110, 112, 113, 114, 115, 116, 117],
];

/// Regular SMS(13,7) built from `SFD_7_13_SHIFTED`, entries in [27,117].
pub const SMS_13_7_SHIFTED: [[u64; 13]; 13] = [
    [0, 42, 0, 53, 0, 78, 0, 85, 0, 103, 0, 106, 37],
    [0, 60, 0, 77, 0, 79, 0, 104, 0, 105, 36, 0, 43],
    [0, 76, 0, 86, 0, 98, 0, 111, 35, 0, 44, 0, 54],
    [0, 80, 0, 92, 0, 117, 34, 0, 45, 0, 61, 0, 75],
    [0, 93, 0, 116, 32, 0, 47, 0, 55, 0, 74, 0, 87],
    [0, 115, 31, 0, 48, 0, 62, 0, 73, 0, 81, 0, 94],
    [30, 0, 49, 0, 56, 0, 72, 0, 88, 0, 95, 0, 114],
    [50, 0, 63, 0, 71, 0, 82, 0, 96, 0, 113, 29, 0],
    [57, 0, 70, 0, 89, 0, 97, 0, 112, 28, 0, 51, 0],
    [69, 0, 83, 0, 99, 0, 110, 27, 0, 52, 0, 64, 0],
    [90, 0, 100, 0, 109, 33, 0, 46, 0, 58, 0, 68, 0],
    [101, 0, 108, 39, 0, 40, 0, 65, 0, 67, 0, 84, 0],
    [107, 38, 0, 41, 0, 59, 0, 66, 0, 91, 0, 102, 0],
];

/// Density-2 placement for `n = 13`.
pub const W_13: [[u64; 13]; 13] = [
    [0, 0, 0, 0, 13, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 26, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0],
    [25, 0, 11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 24, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 23, 0, 9, 0],
    [0, 0, 0, 0, 0, 0, 0, 22, 0, 8, 0, 0, 0],
    [0, 0, 0, 0, 0, 21, 0, 7, 0, 0, 0, 0, 0],
    [0, 0, 0, 20, 0, 19, 0, 0, 0, 0, 0, 0, 0],
    [0, 18, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 17],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 16, 0, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 15, 0, 3, 0, 0],
    [0, 0, 0, 0, 0, 0, 14, 0, 2, 0, 0, 0, 0],
];

fn square<const N: usize>(rows: &[[u64; N]; N]) -> Square {
    Square::from_rows(rows).expect("fixture is square")
}

fn rect<const N: usize, const D: usize>(rows: &[[u64; N]; D]) -> RectArray {
    RectArray::from_rows(rows).expect("fixture is rectangular")
}

pub fn sams_5_2() -> Square {
    square(&SAMS_5_2)
}

pub fn latin_7() -> Square {
    square(&LATIN_7)
}

pub fn w_7() -> Square {
    square(&W_7)
}

pub fn w_11() -> Square {
    square(&W_11)
}

pub fn w_star_11() -> Square {
    square(&W_STAR_11)
}

pub fn w_13() -> Square {
    square(&W_13)
}

pub fn sfd_6_11() -> RectArray {
    rect(&SFD_6_11)
}

pub fn sfd_6_11_shifted() -> RectArray {
    rect(&SFD_6_11_SHIFTED)
}

pub fn sfd_7_13() -> RectArray {
    rect(&SFD_7_13)
}

pub fn sfd_7_13_shifted() -> RectArray {
    rect(&SFD_7_13_SHIFTED)
}

pub fn sms_11_6_shifted() -> Square {
    square(&SMS_11_6_SHIFTED)
}

pub fn sms_13_7_shifted() -> Square {
    square(&SMS_13_7_SHIFTED)
}
