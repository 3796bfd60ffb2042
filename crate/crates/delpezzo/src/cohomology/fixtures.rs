//! Verbatim transcriptions of the published symbolic matrices, kept as
//! string tables so each entry can be checked against the source by eye.
//! The bracket computation is authoritative; these exist only to be
//! diffed against it.

use crate::ratpoly::Rational;

/// `CP^2`: the 10x8 matrix in the coefficients a1..a10.
pub(super) const P2_MATRIX: &[&str] = &[
    "-a2,    a1,   0,    -a3,   0,    a1,   0,    0",
    "-2a4,   0,    0,    -a5,   -a3,  a2,   3a1,  0",
    "-a5,    a3,   -a2,  -2a6,  0,    0,    0,    3a1",
    "-3a7,   -a4,  0,    -a8,   -a5,  a4,   2a2,  0",
    "-2a8,   0,    -2a4, -2a9,  -2a6, 0,    2a3,  2a2",
    "-a9,    a6,   -a5,  -3a10, 0,    -a6,  0,    2a3",
    "0,      -2a7, 0,    0,     -a8,  a7,   a4,   0",
    "0,      -a8,  -3a7, 0,     -2a9, 0,    a5,   a4",
    "0,      0,    -2a8, 0,     -3a10,-a9,  a6,   a5",
    "0,      a10,  -a9,  0,     0,    -2a10,0,    a6",
];

/// `CP^1 x CP^1`: the 9x6 matrix in the coefficients a1..a9.
pub(super) const P1XP1_MATRIX: &[&str] = &[
    "-a2,   a1,  0,    -a4,  a1,  0",
    "-2a3,  0,   2a1,  -a5,  a2,  0",
    "0,     -a3, a2,   -a6,  a3,  0",
    "-a5,   a4,  0,    -2a7, 0,   2a1",
    "-2a6,  0,   2a4,  -2a8, 0,   2a2",
    "0,     -a6, a5,   -2a9, 0,   2a3",
    "-a8,   a7,  0,    0,    -a7, a4",
    "-2a9,  0,   2a7,  0,    -a8, a5",
    "0,     -a9, a8,   0,    -a9, a6",
];

/// Blow-up at `[1,0,0]`: 9x6, rows a2..a10, columns b2,b3,b5,b6,b7,b8.
pub(super) const B1_MATRIX: &[&str] = &[
    "0,    0,    -a3,   a2,    0,   0",
    "a3,   -a2,  0,     0,     0,   0",
    "-a4,  0,    -a5,   a4,    2a2, 0",
    "0,    -2a4, -2a6,  0,     2a3, 2a2",
    "a6,   -a5,  0,     -a6,   0,   2a3",
    "-2a7, 0,    -a8,   a7,    a4,  0",
    "-a8,  -3a7, -2a9,  0,     a5,  a4",
    "0,    -2a8, -3a10, -a9,   a6,  a5",
    "a10,  -a9,  0,     -2a10, 0,   a6",
];

/// Blow-up at `[1,0,0], [1,1,0]`: 8x4, rows the free directions
/// a2,a3,a4,a5,a6,a8,a9,a10 (a1 = 0, a7 = -(a2+a4)), columns b2,b3,b6,b8.
pub(super) const B2_MATRIX: &[&str] = &[
    "0,       0,       a2,    0",
    "a3,      -a2,     0,     0",
    "-2a2-a4, 0,       a4,    0",
    "-2a3,    -2a4,    0,     2a2",
    "a6,      -a5,     -a6,   2a3",
    "-a8-a5,  3a2+3a4, 0,     a4",
    "-a6,     -2a8,    -a9,   a5",
    "a10,     -a9,     -2a10, a6",
];

/// Blow-up at `[1,0,0], [1,1,0], [1,0,1]`: 7x2, rows the free directions
/// a2..a6,a8,a9 (a1 = 0, a7 = -(a2+a4), a10 = -(a3+a6)), columns b2,b6.
pub(super) const B3_MATRIX: &[&str] = &[
    "0,        a2",
    "a3,       0",
    "-2a2-a4,  a4",
    "-2a3,     -2a2",
    "a6,       -2a3-a6",
    "-a5-a8,   -a4",
    "-a6,      -a5-a9",
];

/// Evaluates a transcribed table at concrete coefficients `a[0] = a1, ...`.
pub(super) fn evaluate(table: &[&str], a: &[Rational]) -> Vec<Vec<Rational>> {
    table
        .iter()
        .map(|row| row.split(',').map(|e| evaluate_entry(e, a)).collect())
        .collect()
}

/// Parses one entry such as `-2a4`, `3a2+3a4`, or `0` and evaluates it.
fn evaluate_entry(entry: &str, a: &[Rational]) -> Rational {
    let s: String = entry.chars().filter(|c| !c.is_whitespace()).collect();
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut acc = Rational::zero();
    while pos < bytes.len() {
        let mut sign = 1i64;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        }
        let digit_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: i64 = if pos > digit_start {
            s[digit_start..pos].parse().expect("fixture coefficient")
        } else {
            1
        };
        if pos == bytes.len() {
            // Bare integer entry, i.e. "0".
            acc = &acc + &Rational::from_int(sign * coeff);
            break;
        }
        assert_eq!(bytes[pos], b'a', "malformed fixture entry {entry:?}");
        pos += 1;
        let idx_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let idx: usize = s[idx_start..pos].parse().expect("fixture index");
        acc = &acc + &(&Rational::from_int(sign * coeff) * &a[idx - 1]);
    }
    acc
}
