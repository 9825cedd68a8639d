//! The two optimal Lee codes built from quadratic residues mod 7 and from
//! the ternary tetracode embedded in `Z_6`.

use crate::code::{Code, Word};

/// The `Z_7 x Z_7` circulant over `Z_5` whose entry at `(i, j)` is 0 when
/// `i + j = 0 (mod 7)`, 1 when `i + j` is a nonzero square mod 7, and 3
/// otherwise.
fn residue_matrix() -> Vec<Vec<u16>> {
    let squares = [1u32, 2, 4]; // nonzero squares mod 7
    (0..7)
        .map(|i| {
            (0..7)
                .map(|j| {
                    let s = (i + j) % 7;
                    if s == 0 {
                        0
                    } else if squares.contains(&s) {
                        1
                    } else {
                        3
                    }
                })
                .collect()
        })
        .collect()
}

/// The 15-word `(7, 9)_5` Lee code: the rows of the residue matrix, their
/// negatives, and the zero word. Equidistant with Lee distance 9.
pub fn lee_5_7_9() -> Code {
    let m = residue_matrix();
    let mut words = vec![Word::zero(5, 7)];
    for row in &m {
        words.push(Word::new(5, row.clone()).unwrap());
        words.push(Word::new(5, row.iter().map(|&s| (5 - s) % 5).collect()).unwrap());
    }
    Code::new(5, 7, words).unwrap()
}

/// The 18-word `(4, 6)_6` Lee code: the doubled tetracode on `{0,2,4}`
/// together with its translate by `3333`.
pub fn lee_6_4_6() -> Code {
    let tetracode = [
        "0000", "0111", "0222", "1012", "1120", "1201", "2021", "2102", "2210",
    ];
    let mut words = Vec::new();
    for row in tetracode {
        let doubled: Vec<u16> = row.bytes().map(|b| 2 * (b - b'0') as u16).collect();
        let shifted: Vec<u16> = doubled.iter().map(|&s| (s + 3) % 6).collect();
        words.push(Word::new(6, doubled).unwrap());
        words.push(Word::new(6, shifted).unwrap());
    }
    Code::new(6, 4, words).unwrap()
}
