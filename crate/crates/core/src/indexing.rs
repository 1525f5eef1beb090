//! Index arithmetic shared by the closed-form solutions.

use crate::error::{Error, Result};

/// Splits `i` as `2 * floor_half + tau` with `tau` in `{0, 1}`.
pub fn tau_floor(i: usize) -> (usize, usize) {
    (i / 2, i % 2)
}

/// Parity of `i` (the remainder modulo 2).
pub fn tau(i: usize) -> usize {
    i % 2
}

/// Maps a shifted residue `k` to its back-shifted counterpart.
///
/// Returns `(j, floor(j/2), tau(j))` with `j = 9 - k`. The identities
/// `floor(j/2) = 4 - floor(k/2)` and `tau(j) = 1 - tau(k)` hold for every
/// `k` in `0..=9`.
pub fn backshift_index(k: usize) -> Result<(usize, usize, usize)> {
    if k > 9 {
        return Err(Error::IndexOutOfRange {
            value: k,
            expected: "0..=9",
        });
    }
    let j = 9 - k;
    let (floor_j, tau_j) = tau_floor(j);
    Ok((j, floor_j, tau_j))
}
