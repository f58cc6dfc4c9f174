//! Brute-force square/domino tiling counters.
//!
//! These enumerate every tiling explicitly and never use a recurrence, so they
//! serve as independent oracles for the sequences and for continuants.

use num_bigint::BigInt;
use thiserror::Error;

pub const MAX_BOARD: usize = 25;
pub const MAX_BRACELET: usize = 20;
pub const MAX_STACK_CELLS: usize = 10;
pub const MAX_STACK_HEIGHT: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("{what} {got} exceeds the enumeration bound {max}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("height vector must be non-empty with every entry >= 1")]
    InvalidHeights,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tile {
    Square,
    Domino,
}

/// Calls `visit` once per tiling of a board of `len` cells.
pub fn for_each_board_tiling(len: usize, visit: &mut impl FnMut(&[Tile])) {
    fn go(remaining: usize, acc: &mut Vec<Tile>, visit: &mut impl FnMut(&[Tile])) {
        if remaining == 0 {
            visit(acc);
            return;
        }
        acc.push(Tile::Square);
        go(remaining - 1, acc, visit);
        acc.pop();
        if remaining >= 2 {
            acc.push(Tile::Domino);
            go(remaining - 2, acc, visit);
            acc.pop();
        }
    }
    go(len, &mut Vec::with_capacity(len), visit);
}

fn bound(what: &'static str, got: usize, max: usize) -> Result<(), TilingError> {
    if got > max {
        Err(TilingError::BoundExceeded { what, got, max })
    } else {
        Ok(())
    }
}

pub fn count_board(n: usize) -> Result<BigInt, TilingError> {
    bound("board length", n, MAX_BOARD)?;
    let mut count = 0u64;
    for_each_board_tiling(n, &mut |_| count += 1);
    Ok(count.into())
}

/// Circular tilings of `n` cells. A domino may cover cells `n-1` and `0`; that
/// wrapped covering is distinct from any unwrapped one, so a 2-bracelet has
/// three tilings. The empty bracelet counts as 2 (in phase and out of phase).
pub fn count_bracelet(n: usize) -> Result<BigInt, TilingError> {
    bound("bracelet length", n, MAX_BRACELET)?;
    if n == 0 {
        return Ok(2.into());
    }
    let mut count = 0u64;
    // cell 0 starts a tile
    for_each_board_tiling(n, &mut |_| count += 1);
    // cell 0 is the second half of a domino that wraps from cell n-1
    if n >= 2 {
        for_each_board_tiling(n - 2, &mut |_| count += 1);
    }
    Ok(count.into())
}

/// Stack capacities, one per cell, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightVector(Vec<u32>);

impl HeightVector {
    pub fn new(heights: Vec<u32>) -> Result<Self, TilingError> {
        if heights.is_empty() || heights.contains(&0) {
            return Err(TilingError::InvalidHeights);
        }
        Ok(Self(heights))
    }

    pub fn heights(&self) -> &[u32] {
        &self.0
    }

    /// The vector without its first cell, or `None` for a single cell.
    pub fn tail(&self) -> Option<Self> {
        (self.0.len() > 1).then(|| Self(self.0[1..].to_vec()))
    }
}

/// Tilings where a square on cell `i` may be stacked `1..=h_i` high and dominoes
/// do not stack. Each tiling contributes the product of the choices on its
/// square cells.
pub fn count_stacked(h: &HeightVector) -> Result<BigInt, TilingError> {
    let heights = h.heights();
    bound("height vector length", heights.len(), MAX_STACK_CELLS)?;
    let tallest = *heights.iter().max().expect("non-empty");
    bound("stack height", tallest as usize, MAX_STACK_HEIGHT as usize)?;
    let mut total = BigInt::from(0);
    for_each_board_tiling(heights.len(), &mut |tiles| {
        let mut cell = 0;
        let mut weight = BigInt::from(1);
        for tile in tiles {
            match tile {
                Tile::Square => {
                    weight *= heights[cell];
                    cell += 1;
                }
                Tile::Domino => cell += 2,
            }
        }
        total += weight;
    });
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(v: &[u32]) -> HeightVector {
        HeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn board_counts() {
        assert_eq!(count_board(4).unwrap(), 5.into());
        assert_eq!(count_board(0).unwrap(), 1.into());
        assert_eq!(count_board(10).unwrap(), 89.into());
        assert!(matches!(
            count_board(26),
            Err(TilingError::BoundExceeded { got: 26, .. })
        ));
    }

    #[test]
    fn board_enumeration_lists_each_tiling_once() {
        let mut seen = Vec::new();
        for_each_board_tiling(4, &mut |t| seen.push(t.to_vec()));
        use Tile::*;
        assert_eq!(
            seen,
            [
                vec![Square, Square, Square, Square],
                vec![Square, Square, Domino],
                vec![Square, Domino, Square],
                vec![Domino, Square, Square],
                vec![Domino, Domino],
            ]
        );
    }

    #[test]
    fn bracelet_counts() {
        assert_eq!(count_bracelet(0).unwrap(), 2.into());
        assert_eq!(count_bracelet(1).unwrap(), 1.into());
        assert_eq!(count_bracelet(2).unwrap(), 3.into());
        assert_eq!(count_bracelet(5).unwrap(), 11.into());
        assert!(count_bracelet(21).is_err());
    }

    #[test]
    fn stacked_counts() {
        assert_eq!(count_stacked(&hv(&[2, 3, 7])).unwrap(), 51.into());
        assert_eq!(count_stacked(&hv(&[3, 7])).unwrap(), 22.into());
        for a in 1..=5 {
            assert_eq!(count_stacked(&hv(&[a])).unwrap(), a.into());
        }
        assert_eq!(hv(&[2, 3, 7]).tail(), Some(hv(&[3, 7])));
        assert_eq!(hv(&[2]).tail(), None);
    }

    #[test]
    fn stacked_bounds_and_validation() {
        assert_eq!(HeightVector::new(vec![]), Err(TilingError::InvalidHeights));
        assert_eq!(
            HeightVector::new(vec![1, 0]),
            Err(TilingError::InvalidHeights)
        );
        assert!(count_stacked(&hv(&[1; 11])).is_err());
        assert!(count_stacked(&hv(&[13])).is_err());
        assert!(count_stacked(&hv(&[12; 10])).is_ok());
    }
}
