use std::collections::HashSet;

use crate::diagrams::{Cell, Composition, SkewShape};
use crate::error::{Result, SkewError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JoinMode {
    /// `D1·D2`: D2 northeast of D1, sharing one column.
    Concat,
    /// `D1⊙D2`: D2 northeast of D1, sharing one row.
    NearConcat,
    /// `D1⊕D2`: no shared rows or columns.
    Disjoint,
}

/// Offset (rows, cols) placing a copy of a `h × w` diagram after another one.
fn offset(mode: JoinMode, h: i64, w: i64) -> (i64, i64) {
    match mode {
        JoinMode::Concat => (-h, w - 1),
        JoinMode::NearConcat => (-(h - 1), w),
        JoinMode::Disjoint => (-h, w),
    }
}

/// Joins `d2` to the northeast of `d1`. The empty diagram is neutral.
pub fn join(d1: &SkewShape, d2: &SkewShape, mode: JoinMode) -> SkewShape {
    if d1.is_empty() {
        return d2.clone();
    }
    if d2.is_empty() {
        return d1.clone();
    }
    // d1 occupies rows [0, h1) and columns [0, w1); d2 is lifted above row 0.
    let h2 = d2.num_rows() as i64;
    let w1 = d1.num_cols() as i64;
    let (dr, dc) = match mode {
        JoinMode::Concat => (-h2, w1 - 1),
        JoinMode::NearConcat => (-h2 + 1, w1),
        JoinMode::Disjoint => (-h2, w1),
    };
    let cells = d1.cells().into_iter().chain(d2.cells().into_iter().map(|(r, c)| (r + dr, c + dc)));
    SkewShape::from_cells(cells).expect("corner joins of skew diagrams are skew")
}

/// Places a copy of `tile` at every cell of `pattern`.
///
/// A step east in `pattern` becomes `⊙` between neighbouring copies, a step north
/// becomes `·`. This realizes both `α∘D` (ribbon pattern) and `D∘β` (ribbon tile).
fn substitute(pattern: &SkewShape, tile: &SkewShape) -> Result<SkewShape> {
    if pattern.is_empty() || tile.is_empty() {
        return Ok(SkewShape::empty());
    }
    let h = tile.num_rows() as i64;
    let w = tile.num_cols() as i64;
    let east = offset(JoinMode::NearConcat, h, w);
    let north = offset(JoinMode::Concat, h, w);
    let tile_cells = tile.cells();
    let mut cells: HashSet<Cell> = HashSet::with_capacity(pattern.size() * tile.size());
    for (r, c) in pattern.cells() {
        let dr = c * east.0 - r * north.0;
        let dc = c * east.1 - r * north.1;
        for &(tr, tc) in &tile_cells {
            if !cells.insert((tr + dr, tc + dc)) {
                return Err(SkewError::NotDefined("copies overlap".into()));
            }
        }
    }
    SkewShape::from_cells(cells)
}

/// `α∘D`: the ribbon string for `α` with every cell replaced by `D`.
pub fn compose_alpha_d(alpha: &Composition, d: &SkewShape) -> SkewShape {
    substitute(&SkewShape::from_ribbon(alpha), d).expect("α∘D is a skew diagram")
}

/// `D∘β`: a copy of the ribbon `β` for every cell of `D`, glued by `⊙` along rows and
/// by `·` along columns.
pub fn compose_d_beta(d: &SkewShape, beta: &Composition) -> SkewShape {
    substitute(d, &SkewShape::from_ribbon(beta)).expect("D∘β is a skew diagram")
}

/// `D ⋆ D ⋆ … ⋆ D` for a fixed operation, `r` factors.
pub fn power(d: &SkewShape, r: usize, mode: JoinMode) -> SkewShape {
    let mut acc = SkewShape::empty();
    for _ in 0..r {
        acc = join(&acc, d, mode);
    }
    acc
}
