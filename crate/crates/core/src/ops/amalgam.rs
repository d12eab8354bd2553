use std::collections::HashSet;

use crate::diagrams::{Cell, Composition, SkewShape};
use crate::error::{Result, SkewError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    /// The northeasternmost diagonals.
    Top,
    /// The southwesternmost diagonals.
    Bottom,
}

/// Cells of `d` lying on its `k` extreme diagonals at the given end.
fn end_cells(d: &SkewShape, end: End, k: usize) -> Vec<Cell> {
    let Some((lo, hi)) = d.content_range() else { return Vec::new() };
    let k = k as i64;
    match end {
        End::Top => d.cells_in_contents(hi - k + 1, hi),
        End::Bottom => d.cells_in_contents(lo, lo + k - 1),
    }
}

fn ribbon_of(cells: Vec<Cell>, diagonals: usize) -> Option<Composition> {
    if cells.len() != diagonals {
        return None;
    }
    let shape = SkewShape::from_cells(cells).ok()?;
    if shape.is_ribbon() {
        shape.to_ribbon().ok()
    } else {
        None
    }
}

/// All ribbons `ω` protruding from the given end of `d`, shortest first.
///
/// `ω` protrudes when the restriction of `d` to its `|ω|` extreme diagonals is the
/// ribbon `ω` and the restriction to `|ω|+1` diagonals is a ribbon too.
pub fn protrusion(d: &SkewShape, end: End) -> Vec<Composition> {
    let Some((lo, hi)) = d.content_range() else { return Vec::new() };
    let diagonals = (hi - lo + 1) as usize;
    let mut out = Vec::new();
    for len in 1..=diagonals {
        let Some(omega) = ribbon_of(end_cells(d, end, len), len) else { break };
        let next = (len + 1).min(diagonals);
        if ribbon_of(end_cells(d, end, next), next).is_none() {
            break;
        }
        out.push(omega);
    }
    out
}

pub fn protrudes(d: &SkewShape, omega: &Composition, end: End) -> bool {
    !omega.is_empty() && protrusion(d, end).contains(omega)
}

/// Cell of minimal content in a ribbon copy.
fn southwest(cells: &[Cell]) -> Cell {
    *cells.iter().min_by_key(|&&(r, c)| c - r).expect("nonempty ribbon copy")
}

fn check_protrusion(d1: &SkewShape, d2: &SkewShape, omega: &Composition) -> Result<()> {
    if !protrudes(d1, omega, End::Top) {
        return Err(SkewError::ProtrusionFailure(format!("{omega} does not protrude from the top of {d1}")));
    }
    if !protrudes(d2, omega, End::Bottom) {
        return Err(SkewError::ProtrusionFailure(format!("{omega} does not protrude from the bottom of {d2}")));
    }
    let w = SkewShape::from_ribbon(omega);
    if &w == d1 || &w == d2 {
        return Err(SkewError::ProtrusionFailure(format!("{omega} is the whole diagram")));
    }
    Ok(())
}

/// Translation taking `d2` to where its bottom copy of `ω` lies on the top copy of `ω`
/// in `d1`, moved by `shift`.
fn anchor_offset(d1: &SkewShape, d2: &SkewShape, omega: &Composition, shift: (i64, i64)) -> (i64, i64) {
    let k = omega.weight();
    let top = southwest(&end_cells(d1, End::Top, k));
    let bottom = southwest(&end_cells(d2, End::Bottom, k));
    (top.0 + shift.0 - bottom.0, top.1 + shift.1 - bottom.1)
}

/// Union of translated copies, provided it has exactly `expected` cells and is skew.
fn union_of(copies: &[(&SkewShape, (i64, i64))], expected: usize) -> Result<SkewShape> {
    let mut cells: HashSet<Cell> = HashSet::with_capacity(expected);
    for (d, (dr, dc)) in copies {
        cells.extend(d.cells().into_iter().map(|(r, c)| (r + dr, c + dc)));
    }
    if cells.len() != expected {
        return Err(SkewError::NotDefined("copies overlap outside ω".into()));
    }
    SkewShape::from_cells(cells)
}

fn glue(d1: &SkewShape, d2: &SkewShape, omega: &Composition, shift: (i64, i64), expected: usize) -> Result<SkewShape> {
    union_of(&[(d1, (0, 0)), (d2, anchor_offset(d1, d2, omega, shift))], expected)
}

/// `D1 ⨿ω D2`: the copies of `ω` at the top of `d1` and the bottom of `d2` identified.
pub fn amalgamate(d1: &SkewShape, d2: &SkewShape, omega: &Composition) -> Result<SkewShape> {
    check_protrusion(d1, d2, omega)?;
    glue(d1, d2, omega, (0, 0), d1.size() + d2.size() - omega.weight())
        .map_err(|e| SkewError::NotDefined(format!("amalgamation is not skew: {e}")))
}

/// `D ⨿ω D ⨿ω … ⨿ω D` with `r ≥ 1` factors.
pub fn amalgamate_power(d: &SkewShape, omega: &Composition, r: usize) -> Result<SkewShape> {
    if r == 0 {
        return Err(SkewError::NotDefined("amalgamated power needs r ≥ 1".into()));
    }
    if r == 1 {
        return Ok(d.clone());
    }
    check_protrusion(d, d, omega)?;
    let (dr, dc) = anchor_offset(d, d, omega, (0, 0));
    let copies: Vec<_> = (0..r as i64).map(|t| (d, (t * dr, t * dc))).collect();
    union_of(&copies, r * d.size() - (r - 1) * omega.weight())
        .map_err(|e| SkewError::NotDefined(format!("amalgamation is not skew: {e}")))
}

/// Which projection realized `D1 ·ω D2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    Outer,
    Inner,
}

/// `D1 ·ω D2` together with the projection that produced it.
pub fn dot_omega_with(d1: &SkewShape, d2: &SkewShape, omega: &Composition) -> Result<(SkewShape, Projection)> {
    check_protrusion(d1, d2, omega)?;
    let total = d1.size() + d2.size();
    // Outer: ω of d1 immediately northwest of ω of d2; inner: immediately southeast.
    let outer = glue(d1, d2, omega, (1, 1), total).ok();
    let inner = glue(d1, d2, omega, (-1, -1), total).ok();
    match (outer, inner) {
        (Some(o), None) => Ok((o, Projection::Outer)),
        (None, Some(i)) => Ok((i, Projection::Inner)),
        (None, None) => Err(SkewError::NotDefined("neither projection is a skew diagram".into())),
        (Some(_), Some(_)) => Err(SkewError::NotDefined("both projections are skew diagrams".into())),
    }
}

/// `D1 ·ω D2`: the unique skew projection of `d2` onto `d1` along `ω`.
pub fn dot_omega(d1: &SkewShape, d2: &SkewShape, omega: &Composition) -> Result<SkewShape> {
    dot_omega_with(d1, d2, omega).map(|(d, _)| d)
}

/// `α ∘ω D = D^{⨿α1} ·ω … ·ω D^{⨿αℓ}`.
///
/// Consecutive blocks are placed by their adjacent copies of `D`, so the result
/// exists whenever `D ⨿ω D` and `D ·ω D` do.
pub fn amalgamated_compose(alpha: &Composition, d: &SkewShape, omega: &Composition) -> Result<SkewShape> {
    if alpha.is_empty() {
        return Ok(SkewShape::empty());
    }
    if alpha.weight() == 1 {
        return Ok(d.clone());
    }
    let (_, projection) = dot_omega_with(d, d, omega)?;
    let shift = match projection {
        Projection::Outer => (1, 1),
        Projection::Inner => (-1, -1),
    };
    let amal = anchor_offset(d, d, omega, (0, 0));
    let dot = anchor_offset(d, d, omega, shift);
    let mut copies = Vec::with_capacity(alpha.weight());
    let mut pos = (0i64, 0i64);
    for (b, &part) in alpha.parts().iter().enumerate() {
        for t in 0..part {
            let step = if t > 0 { amal } else if b > 0 { dot } else { (0, 0) };
            pos = (pos.0 + step.0, pos.1 + step.1);
            copies.push((d, pos));
        }
    }
    let expected = alpha.weight() * d.size() - (alpha.weight() - alpha.len()) * omega.weight();
    union_of(&copies, expected).map_err(|e| SkewError::NotDefined(format!("α ∘ω D is not skew: {e}")))
}

/// Outcome of checking the separation hypotheses for `(D, ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub connected: bool,
    pub protrudes_top: bool,
    pub protrudes_bottom: bool,
    pub dot_defined: bool,
    pub separated: bool,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.connected && self.protrudes_top && self.protrudes_bottom && self.dot_defined && self.separated
    }

    /// Names of the failed clauses.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.connected, "connected"),
            (self.protrudes_top, "protrudes_top"),
            (self.protrudes_bottom, "protrudes_bottom"),
            (self.dot_defined, "dot_defined"),
            (self.separated, "separated"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

pub fn check_hypotheses(d: &SkewShape, omega: &Composition) -> HypothesisReport {
    let diagonals = d.content_range().map_or(0, |(lo, hi)| (hi - lo + 1) as usize);
    HypothesisReport {
        connected: !d.is_empty() && d.is_connected(),
        protrudes_top: protrudes(d, omega, End::Top),
        protrudes_bottom: protrudes(d, omega, End::Bottom),
        dot_defined: dot_omega(d, d, omega).is_ok(),
        // Some diagonal meets neither the top nor the bottom copy of ω.
        separated: !omega.is_empty() && diagonals > 2 * omega.weight(),
    }
}
