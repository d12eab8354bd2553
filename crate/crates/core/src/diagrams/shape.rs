use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Composition, Partition, Step};
use crate::error::{Result, SkewError};

/// A cell in matrix coordinates: `(row, column)`, row 0 at the top.
pub type Cell = (i64, i64);

/// A skew diagram `λ/μ` in canonical form.
///
/// Canonical means no empty rows, no empty columns and no trailing zeros in the
/// inner partition. Two diagrams that differ by translation or by inserting empty
/// rows and columns normalize to the same value, so `SkewShape` can be used as a
/// dictionary key directly.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Builds and normalizes `outer/inner`.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(SkewError::NotSkew(format!("{inner} is not contained in {outer}")));
        }
        let mut cells = Vec::new();
        for i in 0..outer.len() {
            for j in inner.part(i)..outer.part(i) {
                cells.push((i as i64, j as i64));
            }
        }
        Self::from_cells(cells)
    }

    /// A straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape::new(outer, Partition::empty()).expect("straight shapes are skew")
    }

    pub fn empty() -> Self {
        SkewShape::default()
    }

    pub fn single_cell() -> Self {
        SkewShape { outer: Partition::from_trimmed(vec![1]), inner: Partition::empty() }
    }

    /// Normalizes an arbitrary finite cell set.
    ///
    /// Fails with `NotSkew` unless the set is a translate of a skew diagram, possibly
    /// with empty rows and columns inserted between its pieces.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Ok(SkewShape::empty());
        }
        let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        let mut cols: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for &(r, c) in &cells {
            rows.entry(r).or_default().push(c);
            cols.entry(c).or_default().push(r);
        }
        for (r, cs) in &rows {
            if !is_contiguous(cs) {
                return Err(SkewError::NotSkew(format!("row {r} has a gap")));
            }
        }
        for (c, rs) in &cols {
            if !is_contiguous(rs) {
                return Err(SkewError::NotSkew(format!("column {c} has a gap")));
            }
        }
        let col_rank: BTreeMap<i64, usize> = cols.keys().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut outer = Vec::with_capacity(rows.len());
        let mut inner = Vec::with_capacity(rows.len());
        for cs in rows.values() {
            let lo = col_rank[&cs[0]];
            let hi = col_rank[cs.last().unwrap()];
            if hi - lo + 1 != cs.len() {
                return Err(SkewError::NotSkew("row straddles an empty column".into()));
            }
            if let (Some(&po), Some(&pi)) = (outer.last(), inner.last()) {
                if hi + 1 > po || lo > pi {
                    return Err(SkewError::NotSkew(
                        "rows do not shift weakly west going down".into(),
                    ));
                }
            }
            outer.push(hi + 1);
            inner.push(lo);
        }
        Ok(SkewShape { outer: Partition::from_trimmed(outer), inner: Partition::from_trimmed(inner) })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(0)
    }

    /// Half-open column range `[μ_i, λ_i)` of row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    /// Row lengths top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows()).map(|i| self.outer.part(i) - self.inner.part(i)).collect()
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        if r < 0 || c < 0 {
            return false;
        }
        let (lo, hi) = self.row_range(r as usize);
        (c as usize) >= lo && (c as usize) < hi
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.num_rows() {
            let (lo, hi) = self.row_range(i);
            out.extend((lo..hi).map(|j| (i as i64, j as i64)));
        }
        out
    }

    /// Contents `j - i` occupied by the diagram, as an inclusive range.
    pub fn content_range(&self) -> Option<(i64, i64)> {
        if self.is_empty() {
            return None;
        }
        let last = self.num_rows() - 1;
        Some((self.inner.part(last) as i64 - last as i64, self.outer.part(0) as i64 - 1))
    }

    /// Restriction to the cells with content in `[lo, hi]`, as a raw cell list.
    pub fn cells_in_contents(&self, lo: i64, hi: i64) -> Vec<Cell> {
        self.cells().into_iter().filter(|&(r, c)| (lo..=hi).contains(&(c - r))).collect()
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Rotation by 180 degrees.
    pub fn rotate180(&self) -> SkewShape {
        SkewShape::from_cells(self.cells().into_iter().map(|(r, c)| (-r, -c)))
            .expect("rotation of a skew diagram is skew")
    }

    /// Edge-connected components, southwest to northeast.
    pub fn components(&self) -> Vec<SkewShape> {
        if self.is_empty() {
            return Vec::new();
        }
        // Consecutive rows either share a column or split the diagram.
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.num_rows() {
            let split = i == self.num_rows() || self.outer.part(i) <= self.inner.part(i - 1);
            if split {
                let cells: Vec<Cell> = (start..i)
                    .flat_map(|r| {
                        let (lo, hi) = self.row_range(r);
                        (lo..hi).map(move |c| (r as i64, c as i64))
                    })
                    .collect();
                out.push(SkewShape::from_cells(cells).expect("component of a skew diagram"));
                start = i;
            }
        }
        out.reverse();
        out
    }

    pub fn is_connected(&self) -> bool {
        (1..self.num_rows()).all(|i| self.outer.part(i) > self.inner.part(i - 1))
    }

    /// Whether some pair of consecutive rows shares two or more columns.
    pub fn has_square(&self) -> bool {
        (1..self.num_rows()).any(|i| self.outer.part(i) >= self.inner.part(i - 1) + 2)
    }

    pub fn is_ribbon(&self) -> bool {
        !self.is_empty() && self.is_connected() && !self.has_square()
    }

    /// The ribbon with `α_i` cells in the i-th row from the bottom.
    pub fn from_ribbon(alpha: &Composition) -> SkewShape {
        if alpha.is_empty() {
            return SkewShape::empty();
        }
        let mut cells = Vec::with_capacity(alpha.weight());
        let (mut r, mut c) = (0i64, 0i64);
        cells.push((r, c));
        for s in alpha.steps() {
            match s {
                Step::Right => c += 1,
                Step::Up => r -= 1,
            }
            cells.push((r, c));
        }
        SkewShape::from_cells(cells).expect("ribbons are skew")
    }

    /// Row sizes read bottom to top; fails unless the diagram is a ribbon.
    pub fn to_ribbon(&self) -> Result<Composition> {
        if self.is_empty() {
            return Ok(Composition::empty());
        }
        if !self.is_connected() {
            return Err(SkewError::NotRibbon("disconnected".into()));
        }
        if self.has_square() {
            return Err(SkewError::NotRibbon("contains a 2x2 block".into()));
        }
        let mut rows = self.row_lengths();
        rows.reverse();
        Composition::new(rows)
    }

    /// `D1 ⊕ D2 ⊕ …`, each summand placed immediately northeast of the previous one.
    pub fn direct_sum(parts: &[SkewShape]) -> SkewShape {
        let mut cells: Vec<Cell> = Vec::new();
        let (mut top, mut right) = (0i64, -1i64);
        for d in parts.iter().filter(|d| !d.is_empty()) {
            let h = d.num_rows() as i64;
            let dr = top - h;
            let dc = right + 1;
            cells.extend(d.cells().into_iter().map(|(r, c)| (r + dr, c + dc)));
            top = dr;
            right = dc + d.num_cols() as i64 - 1;
        }
        SkewShape::from_cells(cells).expect("direct sums of skew diagrams are skew")
    }

    /// Parses the ASCII picture format: one row per line, `X` for a cell, `.` for none.
    pub fn from_ascii(text: &str) -> Result<SkewShape> {
        let mut cells = Vec::new();
        for (r, line) in text.lines().enumerate() {
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    'X' | 'x' | '#' | '×' => cells.push((r as i64, c as i64)),
                    '.' | ' ' | '\t' => {}
                    _ => return Err(SkewError::Parse(format!("unexpected character {ch:?} in row {r}"))),
                }
            }
        }
        SkewShape::from_cells(cells)
    }

    /// Emits the ASCII picture format (no trailing padding).
    pub fn to_ascii(&self) -> String {
        let mut s = String::new();
        for i in 0..self.num_rows() {
            let (lo, hi) = self.row_range(i);
            s.extend(std::iter::repeat_n('.', lo));
            s.extend(std::iter::repeat_n('X', hi - lo));
            s.push('\n');
        }
        s
    }

    /// Parses the compact `outer/inner` format, e.g. `5,4,3,3/3,1`.
    pub fn from_compact(text: &str) -> Result<SkewShape> {
        let text = text.trim();
        let (o, i) = text.split_once('/').unwrap_or((text, ""));
        let outer = Partition::new(parse_parts(o)?)?;
        let inner = Partition::new(parse_parts(i)?)?;
        SkewShape::new(outer, inner)
    }

    pub fn to_compact(&self) -> String {
        self.to_string()
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| SkewError::Parse(format!("bad part {p:?}: {e}"))))
        .collect()
}

fn is_contiguous(sorted: &[i64]) -> bool {
    sorted.windows(2).all(|w| w[1] == w[0] + 1)
}

fn join_parts(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", join_parts(&self.outer), join_parts(&self.inner))
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

impl FromStr for SkewShape {
    type Err = SkewError;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('\n') || s.contains('X') || s.contains('.') {
            SkewShape::from_ascii(s)
        } else {
            SkewShape::from_compact(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{composition, partition};

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_translate() {
        let d = shape("5,4,3,3/3,1");
        let moved = SkewShape::from_cells(d.cells().into_iter().map(|(r, c)| (r + 2, c + 7))).unwrap();
        assert_eq!(moved, d);
        assert_eq!(SkewShape::from_cells([(0, 0)]).unwrap(), SkewShape::single_cell());
    }

    #[test]
    fn normalize_trims_empty_rows() {
        assert_eq!(shape("3,3/3"), shape("3/"));
        assert_eq!(shape("3,3/3,1").to_string(), "2/");
        assert_eq!(shape("4,2/2").outer(), &partition![4, 2]);
    }

    #[test]
    fn not_skew() {
        // NW-SE placement of two cells.
        assert!(SkewShape::from_cells([(0, 0), (1, 1)]).is_err());
        // Upside-down L.
        assert!(SkewShape::from_cells([(0, 0), (0, 1), (1, 1)]).is_err());
        // A gap inside a row.
        assert!(SkewShape::from_cells([(0, 0), (0, 2)]).is_err());
        assert!(SkewShape::from_compact("2,3/").is_err());
        assert!(SkewShape::from_compact("2,1/3").is_err());
    }

    #[test]
    fn ribbon_bijection() {
        let d = SkewShape::from_ribbon(&composition![1, 3, 2, 2]);
        assert_eq!(d, shape("5,4,3,1/3,2"));
        assert_eq!(d.to_ribbon().unwrap(), composition![1, 3, 2, 2]);
        assert_eq!(SkewShape::from_ribbon(&composition![4]), shape("4/"));
        assert!(matches!(shape("2,2/").to_ribbon(), Err(SkewError::NotRibbon(_))));
        assert!(matches!(shape("2,1/1").to_ribbon(), Err(SkewError::NotRibbon(_))));
    }

    #[test]
    fn components_of_disjoint_sum() {
        let ascii = "...XX\n..XX.\nXX...\nXX...\n";
        let d = SkewShape::from_ascii(ascii).unwrap();
        assert_eq!(d.components(), vec![shape("2,2/"), shape("3,2/1")]);
        assert_eq!(SkewShape::direct_sum(&d.components()), d);
        assert_eq!(d.to_ascii(), "...XX\n..XX\nXX\nXX\n");
    }

    #[test]
    fn transpose_and_rotate() {
        assert_eq!(shape("3/").transpose(), shape("1,1,1/"));
        assert_eq!(shape("2,2/").transpose(), shape("2,2/"));
        assert_eq!(
            SkewShape::from_ribbon(&composition![1, 3, 2, 2]).rotate180(),
            SkewShape::from_ribbon(&composition![2, 2, 3, 1])
        );
        assert_eq!(shape("3,3/").rotate180(), shape("3,3/"));
    }

    #[test]
    fn empty_shape_is_valid() {
        let e = SkewShape::empty();
        assert_eq!(e.size(), 0);
        assert_eq!(e.transpose(), e);
        assert_eq!(e.rotate180(), e);
        assert!(e.components().is_empty());
        assert_eq!(shape("/"), e);
        assert_eq!(e.to_string(), "/");
    }
}
