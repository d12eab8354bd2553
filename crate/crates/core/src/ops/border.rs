use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::diagrams::{Cell, Composition, SkewShape, Step};
use crate::error::{Result, SkewError};

/// Which border the first ribbon traverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Se,
    Nw,
}

/// `θ_i # θ_j` inside a cutting strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HashRibbon {
    /// Content interval `[p, q]` relative to the southwesternmost diagonal.
    Interval(i64, i64),
    /// `p = q + 1`: the empty ribbon, with `s = 1`.
    Empty,
    /// `p > q + 1`: `s = 0`.
    Undefined,
}

/// An ordered decomposition of a diagram into ribbons, each one identified with a
/// content interval of the cutting strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutsideDecomposition {
    strip: Composition,
    intervals: Vec<(i64, i64)>,
    ribbons: Vec<Composition>,
}

impl OutsideDecomposition {
    /// Validates the ribbons `parts` (cell sets in the coordinates of `d.cells()`)
    /// as an outside decomposition of `d` and derives its cutting strip.
    pub fn from_parts(d: &SkewShape, parts: &[Vec<Cell>]) -> Result<Self> {
        let bad = |msg: String| SkewError::InvalidDecomposition(msg);
        let all: HashSet<Cell> = d.cells().into_iter().collect();
        let Some((lo, hi)) = d.content_range() else {
            return if parts.iter().all(|p| p.is_empty()) {
                Ok(OutsideDecomposition { strip: Composition::empty(), intervals: vec![], ribbons: vec![] })
            } else {
                Err(bad("cells outside the diagram".into()))
            };
        };
        let mut owner = BTreeMap::new();
        for (k, part) in parts.iter().enumerate() {
            for &x in part {
                if !all.contains(&x) {
                    return Err(bad(format!("cell {x:?} is not in the diagram")));
                }
                if owner.insert(x, k).is_some() {
                    return Err(bad(format!("cell {x:?} is covered twice")));
                }
            }
        }
        if owner.len() != all.len() {
            return Err(bad("ribbons do not cover the diagram".into()));
        }
        let n_diag = (hi - lo + 1) as usize;
        let mut direction: Vec<Option<Step>> = vec![None; n_diag];
        let mut intervals = Vec::with_capacity(parts.len());
        let mut ribbons = Vec::with_capacity(parts.len());
        for (k, part) in parts.iter().enumerate() {
            let shape = SkewShape::from_cells(part.iter().copied()).map_err(|e| bad(e.to_string()))?;
            let ribbon = shape.to_ribbon().map_err(|_| bad(format!("part {k} is not a ribbon")))?;
            if ribbon.is_empty() {
                return Err(bad(format!("part {k} is empty")));
            }
            let content = |&(r, c): &Cell| c - r;
            let sw = *part.iter().min_by_key(|x| content(x)).unwrap();
            let ne = *part.iter().max_by_key(|x| content(x)).unwrap();
            let on_left_or_bottom = !all.contains(&(sw.0, sw.1 - 1)) || !all.contains(&(sw.0 + 1, sw.1));
            let on_right_or_top = !all.contains(&(ne.0, ne.1 + 1)) || !all.contains(&(ne.0 - 1, ne.1));
            if !on_left_or_bottom || !on_right_or_top {
                return Err(bad(format!("part {k} does not end on the perimeter")));
            }
            for &(r, c) in part {
                let step = if owner.get(&(r - 1, c)) == Some(&k) {
                    Step::Up
                } else if owner.get(&(r, c + 1)) == Some(&k) {
                    Step::Right
                } else if !all.contains(&(r - 1, c)) && all.contains(&(r, c + 1)) {
                    Step::Up
                } else if !all.contains(&(r, c + 1)) && all.contains(&(r - 1, c)) {
                    Step::Right
                } else {
                    // Outer corner: only the top diagonal, whose direction is irrelevant.
                    continue;
                };
                let slot = &mut direction[(c - r - lo) as usize];
                match slot {
                    None => *slot = Some(step),
                    Some(s) if *s != step => {
                        return Err(bad(format!("diagonal {} goes both up and right", c - r)));
                    }
                    _ => {}
                }
            }
            intervals.push((content(&sw) - lo, content(&ne) - lo));
            ribbons.push(ribbon);
        }
        let steps: Vec<Step> = direction[..n_diag - 1]
            .iter()
            .map(|s| s.ok_or_else(|| bad("diagonal without a direction".into())))
            .collect::<Result<_>>()?;
        Ok(OutsideDecomposition { strip: Composition::from_steps(&steps), intervals, ribbons })
    }

    /// The cutting strip `θ(Π)`.
    pub fn strip(&self) -> &Composition {
        &self.strip
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Content interval `[p(θ_k), q(θ_k)]`.
    pub fn interval(&self, k: usize) -> (i64, i64) {
        self.intervals[k]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    /// Shape of `θ_k` as a ribbon.
    pub fn ribbon(&self, k: usize) -> &Composition {
        &self.ribbons[k]
    }

    pub fn ribbons(&self) -> &[Composition] {
        &self.ribbons
    }

    /// `θ_i # θ_j = θ[p(θ_j), q(θ_i)]`.
    pub fn hash_ribbon(&self, i: usize, j: usize) -> HashRibbon {
        let p = self.intervals[j].0;
        let q = self.intervals[i].1;
        match p.cmp(&(q + 1)) {
            std::cmp::Ordering::Less => HashRibbon::Interval(p, q),
            std::cmp::Ordering::Equal => HashRibbon::Empty,
            std::cmp::Ordering::Greater => HashRibbon::Undefined,
        }
    }

    /// The subribbon `θ[p, q]` of the cutting strip, for `0 ≤ p ≤ q`.
    pub fn sub_ribbon(&self, p: i64, q: i64) -> Composition {
        sub_ribbon(&self.strip, p as usize, q as usize)
    }
}

/// Cells `p..=q` (0-based, southwest first) of the ribbon `theta`.
pub fn sub_ribbon(theta: &Composition, p: usize, q: usize) -> Composition {
    let steps = theta.steps();
    Composition::from_steps(&steps[p..q])
}

fn border_cells(cells: &HashSet<Cell>, side: Side) -> Vec<Cell> {
    let d = match side {
        Side::Se => 1,
        Side::Nw => -1,
    };
    cells.iter().copied().filter(|&(r, c)| !cells.contains(&(r + d, c + d))).collect()
}

fn connected_components(cells: &HashSet<Cell>) -> Vec<Vec<Cell>> {
    let mut seen: HashSet<Cell> = HashSet::with_capacity(cells.len());
    let mut out = Vec::new();
    let mut sorted: Vec<Cell> = cells.iter().copied().collect();
    sorted.sort();
    for start in sorted {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some((r, c)) = queue.pop_front() {
            for nb in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)] {
                if cells.contains(&nb) && seen.insert(nb) {
                    comp.push(nb);
                    queue.push_back(nb);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Ribbons of the southeast or northwest decomposition as raw cell sets, each
/// tagged with its recursion depth.
fn peel(cells: HashSet<Cell>, side: Side, depth: usize, out: &mut Vec<(usize, Vec<Cell>)>) {
    let border = border_cells(&cells, side);
    let mut rest = cells;
    for x in &border {
        rest.remove(x);
    }
    out.push((depth, border));
    for comp in connected_components(&rest) {
        peel(comp.into_iter().collect(), side, depth + 1, out);
    }
}

/// The southeast (or northwest) decomposition of a connected diagram.
///
/// The border ribbon comes first; the rest follow by their southwesternmost content,
/// ties broken by recursion depth.
pub fn border_decomposition(d: &SkewShape, side: Side) -> Result<OutsideDecomposition> {
    if d.is_empty() {
        return OutsideDecomposition::from_parts(d, &[]);
    }
    if !d.is_connected() {
        return Err(SkewError::Disconnected);
    }
    let mut parts = Vec::new();
    peel(d.cells().into_iter().collect(), side, 0, &mut parts);
    let first = parts.remove(0).1;
    let min_content = |cells: &Vec<Cell>| cells.iter().map(|&(r, c)| c - r).min().unwrap();
    parts.sort_by_key(|(depth, cells)| (min_content(cells), *depth));
    let mut ordered = vec![first];
    ordered.extend(parts.into_iter().map(|(_, cells)| cells));
    OutsideDecomposition::from_parts(d, &ordered)
}
