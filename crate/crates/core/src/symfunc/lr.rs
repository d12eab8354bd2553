use std::collections::HashMap;

use num_bigint::BigInt;

use super::vector::SchurVector;
use crate::diagrams::{Partition, SkewShape};

/// A picture of a diagram: a column-strict tableau whose entry `r` records a cell of
/// row `r` (1-based, top to bottom) of the diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Picture {
    pub rows: Vec<Vec<usize>>,
}

impl Picture {
    /// `λ(T)`.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len()).collect())
    }
}

/// Column ranges `[a, b)` of the rows of `d`, top to bottom.
fn rows_of(d: &SkewShape) -> Vec<(usize, usize)> {
    (0..d.num_rows()).map(|i| d.row_range(i)).collect()
}

/// One way of adding the entries of a row of `D` to the tableau: how many entries
/// go into each tableau row, and the tableau row of each `D` cell (right to left).
struct Strip {
    added: Vec<usize>,
    /// `rows_of_cells[k]` is the tableau row receiving the `k`-th cell from the right.
    rows_of_cells: Vec<u8>,
}

/// All horizontal strips of size `len` on top of `nu` compatible with the column
/// condition: `limits[k]` (if any) is the tableau row that the `k`-th cell from the
/// right must lie strictly below.
fn strips(nu: &[u8], len: usize, limits: &[u8]) -> Vec<Strip> {
    let l = nu.len();
    let mut out = Vec::new();
    let mut added = vec![0usize; l + 1];
    let mut cells: Vec<u8> = Vec::with_capacity(len);
    // Leftmost strip cells (the rightmost cells of the D row) sit in the lowest rows.
    fn go(
        i: isize,
        remaining: usize,
        nu: &[u8],
        limits: &[u8],
        added: &mut Vec<usize>,
        cells: &mut Vec<u8>,
        out: &mut Vec<Strip>,
    ) {
        if i < 0 {
            if remaining == 0 {
                out.push(Strip { added: added.clone(), rows_of_cells: cells.clone() });
            }
            return;
        }
        let row = i as usize;
        let cap = if row == 0 { remaining } else { (nu[row - 1] - nu.get(row).copied().unwrap_or(0)) as usize };
        let max = cap.min(remaining);
        let min = if row == 0 { remaining } else { 0 };
        let base = cells.len();
        let mut s = 0;
        loop {
            if s >= min {
                added[row] = s;
                go(i - 1, remaining - s, nu, limits, added, cells, out);
            }
            if s == max {
                break;
            }
            let k = base + s;
            if k < limits.len() && row as u8 <= limits[k] {
                break;
            }
            cells.push(row as u8);
            s += 1;
        }
        cells.truncate(base);
        added[row] = 0;
    }
    go(l as isize, len, nu, limits, &mut added, &mut cells, &mut out);
    out
}

fn apply(nu: &[u8], added: &[usize]) -> Vec<u8> {
    let mut next: Vec<u8> = (0..added.len()).map(|i| nu.get(i).copied().unwrap_or(0) + added[i] as u8).collect();
    while next.last() == Some(&0) {
        next.pop();
    }
    next
}

/// Column condition inputs for row `r`: the tableau rows of the cells of row `r-1`
/// lying above cells of row `r`, indexed by position from the right end of row `r`.
fn limits_for(rows: &[(usize, usize)], r: usize, above: &[u8]) -> Vec<u8> {
    if r == 0 {
        return Vec::new();
    }
    let (a_prev, _) = rows[r - 1];
    let (_, b) = rows[r];
    // Overlap columns [a_prev, b); `above` is indexed by column - a_prev.
    (0..b.saturating_sub(a_prev)).map(|k| above[b - 1 - k - a_prev]).collect()
}

/// Tableau rows of the cells of row `r` above row `r+1`, indexed by column - a_r.
fn carried(rows: &[(usize, usize)], r: usize, strip: &Strip) -> Vec<u8> {
    let Some(&(_, b_next)) = rows.get(r + 1) else { return Vec::new() };
    let (a, b) = rows[r];
    (a..b_next.max(a)).map(|c| strip.rows_of_cells[b - 1 - c]).collect()
}

/// `s_D` expanded in Schur functions by counting pictures.
pub fn schur_expand_lr(d: &SkewShape) -> SchurVector {
    let rows = rows_of(d);
    let mut states: HashMap<(Vec<u8>, Vec<u8>), u128> = HashMap::new();
    states.insert((Vec::new(), Vec::new()), 1);
    for r in 0..rows.len() {
        let len = rows[r].1 - rows[r].0;
        let mut next: HashMap<(Vec<u8>, Vec<u8>), u128> = HashMap::with_capacity(states.len() * 2);
        for ((nu, above), count) in states {
            let limits = limits_for(&rows, r, &above);
            for strip in strips(&nu, len, &limits) {
                let key = (apply(&nu, &strip.added), carried(&rows, r, &strip));
                let slot = next.entry(key).or_insert(0);
                *slot = slot.checked_add(count).expect("picture count overflow");
            }
        }
        states = next;
    }
    let mut out = SchurVector::zero();
    for ((nu, _), count) in states {
        out.add_term(Partition::from_unsorted(nu.into_iter().map(usize::from).collect()), BigInt::from(count));
    }
    out
}

/// All pictures of `d`, sorted.
pub fn pictures(d: &SkewShape) -> Vec<Picture> {
    let rows = rows_of(d);
    let mut out = Vec::new();
    fn go(rows: &[(usize, usize)], r: usize, tableau: &mut Vec<Vec<usize>>, above: &[u8], out: &mut Vec<Picture>) {
        if r == rows.len() {
            out.push(Picture { rows: tableau.clone() });
            return;
        }
        let nu: Vec<u8> = tableau.iter().map(|row| row.len() as u8).collect();
        let limits = limits_for(rows, r, above);
        for strip in strips(&nu, rows[r].1 - rows[r].0, &limits) {
            let saved = tableau.clone();
            if strip.added.len() > tableau.len() && strip.added[tableau.len()] > 0 {
                tableau.push(Vec::new());
            }
            for (i, &k) in strip.added.iter().enumerate() {
                if let Some(row) = tableau.get_mut(i) { row.extend(std::iter::repeat_n(r + 1, k)) }
            }
            go(rows, r + 1, tableau, &carried(rows, r, &strip), out);
            *tableau = saved;
        }
    }
    go(&rows, 0, &mut Vec::new(), &[], &mut out);
    out.sort();
    out
}

/// `s_λ · h_r`: horizontal strips of size `r` added to `λ`.
pub fn pieri(lambda: &Partition, r: usize) -> Vec<Partition> {
    let nu: Vec<u8> = lambda.parts().iter().map(|&p| p as u8).collect();
    strips(&nu, r, &[])
        .into_iter()
        .map(|s| Partition::from_unsorted(apply(&nu, &s.added).into_iter().map(usize::from).collect()))
        .collect()
}

/// Product of two Schur expansions.
pub fn schur_multiply(a: &SchurVector, b: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero();
    for (la, ca) in a.iter() {
        for (lb, cb) in b.iter() {
            let c = ca * cb;
            for (nu, k) in multiply_basis(la, lb).iter() {
                out.add_term(nu.clone(), &c * k);
            }
        }
    }
    out
}

/// `s_λ s_μ`, through the diagram `λ ⊕ μ` (or Pieri when a factor is a single row).
fn multiply_basis(la: &Partition, lb: &Partition) -> SchurVector {
    if la.is_empty() {
        return SchurVector::basis(lb.clone());
    }
    if lb.is_empty() {
        return SchurVector::basis(la.clone());
    }
    let (big, small) = if la.len() == 1 { (lb, la) } else { (la, lb) };
    if small.len() == 1 {
        return pieri(big, small.part(0)).into_iter().map(|p| (p, BigInt::from(1))).collect();
    }
    let d = SkewShape::direct_sum(&[SkewShape::straight(la.clone()), SkewShape::straight(lb.clone())]);
    schur_expand_lr(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn lr_example() {
        let d = shape("4,4,3,3,2/3,3,1");
        let expected = SchurVector::from_terms([
            (partition![3, 2, 2, 1, 1], 1),
            (partition![3, 3, 1, 1, 1], 1),
            (partition![3, 3, 2, 1], 2),
            (partition![3, 3, 3], 1),
            (partition![4, 2, 2, 1], 1),
            (partition![4, 3, 1, 1], 1),
            (partition![4, 3, 2], 2),
            (partition![4, 4, 1], 1),
        ]);
        assert_eq!(schur_expand_lr(&d), expected);
        let pics = pictures(&d);
        assert_eq!(pics.len(), 10);
        let mut listed = vec![
            vec![vec![1, 3, 4], vec![2, 4], vec![3, 5], vec![4], vec![5]],
            vec![vec![1, 3, 4], vec![2, 4, 5], vec![3], vec![4], vec![5]],
            vec![vec![1, 3, 4], vec![2, 4, 5], vec![3, 5], vec![4]],
            vec![vec![1, 3, 3], vec![2, 4, 4], vec![4, 5], vec![5]],
            vec![vec![1, 3, 3], vec![2, 4, 4], vec![4, 5, 5]],
            vec![vec![1, 3, 3, 4], vec![2, 4], vec![4, 5], vec![5]],
            vec![vec![1, 3, 3, 4], vec![2, 4, 5], vec![4], vec![5]],
            vec![vec![1, 3, 3, 4], vec![2, 4, 5], vec![4, 5]],
            vec![vec![1, 3, 3, 4], vec![2, 4, 4], vec![5, 5]],
            vec![vec![1, 3, 3, 4], vec![2, 4, 4, 5], vec![5]],
        ];
        listed.sort();
        let got: Vec<Vec<Vec<usize>>> = pics.into_iter().map(|p| p.rows).collect();
        assert_eq!(got, listed);
    }

    #[test]
    fn straight_shapes_are_basis_elements() {
        for lam in Partition::all(6) {
            assert_eq!(schur_expand_lr(&SkewShape::straight(lam.clone())), SchurVector::basis(lam));
        }
        assert_eq!(schur_expand_lr(&SkewShape::empty()), SchurVector::one());
    }

    #[test]
    fn products() {
        let s1 = SchurVector::basis(partition![1]);
        assert_eq!(
            schur_multiply(&s1, &s1),
            SchurVector::from_terms([(partition![2], 1), (partition![1, 1], 1)])
        );
        let s21 = SchurVector::basis(partition![2, 1]);
        assert_eq!(schur_multiply(&SchurVector::one(), &s21), s21);
        // s21 * s21 = s42 + s411 + s33 + 2 s321 + s3111 + s222 + s2211
        let sq = schur_multiply(&s21, &s21);
        assert_eq!(sq.coeff(&partition![3, 2, 1]), BigInt::from(2));
        assert_eq!(sq.len(), 7);
        assert_eq!(pieri(&partition![2, 1], 2).len(), 4);
    }
}
