use crate::diagrams::SkewShape;

/// `D̂` together with its rows before normalization (empty rows kept).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatDiagram {
    pub shape: SkewShape,
    /// Half-open column ranges, top to bottom; empty rows have `start >= end`.
    pub rows: Vec<(i64, i64)>,
}

/// Half-open column ranges of the rows of `d`, top to bottom.
pub fn row_ranges(d: &SkewShape) -> Vec<(i64, i64)> {
    (0..d.num_rows())
        .map(|i| {
            let (lo, hi) = d.row_range(i);
            (lo as i64, hi as i64)
        })
        .collect()
}

/// `D̂`: the top cell of every column removed.
///
/// Row `i` of `D̂` keeps the columns shared by rows `i` and `i+1` of `D`.
pub fn hat(d: &SkewShape) -> HatDiagram {
    let rows = row_ranges(d);
    let hat_rows: Vec<(i64, i64)> = rows.windows(2).map(|w| (w[0].0.max(w[1].0), w[0].1.min(w[1].1))).collect();
    let cells = hat_rows
        .iter()
        .enumerate()
        .flat_map(|(i, &(lo, hi))| (lo..hi).map(move |c| (i as i64, c)));
    let shape = SkewShape::from_cells(cells).expect("removing column tops keeps a skew diagram");
    HatDiagram { shape, rows: hat_rows }
}

/// `r^{(k)}` of a sequence of rows: columns shared by each window of `k` consecutive rows.
pub fn overlap_composition(rows: &[(i64, i64)], k: usize) -> Vec<usize> {
    if k == 0 || k > rows.len() {
        return Vec::new();
    }
    rows.windows(k)
        .map(|w| {
            let lo = w.iter().map(|r| r.0).max().unwrap();
            let hi = w.iter().map(|r| r.1).min().unwrap();
            (hi - lo).max(0) as usize
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hat_example() {
        let d: SkewShape = "4,4,3,3,2/3,3,1".parse().unwrap();
        let rows = row_ranges(&d);
        let table: Vec<Vec<usize>> = (1..=5).map(|k| overlap_composition(&rows, k)).collect();
        assert_eq!(table, vec![vec![1, 1, 2, 3, 2], vec![1, 0, 2, 2], vec![0, 0, 1], vec![0, 0], vec![0]]);
        let h = hat(&d);
        assert_eq!(h.rows.len(), 4);
        assert_eq!(overlap_composition(&h.rows, 1), vec![1, 0, 2, 2]);
        assert!(h.rows[1].0 >= h.rows[1].1);
        let expected = SkewShape::from_ascii("...X\n.XX.\nXX..").unwrap();
        assert_eq!(h.shape, expected);
        for (k, row) in table.iter().enumerate().skip(1) {
            assert_eq!(&overlap_composition(&h.rows, k), row);
        }
    }

    #[test]
    fn single_row_hat_is_empty() {
        let h = hat(&"4/".parse().unwrap());
        assert!(h.shape.is_empty());
        assert!(h.rows.is_empty());
    }
}
