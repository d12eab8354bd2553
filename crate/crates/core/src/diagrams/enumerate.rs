use super::SkewShape;

/// All connected skew diagrams with exactly `n` cells, each once, in canonical order.
///
/// Rows are grown from the bottom up: each new row starts weakly east of the row
/// below it, ends weakly east of it, and shares at least one column with it.
pub fn enumerate_connected(n: usize) -> Vec<SkewShape> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Vec<(usize, usize)> = Vec::new();
    for len in 1..=n {
        rows.push((0, len));
        grow(n - len, &mut rows, &mut out);
        rows.pop();
    }
    out.sort();
    out
}

fn grow(remaining: usize, rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewShape>) {
    if remaining == 0 {
        out.push(shape_from_rows_bottom_up(rows));
        return;
    }
    let (lo, hi) = *rows.last().unwrap();
    // New row [a, b) with lo <= a < hi (overlap) and b >= hi.
    for a in lo..hi {
        let min_b = hi.max(a + 1);
        for b in min_b..=a + remaining {
            rows.push((a, b));
            grow(remaining - (b - a), rows, out);
            rows.pop();
        }
    }
}

fn shape_from_rows_bottom_up(rows: &[(usize, usize)]) -> SkewShape {
    let h = rows.len() as i64;
    let cells = rows
        .iter()
        .enumerate()
        .flat_map(|(k, &(a, b))| (a..b).map(move |c| (h - 1 - k as i64, c as i64)));
    SkewShape::from_cells(cells).expect("grown rows form a skew diagram")
}

/// All skew diagrams (connected or not) with exactly `n` cells, in canonical order.
///
/// Each diagram is the direct sum of its connected components, so it is produced
/// exactly once from the ordered tuple of components.
pub fn enumerate_all(n: usize) -> Vec<SkewShape> {
    if n == 0 {
        return vec![SkewShape::empty()];
    }
    let connected: Vec<Vec<SkewShape>> = (0..=n).map(enumerate_connected).collect();
    let mut out = Vec::new();
    let mut parts: Vec<&SkewShape> = Vec::new();
    fn go<'a>(
        rem: usize,
        connected: &'a [Vec<SkewShape>],
        parts: &mut Vec<&'a SkewShape>,
        out: &mut Vec<SkewShape>,
    ) {
        if rem == 0 {
            let owned: Vec<SkewShape> = parts.iter().map(|d| (*d).clone()).collect();
            out.push(SkewShape::direct_sum(&owned));
            return;
        }
        for k in 1..=rem {
            for d in &connected[k] {
                parts.push(d);
                go(rem - k, connected, parts, out);
                parts.pop();
            }
        }
    }
    go(n, &connected, &mut parts, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1), vec![SkewShape::single_cell()]);
        let two = enumerate_connected(2);
        assert_eq!(two.len(), 2);
        assert!(two.contains(&"2/".parse().unwrap()));
        assert!(two.contains(&"1,1/".parse().unwrap()));
    }

    #[test]
    fn all_includes_disconnected() {
        // 2 cells: row, column, and two separated cells.
        assert_eq!(enumerate_all(2).len(), 3);
    }
}
