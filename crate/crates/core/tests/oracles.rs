//! Library results checked against independent brute-force computations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use skewlab::diagrams::{enumerate_all, enumerate_connected};
use skewlab::invariants::{fingerprint, frobenius_rank, overlaps};
use skewlab::symfunc::{character, kostka_number, principal_eval, z_nu};
use skewlab::{Cell, Composition, Partition, SkewShape};

/// Diagrams built row by row: each row is a column interval, and consecutive rows
/// must shift weakly left at both ends with no empty column between them.
fn brute_diagrams(n: usize, connected: bool) -> BTreeSet<SkewShape> {
    fn extend(
        rows: &mut Vec<(i64, i64)>,
        remaining: usize,
        connected: bool,
        out: &mut BTreeSet<SkewShape>,
    ) {
        if remaining == 0 {
            let cells = rows.iter().enumerate().flat_map(|(r, &(a, b))| (a..b).map(move |c| (r as i64, c)));
            out.insert(SkewShape::from_cells(cells).expect("rows form a skew diagram"));
            return;
        }
        let &(a, b) = rows.last().unwrap();
        for len in 1..=remaining as i64 {
            // Next row [a2, a2 + len) sits below: a2 <= a, a2 + len <= b, and a2 + len >= a.
            let lo = a - len;
            for a2 in lo..=a {
                let b2 = a2 + len;
                if b2 > b || (connected && b2 == a) {
                    continue;
                }
                rows.push((a2, b2));
                extend(rows, remaining - len as usize, connected, out);
                rows.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for first in 1..=n {
        let mut rows = vec![(0, first as i64)];
        extend(&mut rows, n - first, connected, &mut out);
    }
    out
}

#[test]
fn enumeration_matches_row_by_row_construction() {
    let mut connected_counts = Vec::new();
    let mut all_counts = Vec::new();
    for n in 1..=9 {
        let connected: BTreeSet<SkewShape> = enumerate_connected(n).into_iter().collect();
        let all: BTreeSet<SkewShape> = enumerate_all(n).into_iter().collect();
        assert_eq!(connected.len(), enumerate_connected(n).len(), "duplicates at n={n}");
        assert_eq!(connected, brute_diagrams(n, true), "connected, n={n}");
        assert_eq!(all, brute_diagrams(n, false), "all, n={n}");
        assert!(connected.iter().all(|d| d.components().len() == 1));
        connected_counts.push(connected.len());
        all_counts.push(all.len());
    }
    assert_eq!(connected_counts, vec![1, 2, 4, 9, 20, 46, 105, 242, 557]);
    assert_eq!(all_counts, vec![1, 3, 9, 28, 87, 272, 850, 2659, 8318]);
}

/// Counts column-strict fillings of `d`, optionally with a prescribed content.
fn count_tableaux(d: &SkewShape, max_entry: usize, content: Option<&[usize]>) -> u64 {
    fn go(
        cells: &[Cell],
        i: usize,
        filling: &mut Vec<usize>,
        max_entry: usize,
        used: &mut Vec<usize>,
        content: Option<&[usize]>,
    ) -> u64 {
        if i == cells.len() {
            return match content {
                Some(c) => u64::from(used[..c.len()] == *c),
                None => 1,
            };
        }
        let (r, c) = cells[i];
        let left = cells[..i].iter().position(|&x| x == (r, c - 1)).map(|j| filling[j]).unwrap_or(1);
        let above = cells[..i].iter().position(|&x| x == (r - 1, c)).map(|j| filling[j] + 1).unwrap_or(1);
        let mut total = 0;
        for v in left.max(above)..=max_entry {
            if let Some(cont) = content {
                if used[v - 1] >= cont[v - 1] {
                    continue;
                }
            }
            filling.push(v);
            used[v - 1] += 1;
            total += go(cells, i + 1, filling, max_entry, used, content);
            used[v - 1] -= 1;
            filling.pop();
        }
        total
    }
    let mut cells = d.cells();
    cells.sort();
    go(&cells, 0, &mut Vec::new(), max_entry, &mut vec![0; max_entry], content)
}

#[test]
fn principal_specialization_counts_tableaux() {
    for n in 1..=6 {
        for d in enumerate_all(n) {
            let p = principal_eval(&fingerprint(&d));
            for t in 1..=4 {
                assert_eq!(p.eval(t as i64), BigInt::from(count_tableaux(&d, t, None)), "{} at t={t}", d.to_compact());
            }
        }
    }
}

#[test]
fn kostka_numbers_count_tableaux() {
    for n in 1..=6 {
        let contents = Composition::all(n);
        for d in enumerate_connected(n) {
            for mu in &contents {
                let expected = count_tableaux(&d, mu.len(), Some(mu.parts()));
                assert_eq!(kostka_number(&d, mu.parts()), BigInt::from(expected), "{} {:?}", d.to_compact(), mu);
            }
        }
    }
}

#[test]
fn schur_coefficients_from_character_orthogonality() {
    for n in 1..=6 {
        let shapes = Partition::all(n);
        for d in enumerate_all(n) {
            let fp = fingerprint(&d);
            for lambda in &shapes {
                let straight = SkewShape::straight(lambda.clone());
                // <s_D, s_λ> = Σ_ν χ^D(ν) χ^λ(ν) / z_ν, accumulated over the common denominator n!.
                let factorial: BigInt = (1..=n).map(BigInt::from).product();
                let mut sum = BigInt::zero();
                for nu in &shapes {
                    let term = character(&d, nu).unwrap() * character(&straight, nu).unwrap();
                    sum += term * (&factorial / z_nu(nu));
                }
                assert_eq!(sum / &factorial, fp.coeff(lambda), "{} at {:?}", d.to_compact(), lambda);
            }
        }
    }
}

/// Fewest ribbons partitioning a set of cells.
fn min_ribbon_cover(cells: &[Cell]) -> usize {
    let Some((&first, rest)) = cells.split_first() else { return 0 };
    let mut best = usize::MAX;
    for mask in 0u32..(1 << rest.len()) {
        let piece = std::iter::once(first).chain(rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| *c));
        let Ok(piece) = SkewShape::from_cells(piece) else { continue };
        if piece.is_connected() && piece.is_ribbon() {
            let left: Vec<Cell> = rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, c)| *c).collect();
            best = best.min(1 + min_ribbon_cover(&left));
        }
    }
    best
}

#[test]
fn rank_is_fewest_ribbons() {
    for n in 1..=6 {
        for d in enumerate_connected(n) {
            let rank = frobenius_rank(&d);
            assert_eq!(rank, min_ribbon_cover(&d.cells()), "{}", d.to_compact());
            assert_eq!(principal_eval(&fingerprint(&d)).lowest_degree(), Some(rank));
        }
    }
}

#[test]
fn rectangle_counts_by_inspection() {
    for n in 1..=7 {
        for d in enumerate_all(n) {
            let p = overlaps(&d);
            for (k, row) in p.rect_counts.iter().enumerate() {
                for (l, &count) in row.iter().enumerate() {
                    let (k, l) = (k as i64 + 1, l as i64 + 1);
                    let direct = d
                        .cells()
                        .iter()
                        .filter(|&&(r, c)| (r..r + k).all(|i| (c..c + l).all(|j| d.contains_cell((i, j)))))
                        .count();
                    assert_eq!(count, direct, "{} {k}x{l}", d.to_compact());
                }
            }
        }
    }
}
