//! Integer partitions, standard Young tableaux, and Young-lattice paths.
//!
//! Diagrams follow the English/Macdonald convention: row index increases
//! downward, column index increases to the right, so the conjugate part
//! `lambda'_s` is the height of column `s`.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A partition: weakly decreasing positive parts. The empty list is the
/// trivial partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidParameter(format!(
                    "parts not weakly decreasing: {} < {}",
                    w[0], w[1]
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("zero part in partition".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts, i.e. `lambda'_1`.
    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Largest part, i.e. `lambda_1` (0 for the empty partition).
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `m_i(lambda)`: the number of parts equal to `i` (requires `i >= 1`).
    pub fn multiplicity(&self, i: u32) -> u32 {
        debug_assert!(i >= 1);
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// `lambda'_s`: the number of parts that are `>= s` (column height).
    /// Returns 0 for `s` beyond the diagram; `s` must be `>= 1`.
    pub fn conjugate_part(&self, s: u32) -> u32 {
        debug_assert!(s >= 1);
        self.parts.iter().filter(|&&p| p >= s).count() as u32
    }

    /// The conjugate partition `(lambda'_1, lambda'_2, ...)`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let parts = (1..=cols).map(|s| self.conjugate_part(s)).collect();
        Partition { parts }
    }

    /// Column indices where one cell can be added and the result is still a
    /// partition: column 1, plus every `s > 1` with
    /// `lambda'_s < lambda'_{s-1}`.
    pub fn addable_columns(&self) -> Vec<u32> {
        let mut cols = vec![1];
        for s in 2..=self.first_part() + 1 {
            if self.conjugate_part(s) < self.conjugate_part(s - 1) {
                cols.push(s);
            }
        }
        cols
    }

    /// Adds one cell in column `s`; errors unless `s` is addable.
    pub fn add_cell(&self, s: u32) -> Result<Partition> {
        if s < 1 {
            return Err(Error::InvalidColumn(s as u64));
        }
        let mut parts = self.parts.clone();
        if s == 1 {
            parts.push(1);
        } else {
            if self.conjugate_part(s) >= self.conjugate_part(s - 1) {
                return Err(Error::InvalidColumn(s as u64));
            }
            let row = self.conjugate_part(s) as usize;
            debug_assert_eq!(parts[row], s - 1);
            parts[row] += 1;
        }
        Ok(Partition { parts })
    }

    /// The column of the one cell by which `next` exceeds `self`, or `None`
    /// if `next` is not `self` plus a single cell.
    pub fn added_column(&self, next: &Partition) -> Option<u32> {
        if next.size() != self.size() + 1 {
            return None;
        }
        if next.parts.len() == self.parts.len() + 1 {
            if next.parts.last() == Some(&1) && next.parts[..self.parts.len()] == self.parts[..] {
                return Some(1);
            }
            return None;
        }
        if next.parts.len() != self.parts.len() {
            return None;
        }
        let mut col = None;
        for (&a, &b) in self.parts.iter().zip(&next.parts) {
            if a != b {
                if b != a + 1 || col.is_some() {
                    return None;
                }
                col = Some(b);
            }
        }
        col
    }

    /// Serialized form: comma-joined parts, `-` for the empty partition.
    pub fn to_compact_string(&self) -> String {
        if self.parts.is_empty() {
            "-".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("bad part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

/// Optional restriction for [`enumerate_partitions`].
#[derive(Clone, Copy, Debug)]
pub enum Constraint {
    /// All parts at most this value.
    MaxPart(u32),
    /// Exactly this many parts.
    NumParts(u32),
}

/// Enumerates every partition of every size `0..=max_size` satisfying the
/// constraint, in size order and descending lexicographic order within a
/// size, each exactly once.
pub fn enumerate_partitions(
    max_size: u64,
    constraint: Option<Constraint>,
) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(move |n| partitions_of(n, constraint).into_iter())
}

/// All partitions of exactly `n` under the constraint, descending
/// lexicographic.
pub fn partitions_of(n: u64, constraint: Option<Constraint>) -> Vec<Partition> {
    let max_part = match constraint {
        Some(Constraint::MaxPart(m)) => m.min(n.try_into().unwrap_or(u32::MAX)),
        _ => n.try_into().unwrap_or(u32::MAX),
    };
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_rec(n, max_part, &mut current, &mut out);
    if let Some(Constraint::NumParts(k)) = constraint {
        out.retain(|p| p.num_parts() == k);
    }
    out
}

fn gen_rec(remaining: u64, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = max_part.min(remaining.try_into().unwrap_or(u32::MAX));
    for part in (1..=top).rev() {
        current.push(part);
        gen_rec(remaining - part as u64, part, current, out);
        current.pop();
    }
}

/// A standard Young tableau: the diagram of `shape` filled with `1..=n`,
/// strictly increasing along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::MalformedTableau("row lengths are not a partition".into()))?;
        let n = shape.size();
        let mut seen = vec![false; n as usize + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e as u64 > n || seen[e as usize] {
                    return Err(Error::MalformedTableau(format!(
                        "entries must be a permutation of 1..={n}"
                    )));
                }
                seen[e as usize] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::MalformedTableau(
                    "rows must strictly increase".into(),
                ));
            }
        }
        for i in 1..rows.len() {
            for j in 0..rows[i].len() {
                if rows[i - 1][j] >= rows[i][j] {
                    return Err(Error::MalformedTableau(
                        "columns must strictly increase".into(),
                    ));
                }
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> u64 {
        self.shape.size()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: u32, col: u32) -> u32 {
        self.rows[row as usize - 1][col as usize - 1]
    }

    /// The gap statistics `h_1..h_k` read off the first column: for `m < k`,
    /// `h_m = T_(m+1,1) - T_(m,1) - 1`, and `h_k = n - T_(k,1)`. Each `h_m`
    /// counts the cells added while the tableau has exactly `m` rows.
    pub fn h_stats(&self) -> Vec<u64> {
        let k = self.rows.len();
        let n = self.size();
        let mut h = Vec::with_capacity(k);
        for m in 0..k {
            let t_m = self.rows[m][0] as u64;
            if m + 1 < k {
                let t_next = self.rows[m + 1][0] as u64;
                h.push(t_next - t_m - 1);
            } else {
                h.push(n - t_m);
            }
        }
        h
    }

    /// The lattice path growing the shape by adding cells in entry order.
    pub fn to_path(&self) -> LatticePath {
        let n = self.size() as usize;
        // position of each entry: (row, col) 0-based
        let mut pos = vec![(0usize, 0usize); n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                pos[e as usize] = (i, j);
            }
        }
        let mut steps = Vec::with_capacity(n + 1);
        let mut current = Partition::empty();
        steps.push(current.clone());
        for e in 1..=n {
            let (_row, col) = pos[e];
            current = current
                .add_cell(col as u32 + 1)
                .expect("valid tableau grows through partitions");
            steps.push(current.clone());
        }
        LatticePath { steps }
    }

    /// Inverse of [`StandardTableau::to_path`].
    pub fn from_path(path: &LatticePath) -> StandardTableau {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (i, pair) in path.steps.windows(2).enumerate() {
            let col = pair[0]
                .added_column(&pair[1])
                .expect("consecutive path steps differ by one cell");
            let entry = i as u32 + 1;
            if col == 1 {
                rows.push(vec![entry]);
            } else {
                let row = pair[0].conjugate_part(col) as usize;
                rows[row].push(entry);
            }
        }
        StandardTableau::new(rows).expect("path growth yields a standard tableau")
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A saturated chain in the Young lattice from the empty partition, each
/// step adding one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Partition>,
}

impl LatticePath {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        match steps.first() {
            Some(first) if first.is_empty() => {}
            _ => {
                return Err(Error::InvalidParameter(
                    "lattice path must start at the empty partition".into(),
                ))
            }
        }
        for pair in steps.windows(2) {
            if pair[0].added_column(&pair[1]).is_none() {
                return Err(Error::InvalidParameter(format!(
                    "consecutive path steps {} -> {} do not differ by one cell",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn last(&self) -> &Partition {
        self.steps
            .last()
            .expect("path contains the empty partition")
    }

    /// Column of the cell added at step `i` (0-based edge index).
    pub fn added_column(&self, i: usize) -> u32 {
        self.steps[i]
            .added_column(&self.steps[i + 1])
            .expect("validated on construction")
    }

    pub fn num_edges(&self) -> usize {
        self.steps.len() - 1
    }
}

/// All standard Young tableaux with `n` cells (any shape), generated by
/// depth-first growth along the Young lattice. Intended for exhaustive
/// checks at small `n`.
pub fn enumerate_tableaux(n: u64) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut steps = vec![Partition::empty()];
    grow(&mut steps, n, &mut out);
    out
}

fn grow(steps: &mut Vec<Partition>, n: u64, out: &mut Vec<StandardTableau>) {
    let current = steps.last().unwrap().clone();
    if current.size() == n {
        let path = LatticePath {
            steps: steps.clone(),
        };
        out.push(StandardTableau::from_path(&path));
        return;
    }
    for s in current.addable_columns() {
        steps.push(current.add_cell(s).unwrap());
        grow(steps, n, out);
        steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
    }

    #[test]
    fn conjugate_is_an_involution_exhaustively() {
        for lam in enumerate_partitions(10, None) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            // sum_i i*m_i = |lambda|, lambda'_1 = number of parts
            let weighted: u64 = (1..=lam.first_part())
                .map(|i| i as u64 * lam.multiplicity(i) as u64)
                .sum();
            assert_eq!(weighted, lam.size());
            assert_eq!(lam.conjugate_part(1), lam.num_parts());
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p(&[4, 3, 2]).multiplicity(3), 1);
        assert_eq!(p(&[1, 1]).multiplicity(1), 2);
        assert_eq!(p(&[2]).multiplicity(1), 0);
    }

    #[test]
    fn addable_columns_examples() {
        assert_eq!(Partition::empty().addable_columns(), vec![1]);
        // lambda' = (3,2,1,1): columns 2,3 strictly drop, 4 is flat, 5 opens
        assert_eq!(p(&[4, 2, 1]).addable_columns(), vec![1, 2, 3, 5]);
        assert_eq!(p(&[1]).addable_columns(), vec![1, 2]);
    }

    #[test]
    fn add_cell_respects_shape() {
        assert_eq!(p(&[1]).add_cell(2).unwrap(), p(&[2]));
        assert_eq!(p(&[1]).add_cell(1).unwrap(), p(&[1, 1]));
        assert!(p(&[4, 2, 1]).add_cell(4).is_err());
        assert!(p(&[1]).add_cell(0).is_err());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let all: Vec<Partition> = enumerate_partitions(2, None).collect();
        assert_eq!(all, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]);
        let singles: Vec<Partition> =
            enumerate_partitions(4, Some(Constraint::NumParts(1))).collect();
        assert_eq!(singles, vec![p(&[1]), p(&[2]), p(&[3]), p(&[4])]);
    }

    /// Independent oracle: the classical recurrence
    /// p(n, k) = p(n-k, k) + p(n, k-1) for partitions of n into parts <= k.
    fn partition_count_oracle(n: u64) -> u64 {
        let n = n as usize;
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn counts_match_recurrence_oracle() {
        assert_eq!(partitions_of(8, None).len() as u64, 22);
        for n in 0..=12 {
            assert_eq!(
                partitions_of(n, None).len() as u64,
                partition_count_oracle(n),
                "partition count mismatch at n={n}"
            );
        }
    }

    #[test]
    fn no_duplicates_in_enumeration() {
        let mut seen = std::collections::HashSet::new();
        for lam in enumerate_partitions(9, None) {
            assert!(seen.insert(lam.clone()), "duplicate {lam}");
        }
    }

    #[test]
    fn compact_serialization_round_trips() {
        assert_eq!(p(&[4, 2, 1]).to_compact_string(), "4,2,1");
        assert_eq!(Partition::empty().to_compact_string(), "-");
        assert_eq!(Partition::parse("4,2,1").unwrap(), p(&[4, 2, 1]));
        assert_eq!(Partition::parse("-").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("0").is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 3, 4], vec![2]]).is_ok());
        // column decreasing
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
        // row not increasing
        assert!(StandardTableau::new(vec![vec![3, 1], vec![2]]).is_err());
        // not a permutation
        assert!(StandardTableau::new(vec![vec![1, 1], vec![2]]).is_err());
        // shape not a partition
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn tableau_to_path_example() {
        let t = StandardTableau::new(vec![vec![1, 3, 4], vec![2]]).unwrap();
        let path = t.to_path();
        let expected = [
            Partition::empty(),
            p(&[1]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[3, 1]),
        ];
        assert_eq!(path.steps(), &expected[..]);
        let single = StandardTableau::new(vec![vec![1]]).unwrap();
        assert_eq!(single.to_path().steps(), &[Partition::empty(), p(&[1])][..]);
    }

    #[test]
    fn path_tableau_round_trip_exhaustive() {
        for n in 0..=6 {
            for t in enumerate_tableaux(n) {
                let path = t.to_path();
                assert_eq!(StandardTableau::from_path(&path), t);
            }
        }
    }

    #[test]
    fn h_stats_examples() {
        let t = StandardTableau::new(vec![vec![1, 3, 5, 6], vec![2, 4, 7], vec![8, 9]]).unwrap();
        assert_eq!(t.h_stats(), vec![0, 5, 1]);

        let column = StandardTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(column.h_stats(), vec![0, 0, 0]);

        for n in 1..=5u32 {
            let row = StandardTableau::new(vec![(1..=n).collect()]).unwrap();
            assert_eq!(row.h_stats(), vec![n as u64 - 1]);
        }
    }

    #[test]
    fn h_stats_sum_to_size_minus_rows() {
        for n in 0..=6 {
            for t in enumerate_tableaux(n) {
                let k = t.rows().len() as u64;
                let total: u64 = t.h_stats().iter().sum();
                assert_eq!(total, t.size() - k);
            }
        }
    }

    #[test]
    fn tableau_counts_are_plausible() {
        // number of SYT of each size 0..=6: 1,1,2,4,10,26,76
        let expected = [1usize, 1, 2, 4, 10, 26, 76];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_tableaux(n as u64).len(), e);
        }
    }

    #[test]
    fn lattice_path_validation() {
        assert!(LatticePath::new(vec![p(&[1])]).is_err());
        assert!(LatticePath::new(vec![Partition::empty(), p(&[2])]).is_err());
        let ok = LatticePath::new(vec![Partition::empty(), p(&[1]), p(&[2])]).unwrap();
        assert_eq!(ok.added_column(1), 2);
        assert_eq!(ok.num_edges(), 2);
    }
}
