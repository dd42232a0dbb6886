use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::shape::SkewShape;
use crate::error::{domain, Error, Result};
use crate::groups::Permutation;

/// A filling of a skew shape by `1..size`, each value used once.
///
/// Values are stored in the row-major order of the shape's boxes. Fillings
/// need not be standard: relabelling a standard tableau can break the
/// row/column conditions, and the cell machinery needs to test that.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    values: Vec<usize>,
    // boxes[k - 1] is the box holding k
    boxes: Vec<(usize, usize)>,
}

/// How `k` and `k + 1` sit relative to each other in a standard tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HookCase {
    SameRow,
    SameColumn,
    Neither,
}

impl Tableau {
    /// `values` lists the entries of the boxes of `shape` in row-major order.
    pub fn new(shape: SkewShape, values: Vec<usize>) -> Result<Self> {
        let cells = shape.cells();
        if cells.len() != values.len() {
            return Err(Error::SizeMismatch(format!(
                "shape {shape} has {} boxes but {} entries were given",
                cells.len(),
                values.len()
            )));
        }
        let n = values.len();
        let mut boxes = vec![(0, 0); n];
        let mut seen = vec![false; n + 1];
        for (&v, &b) in values.iter().zip(&cells) {
            if v == 0 || v > n || seen[v] {
                return domain(format!("entries {values:?} are not a bijection onto 1..{n}"));
            }
            seen[v] = true;
            boxes[v - 1] = b;
        }
        Ok(Self {
            shape,
            values,
            boxes,
        })
    }

    /// A straight-shape tableau from its rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let shape = SkewShape::straight(rows.iter().map(Vec::len).collect())?;
        Self::new(shape, rows.concat())
    }

    /// Builds a tableau from `(row, col) -> value` for boxes with positive
    /// coordinates that form a skew shape.
    pub fn from_boxes(entries: &[((usize, usize), usize)]) -> Result<Self> {
        let cells: Vec<(usize, usize)> = entries.iter().map(|e| e.0).collect();
        let shape = SkewShape::from_cells(&cells)?;
        let lookup: HashMap<(usize, usize), usize> = entries.iter().copied().collect();
        let values = shape.cells().iter().map(|b| lookup[b]).collect();
        Self::new(shape, values)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// Entries in row-major order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The box `(row, col)` holding `k`.
    pub fn box_of(&self, k: usize) -> (usize, usize) {
        self.boxes[k - 1]
    }

    pub fn entry(&self, at: (usize, usize)) -> Option<usize> {
        if !self.shape.contains(at) {
            return None;
        }
        let (r, c) = at;
        let offset: usize = self.shape.lambda()[..r - 1]
            .iter()
            .zip(self.shape.mu())
            .map(|(l, m)| l - m)
            .sum();
        Some(self.values[offset + c - self.shape.mu()[r - 1] - 1])
    }

    /// Rows increase left to right and columns increase top to bottom.
    pub fn is_standard(&self) -> bool {
        self.boxes.iter().enumerate().all(|(k, &(r, c))| {
            let v = k + 1;
            let right_ok = self.entry((r, c + 1)).is_none_or(|x| x > v);
            let below_ok = self.entry((r + 1, c)).is_none_or(|x| x > v);
            right_ok && below_ok
        })
    }

    /// `c(k) = col − row` of the box holding `k`, for every `k`.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes
            .iter()
            .map(|&(r, c)| c as i64 - r as i64)
            .collect()
    }

    pub fn content_vector(&self) -> Result<Vec<i64>> {
        if !self.is_standard() {
            return domain(format!("tableau {self:?} is not standard"));
        }
        Ok(self.contents())
    }

    /// `h(k) = c(k+1) − c(k)` together with how the two boxes are placed.
    pub fn hook_distance(&self, k: usize) -> (i64, HookCase) {
        let (r1, c1) = self.box_of(k);
        let (r2, c2) = self.box_of(k + 1);
        let h = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
        let case = if r1 == r2 {
            HookCase::SameRow
        } else if c1 == c2 {
            HookCase::SameColumn
        } else {
            HookCase::Neither
        };
        (h, case)
    }

    /// Pairs `i < j` with `i` strictly south of `j`.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.boxes.len() {
            for j in i + 1..self.boxes.len() {
                if self.boxes[i].0 > self.boxes[j].0 {
                    count += 1;
                }
            }
        }
        count
    }

    /// `Q^{π⁻¹}`: each entry `i` is replaced by `π⁻¹(i)`.
    pub fn relabel(&self, pi: &Permutation) -> Result<Tableau> {
        if pi.n() != self.size() {
            return Err(Error::SizeMismatch(format!(
                "permutation of {} letters applied to a tableau with {} boxes",
                pi.n(),
                self.size()
            )));
        }
        let inv = pi.inverse();
        let values = self.values.iter().map(|&v| inv.apply(v)).collect();
        Tableau::new(self.shape.clone(), values)
    }

    /// Every row's entries exceed all entries of the rows above.
    pub fn is_row_tableau(&self) -> bool {
        self.boxes.windows(2).all(|w| w[0].0 <= w[1].0)
    }

    /// Every column's entries exceed all entries of the columns to the left.
    pub fn is_column_tableau(&self) -> bool {
        self.boxes.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// The standard filling of `shape` row by row.
    pub fn row_tableau(shape: &SkewShape) -> Tableau {
        let n = shape.size();
        Tableau::new(shape.clone(), (1..=n).collect()).expect("row filling")
    }

    /// The standard filling of `shape` column by column.
    pub fn column_tableau(shape: &SkewShape) -> Tableau {
        let mut cells = shape.cells();
        cells.sort_by_key(|&(r, c)| (c, r));
        let order: HashMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(k, &b)| (b, k + 1)).collect();
        let values = shape.cells().iter().map(|b| order[b]).collect();
        Tableau::new(shape.clone(), values).expect("column filling")
    }

    fn straight_rows(&self) -> Result<Vec<Vec<usize>>> {
        if !self.shape.is_straight() {
            return domain(format!("reading words need a straight shape, got {}", self.shape));
        }
        let mut rows = Vec::new();
        let mut it = self.values.iter();
        for &len in self.shape.lambda() {
            rows.push(it.by_ref().take(len).copied().collect::<Vec<_>>());
        }
        Ok(rows)
    }

    /// Rows right to left, top row first.
    pub fn row_word(&self) -> Result<Permutation> {
        let rows = self.straight_rows()?;
        let word = rows.iter().flat_map(|r| r.iter().rev().copied()).collect();
        Permutation::from_images(word)
    }

    /// Columns top to bottom, leftmost column first.
    pub fn column_word_down(&self) -> Result<Permutation> {
        let rows = self.straight_rows()?;
        let width = rows.first().map_or(0, Vec::len);
        let word = (0..width)
            .flat_map(|c| rows.iter().filter_map(move |r| r.get(c).copied()))
            .collect();
        Permutation::from_images(word)
    }

    /// Columns bottom to top, leftmost column first.
    pub fn column_word_up(&self) -> Result<Permutation> {
        let rows = self.straight_rows()?;
        let width = rows.first().map_or(0, Vec::len);
        let word = (0..width)
            .flat_map(|c| rows.iter().rev().filter_map(move |r| r.get(c).copied()))
            .collect();
        Permutation::from_images(word)
    }

    /// `(row_word, column_word_down, column_word_up)`.
    pub fn reading_words(&self) -> Result<(Permutation, Permutation, Permutation)> {
        Ok((
            self.row_word()?,
            self.column_word_down()?,
            self.column_word_up()?,
        ))
    }

    /// One line per row, `.` for boxes of `μ`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut it = self.values.iter();
        for (r, (&l, &m)) in self.shape.lambda().iter().zip(self.shape.mu()).enumerate() {
            if r > 0 {
                out.push('\n');
            }
            let mut parts: Vec<String> = vec![".".to_string(); m];
            parts.extend(it.by_ref().take(l - m).map(|v| v.to_string()));
            out.push_str(&parts.join(" "));
        }
        out
    }
}

/// All standard fillings of `shape`, sorted by row-major entry sequence.
pub fn enumerate_standard(shape: &SkewShape) -> Result<Vec<Tableau>> {
    let n = shape.size();
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    let cells = shape.cells();
    let index: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    // a box may receive the next value once its left and upper neighbours are filled
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(r, c)| {
            let mut p = Vec::new();
            if c > 1 {
                if let Some(&k) = index.get(&(r, c - 1)) {
                    p.push(k);
                }
            }
            if r > 1 {
                if let Some(&k) = index.get(&(r - 1, c)) {
                    p.push(k);
                }
            }
            p
        })
        .collect();

    fn fill(next: usize, n: usize, values: &mut Vec<usize>, preds: &[Vec<usize>], out: &mut Vec<Vec<usize>>) {
        if next > n {
            out.push(values.clone());
            return;
        }
        for k in 0..n {
            if values[k] == 0 && preds[k].iter().all(|&p| values[p] != 0) {
                values[k] = next;
                fill(next + 1, n, values, preds, out);
                values[k] = 0;
            }
        }
    }

    let mut fillings = Vec::new();
    fill(1, n, &mut vec![0; n], &preds, &mut fillings);
    fillings.sort();
    fillings
        .into_iter()
        .map(|v| Tableau::new(shape.clone(), v))
        .collect()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.to_text().lines().map(|l| format!("[{l}]")).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Rows are separated by newlines or `/`; entries by spaces or commas;
/// `.` marks a box of `μ`.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let rows = s.split(['\n', '/']).map(str::trim).filter(|r| !r.is_empty());
        for (r, row) in rows.enumerate() {
            let toks = row.split([' ', ',']).filter(|t| !t.is_empty());
            for (c, tok) in toks.enumerate() {
                if tok == "." {
                    continue;
                }
                let v = tok
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?;
                entries.push(((r + 1, c + 1), v));
            }
        }
        if entries.is_empty() {
            return Err(Error::EmptyShape);
        }
        Tableau::from_boxes(&entries)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    entries: Vec<[usize; 3]>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self
            .shape
            .cells()
            .iter()
            .zip(&self.values)
            .map(|(&(r, c), &v)| [r, c, v])
            .collect();
        TableauJson {
            lambda: self.shape.lambda().to_vec(),
            mu: self.shape.mu().iter().copied().filter(|&m| m > 0).collect(),
            entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        let shape = SkewShape::new(raw.lambda, raw.mu).map_err(serde::de::Error::custom)?;
        let lookup: HashMap<(usize, usize), usize> =
            raw.entries.iter().map(|e| ((e[0], e[1]), e[2])).collect();
        let values = shape
            .cells()
            .iter()
            .map(|b| lookup.get(b).copied().ok_or_else(|| serde::de::Error::custom("missing box")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Tableau::new(shape, values).map_err(serde::de::Error::custom)
    }
}
