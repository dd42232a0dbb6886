use super::tableau::Tableau;
use crate::error::{domain, Error, Result};

/// Consecutive differences `(v_2 − v_1, …, v_n − v_{n−1})`.
pub fn derived(v: &[i64]) -> Result<Vec<i64>> {
    if v.len() < 2 {
        return domain(format!("derived vector needs at least two entries, got {}", v.len()));
    }
    Ok(v.windows(2).map(|w| w[1] - w[0]).collect())
}

/// First pair `i < j` (1-based) with `c_i = c_j` lacking both `c_i + 1` and
/// `c_i − 1` strictly between them.
pub fn content_violation(c: &[i64]) -> Option<(usize, usize)> {
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c[i] != c[j] {
                continue;
            }
            let between = &c[i + 1..j];
            let up = between.contains(&(c[i] + 1));
            let down = between.contains(&(c[i] - 1));
            if !(up && down) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

pub fn is_content_vector(c: &[i64]) -> bool {
    content_violation(c).is_none()
}

/// A standard skew tableau whose content vector is `c`.
///
/// Letters are placed one at a time. If the new content already occurs, the
/// letter goes diagonally below the last box of that content. Otherwise the
/// boxes of larger content may be slid along their diagonals (which keeps
/// their contents) until the new box fits between the two groups.
pub fn tableau_from_content(c: &[i64]) -> Result<Tableau> {
    if let Some((i, j)) = content_violation(c) {
        return Err(Error::InvalidContentVector { i, j });
    }
    if c.is_empty() {
        return Err(Error::EmptyShape);
    }
    // signed coordinates (row, col) with col − row = content
    let mut boxes: Vec<(i64, i64)> = Vec::with_capacity(c.len());
    for (k, &cn) in c.iter().enumerate() {
        if k == 0 {
            boxes.push((0, cn));
            continue;
        }
        if let Some(last) = (0..k).rev().find(|&m| c[m] == cn) {
            let (r, col) = boxes[last];
            boxes.push((r + 1, col + 1));
            continue;
        }
        let above: Vec<usize> = (0..k).filter(|&m| c[m] > cn).collect();
        let below: Vec<usize> = (0..k).filter(|&m| c[m] < cn).collect();
        let reach = 2 * c.len() as i64 + 4;
        let shifts: Vec<i64> = if above.is_empty() || below.is_empty() {
            vec![0]
        } else {
            std::iter::once(0)
                .chain((1..=reach).flat_map(|d| [-d, d]))
                .collect()
        };
        let mut placed = None;
        'search: for d in shifts {
            let mut trial = boxes.clone();
            for &m in &above {
                trial[m].0 += d;
                trial[m].1 += d;
            }
            let rmin = trial.iter().map(|b| b.0).min().unwrap();
            let rmax = trial.iter().map(|b| b.0).max().unwrap();
            for r in rmin - 1..=rmax + 1 {
                trial.push((r, r + cn));
                if is_standard_placement(&trial) {
                    placed = Some(trial);
                    break 'search;
                }
                trial.pop();
            }
        }
        boxes = placed.ok_or_else(|| {
            Error::Domain(format!("no placement found for letter {} of {c:?}", k + 1))
        })?;
    }
    to_tableau(&boxes)
}

/// Whether the boxes form a skew shape in which the filling `k ↦ boxes[k-1]`
/// is standard.
fn is_standard_placement(boxes: &[(i64, i64)]) -> bool {
    to_tableau(boxes).is_ok_and(|q| q.is_standard())
}

/// Slides the boxes diagonally into the positive quadrant, which keeps
/// every content, and reads off the tableau.
fn to_tableau(boxes: &[(i64, i64)]) -> Result<Tableau> {
    let rmin = boxes.iter().map(|b| b.0).min().unwrap();
    let cmin = boxes.iter().map(|b| b.1).min().unwrap();
    let d = (1 - rmin).max(1 - cmin);
    let entries: Vec<((usize, usize), usize)> = boxes
        .iter()
        .enumerate()
        .map(|(k, &(r, c))| (((r + d) as usize, (c + d) as usize), k + 1))
        .collect();
    Tableau::from_boxes(&entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_standard, SkewShape};

    #[test]
    fn derived_examples() {
        assert_eq!(derived(&[0, 1, 2, -1, 0]).unwrap(), vec![1, 1, -3, 1]);
        assert_eq!(derived(&[4, 4, 4]).unwrap(), vec![0, 0]);
        assert_eq!(derived(&[0, 2, -1]).unwrap(), vec![2, -3]);
        assert!(derived(&[1]).is_err());
    }

    #[test]
    fn content_vector_examples() {
        assert!(is_content_vector(&[0, 1, -1, 0]));
        assert!(!is_content_vector(&[0, 0]));
        assert!(!is_content_vector(&[0, 1, 0]));
        assert_eq!(content_violation(&[0, 1, 0]), Some((1, 3)));
    }

    #[test]
    fn construction_examples() {
        let q = tableau_from_content(&[0, 1, -1, 0]).unwrap();
        assert_eq!(q.to_text(), "1 2\n3 4");
        let q = tableau_from_content(&[0, -2, 1]).unwrap();
        assert!(q.is_standard());
        assert_eq!(q.contents(), vec![0, -2, 1]);
        assert_eq!(q.shape().to_string(), "(3,3,1)/(3,1)");
        assert_eq!(tableau_from_content(&[0]).unwrap().to_text(), "1");
        assert_eq!(
            tableau_from_content(&[0, 1, 0]),
            Err(Error::InvalidContentVector { i: 1, j: 3 })
        );
    }

    #[test]
    fn skew_detection() {
        assert!(is_standard_placement(&[(0, 0), (0, 1), (1, 0)]));
        assert!(!is_standard_placement(&[(0, 0), (1, 1)]));
        assert!(is_standard_placement(&[(1, 0), (0, 1)]));
        // two letters in one column, larger on top
        assert!(!is_standard_placement(&[(1, 0), (0, 0)]));
    }

    #[test]
    fn round_trip_over_all_small_tableaux() {
        for n in 1..=6 {
            for shape in SkewShape::all_of_size(n) {
                for q in enumerate_standard(&shape).unwrap() {
                    let c = q.content_vector().unwrap();
                    assert!(is_content_vector(&c), "{q:?}");
                    let back = tableau_from_content(&c).unwrap();
                    assert!(back.is_standard());
                    assert_eq!(back.contents(), c, "{q:?}");
                }
            }
        }
    }

    #[test]
    fn every_content_vector_is_realized() {
        // exhaustive over short vectors with small entries
        for n in 1..=6u32 {
            let total = 7i64.pow(n);
            for code in 0..total {
                let mut x = code;
                let c: Vec<i64> = (0..n)
                    .map(|_| {
                        let d = x % 7 - 3;
                        x /= 7;
                        d
                    })
                    .collect();
                if !is_content_vector(&c) {
                    continue;
                }
                let q = tableau_from_content(&c).unwrap_or_else(|e| panic!("{c:?}: {e}"));
                assert!(q.is_standard());
                assert_eq!(q.contents(), c);
            }
        }
    }
}
