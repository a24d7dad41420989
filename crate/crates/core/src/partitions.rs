//! Young diagrams: transpose, rectangle complements, containment, enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// The explicit length is kept (so fixed-length outputs such as rectangle
/// complements print with all their zeros), but equality, hashing and
/// ordering only look at the shape, i.e. the parts with trailing zeros removed.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The `rows × cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Parts as stored, including any trailing zeros.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Parts with trailing zeros removed.
    pub fn shape(&self) -> &[usize] {
        let n = self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        &self.parts[..n]
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.shape().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    /// Parts padded with zeros to length `n`; fails if there are more than `n` nonzero parts.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        let shape = self.shape();
        if shape.len() > n {
            return Err(Error::Precondition(format!(
                "partition {self} has more than {n} nonzero parts"
            )));
        }
        let mut v = shape.to_vec();
        v.resize(n, 0);
        Ok(v)
    }

    /// Copy with trailing zeros removed.
    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.shape().to_vec(),
        }
    }

    pub fn transpose(&self) -> Partition {
        let first = self.first();
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// The `(ℓ, m)`-conjugate: complement of the diagram inside the `ℓ × m`
    /// rectangle, rotated by 180° and transposed. The result has exactly `m`
    /// stored parts, each at most `ℓ`.
    pub fn conjugate_lm(&self, l: usize, m: usize) -> Result<Partition> {
        if l == 0 || m == 0 {
            return Err(Error::Precondition(format!(
                "rectangle {l}x{m} must have positive sides"
            )));
        }
        if self.len() > l || self.first() > m {
            return Err(Error::Precondition(format!(
                "partition {self} does not fit in the {l}x{m} rectangle"
            )));
        }
        let parts = (1..=m)
            .map(|j| l - self.parts.iter().filter(|&&p| p >= m - j + 1).count())
            .collect();
        Ok(Partition { parts })
    }

    /// True iff `mu` fits inside `self` row by row.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.shape()
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.get(i))
    }

    /// True iff every part is even.
    pub fn has_even_rows(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.shape().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape().cmp(other.shape())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_err("partition", s))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| parse_err("partition", s))?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `max_rows` parts, each at most `max_part`.
pub fn partitions_of(n: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        rows_left: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer` (including the empty one and `outer` itself).
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition { parts });
            return;
        }
        for p in 0..=cap.min(outer[i]) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let shape = outer.shape();
    let mut out = Vec::new();
    rec(shape, 0, shape.first().copied().unwrap_or(0), &mut Vec::new(), &mut out);
    out
}

/// All partitions fitting in `rows` rows of length at most `cols`.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    subpartitions(&Partition::rectangle(rows, cols))
}

/// Shorthand used throughout the tests and the CLI; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}
