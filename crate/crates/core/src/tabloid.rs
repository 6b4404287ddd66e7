//! Compositions, partitions and tabloids.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers.
///
/// Trailing zeros are kept as given, but equality and hashing ignore them;
/// use [`Composition::padded_eq`] when the zero tail matters.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Parts up to the last nonzero one.
    pub fn trimmed(&self) -> &[usize] {
        let end = self.0.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    /// Canonical length: index of the last nonzero part.
    pub fn len(&self) -> usize {
        self.trimmed().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Length including any stored zero tail.
    pub fn padded_len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based); zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|k| self.0.get(k)).copied().unwrap_or(0)
    }

    /// The same composition stored with exactly `len` parts (zero padded).
    pub fn padded(&self, len: usize) -> Composition {
        assert!(len >= self.len(), "cannot pad below canonical length");
        let mut v = self.trimmed().to_vec();
        v.resize(len, 0);
        Composition(v)
    }

    pub fn padded_eq(&self, other: &Composition) -> bool {
        self.0 == other.0
    }

    /// Parts in reverse order, over the stored length.
    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The partition obtained by sorting the nonzero parts.
    pub fn sorted(&self) -> Partition {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Swaps parts `i` and `i + 1` (1-based), padding as needed.
    pub fn swapped(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        v.swap(i - 1, i);
        Composition(v)
    }
}

impl PartialEq for Composition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Composition {}

impl Hash for Composition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl From<Vec<usize>> for Composition {
    fn from(v: Vec<usize>) -> Self {
        Composition(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::Validation("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// How many parts equal the largest part.
    pub fn first_multiplicity(&self) -> usize {
        self.0.iter().take_while(|&&p| Some(&p) == self.0.first()).count()
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = t
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A sequence of rows of positive integers. Rows may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// Number of stored rows, including empty ones.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row lengths, keeping empty rows as zero parts.
    pub fn shape(&self) -> Composition {
        Composition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Letter multiplicities `(#1, #2, ...)` up to the largest letter.
    pub fn content(&self) -> Composition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v - 1] += 1;
        }
        Composition(c)
    }

    /// Rows concatenated from the last to the first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Row (1-based) containing `value`.
    pub fn row_of(&self, value: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&value)).map(|i| i + 1)
    }

    /// Each of `1..=n` appears once (`n` = size) and rows strictly increase.
    pub fn is_row_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
    }

    /// Partition shape with weakly increasing rows and strictly increasing columns.
    pub fn is_semistandard(&self) -> bool {
        let shape_ok =
            self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|p| p[0].len() >= p[1].len());
        shape_ok
            && self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]) && r.iter().all(|&v| v > 0))
            && self.rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(below, above)| above < below))
    }

    /// Row-standard with partition shape.
    pub fn is_rsyt(&self) -> bool {
        self.is_row_standard()
            && self.rows.iter().all(|r| !r.is_empty())
            && self.rows.windows(2).all(|p| p[0].len() >= p[1].len())
    }

    /// Sorts every row in place.
    pub fn sort_rows(&mut self) {
        for r in &mut self.rows {
            r.sort_unstable();
        }
    }

    /// All row-standard tabloids of the given (possibly padded) shape.
    pub fn all_row_standard(shape: &[usize]) -> Vec<Tabloid> {
        let n: usize = shape.iter().sum();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = shape.iter().map(|&k| Vec::with_capacity(k)).collect();
        fn go(v: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tabloid>) {
            if v > n {
                out.push(Tabloid::new(rows.clone()));
                return;
            }
            for i in 0..shape.len() {
                if rows[i].len() < shape[i] {
                    rows[i].push(v);
                    go(v + 1, n, shape, rows, out);
                    rows[i].pop();
                }
            }
        }
        go(1, n, shape, &mut rows, &mut out);
        out
    }

    /// All row-standard tableaux of size `n` (partition shapes only).
    pub fn all_rsyt(n: usize) -> Vec<Tabloid> {
        Partition::all(n).iter().flat_map(|p| Tabloid::all_row_standard(p.parts())).collect()
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({})", join(r))?;
        }
        f.write_str(")")
    }
}

impl FromStr for Tabloid {
    type Err = Error;

    /// Accepts `((3,6),(4),())` or the JSON form `[[3,6],[4],[]]`.
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '[' => '(',
                ']' => ')',
                c => c,
            })
            .collect();
        let inner = norm
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected ((..),(..)), got {s:?}")))?;
        let mut rows = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            rest = rest.strip_prefix(',').unwrap_or(rest);
            if let Some(r) = rest.strip_prefix('∅') {
                rows.push(Vec::new());
                rest = r;
                continue;
            }
            let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected a row in {s:?}")))?;
            let close = body.find(')').ok_or_else(|| Error::Parse(format!("unclosed row in {s:?}")))?;
            let row = body[..close]
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
            rest = &body[close + 1..];
        }
        Ok(Tabloid::new(rows))
    }
}

pub(crate) fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
