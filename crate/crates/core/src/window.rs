//! Window notation for affine permutations and partial permutations.
//!
//! A [`Window`] of period `n` stores `w(1), ..., w(n)`, each possibly absent.
//! The periodic extension `w(i + n) = w(i) + n` is implicit. A window is
//! *total* when every entry is present; total windows are exactly the
//! elements of the extended affine symmetric group.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Representative of `v` modulo `n` in `[1, n]`.
pub fn residue(v: i64, n: usize) -> i64 {
    (v - 1).rem_euclid(n as i64) + 1
}

/// A point `(x, w(x))` of the graph of a partial permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ball {
    pub x: i64,
    pub y: i64,
}

impl Ball {
    pub fn new(x: i64, y: i64) -> Self {
        Ball { x, y }
    }

    /// The ball moved by `k` periods along the diagonal.
    pub fn translate(self, k: i64, n: usize) -> Self {
        let s = k * n as i64;
        Ball { x: self.x + s, y: self.y + s }
    }

    /// `self` strictly northwest of `other`: a step of a path.
    pub fn precedes(self, other: Ball) -> bool {
        self.x < other.x && self.y < other.y
    }

    /// `self <=_SW other`.
    pub fn southwest_of(self, other: Ball) -> bool {
        self.x >= other.x && self.y <= other.y
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Smallest `k` such that the translate of `b` by `k` periods comes strictly
/// after `a` along a path.
pub fn next_offset(a: Ball, b: Ball, n: usize) -> i64 {
    let n = n as i64;
    let kx = (a.x - b.x).div_euclid(n) + 1;
    let ky = (a.y - b.y).div_euclid(n) + 1;
    kx.max(ky)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Window {
    n: usize,
    entries: Vec<Option<i64>>,
}

impl Window {
    pub fn new(entries: Vec<Option<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Validation("window must have period at least 1".into()));
        }
        let mut seen = HashSet::new();
        for v in entries.iter().flatten() {
            if !seen.insert(residue(*v, n)) {
                return Err(Error::Validation(format!("entries collide modulo {n} at residue {}", residue(*v, n))));
            }
        }
        Ok(Window { n, entries })
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().copied().map(Some).collect())
    }

    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "period must be positive");
        Window { n, entries: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        Window { n, entries: (1..=n as i64).map(Some).collect() }
    }

    /// The shift element `[2, 3, ..., n + 1]`.
    pub fn omega(n: usize) -> Self {
        Window { n, entries: (2..=n as i64 + 1).map(Some).collect() }
    }

    /// Builds a window from balls anywhere in the plane; each ball is
    /// translated into the fundamental window.
    pub fn from_balls(n: usize, balls: impl IntoIterator<Item = Ball>) -> Result<Self> {
        let mut entries = vec![None; n];
        for b in balls {
            let pos = residue(b.x, n);
            let shift = b.x - pos;
            let slot = &mut entries[(pos - 1) as usize];
            if slot.is_some() {
                return Err(Error::Validation(format!("two balls share position {pos}")));
            }
            *slot = Some(b.y - shift);
        }
        Self::new(entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Option<i64>] {
        &self.entries
    }

    /// Entry at window position `pos` in `[1, n]`.
    pub fn get(&self, pos: usize) -> Option<i64> {
        self.entries.get(pos.checked_sub(1)?).copied().flatten()
    }

    /// Value of the periodic extension at any integer.
    pub fn at(&self, x: i64) -> Option<i64> {
        let pos = residue(x, self.n);
        self.entries[(pos - 1) as usize].map(|v| v + (x - pos))
    }

    pub fn is_total(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.iter().all(Option::is_none)
    }

    /// Number of present entries.
    pub fn density(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// Values of a total window.
    pub fn values(&self) -> Result<Vec<i64>> {
        self.entries.iter().map(|e| e.ok_or(Error::NotTotal)).collect()
    }

    /// Present positions in increasing order.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().enumerate().filter_map(|(i, e)| e.map(|_| i + 1))
    }

    /// Balls with `x` in `[1, n]`, ordered by `x`.
    pub fn balls(&self) -> Vec<Ball> {
        self.entries.iter().enumerate().filter_map(|(i, e)| e.map(|v| Ball::new(i as i64 + 1, v))).collect()
    }

    /// Residues of the present values, ascending.
    pub fn image_residues(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.entries.iter().flatten().map(|&v| residue(v, self.n) as usize).collect();
        r.sort_unstable();
        r
    }

    /// Keeps only the entries at positions in `keep`; everything else becomes absent.
    pub fn restrict(&self, keep: &[usize]) -> Window {
        let entries =
            self.entries.iter().enumerate().map(|(i, e)| if keep.contains(&(i + 1)) { *e } else { None }).collect();
        Window { n: self.n, entries }
    }

    /// `self` with the entries of `other` removed.
    pub fn remove(&self, other: &Window) -> Window {
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| if b.is_some() { None } else { *a }).collect();
        Window { n: self.n, entries }
    }

    /// Whether every ball of `other` is a ball of `self`.
    pub fn contains(&self, other: &Window) -> bool {
        self.n == other.n && other.entries.iter().zip(&self.entries).all(|(o, s)| o.is_none() || o == s)
    }

    /// Union of two partial permutations with disjoint positions.
    pub fn union(&self, other: &Window) -> Result<Window> {
        if self.n != other.n {
            return Err(Error::MismatchedPeriod(self.n, other.n));
        }
        let mut entries = self.entries.clone();
        for (slot, o) in entries.iter_mut().zip(&other.entries) {
            if let Some(v) = o {
                if slot.is_some() {
                    return Err(Error::Validation("overlapping positions in union".into()));
                }
                *slot = Some(*v);
            }
        }
        Window::new(entries)
    }

    pub(crate) fn set(&mut self, pos: usize, value: Option<i64>) {
        self.entries[pos - 1] = value;
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match e {
                Some(v) => write!(f, "{v}")?,
                None => f.write_str("_")?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [e1,...,en], got {s:?}")))?;
        let entries = inner
            .split(',')
            .map(|tok| match tok.trim() {
                "_" | "∅" => Ok(None),
                t => t.parse::<i64>().map(Some).map_err(|_| Error::Parse(format!("bad window entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Window::new(entries)
    }
}

impl Serialize for Window {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Window {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<Option<i64>>::deserialize(d)?;
        Window::new(entries).map_err(serde::de::Error::custom)
    }
}
