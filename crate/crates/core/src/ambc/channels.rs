//! Shi posets, streams, channels, channel numberings, distances and rivers.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tabloid::Partition;
use crate::window::{next_offset, Ball, Window};

/// `i <_P j` in the Shi poset of `w`, for present positions `i, j` in `[1, n]`.
pub fn shi_less(w: &Window, i: usize, j: usize) -> Result<bool> {
    let wi = w.get(i).ok_or(Error::AbsentPosition(i))?;
    let wj = w.get(j).ok_or(Error::AbsentPosition(j))?;
    Ok((i > j && wi < wj) || wj > wi + w.n() as i64)
}

/// Greene–Kleitman partition of the Shi poset by exhaustive search over
/// subsets of positions. Exponential in `n`; intended for `n <= 12`.
///
/// A subset is a union of `k` antichains exactly when its longest chain has
/// at most `k` elements, so `λ1 + ... + λk` is the largest subset of height
/// at most `k`.
pub fn greene_kleitman_brute(w: &Window) -> Partition {
    let pos: Vec<usize> = w.positions().collect();
    let m = pos.len();
    let mut less = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            less[a][b] = a != b && shi_less(w, pos[a], pos[b]).expect("present positions");
        }
    }
    let mut best = vec![0usize; m + 1];
    for mask in 0u64..(1u64 << m) {
        let h = height(&less, mask);
        let size = mask.count_ones() as usize;
        for b in &mut best[h..] {
            *b = (*b).max(size);
        }
    }
    let mut parts = Vec::new();
    for k in 1..=m {
        let p = best[k] - best[k - 1];
        if p == 0 {
            break;
        }
        parts.push(p);
    }
    Partition::new(parts).expect("Greene–Kleitman parts are a partition")
}

/// Longest chain inside the subset `mask`.
fn height(less: &[Vec<bool>], mask: u64) -> usize {
    let m = less.len();
    let mut len = vec![0usize; m];
    let mut best = 0;
    // A chain has at most m elements, so m relaxation rounds suffice.
    for _ in 0..m {
        let mut changed = false;
        for b in 0..m {
            if mask >> b & 1 == 0 {
                continue;
            }
            let mut l = 1;
            for a in 0..m {
                if mask >> a & 1 == 1 && less[a][b] {
                    l = l.max(len[a] + 1);
                }
            }
            if l != len[b] {
                len[b] = l;
                changed = true;
            }
            best = best.max(l);
        }
        if !changed {
            break;
        }
    }
    best
}

/// Whether the present entries `x1 < ... < xk` satisfy
/// `w(x1) < ... < w(xk) < w(x1) + n`.
pub fn is_stream(w: &Window) -> bool {
    let vals: Vec<i64> = w.entries().iter().flatten().copied().collect();
    match (vals.first(), vals.last()) {
        (Some(&first), Some(&last)) => vals.windows(2).all(|p| p[0] < p[1]) && last < first + w.n() as i64,
        _ => true,
    }
}

/// A partial permutation whose periodic extension is increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Window", into = "Window")]
pub struct Stream(Window);

impl Stream {
    pub fn new(w: Window) -> Result<Self> {
        if is_stream(&w) {
            Ok(Stream(w))
        } else {
            Err(Error::Validation(format!("{w} is not a stream")))
        }
    }

    pub fn window(&self) -> &Window {
        &self.0
    }

    pub fn into_window(self) -> Window {
        self.0
    }

    /// `Σ (⌈S(x)/n⌉ − 1)` over present window positions.
    pub fn altitude(&self) -> i64 {
        let n = self.0.n() as i64;
        self.0.entries().iter().flatten().map(|&v| v.div_euclid(n) + i64::from(v.rem_euclid(n) != 0) - 1).sum()
    }

    /// Domain residues, ascending.
    pub fn domain(&self) -> Vec<usize> {
        self.0.positions().collect()
    }

    /// Image residues, ascending.
    pub fn image(&self) -> Vec<usize> {
        self.0.image_residues()
    }
}

impl Deref for Stream {
    type Target = Window;
    fn deref(&self) -> &Window {
        &self.0
    }
}

impl TryFrom<Window> for Stream {
    type Error = Error;
    fn try_from(w: Window) -> Result<Self> {
        Stream::new(w)
    }
}

impl From<Stream> for Window {
    fn from(s: Stream) -> Window {
        s.0
    }
}

impl std::fmt::Display for Stream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// All streams of maximal density contained in `w`, as sorted position lists.
fn max_streams(w: &Window) -> (usize, Vec<Vec<usize>>) {
    let n = w.n() as i64;
    let balls = w.balls();
    let mut best = 0;
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();

    // Longest continuation from ball index `i` with values below `cap`.
    let m = balls.len();
    let mut memo = vec![vec![None; m]; m];
    fn longest(balls: &[Ball], start: usize, i: usize, cap: i64, memo: &mut Vec<Vec<Option<usize>>>) -> usize {
        if let Some(v) = memo[start][i] {
            return v;
        }
        let mut best = 1;
        for j in i + 1..balls.len() {
            if balls[j].y > balls[i].y && balls[j].y < cap {
                best = best.max(1 + longest(balls, start, j, cap, memo));
            }
        }
        memo[start][i] = Some(best);
        best
    }
    for s in 0..m {
        let cap = balls[s].y + n;
        best = best.max(longest(&balls, s, s, cap, &mut memo));
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        balls: &[Ball],
        start: usize,
        i: usize,
        cap: i64,
        target: usize,
        memo: &mut Vec<Vec<Option<usize>>>,
        cur: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        cur.push(balls[i].x as usize);
        if cur.len() == target {
            found.push(cur.clone());
        } else {
            for j in i + 1..balls.len() {
                if balls[j].y > balls[i].y
                    && balls[j].y < cap
                    && cur.len() + longest(balls, start, j, cap, memo) >= target
                {
                    extend(balls, start, j, cap, target, memo, cur, found);
                }
            }
        }
        cur.pop();
    }
    if best > 0 {
        for s in 0..m {
            let cap = balls[s].y + n;
            if longest(&balls, s, s, cap, &mut memo) >= best {
                extend(&balls, s, s, cap, best, &mut memo, &mut cur, &mut found);
            }
        }
    }
    (best, found)
}

/// Width of the Shi poset: the largest density of a stream inside `w`.
pub fn width(w: &Window) -> usize {
    max_streams(w).0
}

/// Every channel of `w` (maximal-density stream it contains), ordered by
/// their position sets.
pub fn find_channels(w: &Window) -> Vec<Stream> {
    let (_, sets) = max_streams(w);
    let mut out: Vec<Stream> = sets.into_iter().map(|xs| Stream(w.restrict(&xs))).collect();
    out.sort_by_key(|s| s.domain());
    out
}

/// `C <=_SW C'`: every ball of `C` lies weakly southwest of some ball of `C'`.
pub fn channel_sw_leq(c: &Window, c2: &Window) -> bool {
    let n = c.n() as i64;
    c.balls().iter().all(|b| {
        c2.balls().iter().any(|z| {
            // Need k with z.x + kn <= b.x and z.y + kn >= b.y.
            let hi = (b.x - z.x).div_euclid(n);
            let lo = -((z.y - b.y).div_euclid(n));
            lo <= hi
        })
    })
}

/// The southwest channel of `w`, if `w` is nonempty.
pub fn southwest_channel(w: &Window) -> Option<Stream> {
    extremal(find_channels(w), channel_sw_leq)
}

/// The northeast channel of `w`, if `w` is nonempty.
pub fn northeast_channel(w: &Window) -> Option<Stream> {
    extremal(find_channels(w), |a, b| channel_sw_leq(b, a))
}

fn extremal(chs: Vec<Stream>, leq: impl Fn(&Window, &Window) -> bool) -> Option<Stream> {
    let idx = (0..chs.len()).find(|&i| chs.iter().all(|c| leq(&chs[i], c)))?;
    chs.into_iter().nth(idx)
}

/// A labeling of the balls of a window, extended periodically by
/// `label(b + (n, n)) = label(b) + increment`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Numbering {
    base: Window,
    labels: Vec<Option<i64>>,
    increment: i64,
}

impl Numbering {
    pub(crate) fn from_parts(base: Window, labels: Vec<Option<i64>>, increment: i64) -> Self {
        Numbering { base, labels, increment }
    }

    pub fn base(&self) -> &Window {
        &self.base
    }

    /// Labels at window positions (absent positions carry `None`).
    pub fn labels(&self) -> &[Option<i64>] {
        &self.labels
    }

    pub fn increment(&self) -> i64 {
        self.increment
    }

    /// Label of the ball at any integer position `x`.
    pub fn label(&self, x: i64) -> Option<i64> {
        let n = self.base.n() as i64;
        let pos = (x - 1).rem_euclid(n) + 1;
        let k = (x - pos) / n;
        self.labels[(pos - 1) as usize].map(|l| l + k * self.increment)
    }

    /// The same numbering shifted so the minimum label on window positions is 0.
    pub fn normalized(&self) -> Numbering {
        let min = self.labels.iter().flatten().copied().min().unwrap_or(0);
        self.shifted(-min)
    }

    pub fn shifted(&self, by: i64) -> Numbering {
        Numbering {
            base: self.base.clone(),
            labels: self.labels.iter().map(|l| l.map(|v| v + by)).collect(),
            increment: self.increment,
        }
    }

    /// Labels strictly increase along every path inside a three-period slab.
    pub fn is_monotone(&self) -> bool {
        let mut balls = Vec::new();
        for k in -1..=1 {
            for b in self.base.balls() {
                balls.push(b.translate(k, self.base.n()));
            }
        }
        balls
            .iter()
            .all(|a| balls.iter().all(|b| !a.precedes(*b) || self.label(a.x).unwrap() < self.label(b.x).unwrap()))
    }
}

/// Channel numbering `d^C`: the longest path from a properly numbered `C`.
///
/// The channel is numbered `0, 1, ..., r-1` along its window positions
/// (unshifted), so numberings of different channels are directly comparable
/// once aligned.
pub fn channel_numbering_raw(w: &Window, c: &Window) -> Result<Numbering> {
    if !w.contains(c) || c.is_empty() || !is_stream(c) || c.density() != width(w) {
        return Err(Error::NotAChannel);
    }
    let n = w.n();
    let r = c.density() as i64;
    let balls = w.balls();
    let mut d: Vec<Option<i64>> = vec![None; n];
    for (j, pos) in c.positions().enumerate() {
        d[pos - 1] = Some(j as i64);
    }
    let fixed = d.clone();
    let mut stable = false;
    for _ in 0..=n + 1 {
        let mut changed = false;
        for a in &balls {
            let Some(da) = d[a.x as usize - 1] else { continue };
            for b in &balls {
                let cand = da + 1 - next_offset(*a, *b, n) * r;
                let slot = &mut d[b.x as usize - 1];
                if slot.is_none_or(|v| cand > v) {
                    *slot = Some(cand);
                    changed = true;
                }
            }
        }
        if !changed {
            stable = true;
            break;
        }
    }
    if !stable || fixed.iter().zip(&d).any(|(f, v)| f.is_some() && f != v) {
        return Err(Error::NotAChannel);
    }
    let labels = (0..n).map(|i| w.get(i + 1).and(d[i])).collect();
    Ok(Numbering::from_parts(w.clone(), labels, r))
}

/// Channel numbering with the canonical shift (minimum window label 0).
pub fn channel_numbering(w: &Window, c: &Window) -> Result<Numbering> {
    channel_numbering_raw(w, c).map(|d| d.normalized())
}

/// Distance `h(C, C')` between channels, computed by aligning the two
/// numberings at the ball `anchor` of `C` and reading the difference at the
/// ball `probe` of `C'` (both given by window position).
pub fn channel_distance_at(w: &Window, c: &Window, c2: &Window, anchor: usize, probe: usize) -> Result<i64> {
    let d1 = channel_numbering_raw(w, c)?;
    let d2 = channel_numbering_raw(w, c2)?;
    if c.get(anchor).is_none() || c2.get(probe).is_none() {
        return Err(Error::Validation("anchor/probe must be balls of the channels".into()));
    }
    let diff = |x: usize| d2.labels[x - 1].unwrap() - d1.labels[x - 1].unwrap();
    Ok((diff(probe) - diff(anchor)).abs())
}

/// Distance `h(C, C')` using the first ball of each channel.
pub fn channel_distance(w: &Window, c: &Window, c2: &Window) -> Result<i64> {
    let anchor = c.positions().next().ok_or(Error::NotAChannel)?;
    let probe = c2.positions().next().ok_or(Error::NotAChannel)?;
    channel_distance_at(w, c, c2, anchor, probe)
}

/// Channels of `w` grouped into rivers (classes at distance zero), each
/// river listed in channel order, rivers ordered by their first channel.
pub fn rivers(w: &Window) -> Vec<Vec<Stream>> {
    let chs = find_channels(w);
    let mut out: Vec<Vec<Stream>> = Vec::new();
    for c in chs {
        let home = out.iter_mut().find(|r| channel_distance(w, &r[0], &c).expect("channels") == 0);
        match home {
            Some(r) => r.push(c),
            None => out.push(vec![c]),
        }
    }
    out
}

/// The river of `w` containing the channel `c`.
pub fn river_of(w: &Window, c: &Window) -> Result<Vec<Stream>> {
    let chs = find_channels(w);
    if !chs.iter().any(|x| x.window() == c) {
        return Err(Error::NotAChannel);
    }
    let mut out = Vec::new();
    for x in chs {
        if channel_distance(w, c, &x)? == 0 {
            out.push(x);
        }
    }
    Ok(out)
}

/// The canonical sequence of disjoint channels, southwest to northeast,
/// grouped into rivers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelSequence {
    pub channels: Vec<Stream>,
    /// `m_0 = 0 < m_1 < ... < m_l = m`; river `k` is `channels[m_{k-1}..m_k]`.
    pub river_breaks: Vec<usize>,
}

impl ChannelSequence {
    /// Index range of the river containing channel `i` (0-based).
    pub fn river_range(&self, i: usize) -> std::ops::Range<usize> {
        let k = self.river_breaks.iter().position(|&b| b > i).expect("index in range");
        self.river_breaks[k - 1]..self.river_breaks[k]
    }
}

/// Greedy southwest channels of the residue, with the last pick of every
/// river replaced by that river's northeast channel.
pub fn canonical_channels(w: &Window) -> ChannelSequence {
    let r = width(w);
    let mut picks: Vec<Stream> = Vec::new();
    let mut rest = w.clone();
    while r > 0 && !rest.is_empty() && width(&rest) == r {
        let c = southwest_channel(&rest).expect("nonempty residue has a southwest channel");
        rest = rest.remove(&c);
        picks.push(c);
    }
    let mut breaks = vec![0];
    for i in 1..picks.len() {
        if channel_distance(w, &picks[i - 1], &picks[i]).expect("channels") != 0 {
            breaks.push(i);
        }
    }
    if !picks.is_empty() {
        breaks.push(picks.len());
    }
    for &end in &breaks[1..] {
        let last = end - 1;
        let river = river_of(w, &picks[last]).expect("pick is a channel");
        let ne = extremal(river, |a, b| channel_sw_leq(b, a)).expect("river has a northeast channel");
        picks[last] = ne;
    }
    ChannelSequence { channels: picks, river_breaks: breaks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Window {
        s.parse().unwrap()
    }

    const EX51: &str = "[8,1,19,14,16,2,25,13,10,27]";
    const EX53: &str = "[6,1,18,3,19,24,12,15,17,10]";

    #[test]
    fn shi_relations() {
        let x = w(EX51);
        assert!(shi_less(&x, 9, 8).unwrap());
        assert!(shi_less(&x, 1, 3).unwrap());
        assert!(!shi_less(&x, 3, 1).unwrap());
        let id = Window::identity(5);
        for i in 1..=5 {
            for j in 1..=5 {
                assert!(!shi_less(&id, i, j).unwrap());
            }
        }
        assert_eq!(shi_less(&w("[_,2]"), 1, 2), Err(Error::AbsentPosition(1)));
    }

    #[test]
    fn hasse_edges_are_relations() {
        let x = w(EX51);
        let edges = [
            (9, 8),
            (6, 8),
            (6, 1),
            (2, 8),
            (2, 1),
            (8, 4),
            (8, 5),
            (4, 3),
            (4, 7),
            (4, 10),
            (5, 3),
            (5, 10),
            (1, 3),
            (1, 7),
            (1, 10),
        ];
        for (a, b) in edges {
            assert!(shi_less(&x, a, b).unwrap(), "{a} < {b}");
        }
    }

    #[test]
    fn greene_kleitman_examples() {
        assert_eq!(greene_kleitman_brute(&w(EX51)).parts(), &[3, 3, 3, 1]);
        assert_eq!(greene_kleitman_brute(&Window::identity(10)).parts(), &[10]);
        assert_eq!(greene_kleitman_brute(&w("[1,6,8,14,17,5,0,19,3,22]")).parts(), &[4, 3, 2, 1]);
    }

    #[test]
    fn channels_of_examples() {
        let found: Vec<Window> = find_channels(&w(EX51)).into_iter().map(Stream::into_window).collect();
        let mut expect = vec![w("[_,1,_,_,_,2,_,_,10,_]"), w("[8,_,_,14,16,_,_,_,_,_]"), w("[_,_,19,_,_,_,25,_,_,27]")];
        expect.sort_by_key(|x| x.positions().collect::<Vec<_>>());
        assert_eq!(found, expect);

        let found = find_channels(&w(EX53));
        assert_eq!(found.len(), 4);
        assert!(found.iter().any(|c| *c.window() == w("[6,_,_,_,_,_,12,15,_,_]")));

        let id = Window::identity(6);
        let found = find_channels(&id);
        assert_eq!(found.len(), 1);
        assert_eq!(*found[0].window(), id);
    }

    #[test]
    fn channel_search_matches_subset_oracle() {
        let x = w(EX53);
        let n = x.n();
        let mut oracle = Vec::new();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let keep: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let s = x.restrict(&keep);
            if is_stream(&s) {
                if keep.len() > best {
                    best = keep.len();
                    oracle.clear();
                }
                if keep.len() == best {
                    oracle.push(keep);
                }
            }
        }
        let mut found: Vec<Vec<usize>> = find_channels(&x).iter().map(|c| c.domain()).collect();
        found.sort();
        oracle.sort();
        assert_eq!(found, oracle);
        assert_eq!(width(&x), best);
    }

    #[test]
    fn southwest_and_northeast() {
        let x = w(EX51);
        assert_eq!(*southwest_channel(&x).unwrap().window(), w("[_,1,_,_,_,2,_,_,10,_]"));
        assert_eq!(*northeast_channel(&x).unwrap().window(), w("[_,_,19,_,_,_,25,_,_,27]"));
    }

    fn labels_of(d: &Numbering) -> Vec<i64> {
        d.labels().iter().map(|l| l.unwrap()).collect()
    }

    #[test]
    fn channel_numberings_of_example() {
        let x = w(EX51);
        let c1 = w("[_,1,_,_,_,2,_,_,10,_]");
        let c2 = w("[8,_,_,14,16,_,_,_,_,_]");
        let c3 = w("[_,_,19,_,_,_,25,_,_,27]");
        // Positions 1..=10.
        assert_eq!(labels_of(&channel_numbering(&x, &c1).unwrap()), vec![0, 0, 2, 1, 2, 1, 3, 2, 2, 4]);
        assert_eq!(labels_of(&channel_numbering(&x, &c2).unwrap()), vec![1, 0, 3, 2, 3, 1, 4, 2, 2, 5]);
        assert_eq!(labels_of(&channel_numbering(&x, &c3).unwrap()), vec![1, 0, 4, 2, 3, 1, 5, 2, 2, 6]);
        assert_eq!(channel_distance(&x, &c1, &c2).unwrap(), 1);
        assert_eq!(channel_distance(&x, &c2, &c3).unwrap(), 1);
        assert_eq!(channel_distance(&x, &c1, &c3).unwrap(), 2);
        assert_eq!(channel_distance(&x, &c2, &c2).unwrap(), 0);
        let id = Window::identity(4);
        let d = channel_numbering(&id, &id).unwrap();
        assert_eq!(labels_of(&d), vec![0, 1, 2, 3]);
        assert_eq!(d.increment(), 4);
        assert!(d.is_monotone());
    }

    #[test]
    fn non_channel_is_rejected() {
        let x = w(EX51);
        assert_eq!(channel_numbering(&x, &w("[_,1,_,_,_,2,_,_,_,_]")), Err(Error::NotAChannel));
    }

    #[test]
    fn rivers_of_examples() {
        let x = w(EX53);
        let rs = rivers(&x);
        let mut sizes: Vec<usize> = rs.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
        assert_eq!(rivers(&w(EX51)).len(), 3);
    }

    #[test]
    fn canonical_channels_of_examples() {
        let seq = canonical_channels(&w(EX53));
        let got: Vec<Window> = seq.channels.iter().map(|c| c.window().clone()).collect();
        assert_eq!(
            got,
            vec![w("[_,1,_,3,_,_,_,_,_,10]"), w("[_,_,_,_,_,_,12,15,17,_]"), w("[_,_,18,_,19,24,_,_,_,_]"),]
        );
        assert_eq!(seq.river_breaks, vec![0, 2, 3]);
        let seq = canonical_channels(&w(EX51));
        assert_eq!(seq.river_breaks, vec![0, 1, 2, 3]);
        let id = Window::identity(3);
        assert_eq!(canonical_channels(&id).channels[0].window(), &id);
    }

    #[test]
    fn altitude_values() {
        let c2 = Stream::new(w("[8,_,_,14,16,_,_,_,_,_]")).unwrap();
        assert_eq!(c2.altitude(), 2);
        let s = Stream::new(w("[_,1,_,_,_,2,_,_,10,_]")).unwrap();
        assert_eq!(s.altitude(), 0);
        assert_eq!(Stream::new(w("[0,_,2]")).unwrap().altitude(), -1);
    }
}
