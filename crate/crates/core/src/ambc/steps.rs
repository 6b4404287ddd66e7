//! Forward and backward steps of the matrix-ball construction.

use crate::ambc::channels::{channel_numbering_raw, is_stream, southwest_channel, width, Numbering, Stream};
use crate::error::{Error, Result};
use crate::window::{next_offset, Ball, Window};

/// Balls carrying label `m`, sorted by decreasing `x`.
fn zigzag_balls(w: &Window, d: &Numbering, m: i64) -> Vec<Ball> {
    let r = d.increment();
    let mut out: Vec<Ball> = w
        .balls()
        .into_iter()
        .filter_map(|b| {
            let diff = m - d.label(b.x)?;
            (diff.rem_euclid(r) == 0).then(|| b.translate(diff / r, w.n()))
        })
        .collect();
    out.sort_by_key(|b| std::cmp::Reverse(b.x));
    out
}

/// Forward step with respect to the channel `c`: returns `(fw_C(w), st_C(w))`.
pub fn forward_step_with(w: &Window, c: &Window) -> Result<(Window, Stream)> {
    let d = channel_numbering_raw(w, c)?;
    let r = d.increment();
    let mut rest = Vec::new();
    let mut stream = Vec::new();
    for m in 0..r {
        let z = zigzag_balls(w, &d, m);
        for pair in z.windows(2) {
            rest.push(Ball::new(pair[0].x, pair[1].y));
        }
        let (first, last) = (z[0], z[z.len() - 1]);
        stream.push(Ball::new(last.x, first.y));
    }
    let fw = Window::from_balls(w.n(), rest)?;
    let st = Stream::new(Window::from_balls(w.n(), stream)?)?;
    Ok((fw, st))
}

/// Forward step with respect to the southwest channel.
///
/// An empty window maps to itself with an empty stream.
pub fn forward_step(w: &Window) -> (Window, Stream) {
    match southwest_channel(w) {
        Some(c) => forward_step_with(w, &c).expect("the southwest channel is a channel"),
        None => (w.clone(), Stream::new(Window::empty(w.n())).expect("empty stream")),
    }
}

/// Order in which the decrement loop scans candidate balls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ScanOrder {
    /// Increasing window position.
    #[default]
    Increasing,
    /// Decreasing window position.
    Decreasing,
}

/// Checks that `s` is a stream compatible with `w`.
pub fn check_compatible(w: &Window, s: &Window) -> Result<()> {
    if w.n() != s.n() {
        return Err(Error::MismatchedPeriod(w.n(), s.n()));
    }
    if !is_stream(s) || s.is_empty() {
        return Err(Error::IncompatibleStream);
    }
    let disjoint = w.positions().all(|p| s.get(p).is_none());
    if !disjoint || w.union(s).is_err() || s.density() < width(w) {
        return Err(Error::IncompatibleStream);
    }
    Ok(())
}

/// Backward numbering of `w` induced by the stream `s`, whose balls are
/// numbered `0, 1, ..., r-1` along their window positions.
pub fn backward_numbering(w: &Window, s: &Window) -> Result<Numbering> {
    backward_numbering_with(w, s, ScanOrder::Increasing)
}

pub fn backward_numbering_with(w: &Window, s: &Window, order: ScanOrder) -> Result<Numbering> {
    check_compatible(w, s)?;
    let n = w.n();
    let r = s.density() as i64;
    let sballs = s.balls();
    let mut balls = w.balls();
    if order == ScanOrder::Decreasing {
        balls.reverse();
    }
    let mut d = vec![0i64; n];
    for a in &balls {
        d[a.x as usize - 1] = sballs
            .iter()
            .enumerate()
            .map(|(j, sb)| j as i64 - next_offset(*sb, *a, n) * r)
            .max()
            .expect("stream is nonempty");
    }
    let lab = |d: &[i64], b: &Ball| d[b.x as usize - 1];
    // Each decrement lowers a label that is bounded below, so the loop ends;
    // the cap only guards against a broken invariant.
    let cap = 1_000_000;
    for _ in 0..cap {
        let violated =
            balls.iter().any(|a| balls.iter().any(|b| lab(&d, a) >= lab(&d, b) + next_offset(*a, *b, n) * r));
        if !violated {
            let labels = (0..n).map(|i| w.get(i + 1).map(|_| d[i])).collect();
            return Ok(Numbering::from_parts(w.clone(), labels, r));
        }
        let pick = balls.iter().find(|a| {
            let da = lab(&d, a);
            let has_later = balls.iter().any(|b| da >= lab(&d, b) + next_offset(**a, *b, n) * r);
            // The latest translate of z preceding a must carry a smaller label.
            let earlier_smaller = balls.iter().all(|z| lab(&d, z) - next_offset(*z, **a, n) * r < da);
            has_later && earlier_smaller
        });
        match pick {
            Some(a) => d[a.x as usize - 1] -= 1,
            None => return Err(Error::Internal("backward numbering found no ball to lower".into())),
        }
    }
    Err(Error::Internal("backward numbering did not terminate".into()))
}

/// Backward step `bk_S(w)`.
pub fn bk(w: &Window, s: &Window) -> Result<Window> {
    bk_with(w, s, ScanOrder::Increasing)
}

pub fn bk_with(w: &Window, s: &Window, order: ScanOrder) -> Result<Window> {
    let d = backward_numbering_with(w, s, order)?;
    let r = d.increment();
    let mut out = Vec::new();
    for (m, y) in s.balls().into_iter().enumerate() {
        let z = zigzag_balls(w, &d, m as i64);
        if z.is_empty() {
            out.push(y);
            continue;
        }
        for pair in z.windows(2) {
            out.push(Ball::new(pair[1].x, pair[0].y));
        }
        out.push(Ball::new(z[0].x, y.y));
        out.push(Ball::new(y.x, z[z.len() - 1].y));
    }
    debug_assert_eq!(r, s.density() as i64);
    Window::from_balls(w.n(), out)
}

/// The stream mapping `domain + nZ` onto `image + nZ` with altitude `rho`.
pub fn stream_from(domain: &[usize], image: &[usize], rho: i64, n: usize) -> Result<Stream> {
    let k = domain.len();
    if k == 0 || k != image.len() {
        return Err(Error::Validation("stream needs equal nonempty domain and image".into()));
    }
    let mut p = domain.to_vec();
    let mut q = image.to_vec();
    p.sort_unstable();
    q.sort_unstable();
    if p.iter().chain(&q).any(|&v| v == 0 || v > n) {
        return Err(Error::Validation(format!("residues must lie in [1, {n}]")));
    }
    let (kk, nn) = (k as i64, n as i64);
    // The altitude of this rotation equals `rho` exactly.
    let entries = p.iter().enumerate().map(|(j, &pos)| {
        let t = j as i64 + rho;
        (pos, q[t.rem_euclid(kk) as usize] as i64 + nn * t.div_euclid(kk))
    });
    let mut win = Window::empty(n);
    for (pos, v) in entries {
        win.set(pos, Some(v));
    }
    Stream::new(Window::new(win.entries().to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Window {
        s.parse().unwrap()
    }

    const EX51: &str = "[8,1,19,14,16,2,25,13,10,27]";

    #[test]
    fn forward_step_of_example() {
        let (fw, st) = forward_step(&w(EX51));
        let expect_fw = Window::from_balls(
            10,
            [(2, 8), (1, 15), (6, 14), (4, 17), (9, 13), (8, 16), (5, 19)].map(|(x, y)| Ball::new(x, y)),
        )
        .unwrap();
        let expect_st = Window::from_balls(10, [(-3, 1), (0, 2), (3, 10)].map(|(x, y)| Ball::new(x, y))).unwrap();
        assert_eq!(fw, expect_fw);
        assert_eq!(*st.window(), expect_st);
    }

    #[test]
    fn forward_step_of_identity() {
        let (fw, st) = forward_step(&Window::identity(5));
        assert!(fw.is_empty());
        assert_eq!(*st.window(), Window::identity(5));
    }

    #[test]
    fn bk_inverts_forward_step() {
        for text in [EX51, "[6,1,18,3,19,24,12,15,17,10]", "[1,6,8,14,17,5,0,19,3,22]"] {
            let x = w(text);
            let (fw, st) = forward_step(&x);
            assert_eq!(bk(&fw, &st).unwrap(), x, "{text}");
            assert_eq!(bk_with(&fw, &st, ScanOrder::Decreasing).unwrap(), x, "{text}");
            let d = backward_numbering(&fw, &st).unwrap();
            assert!(d.is_monotone());
        }
    }

    #[test]
    fn bk_of_empty_is_stream() {
        let s = w("[_,1,_,_,_,2,_,_,10,_]");
        assert_eq!(bk(&Window::empty(10), &s).unwrap(), s);
        assert!(backward_numbering(&Window::empty(10), &s).unwrap().labels().iter().all(Option::is_none));
    }

    #[test]
    fn incompatible_stream_rejected() {
        let x = w(EX51);
        assert_eq!(bk(&x, &w("[_,1,_,_,_,_,_,_,_,_]")), Err(Error::IncompatibleStream));
    }

    #[test]
    fn stream_from_examples() {
        let s = stream_from(&[1, 2, 3, 4], &[1, 2, 3, 4], 0, 4).unwrap();
        assert_eq!(*s.window(), Window::identity(4));
        let s = stream_from(&[1, 2, 3, 4], &[1, 2, 3, 4], 1, 4).unwrap();
        assert_eq!(*s.window(), Window::omega(4));
        for rho in -7..=7 {
            let s = stream_from(&[2, 6, 9], &[1, 2, 10], rho, 10).unwrap();
            assert_eq!(s.altitude(), rho);
            assert_eq!(s.domain(), vec![2, 6, 9]);
            assert_eq!(s.image(), vec![1, 2, 10]);
        }
    }
}
