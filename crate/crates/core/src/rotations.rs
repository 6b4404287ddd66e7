//! Partial rotations along streams, properness, and the diamond completion.

use serde::{Deserialize, Serialize};

use crate::ambc::{canonical_channels, channel_sw_leq, find_channels, is_stream, river_of, Stream};
use crate::error::{Error, Result};
use crate::group::{centered_star, omega_right};
use crate::window::Window;

fn check_substream(w: &Window, s: &Window) -> Result<Vec<usize>> {
    if w.n() != s.n() {
        return Err(Error::MismatchedPeriod(w.n(), s.n()));
    }
    if s.is_empty() || !is_stream(s) || !w.contains(s) {
        return Err(Error::NotASubstream);
    }
    Ok(s.positions().collect())
}

/// Partial rotation `pr_S(w)`: along the positions `p_1 < ... < p_k` of `S`,
/// `w(p_j)` becomes `w(p_{j+1})` and `w(p_k)` becomes `w(p_1) + n`.
pub fn pr(w: &Window, s: &Window) -> Result<Window> {
    let pos = check_substream(w, s)?;
    let n = w.n() as i64;
    let vals: Vec<i64> = pos.iter().map(|&p| w.get(p).expect("present")).collect();
    let mut out = w.clone();
    for (j, &p) in pos.iter().enumerate() {
        let v = if j + 1 < pos.len() { vals[j + 1] } else { vals[0] + n };
        out.set(p, Some(v));
    }
    Ok(out)
}

/// Inverse partial rotation `pr_S^{-1}(w)`.
pub fn ipr(w: &Window, s: &Window) -> Result<Window> {
    let pos = check_substream(w, s)?;
    let n = w.n() as i64;
    let vals: Vec<i64> = pos.iter().map(|&p| w.get(p).expect("present")).collect();
    let k = pos.len();
    let mut out = w.clone();
    for (j, &p) in pos.iter().enumerate() {
        let v = if j == 0 { vals[k - 1] - n } else { vals[j - 1] };
        out.set(p, Some(v));
    }
    Ok(out)
}

/// The image of the stream itself under its own rotation, `pr_S(S)`.
pub fn rotate_stream(s: &Window, inverse: bool) -> Result<Window> {
    if inverse {
        ipr(s, s)
    } else {
        pr(s, s)
    }
}

fn river_southwest(w: &Window, c: &Window) -> Result<Stream> {
    let river = river_of(w, c)?;
    river
        .iter()
        .find(|s| river.iter().all(|o| channel_sw_leq(s.window(), o.window())))
        .cloned()
        .ok_or_else(|| Error::Internal("river has no southwest channel".into()))
}

fn is_extremal_in_river(w: &Window, s: &Window, northeast: bool) -> bool {
    if !find_channels(w).iter().any(|c| c.window() == s) {
        return false;
    }
    let river = river_of(w, s).expect("s is a channel");
    river.iter().all(|c| if northeast { channel_sw_leq(c, s) } else { channel_sw_leq(s, c) })
}

/// `pr_S` is proper: `S` is the northeast channel of its river.
pub fn is_proper_pr(w: &Window, s: &Window) -> bool {
    is_extremal_in_river(w, s, true)
}

/// `pr_S^{-1}` is proper: `S` is the southwest channel of its river.
pub fn is_proper_ipr(w: &Window, s: &Window) -> bool {
    is_extremal_in_river(w, s, false)
}

/// Which move the diamond is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiamondMove {
    /// The right star operation centered at a position.
    #[default]
    Star,
    /// Right multiplication by the shift element.
    Omega,
}

/// The four corners of a completed diamond and its closing channel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diamond {
    pub w_star: Window,
    pub w_tilde: Window,
    pub w_tilde_star: Window,
    /// The channel of `w_star` that closes the square.
    pub s_star: Stream,
}

/// Completes the square formed by a move `w -> w*` and a proper rotation
/// along the `q`-th (1-based) canonical channel of `w`.
///
/// `inverse` selects inverse rotations; the closing channel is then the
/// southwest channel of the river holding the `q`-th canonical channel of
/// `w_star`. Fails with `StarUndefined` when the
/// star move is not defined for `w`, `NotProper` when the chosen channel
/// does not give a proper rotation, and `Internal` if the square does not
/// close.
pub fn diamond_complete(w: &Window, p: usize, q: usize, inverse: bool, mv: DiamondMove) -> Result<Diamond> {
    let apply_move = |x: &Window| -> Result<Window> {
        match mv {
            DiamondMove::Star => centered_star(x, p),
            DiamondMove::Omega => omega_right(x),
        }
    };
    let rotate = |x: &Window, s: &Window| if inverse { ipr(x, s) } else { pr(x, s) };
    let proper = |x: &Window, s: &Window| if inverse { is_proper_ipr(x, s) } else { is_proper_pr(x, s) };

    let w_star = apply_move(w)?;
    let seq = canonical_channels(w);
    let c = seq.channels.get(q.wrapping_sub(1)).ok_or(Error::IndexOutOfRange(q))?;
    if !proper(w, c) {
        return Err(Error::NotProper);
    }
    let w_tilde = rotate(w, c)?;
    let w_tilde_star = apply_move(&w_tilde).map_err(|_| Error::Internal("move undefined after the rotation".into()))?;
    let seq_star = canonical_channels(&w_star);
    let mut s_star = seq_star
        .channels
        .get(q - 1)
        .cloned()
        .ok_or_else(|| Error::Internal("moved window has too few channels".into()))?;
    if inverse {
        // Inverse rotations close along the southwest channel of the same river.
        s_star = river_southwest(&w_star, s_star.window())?;
    }
    if !proper(&w_star, &s_star) {
        return Err(Error::Internal(format!("closing channel {s_star} is not proper")));
    }
    if rotate(&w_star, &s_star)? != w_tilde_star {
        return Err(Error::Internal("diamond does not close".into()));
    }
    Ok(Diamond { w_star, w_tilde, w_tilde_star, s_star })
}
