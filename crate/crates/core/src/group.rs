//! Group operations on total windows: products, inverses, the shift
//! element, star operations and the 180° rotation.

use crate::error::{Error, Result};
use crate::window::{residue, Window};

/// Window of `u ∘ v`: entry `k` is `u(v(k))`.
pub fn compose(u: &Window, v: &Window) -> Result<Window> {
    if u.n() != v.n() {
        return Err(Error::MismatchedPeriod(u.n(), v.n()));
    }
    let vals = v.values()?;
    u.values()?;
    Window::from_values(&vals.iter().map(|&x| u.at(x).expect("total")).collect::<Vec<_>>())
}

pub fn inverse(w: &Window) -> Result<Window> {
    let n = w.n();
    let vals = w.values()?;
    let mut out = vec![0i64; n];
    for (k, &v) in vals.iter().enumerate() {
        let r = residue(v, n);
        out[(r - 1) as usize] = k as i64 + 1 - (v - r);
    }
    Window::from_values(&out)
}

/// `ω · w`.
pub fn omega_left(w: &Window) -> Result<Window> {
    compose(&Window::omega(w.n()), w)
}

/// `ω⁻¹ · w`.
pub fn omega_left_inverse(w: &Window) -> Result<Window> {
    compose(&inverse(&Window::omega(w.n()))?, w)
}

/// `w · ω⁻¹`.
pub fn omega_right_inverse(w: &Window) -> Result<Window> {
    compose(w, &inverse(&Window::omega(w.n()))?)
}

/// `w · ω`.
pub fn omega_right(w: &Window) -> Result<Window> {
    compose(w, &Window::omega(w.n()))
}

/// `R ∘ w ∘ R` with `R(x) = n + 1 - x`; defined for partial windows too.
pub fn rotate_r(w: &Window) -> Window {
    let n = w.n();
    let m = n as i64 + 1;
    let entries = (1..=n).map(|i| w.get(n + 1 - i).map(|v| m - v)).collect();
    Window::new(entries).expect("rotation preserves injectivity")
}

fn strictly_between(lo_or_hi: i64, mid: i64, other: i64) -> bool {
    (lo_or_hi < mid && mid < other) || (other < mid && mid < lo_or_hi)
}

/// Swaps the values at positions `i` and `i + 1` (periodically).
fn swap_adjacent(w: &Window, i: usize) -> Window {
    let n = w.n();
    let a = w.at(i as i64).expect("total");
    let b = w.at(i as i64 + 1).expect("total");
    let mut out = w.clone();
    if i < n {
        out.set(i, Some(b));
        out.set(i + 1, Some(a));
    } else {
        // Positions n and n + 1 ≡ 1.
        out.set(n, Some(b));
        out.set(1, Some(a - n as i64));
    }
    out
}

fn star_index(w: &Window, i: usize) -> Result<usize> {
    w.values()?;
    let n = w.n();
    // For n <= 2 the positions i - 1, i + 1 and i + 2 collapse onto i and
    // i + 1 modulo n, and the operation is not defined.
    if n < 3 {
        return Err(Error::StarUndefined);
    }
    if i == 0 {
        return Err(Error::IndexOutOfRange(i));
    }
    Ok((i - 1) % n + 1)
}

/// Right star operation for `* ~ i`.
pub fn right_star(w: &Window, i: usize) -> Result<Window> {
    let i = star_index(w, i)?;
    let at = |k: i64| w.at(k).expect("total");
    let (a, b) = (at(i as i64), at(i as i64 + 1));
    let (before, after) = (at(i as i64 - 1), at(i as i64 + 2));
    if strictly_between(a, after, b) || strictly_between(a, before, b) {
        Ok(swap_adjacent(w, i))
    } else {
        Err(Error::StarUndefined)
    }
}

/// Left star operation: `((w⁻¹)^*)⁻¹`.
pub fn left_star(w: &Window, i: usize) -> Result<Window> {
    inverse(&right_star(&inverse(w)?, i)?)
}

/// The right star operation centered at `p`: swaps `(p, p+1)` when `w(p-1)`
/// lies strictly between `w(p)` and `w(p+1)`, or `(p-1, p)` when `w(p+1)`
/// lies strictly between `w(p-1)` and `w(p)`.
pub fn centered_star(w: &Window, p: usize) -> Result<Window> {
    let p = star_index(w, p)?;
    let n = w.n();
    let at = |k: i64| w.at(k).expect("total");
    let (l, c, r) = (at(p as i64 - 1), at(p as i64), at(p as i64 + 1));
    if strictly_between(c, l, r) {
        Ok(swap_adjacent(w, p))
    } else if strictly_between(l, r, c) {
        Ok(swap_adjacent(w, if p == 1 { n } else { p - 1 }))
    } else {
        Err(Error::StarUndefined)
    }
}
