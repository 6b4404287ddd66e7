//! Sign insertion and the cell representatives `w_{T,N}`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{inverse, rotate_r};
use crate::tabloid::Tabloid;
use crate::window::Window;

/// The quadruple `(i, 𝔓, 𝔔, w)` threaded through sign insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignState {
    pub step: usize,
    pub insert_row: Vec<i64>,
    pub record_row: Vec<usize>,
    pub pending: VecDeque<i64>,
}

impl SignState {
    /// The starting state `(0, ∅, ∅, window)`.
    pub fn start(w: &Window) -> Result<Self> {
        Ok(SignState { step: 0, insert_row: Vec::new(), record_row: Vec::new(), pending: w.values()?.into() })
    }
}

fn word(xs: impl IntoIterator<Item = impl fmt::Display>) -> String {
    let v: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

impl fmt::Display for SignState {
    /// One trace line: `i | 𝔓 | 𝔔 | w`, words space separated, `-` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {} | {}", self.step, word(&self.insert_row), word(&self.record_row), word(&self.pending))
    }
}

/// One step `ϝ` of sign insertion.
pub fn digamma_step(s: &SignState, n: usize) -> Result<SignState> {
    let mut next = s.clone();
    let a = next.pending.pop_front().ok_or(Error::EmptyPending)?;
    next.step += 1;
    match next.insert_row.iter().position(|&b| b > a) {
        None => {
            next.insert_row.push(a);
            next.record_row.push(next.step);
        }
        Some(k) => {
            let b = std::mem::replace(&mut next.insert_row[k], a);
            next.pending.push_back(n as i64 + b);
        }
    }
    Ok(next)
}

/// Every state of sign insertion, starting from `(0, ∅, ∅, w)`.
pub fn sign_trace(w: &Window) -> Result<Vec<SignState>> {
    let n = w.n();
    let cap = n * (n + 1);
    let mut states = vec![SignState::start(w)?];
    while !states.last().expect("nonempty").pending.is_empty() {
        if states.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        let next = digamma_step(states.last().expect("nonempty"), n)?;
        states.push(next);
    }
    Ok(states)
}

/// `(sgn_𝔓(w), sgn_𝔔(w))`.
pub fn sign_insert(w: &Window) -> Result<(Vec<i64>, Vec<usize>)> {
    let last = sign_trace(w)?.pop().expect("nonempty trace");
    Ok((last.insert_row, last.record_row))
}

/// `sgn_𝔔(w)`.
pub fn sign_q(w: &Window) -> Result<Vec<usize>> {
    Ok(sign_insert(w)?.1)
}

/// The window on which this crate's insertion reproduces the original
/// tail-first convention: `R(w⁻¹)`.
pub fn blasiak_convention(w: &Window) -> Result<Window> {
    Ok(rotate_r(&inverse(w)?))
}

/// `w_{T,N}`: row `T_i` receives `Nn(l-i) + L_i + 1, ..., Nn(l-i) + L_{i-1}`
/// where `L_i` is the number of boxes below row `i`. Empty rows are allowed.
pub fn build_w_tn(t: &Tabloid, big_n: i64) -> Result<Window> {
    if !t.is_row_standard() {
        return Err(Error::Validation(format!("{t} is not row-standard")));
    }
    let n = t.size();
    let l = t.num_rows();
    let mut entries = vec![None; n];
    let mut below: usize = t.rows().iter().map(Vec::len).sum();
    for (i, row) in t.rows().iter().enumerate() {
        below -= row.len();
        let base = big_n * n as i64 * (l - 1 - i) as i64 + below as i64;
        for (k, &pos) in row.iter().enumerate() {
            entries[pos - 1] = Some(base + k as i64 + 1);
        }
    }
    Window::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotations::pr;

    fn w(s: &str) -> Window {
        s.parse().unwrap()
    }

    fn state(step: usize, p: &[i64], q: &[usize], pending: &[i64]) -> SignState {
        SignState { step, insert_row: p.to_vec(), record_row: q.to_vec(), pending: pending.iter().copied().collect() }
    }

    #[test]
    fn digamma_examples() {
        let s = state(1, &[17], &[1], &[13, 4, 20, 9, 24]);
        assert_eq!(digamma_step(&s, 6).unwrap(), state(2, &[13], &[1], &[4, 20, 9, 24, 23]));
        let s = state(5, &[4, 9], &[1, 4], &[24, 23, 19, 26]);
        assert_eq!(digamma_step(&s, 6).unwrap(), state(6, &[4, 9, 24], &[1, 4, 6], &[23, 19, 26]));
        let s = state(0, &[], &[], &[3]);
        assert_eq!(digamma_step(&s, 6).unwrap(), state(1, &[3], &[1], &[]));
        assert_eq!(digamma_step(&state(0, &[], &[], &[]), 3), Err(Error::EmptyPending));
    }

    #[test]
    fn sign_insert_examples() {
        assert_eq!(
            sign_insert(&w("[17,13,4,20,9,24]")).unwrap(),
            (vec![4, 9, 19, 26, 29, 36], vec![1, 4, 6, 9, 10, 12])
        );
        assert_eq!(sign_insert(&Window::identity(4)).unwrap(), (vec![1, 2, 3, 4], vec![1, 2, 3, 4]));
        assert_eq!(
            sign_insert(&w("[6,1,18,3,19,24,12,15,17,10]")).unwrap(),
            (vec![1, 3, 10, 15, 16, 22, 27, 34, 38, 39], vec![1, 3, 5, 6, 9, 12, 13, 14, 17, 18])
        );
    }

    #[test]
    fn trace_format() {
        let tr = sign_trace(&w("[17,13,4,20,9,24]")).unwrap();
        assert_eq!(tr.len(), 13);
        assert_eq!(tr[0].to_string(), "0 | - | - | 17 13 4 20 9 24");
        assert_eq!(tr[1].to_string(), "1 | 17 | 1 | 13 4 20 9 24");
    }

    #[test]
    fn w_tn_examples() {
        let t: Tabloid = "((3,6,7,9),(4,8,10),(1,5),(2))".parse().unwrap();
        let x = build_w_tn(&t, 10).unwrap();
        assert_eq!(x, w("[102,1,307,204,103,308,309,205,310,206]"));
        assert_eq!(sign_insert(&x).unwrap().0, vec![1, 103, 112, 206, 214, 215, 318, 319, 320, 327]);
        let single: Tabloid = "((1,2,3,4))".parse().unwrap();
        assert_eq!(build_w_tn(&single, 7).unwrap(), Window::identity(4));

        let mut y = x.clone();
        for (row, times) in t.rows().iter().zip([35, 28, 19, 10]).rev() {
            for _ in 0..times {
                y = pr(&y, &y.restrict(row)).unwrap();
            }
        }
        assert_eq!(y, w("[193,101,390,295,202,397,398,296,399,304]"));
        assert_eq!(sign_insert(&y).unwrap().0, vec![101, 202, 203, 304, 305, 306, 407, 408, 409, 410]);
    }
}
