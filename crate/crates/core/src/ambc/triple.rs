//! The maps `Φ` (window to triple) and `Ψ` (triple to window).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ambc::channels::Stream;
use crate::ambc::stats::{is_dominant, reduced_weight, symmetrized_offset};
use crate::ambc::steps::{bk_with, forward_step, stream_from, ScanOrder};
use crate::error::{Error, Result};
use crate::tabloid::{Partition, Tabloid};
use crate::window::Window;

/// A pair of same-shape row-standard tableaux with an integer weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AmbcTriple {
    pub p: Tabloid,
    pub q: Tabloid,
    pub rho: Vec<i64>,
}

impl AmbcTriple {
    pub fn new(p: Tabloid, q: Tabloid, rho: Vec<i64>) -> Result<Self> {
        let t = AmbcTriple { p, q, rho };
        t.validate()?;
        Ok(t)
    }

    /// Checks that `P` and `Q` are row-standard of one partition shape and
    /// that `ρ` has one entry per row.
    pub fn validate(&self) -> Result<()> {
        if !self.p.is_rsyt() || !self.q.is_rsyt() {
            return Err(Error::Validation("P and Q must be row-standard tableaux".into()));
        }
        if self.p.shape() != self.q.shape() || self.rho.len() != self.p.num_rows() {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    pub fn shape(&self) -> Partition {
        self.p.shape().sorted()
    }

    pub fn n(&self) -> usize {
        self.p.size()
    }

    pub fn offset(&self) -> Vec<i64> {
        symmetrized_offset(&self.p, &self.q).expect("validated triple")
    }

    /// `•ρ = ρ - s_{P,Q}`.
    pub fn reduced_rho(&self) -> Vec<i64> {
        reduced_weight(&self.rho, &self.p, &self.q).expect("validated triple")
    }

    pub fn is_dominant(&self) -> bool {
        is_dominant(&self.rho, &self.p, &self.q).expect("validated triple")
    }
}

impl fmt::Display for AmbcTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rho: Vec<String> = self.rho.iter().map(ToString::to_string).collect();
        write!(f, "({}, {}, ({}))", self.p, self.q, rho.join(","))
    }
}

/// The streams `S_1, S_2, ...` peeled off by repeated forward steps.
pub fn forward_streams(w: &Window) -> Vec<Stream> {
    let mut cur = w.clone();
    let mut out = Vec::new();
    while !cur.is_empty() {
        let (fw, st) = forward_step(&cur);
        out.push(st);
        cur = fw;
    }
    out
}

/// `Φ(w)`. Row `i` of `P` holds the image residues of the `i`-th stream and
/// row `i` of `Q` its domain residues, which is the convention under which
/// left multiplication by `ω` acts on `P` and the first row of `Q` records
/// the positions of the southwest channel.
pub fn phi(w: &Window) -> Result<AmbcTriple> {
    if !w.is_total() {
        return Err(Error::NotTotal);
    }
    let streams = forward_streams(w);
    let p = Tabloid::new(streams.iter().map(Stream::image).collect());
    let q = Tabloid::new(streams.iter().map(Stream::domain).collect());
    let rho = streams.iter().map(Stream::altitude).collect();
    Ok(AmbcTriple { p, q, rho })
}

/// The stream of row `i` (1-based) of a triple.
pub fn triple_stream(t: &AmbcTriple, i: usize) -> Result<Stream> {
    stream_from(t.q.row(i), t.p.row(i), t.rho[i - 1], t.n())
}

/// `Ψ(P, Q, ρ)`; dominance of `ρ` is not required.
pub fn psi(t: &AmbcTriple) -> Result<Window> {
    psi_with(t, ScanOrder::Increasing)
}

pub fn psi_with(t: &AmbcTriple, order: ScanOrder) -> Result<Window> {
    t.validate()?;
    let n = t.n();
    let mut w = Window::empty(n);
    for i in (1..=t.p.num_rows()).rev() {
        let s = triple_stream(t, i)?;
        w = bk_with(&w, &s, order)?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Window {
        s.parse().unwrap()
    }

    fn triple(p: &str, q: &str, rho: &[i64]) -> AmbcTriple {
        AmbcTriple::new(p.parse().unwrap(), q.parse().unwrap(), rho.to_vec()).unwrap()
    }

    #[test]
    fn phi_of_examples() {
        assert_eq!(
            phi(&w("[1,6,8,14,17,5,0,19,3,22]")).unwrap(),
            triple("((3,5,8,10),(1,4,9),(2,6),(7))", "((4,5,8,10),(1,2,3),(6,9),(7))", &[4, 0, 0, 0])
        );
        assert_eq!(
            phi(&w("[6,1,18,3,19,24,12,15,17,10]")).unwrap(),
            triple("((1,3,10),(2,5,6),(4,7,9),(8))", "((3,5,6),(7,8,9),(1,4,10),(2))", &[2, 3, 2, 0])
        );
        assert_eq!(phi(&Window::identity(4)).unwrap(), triple("((1,2,3,4))", "((1,2,3,4))", &[0]));
    }

    #[test]
    fn psi_of_examples() {
        let t = triple("((1,3,10),(2,5,6),(4,7,9),(8))", "((3,5,6),(7,8,9),(1,4,10),(2))", &[2, 4, 2, 0]);
        assert_eq!(psi(&t).unwrap(), w("[6,1,18,3,19,24,15,17,22,10]"));
        assert_eq!(psi(&triple("((1,2,3))", "((1,2,3))", &[0])).unwrap(), Window::identity(3));
        let x = w("[1,6,8,14,17,5,0,19,3,22]");
        assert_eq!(psi(&phi(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn json_form() {
        let t = triple("((1,3),(2))", "((1,2),(3))", &[1, -2]);
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"p":[[1,3],[2]],"q":[[1,2],[3]],"rho":[1,-2]}"#);
        let back: AmbcTriple = serde_json::from_str(&j).unwrap();
        assert_eq!(back, t);
    }
}
