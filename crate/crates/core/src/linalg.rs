//! Exact Gaussian elimination over [`Scalar`].

use crate::scalar::Scalar;

/// Row-echelon basis builder: vectors are added one at a time and kept in
/// reduced form against the pivots collected so far.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current pivots.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
    }

    /// Adds `v`; returns true when it was independent of the previous vectors.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &(&c * r);
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }
}

pub fn rank(vectors: impl IntoIterator<Item = Vec<Scalar>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Solves `Σ x_k · columns[k] = target`, returning `None` when inconsistent.
/// `columns` must be linearly independent.
pub fn solve(columns: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = columns.len();
    let n = target.len();
    // augmented rows: [column entries | identity tag]
    let mut e = Echelon::new();
    for (idx, c) in columns.iter().enumerate() {
        let mut v = c.clone();
        v.extend((0..k).map(|t| if t == idx { Scalar::one() } else { Scalar::zero() }));
        e.insert(v);
    }
    let mut t = target.to_vec();
    t.extend((0..k).map(|_| Scalar::zero()));
    e.reduce(&mut t);
    if t[..n].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(t[n..].iter().map(|x| -x.clone()).collect())
}
