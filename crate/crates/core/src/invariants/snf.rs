//! Smith normal form over the integers with transform tracking.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// `u * a * v = d` with `d` diagonal, `d[i] | d[i+1]`, all diagonal entries nonnegative.
#[derive(Clone, Debug)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

struct State {
    a: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl State {
    // row i += c * row j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(src) {
                *x += c * y;
            }
        }
        for row in self.u_inv.iter_mut() {
            let y = row[i].clone();
            row[j] -= c * y;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -&row[i];
        }
    }

    // col i += c * col j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let y = row[j].clone();
                row[i] += c * y;
            }
        }
        let src = self.v_inv[i].clone();
        for (x, y) in self.v_inv[j].iter_mut().zip(src) {
            *x -= c * y;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                row.swap(i, j);
            }
        }
        self.v_inv.swap(i, j);
    }
}

pub fn smith_normal_form(a: &Matrix, rows: usize, cols: usize) -> Snf {
    let mut s = State {
        a: a.clone(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
    };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s.a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| s.a[i][j].abs() < s.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if s.a[i][t].is_zero() {
                    continue;
                }
                let q = s.a[i][t].div_floor(&s.a[t][t]);
                s.add_row(i, t, &-q);
                if !s.a[i][t].is_zero() {
                    s.swap_rows(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if s.a[t][j].is_zero() {
                    continue;
                }
                let q = s.a[t][j].div_floor(&s.a[t][t]);
                s.add_col(j, t, &-q);
                if !s.a[t][j].is_zero() {
                    s.swap_cols(t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s.a[i][j].is_multiple_of(&s.a[t][t]));
            match bad {
                Some((i, _)) => s.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.a[t][t].is_negative() {
            s.negate_row(t);
        }
        diagonal.push(s.a[t][t].clone());
    }
    while diagonal.len() < rows.min(cols) {
        diagonal.push(BigInt::zero());
    }
    Snf {
        rows,
        cols,
        diagonal,
        u: s.u,
        u_inv: s.u_inv,
        v: s.v,
        v_inv: s.v_inv,
    }
}
