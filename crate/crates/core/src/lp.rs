//! Exact feasibility of `A x = b, x >= 0` over the rationals.
//!
//! Phase-one simplex with Bland's rule. Infeasible systems come with a Farkas certificate
//! `y` satisfying `y·A_j <= 0` for every column and `y·b > 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<BigRational>),
    Infeasible(Vec<BigRational>),
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> Feasibility {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let width = n + m + 1;
    let mut sign = vec![BigRational::one(); m];
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); width];
        let s = if b[i].is_negative() {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        for j in 0..n {
            row[j] = &a[i][j] * &s;
        }
        row[n + i] = BigRational::one();
        row[width - 1] = &b[i] * &s;
        sign[i] = s;
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| -> BigRational {
        if j >= n {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    };

    loop {
        let mut entering = None;
        for j in 0..n + m {
            if basis.contains(&j) {
                continue;
            }
            let mut d = cost(j);
            for i in 0..m {
                if !t[i][j].is_zero() {
                    d -= cost(basis[i]) * &t[i][j];
                }
            }
            if d.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.expect("phase one objective is bounded below");
        let pivot = t[r][j].clone();
        for x in t[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[r].clone();
        for i in 0..m {
            if i != r && !t[i][j].is_zero() {
                let factor = t[i][j].clone();
                for (x, p) in t[i].iter_mut().zip(pivot_row.iter()) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
        }
        basis[r] = j;
    }

    let objective: BigRational = (0..m)
        .map(|i| cost(basis[i]) * &t[i][width - 1])
        .fold(BigRational::zero(), |acc, x| acc + x);
    if objective.is_zero() {
        let mut x = vec![BigRational::zero(); n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = t[i][width - 1].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        let mut y = vec![BigRational::zero(); m];
        for k in 0..m {
            let mut pi = BigRational::zero();
            for i in 0..m {
                pi += cost(basis[i]) * &t[i][n + k];
            }
            y[k] = pi * &sign[k];
        }
        Feasibility::Infeasible(y)
    }
}

/// Checks a feasibility answer independently of how it was produced.
pub fn verify(a: &[Vec<BigRational>], b: &[BigRational], answer: &Feasibility) -> bool {
    let n = a.first().map_or(0, |r| r.len());
    match answer {
        Feasibility::Feasible(x) => {
            x.len() == n
                && x.iter().all(|v| !v.is_negative())
                && a.iter().zip(b).all(|(row, bi)| {
                    row.iter()
                        .zip(x)
                        .fold(BigRational::zero(), |acc, (p, q)| acc + p * q)
                        == *bi
                })
        }
        Feasibility::Infeasible(y) => {
            let yb = y
                .iter()
                .zip(b)
                .fold(BigRational::zero(), |acc, (p, q)| acc + p * q);
            yb.is_positive()
                && (0..n).all(|j| {
                    !a.iter()
                        .zip(y)
                        .fold(BigRational::zero(), |acc, (row, yi)| acc + &row[j] * yi)
                        .is_positive()
                })
        }
    }
}
