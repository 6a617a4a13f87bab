//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * laplace_det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors `d_k / d_{k-1}`, where `d_k` is the gcd of all `k x k`
/// minors. Stops at the rank.
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut d = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect()).collect();
                d = d.gcd(&laplace_det(&minor));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push(&d / &prev);
        prev = d;
    }
    out
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_rows: usize, max_cols: usize, bound: i64) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(1..=max_cols);
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

/// `<x, y> = sum_i x_{a_i} y_{b_i} - x_{b_i} y_{a_i}` in the basis
/// `a_1, b_1, a_2, b_2, ...`.
pub fn pairing(x: &[i64], y: &[i64]) -> i64 {
    x.chunks(2).zip(y.chunks(2)).map(|(p, q)| p[0] * q[1] - p[1] * q[0]).sum()
}

/// A nonzero vector of content 1 with small entries.
pub fn random_primitive<R: Rng>(rng: &mut R, dim: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-4..=4)).collect();
        let content = v.iter().fold(0i64, |a, &b| a.gcd(&b));
        if content != 0 {
            return v.into_iter().map(|x| x / content).collect();
        }
    }
}

/// Least integer `g` with `g >= 1 + k / (6(3h - 1))`, by rational ceiling.
pub fn commutator_genus_oracle(h: u64, k: u64) -> BigInt {
    let bound = BigRational::from_integer(1.into()) + BigRational::new(k.into(), (6 * (3 * h - 1)).into());
    bound.ceil().to_integer()
}

pub fn abs_is_one(x: &BigInt) -> bool {
    x.abs() == BigInt::from(1)
}
