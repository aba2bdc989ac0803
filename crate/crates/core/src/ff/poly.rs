//! Root extraction for univariate polynomials of degree at most four.

use super::PrimeField;
use crate::error::{Error, Result};

/// Largest modulus for which roots are found by scanning the whole field.
const SCAN_LIMIT: u64 = 1 << 16;

/// Distinct roots in GF(p) of `c[0] + c[1] t + ... + c[4] t^4`, ascending.
pub fn quartic_roots(coeffs: &[u64; 5], field: PrimeField) -> Result<Vec<u64>> {
    let p = field.modulus();
    let poly: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
    if poly.iter().all(|&c| c == 0) {
        return Err(Error::IdenticallyZero);
    }
    if p <= SCAN_LIMIT {
        Ok(roots_by_scan(&poly, field))
    } else {
        Ok(roots_by_gcd(&poly, field))
    }
}

fn eval(poly: &[u64], t: u64, f: PrimeField) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, t), c))
}

pub(crate) fn roots_by_scan(poly: &[u64], f: PrimeField) -> Vec<u64> {
    (0..f.modulus())
        .filter(|&t| eval(poly, t, f) == 0)
        .collect()
}

/// Roots via `gcd(f, t^p - t)` followed by equal-degree splitting with
/// `(t + a)^((p-1)/2) - 1` for a = 1, 2, ... . Requires odd p.
pub(crate) fn roots_by_gcd(poly: &[u64], f: PrimeField) -> Vec<u64> {
    let p = f.modulus();
    let g = monic(trim(poly.to_vec()), f);
    if degree(&g) == 0 {
        return Vec::new();
    }
    // t^p - t reduced modulo g
    let tp = pow_mod(&[0, 1], p, &g, f);
    let split_part = gcd(&g, &sub(&tp, &[0, 1], f), f);
    let mut roots = Vec::new();
    split_linear(split_part, f, 1, &mut roots);
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn split_linear(g: Vec<u64>, f: PrimeField, mut shift: u64, out: &mut Vec<u64>) {
    let p = f.modulus();
    match degree(&g) {
        0 => {}
        1 => out.push(f.neg(f.mul(g[0], f.inv(g[1])))),
        n => loop {
            let h = pow_mod(&[shift % p, 1], (p - 1) / 2, &g, f);
            let cand = gcd(&g, &sub(&h, &[1], f), f);
            shift += 1;
            let dc = degree(&cand);
            if dc > 0 && dc < n {
                let (q, _) = div_rem(&g, &cand, f);
                split_linear(cand, f, shift, out);
                split_linear(monic(q, f), f, shift, out);
                return;
            }
        },
    }
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn degree(a: &[u64]) -> usize {
    a.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn monic(a: Vec<u64>, f: PrimeField) -> Vec<u64> {
    let a = trim(a);
    let lead = *a.last().unwrap();
    if lead == 0 {
        return a;
    }
    let inv = f.inv(lead);
    a.into_iter().map(|c| f.mul(c, inv)).collect()
}

fn sub(a: &[u64], b: &[u64], f: PrimeField) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            f.sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    trim(out)
}

fn mul(a: &[u64], b: &[u64], f: PrimeField) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

fn div_rem(a: &[u64], b: &[u64], f: PrimeField) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    let db = degree(&b);
    let inv_lead = f.inv(b[db]);
    let mut rem = trim(a.to_vec());
    if degree(&rem) < db || is_zero(&rem) {
        return (vec![0], rem);
    }
    let mut quot = vec![0u64; degree(&rem) - db + 1];
    while !is_zero(&rem) && degree(&rem) >= db {
        let dr = degree(&rem);
        let coef = f.mul(rem[dr], inv_lead);
        quot[dr - db] = coef;
        for (i, &bc) in b.iter().enumerate().take(db + 1) {
            rem[dr - db + i] = f.sub(rem[dr - db + i], f.mul(coef, bc));
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn gcd(a: &[u64], b: &[u64], f: PrimeField) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !is_zero(&y) {
        let (_, r) = div_rem(&x, &y, f);
        x = y;
        y = r;
    }
    monic(x, f)
}

fn pow_mod(base: &[u64], mut exp: u64, modulus: &[u64], f: PrimeField) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = div_rem(base, modulus, f).1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = div_rem(&mul(&acc, &b, f), modulus, f).1;
        }
        b = div_rem(&mul(&b, &b, f), modulus, f).1;
        exp >>= 1;
    }
    acc
}
