//! Hilbert functions of surfaces in P^3 and the h-vectors of point sets on them.
//!
//! Everything here is closed-form integer arithmetic. A surface `S` of degree
//! `d` has Hilbert function `H_S(x) = C(x+3,3) - C(x-d+3,3)` and first
//! difference `h_S`, which is linear (`dx - C(d-1,2) + 1`) from degree `d-1`
//! on. General points on `S` have *relatively compressed* h-vectors: they
//! follow `h_S` for as long as the cardinality allows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(n, k)` with the convention `C(n, k) = 0` whenever `n < k` or `k < 0`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        // exact at every step: acc = C(n - k + i + 1, i + 1) after the division
        acc = acc.checked_mul(n - k + i + 1).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// `H_S(x)` for a surface of degree `d`; zero in negative degrees.
pub fn surface_hilbert(d: i64, x: i64) -> i64 {
    if x < 0 {
        return 0;
    }
    binomial(x + 3, 3) - binomial(x - d + 3, 3)
}

/// `h_S(x) = H_S(x) - H_S(x-1)`.
///
/// Below degree `d-1` this is the binomial difference `C(x+2, 2)`; from `d-1`
/// on it is the plane-curve polynomial [`surface_h_linear`].
pub fn surface_h(d: i64, x: i64) -> i64 {
    if x < 0 {
        0
    } else if x >= d - 1 {
        surface_h_linear(d, x)
    } else {
        surface_hilbert(d, x) - surface_hilbert(d, x - 1)
    }
}

/// `dx - C(d-1, 2) + 1`, the Hilbert polynomial of a plane curve of degree `d`.
/// Only meaningful as `h_S(x)` for `x >= d - 1`.
pub fn surface_h_linear(d: i64, x: i64) -> i64 {
    d * x - binomial(d - 1, 2) + 1
}

/// A finite h-vector, indexed from degree 0, with trailing zeros trimmed.
///
/// The empty vector is the h-vector of the empty scheme.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn new(mut values: Vec<i64>) -> Result<Self> {
        if let Some(pos) = values.iter().position(|&v| v < 0) {
            return Err(Error::InvalidParams(format!(
                "h-vector entry {} in degree {pos} is negative",
                values[pos]
            )));
        }
        while values.last() == Some(&0) {
            values.pop();
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry in degree `i`, zero outside the stored range.
    pub fn get(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.0.get(i as usize).copied().unwrap_or(0)
    }

    /// Last degree with a nonzero entry.
    pub fn socle_degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Number of points, i.e. the sum of the entries.
    pub fn cardinality(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// Partial sums: the Hilbert function in degrees `0..len`.
    pub fn hilbert_function(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |acc, &h| {
                *acc += h;
                Some(*acc)
            })
            .collect()
    }
}

impl TryFrom<Vec<i64>> for HVector {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        HVector::new(v)
    }
}

impl From<HVector> for Vec<i64> {
    fn from(h: HVector) -> Self {
        h.0
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Degree `d` of the surface, socle degree `e` and surplus `t` of `X_{e,t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub d: i64,
    pub e: i64,
    pub t: i64,
}

impl FamilyParams {
    pub fn new(d: i64, e: i64, t: i64) -> Result<Self> {
        if d < 4 {
            return Err(Error::InvalidParams(format!("surface degree d = {d} < 4")));
        }
        if e < 1 {
            return Err(Error::InvalidParams(format!("socle degree e = {e} < 1")));
        }
        let max = surface_h(d, e);
        if !(1..=max).contains(&t) {
            return Err(Error::InvalidParams(format!(
                "surplus t = {t} outside 1..={max} = h_S({e}) for d = {d}"
            )));
        }
        Ok(Self { d, e, t })
    }

    /// Socle degrees below 3 are accepted but fall outside the range in
    /// which the family is usually stated; reports flag them.
    pub fn low_socle_degree(&self) -> bool {
        self.e < 3
    }

    /// Whether the prediction for this family is the Ballico–Geramita table
    /// of general points in P^3 rather than the surface-relative one.
    pub fn uses_generic_prediction(&self) -> bool {
        self.e <= self.d
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, e={}, t={})", self.d, self.e, self.t)
    }
}

/// `(1, 3, 6, ..., h_S(e-1), t)`.
pub fn family_hvector(params: FamilyParams) -> HVector {
    let mut values: Vec<i64> = (0..params.e).map(|x| surface_h(params.d, x)).collect();
    values.push(params.t);
    HVector::new(values).expect("family h-vector entries are positive")
}

/// `|X_{e,t}| = H_S(e-1) + t`.
pub fn cardinality(params: FamilyParams) -> i64 {
    surface_hilbert(params.d, params.e - 1) + params.t
}

/// Relatively compressed Gorenstein h-vector of socle degree `socle`:
/// `h_S` up to `floor(socle/2)`, then determined by symmetry.
pub fn gorenstein_hvector(d: i64, socle: i64) -> HVector {
    assert!(socle >= 0, "negative socle degree");
    let values = (0..=socle)
        .map(|x| surface_h(d, x.min(socle - x)))
        .collect();
    HVector::new(values).expect("h_S is nonnegative")
}

/// h-vector of `n` general points in P^3: truncated binomial growth.
pub fn generic_hvector(n: i64) -> HVector {
    assert!(n >= 0, "negative point count");
    let mut remaining = n;
    let mut values = Vec::new();
    let mut x = 0;
    while remaining > 0 {
        let h = binomial(x + 2, 2).min(remaining);
        values.push(h);
        remaining -= h;
        x += 1;
    }
    HVector::new(values).expect("positive entries")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalValues {
    pub m1: i64,
    pub m2: i64,
    pub m3: i64,
    pub m4: i64,
}

impl CriticalValues {
    pub fn as_array(&self) -> [i64; 4] {
        [self.m1, self.m2, self.m3, self.m4]
    }
}

/// The four extremal surpluses for socle degree `e`:
///
/// * `m1 = max { t : 3t <= h_S(e-1) }`
/// * `m2 = min { t : 3t >= h_S(e-1) }`
/// * `m3 = max { t : 3(h_S(e) - t) >= h_S(e+1) }`
/// * `m4 = min { t : 3(h_S(e) - t) <= h_S(e+1) }`
pub fn critical_values(d: i64, e: i64) -> CriticalValues {
    let prev = surface_h(d, e - 1);
    let cur = surface_h(d, e);
    let next = surface_h(d, e + 1);
    CriticalValues {
        m1: prev.div_euclid(3),
        m2: ceil_div(prev, 3),
        m3: cur - ceil_div(next, 3),
        m4: cur - next.div_euclid(3),
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Numerator of the Hilbert series of `R/I` with h-vector `h`: the
/// coefficients of `h(z) (1 - z)^3`. Empty for the empty h-vector.
pub fn numerator(h: &HVector) -> Vec<i64> {
    const KOSZUL: [i64; 4] = [1, -3, 3, -1];
    if h.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; h.len() + 3];
    for (k, &hk) in h.values().iter().enumerate() {
        for (l, &c) in KOSZUL.iter().enumerate() {
            out[k + l] += hk * c;
        }
    }
    out
}

/// Inverse of [`numerator`]: divides by `(1 - z)^3`. Fails when the division
/// is not exact or the quotient has a negative entry.
pub fn hvector_from_numerator(n: &[i64]) -> Result<HVector> {
    let mut poly = n.to_vec();
    while poly.last() == Some(&0) {
        poly.pop();
    }
    for _ in 0..3 {
        if poly.is_empty() {
            break;
        }
        // synthetic division by (1 - z): q_k = sum_{i <= k} p_i, remainder = sum p_i
        let total: i64 = poly.iter().sum();
        if total != 0 {
            return Err(Error::NotPointSchemeTable(
                "alternating Betti sums are not divisible by (1 - z)^3".into(),
            ));
        }
        let mut acc = 0;
        let mut quot: Vec<i64> = poly
            .iter()
            .map(|&c| {
                acc += c;
                acc
            })
            .collect();
        quot.pop();
        while quot.last() == Some(&0) {
            quot.pop();
        }
        poly = quot;
    }
    HVector::new(poly).map_err(|_| {
        Error::NotPointSchemeTable("quotient by (1 - z)^3 has a negative entry".into())
    })
}
