//! The inequalities that let type-1 and type-2 links together reach every
//! critical surplus of a socle degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{critical_values, surface_h};

/// An inequality `lhs >= rhs` evaluated in integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl Inequality {
    fn at_least(lhs: i64, rhs: i64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub d: i64,
    pub e: i64,
    /// `(d, e) = (4, 5)`, the one case where the bounds are known not to overlap.
    pub excluded: bool,
    /// The type-1 surplus bound reaches the type-2 one:
    /// `(2/3) h_S(e) - 5d/3 >= h_S(e)/3`, i.e. `2 h_S(e) - 5d >= h_S(e)`.
    pub bounds_overlap: Inequality,
    /// Type-2 surpluses reach the top critical value: `h_S(e-1) - 1 >= m4(e)`.
    pub reaches_m4: Inequality,
}

pub fn lemma_checks(d: i64, e: i64) -> Result<LemmaReport> {
    if d < 4 || e < d + 1 {
        return Err(Error::InvalidParams(format!(
            "lemma checks need d >= 4 and e >= d + 1, got d = {d}, e = {e}"
        )));
    }
    let h = surface_h(d, e);
    Ok(LemmaReport {
        d,
        e,
        excluded: (d, e) == (4, 5),
        bounds_overlap: Inequality::at_least(2 * h - 5 * d, h),
        reaches_m4: Inequality::at_least(surface_h(d, e - 1) - 1, critical_values(d, e).m4),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub d: i64,
    pub e: i64,
    /// Surpluses reachable by type-1 links: `[1, h_S(e-2) - m2(e-2)]`.
    pub type1: (i64, i64),
    /// Surpluses reachable by type-2 links: `[h_S(e-1) - m3(e-1), h_S(e-1) - 1]`.
    pub type2: (i64, i64),
    /// `[1, m4(e)]`, the range that must be covered.
    pub target: (i64, i64),
    pub covered: bool,
}

pub fn coverage_check(d: i64, e: i64) -> Result<CoverageReport> {
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    if d < 4 || e < d + 1 {
        return Err(Error::InvalidParams(format!(
            "coverage needs d >= 4 and e >= d + 1, got d = {d}, e = {e}"
        )));
    }
    let type1 = (1, surface_h(d, e - 2) - critical_values(d, e - 2).m2);
    let prev = surface_h(d, e - 1);
    let type2 = (prev - critical_values(d, e - 1).m3, prev - 1);
    let target = (1, critical_values(d, e).m4);
    let (lo, hi) = if type2.0 <= type1.1 + 1 {
        (type1.0, type1.1.max(type2.1))
    } else {
        (type1.0, type1.1)
    };
    Ok(CoverageReport {
        d,
        e,
        type1,
        type2,
        target,
        covered: lo <= target.0 && hi >= target.1,
    })
}
