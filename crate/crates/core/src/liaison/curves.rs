//! Degree and genus bookkeeping for the curves on a quartic surface that
//! carry the linking Gorenstein sets.

use serde::{Deserialize, Serialize};

use super::{
    gorenstein_resolution, hvector_link, mapping_cone_generic, CancellationPolicy, ConeResult,
    GorensteinKind, GorensteinSpec,
};
use crate::betti::predict_generic;
use crate::error::{Error, Result};
use crate::hilbert::{binomial, generic_hvector, surface_hilbert, HVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveNumerics {
    pub degree: i64,
    pub genus: i64,
}

impl CurveNumerics {
    pub const fn new(degree: i64, genus: i64) -> Self {
        Self { degree, genus }
    }

    /// `h^0(O_C(m)) = m deg - g + 1`, valid once `O_C(m)` is non-special.
    pub fn sections(&self, m: i64) -> i64 {
        m * self.degree - self.genus + 1
    }

    /// `dim [I_C]_m` for an arithmetically Cohen–Macaulay curve in a degree
    /// where `O_C(m)` is non-special.
    pub fn ideal_dimension(&self, m: i64) -> i64 {
        binomial(m + 3, 3) - self.sections(m)
    }
}

/// Smooth ACM curve of degree 6 and genus 3, resolved by
/// `0 -> R(-4)^3 -> R(-3)^4`.
pub const ACM_SEXTIC: CurveNumerics = CurveNumerics::new(6, 3);

/// Complete intersection of two quadrics.
pub const ELLIPTIC_QUARTIC: CurveNumerics = CurveNumerics::new(4, 1);

/// Residual of `c` in a complete intersection of type `(a, b)`:
/// `deg' = ab - deg`, `g' = g + (a + b - 4)(deg' - deg) / 2`.
pub fn ci_curve_link(c: CurveNumerics, a: i64, b: i64) -> Result<CurveNumerics> {
    if a < 1 || b < 1 || a * b < c.degree {
        return Err(Error::InvalidCurve(format!(
            "degree {} curve does not fit in a ({a}, {b}) complete intersection",
            c.degree
        )));
    }
    let degree = a * b - c.degree;
    let twice = (a + b - 4) * (degree - c.degree);
    if twice % 2 != 0 {
        return Err(Error::InvalidCurve(format!(
            "odd genus change linking ({}, {}) by ({a}, {b})",
            c.degree, c.genus
        )));
    }
    Ok(CurveNumerics {
        degree,
        genus: c.genus + twice / 2,
    })
}

/// Union of two curves meeting transversally in `meet` points.
pub fn curve_union(c1: CurveNumerics, c2: CurveNumerics, meet: i64) -> CurveNumerics {
    CurveNumerics {
        degree: c1.degree + c2.degree,
        genus: c1.genus + c2.genus + meet - 1,
    }
}

/// Numerics of a general member of `|m H_C - K_C|` on a curve `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinDivisor {
    /// `m deg C - (2g - 2)`: the number of points of the Gorenstein set.
    pub degree: i64,
    /// Riemann–Roch lower bound `degree - g` for the dimension of the linear
    /// system. The `h^1` term is dropped, so the true value can be larger.
    pub dimension_bound: i64,
}

pub fn gorenstein_from_curve(c: CurveNumerics, m: i64) -> Result<GorensteinDivisor> {
    if m < 1 {
        return Err(Error::InvalidCurve(format!("twist m = {m} < 1")));
    }
    let degree = m * c.degree - (2 * c.genus - 2);
    Ok(GorensteinDivisor {
        degree,
        dimension_bound: degree - c.genus,
    })
}

/// Slack in the two dimension counts that make a link on a quartic possible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilitySlacks {
    /// Degree-`e` forms through the base curve, modulo multiples of the
    /// quartic, that still vanish on `X`. Closed forms `6e - 16 - t`
    /// (type 1) and `4e - 8 - t` (type 2).
    pub generality: i64,
    /// Dimension bound of the Gorenstein linear system minus `|X|`. Closed
    /// forms `6e - 9 - t` and `4e - 3 - t`.
    pub system: i64,
}

impl FeasibilitySlacks {
    pub fn positive(&self) -> bool {
        self.generality > 0 && self.system > 0
    }
}

/// Both slacks for a link into socle degree `e` on a quartic, computed from
/// the underlying dimension counts.
///
/// Type 1 starts from [`ACM_SEXTIC`] and links `X_{e-2,t}`; type 2 starts
/// from [`ELLIPTIC_QUARTIC`] and links `X_{e-1,t}`. In both cases the base
/// curve is linked by `(4, e)` and the Gorenstein set is cut by
/// `|m H_C - K_C|` with `m = 2e - 3` or `2e - 2`.
pub fn feasibility_slacks(e: i64, t: i64, kind: GorensteinKind) -> Result<FeasibilitySlacks> {
    const D: i64 = 4;
    if e < 3 {
        return Err(Error::InvalidParams(format!("socle degree e = {e} < 3")));
    }
    let (base, twist, points) = match kind {
        GorensteinKind::Type1 => (ACM_SEXTIC, 2 * e - 3, surface_hilbert(D, e - 3) + t),
        GorensteinKind::Type2 => (ELLIPTIC_QUARTIC, 2 * e - 2, surface_hilbert(D, e - 2) + t),
        GorensteinKind::Sporadic => {
            return Err(Error::InvalidParams(
                "feasibility slacks are defined for type 1 and type 2 links".into(),
            ))
        }
    };
    let multiples_of_quartic = binomial(e - D + 3, 3);
    let generality = base.ideal_dimension(e) - multiples_of_quartic - points;
    let residual = ci_curve_link(base, D, e)?;
    let system = gorenstein_from_curve(residual, twist)?.dimension_bound - points;
    Ok(FeasibilitySlacks { generality, system })
}

/// One of the links that produce the sporadic cardinalities 23, 24 and 28
/// on a quartic, which lie below the range of the type 1 and 2 links.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SporadicLink {
    /// Cardinality of the residual set.
    pub cardinality: i64,
    /// Curve carrying the Gorenstein set.
    pub curve: CurveNumerics,
    pub twist: i64,
    pub divisor: GorensteinDivisor,
    pub gorenstein: GorensteinSpec,
    /// Number of general points linked.
    pub linked: i64,
    /// `divisor.dimension_bound - linked`.
    pub system_slack: i64,
    pub residual_hvec: HVector,
    pub residual: ConeResult,
}

/// The three sporadic links:
///
/// * the union of [`ACM_SEXTIC`] and [`ELLIPTIC_QUARTIC`] meeting in 8
///   points, linked by `(4, 5)`, carries 30-point Gorenstein sets in
///   `|5H - K|` that link 7 or 6 general points to 23 or 24;
/// * [`ELLIPTIC_QUARTIC`] linked by `(4, 4)` carries 40-point Gorenstein
///   sets in `|6H - K|` that link 12 general points to 28.
pub fn sporadic_links() -> Result<Vec<SporadicLink>> {
    let union = curve_union(ACM_SEXTIC, ELLIPTIC_QUARTIC, 8);
    let cases = [
        (ci_curve_link(union, 4, 5)?, 5, GorensteinKind::Type1, 7),
        (ci_curve_link(union, 4, 5)?, 5, GorensteinKind::Type1, 6),
        (
            ci_curve_link(ELLIPTIC_QUARTIC, 4, 4)?,
            6,
            GorensteinKind::Type2,
            12,
        ),
    ];
    cases
        .into_iter()
        .map(|(curve, twist, shape, linked)| {
            let mut gorenstein = gorenstein_resolution(4, 4, shape)?;
            gorenstein.kind = GorensteinKind::Sporadic;
            let divisor = gorenstein_from_curve(curve, twist)?;
            if divisor.degree != gorenstein.degree {
                return Err(Error::InvalidGorenstein(format!(
                    "|{twist}H - K| has degree {}, expected {}",
                    divisor.degree, gorenstein.degree
                )));
            }
            let residual_hvec = hvector_link(&gorenstein.hvec, &generic_hvector(linked))?;
            let residual = mapping_cone_generic(
                &predict_generic(linked)?,
                &gorenstein,
                CancellationPolicy::Splittings,
            )?;
            Ok(SporadicLink {
                cardinality: residual_hvec.cardinality(),
                curve,
                twist,
                divisor,
                gorenstein,
                linked,
                system_slack: divisor.dimension_bound - linked,
                residual_hvec,
                residual,
            })
        })
        .collect()
}
