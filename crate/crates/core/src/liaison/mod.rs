//! Gorenstein liaison of point sets: resolutions of the linking Gorenstein
//! sets, the mapping cone that transfers a resolution to the residual, and
//! the two link types used to climb from socle degree `e - 2` or `e - 1` to `e`.

mod checks;
mod curves;

pub use checks::{coverage_check, lemma_checks, CoverageReport, LemmaReport};
pub use curves::{
    ci_curve_link, curve_union, feasibility_slacks, gorenstein_from_curve, sporadic_links,
    CurveNumerics, FeasibilitySlacks, GorensteinDivisor, SporadicLink, ACM_SEXTIC,
    ELLIPTIC_QUARTIC,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::{
    hilbert_from_table, predict_mrc, validate_generic_shape, validate_mrc_shape, BettiTable,
};
use crate::error::{Error, Result};
use crate::hilbert::{critical_values, gorenstein_hvector, surface_h, FamilyParams, HVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinKind {
    /// Socle degree `2e - 2`, generators `R(-d) + R(-e)^{2d}`.
    Type1,
    /// Socle degree `2e - 1`, generators `R(-d) + R(-e)^d`; needs `d` even.
    Type2,
    /// Any other arithmetically Gorenstein set given by its resolution.
    Sporadic,
}

impl fmt::Display for GorensteinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GorensteinKind::Type1 => "type1",
            GorensteinKind::Type2 => "type2",
            GorensteinKind::Sporadic => "sporadic",
        })
    }
}

impl std::str::FromStr for GorensteinKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "type1" => Ok(GorensteinKind::Type1),
            "2" | "type2" => Ok(GorensteinKind::Type2),
            "sporadic" => Ok(GorensteinKind::Sporadic),
            other => Err(Error::InvalidParams(format!("unknown link type {other:?}"))),
        }
    }
}

/// Numerical data of an arithmetically Gorenstein point set on a surface of
/// degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinSpec {
    pub d: i64,
    pub socle: i64,
    pub kind: GorensteinKind,
    pub hvec: HVector,
    pub resolution: BettiTable,
    pub degree: i64,
}

impl GorensteinSpec {
    /// Builds a spec from a resolution, checking that it resolves a
    /// Gorenstein point set: symmetric h-vector and a rank-one last module
    /// sitting in degree `socle + 3`.
    pub fn from_resolution(d: i64, kind: GorensteinKind, resolution: BettiTable) -> Result<Self> {
        let hvec = hilbert_from_table(&resolution)?;
        if hvec.is_empty() || !hvec.is_symmetric() {
            return Err(Error::InvalidGorenstein(format!(
                "h-vector {hvec} is not symmetric"
            )));
        }
        let socle = hvec.len() as i64 - 1;
        let last = resolution.module(3);
        if last != [((socle + 3) as usize, 1)] {
            return Err(Error::InvalidGorenstein(format!(
                "last module {last:?} is not R(-{})",
                socle + 3
            )));
        }
        let degree = hvec.cardinality();
        Ok(Self {
            d,
            socle,
            kind,
            hvec,
            resolution,
            degree,
        })
    }

    /// Twist `s = socle + 3` of the last free module; the mapping cone
    /// dualizes against `R(-s)`.
    pub fn top_twist(&self) -> usize {
        (self.socle + 3) as usize
    }
}

/// Resolution of the relatively compressed Gorenstein set used by a link of
/// the given type into socle degree `e`.
///
/// Type 1 (socle `2e - 2`):
/// `0 -> R(-2e-1) -> R(-2e-1+d) + R(-e-1)^{2d} -> R(-e)^{2d} + R(-d)`.
///
/// Type 2 (socle `2e - 1`, `d` even):
/// `0 -> R(-2e-2) -> R(-2e-2+d) + R(-e-2)^d -> R(-e)^d + R(-d)`.
///
/// With `e = d` the twists collide and the counts add up; for `d = 4` this
/// gives the 30- and 40-point sets used for the sporadic cardinalities.
pub fn gorenstein_resolution(d: i64, e: i64, kind: GorensteinKind) -> Result<GorensteinSpec> {
    if d < 4 || e < d {
        return Err(Error::InvalidParams(format!(
            "Gorenstein link resolution needs d >= 4 and e >= d, got d = {d}, e = {e}"
        )));
    }
    let (du, eu) = (d as usize, e as usize);
    let mut tbl = BettiTable::new();
    tbl.add(1, du, 1);
    match kind {
        GorensteinKind::Type1 => {
            tbl.add(1, eu, 2 * du as u64);
            tbl.add(2, eu + 1, 2 * du as u64);
            tbl.add(2, 2 * eu + 1 - du, 1);
            tbl.add(3, 2 * eu + 1, 1);
        }
        GorensteinKind::Type2 => {
            if d % 2 != 0 {
                return Err(Error::OddDegree(d));
            }
            tbl.add(1, eu, du as u64);
            tbl.add(2, eu + 2, du as u64);
            tbl.add(2, 2 * eu + 2 - du, 1);
            tbl.add(3, 2 * eu + 2, 1);
        }
        GorensteinKind::Sporadic => {
            return Err(Error::InvalidParams(
                "sporadic Gorenstein sets are built with GorensteinSpec::from_resolution".into(),
            ))
        }
    }
    let spec = GorensteinSpec::from_resolution(d, kind, tbl)?;
    let socle = match kind {
        GorensteinKind::Type1 => 2 * e - 2,
        _ => 2 * e - 1,
    };
    debug_assert_eq!(spec.hvec, gorenstein_hvector(d, socle));
    Ok(spec)
}

/// Residual h-vector: `h_Z(i) = h_G(i) - h_X(socle - i)`.
pub fn hvector_link(g: &HVector, x: &HVector) -> Result<HVector> {
    let socle = g.len() as i64 - 1;
    if x.len() > g.len() {
        return Err(Error::NotLinkable {
            degree: x.len() - 1,
        });
    }
    let mut out = Vec::with_capacity(g.len());
    for i in 0..=socle {
        let v = g.get(i) - x.get(socle - i);
        if v < 0 {
            return Err(Error::NotLinkable { degree: i as usize });
        }
        out.push(v);
    }
    HVector::new(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CancellationPolicy {
    /// Only the splittings the link argument relies on: the top pair
    /// `R(-s)`, and one `R(-s+d)` shared by the Gorenstein second syzygies
    /// and the dual of the degree-`d` generator of `X`.
    #[default]
    Splittings,
    /// Cancels every equal-twist pair in adjacent modules. The result need
    /// not be a resolution of anything; exploration only.
    Maximal,
}

impl std::str::FromStr for CancellationPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "splittings" => Ok(CancellationPolicy::Splittings),
            "maximal" => Ok(CancellationPolicy::Maximal),
            other => Err(Error::InvalidParams(format!("unknown policy {other:?}"))),
        }
    }
}

/// `multiplicity` copies of `R(-twist)` removed from homological degrees
/// `index` and `index + 1` of the cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cancellation {
    pub index: usize,
    pub twist: usize,
    pub multiplicity: u64,
}

impl fmt::Display for Cancellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R(-{})^{} between degrees {} and {}",
            self.twist,
            self.multiplicity,
            self.index,
            self.index + 1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeResult {
    pub table: BettiTable,
    pub cancellations: Vec<Cancellation>,
}

/// Resolution of the residual `Z` of `X` in `G` from the mapping cone.
///
/// With `s` the top twist of `G`, the cone has modules
/// `Z_1 = F_3^v(-s) + G_1`, `Z_2 = F_2^v(-s) + G_2`, `Z_3 = F_1^v(-s) + G_3`
/// and `Z_4 = F_0^v(-s)`, where `F` resolves `R/I_X` and `F_i^v(-s)` turns
/// `R(-j)` into `R(-(s - j))`. The result is minimal only when the policy's
/// cancellations remove every redundancy.
pub fn mapping_cone_generic(
    table_x: &BettiTable,
    spec: &GorensteinSpec,
    policy: CancellationPolicy,
) -> Result<ConeResult> {
    if table_x.get(0, 0) != 1 || table_x.module(0).len() != 1 {
        return Err(Error::LinkPrecondition(
            "input table must start with a single R".into(),
        ));
    }
    let hx = hilbert_from_table(table_x)?;
    hvector_link(&spec.hvec, &hx)?;

    let s = spec.top_twist();
    let mut cone = BettiTable::new();
    for ((i, j), v) in spec.resolution.iter().filter(|&((i, _), _)| i >= 1) {
        cone.add(i, j, v);
    }
    for ((i, j), v) in table_x.iter() {
        if j > s {
            return Err(Error::NotLinkable { degree: j });
        }
        cone.add(4 - i, s - j, v);
    }

    let mut log = Vec::new();
    let mut cancel = |cone: &mut BettiTable, index: usize, twist: usize, m: u64| {
        if m > 0 {
            cone.remove(index, twist, m);
            cone.remove(index + 1, twist, m);
            log.push(Cancellation {
                index,
                twist,
                multiplicity: m,
            });
        }
    };

    // G_3 = R(-s) against F_0^v(-s) = R(-s): the comparison map is a unit
    cancel(&mut cone, 3, s, 1);

    match policy {
        CancellationPolicy::Splittings => {
            let d = spec.d as usize;
            if s > d && spec.resolution.get(2, s - d) > 0 && table_x.get(1, d) > 0 {
                cancel(&mut cone, 2, s - d, 1);
            }
        }
        CancellationPolicy::Maximal => {
            for index in [2, 1, 0] {
                let twists: Vec<usize> = cone.module(index).into_iter().map(|(j, _)| j).collect();
                for j in twists {
                    let m = cone.get(index, j).min(cone.get(index + 1, j));
                    cancel(&mut cone, index, j, m);
                }
            }
        }
    }
    Ok(ConeResult {
        table: cone,
        cancellations: log,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkResult {
    pub residual_hvec: HVector,
    pub residual_table: BettiTable,
    pub surplus: i64,
    /// Surplus within the closed-form bounds of the link type (see
    /// [`link_type1`] and [`link_type2`]).
    pub closed_form_bound: bool,
    /// Surplus within the bounds that follow directly from the admissible
    /// range of `t`.
    pub sharp_bound: bool,
    pub cancellations: Vec<Cancellation>,
}

/// Reads `t` from the table of `X_{socle,t}`, checking that its h-vector
/// follows `h_S` below the socle degree.
fn read_surplus(d: i64, socle: i64, table: &BettiTable) -> Result<(HVector, i64)> {
    let hx = hilbert_from_table(table)?;
    let follows_surface = (0..socle).all(|x| hx.get(x) == surface_h(d, x));
    if hx.len() as i64 != socle + 1 || !follows_surface {
        return Err(Error::LinkPrecondition(format!(
            "input h-vector {hx} is not that of X_(e={socle},t) on a degree-{d} surface"
        )));
    }
    let t = hx.get(socle);
    Ok((hx, t))
}

fn check_input_shape(d: i64, socle: i64, table: &BettiTable) -> Result<()> {
    let check = if socle > d {
        validate_mrc_shape(table, d, socle)
    } else {
        validate_generic_shape(table)
    };
    match check.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::LinkPrecondition(format!("input table: {v}"))),
    }
}

fn link(
    d: i64,
    socle_x: i64,
    table_x: &BettiTable,
    spec: &GorensteinSpec,
) -> Result<(HVector, ConeResult)> {
    let (hx, _) = read_surplus(d, socle_x, table_x)?;
    let residual_hvec = hvector_link(&spec.hvec, &hx)?;
    let cone = mapping_cone_generic(table_x, spec, CancellationPolicy::Splittings)?;
    debug_assert_eq!(
        hilbert_from_table(&cone.table).ok().as_ref(),
        Some(&residual_hvec)
    );
    Ok((residual_hvec, cone))
}

/// Links `X_{e-2,t}` by a type-1 Gorenstein set to `Z = X_{e,s}` with
/// `s = h_S(e-2) - t`.
///
/// Requires `e >= d + 1` and `m2(e-2) <= t < h_S(e-2)`.
///
/// The closed-form surplus bound is `1 <= s <= (2 h_S(e) - 5d) / 3`. The
/// sharp one, `3s <= 3 h_S(e-2) - h_S(e-3)`, is what `t >= m2(e-2)` gives;
/// for `e >= d + 2` it equals `(2 h_S(e) - 3d) / 3`, so surpluses near the
/// top of the range exceed the closed form by up to `2d / 3`.
pub fn link_type1(d: i64, e: i64, table_x: &BettiTable) -> Result<LinkResult> {
    if e < d + 1 {
        return Err(Error::LinkPrecondition(format!(
            "e = {e} < d + 1 = {}",
            d + 1
        )));
    }
    let (_, t) = read_surplus(d, e - 2, table_x)?;
    let top = surface_h(d, e - 2);
    if t >= top {
        return Err(Error::LinkPrecondition(format!(
            "t = {t} >= h_S(e-2) = {top} leaves no surplus"
        )));
    }
    if t < critical_values(d, e - 2).m2 {
        return Err(Error::LinkPrecondition(format!(
            "c1 > 0: redundant R(-{}) not excluded",
            e + 1
        )));
    }
    check_input_shape(d, e - 2, table_x)?;
    let spec = gorenstein_resolution(d, e, GorensteinKind::Type1)?;
    let (residual_hvec, cone) = link(d, e - 2, table_x, &spec)?;
    let s = top - t;
    Ok(LinkResult {
        residual_hvec,
        residual_table: cone.table,
        surplus: s,
        closed_form_bound: 1 <= s && 3 * s <= 2 * surface_h(d, e) - 5 * d,
        sharp_bound: 1 <= s && 3 * s <= 3 * top - surface_h(d, e - 3),
        cancellations: cone.cancellations,
    })
}

/// Links `X_{e-1,t}` by a type-2 Gorenstein set to `Z = X_{e,s}` with
/// `s = h_S(e-1) - t`.
///
/// Requires `d` even, `e >= d + 1` and `t <= m3(e-1)`. The surplus bound is
/// `h_S(e) / 3 <= s <= h_S(e-1) - 1`, and it is sharp.
pub fn link_type2(d: i64, e: i64, table_x: &BettiTable) -> Result<LinkResult> {
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    if e < d + 1 {
        return Err(Error::LinkPrecondition(format!(
            "e = {e} < d + 1 = {}",
            d + 1
        )));
    }
    let (_, t) = read_surplus(d, e - 1, table_x)?;
    if t > critical_values(d, e - 1).m3 {
        return Err(Error::LinkPrecondition(format!(
            "a2 > 0: redundant R(-{}) not excluded",
            e + 2
        )));
    }
    check_input_shape(d, e - 1, table_x)?;
    let spec = gorenstein_resolution(d, e, GorensteinKind::Type2)?;
    let (residual_hvec, cone) = link(d, e - 1, table_x, &spec)?;
    let s = surface_h(d, e - 1) - t;
    let in_bounds = 3 * s >= surface_h(d, e) && s < surface_h(d, e - 1);
    Ok(LinkResult {
        residual_hvec,
        residual_table: cone.table,
        surplus: s,
        closed_form_bound: in_bounds,
        sharp_bound: in_bounds,
        cancellations: cone.cancellations,
    })
}

/// The quintic example of why type-2 links need even degree: `X_{6,t}` on a
/// quintic linked by a socle-13 Gorenstein set with a single degree-8
/// generator,
/// `0 -> R(-16) -> R(-11) + R(-9)^5 + R(-8) -> R(-8) + R(-7)^5 + R(-5)`.
/// The degree-8 generator of `G` has nothing to split against, so the
/// residual keeps `R(-8)` among both generators and first syzygies.
pub fn odd_degree_obstruction(t: i64) -> Result<ConeResult> {
    let params = FamilyParams::new(5, 6, t)?;
    let g = BettiTable::from_entries([
        ((0, 0), 1),
        ((1, 5), 1),
        ((1, 7), 5),
        ((1, 8), 1),
        ((2, 8), 1),
        ((2, 9), 5),
        ((2, 11), 1),
        ((3, 16), 1),
    ]);
    let spec = GorensteinSpec::from_resolution(5, GorensteinKind::Type2, g)?;
    mapping_cone_generic(&predict_mrc(params)?, &spec, CancellationPolicy::Splittings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{predict_generic, predict_mrc, Violation};
    use crate::hilbert::cardinality;

    fn mrc(d: i64, e: i64, t: i64) -> BettiTable {
        predict_mrc(FamilyParams::new(d, e, t).unwrap()).unwrap()
    }

    fn hv(v: &[i64]) -> HVector {
        HVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn gorenstein_resolutions() {
        let g = gorenstein_resolution(4, 5, GorensteinKind::Type1).unwrap();
        assert_eq!(g.socle, 8);
        assert_eq!(g.degree, 54);
        assert_eq!(
            g.resolution,
            BettiTable::from_entries([
                ((0, 0), 1),
                ((1, 4), 1),
                ((1, 5), 8),
                ((2, 6), 8),
                ((2, 7), 1),
                ((3, 11), 1)
            ])
        );
        let g = gorenstein_resolution(4, 5, GorensteinKind::Type2).unwrap();
        assert_eq!((g.socle, g.degree), (9, 68));
        assert_eq!(g.resolution.module(2), vec![(7, 4), (8, 1)]);
        assert!(matches!(
            gorenstein_resolution(5, 6, GorensteinKind::Type2),
            Err(Error::OddDegree(5))
        ));
    }

    #[test]
    fn gorenstein_hvectors_match_resolutions() {
        for d in 4..=10 {
            for e in d..=d + 12 {
                let g = gorenstein_resolution(d, e, GorensteinKind::Type1).unwrap();
                assert_eq!(g.hvec, gorenstein_hvector(d, 2 * e - 2), "d = {d}, e = {e}");
                if d % 2 == 0 {
                    let g = gorenstein_resolution(d, e, GorensteinKind::Type2).unwrap();
                    assert_eq!(g.hvec, gorenstein_hvector(d, 2 * e - 1));
                }
            }
        }
    }

    #[test]
    fn sporadic_gorenstein_sets() {
        let g = gorenstein_resolution(4, 4, GorensteinKind::Type1).unwrap();
        assert_eq!(g.hvec.values(), &[1, 3, 6, 10, 6, 3, 1]);
        assert_eq!(
            g.resolution,
            BettiTable::from_entries([((0, 0), 1), ((1, 4), 9), ((2, 5), 9), ((3, 9), 1)])
        );
        let g = gorenstein_resolution(4, 4, GorensteinKind::Type2).unwrap();
        assert_eq!(g.hvec.values(), &[1, 3, 6, 10, 10, 6, 3, 1]);
        assert_eq!(
            g.resolution,
            BettiTable::from_entries([((0, 0), 1), ((1, 4), 5), ((2, 6), 5), ((3, 10), 1)])
        );
    }

    #[test]
    fn from_resolution_rejects_non_gorenstein() {
        assert!(
            GorensteinSpec::from_resolution(4, GorensteinKind::Sporadic, mrc(4, 5, 6)).is_err()
        );
    }

    #[test]
    fn hvector_links() {
        let g = gorenstein_hvector(4, 10);
        assert_eq!(
            hvector_link(&g, &hv(&[1, 3, 6, 10, 5])).unwrap().values(),
            &[1, 3, 6, 10, 14, 18, 9]
        );
        let g = gorenstein_hvector(4, 9);
        assert_eq!(
            hvector_link(&g, &hv(&[1, 3, 6, 10, 14])).unwrap().values(),
            &[1, 3, 6, 10, 14]
        );
        let g = hv(&[1, 3, 3, 1]);
        assert!(hvector_link(&g, &g).unwrap().is_empty());
        assert!(matches!(
            hvector_link(&hv(&[1, 1]), &hv(&[1, 3])),
            Err(Error::NotLinkable { .. })
        ));
        assert!(hvector_link(&hv(&[1, 1]), &hv(&[1, 1, 1])).is_err());
    }

    #[test]
    fn type1_worked_examples() {
        let z = link_type1(4, 7, &mrc(4, 5, 6)).unwrap();
        assert_eq!(z.surplus, 12);
        // 3 * 12 > 2 * 26 - 20, but 3 * 12 <= 3 * 18 - 14
        assert!(!z.closed_form_bound);
        assert!(z.sharp_bound);
        assert_eq!(z.residual_table, mrc(4, 7, 12));
        assert_eq!(z.residual_hvec.values(), &[1, 3, 6, 10, 14, 18, 22, 12]);

        let z = link_type1(4, 7, &mrc(4, 5, 17)).unwrap();
        assert_eq!(z.surplus, 1);
        assert!(z.closed_form_bound && z.sharp_bound);
        assert_eq!(z.residual_table, mrc(4, 7, 1));

        let err = link_type1(4, 7, &mrc(4, 5, 1)).unwrap_err();
        assert_eq!(
            err.to_string(),
            "link precondition failed: c1 > 0: redundant R(-8) not excluded"
        );
    }

    #[test]
    fn type2_worked_examples() {
        let z = link_type2(4, 7, &mrc(4, 6, 9)).unwrap();
        assert_eq!(z.residual_table, mrc(4, 7, 13));
        assert_eq!(
            z.residual_table,
            BettiTable::from_entries([
                ((0, 0), 1),
                ((1, 4), 1),
                ((1, 7), 13),
                ((2, 8), 9),
                ((2, 9), 17),
                ((3, 10), 13)
            ])
        );
        assert!(z.closed_form_bound && z.sharp_bound);
        assert!(link_type2(4, 6, &mrc(4, 5, 11)).is_err());
        assert!(link_type2(4, 6, &mrc(4, 5, 10)).is_ok());
        assert!(matches!(
            link_type2(5, 7, &mrc(5, 6, 3)),
            Err(Error::OddDegree(5))
        ));
    }

    #[test]
    fn base_case_with_generic_inputs() {
        let (d, e) = (4, 5);
        for t in 2..=9 {
            let x = predict_generic(cardinality(FamilyParams::new(d, 3, t).unwrap())).unwrap();
            let z = link_type1(d, e, &x).unwrap();
            assert_eq!(z.surplus, 10 - t);
            assert_eq!(z.residual_table, mrc(d, e, 10 - t), "t = {t}");
        }
        for t in 1..=8 {
            let x = predict_generic(cardinality(FamilyParams::new(d, 4, t).unwrap())).unwrap();
            let z = link_type2(d, e, &x).unwrap();
            assert_eq!(z.residual_table, mrc(d, e, 14 - t), "t = {t}");
        }
    }

    #[test]
    fn type1_sharp_bound_at_base_case() {
        // s = 8: 3 * 8 > 2 * 18 - 20 but 3 * 8 <= 3 * 10 - 6
        let z = link_type1(4, 5, &predict_generic(12).unwrap()).unwrap();
        assert_eq!(z.surplus, 8);
        assert!(!z.closed_form_bound);
        assert!(z.sharp_bound);
    }

    #[test]
    fn cone_of_ci_by_itself() {
        let ci = BettiTable::from_entries([((0, 0), 1), ((1, 2), 3), ((2, 4), 3), ((3, 6), 1)]);
        let spec =
            GorensteinSpec::from_resolution(4, GorensteinKind::Sporadic, ci.clone()).unwrap();
        let cone = mapping_cone_generic(&ci, &spec, CancellationPolicy::Maximal).unwrap();
        assert!(cone.table.is_zero());
        assert_eq!(hilbert_from_table(&cone.table).unwrap(), HVector::default());
    }

    #[test]
    fn odd_degree_ghost_pair() {
        let m1 = critical_values(5, 6).m1;
        assert_eq!(m1, 6);
        for t in 1..m1 {
            let cone = odd_degree_obstruction(t).unwrap();
            let shape = validate_mrc_shape(&cone.table, 5, 7);
            assert!(!shape.valid);
            assert!(shape
                .violations
                .iter()
                .any(|v| matches!(v, Violation::GhostGenerators { degree: 8, .. })));
            assert!(cone.table.get(1, 8) > 1 && cone.table.get(2, 8) >= 1);
            let mut h: Vec<i64> = (0..7).map(|x| surface_h(5, x)).collect();
            h.push(25 - t);
            assert_eq!(hilbert_from_table(&cone.table).unwrap(), hv(&h));
        }
    }
}
