//! Graded Betti tables and the predicted minimal free resolutions of points.
//!
//! Indexing follows the resolution of the quotient `R/I`: `beta[i][j]` is the
//! number of summands `R(-j)` in homological degree `i`, so `beta[0][0] = 1`
//! is the free cover `R`. The Hilbert-series numerator of a table is
//! `n_j = sum_i (-1)^i beta[i][j]`, and this sign convention is shared by
//! every module in the crate.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::{
    binomial, cardinality, family_hvector, generic_hvector, hvector_from_numerator, numerator,
    surface_h, FamilyParams, HVector,
};

/// Sparse table of graded Betti numbers. Zero entries are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    /// Table holding only `beta[0][0] = 1`, the start of every resolution of
    /// a cyclic module `R/I` with `I` proper.
    pub fn new() -> Self {
        let mut t = Self::zero();
        t.set(0, 0, 1);
        t
    }

    /// The table of the zero module (no entries at all).
    pub fn zero() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(entries: I) -> Self {
        let mut t = Self::zero();
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Removes `v` copies of `R(-j)` from homological degree `i`.
    /// Panics when fewer are present.
    pub fn remove(&mut self, i: usize, j: usize, v: u64) {
        let cur = self.get(i, j);
        assert!(
            cur >= v,
            "cannot remove {v} copies of beta({i},{j}) = {cur}"
        );
        self.set(i, j, cur - v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Rank of the `i`-th free module.
    pub fn total(&self, i: usize) -> u64 {
        self.iter()
            .filter(|&((k, _), _)| k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `n_j = sum_i (-1)^i beta[i][j]` for `j = 0..=max_degree`.
    pub fn numerator(&self) -> Vec<i64> {
        let Some(top) = self.max_degree() else {
            return Vec::new();
        };
        let mut n = vec![0i64; top + 1];
        for ((i, j), v) in self.iter() {
            let v = v as i64;
            n[j] += if i % 2 == 0 { v } else { -v };
        }
        n
    }

    /// Alternating sum of all multiplicities, including `beta[0][0]`.
    pub fn euler_characteristic(&self) -> i64 {
        self.numerator().iter().sum()
    }

    /// Twists of homological degree `i` as `(j, multiplicity)` pairs.
    pub fn module(&self, i: usize) -> Vec<(usize, u64)> {
        self.iter()
            .filter(|&((k, _), _)| k == i)
            .map(|((_, j), v)| (j, v))
            .collect()
    }

    fn to_key_map(&self) -> BTreeMap<String, u64> {
        self.iter()
            .map(|((i, j), v)| (format!("{i},{j}"), v))
            .collect()
    }

    fn from_key_map(map: BTreeMap<String, u64>) -> std::result::Result<Self, String> {
        let mut t = Self::zero();
        for (key, v) in map {
            let (i, j) = key
                .split_once(',')
                .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                .ok_or_else(|| format!("bad Betti key {key:?}, expected \"i,j\""))?;
            t.add(i, j, v);
        }
        Ok(t)
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|((i, j), v)| (format!("b{i},{j}"), v)))
            .finish()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_key_map().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, u64>::deserialize(deserializer)?;
        BettiTable::from_key_map(map).map_err(D::Error::custom)
    }
}

/// Named multiplicities of the predicted table for `e >= d + 1`:
///
/// ```text
/// 0 -> R(-e-3)^c2 + R(-e-2)^c1 -> R(-e-2)^b2 + R(-e-1)^b1 -> R(-e-1)^a2 + R(-e)^a1 + R(-d) -> I -> 0
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrcShape {
    pub d: i64,
    pub e: i64,
    pub a1: u64,
    pub a2: u64,
    pub b1: u64,
    pub b2: u64,
    pub c1: u64,
    pub c2: u64,
}

impl MrcShape {
    /// Reads the six slots of a table by degree.
    pub fn from_table(tbl: &BettiTable, d: i64, e: i64) -> Self {
        let e_ = e as usize;
        Self {
            d,
            e,
            a1: tbl.get(1, e_),
            a2: tbl.get(1, e_ + 1),
            b1: tbl.get(2, e_ + 1),
            b2: tbl.get(2, e_ + 2),
            c1: tbl.get(3, e_ + 2),
            c2: tbl.get(3, e_ + 3),
        }
    }
}

/// Predicted table of `X_{e,t}` on a degree-`d` surface for `e >= d + 1`.
///
/// `a1 = h_S(e) - t` and `c2 = t` sit in degrees `e` and `e + 3`; the
/// remaining slots come from the numerator by the sign rule, which is the
/// only choice compatible with `a2 * b1 = 0` and `b2 * c1 = 0`.
pub fn predict_mrc(params: FamilyParams) -> Result<BettiTable> {
    let FamilyParams { d, e, t } = params;
    if e <= d {
        return Err(Error::UseGenericPrediction { d, e });
    }
    let n = numerator(&family_hvector(params));
    let at = |j: i64| n.get(j as usize).copied().unwrap_or(0);
    let (du, eu) = (d as usize, e as usize);

    let mut tbl = BettiTable::new();
    tbl.set(1, du, 1);
    tbl.set(1, eu, (surface_h(d, e) - t) as u64);
    let (b1, a2) = split_sign(at(e + 1));
    tbl.set(1, eu + 1, a2);
    tbl.set(2, eu + 1, b1);
    let (b2, c1) = split_sign(at(e + 2));
    tbl.set(2, eu + 2, b2);
    tbl.set(3, eu + 2, c1);
    tbl.set(3, eu + 3, t as u64);

    assert_eq!(
        tbl.numerator(),
        n,
        "predicted table disagrees with the Hilbert series for {params}"
    );
    Ok(tbl)
}

/// Generic (Ballico–Geramita) table of `n` general points in P^3: two
/// adjacent rows, filled from the numerator by the sign rule.
///
/// For `n = 2` the points are collinear and the actual resolution is the
/// Koszul complex on two linear forms and a quadric, which has an extra
/// cancelling pair in degree 2 that this prediction does not model.
pub fn predict_generic(n: i64) -> Result<BettiTable> {
    if n < 1 {
        return Err(Error::InvalidParams(format!("point count {n} < 1")));
    }
    let h = generic_hvector(n);
    // initial degree of the ideal: first x where h falls short of C(x+2, 2)
    let alpha = (0..)
        .find(|&x| h.get(x) < binomial(x + 2, 2))
        .expect("finite h-vector");
    let row = (alpha - 1) as usize;
    let num = numerator(&h);

    let mut tbl = BettiTable::new();
    for (j, &v) in num.iter().enumerate().skip(1) {
        if v == 0 {
            continue;
        }
        // candidate homological indices on rows `row` and `row + 1`
        let i = [j.checked_sub(row), j.checked_sub(row + 1)]
            .into_iter()
            .flatten()
            .find(|&i| (i % 2 == 0) == (v > 0))
            .filter(|i| (1..=3).contains(i))
            .ok_or_else(|| {
                Error::NotPointSchemeTable(format!(
                    "numerator entry {v} in degree {j} does not fit two rows"
                ))
            })?;
        tbl.set(i, j, v.unsigned_abs());
    }
    debug_assert_eq!(tbl.numerator(), num);
    Ok(tbl)
}

/// Prediction for any family: [`predict_mrc`] above the surface degree,
/// [`predict_generic`] of the cardinality otherwise.
pub fn predict(params: FamilyParams) -> Result<BettiTable> {
    if params.uses_generic_prediction() {
        predict_generic(cardinality(params))
    } else {
        predict_mrc(params)
    }
}

fn split_sign(v: i64) -> (u64, u64) {
    if v >= 0 {
        (v as u64, 0)
    } else {
        (0, v.unsigned_abs())
    }
}

/// Recovers the h-vector of a point scheme from its Betti table.
pub fn hilbert_from_table(tbl: &BettiTable) -> Result<HVector> {
    if let Some(pd) = tbl.projective_dimension() {
        if pd > 3 {
            return Err(Error::NotPointSchemeTable(format!(
                "projective dimension {pd} > 3"
            )));
        }
    }
    hvector_from_numerator(&tbl.numerator())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    UnexpectedEntry {
        i: usize,
        j: usize,
        value: u64,
    },
    /// `a2 * b1 != 0`: generator and syzygy in the same degree `e + 1`.
    GhostGenerators {
        degree: usize,
        a2: u64,
        b1: u64,
    },
    /// `b2 * c1 != 0`: syzygies in consecutive homological degrees at `e + 2`.
    GhostSyzygies {
        degree: usize,
        b2: u64,
        c1: u64,
    },
    /// Generic shape only: more than two adjacent rows.
    TooManyRows {
        rows: Vec<usize>,
    },
    /// Generic shape only: `beta[i][j] * beta[i+1][j] != 0`.
    GhostPair {
        i: usize,
        j: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnexpectedEntry { i, j, value } => {
                write!(f, "unexpected entry beta({i},{j}) = {value}")
            }
            Violation::GhostGenerators { degree, a2, b1 } => {
                write!(f, "a2·b1 ≠ 0 in degree {degree} (a2 = {a2}, b1 = {b1})")
            }
            Violation::GhostSyzygies { degree, b2, c1 } => {
                write!(f, "b2·c1 ≠ 0 in degree {degree} (b2 = {b2}, c1 = {c1})")
            }
            Violation::TooManyRows { rows } => write!(f, "entries in rows {rows:?}"),
            Violation::GhostPair { i, j } => {
                write!(f, "beta({i},{j})·beta({},{j}) ≠ 0", i + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCheck {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ShapeCheck {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// Checks the predicted shape for socle degree `e >= d + 1`: nonzero entries
/// only at `(0,0)`, `(1,d)`, `(1,e)`, `(1,e+1)`, `(2,e+1)`, `(2,e+2)`,
/// `(3,e+2)`, `(3,e+3)`, with both orthogonality products zero.
pub fn validate_mrc_shape(tbl: &BettiTable, d: i64, e: i64) -> ShapeCheck {
    let (du, eu) = (d as usize, e as usize);
    let allowed = [
        (0, 0),
        (1, du),
        (1, eu),
        (1, eu + 1),
        (2, eu + 1),
        (2, eu + 2),
        (3, eu + 2),
        (3, eu + 3),
    ];
    let mut violations: Vec<Violation> = tbl
        .iter()
        .filter(|(k, _)| !allowed.contains(k))
        .map(|((i, j), value)| Violation::UnexpectedEntry { i, j, value })
        .collect();
    let s = MrcShape::from_table(tbl, d, e);
    if s.a2 * s.b1 != 0 {
        violations.push(Violation::GhostGenerators {
            degree: eu + 1,
            a2: s.a2,
            b1: s.b1,
        });
    }
    if s.b2 * s.c1 != 0 {
        violations.push(Violation::GhostSyzygies {
            degree: eu + 2,
            b2: s.b2,
            c1: s.c1,
        });
    }
    ShapeCheck::from_violations(violations)
}

/// Checks the generic shape: apart from `beta[0][0]`, entries occupy at most
/// two adjacent rows `j - i`, and `beta[i][j] * beta[i+1][j] = 0`.
pub fn validate_generic_shape(tbl: &BettiTable) -> ShapeCheck {
    let mut violations = Vec::new();
    let mut rows: Vec<usize> = tbl
        .iter()
        .filter(|&((i, _), _)| i >= 1)
        .map(|((i, j), _)| j - i)
        .collect();
    rows.sort_unstable();
    rows.dedup();
    if rows.len() > 2 || (rows.len() == 2 && rows[1] != rows[0] + 1) {
        violations.push(Violation::TooManyRows { rows });
    }
    for ((i, j), _) in tbl.iter() {
        if i >= 1 && tbl.get(i + 1, j) != 0 {
            violations.push(Violation::GhostPair { i, j });
        }
    }
    ShapeCheck::from_violations(violations)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Dense array, rows indexed by `j - i`, zeros shown as `-`.
    Table,
    /// The chain of twisted free modules resolving the ideal.
    Resolution,
    /// `{"betti": {"i,j": count}}` with sorted keys.
    Json,
    /// Betti diagram in the layout used by Macaulay2.
    M2,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" | "text" => Ok(Format::Table),
            "resolution" => Ok(Format::Resolution),
            "json" => Ok(Format::Json),
            "m2" | "m2-style" => Ok(Format::M2),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn render(tbl: &BettiTable, format: Format) -> String {
    match format {
        Format::Table => render_table(tbl),
        Format::Resolution => render_resolution(tbl),
        Format::Json => render_json(tbl, None),
        Format::M2 => render_m2(tbl),
    }
}

/// JSON rendering, optionally tagged with the family parameters.
/// Keys are sorted, so the output is byte-stable.
pub fn render_json(tbl: &BettiTable, params: Option<&FamilyParams>) -> String {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "betti".into(),
        serde_json::to_value(tbl).expect("serialisable"),
    );
    if let Some(p) = params {
        obj.insert("d".into(), p.d.into());
        obj.insert("e".into(), p.e.into());
        obj.insert("t".into(), p.t.into());
    }
    serde_json::to_string_pretty(&serde_json::Value::Object(obj)).expect("serialisable")
}

/// Parses the output of [`render_json`] (or a bare `{"i,j": count}` map).
pub fn parse_json(text: &str) -> Result<BettiTable> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let inner = value.get("betti").cloned().unwrap_or(value);
    Ok(serde_json::from_value(inner)?)
}

fn grid(tbl: &BettiTable) -> (usize, usize) {
    let cols = tbl.projective_dimension().unwrap_or(0).max(3) + 1;
    let rows = tbl
        .iter()
        .map(|((i, j), _)| j.saturating_sub(i))
        .max()
        .unwrap_or(0)
        + 1;
    (rows, cols)
}

fn render_table(tbl: &BettiTable) -> String {
    let (rows, cols) = grid(tbl);
    let cell = |r: usize, i: usize| match tbl.get(i, r + i) {
        0 => "-".to_string(),
        v => v.to_string(),
    };
    let width: Vec<usize> = (0..cols)
        .map(|i| (0..rows).map(|r| cell(r, i).len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for r in 0..rows {
        let line: Vec<String> = (0..cols)
            .map(|i| format!("{:>w$}", cell(r, i), w = width[i]))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn render_m2(tbl: &BettiTable) -> String {
    let (rows, cols) = grid(tbl);
    let cell = |r: usize, i: usize| match tbl.get(i, r + i) {
        0 => ".".to_string(),
        v => v.to_string(),
    };
    let width: Vec<usize> = (0..cols)
        .map(|i| {
            (0..rows)
                .map(|r| cell(r, i).len())
                .chain([tbl.total(i).to_string().len(), i.to_string().len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label_w = "total:".len().max(rows.to_string().len() + 1);
    let mut out = String::new();
    let line = |label: &str, cells: Vec<String>| {
        let body: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        format!("{label:>label_w$} {}\n", body.join(" "))
    };
    out.push_str(&line("", (0..cols).map(|i| i.to_string()).collect()));
    out.push_str(&line(
        "total:",
        (0..cols).map(|i| tbl.total(i).to_string()).collect(),
    ));
    for r in 0..rows {
        out.push_str(&line(
            &format!("{r}:"),
            (0..cols).map(|i| cell(r, i)).collect(),
        ));
    }
    out
}

fn render_resolution(tbl: &BettiTable) -> String {
    let top = tbl.projective_dimension().unwrap_or(0);
    let mut out = String::from("0");
    for i in (1..=top).rev() {
        let mut summands = tbl.module(i);
        summands.sort_by_key(|s| std::cmp::Reverse(s.0));
        let text: Vec<String> = summands
            .into_iter()
            .map(|(j, v)| {
                let twist = if j == 0 {
                    "R".to_string()
                } else {
                    format!("R(-{j})")
                };
                if v == 1 {
                    twist
                } else {
                    format!("{twist}^{v}")
                }
            })
            .collect();
        if !text.is_empty() {
            let _ = write!(out, " → {}", text.join(" ⊕ "));
        }
    }
    out.push_str(" → I → 0");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(d: i64, e: i64, t: i64) -> FamilyParams {
        FamilyParams::new(d, e, t).unwrap()
    }

    fn table(entries: &[((usize, usize), u64)]) -> BettiTable {
        let mut t = BettiTable::new();
        for &((i, j), v) in entries {
            t.set(i, j, v);
        }
        t
    }

    #[test]
    fn predict_mrc_worked_examples() {
        assert_eq!(
            predict_mrc(fam(4, 5, 6)).unwrap(),
            table(&[
                ((1, 4), 1),
                ((1, 5), 12),
                ((2, 6), 14),
                ((2, 7), 4),
                ((3, 8), 6)
            ])
        );
        assert_eq!(
            predict_mrc(fam(4, 5, 14)).unwrap(),
            table(&[
                ((1, 4), 1),
                ((1, 5), 4),
                ((1, 6), 10),
                ((2, 7), 28),
                ((3, 8), 14)
            ])
        );
        assert_eq!(
            predict_mrc(fam(4, 6, 9)).unwrap(),
            table(&[
                ((1, 4), 1),
                ((1, 6), 13),
                ((2, 7), 13),
                ((2, 8), 9),
                ((3, 9), 9)
            ])
        );
    }

    #[test]
    fn predict_mrc_rejects_low_socle_degree() {
        assert!(matches!(
            predict_mrc(fam(4, 4, 3)),
            Err(Error::UseGenericPrediction { d: 4, e: 4 })
        ));
    }

    #[test]
    fn predict_generic_examples() {
        assert_eq!(
            predict_generic(1).unwrap(),
            table(&[((1, 1), 3), ((2, 2), 3), ((3, 3), 1)])
        );
        assert_eq!(
            predict_generic(2).unwrap(),
            table(&[((1, 1), 2), ((2, 3), 2), ((3, 4), 1)])
        );
        assert_eq!(
            predict_generic(4).unwrap(),
            table(&[((1, 2), 6), ((2, 3), 8), ((3, 4), 3)])
        );
        assert_eq!(
            predict_generic(12).unwrap(),
            table(&[((1, 3), 8), ((2, 4), 9), ((3, 6), 2)])
        );
        assert!(predict_generic(0).is_err());
    }

    #[test]
    fn hilbert_round_trips() {
        assert_eq!(
            hilbert_from_table(&predict_mrc(fam(4, 5, 6)).unwrap())
                .unwrap()
                .values(),
            &[1, 3, 6, 10, 14, 6]
        );
        assert_eq!(
            hilbert_from_table(&predict_generic(1).unwrap())
                .unwrap()
                .values(),
            &[1]
        );
        assert_eq!(
            hilbert_from_table(&predict_mrc(fam(4, 7, 12)).unwrap())
                .unwrap()
                .values(),
            &[1, 3, 6, 10, 14, 18, 22, 12]
        );
        assert_eq!(
            hilbert_from_table(&BettiTable::zero()).unwrap(),
            HVector::default()
        );
    }

    #[test]
    fn hilbert_from_table_rejects_non_point_tables() {
        // just R: numerator 1 is not divisible by (1 - z)^3
        assert!(matches!(
            hilbert_from_table(&BettiTable::new()),
            Err(Error::NotPointSchemeTable(_))
        ));
        let mut t = predict_generic(1).unwrap();
        t.set(4, 4, 1);
        assert!(hilbert_from_table(&t).is_err());
    }

    #[test]
    fn shape_validation() {
        let good = predict_mrc(fam(4, 5, 6)).unwrap();
        assert!(validate_mrc_shape(&good, 4, 5).valid);

        let mut ghost = good.clone();
        ghost.set(1, 6, 1);
        ghost.set(2, 6, 15);
        let check = validate_mrc_shape(&ghost, 4, 5);
        assert!(!check.valid);
        assert_eq!(check.violations.len(), 1);
        assert_eq!(
            check.violations[0].to_string(),
            "a2·b1 ≠ 0 in degree 6 (a2 = 1, b1 = 15)"
        );

        let mut stray = good;
        stray.set(2, 5, 1);
        assert!(matches!(
            validate_mrc_shape(&stray, 4, 5).violations[..],
            [Violation::UnexpectedEntry {
                i: 2,
                j: 5,
                value: 1
            }]
        ));
    }

    #[test]
    fn generic_shape_validation() {
        for n in [1, 3, 4, 5, 12, 20, 28] {
            assert!(
                validate_generic_shape(&predict_generic(n).unwrap()).valid,
                "n = {n}"
            );
        }
        let koszul_two_points = table(&[
            ((1, 1), 2),
            ((1, 2), 1),
            ((2, 2), 1),
            ((2, 3), 2),
            ((3, 4), 1),
        ]);
        assert!(!validate_generic_shape(&koszul_two_points).valid);
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for t in 1..=18 {
            assert_eq!(predict_mrc(fam(4, 5, t)).unwrap().euler_characteristic(), 0);
        }
    }

    #[test]
    fn render_resolution_koszul() {
        assert_eq!(
            render(&predict_generic(1).unwrap(), Format::Resolution),
            "0 → R(-3) → R(-2)^3 → R(-1)^3 → I → 0"
        );
        assert_eq!(
            render(&predict_mrc(fam(4, 5, 6)).unwrap(), Format::Resolution),
            "0 → R(-8)^6 → R(-7)^4 ⊕ R(-6)^14 → R(-5)^12 ⊕ R(-4) → I → 0"
        );
    }

    #[test]
    fn render_table_layout() {
        let text = render(&predict_mrc(fam(4, 5, 6)).unwrap(), Format::Table);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "1  -  - -");
        assert_eq!(lines[3], "-  1  - -");
        assert_eq!(lines[4], "- 12 14 -");
        assert_eq!(lines[5], "-  -  4 6");
    }

    #[test]
    fn render_m2_layout() {
        let text = render(&predict_generic(4).unwrap(), Format::M2);
        assert_eq!(
            text,
            "       0 1 2 3\ntotal: 1 6 8 3\n    0: 1 . . .\n    1: . 6 8 3\n"
        );
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let t = predict_mrc(fam(4, 7, 12)).unwrap();
        let text = render_json(&t, Some(&fam(4, 7, 12)));
        let keys: Vec<&str> = text
            .lines()
            .filter_map(|l| l.trim().split('"').nth(1))
            .filter(|k| k.contains(','))
            .collect();
        assert!(keys.contains(&"3,10"));
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(parse_json(&text).unwrap(), t);
        assert_eq!(parse_json(&render(&t, Format::Json)).unwrap(), t);
    }

    #[test]
    fn unknown_format() {
        assert!(matches!(
            "xml".parse::<Format>(),
            Err(Error::UnknownFormat(_))
        ));
        assert_eq!("m2-style".parse::<Format>().unwrap(), Format::M2);
    }
}
