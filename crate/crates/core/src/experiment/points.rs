use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{quartic_roots, PrimeField, PrimeFieldMatrix};
use crate::hilbert::binomial;

/// Monomial order used for every coefficient vector and evaluation matrix.
pub const MONOMIAL_ORDER: &str = "grlex-x0x1x2x3";

/// Number of quartic monomials in four variables.
pub const QUARTIC_TERMS: usize = 35;

pub type Point = [u64; 4];

/// Exponent vectors of degree `deg` in graded-lex order, `x0^deg` first.
pub fn monomials(deg: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::with_capacity(binomial(deg as i64 + 3, 3) as usize);
    for a in (0..=deg).rev() {
        for b in (0..=deg - a).rev() {
            for c in (0..=deg - a - b).rev() {
                out.push([a, b, c, deg - a - b - c]);
            }
        }
    }
    out
}

fn eval_monomial(exp: &[u32; 4], pt: &Point, f: PrimeField) -> u64 {
    exp.iter().zip(pt).fold(1 % f.modulus(), |acc, (&k, &x)| {
        f.mul(acc, f.pow(x, k as u64))
    })
}

/// A quartic form, coefficients in [`MONOMIAL_ORDER`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Quartic(Vec<u64>);

impl Quartic {
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.len() != QUARTIC_TERMS {
            return Err(Error::InvalidPointSet(format!(
                "a quartic has {QUARTIC_TERMS} coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::InvalidPointSet("zero quartic form".into()));
        }
        Ok(Self(coeffs))
    }

    /// `x0^4 + x1^4 + x2^4 + x3^4`.
    pub fn fermat() -> Self {
        let coeffs = monomials(4)
            .iter()
            .map(|m| u64::from(m.contains(&4)))
            .collect();
        Self(coeffs)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn eval(&self, pt: &Point, f: PrimeField) -> u64 {
        monomials(4).iter().zip(&self.0).fold(0, |acc, (m, &c)| {
            f.add(acc, f.mul(c % f.modulus(), eval_monomial(m, pt, f)))
        })
    }

    /// Points of the surface obtained by fixing three coordinates and
    /// solving for coordinate `free`. The values in `fixed` fill the other
    /// coordinates in increasing index order. Fails with
    /// [`Error::IdenticallyZero`] when every value of the free coordinate works.
    pub fn complete_point(
        &self,
        fixed: [u64; 3],
        free: usize,
        f: PrimeField,
    ) -> Result<Vec<Point>> {
        assert!(free < 4, "coordinate index out of range");
        let mut base = [0u64; 4];
        let mut it = fixed.iter();
        for (k, slot) in base.iter_mut().enumerate() {
            if k != free {
                *slot = *it.next().unwrap() % f.modulus();
            }
        }
        let mut univariate = [0u64; 5];
        for (m, &c) in monomials(4).iter().zip(&self.0) {
            let mut rest = *m;
            rest[free] = 0;
            let v = f.mul(c % f.modulus(), eval_monomial(&rest, &base, f));
            let k = m[free] as usize;
            univariate[k] = f.add(univariate[k], v);
        }
        Ok(quartic_roots(&univariate, f)?
            .into_iter()
            .map(|r| {
                let mut pt = base;
                pt[free] = r;
                pt
            })
            .collect())
    }
}

impl TryFrom<Vec<u64>> for Quartic {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Quartic::new(v)
    }
}

impl From<Quartic> for Vec<u64> {
    fn from(q: Quartic) -> Self {
        q.0
    }
}

/// Scales a point so that its first nonzero coordinate is 1. `None` for the
/// zero vector.
pub fn normalize(pt: &Point, f: PrimeField) -> Option<Point> {
    let lead = pt.iter().map(|&x| x % f.modulus()).find(|&x| x != 0)?;
    let inv = f.inv(lead);
    Some(pt.map(|x| f.mul(x % f.modulus(), inv)))
}

/// Distinct points of P^3 over GF(p), optionally with a quartic through all
/// of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointSetFile", into = "PointSetFile")]
pub struct PointSet {
    field: PrimeField,
    points: Vec<Point>,
    surface: Option<Quartic>,
}

impl PointSet {
    /// Normalizes every point, then checks distinctness and that the
    /// surface (if any) passes through all of them.
    pub fn new(field: PrimeField, points: Vec<Point>, surface: Option<Quartic>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(points.len());
        for (i, pt) in points.iter().enumerate() {
            let q = normalize(pt, field)
                .ok_or_else(|| Error::InvalidPointSet(format!("point {i} is the zero vector")))?;
            if !seen.insert(q) {
                return Err(Error::InvalidPointSet(format!("point {i} repeats {q:?}")));
            }
            if let Some(s) = &surface {
                if s.eval(&q, field) != 0 {
                    return Err(Error::InvalidPointSet(format!(
                        "point {i} is not on the surface"
                    )));
                }
            }
            normalized.push(q);
        }
        Ok(Self {
            field,
            points: normalized,
            surface,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn surface(&self) -> Option<&Quartic> {
        self.surface.as_ref()
    }

    /// Image under the linear map `x -> A x`. The surface is dropped since
    /// its transformed coefficients are not tracked.
    pub fn transform(&self, a: &PrimeFieldMatrix) -> Result<Self> {
        assert_eq!((a.rows(), a.cols()), (4, 4), "need a 4x4 matrix");
        let pts = self
            .points
            .iter()
            .map(|p| a.mul_vec(p).try_into().expect("length 4"))
            .collect();
        Self::new(self.field, pts, None)
    }

    /// `N x C(deg+3, 3)` matrix of monomial values, rows in point order and
    /// columns in [`MONOMIAL_ORDER`].
    pub fn evaluation_matrix(&self, deg: u32) -> PrimeFieldMatrix {
        let f = self.field;
        let monos = monomials(deg);
        let mut data = Vec::with_capacity(self.points.len() * monos.len());
        for pt in &self.points {
            data.extend(monos.iter().map(|m| eval_monomial(m, pt, f)));
        }
        PrimeFieldMatrix::from_data(f, self.points.len(), monos.len(), data)
            .expect("dimensions agree")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Serialize, Deserialize)]
struct PointSetFile {
    order: String,
    p: u64,
    points: Vec<Point>,
    surface: Option<Quartic>,
}

impl TryFrom<PointSetFile> for PointSet {
    type Error = Error;
    fn try_from(file: PointSetFile) -> Result<Self> {
        if file.order != MONOMIAL_ORDER {
            return Err(Error::InvalidPointSet(format!(
                "unsupported monomial order {:?}",
                file.order
            )));
        }
        PointSet::new(PrimeField::new(file.p)?, file.points, file.surface)
    }
}

impl From<PointSet> for PointSetFile {
    fn from(ps: PointSet) -> Self {
        Self {
            order: MONOMIAL_ORDER.to_string(),
            p: ps.field.modulus(),
            points: ps.points,
            surface: ps.surface,
        }
    }
}

/// Kernel basis of the evaluation map `R_deg -> k^N`, i.e. `[I_X]_deg`, as
/// coefficient vectors in [`MONOMIAL_ORDER`].
pub fn ideal_graded_piece(ps: &PointSet, deg: u32) -> Vec<Vec<u64>> {
    ps.evaluation_matrix(deg).rank_and_kernel().1
}

/// Uniformly random quartic, redrawn if all coefficients vanish.
pub fn sample_surface<R: Rng + ?Sized>(field: PrimeField, rng: &mut R) -> Quartic {
    loop {
        let coeffs: Vec<u64> = (0..QUARTIC_TERMS)
            .map(|_| rng.gen_range(0..field.modulus()))
            .collect();
        if let Ok(q) = Quartic::new(coeffs) {
            return q;
        }
    }
}

/// `n` distinct random points on the surface. Each attempt fixes three
/// random coordinates and solves for the fourth, cycling through which
/// coordinate is solved for.
pub fn sample_points_on_surface<R: Rng + ?Sized>(
    form: &Quartic,
    n: usize,
    field: PrimeField,
    rng: &mut R,
) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidPointSet("need at least one point".into()));
    }
    let max_attempts = 20 * n + 200;
    let p = field.modulus();
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(n);
    for attempt in 0..max_attempts {
        if points.len() == n {
            break;
        }
        let free = 3 - attempt % 4;
        let fixed = [(); 3].map(|_| rng.gen_range(0..p));
        let pick = match form.complete_point(fixed, free, field) {
            Ok(c) if c.is_empty() => continue,
            Ok(c) => c[rng.gen_range(0..c.len())],
            Err(Error::IdenticallyZero) => {
                let mut pt = [0u64; 4];
                let mut it = fixed.iter();
                for (k, slot) in pt.iter_mut().enumerate() {
                    *slot = if k == free {
                        rng.gen_range(0..p)
                    } else {
                        *it.next().unwrap()
                    };
                }
                pt
            }
            Err(e) => return Err(e),
        };
        if let Some(q) = normalize(&pick, field) {
            if seen.insert(q) {
                points.push(q);
            }
        }
    }
    if points.len() < n {
        return Err(Error::SurfaceRejected {
            attempts: max_attempts,
            found: points.len(),
            wanted: n,
        });
    }
    PointSet::new(field, points, Some(form.clone()))
}

/// `n` distinct uniformly random points of P^3.
pub fn random_points<R: Rng + ?Sized>(
    field: PrimeField,
    n: usize,
    rng: &mut R,
) -> Result<PointSet> {
    let p = field.modulus();
    let total = (p.saturating_pow(4) - 1) / (p - 1);
    if n as u64 > total {
        return Err(Error::InvalidPointSet(format!(
            "P^3 over GF({p}) has only {total} points"
        )));
    }
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let v = [(); 4].map(|_| rng.gen_range(0..p));
        if let Some(q) = normalize(&v, field) {
            if seen.insert(q) {
                points.push(q);
            }
        }
    }
    PointSet::new(field, points, None)
}

/// The 8 points cut out by three quadrics, each a product of two random
/// planes. Retries until the 8 triple intersections are distinct points.
pub fn complete_intersection_points<R: Rng + ?Sized>(field: PrimeField, rng: &mut R) -> PointSet {
    let p = field.modulus();
    loop {
        let planes: Vec<[u64; 4]> = (0..6)
            .map(|_| [(); 4].map(|_| rng.gen_range(0..p)))
            .collect();
        let mut pts = Vec::with_capacity(8);
        for choice in 0..8usize {
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|k| {
                    planes[2 * k + ((choice >> k) & 1)]
                        .iter()
                        .map(|&x| x as i64)
                        .collect()
                })
                .collect();
            let m = PrimeFieldMatrix::from_rows(field, &rows).expect("3x4");
            let (rank, kernel) = m.rank_and_kernel();
            if rank == 3 {
                pts.push(kernel[0].clone().try_into().expect("length 4"));
            }
        }
        if pts.len() == 8 {
            if let Ok(ps) = PointSet::new(field, pts, None) {
                return ps;
            }
        }
    }
}
