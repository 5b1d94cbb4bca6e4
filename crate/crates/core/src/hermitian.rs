//! One-point codes on the Hermitian curve `y^q + y = x^{q+1}` over GF(q²),
//! `q` a power of two, and the CSS-T pairs `(C(mP∞, D), ⟨1⟩)`.

use std::sync::Arc;

use serde::Serialize;

use crate::census::SCHEMA_VERSION;
use crate::css::{CssCode, DistanceHints, CssReport};
use crate::csst::{is_csst, is_even, CsstReport};
use crate::error::{Error, Result};
use crate::fqlinear::{enumerate_subspaces, LinearCode, Vector};
use crate::galois::{Field, FieldElement};
use crate::limits::Limits;

/// The affine points of the Hermitian curve over GF(q²), sorted by `(α, β)` encoding.
#[derive(Debug, Clone)]
pub struct HermitianCurve {
    q: u32,
    field: Arc<Field>,
    points: Vec<(FieldElement, FieldElement)>,
}

/// A monomial `x^i y^j` of `L(mP∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl HermitianCurve {
    /// Enumerates the `q³` affine points over GF(q²).
    pub fn new(q: u32) -> Result<HermitianCurve> {
        if q < 2 || !q.is_power_of_two() {
            return Err(Error::InvalidParameter(format!("q = {q} is not a power of 2")));
        }
        let field = Arc::new(Field::with_order(q as u64 * q as u64)?);
        let mut points = Vec::with_capacity((q as usize).pow(3));
        for a in field.elements() {
            let rhs = field.pow(a, q as u64 + 1);
            for b in field.elements() {
                if field.add(field.pow(b, q as u64), b) == rhs {
                    points.push((a, b));
                }
            }
        }
        Ok(HermitianCurve { q, field, points })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// GF(q²).
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn points(&self) -> &[(FieldElement, FieldElement)] {
        &self.points
    }

    /// `g = q(q−1)/2`.
    pub fn genus(&self) -> u32 {
        self.q * (self.q - 1) / 2
    }

    /// Pole order of `x^i y^j` at `P∞`: `iq + j(q+1)`.
    pub fn pole_order(&self, m: Monomial) -> u64 {
        m.i as u64 * self.q as u64 + m.j as u64 * (self.q as u64 + 1)
    }

    /// Basis `{x^i y^j : iq + j(q+1) ≤ m, j ≤ q−1}` of `L(mP∞)`, by increasing pole order.
    pub fn rr_basis(&self, m: u64) -> Vec<Monomial> {
        let q = self.q as u64;
        let mut basis: Vec<Monomial> = (0..q)
            .filter(|&j| j * (q + 1) <= m)
            .flat_map(|j| (0..=(m - j * (q + 1)) / q).map(move |i| Monomial { i: i as u32, j: j as u32 }))
            .collect();
        basis.sort_by_key(|&mono| self.pole_order(mono));
        basis
    }

    fn evaluate(&self, mono: Monomial) -> Vector {
        self.points
            .iter()
            .map(|&(a, b)| self.field.mul(self.field.pow(a, mono.i as u64), self.field.pow(b, mono.j as u64)))
            .collect()
    }

    /// Rows `ev_D(f)` for the given monomials, in the given order.
    pub fn evaluation_matrix(&self, monomials: &[Monomial]) -> Vec<Vector> {
        monomials.iter().map(|&mono| self.evaluate(mono)).collect()
    }

    fn code_of(&self, monomials: &[Monomial]) -> LinearCode {
        LinearCode::from_generator(self.field.clone(), self.points.len(), self.evaluation_matrix(monomials))
            .expect("evaluations have length q³ and lie in GF(q²)")
    }

    /// `C(mP∞, D)`: evaluations of `L(mP∞)` at every affine point.
    pub fn one_point_code(&self, m: u64) -> LinearCode {
        self.code_of(&self.rr_basis(m))
    }

    /// Evaluations of `⟨x^i : 0 ≤ i ≤ m/q⟩`, an even subcode of `C(mP∞, D)`.
    pub fn even_subcode(&self, m: u64) -> LinearCode {
        let top = m / self.q as u64;
        let monos: Vec<Monomial> = (0..=top).map(|i| Monomial { i: i as u32, j: 0 }).collect();
        self.code_of(&monos)
    }

    /// `⟨(1, …, 1)⟩`.
    pub fn all_ones(&self) -> LinearCode {
        self.code_of(&[Monomial { i: 0, j: 0 }])
    }

    /// Range `q² − q − 1 ≤ m ≤ (q³ + q² − q − 2)/2` where the pair is guaranteed CSS-T.
    pub fn csst_range(&self) -> (u64, u64) {
        let q = self.q as u64;
        (q * q - q - 1, (q * q * q + q * q - q - 2) / 2)
    }

    /// `m = (q³ + q² − q − 2)/2`, where rate and dual distance meet `R + δ2⊥/2 = 1/2`.
    pub fn extremal_m(&self) -> u64 {
        self.csst_range().1
    }
}

/// The pair `(C(mP∞, D), ⟨1⟩)` with its CSS parameters and CSS-T certificate.
#[derive(Debug, Clone)]
pub struct HermitianCsst {
    pub q: u32,
    pub m: u64,
    pub code: CssCode,
    pub csst: CsstReport,
    pub in_range: bool,
}

/// JSON report. `alphabet` is the field size `q²` of the qudits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HermitianReport {
    pub schema_version: u32,
    pub q: u32,
    pub alphabet: u32,
    pub m: u64,
    pub genus: u32,
    pub in_theorem_range: bool,
    pub d1_lower_bound: u64,
    pub css: CssReport,
    pub csst: CsstReport,
}

/// Builds and certifies the Hermitian CSS-T pair. Values of `m` outside
/// [`HermitianCurve::csst_range`] are built anyway with `in_range = false`.
pub fn hermitian_csst(curve: &HermitianCurve, m: u64, limits: &Limits) -> Result<HermitianCsst> {
    let n = curve.points().len() as u64;
    let (lo, hi) = curve.csst_range();
    let c1 = curve.one_point_code(m);
    let c2 = curve.all_ones();
    let hints = DistanceHints {
        d1_at_least: Some(n.saturating_sub(m).max(1) as usize),
        d2_perp_at_least: None,
    };
    let code = CssCode::with_hints(c1, c2, hints, limits)?;
    let csst = is_csst(code.c1(), code.c2(), limits)?;
    Ok(HermitianCsst {
        q: curve.q(),
        m,
        code,
        csst,
        in_range: lo <= m && m <= hi,
    })
}

impl HermitianCsst {
    pub fn report(&self, curve: &HermitianCurve) -> HermitianReport {
        let n = curve.points().len() as u64;
        HermitianReport {
            schema_version: SCHEMA_VERSION,
            q: self.q,
            alphabet: curve.field().order(),
            m: self.m,
            genus: curve.genus(),
            in_theorem_range: self.in_range,
            d1_lower_bound: n.saturating_sub(self.m).max(1),
            css: self.code.report(),
            csst: self.csst.clone(),
        }
    }
}

/// Whether every even subcode of `C(mP∞, D)` lies inside [`HermitianCurve::even_subcode`],
/// by enumerating all subspaces of the one-point code.
pub fn even_subcode_is_maximal(curve: &HermitianCurve, m: u64, limits: &Limits) -> Result<bool> {
    let c1 = curve.one_point_code(m);
    let c2 = curve.even_subcode(m);
    for k in (c2.dimension() + 1)..=c1.dimension() {
        for sub in enumerate_subspaces(&c1, k, limits)? {
            if is_even(&sub, limits)? {
                return Ok(false);
            }
        }
    }
    // Even subcodes of dimension ≤ dim C2 must also sit inside C2.
    for k in 1..=c2.dimension() {
        for sub in enumerate_subspaces(&c1, k, limits)? {
            if !sub.is_subcode_of(&c2) && is_even(&sub, limits)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
