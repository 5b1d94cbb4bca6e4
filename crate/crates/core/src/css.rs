//! CSS codes `Q(C1, C2)` from nested pairs `C2 ⊆ C1`.

use std::fmt;

use serde::Serialize;

use crate::census::{pair_count, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::fqlinear::{enumerate_subspaces, LinearCode};
use crate::galois::Field;
use crate::limits::Limits;
use std::sync::Arc;

/// A minimum distance that is either known exactly or only bounded below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Exact(usize),
    AtLeast(usize),
}

impl Distance {
    /// The exact value, or the proven lower bound.
    pub fn value(self) -> usize {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Distance::Exact(_))
    }

    /// Minimum of two distances; exact whenever the smaller one is exact and
    /// no lower bound could undercut it.
    pub fn min(self, other: Distance) -> Distance {
        use Distance::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), AtLeast(b)) | (AtLeast(b), Exact(a)) if a <= b => Exact(a),
            _ => AtLeast(self.value().min(other.value())),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, "≥{d}"),
        }
    }
}

/// Lower bounds to fall back on when an exact distance is beyond the enumeration cap.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DistanceHints {
    pub d1_at_least: Option<usize>,
    pub d2_perp_at_least: Option<usize>,
}

/// `e_max = ⌊(d1−1)/2⌋` X-type, `f_max = ⌊(d2⊥−1)/2⌋` Z-type, `t = ⌊(d−1)/2⌋` arbitrary errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Capability {
    pub e_max: usize,
    pub f_max: usize,
    pub t: usize,
}

fn radius(d: usize) -> usize {
    d.saturating_sub(1) / 2
}

/// The CSS code of a nested pair, with its classical distances.
#[derive(Debug, Clone)]
pub struct CssCode {
    c1: LinearCode,
    c2: LinearCode,
    d1: Distance,
    d2_perp: Distance,
}

fn check_compatible(a: &LinearCode, b: &LinearCode) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "codes of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

fn distance_or_hint(code: &LinearCode, hint: Option<usize>, limits: &Limits) -> Result<Distance> {
    match (code.min_distance_with(limits), hint) {
        (Ok(d), _) => Ok(Distance::Exact(d)),
        (Err(Error::CapExceeded { .. }), Some(lower)) => Ok(Distance::AtLeast(lower)),
        (Err(e), _) => Err(e),
    }
}

impl CssCode {
    /// `Q(C1, C2)` with both distances computed exactly.
    pub fn new(c1: LinearCode, c2: LinearCode, limits: &Limits) -> Result<CssCode> {
        Self::with_hints(c1, c2, DistanceHints::default(), limits)
    }

    /// Like [`CssCode::new`], but a distance beyond the cap is replaced by its hint, if given.
    pub fn with_hints(c1: LinearCode, c2: LinearCode, hints: DistanceHints, limits: &Limits) -> Result<CssCode> {
        check_compatible(&c1, &c2)?;
        if !c2.is_subcode_of(&c1) {
            return Err(Error::NotNested);
        }
        let d1 = distance_or_hint(&c1, hints.d1_at_least, limits)?;
        let d2_perp = distance_or_hint(&c2.dual(), hints.d2_perp_at_least, limits)?;
        Ok(CssCode { c1, c2, d1, d2_perp })
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    pub fn field(&self) -> &Arc<Field> {
        self.c1.field()
    }

    pub fn len(&self) -> usize {
        self.c1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty()
    }

    pub fn k1(&self) -> usize {
        self.c1.dimension()
    }

    pub fn k2(&self) -> usize {
        self.c2.dimension()
    }

    /// `k1 − k2`: the code encodes `q^{k1−k2}` basis states.
    pub fn quantum_dim(&self) -> usize {
        self.k1() - self.k2()
    }

    /// `d(C1)`.
    pub fn d1(&self) -> Distance {
        self.d1
    }

    /// `d(C2⊥)`.
    pub fn d2_perp(&self) -> Distance {
        self.d2_perp
    }

    /// `min(d1, d2⊥)`.
    pub fn distance(&self) -> Distance {
        self.d1.min(self.d2_perp)
    }

    pub fn correction_capability(&self) -> Capability {
        Capability {
            e_max: radius(self.d1.value()),
            f_max: radius(self.d2_perp.value()),
            t: radius(self.distance().value()),
        }
    }

    /// The equivalent code `Q(C2⊥, C1⊥)`, whose X and Z capabilities are swapped.
    pub fn swapped(&self) -> CssCode {
        CssCode {
            c1: self.c2.dual(),
            c2: self.c1.dual(),
            d1: self.d2_perp,
            d2_perp: self.d1,
        }
    }

    pub fn report(&self) -> CssReport {
        let cap = self.correction_capability();
        CssReport {
            schema_version: SCHEMA_VERSION,
            q: self.field().order(),
            n: self.len(),
            k1: self.k1(),
            k2: self.k2(),
            quantum_dim: self.quantum_dim(),
            d1: self.d1.value(),
            d1_exact: self.d1.is_exact(),
            d2_perp: self.d2_perp.value(),
            d2_perp_exact: self.d2_perp.is_exact(),
            e_max: cap.e_max,
            f_max: cap.f_max,
            t: cap.t,
        }
    }
}

/// Two CSS codes are equal exactly when their pairs are equal.
pub fn css_equals(a: &CssCode, b: &CssCode) -> bool {
    a.c1 == b.c1 && a.c2 == b.c2
}

/// JSON parameter report. A distance flagged not exact is a lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CssReport {
    pub schema_version: u32,
    pub q: u32,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub quantum_dim: usize,
    pub d1: usize,
    pub d1_exact: bool,
    pub d2_perp: usize,
    pub d2_perp_exact: bool,
    pub e_max: usize,
    pub f_max: usize,
    pub t: usize,
}

/// All nested pairs `C2 ⊆ C1 ⊆ F_q^n`, ordered by `(k1, C1, k2, C2)` in enumeration order.
pub fn enumerate_nested_pairs(field: &Arc<Field>, n: usize, limits: &Limits) -> Result<Vec<(LinearCode, LinearCode)>> {
    let q = field.order() as u64;
    let total: num_bigint::BigUint = (0..=n)
        .flat_map(|k1| (0..=k1).map(move |k2| (k1, k2)))
        .map(|(k1, k2)| pair_count(n, k1, k2, q))
        .sum();
    limits.check_enumeration(
        "nested pair enumeration",
        u128::try_from(total).unwrap_or(u128::MAX),
    )?;
    let ambient = LinearCode::full(field.clone(), n);
    let mut pairs = Vec::new();
    for k1 in 0..=n {
        for c1 in enumerate_subspaces(&ambient, k1, limits)? {
            for k2 in 0..=k1 {
                for c2 in enumerate_subspaces(&c1, k2, limits)? {
                    pairs.push((c1.clone(), c2));
                }
            }
        }
    }
    Ok(pairs)
}
