//! CSS-T codes: even codes, self-dual containment, the support-wise
//! characterization and its definitional oracle, and rate/distance bounds.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::census::SCHEMA_VERSION;
use crate::css::{CssCode, Distance};
use crate::error::{Error, Result};
use crate::fqlinear::{axpy, nullspace, rank, reduce, weight, LinearCode, SupportSet, Vector};
use crate::galois::{Field, FieldElement, QClass};
use crate::limits::Limits;

/// Every codeword has even Hamming weight.
///
/// Over GF(2) the generators suffice, since `wt(x+y) = wt(x) + wt(y) − 2|σ(x) ∩ σ(y)|`.
pub fn is_even(code: &LinearCode, limits: &Limits) -> Result<bool> {
    if code.field().order() == 2 {
        return Ok(code.generator().iter().all(|g| weight(g) % 2 == 0));
    }
    let mut even = true;
    code.for_each_codeword(limits, |c| even &= weight(c) % 2 == 0)?;
    Ok(even)
}

/// Whether `code` contains a self-dual code, by the closed-form criterion:
/// `C⊥ ⊆ C` and `n` even, with `n ≡ 0 (mod 4)` instead when `q ≡ 3 (mod 4)`.
pub fn contains_self_dual(code: &LinearCode) -> bool {
    let n = code.len();
    let length_ok = match code.field().residue_class() {
        QClass::Char2 | QClass::OneMod4 => n % 2 == 0,
        QClass::ThreeMod4 => n % 4 == 0,
    };
    length_ok && code.dual().is_subcode_of(code)
}

/// `F_q^k` with the symmetric form `(u, v) ↦ u Γ vᵀ`.
struct FormSpace<'a> {
    field: &'a Field,
    gram: Vec<Vector>,
}

impl<'a> FormSpace<'a> {
    fn standard(field: &'a Field, n: usize) -> Self {
        let gram = (0..n)
            .map(|i| (0..n).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }).collect())
            .collect();
        FormSpace { field, gram }
    }

    /// The form restricted to `code`, in coordinates of its generator rows.
    fn restricted(code: &'a LinearCode) -> Self {
        let field = &**code.field();
        let g = code.generator();
        let gram = g.iter().map(|a| g.iter().map(|b| field.dot(a, b)).collect()).collect();
        FormSpace { field, gram }
    }

    fn dim(&self) -> usize {
        self.gram.len()
    }

    fn apply(&self, u: &[FieldElement]) -> Vector {
        let mut out = vec![FieldElement::ZERO; self.dim()];
        for (&c, row) in u.iter().zip(&self.gram) {
            axpy(self.field, &mut out, c, row);
        }
        out
    }

    fn is_isotropic(&self, v: &[FieldElement]) -> bool {
        self.field.dot(&self.apply(v), v).is_zero()
    }

    /// `U^⊥` with respect to the form.
    fn perp(&self, basis: &[Vector]) -> Vec<Vector> {
        let rows: Vec<Vector> = basis.iter().map(|u| self.apply(u)).collect();
        nullspace(self.field, &rows, self.dim())
    }

    /// One representative per line of isotropic vectors `w` in a complement of
    /// `U` inside `U^⊥`. Every isotropic subspace `W ⊋ U` contains `U + ⟨w⟩` for one of them.
    fn extensions(&self, basis: &[Vector]) -> Vec<Vector> {
        let k = self.dim();
        let mut span = basis.to_vec();
        let mut complement = Vec::new();
        for v in self.perp(basis) {
            let mut trial = span.clone();
            trial.push(v.clone());
            if rank(self.field, &trial, k) > span.len() {
                span = trial;
                complement.push(v);
            }
        }
        let mut out = Vec::new();
        for_each_projective(self.field, &complement, k, |w| {
            if self.is_isotropic(w) {
                out.push(w.to_vec());
            }
        });
        out
    }

    /// Explores totally isotropic subspaces containing `start` (which must be
    /// isotropic), stopping early when `stop` returns true. Returns whether it stopped.
    fn explore(
        &self,
        start: Vec<Vector>,
        limits: &Limits,
        mut stop: impl FnMut(&[Vector]) -> bool,
    ) -> Result<bool> {
        let k = self.dim();
        let mut start = start;
        reduce(self.field, &mut start, k);
        let mut visited = HashSet::new();
        visited.insert(start.clone());
        let mut stack = vec![start];
        let mut steps: u128 = 0;
        while let Some(u) = stack.pop() {
            if stop(&u) {
                return Ok(true);
            }
            for w in self.extensions(&u) {
                steps += 1;
                limits.check_enumeration("isotropic subspace search", steps)?;
                let mut next = u.clone();
                next.push(w);
                reduce(self.field, &mut next, k);
                if visited.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        Ok(false)
    }
}

/// Calls `f` on each vector of `span(basis)` whose first nonzero coefficient is 1.
fn for_each_projective(field: &Field, basis: &[Vector], len: usize, mut f: impl FnMut(&[FieldElement])) {
    let q = field.order();
    let m = basis.len();
    for lead in 0..m {
        let tail = m - lead - 1;
        let mut digits = vec![0u32; tail];
        loop {
            let mut v = basis[lead].clone();
            v.resize(len, FieldElement::ZERO);
            for (i, &d) in digits.iter().enumerate() {
                if let Ok(c) = field.element(d) {
                    axpy(field, &mut v, c, &basis[lead + 1 + i]);
                }
            }
            f(&v);
            let Some(i) = digits.iter().position(|&d| d + 1 < q) else {
                break;
            };
            digits[i] += 1;
            for d in &mut digits[..i] {
                *d = 0;
            }
        }
    }
}

/// Whether `code` contains a self-dual code, by exhaustive search.
///
/// Works in coordinates of `C`'s basis under the Gram form `G Gᵀ`. A
/// self-dual `D ⊆ C` is a totally isotropic subspace of dimension `n/2`, and
/// it may be assumed to contain the radical `C ∩ C⊥`; the search extends the
/// radical one isotropic line at a time.
pub fn contains_self_dual_bruteforce(code: &LinearCode, limits: &Limits) -> Result<bool> {
    let n = code.len();
    if n % 2 == 1 || code.dimension() < n / 2 {
        return Ok(false);
    }
    let space = FormSpace::restricted(code);
    let radical = nullspace(space.field, &space.gram, space.dim());
    if radical.len() > n / 2 {
        return Ok(false);
    }
    space.explore(radical, limits, |u| u.len() == n / 2)
}

/// All self-orthogonal codes `D ⊆ D⊥` in `F_q^n`, including the zero code.
///
/// Codes with `C⊥ ⊆ C` are exactly the duals of these.
pub fn self_orthogonal_codes(field: &std::sync::Arc<Field>, n: usize, limits: &Limits) -> Result<Vec<LinearCode>> {
    let space = FormSpace::standard(field, n);
    let mut found = Vec::new();
    space.explore(Vec::new(), limits, |u| {
        found.push(u.to_vec());
        false
    })?;
    let mut codes: Vec<LinearCode> = found
        .into_iter()
        .map(|rows| LinearCode::from_generator(field.clone(), n, rows).expect("rows have length n"))
        .collect();
    codes.sort_by(|a, b| (a.dimension(), a.generator()).cmp(&(b.dimension(), b.generator())));
    Ok(codes)
}

/// Which CSS-T condition a codeword `x ∈ C2` violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `wt(x)` is odd.
    Evenness,
    /// `π_{σ(x)}(C1)` is not self-orthogonal.
    ProjectedSelfOrthogonality,
    /// `q ≡ 3 (mod 4)` and `wt(x)/2` is odd.
    HalfWeightParity,
}

/// A codeword of `C2` and the condition it violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub codeword: Vec<u32>,
    pub condition: Condition,
}

/// Result of the CSS-T characterization check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsstReport {
    pub schema_version: u32,
    pub verdict: bool,
    pub branch: QClass,
    /// Smallest violating codeword (integer encodings compared lexicographically).
    pub witness: Option<Witness>,
    pub checked_codewords: u64,
    pub distinct_supports: usize,
}

fn support_condition(c1: &LinearCode, s: &SupportSet, branch: QClass) -> Option<Condition> {
    let w = s.len();
    if w % 2 == 1 {
        return Some(Condition::Evenness);
    }
    if !c1.puncture(s).expect("support of a codeword of the same length").is_self_orthogonal() {
        return Some(Condition::ProjectedSelfOrthogonality);
    }
    if branch == QClass::ThreeMod4 && (w / 2) % 2 == 1 {
        return Some(Condition::HalfWeightParity);
    }
    None
}

/// The condition a single codeword `x` violates, if any.
pub fn check_codeword(c1: &LinearCode, x: &[FieldElement]) -> Result<Option<Condition>> {
    if x.len() != c1.len() {
        return Err(Error::DimensionMismatch(format!(
            "codeword of length {} for codes of length {}",
            x.len(),
            c1.len()
        )));
    }
    Ok(support_condition(c1, &SupportSet::of(x), c1.field().residue_class()))
}

fn check_pair(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    if c1.len() != c2.len() {
        return Err(Error::DimensionMismatch(format!("codes of lengths {} and {}", c1.len(), c2.len())));
    }
    if !c2.is_subcode_of(c1) {
        return Err(Error::NotNested);
    }
    Ok(())
}

/// CSS-T test by the support-wise characterization: for every `x ∈ C2`,
/// `wt(x)` is even, `π_{σ(x)}(C1)` is self-orthogonal, and, when `q ≡ 3 (mod 4)`,
/// `wt(x)/2` is even. Conditions depend only on `σ(x)`, so each support is checked once.
pub fn is_csst(c1: &LinearCode, c2: &LinearCode, limits: &Limits) -> Result<CsstReport> {
    check_pair(c1, c2)?;
    let branch = c1.field().residue_class();
    let mut verdicts: HashMap<SupportSet, Option<Condition>> = HashMap::new();
    let mut worst: Option<(Vector, Condition)> = None;
    let mut checked = 0u64;
    c2.for_each_codeword(limits, |x| {
        checked += 1;
        let s = SupportSet::of(x);
        let failed = *verdicts
            .entry(s)
            .or_insert_with_key(|s| support_condition(c1, s, branch));
        if let Some(cond) = failed {
            if worst.as_ref().is_none_or(|(w, _)| x < w.as_slice()) {
                worst = Some((x.to_vec(), cond));
            }
        }
    })?;
    Ok(CsstReport {
        schema_version: SCHEMA_VERSION,
        verdict: worst.is_none(),
        branch,
        witness: worst.map(|(x, condition)| Witness {
            codeword: x.iter().map(|e| e.value()).collect(),
            condition,
        }),
        checked_codewords: checked,
        distinct_supports: verdicts.len(),
    })
}

/// CSS-T test straight from the definition: `C2` is even and, for every
/// `x ∈ C2`, the shortened code `π_{σ(x)}(C1⊥ ∩ F_q^n(σ(x)))` contains a
/// self-dual code (found by exhaustive search).
pub fn is_csst_definition(c1: &LinearCode, c2: &LinearCode, limits: &Limits) -> Result<bool> {
    check_pair(c1, c2)?;
    let dual = c1.dual();
    let mut supports = HashSet::new();
    c2.for_each_codeword(limits, |x| {
        supports.insert(SupportSet::of(x));
    })?;
    if supports.iter().any(|s| s.len() % 2 == 1) {
        return Ok(false);
    }
    let mut supports: Vec<_> = supports.into_iter().collect();
    supports.sort();
    for s in &supports {
        if !contains_self_dual_bruteforce(&dual.shorten(s)?, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pair `(C1, ⟨x⟩)` for a self-dual `C1` and an even-weight, full-support `x ∈ C1`.
///
/// The result is CSS-T with `d2⊥ = 2` and rate `1/2 − 1/n`.
pub fn build_remark_csst(c1: &LinearCode, x: &[FieldElement]) -> Result<(LinearCode, LinearCode)> {
    if !c1.is_self_dual() {
        return Err(Error::InvalidParameter("C1 is not self-dual".into()));
    }
    if !c1.contains(x) {
        return Err(Error::InvalidParameter("x is not a codeword of C1".into()));
    }
    let w = weight(x);
    if w != c1.len() {
        return Err(Error::InvalidParameter(format!("x has weight {w} < n = {}", c1.len())));
    }
    if w % 2 == 1 {
        return Err(Error::InvalidParameter(format!("x has odd weight {w}")));
    }
    let c2 = LinearCode::from_generator(c1.field().clone(), c1.len(), vec![x.to_vec()])?;
    Ok((c1.clone(), c2))
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_opt_rational<S: Serializer>(r: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Status of a bound hypothesis "some `x ∈ C2` has weight in a given range".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Hypothesis {
    Holds { witness: Vec<u32>, weight: usize },
    Fails,
    /// The range depends on an unknown exact `d1`.
    Undetermined,
}

impl Hypothesis {
    pub fn holds(&self) -> bool {
        matches!(self, Hypothesis::Holds { .. })
    }
}

/// One of the three rate/distance inequalities `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub hypothesis: Hypothesis,
    /// Absent when the left side depends on a distance known only as a lower bound.
    #[serde(serialize_with = "ser_opt_rational")]
    pub lhs: Option<BigRational>,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
    #[serde(serialize_with = "ser_opt_rational")]
    pub slack: Option<BigRational>,
}

impl BoundCheck {
    /// False only when the hypothesis holds and the inequality is known to fail.
    pub fn sound(&self) -> bool {
        !self.hypothesis.holds() || self.slack.as_ref().is_none_or(|s| !s.is_negative())
    }
}

/// Rate/distance report for a CSS-T code:
/// (1) `wt(x) ≥ n − k2 + 1 ⇒ R + δ2⊥/2 ≤ 1/2`;
/// (2) `wt(x) > n − d1 ⇒ R + δ2⊥ ≤ 1/2 + 1/n`;
/// (3) `wt(x) = n − d1 ⇒ R + δ1/2 + δ2⊥ ≤ 1/2 + 2/n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub schema_version: u32,
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub rate: BigRational,
    /// `d1/n`, or its lower bound when `d1` is not exact.
    #[serde(serialize_with = "ser_rational")]
    pub delta1: BigRational,
    pub delta1_exact: bool,
    #[serde(serialize_with = "ser_rational")]
    pub delta2_perp: BigRational,
    pub delta2_perp_exact: bool,
    #[serde(serialize_with = "ser_rational")]
    pub delta: BigRational,
    pub bounds: [BoundCheck; 3],
}

impl BoundReport {
    pub fn all_sound(&self) -> bool {
        self.bounds.iter().all(BoundCheck::sound)
    }

    pub fn applicable(&self) -> impl Iterator<Item = (usize, &BoundCheck)> {
        self.bounds.iter().enumerate().filter(|(_, b)| b.hypothesis.holds()).map(|(i, b)| (i + 1, b))
    }
}

/// Evaluates the three rate/distance bounds. Fails with [`Error::NotCsst`]
/// unless the pair passes [`is_csst`].
pub fn check_rate_distance_bounds(code: &CssCode, limits: &Limits) -> Result<BoundReport> {
    let (c1, c2) = (code.c1(), code.c2());
    let n = code.len();
    if n == 0 {
        return Err(Error::InvalidParameter("rates of a length-0 code are undefined".into()));
    }
    if !is_csst(c1, c2, limits)?.verdict {
        return Err(Error::NotCsst);
    }
    let (k1, k2) = (code.k1(), code.k2());
    let d1 = code.d1();
    let d2p = code.d2_perp();
    // Exact bounds on d1: Singleton gives d1 ≤ n − k1 + 1.
    let d1_low = d1.value();
    let d1_high = match d1 {
        Distance::Exact(d) => d,
        Distance::AtLeast(_) => n + 1 - k1,
    };

    // Lexicographically smallest codeword per predicate.
    let mut best: [Option<Vector>; 3] = [None, None, None];
    let mut undetermined = [false; 3];
    let consider = |slot: usize, x: &[FieldElement], best: &mut [Option<Vector>; 3]| {
        if best[slot].as_ref().is_none_or(|b| x < b.as_slice()) {
            best[slot] = Some(x.to_vec());
        }
    };
    c2.for_each_codeword(limits, |x| {
        let w = weight(x);
        if w + k2 > n {
            consider(0, x, &mut best);
        }
        if w + d1_low > n {
            consider(1, x, &mut best);
        } else if w + d1_high > n {
            undetermined[1] = true;
        }
        if d1.is_exact() {
            if w + d1_low == n {
                consider(2, x, &mut best);
            }
        } else if w + d1_high >= n && w + d1_low <= n {
            undetermined[2] = true;
        }
    })?;
    let hyp = |slot: usize| match &best[slot] {
        Some(x) => Hypothesis::Holds {
            witness: x.iter().map(|e| e.value()).collect(),
            weight: weight(x),
        },
        None if undetermined[slot] => Hypothesis::Undetermined,
        None => Hypothesis::Fails,
    };

    let frac = |a: usize, b: usize| BigRational::new(BigInt::from(a), BigInt::from(b));
    let half = frac(1, 2);
    let rate = frac(k1 - k2, n);
    let delta1 = frac(d1.value(), n);
    let delta2 = frac(d2p.value(), n);
    let delta = if delta1 < delta2 { delta1.clone() } else { delta2.clone() };
    let make = |hypothesis: Hypothesis, lhs: Option<BigRational>, rhs: BigRational| {
        let slack = lhs.as_ref().map(|l| &rhs - l);
        BoundCheck { hypothesis, lhs, rhs, slack }
    };
    let d2_known = d2p.is_exact();
    let bounds = [
        make(
            hyp(0),
            d2_known.then(|| &rate + &delta2 / BigInt::from(2)),
            half.clone(),
        ),
        make(hyp(1), d2_known.then(|| &rate + &delta2), &half + frac(1, n)),
        make(
            hyp(2),
            (d2_known && d1.is_exact()).then(|| &rate + &delta1 / BigInt::from(2) + &delta2),
            &half + frac(2, n),
        ),
    ];
    Ok(BoundReport {
        schema_version: SCHEMA_VERSION,
        n,
        rate,
        delta1,
        delta1_exact: d1.is_exact(),
        delta2_perp: delta2,
        delta2_perp_exact: d2_known,
        delta,
        bounds,
    })
}
