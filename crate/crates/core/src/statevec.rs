//! Dense state vectors on `(C^q)^{⊗n}` for checking CSS constructions at tiny sizes.
//!
//! Basis states `|v⟩`, `v ∈ F_q^n`, are indexed by `Σ v_i q^{n−1−i}` (leftmost
//! factor most significant), with `v_i` the integer encoding of the element.
//! `ζ = e^{2πi/p}`; phases are reduced mod `p` before any floating-point work.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::css::enumerate_nested_pairs;
use crate::error::{Error, Result};
use crate::fqlinear::LinearCode;
use crate::galois::{Field, FieldElement};
use crate::limits::{saturating_pow, Limits};

/// Tolerance for comparing states.
pub const STATE_TOL: f64 = 1e-9;
/// Tolerance for comparing operators.
pub const OPERATOR_TOL: f64 = 1e-12;

fn roots_of_unity(p: u32) -> Vec<Complex64> {
    (0..p).map(|t| Complex64::from_polar(1.0, 2.0 * PI * t as f64 / p as f64)).collect()
}

/// A (not necessarily normalized) vector of amplitudes indexed by `F_q^n`.
#[derive(Debug, Clone)]
pub struct StateVector {
    field: Arc<Field>,
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// The all-zero vector of dimension `q^n`.
    pub fn zeros(field: Arc<Field>, n: usize, limits: &Limits) -> Result<StateVector> {
        let dim = saturating_pow(field.order() as u64, n);
        limits.check_dense("state vector", dim)?;
        Ok(StateVector {
            field,
            n,
            amplitudes: vec![Complex64::new(0.0, 0.0); dim as usize],
        })
    }

    /// The basis state `|v⟩`.
    pub fn basis(field: Arc<Field>, v: &[FieldElement], limits: &Limits) -> Result<StateVector> {
        let mut s = Self::zeros(field, v.len(), limits)?;
        let i = s.index_of(v);
        s.amplitudes[i] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// Number of tensor factors.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn index_of(&self, v: &[FieldElement]) -> usize {
        let q = self.field.order() as usize;
        v.iter().fold(0usize, |acc, x| acc * q + x.value() as usize)
    }

    pub fn vector_of(&self, mut index: usize) -> Vec<FieldElement> {
        let q = self.field.order() as usize;
        let mut v = vec![FieldElement::ZERO; self.n];
        for slot in v.iter_mut().rev() {
            *slot = self.field.element((index % q) as u32).expect("digit below q");
            index /= q;
        }
        v
    }

    pub fn amplitude(&self, v: &[FieldElement]) -> Complex64 {
        self.amplitudes[self.index_of(v)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max_v |self_v − other_v|`.
    pub fn max_difference(&self, other: &StateVector) -> f64 {
        assert_eq!(self.amplitudes.len(), other.amplitudes.len(), "states of different dimension");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Applies `op` to tensor factor `factor` (0 = leftmost).
    pub fn apply(&mut self, op: &LocalOperator, factor: usize) {
        assert!(factor < self.n, "factor {factor} out of range for {} factors", self.n);
        let q = self.field.order() as usize;
        let stride = q.pow((self.n - 1 - factor) as u32);
        let block = stride * q;
        let mut column = vec![Complex64::new(0.0, 0.0); q];
        for base in (0..self.amplitudes.len()).step_by(block) {
            for offset in 0..stride {
                for (j, c) in column.iter_mut().enumerate() {
                    *c = self.amplitudes[base + offset + j * stride];
                }
                for i in 0..q {
                    let row = &op.matrix[i];
                    self.amplitudes[base + offset + i * stride] =
                        row.iter().zip(&column).map(|(m, c)| m * c).sum();
                }
            }
        }
    }

    /// Applies `op` to every tensor factor.
    pub fn apply_all(&mut self, op: &LocalOperator) {
        for f in 0..self.n {
            self.apply(op, f);
        }
    }

    /// Support with amplitudes rounded to `STATE_TOL`, usable as a hash key.
    fn fingerprint(&self) -> Vec<(usize, i64, i64)> {
        let scale = 1.0 / STATE_TOL;
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > STATE_TOL)
            .map(|(i, a)| (i, (a.re * scale).round() as i64, (a.im * scale).round() as i64))
            .collect()
    }
}

/// A `q × q` matrix acting on one tensor factor, rows and columns indexed by field encodings.
#[derive(Debug, Clone)]
pub struct LocalOperator {
    pub label: String,
    pub matrix: Vec<Vec<Complex64>>,
}

impl LocalOperator {
    pub fn identity(field: &Field) -> LocalOperator {
        let q = field.order() as usize;
        let matrix = (0..q)
            .map(|i| (0..q).map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect())
            .collect();
        LocalOperator { label: "I".into(), matrix }
    }

    /// `X(a)|v⟩ = |v + a⟩`.
    pub fn pauli_x(field: &Field, a: FieldElement) -> LocalOperator {
        let q = field.order() as usize;
        let mut matrix = vec![vec![Complex64::new(0.0, 0.0); q]; q];
        for v in field.elements() {
            matrix[field.add(v, a).value() as usize][v.value() as usize] = Complex64::new(1.0, 0.0);
        }
        LocalOperator { label: format!("X({})", a.value()), matrix }
    }

    /// `Z(b)|v⟩ = ζ^{Tr(vb)}|v⟩`.
    pub fn pauli_z(field: &Field, b: FieldElement) -> LocalOperator {
        let roots = roots_of_unity(field.characteristic());
        let mut op = Self::identity(field);
        for v in field.elements() {
            let i = v.value() as usize;
            op.matrix[i][i] = roots[field.trace_unchecked(field.mul(v, b)) as usize];
        }
        op.label = format!("Z({})", b.value());
        op
    }

    /// `H^{(q)}|b⟩ = q^{−1/2} Σ_j ζ^{Tr(jb)}|j⟩`.
    pub fn dft(field: &Field) -> LocalOperator {
        let q = field.order() as usize;
        let roots = roots_of_unity(field.characteristic());
        let scale = 1.0 / (q as f64).sqrt();
        let matrix = field
            .elements()
            .map(|j| {
                field
                    .elements()
                    .map(|b| roots[field.trace_unchecked(field.mul(j, b)) as usize] * scale)
                    .collect()
            })
            .collect();
        LocalOperator { label: format!("H({q})"), matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `self · other`.
    pub fn compose(&self, other: &LocalOperator) -> LocalOperator {
        let q = self.dim();
        let matrix = (0..q)
            .map(|i| (0..q).map(|j| (0..q).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum()).collect())
            .collect();
        LocalOperator {
            label: format!("{}·{}", self.label, other.label),
            matrix,
        }
    }

    pub fn adjoint(&self) -> LocalOperator {
        let q = self.dim();
        let matrix = (0..q).map(|i| (0..q).map(|j| self.matrix[j][i].conj()).collect()).collect();
        LocalOperator {
            label: format!("{}†", self.label),
            matrix,
        }
    }

    pub fn scaled(&self, c: Complex64) -> LocalOperator {
        LocalOperator {
            label: self.label.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn max_difference(&self, other: &LocalOperator) -> f64 {
        self.matrix
            .iter()
            .flatten()
            .zip(other.matrix.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self) -> bool {
        let q = self.dim();
        let prod = self.compose(&self.adjoint());
        (0..q).all(|i| {
            (0..q).all(|j| {
                let target = if i == j { 1.0 } else { 0.0 };
                (prod.matrix[i][j] - Complex64::new(target, 0.0)).norm() < OPERATOR_TOL
            })
        })
    }
}

/// `|c_w⟩ = |C1|^{−1/2} Σ_{c ∈ C1} ζ^{Tr⟨c, w⟩}|c⟩`.
pub fn css_ket_cs(c1: &LinearCode, w: &[FieldElement], limits: &Limits) -> Result<StateVector> {
    check_vector(c1, w)?;
    let field = c1.field();
    let mut state = StateVector::zeros(field.clone(), c1.len(), limits)?;
    let roots = roots_of_unity(field.characteristic());
    let scale = 1.0 / (c1.size() as f64).sqrt();
    c1.for_each_codeword(limits, |c| {
        let phase = field.trace_unchecked(field.dot(c, w)) as usize;
        let i = state.index_of(c);
        state.amplitudes[i] += roots[phase] * scale;
    })?;
    Ok(state)
}

/// `|w + C⟩ = |C|^{−1/2} Σ_{c ∈ C} |w + c⟩`.
pub fn coset_ket(code: &LinearCode, w: &[FieldElement], limits: &Limits) -> Result<StateVector> {
    check_vector(code, w)?;
    let field = code.field();
    let mut state = StateVector::zeros(field.clone(), code.len(), limits)?;
    let scale = 1.0 / (code.size() as f64).sqrt();
    code.for_each_codeword(limits, |c| {
        let v: Vec<FieldElement> = c.iter().zip(w).map(|(&a, &b)| field.add(a, b)).collect();
        let i = state.index_of(&v);
        state.amplitudes[i] += Complex64::new(scale, 0.0);
    })?;
    Ok(state)
}

fn check_vector(code: &LinearCode, w: &[FieldElement]) -> Result<()> {
    if w.len() != code.len() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a code of length {}",
            w.len(),
            code.len()
        )));
    }
    if let Some(&bad) = w.iter().find(|x| !code.field().contains(**x)) {
        return Err(Error::NotInField {
            value: bad.value(),
            order: code.field().order(),
        });
    }
    Ok(())
}

/// Outcome of [`verify_cs_steane_equivalence`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivalenceCheck {
    pub holds: bool,
    pub max_residual: f64,
    /// Number of coset representatives of `C2⊥/C1⊥` checked.
    pub checked: usize,
}

/// For each coset representative `w` of `C2⊥/C1⊥`, checks `H^{⊗n}|c_w⟩ = |−w + C1⊥⟩`,
/// mapping the Calderbank–Shor basis of `Q(C1, C2)` onto the Steane basis of `Q(C2⊥, C1⊥)`.
pub fn verify_cs_steane_equivalence(c1: &LinearCode, c2: &LinearCode, limits: &Limits) -> Result<EquivalenceCheck> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    if !c2.is_subcode_of(c1) {
        return Err(Error::NotNested);
    }
    let field = c1.field();
    limits.check_dense("state vector", saturating_pow(field.order() as u64, c1.len()))?;
    let c1_perp = c1.dual();
    let c2_perp = c2.dual();
    let mut reps = Vec::new();
    let mut seen = HashSet::new();
    c2_perp.for_each_codeword(limits, |w| {
        if seen.insert(c1_perp.reduce_vector(w)) {
            reps.push(w.to_vec());
        }
    })?;
    let h = LocalOperator::dft(field);
    let mut max_residual: f64 = 0.0;
    for w in &reps {
        let mut lhs = css_ket_cs(c1, w, limits)?;
        lhs.apply_all(&h);
        let minus_w: Vec<FieldElement> = w.iter().map(|&x| field.neg(x)).collect();
        let rhs = coset_ket(&c1_perp, &minus_w, limits)?;
        max_residual = max_residual.max(lhs.max_difference(&rhs));
    }
    Ok(EquivalenceCheck {
        holds: max_residual < STATE_TOL,
        max_residual,
        checked: reps.len(),
    })
}

/// The Steane basis `{|w + C2⟩ : w ∈ C1}` of `Q(C1, C2)`, one ket per coset.
pub fn steane_basis(c1: &LinearCode, c2: &LinearCode, limits: &Limits) -> Result<Vec<StateVector>> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    c1.for_each_codeword(limits, |w| {
        if seen.insert(c2.reduce_vector(w)) {
            reps.push(w.to_vec());
        }
    })?;
    reps.iter().map(|w| coset_ket(c2, w, limits)).collect()
}

/// Outcome of [`verify_pair_distinctness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistinctnessCheck {
    pub holds: bool,
    pub pairs: usize,
    pub distinct_state_sets: usize,
}

/// Checks over all nested pairs in `F_q^n` that distinct pairs give distinct sets of basis kets.
pub fn verify_pair_distinctness(field: &Arc<Field>, n: usize, limits: &Limits) -> Result<DistinctnessCheck> {
    limits.check_dense("state vector", saturating_pow(field.order() as u64, n))?;
    let pairs = enumerate_nested_pairs(field, n, limits)?;
    let mut sets = HashSet::new();
    for (c1, c2) in &pairs {
        let mut kets: Vec<_> = steane_basis(c1, c2, limits)?.iter().map(StateVector::fingerprint).collect();
        kets.sort();
        sets.insert(kets);
    }
    Ok(DistinctnessCheck {
        holds: sets.len() == pairs.len(),
        pairs: pairs.len(),
        distinct_state_sets: sets.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqlinear::tests::gf;

    fn lim() -> Limits {
        Limits::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn el(f: &Field, v: u32) -> FieldElement {
        f.element(v).unwrap()
    }

    fn vec_of(f: &Field, xs: &[u32]) -> Vec<FieldElement> {
        xs.iter().map(|&x| el(f, x)).collect()
    }

    fn assert_state(s: &StateVector, expected: &[Complex64]) {
        let diff = s
            .amplitudes()
            .iter()
            .zip(expected)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(diff < STATE_TOL, "{:?}", s.amplitudes());
    }

    #[test]
    fn cs_kets() {
        let f = gf(2);
        let r = 1.0 / 2f64.sqrt();
        let zero = LinearCode::zero(f.clone(), 2);
        assert_state(&css_ket_cs(&zero, &vec_of(&f, &[1, 1]), &lim()).unwrap(), &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let one = LinearCode::full(f.clone(), 1);
        assert_state(&css_ket_cs(&one, &vec_of(&f, &[0]), &lim()).unwrap(), &[c(r, 0.0), c(r, 0.0)]);
        assert_state(&css_ket_cs(&one, &vec_of(&f, &[1]), &lim()).unwrap(), &[c(r, 0.0), c(-r, 0.0)]);
    }

    #[test]
    fn coset_kets() {
        let f = gf(2);
        let r = 1.0 / 2f64.sqrt();
        let rep = LinearCode::from_values(f.clone(), &[vec![1, 1]]).unwrap();
        let z = c(0.0, 0.0);
        assert_state(&coset_ket(&rep, &vec_of(&f, &[0, 0]), &lim()).unwrap(), &[c(r, 0.0), z, z, c(r, 0.0)]);
        let a = coset_ket(&rep, &vec_of(&f, &[1, 0]), &lim()).unwrap();
        let b = coset_ket(&rep, &vec_of(&f, &[0, 1]), &lim()).unwrap();
        assert!(a.max_difference(&b) < STATE_TOL);
        let zero = LinearCode::zero(f.clone(), 2);
        assert_state(&coset_ket(&zero, &vec_of(&f, &[1, 0]), &lim()).unwrap(), &[z, z, c(1.0, 0.0), z]);
    }

    #[test]
    fn kets_are_normalized() {
        for q in [2u64, 3, 4] {
            let f = gf(q);
            for (c1, c2) in enumerate_nested_pairs(&f, 2, &lim()).unwrap() {
                for w in c1.codewords(&lim()).unwrap() {
                    assert!((css_ket_cs(&c1, &w, &lim()).unwrap().norm() - 1.0).abs() < STATE_TOL);
                    assert!((coset_ket(&c2, &w, &lim()).unwrap().norm() - 1.0).abs() < STATE_TOL);
                }
            }
        }
    }

    #[test]
    fn dense_cap() {
        let tiny = Limits { enumeration: 1 << 20, dense: 8 };
        let f = gf(3);
        assert!(matches!(
            css_ket_cs(&LinearCode::zero(f.clone(), 2), &vec_of(&f, &[0, 0]), &tiny),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dft_examples() {
        let f2 = gf(2);
        let r = 1.0 / 2f64.sqrt();
        let h = LocalOperator::dft(&f2);
        let expected = [[r, r], [r, -r]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((h.matrix[i][j] - c(expected[i][j], 0.0)).norm() < OPERATOR_TOL);
            }
        }
        let f3 = gf(3);
        let h3 = LocalOperator::dft(&f3);
        let zeta = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        for i in 0..3 {
            for j in 0..3 {
                let e = zeta.powu((i * j) as u32) / 3f64.sqrt();
                assert!((h3.matrix[i][j] - e).norm() < OPERATOR_TOL);
            }
        }
        for q in [2u64, 3, 4, 5, 8, 9] {
            assert!(LocalOperator::dft(&gf(q)).is_unitary());
        }
    }

    #[test]
    fn dft_squared_is_negation() {
        for q in [2u64, 3, 4, 5, 9] {
            let f = gf(q);
            let h2 = LocalOperator::dft(&f).compose(&LocalOperator::dft(&f));
            for b in f.elements() {
                for j in f.elements() {
                    let expected = if j == f.neg(b) { 1.0 } else { 0.0 };
                    let got = h2.matrix[j.value() as usize][b.value() as usize];
                    assert!((got - c(expected, 0.0)).norm() < OPERATOR_TOL);
                }
            }
        }
    }

    #[test]
    fn q3_pauli_matrices() {
        let f = gf(3);
        let zeta = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let (o, i) = (c(0.0, 0.0), c(1.0, 0.0));
        // Matrices as printed: printed X(a) sends |v⟩ to |v − a⟩, which is X(−a) here.
        let printed_x1 = [[o, i, o], [o, o, i], [i, o, o]];
        let printed_x2 = [[o, o, i], [i, o, o], [o, i, o]];
        for (a, m) in [(1, printed_x1), (2, printed_x2)] {
            let ours = LocalOperator::pauli_x(&f, f.neg(el(&f, a)));
            for r in 0..3 {
                for s in 0..3 {
                    assert!((ours.matrix[r][s] - m[r][s]).norm() < OPERATOR_TOL);
                }
            }
        }
        let z1 = LocalOperator::pauli_z(&f, el(&f, 1));
        let z2 = LocalOperator::pauli_z(&f, el(&f, 2));
        let diag1 = [i, zeta, zeta * zeta];
        let diag2 = [i, zeta * zeta, zeta];
        for k in 0..3 {
            assert!((z1.matrix[k][k] - diag1[k]).norm() < OPERATOR_TOL);
            assert!((z2.matrix[k][k] - diag2[k]).norm() < OPERATOR_TOL);
        }
        let id = LocalOperator::identity(&f);
        assert!(LocalOperator::pauli_x(&f, FieldElement::ZERO).max_difference(&id) < OPERATOR_TOL);
        assert!(LocalOperator::pauli_z(&f, FieldElement::ZERO).max_difference(&id) < OPERATOR_TOL);
    }

    #[test]
    fn pauli_x_composes_additively_over_gf4() {
        let f = gf(4);
        for a in f.elements() {
            for b in f.elements() {
                let lhs = LocalOperator::pauli_x(&f, a).compose(&LocalOperator::pauli_x(&f, b));
                assert!(lhs.max_difference(&LocalOperator::pauli_x(&f, f.add(a, b))) < OPERATOR_TOL);
            }
        }
    }

    #[test]
    fn weyl_commutation() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = gf(q);
            let roots = roots_of_unity(f.characteristic());
            for a in f.elements() {
                for b in f.elements() {
                    let (x, z) = (LocalOperator::pauli_x(&f, a), LocalOperator::pauli_z(&f, b));
                    assert!(x.is_unitary() && z.is_unitary());
                    let phase = roots[f.trace(f.mul(a, b)).unwrap() as usize];
                    let lhs = z.compose(&x);
                    let rhs = x.compose(&z).scaled(phase);
                    assert!(lhs.max_difference(&rhs) < OPERATOR_TOL);
                }
            }
        }
    }

    #[test]
    fn local_application_matches_matrix() {
        let f = gf(3);
        let x = LocalOperator::pauli_x(&f, el(&f, 1));
        let mut s = StateVector::basis(f.clone(), &vec_of(&f, &[0, 2, 1]), &lim()).unwrap();
        s.apply(&x, 1);
        assert!((s.amplitude(&vec_of(&f, &[0, 0, 1])) - c(1.0, 0.0)).norm() < STATE_TOL);
        assert_eq!(s.vector_of(s.index_of(&vec_of(&f, &[2, 1, 0]))), vec_of(&f, &[2, 1, 0]));
        assert_eq!(s.index_of(&vec_of(&f, &[1, 0, 0])), 9);
    }

    #[test]
    fn equivalence_examples() {
        let f = gf(2);
        let even = LinearCode::from_values(f.clone(), &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]).unwrap();
        let rep = LinearCode::from_values(f.clone(), &[vec![1, 1, 1, 1]]).unwrap();
        let r = verify_cs_steane_equivalence(&even, &rep, &lim()).unwrap();
        assert!(r.holds && r.max_residual < STATE_TOL);
        assert_eq!(r.checked, 4);
        let r = verify_cs_steane_equivalence(&even, &even, &lim()).unwrap();
        assert!(r.holds);
        assert_eq!(r.checked, 1);
        assert_eq!(verify_cs_steane_equivalence(&rep, &even, &lim()).unwrap_err(), Error::NotNested);
    }

    #[test]
    fn equivalence_all_pairs_gf3_n2() {
        for (c1, c2) in enumerate_nested_pairs(&gf(3), 2, &lim()).unwrap() {
            assert!(verify_cs_steane_equivalence(&c1, &c2, &lim()).unwrap().holds);
        }
    }

    #[test]
    fn equivalence_all_pairs_gf4_n2() {
        for (c1, c2) in enumerate_nested_pairs(&gf(4), 2, &lim()).unwrap() {
            assert!(verify_cs_steane_equivalence(&c1, &c2, &lim()).unwrap().holds);
        }
    }

    #[test]
    fn distinctness_small() {
        let r = verify_pair_distinctness(&gf(2), 2, &lim()).unwrap();
        assert_eq!((r.holds, r.pairs), (true, 12));
        assert!(verify_pair_distinctness(&gf(2), 3, &lim()).unwrap().holds);
        assert!(verify_pair_distinctness(&gf(3), 2, &lim()).unwrap().holds);
        let f = gf(2);
        let full = LinearCode::full(f.clone(), 2);
        let a: Vec<_> = steane_basis(&full, &LinearCode::zero(f.clone(), 2), &lim()).unwrap().iter().map(StateVector::fingerprint).collect();
        let b: Vec<_> = steane_basis(&full, &LinearCode::zero(f, 2), &lim()).unwrap().iter().map(StateVector::fingerprint).collect();
        assert_eq!(a, b);
    }
}
