//! Linear codes over GF(q): canonical forms, duals, distances, coordinate
//! operations, and uniform sampling / exhaustive enumeration of subspaces.
//!
//! A [`LinearCode`] is stored as its reduced row echelon generator matrix,
//! which is unique per subspace, so code equality is equality of generators.

use std::fmt::Write as _;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::census::gaussian_binomial;
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::limits::{saturating_pow, Limits};

/// A vector of `F_q^n`.
pub type Vector = Vec<FieldElement>;

/// Hamming weight: number of nonzero coordinates.
pub fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// A sorted set of coordinate indices of a length-`n` ambient space.
///
/// Indices are zero-based: coordinate `i` of the mathematical `[n] = {1..n}`
/// is stored as `i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportSet {
    indices: Vec<usize>,
    n: usize,
}

impl SupportSet {
    pub fn new(indices: impl IntoIterator<Item = usize>, n: usize) -> Result<SupportSet> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(SupportSet { indices, n })
    }

    pub fn full(n: usize) -> SupportSet {
        SupportSet {
            indices: (0..n).collect(),
            n,
        }
    }

    /// The support `σ(v)` of a vector.
    pub fn of(v: &[FieldElement]) -> SupportSet {
        SupportSet {
            indices: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, _)| i)
                .collect(),
            n: v.len(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn ambient_len(&self) -> usize {
        self.n
    }

    pub fn complement(&self) -> SupportSet {
        let mut inside = vec![false; self.n];
        for &i in &self.indices {
            inside[i] = true;
        }
        SupportSet {
            indices: (0..self.n).filter(|&i| !inside[i]).collect(),
            n: self.n,
        }
    }

    /// Restriction of `v` to the coordinates in the set.
    pub fn project(&self, v: &[FieldElement]) -> Vector {
        self.indices.iter().map(|&i| v[i]).collect()
    }
}

/// Result of [`rref`]: the canonical matrix (zero rows last), its rank, and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Vec<Vector>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form with leading ones.
pub fn rref(field: &Field, m: &[Vector]) -> Result<Rref> {
    let cols = m.first().map_or(0, Vec::len);
    if let Some(row) = m.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "ragged matrix: rows of length {cols} and {}",
            row.len()
        )));
    }
    if let Some(&bad) = m.iter().flatten().find(|x| !field.contains(**x)) {
        return Err(Error::NotInField {
            value: bad.value(),
            order: field.order(),
        });
    }
    let mut rows = m.to_vec();
    let pivots = reduce(field, &mut rows, cols);
    let rank = pivots.len();
    rows.resize(m.len(), vec![FieldElement::ZERO; cols]);
    Ok(Rref {
        matrix: rows,
        rank,
        pivots,
    })
}

/// In-place RREF; zero rows are dropped. Returns pivot columns.
pub(crate) fn reduce(field: &Field, rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = field.neg(row[c]);
                axpy(field, row, factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// `y += a * x`
#[inline]
pub(crate) fn axpy(field: &Field, y: &mut [FieldElement], a: FieldElement, x: &[FieldElement]) {
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = field.add(*yi, field.mul(a, xi));
    }
}

pub(crate) fn scale(field: &Field, a: FieldElement, x: &[FieldElement]) -> Vector {
    x.iter().map(|&xi| field.mul(a, xi)).collect()
}

pub(crate) fn rank(field: &Field, rows: &[Vector], cols: usize) -> usize {
    let mut rows = rows.to_vec();
    reduce(field, &mut rows, cols).len()
}

/// Basis of `{x : <row, x> = 0 for every row}` read off the RREF.
pub(crate) fn nullspace(field: &Field, rows: &[Vector], cols: usize) -> Vec<Vector> {
    let mut rows = rows.to_vec();
    let pivots = reduce(field, &mut rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![FieldElement::ZERO; cols];
            x[free] = FieldElement::ONE;
            for (row, &p) in rows.iter().zip(&pivots) {
                x[p] = field.neg(row[free]);
            }
            x
        })
        .collect()
}

/// Calls `f` on every `w`-subset of `0..n` in lexicographic order until it returns `true`.
pub(crate) fn for_each_combination(n: usize, w: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if w > n {
        return false;
    }
    let mut combo: Vec<usize> = (0..w).collect();
    loop {
        if f(&combo) {
            return true;
        }
        let Some(i) = (0..w).rev().find(|&i| combo[i] < n - w + i) else {
            return false;
        };
        combo[i] += 1;
        for j in i + 1..w {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// A linear subspace of `F_q^n`, held as its RREF generator matrix.
#[derive(Clone)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    weights: OnceLock<Vec<u64>>,
    distance: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows && self.field == other.field
    }
}

impl Eq for LinearCode {}

impl Hash for LinearCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]_{} ", self.n, self.dimension(), self.field.order())?;
        f.debug_list()
            .entries(
                self.rows
                    .iter()
                    .map(|r| r.iter().map(|x| x.value()).collect::<Vec<_>>()),
            )
            .finish()
    }
}

impl LinearCode {
    /// The code spanned by `rows`; dependent rows are allowed and discarded.
    pub fn from_generator(field: Arc<Field>, n: usize, rows: Vec<Vector>) -> Result<LinearCode> {
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "generator row of length {} in a code of length {n}",
                row.len()
            )));
        }
        if let Some(&bad) = rows.iter().flatten().find(|x| !field.contains(**x)) {
            return Err(Error::NotInField {
                value: bad.value(),
                order: field.order(),
            });
        }
        Ok(Self::from_rows_unchecked(field, n, rows))
    }

    /// Convenience constructor from integer-encoded rows.
    pub fn from_values(field: Arc<Field>, rows: &[Vec<u32>]) -> Result<LinearCode> {
        let n = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.element(v)).collect::<Result<Vector>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_generator(field, n, rows)
    }

    pub(crate) fn from_rows_unchecked(field: Arc<Field>, n: usize, mut rows: Vec<Vector>) -> LinearCode {
        let pivots = reduce(&field, &mut rows, n);
        LinearCode {
            field,
            n,
            rows,
            pivots,
            weights: OnceLock::new(),
            distance: OnceLock::new(),
        }
    }

    pub fn zero(field: Arc<Field>, n: usize) -> LinearCode {
        Self::from_rows_unchecked(field, n, Vec::new())
    }

    pub fn full(field: Arc<Field>, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![FieldElement::ZERO; n];
                r[i] = FieldElement::ONE;
                r
            })
            .collect();
        Self::from_rows_unchecked(field, n, rows)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Dimension `k`.
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The canonical (RREF) generator matrix.
    pub fn generator(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `q^k`, saturating.
    pub fn size(&self) -> u128 {
        saturating_pow(self.field.order() as u64, self.dimension())
    }

    pub fn encode(&self, message: &[FieldElement]) -> Result<Vector> {
        if message.len() != self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "message of length {} for a code of dimension {}",
                message.len(),
                self.dimension()
            )));
        }
        let mut out = vec![FieldElement::ZERO; self.n];
        for (&m, row) in message.iter().zip(&self.rows) {
            axpy(&self.field, &mut out, m, row);
        }
        Ok(out)
    }

    /// Residue of `v` after clearing the pivot coordinates with generator rows.
    pub(crate) fn reduce_vector(&self, v: &[FieldElement]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let factor = self.field.neg(r[p]);
                axpy(&self.field, &mut r, factor, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        v.len() == self.n && self.reduce_vector(v).iter().all(|x| x.is_zero())
    }

    /// Whether `self ⊆ other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.rows.iter().all(|r| other.contains(r))
    }

    /// `C⊥ = {x : <c, x> = 0 for all c in C}`.
    pub fn dual(&self) -> LinearCode {
        let rows = nullspace(&self.field, &self.rows, self.n);
        Self::from_rows_unchecked(self.field.clone(), self.n, rows)
    }

    /// `C ⊆ C⊥`, tested as `G·Gᵀ = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows[i..]
                .iter()
                .all(|b| self.field.dot(a, b).is_zero())
        })
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && self.is_self_orthogonal()
    }

    /// Calls `f` on each of the `q^k` codewords (zero word first).
    pub fn for_each_codeword(&self, limits: &Limits, mut f: impl FnMut(&[FieldElement])) -> Result<()> {
        limits.check_enumeration("codeword enumeration", self.size())?;
        let field = &*self.field;
        let q = field.order() as usize;
        let k = self.dimension();
        // deltas[i * q + j] moves the coefficient of row i from element j to j+1 (mod q).
        let mut deltas = Vec::with_capacity(k * q);
        for row in &self.rows {
            for j in 0..q {
                let from = FieldElement::from_raw(j as u32);
                let to = FieldElement::from_raw(((j + 1) % q) as u32);
                deltas.push(scale(field, field.sub(to, from), row));
            }
        }
        let mut digits = vec![0usize; k];
        let mut word = vec![FieldElement::ZERO; self.n];
        f(&word);
        loop {
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                let d = digits[i];
                for (w, &x) in word.iter_mut().zip(&deltas[i * q + d]) {
                    *w = field.add(*w, x);
                }
                digits[i] = (d + 1) % q;
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
            f(&word);
        }
    }

    pub fn codewords(&self, limits: &Limits) -> Result<Vec<Vector>> {
        let mut out = Vec::new();
        self.for_each_codeword(limits, |c| out.push(c.to_vec()))?;
        Ok(out)
    }

    /// `A_0, ..., A_n`: number of codewords of each weight.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<&[u64]> {
        if let Some(w) = self.weights.get() {
            return Ok(w);
        }
        let dist = if self.field.order() == 2 && self.n <= 64 {
            limits.check_enumeration("codeword enumeration", self.size())?;
            self.binary_weight_distribution()
        } else {
            let mut dist = vec![0u64; self.n + 1];
            self.for_each_codeword(limits, |c| dist[weight(c)] += 1)?;
            dist
        };
        Ok(self.weights.get_or_init(|| dist))
    }

    // Gray-code walk over packed rows.
    fn binary_weight_distribution(&self) -> Vec<u64> {
        let packed: Vec<u64> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, x)| acc | ((x.value() as u64) << i))
            })
            .collect();
        let mut dist = vec![0u64; self.n + 1];
        let mut word = 0u64;
        dist[0] = 1;
        for i in 1u64..(1u64 << packed.len()) {
            word ^= packed[i.trailing_zeros() as usize];
            dist[word.count_ones() as usize] += 1;
        }
        dist
    }

    /// Minimum distance with the default [`Limits`].
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with(&Limits::default())
    }

    /// Minimum nonzero weight; `n + 1` for the zero code.
    ///
    /// Two exact routes are available: enumerate the `q^k` codewords, or find
    /// the smallest linearly dependent set of columns of a parity-check
    /// matrix. The cheaper one (by worst-case step count) is used.
    pub fn min_distance_with(&self, limits: &Limits) -> Result<usize> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let d = if self.is_zero() {
            self.n + 1
        } else {
            let by_words = self.size();
            if by_words <= self.column_search_cost() && by_words <= limits.enumeration as u128 {
                self.min_distance_by_enumeration(limits)?
            } else {
                self.min_distance_by_columns(limits)?
            }
        };
        Ok(*self.distance.get_or_init(|| d))
    }

    pub(crate) fn min_distance_by_enumeration(&self, limits: &Limits) -> Result<usize> {
        let dist = self.weight_distribution(limits)?;
        Ok(dist
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map_or(self.n + 1, |(w, _)| w))
    }

    fn column_search_cost(&self) -> u128 {
        let r = self.n - self.dimension();
        (1..=(r + 1).min(self.n)).map(|w| binomial(self.n, w)).fold(0u128, u128::saturating_add)
    }

    /// Smallest `w` such that some `w` columns of a parity-check matrix are dependent.
    ///
    /// Subsets are charged against the cap one size at a time, so a small
    /// distance is found even when the full search would be far too large.
    pub(crate) fn min_distance_by_columns(&self, limits: &Limits) -> Result<usize> {
        if self.is_zero() {
            return Ok(self.n + 1);
        }
        let h = self.dual();
        let r = h.dimension();
        let columns: Vec<Vector> = (0..self.n)
            .map(|j| h.rows.iter().map(|row| row[j]).collect())
            .collect();
        let mut spent: u128 = 0;
        for w in 1..=(r + 1).min(self.n) {
            spent = spent.saturating_add(binomial(self.n, w));
            limits.check_enumeration("minimum distance by column search", spent)?;
            let dependent = for_each_combination(self.n, w, |combo| {
                let chosen: Vec<Vector> = combo.iter().map(|&j| columns[j].clone()).collect();
                rank(&self.field, &chosen, r) < w
            });
            if dependent {
                return Ok(w);
            }
        }
        unreachable!("a nonzero code has a dependent set of at most n-k+1 parity-check columns")
    }

    /// `π_S(C)`: the projection onto the coordinates in `s`.
    pub fn puncture(&self, s: &SupportSet) -> Result<LinearCode> {
        self.check_support(s)?;
        let rows = self.rows.iter().map(|r| s.project(r)).collect();
        Ok(Self::from_rows_unchecked(self.field.clone(), s.len(), rows))
    }

    /// `π_S(C ∩ F_q^n(S))`: codewords supported inside `s`, projected to `s`.
    pub fn shorten(&self, s: &SupportSet) -> Result<LinearCode> {
        self.check_support(s)?;
        let outside = s.complement();
        // Messages m with (m·G) vanishing outside S: the left kernel of G restricted to [n]-S.
        let constraints: Vec<Vector> = outside
            .indices()
            .iter()
            .map(|&j| self.rows.iter().map(|row| row[j]).collect())
            .collect();
        let kernel = nullspace(&self.field, &constraints, self.dimension());
        let rows = kernel
            .iter()
            .map(|m| s.project(&self.encode(m).expect("kernel vectors have length k")))
            .collect();
        Ok(Self::from_rows_unchecked(self.field.clone(), s.len(), rows))
    }

    fn check_support(&self, s: &SupportSet) -> Result<()> {
        if s.ambient_len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "support set over length {} applied to a code of length {}",
                s.ambient_len(),
                self.n
            )));
        }
        Ok(())
    }

    /// Text form: field header, `n k`, then `k` rows of integer-encoded elements.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n{} {}\n", self.field.header(), self.n, self.dimension());
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| x.value().to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    /// Parses [`LinearCode::to_text`] output. Blank lines and `#` comments are skipped;
    /// rows need not be canonical but must be linearly independent.
    pub fn from_text(text: &str) -> Result<LinearCode> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let field = Arc::new(Field::parse_header(header)?);
        let dims = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n k` line".into()))?;
        let dims: Vec<usize> = dims
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
            .collect::<Result<_>>()?;
        let [n, k] = dims[..] else {
            return Err(Error::Parse("expected `n k`".into()));
        };
        let mut rows = Vec::with_capacity(k);
        for (i, line) in lines.enumerate() {
            if i >= k {
                return Err(Error::Parse(format!("more than k = {k} generator rows")));
            }
            let row: Vector = line
                .split_whitespace()
                .map(|t| {
                    let v: u32 = t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}")))?;
                    field
                        .element(v)
                        .map_err(|_| Error::Parse(format!("{v} is not an element of GF({})", field.order())))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            rows.push(row);
        }
        if rows.len() != k {
            return Err(Error::Parse(format!("expected {k} generator rows, found {}", rows.len())));
        }
        let code = Self::from_rows_unchecked(field, n, rows);
        if code.dimension() != k {
            return Err(Error::Parse(format!(
                "generator rows are dependent: rank {} < {k}",
                code.dimension()
            )));
        }
        Ok(code)
    }
}

fn random_matrix<R: Rng + ?Sized>(rng: &mut R, q: u32, rows: usize, cols: usize) -> Vec<Vector> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| FieldElement::from_raw(rng.random_range(0..q)))
                .collect()
        })
        .collect()
}

/// Uniformly random `k`-dimensional subspace of `F_q^n`.
///
/// Every `k`-dimensional subspace has exactly `|GL_k(F_q)|` full-rank
/// generator matrices, so rejection-sampling a full-rank `k × n` matrix is uniform.
pub fn sample_code<R: Rng + ?Sized>(field: &Arc<Field>, n: usize, k: usize, rng: &mut R) -> Result<LinearCode> {
    if k > n {
        return Err(Error::InvalidParameter(format!("dimension {k} exceeds length {n}")));
    }
    loop {
        let m = random_matrix(rng, field.order(), k, n);
        let code = LinearCode::from_rows_unchecked(field.clone(), n, m);
        if code.dimension() == k {
            return Ok(code);
        }
    }
}

/// Uniformly random `k2`-dimensional subcode of `code`.
pub fn sample_subcode<R: Rng + ?Sized>(code: &LinearCode, k2: usize, rng: &mut R) -> Result<LinearCode> {
    let k = code.dimension();
    if k2 > k {
        return Err(Error::InvalidParameter(format!(
            "subcode dimension {k2} exceeds code dimension {k}"
        )));
    }
    let field = code.field();
    loop {
        let coords = random_matrix(rng, field.order(), k2, k);
        if rank(field, &coords, k) < k2 {
            continue;
        }
        let rows = coords
            .iter()
            .map(|m| code.encode(m).expect("message length equals k"))
            .collect();
        return Ok(LinearCode::from_rows_unchecked(field.clone(), code.len(), rows));
    }
}

/// Every `k`-dimensional subspace of `ambient`, each exactly once.
///
/// Subspaces are produced by walking RREF coefficient matrices (relative to
/// the ambient generator) by pivot pattern in lexicographic order, then by
/// free entries in base-`q` counting order.
pub fn enumerate_subspaces(ambient: &LinearCode, k: usize, limits: &Limits) -> Result<Subspaces> {
    let dim = ambient.dimension();
    let q = ambient.field().order() as u64;
    let count = gaussian_binomial(dim as u64, k as u64, q);
    let count = u128::try_from(count).unwrap_or(u128::MAX);
    limits.check_enumeration("subspace enumeration", count)?;
    let mut it = Subspaces {
        ambient: ambient.clone(),
        k,
        pivots: (0..k).collect(),
        free: Vec::new(),
        digits: Vec::new(),
        done: k > dim,
    };
    it.reset_free();
    Ok(it)
}

/// Iterator returned by [`enumerate_subspaces`].
pub struct Subspaces {
    ambient: LinearCode,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    done: bool,
}

impl Subspaces {
    fn reset_free(&mut self) {
        let dim = self.ambient.dimension();
        self.free.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..dim {
                if !self.pivots.contains(&c) {
                    self.free.push((i, c));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn advance(&mut self) {
        let q = self.ambient.field().order();
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < q {
                return;
            }
            *d = 0;
        }
        let dim = self.ambient.dimension();
        let (k, pivots) = (self.k, &mut self.pivots);
        let Some(i) = (0..k).rev().find(|&i| pivots[i] < dim - k + i) else {
            self.done = true;
            return;
        };
        pivots[i] += 1;
        for j in i + 1..k {
            pivots[j] = pivots[j - 1] + 1;
        }
        self.reset_free();
    }
}

impl Iterator for Subspaces {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        if self.done {
            return None;
        }
        let dim = self.ambient.dimension();
        let mut coeffs = vec![vec![FieldElement::ZERO; dim]; self.k];
        for (i, &p) in self.pivots.iter().enumerate() {
            coeffs[i][p] = FieldElement::ONE;
        }
        for (&(i, c), &d) in self.free.iter().zip(&self.digits) {
            coeffs[i][c] = FieldElement::from_raw(d);
        }
        let rows = coeffs
            .iter()
            .map(|m| self.ambient.encode(m).expect("coefficient length equals dimension"))
            .collect();
        let code = LinearCode::from_rows_unchecked(self.ambient.field().clone(), self.ambient.len(), rows);
        self.advance();
        Some(code)
    }
}
