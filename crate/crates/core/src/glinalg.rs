//! Dense matrices over the Laurent ring: graded tensor products, trace
//! variants, chain-site embeddings, and modular/numeric spectral tools.

use crate::ring::{LaurentPoly, ParamPoint, RingError, SpecValue, NVARS};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use num::Integer;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum GlinalgError {
    #[error("graded operand is not homogeneous of its declared degree")]
    InhomogeneousOperand,
    #[error("site index out of range")]
    SiteOutOfRange,
    #[error("matrix is not square")]
    NonSquare,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("prime unusable at this point (zero denominator or non-invertible)")]
    BadPrime,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Dense row-major matrix with Laurent-polynomial entries.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        PolyMatrix {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    /// Elementary matrix e_{ij} (1-based) of size n.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n, n);
        m[(i - 1, j - 1)] = LaurentPoly::one();
        m
    }

    /// Diagonal matrix from entries.
    pub fn diagonal(entries: Vec<LaurentPoly>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Diagonal matrix with integer entries.
    pub fn diag_int(entries: &[i64]) -> Self {
        Self::diagonal(entries.iter().map(|&x| LaurentPoly::from_int(x)).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn nonzero_entries(&self) -> usize {
        self.data.iter().filter(|p| !p.is_zero()).count()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| -p).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> LaurentPoly {
        assert!(self.is_square());
        let mut t = LaurentPoly::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Matrix power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Inverse of a diagonal matrix whose entries are single monomials.
    pub fn diag_monomial_inverse(&self) -> Self {
        assert!(self.is_square());
        let mut out = Self::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i == j {
                    let p = &self[(i, i)];
                    assert_eq!(p.num_terms(), 1, "diagonal entry must be a monomial");
                    let (e, c) = p.terms().next().unwrap();
                    let mut ei = *e;
                    for v in ei.iter_mut() {
                        *v = -*v;
                    }
                    out[(i, i)] = LaurentPoly::monomial(ei, c.recip());
                } else {
                    assert!(self[(i, j)].is_zero(), "matrix is not diagonal");
                }
            }
        }
        out
    }

    /// Standard (ungraded) Kronecker product.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Specialize every entry exactly.
    pub fn eval_exact(&self, vals: &[BigRational; NVARS]) -> Result<Vec<BigRational>, RingError> {
        self.data.iter().map(|p| p.eval_exact(vals)).collect()
    }

    /// Specialize every entry to f64.
    pub fn eval_float(&self, vals: &[f64; NVARS]) -> Result<Vec<f64>, RingError> {
        let at = ParamPoint::Float(*vals);
        self.data
            .iter()
            .map(|p| match p.specialize(&at)? {
                SpecValue::Float(v) => Ok(v),
                SpecValue::Exact(_) => unreachable!(),
            })
            .collect()
    }

    /// Matrix Market coordinate export of the matrix specialized at an exact
    /// point (values written as f64).
    pub fn matrix_market(&self, at: &ParamPoint) -> Result<String, RingError> {
        let vals: Vec<f64> = match at {
            ParamPoint::Exact(v) => {
                let ex = self.eval_exact(v)?;
                ex.iter().map(crate::ring::rational_to_f64).collect()
            }
            ParamPoint::Float(v) => self.eval_float(v)?,
        };
        let nnz = vals.iter().filter(|v| **v != 0.0).count();
        let mut out = String::from("%%MatrixMarket matrix coordinate real general\n");
        out.push_str(&format!("{} {} {}\n", self.rows, self.cols, nnz));
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = vals[i * self.cols + j];
                if v != 0.0 {
                    out.push_str(&format!("{} {} {:.17e}\n", i + 1, j + 1, v));
                }
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for PolyMatrix {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        let entries: Vec<(usize, usize, &LaurentPoly)> = (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !self[(i, j)].is_zero())
            .map(|(i, j)| (i + 1, j + 1, &self[(i, j)]))
            .collect();
        let mut st = serializer.serialize_struct("PolyMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<(usize, usize, LaurentPoly)>,
        }
        let r = Repr::deserialize(deserializer)?;
        if r.rows == 0 || r.cols == 0 {
            return Err(D::Error::custom("empty dimensions"));
        }
        let mut m = PolyMatrix::zero(r.rows, r.cols);
        for (i, j, p) in r.entries {
            if i == 0 || j == 0 || i > r.rows || j > r.cols {
                return Err(D::Error::custom("entry index out of range"));
            }
            m[(i - 1, j - 1)] = p;
        }
        Ok(m)
    }
}

/// Z2 parity per basis state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityVector(pub Vec<u8>);

impl ParityVector {
    /// Fundamental 3-state parities (1, 0, 1).
    pub fn fundamental() -> Self {
        ParityVector(vec![1, 0, 1])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat_pairs(&self, other: &ParityVector) -> ParityVector {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for &a in &self.0 {
            for &b in &other.0 {
                out.push((a + b) % 2);
            }
        }
        ParityVector(out)
    }

    /// Σ = diag((−1)^{p(i)}).
    pub fn sigma(&self) -> PolyMatrix {
        PolyMatrix::diag_int(
            &self
                .0
                .iter()
                .map(|&p| if p % 2 == 1 { -1 } else { 1 })
                .collect::<Vec<_>>(),
        )
    }
}

/// Matrix with a Z2 degree on a parity-graded space.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedOp {
    pub matrix: PolyMatrix,
    pub degree: u8,
    pub space_parities: ParityVector,
}

impl GradedOp {
    pub fn new(matrix: PolyMatrix, degree: u8, space_parities: ParityVector) -> Self {
        GradedOp {
            matrix,
            degree: degree % 2,
            space_parities,
        }
    }

    /// Whether nonzero entries (i,j) satisfy p(i)+p(j) ≡ degree (mod 2).
    pub fn is_homogeneous(&self) -> bool {
        let p = &self.space_parities.0;
        for i in 0..self.matrix.rows {
            for j in 0..self.matrix.cols {
                if !self.matrix[(i, j)].is_zero() && (p[i] + p[j]) % 2 != self.degree {
                    return false;
                }
            }
        }
        true
    }
}

/// Graded tensor product: ρ(x ⊗̲ y) = (π(x)·Σ^{deg y}) ⊗ π(y), with Σ the
/// diagonal sign matrix of the first factor's parities.
pub fn graded_kron(a: &GradedOp, b: &GradedOp) -> Result<GradedOp, GlinalgError> {
    if !a.is_homogeneous() || !b.is_homogeneous() {
        return Err(GlinalgError::InhomogeneousOperand);
    }
    let left = if b.degree % 2 == 1 {
        a.matrix.mul(&a.space_parities.sigma())
    } else {
        a.matrix.clone()
    };
    Ok(GradedOp::new(
        left.kron(&b.matrix),
        (a.degree + b.degree) % 2,
        a.space_parities.concat_pairs(&b.space_parities),
    ))
}

/// Embed a two-site (9×9) operator at sites (j, j+1) of an L-site chain.
pub fn site_embed(op: &PolyMatrix, j: usize, l: usize) -> Result<PolyMatrix, GlinalgError> {
    assert_eq!((op.rows, op.cols), (9, 9));
    if j < 1 || j + 1 > l {
        return Err(GlinalgError::SiteOutOfRange);
    }
    let left = 3usize.pow((j - 1) as u32);
    let right = 3usize.pow((l - 1 - j) as u32);
    Ok(PolyMatrix::identity(left)
        .kron(op)
        .kron(&PolyMatrix::identity(right)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpacePair {
    P12,
    P13,
    P23,
}

/// Embed a 9×9 operator into 27×27 acting on the named pair of factors.
pub fn three_space_embed(m: &PolyMatrix, pair: SpacePair) -> PolyMatrix {
    assert_eq!((m.rows, m.cols), (9, 9));
    let i3 = PolyMatrix::identity(3);
    match pair {
        SpacePair::P12 => m.kron(&i3),
        SpacePair::P23 => i3.kron(m),
        SpacePair::P13 => {
            let mut out = PolyMatrix::zero(27, 27);
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        for l in 0..3 {
                            let v = &m[(3 * i + k, 3 * j + l)];
                            if !v.is_zero() {
                                for mid in 0..3 {
                                    out[(9 * i + 3 * mid + k, 9 * j + 3 * mid + l)] = v.clone();
                                }
                            }
                        }
                    }
                }
            }
            out
        }
    }
}

/// Flip permutation matrix P on the last two of three factors (27×27).
pub fn flip_23() -> PolyMatrix {
    let mut p = PolyMatrix::zero(27, 27);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                p[(9 * a + 3 * b + c, 9 * a + 3 * c + b)] = LaurentPoly::one();
            }
        }
    }
    p
}

#[derive(Clone, Debug)]
pub enum TraceKind<'a> {
    Plain,
    Super(&'a ParityVector),
    Quantum(&'a PolyMatrix),
}

/// Plain, super-, or quantum (D⁻¹-weighted) trace.
pub fn trace_variants(m: &PolyMatrix, kind: TraceKind) -> Result<LaurentPoly, GlinalgError> {
    if !m.is_square() {
        return Err(GlinalgError::NonSquare);
    }
    let mut out = LaurentPoly::zero();
    match kind {
        TraceKind::Plain => {
            for i in 0..m.rows {
                out += &m[(i, i)];
            }
        }
        TraceKind::Super(par) => {
            if par.len() != m.rows {
                return Err(GlinalgError::DimensionMismatch);
            }
            for i in 0..m.rows {
                if par.0[i] % 2 == 1 {
                    out -= &m[(i, i)];
                } else {
                    out += &m[(i, i)];
                }
            }
        }
        TraceKind::Quantum(d) => {
            if d.rows != m.rows || !d.is_square() {
                return Err(GlinalgError::DimensionMismatch);
            }
            let dinv = d.diag_monomial_inverse();
            for i in 0..m.rows {
                let t = &dinv[(i, i)] * &m[(i, i)];
                out += &t;
            }
        }
    }
    Ok(out)
}

/// Trace out a 3-dimensional auxiliary first factor with D⁻¹ weight:
/// out[a,b] = Σ_i (D⁻¹)_{ii} m[(i,a),(i,b)].
pub fn partial_quantum_trace(m: &PolyMatrix, d: &PolyMatrix) -> Result<PolyMatrix, GlinalgError> {
    if !m.is_square() || m.rows % 3 != 0 || d.rows != 3 || d.cols != 3 {
        return Err(GlinalgError::DimensionMismatch);
    }
    let n = m.rows / 3;
    let dinv = d.diag_monomial_inverse();
    let mut out = PolyMatrix::zero(n, n);
    for i in 0..3 {
        let w = &dinv[(i, i)];
        for a in 0..n {
            for b in 0..n {
                let v = &m[(i * n + a, i * n + b)];
                if !v.is_zero() {
                    let t = w * v;
                    out[(a, b)] += &t;
                }
            }
        }
    }
    Ok(out)
}

pub fn commutator(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, GlinalgError> {
    if !a.is_square() || a.rows != b.rows || !b.is_square() {
        return Err(GlinalgError::DimensionMismatch);
    }
    Ok(a.mul(b).sub(&b.mul(a)))
}

pub fn anticommutator(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, GlinalgError> {
    if !a.is_square() || a.rows != b.rows || !b.is_square() {
        return Err(GlinalgError::DimensionMismatch);
    }
    Ok(a.mul(b).add(&b.mul(a)))
}

// ---------------------------------------------------------------------------
// Modular spectral tools
// ---------------------------------------------------------------------------

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    Some(powmod(a, p - 2, p))
}

/// Deterministic Miller–Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

fn rational_mod(v: &BigRational, p: u64) -> Result<u64, GlinalgError> {
    let den = bigint_mod(v.denom(), p);
    let dinv = invmod(den, p).ok_or(GlinalgError::BadPrime)?;
    Ok(mulmod(bigint_mod(v.numer(), p), dinv, p))
}

/// Reduce an exact rational mod p (fails with BadPrime when the denominator
/// vanishes mod p).
pub fn rational_mod_p(v: &BigRational, p: u64) -> Result<u64, GlinalgError> {
    rational_mod(v, p)
}

/// (a + b) mod p for reduced residues.
pub fn addmod_p(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

/// Characteristic polynomial of the matrix specialized at an exact point,
/// over the prime field: Hessenberg reduction then the Hessenberg recurrence.
/// Returns monic coefficients in ascending degree order (length n+1).
pub fn modular_charpoly(
    m: &PolyMatrix,
    at: &ParamPoint,
    prime: u64,
) -> Result<Vec<u64>, GlinalgError> {
    if !m.is_square() {
        return Err(GlinalgError::NonSquare);
    }
    let vals = match at {
        ParamPoint::Exact(v) => v,
        ParamPoint::Float(_) => panic!("modular_charpoly requires an exact point"),
    };
    let n = m.rows;
    let mut a = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = &m[(i, j)];
            if !p.is_zero() {
                a[i * n + j] = rational_mod(&p.eval_exact(vals)?, prime)?;
            }
        }
    }
    Ok(charpoly_mod(&mut a, n, prime))
}

/// Charpoly of a dense n×n matrix mod p (consumes the buffer).
pub fn charpoly_mod(a: &mut [u64], n: usize, p: u64) -> Vec<u64> {
    // Hessenberg reduction by similarity transformations.
    for k in 0..n.saturating_sub(2) {
        let mut pivot = None;
        for r in k + 1..n {
            if a[r * n + k] != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(r) = pivot else { continue };
        if r != k + 1 {
            for j in 0..n {
                a.swap(r * n + j, (k + 1) * n + j);
            }
            for i in 0..n {
                a.swap(i * n + r, i * n + k + 1);
            }
        }
        let inv = invmod(a[(k + 1) * n + k], p).expect("pivot nonzero");
        for i in k + 2..n {
            let f = mulmod(a[i * n + k], inv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f * row_{k+1}
            for j in 0..n {
                let sub = mulmod(f, a[(k + 1) * n + j], p);
                a[i * n + j] = (a[i * n + j] + p - sub) % p;
            }
            // col_{k+1} += f * col_i
            for t in 0..n {
                let addv = mulmod(f, a[t * n + i], p);
                a[t * n + k + 1] = (a[t * n + k + 1] + addv) % p;
            }
        }
    }
    // Hessenberg charpoly recurrence; polys stored ascending.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1u64]);
    for m_ in 1..=n {
        let mut pm = vec![0u64; m_ + 1];
        // (x − a[m-1][m-1]) * p_{m-1}
        let prev = &polys[m_ - 1];
        for (i, &c) in prev.iter().enumerate() {
            pm[i + 1] = (pm[i + 1] + c) % p;
            let sub = mulmod(a[(m_ - 1) * n + (m_ - 1)], c, p);
            pm[i] = (pm[i] + p - sub) % p;
        }
        // − Σ_{i=1}^{m-1} a[i-1][m-1] (Π_{j=i}^{m-1} a[j][j-1]) p_{i-1}
        let mut prod = 1u64;
        for i in (1..m_).rev() {
            prod = mulmod(prod, a[i * n + (i - 1)], p);
            if prod == 0 {
                break;
            }
            let coef = mulmod(a[(i - 1) * n + (m_ - 1)], prod, p);
            if coef == 0 {
                continue;
            }
            for (t, &c) in polys[i - 1].iter().enumerate() {
                let sub = mulmod(coef, c, p);
                pm[t] = (pm[t] + p - sub) % p;
            }
        }
        polys.push(pm);
    }
    polys.pop().unwrap()
}

/// Power-sum traces Tr(M^k), k = 1..kmax, at a parameter point. Exact mode
/// clears denominators and works in BigInt; Float mode uses f64.
pub fn newton_traces(
    m: &PolyMatrix,
    at: &ParamPoint,
    kmax: usize,
) -> Result<Vec<SpecValue>, GlinalgError> {
    if !m.is_square() {
        return Err(GlinalgError::NonSquare);
    }
    let n = m.rows;
    match at {
        ParamPoint::Exact(vals) => {
            let entries = m.eval_exact(vals)?;
            let mut den = BigInt::one();
            for e in &entries {
                den = den.lcm(e.denom());
            }
            let scaled: Vec<BigInt> = entries
                .iter()
                .map(|e| e.numer() * (&den / e.denom()))
                .collect();
            let mut cur = scaled.clone();
            let mut dpow = den.clone();
            let mut out = Vec::with_capacity(kmax);
            for k in 0..kmax {
                let mut tr = BigInt::zero();
                for i in 0..n {
                    tr += &cur[i * n + i];
                }
                out.push(SpecValue::Exact(BigRational::new(tr, dpow.clone())));
                if k + 1 < kmax {
                    cur = bigint_matmul(&cur, &scaled, n);
                    dpow *= &den;
                }
            }
            Ok(out)
        }
        ParamPoint::Float(vals) => {
            let base = m.eval_float(vals)?;
            let mut cur = base.clone();
            let mut out = Vec::with_capacity(kmax);
            for k in 0..kmax {
                let mut tr = 0.0;
                for i in 0..n {
                    tr += cur[i * n + i];
                }
                out.push(SpecValue::Float(tr));
                if k + 1 < kmax {
                    cur = f64_matmul(&cur, &base, n);
                }
            }
            Ok(out)
        }
    }
}

fn bigint_matmul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let bkj = &b[k * n + j];
                if !bkj.is_zero() {
                    out[i * n + j] += aik * bkj;
                }
            }
        }
    }
    out
}

fn f64_matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// Nullspace basis of the rational matrix `rows` (each of length ncols).
pub fn rational_nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut mat: Vec<Vec<BigRational>> = rows.iter().filter(|r| r.iter().any(|v| !v.is_zero())).cloned().collect();
    let nrows = mat.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let mut piv = None;
        for i in r..nrows {
            if !mat[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(i) = piv else { continue };
        mat.swap(r, i);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..ncols {
                    let sub = &f * &mat[r][j];
                    mat[i][j] -= sub;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().cloned().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -mat[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a rational matrix.
pub fn rational_rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    let null_dim = rational_nullspace(rows, ncols).len();
    ncols - null_dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Q;

    #[test]
    fn kron_basics() {
        let i3 = PolyMatrix::identity(3);
        assert_eq!(i3.kron(&i3), PolyMatrix::identity(9));
        let e12 = PolyMatrix::elementary(3, 1, 2);
        let e21 = PolyMatrix::elementary(3, 2, 1);
        let k = e12.kron(&e21);
        // row (1,2) = 2, col (2,1) = 4 in 1-based pair indexing
        assert_eq!(k.nonzero_entries(), 1);
        assert!(k[(1, 3)].is_one());
        let a = PolyMatrix::elementary(3, 2, 3).kron(&i3);
        let b = i3.kron(&PolyMatrix::elementary(3, 1, 2));
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn graded_kron_sign() {
        // (π(E⁺₁), deg 1) ⊗̲ (π(E⁺₂), deg 1): the Σ on the left factor flips
        // the sign of column 1, so e21·Σ = −e21.
        let par = ParityVector::fundamental();
        let e1p = GradedOp::new(PolyMatrix::elementary(3, 2, 1), 1, par.clone());
        let e2p = GradedOp::new(PolyMatrix::elementary(3, 3, 2), 1, par.clone());
        let g = graded_kron(&e1p, &e2p).unwrap();
        assert_eq!(
            g.matrix,
            PolyMatrix::elementary(3, 2, 1)
                .kron(&PolyMatrix::elementary(3, 3, 2))
                .neg()
        );
        assert_eq!(g.degree, 0);
        // 1 ⊗̲ y picks up Σ on the left when y is odd; x ⊗̲ 1 never does
        let idg = GradedOp::new(PolyMatrix::identity(3), 0, par.clone());
        assert_eq!(
            graded_kron(&idg, &e1p).unwrap().matrix,
            par.sigma().kron(&e1p.matrix)
        );
        assert_eq!(
            graded_kron(&e1p, &idg).unwrap().matrix,
            e1p.matrix.kron(&PolyMatrix::identity(3))
        );
    }

    #[test]
    fn graded_kron_rejects_inhomogeneous() {
        let par = ParityVector::fundamental();
        let bad = GradedOp::new(PolyMatrix::identity(3), 1, par.clone());
        let ok = GradedOp::new(PolyMatrix::identity(3), 0, par);
        assert_eq!(
            graded_kron(&bad, &ok).unwrap_err(),
            GlinalgError::InhomogeneousOperand
        );
    }

    #[test]
    fn site_embed_basics() {
        let i9 = PolyMatrix::identity(9);
        assert_eq!(site_embed(&i9, 1, 3).unwrap(), PolyMatrix::identity(27));
        let op = PolyMatrix::elementary(9, 2, 4);
        assert_eq!(site_embed(&op, 1, 2).unwrap(), op);
        assert_eq!(site_embed(&op, 3, 3), Err(GlinalgError::SiteOutOfRange));
    }

    #[test]
    fn three_space_embed_consistency() {
        let m = PolyMatrix::from_fn(9, 9, |i, j| {
            LaurentPoly::term(((i * 9 + j) % 5) as i64 - 2, [0; 5])
        });
        let p23 = flip_23();
        let via_perm = p23.mul(&three_space_embed(&m, SpacePair::P12)).mul(&p23);
        assert_eq!(via_perm, three_space_embed(&m, SpacePair::P13));
        assert_eq!(
            three_space_embed(&PolyMatrix::identity(9), SpacePair::P13),
            PolyMatrix::identity(27)
        );
    }

    #[test]
    fn trace_kinds() {
        let i9 = PolyMatrix::identity(9);
        assert_eq!(
            trace_variants(&i9, TraceKind::Plain).unwrap(),
            LaurentPoly::from_int(9)
        );
        let i3 = PolyMatrix::identity(3);
        let par = ParityVector::fundamental();
        assert_eq!(
            trace_variants(&i3, TraceKind::Super(&par)).unwrap(),
            LaurentPoly::from_int(-1)
        );
        let d = PolyMatrix::diag_int(&[-1, 1, -1]);
        assert_eq!(
            trace_variants(&i3, TraceKind::Quantum(&d)).unwrap(),
            LaurentPoly::from_int(-1)
        );
    }

    #[test]
    fn partial_trace_examples() {
        let d = PolyMatrix::diag_int(&[-1, 1, -1]);
        let m = PolyMatrix::from_fn(3, 3, |i, j| LaurentPoly::term((i + 2 * j) as i64, [0; 5]));
        let dm = d.kron(&m);
        assert_eq!(
            partial_quantum_trace(&dm, &d).unwrap(),
            m.scale(&LaurentPoly::from_int(3))
        );
        let im = PolyMatrix::identity(3).kron(&m);
        assert_eq!(partial_quantum_trace(&im, &d).unwrap(), m.neg());
    }

    #[test]
    fn commutators() {
        let a = PolyMatrix::elementary(3, 1, 2);
        let b = PolyMatrix::elementary(3, 2, 1);
        assert!(commutator(&a, &a).unwrap().is_zero());
        let acab = anticommutator(&a, &b).unwrap();
        let want = PolyMatrix::elementary(3, 1, 1).add(&PolyMatrix::elementary(3, 2, 2));
        assert_eq!(acab, want);
        let e11 = PolyMatrix::elementary(3, 1, 1);
        assert_eq!(commutator(&e11, &a).unwrap(), a);
    }

    #[test]
    fn modular_charpoly_small() {
        let p = 101u64;
        let at = ParamPoint::all_ones();
        let i2 = PolyMatrix::identity(2);
        // x² − 2x + 1
        assert_eq!(modular_charpoly(&i2, &at, p).unwrap(), vec![1, 99, 1]);
        let d = PolyMatrix::diag_int(&[2, 3]);
        // x² − 5x + 6
        assert_eq!(modular_charpoly(&d, &at, p).unwrap(), vec![6, 96, 1]);
    }

    #[test]
    fn charpoly_similarity_invariance() {
        let p = 2147483647u64;
        let at = ParamPoint::exact([(3, 2), (5, 7), (1, 1), (1, 1), (1, 1)]);
        let m = PolyMatrix::from_fn(4, 4, |i, j| {
            if (i + 2 * j) % 3 == 0 {
                LaurentPoly::var_pow(Q, (i as i32) - (j as i32))
            } else {
                LaurentPoly::from_int((i * j) as i64)
            }
        });
        // conjugate by an integer unimodular matrix
        let mut u = PolyMatrix::identity(4);
        u[(0, 1)] = LaurentPoly::from_int(3);
        u[(2, 3)] = LaurentPoly::from_int(-2);
        let mut uinv = PolyMatrix::identity(4);
        uinv[(0, 1)] = LaurentPoly::from_int(-3);
        uinv[(2, 3)] = LaurentPoly::from_int(2);
        let conj = u.mul(&m).mul(&uinv);
        assert_eq!(
            modular_charpoly(&m, &at, p).unwrap(),
            modular_charpoly(&conj, &at, p).unwrap()
        );
    }

    #[test]
    fn newton_trace_values() {
        let at = ParamPoint::all_ones();
        let i3 = PolyMatrix::identity(3);
        let tr = newton_traces(&i3, &at, 2).unwrap();
        assert_eq!(
            tr,
            vec![
                SpecValue::Exact(BigRational::from_integer(3.into())),
                SpecValue::Exact(BigRational::from_integer(3.into()))
            ]
        );
        let d = PolyMatrix::diag_int(&[1, 2]);
        let tr = newton_traces(&d, &at, 2).unwrap();
        assert_eq!(
            tr,
            vec![
                SpecValue::Exact(BigRational::from_integer(3.into())),
                SpecValue::Exact(BigRational::from_integer(5.into()))
            ]
        );
        // invariance under transpose
        let m = PolyMatrix::from_fn(3, 3, |i, j| LaurentPoly::from_int((i + 3 * j) as i64));
        assert_eq!(
            newton_traces(&m, &at, 4).unwrap(),
            newton_traces(&m.transpose(), &at, 4).unwrap()
        );
    }

    #[test]
    fn nullspace_small() {
        // x + y = 0 in 2 vars -> dim 1
        let one = BigRational::one();
        let rows = vec![vec![one.clone(), one.clone()]];
        let ns = rational_nullspace(&rows, 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], -ns[0][1].clone());
    }

    #[test]
    fn matrix_json_roundtrip() {
        let mut m = PolyMatrix::zero(2, 3);
        m[(0, 1)] = LaurentPoly::lambda();
        m[(1, 2)] = LaurentPoly::rational(2, 3);
        let js = serde_json::to_string(&m).unwrap();
        let back: PolyMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }
}
