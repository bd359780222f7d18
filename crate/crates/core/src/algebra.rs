//! The sl(1|2) presentations (classical, quantum fermionic, quantum
//! distinguished), the fundamental representation, both Hopf structures,
//! basis changes, and L-fold coproduct representations.

use crate::glinalg::{GradedOp, ParityVector, PolyMatrix};
use crate::report::{Case, Report};
use crate::ring::{LaurentPoly, ParamPoint, SpecValue, NVARS, Q, S};
use num::rational::BigRational;
use num::traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum AlgebraError {
    #[error("Cartan context matrix has a non-integer or off-diagonal entry")]
    NonIntegerCartan,
}

/// The eight generators. Under the `Distinguished` basis tag the same names
/// denote (h1, h2, e±1, e±2, e±3) through the generalized Weyl transformation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Gen {
    H1,
    H2,
    E1p,
    E2p,
    E3p,
    E1m,
    E2m,
    E3m,
}

pub const GENS: [Gen; 8] = [
    Gen::H1,
    Gen::H2,
    Gen::E1p,
    Gen::E2p,
    Gen::E3p,
    Gen::E1m,
    Gen::E2m,
    Gen::E3m,
];

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::H1 => "H1",
            Gen::H2 => "H2",
            Gen::E1p => "E1p",
            Gen::E2p => "E2p",
            Gen::E3p => "E3p",
            Gen::E1m => "E1m",
            Gen::E2m => "E2m",
            Gen::E3m => "E3m",
        }
    }

    /// Z2 degree in the given basis (fermionic: E±1, E±2 odd; distinguished:
    /// E±2, E±3 odd).
    pub fn degree(self, basis: Basis) -> u8 {
        match (basis, self) {
            (_, Gen::H1 | Gen::H2) => 0,
            (Basis::Fermionic, Gen::E1p | Gen::E1m | Gen::E2p | Gen::E2m) => 1,
            (Basis::Fermionic, Gen::E3p | Gen::E3m) => 0,
            (Basis::Distinguished, Gen::E1p | Gen::E1m) => 0,
            (Basis::Distinguished, _) => 1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Fermionic,
    Distinguished,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HopfVariant {
    ClassicalPrimitive,
    FermionicStandard,
    DistinguishedNatural,
}

impl HopfVariant {
    pub fn name(self) -> &'static str {
        match self {
            HopfVariant::ClassicalPrimitive => "classical",
            HopfVariant::FermionicStandard => "standard",
            HopfVariant::DistinguishedNatural => "natural-dist",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpBase {
    Q,
    S,
}

/// One factor of a leg word: a generator or a Cartan exponential
/// base^{a·H1 + b·H2 + c}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Atom {
    Gen(Gen),
    Cartan { base: ExpBase, a: i32, b: i32, c: i32 },
}

pub type Word = Vec<Atom>;

fn cq(a: i32, b: i32, c: i32) -> Atom {
    Atom::Cartan {
        base: ExpBase::Q,
        a,
        b,
        c,
    }
}

fn cs(a: i32, b: i32, c: i32) -> Atom {
    Atom::Cartan {
        base: ExpBase::S,
        a,
        b,
        c,
    }
}

fn g(x: Gen) -> Atom {
    Atom::Gen(x)
}

/// Fermionic Z2 degree of a word (the coproduct tables are written in the
/// fermionic generators).
pub fn word_degree(w: &Word) -> u8 {
    w.iter()
        .map(|a| match a {
            Atom::Gen(x) => x.degree(Basis::Fermionic),
            Atom::Cartan { .. } => 0,
        })
        .sum::<u8>()
        % 2
}

/// A formal sum of tensor terms: coefficient × ordered legs.
#[derive(Clone, Debug, Default)]
pub struct TensorWord {
    pub terms: Vec<(LaurentPoly, Vec<Word>)>,
}

impl TensorWord {
    fn two(terms: Vec<(LaurentPoly, Word, Word)>) -> Self {
        TensorWord {
            terms: terms
                .into_iter()
                .map(|(c, l1, l2)| (c, vec![l1, l2]))
                .collect(),
        }
    }
}

/// The fundamental representation (Eq. FundRepClass): H1 = e11 + e22,
/// H2 = −e22 − e33, E⁺1 = e21, E⁺2 = e32, E⁻1 = e12, E⁻2 = −e23,
/// E⁺3 = e31, E⁻3 = −e13; distinguished tags transported through the
/// quantum Weyl transformation.
pub fn fundamental_rep(gen: Gen, basis: Basis) -> GradedOp {
    let par = ParityVector::fundamental();
    let m = match basis {
        Basis::Fermionic => fund_matrix(gen),
        Basis::Distinguished => {
            let ctx = RepContext::fundamental();
            dist_rep(&ctx).gens[&gen].clone()
        }
    };
    GradedOp::new(m, gen.degree(basis), par)
}

fn fund_matrix(gen: Gen) -> PolyMatrix {
    let e = |i, j| PolyMatrix::elementary(3, i, j);
    match gen {
        Gen::H1 => PolyMatrix::diag_int(&[1, 1, 0]),
        Gen::H2 => PolyMatrix::diag_int(&[0, -1, -1]),
        Gen::E1p => e(2, 1),
        Gen::E2p => e(3, 2),
        Gen::E1m => e(1, 2),
        Gen::E2m => e(2, 3).neg(),
        Gen::E3p => e(3, 1),
        Gen::E3m => e(1, 3).neg(),
    }
}

/// Fundamental Cartan eigenvalues: H1 = diag(1,1,0), H2 = diag(0,−1,−1).
pub const H1_FUND: [i64; 3] = [1, 1, 0];
pub const H2_FUND: [i64; 3] = [0, -1, -1];

/// Diagonal matrix base^{a·h1ᵢ + b·h2ᵢ + c} from integer Cartan eigenvalues.
pub fn cartan_exp_diag(base: ExpBase, a: i32, b: i32, c: i32, h1: &[i64], h2: &[i64]) -> PolyMatrix {
    let var = match base {
        ExpBase::Q => Q,
        ExpBase::S => S,
    };
    PolyMatrix::diagonal(
        h1.iter()
            .zip(h2)
            .map(|(&x, &y)| {
                let e = a as i64 * x + b as i64 * y + c as i64;
                LaurentPoly::var_pow(var, i32::try_from(e).expect("exponent overflow"))
            })
            .collect(),
    )
}

/// Extract the integer diagonal of a Cartan context matrix.
pub fn integer_diagonal(m: &PolyMatrix) -> Result<Vec<i64>, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NonIntegerCartan);
    }
    let mut out = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        for j in 0..m.cols {
            if i != j && !m[(i, j)].is_zero() {
                return Err(AlgebraError::NonIntegerCartan);
            }
        }
        let c = m[(i, i)]
            .as_constant()
            .ok_or(AlgebraError::NonIntegerCartan)?;
        if !c.is_integer() {
            return Err(AlgebraError::NonIntegerCartan);
        }
        let v: BigRational = c;
        out.push(
            v.to_integer()
                .try_into()
                .map_err(|_| AlgebraError::NonIntegerCartan)?,
        );
    }
    Ok(out)
}

/// base^{a·H1 + b·H2 + c} with H1, H2 supplied as diagonal integer matrices.
pub fn cartan_exponential(
    form: (i32, i32, i32),
    base: ExpBase,
    h1: &PolyMatrix,
    h2: &PolyMatrix,
) -> Result<PolyMatrix, AlgebraError> {
    let d1 = integer_diagonal(h1)?;
    let d2 = integer_diagonal(h2)?;
    Ok(cartan_exp_diag(base, form.0, form.1, form.2, &d1, &d2))
}

/// Entrywise quantum integer [a·H1 + b·H2 + c]_q of diagonal Cartans.
pub fn qnum_of_cartan(
    form: (i32, i32, i32),
    h1: &PolyMatrix,
    h2: &PolyMatrix,
) -> Result<PolyMatrix, AlgebraError> {
    let d1 = integer_diagonal(h1)?;
    let d2 = integer_diagonal(h2)?;
    Ok(qnum_diag(form.0, form.1, form.2, &d1, &d2))
}

pub fn qnum_diag(a: i32, b: i32, c: i32, h1: &[i64], h2: &[i64]) -> PolyMatrix {
    PolyMatrix::diagonal(
        h1.iter()
            .zip(h2)
            .map(|(&x, &y)| LaurentPoly::qnum(a as i64 * x + b as i64 * y + c as i64))
            .collect(),
    )
}

/// Coproduct of a generator as a two-leg tensor word.
pub fn coproduct(gen: Gen, variant: HopfVariant) -> TensorWord {
    let lam = LaurentPoly::lambda();
    let one = LaurentPoly::one();
    let prim = |x: Gen| {
        TensorWord::two(vec![
            (LaurentPoly::one(), vec![g(x)], vec![]),
            (LaurentPoly::one(), vec![], vec![g(x)]),
        ])
    };
    match variant {
        HopfVariant::ClassicalPrimitive => prim(gen),
        HopfVariant::FermionicStandard => match gen {
            Gen::H1 | Gen::H2 => prim(gen),
            Gen::E1p => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E1p)], vec![]),
                (one, vec![cq(1, 0, 0), cs(-1, 0, 0)], vec![g(Gen::E1p)]),
            ]),
            Gen::E2p => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E2p)], vec![]),
                (one, vec![cq(0, 1, 0), cs(0, 1, 0)], vec![g(Gen::E2p)]),
            ]),
            Gen::E1m => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E1m)], vec![cq(-1, 0, 0), cs(-1, 0, 0)]),
                (one, vec![], vec![g(Gen::E1m)]),
            ]),
            Gen::E2m => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E2m)], vec![cq(0, -1, 0), cs(0, 1, 0)]),
                (one, vec![], vec![g(Gen::E2m)]),
            ]),
            Gen::E3p => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E3p)], vec![]),
                (
                    lam,
                    vec![cs(0, 1, 0), g(Gen::E1p), cq(0, 1, 0)],
                    vec![g(Gen::E2p)],
                ),
                (one, vec![cq(1, 1, 0), cs(-1, 1, 0)], vec![g(Gen::E3p)]),
            ]),
            Gen::E3m => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E3m)], vec![cq(-1, -1, 0), cs(-1, 1, 0)]),
                (
                    -lam,
                    vec![g(Gen::E2m)],
                    vec![cq(0, -1, 0), g(Gen::E1m), cs(0, 1, 0)],
                ),
                (one, vec![], vec![g(Gen::E3m)]),
            ]),
        },
        HopfVariant::DistinguishedNatural => match gen {
            Gen::H1 | Gen::H2 => prim(gen),
            Gen::E1p => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E1p)], vec![]),
                (one, vec![cq(-1, 0, 0), cs(-1, 0, 0)], vec![g(Gen::E1p)]),
                (
                    lam,
                    vec![cq(0, 1, 0), g(Gen::E3p), cs(0, -1, 0)],
                    vec![cq(0, -1, 0), g(Gen::E2m), cs(0, -1, 0)],
                ),
            ]),
            Gen::E2p => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E2p)], vec![cq(0, -2, 0)]),
                (one, vec![cq(0, -1, 0), cs(0, 1, 0)], vec![g(Gen::E2p)]),
            ]),
            Gen::E1m => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E1m)], vec![cq(1, 0, 0), cs(-1, 0, 0)]),
                (one, vec![], vec![g(Gen::E1m)]),
                (
                    -lam,
                    vec![cs(0, -1, 0), g(Gen::E2p), cq(0, 1, 0)],
                    vec![cs(0, -1, 0), g(Gen::E3m), cq(0, -1, 0)],
                ),
            ]),
            Gen::E2m => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E2m)], vec![cq(0, 1, 0), cs(0, 1, 0)]),
                (one, vec![cq(0, 2, 0)], vec![g(Gen::E2m)]),
            ]),
            Gen::E3p => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E3p)], vec![]),
                (one, vec![cq(-1, -1, 0), cs(-1, 1, 0)], vec![g(Gen::E3p)]),
            ]),
            Gen::E3m => TensorWord::two(vec![
                (one.clone(), vec![g(Gen::E3m)], vec![cq(1, 1, 0), cs(-1, 1, 0)]),
                (one, vec![], vec![g(Gen::E3m)]),
            ]),
        },
    }
}

/// A representation of the eight generators together with the integer Cartan
/// eigenvalues of its carrier space.
#[derive(Clone, Debug)]
pub struct RepContext {
    pub gens: BTreeMap<Gen, PolyMatrix>,
    pub h1: Vec<i64>,
    pub h2: Vec<i64>,
    pub parities: ParityVector,
}

impl RepContext {
    pub fn fundamental() -> Self {
        RepContext {
            gens: GENS.iter().map(|&x| (x, fund_matrix(x))).collect(),
            h1: H1_FUND.to_vec(),
            h2: H2_FUND.to_vec(),
            parities: ParityVector::fundamental(),
        }
    }

    pub fn dim(&self) -> usize {
        self.h1.len()
    }

    pub fn cartan(&self, base: ExpBase, a: i32, b: i32, c: i32) -> PolyMatrix {
        cartan_exp_diag(base, a, b, c, &self.h1, &self.h2)
    }

    pub fn qnum(&self, a: i32, b: i32, c: i32) -> PolyMatrix {
        qnum_diag(a, b, c, &self.h1, &self.h2)
    }

    /// Evaluate a word of atoms as a matrix product.
    pub fn eval_word(&self, w: &Word) -> PolyMatrix {
        let mut m = PolyMatrix::identity(self.dim());
        for a in w {
            let f = match a {
                Atom::Gen(x) => self.gens[x].clone(),
                Atom::Cartan { base, a, b, c } => self.cartan(*base, *a, *b, *c),
            };
            m = m.mul(&f);
        }
        m
    }
}

/// L-fold coproduct representation of all eight generators, built by the
/// left-nested recursion Δ^{(L)} = (Δ^{(L−1)} ⊗ id)∘Δ.
pub fn chain_rep(variant: HopfVariant, l: usize) -> RepContext {
    assert!(l >= 1);
    let fund = RepContext::fundamental();
    let mut cur = fund.clone();
    for _ in 2..=l {
        let sigma = cur.parities.sigma();
        let dim = cur.dim() * 3;
        let mut gens = BTreeMap::new();
        for &x in &GENS {
            let tw = coproduct(x, variant);
            let mut m = PolyMatrix::zero(dim, dim);
            for (coeff, legs) in &tw.terms {
                let a = cur.eval_word(&legs[0]);
                let b = fund.eval_word(&legs[1]);
                let left = if word_degree(&legs[1]) == 1 {
                    a.mul(&sigma)
                } else {
                    a
                };
                m = m.add(&left.kron(&b).scale(coeff));
            }
            gens.insert(x, m);
        }
        let mut h1 = Vec::with_capacity(dim);
        let mut h2 = Vec::with_capacity(dim);
        for i in 0..cur.dim() {
            for k in 0..3 {
                h1.push(cur.h1[i] + H1_FUND[k]);
                h2.push(cur.h2[i] + H2_FUND[k]);
            }
        }
        cur = RepContext {
            gens,
            h1,
            h2,
            parities: cur.parities.concat_pairs(&ParityVector::fundamental()),
        };
    }
    cur
}

/// L-fold coproduct representation of a single generator.
pub fn coproduct_rep(gen: Gen, variant: HopfVariant, l: usize) -> GradedOp {
    let ctx = chain_rep(variant, l);
    GradedOp::new(
        ctx.gens[&gen].clone(),
        gen.degree(Basis::Fermionic),
        ctx.parities,
    )
}

/// Distinguished-basis generators transported through the quantum Weyl
/// transformation (Eq. ferm-to-dist-qs). The returned context's Cartans are
/// h1 = −H1−H2, h2 = H2.
pub fn dist_rep(ctx: &RepContext) -> RepContext {
    let sinv = LaurentPoly::var_pow(S, -1);
    let mut gens = BTreeMap::new();
    gens.insert(
        Gen::H1,
        ctx.gens[&Gen::H1].add(&ctx.gens[&Gen::H2]).neg(),
    );
    gens.insert(Gen::H2, ctx.gens[&Gen::H2].clone());
    gens.insert(Gen::E1p, ctx.gens[&Gen::E3p].scale(&sinv));
    gens.insert(Gen::E1m, ctx.gens[&Gen::E3m].neg());
    gens.insert(
        Gen::E2p,
        ctx.gens[&Gen::E2m]
            .mul(&ctx.cartan(ExpBase::Q, 0, -1, 0))
            .mul(&ctx.cartan(ExpBase::S, 0, -1, 0)),
    );
    gens.insert(
        Gen::E2m,
        ctx.gens[&Gen::E2p]
            .mul(&ctx.cartan(ExpBase::Q, 0, 1, 0))
            .mul(&ctx.cartan(ExpBase::S, 0, -1, 0))
            .scale(&sinv),
    );
    gens.insert(Gen::E3p, ctx.gens[&Gen::E1p].scale(&sinv));
    gens.insert(Gen::E3m, ctx.gens[&Gen::E1m].neg());
    RepContext {
        gens,
        h1: ctx
            .h1
            .iter()
            .zip(&ctx.h2)
            .map(|(&x, &y)| -x - y)
            .collect(),
        h2: ctx.h2.clone(),
        parities: ctx.parities.clone(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgVariant {
    Classical,
    Quantum,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChangeDirection {
    FermToDist,
    DistToFerm,
}

/// The generalized Weyl transformation as a substitution table; each image is
/// a single-term tensor word (one leg).
pub fn basis_change(direction: ChangeDirection, variant: AlgVariant) -> BTreeMap<Gen, TensorWord> {
    let one = LaurentPoly::one();
    let sv = LaurentPoly::var_pow(S, 1);
    let sinv = LaurentPoly::var_pow(S, -1);
    let single = |c: LaurentPoly, w: Word| TensorWord {
        terms: vec![(c, vec![w])],
    };
    let mut t = BTreeMap::new();
    match direction {
        ChangeDirection::FermToDist => {
            // dist generator := word in fermionic generators
            t.insert(
                Gen::H1,
                TensorWord {
                    terms: vec![
                        (-one.clone(), vec![vec![g(Gen::H1)]]),
                        (-one.clone(), vec![vec![g(Gen::H2)]]),
                    ],
                },
            );
            t.insert(Gen::H2, single(one.clone(), vec![g(Gen::H2)]));
            t.insert(Gen::E1p, single(sinv.clone(), vec![g(Gen::E3p)]));
            t.insert(Gen::E1m, single(-one.clone(), vec![g(Gen::E3m)]));
            t.insert(
                Gen::E2p,
                single(one.clone(), vec![g(Gen::E2m), cq(0, -1, 0), cs(0, -1, 0)]),
            );
            t.insert(
                Gen::E2m,
                single(sinv.clone(), vec![g(Gen::E2p), cq(0, 1, 0), cs(0, -1, 0)]),
            );
            t.insert(Gen::E3p, single(sinv, vec![g(Gen::E1p)]));
            t.insert(Gen::E3m, single(-one, vec![g(Gen::E1m)]));
        }
        ChangeDirection::DistToFerm => {
            // fermionic generator := word in distinguished generators; Cartan
            // atoms are forms in (h1, h2).
            t.insert(
                Gen::H1,
                TensorWord {
                    terms: vec![
                        (-one.clone(), vec![vec![g(Gen::H1)]]),
                        (-one.clone(), vec![vec![g(Gen::H2)]]),
                    ],
                },
            );
            t.insert(Gen::H2, single(one.clone(), vec![g(Gen::H2)]));
            t.insert(Gen::E1p, single(sv.clone(), vec![g(Gen::E3p)]));
            t.insert(Gen::E1m, single(-one.clone(), vec![g(Gen::E3m)]));
            t.insert(
                Gen::E2p,
                single(sv.clone(), vec![g(Gen::E2m), cq(0, -1, 0), cs(0, 1, 0)]),
            );
            t.insert(
                Gen::E2m,
                single(one.clone(), vec![g(Gen::E2p), cq(0, 1, 0), cs(0, 1, 0)]),
            );
            t.insert(Gen::E3p, single(sv, vec![g(Gen::E1p)]));
            t.insert(Gen::E3m, single(-one, vec![g(Gen::E1m)]));
        }
    }
    if variant == AlgVariant::Classical {
        // classical Weyl transformation: same words at q = s = 1
        for tw in t.values_mut() {
            for (c, legs) in tw.terms.iter_mut() {
                *c = specialize_qs1(c);
                for w in legs.iter_mut() {
                    w.retain(|a| matches!(a, Atom::Gen(_)));
                }
            }
        }
    }
    t
}

fn specialize_qs1(p: &LaurentPoly) -> LaurentPoly {
    match p.specialize(&ParamPoint::all_ones()).unwrap() {
        SpecValue::Exact(v) => LaurentPoly::from_rational(v),
        SpecValue::Float(_) => unreachable!(),
    }
}

/// Apply a substitution table to a representation: each generator image word
/// is evaluated in `ctx`.
pub fn apply_basis_change(table: &BTreeMap<Gen, TensorWord>, ctx: &RepContext) -> BTreeMap<Gen, PolyMatrix> {
    table
        .iter()
        .map(|(&x, tw)| {
            let mut m = PolyMatrix::zero(ctx.dim(), ctx.dim());
            for (c, legs) in &tw.terms {
                m = m.add(&ctx.eval_word(&legs[0]).scale(c));
            }
            (x, m)
        })
        .collect()
}

fn zero_residual(basis_q: bool, m: &PolyMatrix) -> usize {
    // Quantum: identically zero; classical: zero at q = s = q_ij = 1.
    if basis_q {
        m.nonzero_entries()
    } else {
        let ones: [BigRational; NVARS] = std::array::from_fn(|_| num::traits::One::one());
        let vals = m.eval_exact(&ones).expect("no negative powers of zero");
        vals.iter().filter(|v| !v.is_zero()).count()
    }
}

/// Verify the defining relations of the chosen presentation as exact matrix
/// identities; failures are reported, not errors.
pub fn verify_presentation(variant: AlgVariant, basis: Basis, rep: &RepContext) -> Report {
    let mut report = Report::new(format!(
        "presentation-{}-{}",
        match variant {
            AlgVariant::Classical => "classical",
            AlgVariant::Quantum => "quantum",
        },
        match basis {
            Basis::Fermionic => "fermionic",
            Basis::Distinguished => "distinguished",
        }
    ));
    match basis {
        Basis::Fermionic => {
            let quantum = variant == AlgVariant::Quantum;
            for (name, residual) in fermionic_relations(rep) {
                report.push(Case::residual(name, zero_residual(quantum, &residual)));
            }
        }
        Basis::Distinguished => {
            // CommClassd is a classical presentation; quantum requests are
            // checked at the classical point.
            for (name, residual) in distinguished_relations(rep) {
                report.push(Case::residual(name, zero_residual(false, &residual)));
            }
        }
    }
    report
}

/// All relations of Eqs. (CommQuant), (E3Q), (SerreRelQuant), (AlgQuant) as
/// residual matrices.
pub fn fermionic_relations(rep: &RepContext) -> Vec<(String, PolyMatrix)> {
    let gm = |x: Gen| rep.gens[&x].clone();
    let ce = |base, a, b, c| rep.cartan(base, a, b, c);
    let (h1, h2) = (gm(Gen::H1), gm(Gen::H2));
    let (e1p, e2p, e1m, e2m, e3p, e3m) = (
        gm(Gen::E1p),
        gm(Gen::E2p),
        gm(Gen::E1m),
        gm(Gen::E2m),
        gm(Gen::E3p),
        gm(Gen::E3m),
    );
    let qv = |n: i32| LaurentPoly::var_pow(Q, n);
    let sv = |n: i32| LaurentPoly::var_pow(S, n);
    let comm = |a: &PolyMatrix, b: &PolyMatrix| a.mul(b).sub(&b.mul(a));
    let acomm = |a: &PolyMatrix, b: &PolyMatrix| a.mul(b).add(&b.mul(a));
    let mut rels: Vec<(String, PolyMatrix)> = Vec::new();
    rels.push(("CommQuant:[H1,H2]".into(), comm(&h1, &h2)));
    // Cartan weights: a_ij with a = [[0,−1],[−1,0]]
    let a = [[0i64, -1], [-1, 0]];
    for (i, h) in [&h1, &h2].into_iter().enumerate() {
        for (j, (ep, em)) in [(&e1p, &e1m), (&e2p, &e2m)].into_iter().enumerate() {
            rels.push((
                format!("CommQuant:[H{},E{}p]", i + 1, j + 1),
                comm(h, ep).sub(&ep.scale(&LaurentPoly::from_int(a[i][j]))),
            ));
            rels.push((
                format!("CommQuant:[H{},E{}m]", i + 1, j + 1),
                comm(h, em).add(&em.scale(&LaurentPoly::from_int(a[i][j]))),
            ));
        }
    }
    rels.push((
        "CommQuant:{E1p,E1m}".into(),
        acomm(&e1p, &e1m).sub(&rep.qnum(1, 0, 0).mul(&ce(ExpBase::S, -1, 0, 1))),
    ));
    rels.push((
        "CommQuant:{E2p,E2m}".into(),
        acomm(&e2p, &e2m).sub(&rep.qnum(0, 1, 0).mul(&ce(ExpBase::S, 0, 1, 1))),
    ));
    for (nm, x) in [("E1p", &e1p), ("E1m", &e1m), ("E2p", &e2p), ("E2m", &e2m)] {
        rels.push((format!("SerreRelQuant:{nm}^2"), x.mul(x)));
    }
    rels.push(("SerreRelQuant:{E1p,E2m}".into(), acomm(&e1p, &e2m)));
    rels.push(("SerreRelQuant:{E1m,E2p}".into(), acomm(&e1m, &e2p)));
    rels.push((
        "E3Q:E3p".into(),
        e3p.sub(
            &e1p.mul(&e2p)
                .scale(&(qv(1) * sv(-1)))
                .add(&e2p.mul(&e1p)),
        ),
    ));
    rels.push((
        "E3Q:E3m".into(),
        e3m.sub(
            &e1m.mul(&e2m)
                .add(&e2m.mul(&e1m).scale(&(qv(-1) * sv(-1)))),
        ),
    ));
    rels.push((
        "SerreRelQuant:E1pE3p".into(),
        e1p.mul(&e3p).sub(&e3p.mul(&e1p).scale(&(qv(-1) * sv(1)))),
    ));
    rels.push((
        "SerreRelQuant:E1mE3m".into(),
        e1m.mul(&e3m).sub(&e3m.mul(&e1m).scale(&(qv(-1) * sv(-1)))),
    ));
    rels.push((
        "SerreRelQuant:E2pE3p".into(),
        e2p.mul(&e3p).sub(&e3p.mul(&e2p).scale(&(qv(1) * sv(-1)))),
    ));
    rels.push((
        "SerreRelQuant:E2mE3m".into(),
        e2m.mul(&e3m).sub(&e3m.mul(&e2m).scale(&(qv(1) * sv(1)))),
    ));
    rels.push((
        "AlgQuant:[E3p,E1m]".into(),
        comm(&e3p, &e1m).sub(
            &e2p.mul(&ce(ExpBase::Q, -1, 0, 0))
                .mul(&ce(ExpBase::S, -1, 0, 0))
                .scale(&(qv(1) * sv(1))),
        ),
    ));
    rels.push((
        "AlgQuant:[E3p,E2m]".into(),
        comm(&e3p, &e2m).sub(
            &e1p.mul(&ce(ExpBase::Q, 0, 1, 0)).mul(&ce(ExpBase::S, 0, 1, 0)),
        ),
    ));
    rels.push((
        "AlgQuant:[E3m,E1p]".into(),
        comm(&e3m, &e1p).add(
            &e2m.mul(&ce(ExpBase::Q, 1, 0, 0)).mul(&ce(ExpBase::S, -1, 0, 0)),
        ),
    ));
    rels.push((
        "AlgQuant:[E3m,E2p]".into(),
        comm(&e3m, &e2p).add(
            &e1m.mul(&ce(ExpBase::Q, 0, -1, 0))
                .mul(&ce(ExpBase::S, 0, 1, 0))
                .scale(&(qv(-1) * sv(1))),
        ),
    ));
    rels.push((
        "AlgQuant:[E3p,E3m]".into(),
        comm(&e3p, &e3m).sub(&rep.qnum(1, 1, 0).mul(&ce(ExpBase::S, -1, 1, 1))),
    ));
    rels
}

/// The distinguished classical presentation (Eq. CommClassd) as residuals;
/// meaningful at q = s = 1.
pub fn distinguished_relations(rep: &RepContext) -> Vec<(String, PolyMatrix)> {
    let gm = |x: Gen| rep.gens[&x].clone();
    let (h1, h2) = (gm(Gen::H1), gm(Gen::H2));
    let pairs = [(gm(Gen::E1p), gm(Gen::E1m)), (gm(Gen::E2p), gm(Gen::E2m))];
    let comm = |a: &PolyMatrix, b: &PolyMatrix| a.mul(b).sub(&b.mul(a));
    let acomm = |a: &PolyMatrix, b: &PolyMatrix| a.mul(b).add(&b.mul(a));
    // distinguished Cartan matrix a = [[2,−1],[−1,0]]
    let a = [[2i64, -1], [-1, 0]];
    let mut rels: Vec<(String, PolyMatrix)> = Vec::new();
    rels.push(("CommClassd:[h1,h2]".into(), comm(&h1, &h2)));
    for (i, h) in [&h1, &h2].into_iter().enumerate() {
        for (j, (ep, em)) in pairs.iter().enumerate() {
            rels.push((
                format!("CommClassd:[h{},e{}p]", i + 1, j + 1),
                comm(h, ep).sub(&ep.scale(&LaurentPoly::from_int(a[i][j]))),
            ));
            rels.push((
                format!("CommClassd:[h{},e{}m]", i + 1, j + 1),
                comm(h, em).add(&em.scale(&LaurentPoly::from_int(a[i][j]))),
            ));
        }
    }
    rels.push(("CommClassd:e2p^2".into(), pairs[1].0.mul(&pairs[1].0)));
    rels.push(("CommClassd:e2m^2".into(), pairs[1].1.mul(&pairs[1].1)));
    rels.push(("CommClassd:[e1p,e2m]".into(), comm(&pairs[0].0, &pairs[1].1)));
    rels.push(("CommClassd:[e1m,e2p]".into(), comm(&pairs[0].1, &pairs[1].0)));
    rels.push((
        "CommClassd:[e1p,e1m]=h1".into(),
        comm(&pairs[0].0, &pairs[0].1).sub(&h1),
    ));
    rels.push((
        "CommClassd:{e2p,e2m}=h2".into(),
        acomm(&pairs[1].0, &pairs[1].1).sub(&h2),
    ));
    rels
}

// ---------------------------------------------------------------------------
// Antipode and Hopf axioms
// ---------------------------------------------------------------------------

/// Antipode of a generator (FermionicStandard) as a sum of words.
pub fn antipode(gen: Gen, variant: HopfVariant) -> Vec<(LaurentPoly, Word)> {
    let one = LaurentPoly::one();
    let lam = LaurentPoly::lambda();
    match variant {
        HopfVariant::ClassicalPrimitive => vec![(-one, vec![g(gen)])],
        HopfVariant::FermionicStandard => match gen {
            Gen::H1 | Gen::H2 => vec![(-one, vec![g(gen)])],
            Gen::E1p => vec![(-one, vec![cq(-1, 0, 0), cs(1, 0, 0), g(Gen::E1p)])],
            Gen::E2p => vec![(-one, vec![cq(0, -1, 0), cs(0, -1, 0), g(Gen::E2p)])],
            Gen::E1m => vec![(-one, vec![g(Gen::E1m), cq(1, 0, 0), cs(1, 0, 0)])],
            Gen::E2m => vec![(-one, vec![g(Gen::E2m), cq(0, 1, 0), cs(0, -1, 0)])],
            Gen::E3p => vec![
                (-one, vec![cq(-1, -1, 0), cs(1, -1, 0), g(Gen::E3p)]),
                (
                    lam,
                    vec![cq(-1, -1, 0), cs(1, -1, -1), g(Gen::E1p), g(Gen::E2p)],
                ),
            ],
            Gen::E3m => vec![
                (-one, vec![g(Gen::E3m), cq(1, 1, 0), cs(1, -1, 0)]),
                (
                    -lam,
                    vec![g(Gen::E2m), g(Gen::E1m), cq(1, 1, 0), cs(1, -1, -1)],
                ),
            ],
        },
        HopfVariant::DistinguishedNatural => {
            panic!("no antipode is given for the distinguished Hopf structure")
        }
    }
}

fn atom_degree(a: &Atom) -> u8 {
    match a {
        Atom::Gen(x) => x.degree(Basis::Fermionic),
        Atom::Cartan { .. } => 0,
    }
}

/// Super-antimultiplicative extension of S to a word:
/// S(x₁⋯xₙ) = (−1)^{Σ_{i<j} deg xᵢ deg xⱼ} S(xₙ)⋯S(x₁).
pub fn antipode_word(
    coeff: &LaurentPoly,
    word: &Word,
    variant: HopfVariant,
) -> Vec<(LaurentPoly, Word)> {
    let mut swaps = 0u32;
    let degs: Vec<u8> = word.iter().map(atom_degree).collect();
    for i in 0..degs.len() {
        for j in i + 1..degs.len() {
            swaps += (degs[i] * degs[j]) as u32;
        }
    }
    let base = if swaps % 2 == 1 {
        -coeff.clone()
    } else {
        coeff.clone()
    };
    let mut acc: Vec<(LaurentPoly, Word)> = vec![(base, vec![])];
    for a in word.iter().rev() {
        match a {
            // S inverts the group-like part base^{aH1+bH2} but fixes the
            // scalar base^c.
            Atom::Cartan { base: b, a, b: bb, c } => {
                for (_, w) in acc.iter_mut() {
                    w.push(Atom::Cartan {
                        base: *b,
                        a: -a,
                        b: -bb,
                        c: *c,
                    });
                }
            }
            Atom::Gen(x) => {
                let img = antipode(*x, variant);
                let mut next = Vec::with_capacity(acc.len() * img.len());
                for (c0, w0) in &acc {
                    for (ci, wi) in &img {
                        let mut w = w0.clone();
                        w.extend(wi.iter().cloned());
                        next.push((c0 * ci, w));
                    }
                }
                acc = next;
            }
        }
    }
    acc
}

/// Check (ε⊗id)Δ = π, m(S⊗id)Δ = ε·I, and S² = id in the fundamental
/// representation.
pub fn hopf_axiom_check(gen: Gen, variant: HopfVariant) -> Report {
    assert!(
        variant != HopfVariant::DistinguishedNatural,
        "antipode formulas exist only for the classical and fermionic-standard structures"
    );
    let mut report = Report::new(format!("hopf-{}-{}", variant.name(), gen.name()));
    let ctx = RepContext::fundamental();
    let tw = coproduct(gen, variant);

    // (ε⊗id)Δ(g) = π(g); ε kills generators and sends base^{aH1+bH2+c} to base^c.
    let eps_word = |w: &Word| -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for a in w {
            match a {
                Atom::Gen(_) => return LaurentPoly::zero(),
                Atom::Cartan { base, c, .. } => {
                    let var = match base {
                        ExpBase::Q => Q,
                        ExpBase::S => S,
                    };
                    out = out * LaurentPoly::var_pow(var, *c);
                }
            }
        }
        out
    };
    let mut counit_side = PolyMatrix::zero(3, 3);
    for (c, legs) in &tw.terms {
        let e = eps_word(&legs[0]);
        if !e.is_zero() {
            counit_side = counit_side.add(&ctx.eval_word(&legs[1]).scale(&(c * &e)));
        }
    }
    report.push(Case::residual(
        "counit",
        counit_side.sub(&ctx.gens[&gen]).nonzero_entries(),
    ));

    // m(S⊗id)Δ(g) = ε(g)·I = 0 for all generators.
    let mut anti_side = PolyMatrix::zero(3, 3);
    for (c, legs) in &tw.terms {
        let right = ctx.eval_word(&legs[1]);
        for (cs_, ws) in antipode_word(c, &legs[0], variant) {
            anti_side = anti_side.add(&ctx.eval_word(&ws).scale(&cs_).mul(&right));
        }
    }
    report.push(Case::residual("antipode", anti_side.nonzero_entries()));

    // S²(g) = g at the representation level.
    let mut s2 = PolyMatrix::zero(3, 3);
    for (c1, w1) in antipode(gen, variant) {
        for (c2, w2) in antipode_word(&c1, &w1, variant) {
            s2 = s2.add(&ctx.eval_word(&w2).scale(&c2));
        }
    }
    report.push(Case::residual(
        "antipode-squared",
        s2.sub(&ctx.gens[&gen]).nonzero_entries(),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glinalg::graded_kron;

    #[test]
    fn fundamental_matrices() {
        let h1 = fundamental_rep(Gen::H1, Basis::Fermionic);
        assert_eq!(h1.matrix, PolyMatrix::diag_int(&[1, 1, 0]));
        assert_eq!(h1.degree, 0);
        let e3m = fundamental_rep(Gen::E3m, Basis::Fermionic);
        assert_eq!(e3m.matrix, PolyMatrix::elementary(3, 1, 3).neg());
        assert_eq!(e3m.degree, 0);
        let e2m = fundamental_rep(Gen::E2m, Basis::Fermionic);
        assert_eq!(e2m.matrix, PolyMatrix::elementary(3, 2, 3).neg());
        assert_eq!(e2m.degree, 1);
        assert!(e2m.is_homogeneous());
    }

    #[test]
    fn cartan_exponentials() {
        let ctx = RepContext::fundamental();
        let qh1 = ctx.cartan(ExpBase::Q, 1, 0, 0);
        assert_eq!(
            qh1,
            PolyMatrix::diagonal(vec![
                LaurentPoly::var_pow(Q, 1),
                LaurentPoly::var_pow(Q, 1),
                LaurentPoly::one()
            ])
        );
        let sh2m1 = ctx.cartan(ExpBase::S, 0, 1, -1);
        assert_eq!(
            sh2m1,
            PolyMatrix::diagonal(vec![
                LaurentPoly::var_pow(S, -1),
                LaurentPoly::var_pow(S, -2),
                LaurentPoly::var_pow(S, -2)
            ])
        );
        assert_eq!(ctx.cartan(ExpBase::Q, 0, 0, 0), PolyMatrix::identity(3));
    }

    #[test]
    fn qnum_of_cartan_values() {
        let ctx = RepContext::fundamental();
        assert_eq!(ctx.qnum(1, 0, 0), PolyMatrix::diag_int(&[1, 1, 0]));
        assert_eq!(ctx.qnum(1, 1, 0), PolyMatrix::diag_int(&[1, 0, -1]));
        assert!(ctx.qnum(0, 0, 0).is_zero());
        let h1m = PolyMatrix::diag_int(&H1_FUND);
        let h2m = PolyMatrix::diag_int(&H2_FUND);
        assert_eq!(
            qnum_of_cartan((1, 0, 0), &h1m, &h2m).unwrap(),
            ctx.qnum(1, 0, 0)
        );
        let bad = PolyMatrix::diagonal(vec![
            LaurentPoly::rational(1, 2),
            LaurentPoly::one(),
            LaurentPoly::one(),
        ]);
        assert_eq!(
            qnum_of_cartan((1, 0, 0), &bad, &h2m),
            Err(AlgebraError::NonIntegerCartan)
        );
    }

    #[test]
    fn fundamental_presentation_passes() {
        let ctx = RepContext::fundamental();
        let rep = verify_presentation(AlgVariant::Quantum, Basis::Fermionic, &ctx);
        assert!(rep.all_pass(), "failing: {:?}", rep.failing());
        let repc = verify_presentation(AlgVariant::Classical, Basis::Fermionic, &ctx);
        assert!(repc.all_pass(), "failing: {:?}", repc.failing());
    }

    #[test]
    fn perturbed_rep_fails() {
        let mut ctx = RepContext::fundamental();
        let e1p = ctx.gens[&Gen::E1p].add(&PolyMatrix::elementary(3, 1, 3));
        ctx.gens.insert(Gen::E1p, e1p);
        let rep = verify_presentation(AlgVariant::Quantum, Basis::Fermionic, &ctx);
        assert!(rep
            .cases
            .iter()
            .any(|c| c.name == "SerreRelQuant:E1p^2" && !c.pass));
    }

    #[test]
    fn distinguished_presentation_passes() {
        let ctx = RepContext::fundamental();
        let dctx = dist_rep(&ctx);
        let rep = verify_presentation(AlgVariant::Classical, Basis::Distinguished, &dctx);
        assert!(rep.all_pass(), "failing: {:?}", rep.failing());
    }

    #[test]
    fn basis_change_round_trip() {
        let ctx = RepContext::fundamental();
        let fwd = basis_change(ChangeDirection::FermToDist, AlgVariant::Quantum);
        let d = apply_basis_change(&fwd, &ctx);
        let dctx = dist_rep(&ctx);
        for &x in &GENS {
            assert_eq!(d[&x], dctx.gens[&x], "ferm->dist for {}", x.name());
        }
        let back = basis_change(ChangeDirection::DistToFerm, AlgVariant::Quantum);
        let f = apply_basis_change(&back, &dctx);
        for &x in &GENS {
            assert_eq!(f[&x], ctx.gens[&x], "round trip for {}", x.name());
        }
    }

    #[test]
    fn coproduct_primitives() {
        for variant in [
            HopfVariant::ClassicalPrimitive,
            HopfVariant::FermionicStandard,
            HopfVariant::DistinguishedNatural,
        ] {
            let tw = coproduct(Gen::H1, variant);
            assert_eq!(tw.terms.len(), 2);
        }
        let ctx2 = chain_rep(HopfVariant::FermionicStandard, 2);
        let want = fund_matrix(Gen::H1)
            .kron(&PolyMatrix::identity(3))
            .add(&PolyMatrix::identity(3).kron(&fund_matrix(Gen::H1)));
        assert_eq!(ctx2.gens[&Gen::H1], want);
    }

    #[test]
    fn coproduct_e1p_two_site() {
        // Δ(E⁺₁) = π(E⁺₁) ⊗ I + (q^{H1}s^{−H1}·Σ) ⊗ π(E⁺₁); the second leg is
        // odd, so the grading sign Σ attaches to the first factor.
        let ctx = RepContext::fundamental();
        let sig = ctx.parities.sigma();
        let want = ctx.gens[&Gen::E1p].kron(&PolyMatrix::identity(3)).add(
            &ctx.cartan(ExpBase::Q, 1, 0, 0)
                .mul(&ctx.cartan(ExpBase::S, -1, 0, 0))
                .mul(&sig)
                .kron(&ctx.gens[&Gen::E1p]),
        );
        let ctx2 = chain_rep(HopfVariant::FermionicStandard, 2);
        assert_eq!(ctx2.gens[&Gen::E1p], want);
    }

    #[test]
    fn presentations_hold_under_both_coproducts() {
        for variant in [HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural] {
            let ctx2 = chain_rep(variant, 2);
            let rep = verify_presentation(AlgVariant::Quantum, Basis::Fermionic, &ctx2);
            assert!(
                rep.all_pass(),
                "{:?} L=2 failing: {:?}",
                variant,
                rep.failing()
            );
        }
    }

    #[test]
    fn coassociativity_at_l3() {
        // (Δ⊗id)Δ = (id⊗Δ)Δ at the representation level: compare the
        // left-nested L=3 build against the right-nested assembly.
        let variant = HopfVariant::FermionicStandard;
        let left = chain_rep(variant, 3);
        let fund = RepContext::fundamental();
        let two = chain_rep(variant, 2);
        for &x in &GENS {
            // right-nested: Δ legs evaluated as (fund, two-site)
            let tw = coproduct(x, variant);
            let mut m = PolyMatrix::zero(27, 27);
            for (c, legs) in &tw.terms {
                let a = fund.eval_word(&legs[0]);
                let b = two.eval_word(&legs[1]);
                let left_f = if word_degree(&legs[1]) == 1 {
                    a.mul(&fund.parities.sigma())
                } else {
                    a
                };
                m = m.add(&left_f.kron(&b).scale(c));
            }
            assert_eq!(m, left.gens[&x], "coassociativity for {}", x.name());
        }
    }

    #[test]
    fn hopf_axioms_fundamental() {
        for variant in [HopfVariant::ClassicalPrimitive, HopfVariant::FermionicStandard] {
            for &x in &GENS {
                let rep = hopf_axiom_check(x, variant);
                assert!(
                    rep.all_pass(),
                    "{:?} {} failing: {:?}",
                    variant,
                    x.name(),
                    rep.failing()
                );
            }
        }
    }

    #[test]
    fn graded_kron_homomorphism_on_words() {
        // ρ(x⊗̲y)·ρ(x′⊗̲y′) = (−1)^{deg y · deg x′} ρ(xx′ ⊗̲ yy′)
        let ctx = RepContext::fundamental();
        let words: Vec<Word> = vec![
            vec![g(Gen::E1p)],
            vec![g(Gen::E2m)],
            vec![g(Gen::E3p)],
            vec![g(Gen::H1), g(Gen::E1m)],
            vec![g(Gen::E1p), g(Gen::E2p)],
        ];
        let to_graded = |w: &Word| {
            GradedOp::new(ctx.eval_word(w), word_degree(w), ctx.parities.clone())
        };
        for x in &words {
            for y in &words {
                for xp in &words {
                    for yp in &words {
                        let lhs = graded_kron(&to_graded(x), &to_graded(y))
                            .unwrap()
                            .matrix
                            .mul(&graded_kron(&to_graded(xp), &to_graded(yp)).unwrap().matrix);
                        let mut xx = x.clone();
                        xx.extend(xp.iter().cloned());
                        let mut yy = y.clone();
                        yy.extend(yp.iter().cloned());
                        let mut rhs = graded_kron(&to_graded(&xx), &to_graded(&yy))
                            .unwrap()
                            .matrix;
                        if word_degree(y) * word_degree(xp) == 1 {
                            rhs = rhs.neg();
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
