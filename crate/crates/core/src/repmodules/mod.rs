//! Explicit matrix representations of the RTT superalgebras: the natural
//! module, evaluation modules, graded tensor products, RTT verification,
//! highest ell-weight extraction, and the structural operations built on
//! them (submodules, duals, Gauss decomposition, Berezinians, ell-weight
//! decomposition, restriction).

mod elldec;
mod structure;

pub use elldec::{berezinian, check_centrality, ell_decompose, gauss_decompose, EllDecomposition};
pub use structure::{
    cyclicity_check, decompose_restriction, generated_submodule, restrict_to_subalgebra,
    twisted_dual, RestrictionReport, Summand,
};

use std::fmt;

use crate::rmatrix::{perk_schultz, q_i, RMatrix};
use crate::scalars::{Scalar, ScalarError, Var};
use crate::superlinalg::{GradedMatrix, LinalgError, Parity, SuperSpace, TensorConvention};
use crate::youngcomb::Weight;

/// Brute-force closures refuse to grow past this dimension.
pub const DEFAULT_DIM_CAP: usize = 256;

#[derive(Clone, Debug)]
pub enum RepError {
    Linalg(LinalgError),
    Scalar(ScalarError),
    /// The constant term of a diagonal series is not diagonal/invertible.
    BadConstantTerm(usize),
    DimCapExceeded {
        dim: usize,
        cap: usize,
    },
    /// A vector expected to be an eigenvector is not.
    NotEigen,
    /// An ell-weight space could not be split into eigenlines.
    CannotSplit,
    RttFailure(RttFailure),
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::Linalg(e) => write!(f, "{e}"),
            RepError::Scalar(e) => write!(f, "{e}"),
            RepError::BadConstantTerm(i) => write!(f, "bad constant term of series {i}"),
            RepError::DimCapExceeded { dim, cap } => {
                write!(f, "closure dimension {dim} exceeds cap {cap}")
            }
            RepError::NotEigen => write!(f, "vector is not an eigenvector"),
            RepError::CannotSplit => write!(f, "cannot split ell-weight space into eigenlines"),
            RepError::RttFailure(w) => write!(f, "RTT failure: {w}"),
        }
    }
}

impl std::error::Error for RepError {}

impl From<LinalgError> for RepError {
    fn from(e: LinalgError) -> Self {
        RepError::Linalg(e)
    }
}

impl From<ScalarError> for RepError {
    fn from(e: ScalarError) -> Self {
        RepError::Scalar(e)
    }
}

/// A finite-type representation: constant generator matrices `s_{ij}`,
/// `t_{ji}` for `i <= j`.
#[derive(Clone, Debug)]
pub struct FiniteRep {
    pub m: usize,
    pub n: usize,
    pub space: SuperSpace,
    s: Vec<Vec<GradedMatrix>>,
    t: Vec<Vec<GradedMatrix>>,
}

impl FiniteRep {
    pub fn s(&self, i: usize, j: usize) -> &GradedMatrix {
        &self.s[i - 1][j - 1]
    }

    pub fn t(&self, i: usize, j: usize) -> &GradedMatrix {
        &self.t[i - 1][j - 1]
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Graded tensor product via the coproduct
    /// `s_{ij} -> sum_k (-1)^{(|i|+|k|)(|k|+|j|)} s_{ik} (x) s_{kj}`.
    pub fn tensor(&self, other: &FiniteRep) -> Result<FiniteRep, RepError> {
        assert_eq!((self.m, self.n), (other.m, other.n));
        let dim = self.m + self.n;
        let space = self.space.tensor(&other.space);
        let build = |a: &Vec<Vec<GradedMatrix>>, b: &Vec<Vec<GradedMatrix>>| -> Result<Vec<Vec<GradedMatrix>>, RepError> {
            let mut out = Vec::with_capacity(dim);
            for i in 1..=dim {
                let mut row = Vec::with_capacity(dim);
                for j in 1..=dim {
                    let mut acc = GradedMatrix::zero(space.clone(), space.clone())
                        .with_parity(parity_of(self.m, i, j));
                    for k in 1..=dim {
                        let term = GradedMatrix::tensor_action(
                            &a[i - 1][k - 1],
                            &b[k - 1][j - 1],
                            TensorConvention::Graded,
                        )?;
                        let sign = coproduct_sign(self.m, i, k, j);
                        acc = if sign < 0 {
                            acc.sub(&term)
                        } else {
                            acc.add(&term)
                        };
                    }
                    row.push(acc.with_parity(parity_of(self.m, i, j)));
                }
                out.push(row);
            }
            Ok(out)
        };
        let s = build(&self.s, &other.s)?;
        let t = build(&self.t, &other.t)?;
        Ok(FiniteRep {
            m: self.m,
            n: self.n,
            space,
            s,
            t,
        })
    }
}

pub fn parity_of(m: usize, i: usize, j: usize) -> Parity {
    let p = |x: usize| if x <= m { Parity::Even } else { Parity::Odd };
    p(i) + p(j)
}

fn coproduct_sign(m: usize, i: usize, k: usize, j: usize) -> i8 {
    let odd = |x: usize| x > m;
    if (odd(i) ^ odd(k)) && (odd(k) ^ odd(j)) {
        -1
    } else {
        1
    }
}

/// The natural representation of the finite-type superalgebra on the
/// standard space: `s_{ii} = q_i E_ii + sum_{j != i} E_jj`,
/// `s_{ij} = (q_i - q_i^{-1}) E_ij`, `t_{ji} = (q_i^{-1} - q_i) E_ji`.
pub fn natural_rep_finite(m: usize, n: usize) -> FiniteRep {
    let dim = m + n;
    let mut weights = Vec::with_capacity(dim);
    for i in 1..=dim {
        weights.push(Weight::eps(m, n, i).coords().to_vec());
    }
    let space = SuperSpace::standard(m, n).with_weights(weights);
    let zero = |i: usize, j: usize| {
        GradedMatrix::zero(space.clone(), space.clone()).with_parity(parity_of(m, i, j))
    };
    let mut s: Vec<Vec<GradedMatrix>> = (1..=dim)
        .map(|i| (1..=dim).map(|j| zero(i, j)).collect())
        .collect();
    let mut t = s.clone();
    for i in 1..=dim {
        let qi = q_i(m, i);
        let qi_inv = qi.recip().unwrap();
        let mut sii = zero(i, i);
        let mut tii = zero(i, i);
        for j in 1..=dim {
            if j == i {
                sii.set(j - 1, j - 1, qi.clone());
                tii.set(j - 1, j - 1, qi_inv.clone());
            } else {
                sii.set(j - 1, j - 1, Scalar::one());
                tii.set(j - 1, j - 1, Scalar::one());
            }
        }
        s[i - 1][i - 1] = sii;
        t[i - 1][i - 1] = tii;
        for j in (i + 1)..=dim {
            let mut sij = zero(i, j);
            sij.set(i - 1, j - 1, &qi - &qi_inv);
            s[i - 1][j - 1] = sij;
            let mut tji = zero(j, i);
            tji.set(j - 1, i - 1, &qi_inv - &qi);
            t[j - 1][i - 1] = tji;
        }
    }
    FiniteRep { m, n, space, s, t }
}

/// A representation of the quantum affine superalgebra (or of its
/// q-Yangian half when `t` is absent): generator series as matrices with
/// entries rational in `z`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub m: usize,
    pub n: usize,
    pub space: SuperSpace,
    s: Vec<Vec<GradedMatrix>>,
    t: Option<Vec<Vec<GradedMatrix>>>,
}

impl Representation {
    pub fn new(
        m: usize,
        n: usize,
        space: SuperSpace,
        s: Vec<Vec<GradedMatrix>>,
        t: Option<Vec<Vec<GradedMatrix>>>,
    ) -> Representation {
        Representation { m, n, space, s, t }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn generator_dim(&self) -> usize {
        self.m + self.n
    }

    pub fn s(&self, i: usize, j: usize) -> &GradedMatrix {
        &self.s[i - 1][j - 1]
    }

    pub fn t(&self, i: usize, j: usize) -> Option<&GradedMatrix> {
        self.t.as_ref().map(|t| &t[i - 1][j - 1])
    }

    pub fn has_t(&self) -> bool {
        self.t.is_some()
    }

    pub fn s_matrices(&self) -> &Vec<Vec<GradedMatrix>> {
        &self.s
    }

    pub fn t_matrices(&self) -> Option<&Vec<Vec<GradedMatrix>>> {
        self.t.as_ref()
    }

    /// Constant term of `s_{ii}(z)` (value at `z = 0`).
    pub fn s_constant(&self, i: usize, j: usize) -> Result<GradedMatrix, RepError> {
        let mut out = GradedMatrix::zero(self.space.clone(), self.space.clone())
            .with_parity(parity_of(self.m, i, j));
        for ((r, c), v) in self.s[i - 1][j - 1].entries() {
            let val = v.substitute(&Var::Z, &Scalar::zero())?;
            out.set(*r, *c, val);
        }
        Ok(out)
    }

    /// Entrywise substitution of a variable in every generator matrix.
    pub fn substitute(&self, v: &Var, value: &Scalar) -> Result<Representation, RepError> {
        let map = |mats: &Vec<Vec<GradedMatrix>>| -> Result<Vec<Vec<GradedMatrix>>, RepError> {
            mats.iter()
                .map(|row| {
                    row.iter()
                        .map(|mat| {
                            let mut out =
                                GradedMatrix::zero(mat.target().clone(), mat.source().clone());
                            for ((r, c), e) in mat.entries() {
                                out.set(*r, *c, e.substitute(v, value)?);
                            }
                            Ok(match mat.parity() {
                                Some(p) => out.with_parity(p),
                                None => out,
                            })
                        })
                        .collect()
                })
                .collect()
        };
        Ok(Representation {
            m: self.m,
            n: self.n,
            space: self.space.clone(),
            s: map(&self.s)?,
            t: match &self.t {
                Some(t) => Some(map(t)?),
                None => None,
            },
        })
    }

    /// Entrywise multiplication of the `s`-series by `g` and the `t`-series
    /// by `f`.
    pub fn twist_by_series(&self, g: &Scalar, f: &Scalar) -> Representation {
        let scale = |mats: &Vec<Vec<GradedMatrix>>, factor: &Scalar| {
            mats.iter()
                .map(|row| row.iter().map(|m| m.scale(factor)).collect())
                .collect()
        };
        Representation {
            m: self.m,
            n: self.n,
            space: self.space.clone(),
            s: scale(&self.s, g),
            t: self.t.as_ref().map(|t| scale(t, f)),
        }
    }

    /// Graded tensor product along the coproduct.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        assert_eq!((self.m, self.n), (other.m, other.n));
        let dim = self.generator_dim();
        let space = self.space.tensor(&other.space);
        let build = |a: &Vec<Vec<GradedMatrix>>,
                     b: &Vec<Vec<GradedMatrix>>|
         -> Result<Vec<Vec<GradedMatrix>>, RepError> {
            let mut out = Vec::with_capacity(dim);
            for i in 1..=dim {
                let mut row = Vec::with_capacity(dim);
                for j in 1..=dim {
                    let mut acc = GradedMatrix::zero(space.clone(), space.clone())
                        .with_parity(parity_of(self.m, i, j));
                    for k in 1..=dim {
                        let term = GradedMatrix::tensor_action(
                            &a[i - 1][k - 1],
                            &b[k - 1][j - 1],
                            TensorConvention::Graded,
                        )?;
                        let sign = coproduct_sign(self.m, i, k, j);
                        acc = if sign < 0 {
                            acc.sub(&term)
                        } else {
                            acc.add(&term)
                        };
                    }
                    row.push(acc.with_parity(parity_of(self.m, i, j)));
                }
                out.push(row);
            }
            Ok(out)
        };
        let s = build(&self.s, &other.s)?;
        let t = match (&self.t, &other.t) {
            (Some(t1), Some(t2)) => Some(build(t1, t2)?),
            _ => None,
        };
        Ok(Representation {
            m: self.m,
            n: self.n,
            space,
            s,
            t,
        })
    }

    /// Validates the series-shape invariants: vanishing lower `s`- and upper
    /// `t`-constant terms, and mutually inverse diagonal constant terms.
    pub fn validate_shape(&self) -> Result<(), RepError> {
        let dim = self.generator_dim();
        for i in 1..=dim {
            for j in 1..=dim {
                if i > j {
                    let c = constant_term(&self.s[i - 1][j - 1])?;
                    if !c.is_zero() {
                        return Err(RepError::BadConstantTerm(i));
                    }
                }
            }
        }
        if let Some(t) = &self.t {
            for i in 1..=dim {
                for j in 1..=dim {
                    if i < j {
                        let c = constant_term_at_infinity(&t[i - 1][j - 1])?;
                        if !c.is_zero() {
                            return Err(RepError::BadConstantTerm(i));
                        }
                    }
                }
                let s0 = constant_term(&self.s[i - 1][i - 1])?;
                let t0 = constant_term_at_infinity(&t[i - 1][i - 1])?;
                let prod = s0.matmul(&t0)?;
                if prod.to_dense() != GradedMatrix::identity(&self.space).to_dense() {
                    return Err(RepError::BadConstantTerm(i));
                }
            }
        }
        Ok(())
    }

    /// Checks the weight-grading invariant on a weight-labeled basis:
    /// a nonzero entry of `s_{ij}` connects weights differing by
    /// `eps_i - eps_j`.
    pub fn validate_weight_grading(&self) -> bool {
        let Some(weights) = self.space.weights() else {
            return true;
        };
        let dim = self.generator_dim();
        for i in 1..=dim {
            for j in 1..=dim {
                for ((r, c), _) in self.s[i - 1][j - 1].entries() {
                    let mut diff: Vec<i64> = weights[*r]
                        .iter()
                        .zip(&weights[*c])
                        .map(|(a, b)| a - b)
                        .collect();
                    diff[i - 1] -= 1;
                    diff[j - 1] += 1;
                    if diff.iter().any(|&x| x != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn constant_term(m: &GradedMatrix) -> Result<GradedMatrix, RepError> {
    let mut out = GradedMatrix::zero(m.target().clone(), m.source().clone());
    for ((r, c), v) in m.entries() {
        out.set(
            *r,
            *c,
            v.limit(&Var::Z, crate::scalars::LimitDir::ToZero)?,
        );
    }
    Ok(out)
}

fn constant_term_at_infinity(m: &GradedMatrix) -> Result<GradedMatrix, RepError> {
    let mut out = GradedMatrix::zero(m.target().clone(), m.source().clone());
    for ((r, c), v) in m.entries() {
        out.set(
            *r,
            *c,
            v.limit(&Var::Z, crate::scalars::LimitDir::ToInfinity)?,
        );
    }
    Ok(out)
}

/// The evaluation module of a finite-type representation at spectral
/// parameter `a`: `s_{ij}(z) = s_{ij} - z a t_{ij}`,
/// `t_{ij}(z) = t_{ij} - z^{-1} a^{-1} s_{ij}`.
pub fn evaluate(fin: &FiniteRep, a: &Scalar) -> Representation {
    let dim = fin.m + fin.n;
    let z = Scalar::z();
    let za = &z * a;
    let zainv = (&z * a).recip().expect("nonzero spectral parameter");
    let mut s = Vec::with_capacity(dim);
    let mut t = Vec::with_capacity(dim);
    for i in 1..=dim {
        let mut srow = Vec::with_capacity(dim);
        let mut trow = Vec::with_capacity(dim);
        for j in 1..=dim {
            srow.push(
                fin.s(i, j)
                    .sub(&fin.t(i, j).scale(&za))
                    .with_parity(parity_of(fin.m, i, j)),
            );
            trow.push(
                fin.t(i, j)
                    .sub(&fin.s(i, j).scale(&zainv))
                    .with_parity(parity_of(fin.m, i, j)),
            );
        }
        s.push(srow);
        t.push(trow);
    }
    Representation {
        m: fin.m,
        n: fin.n,
        space: fin.space.clone(),
        s,
        t: Some(t),
    }
}

/// First failing coefficient identity of an RTT check.
#[derive(Clone, Debug)]
pub struct RttFailure {
    pub relation: &'static str,
    pub indices: (usize, usize, usize, usize),
}

impl fmt::Display for RttFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} relation fails at {:?}", self.relation, self.indices)
    }
}

/// Report of the full RTT verification.
#[derive(Clone, Debug)]
pub struct RttReport {
    pub pass: bool,
    pub checked_relations: Vec<&'static str>,
    pub failure: Option<RttFailure>,
}

/// Verifies the exact coefficient RTT identities
/// `sum_{a,b} (-1)^{|a|(|b|+|j|)} R_{kl,ab}(z,w) X_{ai}(z) Y_{bj}(w) =
///  sum_{c,d} (-1)^{|c|(|d|+|l|)} R_{cd,ij}(z,w) Y_{ld}(w) X_{kc}(z)`
/// for the pairs `(X,Y) = (s,s)`, and `(t,t)`, `(t,s)` when the module
/// carries a `t`-action, plus the Cartan corollary
/// `s_{ii}^{(0)} s_{jk}(z) = q^{(eps_i, eps_j - eps_k)} s_{jk}(z) s_{ii}^{(0)}`.
pub fn check_rtt(rep: &Representation) -> Result<RttReport, RepError> {
    let r = perk_schultz(rep.m, rep.n);
    let mut checked = vec!["RSS=SSR"];
    if let Some(f) = rtt_pair(rep, &r, &rep.s, &rep.s, "RSS=SSR")? {
        return Ok(RttReport {
            pass: false,
            checked_relations: checked,
            failure: Some(f),
        });
    }
    if let Some(t) = &rep.t {
        checked.push("RTT=TTR");
        if let Some(f) = rtt_pair(rep, &r, t, t, "RTT=TTR")? {
            return Ok(RttReport {
                pass: false,
                checked_relations: checked,
                failure: Some(f),
            });
        }
        checked.push("RTS=STR");
        if let Some(f) = rtt_pair(rep, &r, t, &rep.s, "RTS=STR")? {
            return Ok(RttReport {
                pass: false,
                checked_relations: checked,
                failure: Some(f),
            });
        }
    }
    checked.push("Cartan");
    if let Some(f) = cartan_check(rep)? {
        return Ok(RttReport {
            pass: false,
            checked_relations: checked,
            failure: Some(f),
        });
    }
    Ok(RttReport {
        pass: true,
        checked_relations: checked,
        failure: None,
    })
}

fn rtt_pair(
    rep: &Representation,
    r: &RMatrix,
    x: &[Vec<GradedMatrix>],
    y: &[Vec<GradedMatrix>],
    name: &'static str,
) -> Result<Option<RttFailure>, RepError> {
    let dim = rep.generator_dim();
    let odd = |idx: usize| idx > rep.m;
    // generator series at the second spectral variable
    let at_w = |mat: &GradedMatrix| -> Result<GradedMatrix, RepError> {
        let mut out = GradedMatrix::zero(mat.target().clone(), mat.source().clone());
        for ((rr, cc), v) in mat.entries() {
            out.set(*rr, *cc, v.substitute(&Var::Z, &Scalar::w())?);
        }
        Ok(out)
    };
    for i in 1..=dim {
        for j in 1..=dim {
            for k in 1..=dim {
                for l in 1..=dim {
                    let mut lhs = GradedMatrix::zero(rep.space.clone(), rep.space.clone());
                    for a in 1..=dim {
                        for b in 1..=dim {
                            let coeff = r.coeff(k, l, a, b);
                            if coeff.is_zero() {
                                continue;
                            }
                            let sign = if odd(a) && (odd(b) ^ odd(j)) { -1 } else { 1 };
                            let prod = x[a - 1][i - 1].matmul(&at_w(&y[b - 1][j - 1])?)?;
                            let term = prod.scale(&coeff);
                            lhs = if sign < 0 { lhs.sub(&term) } else { lhs.add(&term) };
                        }
                    }
                    let mut rhs = GradedMatrix::zero(rep.space.clone(), rep.space.clone());
                    for c in 1..=dim {
                        for d in 1..=dim {
                            let coeff = r.coeff(c, d, i, j);
                            if coeff.is_zero() {
                                continue;
                            }
                            let sign = if odd(c) && (odd(d) ^ odd(l)) { -1 } else { 1 };
                            let prod = at_w(&y[l - 1][d - 1])?.matmul(&x[k - 1][c - 1])?;
                            let term = prod.scale(&coeff);
                            rhs = if sign < 0 { rhs.sub(&term) } else { rhs.add(&term) };
                        }
                    }
                    if !lhs.sub(&rhs).is_zero() {
                        return Ok(Some(RttFailure {
                            relation: name,
                            indices: (i, j, k, l),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn cartan_check(rep: &Representation) -> Result<Option<RttFailure>, RepError> {
    let dim = rep.generator_dim();
    for i in 1..=dim {
        let s0 = rep.s_constant(i, i)?;
        for j in 1..=dim {
            for k in 1..=dim {
                let eps_i = Weight::eps(rep.m, rep.n, i);
                let pairing = eps_i.pair(&Weight::eps(rep.m, rep.n, j))
                    - eps_i.pair(&Weight::eps(rep.m, rep.n, k));
                let factor = Scalar::q_pow(pairing);
                let lhs = s0.matmul(&rep.s[j - 1][k - 1])?;
                let rhs = rep.s[j - 1][k - 1].matmul(&s0)?.scale(&factor);
                if !lhs.sub(&rhs).is_zero() {
                    return Ok(Some(RttFailure {
                        relation: "Cartan",
                        indices: (i, i, j, k),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// A highest ell-weight vector with its diagonal eigen-series.
#[derive(Clone, Debug)]
pub struct HighestVector {
    pub vector: Vec<Scalar>,
    pub s_eigen: Vec<Scalar>,
    pub t_eigen: Option<Vec<Scalar>>,
}

/// Common kernel of all strictly upper generator series, intersected with
/// the weight spaces; returns the eigen-series of the diagonal generators.
pub fn highest_lweight_vectors(rep: &Representation) -> Result<Vec<HighestVector>, RepError> {
    let dim = rep.generator_dim();
    let d = rep.dim();
    // stack z-coefficient rows of all strictly upper generator matrices
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut push_matrix = |mat: &GradedMatrix| {
        for coeff_mat in z_coefficient_matrices(mat) {
            for r in 0..d {
                let mut row = Vec::with_capacity(d);
                let mut nonzero = false;
                for c in 0..d {
                    let v = coeff_mat.get(r, c);
                    nonzero |= !v.is_zero();
                    row.push(v);
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    };
    for i in 1..=dim {
        for j in 1..=dim {
            if i < j {
                push_matrix(&rep.s[i - 1][j - 1]);
                if let Some(t) = &rep.t {
                    push_matrix(&t[i - 1][j - 1]);
                }
            }
        }
    }
    let kernel = crate::superlinalg::kernel_of_rows(rows, d);
    // group coordinates by weight class via diagonal constant terms
    let classes = weight_classes(rep)?;
    let mut out = Vec::new();
    for class in classes {
        // vectors in span(kernel) supported on the class
        let outside: Vec<usize> = (0..d).filter(|i| !class.contains(i)).collect();
        if kernel.is_empty() {
            continue;
        }
        let combo_rows: Vec<Vec<Scalar>> = outside
            .iter()
            .map(|&i| kernel.iter().map(|v| v[i].clone()).collect())
            .collect();
        let combos = if combo_rows.is_empty() {
            // every kernel vector already lies in the class span
            (0..kernel.len())
                .map(|j| {
                    let mut e = vec![Scalar::zero(); kernel.len()];
                    e[j] = Scalar::one();
                    e
                })
                .collect()
        } else {
            crate::superlinalg::kernel_of_rows(combo_rows, kernel.len())
        };
        for combo in combos {
            let mut v = vec![Scalar::zero(); d];
            for (j, c) in combo.iter().enumerate() {
                if !c.is_zero() {
                    for i in 0..d {
                        v[i] = &v[i] + &(c * &kernel[j][i]);
                    }
                }
            }
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let s_eigen = diagonal_eigen(rep, &rep.s, &v)?;
            let t_eigen = match &rep.t {
                Some(t) => Some(diagonal_eigen(rep, t, &v)?),
                None => None,
            };
            out.push(HighestVector {
                vector: v,
                s_eigen,
                t_eigen,
            });
        }
    }
    Ok(out)
}

fn diagonal_eigen(
    rep: &Representation,
    mats: &[Vec<GradedMatrix>],
    v: &[Scalar],
) -> Result<Vec<Scalar>, RepError> {
    let dim = rep.generator_dim();
    let mut out = Vec::with_capacity(dim);
    for i in 1..=dim {
        let image = mats[i - 1][i - 1].apply(v);
        let pivot = v.iter().position(|x| !x.is_zero()).ok_or(RepError::NotEigen)?;
        let f = image[pivot].try_div(&v[pivot])?;
        for c in 0..v.len() {
            if image[c] != &f * &v[c] {
                return Err(RepError::NotEigen);
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// The coordinate classes of equal diagonal weight, read off the constant
/// terms of the diagonal series (which must be diagonal matrices).
pub fn weight_classes(rep: &Representation) -> Result<Vec<Vec<usize>>, RepError> {
    let dim = rep.generator_dim();
    let d = rep.dim();
    let mut labels: Vec<Vec<Scalar>> = vec![Vec::with_capacity(dim); d];
    for i in 1..=dim {
        let s0 = rep.s_constant(i, i)?;
        for ((r, c), _) in s0.entries() {
            if r != c {
                return Err(RepError::BadConstantTerm(i));
            }
        }
        for (v, label) in labels.iter_mut().enumerate() {
            label.push(s0.get(v, v));
        }
    }
    let mut classes: Vec<(Vec<Scalar>, Vec<usize>)> = Vec::new();
    for (v, label) in labels.into_iter().enumerate() {
        match classes.iter_mut().find(|(l, _)| *l == label) {
            Some((_, members)) => members.push(v),
            None => classes.push((label, vec![v])),
        }
    }
    Ok(classes.into_iter().map(|(_, members)| members).collect())
}

/// The z-coefficient matrices spanning the same operator space as the
/// series coefficients: the matrix is scaled by the least common multiple
/// of its entry denominators in `z` and split by powers of `z`.
pub fn z_coefficient_matrices(mat: &GradedMatrix) -> Vec<GradedMatrix> {
    use crate::scalars::Poly;
    if mat.is_zero() {
        return Vec::new();
    }
    // common denominator in z over all entries
    let mut den = Poly::one();
    for (_, v) in mat.entries() {
        let d = v.denominator();
        let g = Poly::gcd(&den, d);
        den = den.mul(&d.div_exact(&g).unwrap());
    }
    let den_s = Scalar::from_poly(den);
    let mut max_deg = 0usize;
    let mut cleared: Vec<((usize, usize), Vec<Scalar>)> = Vec::new();
    for ((r, c), v) in mat.entries() {
        let scaled = v * &den_s;
        debug_assert!(scaled.is_polynomial());
        let coeffs = scaled.numerator().coeffs_wrt(&Var::Z);
        max_deg = max_deg.max(coeffs.len());
        cleared.push((
            (*r, *c),
            coeffs.into_iter().map(Scalar::from_poly).collect(),
        ));
    }
    let mut out = Vec::new();
    for k in 0..max_deg {
        let mut mk = GradedMatrix::zero(mat.target().clone(), mat.source().clone());
        let mut nonzero = false;
        for ((r, c), coeffs) in &cleared {
            if let Some(v) = coeffs.get(k) {
                if !v.is_zero() {
                    mk.set(*r, *c, v.clone());
                    nonzero = true;
                }
            }
        }
        if nonzero {
            out.push(match mat.parity() {
                Some(p) => mk.with_parity(p),
                None => mk,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    fn a() -> Scalar {
        Scalar::sym("a")
    }

    #[test]
    fn natural_rep_matrices_gl11() {
        let nat = natural_rep_finite(1, 1);
        // s_12 = (q - q^-1) E_12
        let e = nat.s(1, 2).get(0, 1);
        assert_eq!(e, &Scalar::q() - &Scalar::q_pow(-1));
        // s_11 = q E_11 + E_22
        assert_eq!(nat.s(1, 1).get(0, 0), Scalar::q());
        assert_eq!(nat.s(1, 1).get(1, 1), Scalar::one());
        // parities multiply to even: s_12 then t_21 maps even to even
        let prod = nat.s(1, 2).matmul(nat.t(2, 1)).unwrap();
        assert_eq!(prod.parity(), Some(Parity::Even));
    }

    #[test]
    fn evaluation_module_entries() {
        let rep = evaluate(&natural_rep_finite(1, 1), &a());
        // s_11(z) = (q - z a q^-1) E_11 + (1 - z a) E_22
        let want00 = parse_scalar("q - z*a/q").unwrap();
        assert_eq!(rep.s(1, 1).get(0, 0), want00);
        let want11 = parse_scalar("1 - z*a").unwrap();
        assert_eq!(rep.s(1, 1).get(1, 1), want11);
        // t_{ij}(z) = t_{ij} - z^-1 a^-1 s_{ij}
        let t12 = rep.t(1, 2).unwrap().get(0, 1);
        let want = parse_scalar("-(q - 1/q)/(z*a)").unwrap();
        assert_eq!(t12, want);
        rep.validate_shape().unwrap();
        assert!(rep.validate_weight_grading());
    }

    #[test]
    fn natural_evaluation_passes_rtt() {
        for (m, n) in [(1usize, 1usize), (2, 1)] {
            let rep = evaluate(&natural_rep_finite(m, n), &a());
            let report = check_rtt(&rep).unwrap();
            assert!(report.pass, "({m},{n}): {:?}", report.failure);
            assert_eq!(report.checked_relations.len(), 4);
        }
    }

    #[test]
    fn perturbed_rep_fails_rtt() {
        let mut rep = evaluate(&natural_rep_finite(1, 1), &a());
        let bumped = {
            let mut m = rep.s[0][1].clone();
            m.set(1, 0, &m.get(1, 0) + &Scalar::one());
            m
        };
        rep.s[0][1] = bumped;
        let report = check_rtt(&rep).unwrap();
        assert!(!report.pass);
        assert!(report.failure.is_some());
    }

    #[test]
    fn tensor_square_passes_rtt() {
        let rep = evaluate(&natural_rep_finite(1, 1), &a());
        let rep_b = evaluate(&natural_rep_finite(1, 1), &Scalar::sym("b"));
        let square = rep.tensor(&rep_b).unwrap();
        assert_eq!(square.dim(), 4);
        let report = check_rtt(&square).unwrap();
        assert!(report.pass, "{:?}", report.failure);
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        // the trivial one-dimensional module: s_ii = t_ii = 1, off-diagonals 0
        let rep = evaluate(&natural_rep_finite(1, 1), &a());
        let dim = 2usize;
        let triv_space = SuperSpace::standard(1, 0).with_weights(vec![vec![0, 0]]);
        let zero =
            |i: usize, j: usize| GradedMatrix::zero(triv_space.clone(), triv_space.clone())
                .with_parity(parity_of(1, i, j));
        let mut s: Vec<Vec<GradedMatrix>> = (1..=dim)
            .map(|i| (1..=dim).map(|j| zero(i, j)).collect())
            .collect();
        for (i, row) in s.iter_mut().enumerate() {
            row[i].set(0, 0, Scalar::one());
        }
        let triv = Representation {
            m: 1,
            n: 1,
            space: triv_space,
            s: s.clone(),
            t: Some(s),
        };
        let prod = rep.tensor(&triv).unwrap();
        for i in 1..=2usize {
            for j in 1..=2usize {
                assert_eq!(
                    prod.s(i, j).to_dense(),
                    rep.s(i, j).to_dense(),
                    "({i},{j})"
                );
            }
        }
    }

    #[test]
    fn highest_vector_of_natural_evaluation() {
        let rep = evaluate(&natural_rep_finite(1, 1), &a());
        let hvs = highest_lweight_vectors(&rep).unwrap();
        assert_eq!(hvs.len(), 1);
        let hv = &hvs[0];
        assert_eq!(hv.vector[0], Scalar::one());
        assert!(hv.vector[1].is_zero());
        // s_11(z) v_1 = (q - z a q^-1) v_1
        assert_eq!(hv.s_eigen[0], parse_scalar("q - z*a/q").unwrap());
        assert_eq!(hv.s_eigen[1], parse_scalar("1 - z*a").unwrap());
    }

    #[test]
    fn highest_vectors_multiply_in_tensors() {
        let rep1 = evaluate(&natural_rep_finite(1, 1), &a());
        let rep2 = evaluate(&natural_rep_finite(1, 1), &Scalar::sym("b"));
        let prod = rep1.tensor(&rep2).unwrap();
        let hv1 = &highest_lweight_vectors(&rep1).unwrap()[0];
        let hv2 = &highest_lweight_vectors(&rep2).unwrap()[0];
        let hvs = highest_lweight_vectors(&prod).unwrap();
        let top = hvs
            .iter()
            .find(|h| !h.vector[0].is_zero())
            .expect("top tensor vector is highest");
        for i in 0..2 {
            assert_eq!(top.s_eigen[i], &hv1.s_eigen[i] * &hv2.s_eigen[i]);
        }
    }

    #[test]
    fn twist_composition_law() {
        // twisting a tensor product on both factors equals twisting by the
        // product series
        let rep1 = evaluate(&natural_rep_finite(1, 1), &a());
        let rep2 = evaluate(&natural_rep_finite(1, 1), &Scalar::sym("b"));
        let g1 = parse_scalar("1/(1 - z*a)").unwrap();
        let g2 = parse_scalar("1/(1 - z*b)").unwrap();
        let f1 = Scalar::one();
        let f2 = Scalar::one();
        let lhs = rep1
            .twist_by_series(&g1, &f1)
            .tensor(&rep2.twist_by_series(&g2, &f2))
            .unwrap();
        let rhs = rep1
            .tensor(&rep2)
            .unwrap()
            .twist_by_series(&(&g1 * &g2), &(&f1 * &f2));
        for i in 1..=2usize {
            for j in 1..=2usize {
                assert_eq!(lhs.s(i, j).to_dense(), rhs.s(i, j).to_dense());
            }
        }
    }
}
