//! Z2-graded vector spaces and sparse matrices over [`Scalar`], with the
//! sign-correct tensor calculus used by the RTT formalism.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use crate::scalars::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn sign_if_odd_pair(self, other: Parity) -> i8 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A finite-dimensional Z2-graded space: a parity per basis index, and
/// optional integer weight labels in the epsilon-coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperSpace {
    parities: Vec<Parity>,
    weights: Option<Vec<Vec<i64>>>,
}

impl SuperSpace {
    pub fn new(parities: Vec<Parity>) -> SuperSpace {
        SuperSpace {
            parities,
            weights: None,
        }
    }

    /// The standard space of `gl(M,N)`: indices `1..=M` even, the rest odd.
    pub fn standard(m: usize, n: usize) -> SuperSpace {
        let mut parities = vec![Parity::Even; m];
        parities.extend(vec![Parity::Odd; n]);
        SuperSpace::new(parities)
    }

    pub fn with_weights(mut self, weights: Vec<Vec<i64>>) -> SuperSpace {
        assert_eq!(weights.len(), self.parities.len());
        self.weights = Some(weights);
        self
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn weights(&self) -> Option<&Vec<Vec<i64>>> {
        self.weights.as_ref()
    }

    pub fn weight(&self, i: usize) -> Option<&Vec<i64>> {
        self.weights.as_ref().map(|w| &w[i])
    }

    /// Tensor product, basis ordered row-major: `v_i (x) v_j` at `i*dim2 + j`.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut parities = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                parities.push(self.parity(i) + other.parity(j));
            }
        }
        let weights = match (&self.weights, &other.weights) {
            (Some(a), Some(b)) => {
                let mut out = Vec::with_capacity(a.len() * b.len());
                for wa in a {
                    for wb in b {
                        out.push(wa.iter().zip(wb).map(|(x, y)| x + y).collect());
                    }
                }
                Some(out)
            }
            _ => None,
        };
        SuperSpace { parities, weights }
    }

    pub fn tensor_power(&self, n: usize) -> SuperSpace {
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.tensor(self);
        }
        acc
    }
}

/// Whether operator tensor products carry the Koszul sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TensorConvention {
    /// `(a (x) b)(v (x) w) = (-1)^{|b||v|} a v (x) b w`
    Graded,
    /// no signs
    Plain,
}

impl fmt::Display for TensorConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorConvention::Graded => write!(f, "graded"),
            TensorConvention::Plain => write!(f, "plain"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinalgError {
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    MissingParity,
    Singular,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left:?} vs {right:?}")
            }
            LinalgError::MissingParity => {
                write!(f, "tensor factor without declared parity")
            }
            LinalgError::Singular => write!(f, "singular matrix"),
        }
    }
}

impl std::error::Error for LinalgError {}

/// Sparse matrix between graded spaces. Stored entries are nonzero after
/// reduction; `parity`, when declared, asserts homogeneity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    source: SuperSpace,
    target: SuperSpace,
    parity: Option<Parity>,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl GradedMatrix {
    pub fn zero(target: SuperSpace, source: SuperSpace) -> GradedMatrix {
        GradedMatrix {
            source,
            target,
            parity: None,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(space: &SuperSpace) -> GradedMatrix {
        let mut m = GradedMatrix::zero(space.clone(), space.clone());
        for i in 0..space.dim() {
            m.set(i, i, Scalar::one());
        }
        m.parity = Some(Parity::Even);
        m
    }

    /// Elementary matrix `E_{rc}` (0-based indices), with its natural parity.
    pub fn elementary(space: &SuperSpace, r: usize, c: usize) -> GradedMatrix {
        let mut m = GradedMatrix::zero(space.clone(), space.clone());
        m.set(r, c, Scalar::one());
        m.parity = Some(space.parity(r) + space.parity(c));
        m
    }

    pub fn with_parity(mut self, p: Parity) -> GradedMatrix {
        self.parity = Some(p);
        self
    }

    pub fn rows(&self) -> usize {
        self.target.dim()
    }

    pub fn cols(&self) -> usize {
        self.source.dim()
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert!(r < self.rows() && c < self.cols(), "index out of range");
        if value.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), value);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &Scalar) {
        let cur = self.get(r, c);
        self.set(r, c, &cur + value);
    }

    pub fn add(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.rows(), other.rows());
        assert_eq!(self.cols(), other.cols());
        let mut out = self.clone();
        out.parity = match (self.parity, other.parity) {
            (Some(p), Some(q)) if p == q => Some(p),
            _ => None,
        };
        if self.is_zero() {
            out.parity = out.parity.or(other.parity);
        }
        for ((r, c), v) in &other.entries {
            out.add_to(*r, *c, v);
        }
        out
    }

    pub fn sub(&self, other: &GradedMatrix) -> GradedMatrix {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> GradedMatrix {
        let mut out = GradedMatrix::zero(self.target.clone(), self.source.clone());
        out.parity = self.parity;
        if s.is_zero() {
            return out;
        }
        for ((r, c), v) in &self.entries {
            out.set(*r, *c, v * s);
        }
        out
    }

    /// Entrywise application, used for variable substitution in matrices.
    pub fn map_entries<F>(&self, f: F) -> GradedMatrix
    where
        F: Fn(&Scalar) -> Scalar,
    {
        let mut out = GradedMatrix::zero(self.target.clone(), self.source.clone());
        out.parity = self.parity;
        for ((r, c), v) in &self.entries {
            out.set(*r, *c, f(v));
        }
        out
    }

    /// Ordinary matrix product (composition of linear maps).
    pub fn matmul(&self, other: &GradedMatrix) -> Result<GradedMatrix, LinalgError> {
        if self.cols() != other.rows() {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows(), self.cols()),
                right: (other.rows(), other.cols()),
            });
        }
        let mut out = GradedMatrix::zero(self.target.clone(), other.source.clone());
        out.parity = match (self.parity, other.parity) {
            (Some(p), Some(q)) => Some(p + q),
            _ => None,
        };
        // index rows of `other` for sparse traversal
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for ((r, c), v) in &other.entries {
            by_row.entry(*r).or_default().push((*c, v));
        }
        for ((r, k), va) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (c, vb) in row {
                    out.add_to(*r, *c, &(va * vb));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols());
        let mut out = vec![Scalar::zero(); self.rows()];
        for ((r, c), val) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] = &out[*r] + &(val * &v[*c]);
            }
        }
        out
    }

    /// Matrix of `(a (x) b)` acting on the tensor basis, row-major.
    ///
    /// Under the graded convention `(a (x) b)(v (x) w) = (-1)^{|b||v|} av (x) bw`;
    /// the plain convention drops the sign.
    pub fn tensor_action(
        a: &GradedMatrix,
        b: &GradedMatrix,
        conv: TensorConvention,
    ) -> Result<GradedMatrix, LinalgError> {
        let b_parity = match (conv, b.parity) {
            (TensorConvention::Plain, _) => Parity::Even,
            (TensorConvention::Graded, Some(p)) => p,
            (TensorConvention::Graded, None) => return Err(LinalgError::MissingParity),
        };
        let source = a.source.tensor(&b.source);
        let target = a.target.tensor(&b.target);
        let mut out = GradedMatrix::zero(target, source);
        out.parity = match (a.parity, b.parity) {
            (Some(p), Some(q)) => Some(p + q),
            _ => None,
        };
        let d2s = b.cols();
        let d2t = b.rows();
        for ((r1, c1), va) in &a.entries {
            let sign_neg = b_parity.is_odd() && a.source.parity(*c1).is_odd();
            for ((r2, c2), vb) in &b.entries {
                let mut val = va * vb;
                if sign_neg {
                    val = -&val;
                }
                out.add_to(r1 * d2t + r2, c1 * d2s + c2, &val);
            }
        }
        Ok(out)
    }

    /// Checks homogeneity: every stored entry connects basis vectors whose
    /// parities differ by the declared parity.
    pub fn check_homogeneous(&self) -> bool {
        match self.parity {
            None => true,
            Some(p) => self
                .entries
                .keys()
                .all(|(r, c)| self.target.parity(*r) + self.source.parity(*c) == p),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.cols()]; self.rows()];
        for ((r, c), v) in &self.entries {
            rows[*r][*c] = v.clone();
        }
        rows
    }

    pub fn from_dense(
        target: SuperSpace,
        source: SuperSpace,
        rows: Vec<Vec<Scalar>>,
    ) -> GradedMatrix {
        let mut m = GradedMatrix::zero(target, source);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Basis of the right kernel over the fraction field, echelonized
    /// deterministically (leftmost pivot, lowest row index first).
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        kernel_of_rows(self.to_dense(), self.cols())
    }

    fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(r, c)| r == c)
    }

    /// Exact inverse of a square matrix. Diagonal matrices invert
    /// entrywise; the general case goes through row reduction over the
    /// fraction field.
    pub fn inverse(&self) -> Result<GradedMatrix, LinalgError> {
        if self.rows() != self.cols() {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows(), self.cols()),
                right: (self.cols(), self.rows()),
            });
        }
        let n = self.rows();
        if self.is_diagonal() {
            if self.entries.len() != n {
                return Err(LinalgError::Singular);
            }
            let mut out = GradedMatrix::zero(self.source.clone(), self.target.clone());
            for ((r, _), v) in &self.entries {
                out.set(*r, *r, v.recip().map_err(|_| LinalgError::Singular)?);
            }
            return Ok(out);
        }
        let mut aug = self.to_dense();
        for (i, row) in aug.iter_mut().enumerate() {
            for j in 0..n {
                row.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
        }
        let (rref, pivots) = rref_rows(aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, p)| *p != i) {
            return Err(LinalgError::Singular);
        }
        let inv_rows: Vec<Vec<Scalar>> = rref.into_iter().map(|row| row[n..].to_vec()).collect();
        Ok(GradedMatrix::from_dense(
            self.source.clone(),
            self.target.clone(),
            inv_rows,
        ))
    }
}

/// Reduced row echelon form with leftmost-pivot, lowest-index tie-breaking.
/// Returns the nonzero rows and the pivot column per row.
pub fn rref_rows(mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot_row = (rank..nrows).find(|&r| !rows[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        rows.swap(rank, pr);
        let inv = rows[rank][col].recip().expect("pivot is nonzero");
        for c in col..ncols {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Right-kernel basis of a dense row list with `ncols` columns.
pub fn kernel_of_rows(rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let (rref, pivots) = rref_rows(rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (ri, pc) in pivots.iter().enumerate() {
            let coef = &rref[ri][free];
            if !coef.is_zero() {
                v[*pc] = -coef;
            }
        }
        basis.push(v);
    }
    basis
}

/// Echelonized basis of the row span; used for closure computations.
pub fn row_space_basis(rows: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let (rref, _) = rref_rows(rows);
    rref
}

/// Expresses `v` in terms of an echelonized (RREF) basis, if possible.
pub fn coordinates_in_basis(basis: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut coords = Vec::with_capacity(basis.len());
    let mut rem = v.to_vec();
    for (row, pc) in basis.iter().zip(pivots) {
        let c = rem[*pc].clone();
        if !c.is_zero() {
            for (x, y) in rem.iter_mut().zip(row) {
                *x = &*x - &(&c * y);
            }
        }
        coords.push(c);
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(coords)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space11() -> SuperSpace {
        SuperSpace::standard(1, 1)
    }

    #[test]
    fn elementary_products() {
        let sp = SuperSpace::standard(2, 1);
        let e12 = GradedMatrix::elementary(&sp, 0, 1);
        let e23 = GradedMatrix::elementary(&sp, 1, 2);
        let e13 = GradedMatrix::elementary(&sp, 0, 2);
        assert_eq!(e12.matmul(&e23).unwrap().entries, e13.entries);
        assert!(e12.matmul(&e12).unwrap().is_zero());
    }

    #[test]
    fn diagonal_inverse() {
        let sp = space11();
        let mut m = GradedMatrix::zero(sp.clone(), sp.clone());
        m.set(0, 0, Scalar::q());
        m.set(1, 1, Scalar::one());
        let mut w = GradedMatrix::zero(sp.clone(), sp.clone());
        w.set(0, 0, Scalar::q_pow(-1));
        w.set(1, 1, Scalar::one());
        let prod = m.matmul(&w).unwrap();
        assert_eq!(prod.entries, GradedMatrix::identity(&sp).entries);
        assert_eq!(m.inverse().unwrap().entries, w.entries);
    }

    #[test]
    fn tensor_sign_on_odd_pair() {
        // a = Id, b = E_21 (odd) over gl(1,1): the Koszul sign -1 appears
        // exactly on the column of v_2 (x) v_1.
        let sp = space11();
        let id = GradedMatrix::identity(&sp);
        let e21 = GradedMatrix::elementary(&sp, 1, 0);
        let t = GradedMatrix::tensor_action(&id, &e21, TensorConvention::Graded).unwrap();
        // columns indexed row-major over (i,j); v_2 (x) v_1 = index 1*2+0 = 2
        // brute-force oracle over all four basis vectors
        for i in 0..2usize {
            for j in 0..2usize {
                let col = i * 2 + j;
                // (Id (x) E21)(v_i (x) v_j) = (-1)^{|E21||v_i|} v_i (x) E21 v_j
                // E21 v_j = delta_{j,0} v_1
                for r in 0..4usize {
                    let got = t.get(r, col);
                    let want = if j == 0 && r == i * 2 + 1 {
                        if sp.parity(i).is_odd() {
                            -&Scalar::one()
                        } else {
                            Scalar::one()
                        }
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(got, want, "entry ({r},{col})");
                }
            }
        }
        // the only -1 column is v_2 (x) v_1
        assert_eq!(t.get(3, 2), -&Scalar::one());
    }

    #[test]
    fn odd_odd_square_is_zero_with_koszul_sign() {
        let sp = space11();
        let e12 = GradedMatrix::elementary(&sp, 0, 1);
        let t = GradedMatrix::tensor_action(&e12, &e12, TensorConvention::Graded).unwrap();
        let sq = t.matmul(&t).unwrap();
        assert!(sq.is_zero());
        // brute-force sign oracle: (E12 (x) E12)(v_c (x) v_d) = (-1)^{|E12||v_c|} E12 v_c (x) E12 v_d
        for c in 0..2usize {
            for d in 0..2usize {
                for r in 0..4usize {
                    let want = if c == 1 && d == 1 && r == 0 {
                        // v_2 (x) v_2 -> (-1)^{odd*odd} v_1 (x) v_1
                        -&Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(t.get(r, c * 2 + d), want);
                }
            }
        }
    }

    #[test]
    fn super_interchange_law() {
        // (a (x) b)(c (x) d) = (-1)^{|b||c|} (ac (x) bd) for homogeneous factors
        let sp = SuperSpace::standard(2, 1);
        let idx = [(0usize, 1usize), (1, 2), (2, 0), (1, 1), (0, 2)];
        for (i1, j1) in idx {
            for (k1, l1) in idx {
                for (i2, j2) in idx {
                    for (k2, l2) in idx {
                        let a = GradedMatrix::elementary(&sp, i1, j1);
                        let b = GradedMatrix::elementary(&sp, i2, j2);
                        let c = GradedMatrix::elementary(&sp, k1, l1);
                        let d = GradedMatrix::elementary(&sp, k2, l2);
                        let lhs = GradedMatrix::tensor_action(&a, &b, TensorConvention::Graded)
                            .unwrap()
                            .matmul(
                                &GradedMatrix::tensor_action(&c, &d, TensorConvention::Graded)
                                    .unwrap(),
                            )
                            .unwrap();
                        let ac = a.matmul(&c).unwrap();
                        let bd = b.matmul(&d).unwrap();
                        let mut rhs =
                            GradedMatrix::tensor_action(&ac, &bd, TensorConvention::Graded)
                                .unwrap();
                        if b.parity().unwrap().sign_if_odd_pair(c.parity().unwrap()) < 0 {
                            rhs = rhs.scale(&-&Scalar::one());
                        }
                        assert_eq!(lhs.entries, rhs.entries);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let sp = space11();
        assert!(GradedMatrix::identity(&sp).kernel().is_empty());
        let z = GradedMatrix::zero(sp.clone(), sp.clone());
        assert_eq!(z.kernel().len(), 2);
        let e12 = GradedMatrix::elementary(&sp, 0, 1);
        let k = e12.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Scalar::one(), Scalar::zero()]);
    }

    #[test]
    fn kernel_rank_nullity_and_annihilation() {
        let sp = SuperSpace::standard(2, 2);
        let mut m = GradedMatrix::zero(sp.clone(), sp.clone());
        m.set(0, 0, Scalar::q());
        m.set(0, 1, Scalar::one());
        m.set(1, 2, &Scalar::q() + &Scalar::one());
        m.set(1, 3, Scalar::q());
        m.set(2, 0, Scalar::q_pow(2));
        m.set(2, 1, Scalar::q());
        let kernel = m.kernel();
        for v in &kernel {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
        let rank = row_space_basis(m.to_dense()).len();
        assert_eq!(rank + kernel.len(), m.cols());
    }
}
