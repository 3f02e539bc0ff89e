//! Gauss decomposition of the generator matrix, quantum Berezinians, and
//! the ell-weight decomposition of a module into joint eigenlines of the
//! commuting Berezinian series.

use std::collections::BTreeMap;

use super::{weight_classes, z_coefficient_matrices, RepError, Representation};
use crate::lweights::{
    tuple_ratio_to_monomial, LatticeRat, QCharacter, SpectralPoint,
};
use crate::rmatrix::theta;
use crate::scalars::{Scalar, Var};
use crate::superlinalg::{coordinates_in_basis, rref_rows, GradedMatrix};
use crate::youngcomb::Weight;

/// The diagonal Gauss series `K_j(z)` of the `s`-generator matrix, by
/// successive quasi-Schur complements of the operator-valued blocks in the
/// fixed order `1..M+N`. The elimination step carries the Koszul sign of
/// the super tensor algebra,
/// `R_ab <- R_ab - (-1)^{(|a|+|s|)(|s|+|b|)} R_as R_ss^{-1} R_sb`,
/// so an odd-odd block pair contributes with a plus: over `gl(1,1)` this is
/// `K_2 = s_22 + s_21 s_11^{-1} s_12`.
pub fn gauss_decompose(rep: &Representation) -> Result<Vec<GradedMatrix>, RepError> {
    let dim = rep.generator_dim();
    let odd = |x: usize| x > rep.m;
    let mut blocks: Vec<Vec<GradedMatrix>> = rep.s_matrices().clone();
    let mut out = Vec::with_capacity(dim);
    for step in 0..dim {
        out.push(blocks[step][step].clone());
        if step + 1 == dim {
            break;
        }
        let pivot_inv = blocks[step][step].inverse()?;
        let s = step + 1; // 1-based eliminated index
        let mut next: Vec<Vec<GradedMatrix>> = blocks.clone();
        for a in (step + 1)..dim {
            for b in (step + 1)..dim {
                let corr = blocks[a][step]
                    .matmul(&pivot_inv)?
                    .matmul(&blocks[step][b])?;
                let sign_neg = (odd(a + 1) ^ odd(s)) && (odd(s) ^ odd(b + 1));
                next[a][b] = if sign_neg {
                    blocks[a][b].add(&corr)
                } else {
                    blocks[a][b].sub(&corr)
                };
            }
        }
        blocks = next;
    }
    Ok(out)
}

/// The quantum Berezinian `C_i(z) = prod_{j<=i} (K_j(z theta_j^{-1}))^{d_j}`.
pub fn berezinian(rep: &Representation, i: usize) -> Result<GradedMatrix, RepError> {
    let ks = gauss_decompose(rep)?;
    berezinian_from_gauss(rep, &ks, i)
}

fn berezinian_from_gauss(
    rep: &Representation,
    ks: &[GradedMatrix],
    i: usize,
) -> Result<GradedMatrix, RepError> {
    let th = theta(rep.m, rep.n);
    let mut acc = GradedMatrix::identity(&rep.space);
    for j in 1..=i {
        let shift = &Scalar::z() * &th[j - 1].recip().unwrap();
        let mut kj = GradedMatrix::zero(rep.space.clone(), rep.space.clone());
        for ((r, c), v) in ks[j - 1].entries() {
            kj.set(*r, *c, v.substitute(&Var::Z, &shift)?);
        }
        let factor = if j <= rep.m { kj } else { kj.inverse()? };
        acc = acc.matmul(&factor)?;
    }
    Ok(acc)
}

/// Report of the Berezinian centrality check at level `k`.
#[derive(Clone, Debug)]
pub struct CentralityReport {
    pub pass: bool,
    pub constant_term_matches: bool,
    pub first_failure: Option<(usize, usize)>,
}

/// Checks that `C_k(z)` commutes with every `s_{ij}(w)` and `t_{ij}(w)`
/// for `i, j <= k`, and that its constant term is
/// `prod_{j<=k} (s_{jj}^{(0)})^{d_j}`.
pub fn check_centrality(rep: &Representation, k: usize) -> Result<CentralityReport, RepError> {
    let c = berezinian(rep, k)?;
    let w = Scalar::w();
    let mut first_failure = None;
    'outer: for i in 1..=k {
        for j in 1..=k {
            let mut mats = vec![rep.s(i, j).clone()];
            if let Some(t) = rep.t(i, j) {
                mats.push(t.clone());
            }
            for mat in mats {
                let mut at_w = GradedMatrix::zero(rep.space.clone(), rep.space.clone());
                for ((r, cc), v) in mat.entries() {
                    at_w.set(*r, *cc, v.substitute(&Var::Z, &w)?);
                }
                let comm = c.matmul(&at_w)?.sub(&at_w.matmul(&c)?);
                if !comm.is_zero() {
                    first_failure = Some((i, j));
                    break 'outer;
                }
            }
        }
    }
    // constant term: C_{k,0} = prod (s_jj^{(0)})^{d_j}
    let mut c0 = GradedMatrix::zero(rep.space.clone(), rep.space.clone());
    for ((r, cc), v) in c.entries() {
        c0.set(*r, *cc, v.substitute(&Var::Z, &Scalar::zero())?);
    }
    let mut expect = GradedMatrix::identity(&rep.space);
    for j in 1..=k {
        let s0 = rep.s_constant(j, j)?;
        let factor = if j <= rep.m { s0 } else { s0.inverse()? };
        expect = expect.matmul(&factor)?;
    }
    let constant_term_matches = c0.sub(&expect).is_zero();
    Ok(CentralityReport {
        pass: first_failure.is_none() && constant_term_matches,
        constant_term_matches,
        first_failure,
    })
}

/// The ell-weight decomposition of a module.
#[derive(Clone, Debug)]
pub struct EllDecomposition {
    /// joint eigenvalue tuples of the Berezinian series with multiplicities
    pub spectrum: Vec<(Vec<Scalar>, usize)>,
    /// the normalized q-character: spectrum divided by the dominant tuple,
    /// factored into ell-weight monomials
    pub normalized: QCharacter,
}

/// Decomposes a finite-dimensional module into joint eigenlines of the
/// commuting `C_i(z)`, inside each diagonal weight class, and factors the
/// eigenvalue ratios over the spectral lattice.
pub fn ell_decompose(rep: &Representation) -> Result<EllDecomposition, RepError> {
    let dim = rep.generator_dim();
    let d = rep.dim();
    let ks = gauss_decompose(rep)?;
    let cs: Vec<GradedMatrix> = (1..=dim)
        .map(|i| berezinian_from_gauss(rep, &ks, i))
        .collect::<Result<_, _>>()?;
    let classes = weight_classes(rep)?;
    // refine each weight class into joint eigenlines
    let mut eigenlines: Vec<Vec<Scalar>> = Vec::new();
    for class in classes {
        // basis of the class as coordinate vectors
        let blocks: Vec<GradedMatrix> = cs
            .iter()
            .map(|c| restrict_block(c, &class))
            .collect::<Result<_, _>>()?;
        // coefficient operators, z cleared
        let mut ops: Vec<GradedMatrix> = Vec::new();
        for b in &blocks {
            ops.extend(z_coefficient_matrices(b));
        }
        let full = identity_rows(class.len());
        let mut pieces = vec![full];
        loop {
            let mut progressed = false;
            let mut next: Vec<Vec<Vec<Scalar>>> = Vec::new();
            for piece in pieces.into_iter() {
                match split_piece(&ops, &piece)? {
                    None => next.push(piece),
                    Some(parts) => {
                        progressed = true;
                        next.extend(parts);
                    }
                }
            }
            pieces = next;
            if !progressed {
                break;
            }
        }
        // every operator must now act as a scalar on every piece
        for piece in pieces {
            for op in &ops {
                if scalar_action(op, &piece)?.is_none() {
                    return Err(RepError::CannotSplit);
                }
            }
            // expand piece vectors to full coordinates and record them
            for v in &piece {
                let mut full_v = vec![Scalar::zero(); d];
                for (slot, &coord) in class.iter().enumerate() {
                    full_v[coord] = v[slot].clone();
                }
                eigenlines.push(full_v);
            }
        }
    }
    // eigenvalue tuples per line
    let mut spectrum: Vec<(Vec<Scalar>, usize)> = Vec::new();
    let mut tuples: Vec<Vec<Scalar>> = Vec::new();
    for v in &eigenlines {
        let mut tuple = Vec::with_capacity(dim);
        for c in &cs {
            let image = c.apply(v);
            let pivot = v.iter().position(|x| !x.is_zero()).unwrap();
            let f = image[pivot].try_div(&v[pivot])?;
            for i in 0..d {
                if image[i] != &f * &v[i] {
                    return Err(RepError::NotEigen);
                }
            }
            tuple.push(f);
        }
        match spectrum.iter_mut().find(|(t, _)| *t == tuple) {
            Some((_, mult)) => *mult += 1,
            None => {
                spectrum.push((tuple.clone(), 1));
            }
        }
        tuples.push(tuple);
    }
    let normalized = normalize_spectrum(rep.m, rep.n, &spectrum)?;
    Ok(EllDecomposition {
        spectrum,
        normalized,
    })
}

/// Divides the spectrum by its dominant tuple and factors the ratios into
/// ell-weight monomials.
fn normalize_spectrum(
    m: usize,
    n: usize,
    spectrum: &[(Vec<Scalar>, usize)],
) -> Result<QCharacter, RepError> {
    let dim = m + n;
    let as_lattice = |tuple: &Vec<Scalar>| -> Result<Vec<LatticeRat>, RepError> {
        tuple
            .iter()
            .map(|f| LatticeRat::from_scalar(f).map_err(|_| RepError::CannotSplit))
            .collect()
    };
    let lattice: Vec<Vec<LatticeRat>> = spectrum
        .iter()
        .map(|(t, _)| as_lattice(t))
        .collect::<Result<_, _>>()?;
    // dominance via the weight of the ratio units, which are pure q-powers
    let ratio_weight = |x: &Vec<LatticeRat>, y: &Vec<LatticeRat>| -> Option<Weight> {
        let mut coords = Vec::with_capacity(dim);
        let mut prev = 0i64;
        for (fx, fy) in x.iter().zip(y) {
            let u = fx.unit.try_div(&fy.unit).ok()?;
            let p = SpectralPoint::from_unit_scalar(&u).ok()?;
            if !p.base.is_one() {
                return None;
            }
            coords.push(p.qexp - prev);
            prev = p.qexp;
        }
        Some(Weight::new(m, n, coords))
    };
    let dominates = |i: usize| -> bool {
        lattice.iter().all(|l| {
            ratio_weight(&lattice[i], l)
                .map(|w| w.in_positive_root_cone())
                .unwrap_or(false)
        })
    };
    let top = (0..lattice.len())
        .find(|&i| dominates(i))
        .ok_or(RepError::CannotSplit)?;
    let mut out = QCharacter::zero(m, n);
    for (l, (_, mult)) in lattice.iter().zip(spectrum) {
        let ratio: Vec<LatticeRat> = l.iter().zip(&lattice[top]).map(|(f, t)| f.div(t)).collect();
        let mono = tuple_ratio_to_monomial(dim, &ratio).map_err(|_| RepError::CannotSplit)?;
        out.add_term(mono, *mult as i64);
    }
    Ok(out)
}

fn restrict_block(mat: &GradedMatrix, class: &[usize]) -> Result<GradedMatrix, RepError> {
    let inside: std::collections::BTreeSet<usize> = class.iter().copied().collect();
    let space = crate::superlinalg::SuperSpace::new(
        class
            .iter()
            .map(|&i| mat.source().parity(i))
            .collect(),
    );
    let index: BTreeMap<usize, usize> = class.iter().enumerate().map(|(s, &i)| (i, s)).collect();
    let mut out = GradedMatrix::zero(space.clone(), space);
    for ((r, c), v) in mat.entries() {
        match (inside.contains(r), inside.contains(c)) {
            (true, true) => out.set(index[r], index[c], v.clone()),
            (false, true) => return Err(RepError::BadConstantTerm(0)),
            _ => {}
        }
    }
    Ok(out)
}

fn identity_rows(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            let mut row = vec![Scalar::zero(); n];
            row[i] = Scalar::one();
            row
        })
        .collect()
}

/// Matrix of `op` on the span of `piece`, computed in the echelonized
/// basis of the span; errors when the span is not invariant.
fn matrix_on_span(op: &GradedMatrix, piece: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, RepError> {
    let (basis, pivots) = rref_rows(piece.to_vec());
    let mut rows = vec![vec![Scalar::zero(); basis.len()]; basis.len()];
    for (j, v) in basis.iter().enumerate() {
        let image = op.apply(v);
        let coords = coordinates_in_basis(&basis, &pivots, &image).ok_or(RepError::CannotSplit)?;
        for (i, c) in coords.into_iter().enumerate() {
            rows[i][j] = c;
        }
    }
    Ok(rows)
}

/// `Some(c)` when `op` acts on the span as the scalar `c`.
fn scalar_action(op: &GradedMatrix, piece: &[Vec<Scalar>]) -> Result<Option<Scalar>, RepError> {
    let mat = matrix_on_span(op, piece)?;
    let n = mat.len();
    let c = mat[0][0].clone();
    for (i, row) in mat.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j { c.clone() } else { Scalar::zero() };
            if *v != want {
                return Ok(None);
            }
        }
    }
    let _ = n;
    Ok(Some(c))
}

/// Attempts to split the span of `piece` into proper invariant pieces using
/// the first operator that acts non-scalarly with a solvable minimal
/// polynomial (degree at most two after refinement).
fn split_piece(
    ops: &[GradedMatrix],
    piece: &[Vec<Scalar>],
) -> Result<Option<Vec<Vec<Vec<Scalar>>>>, RepError> {
    for op in ops {
        if scalar_action(op, piece)?.is_some() {
            continue;
        }
        let mat = matrix_on_span(op, piece)?;
        let (basis, _) = rref_rows(piece.to_vec());
        let nn = basis.len();
        // minimal polynomial via Krylov iteration from each basis vector
        let minpoly = minimal_polynomial(&mat)?;
        let roots = match poly_roots(&minpoly) {
            Some(r) => r,
            None => continue, // try another operator
        };
        let mut parts: Vec<Vec<Vec<Scalar>>> = Vec::new();
        for root in roots {
            // kernel of (mat - root I) inside the span
            let mut rows = vec![vec![Scalar::zero(); nn]; nn];
            for (i, row) in mat.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    rows[i][j] = if i == j { v - &root } else { v.clone() };
                }
            }
            let kernel = crate::superlinalg::kernel_of_rows(rows, nn);
            if kernel.is_empty() {
                continue;
            }
            let part: Vec<Vec<Scalar>> = kernel
                .iter()
                .map(|combo| {
                    let mut v = vec![Scalar::zero(); basis[0].len()];
                    for (j, c) in combo.iter().enumerate() {
                        if !c.is_zero() {
                            for (x, y) in v.iter_mut().zip(&basis[j]) {
                                *x = &*x + &(c * y);
                            }
                        }
                    }
                    v
                })
                .collect();
            parts.push(part);
        }
        let total: usize = parts.iter().map(|p| p.len()).sum();
        if total == nn && parts.len() > 1 {
            return Ok(Some(parts));
        }
    }
    Ok(None)
}

/// Minimal polynomial (monic, coefficients low-to-high) of a small matrix
/// over the scalar field, via Krylov sequences.
fn minimal_polynomial(mat: &[Vec<Scalar>]) -> Result<Vec<Scalar>, RepError> {
    let n = mat.len();
    let apply = |v: &[Scalar]| -> Vec<Scalar> {
        (0..n)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..n {
                    if !mat[i][j].is_zero() && !v[j].is_zero() {
                        acc = &acc + &(&mat[i][j] * &v[j]);
                    }
                }
                acc
            })
            .collect()
    };
    let mut acc: Vec<Scalar> = vec![Scalar::one()]; // polynomial 1
    for start in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[start] = Scalar::one();
        // Krylov sequence e, Ae, A^2 e, ...
        let mut krylov: Vec<Vec<Scalar>> = vec![e.clone()];
        let ann;
        loop {
            let next = apply(krylov.last().unwrap());
            // try to express next in the span of krylov
            let (basis, pivots) = rref_rows(krylov.clone());
            if let Some(_coords) = coordinates_in_basis(&basis, &pivots, &next) {
                // solve for combination in terms of the original krylov rows
                ann = solve_dependence(&krylov, &next)?;
                break;
            }
            krylov.push(next);
        }
        acc = poly_lcm(&acc, &ann);
        if acc.len() == n + 1 {
            break;
        }
    }
    Ok(acc)
}

/// Expresses `target = sum c_k K_k`; returns the monic annihilator
/// `x^d - c_{d-1} x^{d-1} - ... - c_0`.
fn solve_dependence(krylov: &[Vec<Scalar>], target: &[Scalar]) -> Result<Vec<Scalar>, RepError> {
    let n = target.len();
    let d = krylov.len();
    // least squares free: solve linear system via rref on the transpose
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<Scalar> = krylov.iter().map(|v| v[i].clone()).collect();
        row.push(target[i].clone());
        rows.push(row);
    }
    let (rref, pivots) = rref_rows(rows);
    let mut coeffs = vec![Scalar::zero(); d];
    for (ri, &pc) in pivots.iter().enumerate() {
        if pc == d {
            return Err(RepError::CannotSplit); // inconsistent
        }
        coeffs[pc] = rref[ri][d].clone();
    }
    // annihilator: x^d - sum coeffs_k x^k
    let mut ann = vec![Scalar::zero(); d + 1];
    for (k, c) in coeffs.into_iter().enumerate() {
        ann[k] = -&c;
    }
    ann[d] = Scalar::one();
    Ok(ann)
}

fn poly_deg(p: &[Scalar]) -> usize {
    let mut d = 0;
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            d = i;
        }
    }
    d
}

fn poly_divmod(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let db = poly_deg(b);
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    let mut quo = vec![Scalar::zero(); a.len()];
    while poly_deg(&rem) >= db && rem.iter().any(|c| !c.is_zero()) {
        let dr = poly_deg(&rem);
        if dr < db {
            break;
        }
        let f = rem[dr].try_div(&lead).unwrap();
        quo[dr - db] = f.clone();
        for i in 0..=db {
            let delta = &f * &b[i];
            rem[dr - db + i] = &rem[dr - db + i] - &delta;
        }
        if rem[dr].is_zero() {
            continue;
        }
    }
    (quo, rem)
}

fn poly_gcd_univ(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while y.iter().any(|c| !c.is_zero()) {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    // monic
    let d = poly_deg(&x);
    let lead = x[d].clone();
    x.iter().map(|c| c.try_div(&lead).unwrap()).collect()
}

fn poly_mul_univ(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); poly_deg(a) + poly_deg(b) + 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ca * cb);
        }
    }
    out
}

fn poly_lcm(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if poly_deg(a) == 0 {
        return b.to_vec();
    }
    if poly_deg(b) == 0 {
        return a.to_vec();
    }
    let g = poly_gcd_univ(a, b);
    let (q, _) = poly_divmod(&poly_mul_univ(a, b), &g);
    let d = poly_deg(&q);
    let lead = q[d].clone();
    q[..=d]
        .iter()
        .map(|c| c.try_div(&lead).unwrap())
        .collect()
}

/// Roots of a monic polynomial of degree one or two that splits over the
/// field (degree two via an exact square root of the discriminant).
fn poly_roots(p: &[Scalar]) -> Option<Vec<Scalar>> {
    match poly_deg(p) {
        1 => Some(vec![-&p[0]]),
        2 => {
            let b = p[1].clone();
            let c = p[0].clone();
            let disc = &(&b * &b) - &(&c * &Scalar::from_int(4));
            let sq = disc.sqrt()?;
            let two = Scalar::from_int(2);
            let r1 = (&(&-&b + &sq)).try_div(&two).ok()?;
            let r2 = (&(&-&b - &sq)).try_div(&two).ok()?;
            if r1 == r2 {
                Some(vec![r1])
            } else {
                Some(vec![r1, r2])
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmodules::{evaluate, natural_rep_finite};
    use crate::scalars::parse_scalar;

    #[test]
    fn gauss_k_series_of_natural_evaluation_gl11() {
        let rep = evaluate(&natural_rep_finite(1, 1), &Scalar::sym("a"));
        let ks = gauss_decompose(&rep).unwrap();
        // K_1 = s_11(z)
        assert_eq!(ks[0].to_dense(), rep.s(1, 1).to_dense());
        // K_2 = s_22 - s_21 s_11^{-1} s_12 is diagonal
        for ((r, c), _) in ks[1].entries() {
            assert_eq!(r, c);
        }
    }

    #[test]
    fn centrality_on_natural_evaluation() {
        for (m, n) in [(1usize, 1usize), (2, 1)] {
            let rep = evaluate(&natural_rep_finite(m, n), &Scalar::sym("a"));
            for k in 1..=(m + n) {
                let rep_ct = check_centrality(&rep, k).unwrap();
                assert!(rep_ct.pass, "({m},{n}) level {k}");
            }
        }
    }

    #[test]
    fn ell_decompose_natural_gl11() {
        // twisted so the character lies on the ell-weight lattice
        let rep = evaluate(&natural_rep_finite(1, 1), &Scalar::sym("a"));
        let g = parse_scalar("1/(1 - z*a)").unwrap();
        let f = parse_scalar("1/(1 - a/z)").unwrap();
        let twisted = rep.twist_by_series(&g, &f);
        let dec = ell_decompose(&twisted).unwrap();
        assert_eq!(dec.spectrum.len(), 2);
        assert!(dec.normalized.is_multiplicity_free());
        // normalized character: 1 + [A_{1,x}]^{-1} shape
        let chi = &dec.normalized;
        assert_eq!(chi.dimension(), 2);
        assert!(chi.terms().contains_key(&crate::lweights::EllMonomial::one()));
    }
}
