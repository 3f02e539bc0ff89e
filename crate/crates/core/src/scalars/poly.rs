//! Multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept sorted in descending graded-lexicographic order with
//! respect to the canonical indeterminate order `q, a, b, kappa, z, w`,
//! followed by extension names in lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An indeterminate name. The six canonical names sort before any
/// extension, extensions sort among themselves by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Q,
    A,
    B,
    Kappa,
    Z,
    W,
    Ext(Arc<str>),
}

impl Var {
    pub fn from_name(name: &str) -> Var {
        match name {
            "q" => Var::Q,
            "a" => Var::A,
            "b" => Var::B,
            "kappa" => Var::Kappa,
            "z" => Var::Z,
            "w" => Var::W,
            other => Var::Ext(Arc::from(other)),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Var::Q => "q",
            Var::A => "a",
            Var::B => "b",
            Var::Kappa => "kappa",
            Var::Z => "z",
            Var::W => "w",
            Var::Ext(s) => s,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power product of indeterminates, sorted by canonical variable order,
/// with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    vars: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { vars: Vec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { vars: vec![(v, 1)] }
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { vars: vec![(v, e)] }
        }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.vars.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn degree_of(&self, v: &Var) -> u32 {
        self.vars
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.vars
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            match self.vars[i].0.cmp(&other.vars[j].0) {
                Ordering::Less => {
                    vars.push(self.vars[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    vars.push(other.vars[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    vars.push((self.vars[i].0.clone(), self.vars[i].1 + other.vars[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        vars.extend_from_slice(&self.vars[i..]);
        vars.extend_from_slice(&other.vars[j..]);
        Monomial { vars }
    }

    /// Componentwise minimum, the gcd of two power products.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::new();
        for (v, e) in &self.vars {
            let f = other.degree_of(v);
            let m = (*e).min(f);
            if m > 0 {
                vars.push((v.clone(), m));
            }
        }
        Monomial { vars }
    }

    /// Exact quotient; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut vars = Vec::new();
        for (v, e) in &self.vars {
            let f = other.degree_of(v);
            if f > *e {
                return None;
            }
            if e - f > 0 {
                vars.push((v.clone(), e - f));
            }
        }
        // every factor of `other` must be matched
        for (v, f) in &other.vars {
            if *f > self.degree_of(v) {
                return None;
            }
        }
        Some(Monomial { vars })
    }

    pub fn without_var(&self, v: &Var) -> Monomial {
        Monomial {
            vars: self
                .vars
                .iter()
                .filter(|(w, _)| w != v)
                .cloned()
                .collect(),
        }
    }

    /// Graded lexicographic comparison: total degree first, then the
    /// exponent of the canonically earliest variable wins.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            match self.vars[i].0.cmp(&other.vars[j].0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match self.vars[i].1.cmp(&other.vars[j].1) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        if i < self.vars.len() {
            Ordering::Greater
        } else if j < other.vars.len() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

/// Multivariate polynomial with `BigRational` coefficients. Terms are held
/// in strictly descending monomial order, coefficients never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigRational)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn from_int(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Poly {
        Poly {
            terms: vec![(Monomial::var(v), BigRational::one())],
        }
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    /// Builds a polynomial from unsorted, possibly repeated terms.
    pub fn from_terms(mut terms: Vec<(Monomial, BigRational)>) -> Poly {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Poly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant value when `self` has no indeterminates.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: Vec<(Monomial, BigRational)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                acc.push((m1.mul(m2), c1 * c2));
            }
        }
        Poly::from_terms(acc)
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree_in(&self, v: &Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_of(v))
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: &Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_of(v))
            .min()
            .unwrap_or(0)
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.iter().any(|(m, _)| m.degree_of(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for (m, _) in &self.terms {
            for (v, _) in m.factors() {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// Coefficients with respect to `v`: entry `k` is the coefficient of
    /// `v^k` as a polynomial in the remaining variables.
    pub fn coeffs_wrt(&self, v: &Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.degree_of(v) as usize;
            let rest = m.without_var(v);
            out[e] = out[e].add(&Poly::monomial(rest, c.clone()));
        }
        out
    }

    /// Rebuilds a polynomial from coefficients with respect to `v`.
    pub fn from_coeffs_wrt(v: &Var, coeffs: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            acc = acc.add(&c.mul_term(&Monomial::var_pow(v.clone(), e as u32), &BigRational::one()));
        }
        acc
    }

    /// Common monomial factor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let mut acc = match it.next() {
            Some((m, _)) => m.clone(),
            None => return Monomial::one(),
        };
        for (m, _) in it {
            acc = acc.gcd(m);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Exact division; returns `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        if other.is_zero() {
            return None;
        }
        if other.is_one() {
            return Some(self.clone());
        }
        if let Some(c) = other.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, BigRational)> = Vec::new();
        let (lm, lc) = other.leading().unwrap();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            quo.push((qm.clone(), qc.clone()));
            rem = rem.sub(&other.mul_term(&qm, &qc));
        }
        Some(Poly::from_terms(quo))
    }

    /// Substitutes an integer value for `v` (used by degree probes).
    pub fn eval_var_int(&self, v: &Var, value: i64) -> Poly {
        let val = BigRational::from_integer(BigInt::from(value));
        let mut acc: Vec<(Monomial, BigRational)> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.degree_of(v);
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= &val;
            }
            acc.push((m.without_var(v), coeff));
        }
        Poly::from_terms(acc)
    }

    /// Pseudo-remainder of `self` by `other` with respect to `v`.
    fn prem(&self, other: &Poly, v: &Var) -> Poly {
        let d = other.degree_in(v);
        let lc_g = other.coeffs_wrt(v).pop().unwrap();
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= d {
            let e = r.degree_in(v);
            let lc_r = r.coeffs_wrt(v).pop().unwrap();
            // r := lc_g * r - lc_r * v^(e-d) * g
            let shift = Poly::monomial(Monomial::var_pow(v.clone(), e - d), BigRational::one());
            r = r.mul(&lc_g).sub(&other.mul(&lc_r).mul(&shift));
            debug_assert!(r.is_zero() || r.degree_in(v) < e);
        }
        r
    }

    /// Content with respect to `v`: gcd of the coefficient polynomials.
    fn content_wrt(&self, v: &Var) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs_wrt(v) {
            if c.is_zero() {
                continue;
            }
            acc = Poly::gcd(&acc, &c);
            if acc.is_constant() && !acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Normalizes so the leading coefficient (full graded-lex order) is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&(BigRational::one() / c)),
        }
    }

    /// Exact square root, when one exists.
    pub fn sqrt(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = self.as_constant() {
            return rational_sqrt(&c).map(Poly::constant);
        }
        let v = self.vars().into_iter().max().unwrap();
        let d = self.degree_in(&v);
        if d % 2 != 0 {
            return None;
        }
        let coeffs = self.coeffs_wrt(&v);
        let half = (d / 2) as usize;
        let mut root = vec![Poly::zero(); half + 1];
        root[half] = coeffs[d as usize].sqrt()?;
        let lead2 = root[half].scale(&BigRational::from_integer(BigInt::from(2)));
        for j in (0..half).rev() {
            // coefficient of v^{half + j} in root^2
            let mut acc = Poly::zero();
            for s in (j + 1)..=half {
                let t = half + j - s;
                if t > half || t <= j {
                    continue;
                }
                acc = acc.add(&root[s].mul(&root[t]));
            }
            let target = coeffs
                .get(half + j)
                .cloned()
                .unwrap_or_else(Poly::zero)
                .sub(&acc);
            root[j] = target.div_exact(&lead2)?;
        }
        let candidate = Poly::from_coeffs_wrt(&v, &root);
        if candidate.mul(&candidate) == *self {
            Some(candidate)
        } else {
            None
        }
    }

    /// Polynomial gcd over the rationals, computed by content/primitive-part
    /// recursion with pseudo-remainder sequences. The result is monic with
    /// respect to the graded-lex leading term.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        // strip common power products first
        let ma = a.monomial_content();
        let mb = b.monomial_content();
        let mg = ma.gcd(&mb);
        let a1 = a.div_exact(&Poly::monomial(ma, BigRational::one())).unwrap();
        let b1 = b.div_exact(&Poly::monomial(mb, BigRational::one())).unwrap();
        let core = Poly::gcd_stripped(&a1, &b1);
        core.mul_term(&mg, &BigRational::one()).monic()
    }

    fn gcd_stripped(a: &Poly, b: &Poly) -> Poly {
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        // main variable: canonically last one present in either
        let va = a.vars();
        let vb = b.vars();
        let v = va.iter().chain(vb.iter()).max().unwrap().clone();
        if !a.contains_var(&v) || !b.contains_var(&v) {
            // v appears in only one argument: gcd divides the content of that one
            let (with, without) = if a.contains_var(&v) { (a, b) } else { (b, a) };
            return Poly::gcd(&with.content_wrt(&v), without);
        }
        let ca = a.content_wrt(&v);
        let cb = b.content_wrt(&v);
        let pa = a.div_exact(&ca).unwrap();
        let pb = b.div_exact(&cb).unwrap();
        let cg = Poly::gcd(&ca, &cb);
        // primitive PRS in v: each pseudo-remainder is reduced to its
        // primitive part, keeping the chain small
        let (mut r0, mut r1) = if pa.degree_in(&v) >= pb.degree_in(&v) {
            (pa, pb)
        } else {
            (pb, pa)
        };
        loop {
            let rem = r0.prem(&r1, &v);
            if rem.is_zero() {
                break;
            }
            if rem.degree_in(&v) == 0 {
                r1 = Poly::one();
                break;
            }
            let cont = rem.content_wrt(&v);
            r0 = r1;
            r1 = rem.div_exact(&cont).unwrap();
        }
        if r1.degree_in(&v) == 0 {
            return cg;
        }
        let prim = r1.div_exact(&r1.content_wrt(&v)).unwrap();
        cg.mul(&prim)
    }
}

fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    let cand = BigRational::new(n, d);
    if &(&cand * &cand) == c {
        Some(cand)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn z() -> Poly {
        Poly::var(Var::Z)
    }

    #[test]
    fn grlex_order_examples() {
        // q^2 > q*z > z^2? grlex: same degree, earlier variable with larger exponent wins
        let q2 = Monomial::var_pow(Var::Q, 2);
        let qz = Monomial::var(Var::Q).mul(&Monomial::var(Var::Z));
        let z2 = Monomial::var_pow(Var::Z, 2);
        assert!(q2 > qz);
        assert!(qz > z2);
        assert!(q2 > Monomial::var(Var::Q)); // higher total degree
    }

    #[test]
    fn mul_and_div_roundtrip() {
        let p = q().mul(&q()).sub(&Poly::one()); // q^2 - 1
        let d = q().sub(&Poly::one()); // q - 1
        let f = p.div_exact(&d).unwrap();
        assert_eq!(f, q().add(&Poly::one()));
        assert!(p.div_exact(&z()).is_none());
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((q^2-1)*z, (q-1)*(z+1)) = q - 1 up to monic normalization
        let a = q().mul(&q()).sub(&Poly::one()).mul(&z());
        let b = q().sub(&Poly::one()).mul(&z().add(&Poly::one()));
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, q().sub(&Poly::one()));
    }

    #[test]
    fn gcd_with_monomial_content() {
        let a = q().mul(&z()); // q z
        let b = q().mul(&q()); // q^2
        assert_eq!(Poly::gcd(&a, &b), q());
    }

    #[test]
    fn coeffs_roundtrip() {
        let p = q().mul(&z()).add(&z().mul(&z())).add(&Poly::one());
        let cs = p.coeffs_wrt(&Var::Z);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_wrt(&Var::Z, &cs), p);
    }
}
