//! Spectral lattice bookkeeping: points `base * q^n` on multiplicative
//! lattices with symbolic bases, and rational functions in `z` factored
//! into linear forms `1 - z * point` with unit prefactors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::scalars::{Scalar, Var};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpectralError {
    /// A value does not factor over the lattice of monomial points.
    OffLattice(String),
    /// A tuple is not a product of the generating symbols.
    NotInSymbolGroup(String),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::OffLattice(s) => write!(f, "off-lattice value: {s}"),
            SpectralError::NotInSymbolGroup(s) => write!(f, "not in the symbol lattice: {s}"),
        }
    }
}

impl std::error::Error for SpectralError {}

/// A signed power product of non-`q` symbols, the base of a spectral
/// lattice `base * q^Z`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Base {
    negative: bool,
    factors: BTreeMap<String, i32>,
}

impl Base {
    pub fn one() -> Base {
        Base::default()
    }

    pub fn symbol(name: &str) -> Base {
        let mut factors = BTreeMap::new();
        factors.insert(name.to_string(), 1);
        Base {
            negative: false,
            factors,
        }
    }

    pub fn mul(&self, other: &Base) -> Base {
        let mut factors = self.factors.clone();
        for (k, v) in &other.factors {
            let e = factors.entry(k.clone()).or_insert(0);
            *e += v;
            if *e == 0 {
                factors.remove(k);
            }
        }
        Base {
            negative: self.negative ^ other.negative,
            factors,
        }
    }

    pub fn pow(&self, e: i32) -> Base {
        Base {
            negative: self.negative && e % 2 != 0,
            factors: self
                .factors
                .iter()
                .filter(|(_, v)| **v * e != 0)
                .map(|(k, v)| (k.clone(), v * e))
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.factors.is_empty()
    }

    pub fn to_scalar(&self) -> Scalar {
        let mut acc = if self.negative {
            -&Scalar::one()
        } else {
            Scalar::one()
        };
        for (name, e) in &self.factors {
            acc = &acc * &Scalar::sym(name).pow_int(*e as i64);
        }
        acc
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A lattice point `base * q^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SpectralPoint {
    pub base: Base,
    pub qexp: i64,
}

impl SpectralPoint {
    pub fn new(base: Base, qexp: i64) -> SpectralPoint {
        SpectralPoint { base, qexp }
    }

    pub fn symbol(name: &str) -> SpectralPoint {
        SpectralPoint::new(Base::symbol(name), 0)
    }

    pub fn shift_q(&self, n: i64) -> SpectralPoint {
        SpectralPoint::new(self.base.clone(), self.qexp + n)
    }

    pub fn mul(&self, other: &SpectralPoint) -> SpectralPoint {
        SpectralPoint::new(self.base.mul(&other.base), self.qexp + other.qexp)
    }

    pub fn to_scalar(&self) -> Scalar {
        &self.base.to_scalar() * &Scalar::q_pow(self.qexp)
    }

    /// Reads a lattice point off a scalar that is a signed power product.
    pub fn from_unit_scalar(s: &Scalar) -> Result<SpectralPoint, SpectralError> {
        let err = || SpectralError::OffLattice(format!("{s}"));
        if s.is_zero() {
            return Err(err());
        }
        let num = s.numerator();
        let den = s.denominator();
        if num.terms().len() != 1 || den.terms().len() != 1 {
            return Err(err());
        }
        let (mn, cn) = &num.terms()[0];
        let (md, cd) = &den.terms()[0];
        let coeff = cn / cd;
        let negative = if coeff == num_rational::BigRational::one() {
            false
        } else if coeff == -num_rational::BigRational::one() {
            true
        } else {
            return Err(err());
        };
        let mut qexp = 0i64;
        let mut factors: BTreeMap<String, i32> = BTreeMap::new();
        for (v, e) in mn.factors() {
            match v {
                Var::Q => qexp += *e as i64,
                other => {
                    *factors.entry(other.name().to_string()).or_insert(0) += *e as i32;
                }
            }
        }
        for (v, e) in md.factors() {
            match v {
                Var::Q => qexp -= *e as i64,
                other => {
                    *factors.entry(other.name().to_string()).or_insert(0) -= *e as i32;
                }
            }
        }
        factors.retain(|_, v| *v != 0);
        Ok(SpectralPoint::new(Base { negative, factors }, qexp))
    }
}

impl fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_one() {
            match self.qexp {
                0 => write!(f, "1"),
                1 => write!(f, "q"),
                e => write!(f, "q^{e}"),
            }
        } else {
            match self.qexp {
                0 => write!(f, "{}", self.base),
                1 => write!(f, "{}*q", self.base),
                e => write!(f, "{}*q^{e}", self.base),
            }
        }
    }
}

/// A rational function of `z` in factored lattice form:
/// `unit * prod (1 - z * point)^{exponent}` with `unit` a signed power
/// product free of `z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeRat {
    pub unit: Scalar,
    pub factors: BTreeMap<SpectralPoint, i64>,
}

impl LatticeRat {
    pub fn one() -> LatticeRat {
        LatticeRat {
            unit: Scalar::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn unit(u: Scalar) -> LatticeRat {
        LatticeRat {
            unit: u,
            factors: BTreeMap::new(),
        }
    }

    pub fn linear(point: SpectralPoint) -> LatticeRat {
        let mut factors = BTreeMap::new();
        factors.insert(point, 1);
        LatticeRat {
            unit: Scalar::one(),
            factors,
        }
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_one() && self.factors.is_empty()
    }

    pub fn mul(&self, other: &LatticeRat) -> LatticeRat {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            let v = factors.entry(p.clone()).or_insert(0);
            *v += e;
            if *v == 0 {
                factors.remove(p);
            }
        }
        LatticeRat {
            unit: &self.unit * &other.unit,
            factors,
        }
    }

    pub fn mul_factor(&self, point: SpectralPoint, exp: i64) -> LatticeRat {
        let mut out = self.clone();
        let v = out.factors.entry(point.clone()).or_insert(0);
        *v += exp;
        if *v == 0 {
            out.factors.remove(&point);
        }
        out
    }

    pub fn recip(&self) -> LatticeRat {
        LatticeRat {
            unit: self.unit.recip().expect("unit is invertible"),
            factors: self.factors.iter().map(|(p, e)| (p.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &LatticeRat) -> LatticeRat {
        self.mul(&other.recip())
    }

    pub fn to_scalar(&self) -> Scalar {
        let z = Scalar::z();
        let mut acc = self.unit.clone();
        for (p, e) in &self.factors {
            let lin = &Scalar::one() - &(&z * &p.to_scalar());
            acc = &acc * &lin.pow_int(*e);
        }
        acc
    }

    /// Factors a scalar rational in `z` over the monomial lattice. The
    /// numerator and denominator must split into linear factors
    /// `1 - z * point` with monomial points, up to a unit.
    pub fn from_scalar(s: &Scalar) -> Result<LatticeRat, SpectralError> {
        if s.is_zero() {
            return Err(SpectralError::OffLattice("0".into()));
        }
        let (nu, nf) = factor_poly_in_z(s.numerator().clone())?;
        let (du, df) = factor_poly_in_z(s.denominator().clone())?;
        let mut factors = nf;
        for (p, e) in df {
            let v = factors.entry(p.clone()).or_insert(0);
            *v -= e;
            if *v == 0 {
                factors.remove(&p);
            }
        }
        Ok(LatticeRat {
            unit: nu.try_div(&du).expect("unit division"),
            factors,
        })
    }

    /// The value at `z = 0`, which is the unit.
    pub fn value_at_zero(&self) -> &Scalar {
        &self.unit
    }
}

impl fmt::Display for LatticeRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scalar())
    }
}

/// Splits a polynomial in `z` (over the remaining field) as
/// `unit * prod (1 - z*point)^k`. Root candidates are harvested from the
/// degree-one coefficient, whose terms are sums of the points with
/// positive integer multiplicities.
fn factor_poly_in_z(p: crate::scalars::Poly) -> Result<(Scalar, BTreeMap<SpectralPoint, i64>), SpectralError> {
    let z = Var::Z;
    let mut factors: BTreeMap<SpectralPoint, i64> = BTreeMap::new();
    let mut current = Scalar::from_poly(p);
    let constant = current
        .substitute(&z, &Scalar::zero())
        .map_err(|_| SpectralError::OffLattice("pole at z=0".into()))?;
    if constant.is_zero() {
        return Err(SpectralError::OffLattice(
            "vanishing constant term in z".into(),
        ));
    }
    current = current.try_div(&constant).unwrap();
    loop {
        if !current.contains_var(&z) {
            if !current.is_one() {
                return Err(SpectralError::OffLattice(format!("{current}")));
            }
            return Ok((constant, factors));
        }
        // coefficient of z^1 as a scalar in the remaining variables
        let c1 = current
            .laurent_coeff(&z, 1)
            .map_err(|_| SpectralError::OffLattice("not polynomial in z".into()))?;
        if c1.is_zero() {
            return Err(SpectralError::OffLattice(format!("{current}")));
        }
        // each monomial of -c1 is a candidate point; the reduced denominator
        // of c1 is a single power product whenever the input is on-lattice
        let den = Scalar::from_poly(c1.denominator().clone());
        let mut progressed = false;
        let candidates: Vec<Scalar> = c1
            .numerator()
            .terms()
            .iter()
            .map(|(m, c)| {
                let mono = crate::scalars::Poly::monomial(m.clone(), c.clone());
                (&-&Scalar::from_poly(mono)).try_div(&den).unwrap()
            })
            .collect();
        for cand in candidates {
            // normalize away multiplicity counts: try the pure monomial
            let Some(point_scalar) = as_unit_direction(&cand) else {
                continue;
            };
            let lin = &Scalar::one() - &(&Scalar::z() * &point_scalar);
            while let Ok(q) = current.try_div(&lin) {
                // genuine divisibility: the quotient must be polynomial in z
                // (denominators in the remaining variables are fine)
                if !q.denominator().contains_var(&z) {
                    let point = SpectralPoint::from_unit_scalar(&point_scalar)
                        .map_err(|_| SpectralError::OffLattice(format!("{point_scalar}")))?;
                    *factors.entry(point).or_insert(0) += 1;
                    current = q;
                    progressed = true;
                } else {
                    break;
                }
            }
        }
        if !progressed {
            return Err(SpectralError::OffLattice(format!("{current}")));
        }
    }
}

/// Strips a positive integer multiplicity off a candidate term, keeping
/// only the signed power-product direction.
fn as_unit_direction(s: &Scalar) -> Option<Scalar> {
    if s.is_zero() {
        return None;
    }
    let num = s.numerator();
    let den = s.denominator();
    if num.terms().len() != 1 || den.terms().len() != 1 {
        return None;
    }
    let (mn, cn) = &num.terms()[0];
    let (md, cd) = &den.terms()[0];
    let c = cn / cd;
    let sign = if c.is_one() || c > num_rational::BigRational::from_integer(0.into()) {
        Scalar::one()
    } else {
        -&Scalar::one()
    };
    let mono = Scalar::from_poly(crate::scalars::Poly::monomial(mn.clone(), num_rational::BigRational::one()))
        .try_div(&Scalar::from_poly(crate::scalars::Poly::monomial(
            md.clone(),
            num_rational::BigRational::one(),
        )))
        .unwrap();
    Some(&sign * &mono)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn za_point() -> SpectralPoint {
        SpectralPoint::symbol("a")
    }

    #[test]
    fn point_scalar_roundtrip() {
        let p = za_point().shift_q(3);
        let s = p.to_scalar();
        assert_eq!(SpectralPoint::from_unit_scalar(&s).unwrap(), p);
        let neg = SpectralPoint::new(Base::symbol("a").pow(2).mul(&Base::symbol("b")), -2);
        let s = &-&Scalar::one() * &neg.to_scalar();
        let back = SpectralPoint::from_unit_scalar(&s).unwrap();
        assert!(back.base.negative);
    }

    #[test]
    fn factor_simple_products() {
        // (1 - za)(1 - z a q^2) factors into two lattice points
        let a = Scalar::sym("a");
        let z = Scalar::z();
        let f = &(&Scalar::one() - &(&z * &a))
            * &(&Scalar::one() - &(&(&z * &a) * &Scalar::q_pow(2)));
        let lr = LatticeRat::from_scalar(&f).unwrap();
        assert!(lr.unit.is_one());
        assert_eq!(lr.factors.len(), 2);
        assert_eq!(lr.to_scalar(), f);
    }

    #[test]
    fn factor_with_unit_and_multiplicity() {
        // q^2 (1 - za)^2 / (1 - z a q^-2)
        let a = Scalar::sym("a");
        let z = Scalar::z();
        let num = &Scalar::q_pow(2) * &(&Scalar::one() - &(&z * &a)).pow_int(2);
        let den = &Scalar::one() - &(&(&z * &a) * &Scalar::q_pow(-2));
        let f = num.try_div(&den).unwrap();
        let lr = LatticeRat::from_scalar(&f).unwrap();
        assert_eq!(lr.unit, Scalar::q_pow(2));
        assert_eq!(lr.factors.get(&za_point()), Some(&2));
        assert_eq!(lr.factors.get(&za_point().shift_q(-2)), Some(&-1));
        assert_eq!(lr.to_scalar(), f);
    }

    #[test]
    fn off_lattice_is_rejected() {
        // 1 + z a + z^2 does not factor into monomial roots
        let f = &(&Scalar::one() + &(&Scalar::z() * &Scalar::sym("a")))
            + &Scalar::z().pow_int(2);
        assert!(LatticeRat::from_scalar(&f).is_err());
    }

    #[test]
    fn factorization_handles_q_binomials() {
        // q - z a q^-1 = q (1 - z a q^-2)
        let f = &Scalar::q() - &(&(&Scalar::z() * &Scalar::sym("a")) * &Scalar::q_pow(-1));
        let lr = LatticeRat::from_scalar(&f).unwrap();
        assert_eq!(lr.unit, Scalar::q());
        assert_eq!(lr.factors.get(&za_point().shift_q(-2)), Some(&1));
    }
}
