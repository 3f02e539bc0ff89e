use glmn_core::scalars::{Monomial, Poly, Scalar, Var};
use std::time::Instant;

struct Lcg(u64);
impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
    fn range(&mut self, n: u64) -> u64 { self.next() % n }
}

fn arb_poly(rng: &mut Lcg) -> Poly {
    let nterms = 1 + rng.range(2) as usize;
    let mut acc = Poly::zero();
    for _ in 0..nterms {
        let c = rng.range(9) as i64 - 4;
        let mut m = Monomial::one();
        m = m.mul(&Monomial::var_pow(Var::Q, rng.range(3) as u32));
        m = m.mul(&Monomial::var_pow(Var::A, rng.range(2) as u32));
        m = m.mul(&Monomial::var_pow(Var::Z, rng.range(2) as u32));
        acc = acc.add(&Poly::monomial(m, num_rational::BigRational::from_integer(c.into())));
    }
    acc
}

fn arb_den(rng: &mut Lcg) -> Poly {
    match rng.range(5) {
        0 => Poly::one(),
        1 => Poly::var(Var::Q).pow(1 + rng.range(2) as u32),
        2 => Poly::one().sub(&Poly::var(Var::Z).mul(&Poly::var(Var::A))),
        3 => Poly::var(Var::Q).sub(&Poly::var(Var::Z)),
        _ => Poly::one().sub(&Poly::var(Var::Z).mul(&Poly::var(Var::A)).mul(&Poly::var(Var::Q).pow(1 + rng.range(2) as u32))),
    }
}

fn arb_scalar(rng: &mut Lcg) -> Scalar {
    Scalar::from_fraction(arb_poly(rng), arb_den(rng)).unwrap()
}

fn main() {
    let mut rng = Lcg(42);
    for case in 0..200 {
        let x = arb_scalar(&mut rng);
        let y = arb_scalar(&mut rng);
        let z = arb_scalar(&mut rng);
        let t = Instant::now();
        assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            assert!((&x * &x.recip().unwrap()).is_one());
        }
        let dt = t.elapsed();
        if dt.as_millis() > 200 {
            eprintln!("case {case}: {dt:.2?}  x={x} y={y} z={z}");
        }
    }
    eprintln!("all done");
}
