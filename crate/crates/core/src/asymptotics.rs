//! The kappa-parametric Kirillov-Reshetikhin families with explicit
//! matrices (the four-dimensional `gl(2,1)` node-2 family and the
//! two-dimensional `gl(1,1)` prime modules), their tilde/hat asymptotic
//! generators, the limits that produce prefundamental-type modules, the
//! generic one-parameter evaluation, the Laurent-window audit in kappa,
//! and the parity flip to `gl(N,M)`.

use std::fmt;

use crate::repmodules::{parity_of, RepError, Representation};
use crate::scalars::{LimitDir, Scalar, ScalarError, Var};
use crate::superlinalg::{GradedMatrix, SuperSpace};
use crate::youngcomb::Weight;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyVariant {
    /// levels at fixed spectral point `a`, corrections in negative powers
    Minus,
    /// levels at the sliding point `a q^{2k}`, corrections in positive powers
    Plus,
}

impl fmt::Display for FamilyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyVariant::Minus => write!(f, "minus"),
            FamilyVariant::Plus => write!(f, "plus"),
        }
    }
}

/// A family of modules depending polynomially on `kappa` (standing for
/// `q^k`), with the weight drops `beta` of the basis from the level-`k`
/// highest weight.
#[derive(Clone, Debug)]
pub struct ParametricRep {
    pub rep: Representation,
    pub r: usize,
    pub variant: FamilyVariant,
    /// weight drops from `k varpi_r`, one per basis vector
    pub beta: Vec<Weight>,
}

#[derive(Clone, Debug)]
pub enum AsymptoticError {
    Rep(RepError),
    Scalar(ScalarError),
    /// A generator entry escapes the allowed Laurent window in kappa.
    KappaWindow {
        generator: (char, usize, usize),
        range: (i64, i64),
        window: (i64, i64),
    },
}

impl fmt::Display for AsymptoticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AsymptoticError::Rep(e) => write!(f, "{e}"),
            AsymptoticError::Scalar(e) => write!(f, "{e}"),
            AsymptoticError::KappaWindow {
                generator,
                range,
                window,
            } => write!(
                f,
                "{}({},{}) has kappa-range {:?} outside {:?}",
                generator.0, generator.1, generator.2, range, window
            ),
        }
    }
}

impl std::error::Error for AsymptoticError {}

impl From<RepError> for AsymptoticError {
    fn from(e: RepError) -> Self {
        AsymptoticError::Rep(e)
    }
}

impl From<ScalarError> for AsymptoticError {
    fn from(e: ScalarError) -> Self {
        AsymptoticError::Scalar(e)
    }
}

fn kappa() -> Scalar {
    Scalar::var(Var::Kappa)
}

/// The explicit four-dimensional `gl(2,1)` node-2 family, with `q^k`
/// replaced by `kappa`. The minus variant carries the spectral point `a`
/// and `t = -z^{-1} a^{-1} s`; the plus variant carries `a q^{2k}` with
/// `t = -z^{-1} a^{-1} kappa^{-2} s`.
pub fn gl21_family(variant: FamilyVariant, a: &Scalar) -> ParametricRep {
    let (m, n) = (2usize, 1usize);
    let beta = vec![
        Weight::new(2, 1, vec![0, 0, 0]),
        Weight::new(2, 1, vec![0, 1, -1]),
        Weight::new(2, 1, vec![1, 0, -1]),
        Weight::new(2, 1, vec![1, 1, -2]),
    ];
    let labels: Vec<Vec<i64>> = beta.iter().map(|b| b.neg().coords().to_vec()).collect();
    let space = SuperSpace::new(vec![
        crate::superlinalg::Parity::Even,
        crate::superlinalg::Parity::Odd,
        crate::superlinalg::Parity::Odd,
        crate::superlinalg::Parity::Even,
    ])
    .with_weights(labels);
    let k = kappa();
    let kinv = k.recip().unwrap();
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let z = Scalar::z();
    let za = &z * a;
    let qq = &q - &qinv; // q - q^-1
    let qq2 = qq.pow_int(2);

    // e(r, c) places a scalar at the elementary slot E_{rc} (1-based)
    let mat = |entries: &[((usize, usize), Scalar)], i: usize, j: usize| {
        let mut out =
            GradedMatrix::zero(space.clone(), space.clone()).with_parity(parity_of(m, i, j));
        for ((r, c), v) in entries {
            out.set(r - 1, c - 1, v.clone());
        }
        out
    };

    let (s11, s22, s33, s12, s13, s23, s21, s31, s32) = match variant {
        FamilyVariant::Minus => {
            let d_top = &k - &(&za * &kinv); // kappa - z a kappa^-1
            let d_low = &(&k * &qinv) - &(&(&za * &q) * &kinv);
            (
                mat(
                    &[
                        ((1, 1), d_top.clone()),
                        ((2, 2), d_top.clone()),
                        ((3, 3), d_low.clone()),
                        ((4, 4), d_low.clone()),
                    ],
                    1,
                    1,
                ),
                mat(
                    &[
                        ((1, 1), d_top.clone()),
                        ((3, 3), d_top.clone()),
                        ((2, 2), d_low.clone()),
                        ((4, 4), d_low.clone()),
                    ],
                    2,
                    2,
                ),
                mat(
                    &[
                        ((1, 1), &Scalar::one() - &za),
                        ((2, 2), &qinv - &(&za * &q)),
                        ((3, 3), &qinv - &(&za * &q)),
                        ((4, 4), &Scalar::q_pow(-2) - &(&za * &Scalar::q_pow(2))),
                    ],
                    3,
                    3,
                ),
                mat(&[((2, 3), k.clone())], 1, 2),
                mat(
                    &[
                        ((2, 4), (&qinv).try_div(&qq).unwrap()),
                        ((1, 3), -&(&qinv).try_div(&qq).unwrap()),
                    ],
                    1,
                    3,
                ),
                mat(
                    &[((1, 2), qinv.clone()), ((3, 4), Scalar::q_pow(-2))],
                    2,
                    3,
                ),
                mat(&[((3, 2), &(&za * &qq2) * &kinv)], 2, 1),
                mat(
                    &[
                        (
                            (4, 2),
                            &(&(&za * &q) * &qq2) * &(&(&k * &q) - &(&kinv * &qinv)),
                        ),
                        ((3, 1), -&(&(&(&za * &q) * &qq2) * &(&k - &kinv))),
                    ],
                    3,
                    1,
                ),
                mat(
                    &[
                        ((2, 1), &(&(&za * &q) * &qq) * &(&k - &kinv)),
                        (
                            (4, 3),
                            &(&(&za * &Scalar::q_pow(2)) * &qq)
                                * &(&(&k * &q) - &(&kinv * &qinv)),
                        ),
                    ],
                    3,
                    2,
                ),
            )
        }
        FamilyVariant::Plus => {
            let k2 = &k * &k;
            let d_top = &k - &(&za * &k);
            let d_low = &(&k * &qinv) - &(&(&za * &k) * &q);
            (
                mat(
                    &[
                        ((1, 1), d_top.clone()),
                        ((2, 2), d_top.clone()),
                        ((3, 3), d_low.clone()),
                        ((4, 4), d_low.clone()),
                    ],
                    1,
                    1,
                ),
                mat(
                    &[
                        ((1, 1), d_top.clone()),
                        ((3, 3), d_top.clone()),
                        ((2, 2), d_low.clone()),
                        ((4, 4), d_low.clone()),
                    ],
                    2,
                    2,
                ),
                mat(
                    &[
                        ((1, 1), &Scalar::one() - &(&za * &k2)),
                        ((2, 2), &qinv - &(&(&za * &k2) * &q)),
                        ((3, 3), &qinv - &(&(&za * &k2) * &q)),
                        (
                            (4, 4),
                            &Scalar::q_pow(-2) - &(&(&za * &k2) * &Scalar::q_pow(2)),
                        ),
                    ],
                    3,
                    3,
                ),
                mat(&[((2, 3), k.clone())], 1, 2),
                mat(
                    &[
                        ((2, 4), (&(&k * &q)).try_div(&qq).unwrap()),
                        ((1, 3), -&(&k).try_div(&qq).unwrap()),
                    ],
                    1,
                    3,
                ),
                mat(&[((1, 2), k.clone()), ((3, 4), k.clone())], 2, 3),
                mat(&[((3, 2), &(&za * &k) * &qq2)], 2, 1),
                mat(
                    &[
                        (
                            (4, 2),
                            &(&(&(&za * &k) * &qinv) * &qq2)
                                * &(&(&k * &q) - &(&kinv * &qinv)),
                        ),
                        ((3, 1), -&(&(&(&za * &k) * &qq2) * &(&k - &kinv))),
                    ],
                    3,
                    1,
                ),
                mat(
                    &[
                        ((2, 1), &(&(&za * &k) * &qq) * &(&k - &kinv)),
                        (
                            (4, 3),
                            &(&(&za * &k) * &qq) * &(&(&k * &q) - &(&kinv * &qinv)),
                        ),
                    ],
                    3,
                    2,
                ),
            )
        }
    };
    let zero = |i: usize, j: usize| mat(&[], i, j);
    let s = vec![
        vec![s11, s12, s13],
        vec![s21, s22, s23],
        vec![s31, s32, s33.clone()],
    ];
    let _ = zero;
    // t_{ij}(z) from the evaluation structure of the family
    let tfactor = match variant {
        FamilyVariant::Minus => -&(&z * a).recip().unwrap(),
        FamilyVariant::Plus => {
            let k2inv = kappa().pow_int(-2);
            &(-&(&z * a).recip().unwrap()) * &k2inv
        }
    };
    let t = s
        .iter()
        .map(|row| row.iter().map(|mat| mat.scale(&tfactor)).collect())
        .collect();
    ParametricRep {
        rep: Representation::new(m, n, space, s, Some(t)),
        r: 2,
        variant,
        beta,
    }
}

/// The two-dimensional prime module of the `gl(1,1)` q-Yangian with
/// highest ell-weight `(1-za)/(1-zb)`.
pub fn gl11_prime(a: &Scalar, b: &Scalar) -> Representation {
    let space = SuperSpace::standard(1, 1).with_weights(vec![vec![0, 0], vec![-1, 1]]);
    let z = Scalar::z();
    let za = &z * a;
    let zb = &z * b;
    let den = &Scalar::one() - &zb;
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let mut s11 = GradedMatrix::zero(space.clone(), space.clone())
        .with_parity(crate::superlinalg::Parity::Even);
    s11.set(0, 0, (&(&Scalar::one() - &za)).try_div(&den).unwrap());
    s11.set(1, 1, (&(&qinv - &(&za * &q))).try_div(&den).unwrap());
    let mut s12 = GradedMatrix::zero(space.clone(), space.clone())
        .with_parity(crate::superlinalg::Parity::Odd);
    s12.set(
        0,
        1,
        (&(&(&qinv - &q) * &(b - a))).try_div(&den).unwrap(),
    );
    let mut s21 = GradedMatrix::zero(space.clone(), space.clone())
        .with_parity(crate::superlinalg::Parity::Odd);
    s21.set(1, 0, (&(-&z)).try_div(&den).unwrap());
    let mut s22 = GradedMatrix::zero(space.clone(), space.clone())
        .with_parity(crate::superlinalg::Parity::Even);
    s22.set(0, 0, Scalar::one());
    s22.set(1, 1, (&(&qinv - &(&zb * &q))).try_div(&den).unwrap());
    let s = vec![vec![s11, s12], vec![s21, s22]];
    Representation::new(1, 1, space, s, None)
}

/// The tilde generators `s~_{ij}(z) = s_{ij}(z) (s_{jj}^{(0)})^{-1}`.
pub fn tilde_generators(rep: &Representation) -> Result<Vec<Vec<GradedMatrix>>, AsymptoticError> {
    let dim = rep.generator_dim();
    let mut out = Vec::with_capacity(dim);
    for i in 1..=dim {
        let mut row = Vec::with_capacity(dim);
        for j in 1..=dim {
            let s0inv = rep.s_constant(j, j)?.inverse().map_err(RepError::from)?;
            row.push(rep.s(i, j).matmul(&s0inv).map_err(RepError::from)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// The hat generators `s^_{ij}(z) = (s_{ii}^{(0)})^{-1} s_{ij}(z)`.
pub fn hat_generators(rep: &Representation) -> Result<Vec<Vec<GradedMatrix>>, AsymptoticError> {
    let dim = rep.generator_dim();
    let mut out = Vec::with_capacity(dim);
    for i in 1..=dim {
        let s0inv = rep.s_constant(i, i)?.inverse().map_err(RepError::from)?;
        let mut row = Vec::with_capacity(dim);
        for j in 1..=dim {
            row.push(s0inv.matmul(rep.s(i, j)).map_err(RepError::from)?);
        }
        out.push(row);
    }
    Ok(out)
}

fn kappa_free_part(
    mats: &[Vec<GradedMatrix>],
    dir: LimitDir,
) -> Result<Vec<Vec<GradedMatrix>>, AsymptoticError> {
    let check_range = |v: &Scalar| -> Result<(), AsymptoticError> {
        let (lo, hi) = v.laurent_degree_range(&Var::Kappa)?;
        let ok = match dir {
            LimitDir::ToInfinity => hi <= 0,
            LimitDir::ToZero => lo >= 0,
        };
        if !ok {
            return Err(AsymptoticError::KappaWindow {
                generator: ('s', 0, 0),
                range: (lo, hi),
                window: match dir {
                    LimitDir::ToInfinity => (i64::MIN, 0),
                    LimitDir::ToZero => (0, i64::MAX),
                },
            });
        }
        Ok(())
    };
    mats.iter()
        .map(|row| {
            row.iter()
                .map(|mat| {
                    let mut out = GradedMatrix::zero(mat.target().clone(), mat.source().clone());
                    for ((r, c), v) in mat.entries() {
                        check_range(v)?;
                        out.set(*r, *c, v.limit(&Var::Kappa, dir)?);
                    }
                    Ok(match mat.parity() {
                        Some(p) => out.with_parity(p),
                        None => out,
                    })
                })
                .collect()
        })
        .collect()
}

/// Diagonal matrix `q^{(eps_i, -beta_v)}` over the basis.
fn weight_diagonal(p: &ParametricRep, i: usize) -> GradedMatrix {
    let space = &p.rep.space;
    let mut out = GradedMatrix::identity(space);
    let eps = Weight::eps(p.rep.m, p.rep.n, i);
    for (v, b) in p.beta.iter().enumerate() {
        out.set(v, v, Scalar::q_pow(-eps.pair(b)));
    }
    out
}

/// The stable limit of the minus system: the kappa-free part of the tilde
/// generators, reassembled into a q-Yangian module through the root-lattice
/// grading of the basis.
pub fn limit_minus(p: &ParametricRep) -> Result<Representation, AsymptoticError> {
    let tilde = tilde_generators(&p.rep)?;
    let a = kappa_free_part(&tilde, LimitDir::ToInfinity)?;
    let dim = p.rep.generator_dim();
    let mut s = Vec::with_capacity(dim);
    for i in 1..=dim {
        let mut row = Vec::with_capacity(dim);
        for j in 1..=dim {
            let dj = weight_diagonal(p, j);
            row.push(
                a[i - 1][j - 1]
                    .matmul(&dj)
                    .map_err(RepError::from)?
                    .with_parity(parity_of(p.rep.m, i, j)),
            );
        }
        s.push(row);
    }
    Ok(Representation::new(
        p.rep.m,
        p.rep.n,
        p.rep.space.clone(),
        s,
        None,
    ))
}

/// The stable limit of the plus system: the kappa-free part of the hat
/// generators, reassembled on the other side.
pub fn limit_plus(p: &ParametricRep) -> Result<Representation, AsymptoticError> {
    let hat = hat_generators(&p.rep)?;
    let a = kappa_free_part(&hat, LimitDir::ToZero)?;
    let dim = p.rep.generator_dim();
    let mut s = Vec::with_capacity(dim);
    for i in 1..=dim {
        let di = weight_diagonal(p, i);
        let mut row = Vec::with_capacity(dim);
        for j in 1..=dim {
            row.push(
                di.matmul(&a[i - 1][j - 1])
                    .map_err(RepError::from)?
                    .with_parity(parity_of(p.rep.m, i, j)),
            );
        }
        s.push(row);
    }
    Ok(Representation::new(
        p.rep.m,
        p.rep.n,
        p.rep.space.clone(),
        s,
        None,
    ))
}

/// The generic evaluation: substitutes `kappa -> b`, producing a module of
/// the full algebra.
pub fn generic_eval(p: &ParametricRep, b: &Scalar) -> Result<Representation, AsymptoticError> {
    Ok(p.rep.substitute(&Var::Kappa, b)?)
}

/// Report of the kappa-window audit.
#[derive(Clone, Debug)]
pub struct KappaAuditReport {
    pub window: (i64, i64),
    pub pass: bool,
    pub violations: Vec<((char, usize, usize), (i64, i64))>,
}

/// Checks that every generator entry is a Laurent polynomial in kappa with
/// exponents inside the window.
pub fn kappa_degree_audit(rep: &Representation, window: (i64, i64)) -> Result<KappaAuditReport, AsymptoticError> {
    let dim = rep.generator_dim();
    let mut violations = Vec::new();
    let mut scan = |kind: char, i: usize, j: usize, mat: &GradedMatrix| -> Result<(), AsymptoticError> {
        let mut lo = 0i64;
        let mut hi = 0i64;
        let mut any = false;
        for (_, v) in mat.entries() {
            let (l, h) = v.laurent_degree_range(&Var::Kappa)?;
            lo = lo.min(l);
            hi = hi.max(h);
            any = true;
        }
        if any && (lo < window.0 || hi > window.1) {
            violations.push(((kind, i, j), (lo, hi)));
        }
        Ok(())
    };
    for i in 1..=dim {
        for j in 1..=dim {
            scan('s', i, j, rep.s(i, j))?;
            if let Some(t) = rep.t(i, j) {
                scan('t', i, j, t)?;
            }
        }
    }
    Ok(KappaAuditReport {
        window,
        pass: violations.is_empty(),
        violations,
    })
}

/// Pullback along the parity transposition: a module of `gl(M,N)` becomes
/// one of `gl(N,M)` via `s'_{ij}(z) = eps^J_{ji} s_{bar j, bar i}(z)` with
/// `bar i = M+N+1-i` and the flipped parity signs.
pub fn flip_mn(rep: &Representation) -> Representation {
    let dim = rep.generator_dim();
    let new_m = rep.n;
    let new_n = rep.m;
    // J-side parity: even iff index <= N
    let odd_j = |x: usize| x > new_m;
    let eps_j_neg = |i: usize, j: usize| odd_j(i) && (odd_j(i) ^ odd_j(j));
    let bar = |i: usize| dim + 1 - i;
    let weights = rep.space.weights().map(|ws| {
        ws.iter()
            .map(|w| {
                let mut coords: Vec<i64> = w.iter().map(|x| -x).collect();
                coords.reverse();
                coords
            })
            .collect()
    });
    let mut space = SuperSpace::new(rep.space.parities().to_vec());
    if let Some(w) = weights {
        space = space.with_weights(w);
    }
    let build = |mats: &Vec<Vec<GradedMatrix>>| -> Vec<Vec<GradedMatrix>> {
        (1..=dim)
            .map(|i| {
                (1..=dim)
                    .map(|j| {
                        let src = &mats[bar(j) - 1][bar(i) - 1];
                        let mut out = src.clone().with_parity(parity_of(new_m, i, j));
                        if eps_j_neg(j, i) {
                            out = out.scale(&-&Scalar::one());
                        }
                        out
                    })
                    .collect()
            })
            .collect()
    };
    let s = build(rep.s_matrices());
    let t = rep.t_matrices().map(build);
    Representation::new(new_m, new_n, space, s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmodules::{check_rtt, highest_lweight_vectors};
    use crate::scalars::parse_scalar;

    fn a() -> Scalar {
        Scalar::sym("a")
    }

    #[test]
    fn family_matrices_match_displays() {
        let minus = gl21_family(FamilyVariant::Minus, &a());
        // s_21(z) = z a (q - q^-1)^2 kappa^-1 E_32
        let want = parse_scalar("z*a*(q - 1/q)^2/kappa").unwrap();
        assert_eq!(minus.rep.s(2, 1).get(2, 1), want);
        let plus = gl21_family(FamilyVariant::Plus, &a());
        // s_23(z) = kappa E_12 + kappa E_34
        assert_eq!(plus.rep.s(2, 3).get(0, 1), Scalar::var(Var::Kappa));
        assert_eq!(plus.rep.s(2, 3).get(2, 3), Scalar::var(Var::Kappa));
        assert!(minus.rep.validate_weight_grading());
        assert!(plus.rep.validate_weight_grading());
    }

    #[test]
    fn members_pass_rtt() {
        for variant in [FamilyVariant::Minus, FamilyVariant::Plus] {
            let fam = gl21_family(variant, &a());
            for k in 1..=2i64 {
                let member = generic_eval(&fam, &Scalar::q_pow(k)).unwrap();
                let report = check_rtt(&member).unwrap();
                assert!(report.pass, "{variant} k={k}: {:?}", report.failure);
            }
        }
    }

    #[test]
    fn symbolic_kappa_passes_rtt() {
        let fam = gl21_family(FamilyVariant::Plus, &a());
        let report = check_rtt(&fam.rep).unwrap();
        assert!(report.pass, "{:?}", report.failure);
    }

    #[test]
    fn gl11_prime_matrices_and_rtt() {
        let rep = gl11_prime(&a(), &Scalar::sym("b"));
        // s_21(z) = -z/(1-zb) E_21
        let want = parse_scalar("-z/(1 - z*b)").unwrap();
        assert_eq!(rep.s(2, 1).get(1, 0), want);
        assert!(check_rtt(&rep).unwrap().pass);
    }

    #[test]
    fn tilde_and_hat_shapes() {
        let minus = gl21_family(FamilyVariant::Minus, &a());
        let tilde = tilde_generators(&minus.rep).unwrap();
        // tilde entries are Laurent in kappa with exponents in [-2, 0]
        for row in &tilde {
            for mat in row {
                for (_, v) in mat.entries() {
                    let (lo, hi) = v.laurent_degree_range(&Var::Kappa).unwrap();
                    assert!(lo >= -2 && hi <= 0, "minus tilde range ({lo},{hi})");
                }
            }
        }
        // diagonal tilde constant terms are the identity
        for i in 1..=3usize {
            let c = super::super::repmodules::z_coefficient_matrices(&tilde[i - 1][i - 1]);
            let _ = c;
            let mut const_term = GradedMatrix::zero(
                minus.rep.space.clone(),
                minus.rep.space.clone(),
            );
            for ((r, cc), v) in tilde[i - 1][i - 1].entries() {
                const_term.set(*r, *cc, v.substitute(&Var::Z, &Scalar::zero()).unwrap());
            }
            assert_eq!(
                const_term.to_dense(),
                GradedMatrix::identity(&minus.rep.space).to_dense(),
                "tilde s_{i}{i} constant term"
            );
        }
        let plus = gl21_family(FamilyVariant::Plus, &a());
        let hat = hat_generators(&plus.rep).unwrap();
        for row in &hat {
            for mat in row {
                for (_, v) in mat.entries() {
                    let (lo, hi) = v.laurent_degree_range(&Var::Kappa).unwrap();
                    assert!(lo >= 0 && hi <= 2, "plus hat range ({lo},{hi})");
                }
            }
        }
    }

    #[test]
    fn limit_minus_reproduces_displayed_matrices() {
        let fam = gl21_family(FamilyVariant::Minus, &a());
        let lim = limit_minus(&fam).unwrap();
        // rho^-(s_21) = 0
        assert!(lim.s(2, 1).is_zero());
        // rho^-(s_11) = E11 + E22 + q^-1(E33 + E44)
        assert_eq!(lim.s(1, 1).get(0, 0), Scalar::one());
        assert_eq!(lim.s(1, 1).get(2, 2), Scalar::q_pow(-1));
        // rho^-(s_31) = zaq^2 (q-q^-1)^2 E42 - zaq (q-q^-1)^2 E31
        let want42 = parse_scalar("z*a*q^2*(q - 1/q)^2").unwrap();
        let want31 = parse_scalar("-z*a*q*(q - 1/q)^2").unwrap();
        assert_eq!(lim.s(3, 1).get(3, 1), want42);
        assert_eq!(lim.s(3, 1).get(2, 0), want31);
        // rho^-(s_32) = zaq(q-q^-1)E21 + zaq^3(q-q^-1)E43
        assert_eq!(lim.s(3, 2).get(1, 0), parse_scalar("z*a*q*(q - 1/q)").unwrap());
        assert_eq!(lim.s(3, 2).get(3, 2), parse_scalar("z*a*q^3*(q - 1/q)").unwrap());
        // rho^-(s_33) display
        assert_eq!(lim.s(3, 3).get(0, 0), parse_scalar("1 - z*a").unwrap());
        assert_eq!(lim.s(3, 3).get(1, 1), parse_scalar("1/q - z*a*q").unwrap());
        assert_eq!(lim.s(3, 3).get(3, 3), parse_scalar("1/q^2 - z*a*q^2").unwrap());
        // rho^-(s_12) = E23, s_13 = q^-1(q-q^-1)^-1 (E24 - E13), s_23 = q^-1 E12 + q^-2 E34
        assert_eq!(lim.s(1, 2).get(1, 2), Scalar::one());
        assert_eq!(lim.s(2, 3).get(0, 1), Scalar::q_pow(-1));
        assert_eq!(lim.s(2, 3).get(2, 3), Scalar::q_pow(-2));
    }

    #[test]
    fn limit_plus_reproduces_displayed_matrices() {
        let fam = gl21_family(FamilyVariant::Plus, &a());
        let lim = limit_plus(&fam).unwrap();
        // rho^+(s_11) = (1-za)(E11+E22) + (q^-1 - zaq)(E33+E44)
        assert_eq!(lim.s(1, 1).get(0, 0), parse_scalar("1 - z*a").unwrap());
        assert_eq!(lim.s(1, 1).get(2, 2), parse_scalar("1/q - z*a*q").unwrap());
        // rho^+(s_33) = E11 + q^-1(E22+E33) + q^-2 E44
        assert_eq!(lim.s(3, 3).get(0, 0), Scalar::one());
        assert_eq!(lim.s(3, 3).get(1, 1), Scalar::q_pow(-1));
        assert_eq!(lim.s(3, 3).get(3, 3), Scalar::q_pow(-2));
        // rho^+(s_12) = E23; s_23 = E12 + E34
        assert_eq!(lim.s(1, 2).get(1, 2), Scalar::one());
        assert_eq!(lim.s(2, 3).get(0, 1), Scalar::one());
        assert_eq!(lim.s(2, 3).get(2, 3), Scalar::one());
        // rho^+(s_21) = za(q-q^-1)^2 E32
        assert_eq!(lim.s(2, 1).get(2, 1), parse_scalar("z*a*(q - 1/q)^2").unwrap());
        // rho^+(s_31) = -zaq^-2(q-q^-1)^2 E42 + za(q-q^-1)^2 E31
        assert_eq!(
            lim.s(3, 1).get(3, 1),
            parse_scalar("-z*a*(q - 1/q)^2/q^2").unwrap()
        );
        assert_eq!(lim.s(3, 1).get(2, 0), parse_scalar("z*a*(q - 1/q)^2").unwrap());
        // rho^+(s_32) = -za(q-q^-1)E21 - zaq^-1(q-q^-1)E43
        assert_eq!(lim.s(3, 2).get(1, 0), parse_scalar("-z*a*(q - 1/q)").unwrap());
        assert_eq!(
            lim.s(3, 2).get(3, 2),
            parse_scalar("-z*a*(q - 1/q)/q").unwrap()
        );
        // rho^+(s_13) = (q-q^-1)^-1 (q E24 - E13)
        assert_eq!(
            lim.s(1, 3).get(1, 3),
            parse_scalar("q/(q - 1/q)").unwrap()
        );
        assert_eq!(
            lim.s(1, 3).get(0, 2),
            parse_scalar("-1/(q - 1/q)").unwrap()
        );
    }

    #[test]
    fn limits_pass_s_sector_rtt() {
        let minus = limit_minus(&gl21_family(FamilyVariant::Minus, &a())).unwrap();
        assert!(check_rtt(&minus).unwrap().pass);
        let plus = limit_plus(&gl21_family(FamilyVariant::Plus, &a())).unwrap();
        assert!(check_rtt(&plus).unwrap().pass);
    }

    #[test]
    fn generic_eval_highest_vector() {
        let fam = gl21_family(FamilyVariant::Plus, &a());
        let b = Scalar::sym("b");
        let rep = generic_eval(&fam, &b).unwrap();
        assert!(check_rtt(&rep).unwrap().pass);
        let hvs = highest_lweight_vectors(&rep).unwrap();
        let hv = hvs.iter().find(|h| !h.vector[0].is_zero()).unwrap();
        // s_ii(z) v = (b - zab) v for i <= 2, (1 - zab^2) v for i = 3
        let want_even = parse_scalar("b - z*a*b").unwrap();
        let want_odd = parse_scalar("1 - z*a*b^2").unwrap();
        assert_eq!(hv.s_eigen[0], want_even);
        assert_eq!(hv.s_eigen[1], want_even);
        assert_eq!(hv.s_eigen[2], want_odd);
        // t-side of the display
        let t = hv.t_eigen.as_ref().unwrap();
        assert_eq!(t[0], parse_scalar("1/b - 1/(z*a*b)").unwrap());
        assert_eq!(t[2], parse_scalar("1 - 1/(z*a*b^2)").unwrap());
    }

    #[test]
    fn generic_eval_at_q_is_the_level_one_member() {
        let fam = gl21_family(FamilyVariant::Minus, &a());
        let via_b = generic_eval(&fam, &Scalar::q()).unwrap();
        let direct = fam.rep.substitute(&Var::Kappa, &Scalar::q()).unwrap();
        for i in 1..=3usize {
            for j in 1..=3usize {
                assert_eq!(via_b.s(i, j).to_dense(), direct.s(i, j).to_dense());
            }
        }
    }

    #[test]
    fn kappa_windows() {
        let plus = gl21_family(FamilyVariant::Plus, &a());
        let audit = kappa_degree_audit(&plus.rep, (-2, 3)).unwrap();
        assert!(audit.pass, "{:?}", audit.violations);
        let minus = gl21_family(FamilyVariant::Minus, &a());
        let audit = kappa_degree_audit(&minus.rep, (-2, 3)).unwrap();
        assert!(audit.pass);
        // diagonal s_ii of the plus family: kappa-degrees within {0,1,2}
        for i in 1..=3usize {
            for (_, v) in plus.rep.s(i, i).entries() {
                let (lo, hi) = v.laurent_degree_range(&Var::Kappa).unwrap();
                assert!((0..=2).contains(&lo) && (0..=2).contains(&hi));
            }
        }
        // a hand-built kappa^4 entry fails
        let mut bad = plus.rep.clone();
        let mut mat = bad.s(1, 2).clone();
        mat.set(0, 0, Scalar::var(Var::Kappa).pow_int(4));
        bad = Representation::new(
            bad.m,
            bad.n,
            bad.space.clone(),
            {
                let mut s = bad.s_matrices().clone();
                s[0][1] = mat;
                s
            },
            bad.t_matrices().cloned(),
        );
        let audit = kappa_degree_audit(&bad, (-2, 3)).unwrap();
        assert!(!audit.pass);
        // odd window via the flip of the minus family
        let flipped = flip_mn(&minus.rep);
        let audit = kappa_degree_audit(&flipped, (-2, 1)).unwrap();
        assert!(audit.pass, "{:?}", audit.violations);
    }

    #[test]
    fn flip_involution_and_rtt() {
        let rep = crate::repmodules::evaluate(&crate::repmodules::natural_rep_finite(2, 1), &a());
        let flipped = flip_mn(&rep);
        assert_eq!((flipped.m, flipped.n), (1, 2));
        assert!(check_rtt(&flipped).unwrap().pass);
        let back = flip_mn(&flipped);
        for i in 1..=3usize {
            for j in 1..=3usize {
                assert_eq!(back.s(i, j).to_dense(), rep.s(i, j).to_dense());
            }
        }
    }

    #[test]
    fn flip_of_minus_limit_has_positive_prefundamental_pattern() {
        // the flip of the gl(2,1) negative limit is an L^+-type gl(1,2)
        // module at node 1: eigenvalues (1 - za, 1, 1) on the new highest
        // vector
        let lim = limit_minus(&gl21_family(FamilyVariant::Minus, &a())).unwrap();
        let flipped = flip_mn(&lim);
        let hvs = highest_lweight_vectors(&flipped).unwrap();
        assert_eq!(hvs.len(), 1);
        let hv = &hvs[0];
        assert_eq!(hv.s_eigen[0], parse_scalar("1 - z*a").unwrap());
        assert!(hv.s_eigen[1].is_one());
        assert!(hv.s_eigen[2].is_one());
    }
}
