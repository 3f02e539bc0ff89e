//! The command registry: every subcommand implements [`Command`] and is
//! registered by name; dispatch selects the implementation at runtime.

use serde_json::{json, Value};

use glmn_core::asymptotics::{
    flip_mn, generic_eval, gl11_prime, gl21_family, kappa_degree_audit, limit_minus, limit_plus,
    FamilyVariant,
};
use glmn_core::json as gj;
use glmn_core::lweights::{
    limit_qchar, normalize, normalized_a_form, qchar_dual_eval, qchar_eval, SpectralPoint,
};
use glmn_core::repmodules::{
    berezinian, check_centrality, check_rtt, cyclicity_check, decompose_restriction,
    ell_decompose, evaluate, natural_rep_finite, restrict_to_subalgebra, twisted_dual,
    Representation,
};
use glmn_core::rmatrix::{
    check_ice_rule, check_yang_baxter, m_inverse_closed_form, m_matrix, perk_schultz,
};
use glmn_core::scalars::Scalar;
use glmn_core::superlinalg::{GradedMatrix, TensorConvention};
use glmn_core::verify;
use glmn_core::youngcomb::{
    self, branching, character, diagram_of, dual_highest, enumerate_tableaux_capped, gt_patterns,
    level_profile, lowest_weight, Weight,
};

use crate::config::{CommandConfig, UsageError};

pub struct Output {
    pub json: Value,
    pub table: Option<String>,
    /// drives the exit code: `Some(false)` exits 1
    pub verified: Option<bool>,
}

impl Output {
    fn data(json: Value) -> Output {
        Output {
            json,
            table: None,
            verified: None,
        }
    }

    fn with_table(mut self, table: String) -> Output {
        self.table = Some(table);
        self
    }

    fn with_verdict(mut self, pass: bool) -> Output {
        self.verified = Some(pass);
        self
    }
}

pub enum CliError {
    Usage(UsageError),
    Run(String),
}

impl From<UsageError> for CliError {
    fn from(e: UsageError) -> Self {
        CliError::Usage(e)
    }
}

fn run_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Run(e.to_string())
}

pub trait Command {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError>;
}

pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Registry {
    pub fn standard() -> Registry {
        Registry {
            commands: vec![
                Box::new(Tableaux),
                Box::new(GtPatterns),
                Box::new(CharacterCmd),
                Box::new(Branching),
                Box::new(LowestWeight),
                Box::new(QCharacterCmd),
                Box::new(LimitQCharacter),
                Box::new(VerifyYbe),
                Box::new(VerifyIce),
                Box::new(VerifyRtt),
                Box::new(MInverse),
                Box::new(Berezinian),
                Box::new(EllDecompose),
                Box::new(Dual),
                Box::new(TensorCmd),
                Box::new(CyclicityCheck),
                Box::new(Restrict),
                Box::new(Asymptotic),
                Box::new(KappaAudit),
                Box::new(Criteria),
            ],
        }
    }

    pub fn find(&self, name: &str) -> Option<&dyn Command> {
        self.commands
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<(&'static str, &'static str)> {
        self.commands.iter().map(|c| (c.name(), c.about())).collect()
    }
}

fn weight_from(cfg: &CommandConfig) -> Result<Weight, CliError> {
    let (m, n) = cfg.dims()?;
    let coords = cfg.lambda(m, n)?;
    Ok(Weight::new(m, n, coords))
}

fn spectral_point(cfg: &CommandConfig) -> SpectralPoint {
    let label = cfg.str_or("a-label", "a");
    let shift = cfg
        .str_opt("a-shift")
        .and_then(|s| s.parse::<i64>().ok())
        .unwrap_or(0);
    SpectralPoint::symbol(&label).shift_q(shift)
}

/// Shared module builder for the module-consuming commands.
fn build_module(cfg: &CommandConfig) -> Result<Representation, CliError> {
    let kind = cfg.str_or("module", "natural");
    let a = Scalar::sym(&cfg.str_or("a-label", "a"));
    let b = Scalar::sym(&cfg.str_or("b-label", "b"));
    match kind.as_str() {
        "natural" => {
            let (m, n) = cfg.dims()?;
            Ok(evaluate(&natural_rep_finite(m, n), &a))
        }
        "tensor-square" => {
            let (m, n) = cfg.dims()?;
            let left = evaluate(&natural_rep_finite(m, n), &a);
            let right = evaluate(&natural_rep_finite(m, n), &b);
            left.tensor(&right).map_err(run_err)
        }
        "gl11-prime" => Ok(gl11_prime(&a, &b)),
        "gl21-minus" | "gl21-plus" => {
            let variant = if kind == "gl21-minus" {
                FamilyVariant::Minus
            } else {
                FamilyVariant::Plus
            };
            let fam = gl21_family(variant, &a);
            match cfg.scalar_opt("kappa")? {
                None => Ok(fam.rep),
                Some(k) => generic_eval(&fam, &k).map_err(run_err),
            }
        }
        "gl21-limit-minus" => {
            limit_minus(&gl21_family(FamilyVariant::Minus, &a)).map_err(run_err)
        }
        "gl21-limit-plus" => limit_plus(&gl21_family(FamilyVariant::Plus, &a)).map_err(run_err),
        "gl21-generic" => {
            generic_eval(&gl21_family(FamilyVariant::Plus, &a), &b).map_err(run_err)
        }
        other => Err(CliError::Usage(UsageError(format!(
            "unknown module kind `{other}`"
        )))),
    }
}

struct Tableaux;

impl Command for Tableaux {
    fn name(&self) -> &'static str {
        "tableaux"
    }
    fn about(&self) -> &'static str {
        "enumerate the semistandard hook tableaux of a dominant weight"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let lam = weight_from(cfg)?;
        let diagram = diagram_of(&lam).map_err(run_err)?;
        let tabs = enumerate_tableaux_capped(lam.m(), lam.n(), &diagram, cfg.cell_cap()?)
            .map_err(run_err)?;
        let mut table = String::new();
        for t in &tabs {
            table.push_str(&format!("{:?}\n", t.entries()));
        }
        Ok(Output::data(json!({
            "lambda": lam.coords(),
            "shape": diagram.rows(),
            "count": tabs.len(),
            "tableaux": tabs.iter().map(gj::tableau_json).collect::<Vec<_>>(),
        }))
        .with_table(table))
    }
}

struct GtPatterns;

impl Command for GtPatterns {
    fn name(&self) -> &'static str {
        "gt-patterns"
    }
    fn about(&self) -> &'static str {
        "enumerate the Gelfand-Tsetlin patterns over a dominant weight"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let lam = weight_from(cfg)?;
        let pats = gt_patterns(&lam).map_err(run_err)?;
        let mut table = String::new();
        for p in &pats {
            table.push_str(&format!("{p}\n"));
        }
        Ok(Output::data(json!({
            "lambda": lam.coords(),
            "count": pats.len(),
            "patterns": pats.iter().map(gj::gt_pattern_json).collect::<Vec<_>>(),
        }))
        .with_table(table))
    }
}

struct CharacterCmd;

impl Command for CharacterCmd {
    fn name(&self) -> &'static str {
        "character"
    }
    fn about(&self) -> &'static str {
        "weight multiplicities of the simple module over a dominant weight"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let lam = weight_from(cfg)?;
        let chi = character(&lam).map_err(run_err)?;
        let mut table = String::new();
        for (w, mult) in &chi.multiplicities {
            table.push_str(&format!("{w:?}: {mult}\n"));
        }
        table.push_str(&format!("dimension: {}\n", chi.dimension()));
        Ok(Output::data(json!({
            "lambda": lam.coords(),
            "dimension": chi.dimension(),
            "weights": chi.multiplicities.iter()
                .map(|(w, m)| json!({"weight": w, "multiplicity": m}))
                .collect::<Vec<_>>(),
        }))
        .with_table(table))
    }
}

struct Branching;

impl Command for Branching {
    fn name(&self) -> &'static str {
        "branching"
    }
    fn about(&self) -> &'static str {
        "the restriction set of a level weight one step down the chain"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let k = cfg.usize_req("level").map_err(CliError::Usage)?;
        let (mk, nk) = level_profile(m, n, k);
        let coords = cfg.lambda(mk, nk)?;
        let lam = Weight::new(mk, nk, coords);
        let set = branching(m, n, &lam, k).map_err(run_err)?;
        Ok(Output::data(json!({
            "lambda": lam.coords(),
            "level": k,
            "branching": set.iter().map(gj::weight_json).collect::<Vec<_>>(),
        }))
        .with_table(
            set.iter()
                .map(|w| format!("{w}\n"))
                .collect::<String>(),
        ))
    }
}

struct LowestWeight;

impl Command for LowestWeight {
    fn name(&self) -> &'static str {
        "lowest-weight"
    }
    fn about(&self) -> &'static str {
        "the lowest weight of a simple module and the dual highest weight"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let lam = weight_from(cfg)?;
        let low = lowest_weight(&lam).map_err(run_err)?;
        let dual = dual_highest(&lam).map_err(run_err)?;
        Ok(Output::data(json!({
            "lambda": lam.coords(),
            "lowest": low.coords(),
            "dual_highest": dual.coords(),
        }))
        .with_table(format!("lowest: {low}\ndual highest: {dual}\n")))
    }
}

struct QCharacterCmd;

impl Command for QCharacterCmd {
    fn name(&self) -> &'static str {
        "qcharacter"
    }
    fn about(&self) -> &'static str {
        "the q-character of a (dual) evaluation module, optionally normalized"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let lam = weight_from(cfg)?;
        let point = spectral_point(cfg);
        let dual = cfg.bool_flag("dual")?;
        let chi = if dual {
            qchar_dual_eval(&lam, &point).map_err(run_err)?
        } else {
            qchar_eval(&lam, &point).map_err(run_err)?
        };
        let a_basis = cfg.bool_flag("a-basis")?;
        let do_normalize = cfg.bool_flag("normalize")? || a_basis;
        let json_out = if a_basis {
            let norm = normalized_a_form(&chi).map_err(run_err)?;
            gj::normalized_qchar_json(&norm)
        } else if do_normalize {
            gj::qcharacter_json(&normalize(&chi).map_err(run_err)?)
        } else {
            gj::qcharacter_json(&chi)
        };
        let mut table = String::new();
        for (mono, mult) in chi.terms() {
            table.push_str(&format!("{mult} * {mono}\n"));
        }
        Ok(Output::data(json!({
            "lambda": lam.coords(),
            "spectral": point.to_string(),
            "dual": dual,
            "qcharacter": json_out,
        }))
        .with_table(table))
    }
}

struct LimitQCharacter;

impl Command for LimitQCharacter {
    fn name(&self) -> &'static str {
        "limit-qcharacter"
    }
    fn about(&self) -> &'static str {
        "truncated limit q-character of the asymptotic family at a node"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let r = cfg.usize_req("r").map_err(CliError::Usage)?;
        let kmax = cfg.usize_or("kmax", 3).map_err(CliError::Usage)?;
        let point = spectral_point(cfg);
        let lim = limit_qchar(m, n, r, &point, kmax).map_err(run_err)?;
        let stable = lim.stable;
        let mut table = String::new();
        for (t, a) in &lim.terms {
            table.push_str(&format!("depth {} {:?}: {a}\n", t.k, t.window.entries()));
        }
        Ok(Output::data(gj::limit_qchar_json(&lim))
            .with_table(table)
            .with_verdict(stable))
    }
}

struct VerifyYbe;

impl Command for VerifyYbe {
    fn name(&self) -> &'static str {
        "verify-ybe"
    }
    fn about(&self) -> &'static str {
        "check the Yang-Baxter identity on the threefold tensor power"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let r = perk_schultz(m, n);
        match check_yang_baxter(&r) {
            Ok(out) => {
                let pass = out.convention == TensorConvention::Graded;
                Ok(Output::data(json!({
                    "check": "yang-baxter",
                    "m": m, "n": n,
                    "pass": true,
                    "canonical_convention": out.convention.to_string(),
                    "graded_pass": out.graded_pass,
                    "plain_pass": out.plain_pass,
                }))
                .with_verdict(pass))
            }
            Err(e) => Ok(Output::data(json!({
                "check": "yang-baxter",
                "m": m, "n": n,
                "pass": false,
                "witness": e.to_string(),
            }))
            .with_verdict(false)),
        }
    }
}

struct VerifyIce;

impl Command for VerifyIce {
    fn name(&self) -> &'static str {
        "verify-ice"
    }
    fn about(&self) -> &'static str {
        "scan the ice rule over every coefficient slot"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let report = check_ice_rule(&perk_schultz(m, n));
        Ok(Output::data(json!({
            "check": "ice-rule",
            "m": m, "n": n,
            "pass": report.pass,
            "violations": report.violations,
        }))
        .with_verdict(report.pass))
    }
}

struct VerifyRtt;

impl Command for VerifyRtt {
    fn name(&self) -> &'static str {
        "verify-rtt"
    }
    fn about(&self) -> &'static str {
        "check the exact coefficient RTT identities on a module"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let module = build_module(cfg)?;
        let report = check_rtt(&module).map_err(run_err)?;
        Ok(Output::data(json!({
            "check": "rtt",
            "module": cfg.str_or("module", "natural"),
            "dim": module.dim(),
            "pass": report.pass,
            "relations": report.checked_relations,
            "witness": report.failure.map(|f| format!("{f}")),
        }))
        .with_verdict(report.pass))
    }
}

struct MInverse;

impl Command for MInverse {
    fn name(&self) -> &'static str {
        "m-inverse"
    }
    fn about(&self) -> &'static str {
        "closed-form inverse of the dual-module matrix, with exact check"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let mm = m_matrix(m, n);
        let inv = m_inverse_closed_form(m, n);
        let prod = mm.matmul(&inv).map_err(run_err)?;
        let pass = prod.to_dense() == GradedMatrix::identity(mm.source()).to_dense();
        Ok(Output::data(json!({
            "check": "m-inverse",
            "m": m, "n": n,
            "pass": pass,
            "matrix": gj::matrix_json(&mm),
            "inverse": gj::matrix_json(&inv),
        }))
        .with_verdict(pass))
    }
}

struct Berezinian;

impl Command for Berezinian {
    fn name(&self) -> &'static str {
        "berezinian"
    }
    fn about(&self) -> &'static str {
        "the Berezinian series C_i(z) on a module, with the centrality check"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let module = build_module(cfg)?;
        let i = cfg.usize_or("i", module.generator_dim())?;
        let c = berezinian(&module, i).map_err(run_err)?;
        let centrality = check_centrality(&module, i).map_err(run_err)?;
        Ok(Output::data(json!({
            "module": cfg.str_or("module", "natural"),
            "i": i,
            "berezinian": gj::matrix_json(&c),
            "central": centrality.pass,
            "constant_term_matches": centrality.constant_term_matches,
        }))
        .with_verdict(centrality.pass))
    }
}

struct EllDecompose;

impl Command for EllDecompose {
    fn name(&self) -> &'static str {
        "ell-decompose"
    }
    fn about(&self) -> &'static str {
        "joint eigenlines of the Berezinian series and the normalized q-character"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let module = build_module(cfg)?;
        let dec = ell_decompose(&module).map_err(run_err)?;
        let mut table = String::new();
        for (tuple, mult) in &dec.spectrum {
            let strs: Vec<String> = tuple.iter().map(|f| f.to_string()).collect();
            table.push_str(&format!("x{mult}: [{}]\n", strs.join(", ")));
        }
        Ok(Output::data(json!({
            "module": cfg.str_or("module", "natural"),
            "spectrum": dec.spectrum.iter()
                .map(|(t, mult)| json!({
                    "eigenvalues": t.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    "multiplicity": mult,
                }))
                .collect::<Vec<_>>(),
            "normalized": gj::qcharacter_json(&dec.normalized),
        }))
        .with_table(table))
    }
}

struct Dual;

impl Command for Dual {
    fn name(&self) -> &'static str {
        "dual"
    }
    fn about(&self) -> &'static str {
        "the twisted dual module, re-verified against the RTT identities"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let module = build_module(cfg)?;
        let dual = twisted_dual(&module).map_err(run_err)?;
        let report = check_rtt(&dual).map_err(run_err)?;
        Ok(Output::data(json!({
            "module": cfg.str_or("module", "natural"),
            "dual": gj::representation_json(&dual),
            "rtt_pass": report.pass,
        }))
        .with_verdict(report.pass))
    }
}

struct TensorCmd;

impl Command for TensorCmd {
    fn name(&self) -> &'static str {
        "tensor"
    }
    fn about(&self) -> &'static str {
        "tensor power of the natural evaluation module at listed labels"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let labels = cfg.str_or("a-labels", "a,b");
        let reps: Vec<Representation> = labels
            .split(',')
            .map(|l| evaluate(&natural_rep_finite(m, n), &Scalar::sym(l.trim())))
            .collect();
        let mut product = reps[0].clone();
        for r in &reps[1..] {
            product = product.tensor(r).map_err(run_err)?;
        }
        let report = check_rtt(&product).map_err(run_err)?;
        Ok(Output::data(json!({
            "m": m, "n": n,
            "factors": labels.split(',').count(),
            "dim": product.dim(),
            "rtt_pass": report.pass,
            "module": gj::representation_json(&product),
        }))
        .with_verdict(report.pass))
    }
}

struct CyclicityCheck;

impl Command for CyclicityCheck {
    fn name(&self) -> &'static str {
        "cyclicity-check"
    }
    fn about(&self) -> &'static str {
        "whether a tensor product of fundamental modules is highest ell-weight"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let (m, n) = cfg.dims()?;
        let r = cfg.usize_or("r", 1)?;
        let k = cfg.usize_or("k", 2)?;
        let a = Scalar::sym(&cfg.str_or("a-label", "a"));
        let factors: Vec<Representation> = if r == 2 && (m, n) == (2, 1) {
            (1..=k)
                .map(|j| {
                    let base = &a * &Scalar::q_pow(-2 * j as i64);
                    generic_eval(&gl21_family(FamilyVariant::Minus, &base), &Scalar::q())
                        .map_err(run_err)
                })
                .collect::<Result<_, _>>()?
        } else if r == 1 {
            (1..=k)
                .map(|j| evaluate(&natural_rep_finite(m, n), &(&a * &Scalar::q_pow(-2 * j as i64))))
                .collect()
        } else {
            return Err(CliError::Usage(UsageError(format!(
                "no explicit fundamental family for node {r} at gl({m},{n})"
            ))));
        };
        let pass = cyclicity_check(&factors).map_err(run_err)?;
        Ok(Output::data(json!({
            "check": "cyclicity",
            "m": m, "n": n, "r": r, "k": k,
            "pass": pass,
        }))
        .with_verdict(pass))
    }
}

struct Restrict;

impl Command for Restrict {
    fn name(&self) -> &'static str {
        "restrict"
    }
    fn about(&self) -> &'static str {
        "submodule decomposition of the restriction to a chain level"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let module = build_module(cfg)?;
        let level = cfg.usize_or("level", module.generator_dim())?;
        let restricted = restrict_to_subalgebra(&module, level);
        let report = decompose_restriction(&restricted, level).map_err(run_err)?;
        let mut table = String::new();
        for s in &report.summands {
            table.push_str(&format!(
                "dim {} pivots {:?} {}\n",
                s.dim,
                s.coordinates,
                if s.simple { "simple" } else { "not simple" }
            ));
        }
        table.push_str(&format!(
            "semisimple: {}\n",
            report.semisimple
        ));
        Ok(Output::data(json!({
            "module": cfg.str_or("module", "natural"),
            "level": level,
            "resolved": report.resolved,
            "semisimple": report.semisimple,
            "summands": report.summands.iter()
                .map(|s| json!({"dim": s.dim, "simple": s.simple, "pivots": s.coordinates}))
                .collect::<Vec<_>>(),
        }))
        .with_table(table)
        .with_verdict(report.resolved))
    }
}

struct Asymptotic;

impl Command for Asymptotic {
    fn name(&self) -> &'static str {
        "asymptotic"
    }
    fn about(&self) -> &'static str {
        "the explicit asymptotic families and their limits"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let family = cfg.str_or("family", "gl21");
        if family != "gl21" {
            return Err(CliError::Usage(UsageError(format!(
                "unknown family `{family}` (explicit matrices exist for gl21)"
            ))));
        }
        let variant = match cfg.str_or("variant", "minus").as_str() {
            "minus" => FamilyVariant::Minus,
            "plus" => FamilyVariant::Plus,
            other => {
                return Err(CliError::Usage(UsageError(format!(
                    "unknown variant `{other}`"
                ))))
            }
        };
        let a = Scalar::sym(&cfg.str_or("a-label", "a"));
        let fam = gl21_family(variant, &a);
        let limit = cfg.str_or("limit", "none");
        let rep = match limit.as_str() {
            "none" => fam.rep.clone(),
            "minus" => limit_minus(&fam).map_err(run_err)?,
            "plus" => limit_plus(&fam).map_err(run_err)?,
            other => {
                if let Some(btext) = other.strip_prefix("generic:") {
                    let b = glmn_core::scalars::parse_scalar(btext)
                        .map_err(|e| CliError::Usage(UsageError(format!("--limit generic: {e}"))))?;
                    generic_eval(&fam, &b).map_err(run_err)?
                } else {
                    return Err(CliError::Usage(UsageError(format!(
                        "unknown limit `{other}`"
                    ))));
                }
            }
        };
        let rtt = check_rtt(&rep).map_err(run_err)?;
        Ok(Output::data(json!({
            "family": family,
            "variant": variant.to_string(),
            "limit": limit,
            "rtt_pass": rtt.pass,
            "module": gj::representation_json(&rep),
        }))
        .with_verdict(rtt.pass))
    }
}

struct KappaAudit;

impl Command for KappaAudit {
    fn name(&self) -> &'static str {
        "kappa-audit"
    }
    fn about(&self) -> &'static str {
        "Laurent-window audit of the family generators in kappa"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        let variant = match cfg.str_or("variant", "plus").as_str() {
            "minus" => FamilyVariant::Minus,
            "plus" => FamilyVariant::Plus,
            other => {
                return Err(CliError::Usage(UsageError(format!(
                    "unknown variant `{other}`"
                ))))
            }
        };
        let a = Scalar::sym(&cfg.str_or("a-label", "a"));
        let fam = gl21_family(variant, &a);
        let flip = cfg.bool_flag("flip")?;
        let rep = if flip { flip_mn(&fam.rep) } else { fam.rep };
        let window_text = cfg.str_or("window", if flip { "-2,1" } else { "-2,3" });
        let parts: Vec<i64> = window_text
            .split(',')
            .filter_map(|p| p.trim().parse().ok())
            .collect();
        if parts.len() != 2 {
            return Err(CliError::Usage(UsageError(
                "--window must be `lo,hi`".into(),
            )));
        }
        let audit = kappa_degree_audit(&rep, (parts[0], parts[1])).map_err(run_err)?;
        Ok(Output::data(json!({
            "variant": variant.to_string(),
            "flipped": flip,
            "window": [parts[0], parts[1]],
            "pass": audit.pass,
            "violations": audit.violations.iter()
                .map(|((kind, i, j), (lo, hi))| json!([kind.to_string(), i, j, lo, hi]))
                .collect::<Vec<_>>(),
        }))
        .with_verdict(audit.pass))
    }
}

struct Criteria;

impl Command for Criteria {
    fn name(&self) -> &'static str {
        "criteria"
    }
    fn about(&self) -> &'static str {
        "rationality criteria for a highest ell-weight, or the verification battery"
    }
    fn run(&self, cfg: &CommandConfig) -> Result<Output, CliError> {
        // with --f: the finite-dimensionality and extension criteria for a
        // highest ell-weight tuple (one rational function per Dynkin node)
        if let Some(raw) = cfg.str_opt("f") {
            let (m, n) = cfg.dims()?;
            let fs: Result<Vec<Scalar>, _> = raw
                .split(';')
                .map(|p| glmn_core::scalars::parse_scalar(p.trim()))
                .collect();
            let fs = fs.map_err(|e| CliError::Usage(UsageError(format!("--f: {e}"))))?;
            if fs.len() != m + n - 1 {
                return Err(CliError::Usage(UsageError(format!(
                    "--f needs {} functions for gl({m},{n})",
                    m + n - 1
                ))));
            }
            let finite = glmn_core::lweights::is_finite_dim_criterion(m, n, &fs)
                .map_err(run_err)?;
            let extends = glmn_core::lweights::extends_to_full_algebra(&fs);
            return Ok(Output::data(json!({
                "finite_dimensional": finite,
                "extends_to_full_algebra": extends,
            }))
            .with_table(format!(
                "finite dimensional: {finite}\nextends to the full algebra: {extends}\n"
            )));
        }
        let reports = match cfg.str_opt("id") {
            Some(raw) => {
                let id: usize = raw
                    .parse()
                    .map_err(|_| CliError::Usage(UsageError("--id must be 1..=11".into())))?;
                vec![verify::run_criterion(id).ok_or_else(|| {
                    CliError::Usage(UsageError("--id must be 1..=11".into()))
                })?]
            }
            None => verify::run_all(),
        };
        let pass = reports.iter().all(|r| r.pass);
        let mut table = String::new();
        for r in &reports {
            table.push_str(&format!(
                "criterion {:>2} [{}] {}\n",
                r.id,
                if r.pass { "PASS" } else { "FAIL" },
                r.name
            ));
            if !r.pass {
                for d in r.details.iter().filter(|d| d.starts_with("FAIL")) {
                    table.push_str(&format!("    {d}\n"));
                }
            }
        }
        Ok(Output::data(json!({
            "pass": pass,
            "criteria": reports.iter().map(|r| json!({
                "id": r.id,
                "name": r.name,
                "pass": r.pass,
                "details": r.details,
            })).collect::<Vec<_>>(),
        }))
        .with_table(table)
        .with_verdict(pass))
    }
}

// youngcomb helpers used by several commands
#[allow(unused_imports)]
use youngcomb as _yc;
