//! The full analysis pipeline and its serializable report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{is_squarefree, rational_string, weighted_homogeneity};
use crate::divisor::{derlog, holonomicity_check, koszul_check, structure_constants, LogBasis};
use crate::duality::{
    annihilator_check, dual_presentation, duality_identity_check, spencer_complex, spencer_vs_syzygies,
    tilde_generators, SpencerComplex,
};
use crate::error::{Error, Result};
use crate::weyl::WeylOp;
use crate::{parse_poly, Poly};

/// Pipeline stages in dependency order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Derlog,
    Alpha,
    Koszul,
    Holonomic,
    Spencer,
    SpencerSyzygies,
    Dual,
    Annihilator,
}

impl Stage {
    pub const ALL: [Stage; 8] = [
        Stage::Derlog,
        Stage::Alpha,
        Stage::Koszul,
        Stage::Holonomic,
        Stage::Spencer,
        Stage::SpencerSyzygies,
        Stage::Dual,
        Stage::Annihilator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Derlog => "derlog",
            Stage::Alpha => "structure_constants",
            Stage::Koszul => "koszul",
            Stage::Holonomic => "holonomicity",
            Stage::Spencer => "spencer_complex",
            Stage::SpencerSyzygies => "spencer_vs_syzygies",
            Stage::Dual => "dual_presentation",
            Stage::Annihilator => "annihilator",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub max_degree: u32,
    pub skip_spencer: bool,
    pub timings: bool,
    /// Stages to run; their prerequisites are run as well.
    pub stages: Vec<Stage>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { max_degree: 12, skip_spencer: false, timings: false, stages: Stage::ALL.to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputReport {
    pub f: String,
    pub variables: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsReport {
    pub weights: Vec<String>,
    pub degree: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub operators: Vec<String>,
    pub saito_matrix: Vec<Vec<String>>,
    pub det: String,
    pub det_constant: String,
    pub multipliers: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaEntry {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulReport {
    pub koszul_free: bool,
    pub scope: String,
    pub symbols: Vec<String>,
    pub failure_index: Option<usize>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpencerReport {
    /// `differentials[p - 1]` is the matrix of `d_p`.
    pub differentials: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub index: usize,
    pub holds: bool,
    pub failed: Option<String>,
}

/// Every stage field is `None` when the stage did not run; `skipped` then
/// names the reason.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorReport {
    pub input: Option<InputReport>,
    pub reduced: bool,
    pub weighted_homogeneous: Option<WeightsReport>,
    pub generators: Vec<String>,
    pub free_certified: bool,
    pub basis: Option<BasisReport>,
    pub alpha: Option<Vec<AlphaEntry>>,
    pub koszul: Option<KoszulReport>,
    pub holonomic: Option<bool>,
    pub spencer: Option<SpencerReport>,
    pub spencer_d2_zero: Option<bool>,
    pub spencer_matches_syzygies: Option<bool>,
    pub tilde_generators: Option<Vec<String>>,
    pub dual_generators: Option<Vec<String>>,
    pub duality_theorem_verified: Option<bool>,
    pub identity_checks: Option<Vec<IdentityReport>>,
    pub annihilator_check: Option<bool>,
    pub skipped: BTreeMap<String, String>,
    /// Internal contradictions met while running; non-empty means a bug or
    /// an invariant broken by the input.
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<String, u64>>,
}

/// Names for the symbol variables: `xi_<var>`.
pub fn symbol_names(vars: &[String]) -> Vec<String> {
    vars.iter().cloned().chain(vars.iter().map(|v| format!("xi_{v}"))).collect()
}

/// Parses `f` over `vars` and runs the selected stages.
pub fn analyze_text(f: &str, vars: &[String], opts: &AnalyzeOptions) -> Result<DivisorReport> {
    let poly = parse_poly(f, vars)?;
    analyze(&poly, vars, opts)
}

struct Run<'a> {
    report: DivisorReport,
    opts: &'a AnalyzeOptions,
    wanted: Vec<Stage>,
}

impl Run<'_> {
    fn wants(&self, s: Stage) -> bool {
        self.wanted.contains(&s)
    }

    fn timed<T>(&mut self, s: Stage, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        if let Some(map) = self.report.timings_us.as_mut() {
            map.insert(s.name().to_string(), t.elapsed().as_micros() as u64);
        }
        out
    }

    fn skip(&mut self, s: Stage, reason: &str) {
        self.report.skipped.insert(s.name().to_string(), reason.to_string());
    }
}

/// Closes a stage list under prerequisites.
fn with_prerequisites(stages: &[Stage]) -> Vec<Stage> {
    let mut out: Vec<Stage> = Vec::new();
    for &s in stages {
        let deps: &[Stage] = match s {
            Stage::Dual => &[Stage::Spencer],
            Stage::SpencerSyzygies => &[Stage::Spencer],
            _ => &[],
        };
        for &d in deps.iter().chain(std::iter::once(&s)) {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    if !out.contains(&Stage::Derlog) {
        out.push(Stage::Derlog);
    }
    out.sort();
    out
}

pub fn analyze(f: &Poly, vars: &[String], opts: &AnalyzeOptions) -> Result<DivisorReport> {
    if vars.len() != f.nvars() {
        return Err(Error::DimensionMismatch(format!("{} names for {} variables", vars.len(), f.nvars())));
    }
    let sym = symbol_names(vars);
    let ps = |p: &Poly| p.to_string_with(vars);
    let os = |o: &WeylOp| o.to_string_with(vars);

    let mut run = Run {
        report: DivisorReport {
            input: Some(InputReport { f: ps(f), variables: vars.to_vec() }),
            timings_us: opts.timings.then(BTreeMap::new),
            ..Default::default()
        },
        opts,
        wanted: with_prerequisites(&opts.stages),
    };

    if !f.is_zero() {
        if let Err(w) = is_squarefree(f) {
            return Err(Error::NotReduced { witness: ps(&w) });
        }
    }
    let out = run.timed(Stage::Derlog, || derlog(f, opts.max_degree))?;
    run.report.reduced = true;
    run.report.weighted_homogeneous = weighted_homogeneity(f).map(|w| WeightsReport {
        weights: w.weights.iter().map(rational_string).collect(),
        degree: rational_string(&w.degree),
    });
    run.report.generators = out.generators.iter().map(os).collect();
    let Some(basis) = out.basis else {
        let reason = out.diagnostic.unwrap_or_default();
        for s in run.wanted.clone().into_iter().filter(|&s| s != Stage::Derlog) {
            run.skip(s, &reason);
        }
        return Ok(run.report);
    };
    run.report.free_certified = true;
    run.report.basis = Some(BasisReport {
        operators: basis.fields.iter().map(os).collect(),
        saito_matrix: basis.saito.iter().map(|r| r.iter().map(ps).collect()).collect(),
        det: ps(&basis.det),
        det_constant: rational_string(&basis.det_constant),
        multipliers: basis.multipliers.iter().map(ps).collect(),
    });

    if run.wants(Stage::Alpha) {
        match run.timed(Stage::Alpha, || structure_constants(&basis)) {
            Ok(alpha) => {
                let n = basis.n();
                let entries = (0..n)
                    .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                    .map(|(i, j)| AlphaEntry { i: i + 1, j: j + 1, coefficients: alpha[i][j].iter().map(ps).collect() })
                    .collect();
                run.report.alpha = Some(entries);
            }
            Err(e) => run.report.violations.push(format!("structure constants: {e}")),
        }
    }
    if run.wants(Stage::Koszul) {
        let k = run.timed(Stage::Koszul, || koszul_check(&basis))?;
        run.report.koszul = Some(KoszulReport {
            koszul_free: k.koszul_free,
            scope: k.scope.to_string(),
            symbols: k.symbols.iter().map(|s| s.to_string_with(&sym)).collect(),
            failure_index: k.failure_index.map(|i| i + 1),
            witness: k.witness.map(|w| w.to_string_with(&sym)),
        });
    }
    if run.wants(Stage::Holonomic) {
        run.report.holonomic = Some(run.timed(Stage::Holonomic, || holonomicity_check(&basis)));
    }
    let complex = if run.wants(Stage::Spencer) { spencer_stage(&mut run, &basis, os) } else { None };
    if run.wants(Stage::SpencerSyzygies) {
        match &complex {
            _ if run.opts.skip_spencer => run.skip(Stage::SpencerSyzygies, "disabled by --skip-spencer"),
            _ if basis.n() > 3 => run.skip(Stage::SpencerSyzygies, "more than three variables"),
            None => run.skip(Stage::SpencerSyzygies, "Spencer complex unavailable"),
            Some(c) => {
                let r = run.timed(Stage::SpencerSyzygies, || spencer_vs_syzygies(&basis, c))?;
                run.report.spencer_matches_syzygies = Some(r);
            }
        }
    }
    if run.wants(Stage::Dual) {
        run.report.tilde_generators = Some(tilde_generators(&basis).iter().map(os).collect());
        match &complex {
            None => run.skip(Stage::Dual, "Spencer complex unavailable"),
            Some(c) => {
                let (dual, ids) = run.timed(Stage::Dual, || (dual_presentation(&basis, c), duality_identity_check(&basis)));
                let ids_hold = ids.iter().all(|c| c.holds);
                run.report.identity_checks = Some(
                    ids.into_iter()
                        .map(|c| IdentityReport { index: c.index, holds: c.holds, failed: c.failed.map(String::from) })
                        .collect(),
                );
                match dual {
                    Ok(d) => {
                        run.report.dual_generators = Some(d.generators.iter().map(os).collect());
                        run.report.duality_theorem_verified = Some(ids_hold);
                    }
                    Err(e) => {
                        run.report.duality_theorem_verified = Some(false);
                        run.report.violations.push(e.to_string());
                    }
                }
                if !ids_hold {
                    run.report.violations.push("duality identities failed".into());
                }
            }
        }
    }
    if run.wants(Stage::Annihilator) {
        let ok = run.timed(Stage::Annihilator, || annihilator_check(&basis))?;
        if !ok {
            run.report.violations.push("a tilde generator does not annihilate 1/f".into());
        }
        run.report.annihilator_check = Some(ok);
    }
    Ok(run.report)
}

fn spencer_stage(run: &mut Run, basis: &LogBasis, os: impl Fn(&WeylOp) -> String) -> Option<SpencerComplex> {
    match run.timed(Stage::Spencer, || spencer_complex(basis)) {
        Ok(c) => {
            run.report.spencer_d2_zero = Some(true);
            run.report.spencer = Some(SpencerReport {
                differentials: c
                    .differentials
                    .iter()
                    .map(|m| m.iter().map(|row| row.iter().map(&os).collect()).collect())
                    .collect(),
            });
            Some(c)
        }
        Err(e) => {
            run.report.spencer_d2_zero = Some(false);
            run.report.violations.push(format!("Spencer complex: {e}"));
            None
        }
    }
}
