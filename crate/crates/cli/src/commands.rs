use std::path::PathBuf;
use std::time::Instant;

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;
use unproj_core::lattice::{
    elementary_transformation, hirzebruch, horikawa_numerology, unprojection_chain,
};
use unproj_core::rees::build_rees;
use unproj_core::unprojection::{
    check_normalization, normalize_f, regular_sequence_check, DivisorPoint,
};
use unproj_core::{
    build_unprojection, classify_elementary, f_from_divisor, parse_point, parse_polynomial,
    ChainPoint, DivisorSpec, Error as CoreError, Field, Monomial, ScrollData,
};

use crate::golden::{self, GoldenFile, Provenance};
use crate::grid::Grid;
use crate::report::{Checks, ReportEnvelope};
use crate::suites::{run_grid, SuiteConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Parse { .. }
            | CoreError::InvalidArgument(_)
            | CoreError::InvalidRing(_)
            | CoreError::Inhomogeneous
            | CoreError::ZeroPolynomial => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Flags shared by every command.
#[derive(Clone, Debug)]
pub struct Common {
    pub field: Field,
    pub degree_bound: Option<u64>,
    pub golden_dir: PathBuf,
}

impl Default for Common {
    fn default() -> Self {
        Common {
            field: Field::Rational,
            degree_bound: None,
            golden_dir: golden::default_dir(),
        }
    }
}

fn envelope(
    command: &str,
    inputs: Value,
    mut results: Value,
    checks: Checks,
    start: Instant,
) -> ReportEnvelope {
    let status = checks.status();
    results["checks"] = serde_json::to_value(&checks).expect("checks serialise");
    ReportEnvelope {
        command: command.into(),
        inputs,
        results,
        status,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn scroll(m: usize, n: usize, common: &Common) -> CliResult<ReportEnvelope> {
    let start = Instant::now();
    let d = common.degree_bound.unwrap_or(4);
    let s = ScrollData::new(m, n, common.field)?;
    let inputs = json!({ "m": m, "n": n, "field": common.field.to_string(), "degree_bound": d });

    let dim = s.krull_dimension()?;
    let hilbert = s.hilbert_function(d.max(4))?;
    let degree = s.surface_degree(d.max(4))?;
    let basis = s.verify_basis_claim(d)?;
    let second = s.verify_second_claim(d)?;
    let hom = s.hom_degree_zero_dim()?;
    let mut checks = Checks::default();
    checks.check("krull dimension is 3", dim == 3);
    checks.check(
        format!("degree is {}", m + n),
        degree == Some((m + n) as u64),
    );
    checks.check("phi maps Q into Q1", s.verify_phi()?);
    checks.check("kernel of g is Q", s.verify_g_kernel()?);
    checks.check(format!("monomial basis up to degree {d}"), basis.holds);
    checks.check(
        format!("kernel of g contained in Q1 up to degree {d}"),
        second.holds,
    );
    checks.check("degree-zero Hom has dimension 2", hom == 2);
    let results = json!({
        "presentation": s.summary(),
        "krull_dimension": dim,
        "hilbert": hilbert.values(),
        "degree": degree,
        "basis_claim": basis,
        "second_claim": second,
        "hom_degree_zero_dim": hom,
    });
    Ok(envelope("scroll", inputs, results, checks, start))
}

/// Where `f` comes from on the command line.
#[derive(Clone, Debug)]
pub enum FSource {
    /// `a:b` or `a:b@k` per point.
    Points(Vec<String>),
    Poly(String),
}

fn parse_divisor(points: &[String]) -> CliResult<DivisorSpec> {
    let mut out = Vec::new();
    for p in points {
        let (pt, mult) = match p.split_once('@') {
            Some((pt, k)) => (
                pt,
                k.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::Usage(format!("bad multiplicity in {p:?}")))?,
            ),
            None => (p.as_str(), 1),
        };
        let (a, b) = parse_point(pt)?;
        out.push(DivisorPoint {
            a,
            b,
            multiplicity: mult,
        });
    }
    Ok(DivisorSpec::new(out)?)
}

pub fn unproject(
    m: usize,
    n: usize,
    source: &FSource,
    rees: bool,
    common: &Common,
) -> CliResult<ReportEnvelope> {
    let start = Instant::now();
    let bound = common.degree_bound.unwrap_or(5);
    let s = ScrollData::new(m, n, common.field)?;
    let f = match source {
        FSource::Points(p) => f_from_divisor(&s, &parse_divisor(p)?)?,
        FSource::Poly(text) => parse_polynomial(s.ring(), text)?,
    };
    let source_json = match source {
        FSource::Points(p) => json!({ "points": p }),
        FSource::Poly(text) => json!({ "f": text }),
    };
    let inputs = json!({
        "m": m, "n": n, "source": source_json, "rees": rees,
        "field": common.field.to_string(), "degree_bound": bound,
    });

    let nf = normalize_f(&s, &f)?;
    let mut checks = Checks::default();
    if nf.not_a_domain {
        checks.check("f is not in I", false);
        let i_gens = strings(s.i().generators());
        let results = json!({
            "f": f.to_string(),
            "diagnosis": format!("f = {f} lies in I = ({}), so S_un(f) is not a domain", i_gens.join(", ")),
        });
        return Ok(envelope("unproject", inputs, results, checks, start));
    }
    let k = f.homogeneous_degree()? as u32;
    let u = build_unprojection(&s, &f)?;
    let cmp = u.compare_presentations()?;
    let dim = u.krull_dimension()?;
    let codim = u.codimension()?;
    let hilbert = u.hilbert_table(bound)?.values();
    checks.check("f is not in I", true);
    checks.check("both presentations define the same ideal", cmp.equal);
    checks.check("krull dimension is 3", dim == 3);
    checks.check(format!("codimension is {}", m + n), codim == m + n);
    checks.check("localization witness", u.localization_witness()?);
    checks.check("regular sequence", regular_sequence_check(&s, &f)?);
    checks.check(
        "T -> T - phi(i) identifies S_un(f) with S_un(f')",
        check_normalization(&s, &f)?,
    );

    let mut results = json!({
        "f": f.to_string(),
        "k": k,
        "f_prime": nf.f_prime.to_string(),
        "q2_minors": strings(u.q2_minors().generators()),
        "q2_def": strings(u.q2_def().generators()),
        "comparison": cmp,
        "krull_dimension": dim,
        "codimension": codim,
        "hilbert": hilbert,
    });

    if k == 1 {
        let nv = s.ring().nvars();
        let coeff = |v: usize| -> BigRational {
            nf.f_prime.coefficient(&Monomial::var(nv, v)).to_rational()
        };
        let c = classify_elementary(&s, &coeff(s.x0(m)), &coeff(s.x1(n)))?;
        let target = c.target.hilbert_function(bound)?.values();
        checks.check(format!("isomorphic to {}", c.tag), c.verified());
        checks.check(
            format!("hilbert table equals that of {}", c.tag),
            target == hilbert,
        );
        results["classification"] = json!({
            "tag": c.tag.to_string(),
            "abstract": c.tag.abstract_name(),
            "determinant": c.determinant.to_string(),
            "change_of_variables": strings(c.change_of_variables.images()),
        });
    } else {
        let key = golden::key(m, n, k, &f.to_string(), &common.field.to_string());
        let g = golden::load(&common.golden_dir).map_err(CliError::Usage)?;
        let prefix: Vec<u64> = hilbert
            .iter()
            .copied()
            .take(crate::suites::HILBERT_BOUND as usize + 1)
            .collect();
        results["golden"] = match g.hilbert.get(&key) {
            Some(table) => {
                let n = table.len().min(prefix.len());
                checks.check("hilbert table matches golden", table[..n] == prefix[..n]);
                json!({ "key": key, "table": table })
            }
            None => json!({ "key": key, "table": null }),
        };
    }

    if rees {
        let r = build_rees(&s, &f)?;
        let base = r.eliminate_to_base()?;
        let unproj = r.eliminate_to_unprojection()?;
        checks.check("(B + Q) ∩ R equals Q", base.comparison.equal);
        checks.check("(B + Q) ∩ R[Tf] contains Q2", unproj.comparison.superset);
        checks.check(
            "minors vanish on the tautological point",
            r.tautological_check()?,
        );
        results["rees"] = json!({
            "b": strings(r.b().generators()),
            "base": base,
            "unprojection": unproj,
            "unprojection_elimination_is_q": r.unprojection_elimination_equals_q()?,
            "strict_transform_dimension": r.strict_transform_dimension()?,
        });
    }
    Ok(envelope("unproject", inputs, results, checks, start))
}

pub fn lattice_chain(
    d: &[u32],
    hirzebruch_index: i64,
    on_delta0: Option<usize>,
) -> CliResult<ReportEnvelope> {
    let start = Instant::now();
    let inputs = json!({ "D": d, "hirzebruch": hirzebruch_index, "on_delta0": on_delta0 });
    if on_delta0.is_some_and(|i| i >= d.len()) {
        return Err(CliError::Usage("--on-delta0 index out of range".into()));
    }
    let pts: Vec<ChainPoint> = d
        .iter()
        .enumerate()
        .map(|(i, &k)| ChainPoint {
            multiplicity: k,
            on_delta0: on_delta0 == Some(i),
        })
        .collect();
    let r = unprojection_chain(&hirzebruch(hirzebruch_index)?, &pts)?;
    let k: u32 = d.iter().sum();
    let mut checks = Checks::default();
    checks.check(format!("Γ̂² = -{k}"), r.gamma_hat_sq == -(k as i64));
    checks.check("chain configuration", r.configuration_ok);
    let sing: Vec<String> = r.singularities.iter().map(|s| s.kind.to_string()).collect();
    let results = json!({
        "gamma_hat_sq": r.gamma_hat_sq,
        "chains": r.chains,
        "singularities": sing,
        "blow_ups": r.blow_ups,
    });
    Ok(envelope("lattice chain", inputs, results, checks, start))
}

pub fn lattice_elementary(d: i64, on_delta0: bool) -> CliResult<ReportEnvelope> {
    let start = Instant::now();
    let r = elementary_transformation(d, on_delta0)?;
    let want = if on_delta0 { d + 1 } else { (d - 1).abs() };
    let mut checks = Checks::default();
    checks.check(format!("lands on F_{want}"), r.d_prime == want);
    let results = serde_json::to_value(&r).expect("report serialises");
    Ok(envelope(
        "lattice elementary",
        json!({ "d": d, "on_delta0": on_delta0 }),
        results,
        checks,
        start,
    ))
}

pub fn lattice_horikawa(m: usize, n: usize, infinitely_near: bool) -> CliResult<ReportEnvelope> {
    let start = Instant::now();
    let h = horikawa_numerology(m, n, infinitely_near)?;
    let pg = (m + n + 2) as i64;
    let mut checks = Checks::default();
    checks.check(format!("pg = {pg}"), h.pg == pg);
    checks.check(format!("K² = {}", 2 * pg - 3), h.k_sq == 2 * pg - 3);
    checks.check("Γ̂² = -2", h.gamma_hat_sq == -2);
    let results = json!({
        "d": h.d,
        "pg": h.pg,
        "Ksq": h.k_sq,
        "L": h.l,
        "L_sq": h.l_sq,
        "L_dot_gamma_hat": h.l_dot_gamma_hat,
        "gamma_hat_sq": h.gamma_hat_sq,
        "singularities": strings(&h.singularities.iter().map(|s| s.kind).collect::<Vec<_>>()),
    });
    Ok(envelope(
        "lattice horikawa",
        json!({ "m": m, "n": n, "infinitely_near": infinitely_near }),
        results,
        checks,
        start,
    ))
}

pub fn verify_all(
    grid: Grid,
    update_golden: bool,
    rees: bool,
    common: &Common,
) -> CliResult<ReportEnvelope> {
    let start = Instant::now();
    let mut cfg = SuiteConfig::new(grid, common.field);
    cfg.rees = rees;
    if let Some(d) = common.degree_bound {
        cfg.claim_degree = d;
    }
    let mut stored = golden::load(&common.golden_dir).map_err(CliError::Usage)?;
    let inputs = json!({
        "grid": grid.to_string(), "field": common.field.to_string(), "rees": rees,
        "update_golden": update_golden, "claim_degree": cfg.claim_degree, "seed": cfg.seed,
    });
    let baseline = if update_golden {
        GoldenFile::default()
    } else {
        stored.clone()
    };
    let run = run_grid(&cfg, &baseline)?;
    let summary: Vec<String> = run
        .suites
        .iter()
        .map(|s| {
            format!(
                "{} {}",
                if s.passed() { "PASS" } else { "FAIL" },
                s.summary_line()
            )
        })
        .collect();
    let mut results = json!({
        "summary": summary,
        "suites": run.suites.iter().map(|s| json!({
            "criterion": s.criterion,
            "name": s.name,
            "passed": s.passed(),
            "summary": s.summary_line(),
            "failures": s.checks.failures().map(|c| c.label.clone()).collect::<Vec<_>>(),
            "errors": s.checks.errors,
            "data": s.data,
        })).collect::<Vec<_>>(),
    });
    let mut checks = run.checks();
    if update_golden {
        let field = common.field.to_string();
        stored
            .hilbert
            .retain(|k, _| !run.computed.hilbert.contains_key(k));
        stored
            .eliminations
            .retain(|k, _| !run.computed.eliminations.contains_key(k));
        stored.hilbert.extend(run.computed.hilbert.clone());
        stored
            .eliminations
            .extend(run.computed.eliminations.clone());
        let mut fields = stored.provenance.fields.clone();
        if !fields.contains(&field) {
            fields.push(field);
            fields.sort();
        }
        stored.provenance = Provenance {
            generator: "unproj verify-all --update-golden".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            grid: grid.to_string(),
            fields,
        };
        golden::save(&common.golden_dir, &stored).map_err(CliError::Failed)?;
        results["golden_written"] = json!(common.golden_dir.join(golden::FILE_NAME));
        checks.errors.retain(|e| !e.contains("no golden table"));
    }
    Ok(envelope("verify-all", inputs, results, checks, start))
}
