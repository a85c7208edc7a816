use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use ricci_core::curvature::{
    certificate_degree, curvature_profile, curvature_report, flow_report, girth_special_cases,
};
use ricci_core::generators::{self, random_connected};
use ricci_core::matching::{
    alternating_reach, counting_identity_check, hall_check, maximum_matching, CountingIdentity,
    HallCheck,
};
use ricci_core::neighborhood::{decompose as partition, induced_bipartite};
use ricci_core::{
    conjecture_scan, io, lambda1_checks, rigidity_check, Certificate, CurvatureReport, Graph,
    Rational, RigidityReport, Side, SrgParams,
};
use serde::Serialize;

#[derive(Debug)]
pub enum CliError {
    /// Bad input or usage; exit code 2.
    Usage(String),
    /// A computed certificate or identity failed; exit code 1.
    Inconsistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Inconsistency(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Inconsistency(m) => write!(f, "inconsistency: {m}"),
        }
    }
}

impl From<ricci_core::Error> for CliError {
    fn from(e: ricci_core::Error) -> Self {
        if e.is_inconsistency() {
            CliError::Inconsistency(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

/// Report text plus whether a check in it failed.
pub struct Output {
    pub text: String,
    pub inconsistent: bool,
}

impl Output {
    fn json(value: &impl Serialize, inconsistent: bool) -> Output {
        let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
        text.push('\n');
        Output { text, inconsistent }
    }
}

pub fn load(path: Option<&Path>, spec: Option<&str>) -> Result<Graph, CliError> {
    match (path, spec) {
        (Some(path), None) => io::read_graph_file(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        (None, Some(spec)) => Ok(generators::generate(spec)?),
        _ => Err(CliError::Usage("give exactly one of --graph and --generate".into())),
    }
}

pub struct CurvatureOptions {
    pub edge: Option<(usize, usize)>,
    pub certify: bool,
    pub eps: Option<Rational>,
    pub csv: bool,
}

/// One output row, shared by the JSON and CSV renderings.
#[derive(Debug, Serialize)]
struct EdgeRow {
    edge: (usize, usize),
    eps: Rational,
    w1: Rational,
    kappa_eps: Rational,
    /// `"condensed"`, or `"scaled"` for `kappa_eps / eps` under `--eps`.
    label: &'static str,
    kappa: Rational,
    method: &'static str,
    matching_size: Option<usize>,
    certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    half_eps_scaled: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    linear: Option<bool>,
}

impl EdgeRow {
    fn condensed(rep: CurvatureReport) -> Self {
        EdgeRow {
            edge: rep.edge,
            eps: rep.eps,
            w1: rep.w1,
            kappa_eps: rep.kappa_eps,
            label: "condensed",
            kappa: rep.curvature,
            method: rep.method.as_str(),
            matching_size: rep.matching_size,
            certificate: rep.certificate,
            half_eps_scaled: None,
            linear: None,
        }
    }

    fn scaled(g: &Graph, edge: (usize, usize), eps: &Rational) -> Result<Self, CliError> {
        let rep = flow_report(g, edge, eps)?;
        let half = flow_report(g, edge, &(eps / Rational::integer(2)))?;
        Ok(EdgeRow {
            edge,
            eps: rep.eps,
            w1: rep.w1,
            kappa_eps: rep.kappa_eps,
            label: "scaled",
            linear: Some(rep.curvature == half.curvature),
            kappa: rep.curvature,
            method: rep.method.as_str(),
            matching_size: None,
            certificate: rep.certificate,
            half_eps_scaled: Some(half.curvature),
        })
    }
}

#[derive(Debug, Serialize)]
struct Summary {
    edges: usize,
    min: Option<Rational>,
    max: Option<Rational>,
    mean: Option<Rational>,
    uniform: bool,
}

#[derive(Debug, Serialize)]
struct CurvatureOut {
    order: usize,
    size: usize,
    rows: Vec<EdgeRow>,
    summary: Summary,
}

pub fn curvature(g: &Graph, opts: &CurvatureOptions) -> Result<Output, CliError> {
    let edges: Vec<(usize, usize)> = match opts.edge {
        Some((u, v)) => {
            g.require_edge(u, v)?;
            vec![(u, v)]
        }
        None => g.edges().collect(),
    };
    let rows: Vec<EdgeRow> = match &opts.eps {
        Some(eps) => {
            if !eps.is_positive() || *eps > Rational::one() {
                return Err(CliError::Usage(format!("--eps must lie in (0, 1], got {eps}")));
            }
            edges.par_iter().map(|&e| EdgeRow::scaled(g, e, eps)).collect::<Result<_, _>>()?
        }
        None => {
            if g.regular_degree().is_none() {
                return Err(CliError::Usage(
                    "graph is not regular: the condensed value is only reported for regular \
                     graphs; pass --eps N/D for kappa_eps / eps"
                        .into(),
                ));
            }
            edges
                .par_iter()
                .map(|&e| Ok(EdgeRow::condensed(curvature_report(g, e, opts.certify)?)))
                .collect::<Result<_, CliError>>()?
        }
    };
    let inconsistent = rows.iter().any(|r| !r.certificate.gap_zero);
    if opts.csv {
        return Ok(Output { text: curvature_csv(&rows), inconsistent });
    }
    let values: Vec<&Rational> = rows.iter().map(|r| &r.kappa).collect();
    let min = values.iter().min().map(|&v| v.clone());
    let max = values.iter().max().map(|&v| v.clone());
    let mean = (!values.is_empty())
        .then(|| values.iter().copied().sum::<Rational>() / Rational::integer(values.len() as i64));
    let summary = Summary { edges: rows.len(), uniform: min == max, min, max, mean };
    Ok(Output::json(&CurvatureOut { order: g.order(), size: g.size(), rows, summary }, inconsistent))
}

fn curvature_csv(rows: &[EdgeRow]) -> String {
    let mut out = String::from("u,v,kappa_num,kappa_den,method,matching_size,gap_zero\n");
    for r in rows {
        let method = if r.label == "scaled" { "scaled" } else { r.method };
        let m = r.matching_size.map(|m| m.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{method},{m},{}",
            r.edge.0,
            r.edge.1,
            r.kappa.numer(),
            r.kappa.denom(),
            r.certificate.gap_zero
        );
    }
    out
}

pub fn decompose(g: &Graph, (x, y): (usize, usize)) -> Result<Output, CliError> {
    Ok(Output::json(&partition(g, (x, y))?, false))
}

#[derive(Debug, Serialize)]
struct ReachOut {
    /// Parent ids on the starting side.
    reach_s: Vec<usize>,
    /// Parent ids on the opposite side.
    reach_t: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct MatchingOut {
    edge: (usize, usize),
    nx: Vec<usize>,
    ny: Vec<usize>,
    m: usize,
    pairs: Vec<(usize, usize)>,
    reach_from_nx: ReachOut,
    reach_from_ny: ReachOut,
    counting_nx: CountingIdentity,
    counting_ny: CountingIdentity,
    hall_nx: HallCheck,
    hall_ny: HallCheck,
}

pub fn matching(g: &Graph, edge: (usize, usize)) -> Result<Output, CliError> {
    let cn = partition(g, edge)?;
    let h = induced_bipartite(g, &cn);
    let m = maximum_matching(&h);
    let reach = |side: Side| {
        let r = alternating_reach(&h, &m, side);
        ReachOut {
            reach_s: r.reach_s.iter().map(|&i| h.parent_id(side, i)).collect(),
            reach_t: r.reach_t.iter().map(|&j| h.parent_id(side.other(), j)).collect(),
        }
    };
    let counting_nx = counting_identity_check(&h, &m, Side::Left)?;
    let counting_ny = counting_identity_check(&h, &m, Side::Right)?;
    let inconsistent = !(counting_nx.holds && counting_ny.holds);
    let out = MatchingOut {
        edge,
        m: m.size(),
        pairs: m.parent_pairs(&h),
        reach_from_nx: reach(Side::Left),
        reach_from_ny: reach(Side::Right),
        counting_nx,
        counting_ny,
        hall_nx: hall_check(&h, Side::Left),
        hall_ny: hall_check(&h, Side::Right),
        nx: cn.nx,
        ny: cn.ny,
    };
    Ok(Output::json(&out, inconsistent))
}

#[derive(Debug, Serialize)]
struct SpectralOut {
    lambda1: f64,
    leq_bound_ok: bool,
    lichnerowicz_ok: bool,
    connected: bool,
    /// `lambda1` equals `n / (n - 1)` within the check slack.
    bound_tight: bool,
    complete: bool,
    min_curvature: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<f64>>,
}

impl SpectralOut {
    fn failed(&self) -> bool {
        !(self.leq_bound_ok && self.lichnerowicz_ok && self.connected) || self.bound_tight != self.complete
    }
}

fn spectral_checks(g: &Graph, rigidity: &RigidityReport, keep_spectrum: bool) -> Result<SpectralOut, CliError> {
    let min = rigidity.min_edge_curvature.clone();
    let rep = lambda1_checks(g, min.as_ref().unwrap_or(&Rational::zero()))?;
    let n = g.order() as f64;
    Ok(SpectralOut {
        lambda1: rep.lambda1,
        leq_bound_ok: rep.leq_bound_ok,
        lichnerowicz_ok: rep.lichnerowicz_ok,
        connected: rep.connected,
        bound_tight: (rep.lambda1 - n / (n - 1.0)).abs() <= ricci_core::spectral::CHECK_SLACK,
        complete: g.is_complete(),
        min_curvature: min,
        spectrum: keep_spectrum.then_some(rep.spectrum),
    })
}

pub fn spectrum(g: &Graph) -> Result<Output, CliError> {
    let rigidity = rigidity_check(g)?;
    let out = spectral_checks(g, &rigidity, true)?;
    let failed = out.failed();
    Ok(Output::json(&out, failed))
}

#[derive(Debug, Serialize)]
struct CertificateOut {
    srg: Option<SrgParams>,
    edges_certified: usize,
    all_gap_zero: bool,
    min: Option<Rational>,
    max: Option<Rational>,
    closed_form: Option<Rational>,
    closed_form_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
struct RandomOut {
    count: usize,
    seed: u64,
    exceptions: Vec<String>,
}

#[derive(Debug, Serialize)]
struct VerifyOut {
    order: usize,
    size: usize,
    rigidity: RigidityReport,
    spectral: SpectralOut,
    certificate: Option<CertificateOut>,
    random: Option<RandomOut>,
}

/// Graph `k` of the random corpus: `random_connected(2 + k % 11, 0.1 + 0.1 * (k % 9), seed + k)`.
fn random_member(seed: u64, k: usize) -> Result<Graph, CliError> {
    let n = 2 + k % 11;
    let p = 0.1 + 0.1 * (k % 9) as f64;
    Ok(random_connected(n, p, seed.wrapping_add(k as u64))?)
}

pub fn verify(g: &Graph, random: Option<usize>, seed: u64) -> Result<Output, CliError> {
    let rigidity = rigidity_check(g)?;
    let spectral = spectral_checks(g, &rigidity, false)?;
    let mut inconsistent = !rigidity.consistent || spectral.failed();

    let certificate = match certificate_degree(g) {
        Some(_) => {
            let profile = curvature_profile(g, true)?;
            let all_gap_zero = profile.reports.iter().all(|r| r.certificate.gap_zero);
            let closed_form = girth_special_cases(g);
            let closed_form_agrees = closed_form
                .as_ref()
                .map(|c| profile.reports.iter().all(|r| r.curvature == *c));
            inconsistent |= !all_gap_zero || closed_form_agrees == Some(false);
            Some(CertificateOut {
                srg: g.detect_srg(),
                edges_certified: profile.reports.len(),
                all_gap_zero,
                min: profile.min,
                max: profile.max,
                closed_form,
                closed_form_agrees,
            })
        }
        None => None,
    };

    let random = match random {
        Some(count) => {
            let mut exceptions = Vec::new();
            for k in 0..count {
                let h = random_member(seed, k)?;
                let rig = rigidity_check(&h)?;
                let spec = spectral_checks(&h, &rig, false)?;
                if !rig.consistent || spec.failed() {
                    exceptions.push(io::to_edge_list(&h));
                }
            }
            inconsistent |= !exceptions.is_empty();
            Some(RandomOut { count, seed, exceptions })
        }
        None => None,
    };

    let out = VerifyOut { order: g.order(), size: g.size(), rigidity, spectral, certificate, random };
    Ok(Output::json(&out, inconsistent))
}

pub fn scan(orders: &[usize], csv: bool) -> Result<Output, CliError> {
    let rows = conjecture_scan(orders)?;
    if !csv {
        return Ok(Output::json(&rows, false));
    }
    let mut text = String::from(
        "q,n,d,alpha,beta,perfect_matching_everywhere,min_num,min_den,max_num,max_den,conjectured_num,conjectured_den,agrees\n",
    );
    for r in &rows {
        let p = r.params;
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.q,
            p.n,
            p.d,
            p.alpha,
            p.beta,
            r.perfect_matching_everywhere,
            r.min_curvature.numer(),
            r.min_curvature.denom(),
            r.max_curvature.numer(),
            r.max_curvature.denom(),
            r.conjectured.numer(),
            r.conjectured.denom(),
            r.agrees
        );
    }
    Ok(Output { text, inconsistent: false })
}

pub fn generate(spec: &str, json: bool) -> Result<Output, CliError> {
    let g = generators::generate(spec)?;
    let mut text = if json { io::to_json(&g) } else { io::to_edge_list(&g) };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Output { text, inconsistent: false })
}
