//! Edge curvature from lazy random walks.
//!
//! For an edge `(x, y)` and idleness `eps`, `kappa_eps = 1 - W1(m_x, m_y)`
//! where `m_v` keeps mass `1 - eps` at `v` and spreads `eps` uniformly over
//! its neighbors. The condensed curvature is the slope of `kappa_eps` at 0;
//! `kappa_eps` is linear on `[0, 1/2]`, so it equals `2 kappa_{1/2}`.
//!
//! On regular graphs of diameter at most 2 the value also follows from a
//! maximum matching `M` between the exclusive neighbor sets:
//! `(alpha + 2) / d - (|N_x| - |M|) / d`. [`srg_curvature_certified`] builds
//! the matching plan and potential, checks they agree, and cross-checks the
//! generic flow value.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::paley;
use crate::graph::{Graph, SrgParams};
use crate::matching::{hall_check, maximum_matching};
use crate::neighborhood::{decompose, induced_bipartite, Side};
use crate::rational::Rational;
use crate::transport::{
    dual_bound, lazy_measure, srg_plan, srg_potential, two_step_pairing, verify_plan,
    wasserstein, OptimalTransport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Flow,
    SrgFormula,
    /// Matching certificate and flow both computed and in agreement.
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Flow => "flow",
            Method::SrgFormula => "srg_formula",
            Method::Both => "both",
        }
    }
}

/// Primal plan cost against the dual value of a 1-Lipschitz potential.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub plan_cost: Rational,
    pub dual_value: Rational,
    pub gap_zero: bool,
}

impl Certificate {
    fn new(plan_cost: Rational, dual_value: Rational) -> Self {
        let gap_zero = plan_cost == dual_value;
        Certificate { plan_cost, dual_value, gap_zero }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub edge: (usize, usize),
    pub eps: Rational,
    pub w1: Rational,
    pub kappa_eps: Rational,
    /// `kappa_eps / eps`; the condensed curvature whenever `eps <= 1/2`.
    pub curvature: Rational,
    pub method: Method,
    pub certificate: Certificate,
    pub matching_size: Option<usize>,
}

/// Optimal transport between the lazy walks at the ends of `edge`.
pub fn edge_transport(g: &Graph, (x, y): (usize, usize), eps: &Rational) -> Result<OptimalTransport> {
    g.require_edge(x, y)?;
    let mu = lazy_measure(g, x, eps)?;
    let nu = lazy_measure(g, y, eps)?;
    wasserstein(g, &mu, &nu)
}

pub fn kappa_eps(g: &Graph, edge: (usize, usize), eps: &Rational) -> Result<Rational> {
    Ok(Rational::one() - edge_transport(g, edge, eps)?.distance)
}

/// `2 kappa_{1/2}` on a regular graph. With `verify`, also checks that
/// `kappa_{1/4}` is a quarter of the result.
pub fn condensed(g: &Graph, edge: (usize, usize), verify: bool) -> Result<Rational> {
    if g.regular_degree().is_none() {
        return Err(Error::IrregularGraph);
    }
    let k = Rational::integer(2) * kappa_eps(g, edge, &Rational::new(1, 2))?;
    if verify && kappa_eps(g, edge, &Rational::new(1, 4))? * Rational::integer(4) != k {
        return Err(Error::NonlinearActivity(Rational::new(1, 4)));
    }
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledCurvature {
    pub eps: Rational,
    pub kappa_eps: Rational,
    /// `kappa_eps / eps`.
    pub scaled: Rational,
    /// `kappa_{eps/2} / (eps/2)`.
    pub half_scaled: Rational,
    /// Whether the two ratios agree.
    pub linear: bool,
}

/// `kappa_eps / eps` next to the same ratio at `eps / 2`. Works on any graph.
pub fn scaled_curvature(g: &Graph, edge: (usize, usize), eps: &Rational) -> Result<ScaledCurvature> {
    if !eps.is_positive() {
        return Err(Error::InvalidMeasure(format!("eps must be positive, got {eps}")));
    }
    let kappa = kappa_eps(g, edge, eps)?;
    let half = eps / Rational::integer(2);
    let scaled = &kappa / eps;
    let half_scaled = kappa_eps(g, edge, &half)? / &half;
    Ok(ScaledCurvature {
        eps: eps.clone(),
        kappa_eps: kappa,
        linear: scaled == half_scaled,
        scaled,
        half_scaled,
    })
}

/// Condensed curvature of an edge of an arbitrary graph, via the flow solver.
/// Fails with [`Error::NonlinearActivity`] if `kappa_eps / eps` differs at
/// `1/2` and `1/4`.
pub fn edge_curvature(g: &Graph, edge: (usize, usize)) -> Result<Rational> {
    let s = scaled_curvature(g, edge, &Rational::new(1, 2))?;
    if !s.linear {
        return Err(Error::NonlinearActivity(Rational::new(1, 2)));
    }
    Ok(s.scaled)
}

/// Flow-based report at idleness `eps`.
pub fn flow_report(g: &Graph, edge: (usize, usize), eps: &Rational) -> Result<CurvatureReport> {
    if !eps.is_positive() {
        return Err(Error::InvalidMeasure(format!("eps must be positive, got {eps}")));
    }
    let ot = edge_transport(g, edge, eps)?;
    let plan_cost = ot.plan.cost(g)?;
    let dual_value = dual_bound(g, &ot.potential, ot.plan.source(), ot.plan.target())?;
    let kappa = Rational::one() - &ot.distance;
    Ok(CurvatureReport {
        edge,
        eps: eps.clone(),
        curvature: &kappa / eps,
        w1: ot.distance,
        kappa_eps: kappa,
        method: Method::Flow,
        certificate: Certificate::new(plan_cost, dual_value),
        matching_size: None,
    })
}

/// `(alpha + 2) / d - (|N_x| - m) / d` with `|N_x| = d - alpha - 1`.
pub fn matching_formula(d: usize, alpha: usize, m: usize) -> Result<Rational> {
    if d == 0 || alpha + 1 > d {
        return Err(Error::PreconditionViolated(format!(
            "no edge with degree {d} and {alpha} common neighbors"
        )));
    }
    let exclusive = d - alpha - 1;
    if m > exclusive {
        return Err(Error::InvalidMatchingSize { m, max: exclusive });
    }
    let d = d as i64;
    Ok(Rational::new(alpha as i64 + 2, d) - Rational::new((exclusive - m) as i64, d))
}

pub fn srg_formula(params: &SrgParams, m: usize) -> Result<Rational> {
    matching_formula(params.d, params.alpha, m)
}

/// Degree of `g` when the matching certificate applies: connected, regular,
/// at least one edge, diameter at most 2.
pub fn certificate_degree(g: &Graph) -> Option<usize> {
    let d = g.regular_degree()?;
    (d > 0 && g.is_connected() && g.diameter()? <= 2).then_some(d)
}

/// Condensed curvature of `edge` from the matching plan and potential,
/// cross-checked against the flow solver.
pub fn srg_curvature_certified(g: &Graph, edge: (usize, usize)) -> Result<CurvatureReport> {
    let d = certificate_degree(g).ok_or(Error::UnsupportedGraph)?;
    let cn = decompose(g, edge)?;
    let h = induced_bipartite(g, &cn);
    let m = maximum_matching(&h);
    let pairing = two_step_pairing(g, &h, &m)?;
    let plan = srg_plan(g, &cn, &h, &m, &pairing)?;
    if let Err(v) = verify_plan(&plan) {
        return Err(Error::PreconditionViolated(format!("matching plan is invalid: {v}")));
    }
    let f = srg_potential(g, &cn, &h, &m)?;
    let plan_cost = plan.cost(g)?;
    let dual_value = dual_bound(g, &f, plan.source(), plan.target())?;

    let formula = matching_formula(d, cn.triangle.len(), m.size())?;
    let half = Rational::new(1, 2);
    let flow = edge_transport(g, edge, &half)?.distance;
    let from_flow = Rational::integer(2) * (Rational::one() - &flow);
    if formula != from_flow {
        return Err(Error::FormulaMismatch {
            formula: Box::new(formula),
            flow: Box::new(from_flow),
        });
    }
    let mut certificate = Certificate::new(plan_cost, dual_value);
    certificate.gap_zero &= certificate.plan_cost == flow;
    Ok(CurvatureReport {
        edge,
        eps: half,
        kappa_eps: Rational::one() - &flow,
        w1: flow,
        curvature: formula,
        method: Method::Both,
        certificate,
        matching_size: Some(m.size()),
    })
}

/// Certified report when the matching certificate applies, flow report at
/// `eps = 1/2` otherwise. `require_certificate` turns the fallback into
/// [`Error::UnsupportedGraph`].
pub fn curvature_report(
    g: &Graph,
    edge: (usize, usize),
    require_certificate: bool,
) -> Result<CurvatureReport> {
    if certificate_degree(g).is_some() {
        srg_curvature_certified(g, edge)
    } else if require_certificate {
        Err(Error::UnsupportedGraph)
    } else {
        flow_report(g, edge, &Rational::new(1, 2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureProfile {
    pub reports: Vec<CurvatureReport>,
    pub min: Option<Rational>,
    pub max: Option<Rational>,
    pub mean: Option<Rational>,
    pub uniform: bool,
}

/// Reports for every edge in lexicographic order. Edges are processed in
/// parallel; the output order does not depend on scheduling.
pub fn curvature_profile(g: &Graph, require_certificate: bool) -> Result<CurvatureProfile> {
    g.require_connected()?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let reports = edges
        .par_iter()
        .map(|&e| curvature_report(g, e, require_certificate))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<&Rational> = reports.iter().map(|r| &r.curvature).collect();
    let min = values.iter().min().map(|&v| v.clone());
    let max = values.iter().max().map(|&v| v.clone());
    let mean = (!values.is_empty()).then(|| {
        values.iter().copied().sum::<Rational>() / Rational::integer(values.len() as i64)
    });
    Ok(CurvatureProfile { uniform: min == max, reports, min, max, mean })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub is_complete: bool,
    pub min_edge_curvature: Option<Rational>,
    pub all_above_one: bool,
    /// Every edge above 1 exactly when the graph is complete.
    pub consistent: bool,
}

/// Checks that every edge has curvature above 1 only on complete graphs.
pub fn rigidity_check(g: &Graph) -> Result<RigidityReport> {
    g.require_connected()?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let values = edges
        .par_iter()
        .map(|&e| edge_curvature(g, e))
        .collect::<Result<Vec<_>>>()?;
    let one = Rational::one();
    let all_above_one = values.iter().all(|k| *k > one);
    let is_complete = g.is_complete();
    Ok(RigidityReport {
        is_complete,
        min_edge_curvature: values.into_iter().min(),
        all_above_one,
        consistent: all_above_one == is_complete,
    })
}

/// Closed forms on strongly regular graphs: `3/d - 1` at girth 5 and `2/d`
/// at girth 4. `None` for anything else.
pub fn girth_special_cases(g: &Graph) -> Option<Rational> {
    let params = g.detect_srg()?;
    let d = params.d as i64;
    match g.girth()? {
        5 => Some(Rational::new(3, d) - Rational::one()),
        4 => Some(Rational::new(2, d)),
        _ => None,
    }
}

/// Value predicted on conference graphs with parameter `beta`.
pub fn conference_prediction(beta: usize) -> Rational {
    Rational::new(1, 2) + Rational::new(1, 2 * beta as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub q: usize,
    pub params: SrgParams,
    pub perfect_matching_everywhere: bool,
    pub min_curvature: Rational,
    pub max_curvature: Rational,
    pub conjectured: Rational,
    /// Every edge equals the prediction.
    pub agrees: bool,
}

/// Certified curvature on Paley graphs of the given orders against
/// [`conference_prediction`]. Orders with `beta < 2` are rejected.
pub fn conjecture_scan(orders: &[usize]) -> Result<Vec<ConjectureRow>> {
    orders.iter().map(|&q| conjecture_row(q)).collect()
}

fn conjecture_row(q: usize) -> Result<ConjectureRow> {
    let g = paley(q)?;
    let params = g
        .detect_srg()
        .ok_or_else(|| Error::UnsupportedParameter(format!("paley:{q} is not strongly regular")))?;
    if params.beta < 2 {
        return Err(Error::UnsupportedParameter(format!(
            "paley:{q} has beta = {}, need at least 2",
            params.beta
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let rows = edges
        .par_iter()
        .map(|&e| {
            let cn = decompose(&g, e)?;
            let perfect = hall_check(&induced_bipartite(&g, &cn), Side::Left).satisfied;
            Ok((perfect, srg_curvature_certified(&g, e)?.curvature))
        })
        .collect::<Result<Vec<_>>>()?;
    let conjectured = conference_prediction(params.beta);
    let min = rows.iter().map(|r| &r.1).min().cloned().unwrap_or_else(Rational::zero);
    let max = rows.iter().map(|r| &r.1).max().cloned().unwrap_or_else(Rational::zero);
    Ok(ConjectureRow {
        q,
        params,
        perfect_matching_everywhere: rows.iter().all(|r| r.0),
        agrees: rows.iter().all(|r| r.1 == conjectured),
        min_curvature: min,
        max_curvature: max,
        conjectured,
    })
}
