//! Exact optimal transport on graphs.
//!
//! Measures carry rational masses. [`wasserstein`] scales both measures by
//! the lcm of their denominators, moves only the surplus `mu - nu` through an
//! integer min-cost flow, and returns the optimal plan together with an
//! integer Kantorovich potential whose dual value equals the plan cost.

mod flow;
mod measure;
mod plan;
mod potential;
mod srg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

pub use measure::{lazy_measure, Measure};
pub use plan::{verify_plan, PlanViolation, TransportPlan};
pub use potential::{check_lipschitz, dual_bound, Potential};
pub use srg::{srg_plan, srg_potential, two_step_pairing};

/// Optimal value, an optimal plan, and a potential attaining the same value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalTransport {
    pub distance: Rational,
    pub plan: TransportPlan,
    pub potential: Potential,
}

fn scaled(mass: &Rational, scale: &BigInt) -> Result<i64> {
    let v = mass.as_big() * num_rational::BigRational::from_integer(scale.clone());
    debug_assert!(v.is_integer());
    v.to_integer().to_i64().ok_or(Error::Overflow)
}

/// Wasserstein-1 distance between `mu` and `nu` under the hop metric of `g`.
///
/// The result is certified before returning: the plan satisfies both
/// marginals, and the potential is 1-Lipschitz with dual value equal to the
/// plan cost.
pub fn wasserstein(g: &Graph, mu: &Measure, nu: &Measure) -> Result<OptimalTransport> {
    let n = g.order();
    let dist = g.distances();
    for (v, _) in mu.iter().chain(nu.iter()) {
        if v >= n {
            return Err(Error::InvalidMeasure(format!("vertex {v} outside the graph")));
        }
    }
    let anchor = mu.iter().next().map(|(v, _)| v).expect("measures are non-empty");
    if let Some((v, _)) = mu.iter().chain(nu.iter()).find(|&(v, _)| dist.get(anchor, v).is_none()) {
        return Err(Error::Unreachable(anchor, v));
    }

    let scale = mu
        .iter()
        .chain(nu.iter())
        .fold(BigInt::one(), |acc, (_, m)| acc.lcm(m.denom()));

    // Shared mass stays in place; only the surplus moves.
    let mut vertices: Vec<usize> = mu.iter().chain(nu.iter()).map(|(v, _)| v).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let mut diagonal = Vec::new();
    let (mut sources, mut supply) = (Vec::new(), Vec::new());
    let (mut sinks, mut demand) = (Vec::new(), Vec::new());
    for &v in &vertices {
        let (a, b) = (mu.mass(v), nu.mass(v));
        let shared = if a < b { a.clone() } else { b.clone() };
        if !shared.is_zero() {
            diagonal.push(((v, v), shared));
        }
        if a > b {
            sources.push(v);
            supply.push(scaled(&(a - b), &scale)?);
        } else if b > a {
            sinks.push(v);
            demand.push(scaled(&(b - a), &scale)?);
        }
    }
    let cost: Vec<Vec<i64>> = sources
        .iter()
        .map(|&u| sinks.iter().map(|&v| i64::from(dist.raw(u, v))).collect())
        .collect();

    let solution = flow::solve_transportation(&supply, &demand, &cost);
    let scale_r = Rational::from_big(scale.clone(), BigInt::one());
    let distance = Rational::from_big(BigInt::from(solution.cost), scale.clone());

    let moved = solution.flows.iter().map(|&(i, j, amount)| {
        ((sources[i], sinks[j]), Rational::integer(amount) / &scale_r)
    });
    let plan = TransportPlan::new(mu.clone(), nu.clone(), diagonal.into_iter().chain(moved));

    let potential = match flow::residual_duals(sources.len(), sinks.len(), &cost, &solution.flows) {
        Some((pi_src, pi_snk)) => extend_potential(g, &sources, &pi_src, &sinks, &pi_snk),
        None => {
            return Err(Error::CertificateMismatch {
                primal: Box::new(distance.clone()),
                dual: Box::new(Rational::zero()),
            })
        }
    };

    certify(g, mu, nu, &plan, &potential, &distance)?;
    Ok(OptimalTransport { distance, plan, potential })
}

/// Turns transportation duals into a 1-Lipschitz vertex function.
///
/// With `f = -pi` on the supports, `f(source) - f(sink) <= dist`. Taking
/// `F(z) = min over sinks v of dist(z, v) + f(v)` gives a 1-Lipschitz function
/// with `F <= f` on sinks and `F >= f` on sources, so its dual value is at
/// least that of `f`. Vertices outside the component of the sinks get 0.
fn extend_potential(
    g: &Graph,
    sources: &[usize],
    pi_src: &[i64],
    sinks: &[usize],
    pi_snk: &[i64],
) -> Potential {
    let n = g.order();
    let dist = g.distances();
    debug_assert_eq!(sources.len(), pi_src.len());
    if sinks.is_empty() {
        return Potential::zero(n);
    }
    let values = (0..n)
        .map(|z| {
            sinks
                .iter()
                .zip(pi_snk)
                .filter_map(|(&v, &p)| dist.get(z, v).map(|d| i64::from(d) - p))
                .min()
                .unwrap_or(0)
        })
        .collect();
    Potential::new(values)
}

fn certify(
    g: &Graph,
    mu: &Measure,
    nu: &Measure,
    plan: &TransportPlan,
    potential: &Potential,
    distance: &Rational,
) -> Result<()> {
    if let Err(violation) = verify_plan(plan) {
        return Err(Error::PreconditionViolated(format!("solver produced an invalid plan: {violation}")));
    }
    let primal = plan.cost(g)?;
    let dual = dual_bound(g, potential, mu, nu)?;
    if primal != *distance || dual != *distance {
        return Err(Error::CertificateMismatch { primal: Box::new(primal), dual: Box::new(dual) });
    }
    Ok(())
}
