//! Explicit transport plan and Kantorovich potential for an edge of a
//! regular graph of diameter at most 2, built from a maximum matching between
//! the exclusive neighbor sets.

use std::collections::BTreeSet;

use super::measure::lazy_measure;
use super::plan::TransportPlan;
use super::potential::{check_lipschitz, Potential};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{alternating_reach, has_augmenting_path, Matching};
use crate::neighborhood::{BipartiteGraph, CoreNeighborhood, Side};
use crate::rational::Rational;

/// Pairs the unmatched vertices of `N_x` and `N_y` in ascending order.
/// Each pair is checked to be at distance exactly 2.
pub fn two_step_pairing(
    g: &Graph,
    h: &BipartiteGraph,
    m: &Matching,
) -> Result<Vec<(usize, usize)>> {
    let ux: Vec<usize> = m.unmatched(Side::Left).into_iter().map(|i| h.left[i]).collect();
    let uy: Vec<usize> = m.unmatched(Side::Right).into_iter().map(|j| h.right[j]).collect();
    if ux.len() != uy.len() {
        return Err(Error::InvalidPairing(format!(
            "{} unmatched vertices in N_x but {} in N_y",
            ux.len(),
            uy.len()
        )));
    }
    let pairs: Vec<(usize, usize)> = ux.into_iter().zip(uy).collect();
    for &(u, v) in &pairs {
        if g.dist(u, v) != Some(2) {
            return Err(Error::InvalidPairing(format!(
                "unmatched vertices {u} and {v} are not at distance 2"
            )));
        }
    }
    Ok(pairs)
}

/// Plan between the `eps = 1/2` lazy measures at `x` and `y` that sends the
/// surplus at `x` straight to `y`, keeps `{x, y}` and the common neighbors in
/// place, moves matched neighbors one step along their matching edge and
/// unmatched neighbors two steps along `pairing`.
///
/// `pairing` must biject the unmatched vertices of `N_x` onto those of `N_y`
/// (parent ids) with every pair at distance 2.
pub fn srg_plan(
    g: &Graph,
    cn: &CoreNeighborhood,
    h: &BipartiteGraph,
    m: &Matching,
    pairing: &[(usize, usize)],
) -> Result<TransportPlan> {
    if cn.nx.len() != cn.ny.len() {
        return Err(Error::PreconditionViolated(format!(
            "deg({}) != deg({}): exclusive neighbor sets differ in size",
            cn.x, cn.y
        )));
    }
    let ux: BTreeSet<usize> = m.unmatched(Side::Left).into_iter().map(|i| h.left[i]).collect();
    let uy: BTreeSet<usize> = m.unmatched(Side::Right).into_iter().map(|j| h.right[j]).collect();
    let paired_x: BTreeSet<usize> = pairing.iter().map(|p| p.0).collect();
    let paired_y: BTreeSet<usize> = pairing.iter().map(|p| p.1).collect();
    if paired_x != ux || paired_y != uy || pairing.len() != ux.len() {
        return Err(Error::InvalidPairing(
            "pairing is not a bijection between the unmatched vertices".into(),
        ));
    }
    if let Some(&(u, v)) = pairing.iter().find(|&&(u, v)| g.dist(u, v) != Some(2)) {
        return Err(Error::InvalidPairing(format!("pair ({u}, {v}) is not at distance 2")));
    }

    let d = cn.degree_x() as i64;
    let half = Rational::new(1, 2);
    let share = Rational::new(1, 2 * d);
    let mut entries = vec![((cn.x, cn.y), &half - &share)];
    let stay = [cn.x, cn.y].into_iter().chain(cn.triangle.iter().copied());
    entries.extend(stay.map(|v| ((v, v), share.clone())));
    entries.extend(m.parent_pairs(h).into_iter().map(|p| (p, share.clone())));
    entries.extend(pairing.iter().map(|&p| (p, share.clone())));

    Ok(TransportPlan::new(
        lazy_measure(g, cn.x, &half)?,
        lazy_measure(g, cn.y, &half)?,
        entries,
    ))
}

/// Potential equal to 1 on `x` and on the vertices of `N_x` not reached by
/// alternating paths from `N_y`, -1 on the vertices of `N_y` that are
/// reached, and 0 elsewhere. `m` must be maximum; the result is checked to be
/// 1-Lipschitz on all of `g`.
pub fn srg_potential(
    g: &Graph,
    cn: &CoreNeighborhood,
    h: &BipartiteGraph,
    m: &Matching,
) -> Result<Potential> {
    if has_augmenting_path(h, m) {
        return Err(Error::PreconditionViolated(
            "matching is not maximum (an augmenting path exists)".into(),
        ));
    }
    let reach = alternating_reach(h, m, Side::Right);
    let reached_x: BTreeSet<usize> = reach.reach_t.iter().copied().collect();
    let plus = std::iter::once(cn.x).chain(
        (0..h.left.len())
            .filter(|i| !reached_x.contains(i))
            .map(|i| h.left[i]),
    );
    let minus = reach.reach_s.iter().map(|&j| h.right[j]);
    let f = Potential::from_sparse(
        g.order(),
        plus.map(|v| (v, 1)).chain(minus.map(|v| (v, -1))),
    );
    check_lipschitz(g, &f)?;
    Ok(f)
}
