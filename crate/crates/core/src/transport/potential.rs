use serde::Serialize;

use super::measure::Measure;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Integer-valued vertex function, used as a Kantorovich potential.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Potential {
    values: Vec<i64>,
}

impl Potential {
    pub fn new(values: Vec<i64>) -> Self {
        Potential { values }
    }

    pub fn zero(n: usize) -> Self {
        Potential { values: vec![0; n] }
    }

    /// Zero everywhere except the listed vertices.
    pub fn from_sparse(n: usize, values: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut f = Potential::zero(n);
        for (v, x) in values {
            f.values[v] = x;
        }
        f
    }

    pub fn get(&self, v: usize) -> i64 {
        self.values[v]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Checks `|f(u) - f(v)| <= dist(u, v)` for every connected pair.
pub fn check_lipschitz(g: &Graph, f: &Potential) -> Result<()> {
    let n = g.order();
    if f.len() != n {
        return Err(Error::PreconditionViolated(format!(
            "potential has {} values for {n} vertices",
            f.len()
        )));
    }
    let dist = g.distances();
    for u in 0..n {
        for v in u + 1..n {
            let gap = f.get(u).abs_diff(f.get(v));
            if gap == 0 {
                continue;
            }
            if let Some(d) = dist.get(u, v) {
                if gap > u64::from(d) {
                    return Err(Error::NotLipschitz { u, v, gap, dist: d });
                }
            }
        }
    }
    Ok(())
}

/// `sum_z f(z) (mu(z) - nu(z))`, a lower bound on the transport distance.
pub fn dual_bound(g: &Graph, f: &Potential, mu: &Measure, nu: &Measure) -> Result<Rational> {
    check_lipschitz(g, f)?;
    Ok(pairing(f, mu, nu))
}

/// The dual objective without the Lipschitz check.
pub(crate) fn pairing(f: &Potential, mu: &Measure, nu: &Measure) -> Rational {
    let plus: Rational = mu.iter().map(|(v, m)| m * Rational::integer(f.get(v))).sum();
    let minus: Rational = nu.iter().map(|(v, m)| m * Rational::integer(f.get(v))).sum();
    plus - minus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};
    use crate::transport::lazy_measure;

    #[test]
    fn zero_potential_gives_zero() {
        let g = cycle(5).unwrap();
        let half = Rational::new(1, 2);
        let mu = lazy_measure(&g, 0, &half).unwrap();
        let nu = lazy_measure(&g, 1, &half).unwrap();
        assert_eq!(dual_bound(&g, &Potential::zero(5), &mu, &nu).unwrap(), Rational::zero());
    }

    #[test]
    fn indicator_on_complete_graph() {
        for n in 2..8 {
            let g = complete(n).unwrap();
            let half = Rational::new(1, 2);
            let mu = lazy_measure(&g, 0, &half).unwrap();
            let nu = lazy_measure(&g, 1, &half).unwrap();
            let f = Potential::from_sparse(n, [(0, 1)]);
            let expected = Rational::new(1, 2) - Rational::new(1, 2 * (n as i64 - 1));
            assert_eq!(dual_bound(&g, &f, &mu, &nu).unwrap(), expected);
        }
    }

    #[test]
    fn lipschitz_violation_has_witness() {
        let g = cycle(5).unwrap();
        let f = Potential::from_sparse(5, [(0, 1), (1, -1)]);
        assert_eq!(
            check_lipschitz(&g, &f),
            Err(Error::NotLipschitz { u: 0, v: 1, gap: 2, dist: 1 })
        );
        let mu = Measure::dirac(0);
        assert!(dual_bound(&g, &f, &mu, &mu).is_err());
    }

    #[test]
    fn disconnected_pairs_are_unconstrained() {
        let g = Graph::new(2, []).unwrap();
        assert!(check_lipschitz(&g, &Potential::new(vec![0, 100])).is_ok());
    }
}
