use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Exact probability measure with finite support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    support: BTreeMap<usize, Rational>,
}

impl Measure {
    /// Duplicate vertices have their masses summed; zero masses are dropped.
    pub fn new(masses: impl IntoIterator<Item = (usize, Rational)>) -> Result<Self> {
        let mut support: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, mass) in masses {
            *support.entry(v).or_default() += mass;
        }
        if let Some((v, m)) = support.iter().find(|(_, m)| m.is_negative()) {
            return Err(Error::InvalidMeasure(format!("negative mass {m} at vertex {v}")));
        }
        support.retain(|_, m| !m.is_zero());
        let total: Rational = support.values().sum();
        if total != Rational::one() {
            return Err(Error::InvalidMeasure(format!("total mass is {total}, not 1")));
        }
        Ok(Measure { support })
    }

    pub fn dirac(v: usize) -> Self {
        Measure { support: BTreeMap::from([(v, Rational::one())]) }
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.support.get(&v).cloned().unwrap_or_default()
    }

    /// `(vertex, mass)` pairs with positive mass, ascending by vertex.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.support.iter().map(|(&v, m)| (v, m))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }
}

/// Lazy random-walk measure: `1 - eps` at `x`, `eps / deg(x)` on each neighbor.
pub fn lazy_measure(g: &Graph, x: usize, eps: &Rational) -> Result<Measure> {
    if eps.is_negative() || *eps > Rational::one() {
        return Err(Error::InvalidMeasure(format!("eps = {eps} is outside [0, 1]")));
    }
    if eps.is_zero() {
        return Ok(Measure::dirac(x));
    }
    let deg = g.degree(x);
    if deg == 0 {
        return Err(Error::DegreeZero(x));
    }
    let share = eps / Rational::integer(deg as i64);
    let stay = Rational::one() - eps;
    Measure::new(
        std::iter::once((x, stay)).chain(g.neighbors(x).iter().map(|&v| (v, share.clone()))),
    )
}
