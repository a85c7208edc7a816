use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::measure::Measure;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Sparse coupling between two measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    entries: BTreeMap<(usize, usize), Rational>,
    source: Measure,
    target: Measure,
}

impl TransportPlan {
    /// Zero entries are dropped; entries for the same pair are summed.
    /// Marginals are not checked here, see [`verify_plan`].
    pub fn new(
        source: Measure,
        target: Measure,
        entries: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Self {
        let mut map: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (pair, mass) in entries {
            *map.entry(pair).or_default() += mass;
        }
        map.retain(|_, m| !m.is_zero());
        TransportPlan { entries: map, source, target }
    }

    /// Plan that keeps `mu` in place.
    pub fn diagonal(mu: &Measure) -> Self {
        Self::new(mu.clone(), mu.clone(), mu.iter().map(|(v, m)| ((v, v), m.clone())))
    }

    pub fn source(&self) -> &Measure {
        &self.source
    }

    pub fn target(&self) -> &Measure {
        &self.target
    }

    pub fn get(&self, u: usize, v: usize) -> Rational {
        self.entries.get(&(u, v)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> + '_ {
        self.entries.iter().map(|(&k, m)| (k, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Mutable access for tests that perturb a plan.
    pub fn entry_mut(&mut self, u: usize, v: usize) -> &mut Rational {
        self.entries.entry((u, v)).or_default()
    }

    /// Expected graph distance under the plan.
    pub fn cost(&self, g: &Graph) -> Result<Rational> {
        let dist = g.distances();
        let mut total = Rational::zero();
        for (&(u, v), mass) in &self.entries {
            let d = dist.get(u, v).ok_or(Error::Unreachable(u, v))?;
            if d != 0 {
                total += mass * Rational::integer(d as i64);
            }
        }
        Ok(total)
    }
}

/// Why a plan fails to couple its two measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanViolation {
    NegativeEntry { u: usize, v: usize, mass: Rational },
    RowMarginal { vertex: usize, expected: Rational, actual: Rational },
    ColumnMarginal { vertex: usize, expected: Rational, actual: Rational },
}

impl fmt::Display for PlanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanViolation::NegativeEntry { u, v, mass } => {
                write!(f, "negative entry {mass} at ({u}, {v})")
            }
            PlanViolation::RowMarginal { vertex, expected, actual } => {
                write!(f, "row marginal at vertex {vertex} is {actual}, expected {expected}")
            }
            PlanViolation::ColumnMarginal { vertex, expected, actual } => {
                write!(f, "column marginal at vertex {vertex} is {actual}, expected {expected}")
            }
        }
    }
}

impl std::error::Error for PlanViolation {}

/// Checks non-negativity and both marginals exactly.
pub fn verify_plan(plan: &TransportPlan) -> std::result::Result<(), Box<PlanViolation>> {
    let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
    for (&(u, v), mass) in &plan.entries {
        if mass.is_negative() {
            return Err(Box::new(PlanViolation::NegativeEntry { u, v, mass: mass.clone() }));
        }
        *rows.entry(u).or_default() += mass;
        *cols.entry(v).or_default() += mass;
    }
    for (v, _) in plan.source.iter() {
        rows.entry(v).or_default();
    }
    for (v, _) in plan.target.iter() {
        cols.entry(v).or_default();
    }
    for (vertex, actual) in rows {
        let expected = plan.source.mass(vertex);
        if actual != expected {
            return Err(Box::new(PlanViolation::RowMarginal { vertex, expected, actual }));
        }
    }
    for (vertex, actual) in cols {
        let expected = plan.target.mass(vertex);
        if actual != expected {
            return Err(Box::new(PlanViolation::ColumnMarginal { vertex, expected, actual }));
        }
    }
    Ok(())
}

/// Entries serialize as `[u, v, num, den]` triplet rows.
impl Serialize for TransportPlan {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Int {
            Small(i64),
            Big(String),
        }
        let int = |b: &num_bigint::BigInt| match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b.to_string()),
        };
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (&(u, v), mass) in &self.entries {
            seq.serialize_element(&(u, v, int(mass.numer()), int(mass.denom())))?;
        }
        seq.end()
    }
}
