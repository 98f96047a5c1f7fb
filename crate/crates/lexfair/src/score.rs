//! Score vectors and lexicographic dominance.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item, Polarity};

/// Per-class item counts of a bundle for one agent, negated for chores.
/// Bundles are compared by lexicographic dominance of their score vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScoreVector(pub Vec<i64>);

impl ScoreVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ScoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// How an agent ranks one bundle against another.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Preference {
    Strict,
    Indifferent,
    StrictlyWorse,
}

/// Score of `bundle` for `agent`: entry `k` counts the bundle's items in the
/// agent's `k`-th indifference class (negated on chores instances).
pub fn score<I>(instance: &Instance, agent: Agent, bundle: I) -> Result<ScoreVector>
where
    I: IntoIterator<Item = Item>,
{
    instance.check_agent(agent)?;
    let mut entries = vec![0i64; instance.num_classes(agent)];
    for item in bundle {
        instance.check_item(item)?;
        let k = instance.class_index(agent, item);
        match instance.polarity() {
            Polarity::Goods => entries[k - 1] += 1,
            Polarity::Chores => entries[k - 1] -= 1,
        }
    }
    Ok(ScoreVector(entries))
}

/// Lexicographic comparison of two score vectors of the same agent.
pub fn lex_compare(a: &ScoreVector, b: &ScoreVector) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0.cmp(&b.0))
}

/// Whether `agent` strictly prefers bundle `x` over `y`, is indifferent, or
/// finds it strictly worse.
pub fn prefers(
    instance: &Instance,
    agent: Agent,
    x: impl IntoIterator<Item = Item>,
    y: impl IntoIterator<Item = Item>,
) -> Result<Preference> {
    let sx = score(instance, agent, x)?;
    let sy = score(instance, agent, y)?;
    Ok(match lex_compare(&sx, &sy)? {
        Ordering::Greater => Preference::Strict,
        Ordering::Equal => Preference::Indifferent,
        Ordering::Less => Preference::StrictlyWorse,
    })
}
