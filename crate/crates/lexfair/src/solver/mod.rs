//! Picking-loop solvers for goods and chores.

mod chores;
mod goods;

pub use chores::{chores_to_goods, solve_chores_ef1, solve_chores_ef1_traced, ChoresToGoods};
pub use goods::{check_criteria, solve_goods, solve_goods_traced};

pub use chores::solve_chores_efx_po_two_agents;

use std::str::FromStr;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item, Polarity};
use crate::ordering::AgentOrdering;
use crate::prefgraph::{available_items, find_alternating_path, AlternatingPath};

/// Fairness criteria steering which agents stay prioritized.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Criteria {
    Null,
    Efx,
    Mms,
    EfxAndMms,
}

impl Criteria {
    pub fn wants_efx(self) -> bool {
        matches!(self, Criteria::Efx | Criteria::EfxAndMms)
    }

    pub fn wants_mms(self) -> bool {
        matches!(self, Criteria::Mms | Criteria::EfxAndMms)
    }

    pub const ALL: [Criteria; 4] = [Criteria::Null, Criteria::Efx, Criteria::Mms, Criteria::EfxAndMms];
}

impl FromStr for Criteria {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "null" => Ok(Criteria::Null),
            "efx" => Ok(Criteria::Efx),
            "mms" => Ok(Criteria::Mms),
            "efx-mms" => Ok(Criteria::EfxAndMms),
            other => Err(Error::Unsupported(format!(
                "unknown criteria {other:?}; expected null, efx, mms or efx-mms"
            ))),
        }
    }
}

impl std::fmt::Display for Criteria {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Criteria::Null => "null",
            Criteria::Efx => "efx",
            Criteria::Mms => "mms",
            Criteria::EfxAndMms => "efx-mms",
        };
        write!(f, "{name}")
    }
}

/// One main-loop iteration of a solver run, for inspection and testing.
#[derive(Clone, Debug)]
pub struct IterationRecord {
    /// Agent that received an item this iteration.
    pub chosen_agent: Agent,
    /// The item it received (the start of the exchange path).
    pub item: Item,
    /// The alternating path the allocation was updated along.
    pub path: AlternatingPath,
    /// Class index of `item` for `chosen_agent`.
    pub picked_class: usize,
    /// Best (smallest for goods, largest for chores) class index the agent
    /// had available this iteration.
    pub best_available_class: usize,
    /// Allocation after the assignment.
    pub allocation: Allocation,
    /// Prioritized agents after this iteration's pruning (sorted).
    pub prioritized: Vec<Agent>,
    /// Items with no alternating path to an unallocated item (sorted).
    pub unavailable: Vec<Item>,
}

/// Full record of a solver run.
#[derive(Clone, Debug, Default)]
pub struct SolveTrace {
    pub iterations: Vec<IterationRecord>,
}

/// Agent with the smallest bundle, ties broken by `sigma`.
fn pick_agent(allocation: &Allocation, pool: &[Agent], sigma: &AgentOrdering) -> Agent {
    *pool
        .iter()
        .min_by_key(|a| (allocation.bundle_size(**a), sigma.position(**a)))
        .expect("agent pool is never empty")
}

/// The picking rule of the main loops: among available items of the agent's
/// best class (smallest index for goods, largest for chores), take the one
/// with the shortest alternating path, then the smallest item id.
fn pick_item(
    instance: &Instance,
    allocation: &Allocation,
    agent: Agent,
) -> Result<(Item, AlternatingPath)> {
    let k = instance.num_classes(agent);
    let class_order: Vec<usize> = match instance.polarity() {
        Polarity::Goods => (1..=k).collect(),
        Polarity::Chores => (1..=k).rev().collect(),
    };
    for class in class_order {
        let mut best: Option<(usize, Item, AlternatingPath)> = None;
        for item in instance.class_items(agent, class) {
            if let Some(path) = find_alternating_path(instance, allocation, item)? {
                let key = (path.len(), item);
                if best.as_ref().map_or(true, |(len, it, _)| key < (*len, *it)) {
                    best = Some((path.len(), item, path));
                }
            }
        }
        if let Some((_, item, path)) = best {
            return Ok((item, path));
        }
    }
    Err(Error::Internal(
        "no available item although unallocated items remain".into(),
    ))
}

fn unavailable_items(instance: &Instance, allocation: &Allocation) -> Vec<Item> {
    let available = available_items(instance, allocation);
    instance
        .items()
        .filter(|x| available.binary_search(x).is_err())
        .collect()
}

/// Best class index (smallest for goods, largest for chores) the agent can
/// reach among currently available items; `None` when nothing is available.
fn best_available_class(instance: &Instance, allocation: &Allocation, agent: Agent) -> Option<usize> {
    let classes = available_items(instance, allocation)
        .into_iter()
        .map(|x| instance.class_index(agent, x));
    match instance.polarity() {
        Polarity::Goods => classes.min(),
        Polarity::Chores => classes.max(),
    }
}
