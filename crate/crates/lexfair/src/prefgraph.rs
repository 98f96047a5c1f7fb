//! Preference graph: alternating-path search, item availability, path
//! updates, and the alternating-path characterization of Pareto optimality.
//!
//! The preference graph is the complete bipartite agent-item graph weighted
//! by class index `psi(i, g)`. An alternating path starts at an item, hops to
//! the item's owner, and continues to an item that owner does not hold but
//! weakly prefers (class index `<=` the left item's for goods, `>=` for
//! chores). Items along a path are pairwise distinct.

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item, Polarity};

/// An alternating path `(x_0, i_1, x_1, ..., i_s, x_s)`; `s >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingPath {
    items: Vec<Item>,
    agents: Vec<Agent>,
}

impl AlternatingPath {
    /// Number of exchange steps `s`.
    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn agents(&self) -> &[Agent] {
        &self.agents
    }

    pub fn start(&self) -> Item {
        self.items[0]
    }

    pub fn end(&self) -> Item {
        *self.items.last().expect("path holds at least one item")
    }

    pub fn display(&self, instance: &Instance) -> String {
        let mut out = format!("({}", instance.item_label(self.items[0]));
        for (agent, item) in self.agents.iter().zip(self.items.iter().skip(1)) {
            out.push_str(&format!(
                ", {}, {}",
                instance.agent_name(*agent),
                instance.item_label(*item)
            ));
        }
        out.push(')');
        out
    }
}

/// Whether `owner` may exchange `from` for `to` along an alternating path:
/// the owner must weakly prefer `to`.
fn step_allowed(instance: &Instance, owner: Agent, from: Item, to: Item) -> bool {
    let w_from = instance.class_index(owner, from);
    let w_to = instance.class_index(owner, to);
    match instance.polarity() {
        Polarity::Goods => w_from >= w_to,
        Polarity::Chores => w_from <= w_to,
    }
}

/// Breadth-first search over items along alternating-path steps. Returns the
/// predecessor array; `stop_at_unassigned` ends the search early once an
/// unassigned item is dequeued.
fn bfs(
    instance: &Instance,
    allocation: &Allocation,
    start: Item,
    stop_at_unassigned: bool,
) -> (Vec<Option<Item>>, Vec<bool>, Option<Item>) {
    let m = instance.num_items();
    let mut parent: Vec<Option<Item>> = vec![None; m];
    let mut visited = vec![false; m];
    let mut queue = std::collections::VecDeque::new();
    visited[start.index()] = true;
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        if !allocation.is_assigned(x) {
            if stop_at_unassigned {
                return (parent, visited, Some(x));
            }
            // An unassigned item has no owner to continue through.
            continue;
        }
        let owner = allocation.owner(x).expect("assigned item has an owner");
        // Ascending item order keeps the search deterministic.
        for y in instance.items() {
            if visited[y.index()] || allocation.owner(y) == Some(owner) {
                continue;
            }
            if !step_allowed(instance, owner, x, y) {
                continue;
            }
            visited[y.index()] = true;
            parent[y.index()] = Some(x);
            queue.push_back(y);
        }
    }
    (parent, visited, None)
}

/// Shortest alternating path from `start` to an unallocated item (zero-length
/// if `start` is itself unallocated), or `None` when `start` is unavailable.
pub fn find_alternating_path(
    instance: &Instance,
    allocation: &Allocation,
    start: Item,
) -> Result<Option<AlternatingPath>> {
    instance.check_item(start)?;
    let (parent, _, hit) = bfs(instance, allocation, start, true);
    let Some(end) = hit else {
        return Ok(None);
    };
    let mut items = vec![end];
    let mut cur = end;
    while let Some(prev) = parent[cur.index()] {
        items.push(prev);
        cur = prev;
    }
    items.reverse();
    let agents = items[..items.len() - 1]
        .iter()
        .map(|x| allocation.owner(*x).expect("interior path items are assigned"))
        .collect();
    Ok(Some(AlternatingPath { items, agents }))
}

/// All items reachable from `start` by alternating paths of any length.
pub fn reachable_items(instance: &Instance, allocation: &Allocation, start: Item) -> Vec<Item> {
    let (_, visited, _) = bfs(instance, allocation, start, false);
    instance.items().filter(|x| visited[x.index()]).collect()
}

/// Items from which an alternating path reaches an unallocated item.
/// Unallocated items are always available.
pub fn available_items(instance: &Instance, allocation: &Allocation) -> Vec<Item> {
    instance
        .items()
        .filter(|&x| {
            let (_, _, hit) = bfs(instance, allocation, x, true);
            hit.is_some()
        })
        .collect()
}

/// Checks that `path` is a valid alternating path for `allocation` ending in
/// an unallocated item, as required before updating along it.
pub fn validate_update_path(
    instance: &Instance,
    allocation: &Allocation,
    path: &AlternatingPath,
) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for item in path.items() {
        instance.check_item(*item)?;
        if !seen.insert(*item) {
            return Err(Error::ContractViolation(format!(
                "item {} repeats on the path",
                instance.item_label(*item)
            )));
        }
    }
    for (r, agent) in path.agents().iter().enumerate() {
        let from = path.items()[r];
        let to = path.items()[r + 1];
        if allocation.owner(from) != Some(*agent) {
            return Err(Error::ContractViolation(format!(
                "agent {} does not hold item {}",
                instance.agent_name(*agent),
                instance.item_label(from)
            )));
        }
        if allocation.owner(to) == Some(*agent) {
            return Err(Error::ContractViolation(format!(
                "agent {} already holds item {}",
                instance.agent_name(*agent),
                instance.item_label(to)
            )));
        }
        if !step_allowed(instance, *agent, from, to) {
            return Err(Error::ContractViolation(format!(
                "agent {} does not weakly prefer {} over {}",
                instance.agent_name(*agent),
                instance.item_label(to),
                instance.item_label(from)
            )));
        }
    }
    if allocation.is_assigned(path.end()) {
        return Err(Error::ContractViolation(format!(
            "path ends at allocated item {}",
            instance.item_label(path.end())
        )));
    }
    Ok(())
}

/// Shifts every agent on the path one item to the right: agent `i_r` trades
/// `x_{r-1}` for `x_r`. The start item becomes unallocated and every agent on
/// the path weakly improves.
pub fn update_along_path(
    instance: &Instance,
    allocation: &Allocation,
    path: &AlternatingPath,
) -> Result<Allocation> {
    validate_update_path(instance, allocation, path)?;
    let mut next = allocation.clone();
    // Each item's final owner is written exactly once: item r+1 goes to the
    // r-th agent and the start item is freed.
    for (r, agent) in path.agents().iter().enumerate() {
        next.set_owner(path.items()[r + 1], Some(*agent));
    }
    next.set_owner(path.items()[0], None);
    Ok(next)
}

/// Alternating-path characterization of Pareto optimality: an allocation
/// (possibly partial) is PO iff no alternating path starts at an item some
/// owner strictly prefers to the path's final item, which that owner holds.
pub fn is_pareto_optimal(instance: &Instance, allocation: &Allocation) -> bool {
    pareto_improvement_witness(instance, allocation).is_none()
}

/// If the allocation is not PO, returns `(start, end)` of a witnessing
/// alternating path: `end`'s owner strictly prefers `start` over `end`.
pub fn pareto_improvement_witness(
    instance: &Instance,
    allocation: &Allocation,
) -> Option<(Item, Item)> {
    for start in instance.items() {
        for end in reachable_items(instance, allocation, start) {
            let Some(owner) = allocation.owner(end) else {
                continue;
            };
            let w_start = instance.class_index(owner, start);
            let w_end = instance.class_index(owner, end);
            let improves = match instance.polarity() {
                Polarity::Goods => w_start < w_end,
                Polarity::Chores => w_start > w_end,
            };
            if improves {
                return Some((start, end));
            }
        }
    }
    None
}
