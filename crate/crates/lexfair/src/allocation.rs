//! Partial and complete allocations of items to agents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item};

/// A (possibly partial) assignment of items to agents with disjoint bundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Allocation {
    /// owner[g] = agent holding item g, if any.
    owner: Vec<Option<usize>>,
    num_agents: usize,
}

impl Allocation {
    pub fn empty(instance: &Instance) -> Self {
        Allocation {
            owner: vec![None; instance.num_items()],
            num_agents: instance.num_agents(),
        }
    }

    pub(crate) fn empty_raw(num_items: usize, num_agents: usize) -> Self {
        Allocation {
            owner: vec![None; num_items],
            num_agents,
        }
    }

    /// Builds an allocation from (item, agent) pairs. The result does not
    /// depend on the order of the pairs; assigning an item twice is an error.
    pub fn from_assignments(
        instance: &Instance,
        pairs: impl IntoIterator<Item = (Item, Agent)>,
    ) -> Result<Self> {
        let mut alloc = Allocation::empty(instance);
        for (item, agent) in pairs {
            instance.check_item(item)?;
            instance.check_agent(agent)?;
            if alloc.owner[item.0].is_some() {
                return Err(Error::ContractViolation(format!(
                    "item {} assigned twice",
                    instance.item_label(item)
                )));
            }
            alloc.owner[item.0] = Some(agent.0);
        }
        Ok(alloc)
    }

    pub fn owner(&self, item: Item) -> Option<Agent> {
        self.owner[item.0].map(Agent::from_index)
    }

    pub fn is_assigned(&self, item: Item) -> bool {
        self.owner[item.0].is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.owner.iter().all(|o| o.is_some())
    }

    pub fn num_assigned(&self) -> usize {
        self.owner.iter().filter(|o| o.is_some()).count()
    }

    /// Items currently held by `agent`, in ascending item order.
    pub fn bundle(&self, agent: Agent) -> Vec<Item> {
        self.owner
            .iter()
            .enumerate()
            .filter(|(_, o)| **o == Some(agent.index()))
            .map(|(g, _)| Item::from_index(g))
            .collect()
    }

    pub fn bundle_size(&self, agent: Agent) -> usize {
        self.owner.iter().filter(|o| **o == Some(agent.index())).count()
    }

    /// Items not yet assigned, in ascending item order.
    pub fn unassigned_items(&self) -> Vec<Item> {
        self.owner
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_none())
            .map(|(g, _)| Item::from_index(g))
            .collect()
    }

    /// Items assigned to some agent, in ascending item order.
    pub fn assigned_items(&self) -> Vec<Item> {
        self.owner
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_some())
            .map(|(g, _)| Item::from_index(g))
            .collect()
    }

    /// Returns a copy with `item` assigned to `agent`.
    pub fn assign(&self, item: Item, agent: Agent) -> Result<Self> {
        if self.is_assigned(item) {
            return Err(Error::ContractViolation(format!(
                "item index {} is already assigned",
                item.index()
            )));
        }
        let mut next = self.clone();
        next.owner[item.0] = Some(agent.0);
        Ok(next)
    }

    pub(crate) fn set_owner(&mut self, item: Item, agent: Option<Agent>) {
        self.owner[item.0] = agent.map(|a| a.index());
    }

    /// Parses the wire format `{"bundles": {"1": ["g2"], ...}}` against an
    /// instance. Agents absent from the map hold empty bundles.
    pub fn from_json(instance: &Instance, text: &str) -> Result<Self> {
        let raw: AllocationJson = serde_json::from_str(text)?;
        let mut pairs = Vec::new();
        for (name, labels) in &raw.bundles {
            let agent = instance.agent_by_name(name)?;
            for label in labels {
                pairs.push((instance.item_by_label(label)?, agent));
            }
        }
        Allocation::from_assignments(instance, pairs)
    }

    /// Serializes to the wire format, listing every agent (empty bundles
    /// included) with bundle items in ascending item order.
    pub fn to_json(&self, instance: &Instance) -> String {
        let mut bundles = BTreeMap::new();
        for agent in instance.agents() {
            bundles.insert(
                instance.agent_name(agent).to_string(),
                self.bundle(agent)
                    .into_iter()
                    .map(|g| instance.item_label(g).to_string())
                    .collect(),
            );
        }
        serde_json::to_string_pretty(&AllocationJson { bundles })
            .expect("allocation serialization cannot fail")
    }

    /// Human-readable bundle listing like `({g2}, {g1}, {g3,g4})`.
    pub fn display(&self, instance: &Instance) -> String {
        let mut out = String::from("(");
        for (i, agent) in instance.agents().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push('{');
            for (j, item) in self.bundle(agent).into_iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(instance.item_label(item));
            }
            out.push('}');
        }
        out.push(')');
        out
    }
}

#[derive(Serialize, Deserialize)]
struct AllocationJson {
    bundles: BTreeMap<String, Vec<String>>,
}

/// Builds an allocation from per-agent bundles given as item labels,
/// in the order the instance lists its agents.
pub fn allocation_from_bundles(instance: &Instance, bundles: &[&[&str]]) -> Result<Allocation> {
    if bundles.len() != instance.num_agents() {
        return Err(Error::ContractViolation(format!(
            "{} bundles for {} agents",
            bundles.len(),
            instance.num_agents()
        )));
    }
    let mut pairs = Vec::new();
    for (a, bundle) in bundles.iter().enumerate() {
        for label in bundle.iter() {
            pairs.push((instance.item_by_label(label)?, Agent::from_index(a)));
        }
    }
    Allocation::from_assignments(instance, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{instance_from_labels, Polarity};

    fn inst() -> Instance {
        instance_from_labels(
            Polarity::Goods,
            &["g1", "g2", "g3"],
            &[
                ("1", &[&["g1"], &["g2", "g3"]]),
                ("2", &[&["g1", "g2", "g3"]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn bundles_are_disjoint_and_completeness_tracks_assignment() {
        let instance = inst();
        let alloc = allocation_from_bundles(&instance, &[&["g1"], &["g2"]]).unwrap();
        assert!(!alloc.is_complete());
        assert_eq!(alloc.bundle(Agent(0)), vec![Item(0)]);
        let full = alloc.assign(Item(2), Agent(1)).unwrap();
        assert!(full.is_complete());
        assert!(full.assign(Item(2), Agent(0)).is_err());
    }

    #[test]
    fn double_assignment_is_rejected() {
        let instance = inst();
        let err = Allocation::from_assignments(
            &instance,
            [(Item(0), Agent(0)), (Item(0), Agent(1))],
        )
        .unwrap_err();
        assert!(err.to_string().contains("assigned twice"));
    }

    #[test]
    fn json_round_trip() {
        let instance = inst();
        let alloc = allocation_from_bundles(&instance, &[&["g2", "g1"], &[]]).unwrap();
        let text = alloc.to_json(&instance);
        assert!(text.contains("\"bundles\""));
        let again = Allocation::from_json(&instance, &text).unwrap();
        assert_eq!(alloc, again);
        // Missing agents parse as empty bundles.
        let sparse = Allocation::from_json(&instance, r#"{"bundles": {"2": ["g3"]}}"#).unwrap();
        assert_eq!(sparse.bundle(Agent(0)), vec![]);
        assert_eq!(sparse.bundle(Agent(1)), vec![Item(2)]);
    }
}
