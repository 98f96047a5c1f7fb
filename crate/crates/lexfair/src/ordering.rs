//! Agent orderings used for tie-breaking.

use crate::error::{Error, Result};
use crate::instance::{Agent, Instance};

/// A permutation of the agents; earlier agents win ties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgentOrdering {
    order: Vec<Agent>,
    /// position[a] = rank of agent a in the ordering.
    position: Vec<usize>,
}

impl AgentOrdering {
    /// The identity ordering 1, 2, ..., n.
    pub fn natural(instance: &Instance) -> Self {
        AgentOrdering {
            order: instance.agents().collect(),
            position: (0..instance.num_agents()).collect(),
        }
    }

    pub fn new(instance: &Instance, order: Vec<Agent>) -> Result<Self> {
        let n = instance.num_agents();
        if order.len() != n {
            return Err(Error::ContractViolation(format!(
                "ordering lists {} agents, instance has {n}",
                order.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (rank, agent) in order.iter().enumerate() {
            instance.check_agent(*agent)?;
            if position[agent.index()] != usize::MAX {
                return Err(Error::ContractViolation(format!(
                    "agent {} listed twice in ordering",
                    instance.agent_name(*agent)
                )));
            }
            position[agent.index()] = rank;
        }
        Ok(AgentOrdering { order, position })
    }

    /// Parses a comma-separated list of agent names, e.g. `1,3,2`.
    pub fn from_names(instance: &Instance, names: &str) -> Result<Self> {
        let order = names
            .split(',')
            .map(|name| instance.agent_by_name(name.trim()))
            .collect::<Result<Vec<_>>>()?;
        AgentOrdering::new(instance, order)
    }

    pub fn position(&self, agent: Agent) -> usize {
        self.position[agent.index()]
    }

    pub fn agents(&self) -> &[Agent] {
        &self.order
    }
}
