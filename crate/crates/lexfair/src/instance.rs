//! Instance model: agents, items, polarity and per-agent indifference classes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether the items of an instance are desirable (goods) or burdens (chores).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Goods,
    Chores,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarity::Goods => write!(f, "goods"),
            Polarity::Chores => write!(f, "chores"),
        }
    }
}

/// Dense 0-based agent index into an [`Instance`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Agent(pub(crate) usize);

/// Dense 0-based item index into an [`Instance`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item(pub(crate) usize);

impl Agent {
    pub fn from_index(index: usize) -> Self {
        Agent(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl Item {
    pub fn from_index(index: usize) -> Self {
        Item(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// A weakly lexicographic fair-division instance.
///
/// Every agent partitions the item set into ordered indifference classes,
/// class 1 being the most important. The class index of item `g` for agent
/// `i` is the preference-graph weight `psi(i, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    polarity: Polarity,
    item_labels: Vec<String>,
    agent_names: Vec<String>,
    /// classes[a][k] = sorted item indices of agent a's (k+1)-th class.
    classes: Vec<Vec<Vec<usize>>>,
    /// class_of[a][g] = 0-based class index of item g for agent a.
    class_of: Vec<Vec<usize>>,
}

impl Instance {
    /// Builds and validates an instance from raw parts. `classes` holds, per
    /// agent, the indifference classes from most important outward, as item
    /// indices into `item_labels`.
    pub fn new(
        polarity: Polarity,
        item_labels: Vec<String>,
        agent_names: Vec<String>,
        classes: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let m = item_labels.len();
        let n = agent_names.len();
        if n == 0 {
            return Err(Error::InvalidInstance("no agents".into()));
        }
        if classes.len() != n {
            return Err(Error::InvalidInstance(format!(
                "{} agents but {} class lists",
                n,
                classes.len()
            )));
        }
        let mut seen_labels = BTreeSet::new();
        for label in &item_labels {
            if !seen_labels.insert(label.clone()) {
                return Err(Error::InvalidInstance(format!("duplicate item label {label:?}")));
            }
        }
        let mut seen_names = BTreeSet::new();
        for name in &agent_names {
            if !seen_names.insert(name.clone()) {
                return Err(Error::InvalidInstance(format!("duplicate agent name {name:?}")));
            }
        }

        let mut class_of = Vec::with_capacity(n);
        let mut sorted_classes = Vec::with_capacity(n);
        for (a, agent_classes) in classes.into_iter().enumerate() {
            let name = &agent_names[a];
            if m == 0 {
                if !agent_classes.is_empty() {
                    return Err(Error::InvalidInstance(format!(
                        "agent {name:?} has classes but the instance has no items"
                    )));
                }
                class_of.push(Vec::new());
                sorted_classes.push(Vec::new());
                continue;
            }
            if agent_classes.is_empty() {
                return Err(Error::InvalidInstance(format!("agent {name:?} has no classes")));
            }
            let mut of = vec![usize::MAX; m];
            let mut sorted = Vec::with_capacity(agent_classes.len());
            for (k, class) in agent_classes.into_iter().enumerate() {
                if class.is_empty() {
                    return Err(Error::InvalidInstance(format!(
                        "agent {name:?} has an empty class at position {}",
                        k + 1
                    )));
                }
                let mut class_sorted = class;
                class_sorted.sort_unstable();
                class_sorted.dedup();
                for &g in &class_sorted {
                    if g >= m {
                        return Err(Error::UnknownItem(format!("index {g}")));
                    }
                    if of[g] != usize::MAX {
                        return Err(Error::InvalidInstance(format!(
                            "item {:?} appears in two classes of agent {name:?}",
                            item_labels[g]
                        )));
                    }
                    of[g] = k;
                }
                sorted.push(class_sorted);
            }
            if let Some(g) = of.iter().position(|&k| k == usize::MAX) {
                return Err(Error::InvalidInstance(format!(
                    "item {:?} is missing from the classes of agent {name:?}",
                    item_labels[g]
                )));
            }
            class_of.push(of);
            sorted_classes.push(sorted);
        }

        Ok(Instance {
            polarity,
            item_labels,
            agent_names,
            classes: sorted_classes,
            class_of,
        })
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn num_agents(&self) -> usize {
        self.agent_names.len()
    }

    pub fn num_items(&self) -> usize {
        self.item_labels.len()
    }

    pub fn agents(&self) -> impl Iterator<Item = Agent> + '_ {
        (0..self.num_agents()).map(Agent)
    }

    pub fn items(&self) -> impl Iterator<Item = Item> + '_ {
        (0..self.num_items()).map(Item)
    }

    pub fn agent_name(&self, agent: Agent) -> &str {
        &self.agent_names[agent.0]
    }

    pub fn item_label(&self, item: Item) -> &str {
        &self.item_labels[item.0]
    }

    pub fn agent_by_name(&self, name: &str) -> Result<Agent> {
        self.agent_names
            .iter()
            .position(|n| n == name)
            .map(Agent)
            .ok_or_else(|| Error::UnknownAgent(name.to_string()))
    }

    pub fn item_by_label(&self, label: &str) -> Result<Item> {
        self.item_labels
            .iter()
            .position(|l| l == label)
            .map(Item)
            .ok_or_else(|| Error::UnknownItem(label.to_string()))
    }

    /// Number of indifference classes of `agent` (its score-vector length).
    pub fn num_classes(&self, agent: Agent) -> usize {
        self.classes[agent.0].len()
    }

    /// Preference-graph weight: 1-based class index of `item` for `agent`.
    pub fn class_index(&self, agent: Agent, item: Item) -> usize {
        self.class_of[agent.0][item.0] + 1
    }

    /// Items of the 1-based class `k` of `agent`, in ascending item order.
    pub fn class_items(&self, agent: Agent, k: usize) -> impl Iterator<Item = Item> + '_ {
        self.classes[agent.0][k - 1].iter().map(|&g| Item(g))
    }

    pub fn class_size(&self, agent: Agent, k: usize) -> usize {
        self.classes[agent.0][k - 1].len()
    }

    pub(crate) fn check_agent(&self, agent: Agent) -> Result<()> {
        if agent.0 < self.num_agents() {
            Ok(())
        } else {
            Err(Error::UnknownAgent(format!("index {}", agent.0)))
        }
    }

    pub(crate) fn check_item(&self, item: Item) -> Result<()> {
        if item.0 < self.num_items() {
            Ok(())
        } else {
            Err(Error::UnknownItem(format!("index {}", item.0)))
        }
    }

    pub(crate) fn require_polarity(&self, polarity: Polarity) -> Result<()> {
        if self.polarity == polarity {
            Ok(())
        } else {
            Err(Error::WrongPolarity {
                expected: match polarity {
                    Polarity::Goods => "goods",
                    Polarity::Chores => "chores",
                },
            })
        }
    }

    /// Parses an instance from the JSON wire format:
    ///
    /// ```json
    /// {"kind": "goods", "items": ["g1", "g2"],
    ///  "agents": [{"name": "1", "classes": [["g1"], ["g2"]]}]}
    /// ```
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: InstanceJson = serde_json::from_str(text)?;
        let label_index = |label: &str, raw: &InstanceJson| -> Result<usize> {
            raw.items
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::UnknownItem(label.to_string()))
        };
        let mut classes = Vec::with_capacity(raw.agents.len());
        for agent in &raw.agents {
            let mut agent_classes = Vec::with_capacity(agent.classes.len());
            for class in &agent.classes {
                let mut ids = Vec::with_capacity(class.len());
                for label in class {
                    ids.push(label_index(label, &raw)?);
                }
                agent_classes.push(ids);
            }
            classes.push(agent_classes);
        }
        Instance::new(
            raw.kind,
            raw.items,
            raw.agents.into_iter().map(|a| a.name).collect(),
            classes,
        )
    }

    /// Serializes to the JSON wire format. `from_json(to_json(x))` equals `x`.
    pub fn to_json(&self) -> String {
        let raw = InstanceJson {
            kind: self.polarity,
            items: self.item_labels.clone(),
            agents: self
                .agents()
                .map(|a| AgentJson {
                    name: self.agent_name(a).to_string(),
                    classes: self.classes[a.0]
                        .iter()
                        .map(|class| class.iter().map(|&g| self.item_labels[g].clone()).collect())
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("instance serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    kind: Polarity,
    items: Vec<String>,
    agents: Vec<AgentJson>,
}

#[derive(Serialize, Deserialize)]
struct AgentJson {
    name: String,
    classes: Vec<Vec<String>>,
}

/// Convenience constructor used throughout tests and examples: builds an
/// instance from item labels and per-agent classes given as label lists.
pub fn instance_from_labels(
    polarity: Polarity,
    items: &[&str],
    agents: &[(&str, &[&[&str]])],
) -> Result<Instance> {
    let item_labels: Vec<String> = items.iter().map(|s| s.to_string()).collect();
    let mut names = Vec::new();
    let mut classes = Vec::new();
    for (name, agent_classes) in agents {
        names.push(name.to_string());
        let mut resolved = Vec::new();
        for class in agent_classes.iter() {
            let mut ids = Vec::new();
            for label in class.iter() {
                let id = item_labels
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| Error::UnknownItem(label.to_string()))?;
                ids.push(id);
            }
            resolved.push(ids);
        }
        classes.push(resolved);
    }
    Instance::new(polarity, item_labels, names, classes)
}
