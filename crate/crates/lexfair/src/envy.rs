//! Potential envy and the potential envy graph over a prioritized agent set.
//!
//! Agent `i` potentially envies `j` when handing `j` every currently
//! available good on top of its bundle would make `i` envious. Defined for
//! goods only.

use std::cmp::Ordering;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Polarity};
use crate::ordering::AgentOrdering;
use crate::prefgraph::available_items;
use crate::score::{lex_compare, score};

/// Directed graph on an agent subset; an edge `(i, j)` records that `i`
/// potentially envies `j`.
#[derive(Clone, Debug)]
pub struct PotentialEnvyGraph {
    nodes: Vec<Agent>,
    /// adjacency[u] = positions (into `nodes`) of the targets of node u.
    adjacency: Vec<Vec<usize>>,
}

impl PotentialEnvyGraph {
    pub fn nodes(&self) -> &[Agent] {
        &self.nodes
    }

    pub fn edges(&self) -> Vec<(Agent, Agent)> {
        let mut out = Vec::new();
        for (u, targets) in self.adjacency.iter().enumerate() {
            for &v in targets {
                out.push((self.nodes[u], self.nodes[v]));
            }
        }
        out
    }

    pub fn has_edge(&self, from: Agent, to: Agent) -> bool {
        let Some(u) = self.nodes.iter().position(|a| *a == from) else {
            return false;
        };
        let Some(v) = self.nodes.iter().position(|a| *a == to) else {
            return false;
        };
        self.adjacency[u].contains(&v)
    }
}

/// Whether `envious` potentially envies `envied`: the envied bundle plus all
/// available goods would lexicographically beat the envious agent's bundle.
pub fn potentially_envies(
    instance: &Instance,
    allocation: &Allocation,
    envious: Agent,
    envied: Agent,
) -> Result<bool> {
    if instance.polarity() != Polarity::Goods {
        return Err(Error::Unsupported(
            "potential envy is defined for goods instances only".into(),
        ));
    }
    instance.check_agent(envious)?;
    instance.check_agent(envied)?;
    let available = available_items(instance, allocation);
    potentially_envies_with(instance, allocation, &available, envious, envied)
}

fn potentially_envies_with(
    instance: &Instance,
    allocation: &Allocation,
    available: &[crate::instance::Item],
    envious: Agent,
    envied: Agent,
) -> Result<bool> {
    let mut augmented = vec![false; instance.num_items()];
    for item in allocation.bundle(envied) {
        augmented[item.index()] = true;
    }
    for item in available {
        augmented[item.index()] = true;
    }
    let hypothetical = instance.items().filter(|x| augmented[x.index()]);
    let s_other = score(instance, envious, hypothetical)?;
    let s_own = score(instance, envious, allocation.bundle(envious))?;
    Ok(lex_compare(&s_other, &s_own)? == Ordering::Greater)
}

/// Builds the potential envy graph over `nodes` for the given allocation.
/// Availability is computed once and shared across all pair tests.
pub fn potential_envy_graph(
    instance: &Instance,
    allocation: &Allocation,
    nodes: &[Agent],
) -> Result<PotentialEnvyGraph> {
    if instance.polarity() != Polarity::Goods {
        return Err(Error::Unsupported(
            "potential envy is defined for goods instances only".into(),
        ));
    }
    for agent in nodes {
        instance.check_agent(*agent)?;
    }
    let available = available_items(instance, allocation);
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for (u, &envious) in nodes.iter().enumerate() {
        for (v, &envied) in nodes.iter().enumerate() {
            if u == v {
                continue;
            }
            if potentially_envies_with(instance, allocation, &available, envious, envied)? {
                adjacency[u].push(v);
            }
        }
    }
    Ok(PotentialEnvyGraph {
        nodes: nodes.to_vec(),
        adjacency,
    })
}

/// Tarjan's strongly connected components; returns components as position
/// lists into the node array.
fn tarjan(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adjacency: &'a [Vec<usize>],
        index: usize,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        comps: Vec<Vec<usize>>,
    }

    fn strongconnect(v: usize, st: &mut State) {
        st.idx[v] = Some(st.index);
        st.low[v] = st.index;
        st.index += 1;
        st.stack.push(v);
        st.on_stack[v] = true;

        for w in st.adjacency[v].clone() {
            if st.idx[w].is_none() {
                strongconnect(w, st);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if st.on_stack[w] {
                st.low[v] = st.low[v].min(st.idx[w].unwrap());
            }
        }

        if st.low[v] == st.idx[v].unwrap() {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("stack underflow");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            st.comps.push(comp);
        }
    }

    let n = adjacency.len();
    let mut st = State {
        adjacency,
        index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        idx: vec![None; n],
        low: vec![0; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.idx[v].is_none() {
            strongconnect(v, &mut st);
        }
    }
    st.comps
}

/// A strongly connected component of the graph with no incoming edge from
/// outside it. When several exist, returns the one containing the agent with
/// the smallest position in `sigma`. Agents are returned in ascending order.
pub fn source_scc(graph: &PotentialEnvyGraph, sigma: &AgentOrdering) -> Result<Vec<Agent>> {
    if graph.nodes.is_empty() {
        return Err(Error::ContractViolation(
            "source component of an empty graph".into(),
        ));
    }
    let comps = tarjan(&graph.adjacency);
    let mut comp_of = vec![usize::MAX; graph.nodes.len()];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let mut has_incoming = vec![false; comps.len()];
    for (u, targets) in graph.adjacency.iter().enumerate() {
        for &v in targets {
            if comp_of[u] != comp_of[v] {
                has_incoming[comp_of[v]] = true;
            }
        }
    }
    // Every finite digraph has a source component, so the minimum exists.
    let best = comps
        .iter()
        .enumerate()
        .filter(|(c, _)| !has_incoming[*c])
        .min_by_key(|(_, comp)| {
            comp.iter()
                .map(|&v| sigma.position(graph.nodes[v]))
                .min()
                .expect("components are non-empty")
        })
        .map(|(c, _)| c)
        .expect("a source component always exists");
    let mut agents: Vec<Agent> = comps[best].iter().map(|&v| graph.nodes[v]).collect();
    agents.sort_unstable();
    Ok(agents)
}
