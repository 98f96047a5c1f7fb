//! Goods solver: a picking loop that keeps a prioritized agent set and can be
//! steered towards EF1, EFX, MMS, or EFX+MMS, always alongside PO.
//!
//! Each of the `m` iterations hands one more good to the prioritized agent
//! with the fewest goods: the agent's most preferred available good is freed
//! by exchanging along an alternating path, then assigned. Afterwards the
//! prioritized set is re-filtered against the criteria, every check seeing
//! the same snapshot: the post-assignment allocation and the pre-filter
//! prioritized set.

use std::cmp::Ordering;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Polarity};
use crate::mms::mms_threshold;
use crate::ordering::AgentOrdering;
use crate::prefgraph::update_along_path;
use crate::score::{lex_compare, score, ScoreVector};
use crate::solver::{
    pick_agent, pick_item, unavailable_items, Criteria, IterationRecord, SolveTrace,
};

use crate::envy::{potential_envy_graph, source_scc};

/// Per-iteration context shared by all criteria checks of that iteration.
struct CriteriaSnapshot {
    /// Members of the source component of the potential envy graph, when the
    /// criteria involve EFX.
    source_component: Option<Vec<Agent>>,
    /// Per-agent MMS thresholds, when the criteria involve MMS.
    thresholds: Option<Vec<ScoreVector>>,
}

impl CriteriaSnapshot {
    fn build(
        instance: &Instance,
        allocation: &Allocation,
        prioritized: &[Agent],
        sigma: &AgentOrdering,
        criteria: Criteria,
        thresholds: Option<&[ScoreVector]>,
    ) -> Result<Self> {
        let source_component = if criteria.wants_efx() && !prioritized.is_empty() {
            let graph = potential_envy_graph(instance, allocation, prioritized)?;
            Some(source_scc(&graph, sigma)?)
        } else {
            None
        };
        let thresholds = if criteria.wants_mms() {
            Some(match thresholds {
                Some(t) => t.to_vec(),
                None => instance
                    .agents()
                    .map(|a| mms_threshold(instance, a))
                    .collect::<Result<Vec<_>>>()?,
            })
        } else {
            None
        };
        Ok(CriteriaSnapshot {
            source_component,
            thresholds,
        })
    }

    fn keeps(
        &self,
        instance: &Instance,
        allocation: &Allocation,
        agent: Agent,
        criteria: Criteria,
    ) -> Result<bool> {
        if criteria == Criteria::Null {
            return Ok(true);
        }
        if criteria.wants_efx() {
            let source = self
                .source_component
                .as_ref()
                .expect("snapshot built with an EFX criteria");
            if source.contains(&agent) {
                return Ok(true);
            }
        }
        if criteria.wants_mms() {
            let thresholds = self
                .thresholds
                .as_ref()
                .expect("snapshot built with an MMS criteria");
            let own = score(instance, agent, allocation.bundle(agent))?;
            if lex_compare(&own, &thresholds[agent.index()])? != Ordering::Greater {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Whether `agent` stays prioritized under `criteria`, judged against the
/// given allocation and prioritized-set snapshot. `null` keeps everyone; EFX
/// keeps the source component of the potential envy graph on `prioritized`;
/// MMS keeps agents whose score has not yet exceeded their threshold.
pub fn check_criteria(
    instance: &Instance,
    allocation: &Allocation,
    prioritized: &[Agent],
    sigma: &AgentOrdering,
    agent: Agent,
    criteria: Criteria,
) -> Result<bool> {
    instance.check_agent(agent)?;
    let snapshot =
        CriteriaSnapshot::build(instance, allocation, prioritized, sigma, criteria, None)?;
    snapshot.keeps(instance, allocation, agent, criteria)
}

/// Runs the goods loop and returns the complete allocation.
pub fn solve_goods(
    instance: &Instance,
    sigma: &AgentOrdering,
    criteria: Criteria,
) -> Result<Allocation> {
    Ok(solve_goods_traced(instance, sigma, criteria)?.0)
}

/// As [`solve_goods`], also returning the per-iteration trace.
pub fn solve_goods_traced(
    instance: &Instance,
    sigma: &AgentOrdering,
    criteria: Criteria,
) -> Result<(Allocation, SolveTrace)> {
    instance.require_polarity(Polarity::Goods)?;
    let all_agents: Vec<Agent> = instance.agents().collect();
    let thresholds = if criteria.wants_mms() {
        Some(
            instance
                .agents()
                .map(|a| mms_threshold(instance, a))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };

    let mut allocation = Allocation::empty(instance);
    let mut prioritized = all_agents.clone();
    let mut trace = SolveTrace::default();

    for _ in 0..instance.num_items() {
        let pool = if prioritized.is_empty() {
            debug_assert_eq!(criteria, Criteria::Mms, "only the MMS criteria may drain U");
            &all_agents
        } else {
            &prioritized
        };
        let chosen = pick_agent(&allocation, pool, sigma);
        let best_class = crate::solver::best_available_class(instance, &allocation, chosen)
            .ok_or_else(|| Error::Internal("no available item mid-run".into()))?;
        let (item, path) = pick_item(instance, &allocation, chosen)?;
        allocation = update_along_path(instance, &allocation, &path)?;
        allocation = allocation.assign(item, chosen)?;

        let snapshot = CriteriaSnapshot::build(
            instance,
            &allocation,
            &prioritized,
            sigma,
            criteria,
            thresholds.as_deref(),
        )?;
        let mut kept = Vec::with_capacity(prioritized.len());
        for &agent in &prioritized {
            if snapshot.keeps(instance, &allocation, agent, criteria)? {
                kept.push(agent);
            }
        }
        prioritized = kept;

        trace.iterations.push(IterationRecord {
            chosen_agent: chosen,
            item,
            path,
            picked_class: instance.class_index(chosen, item),
            best_available_class: best_class,
            allocation: allocation.clone(),
            prioritized: prioritized.clone(),
            unavailable: unavailable_items(instance, &allocation),
        });
    }
    debug_assert!(allocation.is_complete());
    Ok((allocation, trace))
}
