//! Chores solvers: an EF1+PO picking loop for any number of agents, and an
//! EFX+PO route for two agents via the goods reduction.

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item, Polarity};
use crate::ordering::AgentOrdering;
use crate::prefgraph::{is_pareto_optimal, update_along_path};
use crate::solver::{
    pick_agent, pick_item, unavailable_items, Criteria, IterationRecord, SolveTrace,
};
use crate::verify::is_efx;

/// EF1+PO chores loop: each iteration the agent with the fewest chores takes
/// its most preferred (least important) available chore, freeing it along an
/// alternating path first. No prioritized set is maintained.
pub fn solve_chores_ef1(instance: &Instance, sigma: &AgentOrdering) -> Result<Allocation> {
    Ok(solve_chores_ef1_traced(instance, sigma)?.0)
}

/// As [`solve_chores_ef1`], also returning the per-iteration trace.
pub fn solve_chores_ef1_traced(
    instance: &Instance,
    sigma: &AgentOrdering,
) -> Result<(Allocation, SolveTrace)> {
    instance.require_polarity(Polarity::Chores)?;
    let all_agents: Vec<Agent> = instance.agents().collect();
    let mut allocation = Allocation::empty(instance);
    let mut trace = SolveTrace::default();

    for _ in 0..instance.num_items() {
        let chosen = pick_agent(&allocation, &all_agents, sigma);
        let best_class = crate::solver::best_available_class(instance, &allocation, chosen)
            .ok_or_else(|| Error::Internal("no available chore mid-run".into()))?;
        let (item, path) = pick_item(instance, &allocation, chosen)?;
        allocation = update_along_path(instance, &allocation, &path)?;
        allocation = allocation.assign(item, chosen)?;
        trace.iterations.push(IterationRecord {
            chosen_agent: chosen,
            item,
            path,
            picked_class: instance.class_index(chosen, item),
            best_available_class: best_class,
            allocation: allocation.clone(),
            prioritized: all_agents.clone(),
            unavailable: unavailable_items(instance, &allocation),
        });
    }
    debug_assert!(allocation.is_complete());
    Ok((allocation, trace))
}

/// Goods instance equivalent to a two-agent chores instance, plus the
/// correspondence back to the chores.
#[derive(Clone, Debug)]
pub struct ChoresToGoods {
    pub goods: Instance,
    /// chore_of_good[g] = the chore the g-th good stands for (not doing it).
    pub chore_of_good: Vec<Item>,
}

/// Two-agent reduction: one good per chore, placed in the class the chore
/// occupies (avoiding a worse chore is a better good).
pub fn chores_to_goods(instance: &Instance) -> Result<ChoresToGoods> {
    instance.require_polarity(Polarity::Chores)?;
    if instance.num_agents() != 2 {
        return Err(Error::Unsupported(format!(
            "the chores-to-goods route needs exactly 2 agents, got {}",
            instance.num_agents()
        )));
    }
    let item_labels: Vec<String> = instance
        .items()
        .map(|c| format!("g_{}", instance.item_label(c)))
        .collect();
    let agent_names: Vec<String> = instance
        .agents()
        .map(|a| instance.agent_name(a).to_string())
        .collect();
    let classes: Vec<Vec<Vec<usize>>> = instance
        .agents()
        .map(|a| {
            (1..=instance.num_classes(a))
                .map(|k| instance.class_items(a, k).map(|c| c.index()).collect())
                .collect()
        })
        .collect();
    let goods = Instance::new(Polarity::Goods, item_labels, agent_names, classes)?;
    let chore_of_good = instance.items().collect();
    Ok(ChoresToGoods {
        goods,
        chore_of_good,
    })
}

/// EFX+PO for two-agent chores instances: solve the reduced goods instance
/// with the EFX criteria, then give each chore to the agent that did not take
/// the matching good. The result is re-verified before it is returned.
pub fn solve_chores_efx_po_two_agents(
    instance: &Instance,
    sigma: &AgentOrdering,
) -> Result<Allocation> {
    let reduction = chores_to_goods(instance)?;
    let goods_sigma = AgentOrdering::new(&reduction.goods, sigma.agents().to_vec())?;
    let goods_alloc =
        crate::solver::solve_goods(&reduction.goods, &goods_sigma, Criteria::Efx)?;

    let mut pairs = Vec::with_capacity(instance.num_items());
    for (g, &chore) in reduction.chore_of_good.iter().enumerate() {
        let good_owner = goods_alloc
            .owner(Item::from_index(g))
            .ok_or_else(|| Error::Internal("goods solver left an item unassigned".into()))?;
        let other = Agent::from_index(1 - good_owner.index());
        pairs.push((chore, other));
    }
    let allocation = Allocation::from_assignments(instance, pairs)?;

    // The class mapping of the reduction is our own construction; verify the
    // claimed guarantees before handing the result out.
    if is_efx(instance, &allocation)?.is_some() {
        return Err(Error::Internal(
            "chores-to-goods route produced a non-EFX allocation".into(),
        ));
    }
    if !is_pareto_optimal(instance, &allocation) {
        return Err(Error::Internal(
            "chores-to-goods route produced a non-PO allocation".into(),
        ));
    }
    Ok(allocation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::allocation::allocation_from_bundles;
    use crate::instance::instance_from_labels;
    use crate::verify::is_ef1;

    fn example_4_3() -> Instance {
        instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3", "c4"],
            &[
                ("1", &[&["c1"], &["c2", "c3", "c4"]]),
                ("2", &[&["c1", "c2", "c3"], &["c4"]]),
                ("3", &[&["c1", "c2"], &["c3", "c4"]]),
            ],
        )
        .unwrap()
    }

    fn two_agent_chores() -> Instance {
        instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3"],
            &[
                ("1", &[&["c1"], &["c2", "c3"]]),
                ("2", &[&["c1"], &["c2", "c3"]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn ef1_run_matches_worked_example() {
        let inst = example_4_3();
        let sigma = AgentOrdering::natural(&inst);
        let got = solve_chores_ef1(&inst, &sigma).unwrap();
        let want = allocation_from_bundles(&inst, &[&["c1", "c2"], &["c4"], &["c3"]]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn single_agent_takes_all_chores() {
        let inst =
            instance_from_labels(Polarity::Chores, &["c1", "c2"], &[("1", &[&["c1", "c2"]])])
                .unwrap();
        let sigma = AgentOrdering::natural(&inst);
        let alloc = solve_chores_ef1(&inst, &sigma).unwrap();
        assert_eq!(alloc.bundle_size(Agent::from_index(0)), 2);
    }

    #[test]
    fn two_agent_run_is_ef1_and_po() {
        let inst = two_agent_chores();
        let sigma = AgentOrdering::natural(&inst);
        let alloc = solve_chores_ef1(&inst, &sigma).unwrap();
        assert!(is_ef1(&inst, &alloc).unwrap().is_none());
        assert!(is_pareto_optimal(&inst, &alloc));
    }

    #[test]
    fn rejects_goods_instances() {
        let inst = instance_from_labels(Polarity::Goods, &["g1"], &[("1", &[&["g1"]])]).unwrap();
        let sigma = AgentOrdering::natural(&inst);
        assert!(matches!(
            solve_chores_ef1(&inst, &sigma),
            Err(Error::WrongPolarity { .. })
        ));
    }

    #[test]
    fn reduction_mirrors_class_structure() {
        let inst = two_agent_chores();
        let reduction = chores_to_goods(&inst).unwrap();
        assert_eq!(reduction.goods.polarity(), Polarity::Goods);
        assert_eq!(reduction.goods.num_items(), 3);
        for a in reduction.goods.agents() {
            assert_eq!(reduction.goods.num_classes(a), 2);
            assert_eq!(reduction.goods.class_size(a, 1), 1);
            assert_eq!(reduction.goods.class_size(a, 2), 2);
        }
        assert_eq!(reduction.goods.item_label(Item::from_index(0)), "g_c1");
        assert_eq!(reduction.chore_of_good, vec![
            Item::from_index(0),
            Item::from_index(1),
            Item::from_index(2)
        ]);
    }

    #[test]
    fn reduction_of_single_chore() {
        let inst = instance_from_labels(
            Polarity::Chores,
            &["c1"],
            &[("1", &[&["c1"]]), ("2", &[&["c1"]])],
        )
        .unwrap();
        let reduction = chores_to_goods(&inst).unwrap();
        assert_eq!(reduction.goods.num_items(), 1);
        for a in reduction.goods.agents() {
            assert_eq!(reduction.goods.num_classes(a), 1);
        }
    }

    #[test]
    fn reduction_requires_two_agents() {
        let inst = example_4_3();
        assert!(matches!(chores_to_goods(&inst), Err(Error::Unsupported(_))));
    }

    #[test]
    fn two_agent_efx_route_passes_both_verifiers() {
        let inst = two_agent_chores();
        let sigma = AgentOrdering::natural(&inst);
        let alloc = solve_chores_efx_po_two_agents(&inst, &sigma).unwrap();
        assert!(is_efx(&inst, &alloc).unwrap().is_none());
        assert!(is_pareto_optimal(&inst, &alloc));
    }

    #[test]
    fn efx_route_with_no_chores_returns_empty_bundles() {
        let inst =
            instance_from_labels(Polarity::Chores, &[], &[("1", &[]), ("2", &[])]).unwrap();
        let sigma = AgentOrdering::natural(&inst);
        let alloc = solve_chores_efx_po_two_agents(&inst, &sigma).unwrap();
        assert!(alloc.is_complete());
        assert_eq!(alloc.bundle_size(Agent::from_index(0)), 0);
    }

    #[test]
    fn identical_two_class_two_chore_instance_splits_one_each() {
        let inst = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2"],
            &[
                ("1", &[&["c1"], &["c2"]]),
                ("2", &[&["c1"], &["c2"]]),
            ],
        )
        .unwrap();
        let sigma = AgentOrdering::natural(&inst);
        let alloc = solve_chores_efx_po_two_agents(&inst, &sigma).unwrap();
        assert_eq!(alloc.bundle_size(Agent::from_index(0)), 1);
        assert_eq!(alloc.bundle_size(Agent::from_index(1)), 1);
    }
}
