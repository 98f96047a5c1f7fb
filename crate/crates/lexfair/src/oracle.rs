//! Exhaustive-enumeration ground truth for desk-scale instances.
//!
//! Everything here is deliberately naive: enumerate all `n^m` complete
//! allocations (or all reassignments of an assigned item set) and test the
//! definitions directly. Oracles either run exhaustively or refuse with a
//! budget error; they never sample.

use std::cmp::Ordering;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item};
use crate::score::{lex_compare, score, ScoreVector};
use crate::verify::{is_ef, is_efx};

/// Default enumeration budget (number of allocations).
pub const DEFAULT_BUDGET: u128 = 10_000_000;

fn count_assignments(n: usize, m: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..m {
        total = total.saturating_mul(n as u128);
    }
    total
}

fn check_budget(n: usize, m: usize, budget: u128) -> Result<u128> {
    let required = count_assignments(n, m);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required)
}

/// Iterator over assignments of `items` to the `n` agents by mixed-radix
/// counting; the first item varies fastest.
struct AssignmentCounter {
    digits: Vec<usize>,
    base: usize,
    exhausted: bool,
}

impl AssignmentCounter {
    fn new(num_items: usize, base: usize) -> Self {
        AssignmentCounter {
            digits: vec![0; num_items],
            base,
            exhausted: base == 0,
        }
    }
}

impl Iterator for AssignmentCounter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.exhausted {
            return None;
        }
        let current = self.digits.clone();
        let mut pos = 0;
        loop {
            if pos == self.digits.len() {
                self.exhausted = true;
                break;
            }
            self.digits[pos] += 1;
            if self.digits[pos] < self.base {
                break;
            }
            self.digits[pos] = 0;
            pos += 1;
        }
        Some(current)
    }
}

/// All `n^m` complete allocations in deterministic mixed-radix order.
pub fn enumerate_allocations(
    instance: &Instance,
    budget: u128,
) -> Result<impl Iterator<Item = Allocation> + '_> {
    check_budget(instance.num_agents(), instance.num_items(), budget)?;
    let items: Vec<Item> = instance.items().collect();
    let counter = AssignmentCounter::new(items.len(), instance.num_agents());
    let num_agents = instance.num_agents();
    let num_items = items.len();
    Ok(counter.map(move |digits| {
        let mut alloc = Allocation::empty_raw(num_items, num_agents);
        for (pos, agent) in digits.into_iter().enumerate() {
            alloc.set_owner(items[pos], Some(Agent::from_index(agent)));
        }
        alloc
    }))
}

/// First envy-free complete allocation in enumeration order, if any.
pub fn ef_exists(instance: &Instance, budget: u128) -> Result<Option<Allocation>> {
    for alloc in enumerate_allocations(instance, budget)? {
        if is_ef(instance, &alloc)?.is_none() {
            return Ok(Some(alloc));
        }
    }
    Ok(None)
}

/// Searches for an allocation of the same assigned item set that Pareto
/// dominates the given one. `None` certifies Pareto optimality.
pub fn po_dominance_search(
    instance: &Instance,
    allocation: &Allocation,
    budget: u128,
) -> Result<Option<Allocation>> {
    let assigned = allocation.assigned_items();
    check_budget(instance.num_agents(), assigned.len(), budget)?;
    let baseline: Vec<ScoreVector> = instance
        .agents()
        .map(|a| score(instance, a, allocation.bundle(a)))
        .collect::<Result<Vec<_>>>()?;

    let counter = AssignmentCounter::new(assigned.len(), instance.num_agents());
    for digits in counter {
        let mut candidate = Allocation::empty(instance);
        for (pos, agent) in digits.into_iter().enumerate() {
            candidate.set_owner(assigned[pos], Some(Agent::from_index(agent)));
        }
        let mut someone_strictly_better = false;
        let mut someone_worse = false;
        for agent in instance.agents() {
            let s = score(instance, agent, candidate.bundle(agent))?;
            match lex_compare(&s, &baseline[agent.index()])? {
                Ordering::Greater => someone_strictly_better = true,
                Ordering::Less => {
                    someone_worse = true;
                    break;
                }
                Ordering::Equal => {}
            }
        }
        if someone_strictly_better && !someone_worse {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// Maximin share of `agent` by enumeration: the maximum over all complete
/// allocations of the lexicographically minimal bundle score.
pub fn mms_enumerate(instance: &Instance, agent: Agent, budget: u128) -> Result<ScoreVector> {
    instance.check_agent(agent)?;
    let mut best: Option<ScoreVector> = None;
    for alloc in enumerate_allocations(instance, budget)? {
        let mut worst: Option<ScoreVector> = None;
        for bundle_holder in instance.agents() {
            let s = score(instance, agent, alloc.bundle(bundle_holder))?;
            let replace = match &worst {
                None => true,
                Some(w) => lex_compare(&s, w)? == Ordering::Less,
            };
            if replace {
                worst = Some(s);
            }
        }
        let worst = worst.expect("instances have at least one agent");
        let replace = match &best {
            None => true,
            Some(b) => lex_compare(&worst, b)? == Ordering::Greater,
        };
        if replace {
            best = Some(worst);
        }
    }
    Ok(best.expect("enumeration yields at least one allocation"))
}

/// All complete allocations that are both EFX and Pareto optimal.
pub fn efx_po_catalogue(instance: &Instance, budget: u128) -> Result<Vec<Allocation>> {
    let mut out = Vec::new();
    for alloc in enumerate_allocations(instance, budget)? {
        if is_efx(instance, &alloc)?.is_none()
            && crate::prefgraph::is_pareto_optimal(instance, &alloc)
        {
            out.push(alloc);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::allocation::allocation_from_bundles;
    use crate::instance::{instance_from_labels, Polarity};

    fn example_3_1() -> Instance {
        instance_from_labels(
            Polarity::Goods,
            &["g1", "g2", "g3", "g4"],
            &[
                ("1", &[&["g1", "g2"], &["g3", "g4"]]),
                ("2", &[&["g1"], &["g2", "g3", "g4"]]),
                ("3", &[&["g1"], &["g2", "g3", "g4"]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts_are_exact() {
        let inst = instance_from_labels(
            Polarity::Goods,
            &["g1", "g2"],
            &[("1", &[&["g1", "g2"]]), ("2", &[&["g1", "g2"]])],
        )
        .unwrap();
        assert_eq!(enumerate_allocations(&inst, DEFAULT_BUDGET).unwrap().count(), 4);

        assert_eq!(enumerate_allocations(&example_3_1(), DEFAULT_BUDGET).unwrap().count(), 81);

        let solo = instance_from_labels(Polarity::Goods, &["g1"], &[("1", &[&["g1"]])]).unwrap();
        assert_eq!(enumerate_allocations(&solo, DEFAULT_BUDGET).unwrap().count(), 1);
    }

    #[test]
    fn every_enumerated_allocation_is_complete_and_distinct() {
        let inst = example_3_1();
        let all: Vec<Allocation> = enumerate_allocations(&inst, DEFAULT_BUDGET)
            .unwrap()
            .collect();
        for alloc in &all {
            assert!(alloc.is_complete());
        }
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn budget_overrun_is_loud() {
        let inst = example_3_1();
        assert!(matches!(
            enumerate_allocations(&inst, 80).map(|_| ()),
            Err(Error::BudgetExceeded { required: 81, budget: 80 })
        ));
    }

    #[test]
    fn no_ef_allocation_exists_for_the_worked_example() {
        // g1 is the unique top good of agents 2 and 3; whoever misses it envies.
        assert!(ef_exists(&example_3_1(), DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn ef_exists_on_symmetric_and_empty_instances() {
        let pair = instance_from_labels(
            Polarity::Goods,
            &["g1", "g2"],
            &[("1", &[&["g1", "g2"]]), ("2", &[&["g1", "g2"]])],
        )
        .unwrap();
        let found = ef_exists(&pair, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(is_ef(&pair, &found).unwrap().is_none());

        let empty = instance_from_labels(Polarity::Goods, &[], &[("1", &[])]).unwrap();
        assert!(ef_exists(&empty, DEFAULT_BUDGET).unwrap().is_some());
    }

    #[test]
    fn dominance_search_finds_the_cyclic_exchange() {
        let inst = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3", "c4", "c5"],
            &[
                ("1", &[&["c1", "c2"], &["c3"], &["c4", "c5"]]),
                ("2", &[&["c1", "c2"], &["c3"], &["c4", "c5"]]),
                ("3", &[&["c4", "c5"], &["c3"], &["c1", "c2"]]),
                ("4", &[&["c4", "c5"], &["c3"], &["c1", "c2"]]),
            ],
        )
        .unwrap();
        let partial =
            allocation_from_bundles(&inst, &[&["c1"], &["c2"], &["c4"], &["c5"]]).unwrap();
        let dominator = po_dominance_search(&inst, &partial, DEFAULT_BUDGET).unwrap().unwrap();
        // The dominator reassigns the same four chores.
        assert_eq!(dominator.assigned_items(), partial.assigned_items());
    }

    #[test]
    fn dominance_search_certifies_po_cases() {
        let inst = example_3_1();
        let empty = Allocation::empty(&inst);
        assert!(po_dominance_search(&inst, &empty, DEFAULT_BUDGET).unwrap().is_none());

        let final_alloc =
            allocation_from_bundles(&inst, &[&["g2"], &["g1"], &["g3", "g4"]]).unwrap();
        assert!(po_dominance_search(&inst, &final_alloc, DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn enumerated_mms_matches_hand_computed_values() {
        let inst = example_3_1();
        assert_eq!(
            mms_enumerate(&inst, Agent::from_index(0), DEFAULT_BUDGET).unwrap().entries(),
            &[0, 2]
        );

        let solo = instance_from_labels(
            Polarity::Goods,
            &["g1", "g2"],
            &[("1", &[&["g1"], &["g2"]])],
        )
        .unwrap();
        assert_eq!(
            mms_enumerate(&solo, Agent::from_index(0), DEFAULT_BUDGET).unwrap().entries(),
            &[1, 1]
        );

        let chores = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3", "c4"],
            &[
                ("1", &[&["c1"], &["c2", "c3", "c4"]]),
                ("2", &[&["c1", "c2", "c3"], &["c4"]]),
                ("3", &[&["c1", "c2"], &["c3", "c4"]]),
            ],
        )
        .unwrap();
        assert_eq!(
            mms_enumerate(&chores, Agent::from_index(1), DEFAULT_BUDGET).unwrap().entries(),
            &[-1, -1]
        );
    }

    #[test]
    fn catalogue_keeps_only_efx_and_po_allocations() {
        let pair = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3"],
            &[
                ("1", &[&["c1"], &["c2", "c3"]]),
                ("2", &[&["c1"], &["c2", "c3"]]),
            ],
        )
        .unwrap();
        let catalogue = efx_po_catalogue(&pair, DEFAULT_BUDGET).unwrap();
        assert!(!catalogue.is_empty());
        let target = allocation_from_bundles(&pair, &[&["c1"], &["c2", "c3"]]).unwrap();
        assert!(catalogue.contains(&target));

        let empty = instance_from_labels(Polarity::Chores, &[], &[("1", &[])]).unwrap();
        assert_eq!(efx_po_catalogue(&empty, DEFAULT_BUDGET).unwrap().len(), 1);
    }
}
