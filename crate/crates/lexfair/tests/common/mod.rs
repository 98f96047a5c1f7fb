//! Fixtures and helpers shared by the integration suites.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lexfair::{
    allocation_from_bundles, generate, instance_from_labels, Agent, AgentOrdering, Allocation,
    GenConfig, Instance, Polarity,
};

/// Three agents, four goods; the first-class good g1 is contested.
pub fn three_agents_four_goods() -> Instance {
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

/// Three agents, seven goods in two tiers each.
pub fn seven_goods_two_tiers() -> Instance {
    instance_from_labels(
        Polarity::Goods,
        &["g1", "g2", "g3", "g4", "g5", "g6", "g7"],
        &[
            ("1", &[&["g1", "g2", "g3"], &["g4", "g5", "g6", "g7"]]),
            ("2", &[&["g1", "g2", "g3"], &["g4", "g5", "g6", "g7"]]),
            ("3", &[&["g1", "g2", "g3", "g4", "g5"], &["g6", "g7"]]),
        ],
    )
    .unwrap()
}

/// Three agents, four chores.
pub fn three_agents_four_chores() -> Instance {
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

/// Four agents, five chores; two camps with opposed worst chores and a
/// shared middle chore c3.
pub fn four_agents_five_chores() -> Instance {
    instance_from_labels(
        Polarity::Chores,
        &["c1", "c2", "c3", "c4", "c5"],
        &[
            ("1", &[&["c1", "c2"], &["c3"], &["c4", "c5"]]),
            ("2", &[&["c1", "c2"], &["c3"], &["c4", "c5"]]),
            ("3", &[&["c4", "c5"], &["c3"], &["c1", "c2"]]),
            ("4", &[&["c4", "c5"], &["c3"], &["c1", "c2"]]),
        ],
    )
    .unwrap()
}

/// Three agents, three chores; c1 is the shared worst chore of agents 1 and
/// 2, agent 3 is indifferent across everything.
pub fn three_chores_shared_worst() -> Instance {
    instance_from_labels(
        Polarity::Chores,
        &["c1", "c2", "c3"],
        &[
            ("1", &[&["c1"], &["c2", "c3"]]),
            ("2", &[&["c1"], &["c2", "c3"]]),
            ("3", &[&["c1", "c2", "c3"]]),
        ],
    )
    .unwrap()
}

pub fn bundles(instance: &Instance, spec: &[&[&str]]) -> Allocation {
    allocation_from_bundles(instance, spec).unwrap()
}

/// Deterministic pseudo-random instance for a test grid cell.
pub fn random_instance(seed: u64, agents: usize, items: usize, polarity: Polarity) -> Instance {
    let config = GenConfig::new(seed, agents, items, polarity).with_max_classes(items.max(1));
    generate(&config).unwrap()
}

/// Deterministic pseudo-random agent ordering.
pub fn random_sigma(instance: &Instance, seed: u64) -> AgentOrdering {
    let mut order: Vec<Agent> = instance.agents().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5161_6d61);
    order.shuffle(&mut rng);
    AgentOrdering::new(instance, order).unwrap()
}

/// Deterministic pseudo-random complete allocation.
pub fn random_allocation(instance: &Instance, seed: u64) -> Allocation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x416c_6c6f);
    let n = instance.num_agents();
    let pairs: Vec<_> = instance
        .items()
        .map(|item| (item, Agent::from_index(rng.gen_range(0..n))))
        .collect();
    Allocation::from_assignments(instance, pairs).unwrap()
}

/// All complete allocations of a desk-scale instance.
pub fn all_allocations(instance: &Instance) -> Vec<Allocation> {
    lexfair::enumerate_allocations(instance, lexfair::DEFAULT_BUDGET)
        .unwrap()
        .collect()
}
