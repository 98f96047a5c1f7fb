//! Seeded random instance generation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{Instance, Polarity};

/// Deterministic generator configuration: identical configs produce
/// identical instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub agents: usize,
    pub items: usize,
    pub polarity: Polarity,
    /// Upper bound on the class count per agent; the count is drawn
    /// uniformly from `1..=min(max_classes, items)`. The uniform class-cut
    /// distribution is arbitrary, not taken from anywhere.
    pub max_classes: usize,
}

impl GenConfig {
    pub fn new(seed: u64, agents: usize, items: usize, polarity: Polarity) -> Self {
        GenConfig {
            seed,
            agents,
            items,
            polarity,
            max_classes: items.max(1),
        }
    }

    pub fn with_max_classes(mut self, max_classes: usize) -> Self {
        self.max_classes = max_classes;
        self
    }
}

/// Generates a valid instance: per agent, items are shuffled and cut at
/// sorted random boundaries into classes.
pub fn generate(config: &GenConfig) -> Result<Instance> {
    if config.agents == 0 {
        return Err(Error::InvalidInstance("generator needs at least one agent".into()));
    }
    if config.max_classes == 0 {
        return Err(Error::InvalidInstance("max_classes must be at least 1".into()));
    }
    let m = config.items;
    let prefix = match config.polarity {
        Polarity::Goods => 'g',
        Polarity::Chores => 'c',
    };
    let item_labels: Vec<String> = (1..=m).map(|i| format!("{prefix}{i}")).collect();
    let agent_names: Vec<String> = (1..=config.agents).map(|i| i.to_string()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut classes = Vec::with_capacity(config.agents);
    for _ in 0..config.agents {
        if m == 0 {
            classes.push(Vec::new());
            continue;
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(&mut rng);
        let k = rng.gen_range(1..=config.max_classes.min(m));
        // k - 1 distinct cut positions in 1..m split the shuffle into
        // non-empty classes.
        let mut cuts: Vec<usize> = (1..m).collect();
        cuts.shuffle(&mut rng);
        cuts.truncate(k - 1);
        cuts.sort_unstable();
        cuts.push(m);
        let mut agent_classes = Vec::with_capacity(k);
        let mut start = 0;
        for cut in cuts {
            agent_classes.push(order[start..cut].to_vec());
            start = cut;
        }
        classes.push(agent_classes);
    }
    Instance::new(config.polarity, item_labels, agent_names, classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_configs_generate_identical_instances() {
        let config = GenConfig::new(42, 3, 6, Polarity::Goods).with_max_classes(4);
        let a = generate(&config).unwrap();
        let b = generate(&config).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let other = generate(&GenConfig::new(43, 3, 6, Polarity::Goods).with_max_classes(4)).unwrap();
        assert_ne!(a.to_json(), other.to_json());
    }

    #[test]
    fn max_classes_one_gives_single_class_agents() {
        let config = GenConfig::new(7, 2, 5, Polarity::Chores).with_max_classes(1);
        let inst = generate(&config).unwrap();
        for a in inst.agents() {
            assert_eq!(inst.num_classes(a), 1);
        }
    }

    #[test]
    fn generated_instances_always_validate() {
        for seed in 0..50 {
            for &m in &[0usize, 1, 3, 6] {
                let config = GenConfig::new(seed, 3, m, Polarity::Goods).with_max_classes(m.max(1));
                let inst = generate(&config).unwrap();
                // Re-parsing the serialized form re-runs full validation.
                let again = Instance::from_json(&inst.to_json()).unwrap();
                assert_eq!(inst, again);
            }
        }
    }

    #[test]
    fn rejects_degenerate_configs() {
        assert!(generate(&GenConfig::new(0, 0, 3, Polarity::Goods)).is_err());
    }
}
