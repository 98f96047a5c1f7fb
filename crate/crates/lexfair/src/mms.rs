//! Closed-form maximin-share thresholds.
//!
//! Goods: entry `x_l = floor(s_i(l) / r_l)` with `r_1 = n` and
//! `r_{l+1} = r_l - (s_i(l) - r_l * x_l)`; `r_l` tracks how many bundles are
//! still tied for the minimum while classes are handed out round-robin.
//!
//! Chores: exact per-class quotients `s_i(l) / n` up to the first class whose
//! size `n` does not divide, which contributes `floor(s_i(k) / n)` (i.e.
//! count divided by `n`, rounded up, negated); later entries are zero. When
//! every class divides evenly the vector is the full quotient vector.

use std::cmp::Ordering;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Polarity};
use crate::score::{lex_compare, score, ScoreVector};

/// Goods-only maximin-share threshold of `agent`.
pub fn mms_goods(instance: &Instance, agent: Agent) -> Result<ScoreVector> {
    instance.require_polarity(Polarity::Goods)?;
    instance.check_agent(agent)?;
    let n = instance.num_agents() as i64;
    let k = instance.num_classes(agent);
    let mut entries = Vec::with_capacity(k);
    let mut remaining = n;
    for l in 1..=k {
        let size = instance.class_size(agent, l) as i64;
        let x = size / remaining;
        entries.push(x);
        remaining -= size - remaining * x;
        debug_assert!((1..=n).contains(&remaining));
    }
    Ok(ScoreVector(entries))
}

/// Chores-only maximin-share threshold of `agent`.
pub fn mms_chores(instance: &Instance, agent: Agent) -> Result<ScoreVector> {
    instance.require_polarity(Polarity::Chores)?;
    instance.check_agent(agent)?;
    let n = instance.num_agents() as i64;
    let k = instance.num_classes(agent);
    let mut entries = Vec::with_capacity(k);
    for l in 1..=k {
        let signed = -(instance.class_size(agent, l) as i64);
        if signed % n == 0 {
            entries.push(signed / n);
        } else {
            // First class n does not divide: round towards minus infinity,
            // everything after it is zero.
            entries.push(signed.div_euclid(n));
            entries.resize(k, 0);
            break;
        }
    }
    Ok(ScoreVector(entries))
}

/// Threshold for either polarity.
pub fn mms_threshold(instance: &Instance, agent: Agent) -> Result<ScoreVector> {
    match instance.polarity() {
        Polarity::Goods => mms_goods(instance, agent),
        Polarity::Chores => mms_chores(instance, agent),
    }
}

/// Whether `agent`'s bundle in a complete allocation weakly beats its
/// maximin-share threshold.
pub fn satisfies_mms(instance: &Instance, allocation: &Allocation, agent: Agent) -> Result<bool> {
    if !allocation.is_complete() {
        return Err(Error::ContractViolation(
            "maximin share is judged on complete allocations".into(),
        ));
    }
    let threshold = mms_threshold(instance, agent)?;
    let own = score(instance, agent, allocation.bundle(agent))?;
    Ok(lex_compare(&own, &threshold)? != Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::allocation::allocation_from_bundles;
    use crate::instance::instance_from_labels;

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

    #[test]
    fn goods_thresholds_match_hand_computed_values() {
        let inst = example_3_1();
        assert_eq!(mms_goods(&inst, Agent::from_index(0)).unwrap().entries(), &[0, 2]);
        assert_eq!(mms_goods(&inst, Agent::from_index(1)).unwrap().entries(), &[0, 1]);
        assert_eq!(mms_goods(&inst, Agent::from_index(2)).unwrap().entries(), &[0, 1]);
    }

    #[test]
    fn single_agent_threshold_is_the_full_score() {
        let inst = instance_from_labels(
            Polarity::Goods,
            &["g1", "g2", "g3"],
            &[("1", &[&["g1"], &["g2", "g3"]])],
        )
        .unwrap();
        assert_eq!(mms_goods(&inst, Agent::from_index(0)).unwrap().entries(), &[1, 2]);

        let chores = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2"],
            &[("1", &[&["c1"], &["c2"]])],
        )
        .unwrap();
        assert_eq!(mms_chores(&chores, Agent::from_index(0)).unwrap().entries(), &[-1, -1]);
    }

    #[test]
    fn chores_thresholds_match_hand_computed_values() {
        let inst = example_4_3();
        // Class sizes (-3, -1) with n = 3: 3 | 3, then 3 does not divide 1.
        assert_eq!(mms_chores(&inst, Agent::from_index(1)).unwrap().entries(), &[-1, -1]);
        // Class sizes (-1, -3): first class already non-divisible.
        assert_eq!(mms_chores(&inst, Agent::from_index(0)).unwrap().entries(), &[-1, 0]);
    }

    #[test]
    fn all_divisible_chores_keep_exact_quotients() {
        let inst = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3", "c4", "c5", "c6"],
            &[
                ("1", &[&["c1", "c2"], &["c3", "c4", "c5", "c6"]]),
                ("2", &[&["c1", "c2", "c3", "c4", "c5", "c6"]]),
            ],
        )
        .unwrap();
        assert_eq!(mms_chores(&inst, Agent::from_index(0)).unwrap().entries(), &[-1, -2]);
        assert_eq!(mms_chores(&inst, Agent::from_index(1)).unwrap().entries(), &[-3]);
    }

    #[test]
    fn polarity_mismatch_is_an_error() {
        let goods = example_3_1();
        let chores = example_4_3();
        assert!(mms_chores(&goods, Agent::from_index(0)).is_err());
        assert!(mms_goods(&chores, Agent::from_index(0)).is_err());
    }

    #[test]
    fn satisfies_mms_examples() {
        let inst = example_3_1();
        let alloc = allocation_from_bundles(&inst, &[&["g2"], &["g1"], &["g3", "g4"]]).unwrap();
        // Agent 3: score (0,2) against threshold (0,1).
        assert!(satisfies_mms(&inst, &alloc, Agent::from_index(2)).unwrap());

        let hog = allocation_from_bundles(&inst, &[&["g1", "g2", "g3", "g4"], &[], &[]]).unwrap();
        assert!(satisfies_mms(&inst, &hog, Agent::from_index(0)).unwrap());

        let partial = allocation_from_bundles(&inst, &[&["g1"], &[], &[]]).unwrap();
        assert!(satisfies_mms(&inst, &partial, Agent::from_index(0)).is_err());
    }

    #[test]
    fn threshold_entries_stay_within_class_bounds() {
        let goods = example_3_1();
        for a in goods.agents() {
            let t = mms_goods(&goods, a).unwrap();
            for (l, &x) in t.entries().iter().enumerate() {
                assert!(x >= 0 && x <= goods.class_size(a, l + 1) as i64);
            }
        }
        let chores = example_4_3();
        for a in chores.agents() {
            let t = mms_chores(&chores, a).unwrap();
            for (l, &x) in t.entries().iter().enumerate() {
                assert!(x <= 0 && x >= -(chores.class_size(a, l + 1) as i64));
            }
        }
    }

    #[test]
    fn goods_threshold_scales_on_divisible_instances() {
        // Class sizes 3 and 6 split evenly over 3 agents.
        let inst = instance_from_labels(
            Polarity::Goods,
            &["g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9"],
            &[
                ("1", &[&["g1", "g2", "g3"], &["g4", "g5", "g6", "g7", "g8", "g9"]]),
                ("2", &[&["g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9"]]),
                ("3", &[&["g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9"]]),
            ],
        )
        .unwrap();
        assert_eq!(mms_goods(&inst, Agent::from_index(0)).unwrap().entries(), &[1, 2]);
        assert_eq!(mms_goods(&inst, Agent::from_index(1)).unwrap().entries(), &[3]);
    }
}
