//! Envy-freeness and efficiency verifiers with witnesses.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::instance::{Agent, Instance, Item, Polarity};
use crate::mms::satisfies_mms;
use crate::prefgraph::is_pareto_optimal;
use crate::score::{lex_compare, score, ScoreVector};

/// A pair of agents violating plain envy-freeness, with the envious agent's
/// view of both bundles.
#[derive(Clone, Debug)]
pub struct EnvyWitness {
    pub envious: Agent,
    pub envied: Agent,
    pub own_score: ScoreVector,
    pub other_score: ScoreVector,
}

/// An envious pair whose envy survives every admissible single-item removal.
#[derive(Clone, Debug)]
pub struct Ef1Witness {
    pub envious: Agent,
    pub envied: Agent,
}

/// An envious pair and one admissible removal that fails to cure the envy.
#[derive(Clone, Debug)]
pub struct EfxWitness {
    pub envious: Agent,
    pub envied: Agent,
    pub item: Item,
}

fn require_complete(allocation: &Allocation) -> Result<()> {
    if allocation.is_complete() {
        Ok(())
    } else {
        Err(Error::ContractViolation(
            "fairness verifiers need a complete allocation".into(),
        ))
    }
}

fn envies(instance: &Instance, allocation: &Allocation, j: Agent, i: Agent) -> Result<bool> {
    let own = score(instance, j, allocation.bundle(j))?;
    let other = score(instance, j, allocation.bundle(i))?;
    Ok(lex_compare(&other, &own)? == Ordering::Greater)
}

/// All ordered pairs (envious, envied) of the allocation.
pub fn envy_edges(instance: &Instance, allocation: &Allocation) -> Result<Vec<(Agent, Agent)>> {
    let mut edges = Vec::new();
    for j in instance.agents() {
        for i in instance.agents() {
            if i != j && envies(instance, allocation, j, i)? {
                edges.push((j, i));
            }
        }
    }
    Ok(edges)
}

/// Envy-freeness; `None` means the allocation is EF.
pub fn is_ef(instance: &Instance, allocation: &Allocation) -> Result<Option<EnvyWitness>> {
    require_complete(allocation)?;
    for j in instance.agents() {
        for i in instance.agents() {
            if i == j {
                continue;
            }
            let own = score(instance, j, allocation.bundle(j))?;
            let other = score(instance, j, allocation.bundle(i))?;
            if lex_compare(&other, &own)? == Ordering::Greater {
                return Ok(Some(EnvyWitness {
                    envious: j,
                    envied: i,
                    own_score: own,
                    other_score: other,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether the envy of `j` towards `i` is curable by removing one item:
/// some item of the envied bundle for goods, some of the envious agent's own
/// chores for chores.
fn envy_up_to_one(
    instance: &Instance,
    allocation: &Allocation,
    j: Agent,
    i: Agent,
) -> Result<bool> {
    let own = allocation.bundle(j);
    let other = allocation.bundle(i);
    let own_score = score(instance, j, own.iter().copied())?;
    let other_score = score(instance, j, other.iter().copied())?;
    match instance.polarity() {
        Polarity::Goods => {
            for &g in &other {
                let reduced = score(
                    instance,
                    j,
                    other.iter().copied().filter(|x| *x != g),
                )?;
                if lex_compare(&own_score, &reduced)? != Ordering::Less {
                    return Ok(true);
                }
            }
        }
        Polarity::Chores => {
            for &c in &own {
                let reduced = score(instance, j, own.iter().copied().filter(|x| *x != c))?;
                if lex_compare(&reduced, &other_score)? != Ordering::Less {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Envy-freeness up to some item; `None` means the allocation is EF1.
pub fn is_ef1(instance: &Instance, allocation: &Allocation) -> Result<Option<Ef1Witness>> {
    require_complete(allocation)?;
    for j in instance.agents() {
        for i in instance.agents() {
            if i == j || !envies(instance, allocation, j, i)? {
                continue;
            }
            if !envy_up_to_one(instance, allocation, j, i)? {
                return Ok(Some(Ef1Witness {
                    envious: j,
                    envied: i,
                }));
            }
        }
    }
    Ok(None)
}

/// Envy-freeness up to any item; `None` means the allocation is EFX.
pub fn is_efx(instance: &Instance, allocation: &Allocation) -> Result<Option<EfxWitness>> {
    require_complete(allocation)?;
    for j in instance.agents() {
        for i in instance.agents() {
            if i == j || !envies(instance, allocation, j, i)? {
                continue;
            }
            let own = allocation.bundle(j);
            let other = allocation.bundle(i);
            let own_score = score(instance, j, own.iter().copied())?;
            let other_score = score(instance, j, other.iter().copied())?;
            match instance.polarity() {
                Polarity::Goods => {
                    for &g in &other {
                        let reduced = score(
                            instance,
                            j,
                            other.iter().copied().filter(|x| *x != g),
                        )?;
                        if lex_compare(&own_score, &reduced)? == Ordering::Less {
                            return Ok(Some(EfxWitness {
                                envious: j,
                                envied: i,
                                item: g,
                            }));
                        }
                    }
                }
                Polarity::Chores => {
                    for &c in &own {
                        let reduced =
                            score(instance, j, own.iter().copied().filter(|x| *x != c))?;
                        if lex_compare(&reduced, &other_score)? == Ordering::Less {
                            return Ok(Some(EfxWitness {
                                envious: j,
                                envied: i,
                                item: c,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Verdicts and witnesses for one allocation, serializable as JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub ef: bool,
    pub ef1: bool,
    pub efx: bool,
    /// Per-agent maximin-share verdicts, keyed by agent name.
    pub mms: BTreeMap<String, bool>,
    pub po: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ef_witness: Option<ReportEnvyWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ef1_witness: Option<ReportPairWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub efx_witness: Option<ReportItemWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvyWitness {
    pub envious: String,
    pub envied: String,
    pub own_score: Vec<i64>,
    pub other_score: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportPairWitness {
    pub envious: String,
    pub envied: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportItemWitness {
    pub envious: String,
    pub envied: String,
    pub item: String,
}

impl Report {
    pub fn all_mms(&self) -> bool {
        self.mms.values().all(|v| *v)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Runs every verifier on a complete allocation.
pub fn verify_report(instance: &Instance, allocation: &Allocation) -> Result<Report> {
    require_complete(allocation)?;
    let ef = is_ef(instance, allocation)?;
    let ef1 = is_ef1(instance, allocation)?;
    let efx = is_efx(instance, allocation)?;
    let mut mms = BTreeMap::new();
    for agent in instance.agents() {
        mms.insert(
            instance.agent_name(agent).to_string(),
            satisfies_mms(instance, allocation, agent)?,
        );
    }
    let po = is_pareto_optimal(instance, allocation);
    Ok(Report {
        ef: ef.is_none(),
        ef1: ef1.is_none(),
        efx: efx.is_none(),
        mms,
        po,
        ef_witness: ef.map(|w| ReportEnvyWitness {
            envious: instance.agent_name(w.envious).to_string(),
            envied: instance.agent_name(w.envied).to_string(),
            own_score: w.own_score.0,
            other_score: w.other_score.0,
        }),
        ef1_witness: ef1.map(|w| ReportPairWitness {
            envious: instance.agent_name(w.envious).to_string(),
            envied: instance.agent_name(w.envied).to_string(),
        }),
        efx_witness: efx.map(|w| ReportItemWitness {
            envious: instance.agent_name(w.envious).to_string(),
            envied: instance.agent_name(w.envied).to_string(),
            item: instance.item_label(w.item).to_string(),
        }),
    })
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

    /// Three agents, three chores; the MMS+PO allocation ({c2,c3}, {}, {c1})
    /// leaves agent 1 envying agent 2 beyond what one removal can cure.
    fn chores_mms_not_efx() -> (Instance, Allocation) {
        let inst = instance_from_labels(
            Polarity::Chores,
            &["c1", "c2", "c3"],
            &[
                ("1", &[&["c1"], &["c2", "c3"]]),
                ("2", &[&["c1"], &["c2", "c3"]]),
                ("3", &[&["c1", "c2", "c3"]]),
            ],
        )
        .unwrap();
        let alloc = allocation_from_bundles(&inst, &[&["c2", "c3"], &[], &["c1"]]).unwrap();
        (inst, alloc)
    }

    #[test]
    fn final_example_allocation_is_not_ef_with_witness() {
        let inst = example_3_1();
        let alloc = allocation_from_bundles(&inst, &[&["g2"], &["g1"], &["g3", "g4"]]).unwrap();
        let w = is_ef(&inst, &alloc).unwrap().unwrap();
        assert_eq!((w.envious, w.envied), (Agent::from_index(2), Agent::from_index(1)));
        assert_eq!(w.other_score.entries(), &[1, 0]);
        assert_eq!(w.own_score.entries(), &[0, 2]);
    }

    #[test]
    fn single_agent_is_trivially_ef() {
        let inst =
            instance_from_labels(Polarity::Goods, &["g1"], &[("1", &[&["g1"]])]).unwrap();
        let alloc = allocation_from_bundles(&inst, &[&["g1"]]).unwrap();
        assert!(is_ef(&inst, &alloc).unwrap().is_none());
    }

    #[test]
    fn symmetric_singletons_are_ef() {
        let inst = instance_from_labels(
            Polarity::Goods,
            &["g1", "g2"],
            &[
                ("1", &[&["g1", "g2"]]),
                ("2", &[&["g1", "g2"]]),
            ],
        )
        .unwrap();
        let alloc = allocation_from_bundles(&inst, &[&["g1"], &["g2"]]).unwrap();
        assert!(is_ef(&inst, &alloc).unwrap().is_none());
    }

    #[test]
    fn chores_run_output_is_ef1() {
        let inst = example_4_3();
        let alloc = allocation_from_bundles(&inst, &[&["c1", "c2"], &["c4"], &["c3"]]).unwrap();
        assert!(is_ef1(&inst, &alloc).unwrap().is_none());
    }

    #[test]
    fn singleton_envied_bundle_never_blocks_ef1_for_goods() {
        let inst = example_3_1();
        // Agent 2 envies agent 3 who holds just g1; removing it empties the bundle.
        let alloc = allocation_from_bundles(&inst, &[&["g2", "g3"], &["g4"], &["g1"]]).unwrap();
        assert!(is_ef1(&inst, &alloc).unwrap().is_none());
    }

    #[test]
    fn overloaded_agent_fails_ef1_for_chores() {
        // Removing one own chore cannot cure envy towards an empty bundle
        // when two chores of the same class remain.
        let (inst, alloc) = chores_mms_not_efx();
        let w = is_ef1(&inst, &alloc).unwrap().unwrap();
        assert_eq!((w.envious, w.envied), (Agent::from_index(0), Agent::from_index(1)));
    }

    #[test]
    fn efx_holds_on_the_worked_example_output() {
        let inst = example_3_1();
        let alloc = allocation_from_bundles(&inst, &[&["g2"], &["g1"], &["g3", "g4"]]).unwrap();
        assert!(is_efx(&inst, &alloc).unwrap().is_none());
    }

    #[test]
    fn efx_witness_names_the_uncured_removal() {
        let (inst, alloc) = chores_mms_not_efx();
        let w = is_efx(&inst, &alloc).unwrap().unwrap();
        assert_eq!((w.envious, w.envied), (Agent::from_index(0), Agent::from_index(1)));
    }

    #[test]
    fn ef_implies_efx_implies_ef1() {
        let inst = example_3_1();
        // Check the chain on every complete allocation of the instance.
        let n = inst.num_agents();
        let m = inst.num_items();
        for code in 0..n.pow(m as u32) {
            let mut c = code;
            let mut pairs = Vec::new();
            for g in inst.items() {
                pairs.push((g, Agent::from_index(c % n)));
                c /= n;
            }
            let alloc = Allocation::from_assignments(&inst, pairs).unwrap();
            let ef = is_ef(&inst, &alloc).unwrap().is_none();
            let efx = is_efx(&inst, &alloc).unwrap().is_none();
            let ef1 = is_ef1(&inst, &alloc).unwrap().is_none();
            if ef {
                assert!(efx);
            }
            if efx {
                assert!(ef1);
            }
        }
    }

    #[test]
    fn report_collects_all_verdicts() {
        let inst = example_3_1();
        let alloc = allocation_from_bundles(&inst, &[&["g2"], &["g1"], &["g3", "g4"]]).unwrap();
        let report = verify_report(&inst, &alloc).unwrap();
        assert!(!report.ef);
        assert!(report.ef1);
        assert!(report.efx);
        assert!(report.all_mms());
        assert!(report.po);
        assert!(report.ef_witness.is_some());
        let json = report.to_json();
        assert!(json.contains("\"po\": true"));
    }

    #[test]
    fn empty_instance_report_is_vacuously_clean() {
        let inst =
            instance_from_labels(Polarity::Goods, &[], &[("1", &[]), ("2", &[])]).unwrap();
        let alloc = Allocation::empty(&inst);
        let report = verify_report(&inst, &alloc).unwrap();
        assert!(report.ef && report.ef1 && report.efx && report.po && report.all_mms());
    }

    #[test]
    fn verifiers_reject_partial_allocations() {
        let inst = example_3_1();
        let alloc = allocation_from_bundles(&inst, &[&["g1"], &[], &[]]).unwrap();
        assert!(is_ef(&inst, &alloc).is_err());
        assert!(is_ef1(&inst, &alloc).is_err());
        assert!(is_efx(&inst, &alloc).is_err());
        assert!(verify_report(&inst, &alloc).is_err());
    }

    #[test]
    fn verdicts_ignore_assignment_insertion_order() {
        let inst = example_3_1();
        let forward = Allocation::from_assignments(
            &inst,
            [
                (Item::from_index(0), Agent::from_index(1)),
                (Item::from_index(1), Agent::from_index(0)),
                (Item::from_index(2), Agent::from_index(2)),
                (Item::from_index(3), Agent::from_index(2)),
            ],
        )
        .unwrap();
        let backward = Allocation::from_assignments(
            &inst,
            [
                (Item::from_index(3), Agent::from_index(2)),
                (Item::from_index(2), Agent::from_index(2)),
                (Item::from_index(1), Agent::from_index(0)),
                (Item::from_index(0), Agent::from_index(1)),
            ],
        )
        .unwrap();
        assert_eq!(forward, backward);
        let a = verify_report(&inst, &forward).unwrap();
        let b = verify_report(&inst, &backward).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
