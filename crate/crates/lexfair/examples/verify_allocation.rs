//! Check an allocation for EF, EF1, EFX, MMS and PO, with witnesses for
//! every failure.
//!
//! ```bash
//! cargo run -p lexfair --example verify_allocation
//! ```

use lexfair::{allocation_from_bundles, instance_from_labels, Polarity, Result};

fn main() -> Result<()> {
    let instance = instance_from_labels(
        Polarity::Chores,
        &["c1", "c2", "c3"],
        &[
            ("1", &[&["c1"], &["c2", "c3"]]),
            ("2", &[&["c1"], &["c2", "c3"]]),
            ("3", &[&["c1", "c2", "c3"]]),
        ],
    )?;

    // Agent 3 takes the shared worst chore, agent 1 takes both light ones,
    // agent 2 walks away free.
    let allocation = allocation_from_bundles(&instance, &[&["c2", "c3"], &[], &["c1"]])?;
    println!("allocation: {}\n", allocation.display(&instance));

    if let Some(w) = lexfair::is_ef(&instance, &allocation)? {
        println!(
            "EF fails: agent {} envies agent {} ({} vs {})",
            instance.agent_name(w.envious),
            instance.agent_name(w.envied),
            w.own_score,
            w.other_score,
        );
    }
    if let Some(w) = lexfair::is_efx(&instance, &allocation)? {
        println!(
            "EFX fails: removing {} from agent {} still leaves envy towards agent {}",
            instance.item_label(w.item),
            instance.agent_name(w.envious),
            instance.agent_name(w.envied),
        );
    }
    if let Some(w) = lexfair::is_ef1(&instance, &allocation)? {
        println!(
            "EF1 fails: no single removal cures agent {}'s envy of agent {}",
            instance.agent_name(w.envious),
            instance.agent_name(w.envied),
        );
    }

    let report = lexfair::verify_report(&instance, &allocation)?;
    println!("\nfull report:\n{}", report.to_json());
    Ok(())
}
