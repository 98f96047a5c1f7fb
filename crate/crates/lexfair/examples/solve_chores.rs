//! Allocate chores with the EF1+PO loop and inspect the run.
//!
//! ```bash
//! cargo run -p lexfair --example solve_chores
//! ```

use lexfair::{instance_from_labels, AgentOrdering, Polarity, Result};

fn main() -> Result<()> {
    // Three agents, four chores. Class 1 holds each agent's worst chores;
    // everyone prefers picking from their last class.
    let instance = instance_from_labels(
        Polarity::Chores,
        &["c1", "c2", "c3", "c4"],
        &[
            ("1", &[&["c1"], &["c2", "c3", "c4"]]),
            ("2", &[&["c1", "c2", "c3"], &["c4"]]),
            ("3", &[&["c1", "c2"], &["c3", "c4"]]),
        ],
    )?;
    let sigma = AgentOrdering::natural(&instance);

    let (allocation, trace) = lexfair::solve_chores_ef1_traced(&instance, &sigma)?;
    println!("final allocation: {}\n", allocation.display(&instance));

    println!("iterations:");
    for (t, record) in trace.iterations.iter().enumerate() {
        println!(
            "  {}: agent {} takes {} (class {}) via path {}",
            t + 1,
            instance.agent_name(record.chosen_agent),
            instance.item_label(record.item),
            record.picked_class,
            record.path.display(&instance),
        );
    }

    let report = lexfair::verify_report(&instance, &allocation)?;
    println!(
        "\nverified: ef1 {} | po {} (efx {}, mms {})",
        report.ef1,
        report.po,
        report.efx,
        report.all_mms()
    );
    Ok(())
}
