//! Potential envy: the envy that would arise if an agent also received all
//! still-available goods. The solver keeps exactly the source component of
//! this graph prioritized under the EFX criteria.
//!
//! ```bash
//! cargo run -p lexfair --example envy_graph
//! ```

use lexfair::{
    allocation_from_bundles, instance_from_labels, potential_envy_graph, source_scc, Agent,
    AgentOrdering, Polarity, Result,
};

fn main() -> Result<()> {
    let instance = instance_from_labels(
        Polarity::Goods,
        &["g1", "g2", "g3", "g4"],
        &[
            ("1", &[&["g1", "g2"], &["g3", "g4"]]),
            ("2", &[&["g1"], &["g2", "g3", "g4"]]),
            ("3", &[&["g1"], &["g2", "g3", "g4"]]),
        ],
    )?;

    // Mid-run snapshot: agent 1 traded up to g2, agent 2 holds g1, agent 3
    // holds nothing yet; g3 and g4 are still open.
    let allocation = allocation_from_bundles(&instance, &[&["g2"], &["g1"], &[]])?;
    println!("allocation: {}", allocation.display(&instance));

    let nodes: Vec<Agent> = instance.agents().collect();
    let graph = potential_envy_graph(&instance, &allocation, &nodes)?;
    println!("potential envy edges:");
    for (envious, envied) in graph.edges() {
        println!(
            "  {} -> {}",
            instance.agent_name(envious),
            instance.agent_name(envied)
        );
    }

    let sigma = AgentOrdering::natural(&instance);
    let source = source_scc(&graph, &sigma)?;
    println!(
        "source component: {:?}",
        source.iter().map(|&a| instance.agent_name(a)).collect::<Vec<_>>()
    );
    println!("\nNobody potentially envies agent 3, so under the EFX criteria");
    println!("only agent 3 keeps receiving goods from here on.");
    Ok(())
}
