//! Alternating paths in the preference graph: item availability, exchange
//! updates, and the path-based Pareto-optimality check.
//!
//! ```bash
//! cargo run -p lexfair --example alternating_paths
//! ```

use lexfair::{
    allocation_from_bundles, available_items, find_alternating_path, instance_from_labels,
    is_pareto_optimal, update_along_path, Polarity, Result,
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

    // Agent 1 grabbed g1 first, but g1 is not locked in: agent 1 is equally
    // happy with g2, so g1 can still be freed for somebody else.
    let allocation = allocation_from_bundles(&instance, &[&["g1"], &[], &[]])?;
    println!("allocation: {}", allocation.display(&instance));
    println!(
        "available items: {:?}",
        available_items(&instance, &allocation)
            .iter()
            .map(|&g| instance.item_label(g))
            .collect::<Vec<_>>()
    );

    let path = find_alternating_path(&instance, &allocation, instance.item_by_label("g1")?)?
        .expect("g1 is available");
    println!("path from g1: {}", path.display(&instance));

    let updated = update_along_path(&instance, &allocation, &path)?;
    println!("after update:  {} (g1 freed)", updated.display(&instance));

    // A partial allocation that wastes value fails the PO test.
    let chores = instance_from_labels(
        Polarity::Chores,
        &["c1", "c2", "c3", "c4", "c5"],
        &[
            ("1", &[&["c1", "c2"], &["c3"], &["c4", "c5"]]),
            ("2", &[&["c1", "c2"], &["c3"], &["c4", "c5"]]),
            ("3", &[&["c4", "c5"], &["c3"], &["c1", "c2"]]),
            ("4", &[&["c4", "c5"], &["c3"], &["c1", "c2"]]),
        ],
    )?;
    let stuck = allocation_from_bundles(&chores, &[&["c1"], &["c2"], &["c4"], &["c5"]])?;
    println!(
        "\nchores allocation {} is PO? {}",
        stuck.display(&chores),
        is_pareto_optimal(&chores, &stuck)
    );
    println!("Every agent holds a worst-class chore; swapping across the two");
    println!("camps makes all four strictly happier.");
    Ok(())
}
