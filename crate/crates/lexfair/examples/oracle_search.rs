//! Brute-force oracles on desk-scale instances: envy-free existence,
//! Pareto-dominance search, and the EFX+PO catalogue.
//!
//! ```bash
//! cargo run -p lexfair --example oracle_search
//! ```

use lexfair::{
    allocation_from_bundles, ef_exists, efx_po_catalogue, instance_from_labels,
    po_dominance_search, Polarity, Result, DEFAULT_BUDGET,
};

fn main() -> Result<()> {
    // One contested top good: whoever misses g1 envies its holder, so no
    // envy-free allocation exists; the oracle proves it by checking all 81.
    let contested = instance_from_labels(
        Polarity::Goods,
        &["g1", "g2", "g3", "g4"],
        &[
            ("1", &[&["g1", "g2"], &["g3", "g4"]]),
            ("2", &[&["g1"], &["g2", "g3", "g4"]]),
            ("3", &[&["g1"], &["g2", "g3", "g4"]]),
        ],
    )?;
    println!(
        "envy-free allocation of the contested instance: {:?}",
        ef_exists(&contested, DEFAULT_BUDGET)?.map(|a| a.display(&contested))
    );

    let symmetric = instance_from_labels(
        Polarity::Goods,
        &["g1", "g2"],
        &[("1", &[&["g1", "g2"]]), ("2", &[&["g1", "g2"]])],
    )?;
    println!(
        "envy-free allocation of the symmetric pair:     {:?}",
        ef_exists(&symmetric, DEFAULT_BUDGET)?.map(|a| a.display(&symmetric))
    );

    // Dominance search on a wasteful partial allocation of opposed camps.
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
    match po_dominance_search(&chores, &stuck, DEFAULT_BUDGET)? {
        Some(better) => println!(
            "\n{} is dominated by {}",
            stuck.display(&chores),
            better.display(&chores)
        ),
        None => println!("\n{} is Pareto optimal", stuck.display(&chores)),
    }

    // Catalogue every EFX+PO allocation of a three-chore instance.
    let shared = instance_from_labels(
        Polarity::Chores,
        &["c1", "c2", "c3"],
        &[
            ("1", &[&["c1"], &["c2", "c3"]]),
            ("2", &[&["c1"], &["c2", "c3"]]),
            ("3", &[&["c1", "c2", "c3"]]),
        ],
    )?;
    println!("\nEFX+PO catalogue of the shared-worst-chore instance:");
    for allocation in efx_po_catalogue(&shared, DEFAULT_BUDGET)? {
        println!("  {}", allocation.display(&shared));
    }
    Ok(())
}
