//! Lists the lot-types admitted by per-size and total item bounds.
//!
//! ```text
//! cargo run -p lotopt-core --example enumerate_lots
//! ```

use lotopt_core::lots::{enumerate_lot_types, LotBounds};
use lotopt_core::SizeSet;

fn main() -> lotopt_core::Result<()> {
    let sizes = SizeSet::new(["S", "M", "L"])?;
    let bounds = LotBounds {
        per_size_lo: vec![0, 1, 0],
        per_size_hi: vec![2, 3, 2],
        total_lo: 3,
        total_hi: 4,
    };
    println!("{} lot-types within the bounds", bounds.count());
    for lot in enumerate_lot_types(&bounds, &sizes)? {
        let parts: Vec<String> = sizes
            .labels()
            .iter()
            .zip(lot.counts())
            .map(|(s, c)| format!("{c}×{s}"))
            .collect();
        println!("  {:?}  {}  ({} items)", lot.counts(), parts.join(" + "), lot.size());
    }

    let retail = LotBounds {
        per_size_lo: vec![1; 5],
        per_size_hi: vec![4; 5],
        total_lo: 6,
        total_hi: 12,
    };
    println!("five sizes, 1..=4 per size, 6..=12 items: {} lot-types", retail.count());
    Ok(())
}
