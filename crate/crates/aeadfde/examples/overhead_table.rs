//! Prints the metadata space cost for common tag sizes, plus the exact
//! layout the formatter would choose for a sample device.
//!
//! ```bash
//! cargo run --release -p aeadfde --example overhead_table
//! ```

use aeadfde::layout::{default_journal_sectors, overhead_percent, tags_per_sector, Layout};

fn main() {
    println!("Per-sector metadata space cost (one metadata sector per region):\n");
    println!("{:>12} {:>16} {:>16}", "tag [bytes]", "512 B sectors", "4096 B sectors");
    for tag in [4u32, 16, 28, 32, 48, 64, 80] {
        let row: Vec<String> = [512u32, 4096]
            .iter()
            .map(|&sector| {
                let tps = tags_per_sector(sector, tag).unwrap() as u64;
                format!("{:>15.2}%", overhead_percent(tps, 1).unwrap())
            })
            .collect();
        println!("{:>12} {} {}", tag, row[0], row[1]);
    }

    let total_sectors = (1u64 << 30) / 512;
    let journal = default_journal_sectors(total_sectors, 512);
    let layout = Layout::for_capacity(total_sectors, 512, 48, journal).unwrap();
    println!("\nLayout for a 1 GiB backing file, 512 B sectors, 48 B tags:");
    println!("  superblock sectors: {}", layout.superblock_sectors);
    println!("  journal sectors:    {}", layout.journal_sectors);
    println!("  data sectors:       {}", layout.data_sectors);
    println!("  metadata sectors:   {}", layout.meta_sectors);
    println!(
        "  usable capacity:    {:.2} MiB of 1024 MiB ({:.2}% metadata)",
        layout.data_sectors as f64 * 512.0 / (1 << 20) as f64,
        overhead_percent(layout.data_sectors, layout.meta_sectors).unwrap(),
    );

    let addr = layout.to_physical(0).unwrap();
    println!(
        "\nLogical sector 0 lives at physical sector {}, its tag at sector {} offset {}.",
        addr.data_sector, addr.meta_sector, addr.tag_offset
    );
}
