//! Regenerates every stored reference value and prints pass/fail per item.

use toda_psi::report::reproduce;

fn main() -> toda_psi::Result<()> {
    let items = reproduce()?;
    for i in &items {
        println!("{:<24} {:?}", i.item, i.status);
        if !i.passed() {
            println!("    expected {}\n    actual   {}", i.expected, i.actual);
        }
    }
    let failed = items.iter().filter(|i| !i.passed()).count();
    println!(
        "{} of {} items reproduced",
        items.len() - failed,
        items.len()
    );
    Ok(())
}
