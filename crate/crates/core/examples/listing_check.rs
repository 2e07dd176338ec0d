//! Expands the stored factored listings and compares them with the engine.

use toda_psi::psi::{check_appendix, ListedCurve};

fn main() -> toda_psi::Result<()> {
    for which in ListedCurve::ALL {
        let r = check_appendix(which)?;
        let bad = r.mismatches();
        println!(
            "{which:?} ({}): {} entries, {}",
            which.curve(),
            r.entries.len(),
            if bad.is_empty() {
                "all match".to_string()
            } else {
                format!("mismatches at n = {bad:?}")
            }
        );
    }
    Ok(())
}
