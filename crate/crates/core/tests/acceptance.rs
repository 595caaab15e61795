//! Runs the ten reproduction criteria and prints one line per criterion.
//!
//! Criterion 4 asserts 2n - 2 elements for the star on n vertices. The
//! computed bases have n(n-1)/2 elements (n - 1 four-cycles and one six-cycle
//! per pair of leaves in the prism), which agrees with 2n - 2 only at n = 4.
//! It is reported as FAIL and listed here; the target fails if the set of
//! failing criteria changes in either direction.

use diagtoric::suite;

const KNOWN_FAILURES: &[usize] = &[4];

fn main() {
    let mut failing = Vec::new();
    for c in suite::criteria() {
        let r = c.run();
        println!("{r}");
        if !r.passed {
            failing.push(r.id);
        }
    }
    println!("failing criteria: {failing:?}, recorded deviations: {KNOWN_FAILURES:?}");
    if failing != KNOWN_FAILURES {
        eprintln!("failing criteria differ from the recorded deviations");
        std::process::exit(1);
    }
}
