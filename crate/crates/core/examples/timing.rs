//! Per-check wall time of the symbolic suite: `timing [N] [name-filter]`.

use qexpand_core::identities::{registry, CheckInput};
use std::time::Instant;

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(6);
    let filter = std::env::args().nth(2);
    for c in registry() {
        if let Some(f) = &filter {
            if !c.name.contains(f.as_str()) {
                continue;
            }
        }
        let t = Instant::now();
        let r = c.run(&CheckInput { order: n, seed: 7 });
        println!("{:30} {:6} {:?}", c.name, r.passed, t.elapsed());
    }
}
