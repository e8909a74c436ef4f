//! Box scans for exceptional degrees and the slab components fitted to
//! them, in parallel over a worker pool.
//!
//! ```bash
//! cargo run --release --example exceptional_scan
//! ```

use rankjump::analysis::{Analyzer, DegreeBox};
use rankjump::fixtures;

pub fn run_example() -> rankjump::Result<()> {
    for (name, rows, lo, hi) in [
        ("F1", fixtures::f1(), -3, 3),
        ("F2", fixtures::f2(), -5, 5),
        ("F3", fixtures::f3(), -6, 10),
    ] {
        let a = Analyzer::from_rows(&rows)?;
        let region = DegreeBox::cube(2, lo, hi, 2)?;
        let e = a.scan_exceptional(&region)?;
        let slabs = a.infer_slabs(&region, &e)?;
        println!("{name} on {region}: {} exceptional {e:?}", e.len());
        for s in &slabs {
            println!("  component {:?} + Q{:?}", s.base, s.face_labels);
        }
    }

    // a plane triangle with holes: five columns in dimension 3
    let a = Analyzer::from_rows(&[vec![1, 1, 1, 1, 1, 1], vec![1, 2, 0, 1, 0, 0], vec![1, 0, 4, 0, 0, 1]])?;
    let region = DegreeBox::cube(3, -3, 3, 1)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(2).build().expect("pool");
    let e = pool.install(|| a.scan_exceptional(&region))?;
    println!("triangle on {region}: exceptional {e:?}");
    Ok(())
}

fn main() -> rankjump::Result<()> {
    run_example()
}
