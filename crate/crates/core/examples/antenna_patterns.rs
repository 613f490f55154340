//! Gain of the four array patterns across the main lobe and first side lobes.

use mmwave_coverage::antenna::{ArrayGeometry, Pattern, PatternKind};

fn main() -> mmwave_coverage::Result<()> {
    let geom = ArrayGeometry::new(16, 0.25)?;
    let patterns = PatternKind::ALL
        .iter()
        .map(|&k| Pattern::new(k, geom))
        .collect::<mmwave_coverage::Result<Vec<_>>>()?;

    print!("{:>8}", "x");
    for k in PatternKind::ALL {
        print!("{:>12}", k.name());
    }
    println!();
    for i in 0..=24 {
        let x = 0.01 * f64::from(i) / 2.0;
        print!("{x:>8.4}");
        for p in &patterns {
            print!("{:>12.5}", p.gain(x));
        }
        println!();
    }

    // the average gain seen by a uniformly oriented interferer
    let n = 200_000;
    for p in &patterns {
        let mean = (0..n).map(|i| p.sample_gain(-1.0 + 2.0 * (i as f64 + 0.5) / n as f64)).sum::<f64>() / n as f64;
        println!("{:>8}: mean gain {mean:.5} (1/N_t = {:.5})", p.kind.name(), 1.0 / 16.0);
    }
    Ok(())
}
