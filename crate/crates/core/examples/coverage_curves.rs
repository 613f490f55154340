//! Building coverage curves programmatically and writing them as CSV and JSON,
//! the same output the `mmcov` binary produces.

use mmwave_coverage::cli::{emit_curves, parse_csv, preset, sweep_curves, with_sweep_value, Format, McSettings, Method};
use mmwave_coverage::montecarlo::Metric;

fn main() -> mmwave_coverage::Result<()> {
    let p = preset("fig4b")?;
    println!("{}: {}", p.name, p.caption);
    let xs: Vec<f64> = (-10..=30).step_by(10).map(f64::from).collect();
    let mc = McSettings {
        trials: 5_000,
        seed: 1,
        nlos: false,
        metric: Metric::Sinr,
    };
    let base = p.base;
    let curves = sweep_curves(
        "tau_db",
        &xs,
        |x| with_sweep_value(&base, "tau_db", x),
        &[Method::AnalyticProp2, Method::AnalyticCor2, Method::McActual],
        &mc,
        serde_json::json!({ "example": true }),
    )?;

    let mut csv = Vec::new();
    emit_curves(&curves, Format::Csv, &mut csv)?;
    let text = String::from_utf8(csv).expect("CSV is UTF-8");
    print!("{text}");
    println!("parsed back {} curves", parse_csv(&text)?.len());

    emit_curves(&curves[..1], Format::Json, &mut std::io::stdout())?;
    Ok(())
}
