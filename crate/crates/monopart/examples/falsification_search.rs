//! Probing the open conjectures at oracle scale: random plus catalog
//! instances, with any hit re-verified through an independent backtracking
//! oracle before being reported.
//!
//! Run with: cargo run --example falsification_search

use monopart::harness::{falsify, run_experiment, Conjecture, ExperimentConfig, ModuleUnderTest};
use monopart::generators::GeneratorSpec;

fn main() {
    for conjecture in [Conjecture::Schconj, Conjecture::Saconj1] {
        let report = falsify(conjecture, 60, 2024, None).unwrap();
        println!(
            "{:?}: examined {} instances, counterexample: {}",
            report.conjecture,
            report.examined,
            match &report.counterexample {
                Some(ce) => format!("FOUND ({})", ce.details),
                None => "none".into(),
            }
        );
    }

    // The experiment runner behind the `experiment` subcommand.
    let config = ExperimentConfig {
        generator: GeneratorSpec::Colored { n: 9, p_edge: 0.8, p_red: 0.5 },
        trials: 200,
        seed: 1,
        module: ModuleUnderTest::Partition,
        cap: None,
        p: None,
    };
    let report = run_experiment(&config).unwrap();
    println!(
        "partition experiment: {}/{} trials satisfied the 2*alpha bound",
        report.satisfied, report.trials
    );
}
