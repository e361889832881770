use bcwitt::verify::{run_criterion, CRITERIA};

const SEED: u64 = 7;

fn main() {
    let mut failed = Vec::new();
    for &(id, _) in CRITERIA.iter() {
        let report = run_criterion(id, SEED);
        println!("{report}");
        if !report.passed {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
