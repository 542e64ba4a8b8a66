// Checking context sets as parity proofs of contextuality.
//
// `cargo run --example parity_proof`

use fano_pentad::{analyze, wa_symbol, ContextSet};

fn report(name: &str, words: &[Vec<&str>]) -> Result<(), Box<dyn std::error::Error>> {
    let cs = ContextSet::from_words(words)?;
    let r = analyze(&cs);
    println!("{name}: {} ({} negative, symbol {})", r.verdict, r.negative_count, wa_symbol(&cs));
    for d in &r.defects {
        println!("  {d}");
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    report(
        "pentagram",
        &[
            vec!["XII", "IYI", "IIY", "XYY"],
            vec!["YII", "IXI", "IIY", "YXY"],
            vec!["YII", "IYI", "IIX", "YYX"],
            vec!["XII", "IXI", "IIX", "XXX"],
            vec!["XYY", "YXY", "YYX", "XXX"],
        ],
    )?;
    report("non-commuting", &[vec!["XII", "YII", "ZII"]])?;
    report("not closed", &[vec!["XII", "IXI", "IIX"]])?;
    report("even negatives", &[vec!["XXI", "YYI", "ZZI"], vec!["ZZI", "YYI", "XXI"]])?;
    Ok(())
}

fn main() {
    run_example().unwrap();
}
