// The 47-type census, its comparison with the reference table, and the structural laws.
//
// `cargo run --release --example classification`

use fano_pentad::{classify_census, compare_with_table1, structural_laws, Pipeline};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let run = Pipeline::compute(None)?;
    let census = classify_census(&run.signatures)?;
    println!("{:>3}  {:>5}  {:<28}  pentagram", "t", "count", "(C-, O_A, O_B, O_C, F-, Fa, Fb, Fc)");
    for r in &census.records {
        let pg = &r.signature.pentagram;
        println!(
            "{:>3}  {:>5}  {:<28}  {} neg, A{} B{} C{}, {} A on negative edges",
            r.ordinal,
            r.multiplicity,
            r.signature.params.to_string(),
            pg.negative_edges,
            pg.o_a,
            pg.o_b,
            pg.o_c,
            pg.a_on_negative
        );
    }
    print!("{}", compare_with_table1(&census));
    print!("{}", structural_laws(&run.signatures));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
