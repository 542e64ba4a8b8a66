// Enumerating Fano pentads and deriving a pentagram and a configuration.
//
// `cargo run --release --example pentad_census`

use fano_pentad::pentads::pentads_per_plane;
use fano_pentad::{par_enumerate_pentads, pentad_to_config, pentad_to_pentagram, wa_symbol, Geometry};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new()?;
    let pentads = par_enumerate_pentads(&g);
    let per_plane = pentads_per_plane(&pentads);
    println!(
        "{} pentads; each plane in {}..={} of them",
        pentads.len(),
        per_plane.iter().min().unwrap(),
        per_plane.iter().max().unwrap()
    );

    let p = &pentads[0];
    let ids: Vec<String> = p.planes().iter().map(|id| id.to_string()).collect();
    println!("pentad 0: planes {}", ids.join(" "));

    let gram = pentad_to_pentagram(p)?;
    for (edge, sign) in gram.edges().iter().zip(gram.edge_signs()) {
        let words: Vec<String> = edge.iter().map(|o| o.to_string()).collect();
        println!("  edge {}  {sign}", words.join(" "));
    }

    let config = pentad_to_config(&g, p)?;
    println!(
        "configuration: {} observables, {} contexts, {} negative, symbol {}",
        config.observables().len(),
        config.contexts().len(),
        config.negative_contexts(),
        wa_symbol(&config.to_context_set())
    );
    Ok(())
}

fn main() {
    run_example().unwrap();
}
