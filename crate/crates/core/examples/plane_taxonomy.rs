// Sorting the 135 planes into negative, a, b and c classes.
//
// `cargo run --example plane_taxonomy`

use fano_pentad::{Geometry, PlaneClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new()?;
    for class in PlaneClass::ALL {
        let planes: Vec<_> = g.planes().iter().filter(|p| p.class == class).collect();
        let example = planes[0];
        let b_line: Vec<String> = g.line(example.b_line)?.points.iter().map(|o| o.to_string()).collect();
        let affine: Vec<String> = g.affine_part(example.id, example.b_line)?.iter().map(|o| o.to_string()).collect();
        let types: String =
            g.affine_part(example.id, example.b_line)?.iter().map(|o| o.observable_type().to_string()).collect();
        println!(
            "{:<8} {:>2} planes, {} negative lines each; plane {}: B-line {} / affine {} ({types})",
            class.label(),
            planes.len(),
            example.negative_lines,
            example.id,
            b_line.join(" "),
            affine.join(" "),
        );
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
