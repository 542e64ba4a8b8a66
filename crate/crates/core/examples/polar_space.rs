// Points, lines and planes of the polar space and their signs.
//
// `cargo run --example polar_space`

use fano_pentad::{Geometry, Observable, Sign};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Geometry::new()?;
    println!("{} points, {} lines, {} planes", Observable::all().count(), g.lines().len(), g.planes().len());

    let p: Observable = "XYZ".parse()?;
    println!("{p} lies on {} lines and {} planes", g.lines_through(p).len(), g.planes_through(p).len());
    for &id in g.lines_through(p).iter().take(3) {
        let l = g.line(id)?;
        let words: Vec<String> = l.points.iter().map(|o| o.to_string()).collect();
        println!("  line {id}: {}  {}", words.join(" "), l.sign);
    }

    let negative = g.lines().iter().filter(|l| l.sign == Sign::Minus).count();
    let negative_planes = g.planes().iter().filter(|p| p.sign == Sign::Minus).count();
    println!("{negative} negative lines, {negative_planes} negative planes");

    let plane = &g.planes()[0];
    let words: Vec<String> = plane.points.iter().map(|o| o.to_string()).collect();
    println!("plane 0: {}  sign {}", words.join(" "), plane.sign);
    for &l in &plane.lines {
        println!("  {l}: {}", g.line(l)?.sign);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
