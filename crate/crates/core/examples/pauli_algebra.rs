// Three-qubit Pauli words: parsing, coordinates, commutation and phases.
//
// `cargo run --example pauli_algebra`

use fano_pentad::{commutes, context_sign, multiply, symplectic_form, Observable, Phase};

fn phase(p: Phase) -> &'static str {
    ["1", "i", "-1", "-i"][p.exponent() as usize]
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let words = ["XYZ", "ZZI", "YXI", "IIX"];
    for w in words {
        let o: Observable = w.parse()?;
        println!("{o}  id {:>2}  coords {}  type {}", o.id(), o.coords_string(), o.observable_type());
    }

    let x: Observable = "XII".parse()?;
    let y: Observable = "YII".parse()?;
    let (p, rest) = multiply(x, y);
    println!("XII * YII = {} * {}", phase(p), Observable::from_id(rest)?);
    println!("sigma(XII, YII) = {}, commute: {}", symplectic_form(x, y) as u8, commutes(x, y));

    let triple: Vec<Observable> = ["XXI", "YYI", "ZZI"].iter().map(|w| w.parse()).collect::<Result<_, _>>()?;
    println!("XXI YYI ZZI multiply to {}", context_sign(&triple)?);
    let quad: Vec<Observable> = ["XII", "IXI", "IIX", "XXX"].iter().map(|w| w.parse()).collect::<Result<_, _>>()?;
    println!("XII IXI IIX XXX multiply to {}", context_sign(&quad)?);

    let commuting_pairs =
        Observable::all().flat_map(|a| Observable::all().filter(move |&b| a < b && commutes(a, b))).count();
    println!("{commuting_pairs} of 1953 pairs commute");
    Ok(())
}

fn main() {
    run_example().unwrap();
}
