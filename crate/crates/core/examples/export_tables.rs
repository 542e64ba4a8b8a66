// Writing the point, line and plane tables as CSV and JSON.
//
// `cargo run --example export_tables [DIR]`

use std::fs::File;
use std::path::{Path, PathBuf};

use fano_pentad::io::{write_table, Format, TableKind};
use fano_pentad::Geometry;

fn export(dir: &Path) -> Result<(), Box<dyn std::error::Error>> {
    std::fs::create_dir_all(dir)?;
    let g = Geometry::new()?;
    for kind in [TableKind::Points, TableKind::Lines, TableKind::Planes] {
        for (format, ext) in [(Format::Csv, "csv"), (Format::Json, "json")] {
            let path = dir.join(format!("{kind:?}.{ext}").to_lowercase());
            let rows = write_table(&g, &[], kind, format, true, File::create(&path)?)?;
            println!("{rows:>4} rows -> {}", path.display());
        }
    }
    let mut head = Vec::new();
    write_table(&g, &[], TableKind::Planes, Format::Csv, false, &mut head)?;
    for line in String::from_utf8(head)?.lines().take(4) {
        println!("{line}");
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    export(&std::env::temp_dir().join("fano-pentad"))
}

fn main() {
    match std::env::args().nth(1) {
        Some(dir) => export(&PathBuf::from(dir)).unwrap(),
        None => run_example().unwrap(),
    }
}
