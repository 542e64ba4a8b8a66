macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(pauli_algebra, "pauli_algebra.rs");
example!(polar_space, "polar_space.rs");
example!(plane_taxonomy, "plane_taxonomy.rs");
example!(pentad_census, "pentad_census.rs");
example!(parity_proof, "parity_proof.rs");
example!(classification, "classification.rs");
example!(export_tables, "export_tables.rs");
