macro_rules! example {
    ($test:ident, $file:literal) => {
        #[test]
        fn $test() {
            mod ex {
                include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
            }
            ex::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(groups_example, "groups.rs");
example!(commuting_graphs_example, "commuting_graphs.rs");
example!(recognize_example, "recognize.rs");
example!(forbidden_family_example, "forbidden_family.rs");
example!(verify_theorems_example, "verify_theorems.rs");
example!(cayley_import_example, "cayley_import.rs");
example!(enumerate_graphs_example, "enumerate_graphs.rs");
