//! Every example's `run_example` completes.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().expect(stringify!($name));
        }
    };
}

example!(lattice_tools, "../examples/lattice_tools.rs");
example!(face_lattice, "../examples/face_lattice.rs");
example!(local_cohomology, "../examples/local_cohomology.rs");
example!(exceptional_scan, "../examples/exceptional_scan.rs");
example!(rank_jumps, "../examples/rank_jumps.rs");
example!(sectors_and_strata, "../examples/sectors_and_strata.rs");
example!(analysis_report, "../examples/analysis_report.rs");
