macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " failed"));
        }
    };
}

example!(short_rainbow_cycle, "short_rainbow_cycle.rs", short_rainbow_cycle_runs);
example!(rainbow_girth, "rainbow_girth.rs", rainbow_girth_runs);
example!(digraph_reduction, "digraph_reduction.rs", digraph_reduction_runs);
example!(extremal_colouring, "extremal_colouring.rs", extremal_colouring_runs);
example!(excess_subgraphs, "excess_subgraphs.rs", excess_subgraphs_runs);
example!(hunt, "hunt.rs", hunt_runs);
example!(lemma_report, "lemma_report.rs", lemma_report_runs);
example!(psi_and_defect, "psi_and_defect.rs", psi_and_defect_runs);
example!(file_formats, "file_formats.rs", file_formats_runs);
