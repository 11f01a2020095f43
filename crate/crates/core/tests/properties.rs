mod common;

use proptest::prelude::*;

use common::props::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn chordality_is_monotone(case in chordality_case()) {
        chordality_monotone(case)?;
    }

    #[test]
    fn bottleneck_is_monotone(case in bp_case()) {
        bp_monotone(case)?;
    }

    #[test]
    fn density_radius_is_antitone(case in density_case()) {
        density_antitone(case)?;
    }
}
