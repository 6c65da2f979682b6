macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " runs"));
        }
    };
}

example!(prime_spectrum, "prime_spectrum.rs");
example!(localization, "localization.rs");
example!(ultra_rings, "ultra_rings.rs");
example!(power_set_spectrum, "power_set_spectrum.rs");
example!(discrete_stone_cech, "discrete_stone_cech.rs");
example!(alexandroff, "alexandroff.rs");
example!(compactifications, "compactifications.rs");
example!(finite_spaces, "finite_spaces.rs");
example!(run_suites, "run_suites.rs");
