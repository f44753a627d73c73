//! Structural properties of the configuration-space catalogue.

use eqhom::confighom::{config_homology, CoeffSystem, ConfigSpaceSpec, Space, Variant};
use eqhom::series::{euler_char, poincare_dual_check};
use eqhom::GradedDims;

const SPACES: [Space; 8] = [
    Space::Euclid,
    Space::Sphere,
    Space::ProjSpace,
    Space::ProjSpacePunctured,
    Space::Lens(2),
    Space::Lens(3),
    Space::LensPunctured(2),
    Space::LensPunctured(5),
];

const VARIANTS: [Variant; 3] = [Variant::Homology, Variant::Cohomology, Variant::BorelMoore];

fn dims(space: Space, m: u32, n: u32, ordered: bool, coeff: CoeffSystem, variant: Variant) -> Option<GradedDims> {
    let spec = ConfigSpaceSpec::new(space, m, n, ordered, coeff, variant).ok()?;
    config_homology(&spec).ok()
}

fn unordered(space: Space, m: u32, n: u32, coeff: CoeffSystem, variant: Variant) -> GradedDims {
    let spec = ConfigSpaceSpec::new(space, m, n, false, coeff, variant).unwrap();
    config_homology(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

#[test]
fn degrees_lie_in_the_dimension_range() {
    let mut covered = 0;
    for space in SPACES {
        for m in 1..=7 {
            for n in 1..=8 {
                for ordered in [false, true] {
                    for coeff in CoeffSystem::ALL {
                        for variant in VARIANTS {
                            if let Some(h) = dims(space, m, n, ordered, coeff, variant) {
                                covered += 1;
                                let top = (m * n) as i64;
                                assert!(
                                    h.degrees().all(|d| (0..=top).contains(&d)),
                                    "{space} m={m} N={n} {coeff:?} {variant:?}: {h}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(covered > 1000, "only {covered} covered specs");
}

#[test]
fn homology_equals_cohomology() {
    for space in SPACES {
        for m in 1..=7 {
            for n in 1..=8 {
                for coeff in CoeffSystem::ALL {
                    let h = dims(space, m, n, false, coeff, Variant::Homology);
                    let c = dims(space, m, n, false, coeff, Variant::Cohomology);
                    assert_eq!(h, c, "{space} m={m} N={n} {coeff:?}");
                }
            }
        }
    }
}

#[test]
fn lens_euler_characteristics_vanish() {
    for r in [1, 2, 3, 4, 6] {
        for m in [1, 3, 5, 7] {
            for n in 1..=9 {
                let h = unordered(Space::Lens(r), m, n, CoeffSystem::Const, Variant::Cohomology);
                assert_eq!(euler_char(&h.to_laurent()), 0, "r={r} m={m} N={n}");
                if n % 2 == 1 {
                    let h = unordered(Space::Lens(r), m, n, CoeffSystem::Sign, Variant::Cohomology);
                    assert_eq!(euler_char(&h.to_laurent()), 0, "r={r} m={m} N={n} sign");
                    assert_eq!(h.total(), 2);
                }
            }
        }
    }
}

#[test]
fn projective_odd_twisted_pairs_are_dual() {
    for m in [1, 3, 5, 7] {
        for n in (2..=10).step_by(2) {
            let hom = unordered(Space::ProjSpace, m, n, CoeffSystem::ThetaTildeSign, Variant::Homology);
            let bm = unordered(Space::ProjSpace, m, n, CoeffSystem::ThetaTilde, Variant::BorelMoore);
            assert_eq!(euler_char(&hom.to_laurent()), 0);
            assert!(poincare_dual_check(&hom.to_laurent(), &bm.to_laurent(), (m * n) as u64), "m={m} N={n}");
            // t^{N(m-1)/2}(1 + t^m)
            let low = (n * (m - 1) / 2) as i64;
            assert_eq!(hom, GradedDims::ones([low, low + m as i64]));
        }
        for n in (1..=9).step_by(2) {
            let hom = unordered(Space::ProjSpace, m, n, CoeffSystem::ThetaTildeSign, Variant::Homology);
            assert!(hom.is_empty(), "m={m} N={n}: {hom}");
        }
    }
}

#[test]
fn vanishing_is_total_where_stated() {
    for m in [2, 4, 6] {
        for n in 2..=8 {
            for variant in VARIANTS {
                let e = unordered(Space::Euclid, m, n, CoeffSystem::Sign, variant);
                assert!(e.is_empty(), "R^{m}, N={n}: {e}");
            }
            for coeff in [CoeffSystem::ThetaTilde, CoeffSystem::ThetaTildeSign] {
                let h = unordered(Space::ProjSpace, m, n, coeff, Variant::Cohomology);
                assert!(h.is_empty(), "RP^{m}, N={n}, {coeff:?}: {h}");
            }
            for coeff in [CoeffSystem::Const, CoeffSystem::Sign] {
                let bm = unordered(Space::ProjSpace, m, n, coeff, Variant::BorelMoore);
                assert!(bm.is_empty(), "RP^{m}, N={n}, {coeff:?}: {bm}");
                // the punctured space with one point fewer, down to a single point
                let bm = unordered(Space::ProjSpacePunctured, m, n - 1, coeff, Variant::BorelMoore);
                assert!(bm.is_empty(), "RP^{m}_*, N={}, {coeff:?}: {bm}", n - 1);
            }
        }
    }
}

#[test]
fn spheres_are_lens_spaces_of_order_one() {
    for m in [1, 3, 5] {
        for n in 1..=6 {
            for coeff in [CoeffSystem::Const, CoeffSystem::Sign] {
                for variant in VARIANTS {
                    assert_eq!(
                        dims(Space::Sphere, m, n, false, coeff, variant),
                        dims(Space::Lens(1), m, n, false, coeff, variant),
                        "m={m} N={n} {coeff:?} {variant:?}"
                    );
                }
            }
        }
    }
}
