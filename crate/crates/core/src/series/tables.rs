//! Closed-form Poincaré series of the mapping spaces, one formula per
//! (family, parity of m, parity of M, basepoint) cell.

use super::{poly, RationalExpr};
use crate::error::Result;
use crate::mapspace::{Family, MapSpaceSpec, Parity};

/// Rational closed form of the Poincaré series of `spec`.
pub fn table_closed_form(spec: &MapSpaceSpec) -> Result<RationalExpr> {
    spec.validate()?;
    let m = spec.source_dim as usize;
    let big = spec.target_dim as usize;
    let gap = big - m;
    // Period of the rows where m is odd and M is even.
    let long = 2 * big - m - 1;
    let one_plus = |e: usize| poly(&[(0, 1), (e, 1)]);
    let over = |num: Vec<i64>, period: usize| {
        RationalExpr::new(num, poly(&[(0, 1), (period, -1)])).expect("denominator starts with 1")
    };
    let based = spec.based;
    use Parity::{Even as E, Odd as O};
    let expr = match (spec.family, spec.source_parity(), spec.target_parity()) {
        (Family::LensEquivariant, _, _) | (_, O, O) => {
            if based {
                over(vec![1], gap)
            } else {
                over(one_plus(big), gap)
            }
        }
        (Family::Even, E, _) | (Family::Odd, E, O) => {
            if based {
                RationalExpr::one()
            } else {
                RationalExpr::polynomial(one_plus(big))
            }
        }
        (Family::Even | Family::General, O, E) => {
            if based {
                over(one_plus(gap), long)
            } else {
                over(poly(&[(0, 1), (long, -1), (gap, 1), (big, 1)]), long)
            }
        }
        (Family::Odd, E, E) => {
            if based {
                over(one_plus(big - 1), gap)
            } else {
                over(one_plus(2 * big - 1), gap)
            }
        }
        (Family::Odd, O, E) => {
            if based {
                over(one_plus(big - 1), long)
            } else {
                over(one_plus(2 * big - 1), long)
            }
        }
        (Family::General, E, E) => {
            if based {
                over(one_plus(2 * big - m - 1), gap)
            } else {
                // t^M + (1 + t^{3M-m-1})/(1 - t^{M-m})
                over(
                    poly(&[(0, 1), (big, 1), (2 * big - m, -1), (3 * big - m - 1, 1)]),
                    gap,
                )
            }
        }
        (Family::General, E, O) => {
            let base = RationalExpr::polynomial(one_plus(gap));
            if based {
                base
            } else {
                base.mul(&RationalExpr::polynomial(one_plus(big)))
            }
        }
    };
    Ok(expr)
}

/// The `q`-values of the cells `E_M^{0,q}` hit by `d^M` in the Leray
/// spectral sequence of the evaluation fibration, as `(first, step)` of an
/// arithmetic progression; `None` when `d^M` vanishes.
pub(crate) fn dm_progression(spec: &MapSpaceSpec) -> Option<(u64, u64)> {
    let m = spec.source_dim as u64;
    let big = spec.target_dim as u64;
    let gap = big - m;
    let long = 2 * big - m - 1;
    use Parity::{Even as E, Odd as O};
    match (spec.family, spec.source_parity(), spec.target_parity()) {
        (Family::LensEquivariant, _, _) | (_, O, O) => None,
        (Family::Even | Family::General, O, E) => Some((long, long)),
        (Family::Odd, E, E) => Some((big - 1, gap)),
        (Family::Odd, O, E) => Some((big - 1, long)),
        (Family::General, E, E) => Some((2 * big - m - 1, gap)),
        (Family::Even, E, _) | (Family::Odd, E, O) | (Family::General, E, O) => None,
    }
}
