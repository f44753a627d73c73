//! Descriptors for the mapping spaces whose Poincaré series the crate
//! reproduces: all maps `S^m → S^M`, even maps, odd maps, and maps of odd
//! spheres equivariant under a cyclic group acting by roots of unity.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// All continuous maps (based version: the loop space `Ω^m S^M`).
    General,
    /// Maps with `f(-x) = f(x)`.
    Even,
    /// Maps with `f(-x) = -f(x)`.
    Odd,
    /// Maps with `f(ζx) = ζ^s f(x)` for `ζ = e^{2πi/r}`; `m`, `M` odd.
    LensEquivariant,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::General,
        Family::Even,
        Family::Odd,
        Family::LensEquivariant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::General => "general",
            Family::Even => "even",
            Family::Odd => "odd",
            Family::LensEquivariant => "lens",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// The cyclic action `x ↦ e^{2πi/r}x` on the source and `y ↦ e^{2πis/r}y`
/// on the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensAction {
    pub r: u32,
    pub s: u32,
}

impl LensAction {
    /// `gcd(r, s)`: the order of the subgroup acting trivially on the target,
    /// which fixes the lens space `L^m_τ` carrying the configurations.
    pub fn tau(self) -> u32 {
        self.r.gcd(&self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MapSpaceSpec {
    pub family: Family,
    /// `m`, dimension of the source sphere.
    pub source_dim: u32,
    /// `M`, dimension of the target sphere.
    pub target_dim: u32,
    /// Based maps (fixed point to fixed point) rather than free maps.
    pub based: bool,
    pub lens: Option<LensAction>,
}

impl MapSpaceSpec {
    /// A general, even or odd mapping space.
    pub fn new(family: Family, m: u32, target: u32, based: bool) -> Result<Self> {
        if family == Family::LensEquivariant {
            return Err(Error::InvalidMapSpace(
                "lens-equivariant maps need r and s; use MapSpaceSpec::lens".into(),
            ));
        }
        let spec = Self {
            family,
            source_dim: m,
            target_dim: target,
            based,
            lens: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn lens(m: u32, target: u32, r: u32, s: u32, based: bool) -> Result<Self> {
        let spec = Self {
            family: Family::LensEquivariant,
            source_dim: m,
            target_dim: target,
            based,
            lens: Some(LensAction { r, s }),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let (m, big) = (self.source_dim, self.target_dim);
        if m == 0 {
            return Err(Error::InvalidMapSpace("source dimension must be at least 1".into()));
        }
        if m >= big {
            return Err(Error::InvalidMapSpace(format!(
                "need m < M, got m = {m}, M = {big}"
            )));
        }
        match (self.family, self.lens) {
            (Family::LensEquivariant, Some(LensAction { r, s })) => {
                if m % 2 == 0 || big % 2 == 0 {
                    return Err(Error::InvalidMapSpace(format!(
                        "lens-equivariant maps need odd m and M, got m = {m}, M = {big}"
                    )));
                }
                if r == 0 || s == 0 || s > r {
                    return Err(Error::InvalidMapSpace(format!(
                        "need r >= 1 and 0 < s <= r, got r = {r}, s = {s}"
                    )));
                }
            }
            (Family::LensEquivariant, None) => {
                return Err(Error::InvalidMapSpace("lens-equivariant maps need r and s".into()))
            }
            (_, Some(_)) => {
                return Err(Error::InvalidMapSpace(format!(
                    "r and s only apply to lens-equivariant maps, not {}",
                    self.family
                )))
            }
            (_, None) => {}
        }
        Ok(())
    }

    pub fn source_parity(&self) -> Parity {
        Parity::of(self.source_dim)
    }

    pub fn target_parity(&self) -> Parity {
        Parity::of(self.target_dim)
    }

    /// Same maps without the basepoint condition.
    pub fn free(&self) -> Self {
        Self { based: false, ..*self }
    }

    pub fn as_based(&self) -> Self {
        Self { based: true, ..*self }
    }

    /// `M - m`.
    pub fn codim_gap(&self) -> u32 {
        self.target_dim - self.source_dim
    }

    /// Stable identifier used in reports, e.g. `odd/m=2/M=4/based`.
    pub fn case_id(&self) -> String {
        let mut id = format!(
            "{}/m={}/M={}",
            self.family, self.source_dim, self.target_dim
        );
        if let Some(LensAction { r, s }) = self.lens {
            id.push_str(&format!("/r={r}/s={s}"));
        }
        id.push_str(if self.based { "/based" } else { "/free" });
        id
    }
}

impl fmt::Display for MapSpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.case_id())
    }
}

/// Every valid general/even/odd spec with `1 <= m < M <= max_target`, both
/// basepoint conventions.
pub fn table_specs(max_target: u32) -> Vec<MapSpaceSpec> {
    let mut out = Vec::new();
    for family in [Family::Even, Family::Odd, Family::General] {
        for big in 2..=max_target {
            for m in 1..big {
                for based in [true, false] {
                    out.push(MapSpaceSpec::new(family, m, big, based).expect("valid by construction"));
                }
            }
        }
    }
    out
}

/// Every valid lens-equivariant spec for the given `r` values.
pub fn lens_specs(max_target: u32, rs: &[u32]) -> Vec<MapSpaceSpec> {
    let mut out = Vec::new();
    for &r in rs {
        for s in 1..=r {
            for big in (3..=max_target).step_by(2) {
                for m in (1..big).step_by(2) {
                    for based in [true, false] {
                        out.push(MapSpaceSpec::lens(m, big, r, s, based).expect("valid by construction"));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(MapSpaceSpec::new(Family::Even, 3, 2, false).is_err());
        assert!(MapSpaceSpec::new(Family::Even, 2, 2, false).is_err());
        assert!(MapSpaceSpec::new(Family::Even, 0, 2, false).is_err());
        assert!(MapSpaceSpec::lens(2, 5, 3, 1, false).is_err());
        assert!(MapSpaceSpec::lens(3, 5, 3, 4, false).is_err());
        assert!(MapSpaceSpec::lens(3, 5, 3, 0, false).is_err());
        assert!(MapSpaceSpec::new(Family::LensEquivariant, 3, 5, false).is_err());
        assert!(MapSpaceSpec::lens(3, 5, 3, 3, true).is_ok());
    }

    #[test]
    fn tau_is_gcd() {
        assert_eq!(LensAction { r: 6, s: 4 }.tau(), 2);
        assert_eq!(LensAction { r: 3, s: 3 }.tau(), 3);
        assert_eq!(LensAction { r: 2, s: 1 }.tau(), 1);
    }

    #[test]
    fn enumerations() {
        // 36 (m, M) pairs with M <= 9, three families, two basepoint flags
        assert_eq!(table_specs(9).len(), 36 * 3 * 2);
        assert!(lens_specs(9, &[2, 3, 4, 6]).iter().all(|s| s.validate().is_ok()));
    }
}
