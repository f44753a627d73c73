//! First pages of the spectral sequences computing the homology of the
//! mapping spaces, assembled from configuration-space dimensions, plus the
//! Leray `d^M` consistency check relating based and free maps.
//!
//! The column `p = −N` of the page is built from the cohomology of the
//! `N`-point configuration space `B(X, N)`: cohomology in degree `j` lands
//! at `q = j + N(M − m + 1)`, with the coefficients of the mapping space
//! tensored by the orientation sheaf of `B(X, N)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::confighom::{
    orientation_sheaf, tensor, Catalog, CoeffSystem, ConfigSpaceSpec, DimensionProvider, Space,
    Statement, Variant,
};
use crate::error::{Error, Result};
use crate::mapspace::{Family, MapSpaceSpec};
use crate::series::{expand, tables::dm_progression, PoincareSeries, RationalExpr};

/// Wedge containing the nonzero cells of a first page.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSpec {
    pub w: u64,
    pub dim_x: u64,
    pub dim_c_lambda: u64,
}

impl WedgeSpec {
    pub fn new(w: u64, dim_x: u64, dim_c_lambda: u64) -> Result<Self> {
        if dim_x + dim_c_lambda + 2 > w {
            return Err(Error::OutOfRange(format!(
                "wedge needs dim X + dim CΛ <= W − 2, got {dim_x} + {dim_c_lambda} with W = {w}"
            )));
        }
        Ok(Self {
            w,
            dim_x,
            dim_c_lambda,
        })
    }

    /// `W = M + 1`, `dim X = m`, `dim CΛ = 0`.
    pub fn for_spec(spec: &MapSpaceSpec) -> Self {
        Self {
            w: spec.target_dim as u64 + 1,
            dim_x: spec.source_dim as u64,
            dim_c_lambda: 0,
        }
    }

    /// Lowest total degree `p + q` a cell in column `p` can have, per unit of `−p`.
    pub fn slope(&self) -> u64 {
        self.w - self.dim_x - self.dim_c_lambda - 1
    }

    pub fn contains(&self, p: i64, q: i64) -> bool {
        let slope = (self.w - self.dim_x - self.dim_c_lambda) as i64;
        q + p * slope >= 0 && q <= -p * self.w as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct E1Cell {
    pub p: i64,
    pub q: i64,
    pub dim: usize,
}

/// Where the dimensions of one column came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnOrigin {
    pub points: u32,
    pub config: ConfigSpaceSpec,
    pub statement: Statement,
    pub extension: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E1Page {
    pub spec: MapSpaceSpec,
    /// Nonzero cells sorted by `(p, q)`.
    pub cells: Vec<E1Cell>,
    pub wedge: WedgeSpec,
    pub p_min: i64,
    pub origin: Vec<ColumnOrigin>,
}

impl E1Page {
    /// A page holding only the cell `(0, 0)`.
    pub fn trivial(spec: MapSpaceSpec, p_min: i64) -> Self {
        Self {
            spec,
            cells: vec![E1Cell { p: 0, q: 0, dim: 1 }],
            wedge: WedgeSpec::for_spec(&spec),
            p_min,
            origin: Vec::new(),
        }
    }

    pub fn get(&self, p: i64, q: i64) -> usize {
        self.cells
            .iter()
            .find(|c| c.p == p && c.q == q)
            .map_or(0, |c| c.dim)
    }

    /// Adds `dim` to cell `(p, q)`.
    pub fn insert(&mut self, p: i64, q: i64, dim: usize) {
        if dim == 0 {
            return;
        }
        match self.cells.iter_mut().find(|c| c.p == p && c.q == q) {
            Some(c) => c.dim += dim,
            None => {
                self.cells.push(E1Cell { p, q, dim });
                self.cells.sort();
            }
        }
    }

    /// True if any column relies on an extension of a catalogued statement.
    pub fn uses_extension(&self) -> bool {
        self.origin.iter().any(|o| o.extension)
    }

    /// Lowest total degree a cell left out of the page could have.
    pub fn first_missing_degree(&self) -> i64 {
        (-self.p_min + 1) * self.wedge.slope() as i64
    }
}

/// `−⌈T / (M − m)⌉ − 1`: deep enough for [`total_poincare`] up to `T`.
pub fn default_p_min(spec: &MapSpaceSpec, truncation: usize) -> i64 {
    let gap = spec.codim_gap() as i64;
    -((truncation as i64 + gap - 1) / gap) - 1
}

/// The configuration space and cohomology coefficients feeding column `−N`.
pub fn column_config(spec: &MapSpaceSpec, n: u32) -> Result<ConfigSpaceSpec> {
    spec.validate()?;
    let m = spec.source_dim;
    let big_odd = spec.target_dim % 2 == 1;
    let sign_to_m = if big_odd { CoeffSystem::Sign } else { CoeffSystem::Const };
    let (space, coeff) = match spec.family {
        Family::General => {
            let space = if spec.based { Space::Euclid } else { Space::Sphere };
            (space, sign_to_m)
        }
        Family::Even | Family::Odd => {
            let space = if spec.based {
                Space::ProjSpacePunctured
            } else {
                Space::ProjSpace
            };
            let coeff = match (spec.family, big_odd) {
                (Family::Odd, true) => CoeffSystem::Sign,
                (Family::Odd, false) => CoeffSystem::ThetaTilde,
                (_, _) => sign_to_m,
            };
            (space, coeff)
        }
        Family::LensEquivariant => {
            let tau = spec.lens.expect("validated lens spec").tau();
            let space = match (tau, spec.based) {
                (1, false) => Space::Sphere,
                (1, true) => Space::Euclid,
                (t, false) => Space::Lens(t),
                (t, true) => Space::LensPunctured(t),
            };
            (space, CoeffSystem::Sign)
        }
    };
    let coeff = tensor(space, m, coeff, orientation_sheaf(space, m));
    ConfigSpaceSpec::new(space, m, n, false, coeff, Variant::Cohomology)
}

/// First page down to column `p_min` using the built-in catalogue.
pub fn build_e1(spec: &MapSpaceSpec, p_min: i64) -> Result<E1Page> {
    build_e1_with(&Catalog, spec, p_min)
}

pub fn build_e1_with<P: DimensionProvider + ?Sized>(
    provider: &P,
    spec: &MapSpaceSpec,
    p_min: i64,
) -> Result<E1Page> {
    spec.validate()?;
    if p_min >= 0 {
        return Err(Error::OutOfRange(format!("p_min must be negative, got {p_min}")));
    }
    let mut page = E1Page::trivial(*spec, p_min);
    let shift = (spec.target_dim - spec.source_dim + 1) as i64;
    for n in 1..=(-p_min) as u32 {
        let config = column_config(spec, n)?;
        let cited = provider.dims(&config)?;
        for (j, dim) in cited.dims.iter() {
            page.insert(-(n as i64), j + n as i64 * shift, dim);
        }
        page.origin.push(ColumnOrigin {
            points: n,
            config,
            statement: cited.statement,
            extension: cited.extension,
        });
    }
    Ok(page)
}

/// True iff every nonzero cell lies in the wedge.
pub fn wedge_support_check(page: &E1Page) -> bool {
    page.cells
        .iter()
        .filter(|c| c.dim > 0 && (c.p, c.q) != (0, 0))
        .all(|c| c.p < 0 && page.wedge.contains(c.p, c.q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneration {
    /// No differential can connect two nonzero cells.
    Lacunary,
    /// Degeneration is known by a cup-product argument although the
    /// bidegrees alone allow differentials.
    Registered,
    Unknown,
}

/// A parity cell of the tables for which `E_1 = E_∞` is known although
/// differentials are possible by bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegistryEntry {
    pub family: Family,
    pub m_odd: bool,
    pub target_odd: bool,
    /// `None` matches both basepoint conventions.
    pub based: Option<bool>,
    pub reason: &'static str,
}

const POWERS: &str = "the N-th cup power of the linking class with the discriminant takes the value N! \
     on a product of N spheres, so every column survives";

/// Cases whose degeneration rests on products rather than bidegrees.
pub const DEGENERATION_REGISTRY: &[RegistryEntry] = &[
    RegistryEntry {
        family: Family::Odd,
        m_odd: false,
        target_odd: false,
        based: None,
        reason: POWERS,
    },
    RegistryEntry {
        family: Family::General,
        m_odd: false,
        target_odd: false,
        based: None,
        reason: POWERS,
    },
    RegistryEntry {
        family: Family::Even,
        m_odd: true,
        target_odd: true,
        based: Some(false),
        reason: POWERS,
    },
    RegistryEntry {
        family: Family::Odd,
        m_odd: true,
        target_odd: true,
        based: Some(false),
        reason: POWERS,
    },
    RegistryEntry {
        family: Family::General,
        m_odd: true,
        target_odd: true,
        based: Some(false),
        reason: POWERS,
    },
    RegistryEntry {
        family: Family::LensEquivariant,
        m_odd: true,
        target_odd: true,
        based: Some(false),
        reason: POWERS,
    },
];

pub fn registry_entry(spec: &MapSpaceSpec) -> Option<&'static RegistryEntry> {
    DEGENERATION_REGISTRY.iter().find(|e| {
        e.family == spec.family
            && e.m_odd == (spec.source_dim % 2 == 1)
            && e.target_odd == (spec.target_dim % 2 == 1)
            && e.based.map_or(true, |b| b == spec.based)
    })
}

/// Pairs of nonzero cells that some `d_r : (p, q) → (p + r, q − r + 1)`,
/// `r ≥ 1`, could connect.
pub fn possible_differentials(page: &E1Page) -> Vec<(E1Cell, E1Cell)> {
    let by_total: BTreeMap<i64, Vec<E1Cell>> =
        page.cells.iter().filter(|c| c.dim > 0).fold(BTreeMap::new(), |mut acc, c| {
            acc.entry(c.p + c.q).or_default().push(*c);
            acc
        });
    let mut out = Vec::new();
    for (total, sources) in &by_total {
        if let Some(targets) = by_total.get(&(total + 1)) {
            for s in sources {
                for t in targets.iter().filter(|t| t.p > s.p) {
                    out.push((*s, *t));
                }
            }
        }
    }
    out
}

pub fn degeneration_status(page: &E1Page) -> Degeneration {
    if possible_differentials(page).is_empty() {
        Degeneration::Lacunary
    } else if registry_entry(&page.spec).is_some() {
        Degeneration::Registered
    } else {
        Degeneration::Unknown
    }
}

/// `Σ dim · t^{p+q}` truncated at `T`, provided the page is deep enough.
pub fn total_poincare(page: &E1Page, truncation: usize) -> Result<PoincareSeries> {
    let first_missing = page.first_missing_degree();
    if first_missing <= truncation as i64 {
        return Err(Error::InsufficientDepth {
            p_min: page.p_min,
            truncation,
            first_missing,
        });
    }
    let mut out = PoincareSeries::zero(truncation);
    for c in &page.cells {
        let d = c.p + c.q;
        if (0..=truncation as i64).contains(&d) {
            *out.coeff_mut(d as usize).unwrap() += c.dim as i64;
        }
    }
    Ok(out)
}

/// `q`-values of the cells `E_M^{0,q}` cancelled by `d^M`; each pair removes
/// `t^q + t^{q+1}` from the product of fiber and base series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum DmPairList {
    Empty,
    /// `q = first + s·step`, `s ≥ 0`.
    Progression { first: u64, step: u64 },
    Explicit { qs: Vec<u64> },
}

impl DmPairList {
    /// Every listed `q` up to and including `bound`.
    pub fn q_values(&self, bound: u64) -> Vec<u64> {
        match self {
            DmPairList::Empty => Vec::new(),
            DmPairList::Progression { first, step } => {
                (0..).map(|s| first + s * step).take_while(|&q| q <= bound).collect()
            }
            DmPairList::Explicit { qs } => {
                let set: BTreeSet<u64> = qs.iter().copied().filter(|&q| q <= bound).collect();
                set.into_iter().collect()
            }
        }
    }
}

/// The `d^M` pattern of the free mapping space `spec`.
pub fn leray_dm_pairs(spec: &MapSpaceSpec) -> Result<DmPairList> {
    spec.validate()?;
    if spec.based {
        return Err(Error::InvalidMapSpace(format!(
            "d^M pairs belong to the evaluation fibration of free maps, got {spec}"
        )));
    }
    Ok(match dm_progression(spec) {
        None => DmPairList::Empty,
        Some((first, step)) => DmPairList::Progression { first, step },
    })
}

/// Checks `fiber · (1 + t^M) − Σ (t^q + t^{q+1}) = total` up to `t^T`,
/// rejecting pair lists that would make a coefficient negative on the way.
pub fn leray_verify(
    fiber: &RationalExpr,
    target_dim: u32,
    pairs: &DmPairList,
    total: &RationalExpr,
    truncation: usize,
) -> Result<bool> {
    let base = RationalExpr::polynomial(crate::series::poly(&[(0, 1), (target_dim as usize, 1)]));
    let mut series = expand(&fiber.mul(&base), truncation)?;
    for q in pairs.q_values(truncation as u64) {
        for degree in [q as usize, q as usize + 1] {
            if let Some(c) = series.coeff_mut(degree) {
                *c -= 1;
                if *c < 0 {
                    return Err(Error::NegativeCoefficient { q, degree });
                }
            }
        }
    }
    Ok(series == expand(total, truncation)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{poly, table_closed_form};

    fn spec(f: Family, m: u32, big: u32, based: bool) -> MapSpaceSpec {
        MapSpaceSpec::new(f, m, big, based).unwrap()
    }

    fn cells(page: &E1Page) -> Vec<(i64, i64, usize)> {
        page.cells.iter().map(|c| (c.p, c.q, c.dim)).collect()
    }

    #[test]
    fn even_one_three_free() {
        let page = build_e1(&spec(Family::Even, 1, 3, false), -3).unwrap();
        let mut expected = vec![(0, 0, 1), (-1, 3, 1), (-1, 4, 1), (-2, 6, 1), (-2, 7, 1), (-3, 9, 1), (-3, 10, 1)];
        expected.sort();
        assert_eq!(cells(&page), expected);
        assert!(wedge_support_check(&page));
        assert_eq!(degeneration_status(&page), Degeneration::Lacunary);
        let series = total_poincare(&page, 5).unwrap();
        assert_eq!(series.coeffs(), &[1, 0, 1, 1, 1, 1]);
    }

    #[test]
    fn odd_two_three_based_is_a_point() {
        let page = build_e1(&spec(Family::Odd, 2, 3, true), -2).unwrap();
        assert_eq!(cells(&page), vec![(0, 0, 1)]);
    }

    #[test]
    fn lens_three_five() {
        let s = MapSpaceSpec::lens(3, 5, 3, 3, false).unwrap();
        let page = build_e1(&s, -2).unwrap();
        let mut expected = vec![(0, 0, 1), (-1, 3, 1), (-1, 6, 1), (-2, 6, 1), (-2, 9, 1)];
        expected.sort();
        assert_eq!(cells(&page), expected);
    }

    #[test]
    fn wedge_violations() {
        let s = spec(Family::Even, 1, 3, false);
        let mut page = E1Page::trivial(s, -1);
        page.insert(-1, 1, 1);
        assert!(!wedge_support_check(&page));
        let mut page = E1Page::trivial(s, -1);
        page.insert(-1, 5, 1);
        assert!(!wedge_support_check(&page));
        assert_eq!(degeneration_status(&E1Page::trivial(s, -1)), Degeneration::Lacunary);
    }

    #[test]
    fn odd_two_four_free_needs_products() {
        let page = build_e1(&spec(Family::Odd, 2, 4, false), -6).unwrap();
        assert_eq!(degeneration_status(&page), Degeneration::Registered);
    }

    #[test]
    fn depth_is_certified() {
        let s = spec(Family::Odd, 3, 4, true);
        let page = build_e1(&s, -2).unwrap();
        assert!(matches!(
            total_poincare(&page, 8),
            Err(Error::InsufficientDepth { p_min: -2, truncation: 8, first_missing: 3 })
        ));
        let page = build_e1(&s, default_p_min(&s, 8)).unwrap();
        let expected = expand(&table_closed_form(&s).unwrap(), 8).unwrap();
        assert_eq!(total_poincare(&page, 8).unwrap(), expected);
    }

    #[test]
    fn leray_examples() {
        let geo = |num: Vec<i64>| RationalExpr::new(num, poly(&[(0, 1), (2, -1)])).unwrap();
        let pairs = DmPairList::Progression { first: 3, step: 2 };
        assert!(leray_verify(&geo(poly(&[(0, 1), (3, 1)])), 4, &pairs, &geo(poly(&[(0, 1), (7, 1)])), 20).unwrap());
        assert!(leray_verify(&geo(vec![1]), 3, &DmPairList::Empty, &geo(poly(&[(0, 1), (3, 1)])), 20).unwrap());
        let one = RationalExpr::one();
        let total = RationalExpr::polynomial(poly(&[(0, 1), (3, 1)]));
        assert!(leray_verify(&one, 3, &DmPairList::Empty, &total, 10).unwrap());
        assert!(matches!(
            leray_verify(&one, 3, &DmPairList::Explicit { qs: vec![1] }, &total, 10),
            Err(Error::NegativeCoefficient { q: 1, degree: 1 })
        ));
    }

    #[test]
    fn dm_pairs_need_free_specs() {
        assert!(leray_dm_pairs(&spec(Family::Odd, 2, 4, true)).is_err());
        assert_eq!(
            leray_dm_pairs(&spec(Family::General, 3, 4, false)).unwrap(),
            DmPairList::Progression { first: 4, step: 4 }
        );
    }
}
