//! Rational (co)homology of configuration spaces with rank-one local
//! coefficients of order two.
//!
//! Every answer comes from a catalogued [`Statement`]; combinations without
//! one are reported as [`Error::Uncovered`] rather than guessed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::series::LaurentPolynomial;

/// Local coefficient systems over `ℚ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoeffSystem {
    /// Constant coefficients.
    Const,
    /// `±ℚ`: monodromy is the sign of the permutation of the points.
    Sign,
    /// `Θ̃`: monodromy is the parity of the traces in `H_1(ℝP^m; ℤ/2)`.
    ThetaTilde,
    /// `Θ̃ ⊗ ±ℚ`.
    ThetaTildeSign,
    /// `Θ`: the ordered-space analogue of `Θ̃`.
    Theta,
    /// The orientation sheaf of the underlying manifold `X`, taken pointwise.
    Or,
}

impl CoeffSystem {
    pub const ALL: [CoeffSystem; 6] = [
        CoeffSystem::Const,
        CoeffSystem::Sign,
        CoeffSystem::ThetaTilde,
        CoeffSystem::ThetaTildeSign,
        CoeffSystem::Theta,
        CoeffSystem::Or,
    ];

    fn uses_theta(self) -> bool {
        matches!(
            self,
            CoeffSystem::ThetaTilde | CoeffSystem::ThetaTildeSign | CoeffSystem::Theta
        )
    }
}

impl fmt::Display for CoeffSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoeffSystem::Const => "Q",
            CoeffSystem::Sign => "±Q",
            CoeffSystem::ThetaTilde => "Θ̃",
            CoeffSystem::ThetaTildeSign => "Θ̃⊗±Q",
            CoeffSystem::Theta => "Θ",
            CoeffSystem::Or => "Or",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "r")]
pub enum Space {
    /// `ℝ^m`.
    Euclid,
    /// `S^m`.
    Sphere,
    /// `ℝP^m`.
    ProjSpace,
    /// `ℝP^m` minus a point.
    ProjSpacePunctured,
    /// The lens space `L^m_r = S^m / (ℤ/r)`, `m` odd.
    Lens(u32),
    /// `L^m_r` minus a point.
    LensPunctured(u32),
}

impl Space {
    /// True when the space is orientable for the given dimension.
    pub fn orientable(self, m: u32) -> bool {
        match self {
            Space::ProjSpace | Space::ProjSpacePunctured => m % 2 == 1,
            _ => true,
        }
    }

    fn is_projective(self) -> bool {
        matches!(self, Space::ProjSpace | Space::ProjSpacePunctured)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Euclid => f.write_str("R"),
            Space::Sphere => f.write_str("S"),
            Space::ProjSpace => f.write_str("RP"),
            Space::ProjSpacePunctured => f.write_str("RP*"),
            Space::Lens(r) => write!(f, "L_{r}"),
            Space::LensPunctured(r) => write!(f, "L_{r}*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Homology,
    Cohomology,
    /// Homology of locally finite chains.
    BorelMoore,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Homology => "H_*",
            Variant::Cohomology => "H^*",
            Variant::BorelMoore => "H^BM_*",
        })
    }
}

/// `B(X, N)` (unordered) or `I(X, N)` (ordered) with coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConfigSpaceSpec {
    pub space: Space,
    /// Dimension of `X`.
    pub m: u32,
    /// Number of points.
    pub n: u32,
    pub ordered: bool,
    pub coeff: CoeffSystem,
    pub variant: Variant,
}

impl ConfigSpaceSpec {
    /// Unordered configurations, cohomology.
    pub fn unordered(space: Space, m: u32, n: u32, coeff: CoeffSystem) -> Result<Self> {
        Self::new(space, m, n, false, coeff, Variant::Cohomology)
    }

    pub fn new(
        space: Space,
        m: u32,
        n: u32,
        ordered: bool,
        coeff: CoeffSystem,
        variant: Variant,
    ) -> Result<Self> {
        let spec = Self {
            space,
            m,
            n,
            ordered,
            coeff,
            variant,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        Self { variant, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfigSpace(msg));
        if self.m == 0 {
            return bad("dimension m must be at least 1".into());
        }
        if self.n == 0 {
            return bad("need at least one point".into());
        }
        if let Space::Lens(r) | Space::LensPunctured(r) = self.space {
            if r == 0 {
                return bad("lens order r must be at least 1".into());
            }
            if self.m % 2 == 0 {
                return bad(format!("lens spaces need odd m, got {}", self.m));
            }
        }
        if self.coeff == CoeffSystem::Theta && !self.ordered {
            return bad("Θ is only defined on ordered configuration spaces; use Θ̃".into());
        }
        if matches!(self.coeff, CoeffSystem::ThetaTilde | CoeffSystem::ThetaTildeSign) && self.ordered {
            return bad(format!("{} is only defined on unordered configuration spaces", self.coeff));
        }
        if self.coeff.uses_theta() && !self.space.is_projective() {
            return bad(format!("{} needs a projective space, not {}", self.coeff, self.space));
        }
        Ok(())
    }

    /// Real dimension of the configuration space.
    pub fn top_dim(&self) -> u64 {
        self.m as u64 * self.n as u64
    }
}

impl fmt::Display for ConfigSpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.ordered { "I" } else { "B" };
        write!(
            f,
            "{} {}({}^{}, {}; {})",
            self.variant, letter, self.space, self.m, self.n, self.coeff
        )
    }
}

/// The known results the catalogue draws on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// `B(X, 1) = X`.
    SinglePoint,
    /// Constant cohomology of `B(ℝ^m, N)`: `ℚ[0]`, plus `ℚ[m−1]` for `m` even.
    EuclideanConstant,
    /// Sign-twisted cohomology of `B(ℝ^m, N)`: one copy of `ℚ` in degree
    /// `(m−1)⌊N/2⌋` for `m` odd, zero for `m` even.
    EuclideanSign,
    /// `B(L^m_r, N)` has the rational cohomology of `S^m`.
    LensConstant,
    /// Sign-twisted cohomology of `B(L^m_r, N)`: zero for `N` even, and
    /// `ℚ` in degrees `(m−1)(N−1)/2` and `(m−1)(N−1)/2 + m` for `N` odd.
    LensSign,
    /// `B(S^m, N)`, `m` even: `ℚ[0] ⊕ ℚ[2m−1]` for `N ≥ 3`, `ℚ[0]` for `N = 2`.
    EvenSphereConstant,
    /// Sign-twisted `B(S^m, N)`, `m` even: `ℚ[m]` for `N = 2`, zero for `N ≥ 3`.
    EvenSphereSign,
    /// `B(ℝP^m, N)`, `m` even: `ℚ[0] ⊕ ℚ[2m−1]` for `N ≥ 2`.
    ProjectiveEvenConstant,
    /// `Θ̃`-twisted groups of `B(ℝP^m, N)` and `B(ℝP^m_⋆, N)`, `m` even,
    /// vanish for `N ≥ 2`.
    ProjectiveEvenTwisted,
    /// `Θ̃ ⊗ ±` homology of `B(ℝP^m, N)`, `m` odd: zero for `N` odd and
    /// `t^{N(m−1)/2}(1 + t^m)` for `N` even, Poincaré dual to the `Θ̃`
    /// Borel–Moore homology.
    ProjectiveOddTwisted,
    /// `Θ̃ ⊗ ±` homology of `B(ℝP^m_⋆, N)`, `m` odd: `ℚ` in degree `⌈N/2⌉(m−1)`.
    PuncturedProjectiveOddTwisted,
    /// Cohomology of `B(ℝP^m_⋆, N)` with constant or sign coefficients.
    PuncturedProjectiveUntwisted,
    /// Poincaré polynomial `∏_{a<N} (1 + a t^{m−1})` of `I(ℝ^m, N)`.
    OrderedEuclidean,
    /// `H_*(I(ℝP^m, N); Θ)` vanishes for `m`, `N` odd.
    OrderedProjectiveTheta,
    /// Constant Borel–Moore homology of `I(ℝP^m, N)` and `I(ℝP^m_⋆, N)`,
    /// `m` even, vanishes (for `N ≥ 2` on `ℝP^m`).
    OrderedProjectiveEvenBorelMoore,
    /// `H_*(I(ℝP^m_⋆, N); Θ)`, `m` odd, is `N!`-dimensional in even degrees.
    OrderedPuncturedTheta,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statement::SinglePoint => "single-point configurations: B(X,1) = X",
            Statement::EuclideanConstant => "constant cohomology of B(R^m,N)",
            Statement::EuclideanSign => "sign-twisted cohomology of B(R^m,N) is Q in degree (m-1)[N/2] or zero",
            Statement::LensConstant => "B(L^m_r,N) has the rational cohomology of S^m",
            Statement::LensSign => "sign-twisted cohomology of B(L^m_r,N) sits in degrees (m-1)(N-1)/2 and (m-1)(N-1)/2+m for odd N",
            Statement::EvenSphereConstant => "B(S^m,N) for even m is Q[0]+Q[2m-1] for N>=3",
            Statement::EvenSphereSign => "sign-twisted cohomology of B(S^m,N) for even m",
            Statement::ProjectiveEvenConstant => "B(RP^m,N) for even m is Q[0]+Q[2m-1] for N>=2",
            Statement::ProjectiveEvenTwisted => "twisted groups of B(RP^m,N) and B(RP^m_*,N) vanish for even m and N>=2",
            Statement::ProjectiveOddTwisted => "Theta~ x sign homology of B(RP^m,N), m odd: zero for odd N, t^{N(m-1)/2}(1+t^m) for even N",
            Statement::PuncturedProjectiveOddTwisted => "Theta~ x sign homology of B(RP^m_*,N), m odd: Q in degree ceil(N/2)(m-1)",
            Statement::PuncturedProjectiveUntwisted => "constant and sign-twisted cohomology of B(RP^m_*,N)",
            Statement::OrderedEuclidean => "Poincare polynomial prod (1 + a t^{m-1}) of I(R^m,N)",
            Statement::OrderedProjectiveTheta => "H_*(I(RP^m,N), Theta) vanishes for odd m and N",
            Statement::OrderedProjectiveEvenBorelMoore => "constant Borel-Moore homology of I(RP^m,N) vanishes for even m",
            Statement::OrderedPuncturedTheta => "H_*(I(RP^m_*,N), Theta) is N!-dimensional for odd m",
        })
    }
}

/// Dimensions together with their source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedDims {
    pub dims: GradedDims,
    pub statement: Statement,
    /// Set when the value extends a catalogued statement beyond its stated
    /// range (even spheres: `m = 2` with `N ≥ 3`, and sign coefficients).
    pub extension: bool,
}

impl CitedDims {
    fn new(dims: GradedDims, statement: Statement) -> Self {
        Self {
            dims,
            statement,
            extension: false,
        }
    }

    fn extended(mut self, flag: bool) -> Self {
        self.extension |= flag;
        self
    }
}

/// A rank-one coefficient system of order two written as `±^sign ⊗ Θ̃^theta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Twist {
    sign: bool,
    theta: bool,
}

impl Twist {
    fn times(self, other: Twist) -> Twist {
        Twist {
            sign: self.sign ^ other.sign,
            theta: self.theta ^ other.theta,
        }
    }

    fn coeff(self) -> CoeffSystem {
        match (self.sign, self.theta) {
            (false, false) => CoeffSystem::Const,
            (true, false) => CoeffSystem::Sign,
            (false, true) => CoeffSystem::ThetaTilde,
            (true, true) => CoeffSystem::ThetaTildeSign,
        }
    }
}

fn twist_of(space: Space, m: u32, coeff: CoeffSystem) -> Twist {
    let t = |sign, theta| Twist { sign, theta };
    match coeff {
        CoeffSystem::Const => t(false, false),
        CoeffSystem::Sign => t(true, false),
        CoeffSystem::ThetaTilde | CoeffSystem::Theta => t(false, true),
        CoeffSystem::ThetaTildeSign => t(true, true),
        CoeffSystem::Or => t(false, !space.orientable(m)),
    }
}

/// Orientation sheaf of `B(X, N)`: transposing two points of an
/// `m`-manifold reverses orientation iff `m` is odd, and on a
/// non-orientable projective space the local orientation is `Θ̃`.
fn orientation_twist(space: Space, m: u32) -> Twist {
    if space.orientable(m) {
        Twist {
            sign: m % 2 == 1,
            theta: false,
        }
    } else {
        Twist {
            sign: false,
            theta: true,
        }
    }
}

/// Orientation sheaf of `B(X, N)` as a coefficient system, for callers
/// assembling duality statements.
pub fn orientation_sheaf(space: Space, m: u32) -> CoeffSystem {
    orientation_twist(space, m).coeff()
}

/// Tensor product of two order-two systems on an unordered space.
pub fn tensor(space: Space, m: u32, a: CoeffSystem, b: CoeffSystem) -> CoeffSystem {
    twist_of(space, m, a).times(twist_of(space, m, b)).coeff()
}

/// Source of dimensions for the spectral-sequence assembly.
pub trait DimensionProvider: Sync {
    fn dims(&self, spec: &ConfigSpaceSpec) -> Result<CitedDims>;
}

/// The built-in catalogue.
#[derive(Clone, Copy, Debug, Default)]
pub struct Catalog;

impl DimensionProvider for Catalog {
    fn dims(&self, spec: &ConfigSpaceSpec) -> Result<CitedDims> {
        config_homology_cited(spec)
    }
}

/// Graded dimensions of the requested (co)homology.
pub fn config_homology(spec: &ConfigSpaceSpec) -> Result<GradedDims> {
    config_homology_cited(spec).map(|c| c.dims)
}

/// Like [`config_homology`], also naming the statement used.
pub fn config_homology_cited(spec: &ConfigSpaceSpec) -> Result<CitedDims> {
    spec.validate()?;
    if spec.ordered {
        return ordered(spec);
    }
    let twist = twist_of(spec.space, spec.m, spec.coeff);
    match spec.variant {
        // the systems are self-dual, so homology and cohomology agree over ℚ
        Variant::Homology | Variant::Cohomology => unordered_cohomology(spec, twist),
        Variant::BorelMoore => {
            let dual = twist.times(orientation_twist(spec.space, spec.m));
            let c = unordered_cohomology(spec, dual)?;
            Ok(CitedDims {
                dims: c.dims.mirrored(spec.top_dim() as i64),
                ..c
            })
        }
    }
}

fn uncovered(spec: &ConfigSpaceSpec, twist: Twist, nearest: Statement) -> Error {
    let mut case = spec.to_string();
    let effective = twist.coeff();
    if effective != spec.coeff {
        case.push_str(&format!(" (effective cohomology coefficients {effective})"));
    }
    Error::Uncovered { case, nearest }
}

fn unordered_cohomology(spec: &ConfigSpaceSpec, twist: Twist) -> Result<CitedDims> {
    let m = spec.m as i64;
    let n = spec.n as i64;
    // a single point has no permutations to be twisted by
    let twist = if n == 1 {
        Twist {
            sign: false,
            ..twist
        }
    } else {
        twist
    };
    let none = GradedDims::new;
    let odd_m = m % 2 == 1;
    let cited = CitedDims::new;
    use Statement as S;
    let out = match spec.space {
        Space::Euclid | Space::LensPunctured(_) => match (twist.sign, odd_m, n) {
            (false, true, _) | (false, false, 1) => cited(GradedDims::ones([0]), S::EuclideanConstant),
            (false, false, _) => cited(GradedDims::ones([0, m - 1]), S::EuclideanConstant),
            (true, true, _) => cited(GradedDims::ones([(m - 1) * (n / 2)]), S::EuclideanSign),
            (true, false, _) => cited(none(), S::EuclideanSign),
        },
        Space::Sphere | Space::Lens(_) => match (twist.sign, odd_m, n) {
            (false, true, _) => cited(GradedDims::ones([0, m]), S::LensConstant),
            (true, true, _) if n % 2 == 1 => {
                let base = (m - 1) * (n - 1) / 2;
                cited(GradedDims::ones([base, base + m]), S::LensSign)
            }
            (true, true, _) => cited(none(), S::LensSign),
            (false, false, 1) => cited(GradedDims::ones([0, m]), S::SinglePoint),
            (false, false, 2) => cited(GradedDims::ones([0]), S::EvenSphereConstant),
            (false, false, _) => cited(GradedDims::ones([0, 2 * m - 1]), S::EvenSphereConstant).extended(m == 2),
            (true, false, 2) => cited(GradedDims::ones([m]), S::EvenSphereSign).extended(true),
            (true, false, _) => cited(none(), S::EvenSphereSign).extended(true),
        },
        Space::ProjSpace => match (odd_m, twist.sign, twist.theta) {
            (true, false, false) => cited(GradedDims::ones([0, m]), S::LensConstant),
            (true, true, false) if n % 2 == 1 => {
                let base = (m - 1) * (n - 1) / 2;
                cited(GradedDims::ones([base, base + m]), S::LensSign)
            }
            (true, true, false) => cited(none(), S::LensSign),
            (true, true, true) if n % 2 == 0 => {
                let base = n / 2 * (m - 1);
                cited(GradedDims::ones([base, base + m]), S::ProjectiveOddTwisted)
            }
            (true, true, true) => cited(none(), S::ProjectiveOddTwisted),
            // Θ̃ alone on ℝP^m, m odd: only the one-point space ℝP^m is known
            (true, false, true) if n == 1 => cited(none(), S::SinglePoint),
            (true, false, true) => return Err(uncovered(spec, twist, S::ProjectiveOddTwisted)),
            (false, false, false) if n == 1 => cited(GradedDims::ones([0]), S::SinglePoint),
            (false, false, false) => cited(GradedDims::ones([0, 2 * m - 1]), S::ProjectiveEvenConstant),
            (false, _, true) if n == 1 => cited(GradedDims::ones([m]), S::SinglePoint),
            (false, _, true) => cited(none(), S::ProjectiveEvenTwisted),
            (false, true, false) => return Err(uncovered(spec, twist, S::ProjectiveEvenConstant)),
        },
        Space::ProjSpacePunctured => match (odd_m, twist.sign, twist.theta) {
            (true, false, false) => cited(GradedDims::ones([0]), S::PuncturedProjectiveUntwisted),
            (true, true, false) => cited(GradedDims::ones([(m - 1) * (n / 2)]), S::PuncturedProjectiveUntwisted),
            (true, true, true) => cited(GradedDims::ones([(n + 1) / 2 * (m - 1)]), S::PuncturedProjectiveOddTwisted),
            // ℝP^m_⋆ ≃ ℝP^{m−1}, whose Θ̃ cohomology is ℚ[m−1] for m − 1 even
            (true, false, true) if n == 1 => cited(GradedDims::ones([m - 1]), S::SinglePoint),
            (true, false, true) => return Err(uncovered(spec, twist, S::PuncturedProjectiveOddTwisted)),
            (false, false, false) => cited(GradedDims::ones([0, m - 1]), S::PuncturedProjectiveUntwisted),
            // for N = 1 this is the vanishing Θ̃ cohomology of ℝP^{m−1}, m − 1 odd
            (false, _, true) => cited(none(), S::ProjectiveEvenTwisted),
            (false, true, false) => {
                return Err(uncovered(spec, twist, S::PuncturedProjectiveUntwisted))
            }
        },
    };
    Ok(out)
}

fn ordered(spec: &ConfigSpaceSpec) -> Result<CitedDims> {
    let m = spec.m;
    let n = spec.n;
    let odd_m = m % 2 == 1;
    let dual = matches!(spec.variant, Variant::Homology | Variant::Cohomology);
    use Statement as S;
    let gap = |nearest| Err(Error::Uncovered {
        case: spec.to_string(),
        nearest,
    });
    match (spec.space, spec.coeff) {
        (Space::Euclid | Space::LensPunctured(_), CoeffSystem::Const) if dual => {
            let p = ordered_config_poincare(m, n);
            Ok(CitedDims::new(
                p.to_graded_dims().expect("product has positive coefficients"),
                S::OrderedEuclidean,
            ))
        }
        (Space::ProjSpace, CoeffSystem::Theta) if odd_m && n % 2 == 1 => {
            Ok(CitedDims::new(GradedDims::new(), S::OrderedProjectiveTheta))
        }
        (Space::ProjSpace, CoeffSystem::Const) if !odd_m && n >= 2 && !dual => {
            Ok(CitedDims::new(GradedDims::new(), S::OrderedProjectiveEvenBorelMoore))
        }
        (Space::ProjSpacePunctured, CoeffSystem::Const) if !odd_m && !dual => {
            Ok(CitedDims::new(GradedDims::new(), S::OrderedProjectiveEvenBorelMoore))
        }
        (Space::ProjSpacePunctured, CoeffSystem::Theta) if odd_m => gap(S::OrderedPuncturedTheta),
        (Space::ProjSpace | Space::ProjSpacePunctured, CoeffSystem::Theta) => {
            gap(S::OrderedProjectiveTheta)
        }
        (Space::ProjSpace | Space::ProjSpacePunctured, _) => gap(S::OrderedProjectiveEvenBorelMoore),
        _ => gap(S::OrderedEuclidean),
    }
}

/// `∏_{a=1}^{N−1} (1 + a t^{m−1})`.
pub fn ordered_config_poincare(m: u32, n: u32) -> LaurentPolynomial {
    let step = m as i64 - 1;
    (1..n as i64).fold(LaurentPolynomial::one(), |acc, a| {
        acc.mul(&LaurentPolynomial::from_terms([(0, 1), (step, a)]))
    })
}

/// `∏_{j=1}^{N} (1 + (2j − 1) t^{m−1})`, the Poincaré polynomial of the
/// ordered configurations in a twice-punctured odd sphere.
pub fn punctured_cover_poincare(m: u32, n: u32) -> Result<LaurentPolynomial> {
    if m % 2 == 0 {
        return Err(Error::Parity(format!("m must be odd, got {m}")));
    }
    let step = m as i64 - 1;
    Ok((1..=n as i64).fold(LaurentPolynomial::one(), |acc, j| {
        acc.mul(&LaurentPolynomial::from_terms([(0, 1), (step, 2 * j - 1)]))
    }))
}

/// What is known about `H_*(I(ℝP^m_⋆, N); Θ)` for odd `m`: the total
/// dimension, and that it lives in even degrees. The individual degrees
/// are not pinned down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalDimension {
    pub total: u64,
    pub even_degrees_only: bool,
}

pub fn ordered_punctured_theta_total(m: u32, n: u32) -> Result<TotalDimension> {
    if m % 2 == 0 {
        return Err(Error::Parity(format!("m must be odd, got {m}")));
    }
    let total = (1..=n as u64)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .ok_or(Error::Overflow("N!"))?;
    Ok(TotalDimension {
        total,
        even_degrees_only: true,
    })
}
