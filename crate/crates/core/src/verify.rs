//! The cross-checks that tie the crate's independent routes together,
//! collected into a machine-readable report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::confighom::{CoeffSystem, ConfigSpaceSpec, DimensionProvider, Space, Variant};
use crate::mapspace::{lens_specs, table_specs, Family, MapSpaceSpec};
use crate::partitions::{all_partitions, order_complex_pair, partition_weight, relative_chain_complex};
use crate::linalg::homology_dims;
use crate::resolution::{
    combi_count, horizontal_euler_closed, horizontal_euler_sum, permutation_oracle,
    phi_poincare_closed, phi_poincare_from_euler, place_choice_counts,
};
use crate::series::{euler_char, expand, poincare_dual_check, table_closed_form, LaurentPolynomial};
use crate::specseq::{
    build_e1_with, default_p_min, degeneration_status, leray_dm_pairs, leray_verify,
    total_poincare, wedge_support_check, Degeneration,
};

/// One checked case: the values each route produced and whether they agree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case_id: String,
    pub route_values: BTreeMap<String, Value>,
    pub verdict: bool,
}

impl CaseResult {
    fn new(case_id: impl Into<String>, verdict: bool, routes: impl IntoIterator<Item = (&'static str, Value)>) -> Self {
        Self {
            case_id: case_id.into(),
            route_values: routes.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            verdict,
        }
    }

    fn error(case_id: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::new(case_id, false, [("error", Value::String(err.to_string()))])
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<CaseResult>,
    pub summary: Summary,
}

impl ReportDocument {
    /// Sorts results by case id and fills in the summary.
    pub fn new(command: impl Into<String>, params: BTreeMap<String, Value>, mut results: Vec<CaseResult>) -> Self {
        results.sort_by(|a, b| a.case_id.cmp(&b.case_id));
        let passed = results.iter().filter(|r| r.verdict).count();
        Self {
            command: command.into(),
            params,
            summary: Summary {
                checked: results.len(),
                passed,
                failed: results.len() - passed,
            },
            results,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.results.iter().filter(|r| !r.verdict)
    }
}

/// The eight groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Criterion {
    Tables,
    Lens,
    HorizontalEuler,
    FiberPolynomial,
    PartitionHomology,
    DualityEuler,
    Leray,
    Structure,
}

impl Criterion {
    pub const ALL: [Criterion; 8] = [
        Criterion::Tables,
        Criterion::Lens,
        Criterion::HorizontalEuler,
        Criterion::FiberPolynomial,
        Criterion::PartitionHomology,
        Criterion::DualityEuler,
        Criterion::Leray,
        Criterion::Structure,
    ];

    /// 1-based position, used as the case-id prefix `cN/`.
    pub fn number(self) -> usize {
        Criterion::ALL.iter().position(|&c| c == self).unwrap() + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Criterion::Tables => "table closed forms match first-page totals",
            Criterion::Lens => "lens-equivariant closed forms match first-page totals",
            Criterion::HorizontalEuler => "horizontal Euler characteristics agree across three routes",
            Criterion::FiberPolynomial => "fiber Poincare polynomial agrees across two routes",
            Criterion::PartitionHomology => "relative partition homology has the weight as top rank",
            Criterion::DualityEuler => "Poincare duality and vanishing Euler characteristics",
            Criterion::Leray => "Leray d^M patterns reproduce the free series",
            Criterion::Structure => "wedge support and degeneration of every page",
        }
    }

    fn prefix(self) -> String {
        format!("c{}", self.number())
    }
}

fn series_json(s: &crate::series::PoincareSeries) -> Value {
    json!(s.coeffs())
}

fn dual_route(provider: &(impl DimensionProvider + ?Sized), spec: &MapSpaceSpec, truncation: usize, id: String) -> CaseResult {
    let page = match build_e1_with(provider, spec, default_p_min(spec, truncation)) {
        Ok(p) => p,
        Err(e) => return CaseResult::error(id, e),
    };
    let e1 = match total_poincare(&page, truncation) {
        Ok(s) => s,
        Err(e) => return CaseResult::error(id, e),
    };
    let closed_form = table_closed_form(spec).expect("validated spec");
    let closed = expand(&closed_form, truncation).expect("denominator starts with 1");
    CaseResult::new(
        id,
        e1 == closed,
        [
            ("closed_form", Value::String(closed_form.to_string())),
            ("closed_series", series_json(&closed)),
            ("e1_series", series_json(&e1)),
        ],
    )
}

/// Table cells: every family, parity and basepoint flag with `M ≤ 9`.
pub fn check_tables(provider: &(impl DimensionProvider + ?Sized), truncation: usize) -> Vec<CaseResult> {
    let c = Criterion::Tables.prefix();
    table_specs(9)
        .iter()
        .map(|spec| dual_route(provider, spec, truncation, format!("{c}/{}", spec.case_id())))
        .collect()
}

/// Lens-equivariant maps for `r ∈ {2, 3, 4, 6}`, plus the agreement of
/// order-two lens maps with even and odd maps.
pub fn check_lens(provider: &(impl DimensionProvider + ?Sized), truncation: usize) -> Vec<CaseResult> {
    let c = Criterion::Lens.prefix();
    let mut out: Vec<CaseResult> = lens_specs(9, &[2, 3, 4, 6])
        .iter()
        .map(|spec| dual_route(provider, spec, truncation, format!("{c}/{}", spec.case_id())))
        .collect();
    for big in (3..=9u32).step_by(2) {
        for m in (1..big).step_by(2) {
            for based in [false, true] {
                for (s, family) in [(2, Family::Even), (1, Family::Odd)] {
                    let lens = MapSpaceSpec::lens(m, big, 2, s, based).expect("odd m < M");
                    let other = MapSpaceSpec::new(family, m, big, based).expect("m < M");
                    let id = format!("{c}/order-two/{}~{}", lens.case_id(), family);
                    let series = |spec: &MapSpaceSpec| {
                        build_e1_with(provider, spec, default_p_min(spec, truncation))
                            .and_then(|p| total_poincare(&p, truncation))
                    };
                    out.push(match (series(&lens), series(&other)) {
                        (Ok(a), Ok(b)) => CaseResult::new(
                            id,
                            a == b,
                            [("lens", series_json(&a)), (family.name(), series_json(&b))],
                        ),
                        (Err(e), _) | (_, Err(e)) => CaseResult::error(id, e),
                    });
                }
            }
        }
    }
    out
}

/// Horizontal Euler characteristics for even `N ≤ 10`, with the
/// permutation count for `N ≤ 8` and the per-place counts.
pub fn check_horizontal_euler() -> Vec<CaseResult> {
    let c = Criterion::HorizontalEuler.prefix();
    let mut out = Vec::new();
    for n in (2..=10usize).step_by(2) {
        for s in 0..n / 2 {
            let id = format!("{c}/N={n:02}/s={s}");
            let sum = horizontal_euler_sum(n, s);
            let closed = horizontal_euler_closed(n, s);
            let oracle = (n <= 8).then(|| permutation_oracle(n, s));
            out.push(match (sum, closed, oracle.transpose()) {
                (Ok(a), Ok(b), Ok(o)) => {
                    let mut routes = vec![("sum_route", json!(a)), ("closed_route", json!(b))];
                    if let Some(o) = o {
                        routes.push(("oracle_route", json!(o)));
                    }
                    CaseResult::new(id, a == b && o.map_or(true, |o| o == b), routes)
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => CaseResult::error(id, e),
            });
        }
        if n <= 8 {
            match place_choice_counts(n) {
                Ok(counts) => {
                    for (places, count) in counts {
                        let id = format!("{c}/N={n:02}/places={places:?}");
                        let closed = combi_count(n, &places).expect("odd places");
                        out.push(CaseResult::new(
                            id,
                            closed == count,
                            [("enumerated", json!(count)), ("closed", json!(closed))],
                        ));
                    }
                }
                Err(e) => out.push(CaseResult::error(format!("{c}/N={n:02}/places"), e)),
            }
        }
    }
    out
}

/// The fiber polynomial for even `N ≤ 8` and `m ∈ {1, 3, 5}`.
pub fn check_fiber_polynomial() -> Vec<CaseResult> {
    let c = Criterion::FiberPolynomial.prefix();
    let mut out = Vec::new();
    for n in (2..=8usize).step_by(2) {
        for m in [1usize, 3, 5] {
            let id = format!("{c}/N={n}/m={m}");
            let factorial: i64 = (1..n as i64).product();
            out.push(match (phi_poincare_closed(n, m), phi_poincare_from_euler(n, m)) {
                (Ok(a), Ok(b)) => CaseResult::new(
                    id,
                    a == b && a.eval_one() == factorial,
                    [
                        ("closed", Value::String(a.to_string())),
                        ("from_euler", Value::String(b.to_string())),
                        ("coefficient_sum", json!(a.eval_one())),
                        ("expected_sum", json!(factorial)),
                    ],
                ),
                (Err(e), _) | (_, Err(e)) => CaseResult::error(id, e),
            });
        }
    }
    out
}

/// Every partition with even blocks of a set of size at most 6.
pub fn check_partition_homology() -> Vec<CaseResult> {
    let c = Criterion::PartitionHomology.prefix();
    let mut out = Vec::new();
    for n in (2..=6usize).step_by(2) {
        for a in all_partitions(n).into_iter().filter(|p| p.blocks().iter().all(|b| b.len() % 2 == 0)) {
            let id = format!("{c}/{a}");
            let top = (n - a.num_blocks() - 1) as i64;
            let weight = partition_weight(&a) as usize;
            let result = order_complex_pair(&a)
                .and_then(|pair| relative_chain_complex(&pair))
                .and_then(|cx| {
                    let square_ok = cx.check_boundary_square().is_ok();
                    homology_dims(&cx).map(|h| (h, square_ok))
                });
            out.push(match result {
                Ok((h, square_ok)) => CaseResult::new(
                    id,
                    square_ok && h.concentrated_degree() == Some(top) && h.get(top) == weight,
                    [
                        ("homology", json!(h)),
                        ("top_degree", json!(top)),
                        ("weight", json!(weight)),
                        ("boundary_square_zero", json!(square_ok)),
                    ],
                ),
                Err(e) => CaseResult::error(id, e),
            });
        }
    }
    out
}

/// Duality between the twisted homology and Borel–Moore homology of
/// `B(ℝP^m, N)`, and vanishing Euler characteristics.
pub fn check_duality_and_euler(provider: &(impl DimensionProvider + ?Sized)) -> Vec<CaseResult> {
    let c = Criterion::DualityEuler.prefix();
    let mut out = Vec::new();
    let dims = |spec: crate::error::Result<ConfigSpaceSpec>| spec.and_then(|s| provider.dims(&s)).map(|d| d.dims);
    for m in [1u32, 3, 5, 7] {
        for n in (2..=10u32).step_by(2) {
            let id = format!("{c}/duality/m={m}/N={n:02}");
            let hom = dims(ConfigSpaceSpec::new(
                Space::ProjSpace,
                m,
                n,
                false,
                CoeffSystem::ThetaTildeSign,
                Variant::Homology,
            ));
            let bm = dims(ConfigSpaceSpec::new(
                Space::ProjSpace,
                m,
                n,
                false,
                CoeffSystem::ThetaTilde,
                Variant::BorelMoore,
            ));
            let (mi, ni) = (m as i64, n as i64);
            // t^{N(m−1)/2}(1 + t^m) and t^{N(m+1)/2}(1 + t^{−m})
            let stated_hom = LaurentPolynomial::from_terms([(ni / 2 * (mi - 1), 1), (ni / 2 * (mi - 1) + mi, 1)]);
            let stated_bm = LaurentPolynomial::from_terms([(ni / 2 * (mi + 1), 1), (ni / 2 * (mi + 1) - mi, 1)]);
            out.push(match (hom, bm) {
                (Ok(h), Ok(b)) => {
                    let (h, b) = (h.to_laurent(), b.to_laurent());
                    let dual = poincare_dual_check(&h, &b, m as u64 * n as u64);
                    let euler = euler_char(&h);
                    CaseResult::new(
                        id,
                        dual && h == stated_hom && b == stated_bm && euler == 0,
                        [
                            ("homology", Value::String(h.to_string())),
                            ("borel_moore", Value::String(b.to_string())),
                            ("stated_homology", Value::String(stated_hom.to_string())),
                            ("stated_borel_moore", Value::String(stated_bm.to_string())),
                            ("dual", json!(dual)),
                            ("euler", json!(euler)),
                        ],
                    )
                }
                (Err(e), _) | (_, Err(e)) => CaseResult::error(id, e),
            });
        }
    }
    for r in [1u32, 2, 3, 4, 6] {
        for m in [1u32, 3, 5, 7] {
            for n in 1..=9u32 {
                let mut cases = vec![("const", CoeffSystem::Const)];
                if n % 2 == 1 {
                    cases.push(("sign", CoeffSystem::Sign));
                }
                for (name, coeff) in cases {
                    let id = format!("{c}/euler/lens/r={r}/m={m}/N={n}/{name}");
                    out.push(match dims(ConfigSpaceSpec::unordered(Space::Lens(r), m, n, coeff)) {
                        Ok(h) => {
                            let e = h.euler_characteristic();
                            CaseResult::new(id, e == 0 && !h.is_empty(), [("dims", json!(h)), ("euler", json!(e))])
                        }
                        Err(e) => CaseResult::error(id, e),
                    });
                }
            }
        }
    }
    out
}

/// The `d^M` pattern of every free table cell with `M ≤ 9`.
pub fn check_leray(truncation: usize) -> Vec<CaseResult> {
    let c = Criterion::Leray.prefix();
    table_specs(9)
        .into_iter()
        .filter(|s| !s.based)
        .map(|spec| {
            let id = format!("{c}/{}", spec.case_id());
            let fiber = table_closed_form(&spec.as_based()).expect("valid");
            let total = table_closed_form(&spec).expect("valid");
            let pairs = leray_dm_pairs(&spec).expect("free spec");
            match leray_verify(&fiber, spec.target_dim, &pairs, &total, truncation) {
                Ok(v) => CaseResult::new(
                    id,
                    v,
                    [
                        ("fiber", Value::String(fiber.to_string())),
                        ("total", Value::String(total.to_string())),
                        ("pairs", json!(pairs)),
                    ],
                ),
                Err(e) => CaseResult::error(id, e),
            }
        })
        .collect()
}

/// Wedge support and a decided degeneration status for every page.
pub fn check_structure(provider: &(impl DimensionProvider + ?Sized), truncation: usize) -> Vec<CaseResult> {
    let c = Criterion::Structure.prefix();
    table_specs(9)
        .iter()
        .chain(&lens_specs(9, &[2, 3, 4, 6]))
        .map(|spec| {
            let id = format!("{c}/{}", spec.case_id());
            match build_e1_with(provider, spec, default_p_min(spec, truncation)) {
                Ok(page) => {
                    let wedge = wedge_support_check(&page);
                    let status = degeneration_status(&page);
                    CaseResult::new(
                        id,
                        wedge && status != Degeneration::Unknown,
                        [("wedge", json!(wedge)), ("degeneration", json!(status))],
                    )
                }
                Err(e) => CaseResult::error(id, e),
            }
        })
        .collect()
}

pub fn run_criterion(
    criterion: Criterion,
    provider: &(impl DimensionProvider + ?Sized),
    truncation: usize,
) -> Vec<CaseResult> {
    match criterion {
        Criterion::Tables => check_tables(provider, truncation),
        Criterion::Lens => check_lens(provider, truncation),
        Criterion::HorizontalEuler => check_horizontal_euler(),
        Criterion::FiberPolynomial => check_fiber_polynomial(),
        Criterion::PartitionHomology => check_partition_homology(),
        Criterion::DualityEuler => check_duality_and_euler(provider),
        Criterion::Leray => check_leray(truncation),
        Criterion::Structure => check_structure(provider, truncation),
    }
}

/// Every check, as one report.
pub fn run_all(provider: &(impl DimensionProvider + ?Sized), truncation: usize) -> ReportDocument {
    let results = Criterion::ALL
        .iter()
        .flat_map(|&c| run_criterion(c, provider, truncation))
        .collect();
    let params = BTreeMap::from([("T".to_string(), json!(truncation))]);
    ReportDocument::new("verify-all", params, results)
}
