//! The solvable planar models: printed right-hand sides, their maps to the
//! driving y-systems, and the machinery that rederives every right-hand side.
//!
//! Tables are exact rationals. Where a printed table and the construction
//! disagree, the construction wins and the override is listed in the ledger.

mod data;
pub mod expr;
mod raw;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{c, C64};
use crate::error::{Error, Result};
use crate::identities::pair_xdot;
use crate::polynomials::{case_coeffs, CaseTag, SelectedPair};
use crate::solvers::{AppendixASystem, Variant};

pub use expr::{parse_poly, parse_ratfn, BoundRatFn, Poly, RatFn, Q};
use raw::{RawFix, RawModel};

/// Named complex parameter values.
pub type Params = BTreeMap<String, C64>;

/// Build a parameter map from (name, value) pairs.
pub fn params(pairs: &[(&str, C64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppendixMap {
    pub alpha: Vec<Poly>,
    pub beta: Vec<Poly>,
    pub gamma: Vec<Poly>,
}

impl AppendixMap {
    fn parse(alpha: &[&str], beta: &[&str], gamma: &[&str]) -> Result<Self> {
        let list = |v: &[&str]| v.iter().map(|s| parse_poly(s)).collect::<Result<Vec<_>>>();
        let map = AppendixMap { alpha: list(alpha)?, beta: list(beta)?, gamma: list(gamma)? };
        if map.alpha.iter().chain(&map.beta).chain(&map.gamma).any(|p| p.has_zeros()) {
            return Err(Error::Parse("appendix map entries may only involve parameters".into()));
        }
        Ok(map)
    }

    fn strings(&self) -> MapJson {
        let s = |v: &[Poly]| v.iter().map(|p| p.to_string()).collect();
        MapJson { alpha: s(&self.alpha), beta: s(&self.beta), gamma: s(&self.gamma) }
    }

    fn bind(&self, vals: &[C64; expr::VARS.len()]) -> [Vec<C64>; 3] {
        let e = |v: &[Poly]| v.iter().map(|p| p.eval(vals)).collect();
        [e(&self.alpha), e(&self.beta), e(&self.gamma)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LedgerTarget {
    AppendixMap,
    Rhs,
}

/// One printed-vs-rederived override.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub model: String,
    pub target: LedgerTarget,
    pub printed: Vec<String>,
    pub corrected: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    /// Label such as "4.(i)1.2d".
    pub id: String,
    /// Short code such as "i12d".
    pub code: String,
    pub case: CaseTag,
    pub pair: SelectedPair,
    pub variant: Variant,
    /// Index of the coefficient with the autonomous ODE.
    pub first: usize,
    pub second: usize,
    pub order: usize,
    pub params: Vec<String>,
    /// Right-hand side after ledger corrections.
    pub rhs: [RatFn; 2],
    pub printed_rhs: [RatFn; 2],
    pub map: AppendixMap,
    pub printed_map: AppendixMap,
    pub polynomiality: String,
    pub duplicate_of: Option<String>,
}

/// Label "4.(ii)2.4b" from code "ii24b".
pub fn label_from_code(code: &str) -> String {
    let case_len = code.chars().take_while(|&ch| ch == 'i').count();
    let rest = &code[case_len..];
    let digits: Vec<char> = rest.chars().collect();
    if digits.len() < 3 {
        return code.to_string();
    }
    format!("4.({}){}.{}{}", &code[..case_len], digits[0], digits[1], digits[2..].iter().collect::<String>())
}

/// Accepts "4.(i)1.2d", "4i12d" or "i12d".
pub fn normalize_id(id: &str) -> String {
    let s = id.trim();
    let s = s.strip_prefix("4.").or_else(|| s.strip_prefix('4')).unwrap_or(s);
    s.chars().filter(|ch| !matches!(ch, '(' | ')' | '.')).collect()
}

fn len_or_zero(v: &[C64], n: usize) -> Vec<C64> {
    let mut out = v.to_vec();
    out.resize(n.max(v.len()), C64::new(0.0, 0.0));
    out
}

impl ModelSpec {
    fn from_raw(r: &RawModel) -> Result<Self> {
        let case = if r.case_ii { CaseTag::II } else { CaseTag::I };
        let printed_rhs = [parse_ratfn(r.rhs[0])?, parse_ratfn(r.rhs[1])?];
        let printed_map = AppendixMap::parse(r.alpha, r.beta, r.gamma)?;
        let (rhs, map) = match r.fix {
            None => (printed_rhs.clone(), printed_map.clone()),
            Some(RawFix::Map { alpha, beta, gamma, .. }) => (printed_rhs.clone(), AppendixMap::parse(alpha, beta, gamma)?),
            Some(RawFix::Rhs { rhs, .. }) => ([parse_ratfn(rhs[0])?, parse_ratfn(rhs[1])?], printed_map.clone()),
        };
        Ok(ModelSpec {
            id: label_from_code(r.code),
            code: r.code.to_string(),
            case,
            pair: SelectedPair::unordered(r.first, r.second, case)?,
            variant: Variant::parse(r.variant)?,
            first: r.first,
            second: r.second,
            order: r.order,
            params: r.params.iter().map(|s| s.to_string()).collect(),
            rhs,
            printed_rhs,
            map,
            printed_map,
            polynomiality: r.polynomial.to_string(),
            duplicate_of: r.duplicate_of.map(str::to_string),
        })
    }

    pub fn is_polynomial(&self) -> bool {
        self.rhs.iter().all(RatFn::is_polynomial)
    }

    /// Analytic solution path in closed form or by quadrature (no energy integration).
    pub fn has_closed_form_path(&self) -> bool {
        match self.variant {
            Variant::A1 => self.order == 1,
            Variant::A2 | Variant::A31 => true,
            Variant::A32 | Variant::A33 => false,
        }
    }

    fn check_params(&self, p: &Params) -> Result<()> {
        for name in &self.params {
            if !p.contains_key(name) {
                return Err(Error::Config(format!("model {} needs parameter {name}", self.id)));
            }
        }
        if let Some(extra) = p.keys().find(|k| !self.params.contains(k)) {
            return Err(Error::Config(format!("model {} has no parameter {extra}", self.id)));
        }
        Ok(())
    }

    fn system_from(&self, map: &AppendixMap, vals: &[C64; expr::VARS.len()]) -> Result<AppendixASystem> {
        let [alpha, beta, gamma] = map.bind(vals);
        let (alpha, beta, gamma) = match self.variant {
            Variant::A1 => (len_or_zero(&alpha, self.order + 1), len_or_zero(&beta, self.order + 1), vec![]),
            _ => (alpha, beta, gamma),
        };
        AppendixASystem::new(self.variant, self.first, self.second, alpha, beta, gamma)
    }

    /// Bind parameter values.
    pub fn instantiate(&self, p: &Params) -> Result<ModelInstance> {
        self.check_params(p)?;
        let vals = expr::bind_values(p);
        Ok(ModelInstance {
            code: self.code.clone(),
            case: self.case,
            first: self.first,
            second: self.second,
            pair: (self.pair.first, self.pair.second),
            rhs: [self.rhs[0].bind(&vals), self.rhs[1].bind(&vals)],
            printed_rhs: [self.printed_rhs[0].bind(&vals), self.printed_rhs[1].bind(&vals)],
            system: self.system_from(&self.map, &vals)?,
            printed_system: self.system_from(&self.printed_map, &vals)?,
        })
    }

    /// Homogeneous parts of a polynomial right-hand side: degree k -> [(deg x1, deg x2, coefficient)].
    pub fn homogeneous_table(&self, component: usize) -> Option<BTreeMap<u32, Vec<(u8, u8, Poly)>>> {
        let f = &self.rhs[component];
        if !f.is_polynomial() {
            return None;
        }
        let mut out: BTreeMap<u32, Vec<(u8, u8, Poly)>> = BTreeMap::new();
        for ((i, j), coef) in f.num.by_zero_monomial() {
            out.entry(i as u32 + j as u32).or_default().push((i, j, coef));
        }
        Some(out)
    }

    /// Row sums of both components per homogeneous degree, exactly. None for non-polynomial models.
    pub fn row_sums(&self) -> Option<Vec<(u32, Poly, Poly)>> {
        let t1 = self.homogeneous_table(0)?;
        let t2 = self.homogeneous_table(1)?;
        let mut degrees: Vec<u32> = t1.keys().chain(t2.keys()).copied().collect();
        degrees.sort_unstable();
        degrees.dedup();
        let sum = |t: &BTreeMap<u32, Vec<(u8, u8, Poly)>>, k: u32| t.get(&k).map_or(Poly::zero(), |row| row.iter().fold(Poly::zero(), |acc, (_, _, p)| acc.add(p)));
        Some(degrees.into_iter().map(|k| (k, sum(&t1, k), sum(&t2, k))).collect())
    }

    pub fn row_sum_rule_holds(&self) -> Option<bool> {
        self.row_sums().map(|rows| rows.iter().all(|(_, a, b)| a == b))
    }

    /// Case (ii): the second component is the first with x1, x2 exchanged (exact check).
    pub fn swap_symmetric(&self) -> bool {
        self.rhs[1].same_function(&self.rhs[0].swap_zeros())
    }

    /// For the 2d models: max over probe x of |3x f1(-4x, 6x^2) + f2(-4x, 6x^2)| relative to its terms.
    pub fn coalescence_residual(&self, p: &Params) -> Result<Option<f64>> {
        if !self.code.ends_with("12d") {
            return Ok(None);
        }
        let sys = self.instantiate(p)?.system;
        let mut worst: f64 = 0.0;
        for &x in &[c(0.3, 0.0), c(-0.7, 0.2), c(1.1, -0.4), c(0.05, 0.9), c(-1.3, -0.6)] {
            let f = sys.rhs([-4.0 * x, 6.0 * x * x])?;
            let a = 3.0 * x * f[0];
            worst = worst.max((a + f[1]).norm() / (1.0 + a.norm() + f[1].norm()));
        }
        Ok(Some(worst))
    }
}

/// A model with its parameters bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelInstance {
    pub code: String,
    pub case: CaseTag,
    pub first: usize,
    pub second: usize,
    /// (smaller, larger) coefficient index
    pub pair: (usize, usize),
    pub rhs: [BoundRatFn; 2],
    pub printed_rhs: [BoundRatFn; 2],
    pub system: AppendixASystem,
    pub printed_system: AppendixASystem,
}

fn singular_factor(x1: C64, x2: C64) -> String {
    let scale = 1.0 + x1.norm().max(x2.norm());
    let candidates = [("x1 - x2", (x1 - x2).norm()), ("x1", x1.norm()), ("x2", x2.norm()), ("x1 + x2", (x1 + x2).norm()), ("x1^2 + x1*x2 + x2^2", (x1 * x1 + x1 * x2 + x2 * x2).norm() / scale)];
    candidates.iter().min_by(|a, b| a.1.total_cmp(&b.1)).map(|c| c.0.to_string()).unwrap_or_default()
}

impl ModelInstance {
    /// The model's equations of motion (ledger-corrected).
    pub fn rhs(&self, x: [C64; 2]) -> Result<[C64; 2]> {
        Ok([self.rhs[0].eval(x[0], x[1])?, self.rhs[1].eval(x[0], x[1])?])
    }

    /// The right-hand side exactly as transcribed.
    pub fn printed(&self, x: [C64; 2]) -> Result<[C64; 2]> {
        Ok([self.printed_rhs[0].eval(x[0], x[1])?, self.printed_rhs[1].eval(x[0], x[1])?])
    }

    /// xdot from the construction: x -> y, ydot from the driving system, then the pair identity.
    pub fn rederive(&self, x: [C64; 2]) -> Result<[C64; 2]> {
        rederive_with(&self.system, self.case, self.pair, x)
    }

    /// Rederivation through the printed (uncorrected) map.
    pub fn rederive_printed_map(&self, x: [C64; 2]) -> Result<[C64; 2]> {
        rederive_with(&self.printed_system, self.case, self.pair, x)
    }

    /// (y_first, y_second) at x.
    pub fn driving_state(&self, x: [C64; 2]) -> [C64; 2] {
        let y = case_coeffs(self.case, x[0], x[1]);
        [y[self.first - 1], y[self.second - 1]]
    }
}

fn rederive_with(sys: &AppendixASystem, case: CaseTag, pair: (usize, usize), x: [C64; 2]) -> Result<[C64; 2]> {
    let y = case_coeffs(case, x[0], x[1]);
    let f = sys.rhs([y[sys.first - 1], y[sys.second - 1]])?;
    let yd = if sys.first < sys.second { f } else { [f[1], f[0]] };
    let xd = pair_xdot(case, pair, x[0], x[1], yd)?;
    if !(crate::complex::is_finite(xd[0]) && crate::complex::is_finite(xd[1])) {
        return Err(Error::SingularPoint { factor: singular_factor(x[0], x[1]) });
    }
    Ok(xd)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    pub models: Vec<ModelSpec>,
    pub ledger: Vec<LedgerEntry>,
}

static BUILTIN: OnceLock<Catalog> = OnceLock::new();

/// Overview row for listings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub id: String,
    pub code: String,
    pub case: String,
    pub pair: [usize; 2],
    pub variant: String,
    pub params: Vec<String>,
    pub polynomiality: String,
    pub duplicate_of: Option<String>,
    pub on_ledger: bool,
}

impl Catalog {
    /// The transcribed catalog, parsed once.
    pub fn builtin() -> &'static Catalog {
        BUILTIN.get_or_init(|| Catalog::from_raw(data::MODELS).expect("built-in catalog tables parse"))
    }

    fn from_raw(raw: &[RawModel]) -> Result<Catalog> {
        let mut models = Vec::new();
        let mut ledger = Vec::new();
        for r in raw {
            let m = ModelSpec::from_raw(r)?;
            match r.fix {
                Some(RawFix::Map { note, .. }) => ledger.push(LedgerEntry {
                    model: m.id.clone(),
                    target: LedgerTarget::AppendixMap,
                    printed: map_lines(&m.printed_map),
                    corrected: map_lines(&m.map),
                    note: note.to_string(),
                }),
                Some(RawFix::Rhs { note, .. }) => ledger.push(LedgerEntry {
                    model: m.id.clone(),
                    target: LedgerTarget::Rhs,
                    printed: m.printed_rhs.iter().map(|f| f.to_string()).collect(),
                    corrected: m.rhs.iter().map(|f| f.to_string()).collect(),
                    note: note.to_string(),
                }),
                None => {}
            }
            models.push(m);
        }
        Ok(Catalog { models, ledger })
    }

    pub fn get(&self, id: &str) -> Result<&ModelSpec> {
        let code = normalize_id(id);
        self.models.iter().find(|m| m.code == code).ok_or_else(|| Error::UnknownModel(id.to_string()))
    }

    pub fn distinct(&self) -> impl Iterator<Item = &ModelSpec> {
        self.models.iter().filter(|m| m.duplicate_of.is_none())
    }

    pub fn ledger_entry(&self, m: &ModelSpec) -> Option<&LedgerEntry> {
        self.ledger.iter().find(|e| e.model == m.id)
    }

    pub fn list(&self) -> Vec<ModelSummary> {
        self.models
            .iter()
            .map(|m| ModelSummary {
                id: m.id.clone(),
                code: m.code.clone(),
                case: m.case.label().to_string(),
                pair: [m.pair.first, m.pair.second],
                variant: m.variant.label().to_string(),
                params: m.params.clone(),
                polynomiality: m.polynomiality.clone(),
                duplicate_of: m.duplicate_of.as_ref().map(|d| label_from_code(d)),
                on_ledger: self.ledger_entry(m).is_some(),
            })
            .collect()
    }
}

fn map_lines(m: &AppendixMap) -> Vec<String> {
    let s = |v: &[Poly], name: &str| v.iter().enumerate().map(|(i, p)| format!("{name}{i} = {p}")).collect::<Vec<_>>();
    let mut out = s(&m.alpha, "alpha");
    out.extend(s(&m.beta, "beta"));
    out.extend(s(&m.gamma, "gamma"));
    out
}

/// Metadata for every catalog entry.
pub fn list_models() -> Vec<ModelSummary> {
    Catalog::builtin().list()
}

pub fn model_rhs(m: &ModelSpec, p: &Params, x: [C64; 2]) -> Result<[C64; 2]> {
    m.instantiate(p)?.rhs(x)
}

pub fn model_to_appendix_system(m: &ModelSpec, p: &Params) -> Result<AppendixASystem> {
    Ok(m.instantiate(p)?.system)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rederivation {
    pub rederived: [C64; 2],
    pub printed: [C64; 2],
    /// rederived minus printed
    pub discrepancy: [C64; 2],
    /// max_n |discrepancy_n| / (1 + |printed_n|)
    pub relative: f64,
}

pub fn rederive_rhs(m: &ModelSpec, p: &Params, x: [C64; 2]) -> Result<Rederivation> {
    let inst = m.instantiate(p)?;
    let rederived = inst.rederive(x)?;
    let printed = inst.printed(x)?;
    let discrepancy = [rederived[0] - printed[0], rederived[1] - printed[1]];
    let relative = (0..2).map(|n| discrepancy[n].norm() / (1.0 + printed[n].norm())).fold(0.0, f64::max);
    Ok(Rederivation { rederived, printed, discrepancy, relative })
}

/// Random parameters and admissible points for sweeps.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn complex(&mut self, radius: f64) -> C64 {
        c(self.rng.gen_range(-radius..radius), self.rng.gen_range(-radius..radius))
    }

    pub fn params(&mut self, m: &ModelSpec, radius: f64) -> Params {
        m.params.iter().map(|n| (n.clone(), self.complex(radius))).collect()
    }

    /// A point away from every denominator that occurs in the catalog.
    pub fn point(&mut self, radius: f64) -> [C64; 2] {
        loop {
            let (x1, x2) = (self.complex(radius), self.complex(radius));
            let gap = 0.15 * radius;
            let ok = (x1 - x2).norm() > gap && x1.norm() > gap && x2.norm() > gap && (x1 + x2).norm() > gap && (x1 * x1 + x1 * x2 + x2 * x2).norm() > gap * gap;
            if ok {
                return [x1, x2];
            }
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Result of checking one model against the construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelCheck {
    pub id: String,
    pub samples: usize,
    /// max relative |rederived - rhs| with the ledger applied
    pub max_discrepancy: f64,
    /// the same through the printed tables, when a ledger entry exists
    pub printed_discrepancy: Option<f64>,
    pub on_ledger: bool,
    /// exact row-sum rule, polynomial models only
    pub row_sum_rule: Option<bool>,
    /// exact swap symmetry, case (ii) only
    pub swap_symmetric: Option<bool>,
    pub coalescence_residual: Option<f64>,
}

/// Compare rederived and tabulated right-hand sides at random points.
pub fn check_model(cat: &Catalog, m: &ModelSpec, samples: usize, seed: u64) -> Result<ModelCheck> {
    let mut s = Sampler::new(seed);
    let on_ledger = cat.ledger_entry(m).is_some();
    let mut worst: f64 = 0.0;
    let mut printed_worst: f64 = 0.0;
    let mut coalescence = None;
    for k in 0..samples {
        let p = s.params(m, 1.0);
        let x = s.point(1.0);
        let inst = m.instantiate(&p)?;
        let want = inst.rhs(x)?;
        let got = inst.rederive(x)?;
        worst = worst.max((0..2).map(|n| (got[n] - want[n]).norm() / (1.0 + want[n].norm())).fold(0.0, f64::max));
        if on_ledger {
            let printed = inst.printed(x)?;
            let via_printed = inst.rederive_printed_map(x)?;
            printed_worst = printed_worst.max((0..2).map(|n| (via_printed[n] - printed[n]).norm() / (1.0 + printed[n].norm())).fold(0.0, f64::max));
        }
        if k == 0 {
            coalescence = m.coalescence_residual(&p)?;
        }
    }
    Ok(ModelCheck {
        id: m.id.clone(),
        samples,
        max_discrepancy: worst,
        printed_discrepancy: on_ledger.then_some(printed_worst),
        on_ledger,
        row_sum_rule: m.row_sum_rule_holds(),
        swap_symmetric: (m.case == CaseTag::II).then(|| m.swap_symmetric()),
        coalescence_residual: coalescence,
    })
}

pub const SCHEMA: &str = "zerodyn.catalog";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorJson {
    pub factor: String,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub x1: u8,
    pub x2: u8,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatFnJson {
    /// numerator as a polynomial in x1, x2 with exact-rational parameter coefficients
    pub numerator: Vec<TermJson>,
    pub denominator: Vec<FactorJson>,
}

impl RatFnJson {
    fn from(f: &RatFn) -> Self {
        RatFnJson {
            numerator: f.num.by_zero_monomial().into_iter().rev().map(|((i, j), p)| TermJson { x1: i, x2: j, coefficient: p.to_string() }).collect(),
            denominator: f.den.iter().map(|(p, k)| FactorJson { factor: p.to_string(), power: *k }).collect(),
        }
    }

    fn to_ratfn(&self) -> Result<RatFn> {
        let mut num = Poly::zero();
        for t in &self.numerator {
            let coef = parse_poly(&t.coefficient)?;
            if coef.has_zeros() {
                return Err(Error::Parse("coefficients may not involve x1, x2".into()));
            }
            let mono = Poly::var(0).pow(t.x1 as u32).mul(&Poly::var(1).pow(t.x2 as u32));
            num = num.add(&coef.mul(&mono));
        }
        let mut den_text = String::from("1");
        for f in &self.denominator {
            den_text.push_str(&format!("*({})^{}", f.factor, f.power));
        }
        // route the denominator through the parser so factors are normalized identically
        let mut r = parse_ratfn(&format!("1/({den_text})"))?;
        r.num = r.num.mul(&num);
        Ok(r)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub gamma: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelJson {
    pub id: String,
    pub code: String,
    pub case: CaseTag,
    pub pair: [usize; 2],
    pub variant: String,
    pub first: usize,
    pub second: usize,
    pub order: usize,
    pub params: Vec<String>,
    pub rhs: [RatFnJson; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_rhs: Option<[RatFnJson; 2]>,
    pub appendix_map: MapJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_map: Option<MapJson>,
    pub polynomiality: String,
    pub duplicate_of: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogJson {
    pub schema: String,
    pub version: u32,
    pub models: Vec<ModelJson>,
    pub typo_ledger: Vec<LedgerEntry>,
}

impl Catalog {
    pub fn to_json_doc(&self) -> CatalogJson {
        let models = self
            .models
            .iter()
            .map(|m| ModelJson {
                id: m.id.clone(),
                code: m.code.clone(),
                case: m.case,
                pair: [m.pair.first, m.pair.second],
                variant: m.variant.label().to_string(),
                first: m.first,
                second: m.second,
                order: m.order,
                params: m.params.clone(),
                rhs: [RatFnJson::from(&m.rhs[0]), RatFnJson::from(&m.rhs[1])],
                printed_rhs: (m.printed_rhs != m.rhs).then(|| [RatFnJson::from(&m.printed_rhs[0]), RatFnJson::from(&m.printed_rhs[1])]),
                appendix_map: m.map.strings(),
                printed_map: (m.printed_map != m.map).then(|| m.printed_map.strings()),
                polynomiality: m.polynomiality.clone(),
                duplicate_of: m.duplicate_of.clone(),
            })
            .collect();
        CatalogJson { schema: SCHEMA.to_string(), version: SCHEMA_VERSION, models, typo_ledger: self.ledger.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_doc()).expect("catalog serializes")
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let doc: CatalogJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("catalog JSON: {e}")))?;
        if doc.schema != SCHEMA || doc.version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported catalog schema {} v{}", doc.schema, doc.version)));
        }
        let mut models = Vec::new();
        for mj in &doc.models {
            let rhs = [mj.rhs[0].to_ratfn()?, mj.rhs[1].to_ratfn()?];
            let printed_rhs = match &mj.printed_rhs {
                Some(p) => [p[0].to_ratfn()?, p[1].to_ratfn()?],
                None => rhs.clone(),
            };
            fn parse_map(m: &MapJson) -> Result<AppendixMap> {
                fn v(l: &[String]) -> Vec<&str> {
                    l.iter().map(String::as_str).collect()
                }
                AppendixMap::parse(&v(&m.alpha), &v(&m.beta), &v(&m.gamma))
            }
            let map = parse_map(&mj.appendix_map)?;
            let printed_map = match &mj.printed_map {
                Some(p) => parse_map(p)?,
                None => map.clone(),
            };
            models.push(ModelSpec {
                id: mj.id.clone(),
                code: mj.code.clone(),
                case: mj.case,
                pair: SelectedPair::unordered(mj.pair[0], mj.pair[1], mj.case)?,
                variant: Variant::parse(&mj.variant)?,
                first: mj.first,
                second: mj.second,
                order: mj.order,
                params: mj.params.clone(),
                rhs,
                printed_rhs,
                map,
                printed_map,
                polynomiality: mj.polynomiality.clone(),
                duplicate_of: mj.duplicate_of.clone(),
            });
        }
        Ok(Catalog { models, ledger: doc.typo_ledger })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{re, ZERO};

    fn cat() -> &'static Catalog {
        Catalog::builtin()
    }

    #[test]
    fn counts_and_duplicates() {
        assert_eq!(cat().models.len(), 44);
        assert_eq!(cat().distinct().count(), 34);
        assert_eq!(cat().get("4.(i)1.2d").unwrap().duplicate_of, None);
        assert_eq!(cat().get("4.(i)2.3b").unwrap().duplicate_of.as_deref(), Some("i12c"));
        for m in &cat().models {
            if let Some(d) = &m.duplicate_of {
                let orig = cat().get(d).unwrap();
                assert!(m.rhs[0].same_function(&orig.rhs[0]) && m.rhs[1].same_function(&orig.rhs[1]), "{}", m.id);
            }
        }
    }

    #[test]
    fn ids_normalize() {
        assert_eq!(normalize_id("4.(ii)2.4b"), "ii24b");
        assert_eq!(normalize_id("4i12d"), "i12d");
        assert_eq!(label_from_code("ii24b"), "4.(ii)2.4b");
        assert!(matches!(cat().get("i99z"), Err(Error::UnknownModel(_))));
    }

    #[test]
    fn model_rhs_examples() {
        let m = cat().get("4i12d").unwrap();
        let p = params(&[("a", c(0.7, 0.1)), ("b", c(-0.2, 0.4))]);
        let (a, b) = (p["a"], p["b"]);
        let at0 = model_rhs(m, &p, [ZERO, ZERO]).unwrap();
        assert!((at0[0] - a).norm() < 1e-15 && (at0[1] - a).norm() < 1e-15);
        let at1 = model_rhs(m, &p, [re(1.0), ZERO]).unwrap();
        assert!((at1[0] - (a + 5.0 * b)).norm() < 1e-14 && (at1[1] - (a + 17.0 * b)).norm() < 1e-14);
        let m = cat().get("ii12d").unwrap();
        let x = c(0.4, -0.3);
        let d = model_rhs(m, &p, [x, x]).unwrap();
        assert!((d[0] - d[1]).norm() < 1e-15);
        let m = cat().get("i13d").unwrap();
        match model_rhs(m, &p, [ZERO, re(1.0)]) {
            Err(Error::SingularPoint { factor }) => assert_eq!(factor, "x1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn appendix_maps() {
        let p = params(&[("a", c(0.7, 0.1)), ("b", c(-0.2, 0.4))]);
        let (a, b) = (p["a"], p["b"]);
        let s = model_to_appendix_system(cat().get("i12d").unwrap(), &p).unwrap();
        assert_eq!(s.variant, Variant::A31);
        let want = [-4.0 * a, -(32.0 / 3.0) * b, -3.0 * a, -3.0 * b];
        let got = [s.alpha[0], s.alpha[1], s.beta[0], s.beta[1]];
        assert!(got.iter().zip(&want).all(|(g, w)| (g - w).norm() < 1e-15));
        let s = model_to_appendix_system(cat().get("ii12a").unwrap(), &p).unwrap();
        assert_eq!((s.variant, s.order()), (Variant::A1, 1));
        let want = [a, 0.75 * b, 2.0 * a, 4.0 * b];
        let got = [s.alpha[0], s.alpha[1], s.beta[0], s.beta[1]];
        assert!(got.iter().zip(&want).all(|(g, w)| (g - w).norm() < 1e-15));
        let p3 = params(&[("a", c(0.7, 0.1)), ("b", c(-0.2, 0.4)), ("c", c(0.3, 0.3))]);
        let s = model_to_appendix_system(cat().get("i12c").unwrap(), &p3).unwrap();
        assert_eq!((s.variant, s.first, s.second), (Variant::A2, 2, 1));
        let (a, b, cc) = (p3["a"], p3["b"], p3["c"]);
        let want = [ZERO, 2.0 * a, 2.0 * b / 3.0, 2.0 * cc / 9.0];
        assert!(s.alpha.iter().zip(&want).all(|(g, w)| (g - w).norm() < 1e-15));
        let want = [ZERO, a, b / 3.0, cc / 9.0];
        assert!(s.beta.iter().zip(&want).all(|(g, w)| (g - w).norm() < 1e-15));
        assert!(s.gamma.iter().all(|g| *g == ZERO));
    }

    #[test]
    fn parameter_checks() {
        let m = cat().get("i12d").unwrap();
        assert!(matches!(m.instantiate(&params(&[("a", re(1.0))])), Err(Error::Config(_))));
        assert!(matches!(m.instantiate(&params(&[("a", re(1.0)), ("b", re(1.0)), ("z", re(1.0))])), Err(Error::Config(_))));
    }

    #[test]
    fn printed_values_match_independent_oracle() {
        // values of the transcribed right-hand sides from an exact symbolic evaluation
        let oracle: BTreeMap<String, [[f64; 2]; 2]> = serde_json::from_str(include_str!("../../tests/data/oracle_rhs.json")).unwrap();
        let q = |n: i32, d: i32| re(n as f64 / d as f64);
        let all = params(&[
            ("a", q(3, 7)),
            ("b", q(-2, 5)),
            ("c", q(5, 11)),
            ("a0", q(1, 3)),
            ("a1", q(-3, 4)),
            ("a2", q(2, 9)),
            ("a3", q(-1, 6)),
            ("b0", q(4, 13)),
            ("b1", q(-5, 12)),
            ("b2", q(1, 8)),
            ("b3", q(7, 17)),
        ]);
        let x = [c(0.3, 0.2), c(-0.5, 0.1)];
        assert_eq!(oracle.len(), 44);
        for m in &cat().models {
            let p: Params = m.params.iter().map(|n| (n.clone(), all[n])).collect();
            let got = m.instantiate(&p).unwrap().printed(x).unwrap();
            let want = oracle[&m.code];
            for n in 0..2 {
                let w = c(want[n][0], want[n][1]);
                assert!((got[n] - w).norm() < 1e-12 * (1.0 + w.norm()), "{} {n}: {} vs {}", m.code, got[n], w);
            }
        }
    }

    #[test]
    fn rederivation_matches_with_ledger() {
        for m in &cat().models {
            let chk = check_model(cat(), m, 20, 7).unwrap();
            assert!(chk.max_discrepancy < 1e-9, "{}: {}", m.id, chk.max_discrepancy);
            if let Some(d) = chk.printed_discrepancy {
                assert!(d > 1e-6, "{} ledger entry not needed ({d})", m.id);
            }
        }
        let e = cat().ledger_entry(cat().get("i14d").unwrap()).unwrap();
        assert!(e.printed.iter().any(|s| s.contains("1638*b")));
        assert!(e.corrected.iter().any(|s| s.contains("16384*b")));
    }

    #[test]
    fn rederive_rhs_report() {
        let m = cat().get("i12a").unwrap();
        let p = params(&[("a", c(0.2, 0.1)), ("b", c(-0.5, 0.3))]);
        let r = rederive_rhs(m, &p, [re(1.0), re(2.0)]).unwrap();
        assert!(r.relative < 1e-12);
        assert!(matches!(rederive_rhs(m, &p, [re(1.0), re(1.0)]), Err(Error::SingularPoint { .. })));
    }

    #[test]
    fn exact_structure() {
        for m in &cat().models {
            if let Some(ok) = m.row_sum_rule_holds() {
                assert!(ok, "row sums {}", m.id);
            }
            if m.case == CaseTag::II {
                assert!(m.swap_symmetric(), "swap {}", m.id);
            }
        }
        let p = params(&[("a", c(0.2, 0.1)), ("b", c(-0.5, 0.3))]);
        for id in ["i12d", "ii12d"] {
            let r = cat().get(id).unwrap().coalescence_residual(&p).unwrap().unwrap();
            assert!(r < 1e-14, "{id}: {r}");
        }
    }

    #[test]
    fn json_round_trip() {
        let text = cat().to_json();
        let back = Catalog::from_json(&text).unwrap();
        assert_eq!(back.models.len(), 44);
        for (a, b) in cat().models.iter().zip(&back.models) {
            assert!(a.rhs[0].same_function(&b.rhs[0]) && a.rhs[1].same_function(&b.rhs[1]), "{}", a.id);
            assert_eq!(a.map, b.map);
            assert_eq!(a.printed_map, b.printed_map);
        }
        assert_eq!(back.ledger, cat().ledger);
        assert!(Catalog::from_json(&text.replace("\"version\": 1", "\"version\": 2")).is_err());
    }
}
