//! Plane quadratic systems obtained from the canonical solvable system
//!
//!   xdot_n = (a2 x_n + b2 X) X,   X = 3 x1 + x2,
//!
//! by a linear change of variables z = A x, plus the gauge that adds an
//! isotropic linear term: Zdot = a Z + Q(Z).
//!
//! Coefficient tables are indexed `[n][l]` with columns (z1^2, z2^2, z1 z2).

use serde::{Deserialize, Serialize};

use crate::complex::{expm1_over, C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::engine::{check_times, detect_period, march, BranchRecord, Method, PeriodEstimate, Trajectory};
use crate::error::{Error, Result};
use crate::ode::Dopri5;
use crate::polynomials::CaseTag;
use crate::solvers::Flow;

pub type Mat2 = [[C64; 2]; 2];
pub type Table = [[C64; 3]; 2];

/// Coefficients c_{nl} of the canonical system.
pub fn canonical_table(a2: C64, b2: C64) -> Table {
    [
        [3.0 * (a2 + 3.0 * b2), b2, a2 + 6.0 * b2],
        [9.0 * b2, a2 + b2, 3.0 * (a2 + 2.0 * b2)],
    ]
}

fn det(a: &Mat2) -> C64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

fn mat_norm(a: &Mat2) -> f64 {
    a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

fn table_norm(t: &Table) -> f64 {
    t.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

fn eval_forms(t: &Table, z: [C64; 2]) -> [C64; 2] {
    let q = |r: &[C64; 3]| r[0] * z[0] * z[0] + r[1] * z[1] * z[1] + r[2] * z[0] * z[1];
    [q(&t[0]), q(&t[1])]
}

/// A linear reshuffle z = A x of the canonical system with parameters (a2, b2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReductionSpec {
    pub a: Mat2,
    pub d: C64,
    pub c: Table,
    pub a2: C64,
    pub b2: C64,
}

impl ReductionSpec {
    pub fn new(a: Mat2, a2: C64, b2: C64) -> Result<Self> {
        let d = det(&a);
        if !(d.norm() > 1e-12 * mat_norm(&a).powi(2)) {
            return Err(Error::SingularTransform);
        }
        Ok(ReductionSpec { a, d, c: canonical_table(a2, b2), a2, b2 })
    }

    /// The canonical system itself (A = identity).
    pub fn canonical(a2: C64, b2: C64) -> Self {
        ReductionSpec { a: [[ONE, ZERO], [ZERO, ONE]], d: ONE, c: canonical_table(a2, b2), a2, b2 }
    }

    /// x = A^{-1} z
    pub fn to_canonical(&self, z: [C64; 2]) -> [C64; 2] {
        let a = &self.a;
        [(a[1][1] * z[0] - a[0][1] * z[1]) / self.d, (-a[1][0] * z[0] + a[0][0] * z[1]) / self.d]
    }

    /// z = A x
    pub fn from_canonical(&self, x: [C64; 2]) -> [C64; 2] {
        let a = &self.a;
        [a[0][0] * x[0] + a[0][1] * x[1], a[1][0] * x[0] + a[1][1] * x[1]]
    }

    /// Right-hand side of the canonical system.
    pub fn canonical_rhs(&self, x: [C64; 2]) -> [C64; 2] {
        eval_forms(&self.c, x)
    }
}

/// Zdot_n = a Z_n + a_{n1} Z1^2 + a_{n2} Z2^2 + a_{n3} Z1 Z2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneQuadraticSystem {
    pub a: C64,
    pub table: Table,
}

impl PlaneQuadraticSystem {
    pub fn new(a: C64, table: Table) -> Self {
        PlaneQuadraticSystem { a, table }
    }

    /// Accept a general linear part only when it is a multiple of the identity.
    pub fn with_linear_part(lin: Mat2, table: Table) -> Result<Self> {
        let off = lin[0][1].norm().max(lin[1][0].norm()).max((lin[0][0] - lin[1][1]).norm());
        if off > 1e-12 * (1.0 + mat_norm(&lin)) {
            return Err(Error::NotReducible { residual: off });
        }
        Ok(PlaneQuadraticSystem { a: lin[0][0], table })
    }

    pub fn quadratic(&self, z: [C64; 2]) -> [C64; 2] {
        eval_forms(&self.table, z)
    }

    pub fn rhs(&self, z: [C64; 2]) -> [C64; 2] {
        let q = self.quadratic(z);
        [self.a * z[0] + q[0], self.a * z[1] + q[1]]
    }

    /// Largest coefficient modulus.
    pub fn scale(&self) -> f64 {
        table_norm(&self.table)
    }
}

/// tau = (e^{at} - 1)/a, Z(t) = e^{at} z(tau).
///
/// This carries a solution of zdot = Q(z) to one of Zdot = a Z + Q(Z) with the
/// same initial data; as a -> 0 it tends to the identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaugeTransform {
    pub a: C64,
}

impl GaugeTransform {
    pub fn tau(&self, t: f64) -> C64 {
        expm1_over(self.a * t) * t
    }

    pub fn factor(&self, t: f64) -> C64 {
        (self.a * t).exp()
    }

    pub fn apply(&self, t: f64, z: [C64; 2]) -> [C64; 2] {
        let f = self.factor(t);
        [f * z[0], f * z[1]]
    }

    /// Base period 2 pi/|a| when a is purely imaginary.
    pub fn base_period(&self) -> Option<f64> {
        (self.a.re.abs() <= 1e-14 * self.a.norm() && self.a.im != 0.0).then(|| std::f64::consts::TAU / self.a.im.abs())
    }
}

/// Coefficients of zdot = A Q_c(A^{-1} z).
pub fn transform_linear(r: &ReductionSpec) -> Result<PlaneQuadraticSystem> {
    let a = &r.a;
    let d = det(a);
    if !(d.norm() > 1e-12 * mat_norm(a).powi(2)) {
        return Err(Error::SingularTransform);
    }
    let c = &r.c;
    let (a11, a12, a21, a22) = (a[0][0], a[0][1], a[1][0], a[1][1]);
    let mut table = [[ZERO; 3]; 2];
    for (n, row) in table.iter_mut().enumerate() {
        let (an1, an2) = (a[n][0], a[n][1]);
        let f1 = an1 * c[0][0] + an2 * c[1][0];
        let f2 = an1 * c[0][1] + an2 * c[1][1];
        let f3 = an1 * c[0][2] + an2 * c[1][2];
        let d2 = d * d;
        row[0] = (a22 * a22 * f1 + a21 * a21 * f2 - a22 * a21 * f3) / d2;
        row[1] = (a12 * a12 * f1 + a11 * a11 * f2 - a11 * a12 * f3) / d2;
        row[2] = (-2.0 * a12 * a22 * f1 - 2.0 * a21 * a11 * f2 + (a11 * a22 + a12 * a21) * f3) / d2;
    }
    Ok(PlaneQuadraticSystem { a: ZERO, table })
}

/// Vanishes exactly when the two quadratic forms share a zero direction.
pub fn conda_residual(s: &PlaneQuadraticSystem) -> C64 {
    let t = &s.table;
    let (a11, a12, a13) = (t[0][0], t[0][1], t[0][2]);
    let (a21, a22, a23) = (t[1][0], t[1][1], t[1][2]);
    let m = a11 * a22 - a21 * a12;
    m * m + (a13 * a21 - a11 * a23) * (a13 * a22 - a12 * a23)
}

/// Natural size of [`conda_residual`]: the fourth power of the coefficient scale.
pub fn conda_scale(s: &PlaneQuadraticSystem) -> f64 {
    s.scale().powi(4)
}

/// Relative coefficient mismatch between two tables.
pub fn table_distance(a: &Table, b: &Table) -> f64 {
    let scale = table_norm(a).max(table_norm(b));
    let diff = a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Result of a reduction with its diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reduction {
    pub spec: ReductionSpec,
    /// conda residual relative to [`conda_scale`]
    pub conda: f64,
    /// relative table mismatch of transform_linear(spec)
    pub round_trip: f64,
    /// further valid reductions with different (a2, b2)
    pub alternatives: Vec<ReductionSpec>,
}

/// Projective zeros of a z1^2 + b z2^2 + c z1 z2.
fn form_zeros(r: &[C64; 3]) -> Vec<[C64; 2]> {
    let (a, b, c) = (r[0], r[1], r[2]);
    let scale = a.norm().max(b.norm()).max(c.norm());
    if scale == 0.0 {
        return Vec::new();
    }
    let quad = |lead: C64, mid: C64, last: C64| -> Vec<C64> {
        let disc = (mid * mid - 4.0 * lead * last).sqrt();
        // avoid cancellation
        let q = if (mid.conj() * disc).re >= 0.0 { -(mid + disc) / 2.0 } else { -(mid - disc) / 2.0 };
        let mut out = Vec::new();
        if q.norm() > 0.0 {
            out.push(last / q);
        }
        if lead.norm() > 0.0 {
            out.push(q / lead);
        }
        out
    };
    if a.norm() >= b.norm() {
        // z2 = 1: a s^2 + c s + b
        let mut v: Vec<[C64; 2]> = quad(a, c, b).into_iter().map(|s| [s, ONE]).collect();
        if b.norm() <= 1e-14 * scale {
            v.push([ONE, ZERO]);
        }
        v
    } else {
        let mut v: Vec<[C64; 2]> = quad(b, c, a).into_iter().map(|s| [ONE, s]).collect();
        if a.norm() <= 1e-14 * scale {
            v.push([ZERO, ONE]);
        }
        v
    }
}

/// Directions where both forms may vanish: the two linear eliminations,
/// the coordinate axes and the zeros of each form.
fn common_zero_candidates(t: &Table) -> Vec<[C64; 2]> {
    let (a11, a12, a13) = (t[0][0], t[0][1], t[0][2]);
    let (a21, a22, a23) = (t[1][0], t[1][1], t[1][2]);
    let mut raw = vec![
        [a13 * a22 - a12 * a23, -(a11 * a22 - a12 * a21)],
        [a21 * a12 - a11 * a22, -(a21 * a13 - a11 * a23)],
        [ONE, ZERO],
        [ZERO, ONE],
    ];
    raw.extend(form_zeros(&t[0]));
    raw.extend(form_zeros(&t[1]));
    raw.into_iter()
        .filter_map(|r| {
            let n = (r[0].norm_sqr() + r[1].norm_sqr()).sqrt();
            (n > 0.0 && n.is_finite()).then(|| [r[0] / n, r[1] / n])
        })
        .collect()
}

/// Fit (A, a2, b2) assuming both forms vanish on the direction r.
fn fit_direction(t: &Table, r: [C64; 2]) -> Option<ReductionSpec> {
    // L(z) = l . z vanishes on r; scaled like X = 3 x1 + x2
    let mut l = [r[1], -r[0]];
    let s = if l[0].norm() >= l[1].norm() { C64::from(3.0) / l[0] } else { ONE / l[1] };
    l = [l[0] * s, l[1] * s];
    // Q_n = L(z) (m_n . z)
    let mut m = [[ZERO; 2]; 2];
    for n in 0..2 {
        let row = &t[n];
        if l[0].norm() >= l[1].norm() {
            m[n][0] = row[0] / l[0];
            m[n][1] = (row[2] - l[1] * m[n][0]) / l[0];
        } else {
            m[n][1] = row[1] / l[1];
            m[n][0] = (row[2] - l[0] * m[n][1]) / l[1];
        }
    }
    // M = a2 I + w l^T: r is an eigenvector with eigenvalue a2
    let rr = r[0].norm_sqr() + r[1].norm_sqr();
    let mr = [m[0][0] * r[0] + m[0][1] * r[1], m[1][0] * r[0] + m[1][1] * r[1]];
    let a2 = (mr[0] * r[0].conj() + mr[1] * r[1].conj()) / rr;
    let e = [[m[0][0] - a2, m[0][1]], [m[1][0], m[1][1] - a2]];
    let lc = [l[0].conj(), l[1].conj()];
    let ll = l[0].norm_sqr() + l[1].norm_sqr();
    let w = [(e[0][0] * lc[0] + e[0][1] * lc[1]) / ll, (e[1][0] * lc[0] + e[1][1] * lc[1]) / ll];
    let b2 = (l[0] * w[0] + l[1] * w[1]) / 4.0;
    let wn = w[0].norm().max(w[1].norm());
    let mn = m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    // u = A (1, 1)^T with l . u = 4
    let u = if wn <= 1e-13 * mn.max(f64::MIN_POSITIVE) {
        let sum = l[0] + l[1];
        if sum.norm() > 0.1 * ll.sqrt() {
            [4.0 / sum, 4.0 / sum]
        } else {
            [4.0 * lc[0] / ll, 4.0 * lc[1] / ll]
        }
    } else if b2.norm() > 1e-13 * wn * ll.sqrt() {
        [w[0] / b2, w[1] / b2]
    } else {
        return None;
    };
    let b2 = if wn <= 1e-13 * mn.max(f64::MIN_POSITIVE) { ZERO } else { b2 };
    // first column (3/4) u + (1/4) v with v = (l2, -l1); then det A = 1
    let col1 = [0.75 * u[0] + 0.25 * l[1], 0.75 * u[1] - 0.25 * l[0]];
    let col2 = [u[0] - col1[0], u[1] - col1[1]];
    let a = [[col1[0], col2[0]], [col1[1], col2[1]]];
    ReductionSpec::new(a, a2, b2).ok()
}

fn forms_proportional(t: &Table) -> bool {
    let scale = table_norm(t);
    let minors = [
        t[0][0] * t[1][1] - t[0][1] * t[1][0],
        t[0][0] * t[1][2] - t[0][2] * t[1][0],
        t[0][1] * t[1][2] - t[0][2] * t[1][1],
    ];
    minors.iter().all(|m| m.norm() <= 1e-12 * scale * scale)
}

/// Find some (A, a2, b2) whose reshuffle reproduces the quadratic part of `s`.
///
/// The linear term of `s` is ignored here; it is handled by the gauge.
pub fn reduce_with_report(s: &PlaneQuadraticSystem, tol: &Tolerances) -> Result<Reduction> {
    let scale = conda_scale(s);
    let conda = if scale == 0.0 { 0.0 } else { conda_residual(s).norm() / scale };
    if !(conda <= tol.conda) {
        return Err(Error::NotReducible { residual: conda });
    }
    let mut found: Vec<(ReductionSpec, f64)> = Vec::new();
    let mut best = f64::INFINITY;
    for r in common_zero_candidates(&s.table) {
        let Some(spec) = fit_direction(&s.table, r) else { continue };
        let Ok(back) = transform_linear(&spec) else { continue };
        let err = table_distance(&back.table, &s.table);
        best = best.min(err);
        if err <= tol.reduction {
            let same = |o: &ReductionSpec| (o.a2 - spec.a2).norm() <= 1e-8 * (1.0 + spec.a2.norm()) && (o.b2 - spec.b2).norm() <= 1e-8 * (1.0 + spec.b2.norm());
            if !found.iter().any(|(o, _)| same(o)) {
                found.push((spec, err));
            }
        }
    }
    if found.is_empty() {
        return Err(if forms_proportional(&s.table) { Error::DegenerateForms } else { Error::NotReducible { residual: best } });
    }
    let (spec, round_trip) = found[0];
    Ok(Reduction { spec, conda, round_trip, alternatives: found[1..].iter().map(|(o, _)| *o).collect() })
}

pub fn reduce_to_canonical(s: &PlaneQuadraticSystem, tol: &Tolerances) -> Result<ReductionSpec> {
    reduce_with_report(s, tol).map(|r| r.spec)
}

fn log1p_over(u: C64) -> C64 {
    // log(1 + u)/u
    if u.norm() < 1e-4 {
        ONE - u / 2.0 + u * u / 3.0 - u * u * u / 4.0
    } else {
        (ONE + u).ln() / u
    }
}

/// The driving pair (y1, y2) = (-(3x1 + x2), 3 x1 (x1 + x2)) of the canonical
/// system, run on the gauged clock: y(t) = y_c(tau(t)).
///
/// y1 = y1(0)/w with w = 1 - alpha2 y1(0) tau,
/// y2 = (y2(0) - K y1(0)^2) w^(-beta2/alpha2) + K y1^2,
/// alpha2 = -(a2 + 4 b2), beta2 = -2 a2, gamma2 = -3 b2, K = gamma2/(2 alpha2 - beta2).
/// The power is continued along the path by accumulating log increments.
pub struct CanonicalFlow {
    alpha2: C64,
    beta2: C64,
    k: C64,
    y0: [C64; 2],
    gauge: GaugeTransform,
    /// last evaluated clock and accumulated -beta2/alpha2 log w there
    at: f64,
    expo: C64,
}

impl CanonicalFlow {
    pub fn new(a2: C64, b2: C64, gauge: GaugeTransform, y0: [C64; 2]) -> Self {
        let alpha2 = -(a2 + 4.0 * b2);
        let beta2 = -2.0 * a2;
        let gamma2 = -3.0 * b2;
        let den = 2.0 * alpha2 - beta2;
        let k = if b2 == ZERO || den == ZERO { ZERO } else { gamma2 / den };
        CanonicalFlow { alpha2, beta2, k, y0, gauge, at: 0.0, expo: ZERO }
    }

    fn w(&self, t: f64) -> C64 {
        ONE - self.alpha2 * self.y0[0] * self.gauge.tau(t)
    }

    fn advance(&mut self, t: f64) -> Result<()> {
        let g = self.alpha2 * self.y0[0];
        let mut steps = 0;
        while self.at != t {
            let wc = self.w(self.at);
            let rate = g.norm() * self.gauge.factor(self.at).norm();
            // keep |u| below 0.1 so each log increment stays on the principal branch
            let hmax = if rate > 0.0 { 0.1 * wc.norm() / rate } else { f64::INFINITY };
            let remaining = t - self.at;
            let h = remaining.abs().min(hmax);
            if h < 1e-14 * (1.0 + self.at.abs()) || steps > 1_000_000 {
                return Err(Error::BlowUp { t: self.at });
            }
            let tn = if h == remaining.abs() { t } else { self.at + h * remaining.signum() };
            let dtau = self.gauge.tau(tn) - self.gauge.tau(self.at);
            let u = -g * dtau / wc;
            self.expo += self.beta2 * self.y0[0] * dtau / wc * log1p_over(u);
            self.at = tn;
            steps += 1;
        }
        Ok(())
    }
}

impl Flow for CanonicalFlow {
    fn state_at(&mut self, t: f64) -> Result<[C64; 2]> {
        self.advance(t)?;
        let w = self.w(t);
        if w == ZERO {
            return Err(Error::BlowUp { t });
        }
        let y1 = self.y0[0] / w;
        let y2 = (self.y0[1] - self.k * self.y0[0] * self.y0[0]) * self.expo.exp() + self.k * y1 * y1;
        if !(y1.is_finite() && y2.is_finite()) {
            return Err(Error::BlowUp { t });
        }
        Ok([y1, y2])
    }

    fn initial(&self) -> [C64; 2] {
        self.y0
    }
}

fn driving_pair(x: [C64; 2]) -> [C64; 2] {
    [-(3.0 * x[0] + x[1]), 3.0 * x[0] * (x[0] + x[1])]
}

/// Solve Zdot = a Z + Q(Z) through the gauge, the reduction and the closed
/// form of the canonical driving pair; x is recovered from
/// 6 x1^2 + 3 y1 x1 + y2 = 0, x2 = -3 x1 - y1.
pub fn solve_quadratic_plane(s: &PlaneQuadraticSystem, z0: [C64; 2], times: &[f64], tol: &Tolerances) -> Result<Trajectory> {
    check_times(times)?;
    let red = reduce_to_canonical(s, tol)?;
    let gauge = GaugeTransform { a: s.a };
    let t0 = times[0];
    let x0 = red.to_canonical(z0);
    let mut fl = CanonicalFlow::new(red.a2, red.b2, gauge, driving_pair(x0));
    let span = times[times.len() - 1] - t0;
    let growth = gauge.factor(0.0).norm().max(gauge.factor(span).norm());
    let speed_of = |x: [C64; 2]| {
        let v = red.canonical_rhs(x);
        Some(growth * v[0].norm().max(v[1].norm()))
    };
    let mut traj = march(&mut fl, CaseTag::I, (1, 2), false, x0, times, tol, &speed_of, false)?;
    for (t, st) in traj.times.iter().zip(traj.states.iter_mut()) {
        *st = gauge.apply(t - t0, red.from_canonical(*st));
    }
    Ok(traj)
}

/// Dormand-Prince integration of Zdot = a Z + Q(Z).
pub fn integrate_plane_numeric(s: &PlaneQuadraticSystem, z0: [C64; 2], times: &[f64], tol: f64) -> Result<Trajectory> {
    check_times(times)?;
    let sys = *s;
    let mut ode = Dopri5::new(move |_, z| Ok(sys.rhs([z[0], z[1]]).to_vec()), times[0], z0.to_vec(), tol);
    let mut traj = Trajectory::new(Method::Numeric);
    let blank = BranchRecord { substeps: 0, candidates: 0, p_sign: 0, ambiguity: 0.0, residual: 0.0 };
    traj.push(times[0], z0, blank);
    for &t in &times[1..] {
        let before = ode.steps;
        match ode.advance_to(t) {
            Ok(z) => {
                let z = [z[0], z[1]];
                traj.push(t, z, BranchRecord { substeps: ode.steps - before, ..blank });
            }
            Err(e) => {
                traj.flag(ode.t(), &e);
                break;
            }
        }
    }
    Ok(traj)
}

/// Period of the solution through z0, searched up to `horizon`.
///
/// For purely imaginary a only integer multiples of 2 pi/|a| are tested.
pub fn plane_period(s: &PlaneQuadraticSystem, z0: [C64; 2], horizon: f64, tol: &Tolerances) -> Result<Option<PeriodEstimate>> {
    reduce_to_canonical(s, tol)?;
    let base = GaugeTransform { a: s.a }.base_period();
    let mut eval = |grid: &[f64]| -> Result<Vec<[C64; 2]>> {
        let tr = solve_quadratic_plane(s, z0, grid, tol)?;
        if !tr.is_complete(grid.len()) {
            let t = tr.singularities.first().map_or(f64::NAN, |s| s.t);
            return Err(Error::BlowUp { t });
        }
        Ok(tr.states)
    };
    Ok(detect_period(&mut eval, horizon, tol.period, base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, re};
    use crate::engine::compare;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn rc(rng: &mut ChaCha8Rng, r: f64) -> C64 {
        c(rng.gen_range(-r..r), rng.gen_range(-r..r))
    }

    fn random_spec(rng: &mut ChaCha8Rng) -> ReductionSpec {
        loop {
            let a = [[rc(rng, 1.0), rc(rng, 1.0)], [rc(rng, 1.0), rc(rng, 1.0)]];
            if det(&a).norm() > 0.1 {
                return ReductionSpec::new(a, rc(rng, 1.0), rc(rng, 1.0)).unwrap();
            }
        }
    }

    fn grid(n: usize, t1: f64) -> Vec<f64> {
        (0..n).map(|k| t1 * k as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn identity_copies_the_canonical_table() {
        let s = transform_linear(&ReductionSpec::canonical(ONE, ZERO)).unwrap();
        let want = [[re(3.0), ZERO, re(1.0)], [ZERO, re(1.0), re(3.0)]];
        assert_eq!(s.table, want);
        assert_eq!(conda_residual(&s), ZERO);
        let (a2, b2) = (c(0.3, -0.2), c(-1.1, 0.4));
        assert!(table_distance(&transform_linear(&ReductionSpec::canonical(a2, b2)).unwrap().table, &canonical_table(a2, b2)) < 1e-15);
    }

    #[test]
    fn decoupled_growth_violates_conda() {
        let s = PlaneQuadraticSystem::new(ZERO, [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO]]);
        assert_eq!(conda_residual(&s), ONE);
        assert!(matches!(reduce_to_canonical(&s, &tol()), Err(Error::NotReducible { .. })));
    }

    #[test]
    fn singular_transform() {
        assert!(matches!(ReductionSpec::new([[ONE, re(2.0)], [re(2.0), re(4.0)]], ONE, ONE), Err(Error::SingularTransform)));
    }

    #[test]
    fn transform_is_the_pushforward() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let r = random_spec(&mut rng);
            let s = transform_linear(&r).unwrap();
            for _ in 0..5 {
                let z = [rc(&mut rng, 1.0), rc(&mut rng, 1.0)];
                let push = r.from_canonical(r.canonical_rhs(r.to_canonical(z)));
                let got = s.quadratic(z);
                assert!((push[0] - got[0]).norm().max((push[1] - got[1]).norm()) < 1e-11 * (1.0 + s.scale()));
            }
        }
    }

    #[test]
    fn round_trip_through_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let r = random_spec(&mut rng);
            let s = transform_linear(&r).unwrap();
            assert!(conda_residual(&s).norm() < 1e-10 * conda_scale(&s));
            let red = reduce_with_report(&s, &tol()).unwrap();
            assert!(red.round_trip < 1e-9, "{}", red.round_trip);
        }
    }

    #[test]
    fn canonical_reduces_to_identity() {
        let (a2, b2) = (c(0.7, 0.1), c(-0.3, 0.5));
        let r = reduce_to_canonical(&transform_linear(&ReductionSpec::canonical(a2, b2)).unwrap(), &tol()).unwrap();
        assert!((r.a2 - a2).norm() < 1e-14 && (r.b2 - b2).norm() < 1e-14);
        assert!(mat_norm(&[[r.a[0][0] - 1.0, r.a[0][1]], [r.a[1][0], r.a[1][1] - 1.0]]) < 1e-14);
        // a2 = 0 makes both forms multiples of X^2
        let r = reduce_to_canonical(&PlaneQuadraticSystem::new(ZERO, canonical_table(ZERO, ONE)), &tol()).unwrap();
        assert!(r.a2.norm() < 1e-14 && (r.b2 - 1.0).norm() < 1e-14);
        // the zero system is the canonical one with a2 = b2 = 0
        let r = reduce_to_canonical(&PlaneQuadraticSystem::new(ZERO, [[ZERO; 3]; 2]), &tol()).unwrap();
        assert_eq!((r.a2, r.b2), (ZERO, ZERO));
    }

    #[test]
    fn proportional_forms_outside_the_family() {
        // Q1 = Q2 = z1^2 + z2^2: common zeros but first rows of M are not a2 I + w l^T
        let s = PlaneQuadraticSystem::new(ZERO, [[ONE, ONE, ZERO], [ONE, ONE, ZERO]]);
        assert_eq!(conda_residual(&s), ZERO);
        assert!(matches!(reduce_to_canonical(&s, &tol()), Err(Error::DegenerateForms)));
    }

    #[test]
    fn canonical_plane_matches_oracle() {
        let s = PlaneQuadraticSystem::new(ZERO, canonical_table(ZERO, ONE));
        let z0 = [re(0.1), re(0.2)];
        // y1 = y1(0)/(1 - 2t) has its pole at t = 1/2
        let times = grid(51, 0.45);
        let an = solve_quadratic_plane(&s, z0, &times, &tol()).unwrap();
        let nu = integrate_plane_numeric(&s, z0, &times, 1e-12).unwrap();
        assert!(an.is_complete(51), "{:?}", an.singularities);
        assert!(compare(&an, &nu).max_relative < 1e-7);
        let far = solve_quadratic_plane(&s, z0, &grid(51, 1.0), &tol()).unwrap();
        assert!((far.singularities[0].t - 0.5).abs() < 1e-3, "{:?}", far.singularities);
    }

    #[test]
    fn reshuffled_gauged_plane_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let r = random_spec(&mut rng);
            let mut s = transform_linear(&r).unwrap();
            s.a = rc(&mut rng, 1.0);
            let z0 = [rc(&mut rng, 0.2), rc(&mut rng, 0.2)];
            let times = grid(41, 1.0);
            let an = solve_quadratic_plane(&s, z0, &times, &tol()).unwrap();
            let nu = integrate_plane_numeric(&s, z0, &times, 1e-12).unwrap();
            let n = an.times.len().min(nu.times.len());
            assert!(n > 2);
            assert!(compare(&an, &nu).max_relative < 1e-7, "{}", compare(&an, &nu).max_relative);
        }
    }

    #[test]
    fn zero_data_stays_zero() {
        let s = transform_linear(&ReductionSpec::canonical(ONE, ONE)).unwrap();
        let tr = solve_quadratic_plane(&s, [ZERO, ZERO], &grid(11, 1.0), &tol()).unwrap();
        assert!(tr.is_complete(11));
        assert!(tr.states.iter().all(|z| z[0] == ZERO && z[1] == ZERO));
    }

    #[test]
    fn imaginary_gauge_is_isochronous() {
        let s = PlaneQuadraticSystem::new(c(0.0, 1.0), canonical_table(ONE, ONE));
        let p = plane_period(&s, [c(0.05, 0.02), c(-0.03, 0.04)], 4.0 * std::f64::consts::PI, &tol()).unwrap().unwrap();
        assert!((p.period / std::f64::consts::TAU - p.multiple.unwrap() as f64).abs() < 1e-12);
        assert!(p.deviation < 1e-6);
    }

    #[test]
    fn gauge_tends_to_identity() {
        let g = GaugeTransform { a: c(1e-9, 0.0) };
        assert!((g.tau(0.7) - 0.7).norm() < 1e-9);
        assert_eq!(GaugeTransform { a: c(0.0, 2.0) }.base_period(), Some(std::f64::consts::PI));
        assert!(PlaneQuadraticSystem::with_linear_part([[ONE, ONE], [ZERO, ONE]], [[ZERO; 3]; 2]).is_err());
    }
}
