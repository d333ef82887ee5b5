//! End-to-end solution of a catalog model: x(0) -> y(0), the driving system
//! solved analytically, then x(t) recovered algebraically with continuity
//! tracking. Also the numerical oracle and trajectory comparison.

pub mod recovery;

use serde::{Deserialize, Serialize};

use crate::catalog::ModelInstance;
use crate::complex::{all_finite, C64, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::ode::Dopri5;
use crate::polynomials::{separation_threshold, CaseTag};
use crate::solvers::{flow, Flow};

pub use recovery::{elimination_candidates, pair_residual, recover_zeros, Candidate, Recovery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Analytic,
    Numeric,
}

/// Root and branch choice at one output time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchRecord {
    /// internal steps taken since the previous output time
    pub substeps: usize,
    pub candidates: usize,
    /// sign of sqrt(y4) for the case (ii) pairs that need it, else 0
    pub p_sign: i8,
    /// smallest ratio (distance to chosen)/(distance to runner-up) seen; small means unambiguous
    pub ambiguity: f64,
    /// forward-map residual of the pair
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Singularity {
    pub t: f64,
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<[C64; 2]>,
    pub branch_log: Vec<BranchRecord>,
    pub singularities: Vec<Singularity>,
    pub method: Method,
}

impl Trajectory {
    pub(crate) fn new(method: Method) -> Self {
        Trajectory { times: Vec::new(), states: Vec::new(), branch_log: Vec::new(), singularities: Vec::new(), method }
    }

    pub(crate) fn push(&mut self, t: f64, x: [C64; 2], rec: BranchRecord) {
        self.times.push(t);
        self.states.push(x);
        self.branch_log.push(rec);
    }

    pub(crate) fn flag(&mut self, t: f64, e: &Error) {
        self.singularities.push(Singularity { t, kind: e.to_string() });
    }

    /// Did the trajectory reach every requested time?
    pub fn is_complete(&self, requested: usize) -> bool {
        self.singularities.is_empty() && self.times.len() == requested
    }

    pub fn max_residual(&self) -> f64 {
        self.branch_log.iter().map(|b| b.residual).fold(0.0, f64::max)
    }
}

pub(crate) fn check_times(times: &[f64]) -> Result<()> {
    if times.is_empty() || times.iter().any(|t| !t.is_finite()) || times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Config("output times must be finite and strictly increasing".into()));
    }
    Ok(())
}

/// Reject coinciding zeros and points where the right-hand side is singular.
pub fn check_admissible(inst: &ModelInstance, x0: [C64; 2], tol: &Tolerances) -> Result<()> {
    let d = (x0[0] - x0[1]).norm();
    if d <= separation_threshold(x0[0], x0[1], tol) {
        return Err(Error::Collision { distance: d });
    }
    inst.rhs(x0)?;
    Ok(())
}

const MAX_SUBSTEPS: usize = 200_000;

/// Time (flow clock) at which the driving flow leaves every bound, if that
/// happens within ten times |x| / |xdot| after `t`.
fn pole_ahead(speed_of: &dyn Fn([C64; 2]) -> Option<f64>, fl: &mut dyn Flow, x: [C64; 2], t: f64) -> Option<f64> {
    let speed = speed_of(x)?;
    let size = 1.0 + x[0].norm().max(x[1].norm());
    if !(speed > 0.0 && speed.is_finite()) {
        return None;
    }
    let y0 = fl.state_at(t).ok()?;
    let y0n = y0[0].norm().max(y0[1].norm()).max(1.0);
    let dt = size / speed / 16.0;
    // meromorphic flows come back finite past the pole, so look for a spike
    let mut peak = (t, y0n);
    for j in 1..=160 {
        let tj = t + j as f64 * dt;
        match fl.state_at(tj) {
            Ok(y) if all_finite(&y) => {
                let n = y[0].norm().max(y[1].norm());
                if n > peak.1 {
                    peak = (tj, n);
                }
            }
            _ => return Some(tj),
        }
    }
    (peak.1 > 1e3 * y0n).then_some(peak.0)
}

/// Analytic trajectory on the given grid; x0 is the state at times[0].
///
/// A singularity after times[0] ends the trajectory early with a flag; the
/// states reached so far are kept.
pub fn solve_trajectory(inst: &ModelInstance, x0: [C64; 2], times: &[f64], tol: &Tolerances) -> Result<Trajectory> {
    check_times(times)?;
    check_admissible(inst, x0, tol)?;
    let y0 = inst.driving_state(x0);
    let mut fl = flow(&inst.system, y0, tol)?;
    let swap = inst.first > inst.second;
    let speed_of = |x: [C64; 2]| inst.rhs(x).ok().map(|v| v[0].norm().max(v[1].norm()));
    march(&mut *fl, inst.case, inst.pair, swap, x0, times, tol, &speed_of, true)
}

/// Follow the zeros behind a driving flow by nearest-candidate recovery.
///
/// `fl` runs on the clock t - times[0]; its state is (y_first, y_second), so
/// `swap` says whether it must be reversed to the (lo, hi) order of `pair`.
/// `speed_of` bounds |xdot| and sets the substep. With `stop_on_collision`
/// coinciding zeros end the trajectory.
#[allow(clippy::too_many_arguments)]
pub(crate) fn march(
    fl: &mut dyn Flow,
    case: CaseTag,
    pair: (usize, usize),
    swap: bool,
    x0: [C64; 2],
    times: &[f64],
    tol: &Tolerances,
    speed_of: &dyn Fn([C64; 2]) -> Option<f64>,
    stop_on_collision: bool,
) -> Result<Trajectory> {
    check_times(times)?;
    let t0 = times[0];
    let to_pair = |yd: [C64; 2]| if swap { [yd[1], yd[0]] } else { yd };

    let mut traj = Trajectory::new(Method::Analytic);
    let start = recover_zeros(case, pair, to_pair(fl.initial()), x0, tol.recovery)?;
    traj.push(t0, x0, BranchRecord { substeps: 0, candidates: start.candidates, p_sign: start.p_sign, ambiguity: 0.0, residual: start.residual });

    let mut x = x0;
    let mut t = t0;
    let mut sep = start.separation;
    let mut total = 0usize;
    for &target in &times[1..] {
        let mut rec = BranchRecord { substeps: 0, candidates: 0, p_sign: 0, ambiguity: 0.0, residual: 0.0 };
        let outcome: Result<()> = (|| {
            while t < target {
                let speed = speed_of(x).unwrap_or(f64::INFINITY);
                let mut h = target - t;
                if speed.is_finite() && speed > 0.0 && sep.is_finite() {
                    h = h.min(0.2 * sep / speed);
                }
                // shrink the substep until the nearest candidate is unambiguous
                let (tn, r, ratio) = loop {
                    if h < 1e-12 * (1.0 + t.abs()) {
                        return Err(Error::RecoveryBranchLoss { t });
                    }
                    let tn = if target - t - h < 1e-12 * (1.0 + target.abs()) { target } else { t + h };
                    total += 1;
                    if total > MAX_SUBSTEPS {
                        return Err(Error::RecoveryBranchLoss { t });
                    }
                    let y = fl.state_at(tn - t0)?;
                    let r = recover_zeros(case, pair, to_pair(y), x, tol.recovery)?;
                    let ratio = r.distance / r.runner_up;
                    if ratio <= 0.5 {
                        break (tn, r, ratio);
                    }
                    h /= 4.0;
                };
                let d = (r.x[0] - r.x[1]).norm();
                if stop_on_collision && d <= separation_threshold(r.x[0], r.x[1], tol) {
                    return Err(Error::Collision { distance: d });
                }
                rec.substeps += 1;
                rec.candidates = r.candidates;
                rec.p_sign = r.p_sign;
                rec.ambiguity = rec.ambiguity.max(ratio);
                rec.residual = rec.residual.max(r.residual);
                x = r.x;
                sep = r.separation;
                t = tn;
            }
            Ok(())
        })();
        match outcome {
            Ok(()) => traj.push(target, x, rec),
            Err(e) => {
                // losing the branch just before the driving flow explodes is a pole
                let e = match e {
                    Error::RecoveryBranchLoss { .. } | Error::NoRealizableRoot | Error::StepCollapse { .. } => {
                        match pole_ahead(speed_of, fl, x, t - t0) {
                            Some(tp) => Error::BlowUp { t: tp + t0 },
                            None => e,
                        }
                    }
                    e => e,
                };
                traj.flag(t, &e);
                break;
            }
        }
    }
    Ok(traj)
}

/// Dormand-Prince integration of the model's right-hand side.
pub fn integrate_numeric(inst: &ModelInstance, x0: [C64; 2], times: &[f64], tol: f64) -> Result<Trajectory> {
    check_times(times)?;
    inst.rhs(x0)?;
    let f = inst.clone();
    let mut ode = Dopri5::new(move |_, y| f.rhs([y[0], y[1]]).map(|v| v.to_vec()), times[0], x0.to_vec(), tol);
    let mut traj = Trajectory::new(Method::Numeric);
    let blank = BranchRecord { substeps: 0, candidates: 0, p_sign: 0, ambiguity: 0.0, residual: 0.0 };
    traj.push(times[0], x0, blank);
    for &t in &times[1..] {
        let before = ode.steps;
        match ode.advance_to(t) {
            Ok(y) => {
                let x = [y[0], y[1]];
                traj.push(t, x, BranchRecord { substeps: ode.steps - before, ..blank });
            }
            Err(e) => {
                traj.flag(ode.t(), &e);
                break;
            }
        }
    }
    Ok(traj)
}

/// Knowing the first singular time, from either trajectory.
pub fn first_singularity(a: &Trajectory) -> Option<f64> {
    a.singularities.first().map(|s| s.t)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub times: Vec<f64>,
    /// max_n |a_n - b_n| / max(1, |b|) at each shared time
    pub per_time: Vec<f64>,
    pub max_relative: f64,
    /// the labels of a are swapped relative to b
    pub permutation_mismatch: bool,
}

fn rel_dev(a: [C64; 2], b: [C64; 2]) -> f64 {
    let scale = b[0].norm().max(b[1].norm()).max(1.0);
    (a[0] - b[0]).norm().max((a[1] - b[1]).norm()) / scale
}

/// Analytic trajectory checked against the numerical oracle on [0, horizon].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRun {
    /// t1, or a shortened horizon ending before the first singularity
    pub horizon: f64,
    pub max_relative: f64,
    pub permutation_mismatch: bool,
    /// the singularity that forced the shortening
    pub singularity: Option<Singularity>,
}

/// Compare [`solve_trajectory`] with [`integrate_numeric`] on `samples` points
/// of [0, t1]. If either run stops early the horizon is cut to 80% of the
/// earliest stop, up to eight times.
///
/// The oracle is also run at a tenfold tighter tolerance. A pole passing very
/// close to the real axis costs a double-precision integrator about
/// eps/d^2, and no tolerance recovers it; the first time the two oracle runs
/// split by more than 1% of `trajectory_match` counts as a near singularity
/// and cuts the horizon the same way. So does a gap |x1 - x2| below
/// `cluster_radius`, where recovering labelled zeros costs about eps/gap.
pub fn oracle_run(inst: &ModelInstance, x0: [C64; 2], t1: f64, samples: usize, tol: &Tolerances) -> Result<OracleRun> {
    let mut horizon = t1;
    let mut singularity = None;
    for _ in 0..8 {
        let times: Vec<f64> = (0..samples).map(|k| horizon * k as f64 / (samples - 1) as f64).collect();
        let an = solve_trajectory(inst, x0, &times, tol)?;
        let nu = integrate_numeric(inst, x0, &times, 1e-12)?;
        let mut first = an.singularities.iter().chain(nu.singularities.iter()).min_by(|a, b| a.t.total_cmp(&b.t)).cloned();
        let cluster = an.states.iter().position(|x| (x[0] - x[1]).norm() < tol.cluster_radius * 1f64.max(x[0].norm().max(x[1].norm())));
        if let Some(i) = cluster.filter(|&i| first.as_ref().is_none_or(|s| an.times[i] < s.t)) {
            first = Some(Singularity { t: an.times[i], kind: "zeros within the cluster radius".into() });
        } else if an.is_complete(samples) && nu.is_complete(samples) {
            let fine = integrate_numeric(inst, x0, &times, 1e-13)?;
            let split = compare(&nu, &fine);
            let bad = split.per_time.iter().position(|&d| d > 1e-2 * tol.trajectory_match);
            match bad {
                None => {
                    let rep = compare(&an, &nu);
                    return Ok(OracleRun { horizon, max_relative: rep.max_relative, permutation_mismatch: rep.permutation_mismatch, singularity });
                }
                Some(i) => first = Some(Singularity { t: split.times[i], kind: "oracle unresolved (near singularity)".into() }),
            }
        }
        let stop = first.as_ref().map_or(horizon, |s| s.t);
        if singularity.is_none() {
            singularity = first;
        }
        horizon = 0.8 * stop.min(horizon);
    }
    Err(Error::BlowUp { t: horizon })
}

/// Cubic Lagrange interpolation of a trajectory at t (inside its time range).
pub fn interpolate(tr: &Trajectory, t: f64) -> Option<[C64; 2]> {
    let n = tr.times.len();
    if n == 0 || t < tr.times[0] || t > tr.times[n - 1] {
        return None;
    }
    if let Some(i) = tr.times.iter().position(|&s| s == t) {
        return Some(tr.states[i]);
    }
    if n < 4 {
        return None;
    }
    let k = tr.times.partition_point(|&s| s < t);
    let lo = k.saturating_sub(2).min(n - 4);
    let idx = lo..lo + 4;
    let mut out = [ZERO; 2];
    for i in idx.clone() {
        let mut w = 1.0;
        for j in idx.clone() {
            if j != i {
                w *= (t - tr.times[j]) / (tr.times[i] - tr.times[j]);
            }
        }
        out[0] += tr.states[i][0] * w;
        out[1] += tr.states[i][1] * w;
    }
    Some(out)
}

/// Deviation of a from b over the times of a that b covers.
pub fn compare(a: &Trajectory, b: &Trajectory) -> CompareReport {
    let mut times = Vec::new();
    let mut per_time = Vec::new();
    let mut swapped: f64 = 0.0;
    for (i, &t) in a.times.iter().enumerate() {
        let Some(bs) = interpolate(b, t) else { continue };
        let s = a.states[i];
        times.push(t);
        per_time.push(rel_dev(s, bs));
        swapped = swapped.max(rel_dev([s[1], s[0]], bs));
    }
    let max_relative = per_time.iter().copied().fold(0.0, f64::max);
    let permutation_mismatch = max_relative > 1e-6 && swapped < 1e-6;
    CompareReport { times, per_time, max_relative, permutation_mismatch }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodEstimate {
    pub period: f64,
    /// period / base, when a base period was supplied and the ratio is an integer
    pub multiple: Option<u32>,
    /// uniform relative deviation |x(t + T) - x(t)| over the probe window
    pub deviation: f64,
}

/// Evaluate a trajectory along a strictly increasing grid starting at 0.
pub type GridEval<'a> = dyn FnMut(&[f64]) -> Result<Vec<[C64; 2]>> + 'a;

const PROBE: usize = 128;

fn window_deviation(states: &[[C64; 2]], shift: usize, window: usize) -> f64 {
    let scale = states[..=window].iter().map(|s| s[0].norm().max(s[1].norm())).fold(1.0, f64::max);
    (0..=window).map(|k| (states[k + shift][0] - states[k][0]).norm().max((states[k + shift][1] - states[k][1]).norm())).fold(0.0, f64::max) / scale
}

/// Smallest period within the horizon.
///
/// With a base period (2 pi/|a| for a linear gauge term) only its integer
/// multiples are tested; otherwise the grid is scanned and the best shift refined.
pub fn detect_period(eval: &mut GridEval<'_>, horizon: f64, tol: f64, base: Option<f64>) -> Option<PeriodEstimate> {
    match base {
        Some(b) if b > 0.0 && b <= horizon => {
            let q_max = (horizon / b + 1e-9).floor() as usize;
            let h = b / PROBE as f64;
            let grid: Vec<f64> = (0..=(q_max + 1) * PROBE).map(|k| k as f64 * h).collect();
            let states = eval(&grid).ok()?;
            for q in 1..=q_max {
                if states.len() <= (q + 1) * PROBE {
                    return None;
                }
                let dev = window_deviation(&states, q * PROBE, PROBE);
                if dev < tol {
                    return Some(PeriodEstimate { period: q as f64 * b, multiple: Some(q as u32), deviation: dev });
                }
            }
            None
        }
        _ => scan_period(eval, horizon, tol),
    }
}

fn scan_period(eval: &mut GridEval<'_>, horizon: f64, tol: f64) -> Option<PeriodEstimate> {
    const N: usize = 4096;
    let h = horizon / N as f64;
    let window = PROBE.min(N / 8);
    let grid: Vec<f64> = (0..=N + window).map(|k| k as f64 * h).collect();
    let states = eval(&grid).ok()?;
    if states.len() < grid.len() {
        return None;
    }
    let d: Vec<f64> = (1..=N).map(|j| window_deviation(&states, j, window)).collect();
    for j in 1..d.len().saturating_sub(1) {
        if d[j] <= d[j - 1] && d[j] <= d[j + 1] && d[j] < 1e-2 {
            // refine the shift on a window of exact evaluations
            let mut lo = (j as f64) * h;
            let mut hi = (j as f64 + 2.0) * h;
            let mut dev_at = |period: f64| -> f64 {
                let w = window as f64 * h;
                let pts: Vec<f64> = (0..=window).map(|k| k as f64 * w / window as f64).collect();
                let mut all = pts.clone();
                all.extend(pts.iter().map(|t| t + period));
                let mut idx: Vec<usize> = (0..all.len()).collect();
                idx.sort_by(|&a, &b| all[a].total_cmp(&all[b]));
                let sorted: Vec<f64> = idx.iter().map(|&i| all[i]).collect();
                if sorted.windows(2).any(|p| p[1] <= p[0]) {
                    return f64::INFINITY;
                }
                let Ok(vals) = eval(&sorted) else { return f64::INFINITY };
                if vals.len() < sorted.len() {
                    return f64::INFINITY;
                }
                let mut back = vec![[ZERO; 2]; all.len()];
                for (pos, &i) in idx.iter().enumerate() {
                    back[i] = vals[pos];
                }
                let scale = back[..=window].iter().map(|s| s[0].norm().max(s[1].norm())).fold(1.0, f64::max);
                (0..=window).map(|k| (back[k + window + 1][0] - back[k][0]).norm().max((back[k + window + 1][1] - back[k][1]).norm())).fold(0.0, f64::max) / scale
            };
            let g = 0.618_033_988_749_894_8;
            for _ in 0..60 {
                let a = hi - g * (hi - lo);
                let b = lo + g * (hi - lo);
                if dev_at(a) < dev_at(b) {
                    hi = b;
                } else {
                    lo = a;
                }
            }
            let period = 0.5 * (lo + hi);
            let dev = dev_at(period);
            if dev < tol {
                return Some(PeriodEstimate { period, multiple: None, deviation: dev });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{params, Catalog};
    use crate::complex::{c, re};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn grid(n: usize, t1: f64) -> Vec<f64> {
        (0..n).map(|k| t1 * k as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn free_motion_when_b_vanishes() {
        let m = Catalog::builtin().get("i12d").unwrap();
        let a = c(0.3, -0.2);
        let inst = m.instantiate(&params(&[("a", a), ("b", ZERO)])).unwrap();
        let x0 = [c(0.1, 0.0), c(0.2, 0.0)];
        let tr = solve_trajectory(&inst, x0, &grid(11, 1.0), &tol()).unwrap();
        assert!(tr.is_complete(11));
        for (t, x) in tr.times.iter().zip(&tr.states) {
            assert!((x[0] - (x0[0] + a * *t)).norm() < 1e-12 && (x[1] - (x0[1] + a * *t)).norm() < 1e-12);
        }
    }

    #[test]
    fn elliptic_model_matches_oracle() {
        let m = Catalog::builtin().get("i12d").unwrap();
        let inst = m.instantiate(&params(&[("a", re(1.0)), ("b", re(1.0))])).unwrap();
        let x0 = [re(0.1), re(0.2)];
        // this real solution has a pole near t = 0.2774
        let times = grid(101, 0.25);
        let an = solve_trajectory(&inst, x0, &times, &tol()).unwrap();
        let nu = integrate_numeric(&inst, x0, &times, 1e-11).unwrap();
        assert!(an.is_complete(101) && nu.is_complete(101), "{:?}", an.singularities);
        let rep = compare(&an, &nu);
        assert!(rep.max_relative < 1e-7, "{}", rep.max_relative);
        assert!(an.max_residual() < 1e-8);
        assert_eq!(an.branch_log.len(), an.times.len());
    }

    #[test]
    fn elliptic_pole_is_flagged_as_blow_up() {
        let m = Catalog::builtin().get("i12d").unwrap();
        let inst = m.instantiate(&params(&[("a", re(1.0)), ("b", re(1.0))])).unwrap();
        let an = solve_trajectory(&inst, [re(0.1), re(0.2)], &grid(101, 1.0), &tol()).unwrap();
        let s = &an.singularities[0];
        assert!(s.t > 0.26 && s.t < 0.278, "{s:?}");
        assert!(s.kind.contains("movable singularity near t = 0.277"), "{s:?}");
    }

    #[test]
    fn case_ii_a1_model_matches_oracle() {
        let m = Catalog::builtin().get("ii12a").unwrap();
        let inst = m.instantiate(&params(&[("a", c(0.0, 1.0)), ("b", re(0.01))])).unwrap();
        let x0 = [c(0.1, 0.05), c(-0.2, 0.1)];
        let times = grid(51, 1.0);
        let an = solve_trajectory(&inst, x0, &times, &tol()).unwrap();
        let nu = integrate_numeric(&inst, x0, &times, 1e-11).unwrap();
        assert!(an.is_complete(51));
        assert!(!compare(&an, &nu).permutation_mismatch);
        assert!(compare(&an, &nu).max_relative < 1e-7);
    }

    #[test]
    fn compare_detects_label_swap() {
        let m = Catalog::builtin().get("ii12a").unwrap();
        let inst = m.instantiate(&params(&[("a", c(0.0, 1.0)), ("b", re(0.01))])).unwrap();
        let times = grid(21, 1.0);
        let a = integrate_numeric(&inst, [c(0.1, 0.05), c(-0.2, 0.1)], &times, 1e-11).unwrap();
        assert_eq!(compare(&a, &a).max_relative, 0.0);
        let mut b = a.clone();
        for s in &mut b.states {
            s.swap(0, 1);
        }
        let rep = compare(&a, &b);
        assert!(rep.permutation_mismatch && rep.max_relative > 1e-3);
    }

    #[test]
    fn numeric_oracle_flags_blow_up() {
        // xdot = x^2 from a single-component A1 limit: i12a with b = 0 is linear, so use the raw ODE
        let mut ode = Dopri5::new(|_, y| Ok(vec![y[0] * y[0]]), 0.0, vec![re(1.0)], 1e-10);
        assert!(matches!(ode.advance_to(2.0), Err(Error::StepCollapse { .. })));
    }

    #[test]
    fn oracle_self_convergence() {
        let m = Catalog::builtin().get("i13a").unwrap();
        let inst = m.instantiate(&params(&[("a", c(0.2, 0.3)), ("b", c(-0.4, 0.1))])).unwrap();
        let times = grid(11, 1.0);
        let x0 = [c(0.3, 0.1), c(-0.2, 0.4)];
        let coarse = integrate_numeric(&inst, x0, &times, 1e-8).unwrap();
        let fine = integrate_numeric(&inst, x0, &times, 1e-11).unwrap();
        assert!(compare(&coarse, &fine).max_relative < 1e-7);
    }

    #[test]
    fn inadmissible_start() {
        let m = Catalog::builtin().get("i12d").unwrap();
        let inst = m.instantiate(&params(&[("a", re(1.0)), ("b", re(1.0))])).unwrap();
        assert!(matches!(solve_trajectory(&inst, [re(0.3), re(0.3)], &grid(3, 1.0), &tol()), Err(Error::Collision { .. })));
        assert!(solve_trajectory(&inst, [re(0.1), re(0.2)], &[0.0, 0.0], &tol()).is_err());
    }

    #[test]
    fn rotation_period() {
        let mut eval = |ts: &[f64]| -> Result<Vec<[C64; 2]>> { Ok(ts.iter().map(|&t| [c(0.0, t).exp(), c(0.0, -t).exp() * 0.5]).collect()) };
        let p = detect_period(&mut eval, 20.0, 1e-9, Some(std::f64::consts::TAU)).unwrap();
        assert_eq!(p.multiple, Some(1));
        let p = detect_period(&mut eval, 20.0, 1e-9, None).unwrap();
        assert!((p.period - std::f64::consts::TAU).abs() < 1e-6, "{}", p.period);
        let mut grow = |ts: &[f64]| -> Result<Vec<[C64; 2]>> { Ok(ts.iter().map(|&t| [re(t.exp()), ZERO]).collect()) };
        assert!(detect_period(&mut grow, 20.0, 1e-6, None).is_none());
    }
}
