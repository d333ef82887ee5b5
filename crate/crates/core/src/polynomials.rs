//! Monic polynomials with prescribed zero multiplicities, in both the zero
//! representation (x_n, mu_n) and the coefficient representation y_1..y_M of
//! z^M + sum y_m z^(M-m).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::complex::{norm_inf, C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Zero {
    pub value: C64,
    pub multiplicity: usize,
}

/// Zeros with multiplicities, ordered by non-increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiRootPolynomial {
    zeros: Vec<Zero>,
}

/// Distance below which two zeros count as colliding.
pub fn separation_threshold(a: C64, b: C64, tol: &Tolerances) -> f64 {
    tol.separation * 1f64.max(a.norm()).max(b.norm())
}

impl MultiRootPolynomial {
    pub fn new(zeros: Vec<Zero>, tol: &Tolerances) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::InvalidSystem("polynomial needs at least one zero".into()));
        }
        for z in &zeros {
            if z.multiplicity == 0 {
                return Err(Error::InvalidSystem("multiplicity must be positive".into()));
            }
            if !crate::complex::is_finite(z.value) {
                return Err(Error::InvalidSystem("zero is not finite".into()));
            }
        }
        if zeros.windows(2).any(|w| w[0].multiplicity < w[1].multiplicity) {
            return Err(Error::InvalidSystem("multiplicities must be non-increasing".into()));
        }
        for i in 0..zeros.len() {
            for j in i + 1..zeros.len() {
                let d = (zeros[i].value - zeros[j].value).norm();
                if d <= separation_threshold(zeros[i].value, zeros[j].value, tol) {
                    return Err(Error::Collision { distance: d });
                }
            }
        }
        Ok(MultiRootPolynomial { zeros })
    }

    pub fn from_values(values: &[C64], signature: &[usize], tol: &Tolerances) -> Result<Self> {
        if values.len() != signature.len() {
            return Err(Error::InvalidSystem("one multiplicity per zero".into()));
        }
        let zeros = values
            .iter()
            .zip(signature)
            .map(|(&value, &multiplicity)| Zero { value, multiplicity })
            .collect();
        Self::new(zeros, tol)
    }

    pub fn zeros(&self) -> &[Zero] {
        &self.zeros
    }

    pub fn values(&self) -> Vec<C64> {
        self.zeros.iter().map(|z| z.value).collect()
    }

    pub fn signature(&self) -> Vec<usize> {
        self.zeros.iter().map(|z| z.multiplicity).collect()
    }

    /// N, the number of distinct zeros.
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// M, the total degree.
    pub fn degree(&self) -> usize {
        self.zeros.iter().map(|z| z.multiplicity).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSet {
    pub y: Vec<C64>,
}

impl CoefficientSet {
    pub fn degree(&self) -> usize {
        self.y.len()
    }

    /// y_m, 1-based.
    pub fn get(&self, m: usize) -> C64 {
        self.y[m - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// mu = (3, 1)
    #[serde(rename = "i")]
    I,
    /// mu = (2, 2)
    #[serde(rename = "ii")]
    II,
}

impl CaseTag {
    pub fn signature(self) -> [usize; 2] {
        match self {
            CaseTag::I => [3, 1],
            CaseTag::II => [2, 2],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseTag::I => "i",
            CaseTag::II => "ii",
        }
    }
}

/// The two coefficient indices whose evolution is prescribed, in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SelectedPair {
    pub first: usize,
    pub second: usize,
    pub case: CaseTag,
}

impl SelectedPair {
    pub fn new(first: usize, second: usize, case: CaseTag) -> Result<Self> {
        if !(1..=4).contains(&first) || !(1..=4).contains(&second) || first >= second {
            return Err(Error::InvalidSystem(format!("bad coefficient pair ({first},{second})")));
        }
        Ok(SelectedPair { first, second, case })
    }

    /// Same pair given in either order.
    pub fn unordered(a: usize, b: usize, case: CaseTag) -> Result<Self> {
        Self::new(a.min(b), a.max(b), case)
    }

    pub fn indices(&self) -> [usize; 2] {
        [self.first, self.second]
    }

    pub fn complement(&self) -> [usize; 2] {
        let mut out = [0; 2];
        let mut k = 0;
        for m in 1..=4 {
            if m != self.first && m != self.second {
                out[k] = m;
                k += 1;
            }
        }
        out
    }
}

/// Descending-coefficient product: returns [1, c_1, ..., c_d] of prod (z - r)^mu.
pub fn expand_product(values: &[C64], signature: &[usize]) -> Vec<C64> {
    let mut poly = vec![ONE];
    for (&x, &mu) in values.iter().zip(signature) {
        for _ in 0..mu {
            poly.push(ZERO);
            for k in (1..poly.len()).rev() {
                let prev = poly[k - 1];
                poly[k] -= x * prev;
            }
        }
    }
    poly
}

pub fn coeffs_from_zeros(p: &MultiRootPolynomial) -> CoefficientSet {
    let full = expand_product(&p.values(), &p.signature());
    CoefficientSet { y: full[1..].to_vec() }
}

/// The closed forms for M = 4, N = 2.
pub fn case_coeffs(case: CaseTag, x1: C64, x2: C64) -> [C64; 4] {
    match case {
        CaseTag::I => [
            -(3.0 * x1 + x2),
            3.0 * x1 * (x1 + x2),
            -x1 * x1 * (x1 + 3.0 * x2),
            x1 * x1 * x1 * x2,
        ],
        CaseTag::II => {
            let s = x1 + x2;
            let p = x1 * x2;
            [-2.0 * s, x1 * x1 + x2 * x2 + 4.0 * p, -2.0 * p * s, p * p]
        }
    }
}

/// Jacobian dy_m/dx_n (M x N) of the coefficient map.
pub fn coeff_jacobian(values: &[C64], signature: &[usize]) -> DMatrix<C64> {
    let m_deg: usize = signature.iter().sum();
    let mut jac = DMatrix::zeros(m_deg, values.len());
    for n in 0..values.len() {
        let mut sig = signature.to_vec();
        sig[n] -= 1;
        let d = expand_product(values, &sig);
        let mu = signature[n] as f64;
        for m in 0..m_deg {
            jac[(m, n)] = -mu * d[m];
        }
    }
    jac
}

/// Horner evaluation of descending coefficients.
pub fn horner(desc: &[C64], z: C64) -> C64 {
    desc.iter().fold(ZERO, |acc, &a| acc * z + a)
}

/// All roots of sum desc[k] z^(d-k) (leading coefficient nonzero).
pub fn poly_roots(desc: &[C64]) -> Result<Vec<C64>> {
    let mut start = 0;
    while start < desc.len() && desc[start] == ZERO {
        start += 1;
    }
    let desc = &desc[start..];
    if desc.len() < 2 {
        return Ok(vec![]);
    }
    let lead = desc[0];
    let monic: Vec<C64> = desc.iter().map(|a| a / lead).collect();
    let d = monic.len() - 1;
    let roots = match d {
        1 => vec![-monic[1]],
        2 => {
            let (b, cc) = (monic[1], monic[2]);
            let disc = (b * b - 4.0 * cc).sqrt();
            let q = if (b.conj() * disc).re >= 0.0 { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
            if q == ZERO {
                vec![ZERO, ZERO]
            } else {
                vec![q, cc / q]
            }
        }
        _ => {
            let mut comp = DMatrix::<C64>::zeros(d, d);
            for k in 0..d {
                comp[(0, k)] = -monic[k + 1];
            }
            for k in 1..d {
                comp[(k, k - 1)] = ONE;
            }
            // the shifted QR stagnates on some symmetric spectra (z^4 + 1)
            match nalgebra::Schur::try_new(comp, f64::EPSILON, 10_000).and_then(|s| s.eigenvalues()) {
                Some(ev) => ev.iter().copied().collect(),
                None => aberth(&monic)?,
            }
        }
    };
    Ok(roots.into_iter().map(|r| polish(&monic, r)).collect())
}

/// Aberth-Ehrlich simultaneous iteration on a monic polynomial.
fn aberth(monic: &[C64]) -> Result<Vec<C64>> {
    let d = monic.len() - 1;
    let deriv: Vec<C64> = (0..d).map(|k| monic[k] * (d - k) as f64).collect();
    // Cauchy-type radius bound for the initial circle
    let radius = monic[1..].iter().map(|a| a.norm()).fold(0.0, f64::max) + 1.0;
    let mut z: Vec<C64> = (0..d)
        .map(|k| C64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut moved: f64 = 0.0;
        for i in 0..d {
            let p = horner(monic, z[i]);
            if p == ZERO {
                continue;
            }
            let ratio = p / horner(&deriv, z[i]);
            let repulsion: C64 = (0..d).filter(|&j| j != i).map(|j| ONE / (z[i] - z[j])).sum();
            let step = ratio / (ONE - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / 1f64.max(z[i].norm()));
        }
        if moved < 1e-15 {
            return Ok(z);
        }
    }
    if z.iter().all(|r| crate::complex::is_finite(*r)) {
        Ok(z)
    } else {
        Err(Error::NonConvergent { estimate: f64::NAN })
    }
}

fn polish(monic: &[C64], mut r: C64) -> C64 {
    let deriv: Vec<C64> = {
        let d = monic.len() - 1;
        (0..d).map(|k| monic[k] * (d - k) as f64).collect()
    };
    let mut best = horner(monic, r).norm();
    for _ in 0..3 {
        let dp = horner(&deriv, r);
        if dp == ZERO {
            break;
        }
        let cand = r - horner(monic, r) / dp;
        let val = horner(monic, cand).norm();
        if val < best {
            best = val;
            r = cand;
        } else {
            break;
        }
    }
    r
}

/// Diagnostics of one structured root recovery.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClusterReport {
    /// Largest distance of a raw root from its cluster center, relative to max(1,|center|).
    pub spread: f64,
    /// Weighted forward residual after refinement.
    pub residual: f64,
}

/// Forward residual max_m |y_m(x) - y_m| / S^m, S the root scale.
pub fn forward_residual(values: &[C64], signature: &[usize], y: &[C64]) -> f64 {
    let full = expand_product(values, signature);
    let scale = norm_inf(values).max(1e-300);
    let mut w = 1.0;
    let mut worst: f64 = 0.0;
    for m in 0..y.len() {
        w *= scale;
        worst = worst.max((full[m + 1] - y[m]).norm() / w);
    }
    worst
}

fn refine(values: &mut [C64], signature: &[usize], y: &[C64]) -> f64 {
    let mdeg = y.len();
    for _ in 0..30 {
        let scale = norm_inf(values).max(1e-300);
        let full = expand_product(values, signature);
        let jac = coeff_jacobian(values, signature);
        let mut a = jac.clone();
        let mut rhs = DVector::<C64>::zeros(mdeg);
        let mut w = 1.0;
        for m in 0..mdeg {
            w *= scale;
            for n in 0..values.len() {
                a[(m, n)] = jac[(m, n)] / w;
            }
            rhs[m] = (y[m] - full[m + 1]) / w;
        }
        let step = match a.svd(true, true).solve(&rhs, 1e-300) {
            Ok(s) => s,
            Err(_) => break,
        };
        let mut size: f64 = 0.0;
        for n in 0..values.len() {
            values[n] += step[n];
            size = size.max(step[n].norm());
        }
        if size <= 1e-15 * scale {
            break;
        }
    }
    forward_residual(values, signature, y)
}

/// All ways of splitting `count` raw roots into groups of the given sizes
/// (groups of equal size unordered). Capped, in deterministic order.
fn assignments(count: usize, sizes: &[usize], cap: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        remaining: &[usize],
        sizes: &[usize],
        prev_min: Option<(usize, usize)>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        if sizes.is_empty() {
            out.push(acc.clone());
            return;
        }
        let size = sizes[0];
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let group: Vec<usize> = combo.iter().map(|&k| remaining[k]).collect();
            let first = group[0];
            let ok = match prev_min {
                Some((psize, pmin)) if psize == size => first > pmin,
                _ => true,
            };
            if ok {
                let rest: Vec<usize> =
                    remaining.iter().copied().filter(|r| !group.contains(r)).collect();
                acc.push(group);
                rec(&rest, &sizes[1..], Some((size, first)), acc, out, cap);
                acc.pop();
            }
            // next combination
            let n = remaining.len();
            let mut i = size;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if combo[i] < n - size + i {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    return;
                }
            }
        }
    }
    let idx: Vec<usize> = (0..count).collect();
    let mut out = Vec::new();
    rec(&idx, sizes, None, &mut Vec::new(), &mut out, cap);
    out
}

/// Recover zeros with the declared signature from monic coefficients.
pub fn zeros_from_coeffs(
    c: &CoefficientSet,
    signature: &[usize],
    tol: &Tolerances,
) -> Result<MultiRootPolynomial> {
    zeros_from_coeffs_report(c, signature, tol).map(|(p, _)| p)
}

pub fn zeros_from_coeffs_report(
    cs: &CoefficientSet,
    signature: &[usize],
    tol: &Tolerances,
) -> Result<(MultiRootPolynomial, ClusterReport)> {
    let mut sig = signature.to_vec();
    sig.sort_by(|a, b| b.cmp(a));
    if sig.iter().sum::<usize>() != cs.degree() || sig.contains(&0) {
        return Err(Error::InvalidSystem("signature does not match the degree".into()));
    }
    let mut desc = vec![ONE];
    desc.extend_from_slice(&cs.y);
    let roots = poly_roots(&desc)?;

    let mut candidates: Vec<(f64, Vec<C64>)> = assignments(roots.len(), &sig, 5000)
        .into_iter()
        .map(|groups| {
            let mut spread: f64 = 0.0;
            let centers: Vec<C64> = groups
                .iter()
                .map(|g| {
                    let center = g.iter().map(|&k| roots[k]).sum::<C64>() / g.len() as f64;
                    for &k in g {
                        spread = spread.max((roots[k] - center).norm() / 1f64.max(center.norm()));
                    }
                    center
                })
                .collect();
            (spread, centers)
        })
        .collect();
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut best: Option<(f64, f64, Vec<C64>)> = None;
    for (spread, centers) in candidates.into_iter().take(8) {
        let mut values = centers;
        let residual = refine(&mut values, &sig, &cs.y);
        let better = match &best {
            None => true,
            Some((r, _, _)) => residual < *r,
        };
        if better {
            best = Some((residual, spread, values));
        }
        if residual < tol.structure * 1e-3 {
            break;
        }
    }
    let (residual, spread, values) = best.ok_or(Error::StructureMismatch { residual: f64::INFINITY })?;
    if !(residual <= tol.structure) {
        return Err(Error::StructureMismatch { residual });
    }
    // deterministic order: multiplicity descending, then (re, im)
    let mut zeros: Vec<Zero> = values
        .iter()
        .zip(&sig)
        .map(|(&value, &multiplicity)| Zero { value, multiplicity })
        .collect();
    zeros.sort_by(|a, b| {
        b.multiplicity
            .cmp(&a.multiplicity)
            .then(a.value.re.total_cmp(&b.value.re))
            .then(a.value.im.total_cmp(&b.value.im))
    });
    for i in 0..zeros.len() {
        for j in i + 1..zeros.len() {
            let d = (zeros[i].value - zeros[j].value).norm();
            if d <= separation_threshold(zeros[i].value, zeros[j].value, tol) {
                return Err(Error::Degenerate { distance: d });
            }
        }
    }
    Ok((MultiRootPolynomial { zeros }, ClusterReport { spread, residual }))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Reorder `candidates` within equal-multiplicity groups to follow `previous`.
pub fn track_roots(
    previous: &MultiRootPolynomial,
    candidates: &MultiRootPolynomial,
    tol: &Tolerances,
) -> Result<MultiRootPolynomial> {
    if previous.signature() != candidates.signature() {
        return Err(Error::InvalidSystem("signatures differ".into()));
    }
    let prev = previous.values();
    let cand = candidates.values();
    for set in [&prev, &cand] {
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                let d = (set[i] - set[j]).norm();
                if d <= separation_threshold(set[i], set[j], tol) {
                    return Err(Error::Collision { distance: d });
                }
            }
        }
    }
    let sig = previous.signature();
    let mut order: Vec<usize> = (0..cand.len()).collect();
    let mut start = 0;
    while start < sig.len() {
        let mut end = start + 1;
        while end < sig.len() && sig[end] == sig[start] {
            end += 1;
        }
        if end - start > 1 {
            // sort candidates lexicographically first, so ties resolve deterministically
            let mut group: Vec<usize> = (start..end).collect();
            group.sort_by(|&a, &b| {
                cand[a].re.total_cmp(&cand[b].re).then(cand[a].im.total_cmp(&cand[b].im))
            });
            let mut best: Option<(f64, Vec<usize>)> = None;
            for perm in permutations(&group) {
                let cost: f64 = perm.iter().enumerate().map(|(k, &ci)| (cand[ci] - prev[start + k]).norm()).sum();
                if best.as_ref().map_or(true, |(b, _)| cost < *b) {
                    best = Some((cost, perm));
                }
            }
            let perm = best.map(|b| b.1).unwrap_or(group);
            order[start..end].copy_from_slice(&perm);
        }
        start = end;
    }
    let zeros = order
        .iter()
        .enumerate()
        .map(|(k, &ci)| Zero { value: cand[ci], multiplicity: sig[k] })
        .collect();
    Ok(MultiRootPolynomial { zeros })
}

/// Drop trailing exact zeros of an ascending coefficient list.
pub fn trim_ascending(coeffs: &[C64]) -> &[C64] {
    let mut n = coeffs.len();
    while n > 0 && coeffs[n - 1] == ZERO {
        n -= 1;
    }
    &coeffs[..n]
}

/// Roots of sum asc[k] y^k.
pub fn roots_ascending(asc: &[C64]) -> Result<Vec<C64>> {
    let asc = trim_ascending(asc);
    let desc: Vec<C64> = asc.iter().rev().copied().collect();
    poly_roots(&desc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, re};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn expansion_examples() {
        let p = MultiRootPolynomial::from_values(&[re(1.0), re(2.0)], &[3, 1], &tol()).unwrap();
        assert_eq!(coeffs_from_zeros(&p).y, vec![re(-5.0), re(9.0), re(-7.0), re(2.0)]);
        let p = MultiRootPolynomial::from_values(&[re(1.0), re(-1.0)], &[2, 2], &tol()).unwrap();
        assert_eq!(coeffs_from_zeros(&p).y, vec![re(0.0), re(-2.0), re(0.0), re(1.0)]);
        let p = MultiRootPolynomial::from_values(&[re(0.0), c(0.7, -0.2)], &[3, 1], &tol()).unwrap();
        let y = coeffs_from_zeros(&p).y;
        assert_eq!(y[0], -c(0.7, -0.2));
        assert_eq!(y[1], ZERO);
        assert_eq!(y[2], ZERO);
        assert_eq!(y[3], ZERO);
    }

    #[test]
    fn closed_forms_agree() {
        let (x1, x2) = (c(0.3, -1.2), c(-2.0, 0.5));
        for case in [CaseTag::I, CaseTag::II] {
            let p = MultiRootPolynomial::from_values(&[x1, x2], &case.signature(), &tol()).unwrap();
            let y = coeffs_from_zeros(&p).y;
            let cf = case_coeffs(case, x1, x2);
            for m in 0..4 {
                assert!((y[m] - cf[m]).norm() <= 1e-12 * y[m].norm().max(1.0));
            }
        }
    }

    #[test]
    fn recover_examples() {
        let cs = CoefficientSet { y: vec![re(-5.0), re(9.0), re(-7.0), re(2.0)] };
        let p = zeros_from_coeffs(&cs, &[3, 1], &tol()).unwrap();
        assert!((p.zeros()[0].value - ONE).norm() < 1e-12);
        assert_eq!(p.zeros()[0].multiplicity, 3);
        assert!((p.zeros()[1].value - re(2.0)).norm() < 1e-12);

        let cs = CoefficientSet { y: vec![re(0.0), re(-2.0), re(0.0), re(1.0)] };
        let p = zeros_from_coeffs(&cs, &[2, 2], &tol()).unwrap();
        let v = p.values();
        assert!((v[0] - re(-1.0)).norm() < 1e-12 && (v[1] - ONE).norm() < 1e-12);

        let cs = CoefficientSet { y: vec![ZERO, ZERO, ZERO, ONE] };
        assert!(matches!(zeros_from_coeffs(&cs, &[3, 1], &tol()), Err(Error::StructureMismatch { .. })));
    }

    #[test]
    fn tracking_examples() {
        let t = tol();
        let prev = MultiRootPolynomial::from_values(&[ONE, re(-1.0)], &[2, 2], &t).unwrap();
        let cand = MultiRootPolynomial::from_values(&[re(-1.01), re(1.01)], &[2, 2], &t).unwrap();
        let out = track_roots(&prev, &cand, &t).unwrap();
        assert_eq!(out.values(), vec![re(1.01), re(-1.01)]);

        let prev = MultiRootPolynomial::from_values(&[ONE, re(2.0)], &[3, 1], &t).unwrap();
        let cand = MultiRootPolynomial::from_values(&[re(2.0), ONE], &[3, 1], &t).unwrap();
        assert_eq!(track_roots(&prev, &cand, &t).unwrap().values(), vec![re(2.0), ONE]);

        let near = MultiRootPolynomial { zeros: vec![Zero { value: ZERO, multiplicity: 2 }, Zero { value: re(1e-12), multiplicity: 2 }] };
        assert!(matches!(track_roots(&near, &near, &t), Err(Error::Collision { .. })));
    }

    #[test]
    fn collisions_rejected() {
        assert!(MultiRootPolynomial::from_values(&[ONE, ONE], &[2, 2], &tol()).is_err());
        assert!(MultiRootPolynomial::from_values(&[ONE, re(2.0)], &[1, 3], &tol()).is_err());
    }

    #[test]
    fn pair_complement() {
        let p = SelectedPair::new(1, 3, CaseTag::I).unwrap();
        assert_eq!(p.complement(), [2, 4]);
        assert!(SelectedPair::new(3, 1, CaseTag::I).is_err());
        assert_eq!(SelectedPair::unordered(4, 2, CaseTag::II).unwrap().indices(), [2, 4]);
    }

    #[test]
    fn assignment_counts() {
        assert_eq!(assignments(4, &[3, 1], 100).len(), 4);
        assert_eq!(assignments(4, &[2, 2], 100).len(), 3);
        assert_eq!(assignments(6, &[2, 2, 2], 1000).len(), 15);
        assert_eq!(assignments(3, &[1, 1, 1], 100).len(), 1);
    }

    #[test]
    fn roots_of_cubic() {
        // (z-1)(z-2)(z+3)
        let r = poly_roots(&[ONE, re(0.0), re(-7.0), re(6.0)]).unwrap();
        let mut v: Vec<f64> = r.iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        assert!((v[0] + 3.0).abs() < 1e-13 && (v[1] - 1.0).abs() < 1e-13 && (v[2] - 2.0).abs() < 1e-13);
    }
}
