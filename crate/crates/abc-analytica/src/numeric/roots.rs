//! Simultaneous polynomial root finding (Aberth--Ehrlich iteration) with
//! multiplicity recovery by single-linkage clustering.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative backward-error target for accepting an iterate as converged.
const BACKWARD_ERROR_TARGET: f64 = 1e-13;

/// Single-linkage cluster radius, relative to the root scale. Inputs in
/// the test corpus are constructed with known multiplicities; clustered
/// iterates of a multiple root are averaged, which cancels the leading
/// error term.
pub const CLUSTER_RADIUS: f64 = 1e-6;

/// All roots of the polynomial with the given coefficients (index = power),
/// with multiplicity, found by Aberth--Ehrlich iteration started from a
/// perturbed circle. An m-fold root smears its iterates over a ring of
/// radius roughly eps^(1/m), so candidate clusters are polished by Newton
/// on the (m-1)-th derivative, where the root is simple; the polish is
/// kept only when the lower-order derivatives do vanish there. Multiple
/// roots come back as repeated cluster centroids.
pub fn poly_roots(coeffs: &[Complex64], max_sweeps: usize) -> Result<Vec<Complex64>> {
    let mut coeffs: Vec<Complex64> = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    assert!(
        coeffs.len() >= 2,
        "poly_roots needs degree >= 1 with nonzero leading coefficient"
    );

    // Exact zero roots split off verbatim.
    let zero_mult = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = &coeffs[zero_mult..];
    let mut roots = vec![Complex64::ZERO; zero_mult];
    if reduced.len() >= 2 {
        roots.extend(aberth(reduced, max_sweeps)?);
    }

    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let mut out = Vec::with_capacity(roots.len());
    for group in cluster_indices(&roots, 100.0 * CLUSTER_RADIUS * scale) {
        if group.len() == 1 {
            out.push(roots[group[0]]);
            continue;
        }
        let m = group.len();
        let centroid =
            group.iter().map(|&i| roots[i]).sum::<Complex64>() / m as f64;
        match polish_multiple_root(&coeffs, centroid, m) {
            Some(refined) => out.extend(std::iter::repeat(refined).take(m)),
            None => {
                // spurious merge of nearby simple roots: fall back to the
                // contract cluster radius within the group
                let members: Vec<Complex64> = group.iter().map(|&i| roots[i]).collect();
                for (c, k) in cluster(&members, CLUSTER_RADIUS * scale) {
                    out.extend(std::iter::repeat(c).take(k));
                }
            }
        }
    }
    Ok(out)
}

/// Newton-polish a candidate m-fold root on the (m-1)-th derivative and
/// verify that every lower derivative vanishes there (relative to its own
/// coefficient majorant). Returns None when the cluster is not actually
/// an m-fold root.
fn polish_multiple_root(coeffs: &[Complex64], start: Complex64, m: usize) -> Option<Complex64> {
    let mut ds: Vec<Vec<Complex64>> = vec![coeffs.to_vec()];
    for _ in 1..m.min(coeffs.len()) {
        let last = ds.last().unwrap();
        if last.len() < 2 {
            return None;
        }
        ds.push(
            last.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        );
    }
    let horner = |cs: &[Complex64], x: Complex64| -> (Complex64, f64) {
        let mut acc = Complex64::ZERO;
        let mut maj = 0.0f64;
        for c in cs.iter().rev() {
            acc = acc * x + c;
            maj = maj * x.norm() + c.norm();
        }
        (acc, maj)
    };

    let q = &ds[m - 1];
    if q.len() < 2 {
        return None;
    }
    let dq: Vec<Complex64> = q
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    let mut z = start;
    for _ in 0..40 {
        let (value, maj) = horner(q, z);
        if value.norm() <= 1e-15 * maj.max(f64::MIN_POSITIVE) {
            break;
        }
        let (slope, _) = horner(&dq, z);
        if slope.norm() == 0.0 {
            return None;
        }
        let step = value / slope;
        z -= step;
        if !z.re.is_finite() || !z.im.is_finite() {
            return None;
        }
    }
    // drifted away from the cluster: not the root we were polishing
    if (z - start).norm() > 1e3 * CLUSTER_RADIUS * (1.0 + start.norm()) {
        return None;
    }
    for d in ds.iter().take(m) {
        let (value, maj) = horner(d, z);
        if value.norm() > 1e-7 * maj.max(f64::MIN_POSITIVE) {
            return None;
        }
    }
    Some(z)
}

/// Group points by single-linkage at the given radius; returns
/// `(centroid, count)` pairs ordered by first appearance.
pub fn cluster(points: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    cluster_indices(points, radius)
        .into_iter()
        .map(|group| {
            let centroid =
                group.iter().map(|&i| points[i]).sum::<Complex64>() / group.len() as f64;
            (centroid, group.len())
        })
        .collect()
}

/// Single-linkage clusters as member index lists, ordered by first
/// appearance.
pub fn cluster_indices(points: &[Complex64], radius: f64) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; points.len()];
    let mut groups = Vec::new();
    for i in 0..points.len() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut group = vec![i];
        let mut frontier = vec![i];
        while let Some(j) = frontier.pop() {
            for k in 0..points.len() {
                if !assigned[k] && (points[j] - points[k]).norm() <= radius {
                    assigned[k] = true;
                    group.push(k);
                    frontier.push(k);
                }
            }
        }
        group.sort_unstable();
        groups.push(group);
    }
    groups
}

fn aberth(coeffs: &[Complex64], max_sweeps: usize) -> Result<Vec<Complex64>> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let deriv: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();

    // Fujiwara root bound; unlike the Cauchy bound it stays sane when the
    // leading coefficient is tiny (truncated exponentials and the like).
    let fujiwara = 2.0
        * coeffs[..degree]
            .iter()
            .enumerate()
            .map(|(k, c)| (c / lead).norm().powf(1.0 / (degree - k) as f64))
            .fold(0.0, f64::max);
    let radius = (0.7 * fujiwara).max(1e-3);
    let start = |j: usize| {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / degree as f64 + 0.41;
        radius * Complex64::new(theta.cos(), theta.sin())
    };
    let mut z: Vec<Complex64> = (0..degree).map(start).collect();

    let eval = |cs: &[Complex64], x: Complex64| -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in cs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    // Majorant sum |a_k| |x|^k, the natural backward-error scale.
    let majorant = |x: Complex64| -> f64 {
        let ax = x.norm();
        let mut acc = 0.0f64;
        for c in coeffs.iter().rev() {
            acc = acc * ax + c.norm();
        }
        acc
    };

    // Multiple roots stall: the iterates of an m-fold root ring the true
    // location at the attainable-accuracy scale and corrections stop
    // shrinking while residuals sit far below the acceptance threshold.
    // Track the correction sizes and exit once they plateau with good
    // residuals; clustering recovers the multiplicities afterwards.
    let mut prev_max_step = f64::INFINITY;
    let mut stalled_sweeps = 0usize;
    for _sweep in 0..max_sweeps {
        let mut converged = true;
        let mut max_step = 0.0f64;
        for j in 0..degree {
            let pj = eval(coeffs, z[j]);
            if pj.norm() <= BACKWARD_ERROR_TARGET * majorant(z[j]) {
                continue;
            }
            converged = false;
            let dj = eval(&deriv, z[j]);
            let newton = if dj.norm() == 0.0 {
                // flat spot: nudge off it
                Complex64::new(1e-8, 1e-8)
            } else {
                pj / dj
            };
            let mut repulsion = Complex64::ZERO;
            for k in 0..degree {
                if k != j {
                    let diff = z[j] - z[k];
                    if diff.norm() > 0.0 {
                        repulsion += 1.0 / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() < 1e-300 { newton } else { newton / denom };
            z[j] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[j].norm()));
            if !z[j].re.is_finite() || !z[j].im.is_finite() {
                // restart this iterate alone, at a fresh angle
                z[j] = 0.83 * start(j) + radius * Complex64::new(0.01, 0.017) * (j as f64 + 1.0);
            }
        }
        if converged {
            return Ok(z);
        }
        if max_step > 0.5 * prev_max_step {
            stalled_sweeps += 1;
        } else {
            stalled_sweeps = 0;
        }
        prev_max_step = max_step;
        if stalled_sweeps >= 16 {
            let ok = z
                .iter()
                .all(|&x| eval(coeffs, x).norm() <= 1e-12 * majorant(x));
            if ok {
                return Ok(z);
            }
        }
    }

    let residuals: Vec<f64> = z
        .iter()
        .map(|&x| eval(coeffs, x).norm() / majorant(x))
        .collect();
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    // Accept a finished sweep budget whose residuals are still far inside
    // the contract bound.
    if worst <= 1e-10 {
        return Ok(z);
    }
    Err(Error::RootsNotConverged {
        sweeps: max_sweeps,
        worst_residual: worst,
        best: z,
        residuals,
    })
}
