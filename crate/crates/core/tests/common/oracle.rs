//! Deliberately naive reference implementations. Nothing here calls into the
//! metric code under test.

use std::collections::BTreeMap;

pub fn edges(x: &[f64], y: &[f64], bins: usize) -> Vec<f64> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in x.iter().chain(y) {
        if v < lo {
            lo = v;
        }
        if v > hi {
            hi = v;
        }
    }
    let w = (hi - lo) / bins as f64;
    let mut e: Vec<f64> = (0..bins).map(|i| lo + i as f64 * w).collect();
    e.push(hi);
    e
}

/// Linear scan over bins; the last bin is closed.
pub fn bin_counts(values: &[f64], edges: &[f64]) -> Vec<f64> {
    let bins = edges.len() - 1;
    let mut counts = vec![0.0; bins];
    for &v in values {
        let mut slot = bins - 1;
        for j in 0..bins - 1 {
            if v < edges[j + 1] {
                slot = j;
                break;
            }
        }
        counts[slot] += 1.0;
    }
    counts
}

pub fn to_probs(counts: &[f64]) -> Vec<f64> {
    let total: f64 = counts.iter().sum();
    counts.iter().map(|c| c / total).collect()
}

pub fn kl(p: &[f64], q: &[f64]) -> f64 {
    let eps = 1e-10;
    let k = p.len() as f64;
    let smooth = (0..p.len()).any(|i| p[i] > 0.0 && q[i] == 0.0);
    let mut s = 0.0;
    for i in 0..p.len() {
        if p[i] == 0.0 {
            continue;
        }
        let qi = if smooth { (q[i] + eps) / (1.0 + k * eps) } else { q[i] };
        s += p[i] * (p[i].ln() - qi.ln());
    }
    s.max(0.0)
}

pub fn jsd(p: &[f64], q: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..p.len() {
        let m = (p[i] + q[i]) / 2.0;
        if p[i] > 0.0 {
            s += p[i] * (p[i] / m).ln() / 2.0;
        }
        if q[i] > 0.0 {
            s += q[i] * (q[i] / m).ln() / 2.0;
        }
    }
    s.clamp(0.0, std::f64::consts::LN_2)
}

pub fn hellinger(p: &[f64], q: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..p.len() {
        let d = p[i].sqrt() - q[i].sqrt();
        s += d * d;
    }
    (s / 2.0).sqrt().min(1.0)
}

pub fn tvd(p: &[f64], q: &[f64]) -> f64 {
    let s: f64 = (0..p.len()).map(|i| (p[i] - q[i]).abs()).sum();
    (s / 2.0).min(1.0)
}

/// Fraction of `sample` at or below `t`, by counting.
pub fn ecdf(sample: &[f64], t: f64) -> f64 {
    sample.iter().filter(|&&v| v <= t).count() as f64 / sample.len() as f64
}

fn pooled_points(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut pts: Vec<f64> = x.iter().chain(y).copied().collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts
}

pub fn ks(x: &[f64], y: &[f64]) -> f64 {
    pooled_points(x, y)
        .iter()
        .map(|&t| (ecdf(x, t) - ecdf(y, t)).abs())
        .fold(0.0, f64::max)
}

/// Area between the step ECDFs, summed over consecutive pooled points.
pub fn wasserstein(x: &[f64], y: &[f64]) -> f64 {
    let pts = pooled_points(x, y);
    let mut area = 0.0;
    for w in pts.windows(2) {
        area += (ecdf(x, w[0]) - ecdf(y, w[0])).abs() * (w[1] - w[0]);
    }
    area
}

/// Wasserstein distance by matching order statistics; needs equal sizes.
pub fn wasserstein_quantile(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let mut a = x.to_vec();
    let mut b = y.to_vec();
    a.sort_by(|p, q| p.partial_cmp(q).unwrap());
    b.sort_by(|p, q| p.partial_cmp(q).unwrap());
    a.iter().zip(&b).map(|(u, v)| (u - v).abs()).sum::<f64>() / a.len() as f64
}

pub fn range_coverage(x: &[f64], y: &[f64]) -> f64 {
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (a, b, c, d) = (min(x), max(x), min(y), max(y));
    if a == b {
        return if c <= a && a <= d { 1.0 } else { 0.0 };
    }
    let overlap = b.min(d) - a.max(c);
    if overlap <= 0.0 {
        0.0
    } else {
        (overlap / (b - a)).min(1.0)
    }
}

pub fn label_counts(labels: &[String]) -> BTreeMap<String, f64> {
    let mut m = BTreeMap::new();
    for l in labels {
        *m.entry(l.clone()).or_insert(0.0) += 1.0;
    }
    m
}

/// Real and synthetic probability vectors over the sorted label union.
pub fn label_probs(x: &[String], y: &[String]) -> (Vec<f64>, Vec<f64>) {
    let cx = label_counts(x);
    let cy = label_counts(y);
    let mut keys: Vec<&String> = cx.keys().chain(cy.keys()).collect();
    keys.sort();
    keys.dedup();
    let p = keys.iter().map(|k| cx.get(*k).copied().unwrap_or(0.0) / x.len() as f64).collect();
    let q = keys.iter().map(|k| cy.get(*k).copied().unwrap_or(0.0) / y.len() as f64).collect();
    (p, q)
}

pub fn category_coverage(x: &[String], y: &[String]) -> f64 {
    let cx = label_counts(x);
    let cy = label_counts(y);
    cx.keys().filter(|k| cy.contains_key(*k)).count() as f64 / cx.len() as f64
}

/// Chi-square of rescaled synthetic counts against real counts, plus the
/// number of categories with a positive expectation.
pub fn chi_square(x: &[String], y: &[String]) -> (f64, usize) {
    let cx = label_counts(x);
    let cy = label_counts(y);
    let scale = x.len() as f64 / y.len() as f64;
    let mut stat = 0.0;
    let mut used = 0;
    for (k, &e) in &cx {
        let o = cy.get(k).copied().unwrap_or(0.0) * scale;
        stat += (o - e) * (o - e) / e;
        used += 1;
    }
    (stat, used)
}

pub fn cramers_v(chi2: f64, n: usize, k: usize) -> Option<f64> {
    if k < 2 {
        None
    } else {
        Some((chi2 / (n as f64 * (k - 1) as f64)).sqrt())
    }
}

/// Observations where both columns are present.
pub fn complete_pairs(a: &[Option<f64>], b: &[Option<f64>]) -> (Vec<f64>, Vec<f64>) {
    let mut u = Vec::new();
    let mut v = Vec::new();
    for i in 0..a.len() {
        if let (Some(p), Some(q)) = (a[i], b[i]) {
            u.push(p);
            v.push(q);
        }
    }
    (u, v)
}

pub fn covariance(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    if a.len() < 2 {
        return 0.0;
    }
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut s = 0.0;
    for i in 0..a.len() {
        s += (a[i] - ma) * (b[i] - mb);
    }
    s / (n - 1.0)
}

pub fn pearson(a: &[f64], b: &[f64]) -> f64 {
    let va = covariance(a, a);
    let vb = covariance(b, b);
    if va <= 0.0 || vb <= 0.0 {
        return 0.0;
    }
    (covariance(a, b) / (va.sqrt() * vb.sqrt())).clamp(-1.0, 1.0)
}

/// Rank = (number of smaller values) + (ties + 1) / 2.
pub fn ranks(v: &[f64]) -> Vec<f64> {
    v.iter()
        .map(|&x| {
            let less = v.iter().filter(|&&y| y < x).count() as f64;
            let equal = v.iter().filter(|&&y| y == x).count() as f64;
            less + (equal + 1.0) / 2.0
        })
        .collect()
}

pub fn spearman(a: &[f64], b: &[f64]) -> f64 {
    pearson(&ranks(a), &ranks(b))
}

/// Pairwise-complete matrix of `f` over `cols`, with `diag` on the diagonal.
pub fn pairwise_matrix(
    cols: &[Vec<Option<f64>>],
    f: impl Fn(&[f64], &[f64]) -> f64,
    diag: Option<f64>,
) -> Vec<Vec<f64>> {
    let d = cols.len();
    let mut m = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..d {
            let (u, v) = complete_pairs(&cols[i], &cols[j]);
            m[i][j] = match diag {
                Some(x) if i == j => x,
                _ => f(&u, &v),
            };
        }
    }
    m
}

pub fn frobenius_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        for j in 0..a.len() {
            s += (a[i][j] - b[i][j]).powi(2);
        }
    }
    s.sqrt()
}

pub fn frobenius(a: &[Vec<f64>]) -> f64 {
    a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
}

pub fn mean_upper_abs_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> Option<f64> {
    let d = a.len();
    if d < 2 {
        return None;
    }
    let mut s = 0.0;
    let mut c = 0.0;
    for i in 0..d {
        for j in i + 1..d {
            s += (a[i][j] - b[i][j]).abs();
            c += 1.0;
        }
    }
    Some(s / c)
}

/// Mutual information from explicit joint count tables.
pub fn mutual_information(a: &[String], b: &[String]) -> f64 {
    let n = a.len() as f64;
    let mut va: Vec<&String> = a.iter().collect();
    va.sort();
    va.dedup();
    let mut vb: Vec<&String> = b.iter().collect();
    vb.sort();
    vb.dedup();
    let mut mi = 0.0;
    for x in &va {
        let cx = a.iter().filter(|v| v == x).count() as f64;
        for y in &vb {
            let cy = b.iter().filter(|v| v == y).count() as f64;
            let cxy = (0..a.len()).filter(|&i| &a[i] == *x && &b[i] == *y).count() as f64;
            if cxy > 0.0 {
                mi += cxy / n * ((cxy * n) / (cx * cy)).ln();
            }
        }
    }
    mi.max(0.0)
}

pub fn entropy(a: &[String]) -> f64 {
    let n = a.len() as f64;
    label_counts(a)
        .values()
        .map(|c| -(c / n) * (c / n).ln())
        .sum()
}

/// Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix; returns
/// ascending eigenvalues.
pub fn jacobi_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}

/// Dense normalized Laplacian from a 0/1 adjacency matrix.
pub fn normalized_laplacian(adj: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = adj.len();
    let deg: Vec<f64> = adj.iter().map(|r| r.iter().sum()).collect();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let id = if i == j { 1.0 } else { 0.0 };
            let norm = if deg[i] > 0.0 && deg[j] > 0.0 {
                adj[i][j] / (deg[i] * deg[j]).sqrt()
            } else {
                0.0
            };
            l[i][j] = id - norm;
        }
    }
    l
}
