//! kNN graphs over the embedding pair and the topological metrics built on
//! them: neighborhood overlap, normalized-Laplacian spectral distance, and
//! the graph structural fidelity score.

use std::collections::VecDeque;

use nalgebra::DMatrix;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::MetricError;

/// Number of BFS sources used for the path-length statistic.
pub const PATH_SOURCES: usize = 200;

/// One side's graph: directed kNN lists plus the symmetrized adjacency.
#[derive(Debug, Clone, PartialEq)]
pub struct KnnGraph {
    /// `neighbors[i]` holds the k nearest nodes of `i`, nearest first.
    pub neighbors: Vec<Vec<usize>>,
    /// Sorted adjacency lists of `A = max(A, Aᵀ)`.
    pub adjacency: Vec<Vec<usize>>,
    /// Normalized-Laplacian eigenvalues, ascending.
    pub laplacian_eigs: Vec<f64>,
}

impl KnnGraph {
    /// Builds the graph from directed neighbor lists.
    pub fn from_neighbors(neighbors: Vec<Vec<usize>>) -> Self {
        let n = neighbors.len();
        let mut adjacency = vec![Vec::new(); n];
        for (i, list) in neighbors.iter().enumerate() {
            for &j in list {
                if i != j {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let laplacian_eigs = laplacian_spectrum(&adjacency);
        KnnGraph {
            neighbors,
            adjacency,
            laplacian_eigs,
        }
    }

    /// Brute-force Euclidean kNN over the rows of `points`.
    pub fn build(points: &DMatrix<f64>, k: usize) -> Result<Self, MetricError> {
        Ok(Self::from_neighbors(knn_lists(points, k)?))
    }

    pub fn n_nodes(&self) -> usize {
        self.neighbors.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Local clustering coefficient per node; 0 below degree 2.
    pub fn clustering(&self) -> Vec<f64> {
        let n = self.n_nodes();
        let mut mark = vec![false; n];
        self.adjacency
            .iter()
            .map(|nbrs| {
                let d = nbrs.len();
                if d < 2 {
                    return 0.0;
                }
                for &j in nbrs {
                    mark[j] = true;
                }
                let mut links = 0usize;
                for &j in nbrs {
                    links += self.adjacency[j].iter().filter(|&&l| mark[l]).count();
                }
                for &j in nbrs {
                    mark[j] = false;
                }
                // each link among the neighbors was counted from both ends
                links as f64 / (d * (d - 1)) as f64
            })
            .collect()
    }

    /// Hop distances from `source`; `None` for unreachable nodes.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n_nodes()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Directed kNN lists; ties in distance go to the lower index.
pub fn knn_lists(points: &DMatrix<f64>, k: usize) -> Result<Vec<Vec<usize>>, MetricError> {
    let n = points.nrows();
    if n < k + 1 {
        return Err(MetricError::TooFewRows {
            rows: n,
            needed: k + 1,
        });
    }
    // Row-major copy so each distance is a contiguous slice scan.
    let d = points.ncols();
    let flat: Vec<f64> = (0..n)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| points[(i, j)])
        .collect();
    let row = |i: usize| &flat[i * d..(i + 1) * d];

    let mut lists = Vec::with_capacity(n);
    let mut cand: Vec<(f64, usize)> = Vec::with_capacity(n);
    for i in 0..n {
        cand.clear();
        let ri = row(i);
        for j in (0..n).filter(|&j| j != i) {
            let dist: f64 = ri.iter().zip(row(j)).map(|(a, b)| (a - b) * (a - b)).sum();
            cand.push((dist, j));
        }
        let by_dist = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
        if k < cand.len() {
            cand.select_nth_unstable_by(k, by_dist);
            cand.truncate(k);
        }
        cand.sort_unstable_by(by_dist);
        lists.push(cand.iter().map(|&(_, j)| j).collect());
    }
    Ok(lists)
}

/// `I − D^{-1/2} A D^{-1/2}`; isolated nodes keep an identity row.
pub fn normalized_laplacian(adjacency: &[Vec<usize>]) -> DMatrix<f64> {
    let n = adjacency.len();
    let inv_sqrt: Vec<f64> = adjacency
        .iter()
        .map(|a| if a.is_empty() { 0.0 } else { 1.0 / (a.len() as f64).sqrt() })
        .collect();
    let mut l = DMatrix::identity(n, n);
    for (i, list) in adjacency.iter().enumerate() {
        for &j in list {
            l[(i, j)] -= inv_sqrt[i] * inv_sqrt[j];
        }
    }
    l
}

/// Ascending eigenvalues of the normalized Laplacian.
pub fn laplacian_spectrum(adjacency: &[Vec<usize>]) -> Vec<f64> {
    if adjacency.is_empty() {
        return Vec::new();
    }
    let mut eigs: Vec<f64> = normalized_laplacian(adjacency)
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    eigs.sort_by(f64::total_cmp);
    eigs
}

/// Row indices kept on each side before graph construction.
///
/// Both sides are cut to `min(n, m, cap)` rows when their sizes differ or
/// exceed `cap`. Each side draws from its own generator seeded with `seed`,
/// so equal-sized inputs keep the same row positions.
pub fn paired_subsample(n: usize, m: usize, cap: usize, seed: u64) -> (Vec<usize>, Vec<usize>) {
    if n == m && n <= cap {
        return ((0..n).collect(), (0..m).collect());
    }
    let s = n.min(m).min(cap);
    let draw = |len: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut idx = index::sample(&mut rng, len, s).into_vec();
        idx.sort_unstable();
        idx
    };
    (draw(n), draw(m))
}

fn select_rows(m: &DMatrix<f64>, rows: &[usize]) -> DMatrix<f64> {
    m.select_rows(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnnGraphPair {
    pub real: KnnGraph,
    pub synth: KnnGraph,
    /// Original row indices of the graph nodes.
    pub rows_real: Vec<usize>,
    pub rows_synth: Vec<usize>,
}

impl KnnGraphPair {
    pub fn n_nodes(&self) -> usize {
        self.real.n_nodes()
    }
}

/// Subsamples both embeddings and builds the two kNN graphs.
pub fn build_knn_pair(
    z_real: &DMatrix<f64>,
    z_synth: &DMatrix<f64>,
    k: usize,
    cap: usize,
    seed: u64,
) -> Result<KnnGraphPair, MetricError> {
    let (rows_real, rows_synth) = paired_subsample(z_real.nrows(), z_synth.nrows(), cap, seed);
    let xr = select_rows(z_real, &rows_real);
    let xs = select_rows(z_synth, &rows_synth);
    let (real, synth) = std::thread::scope(|scope| {
        let handle = scope.spawn(|| KnnGraph::build(&xs, k));
        let real = KnnGraph::build(&xr, k);
        let synth = handle.join().expect("graph worker panicked");
        (real, synth)
    });
    Ok(KnnGraphPair {
        real: real?,
        synth: synth?,
        rows_real,
        rows_synth,
    })
}

fn jaccard(a: &[usize], b: &[usize]) -> f64 {
    let inter = a.iter().filter(|x| b.contains(x)).count();
    let union = a.len() + b.len() - inter;
    if union == 0 {
        1.0
    } else {
        inter as f64 / union as f64
    }
}

/// Mean Jaccard index of the directed neighbor sets, nodes paired by index.
pub fn neighborhood_overlap(real: &KnnGraph, synth: &KnnGraph) -> Result<f64, MetricError> {
    check_same_size(real, synth)?;
    let n = real.n_nodes();
    if n == 0 {
        return Err(MetricError::EmptySample);
    }
    let total: f64 = real
        .neighbors
        .iter()
        .zip(&synth.neighbors)
        .map(|(a, b)| jaccard(a, b))
        .sum();
    Ok(total / n as f64)
}

/// `‖λ_X − λ_Y‖₂` over the ascending Laplacian spectra.
pub fn spectral_distance(real: &KnnGraph, synth: &KnnGraph) -> Result<f64, MetricError> {
    check_same_size(real, synth)?;
    Ok(l2_diff(&real.laplacian_eigs, &synth.laplacian_eigs))
}

fn check_same_size(real: &KnnGraph, synth: &KnnGraph) -> Result<(), MetricError> {
    if real.n_nodes() != synth.n_nodes() {
        return Err(MetricError::ShapeMismatch(format!(
            "graphs with {} and {} nodes",
            real.n_nodes(),
            synth.n_nodes()
        )));
    }
    Ok(())
}

/// ℓ₂ norm of the difference, zero-padding the shorter vector.
fn l2_diff(a: &[f64], b: &[f64]) -> f64 {
    let len = a.len().max(b.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    (0..len)
        .map(|i| (at(a, i) - at(b, i)).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Sorted per-graph statistics compared by the structural score.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    /// Degrees, descending.
    pub degrees: Vec<f64>,
    /// Local clustering coefficients, descending.
    pub clustering: Vec<f64>,
    /// Finite shortest-path lengths from the BFS sources, ascending.
    pub paths: Vec<f64>,
}

impl GraphStats {
    pub fn compute(graph: &KnnGraph, sources: &[usize]) -> Self {
        let desc = |mut v: Vec<f64>| {
            v.sort_by(|a, b| b.total_cmp(a));
            v
        };
        let degrees = desc(graph.degrees().into_iter().map(|d| d as f64).collect());
        let clustering = desc(graph.clustering());
        let mut paths: Vec<f64> = sources
            .iter()
            .flat_map(|&s| graph.bfs(s))
            .filter_map(|d| d.filter(|&d| d >= 1).map(|d| d as f64))
            .collect();
        paths.sort_by(f64::total_cmp);
        GraphStats {
            degrees,
            clustering,
            paths,
        }
    }
}

/// BFS source nodes: all nodes when there are at most [`PATH_SOURCES`],
/// otherwise a seeded sample.
pub fn path_sources(n: usize, seed: u64) -> Vec<usize> {
    if n <= PATH_SOURCES {
        return (0..n).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx = index::sample(&mut rng, n, PATH_SOURCES).into_vec();
    idx.sort_unstable();
    idx
}

/// `1 − ‖v_X − v_Y‖ / ‖v_X‖` clamped to `[0, 1]`. A zero reference scores 1
/// only against another zero vector.
pub fn stat_similarity(vx: &[f64], vy: &[f64]) -> f64 {
    let norm_x = vx.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm_x == 0.0 {
        return if vy.iter().all(|&v| v == 0.0) { 1.0 } else { 0.0 };
    }
    (1.0 - l2_diff(vx, vy) / norm_x).clamp(0.0, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gsfs {
    pub degree: f64,
    pub clustering: f64,
    pub path: f64,
    pub score: f64,
}

/// Equal-weight structural score from precomputed statistics. Path vectors
/// are truncated to the shorter length first.
pub fn gsfs_from_stats(x: &GraphStats, y: &GraphStats) -> Gsfs {
    let len = x.paths.len().min(y.paths.len());
    let degree = stat_similarity(&x.degrees, &y.degrees);
    let clustering = stat_similarity(&x.clustering, &y.clustering);
    let path = stat_similarity(&x.paths[..len], &y.paths[..len]);
    Gsfs {
        degree,
        clustering,
        path,
        score: (degree + clustering + path) / 3.0,
    }
}

pub fn gsfs(real: &KnnGraph, synth: &KnnGraph, seed: u64) -> Result<Gsfs, MetricError> {
    check_same_size(real, synth)?;
    let sources = path_sources(real.n_nodes(), seed);
    Ok(gsfs_from_stats(
        &GraphStats::compute(real, &sources),
        &GraphStats::compute(synth, &sources),
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructuralMetrics {
    pub neighborhood_overlap: f64,
    pub spectral_distance: f64,
    pub gsfs: Gsfs,
}

pub fn structural_metrics(pair: &KnnGraphPair, seed: u64) -> Result<StructuralMetrics, MetricError> {
    Ok(StructuralMetrics {
        neighborhood_overlap: neighborhood_overlap(&pair.real, &pair.synth)?,
        spectral_distance: spectral_distance(&pair.real, &pair.synth)?,
        gsfs: gsfs(&pair.real, &pair.synth, seed)?,
    })
}
