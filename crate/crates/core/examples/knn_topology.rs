//! kNN graphs over the embeddings: neighbourhood overlap, spectra and
//! degree/clustering/path agreement.
//!
//! cargo run --example knn_topology

mod shared;

use synthfid::embedding::build_embeddings;
use synthfid::graph::{build_knn_pair, structural_metrics, GraphStats};
use synthfid::ingest::{align, TypeThresholds};

fn main() {
    let pair = align(&shared::pima(), &shared::noisy_pima(5), TypeThresholds::default()).unwrap();
    let emb = build_embeddings(&pair, 8).unwrap();
    let graphs = build_knn_pair(&emb.z_real, &emb.z_synth, 10, 2000, 42).unwrap();
    let s = structural_metrics(&graphs, 42).unwrap();

    let stats = GraphStats::compute(&graphs.real, &[0]);
    let mean_deg = stats.degrees.iter().sum::<f64>() / stats.degrees.len() as f64;
    println!("{} nodes, mean degree {mean_deg:.2}", graphs.real.n_nodes());
    println!("neighbourhood overlap {:.4}", s.neighborhood_overlap);
    println!("spectral distance     {:.4}", s.spectral_distance);
    println!(
        "structure score       {:.4} (degree {:.4}, clustering {:.4}, paths {:.4})",
        s.gsfs.score, s.gsfs.degree, s.gsfs.clustering, s.gsfs.path
    );
}
