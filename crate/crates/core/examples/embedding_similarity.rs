//! Joint PCA embedding of two tables, then CKA and per-axis Wasserstein.
//!
//! cargo run --example embedding_similarity

mod shared;

use synthfid::embedding::{awed, build_embeddings, cka};
use synthfid::ingest::{align, TypeThresholds};

fn main() {
    for noise_seed in [3, 4] {
        let pair =
            align(&shared::pima(), &shared::noisy_pima(noise_seed), TypeThresholds::default()).unwrap();
        let emb = build_embeddings(&pair, 4).unwrap();
        let total: f64 = emb.explained_variance.iter().sum();
        println!("seed {noise_seed}: k = {}, variance on kept axes {total:.3}", emb.k);
        println!("  CKA  {:.5}", cka(&emb.z_real, &emb.z_synth).unwrap());
        println!("  AWED {:.5}", awed(&emb.z_real, &emb.z_synth).unwrap());
    }
}
