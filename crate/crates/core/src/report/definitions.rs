//! Fixed metric descriptions embedded in every report.

pub const METRIC_DEFINITIONS: [(&str, &str); 20] = [
    (
        "Kolmogorov–Smirnov (KS) Statistic",
        "Measures the maximum distance between the empirical cumulative distributions of real and synthetic data for a numeric feature.",
    ),
    (
        "Kullback-Leibler Divergence (KLD)",
        "Quantifies how much information is lost when approximating the real data distribution with the synthetic one. Asymmetric measure.",
    ),
    (
        "Jensen–Shannon (JS) Divergence (JSD)",
        "Symmetric measure of similarity between two probability distributions derived from real and synthetic data. Lower values indicate higher similarity.",
    ),
    (
        "Wasserstein Distance (WD)",
        "Quantifies the minimum 'work' required to transform one probability distribution into another, reflecting both shape and distance differences.",
    ),
    (
        "Hellinger Distance (HD)",
        "Measures the distance between two probability distributions; bounded between 0 (identical) and 1 (completely dissimilar).",
    ),
    (
        "Total Variation Distance (TVD)",
        "Measures the maximum absolute difference between two probability distributions. Values range from 0 (identical) to 1 (completely disjoint). Supports both numeric and categorical data.",
    ),
    (
        "Range Coverage (RC)",
        "Fraction of the real data's numeric range that is covered by the synthetic data. Values close to 1 indicate the synthetic data spans the same domain as the real data.",
    ),
    (
        "Chi-Square Statistic (CSS)",
        "Tests whether the observed category frequencies in the synthetic data differ significantly from those in the real data.",
    ),
    (
        "Category Coverage (CC)",
        "Proportion of unique categories in the real data that also appear in the synthetic data; detects missing or underrepresented categories.",
    ),
    (
        "Contingency Table Similarity (CV)",
        "Measures the strength of association between two categorical variables in real vs. synthetic datasets; used to compare inter-feature dependencies.",
    ),
    (
        "Covariance Matrix Similarity (CMS)",
        "Quantifies deviation between real and synthetic covariance matrices; smaller Frobenius norm indicates closer similarity.",
    ),
    (
        "Correlation Matrix Distance (CMD)",
        "Computes normalized Frobenius norm of the difference between correlation matrices; used as an overall measure of structural fidelity.",
    ),
    (
        "Correlation Difference (Pearson) (CDP)",
        "Measures how much the linear (Pearson) correlations between features differ between real and synthetic datasets.",
    ),
    (
        "Correlation Difference (Spearman) (CDS)",
        "Measures how much the rank (Spearman) correlations between features differ between real and synthetic datasets.",
    ),
    (
        "Mutual Information Difference (MID)",
        "Captures how well nonlinear dependencies between variables are preserved; compares mutual information matrices between real and synthetic data.",
    ),
    (
        "Centered Kernel Alignment (CKA)",
        "Measures similarity between real and synthetic feature representations in embedding space. Values range from 0 (no similarity) to 1 (identical representation).",
    ),
    (
        "Average Wasserstein Embedding Distance (AWED)",
        "Average Wasserstein distance between real and synthetic points in embedding space. Lower values indicate better alignment of sample distributions.",
    ),
    (
        "Neighbor Overlap (Jaccard Similarity)",
        "Measures how similar each sample's nearest-neighbor set is between real and synthetic data. Calculated using Jaccard index between the kNN lists of real and synthetic embeddings.",
    ),
    (
        "Spectral Distance (SD)",
        "Distance between the eigenvalue spectra of real and synthetic kNN graphs. Lower values indicate better preservation of global graph structure.",
    ),
    (
        "Graph Structural Fidelity Score (GSFS)",
        "Measures global structural preservation of the kNN graph by comparing degree distributions, clustering coefficients, and shortest-path distances. Values range from 0 to 1, with higher values indicating better global topology preservation.",
    ),
];
