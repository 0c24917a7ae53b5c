#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "xclust/kmeans.hpp"

namespace xclust {

struct IsodataParams {
    int k_init = 10;
    /// Clusters with fewer members than this are discarded and their points
    /// reassigned to the nearest surviving center.
    int theta_n = 2;
    /// A cluster splits when its largest per-dimension standard deviation
    /// exceeds theta_s (and it has at least 2 * theta_n members).
    double theta_s = 1.0;
    /// The closest pair of centers merges while their distance is below
    /// theta_c, at most floor(k/2) merges per round.
    double theta_c = 0.5;
    /// Outer split/merge rounds.
    int max_iter = 20;
    /// Settings for the inner K-Means passes.
    KmeansOptions kmeans_opts{};
};

struct AgmfiParams {
    int k_init = 10;
    /// Minimum cluster size; smaller clusters are discarded each round.
    int min_cluster_size = 2;
    /// Outer rounds. Odd rounds split, even rounds merge.
    int max_iter = 20;
    /// A cluster is split-eligible when its largest per-dimension standard
    /// deviation exceeds split_factor times the whole dataset's standard
    /// deviation along that dimension.
    double split_factor = 1.0;
    /// The merge threshold is merge_scale times the mean pairwise centroid
    /// distance, recomputed every merge round from the current centers.
    double merge_scale = 0.5;
    KmeansOptions kmeans_opts{};
};

/// Split a cluster into two children: the parent center offset by
/// +-0.5 * sigma_j along the dimension j of largest per-dimension standard
/// deviation (population convention, ties to the lowest dimension).
/// Requires at least 2 members.
std::pair<Eigen::RowVectorXd, Eigen::RowVectorXd> split_cluster(
    const ExpressionMatrix& data, std::span<const Eigen::Index> members,
    const Eigen::Ref<const Eigen::RowVectorXd>& center);

/// Replace centers i and j by their size-weighted mean. The merged center
/// takes slot min(i, j), every other center keeps its relative order, and
/// the count drops by one.
CentroidSet merge_clusters(const CentroidSet& centroids, int i, int j,
                           const std::vector<Eigen::Index>& sizes);

/// Mean over all k*(k-1)/2 pairwise centroid distances. Requires k >= 2.
double auto_merge_factor(const CentroidSet& centroids);

/// ISODATA: per round, run K-Means to stability, discard undersized
/// clusters, split high-variance clusters, merge close centers. Stops when
/// a round changes nothing or after params.max_iter rounds. The final
/// cluster count is data-driven and may differ from k_init.
ClusteringResult isodata(const ExpressionMatrix& data, const IsodataParams& params,
                         const CentroidSet& init);
ClusteringResult isodata(const ExpressionMatrix& data, const IsodataParams& params,
                         std::uint64_t seed);

/// AGMFI: ISODATA-style adaptation with an automatically generated merge
/// factor. After an initial K-Means run, each round discards undersized
/// clusters, then either merges (even rounds, threshold merge_scale * mean
/// pairwise centroid distance) or splits (odd rounds, against the dataset's
/// per-dimension spread), and re-runs K-Means from the updated centers.
/// Splitting never grows the live cluster count beyond 2 * k_init. Stops
/// once a full merge+split cycle (two consecutive rounds) changes nothing.
ClusteringResult agmfi(const ExpressionMatrix& data, const AgmfiParams& params,
                       const CentroidSet& init);
ClusteringResult agmfi(const ExpressionMatrix& data, const AgmfiParams& params,
                       std::uint64_t seed);

/// AGMFI seeded with ccia_seed(data, params.k_init) instead of random
/// centers. Fully deterministic. Requires n >= 2 * k_init.
ClusteringResult eiagmfi(const ExpressionMatrix& data, const AgmfiParams& params);

}  // namespace xclust
