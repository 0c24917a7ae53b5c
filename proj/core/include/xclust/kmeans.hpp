#pragma once

#include <cstdint>
#include <utility>

#include "xclust/cluster_types.hpp"

namespace xclust {

struct KmeansOptions {
    int max_iter = 100;
    /// Converged when no assignment changes, or when every center moves
    /// less than tol between consecutive updates.
    double tol = 1e-8;
};

/// sqrt(sum_j (x_j - y_j)^2). Throws std::invalid_argument on dimension mismatch.
double euclidean_distance(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                          const Eigen::Ref<const Eigen::RowVectorXd>& y);

/// Index of the closest center and the distance to it.
/// Ties go to the lowest index so runs are reproducible.
std::pair<int, double> nearest_centroid(const Eigen::Ref<const Eigen::RowVectorXd>& point,
                                        const CentroidSet& centroids);

/// Arithmetic mean of each cluster's members. Throws AlgorithmError if a
/// cluster in [0, k) has no members; the K-Means loop repairs empty
/// clusters itself before recomputing.
CentroidSet recompute_centroids(const ExpressionMatrix& data, const Assignment& assignment,
                                int k);

/// k distinct data rows sampled without replacement from a generator
/// seeded with `seed`.
CentroidSet random_centroids(const ExpressionMatrix& data, int k, std::uint64_t seed);

/// Lloyd iteration from explicit initial centers: assign every point to its
/// nearest center, recompute centers as member means, repeat until the
/// assignment is stable, centers move less than opts.tol, or opts.max_iter
/// passes have run. A cluster that loses all members is re-seeded with the
/// data point farthest from its nearest center, keeping k fixed.
ClusteringResult kmeans(const ExpressionMatrix& data, int k, const CentroidSet& init,
                        const KmeansOptions& opts = {});

/// Same, initialized with random_centroids(data, k, seed).
ClusteringResult kmeans(const ExpressionMatrix& data, int k, std::uint64_t seed,
                        const KmeansOptions& opts = {});

}  // namespace xclust
