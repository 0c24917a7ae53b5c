#pragma once

#include <vector>

#include "xclust/cluster_types.hpp"

namespace xclust {

/// The k point groups grown by the cluster center initialization procedure.
struct SeedGroups {
    std::vector<std::vector<Eigen::Index>> groups;  // pairwise disjoint row indices
    Eigen::Index consumed = 0;                      // total rows removed from the pool
};

/// Grow the seed groups deterministically:
///
///   repeat k times: found a group with the closest remaining pair of
///   points, then absorb the remaining point closest to any group member
///   until the group holds ceil(0.75 * n / k) points.
///
/// Distance ties are broken toward the lowest row index, so two calls on
/// the same data give identical groups. If the pool runs dry while a group
/// grows, that group stays short; a group whose founding pair cannot be
/// formed is founded with the single leftover point. An empty pool at
/// founding time throws AlgorithmError.
///
/// Requires n >= 2k; the error message names both.
SeedGroups ccia_groups(const ExpressionMatrix& data, int k);

/// Initial centroids for k clusters: the arithmetic means of the seed
/// groups, ordered by group creation. No randomness anywhere.
CentroidSet ccia_seed(const ExpressionMatrix& data, int k);

}  // namespace xclust
