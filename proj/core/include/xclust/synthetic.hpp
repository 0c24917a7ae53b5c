#pragma once

#include <cstdint>

#include "xclust/cluster_types.hpp"

namespace xclust {

/// Parameters for the Gaussian-mixture benchmark generator.
struct SyntheticSpec {
    int clusters = 5;
    int points_per_cluster = 60;
    int dims = 17;
    /// Minimum distance enforced between any two generating centers.
    double separation = 8.0;
    /// Per-coordinate standard deviation within a cluster.
    double spread = 1.0;
    std::uint64_t seed = 0;
};

struct SyntheticData {
    ExpressionMatrix matrix;   // clusters * points_per_cluster rows
    Assignment truth;          // generating cluster of each row
    Matrix centers;            // generating centers, clusters x dims
};

/// Draw `clusters` isotropic Gaussian blobs with pairwise center distances
/// of at least `separation`. Rows are ordered by cluster, labels are
/// g0, g1, ... Deterministic for a fixed spec.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

}  // namespace xclust
