#pragma once

#include <vector>

#include "xclust/matrix.hpp"

namespace xclust {

/// Cluster index per data row. Valid entries are in [0, k).
using Assignment = std::vector<int>;

/// K cluster centers of the same dimension as the data.
struct CentroidSet {
    Matrix centers;  // k x m

    int count() const { return static_cast<int>(centers.rows()); }
    Eigen::Index dim() const { return centers.cols(); }
};

/// Outcome of a clustering run.
///
/// objective_history records the sum of squared point-to-center distances
/// once per assignment pass. Within a single K-Means descent it is
/// non-increasing; for the adaptive algorithms the histories of all inner
/// K-Means runs are concatenated, and a merge may raise the objective at
/// the seam between two runs.
struct ClusteringResult {
    Assignment assignment;
    CentroidSet centroids;
    std::vector<double> objective_history;
    int iterations = 0;  // assignment passes for kmeans, outer rounds for isodata/agmfi
    int final_k = 0;

    // structural events, populated by the adaptive algorithms
    int splits = 0;
    int merges = 0;
    int discards = 0;

    double final_objective() const {
        return objective_history.empty() ? 0.0 : objective_history.back();
    }
};

}  // namespace xclust
