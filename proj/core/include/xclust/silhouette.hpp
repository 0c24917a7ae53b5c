#pragma once

#include "xclust/cluster_types.hpp"

namespace xclust {

/// Silhouette widths for one clustering.
struct QualityReport {
    std::vector<double> per_point;         // s(i) in [-1, 1]
    std::vector<double> per_cluster_mean;  // mean s over members; NaN for an empty index
    double overall = 0.0;                  // mean of per_point
    double scaled_score = 0.0;             // 100 * overall
};

/// s(i) = (b - a) / max(a, b), where a is the mean distance from point i to
/// the other members of its cluster and b the smallest mean distance to any
/// other cluster. Points in singleton clusters score 0, as does a point
/// with a = b = 0. Requires at least 2 nonempty clusters.
QualityReport silhouette(const ExpressionMatrix& data, const Assignment& assignment);

/// The 0-100 scale quality number used in comparison tables.
double quality_score(const QualityReport& report);

}  // namespace xclust
