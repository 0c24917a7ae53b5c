#include "xclust/silhouette.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "xclust/error.hpp"

namespace xclust {

QualityReport silhouette(const ExpressionMatrix& data, const Assignment& assignment) {
    const Eigen::Index n = data.rows();
    if (static_cast<Eigen::Index>(assignment.size()) != n)
        throw std::invalid_argument("silhouette: assignment length mismatch");

    int k = 0;
    for (int c : assignment) {
        if (c < 0) throw std::invalid_argument("silhouette: negative cluster index");
        k = std::max(k, c + 1);
    }
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
    for (int c : assignment) ++counts[static_cast<std::size_t>(c)];
    int nonempty = static_cast<int>(
        std::count_if(counts.begin(), counts.end(), [](Eigen::Index c) { return c > 0; }));
    if (nonempty < 2)
        throw AlgorithmError("silhouette: needs at least 2 nonempty clusters, got " +
                             std::to_string(nonempty));

    // One O(n^2) distance pass, accumulated per (point, cluster).
    std::vector<double> sums(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double d = (data.data.row(i) - data.data.row(j)).norm();
            sums[static_cast<std::size_t>(i) * k + assignment[static_cast<std::size_t>(j)]] += d;
            sums[static_cast<std::size_t>(j) * k + assignment[static_cast<std::size_t>(i)]] += d;
        }
    }

    QualityReport report;
    report.per_point.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const int own = assignment[static_cast<std::size_t>(i)];
        const Eigen::Index own_count = counts[static_cast<std::size_t>(own)];
        double s = 0.0;
        if (own_count > 1) {
            double a = sums[static_cast<std::size_t>(i) * k + own] /
                       static_cast<double>(own_count - 1);
            double b = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                if (c == own || counts[static_cast<std::size_t>(c)] == 0) continue;
                b = std::min(b, sums[static_cast<std::size_t>(i) * k + c] /
                                    static_cast<double>(counts[static_cast<std::size_t>(c)]));
            }
            double denom = std::max(a, b);
            s = denom > 0.0 ? (b - a) / denom : 0.0;
        }
        report.per_point[static_cast<std::size_t>(i)] = s;
    }

    report.per_cluster_mean.assign(static_cast<std::size_t>(k),
                                   std::numeric_limits<double>::quiet_NaN());
    std::vector<double> cluster_sum(static_cast<std::size_t>(k), 0.0);
    for (Eigen::Index i = 0; i < n; ++i)
        cluster_sum[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])] +=
            report.per_point[static_cast<std::size_t>(i)];
    for (int c = 0; c < k; ++c)
        if (counts[static_cast<std::size_t>(c)] > 0)
            report.per_cluster_mean[static_cast<std::size_t>(c)] =
                cluster_sum[static_cast<std::size_t>(c)] /
                static_cast<double>(counts[static_cast<std::size_t>(c)]);

    double total = 0.0;
    for (double s : report.per_point) total += s;
    report.overall = total / static_cast<double>(n);
    report.scaled_score = 100.0 * report.overall;
    return report;
}

double quality_score(const QualityReport& report) { return report.scaled_score; }

}  // namespace xclust
