#include "xclust/kmeans.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "xclust/error.hpp"

namespace xclust {

namespace {

// Nearest center by squared distance, ties to the lowest index.
int nearest_index(const Matrix& centers, const Eigen::Ref<const Eigen::RowVectorXd>& point,
                  double& best_sq) {
    int best = 0;
    best_sq = (centers.row(0) - point).squaredNorm();
    for (Eigen::Index c = 1; c < centers.rows(); ++c) {
        double d = (centers.row(c) - point).squaredNorm();
        if (d < best_sq) {
            best_sq = d;
            best = static_cast<int>(c);
        }
    }
    return best;
}

// Re-seed each empty cluster with the point farthest from its nearest
// center under the current working set (ties to the lowest row index).
void reseed_empty(const Matrix& data, Matrix& centers,
                  const std::vector<Eigen::Index>& counts) {
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] > 0) continue;
        Eigen::Index farthest = 0;
        double far_sq = -1.0;
        for (Eigen::Index i = 0; i < data.rows(); ++i) {
            double d;
            nearest_index(centers, data.row(i), d);
            if (d > far_sq) {
                far_sq = d;
                farthest = i;
            }
        }
        centers.row(static_cast<Eigen::Index>(c)) = data.row(farthest);
    }
}

}  // namespace

double euclidean_distance(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                          const Eigen::Ref<const Eigen::RowVectorXd>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("euclidean_distance: dimension mismatch (" +
                                    std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + ")");
    return (x - y).norm();
}

std::pair<int, double> nearest_centroid(const Eigen::Ref<const Eigen::RowVectorXd>& point,
                                        const CentroidSet& centroids) {
    if (centroids.count() < 1)
        throw std::invalid_argument("nearest_centroid: empty centroid set");
    if (centroids.dim() != point.size())
        throw std::invalid_argument("nearest_centroid: dimension mismatch (" +
                                    std::to_string(point.size()) + " vs " +
                                    std::to_string(centroids.dim()) + ")");
    double best_sq;
    int best = nearest_index(centroids.centers, point, best_sq);
    return {best, std::sqrt(best_sq)};
}

CentroidSet recompute_centroids(const ExpressionMatrix& data, const Assignment& assignment,
                                int k) {
    if (k < 1) throw std::invalid_argument("recompute_centroids: k must be >= 1");
    if (static_cast<Eigen::Index>(assignment.size()) != data.rows())
        throw std::invalid_argument("recompute_centroids: assignment length mismatch");

    Matrix centers = Matrix::Zero(k, data.cols());
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        int c = assignment[static_cast<std::size_t>(i)];
        if (c < 0 || c >= k)
            throw std::invalid_argument("recompute_centroids: cluster index " +
                                        std::to_string(c) + " out of range");
        centers.row(c) += data.data.row(i);
        ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < k; ++c) {
        if (counts[static_cast<std::size_t>(c)] == 0)
            throw AlgorithmError("cluster " + std::to_string(c) + " has no members");
        centers.row(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
    }
    return {centers};
}

CentroidSet random_centroids(const ExpressionMatrix& data, int k, std::uint64_t seed) {
    const Eigen::Index n = data.rows();
    if (k < 1) throw std::invalid_argument("random_centroids: k must be >= 1");
    if (k > n)
        throw std::invalid_argument("random_centroids: k=" + std::to_string(k) +
                                    " exceeds n=" + std::to_string(n));

    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    std::mt19937_64 rng(seed);
    Matrix centers(k, data.cols());
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<Eigen::Index> pick(i, n - 1);
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
        centers.row(i) = data.data.row(idx[static_cast<std::size_t>(i)]);
    }
    return {centers};
}

ClusteringResult kmeans(const ExpressionMatrix& data, int k, const CentroidSet& init,
                        const KmeansOptions& opts) {
    const Eigen::Index n = data.rows();
    if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
    if (k > n)
        throw std::invalid_argument("kmeans: k=" + std::to_string(k) +
                                    " exceeds n=" + std::to_string(n));
    if (init.count() != k)
        throw std::invalid_argument("kmeans: init has " + std::to_string(init.count()) +
                                    " centers, expected " + std::to_string(k));
    if (init.dim() != data.cols())
        throw std::invalid_argument("kmeans: init dimension mismatch");
    if (opts.max_iter < 1) throw std::invalid_argument("kmeans: max_iter must be >= 1");
    if (opts.tol < 0.0) throw std::invalid_argument("kmeans: tol must be >= 0");

    Matrix centers = init.centers;
    Assignment assign(static_cast<std::size_t>(n), -1);
    Assignment prev;
    std::vector<double> history;
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
    bool centers_settled = false;
    int iter = 0;

    for (iter = 1; iter <= opts.max_iter; ++iter) {
        double objective = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            double d_sq;
            assign[static_cast<std::size_t>(i)] = nearest_index(centers, data.data.row(i), d_sq);
            objective += d_sq;
        }
        history.push_back(objective);

        if (!prev.empty() && assign == prev) break;
        if (centers_settled) break;  // final pass re-aligned the assignment

        std::fill(counts.begin(), counts.end(), 0);
        Matrix updated = Matrix::Zero(k, data.cols());
        for (Eigen::Index i = 0; i < n; ++i) {
            updated.row(assign[static_cast<std::size_t>(i)]) += data.data.row(i);
            ++counts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0)
                updated.row(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
            else
                updated.row(c) = centers.row(c);  // placeholder until re-seeded
        }
        reseed_empty(data.data, updated, counts);

        double moved = 0.0;
        for (int c = 0; c < k; ++c)
            moved = std::max(moved, (updated.row(c) - centers.row(c)).norm());
        centers = std::move(updated);
        prev = assign;
        if (moved < opts.tol) centers_settled = true;
    }

    ClusteringResult result;
    result.assignment = std::move(assign);
    result.centroids = {std::move(centers)};
    result.objective_history = std::move(history);
    result.iterations = std::min(iter, opts.max_iter);
    result.final_k = k;
    return result;
}

ClusteringResult kmeans(const ExpressionMatrix& data, int k, std::uint64_t seed,
                        const KmeansOptions& opts) {
    return kmeans(data, k, random_centroids(data, k, seed), opts);
}

}  // namespace xclust
