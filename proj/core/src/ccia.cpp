#include "xclust/ccia.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "xclust/error.hpp"

namespace xclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Closest alive pair by squared distance; ties resolve to the smallest
// (i, j) in lexicographic order because the scan is ascending and strict.
std::pair<Eigen::Index, Eigen::Index> closest_pair(const Matrix& data,
                                                   const std::vector<char>& alive) {
    Eigen::Index best_i = -1, best_j = -1;
    double best = kInf;
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        if (!alive[static_cast<std::size_t>(i)]) continue;
        for (Eigen::Index j = i + 1; j < data.rows(); ++j) {
            if (!alive[static_cast<std::size_t>(j)]) continue;
            double d = (data.row(i) - data.row(j)).squaredNorm();
            if (d < best) {
                best = d;
                best_i = i;
                best_j = j;
            }
        }
    }
    return {best_i, best_j};
}

}  // namespace

SeedGroups ccia_groups(const ExpressionMatrix& data, int k) {
    const Eigen::Index n = data.rows();
    if (k < 1) throw std::invalid_argument("ccia: k must be >= 1");
    if (n < 2 * static_cast<Eigen::Index>(k))
        throw std::invalid_argument("ccia: needs at least 2*k data rows (n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) + ")");

    // ceil(0.75 * n / k) without going through floating point
    const Eigen::Index target = (3 * n + 4 * k - 1) / (4 * k);

    SeedGroups out;
    out.groups.reserve(static_cast<std::size_t>(k));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    Eigen::Index alive_count = n;
    std::vector<double> dist_to_group(static_cast<std::size_t>(n), kInf);

    for (int g = 0; g < k; ++g) {
        std::vector<Eigen::Index> group;
        if (alive_count == 0)
            throw AlgorithmError("ccia: point pool exhausted before group " +
                                 std::to_string(g + 1) + " of " + std::to_string(k));
        if (alive_count == 1) {
            for (Eigen::Index i = 0; i < n; ++i)
                if (alive[static_cast<std::size_t>(i)]) group.push_back(i);
            alive[static_cast<std::size_t>(group.front())] = 0;
            alive_count = 0;
            out.groups.push_back(std::move(group));
            continue;
        }

        auto [a, b] = closest_pair(data.data, alive);
        group = {a, b};
        alive[static_cast<std::size_t>(a)] = 0;
        alive[static_cast<std::size_t>(b)] = 0;
        alive_count -= 2;

        for (Eigen::Index i = 0; i < n; ++i) {
            if (!alive[static_cast<std::size_t>(i)]) continue;
            dist_to_group[static_cast<std::size_t>(i)] =
                std::min((data.data.row(i) - data.data.row(a)).squaredNorm(),
                         (data.data.row(i) - data.data.row(b)).squaredNorm());
        }

        while (static_cast<Eigen::Index>(group.size()) < target && alive_count > 0) {
            Eigen::Index next = -1;
            double best = kInf;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (!alive[static_cast<std::size_t>(i)]) continue;
                if (dist_to_group[static_cast<std::size_t>(i)] < best) {
                    best = dist_to_group[static_cast<std::size_t>(i)];
                    next = i;
                }
            }
            group.push_back(next);
            alive[static_cast<std::size_t>(next)] = 0;
            --alive_count;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (!alive[static_cast<std::size_t>(i)]) continue;
                double d = (data.data.row(i) - data.data.row(next)).squaredNorm();
                auto& cur = dist_to_group[static_cast<std::size_t>(i)];
                if (d < cur) cur = d;
            }
        }
        out.groups.push_back(std::move(group));
    }

    out.consumed = n - alive_count;
    return out;
}

CentroidSet ccia_seed(const ExpressionMatrix& data, int k) {
    SeedGroups seeds = ccia_groups(data, k);
    Matrix centers = Matrix::Zero(k, data.cols());
    for (int g = 0; g < k; ++g) {
        const auto& group = seeds.groups[static_cast<std::size_t>(g)];
        for (Eigen::Index i : group) centers.row(g) += data.data.row(i);
        centers.row(g) /= static_cast<double>(group.size());
    }
    return {centers};
}

}  // namespace xclust
