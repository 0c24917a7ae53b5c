#pragma once

// Shared fixtures and reference implementations for the test suites. The
// reference code here is kept deliberately naive and separate from the
// library so the two can disagree.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "xclust/adaptive.hpp"
#include "xclust/cluster_types.hpp"
#include "xclust/matrix.hpp"

namespace testsupport {

inline xclust::ExpressionMatrix make_matrix(const std::vector<std::vector<double>>& rows) {
    xclust::ExpressionMatrix mat;
    mat.data.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        mat.labels.push_back("g" + std::to_string(r));
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            mat.data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    return mat;
}

inline double point_distance(const xclust::ExpressionMatrix& data, Eigen::Index i,
                             Eigen::Index j) {
    double sum = 0.0;
    for (Eigen::Index c = 0; c < data.cols(); ++c) {
        double d = data.data(i, c) - data.data(j, c);
        sum += d * d;
    }
    return std::sqrt(sum);
}

// Naive silhouette reference: recompute every (point, cluster) mean distance
// from scratch, O(n^2 * k).
inline std::vector<double> naive_silhouette(const xclust::ExpressionMatrix& data,
                                            const xclust::Assignment& assign) {
    const Eigen::Index n = data.rows();
    int k = 0;
    for (int c : assign) k = std::max(k, c + 1);
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
    for (int c : assign) ++counts[static_cast<std::size_t>(c)];

    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        int own = assign[static_cast<std::size_t>(i)];
        if (counts[static_cast<std::size_t>(own)] <= 1) continue;
        double a = 0.0;
        for (Eigen::Index j = 0; j < n; ++j)
            if (j != i && assign[static_cast<std::size_t>(j)] == own)
                a += point_distance(data, i, j);
        a /= static_cast<double>(counts[static_cast<std::size_t>(own)] - 1);

        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == own || counts[static_cast<std::size_t>(c)] == 0) continue;
            double mean = 0.0;
            for (Eigen::Index j = 0; j < n; ++j)
                if (assign[static_cast<std::size_t>(j)] == c)
                    mean += point_distance(data, i, j);
            mean /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
            b = std::min(b, mean);
        }
        double denom = std::max(a, b);
        out[static_cast<std::size_t>(i)] = denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return out;
}

// Brute-force cluster means for checking recompute_centroids.
inline std::vector<std::vector<double>> brute_means(const xclust::ExpressionMatrix& data,
                                                    const xclust::Assignment& assign, int k) {
    std::vector<std::vector<double>> means(
        static_cast<std::size_t>(k),
        std::vector<double>(static_cast<std::size_t>(data.cols()), 0.0));
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < data.rows(); ++i) {
        auto c = static_cast<std::size_t>(assign[static_cast<std::size_t>(i)]);
        ++counts[c];
        for (Eigen::Index d = 0; d < data.cols(); ++d)
            means[c][static_cast<std::size_t>(d)] += data.data(i, d);
    }
    for (std::size_t c = 0; c < means.size(); ++c)
        for (auto& v : means[c]) v /= counts[c];
    return means;
}

// Total sum of squared deviations from the global mean.
inline double total_scatter(const xclust::ExpressionMatrix& data) {
    std::vector<double> mean(static_cast<std::size_t>(data.cols()), 0.0);
    for (Eigen::Index i = 0; i < data.rows(); ++i)
        for (Eigen::Index c = 0; c < data.cols(); ++c)
            mean[static_cast<std::size_t>(c)] += data.data(i, c);
    for (auto& v : mean) v /= static_cast<double>(data.rows());
    double total = 0.0;
    for (Eigen::Index i = 0; i < data.rows(); ++i)
        for (Eigen::Index c = 0; c < data.cols(); ++c) {
            double d = data.data(i, c) - mean[static_cast<std::size_t>(c)];
            total += d * d;
        }
    return total;
}

inline xclust::ExpressionMatrix random_matrix(Eigen::Index n, Eigen::Index m,
                                              std::uint64_t seed, double lo = -3.0,
                                              double hi = 3.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    xclust::ExpressionMatrix mat;
    mat.data.resize(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        mat.labels.push_back("g" + std::to_string(i));
        for (Eigen::Index c = 0; c < m; ++c) mat.data(i, c) = dist(rng);
    }
    return mat;
}

// Seven tight blobs on a line. Clusters {A}, {B,C} sit close together and
// {D,E,F,G} spans a wide range, so a low merge threshold plus a split
// threshold below the wide cluster's spread turns the initial 3-partition
// {A | B,C | D..G} into {A,B,C | D,E | F,G}.
struct MergeSplitScenario {
    xclust::ExpressionMatrix data;
    xclust::CentroidSet init;     // centroids of the described 3-partition
    xclust::IsodataParams params;
};

inline MergeSplitScenario merge_split_scenario() {
    const double blob_x[7] = {0.0, 1.0, 2.0, 10.0, 12.0, 18.0, 20.0};
    std::vector<std::vector<double>> rows;
    for (double bx : blob_x) {
        rows.push_back({bx, 0.0});
        rows.push_back({bx + 0.05, 0.0});
        rows.push_back({bx - 0.05, 0.0});
        rows.push_back({bx, 0.05});
        rows.push_back({bx, -0.05});
    }
    MergeSplitScenario s;
    s.data = make_matrix(rows);
    s.init.centers.resize(3, 2);
    s.init.centers << 0.0, 0.0,   // {A}
        1.5, 0.0,                 // {B,C}
        15.0, 0.0;                // {D,E,F,G}
    s.params.k_init = 3;
    s.params.theta_n = 1;
    s.params.theta_s = 2.0;  // below the {D..G} spread (~4.12), above everything else
    s.params.theta_c = 2.0;  // above the {A}-{B,C} centroid gap (1.5)
    s.params.max_iter = 10;
    return s;
}

// Unique scratch directory, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("xclust-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testsupport
