#include "xclust/synthetic.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace xclust {

namespace {

// Rejection-sample centers uniformly in a cube, widening the cube whenever
// the separation constraint stalls. Deterministic for a fixed engine state.
Matrix place_centers(int k, int dims, double separation, std::mt19937_64& rng) {
    Matrix centers(k, dims);
    double side = 2.0 * separation;
    int placed = 0;
    int stale = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (placed < k) {
        Eigen::RowVectorXd candidate(dims);
        for (int d = 0; d < dims; ++d) candidate(d) = side * unit(rng);
        bool ok = true;
        for (int c = 0; c < placed && ok; ++c)
            ok = (centers.row(c) - candidate).norm() >= separation;
        if (ok) {
            centers.row(placed++) = candidate;
            stale = 0;
        } else if (++stale >= 200) {
            side *= 1.5;
            stale = 0;
        }
    }
    return centers;
}

}  // namespace

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
    if (spec.clusters < 1) throw std::invalid_argument("clusters must be >= 1");
    if (spec.points_per_cluster < 1)
        throw std::invalid_argument("points_per_cluster must be >= 1");
    if (spec.dims < 1) throw std::invalid_argument("dims must be >= 1");
    if (!(spec.separation > 0.0)) throw std::invalid_argument("separation must be > 0");
    if (!(spec.spread > 0.0)) throw std::invalid_argument("spread must be > 0");

    std::mt19937_64 rng(spec.seed);
    SyntheticData out;
    out.centers = place_centers(spec.clusters, spec.dims, spec.separation, rng);

    const Eigen::Index n =
        static_cast<Eigen::Index>(spec.clusters) * spec.points_per_cluster;
    out.matrix.data.resize(n, spec.dims);
    out.matrix.labels.reserve(static_cast<std::size_t>(n));
    out.truth.reserve(static_cast<std::size_t>(n));

    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Index row = 0;
    for (int c = 0; c < spec.clusters; ++c) {
        for (int p = 0; p < spec.points_per_cluster; ++p, ++row) {
            for (int d = 0; d < spec.dims; ++d)
                out.matrix.data(row, d) = out.centers(c, d) + spec.spread * gauss(rng);
            out.matrix.labels.push_back("g" + std::to_string(row));
            out.truth.push_back(c);
        }
    }
    return out;
}

}  // namespace xclust
