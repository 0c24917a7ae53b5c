#include "xclust/adaptive.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "xclust/ccia.hpp"
#include "xclust/error.hpp"

namespace xclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct WorkingState {
    Matrix centers;
    Assignment assign;
    std::vector<Eigen::Index> counts;

    int k() const { return static_cast<int>(centers.rows()); }
};

std::vector<Eigen::Index> tally(const Assignment& assign, int k) {
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
    for (int c : assign) ++counts[static_cast<std::size_t>(c)];
    return counts;
}

std::vector<std::vector<Eigen::Index>> member_lists(const Assignment& assign, int k) {
    std::vector<std::vector<Eigen::Index>> members(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < assign.size(); ++i)
        members[static_cast<std::size_t>(assign[i])].push_back(static_cast<Eigen::Index>(i));
    return members;
}

Eigen::RowVectorXd per_dim_std(const Matrix& data, std::span<const Eigen::Index> members) {
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(data.cols());
    for (Eigen::Index i : members) mean += data.row(i);
    mean /= static_cast<double>(members.size());
    Eigen::RowVectorXd var = Eigen::RowVectorXd::Zero(data.cols());
    for (Eigen::Index i : members)
        var += (data.row(i) - mean).array().square().matrix();
    var /= static_cast<double>(members.size());
    return var.array().sqrt();
}

// Largest coefficient, first index on ties.
Eigen::Index argmax(const Eigen::RowVectorXd& v) {
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < v.size(); ++j)
        if (v(j) > v(best)) best = j;
    return best;
}

int nearest_center(const Matrix& centers, const Eigen::Ref<const Eigen::RowVectorXd>& point) {
    int best = 0;
    double best_sq = (centers.row(0) - point).squaredNorm();
    for (Eigen::Index c = 1; c < centers.rows(); ++c) {
        double d = (centers.row(c) - point).squaredNorm();
        if (d < best_sq) {
            best_sq = d;
            best = static_cast<int>(c);
        }
    }
    return best;
}

// Drop every cluster with fewer than min_size members and hand its points
// to the nearest surviving center. Throws if nothing would survive.
int discard_undersized(WorkingState& st, const Matrix& data, Eigen::Index min_size) {
    const int k = st.k();
    std::vector<char> keep(static_cast<std::size_t>(k), 1);
    int dropped = 0;
    for (int c = 0; c < k; ++c)
        if (st.counts[static_cast<std::size_t>(c)] < min_size) {
            keep[static_cast<std::size_t>(c)] = 0;
            ++dropped;
        }
    if (dropped == 0) return 0;
    if (dropped == k)
        throw AlgorithmError("all clusters discarded: every cluster has fewer than " +
                             std::to_string(min_size) + " members");

    std::vector<int> remap(static_cast<std::size_t>(k), -1);
    Matrix kept(k - dropped, st.centers.cols());
    int nk = 0;
    for (int c = 0; c < k; ++c)
        if (keep[static_cast<std::size_t>(c)]) {
            remap[static_cast<std::size_t>(c)] = nk;
            kept.row(nk++) = st.centers.row(c);
        }
    for (std::size_t i = 0; i < st.assign.size(); ++i) {
        int c = st.assign[i];
        st.assign[i] = keep[static_cast<std::size_t>(c)]
                           ? remap[static_cast<std::size_t>(c)]
                           : nearest_center(kept, data.row(static_cast<Eigen::Index>(i)));
    }
    st.centers = std::move(kept);
    st.counts = tally(st.assign, nk);
    return dropped;
}

// Split every cluster whose largest per-dimension deviation exceeds the
// per-dimension threshold, as long as it has min_split_size members and the
// live cluster count stays below max_k. Members move to the nearer child.
int split_pass(WorkingState& st, const Matrix& data,
               const Eigen::RowVectorXd& threshold, Eigen::Index min_split_size,
               int max_k) {
    const int k0 = st.k();
    auto members = member_lists(st.assign, k0);
    int splits = 0;
    for (int c = 0; c < k0; ++c) {
        if (st.k() >= max_k) break;
        const auto& mem = members[static_cast<std::size_t>(c)];
        if (static_cast<Eigen::Index>(mem.size()) < std::max<Eigen::Index>(min_split_size, 2))
            continue;
        Eigen::RowVectorXd sd = per_dim_std(data, mem);
        Eigen::Index j = argmax(sd);
        if (!(sd(j) > threshold(j))) continue;

        Eigen::RowVectorXd low = st.centers.row(c);
        Eigen::RowVectorXd high = st.centers.row(c);
        low(j) -= 0.5 * sd(j);
        high(j) += 0.5 * sd(j);

        int fresh = st.k();
        st.centers.conservativeResize(fresh + 1, Eigen::NoChange);
        st.centers.row(c) = low;
        st.centers.row(fresh) = high;
        Eigen::Index moved = 0;
        for (Eigen::Index i : mem) {
            double d_low = (data.row(i) - low).squaredNorm();
            double d_high = (data.row(i) - high).squaredNorm();
            if (d_high < d_low) {
                st.assign[static_cast<std::size_t>(i)] = fresh;
                ++moved;
            }
        }
        st.counts[static_cast<std::size_t>(c)] =
            static_cast<Eigen::Index>(mem.size()) - moved;
        st.counts.push_back(moved);
        ++splits;
    }
    return splits;
}

// Repeatedly merge the closest pair of centers while their distance is
// below the threshold, at most budget times.
int merge_pass(WorkingState& st, double threshold, int budget) {
    int merges = 0;
    while (merges < budget && st.k() >= 2) {
        int best_i = -1, best_j = -1;
        double best = kInf;
        for (int i = 0; i < st.k(); ++i)
            for (int j = i + 1; j < st.k(); ++j) {
                double d = (st.centers.row(i) - st.centers.row(j)).norm();
                if (d < best) {
                    best = d;
                    best_i = i;
                    best_j = j;
                }
            }
        if (!(best < threshold)) break;

        st.centers = merge_clusters({st.centers}, best_i, best_j, st.counts).centers;
        for (auto& a : st.assign) {
            if (a == best_j)
                a = best_i;
            else if (a > best_j)
                --a;
        }
        st.counts[static_cast<std::size_t>(best_i)] +=
            st.counts[static_cast<std::size_t>(best_j)];
        st.counts.erase(st.counts.begin() + best_j);
        ++merges;
    }
    return merges;
}

void check_init(const ExpressionMatrix& data, int k_init, const CentroidSet& init) {
    if (k_init > data.rows())
        throw std::invalid_argument("k_init=" + std::to_string(k_init) +
                                    " exceeds n=" + std::to_string(data.rows()));
    if (init.count() != k_init)
        throw std::invalid_argument("init has " + std::to_string(init.count()) +
                                    " centers, expected " + std::to_string(k_init));
    if (init.dim() != data.cols())
        throw std::invalid_argument("init dimension mismatch");
}

}  // namespace

std::pair<Eigen::RowVectorXd, Eigen::RowVectorXd> split_cluster(
    const ExpressionMatrix& data, std::span<const Eigen::Index> members,
    const Eigen::Ref<const Eigen::RowVectorXd>& center) {
    if (members.size() < 2)
        throw std::invalid_argument("split_cluster: needs at least 2 members, got " +
                                    std::to_string(members.size()));
    if (center.size() != data.cols())
        throw std::invalid_argument("split_cluster: center dimension mismatch");
    for (Eigen::Index i : members)
        if (i < 0 || i >= data.rows())
            throw std::invalid_argument("split_cluster: member index out of range");

    Eigen::RowVectorXd sd = per_dim_std(data.data, members);
    Eigen::Index j = argmax(sd);
    Eigen::RowVectorXd low = center;
    Eigen::RowVectorXd high = center;
    low(j) -= 0.5 * sd(j);
    high(j) += 0.5 * sd(j);
    return {low, high};
}

CentroidSet merge_clusters(const CentroidSet& centroids, int i, int j,
                           const std::vector<Eigen::Index>& sizes) {
    const int k = centroids.count();
    if (i == j) throw std::invalid_argument("merge_clusters: i and j must differ");
    if (i < 0 || i >= k || j < 0 || j >= k)
        throw std::invalid_argument("merge_clusters: index out of range");
    if (static_cast<int>(sizes.size()) != k)
        throw std::invalid_argument("merge_clusters: size list length mismatch");
    const double wi = static_cast<double>(sizes[static_cast<std::size_t>(i)]);
    const double wj = static_cast<double>(sizes[static_cast<std::size_t>(j)]);
    if (wi + wj <= 0.0)
        throw std::invalid_argument("merge_clusters: merged clusters have no members");

    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    Matrix out(k - 1, centroids.dim());
    int r = 0;
    for (int c = 0; c < k; ++c) {
        if (c == hi) continue;
        out.row(r++) = centroids.centers.row(c);
    }
    out.row(lo) =
        (wi * centroids.centers.row(i) + wj * centroids.centers.row(j)) / (wi + wj);
    return {out};
}

double auto_merge_factor(const CentroidSet& centroids) {
    const int k = centroids.count();
    if (k < 2) throw std::invalid_argument("auto_merge_factor: needs at least 2 centroids");
    double sum = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            sum += (centroids.centers.row(i) - centroids.centers.row(j)).norm();
    return sum / (0.5 * k * (k - 1));
}

ClusteringResult isodata(const ExpressionMatrix& data, const IsodataParams& params,
                         const CentroidSet& init) {
    if (params.k_init < 1) throw std::invalid_argument("isodata: k_init must be >= 1");
    if (params.theta_n < 1) throw std::invalid_argument("isodata: theta_n must be >= 1");
    if (!(params.theta_s > 0.0)) throw std::invalid_argument("isodata: theta_s must be > 0");
    if (params.theta_c < 0.0) throw std::invalid_argument("isodata: theta_c must be >= 0");
    if (params.max_iter < 1) throw std::invalid_argument("isodata: max_iter must be >= 1");
    check_init(data, params.k_init, init);

    const Eigen::RowVectorXd split_threshold =
        Eigen::RowVectorXd::Constant(data.cols(), params.theta_s);
    WorkingState st;
    st.centers = init.centers;

    ClusteringResult out;
    Assignment prev;
    int prev_k = -1;
    int round = 0;
    bool dirty = false;
    for (round = 1; round <= params.max_iter; ++round) {
        auto km = kmeans(data, st.k(), CentroidSet{st.centers}, params.kmeans_opts);
        out.objective_history.insert(out.objective_history.end(),
                                     km.objective_history.begin(),
                                     km.objective_history.end());
        st.centers = std::move(km.centroids.centers);
        st.assign = std::move(km.assignment);
        st.counts = tally(st.assign, st.k());

        int dropped = discard_undersized(st, data.data, params.theta_n);
        int split = split_pass(st, data.data, split_threshold,
                               2 * static_cast<Eigen::Index>(params.theta_n),
                               std::numeric_limits<int>::max());
        int merged = merge_pass(st, params.theta_c, st.k() / 2);
        out.discards += dropped;
        out.splits += split;
        out.merges += merged;

        bool unchanged = dropped + split + merged == 0 && st.k() == prev_k &&
                         st.assign == prev;
        if (unchanged) {
            dirty = false;
            break;
        }
        dirty = dropped + split + merged > 0;
        prev = st.assign;
        prev_k = st.k();
    }

    // a max_iter exit right after a merge/split leaves centers that the
    // assignment has not seen yet; re-cluster so every point ends on its
    // nearest centroid
    if (dirty) {
        auto km = kmeans(data, st.k(), CentroidSet{st.centers}, params.kmeans_opts);
        out.objective_history.insert(out.objective_history.end(),
                                     km.objective_history.begin(),
                                     km.objective_history.end());
        st.centers = std::move(km.centroids.centers);
        st.assign = std::move(km.assignment);
    }

    out.assignment = std::move(st.assign);
    out.centroids = {std::move(st.centers)};
    out.iterations = std::min(round, params.max_iter);
    out.final_k = out.centroids.count();
    return out;
}

ClusteringResult isodata(const ExpressionMatrix& data, const IsodataParams& params,
                         std::uint64_t seed) {
    return isodata(data, params, random_centroids(data, params.k_init, seed));
}

ClusteringResult agmfi(const ExpressionMatrix& data, const AgmfiParams& params,
                       const CentroidSet& init) {
    if (params.k_init < 1) throw std::invalid_argument("agmfi: k_init must be >= 1");
    if (params.min_cluster_size < 1)
        throw std::invalid_argument("agmfi: min_cluster_size must be >= 1");
    if (params.max_iter < 1) throw std::invalid_argument("agmfi: max_iter must be >= 1");
    if (!(params.split_factor > 0.0))
        throw std::invalid_argument("agmfi: split_factor must be > 0");
    if (params.merge_scale < 0.0)
        throw std::invalid_argument("agmfi: merge_scale must be >= 0");
    check_init(data, params.k_init, init);

    // Split eligibility compares against the whole dataset's spread.
    Eigen::RowVectorXd dataset_mean = data.data.colwise().mean();
    Eigen::RowVectorXd dataset_var =
        (data.data.rowwise() - dataset_mean).array().square().colwise().sum() /
        static_cast<double>(data.rows());
    const Eigen::RowVectorXd split_threshold =
        params.split_factor * dataset_var.array().sqrt().matrix();

    ClusteringResult out;
    auto km = kmeans(data, params.k_init, init, params.kmeans_opts);
    out.objective_history = std::move(km.objective_history);

    WorkingState st;
    st.centers = std::move(km.centroids.centers);
    st.assign = std::move(km.assignment);
    st.counts = tally(st.assign, st.k());

    Assignment prev = st.assign;
    int prev_k = st.k();
    int quiet_rounds = 0;
    int round = 0;
    for (round = 1; round <= params.max_iter; ++round) {
        double merge_threshold =
            st.k() >= 2 ? auto_merge_factor({st.centers}) * params.merge_scale : 0.0;
        int dropped = discard_undersized(st, data.data, params.min_cluster_size);
        int split = 0, merged = 0;
        if (round % 2 == 0)
            merged = merge_pass(st, merge_threshold, st.k() / 2);
        else
            split = split_pass(st, data.data, split_threshold,
                               2 * static_cast<Eigen::Index>(params.min_cluster_size),
                               2 * params.k_init);

        auto km2 = kmeans(data, st.k(), CentroidSet{st.centers}, params.kmeans_opts);
        out.objective_history.insert(out.objective_history.end(),
                                     km2.objective_history.begin(),
                                     km2.objective_history.end());
        st.centers = std::move(km2.centroids.centers);
        st.assign = std::move(km2.assignment);
        st.counts = tally(st.assign, st.k());

        out.discards += dropped;
        out.splits += split;
        out.merges += merged;

        bool unchanged = dropped + split + merged == 0 && st.k() == prev_k &&
                         st.assign == prev;
        quiet_rounds = unchanged ? quiet_rounds + 1 : 0;
        prev = st.assign;
        prev_k = st.k();
        // a merge round and a split round must both pass without effect
        if (quiet_rounds >= 2) break;
    }

    out.assignment = std::move(st.assign);
    out.centroids = {std::move(st.centers)};
    out.iterations = std::min(round, params.max_iter);
    out.final_k = out.centroids.count();
    return out;
}

ClusteringResult agmfi(const ExpressionMatrix& data, const AgmfiParams& params,
                       std::uint64_t seed) {
    return agmfi(data, params, random_centroids(data, params.k_init, seed));
}

ClusteringResult eiagmfi(const ExpressionMatrix& data, const AgmfiParams& params) {
    return agmfi(data, params, ccia_seed(data, params.k_init));
}

}  // namespace xclust
