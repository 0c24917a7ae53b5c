#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "xclust/ccia.hpp"
#include "xclust/error.hpp"
#include "xclust/synthetic.hpp"

using namespace xclust;
using namespace testsupport;

namespace {

const std::vector<std::vector<double>> kThreeBlobs = {
    {0, 0}, {0, 1}, {10, 0}, {10, 1}, {5, 5}, {5, 6}};

}  // namespace

TEST_CASE("three natural pairs found in creation order") {
    auto data = make_matrix(kThreeBlobs);
    auto groups = ccia_groups(data, 3);

    // target size ceil(0.75 * 6 / 3) = 2, so each group is exactly its
    // founding pair; ties at distance 1 resolve lexicographically
    REQUIRE(groups.groups.size() == 3);
    CHECK(groups.groups[0] == std::vector<Eigen::Index>{0, 1});
    CHECK(groups.groups[1] == std::vector<Eigen::Index>{2, 3});
    CHECK(groups.groups[2] == std::vector<Eigen::Index>{4, 5});
    CHECK(groups.consumed == 6);

    auto seeds = ccia_seed(data, 3);
    REQUIRE(seeds.count() == 3);
    CHECK(seeds.centers(0, 0) == 0.0);
    CHECK(seeds.centers(0, 1) == 0.5);
    CHECK(seeds.centers(1, 0) == 10.0);
    CHECK(seeds.centers(1, 1) == 0.5);
    CHECK(seeds.centers(2, 0) == 5.0);
    CHECK(seeds.centers(2, 1) == 5.5);
}

TEST_CASE("single group absorbs by closeness to any member") {
    auto data = make_matrix(kThreeBlobs);
    auto groups = ccia_groups(data, 1);

    // target ceil(0.75 * 6) = 5; growth traced by hand:
    // found {0,1}, absorb 4 (dist sqrt(41) to row 1), then 5 (dist 1 to row 4),
    // then 3 (dist sqrt(41) to row 4); row 2 is left in the pool
    REQUIRE(groups.groups.size() == 1);
    CHECK(groups.groups[0] == std::vector<Eigen::Index>{0, 1, 4, 5, 3});
    CHECK(groups.consumed == 5);

    auto seeds = ccia_seed(data, 1);
    CHECK(seeds.centers(0, 0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(seeds.centers(0, 1) == doctest::Approx(2.6).epsilon(1e-15));
}

TEST_CASE("duplicated points found groups at distance zero") {
    auto data = make_matrix({{0, 0}, {0, 0}, {9, 9}, {9, 9}});
    auto groups = ccia_groups(data, 2);
    REQUIRE(groups.groups.size() == 2);
    CHECK(groups.groups[0] == std::vector<Eigen::Index>{0, 1});
    CHECK(groups.groups[1] == std::vector<Eigen::Index>{2, 3});

    auto seeds = ccia_seed(data, 2);
    CHECK(seeds.centers(0, 0) == 0.0);
    CHECK(seeds.centers(1, 0) == 9.0);
}

TEST_CASE("ccia preconditions") {
    auto data = make_matrix(kThreeBlobs);
    CHECK_THROWS_AS(ccia_seed(data, 0), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ccia_seed(data, 4), doctest::Contains("n=6"),
                         std::invalid_argument);
}

TEST_CASE("pool exhaustion before the last group is reported") {
    // k=12, n=33: target ceil(0.75*33/12) = 3, so 11 groups consume all 33
    // points and the 12th group has nothing to start from
    auto data = random_matrix(33, 2, 17);
    CHECK_THROWS_AS(ccia_groups(data, 12), AlgorithmError);
}

TEST_CASE("last group may stay short when the pool runs dry") {
    // k=5, n=14: target 3; four groups eat 12 points, the fifth gets 2
    auto data = random_matrix(14, 2, 23);
    auto groups = ccia_groups(data, 5);
    REQUIRE(groups.groups.size() == 5);
    for (int g = 0; g < 4; ++g) CHECK(groups.groups[static_cast<std::size_t>(g)].size() == 3);
    CHECK(groups.groups[4].size() == 2);
    CHECK(groups.consumed == 14);
}

TEST_CASE("groups are disjoint and bounded") {
    auto data = random_matrix(60, 4, 5);
    auto groups = ccia_groups(data, 6);
    std::vector<char> seen(60, 0);
    Eigen::Index total = 0;
    for (const auto& group : groups.groups) {
        for (Eigen::Index i : group) {
            CHECK(!seen[static_cast<std::size_t>(i)]);
            seen[static_cast<std::size_t>(i)] = 1;
            ++total;
        }
    }
    CHECK(total == groups.consumed);
    CHECK(total <= 60);
}

TEST_CASE("seeding is bit-identical across calls") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto data = random_matrix(50, 3, seed);
        auto a = ccia_seed(data, 4);
        auto b = ccia_seed(data, 4);
        CHECK((a.centers - b.centers).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("on separated blobs every seed lands near a true center") {
    SyntheticSpec spec;
    spec.clusters = 4;
    spec.points_per_cluster = 40;
    spec.dims = 8;
    spec.separation = 20.0;
    spec.spread = 1.0;
    spec.seed = 2;
    auto synth = generate_synthetic(spec);

    auto seeds = ccia_seed(synth.matrix, 4);
    for (int s = 0; s < 4; ++s) {
        double best = std::numeric_limits<double>::infinity();
        for (int c = 0; c < 4; ++c)
            best = std::min(best, (seeds.centers.row(s) - synth.centers.row(c)).norm());
        CHECK(best < 2.0 * spec.spread);
    }
}
