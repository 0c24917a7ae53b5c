#include <cmath>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "xclust/error.hpp"
#include "xclust/matrix.hpp"
#include "xclust/synthetic.hpp"

using namespace xclust;
using namespace testsupport;

TEST_CASE("load_delimited parses labels, values and missing slots") {
    TempDir tmp;
    auto path = tmp.file("small.csv");
    write_file(path, "g1,1.0,2.0\ng2,NA,3.0\n");

    LoadOptions opts;
    opts.delimiter = ',';
    auto raw = load_delimited(path, opts);

    REQUIRE(raw.rows.size() == 2);
    CHECK(raw.cols == 2);
    CHECK(raw.rows[0].label == "g1");
    CHECK(raw.rows[0].values[0] == 1.0);
    CHECK(raw.rows[0].values[1] == 2.0);
    CHECK(raw.rows[1].values[0] == std::nullopt);
    CHECK(raw.rows[1].values[1] == 3.0);
    CHECK(raw.missing_count() == 1);
    CHECK(raw.incomplete_row_count() == 1);
}

TEST_CASE("load_delimited treats unparseable fields as missing") {
    TempDir tmp;
    auto path = tmp.file("junk.csv");
    write_file(path, "a,1.5,oops\nb,2.5,+3.5\nc,nan,1e2\n");
    LoadOptions opts;
    opts.delimiter = ',';
    auto raw = load_delimited(path, opts);
    CHECK(raw.rows[0].values[1] == std::nullopt);   // "oops"
    CHECK(raw.rows[1].values[1] == 3.5);            // leading + accepted
    CHECK(raw.rows[2].values[0] == std::nullopt);   // nan parses but is not finite
    CHECK(raw.rows[2].values[1] == 100.0);
}

TEST_CASE("load_delimited error paths") {
    TempDir tmp;

    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_delimited(tmp.file("nope.tsv")), DataError);
    }
    SUBCASE("empty file") {
        auto path = tmp.file("empty.tsv");
        write_file(path, "");
        CHECK_THROWS_WITH_AS(load_delimited(path), doctest::Contains("no data rows"),
                             DataError);
    }
    SUBCASE("blank lines only") {
        auto path = tmp.file("blank.tsv");
        write_file(path, "\n\n  \n");
        CHECK_THROWS_AS(load_delimited(path), DataError);
    }
    SUBCASE("inconsistent column count names the line") {
        auto path = tmp.file("ragged.csv");
        write_file(path, "a,1,2\nb,3\n");
        LoadOptions opts;
        opts.delimiter = ',';
        CHECK_THROWS_WITH_AS(load_delimited(path, opts), doctest::Contains(":2:"),
                             DataError);
    }
}

TEST_CASE("load_delimited with header skip and synthesized labels") {
    TempDir tmp;
    auto path = tmp.file("headed.tsv");
    write_file(path, "id\t0\t1\ng1\t1\t2\n");
    LoadOptions opts;
    opts.has_header = true;
    auto raw = load_delimited(path, opts);
    REQUIRE(raw.rows.size() == 1);
    CHECK(raw.rows[0].label == "g1");

    auto bare = tmp.file("bare.tsv");
    write_file(bare, "1\t2\n3\t4\n");
    LoadOptions nolab;
    nolab.has_labels = false;
    auto raw2 = load_delimited(bare, nolab);
    REQUIRE(raw2.rows.size() == 2);
    CHECK(raw2.cols == 2);
    CHECK(raw2.rows[0].label == "row0");
    CHECK(raw2.rows[1].values[1] == 4.0);
}

TEST_CASE("drop_missing_rows keeps complete rows in order") {
    RawMatrix raw;
    raw.cols = 2;
    raw.rows = {{"a", {1.0, std::nullopt}},
                {"b", {2.0, 3.0}},
                {"c", {std::nullopt, 4.0}}};
    auto mat = drop_missing_rows(raw);
    REQUIRE(mat.rows() == 1);
    CHECK(mat.labels[0] == "b");
    CHECK(mat.data(0, 0) == 2.0);
    CHECK(mat.data(0, 1) == 3.0);
}

TEST_CASE("drop_missing_rows is the identity on complete matrices") {
    RawMatrix raw;
    raw.cols = 2;
    raw.rows = {{"a", {1.0, 2.0}}, {"b", {3.0, 4.0}}};
    auto mat = drop_missing_rows(raw);
    CHECK(mat.rows() == 2);
    CHECK(mat.labels == std::vector<std::string>{"a", "b"});
    CHECK(mat.data(1, 1) == 4.0);
}

TEST_CASE("drop_missing_rows fails when nothing survives") {
    RawMatrix raw;
    raw.cols = 1;
    raw.rows = {{"a", {std::nullopt}}, {"b", {std::nullopt}}};
    CHECK_THROWS_WITH_AS(drop_missing_rows(raw), doctest::Contains("all rows dropped"),
                         DataError);
}

TEST_CASE("drop_missing_rows rejects duplicate labels") {
    RawMatrix raw;
    raw.cols = 1;
    raw.rows = {{"a", {1.0}}, {"a", {2.0}}};
    CHECK_THROWS_WITH_AS(drop_missing_rows(raw), doctest::Contains("duplicate"), DataError);
}

TEST_CASE("yeast-shaped ingestion: 2884 rows with 2 incomplete ones") {
    TempDir tmp;
    auto path = tmp.file("yeast.tsv");
    std::ostringstream content;
    for (int r = 0; r < 2884; ++r) {
        content << "gene" << r;
        for (int c = 0; c < 17; ++c) {
            bool missing = (r == 100 && c == 5) || (r == 2000 && c == 16);
            if (missing)
                content << "\tNA";
            else
                content << '\t' << (r % 500) + 1;
        }
        content << '\n';
    }
    write_file(path, content.str());

    auto raw = load_delimited(path);
    CHECK(raw.rows.size() == 2884);
    CHECK(raw.cols == 17);
    CHECK(raw.incomplete_row_count() == 2);

    auto mat = drop_missing_rows(raw);
    CHECK(mat.rows() == 2882);
    CHECK(mat.cols() == 17);
}

TEST_CASE("zscore_normalize matches the hand-computed (1,2,3) row") {
    auto mat = make_matrix({{1.0, 2.0, 3.0}});
    auto out = zscore_normalize(mat);
    const double expected = std::sqrt(1.5);  // (3-2)/sqrt(2/3)
    CHECK(out.data(0, 0) == doctest::Approx(-expected).epsilon(1e-12));
    CHECK(out.data(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(out.data(0, 2) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("zscore_normalize contract and fixed point") {
    auto mat = random_matrix(40, 9, 77);
    auto out = zscore_normalize(mat);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        double mean = out.data.row(r).mean();
        double sd = std::sqrt((out.data.row(r).array() - mean).square().sum() /
                              static_cast<double>(out.cols()));
        CHECK(std::abs(mean) < 1e-12);
        CHECK(std::abs(sd - 1.0) < 1e-12);
    }

    // normalizing twice changes nothing beyond float noise
    auto again = zscore_normalize(out);
    CHECK((again.data - out.data).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("zscore_normalize rejects constant rows by label") {
    auto mat = make_matrix({{1.0, 2.0, 3.0}, {5.0, 5.0, 5.0}});
    mat.labels = {"ok", "flat"};
    CHECK_THROWS_WITH_AS(zscore_normalize(mat), doctest::Contains("flat"), DataError);
}

TEST_CASE("zscore_normalize needs at least two columns") {
    auto mat = make_matrix({{1.0}});
    CHECK_THROWS_AS(zscore_normalize(mat), DataError);
}

TEST_CASE("write_delimited round-trips exactly") {
    TempDir tmp;
    auto mat = random_matrix(12, 5, 3);
    auto path = tmp.file("roundtrip.tsv");
    write_delimited(mat, path);

    LoadOptions opts;
    opts.has_header = true;
    auto back = drop_missing_rows(load_delimited(path, opts));
    REQUIRE(back.rows() == mat.rows());
    REQUIRE(back.cols() == mat.cols());
    CHECK(back.labels == mat.labels);
    CHECK((back.data - mat.data).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generate_synthetic shapes, truth and determinism") {
    SyntheticSpec spec;
    spec.clusters = 5;
    spec.points_per_cluster = 60;
    spec.dims = 17;
    spec.separation = 8.0;
    spec.spread = 1.0;
    spec.seed = 11;

    auto a = generate_synthetic(spec);
    CHECK(a.matrix.rows() == 300);
    CHECK(a.matrix.cols() == 17);
    CHECK(a.truth.size() == 300);
    CHECK(a.truth.front() == 0);
    CHECK(a.truth.back() == 4);

    // centers honor the separation floor
    for (int i = 0; i < spec.clusters; ++i)
        for (int j = i + 1; j < spec.clusters; ++j)
            CHECK((a.centers.row(i) - a.centers.row(j)).norm() >= spec.separation);

    auto b = generate_synthetic(spec);
    CHECK((a.matrix.data - b.matrix.data).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.truth == b.truth);

    spec.seed = 12;
    auto c = generate_synthetic(spec);
    CHECK((a.matrix.data - c.matrix.data).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("generate_synthetic single cluster") {
    SyntheticSpec spec;
    spec.clusters = 1;
    spec.points_per_cluster = 25;
    spec.dims = 3;
    spec.seed = 5;
    auto data = generate_synthetic(spec);
    CHECK(data.matrix.rows() == 25);
    for (int t : data.truth) CHECK(t == 0);
}

TEST_CASE("generate_synthetic validates its arguments") {
    SyntheticSpec spec;
    spec.clusters = 0;
    CHECK_THROWS_AS(generate_synthetic(spec), std::invalid_argument);
    spec.clusters = 2;
    spec.separation = 0.0;
    CHECK_THROWS_AS(generate_synthetic(spec), std::invalid_argument);
}
