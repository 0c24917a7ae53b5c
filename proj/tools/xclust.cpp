// xclust: clustering toolkit for expression-style numeric matrices.
//
// Subcommands:
//   generate      synthesize Gaussian-blob benchmark data to a file
//   normalize     drop incomplete rows and z-score each row to a file
//   seed-inspect  print the deterministic seed groups and their centroids
//   run           run one algorithm repeatedly with a seed schedule
//   compare       run several algorithms under the same data and seeds

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "xclust/adaptive.hpp"
#include "xclust/ccia.hpp"
#include "xclust/error.hpp"
#include "xclust/kmeans.hpp"
#include "xclust/matrix.hpp"
#include "xclust/silhouette.hpp"
#include "xclust/synthetic.hpp"

using namespace xclust;

namespace {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_f3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

char parse_delimiter(const std::string& text) {
    if (text == "\\t" || text == "tab") return '\t';
    if (text.size() != 1)
        throw UsageError("delimiter must be a single character, '\\t' or 'tab'");
    return text[0];
}

// ---------------------------------------------------------------------------
// input handling

struct InputOptions {
    std::string path;
    std::string synthetic;  // key=value spec, e.g. k=5,per=60,dims=17,sep=8,spread=1
    std::string delimiter = "\\t";
    std::vector<std::string> missing = {"NA", "N/A", ""};
    bool header = false;
    bool no_labels = false;
    bool normalize = false;
};

SyntheticSpec parse_synthetic_spec(const std::string& text, std::uint64_t default_seed) {
    SyntheticSpec spec;
    spec.seed = default_seed;
    std::size_t start = 0;
    while (start < text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        start = comma == std::string::npos ? text.size() : comma + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("synthetic spec items must look like key=value, got '" + item + "'");
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        try {
            if (key == "k")
                spec.clusters = std::stoi(value);
            else if (key == "per")
                spec.points_per_cluster = std::stoi(value);
            else if (key == "dims")
                spec.dims = std::stoi(value);
            else if (key == "sep")
                spec.separation = std::stod(value);
            else if (key == "spread")
                spec.spread = std::stod(value);
            else if (key == "seed")
                spec.seed = std::stoull(value);
            else
                throw UsageError("unknown synthetic spec key '" + key + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad value for synthetic spec key '" + key + "': " + value);
        }
    }
    return spec;
}

struct LoadedInput {
    ExpressionMatrix matrix;
    std::string name;
};

LoadedInput load_input(const InputOptions& in, std::uint64_t default_seed) {
    if (in.path.empty() == in.synthetic.empty())
        throw UsageError("provide exactly one of an input file or --synthetic");

    LoadedInput loaded;
    if (!in.synthetic.empty()) {
        loaded.matrix = generate_synthetic(parse_synthetic_spec(in.synthetic, default_seed)).matrix;
        loaded.name = "synthetic";
    } else {
        LoadOptions opts;
        opts.delimiter = parse_delimiter(in.delimiter);
        opts.missing_tokens = in.missing;
        opts.has_header = in.header;
        opts.has_labels = !in.no_labels;
        loaded.matrix = drop_missing_rows(load_delimited(in.path, opts));
        loaded.name = std::filesystem::path(in.path).stem().string();
    }
    if (in.normalize) loaded.matrix = zscore_normalize(loaded.matrix);
    return loaded;
}

// ---------------------------------------------------------------------------
// algorithm execution

struct AlgoOptions {
    int k_init = 10;
    int repeats = 7;
    std::uint64_t seed = 1;
    std::string init = "random";  // random | ccia | file
    std::string init_file;
    // kmeans
    int kmeans_max_iter = 100;
    double tol = 1e-8;
    // isodata
    int theta_n = 2;
    double theta_s = 1.0;
    double theta_c = 0.5;
    // agmfi
    int min_cluster_size = 2;
    double split_factor = 1.0;
    double merge_scale = 0.5;
    int max_iter = 20;
};

struct RunRecord {
    int run = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    int final_k = 0;
    int iterations = 0;
    double objective = 0.0;
    double quality = std::numeric_limits<double>::quiet_NaN();
    ClusteringResult result;
};

KmeansOptions kmeans_options(const AlgoOptions& o) { return {o.kmeans_max_iter, o.tol}; }

IsodataParams isodata_params(const AlgoOptions& o) {
    IsodataParams p;
    p.k_init = o.k_init;
    p.theta_n = o.theta_n;
    p.theta_s = o.theta_s;
    p.theta_c = o.theta_c;
    p.max_iter = o.max_iter;
    p.kmeans_opts = kmeans_options(o);
    return p;
}

AgmfiParams agmfi_params(const AlgoOptions& o) {
    AgmfiParams p;
    p.k_init = o.k_init;
    p.min_cluster_size = o.min_cluster_size;
    p.max_iter = o.max_iter;
    p.split_factor = o.split_factor;
    p.merge_scale = o.merge_scale;
    p.kmeans_opts = kmeans_options(o);
    return p;
}

CentroidSet file_centroids(const std::string& path, const ExpressionMatrix& data, int k) {
    if (path.empty()) throw UsageError("--init file requires --init-file");
    LoadOptions opts;
    opts.has_labels = false;
    auto mat = drop_missing_rows(load_delimited(path, opts));
    if (mat.rows() != k)
        throw UsageError("--init-file has " + std::to_string(mat.rows()) +
                         " centers, expected " + std::to_string(k));
    if (mat.cols() != data.cols())
        throw UsageError("--init-file dimension does not match the data");
    return {mat.data};
}

CentroidSet make_init(const std::string& kind, const ExpressionMatrix& data,
                      const AlgoOptions& o, std::uint64_t seed) {
    if (kind == "random") return random_centroids(data, o.k_init, seed);
    if (kind == "ccia") return ccia_seed(data, o.k_init);
    if (kind == "file") return file_centroids(o.init_file, data, o.k_init);
    throw UsageError("unknown init '" + kind + "' (expected random, ccia or file)");
}

// `algorithm` values: kmeans, ccia-kmeans, isodata, agmfi, eiagmfi.
// ccia-kmeans fixes init=ccia and eiagmfi is inherently ccia-seeded; the
// others honor the requested init.
RunRecord execute(const std::string& algorithm, const ExpressionMatrix& data,
                  const AlgoOptions& o, int run_index) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(run_index);
    RunRecord rec;
    rec.run = run_index + 1;
    rec.seed = seed;
    rec.algorithm = algorithm;

    if (algorithm == "kmeans")
        rec.result = kmeans(data, o.k_init, make_init(o.init, data, o, seed),
                            kmeans_options(o));
    else if (algorithm == "ccia-kmeans")
        rec.result = kmeans(data, o.k_init, ccia_seed(data, o.k_init), kmeans_options(o));
    else if (algorithm == "isodata")
        rec.result = isodata(data, isodata_params(o), make_init(o.init, data, o, seed));
    else if (algorithm == "agmfi")
        rec.result = agmfi(data, agmfi_params(o), make_init(o.init, data, o, seed));
    else if (algorithm == "eiagmfi")
        rec.result = eiagmfi(data, agmfi_params(o));
    else
        throw UsageError("unknown algorithm '" + algorithm + "'");

    rec.final_k = rec.result.final_k;
    rec.iterations = rec.result.iterations;
    rec.objective = rec.result.final_objective();
    if (rec.final_k >= 2)
        rec.quality = silhouette(data, rec.result.assignment).scaled_score;
    return rec;
}

// ---------------------------------------------------------------------------
// output

double median(std::vector<double> values) {
    std::erase_if(values, [](double v) { return std::isnan(v); });
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    auto mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

const char* kCsvHeader = "run,seed,algorithm,dataset,n,m,k_init,final_k,iterations,objective,quality";

std::string csv_row(const RunRecord& r, const LoadedInput& input, int k_init) {
    std::string quality = std::isnan(r.quality) ? "" : fmt_g(r.quality);
    return std::to_string(r.run) + "," + std::to_string(r.seed) + "," + r.algorithm + "," +
           input.name + "," + std::to_string(input.matrix.rows()) + "," +
           std::to_string(input.matrix.cols()) + "," + std::to_string(k_init) + "," +
           std::to_string(r.final_k) + "," + std::to_string(r.iterations) + "," +
           fmt_g(r.objective) + "," + quality;
}

nlohmann::json json_row(const RunRecord& r, const LoadedInput& input, int k_init) {
    nlohmann::json j;
    j["run"] = r.run;
    j["seed"] = r.seed;
    j["algorithm"] = r.algorithm;
    j["dataset"] = input.name;
    j["n"] = input.matrix.rows();
    j["m"] = input.matrix.cols();
    j["k_init"] = k_init;
    j["final_k"] = r.final_k;
    j["iterations"] = r.iterations;
    j["objective"] = r.objective;
    if (std::isnan(r.quality))
        j["quality"] = nullptr;
    else
        j["quality"] = r.quality;
    return j;
}

void print_run_table(const std::vector<RunRecord>& records, const LoadedInput& input,
                     const AlgoOptions& o, const std::string& algorithm) {
    std::cout << "dataset=" << input.name << " n=" << input.matrix.rows()
              << " m=" << input.matrix.cols() << " algorithm=" << algorithm
              << " init=" << (algorithm == "eiagmfi" ? "ccia" : o.init)
              << " k_init=" << o.k_init << " repeats=" << o.repeats << " seed=" << o.seed
              << "\n";
    std::printf("%4s %10s %8s %11s %14s %10s\n", "run", "seed", "final_k", "iterations",
                "objective", "quality");
    for (const auto& r : records)
        std::printf("%4d %10llu %8d %11d %14.6g %10s\n", r.run,
                    static_cast<unsigned long long>(r.seed), r.final_k, r.iterations,
                    r.objective,
                    std::isnan(r.quality) ? "n/a" : fmt_f3(r.quality).c_str());

    std::vector<double> qualities, finals;
    for (const auto& r : records) {
        qualities.push_back(r.quality);
        finals.push_back(r.final_k);
    }
    int best = -1;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (!std::isnan(records[i].quality) &&
            (best < 0 || records[i].quality > records[static_cast<std::size_t>(best)].quality))
            best = static_cast<int>(i);
    std::cout << "median quality: "
              << (std::isnan(median(qualities)) ? "n/a" : fmt_f3(median(qualities)));
    if (best >= 0)
        std::cout << "   best quality: " << fmt_f3(records[static_cast<std::size_t>(best)].quality)
                  << " (run " << records[static_cast<std::size_t>(best)].run << ")";
    std::cout << "   median final_k: " << fmt_g(median(finals)) << "\n";
}

void write_quality_report(const std::string& path, const std::string& format,
                          const LoadedInput& input, const RunRecord& rec) {
    if (rec.final_k < 2)
        throw AlgorithmError("quality report needs at least 2 clusters, best run has " +
                             std::to_string(rec.final_k));
    auto report = silhouette(input.matrix, rec.result.assignment);
    std::ofstream out(path);
    if (!out) throw DataError("cannot open file for writing: " + path);
    if (format == "kv") {
        out << "dataset " << input.name << "\n";
        out << "n " << input.matrix.rows() << "\n";
        out << "clusters " << rec.final_k << "\n";
        out << "overall " << fmt_g(report.overall) << "\n";
        out << "scaled_score " << fmt_g(report.scaled_score) << "\n";
        for (std::size_t c = 0; c < report.per_cluster_mean.size(); ++c)
            out << "cluster_mean." << c << " " << fmt_g(report.per_cluster_mean[c]) << "\n";
    } else if (format == "csv") {
        out << "label,cluster,silhouette\n";
        for (Eigen::Index i = 0; i < input.matrix.rows(); ++i)
            out << input.matrix.labels[static_cast<std::size_t>(i)] << ","
                << rec.result.assignment[static_cast<std::size_t>(i)] << ","
                << fmt_g(report.per_point[static_cast<std::size_t>(i)]) << "\n";
    } else {
        throw UsageError("unknown report format '" + format + "' (expected kv or csv)");
    }
}

// ---------------------------------------------------------------------------
// subcommands

struct GenerateCmd {
    std::string spec = "k=5,per=60,dims=17,sep=8,spread=1";
    std::uint64_t seed = 0;
    std::string out;
    std::string truth_out;
    std::string delimiter = "\\t";

    int operator()() const {
        auto synth = generate_synthetic(parse_synthetic_spec(spec, seed));
        write_delimited(synth.matrix, out, parse_delimiter(delimiter));
        if (!truth_out.empty()) {
            std::ofstream truth(truth_out);
            if (!truth) throw DataError("cannot open file for writing: " + truth_out);
            for (Eigen::Index i = 0; i < synth.matrix.rows(); ++i)
                truth << synth.matrix.labels[static_cast<std::size_t>(i)]
                      << parse_delimiter(delimiter) << synth.truth[static_cast<std::size_t>(i)]
                      << "\n";
        }
        std::cout << "wrote " << synth.matrix.rows() << "x" << synth.matrix.cols()
                  << " matrix to " << out << "\n";
        return 0;
    }
};

struct NormalizeCmd {
    InputOptions input;
    std::string out;

    int operator()() const {
        if (input.path.empty()) throw UsageError("normalize needs an input file");
        LoadOptions opts;
        opts.delimiter = parse_delimiter(input.delimiter);
        opts.missing_tokens = input.missing;
        opts.has_header = input.header;
        opts.has_labels = !input.no_labels;
        auto raw = load_delimited(input.path, opts);
        auto cleaned = drop_missing_rows(raw);
        auto normalized = zscore_normalize(cleaned);
        write_delimited(normalized, out, opts.delimiter);
        std::cout << "rows: " << raw.rows.size() << " -> " << normalized.rows()
                  << " (dropped " << raw.rows.size() - static_cast<std::size_t>(normalized.rows())
                  << " incomplete), columns: " << normalized.cols() << "\n";
        return 0;
    }
};

struct SeedInspectCmd {
    InputOptions input;
    int k = 0;

    int operator()() const {
        if (k < 1) throw UsageError("--k must be at least 1");
        auto loaded = load_input(input, 0);
        auto groups = ccia_groups(loaded.matrix, k);
        auto seeds = ccia_seed(loaded.matrix, k);

        std::cout << "n=" << loaded.matrix.rows() << " m=" << loaded.matrix.cols()
                  << " k=" << k << " consumed=" << groups.consumed << "\n";
        for (std::size_t g = 0; g < groups.groups.size(); ++g) {
            const auto& group = groups.groups[g];
            std::cout << "group " << g + 1 << ": size=" << group.size() << "\n  members:";
            for (Eigen::Index i : group)
                std::cout << ' ' << loaded.matrix.labels[static_cast<std::size_t>(i)];
            std::cout << "\n  centroid:";
            for (Eigen::Index c = 0; c < seeds.dim(); ++c)
                std::cout << ' ' << fmt_g(seeds.centers(static_cast<Eigen::Index>(g), c));
            std::cout << "\n";
        }
        return 0;
    }
};

struct RunCmd {
    InputOptions input;
    AlgoOptions algo;
    std::string algorithm = "kmeans";
    std::string format = "table";
    std::string report_out;
    std::string report_format = "kv";

    bool init_given = false;

    int operator()() const {
        if (algo.repeats < 1) throw UsageError("--repeats must be at least 1");
        if (algo.k_init < 1) throw UsageError("--k must be at least 1");
        if (algorithm == "eiagmfi" && init_given && algo.init != "ccia")
            throw UsageError("eiagmfi is the ccia-seeded pipeline; --init " + algo.init +
                             " is not allowed");
        auto loaded = load_input(input, algo.seed);

        std::vector<RunRecord> records;
        for (int r = 0; r < algo.repeats; ++r)
            records.push_back(execute(algorithm, loaded.matrix, algo, r));

        if (format == "table") {
            print_run_table(records, loaded, algo, algorithm);
        } else if (format == "csv") {
            std::cout << kCsvHeader << "\n";
            for (const auto& r : records) std::cout << csv_row(r, loaded, algo.k_init) << "\n";
        } else if (format == "jsonl") {
            for (const auto& r : records)
                std::cout << json_row(r, loaded, algo.k_init).dump() << "\n";
        } else {
            throw UsageError("unknown format '" + format + "' (expected table, csv or jsonl)");
        }

        if (!report_out.empty()) {
            int best = 0;
            for (std::size_t i = 1; i < records.size(); ++i) {
                bool better = !std::isnan(records[i].quality) &&
                              (std::isnan(records[static_cast<std::size_t>(best)].quality) ||
                               records[i].quality >
                                   records[static_cast<std::size_t>(best)].quality);
                if (better) best = static_cast<int>(i);
            }
            write_quality_report(report_out, report_format, loaded,
                                 records[static_cast<std::size_t>(best)]);
        }
        return 0;
    }
};

struct CompareCmd {
    InputOptions input;
    AlgoOptions algo;
    std::vector<std::string> algorithms = {"kmeans", "ccia-kmeans", "agmfi", "eiagmfi"};
    std::string format = "table";

    int operator()() const {
        if (algorithms.size() < 2)
            throw UsageError("compare needs at least 2 algorithms");
        if (algo.repeats < 1) throw UsageError("--repeats must be at least 1");
        auto loaded = load_input(input, algo.seed);

        // identical data and seed schedule for every algorithm
        std::vector<std::vector<RunRecord>> table;
        for (const auto& name : algorithms) {
            std::vector<RunRecord> records;
            for (int r = 0; r < algo.repeats; ++r)
                records.push_back(execute(name, loaded.matrix, algo, r));
            table.push_back(std::move(records));
        }

        if (format == "csv") {
            std::cout << kCsvHeader << "\n";
            for (const auto& records : table)
                for (const auto& r : records)
                    std::cout << csv_row(r, loaded, algo.k_init) << "\n";
        } else if (format == "jsonl") {
            for (const auto& records : table)
                for (const auto& r : records)
                    std::cout << json_row(r, loaded, algo.k_init).dump() << "\n";
        } else if (format == "table") {
            // one comparison row: dataset, k_init, the adaptive final_k, and
            // the median quality per algorithm
            double final_k = std::numeric_limits<double>::quiet_NaN();
            for (std::size_t a = table.size(); a-- > 0;) {
                const auto& name = algorithms[a];
                if (name == "isodata" || name == "agmfi" || name == "eiagmfi") {
                    std::vector<double> finals;
                    for (const auto& r : table[a]) finals.push_back(r.final_k);
                    final_k = median(finals);
                    break;
                }
            }
            std::cout << "dataset\tk_init\tfinal_k";
            for (const auto& name : algorithms) std::cout << "\tquality:" << name;
            std::cout << "\n" << loaded.name << "\t" << algo.k_init << "\t"
                      << (std::isnan(final_k) ? std::to_string(algo.k_init)
                                              : fmt_g(final_k));
            for (const auto& records : table) {
                std::vector<double> qualities;
                for (const auto& r : records) qualities.push_back(r.quality);
                double med = median(qualities);
                std::cout << "\t" << (std::isnan(med) ? "n/a" : fmt_f3(med));
            }
            std::cout << "\n";
        } else {
            throw UsageError("unknown format '" + format + "' (expected table, csv or jsonl)");
        }
        return 0;
    }
};

void add_input_options(CLI::App* cmd, InputOptions& input, bool with_synthetic) {
    cmd->add_option("input", input.path, "delimited matrix file (first field = row label)");
    if (with_synthetic)
        cmd->add_option("--synthetic", input.synthetic,
                        "generate data instead: k=,per=,dims=,sep=,spread=[,seed=]");
    cmd->add_option("--delimiter", input.delimiter, "field delimiter (default tab)");
    cmd->add_option("--missing", input.missing,
                    "tokens treated as missing values (default NA, N/A, empty)");
    cmd->add_flag("--header", input.header, "skip the first line of the input file");
    cmd->add_flag("--no-labels", input.no_labels, "input has no label column");
    cmd->add_flag("--normalize", input.normalize,
                  "z-score each row (population convention) after loading");
}

void add_algo_options(CLI::App* cmd, AlgoOptions& algo) {
    cmd->add_option("--k", algo.k_init, "initial cluster count");
    cmd->add_option("--repeats", algo.repeats, "number of seeded runs");
    cmd->add_option("--seed", algo.seed, "base seed; run r uses seed+r");
    cmd->add_option("--kmeans-max-iter", algo.kmeans_max_iter, "inner K-Means pass budget");
    cmd->add_option("--tol", algo.tol, "K-Means center-movement tolerance");
    cmd->add_option("--theta-n", algo.theta_n, "isodata: minimum cluster size");
    cmd->add_option("--theta-s", algo.theta_s, "isodata: per-dimension std split threshold");
    cmd->add_option("--theta-c", algo.theta_c, "isodata: centroid distance merge threshold");
    cmd->add_option("--min-cluster-size", algo.min_cluster_size,
                    "agmfi: clusters smaller than this are discarded");
    cmd->add_option("--split-factor", algo.split_factor,
                    "agmfi: split when cluster std exceeds factor * dataset std");
    cmd->add_option("--merge-scale", algo.merge_scale,
                    "agmfi: merge threshold = scale * mean pairwise centroid distance");
    cmd->add_option("--max-iter", algo.max_iter, "outer iteration budget (isodata/agmfi)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering toolkit for expression matrices"};
    app.require_subcommand(1);

    GenerateCmd generate;
    auto* gen_cmd = app.add_subcommand("generate", "write synthetic Gaussian-blob data");
    gen_cmd->add_option("--synthetic", generate.spec,
                        "k=,per=,dims=,sep=,spread=[,seed=] (defaults shown in README)");
    gen_cmd->add_option("--seed", generate.seed, "seed used when the spec has none");
    gen_cmd->add_option("--out", generate.out, "output matrix file")->required();
    gen_cmd->add_option("--truth-out", generate.truth_out, "also write label<TAB>cluster");
    gen_cmd->add_option("--delimiter", generate.delimiter, "output delimiter (default tab)");

    NormalizeCmd normalize;
    auto* norm_cmd = app.add_subcommand("normalize", "clean and z-score a matrix file");
    add_input_options(norm_cmd, normalize.input, false);
    norm_cmd->add_option("--out", normalize.out, "output matrix file")->required();

    SeedInspectCmd inspect;
    auto* seed_cmd = app.add_subcommand("seed-inspect", "show deterministic seed groups");
    add_input_options(seed_cmd, inspect.input, true);
    seed_cmd->add_option("--k", inspect.k, "number of seed groups")->required();

    RunCmd run;
    auto* run_cmd = app.add_subcommand("run", "run one clustering algorithm");
    add_input_options(run_cmd, run.input, true);
    add_algo_options(run_cmd, run.algo);
    run_cmd->add_option("--algorithm", run.algorithm, "kmeans | isodata | agmfi | eiagmfi");
    auto* init_opt = run_cmd->add_option("--init", run.algo.init, "random | ccia | file");
    run_cmd->callback([&run, init_opt] { run.init_given = init_opt->count() > 0; });
    run_cmd->add_option("--init-file", run.algo.init_file, "centroid file for --init file");
    run_cmd->add_option("--format", run.format, "table | csv | jsonl");
    run_cmd->add_option("--report-out", run.report_out, "write the best run's silhouette report");
    run_cmd->add_option("--report-format", run.report_format, "kv | csv");

    CompareCmd compare;
    auto* cmp_cmd = app.add_subcommand("compare", "run several algorithms side by side");
    add_input_options(cmp_cmd, compare.input, true);
    add_algo_options(cmp_cmd, compare.algo);
    cmp_cmd->add_option("--algorithms", compare.algorithms,
                        "subset of kmeans, ccia-kmeans, isodata, agmfi, eiagmfi")
        ->delimiter(',');
    cmp_cmd->add_option("--format", compare.format, "table | csv | jsonl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (gen_cmd->parsed()) return generate();
        if (norm_cmd->parsed()) return normalize();
        if (seed_cmd->parsed()) return inspect();
        if (run_cmd->parsed()) return run();
        if (cmp_cmd->parsed()) return compare();
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
