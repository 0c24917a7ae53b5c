#include "xclust/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>
#include <unordered_set>

#include "xclust/error.hpp"

namespace xclust {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\v\f";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);  // from_chars rejects a leading '+'
    if (s.empty()) return false;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::size_t RawMatrix::missing_count() const {
    std::size_t count = 0;
    for (const auto& row : rows)
        count += static_cast<std::size_t>(
            std::count(row.values.begin(), row.values.end(), std::nullopt));
    return count;
}

std::size_t RawMatrix::incomplete_row_count() const {
    std::size_t count = 0;
    for (const auto& row : rows)
        if (std::find(row.values.begin(), row.values.end(), std::nullopt) != row.values.end())
            ++count;
    return count;
}

RawMatrix load_delimited(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);

    RawMatrix raw;
    std::string line;
    std::size_t lineno = 0;
    bool header_pending = opts.has_header;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (header_pending) {
            header_pending = false;
            continue;
        }
        if (trim(line).empty()) continue;

        auto fields = split_fields(line, opts.delimiter);
        std::size_t value_begin = opts.has_labels ? 1 : 0;
        if (fields.size() <= value_begin)
            throw DataError(path + ":" + std::to_string(lineno) + ": no value columns");
        std::size_t width = fields.size() - value_begin;
        if (raw.rows.empty()) {
            raw.cols = width;
        } else if (width != raw.cols) {
            throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(raw.cols) + " value columns, got " +
                            std::to_string(width));
        }

        RawRow row;
        row.label = opts.has_labels ? std::string(trim(fields[0]))
                                    : "row" + std::to_string(raw.rows.size());
        row.values.reserve(width);
        for (std::size_t f = value_begin; f < fields.size(); ++f) {
            auto token = trim(fields[f]);
            bool is_missing = std::any_of(
                opts.missing_tokens.begin(), opts.missing_tokens.end(),
                [&](const std::string& t) { return token == t; });
            double v = 0.0;
            if (!is_missing && parse_double(token, v) && std::isfinite(v))
                row.values.emplace_back(v);
            else
                row.values.emplace_back(std::nullopt);
        }
        raw.rows.push_back(std::move(row));
    }

    if (raw.rows.empty()) throw DataError(path + ": no data rows");
    return raw;
}

ExpressionMatrix drop_missing_rows(const RawMatrix& raw) {
    std::vector<std::size_t> keep;
    keep.reserve(raw.rows.size());
    for (std::size_t i = 0; i < raw.rows.size(); ++i) {
        const auto& values = raw.rows[i].values;
        if (values.size() != raw.cols)
            throw DataError("row '" + raw.rows[i].label + "' has " +
                            std::to_string(values.size()) + " values, expected " +
                            std::to_string(raw.cols));
        if (std::find(values.begin(), values.end(), std::nullopt) == values.end())
            keep.push_back(i);
    }
    if (keep.empty())
        throw DataError("all rows dropped: every row contains a missing value");
    if (raw.cols == 0) throw DataError("matrix has no value columns");

    ExpressionMatrix mat;
    mat.labels.reserve(keep.size());
    mat.data.resize(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(raw.cols));
    for (std::size_t r = 0; r < keep.size(); ++r) {
        const auto& row = raw.rows[keep[r]];
        mat.labels.push_back(row.label);
        for (std::size_t c = 0; c < raw.cols; ++c)
            mat.data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = *row.values[c];
    }
    validate_matrix(mat);
    return mat;
}

ExpressionMatrix zscore_normalize(const ExpressionMatrix& mat) {
    validate_matrix(mat);
    const Eigen::Index m = mat.cols();
    if (m < 2)
        throw DataError("z-score normalization needs at least 2 columns, got " +
                        std::to_string(m));

    ExpressionMatrix out = mat;
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        double mean = mat.data.row(r).mean();
        double var = (mat.data.row(r).array() - mean).square().sum() / static_cast<double>(m);
        double sd = std::sqrt(var);
        if (sd == 0.0)
            throw DataError("constant row '" + mat.labels[static_cast<std::size_t>(r)] +
                            "': standard deviation is zero");
        out.data.row(r) = (mat.data.row(r).array() - mean) / sd;
    }
    return out;
}

void write_delimited(const ExpressionMatrix& mat, const std::string& path, char delimiter) {
    validate_matrix(mat);
    std::ofstream out(path);
    if (!out) throw DataError("cannot open file for writing: " + path);

    out << "id";
    for (Eigen::Index c = 0; c < mat.cols(); ++c) out << delimiter << c;
    out << '\n';
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        out << mat.labels[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < mat.cols(); ++c)
            out << delimiter << format_value(mat.data(r, c));
        out << '\n';
    }
    if (!out) throw DataError("write failed: " + path);
}

void validate_matrix(const ExpressionMatrix& mat) {
    if (mat.rows() < 1) throw DataError("matrix has no rows");
    if (mat.cols() < 1) throw DataError("matrix has no columns");
    if (static_cast<Eigen::Index>(mat.labels.size()) != mat.rows())
        throw DataError("label count does not match row count");
    if (!mat.data.allFinite()) throw DataError("matrix contains non-finite values");
    std::unordered_set<std::string_view> seen;
    seen.reserve(mat.labels.size());
    for (const auto& label : mat.labels)
        if (!seen.insert(label).second)
            throw DataError("duplicate row label '" + label + "'");
}

}  // namespace xclust
