#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace xclust {

/// Dense numeric matrix, row-major so that data.row(i) is contiguous.
/// Rows are items (genes), columns are conditions.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One parsed line of a delimited file. Unparseable or explicitly missing
/// fields are stored as std::nullopt.
struct RawRow {
    std::string label;
    std::vector<std::optional<double>> values;
};

/// Matrix as parsed from disk, before missing-value cleaning.
/// Every row has exactly `cols` value slots.
struct RawMatrix {
    std::vector<RawRow> rows;
    std::size_t cols = 0;

    std::size_t missing_count() const;
    std::size_t incomplete_row_count() const;
};

/// Cleaned expression matrix: finite entries only, unique row labels,
/// at least one row and one column.
struct ExpressionMatrix {
    std::vector<std::string> labels;
    Matrix data;

    Eigen::Index rows() const { return data.rows(); }
    Eigen::Index cols() const { return data.cols(); }
};

struct LoadOptions {
    char delimiter = '\t';
    /// Field values treated as missing, compared after trimming whitespace.
    /// Any field that fails to parse as a finite number is missing too.
    std::vector<std::string> missing_tokens = {"NA", "N/A", ""};
    /// Skip the first line (e.g. files produced by write_delimited).
    bool has_header = false;
    /// First field of each line is the row label. When false, labels are
    /// synthesized as row0, row1, ...
    bool has_labels = true;
};

/// Parse a delimited text file into a RawMatrix.
///
/// Blank lines are skipped. Throws DataError if the file cannot be opened,
/// contains no data rows, or a line has a different field count than the
/// first data line (the message names the offending line number).
RawMatrix load_delimited(const std::string& path, const LoadOptions& opts = {});

/// Keep exactly the rows with no missing values, preserving order.
/// Throws DataError when all rows are dropped or surviving labels collide.
ExpressionMatrix drop_missing_rows(const RawMatrix& raw);

/// Scale each row to mean 0 and standard deviation 1. The population
/// convention is used (divide by the column count), which makes the
/// transform an exact fixed point on already-normalized rows.
/// Throws DataError for matrices with fewer than 2 columns and for
/// constant rows (named by label).
ExpressionMatrix zscore_normalize(const ExpressionMatrix& mat);

/// Write as delimited text with a header row of condition indices:
///   id <d> 0 <d> 1 ...
/// Values are printed with enough digits to round-trip exactly.
void write_delimited(const ExpressionMatrix& mat, const std::string& path,
                     char delimiter = '\t');

/// Check the ExpressionMatrix invariants (finite, non-empty, unique labels,
/// label count matching the row count). Throws DataError on violation.
void validate_matrix(const ExpressionMatrix& mat);

}  // namespace xclust
