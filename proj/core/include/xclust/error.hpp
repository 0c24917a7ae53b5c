#pragma once

#include <stdexcept>
#include <string>

namespace xclust {

/// Problems with input data: unreadable files, malformed rows, rows that
/// cannot be normalized, matrices that end up empty after cleaning.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Failures raised while an algorithm is running (as opposed to argument
/// misuse, which throws std::invalid_argument): empty clusters where none
/// are allowed, every cluster discarded, seed pool exhausted.
class AlgorithmError : public std::runtime_error {
public:
    explicit AlgorithmError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xclust
