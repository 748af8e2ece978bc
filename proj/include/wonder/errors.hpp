#pragma once

#include <stdexcept>
#include <string>

namespace wonder {

/// Malformed or inadmissible root-system descriptor ("Q3", "B1", ...).
class DescriptorError : public std::invalid_argument {
public:
    explicit DescriptorError(const std::string& what) : std::invalid_argument(what) {}
};

/// Vector or matrix shapes that do not fit together.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

class NotDominantError : public std::domain_error {
public:
    explicit NotDominantError(const std::string& what) : std::domain_error(what) {}
};

/// A cone expected to be pointed contains a line.
class PointednessError : public std::domain_error {
public:
    explicit PointednessError(const std::string& what) : std::domain_error(what) {}
};

/// A polyhedron expected to be bounded has a non-zero recession direction.
class RecessionError : public std::domain_error {
public:
    explicit RecessionError(const std::string& what) : std::domain_error(what) {}
};

/// Datum file does not match the schema. `path()` names the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& what)
        : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Data that passed structural checks but contradicts the combinatorial theory
/// (e.g. a boundary-only extremal ray whose divisor is not fixed).
class InconsistencyError : public std::logic_error {
public:
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace wonder
