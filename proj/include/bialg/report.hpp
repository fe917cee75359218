#pragma once

#include "bialg/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bialg {

struct Violation {
    std::vector<std::int64_t> indices;
    std::string where;  // human label, e.g. "(e1,e1,e1) -> e1"
    Scalar value;
};

// One identity evaluated exhaustively. The residual is kept when it was
// materialized (finite-dimensional checks); windowed checks only keep the
// first violation.
struct Check {
    std::string id;
    bool zero = true;
    std::size_t evaluated = 0;
    std::size_t nonzero = 0;
    std::optional<Violation> first_violation;
    std::vector<std::size_t> shape;
    std::vector<Scalar> residual;

    // Builds a check from a flattened row-major residual array.
    static Check from_array(std::string id, std::vector<std::size_t> shape, std::vector<Scalar> values,
                            const std::vector<std::vector<std::string>>* axis_names = nullptr);
    static Check from_tensor(std::string id, const Tensor3& t,
                             const std::vector<std::vector<std::string>>* axis_names = nullptr);
    static Check from_matrix(std::string id, const Matrix& m,
                             const std::vector<std::vector<std::string>>* axis_names = nullptr);
    static Check boolean(std::string id, bool ok, std::string detail = {});

    // accumulate a scalar residual observed at some index tuple
    void observe(const Scalar& value, std::vector<std::int64_t> indices, const std::string& where);
};

struct Report {
    std::string subject;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool pass() const;
    const Check* find(const std::string& id) const;
    void add(Check c) { checks.push_back(std::move(c)); }
    // Appends other's checks with their ids prefixed by "prefix/".
    void absorb(const Report& other, const std::string& prefix);
};

using ResidualReport = Report;

}  // namespace bialg
