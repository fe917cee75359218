#include "bialg/report.hpp"

namespace bialg {

Check Check::from_array(std::string id, std::vector<std::size_t> shape, std::vector<Scalar> values,
                        const std::vector<std::vector<std::string>>* axis_names) {
    Check c;
    c.id = std::move(id);
    c.evaluated = values.size();
    std::vector<std::int64_t> idx(shape.size());
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
        if (is_zero(values[flat])) continue;
        ++c.nonzero;
        if (c.first_violation) continue;
        std::size_t rest = flat;
        for (std::size_t a = shape.size(); a-- > 0;) {
            idx[a] = static_cast<std::int64_t>(rest % shape[a]);
            rest /= shape[a];
        }
        std::string where;
        if (axis_names) {
            where = "(";
            for (std::size_t a = 0; a < idx.size(); ++a) {
                if (a) where += ",";
                const auto& names = (*axis_names)[a];
                where += names.empty() ? std::to_string(idx[a]) : names[static_cast<std::size_t>(idx[a])];
            }
            where += ")";
        }
        c.first_violation = Violation{idx, where, values[flat]};
    }
    c.zero = c.nonzero == 0;
    c.shape = std::move(shape);
    c.residual = std::move(values);
    return c;
}

Check Check::from_tensor(std::string id, const Tensor3& t, const std::vector<std::vector<std::string>>* axis_names) {
    return from_array(std::move(id), {t.d1(), t.d2(), t.d3()}, t.data(), axis_names);
}

Check Check::from_matrix(std::string id, const Matrix& m, const std::vector<std::vector<std::string>>* axis_names) {
    return from_array(std::move(id), {m.rows(), m.cols()}, m.data(), axis_names);
}

Check Check::boolean(std::string id, bool ok, std::string detail) {
    Check c;
    c.id = std::move(id);
    c.evaluated = 1;
    c.zero = ok;
    if (!ok) {
        c.nonzero = 1;
        c.first_violation = Violation{{}, std::move(detail), 1};
    }
    return c;
}

void Check::observe(const Scalar& value, std::vector<std::int64_t> indices, const std::string& where) {
    ++evaluated;
    if (is_zero(value)) return;
    ++nonzero;
    zero = false;
    if (!first_violation) first_violation = Violation{std::move(indices), where, value};
}

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.zero) return false;
    return true;
}

const Check* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.id = prefix + "/" + c.id;
        checks.push_back(std::move(c));
    }
    for (const auto& n : other.notes) notes.push_back(prefix + ": " + n);
}

}  // namespace bialg
