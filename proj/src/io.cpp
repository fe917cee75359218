#include "bialg/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace bialg::io {

using Json = nlohmann::ordered_json;

namespace {

// Paths read "file: key.sub[i]"; the root is the file name plus ':'.
std::string root(const std::string& origin) { return origin + ":"; }
bool is_root(const std::string& where) { return !where.empty() && where.back() == ':'; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + (is_root(where) ? " " : ": ") + what);
}

std::string at(const std::string& base, const std::string& key) { return base + (is_root(base) ? " " : ".") + key; }
std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) fail(where, "unknown key \"" + k + "\"");
    }
}

const Json& need(const Json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t index(const Json& j, const std::string& where, std::size_t bound) {
    if (!j.is_number_integer()) fail(where, "expected an integer index");
    auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
        fail(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

std::size_t dimension(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

Scalar coeff(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "coefficients are strings \"p\" or \"p/q\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

void check_format(const Json& j, const std::string& where) {
    const Json& f = need(j, where, "format");
    if (!f.is_number_integer() || f.get<int>() != kFormat) fail(at(where, "format"), "unsupported format, expected 1");
}

std::vector<std::string> basis(const Json& j, const std::string& where, std::size_t dim) {
    auto it = j.find("basis");
    if (it == j.end()) return FinAlgebra::default_names(dim);
    if (!it->is_array() || it->size() != dim) fail(at(where, "basis"), "expected " + std::to_string(dim) + " names");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < dim; ++i) {
        const Json& n = (*it)[i];
        if (!n.is_string()) fail(at(at(where, "basis"), i), "expected a string");
        if (!seen.insert(n.get<std::string>()).second) fail(at(at(where, "basis"), i), "duplicate basis name");
        out.push_back(n.get<std::string>());
    }
    return out;
}

Tensor3 product_cube(const Json& entries, const std::string& where, std::size_t n) {
    if (!entries.is_array()) fail(where, "expected a list of entries");
    Tensor3 t = Tensor3::cube(n);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string w = at(where, e);
        const Json& x = entries[e];
        only_keys(x, w, {"left", "right", "result"});
        std::size_t i = index(need(x, w, "left"), at(w, "left"), n);
        std::size_t j = index(need(x, w, "right"), at(w, "right"), n);
        if (!seen.insert({i, j}).second) fail(w, "duplicate entry for this pair");
        const Json& res = need(x, w, "result");
        if (!res.is_array()) fail(at(w, "result"), "expected a list");
        std::set<std::size_t> outs;
        for (std::size_t r = 0; r < res.size(); ++r) {
            const std::string wr = at(at(w, "result"), r);
            only_keys(res[r], wr, {"index", "coeff"});
            std::size_t k = index(need(res[r], wr, "index"), at(wr, "index"), n);
            if (!outs.insert(k).second) fail(wr, "duplicate result index");
            t(i, j, k) = coeff(need(res[r], wr, "coeff"), at(wr, "coeff"));
        }
    }
    return t;
}

Tensor3 coproduct_cube(const Json& entries, const std::string& where, std::size_t n) {
    if (!entries.is_array()) fail(where, "expected a list of entries");
    Tensor3 t = Tensor3::cube(n);
    std::set<std::size_t> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string w = at(where, e);
        const Json& x = entries[e];
        only_keys(x, w, {"input", "result"});
        std::size_t i = index(need(x, w, "input"), at(w, "input"), n);
        if (!seen.insert(i).second) fail(w, "duplicate entry for this input");
        const Json& res = need(x, w, "result");
        if (!res.is_array()) fail(at(w, "result"), "expected a list");
        std::set<std::pair<std::size_t, std::size_t>> outs;
        for (std::size_t r = 0; r < res.size(); ++r) {
            const std::string wr = at(at(w, "result"), r);
            only_keys(res[r], wr, {"left", "right", "coeff"});
            std::size_t j = index(need(res[r], wr, "left"), at(wr, "left"), n);
            std::size_t k = index(need(res[r], wr, "right"), at(wr, "right"), n);
            if (!outs.insert({j, k}).second) fail(wr, "duplicate result pair");
            t(i, j, k) = coeff(need(res[r], wr, "coeff"), at(wr, "coeff"));
        }
    }
    return t;
}

Matrix dense(const Json& j, const std::string& where, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != cols) fail(at(where, i), "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = coeff(row[k], at(at(where, i), k));
    }
    return m;
}

Kind kind_of(const Json& j, const std::string& where) {
    const Json& k = need(j, where, "kind");
    if (!k.is_string()) fail(at(where, "kind"), "expected a string");
    try {
        return parse_kind(k.get<std::string>());
    } catch (const KindError& e) {
        fail(at(where, "kind"), e.what());
    }
}

FinAlgebra algebra_body(const Json& j, const std::string& where) {
    const Kind kind = kind_of(j, where);
    const std::size_t n = dimension(need(j, where, "dim"), at(where, "dim"));
    FinAlgebra a = FinAlgebra::zero(kind, n, basis(j, where, n));
    const Json& prods = need(j, where, "products");
    if (!prods.is_object()) fail(at(where, "products"), "expected an object");
    const auto names = product_names(kind);
    for (const auto& [name, entries] : prods.items()) {
        if (std::find(names.begin(), names.end(), name) == names.end())
            fail(at(where, "products"), "kind " + std::string(kind_name(kind)) + " has no product \"" + name + "\"");
        a.products[name] = product_cube(entries, at(at(where, "products"), name), n);
    }
    return a;
}

Json scalar_json(const Scalar& x) { return format_scalar(x); }

Json products_json(const FinAlgebra& a) {
    Json prods = Json::object();
    for (const auto& name : product_names(a.kind)) {
        const Tensor3& t = a.product(name);
        Json list = Json::array();
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                Json res = Json::array();
                for (std::size_t k = 0; k < a.dim; ++k)
                    if (!is_zero(t(i, j, k))) res.push_back(Json{{"index", k}, {"coeff", scalar_json(t(i, j, k))}});
                if (!res.empty()) list.push_back(Json{{"left", i}, {"right", j}, {"result", res}});
            }
        prods[name] = list;
    }
    return prods;
}

Json algebra_body_json(const FinAlgebra& a) {
    Json j = Json::object();
    j["kind"] = std::string(kind_name(a.kind));
    j["dim"] = a.dim;
    j["basis"] = a.basis_names;
    j["products"] = products_json(a);
    return j;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": malformed JSON: " + e.what());
    }
}

}  // namespace

BialgStruct AlgebraFile::bialgebra() const {
    if (!coalgebra) throw ParseError("file has no coproducts");
    return {algebra, *coalgebra};
}

QuadraticPerm AlgebraFile::quadratic_perm() const {
    if (algebra.kind != Kind::perm || !form) throw ParseError("expected a perm algebra with a form");
    return {algebra, *form};
}

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin) {
    Json j = parse_json(text, origin);
    const std::string w = root(origin);
    only_keys(j, w, {"format", "kind", "dim", "basis", "products", "coproducts", "form"});
    check_format(j, w);
    AlgebraFile f;
    f.algebra = algebra_body(j, w);
    const std::size_t n = f.algebra.dim;
    if (auto it = j.find("coproducts"); it != j.end()) {
        if (!it->is_object()) fail(at(w, "coproducts"), "expected an object");
        const CoKind ck = matching_cokind(f.algebra.kind);
        CoalgStruct c = CoalgStruct::zero(ck, n);
        const auto names = coproduct_names(ck);
        for (const auto& [name, entries] : it->items()) {
            if (std::find(names.begin(), names.end(), name) == names.end())
                fail(at(w, "coproducts"), "coalgebra kind " + std::string(cokind_name(ck)) + " has no coproduct \"" + name + "\"");
            c.coproducts[name] = coproduct_cube(entries, at(at(w, "coproducts"), name), n);
        }
        f.coalgebra = std::move(c);
    }
    if (auto it = j.find("form"); it != j.end()) f.form = BilinForm{dense(*it, at(w, "form"), n, n)};
    return f;
}

TensorFile parse_tensor_text(const std::string& text, const std::string& origin) {
    Json j = parse_json(text, origin);
    const std::string w = root(origin);
    only_keys(j, w, {"format", "kind", "dim", "basis", "entries"});
    check_format(j, w);
    const Json& k = need(j, w, "kind");
    if (k != "tensor") fail(at(w, "kind"), "expected \"tensor\"");
    const std::size_t n = dimension(need(j, w, "dim"), at(w, "dim"));
    basis(j, w, n);
    const Json& entries = need(j, w, "entries");
    if (!entries.is_array()) fail(at(w, "entries"), "expected a list");
    TensorFile f{RMatrix(n, n)};
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string we = at(at(w, "entries"), e);
        only_keys(entries[e], we, {"left", "right", "coeff"});
        std::size_t a = index(need(entries[e], we, "left"), at(we, "left"), n);
        std::size_t b = index(need(entries[e], we, "right"), at(we, "right"), n);
        if (!seen.insert({a, b}).second) fail(we, "duplicate entry");
        f.r(a, b) = coeff(need(entries[e], we, "coeff"), at(we, "coeff"));
    }
    return f;
}

MapFile parse_map_text(const std::string& text, const std::string& origin) {
    Json j = parse_json(text, origin);
    const std::string w = root(origin);
    only_keys(j, w, {"format", "kind", "rows", "cols", "entries"});
    check_format(j, w);
    if (need(j, w, "kind") != "map") fail(at(w, "kind"), "expected \"map\"");
    const std::size_t rows = dimension(need(j, w, "rows"), at(w, "rows"));
    const std::size_t cols = dimension(need(j, w, "cols"), at(w, "cols"));
    const Json& entries = need(j, w, "entries");
    if (!entries.is_array()) fail(at(w, "entries"), "expected a list");
    MapFile f{Matrix(rows, cols)};
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string we = at(at(w, "entries"), e);
        only_keys(entries[e], we, {"input", "output", "coeff"});
        std::size_t in = index(need(entries[e], we, "input"), at(we, "input"), cols);
        std::size_t out = index(need(entries[e], we, "output"), at(we, "output"), rows);
        if (!seen.insert({in, out}).second) fail(we, "duplicate entry");
        f.m(out, in) = coeff(need(entries[e], we, "coeff"), at(we, "coeff"));
    }
    return f;
}

OOperatorFile parse_ooperator_text(const std::string& text, const std::string& origin) {
    Json j = parse_json(text, origin);
    const std::string w = root(origin);
    only_keys(j, w, {"format", "kind", "algebra", "bimodule", "map"});
    check_format(j, w);
    if (need(j, w, "kind") != "ooperator") fail(at(w, "kind"), "expected \"ooperator\"");
    const Json& aj = need(j, w, "algebra");
    only_keys(aj, at(w, "algebra"), {"kind", "dim", "basis", "products"});
    OOperatorFile f;
    f.spec.algebra = algebra_body(aj, at(w, "algebra"));
    const FinAlgebra& A = f.spec.algebra;
    const Json& bj = need(j, w, "bimodule");
    if (bj.is_string()) {
        f.bimodule_source = bj.get<std::string>();
        try {
            if (f.bimodule_source == "coregular") f.spec.bimodule = coregular_bimodule(A);
            else if (f.bimodule_source == "regular") f.spec.bimodule = regular_bimodule(A);
            else fail(at(w, "bimodule"), "expected \"coregular\", \"regular\" or an object");
        } catch (const KindError& e) {
            fail(at(w, "bimodule"), e.what());
        }
    } else {
        const std::string wb = at(w, "bimodule");
        only_keys(bj, wb, {"dim", "actions"});
        f.bimodule_source = "explicit";
        Bimodule bm;
        bm.kind = A.kind;
        bm.algebra_dim = A.dim;
        bm.space_dim = dimension(need(bj, wb, "dim"), at(wb, "dim"));
        const Json& acts = need(bj, wb, "actions");
        if (!acts.is_object()) fail(at(wb, "actions"), "expected an object");
        std::vector<std::string> names;
        try {
            names = action_names(A.kind);
        } catch (const KindError& e) {
            fail(wb, e.what());
        }
        for (const auto& name : names) {
            const std::string wa = at(at(wb, "actions"), name);
            const Json& list = need(acts, at(wb, "actions"), name.c_str());
            if (!list.is_array() || list.size() != A.dim) fail(wa, "expected one matrix per basis element");
            for (std::size_t i = 0; i < A.dim; ++i) bm.actions[name].push_back(dense(list[i], at(wa, i), bm.space_dim, bm.space_dim));
        }
        for (const auto& [k, v] : acts.items())
            if (std::find(names.begin(), names.end(), k) == names.end()) fail(at(wb, "actions"), "unknown action \"" + k + "\"");
        f.spec.bimodule = std::move(bm);
    }
    f.spec.P = dense(need(j, w, "map"), at(w, "map"), A.dim, f.spec.bimodule.space_dim);
    return f;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

AlgebraFile load_algebra(const std::filesystem::path& p) { return parse_algebra_text(read_file(p), p.string()); }
TensorFile load_tensor(const std::filesystem::path& p) { return parse_tensor_text(read_file(p), p.string()); }
MapFile load_map(const std::filesystem::path& p) { return parse_map_text(read_file(p), p.string()); }
OOperatorFile load_ooperator(const std::filesystem::path& p) { return parse_ooperator_text(read_file(p), p.string()); }

std::string dump(const AlgebraFile& f) {
    Json j = Json::object();
    j["format"] = kFormat;
    const Json body = algebra_body_json(f.algebra);
    for (auto& [k, v] : body.items()) j[k] = v;
    if (f.coalgebra) {
        const CoalgStruct& c = *f.coalgebra;
        Json cops = Json::object();
        for (const auto& name : coproduct_names(c.kind)) {
            const Tensor3& t = c.coproduct(name);
            Json list = Json::array();
            for (std::size_t i = 0; i < c.dim; ++i) {
                Json res = Json::array();
                for (std::size_t a = 0; a < c.dim; ++a)
                    for (std::size_t b = 0; b < c.dim; ++b)
                        if (!is_zero(t(i, a, b)))
                            res.push_back(Json{{"left", a}, {"right", b}, {"coeff", scalar_json(t(i, a, b))}});
                if (!res.empty()) list.push_back(Json{{"input", i}, {"result", res}});
            }
            cops[name] = list;
        }
        j["coproducts"] = cops;
    }
    if (f.form) j["form"] = matrix_json(f.form->m);
    return j.dump(2) + "\n";
}

std::string dump(const TensorFile& f) {
    Json j = Json::object();
    j["format"] = kFormat;
    j["kind"] = "tensor";
    j["dim"] = f.r.dim_left();
    Json entries = Json::array();
    for (std::size_t a = 0; a < f.r.dim_left(); ++a)
        for (std::size_t b = 0; b < f.r.dim_right(); ++b)
            if (!is_zero(f.r(a, b))) entries.push_back(Json{{"left", a}, {"right", b}, {"coeff", scalar_json(f.r(a, b))}});
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

std::string dump(const MapFile& f) {
    Json j = Json::object();
    j["format"] = kFormat;
    j["kind"] = "map";
    j["rows"] = f.m.rows();
    j["cols"] = f.m.cols();
    Json entries = Json::array();
    for (std::size_t in = 0; in < f.m.cols(); ++in)
        for (std::size_t out = 0; out < f.m.rows(); ++out)
            if (!is_zero(f.m(out, in)))
                entries.push_back(Json{{"input", in}, {"output", out}, {"coeff", scalar_json(f.m(out, in))}});
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

std::string dump(const OOperatorFile& f) {
    Json j = Json::object();
    j["format"] = kFormat;
    j["kind"] = "ooperator";
    j["algebra"] = algebra_body_json(f.spec.algebra);
    if (f.bimodule_source == "explicit") {
        Json acts = Json::object();
        for (const auto& name : action_names(f.spec.algebra.kind)) {
            Json list = Json::array();
            for (const auto& m : f.spec.bimodule.actions.at(name)) list.push_back(matrix_json(m));
            acts[name] = list;
        }
        j["bimodule"] = Json{{"dim", f.spec.bimodule.space_dim}, {"actions", acts}};
    } else {
        j["bimodule"] = f.bimodule_source;
    }
    j["map"] = matrix_json(f.spec.P);
    return j.dump(2) + "\n";
}

}  // namespace bialg::io
