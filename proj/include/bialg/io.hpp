#pragma once

// JSON files: sparse structure constants, rationals as "p" or "p/q" strings,
// a top-level "format": 1 and no unknown keys. Indices are 0-based.

#include "bialg/ybe.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace bialg::io {

inline constexpr int kFormat = 1;

// An algebra, optionally with the coproducts of its matching coalgebra kind
// and a bilinear form.
struct AlgebraFile {
    FinAlgebra algebra;
    std::optional<CoalgStruct> coalgebra;
    std::optional<BilinForm> form;

    bool operator==(const AlgebraFile&) const = default;

    BialgStruct bialgebra() const;          // throws ParseError without coproducts
    QuadraticPerm quadratic_perm() const;   // throws ParseError unless perm with form
};

// {"format":1, "kind":"tensor", "dim":n, "entries":[{"left":i,"right":j,"coeff":c}]}
struct TensorFile {
    RMatrix r;
    bool operator==(const TensorFile&) const = default;
};

// {"format":1, "kind":"map", "rows":m, "cols":n,
//  "entries":[{"input":j,"output":i,"coeff":c}]}: basis vector j ↦ Σ c·b_i
struct MapFile {
    Matrix m;
    bool operator==(const MapFile&) const = default;
};

struct OOperatorFile {
    OOperatorSpec spec;
    std::string bimodule_source;  // "coregular", "regular" or "explicit"
};

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin = "<string>");
TensorFile parse_tensor_text(const std::string& text, const std::string& origin = "<string>");
MapFile parse_map_text(const std::string& text, const std::string& origin = "<string>");
OOperatorFile parse_ooperator_text(const std::string& text, const std::string& origin = "<string>");

AlgebraFile load_algebra(const std::filesystem::path& p);
TensorFile load_tensor(const std::filesystem::path& p);
MapFile load_map(const std::filesystem::path& p);
OOperatorFile load_ooperator(const std::filesystem::path& p);

// Canonical text: fixed key order, zero coefficients omitted, two-space indent.
std::string dump(const AlgebraFile& f);
std::string dump(const TensorFile& f);
std::string dump(const MapFile& f);
std::string dump(const OOperatorFile& f);

std::string read_file(const std::filesystem::path& p);

}  // namespace bialg::io
