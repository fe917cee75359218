#pragma once

// Theorem-as-test sweep over seeded random algebras and YBE solutions.

#include <cstdint>
#include <string>
#include <vector>

namespace bialg::properties {

struct Summary {
    int algebras = 0;        // verified random algebras, dims 2-3
    int solutions = 0;       // YBE solutions used on pass branches
    int non_solutions = 0;   // deliberate non-solutions on fail branches
    int dybe_to_plybe = 0;
    int aybe_to_cybe = 0;
    int plybe_lift = 0;
    int ooperator_pass = 0;  // equivalence held with both sides zero
    int ooperator_fail = 0;  // equivalence held with both sides nonzero
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

Summary run(std::uint64_t seed);

}  // namespace bialg::properties
