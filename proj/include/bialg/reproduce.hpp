#pragma once

// Worked examples rebuilt from the corpus inputs and diffed against the
// hand-transcribed golden files under corpus/expected/<id>/.

#include "bialg/emit.hpp"
#include "bialg/bialgebra.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace bialg::repro {

const std::vector<std::string>& example_ids();

struct Reproduction {
    Report report;
    std::vector<io::InputRecord> inputs;  // paths relative to the corpus root
    std::vector<io::Artifact> artifacts;
};

// Throws Error for an unknown id, ParseError for a bad corpus file.
Reproduction reproduce(const std::string& id, const std::filesystem::path& corpus,
                       const BialgCheckOptions& opt = {});

// The faces of the three-dimensional diagram for a dendriform algebra D, a
// quadratic perm algebra and a symmetric DYBE solution r, each face a
// check-id prefix.
const std::vector<std::string>& cube_faces();
Report diagram_faces(const FinAlgebra& D, const QuadraticPerm& qp, const RMatrix& r,
                     const BialgCheckOptions& opt = {});

}  // namespace bialg::repro
