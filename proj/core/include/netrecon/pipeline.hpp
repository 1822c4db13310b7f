#pragma once

#include <cstddef>
#include <vector>

#include "netrecon/bounds.hpp"
#include "netrecon/extension.hpp"
#include "netrecon/reconstruct.hpp"
#include "netrecon/validity.hpp"

namespace netrecon {

struct SolveOptions {
    bool project = true;
    bool tighten = false;
    std::size_t max_hidden = 4;
    int workers = 1;
};

// Full pipeline result: validity, the minimal extensions, and per extension
// the bounds used plus every structure found under them.
struct SolveResult {
    ValidityReport validity;
    ExtensionSearchResult extensions;

    struct PerExtension {
        Extension extension;
        Bounds bounds;
        std::vector<Solution> solutions;
    };
    std::vector<PerExtension> results;
};

// validate, extend if needed, then enumerate per extension. Workers spread
// extensions over threads; the result is identical for any worker count.
SolveResult solve_instance(const ExperimentGraph& g, const SolveOptions& opts);

}  // namespace netrecon
