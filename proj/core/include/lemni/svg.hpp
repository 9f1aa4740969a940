#pragma once

#include "lemni/kernel.hpp"
#include "lemni/recipes.hpp"

#include <string>

namespace lemni {

struct SvgOptions {
    int curve_samples = 2048;       // arc-uniform samples of the curve
    unsigned sample_digits = 15;    // precision for figure sampling
    double viewport = 2.2;          // [-v, v]^2, the 17-gon spills past the unit circle
    bool draw_construction = true;  // thin gray lines/circles from the scene
};

/// Deterministic SVG 1.1 figure: the curve in black, construction objects in
/// thin gray, labeled points as dots. Either argument may be null.
std::string render_svg(const PrecisionContext& ctx, const Scene* scene, const NGon* gon,
                       const SvgOptions& opts = {});

}  // namespace lemni
