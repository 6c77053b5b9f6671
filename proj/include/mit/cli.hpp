#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mit/anchored.hpp"
#include "mit/geom_core.hpp"

namespace mit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

inline constexpr std::size_t kDefaultOverlayDirections = 240;

/// Anchored triangles for the k directions at angles 2πj/k, j = 0..k−1.
std::vector<AnchoredTriangle> anchored_overlay(const ConvexPolygon& poly, std::size_t k);

/// Entry point of the `mit` tool. args excludes the program name. Input files
/// named "-" are read from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mit
