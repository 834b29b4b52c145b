#pragma once

// Umbrella header.

#include "thompson/coloring.hpp"
#include "thompson/dyadic.hpp"
#include "thompson/error.hpp"
#include "thompson/invariants.hpp"
#include "thompson/laurent.hpp"
#include "thompson/link_builder.hpp"
#include "thompson/link_diagram.hpp"
#include "thompson/morphisms.hpp"
#include "thompson/svg.hpp"
#include "thompson/tait_graph.hpp"
#include "thompson/tree.hpp"
#include "thompson/word.hpp"

namespace thompson {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace thompson
