#pragma once

#include <string>

#include "rotbraid/braid.hpp"

namespace rotbraid {

/// ASCII braid diagram, one crossing block per letter, time running down.
/// The strand entering a positive crossing from the left passes behind.
std::string ascii_diagram(const BraidWord& w);

/// Static SVG rendering with over/under gaps matching the sign convention.
std::string svg_diagram(const BraidWord& w);

}  // namespace rotbraid
