#pragma once

#include <string>

#include "gauss/diagram.hpp"

namespace gauss {

/// Chord diagram as text: the code tokens with one span line per chord,
/// running from tail ('o') to head ('>').
std::string render_ascii(const GaussDiagram& d);

/// Chord-interleavement graph in DOT format.
std::string render_dot(const GaussDiagram& d);

}  // namespace gauss
