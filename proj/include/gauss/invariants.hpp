#pragma once

#include "gauss/diagram.hpp"

namespace gauss {

/// Sum of chord signs.
int writhe(const GaussDiagram& d);

/// Sum of signs of chords with an odd number of interleaved partners.
/// Unchanged by moves I, II and III; not by FH/FT.
int odd_writhe(const GaussDiagram& d);

}  // namespace gauss
