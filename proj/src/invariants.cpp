#include "gauss/invariants.hpp"

namespace gauss {

int writhe(const GaussDiagram& d) {
  int w = 0;
  for (const auto& [c, s] : d.signs) {
    (void)c;
    w += static_cast<int>(s);
  }
  return w;
}

int odd_writhe(const GaussDiagram& d) {
  int w = 0;
  for (const auto& [c, s] : d.signs)
    if (interleave_count(d, c) % 2 == 1) w += static_cast<int>(s);
  return w;
}

}  // namespace gauss
