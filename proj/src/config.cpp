#include "levelflow/config.hpp"

#include <cstdlib>
#include <string>

namespace levelflow {

static double envScale() {
  const char* raw = std::getenv("LEVELFLOW_TOLERANCE_SCALE");
  if (!raw) return 1.0;
  try {
    double s = std::stod(raw);
    if (s > 0.0) return s;
  } catch (...) {
  }
  return 1.0;
}

const Tolerances& Tolerances::global() {
  static const Tolerances tols = [] {
    Tolerances t;
    t.scale = envScale();
    return t;
  }();
  return tols;
}

}  // namespace levelflow
