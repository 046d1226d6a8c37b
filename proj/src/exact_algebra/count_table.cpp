#include "gennet/count_table.hpp"

#include <stdexcept>

namespace gennet {

std::string to_string(Labeling l) { return l == Labeling::Vertex ? "vertex" : "leaf"; }

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::All: return "all";
    case Stratum::NoMult: return "no-mult";
    case Stratum::Mult: return "mult";
  }
  return "?";
}

Stratum parse_stratum(const std::string& s) {
  if (s == "all") return Stratum::All;
  if (s == "no-mult") return Stratum::NoMult;
  if (s == "mult") return Stratum::Mult;
  throw std::invalid_argument("unknown stratum: " + s);
}

Labeling parse_labeling(const std::string& s) {
  if (s == "vertex") return Labeling::Vertex;
  if (s == "leaf") return Labeling::Leaf;
  throw std::invalid_argument("unknown labeling: " + s);
}

}  // namespace gennet
