#pragma once

#include <compare>
#include <map>
#include <string>

#include "gennet/rational.hpp"

namespace gennet {

enum class Labeling { Vertex, Leaf };
enum class Stratum { All, NoMult, Mult };

std::string to_string(Labeling l);
std::string to_string(Stratum s);
Stratum parse_stratum(const std::string& s);
Labeling parse_labeling(const std::string& s);

struct CountKey {
  int k = 0;
  int size = 0;  // n for vertex-labeled, l for leaf-labeled
  Labeling labeling = Labeling::Vertex;
  Stratum stratum = Stratum::All;
  auto operator<=>(const CountKey&) const = default;
};

struct CountTable {
  std::string provenance;  // series | closed-form | oracle
  std::map<CountKey, BigRational> counts;

  void add(const CountKey& key, const BigRational& v) { counts[key] += v; }
  BigRational get(const CountKey& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? BigRational(0) : it->second;
  }
  bool has(const CountKey& key) const { return counts.count(key) > 0; }
};

}  // namespace gennet
