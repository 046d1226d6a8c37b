#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gennet/catalog.hpp"

#ifndef GENNET_DEFAULT_CATALOG_DIR
#define GENNET_DEFAULT_CATALOG_DIR "data/catalogs"
#endif

namespace gennet {

std::string to_string(CatalogStratum s) {
  switch (s) {
    case CatalogStratum::NoMult: return "no-mult";
    case CatalogStratum::Mult: return "mult";
    case CatalogStratum::LeafDot: return "leaf-symmetry-dot";
    case CatalogStratum::LeafDdot: return "leaf-symmetry-ddot";
  }
  return "?";
}

CatalogStratum parse_catalog_stratum(const std::string& s) {
  if (s == "no-mult") return CatalogStratum::NoMult;
  if (s == "mult") return CatalogStratum::Mult;
  if (s == "leaf-symmetry-dot") return CatalogStratum::LeafDot;
  if (s == "leaf-symmetry-ddot") return CatalogStratum::LeafDdot;
  throw std::invalid_argument("unknown catalog stratum: " + s);
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int paren_balance(const std::string& s) {
  int d = 0;
  for (char c : s) {
    if (c == '(') ++d;
    if (c == ')') --d;
  }
  return d;
}

std::pair<std::string, std::string> split_key(const std::string& line) {
  size_t sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

// "<weight> <expr>"
SubTerm parse_weighted(const std::string& rest, const std::string& where) {
  auto [w, e] = split_key(rest);
  SubTerm st;
  st.weight = parse_rational(w);
  st.text = e;
  try {
    st.expr = parse_expr(e);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(where + ": " + ex.what());
  }
  return st;
}

}  // namespace

Catalog parse_catalog(const std::string& text, const std::string& name) {
  Catalog c;
  c.name = name;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  SkeletonTerm* cur = nullptr;
  bool seen_k = false, seen_stratum = false;

  auto where = [&] { return name + ":" + std::to_string(lineno); };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    while (paren_balance(line) > 0) {
      std::string more;
      if (!std::getline(in, more)) throw std::invalid_argument(where() + ": unbalanced parentheses");
      ++lineno;
      more = trim(more);
      if (!more.empty() && more[0] != '#') line += " " + more;
    }
    auto [key, rest] = split_key(line);

    if (key == "term") {
      if (cur) throw std::invalid_argument(where() + ": nested term");
      c.terms.emplace_back();
      cur = &c.terms.back();
      cur->id = rest;
      continue;
    }
    if (key == "end") {
      if (!cur) throw std::invalid_argument(where() + ": 'end' outside term");
      cur = nullptr;
      continue;
    }
    try {
      if (!cur) {
        if (key == "catalog") c.name = rest;
        else if (key == "k") { c.k = std::stoi(rest); seen_k = true; }
        else if (key == "stratum") { c.stratum = parse_catalog_stratum(rest); seen_stratum = true; }
        else if (key == "parent") c.parent = parse_catalog_stratum(rest);
        else if (key == "normalizer") c.normalizer = parse_rational(rest);
        else if (key == "adjudicated_normalizer") c.adjudicated_normalizer = parse_rational(rest);
        else if (key == "justification") c.justification = rest;
        else if (key == "symmetry_multiplier") c.symmetry_multiplier = std::stoi(rest);
        else throw std::invalid_argument("unknown catalog field '" + key + "'");
        continue;
      }
      if (key == "note") cur->note = rest;
      else if (key == "prefactor") cur->prefactor = parse_rational(rest);
      else if (key == "markers") {
        std::istringstream ms(rest);
        std::string tok;
        while (ms >> tok) {
          MarkerSpec m;
          size_t colon = tok.find(':');
          m.name = tok.substr(0, colon);
          if (colon != std::string::npos) m.cap = std::stoi(tok.substr(colon + 1));
          cur->markers.push_back(m);
        }
      } else if (key == "derive") {
        std::istringstream ms(rest);
        std::string tok;
        while (ms >> tok) cur->derive.push_back(tok);
      } else if (key == "expr") {
        cur->text = rest;
        cur->expr = parse_expr(rest);
      } else if (key == "sub") {
        cur->subs.push_back(parse_weighted(rest, where()));
      } else if (key == "adjudicated_prefactor") {
        cur->adjudicated_prefactor = parse_rational(rest);
      } else if (key == "adjudicated_expr") {
        SubTerm st;
        st.text = rest;
        st.expr = parse_expr(rest);
        cur->adjudicated_expr = st;
      } else if (key == "adjudicated_sub") {
        auto [idx, tail] = split_key(rest);
        cur->adjudicated_subs[std::stoi(idx)] = parse_weighted(tail, where());
      } else if (key == "justification") {
        cur->justification = rest;
      } else {
        throw std::invalid_argument("unknown term field '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      std::string msg = e.what();
      if (msg.rfind(name, 0) == 0) throw;
      throw std::invalid_argument(where() + ": " + msg);
    }
  }
  if (cur) throw std::invalid_argument(name + ": unterminated term '" + cur->id + "'");
  if (!seen_k || !seen_stratum) throw std::invalid_argument(name + ": missing k or stratum");
  auto errs = validate_catalog(c);
  if (!errs.empty()) {
    std::string msg = name + ": invalid catalog";
    for (auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  return c;
}

std::vector<std::string> validate_catalog(const Catalog& c) {
  std::vector<std::string> errs;
  if (c.k < 1 || c.k > 3) errs.push_back("k must be 1, 2 or 3");
  if (c.stratum == CatalogStratum::LeafDdot) {
    if (c.symmetry_multiplier != 2 && c.symmetry_multiplier != 4)
      errs.push_back("ddot catalog needs symmetry_multiplier 2 or 4");
    if (c.parent != CatalogStratum::NoMult && c.parent != CatalogStratum::Mult)
      errs.push_back("ddot catalog parent must be no-mult or mult");
  } else if (c.symmetry_multiplier != 1) {
    errs.push_back("symmetry_multiplier only allowed on ddot catalogs");
  }
  if (c.adjudicated_normalizer && c.justification.empty())
    errs.push_back("adjudicated_normalizer without justification");
  std::set<std::string> ids;
  for (auto& t : c.terms) {
    std::string tag = "term " + t.id + ": ";
    if (t.id.empty()) errs.push_back("term without id");
    if (!ids.insert(t.id).second) errs.push_back(tag + "duplicate id");
    if (t.text.empty()) errs.push_back(tag + "missing expr");
    std::map<std::string, int> caps;
    for (auto& m : t.markers) {
      if (m.cap < 1 || m.cap > 2) errs.push_back(tag + "cap must be 1 or 2 for " + m.name);
      if (!caps.emplace(m.name, m.cap).second) errs.push_back(tag + "duplicate marker " + m.name);
    }
    std::map<std::string, int> mult;
    for (auto& d : t.derive) ++mult[d];
    for (auto& [m, n] : mult) {
      auto it = caps.find(m);
      if (it == caps.end()) errs.push_back(tag + "derivative in undeclared marker " + m);
      else if (n > it->second) errs.push_back(tag + "derivative order exceeds cap for " + m);
    }
    auto check_expr = [&](const Expr& e, const std::string& what) {
      for (auto& m : markers_used(e))
        if (!caps.count(m)) errs.push_back(tag + what + " uses undeclared marker " + m);
    };
    if (!t.text.empty()) check_expr(t.expr, "expr");
    for (auto& s : t.subs) check_expr(s.expr, "sub");
    if (t.adjudicated_expr) check_expr(t.adjudicated_expr->expr, "adjudicated_expr");
    for (auto& [i, s] : t.adjudicated_subs) {
      check_expr(s.expr, "adjudicated_sub");
      if (i < 1 || i > static_cast<int>(t.subs.size()))
        errs.push_back(tag + "adjudicated_sub index out of range");
    }
    if (t.adjudicated() && t.justification.empty())
      errs.push_back(tag + "adjudicated field without justification");
  }
  return errs;
}

std::string catalog_dir() {
  const char* env = std::getenv("GENNET_CATALOG_DIR");
  if (env && *env) return env;
  return GENNET_DEFAULT_CATALOG_DIR;
}

std::vector<Catalog> load_catalogs(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("catalog directory not found: " + dir);
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".cat") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Catalog> out;
  for (auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back(parse_catalog(ss.str(), f.filename().string()));
  }
  return out;
}

const std::vector<Catalog>& default_catalogs() {
  static std::once_flag once;
  static std::vector<Catalog> cats;
  std::call_once(once, [] { cats = load_catalogs(catalog_dir()); });
  return cats;
}

const Catalog& find_catalog(int k, CatalogStratum s) {
  for (auto& c : default_catalogs())
    if (c.k == k && c.stratum == s) return c;
  throw std::invalid_argument("no catalog for k=" + std::to_string(k) + " stratum " + to_string(s));
}

std::vector<const Catalog*> ddot_catalogs(int k, CatalogStratum parent) {
  std::vector<const Catalog*> out;
  for (auto& c : default_catalogs())
    if (c.k == k && c.stratum == CatalogStratum::LeafDdot && c.parent == parent) out.push_back(&c);
  return out;
}

}  // namespace gennet
