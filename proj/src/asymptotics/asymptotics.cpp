#include "gennet/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>
#include <stdexcept>

#include "gennet/closed_forms.hpp"
#include "json.hpp"

namespace gennet {

namespace {

const HighFloat& pi() {
  static const HighFloat p = boost::math::constants::pi<HighFloat>();
  return p;
}

// log((sqrt2/e)^n n^(n+2k-1))
HighFloat log_scale(int k, int n) {
  HighFloat N = n;
  return N * (log(HighFloat(2)) / 2 - 1) + (N + 2 * k - 1) * log(N);
}

}  // namespace

BigRational gamma_half_over_sqrt_pi(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  // Gamma(j + 1/2) = (1/2)(3/2)...(j - 1/2) sqrt(pi) with j = 2k - 1
  BigRational g = 1;
  for (int i = 1; i <= 2 * k - 1; ++i) g *= ratio(2 * i - 1, 2);
  return g;
}

QSqrt2 dk_exact(int k, Reading reading) {
  StandardForm f = normalize_to_standard_form(assemble(k, Stratum::All, reading), k);
  QSqrt2 a = eval_at_inv_sqrt2(f.a);
  BigRational scale = BigRational(2) / (BigRational(BigInt(1) << (2 * k)) * gamma_half_over_sqrt_pi(k));
  return a * QSqrt2(scale, 0);
}

HighFloat second_order_coefficient(int k) {
  static const int denom[] = {0, 2, 8, 64};
  if (k < 1 || k > 3) throw std::invalid_argument("second-order coefficient known only for k = 1, 2, 3");
  return -sqrt(pi()) / denom[k];
}

HighFloat to_high(const BigRational& x) {
  return HighFloat(x.get_num().get_str()) / HighFloat(x.get_den().get_str());
}

HighFloat to_high(const QSqrt2& x) { return to_high(x.a) + to_high(x.b) * sqrt(HighFloat(2)); }

HighFloat asym_vertex(int k, int n, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n % 2 == 0) return 0;
  HighFloat c = 2 * to_high(dk_exact(k));
  if (order == 2) c += second_order_coefficient(k) / sqrt(HighFloat(n));
  return exp(log_scale(k, n)) * c;
}

HighFloat asym_leaf(int k, int l) {
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  HighFloat L = l;
  HighFloat lg = L * (log(HighFloat(2)) - 1) + (L + 2 * k - 1) * log(L);
  return pow(HighFloat(2), 3 * k - 1) * to_high(dk_exact(k)) * exp(lg);
}

BigRational exact_vertex_count(int k, int n) {
  if (k == 1) {
    FormulaValue v = exact_vertex(1, n, Stratum::All);
    return v.defined ? v.value : BigRational(0);
  }
  auto s = series_value(Target{k, Labeling::Vertex, Stratum::All, Part::Whole, ""}, n);
  return s ? *s : BigRational(0);
}

std::vector<AsymptoticEstimate> convergence_table(int k, const std::vector<int>& n_list) {
  std::vector<AsymptoticEstimate> rows;
  HighFloat c = 2 * to_high(dk_exact(k));
  for (int n : n_list) {
    AsymptoticEstimate e;
    e.k = k;
    e.n = n;
    e.exact = exact_vertex_count(k, n);
    e.est1 = asym_vertex(k, n, 1);
    e.est2 = asym_vertex(k, n, 2);
    HighFloat ex = to_high(e.exact);
    if (ex != 0) {
      e.rel_err1 = e.est1 / ex - 1;
      e.rel_err2 = e.est2 / ex - 1;
      e.fitted_residual = (ex / exp(log_scale(k, n)) - c) * sqrt(HighFloat(n));
    }
    if (k == 1 && n % 2 == 1 && n >= 3) {
      HighFloat t = to_high(BigRational(exact_tree_child_vertex(n)));
      e.tree_child_gap = abs(ex / t - 1) * n;
    }
    rows.push_back(std::move(e));
  }
  return rows;
}

std::string format_float(const HighFloat& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

void write_table_json(std::ostream& out, const std::vector<AsymptoticEstimate>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : rows) {
    nlohmann::json j = {{"k", r.k},
                        {"n", r.n},
                        {"exact", to_string(r.exact)},
                        {"est1", format_float(r.est1)},
                        {"est2", format_float(r.est2)},
                        {"rel_err1", format_float(r.rel_err1)},
                        {"rel_err2", format_float(r.rel_err2)},
                        {"fitted_residual", format_float(r.fitted_residual)}};
    if (r.tree_child_gap) j["tree_child_gap"] = format_float(*r.tree_child_gap);
    arr.push_back(j);
  }
  out << arr.dump(2) << "\n";
}

void write_table_csv(std::ostream& out, const std::vector<AsymptoticEstimate>& rows) {
  out << "k,n,exact,est1,est2,rel_err1,rel_err2,fitted_residual\n";
  for (auto& r : rows)
    out << r.k << ',' << r.n << ',' << to_string(r.exact) << ',' << format_float(r.est1) << ','
        << format_float(r.est2) << ',' << format_float(r.rel_err1) << ',' << format_float(r.rel_err2)
        << ',' << format_float(r.fitted_residual) << '\n';
}

}  // namespace gennet
