#include <motzkin/entanglement.hpp>

#include <motzkin/bignum.hpp>
#include <motzkin/config.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace motzkin {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
const double kLn2 = std::log(2.0);

void check_cut(const ChainGeometry& g, const char* op) {
  if (g.n < 1) throw std::invalid_argument(std::string(op) + ": n must be positive");
  if (g.n1 < 1 || g.n1 > g.two_n() - 1) {
    throw std::invalid_argument(std::string(op) + ": cut must lie in [1, 2n-1]");
  }
}

double vn_entropy(const std::vector<double>& weights) {
  KahanSum s;
  for (double p : weights) {
    if (p > 0.0) s.add(-p * std::log(p));
  }
  return s.value();
}

double renyi_entropy(const std::vector<double>& weights, double kappa) {
  KahanSum s;
  for (double p : weights) {
    if (p > 0.0) s.add(std::pow(p, kappa));
  }
  return std::log(s.value()) / (1.0 - kappa);
}

double cut_asymptotic_scale(const ChainGeometry& g) {
  return 0.5 * std::log(static_cast<double>(g.n1) * (g.two_n() - g.n1) / g.n);
}

EntropyReport make_report(double exact, double asymptotic, int rank) {
  EntropyReport r;
  r.exact_nats = exact;
  r.asymptotic_nats = asymptotic;
  r.exact_bits = exact / kLn2;
  r.asymptotic_bits = asymptotic / kLn2;
  r.rank = rank;
  return r;
}

void check_kappa(double kappa, const char* op) {
  if (!(kappa > 0.0)) {
    throw std::invalid_argument(std::string(op) + ": kappa must be positive");
  }
}

}  // namespace

Spectrum cut_spectrum(const ChainGeometry& g, ArithmeticMode mode) {
  check_cut(g, "cut_spectrum");
  HeightDistribution dist = height_distribution_exact(g, mode);
  Spectrum s;
  s.weights = std::move(dist.probabilities);
  s.labels.resize(s.weights.size());
  for (std::size_t m = 0; m < s.labels.size(); ++m) s.labels[m] = static_cast<int>(m);
  return s;
}

Spectrum cut_spectrum_gaussian(const ChainGeometry& g) {
  check_cut(g, "cut_spectrum_gaussian");
  const double coeff = 1.0 / g.n1 + 1.0 / (g.two_n() - g.n1);
  const int b = g.boundary_distance();
  Spectrum s;
  KahanSum total;
  for (int m = 0; m <= b; ++m) {
    const double md = m;
    const double w = md * md * std::exp(-0.75 * md * md * coeff);
    s.labels.push_back(m);
    s.weights.push_back(w);
    total.add(w);
  }
  for (double& w : s.weights) w /= total.value();
  return s;
}

EntropyReport cut_entropy(const ChainGeometry& g, ArithmeticMode mode) {
  Spectrum s = cut_spectrum(g, mode);
  const double asymptotic =
      cut_asymptotic_scale(g) + kEulerGamma - 0.5 + 0.5 * std::log(2.0 * kPi / 3.0);
  return make_report(vn_entropy(s.weights), asymptotic,
                     static_cast<int>(s.weights.size()));
}

EntropyReport cut_renyi(const ChainGeometry& g, double kappa,
                        ArithmeticMode mode) {
  check_kappa(kappa, "cut_renyi");
  if (kappa == 1.0) return cut_entropy(g, mode);
  Spectrum s = cut_spectrum(g, mode);
  return make_report(renyi_entropy(s.weights, kappa),
                     cut_asymptotic_scale(g) + renyi_cut_f(kappa),
                     static_cast<int>(s.weights.size()));
}

double renyi_cut_f(double kappa) {
  check_kappa(kappa, "renyi_cut_f");
  if (kappa == 1.0) {
    return kEulerGamma - 0.5 + 0.5 * std::log(2.0 * kPi / 3.0);
  }
  return std::lgamma(kappa + 0.5) / (1.0 - kappa) -
         ((1.0 + 2.0 * kappa) * std::log(kappa) + kappa * std::log(kPi / 24.0) +
          std::log(6.0)) /
             (2.0 * (1.0 - kappa));
}

Spectrum block_spectrum(int L) {
  if (L < 1) throw std::invalid_argument("block_spectrum: L must be positive");
  Spectrum s;
  KahanSum total;
  for (int p = -L; p <= L; ++p) {
    const double w = std::exp(-0.75 * static_cast<double>(p) * p / L);
    s.labels.push_back(p);
    s.weights.push_back(w);
    total.add(w);
  }
  for (double& w : s.weights) w /= total.value();
  return s;
}

EntropyReport block_entropy(int L) {
  Spectrum s = block_spectrum(L);
  const double asymptotic =
      0.5 * std::log(static_cast<double>(L)) + std::log(2.0 * std::sqrt(kPi / 3.0)) + 0.5;
  return make_report(vn_entropy(s.weights), asymptotic, 2 * L + 1);
}

double block_entropy_corrected(int L, int b) {
  if (L < 1) throw std::invalid_argument("block_entropy_corrected: L must be positive");
  if (b < 1) throw std::invalid_argument("block_entropy_corrected: b must be positive");
  const double ratio = static_cast<double>(L) / b;
  return 0.5 * std::log(static_cast<double>(L)) + std::log(2.0 * std::sqrt(kPi / 3.0)) +
         0.5 - 0.75 * ratio - 9.0 / 16.0 * ratio * ratio;
}

EntropyReport block_renyi(int L, double kappa) {
  check_kappa(kappa, "block_renyi");
  if (kappa == 1.0) return block_entropy(L);
  Spectrum s = block_spectrum(L);
  return make_report(renyi_entropy(s.weights, kappa),
                     0.5 * std::log(static_cast<double>(L)) + renyi_block_g(kappa),
                     2 * L + 1);
}

double renyi_block_g(double kappa) {
  check_kappa(kappa, "renyi_block_g");
  const double base = std::log(2.0 * std::sqrt(kPi / 3.0));
  if (kappa == 1.0) return base + 0.5;
  return base - std::log(kappa) / (2.0 * (1.0 - kappa));
}

std::vector<std::pair<int, double>> entanglement_hamiltonian_cut(
    const ChainGeometry& g) {
  check_cut(g, "entanglement_hamiltonian_cut");
  config::check_two_n(g.two_n(), config::kHeightMax2n, "entanglement_hamiltonian_cut");
  const double coeff = 1.0 / g.n1 + 1.0 / (g.two_n() - g.n1);
  const int b = g.boundary_distance();
  std::vector<std::pair<int, double>> levels;
  levels.reserve(static_cast<std::size_t>(b));
  for (int m = 1; m <= b; ++m) {
    const double md = m;
    levels.emplace_back(m, 0.75 * md * md * coeff - 2.0 * std::log(md));
  }
  return levels;
}

std::vector<std::pair<int, double>> entanglement_hamiltonian_block(int L) {
  if (L < 1) {
    throw std::invalid_argument("entanglement_hamiltonian_block: L must be positive");
  }
  std::vector<std::pair<int, double>> levels;
  levels.reserve(2 * static_cast<std::size_t>(L) + 1);
  for (int p = -L; p <= L; ++p) {
    levels.emplace_back(p, 0.75 * static_cast<double>(p) * p / L);
  }
  return levels;
}

}  // namespace motzkin
