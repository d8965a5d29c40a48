#include "motzkin/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dense_eig.hpp"
#include "motzkin/bignum.hpp"
#include "motzkin/correlations.hpp"
#include "motzkin/entanglement.hpp"
#include "motzkin/hamiltonian.hpp"
#include "motzkin/quadrature.hpp"
#include "motzkin/walks.hpp"

namespace motzkin {
namespace {

ValidationRecord walks_suite(int max_len) {
  ValidationRecord rec;
  rec.name = "walks_vs_brute_force";
  rec.tolerance = 0.0;
  long long checked = 0;
  long long mismatches = 0;
  for (int len = 0; len <= max_len; ++len) {
    for (int m1 = 0; m1 <= len; ++m1) {
      for (int m2 = 0; m2 <= len; ++m2) {
        const WalkEndpoints e{len, m1, m2};
        if (motzkin_count(e) != brute_force_count(e, true)) ++mismatches;
        if (dyck_count(e) != brute_force_count(e, false)) ++mismatches;
        checked += 2;
      }
    }
  }
  rec.max_error = static_cast<double>(mismatches);
  rec.passed = mismatches == 0;
  std::ostringstream os;
  os << "compared " << checked << " closed-form counts against enumeration, "
     << "lengths 0.." << max_len;
  rec.detail = os.str();
  return rec;
}

ValidationRecord catalan_identity_suite(int max_len) {
  ValidationRecord rec;
  rec.name = "flat_position_catalan_identity";
  rec.tolerance = 0.0;
  long long mismatches = 0;
  for (int len = 0; len <= max_len; ++len) {
    Count sum = 0;
    for (int i = 0; 2 * i <= len; ++i) {
      sum += binomial(len, 2 * i) * catalan(i);
    }
    if (sum != motzkin_number(len)) ++mismatches;
  }
  rec.max_error = static_cast<double>(mismatches);
  rec.passed = mismatches == 0;
  std::ostringstream os;
  os << "binomial-Catalan resummation vs direct count, lengths 0.."
     << max_len;
  rec.detail = os.str();
  return rec;
}

ValidationRecord schmidt_suite(const std::vector<int>& sizes) {
  ValidationRecord rec;
  rec.name = "schmidt_vs_partial_trace";
  rec.tolerance = 1e-10;
  double worst = 0.0;
  bool rank_ok = true;
  long long cuts = 0;
  for (const int two_n : sizes) {
    const StateVector st = build_motzkin_state(two_n);
    for (int n1 = 1; n1 <= two_n - 1; ++n1) {
      const int b = std::min(n1, two_n - n1);
      ChainGeometry g;
      g.n = two_n / 2;
      g.n1 = n1;
      std::vector<double> weights = cut_spectrum(g).weights;
      std::sort(weights.begin(), weights.end(), std::greater<double>());
      // Diagonalize the reduced density matrix of the smaller side; the
      // nonzero spectrum is shared by both sides of the bipartition.
      const int first = n1 <= two_n - n1 ? 1 : n1 + 1;
      const int last = n1 <= two_n - n1 ? n1 : two_n;
      const Eigen::MatrixXd rho = reduced_density(st, first, last);
      const detail::EigResult eig = detail::eig_sym(rho);
      std::vector<double> evals(eig.values.data(),
                                eig.values.data() + eig.values.size());
      std::sort(evals.begin(), evals.end(), std::greater<double>());
      int rank = 0;
      for (const double v : evals) {
        if (v > 1e-12) ++rank;
      }
      if (rank != b + 1) rank_ok = false;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        const double ev = k < evals.size() ? evals[k] : 0.0;
        worst = std::max(worst, std::abs(ev - weights[k]));
      }
      for (std::size_t k = weights.size(); k < evals.size(); ++k) {
        worst = std::max(worst, std::abs(evals[k]));
      }
      ++cuts;
    }
  }
  rec.max_error = worst;
  rec.passed = worst < rec.tolerance && rank_ok;
  std::ostringstream os;
  os << cuts << " bipartitions; combinatorial weights vs reduced-density "
     << "eigenvalues, rank must be min(n1, 2n-n1)+1"
     << (rank_ok ? "" : " (rank mismatch)");
  rec.detail = os.str();
  return rec;
}

double max_entry_diff(const SparseOperator& a, const SparseOperator& b) {
  double worst = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto key = [](const Triple& t) {
    return std::pair<std::int64_t, std::int64_t>(t.row, t.col);
  };
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j >= b.entries.size() ||
        (i < a.entries.size() && key(a.entries[i]) < key(b.entries[j]))) {
      worst = std::max(worst, std::abs(a.entries[i].value));
      ++i;
    } else if (i >= a.entries.size() ||
               key(b.entries[j]) < key(a.entries[i])) {
      worst = std::max(worst, std::abs(b.entries[j].value));
      ++j;
    } else {
      worst = std::max(worst,
                       std::abs(a.entries[i].value - b.entries[j].value));
      ++i;
      ++j;
    }
  }
  return worst;
}

ValidationRecord dual_hamiltonian_suite(int max_two_n) {
  ValidationRecord rec;
  rec.name = "dual_hamiltonian_construction";
  rec.tolerance = 1e-12;
  double worst = 0.0;
  for (int two_n = 2; two_n <= max_two_n; ++two_n) {
    const SparseOperator ket = build_hamiltonian(two_n);
    const SparseOperator spin = build_hamiltonian_spin(two_n);
    worst = std::max(worst, max_entry_diff(ket, spin));
  }
  rec.max_error = worst;
  rec.passed = worst < rec.tolerance;
  std::ostringstream os;
  os << "projector vs spin-operator assembly, entrywise, lengths 2.."
     << max_two_n;
  rec.detail = os.str();
  return rec;
}

ValidationRecord quadrature_suite() {
  ValidationRecord rec;
  rec.name = "quadrature_vs_closed_forms";
  rec.tolerance = 1e-6;
  const double sigma2 = 2.0 / 3.0;
  double worst = 0.0;

  for (const double lambda : {0.3, 0.5, 0.7}) {
    const double norm = integrate(
        [lambda](double x) { return excursion_density(lambda, x); }, 0.0,
        12.0, 1e-12);
    worst = std::max(worst, std::abs(norm - 1.0));
  }

  // Mean, second moment, and the connected variance against quadrature
  // of the rescaled density (heights carry a factor sigma*sqrt(2n)).
  for (const double lambda : {0.2, 0.35, 0.5, 0.65, 0.8}) {
    const int n = 7;
    const double scale = std::sqrt(sigma2) * std::sqrt(2.0 * n);
    ExcursionPoint pt;
    pt.lambda = lambda;
    pt.n = n;
    const ExcursionMoments closed = excursion_moments(pt);
    const double m1 = integrate(
        [lambda](double x) { return x * excursion_density(lambda, x); }, 0.0,
        12.0, 1e-12);
    const double m2 = integrate(
        [lambda](double x) { return x * x * excursion_density(lambda, x); },
        0.0, 12.0, 1e-12);
    worst = std::max(worst, std::abs(scale * m1 - closed.mean) /
                                std::abs(closed.mean));
    worst = std::max(worst, std::abs(scale * scale * m2 - closed.second) /
                                std::abs(closed.second));
    const double var_quad = scale * scale * (m2 - m1 * m1);
    const double var_closed =
        n * 4.0 * lambda * (1.0 - lambda) * (1.0 - 8.0 / (3.0 * M_PI));
    worst = std::max(worst,
                     std::abs(var_quad - var_closed) / std::abs(var_closed));
  }

  for (const auto& [lambda, mu] :
       std::vector<std::pair<double, double>>{{0.3, 0.6}, {0.25, 0.75}}) {
    const double norm = integrate2d(
        [lambda = lambda, mu = mu](double x1, double x2) {
          return excursion_two_point_density(lambda, mu, x1, x2);
        },
        0.0, 12.0, 0.0, 12.0, 1e-10);
    // The joint normalization carries a tighter 1e-8 target; scale it
    // onto the shared 1e-6 tolerance.
    worst = std::max(worst, std::abs(norm - 1.0) * 1e2);
    const int n = 9;
    ExcursionPoint pt;
    pt.lambda = lambda;
    pt.mu = mu;
    pt.n = n;
    const ExcursionTwoPoint closed = excursion_two_point(pt);
    const double cross = integrate2d(
        [lambda = lambda, mu = mu](double x1, double x2) {
          return x1 * x2 * excursion_two_point_density(lambda, mu, x1, x2);
        },
        0.0, 12.0, 0.0, 12.0, 1e-10);
    const double joint_quad = 2.0 * n * sigma2 * cross;
    worst = std::max(worst,
                     std::abs(joint_quad - closed.joint) /
                         std::abs(closed.joint));
  }

  rec.max_error = worst;
  rec.passed = worst < rec.tolerance;
  rec.detail =
      "excursion density normalizations, moments, connected variance, and "
      "the two-time covariance vs closed forms";
  return rec;
}

ValidationRecord frustration_suite(int max_two_n) {
  ValidationRecord rec;
  rec.name = "frustration_free_ground_state";
  rec.tolerance = 1e-12;
  double worst = 0.0;
  bool unique = true;
  for (int two_n = 2; two_n <= max_two_n; ++two_n) {
    const FrustrationReport rep = verify_frustration_free(two_n);
    for (const double r : rep.bond_residuals) worst = std::max(worst, r);
    worst = std::max(worst, rep.boundary_residual);
    if (!rep.unique_ground_state) unique = false;
  }
  rec.max_error = worst;
  rec.passed = worst < rec.tolerance && unique;
  std::ostringstream os;
  os << "projector residuals on the ground state and gap positivity, "
     << "lengths 2.." << max_two_n;
  rec.detail = os.str();
  return rec;
}

}  // namespace

ValidationReport run_validation(const std::string& level) {
  if (level != "quick" && level != "full") {
    throw std::invalid_argument("run_validation: level must be quick or full");
  }
  const bool full = level == "full";
  ValidationReport report;
  report.level = level;

  const auto guard = [&report](const std::string& name,
                               const std::function<ValidationRecord()>& fn) {
    try {
      report.records.push_back(fn());
    } catch (const std::exception& e) {
      ValidationRecord rec;
      rec.name = name;
      rec.passed = false;
      rec.max_error = std::numeric_limits<double>::infinity();
      rec.detail = std::string("suite aborted: ") + e.what();
      report.records.push_back(std::move(rec));
    }
  };

  guard("walks_vs_brute_force",
        [&] { return walks_suite(full ? 12 : 9); });
  guard("flat_position_catalan_identity",
        [&] { return catalan_identity_suite(full ? 60 : 40); });
  guard("schmidt_vs_partial_trace", [&] {
    return schmidt_suite(full ? std::vector<int>{4, 6, 8, 10, 12}
                              : std::vector<int>{4, 6, 8});
  });
  guard("dual_hamiltonian_construction",
        [&] { return dual_hamiltonian_suite(full ? 8 : 6); });
  guard("quadrature_vs_closed_forms", [&] { return quadrature_suite(); });
  guard("frustration_free_ground_state",
        [&] { return frustration_suite(full ? 10 : 8); });

  report.passed = true;
  for (const auto& rec : report.records) {
    if (!rec.passed) report.passed = false;
  }
  return report;
}

void write_validation_report(std::ostream& out,
                             const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["level"] = report.level;
  j["passed"] = report.passed;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    records.push_back({{"name", rec.name},
                       {"passed", rec.passed},
                       {"max_error", rec.max_error},
                       {"tolerance", rec.tolerance},
                       {"detail", rec.detail}});
  }
  j["records"] = std::move(records);
  out << j.dump(2) << '\n';
}

}  // namespace motzkin
