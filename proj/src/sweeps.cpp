#include "motzkin/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <json.hpp>

#include "motzkin/correlations.hpp"
#include "motzkin/entanglement.hpp"
#include "motzkin/hamiltonian.hpp"

namespace motzkin {
namespace {

constexpr const char* kToolVersion = "1.0.0";

using Value = std::variant<long long, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

struct Skip {
  std::string point;
  std::string reason;
};

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (std::holds_alternative<long long>(row[i])) {
        out << std::get<long long>(row[i]);
      } else {
        out << format_real(std::get<double>(row[i]));
      }
    }
    out << '\n';
  }
}

nlohmann::ordered_json table_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (std::holds_alternative<long long>(row[i])) {
        rec[t.columns[i]] = std::get<long long>(row[i]);
      } else {
        rec[t.columns[i]] = std::get<double>(row[i]);
      }
    }
    arr.push_back(std::move(rec));
  }
  return arr;
}

void push_measurement(std::vector<Value>& row, double exact,
                      double asymptotic) {
  const double abs_diff = std::abs(exact - asymptotic);
  row.emplace_back(exact);
  row.emplace_back(asymptotic);
  row.emplace_back(abs_diff);
  row.emplace_back(abs_diff / std::abs(exact));
}

[[noreturn]] void bad_request(const std::string& message) {
  throw std::invalid_argument("run_sweep: " + message);
}

int require_two_n(const SweepRequest& req) {
  if (req.two_n < 1) {
    bad_request("--two-n is required for quantity '" + req.quantity + "'");
  }
  return req.two_n;
}

int require_even_two_n(const SweepRequest& req) {
  const int two_n = require_two_n(req);
  if (two_n % 2 != 0) {
    bad_request("quantity '" + req.quantity +
                "' requires an even chain length");
  }
  return two_n;
}

// Explicit --n1 wins, then --n1-range, then the fallback range (pass
// fallback_begin > fallback_end to make the parameter mandatory).
std::vector<int> n1_values(const SweepRequest& req, int fallback_begin,
                           int fallback_end) {
  if (req.n1 > 0) return {req.n1};
  if (req.n1_range.is_set()) return req.n1_range.values();
  if (fallback_begin <= fallback_end) {
    std::vector<int> v;
    for (int x = fallback_begin; x <= fallback_end; ++x) v.push_back(x);
    return v;
  }
  bad_request("--n1 or --n1-range is required for quantity '" + req.quantity +
              "'");
}

std::vector<double> require_kappas(const SweepRequest& req) {
  if (req.kappas.empty()) {
    bad_request("--kappa is required for quantity '" + req.quantity + "'");
  }
  return req.kappas;
}

// Ground-state <s^z_{n1} s^z_{n2}> directly from the amplitude vector.
double ground_szsz(int two_n, int n1, int n2) {
  const StateVector st = build_motzkin_state(two_n);
  std::int64_t p1 = 1;
  for (int k = 0; k < two_n - n1; ++k) p1 *= 3;
  std::int64_t p2 = 1;
  for (int k = 0; k < two_n - n2; ++k) p2 *= 3;
  double acc = 0.0;
  for (std::int64_t x = 0;
       x < static_cast<std::int64_t>(st.amplitudes.size()); ++x) {
    const double a = st.amplitudes[static_cast<std::size_t>(x)];
    if (a == 0.0) continue;
    const int s1 = 1 - static_cast<int>((x / p1) % 3);
    const int s2 = 1 - static_cast<int>((x / p2) % 3);
    acc += a * a * static_cast<double>(s1 * s2);
  }
  return acc;
}

std::string point_label(std::initializer_list<std::pair<const char*, long long>>
                            params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ',';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

}  // namespace

std::vector<int> Range::values() const {
  std::vector<int> v;
  if (!is_set()) return v;
  for (long long x = begin; x <= end; x += step) {
    v.push_back(static_cast<int>(x));
  }
  return v;
}

int run_sweep(const SweepRequest& req) {
  if (req.format != "csv" && req.format != "json") {
    bad_request("format must be csv or json");
  }

  Table table;
  std::vector<Skip> skips;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  auto guarded = [&skips](const std::string& point, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      skips.push_back({point, e.what()});
      std::cerr << "skipped " << point << ": " << e.what() << '\n';
    }
  };

  const std::string& q = req.quantity;
  if (q == "height" || q == "spectrum") {
    const int two_n = require_even_two_n(req);
    table.columns = {"two_n", "n1",       "m",       "exact",
                     "asymptotic", "abs_diff", "rel_diff"};
    for (const int n1 : n1_values(req, 1, 0)) {
      guarded(point_label({{"two_n", two_n}, {"n1", n1}}), [&] {
        ChainGeometry g;
        g.n = two_n / 2;
        g.n1 = n1;
        std::vector<double> exact;
        if (q == "height") {
          exact = height_distribution_exact(g).probabilities;
        } else {
          exact = cut_spectrum(g).weights;
        }
        std::vector<double> gauss;
        try {
          gauss = cut_spectrum_gaussian(g).weights;
        } catch (const std::exception&) {
          gauss.assign(exact.size(),
                       std::numeric_limits<double>::quiet_NaN());
        }
        for (std::size_t m = 0; m < exact.size(); ++m) {
          std::vector<Value> row{static_cast<long long>(two_n),
                                 static_cast<long long>(n1),
                                 static_cast<long long>(m)};
          const double a = m < gauss.size()
                               ? gauss[m]
                               : std::numeric_limits<double>::quiet_NaN();
          push_measurement(row, exact[m], a);
          table.rows.push_back(std::move(row));
        }
      });
    }
  } else if (q == "sz") {
    const int two_n = require_even_two_n(req);
    table.columns = {"two_n", "n1", "exact", "asymptotic", "abs_diff",
                     "rel_diff"};
    std::vector<double> profile;
    guarded(point_label({{"two_n", two_n}}),
            [&] { profile = sz_profile_exact(two_n / 2); });
    if (!profile.empty()) {
      for (const int n1 : n1_values(req, 1, two_n)) {
        guarded(point_label({{"two_n", two_n}, {"n1", n1}}), [&] {
          if (n1 < 1 || n1 > two_n) {
            throw std::domain_error("n1 outside [1, 2n]");
          }
          ChainGeometry g;
          g.n = two_n / 2;
          g.n1 = n1;
          std::vector<Value> row{static_cast<long long>(two_n),
                                 static_cast<long long>(n1)};
          push_measurement(row, profile[static_cast<std::size_t>(n1 - 1)],
                           sz_asymptotic(g));
          table.rows.push_back(std::move(row));
        });
      }
    }
  } else if (q == "two_point" || q == "szsz") {
    const int two_n = require_even_two_n(req);
    table.columns = {"two_n", "n1", "n2", "exact", "asymptotic", "abs_diff",
                     "rel_diff"};
    std::vector<std::pair<int, int>> pairs;
    if (req.l_range.is_set()) {
      for (const int L : req.l_range.values()) {
        std::vector<int> firsts;
        if (req.n1 > 0 || req.n1_range.is_set()) {
          firsts = n1_values(req, 1, 0);
        } else {
          firsts = {(two_n - L) / 2};  // centered block
        }
        for (const int n1 : firsts) pairs.emplace_back(n1, n1 + L);
      }
    } else if (req.n1 > 0 && req.n2 > 0) {
      pairs.emplace_back(req.n1, req.n2);
    } else {
      bad_request("quantity '" + q +
                  "' needs --L-range (optionally with --n1/--n1-range) or "
                  "both --n1 and --n2");
    }
    for (const auto& [n1, n2] : pairs) {
      guarded(point_label({{"two_n", two_n}, {"n1", n1}, {"n2", n2}}), [&] {
        ChainGeometry g;
        g.n = two_n / 2;
        g.n1 = n1;
        g.n2 = n2;
        std::vector<Value> row{static_cast<long long>(two_n),
                               static_cast<long long>(n1),
                               static_cast<long long>(n2)};
        if (q == "two_point") {
          push_measurement(row, two_point_height_exact(g),
                           two_point_height_asymptotic(g.n, n2 - n1));
        } else {
          // The leading-order asymptotic spin correlator vanishes.
          push_measurement(row, szsz_exact(g), 0.0);
        }
        table.rows.push_back(std::move(row));
      });
    }
  } else if (q == "cut_entropy") {
    const int two_n = require_even_two_n(req);
    table.columns = {"two_n", "n1", "exact", "asymptotic", "abs_diff",
                     "rel_diff"};
    for (const int n1 : n1_values(req, 1, two_n - 1)) {
      guarded(point_label({{"two_n", two_n}, {"n1", n1}}), [&] {
        ChainGeometry g;
        g.n = two_n / 2;
        g.n1 = n1;
        const EntropyReport rep = cut_entropy(g);
        std::vector<Value> row{static_cast<long long>(two_n),
                               static_cast<long long>(n1)};
        push_measurement(row, rep.exact_nats, rep.asymptotic_nats);
        table.rows.push_back(std::move(row));
      });
    }
  } else if (q == "cut_renyi") {
    const int two_n = require_even_two_n(req);
    const auto kappas = require_kappas(req);
    table.columns = {"two_n",      "n1",       "kappa", "exact",
                     "asymptotic", "abs_diff", "rel_diff"};
    for (const int n1 : n1_values(req, 1, two_n - 1)) {
      for (const double kappa : kappas) {
        guarded(point_label({{"two_n", two_n}, {"n1", n1}}) +
                    ",kappa=" + format_real(kappa),
                [&] {
                  ChainGeometry g;
                  g.n = two_n / 2;
                  g.n1 = n1;
                  const EntropyReport rep = cut_renyi(g, kappa);
                  std::vector<Value> row{static_cast<long long>(two_n),
                                         static_cast<long long>(n1), kappa};
                  push_measurement(row, rep.exact_nats, rep.asymptotic_nats);
                  table.rows.push_back(std::move(row));
                });
      }
    }
  } else if (q == "block_entropy") {
    if (!req.l_range.is_set()) bad_request("--L-range is required");
    table.columns = {"L", "exact", "asymptotic", "abs_diff", "rel_diff"};
    for (const int L : req.l_range.values()) {
      guarded(point_label({{"L", L}}), [&] {
        const EntropyReport rep = block_entropy(L);
        std::vector<Value> row{static_cast<long long>(L)};
        push_measurement(row, rep.exact_nats, rep.asymptotic_nats);
        table.rows.push_back(std::move(row));
      });
    }
  } else if (q == "block_renyi") {
    if (!req.l_range.is_set()) bad_request("--L-range is required");
    const auto kappas = require_kappas(req);
    table.columns = {"L", "kappa", "exact", "asymptotic", "abs_diff",
                     "rel_diff"};
    for (const int L : req.l_range.values()) {
      for (const double kappa : kappas) {
        guarded(point_label({{"L", L}}) + ",kappa=" + format_real(kappa),
                [&] {
                  const EntropyReport rep = block_renyi(L, kappa);
                  std::vector<Value> row{static_cast<long long>(L), kappa};
                  push_measurement(row, rep.exact_nats, rep.asymptotic_nats);
                  table.rows.push_back(std::move(row));
                });
      }
    }
  } else if (q == "gap") {
    std::vector<int> sizes;
    if (req.two_n_range.is_set()) {
      sizes = req.two_n_range.values();
    } else if (req.two_n >= 1) {
      sizes = {req.two_n};
    } else {
      bad_request("--two-n or --two-n-range is required for quantity 'gap'");
    }
    table.columns = {"two_n", "exact", "asymptotic", "abs_diff", "rel_diff"};
    std::vector<int> done_sizes;
    std::vector<double> gaps;
    for (const int size : sizes) {
      guarded(point_label({{"two_n", size}}), [&] {
        gaps.push_back(spectral_gap(size));
        done_sizes.push_back(size);
      });
    }
    double intercept = 0.0;
    double exponent = 0.0;
    bool have_fit = false;
    if (done_sizes.size() >= 4) {
      const GapFit fit = fit_gap_exponent(done_sizes, gaps);
      exponent = fit.exponent;
      double sx = 0.0;
      double sy = 0.0;
      for (std::size_t i = 0; i < done_sizes.size(); ++i) {
        sx += std::log(done_sizes[i] / 2.0);
        sy += std::log(gaps[i]);
      }
      intercept = (sy + exponent * sx) / static_cast<double>(done_sizes.size());
      have_fit = true;
      extra["fit"] = {{"exponent", fit.exponent},
                      {"residual", fit.residual},
                      {"sizes", fit.sizes}};
    }
    for (std::size_t i = 0; i < done_sizes.size(); ++i) {
      std::vector<Value> row{static_cast<long long>(done_sizes[i])};
      const double model =
          have_fit ? std::exp(intercept -
                              exponent * std::log(done_sizes[i] / 2.0))
                   : std::numeric_limits<double>::quiet_NaN();
      push_measurement(row, gaps[i], model);
      table.rows.push_back(std::move(row));
    }
  } else if (q == "thermal") {
    const int two_n = require_two_n(req);
    if (req.n2 < 1) bad_request("--n2 is required for quantity 'thermal'");
    if (!req.beta_set) bad_request("--beta is required for quantity 'thermal'");
    table.columns = {"two_n",      "n1",       "n2", "beta", "exact",
                     "asymptotic", "abs_diff", "rel_diff"};
    for (const int n1 : n1_values(req, 1, 0)) {
      guarded(point_label({{"two_n", two_n}, {"n1", n1}, {"n2", req.n2}}),
              [&] {
                const double exact =
                    thermal_correlator(two_n, n1, req.n2, req.beta);
                const double ground = ground_szsz(two_n, n1, req.n2);
                std::vector<Value> row{static_cast<long long>(two_n),
                                       static_cast<long long>(n1),
                                       static_cast<long long>(req.n2),
                                       req.beta};
                push_measurement(row, exact, ground);
                table.rows.push_back(std::move(row));
              });
    }
  } else {
    bad_request("unknown quantity '" + q + "'");
  }

  std::ostringstream data;
  if (req.format == "csv") {
    write_csv(data, table);
  } else {
    data << table_json(table).dump(2) << '\n';
  }

  if (req.out.empty()) {
    std::cout << data.str();
    return 0;
  }
  {
    std::ofstream f(req.out, std::ios::binary);
    if (!f) {
      throw std::runtime_error("run_sweep: cannot open output file " +
                               req.out);
    }
    f << data.str();
  }
  nlohmann::ordered_json meta;
  meta["tool"] = "motzkin_cli";
  meta["version"] = kToolVersion;
  nlohmann::ordered_json r;
  r["quantity"] = req.quantity;
  r["two_n"] = req.two_n;
  r["two_n_range"] = {req.two_n_range.begin, req.two_n_range.end,
                      req.two_n_range.step};
  r["n1_range"] = {req.n1_range.begin, req.n1_range.end, req.n1_range.step};
  r["l_range"] = {req.l_range.begin, req.l_range.end, req.l_range.step};
  r["n1"] = req.n1;
  r["n2"] = req.n2;
  r["kappas"] = req.kappas;
  r["beta"] = req.beta_set ? nlohmann::ordered_json(req.beta)
                           : nlohmann::ordered_json(nullptr);
  r["format"] = req.format;
  meta["request"] = std::move(r);
  meta["columns"] = table.columns;
  meta["row_count"] = table.rows.size();
  nlohmann::ordered_json sk = nlohmann::ordered_json::array();
  for (const auto& s : skips) {
    sk.push_back({{"point", s.point}, {"reason", s.reason}});
  }
  meta["skipped"] = std::move(sk);
  meta["extra"] = std::move(extra);
  std::ofstream mf(req.out + ".meta.json", std::ios::binary);
  if (!mf) {
    throw std::runtime_error("run_sweep: cannot open sidecar for " + req.out);
  }
  mf << meta.dump(2) << '\n';
  return 0;
}

}  // namespace motzkin
