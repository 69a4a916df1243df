#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dickson/all.hpp"

namespace dickson::cli {

using nlohmann::json;

enum class Format { json, csv };

enum ExitCode : int { kPass = 0, kVerifyFailure = 1, kDomainError = 2, kNumericalError = 3 };

struct CommandOutput {
  json record;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = kPass;
};

/// A numeric flag: rational literals ("3", "-7/3") stay exact, anything with a
/// decimal point or exponent is read as a double.
struct Number {
  std::string text;
  double value = 0.0;
  std::optional<Rational> exact;
};

inline Number parse_number(const std::string& text) {
  Number out;
  out.text = text;
  const bool literal = text.find_first_of(".eEnN") == std::string::npos;
  try {
    if (literal) {
      out.exact = parse_rational(text);
      out.value = to_double(*out.exact);
    } else {
      std::size_t used = 0;
      out.value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    }
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("cannot parse number '" + text + "'");
  }
  return out;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline std::string complex_csv(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
}

inline json base_record(const std::string& command, json params) {
  return json{{"schema", 1}, {"command", command}, {"params", std::move(params)}, {"diagnostics", json::object()}};
}

inline std::string render(const CommandOutput& out, Format format) {
  if (format == Format::json) return out.record.dump(2) + "\n";
  std::ostringstream os;
  for (std::size_t i = 0; i < out.csv_header.size(); ++i) os << (i ? "," : "") << out.csv_header[i];
  os << "\n";
  for (const auto& row : out.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

struct EvalArgs {
  unsigned n = 0;
  std::string k = "0", a = "1", x_re = "0", x_im = "0";
  std::string method = "all";
};

inline CommandOutput cmd_eval(const EvalArgs& args) {
  const Number k = parse_number(args.k), a = parse_number(args.a);
  const Number xr = parse_number(args.x_re), xi = parse_number(args.x_im);
  const bool exact = k.exact && a.exact && xr.exact && xi.exact && *xi.exact == 0;
  const DicksonParams<double> p(args.n, k.value, a.value);
  const Complex x(xr.value, xi.value);

  static const std::vector<std::string> methods = {"direct", "recurrence", "parity", "closed", "hyper"};
  std::vector<std::string> chosen;
  if (args.method == "all") {
    chosen = methods;
  } else if (std::find(methods.begin(), methods.end(), args.method) != methods.end()) {
    chosen = {args.method};
  } else {
    throw DomainError("unknown method '" + args.method + "'");
  }

  CommandOutput out;
  out.record = base_record("eval", json{{"n", args.n}, {"k", k.text}, {"a", a.text}, {"x_re", xr.text},
                                        {"x_im", xi.text}, {"method", args.method}, {"exact_mode", exact}});
  out.csv_header = {"method", "value", "exact"};
  json values = json::object();
  std::vector<Complex> computed;
  for (const auto& m : chosen) {
    json entry;
    try {
      Complex v;
      std::optional<Rational> ev;
      if (m == "direct" || m == "recurrence" || m == "parity") {
        if (exact) {
          const DicksonParams<Rational> pe(args.n, *k.exact, *a.exact);
          ev = m == "direct"       ? dickson_eval_direct(pe, *xr.exact)
               : m == "recurrence" ? dickson_eval_recurrence(pe, *xr.exact)
                                   : dickson_eval_parity(pe, *xr.exact);
          v = to_double(*ev);
        } else {
          v = m == "direct" ? dickson_eval_direct(p, x)
                            : (m == "recurrence" ? dickson_eval_recurrence(p, x) : dickson_eval_parity(p, x));
        }
      } else if (m == "closed") {
        v = dickson_eval_closed(p, x);
      } else {
        v = dickson_eval_hypergeometric(p, x);
      }
      entry = complex_json(v);
      if (ev) entry["exact"] = to_string(*ev);
      computed.push_back(v);
      out.csv_rows.push_back({m, complex_csv(v), ev ? to_string(*ev) : ""});
    } catch (const DomainError& e) {
      if (chosen.size() == 1) throw;
      entry = json{{"error", e.what()}};
      out.csv_rows.push_back({m, "error", e.what()});
    }
    values[m] = entry;
  }
  out.record["results"] = json{{"values", values}};
  if (chosen.size() > 1) {
    double worst = 0.0;
    for (std::size_t i = 0; i < computed.size(); ++i)
      for (std::size_t j = i + 1; j < computed.size(); ++j)
        worst = std::max(worst, path_deviation(computed[i], computed[j]));
    out.record["results"]["max_rel_deviation"] = worst;
  }
  return out;
}

struct CoeffsArgs {
  unsigned n = 0;
  std::string k = "0", a = "1";
};

inline CommandOutput cmd_coeffs(const CoeffsArgs& args) {
  const Number k = parse_number(args.k), a = parse_number(args.a);
  const bool exact = k.exact && a.exact;
  CommandOutput out;
  out.record = base_record("coeffs", json{{"n", args.n}, {"k", k.text}, {"a", a.text}, {"exact_mode", exact}});
  out.csv_header = {"power", "coefficient"};
  json rows = json::array();
  if (exact) {
    const Poly<Rational> c = dickson_coeffs(DicksonParams<Rational>(args.n, *k.exact, *a.exact));
    for (std::size_t i = 0; i < c.size(); ++i) {
      rows.push_back(json{{"power", i}, {"value", to_double(c[i])}, {"exact", to_string(c[i])}});
      out.csv_rows.push_back({std::to_string(i), to_string(c[i])});
    }
  } else {
    const Poly<double> c = dickson_coeffs(DicksonParams<double>(args.n, k.value, a.value));
    for (std::size_t i = 0; i < c.size(); ++i) {
      rows.push_back(json{{"power", i}, {"value", c[i]}});
      out.csv_rows.push_back({std::to_string(i), format_double(c[i])});
    }
  }
  out.record["results"] = json{{"coefficients", rows}};
  return out;
}

struct MomentsArgs {
  std::string k = "1", a = "1";
  unsigned min_order = 0;
  unsigned max_order = 8;
  std::string method = "closed";
};

inline CommandOutput cmd_moments(const MomentsArgs& args) {
  const Number k = parse_number(args.k), a = parse_number(args.a);
  if (!(a.value > 0.0)) throw DomainError("moments: a must be positive");
  if (args.method != "closed" && args.method != "recurrence" && args.method != "both")
    throw DomainError("unknown method '" + args.method + "'");
  if (k.value == 2.0 && (args.min_order == 0 || args.method != "closed"))
    throw DomainError("moments at k = 2: mu_0 = 1/(2-k) is undefined; use --method closed --min-order 2");
  const bool exact = k.exact && a.exact;
  const bool both = args.method == "both";

  CommandOutput out;
  out.record = base_record("moments", json{{"k", k.text}, {"a", a.text}, {"min_order", args.min_order},
                                           {"max_order", args.max_order}, {"method", args.method},
                                           {"exact_mode", exact}});
  out.csv_header = {"order", "value"};
  if (both) {
    out.csv_header.push_back("value_alt");
    out.csv_header.push_back("abs_diff");
  }
  json rows = json::array();
  auto emit = [&](unsigned order, const auto& v, const auto* alt) {
    json row{{"order", order}, {"value", to_double(v)}};
    std::vector<std::string> csv{std::to_string(order)};
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
      row["exact"] = to_string(v);
      csv.push_back(to_string(v));
    } else {
      csv.push_back(format_double(v));
    }
    if (alt) {
      using std::abs;
      const auto diff = abs(v - *alt);
      row["value_alt"] = to_double(*alt);
      row["abs_diff"] = to_double(diff);
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) {
        row["exact_alt"] = to_string(*alt);
        csv.push_back(to_string(*alt));
        csv.push_back(to_string(diff));
      } else {
        csv.push_back(format_double(*alt));
        csv.push_back(format_double(diff));
      }
    }
    rows.push_back(row);
    out.csv_rows.push_back(csv);
  };
  auto run = [&](const auto& kk, const auto& aa) {
    using T = std::decay_t<decltype(kk)>;
    std::optional<MomentSeq<T>> seq;
    if (args.method != "closed") seq.emplace(kk, aa);
    for (unsigned order = args.min_order; order <= args.max_order; ++order) {
      if (args.method == "recurrence") {
        const T v = (*seq)(order);
        emit(order, v, static_cast<const T*>(nullptr));
      } else if (both) {
        const T v = moments_closed(kk, aa, order);
        const T alt = (*seq)(order);
        emit(order, v, &alt);
      } else {
        const T v = moments_closed(kk, aa, order);
        emit(order, v, static_cast<const T*>(nullptr));
      }
    }
  };
  if (exact) {
    run(*k.exact, *a.exact);
  } else {
    run(k.value, a.value);
  }
  out.record["results"] = json{{"moments", rows}};
  return out;
}

struct GramArgs {
  std::string k = "1", a = "1";
  unsigned nmax = 6;
  double tol = 1e-8;
};

inline CommandOutput cmd_gram(const GramArgs& args) {
  const Number k = parse_number(args.k), a = parse_number(args.a);
  const GramResult g = gram_matrix(k.value, a.value, args.nmax);
  CommandOutput out;
  out.record = base_record("gram", json{{"k", k.text}, {"a", a.text}, {"nmax", args.nmax}, {"tol", args.tol}});
  out.record["results"] = json{{"matrix", g.g},
                               {"expected_diagonal", g.expected_diagonal},
                               {"max_deviation", g.max_deviation},
                               {"passed", g.max_deviation <= args.tol}};
  out.record["diagnostics"] = json{{"quadrature_levels", g.max_levels_used}};
  out.csv_header = {"n", "m", "value", "expected"};
  for (unsigned n = 0; n <= args.nmax; ++n)
    for (unsigned m = 0; m <= args.nmax; ++m)
      out.csv_rows.push_back({std::to_string(n), std::to_string(m), format_double(g.g[n][m]),
                              format_double(n == m ? g.expected_diagonal[n] : 0.0)});
  out.exit_code = g.max_deviation <= args.tol ? kPass : kVerifyFailure;
  return out;
}

struct ZerosArgs {
  unsigned n = 2;
  std::string k = "0", a = "1";
  std::string mode = "numeric";
};

inline CommandOutput cmd_zeros(const ZerosArgs& args) {
  const Number k = parse_number(args.k), a = parse_number(args.a);
  ZeroMode mode;
  if (args.mode == "closed") {
    mode = ZeroMode::closed;
  } else if (args.mode == "numeric") {
    mode = ZeroMode::numeric;
  } else {
    throw DomainError("unknown mode '" + args.mode + "'");
  }
  const auto roots = dickson_zeros(DicksonParams<double>(args.n, k.value, a.value), mode);
  CommandOutput out;
  out.record = base_record("zeros", json{{"n", args.n}, {"k", k.text}, {"a", a.text}, {"mode", args.mode}});
  out.csv_header = {"re", "im", "multiplicity"};
  json rows = json::array();
  for (const auto& r : roots) {
    rows.push_back(json{{"re", r.value.real()}, {"im", r.value.imag()}, {"multiplicity", r.multiplicity}});
    out.csv_rows.push_back({format_double(r.value.real()), format_double(r.value.imag()), std::to_string(r.multiplicity)});
  }
  out.record["results"] = json{{"zeros", rows}};
  return out;
}

struct StieltjesArgs {
  std::string k = "1", a = "0.25", z_re = "2", z_im = "0";
};

inline CommandOutput cmd_stieltjes(const StieltjesArgs& args) {
  const Number k = parse_number(args.k), a = parse_number(args.a);
  const Complex z(parse_number(args.z_re).value, parse_number(args.z_im).value);
  const Complex v = stieltjes_dickson(z, k.value, a.value);
  CommandOutput out;
  out.record = base_record("stieltjes", json{{"k", k.text}, {"a", a.text}, {"z_re", args.z_re}, {"z_im", args.z_im}});
  out.record["results"] = json{{"value", complex_json(v)}, {"chi", chi(k.value)}};
  out.csv_header = {"re", "im"};
  out.csv_rows.push_back({format_double(v.real()), format_double(v.imag())});
  return out;
}

inline CommandOutput cmd_verify(const std::string& suite_name) {
  Suite suite;
  if (suite_name == "fast") {
    suite = Suite::fast;
  } else if (suite_name == "all") {
    suite = Suite::all;
  } else {
    throw DomainError("unknown suite '" + suite_name + "'");
  }
  const auto checks = run_suite(suite);
  CommandOutput out;
  out.record = base_record("verify", json{{"suite", suite_name}});
  out.csv_header = {"check", "status", "measured", "tolerance"};
  json rows = json::array();
  bool all_passed = true;
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed;
    json row{{"name", c.name}, {"passed", c.passed}, {"measured", c.measured}, {"tolerance", c.tolerance}};
    if (!c.detail.empty()) row["detail"] = c.detail;
    rows.push_back(row);
    out.csv_rows.push_back({c.name, c.passed ? "PASS" : "FAIL", format_double(c.measured), format_double(c.tolerance)});
  }
  out.record["results"] = json{{"checks", rows}, {"passed", all_passed}};
  out.exit_code = all_passed ? kPass : kVerifyFailure;
  return out;
}

}  // namespace dickson::cli
