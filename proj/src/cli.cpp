#include "pentadgf/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentadgf/dgf.hpp"
#include "pentadgf/perron.hpp"
#include "pentadgf/qfunc.hpp"
#include "pentadgf/specialnum.hpp"
#include "pentadgf/zeros.hpp"

namespace pentadgf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Row {
  std::string input;  // CSV "input" column
  std::string value_re, value_im;
  double err = 0.0;
  std::string method;
};

struct Output {
  std::string command;
  json record = json::object();
  std::vector<Row> rows;
  bool flagged = false;
};

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text, const char* what) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  while (b < e && *b == ' ') ++b;
  if (b < e && *b == '+') ++b;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e)
    throw DomainError(std::string("cannot parse ") + what + ": '" + text + "'");
  return v;
}

Complex parse_complex(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, what), 0.0};
  return {parse_double(text.substr(0, comma), what), parse_double(text.substr(comma + 1), what)};
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string complex_text(Complex z) { return shortest(z.real()) + "," + shortest(z.imag()); }

void put_result(Output& o, const std::string& input, const EvalResult& r) {
  o.record["value"] = complex_json(r.value);
  o.record["err_estimate"] = r.err_estimate;
  o.record["method"] = std::string(to_string(r.method));
  o.record["evaluations"] = r.evaluations;
  if (r.ill_conditioned) o.flagged = true;
  o.rows.push_back({input, shortest(r.value.real()), shortest(r.value.imag()), r.err_estimate,
                    std::string(to_string(r.method))});
}

std::optional<Method> parse_method(const std::string& m) {
  if (m == "auto") return std::nullopt;
  if (m == "integral") return Method::Integral;
  if (m == "series") return Method::Series;
  if (m == "mellin") return Method::Mellin;
  if (m == "explicit") return Method::Explicit;
  throw DomainError("unknown method '" + m + "'");
}

json algebraic_json(const AlgebraicValue& v) {
  return json{{"rational", v.rat.get_str()}, {"sqrt3", v.root3.get_str()}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_json(std::ostream& out, const Output& o, double elapsed_ms) {
  json rec = json::object();
  rec["command"] = o.command;
  for (auto& [k, v] : o.record.items()) rec[k] = v;
  rec["elapsed_ms"] = elapsed_ms;
  if (o.flagged) rec["flagged"] = true;
  out << rec.dump() << "\n";
}

void write_csv(std::ostream& out, const Output& o) {
  out << "command,input,value_re,value_im,err,method\n";
  for (const Row& r : o.rows)
    out << csv_escape(o.command) << "," << csv_escape(r.input) << "," << csv_escape(r.value_re)
        << "," << csv_escape(r.value_im) << "," << shortest(r.err) << "," << csv_escape(r.method)
        << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pentagonal-number Dirichlet generating function toolkit", "pentadgf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool deterministic = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--deterministic", deterministic, "Report elapsed_ms as 0");

  std::string s_text, method = "auto", q_text, tau_text, what;
  double tol = kDefaultTol, x = 0.0, imag_max = 0.0;
  unsigned k = 0, n = 0;
  bool exact = false, margins = false;

  auto* eval = app.add_subcommand("eval", "Evaluate D*(s)");
  eval->add_option("--s", s_text, "s as RE,IM")->required();
  eval->add_option("--method", method)
      ->check(CLI::IsMember({"integral", "series", "mellin", "explicit", "auto"}));
  eval->add_option("--tol", tol);

  auto* dk = app.add_subcommand("dk", "Closed form of D(k) at a positive integer");
  dk->add_option("--k", k)->required()->check(CLI::Range(1u, 100000u));
  dk->add_flag("--exact", exact, "Include exact coefficients per power of pi");

  auto* zeros = app.add_subcommand("zeros", "Zeros of D* in 0 <= Re s <= 1");
  zeros->add_option("--imag-max", imag_max)->required();
  zeros->add_flag("--margins", margins, "Also scan -0.2 < Re s < 0 and 1 < Re s < 1.2");

  auto* psum = app.add_subcommand("partial-sum", "S(x) = sum_{1<=n<x} a_n");
  psum->add_option("--x", x)->required();

  std::string qmethod = "series";
  auto* phi = app.add_subcommand("phi", "Euler function phi(q)");
  phi->add_option("--q", q_text, "q as RE[,IM]")->required();
  phi->add_option("--method", qmethod)->check(CLI::IsMember({"series", "hankel", "product"}));

  std::string emethod = "series";
  auto* eta = app.add_subcommand("eta", "Dedekind eta(tau)");
  eta->add_option("--tau", tau_text, "tau as RE,IM")->required();
  eta->add_option("--method", emethod)->check(CLI::IsMember({"series", "hankel"}));

  auto* table = app.add_subcommand("table", "Sequence table for indices 0..N (a: 1..N)");
  table->add_option("--what", what)->required()->check(CLI::IsMember({"a", "bernoulli", "gstar"}));
  table->add_option("--n", n)->required()->check(CLI::Range(0u, 100000u));

  std::string asym_text;
  auto* asym = app.add_subcommand("asymptotic", "Leading behaviour of D*(s) as s -> -inf");
  asym->add_option("--s", asym_text)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  int code = kOk;
  try {
    if (eval->parsed()) {
      o.command = "eval";
      const Complex s = parse_complex(s_text, "--s");
      o.record["inputs"] = json{{"s", complex_json(s)}, {"method", method}, {"tol", tol}};
      try {
        put_result(o, complex_text(s), evaluate(s, parse_method(method), tol));
      } catch (const ConvergenceError& e) {
        err << "warning: " << e.what() << "\n";
        put_result(o, complex_text(s), e.best());
        o.flagged = true;
      }
    } else if (dk->parsed()) {
      o.command = "dk";
      o.record["inputs"] = json{{"k", k}};
      const ExactDk d = d_explicit(k);
      put_result(o, std::to_string(k),
                 {d.decimal, std::numeric_limits<double>::epsilon() * std::abs(d.decimal),
                  Method::Explicit, 1});
      if (exact) {
        json coeffs = json::array();
        for (unsigned j = 0; j < d.pi_coeffs.size(); ++j) {
          json c = algebraic_json(d.pi_coeffs[j]);
          c["power"] = j;
          coeffs.push_back(c);
        }
        o.record["pi_coeffs"] = coeffs;
        o.record["symbolic"] = d.symbolic();
      }
    } else if (zeros->parsed()) {
      o.command = "zeros";
      o.record["inputs"] = json{{"imag_max", imag_max}};
      auto list = find_zeros(imag_max);
      if (margins) {
        auto extra = find_margin_zeros(imag_max);
        list.insert(list.end(), extra.begin(), extra.end());
      }
      json arr = json::array();
      for (const ZeroRecord& z : list) {
        json rec{{"location", complex_json(z.location)},
                 {"residual", z.residual},
                 {"winding_verified", z.winding_verified},
                 {"converged", z.converged},
                 {"method", std::string(to_string(z.method))}};
        if (!std::isnan(z.series_residual)) rec["series_residual"] = z.series_residual;
        const bool in_strip = z.location.real() >= 0.0 && z.location.real() <= 1.0;
        rec["in_strip"] = in_strip;
        arr.push_back(rec);
        if (!z.converged) o.flagged = true;
        o.rows.push_back({shortest(imag_max), shortest(z.location.real()),
                          shortest(z.location.imag()), z.residual,
                          std::string(to_string(z.method))});
      }
      o.record["count"] = list.size();
      o.record["zeros"] = arr;
    } else if (psum->parsed()) {
      o.command = "partial-sum";
      o.record["inputs"] = json{{"x", x}};
      const PartialSumResult r = partial_sum(x);
      o.record["value"] = json{{"re", r.value}, {"im", 0}};
      o.record["err_estimate"] = 0.0;
      o.record["method"] = "residue-count";
      o.record["k_min"] = r.k_min;
      o.record["z_minus"] = r.z_minus;
      o.rows.push_back({shortest(x), std::to_string(r.value), "0", 0.0, "residue-count"});
    } else if (phi->parsed()) {
      o.command = "phi";
      const QPoint q(parse_complex(q_text, "--q"));
      o.record["inputs"] = json{{"q", complex_json(q.value())}, {"method", qmethod}};
      EvalResult r;
      if (qmethod == "series") {
        r = phi_series(q);
      } else if (qmethod == "hankel") {
        r = phi_hankel(q);
      } else {
        r = {phi_product_oracle(q), 1e-16, Method::Product, 0};
      }
      put_result(o, complex_text(q.value()), r);
    } else if (eta->parsed()) {
      o.command = "eta";
      const TauPoint t(parse_complex(tau_text, "--tau"));
      o.record["inputs"] = json{{"tau", complex_json(t.value())}, {"method", emethod}};
      put_result(o, complex_text(t.value()), emethod == "series" ? eta_series(t) : eta_hankel(t));
    } else if (table->parsed()) {
      o.command = "table";
      o.record["inputs"] = json{{"what", what}, {"n", n}};
      json arr = json::array();
      if (what == "a") {
        const CoeffTable t = coeff_table(n);
        for (unsigned i = 1; i <= n; ++i) {
          const int v = t[i];
          arr.push_back(json{{"n", i}, {"value", v}});
          o.rows.push_back({std::to_string(i), std::to_string(v), "0", 0.0, "exact"});
        }
      } else {
        for (unsigned i = 0; i <= n; ++i) {
          const Rational v = what == "bernoulli" ? bernoulli(i) : glaisher_gstar(i);
          arr.push_back(json{{"n", i}, {"value", v.get_str()}});
          o.rows.push_back({std::to_string(i), v.get_str(), "0", 0.0, "exact"});
        }
      }
      o.record["rows"] = arr;
    } else if (asym->parsed()) {
      o.command = "asymptotic";
      const double s = parse_double(asym_text, "--s");
      o.record["inputs"] = json{{"s", s}};
      const AsymptoticForms f = asymptotic_approx(s);
      o.record["value"] = json{{"re", f.zeta_form}, {"im", 0.0}};
      o.record["gamma_form"] = f.gamma_form;
      o.record["err_estimate"] = std::abs(f.zeta_form - f.gamma_form);
      o.record["method"] = "asymptotic";
      o.rows.push_back({shortest(s), shortest(f.zeta_form), "0",
                        std::abs(f.zeta_form - f.gamma_form), "asymptotic"});
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    o.record["value"] = complex_json(e.best().value);
    o.record["err_estimate"] = e.best().err_estimate;
    o.flagged = true;
  } catch (const BoundaryError& e) {
    err << "error: " << e.what() << "\n";
    o.flagged = true;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFlagged;
  }
  if (o.flagged) code = kFlagged;

  const double elapsed =
      deterministic ? 0.0
                    : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                start)
                          .count();
  if (format == "csv")
    write_csv(out, o);
  else
    write_json(out, o, elapsed);
  return code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace pentadgf::cli
