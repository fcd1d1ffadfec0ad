// Command-line front end: dimensions, polynomials, decompositions, Bernoulli
// data, curve evaluations, verification batteries, certificates and tables.
//
// Exit status: 0 when every requested check passes, 1 on a check failure,
// 2 on a usage or validation error. Errors are reported on stderr as a JSON
// record {"error": {"kind", "message", "exit_code"}}.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/bernoulli.hpp"
#include "skein/certify.hpp"
#include "skein/curves.hpp"
#include "skein/fusion.hpp"
#include "skein/verify.hpp"
#include "skein/verlinde.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace skein;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

/// Environment variable naming the directory for relative --output paths.
constexpr const char* kOutputDirEnv = "SKEINBOUND_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int genus = -1;
  int p = -1;
  int color = -1;
  std::string kind = "even";
  std::string format = "text";
  std::string suite = "all";
  std::string output;
  int max_index = 10;
  bool polynomials = false;
  bool embed = false;
  bool literal_denominator = false;
  int genus_min = 1;
  int genus_max = 3;
  int p_min = 3;
  int p_max = 11;
};

struct Emission {
  std::string text;
  int exit_code = kExitPass;
};

void require(bool cond, const std::string& message) {
  if (!cond) throw UsageError(message);
}

void require_genus(const RunConfig& cfg, int min_genus) {
  require(cfg.genus >= min_genus,
          "--genus is required and must be >= " + std::to_string(min_genus));
}

void require_level(int p) {
  require(p >= 3 && p % 2 == 1, "--p is required and must be odd and >= 3");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Emission run_dim(const RunConfig& cfg) {
  require_genus(cfg, 1);
  require_level(cfg.p);
  require(cfg.color >= 0 && cfg.color <= cfg.p - 2,
          "--color must lie in 0.." + std::to_string(cfg.p - 2));
  const Integer dim = dimension(cfg.genus, cfg.p, cfg.color);
  if (cfg.format == "json")
    return {dump({{"genus", cfg.genus}, {"p", cfg.p}, {"color", cfg.color},
                  {"dimension", integer_json(dim)}})};
  if (cfg.format == "csv")
    return {"genus,p,color,dimension\n" + std::to_string(cfg.genus) + "," + std::to_string(cfg.p) +
            "," + std::to_string(cfg.color) + "," + to_string(dim) + "\n"};
  return {to_string(dim) + "\n"};
}

Emission run_poly(const RunConfig& cfg) {
  require_genus(cfg, 1);
  const ColorKind kind = cfg.kind == "odd" ? ColorKind::kOdd : ColorKind::kEven;
  const BivariatePolynomial poly = color_polynomial(cfg.genus, kind);
  if (cfg.format == "json") {
    json terms = json::array();
    for (const auto& [e, c] : poly.terms())
      terms.push_back({{poly.name(0), e.first}, {poly.name(1), e.second}, {"coefficient", c.str()}});
    return {dump({{"genus", cfg.genus},
                  {"kind", to_string(kind)},
                  {"variables", {poly.name(0), poly.name(1)}},
                  {"polynomial", poly.str()},
                  {"terms", terms}})};
  }
  if (cfg.format == "csv") {
    std::string out = poly.name(0) + "_exponent," + poly.name(1) + "_exponent,coefficient\n";
    for (const auto& [e, c] : poly.terms())
      out += std::to_string(e.first) + "," + std::to_string(e.second) + "," + c.str() + "\n";
    return {out};
  }
  return {poly.str() + "\n"};
}

Emission run_decompose(const RunConfig& cfg) {
  require_genus(cfg, 1);
  const ColorKind kind = cfg.kind == "odd" ? ColorKind::kOdd : ColorKind::kEven;
  const VerlindeDecomposition dec = decompose(cfg.genus, kind);
  const std::string var = kind == ColorKind::kEven ? "c" : "s";
  if (cfg.format == "json") {
    json parts = json::array();
    for (const auto& [j, part] : dec.parts)
      parts.push_back({{"exponent", j},
                       {"degree", part.degree().value_or(-1)},
                       {"leading_coefficient", part.leading().str()},
                       {"polynomial", part.str(var)}});
    return {dump({{"genus", cfg.genus}, {"kind", to_string(kind)}, {"parts", parts}})};
  }
  if (cfg.format == "csv") {
    std::string out = "exponent,degree,leading_coefficient,polynomial\n";
    for (const auto& [j, part] : dec.parts)
      out += std::to_string(j) + "," + std::to_string(part.degree().value_or(-1)) + "," +
             part.leading().str() + "," + csv_escape(part.str(var)) + "\n";
    return {out};
  }
  std::ostringstream os;
  for (const auto& [j, part] : dec.parts)
    os << "p^" << j << "  deg " << part.degree().value_or(-1) << "  " << part.str(var) << "\n";
  return {os.str()};
}

Emission run_bernoulli(const RunConfig& cfg) {
  require(cfg.max_index >= 0, "--max must be >= 0");
  const auto n = static_cast<std::size_t>(cfg.max_index);
  const BernoulliTable table = bernoulli_numbers(n);
  if (cfg.format == "json") {
    json numbers = json::array();
    for (std::size_t k = 0; k <= n; ++k) numbers.push_back({{"index", k}, {"value", table[k].str()}});
    json out = {{"numbers", numbers}};
    if (cfg.polynomials) {
      json polys = json::array();
      for (std::size_t k = 0; k <= n; ++k)
        polys.push_back({{"degree", k}, {"polynomial", bernoulli_polynomial(k, table).str()}});
      out["polynomials"] = polys;
    }
    return {dump(out)};
  }
  if (cfg.format == "csv") {
    std::string out = cfg.polynomials ? "index,value,polynomial\n" : "index,value\n";
    for (std::size_t k = 0; k <= n; ++k) {
      out += std::to_string(k) + "," + table[k].str();
      if (cfg.polynomials) out += "," + csv_escape(bernoulli_polynomial(k, table).str());
      out += "\n";
    }
    return {out};
  }
  std::ostringstream os;
  for (std::size_t k = 0; k <= n; ++k) {
    os << "B_" << k << " = " << table[k];
    if (cfg.polynomials) os << "    B_" << k << "(x) = " << bernoulli_polynomial(k, table).str();
    os << "\n";
  }
  return {os.str()};
}

Emission run_eval_curve(const RunConfig& cfg) {
  require_genus(cfg, 1);
  require_level(cfg.p);
  require(cfg.color >= 0, "--color is required and must be >= 0");
  const CyclotomicField field(cfg.p);
  const OddDenominator reading =
      cfg.literal_denominator ? OddDenominator::kLiteral : OddDenominator::kSymmetric;
  CyclotomicElement value = field.zero();
  try {
    value = eval_nonseparating_curve(cfg.genus, cfg.color, field, reading);
  } catch (const VanishingDenominator& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> coeffs;
  for (const auto& c : value.coefficients()) coeffs.push_back(c.str());

  struct Embedded {
    int k;
    double re, im;
  };
  std::vector<Embedded> embedded;
  if (cfg.embed)
    for (int k = 1; k < 2 * cfg.p; ++k)
      if (std::gcd(k, 2 * cfg.p) == 1) {
        const auto z = value.embed(k);
        embedded.push_back({k, z.real(), z.imag()});
      }

  if (cfg.format == "json") {
    json out = {{"genus", cfg.genus},
                {"p", cfg.p},
                {"color", cfg.color},
                {"denominator", cfg.literal_denominator ? "literal" : "symmetric"},
                {"coefficients", coeffs},
                {"element", value.str()}};
    if (cfg.embed) {
      json emb = json::array();
      for (const auto& e : embedded) emb.push_back({{"k", e.k}, {"re", e.re}, {"im", e.im}});
      out["embedding"] = emb;
    }
    return {dump(out)};
  }
  if (cfg.format == "csv") {
    std::string out = "power,coefficient\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) out += std::to_string(k) + "," + coeffs[k] + "\n";
    if (cfg.embed) {
      out += "k,re,im\n";
      for (const auto& e : embedded) {
        std::ostringstream os;
        os.precision(17);
        os << e.k << "," << e.re << "," << e.im << "\n";
        out += os.str();
      }
    }
    return {out};
  }
  std::ostringstream os;
  os << value.str() << "\n";
  os << "[";
  for (std::size_t k = 0; k < coeffs.size(); ++k) os << (k ? ", " : "") << coeffs[k];
  os << "]\n";
  if (cfg.embed) {
    os.precision(17);
    for (const auto& e : embedded)
      os << "A = exp(i*pi*" << e.k << "/" << cfg.p << "): " << e.re << " + " << e.im << "i\n";
  }
  return {os.str()};
}

Emission run_verify(const RunConfig& cfg) {
  const std::vector<SuiteReport> reports = run_suite(cfg.suite);
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();
  const int code = all_passed ? kExitPass : kExitCheckFailure;

  if (cfg.format == "json") {
    json suites = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    }
    return {dump({{"passed", all_passed}, {"suites", suites}}), code};
  }
  if (cfg.format == "csv") {
    std::string out = "suite,check,passed,detail\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        out += r.suite + "," + c.name + "," + (c.passed ? "true" : "false") + "," +
               csv_escape(c.detail) + "\n";
    return {out, code};
  }
  std::ostringstream os;
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << (c.passed ? "[PASS] " : "[FAIL] ") << r.suite << "/" << c.name << ": " << c.detail << "\n";
  os << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
  return {os.str(), code};
}

Emission run_certify(const RunConfig& cfg) {
  require_genus(cfg, 1);
  const Certificate cert = build_certificate(cfg.genus);
  const int code = cert.valid ? kExitPass : kExitCheckFailure;
  if (cfg.format == "json") return {dump(to_json(cert)), code};
  if (cfg.format == "csv") {
    std::string out = "key,value\n";
    out += "genus," + std::to_string(cert.genus) + "\n";
    out += "lower_bound," + to_string(cert.lower_bound) + "\n";
    out += std::string("valid,") + (cert.valid ? "true" : "false") + "\n";
    out += "class_00," + to_string(cert.dim_00) + "\n";
    out += "class_01," + to_string(cert.dim_01) + "\n";
    out += "other_classes.count," + to_string(cert.other_class_count) + "\n";
    out += "other_classes.each_at_least," + to_string(cert.other_each) + "\n";
    for (const auto& c : cert.checks)
      out += "check." + c.name + "," + (c.passed ? "true" : "false") + "\n";
    return {out, code};
  }
  std::ostringstream os;
  os << "genus " << cert.genus << ": dim K(Sigma_g x S^1) >= " << cert.lower_bound << " ("
     << (cert.valid ? "VALID" : "INVALID") << ")\n";
  os << "  class (0,0): " << cert.dim_00 << "\n";
  os << "  class (0,1): " << cert.dim_01 << "\n";
  os << "  other classes: " << cert.other_class_count << " x " << cert.other_each << "\n";
  for (const auto& c : cert.checks)
    os << "  " << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  for (const auto& a : cert.assumptions) os << "  assumes: " << a << "\n";
  return {os.str(), code};
}

Emission run_table(const RunConfig& cfg) {
  require(cfg.genus_min >= 1 && cfg.genus_max >= cfg.genus_min,
          "--genus-min must be >= 1 and <= --genus-max");
  require(cfg.p_min >= 3 && cfg.p_max >= cfg.p_min, "--p-min must be >= 3 and <= --p-max");
  struct Row {
    int g, p, m;
    Integer dim;
  };
  std::vector<Row> rows;
  for (int g = cfg.genus_min; g <= cfg.genus_max; ++g)
    for (int p = cfg.p_min + (cfg.p_min % 2 == 0 ? 1 : 0); p <= cfg.p_max; p += 2)
      for (int m = 0; m <= p - 2; ++m) rows.push_back({g, p, m, dimension(g, p, m)});

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"genus", r.g}, {"p", r.p}, {"color", r.m}, {"dimension", integer_json(r.dim)}});
    return {dump(arr)};
  }
  std::string out = "genus,p,color,dimension\n";
  for (const auto& r : rows)
    out += std::to_string(r.g) + "," + std::to_string(r.p) + "," + std::to_string(r.m) + "," +
           to_string(r.dim) + "\n";
  return {out};
}

Emission dispatch(const RunConfig& cfg) {
  if (cfg.command == "dim") return run_dim(cfg);
  if (cfg.command == "poly") return run_poly(cfg);
  if (cfg.command == "decompose") return run_decompose(cfg);
  if (cfg.command == "bernoulli") return run_bernoulli(cfg);
  if (cfg.command == "eval-curve") return run_eval_curve(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "certify") return run_certify(cfg);
  if (cfg.command == "table") return run_table(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

int report_error(const std::string& kind, const std::string& message, int code) {
  const json err = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path path(output);
  if (path.is_relative())
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
      path = std::filesystem::path(dir) / path;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SO(3) Verlinde polynomials and skein-module lower-bound certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--output,-o", cfg.output,
                    std::string("Write the report to this file (relative paths resolve against $") +
                        kOutputDirEnv + ")");
  };

  auto* dim = app.add_subcommand("dim", "Dimension D_g at level p with one point colored m");
  dim->add_option("--genus,-g", cfg.genus)->required();
  dim->add_option("--p", cfg.p)->required();
  dim->add_option("--color,-m", cfg.color)->required();
  add_common(dim);

  auto* poly = app.add_subcommand("poly", "Verlinde polynomial D_g^(2c), or D_g^(p-2s-1) with --kind odd");
  poly->add_option("--genus,-g", cfg.genus)->required();
  poly->add_option("--kind", cfg.kind)->check(CLI::IsMember({"even", "odd"}));
  add_common(poly);

  auto* dec = app.add_subcommand("decompose", "Coefficients of the powers of p, with degrees");
  dec->add_option("--genus,-g", cfg.genus)->required();
  dec->add_option("--kind", cfg.kind)->check(CLI::IsMember({"even", "odd"}));
  add_common(dec);

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers (and polynomials) up to an index");
  bern->add_option("--max,-n", cfg.max_index, "Largest index");
  bern->add_flag("--polynomials", cfg.polynomials, "Also print B_k(x)");
  add_common(bern);

  auto* curve = app.add_subcommand("eval-curve", "Invariant of a colored non-separating curve");
  curve->add_option("--genus,-g", cfg.genus)->required();
  curve->add_option("--p", cfg.p)->required();
  curve->add_option("--color,-m", cfg.color)->required();
  curve->add_flag("--embed", cfg.embed, "Also print complex values under each embedding");
  curve->add_flag("--literal-denominator", cfg.literal_denominator,
                  "Use A^{2i-1} - A^{-2i-1} in the odd case (comparison only)");
  add_common(curve);

  auto* verify = app.add_subcommand("verify", "Run verification batteries");
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember(suite_names()));
  add_common(verify);

  auto* certify = app.add_subcommand("certify", "Emit the lower-bound certificate");
  certify->add_option("--genus,-g", cfg.genus)->required();
  add_common(certify);

  auto* table = app.add_subcommand("table", "CSV of dimensions over (genus, p, color)");
  table->add_option("--genus-min", cfg.genus_min);
  table->add_option("--genus-max", cfg.genus_max);
  table->add_option("--p-min", cfg.p_min);
  table->add_option("--p-max", cfg.p_max);
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kExitUsage);
  }

  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cfg.command == "table" && table->get_option("--format")->count() == 0) cfg.format = "csv";

  Emission emission;
  try {
    emission = dispatch(cfg);
  } catch (const UsageError& e) {
    return report_error("usage", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return report_error("usage", e.what(), kExitUsage);
  } catch (const std::out_of_range& e) {
    return report_error("usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return report_error("check_failure", e.what(), kExitCheckFailure);
  }

  if (cfg.output.empty()) {
    std::cout << emission.text;
  } else {
    const std::filesystem::path path = resolve_output(cfg.output);
    std::ofstream out(path, std::ios::binary);
    if (!out) return report_error("io", "cannot open " + path.string(), kExitUsage);
    out << emission.text;
  }
  if (emission.exit_code != kExitPass)
    return report_error("check_failure", "one or more checks failed", emission.exit_code);
  return kExitPass;
}
