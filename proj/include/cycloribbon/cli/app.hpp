#pragma once

#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycloribbon/io/literals.hpp"
#include "cycloribbon/io/serialize.hpp"
#include "cycloribbon/oracle/checks.hpp"
#include "cycloribbon/representation/matrices.hpp"

namespace cycloribbon::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kOracleFailure = 2 };

/// Raised for bad flag values; the message is shown verbatim.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::size_t max_oracle_dim() {
  const char* env = std::getenv("CYCLORIBBON_MAX_DIM");
  if (env == nullptr || *env == '\0') return 2000;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("CYCLORIBBON_MAX_DIM must be a non-negative integer, got '" + std::string(env) + "'");
  }
}

inline Json ribbon_json(const ColoredRibbon& r) {
  return Json{{"shape", r.shape.parts()}, {"colors", r.colors}, {"literal", format_ribbon(r)}};
}

inline Json json_integer(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

inline Json colored_composition_json(const ColoredComposition& cc) {
  return Json{{"parts", cc.parts.parts()}, {"colors", cc.part_colors}, {"literal", format_colored_composition(cc)}};
}

inline void check_n_r(int n, int r) {
  if (n < 0) throw UsageError("--n must be non-negative, got " + std::to_string(n));
  if (r < 1) throw UsageError("--r must be at least 1, got " + std::to_string(r));
}

template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline void check_label_colors(const LinearCombination& a, int r, const std::string& flag) {
  for (const auto& [l, c] : a.terms())
    for (int x : l.colors)
      if (x > r)
        throw UsageError(flag + ": color " + std::to_string(x) + " exceeds --r " + std::to_string(r));
}

inline Basis cli_basis(const std::string& name) {
  if (name == "F") return Basis::QMR_F;
  if (name == "R") return Basis::MR_R;
  if (name == "S") return Basis::MR_S;
  throw UsageError("--basis must be F, R or S, got '" + name + "'");
}

inline ColorInversion cli_inversion(const std::string& name) {
  if (name == "transport") return ColorInversion::Transport;
  if (name == "negate") return ColorInversion::Negate;
  throw UsageError("--color-inversion must be transport or negate, got '" + name + "'");
}

inline std::vector<Rational> parse_parameters(const std::string& text, int r) {
  std::vector<Rational> u;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      u.push_back(parse_rational(piece));
    } catch (const std::invalid_argument&) {
      throw UsageError("--u: " + ParseError(pos, "malformed rational '" + piece + "'", text).reason() +
                       " at position " + std::to_string(pos) + " in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (u.size() != static_cast<std::size_t>(r))
    throw UsageError("--u: expected " + std::to_string(r) + " parameters, got " + std::to_string(u.size()));
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b)
      if (u[a] == u[b]) throw UsageError("--u: parameters " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide");
  return u;
}

inline void write_matrix(const LabeledMatrix& m, const std::string& format, std::ostream& out) {
  if (format == "csv")
    out << to_csv(m);
  else
    out << to_json(m).dump(2) << '\n';
}

/// Reports go to stdout; on failure the first counterexample also goes to stderr.
inline int emit_reports(const std::vector<oracle::CheckReport>& reports, std::ostream& out, std::ostream& err) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(oracle::to_json(r));
  const bool pass = oracle::all_pass(reports);
  out << Json{{"pass", pass}, {"reports", arr}}.dump(2) << '\n';
  if (pass) return kOk;
  for (const auto& r : reports)
    if (!r.pass) {
      err << oracle::to_json(r).dump() << '\n';
      break;
    }
  return kOracleFailure;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of the 0-Ariki-Koike-Shoji algebras: ribbons, Hopf algebras, oracle"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  int n = 0, r = 0, max_grade = 0;
  std::string shape, ribbon, basis, lhs, rhs, elt, format = "csv", u_text, inversion = "transport";
  bool anti = false;

  auto* enumerate = app.add_subcommand("enumerate", "List cycloribbons (or anticycloribbons) of size n");
  enumerate->add_option("--n", n, "Size")->required();
  enumerate->add_option("--r", r, "Number of colors")->required();
  enumerate->add_option("--shape", shape, "Restrict to one composition, e.g. 2,1");
  enumerate->add_flag("--anti", anti, "Enumerate anticycloribbons instead");

  auto* phi_cmd = app.add_subcommand("phi", "Apply the involution phi to a colored ribbon");
  phi_cmd->add_option("--ribbon", ribbon, "Ribbon literal shape|colors, e.g. 1,3|2,1,1,2")->required();

  auto* product = app.add_subcommand("product", "Product of two elements");
  product->add_option("--basis", basis, "F (QMR), R or S (MR)")->required();
  product->add_option("--lhs", lhs, "Left factor")->required();
  product->add_option("--rhs", rhs, "Right factor")->required();
  auto* product_r = product->add_option("--r", r, "Number of colors (validation; needed for --color-inversion negate)");
  product->add_option("--color-inversion", inversion, "transport (default) or negate");

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an element");
  coproduct->add_option("--basis", basis, "S, R (MR) or F (QMR)")->required();
  coproduct->add_option("--elt", elt, "Element")->required();
  auto* coproduct_r = coproduct->add_option("--r", r, "Number of colors (validation)");

  auto* induce = app.add_subcommand("induce-simples", "Composition factors of an induction product of two simples");
  induce->add_option("--lhs", lhs, "Cycloribbon I|c")->required();
  induce->add_option("--rhs", rhs, "Cycloribbon J|c'")->required();
  auto* induce_r = induce->add_option("--r", r, "Number of colors (validation; needed for --color-inversion negate)");
  induce->add_option("--color-inversion", inversion, "transport (default) or negate");

  auto* hecke = app.add_subcommand("induce-hecke-projective", "Summands of an induced projective 0-Hecke module");
  hecke->add_option("--shape", shape, "Composition I")->required();
  hecke->add_option("--r", r, "Number of colors")->required();

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix");
  auto* decomp = app.add_subcommand("decomp", "Decomposition matrix");
  for (auto* cmd : {cartan, decomp}) {
    cmd->add_option("--n", n, "Size")->required();
    cmd->add_option("--r", r, "Number of colors")->required();
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  auto* dims = app.add_subcommand("dims", "Dimensions of the indecomposable projectives");
  dims->add_option("--n", n, "Size")->required();
  dims->add_option("--r", r, "Number of colors")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Checks against the explicit algebra");
  oracle_cmd->require_subcommand(1);
  auto* verify = oracle_cmd->add_subcommand("verify", "Defining relations on the explicit algebra");
  verify->add_option("--n", n, "Size")->required();
  verify->add_option("--r", r, "Number of colors")->required();
  verify->add_option("--u", u_text, "Distinct parameters, e.g. 1,3,7");
  auto* cross = oracle_cmd->add_subcommand("cross-check", "Explicit induction products versus the combinatorial rule");
  cross->add_option("--max-grade", max_grade, "Largest m+n")->required();
  cross->add_option("--r", r, "Number of colors")->required();
  cross->add_option("--u", u_text, "Distinct parameters");
  cross->add_option("--color-inversion", inversion, "transport (default) or negate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  const bool r_given = product_r->count() + coproduct_r->count() + induce_r->count() > 0;
  try {
    if (*enumerate) {
      check_n_r(n, r);
      std::unique_ptr<Composition> s;
      if (!shape.empty()) {
        s = std::make_unique<Composition>(with_flag("--shape", [&] { return parse_composition(shape); }));
        if (s->size() != n) throw UsageError("--shape has size " + std::to_string(s->size()) + " but --n is " + std::to_string(n));
      }
      const auto ribbons = anti ? enumerate_anticycloribbons(n, r, s.get()) : enumerate_cycloribbons(n, r, s.get());
      Json arr = Json::array();
      for (const auto& x : ribbons) arr.push_back(ribbon_json(x));
      Json doc{{"kind", anti ? "anticycloribbons" : "cycloribbons"}, {"n", n}, {"r", r}};
      if (s) doc["shape"] = s->parts();
      doc["count"] = ribbons.size();
      doc["ribbons"] = std::move(arr);
      out << doc.dump(2) << '\n';
      return kOk;
    }
    if (*phi_cmd) {
      const auto in = with_flag("--ribbon", [&] { return parse_ribbon(ribbon); });
      const auto img = phi(in);
      auto kind = [](const ColoredRibbon& x) {
        return x.is_cycloribbon() ? (x.is_anticycloribbon() ? "both" : "cycloribbon")
                                  : (x.is_anticycloribbon() ? "anticycloribbon" : "neither");
      };
      Json doc{{"input", ribbon_json(in)}, {"input_kind", kind(in)}, {"output", ribbon_json(img)}, {"output_kind", kind(img)}};
      out << doc.dump(2) << '\n';
      return kOk;
    }
    if (*product || *coproduct) {
      const Basis b = cli_basis(basis);
      const auto mode = cli_inversion(inversion);
      if (r_given && r < 1) throw UsageError("--r must be at least 1");
      if (mode == ColorInversion::Negate && !r_given) throw UsageError("--color-inversion negate requires --r");
      if (*product) {
        const auto a = with_flag("--lhs", [&] { return parse_combination(b, lhs); });
        const auto c = with_flag("--rhs", [&] { return parse_combination(b, rhs); });
        if (r_given) {
          check_label_colors(a, r, "--lhs");
          check_label_colors(c, r, "--rhs");
        }
        const auto result = b == Basis::QMR_F ? qmr_product_F(a, c, mode, r) : b == Basis::MR_R ? mr_product_R(a, c) : mr_product_S(a, c);
        out << to_json(result).dump(2) << '\n';
      } else {
        const auto a = with_flag("--elt", [&] { return parse_combination(b, elt); });
        if (r_given) check_label_colors(a, r, "--elt");
        const auto result = b == Basis::QMR_F ? qmr_coproduct_F(a) : mr_coproduct(a);
        out << to_json(result).dump(2) << '\n';
      }
      return kOk;
    }
    if (*induce) {
      const auto mode = cli_inversion(inversion);
      if (r_given && r < 1) throw UsageError("--r must be at least 1");
      if (mode == ColorInversion::Negate && !r_given) throw UsageError("--color-inversion negate requires --r");
      auto simple = [&](const std::string& flag, const std::string& text) {
        const auto x = with_flag(flag, [&] { return parse_ribbon(text); });
        if (!x.is_cycloribbon()) throw UsageError(flag + ": '" + text + "' is not a cycloribbon");
        if (r_given)
          for (int c : x.colors)
            if (c > r) throw UsageError(flag + ": color " + std::to_string(c) + " exceeds --r " + std::to_string(r));
        return SimpleLabel(x);
      };
      const auto a = simple("--lhs", lhs), c = simple("--rhs", rhs);
      Json factors = Json::array();
      for (const auto& f : induce_simples(a, c, mode, r)) factors.push_back(ribbon_json(f.ribbon()));
      Json doc{{"lhs", ribbon_json(a.ribbon())}, {"rhs", ribbon_json(c.ribbon())}, {"count", factors.size()}, {"factors", factors}};
      out << doc.dump(2) << '\n';
      return kOk;
    }
    if (*hecke) {
      check_n_r(0, r);
      const auto I = with_flag("--shape", [&] { return parse_composition(shape); });
      if (I.size() == 0) throw UsageError("--shape must be a nonempty composition");
      Json summands = Json::array();
      Integer total = 0;
      for (const auto& [p, d] : induce_hecke_projective(I, r)) {
        total += d;
        summands.push_back(Json{{"anticycloribbon", ribbon_json(p.anticycloribbon())},
                                {"colored_composition", colored_composition_json(p.colored_composition())},
                                {"dimension", json_integer(d)}});
      }
      Json doc{{"shape", I.parts()}, {"r", r}, {"count", summands.size()}, {"summands", summands}, {"total_dimension", json_integer(total)}};
      out << doc.dump(2) << '\n';
      return kOk;
    }
    if (*cartan || *decomp) {
      check_n_r(n, r);
      write_matrix(*cartan ? cartan_matrix(n, r) : decomposition_matrix(n, r), format, out);
      return kOk;
    }
    if (*dims) {
      check_n_r(n, r);
      Json rows = Json::array();
      Integer total = 0;
      for (const auto& p : all_projectives(n, r)) {
        const auto d = dim_projective(p);
        total += d;
        rows.push_back(Json{{"colored_composition", colored_composition_json(p.colored_composition())},
                            {"anticycloribbon", ribbon_json(p.anticycloribbon())},
                            {"simple_quotient", ribbon_json(p.simple_quotient().ribbon())},
                            {"dimension", json_integer(d)}});
      }
      Integer expected = factorial(n);
      for (int k = 0; k < n; ++k) expected *= r;
      Json doc{{"n", n}, {"r", r}, {"count", rows.size()}, {"projectives", rows},
               {"total", json_integer(total)}, {"expected_total", json_integer(expected)}};
      out << doc.dump(2) << '\n';
      return total == expected ? kOk : kOracleFailure;
    }
    if (*verify) {
      if (n < 1) throw UsageError("--n must be at least 1");
      check_n_r(n, r);
      const auto u = u_text.empty() ? std::vector<Rational>{} : parse_parameters(u_text, r);
      Integer size = factorial(n);
      for (int k = 0; k < n; ++k) size *= r;
      if (size > Integer(static_cast<unsigned long>(max_oracle_dim())))
        throw UsageError("algebra dimension " + size.get_str() + " exceeds CYCLORIBBON_MAX_DIM=" + std::to_string(max_oracle_dim()));
      return emit_reports(oracle::verify_relations(oracle::AlgebraParams(n, r, u)), out, err);
    }
    if (*cross) {
      if (max_grade < 2) throw UsageError("--max-grade must be at least 2");
      check_n_r(0, r);
      const auto u = u_text.empty() ? std::vector<Rational>{} : parse_parameters(u_text, r);
      Integer size = factorial(max_grade);
      for (int k = 0; k < max_grade; ++k) size *= r;
      if (size > Integer(static_cast<unsigned long>(max_oracle_dim())))
        throw UsageError("algebra dimension " + size.get_str() + " exceeds CYCLORIBBON_MAX_DIM=" + std::to_string(max_oracle_dim()));
      const auto rule = cli_inversion(inversion) == ColorInversion::Transport ? oracle::transport_rule : oracle::negate_rule;
      return emit_reports(oracle::cross_check_induction(max_grade, r, u, rule), out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << Json{{"error", e.what()}}.dump() << '\n';
    return kOracleFailure;
  }
  return kInvalid;
}

}  // namespace cycloribbon::cli
