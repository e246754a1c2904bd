#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "frobcx/closedform.hpp"
#include "frobcx/enumerate.hpp"
#include "frobcx/errors.hpp"
#include "frobcx/poincare.hpp"
#include "frobcx/rational_io.hpp"
#include "frobcx/spectral.hpp"
#include "frobcx/transfer.hpp"
#include "frobcx/twistedop.hpp"

namespace frobcx::cli {
namespace {

using json = nlohmann::json;

struct RunConfig {
  std::uint32_t p = 2;
  std::uint32_t d = 3;
  std::uint32_t emax = 6;
  std::string engine = "auto";
  std::string tol = "1e-10";
  Format format = Format::kTable;
  std::string max_compositions = "100000000";
  std::string max_carryvectors = "10000000";

  // verify
  bool inject_fault = false;

  // twisted demo
  std::uint32_t length = 4;
  std::uint32_t generators = 2;
  std::optional<std::uint32_t> level;
  std::optional<std::uint32_t> base_level;
  std::uint64_t seed = 1;
};

/// Thrown by the subcommand handlers; carries the exit code.
struct Exit {
  int code;
  std::string message;
};

Count parse_guard(const std::string& text, const char* flag) {
  Count value;
  if (text.empty() || value.set_str(text, 10) != 0 || value < 0) {
    throw Exit{kUsage, std::string(flag) + " expects a nonnegative integer"};
  }
  return value;
}

Rational parse_tol(const std::string& text) {
  Rational tol;
  try {
    tol = parse_decimal(text);
  } catch (const InvalidArgument& ex) {
    throw Exit{kUsage, std::string("--tol: ") + ex.what()};
  }
  if (tol <= 0) throw Exit{kUsage, "--tol must be positive"};
  return tol;
}

json json_counts(const std::vector<Count>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    os << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

// ---------------------------------------------------------------- mdpoly

int run_mdpoly(const RunConfig& cfg, std::ostream& out) {
  const PoincareTable table(Prime(cfg.p), cfg.d);
  std::vector<Count> coeffs(table.coefficients().begin(),
                            table.coefficients().end());
  out << json_counts(coeffs).dump() << '\n';
  return kOk;
}

// -------------------------------------------------------------- sequence

std::vector<Count> sequence_by_enumeration(Prime p, std::uint32_t d,
                                           std::uint32_t emax,
                                           const Count& guard) {
  std::vector<Count> c(emax + 1, Count(0));
  EnumerationOptions options;
  options.max_compositions = guard;
  for (std::uint32_t e = 1; e <= emax; ++e) {
    c[e] = count_basis_enumeration(p, d, e, options);
  }
  return c;
}

ComplexityReport compute_sequence(const RunConfig& cfg, std::ostream& err) {
  const Prime p(cfg.p);
  if (cfg.d < 1) throw Exit{kUsage, "--d must be >= 1"};
  const Count max_comp = parse_guard(cfg.max_compositions, "--max-compositions");
  const Count max_carry = parse_guard(cfg.max_carryvectors, "--max-carryvectors");

  if (cfg.engine == "transfer") {
    return complexity_sequence(p, cfg.d, cfg.emax);
  }
  if (cfg.engine == "enumerate") {
    return ComplexityReport::from_counts(
        p, cfg.d, "enumerate",
        sequence_by_enumeration(p, cfg.d, cfg.emax, max_comp));
  }
  if (cfg.engine == "carry") {
    const PoincareTable table(p, cfg.d);
    std::vector<Count> c(cfg.emax + 1, Count(0));
    for (std::uint32_t e = 1; e <= cfg.emax; ++e) {
      c[e] = count_basis_carryvectors(table, e, max_carry);
    }
    return ComplexityReport::from_counts(p, cfg.d, "carry", std::move(c));
  }
  if (cfg.engine == "closed") {
    if (cfg.d != 3) {
      throw Exit{kUsage, "--engine closed is only available for --d 3"};
    }
    std::vector<Count> c(cfg.emax + 1, Count(0));
    if (cfg.emax >= 1) c[1] = first_level_count(p, 3);
    for (std::uint32_t e = 2; e <= cfg.emax; ++e) c[e] = c3_closed(p, e);
    return ComplexityReport::from_counts(p, 3, "closed", std::move(c));
  }
  // auto
  ComplexityReport transfer = complexity_sequence(p, cfg.d, cfg.emax);
  const bool feasible =
      cfg.emax == 0 || composition_count(p, cfg.d, cfg.emax) <= max_comp;
  if (!feasible) return transfer;
  auto report = ComplexityReport::from_counts(
      p, cfg.d, "enumerate",
      sequence_by_enumeration(p, cfg.d, cfg.emax, max_comp));
  for (std::uint32_t e = 0; e <= cfg.emax; ++e) {
    if (report.c[e] != transfer.c[e]) {
      err << "mismatch at e=" << e << ": enumerate=" << report.c[e]
          << " transfer=" << transfer.c[e] << '\n';
      throw Exit{kMismatch, "engines disagree"};
    }
  }
  return report;
}

int run_sequence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  out << render_sequence(compute_sequence(cfg, err), cfg.format);
  return kOk;
}

// ------------------------------------------------- complexity and segre

struct SpectralOutput {
  std::string rho_lo, rho_hi, cxf_lo, cxf_hi;
};

SpectralOutput spectral_strings(const CxfEstimate& est, const Rational& tol) {
  const unsigned digits = decimal_digits_for(tol);
  return {format_decimal(est.rho.lo, digits, Rounding::kDown),
          format_decimal(est.rho.hi, digits, Rounding::kUp),
          format_decimal(est.cxf.lo, digits, Rounding::kDown),
          format_decimal(est.cxf.hi, digits, Rounding::kUp)};
}

CxfEstimate checked_cxf(const RunConfig& cfg, const Rational& tol,
                        std::ostream& err) {
  const Prime p(cfg.p);
  if (cfg.d < 3) {
    throw Exit{kUsage,
               "--d must be >= 3: for d <= 2 the complexity sequence vanishes "
               "from e = 2 on, so cx_F is not positive"};
  }
  CxfEstimate est = cxf(p, cfg.d, tol);
  if (!est.rho.converged) {
    err << "warning: Perron interval did not reach tol after "
        << est.rho.iterations << " iterations; reporting the widest "
        << "certified interval\n";
  }
  if (!est.within_dimension_bound) {
    err << "cx_F upper endpoint exceeds d - 1 = " << cfg.d - 1 << '\n';
    throw Exit{kMismatch, "dimension bound violated"};
  }
  return est;
}

int run_complexity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rational tol = parse_tol(cfg.tol);
  const CxfEstimate est = checked_cxf(cfg, tol, err);
  const SpectralOutput s = spectral_strings(est, tol);
  switch (cfg.format) {
    case Format::kJson: {
      json j = {{"rho_lo", s.rho_lo},
                {"rho_hi", s.rho_hi},
                {"cxf_lo", s.cxf_lo},
                {"cxf_hi", s.cxf_hi}};
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "rho_lo,rho_hi,cxf_lo,cxf_hi\n"
          << s.rho_lo << ',' << s.rho_hi << ',' << s.cxf_lo << ','
          << s.cxf_hi << '\n';
      break;
    case Format::kTable: {
      const TransferSystem sys = build_system(Prime(cfg.p), cfg.d);
      const CharPoly poly = char_poly(sys.U);
      std::ostringstream charpoly;
      for (std::size_t i = poly.degree() + 1; i-- > 0;) {
        if (poly[i] == 0) continue;
        if (i != poly.degree()) charpoly << (poly[i] < 0 ? " - " : " + ");
        const Count mag = abs(poly[i]);
        if (mag != 1 || i == 0) charpoly << mag;
        if (i > 0) charpoly << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      }
      out << "p=" << cfg.p << " d=" << cfg.d << '\n'
          << "char poly of U: " << charpoly.str() << '\n'
          << "rho(U)  in [" << s.rho_lo << ", " << s.rho_hi << "]"
          << (est.rho.charpoly_confirmed ? "  (sign change confirmed)" : "")
          << '\n'
          << "cx_F    in [" << s.cxf_lo << ", " << s.cxf_hi << "]\n"
          << "rho(U) bounds the growth of c_e; it is reported as cx(T)\n";
      break;
    }
  }
  return kOk;
}

int run_segre(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Rational tol = parse_tol(cfg.tol);
  const CxfEstimate est = checked_cxf(cfg, tol, err);
  const SpectralOutput s = spectral_strings(est, tol);
  const auto closed = segre_closed_form(Prime(cfg.p), cfg.d);
  switch (cfg.format) {
    case Format::kJson: {
      json j = {{"p", cfg.p},          {"d", cfg.d},
                {"rho_lo", s.rho_lo},  {"rho_hi", s.rho_hi},
                {"cxf_lo", s.cxf_lo},  {"cxf_hi", s.cxf_hi}};
      if (closed) j["closed_form"] = *closed;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "p,d,cxf_lo,cxf_hi,closed_form\n"
          << cfg.p << ',' << cfg.d << ',' << s.cxf_lo << ',' << s.cxf_hi
          << ',' << closed.value_or("") << '\n';
      break;
    case Format::kTable:
      out << "S_" << cfg.d << " at p=" << cfg.p << '\n';
      if (closed) out << "cx_F exact:    " << *closed << '\n';
      out << "cx_F interval: [" << s.cxf_lo << ", " << s.cxf_hi << "]\n";
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct GridRow {
  std::uint32_t p;
  std::uint32_t d;
  std::uint32_t emax;
};

std::vector<GridRow> default_grid() {
  std::vector<GridRow> grid;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    grid.push_back({p, 1, 4});
    grid.push_back({p, 2, 4});
  }
  for (std::uint32_t d = 3; d <= 6; ++d) grid.push_back({2, d, 6});
  for (std::uint32_t d = 3; d <= 5; ++d) grid.push_back({3, d, 4});
  for (std::uint32_t d = 3; d <= 4; ++d) grid.push_back({5, d, 3});
  return grid;
}

int run_verify(const RunConfig& cfg, const std::vector<GridRow>& grid,
               std::ostream& out, std::ostream& err) {
  const Count max_comp = parse_guard(cfg.max_compositions, "--max-compositions");
  const Count max_carry = parse_guard(cfg.max_carryvectors, "--max-carryvectors");
  EnumerationOptions options;
  options.max_compositions = max_comp;

  std::size_t checked = 0;
  for (const auto& row : grid) {
    const Prime p(row.p);
    const PoincareTable table(p, row.d);
    ComplexityReport transfer = [&] {
      if (row.d < 3) return complexity_sequence(p, row.d, row.emax);
      TransferSystem sys = build_system(table);
      if (cfg.inject_fault) sys.U(0, 0) += 1;
      return complexity_sequence(sys, row.emax);
    }();

    for (std::uint32_t e = 1; e <= row.emax; ++e) {
      std::map<std::string, Count> values;
      values["enumerate"] = count_basis_enumeration(p, row.d, e, options);
      values["carry"] = count_basis_carryvectors(table, e, max_carry);
      values["transfer"] = transfer.c[e];
      if (e == 1) values["binomial"] = first_level_count(p, row.d);
      if (row.d == 3 && e >= 2) values["closed"] = c3_closed(p, e);

      const Count& reference = values["enumerate"];
      bool ok = std::all_of(values.begin(), values.end(),
                            [&](const auto& kv) { return kv.second == reference; });
      const Count upper = composition_count(p, row.d, e);
      ok = ok && reference <= upper;
      std::optional<Count> lower;
      if (row.d >= 3 && e >= 2) {
        lower = lower_bound(p, row.d, e);
        ok = ok && *lower <= reference && (row.d != 3 || *lower == reference);
      }
      if (!ok) {
        err << "MISMATCH p=" << row.p << " d=" << row.d << " e=" << e << ':';
        for (const auto& [engine, v] : values) err << ' ' << engine << '=' << v;
        if (lower) err << " lower_bound=" << *lower;
        err << " upper_bound=" << upper << '\n';
        return kMismatch;
      }
      out << "ok  p=" << row.p << " d=" << row.d << " e=" << e
          << "  c=" << reference << '\n';
      ++checked;
    }
  }
  out << "verify: " << checked << " triples agree\n";
  return kOk;
}

// --------------------------------------------------------------- twisted

std::string render_matrix(const QMatrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m(i, j).to_string());
      w = std::max(w, cells[i].back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << indent << "[";
    for (const auto& c : row) os << ' ' << std::setw(static_cast<int>(w)) << c;
    os << " ]\n";
  }
  return os.str();
}

int run_twisted_demo(const RunConfig& cfg, std::ostream& out) {
  const QRing ring(Prime(cfg.p), cfg.length);
  if (cfg.generators < 1) throw Exit{kUsage, "--r must be >= 1"};
  const std::uint32_t e0 = cfg.base_level.value_or(min_frobenius_level(ring));
  const std::uint32_t e = cfg.level.value_or(2 * std::max(e0, 1u));
  std::mt19937_64 rng(cfg.seed);
  const QMatrix a = random_matrix(ring, cfg.generators, rng);
  const FactorizationTrace t = factorization_trace(a, e, e0);

  out << "ring F_" << cfg.p << "[x]/(x^" << cfg.length << "), r=" << cfg.generators
      << ", e=" << e << ", e0=" << e0 << " (smallest with " << cfg.p
      << "^e0 >= " << cfg.length << " is " << min_frobenius_level(ring) << ")\n";
  out << "A =\n" << render_matrix(a, "  ");
  out << "direct:   A^(" << e << ")\n";
  out << "factored: A^(" << e0 << ") o I^(" << e - e0 << ") = (A I^[" << cfg.p
      << "^" << e0 << "])^(" << t.factored.e << ") =\n"
      << render_matrix(t.factored.A, "  ");
  out << "identity chain:";
  for (std::size_t i = 0; i < t.identity_chain.size(); ++i) {
    out << (i ? " o " : " ") << "I^(" << t.identity_chain[i].e << ")";
  }
  out << " = I^(" << t.chain_product.e << ")\n";
  out << "maximal ideal killed at level e0: "
      << (t.maximal_ideal_killed ? "yes" : "no") << '\n';
  out << "factorization holds: " << (t.holds ? "yes" : "no") << '\n';
  return t.holds ? kOk : kMismatch;
}

}  // namespace

std::string render_sequence(const ComplexityReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      json j = {{"p", report.p.value()},
                {"d", report.d},
                {"engine", report.engine},
                {"c", json_counts(report.c)},
                {"k", json_counts(report.k)}};
      os << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      os << "e,c_e,k_e\n";
      for (std::size_t e = 0; e < report.c.size(); ++e) {
        os << e << ',' << report.c[e] << ',' << report.k[e] << '\n';
      }
      break;
    case Format::kTable: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t e = 0; e < report.c.size(); ++e) {
        rows.push_back({std::to_string(e), to_decimal(report.c[e]),
                        to_decimal(report.k[e])});
      }
      os << "# p=" << report.p.value() << " d=" << report.d
         << " engine=" << report.engine << '\n'
         << render_table({"e", "c_e", "k_e"}, rows);
      break;
    }
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Frobenius complexity of T-constructions and Segre products"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{
      {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic (prime)")->required();
  };
  auto add_d = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--d", cfg.d, "number of variables");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_guards = [&](CLI::App* sub) {
    sub->add_option("--max-compositions", cfg.max_compositions,
                    "enumeration guard")
        ->envname("FROBCX_MAX_COMPOSITIONS");
    sub->add_option("--max-carryvectors", cfg.max_carryvectors,
                    "carry-vector guard")
        ->envname("FROBCX_MAX_CARRYVECTORS");
  };

  auto* mdpoly = app.add_subcommand("mdpoly", "coefficients of (1+...+t^{p-1})^d");
  add_p(mdpoly);
  add_d(mdpoly, true);

  auto* sequence = app.add_subcommand("sequence", "complexity sequence c_e, k_e");
  add_p(sequence);
  add_d(sequence, true);
  sequence->add_option("--emax", cfg.emax, "largest level e");
  sequence->add_option("--engine", cfg.engine, "engine")
      ->check(CLI::IsMember({"auto", "enumerate", "carry", "transfer", "closed"}));
  add_format(sequence);
  add_guards(sequence);

  auto* complexity = app.add_subcommand("complexity", "certified rho(U) and cx_F");
  add_p(complexity);
  add_d(complexity, true);
  complexity->add_option("--tol", cfg.tol, "interval width");
  add_format(complexity);

  auto* segre = app.add_subcommand("segre", "cx_F of the Segre product S_d");
  add_p(segre);
  add_d(segre, true);
  segre->add_option("--tol", cfg.tol, "interval width");
  add_format(segre);

  auto* verify = app.add_subcommand("verify", "cross-check every engine on a grid");
  std::optional<std::uint32_t> verify_p, verify_d, verify_emax;
  verify->add_option("--p", verify_p, "restrict to one prime");
  verify->add_option("--d", verify_d, "restrict to one d");
  verify->add_option("--emax", verify_emax, "largest level for --p/--d");
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_guards(verify);

  auto* twisted = app.add_subcommand("twisted", "twisted Frobenius operators");
  twisted->require_subcommand(1);
  auto* demo = twisted->add_subcommand("demo", "factorization trace");
  demo->add_option("--p", cfg.p, "characteristic")->required();
  demo->add_option("--N", cfg.length, "ring is F_p[x]/(x^N)");
  demo->add_option("--r", cfg.generators, "number of generators");
  demo->add_option("--e", cfg.level, "Frobenius degree");
  demo->add_option("--e0", cfg.base_level, "factor level");
  demo->add_option("--seed", cfg.seed, "seed for the random matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*mdpoly) return run_mdpoly(cfg, out);
    if (*sequence) return run_sequence(cfg, out, err);
    if (*complexity) return run_complexity(cfg, out, err);
    if (*segre) return run_segre(cfg, out, err);
    if (*verify) {
      std::vector<GridRow> grid;
      if (verify_p || verify_d || verify_emax) {
        if (!verify_p || !verify_d) {
          throw Exit{kUsage, "verify: --p and --d go together"};
        }
        grid.push_back({*verify_p, *verify_d, verify_emax.value_or(4)});
      } else {
        grid = default_grid();
      }
      return run_verify(cfg, grid, out, err);
    }
    if (*demo) return run_twisted_demo(cfg, out);
  } catch (const Exit& ex) {
    if (!ex.message.empty()) err << "error: " << ex.message << '\n';
    return ex.code;
  } catch (const GuardExceeded& ex) {
    err << "error: " << ex.what() << "\n"
        << "requested " << ex.requested() << ", limit " << ex.limit()
        << "; raise the guard or use --engine transfer\n";
    return kGuard;
  } catch (const InvalidArgument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const OverflowError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"frobcx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace frobcx::cli
