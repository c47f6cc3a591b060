#include "indicatrix/bounds.hpp"
#include "indicatrix/constructions.hpp"
#include "indicatrix/export.hpp"
#include "indicatrix/plane_incidence.hpp"
#include "indicatrix/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace indicatrix;

namespace {

struct Literal {
  std::string kind, args;
};

Literal split_literal(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {"", text};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t count_arg(const std::string& s, std::size_t offset) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::logic_error&) {
    throw ParseError("expected a non-negative integer", offset);
  }
  if (used != s.size()) throw ParseError("expected a non-negative integer", offset + used);
  return v;
}

std::vector<std::string> builder_args(const Literal& lit, std::size_t expected) {
  auto parts = split(lit.args, ',');
  if (parts.size() != expected)
    throw ParseError(lit.kind + " takes " + std::to_string(expected) + " comma-separated values", lit.kind.size() + 1);
  return parts;
}

// Plain arc list, `fatcantor:lam,m` or `random:n,d,seed`.
CircleOpenSet parse_set_object(const std::string& text) {
  const auto lit = split_literal(text);
  const std::size_t base = lit.kind.size() + 1;
  if (lit.kind == "fatcantor") {
    const auto a = builder_args(lit, 2);
    return fat_cantor_complement({parse_rational(a[0], base), count_arg(a[1], base + a[0].size() + 1)}).set;
  }
  if (lit.kind == "random") {
    const auto a = builder_args(lit, 3);
    return random_open_set(count_arg(a[0], base), count_arg(a[1], base), count_arg(a[2], base));
  }
  if (!lit.kind.empty()) throw ParseError("unknown set builder '" + lit.kind + "'", 0);
  return parse_circle_set(text);
}

// `pl: (x,y) ...`, `tent:n`, `pierpont:b,K`, `terekhin:K` or `random:n,d,seed`.
PLFunction parse_function_object(const std::string& text) {
  const auto lit = split_literal(text);
  const std::size_t base = lit.kind.size() + 1;
  if (lit.kind == "pl") return parse_pl_function(text);
  if (lit.kind == "tent") return tent_train(count_arg(builder_args(lit, 1)[0], base));
  if (lit.kind == "pierpont") {
    const auto a = builder_args(lit, 2);
    return pierpont(parse_rational(a[0], base), count_arg(a[1], base + a[0].size() + 1));
  }
  if (lit.kind == "terekhin") return terekhin(count_arg(builder_args(lit, 1)[0], base));
  if (lit.kind == "random") {
    const auto a = builder_args(lit, 3);
    return random_pl_function(count_arg(a[0], base), count_arg(a[1], base), count_arg(a[2], base));
  }
  throw ParseError("unknown function literal '" + lit.kind + "'", 0);
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::logic_error&) {
    throw ParseError("expected a number", 0);
  }
  if (used != s.size()) throw ParseError("trailing characters in number", used);
  return v;
}

// Accepts rationals or decimals (decimals become dyadic rationals).
Rational parse_exact_or_real(const std::string& s) {
  if (s.find_first_of(".eE") == std::string::npos) return parse_rational(s);
  return dyadic_approximation(parse_real(s));
}

// `geom:hmax,hmin[,count]` (log-spaced, decreasing) or `list:h1,h2,...`.
std::vector<Rational> parse_grid(const std::string& text) {
  const auto lit = split_literal(text);
  const auto parts = split(lit.args, ',');
  std::vector<Rational> hs;
  if (lit.kind == "list") {
    for (const auto& p : parts) hs.push_back(parse_exact_or_real(p));
    return hs;
  }
  if (lit.kind != "geom" || parts.size() < 2 || parts.size() > 3)
    throw ParseError("expected geom:hmax,hmin[,count] or list:h1,h2,...", 0);
  const double hi = to_double(parse_exact_or_real(parts[0]));
  const double lo = to_double(parse_exact_or_real(parts[1]));
  const std::size_t count = parts.size() == 3 ? count_arg(parts[2], 0) : 30;
  if (!(lo > 0 && lo < hi) || count < 2) throw InvalidInput("grid needs 0 < hmin < hmax and count >= 2");
  for (std::size_t i = 0; i < count; ++i) {
    const double h = hi * std::pow(lo / hi, static_cast<double>(i) / static_cast<double>(count - 1));
    hs.push_back(i == 0 ? parse_exact_or_real(parts[0]) : dyadic_approximation(h));
  }
  return hs;
}

Eigen::Vector2d parse_direction(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("direction must be 'x,y'", 0);
  return {parse_real(parts[0]), parse_real(parts[1])};
}

void emit(const Table& table, const std::string& out) {
  if (out.empty())
    std::cout << to_csv(table);
  else
    write_table(table, out);
}

// Flat key=value lines mirroring long flags; command-line flags take precedence.
std::vector<std::string> config_arguments(const std::string& path, const std::set<std::string>& given,
                                          std::string& command) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config " + path);
  std::vector<std::string> args;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(number) + ": expected key=value", 0);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "command") {
      command = value;
      continue;
    }
    if (given.count("--" + key)) continue;
    args.push_back("--" + key);
    args.push_back(value);
  }
  return args;
}

nlohmann::ordered_json report_json(const BoundReport& r, double tolerance) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed(tolerance);
  j["quantity"] = r.quantity;
  j["bound"] = r.bound;
  j["slack"] = r.slack;
  j["exact"] = r.exact;
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) ws.push_back({{"parameter", w.parameter}, {"quantity", w.quantity}, {"bound", w.bound}});
  j["witnesses"] = std::move(ws);
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Incidence of translated circle sets, level sets of PL functions, and their moduli of continuity", "indicatrix"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by the shift flags
  app.require_subcommand(1);
  std::string config;
  app.add_option("--config", config, "Flat key=value file mirroring the long flags");

  std::string set_text, f_text, h_text, t_text, out, phi_text, family_text, grid_text, shape, dir = "1,0", save;
  std::string lam_text = "1/4", suite = "all", kind = "tau";
  double p = 1.0, tolerance = 1e-9, h_real = 0;
  std::size_t grid = 256, stage = 10, res = 512, trials = 0;
  std::uint64_t seed = 7;

  auto* c_tau = app.add_subcommand("tau", "Exact tau(h, E) = |E symmetric-difference (E - h)| [circle_set tau]");
  c_tau->add_option("--set", set_text, "Arc list 'a/b+l/m, ...' or fatcantor:lam,m or random:n,d,seed")->required();
  c_tau->add_option("--h", h_text, "Shift h >= 0 as p/q")->required();

  auto* c_tausup = app.add_subcommand("tausup", "Exact sup of tau(h, E) over 0 < h <= t [circle_set tau_sup]");
  c_tausup->add_option("--set", set_text, "Set literal")->required();
  c_tausup->add_option("--t", t_text, "Upper limit t in (0, 1/2] as p/q")->required();

  auto* c_mod = app.add_subcommand(
      "modulus", "L^p modulus of continuity: certified sup over |h| <= t, or the integral at one h [pl_function modulus, modulus_at]");
  c_mod->add_option("--f", f_text, "Function: 'pl: (x,y) ...', tent:n, pierpont:b,K, terekhin:K, random:n,d,seed")
      ->required();
  auto* t_opt = c_mod->add_option("--t", t_text, "Sup over 0 < h <= t");
  auto* h_opt = c_mod->add_option("--h", h_text, "Single shift h; prints the integral of |f(x+h)-f(x)|^p");
  t_opt->excludes(h_opt);
  c_mod->add_option("--p", p, "Exponent p >= 1")->check(CLI::Range(1.0, 1e9));
  c_mod->add_option("--grid", grid, "Uniform grid points added to the critical shifts");

  auto* c_ind = app.add_subcommand(
      "indicatrix", "Strip profile y_lo,y_hi,n,N of the Banach indicatrix [pl_function indicatrix_profile, banach_integral]");
  c_ind->add_option("--f", f_text, "Function literal")->required();
  c_ind->add_option("--out", out, "Write the profile to .csv or .json");

  auto* c_gs = app.add_subcommand("gaugesum", "Gauge sum of l phi(l) over a length family [gauge gauge_sum]");
  c_gs->add_option("--family", family_text, "geom:m,rho,a,r[,stages] or list:l1,l2,...")->required();
  c_gs->add_option("--phi", phi_text, "power:a, logpow:a, mixed:a,b,g, const, recip, optional @c")->required();

  auto* c_bt = app.add_subcommand("btindex", "Besicovitch-Taylor index inf{b : sum l^b < inf} [gauge bt_index]");
  c_bt->add_option("--family", family_text, "Length family literal")->required();

  auto* c_verify = app.add_subcommand("verify", "Run inequality suites; JSON report array, exit 1 on failure [bounds, plane_incidence]");
  c_verify->add_option("--suite", suite, "Suite name or 'all'")
      ->check(CLI::IsMember([] {
        auto names = suite_names();
        names.push_back("all");
        return names;
      }()));
  c_verify->add_option("--trials", trials, "Random trials per suite (0 keeps each default)");
  c_verify->add_option("--seed", seed, "Seed for random families");
  c_verify->add_option("--tolerance", tolerance, "Allowed negative slack for real-valued suites")
      ->check(CLI::PositiveNumber);
  c_verify->add_option("--out", out, "Write the report array to a file instead of stdout");

  auto* c_fcs = app.add_subcommand("fcs", "tau on the fat Cantor complement against its two-sided envelope [bounds fcs_envelope]");
  c_fcs->add_option("--lam", lam_text, "lambda in (0, 1/3) as p/q");
  c_fcs->add_option("--stage", stage, "Construction stage m >= 1");
  c_fcs->add_option("--hgrid", grid_text, "geom:hmax,hmin[,count] or list:h1,...")->required();
  c_fcs->add_option("--out", out, "Output .csv or .json (stdout CSV if omitted)");

  auto* c_tau2 = app.add_subcommand("tau2", "Directional tau(h, v, E) of a raster set on the torus [plane_incidence tau_directional]");
  c_tau2->add_option("--shape", shape, "disk:r, square:s, cantor:lam[,stage] or pgm:path")->required();
  c_tau2->add_option("--h", h_real, "Shift length h >= 0")->required();
  c_tau2->add_option("--v", dir, "Direction x,y");
  c_tau2->add_option("--res", res, "Resolution, a power of two >= 16");
  c_tau2->add_option("--save", save, "Also write the raster as PGM");

  auto* c_export = app.add_subcommand(
      "export", "Sweep tables for slope plots: tau over h, or the modulus over t [circle_set tau, pl_function modulus]");
  c_export->add_option("--kind", kind, "tau or modulus")->check(CLI::IsMember({"tau", "modulus"}));
  c_export->add_option("--set", set_text, "Set literal (kind tau)");
  c_export->add_option("--f", f_text, "Function literal (kind modulus)");
  c_export->add_option("--p", p, "Exponent p >= 1 (kind modulus)");
  c_export->add_option("--grid", grid_text, "geom:hmax,hmin[,count] or list:...")->required();
  c_export->add_option("--out", out, "Output .csv or .json")->required();

  // Config values go in before parsing so the usual validators see them.
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    std::set<std::string> given(args.begin(), args.end());
    std::string command;
    auto extra = config_arguments(args[i + 1], given, command);
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    const bool has_command = !args.empty() && app.get_subcommand_no_throw(args.front()) != nullptr;
    if (!has_command && !command.empty()) args.insert(args.begin(), command);
    args.insert(args.end(), extra.begin(), extra.end());
    break;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*c_tau) {
    std::cout << format_rational(tau(parse_set_object(set_text), parse_rational(h_text))) << "\n";
  } else if (*c_tausup) {
    std::cout << format_rational(tau_sup(parse_set_object(set_text), parse_rational(t_text))) << "\n";
  } else if (*c_mod) {
    const auto f = parse_function_object(f_text);
    if (!h_text.empty()) {
      std::cout << format_real(modulus_at(f, parse_rational(h_text), p)) << "\n";
    } else {
      if (t_text.empty()) throw InvalidInput("modulus needs --t or --h");
      const auto m = modulus(f, parse_rational(t_text), p, grid);
      std::cout << "value " << format_real(m.value) << "\nerror_bound " << format_real(m.error_bound) << "\n";
    }
  } else if (*c_ind) {
    const auto f = parse_function_object(f_text);
    const auto profile = indicatrix_profile(f);
    Table t{{"y_lo", "y_hi", "n", "N"}, {}};
    for (const auto& s : profile.strips)
      t.add({s.y_lo, s.y_hi, static_cast<std::int64_t>(s.n), static_cast<std::int64_t>(s.N)});
    emit(t, out);
    if (!out.empty()) std::cout << "banach_integral " << format_rational(banach_integral(f)) << "\n";
  } else if (*c_gs) {
    std::cout << format_real(gauge_sum(parse_length_family(family_text), parse_gauge(phi_text))) << "\n";
  } else if (*c_bt) {
    const auto idx = bt_index(parse_length_family(family_text));
    std::cout << format_real(idx.value) << (idx.truncated ? " truncated" : "") << "\n";
  } else if (*c_verify) {
    VerifyOptions options;
    options.trials = trials;
    options.seed = seed;
    const auto reports = run_suite(suite, options);
    auto arr = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& r : reports) {
      arr.push_back(report_json(r, tolerance));
      ok = ok && r.passed(tolerance);
    }
    const std::string body = arr.dump(2) + "\n";
    if (out.empty()) {
      std::cout << body;
    } else {
      std::ofstream file(out);
      if (!file) throw InvalidInput("cannot write " + out);
      file << body;
    }
    if (!ok) {
      for (const auto& r : reports)
        if (!r.passed(tolerance)) std::cerr << "FAILED " << r.name << " slack " << format_real(r.slack) << "\n";
      if (const auto* w = worst_witness(reports))
        std::cerr << "worst witness: " << w->parameter << " quantity " << format_real(w->quantity) << " bound "
                  << format_real(w->bound) << "\n";
      return 1;
    }
  } else if (*c_fcs) {
    const Rational lambda = parse_rational(lam_text);
    const auto built = fat_cantor_complement({lambda, stage});
    Table t{{"h", "tau", "lower", "upper"}, {}};
    for (const auto& h : parse_grid(grid_text)) {
      const auto env = fcs_envelope(lambda, to_double(h));
      t.add({h, tau(built.set, h), env.lower, env.upper});
    }
    emit(t, out);
  } else if (*c_tau2) {
    const auto set = raster_shape(shape, res);
    if (!save.empty()) write_pgm(set, save);
    std::cout << format_real(tau_directional(set, h_real, parse_direction(dir))) << "\n";
  } else if (*c_export) {
    Table t;
    if (kind == "tau") {
      if (set_text.empty()) throw InvalidInput("export --kind tau needs --set");
      const auto set = parse_set_object(set_text);
      t.columns = {"h", "tau", "lemma33", "kh_deficit"};
      for (const auto& h : parse_grid(grid_text)) t.add({h, tau(set, h), lemma33_bound(set, h), kh_deficit(set, h)});
    } else {
      if (f_text.empty()) throw InvalidInput("export --kind modulus needs --f");
      const auto f = parse_function_object(f_text);
      t.columns = {"t", "value", "error_bound"};
      for (const auto& s : parse_grid(grid_text)) {
        const auto m = modulus(f, s, p);
        t.add({s, m.value, m.error_bound});
      }
    }
    write_table(t, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
