#include "dpjet/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpjet/betti.hpp"
#include "dpjet/groebner.hpp"
#include "dpjet/hilbert.hpp"
#include "dpjet/jet.hpp"
#include "dpjet/limit.hpp"
#include "dpjet/serialize.hpp"
#include "dpjet/syzygy.hpp"
#include "dpjet/verify.hpp"

namespace dpjet {

using json = nlohmann::ordered_json;

std::optional<NRange> parse_n_range(const std::string& s) {
  auto to_int = [](const std::string& x) -> std::optional<int> {
    if (x.empty() || x.size() > 6) return std::nullopt;
    for (char c : x)
      if (c < '0' || c > '9') return std::nullopt;
    return std::stoi(x);
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto v = to_int(s);
    if (!v) return std::nullopt;
    return NRange{*v, *v};
  }
  auto lo = to_int(s.substr(0, dots));
  auto hi = to_int(s.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return NRange{*lo, *hi};
}

RunConfig default_config() {
  RunConfig cfg;
  auto env_size = [](const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    return (end && *end == '\0' && x > 0) ? static_cast<std::size_t>(x) : fallback;
  };
  cfg.max_slice_dim = env_size("DPJET_MAX_SLICE_DIM", cfg.max_slice_dim);
  cfg.max_basis_size = env_size("DPJET_MAX_BASIS_SIZE", cfg.max_basis_size);
  return cfg;
}

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

SyzygyCaps syzygy_caps(const RunConfig& cfg) {
  SyzygyCaps caps;
  caps.max_n = cfg.syzygy_max_n;
  caps.max_qdeg = std::max(caps.max_qdeg, cfg.qmax);
  caps.max_tdeg = std::max(caps.max_tdeg, cfg.tmax);
  caps.max_slice_dim = cfg.max_slice_dim;
  return caps;
}

void require_n(int n, int lo = 0) {
  if (n < lo) throw UsageError("--n must be at least " + std::to_string(lo));
}

void print_series(const BiSeries& s, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::table: out << series_to_table(s); break;
    case OutputFormat::json: out << series_to_json(s) << '\n'; break;
    case OutputFormat::csv: out << series_to_csv(s); break;
  }
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  if (cfg.verify) {
    NRange r = cfg.n_range.value_or(NRange{cfg.n, cfg.n});
    for (int n = r.lo; n <= r.hi; ++n) {
      bool oracle = n <= 6;
      CheckResult c = check_hilbert_agreement(n, cfg.qmax, cfg.tmax, std::min(cfg.qmax, 15),
                                              oracle ? std::min(cfg.tmax, 6) : -1);
      out << verdict(c.ok) << ' ' << c.detail << '\n';
      if (!c.ok) return kExitMismatch;
    }
    return kExitPass;
  }
  require_n(cfg.n);
  auto method = parse_hilbert_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "'");
  LinearOracleCaps caps{cfg.max_slice_dim};
  BiSeries s = *method == HilbertMethod::linear_oracle ? hilbert_linear_oracle(cfg.n, cfg.tmax, cfg.qmax, caps)
                                                        : hilbert(*method, cfg.n, cfg.qmax, cfg.tmax);
  print_series(s, cfg.format, out);
  return kExitPass;
}

int cmd_groebner(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 1);
  if (cfg.format == OutputFormat::csv) throw UsageError("groebner supports --format table or json");
  GroebnerBasis basis;
  if (cfg.recursive) {
    basis.ambient_n = cfg.n;
    basis.reduced = false;
    basis.gens = recursive_gb(cfg.n).polys();
  } else {
    BuchbergerOptions opts;
    opts.max_basis_size = cfg.max_basis_size;
    auto gens = jet_generators(cfg.n);
    basis = reduce_basis(buchberger(gens, opts));
  }
  if (cfg.census) {
    auto rows = reduced_gb_census(cfg.recursive ? reduce_basis(basis) : basis, cfg.n);
    bool ok = true;
    if (cfg.format == OutputFormat::json) {
      json j = json::array();
      for (const auto& r : rows) {
        j.push_back({{"degree", r.degree}, {"count", r.count}, {"predicted", r.predicted}});
        ok = ok && r.count == r.predicted;
      }
      out << json{{"n", cfg.n}, {"census", j}, {"match", ok}}.dump() << '\n';
    } else {
      out << "degree count predicted\n";
      for (const auto& r : rows) {
        out << r.degree << ' ' << r.count << ' ' << r.predicted << '\n';
        ok = ok && r.count == r.predicted;
      }
      out << verdict(ok) << '\n';
    }
    return ok ? kExitPass : kExitMismatch;
  }
  if (cfg.format == OutputFormat::json) {
    out << basis_to_json(basis) << '\n';
  } else {
    for (const auto& g : basis.gens) out << g.to_string() << '\n';
  }
  return kExitPass;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n);
  BettiTable t = betti_table(cfg.n, cfg.graded);
  if (cfg.format == OutputFormat::json) {
    json ranks = json::array();
    json graded = json::array();
    for (std::size_t i = 0; i < t.ranks.size(); ++i) {
      ranks.push_back(t.ranks[i].get_str());
      if (cfg.graded) graded.push_back(t.graded[i].to_string());
    }
    json j = {{"n", t.n}, {"ranks", ranks}};
    if (cfg.graded) j["graded"] = graded;
    out << j.dump() << '\n';
  } else {
    out << "i rank" << (cfg.graded ? " graded" : "") << '\n';
    for (std::size_t i = 0; i < t.ranks.size(); ++i) {
      out << i << ' ' << t.ranks[i].get_str();
      if (cfg.graded) out << ' ' << t.graded[i].to_string();
      out << '\n';
    }
  }
  if (!cfg.check) return kExitPass;
  CheckResult c = check_betti(cfg.n, cfg.qmax, cfg.tmax);
  out << verdict(c.ok) << ' ' << c.detail << '\n';
  return c.ok ? kExitPass : kExitMismatch;
}

int cmd_syzygy(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg.n, 1);
  auto rep = generation_report(cfg.n, cfg.qmax, cfg.tmax, cfg.drop_nu12, syzygy_caps(cfg));
  if (cfg.format == OutputFormat::json) {
    json slices = json::array();
    for (const auto& s : rep.slices)
      slices.push_back({{"qdeg", s.qdeg}, {"tdeg", s.tdeg}, {"kernel", s.kernel}, {"submodule", s.submodule}});
    out << json{{"n", cfg.n}, {"drop_nu12", cfg.drop_nu12}, {"slices", slices}, {"generated", rep.ok}}.dump() << '\n';
  } else {
    out << "qdeg tdeg kernel submodule\n";
    for (const auto& s : rep.slices)
      if (s.kernel || s.submodule) out << s.qdeg << ' ' << s.tdeg << ' ' << s.kernel << ' ' << s.submodule << '\n';
    out << verdict(rep.ok);
    if (rep.first_mismatch)
      out << " first mismatch at slice (" << rep.first_mismatch->qdeg << ',' << rep.first_mismatch->tdeg << ')';
    out << '\n';
  }
  return rep.ok ? kExitPass : kExitMismatch;
}

int cmd_limit(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  BiSeries fermionic = hilbert_infinity_fermionic(cfg.qmax, cfg.tmax);
  print_series(fermionic, cfg.format == OutputFormat::csv ? OutputFormat::csv : OutputFormat::table, out);
  bool bosonic = hilbert_infinity_bosonic(cfg.qmax, cfg.tmax) == fermionic;
  out << verdict(bosonic) << " bosonic limit equals fermionic limit\n";
  ok = ok && bosonic;
  auto st = stabilization_report(cfg.qmax, cfg.tmax);
  out << verdict(st.ok) << " H_n stabilizes on the window";
  if (st.threshold) out << " from n=" << *st.threshold;
  out << (st.matches_infinity ? " and matches H_inf" : "") << '\n';
  ok = ok && st.ok;
  if (cfg.rr) {
    for (auto which : {RRSpecialization::t_equals_1, RRSpecialization::t_equals_q}) {
      auto r = rr_specialize(which, cfg.qmax);
      out << verdict(r.equal) << " specialization " << to_string(which) << " matches "
          << (r.match ? std::string(to_string(*r.match)) : std::string("no product")) << " to q^" << cfg.qmax << '\n';
      ok = ok && r.equal;
    }
  }
  if (cfg.gb_window) {
    auto g = gb_stabilization_report(*cfg.gb_window);
    out << verdict(g.extra_in_window.empty()) << " reduced basis of I_" << g.n_checked
        << " has no extra leading terms of weight <= " << *cfg.gb_window;
    if (g.threshold) out << " (holds for n >= " << *g.threshold << " up to " << g.n_checked << ")";
    out << '\n';
    for (std::size_t i = 0; i < g.prefixes.size(); ++i) {
      out << verdict(g.prefixes[i].has_value()) << " S(f_" << i + 1 << ", f_" << i + 2 << ") reduces to 0";
      if (g.prefixes[i]) out << " modulo f_1..f_" << *g.prefixes[i];
      out << '\n';
    }
    ok = ok && g.ok;
  }
  return ok ? kExitPass : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  NRange r = cfg.n_range.value_or(NRange{0, 8});
  SyzygyCaps caps = syzygy_caps(cfg);
  caps.max_qdeg = 20;
  caps.max_tdeg = 6;
  std::vector<std::pair<int, std::function<CheckResult(int)>>> steps = {
      {0, [](int n) { return check_hilbert_agreement(n, 30, 15, 15, n <= 6 ? 6 : -1); }},
      {3, [](int n) { return check_census(n); }},
      {1, [](int n) { return check_recursive_basis(n); }},
      {0, [](int n) { return check_betti(n, 30, 15); }},
  };
  for (const auto& [min_n, step] : steps) {
    for (int n = std::max(r.lo, min_n); n <= r.hi; ++n) {
      CheckResult c = step(n);
      out << verdict(c.ok) << ' ' << c.detail << '\n';
      if (!c.ok) return kExitMismatch;
    }
  }
  for (int n = std::max(r.lo, 1); n <= std::min(r.hi, caps.max_n); ++n) {
    CheckResult c = check_syzygy_generation(n, caps.max_qdeg, caps.max_tdeg, caps);
    out << verdict(c.ok) << ' ' << c.detail << '\n';
    if (!c.ok) return kExitMismatch;
  }
  out << "all checks passed\n";
  return kExitPass;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::hilbert: return cmd_hilbert(cfg, out);
    case Command::groebner: return cmd_groebner(cfg, out);
    case Command::betti: return cmd_betti(cfg, out);
    case Command::syzygy_check: return cmd_syzygy(cfg, out);
    case Command::limit: return cmd_limit(cfg, out);
    case Command::verify: return cmd_verify(cfg, out);
  }
  return kExitUsage;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.qmax < 0 || cfg.tmax < 0) throw UsageError("truncation orders must be nonnegative");
    if (cfg.max_slice_dim == 0 || cfg.max_basis_size == 0) throw UsageError("caps must be positive");
    if (cfg.out_path.empty()) return dispatch(cfg, out);
    std::ostringstream buf;
    int code = dispatch(cfg, buf);
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    file << buf.str();
    return code;
  } catch (const ResourceCapExceeded& e) {
    err << "error: resource cap \"" << e.cap() << "\": " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg = default_config();
  CLI::App app{"Jet schemes of the double point: Hilbert series, Gröbner bases, Betti numbers, syzygies"};
  app.name("dpjet");
  app.require_subcommand(1);
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  app.add_option("--max-slice-dim", cfg.max_slice_dim, "Largest linear-algebra slice (env DPJET_MAX_SLICE_DIM)");
  app.add_option("--max-basis-size", cfg.max_basis_size, "Largest Buchberger basis (env DPJET_MAX_BASIS_SIZE)");

  std::string format = "table";
  std::string range;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--qmax", cfg.qmax, "q truncation order");
    sub->add_option("--tmax", cfg.tmax, "t truncation order");
  };

  auto* hil = app.add_subcommand("hilbert", "Bigraded Hilbert series of R_n/I_n");
  hil->add_option("--n", cfg.n, "Number of variables");
  hil->add_option("--method", cfg.method, "recursive, fermionic, bosonic, staircase or linear_oracle");
  hil->add_flag("--verify", cfg.verify, "Compare all methods");
  hil->add_option("--n-range", range, "Range A..B for --verify");
  add_window(hil);
  add_format(hil);

  auto* gb = app.add_subcommand("groebner", "Gröbner bases of I_n");
  gb->add_option("--n", cfg.n)->required();
  bool reduced_flag = false;
  gb->add_flag("--reduced", reduced_flag, "Reduced basis from Buchberger (default)");
  gb->add_flag("--recursive", cfg.recursive, "Recursive basis G_n");
  gb->add_flag("--census", cfg.census, "Count basis elements per degree");
  add_format(gb);

  auto* bet = app.add_subcommand("betti", "Betti numbers of R_n/I_n");
  bet->add_option("--n", cfg.n)->required();
  bet->add_flag("--graded", cfg.graded, "Include (q,t)-graded Betti polynomials");
  bet->add_flag("--check", cfg.check, "Reconcile with recursion, closed form and Hilbert series");
  add_window(bet);
  add_format(bet);

  auto* syz = app.add_subcommand("syzygy-check", "Slice-wise generation check for Ker(phi_n)");
  syz->add_option("--n", cfg.n)->required();
  syz->add_option("--max-q", cfg.qmax, "Largest q-degree");
  syz->add_option("--max-t", cfg.tmax, "Largest t-degree");
  syz->add_option("--max-n", cfg.syzygy_max_n, "Largest n accepted");
  syz->add_flag("--drop-nu12", cfg.drop_nu12, "Omit nu_{1,j} and nu_{2,j}");
  add_format(syz);

  auto* lim = app.add_subcommand("limit", "The n -> infinity limit");
  lim->add_flag("--rr", cfg.rr, "Rogers-Ramanujan specializations");
  int gb_window = -1;
  lim->add_option("--gb-window", gb_window, "Check the reduced basis at infinity within this q-weight");
  add_window(lim);
  add_format(lim);

  auto* ver = app.add_subcommand("verify", "Run the full consistency suite");
  ver->add_option("--n-range", range, "Range A..B (default 0..8)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
  if (*hil) {
    cfg.command = Command::hilbert;
    if (!given(hil, "--qmax")) cfg.qmax = 10;
    if (!given(hil, "--tmax")) cfg.tmax = 5;
  } else if (*gb) {
    cfg.command = Command::groebner;
    if (reduced_flag && cfg.recursive) {
      err << "error: --reduced and --recursive are exclusive\n";
      return kExitUsage;
    }
  } else if (*bet) {
    cfg.command = Command::betti;
    if (!given(bet, "--qmax")) cfg.qmax = 30;
    if (!given(bet, "--tmax")) cfg.tmax = 15;
  } else if (*syz) {
    cfg.command = Command::syzygy_check;
    if (!given(syz, "--max-q")) cfg.qmax = 20;
    if (!given(syz, "--max-t")) cfg.tmax = 6;
  } else if (*lim) {
    cfg.command = Command::limit;
    if (!given(lim, "--qmax")) cfg.qmax = 10;
    if (!given(lim, "--tmax")) cfg.tmax = 5;
    if (gb_window >= 0) cfg.gb_window = gb_window;
  } else {
    cfg.command = Command::verify;
  }
  cfg.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::table;
  if (!range.empty()) {
    cfg.n_range = parse_n_range(range);
    if (!cfg.n_range) {
      err << "error: malformed --n-range '" << range << "' (expected A..B)\n";
      return kExitUsage;
    }
  }
  return run(cfg, out, err);
}

}  // namespace dpjet
