// darcais: exact recurrence polynomials P_n attached to arithmetic-function
// pairs (g, h), certified non-vanishing radii, certified zeros, and the
// reference tables. Subcommands: poly, kappa, tables, verify, zeros.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "darcais/aberth.hpp"
#include "darcais/eta_apps.hpp"
#include "darcais/growth.hpp"
#include "darcais/oracles.hpp"
#include "darcais/sturm.hpp"
#include "darcais/tables.hpp"

using namespace darcais;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTableMismatch = 4;

struct GlobalOpts {
  std::string format = "tsv";  // tsv | json
  std::string out;
  long jobs = 1;
  long precision = 128;
  std::string tol = "1/10000000";
};

void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw domain_error("cannot open output path '" + g.out + "'");
  os << payload;
  if (!payload.empty() && payload.back() != '\n') os << "\n";
}

// "--g sigma" picks a built-in; "--g @weights.json" loads a finite table:
// {"name": "...", "values": ["1", "3/2", ...], "normalized": true,
//  "monotone_positive": false}
ArithFn select_fn(const std::string& sel) {
  if (sel.empty() || sel[0] != '@') return ArithFn::by_name(sel);
  std::ifstream is(sel.substr(1));
  if (!is) throw domain_error("cannot read function file '" + sel.substr(1) + "'");
  nlohmann::json j = nlohmann::json::parse(is);
  std::vector<Rat> values;
  for (const auto& v : j.at("values")) values.push_back(Rat::parse(v.get<std::string>()));
  return ArithFn::custom(j.value("name", std::string("custom")), std::move(values),
                         j.value("normalized", false), j.value("monotone_positive", false));
}

Majorant majorant_for(const ArithFn& g, Variant variant, std::optional<long> head_len) {
  return builtin_majorant(g.name(), variant_series(variant), head_len);
}

int cmd_poly(const GlobalOpts& g, const std::string& gsel, const std::string& hsel, long n,
             const std::string& eval_at, bool whole_sequence) {
  PolySequence seq = build_sequence(select_fn(gsel), select_fn(hsel), n);
  if (!eval_at.empty()) {
    Rat x = Rat::parse(eval_at);
    emit(g, seq.eval(n, x).str());
    return 0;
  }
  std::ostringstream os;
  long from = whole_sequence ? 0 : n;
  if (g.format == "json") {
    os << "[";
    for (long m = from; m <= n; ++m) os << (m > from ? ",\n " : "") << seq.poly(m).json();
    os << "]";
  } else {
    os << "n\tk\tcoeff\n";
    for (long m = from; m <= n; ++m) {
      const RationalPoly& p = seq.poly(m);
      for (long k = 0; k <= p.degree(); ++k)
        os << m << "\t" << k << "\t" << p.coeff(k).str() << "\n";
    }
  }
  emit(g, os.str());
  return 0;
}

// the published (T, eps) pairs per function and variant
void legacy_pair(const std::string& gname, Variant variant, std::string& T, std::string& eps) {
  if (gname == "sigma" && variant == Variant::B) { T = "2/11"; eps = "3/14"; return; }
  if (gname == "sigma3" && variant == Variant::A) { T = "87/20000"; eps = "1/25"; return; }
  if (gname == "sigma3" && variant == Variant::B) { T = "87/20000"; eps = "1/982"; return; }
  if (gname == "id" && variant == Variant::A) { T = "1/6"; eps = "11/25"; return; }
  if (gname == "id" && variant == Variant::B) { T = "1/3"; eps = "1/4"; return; }
  throw domain_error("kappa: no published (eps, T) pair for " + gname + "/" +
                     variant_name(variant));
}

int cmd_kappa(const GlobalOpts& g, const std::string& gsel, const std::string& variant_s,
              std::string T_s, std::string eps_s, bool optimize, bool legacy_eps,
              long grid_points, std::optional<long> head_len) {
  ArithFn fn = select_fn(gsel);
  Variant variant = variant_s == "A" ? Variant::A : Variant::B;
  Majorant m = majorant_for(fn, variant, head_len);
  KappaCertificate cert;
  if (legacy_eps) legacy_pair(fn.name(), variant, T_s, eps_s);
  if (optimize) {
    GridSpec spec;
    spec.points = grid_points;
    cert = optimize_kappa(variant, m, spec);
  } else {
    if (T_s.empty()) throw domain_error("kappa: need --T, --legacy-eps, or --optimize");
    Rat T = Rat::parse_fraction_only(T_s);
    std::optional<Rat> eps;
    if (!eps_s.empty()) eps = Rat::parse_fraction_only(eps_s);
    cert = kappa_from(variant, m, T, eps);
  }
  emit(g, cert.json());
  return 0;
}

std::string tsv_as_json(const std::string& tsv) {
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::istringstream is(tsv);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      row.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (header) {
      columns = std::move(row);
      header = false;
    } else {
      rows.push_back(std::move(row));
    }
  }
  nlohmann::ordered_json out;
  out["columns"] = std::move(columns);
  out["rows"] = std::move(rows);
  return out.dump(2);
}

int cmd_tables(const GlobalOpts& g, int which, long max_n) {
  TableResult r = make_table(which, max_n, g.jobs);
  emit(g, g.format == "json" ? tsv_as_json(r.tsv) : r.tsv);
  if (!r.matches) {
    std::cerr << "table " << which << " mismatch:\n" << r.diff;
    return kExitTableMismatch;
  }
  return 0;
}

int cmd_zeros(const GlobalOpts& g, const std::string& gsel, const std::string& hsel, long n,
              const std::string& method) {
  PolySequence seq = build_sequence(select_fn(gsel), select_fn(hsel), n);
  const RationalPoly& p = seq.poly(n);
  Rat tol = Rat::parse_fraction_only(g.tol);
  if (method == "sturm") {
    // real roots only, exactly isolated then refined
    auto intervals = isolate_real_roots(p);
    std::ostringstream os;
    if (g.format == "json") {
      os << "{\"n\": " << n << ", \"method\": \"sturm\", \"real_roots\": [\n";
      for (size_t i = 0; i < intervals.size(); ++i) {
        IsolatingInterval r = refine_root(p, intervals[i], tol);
        os << "  {\"lo\": \"" << r.lo.str() << "\", \"hi\": \"" << r.hi.str() << "\"}"
           << (i + 1 < intervals.size() ? "," : "") << "\n";
      }
      os << "]}";
    } else {
      os << "lo\thi\n";
      for (const auto& iv : intervals) {
        IsolatingInterval r = refine_root(p, iv, tol);
        os << r.lo.str() << "\t" << r.hi.str() << "\n";
      }
    }
    emit(g, os.str());
    return 0;
  }
  RootOptions opts;
  opts.start_precision = g.precision;
  opts.tol = tol;
  RootReport rep = all_roots(p, opts);
  if (g.format == "json") {
    emit(g, rep.json());
  } else {
    std::ostringstream os;
    os << "re\tim\trad\n";
    for (const auto& r : rep.roots)
      os << r.re.str() << "\t" << r.im.str() << "\t" << r.rad.str() << "\n";
    os << "min_re\t" << rep.min_re.lo.str() << "\t" << rep.min_re.hi.str() << "\n";
    os << "max_mod\t" << rep.max_mod.lo.str() << "\t" << rep.max_mod.hi.str() << "\n";
    emit(g, os.str());
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::string gsel = "sigma";
  std::string kappa_s, T_s, eps_s, variant_s = "B";
  long max_n = -1;
  bool legacy = false;
};

// (variant, T, eps) defaults per built-in g, matching the shipped certificates
void default_cert_params(const std::string& gname, std::string& variant, std::string& T,
                         std::string& eps) {
  if (!T.empty()) return;
  if (gname == "sigma") { T = "2/11"; if (eps.empty()) eps = "3/14"; }
  else if (gname == "id") { T = variant == "A" ? "1/6" : "1/3"; }
  else if (gname == "sigma3") { T = "87/20000"; if (eps.empty()) eps = variant == "A" ? "1/25" : "1/982"; }
  else if (gname == "one") { T = "1/2"; if (eps.empty()) eps = "1/10"; }
  else throw domain_error("verify: no default certificate for '" + gname + "'; pass --T/--eps");
}

struct VerifyReport {
  struct Line { bool ok; std::string what; };
  std::vector<Line> lines;
  bool pass = true;
  void add(bool ok, std::string what) {
    pass = pass && ok;
    lines.push_back({ok, std::move(what)});
  }
  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "json") {
      os << "{\n  \"pass\": " << (pass ? "true" : "false") << ",\n  \"checks\": [\n";
      for (size_t i = 0; i < lines.size(); ++i) {
        std::string esc;
        for (char c : lines[i].what) {
          if (c == '"' || c == '\\') esc += '\\';
          esc += c;
        }
        os << "    {\"ok\": " << (lines[i].ok ? "true" : "false") << ", \"what\": \"" << esc
           << "\"}" << (i + 1 < lines.size() ? "," : "") << "\n";
      }
      os << "  ]\n}";
      return os.str();
    }
    for (const auto& l : lines) os << (l.ok ? "ok" : "FAIL") << "\t" << l.what << "\n";
    return os.str();
  }
};

int cmd_verify(const GlobalOpts& g, VerifyArgs a) {
  VerifyReport report;

  if (a.suite == "oracles") {
    long max_n = a.max_n < 0 ? 12 : a.max_n;
    PolySequence sig = build_sequence(ArithFn::sigma(), ArithFn::id(), std::min(max_n, 20L));
    bool ok_no = true;
    for (long n = 0; n <= std::min(max_n, 20L); ++n)
      ok_no = ok_no && oracles::nekrasov_okounkov_poly(n) == sig.poly(n);
    report.add(ok_no, "hook-length sum vs sigma/id recurrence, n <= " +
                          std::to_string(std::min(max_n, 20L)));
    for (const char* name : {"sigma", "id", "sigma3", "one"}) {
      ArithFn fn = ArithFn::by_name(name);
      long N = a.max_n < 0 ? 30 : a.max_n;
      PolySequence pid = build_sequence(fn, ArithFn::id(), N);
      PolySequence pone = build_sequence(fn, ArithFn::one(), N);
      bool okx = true, okr = true;
      for (long n = 0; n <= N; ++n) {
        okx = okx && oracles::exp_series_poly(fn, n) == pid.poly(n);
        okr = okr && oracles::reciprocal_series_poly(fn, n) == pone.poly(n);
      }
      report.add(okx, std::string("exp-series oracle vs ") + name + "/id");
      report.add(okr, std::string("reciprocal-series oracle vs ") + name + "/one");
    }
    long toy_n = a.max_n < 0 ? 100 : a.max_n;
    for (ArithFn h : {ArithFn::id(), ArithFn::one(), ArithFn::squares()}) {
      PolySequence seq = build_sequence(ArithFn::one(), h, toy_n);
      bool ok = true;
      for (long n = 0; n <= toy_n; ++n) ok = ok && oracles::toy_closed_form(h, n) == seq.poly(n);
      report.add(ok, "toy closed form vs one/" + h.name() + ", n <= " + std::to_string(toy_n));
    }
  } else if (a.suite == "growth") {
    ArithFn fn = select_fn(a.gsel);
    default_cert_params(fn.name(), a.variant_s, a.T_s, a.eps_s);
    Variant variant = a.variant_s == "A" ? Variant::A : Variant::B;
    Majorant m = majorant_for(fn, variant, std::nullopt);
    std::optional<Rat> eps;
    if (!a.eps_s.empty()) eps = Rat::parse_fraction_only(a.eps_s);
    KappaCertificate cert = kappa_from(variant, m, Rat::parse_fraction_only(a.T_s), eps);
    if (!a.kappa_s.empty() && cert.kappa != Rat::parse_fraction_only(a.kappa_s))
      throw domain_error("verify growth: certificate kappa is " + cert.kappa.str() +
                         ", not the requested " + a.kappa_s);
    long N = a.max_n < 0 ? 30 : a.max_n;
    for (const char* hname : {"id", "one"}) {
      PolySequence seq = build_sequence(fn, ArithFn::by_name(hname), N);
      GrowthReport rep = verify_growth(seq, cert, 1, N);
      report.add(rep.all_pass(), "growth bounds (" + fn.name() + ", " + hname +
                                     "), kappa = " + cert.kappa.str() + ", n <= " +
                                     std::to_string(N));
      for (const auto& c : rep.checks)
        if (!c.pass)
          report.add(false, "  n=" + std::to_string(c.n) + " angle=" + c.angle + " delta=" +
                                c.delta.str() + " check=" + growth_check_name(c.check) + " (" +
                                c.detail + ")");
    }
    if (a.legacy && fn.name() == "sigma") {
      Majorant g1 = builtin_majorant("sigma", SeriesKind::G1);
      bool feasible = majorant_eval(g1, Rat(2, 15)) <= Rat(1, 2);
      PolySequence seq = build_sequence(fn, ArithFn::id(), N);
      GrowthReport rep = verify_growth_half_sandwich(seq, Rat(15), 1, N);
      report.add(feasible && rep.all_pass(),
                 "legacy kappa=15 two-sided bound (sigma, id), n <= " + std::to_string(N));
    }
  } else if (a.suite == "zero-free") {
    ArithFn fn = select_fn(a.gsel);
    default_cert_params(fn.name(), a.variant_s, a.T_s, a.eps_s);
    Variant variant = a.variant_s == "A" ? Variant::A : Variant::B;
    std::optional<Rat> eps;
    if (!a.eps_s.empty()) eps = Rat::parse_fraction_only(a.eps_s);
    KappaCertificate cert =
        kappa_from(variant, majorant_for(fn, variant, std::nullopt),
                   Rat::parse_fraction_only(a.T_s), eps);
    long N = a.max_n < 0 ? 60 : a.max_n;
    PolySequence seq = build_sequence(fn, ArithFn::id(), N);
    bool all_ok = true;
    for (long n = 1; n <= N; ++n) {
      Rat ratio;
      RootReport rep = all_roots(seq.poly(n));
      bool ok = verify_zero_free(rep, cert, seq.h(), &ratio);
      all_ok = all_ok && ok;
      report.add(ok, "n=" + std::to_string(n) + " max_mod_ub=" + rep.max_mod.hi.decimal(5) +
                         " ratio=" + ratio.decimal(5));
    }
    report.add(all_ok, "all root moduli below kappa h(n-1), kappa = " + cert.kappa.str());
  } else if (a.suite == "majorants") {
    for (const char* name : {"sigma", "sigma3", "id", "one"}) {
      for (SeriesKind kind : {SeriesKind::G1, SeriesKind::G2}) {
        Majorant m = builtin_majorant(name, kind);  // construction verifies the horizon
        Rat prev(-1);
        bool mono = true;
        for (long i = 1; i <= 24; ++i) {
          Rat v = majorant_eval(m, Rat(i, 25));
          mono = mono && v >= prev;
          prev = v;
        }
        report.add(mono, std::string("majorant ") + name + "/" +
                             (kind == SeriesKind::G1 ? "G1" : "G2") + ": horizon " +
                             std::to_string(m.verified_horizon) + " verified, monotone on grid");
      }
    }
  } else {
    throw domain_error("verify: unknown suite '" + a.suite + "'");
  }

  emit(g, report.render(g.format));
  return report.pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact recurrence polynomials, certified kappa radii, certified zeros"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // frees -h/--h for the normalizer option
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--out", g.out, "write output to this path instead of stdout");
  app.add_option("--jobs", g.jobs, "worker cap for parallel sections")->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "working precision in bits")
      ->check(CLI::Range(53L, 1L << 20));
  app.add_option("--tol", g.tol, "tolerance as an exact rational num/den");

  auto* poly = app.add_subcommand("poly", "build P_n and print coefficients or evaluations");
  poly->set_help_flag("--help", "print help");
  poly->fallthrough();
  std::string gsel = "sigma", hsel = "id", eval_at;
  long n = 0;
  bool whole_sequence = false;
  poly->add_option("--g", gsel, "weight function: one|id|sigma|sigma3|squares|sigma_k:<k>|@file");
  poly->add_option("--h", hsel, "normalizer function, same selectors");
  poly->add_option("--n", n, "index")->required();
  poly->add_option("--eval", eval_at, "evaluate P_n at this exact rational");
  poly->add_flag("--seq", whole_sequence, "print P_0..P_n, not just P_n");

  auto* kap = app.add_subcommand("kappa", "produce a non-vanishing radius certificate");
  kap->set_help_flag("--help", "print help");
  kap->fallthrough();
  std::string variant_s = "B", T_s, eps_s;
  bool optimize = false, legacy_eps = false;
  long grid_points = 64;
  long head_len_opt = -1;
  kap->add_option("--g", gsel, "weight function");
  kap->add_option("--variant", variant_s, "A (G1-based) or B (G2-based)")
      ->check(CLI::IsMember({"A", "B"}));
  kap->add_option("--T", T_s, "exact rational T in (0,1)");
  kap->add_option("--eps", eps_s, "exact rational eps override (legacy pairs)");
  kap->add_flag("--optimize", optimize, "scan for the smallest kappa instead of fixing T");
  kap->add_flag("--legacy-eps", legacy_eps, "use the published (eps, T) pair for this g/variant");
  kap->add_option("--grid", grid_points, "grid resolution for --optimize");
  kap->add_option("--head-len", head_len_opt, "exact head length of the majorant");

  auto* tab = app.add_subcommand("tables", "regenerate a reference table and diff it");
  tab->set_help_flag("--help", "print help");
  tab->fallthrough();
  int which = 0;
  long max_n = 10;
  tab->add_option("--which", which, "table id 1..5")->required()->check(CLI::Range(1, 5));
  tab->add_option("--max-n", max_n, "row horizon where applicable");

  auto* ver = app.add_subcommand("verify", "run an invariant suite");
  ver->set_help_flag("--help", "print help");
  ver->fallthrough();
  VerifyArgs va;
  ver->add_option("--suite", va.suite, "oracles|growth|zero-free|majorants")->required();
  ver->add_option("--g", va.gsel, "weight function for growth/zero-free");
  ver->add_option("--kappa", va.kappa_s, "expected kappa (exact rational), sanity pin");
  ver->add_option("--T", va.T_s, "certificate T override");
  ver->add_option("--eps", va.eps_s, "certificate eps override");
  ver->add_option("--variant", va.variant_s, "certificate variant")
      ->check(CLI::IsMember({"A", "B"}));
  ver->add_option("--max-n", va.max_n, "horizon override");
  ver->add_flag("--legacy", va.legacy, "also check the kappa=15 two-sided bound");

  auto* zer = app.add_subcommand("zeros", "locate zeros with certified enclosures");
  zer->set_help_flag("--help", "print help");
  zer->fallthrough();
  std::string method = "aberth";
  zer->add_option("--g", gsel, "weight function");
  zer->add_option("--h", hsel, "normalizer function");
  zer->add_option("--n", n, "index")->required();
  zer->add_option("--method", method, "aberth (all roots) or sturm (real roots)")
      ->check(CLI::IsMember({"aberth", "sturm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (poly->parsed()) return cmd_poly(g, gsel, hsel, n, eval_at, whole_sequence);
    if (kap->parsed())
      return cmd_kappa(g, gsel, variant_s, T_s, eps_s, optimize, legacy_eps, grid_points,
                       head_len_opt < 0 ? std::nullopt : std::optional<long>(head_len_opt));
    if (tab->parsed()) return cmd_tables(g, which, max_n);
    if (ver->parsed()) return cmd_verify(g, va);
    if (zer->parsed()) return cmd_zeros(g, gsel, hsel, n, method);
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
