#include "darcais/tables.hpp"

#include <future>
#include <sstream>

#include "darcais/aberth.hpp"
#include "darcais/eta_apps.hpp"
#include "darcais/poly_sequence.hpp"

namespace darcais {

namespace {

const char* kTable1Golden[] = {
    "-1", "231", "-53308", "12301607", "-2838775326", "655088819748",
    "-151171301803544", "34884983226375975", "-8050218792755033557",
    "1857705425589167301906"};

const char* kTable2Golden230[] = {
    "-1.00000000", "1.00434783", "-1.00771267", "1.01106329", "-1.01442438",
    "1.01779663",  "-1.02118009", "1.02457479", "-1.02798078", "1.03139810"};
const char* kTable2Golden232[] = {
    "-1.00000000", "0.99568966", "-0.99041320", "0.98513987", "-0.97989396",
    "0.97467598",  "-0.96948578", "0.96432322", "-0.95918815", "0.95408043"};

const long kTable4Golden[] = {0, 5, 5, 15, 6, 28, 9, 32, 21, 42, 8, 70, 18, 48};

struct Mismatch {
  std::ostringstream diff;
  bool any = false;
  void expect(const std::string& where, const std::string& got, const std::string& want) {
    if (got == want) return;
    any = true;
    diff << where << ": got " << got << ", want " << want << "\n";
  }
};

TableResult table1(long max_n) {
  CoeffTable betas = e4_reciprocal_coeffs(max_n);
  std::ostringstream tsv;
  Mismatch mm;
  tsv << "n\t230^(n-1)\tbeta_n/240\t232^(n-1)\n";
  for (long n = 1; n <= max_n; ++n) {
    Rat value = betas.at(n) / Rat(240);
    tsv << n << "\t" << Rat(230).pow(n - 1).str() << "\t" << value.str() << "\t"
        << Rat(232).pow(n - 1).str() << "\n";
    if (n <= 10)
      mm.expect("row n=" + std::to_string(n), value.str(), kTable1Golden[n - 1]);
  }
  return {tsv.str(), !mm.any, mm.diff.str()};
}

TableResult table2(long max_n) {
  // row m shows beta_{m+1} normalized by 240*230^m and 240*232^m
  long rows = std::min(max_n, static_cast<long>(10));
  SandwichReport rep = beta_sandwich(rows, Rat(230), Rat(232));
  std::ostringstream tsv;
  Mismatch mm;
  tsv << "n\tbeta/(240*230^n)\tbeta/(240*232^n)\n";
  for (const SandwichRow& row : rep.rows) {
    long m = row.n - 1;
    tsv << m << "\t" << row.norm_lo << "\t" << row.norm_hi << "\n";
    if (m <= 9) {
      mm.expect("row n=" + std::to_string(m) + " (230)", row.norm_lo, kTable2Golden230[m]);
      mm.expect("row n=" + std::to_string(m) + " (232)", row.norm_hi, kTable2Golden232[m]);
    }
  }
  return {tsv.str(), !mm.any, mm.diff.str()};
}

TableResult table3() {
  Majorant g1 = builtin_majorant("id", SeriesKind::G1);
  Majorant g2 = builtin_majorant("id", SeriesKind::G2);
  KappaCertificate a = kappa_from(Variant::A, g1, Rat(1, 6));
  KappaCertificate b = kappa_from(Variant::B, g2, Rat(1, 3));
  std::ostringstream tsv;
  tsv << "eps1\tT1\tkappa1\teps2\tT2\tkappa2\n";
  tsv << a.eps.str() << "\t" << a.T.str() << "\t" << a.kappa.str() << "\t" << b.eps.str()
      << "\t" << b.T.str() << "\t" << b.kappa.str() << "\n";
  Mismatch mm;
  mm.expect("eps1", a.eps.str(), "11/25");
  mm.expect("kappa1", a.kappa.str(), "75/7");
  mm.expect("eps2", b.eps.str(), "1/4");
  mm.expect("kappa2", b.kappa.str(), "20/3");
  return {tsv.str(), !mm.any, mm.diff.str()};
}

TableResult table4() {
  std::ostringstream tsv;
  Mismatch mm;
  tsv << "k\t|sigma(k+1)-3sigma(k)|\n";
  for (long k = 1; k <= 14; ++k) {
    Rat v = sigma_diff(k);
    tsv << k << "\t" << v.str() << "\n";
    mm.expect("k=" + std::to_string(k), v.str(), std::to_string(kTable4Golden[k - 1]));
  }
  return {tsv.str(), !mm.any, mm.diff.str()};
}

struct Table5Row {
  std::string min_re;
  long precision_bits = 0;
};

Table5Row min_re_decimal(const PolySequence& seq, long n) {
  RootOptions opts;
  opts.tol = Rat(Int(1), Int(1000000000L));  // 1e-9: decimal rendering is then unambiguous
  RootReport rep = all_roots(seq.poly(n), opts);
  if (rep.min_re.width() > Rat(1, 100000000L))
    throw resource_error("table 5: enclosure too wide at n = " + std::to_string(n));
  return {rep.min_re.mid().decimal(5), rep.precision_bits};
}

TableResult table5(long max_n, long jobs) {
  std::vector<long> ns;
  for (long n = 1; n <= std::min(max_n, static_cast<long>(10)); ++n) ns.push_back(n);
  for (long n : {50L, 100L, 500L, 1000L})
    if (n <= max_n) ns.push_back(n);
  long horizon = ns.empty() ? 0 : ns.back();
  PolySequence seq = build_sequence(ArithFn::sigma(), ArithFn::id(), horizon);

  std::vector<Table5Row> rendered(ns.size());
  if (jobs < 1) jobs = 1;
  for (size_t base = 0; base < ns.size(); base += static_cast<size_t>(jobs)) {
    std::vector<std::future<Table5Row>> batch;
    for (size_t i = base; i < std::min(base + static_cast<size_t>(jobs), ns.size()); ++i)
      batch.push_back(std::async(std::launch::async,
                                 [&seq, n = ns[i]] { return min_re_decimal(seq, n); }));
    for (size_t i = 0; i < batch.size(); ++i) rendered[base + i] = batch[i].get();
  }

  std::ostringstream tsv;
  Mismatch mm;
  tsv << "n\tmin_re\tmethod\tprecision_bits\n";
  for (size_t i = 0; i < ns.size(); ++i) {
    tsv << ns[i] << "\t" << rendered[i].min_re << "\taberth\t" << rendered[i].precision_bits
        << "\n";
    for (const auto& [gn, gv] : table5_golden())
      if (gn == ns[i]) mm.expect("n=" + std::to_string(gn), rendered[i].min_re, gv);
  }
  return {tsv.str(), !mm.any, mm.diff.str()};
}

}  // namespace

const std::vector<std::pair<long, std::string>>& table5_golden() {
  static const std::vector<std::pair<long, std::string>> golden = {
      {1, "0.00000"},      {2, "-3.00000"},    {3, "-8.00000"},   {4, "-14.00000"},
      {5, "-20.61187"},    {6, "-27.64001"},   {7, "-34.97153"},  {8, "-42.53511"},
      {9, "-50.28267"},    {10, "-58.18014"},  {50, "-410.63656"}, {100, "-874.47135"},
      {500, "-4687.67815"}, {1000, "-9501.75903"}};
  return golden;
}

TableResult make_table(int which, long max_n, long jobs) {
  switch (which) {
    case 1: return table1(std::max(max_n, 10L));
    case 2: return table2(std::max(max_n, 10L));
    case 3: return table3();
    case 4: return table4();
    case 5: return table5(max_n, jobs);
    default: throw domain_error("make_table: table id must be 1..5");
  }
}

}  // namespace darcais
