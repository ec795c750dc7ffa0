#include "darcais/majorant.hpp"

namespace darcais {

long series_k_min(SeriesKind kind) { return kind == SeriesKind::G1 ? 1 : 2; }

Rat series_term(const ArithFn& g, SeriesKind kind, long k) {
  if (kind == SeriesKind::G1) {
    if (k < 1) throw domain_error("series_term: G1 starts at k = 1");
    return g.eval(k + 1).abs();
  }
  if (k < 2) throw domain_error("series_term: G2 starts at k = 2");
  return (g.eval(k + 1) - g.eval(2) * g.eval(k)).abs();
}

namespace {

Rat tail_term(const Majorant& m, long k) {
  Int top(k + m.tail_shift);
  if (sgn(top) < 0) throw domain_error("Majorant: negative binomial top");
  return m.tail_amp * Rat(binomial(top, static_cast<unsigned long>(m.tail_deg)));
}

}  // namespace

Majorant make_majorant(ArithFn g, SeriesKind kind, Rat tail_amp, long tail_deg,
                       long tail_shift, long tail_start, long verified_horizon) {
  Majorant m;
  m.kind = kind;
  m.g_name = g.name();
  m.g = std::move(g);
  m.tail_amp = std::move(tail_amp);
  m.tail_deg = tail_deg;
  m.tail_shift = tail_shift;
  m.tail_start = tail_start;
  m.verified_horizon = verified_horizon;
  if (m.tail_amp.sign() < 0) throw domain_error("Majorant: negative tail amplitude");
  if (tail_deg < 0) throw domain_error("Majorant: negative tail degree");
  if (tail_start < m.k_min()) throw domain_error("Majorant: tail starts before the series");
  if (tail_start + tail_shift - tail_deg < 0)
    throw domain_error("Majorant: tail closed form needs K + e - d >= 0");

  for (long k = m.k_min(); k < tail_start; ++k)
    m.head.push_back(series_term(m.g, kind, k));
  for (long k = tail_start; k <= verified_horizon; ++k) {
    if (series_term(m.g, kind, k) > tail_term(m, k))
      throw domain_error("Majorant for '" + m.g_name + "': tail bound fails at k = " +
                         std::to_string(k));
  }
  return m;
}

Majorant builtin_majorant(const std::string& g_name, SeriesKind kind,
                          std::optional<long> head_len) {
  // Tail data per function: sigma fits under C(k+2,2)-type tails, sigma3
  // under C(k+3,3)-type, id and one have exact binomial-term series.
  if (g_name == "sigma") {
    if (kind == SeriesKind::G1)
      return make_majorant(ArithFn::sigma(), kind, Rat(1), 2, 2, head_len.value_or(12));
    return make_majorant(ArithFn::sigma(), kind, Rat(4), 2, 2, head_len.value_or(8));
  }
  if (g_name == "sigma3") {
    if (kind == SeriesKind::G1)
      return make_majorant(ArithFn::sigma3(), kind, Rat(9), 3, 3, head_len.value_or(3));
    return make_majorant(ArithFn::sigma3(), kind, Rat(90), 3, 3, head_len.value_or(5));
  }
  if (g_name == "id") {
    if (kind == SeriesKind::G1)  // terms k+1 exactly: G1 = 1/(1-T)^2 - 1
      return make_majorant(ArithFn::id(), kind, Rat(1), 1, 1, head_len.value_or(1));
    // terms k-1 exactly: G2 = T^2/(1-T)^2
    return make_majorant(ArithFn::id(), kind, Rat(1), 1, -1, head_len.value_or(2));
  }
  if (g_name == "one") {
    if (kind == SeriesKind::G1)  // terms are all 1: G1 = T/(1-T)
      return make_majorant(ArithFn::one(), kind, Rat(1), 0, 0, head_len.value_or(1));
    // g(k+1) - g(2)g(k) = 0: G2 is identically zero
    return make_majorant(ArithFn::one(), kind, Rat(0), 0, 0, head_len.value_or(2));
  }
  throw domain_error("no built-in majorant for '" + g_name +
                     "' (supply tail data via make_majorant)");
}

Rat majorant_eval(const Majorant& m, const Rat& T) {
  if (T.sign() <= 0 || T >= Rat(1))
    throw domain_error("majorant_eval: T must lie in (0, 1)");
  Rat value(0);
  Rat tpow = T.pow(m.k_min());
  for (const Rat& c : m.head) {
    value += c * tpow;
    tpow *= T;
  }
  if (m.tail_amp.is_zero()) return value;

  // sum_{k>=K} A C(k+e, d) T^k = A T^(d-e) [ (1-T)^-(d+1) - sum_{j<K+e-d} C(j+d,d) T^j ]
  const long d = m.tail_deg, e = m.tail_shift, K = m.tail_start;
  Rat geo = (Rat(1) - T).pow(-(d + 1));
  Rat partial(0);
  Rat tj(1);
  for (long j = 0; j < K + e - d; ++j) {
    partial += Rat(binomial(Int(j + d), static_cast<unsigned long>(d))) * tj;
    tj *= T;
  }
  value += m.tail_amp * T.pow(d - e) * (geo - partial);
  return value;
}

}  // namespace darcais
