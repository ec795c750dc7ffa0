#include "darcais/kappa.hpp"

#include <sstream>

namespace darcais {

std::string variant_name(Variant v) { return v == Variant::A ? "A" : "B"; }
SeriesKind variant_series(Variant v) {
  return v == Variant::A ? SeriesKind::G1 : SeriesKind::G2;
}

std::string KappaCertificate::json() const {
  std::ostringstream os;
  os << "{\n";
  os << "  \"variant\": \"" << variant_name(variant) << "\",\n";
  os << "  \"g\": \"" << g_name << "\",\n";
  os << "  \"T\": \"" << T.str() << "\",\n";
  os << "  \"eps\": \"" << eps.str() << "\",\n";
  os << "  \"g_bound\": \"" << g_bound.str() << "\",\n";
  os << "  \"eps_overridden\": " << (eps_overridden ? "true" : "false") << ",\n";
  os << "  \"kappa\": \"" << kappa.str() << "\",\n";
  os << "  \"kappa_decimal\": \"" << kappa.decimal(6) << "\",\n";
  os << "  \"majorant\": {\"kind\": \"" << (majorant.kind == SeriesKind::G1 ? "G1" : "G2")
     << "\", \"head_len\": " << majorant.head.size()
     << ", \"tail_amp\": \"" << majorant.tail_amp.str()
     << "\", \"tail_deg\": " << majorant.tail_deg
     << ", \"tail_shift\": " << majorant.tail_shift
     << ", \"tail_start\": " << majorant.tail_start
     << ", \"verified_horizon\": " << majorant.verified_horizon << "}\n";
  os << "}";
  return os.str();
}

KappaCertificate kappa_from(Variant variant, const Majorant& m, const Rat& T,
                            std::optional<Rat> eps_override) {
  if (m.kind != variant_series(variant))
    throw domain_error("kappa_from: variant " + variant_name(variant) +
                       " needs a " + (variant == Variant::A ? "G1" : "G2") + " majorant");
  Rat bound = majorant_eval(m, T);
  if (bound >= Rat(1))
    throw infeasible_error("kappa_from: majorant value " + bound.str() +
                           " at T = " + T.str() + " is not below 1");
  Rat eps = eps_override.value_or(bound);
  if (eps < bound)
    throw infeasible_error("kappa_from: eps override " + eps.str() +
                           " is below the certified bound " + bound.str());
  if (eps >= Rat(1)) throw infeasible_error("kappa_from: eps must be < 1");

  KappaCertificate cert;
  cert.variant = variant;
  cert.g_name = m.g_name;
  cert.T = T;
  cert.eps = eps;
  cert.g_bound = bound;
  cert.majorant = m;
  cert.eps_overridden = eps_override.has_value();
  if (variant == Variant::A) {
    cert.kappa = ((Rat(1) - eps) * T).inverse();
  } else {
    cert.kappa = (T.inverse() + m.g.eval(2).abs()) / (Rat(1) - eps);
  }
  return cert;
}

KappaCertificate optimize_kappa(Variant variant, const Majorant& m, const GridSpec& grid) {
  if (grid.points < 4) throw domain_error("optimize_kappa: grid too coarse");
  std::optional<KappaCertificate> best;
  Rat lo(0), hi(1);
  for (long round = 0; round < grid.max_rounds; ++round) {
    Rat step = (hi - lo) / Rat(grid.points + 1);
    if (step.is_zero()) break;
    std::optional<KappaCertificate> round_best;
    for (long i = 1; i <= grid.points; ++i) {
      Rat T = lo + step * Rat(i);
      if (T.sign() <= 0 || T >= Rat(1)) continue;
      if (majorant_eval(m, T) >= Rat(1)) continue;
      KappaCertificate cand = kappa_from(variant, m, T);
      if (!round_best || cand.kappa < round_best->kappa ||
          (cand.kappa == round_best->kappa && cand.T < round_best->T))
        round_best = std::move(cand);
    }
    if (!round_best) {
      if (best) break;
      throw infeasible_error("optimize_kappa: no feasible T on the grid");
    }
    Rat previous = best ? best->kappa : Rat(0);
    bool had_best = best.has_value();
    if (!best || round_best->kappa < best->kappa ||
        (round_best->kappa == best->kappa && round_best->T < best->T))
      best = std::move(round_best);
    // shrink the window around the incumbent and go again
    Rat radius = step * 2;
    lo = best->T - radius;
    if (lo.sign() <= 0) lo = step / Rat(grid.points);
    hi = best->T + radius;
    if (hi >= Rat(1)) hi = (best->T + Rat(1)) / 2;
    if (had_best && previous - best->kappa <= previous * grid.rel_tol) break;
  }
  return *best;
}

RatInterval lower_bound(Variant variant, const ArithFn& g, std::optional<Rat> eps) {
  Rat g2 = g.eval(2).abs();
  if (eps && (eps->sign() <= 0 || *eps >= Rat(1)))
    throw domain_error("lower_bound: eps must lie in (0, 1)");
  if (variant == Variant::A) {
    if (eps) return RatInterval(g2 / ((Rat(1) - *eps) * *eps));
    return RatInterval(Rat(4) * g2);
  }
  Rat s = (g.eval(2) * g.eval(2) - g.eval(3)).abs();
  if (eps) {
    RatInterval root = sqrt_enclosure(s / *eps);
    Rat denom = Rat(1) - *eps;
    return RatInterval((root.lo + g2) / denom, (root.hi + g2) / denom);
  }
  RatInterval root = sqrt_enclosure(Rat(3) * s);
  return RatInterval(Rat(3, 2) * root.lo + g2, Rat(3, 2) * root.hi + g2);
}

AbComparison compare_a_b(const Majorant& m1, const Majorant& m2, const Rat& T,
                         std::optional<Rat> eps1_override, std::optional<Rat> eps2_override) {
  if (m1.kind != SeriesKind::G1 || m2.kind != SeriesKind::G2)
    throw domain_error("compare_a_b: expects (G1, G2) majorants");
  if (m1.g_name != m2.g_name)
    throw domain_error("compare_a_b: majorants bound different functions");

  AbComparison r;
  r.T = T;
  KappaCertificate c1 = kappa_from(Variant::A, m1, T, eps1_override);
  r.eps1 = c1.eps;
  r.kappa1 = c1.kappa;

  Rat g2 = m1.g.eval(2).abs();
  // eps2 from eps1 via G2(T) <= (1 + |g(2)| T) G1(T) - |g(2)| T
  r.eps2_chain = (Rat(1) + g2 * T) * r.eps1 - g2 * T;
  if (r.eps2_chain >= Rat(1))
    throw infeasible_error("compare_a_b: chain eps2 not below 1 at T = " + T.str());
  r.kappa2_chain = (T.inverse() + g2) / (Rat(1) - r.eps2_chain);
  r.chain_holds = r.kappa2_chain <= r.kappa1;

  KappaCertificate c2 = kappa_from(Variant::B, m2, T, eps2_override);
  r.eps2 = c2.eps;
  r.kappa2 = c2.kappa;
  r.b_not_worse = r.kappa2 <= r.kappa1;
  return r;
}

}  // namespace darcais
