#include "darcais/arith_fn.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "darcais/bigfloat.hpp"

namespace darcais {

namespace {

Int sigma_k_int(long n, long k) {
  // trial division with divisor pairing; horizons are small enough that
  // anything smarter would be noise
  Int total = 0;
  for (long d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    total += int_pow(Int(d), static_cast<unsigned long>(k));
    long e = n / d;
    if (e != d) total += int_pow(Int(e), static_cast<unsigned long>(k));
  }
  return total;
}

std::mutex g_sigma_mutex;
std::map<std::pair<long, long>, Rat> g_sigma_cache;

}  // namespace

Rat sigma_k(long n, long k) {
  if (n < 1) throw domain_error("sigma_k: n must be >= 1");
  if (k < 0) throw domain_error("sigma_k: k must be >= 0");
  std::lock_guard lock(g_sigma_mutex);
  auto key = std::make_pair(k, n);
  auto it = g_sigma_cache.find(key);
  if (it != g_sigma_cache.end()) return it->second;
  Rat v(sigma_k_int(n, k));
  g_sigma_cache.emplace(key, v);
  return v;
}

Rat sigma_diff(long k) {
  if (k < 1) throw domain_error("sigma_diff: k must be >= 1");
  return (sigma_k(k + 1, 1) - Rat(3) * sigma_k(k, 1)).abs();
}

Rat ln_lower_bound(long n) {
  if (n < 1) throw domain_error("ln_lower_bound: n must be >= 1");
  if (n == 1) return Rat(0);
  BigFloat v = BigFloat::ln(BigFloat::from_long(n, 128), 128, MPFR_RNDD);
  return v.to_rat();
}

struct ArithFn::Impl {
  std::function<Rat(long)> eval;
  long horizon = -1;  // -1: unbounded
  // contract-check cache
  mutable std::mutex mu;
  mutable long monotone_checked = 0;
  mutable long integer_checked = 0;
  mutable bool integer_ok = true;
  mutable Rat last_value;  // value at monotone_checked, for the chain check
};

ArithFn::ArithFn(std::string name, std::shared_ptr<Impl> impl, bool normalized, bool monotone)
    : name_(std::move(name)), impl_(std::move(impl)), normalized_(normalized),
      monotone_positive_(monotone) {
  if (normalized_ && eval(1) != Rat(1))
    throw domain_error("ArithFn '" + name_ + "': declared normalized but g(1) != 1");
}

Rat ArithFn::eval(long n) const {
  if (!impl_) throw domain_error("ArithFn: empty");
  if (n == 0) return Rat(0);  // h(0) := 0 extension
  if (n < 0) throw domain_error("ArithFn '" + name_ + "': negative index");
  if (impl_->horizon >= 0 && n > impl_->horizon)
    throw resource_error("ArithFn '" + name_ + "': index " + std::to_string(n) +
                         " beyond horizon " + std::to_string(impl_->horizon));
  return impl_->eval(n);
}

void ArithFn::require_monotone_positive(long horizon) const {
  if (!monotone_positive_)
    throw domain_error("ArithFn '" + name_ + "': not declared monotone-positive");
  std::lock_guard lock(impl_->mu);
  if (impl_->monotone_checked >= horizon) return;
  long start = impl_->monotone_checked + 1;
  Rat prev = start > 1 ? impl_->last_value : Rat(0);
  for (long j = start; j <= horizon; ++j) {
    Rat v = impl_->eval(j);
    if (v.sign() <= 0)
      throw domain_error("ArithFn '" + name_ + "': value at index " + std::to_string(j) +
                         " is not positive");
    if (j > 1 && v < prev)
      throw domain_error("ArithFn '" + name_ + "': value decreases at index " + std::to_string(j));
    prev = v;
  }
  impl_->monotone_checked = horizon;
  impl_->last_value = prev;
}

bool ArithFn::integer_valued_up_to(long horizon) const {
  std::lock_guard lock(impl_->mu);
  if (!impl_->integer_ok) return false;
  for (long j = impl_->integer_checked + 1; j <= horizon; ++j) {
    if (!impl_->eval(j).is_integer()) {
      impl_->integer_ok = false;
      return false;
    }
    impl_->integer_checked = j;
  }
  return true;
}

ArithFn ArithFn::one() {
  auto impl = std::make_shared<Impl>();
  impl->eval = [](long) { return Rat(1); };
  return ArithFn("one", impl, true, true);
}

ArithFn ArithFn::id() {
  auto impl = std::make_shared<Impl>();
  impl->eval = [](long n) { return Rat(n); };
  return ArithFn("id", impl, true, true);
}

ArithFn ArithFn::sigma() {
  auto impl = std::make_shared<Impl>();
  impl->eval = [](long n) { return sigma_k(n, 1); };
  return ArithFn("sigma", impl, true, false);
}

ArithFn ArithFn::sigma3() {
  auto impl = std::make_shared<Impl>();
  impl->eval = [](long n) { return sigma_k(n, 3); };
  return ArithFn("sigma3", impl, true, false);
}

ArithFn ArithFn::sigma_power(long k) {
  if (k < 0) throw domain_error("sigma_power: k must be >= 0");
  auto impl = std::make_shared<Impl>();
  impl->eval = [k](long n) { return sigma_k(n, k); };
  return ArithFn("sigma_k:" + std::to_string(k), impl, true, false);
}

ArithFn ArithFn::squares() {
  auto impl = std::make_shared<Impl>();
  impl->eval = [](long n) { return Rat(n) * Rat(n); };
  return ArithFn("squares", impl, true, true);
}

ArithFn ArithFn::custom(std::string name, std::vector<Rat> values,
                        bool normalized, bool monotone_positive) {
  if (values.empty()) throw domain_error("ArithFn::custom: empty value table");
  auto impl = std::make_shared<Impl>();
  auto table = std::make_shared<std::vector<Rat>>(std::move(values));
  impl->horizon = static_cast<long>(table->size());
  impl->eval = [table](long n) { return (*table)[static_cast<size_t>(n - 1)]; };
  return ArithFn(std::move(name), impl, normalized, monotone_positive);
}

ArithFn ArithFn::by_name(const std::string& name) {
  if (name == "one") return one();
  if (name == "id") return id();
  if (name == "sigma") return sigma();
  if (name == "sigma3") return sigma3();
  if (name == "squares") return squares();
  if (name.rfind("sigma_k:", 0) == 0) {
    long k = std::stol(name.substr(8));
    return sigma_power(k);
  }
  throw domain_error("unknown arithmetic function '" + name + "'");
}

}  // namespace darcais
