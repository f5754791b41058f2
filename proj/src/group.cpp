#include "zm/group.hpp"

#include <algorithm>
#include <string>

#include "zm/error.hpp"

namespace zm {

std::string_view describe(Condition c) {
  switch (c) {
    case Condition::NonPositive: return "m and n must be positive";
    case Condition::OrdersNotCoprime: return "gcd(m,n) != 1";
    case Condition::ShiftNotCoprime: return "gcd(m,r-1) != 1";
    case Condition::PowerNotOne: return "r^n != 1 (mod m)";
  }
  return "unknown condition";
}

ZmParams::ZmParams(u64 m, u64 n, u64 r, u64 d)
    : m_(m), n_(n), r_(r), d_(d), fm_(factorize(m)), fn_(factorize(n)) {
  div_m_ = divisors(fm_);
  div_n_ = divisors(fn_);
  // m and n are coprime, so the factorizations merge.
  Factorization fmn = fm_;
  fmn.insert(fmn.end(), fn_.begin(), fn_.end());
  std::sort(fmn.begin(), fmn.end(), [](auto& a, auto& b) { return a.prime < b.prime; });
  div_mn_ = divisors(fmn);
}

std::optional<Condition> find_violation(u64 m, u64 n, i64 r) {
  if (m == 0 || n == 0) return Condition::NonPositive;
  if (gcd(m, n) != 1) return Condition::OrdersNotCoprime;
  const i64 sm = static_cast<i64>(m);
  const u64 rr = static_cast<u64>(((r % sm) + sm) % sm);
  if (gcd(m, (rr + m - 1) % m) != 1) return Condition::ShiftNotCoprime;
  if (pow_mod(rr, n, m) != 1 % m) return Condition::PowerNotOne;
  return std::nullopt;
}

ZmParams validate(u64 m, u64 n, i64 r) {
  if (m > static_cast<u64>(INT64_MAX)) throw Error(ErrorKind::Capacity, "m exceeds 2^63");
  if (auto bad = find_violation(m, n, r)) {
    throw Error(ErrorKind::InvalidTriple, std::string(describe(*bad)));
  }
  checked_mul(m, n);
  const i64 sm = static_cast<i64>(m);
  const u64 rr = static_cast<u64>(((r % sm) + sm) % sm);
  return ZmParams(m, n, rr, mult_order(rr, m));
}

GroupElement multiply(const ZmParams& p, GroupElement g, GroupElement h) {
  // a^v b^w = b^w a^(v r^w)
  const u64 m = p.m();
  const u64 u = (g.u + h.u) % p.n();
  const u64 v = (mul_mod(g.v, pow_mod(p.r(), h.u, m), m) + h.v) % m;
  return {u, v};
}

GroupElement inverse(const ZmParams& p, GroupElement g) {
  const u64 m = p.m();
  const u64 n = p.n();
  const u64 u = (n - g.u) % n;
  const u64 twist = pow_mod(p.r(), u, m);
  return {u, (m - mul_mod(g.v, twist, m)) % m};
}

GroupElement power(const ZmParams& p, GroupElement g, u64 k) {
  // (b^u a^v)^k = b^(ku) a^(v [k]_{r^u})
  const u64 m = p.m();
  const u64 u = static_cast<u64>(static_cast<u128>(g.u) * k % p.n());
  const u64 ratio = pow_mod(p.r(), g.u, m);
  return {u, mul_mod(g.v, geom_sum_mod(ratio, k, m), m)};
}

u64 element_order(const ZmParams& p, GroupElement g) {
  const GroupElement e = p.identity();
  for (u64 k : p.divisors_order()) {
    if (power(p, g, k) == e) return k;
  }
  throw Error(ErrorKind::Internal, "element order does not divide the group order");
}

GroupElement conjugate(const ZmParams& p, GroupElement g, GroupElement x) {
  return multiply(p, multiply(p, inverse(p, x), g), x);
}

ElementArithmetic::ElementArithmetic(const ZmParams& p) : m_(p.m()), n_(p.n()) {
  if (n_ > kElementBudget) throw Error(ErrorKind::Capacity, "n exceeds the element budget");
  twist_.resize(n_);
  u64 x = 1 % m_;
  for (u64 u = 0; u < n_; ++u) {
    twist_[u] = x;
    x = mul_mod(x, p.r(), m_);
  }
}

std::vector<GroupElement> center_elements(const ZmParams& p) {
  std::vector<GroupElement> out;
  out.reserve(p.center_order());
  for (u64 u = 0; u < p.n(); u += p.d()) out.push_back({u, 0});
  return out;
}

std::vector<GroupElement> all_elements(const ZmParams& p) {
  if (p.group_order() > kElementBudget) {
    throw Error(ErrorKind::Capacity, "group order " + std::to_string(p.group_order()) +
                                         " exceeds the element budget");
  }
  std::vector<GroupElement> out;
  out.reserve(p.group_order());
  for (u64 u = 0; u < p.n(); ++u)
    for (u64 v = 0; v < p.m(); ++v) out.push_back({u, v});
  return out;
}

}  // namespace zm
