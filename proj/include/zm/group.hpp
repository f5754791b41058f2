#pragma once

// ZM(m,n,r) = < a, b | a^m = b^n = 1, b^-1 a b = a^r > with
// gcd(m,n) = gcd(m,r-1) = 1 and r^n = 1 (mod m). Elements are written b^u a^v.

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "zm/numtheory.hpp"

namespace zm {

/// Largest group order accepted by all_elements() and other enumerations.
inline constexpr u64 kElementBudget = 1'000'000;

enum class Condition {
  NonPositive,        // m = 0 or n = 0
  OrdersNotCoprime,   // gcd(m,n) != 1
  ShiftNotCoprime,    // gcd(m, r-1) != 1
  PowerNotOne,        // r^n != 1 (mod m)
};

std::string_view describe(Condition c);

/// b^u a^v with 0 <= u < n, 0 <= v < m.
struct GroupElement {
  u64 u = 0;
  u64 v = 0;
  auto operator<=>(const GroupElement&) const = default;
};

/// A validated parameter triple. Construct through validate().
class ZmParams {
 public:
  u64 m() const { return m_; }
  u64 n() const { return n_; }
  u64 r() const { return r_; }
  /// Multiplicative order of r modulo m.
  u64 d() const { return d_; }
  u64 group_order() const { return m_ * n_; }
  u64 center_order() const { return n_ / d_; }

  const Factorization& factors_m() const { return fm_; }
  const Factorization& factors_n() const { return fn_; }
  const std::vector<u64>& divisors_m() const { return div_m_; }
  const std::vector<u64>& divisors_n() const { return div_n_; }
  /// Divisors of mn, ascending.
  const std::vector<u64>& divisors_order() const { return div_mn_; }

  /// Reduces (u,v) mod (n,m).
  GroupElement element(u64 u, u64 v) const { return {u % n_, v % m_}; }
  GroupElement identity() const { return {0, 0}; }
  GroupElement gen_a() const { return element(0, 1); }
  GroupElement gen_b() const { return element(1, 0); }
  /// Position of g in all_elements() order.
  u64 index_of(GroupElement g) const { return g.u * m_ + g.v; }
  GroupElement at(u64 index) const { return {index / m_, index % m_}; }

  bool operator==(const ZmParams& o) const { return m_ == o.m_ && n_ == o.n_ && r_ == o.r_; }

 private:
  friend ZmParams validate(u64 m, u64 n, i64 r);
  ZmParams(u64 m, u64 n, u64 r, u64 d);

  u64 m_, n_, r_, d_;
  Factorization fm_, fn_;
  std::vector<u64> div_m_, div_n_, div_mn_;
};

/// First violated condition, or nullopt if (m,n,r) presents a ZM-group.
std::optional<Condition> find_violation(u64 m, u64 n, i64 r);

/// Throws Error(InvalidTriple) naming the violated condition.
ZmParams validate(u64 m, u64 n, i64 r);

GroupElement multiply(const ZmParams& p, GroupElement g, GroupElement h);
GroupElement inverse(const ZmParams& p, GroupElement g);
GroupElement power(const ZmParams& p, GroupElement g, u64 k);
u64 element_order(const ZmParams& p, GroupElement g);
/// x^-1 g x
GroupElement conjugate(const ZmParams& p, GroupElement g, GroupElement x);

/// Table-driven multiply/inverse for repeated use on one group; agrees with
/// the free functions but precomputes r^u mod m for every u < n.
class ElementArithmetic {
 public:
  explicit ElementArithmetic(const ZmParams& p);
  GroupElement mul(GroupElement g, GroupElement h) const {
    return {(g.u + h.u) % n_, static_cast<u64>((static_cast<u128>(g.v) * twist_[h.u] + h.v) % m_)};
  }
  GroupElement inv(GroupElement g) const {
    const u64 u = (n_ - g.u) % n_;
    return {u, static_cast<u64>((m_ - static_cast<u128>(g.v) * twist_[u] % m_) % m_)};
  }
  GroupElement conj(GroupElement g, GroupElement x) const { return mul(mul(inv(x), g), x); }

 private:
  u64 m_, n_;
  std::vector<u64> twist_;
};

/// Z(G) = <b^d>, sorted by u.
std::vector<GroupElement> center_elements(const ZmParams& p);
/// All mn elements in (u,v) order. Throws Capacity above kElementBudget.
std::vector<GroupElement> all_elements(const ZmParams& p);

}  // namespace zm
