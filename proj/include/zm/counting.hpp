#pragma once

// Class counts and orbit sizes for ZM(m,n,r).
//
// k(G)  = number of conjugacy classes,
// k'(G) = number of Aut(G)-orbits.
// Both are Burnside averages; the sums are accumulated as integers and divided
// exactly at the end, so a non-integral average is reported as an Internal error.

#include <compare>
#include <string>

#include "zm/automorphism.hpp"
#include "zm/group.hpp"

namespace zm {

/// Largest |Aut(G)| (resp. |Inn(G)| = md) the direct Burnside sums will walk.
inline constexpr u64 kBurnsideBudget = 200'000'000;

/// Non-negative rational in lowest terms.
class Ratio {
 public:
  Ratio(u128 num = 0, u128 den = 1);
  u64 num() const { return num_; }
  u64 den() const { return den_; }
  u64 floor() const { return num_ / den_; }
  u64 ceil() const { return (num_ + den_ - 1) / den_; }
  std::string str() const;

  bool operator==(const Ratio&) const = default;
  std::strong_ordering operator<=>(const Ratio& o) const;
  friend bool operator<=(u64 k, const Ratio& q) { return static_cast<u128>(k) * q.den_ <= q.num_; }
  friend bool operator<=(const Ratio& q, u64 k) { return q.num_ <= static_cast<u128>(k) * q.den_; }

 private:
  u64 num_, den_;
};

/// Integer bounds lower <= x <= upper, with the exact rationals they came from.
struct CountBounds {
  u64 lower;
  u64 upper;
  Ratio lower_exact;
  Ratio upper_exact;
  bool contains(u64 k) const { return lower_exact <= k && k <= upper_exact; }
};

struct ConjugacyBounds {
  CountBounds tight;   // in terms of S and the least prime p | d
  CountBounds coarse;  // in terms of m, d, phi(m), tau(m)
};

// OpenMP kernels.
u64 k_prime(const ZmParams& p);
u64 k_conj(const ZmParams& p);

/// k' by grouping automorphisms on (m, x1 - 1) and classes of x2; cost is
/// polynomial in tau(m) and n/d rather than |Aut(G)|.
u64 k_prime_fast(const ZmParams& p);

/// n - 1 + tau(m). Requires n prime and d = n (so m > 1).
u64 k_prime_prime_n(const ZmParams& p);

/// S = sum_{alpha < d} (m, r^alpha - 1), with (m, 0) = m.
u64 s_sum(const ZmParams& p);
/// (n/d)(d - 1 + S/d). Requires d prime.
u64 k_conj_prime_d(const ZmParams& p);
/// n - 1 + (1/n) sum_{alpha < n} (m, r^alpha - 1). Requires n prime.
u64 k_conj_prime_n(const ZmParams& p);

/// tau(m) <= k' <= d^2 f(n/d) tau(m) / n; collapses to k' itself when m = 1.
CountBounds k_prime_bounds(const ZmParams& p);
ConjugacyBounds k_conj_bounds(const ZmParams& p);
/// tau(m) times the mean of (n, y - 1) over admissible y. Valid for every
/// triple; coincides with the upper end of k_prime_bounds when every prime of
/// n divides d and m > 1.
Ratio k_prime_upper_admissible(const ZmParams& p);

/// Aut(G)-orbit size of g.
u64 orbit_size_aut(const ZmParams& p, GroupElement g);
/// m n phi(g*) / (h (m,[u]_r)): the same count with every y = 1 (mod d) admitted.
u64 orbit_size_aut_unrestricted(const ZmParams& p, GroupElement g);
/// Conjugacy class size of g: (m / (m,[u]_r)) o_{g*}(r).
u64 orbit_size_conj(const ZmParams& p, GroupElement g);
/// |C_G(g)| = mn / orbit_size_conj(g).
u64 centralizer_order(const ZmParams& p, GroupElement g);

namespace serial {

// Reference versions of the OpenMP kernels: straight loops calling fix_size.
u64 k_prime(const ZmParams& p);
u64 k_conj(const ZmParams& p);

}  // namespace serial

}  // namespace zm
