#pragma once

// Automorphisms of ZM(m,n,r): b^u a^v -> b^(yu) a^(x1 v + x2 [u]_r) for
// 0 <= x1,x2 < m, gcd(x1,m) = 1, 0 <= y < n, y = 1 (mod d) and gcd(y,n) = 1.
//
// The unit condition on y is needed whenever a prime of n does not divide d:
// without it y = 1 + zd may share a factor with n and the map collapses <b>.

#include <cstddef>
#include <iterator>
#include <vector>

#include "zm/group.hpp"

namespace zm {

struct AutTriple {
  u64 x1 = 1;
  u64 x2 = 0;
  u64 y = 1;
  auto operator<=>(const AutTriple&) const = default;
};

/// Reduces inputs mod (m,m,n); throws InvalidAutomorphism naming the failed condition.
AutTriple make_aut(const ZmParams& p, i64 x1, i64 x2, i64 y);
bool is_aut_triple(const ZmParams& p, const AutTriple& t);

GroupElement apply_aut(const ZmParams& p, const AutTriple& phi, GroupElement g);

/// Admissible y values, ascending.
std::vector<u64> aut_exponents(const ZmParams& p);

/// |Aut(G)| = m phi(m) #{y}.
u64 aut_order(const ZmParams& p);
/// m phi(m) n/d: the count when every y = 1 (mod d) is admitted.
u64 aut_order_unrestricted(const ZmParams& p);
/// True when every prime dividing n divides d, so the two counts agree.
bool unit_condition_automatic(const ZmParams& p);

/// Lazy lexicographic stream over all automorphism triples.
class AutRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = AutTriple;
    using difference_type = std::ptrdiff_t;
    using pointer = const AutTriple*;
    using reference = const AutTriple&;

    iterator() = default;
    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }
    iterator& operator++();
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || cur_ == o.cur_); }

   private:
    friend class AutRange;
    iterator(const AutRange* range, bool done);
    void settle_x1();

    const AutRange* range_ = nullptr;
    std::size_t yi_ = 0;
    AutTriple cur_{};
    bool done_ = true;
  };

  explicit AutRange(const ZmParams& p);
  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }
  u64 size() const;

 private:
  u64 m_;
  std::vector<u64> ys_;
};

inline AutRange enumerate_aut(const ZmParams& p) { return AutRange(p); }

/// Conjugation by b^alpha a^beta as a triple: (r^alpha, beta (1 - r), 1).
AutTriple inner_aut(const ZmParams& p, u64 alpha, u64 beta);

struct FixParameters {
  u64 m1;
  u64 n1;
  bool operator==(const FixParameters&) const = default;
};

/// Fix(phi) = < a^m1, b^n1 a^s > with
///   m1 = m / (m, x1 - 1),
///   n1 = lcm(n / (n, y - 1), o_q(r)),  q = (m, x1 - 1) / (m, x1 - 1, x2).
FixParameters fix_parameters(const ZmParams& p, const AutTriple& phi);
/// mn / (m1 n1)
u64 fix_size(const ZmParams& p, const AutTriple& phi);

}  // namespace zm
