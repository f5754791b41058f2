#include "zm/subgroups.hpp"

#include <algorithm>

#include "zm/error.hpp"

namespace zm {

u64 quotient_mod(const ZmParams& p, u64 m1, u64 n1) {
  return geom_sum_mod(pow_mod(p.r(), n1, m1), p.n() / n1, m1);
}

namespace {

// s ranges over multiples of this step in [0, m1).
u64 s_step(const ZmParams& p, u64 m1, u64 n1) {
  return m1 / gcd(m1, quotient_mod(p, m1, n1));
}

}  // namespace

bool in_lattice(const ZmParams& p, const SubgroupTriple& t) {
  if (t.m1 == 0 || t.n1 == 0) return false;
  if (p.m() % t.m1 != 0 || p.n() % t.n1 != 0 || t.s >= t.m1) return false;
  return mul_mod(t.s, quotient_mod(p, t.m1, t.n1), t.m1) == 0;
}

std::vector<SubgroupTriple> enumerate_L(const ZmParams& p) {
  std::vector<SubgroupTriple> out;
  for (u64 m1 : p.divisors_m()) {
    for (u64 n1 : p.divisors_n()) {
      const u64 step = s_step(p, m1, n1);
      for (u64 s = 0; s < m1; s += step) out.push_back({m1, n1, s});
    }
  }
  return out;
}

u64 count_L(const ZmParams& p) {
  u64 total = 0;
  for (u64 m1 : p.divisors_m())
    for (u64 n1 : p.divisors_n()) total += m1 / s_step(p, m1, n1);
  return total;
}

u64 subgroup_order(const ZmParams& p, const SubgroupTriple& t) {
  return p.m() / t.m1 * (p.n() / t.n1);
}

bool is_normal(const ZmParams& p, const SubgroupTriple& t) {
  if (t.s != 0) return false;
  return t.m1 == 1 || pow_mod(p.r(), t.n1, t.m1) == 1;
}

bool is_cyclic(const ZmParams& p, const SubgroupTriple& t) {
  const u64 k = p.m() / t.m1;
  return k == 1 || pow_mod(p.r(), t.n1, k) == 1;
}

std::vector<GroupElement> subgroup_elements(const ZmParams& p, const SubgroupTriple& t) {
  const u64 order = subgroup_order(p, t);
  if (order > kElementBudget) throw Error(ErrorKind::Capacity, "subgroup exceeds element budget");
  const GroupElement top = p.element(t.n1, t.s);
  std::vector<GroupElement> out;
  out.reserve(order);
  GroupElement coset = p.identity();
  for (u64 k = 0; k < p.n() / t.n1; ++k) {
    for (u64 j = 0; j < p.m() / t.m1; ++j) {
      out.push_back(multiply(p, coset, p.element(0, j * t.m1)));
    }
    coset = multiply(p, coset, top);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool conjugate_subgroups(const ZmParams& p, const SubgroupTriple& t1, const SubgroupTriple& t2) {
  return subgroup_order(p, t1) == subgroup_order(p, t2);
}

}  // namespace zm
