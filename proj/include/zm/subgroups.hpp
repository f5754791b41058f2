#pragma once

// Subgroups of ZM(m,n,r) are in bijection with triples (m1,n1,s):
// m1 | m, n1 | n, 0 <= s < m1, m1 | s (r^n - 1)/(r^n1 - 1),
// via (m1,n1,s) -> < a^m1, b^n1 a^s >, a subgroup of order mn/(m1 n1).

#include <vector>

#include "zm/group.hpp"

namespace zm {

struct SubgroupTriple {
  u64 m1 = 1;
  u64 n1 = 1;
  u64 s = 0;
  auto operator<=>(const SubgroupTriple&) const = default;
};

/// (r^n - 1)/(r^n1 - 1) mod m1, evaluated as sum_{j < n/n1} r^(j n1).
u64 quotient_mod(const ZmParams& p, u64 m1, u64 n1);

bool in_lattice(const ZmParams& p, const SubgroupTriple& t);

/// All triples, lexicographic in (m1,n1,s).
std::vector<SubgroupTriple> enumerate_L(const ZmParams& p);
/// |enumerate_L(p)| without materializing the list.
u64 count_L(const ZmParams& p);

u64 subgroup_order(const ZmParams& p, const SubgroupTriple& t);
bool is_normal(const ZmParams& p, const SubgroupTriple& t);
bool is_cyclic(const ZmParams& p, const SubgroupTriple& t);
/// Sorted element list. Throws Capacity above kElementBudget.
std::vector<GroupElement> subgroup_elements(const ZmParams& p, const SubgroupTriple& t);
bool conjugate_subgroups(const ZmParams& p, const SubgroupTriple& t1, const SubgroupTriple& t2);

}  // namespace zm
