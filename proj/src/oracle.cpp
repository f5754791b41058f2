#include "zm/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "zm/error.hpp"

namespace zm::oracle {

namespace {

void require(const ZmParams& p, u64 budget) {
  if (p.group_order() > budget) {
    throw Error(ErrorKind::Capacity, "group order " + std::to_string(p.group_order()) +
                                         " exceeds oracle budget " + std::to_string(budget));
  }
}

void order_blocks(std::vector<std::vector<GroupElement>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

// Order by repeated multiplication.
u64 naive_order(const ElementArithmetic& ar, GroupElement g) {
  const GroupElement e{0, 0};
  u64 k = 1;
  for (GroupElement x = g; x != e; x = ar.mul(x, g)) ++k;
  return k;
}

GroupElement naive_power(const ElementArithmetic& ar, GroupElement g, u64 k) {
  GroupElement x{0, 0};
  for (u64 i = 0; i < k; ++i) x = ar.mul(x, g);
  return x;
}

using IndexSet = std::vector<std::uint32_t>;

// Subgroup generated by gens, as sorted element indices.
IndexSet closure(const ZmParams& p, const ElementArithmetic& ar, const std::vector<GroupElement>& gens,
                 std::vector<char>& seen) {
  IndexSet members;
  std::fill(seen.begin(), seen.end(), 0);
  const GroupElement e = p.identity();
  members.push_back(static_cast<std::uint32_t>(p.index_of(e)));
  seen[p.index_of(e)] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const GroupElement x = p.at(members[head]);
    for (GroupElement g : gens) {
      const u64 idx = p.index_of(ar.mul(x, g));
      if (!seen[idx]) {
        seen[idx] = 1;
        members.push_back(static_cast<std::uint32_t>(idx));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementSet> to_element_sets(const ZmParams& p, const std::set<IndexSet>& found) {
  std::vector<ElementSet> out;
  for (const auto& s : found) {
    ElementSet h;
    for (auto i : s) h.push_back(p.at(i));
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

Partition conjugacy_partition(const ZmParams& p, u64 budget) {
  require(p, budget);
  const ElementArithmetic ar(p);
  const u64 order = p.group_order();
  std::vector<char> seen(order, 0);
  Partition out;
  for (u64 i = 0; i < order; ++i) {
    if (seen[i]) continue;
    const GroupElement g = p.at(i);
    std::vector<GroupElement> block;
    for (u64 j = 0; j < order; ++j) {
      const u64 idx = p.index_of(ar.conj(g, p.at(j)));
      if (!seen[idx]) {
        seen[idx] = 1;
        block.push_back(p.at(idx));
      }
    }
    out.blocks.push_back(std::move(block));
  }
  order_blocks(out.blocks);
  return out;
}

std::vector<Permutation> brute_force_automorphisms(const ZmParams& p, u64 budget) {
  require(p, budget);
  const ElementArithmetic ar(p);
  const u64 order = p.group_order();
  const u64 m = p.m();
  const u64 n = p.n();

  std::vector<GroupElement> a_images, b_images;
  for (u64 i = 0; i < order; ++i) {
    const GroupElement g = p.at(i);
    const u64 k = naive_order(ar, g);
    if (m % k == 0) a_images.push_back(g);
    if (n % k == 0) b_images.push_back(g);
  }

  std::vector<Permutation> out;
  std::vector<char> hit(order);
  for (GroupElement g1 : a_images) {
    const GroupElement g1r = naive_power(ar, g1, p.r());
    for (GroupElement g2 : b_images) {
      // b^-1 a b = a^r  <=>  a b = b a^r
      if (ar.mul(g1, g2) != ar.mul(g2, g1r)) continue;
      Permutation perm(order);
      std::fill(hit.begin(), hit.end(), 0);
      bool bijective = true;
      GroupElement bu{0, 0};
      for (u64 u = 0; u < n && bijective; ++u) {
        GroupElement img = bu;
        for (u64 v = 0; v < m; ++v) {
          const u64 idx = p.index_of(img);
          if (hit[idx]) {
            bijective = false;
            break;
          }
          hit[idx] = 1;
          perm[p.index_of({u, v})] = static_cast<std::uint32_t>(idx);
          img = ar.mul(img, g1);
        }
        bu = ar.mul(bu, g2);
      }
      if (bijective) out.push_back(std::move(perm));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation permutation_of(const ZmParams& p, const AutTriple& phi) {
  const u64 order = p.group_order();
  Permutation perm(order);
  for (u64 i = 0; i < order; ++i)
    perm[i] = static_cast<std::uint32_t>(p.index_of(apply_aut(p, phi, p.at(i))));
  return perm;
}

Partition aut_orbit_partition(const ZmParams& p, u64 budget) {
  const auto auts = brute_force_automorphisms(p, budget);
  const u64 order = p.group_order();
  std::vector<char> seen(order, 0);
  Partition out;
  for (u64 i = 0; i < order; ++i) {
    if (seen[i]) continue;
    std::vector<GroupElement> block;
    for (const auto& perm : auts) {
      const auto idx = perm[i];
      if (!seen[idx]) {
        seen[idx] = 1;
        block.push_back(p.at(idx));
      }
    }
    out.blocks.push_back(std::move(block));
  }
  order_blocks(out.blocks);
  return out;
}

std::vector<GroupElement> fixed_set(const ZmParams& p, const AutTriple& phi, u64 budget) {
  require(p, budget);
  std::vector<GroupElement> out;
  for (u64 i = 0; i < p.group_order(); ++i) {
    const GroupElement g = p.at(i);
    if (apply_aut(p, phi, g) == g) out.push_back(g);
  }
  return out;
}

ActionOracle::ActionOracle(const ZmParams& p, Action action, u64 budget)
    : p_(p), action_(action), arith_(p) {
  require(p, budget);
  if (action == Action::Automorphism) {
    auts_ = brute_force_automorphisms(p, budget);
    acting_order_ = auts_.size();
  } else {
    // Inn(G) = G / Z(G)
    acting_order_ = p.group_order() / brute_force_center(p, budget).size();
  }
}

OrbitStabilizer ActionOracle::operator()(GroupElement g) const {
  std::set<GroupElement> orbit;
  u64 stab = 0;
  if (action_ == Action::Automorphism) {
    const auto i = p_.index_of(g);
    for (const auto& perm : auts_) {
      orbit.insert(p_.at(perm[i]));
      stab += perm[i] == i;
    }
  } else {
    u64 commuting = 0;
    for (u64 j = 0; j < p_.group_order(); ++j) {
      const GroupElement c = arith_.conj(g, p_.at(j));
      orbit.insert(c);
      commuting += c == g;
    }
    // x and xz induce the same inner automorphism for z in Z(G)
    stab = commuting / (p_.group_order() / acting_order_);
  }
  return {{orbit.begin(), orbit.end()}, stab, acting_order_};
}

OrbitStabilizer orbit_and_stabilizer(const ZmParams& p, GroupElement g, Action action, u64 budget) {
  return ActionOracle(p, action, budget)(g);
}

u64 brute_force_centralizer_order(const ZmParams& p, GroupElement g) {
  const ElementArithmetic ar(p);
  u64 count = 0;
  for (u64 j = 0; j < p.group_order(); ++j) {
    const GroupElement x = p.at(j);
    count += ar.mul(g, x) == ar.mul(x, g);
  }
  return count;
}

std::vector<GroupElement> brute_force_center(const ZmParams& p, u64 budget) {
  require(p, budget);
  const ElementArithmetic ar(p);
  std::vector<GroupElement> out;
  for (u64 i = 0; i < p.group_order(); ++i) {
    const GroupElement z = p.at(i);
    bool central = true;
    for (u64 j = 0; j < p.group_order() && central; ++j) {
      const GroupElement x = p.at(j);
      central = ar.mul(z, x) == ar.mul(x, z);
    }
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<ElementSet> brute_force_subgroups(const ZmParams& p, u64 budget) {
  require(p, budget);
  const ElementArithmetic ar(p);
  const u64 order = p.group_order();
  std::vector<char> seen(order);

  // <g,h> depends only on <g> and <h>: keep one generator per cyclic subgroup.
  std::set<IndexSet> cyclic;
  std::vector<GroupElement> gens;
  for (u64 i = 0; i < order; ++i) {
    if (cyclic.insert(closure(p, ar, {p.at(i)}, seen)).second) gens.push_back(p.at(i));
  }
  std::set<IndexSet> found = cyclic;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) found.insert(closure(p, ar, {gens[i], gens[j]}, seen));
  return to_element_sets(p, found);
}

std::vector<std::size_t> subgroup_conjugacy_classes(const ZmParams& p, const std::vector<ElementSet>& subgroups) {
  const ElementArithmetic ar(p);
  std::map<ElementSet, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i) position[subgroups[i]] = i;
  std::vector<std::size_t> label(subgroups.size(), subgroups.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (label[i] != subgroups.size()) continue;
    for (u64 j = 0; j < p.group_order(); ++j) {
      ElementSet image;
      for (GroupElement x : subgroups[i]) image.push_back(ar.conj(x, p.at(j)));
      std::sort(image.begin(), image.end());
      auto it = position.find(image);
      if (it == position.end()) throw Error(ErrorKind::Internal, "conjugate of a subgroup is not in the list");
      label[it->second] = next;
    }
    ++next;
  }
  return label;
}

std::vector<ElementSet> brute_force_subgroups_full(const ZmParams& p, u64 budget) {
  require(p, budget);
  const ElementArithmetic ar(p);
  const u64 order = p.group_order();
  std::vector<char> seen(order);
  std::set<IndexSet> found;
  for (u64 i = 0; i < order; ++i) found.insert(closure(p, ar, {p.at(i)}, seen));

  // join every pair until nothing new appears
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<IndexSet> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<GroupElement> gens;
        for (auto x : current[i]) gens.push_back(p.at(x));
        for (auto x : current[j]) gens.push_back(p.at(x));
        if (found.insert(closure(p, ar, gens, seen)).second) grew = true;
      }
    }
  }
  return to_element_sets(p, found);
}

bool is_subgroup(const ZmParams& p, const ElementSet& h) {
  if (h.empty() || !std::binary_search(h.begin(), h.end(), p.identity())) return false;
  const ElementArithmetic ar(p);
  for (GroupElement x : h) {
    if (!std::binary_search(h.begin(), h.end(), ar.inv(x))) return false;
    for (GroupElement y : h)
      if (!std::binary_search(h.begin(), h.end(), ar.mul(x, y))) return false;
  }
  return true;
}

bool is_normal_subgroup(const ZmParams& p, const ElementSet& h) {
  const ElementArithmetic ar(p);
  for (u64 j = 0; j < p.group_order(); ++j)
    for (GroupElement x : h)
      if (!std::binary_search(h.begin(), h.end(), ar.conj(x, p.at(j)))) return false;
  return true;
}

bool is_cyclic_subgroup(const ZmParams& p, const ElementSet& h) {
  const ElementArithmetic ar(p);
  for (GroupElement x : h)
    if (naive_order(ar, x) == h.size()) return true;
  return false;
}

bool are_conjugate(const ZmParams& p, const ElementSet& h1, const ElementSet& h2) {
  if (h1.size() != h2.size()) return false;
  const ElementArithmetic ar(p);
  for (u64 j = 0; j < p.group_order(); ++j) {
    ElementSet image;
    for (GroupElement x : h1) image.push_back(ar.conj(x, p.at(j)));
    std::sort(image.begin(), image.end());
    if (image == h2) return true;
  }
  return false;
}

}  // namespace zm::oracle
