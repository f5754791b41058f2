#include "zm/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "zm/error.hpp"
#include "zm/subgroups.hpp"

namespace zm {

namespace {

u64 parse_u64(const std::string& s) {
  u64 value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw Error(ErrorKind::Precondition, "malformed budget '" + s + "'");
  }
  return value;
}

}  // namespace

Budgets parse_budgets(const std::string& spec) {
  Budgets b;
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    b.elements = parse_u64(spec);
  } else {
    b.elements = parse_u64(spec.substr(0, colon));
    b.automorphisms = parse_u64(spec.substr(colon + 1));
  }
  return b;
}

Budgets budgets_from_env() {
  const char* env = std::getenv("ZMTOOL_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse_budgets(env);
}

u64 k_prime_auto(const ZmParams& p) {
  return aut_order(p) <= kDirectAutLimit ? k_prime(p) : k_prime_fast(p);
}

// ---------------------------------------------------------------------------

std::vector<ClassRecord> class_records(const ZmParams& p, u64 budget) {
  if (p.group_order() > budget) {
    throw Error(ErrorKind::Capacity, "group order " + std::to_string(p.group_order()) +
                                         " exceeds class listing budget " + std::to_string(budget));
  }
  const ElementArithmetic ar(p);
  const u64 order = p.group_order();
  std::vector<u64> parent(order);
  std::iota(parent.begin(), parent.end(), u64{0});
  auto find = [&](u64 x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](u64 x, u64 y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (u64 i = 0; i < order; ++i) {
    const GroupElement g = p.at(i);
    unite(i, p.index_of(ar.conj(g, p.gen_a())));
    unite(i, p.index_of(ar.conj(g, p.gen_b())));
  }
  std::map<u64, u64> members;  // root -> count; the root is the least index
  for (u64 i = 0; i < order; ++i) ++members[find(i)];

  std::vector<ClassRecord> out;
  for (const auto& [root, count] : members) {
    const GroupElement rep = p.at(root);
    ClassRecord rec{rep, orbit_size_conj(p, rep), orbit_size_aut(p, rep), element_order(p, rep),
                    centralizer_order(p, rep)};
    if (rec.class_size != count) {
      throw Error(ErrorKind::Internal, "class of (" + std::to_string(rep.u) + "," +
                                           std::to_string(rep.v) + ") has " + std::to_string(count) +
                                           " elements but the closed form gives " +
                                           std::to_string(rec.class_size));
    }
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
    if (a.class_size != b.class_size) return a.class_size < b.class_size;
    return a.representative < b.representative;
  });
  return out;
}

ClassReport build_report(const ZmParams& p, std::optional<u64> class_budget) {
  ClassReport r{p.m(),
                p.n(),
                p.r(),
                p.d(),
                p.group_order(),
                p.center_order(),
                aut_order(p),
                k_conj(p),
                k_prime_auto(p),
                k_conj_bounds(p),
                k_prime_bounds(p),
                count_L(p),
                std::nullopt};
  if (class_budget && p.group_order() <= *class_budget) r.classes = class_records(p, *class_budget);
  return r;
}

namespace {

nlohmann::ordered_json bounds_json(const CountBounds& b) {
  return {{"lower", b.lower},
          {"upper", b.upper},
          {"lower_exact", b.lower_exact.str()},
          {"upper_exact", b.upper_exact.str()}};
}

}  // namespace

nlohmann::ordered_json to_json(const ClassRecord& c) {
  return {{"representative", {{"u", c.representative.u}, {"v", c.representative.v}}},
          {"class_size", c.class_size},
          {"aut_orbit_size", c.aut_orbit_size},
          {"element_order", c.element_order},
          {"centralizer_order", c.centralizer_order}};
}

nlohmann::ordered_json to_json(const ClassReport& r) {
  nlohmann::ordered_json j;
  j["params"] = {{"m", r.m}, {"n", r.n}, {"r", r.r}, {"d", r.d}};
  j["group_order"] = r.group_order;
  j["center_order"] = r.center_order;
  j["aut_order"] = r.aut_order;
  j["k"] = r.k;
  j["k_prime"] = r.k_prime;
  auto kb = bounds_json(r.k_bounds.tight);
  kb["coarse"] = bounds_json(r.k_bounds.coarse);
  j["k_bounds"] = kb;
  j["k_prime_bounds"] = bounds_json(r.k_prime_bounds);
  j["subgroup_count"] = r.subgroup_count;
  if (r.classes) {
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : *r.classes) j["classes"].push_back(to_json(c));
  }
  return j;
}

std::string to_text(const ClassReport& r) {
  std::ostringstream os;
  os << "group: ZM(" << r.m << "," << r.n << "," << r.r << ")\n"
     << "d: " << r.d << "\n"
     << "group_order: " << r.group_order << "\n"
     << "center_order: " << r.center_order << "\n"
     << "aut_order: " << r.aut_order << "\n"
     << "k: " << r.k << "\n"
     << "k_prime: " << r.k_prime << "\n"
     << "k_bounds: [" << r.k_bounds.tight.lower_exact.str() << ", "
     << r.k_bounds.tight.upper_exact.str() << "]\n"
     << "k_bounds_coarse: [" << r.k_bounds.coarse.lower_exact.str() << ", "
     << r.k_bounds.coarse.upper_exact.str() << "]\n"
     << "k_prime_bounds: [" << r.k_prime_bounds.lower_exact.str() << ", "
     << r.k_prime_bounds.upper_exact.str() << "]\n"
     << "subgroup_count: " << r.subgroup_count << "\n";
  if (r.classes) {
    os << "classes:\n";
    for (const auto& c : *r.classes) {
      os << "  b^" << c.representative.u << " a^" << c.representative.v << "  size "
         << c.class_size << "  aut_orbit " << c.aut_orbit_size << "  order " << c.element_order
         << "  centralizer " << c.centralizer_order << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::string to_csv(const TableRow& t) {
  std::ostringstream os;
  os << t.m << ',' << t.n << ',' << t.r << ',' << t.d << ',' << t.group_order << ',' << t.k << ','
     << t.k_prime << ',' << t.subgroup_count;
  return os.str();
}

std::vector<TableRow> table_rows(u64 m_max, u64 n_max) {
  std::vector<ZmParams> groups;
  for (u64 m = 1; m <= m_max; ++m)
    for (u64 n = 1; n <= n_max; ++n)
      for (u64 r = 0; r < m; ++r)
        if (!find_violation(m, n, static_cast<i64>(r))) groups.push_back(validate(m, n, static_cast<i64>(r)));

  std::vector<TableRow> rows(groups.size());
  std::exception_ptr failure;
  const auto count = static_cast<long long>(groups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      const ZmParams& p = groups[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = {p.m(),      p.n(),           p.r(),  p.d(), p.group_order(),
                                           k_conj(p), k_prime_auto(p), count_L(p)};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

// ---------------------------------------------------------------------------

bool VerifyResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerifyResult::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

std::string pair_detail(u64 formula, u64 oracle) {
  return "formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle);
}

std::string element_name(GroupElement g) {
  return "b^" + std::to_string(g.u) + " a^" + std::to_string(g.v);
}

}  // namespace

VerifyResult verify(const ZmParams& p, u64 budget) {
  if (p.group_order() > budget) {
    throw Error(ErrorKind::Capacity, "group order " + std::to_string(p.group_order()) +
                                         " exceeds verify budget " + std::to_string(budget));
  }
  VerifyResult out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const u64 order = p.group_order();

  // Aut(G)
  const auto brute_auts = oracle::brute_force_automorphisms(p, budget);
  const u64 aut = aut_order(p);
  add("aut_order", aut == brute_auts.size(), pair_detail(aut, brute_auts.size()));
  {
    std::vector<oracle::Permutation> from_triples;
    for (const auto& phi : enumerate_aut(p)) from_triples.push_back(oracle::permutation_of(p, phi));
    std::sort(from_triples.begin(), from_triples.end());
    add("aut_triples_match", from_triples == brute_auts,
        std::to_string(from_triples.size()) + " triples vs " + std::to_string(brute_auts.size()) +
            " automorphisms");
  }

  // k and k'
  const auto conj_part = oracle::conjugacy_partition(p, budget);
  const auto aut_part = oracle::aut_orbit_partition(p, budget);
  const u64 k = k_conj(p);
  const u64 kp = k_prime(p);
  add("k", k == conj_part.size(), pair_detail(k, conj_part.size()));
  add("k_serial", serial::k_conj(p) == k, pair_detail(serial::k_conj(p), k));
  add("k_prime", kp == aut_part.size(), pair_detail(kp, aut_part.size()));
  add("k_prime_fast", k_prime_fast(p) == kp, pair_detail(k_prime_fast(p), kp));

  // fixed points
  {
    std::string bad;
    for (const auto& phi : enumerate_aut(p)) {
      const u64 f = fix_size(p, phi);
      const u64 brute = oracle::fixed_set(p, phi, budget).size();
      if (f != brute) {
        bad = "(" + std::to_string(phi.x1) + "," + std::to_string(phi.x2) + "," + std::to_string(phi.y) +
              "): " + pair_detail(f, brute);
        break;
      }
    }
    add("fix_size", bad.empty(), bad);
  }

  // orbit sizes and centralizers, element by element
  {
    const oracle::ActionOracle conj(p, oracle::Action::Conjugation, budget);
    const oracle::ActionOracle autact(p, oracle::Action::Automorphism, budget);
    std::string bad_conj, bad_aut, bad_cent, bad_os;
    for (u64 i = 0; i < order; ++i) {
      const GroupElement g = p.at(i);
      const auto oc = conj(g);
      const auto oa = autact(g);
      if (bad_os.empty() && (oc.orbit.size() * oc.stabilizer_size != oc.acting_order ||
                             oa.orbit.size() * oa.stabilizer_size != oa.acting_order)) {
        bad_os = element_name(g);
      }
      if (bad_conj.empty() && orbit_size_conj(p, g) != oc.orbit.size())
        bad_conj = element_name(g) + ": " + pair_detail(orbit_size_conj(p, g), oc.orbit.size());
      if (bad_aut.empty() && orbit_size_aut(p, g) != oa.orbit.size())
        bad_aut = element_name(g) + ": " + pair_detail(orbit_size_aut(p, g), oa.orbit.size());
      const u64 cent = oracle::brute_force_centralizer_order(p, g);
      if (bad_cent.empty() && centralizer_order(p, g) != cent)
        bad_cent = element_name(g) + ": " + pair_detail(centralizer_order(p, g), cent);
    }
    add("orbit_stabilizer", bad_os.empty(), bad_os);
    add("orbit_size_conj", bad_conj.empty(), bad_conj);
    add("orbit_size_aut", bad_aut.empty(), bad_aut);
    add("centralizer_order", bad_cent.empty(), bad_cent);
  }

  // subgroups
  {
    const u64 formula = count_L(p);
    const u64 brute = oracle::brute_force_subgroups(p, budget).size();
    add("subgroup_count", formula == brute, pair_detail(formula, brute));
  }

  // bounds
  {
    const auto kb = k_conj_bounds(p);
    const auto kpb = k_prime_bounds(p);
    add("k_bounds", kb.tight.contains(k) && kb.coarse.contains(k),
        "k = " + std::to_string(k) + " in [" + kb.tight.lower_exact.str() + ", " +
            kb.tight.upper_exact.str() + "] and [" + kb.coarse.lower_exact.str() + ", " +
            kb.coarse.upper_exact.str() + "]");
    add("k_prime_bounds", kpb.lower <= kp && kp <= kpb.upper,
        "k' = " + std::to_string(kp) + " in [" + std::to_string(kpb.lower) + ", " +
            std::to_string(kpb.upper) + "]");
  }

  // prime special cases
  if (is_prime(p.n()) && p.d() == p.n()) {
    add("k_prime_prime_n", k_prime_prime_n(p) == kp, pair_detail(k_prime_prime_n(p), kp));
  }
  if (is_prime(p.n())) add("k_prime_n", k_conj_prime_n(p) == k, pair_detail(k_conj_prime_n(p), k));
  if (is_prime(p.d())) add("k_prime_d", k_conj_prime_d(p) == k, pair_detail(k_conj_prime_d(p), k));

  return out;
}

}  // namespace zm
