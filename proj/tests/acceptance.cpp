// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support.hpp"
#include "zm/automorphism.hpp"
#include "zm/cli.hpp"
#include "zm/counting.hpp"
#include "zm/error.hpp"
#include "zm/numtheory.hpp"
#include "zm/oracle.hpp"
#include "zm/subgroups.hpp"

using namespace zm;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // printed under the criterion line
  int failures = 0;

  void fail(const std::string& what) {
    pass = false;
    if (++failures <= 8) notes.push_back("  fail: " + what);
  }
  void note(const std::string& what) { notes.push_back("  note: " + what); }
};

std::string name(const ZmParams& p) {
  return "ZM(" + std::to_string(p.m()) + "," + std::to_string(p.n()) + "," + std::to_string(p.r()) + ")";
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct CliResult {
  int code;
  std::string out;
};

CliResult zmtool(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// All triples with mn <= 200.
const std::vector<ZmParams>& sweep3() {
  static const auto v = zm::testing::triples_up_to(200);
  return v;
}

// Triples with 200 < mn <= 2000: every 3rd in (mn, m, r) order, plus the
// first r of each (m, n) so that every admissible pair of orders is covered.
const std::vector<ZmParams>& sweep4() {
  static const auto v = [] {
    std::vector<ZmParams> out;
    const auto all = zm::testing::triples_by_order(201, 2000);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const bool first_r = i == 0 || all[i - 1].m() != all[i].m() || all[i - 1].n() != all[i].n();
      if (first_r || i % 3 == 0) out.push_back(all[i]);
    }
    return out;
  }();
  return v;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = zmtool({"info", "3", "4", "2", "--format", "json"});
  const double dt = seconds_since(t0);
  if (r.code != 0) {
    o.fail("exit code " + std::to_string(r.code));
    return o;
  }
  const auto j = nlohmann::json::parse(r.out);
  if (j["k"] != 6) o.fail("k = " + j["k"].dump());
  if (j["k_prime"] != 5) o.fail("k' = " + j["k_prime"].dump());
  if (dt >= 1.0) o.fail("took " + std::to_string(dt) + " s");
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto t0 = Clock::now();
  for (u64 m = 3; m <= 99; m += 2) {
    const auto p = validate(m, 2, static_cast<i64>(m - 1));
    const u64 kp = k_prime(p), k = k_conj(p);
    if (kp != tau(m) + 1) o.fail(name(p) + ": k' = " + std::to_string(kp));
    if (k != (m + 3) / 2) o.fail(name(p) + ": k = " + std::to_string(k));
    if (m <= 15) {
      if (oracle::aut_orbit_partition(p).size() != kp) o.fail(name(p) + ": k' differs from oracle");
      if (oracle::conjugacy_partition(p).size() != k) o.fail(name(p) + ": k differs from oracle");
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 5.0) o.fail("took " + std::to_string(dt) + " s");
  return o;
}

Outcome ac3() {
  Outcome o;
  u64 checks = 0;
  for (const auto& p : sweep3()) {
    const std::string id = name(p);
    if (k_conj(p) != oracle::conjugacy_partition(p).size()) o.fail(id + ": k");
    if (k_prime(p) != oracle::aut_orbit_partition(p).size()) o.fail(id + ": k'");
    if (aut_order(p) != oracle::brute_force_automorphisms(p).size()) o.fail(id + ": |Aut|");
    if (count_L(p) != oracle::brute_force_subgroups(p).size()) o.fail(id + ": |L|");
    checks += 4;
    for (const auto& phi : enumerate_aut(p)) {
      ++checks;
      if (fix_size(p, phi) != oracle::fixed_set(p, phi).size()) {
        o.fail(id + ": fix_size");
        break;
      }
    }
    const oracle::ActionOracle conj(p, oracle::Action::Conjugation, oracle::kElementOracleBudget);
    const oracle::ActionOracle aut(p, oracle::Action::Automorphism, oracle::kAutOracleBudget);
    for (const auto& g : all_elements(p)) {
      checks += 2;
      if (orbit_size_conj(p, g) != conj(g).orbit.size()) o.fail(id + ": orbit_size_conj");
      if (orbit_size_aut(p, g) != aut(g).orbit.size()) o.fail(id + ": orbit_size_aut");
    }
  }
  o.note(std::to_string(sweep3().size()) + " triples, " + std::to_string(checks) + " comparisons");
  return o;
}

Outcome ac4() {
  Outcome o;
  u64 elements = 0;
  const auto run = [&](const ZmParams& p) {
    if (k_conj(p) != oracle::conjugacy_partition(p).size()) o.fail(name(p) + ": k");
    const oracle::ActionOracle conj(p, oracle::Action::Conjugation, oracle::kElementOracleBudget);
    for (const auto& g : all_elements(p)) {
      ++elements;
      if (orbit_size_conj(p, g) != conj(g).orbit.size()) o.fail(name(p) + ": orbit_size_conj");
      if (centralizer_order(p, g) != oracle::brute_force_centralizer_order(p, g)) o.fail(name(p) + ": centralizer");
    }
  };
  for (const auto& p : sweep3()) run(p);
  for (const auto& p : sweep4()) run(p);
  o.note(std::to_string(sweep3().size() + sweep4().size()) + " triples (" + std::to_string(sweep4().size()) +
         " sampled above mn = 200), " + std::to_string(elements) + " elements");
  return o;
}

Outcome ac5() {
  Outcome o;
  u64 n = 0, admissible_ok = 0;
  const auto run = [&](const ZmParams& p) {
    ++n;
    const u64 k = k_conj(p), kp = k_prime_fast(p);
    const auto kb = k_prime_bounds(p);
    if (!(kb.lower <= kp && kp <= kb.upper))
      o.fail(name(p) + ": k' = " + std::to_string(kp) + " outside [" + std::to_string(kb.lower) + ", " +
             std::to_string(kb.upper) + "]");
    const auto cb = k_conj_bounds(p);
    if (!cb.tight.contains(k)) o.fail(name(p) + ": k outside tight pair");
    if (!cb.coarse.contains(k)) o.fail(name(p) + ": k outside coarse pair");
    if (kb.lower <= kp && kp <= k_prime_upper_admissible(p)) ++admissible_ok;
  };
  for (const auto& p : sweep3()) run(p);
  for (const auto& p : sweep4()) run(p);
  if (o.failures > 0) o.note(std::to_string(o.failures) + " violations in " + std::to_string(n) + " triples");
  o.note("tau(m) <= k' <= tau(m)*mean (n,y-1) over admissible y holds on " + std::to_string(admissible_ok) + "/" +
         std::to_string(n) + " triples");
  return o;
}

Outcome ac6() {
  Outcome o;
  u64 prime_n = 0, prime_d = 0;
  for (const auto& p : zm::testing::triples_up_to(2000)) {
    const u64 k = k_conj(p);
    if (is_prime(p.n())) {
      ++prime_n;
      if (k_conj_prime_n(p) != k) o.fail(name(p) + ": k_conj_prime_n");
      if (p.m() > 1 && k_prime_prime_n(p) != k_prime(p)) o.fail(name(p) + ": k_prime_prime_n");
    }
    if (is_prime(p.d())) {
      ++prime_d;
      if (k_conj_prime_d(p) != k) o.fail(name(p) + ": k_conj_prime_d");
    }
  }
  o.note(std::to_string(prime_n) + " triples with n prime, " + std::to_string(prime_d) + " with d prime");
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto t0 = Clock::now();
  for (u64 m = 1; m <= 10000; ++m) {
    if (menon_sum(m) != euler_phi(m) * tau(m)) o.fail("menon_sum(" + std::to_string(m) + ")");
    if (f_direct(m) != f_closed(m)) o.fail("f(" + std::to_string(m) + ")");
  }
  const double dt = seconds_since(t0);
  if (dt >= 30.0) o.fail("took " + std::to_string(dt) + " s");
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const auto& p : sweep3())
    if (k_prime_fast(p) != k_prime(p)) o.fail(name(p));

  const auto big = validate(341, 30, 2);
  auto t0 = Clock::now();
  const u64 fast = k_prime_fast(big);
  const double t_fast = seconds_since(t0);
  t0 = Clock::now();
  const u64 direct = serial::k_prime(big);
  const double t_direct = seconds_since(t0);
  if (fast != direct) o.fail(name(big) + ": fast " + std::to_string(fast) + " vs direct " + std::to_string(direct));
  if (t_fast >= 1.0) o.fail(name(big) + ": fast took " + std::to_string(t_fast) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: k' = %llu, |Aut| = %llu, fast %.4f s, direct %.4f s", name(big).c_str(),
                static_cast<unsigned long long>(fast), static_cast<unsigned long long>(aut_order(big)), t_fast,
                t_direct);
  o.note(buf);
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const auto& p : sweep3()) {
    const auto r = zmtool({"verify", std::to_string(p.m()), std::to_string(p.n()), std::to_string(p.r())});
    if (r.code != cli::kOk) {
      const auto at = r.out.find("FAILED at ");
      o.fail(name(p) + ": exit " + std::to_string(r.code) +
             (at == std::string::npos ? "" : ", " + r.out.substr(at, r.out.find('\n', at) - at)));
    }
  }

  const std::filesystem::path golden(ZM_GOLDEN_DIR);
  if (zmtool({"table", "--m-max", "3", "--n-max", "4"}).out != slurp(golden / "table_3x4.csv"))
    o.fail("table golden");
  if (zmtool({"classes", "3", "4", "2"}).out != slurp(golden / "classes_3_4_2.csv")) o.fail("classes golden");
  if (zmtool({"subgroups", "3", "4", "2"}).out != slurp(golden / "subgroups_3_4_2.csv")) o.fail("subgroups golden");

  const std::vector<std::pair<std::vector<std::string>, int>> codes{
      {{"validate", "3", "4", "2"}, cli::kOk},
      {{"validate", "4", "2", "3"}, cli::kInvalidTriple},
      {{"validate", "3", "4", "x"}, cli::kUsage},
      {{"verify", "3", "4", "2", "--budget", "5"}, cli::kBudgetExceeded},
      {{"table", "--m-max", "3", "--n-max", "4", "--out", "/nonexistent-dir/t.csv"}, cli::kIoError},
  };
  for (const auto& [args, want] : codes) {
    const int got = zmtool(args).code;
    if (got != want) o.fail(args.front() + " exit " + std::to_string(got) + ", expected " + std::to_string(want));
  }

  const auto table = zmtool({"table", "--m-max", "60", "--n-max", "40"});
  std::istringstream in(table.out);
  std::string line;
  std::getline(in, line);
  std::tuple<long, long, long> prev{-1, -1, -1};
  while (std::getline(in, line)) {
    long m, n, r;
    char c;
    std::istringstream row(line);
    row >> m >> c >> n >> c >> r;
    if (!(prev < std::tuple(m, n, r))) o.fail("table order at " + line);
    prev = {m, n, r};
  }
  if (table.out != zmtool({"table", "--m-max", "60", "--n-max", "40"}).out) o.fail("table not deterministic");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 Dic3 info: k = 6, k' = 5", ac1},
      {"AC2 dihedral family m odd in [3,99]", ac2},
      {"AC3 formula-vs-oracle sweep, mn <= 200", ac3},
      {"AC4 extended conjugacy sweep, mn <= 2000", ac4},
      {"AC5 bounds containment", ac5},
      {"AC6 special-case agreement", ac6},
      {"AC7 Menon identity and f closed form to 10^4", ac7},
      {"AC8 k_prime_fast equivalence and speed", ac8},
      {"AC9 CLI contract", ac9},
  };
  int failed = 0;
  for (const auto& [label, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  %s  (%.2f s)\n", o.pass ? "PASS" : "FAIL", label.c_str(), seconds_since(t0));
    for (const auto& line : o.notes) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
