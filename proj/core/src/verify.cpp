#include "aci/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "aci/cas_export.hpp"
#include "aci/classification.hpp"
#include "aci/error.hpp"
#include "aci/gorenstein.hpp"
#include "aci/koszul_betti.hpp"
#include "aci/liaison.hpp"
#include "aci/monomial_ideal.hpp"
#include "aci/pfaffian.hpp"

namespace aci {

namespace {

// Runs body, which returns an empty string on success or a failure detail.
CheckResult timed(std::string name, std::string tag, const std::function<std::string(int&)>& body) {
  CheckResult result{std::move(name), std::move(tag), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  int cases = 0;
  try {
    const std::string failure = body(cases);
    result.passed = failure.empty();
    result.detail = result.passed ? std::to_string(cases) + " cases" : failure;
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string tuple_string(int a1, int a2, int a3, int h) {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + "), h=" + std::to_string(h);
}

BettiTable rigid_table(int a) {
  return BettiTable(3, {{0}, {a, a, a, a + 1}, {a + 1, 2 * a, 2 * a, 2 * a, 2 * a + 1}, {2 * a + 1, 3 * a}});
}

// Sorted tuples 2 <= a1 <= a2 <= a3 <= max_degree with each admissible h.
void for_each_aci_case(int max_degree, const std::function<void(int, int, int, int)>& visit) {
  for (int a1 = 2; a1 <= max_degree; ++a1)
    for (int a2 = a1; a2 <= max_degree; ++a2)
      for (int a3 = a2; a3 <= max_degree; ++a3)
        for (int h = a3 + 1; h <= a3 + a1 - 1; ++h) visit(a1, a2, a3, h);
}

}  // namespace

CheckResult check_aci_sequences(int max_degree) {
  return timed("monomial ACI realizes every CI Hilbert function", "ci-sequence-is-aci-sequence", [&](int& cases) {
    std::string failure;
    for_each_aci_case(max_degree, [&](int a1, int a2, int a3, int h) {
      ++cases;
      if (!failure.empty()) return;
      const DegreeTuple degrees{a1, a2, a3};
      const MonomialIdeal ideal = aci_construction(degrees, h);
      if (ideal.generators().size() != 4) failure = tuple_string(a1, a2, a3, h) + ": not 4 minimal generators";
      else if (hilbert_function(ideal) != ci_hilbert(degrees))
        failure = tuple_string(a1, a2, a3, h) + ": Hilbert function differs";
    });
    return failure;
  });
}

CheckResult check_colon_identity(int max_degree) {
  return timed("colon by the monomial ACI is a CI and matches the link formula", "colon-ideal-link", [&](int& cases) {
    std::string failure;
    for_each_aci_case(max_degree, [&](int a1, int a2, int a3, int h) {
      ++cases;
      if (!failure.empty()) return;
      const MonomialIdeal iq = aci_construction(DegreeTuple{a1, a2, a3}, h);
      const MonomialIdeal iz{Monomial{a1, 0, 0}, Monomial{0, a2, 0}, Monomial{0, 0, h}};
      const MonomialIdeal ig = colon(iz, iq);
      const auto exps = ig.ci_exponents();
      if (!exps || *exps != std::vector<int>{h - a3, a1, a2}) {
        failure = tuple_string(a1, a2, a3, h) + ": colon is (" + ig.to_string() + ")";
        return;
      }
      if (link_hilbert(DegreeTuple{a1, a2, h}, hilbert_function(iq)) != hilbert_function(ig))
        failure = tuple_string(a1, a2, a3, h) + ": link_hilbert disagrees with the colon ideal";
    });
    return failure;
  });
}

CheckResult check_rigid_resolutions(int max_a) {
  return timed("h = a+1 witness has the rigid t = 2 resolution", "rigid-resolution-h-a-plus-1", [&](int& cases) {
    for (int a = 2; a <= max_a; ++a) {
      ++cases;
      const auto check = verify_resolution(rigid_aci_witness(a), rigid_table(a));
      if (!check.matches) return "a=" + std::to_string(a) + ": " + check.differences.front();
      const ClassifiedTable maximal = maximal_table({a, a + 1, Parity::even});
      if (maximal.table != rigid_table(a)) return "a=" + std::to_string(a) + ": maximal table differs";
    }
    return std::string();
  });
}

CheckResult check_classification(int max_a) {
  return timed("enumerated tables are coherent", "classification-coherence", [&](int& cases) -> std::string {
    for (int a = 2; a <= max_a; ++a) {
      const HilbertFunction target = ci_hilbert(DegreeTuple{a, a, a});
      for (int h = a + 1; h <= 3 * a - 2; ++h) {
        const TablePoset poset = enumerate_tables(a, h);
        for (const auto& ct : poset.tables) {
          ++cases;
          const std::string where = "a=" + std::to_string(a) + ", h=" + std::to_string(h) + ", t=" + std::to_string(ct.t());
          const BettiTable& table = ct.table;
          const bool even = ct.t() % 2 == 0;
          if (hilbert_from_betti(table) != target) return where + ": Hilbert function differs";
          if (table.level(1) != std::vector<int>{a, a, a, h}) return where + ": generator degrees differ";

          std::multiset<int> g_part(table.level(3).begin(), table.level(3).end());
          if (table.count(3, 3 * a) != 1) return where + ": 3a not exactly once at level 3";
          g_part.erase(g_part.find(3 * a));
          if (even) g_part.erase(g_part.find(a + h));
          std::multiset<int> dual;
          for (int j : g_part) dual.insert(3 * a + h - j);
          if (dual != g_part) return where + ": last module not self-dual";

          const int at_level2 = table.count(2, a + h);
          const int at_level3 = table.count(3, a + h);
          // When h = 2a the twist a+h = 3a is the socle summand, not a first syzygy.
          const int socle_overlap = (a + h == 3 * a) ? 1 : 0;
          if (even && (at_level2 != 1 || at_level3 != 1)) return where + ": a+h multiplicity not 1";
          if (!even && at_level2 != 0) return where + ": a+h syzygy with t odd";
          if (!even && at_level3 != socle_overlap) return where + ": a+h at level 3 with t odd";
          if (table.count(2, 2 * a) < 3) return where + ": fewer than three 2a syzygies";
          if (h >= 2 * a && even) return where + ": even t with h >= 2a";
          if (d_star(ct) != (even ? a : h)) return where + ": d* mismatch";
          if ((ct.family.parity == Parity::even) != even) return where + ": parity tag mismatch";
        }
      }
    }
    return {};
  });
}

CheckResult check_t_max(int max_a) {
  return timed("maximum t equals t_max(a), attained at h = 2a", "t-max", [&](int& cases) -> std::string {
    for (int a = 2; a <= max_a; ++a) {
      ++cases;
      int best = 0;
      int best_at_2a = 0;
      for (int h = a + 1; h <= 3 * a - 2; ++h) {
        for (const auto& ct : enumerate_tables(a, h).tables) {
          best = std::max(best, ct.t());
          if (h == 2 * a) best_at_2a = std::max(best_at_2a, ct.t());
        }
      }
      const int expected = a % 2 == 0 ? a + 1 : a;
      if (best != expected || t_max(a) != expected || best_at_2a != expected)
        return "a=" + std::to_string(a) + ": max t " + std::to_string(best) + ", expected " + std::to_string(expected);
    }
    return {};
  });
}

CheckResult check_ah_cancellation(int max_a) {
  return timed("R(-(a+h)) cancellable iff t >= 4", "a-plus-h-cancellation", [&](int& cases) -> std::string {
    for (int a = 2; a <= max_a; ++a) {
      for (int h = a + 1; h <= 2 * a - 1; ++h) {
        const TablePoset poset = enumerate_tables(a, h);
        for (const auto& ct : poset.tables) {
          if (ct.family.parity != Parity::even) continue;
          ++cases;
          const std::string where = "a=" + std::to_string(a) + ", h=" + std::to_string(h) + ", t=" + std::to_string(ct.t());
          bool succeeded = false;
          try {
            const ClassifiedTable odd = cancel_ah(ct);
            succeeded = true;
            if (odd.t() != ct.t() - 1 || odd.family.parity != Parity::odd) return where + ": wrong t or parity";
            const bool listed = std::any_of(poset.tables.begin(), poset.tables.end(),
                                            [&](const ClassifiedTable& o) { return o.table == odd.table; });
            if (!listed) return where + ": result is not an enumerated odd table";
            // Cancelling from the maximal even table yields the maximal odd table.
            if (ct.table == maximal_table({a, h, Parity::even}).table &&
                odd.table != maximal_table({a, h, Parity::odd}).table)
              return where + ": does not reach the maximal odd table";
          } catch (const Error& e) {
            if (e.code() != ErrorCode::not_allowed) throw;
          }
          if (succeeded != (ct.t() >= 4)) return where + ": cancel_ah success does not match t >= 4";
        }
      }
    }
    return {};
  });
}

CheckResult check_link_identity(int max_a) {
  return timed("CI(a,a,h) linked to CI(a,a,a) gives CI(h-a,a,a)", "ci-link-identity", [&](int& cases) -> std::string {
    for (int a = 2; a <= max_a; ++a)
      for (int h = a + 1; h <= 3 * a - 2; ++h) {
        ++cases;
        if (!ci_link_identity(a, h)) return "a=" + std::to_string(a) + ", h=" + std::to_string(h);
      }
    return {};
  });
}

CheckResult check_gaeta(int max_a) {
  return timed("Gaeta conditions on the linked Gorenstein degree sequences", "gaeta-conditions", [&](int& cases) -> std::string {
    for (int a = 2; a <= max_a; ++a) {
      for (int h = a + 1; h <= 2 * a - 1; ++h) {
        ++cases;
        if (!gaeta_check(delta_low(a, h)).ok) return "delta_low(" + std::to_string(a) + "," + std::to_string(h) + ")";
      }
      for (int h = 2 * a; h <= 3 * a - 2; ++h) {
        ++cases;
        if (!gaeta_check(delta_high(a, h)).ok) return "delta_high(" + std::to_string(a) + "," + std::to_string(h) + ")";
      }
    }
    cases += 2;
    if (!gaeta_check(GorensteinDelta({2, 3, 3, 4, 4})).ok) return "(2,3,3,4,4) rejected";
    if (gaeta_check(GorensteinDelta({2, 2, 5, 5, 5, 5, 6})).ok) return "(2,2,5,5,5,5,6) accepted";
    return {};
  });
}

CheckResult check_pfaffian_degrees() {
  return timed("sub-pfaffian p_i of Alt(delta) is homogeneous of degree d_i", "alt-delta-pfaffians", [&](int& cases) -> std::string {
    std::vector<int> current;
    std::string failure;
    std::function<void(std::size_t, int)> walk = [&](std::size_t length, int min_entry) {
      if (!failure.empty()) return;
      if (current.size() == length) {
        GorensteinDelta delta(current);
        if (!delta.theta()) return;
        ++cases;
        const AlternatingMatrix m = alt_matrix(delta);
        const auto pf = sub_pfaffians(m);
        // The pair (d_{n+1}, d_{n+2}) must also satisfy the strict inequality, otherwise
        // the corresponding entry of Alt(delta) is zero and p_1 collapses.
        const std::size_t n = static_cast<std::size_t>(delta.n());
        const bool gaeta = gaeta_check(delta).ok && *delta.theta() > delta[n] + delta[n + 1];
        for (std::size_t i = 0; i < pf.size(); ++i) {
          const auto degree = pf[i].homogeneous_degree();
          if (!pf[i].is_zero() && degree != delta[i]) {
            failure = "p_" + std::to_string(i + 1) + " of a delta of length " + std::to_string(length) + " has wrong degree";
            return;
          }
          if (gaeta && pf[i].is_zero()) {
            failure = "p_" + std::to_string(i + 1) + " vanishes although every entry pairing has positive degree";
            return;
          }
        }
        return;
      }
      for (int d = min_entry; d <= 8; ++d) {
        current.push_back(d);
        walk(length, d);
        current.pop_back();
      }
    };
    for (std::size_t length : {3u, 5u, 7u}) walk(length, 1);
    return failure;
  });
}

CheckResult check_pf_squared(int samples_per_size, std::uint64_t seed) {
  return timed("Pf(M)^2 = det(M) on integer specializations", "pfaffian-determinant", [&](int& cases) -> std::string {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-20, 20);
    for (std::size_t size : {2u, 4u, 6u}) {
      const AlternatingMatrix m = generic_alternating(size);
      for (int s = 0; s < samples_per_size; ++s) {
        ++cases;
        std::vector<Integer> point;
        for (std::size_t k = 0; k < m.variables()->size(); ++k) point.emplace_back(entry(rng));
        if (!pf_squared_equals_det(m, point)) return "size " + std::to_string(size) + ", sample " + std::to_string(s);
      }
    }
    return {};
  });
}

CheckResult check_example_degrees() {
  return timed("example ideals are generated in degrees (3,3,3,5)", "worked-example-a3-h5", [&](int& cases) -> std::string {
    const ExampleIdeals ex = example_ideals_a3_h5();
    for (const auto* gens : {&ex.iq, &ex.iw}) {
      ++cases;
      std::vector<int> degrees;
      for (const auto& g : *gens) {
        const auto d = g.homogeneous_degree();
        if (!d) return std::string("generator is zero or not homogeneous: ") + g.to_string();
        degrees.push_back(*d);
      }
      std::sort(degrees.begin(), degrees.end());
      if (degrees != std::vector<int>{3, 3, 3, 5}) return std::string("degrees differ from (3,3,3,5)");
    }
    const ClassifiedTable maximal = maximal_table({3, 5, Parity::even});
    if (maximal.table != example_expected_table(ExampleVariant::maximal)) return std::string("maximal table differs");
    if (cancel_ah(maximal).table != example_expected_table(ExampleVariant::cancelled))
      return std::string("cancelled table differs");
    return {};
  });
}

CheckResult check_cas_scripts() {
  return timed("Macaulay2 scripts are lint-clean and byte-stable", "external-cas-export", [&](int& cases) -> std::string {
    for (auto variant : {ExampleVariant::maximal, ExampleVariant::cancelled}) {
      ++cases;
      const std::string first = macaulay2_example_script(variant);
      const std::string second = macaulay2_example_script(variant);
      if (first != second) return std::string("script not byte-stable");
      const auto problems = lint_macaulay2(first);
      if (!problems.empty()) return problems.front();
    }
    ++cases;
    const MonomialIdeal ci{Monomial{2, 0, 0}, Monomial{0, 2, 0}, Monomial{0, 0, 3}};
    const auto problems = lint_macaulay2(macaulay2_monomial_script(ci, BettiTable::koszul(DegreeTuple{2, 2, 3})));
    if (!problems.empty()) return problems.front();
    return {};
  });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  static const std::set<std::string> kScopes{"monomial", "section3", "liaison", "koszul", "classification", "pfaffian", "all"};
  if (!kScopes.contains(options.scope)) throw Error(ErrorCode::invalid_input, "unknown scope: " + options.scope);
  // "section3" is the older name of the monomial scope.
  const std::string scope = options.scope == "section3" ? "monomial" : options.scope;
  const auto in = [&](const char* name) { return scope == "all" || scope == name; };

  std::vector<CheckResult> out;
  if (in("monomial")) {
    out.push_back(check_aci_sequences(options.max_degree));
    out.push_back(check_colon_identity(options.max_degree));
  }
  if (in("liaison")) out.push_back(check_link_identity(std::max(options.max_a, 8)));
  if (in("koszul")) out.push_back(check_rigid_resolutions(std::min(options.max_a, 5)));
  if (in("classification")) {
    out.push_back(check_classification(options.max_a));
    out.push_back(check_t_max(std::max(options.max_a, 8)));
    out.push_back(check_ah_cancellation(options.max_a));
    out.push_back(check_gaeta(std::max(options.max_a, 8)));
  }
  if (in("pfaffian")) {
    out.push_back(check_pfaffian_degrees());
    out.push_back(check_pf_squared(100, 20240611));
    out.push_back(check_example_degrees());
    out.push_back(check_cas_scripts());
  }
  return out;
}

}  // namespace aci
