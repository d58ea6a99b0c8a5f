#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ghzq/criterion.hpp"
#include "test_helpers.hpp"

using namespace ghzq;
using namespace ghzq::test;

namespace {

std::vector<int> admissible_n2_list(const CriterionResult& r) {
  std::vector<int> out;
  for (const AdmissibleN2& a : r.admissible) out.push_back(a.n2);
  return out;
}

} // namespace

TEST_CASE("admissible_constructions") {
  SUBCASE("(4,3): only N2 = 3 works, chosen has N1 = 1") {
    const CriterionResult r = admissible_constructions(4, 3);
    CHECK(admissible_n2_list(r) == std::vector<int>{3});
    REQUIRE(r.chosen.has_value());
    CHECK(r.chosen->n2 == 3);
    CHECK(r.chosen->n1 == 1);
    CHECK(r.chosen->g == 3);
  }

  SUBCASE("(4,6): N2 = 3 admissible, N2 = 2 not (gcd 2 divides 4)") {
    const CriterionResult r = admissible_constructions(4, 6);
    CHECK(admissible_n2_list(r) == std::vector<int>{3});
    REQUIRE(r.chosen.has_value());
    CHECK(r.chosen->g == 3);
    CHECK(r.chosen->d == 2);
  }

  SUBCASE("(4,2): nothing admissible") {
    const CriterionResult r = admissible_constructions(4, 2);
    CHECK(r.admissible.empty());
    CHECK_FALSE(r.chosen.has_value());
  }

  SUBCASE("(3,2): N2 = 2 admissible (the original three-qubit case)") {
    const CriterionResult r = admissible_constructions(3, 2);
    CHECK(admissible_n2_list(r) == std::vector<int>{2});
    REQUIRE(r.chosen.has_value());
    CHECK(r.chosen->n1 == 1);
    CHECK(r.chosen->n2 == 2);
  }

  SUBCASE("every listed N2 carries a gcd witness that does not divide N") {
    for (int parties : {3, 4, 5, 6, 7}) {
      for (int dim = 2; dim <= 9; ++dim) {
        const CriterionResult r = admissible_constructions(parties, dim);
        for (const AdmissibleN2& a : r.admissible) {
          CHECK(a.n2 >= 1);
          CHECK(a.n2 <= parties - 1);
          CHECK(a.gcd_value == std::gcd(a.n2, dim));
          CHECK(parties % a.gcd_value != 0);
        }
        if (!r.admissible.empty()) {
          REQUIRE(r.chosen.has_value());
          CHECK(r.chosen->n2 == r.admissible.front().n2);  // smallest admissible N2
        }
      }
    }
  }
}

TEST_CASE("criterion and certificate agree across the grid") {
  for (int parties : {3, 4, 5}) {
    for (int dim : {2, 3, 4, 5, 6}) {
      const CriterionResult r = admissible_constructions(parties, dim);
      CAPTURE(parties);
      CAPTURE(dim);
      if (r.chosen) {
        CertifyOptions opt;  // default bounds; largest space here is 6^10
        CHECK(certify(*r.chosen, opt).contradiction);
      }
      // Every constructible non-admissible N2 must fail to certify.
      for (int n2 = 1; n2 < parties; ++n2) {
        const std::int64_t g = std::gcd(n2, dim);
        if (g < 2 || parties % g != 0) continue;  // not constructible or admissible
        CAPTURE(n2);
        CHECK_FALSE(certify(make_construction(parties, dim, n2)).contradiction);
      }
    }
  }
}

TEST_CASE("reproduce_known_case") {
  SUBCASE("three-qubit case certifies") {
    const ConstructionParams p = reproduce_known_case(KnownCase::Ghz3Qubit);
    CHECK(p.parties == 3);
    CHECK(p.dim == 2);
    CHECK(p.n1 == 1);
    CHECK(p.n2 == 2);
    CHECK(certify(p).contradiction);
  }

  SUBCASE("(D+1)-qudit case for D=3 gives (4,3,1,3) and certifies") {
    const ConstructionParams p = reproduce_known_case(KnownCase::ZukowskiDplus1, 0, 3);
    CHECK(p.parties == 4);
    CHECK(p.dim == 3);
    CHECK(p.n1 == 1);
    CHECK(p.n2 == 3);
    CHECK(certify(p).contradiction);
  }

  SUBCASE("odd-N even-D case (5,4): g=2, both even N2 admissible") {
    const ConstructionParams p = reproduce_known_case(KnownCase::CerfLeeOddNEvenD, 5, 4);
    CHECK(p.g == 2);
    CHECK(p.n2 == 4);
    CHECK(p.n1 == 1);
    const CriterionResult r = admissible_constructions(5, 4);
    CHECK(admissible_n2_list(r) == std::vector<int>{2, 4});
    CHECK(certify(p).contradiction);
  }

  SUBCASE("invalid requests raise invalid_argument") {
    CHECK_THROWS_AS(reproduce_known_case(KnownCase::CerfLeeOddNEvenD, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(reproduce_known_case(KnownCase::CerfLeeOddNEvenD, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(reproduce_known_case(KnownCase::ZukowskiDplus1, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("genuinely_npartite_check") {
  SUBCASE("(4,3,1,3): every removal breaks exactly the shifted observables of other parties") {
    const NPartiteReport report = genuinely_npartite_check(make_construction(4, 3, 3));
    CHECK(report.genuinely_npartite);
    REQUIRE(report.removals.size() == 4);
    for (const PartyRemovalResult& row : report.removals) {
      // v_0 reduces to X^(N-1), which always keeps the GHZ eigenstate.
      CHECK(row.residuals[0] <= 1e-10);
      CHECK_FALSE(row.failing.empty());
      // Numerical failures equal the exact-oracle failures (also enforced
      // inside the check; asserted here for visibility).
      CHECK(row.failing == row.oracle_failing);
      // The failing set is exactly the shifted observables whose X block
      // does not sit on the removed party.
      std::vector<int> expected;
      for (int l = 1; l <= 4; ++l)
        if (l != row.removed_party) expected.push_back(l);
      CHECK(row.failing == expected);
    }
  }

  SUBCASE("(4,6,1,3): same failure structure at D=6") {
    const NPartiteReport report = genuinely_npartite_check(make_construction(4, 6, 3));
    CHECK(report.genuinely_npartite);
    for (const PartyRemovalResult& row : report.removals) {
      CHECK(row.residuals[0] <= 1e-10);
      for (int l : row.failing) CHECK(row.residuals[static_cast<std::size_t>(l)] > 1e-6);
      CHECK(row.failing == row.oracle_failing);
    }
  }

  SUBCASE("N1 >= 2 constructions are also genuinely N-partite") {
    const NPartiteReport report = genuinely_npartite_check(make_construction(5, 9, 3));
    CHECK(report.genuinely_npartite);
  }
}

TEST_CASE("genuinely_ddim_check") {
  SUBCASE("(D=3, 0 vs 1/3): frozen minimum, strictly positive") {
    const DDimReport report = genuinely_ddim_check(3, R(0), R(1, 3));
    CHECK(report.min_overlap == doctest::Approx(0.085924267010480282).epsilon(1e-10));
    CHECK(report.positive);
    // The reported argmin attains the minimum.
    CHECK(overlap_sq(3, report.argmin_n, R(0), report.argmin_m, R(1, 3)) ==
          doctest::Approx(report.min_overlap).epsilon(1e-12));
  }

  SUBCASE("(D=2, 0 vs 1/2): flat at 1/2") {
    const DDimReport report = genuinely_ddim_check(2, R(0), R(1, 2));
    CHECK(report.min_overlap == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(report.positive);
  }

  SUBCASE("integer difference violates the precondition") {
    CHECK_THROWS_AS(genuinely_ddim_check(3, R(0), R(1)), std::invalid_argument);
  }

  SUBCASE("strictly positive overlaps for every construction in the grid") {
    for (int parties : {3, 4, 5}) {
      for (int dim : {2, 3, 4, 5, 6}) {
        const CriterionResult r = admissible_constructions(parties, dim);
        if (!r.chosen) continue;
        const DDimReport report = genuinely_ddim_check(dim, R(0), Rational(1, r.chosen->n2));
        CAPTURE(parties);
        CAPTURE(dim);
        CHECK(report.positive);
        CHECK(report.min_overlap > 1e-9);
      }
    }
  }
}
