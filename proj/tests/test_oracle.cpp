#include <doctest.h>

#include <algorithm>
#include <set>

#include "orthocurrent/oracle.hpp"
#include "orthocurrent/report.hpp"
#include "support.hpp"

using namespace orthocurrent;

namespace {

DiagonalEntries entries(const Field& f, long long a, long long b, long long c, long long d) {
  return {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)};
}

bool contains(const std::vector<Subspace>& list, const Subspace& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

}  // namespace

TEST_CASE("subspace count examples") {
  CHECK(count_subspaces(2, 2, 1) == 3);
  CHECK(count_subspaces(3, 6, 3) == 33880);
  CHECK(count_subspaces(2, 4, 0) == 1);
  CHECK_THROWS_AS(count_subspaces(7, 2, 1), Error);
  CHECK_THROWS_AS(count_subspaces(2, 7, 1), Error);
  CHECK_THROWS_AS(count_subspaces(2, 3, 4), Error);
}

TEST_CASE("subspace counts are Gaussian binomials") {
  for (unsigned q : {2U, 3U}) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(count_subspaces(q, n, k) == testsupport::gaussian_binomial(q, n, k));
      }
    }
  }
}

TEST_CASE("enumerated subspaces are canonical and distinct") {
  std::set<std::vector<std::string>> seen;
  std::size_t count = 0;
  enumerate_subspaces(3, 4, 2, [&](const Subspace& s) {
    CHECK(s.dim() == 2);
    std::vector<std::string> key;
    for (const auto& v : s.basis_vectors()) key.push_back(to_string(v));
    seen.insert(key);
    CHECK(canonicalize_subspace(s.field(), s.basis_vectors(), 4) == s);
    ++count;
  });
  CHECK(count == testsupport::gaussian_binomial(3, 4, 2));
  CHECK(seen.size() == count);
}

TEST_CASE("ideals over F3") {
  const Field f3 = Field::prime(3);
  const auto split = classify(f3, entries(f3, 1, 1, 1, 1));
  const auto ideals = enumerate_ideals(build_orthogonal_algebra(f3, entries(f3, 1, 1, 1, 1)).m);
  REQUIRE(ideals.size() == 4);
  const auto& two = std::get<TwoSimpleIdeals>(split.evidence);
  CHECK(contains(ideals, two.first));
  CHECK(contains(ideals, two.second));
  CHECK(contains(ideals, Subspace(f3, 6)));
  CHECK(contains(ideals, Subspace::full(f3, 6)));
  CHECK(all_ok(oracle_checks(split, ideals)));

  const auto simple = enumerate_ideals(build_orthogonal_algebra(f3, entries(f3, 1, 1, 1, 2)).m);
  REQUIRE(simple.size() == 2);
  CHECK(simple[0].dim() == 0);
  CHECK(simple[1].dim() == 6);
}

TEST_CASE("ideals over F2 contain R but not N") {
  const Field f2 = Field::prime(2);
  const auto e = entries(f2, 1, 1, 1, 1);
  const auto cert = classify(f2, e);
  const auto alg = build_orthogonal_algebra(f2, e);
  const auto ideals = enumerate_ideals(alg.m);
  const auto& nr = std::get<SemidirectNR>(cert.evidence);
  CHECK(contains(ideals, nr.r));
  CHECK_FALSE(contains(ideals, nr.n));
  CHECK(bracket_span(alg.m, nr.r, nr.r).dim() == 0);
  CHECK(all_ok(oracle_checks(cert, ideals)));
}

TEST_CASE("ideal lattice properties") {
  std::mt19937_64 rng(31);
  for (unsigned p : {2U, 3U}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 2; ++trial) {
      const auto e = testsupport::random_entries(f, rng);
      const auto alg = build_orthogonal_algebra(f, e);
      const auto ideals = enumerate_ideals(alg.m, 2);
      CHECK(ideals == enumerate_ideals(alg.m, 1));
      for (const auto& a : ideals) {
        CHECK(is_ideal(alg.m, a));
        for (const auto& b : ideals) {
          auto mj = subspace_meet_join(a, b);
          CHECK(contains(ideals, mj.intersection));
          CHECK(contains(ideals, mj.sum));
        }
      }
      for (int i = 0; i < 6; ++i) {
        const Vector v = testsupport::random_matrix(f, 1, 6, rng).row(0);
        const Subspace j = ideal_closure(alg.m, {v});
        CHECK(contains(ideals, j));
        for (const auto& s : ideals) {
          if (s.contains(v)) CHECK(s.contains(j));
        }
      }
      const auto cert = classify(f, e);
      CHECK(all_ok(oracle_checks(cert, ideals)));
    }
  }
}

TEST_CASE("oracle rejects unsupported inputs") {
  const Field q = Field::rationals();
  const auto alg = build_orthogonal_algebra(q, entries(q, 1, 1, 1, 1));
  CHECK_THROWS_AS(enumerate_ideals(alg.m), Error);
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS(enumerate_ideals(build_orthogonal_algebra(f7, entries(f7, 1, 1, 1, 1)).m), Error);
}

#ifdef ORTHOCURRENT_SLOW_TESTS
TEST_CASE("ideals over F5") {
  const Field f5 = Field::prime(5);
  const auto split = enumerate_ideals(build_orthogonal_algebra(f5, entries(f5, 1, 1, 1, 1)).m);
  CHECK(split.size() == 4);
  const auto simple = enumerate_ideals(build_orthogonal_algebra(f5, entries(f5, 1, 1, 1, 2)).m);
  CHECK(simple.size() == 2);
}
#endif
