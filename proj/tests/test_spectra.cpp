#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace thermocat;

TEST_CASE("sort_desc orders entries non-increasingly") {
  CHECK(sort_desc(rvec({"1/8", "1/2", "3/8"})) == rvec({"1/2", "3/8", "1/8"}));
  CHECK(sort_desc(rvec({"1"})) == rvec({"1"}));
  CHECK(sort_desc(rvec({"1/4", "1/4", "1/4", "1/4"})) == rvec({"1/4", "1/4", "1/4", "1/4"}));
  CHECK(is_sorted_desc(sort_desc(rvec({"1/8", "1/2", "3/8"}))));
}

TEST_CASE("tensor_uniform spreads each entry over m equal shares") {
  CHECK(tensor_uniform(rvec({"1/2", "1/2"}), 2) == rvec({"1/4", "1/4", "1/4", "1/4"}));
  CHECK(tensor_uniform(rvec({"1"}), 3) == rvec({"1/3", "1/3", "1/3"}));
  CHECK(tensor_uniform(rvec({"1/2", "1/4", "1/8", "1/8", "0", "0", "0", "0"}), 2) ==
        rvec({"1/4", "1/4", "1/8", "1/8", "1/16", "1/16", "1/16", "1/16", "0", "0", "0", "0",
              "0", "0", "0", "0"}));
  CHECK(sum_of(tensor_uniform(rvec({"1/2", "1/3", "1/6"}), 7)) == rat("1"));
  CHECK_THROWS_AS(tensor_uniform(rvec({"1"}), 0), std::invalid_argument);
}

TEST_CASE("pad_pure appends n*(m-1) zeros") {
  CHECK(pad_pure(rvec({"1/2", "1/2"}), 2) == rvec({"1/2", "1/2", "0", "0"}));
  CHECK(pad_pure(rvec({"1"}), 2) == rvec({"1", "0"}));
  const auto padded =
      pad_pure(rvec({"1/4", "1/4", "1/8", "1/8", "1/16", "1/16", "1/16", "1/16"}), 2);
  REQUIRE(padded.size() == 16);
  for (std::size_t i = 8; i < 16; ++i) CHECK(padded[i] == rat("0"));
  CHECK_THROWS_AS(pad_pure(rvec({"1"}), 0), std::invalid_argument);
}

TEST_CASE("majorizes compares prefix sums on sorted vectors") {
  CHECK(majorizes(rvec({"1", "0"}), rvec({"1/2", "1/2"})));
  CHECK_FALSE(majorizes(rvec({"1/2", "1/2"}), rvec({"1", "0"})));

  const auto pair = optimal_pair<Rational>(2, 3);
  CHECK(majorizes(tensor_uniform(pair.omega_in, 2), pad_pure(pair.omega_out, 2)));

  CHECK_THROWS_AS(majorizes(rvec({"1", "0"}), rvec({"1/2", "1/4", "1/4"})),
                  std::invalid_argument);
}

TEST_CASE("majorizes is reflexive, bounded by the pure and uniform extremes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + int(rng() % 6);
    std::vector<Rational> v;
    Rational left(1);
    for (int i = 0; i + 1 < n; ++i) {
      const Rational x = left * Rational(std::int64_t(rng() % 17), 16);
      v.push_back(x);
      left -= x;
    }
    v.push_back(left);
    auto p = sort_desc(ProbVec<Rational>{std::move(v)});

    std::vector<Rational> pure(p.size(), Rational(0)),
        uni(p.size(), Rational(1, static_cast<std::int64_t>(p.size())));
    pure[0] = 1;
    CHECK(majorizes(p, p));
    CHECK(majorizes(ProbVec<Rational>{pure}, p));
    CHECK(majorizes(p, ProbVec<Rational>{uni}));
  }
}

TEST_CASE("mixing by a doubly stochastic matrix is majorization-decreasing") {
  // Convex mixtures of permutation matrices are doubly stochastic, and the
  // mixed vector must always be majorized by the original.
  std::mt19937_64 rng(11);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> v;
      Rational left(1);
      for (int i = 0; i + 1 < n; ++i) {
        const Rational x = left * Rational(std::int64_t(rng() % 9), 8);
        v.push_back(x);
        left -= x;
      }
      v.push_back(left);
      const auto q = sort_desc(ProbVec<Rational>{v});

      std::vector<Rational> mixed(q.size(), Rational(0));
      std::vector<std::size_t> perm(q.size());
      Rational wleft(1);
      const int kParts = 4;
      for (int part = 0; part < kParts; ++part) {
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const Rational w = part + 1 == kParts ? wleft : wleft * Rational(1, 2);
        wleft -= w;
        for (std::size_t i = 0; i < perm.size(); ++i) mixed[perm[i]] += w * q[i];
      }
      CHECK(majorizes(q, sort_desc(ProbVec<Rational>{mixed})));
    }
  }
}

TEST_CASE("trace_distance is half the l1 difference") {
  const auto p = rvec({"1/2", "3/8", "1/8"});
  CHECK(trace_distance(p, p) == rat("0"));
  CHECK(trace_distance(rvec({"1", "0"}), rvec({"0", "1"})) == rat("1"));
  const auto pair = optimal_pair<Rational>(2, 3);
  CHECK(trace_distance(pair.omega_in, pair.omega_out) == rat("1/4"));
  CHECK_THROWS_AS(trace_distance(p, rvec({"1/2", "1/2"})), std::invalid_argument);
}

TEST_CASE("trace_distance equals the one-sided positive part and obeys the triangle bound") {
  std::mt19937_64 rng(23);
  auto draw = [&rng](int n) {
    std::vector<Rational> v;
    Rational left(1);
    for (int i = 0; i + 1 < n; ++i) {
      const Rational x = left * Rational(std::int64_t(rng() % 13), 12);
      v.push_back(x);
      left -= x;
    }
    v.push_back(left);
    return ProbVec<Rational>{std::move(v)};
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + int(rng() % 5);
    const auto p = draw(n), q = draw(n), r = draw(n);
    Rational pos(0);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > q[i]) pos += p[i] - q[i];
    CHECK(trace_distance(p, q) == pos);
    CHECK(trace_distance(p, q) == trace_distance(q, p));
    CHECK(trace_distance(p, q) <= trace_distance(p, r) + trace_distance(r, q));
  }
}

TEST_CASE("check_transformation decides erasure feasibility") {
  CHECK(check_transformation(optimal_pair<Rational>(2, 3)));

  const auto uni = ProbVec<Rational>{std::vector<Rational>(4, Rational(1, 4))};
  CHECK_FALSE(check_transformation(CatalystPair<Rational>{2, uni, uni}));

  CHECK(check_transformation(
      CatalystPair<Rational>{2, rvec({"1", "0"}), rvec({"1/2", "1/2"})}));
}

TEST_CASE("feasible pairs cannot use more than n/m input levels") {
  // Feasibility forces the input to vanish beyond index n/m.
  for (int m : {2, 3}) {
    for (int a : {1, 2, 3}) {
      const auto pair = optimal_pair<Rational>(m, a);
      REQUIRE(check_transformation(pair));
      const auto n = static_cast<std::int64_t>(pair.omega_in.size());
      std::int64_t support = 0;
      for (const auto& x : pair.omega_in)
        if (x != Rational(0)) ++support;
      CHECK(support <= n / m);
    }
  }
}

TEST_CASE("probability vectors reject bad data") {
  CHECK_THROWS_AS(validate_prob_vec(ProbVec<Rational>{}), std::invalid_argument);
  CHECK_THROWS_AS(validate_prob_vec(rvec({"1/2", "1/4"})), std::invalid_argument);
  std::vector<Rational> neg{Rational(3, 2), Rational(-1, 2)};
  CHECK_THROWS_AS(validate_prob_vec(ProbVec<Rational>{neg}), std::invalid_argument);
  CHECK_THROWS_AS(validate_prob_vec(dvec({0.5, 0.5001})), std::invalid_argument);
  CHECK_NOTHROW(validate_prob_vec(dvec({0.5, 0.5 + 5e-13})));
}
