#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace thermocat;

TEST_CASE("family_dim computes m^a under the size cap") {
  CHECK(family_dim(2, 3) == 8);
  CHECK(family_dim(3, 2) == 9);
  CHECK(family_dim(2, 20) == (1 << 20));
  CHECK_THROWS_AS(family_dim(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(family_dim(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_dim(2, 21), std::invalid_argument);
}

TEST_CASE("closed-form error is (m-1)/(1+(m-1)a)") {
  CHECK(optimal_error<Rational>(2, 1) == rat("1/2"));
  CHECK(optimal_error<Rational>(2, 2) == rat("1/3"));
  CHECK(optimal_error<Rational>(2, 3) == rat("1/4"));
  CHECK(optimal_error<Rational>(3, 2) == rat("2/5"));
  for (int m : {2, 3, 4})
    for (int a = 1; a < 6; ++a)
      CHECK(optimal_error<Rational>(m, a + 1) < optimal_error<Rational>(m, a));
}

TEST_CASE("the block family realizes its closed-form error feasibly") {
  const auto pair = optimal_pair<Rational>(2, 3);
  CHECK(pair.omega_in == rvec({"1/2", "1/4", "1/8", "1/8", "0", "0", "0", "0"}));
  CHECK(pair.omega_out ==
        rvec({"1/4", "1/4", "1/8", "1/8", "1/16", "1/16", "1/16", "1/16"}));

  for (int m = 2; m <= 5; ++m) {
    for (int a = 1; a <= 3; ++a) {
      const auto p = optimal_pair<Rational>(m, a);
      CHECK(check_transformation(p));
      CHECK(trace_distance(p.omega_in, p.omega_out) == optimal_error<Rational>(m, a));
      CHECK(sum_of(p.omega_in) == rat("1"));
      CHECK(sum_of(p.omega_out) == rat("1"));
    }
  }
}

TEST_CASE("the harmonic-profile comparison state") {
  const auto v = vdh_state<Rational>(8);
  CHECK(v[0] == rat("280/761"));
  CHECK(v[7] == rat("35/761"));
  CHECK(sum_of(v) == rat("1"));
  CHECK(is_sorted_desc(v));
  CHECK_THROWS_AS(vdh_state<Rational>(0), std::invalid_argument);
}

TEST_CASE("pile_slack moves input surplus onto the top entry") {
  const auto out = rvec({"1/4", "1/4", "1/8", "1/8", "1/16", "1/16", "1/16", "1/16"});
  const auto in = rvec({"1/2", "5/16", "1/8", "1/16", "0", "0", "0", "0"});
  const CatalystPair<Rational> pair{2, in, out};
  REQUIRE(check_transformation(pair));

  const auto nf = pile_slack(pair);
  CHECK(nf.omega_in == rvec({"9/16", "1/4", "1/8", "1/16", "0", "0", "0", "0"}));
  CHECK(check_transformation(nf));
  CHECK(trace_distance(nf.omega_in, nf.omega_out) ==
        trace_distance(pair.omega_in, pair.omega_out));

  // entries 2..n never exceed the output after normalization
  for (std::size_t i = 1; i < nf.omega_in.size(); ++i)
    CHECK(nf.omega_in[i] <= nf.omega_out[i]);

  // already-normalized pairs are fixed points
  const auto opt = optimal_pair<Rational>(2, 3);
  CHECK(pile_slack(opt).omega_in == opt.omega_in);
}

TEST_CASE("reduce_pair steps the block family down one level exactly") {
  for (int m : {2, 3}) {
    for (int a : {2, 3}) {
      const auto red = reduce_pair(optimal_pair<Rational>(m, a));
      const auto expect = optimal_pair<Rational>(m, a - 1);
      CHECK(red.pair.omega_in == expect.omega_in);
      CHECK(red.pair.omega_out == expect.omega_out);
      CHECK_FALSE(red.block_averaged);
      CHECK(trace_distance(red.pair.omega_in, red.pair.omega_out) ==
            optimal_error<Rational>(m, a - 1));
    }
  }

  const auto red = reduce_pair(optimal_pair<Rational>(2, 3));
  CHECK(red.delta == rat("1/4"));
  CHECK(trace_distance(red.pair.omega_in, red.pair.omega_out) ==
        optimal_error<Rational>(2, 3) / (Rational(1) - red.delta));
}

TEST_CASE("reduce_pair rejects what it cannot shrink") {
  CHECK_THROWS_AS(reduce_pair(optimal_pair<Rational>(2, 1)), std::invalid_argument);

  const auto uni = ProbVec<Rational>{std::vector<Rational>(8, Rational(1, 8))};
  CHECK_THROWS_AS(reduce_pair(CatalystPair<Rational>{2, uni, uni}), InfeasibleError);
}

TEST_CASE("reduce_pair keeps arbitrary feasible pairs feasible") {
  // LP-optimal partners for the harmonic-profile state are feasible pairs
  // with no special block structure; shrinking them must stay feasible.
  for (int n : {16, 32}) {
    const auto fixed = vdh_state<Rational>(n);
    const auto part = nearest_feasible_partner(fixed, FixedSide::output, 2);
    REQUIRE(part.status == LpStatus::optimal);
    const auto red = reduce_pair(CatalystPair<Rational>{2, part.partner, fixed});
    CHECK(red.pair.omega_in.size() == std::size_t(n / 2));
    CHECK(check_transformation(red.pair));
    CHECK(red.delta > rat("0"));
    CHECK(red.delta < rat("1"));
  }
}
