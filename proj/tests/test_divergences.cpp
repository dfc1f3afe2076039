#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "helpers.hpp"

using namespace thermocat;

namespace {

ProbVec<double> tensor(const ProbVec<double>& p, const ProbVec<double>& q) {
  std::vector<double> out;
  out.reserve(p.size() * q.size());
  for (double a : p)
    for (double b : q) out.push_back(a * b);
  return ProbVec<double>{std::move(out)};
}

HermitianState random_state(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  HermitianState a;
  a.dim = d;
  a.a.assign(d * d, {});
  for (auto& x : a.a) x = {g(rng), g(rng)};
  // rho = A A^dagger / tr, positive by construction
  HermitianState rho;
  rho.dim = d;
  rho.a.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < d; ++k) s += a(i, k) * std::conj(a(j, k));
      rho.a[i * d + j] = s;
    }
  std::complex<double> tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += rho(i, i);
  for (auto& x : rho.a) x /= tr.real();
  // force exact hermiticity and a clean unit trace
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto avg = 0.5 * (rho.a[i * d + j] + std::conj(rho.a[j * d + i]));
      rho.a[i * d + j] = avg;
      rho.a[j * d + i] = std::conj(avg);
    }
  double dtr = 0;
  for (std::size_t i = 0; i < d; ++i) dtr += rho(i, i).real();
  rho.a[0] += (1.0 - dtr);
  for (std::size_t i = 0; i < d; ++i) rho.a[i * d + i].imag(0.0);
  return rho;
}

HermitianState dephased(const HermitianState& rho) {
  HermitianState out = rho;
  for (std::size_t i = 0; i < rho.dim; ++i)
    for (std::size_t j = 0; j < rho.dim; ++j)
      if (i != j) out.a[i * rho.dim + j] = 0;
  return out;
}

}  // namespace

TEST_CASE("named orders reproduce hand-computed divergences") {
  const auto p = dvec({0.75, 0.25});
  const auto q = dvec({0.5, 0.5});
  CHECK_THAT(d_alpha_diag(p, q, 2.0),
             Catch::Matchers::WithinAbs(0.32192809488736235, 1e-14));  // log2(5/4)
  CHECK_THAT(d_alpha_diag(p, q, kInf),
             Catch::Matchers::WithinAbs(std::log2(1.5), 1e-14));
  CHECK_THAT(d_alpha_diag(dvec({0.7, 0.2, 0.1}), dvec({0.5, 0.3, 0.2}), 1.0),
             Catch::Matchers::WithinAbs(0.12280627887493792, 1e-14));
  CHECK_THAT(d_alpha_diag(dvec({0.5, 0.5, 0.0}), dvec({1.0 / 3, 1.0 / 3, 1.0 / 3}), 0.0),
             Catch::Matchers::WithinAbs(std::log2(1.5), 1e-14));
}

TEST_CASE("zero divergence iff comparing a distribution with itself") {
  const auto p = dvec({0.4, 0.35, 0.25});
  for (double a : default_alpha_grid()) {
    CHECK_THAT(d_alpha_diag(p, p, a), Catch::Matchers::WithinAbs(0.0, 1e-12));
    if (a > 0.0) CHECK(d_alpha_diag(p, dvec({0.5, 0.3, 0.2}), a) > 0.0);
  }
}

TEST_CASE("disjoint support gives infinite divergence") {
  const auto p = dvec({1.0, 0.0});
  const auto q = dvec({0.0, 1.0});
  for (double a : {0.0, 0.5, 1.0, 2.0, kInf}) CHECK(d_alpha_diag(p, q, a) == kInf);
}

TEST_CASE("divergences are additive over tensor products") {
  const auto p = dvec({0.7, 0.3});
  const auto q = dvec({0.5, 0.5});
  const auto r = dvec({0.6, 0.25, 0.15});
  const auto s = dvec({0.4, 0.35, 0.25});
  for (double a : {0.0, 0.5, 1.0, 2.0, kInf}) {
    CHECK_THAT(d_alpha_diag(tensor(p, r), tensor(q, s), a),
               Catch::Matchers::WithinAbs(
                   d_alpha_diag(p, q, a) + d_alpha_diag(r, s, a), 1e-10));
  }
}

TEST_CASE("the general-order branch agrees with its limits") {
  const auto p = dvec({0.7, 0.2, 0.1});
  const auto q = dvec({0.5, 0.3, 0.2});
  CHECK_THAT(d_alpha_diag(p, q, 1.0 + 1e-6),
             Catch::Matchers::WithinAbs(d_alpha_diag(p, q, 1.0), 1e-4));
  CHECK_THAT(d_alpha_diag(p, q, 1.0 - 1e-6),
             Catch::Matchers::WithinAbs(d_alpha_diag(p, q, 1.0), 1e-4));
  CHECK_THAT(d_alpha_diag(p, q, 1e6),
             Catch::Matchers::WithinAbs(d_alpha_diag(p, q, kInf), 1e-5));
  const auto shrunk = dvec({0.7, 0.3, 0.0});  // support strictly inside q's
  CHECK_THAT(d_alpha_diag(shrunk, q, 1e-7),
             Catch::Matchers::WithinAbs(d_alpha_diag(shrunk, q, 0.0), 1e-4));
}

TEST_CASE("order grid is sorted and covers the limit points") {
  const auto g = default_alpha_grid();
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(g.front() == 0.0);
  CHECK(g.back() == kInf);
  CHECK(std::count(g.begin(), g.end(), 1.0) == 1);
}

TEST_CASE("dominance check passes exactly when no order is violated") {
  const auto tau = dvec({2.0 / 3, 1.0 / 3});

  const auto pass = monotonicity_check(dvec({1.0, 0.0}), tau, tau);
  CHECK(pass.pass);
  CHECK(pass.caveat == "grid-necessary-only");

  const auto self = monotonicity_check(tau, tau, tau);
  CHECK(self.pass);

  const auto fail = monotonicity_check(tau, dvec({1.0, 0.0}), tau);
  CHECK_FALSE(fail.pass);
  CHECK_THAT(fail.gap, Catch::Matchers::WithinAbs(std::log2(1.5), 1e-10));
  CHECK(fail.caveat == "grid-necessary-only");

  CHECK_THROWS_AS(monotonicity_check(tau, tau, dvec({1.0, 0.0})), std::invalid_argument);
}

TEST_CASE("dominance check reports the most violated order") {
  // p_in == p_out at every order except infinity, where p_out sharpens
  const auto tau = dvec({0.5, 0.25, 0.25});
  const auto p_in = dvec({0.5, 0.3, 0.2});
  const auto p_out = dvec({0.58, 0.22, 0.2});
  const auto rep = monotonicity_check(p_in, p_out, tau);
  if (!rep.pass) {
    CHECK(rep.gap > 0.0);
    CHECK(rep.gap == d_alpha_diag(p_out, tau, rep.witness_alpha) -
                         d_alpha_diag(p_in, tau, rep.witness_alpha));
  }
}

TEST_CASE("work-gap coefficients subtract input from output divergence") {
  const auto rho_in = dvec({0.75, 0.25});
  const auto rho_out = dvec({1.0, 0.0});
  const auto tau = dvec({0.5, 0.5});
  CHECK_THAT(kappa1(rho_in, rho_out, tau),
             Catch::Matchers::WithinAbs(0.4150374992788438, 1e-14));
  CHECK_THAT(kappa2(rho_in, rho_out, tau),
             Catch::Matchers::WithinAbs(0.8999686269529914, 1e-14));
  // identity transformation gains nothing
  CHECK_THAT(kappa1(rho_in, rho_in, tau), Catch::Matchers::WithinAbs(0.0, 1e-12));
  CHECK_THAT(kappa2(rho_in, rho_in, tau), Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("matrix divergences agree with the diagonal path on diagonal states") {
  const std::vector<double> pd{0.6, 0.3, 0.1};
  const std::vector<double> qd{0.5, 0.25, 0.25};
  const auto rho = make_diag_state(pd);
  const auto sig = make_diag_state(qd);
  const auto p = dvec({0.6, 0.3, 0.1});
  const auto q = dvec({0.5, 0.25, 0.25});
  CHECK_THAT(d_inf_matrix(rho, sig),
             Catch::Matchers::WithinAbs(d_alpha_diag(p, q, kInf), 1e-10));
  CHECK_THAT(d_half_matrix(rho, sig),
             Catch::Matchers::WithinAbs(d_alpha_diag(p, q, 0.5), 1e-10));
}

TEST_CASE("matrix divergences handle coherent states") {
  // rho = (I + 0.6 sigma_y)/2 has eigenvalues 0.8 and 0.2
  HermitianState rho;
  rho.dim = 2;
  rho.a = {std::complex<double>(0.5, 0.0), std::complex<double>(0.0, -0.3),
           std::complex<double>(0.0, 0.3), std::complex<double>(0.5, 0.0)};
  const auto sig = make_diag_state({0.5, 0.5});
  CHECK_THAT(d_inf_matrix(rho, sig), Catch::Matchers::WithinAbs(std::log2(1.6), 1e-10));
  const double f = std::sqrt(0.4) + std::sqrt(0.1);
  CHECK_THAT(d_half_matrix(rho, sig),
             Catch::Matchers::WithinAbs(-2.0 * std::log2(f), 1e-10));

  // support outside sigma's support must blow up the max-order divergence
  const auto pure = make_diag_state({1.0, 0.0});
  const auto half = make_diag_state({0.0, 1.0});
  CHECK(d_inf_matrix(pure, half) == kInf);
  CHECK(d_half_matrix(pure, half) == kInf);
}

TEST_CASE("dephasing never increases the matrix divergences") {
  std::mt19937_64 rng(1234);
  for (std::size_t d : {2, 3, 4}) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto rho = random_state(rng, d);
      std::vector<double> diag(d);
      double tot = 0;
      for (auto& x : diag) tot += (x = 0.25 + (double(rng() % 100) / 100.0));
      for (auto& x : diag) x /= tot;
      const auto sig = make_diag_state(diag);
      CHECK(d_inf_matrix(dephased(rho), sig) <= d_inf_matrix(rho, sig) + 1e-10);
      CHECK(d_half_matrix(dephased(rho), sig) <= d_half_matrix(rho, sig) + 1e-10);
    }
  }
}

TEST_CASE("matrix work-gap coefficients match the diagonal ones") {
  const auto in_d = dvec({0.75, 0.25});
  const auto out_d = dvec({1.0, 0.0});
  const auto tau_d = dvec({0.5, 0.5});
  const auto in_m = make_diag_state({0.75, 0.25});
  const auto out_m = make_diag_state({1.0, 0.0});
  const auto tau_m = make_diag_state({0.5, 0.5});
  CHECK_THAT(kappa1(in_m, out_m, tau_m),
             Catch::Matchers::WithinAbs(kappa1(in_d, out_d, tau_d), 1e-10));
  CHECK_THAT(kappa2(in_m, out_m, tau_m),
             Catch::Matchers::WithinAbs(kappa2(in_d, out_d, tau_d), 1e-10));
}

TEST_CASE("states validate shape, hermiticity, trace, and positivity") {
  HermitianState bad;
  bad.dim = 2;
  bad.a = {std::complex<double>(0.5, 0.0), std::complex<double>(0.2, 0.0),
           std::complex<double>(0.3, 0.0), std::complex<double>(0.5, 0.0)};
  CHECK_THROWS_AS(validate_hermitian_state(bad), std::invalid_argument);

  CHECK_THROWS_AS(make_diag_state({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(make_diag_state({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_diag_state(std::vector<double>(17, 1.0 / 17)),
                  std::invalid_argument);
}
