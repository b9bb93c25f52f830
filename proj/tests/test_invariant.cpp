#include <doctest.h>

#include <random>

#include "shomfly/invariant.hpp"
#include "shomfly/traces.hpp"
#include "skein_oracle.hpp"

using namespace shomfly;

namespace {

RationalFn S() { return RationalFn::variable(Var::s); }
RationalFn V() { return RationalFn::variable(Var::v); }

RationalFn z_in_sv() {
  return RationalFn(LaurentPoly::variable(Var::s, 2) - LaurentPoly::one(),
                    LaurentPoly::one() -
                        LaurentPoly::variable(Var::s, 2) * LaurentPoly::variable(Var::v, 2));
}

std::string canonical_text(const BraidWord& w) {
  Canonicalized c = to_canonical(resolution_invariant(w));
  REQUIRE(c.poly.has_value());
  return to_text(*c.poly);
}

}  // namespace

TEST_CASE("normalization on trivial closures") {
  CHECK(to_text(invariant_raw(parse_braid(""))) == "1");
  CHECK(to_text(invariant_raw(parse_braid("s1"))) == "1");
  // the two-component unlink picks up one unlink factor 1/(z v)
  InvariantPoly unlink = invariant_raw(parse_braid("n=2"));
  CHECK(unlink.coeff(0) == (z_in_sv() * V()).inv());
}

TEST_CASE("classical values in canonical form") {
  CHECK(canonical_text(parse_braid("")) == "1");
  CHECK(canonical_text(parse_braid("n=2")) == "-1*t*x^-1 + 1*t^-1*x^-1");
  CHECK(canonical_text(parse_braid("s1 s1")) == "-1*t^3*x^-1 + 1*t*x + 1*t*x^-1");
  CHECK(canonical_text(parse_braid("s1^3")) == "-1*t^4 + 1*t^2*x^2 + 2*t^2");
}

TEST_CASE("singular words in canonical form") {
  CHECK(canonical_text(parse_braid("t1")) == "X: 1 ; Y: -1*t*x^-1 + 1*t^-1*x^-1");
  CHECK(canonical_text(parse_braid("t1 s1")) ==
        "X: -1*t^3*x^-1 + 1*t*x + 1*t*x^-1 ; Y: 1");
}

TEST_CASE("raw form goes through the rescaled desingularization weight") {
  // the raw X-coefficient of the single singular crossing is s^2/t = q/t,
  // which leaves the (t, x) ring; canonicalization must reject it
  InvariantPoly raw = invariant_raw(parse_braid("t1"));
  CHECK(raw.coeff(1) == S() / V());
  Canonicalized c = to_canonical(raw);
  CHECK(!c.poly.has_value());
  CHECK(c.residual.find("s") != std::string::npos);
  // resolution = raw after X -> (v/s) X
  InvariantPoly res = resolution_invariant(parse_braid("t1"));
  CHECK(res == raw.rescale_x(V() / S()));
}

TEST_CASE("x-rescaling links the two forms on random words") {
  std::mt19937_64 rng(307);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 6), 2);
    CHECK(resolution_invariant(w) == invariant_raw(w).rescale_x(V() / S()));
  }
}

TEST_CASE("markov invariance of the raw invariant") {
  std::mt19937_64 rng(311);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 6), 2);
    BraidWord m = random_markov_walk(w, 1 + static_cast<int>(rng() % 6), rng());
    CHECK(invariant_raw(w) == invariant_raw(m));
  }
}

TEST_CASE("skein and desingularization checks") {
  CHECK(skein_check(parse_braid("s1"), 1));
  CHECK(desing_check(parse_braid("n=2"), 1));
  std::mt19937_64 rng(313);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 5), 2);
    int i = 1 + static_cast<int>(rng() % (n - 1));
    CHECK(skein_check(w, i));
    CHECK(desing_check(w, i));
  }
}

TEST_CASE("homogeneity and the X = 0 specialization") {
  std::mt19937_64 rng(317);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 6), 2);
    int d = w.degree();
    InvariantPoly res = resolution_invariant(w);
    CHECK(res.degree() == d);
    for (const auto& [k, c] : res.coeffs()) {
      CHECK(k >= 0);
      CHECK(k <= d);
    }
    // X = 0 leaves Y^d times the invariant of the fully smoothed word
    CHECK(res.coeff(0) == invariant_raw(resolve(w, 0)).coeff(0));
  }
}

TEST_CASE("basis invariants reconstruct the universal invariant") {
  BraidWord t1 = parse_braid("t1");
  auto vec = basis_invariants(t1);
  REQUIRE(vec.size() == 2);
  CHECK(vec[0] == (z_in_sv() * V()).inv());
  CHECK(vec[1] == V().inv());
  // assemble through the weighted sum and compare with the raw form
  InvariantPoly raw = invariant_raw(t1);
  CHECK(raw.coeff(0) == vec[0]);
  CHECK(raw.coeff(1) == S() * vec[1]);

  std::mt19937_64 rng(331);
  for (int iter = 0; iter < 20; ++iter) {
    BraidWord w = random_word(rng, 3, 1 + static_cast<int>(rng() % 5), 2);
    auto v = basis_invariants(w);
    InvariantPoly raw2 = invariant_raw(w);
    int d = w.degree();
    for (int k = 0; k <= d; ++k) {
      RationalFn fact(LaurentPoly::constant(factorial(k) * factorial(d - k)));
      CHECK(raw2.coeff(k) * fact == S().pow(k) * v[k]);
    }
  }
}

TEST_CASE("universality: invariant equality iff basis vector equality") {
  std::mt19937_64 rng(337);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord a = random_word(rng, n, 1 + static_cast<int>(rng() % 5), 2);
    BraidWord b;
    if (iter % 2 == 0) {
      b = random_markov_walk(a, 1 + static_cast<int>(rng() % 4), rng());
    } else {
      b = random_word(rng, n, 1 + static_cast<int>(rng() % 5), 2);
      while (b.degree() != a.degree())
        b = random_word(rng, n, 1 + static_cast<int>(rng() % 5), 2);
    }
    bool inv_eq = invariant_raw(a) == invariant_raw(b);
    auto va = basis_invariants(a), vb = basis_invariants(b);
    bool vec_eq = true;
    for (size_t i = 0; i < va.size(); ++i)
      if (va[i] != vb[i]) vec_eq = false;
    CHECK(inv_eq == vec_eq);
  }
}

TEST_CASE("engine matches the skein-tree oracle on plain braids") {
  std::mt19937_64 rng(347);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord w = random_word(rng, n, static_cast<int>(rng() % 8), 0);
    Canonicalized c = to_canonical(resolution_invariant(w));
    REQUIRE(c.poly.has_value());
    CHECK(c.poly->coeff(0) == RationalFn(oracle::homfly(w)));
    CHECK(to_text(c.poly->coeff(0)) == to_text(RationalFn(oracle::homfly(w))));
  }
}

TEST_CASE("jobs parameter does not change results") {
  BraidWord w = parse_braid("t1 s1 t2 s2'");
  InvariantPoly one_job = resolution_invariant(w, 1);
  InvariantPoly four_jobs = resolution_invariant(w, 4);
  CHECK(one_job == four_jobs);
  for (int k = 0; k <= w.degree(); ++k)
    CHECK(to_text(one_job.coeff(k)) == to_text(four_jobs.coeff(k)));
}
