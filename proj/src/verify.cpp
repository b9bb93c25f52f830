#include "shomfly/verify.hpp"

#include <algorithm>
#include <sstream>

#include "shomfly/braid.hpp"
#include "shomfly/coeffs.hpp"
#include "shomfly/hecke.hpp"
#include "shomfly/invariant.hpp"
#include "shomfly/singular.hpp"
#include "shomfly/traces.hpp"

namespace shomfly {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::VerifiedExactly: return "VerifiedExactly";
    case CheckStatus::ProbePassed: return "ProbePassed";
    case CheckStatus::InconclusiveEscalated: return "Inconclusive-escalated";
  }
  return "?";
}

namespace {

RationalFn qv() { return RationalFn::variable(Var::q); }
RationalFn zv() { return RationalFn::variable(Var::z); }

std::vector<Letter> taus(int i, int a) { return std::vector<Letter>(a, sing(i)); }

std::vector<Letter> cat(std::initializer_list<std::vector<Letter>> parts) {
  std::vector<Letter> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

WeightedWord ww(const RationalFn& c, int n, std::vector<Letter> letters) {
  BraidWord w;
  w.strands = n;
  w.letters = std::move(letters);
  return {c, w};
}

void append_negated(std::vector<WeightedWord>& expr, const std::vector<WeightedWord>& rhs) {
  for (const WeightedWord& t : rhs) expr.push_back({-t.coeff, t.word});
}

// LHS - RHS of the adjacent-pair quadratic exchange identity
// tau_i^a * M = tau_j^a * M with M = s_i s_j + s_j s_i - (q-1)s_i - (q-1)s_j + (q^2-q+1).
std::vector<WeightedWord> tau_exchange_quadratic(int n, int i, int j, int a) {
  RationalFn one(1), qm1 = qv() - one, c0 = qv() * qv() - qv() + one;
  auto side = [&](int u) {
    std::vector<WeightedWord> e;
    e.push_back(ww(one, n, cat({taus(u, a), {pos(i), pos(j)}})));
    e.push_back(ww(one, n, cat({taus(u, a), {pos(j), pos(i)}})));
    e.push_back(ww(-qm1, n, cat({taus(u, a), {pos(i)}})));
    e.push_back(ww(-qm1, n, cat({taus(u, a), {pos(j)}})));
    e.push_back(ww(c0, n, taus(u, a)));
    return e;
  };
  std::vector<WeightedWord> expr = side(i);
  append_negated(expr, side(j));
  return expr;
}

// sigma_i tau_j^a - q^{-1} tau_j^a s_i s_j s_i + q^{-1} tau_i^a s_i s_j s_i - tau_j^a s_i
std::vector<WeightedWord> sigma_past_tau_adjacent(int n, int i, int j, int a) {
  RationalFn one(1), qi = qv().inv();
  std::vector<WeightedWord> expr;
  expr.push_back(ww(one, n, cat({{pos(i)}, taus(j, a)})));
  expr.push_back(ww(-qi, n, cat({taus(j, a), {pos(i), pos(j), pos(i)}})));
  expr.push_back(ww(qi, n, cat({taus(i, a), {pos(i), pos(j), pos(i)}})));
  expr.push_back(ww(-one, n, cat({taus(j, a), {pos(i)}})));
  return expr;
}

// sigma_j tau_i^a - tau_j^a (s_i + s_j - (q-1)) + tau_i^a (s_i - (q-1))
std::vector<WeightedWord> sigma_past_tau_reversed(int n, int i, int j, int a) {
  RationalFn one(1), qm1 = qv() - one;
  std::vector<WeightedWord> expr;
  expr.push_back(ww(one, n, cat({{pos(j)}, taus(i, a)})));
  expr.push_back(ww(-one, n, cat({taus(j, a), {pos(i)}})));
  expr.push_back(ww(-one, n, cat({taus(j, a), {pos(j)}})));
  expr.push_back(ww(qm1, n, taus(j, a)));
  expr.push_back(ww(one, n, cat({taus(i, a), {pos(i)}})));
  expr.push_back(ww(-qm1, n, taus(i, a)));
  return expr;
}

// B tau_i^a - tau_j^a B with B = s_i + s_j - (q-1)
std::vector<WeightedWord> bridge_tau_transfer(int n, int i, int j, int a) {
  RationalFn one(1), qm1 = qv() - one;
  std::vector<WeightedWord> expr;
  expr.push_back(ww(one, n, cat({{pos(i)}, taus(i, a)})));
  expr.push_back(ww(one, n, cat({{pos(j)}, taus(i, a)})));
  expr.push_back(ww(-qm1, n, taus(i, a)));
  expr.push_back(ww(-one, n, cat({taus(j, a), {pos(i)}})));
  expr.push_back(ww(-one, n, cat({taus(j, a), {pos(j)}})));
  expr.push_back(ww(qm1, n, taus(j, a)));
  return expr;
}

// sigma_i tau_j^a - tau_j^a sigma_i for |i-j| >= 2
std::vector<WeightedWord> sigma_tau_commute_distant(int n, int i, int j, int a) {
  RationalFn one(1);
  std::vector<WeightedWord> expr;
  expr.push_back(ww(one, n, cat({{pos(i)}, taus(j, a)})));
  expr.push_back(ww(-one, n, cat({taus(j, a), {pos(i)}})));
  return expr;
}

// tau_i^a C - tau_j^a C with C = 2 s_i s_j - (q-1)s_i - (q-1)s_j + (q^2+1), |i-j| >= 2
std::vector<WeightedWord> c_tau_transfer(int n, int i, int j, int a) {
  RationalFn one(1), two(2), qm1 = qv() - one, c0 = qv() * qv() + one;
  auto side = [&](int u) {
    std::vector<WeightedWord> e;
    e.push_back(ww(two, n, cat({taus(u, a), {pos(i), pos(j)}})));
    e.push_back(ww(-qm1, n, cat({taus(u, a), {pos(i)}})));
    e.push_back(ww(-qm1, n, cat({taus(u, a), {pos(j)}})));
    e.push_back(ww(c0, n, taus(u, a)));
    return e;
  };
  std::vector<WeightedWord> expr = side(i);
  append_negated(expr, side(j));
  return expr;
}

// tau_1^a tau_3^b (s3 - s1) - (tau_2^b tau_1^a + tau_2^a tau_3^b)(s3 - s1)
//   - tau_2^{a+b} (s1 - s3)        [the bridge difference collapses to s1 - s3]
std::vector<WeightedWord> tau_pair_exchange(int n, int a, int b) {
  RationalFn one(1);
  auto diff = [&](std::vector<Letter> prefix, int sign) {
    std::vector<WeightedWord> e;
    e.push_back(ww(RationalFn(sign), n, cat({prefix, {pos(3)}})));
    e.push_back(ww(RationalFn(-sign), n, cat({prefix, {pos(1)}})));
    return e;
  };
  std::vector<WeightedWord> expr = diff(cat({taus(1, a), taus(3, b)}), 1);
  append_negated(expr, diff(cat({taus(2, b), taus(1, a)}), 1));
  append_negated(expr, diff(cat({taus(2, a), taus(3, b)}), 1));
  append_negated(expr, diff(taus(2, a + b), -1));
  return expr;
}

struct NamedIdentity {
  std::string name;
  std::vector<WeightedWord> expr;
};

std::vector<NamedIdentity> singular_identities() {
  std::vector<NamedIdentity> ids;
  for (int a : {1, 2}) {
    std::string sa = " a=" + std::to_string(a);
    ids.push_back({"tau-exchange-quadratic" + sa, tau_exchange_quadratic(3, 1, 2, a)});
    ids.push_back({"sigma-past-tau-adjacent" + sa, sigma_past_tau_adjacent(3, 1, 2, a)});
    ids.push_back({"sigma-past-tau-reversed" + sa, sigma_past_tau_reversed(3, 1, 2, a)});
    ids.push_back({"bridge-tau-transfer" + sa, bridge_tau_transfer(3, 1, 2, a)});
    ids.push_back({"sigma-tau-commute-distant" + sa, sigma_tau_commute_distant(4, 1, 3, a)});
    ids.push_back({"c-tau-transfer" + sa, c_tau_transfer(4, 1, 3, a)});
  }
  for (int a : {1, 2})
    for (int b : {1, 2})
      ids.push_back({"tau-pair-exchange a=" + std::to_string(a) + " b=" + std::to_string(b),
                     tau_pair_exchange(4, a, b)});
  return ids;
}

std::string describe(const BraidWord& w) {
  std::string f = format_braid(w);
  return f.empty() ? "(empty)" : f;
}

CheckResult exact_check(const std::string& name, bool ok, const std::string& detail = "") {
  return {name, ok ? CheckStatus::VerifiedExactly : CheckStatus::Fail, detail};
}

SuiteReport suite_skein(const SuiteOptions& opts) {
  SuiteReport rep{"skein", {}};
  int trials = opts.trials > 0 ? opts.trials : 50;
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < trials; ++t) {
    int n = 2 + static_cast<int>(rng() % std::max(1, opts.n - 1));
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 6), std::min(opts.d, 2));
    int i = 1 + static_cast<int>(rng() % (n - 1));
    bool ok = skein_check(w, i);
    rep.cases.push_back({"skein " + describe(w) + " i=" + std::to_string(i),
                         ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
  }
  return rep;
}

SuiteReport suite_desing(const SuiteOptions& opts) {
  SuiteReport rep{"desing", {}};
  int trials = opts.trials > 0 ? opts.trials : 50;
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < trials; ++t) {
    int n = 2 + static_cast<int>(rng() % std::max(1, opts.n - 1));
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 5), std::min(opts.d, 2));
    int i = 1 + static_cast<int>(rng() % (n - 1));
    bool ok = desing_check(w, i);
    rep.cases.push_back({"desing " + describe(w) + " i=" + std::to_string(i),
                         ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
  }
  return rep;
}

SuiteReport suite_markov(const SuiteOptions& opts) {
  SuiteReport rep{"markov", {}};
  int trials = opts.trials > 0 ? opts.trials : 100;
  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < trials; ++t) {
    int n = 2 + static_cast<int>(rng() % std::max(1, opts.n - 1));
    BraidWord w = random_word(rng, n, 1 + static_cast<int>(rng() % 6), std::min(opts.d, 2));
    int steps = 1 + static_cast<int>(rng() % 6);
    BraidWord m = random_markov_walk(w, steps, rng());
    bool ok = invariant_raw(w) == invariant_raw(m);
    rep.cases.push_back({"markov " + describe(w) + " ~ " + describe(m),
                         ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
  }
  return rep;
}

SuiteReport suite_lemmas(const SuiteOptions& opts) {
  SuiteReport rep{"lemmas", {}};

  {  // inverse of the adjacent-pair bridge element, exact in H(B_3)
    HeckeElem b = adjacent_sum(3, 1, 2);
    HeckeElem binv = adjacent_sum_inverse(3, 1, 2);
    bool ok = mul(b, binv) == HeckeElem::unit(3) && mul(binv, b) == HeckeElem::unit(3);
    rep.cases.push_back(exact_check("bridge-inverse", ok));
  }
  {  // (s1 - s3)^2 == (q+1)^2 - C in H(B_4)
    HeckeElem s1 = HeckeElem::unit(4).times_generator(1);
    HeckeElem s3 = HeckeElem::unit(4).times_generator(3);
    HeckeElem lhs = mul(s1 - s3, s1 - s3);
    HeckeElem rhs = HeckeElem::unit(4) * (qv() + RationalFn(1)).pow(2) - distant_sum(4, 1, 3);
    rep.cases.push_back(exact_check("distant-pair-square", lhs == rhs));
  }
  {  // factorization of the distant-pair element through the mixer, H(B_4)
    RationalFn qm1 = qv() - RationalFn(1);
    HeckeElem w0 = omega_mixer(4);
    HeckeElem s1w0 = HeckeElem::unit(4).times_generator(1);
    s1w0 = mul(s1w0, w0);
    HeckeElem w0s3 = w0.times_generator(3);
    HeckeElem s1w0s3 = s1w0.times_generator(3);
    HeckeElem inner = s1w0 * qv() + w0s3 * qv() + s1w0s3 * qm1 - s1w0s3.times_generator(2);
    HeckeElem right = HeckeElem::unit(4).times_generator(1) - HeckeElem::unit(4) * qm1;
    HeckeElem lhs = mul(inner, right) * qv().pow(-2);
    rep.cases.push_back(exact_check("mixer-factorization", lhs == distant_sum(4, 1, 3)));
  }
  {  // resolvent of (z - s1) in H(B_2)
    HeckeElem d0 = two_strand_resolvent();
    HeckeElem zs = HeckeElem::unit(2) * zv() - HeckeElem::unit(2).times_generator(1);
    bool ok = mul(d0, zs) == HeckeElem::unit(2) && mul(zs, d0) == HeckeElem::unit(2);
    rep.cases.push_back(exact_check("two-strand-resolvent", ok));
  }

  int trials = opts.trials > 0 ? opts.trials : 20;
  uint64_t seed = opts.seed;
  for (const NamedIdentity& id : singular_identities()) {
    int nn = id.expr.front().word.strands;
    int dd = id.expr.front().word.degree();
    SingularElem acc(nn, dd);
    for (const WeightedWord& t : id.expr)
      acc += rewrite_to_spanning(t.word) * t.coeff;
    bool syntactic = spanning_eq(acc, SingularElem(nn, dd)) == SpanningEq::VerifiedSyntactically;
    ProbeReport pr = probe_zero(id.expr, trials, seed++);
    if (!pr.pass) {
      std::ostringstream os;
      os << "witness gamma=" << describe(pr.witness->gamma)
         << " delta=" << describe(pr.witness->delta) << " k=" << pr.witness->trace_index
         << " value=" << to_text(pr.witness->value);
      rep.cases.push_back({id.name, CheckStatus::Fail, os.str()});
      continue;
    }
    std::string detail = std::to_string(pr.trials_run) + " probes vanished";
    detail += syntactic ? "; spanning coordinates agree"
                        : "; spanning coordinates inconclusive, escalated to probes";
    rep.cases.push_back({id.name, CheckStatus::ProbePassed, detail});
  }
  return rep;
}

SuiteReport suite_independence(const SuiteOptions& opts) {
  SuiteReport rep{"independence", {}};
  int dmax = std::max(1, opts.d);
  for (int d = 1; d <= dmax; ++d) {
    auto m = independence_matrix(d);
    bool diag_ok = true;
    for (int a = 0; a <= d && diag_ok; ++a) {
      for (int b = 0; b <= d && diag_ok; ++b) {
        RationalFn at0 = m[a][b].eval_at(Var::z, RationalFn(0));
        RationalFn want =
            a == b ? RationalFn(LaurentPoly::constant(factorial(d - a) * factorial(a))) *
                         RationalFn::variable(Var::q, a)
                   : RationalFn(0);
        if (at0 != want) diag_ok = false;
      }
    }
    rep.cases.push_back(exact_check("z=0 diagonal d=" + std::to_string(d), diag_ok));
    std::vector<std::vector<RationalFn>> at0(d + 1, std::vector<RationalFn>(d + 1, RationalFn(0)));
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d; ++b) at0[a][b] = m[a][b].eval_at(Var::z, RationalFn(0));
    RationalFn det = matrix_determinant(at0);
    rep.cases.push_back(exact_check("determinant nonzero at z=0 d=" + std::to_string(d),
                                    !det.is_zero(), to_text(det)));
  }
  return rep;
}

SuiteReport suite_traces(const SuiteOptions& opts) {
  SuiteReport rep{"traces", {}};
  std::mt19937_64 rng(opts.seed);
  int per_d = opts.trials > 0 ? opts.trials : 30;
  int dmax = std::min(3, std::max(1, opts.d));
  for (int d = 1; d <= dmax; ++d) {
    bool routes_ok = true, sym_ok = true, stab_ok = true;
    for (int t = 0; t < per_d; ++t) {
      int n = 2 + static_cast<int>(rng() % std::max(1, opts.n - 1));
      int len = d + static_cast<int>(rng() % std::max(1, 9 - d));
      BraidWord w = random_word(rng, n, len, d);
      while (w.degree() < d) w.letters.push_back(sing(1 + static_cast<int>(rng() % (n - 1))));
      for (int k = 0; k <= d; ++k) {
        RationalFn direct = basis_trace(k, w);
        if (direct != basis_trace_recursive(k, w)) routes_ok = false;
        if (k >= 1 && k <= d - 1 && direct != basis_trace_recursive(k, w, true))
          routes_ok = false;
      }
      // symmetry under cyclic split
      if (!w.letters.empty()) {
        size_t cut = rng() % w.letters.size();
        BraidWord rot;
        rot.strands = w.strands;
        rot.letters.insert(rot.letters.end(), w.letters.begin() + cut, w.letters.end());
        rot.letters.insert(rot.letters.end(), w.letters.begin(), w.letters.begin() + cut);
        for (int k = 0; k <= d; ++k)
          if (basis_trace(k, w) != basis_trace(k, rot)) sym_ok = false;
      }
      // inclusion stability and the z multiplier rule
      BraidWord incl = w;
      incl.strands += 1;
      BraidWord stab = markov_stabilize(w, true);
      for (int k = 0; k <= d; ++k) {
        RationalFn base = basis_trace(k, w);
        if (basis_trace(k, incl) != base) stab_ok = false;
        if (basis_trace(k, stab) != zv() * base) stab_ok = false;
      }
    }
    std::string sd = " d=" + std::to_string(d);
    rep.cases.push_back({"route agreement" + sd, routes_ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
    rep.cases.push_back({"trace symmetry" + sd, sym_ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
    rep.cases.push_back({"stability and z-rule" + sd, stab_ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
  }
  // commutation of the two degree-raising routes
  bool comm_ok = true;
  for (int t = 0; t < 20; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    BraidWord w = random_word(rng, n, 4 + static_cast<int>(rng() % 3), 2);
    while (w.degree() < 2) w.letters.push_back(sing(1 + static_cast<int>(rng() % (n - 1))));
    int d = w.degree();
    for (int k = 0; k <= d - 2; ++k) {
      auto apply2 = [&](bool first_crossing, bool second_crossing) {
        RationalFn acc(0);
        auto first = first_crossing ? cross_one_singular(w) : smooth_one_singular(w);
        for (const BraidWord& u : first) {
          auto second = second_crossing ? cross_one_singular(u) : smooth_one_singular(u);
          for (const BraidWord& v : second) acc += basis_trace(k, v);
        }
        return acc;
      };
      if (apply2(false, true) != apply2(true, false)) comm_ok = false;
    }
  }
  rep.cases.push_back({"degree-raising commutation", comm_ok ? CheckStatus::Pass : CheckStatus::Fail, ""});
  return rep;
}

SuiteReport suite_universality(const SuiteOptions& opts) {
  SuiteReport rep{"universality", {}};
  std::mt19937_64 rng(opts.seed);
  int trials = opts.trials > 0 ? opts.trials : 30;
  for (int t = 0; t < trials; ++t) {
    int n = 2 + static_cast<int>(rng() % std::max(1, opts.n - 1));
    int dcap = std::min(opts.d, 2);
    BraidWord a = random_word(rng, n, 1 + static_cast<int>(rng() % 6), dcap);
    BraidWord b;
    if (t % 2 == 0) {
      b = random_markov_walk(a, 1 + static_cast<int>(rng() % 5), rng());
    } else {
      b = random_word(rng, n, 1 + static_cast<int>(rng() % 6), dcap);
      while (b.degree() != a.degree()) b = random_word(rng, n, 1 + static_cast<int>(rng() % 6), dcap);
    }
    bool inv_eq = invariant_raw(a) == invariant_raw(b);
    auto va = basis_invariants(a), vb = basis_invariants(b);
    bool vec_eq = va.size() == vb.size();
    for (size_t i = 0; vec_eq && i < va.size(); ++i) vec_eq = va[i] == vb[i];
    bool ok = inv_eq == vec_eq;
    rep.cases.push_back({"universality " + describe(a) + " vs " + describe(b),
                         ok ? CheckStatus::Pass : CheckStatus::Fail,
                         inv_eq ? "equal" : "distinct"});
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"skein", "desing", "markov", "lemmas", "independence", "traces", "universality"};
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "skein") return suite_skein(opts);
  if (suite == "desing") return suite_desing(opts);
  if (suite == "markov") return suite_markov(opts);
  if (suite == "lemmas") return suite_lemmas(opts);
  if (suite == "independence") return suite_independence(opts);
  if (suite == "traces") return suite_traces(opts);
  if (suite == "universality") return suite_universality(opts);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace shomfly
