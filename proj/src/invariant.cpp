#include "shomfly/invariant.hpp"

#include <functional>
#include <sstream>
#include <thread>

#include "shomfly/traces.hpp"

namespace shomfly {

RationalFn InvariantPoly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? RationalFn(0) : it->second;
}

void InvariantPoly::set_coeff(int k, const RationalFn& c) {
  if (k < 0 || k > d_) throw std::invalid_argument("X-degree out of range");
  if (c.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = c;
}

bool InvariantPoly::operator==(const InvariantPoly& rhs) const {
  if (d_ != rhs.d_) return false;
  for (int k = 0; k <= d_; ++k)
    if (coeff(k) != rhs.coeff(k)) return false;
  return true;
}

InvariantPoly& InvariantPoly::operator+=(const InvariantPoly& rhs) {
  if (d_ != rhs.d_) throw std::invalid_argument("degrees differ");
  for (const auto& [k, c] : rhs.coeffs_) set_coeff(k, coeff(k) + c);
  return *this;
}

InvariantPoly InvariantPoly::operator*(const RationalFn& c) const {
  InvariantPoly out(d_, mode_);
  if (c.is_zero()) return out;
  for (const auto& [k, f] : coeffs_) out.set_coeff(k, f * c);
  return out;
}

InvariantPoly InvariantPoly::rescale_x(const RationalFn& f) const {
  InvariantPoly out(d_, mode_);
  for (const auto& [k, c] : coeffs_) out.set_coeff(k, c * f.pow(k));
  return out;
}

namespace {

// Evaluates fn(mask) for every resolution mask on `jobs` threads; results are
// stored per mask so the later reduction order is fixed and the output does
// not depend on the thread count.
std::vector<RationalFn> per_mask(int d, int jobs,
                                 const std::function<RationalFn(uint32_t)>& fn) {
  if (d > 24) throw std::invalid_argument("too many singular letters to enumerate resolutions");
  uint32_t count = 1u << d;
  std::vector<RationalFn> out(count);
  if (jobs <= 1 || count <= 1) {
    for (uint32_t m = 0; m < count; ++m) out[m] = fn(m);
    return out;
  }
  int workers = std::min<int>(jobs, count);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      for (uint32_t m = t; m < count; m += workers) out[m] = fn(m);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

const RationalFn& s_squared() {
  static const RationalFn v = RationalFn::variable(Var::s, 2);
  return v;
}

RationalFn z_substitution() {
  // z = (s^2 - 1) / (1 - s^2 v^2)
  LaurentPoly num = LaurentPoly::variable(Var::s, 2) - LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  ExpoVec e = zero_expo();
  e[static_cast<int>(Var::s)] = 2;
  e[static_cast<int>(Var::v)] = 2;
  den -= LaurentPoly::monomial(e, 1);
  return RationalFn(num, den);
}

}  // namespace

InvariantPoly universal_trace(const BraidWord& w, int jobs) {
  int d = w.degree();
  std::map<Var, RationalFn> q_to_s2{{Var::q, s_squared()}};
  std::vector<RationalFn> vals = per_mask(d, jobs, [&](uint32_t mask) {
    return degree_zero_trace(resolve(w, mask)).substitute(q_to_s2);
  });
  InvariantPoly out(d, InvariantPoly::Mode::Raw);
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    int k = __builtin_popcount(mask);
    out.set_coeff(k, out.coeff(k) + vals[mask] * RationalFn::variable(Var::s, k));
  }
  return out;
}

InvariantPoly invariant_raw(const BraidWord& w, int jobs) {
  int n = w.strands;
  int eps = w.exponent_sum();
  InvariantPoly tr = universal_trace(w, jobs);
  RationalFn factor = RationalFn::variable(Var::z).pow(1 - n) *
                      RationalFn::variable(Var::v).pow(eps - n + 1);
  std::map<Var, RationalFn> subst{{Var::z, z_substitution()}};
  InvariantPoly out(w.degree(), InvariantPoly::Mode::Raw);
  for (const auto& [k, c] : tr.coeffs()) out.set_coeff(k, (c * factor).substitute(subst));
  return out;
}

InvariantPoly resolution_invariant(const BraidWord& w, int jobs) {
  int d = w.degree();
  std::vector<RationalFn> vals = per_mask(d, jobs, [&](uint32_t mask) {
    return invariant_raw(resolve(w, mask)).coeff(0);
  });
  InvariantPoly out(d, InvariantPoly::Mode::Resolution);
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    int k = __builtin_popcount(mask);
    out.set_coeff(k, out.coeff(k) + vals[mask]);
  }
  return out;
}

std::vector<RationalFn> basis_invariants(const BraidWord& w) {
  int n = w.strands;
  int d = w.degree();
  RationalFn factor = RationalFn::variable(Var::z).pow(1 - n) *
                      RationalFn::variable(Var::v).pow(w.exponent_sum() - n + 1);
  std::map<Var, RationalFn> subst{{Var::q, s_squared()}, {Var::z, z_substitution()}};
  std::vector<RationalFn> out;
  out.reserve(d + 1);
  for (int k = 0; k <= d; ++k) out.push_back((basis_trace(k, w) * factor).substitute(subst));
  return out;
}

namespace {

// Polynomials p_k with p_k(s - 1/s) = s^k + (-1)^k s^{-k}:
// p_1 = x, p_2 = x^2 + 2, p_k = x p_{k-1} + p_{k-2}.
LaurentPoly symmetric_power(int k) {
  LaurentPoly pm1 = LaurentPoly::constant(2);  // k = 0
  LaurentPoly p = LaurentPoly::variable(Var::x);
  for (int i = 2; i <= k; ++i) {
    LaurentPoly next = LaurentPoly::variable(Var::x) * p + pm1;
    pm1 = std::move(p);
    p = std::move(next);
  }
  return p;
}

// Rewrites an s-only Laurent polynomial as a polynomial in x = s - 1/s,
// via the expansion over s^k + (-1)^k s^{-k}.  Fails on the asymmetric part.
std::optional<LaurentPoly> expand_in_x(const LaurentPoly& f, LaurentPoly* residual) {
  LaurentPoly work = f;
  LaurentPoly out;
  const int s_slot = static_cast<int>(Var::s);
  while (!work.is_zero()) {
    auto lead = work.leading_term();
    int k = lead.first[s_slot];
    mpz_class c = lead.second;
    if (k < 0) break;
    if (k == 0) {
      out += LaurentPoly::constant(c);
      work -= LaurentPoly::constant(c);
      continue;
    }
    out += symmetric_power(k) * LaurentPoly::constant(c);
    work -= LaurentPoly::variable(Var::s, k) * LaurentPoly::constant(c);
    mpz_class mirror = (k % 2 == 0) ? c : -c;
    work -= LaurentPoly::variable(Var::s, -k) * LaurentPoly::constant(mirror);
  }
  if (!work.is_zero()) {
    if (residual) *residual = work;
    return std::nullopt;
  }
  return out;
}

// One coefficient into the (t, x) Laurent ring.
std::optional<RationalFn> coeff_to_tx(const RationalFn& c, std::string* residual) {
  std::map<Var, RationalFn> v_to_ts{{Var::v, RationalFn(LaurentPoly::monomial(
                                                 [] {
                                                   ExpoVec e = zero_expo();
                                                   e[static_cast<int>(Var::t)] = 1;
                                                   e[static_cast<int>(Var::s)] = -1;
                                                   return e;
                                                 }(),
                                                 1))}};
  RationalFn r = c.substitute(v_to_ts);
  if (!r.num().supported_on({Var::s, Var::t}, true) ||
      !r.den().supported_on({Var::s, Var::t}, true)) {
    if (residual) *residual = to_text(r);
    return std::nullopt;
  }
  LaurentPoly xpoly = LaurentPoly::variable(Var::s) - LaurentPoly::variable(Var::s, -1);
  int e_max = 2;
  for (const auto& [e, k] : r.den().terms())
    e_max = std::max(e_max, e[static_cast<int>(Var::s)] + 2);

  for (int e = 0; e <= e_max; ++e) {
    LaurentPoly scaled = r.num();
    for (int i = 0; i < e; ++i) scaled *= xpoly;
    auto quotient = try_divide_exact(scaled, r.den());
    if (!quotient) continue;
    // Collect by t-exponent, expand each s-part in x, then divide by x^e.
    std::map<int, LaurentPoly> by_t;
    const int t_slot = static_cast<int>(Var::t);
    for (const auto& [ev, cf] : quotient->terms()) {
      ExpoVec s_only = zero_expo();
      s_only[static_cast<int>(Var::s)] = ev[static_cast<int>(Var::s)];
      by_t[ev[t_slot]] += LaurentPoly::monomial(s_only, cf);
    }
    LaurentPoly result;
    bool ok = true;
    LaurentPoly bad;
    for (const auto& [texp, fs] : by_t) {
      auto g = expand_in_x(fs, &bad);
      if (!g) {
        ok = false;
        break;
      }
      result += *g * LaurentPoly::variable(Var::t, texp);
    }
    if (!ok) continue;
    ExpoVec unshift = zero_expo();
    unshift[static_cast<int>(Var::x)] = -e;
    result.shift(unshift);
    return RationalFn(result);
  }
  if (residual) *residual = to_text(r);
  return std::nullopt;
}

}  // namespace

Canonicalized to_canonical(const InvariantPoly& p) {
  InvariantPoly out(p.degree(), InvariantPoly::Mode::Canonical);
  for (const auto& [k, c] : p.coeffs()) {
    std::string residual;
    auto tx = coeff_to_tx(c, &residual);
    if (!tx) {
      Canonicalized fail;
      fail.residual = "X^" + std::to_string(k) + " coefficient not in the (t, x) ring: " + residual;
      return fail;
    }
    out.set_coeff(k, *tx);
  }
  Canonicalized okres;
  okres.poly = std::move(out);
  return okres;
}

bool skein_check(const BraidWord& w, int i) {
  if (i < 1 || i > w.strands - 1) throw std::invalid_argument("index out of range");
  BraidWord wp = w, wm = w;
  wp.letters.push_back(pos(i));
  wm.letters.push_back(neg(i));
  RationalFn tval = RationalFn(LaurentPoly::variable(Var::s) * LaurentPoly::variable(Var::v));
  RationalFn xval = RationalFn(LaurentPoly::variable(Var::s) - LaurentPoly::variable(Var::s, -1));
  InvariantPoly lhs = invariant_raw(wp) * tval.inv();
  InvariantPoly rhs_minus = invariant_raw(wm) * tval;
  InvariantPoly rhs0 = invariant_raw(w) * xval;
  for (int k = 0; k <= w.degree(); ++k)
    if (lhs.coeff(k) - rhs_minus.coeff(k) != rhs0.coeff(k)) return false;
  return true;
}

bool desing_check(const BraidWord& w, int i) {
  if (i < 1 || i > w.strands - 1) throw std::invalid_argument("index out of range");
  BraidWord wx = w, wplus = w;
  wx.letters.insert(wx.letters.begin(), sing(i));
  wplus.letters.insert(wplus.letters.begin(), pos(i));
  InvariantPoly lhs = resolution_invariant(wx);
  InvariantPoly xs = resolution_invariant(wplus);
  InvariantPoly ys = resolution_invariant(w);
  int d = w.degree();
  for (int k = 0; k <= d + 1; ++k) {
    RationalFn want = (k >= 1 ? xs.coeff(k - 1) : RationalFn(0)) + (k <= d ? ys.coeff(k) : RationalFn(0));
    if (lhs.coeff(k) != want) return false;
  }
  return true;
}

std::string xy_label(int k, int m) {
  std::string out;
  if (k > 0) {
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  if (m > 0) {
    if (!out.empty()) out += "*";
    out += "Y";
    if (m > 1) out += "^" + std::to_string(m);
  }
  if (out.empty()) out = "1";
  return out;
}

std::string to_text(const InvariantPoly& p) {
  if (p.degree() == 0) return to_text(p.coeff(0));
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    RationalFn c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " ; ";
    first = false;
    os << xy_label(k, p.degree() - k) << ": " << to_text(c);
  }
  return first ? "0" : os.str();
}

}  // namespace shomfly
