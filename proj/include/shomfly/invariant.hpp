#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shomfly/braid.hpp"
#include "shomfly/coeffs.hpp"

namespace shomfly {

// Homogeneous polynomial of degree d in the desingularization variables X, Y:
// one coefficient per (k, d-k) with k the X-degree.  Coefficients are exact
// rational functions; the mode records which variable pair they live in.
//
// Two normalizations of X are in play and are not interchangeable:
//  * Raw follows the trace normalization directly; it satisfies the
//    desingularization relation with X weighted by s/v, and its coefficients
//    generally leave the (t, x) ring.
//  * Resolution sums the normalized invariants of the 2^d resolutions with
//    plain X, Y weights; it satisfies the desingularization relation verbatim
//    and always canonicalizes into (t, x).
// The exact link is Resolution = Raw after X -> (v/s) X.
class InvariantPoly {
 public:
  enum class Mode { Raw, Resolution, Canonical };

  InvariantPoly() : d_(0), mode_(Mode::Raw) {}
  InvariantPoly(int d, Mode mode) : d_(d), mode_(mode) {}

  int degree() const { return d_; }
  Mode mode() const { return mode_; }
  const std::map<int, RationalFn>& coeffs() const { return coeffs_; }

  // Coefficient of X^k Y^{d-k}.
  RationalFn coeff(int k) const;
  void set_coeff(int k, const RationalFn& c);

  bool operator==(const InvariantPoly& rhs) const;
  bool operator!=(const InvariantPoly& rhs) const { return !(*this == rhs); }

  InvariantPoly& operator+=(const InvariantPoly& rhs);
  InvariantPoly operator*(const RationalFn& c) const;

  // Multiplies the X^k coefficient by f^k.
  InvariantPoly rescale_x(const RationalFn& f) const;

 private:
  int d_;
  Mode mode_;
  std::map<int, RationalFn> coeffs_;  // only nonzero entries
};

// The universal trace of a word: X^k-coefficient s^k sum_{|S|=k} T_0(w(S)),
// with q already specialized to s^2.  Coefficients live in (s, z).
InvariantPoly universal_trace(const BraidWord& w, int jobs = 1);

// Normalized invariant, direct form: z^{1-n} v^{eps-n+1} universal_trace,
// with z -> (s^2-1)/(1-s^2 v^2).  Coefficients live in (s, v).
InvariantPoly invariant_raw(const BraidWord& w, int jobs = 1);

// Resolution form: sum over resolutions S of X^{|S|} Y^{d-|S|} times the
// degree-zero invariant of the resolved word.
InvariantPoly resolution_invariant(const BraidWord& w, int jobs = 1);

// Basis invariants I_k = z^{1-n} v^{eps-n+1} T_k(w), same substitutions.
std::vector<RationalFn> basis_invariants(const BraidWord& w);

// Canonicalization into the Laurent ring in t and x = s - 1/s (after v -> t/s).
// Fails with the offending residual when a coefficient leaves the ring.
struct Canonicalized {
  std::optional<InvariantPoly> poly;
  std::string residual;  // diagnostic, set when !poly
};
Canonicalized to_canonical(const InvariantPoly& p);

// Exact relation checks at a word:
//   skein:  t^{-1} I(w sigma_i) - t I(w sigma_i^{-1}) == x I(w)
//   desing: I_res(tau_i w) == X I_res(sigma_i w) + Y I_res(w)
bool skein_check(const BraidWord& w, int i);
bool desing_check(const BraidWord& w, int i);

// Rendering: degree 0 prints the bare coefficient; otherwise `X^k*Y^m: coeff`
// terms joined by ` ; `, X-degree descending.
std::string to_text(const InvariantPoly& p);
std::string xy_label(int k, int m);

}  // namespace shomfly
