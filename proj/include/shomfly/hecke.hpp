#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shomfly/braid.hpp"
#include "shomfly/coeffs.hpp"

namespace shomfly {

struct StrandMismatch : std::runtime_error {
  StrandMismatch() : std::runtime_error("strand counts differ") {}
};

// Descriptor (r_2, ..., r_n) of a factored basis word of H(B_n):
// entry r_k (stored at slot k-2, with 0 <= r_k <= k-1) denotes the factor
// u_k = sigma_{k-1} sigma_{k-2} ... sigma_{k-r_k} (empty for r_k = 0).
// The basis element is u_2 u_3 ... u_n; there are exactly n! descriptors.
using BasisDescriptor = std::vector<int>;

// The explicit sigma-word of a descriptor, as generator indices.
std::vector<int> descriptor_word(const BasisDescriptor& d);

// All n! descriptors for fixed n, in lexicographic order.
std::vector<BasisDescriptor> enumerate_basis(int n);

// Element of the Hecke algebra H(B_n) in the factored basis.
// Equality is coefficientwise; this is sound and complete since the
// descriptors index a basis.
class HeckeElem {
 public:
  HeckeElem() : n_(1) {}
  explicit HeckeElem(int n) : n_(n) {}

  static HeckeElem unit(int n);
  static HeckeElem basis_element(int n, const BasisDescriptor& d,
                                 const RationalFn& c = RationalFn(1));

  int strands() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<BasisDescriptor, RationalFn>& coeffs() const { return coeffs_; }

  void add(const BasisDescriptor& d, const RationalFn& c);

  HeckeElem& operator+=(const HeckeElem& rhs);
  HeckeElem& operator-=(const HeckeElem& rhs);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  HeckeElem operator*(const RationalFn& c) const;

  bool operator==(const HeckeElem& rhs) const;
  bool operator!=(const HeckeElem& rhs) const { return !(*this == rhs); }

  // Right multiplication by the generator sigma_i (or its inverse), reducing
  // through the quadratic relation sigma_i^2 = (q-1) sigma_i + q.
  HeckeElem times_generator(int i) const;
  HeckeElem times_generator_inverse(int i) const;

  // View in H(B_m) for m >= n (descriptors padded with empty factors).
  HeckeElem included_into(int m) const;

 private:
  int n_;
  std::map<BasisDescriptor, RationalFn> coeffs_;
};

HeckeElem mul(const HeckeElem& a, const HeckeElem& b);

// Image of a non-singular braid word under K[B_n] -> H(B_n).
HeckeElem from_word(const BraidWord& w);

// The unique Markov trace on the tower of Hecke algebras normalized by
// tr(1) = 1.  Values lie in the field of rational functions in (q, z).
RationalFn ocneanu_trace(const HeckeElem& e);

// Process-wide memo for basis-word traces; safe for concurrent readers.
void clear_trace_memo();

// Distinguished invertible elements used by the verification suites.
// adjacent_sum(i, j) requires |i-j| = 1, distant_sum(i, j) requires |i-j| >= 2.
HeckeElem adjacent_sum(int n, int i, int j);          // sigma_i + sigma_j - (q-1)
HeckeElem adjacent_sum_inverse(int n, int i, int j);  // its inverse
HeckeElem distant_sum(int n, int i, int j);  // 2 s_i s_j - (q-1) s_i - (q-1) s_j + q^2 + 1
HeckeElem omega_mixer(int n);                // the degree-2 mixer on 4 strands
HeckeElem two_strand_resolvent();            // inverse of (z - sigma_1) in H(B_2)

// `coeff*word` terms in descriptor-lex order; basis words render as their
// explicit sigma-word ("1" for the identity).
std::string to_text(const HeckeElem& e);

}  // namespace shomfly
