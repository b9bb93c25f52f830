#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shomfly/braid.hpp"
#include "shomfly/coeffs.hpp"
#include "shomfly/hecke.hpp"

namespace shomfly {

// Sequence of singular-generator indices, stored as the lexicographically
// least representative under the far commutations tau_k tau_l = tau_l tau_k
// for |k-l| >= 2.
class TauWord {
 public:
  TauWord() = default;
  explicit TauWord(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int length() const { return static_cast<int>(indices_.size()); }

  bool operator==(const TauWord&) const = default;
  bool operator<(const TauWord& rhs) const { return indices_ < rhs.indices_; }

 private:
  std::vector<int> indices_;
};

// Coordinates of an element of the singular Hecke algebra in the spanning
// set {tau-word * basis word}.  The spanning set is not known to be a basis,
// so coefficientwise equality is a sufficient condition for equality in the
// algebra, not a necessary one.
class SingularElem {
 public:
  SingularElem() : n_(1), d_(0) {}
  SingularElem(int n, int d) : n_(n), d_(d) {}

  int strands() const { return n_; }
  int degree() const { return d_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<TauWord, HeckeElem>& coeffs() const { return coeffs_; }

  void add(const TauWord& t, const HeckeElem& h);

  SingularElem& operator+=(const SingularElem& rhs);
  SingularElem& operator-=(const SingularElem& rhs);
  SingularElem operator*(const RationalFn& c) const;

  // Coefficientwise comparison (see class comment).
  bool same_coordinates(const SingularElem& rhs) const;

 private:
  int n_;
  int d_;
  std::map<TauWord, HeckeElem> coeffs_;
};

// Spanning-set comparison outcome.  Matching coordinates prove equality in
// the algebra; differing coordinates prove nothing (the spanning set carries
// relations), so the caller escalates to probes or Markov-class checks.
enum class SpanningEq { VerifiedSyntactically, Inconclusive };

SpanningEq spanning_eq(const SingularElem& a, const SingularElem& b);

// Deterministic rewriting of a singular braid word into spanning-set
// coordinates: negative crossings are eliminated through the quadratic
// relation first, then the leftmost crossing standing immediately before a
// singular letter is moved right (commuting when the indices are equal or
// distant, splitting into three terms when they are adjacent), and the
// trailing crossing-only tail is folded into a Hecke element.
SingularElem rewrite_to_spanning(const BraidWord& w);

// Same map on a formal linear combination of words.
struct WeightedWord {
  RationalFn coeff;
  BraidWord word;
};
SingularElem rewrite_to_spanning(const std::vector<WeightedWord>& expr);

// Degree-lowering desingularization maps, word level: sum over singular
// positions of the word with that position smoothed (g0) or turned into a
// positive crossing (g1).
std::vector<BraidWord> g0_words(const BraidWord& w);
std::vector<BraidWord> g1_words(const BraidWord& w);
SingularElem g0(const BraidWord& w);
SingularElem g1(const BraidWord& w);

// Randomized necessary-condition test for expr == 0 in the singular Hecke
// algebra: evaluates every basis Markov trace on gamma * expr * delta for
// random words gamma, delta.  A Pass is evidence, not a proof; a Fail carries
// a concrete separating witness.
struct ProbeWitness {
  BraidWord gamma;
  BraidWord delta;
  int trace_index;
  RationalFn value;
};

struct ProbeReport {
  bool pass;
  int trials_run;
  std::optional<ProbeWitness> witness;
};

ProbeReport probe_zero(const std::vector<WeightedWord>& expr, int trials, uint64_t seed,
                       int max_probe_len = 3, int max_probe_degree = 2);

// `<tau-word> \xE2\x8A\x97 <hecke-elem>` lines, tau-words in canonical order.
std::string to_text(const SingularElem& e);

}  // namespace shomfly
