#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shomfly/braid.hpp"
#include "shomfly/coeffs.hpp"
#include "shomfly/hecke.hpp"

namespace shomfly {

// Optional external store for degree-zero trace values, keyed by the SHA-256
// of the Hecke normal-form rendering of the resolved word.  Used by the CLI
// file cache; the in-process memo works without it.
struct TraceStore {
  std::function<bool(const std::string& key, RationalFn& out)> lookup;
  std::function<void(const std::string& key, const RationalFn& value)> record;
};
void set_trace_store(TraceStore store);
void clear_trace_store();

// Degree-zero trace of a non-singular word, memoized on the normal-form
// rendering so distinct words with equal images share entries.
RationalFn degree_zero_trace(const BraidWord& w);
void clear_word_trace_memo();

// The k-th basis Markov trace of degree d = degree(w), as the weighted sum
// of degree-zero traces over the k-element resolutions:
//   T_k(w) = k! (d-k)! sum_{|S|=k} T_0(w resolved along S).
RationalFn basis_trace(int k, const BraidWord& w);

// The same value through the degree-lowering recursion (smooth one singular
// position for k <= d-1, cross one for k = d); `alternate` uses the crossing
// route for middle k instead.  Exact cross-check oracle for basis_trace.
RationalFn basis_trace_recursive(int k, const BraidWord& w, bool alternate = false);

// All of T_0 .. T_d at once.
std::vector<RationalFn> trace_vector(const BraidWord& w);

// Entry (a, b) = T_a(gamma_b) for the probe words
// gamma_b = tau_d ... tau_2 tau_1 sigma_1 sigma_2 ... sigma_b on
// max(2, d+1) strands.
std::vector<std::vector<RationalFn>> independence_matrix(int d);

// Determinant over the rational-function field (small matrices only).
RationalFn matrix_determinant(const std::vector<std::vector<RationalFn>>& m);

// Markov-class equality: with equal strand counts the d+1 basis traces are
// compared directly; otherwise the normalized invariants are compared (they
// quotient out the strand count and the exponent sum).
bool markov_class_eq(const BraidWord& a, const BraidWord& b);

}  // namespace shomfly
