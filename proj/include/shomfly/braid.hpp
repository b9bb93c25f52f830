#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace shomfly {

// One letter of a singular braid word: a positive crossing, a negative
// crossing, or a singular crossing between strands i and i+1.
struct Letter {
  enum Kind : uint8_t { Pos, Neg, Sing };
  Kind kind;
  int index;  // 1-based, 1 <= index <= strands-1

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

inline Letter pos(int i) { return {Letter::Pos, i}; }
inline Letter neg(int i) { return {Letter::Neg, i}; }
inline Letter sing(int i) { return {Letter::Sing, i}; }

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        offset(position) {}
  size_t offset;
};

struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  bool operator==(const BraidWord&) const = default;

  // Number of singular letters.
  int degree() const;
  // Exponent sum: +1 per positive crossing, -1 per negative, 0 per singular.
  int exponent_sum() const;
};

// Grammar: whitespace-separated tokens; `s<i>` a positive crossing,
// `s<i>'` its inverse, `t<i>` a singular crossing; optional suffix `^<k>`
// (k >= 1) repeats the letter; optional leading token `n=<k>` fixes the
// strand count.  Without `n=`, the strand count is 1 + max index (1 for the
// empty word).
BraidWord parse_braid(const std::string& text, int strands = 0);

// Minimal form: adjacent equal letters re-collapsed into powers, `n=` emitted
// only when it differs from the inferred count.  parse(format(w)) == w.
std::string format_braid(const BraidWord& w);

// Image of 1..n under the underlying permutation (all letter kinds act as the
// transposition (i, i+1)).  result[i-1] = chi(i).
std::vector<int> permutation(const BraidWord& w);

// Number of cycles of the permutation = components of the closed braid.
int closure_components(const BraidWord& w);

struct Resolution {
  uint32_t kept;   // bit j set: j-th singular letter kept as a positive crossing
  BraidWord word;  // the resolved, non-singular word
};

// All 2^d resolutions, in increasing bitmask order.
std::vector<Resolution> resolutions(const BraidWord& w);

// Resolution for one subset only.
BraidWord resolve(const BraidWord& w, uint32_t kept);

// Words with the j-th singular letter removed (resp. replaced by a positive
// crossing), one per singular position, in order.
std::vector<BraidWord> smooth_one_singular(const BraidWord& w);
std::vector<BraidWord> cross_one_singular(const BraidWord& w);

// Markov moves.  Conjugation requires an invertible letter.
BraidWord markov_conjugate(const BraidWord& w, const Letter& g);
BraidWord markov_stabilize(const BraidWord& w, bool positive);

// Deterministic random walk over the Markov moves: cyclic rotation,
// conjugation by a random crossing, positive/negative stabilization, and
// destabilization when applicable, with the strand count capped.
BraidWord random_markov_walk(const BraidWord& w, int steps, uint64_t seed,
                             int max_strands = 6);

// Uniform random word generator for tests and probe suites.
BraidWord random_word(std::mt19937_64& rng, int strands, int length, int max_degree,
                      bool allow_negative = true);
BraidWord random_positive_word(std::mt19937_64& rng, int strands, int length);

}  // namespace shomfly
