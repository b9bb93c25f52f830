#include "shomfly/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace shomfly {

int BraidWord::degree() const {
  int d = 0;
  for (const Letter& l : letters)
    if (l.kind == Letter::Sing) ++d;
  return d;
}

int BraidWord::exponent_sum() const {
  int e = 0;
  for (const Letter& l : letters) {
    if (l.kind == Letter::Pos) ++e;
    if (l.kind == Letter::Neg) --e;
  }
  return e;
}

BraidWord parse_braid(const std::string& text, int strands) {
  BraidWord w;
  std::vector<std::pair<Letter, size_t>> letters;  // letter + source offset
  int declared = 0;
  size_t cursor = 0;
  bool first_token = true;

  while (cursor < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[cursor]))) {
      ++cursor;
      continue;
    }
    size_t start = cursor;
    while (cursor < text.size() && !std::isspace(static_cast<unsigned char>(text[cursor]))) ++cursor;
    std::string tok = text.substr(start, cursor - start);

    if (first_token && tok.rfind("n=", 0) == 0) {
      first_token = false;
      try {
        size_t used = 0;
        declared = std::stoi(tok.substr(2), &used);
        if (used != tok.size() - 2 || declared < 1) throw std::invalid_argument("");
      } catch (...) {
        throw ParseError("bad strand count token '" + tok + "'", start);
      }
      continue;
    }
    first_token = false;

    size_t i = 0;
    char kind_ch = tok[i++];
    if (kind_ch != 's' && kind_ch != 't')
      throw ParseError("expected 's' or 't' in token '" + tok + "'", start);
    size_t digits_start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == digits_start) throw ParseError("missing index in token '" + tok + "'", start);
    int index = std::stoi(tok.substr(digits_start, i - digits_start));
    if (index < 1) throw ParseError("index must be >= 1 in token '" + tok + "'", start);

    bool inverse = false;
    if (i < tok.size() && tok[i] == '\'') {
      if (kind_ch == 't')
        throw ParseError("singular letters have no inverse: '" + tok + "'", start);
      inverse = true;
      ++i;
    }
    int repeat = 1;
    if (i < tok.size() && tok[i] == '^') {
      ++i;
      size_t exp_start = i;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
      if (i == exp_start) throw ParseError("missing power in token '" + tok + "'", start);
      repeat = std::stoi(tok.substr(exp_start, i - exp_start));
      if (repeat < 1) throw ParseError("power must be >= 1 in token '" + tok + "'", start);
    }
    if (i != tok.size()) throw ParseError("trailing characters in token '" + tok + "'", start);

    Letter l = kind_ch == 't' ? sing(index) : (inverse ? neg(index) : pos(index));
    for (int k = 0; k < repeat; ++k) letters.emplace_back(l, start);
  }

  int inferred = 1;
  for (const auto& [l, off] : letters) inferred = std::max(inferred, l.index + 1);

  int n;
  if (strands > 0 && declared > 0 && strands != declared)
    throw ParseError("strand count " + std::to_string(declared) + " conflicts with requested " +
                         std::to_string(strands),
                     0);
  n = strands > 0 ? strands : (declared > 0 ? declared : inferred);

  for (const auto& [l, off] : letters)
    if (l.index > n - 1)
      throw ParseError("letter index " + std::to_string(l.index) + " out of range for " +
                           std::to_string(n) + " strands",
                       off);

  w.strands = n;
  w.letters.reserve(letters.size());
  for (const auto& [l, off] : letters) w.letters.push_back(l);
  return w;
}

std::string format_braid(const BraidWord& w) {
  int inferred = 1;
  for (const Letter& l : w.letters) inferred = std::max(inferred, l.index + 1);

  std::ostringstream os;
  bool first = true;
  if (w.strands != inferred) {
    os << "n=" << w.strands;
    first = false;
  }
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!first) os << ' ';
    first = false;
    const Letter& l = w.letters[i];
    os << (l.kind == Letter::Sing ? 't' : 's') << l.index;
    if (l.kind == Letter::Neg) os << '\'';
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> image(w.strands);
  std::iota(image.begin(), image.end(), 1);
  // Track which puncture each slot carries; letters swap adjacent slots.
  for (const Letter& l : w.letters) std::swap(image[l.index - 1], image[l.index]);
  // image[slot] = starting puncture ending in that slot; invert to get chi.
  std::vector<int> chi(w.strands);
  for (int slot = 0; slot < w.strands; ++slot) chi[image[slot] - 1] = slot + 1;
  return chi;
}

int closure_components(const BraidWord& w) {
  std::vector<int> chi = permutation(w);
  std::vector<bool> seen(w.strands, false);
  int cycles = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = chi[j] - 1;
    }
  }
  return cycles;
}

BraidWord resolve(const BraidWord& w, uint32_t kept) {
  BraidWord out;
  out.strands = w.strands;
  int sidx = 0;
  for (const Letter& l : w.letters) {
    if (l.kind != Letter::Sing) {
      out.letters.push_back(l);
      continue;
    }
    if (kept & (1u << sidx)) out.letters.push_back(pos(l.index));
    ++sidx;
  }
  return out;
}

std::vector<Resolution> resolutions(const BraidWord& w) {
  int d = w.degree();
  if (d > 24) throw std::invalid_argument("too many singular letters to enumerate resolutions");
  std::vector<Resolution> out;
  out.reserve(size_t(1) << d);
  for (uint32_t mask = 0; mask < (1u << d); ++mask) out.push_back({mask, resolve(w, mask)});
  return out;
}

static std::vector<BraidWord> map_one_singular(const BraidWord& w, bool keep_as_crossing) {
  std::vector<BraidWord> out;
  for (size_t p = 0; p < w.letters.size(); ++p) {
    if (w.letters[p].kind != Letter::Sing) continue;
    BraidWord m;
    m.strands = w.strands;
    for (size_t r = 0; r < w.letters.size(); ++r) {
      if (r == p) {
        if (keep_as_crossing) m.letters.push_back(pos(w.letters[r].index));
      } else {
        m.letters.push_back(w.letters[r]);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<BraidWord> smooth_one_singular(const BraidWord& w) { return map_one_singular(w, false); }
std::vector<BraidWord> cross_one_singular(const BraidWord& w) { return map_one_singular(w, true); }

BraidWord markov_conjugate(const BraidWord& w, const Letter& g) {
  if (g.kind == Letter::Sing)
    throw std::invalid_argument("conjugation requires an invertible letter");
  if (g.index > w.strands - 1) throw std::invalid_argument("conjugating letter index out of range");
  BraidWord out;
  out.strands = w.strands;
  Letter ginv = g.kind == Letter::Pos ? neg(g.index) : pos(g.index);
  out.letters.push_back(ginv);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.letters.push_back(g);
  return out;
}

BraidWord markov_stabilize(const BraidWord& w, bool positive) {
  BraidWord out = w;
  out.strands += 1;
  out.letters.push_back(positive ? pos(w.strands) : neg(w.strands));
  return out;
}

static bool destabilizable(const BraidWord& w) {
  if (w.strands < 2 || w.letters.empty()) return false;
  const Letter& last = w.letters.back();
  if (last.kind == Letter::Sing || last.index != w.strands - 1) return false;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i].index == w.strands - 1) return false;
  return true;
}

BraidWord random_markov_walk(const BraidWord& w, int steps, uint64_t seed, int max_strands) {
  std::mt19937_64 rng(seed);
  BraidWord cur = w;
  for (int s = 0; s < steps; ++s) {
    int move = static_cast<int>(rng() % 5);
    switch (move) {
      case 0: {  // cyclic rotation
        if (cur.letters.empty()) break;
        Letter front = cur.letters.front();
        cur.letters.erase(cur.letters.begin());
        cur.letters.push_back(front);
        break;
      }
      case 1: {  // conjugation by a random crossing
        if (cur.strands < 2) break;
        int idx = 1 + static_cast<int>(rng() % (cur.strands - 1));
        Letter g = (rng() & 1) ? pos(idx) : neg(idx);
        cur = markov_conjugate(cur, g);
        break;
      }
      case 2:
      case 3: {  // stabilization
        if (cur.strands >= max_strands) break;
        cur = markov_stabilize(cur, move == 2);
        break;
      }
      case 4: {
        if (destabilizable(cur)) {
          cur.letters.pop_back();
          cur.strands -= 1;
        }
        break;
      }
    }
  }
  return cur;
}

BraidWord random_word(std::mt19937_64& rng, int strands, int length, int max_degree,
                      bool allow_negative) {
  BraidWord w;
  w.strands = strands;
  int d = 0;
  for (int i = 0; i < length; ++i) {
    int idx = 1 + static_cast<int>(rng() % (strands - 1));
    int kinds = d < max_degree ? 3 : 2;
    int k = static_cast<int>(rng() % kinds);
    if (k == 1 && !allow_negative) k = 0;
    if (k == 0) w.letters.push_back(pos(idx));
    if (k == 1) w.letters.push_back(neg(idx));
    if (k == 2) {
      w.letters.push_back(sing(idx));
      ++d;
    }
  }
  return w;
}

BraidWord random_positive_word(std::mt19937_64& rng, int strands, int length) {
  BraidWord w;
  w.strands = strands;
  for (int i = 0; i < length; ++i)
    w.letters.push_back(pos(1 + static_cast<int>(rng() % (strands - 1))));
  return w;
}

}  // namespace shomfly
