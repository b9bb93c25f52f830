#include "skein_oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shomfly::oracle {

namespace {

LaurentPoly tx_monomial(int te, int xe, long c) {
  ExpoVec e = zero_expo();
  e[static_cast<int>(Var::t)] = te;
  e[static_cast<int>(Var::x)] = xe;
  return LaurentPoly::monomial(e, c);
}

// (t^{-1} - t) / x, the value of an extra split unknot component.
const LaurentPoly& unlink_factor() {
  static const LaurentPoly d = tx_monomial(-1, -1, 1) + tx_monomial(1, -1, -1);
  return d;
}

bool cancel_step(BraidWord& w) {
  size_t m = w.letters.size();
  if (m < 2) return false;
  for (size_t p = 0; p < m; ++p) {
    const Letter& a = w.letters[p];
    const Letter& b = w.letters[(p + 1) % m];
    bool inverse_pair = a.index == b.index &&
                        ((a.kind == Letter::Pos && b.kind == Letter::Neg) ||
                         (a.kind == Letter::Neg && b.kind == Letter::Pos));
    if (!inverse_pair) continue;
    if (p + 1 < m) {
      w.letters.erase(w.letters.begin() + p, w.letters.begin() + p + 2);
    } else {
      w.letters.pop_back();
      w.letters.erase(w.letters.begin());
    }
    return true;
  }
  return false;
}

// Cyclic free reduction, removal of unused top strands (each contributes a
// split unknot), and Markov destabilization of a top generator that occurs
// exactly once.  Returns the collected split-unknot factor.
LaurentPoly simplify(BraidWord& w) {
  LaurentPoly factor = LaurentPoly::one();
  bool progress = true;
  while (progress) {
    progress = false;
    while (cancel_step(w)) progress = true;
    while (w.strands >= 2) {
      int top_count = 0;
      size_t top_pos = 0;
      for (size_t p = 0; p < w.letters.size(); ++p) {
        if (w.letters[p].index == w.strands - 1) {
          ++top_count;
          top_pos = p;
        }
      }
      if (top_count == 0) {
        w.strands -= 1;
        factor *= unlink_factor();
        progress = true;
      } else if (top_count == 1) {
        std::vector<Letter> rot;
        rot.reserve(w.letters.size() - 1);
        for (size_t p = top_pos + 1; p < w.letters.size(); ++p) rot.push_back(w.letters[p]);
        for (size_t p = 0; p < top_pos; ++p) rot.push_back(w.letters[p]);
        w.letters = std::move(rot);
        w.strands -= 1;
        progress = true;
      } else {
        break;
      }
    }
  }
  return factor;
}

struct Traversal {
  int components = 0;
  int first_bad = -1;  // letter position, -1 if the diagram is descending
};

// Walks the closed diagram component by component (components ordered by
// their smallest top slot) and finds the first crossing whose first encounter
// is an under-pass.  The walk itself does not depend on crossing signs, so
// switching that crossing leaves the earlier part of the walk intact.
Traversal traverse(const BraidWord& w) {
  Traversal out;
  std::vector<bool> top_visited(w.strands, false);
  std::vector<bool> seen(w.letters.size(), false);
  for (int start = 0; start < w.strands; ++start) {
    if (top_visited[start]) continue;
    ++out.components;
    int j = start;
    do {
      top_visited[j] = true;
      int slot = j + 1;
      for (size_t p = 0; p < w.letters.size(); ++p) {
        const Letter& l = w.letters[p];
        if (slot != l.index && slot != l.index + 1) continue;
        if (!seen[p]) {
          seen[p] = true;
          bool over = (l.kind == Letter::Pos && slot == l.index) ||
                      (l.kind == Letter::Neg && slot == l.index + 1);
          if (!over && out.first_bad < 0) {
            out.first_bad = static_cast<int>(p);
            return out;
          }
        }
        slot = slot == l.index ? l.index + 1 : l.index;
      }
      j = slot - 1;
    } while (j != start);
  }
  return out;
}

std::map<std::string, LaurentPoly> memo;

LaurentPoly eval(BraidWord w) {
  LaurentPoly factor = simplify(w);
  std::string key = std::to_string(w.strands) + ":" + format_braid(w);
  auto it = memo.find(key);
  if (it != memo.end()) return factor * it->second;

  Traversal tv = traverse(w);
  LaurentPoly value;
  if (tv.first_bad < 0) {
    value = LaurentPoly::one();
    for (int c = 1; c < tv.components; ++c) value *= unlink_factor();
  } else {
    BraidWord switched = w, smoothed = w;
    const Letter& l = w.letters[tv.first_bad];
    switched.letters[tv.first_bad] = l.kind == Letter::Pos ? neg(l.index) : pos(l.index);
    smoothed.letters.erase(smoothed.letters.begin() + tv.first_bad);
    if (l.kind == Letter::Pos) {
      // t^{-1} P(w) - t P(switched) = x P(smoothed)
      value = tx_monomial(2, 0, 1) * eval(switched) + tx_monomial(1, 1, 1) * eval(smoothed);
    } else {
      // t^{-1} P(switched) - t P(w) = x P(smoothed)
      value = tx_monomial(-2, 0, 1) * eval(switched) + tx_monomial(-1, 1, -1) * eval(smoothed);
    }
  }
  memo.emplace(std::move(key), value);
  return factor * value;
}

}  // namespace

LaurentPoly homfly(const BraidWord& w) {
  for (const Letter& l : w.letters)
    if (l.kind == Letter::Sing) throw std::invalid_argument("oracle handles non-singular words");
  return eval(w);
}

}  // namespace shomfly::oracle
