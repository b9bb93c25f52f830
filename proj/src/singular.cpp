#include "shomfly/singular.hpp"

#include <sstream>

#include "shomfly/traces.hpp"

namespace shomfly {

namespace {

// Lexicographically least representative in the trace monoid: repeatedly
// emit the smallest index that commutes with everything before it.
std::vector<int> canonical_tau(std::vector<int> v) {
  std::vector<int> out;
  out.reserve(v.size());
  while (!v.empty()) {
    size_t best = 0;
    bool have = false;
    for (size_t p = 0; p < v.size(); ++p) {
      bool movable = true;
      for (size_t r = 0; r < p; ++r) {
        if (std::abs(v[r] - v[p]) < 2) {
          movable = false;
          break;
        }
      }
      if (movable && (!have || v[p] < v[best])) {
        best = p;
        have = true;
      }
    }
    out.push_back(v[best]);
    v.erase(v.begin() + best);
  }
  return out;
}

}  // namespace

TauWord::TauWord(std::vector<int> indices) : indices_(canonical_tau(std::move(indices))) {}

void SingularElem::add(const TauWord& t, const HeckeElem& h) {
  if (h.is_zero()) return;
  auto it = coeffs_.find(t);
  if (it == coeffs_.end()) {
    coeffs_.emplace(t, h);
  } else {
    it->second += h;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SingularElem& SingularElem::operator+=(const SingularElem& rhs) {
  if (n_ != rhs.n_ || d_ != rhs.d_) throw StrandMismatch();
  for (const auto& [t, h] : rhs.coeffs_) add(t, h);
  return *this;
}

SingularElem& SingularElem::operator-=(const SingularElem& rhs) {
  if (n_ != rhs.n_ || d_ != rhs.d_) throw StrandMismatch();
  for (const auto& [t, h] : rhs.coeffs_) add(t, h * RationalFn(-1));
  return *this;
}

SingularElem SingularElem::operator*(const RationalFn& c) const {
  SingularElem out(n_, d_);
  if (c.is_zero()) return out;
  for (const auto& [t, h] : coeffs_) out.add(t, h * c);
  return out;
}

bool SingularElem::same_coordinates(const SingularElem& rhs) const {
  if (n_ != rhs.n_ || d_ != rhs.d_ || coeffs_.size() != rhs.coeffs_.size()) return false;
  auto it = coeffs_.begin();
  auto jt = rhs.coeffs_.begin();
  for (; it != coeffs_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

SpanningEq spanning_eq(const SingularElem& a, const SingularElem& b) {
  return a.same_coordinates(b) ? SpanningEq::VerifiedSyntactically : SpanningEq::Inconclusive;
}

namespace {

struct Term {
  RationalFn coeff;
  std::vector<Letter> letters;  // Pos and Sing only
};

// Expands away negative crossings: sigma^{-1} = q^{-1} sigma - q^{-1}(q-1).
std::vector<Term> eliminate_negatives(const RationalFn& c0, const std::vector<Letter>& letters) {
  const RationalFn qinv = RationalFn::variable(Var::q).inv();
  const RationalFn drop = -(qinv * (RationalFn::variable(Var::q) - RationalFn(1)));
  std::vector<Term> terms{{c0, {}}};
  for (const Letter& l : letters) {
    if (l.kind != Letter::Neg) {
      for (Term& t : terms) t.letters.push_back(l);
      continue;
    }
    std::vector<Term> next;
    next.reserve(terms.size() * 2);
    for (Term& t : terms) {
      Term keep = t;
      keep.coeff *= qinv;
      keep.letters.push_back(pos(l.index));
      next.push_back(std::move(keep));
      t.coeff *= drop;
      next.push_back(std::move(t));
    }
    terms = std::move(next);
  }
  return terms;
}

// First position p with a crossing at p and a singular letter at p+1.
int first_blocking_pair(const std::vector<Letter>& ls) {
  for (size_t p = 0; p + 1 < ls.size(); ++p)
    if (ls[p].kind == Letter::Pos && ls[p + 1].kind == Letter::Sing) return static_cast<int>(p);
  return -1;
}

}  // namespace

// Worklist over terms (prefix, tail): the prefix is the letter sequence up to
// and including the last singular letter, the tail collects everything to its
// right as a Hecke element (crossings right of the last singular letter are
// inert, and the word-to-algebra map is multiplicative, so folding them early
// gives the same result).  Terms with equal prefixes are merged; rewriting is
// linear, so this does not change the output either.
SingularElem rewrite_to_spanning(const std::vector<WeightedWord>& expr) {
  if (expr.empty()) return SingularElem();
  int n = expr.front().word.strands;
  int d = expr.front().word.degree();
  for (const WeightedWord& ww : expr)
    if (ww.word.strands != n || ww.word.degree() != d) throw StrandMismatch();

  const RationalFn qinv = RationalFn::variable(Var::q).inv();

  std::map<std::vector<Letter>, HeckeElem> work;
  SingularElem out(n, d);

  auto enqueue = [&](std::vector<Letter> letters, HeckeElem tail) {
    if (tail.is_zero()) return;
    size_t last_sing = letters.size();
    for (size_t p = letters.size(); p-- > 0;) {
      if (letters[p].kind == Letter::Sing) {
        last_sing = p;
        break;
      }
    }
    if (last_sing == letters.size()) {  // no singular letters left
      BraidWord w;
      w.strands = n;
      w.letters = std::move(letters);
      out.add(TauWord(), mul(from_word(w), tail));
      return;
    }
    if (last_sing + 1 < letters.size()) {
      BraidWord suffix;
      suffix.strands = n;
      suffix.letters.assign(letters.begin() + last_sing + 1, letters.end());
      tail = mul(from_word(suffix), tail);
      letters.resize(last_sing + 1);
    }
    auto it = work.find(letters);
    if (it == work.end()) {
      work.emplace(std::move(letters), std::move(tail));
    } else {
      it->second += tail;
      if (it->second.is_zero()) work.erase(it);
    }
  };

  for (const WeightedWord& ww : expr)
    for (Term& t : eliminate_negatives(ww.coeff, ww.word.letters))
      enqueue(std::move(t.letters), HeckeElem::unit(n) * t.coeff);

  while (!work.empty()) {
    auto node = work.extract(work.begin());
    std::vector<Letter>& letters = node.key();
    HeckeElem tail = std::move(node.mapped());
    int p = first_blocking_pair(letters);
    if (p < 0) {  // pure tau prefix
      std::vector<int> tau;
      tau.reserve(letters.size());
      for (const Letter& l : letters) tau.push_back(l.index);
      out.add(TauWord(std::move(tau)), tail);
      continue;
    }
    int i = letters[p].index;
    int j = letters[p + 1].index;
    if (i == j || std::abs(i - j) >= 2) {
      std::swap(letters[p], letters[p + 1]);
      enqueue(std::move(letters), std::move(tail));
      continue;
    }
    // adjacent indices: sigma_i tau_j ->
    //   q^{-1} tau_j s_i s_j s_i - q^{-1} tau_i s_i s_j s_i + tau_j s_i
    auto splice = [&](const std::vector<Letter>& repl, const RationalFn& f) {
      std::vector<Letter> u;
      u.reserve(letters.size() + repl.size());
      u.assign(letters.begin(), letters.begin() + p);
      u.insert(u.end(), repl.begin(), repl.end());
      u.insert(u.end(), letters.begin() + p + 2, letters.end());
      enqueue(std::move(u), tail * f);
    };
    splice({sing(j), pos(i), pos(j), pos(i)}, qinv);
    splice({sing(i), pos(i), pos(j), pos(i)}, -qinv);
    splice({sing(j), pos(i)}, RationalFn(1));
  }
  return out;
}

SingularElem rewrite_to_spanning(const BraidWord& w) {
  return rewrite_to_spanning(std::vector<WeightedWord>{{RationalFn(1), w}});
}

std::vector<BraidWord> g0_words(const BraidWord& w) {
  if (w.degree() < 1) throw std::invalid_argument("word has no singular letters");
  return smooth_one_singular(w);
}

std::vector<BraidWord> g1_words(const BraidWord& w) {
  if (w.degree() < 1) throw std::invalid_argument("word has no singular letters");
  return cross_one_singular(w);
}

namespace {

SingularElem sum_rewritten(const std::vector<BraidWord>& words) {
  SingularElem out(words.front().strands, words.front().degree());
  for (const BraidWord& w : words) out += rewrite_to_spanning(w);
  return out;
}

}  // namespace

SingularElem g0(const BraidWord& w) { return sum_rewritten(g0_words(w)); }
SingularElem g1(const BraidWord& w) { return sum_rewritten(g1_words(w)); }

ProbeReport probe_zero(const std::vector<WeightedWord>& expr, int trials, uint64_t seed,
                       int max_probe_len, int max_probe_degree) {
  if (expr.empty()) return {true, 0, std::nullopt};
  int n = expr.front().word.strands;
  int d = expr.front().word.degree();
  for (const WeightedWord& ww : expr)
    if (ww.word.strands != n || ww.word.degree() != d)
      throw std::invalid_argument("probe expression is not homogeneous");

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    int len_g = static_cast<int>(rng() % (max_probe_len + 1));
    int len_d = static_cast<int>(rng() % (max_probe_len + 1));
    int budget = max_probe_degree;
    BraidWord gamma = random_word(rng, n, len_g, budget);
    budget -= gamma.degree();
    BraidWord delta = random_word(rng, n, len_d, budget);
    int total_d = d + gamma.degree() + delta.degree();

    for (int k = 0; k <= total_d; ++k) {
      RationalFn acc(0);
      for (const WeightedWord& ww : expr) {
        BraidWord probe;
        probe.strands = n;
        probe.letters = gamma.letters;
        probe.letters.insert(probe.letters.end(), ww.word.letters.begin(), ww.word.letters.end());
        probe.letters.insert(probe.letters.end(), delta.letters.begin(), delta.letters.end());
        acc += ww.coeff * basis_trace(k, probe);
      }
      if (!acc.is_zero())
        return {false, trial + 1, ProbeWitness{gamma, delta, k, acc}};
    }
  }
  return {true, trials, std::nullopt};
}

std::string to_text(const SingularElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, h] : e.coeffs()) {
    if (!first) os << '\n';
    first = false;
    if (t.indices().empty()) {
      os << '1';
    } else {
      for (size_t i = 0; i < t.indices().size(); ++i) {
        if (i) os << ' ';
        os << 't' << t.indices()[i];
      }
    }
    os << " ⊗ " << to_text(h);
  }
  return os.str();
}

}  // namespace shomfly
