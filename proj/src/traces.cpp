#include "shomfly/traces.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "shomfly/invariant.hpp"
#include "shomfly/sha256.hpp"

namespace shomfly {

namespace {

std::shared_mutex word_memo_mutex;
std::unordered_map<std::string, RationalFn> word_memo;

std::mutex store_mutex;
TraceStore g_store;

}  // namespace

void set_trace_store(TraceStore store) {
  std::lock_guard lock(store_mutex);
  g_store = std::move(store);
}

void clear_trace_store() {
  std::lock_guard lock(store_mutex);
  g_store = TraceStore{};
}

void clear_word_trace_memo() {
  std::unique_lock lock(word_memo_mutex);
  word_memo.clear();
}

RationalFn degree_zero_trace(const BraidWord& w) {
  HeckeElem e = from_word(w);
  std::string key = to_text(e);
  {
    std::shared_lock lock(word_memo_mutex);
    auto it = word_memo.find(key);
    if (it != word_memo.end()) return it->second;
  }
  TraceStore store;
  {
    std::lock_guard lock(store_mutex);
    store = g_store;
  }
  std::string digest;
  if (store.lookup) {
    digest = sha256_hex(key);
    RationalFn cached;
    if (store.lookup(digest, cached)) {
      std::unique_lock lock(word_memo_mutex);
      word_memo.emplace(key, cached);
      return cached;
    }
  }
  RationalFn val = ocneanu_trace(e);
  {
    std::unique_lock lock(word_memo_mutex);
    word_memo.emplace(key, val);
  }
  if (store.record) store.record(digest.empty() ? sha256_hex(key) : digest, val);
  return val;
}

RationalFn basis_trace(int k, const BraidWord& w) {
  int d = w.degree();
  if (k < 0 || k > d) throw std::invalid_argument("trace index out of range");
  if (d > 24) throw std::invalid_argument("too many singular letters to enumerate resolutions");
  RationalFn sum(0);
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    sum += degree_zero_trace(resolve(w, mask));
  }
  return sum * RationalFn(LaurentPoly::constant(factorial(k) * factorial(d - k)));
}

RationalFn basis_trace_recursive(int k, const BraidWord& w, bool alternate) {
  int d = w.degree();
  if (k < 0 || k > d) throw std::invalid_argument("trace index out of range");
  if (d == 0) return degree_zero_trace(w);
  RationalFn sum(0);
  if (k == d) {
    for (const BraidWord& u : cross_one_singular(w)) sum += basis_trace_recursive(d - 1, u, alternate);
  } else if (alternate && k >= 1) {
    for (const BraidWord& u : cross_one_singular(w)) sum += basis_trace_recursive(k - 1, u, alternate);
  } else {
    for (const BraidWord& u : smooth_one_singular(w)) sum += basis_trace_recursive(k, u, alternate);
  }
  return sum;
}

std::vector<RationalFn> trace_vector(const BraidWord& w) {
  std::vector<RationalFn> out;
  int d = w.degree();
  out.reserve(d + 1);
  for (int k = 0; k <= d; ++k) out.push_back(basis_trace(k, w));
  return out;
}

std::vector<std::vector<RationalFn>> independence_matrix(int d) {
  int n = std::max(2, d + 1);
  std::vector<std::vector<RationalFn>> m(d + 1, std::vector<RationalFn>(d + 1, RationalFn(0)));
  for (int b = 0; b <= d; ++b) {
    BraidWord gamma;
    gamma.strands = n;
    for (int j = d; j >= 1; --j) gamma.letters.push_back(sing(j));
    for (int i = 1; i <= b; ++i) gamma.letters.push_back(pos(i));
    for (int a = 0; a <= d; ++a) m[a][b] = basis_trace(a, gamma);
  }
  return m;
}

RationalFn matrix_determinant(const std::vector<std::vector<RationalFn>>& m) {
  size_t n = m.size();
  if (n == 0) return RationalFn(1);
  if (n == 1) return m[0][0];
  RationalFn det(0);
  std::vector<std::vector<RationalFn>> minor(n - 1, std::vector<RationalFn>(n - 1, RationalFn(0)));
  for (size_t c = 0; c < n; ++c) {
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor[i - 1][jj++] = m[i][j];
      }
    }
    RationalFn term = m[0][c] * matrix_determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

bool markov_class_eq(const BraidWord& a, const BraidWord& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("singular degrees differ");
  if (a.strands == b.strands) {
    int d = a.degree();
    for (int k = 0; k <= d; ++k)
      if (basis_trace(k, a) != basis_trace(k, b)) return false;
    return true;
  }
  return invariant_raw(a) == invariant_raw(b);
}

}  // namespace shomfly
