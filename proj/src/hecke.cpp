#include "shomfly/hecke.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace shomfly {

namespace {

const RationalFn& q_var() {
  static const RationalFn q = RationalFn::variable(Var::q);
  return q;
}
const RationalFn& z_var() {
  static const RationalFn z = RationalFn::variable(Var::z);
  return z;
}
const RationalFn& q_minus_1() {
  static const RationalFn v = q_var() - RationalFn(1);
  return v;
}

}  // namespace

std::vector<int> descriptor_word(const BasisDescriptor& d) {
  std::vector<int> out;
  for (size_t slot = 0; slot < d.size(); ++slot) {
    int k = static_cast<int>(slot) + 2;
    for (int step = 0; step < d[slot]; ++step) out.push_back(k - 1 - step);
  }
  return out;
}

std::vector<BasisDescriptor> enumerate_basis(int n) {
  std::vector<BasisDescriptor> out{BasisDescriptor{}};
  for (int k = 2; k <= n; ++k) {
    std::vector<BasisDescriptor> next;
    next.reserve(out.size() * k);
    for (const auto& d : out) {
      for (int r = 0; r <= k - 1; ++r) {
        BasisDescriptor e = d;
        e.push_back(r);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

HeckeElem HeckeElem::unit(int n) {
  HeckeElem e(n);
  e.coeffs_[BasisDescriptor(n - 1, 0)] = RationalFn(1);
  return e;
}

HeckeElem HeckeElem::basis_element(int n, const BasisDescriptor& d, const RationalFn& c) {
  HeckeElem e(n);
  e.add(d, c);
  return e;
}

void HeckeElem::add(const BasisDescriptor& d, const RationalFn& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(d);
  if (it == coeffs_.end()) {
    coeffs_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& rhs) {
  if (n_ != rhs.n_) throw StrandMismatch();
  for (const auto& [d, c] : rhs.coeffs_) add(d, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& rhs) {
  if (n_ != rhs.n_) throw StrandMismatch();
  for (const auto& [d, c] : rhs.coeffs_) add(d, -c);
  return *this;
}

HeckeElem HeckeElem::operator*(const RationalFn& c) const {
  HeckeElem out(n_);
  if (c.is_zero()) return out;
  for (const auto& [d, k] : coeffs_) out.coeffs_.emplace(d, k * c);
  return out;
}

bool HeckeElem::operator==(const HeckeElem& rhs) const {
  if (n_ != rhs.n_ || coeffs_.size() != rhs.coeffs_.size()) return false;
  auto it = coeffs_.begin();
  auto jt = rhs.coeffs_.begin();
  for (; it != coeffs_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

namespace {

// Right multiplication of a factored basis word by sigma_i, by recursion on
// the last factor u_n = sigma_{n-1} ... sigma_{n-m}:
//   i == n-m-1          : the factor extends (u_n sigma_i has m+1 letters);
//   i == n-m  (m >= 1)  : the quadratic relation splits the tail;
//   n-m < i <= n-1      : u_n sigma_i = sigma_{i-1} u_n, recurse one level down;
//   i < n-m-1           : sigma_i commutes with u_n, recurse one level down.
void descriptor_times_generator(BasisDescriptor& d, int i,
                                const RationalFn& carry,
                                HeckeElem& out) {
  int n = static_cast<int>(d.size()) + 1;
  int m = d.back();
  if (i == n - m - 1) {
    d.back() = m + 1;
    out.add(d, carry);
    d.back() = m;
    return;
  }
  if (i == n - m) {
    out.add(d, carry * q_minus_1());
    d.back() = m - 1;
    out.add(d, carry * q_var());
    d.back() = m;
    return;
  }
  int lower = i > n - m ? i - 1 : i;
  int saved = d.back();
  d.pop_back();
  // Recurse in H(B_{n-1}); re-append the untouched tail on every branch.
  HeckeElem sub(n - 1);
  descriptor_times_generator(d, lower, carry, sub);
  d.push_back(saved);
  for (const auto& [dd, cc] : sub.coeffs()) {
    BasisDescriptor e = dd;
    e.push_back(saved);
    out.add(e, cc);
  }
}

}  // namespace

HeckeElem HeckeElem::times_generator(int i) const {
  if (i < 1 || i > n_ - 1) throw std::invalid_argument("generator index out of range");
  HeckeElem out(n_);
  for (const auto& [d, c] : coeffs_) {
    BasisDescriptor e = d;
    descriptor_times_generator(e, i, c, out);
  }
  return out;
}

HeckeElem HeckeElem::times_generator_inverse(int i) const {
  // sigma_i^{-1} = q^{-1} sigma_i - q^{-1}(q-1)
  RationalFn qi = q_var().inv();
  HeckeElem out = times_generator(i) * qi;
  out -= *this * (qi * q_minus_1());
  return out;
}

HeckeElem HeckeElem::included_into(int m) const {
  if (m < n_) throw StrandMismatch();
  HeckeElem out(m);
  for (const auto& [d, c] : coeffs_) {
    BasisDescriptor e = d;
    e.resize(m - 1, 0);
    out.add(e, c);
  }
  return out;
}

HeckeElem mul(const HeckeElem& a, const HeckeElem& b) {
  if (a.strands() != b.strands()) throw StrandMismatch();
  HeckeElem out(a.strands());
  for (const auto& [d, c] : b.coeffs()) {
    HeckeElem cur = a;
    for (int i : descriptor_word(d)) cur = cur.times_generator(i);
    for (const auto& [e, k] : cur.coeffs()) out.add(e, k * c);
  }
  return out;
}

HeckeElem from_word(const BraidWord& w) {
  HeckeElem e = HeckeElem::unit(w.strands);
  for (const Letter& l : w.letters) {
    switch (l.kind) {
      case Letter::Pos:
        e = e.times_generator(l.index);
        break;
      case Letter::Neg:
        e = e.times_generator_inverse(l.index);
        break;
      case Letter::Sing:
        throw std::invalid_argument("word has singular letters");
    }
  }
  return e;
}

namespace {

std::shared_mutex trace_memo_mutex;
std::map<BasisDescriptor, RationalFn> trace_memo;

BasisDescriptor trimmed(const BasisDescriptor& d) {
  BasisDescriptor t = d;
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

RationalFn trace_descriptor(const BasisDescriptor& d);

RationalFn trace_elem(const HeckeElem& e) {
  RationalFn out(0);
  for (const auto& [d, c] : e.coeffs()) out += c * trace_descriptor(trimmed(d));
  return out;
}

// tr_n(beta * 1) = tr_{n-1}(beta);
// tr_n(beta * sigma_{n-1}...sigma_{n-m}) = z * tr_{n-1}(beta * sigma_{n-2}...sigma_{n-m}).
RationalFn trace_descriptor(const BasisDescriptor& d) {
  if (d.empty()) return RationalFn(1);
  {
    std::shared_lock lock(trace_memo_mutex);
    auto it = trace_memo.find(d);
    if (it != trace_memo.end()) return it->second;
  }
  int n = static_cast<int>(d.size()) + 1;
  int m = d.back();  // >= 1: trailing zeros are trimmed before lookup
  BasisDescriptor front = d;
  front.pop_back();
  HeckeElem e = HeckeElem::basis_element(n - 1, front);
  for (int step = 1; step < m; ++step) e = e.times_generator(n - 1 - step);
  RationalFn val = z_var() * trace_elem(e);
  {
    std::unique_lock lock(trace_memo_mutex);
    trace_memo.emplace(d, val);
  }
  return val;
}

}  // namespace

RationalFn ocneanu_trace(const HeckeElem& e) { return trace_elem(e); }

void clear_trace_memo() {
  std::unique_lock lock(trace_memo_mutex);
  trace_memo.clear();
}

namespace {

HeckeElem generator(int n, int i) {
  return HeckeElem::unit(n).times_generator(i);
}

}  // namespace

HeckeElem adjacent_sum(int n, int i, int j) {
  if (std::abs(i - j) != 1) throw std::invalid_argument("indices must be adjacent");
  HeckeElem e = generator(n, i);
  e += generator(n, j);
  e -= HeckeElem::unit(n) * q_minus_1();
  return e;
}

HeckeElem adjacent_sum_inverse(int n, int i, int j) {
  if (std::abs(i - j) != 1) throw std::invalid_argument("indices must be adjacent");
  const RationalFn q = q_var();
  HeckeElem si = generator(n, i), sj = generator(n, j);
  HeckeElem e = HeckeElem::unit(n) * (q * q_minus_1());
  e -= si * (RationalFn(2) * q);
  e -= sj * (RationalFn(2) * q);
  e -= si.times_generator(j) * q_minus_1();
  e -= sj.times_generator(i) * q_minus_1();
  e += si.times_generator(j).times_generator(i) * RationalFn(2);
  RationalFn scale = -(q * (q + RationalFn(1)).pow(2)).inv();
  return e * scale;
}

HeckeElem distant_sum(int n, int i, int j) {
  if (std::abs(i - j) < 2) throw std::invalid_argument("indices must be distant");
  const RationalFn q = q_var();
  HeckeElem e = generator(n, i).times_generator(j) * RationalFn(2);
  e -= generator(n, i) * q_minus_1();
  e -= generator(n, j) * q_minus_1();
  e += HeckeElem::unit(n) * (q * q + RationalFn(1));
  return e;
}

HeckeElem omega_mixer(int n) {
  if (n < 4) throw std::invalid_argument("needs at least 4 strands");
  const RationalFn q = q_var();
  HeckeElem e = generator(n, 1).times_generator(2);
  e += generator(n, 3).times_generator(2);
  e += generator(n, 1).times_generator(3);
  e -= generator(n, 1) * q_minus_1();
  e -= generator(n, 2) * q_minus_1();
  e -= generator(n, 3) * q_minus_1();
  e += HeckeElem::unit(n) * (q * q - q + RationalFn(1));
  return e;
}

HeckeElem two_strand_resolvent() {
  const RationalFn q = q_var(), z = z_var();
  RationalFn scale = (z * z - q_minus_1() * z - q).inv();
  HeckeElem e = HeckeElem::unit(2) * (z - q_minus_1());
  e += generator(2, 1);
  return e * scale;
}

std::string to_text(const HeckeElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : e.coeffs()) {
    if (!first) os << " + ";
    first = false;
    std::string ct = to_text(c);
    bool wrap = !c.is_polynomial() || c.num().term_count() > 1;
    if (wrap && ct.front() != '(') ct = "(" + ct + ")";
    os << ct << "*";
    std::vector<int> word = descriptor_word(d);
    if (word.empty()) {
      os << "1";
    } else {
      for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << 's' << word[i];
      }
    }
  }
  return os.str();
}

}  // namespace shomfly
