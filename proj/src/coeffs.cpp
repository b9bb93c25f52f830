#include "shomfly/coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace shomfly {

namespace {
constexpr const char* kVarNames[kVarCount] = {"q", "z", "s", "v", "t", "x", "X", "Y"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_by_name(const std::string& name) {
  for (int i = 0; i < kVarCount; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

LaurentPoly LaurentPoly::constant(long c) { return constant(mpz_class(c)); }

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[zero_expo()] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int exp) {
  ExpoVec e = zero_expo();
  e[static_cast<int>(v)] = exp;
  return monomial(e, 1);
}

LaurentPoly LaurentPoly::monomial(const ExpoVec& e, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == zero_expo() &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_expo());
}

mpz_class LaurentPoly::coeff(const ExpoVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool LaurentPoly::supported_on(std::initializer_list<Var> vars, bool allow_negative) const {
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kVarCount; ++i) {
      bool inside = false;
      for (Var v : vars)
        if (static_cast<int>(v) == i) inside = true;
      if (!inside && e[i] != 0) return false;
      if (inside && !allow_negative && e[i] < 0) return false;
    }
  }
  return true;
}

void LaurentPoly::add_term(const ExpoVec& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpoVec e;
      for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

const std::pair<const ExpoVec, mpz_class>& LaurentPoly::leading_term() const {
  return *terms_.rbegin();
}

ExpoVec LaurentPoly::min_exponents() const {
  ExpoVec m = zero_expo();
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < kVarCount; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

mpz_class LaurentPoly::integer_content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void LaurentPoly::shift(const ExpoVec& e) {
  if (e == zero_expo()) return;
  TermMap shifted;
  for (const auto& [f, c] : terms_) {
    ExpoVec g;
    for (int i = 0; i < kVarCount; ++i) g[i] = f[i] + e[i];
    shifted.emplace(g, c);
  }
  terms_ = std::move(shifted);
}

void LaurentPoly::scale(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [e, k] : terms_) k *= c;
}

std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly::zero();

  // Reduce to true-polynomial division: strip monomial and integer content
  // from both sides, divide, then put the content ratio back.
  ExpoVec ma = a.min_exponents(), mb = b.min_exponents();
  mpz_class ga = a.integer_content(), gb = b.integer_content();
  if (ga % gb != 0) return std::nullopt;

  LaurentPoly A = a, B = b;
  ExpoVec nma, nmb;
  for (int i = 0; i < kVarCount; ++i) {
    nma[i] = -ma[i];
    nmb[i] = -mb[i];
  }
  A.shift(nma);
  B.shift(nmb);

  const auto& bl = B.leading_term();
  LaurentPoly q;
  LaurentPoly r = A;
  while (!r.is_zero()) {
    const auto& rl = r.leading_term();
    ExpoVec e;
    for (int i = 0; i < kVarCount; ++i) {
      e[i] = rl.first[i] - bl.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (rl.second % bl.second != 0) return std::nullopt;
    LaurentPoly term = LaurentPoly::monomial(e, rl.second / bl.second);
    q += term;
    r -= term * B;
  }
  ExpoVec off;
  for (int i = 0; i < kVarCount; ++i) off[i] = ma[i] - mb[i];
  q.shift(off);
  return q;
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

RationalFn RationalFn::variable(Var v, int exp) {
  if (exp >= 0) return RationalFn(LaurentPoly::variable(v, exp));
  return RationalFn(LaurentPoly::one(), LaurentPoly::variable(v, -exp));
}

RationalFn RationalFn::fraction(long num, long den) {
  return RationalFn(LaurentPoly::constant(num), LaurentPoly::constant(den));
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  ExpoVec mn = num_.min_exponents(), md = den_.min_exponents();
  mpz_class gn = num_.integer_content(), gd = den_.integer_content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), gn.get_mpz_t(), gd.get_mpz_t());
  gn /= g;
  gd /= g;

  ExpoVec nmn, nmd, diff;
  for (int i = 0; i < kVarCount; ++i) {
    nmn[i] = -mn[i];
    nmd[i] = -md[i];
    diff[i] = mn[i] - md[i];
  }
  // num carries the monomial ratio; den becomes primitive with minima zero.
  LaurentPoly n = num_;
  n.shift(nmn);
  {
    mpz_class c0 = num_.integer_content();
    LaurentPoly tmp;
    for (const auto& [e, c] : n.terms()) tmp.add_term(e, c / c0);
    n = tmp;
  }
  LaurentPoly d = den_;
  d.shift(nmd);
  {
    mpz_class c0 = den_.integer_content();
    LaurentPoly tmp;
    for (const auto& [e, c] : d.terms()) tmp.add_term(e, c / c0);
    d = tmp;
  }
  n.shift(diff);
  n.scale(gn);
  d.scale(gd);

  if (d.leading_term().second < 0) {
    n = -n;
    d = -d;
  }
  if (!d.is_one()) {
    if (auto q = try_divide_exact(n, d)) {
      n = *q;
      d = LaurentPoly::one();
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFn RationalFn::inv() const {
  if (num_.is_zero()) throw DivisionByZero();
  return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(long e) const {
  if (e == 0) return RationalFn(1);
  RationalFn base = e > 0 ? *this : inv();
  long k = e > 0 ? e : -e;
  RationalFn out(1);
  for (long i = 0; i < k; ++i) out *= base;
  return out;
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.num_.is_zero()) throw DivisionByZero();
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.num_ = -out.num_;
  return out;
}

bool RationalFn::operator==(const RationalFn& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

namespace {

RationalFn substitute_poly(const LaurentPoly& p, const std::map<Var, RationalFn>& bindings) {
  RationalFn out(0);
  for (const auto& [e, c] : p.terms()) {
    RationalFn term(LaurentPoly::constant(c));
    ExpoVec kept = zero_expo();
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(static_cast<Var>(i));
      if (it == bindings.end()) {
        kept[i] = e[i];
      } else {
        term *= it->second.pow(e[i]);
      }
    }
    if (kept != zero_expo()) term *= RationalFn(LaurentPoly::monomial(kept, 1));
    out += term;
  }
  return out;
}

}  // namespace

RationalFn RationalFn::substitute(const std::map<Var, RationalFn>& bindings) const {
  RationalFn n = substitute_poly(num_, bindings);
  RationalFn d = substitute_poly(den_, bindings);
  if (d.is_zero()) throw DivisionByZero();
  return n / d;
}

RationalFn RationalFn::eval_at(Var v, const RationalFn& value) const {
  // Negative powers of v may sit in the numerator (normalization pulls
  // monomial content there); clear them first so poles are caught.
  LaurentPoly num = num_, den = den_;
  int vmin = std::min(num.min_exponents()[static_cast<int>(v)],
                      den.min_exponents()[static_cast<int>(v)]);
  if (vmin < 0) {
    ExpoVec up = zero_expo();
    up[static_cast<int>(v)] = -vmin;
    num.shift(up);
    den = den * LaurentPoly::variable(v, -vmin);
  }
  std::map<Var, RationalFn> b{{v, value}};
  RationalFn d = substitute_poly(den, b);
  if (d.is_zero())
    throw PoleAtPoint(std::string("denominator vanishes at ") + var_name(v) + " = " + to_text(value));
  RationalFn n = substitute_poly(num, b);
  return n / d;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponent-lex order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.get_str();
    for (int i = 0; i < kVarCount; ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << kVarNames[i];
      if (it->first[i] != 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

std::string to_text(const RationalFn& r) {
  if (r.is_polynomial()) return to_text(r.num());
  return "(" + to_text(r.num()) + ") / (" + to_text(r.den()) + ")";
}

namespace {

// Parses the exact grammar emitted by to_text.
class TextParser {
 public:
  explicit TextParser(const std::string& s) : s_(s) {}

  RationalFn parse() {
    skip_ws();
    if (peek() == '(') {
      LaurentPoly num = parse_paren_poly();
      skip_ws();
      expect('/');
      skip_ws();
      LaurentPoly den = parse_paren_poly();
      skip_ws();
      if (pos_ != s_.size()) fail("trailing input");
      return RationalFn(num, den);
    }
    LaurentPoly p = parse_poly();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return RationalFn(p);
  }

 private:
  LaurentPoly parse_paren_poly() {
    expect('(');
    LaurentPoly p = parse_poly();
    expect(')');
    return p;
  }

  LaurentPoly parse_poly() {
    LaurentPoly p;
    while (true) {
      p += parse_term();
      size_t save = pos_;
      skip_ws();
      if (peek() == '+' ) {
        ++pos_;
        skip_ws();
      } else {
        pos_ = save;
        break;
      }
    }
    return p;
  }

  LaurentPoly parse_term() {
    mpz_class c(parse_int());
    ExpoVec e = zero_expo();
    while (peek() == '*') {
      ++pos_;
      std::string name;
      while (std::isalpha(static_cast<unsigned char>(peek()))) name += s_[pos_++];
      auto v = var_by_name(name);
      if (!v) fail("unknown variable '" + name + "'");
      int exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = static_cast<int>(std::stol(parse_int()));
      }
      e[static_cast<int>(*v)] += exp;
    }
    return LaurentPoly::monomial(e, c);
  }

  std::string parse_int() {
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (s_[start] == '-' && pos_ == start + 1)) fail("expected integer");
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("bad expression text at offset " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RationalFn parse_rational_text(const std::string& text) { return TextParser(text).parse(); }

}  // namespace shomfly
