#include <unordered_map>
#include "eulercg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eulercg/errors.hpp"

namespace ecg {

Poly::Poly(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars, 0), c});
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(nvars, m, 1);
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms,
                      MonomialOrder order) {
  Poly p(nvars, order);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order_.compare(a.m, b.m) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree(terms_[0].m) == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && degree(terms_[0].m) == 0 && terms_[0].c == 1;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, degree(t.m));
  return d;
}

int Poly::degree_in(int v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m[v]);
  return d;
}

Poly Poly::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Poly p(nvars_, order);
  p.terms_ = terms_;
  p.normalize();
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : m) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};

// Merge a and s*b (both sorted) into a fresh sorted term list.
std::vector<Term> merge_add(const std::vector<Term>& a,
                            const std::vector<Term>& b, const Rational& s,
                            const Monomial* shift, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  auto bmono = [&](std::size_t k) -> const Monomial& {
    if (!shift) return b[k].m;
    bm = product(b[k].m, *shift);
    return bm;
  };
  while (i < a.size() && j < b.size()) {
    const Monomial& mb = bmono(j);
    int c = ord.compare(a[i].m, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({mb, b[j].c * s});
      ++j;
    } else {
      Rational v = a[i].c + b[j].c * s;
      if (v != 0) out.push_back({a[i].m, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    const Monomial& mb = bmono(j);
    out.push_back({mb, b[j].c * s});
  }
  return out;
}

void check_compatible(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw PreconditionError("polynomials over different variable counts");
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  check_compatible(*this, o);
  Poly r(nvars_, order_);
  const Poly& b = o.order_ == order_ ? o : o.with_order(order_);
  r.terms_ = merge_add(terms_, b.terms_, 1, nullptr, order_);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_compatible(*this, o);
  Poly r(nvars_, order_);
  const Poly& b = o.order_ == order_ ? o : o.with_order(order_);
  r.terms_ = merge_add(terms_, b.terms_, -1, nullptr, order_);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(*this, o);
  if (is_zero() || o.is_zero()) return Poly(nvars_, order_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
  if (terms_.size() == 1)
    return o.with_order(order_).mul_term(terms_[0].m, terms_[0].c);
  // Integer images of both factors, accumulated by monomial; one gcd per
  // result term rather than per product.
  auto integral = [](const std::vector<Term>& ts, mpz_class& den) {
    den = 1;
    for (const auto& t : ts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    std::vector<mpz_class> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) out[i] = ts[i].c.get_num() * (den / ts[i].c.get_den());
    return out;
  };
  mpz_class da, db;
  std::vector<mpz_class> a = integral(terms_, da), b = integral(o.terms_, db);
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(terms_.size() * o.terms_.size(), 1u << 20));
  Monomial m(static_cast<std::size_t>(nvars_));
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = 0; j < o.terms_.size(); ++j) {
      const auto &sm = terms_[i].m, &tm = o.terms_[j].m;
      for (int v = 0; v < nvars_; ++v) m[v] = sm[v] + tm[v];
      auto [it, fresh] = acc.try_emplace(m);
      mpz_addmul(it->second.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  mpz_class den = da * db;
  std::vector<Term> prods;
  prods.reserve(acc.size());
  for (auto& [mono, v] : acc)
    if (v != 0) {
      Rational c(v, den);
      c.canonicalize();
      prods.push_back({mono, std::move(c)});
    }
  return from_terms(nvars_, std::move(prods), order_);
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(nvars_, order_);
  Poly p = *this;
  for (auto& t : p.terms_) t.c *= c;
  return p;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(nvars_, order_);
  Poly p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({product(t.m, m), t.c * c});
  return p;
}

Poly Poly::sub_mul_term(const Rational& c, const Monomial& m,
                        const Poly& g) const {
  Poly r(nvars_, order_);
  const Poly& b = g.order_ == order_ ? g : g.with_order(order_);
  r.terms_ = merge_add(terms_, b.terms_, -c, &m, order_);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1).with_order(order_);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead().c;
  return scaled(inv);
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ != o.nvars_) return false;
  if (o.order_ == order_) {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
        return false;
    return true;
  }
  return *this == o.with_order(order_);
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw PreconditionError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.m[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Poly Poly::substitute(int v, const Poly& value) const {
  int d = degree_in(v);
  std::vector<Poly> powers;
  powers.push_back(constant(nvars_, 1));
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  Poly out(nvars_, order_);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Monomial m = t.m;
    int k = m[v];
    m[v] = 0;
    buckets[k].push_back({m, t.c});
  }
  for (int k = 0; k <= d; ++k) {
    if (buckets[k].empty()) continue;
    out += from_terms(nvars_, std::move(buckets[k]), order_) * powers[k];
  }
  return out;
}

Poly Poly::remap(int new_nvars, const std::vector<int>& map) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i)
      if (t.m[i] != 0) m[map[i]] += t.m[i];
    ts.push_back({m, t.c});
  }
  return from_terms(new_nvars, std::move(ts), order_);
}

Poly Poly::coefficient_in(int v, int k) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.m[v] != k) continue;
    Monomial m = t.m;
    m[v] = 0;
    ts.push_back({m, t.c});
  }
  return from_terms(nvars_, std::move(ts), order_);
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_mono = degree(t.m) == 0;
    bool printed = false;
    if (c != 1 || unit_mono) {
      os << c.get_str();
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (t.m[i] == 0) continue;
      if (printed) os << "*";
      os << names.at(i);
      if (t.m[i] > 1) os << "^" << t.m[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& names)
      : s_(s), names_(names), n_(static_cast<int>(names.size())) {}

  Poly parse_all() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

  std::vector<Poly> parse_list() {
    skip();
    bool paren = peek() == '(';
    // "(f)" is both a list and a parenthesized expression; treat as list.
    if (paren) ++pos_;
    std::vector<Poly> out;
    skip();
    if (paren && peek() == ')') {
      ++pos_;
    } else {
      while (true) {
        out.push_back(expr());
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (paren) {
          if (peek() != ')') fail("expected ')'");
          ++pos_;
        }
        break;
      }
    }
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error (" + what + ") at offset " +
                     std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
        acc = acc.scaled(1 / d.lead().c);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Poly::constant(n_, make_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      for (int i = 0; i < n_; ++i)
        if (names_[i] == id) return Poly::variable(n_, i);
      fail("unknown variable '" + id + "'");
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).parse_all();
}

std::vector<Poly> parse_poly_list(const std::string& text,
                                  const std::vector<std::string>& names) {
  return Parser(text, names).parse_list();
}

}  // namespace ecg
