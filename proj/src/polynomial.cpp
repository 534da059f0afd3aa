#include "graphpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "graphpoly/errors.hpp"

namespace graphpoly {

template <std::size_t N>
Polynomial<N> Polynomial<N>::constant(const Natural& c) {
  return monomial(Mono{}, c);
}

template <std::size_t N>
Polynomial<N> Polynomial<N>::monomial(const Mono& m, const Natural& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

template <std::size_t N>
Polynomial<N> Polynomial<N>::from_terms(const std::vector<Term>& terms) {
  Polynomial p;
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

template <std::size_t N>
void Polynomial<N>::add_term(const Mono& m, const Natural& c) {
  if (c < 0) throw std::domain_error("negative coefficient in N[x]");
  if (c == 0) return;
  terms_[m] += c;
}

template <std::size_t N>
bool Polynomial<N>::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

template <std::size_t N>
bool Polynomial<N>::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Mono{} &&
         terms_.begin()->second == 1;
}

template <std::size_t N>
Natural Polynomial<N>::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Natural(0) : it->second;
}

template <std::size_t N>
Natural Polynomial<N>::coefficient_sum() const {
  Natural s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

template <std::size_t N>
std::vector<typename Polynomial<N>::Term> Polynomial<N>::descending() const {
  return {terms_.rbegin(), terms_.rend()};
}

template <std::size_t N>
std::strong_ordering compare(const Polynomial<N>& a, const Polynomial<N>& b) {
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (ia->second != ib->second)
      return ia->second < ib->second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  }
  if (ia != a.terms().rend()) return std::strong_ordering::greater;
  if (ib != b.terms().rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

template <std::size_t N>
Monomial<N> mono_add(const Monomial<N>& a, const Monomial<N>& b) {
  Monomial<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + b[i];
  return out;
}

template <std::size_t N>
bool mono_divides(const Monomial<N>& d, const Monomial<N>& m) {
  for (std::size_t i = 0; i < N; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

template <std::size_t N>
Monomial<N> mono_sub(const Monomial<N>& a, const Monomial<N>& b) {
  Monomial<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = subtract(a[i], b[i]);
  return out;
}

template <std::size_t N>
void check_exponents(const Monomial<N>& m, Bound bound) {
  if (bound != Bound::u64) return;
  for (const auto& e : m) (void)from_bits_u64(e);
}

}  // namespace

template <std::size_t N>
Polynomial<N> add(const Polynomial<N>& p, const Polynomial<N>& q,
                  Bound bound) {
  Polynomial<N> out = p;
  for (const auto& [m, c] : q.terms()) out.add_term(m, c);
  for (const auto& [m, c] : out.terms()) check_bound(c, bound);
  return out;
}

template <std::size_t N>
Polynomial<N> mul(const Polynomial<N>& p, const Polynomial<N>& q,
                  Bound bound) {
  Polynomial<N> out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      Monomial<N> m = mono_add(mp, mq);
      check_exponents(m, bound);
      out.add_term(m, cp * cq);
    }
  }
  for (const auto& [m, c] : out.terms()) check_bound(c, bound);
  return out;
}

template <std::size_t N>
Polynomial<N> scale(const Polynomial<N>& p, const Natural& c) {
  Polynomial<N> out;
  for (const auto& [m, k] : p.terms()) out.add_term(m, k * c);
  return out;
}

namespace {

// t^e, staying cheap for t in {0, 1} no matter how large e is.
Natural power(const Natural& t, const BitExp& e, Bound bound) {
  if (e.is_zero()) return 1;
  if (t == 0 || t == 1) return t;
  std::uint64_t k = from_bits_u64(e);
  if (k > std::numeric_limits<unsigned>::max())
    throw NaturalOverflow("exponent too large to evaluate");
  Natural r = boost::multiprecision::pow(t, static_cast<unsigned>(k));
  check_bound(r, bound);
  return r;
}

}  // namespace

Natural eval(const Poly1& p, const Natural& t, Bound bound) {
  Natural s = 0;
  for (const auto& [m, c] : p.terms()) {
    s += c * power(t, m[0], bound);
    check_bound(s, bound);
  }
  return s;
}

Natural eval(const Poly2& p, const Natural& tx, const Natural& ty,
             Bound bound) {
  Natural s = 0;
  for (const auto& [m, c] : p.terms()) {
    s += c * power(tx, m[0], bound) * power(ty, m[1], bound);
    check_bound(s, bound);
  }
  return s;
}

template <std::size_t N>
PositionSet tau_poly(const Polynomial<N>& p) {
  PositionSet out;
  for (const auto& [m, c] : p.terms())
    for (const auto& e : m)
      out.insert(out.end(), e.positions().begin(), e.positions().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <std::size_t N>
std::optional<Polynomial<N>> divide_exact(const Polynomial<N>& p,
                                          const Polynomial<N>& q) {
  if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
  // Signed remainder; coefficients may go negative mid-division.
  std::map<Monomial<N>, Natural> rem(p.terms().begin(), p.terms().end());
  std::map<Monomial<N>, Natural> quot;
  const Monomial<N>& lead = q.leading_monomial();
  const Natural& lead_coeff = q.terms().rbegin()->second;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!mono_divides(lead, top->first)) return std::nullopt;
    if (top->second % lead_coeff != 0) return std::nullopt;
    Natural factor = top->second / lead_coeff;
    Monomial<N> shift = mono_sub(top->first, lead);
    quot[shift] += factor;
    for (const auto& [m, c] : q.terms()) {
      Monomial<N> target = mono_add(m, shift);
      Natural& slot = rem[target];
      slot -= c * factor;
      if (slot == 0) rem.erase(target);
    }
  }
  Polynomial<N> out;
  for (const auto& [m, c] : quot) {
    if (c < 0) return std::nullopt;
    out.add_term(m, c);
  }
  return out;
}

BitExp degree(const Poly1& p) { return p.leading_monomial()[0]; }

Poly2 lift(const Poly1& p) {
  Poly2 out;
  for (const auto& [m, c] : p.terms()) out.add_term({m[0], BitExp{}}, c);
  return out;
}

std::optional<Poly1> lower(const Poly2& p) {
  Poly1 out;
  for (const auto& [m, c] : p.terms()) {
    if (!m[1].is_zero()) return std::nullopt;
    out.add_term({m[0]}, c);
  }
  return out;
}

namespace {

constexpr std::array<char, 2> kVariables = {'x', 'y'};

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t arity)
      : text_(text), arity_(arity) {}

  Poly2 parse() {
    Poly2 out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    for (;;) {
      auto [m, c] = term();
      out.add_term(m, c);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+' between terms");
      ++pos_;
      skip_ws();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool is_var(char c) const {
    return c == 'x' || c == 'y';
  }

  Natural natural() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_) fail("expected a decimal natural");
    return parse_natural(text_.substr(start, pos_ - start));
  }

  std::pair<Monomial<2>, Natural> term() {
    if (peek() == '-') fail("negative coefficients are not allowed");
    Natural coeff = 1;
    Monomial<2> m{};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = natural();
      skip_ws();
      if (peek() != '*') return {m, coeff};
      ++pos_;
      skip_ws();
      if (!is_var(peek())) fail("expected 'x' or 'y' after '*'");
    } else if (!is_var(peek())) {
      fail("expected a coefficient or a variable");
    }
    for (;;) {
      char v = peek();
      std::size_t idx = v == 'x' ? 0 : 1;
      if (idx >= arity_) fail(std::string("variable '") + v +
                              "' not allowed in a univariate polynomial");
      ++pos_;
      skip_ws();
      Natural e = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (peek() == '-') fail("negative exponents are not allowed");
        e = natural();
        skip_ws();
      }
      m[idx] = m[idx] + tau(e);
      std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (is_var(peek())) continue;
        pos_ = save;
        fail("expected 'x' or 'y' after '*'");
      }
      break;
    }
    return {m, coeff};
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

template <std::size_t N>
std::string render_mono(const Monomial<N>& m) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (m[i].is_zero()) continue;
    if (!out.empty()) out += '*';
    out += kVariables[i];
    if (m[i] != BitExp{0}) out += '^' + m[i].to_string();
  }
  return out;
}

}  // namespace

Poly1 parse_poly1(std::string_view text) {
  return *lower(PolyParser(text, 1).parse());
}

Poly2 parse_poly2(std::string_view text) { return PolyParser(text, 2).parse(); }

template <std::size_t N>
std::string render(const Polynomial<N>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.descending()) {
    if (!out.empty()) out += " + ";
    std::string mono = render_mono(m);
    if (mono.empty())
      out += to_decimal(c);
    else if (c == 1)
      out += mono;
    else
      out += to_decimal(c) + "*" + mono;
  }
  return out;
}

#define GRAPHPOLY_INSTANTIATE(N)                                              \
  template class Polynomial<N>;                                               \
  template std::strong_ordering compare(const Polynomial<N>&,                 \
                                        const Polynomial<N>&);                \
  template Polynomial<N> add(const Polynomial<N>&, const Polynomial<N>&,      \
                             Bound);                                          \
  template Polynomial<N> mul(const Polynomial<N>&, const Polynomial<N>&,      \
                             Bound);                                          \
  template Polynomial<N> scale(const Polynomial<N>&, const Natural&);         \
  template PositionSet tau_poly(const Polynomial<N>&);                        \
  template std::optional<Polynomial<N>> divide_exact(const Polynomial<N>&,    \
                                                     const Polynomial<N>&);   \
  template std::string render(const Polynomial<N>&);

GRAPHPOLY_INSTANTIATE(1)
GRAPHPOLY_INSTANTIATE(2)

#undef GRAPHPOLY_INSTANTIATE

}  // namespace graphpoly
