#include "cobord/algebra/graded_element.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "cobord/error.hpp"

namespace cobord::algebra {

namespace {

Exponent unit_exponent(const GradedRingSpec& r) { return Exponent(r.size(), 0); }

class TextParser {
 public:
  TextParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  GradedElement parse() {
    GradedElement result(ring_);
    skip_ws();
    if (at_end()) throw ParseError("empty element text");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term().scaled(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  GradedElement parse_term() {
    Rational coeff = 1;
    Exponent e = unit_exponent(*ring_);
    for (;;) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name = parse_name();
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown generator '" + name + "'");
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = parse_int();
        }
        e[*idx] += power;
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return GradedElement::monomial(ring_, std::move(e), coeff);
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int parse_int() {
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    int v = std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
    return neg ? -v : v;
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedElement::GradedElement(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("null ring");
}

GradedElement::GradedElement(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw DomainError("null ring");
  validate();
}

void GradedElement::validate() {
  const auto& r = *ring_;
  for (auto it = terms_.begin(); it != terms_.end();) {
    const Exponent& e = it->first;
    if (e.size() != r.size()) throw DomainError("exponent vector length does not match ring");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 && !r.generator(i).invertible) {
        throw DomainError("negative exponent on non-invertible generator '" + r.generator(i).name + "'");
      }
      if (std::abs(e[i]) > r.exponent_bound()) {
        throw ResourceError("exponent of '" + r.generator(i).name + "' exceeds bound " +
                            std::to_string(r.exponent_bound()));
      }
    }
    it->second.canonicalize();
    if (r.base() == Base::integers && it->second.get_den() != 1) {
      throw DivisionError("non-integral coefficient " + algebra::to_string(it->second) +
                          " in a ring over Z");
    }
    if (it->second == 0 || !r.window().contains(r.degree_of(e))) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

GradedElement GradedElement::constant(RingPtr ring, const Rational& value) {
  Terms t;
  if (value != 0) t.emplace(unit_exponent(*ring), value);
  return GradedElement(std::move(ring), std::move(t));
}

GradedElement GradedElement::generator(RingPtr ring, std::string_view name, int power) {
  auto idx = ring->index_of(name);
  if (!idx) throw DomainError("unknown generator '" + std::string(name) + "'");
  Exponent e = unit_exponent(*ring);
  e[*idx] = power;
  return monomial(std::move(ring), std::move(e));
}

GradedElement GradedElement::monomial(RingPtr ring, Exponent e, const Rational& c) {
  Terms t;
  t.emplace(std::move(e), c);
  return GradedElement(std::move(ring), std::move(t));
}

GradedElement GradedElement::parse(RingPtr ring, std::string_view text) {
  return TextParser(std::move(ring), text).parse();
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->generator(i).name;
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

bool GradedElement::is_one() const {
  auto c = as_constant();
  return c && *c == 1;
}

std::optional<Rational> GradedElement::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (int x : e) {
    if (x != 0) return std::nullopt;
  }
  return c;
}

Rational GradedElement::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = ring_->degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (ring_->degree_of(e) != d) return std::nullopt;
  }
  return d;
}

bool GradedElement::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

GradedElement GradedElement::homogeneous_part(int degree) const {
  Terms t;
  for (const auto& [e, c] : terms_) {
    if (ring_->degree_of(e) == degree) t.emplace(e, c);
  }
  return GradedElement(ring_, std::move(t));
}

void GradedElement::check_same_ring(const GradedElement& b) const {
  if (!same_ring(ring_, b.ring_)) throw MismatchError("elements belong to different rings");
}

GradedElement GradedElement::operator-() const {
  GradedElement r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

GradedElement& GradedElement::operator+=(const GradedElement& b) {
  check_same_ring(b);
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& b) { return *this += -b; }

GradedElement& GradedElement::operator*=(const GradedElement& b) {
  *this = *this * b;
  return *this;
}

GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  if (!same_ring(a.ring(), b.ring())) throw MismatchError("elements belong to different rings");
  const auto& r = *a.ring();
  GradedElement::Terms out;
  Exponent e(r.size());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = r.degree_of(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (!r.window().contains(da + r.degree_of(eb))) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational p = ca * cb;
      auto [it, inserted] = out.emplace(e, p);
      if (!inserted) it->second += p;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  }
  return GradedElement(a.ring(), std::move(out));
}

GradedElement GradedElement::pow(unsigned n) const {
  GradedElement result = one(ring_);
  GradedElement base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

GradedElement GradedElement::scaled(const Rational& q) const {
  if (q == 0) return zero(ring_);
  Terms t = terms_;
  for (auto& [e, c] : t) c *= q;
  return GradedElement(ring_, std::move(t));
}

bool GradedElement::operator==(const GradedElement& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

}  // namespace cobord::algebra
