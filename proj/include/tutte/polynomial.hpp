#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tutte/errors.hpp"

namespace tutte {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::string power_factor(const char* var, std::size_t e) {
  if (e == 0) return {};
  std::string s = var;
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

// Appends "c*f1*f2" to out with sign handling; first selects leading format.
inline void append_term(std::string& out, Integer c, const std::string& factors,
                        bool first) {
  const bool negative = c < 0;
  if (negative) c = -c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (factors.empty()) {
    out += c.str();
  } else if (c == 1) {
    out += factors;
  } else {
    out += c.str();
    out += "*";
    out += factors;
  }
}

inline Rational rational_pow(const Rational& base, std::size_t e) {
  Rational r = 1;
  Rational b = base;
  while (e != 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

inline void put_uvarint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7U;
  }
  out.push_back(static_cast<char>(v));
}

inline std::uint64_t get_uvarint(std::string_view in, std::size_t& pos) {
  std::uint64_t v = 0;
  for (unsigned shift = 0; shift < 64; shift += 7) {
    if (pos >= in.size()) throw InputError("varint: truncated input");
    const auto b = static_cast<unsigned char>(in[pos++]);
    v |= std::uint64_t{b & 0x7FU} << shift;
    if ((b & 0x80U) == 0) return v;
  }
  throw InputError("varint: overlong encoding");
}

}  // namespace detail

/// Sparse polynomial in x and y with exact integer coefficients.
///
/// Terms are kept sorted by (x-exponent, y-exponent) ascending with no zero
/// coefficients, so equality is structural.
class BiPoly {
 public:
  struct Term {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BiPoly() = default;

  static BiPoly constant(Integer c) { return monomial(0, 0, std::move(c)); }

  static BiPoly monomial(std::uint32_t i, std::uint32_t j, Integer c = 1) {
    BiPoly p;
    if (c != 0) p.terms_.push_back(Term{i, j, std::move(c)});
    return p;
  }

  /// Accepts terms in any order; merges duplicates and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return key(a) < key(b);
    });
    BiPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && key(p.terms_.back()) == key(t)) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }

  [[nodiscard]] Integer coeff(std::uint32_t i, std::uint32_t j) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), pack(i, j),
        [](const Term& t, std::uint64_t k) { return key(t) < k; });
    if (it != terms_.end() && it->x == i && it->y == j) return it->coeff;
    return 0;
  }

  [[nodiscard]] std::uint32_t x_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.x);
    return d;
  }
  [[nodiscard]] std::uint32_t y_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.y);
    return d;
  }

  BiPoly& operator+=(const BiPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      terms_ = other.terms_;
      return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
      const auto ka = key(*a);
      const auto kb = key(*b);
      if (ka < kb) {
        merged.push_back(std::move(*a++));
      } else if (kb < ka) {
        merged.push_back(*b++);
      } else {
        a->coeff += b->coeff;
        if (a->coeff != 0) merged.push_back(std::move(*a));
        ++a;
        ++b;
      }
    }
    std::move(a, terms_.end(), std::back_inserter(merged));
    std::copy(b, other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
  }

  /// Multiplies by x^i y^j in place.
  BiPoly& shift(std::uint32_t i, std::uint32_t j) noexcept {
    for (auto& t : terms_) {
      t.x += i;
      t.y += j;
    }
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    a += b;
    return a;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        prod.push_back(Term{s.x + t.x, s.y + t.y, s.coeff * t.coeff});
    return from_terms(std::move(prod));
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  [[nodiscard]] Rational eval(const Rational& x0, const Rational& y0) const {
    Rational sum = 0;
    for (const auto& t : terms_)
      sum += Rational(t.coeff) * detail::rational_pow(x0, t.x) *
             detail::rational_pow(y0, t.y);
    return sum;
  }

  /// Graded-lex rendering, highest total degree first and x before y, e.g.
  /// "x^2 + x + y".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
      const auto da = std::uint64_t{a->x} + a->y;
      const auto db = std::uint64_t{b->x} + b->y;
      if (da != db) return da > db;
      return a->x > b->x;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
      std::string f = detail::power_factor("x", t->x);
      const std::string fy = detail::power_factor("y", t->y);
      if (!f.empty() && !fy.empty()) f += "*";
      f += fy;
      detail::append_term(out, t->coeff, f, first);
      first = false;
    }
    return out;
  }

  /// Compact byte encoding: per term the x gap, the y exponent (or y gap
  /// within the same x), then sign-tagged length and big-endian magnitude.
  [[nodiscard]] std::string serialize() const {
    std::string out;
    detail::put_uvarint(out, terms_.size());
    std::uint32_t px = 0;
    std::uint32_t py = 0;
    std::vector<unsigned char> mag;
    for (const auto& t : terms_) {
      detail::put_uvarint(out, t.x - px);
      detail::put_uvarint(out, t.x == px ? t.y - py : t.y);
      px = t.x;
      py = t.y;
      mag.clear();
      boost::multiprecision::export_bits(Integer(abs(t.coeff)), std::back_inserter(mag), 8);
      detail::put_uvarint(out, (std::uint64_t{mag.size()} << 1U) | (t.coeff < 0 ? 1U : 0U));
      out.append(mag.begin(), mag.end());
    }
    return out;
  }

  /// Inverse of serialize(), multiplied by x^i y^j on the way.
  static BiPoly deserialize(std::string_view bytes, std::uint32_t i = 0, std::uint32_t j = 0) {
    std::size_t pos = 0;
    BiPoly p;
    const auto count = detail::get_uvarint(bytes, pos);
    p.terms_.reserve(count);
    std::uint32_t px = 0;
    std::uint32_t py = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto dx = static_cast<std::uint32_t>(detail::get_uvarint(bytes, pos));
      const auto y = static_cast<std::uint32_t>(detail::get_uvarint(bytes, pos));
      const std::uint32_t x = px + dx;
      py = dx == 0 ? py + y : y;
      px = x;
      const auto tag = detail::get_uvarint(bytes, pos);
      const std::size_t len = tag >> 1U;
      if (pos + len > bytes.size()) throw InputError("BiPoly::deserialize: truncated input");
      Integer c;
      const auto* first = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
      boost::multiprecision::import_bits(c, first, first + len, 8);
      pos += len;
      if ((tag & 1U) != 0) c = -c;
      p.terms_.push_back(Term{x + i, py + j, std::move(c)});
    }
    return p;
  }

  /// Rough heap footprint, used for memory accounting.
  [[nodiscard]] std::size_t footprint_bytes() const noexcept {
    std::size_t bytes = terms_.capacity() * sizeof(Term);
    for (const auto& t : terms_) {
      const auto limbs = t.coeff.backend().size();
      if (limbs > 2) bytes += limbs * sizeof(boost::multiprecision::limb_type);
    }
    return bytes;
  }

 private:
  static constexpr std::uint64_t pack(std::uint32_t i, std::uint32_t j) noexcept {
    return (std::uint64_t{i} << 32U) | j;
  }
  static constexpr std::uint64_t key(const Term& t) noexcept { return pack(t.x, t.y); }

  std::vector<Term> terms_;
};

inline BiPoly add(const BiPoly& a, const BiPoly& b) { return a + b; }
inline BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }
inline BiPoly mul_monomial(BiPoly a, std::uint32_t i, std::uint32_t j) {
  a.shift(i, j);
  return a;
}
inline Rational eval(const BiPoly& a, const Rational& x0, const Rational& y0) {
  return a.eval(x0, y0);
}

enum class Variable { T, P, Lambda };

inline const char* variable_name(Variable v) {
  switch (v) {
    case Variable::P: return "p";
    case Variable::Lambda: return "lambda";
    case Variable::T: break;
  }
  return "t";
}

/// Dense univariate polynomial, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs, Variable var = Variable::T)
      : coeffs_(std::move(coeffs)), var_(var) {
    trim();
  }

  static UniPoly monomial(std::size_t e, Integer c = 1, Variable var = Variable::T) {
    std::vector<Integer> cs(e + 1);
    cs[e] = std::move(c);
    return UniPoly(std::move(cs), var);
  }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; zero for the zero polynomial.
  [[nodiscard]] std::size_t degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }
  [[nodiscard]] Integer coeff(std::size_t e) const {
    return e < coeffs_.size() ? coeffs_[e] : Integer(0);
  }
  [[nodiscard]] std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Variable variable() const noexcept { return var_; }
  [[nodiscard]] UniPoly with_variable(Variable v) const {
    UniPoly r = *this;
    r.var_ = v;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Integer> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return UniPoly(std::move(cs), a.var_);
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Integer> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(cs), a.var_);
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  [[nodiscard]] Rational eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + Rational(*it);
    return r;
  }

  /// Highest power first, e.g. "2*p^3 - 3*p^2 + 1".
  [[nodiscard]] std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
      if (coeffs_[e] == 0) continue;
      detail::append_term(out, coeffs_[e], detail::power_factor(variable_name(var_), e),
                          first);
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
  Variable var_ = Variable::T;
};

/// Expands sum_i a_i (c0 + c1 t)^i for a polynomial with no y terms.
inline UniPoly substitute_x_linear(const BiPoly& a, const Integer& c0, const Integer& c1,
                                   Variable var = Variable::T) {
  std::vector<Integer> out(a.x_degree() + 1);
  for (const auto& t : a.terms()) {
    if (t.y != 0) throw InputError("substitute_x_linear: polynomial has y terms");
  }
  // power holds (c0 + c1 t)^e as it advances with e.
  std::vector<Integer> power{1};
  std::uint32_t e = 0;
  for (const auto& t : a.terms()) {
    while (e < t.x) {
      std::vector<Integer> next(power.size() + 1);
      for (std::size_t k = 0; k < power.size(); ++k) {
        next[k] += power[k] * c0;
        next[k + 1] += power[k] * c1;
      }
      power = std::move(next);
      ++e;
    }
    for (std::size_t k = 0; k < power.size(); ++k) out[k] += t.coeff * power[k];
  }
  return UniPoly(std::move(out), var);
}

}  // namespace tutte
