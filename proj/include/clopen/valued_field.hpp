#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clopen/base.hpp"

namespace clopen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Magnitudes: the exact value group {0} u {p^e}, never floating point.
// ---------------------------------------------------------------------------

struct AbsValue {
  enum class Kind { Zero, One, Power };

  Kind kind = Kind::Zero;
  int base = 0;
  long long exp = 0;

  static AbsValue zero() { return {}; }

  static AbsValue one() {
    AbsValue v;
    v.kind = Kind::One;
    return v;
  }

  static AbsValue power(int base, long long exp) {
    if (base < 2) throw Error("magnitude base must be at least 2");
    if (exp == 0) return one();
    AbsValue v;
    v.kind = Kind::Power;
    v.base = base;
    v.exp = exp;
    return v;
  }

  bool is_zero() const { return kind == Kind::Zero; }

  Rational as_rational() const {
    switch (kind) {
      case Kind::Zero: return Rational(0);
      case Kind::One: return Rational(1);
      case Kind::Power: {
        BigInt pw = boost::multiprecision::pow(
            BigInt(base), static_cast<unsigned>(exp < 0 ? -exp : exp));
        return exp > 0 ? Rational(pw) : Rational(BigInt(1), pw);
      }
    }
    throw Error("corrupt magnitude");
  }

  // Negative, zero, or positive as this is below, equal to, or above rhs.
  static int compare(const AbsValue& a, const AbsValue& b) {
    if (a.kind == Kind::Zero) return b.kind == Kind::Zero ? 0 : -1;
    if (b.kind == Kind::Zero) return 1;
    if (a.kind == Kind::One && b.kind == Kind::One) return 0;
    if (a.kind == Kind::One) return b.exp > 0 ? -1 : 1;
    if (b.kind == Kind::One) return a.exp > 0 ? 1 : -1;
    if (a.base == b.base) return a.exp < b.exp ? -1 : (a.exp > b.exp ? 1 : 0);
    Rational ra = a.as_rational(), rb = b.as_rational();
    return ra < rb ? -1 : (ra > rb ? 1 : 0);
  }

  friend bool operator==(const AbsValue& a, const AbsValue& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const AbsValue& a, const AbsValue& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const AbsValue& a, const AbsValue& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const AbsValue& a, const AbsValue& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const AbsValue& a, const AbsValue& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const AbsValue& a, const AbsValue& b) {
    return compare(a, b) >= 0;
  }

  friend AbsValue operator*(const AbsValue& a, const AbsValue& b) {
    if (a.kind == Kind::Zero || b.kind == Kind::Zero) return zero();
    if (a.kind == Kind::One) return b;
    if (b.kind == Kind::One) return a;
    if (a.base != b.base)
      throw Error("cannot multiply magnitudes over different bases " +
                  std::to_string(a.base) + " and " + std::to_string(b.base));
    return power(a.base, a.exp + b.exp);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Zero: return "0";
      case Kind::One: return "1";
      case Kind::Power:
        return std::to_string(base) + "^" + std::to_string(exp);
    }
    throw Error("corrupt magnitude");
  }
};

inline AbsValue max(const AbsValue& a, const AbsValue& b) {
  return AbsValue::compare(a, b) >= 0 ? a : b;
}

inline AbsValue min(const AbsValue& a, const AbsValue& b) {
  return AbsValue::compare(a, b) <= 0 ? a : b;
}

inline AbsValue parse_abs_value(const std::string& text) {
  if (text == "0") return AbsValue::zero();
  if (text == "1") return AbsValue::one();
  auto caret = text.find('^');
  if (caret == std::string::npos)
    throw Error("bad magnitude '" + text + "': expected \"0\", \"1\", or \"p^e\"");
  try {
    int base = std::stoi(text.substr(0, caret));
    long long exp = std::stoll(text.substr(caret + 1));
    return AbsValue::power(base, exp);
  } catch (const std::logic_error&) {
    throw Error("bad magnitude '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, coefficients ascending, used for finite fields.
// ---------------------------------------------------------------------------

namespace detail {

inline int mod_p(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

inline void poly_trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> poly_add(const std::vector<int>& a,
                                 const std::vector<int>& b, int p) {
  std::vector<int> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    long long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    out[i] = mod_p(v, p);
  }
  poly_trim(out);
  return out;
}

inline std::vector<int> poly_neg(const std::vector<int>& a, int p) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_p(-a[i], p);
  poly_trim(out);
  return out;
}

inline std::vector<int> poly_mul(const std::vector<int>& a,
                                 const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = mod_p(out[i + j] + static_cast<long long>(a[i]) * b[j], p);
  poly_trim(out);
  return out;
}

inline int inverse_mod_p(int a, int p) {
  int t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    int q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw Error("not invertible mod p");
  return mod_p(t, p);
}

// Remainder of a modulo b; b need not be monic.
inline std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b,
                                 int p) {
  if (b.empty()) throw Error("polynomial division by zero");
  poly_trim(a);
  int lead_inv = inverse_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    int factor = mod_p(static_cast<long long>(a.back()) * lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = mod_p(a[shift + i] - static_cast<long long>(factor) * b[i], p);
    poly_trim(a);
  }
  return a;
}

inline std::vector<int> poly_from_value(std::uint64_t value, int p) {
  std::vector<int> out;
  while (value != 0) {
    out.push_back(static_cast<int>(value % static_cast<std::uint64_t>(p)));
    value /= static_cast<std::uint64_t>(p);
  }
  return out;
}

inline bool poly_is_irreducible(const std::vector<int>& m, int p) {
  if (m.size() < 2) return false;
  std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<int> cand = poly_from_value(v, p);
      cand.resize(d + 1, 0);
      cand[d] = 1;
      if (poly_rem(m, cand, p).empty()) return false;
    }
  }
  return true;
}

// Lowest monic irreducible of the given degree, fixing the representation of
// F_{p^n} when the caller does not supply one.
inline std::vector<int> default_modulus(int p, std::size_t deg, std::uint64_t q) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<int> cand = poly_from_value(v, p);
    cand.resize(deg + 1, 0);
    cand[deg] = 1;
    if (deg == 1 || poly_is_irreducible(cand, p)) return cand;
  }
  throw Error("no irreducible modulus found for q=" + std::to_string(q));
}

inline std::vector<int> poly_inverse(const std::vector<int>& a,
                                     const std::vector<int>& modulus, int p) {
  if (a.empty()) throw Error("division by zero");
  std::vector<int> t, new_t{1};
  std::vector<int> r = modulus, new_r = a;
  while (!new_r.empty()) {
    // q = r / new_r via repeated leading-term elimination.
    std::vector<int> q;
    std::vector<int> rem = r;
    int lead_inv = inverse_mod_p(new_r.back(), p);
    while (rem.size() >= new_r.size() && !rem.empty()) {
      int factor = mod_p(static_cast<long long>(rem.back()) * lead_inv, p);
      std::size_t shift = rem.size() - new_r.size();
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = factor;
      for (std::size_t i = 0; i < new_r.size(); ++i)
        rem[shift + i] =
            mod_p(rem[shift + i] - static_cast<long long>(factor) * new_r[i], p);
      poly_trim(rem);
    }
    r = new_r;
    new_r = rem;
    std::vector<int> tmp = poly_add(t, poly_neg(poly_mul(q, new_t, p), p), p);
    t = new_t;
    new_t = tmp;
  }
  if (r.size() != 1) throw Error("element not invertible");
  int scale = inverse_mod_p(r[0], p);
  for (int& c : t) c = mod_p(static_cast<long long>(c) * scale, p);
  poly_trim(t);
  return t;
}

inline bool is_prime_int(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string poly_to_string(const std::vector<int>& a);
std::vector<int> poly_from_string(const std::string& text, int p);

}  // namespace detail

// ---------------------------------------------------------------------------
// The field catalogue.
// ---------------------------------------------------------------------------

enum class FieldKind { TrivialFq, TrivialQ, TrivialQi, PadicQ };

struct ValuedField {
  FieldKind kind = FieldKind::TrivialQ;
  int p = 0;                  // prime, for TrivialFq and PadicQ
  std::vector<int> modulus;   // monic irreducible over F_p, for TrivialFq

  static ValuedField trivial_fq(std::uint64_t q) {
    auto [p, deg] = factor_prime_power(q);
    ValuedField f;
    f.kind = FieldKind::TrivialFq;
    f.p = p;
    f.modulus = detail::default_modulus(p, deg, q);
    return f;
  }

  static ValuedField trivial_fq(int p, std::vector<int> modulus) {
    if (!detail::is_prime_int(p))
      throw Error("finite field characteristic " + std::to_string(p) +
                  " is not prime");
    detail::poly_trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
      throw Error("finite field modulus must be monic of degree at least 1");
    for (int c : modulus)
      if (c < 0 || c >= p) throw Error("modulus coefficient out of range");
    if (modulus.size() > 2 && !detail::poly_is_irreducible(modulus, p))
      throw Error("modulus " + detail::poly_to_string(modulus) +
                  " is reducible over F_" + std::to_string(p));
    ValuedField f;
    f.kind = FieldKind::TrivialFq;
    f.p = p;
    f.modulus = std::move(modulus);
    return f;
  }

  static ValuedField trivial_q() {
    ValuedField f;
    f.kind = FieldKind::TrivialQ;
    return f;
  }

  static ValuedField trivial_qi() {
    ValuedField f;
    f.kind = FieldKind::TrivialQi;
    return f;
  }

  static ValuedField padic(int p) {
    if (!detail::is_prime_int(p))
      throw Error("p-adic base " + std::to_string(p) + " is not prime");
    ValuedField f;
    f.kind = FieldKind::PadicQ;
    f.p = p;
    return f;
  }

  static std::pair<int, std::size_t> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw Error("field order must be at least 2");
    for (int p = 2; static_cast<std::uint64_t>(p) * p <= q || q % p == 0; ++p) {
      if (q % static_cast<std::uint64_t>(p) != 0) continue;
      std::size_t deg = 0;
      std::uint64_t rest = q;
      while (rest % static_cast<std::uint64_t>(p) == 0) {
        rest /= static_cast<std::uint64_t>(p);
        ++deg;
      }
      if (rest != 1)
        throw Error("field order " + std::to_string(q) +
                    " is not a prime power");
      return {p, deg};
    }
    return {static_cast<int>(q), 1};
  }

  bool trivially_valued() const { return kind != FieldKind::PadicQ; }

  std::size_t extension_degree() const {
    return kind == FieldKind::TrivialFq ? modulus.size() - 1 : 1;
  }

  std::uint64_t order() const {
    if (kind != FieldKind::TrivialFq) throw Error("field is infinite");
    std::uint64_t q = 1;
    for (std::size_t i = 0; i + 1 < modulus.size(); ++i)
      q *= static_cast<std::uint64_t>(p);
    return q;
  }

  // Prime subfield carrying the restricted absolute value.
  ValuedField prime_subfield() const {
    switch (kind) {
      case FieldKind::TrivialFq: return trivial_fq(static_cast<std::uint64_t>(p));
      case FieldKind::TrivialQ: return trivial_q();
      case FieldKind::TrivialQi: return trivial_q();
      case FieldKind::PadicQ: return padic(p);
    }
    throw Error("corrupt field");
  }

  std::string describe() const {
    switch (kind) {
      case FieldKind::TrivialFq:
        if (extension_degree() == 1)
          return "F" + std::to_string(p) + " with the trivial absolute value";
        return "F" + std::to_string(order()) + " = F" + std::to_string(p) +
               "[x]/(" + detail::poly_to_string(modulus) +
               ") with the trivial absolute value";
      case FieldKind::TrivialQ: return "Q with the trivial absolute value";
      case FieldKind::TrivialQi: return "Q(i) with the trivial absolute value";
      case FieldKind::PadicQ:
        return "Q with the " + std::to_string(p) + "-adic absolute value";
    }
    throw Error("corrupt field");
  }

  friend bool operator==(const ValuedField&, const ValuedField&) = default;
};

// ---------------------------------------------------------------------------
// Scalars.
// ---------------------------------------------------------------------------

struct Gaussian {
  Rational re, im;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

struct Scalar {
  ValuedField field;
  std::variant<std::vector<int>, Rational, Gaussian> rep;

  static Scalar zero(const ValuedField& f) { return from_int(f, 0); }
  static Scalar one(const ValuedField& f) { return from_int(f, 1); }

  static Scalar from_int(const ValuedField& f, long long v) {
    switch (f.kind) {
      case FieldKind::TrivialFq: {
        std::vector<int> c{detail::mod_p(v, f.p)};
        detail::poly_trim(c);
        return {f, std::move(c)};
      }
      case FieldKind::TrivialQ:
      case FieldKind::PadicQ: return {f, Rational(v)};
      case FieldKind::TrivialQi: return {f, Gaussian{Rational(v), Rational(0)}};
    }
    throw Error("corrupt field");
  }

  static Scalar from_rational(const ValuedField& f, Rational v) {
    if (f.kind == FieldKind::TrivialQ || f.kind == FieldKind::PadicQ)
      return {f, std::move(v)};
    if (f.kind == FieldKind::TrivialQi)
      return {f, Gaussian{std::move(v), Rational(0)}};
    throw Error("field has no rational scalars");
  }

  static Scalar from_gaussian(const ValuedField& f, Rational re, Rational im) {
    if (f.kind != FieldKind::TrivialQi)
      throw Error("field has no Gaussian scalars");
    return {f, Gaussian{std::move(re), std::move(im)}};
  }

  static Scalar from_poly(const ValuedField& f, std::vector<int> coeffs) {
    if (f.kind != FieldKind::TrivialFq)
      throw Error("field has no polynomial scalars");
    for (int& c : coeffs) c = detail::mod_p(c, f.p);
    coeffs = detail::poly_rem(std::move(coeffs), f.modulus, f.p);
    return {f, std::move(coeffs)};
  }

  const std::vector<int>& poly() const { return std::get<std::vector<int>>(rep); }
  const Rational& rational() const { return std::get<Rational>(rep); }
  const Gaussian& gaussian() const { return std::get<Gaussian>(rep); }

  bool is_zero() const {
    switch (field.kind) {
      case FieldKind::TrivialFq: return poly().empty();
      case FieldKind::TrivialQ:
      case FieldKind::PadicQ: return rational() == 0;
      case FieldKind::TrivialQi:
        return gaussian().re == 0 && gaussian().im == 0;
    }
    throw Error("corrupt field");
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field == b.field && a.rep == b.rep;
  }
};

namespace detail {

inline void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field == b.field))
    throw Error("scalars from different fields: " + a.field.describe() +
                " vs " + b.field.describe());
}

}  // namespace detail

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  detail::require_same_field(a, b);
  switch (a.field.kind) {
    case FieldKind::TrivialFq:
      return {a.field, detail::poly_add(a.poly(), b.poly(), a.field.p)};
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ: return {a.field, a.rational() + b.rational()};
    case FieldKind::TrivialQi:
      return {a.field, Gaussian{a.gaussian().re + b.gaussian().re,
                                a.gaussian().im + b.gaussian().im}};
  }
  throw Error("corrupt field");
}

inline Scalar operator-(const Scalar& a) {
  switch (a.field.kind) {
    case FieldKind::TrivialFq:
      return {a.field, detail::poly_neg(a.poly(), a.field.p)};
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ: return {a.field, Rational(-a.rational())};
    case FieldKind::TrivialQi:
      return {a.field, Gaussian{-a.gaussian().re, -a.gaussian().im}};
  }
  throw Error("corrupt field");
}

inline Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  detail::require_same_field(a, b);
  switch (a.field.kind) {
    case FieldKind::TrivialFq:
      return {a.field, detail::poly_rem(detail::poly_mul(a.poly(), b.poly(),
                                                         a.field.p),
                                        a.field.modulus, a.field.p)};
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ: return {a.field, a.rational() * b.rational()};
    case FieldKind::TrivialQi: {
      const Gaussian& x = a.gaussian();
      const Gaussian& y = b.gaussian();
      return {a.field,
              Gaussian{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}};
    }
  }
  throw Error("corrupt field");
}

inline Scalar inverse(const Scalar& a) {
  if (a.is_zero()) throw Error("division by zero");
  switch (a.field.kind) {
    case FieldKind::TrivialFq:
      return {a.field,
              detail::poly_inverse(a.poly(), a.field.modulus, a.field.p)};
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ: return {a.field, Rational(1) / a.rational()};
    case FieldKind::TrivialQi: {
      const Gaussian& x = a.gaussian();
      Rational n = x.re * x.re + x.im * x.im;
      return {a.field, Gaussian{x.re / n, -x.im / n}};
    }
  }
  throw Error("corrupt field");
}

// Exponent of p in a nonzero rational.
inline long long padic_valuation(int p, const Rational& x) {
  if (x == 0) throw Error("valuation of zero");
  long long v = 0;
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

inline AbsValue abs(const Scalar& a) {
  if (a.is_zero()) return AbsValue::zero();
  if (a.field.trivially_valued()) return AbsValue::one();
  return AbsValue::power(a.field.p, -padic_valuation(a.field.p, a.rational()));
}

inline bool is_integral(const Scalar& a) { return abs(a) <= AbsValue::one(); }

// ---------------------------------------------------------------------------
// Scalar text form: "3/4", "0", "x+1 mod x^2+x+1", "1/2+3i".
// ---------------------------------------------------------------------------

namespace detail {

inline std::string poly_to_string(const std::vector<int>& a) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t d = a.size(); d-- > 0;) {
    if (a[d] == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(a[d]);
    } else {
      if (a[d] != 1) out += std::to_string(a[d]);
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline std::vector<int> poly_from_string(const std::string& text, int p) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error("empty polynomial");
  std::vector<int> out;
  std::size_t pos = 0;
  int sign = 1;
  while (pos < s.size()) {
    if (s[pos] == '+') {
      sign = 1;
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (pos > 0) {
      throw Error("bad polynomial '" + text + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
    std::string term = s.substr(start, pos - start);
    if (term.empty()) throw Error("bad polynomial '" + text + "'");
    long long coeff = 1;
    std::size_t deg = 0;
    auto xpos = term.find('x');
    try {
      if (xpos == std::string::npos) {
        coeff = std::stoll(term);
      } else {
        if (xpos > 0) coeff = std::stoll(term.substr(0, xpos));
        if (xpos + 1 < term.size()) {
          if (term[xpos + 1] != '^')
            throw Error("bad polynomial term '" + term + "'");
          deg = static_cast<std::size_t>(std::stoull(term.substr(xpos + 2)));
        } else {
          deg = 1;
        }
      }
    } catch (const std::logic_error&) {
      throw Error("bad polynomial term '" + term + "'");
    }
    if (deg > 64) throw Error("polynomial degree out of range");
    if (out.size() < deg + 1) out.resize(deg + 1, 0);
    out[deg] = mod_p(out[deg] + sign * coeff, p);
  }
  poly_trim(out);
  return out;
}

inline bool valid_int_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline Rational rational_from_string(const std::string& text) {
  std::string s = strip_spaces(text);
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int_text(num) || !valid_int_text(den))
    throw Error("bad rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  return Rational(n, d);
}

inline std::string rational_to_string(const Rational& x) {
  std::string out = boost::multiprecision::numerator(x).str();
  if (boost::multiprecision::denominator(x) != 1)
    out += "/" + boost::multiprecision::denominator(x).str();
  return out;
}

inline Gaussian gaussian_from_string(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error("empty scalar");
  if (s.back() != 'i') return Gaussian{rational_from_string(s), Rational(0)};
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = rational_from_string(im_part);
  Rational re = re_part.empty() ? Rational(0) : rational_from_string(re_part);
  return Gaussian{re, im};
}

inline std::string gaussian_to_string(const Gaussian& g) {
  if (g.im == 0) return rational_to_string(g.re);
  std::string im_text;
  if (g.im == 1)
    im_text = "i";
  else if (g.im == -1)
    im_text = "-i";
  else
    im_text = rational_to_string(g.im) + "i";
  if (g.re == 0) return im_text;
  std::string out = rational_to_string(g.re);
  if (im_text[0] != '-') out += "+";
  return out + im_text;
}

}  // namespace detail

inline Scalar parse_scalar(const ValuedField& f, const std::string& text) {
  switch (f.kind) {
    case FieldKind::TrivialFq: {
      std::string s = text;
      auto mod_pos = s.find(" mod ");
      if (mod_pos != std::string::npos) {
        std::vector<int> claimed =
            detail::poly_from_string(s.substr(mod_pos + 5), f.p);
        if (claimed != f.modulus)
          throw Error("scalar '" + text + "' names modulus " +
                      detail::poly_to_string(claimed) + " but the field uses " +
                      detail::poly_to_string(f.modulus));
        s = s.substr(0, mod_pos);
      }
      return Scalar::from_poly(f, detail::poly_from_string(s, f.p));
    }
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ:
      return Scalar::from_rational(f, detail::rational_from_string(text));
    case FieldKind::TrivialQi: {
      Gaussian g = detail::gaussian_from_string(text);
      return Scalar::from_gaussian(f, g.re, g.im);
    }
  }
  throw Error("corrupt field");
}

inline std::string scalar_to_string(const Scalar& a) {
  switch (a.field.kind) {
    case FieldKind::TrivialFq:
      if (a.is_zero()) return "0";
      if (a.field.extension_degree() == 1)
        return std::to_string(a.poly()[0]);
      return detail::poly_to_string(a.poly()) + " mod " +
             detail::poly_to_string(a.field.modulus);
    case FieldKind::TrivialQ:
    case FieldKind::PadicQ: return detail::rational_to_string(a.rational());
    case FieldKind::TrivialQi: return detail::gaussian_to_string(a.gaussian());
  }
  throw Error("corrupt field");
}

}  // namespace clopen
