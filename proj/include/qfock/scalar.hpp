#pragma once

// Exact coefficient arithmetic: reduced fractions of sparse Laurent
// polynomials in three formal variables q^(1/L), v^(1/L), u^(1/L) with
// arbitrary-precision integer coefficients.  L is a session constant chosen
// by the caller (exponents are stored as plain integers counting powers of
// the root variable); arithmetic itself never needs L, only printing and
// numeric evaluation do.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace qfock {

using Int = mpz_class;
using Rat = mpq_class;

struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent triple of one monomial; ordered lexicographically (eq, ev, eu).
struct Exp {
  long eq = 0, ev = 0, eu = 0;
  friend auto operator<=>(const Exp&, const Exp&) = default;
  Exp operator+(const Exp& o) const { return {eq + o.eq, ev + o.ev, eu + o.eu}; }
  Exp operator-(const Exp& o) const { return {eq - o.eq, ev - o.ev, eu - o.eu}; }
  Exp operator-() const { return {-eq, -ev, -eu}; }
};

// Sparse Laurent polynomial; no zero coefficients are stored.
class Poly {
 public:
  using Terms = std::map<Exp, Int>;

  Poly() = default;
  Poly(long c) { if (c != 0) terms_[Exp{}] = c; }
  explicit Poly(const Int& c) { if (c != 0) terms_[Exp{}] = c; }
  static Poly monomial(Int c, Exp e);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  void add_term(const Exp& e, const Int& c);  // accumulate, dropping zeros

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Largest exponent triple in lex order (the "leading term").
  const std::pair<const Exp, Int>& lead() const;
  // Componentwise minimum over all exponent triples present.
  Exp min_exps() const;
  // Multiply by the monomial x^e.
  Poly shifted(const Exp& e) const;
  // Substitute x -> x^f for every root variable (all exponents scaled by f).
  Poly stretched(long f) const;
  // gcd of all integer coefficients, always >= 0 (0 for the zero poly).
  Int content() const;

  // Evaluate at rational values of the three root variables.
  Rat eval(const Rat& qr, const Rat& vr, const Rat& ur) const;

  std::string str(long L = 1) const;

 private:
  Terms terms_;
};

// gcd of Laurent polynomials, defined up to monomial units: both inputs are
// shifted to have min exponent 0 per variable, then a heuristic gcd
// (evaluation at a big integer, xi-adic reconstruction, trial-division
// verification) runs one variable at a time, with a primitive-PRS fallback.
// Result has min exponents 0 and positive leading coefficient.
Poly poly_gcd(const Poly& a, const Poly& b);
// Exact division; throws math_error if the division is not exact.
Poly poly_divexact(const Poly& a, const Poly& b);

// Reduced fraction num/den in canonical form: gcd(num, den) = 1 (after
// content and monomial normalization), den's min exponents are 0, den's
// leading coefficient is positive.
class Scalar {
 public:
  Scalar() = default;  // zero
  Scalar(long c) : num_(c) {}
  explicit Scalar(const Int& c) : num_(Int(c)) {}
  Scalar(Poly n, Poly d = Poly(1));
  static Scalar monomial(Int c, long eq, long ev, long eu);
  static Scalar from_rational(const Rat& r);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  Scalar inverse() const;
  Scalar pow(long k) const;
  // v^(1/L) -> v^(-1/L) on both numerator and denominator (q, u untouched).
  Scalar bar_v() const;
  // Substitute x -> x^f for every root variable; the ring homomorphism that
  // re-expresses a value in a finer exponent unit (1/L -> 1/(fL)).
  Scalar stretch(long f) const;

  // Exact rational value at the given values of q^(1/L), v^(1/L), u^(1/L).
  // Throws math_error on a pole.
  Rat specialize(const Rat& qr, const Rat& vr, const Rat& ur) const;

  std::string str(long L = 1) const;

 private:
  void normalize();
  Poly num_;        // zero scalar: num_ = 0, den_ = 1
  Poly den_ = Poly(1);
};

// Quantum integers with base x (a monomial scalar):
//   balanced  [k]_x   = (x^k - x^-k) / (x - x^-1)
//   plus      [k]_x^+ = (x^2k - 1) / (x^2 - 1)
//   minus     [k]_x^- = (x^-2k - 1) / (x^-2 - 1)
enum class QIntKind { balanced, plus, minus };
Scalar q_integer(long k, QIntKind kind, const Scalar& base);
Scalar q_factorial(long k, QIntKind kind, const Scalar& base);

}  // namespace qfock
