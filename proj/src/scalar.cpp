#include "qfock/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

namespace qfock {

Poly Poly::monomial(Int c, Exp e) {
  Poly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

void Poly::add_term(const Exp& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

const std::pair<const Exp, Int>& Poly::lead() const {
  if (terms_.empty()) throw math_error("lead() of zero polynomial");
  return *terms_.rbegin();
}

Exp Poly::min_exps() const {
  if (terms_.empty()) return Exp{};
  Exp m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    m.eq = std::min(m.eq, e.eq);
    m.ev = std::min(m.ev, e.ev);
    m.eu = std::min(m.eu, e.eu);
  }
  return m;
}

Poly Poly::shifted(const Exp& e) const {
  Poly r;
  for (const auto& [e0, c] : terms_) r.terms_[e0 + e] = c;
  return r;
}

Poly Poly::stretched(long f) const {
  Poly r;
  for (const auto& [e, c] : terms_)
    r.terms_[Exp{e.eq * f, e.ev * f, e.eu * f}] = c;
  return r;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) throw math_error("zero raised to a negative/used power");
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? e : -e;
  Rat r(1);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace

Rat Poly::eval(const Rat& qr, const Rat& vr, const Rat& ur) const {
  Rat s(0);
  for (const auto& [e, c] : terms_)
    s += Rat(c) * rat_pow(qr, e.eq) * rat_pow(vr, e.ev) * rat_pow(ur, e.eu);
  return s;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw math_error("division by zero polynomial");
  Poly rem = a, quot;
  const auto& [lb, cb] = b.lead();
  while (!rem.is_zero()) {
    const auto& [la, ca] = rem.lead();
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Exp de = la - lb;
    if (r != 0 || de.eq < 0 || de.ev < 0 || de.eu < 0)
      throw math_error("inexact polynomial division");
    quot.add_term(de, q);
    rem = rem - b.shifted(de) * Poly(q);
  }
  return quot;
}

namespace {

// --- multivariate gcd: primitive PRS, one variable at a time -------------

long get_axis(const Exp& e, int axis) {
  return axis == 0 ? e.eq : axis == 1 ? e.ev : e.eu;
}

Exp axis_exp(int axis, long k) {
  Exp e;
  (axis == 0 ? e.eq : axis == 1 ? e.ev : e.eu) = k;
  return e;
}

// Split p along `axis`: exponent in that variable -> coefficient polynomial
// (which has exponent 0 in that variable).
std::map<long, Poly> split(const Poly& p, int axis) {
  std::map<long, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    long k = get_axis(e, axis);
    Exp rest = e - axis_exp(axis, k);
    out[k].add_term(rest, c);
  }
  return out;
}

Poly join(const std::map<long, Poly>& m, int axis) {
  Poly p;
  for (const auto& [k, coef] : m)
    for (const auto& [e, c] : coef.terms()) p.add_term(e + axis_exp(axis, k), c);
  return p;
}

Poly gcd_rec(Poly a, Poly b, int axis);

// gcd of all main-variable coefficients of p (polynomials in axes > axis).
Poly poly_content(const std::map<long, Poly>& coeffs, int axis) {
  Poly g;
  for (const auto& [k, c] : coeffs) g = gcd_rec(g, c, axis + 1);
  return g;
}

Poly gcd_rec(Poly a, Poly b, int axis) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (axis == 3) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.lead().second.get_mpz_t(),
            b.lead().second.get_mpz_t());
    return Poly(g);
  }
  auto A = split(a, axis), B = split(b, axis);
  Poly ca = poly_content(A, axis), cb = poly_content(B, axis);
  Poly cont = gcd_rec(ca, cb, axis + 1);

  // primitive parts as coefficient vectors in the main variable
  auto primitive = [&](std::map<long, Poly>& m) {
    Poly c = poly_content(m, axis);
    for (auto& [k, coef] : m) coef = poly_divexact(coef, c);
  };
  primitive(A);
  primitive(B);

  // Euclidean loop with pseudo-division, re-primitivizing every step.
  auto deg = [](const std::map<long, Poly>& m) { return m.rbegin()->first; };
  if (deg(A) < deg(B)) std::swap(A, B);
  while (true) {
    if (B.empty()) break;
    long da = deg(A), db = deg(B);
    if (da < db) {
      std::swap(A, B);
      continue;
    }
    // one pseudo-reduction pass: A <- lc(B)*A - lc(A)*x^(da-db)*B
    const Poly& lcB = B.rbegin()->second;
    const Poly lcA = A.rbegin()->second;
    std::map<long, Poly> R;
    for (const auto& [k, c] : A) {
      Poly t = c * lcB;
      auto it = R.find(k);
      if (it == R.end()) R[k] = t;
      else it->second = it->second + t;
    }
    for (const auto& [k, c] : B) {
      Poly t = c * lcA;
      long kk = k + (da - db);
      auto it = R.find(kk);
      if (it == R.end()) R[kk] = -t;
      else it->second = it->second - t;
    }
    for (auto it = R.begin(); it != R.end();)
      it = it->second.is_zero() ? R.erase(it) : std::next(it);
    if (!R.empty()) primitive(R);
    A = B;
    B = std::move(R);
  }
  Poly g = join(A, axis) * cont;
  return g;
}

// --- heuristic gcd (evaluation at a big integer + xi-adic reconstruction),
// --- verified by trial division; the PRS above is kept as a fallback -------

std::optional<Poly> try_divexact(const Poly& a, const Poly& b) {
  Poly rem = a, quot;
  const auto& [lb, cb] = b.lead();
  while (!rem.is_zero()) {
    const auto& [la, ca] = rem.lead();
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Exp de = la - lb;
    if (r != 0 || de.eq < 0 || de.ev < 0 || de.eu < 0) return std::nullopt;
    quot.add_term(de, q);
    rem = rem - b.shifted(de) * Poly(q);
  }
  return quot;
}

long axis_degree(const Poly& p, int axis) {
  long d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, get_axis(e, axis));
  return d;
}

Poly eval_axis(const Poly& p, int axis, const Int& xi) {
  Poly r;
  for (const auto& [e, c] : p.terms()) {
    long k = get_axis(e, axis);
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), (unsigned long)k);
    r.add_term(e - axis_exp(axis, k), c * pw);
  }
  return r;
}

// symmetric remainder in [-xi/2, xi/2)
Int smod(const Int& h, const Int& xi) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  if (r * 2 >= xi) r -= xi;
  return r;
}

Int max_abs_coeff(const Poly& p) {
  Int m = 0;
  for (const auto& [e, c] : p.terms()) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

std::optional<Poly> heu_gcd(Poly a, Poly b, int axis, int depth) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  while (axis < 3 && axis_degree(a, axis) == 0 && axis_degree(b, axis) == 0)
    ++axis;
  // Gauss: gcd(a,b) = gcd(cont a, cont b) * gcd(pp a, pp b).  Splitting the
  // integer content off at every level keeps the evaluate/reconstruct step
  // working on primitive inputs, where a spurious constant in the inner gcd
  // can be recognised and stripped instead of poisoning the candidate.
  Int ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (axis == 3) return Poly(cg);
  if (ca > 1) a = poly_divexact(a, Poly(ca));
  if (cb > 1) b = poly_divexact(b, Poly(cb));
  Int xi = 2 * std::max(max_abs_coeff(a), max_abs_coeff(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ga = eval_axis(a, axis, xi);
    Poly gb = eval_axis(b, axis, xi);
    auto h = heu_gcd(ga, gb, axis + 1, depth + 1);
    if (h) {
      // xi-adic reconstruction of the gcd candidate, coefficient-wise
      Poly g, H = *h;
      long i = 0;
      while (!H.is_zero()) {
        Poly digit, next;
        for (const auto& [e, c] : H.terms()) {
          Int d = smod(c, xi);
          digit.add_term(e, d);
          Int q = (c - d) / xi;
          next.add_term(e, q);
        }
        for (const auto& [e, c] : digit.terms())
          g.add_term(e + axis_exp(axis, i), c);
        H = next;
        ++i;
        if (i > 512) break;  // runaway; force retry
      }
      if (!g.is_zero()) {
        Int c = g.content();
        if (c > 1) g = poly_divexact(g, Poly(c));
        if (try_divexact(a, g) && try_divexact(b, g)) return g * Poly(cg);
        if (getenv("QFOCK_GCD_DEBUG"))
          fprintf(stderr, "heu axis=%d attempt=%d: candidate(%zu terms) fails division\n",
                  axis, attempt, g.size());
      }
    } else if (getenv("QFOCK_GCD_DEBUG")) {
      fprintf(stderr, "heu axis=%d attempt=%d: no inner gcd\n", axis, attempt);
    }
    xi = xi * 3 + 7;
  }
  return std::nullopt;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly(0);
  Poly as = a.shifted(-a.min_exps());
  Poly bs = b.shifted(-b.min_exps());
  Int ca = as.content(), cb = bs.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (ca > 1) as = poly_divexact(as, Poly(ca));
  if (cb > 1) bs = poly_divexact(bs, Poly(cb));
  Poly g;
  if (as.size() == 1 || bs.size() == 1) {
    g = Poly(1);
  } else if (auto hg = heu_gcd(as, bs, 0, 0)) {
    g = *hg;
  } else {
    if (getenv("QFOCK_GCD_DEBUG")) {
      fprintf(stderr, "heu_gcd fallback:\nA = %s\nB = %s\n", as.str().c_str(),
              bs.str().c_str());
    }
    g = gcd_rec(as, bs, 0);
  }
  g = g * Poly(cg);
  g = g.shifted(-g.min_exps());
  if (g.lead().second < 0) g = -g;
  return g;
}

// --- Scalar ----------------------------------------------------------------

Scalar::Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

Scalar Scalar::monomial(Int c, long eq, long ev, long eu) {
  return Scalar(Poly::monomial(std::move(c), Exp{eq, ev, eu}));
}

Scalar Scalar::from_rational(const Rat& r) {
  return Scalar(Poly(Int(r.get_num())), Poly(Int(r.get_den())));
}

void Scalar::normalize() {
  if (den_.is_zero()) throw math_error("scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!(g == Poly(1))) {
    // poly_gcd is monomial-agnostic; align shifts before exact division
    Poly ns = num_.shifted(-num_.min_exps());
    Poly ds = den_.shifted(-den_.min_exps());
    num_ = poly_divexact(ns, g).shifted(num_.min_exps());
    den_ = poly_divexact(ds, g).shifted(den_.min_exps());
  }
  // make den's min exponents zero (monomials are units)
  Exp m = den_.min_exps();
  num_ = num_.shifted(-m);
  den_ = den_.shifted(-m);
  if (den_.lead().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int c = num_.content();
  Int cd = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (c > 1) {
    Poly pc{Int(c)};
    num_ = poly_divexact(num_, pc);
    den_ = poly_divexact(den_, pc);
  }
}

bool Scalar::is_one() const { return num_ == Poly(1) && den_ == Poly(1); }

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw math_error("scalar division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw math_error("inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long k) const {
  if (k == 0) return Scalar(1);
  Scalar b = k > 0 ? *this : inverse();
  unsigned long n = k > 0 ? k : -k;
  Scalar r(1);
  while (n) {
    if (n & 1) r *= b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

namespace {
Poly flip_v(const Poly& p) {
  Poly r;
  for (const auto& [e, c] : p.terms()) r.add_term(Exp{e.eq, -e.ev, e.eu}, c);
  return r;
}
}  // namespace

Scalar Scalar::bar_v() const { return Scalar(flip_v(num_), flip_v(den_)); }

Scalar Scalar::stretch(long f) const {
  if (f == 0) throw math_error("stretch: factor must be nonzero");
  return Scalar(num_.stretched(f), den_.stretched(f));
}

Rat Scalar::specialize(const Rat& qr, const Rat& vr, const Rat& ur) const {
  Rat d = den_.eval(qr, vr, ur);
  if (d == 0) throw math_error("specialization hits a pole");
  Rat n = num_.eval(qr, vr, ur);
  n /= d;
  n.canonicalize();
  return n;
}

namespace {

void append_var_power(std::ostringstream& os, const char* name, long e, long L) {
  if (e == 0) return;
  long g = std::gcd(std::abs(e), L);
  long num = e / g, den = L / g;
  os << "*" << name << "^(";
  if (den == 1)
    os << num;
  else
    os << num << "/" << den;
  os << ")";
}

}  // namespace

std::string Poly::str(long L) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print in lex order, smallest first, with explicit signs
  for (const auto& [e, c] : terms_) {
    Int ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << ac.get_str();
    append_var_power(os, "q", e.eq, L);
    append_var_power(os, "v", e.ev, L);
    append_var_power(os, "u", e.eu, L);
  }
  return os.str();
}

std::string Scalar::str(long L) const {
  if (den_ == Poly(1)) return num_.str(L);
  return "(" + num_.str(L) + ")/(" + den_.str(L) + ")";
}

Scalar q_integer(long k, QIntKind kind, const Scalar& base) {
  const Scalar& x = base;
  switch (kind) {
    case QIntKind::balanced:
      return (x.pow(k) - x.pow(-k)) / (x - x.inverse());
    case QIntKind::plus:
      return (x.pow(2 * k) - Scalar(1)) / (x.pow(2) - Scalar(1));
    case QIntKind::minus:
      return (x.pow(-2 * k) - Scalar(1)) / (x.pow(-2) - Scalar(1));
  }
  throw math_error("bad QIntKind");
}

Scalar q_factorial(long k, QIntKind kind, const Scalar& base) {
  Scalar r(1);
  for (long i = 1; i <= k; ++i) r *= q_integer(i, kind, base);
  return r;
}

}  // namespace qfock
