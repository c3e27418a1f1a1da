#include "qfock/semi_infinite.hpp"

#include "qfock/tensor_rep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>

namespace qfock {

namespace {

long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

long part_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0L);
}

// Monomial in the fine exponent unit (powers of the n-th roots).
Scalar fmono(long eq, long ev, long eu) {
  return Scalar::monomial(1, eq, ev, eu);
}

// qt^{t/n} with qt = v^{-1} q.
Scalar qt_pow(long t) { return fmono(t, -t, 0); }

void check_cfg(const ChevalleyConfig& cfg) {
  if (cfg.n <= 0 || cfg.nprime < 0 || std::gcd(cfg.n, cfg.nprime) != 1)
    throw math_error("ChevalleyConfig: (n, n') must be coprime, n > 0");
}

// Project a finite wedge vector (fine-unit coefficients) at the given
// out-charge through the vacuum-tail embeddings: terms touching the tail
// (max index >= N - m_out) die, the rest become charged partitions; degrees
// above trunc are cut off.
LinComb<Partition> project(const WedgeVector& w, long m_out, long trunc) {
  LinComb<Partition> r;
  for (const auto& [ks, c] : w.terms()) {
    long N = (long)ks.size();
    if (!ks.empty() && ks.back() >= N - m_out) continue;
    Partition mu(N);
    for (long i = 0; i < N; ++i) mu[i] = i - m_out - ks[i];
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    for (size_t i = 0; i < mu.size(); ++i)
      if (mu[i] < 0 || (i + 1 < mu.size() && mu[i] < mu[i + 1]))
        throw math_error("project: non-partition profile");
    if (part_sum(mu) > trunc) continue;
    r.add(mu, c);
  }
  return r;
}

std::string terms_str(const LinComb<Partition>& t, long L) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(L) << ")*|";
    for (size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
    os << ">";
  }
  if (first) os << "0";
  return os.str();
}

// Per-basis-vector finite model: at width N, the image of |lambda>_{N,m},
// with fine-unit coefficients.  `window` holds terms beyond the claimed
// vanishing bound of a mode scan; their projection must be zero.
struct ModelOut {
  WedgeVector main;
  WedgeVector window;
};
using Model = std::function<ModelOut(long N, const Partition& lam)>;

// Memo of stabilized per-basis results, keyed by an operator tag.
using CacheKey = std::tuple<std::string, Partition, long, long>;
std::map<CacheKey, LinComb<Partition>>& cache() {
  static std::map<CacheKey, LinComb<Partition>> c;
  return c;
}

// The double-evaluation guard: evaluate the finite family at N0 and N0 + n,
// project both, and require agreement.
SemiVector stabilized(const ChevalleyConfig& cfg, const SemiVector& in,
                      long m_out, long extra, const std::string& tag,
                      const Model& model) {
  long n = cfg.n;
  long N0 = in.trunc + extra + n + 2;
  SemiVector out{m_out, in.trunc, {}};
  for (const auto& [lam, c] : in.terms.terms()) {
    CacheKey key{tag, lam, in.charge_m, in.trunc};
    auto it = cache().find(key);
    if (it == cache().end()) {
      auto eval = [&](long N) {
        ModelOut mo = model(N, lam);
        if (!project(mo.window, m_out, in.trunc).is_zero())
          throw math_error(tag + ": nonvanishing terms beyond the scan bound");
        return project(mo.main, m_out, in.trunc);
      };
      LinComb<Partition> r1 = eval(N0), r2 = eval(N0 + n);
      if (!(r1 == r2))
        throw math_error(tag + ": stabilization not reached; N=" +
                         std::to_string(N0) + " gave " + terms_str(r1, n) +
                         " but N=" + std::to_string(N0 + n) + " gave " +
                         terms_str(r2, n));
      it = cache().emplace(key, std::move(r1)).first;
    }
    for (const auto& [mu, d] : it->second.terms()) out.terms.add(mu, c * d);
  }
  return out;
}

// Finite wedge vector with whole-unit coefficients -> fine units.
WedgeVector up(const WedgeVector& w, long n) {
  WedgeVector r;
  for (const auto& [ks, c] : w.terms()) r.add(ks, c.stretch(n));
  return r;
}

void check_budget(const SemiVector& v, long shift, const char* what) {
  if (shift > 0 && v.max_degree() + shift > v.trunc)
    throw math_error(std::string(what) + ": truncation overflow (degree " +
                     std::to_string(v.max_degree()) + " + shift " +
                     std::to_string(shift) + " exceeds trunc " +
                     std::to_string(v.trunc) + ")");
}

}  // namespace

Scalar central_c(const ChevalleyConfig& cfg) {
  return fmono(0, -cfg.n * cfg.n, 0);
}

Scalar central_cprime(const ChevalleyConfig& cfg) {
  return fmono(0, -cfg.n * cfg.nprime, 0);
}

long SemiVector::max_degree() const {
  long d = 0;
  for (const auto& [lam, c] : terms.terms()) d = std::max(d, part_sum(lam));
  return d;
}

std::string SemiVector::str(long L) const {
  return terms_str(terms, L) + " @ m=" + std::to_string(charge_m);
}

SemiVector SemiVector::operator+(const SemiVector& o) const {
  if (charge_m != o.charge_m)
    throw math_error("SemiVector: charge mismatch in +");
  return {charge_m, std::min(trunc, o.trunc), terms + o.terms};
}

SemiVector SemiVector::operator-(const SemiVector& o) const {
  if (charge_m != o.charge_m)
    throw math_error("SemiVector: charge mismatch in -");
  return {charge_m, std::min(trunc, o.trunc), terms - o.terms};
}

SemiVector SemiVector::operator*(const Scalar& c) const {
  return {charge_m, trunc, terms * c};
}

SemiVector SemiVector::operator-() const { return {charge_m, trunc, -terms}; }

LinComb<Partition> wedge_classes(long n, const WedgeVector& w, long m,
                                 long trunc) {
  return project(up(w, n), m, trunc);
}

SemiVector semi_basis(const Partition& lambda, long m, long trunc) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw math_error("semi_basis: not weakly decreasing");
  if (!lambda.empty() && lambda.back() <= 0)
    throw math_error("semi_basis: parts must be positive (drop zeros)");
  if (part_sum(lambda) > trunc) throw math_error("semi_basis: exceeds trunc");
  return {m, trunc, LinComb<Partition>(lambda)};
}

SemiVector heisenberg_B(const ChevalleyConfig& cfg, long k,
                        const SemiVector& v) {
  check_cfg(cfg);
  if (k == 0) throw math_error("heisenberg_B: k must be nonzero");
  long n = cfg.n, m = v.charge_m;
  check_budget(v, -k * n, "heisenberg_B");
  Model model = [n, k, m](long N, const Partition& lam) {
    return ModelOut{up(apply_b(n, k, charged_wedge(lam, N, m)), n), {}};
  };
  return stabilized(cfg, v, m,
                    std::labs(k) * n + std::labs(m),
                    "B(" + std::to_string(k) + ";n=" + std::to_string(n) + ")",
                    model);
}

namespace {

// One hatted vertex operator applied at finite width; input and output
// coefficients in whole-exponent units (stretch once at the boundary).
WedgeVector raw_hat_vertex(long n, HatVertexOp which, long k,
                           const WedgeVector& w, long N, long m) {
  switch (which) {
    case HatVertexOp::Phi:
      return vertex_phi(n, k, w);
    case HatVertexOp::Psi:
      return vertex_psi(n, k, w) * tilde_normalize(TildeOp::Psi, n, k, N, m);
    case HatVertexOp::PhiStar:
      return vertex_phi_star(n, k, w) *
             q_integer(N, QIntKind::plus, Scalar::monomial(1, 0, 1, 0));
    case HatVertexOp::PsiStar:
      return vertex_psi_star(n, k, w) *
             tilde_normalize(TildeOp::PsiStar, n, k, N, m);
  }
  throw math_error("bad HatVertexOp");
}

long vertex_shift(HatVertexOp which, long k, long m) {
  switch (which) {
    case HatVertexOp::Phi:
    case HatVertexOp::Psi:
      return -k - m - 1;
    case HatVertexOp::PhiStar:
    case HatVertexOp::PsiStar:
      return m - k;
  }
  throw math_error("bad HatVertexOp");
}

const char* vertex_name(HatVertexOp which) {
  switch (which) {
    case HatVertexOp::Phi: return "HatPhi";
    case HatVertexOp::Psi: return "HatPsi";
    case HatVertexOp::PhiStar: return "HatPhiStar";
    case HatVertexOp::PsiStar: return "HatPsiStar";
  }
  return "?";
}

}  // namespace

SemiVector hat_vertex(const ChevalleyConfig& cfg, HatVertexOp which, long k,
                      const SemiVector& v) {
  check_cfg(cfg);
  long n = cfg.n, m = v.charge_m;
  bool dual = which == HatVertexOp::PhiStar || which == HatVertexOp::PsiStar;
  long m_out = dual ? m - 1 : m + 1;
  check_budget(v, vertex_shift(which, k, m), vertex_name(which));
  Model model = [n, which, k, m](long N, const Partition& lam) {
    return ModelOut{
        up(raw_hat_vertex(n, which, k, charged_wedge(lam, N, m), N, m), n),
        {}};
  };
  std::string tag = std::string(vertex_name(which)) + "(" + std::to_string(k) +
                    ";n=" + std::to_string(n) + ")";
  return stabilized(cfg, v, m_out, std::labs(k) + std::labs(m) + 1, tag,
                    model);
}

SemiVector chevalley_P0(const ChevalleyConfig& cfg, long j,
                        const SemiVector& v) {
  check_cfg(cfg);
  if (j == 0) throw math_error("chevalley_P0: j must be nonzero");
  long n = cfg.n;
  if (j < 0) {
    // P_{0,-j} = q^j B_{-j} (j > 0)
    return heisenberg_B(cfg, j, v) * fmono(-j * n, 0, 0);
  }
  Scalar qj = fmono(j * n, 0, 0);            // q^j
  Scalar v2jqj = fmono(j * n, -2 * j * n, 0);  // v^{-2j} q^j
  Scalar c = (qj - Scalar(1)) / (v2jqj - Scalar(1)) * fmono(0, -j * n * n, 0);
  return heisenberg_B(cfg, j, v) * c;
}

namespace {

// HatPsi_{k+d} HatPhi*_{-k} |...>_{N,m} at finite width (the dual operator
// acts first; the tilde factor of Psi is taken at width N-1, charge m-1).
// Whole-unit coefficients.
WedgeVector pair_psi_phistar(long n, long kd, long k, const WedgeVector& w,
                             long N, long m) {
  WedgeVector x = raw_hat_vertex(n, HatVertexOp::PhiStar, -k, w, N, m);
  return raw_hat_vertex(n, HatVertexOp::Psi, kd, x, N - 1, m - 1);
}

// HatPhi_{kd} HatPsi*_{-k} |...>_{N,m} at finite width; whole units.
WedgeVector pair_phi_psistar(long n, long kd, long k, const WedgeVector& w,
                             long N, long m) {
  WedgeVector x = raw_hat_vertex(n, HatVertexOp::PsiStar, -k, w, N, m);
  return raw_hat_vertex(n, HatVertexOp::Phi, kd, x, N - 1, m - 1);
}

}  // namespace

SemiVector chevalley_P1(const ChevalleyConfig& cfg, long b,
                        const SemiVector& v) {
  check_cfg(cfg);
  long n = cfg.n, m = v.charge_m;
  long d = cfg.nprime + n * b;  // mode offset; degree shift is -d
  check_budget(v, -d, "chevalley_P1");
  // u^{-1/n} v^{(m+1)/n} q
  Scalar pre = fmono(n, m + 1, -1);
  bool telescoped = d >= 0;
  if (telescoped) pre = pre / (Scalar(1) - fmono(-n, 2 * n, 0));
  Model model = [n, m, d, pre, telescoped](long N, const Partition& lam) {
    WedgeVector w0 = charged_wedge(lam, N, m);
    Scalar vw = Scalar::monomial(1, 0, 1, 0);  // whole-unit v
    long lo = (lam.empty() ? 0 : -lam[0]) - m;
    long deg = part_sum(lam);
    long hi = telescoped ? deg - d + n - 1 : deg - d - 1;
    ModelOut out;
    for (long k = lo; k <= hi + n; ++k) {
      WedgeVector t = pair_psi_phistar(n, k + d, k, w0, N, m);
      if (telescoped)
        t = t - pair_psi_phistar(n, k + d - n, k - n, w0, N, m) * vw;
      WedgeVector ft = up(t, n) * (qt_pow(-k - d) * pre);
      if (k <= hi)
        out.main += ft;
      else
        out.window += ft;
    }
    return out;
  };
  std::string tag = "P1(" + std::to_string(b) + ";n=" + std::to_string(n) +
                    ",n'=" + std::to_string(cfg.nprime) + ")";
  return stabilized(cfg, v, m, std::labs(d) + std::labs(m) + n, tag, model);
}

SemiVector chevalley_Pm1(const ChevalleyConfig& cfg, long b,
                         const SemiVector& v) {
  check_cfg(cfg);
  long n = cfg.n, m = v.charge_m;
  long d = -cfg.nprime + n * b;  // mode offset; degree shift is -d
  check_budget(v, -d, "chevalley_Pm1");
  // v^{-nb} u^{1/n} v^{-(m+1)/n}
  Scalar pre = fmono(0, -n * n * b - (m + 1), 1);
  bool telescoped = d >= 0;
  if (telescoped) pre = pre / (Scalar(1) - fmono(n, -2 * n, 0));
  Model model = [n, m, d, pre, telescoped](long N, const Partition& lam) {
    WedgeVector w0 = charged_wedge(lam, N, m);
    Scalar vwinv = Scalar::monomial(1, 0, -1, 0);  // whole-unit v^{-1}
    long lo = (lam.empty() ? 0 : -lam[0]) - m;
    long deg = part_sum(lam);
    long hi = telescoped ? deg - d + n - 1 : deg - d - 1;
    ModelOut out;
    for (long k = lo; k <= hi + n; ++k) {
      WedgeVector t = pair_phi_psistar(n, k + d, k, w0, N, m);
      if (telescoped)
        t = t - pair_phi_psistar(n, k + d - n, k - n, w0, N, m) * vwinv;
      WedgeVector ft = up(t, n) * (qt_pow(k) * pre);
      if (k <= hi)
        out.main += ft;
      else
        out.window += ft;
    }
    return out;
  };
  std::string tag = "Pm1(" + std::to_string(b) + ";n=" + std::to_string(n) +
                    ",n'=" + std::to_string(cfg.nprime) + ")";
  return stabilized(cfg, v, m, std::labs(d) + std::labs(m) + n, tag, model);
}

namespace {

// Wedge-quotient class of a tensor vector with fine-unit coefficients: the
// straightening coefficients are whole-unit and get stretched on the way.
WedgeVector tensor_class(long n, const TensorVector& x) {
  WedgeVector r;
  for (const auto& [ks, c] : x.terms()) {
    WedgeVector s = straighten(n, ks);
    for (const auto& [idx, d] : s.terms()) r.add(idx, c * d.stretch(n));
  }
  return r;
}

// The u_a convention that makes the diagonal slope families match their
// closed-form subtraction constants (fine units).
std::vector<Scalar> slope_u_params(long n, long N, long m) {
  std::vector<Scalar> us;
  for (long a = 0; a < n; ++a)
    us.push_back(fmono(a, N - n * floordiv(N - 1 - m - a, n) - (m + 1) - a,
                       1));
  return us;
}

}  // namespace

SemiVector slope_P(const ChevalleyConfig& cfg, long k, SlopeFamily which,
                   const SemiVector& v) {
  check_cfg(cfg);
  if (k <= 0) throw math_error("slope_P: k must be positive");
  long n = cfg.n, np = cfg.nprime, m = v.charge_m;
  SlopeData sd = slope_words(n, np);
  long shift = which == SlopeFamily::MMp ? k : 0;
  check_budget(v, shift, "slope_P");
  Model model = [n, np, m, k, which, &sd](long N, const Partition& lam) {
    RepConfig rc;
    rc.n = n;
    rc.n_tw = np;
    rc.N = N;
    rc.u_params = slope_u_params(n, N, m);
    rc.unit = n;
    TensorIndex t(N);
    for (long i = 0; i < N; ++i) {
      long part = i < (long)lam.size() ? lam[i] : 0;
      t[i] = -part + i - m;
    }
    TensorVector base{t};
    WedgeVector acc;
    if (which == SlopeFamily::MMp) {
      // v^{km N/n} q^k sum_i A_i^{-k}
      Scalar pre = fmono(k * n, k * sd.m * N, 0);
      for (long i = 1; i <= N; ++i) {
        TensorVector x = base;
        for (long s = 0; s < k; ++s) x = apply_slope_gen(rc, SlopeGen::Ainv, i, x);
        acc += tensor_class(n, x) * pre;
      }
    } else {
      bool neg = which == SlopeFamily::NegNNp;
      // NNp:    v^{kN} q^k sum_i B_i^{-k} - sum_i u^{-k} v^{-k} q^{2k} (v^2/q)^{ik}
      //         + u^{-k} v^k q^k / (1 - (v^2/q)^k)
      // NegNNp: v^{-kN} sum_i B_i^{k} - sum_i u^k v^k q^{-k} (q/v^2)^{ik}
      //         + u^k v^{-k} / (1 - (q/v^2)^k)
      // where u is the product u_0 ... u_{n-1} q^{1-n}; with the fractional
      // u_a above this is qt^{-n(n-1)/2} u in fine units.
      Scalar uprod = fmono(-n * (n - 1) / 2, n * (n - 1) / 2, n);
      Scalar upow = uprod.pow(neg ? k : -k);
      Scalar pre = neg ? fmono(0, -k * N * n, 0) : fmono(k * n, k * N * n, 0);
      WedgeVector lamw = charged_wedge(lam, N, m);
      for (long i = 1; i <= N; ++i) {
        TensorVector x = base;
        for (long s = 0; s < k; ++s)
          x = apply_slope_gen(rc, neg ? SlopeGen::B : SlopeGen::Binv, i, x);
        Scalar diag = upow * (neg ? fmono(-k * n + i * k * n,
                                          k * n - 2 * i * k * n, 0)
                                  : fmono(2 * k * n - i * k * n,
                                          -k * n + 2 * i * k * n, 0));
        acc += tensor_class(n, x) * pre;
        acc += lamw * (-diag);
      }
      Scalar ratio = neg ? fmono(k * n, -2 * k * n, 0)
                         : fmono(-k * n, 2 * k * n, 0);
      Scalar cst = upow *
                   (neg ? fmono(0, -k * n, 0) : fmono(k * n, k * n, 0)) /
                   (Scalar(1) - ratio);
      acc += lamw * cst;
    }
    return ModelOut{std::move(acc), {}};
  };
  const char* fam = which == SlopeFamily::MMp
                        ? "MMp"
                        : which == SlopeFamily::NNp ? "NNp" : "NegNNp";
  std::string tag = std::string("slopeP:") + fam + "(" + std::to_string(k) +
                    ";n=" + std::to_string(n) + ",n'=" + std::to_string(np) +
                    ")";
  // the diagonal families have degree shift 0, so no width margin beyond
  // the stabilization step is needed; the A-family raises degree by k
  long extra = (which == SlopeFamily::MMp ? k : 0) + std::labs(m);
  return stabilized(cfg, v, m, extra, tag, model);
}

}  // namespace qfock
