#include "qfock/tensor_rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

namespace qfock {

namespace {

Scalar sc_v(long unit) { return Scalar::monomial(1, 0, unit, 0); }
Scalar sc_vinv(long unit) { return Scalar::monomial(1, 0, -unit, 0); }
Scalar sc_vdiff(long unit) { return sc_v(unit) - sc_vinv(unit); }  // v - v^{-1}

// One output term of the two-slot exchange: relative index pair + coefficient.
struct PairTerm {
  long da, db;
  Scalar c;
};

// T on e_a (x) e_b for the rank-n exchange, tabulated relative to min(a,b).
// The defining formulas only depend on a - b, which makes the table small.
const std::vector<PairTerm>& pair_T_table(long n, long diff, long unit) {
  static std::map<std::tuple<long, long, long>, std::vector<PairTerm>> memo;
  auto key = std::make_tuple(n, diff, unit);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<PairTerm> out;
  long gap = diff < 0 ? -diff : diff;
  long k = gap / n, s = gap % n;
  if (diff == 0) {
    out.push_back({0, 0, sc_v(unit)});
  } else if (diff < 0) {
    // input e_h (x) e_l with h = 0, l = gap
    if (s == 0) {
      out.push_back({gap, 0, sc_v(unit)});
      for (long j = 1; j <= k; ++j)
        out.push_back({gap - n * j, n * j, sc_vdiff(unit)});
    } else {
      out.push_back({gap, 0, Scalar(1)});
      for (long j = 0; j <= k; ++j)
        out.push_back({n * j, gap - n * j, sc_vdiff(unit)});
    }
  } else {
    // input e_l (x) e_h with h = 0, l = gap
    if (s == 0) {
      out.push_back({0, gap, sc_vinv(unit)});
      for (long j = 1; j <= k - 1; ++j)
        out.push_back({gap - n * j, n * j, -sc_vdiff(unit)});
    } else {
      out.push_back({0, gap, Scalar(1)});
      for (long j = 1; j <= k; ++j)
        out.push_back({gap - n * j, n * j, -sc_vdiff(unit)});
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

// Apply the two-slot T (or T^{-1} = T - (v - v^{-1})) to slots (si, sj) of
// one basis index, accumulating into acc with an overall coefficient.
void apply_pair_T(long n, long unit, const TensorIndex& ks, size_t si,
                  size_t sj, const Scalar& coeff, bool inverse, bool swap_out,
                  TensorVector& acc) {
  long a = ks[si], b = ks[sj];
  long base = std::min(a, b);
  const auto& tab = pair_T_table(n, a - b, unit);
  TensorIndex t = ks;
  for (const auto& pt : tab) {
    t[si] = base + pt.da;
    t[sj] = base + pt.db;
    if (swap_out) std::swap(t[si], t[sj]);
    acc.add(t, coeff * pt.c);
  }
  if (inverse) {
    t = ks;
    if (swap_out) std::swap(t[si], t[sj]);
    acc.add(t, -coeff * sc_vdiff(unit));
  }
}

long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Scalar RepConfig::u_total() const {
  Scalar r = Scalar::monomial(1, (1 - n) * unit, 0, 0);
  for (const auto& ua : u_params) r *= ua;
  return r;
}

long tensor_degree(const TensorIndex& ks) {
  return std::accumulate(ks.begin(), ks.end(), 0L);
}

TensorVector apply_T(const RepConfig& cfg, long i, const TensorVector& w,
                     bool inverse) {
  TensorVector r;
  for (const auto& [ks, c] : w.terms())
    apply_pair_T(cfg.n, cfg.unit, ks, i - 1, i, c, inverse, false, r);
  return r;
}

TensorVector apply_G(const RepConfig& cfg, long i, long j,
                     const TensorVector& w, bool inverse) {
  // G_{ij} = T s on the slot pair: G(x (x) y) = T(y (x) x), and
  // G^{-1}(x (x) y) = s T^{-1}(x (x) y).
  TensorVector r;
  for (const auto& [ks, c] : w.terms()) {
    if (!inverse) {
      TensorIndex t = ks;
      std::swap(t[i - 1], t[j - 1]);
      apply_pair_T(cfg.n, cfg.unit, t, i - 1, j - 1, c, false, false, r);
    } else {
      apply_pair_T(cfg.n, cfg.unit, ks, i - 1, j - 1, c, true, true, r);
    }
  }
  return r;
}

TensorVector apply_kappa(const RepConfig& cfg, long i, long p,
                         const TensorVector& w) {
  (void)cfg;
  TensorVector r;
  for (const auto& [ks, c] : w.terms()) {
    TensorIndex t = ks;
    t[i - 1] -= p;
    r.add(t, c);
  }
  return r;
}

TensorVector apply_D(const RepConfig& cfg, long i, const TensorVector& w,
                     bool inverse) {
  TensorVector r;
  for (const auto& [ks, c] : w.terms()) {
    long k = ks[i - 1];
    long a = ((k % cfg.n) + cfg.n) % cfg.n;
    long t = (k - a) / cfg.n;
    Scalar f = cfg.u_params.at(a) * Scalar::monomial(1, t * cfg.unit, 0, 0);
    r.add(ks, inverse ? c / f : c * f);
  }
  return r;
}

TensorVector apply_pi(const RepConfig& cfg, const TensorVector& w, int power) {
  TensorVector r;
  if (power == 1) {
    // rotate (k_1..k_N) -> (k_N, k_1..k_{N-1}), then D_1, then kappa_1^{n_tw}
    for (const auto& [ks, c] : w.terms()) {
      TensorIndex t(ks.size());
      t[0] = ks.back();
      std::copy(ks.begin(), ks.end() - 1, t.begin() + 1);
      r.add(t, c);
    }
    r = apply_D(cfg, 1, r);
    r = apply_kappa(cfg, 1, cfg.n_tw, r);
  } else {
    r = apply_kappa(cfg, 1, -cfg.n_tw, w);
    r = apply_D(cfg, 1, r, true);
    TensorVector r2;
    for (const auto& [ks, c] : r.terms()) {
      TensorIndex t(ks.size());
      std::copy(ks.begin() + 1, ks.end(), t.begin());
      t.back() = ks.front();
      r2.add(t, c);
    }
    r = std::move(r2);
  }
  return r;
}

TensorVector apply_XY(const RepConfig& cfg, XYGen g, long i,
                      const TensorVector& w) {
  switch (g) {
    case XYGen::Y:
      return apply_kappa(cfg, i, -cfg.n, w);
    case XYGen::Yinv:
      return apply_kappa(cfg, i, cfg.n, w);
    case XYGen::X: {
      // X_i = T_i ... T_{N-1} pi^{-1} T_1^{-1} ... T_{i-1}^{-1}
      TensorVector r = w;
      for (long j = i - 1; j >= 1; --j) r = apply_T(cfg, j, r, true);
      r = apply_pi(cfg, r, -1);
      for (long j = cfg.N - 1; j >= i; --j) r = apply_T(cfg, j, r);
      return r;
    }
    case XYGen::Xinv: {
      // X_i^{-1} = T_{i-1} ... T_1 pi T_{N-1}^{-1} ... T_i^{-1}
      TensorVector r = w;
      for (long j = i; j <= cfg.N - 1; ++j) r = apply_T(cfg, j, r, true);
      r = apply_pi(cfg, r, 1);
      for (long j = 1; j <= i - 1; ++j) r = apply_T(cfg, j, r);
      return r;
    }
  }
  throw math_error("bad XYGen");
}

SlopeData slope_words(long n, long nprime) {
  if (n <= 0 || nprime < 0 || std::gcd(n, nprime) != 1)
    throw math_error("slope_words: (n, n') must be coprime with n > 0, n' >= 0");
  SlopeData sd;
  sd.n = n;
  sd.nprime = nprime;
  // n m' - n' m = 1 with 0 <= m < n
  long m = 0;
  while ((1 + nprime * m) % n != 0) ++m;
  sd.m = m;
  sd.mprime = (1 + nprime * m) / n;

  auto build = [](long y, long len, std::vector<SlopeData::Letter>& word) {
    for (long j = 1; j <= len; ++j) {
      bool isx = floordiv(j * y, len) > floordiv((j - 1) * y, len);
      word.push_back(isx ? SlopeData::LetterXinv : SlopeData::LetterY);
    }
  };
  build(n, n + nprime, sd.word_B);
  build(sd.m, sd.m + sd.mprime, sd.word_A);
  return sd;
}

namespace {

// One slot-local factor of the pairwise-exchange form of B_i / A_i,
// in application order (first element acts first).
struct Factor {
  enum Kind { FG, FD, FKappa } kind;
  long i = 0, j = 0;      // slots for FG
  long p = 0;             // kappa power
  bool inverse = false;   // for FG / FD
};

std::vector<Factor> slope_factors(const RepConfig& cfg, bool a_word, long i) {
  SlopeData sd = slope_words(cfg.n, cfg.n_tw);
  const auto& word = a_word ? sd.word_A : sd.word_B;
  long len = (long)word.size();
  long y = a_word ? sd.m : sd.n;

  std::vector<Factor> fs;
  if (a_word && sd.m == 0) {
    // n = 1: the word is the single letter Y_1, i.e. kappa_i^{-1}
    fs.push_back({Factor::FKappa, i, 0, -1, false});
    return fs;
  }
  auto push_block = [&](long d, bool tail_only) {
    // kappa_i^{-d} D_i G_{i,N}^{-1} ... G_{i,.}^{-1} kappa_i^{d},
    // listed here in application order (rightmost factor first)
    if (d != 0) fs.push_back({Factor::FKappa, i, 0, d, false});
    for (long r = tail_only ? i + 1 : 1; r <= cfg.N; ++r)
      if (r != i) fs.push_back({Factor::FG, i, r, 0, true});
    fs.push_back({Factor::FD, i, 0, 0, false});
    if (d != 0) fs.push_back({Factor::FKappa, i, 0, -d, false});
  };

  // final letter (always X_1^{-1} here): no closing kappa for B (d = 0);
  // A keeps the unpaired kappa_i^{-1} that realizes deg A = 1
  if (a_word) {
    for (long r = i + 1; r <= cfg.N; ++r)
      fs.push_back({Factor::FG, i, r, 0, true});
    fs.push_back({Factor::FD, i, 0, 0, false});
    fs.push_back({Factor::FKappa, i, 0, -1, false});
  } else {
    push_block(0, true);
  }
  // conjugated blocks for the earlier X_1^{-1} letters, decreasing j
  for (long j = len - 1; j >= 1; --j) {
    if (word[j - 1] != SlopeData::LetterXinv) continue;
    long f = floordiv(j * y, len);
    long d = cfg.n * (j - f) - cfg.n_tw * f;
    push_block(d, false);
  }
  // prefix G_{i-1,i} ... G_{1,i}, rightmost first
  for (long r = 1; r <= i - 1; ++r)
    fs.push_back({Factor::FG, r, i, 0, false});
  return fs;
}

TensorVector apply_factors(const RepConfig& cfg, const std::vector<Factor>& fs,
                           const TensorVector& w, bool invert) {
  TensorVector r = w;
  auto apply_one = [&](const Factor& f, bool inv) {
    switch (f.kind) {
      case Factor::FG:
        r = apply_G(cfg, f.i, f.j, r, f.inverse != inv);
        break;
      case Factor::FD:
        r = apply_D(cfg, f.i, r, f.inverse != inv);
        break;
      case Factor::FKappa:
        r = apply_kappa(cfg, f.i, inv ? -f.p : f.p, r);
        break;
    }
  };
  if (!invert) {
    for (const auto& f : fs) apply_one(f, false);
  } else {
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) apply_one(*it, true);
  }
  return r;
}

}  // namespace

TensorVector apply_slope_gen(const RepConfig& cfg, SlopeGen which, long i,
                             const TensorVector& w) {
  bool a_word = which == SlopeGen::A || which == SlopeGen::Ainv;
  bool invert = which == SlopeGen::Binv || which == SlopeGen::Ainv;
  return apply_factors(cfg, slope_factors(cfg, a_word, i), w, invert);
}

TensorVector apply_slope_gen_word(const RepConfig& cfg, SlopeGen which, long i,
                                  const TensorVector& w) {
  SlopeData sd = slope_words(cfg.n, cfg.n_tw);
  const auto& word = which == SlopeGen::A || which == SlopeGen::Ainv
                         ? sd.word_A
                         : sd.word_B;
  bool invert = which == SlopeGen::Binv || which == SlopeGen::Ainv;

  // B_i = T_{i-1} ... T_1 B_1 T_1 ... T_{i-1}
  TensorVector r = w;
  if (!invert) {
    for (long j = i - 1; j >= 1; --j) r = apply_T(cfg, j, r);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      r = *it == SlopeData::LetterY ? apply_XY(cfg, XYGen::Y, 1, r)
                                    : apply_XY(cfg, XYGen::Xinv, 1, r);
    for (long j = 1; j <= i - 1; ++j) r = apply_T(cfg, j, r);
  } else {
    for (long j = i - 1; j >= 1; --j) r = apply_T(cfg, j, r, true);
    for (auto it = word.begin(); it != word.end(); ++it)
      r = *it == SlopeData::LetterY ? apply_XY(cfg, XYGen::Yinv, 1, r)
                                    : apply_XY(cfg, XYGen::X, 1, r);
    for (long j = 1; j <= i - 1; ++j) r = apply_T(cfg, j, r, true);
  }
  return r;
}

TensorVector antisymmetrize(const RepConfig& cfg, const TensorVector& w) {
  // S^{(k+1)} = 1/[k+1]^+ (sum_{p=1}^{k+1} (-v)^{p+k-1} T_p ... T_k) S^{(k)}
  TensorVector r = w;
  for (long k = 1; k <= cfg.N - 1; ++k) {
    // p = k+1: (-v)^{2k} = v^{2k}
    TensorVector acc = r * sc_v(cfg.unit).pow(2 * k);
    TensorVector t = r;
    for (long p = k; p >= 1; --p) {
      t = apply_T(cfg, p, t);
      Scalar sgn = sc_v(cfg.unit).pow(p + k - 1);
      if ((p + k - 1) % 2 != 0) sgn = -sgn;
      acc += t * sgn;
    }
    r = acc * q_integer(k + 1, QIntKind::plus, sc_v(cfg.unit)).inverse();
  }
  return r;
}

TensorVector antisymmetrize_bruteforce(const RepConfig& cfg,
                                       const TensorVector& w) {
  long N = cfg.N;
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  TensorVector acc;
  do {
    // reduced word by bubble sort; length = number of inversions
    std::vector<long> word;
    std::vector<int> p = perm;
    for (bool moved = true; moved;) {
      moved = false;
      for (long j = 0; j + 1 < N; ++j)
        if (p[j] > p[j + 1]) {
          std::swap(p[j], p[j + 1]);
          word.push_back(j + 1);
          moved = true;
        }
    }
    TensorVector t = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      t = apply_T(cfg, *it, t);
    Scalar sgn = sc_vinv(cfg.unit).pow((long)word.size());
    if (word.size() % 2 != 0) sgn = -sgn;
    acc += t * sgn;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc * q_factorial(N, QIntKind::minus, sc_v(cfg.unit)).inverse();
}

TensorVector monomial_A_basis(const RepConfig& cfg,
                              const std::vector<long>& lambda) {
  TensorVector r(TensorIndex(cfg.N, 0));
  for (long i = cfg.N; i >= 1; --i) {
    long e = lambda.at(i - 1);
    for (long s = 0; s < std::labs(e); ++s)
      r = apply_slope_gen(cfg, e > 0 ? SlopeGen::A : SlopeGen::Ainv, i, r);
  }
  return r;
}

namespace {

// lambda <= mu in the root order: mu - lambda is a nonnegative combination
// of simple roots, i.e. equal sums and nonnegative partial sums.
bool root_le(const std::vector<long>& lambda, const std::vector<long>& mu) {
  long run = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    run += mu[i] - lambda[i];
    if (i + 1 < lambda.size() && run < 0) return false;
  }
  return run == 0;
}

}  // namespace

PrecOrder prec_compare(const std::vector<long>& lambda,
                       const std::vector<long>& mu) {
  if (lambda.size() != mu.size())
    throw math_error("prec_compare: length mismatch");
  auto lp = lambda, mp = mu;
  std::sort(lp.begin(), lp.end(), std::greater<long>());
  std::sort(mp.begin(), mp.end(), std::greater<long>());
  if (lp != mp) {
    if (root_le(lp, mp)) return PrecOrder::less;
    if (root_le(mp, lp)) return PrecOrder::greater;
    return PrecOrder::incomparable;
  }
  if (lambda == mu) return PrecOrder::equal;
  if (root_le(lambda, mu)) return PrecOrder::less;
  if (root_le(mu, lambda)) return PrecOrder::greater;
  return PrecOrder::incomparable;
}

long ell_stat(const std::vector<long>& lambda, long i) {
  long li = lambda.at(i - 1), r = 0;
  for (size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] > li) ++r;
    if (lambda[j] < li) --r;
    if (lambda[j] == li && (long)j + 1 < i) ++r;
    if (lambda[j] == li && (long)j + 1 > i) --r;
  }
  return r;
}

}  // namespace qfock
