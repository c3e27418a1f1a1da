#include "qfock/cherednik.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qfock/tensor_rep.hpp"

namespace qfock {

namespace {

Scalar sc_v() { return Scalar::monomial(1, 0, 1, 0); }
Scalar sc_vdiff() {
  return Scalar::monomial(1, 0, 1, 0) - Scalar::monomial(1, 0, -1, 0);
}

}  // namespace

PolyVector cherednik_T(long i, const PolyVector& p, bool inverse) {
  PolyVector out;
  for (const auto& [lam, c] : p.terms()) {
    if (i < 1 || i + 1 > (long)lam.size())
      throw math_error("cherednik_T: index out of range");
    long a = lam[i - 1], b = lam[i];
    PolyIndex swapped = lam;
    std::swap(swapped[i - 1], swapped[i]);
    out.add(swapped, c * sc_v());
    // (s_i - 1)/(Y_i/Y_{i+1} - 1) on Y^lambda telescopes to a geometric sum
    if (a > b) {
      for (long t = 0; t < a - b; ++t) {
        PolyIndex mu = lam;
        mu[i - 1] = b + t;
        mu[i] = a - t;
        out.add(mu, -c * sc_vdiff());
      }
    } else if (a < b) {
      for (long t = 0; t < b - a; ++t) {
        PolyIndex mu = lam;
        mu[i - 1] = a + t;
        mu[i] = b - t;
        out.add(mu, c * sc_vdiff());
      }
    }
    if (inverse) out.add(lam, -c * sc_vdiff());
  }
  return out;
}

PolyVector cherednik_pi(const Scalar& u, const PolyVector& p, int power) {
  PolyVector out;
  for (const auto& [lam, c] : p.terms()) {
    long N = (long)lam.size();
    PolyIndex mu(lam.size());
    if (power >= 0) {
      // rotate exponents right, picking up u q^{lambda_N}
      mu[0] = lam[N - 1];
      for (long r = 1; r < N; ++r) mu[r] = lam[r - 1];
      out.add(mu, c * u * Scalar::monomial(1, lam[N - 1], 0, 0));
    } else {
      for (long r = 0; r + 1 < N; ++r) mu[r] = lam[r + 1];
      mu[N - 1] = lam[0];
      out.add(mu, c * u.inverse() * Scalar::monomial(1, -lam[0], 0, 0));
    }
  }
  return out;
}

PolyVector cherednik_Y(long i, const PolyVector& p, bool inverse) {
  PolyVector out;
  for (const auto& [lam, c] : p.terms()) {
    PolyIndex mu = lam;
    mu[i - 1] += inverse ? -1 : 1;
    out.add(mu, c);
  }
  return out;
}

PolyVector cherednik_X(const CherednikConfig& cfg, long i, const PolyVector& p,
                       bool inverse) {
  long N = cfg.N;
  PolyVector w = p;
  if (!inverse) {
    for (long r = i - 1; r >= 1; --r) w = cherednik_T(r, w, true);
    w = cherednik_pi(cfg.u, w, -1);
    for (long r = N - 1; r >= i; --r) w = cherednik_T(r, w);
  } else {
    for (long r = i; r <= N - 1; ++r) w = cherednik_T(r, w, true);
    w = cherednik_pi(cfg.u, w, 1);
    for (long r = 1; r <= i - 1; ++r) w = cherednik_T(r, w);
  }
  return w;
}

Scalar cherednik_eigenvalue(const CherednikConfig& cfg,
                            const std::vector<long>& lambda, long i) {
  return cfg.u.inverse() *
         Scalar::monomial(1, -lambda[i - 1], -ell_stat(lambda, i), 0);
}

namespace {

// all weakly decreasing integer vectors dominated by lamp (same length, same
// sum, prefix sums bounded by those of lamp)
void enum_dominated(const std::vector<long>& lamp, std::vector<long>& cur,
                    long pos, long remaining, long prefix,
                    std::vector<std::vector<long>>& out) {
  long N = (long)lamp.size();
  if (pos == N) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  long cap = pos == 0 ? lamp[0] : cur[pos - 1];
  long lamp_prefix = 0;
  for (long r = 0; r <= pos; ++r) lamp_prefix += lamp[r];
  for (long x = cap; x >= lamp.back(); --x) {
    // remaining entries are <= x, so they can carry at most x*(N-1-pos)
    if (remaining - x > x * (N - 1 - pos)) break;
    if (prefix + x > lamp_prefix) continue;
    cur[pos] = x;
    enum_dominated(lamp, cur, pos + 1, remaining - x, prefix + x, out);
  }
}

}  // namespace

PolyVector nonsym_macdonald(const CherednikConfig& cfg,
                            const std::vector<long>& lambda) {
  long N = cfg.N;
  if ((long)lambda.size() != N)
    throw math_error("nonsym_macdonald: composition length mismatch");

  std::vector<long> lamp = lambda;
  std::sort(lamp.begin(), lamp.end(), std::greater<long>());
  long total = std::accumulate(lamp.begin(), lamp.end(), 0L);

  // the composition-order downset of lambda: permutations of partitions
  // dominated by sort(lambda), filtered through the order itself
  std::vector<std::vector<long>> parts;
  std::vector<long> cur(N);
  enum_dominated(lamp, cur, 0, total, 0, parts);
  std::vector<std::vector<long>> downset;
  for (auto& nu : parts) {
    std::sort(nu.begin(), nu.end());
    do {
      auto rel = prec_compare(nu, lambda);
      if (rel == PrecOrder::less || rel == PrecOrder::equal)
        downset.push_back(nu);
    } while (std::next_permutation(nu.begin(), nu.end()));
  }

  std::map<std::vector<long>, std::vector<Scalar>> eig;
  for (const auto& mu : downset) {
    std::vector<Scalar> e;
    for (long i = 1; i <= N; ++i) e.push_back(cherednik_eigenvalue(cfg, mu, i));
    eig[mu] = e;
  }
  const std::vector<Scalar>& elam = eig.at(lambda);

  // triangular back-substitution, processing maximal unresolved terms first
  PolyVector result{PolyIndex(lambda)};
  std::vector<std::vector<long>> pending;
  for (const auto& mu : downset)
    if (mu != lambda) pending.push_back(mu);

  std::map<std::pair<long, std::vector<long>>, PolyVector> x_img;
  auto x_image = [&](long i, const std::vector<long>& nu) -> const PolyVector& {
    auto key = std::make_pair(i, nu);
    auto it = x_img.find(key);
    if (it == x_img.end())
      it = x_img.emplace(key, cherednik_X(cfg, i, PolyVector(PolyIndex(nu))))
               .first;
    return it->second;
  };

  while (!pending.empty()) {
    size_t pick = pending.size();
    for (size_t a = 0; a < pending.size(); ++a) {
      bool maximal = true;
      for (size_t b = 0; b < pending.size(); ++b)
        if (b != a && prec_compare(pending[a], pending[b]) == PrecOrder::less) {
          maximal = false;
          break;
        }
      if (maximal) {
        pick = a;
        break;
      }
    }
    std::vector<long> mu = pending[pick];
    pending.erase(pending.begin() + (long)pick);

    long which = 0;
    for (long i = 1; i <= N; ++i)
      if (!(eig.at(mu)[i - 1] == elam[i - 1])) {
        which = i;
        break;
      }
    if (which == 0) throw math_error("non-generic parameters");

    // coefficient of Y^mu in X_which applied to the resolved part
    Scalar num;
    for (const auto& [nu, c] : result.terms())
      num = num + c * x_image(which, std::vector<long>(nu.begin(), nu.end()))
                          .coeff(PolyIndex(mu));
    Scalar denom = elam[which - 1] - eig.at(mu)[which - 1];
    result.add(PolyIndex(mu), num / denom);
  }
  return result;
}

}  // namespace qfock
