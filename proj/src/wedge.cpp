#include "qfock/wedge.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qfock/tensor_rep.hpp"

namespace qfock {

namespace {

Scalar vpow(long k) { return Scalar::monomial(1, 0, k, 0); }

long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// [N]_v^{+/-} = sum of v^{+/-2p}
Scalar bracket_plus(long N) {
  Scalar s;
  for (long p = 0; p < N; ++p) s = s + vpow(2 * p);
  return s;
}
Scalar bracket_minus(long N) {
  Scalar s;
  for (long p = 0; p < N; ++p) s = s + vpow(-2 * p);
  return s;
}

// two-slot normal ordering of e_l ^ e_h for l >= h, memoized
using PairRule = std::vector<std::tuple<long, long, Scalar>>;
const PairRule& normal_pair(long n, long l, long h) {
  static std::map<std::tuple<long, long, long>, PairRule> cache;
  auto key = std::make_tuple(n, l, h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PairRule rule;
  long d = l - h;
  if (d > 0) {
    long s = d % n, k = d / n;
    if (s == 0) {
      rule.emplace_back(h, l, Scalar(-1));
    } else if (k == 0) {
      rule.emplace_back(h, l, -vpow(1));
    } else {
      rule.emplace_back(h, l, -vpow(1));
      rule.emplace_back(l - n * k, h + n * k, Scalar(-1));
      for (const auto& [a, b, c] : normal_pair(n, h + n * k, l - n * k))
        rule.emplace_back(a, b, c * (-vpow(1)));
    }
  }
  cache[key] = std::move(rule);
  return cache.at(key);
}

}  // namespace

WedgeVector straighten(long n, const std::vector<long>& raw,
                       const Scalar& coeff) {
  if (coeff.is_zero()) return WedgeVector();
  static std::map<std::pair<long, std::vector<long>>, WedgeVector> cache;
  auto key = std::make_pair(n, raw);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second * coeff;

  WedgeVector out;
  // worklist keyed by index vector so coefficients of identical partially
  // ordered states merge instead of fanning out into separate branches
  std::map<std::vector<long>, Scalar> work;
  work.emplace(raw, Scalar(1));
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const std::vector<long>& idx = node.key();
    Scalar c = std::move(node.mapped());
    if (c.is_zero()) continue;
    size_t bad = idx.size();
    for (size_t r = 0; r + 1 < idx.size(); ++r)
      if (idx[r] >= idx[r + 1]) {
        bad = r;
        break;
      }
    if (bad == idx.size()) {
      out.add(idx, c);
      continue;
    }
    if (idx[bad] == idx[bad + 1]) continue;  // repeated factor
    for (const auto& [a, b, pc] : normal_pair(n, idx[bad], idx[bad + 1])) {
      std::vector<long> next = idx;
      next[bad] = a;
      next[bad + 1] = b;
      auto [it, fresh] = work.emplace(std::move(next), c * pc);
      if (!fresh) it->second = it->second + c * pc;
    }
  }
  const WedgeVector& stored = cache.emplace(key, std::move(out)).first->second;
  return stored * coeff;
}

bool pauli_zero(long n, long m, const std::vector<long>& ks) {
  (void)n;
  long N = (long)ks.size();
  long total = 0;
  for (long i = 1; i <= N; ++i) {
    if (ks[i - 1] >= N - m) return false;
    total += i - m - ks[i - 1];
  }
  return total < N;
}

WedgeVector charged_wedge(const std::vector<long>& lambda, long N, long m) {
  WedgeIndex idx(N);
  for (long i = 0; i < N; ++i) {
    long part = i < (long)lambda.size() ? lambda[i] : 0;
    idx[i] = -part + i - m;
  }
  return WedgeVector(idx);
}

WedgeVector vacuum_wedge(long N, long m) { return charged_wedge({}, N, m); }

WedgeVector vertex_phi(long n, long k, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms()) {
    std::vector<long> raw;
    raw.push_back(k);
    raw.insert(raw.end(), idx.begin(), idx.end());
    out += straighten(n, raw, c);
  }
  return out;
}

WedgeVector vertex_psi(long n, long k, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms()) {
    std::vector<long> raw = idx;
    raw.push_back(k);
    out += straighten(n, raw, c);
  }
  return out;
}

namespace {

// pair action of the exchange operator on e_a (x) e_b, via the two-site module
std::vector<std::tuple<long, long, Scalar>> pair_exchange(long n, long a,
                                                          long b) {
  static std::map<std::tuple<long, long, long>,
                  std::vector<std::tuple<long, long, Scalar>>>
      cache;
  auto key = std::make_tuple(n, a - b, 0L);
  auto it = cache.find(key);
  if (it == cache.end()) {
    RepConfig cfg{n, 0, 2, {}};
    for (long r = 0; r < n; ++r) cfg.u_params.push_back(Scalar(1));
    long lo = std::min(a, b);
    TensorVector img = apply_T(cfg, 1, TensorVector(TensorIndex{a, b}));
    std::vector<std::tuple<long, long, Scalar>> rel;
    for (const auto& [ks, c] : img.terms())
      rel.emplace_back(ks[0] - lo, ks[1] - lo, c);
    it = cache.emplace(key, std::move(rel)).first;
  }
  std::vector<std::tuple<long, long, Scalar>> out;
  long lo = std::min(a, b);
  for (const auto& [da, db, c] : it->second)
    out.emplace_back(lo + da, lo + db, c);
  return out;
}

using SlotExpansion = LinComb<std::pair<long, WedgeIndex>>;

// Expansion scaled by [N]_v^+ so every coefficient stays polynomial
// (no fraction normalization inside the recursion); callers divide once.
const SlotExpansion& slot_expand_scaled(long n, const WedgeIndex& w,
                                        bool first) {
  static std::map<std::tuple<long, WedgeIndex, bool>, SlotExpansion> cache;
  auto key = std::make_tuple(n, w, first);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  long N = (long)w.size();
  SlotExpansion out;
  if (N == 1) {
    out.add({w[0], WedgeIndex{}}, Scalar(1));
  } else {
    long boundary = first ? w.front() : w.back();
    WedgeIndex rest(first ? w.begin() + 1 : w.begin(),
                    first ? w.end() : w.end() - 1);
    const SlotExpansion& inner = slot_expand_scaled(n, rest, first);
    // inner carries [N-1]^+ * (true values); the extra [N-1]^+ in the
    // exchange coefficient cancels it, so the cross factor is just -v and
    // the stored values are [N]^+ * (true values) -- fraction-free.
    Scalar cross = -vpow(1);
    out.add({boundary, rest}, vpow(2 * N - 2));
    for (const auto& [sk, c1] : inner.terms()) {
      const auto& [s, sub] = sk;
      // exchange the boundary letter past the adjacent inner slot
      auto rel = first ? pair_exchange(n, boundary, s)
                       : pair_exchange(n, s, boundary);
      for (const auto& [alpha, beta, c2] : rel) {
        long new_boundary = first ? alpha : beta;
        long inserted = first ? beta : alpha;
        std::vector<long> raw;
        if (first) {
          raw.push_back(inserted);
          raw.insert(raw.end(), sub.begin(), sub.end());
        } else {
          raw = sub;
          raw.push_back(inserted);
        }
        WedgeVector fixed = straighten(n, raw, c1 * c2 * cross);
        for (const auto& [idx, c3] : fixed.terms())
          out.add({new_boundary, idx}, c3);
      }
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

SlotExpansion slot_expand(long n, const WedgeIndex& w, bool first) {
  SlotExpansion out = slot_expand_scaled(n, w, first);
  return out * bracket_plus((long)w.size()).inverse();
}

}  // namespace

LinComb<std::pair<long, WedgeIndex>> first_slot_expand(long n,
                                                       const WedgeIndex& w) {
  return slot_expand(n, w, true);
}

LinComb<std::pair<long, WedgeIndex>> last_slot_expand(long n,
                                                      const WedgeIndex& w) {
  return slot_expand(n, w, false);
}

WedgeVector vertex_phi_star(long n, long k, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms()) {
    SlotExpansion exp = slot_expand(n, idx, true);
    for (const auto& [sk, c1] : exp.terms())
      if (sk.first == -k) out.add(sk.second, c * c1);
  }
  return out;
}

WedgeVector vertex_psi_star(long n, long k, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms()) {
    SlotExpansion exp = slot_expand(n, idx, false);
    for (const auto& [sk, c1] : exp.terms())
      if (sk.first == -k) out.add(sk.second, c * c1);
  }
  return out;
}

Scalar tilde_normalize(TildeOp which, long n, long k, long N, long m) {
  switch (which) {
    case TildeOp::PhiStar:
      return bracket_plus(N);
    case TildeOp::Psi: {
      Scalar f = vpow(floordiv(N - 1 - m - k, n) - N);
      return (N % 2 == 0) ? f : -f;
    }
    case TildeOp::PsiStar: {
      Scalar f = bracket_minus(N) * vpow(N - 1 - floordiv(N - 1 - m + k, n));
      return (N % 2 == 1) ? f : -f;
    }
  }
  throw math_error("tilde_normalize: unknown operator");
}

WedgeVector apply_b(long n, long j, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms())
    for (size_t r = 0; r < idx.size(); ++r) {
      std::vector<long> raw = idx;
      raw[r] += j * n;
      out += straighten(n, raw, c);
    }
  return out;
}

WedgeVector bar_involution(long n, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms()) {
    long N = (long)idx.size();
    long p = 0;
    for (long r = 0; r < N; ++r)
      for (long s = r + 1; s < N; ++s)
        if (((idx[r] - idx[s]) % n + n) % n != 0) ++p;
    std::vector<long> rev(idx.rbegin(), idx.rend());
    Scalar factor = c.bar_v() * vpow(-p);
    if ((N * (N - 1) / 2) % 2 == 1) factor = -factor;
    out += straighten(n, rev, factor);
  }
  return out;
}

WedgeVector embed(long n, long m, long R, const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [idx, c] : w.terms()) {
    long N = (long)idx.size();
    std::vector<long> raw = idx;
    for (long t = N; t < R; ++t) raw.push_back(t - m);
    out += straighten(n, raw, c);
  }
  return out;
}

long a_stat(long n, const WedgeIndex& idx, long k) {
  long count = 0;
  for (long i : idx)
    if (((i - k) % n + n) % n != 0) ++count;
  return count;
}

}  // namespace qfock
