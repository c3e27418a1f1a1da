#include "qfock/qaffine.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace qfock {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

bool cong(long n, long a, long b) { return mod(a - b, n) == 0; }

Scalar vpow(long e, long unit) { return Scalar::monomial(1, 0, e * unit, 0); }

std::string part_str(const std::vector<long>& lam) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
  os << ")";
  return os.str();
}

void expect(CheckReport& rep, bool good, const std::string& what) {
  ++rep.checked;
  if (!good) rep.failures.push_back(what);
}

}  // namespace

TensorVector qaffine_apply(const RepConfig& cfg, const QAffineGen& g,
                           const TensorVector& w) {
  long n = cfg.n, i = mod(g.i, n);
  TensorVector out;
  for (const auto& [ks, c] : w.terms()) {
    long N = (long)ks.size();
    switch (g.kind) {
      case QAffineKind::K:
      case QAffineKind::Kinv: {
        long e = 0;
        for (long j = 0; j < N; ++j)
          e += (cong(n, i, ks[j] - 1) ? 1 : 0) - (cong(n, i, ks[j]) ? 1 : 0);
        if (g.kind == QAffineKind::Kinv) e = -e;
        out.add(ks, c * vpow(e, cfg.unit));
        break;
      }
      case QAffineKind::E: {
        // E on slot r, K^{-1} on the slots to its left
        for (long r = 0; r < N; ++r) {
          if (!cong(n, i, ks[r])) continue;
          long e = 0;
          for (long j = 0; j < r; ++j)
            e += (cong(n, i, ks[j]) ? 1 : 0) - (cong(n, i, ks[j] - 1) ? 1 : 0);
          TensorIndex next = ks;
          ++next[r];
          out.add(next, c * vpow(e, cfg.unit));
        }
        break;
      }
      case QAffineKind::F: {
        // F on slot r, K on the slots to its right
        for (long r = 0; r < N; ++r) {
          if (!cong(n, i, ks[r] - 1)) continue;
          long e = 0;
          for (long j = r + 1; j < N; ++j)
            e += (cong(n, i, ks[j] - 1) ? 1 : 0) - (cong(n, i, ks[j]) ? 1 : 0);
          TensorIndex next = ks;
          --next[r];
          out.add(next, c * vpow(e, cfg.unit));
        }
        break;
      }
    }
  }
  return out;
}

WedgeVector qaffine_apply(long n, const QAffineGen& g, const WedgeVector& w) {
  RepConfig cfg;
  cfg.n = n;
  WedgeVector out;
  for (const auto& [ks, c] : w.terms()) {
    TensorVector img = qaffine_apply(cfg, g, TensorVector(ks));
    for (const auto& [idx, d] : img.terms()) out += straighten(n, idx, c * d);
  }
  return out;
}

SemiVector qaffine_apply(const ChevalleyConfig& cfg, const QAffineGen& g,
                         const SemiVector& v) {
  long n = cfg.n, m = v.charge_m, i = mod(g.i, n);
  if (g.kind == QAffineKind::F && v.max_degree() + 1 > v.trunc)
    throw math_error("qaffine_apply: truncation overflow (degree " +
                     std::to_string(v.max_degree()) +
                     " + 1 exceeds trunc " + std::to_string(v.trunc) + ")");

  // image of |lambda>_{N,m} with the width-dependent twist, in quotient
  // coordinates
  auto eval = [&](long N, const Partition& lam) {
    long r = mod(N - 1 - m, n);
    WedgeVector img = qaffine_apply(n, g, charged_wedge(lam, N, m));
    LinComb<Partition> out = wedge_classes(n, img, m, v.trunc);
    long tw = 0;
    if (g.kind == QAffineKind::K || g.kind == QAffineKind::F)
      tw = (i == r) ? 1 : 0;
    else if (g.kind == QAffineKind::Kinv)
      tw = (i == r) ? -1 : 0;
    if (tw != 0) out = out * vpow(tw, n);
    return out;
  };

  using Key = std::tuple<int, long, long, Partition, long, long>;
  static std::map<Key, LinComb<Partition>> memo;

  long N0 = v.trunc + std::labs(m) + n + 2;
  SemiVector out{m, v.trunc, {}};
  for (const auto& [lam, c] : v.terms.terms()) {
    Key key{(int)g.kind, i, n, lam, m, v.trunc};
    auto it = memo.find(key);
    if (it == memo.end()) {
      LinComb<Partition> r1 = eval(N0, lam), r2 = eval(N0 + 1, lam);
      if (!(r1 == r2))
        throw math_error("qaffine_apply: stabilization not reached between "
                         "widths " +
                         std::to_string(N0) + " and " + std::to_string(N0 + 1));
      it = memo.emplace(key, std::move(r1)).first;
    }
    for (const auto& [mu, d] : it->second.terms()) out.terms.add(mu, c * d);
  }
  return out;
}

namespace {

std::vector<std::vector<long>> partitions_up_to(long d) {
  std::vector<std::vector<long>> out{{}};
  for (long tot = 1; tot <= d; ++tot) {
    std::vector<long> cur;
    // enumerate partitions of tot with parts <= prev
    std::function<void(long, long)> rec = [&](long rest, long maxp) {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (long p = std::min(rest, maxp); p >= 1; --p) {
        cur.push_back(p);
        rec(rest - p, p);
        cur.pop_back();
      }
    };
    rec(tot, tot);
  }
  return out;
}

}  // namespace

CheckReport intertwiner_check(long n, long N, long m, long kmin, long kmax,
                              long deg) {
  CheckReport rep;
  rep.name = "intertwiner(n=" + std::to_string(n) + ",N=" + std::to_string(N) +
             ",m=" + std::to_string(m) + ")";
  auto lams = partitions_up_to(deg);

  // Finite layer: Phi*_k against the width-N generators on charged wedges.
  for (long k = kmin; k <= kmax; ++k) {
    for (long i = 0; i < n; ++i) {
      long d1 = cong(n, i + k, -1) ? 1 : 0;  // delta(i+k = -1)
      long d0 = cong(n, i + k, 0) ? 1 : 0;   // delta(i+k = 0)
      QAffineGen E{QAffineKind::E, i}, F{QAffineKind::F, i},
          K{QAffineKind::K, i};
      for (const auto& lam : lams) {
        WedgeVector w = charged_wedge(lam, N, m);
        std::string ctx = " at i=" + std::to_string(i) +
                          " k=" + std::to_string(k) + " lam=" + part_str(lam);
        // K relation
        WedgeVector lhsK = vertex_phi_star(n, k, qaffine_apply(n, K, w));
        WedgeVector rhsK =
            qaffine_apply(n, K, vertex_phi_star(n, k, w)) * vpow(d1 - d0, 1);
        expect(rep, lhsK == rhsK, "finite K relation" + ctx);
        // E relation
        WedgeVector lhsE = vertex_phi_star(n, k, qaffine_apply(n, E, w));
        WedgeVector rhsE =
            qaffine_apply(n, E, vertex_phi_star(n, k, w)) * vpow(d0 - d1, 1);
        if (d1) rhsE += vertex_phi_star(n, k + 1, w);
        expect(rep, lhsE == rhsE, "finite E relation" + ctx);
        // F relation
        WedgeVector lhsF = vertex_phi_star(n, k, qaffine_apply(n, F, w));
        WedgeVector rhsF = qaffine_apply(n, F, vertex_phi_star(n, k, w));
        if (d0)
          rhsF += qaffine_apply(n, K, vertex_phi_star(n, k - 1, w));
        expect(rep, lhsF == rhsF, "finite F relation" + ctx);
      }
    }
  }

  // Stabilized layer: HatPhi*_k against the induced action.
  ChevalleyConfig cfg{n, mod(1, n)};  // nprime unused by these operators
  long span = std::max(std::labs(kmin), std::labs(kmax));
  long trunc = deg + span + std::labs(m) + 3;
  for (long k = kmin; k <= kmax; ++k) {
    for (long i = 0; i < n; ++i) {
      long d1 = cong(n, i + k, -1) ? 1 : 0;
      long d0 = cong(n, i + k, 0) ? 1 : 0;
      QAffineGen E{QAffineKind::E, i}, F{QAffineKind::F, i},
          K{QAffineKind::K, i};
      for (const auto& lam : lams) {
        SemiVector w = semi_basis(lam, m, trunc);
        std::string ctx = " at i=" + std::to_string(i) +
                          " k=" + std::to_string(k) + " lam=" + part_str(lam);
        auto phis = [&](long kk, const SemiVector& x) {
          return hat_vertex(cfg, HatVertexOp::PhiStar, kk, x);
        };
        SemiVector lhsK = phis(k, qaffine_apply(cfg, K, w));
        SemiVector rhsK =
            qaffine_apply(cfg, K, phis(k, w)) * vpow(d1 - d0, n);
        expect(rep, lhsK == rhsK, "hatted K relation" + ctx);
        SemiVector lhsE = phis(k, qaffine_apply(cfg, E, w));
        SemiVector rhsE =
            qaffine_apply(cfg, E, phis(k, w)) * vpow(d0 - d1, n);
        if (d1) rhsE = rhsE + phis(k + 1, w);
        expect(rep, lhsE == rhsE, "hatted E relation" + ctx);
        SemiVector lhsF = phis(k, qaffine_apply(cfg, F, w));
        SemiVector rhsF = qaffine_apply(cfg, F, phis(k, w));
        if (d0) rhsF = rhsF + qaffine_apply(cfg, K, phis(k - 1, w));
        expect(rep, lhsF == rhsF, "hatted F relation" + ctx);
      }
    }
  }
  return rep;
}

CheckReport bilinear_exchange_check(long n, long alpha, long window, long N,
                                    long m, long hat_window) {
  CheckReport rep;
  rep.name = "bilinear_exchange(n=" + std::to_string(n) +
             ",alpha=" + std::to_string(alpha) + ")";
  auto p = [&](long c) { return -alpha + n * c; };

  // Finite layer on width-N charged wedges (output width N - 2).
  for (long a = -window; a <= window; ++a)
    for (long b = -window; b <= window; ++b)
      for (const auto& lam : partitions_up_to(1)) {
        WedgeVector w = charged_wedge(lam, N, m);
        auto two = [&](long c1, long c2) {
          return vertex_phi_star(n, p(c1), vertex_phi_star(n, p(c2), w));
        };
        WedgeVector lhs = two(a + 1, b) * vpow(2, 1) - two(a, b + 1);
        WedgeVector rhs = two(b + 1, a) * vpow(2, 1) - two(b, a + 1);
        expect(rep, lhs == rhs,
               "finite exchange at a=" + std::to_string(a) +
                   " b=" + std::to_string(b) + " lam=" + part_str(lam));
      }

  // Stabilized layer.
  ChevalleyConfig cfg{n, mod(1, n)};
  long reach = std::labs(alpha) + n * (hat_window + 1);
  long trunc = 1 + 2 * reach + 2 * std::labs(m) + 4;
  for (long a = -hat_window; a <= hat_window; ++a)
    for (long b = -hat_window; b <= hat_window; ++b)
      for (const auto& lam : partitions_up_to(1)) {
        SemiVector w = semi_basis(lam, m, trunc);
        auto two = [&](long c1, long c2) {
          return hat_vertex(cfg, HatVertexOp::PhiStar, p(c1),
                            hat_vertex(cfg, HatVertexOp::PhiStar, p(c2), w));
        };
        SemiVector lhs = two(a + 1, b) * vpow(2, n) - two(a, b + 1);
        SemiVector rhs = two(b + 1, a) * vpow(2, n) - two(b, a + 1);
        expect(rep, lhs == rhs,
               "hatted exchange at a=" + std::to_string(a) +
                   " b=" + std::to_string(b) + " lam=" + part_str(lam));
      }
  return rep;
}

CheckReport heis_vertex_commutator_check(long n, long nprime, long jmax,
                                         long kmax, long m, long deg) {
  CheckReport rep;
  rep.name = "heis_vertex_commutator(n=" + std::to_string(n) +
             ",n'=" + std::to_string(nprime) + ")";
  ChevalleyConfig cfg{n, nprime};
  long trunc = deg + jmax * n + kmax + 2;
  auto lams = partitions_up_to(deg);
  for (long j = 1; j <= jmax; ++j)
    for (long k = -kmax; k <= kmax; ++k)
      for (const auto& lam : lams) {
        SemiVector w = semi_basis(lam, m, trunc);
        // comm(op, jj) = [B_jj, op_k] applied to w
        auto comm = [&](HatVertexOp op, long jj) {
          return heisenberg_B(cfg, jj, hat_vertex(cfg, op, k, w)) -
                 hat_vertex(cfg, op, k, heisenberg_B(cfg, jj, w));
        };
        auto hv = [&](HatVertexOp op, long kk) {
          return hat_vertex(cfg, op, kk, w);
        };
        std::string ctx = " at j=" + std::to_string(j) +
                          " k=" + std::to_string(k) + " lam=" + part_str(lam);
        expect(rep, comm(HatVertexOp::Phi, j) == hv(HatVertexOp::Phi, k + n * j),
               "[B_j, Phi_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::Psi, j) ==
                   hv(HatVertexOp::Psi, k + n * j) * vpow(j * (2 * n - 1), n),
               "[B_j, Psi_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::PhiStar, j) ==
                   -hv(HatVertexOp::PhiStar, k + n * j) * vpow(2 * j * n, n),
               "[B_j, Phi*_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::PsiStar, j) ==
                   -hv(HatVertexOp::PsiStar, k + n * j) * vpow(-j, n),
               "[B_j, Psi*_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::Phi, -j) == hv(HatVertexOp::Phi, k - n * j),
               "[B_-j, Phi_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::Psi, -j) ==
                   hv(HatVertexOp::Psi, k - n * j) * vpow(-j, n),
               "[B_-j, Psi_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::PhiStar, -j) ==
                   -hv(HatVertexOp::PhiStar, k - n * j),
               "[B_-j, Phi*_k]" + ctx);
        expect(rep,
               comm(HatVertexOp::PsiStar, -j) ==
                   -hv(HatVertexOp::PsiStar, k - n * j) * vpow(-j, n),
               "[B_-j, Psi*_k]" + ctx);
      }
  return rep;
}

}  // namespace qfock
