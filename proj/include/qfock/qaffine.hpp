#pragma once

// Chevalley generators E_i, F_i, K_i (i mod n) of the quantum affine
// algebra attached to sl_n, acting on
//   - tensor words      e_{k_1} (x) ... (x) e_{k_N}   (coproduct-expanded),
//   - finite wedges     (the action commutes with the Hecke operators, so
//                        it descends to the straightened basis),
//   - truncated charged partitions (stabilized limit, with the width-
//     dependent twist K_i -> v^{d(i,r)} K_i, F_i -> v^{d(i,r)} F_i where
//     r = N - 1 - m mod n, recomputed at every width).
//
// On one letter: E_i e_j = d(i=j) e_{j+1}, F_i e_j = d(i=j-1) e_{j-1},
// K_i e_j = v^{d(i=j-1) - d(i=j)} e_j, all congruences mod n; the
// coproduct is D(E) = E (x) 1 + K^{-1} (x) E, D(F) = F (x) K + 1 (x) F,
// D(K) = K (x) K.
//
// The module also houses the operator-identity batch checks tying this
// action to the vertex operators: the intertwining relations of Phi*_k,
// the bilinear exchange of two dual vertex currents, and the eight
// Heisenberg/vertex commutators.

#include "qfock/report.hpp"
#include "qfock/semi_infinite.hpp"
#include "qfock/tensor_rep.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

enum class QAffineKind { E, F, K, Kinv };

struct QAffineGen {
  QAffineKind kind = QAffineKind::K;
  long i = 0;  // taken mod n
};

TensorVector qaffine_apply(const RepConfig& cfg, const QAffineGen& g,
                           const TensorVector& w);
WedgeVector qaffine_apply(long n, const QAffineGen& g, const WedgeVector& w);
// Stabilized action on the truncated charged-partition space; throws on
// truncation overflow (F_i raises the degree by one) or failed
// stabilization.
SemiVector qaffine_apply(const ChevalleyConfig& cfg, const QAffineGen& g,
                         const SemiVector& v);

// Verifies, for all i mod n and k in [kmin, kmax]:
//   - the finite intertwining relations of Phi*_k against E_i, K_i, F_i on
//     width-N charged wedges |lambda>_{N,m}, |lambda| <= deg;
//   - the same relations for the stabilized HatPhi*_k against the
//     stabilized action on charged partitions.
CheckReport intertwiner_check(long n, long N, long m, long kmin, long kmax,
                              long deg = 2);

// Verifies the mode coefficients of
//   (v^2 z1 - z2) Phi*_(alpha)(z1) Phi*_(alpha)(z2)
//     = (v^2 z2 - z1) Phi*_(alpha)(z2) Phi*_(alpha)(z1),
// where Phi*_(alpha)(z) = sum_k Phi*_{-alpha+nk} z^{-k}, for mode pairs in
// a [-window, window]^2 box: the finite width-N version with the full
// window, and the stabilized hatted version with the (cheaper) hat_window.
CheckReport bilinear_exchange_check(long n, long alpha, long window, long N,
                                    long m, long hat_window = 1);

// Verifies the eight commutators of the Heisenberg modes with the hatted
// vertex operators for j in [1, jmax], k in [-kmax, kmax], e.g.
//   [B_j, HatPhi_k] = HatPhi_{k+nj},   [B_j, HatPhi*_k] = -v^{2jn}
//   HatPhi*_{k+nj}, and the remaining rows, on charged partitions of size
// <= deg at charge m.
CheckReport heis_vertex_commutator_check(long n, long nprime, long jmax,
                                         long kmax, long m = 0, long deg = 1);

}  // namespace qfock
