#pragma once

#include <vector>

#include "qfock/lincomb.hpp"
#include "qfock/scalar.hpp"

namespace qfock {

// e_{k_1} ^ ... ^ e_{k_N} with k_1 < ... < k_N
using WedgeIndex = std::vector<long>;
using WedgeVector = LinComb<WedgeIndex>;

// Normal-orders an arbitrary wedge word by the two-slot exchange rules:
// with l = h + nk + s, k >= 0, 0 <= s < n,
//   e_l ^ e_h = -e_h ^ e_l                                      (s = 0)
//   e_l ^ e_h = -v e_h ^ e_l                                    (k = 0)
//   e_l ^ e_h = -v e_h ^ e_l - e_{l-nk} ^ e_{h+nk} - v e_{h+nk} ^ e_{l-nk}
WedgeVector straighten(long n, const std::vector<long>& raw,
                       const Scalar& coeff = Scalar(1));

// Exclusion filter: true guarantees e_{k_1} ^ ... ^ e_{k_N} = 0
// (sum_i (i - m - k_i) < N and all k_i < N - m).
bool pauli_zero(long n, long m, const std::vector<long>& ks);

// |lambda>_{N,m} = e_{-lambda_1 - m} ^ e_{-lambda_2 + 1 - m} ^ ...
WedgeVector charged_wedge(const std::vector<long>& lambda, long N, long m);
WedgeVector vacuum_wedge(long N, long m);

// Vertex operators N -> N+1: prepend / append e_k, then straighten.
WedgeVector vertex_phi(long n, long k, const WedgeVector& w);
WedgeVector vertex_psi(long n, long k, const WedgeVector& w);

// Dual vertex operators N -> N-1: coefficient of e_{-k} in the first
// (resp. last) tensor slot of the antisymmetric representative.
WedgeVector vertex_phi_star(long n, long k, const WedgeVector& w);
WedgeVector vertex_psi_star(long n, long k, const WedgeVector& w);

// Prefactors turning the raw operators into stabilizing families:
//   PhiStar: [N]_v^+
//   Psi:     (-1)^N v^{floor((N-1-m-k)/n) - N}
//   PsiStar: (-1)^{N-1} [N]_v^- v^{N-1 - floor((N-1-m+k)/n)}
enum class TildeOp { PhiStar, Psi, PsiStar };
Scalar tilde_normalize(TildeOp which, long n, long k, long N, long m);

// b_j = Y_1^j + ... + Y_N^j: shift one index by jn, summed over slots.
WedgeVector apply_b(long n, long j, const WedgeVector& w);

// Antilinear (v -> v^{-1}) involution:
// bar(e_{i_1} ^ ... ^ e_{i_N}) = (-1)^{N(N-1)/2} v^{-p} e_{i_N} ^ ... ^ e_{i_1}
// where p counts pairs with distinct residues mod n.
WedgeVector bar_involution(long n, const WedgeVector& w);

// phi^{(m)}_{R,N}: wedge with the vacuum tail e_{N-m} ^ ... ^ e_{R-1-m}.
WedgeVector embed(long n, long m, long R, const WedgeVector& w);

// number of r with i_r not congruent to k mod n
long a_stat(long n, const WedgeIndex& idx, long k);

// Expansions of the antisymmetric tensor representative by one boundary slot:
// w = sum_t e_t (x) w_t (first) or w = sum_t w_t (x) e_t (last), with each
// w_t returned as a wedge vector.  Exposed for oracle tests.
LinComb<std::pair<long, WedgeIndex>> first_slot_expand(long n,
                                                       const WedgeIndex& w);
LinComb<std::pair<long, WedgeIndex>> last_slot_expand(long n,
                                                      const WedgeIndex& w);

}  // namespace qfock
