#pragma once

// The semi-infinite wedge space: vectors are finite sums of charged
// partitions |lambda>_{infty,m} truncated at a degree bound, and operators
// are stabilized limits of the finite-wedge families (Heisenberg modes B_k,
// the four hatted vertex operators, the Chevalley-type modes P_{0,j},
// P_{1,b}, P_{-1,b}, and the diagonal slope families).
//
// Coefficient convention: throughout this module Scalar exponents count
// powers of q^(1/n), v^(1/n), u^(1/n) (exponent unit L = n).  Finite-wedge
// coefficients computed in whole-power units are converted with
// Scalar::stretch(n) at the boundary.

#include "qfock/lincomb.hpp"
#include "qfock/wedge.hpp"

#include <vector>

namespace qfock {

using Partition = std::vector<long>;  // weakly decreasing, no trailing zeros

struct ChevalleyConfig {
  long n = 1;
  long nprime = 0;  // gcd(n, nprime) = 1
};

// c = v^{-n}, c' = v^{-n'}: the two central values of the action.
Scalar central_c(const ChevalleyConfig& cfg);
Scalar central_cprime(const ChevalleyConfig& cfg);

struct SemiVector {
  long charge_m = 0;
  long trunc = 0;  // max |lambda| represented; larger degrees are cut off
  LinComb<Partition> terms;

  bool is_zero() const { return terms.is_zero(); }
  long max_degree() const;  // largest |lambda| present (0 if zero)
  std::string str(long L = 1) const;

  SemiVector operator+(const SemiVector& o) const;
  SemiVector operator-(const SemiVector& o) const;
  SemiVector operator*(const Scalar& c) const;
  SemiVector operator-() const;
  bool operator==(const SemiVector& o) const {
    return charge_m == o.charge_m && terms == o.terms;
  }
};

// |lambda>_{infty,m} with the given truncation bound; |lambda| <= trunc.
SemiVector semi_basis(const Partition& lambda, long m, long trunc);

// Quotient coordinates of a finite wedge at charge m: mu_i = i - m - k_i
// (1-based slots).  Terms whose top index reaches the vacuum-tail bound
// N - m are dropped (they duplicate a narrower wedge), as are partitions
// beyond trunc.  Coefficients are stretched into the fine unit 1/n.
LinComb<Partition> wedge_classes(long n, const WedgeVector& w, long m,
                                 long trunc);

// B_k = stabilized limit of b_k = sum_i Y_i^k (k != 0); raises the degree by
// -kn when k < 0.  Throws on truncation overflow or failed stabilization.
SemiVector heisenberg_B(const ChevalleyConfig& cfg, long k,
                        const SemiVector& v);

// Stabilized limits of the (tilde-normalized) vertex operators:
//   Phi     = lim Phi_k          (charge m -> m+1)
//   Psi     = lim ~Psi_k         (charge m -> m+1)
//   PhiStar = lim [N]^+ Phi*_k   (charge m -> m-1)
//   PsiStar = lim ~Psi*_k        (charge m -> m-1)
enum class HatVertexOp { Phi, Psi, PhiStar, PsiStar };
SemiVector hat_vertex(const ChevalleyConfig& cfg, HatVertexOp which, long k,
                      const SemiVector& v);

// Heisenberg-type Chevalley modes: P_{0,-j} = q^j B_{-j} for j > 0 and
// P_{0,j} = ((q^j - 1)/(v^{-2j} q^j - 1)) v^{-jn} B_j.
SemiVector chevalley_P0(const ChevalleyConfig& cfg, long j,
                        const SemiVector& v);

// P_{1,b}: the mode sum u^{-1/n} v^{(m+1)/n} q sum_k qt^{(-k-n'-nb)/n}
// HatPsi_{k+n'+nb} HatPhi*_{-k} with qt = v^{-1} q, evaluated as a finite
// sum: directly when n'+nb < 0, otherwise through the telescoped form
// (1 - q^{-1} v^2)^{-1} sum_k qt^{...} (HatPsi_{k+d} HatPhi*_{-k}
//  - v HatPsi_{k+d-n} HatPhi*_{-k+n}), whose terms vanish for large k.
// Scan-bound overruns raise an internal-consistency error.
SemiVector chevalley_P1(const ChevalleyConfig& cfg, long b,
                        const SemiVector& v);

// P_{-1,b} = v^{-nb} u^{1/n} v^{-(m+1)/n} sum_k qt^{k/n}
// HatPhi_{k-n'+nb} HatPsi*_{-k}, with the mirrored telescoped form
// (1 - q v^{-2})^{-1} sum_k qt^{k/n} (T_k - v^{-1} T_{k-n}) when
// -n'+nb >= 0.
SemiVector chevalley_Pm1(const ChevalleyConfig& cfg, long b,
                         const SemiVector& v);

// Stabilized slope families (k > 0):
//   MMp:    lim v^{kmN/n} q^k sum_i A_i^{-k}         = P_{km,-km'}
//   NNp:    lim of v^{kN}  q^k sum_i B_i^{-k} with the divergent diagonal
//           series subtracted and u^{-k} v^k q^k / (1-(v^2 q^{-1})^k) added
//                                                    = P_{kn,-kn'}
//   NegNNp: the mirrored family                       = P_{-kn,kn'}
enum class SlopeFamily { MMp, NNp, NegNNp };
SemiVector slope_P(const ChevalleyConfig& cfg, long k, SlopeFamily which,
                   const SemiVector& v);

}  // namespace qfock
