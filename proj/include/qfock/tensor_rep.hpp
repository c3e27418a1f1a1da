#pragma once

// The double affine Hecke algebra H_N acting on (C^n)^{tensor N}[Y^{+-1}]:
// generators T_i, pi, X_i, Y_i, the pair exchange operators G_{ij}, the
// slot operators kappa_i and D_i, the degree-zero/one words B_i and A_i,
// and the v-antisymmetrizer.
//
// Basis vectors are e_{k_1} (x) ... (x) e_{k_N} with k_r in Z, where
// e_{k+n} = Y e_k identifies the Laurent part with index shifts by n.

#include "qfock/lincomb.hpp"

#include <vector>

namespace qfock {

struct RepConfig {
  long n = 1;       // rank: e_0..e_{n-1} span C^n
  long n_tw = 0;    // twist
  long N = 1;       // number of tensor factors
  std::vector<Scalar> u_params;  // u_0..u_{n-1}, all nonzero
  // Exponent unit of the built-in v and q factors; unit = f means the
  // representation is written with exponents counting powers of the f-th
  // roots of v and q (u_params must use the same convention).
  long unit = 1;

  // u = u_0 ... u_{n-1} q^{1-n}
  Scalar u_total() const;
};

using TensorIndex = std::vector<long>;  // (k_1,...,k_N)
using TensorVector = LinComb<TensorIndex>;

long tensor_degree(const TensorIndex& ks);  // sum of indices

// T_i on slots (i, i+1), 1-based; inverse applies T_i^{-1} = T_i - (v-v^{-1}).
TensorVector apply_T(const RepConfig& cfg, long i, const TensorVector& w,
                     bool inverse = false);

// pi (power = +1) or pi^{-1} (power = -1).
TensorVector apply_pi(const RepConfig& cfg, const TensorVector& w, int power);

// kappa_i^p (index shift by -p on slot i) and D_i^{+-1}.
TensorVector apply_kappa(const RepConfig& cfg, long i, long p,
                         const TensorVector& w);
TensorVector apply_D(const RepConfig& cfg, long i, const TensorVector& w,
                     bool inverse = false);

enum class XYGen { X, Xinv, Y, Yinv };
TensorVector apply_XY(const RepConfig& cfg, XYGen g, long i,
                      const TensorVector& w);

// G_{ij} = T s on the ordered slot pair (i, j); i != j.
TensorVector apply_G(const RepConfig& cfg, long i, long j,
                     const TensorVector& w, bool inverse = false);

// The letter sequences spelling B_1 and A_1 for a coprime slope (n, n').
struct SlopeData {
  long n = 1, nprime = 0;  // coprime, n > 0, n' >= 0
  long m = 0, mprime = 1;  // n m' - n' m = 1, 0 <= m < n
  enum Letter { LetterY, LetterXinv };
  std::vector<Letter> word_B;  // B_1 = Z_1 ... Z_{n+n'}
  std::vector<Letter> word_A;  // A_1 = W_1 ... W_{m+m'}
};
SlopeData slope_words(long n, long nprime);  // throws on non-coprime input

enum class SlopeGen { B, Binv, A, Ainv };
// B_i / A_i (or inverses) via the pairwise-exchange factorization; requires
// gcd(cfg.n, cfg.n_tw) = 1 and cfg.n_tw >= 0.
TensorVector apply_slope_gen(const RepConfig& cfg, SlopeGen which, long i,
                             const TensorVector& w);
// Same operator through the raw word in T, Y, pi; test oracle.
TensorVector apply_slope_gen_word(const RepConfig& cfg, SlopeGen which, long i,
                                  const TensorVector& w);

// v-antisymmetrizer S_- on all N slots (level-by-level factorized form).
TensorVector antisymmetrize(const RepConfig& cfg, const TensorVector& w);
// N!-term definition, usable for small N; test oracle.
TensorVector antisymmetrize_bruteforce(const RepConfig& cfg,
                                       const TensorVector& w);

// A_lambda = A_1^{lambda_1} ... A_N^{lambda_N} applied to e_0 (x) ... (x) e_0.
TensorVector monomial_A_basis(const RepConfig& cfg,
                              const std::vector<long>& lambda);

// The partial order on compositions: orbit-dominance, then the root order
// within an orbit.
enum class PrecOrder { less, greater, equal, incomparable };
PrecOrder prec_compare(const std::vector<long>& lambda,
                       const std::vector<long>& mu);

// l_i^{(lambda)} = #{j : lambda_j > lambda_i} + #{j < i : lambda_j = lambda_i}
//                - #{j : lambda_j < lambda_i} - #{j > i : lambda_j = lambda_i}
long ell_stat(const std::vector<long>& lambda, long i);  // i is 1-based

}  // namespace qfock
