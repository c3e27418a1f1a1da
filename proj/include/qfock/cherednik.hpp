#pragma once

#include <vector>

#include "qfock/lincomb.hpp"
#include "qfock/scalar.hpp"

namespace qfock {

// Laurent polynomials in Y_1,...,Y_N, stored as maps exponent -> coefficient.
using PolyIndex = std::vector<long>;
using PolyVector = LinComb<PolyIndex>;

struct CherednikConfig {
  long N = 1;
  Scalar u = Scalar(1);
};

// Demazure-Lusztig operator T_i = v*s_i + (v - v^{-1}) (s_i - 1)/(Y_i/Y_{i+1} - 1)
// acting on Laurent polynomials (1 <= i <= N-1).
PolyVector cherednik_T(long i, const PolyVector& p, bool inverse = false);

// pi(Y^lambda) = u q^{lambda_N} Y_1^{lambda_N} Y_2^{lambda_1} ... Y_N^{lambda_{N-1}}
PolyVector cherednik_pi(const Scalar& u, const PolyVector& p, int power);

// Multiplication by Y_i^{pm 1}.
PolyVector cherednik_Y(long i, const PolyVector& p, bool inverse = false);

// X_i = T_i ... T_{N-1} pi^{-1} T_1^{-1} ... T_{i-1}^{-1} (factors applied
// right to left).
PolyVector cherednik_X(const CherednikConfig& cfg, long i, const PolyVector& p,
                       bool inverse = false);

// Nonsymmetric Macdonald polynomial E_lambda: the unique simultaneous
// eigenvector of X_1,...,X_N of the form Y^lambda + (lower terms in the
// composition order).  Throws math_error("non-generic parameters") if an
// eigenvalue collision makes the triangular solve ill-posed.
PolyVector nonsym_macdonald(const CherednikConfig& cfg,
                            const std::vector<long>& lambda);

// Eigenvalue of X_i on E_lambda: u^{-1} q^{-lambda_i} v^{-l_i(lambda)}.
Scalar cherednik_eigenvalue(const CherednikConfig& cfg,
                            const std::vector<long>& lambda, long i);

}  // namespace qfock
