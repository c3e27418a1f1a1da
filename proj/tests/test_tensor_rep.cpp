#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qfock/tensor_rep.hpp"

#include <random>
#include <vector>

using namespace qfock;

namespace {

Scalar v() { return Scalar::monomial(1, 0, 1, 0); }
Scalar q() { return Scalar::monomial(1, 1, 0, 0); }
Scalar vpow(long k) { return Scalar::monomial(1, 0, k, 0); }

// generic nonzero parameters: u_a = u * q^a keeps them distinct
RepConfig make_cfg(long n, long n_tw, long N) {
  RepConfig cfg{n, n_tw, N, {}};
  for (long a = 0; a < n; ++a)
    cfg.u_params.push_back(Scalar::monomial(1, a, 0, 1));
  return cfg;
}

TensorVector basis(std::initializer_list<long> ks) {
  return TensorVector(TensorIndex(ks));
}

std::mt19937 rng(911);

// a handful of basis vectors in a small index window
std::vector<TensorVector> sample_vectors(long N, int count, long lo = -3,
                                         long hi = 4) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<TensorVector> out;
  for (int c = 0; c < count; ++c) {
    TensorIndex ks(N);
    for (auto& k : ks) k = d(rng);
    out.emplace_back(ks);
  }
  return out;
}

}  // namespace

TEST_CASE("pairwise exchange on small cases") {
  auto cfg = make_cfg(2, 1, 2);
  // equal indices: eigenvector with eigenvalue v
  CHECK(apply_T(cfg, 1, basis({5, 5})) == basis({5, 5}) * v());
  // gap 1 (s = 1, k = 0): simple transposition plus correction
  TensorVector e01 = basis({0, 1});
  TensorVector expect = basis({1, 0}) + e01 * (v() - vpow(-1));
  CHECK(apply_T(cfg, 1, e01) == expect);
  // gap n with the larger index first: plain v^{-1} swap
  CHECK(apply_T(cfg, 1, basis({2, 0})) == basis({0, 2}) * vpow(-1));
}

TEST_CASE("Hecke and braid relations") {
  for (long n : {1L, 2L, 3L}) {
    auto cfg = make_cfg(n, 1, 3);
    for (const auto& w : sample_vectors(3, 6)) {
      for (long i : {1L, 2L}) {
        // (T_i - v)(T_i + v^{-1}) = 0
        TensorVector t = apply_T(cfg, i, w);
        TensorVector lhs =
            apply_T(cfg, i, t) - t * (v() - vpow(-1)) - w;
        CHECK(lhs.is_zero());
        // T_i T_i^{-1} = 1
        CHECK(apply_T(cfg, i, apply_T(cfg, i, w, true)) == w);
      }
      TensorVector a = apply_T(cfg, 1, apply_T(cfg, 2, apply_T(cfg, 1, w)));
      TensorVector b = apply_T(cfg, 2, apply_T(cfg, 1, apply_T(cfg, 2, w)));
      CHECK(a == b);
    }
  }
}

TEST_CASE("pi action and DAHA relations with pi") {
  {
    auto cfg = make_cfg(2, 1, 2);
    CHECK(apply_pi(cfg, basis({0, 0}), 1) ==
          basis({-1, 0}) * cfg.u_params[0]);
  }
  {
    auto cfg = make_cfg(2, 0, 2);
    CHECK(apply_pi(cfg, basis({0, 1}), 1) == basis({1, 0}) * cfg.u_params[1]);
  }
  for (long n : {2L, 3L}) {
    for (long n_tw : {0L, 1L, 2L}) {
      auto cfg = make_cfg(n, n_tw, 3);
      for (const auto& w : sample_vectors(3, 4)) {
        CHECK(apply_pi(cfg, apply_pi(cfg, w, -1), 1) == w);
        // pi Y_i = q^{delta_{i,N}} Y_{i+1} pi
        for (long i = 1; i <= 3; ++i) {
          TensorVector lhs = apply_pi(cfg, apply_XY(cfg, XYGen::Y, i, w), 1);
          long inext = i == 3 ? 1 : i + 1;
          TensorVector rhs = apply_XY(cfg, XYGen::Y, inext, apply_pi(cfg, w, 1));
          if (i == 3) rhs = rhs * q();
          CHECK(lhs == rhs);
        }
        // pi T_i = T_{i+1} pi
        for (long i = 1; i <= 1; ++i) {
          CHECK(apply_pi(cfg, apply_T(cfg, i, w), 1) ==
                apply_T(cfg, i + 1, apply_pi(cfg, w, 1)));
        }
        // pi^N T_i = T_i pi^N
        TensorVector p = w;
        for (int s = 0; s < 3; ++s) p = apply_pi(cfg, p, 1);
        for (long i : {1L, 2L})
          CHECK(apply_T(cfg, i, p) ==
                [&] {
                  TensorVector t = apply_T(cfg, i, w);
                  for (int s = 0; s < 3; ++s) t = apply_pi(cfg, t, 1);
                  return t;
                }());
      }
    }
  }
}

TEST_CASE("X and Y operators") {
  auto cfg = make_cfg(2, 1, 3);
  CHECK(apply_XY(cfg, XYGen::Y, 1, basis({0, 0, 0})) == basis({2, 0, 0}));
  for (const auto& w : sample_vectors(3, 4)) {
    for (long i = 1; i <= 3; ++i) {
      CHECK(apply_XY(cfg, XYGen::X, i, apply_XY(cfg, XYGen::Xinv, i, w)) == w);
      CHECK(apply_XY(cfg, XYGen::Y, i, apply_XY(cfg, XYGen::Yinv, i, w)) == w);
    }
    // commutativity of the X family
    TensorVector a =
        apply_XY(cfg, XYGen::X, 1, apply_XY(cfg, XYGen::X, 2, w));
    TensorVector b =
        apply_XY(cfg, XYGen::X, 2, apply_XY(cfg, XYGen::X, 1, w));
    CHECK(a == b);
    // X_1^{-1} = kappa_1^{n_tw} D_1 G_{1,3}^{-1} G_{1,2}^{-1}
    TensorVector g = apply_G(cfg, 1, 2, w, true);
    g = apply_G(cfg, 1, 3, g, true);
    g = apply_D(cfg, 1, g);
    g = apply_kappa(cfg, 1, cfg.n_tw, g);
    CHECK(g == apply_XY(cfg, XYGen::Xinv, 1, w));
    // degree homogeneity: deg X_i = n_tw
    TensorVector xw = apply_XY(cfg, XYGen::X, 2, w);
    for (const auto& [ks, c] : xw.terms())
      CHECK(tensor_degree(ks) ==
            tensor_degree(w.terms().begin()->first) + cfg.n_tw);
  }
}

TEST_CASE("pair exchange operator G") {
  auto cfg = make_cfg(2, 1, 2);
  CHECK(apply_G(cfg, 1, 2, basis({3, 1})) ==
        basis({3, 1}) * v() + basis({1, 3}) * (v() - vpow(-1)));
  CHECK(apply_G(cfg, 1, 2, basis({1, 3})) == basis({1, 3}) * vpow(-1));
  for (const auto& w : sample_vectors(2, 6)) {
    CHECK(apply_G(cfg, 1, 2, apply_G(cfg, 1, 2, w, true)) == w);
    CHECK(apply_G(cfg, 2, 1, apply_G(cfg, 2, 1, w, true)) == w);
  }
}

TEST_CASE("slope words") {
  auto sd = slope_words(5, 3);
  using L = SlopeData::Letter;
  std::vector<L> expect_b = {L::LetterY,    L::LetterXinv, L::LetterY,
                             L::LetterXinv, L::LetterXinv, L::LetterY,
                             L::LetterXinv, L::LetterXinv};
  CHECK(sd.word_B == expect_b);
  CHECK(sd.m == 3);
  CHECK(sd.mprime == 2);

  auto sd10 = slope_words(1, 0);
  CHECK(sd10.word_B == std::vector<L>{L::LetterXinv});
  CHECK(sd10.m == 0);
  CHECK(sd10.mprime == 1);
  CHECK(sd10.word_A == std::vector<L>{L::LetterY});

  auto sd11 = slope_words(1, 1);
  CHECK(sd11.word_B == std::vector<L>({L::LetterY, L::LetterXinv}));

  auto sd21 = slope_words(2, 1);
  CHECK(sd21.m == 1);
  CHECK(sd21.mprime == 1);
  CHECK(sd21.word_A == std::vector<L>({L::LetterY, L::LetterXinv}));

  CHECK_THROWS_AS(slope_words(4, 2), math_error);
}

TEST_CASE("slope generators: factorized form matches the raw word") {
  for (auto [n, n_tw] : {std::pair<long, long>{2, 1},
                         {3, 1},
                         {3, 2},
                         {1, 0},
                         {1, 1}}) {
    auto cfg = make_cfg(n, n_tw, 3);
    for (const auto& w : sample_vectors(3, 3, -2, 3)) {
      for (long i = 1; i <= 3; ++i) {
        for (auto which : {SlopeGen::B, SlopeGen::Binv, SlopeGen::A,
                           SlopeGen::Ainv}) {
          CHECK(apply_slope_gen(cfg, which, i, w) ==
                apply_slope_gen_word(cfg, which, i, w));
        }
        CHECK(apply_slope_gen(cfg, SlopeGen::B, i,
                              apply_slope_gen(cfg, SlopeGen::Binv, i, w)) == w);
        CHECK(apply_slope_gen(cfg, SlopeGen::A, i,
                              apply_slope_gen(cfg, SlopeGen::Ainv, i, w)) == w);
      }
    }
  }
}

TEST_CASE("slope generator B: vacuum eigenvalue and triangularity") {
  for (auto [n, n_tw] : {std::pair<long, long>{2, 1}, {3, 2}}) {
    long N = 3;
    auto cfg = make_cfg(n, n_tw, N);
    TensorVector vac(TensorIndex(N, 0));
    for (long i = 1; i <= N; ++i) {
      CHECK(apply_slope_gen(cfg, SlopeGen::B, i, vac) ==
            vac * (cfg.u_total() * vpow(2 * i - 1 - N)));
    }
    // B_i e_lambda = b_{ll} e_lambda + strictly prec-smaller terms
    for (const auto& w : sample_vectors(N, 5, -2, 3)) {
      const TensorIndex& lam = w.terms().begin()->first;
      std::vector<long> lamv(lam.begin(), lam.end());
      for (long i = 1; i <= N; ++i) {
        TensorVector img = apply_slope_gen(cfg, SlopeGen::B, i, w);
        Scalar diag = cfg.u_total() * vpow(ell_stat(lamv, i)) *
                      Scalar::monomial(1, lamv[i - 1], 0, 0);
        CHECK(img.coeff(lam) == diag);
        for (const auto& [mu, c] : img.terms()) {
          if (mu == lam) continue;
          std::vector<long> muv(mu.begin(), mu.end());
          CHECK(prec_compare(muv, lamv) == PrecOrder::less);
        }
      }
    }
  }
}

TEST_CASE("antisymmetrizer") {
  for (long n : {1L, 2L, 3L}) {
    for (long N : {2L, 3L, 4L}) {
      auto cfg = make_cfg(n, 1, N);
      int count = N == 4 ? 2 : 4;
      for (const auto& w : sample_vectors(N, count, -2, 3)) {
        TensorVector s = antisymmetrize(cfg, w);
        CHECK(s == antisymmetrize_bruteforce(cfg, w));
        CHECK(antisymmetrize(cfg, s) == s);
        for (long i = 1; i <= N - 1; ++i)
          CHECK(apply_T(cfg, i, s) == s * (-vpow(-1)));
      }
    }
  }
  // n = 2: repeated index is annihilated, distinct pair gives the frozen form
  auto cfg = make_cfg(2, 1, 2);
  CHECK(antisymmetrize(cfg, basis({0, 0})).is_zero());
  Scalar norm = (Scalar(1) + vpow(2)).inverse();
  TensorVector expect = (basis({0, 1}) - basis({1, 0}) * v()) * norm;
  CHECK(antisymmetrize(cfg, basis({0, 1})) == expect);
}

TEST_CASE("monomial basis from the degree-one word") {
  auto cfg = make_cfg(2, 1, 2);
  TensorVector vac(TensorIndex(2, 0));
  CHECK(monomial_A_basis(cfg, {0, 0}) == vac);
  for (auto lam : std::vector<std::vector<long>>{
           {1, 0}, {0, 1}, {1, 1}, {2, 0}, {-1, 0}, {1, -1}}) {
    TensorVector a = monomial_A_basis(cfg, lam);
    TensorIndex key(lam.begin(), lam.end());
    Scalar lead = a.coeff(key);
    // unit diagonal: the leading coefficient is a signed monomial in q, v
    CHECK(!lead.is_zero());
    CHECK(lead.den() == Poly(1));
    CHECK(lead.num().size() == 1);
    for (const auto& [mu, c] : a.terms()) {
      if (mu == key) continue;
      CHECK(prec_compare(std::vector<long>(mu.begin(), mu.end()), lam) ==
            PrecOrder::less);
    }
  }
}

TEST_CASE("composition order") {
  CHECK(prec_compare({1, 1}, {0, 2}) == PrecOrder::less);
  CHECK(prec_compare({0, 2}, {2, 0}) == PrecOrder::less);
  CHECK(prec_compare({1, 1}, {2, 0}) == PrecOrder::less);
  CHECK(prec_compare({3, 1}, {3, 1}) == PrecOrder::equal);
  CHECK(prec_compare({2, 0}, {0, 2}) == PrecOrder::greater);
  CHECK(prec_compare({1, 0}, {0, 2}) == PrecOrder::incomparable);

  for (long N : {2L, 4L}) {
    std::vector<long> zero(N, 0);
    for (long i = 1; i <= N; ++i) CHECK(ell_stat(zero, i) == 2 * i - 1 - N);
  }
}
