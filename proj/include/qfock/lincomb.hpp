#pragma once

// Finite formal linear combinations of basis keys with Scalar coefficients.
// Zero coefficients are never stored, so operator== is canonical equality.

#include "qfock/scalar.hpp"

#include <map>

namespace qfock {

template <typename Key>
class LinComb {
 public:
  using Terms = std::map<Key, Scalar>;

  LinComb() = default;
  explicit LinComb(const Key& k, const Scalar& c = Scalar(1)) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Coefficient of k (zero if absent).
  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
  }
  LinComb operator-(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
  }
  LinComb operator*(const Scalar& s) const {
    LinComb r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  LinComb operator-() const { return *this * Scalar(-1); }
  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

}  // namespace qfock
