#pragma once

#include "dyckzeta/enumerate.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <utility>

namespace dyckzeta {

/// Sparse polynomial in q, t with nonnegative integer coefficients.
class QTPolynomial {
public:
  /// (q exponent, t exponent)
  using Monomial = std::pair<int, int>;

  QTPolynomial() = default;

  void add(int q_exp, int t_exp, const BigInt& coefficient);
  BigInt coefficient(int q_exp, int t_exp) const;

  QTPolynomial& operator+=(const QTPolynomial& other);
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  /// Exchanges the roles of q and t.
  QTPolynomial swapped() const;
  /// Value at q = t = 1.
  BigInt total() const;

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Terms ordered by q exponent descending, then t exponent descending.
  std::vector<std::pair<Monomial, BigInt>> terms() const;

  /// e.g. "q^3 + q^2*t + q*t^2 + q*t + t^3"; the zero polynomial renders as "0".
  std::string to_text() const;
  /// Array of {"q": int, "t": int, "c": "<decimal>"} in text order.
  nlohmann::json to_json() const;
  static QTPolynomial from_json(const nlohmann::json& j);

private:
  std::map<Monomial, BigInt> terms_;
};

} // namespace dyckzeta
