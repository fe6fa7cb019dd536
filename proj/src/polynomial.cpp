#include "dyckzeta/polynomial.hpp"

#include "dyckzeta/errors.hpp"

#include <algorithm>

namespace dyckzeta {

namespace {

std::string power(char var, int exp) {
  if (exp == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(exp);
}

} // namespace

void QTPolynomial::add(int q_exp, int t_exp, const BigInt& coefficient) {
  if (q_exp < 0 || t_exp < 0) throw Error("negative exponent");
  if (coefficient < 0) throw Error("negative coefficient");
  if (coefficient == 0) return;
  terms_[{q_exp, t_exp}] += coefficient;
}

BigInt QTPolynomial::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? BigInt{0} : it->second;
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
  for (const auto& [m, c] : other.terms_) terms_[m] += c;
  return *this;
}

QTPolynomial QTPolynomial::swapped() const {
  QTPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_[{m.second, m.first}] = c;
  return out;
}

BigInt QTPolynomial::total() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<QTPolynomial::Monomial, BigInt>> QTPolynomial::terms() const {
  std::vector<std::pair<Monomial, BigInt>> out(terms_.rbegin(), terms_.rend());
  return out;
}

std::string QTPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms()) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> factors;
    if (c != 1 || (m.first == 0 && m.second == 0)) factors.push_back(c.str());
    if (m.first > 0) factors.push_back(power('q', m.first));
    if (m.second > 0) factors.push_back(power('t', m.second));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += '*';
      out += factors[i];
    }
  }
  return out;
}

nlohmann::json QTPolynomial::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : terms()) arr.push_back({{"q", m.first}, {"t", m.second}, {"c", c.str()}});
  return arr;
}

QTPolynomial QTPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  QTPolynomial p;
  for (const auto& term : j) {
    const auto& c = term.at("c").get_ref<const std::string&>();
    if (c.empty() || !std::all_of(c.begin(), c.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("coefficient must be a nonnegative decimal string: " + c);
    p.add(term.at("q").get<int>(), term.at("t").get<int>(), BigInt(c));
  }
  return p;
}

} // namespace dyckzeta
