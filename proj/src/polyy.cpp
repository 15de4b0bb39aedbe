#include "tshelf/polyy.hpp"

#include <algorithm>
#include <stdexcept>

namespace tshelf {

PolyY::PolyY(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

PolyY::PolyY(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyY PolyY::constant(const Rational& c) { return PolyY(std::vector<Rational>{c}); }

Rational PolyY::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational PolyY::evaluate(const Rational& y) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Rational PolyY::derivative_at_one() const {
  Rational acc = 0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) acc += coeffs_[k] * static_cast<unsigned long>(k);
  return acc;
}

PolyY PolyY::reversed(std::size_t width) const {
  if (coeffs_.size() > width) throw std::invalid_argument("reversal width below degree");
  std::vector<Rational> out(width);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[width - 1 - k] = coeffs_[k];
  return PolyY(std::move(out));
}

bool PolyY::is_counting() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1 && c >= 0; });
}

std::vector<BigInt> PolyY::integer_coeffs() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) out.push_back(to_integer(c));
  return out;
}

PolyY& PolyY::operator+=(const PolyY& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

PolyY& PolyY::operator-=(const PolyY& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

PolyY& PolyY::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyY(std::move(out));
}

void PolyY::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const PolyY& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || c != 1) out += c.get_str();
    if (k >= 1) out += "y";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

BigInt to_integer(const Rational& r) {
  if (r.get_den() != 1) throw std::domain_error("non-integral value " + r.get_str());
  return r.get_num();
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace tshelf
