#include "moonfill/pq_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/polyomino.hpp"

namespace moonfill {

BivarPoly BivarPoly::constant(const Coeff& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int i, int j, const Coeff& c) {
  BivarPoly out;
  out.add_term(i, j, c);
  return out;
}

Coeff BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Coeff(0) : it->second;
}

void BivarPoly::add_term(int i, int j, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InexactDivision, "division by the zero polynomial");
  // Lexicographic leading terms: largest p-exponent, then largest q-exponent.
  const auto& [lead_exp, lead_coeff] = *b.terms().rbegin();
  BivarPoly quotient;
  BivarPoly rem = a;
  while (!rem.is_zero()) {
    const auto [exp, c] = *rem.terms().rbegin();
    const int di = exp.first - lead_exp.first;
    const int dj = exp.second - lead_exp.second;
    if (di < 0 || dj < 0 || c % lead_coeff != 0)
      throw Error(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
    const BivarPoly step = BivarPoly::monomial(di, dj, c / lead_coeff);
    quotient += step;
    rem -= step * b;
  }
  return quotient;
}

BivarPoly swapped(const BivarPoly& poly) {
  BivarPoly out;
  for (const auto& [e, c] : poly.terms()) out.add_term(e.second, e.first, c);
  return out;
}

bool is_symmetric(const BivarPoly& poly) { return swapped(poly) == poly; }

Coeff evaluate_at_one(const BivarPoly& poly) {
  Coeff total = 0;
  for (const auto& [e, c] : poly.terms()) total += c;
  return total;
}

BivarPoly pq_integer(int r) {
  if (r < 0) throw std::invalid_argument("pq_integer: negative argument");
  BivarPoly out;
  for (int k = 0; k < r; ++k) out.add_term(r - 1 - k, k, 1);
  return out;
}

BivarPoly pq_factorial(int r) {
  BivarPoly out = BivarPoly::constant(1);
  for (int i = 2; i <= r; ++i) out *= pq_integer(i);
  return out;
}

BivarPoly pq_multinomial(int n, std::span<const int> parts) {
  int total = 0;
  for (int s : parts) {
    if (s < 0) throw Error(ErrorKind::InfeasibleSums, "negative multinomial part");
    total += s;
  }
  if (total != n)
    throw Error(ErrorKind::InfeasibleSums, "multinomial parts sum to " + std::to_string(total) +
                                               ", expected " + std::to_string(n));
  BivarPoly out = pq_factorial(n);
  for (int s : parts)
    for (int i = 2; i <= s; ++i) out = divide_exact(out, pq_integer(i));
  return out;
}

BivarPoly pq_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  const int parts[] = {k, n - k};
  return pq_multinomial(n, parts);
}

BivarPoly product_formula(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s) {
  const auto h = h_vector(shape, e, s);
  BivarPoly out = BivarPoly::constant(1);
  for (std::size_t j = 0; j < h.size(); ++j) out *= pq_binomial(h[j], s[j]);
  return out;
}

std::string to_text(const BivarPoly& poly) {
  if (poly.is_zero()) return "0";
  std::vector<std::pair<BivarPoly::Exponent, Coeff>> terms(poly.terms().begin(),
                                                           poly.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) out << " + ";
    first = false;
    out << c << " p^" << e.first << " q^" << e.second;
  }
  return out.str();
}

}  // namespace moonfill
