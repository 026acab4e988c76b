#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace moonfill {

class MoonPolyomino;

using Coeff = boost::multiprecision::cpp_int;

/// Exact polynomial in p and q. Terms are keyed by (p-exponent, q-exponent);
/// zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;

  BivarPoly() = default;
  static BivarPoly constant(const Coeff& c);
  static BivarPoly monomial(int i, int j, const Coeff& c = 1);

  const std::map<Exponent, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int i, int j) const;

  void add_term(int i, int j, const Coeff& c);

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly& operator*=(const BivarPoly& other) { return *this = *this * other; }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  std::map<Exponent, Coeff> terms_;
};

/// Quotient a / b; throws Error{InexactDivision} on a nonzero remainder.
BivarPoly divide_exact(const BivarPoly& a, const BivarPoly& b);

/// p <-> q.
BivarPoly swapped(const BivarPoly& poly);
bool is_symmetric(const BivarPoly& poly);
Coeff evaluate_at_one(const BivarPoly& poly);

/// p^{r-1} + p^{r-2} q + ... + q^{r-1}; [0] = 0.
BivarPoly pq_integer(int r);
BivarPoly pq_factorial(int r);
/// Zero when k < 0 or k > n.
BivarPoly pq_binomial(int n, int k);
/// [n]! / ([s_1]! ... [s_m]!); throws InfeasibleSums unless sum(s) == n.
BivarPoly pq_multinomial(int n, std::span<const int> parts);

/// prod_i [h_i choose s_i] over the h-vector of (shape, e, s).
BivarPoly product_formula(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s);

/// `coeff p^i q^j` terms, p-exponent descending then q-exponent ascending,
/// joined by " + ". The zero polynomial is "0".
std::string to_text(const BivarPoly& poly);

}  // namespace moonfill
