#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfl/field.hpp"
#include "gfl/monomial.hpp"

namespace gfl {

/// A homogeneous polynomial over F_p stored densely in grevlex order.
class Form {
 public:
  // The zero form of the given shape.
  Form(PrimeField field, int n, int degree);
  Form(PrimeField field, int n, int degree, std::vector<Residue> coefficients);

  static Form monomial(PrimeField field, std::span<const int> exponents, Residue coeff = 1);
  static Form variable(PrimeField field, int n, int i);
  static Form constant(PrimeField field, int n, Residue c);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return n_; }
  int degree() const { return degree_; }
  std::span<const Residue> coefficients() const { return coeffs_; }
  Residue coefficient(std::span<const int> exponents) const;
  bool is_zero() const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form scaled(Residue c) const;

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  void check_compatible(const Form& other) const;

  PrimeField field_;
  int n_;
  int degree_;
  std::vector<Residue> coeffs_;
};

Form mul(const Form& f, const Form& g);
Form power(const Form& f, unsigned k);
Form multiply_by_variable(const Form& f, int i);

/// Coefficients drawn uniformly from F_p by a generator keyed on (n, d, seed): the same
/// arguments always yield the same form.
Form random_form(int n, int d, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

/// Sparse text "c*x1^e1*x2^e2 + ...", or "c*x^e" when n = 1. Zero prints as "0".
std::string to_string(const Form& f);

/// Parses the sparse text form; terms must share one degree. Integer coefficients are
/// reduced mod p. Variables are x1..xn (also x, y, z, w for n ≤ 4).
Form parse_form(std::string_view text, PrimeField field, int n);

}  // namespace gfl
