#include "gfl/form.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "gfl/errors.hpp"
#include "gfl/random.hpp"

namespace gfl {

Form::Form(PrimeField field, int n, int degree)
    : field_(field), n_(n), degree_(degree), coeffs_(monomial_count(n, degree), 0) {
  if (degree < 0) throw InvalidArgument("Form: negative degree");
}

Form::Form(PrimeField field, int n, int degree, std::vector<Residue> coefficients)
    : field_(field), n_(n), degree_(degree), coeffs_(std::move(coefficients)) {
  if (degree < 0) throw InvalidArgument("Form: negative degree");
  if (coeffs_.size() != monomial_count(n, degree)) {
    throw InvalidArgument("Form: coefficient count does not match C(n+d-1, n-1)");
  }
  for (auto& c : coeffs_) c %= field_.modulus();
}

Form Form::monomial(PrimeField field, std::span<const int> exponents, Residue coeff) {
  const int n = static_cast<int>(exponents.size());
  int d = 0;
  for (int e : exponents) {
    if (e < 0) throw InvalidArgument("Form::monomial: negative exponent");
    d += e;
  }
  Form f(field, n, d);
  f.coeffs_[monomial_rank(exponents)] = coeff % field.modulus();
  return f;
}

Form Form::variable(PrimeField field, int n, int i) {
  if (i < 0 || i >= n) throw InvalidArgument("Form::variable: index out of range");
  Exponents e(n, 0);
  e[i] = 1;
  return monomial(field, e);
}

Form Form::constant(PrimeField field, int n, Residue c) {
  return Form(field, n, 0, {c % field.modulus()});
}

Residue Form::coefficient(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != n_) throw InvalidArgument("Form::coefficient: arity");
  int d = 0;
  for (int e : exponents) d += e;
  if (d != degree_) return 0;
  return coeffs_[monomial_rank(exponents)];
}

bool Form::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

void Form::check_compatible(const Form& other) const {
  if (n_ != other.n_ || degree_ != other.degree_ || !(field_ == other.field_)) {
    throw InvalidArgument("Form: operands differ in ring, degree or modulus");
  }
}

Form& Form::operator+=(const Form& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

Form Form::scaled(Residue c) const {
  Form out = *this;
  c %= field_.modulus();
  for (auto& x : out.coeffs_) x = field_.mul(x, c);
  return out;
}

Form mul(const Form& f, const Form& g) {
  if (f.num_vars() != g.num_vars()) throw InvalidArgument("mul: mismatched variable counts");
  if (!(f.field() == g.field())) throw InvalidArgument("mul: mismatched moduli");
  const int n = f.num_vars();
  const PrimeField& F = f.field();
  const std::uint64_t p = F.modulus();
  const auto& tf = monomial_table(n, f.degree());
  const auto& tg = monomial_table(n, g.degree());
  const auto cf = f.coefficients();
  const auto cg = g.coefficients();
  std::vector<std::uint64_t> acc(monomial_count(n, f.degree() + g.degree()), 0);
  Exponents e(n);
  for (std::size_t a = 0; a < cf.size(); ++a) {
    if (cf[a] == 0) continue;
    const auto ea = tf[a];
    for (std::size_t b = 0; b < cg.size(); ++b) {
      if (cg[b] == 0) continue;
      const auto eb = tg[b];
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto& slot = acc[monomial_rank(e)];
      slot = (slot + static_cast<std::uint64_t>(cf[a]) * cg[b]) % p;
    }
  }
  std::vector<Residue> out(acc.begin(), acc.end());
  return Form(F, n, f.degree() + g.degree(), std::move(out));
}

Form power(const Form& f, unsigned k) {
  if (k == 0) throw InvalidArgument("power: exponent must be positive");
  std::optional<Form> result;
  Form base = f;
  while (true) {
    if (k & 1) result = result ? mul(*result, base) : base;
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base);
  }
  return *result;
}

Form multiply_by_variable(const Form& f, int i) {
  const auto& table = monomial_table(f.num_vars(), f.degree());
  const auto& shift = table.times_variable(i);
  Form out(f.field(), f.num_vars(), f.degree() + 1);
  std::vector<Residue> coeffs(monomial_count(f.num_vars(), f.degree() + 1), 0);
  const auto c = f.coefficients();
  for (std::size_t r = 0; r < c.size(); ++r) coeffs[shift[r]] = c[r];
  return Form(f.field(), f.num_vars(), f.degree() + 1, std::move(coeffs));
}

Form random_form(int n, int d, std::uint64_t seed, std::uint32_t p) {
  const PrimeField field(p);
  ResidueStream stream(derive_seed(seed, (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(d)));
  std::vector<Residue> coeffs(monomial_count(n, d));
  for (auto& c : coeffs) c = stream.next(p);
  return Form(field, n, d, std::move(coeffs));
}

std::string to_string(const Form& f) {
  std::ostringstream os;
  const auto& table = monomial_table(f.num_vars(), f.degree());
  const auto c = f.coefficients();
  bool first = true;
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (c[r] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const auto e = table[r];
    bool wrote = false;
    if (c[r] != 1 || f.degree() == 0) {
      os << c[r];
      wrote = true;
    }
    for (int i = 0; i < f.num_vars(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      wrote = true;
      os << 'x';
      if (f.num_vars() > 1) os << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  if (first) os << '0';
  return os.str();
}

namespace {

struct TermCursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= s.size();
  }
  bool accept(char ch) {
    skip_space();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  std::optional<long long> integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) return std::nullopt;
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("parse error at offset " + std::to_string(pos) + ": " + what);
  }
};

int variable_index(TermCursor& cur, int n) {
  cur.skip_space();
  if (cur.pos >= cur.s.size()) cur.fail("expected variable");
  const char ch = cur.s[cur.pos];
  static constexpr std::string_view letters = "xyzw";
  if (ch == 'x') {
    ++cur.pos;
    if (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
      const auto idx = cur.integer();
      if (*idx < 1 || *idx > n) cur.fail("variable index out of range");
      return static_cast<int>(*idx) - 1;
    }
    return 0;
  }
  const auto letter = letters.find(ch);
  if (letter == std::string_view::npos || static_cast<int>(letter) >= n) cur.fail("unknown variable");
  ++cur.pos;
  return static_cast<int>(letter);
}

}  // namespace

Form parse_form(std::string_view text, PrimeField field, int n) {
  TermCursor cur{text};
  std::vector<std::pair<Exponents, long long>> terms;
  bool negative = false;
  if (cur.accept('-')) negative = true;
  else cur.accept('+');
  while (true) {
    long long coeff = 1;
    Exponents e(n, 0);
    bool have_factor = false;
    if (auto c = cur.integer()) {
      coeff = *c;
      have_factor = true;
    }
    while (true) {
      if (have_factor && !cur.accept('*')) break;
      const int i = variable_index(cur, n);
      int exponent = 1;
      if (cur.accept('^')) {
        const auto v = cur.integer();
        if (!v) cur.fail("expected exponent");
        exponent = static_cast<int>(*v);
      }
      e[i] += exponent;
      have_factor = true;
    }
    terms.emplace_back(std::move(e), negative ? -coeff : coeff);
    if (cur.at_end()) break;
    if (cur.accept('+')) negative = false;
    else if (cur.accept('-')) negative = true;
    else cur.fail("expected '+' or '-'");
  }
  int degree = -1;
  for (const auto& [e, c] : terms) {
    int d = 0;
    for (int x : e) d += x;
    if (degree >= 0 && d != degree) throw InvalidArgument("parse_form: form is not homogeneous");
    degree = d;
  }
  Form f(field, n, degree);
  for (const auto& [e, c] : terms) f += Form::monomial(field, e, field.from_int(c));
  return f;
}

}  // namespace gfl
