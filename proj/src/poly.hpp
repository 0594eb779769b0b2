#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace mfk {

// Element of Q[vars]/(relations).  Stored as the canonical representative's
// term list, sorted descending in the ring's monomial order with no zero or
// duplicate monomials.  Reduction modulo the relations is not automatic; the
// Groebner layer performs it where the contract requires it.
class Polynomial {
public:
  Polynomial() = default; // zero over no ring; only for containers

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const mpq_class &c);
  static Polynomial variable(RingPtr ring, size_t index);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr &ring() const { return ring_; }
  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  // coefficient of the monomial 1
  mpq_class constant_value() const;
  const Term &leading() const;
  uint64_t degree() const; // max total degree, 0 for the zero polynomial

  Polynomial operator+(const Polynomial &o) const;
  Polynomial operator-(const Polynomial &o) const;
  Polynomial operator*(const Polynomial &o) const;
  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o) { return *this = *this + o; }
  Polynomial &operator-=(const Polynomial &o) { return *this = *this - o; }
  bool operator==(const Polynomial &o) const;
  bool operator!=(const Polynomial &o) const { return !(*this == o); }

  Polynomial scaled(const mpq_class &c) const;
  Polynomial times_term(const Term &t) const;
  Polynomial pow(uint32_t k) const;

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Literal grammar: + - * ^ with explicit '*', integer exponents, rational
// coefficients like "3/2", parentheses.  Variables must belong to the ring.
Polynomial parse_polynomial(const std::string &text, RingPtr ring);

// Quotient-ring constructors.  Relations must be polynomials over a ring with
// the same variables and order as `base`.
RingPtr with_relations(RingPtr base, const std::vector<Polynomial> &rels);
Polynomial ring_relation(const RingPtr &ring, size_t i);

Polynomial partial_derivative(const Polynomial &p, size_t var);

// Coefficient of var^k, as a polynomial with the var-exponent removed.
Polynomial coefficient_of(const Polynomial &p, size_t var, uint32_t k);
uint32_t max_exponent(const Polynomial &p, size_t var);

// Exponent remap: target.e[var_map[i]] = source.e[i].  Entries must be
// distinct valid target indices.  Relations are not carried over.
Polynomial promote_with_map(const Polynomial &p, RingPtr target,
                            const std::vector<int> &var_map);
// Match variables of p's ring by name inside the target ring.
Polynomial promote_by_name(const Polynomial &p, RingPtr target);
// Reinterpret over a ring with the identical variable list (relations may
// differ); used when passing to a further quotient.
Polynomial transport(const Polynomial &p, RingPtr target);

enum class VariableBlock { First, Second };

// Map Q[v1..vn] into a 2n-variable ring as the first or second block of
// variables (positional).
Polynomial variable_split(const Polynomial &p, RingPtr target,
                          VariableBlock which);

// Write W = sum_i x_i * w_i by iterated division: w_0 collects every term
// divisible by x_0, then w_1 divides what remains by x_1, and so on.  Pairs
// with w_i = 0 are omitted.  Fails if W has a nonzero constant term.
std::vector<std::pair<size_t, Polynomial>>
variable_decompose(const Polynomial &W);

} // namespace mfk
