#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace mfk {

enum class MonomialOrder { Grevlex, Lex };

// Exponent vector.  The arity is fixed by the ring; monomials never travel
// between rings of different arity without an explicit remap.
struct Monomial {
  std::vector<uint32_t> e;

  explicit Monomial(size_t arity = 0) : e(arity, 0) {}

  size_t arity() const { return e.size(); }
  uint64_t degree() const {
    uint64_t d = 0;
    for (auto x : e)
      d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x)
        return false;
    return true;
  }
  bool operator==(const Monomial &o) const { return e == o.e; }

  Monomial operator*(const Monomial &o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i)
      r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial &o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i])
        return false;
    return true;
  }
  // quotient o / this; caller guarantees divisibility
  Monomial quotient_into(const Monomial &o) const {
    Monomial r(o);
    for (size_t i = 0; i < e.size(); ++i)
      r.e[i] -= e[i];
    return r;
  }
  static Monomial lcm(const Monomial &a, const Monomial &b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i])
        r.e[i] = b.e[i];
    return r;
  }
  static bool coprime(const Monomial &a, const Monomial &b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] && b.e[i])
        return false;
    return true;
  }
};

// +1 if a > b, 0 if equal, -1 if a < b.
int monomial_cmp(const Monomial &a, const Monomial &b, MonomialOrder order);

struct Term {
  Monomial mono;
  mpq_class coeff;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Coefficient field is always Q.  `relations` (possibly empty) cut out a
// quotient of the free polynomial ring; they are stored as raw term vectors
// so the ring does not hold Polynomials that point back at itself.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  static RingPtr make(std::vector<std::string> vars, MonomialOrder order);

  size_t arity() const { return vars_.size(); }
  const std::vector<std::string> &vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  size_t relation_count() const { return relations_.size(); }
  const std::vector<Term> &relation_terms(size_t i) const {
    return relations_[i];
  }

  // -1 when the name is not a variable of this ring
  int var_index(const std::string &name) const;

  int term_cmp(const Monomial &a, const Monomial &b) const {
    return monomial_cmp(a, b, order_);
  }

  bool same_as(const Ring &other) const;

  std::string describe() const; // "Q[x,y]/(x^2)" style, for diagnostics

private:
  friend RingPtr with_relations_raw(RingPtr, std::vector<std::vector<Term>>);
  std::vector<std::string> vars_;
  MonomialOrder order_ = MonomialOrder::Grevlex;
  std::vector<std::vector<Term>> relations_;
};

// Internal: clone `base` with the given relation term-vectors appended.
RingPtr with_relations_raw(RingPtr base, std::vector<std::vector<Term>> rels);

inline void require_same_ring(const RingPtr &a, const RingPtr &b,
                              const char *where) {
  if (a.get() == b.get())
    return;
  if (!a || !b || !a->same_as(*b))
    fail(ErrorKind::RingMismatch,
         std::string(where) + ": operands live over different rings (" +
             (a ? a->describe() : "null") + " vs " +
             (b ? b->describe() : "null") + ")");
}

std::string rational_to_string(const mpq_class &q);

// Canonical rendering of a sorted term vector ("x^2*y - 3/2*x + 1").
void print_terms(std::ostream &os, const std::vector<Term> &tv,
                 const std::vector<std::string> &vars);

} // namespace mfk
