#include "ring.hpp"

#include <sstream>

namespace mfk {

int monomial_cmp(const Monomial &a, const Monomial &b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (size_t i = 0; i < a.e.size(); ++i) {
      if (a.e[i] != b.e[i])
        return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }
  // grevlex: compare total degree, then the last differing exponent reversed
  uint64_t da = a.degree(), db = b.degree();
  if (da != db)
    return da > db ? 1 : -1;
  for (size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

RingPtr Ring::make(std::vector<std::string> vars, MonomialOrder order) {
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty())
      fail(ErrorKind::SchemaError, "ring variable name is empty");
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        fail(ErrorKind::SchemaError,
             "duplicate ring variable '" + vars[i] + "'");
  }
  auto r = std::make_shared<Ring>();
  r->vars_ = std::move(vars);
  r->order_ = order;
  return r;
}

RingPtr with_relations_raw(RingPtr base, std::vector<std::vector<Term>> rels) {
  auto r = std::make_shared<Ring>();
  r->vars_ = base->vars_;
  r->order_ = base->order_;
  r->relations_ = base->relations_;
  for (auto &rel : rels)
    if (!rel.empty())
      r->relations_.push_back(std::move(rel));
  return r;
}

int Ring::var_index(const std::string &name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name)
      return static_cast<int>(i);
  return -1;
}

static bool term_vectors_equal(const std::vector<Term> &a,
                               const std::vector<Term> &b) {
  if (a.size() != b.size())
    return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].mono == b[i].mono) || a[i].coeff != b[i].coeff)
      return false;
  return true;
}

bool Ring::same_as(const Ring &other) const {
  if (this == &other)
    return true;
  if (vars_ != other.vars_ || order_ != other.order_ ||
      relations_.size() != other.relations_.size())
    return false;
  for (size_t i = 0; i < relations_.size(); ++i)
    if (!term_vectors_equal(relations_[i], other.relations_[i]))
      return false;
  return true;
}

std::string rational_to_string(const mpq_class &q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

void print_terms(std::ostream &os, const std::vector<Term> &tv,
                 const std::vector<std::string> &vars) {
  bool first = true;
  for (const auto &t : tv) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0)
        c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.mono.is_one()) {
      os << rational_to_string(c);
      printed = true;
    }
    for (size_t i = 0; i < t.mono.e.size(); ++i) {
      if (!t.mono.e[i])
        continue;
      if (printed)
        os << "*";
      os << vars[i];
      if (t.mono.e[i] > 1)
        os << "^" << t.mono.e[i];
      printed = true;
    }
  }
  if (first)
    os << "0";
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "Q[";
  for (size_t i = 0; i < vars_.size(); ++i)
    os << (i ? "," : "") << vars_[i];
  os << "]";
  if (!relations_.empty()) {
    os << "/(";
    for (size_t i = 0; i < relations_.size(); ++i) {
      if (i)
        os << ", ";
      print_terms(os, relations_[i], vars_);
    }
    os << ")";
  }
  return os.str();
}

} // namespace mfk
