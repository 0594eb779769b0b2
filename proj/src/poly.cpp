#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mfk {

static void canonicalize_terms(const Ring &ring, std::vector<Term> &terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term &a, const Term &b) {
    return ring.term_cmp(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto &t : terms) {
    if (t.mono.arity() != ring.arity())
      fail(ErrorKind::ArityMismatch, "term arity does not match ring");
    t.coeff.canonicalize();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0)
        out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class &c) {
  Polynomial p;
  p.ring_ = std::move(ring);
  if (c != 0) {
    mpq_class cc = c;
    cc.canonicalize();
    p.terms_.push_back({Monomial(p.ring_->arity()), cc});
  }
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t index) {
  if (index >= ring->arity())
    fail(ErrorKind::ArityMismatch, "variable index out of range");
  Polynomial p;
  p.ring_ = std::move(ring);
  Monomial m(p.ring_->arity());
  m.e[index] = 1;
  p.terms_.push_back({m, mpq_class(1)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = std::move(ring);
  canonicalize_terms(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

mpq_class Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one())
    return terms_.back().coeff;
  return 0;
}

const Term &Polynomial::leading() const {
  if (terms_.empty())
    fail(ErrorKind::ShapeMismatch, "leading term of zero polynomial");
  return terms_.front();
}

uint64_t Polynomial::degree() const {
  uint64_t d = 0;
  for (const auto &t : terms_)
    d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
  require_same_ring(ring_, o.ring_, "poly add");
  // merge two sorted term lists
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->term_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0)
        out.push_back({terms_[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i)
    out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j)
    out.push_back(o.terms_[j]);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
  require_same_ring(ring_, o.ring_, "poly mul");
  auto cmp = [this](const Monomial &a, const Monomial &b) {
    return ring_->term_cmp(a, b) > 0;
  };
  std::map<Monomial, mpq_class, decltype(cmp)> acc(cmp);
  for (const auto &a : terms_)
    for (const auto &b : o.terms_)
      acc[a.mono * b.mono] += a.coeff * b.coeff;
  Polynomial r;
  r.ring_ = ring_;
  for (auto &kv : acc)
    if (kv.second != 0)
      r.terms_.push_back({kv.first, kv.second});
  return r;
}

bool Polynomial::operator==(const Polynomial &o) const {
  if (!ring_ || !o.ring_)
    return terms_.empty() && o.terms_.empty() && ring_ == o.ring_;
  if (!ring_->same_as(*o.ring_) || terms_.size() != o.terms_.size())
    return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::scaled(const mpq_class &c) const {
  if (c == 0)
    return zero(ring_);
  Polynomial r(*this);
  for (auto &t : r.terms_)
    t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Term &t) const {
  if (t.coeff == 0)
    return zero(ring_);
  Polynomial r(*this);
  for (auto &s : r.terms_) {
    s.mono = s.mono * t.mono;
    s.coeff *= t.coeff;
  }
  // multiplying by a monomial preserves the term order
  return r;
}

Polynomial Polynomial::pow(uint32_t k) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base(*this);
  while (k) {
    if (k & 1)
      r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  print_terms(os, terms_, ring_->vars());
  return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Lexer {
  const std::string &s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  [[noreturn]] void err(const std::string &msg) const {
    fail(ErrorKind::ParseError, "polynomial literal, offset " +
                                    std::to_string(pos) + ": " + msg +
                                    " in \"" + s + "\"");
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      err("expected an integer");
    return s.substr(start, pos - start);
  }
  std::string identifier() {
    skip_ws();
    size_t start = pos;
    auto ok = [&](char c, bool first) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!first && std::isdigit(static_cast<unsigned char>(c)));
    };
    while (pos < s.size() && ok(s[pos], pos == start))
      ++pos;
    if (pos == start)
      err("expected a variable name");
    return s.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lx;
  RingPtr ring;

  Polynomial expr() {
    bool neg = false;
    if (lx.accept('-'))
      neg = true;
    else
      lx.accept('+');
    Polynomial acc = term();
    if (neg)
      acc = -acc;
    for (;;) {
      if (lx.accept('+'))
        acc += term();
      else if (lx.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lx.accept('*'))
      acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lx.accept('^')) {
      std::string n = lx.integer();
      if (n.size() > 4)
        lx.err("exponent too large");
      b = b.pow(static_cast<uint32_t>(std::stoul(n)));
    }
    return b;
  }

  Polynomial base() {
    char c = lx.peek();
    if (c == '(') {
      lx.accept('(');
      Polynomial inner = expr();
      if (!lx.accept(')'))
        lx.err("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lx.integer();
      std::string den;
      // '/' only as part of a rational literal
      size_t save = lx.pos;
      if (lx.accept('/')) {
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
          den = lx.integer();
        } else {
          lx.pos = save;
        }
      }
      mpq_class q(den.empty() ? num : num + "/" + den);
      q.canonicalize();
      return Polynomial::constant(ring, q);
    }
    std::string name = lx.identifier();
    int idx = ring->var_index(name);
    if (idx < 0)
      lx.err("unknown variable '" + name + "' (ring " + ring->describe() +
             ")");
    return Polynomial::variable(ring, static_cast<size_t>(idx));
  }
};

} // namespace

Polynomial parse_polynomial(const std::string &text, RingPtr ring) {
  Parser p{Lexer{text}, ring};
  if (p.lx.eof())
    p.lx.err("empty literal");
  Polynomial result = p.expr();
  if (!p.lx.eof())
    p.lx.err("trailing input");
  return result;
}

// ------------------------------------------------------- ring constructors

RingPtr with_relations(RingPtr base, const std::vector<Polynomial> &rels) {
  std::vector<std::vector<Term>> raw;
  for (const auto &r : rels) {
    if (r.ring()->vars() != base->vars() ||
        r.ring()->order() != base->order())
      fail(ErrorKind::RingMismatch,
           "relation polynomial over " + r.ring()->describe() +
               " cannot define a quotient of " + base->describe());
    if (!r.is_zero())
      raw.push_back(r.terms());
  }
  return with_relations_raw(std::move(base), std::move(raw));
}

Polynomial ring_relation(const RingPtr &ring, size_t i) {
  if (i >= ring->relation_count())
    fail(ErrorKind::ShapeMismatch, "ring relation index out of range");
  return Polynomial::from_terms(ring, ring->relation_terms(i));
}

// ------------------------------------------------------------ derivatives

Polynomial partial_derivative(const Polynomial &p, size_t var) {
  if (var >= p.ring()->arity())
    fail(ErrorKind::ArityMismatch, "partial_derivative: bad variable index");
  std::vector<Term> out;
  for (const auto &t : p.terms()) {
    if (!t.mono.e[var])
      continue;
    Term d = t;
    d.coeff *= t.mono.e[var];
    d.mono.e[var] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial coefficient_of(const Polynomial &p, size_t var, uint32_t k) {
  std::vector<Term> out;
  for (const auto &t : p.terms()) {
    if (t.mono.e[var] != k)
      continue;
    Term c = t;
    c.mono.e[var] = 0;
    out.push_back(std::move(c));
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

uint32_t max_exponent(const Polynomial &p, size_t var) {
  uint32_t m = 0;
  for (const auto &t : p.terms())
    m = std::max(m, t.mono.e[var]);
  return m;
}

// ------------------------------------------------------------- remappings

Polynomial promote_with_map(const Polynomial &p, RingPtr target,
                            const std::vector<int> &var_map) {
  if (var_map.size() != p.ring()->arity())
    fail(ErrorKind::ArityMismatch, "promotion map has wrong arity");
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto &t : p.terms()) {
    Term nt{Monomial(target->arity()), t.coeff};
    for (size_t i = 0; i < var_map.size(); ++i) {
      if (!t.mono.e[i])
        continue;
      int j = var_map[i];
      if (j < 0 || static_cast<size_t>(j) >= target->arity())
        fail(ErrorKind::ArityMismatch, "promotion map index out of range");
      nt.mono.e[j] += t.mono.e[i];
    }
    out.push_back(std::move(nt));
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

Polynomial promote_by_name(const Polynomial &p, RingPtr target) {
  std::vector<int> map;
  map.reserve(p.ring()->arity());
  for (const auto &name : p.ring()->vars()) {
    int idx = target->var_index(name);
    if (idx < 0)
      fail(ErrorKind::ArityMismatch, "variable '" + name +
                                         "' is absent from target ring " +
                                         target->describe());
    map.push_back(idx);
  }
  return promote_with_map(p, std::move(target), map);
}

Polynomial transport(const Polynomial &p, RingPtr target) {
  if (p.ring()->vars() != target->vars() ||
      p.ring()->order() != target->order())
    fail(ErrorKind::RingMismatch,
         "transport requires an identical variable list");
  return Polynomial::from_terms(std::move(target), p.terms());
}

Polynomial variable_split(const Polynomial &p, RingPtr target,
                          VariableBlock which) {
  size_t n = p.ring()->arity();
  if (target->arity() != 2 * n)
    fail(ErrorKind::ArityMismatch,
         "variable_split: target arity must be twice the source arity");
  std::vector<int> map(n);
  for (size_t i = 0; i < n; ++i)
    map[i] = static_cast<int>(which == VariableBlock::First ? i : n + i);
  return promote_with_map(p, std::move(target), map);
}

std::vector<std::pair<size_t, Polynomial>>
variable_decompose(const Polynomial &W) {
  std::vector<std::pair<size_t, Polynomial>> pairs;
  Polynomial rem = W;
  for (size_t i = 0; i < W.ring()->arity(); ++i) {
    std::vector<Term> quot, rest;
    for (const auto &t : rem.terms()) {
      if (t.mono.e[i]) {
        Term q = t;
        q.mono.e[i] -= 1;
        quot.push_back(std::move(q));
      } else {
        rest.push_back(t);
      }
    }
    if (!quot.empty())
      pairs.emplace_back(i, Polynomial::from_terms(W.ring(), std::move(quot)));
    rem = Polynomial::from_terms(W.ring(), std::move(rest));
  }
  if (!rem.is_zero())
    fail(ErrorKind::ConstantTerm,
         "variable_decompose: nonzero constant term " +
             rational_to_string(rem.constant_value()));
  return pairs;
}

} // namespace mfk
