#include "groebner.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace mfk {

namespace {

// Position-over-term: +1 when (c1,m1) > (c2,m2).  Lower component index wins.
int pot_cmp(const Ring &ring, size_t c1, const Monomial &m1, size_t c2,
            const Monomial &m2) {
  if (c1 != c2)
    return c1 < c2 ? 1 : -1;
  return ring.term_cmp(m1, m2);
}

struct Lead {
  size_t comp = 0;
  Term term;
};

std::optional<Lead> lead_of(const ModuleElem &v) {
  std::optional<Lead> best;
  for (size_t c = 0; c < v.comp.size(); ++c) {
    if (v.comp[c].is_zero())
      continue;
    const Term &t = v.comp[c].leading();
    if (!best ||
        pot_cmp(*v.ring, c, t.mono, best->comp, best->term.mono) > 0)
      best = Lead{c, t};
  }
  return best;
}

uint64_t elem_degree(const ModuleElem &v) {
  uint64_t d = 0;
  for (const auto &p : v.comp)
    d = std::max(d, p.degree());
  return d;
}

struct Entry {
  ModuleElem g; // monic
  std::vector<Polynomial> rep; // coordinates over the engine inputs
  size_t lead_comp = 0;
  Monomial lead_mono;
  uint64_t sugar = 0;
};

struct Pair {
  uint64_t sugar = 0;
  size_t comp = 0;
  Monomial lcm;
  size_t i = 0, j = 0;
};

struct PairLess {
  MonomialOrder ord;
  bool operator()(const Pair &a, const Pair &b) const {
    if (a.sugar != b.sugar)
      return a.sugar < b.sugar;
    if (a.comp != b.comp)
      return a.comp < b.comp;
    int c = monomial_cmp(a.lcm, b.lcm, ord);
    if (c)
      return c < 0;
    if (a.i != b.i)
      return a.i < b.i;
    return a.j < b.j;
  }
};

class GbEngine {
public:
  GbEngine(RingPtr ring, size_t rank, const std::vector<ModuleElem> &real,
           const GbOptions &opts)
      : ring_(std::move(ring)), rank_(rank), opts_(opts) {
    for (const auto &v : real) {
      require_same_ring(ring_, v.ring, "groebner");
      if (v.rank() != rank_)
        fail(ErrorKind::ShapeMismatch, "generator rank mismatch");
      inputs_.push_back(v);
    }
    n_real_ = inputs_.size();
    for (size_t r = 0; r < ring_->relation_count(); ++r) {
      Polynomial rel = ring_relation(ring_, r);
      for (size_t c = 0; c < rank_; ++c) {
        ModuleElem v(ring_, rank_);
        v.comp[c] = rel;
        inputs_.push_back(v);
      }
    }
  }

  size_t n_real() const { return n_real_; }
  size_t n_inputs() const { return inputs_.size(); }
  const std::vector<Entry> &entries() const { return entries_; }

  void run() {
    for (size_t k = 0; k < inputs_.size(); ++k) {
      if (inputs_[k].is_zero())
        continue;
      std::vector<Polynomial> rep(inputs_.size(),
                                  Polynomial::zero(ring_));
      rep[k] = Polynomial::constant(ring_, 1);
      add_entry(inputs_[k], std::move(rep), elem_degree(inputs_[k]));
    }
    long long budget = opts_.pair_budget;
    long long processed = 0;
    while (!queue_.empty()) {
      Pair pr = *queue_.begin();
      queue_.erase(queue_.begin());
      ++processed;
      if (processed > budget)
        fail(ErrorKind::BudgetExceeded,
             "groebner: pair budget of " + std::to_string(budget) +
                 " exhausted (basis size " + std::to_string(entries_.size()) +
                 ", " + std::to_string(queue_.size()) + " pairs pending)");
      // Buchberger's coprimality criterion is only sound for ideals
      // (rank one); in higher rank an S-pair with coprime lead monomials
      // can still reduce to something new.
      if (rank_ == 1 &&
          Monomial::coprime(entries_[pr.i].lead_mono,
                            entries_[pr.j].lead_mono)) {
        trace(pr, "skip-coprime");
        continue;
      }
      auto [s, rep] = s_pair(pr.i, pr.j, pr.lcm);
      std::vector<Polynomial> quot(entries_.size(), Polynomial::zero(ring_));
      ModuleElem r = reduce(s, &quot);
      subtract_quotients(rep, quot);
      if (r.is_zero()) {
        trace(pr, "zero");
        continue;
      }
      trace(pr, "new");
      add_entry(std::move(r), to_input_coords(rep), pr.sugar);
    }
    finalize();
  }

  // Full normal form against the current entries.  `quot`, when given, must
  // have size entries_.size(); receives the division coefficients.
  ModuleElem reduce(ModuleElem v, std::vector<Polynomial> *quot) const {
    ModuleElem rem(ring_, v.rank());
    for (;;) {
      auto ld = lead_of(v);
      if (!ld)
        return rem;
      bool reduced = false;
      for (size_t t = 0; t < entries_.size(); ++t) {
        const Entry &e = entries_[t];
        if (!alive_.empty() && !alive_[t])
          continue;
        if (e.lead_comp != ld->comp || !e.lead_mono.divides(ld->term.mono))
          continue;
        Term f{e.lead_mono.quotient_into(ld->term.mono), ld->term.coeff};
        v = v - e.g.times_term(f);
        if (quot)
          (*quot)[t] += Polynomial::from_terms(ring_, {f});
        reduced = true;
        break;
      }
      if (!reduced) {
        // move the irreducible lead into the remainder and keep going
        Polynomial t = Polynomial::from_terms(ring_, {ld->term});
        rem.comp[ld->comp] += t;
        v.comp[ld->comp] -= t;
      }
    }
  }

  // v = sum_t coeff[t] * entry[t].g + remainder, with remainder == 0
  // expected when v lies in the module.
  std::pair<ModuleElem, std::vector<Polynomial>>
  divide(const ModuleElem &v) const {
    std::vector<Polynomial> quot(entries_.size(), Polynomial::zero(ring_));
    ModuleElem r = reduce(v, &quot);
    return {std::move(r), std::move(quot)};
  }

  // Syzygy generators of the ENGINE INPUTS (real generators first), i.e.
  // Schreyer's S-pair relations pushed back through the division traces,
  // plus one relation per input recording its own division by the basis.
  std::vector<ModuleElem> input_syzygies() const {
    std::vector<ModuleElem> out;
    size_t n = inputs_.size();
    for (size_t i = 0; i < entries_.size(); ++i)
      for (size_t j = i + 1; j < entries_.size(); ++j) {
        if (entries_[i].lead_comp != entries_[j].lead_comp)
          continue;
        Monomial l =
            Monomial::lcm(entries_[i].lead_mono, entries_[j].lead_mono);
        auto [s, rep] = s_pair(i, j, l);
        std::vector<Polynomial> quot(entries_.size(),
                                     Polynomial::zero(ring_));
        ModuleElem r = reduce(s, &quot);
        if (!r.is_zero())
          fail(ErrorKind::LiftFailed,
               "internal: S-pair of a Groebner basis did not reduce to zero");
        subtract_quotients(rep, quot);
        ModuleElem syz(ring_, n);
        for (size_t t = 0; t < entries_.size(); ++t)
          if (!rep[t].is_zero())
            for (size_t k = 0; k < n; ++k)
              syz.comp[k] += rep[t] * entries_[t].rep[k];
        out.push_back(std::move(syz));
      }
    for (size_t k = 0; k < n; ++k) {
      auto [r, quot] = divide(inputs_[k]);
      if (!r.is_zero())
        fail(ErrorKind::LiftFailed,
             "internal: generator did not reduce against its own basis");
      ModuleElem syz(ring_, n);
      syz.comp[k] = Polynomial::constant(ring_, 1);
      for (size_t t = 0; t < entries_.size(); ++t)
        if (!quot[t].is_zero())
          for (size_t kk = 0; kk < n; ++kk)
            syz.comp[kk] -= quot[t] * entries_[t].rep[kk];
      out.push_back(std::move(syz));
    }
    return out;
  }

private:
  std::pair<ModuleElem, std::vector<Polynomial>>
  s_pair(size_t i, size_t j, const Monomial &l) const {
    Term ui{entries_[i].lead_mono.quotient_into(l), mpq_class(1)};
    Term uj{entries_[j].lead_mono.quotient_into(l), mpq_class(1)};
    ModuleElem s =
        entries_[i].g.times_term(ui) - entries_[j].g.times_term(uj);
    std::vector<Polynomial> rep(entries_.size(), Polynomial::zero(ring_));
    rep[i] = Polynomial::from_terms(ring_, {ui});
    rep[j] = -Polynomial::from_terms(ring_, {uj});
    return {std::move(s), std::move(rep)};
  }

  // rep (over entries) -= quot (over entries)
  static void subtract_quotients(std::vector<Polynomial> &rep,
                                 const std::vector<Polynomial> &quot) {
    for (size_t t = 0; t < quot.size(); ++t)
      if (!quot[t].is_zero())
        rep[t] -= quot[t];
  }

  // entry-coordinate vector -> input-coordinate vector
  std::vector<Polynomial>
  to_input_coords(const std::vector<Polynomial> &over_entries) const {
    std::vector<Polynomial> out(inputs_.size(), Polynomial::zero(ring_));
    for (size_t t = 0; t < over_entries.size(); ++t)
      if (!over_entries[t].is_zero())
        for (size_t k = 0; k < inputs_.size(); ++k)
          out[k] += over_entries[t] * entries_[t].rep[k];
    return out;
  }

  void add_entry(ModuleElem g, std::vector<Polynomial> rep_inputs,
                 uint64_t sugar) {
    auto ld = lead_of(g);
    mpq_class lc = ld->term.coeff;
    if (lc != 1) {
      mpq_class inv = 1 / lc;
      for (auto &p : g.comp)
        p = p.scaled(inv);
      for (auto &p : rep_inputs)
        p = p.scaled(inv);
    }
    Entry e;
    e.lead_comp = ld->comp;
    e.lead_mono = ld->term.mono;
    e.sugar = sugar;
    e.g = std::move(g);
    e.rep = std::move(rep_inputs);
    size_t idx = entries_.size();
    entries_.push_back(std::move(e));
    for (size_t t = 0; t < idx; ++t) {
      if (entries_[t].lead_comp != entries_[idx].lead_comp)
        continue;
      Pair pr;
      pr.i = t;
      pr.j = idx;
      pr.comp = entries_[t].lead_comp;
      pr.lcm = Monomial::lcm(entries_[t].lead_mono, entries_[idx].lead_mono);
      uint64_t di = pr.lcm.degree() - entries_[t].lead_mono.degree();
      uint64_t dj = pr.lcm.degree() - entries_[idx].lead_mono.degree();
      pr.sugar = std::max(entries_[t].sugar + di, entries_[idx].sugar + dj);
      queue_.insert(pr);
    }
  }

  void finalize() {
    // minimal basis: drop entries whose lead is divisible by another's
    std::vector<size_t> order(entries_.size());
    for (size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      int c = pot_cmp(*ring_, entries_[a].lead_comp, entries_[a].lead_mono,
                      entries_[b].lead_comp, entries_[b].lead_mono);
      if (c)
        return c < 0;
      return a < b;
    });
    alive_.assign(entries_.size(), false);
    std::vector<size_t> kept;
    for (size_t idx : order) {
      bool dominated = false;
      for (size_t k : kept)
        if (entries_[k].lead_comp == entries_[idx].lead_comp &&
            entries_[k].lead_mono.divides(entries_[idx].lead_mono)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        kept.push_back(idx);
        alive_[idx] = true;
      }
    }
    // tail interreduction to the unique reduced basis
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t idx : kept) {
        alive_[idx] = false; // reduce against the others
        std::vector<Polynomial> quot(entries_.size(),
                                     Polynomial::zero(ring_));
        ModuleElem r = reduce(entries_[idx].g, &quot);
        alive_[idx] = true;
        bool same = r == entries_[idx].g;
        if (!same) {
          changed = true;
          std::vector<Polynomial> rep = entries_[idx].rep;
          for (size_t t = 0; t < entries_.size(); ++t)
            if (!quot[t].is_zero())
              for (size_t k = 0; k < inputs_.size(); ++k)
                rep[k] -= quot[t] * entries_[t].rep[k];
          auto ld = lead_of(r);
          // lead is untouched by tail reduction; renormalize defensively
          mpq_class lc = ld->term.coeff;
          if (lc != 1) {
            mpq_class inv = 1 / lc;
            for (auto &p : r.comp)
              p = p.scaled(inv);
            for (auto &p : rep)
              p = p.scaled(inv);
          }
          entries_[idx].g = std::move(r);
          entries_[idx].rep = std::move(rep);
          entries_[idx].lead_comp = ld->comp;
          entries_[idx].lead_mono = ld->term.mono;
        }
      }
    }
    // compact to the kept set, sorted ascending by lead
    std::vector<Entry> final_entries;
    final_entries.reserve(kept.size());
    for (size_t idx : kept)
      final_entries.push_back(std::move(entries_[idx]));
    entries_ = std::move(final_entries);
    alive_.clear();
  }

  void trace(const Pair &pr, const char *what) const {
    if (!opts_.trace)
      return;
    std::ostream &os = opts_.trace_out ? *opts_.trace_out : std::cerr;
    os << "gb pair (" << pr.i << "," << pr.j << ") comp=" << pr.comp
       << " sugar=" << pr.sugar << " lcm_deg=" << pr.lcm.degree() << " -> "
       << what << "\n";
  }

  RingPtr ring_;
  size_t rank_;
  GbOptions opts_;
  std::vector<ModuleElem> inputs_; // real generators, then relation padding
  size_t n_real_ = 0;
  std::vector<Entry> entries_;
  std::vector<char> alive_; // finalize(): visibility mask for reduce()
  std::set<Pair, PairLess> queue_{PairLess{ring_->order()}};
};

} // namespace

bool GroebnerBasis::operator==(const GroebnerBasis &o) const {
  if (rank != o.rank || elems.size() != o.elems.size())
    return false;
  if (!ring || !o.ring || !ring->same_as(*o.ring))
    return false;
  for (size_t i = 0; i < elems.size(); ++i)
    if (!(elems[i] == o.elems[i]))
      return false;
  return true;
}

GroebnerBasis groebner(const std::vector<ModuleElem> &gens, RingPtr ring,
                       size_t rank, const GbOptions &opts) {
  GbEngine eng(ring, rank, gens, opts);
  eng.run();
  GroebnerBasis b;
  b.ring = std::move(ring);
  b.rank = rank;
  for (const auto &e : eng.entries())
    b.elems.push_back(e.g);
  return b;
}

GroebnerBasis groebner(const FreeModuleMap &m, const GbOptions &opts) {
  return groebner(m.columns(), m.ring(), m.rows(), opts);
}

ModuleElem normal_form(const ModuleElem &v, const GroebnerBasis &basis,
                       const GbOptions &opts) {
  (void)opts; // division always terminates; no budget applies
  require_same_ring(v.ring, basis.ring, "normal_form");
  if (v.rank() != basis.rank)
    fail(ErrorKind::ShapeMismatch, "normal_form rank mismatch");
  // The basis elements already carry the ring-relation structure, so plain
  // division against them is a complete normal form over the quotient.
  ModuleElem rem(v.ring, v.rank());
  ModuleElem w = v;
  for (;;) {
    auto ld = lead_of(w);
    if (!ld)
      return rem;
    bool reduced = false;
    for (const auto &g : basis.elems) {
      auto gl = lead_of(g);
      if (!gl || gl->comp != ld->comp ||
          !gl->term.mono.divides(ld->term.mono))
        continue;
      Term f{gl->term.mono.quotient_into(ld->term.mono),
             ld->term.coeff / gl->term.coeff};
      w = w - g.times_term(f);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial t = Polynomial::from_terms(v.ring, {ld->term});
      rem.comp[ld->comp] += t;
      w.comp[ld->comp] -= t;
    }
  }
}

Polynomial normal_form(const Polynomial &p, const GroebnerBasis &basis,
                       const GbOptions &opts) {
  ModuleElem v(p.ring(), 1);
  v.comp[0] = p;
  return normal_form(v, basis, opts).comp[0];
}

Polynomial reduce_mod_ring(const Polynomial &p, const GbOptions &opts) {
  if (p.ring()->relation_count() == 0)
    return p;
  static std::map<const Ring *, GroebnerBasis> cache;
  auto it = cache.find(p.ring().get());
  if (it == cache.end()) {
    GroebnerBasis b = groebner({}, p.ring(), 1, opts);
    it = cache.emplace(p.ring().get(), std::move(b)).first;
  }
  return normal_form(p, it->second, opts);
}

static FreeModuleMap
canonical_column_set(std::vector<ModuleElem> cols, const RingPtr &ring,
                     size_t rank, const GbOptions &opts) {
  // canonical generating set: reduced basis of the span, entries reduced
  // modulo the ring relations, zero columns dropped
  GroebnerBasis b = groebner(cols, ring, rank, opts);
  std::vector<ModuleElem> out;
  for (const auto &e : b.elems) {
    ModuleElem r(ring, rank);
    bool nonzero = false;
    for (size_t c = 0; c < rank; ++c) {
      r.comp[c] = reduce_mod_ring(e.comp[c], opts);
      nonzero = nonzero || !r.comp[c].is_zero();
    }
    if (nonzero)
      out.push_back(std::move(r));
  }
  return FreeModuleMap::from_columns(ring, rank, out);
}

FreeModuleMap syzygies(const FreeModuleMap &M, const GbOptions &opts) {
  GbEngine eng(M.ring(), M.rows(), M.columns(), opts);
  eng.run();
  std::vector<ModuleElem> raw = eng.input_syzygies();
  // project away the ring-relation padding coordinates
  std::vector<ModuleElem> cols;
  for (const auto &s : raw) {
    ModuleElem p(M.ring(), eng.n_real());
    bool nonzero = false;
    for (size_t k = 0; k < eng.n_real(); ++k) {
      p.comp[k] = s.comp[k];
      nonzero = nonzero || !p.comp[k].is_zero();
    }
    if (nonzero)
      cols.push_back(std::move(p));
  }
  return canonical_column_set(std::move(cols), M.ring(), M.cols(), opts);
}

std::optional<ModuleElem> lift(const FreeModuleMap &M, const ModuleElem &v,
                               const GbOptions &opts) {
  require_same_ring(M.ring(), v.ring, "lift");
  if (v.rank() != M.rows())
    fail(ErrorKind::ShapeMismatch, "lift: vector rank mismatch");
  GbEngine eng(M.ring(), M.rows(), M.columns(), opts);
  eng.run();
  auto [r, quot] = eng.divide(v);
  if (!r.is_zero())
    return std::nullopt;
  ModuleElem u(M.ring(), M.cols());
  for (size_t t = 0; t < eng.entries().size(); ++t) {
    if (quot[t].is_zero())
      continue;
    for (size_t k = 0; k < M.cols(); ++k)
      u.comp[k] += quot[t] * eng.entries()[t].rep[k];
  }
  for (auto &p : u.comp)
    p = reduce_mod_ring(p, opts);
  return u;
}

std::optional<FreeModuleMap> lift(const FreeModuleMap &M,
                                  const FreeModuleMap &V,
                                  const GbOptions &opts) {
  require_same_ring(M.ring(), V.ring(), "lift");
  if (V.rows() != M.rows())
    fail(ErrorKind::ShapeMismatch, "lift: matrix shape mismatch");
  GbEngine eng(M.ring(), M.rows(), M.columns(), opts);
  eng.run();
  FreeModuleMap U(M.ring(), M.cols(), V.cols());
  for (size_t j = 0; j < V.cols(); ++j) {
    auto [r, quot] = eng.divide(V.col(j));
    if (!r.is_zero())
      return std::nullopt;
    for (size_t t = 0; t < eng.entries().size(); ++t) {
      if (quot[t].is_zero())
        continue;
      for (size_t k = 0; k < M.cols(); ++k)
        U.at(k, j) += quot[t] * eng.entries()[t].rep[k];
    }
  }
  for (size_t i = 0; i < U.rows(); ++i)
    for (size_t j = 0; j < U.cols(); ++j)
      U.at(i, j) = reduce_mod_ring(U.at(i, j), opts);
  return U;
}

ModulePresentation homology(const FreeModuleMap &d_in,
                            const FreeModuleMap &d_out,
                            const GbOptions &opts) {
  require_same_ring(d_in.ring(), d_out.ring(), "homology");
  if (d_in.rows() != d_out.cols())
    fail(ErrorKind::ShapeMismatch,
         "homology: d_in lands in A^" + std::to_string(d_in.rows()) +
             " but d_out starts from A^" + std::to_string(d_out.cols()));
  FreeModuleMap comp = d_out * d_in;
  for (size_t i = 0; i < comp.rows(); ++i)
    for (size_t j = 0; j < comp.cols(); ++j)
      if (!reduce_mod_ring(comp.at(i, j), opts).is_zero())
        fail(ErrorKind::CompositionNonzero,
             "homology: d_out * d_in has nonzero entry at (" +
                 std::to_string(i) + "," + std::to_string(j) +
                 "): " + comp.at(i, j).to_string());

  FreeModuleMap S = syzygies(d_out, opts);
  size_t gens = S.cols();
  if (gens == 0) {
    ModulePresentation pres;
    pres.ring = d_out.ring();
    pres.generators = 0;
    pres.relations = FreeModuleMap(d_out.ring(), 0, 0);
    return pres;
  }

  // image of d_in, written in kernel coordinates
  auto lifted = lift(S, d_in, opts);
  if (!lifted)
    fail(ErrorKind::LiftFailed,
         "internal: column of d_in is not in the kernel of d_out");
  // second syzygies: relations that already hold among the kernel generators
  FreeModuleMap S2 = syzygies(S, opts);

  std::vector<ModuleElem> rel_cols;
  for (size_t j = 0; j < lifted->cols(); ++j) {
    ModuleElem c = lifted->col(j);
    if (!c.is_zero())
      rel_cols.push_back(std::move(c));
  }
  for (size_t j = 0; j < S2.cols(); ++j) {
    ModuleElem c = S2.col(j);
    if (!c.is_zero())
      rel_cols.push_back(std::move(c));
  }

  ModulePresentation pres;
  pres.ring = d_out.ring();
  pres.generators = gens;
  pres.relations =
      canonical_column_set(std::move(rel_cols), d_out.ring(), gens, opts);
  return pres;
}

QDim q_dimension(const ModulePresentation &pres, const GbOptions &opts) {
  if (pres.generators == 0)
    return {true, 0};
  GroebnerBasis b =
      groebner(pres.relations.columns(), pres.ring, pres.generators, opts);
  size_t n = pres.ring->arity();
  unsigned long long total = 0;
  for (size_t c = 0; c < pres.generators; ++c) {
    std::vector<Monomial> leads;
    for (const auto &e : b.elems) {
      auto ld = lead_of(e);
      if (ld && ld->comp == c)
        leads.push_back(ld->term.mono);
    }
    bool killed = false;
    for (const auto &m : leads)
      if (m.is_one())
        killed = true;
    if (killed)
      continue;
    // finite iff the staircase meets every axis
    std::vector<uint32_t> bound(n, 0);
    for (size_t i = 0; i < n; ++i) {
      bool found = false;
      for (const auto &m : leads) {
        bool pure = m.e[i] > 0;
        for (size_t j = 0; pure && j < n; ++j)
          if (j != i && m.e[j])
            pure = false;
        if (pure && (!found || m.e[i] < bound[i])) {
          bound[i] = m.e[i];
          found = true;
        }
      }
      if (!found)
        return {false, 0};
    }
    // count monomials under the staircase inside the bounding box
    Monomial probe(n);
    unsigned long long count = 0;
    for (;;) {
      bool divisible = false;
      for (const auto &m : leads)
        if (m.divides(probe)) {
          divisible = true;
          break;
        }
      if (!divisible)
        ++count;
      size_t i = 0;
      while (i < n) {
        if (++probe.e[i] < bound[i])
          break;
        probe.e[i] = 0;
        ++i;
      }
      if (i == n)
        break;
    }
    total += count;
  }
  return {true, total};
}

ModulePresentation minimize_presentation(const ModulePresentation &pres) {
  size_t g = pres.generators;
  std::vector<std::vector<Polynomial>> rel; // rel[col][row]
  for (size_t j = 0; j < pres.relations.cols(); ++j) {
    std::vector<Polynomial> col;
    for (size_t i = 0; i < g; ++i)
      col.push_back(pres.relations.at(i, j));
    rel.push_back(std::move(col));
  }
  std::vector<bool> gen_alive(g, true), rel_alive(rel.size(), true);
  for (;;) {
    size_t pi = g, pj = rel.size();
    for (size_t j = 0; j < rel.size() && pj == rel.size(); ++j) {
      if (!rel_alive[j])
        continue;
      for (size_t i = 0; i < g; ++i) {
        if (!gen_alive[i])
          continue;
        const Polynomial &e = rel[j][i];
        if (!e.is_zero() && e.is_constant()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pj == rel.size())
      break;
    mpq_class inv = 1 / rel[pj][pi].constant_value();
    for (size_t i = 0; i < g; ++i)
      rel[pj][i] = rel[pj][i].scaled(inv);
    // clear the pivot generator's coordinate from every other relation
    for (size_t j = 0; j < rel.size(); ++j) {
      if (!rel_alive[j] || j == pj || rel[j][pi].is_zero())
        continue;
      Polynomial f = rel[j][pi];
      for (size_t i = 0; i < g; ++i)
        rel[j][i] = rel[j][i] - f * rel[pj][i];
    }
    // substitute the pivot generator away
    gen_alive[pi] = false;
    rel_alive[pj] = false;
  }
  std::vector<size_t> keep;
  for (size_t i = 0; i < g; ++i)
    if (gen_alive[i])
      keep.push_back(i);
  std::vector<ModuleElem> cols;
  for (size_t j = 0; j < rel.size(); ++j) {
    if (!rel_alive[j])
      continue;
    ModuleElem c(pres.ring, keep.size());
    bool nonzero = false;
    for (size_t k = 0; k < keep.size(); ++k) {
      c.comp[k] = reduce_mod_ring(rel[j][keep[k]]);
      nonzero = nonzero || !c.comp[k].is_zero();
    }
    if (nonzero)
      cols.push_back(std::move(c));
  }
  ModulePresentation out;
  out.ring = pres.ring;
  out.generators = keep.size();
  out.relations =
      FreeModuleMap::from_columns(pres.ring, keep.size(), cols);
  return out;
}

QDim q_dimension_at_origin(const ModulePresentation &pres,
                           const GbOptions &opts) {
  const RingPtr &R = pres.ring;
  size_t g = pres.generators;
  size_t extra = R->arity() * g;
  FreeModuleMap rel(R, g, pres.relations.cols() + extra);
  rel.paste(pres.relations, 0, 0);
  size_t c = pres.relations.cols();
  for (size_t v = 0; v < R->arity(); ++v)
    for (size_t j = 0; j < g; ++j)
      rel.at(j, c++) = Polynomial::variable(R, v);
  return q_dimension(ModulePresentation{R, g, rel}, opts);
}

} // namespace mfk
