#pragma once

#include <iosfwd>
#include <optional>

#include "matrix.hpp"

namespace mfk {

struct GbOptions {
  // Number of S-pairs processed before aborting with BudgetExceeded.
  long long pair_budget = 200000;
  bool trace = false;             // one line per S-pair
  std::ostream *trace_out = nullptr; // defaults to std::cerr
};

// Reduced Groebner basis of a submodule of A^rank, position-over-term with
// the ring's monomial order on terms.  Ring relations are folded in by the
// engine (each relation times each basis vector joins the generators), so a
// basis over a quotient ring is the basis of the full preimage submodule.
// Elements are monic, tail-reduced, and sorted; equal inputs produce
// bit-identical bases.
struct GroebnerBasis {
  RingPtr ring;
  size_t rank = 0;
  std::vector<ModuleElem> elems;

  bool operator==(const GroebnerBasis &o) const;
};

GroebnerBasis groebner(const std::vector<ModuleElem> &gens, RingPtr ring,
                       size_t rank, const GbOptions &opts = {});
// Convenience: basis of the column span.
GroebnerBasis groebner(const FreeModuleMap &columns_of,
                       const GbOptions &opts = {});

// Full normal form: no term of the result is divisible by a basis lead.
ModuleElem normal_form(const ModuleElem &v, const GroebnerBasis &basis,
                       const GbOptions &opts = {});
Polynomial normal_form(const Polynomial &p, const GroebnerBasis &basis,
                       const GbOptions &opts = {});

// Canonical representative modulo the ring relations only.
Polynomial reduce_mod_ring(const Polynomial &p, const GbOptions &opts = {});

// Columns generate { u : M u = 0 } over M's ring (relations included).
// Computed from the division traces of the basis S-pairs.
FreeModuleMap syzygies(const FreeModuleMap &M, const GbOptions &opts = {});

// Solve M u = v; nullopt when v is not in the column span.
std::optional<ModuleElem> lift(const FreeModuleMap &M, const ModuleElem &v,
                               const GbOptions &opts = {});
// Columnwise lift: solve M U = V.
std::optional<FreeModuleMap> lift(const FreeModuleMap &M,
                                  const FreeModuleMap &V,
                                  const GbOptions &opts = {});

// Cokernel-style data: A^generators / (column span of relations).
struct ModulePresentation {
  RingPtr ring;
  size_t generators = 0;
  FreeModuleMap relations; // relations.rows() == generators
};

// Presentation of ker(d_out) / im(d_in).  Requires d_out * d_in = 0 in the
// ring (checked; CompositionNonzero otherwise).
ModulePresentation homology(const FreeModuleMap &d_in,
                            const FreeModuleMap &d_out,
                            const GbOptions &opts = {});

struct QDim {
  bool finite = true;
  unsigned long long dim = 0;

  bool operator==(const QDim &o) const {
    return finite == o.finite && (!finite || dim == o.dim);
  }
  std::string to_string() const {
    return finite ? std::to_string(dim) : std::string("infinite");
  }
};

// Q-vector-space dimension of the presented module, by counting standard
// monomials under the staircase of the relation basis (ring relations
// included automatically).
QDim q_dimension(const ModulePresentation &pres, const GbOptions &opts = {});

// Gaussian elimination of unit (constant) entries in the relation matrix;
// yields an isomorphic presentation with fewer generators.
ModulePresentation minimize_presentation(const ModulePresentation &pres);

// Dimension of pres tensored down to the residue field at the origin (all
// variables sent to zero); always finite.
QDim q_dimension_at_origin(const ModulePresentation &pres,
                           const GbOptions &opts = {});

} // namespace mfk
