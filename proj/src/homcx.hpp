#pragma once

#include "curved.hpp"

namespace mfk {

// Z/2-graded Hom-complex of two factorizations over one ring with equal
// curvature.  Graded pieces are flattened by stacking the vectorized blocks:
//   even coords = [vec f0 | vec f1],  f0 : P0 -> Q0,  f1 : P1 -> Q1
//   odd  coords = [vec g  | vec h ],  g  : P0 -> Q1,  h  : P1 -> Q0
// vec is column-major (target index fastest).  d_even carries even to odd,
// d_odd carries odd to even; both compositions vanish (checked).
struct HomComplex {
  MatrixFactorization source, target;
  size_t even_rank = 0, odd_rank = 0;
  FreeModuleMap d_even, d_odd;
};

HomComplex hom_complex(const MatrixFactorization &P,
                       const MatrixFactorization &Q,
                       const GbOptions &opts = {});

struct ExtResult {
  ModulePresentation even, odd;
  QDim even_dim, odd_dim;
};

// Cohomology of the Hom-complex per parity, as minimized presentations over
// the ring together with their Q-dimensions.
ExtResult ext(const MatrixFactorization &P, const MatrixFactorization &Q,
              const GbOptions &opts = {});

// Coordinates of a map in the flattening above (length = even_rank or
// odd_rank of hom_complex(source, target)).
ModuleElem flatten_map(const CurvedMap &f);
CurvedMap unflatten_map(const MatrixFactorization &P,
                        const MatrixFactorization &Q, int parity,
                        const ModuleElem &coords);

// del f = q f - (-1)^{|f|} f p, reduced modulo the ring relations.
bool is_cocycle(const CurvedMap &f, const GbOptions &opts = {});

// Composition a after b of cocycles (checked; NotClosed otherwise), with the
// Koszul sign (-1)^{|a||b|}.  The sign makes the odd generator of
// End(koszul_stab(x^2)) square to +id.
CurvedMap compose(const CurvedMap &a, const CurvedMap &b,
                  const GbOptions &opts = {});

} // namespace mfk
