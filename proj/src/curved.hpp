#pragma once

#include "groebner.hpp"

namespace mfk {

// Z/2-graded pair of free modules with odd differential squaring to W:
//   p1 : P_1 -> P_0   (rank_even x rank_odd matrix)
//   p0 : P_0 -> P_1   (rank_odd x rank_even matrix)
//   p1 p0 = W id,  p0 p1 = W id.
// Construction checks shapes only; verify() checks the curvature identities
// (deferred so that malformed user input is reported by the verify command
// rather than at load time).
struct MatrixFactorization {
  RingPtr ring;
  Polynomial W;
  FreeModuleMap p1, p0;

  size_t rank_even() const { return p1.rows(); }
  size_t rank_odd() const { return p1.cols(); }
};

MatrixFactorization make_mf(RingPtr ring, Polynomial W, FreeModuleMap p1,
                            FreeModuleMap p0);

// Both curvature identities, entrywise modulo the ring relations.
void verify(const MatrixFactorization &P, const GbOptions &opts = {});

// Map of factorizations over one ring with equal curvature.
//   even:  a = f0 : P_0 -> Q_0,  b = f1 : P_1 -> Q_1
//   odd:   a = g  : P_0 -> Q_1,  b = h  : P_1 -> Q_0
struct CurvedMap {
  MatrixFactorization source, target;
  int parity = 0;
  FreeModuleMap a, b;
};

CurvedMap make_curved_map(const MatrixFactorization &source,
                          const MatrixFactorization &target, int parity,
                          FreeModuleMap a, FreeModuleMap b);
CurvedMap identity_map(const MatrixFactorization &P);

// Swap the graded pieces and negate both maps; an exact involution.
MatrixFactorization shift(const MatrixFactorization &P);

// Mapping cone of a closed even map (NotClosed otherwise):
//   c1 = [ q1  f0 ]    c0 = [ q0  f1 ]
//        [ 0  -p0 ]         [ 0  -p1 ]
MatrixFactorization cone(const CurvedMap &f, const GbOptions &opts = {});

MatrixFactorization direct_sum(const MatrixFactorization &P,
                               const MatrixFactorization &Q);

// Dual factorization Hom(P, A), a factorization of -W:
//   P'_0 = dual of P_1, P'_1 = dual of P_0, p1' = p1^t, p0' = -p0^t.
// With this convention dual(dual(P)) == P on the nose.
MatrixFactorization dual(const MatrixFactorization &P);

// Graded external tensor product over the concatenated-variable ring.
// Curvature is additive: W = W_P + W_Q (promote and negate the second
// factor's curvature beforehand to realize a difference).
MatrixFactorization external_tensor(const MatrixFactorization &P,
                                    const MatrixFactorization &Q,
                                    const GbOptions &opts = {});

// coker(p1) as a module over ring/(W): generators indexed by the even
// piece, relations the columns of p1.
ModulePresentation cokernel(const MatrixFactorization &P,
                            const GbOptions &opts = {});

} // namespace mfk
