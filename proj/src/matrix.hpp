#pragma once

#include <functional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace mfk {

// Column vector in a free module A^rank.
struct ModuleElem {
  RingPtr ring;
  std::vector<Polynomial> comp;

  ModuleElem() = default;
  ModuleElem(RingPtr r, size_t rank) : ring(std::move(r)) {
    comp.assign(rank, Polynomial::zero(ring));
  }
  size_t rank() const { return comp.size(); }
  bool is_zero() const {
    for (const auto &p : comp)
      if (!p.is_zero())
        return false;
    return true;
  }
  ModuleElem operator+(const ModuleElem &o) const;
  ModuleElem operator-(const ModuleElem &o) const;
  ModuleElem times(const Polynomial &p) const;
  ModuleElem times_term(const Term &t) const;
  bool operator==(const ModuleElem &o) const;
};

// Matrix of polynomials, row-major, representing an A-linear map
// A^cols -> A^rows acting on column vectors.
class FreeModuleMap {
public:
  FreeModuleMap() = default;
  FreeModuleMap(RingPtr ring, size_t rows, size_t cols);

  static FreeModuleMap identity(RingPtr ring, size_t n);
  static FreeModuleMap from_literals(
      RingPtr ring, const std::vector<std::vector<std::string>> &rows);
  static FreeModuleMap from_columns(RingPtr ring, size_t rows,
                                    const std::vector<ModuleElem> &cols);

  const RingPtr &ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Polynomial &at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Polynomial &at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  ModuleElem col(size_t j) const;
  std::vector<ModuleElem> columns() const;

  bool is_zero() const;
  FreeModuleMap operator+(const FreeModuleMap &o) const;
  FreeModuleMap operator-(const FreeModuleMap &o) const;
  FreeModuleMap operator*(const FreeModuleMap &o) const;
  FreeModuleMap operator-() const;
  bool operator==(const FreeModuleMap &o) const;
  FreeModuleMap scaled(const Polynomial &p) const;
  FreeModuleMap transpose() const;
  FreeModuleMap kron(const FreeModuleMap &o) const;

  // Writes `m` into this matrix with its top-left corner at (row, col).
  void paste(const FreeModuleMap &m, size_t row, size_t col);

  // Entry-wise ring change.
  FreeModuleMap map_entries(RingPtr target,
                            const std::function<Polynomial(
                                const Polynomial &)> &fn) const;

  std::vector<std::vector<std::string>> to_literals() const;

private:
  RingPtr ring_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

} // namespace mfk
