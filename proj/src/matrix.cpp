#include "matrix.hpp"

namespace mfk {

ModuleElem ModuleElem::operator+(const ModuleElem &o) const {
  if (rank() != o.rank())
    fail(ErrorKind::ShapeMismatch, "module element rank mismatch");
  ModuleElem r(ring, rank());
  for (size_t i = 0; i < comp.size(); ++i)
    r.comp[i] = comp[i] + o.comp[i];
  return r;
}

ModuleElem ModuleElem::operator-(const ModuleElem &o) const {
  if (rank() != o.rank())
    fail(ErrorKind::ShapeMismatch, "module element rank mismatch");
  ModuleElem r(ring, rank());
  for (size_t i = 0; i < comp.size(); ++i)
    r.comp[i] = comp[i] - o.comp[i];
  return r;
}

ModuleElem ModuleElem::times(const Polynomial &p) const {
  ModuleElem r(ring, rank());
  for (size_t i = 0; i < comp.size(); ++i)
    r.comp[i] = comp[i] * p;
  return r;
}

ModuleElem ModuleElem::times_term(const Term &t) const {
  ModuleElem r(ring, rank());
  for (size_t i = 0; i < comp.size(); ++i)
    r.comp[i] = comp[i].times_term(t);
  return r;
}

bool ModuleElem::operator==(const ModuleElem &o) const {
  if (rank() != o.rank())
    return false;
  for (size_t i = 0; i < comp.size(); ++i)
    if (comp[i] != o.comp[i])
      return false;
  return true;
}

FreeModuleMap::FreeModuleMap(RingPtr ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(rows * cols, Polynomial::zero(ring_));
}

FreeModuleMap FreeModuleMap::identity(RingPtr ring, size_t n) {
  FreeModuleMap m(ring, n, n);
  for (size_t i = 0; i < n; ++i)
    m.at(i, i) = Polynomial::constant(ring, 1);
  return m;
}

FreeModuleMap FreeModuleMap::from_literals(
    RingPtr ring, const std::vector<std::vector<std::string>> &rows) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  FreeModuleMap m(ring, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      fail(ErrorKind::ShapeMismatch, "ragged matrix literal");
    for (size_t j = 0; j < c; ++j)
      m.at(i, j) = parse_polynomial(rows[i][j], ring);
  }
  return m;
}

FreeModuleMap FreeModuleMap::from_columns(RingPtr ring, size_t rows,
                                          const std::vector<ModuleElem> &cols) {
  FreeModuleMap m(ring, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows)
      fail(ErrorKind::ShapeMismatch, "column rank mismatch");
    for (size_t i = 0; i < rows; ++i)
      m.at(i, j) = cols[j].comp[i];
  }
  return m;
}

ModuleElem FreeModuleMap::col(size_t j) const {
  ModuleElem v(ring_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    v.comp[i] = at(i, j);
  return v;
}

std::vector<ModuleElem> FreeModuleMap::columns() const {
  std::vector<ModuleElem> out;
  out.reserve(cols_);
  for (size_t j = 0; j < cols_; ++j)
    out.push_back(col(j));
  return out;
}

bool FreeModuleMap::is_zero() const {
  for (const auto &p : a_)
    if (!p.is_zero())
      return false;
  return true;
}

FreeModuleMap FreeModuleMap::operator+(const FreeModuleMap &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::ShapeMismatch, "matrix add shape mismatch");
  FreeModuleMap m(ring_, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k)
    m.a_[k] = a_[k] + o.a_[k];
  return m;
}

FreeModuleMap FreeModuleMap::operator-(const FreeModuleMap &o) const {
  return *this + (-o);
}

FreeModuleMap FreeModuleMap::operator-() const {
  FreeModuleMap m(*this);
  for (auto &p : m.a_)
    p = -p;
  return m;
}

FreeModuleMap FreeModuleMap::operator*(const FreeModuleMap &o) const {
  require_same_ring(ring_, o.ring_, "matrix mul");
  if (cols_ != o.rows_)
    fail(ErrorKind::ShapeMismatch,
         "matrix mul shape mismatch: " + std::to_string(rows_) + "x" +
             std::to_string(cols_) + " times " + std::to_string(o.rows_) +
             "x" + std::to_string(o.cols_));
  FreeModuleMap m(ring_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero())
        continue;
      for (size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero())
          m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

bool FreeModuleMap::operator==(const FreeModuleMap &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k])
      return false;
  return true;
}

FreeModuleMap FreeModuleMap::scaled(const Polynomial &p) const {
  FreeModuleMap m(*this);
  for (auto &q : m.a_)
    q = q * p;
  return m;
}

FreeModuleMap FreeModuleMap::transpose() const {
  FreeModuleMap m(ring_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      m.at(j, i) = at(i, j);
  return m;
}

FreeModuleMap FreeModuleMap::kron(const FreeModuleMap &o) const {
  require_same_ring(ring_, o.ring_, "kron");
  FreeModuleMap m(ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero())
        continue;
      for (size_t p = 0; p < o.rows_; ++p)
        for (size_t q = 0; q < o.cols_; ++q)
          m.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
    }
  return m;
}

void FreeModuleMap::paste(const FreeModuleMap &m, size_t row, size_t col) {
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_)
    fail(ErrorKind::ShapeMismatch, "paste out of bounds");
  for (size_t i = 0; i < m.rows_; ++i)
    for (size_t j = 0; j < m.cols_; ++j)
      at(row + i, col + j) = m.at(i, j);
}

FreeModuleMap FreeModuleMap::map_entries(
    RingPtr target,
    const std::function<Polynomial(const Polynomial &)> &fn) const {
  FreeModuleMap m(target, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      m.at(i, j) = fn(at(i, j));
  return m;
}

std::vector<std::vector<std::string>> FreeModuleMap::to_literals() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    out[i].reserve(cols_);
    for (size_t j = 0; j < cols_; ++j)
      out[i].push_back(at(i, j).to_string());
  }
  return out;
}

} // namespace mfk
