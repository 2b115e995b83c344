#include "symqcs/matrix.hpp"

#include <algorithm>

namespace symqcs {

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void Matrix::check_same(const Matrix& o) const {
  if (f_ != o.f_) throw ConfigError("matrix field mismatch: " + f_.str() + " vs " + o.f_.str());
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgError("matrix shape mismatch in +");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.add(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgError("matrix shape mismatch in -");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.sub(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(o);
  if (cols_ != o.rows_) throw ArgError("matrix shape mismatch in *");
  Matrix m(f_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < o.cols_; ++c) {
        const Rat& y = o.at(k, c);
        if (y == 0) continue;
        m.at(r, c) = f_.add(m.at(r, c), f_.mul(x, y));
      }
    }
  return m;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.mul(a_[i], c);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Matrix Matrix::kron(const Matrix& o) const {
  check_same(o);
  Matrix m(f_, rows_ * o.rows_, cols_ * o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Rat& x = at(r, c);
      if (x == 0) continue;
      for (int r2 = 0; r2 < o.rows_; ++r2)
        for (int c2 = 0; c2 < o.cols_; ++c2) {
          if (o.at(r2, c2) == 0) continue;
          m.at(r * o.rows_ + r2, c * o.cols_ + c2) = f_.mul(x, o.at(r2, c2));
        }
    }
  return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_) throw ArgError("hcat row mismatch");
  Matrix m(f_, rows_, cols_ + o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& o) const {
  check_same(o);
  if (cols_ != o.cols_) throw ArgError("vcat col mismatch");
  Matrix m(f_, rows_ + o.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (int r = 0; r < o.rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
  return m;
}

Matrix Matrix::col(int c) const {
  Matrix m(f_, rows_, 1);
  for (int r = 0; r < rows_; ++r) m.at(r, 0) = at(r, c);
  return m;
}

std::vector<Rat> Matrix::col_vec(int c) const {
  std::vector<Rat> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::from_cols(Field f, int rows, const std::vector<std::vector<Rat>>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw ArgError("from_cols length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = f.reduce(cols[c][r]);
  }
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.r = m;
  Matrix& a = res.r;
  const Field& f = m.field();
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    // Prefer a ±1 pivot to keep entries small.
    int piv = -1;
    for (int r = lead; r < a.rows(); ++r) {
      if (a.at(r, c) == 1 || a.at(r, c) == -1) {
        piv = r;
        break;
      }
      if (piv < 0 && a.at(r, c) != 0) piv = r;
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int k = 0; k < a.cols(); ++k) std::swap(a.at(piv, k), a.at(lead, k));
    Rat inv = f.inv(a.at(lead, c));
    if (inv != 1)
      for (int k = c; k < a.cols(); ++k) a.at(lead, k) = f.mul(a.at(lead, k), inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, c) == 0) continue;
      Rat factor = a.at(r, c);
      for (int k = c; k < a.cols(); ++k)
        a.at(r, k) = f.sub(a.at(r, k), f.mul(factor, a.at(lead, k)));
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, static_cast<int>(j)) = 1;
    for (int i = 0; i < rr.rank; ++i)
      k.at(rr.pivots[i], static_cast<int>(j)) = f.neg(rr.r.at(i, fc));
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  Matrix img(m.field(), m.rows(), rr.rank);
  for (int i = 0; i < rr.rank; ++i)
    for (int r = 0; r < m.rows(); ++r) img.at(r, i) = m.at(r, rr.pivots[i]);
  return img;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ArgError("solve shape mismatch");
  RrefResult rr = rref(a.hcat(b));
  const Field& f = a.field();
  // Inconsistent when a pivot lands in the b block.
  for (int p : rr.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int c = 0; c < b.cols(); ++c) x.at(rr.pivots[i], c) = rr.r.at(i, a.cols() + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x) return std::nullopt;
  if (!((a * *x).is_identity())) return std::nullopt;
  return x;
}

Matrix swap_matrix(Field f, int dim_v, int dim_w) {
  Matrix m(f, dim_v * dim_w, dim_v * dim_w);
  for (int i = 0; i < dim_v; ++i)
    for (int j = 0; j < dim_w; ++j) m.at(j * dim_v + i, i * dim_w + j) = 1;
  return m;
}

std::vector<Rat> SpanBuilder::reduce(std::vector<Rat> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c == 0) continue;
    Rat factor = c;
    for (int k = 0; k < ambient_; ++k)
      if (rows_[i][k] != 0) v[k] = f_.sub(v[k], f_.mul(factor, rows_[i][k]));
  }
  return v;
}

bool SpanBuilder::add(std::vector<Rat> v) {
  if (static_cast<int>(v.size()) != ambient_) throw ArgError("span vector length mismatch");
  v = reduce(std::move(v));
  int piv = -1;
  for (int k = 0; k < ambient_; ++k)
    if (v[k] != 0) {
      piv = k;
      break;
    }
  if (piv < 0) return false;
  Rat inv = f_.inv(v[piv]);
  if (inv != 1)
    for (auto& x : v) x = f_.mul(x, inv);
  // Back-substitute into existing rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = rows_[i][piv];
    if (c == 0) continue;
    Rat factor = c;
    for (int k = 0; k < ambient_; ++k)
      if (v[k] != 0) rows_[i][k] = f_.sub(rows_[i][k], f_.mul(factor, v[k]));
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool SpanBuilder::add_cols(const Matrix& m) {
  bool grew = false;
  for (int c = 0; c < m.cols(); ++c) grew |= add(m.col_vec(c));
  return grew;
}

bool SpanBuilder::contains(const std::vector<Rat>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

bool SpanBuilder::contains_cols(const Matrix& m) const {
  for (int c = 0; c < m.cols(); ++c)
    if (!contains(m.col_vec(c))) return false;
  return true;
}

Matrix SpanBuilder::basis() const {
  Matrix b(f_, ambient_, dim());
  for (int j = 0; j < dim(); ++j)
    for (int k = 0; k < ambient_; ++k) b.at(k, j) = rows_[j][k];
  return b;
}

QuotientSpace::QuotientSpace(Field f, int ambient, const Matrix& sub) : f_(f), ambient_(ambient) {
  if (sub.cols() > 0 && sub.rows() != ambient) throw ArgError("quotient subspace shape mismatch");
  SpanBuilder sb(f, ambient);
  sb.add_cols(sub);
  Matrix b = sb.basis();
  rows_.resize(b.cols());
  for (int j = 0; j < b.cols(); ++j) rows_[j] = b.col_vec(j);
  for (const auto& row : rows_) {
    int piv = 0;
    while (row[piv] == 0) ++piv;
    pivots_.push_back(piv);
  }
  std::vector<bool> is_pivot(ambient, false);
  for (int p : pivots_) is_pivot[p] = true;
  for (int k = 0; k < ambient; ++k)
    if (!is_pivot[k]) free_.push_back(k);
}

std::vector<Rat> QuotientSpace::project(std::vector<Rat> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c == 0) continue;
    Rat factor = c;
    for (int k = 0; k < ambient_; ++k)
      if (rows_[i][k] != 0) v[k] = f_.sub(v[k], f_.mul(factor, rows_[i][k]));
  }
  std::vector<Rat> out(free_.size());
  for (std::size_t j = 0; j < free_.size(); ++j) out[j] = v[free_[j]];
  return out;
}

Matrix QuotientSpace::project_matrix(const Matrix& m) const {
  Matrix out(f_, dim(), m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    auto v = project(m.col_vec(c));
    for (int r = 0; r < dim(); ++r) out.at(r, c) = v[r];
  }
  return out;
}

Matrix QuotientSpace::projection() const {
  return project_matrix(Matrix::identity(f_, ambient_));
}

Matrix QuotientSpace::lift() const {
  Matrix m(f_, ambient_, dim());
  for (int j = 0; j < dim(); ++j) m.at(free_[j], j) = 1;
  return m;
}

Matrix QuotientSpace::induced(const Matrix& op) const {
  return project_matrix(op * lift());
}

}  // namespace symqcs
