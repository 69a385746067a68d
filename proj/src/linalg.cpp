#include "repkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace repkit::linalg {

namespace {

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long mod_inverse(long long a, long long p) {
  // extended Euclid; a in [1, p)
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error("not invertible mod p");
  return mod_reduce(t, p);
}

}  // namespace

void Scalar::assign_int(long v) {
  if (field_.is_rationals()) {
    q_ = mpq_class(v);
  } else {
    r_ = mod_reduce(v, field_.p);
  }
}

void Scalar::assign_rat(const mpq_class& q) {
  if (field_.is_rationals()) {
    q_ = q;
    q_.canonicalize();
  } else {
    // interpret num/den mod p
    mpz_class num = q.get_num(), den = q.get_den();
    long long n = mod_reduce(mpz_fdiv_ui(num.get_mpz_t(), field_.p),
                             field_.p);
    long long d = mod_reduce(mpz_fdiv_ui(den.get_mpz_t(), field_.p),
                             field_.p);
    if (d == 0) throw Error("denominator vanishes mod p");
    r_ = mod_reduce(n * mod_inverse(d, field_.p), field_.p);
  }
}

Scalar Scalar::from_string(Field f, const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad scalar: " + s);
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar out(field_, 0L);
  if (field_.is_rationals()) {
    out.q_ = q_ + o.q_;
    out.q_.canonicalize();
  } else {
    out.r_ = mod_reduce(r_ + o.r_, field_.p);
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar out(field_, 0L);
  if (field_.is_rationals()) {
    out.q_ = q_ - o.q_;
    out.q_.canonicalize();
  } else {
    out.r_ = mod_reduce(r_ - o.r_, field_.p);
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar out(field_, 0L);
  if (field_.is_rationals()) {
    out.q_ = q_ * o.q_;
    out.q_.canonicalize();
  } else {
    out.r_ = mod_reduce(r_ * o.r_, field_.p);
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(field_, 0L);
  if (field_.is_rationals()) {
    out.q_ = -q_;
  } else {
    out.r_ = mod_reduce(-r_, field_.p);
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar out(field_, 0L);
  if (field_.is_rationals()) {
    out.q_ = 1 / q_;
    out.q_.canonicalize();
  } else {
    out.r_ = mod_inverse(r_, field_.p);
  }
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.is_rationals()) return q_.get_str();
  return std::to_string(r_);
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar(f, 0L)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  return e_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (!(v.field() == field_)) throw FieldMismatch("entry field mismatch");
  e_[i * cols_ + j] = v;
}

void Matrix::check_same_field(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("matrix field mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(o);
  if (cols_ != o.rows_) throw ValidationError("shape mismatch in product");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.e_[i * out.cols_ + j] = out.at(i, j) + a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ValidationError("shape mismatch in sum");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

Matrix Matrix::power(std::size_t k) const {
  if (rows_ != cols_) throw ValidationError("power of non-square matrix");
  Matrix acc = identity(field_, rows_);
  for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
  return out;
}

Matrix Matrix::hconcat(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw ValidationError("hconcat of nothing");
  std::size_t rows = parts[0].rows(), cols = 0;
  for (const Matrix& p : parts) {
    if (p.rows() != rows) throw ValidationError("hconcat row mismatch");
    cols += p.cols();
  }
  Matrix out(parts[0].field(), rows, cols);
  std::size_t off = 0;
  for (const Matrix& p : parts) {
    out.place(0, off, p);
    off += p.cols();
  }
  return out;
}

Matrix Matrix::vconcat(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw ValidationError("vconcat of nothing");
  std::size_t cols = parts[0].cols(), rows = 0;
  for (const Matrix& p : parts) {
    if (p.cols() != cols) throw ValidationError("vconcat col mismatch");
    rows += p.rows();
  }
  Matrix out(parts[0].field(), rows, cols);
  std::size_t off = 0;
  for (const Matrix& p : parts) {
    out.place(off, 0, p);
    off += p.rows();
  }
  return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw ValidationError("block_diag of nothing");
  std::size_t rows = 0, cols = 0;
  for (const Matrix& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix out(parts[0].field(), rows, cols);
  std::size_t ro = 0, co = 0;
  for (const Matrix& p : parts) {
    out.place(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return out;
}

void Matrix::place(std::size_t i, std::size_t j, const Matrix& block) {
  check_same_field(block);
  if (i + block.rows() > rows_ || j + block.cols() > cols_)
    throw ValidationError("block placement out of range");
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      set(i + r, j + c, block.at(r, c));
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

Echelon reduced_echelon(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Scalar t = m.at(row, j);
        m.set(row, j, m.at(sel, j));
        m.set(sel, j, t);
      }
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      m.set(row, j, m.at(row, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j) - f * m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

RankKernel rank_and_kernel(const Matrix& m) {
  Echelon e = reduced_echelon(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Matrix basis(m.field(), m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis.set(free_cols[j], j, 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      basis.set(e.pivots[i], j, -e.mat.at(i, free_cols[j]));
  }
  return RankKernel{e.rank(), std::move(basis)};
}

SolveResult solve_linear(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("solve_linear field mismatch");
  if (a.rows() != b.rows())
    throw ValidationError("solve_linear row mismatch");
  Matrix aug = Matrix::hconcat({a, b});
  Echelon e = reduced_echelon(aug);
  std::size_t rank_a = 0;
  for (std::size_t p : e.pivots)
    if (p < a.cols()) ++rank_a;
  SolveResult out;
  out.solution_space_dim = a.cols() - rank_a;
  if (rank_a != e.rank()) return out;  // a pivot fell into the rhs block
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.set(e.pivots[i], j, e.mat.at(i, a.cols() + j));
  out.solution = std::move(x);
  return out;
}

CokernelData cokernel_data(const Matrix& m) {
  Echelon col_space = reduced_echelon(m.transpose());
  const std::vector<std::size_t>& piv = col_space.pivots;
  std::vector<std::size_t> comp;
  {
    std::size_t pi = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (pi < piv.size() && piv[pi] == r) {
        ++pi;
      } else {
        comp.push_back(r);
      }
    }
  }
  Matrix proj(m.field(), comp.size(), m.rows());
  for (std::size_t j = 0; j < comp.size(); ++j) {
    proj.set(j, comp[j], 1);
    for (std::size_t i = 0; i < piv.size(); ++i)
      proj.set(j, piv[i], -col_space.mat.at(i, comp[j]));
  }
  return CokernelData{std::move(proj), comp.size()};
}

bool in_column_span(const Matrix& basis, const Matrix& v) {
  return solve_linear(basis, v).solution.has_value();
}

Matrix jordan_matrix(Field f, const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (std::size_t s : blocks) n += s;
  Matrix j(f, n, n);
  std::size_t off = 0;
  for (std::size_t s : blocks) {
    for (std::size_t i = 0; i + 1 < s; ++i) j.set(off + i, off + i + 1, 1);
    off += s;
  }
  return j;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  SolveResult s = solve_linear(m, Matrix::identity(m.field(), m.rows()));
  if (!s.solution || s.solution_space_dim != 0)
    throw Error("matrix not invertible");
  return *s.solution;
}

JordanData nilpotent_jordan(const Matrix& n) {
  if (n.rows() != n.cols())
    throw NotNilpotent("matrix is not square");
  const std::size_t d = n.rows();
  if (d == 0) return JordanData{{}, Matrix(n.field(), 0, 0)};

  // nilpotency index and kernel filtration
  std::vector<Matrix> powers{Matrix::identity(n.field(), d)};
  std::size_t index = 0;
  for (std::size_t s = 1; s <= d; ++s) {
    powers.push_back(powers.back() * n);
    if (powers.back().is_zero()) {
      index = s;
      break;
    }
  }
  if (index == 0) throw NotNilpotent("matrix is not nilpotent");

  std::vector<Matrix> kernels;  // kernels[s] spans ker(n^s), s = 0..index
  for (std::size_t s = 0; s <= index; ++s)
    kernels.push_back(rank_and_kernel(powers[s]).kernel_basis);

  // Chains built top-down: at height s take the images of the taller
  // chains and extend with canonical kernel-basis columns of ker(n^s).
  std::map<std::size_t, std::vector<Matrix>> new_tops;  // height -> columns
  std::vector<Matrix> carried;                          // columns of height s
  for (std::size_t s = index; s >= 1; --s) {
    std::vector<Matrix> span_cols;
    for (std::size_t j = 0; j < kernels[s - 1].cols(); ++j)
      span_cols.push_back(kernels[s - 1].columns({j}));
    for (const Matrix& c : carried) span_cols.push_back(c);

    auto spans = [&](const Matrix& v) {
      if (span_cols.empty()) return v.is_zero();
      return in_column_span(Matrix::hconcat(span_cols), v);
    };

    std::vector<Matrix> accepted;
    for (std::size_t j = 0; j < kernels[s].cols(); ++j) {
      Matrix v = kernels[s].columns({j});
      if (!spans(v)) {
        accepted.push_back(v);
        span_cols.push_back(v);
      }
    }
    new_tops[s] = accepted;
    std::vector<Matrix> next_carried;
    for (const Matrix& c : carried) next_carried.push_back(n * c);
    for (const Matrix& c : accepted) next_carried.push_back(n * c);
    carried = std::move(next_carried);
    if (s == 1) break;
  }

  std::vector<std::size_t> blocks;
  std::vector<Matrix> basis_cols;
  for (std::size_t s = index; s >= 1; --s) {
    for (const Matrix& top : new_tops[s]) {
      blocks.push_back(s);
      std::vector<Matrix> chain(s, top);
      for (std::size_t i = 1; i < s; ++i) chain[i] = n * chain[i - 1];
      // column order [n^{s-1} v, ..., n v, v] gives superdiagonal blocks
      for (std::size_t i = 0; i < s; ++i)
        basis_cols.push_back(chain[s - 1 - i]);
    }
    if (s == 1) break;
  }

  Matrix basis = Matrix::hconcat(basis_cols);
  internal_check(basis.rows() == d && basis.cols() == d,
                 "jordan basis shape");
  Matrix conj = inverse(basis) * n * basis;
  internal_check(conj == jordan_matrix(n.field(), blocks),
                 "jordan conjugation");
  return JordanData{std::move(blocks), std::move(basis)};
}

}  // namespace repkit::linalg
