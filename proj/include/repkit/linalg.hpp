#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "repkit/errors.hpp"

namespace repkit::linalg {

/// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rationals() const { return p == 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

inline Field rationals() { return Field{0}; }
inline Field prime_field(std::uint32_t p) { return Field{p}; }

/// An exact scalar: a reduced rational or a residue in [0, p).
/// Arithmetic never rounds; mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v) : field_(f) { assign_int(v); }
  Scalar(Field f, const mpq_class& q) : field_(f) { assign_rat(q); }
  static Scalar from_string(Field f, const std::string& s);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; division by zero throws Error.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "num/den" (den omitted when 1) over Q,
  /// the residue over F_p.
  std::string str() const;
  const mpq_class& rational() const { return q_; }
  long long residue() const { return r_; }

 private:
  void assign_int(long v);
  void assign_rat(const mpq_class& q);
  void check_same(const Scalar& o) const;

  Field field_{};
  long long r_ = 0;  // residue, prime fields only
  mpq_class q_;      // value, rationals only
};

/// Dense row-major matrix over one field. 0xN and Nx0 shapes are valid
/// and represent maps to/from the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix zero(Field f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void set(std::size_t i, std::size_t j, long v) {
    set(i, j, Scalar(field_, v));
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix power(std::size_t k) const;

  /// Columns selected by index list, in the given order.
  Matrix columns(const std::vector<std::size_t>& idx) const;

  static Matrix hconcat(const std::vector<Matrix>& parts);
  static Matrix vconcat(const std::vector<Matrix>& parts);
  static Matrix block_diag(const std::vector<Matrix>& parts);

  /// Writes `block` with its top-left corner at (i, j).
  void place(std::size_t i, std::size_t j, const Matrix& block);

  std::string str() const;

 private:
  void check_same_field(const Matrix& o) const;

  Field field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

/// Reduced row echelon form with pivot column indices (ascending).
struct Echelon {
  Matrix mat;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};
Echelon reduced_echelon(Matrix m);

struct RankKernel {
  std::size_t rank = 0;
  /// Columns span ker(m); canonical basis (one column per free column,
  /// unit entry at the free position).
  Matrix kernel_basis;
};
RankKernel rank_and_kernel(const Matrix& m);

struct SolveResult {
  /// Echelon-canonical particular solution (free variables zero), or
  /// absent when the system is inconsistent.
  std::optional<Matrix> solution;
  std::size_t solution_space_dim = 0;
};
/// Solves a*x = b column-wise.
SolveResult solve_linear(const Matrix& a, const Matrix& b);

struct CokernelData {
  /// Epimorphism from the codomain of m with proj*m = 0; basis is the
  /// complement of the pivot rows of the column space.
  Matrix proj;
  std::size_t dim = 0;
};
CokernelData cokernel_data(const Matrix& m);

struct JordanData {
  /// Block sizes, sorted descending.
  std::vector<std::size_t> blocks;
  /// Invertible T with T^-1 * n * T in Jordan form (superdiagonal ones).
  Matrix basis;
};
/// Jordan data of a nilpotent matrix; throws NotNilpotent otherwise.
JordanData nilpotent_jordan(const Matrix& n);

/// The nilpotent Jordan matrix with the given block sizes.
Matrix jordan_matrix(Field f, const std::vector<std::size_t>& blocks);

/// Matrix inverse; throws Error when singular.
Matrix inverse(const Matrix& m);

/// True when the columns of `v` lie in the column span of `basis`.
bool in_column_span(const Matrix& basis, const Matrix& v);

}  // namespace repkit::linalg
