// Exact dense linear algebra over the rationals and prime fields.
//
// Every homological computation in singcat reduces to row reduction of
// small dense matrices. Values are exact: rationals are GMP fractions kept
// in lowest terms, prime-field elements are residues in [0, p).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace singcat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad files, bad indices, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Field descriptor: characteristic 0 (the rationals) or a prime p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;  // rational zero
    explicit Scalar(Field f);
    Scalar(Field f, long value);
    Scalar(Field f, const mpq_class& value);

    /// Parses "n", "-n" or "n/d".
    static Scalar parse(Field f, std::string_view text);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    /// Rational value (char 0) or the residue as an integer (char p).
    mpq_class as_rational() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void check_same(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

class Mat {
public:
    Mat() = default;
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    static Mat from_rows(Field f, const std::vector<std::vector<long>>& rows);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;
    void set_column(std::size_t c, const Vec& v);
    std::vector<Vec> columns() const;

    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);
    Mat select_columns(std::span<const std::size_t> idx) const;
    Mat select_rows(std::span<const std::size_t> idx) const;

    Vec apply(const Vec& v) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& c, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat hstack(Field f, std::size_t rows, std::span<const Mat> parts);
Mat vstack(Field f, std::size_t cols, std::span<const Mat> parts);
Mat block_diagonal(Field f, std::span<const Mat> parts);

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Mat reduced;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Columns form a basis of the null space {x : m x = 0}.
Mat kernel_basis(const Mat& m);
/// Some x with a x = b, or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& m);
/// Linearly independent columns spanning the column space (a subset of the input columns).
Mat column_space(const Mat& m);
/// Columns of `span` extended by columns of `ambient` to a basis of span + ambient;
/// returns only the added columns.
Mat extend_basis(const Mat& span, const Mat& ambient);

/// Incremental Gaussian elimination for tall, sparse linear systems.
/// Rows are reduced against the current pivots as they arrive.
class RowEchelon {
public:
    RowEchelon(Field f, std::size_t cols) : field_(f), cols_(cols) {}

    /// Returns true when the row was independent of the rows seen so far.
    bool add(Vec row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    /// Columns span the common null space of every row added.
    Mat kernel_basis() const;

private:
    void reduce(Vec& row) const;

    Field field_;
    std::size_t cols_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace singcat
