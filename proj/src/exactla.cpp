#include "singcat/exactla.hpp"

#include <sstream>

namespace singcat {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p)
{
    mpz_class r = z % mpz_class(std::to_string(p));
    if (r < 0)
        r += mpz_class(std::to_string(p));
    return std::stoull(r.get_str());
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    if (!is_prime(p) || p >= (std::uint64_t{1} << 62))
        throw InputError("field characteristic must be 0 or a prime below 2^62, got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field f) : field_(f)
{
    if (!f.is_rational())
        value_ = std::uint64_t{0};
}

Scalar::Scalar(Field f, long value) : field_(f)
{
    if (f.is_rational())
        value_ = mpq_class(value);
    else {
        const auto p = static_cast<__int128>(f.characteristic());
        __int128 r = static_cast<__int128>(value) % p;
        value_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
    }
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f)
{
    if (f.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = v;
        return;
    }
    std::uint64_t p = f.characteristic();
    std::uint64_t num = reduce_mod(value.get_num(), p);
    std::uint64_t den = reduce_mod(value.get_den(), p);
    if (den == 0)
        throw InputError("denominator divisible by the characteristic");
    value_ = mulmod(num, powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field f, std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw InputError("cannot parse scalar '" + s + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const
{
    if (field_.is_rational())
        return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const
{
    if (field_.is_rational())
        return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

std::string Scalar::to_string() const
{
    if (field_.is_rational())
        return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

mpq_class Scalar::as_rational() const
{
    if (field_.is_rational())
        return std::get<mpq_class>(value_);
    return mpq_class(mpz_class(std::to_string(std::get<std::uint64_t>(value_))));
}

void Scalar::check_same(const Scalar& o) const
{
    if (!(field_ == o.field_))
        throw Error("mixed field descriptors: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const
{
    Scalar r(field_);
    if (field_.is_rational()) {
        r.value_ = mpq_class(-std::get<mpq_class>(value_));
    } else {
        std::uint64_t v = std::get<std::uint64_t>(value_);
        r.value_ = v == 0 ? 0 : field_.characteristic() - v;
    }
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error("division by zero");
    Scalar r(field_);
    if (field_.is_rational()) {
        r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    } else {
        std::uint64_t p = field_.characteristic();
        r.value_ = powmod(std::get<std::uint64_t>(value_), p - 2, p);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        std::uint64_t p = field_.characteristic();
        std::uint64_t s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_);
        value_ = s >= p ? s - p : s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rational())
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    else
        value_ = mulmod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_), field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.value_ == b.value_;
}

Vec zero_vec(Field f, std::size_t n)
{
    return Vec(n, Scalar(f));
}

Vec unit_vec(Field f, std::size_t n, std::size_t i)
{
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar(f, 1);
    return v;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw Error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b)
{
    if (a.size() != b.size())
        throw Error("vector length mismatch");
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero())
            a[i] += c * b[i];
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f))
{
}

Mat Mat::identity(Field f, std::size_t n)
{
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(f, 1);
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Mat m(f, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = Scalar(f, rows[r][c]);
    }
    return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols)
{
    Mat m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

Vec Mat::column(std::size_t c) const
{
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Vec Mat::row(std::size_t r) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Mat::set_column(std::size_t c, const Vec& v)
{
    if (v.size() != rows_)
        throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

std::vector<Vec> Mat::columns() const
{
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

Mat Mat::transpose() const
{
    Mat t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Mat::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Mat::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& x = (*this)(r, c);
            if (r == c ? !x.is_one() : !x.is_zero())
                return false;
        }
    return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error("block out of range");
    Mat b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw Error("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c)
            (*this)(r0 + r, c0 + c) = b(r, c);
}

Mat Mat::select_columns(std::span<const std::size_t> idx) const
{
    Mat m(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t r = 0; r < rows_; ++r)
            m(r, j) = (*this)(r, idx[j]);
    return m;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const
{
    Mat m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(idx[i], c);
    return m;
}

Vec Mat::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw Error("matrix-vector shape mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& x = (*this)(r, c);
            if (!x.is_zero())
                out[r] += x * v[c];
        }
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols_ != b.rows_)
        throw Error("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    if (!(a.field_ == b.field_))
        throw Error("mixed field descriptors");
    Mat out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero())
                    out(i, j) += x * y;
            }
        }
    return out;
}

Mat operator+(const Mat& a, const Mat& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix sum shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix difference shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

Mat operator*(const Scalar& c, const Mat& a)
{
    Mat out = a;
    for (auto& x : out.data_)
        x *= c;
    return out;
}

bool operator==(const Mat& a, const Mat& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Mat::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat hstack(Field f, std::size_t rows, std::span<const Mat> parts)
{
    std::size_t nc = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows)
            throw Error("hstack row mismatch");
        nc += p.cols();
    }
    Mat out(f, rows, nc);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols();
    }
    return out;
}

Mat vstack(Field f, std::size_t cols, std::span<const Mat> parts)
{
    std::size_t nr = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols)
            throw Error("vstack column mismatch");
        nr += p.rows();
    }
    Mat out(f, nr, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows();
    }
    return out;
}

Mat block_diagonal(Field f, std::span<const Mat> parts)
{
    std::size_t nr = 0, nc = 0;
    for (const auto& p : parts) {
        nr += p.rows();
        nc += p.cols();
    }
    Mat out(f, nr, nc);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        out.set_block(r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return out;
}

RrefResult rref(const Mat& m)
{
    RrefResult res;
    res.reduced = m;
    Mat& a = res.reduced;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a(piv, col).is_zero())
            ++piv;
        if (piv == nr)
            continue;
        if (piv != row)
            for (std::size_t c = col; c < nc; ++c)
                std::swap(a(piv, c), a(row, c));
        const Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < nc; ++c)
            if (!a(row, c).is_zero())
                a(row, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || a(r, col).is_zero())
                continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < nc; ++c)
                if (!a(row, c).is_zero())
                    a(r, c) -= factor * a(row, c);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const Mat& m)
{
    return rref(m).rank;
}

Mat kernel_basis(const Mat& m)
{
    const auto rr = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Mat k(m.field(), nc, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t fc = free_cols[j];
        k(fc, j) = Scalar(m.field(), 1);
        for (std::size_t i = 0; i < rr.rank; ++i)
            k(rr.pivots[i], j) = -rr.reduced(i, fc);
    }
    return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows())
        throw Error("solve: row count mismatch");
    const Field f = a.field();
    const Mat parts[] = {a, b};
    const auto rr = rref(hstack(f, a.rows(), parts));
    Mat x(f, a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        const std::size_t p = rr.pivots[i];
        if (p >= a.cols())
            return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(p, c) = rr.reduced(i, a.cols() + c);
    }
    return x;
}

std::optional<Mat> inverse(const Mat& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve(m, Mat::identity(m.field(), m.rows()));
}

Mat column_space(const Mat& m)
{
    const auto rr = rref(m);
    return m.select_columns(rr.pivots);
}

Mat extend_basis(const Mat& span, const Mat& ambient)
{
    const Mat parts[] = {span, ambient};
    const Mat both = hstack(span.field(), span.rows(), parts);
    const auto rr = rref(both);
    std::vector<std::size_t> added;
    for (auto p : rr.pivots)
        if (p >= span.cols())
            added.push_back(p);
    return both.select_columns(added);
}

void RowEchelon::reduce(Vec& row) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = row[pivots_[k]];
        if (!c.is_zero())
            axpy(row, -c, rows_[k]);
    }
}

bool RowEchelon::add(Vec row)
{
    if (row.size() != cols_)
        throw Error("RowEchelon: row length mismatch");
    reduce(row);
    std::size_t piv = 0;
    while (piv < cols_ && row[piv].is_zero())
        ++piv;
    if (piv == cols_)
        return false;
    const Scalar inv = row[piv].inverse();
    for (auto& x : row)
        if (!x.is_zero())
            x *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
}

Mat RowEchelon::kernel_basis() const
{
    if (rows_.empty())
        return Mat::identity(field_, cols_);
    return singcat::kernel_basis(Mat::from_columns(field_, cols_, rows_).transpose());
}

}  // namespace singcat
