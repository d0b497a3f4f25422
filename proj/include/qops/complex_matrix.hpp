// complex_matrix.hpp
// Dense row-major complex matrices: the substrate for states and operators.
// Self-contained on purpose; everything downstream (states, measurements,
// channels, entropy) is built on this one representation.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qops/errors.hpp"

namespace qops {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw shape_error("entry count does not match rows*cols");
        }
        check_finite();
    }

    // Row-by-row literal, e.g. ComplexMatrix{{1,0},{0,-1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw shape_error("ragged initializer rows");
            }
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
        check_finite();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return entries_; }

    bool operator==(const ComplexMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }

    ComplexMatrix& operator*=(cplx s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw shape_error("matrix product dimension mismatch");
        }
        ComplexMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    // Conjugate transpose.
    ComplexMatrix adjoint() const {
        ComplexMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                r(j, i) = std::conj((*this)(i, j));
            }
        }
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& e : entries_) s += std::norm(e);
        return std::sqrt(s);
    }

    double hermiticity_defect() const {
        if (!square()) return std::numeric_limits<double>::infinity();
        double m = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i; j < cols_; ++j) {
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
            }
        }
        return m;
    }

    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw shape_error("matrix shape mismatch");
        }
    }

    void check_finite() const {
        for (const auto& e : entries_) {
            if (!is_finite(e)) {
                throw argument_error("matrix entry is not finite");
            }
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

// -------- factories --------

inline ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

inline ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

// |i><j| in a dim-dimensional space.
inline ComplexMatrix basis_matrix(std::size_t dim, std::size_t i, std::size_t j) {
    if (i >= dim || j >= dim) {
        throw argument_error("basis index out of range");
    }
    ComplexMatrix m(dim, dim);
    m(i, j) = 1.0;
    return m;
}

inline ComplexMatrix basis_projector(std::size_t dim, std::size_t i) {
    return basis_matrix(dim, i, i);
}

inline ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix pauli_y() {
    return ComplexMatrix{{cplx{0, 0}, cplx{0, -1}}, {cplx{0, 1}, cplx{0, 0}}};
}
inline ComplexMatrix pauli_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

// -------- core operations --------

// Kronecker product. Subsystem ordering is big-endian: the left factor is
// the most significant block.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.empty() || b.empty()) {
        throw argument_error("kron of empty matrix");
    }
    const std::size_t max_dim = std::numeric_limits<std::size_t>::max();
    if (a.rows() > max_dim / b.rows() || a.cols() > max_dim / b.cols()) {
        throw size_error("kron result dimensions overflow");
    }
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

inline cplx trace(const ComplexMatrix& a) {
    if (!a.square()) {
        throw shape_error("trace of non-square matrix");
    }
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

// (A + A^dagger)/2. IEEE conjugation is exact, so the result is Hermitian
// to the last bit.
inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    if (!a.square()) {
        throw shape_error("hermitian_part of non-square matrix");
    }
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    return r;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw shape_error("max_abs_diff shape mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

// -------- text serialization --------
// One row per line; each entry is a single "re+imj" token, 17 significant
// digits, tokens separated by single spaces. Round-trips doubles exactly.

inline std::string format_complex(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", z.real());
    std::string s(buf);
    s += std::signbit(z.imag()) ? '-' : '+';
    std::snprintf(buf, sizeof(buf), "%.17g", std::abs(z.imag()));
    s += buf;
    s += 'j';
    return s;
}

inline std::string format_matrix(const ComplexMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += format_complex(m(i, j));
        }
        out += '\n';
    }
    return out;
}

inline cplx parse_complex(const std::string& token) {
    const char* p = token.c_str();
    char* end = nullptr;
    const double re = std::strtod(p, &end);
    if (end == p || (*end != '+' && *end != '-')) {
        throw argument_error("malformed complex token: " + token);
    }
    p = end;
    const double im = std::strtod(p, &end);
    if (end == p || *end != 'j' || *(end + 1) != '\0') {
        throw argument_error("malformed complex token: " + token);
    }
    return {re, im};
}

inline ComplexMatrix parse_matrix(const std::string& text) {
    std::vector<cplx> entries;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::string tok;
        std::size_t n = 0;
        while (toks >> tok) {
            entries.push_back(parse_complex(tok));
            ++n;
        }
        if (n == 0) continue;  // blank line
        if (rows == 0) {
            cols = n;
        } else if (n != cols) {
            throw argument_error("ragged matrix text");
        }
        ++rows;
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

}  // namespace qops
