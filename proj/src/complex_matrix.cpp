// Copyright 2026 The oqwc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oqwc/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oqwc/error.hpp"

namespace oqwc {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw DimensionError("ComplexMatrix: dimension must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0 || data_.size() != dim * dim) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(data_.size()));
    }
    if (!std::all_of(data_.begin(), data_.end(), finite)) {
        throw DomainError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) {
        throw DimensionError("ComplexMatrix: empty initializer");
    }
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("ComplexMatrix: initializer rows must form a square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!std::all_of(data_.begin(), data_.end(), finite)) {
        throw DomainError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) noexcept {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

Complex ComplexMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator-");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            a(i, j) -= b(i, j);
        }
    }
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d(j, i) = std::conj(a(i, j));
        }
    }
    return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix k(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t r = 0; r < nb; ++r) {
                for (std::size_t c = 0; c < nb; ++c) {
                    k(i * nb + r, j * nb + c) = aij * b(r, c);
                }
            }
        }
    }
    return k;
}

ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "sandwich");
    const std::size_t n = a.dim();
    const ComplexMatrix ab = matmul(a, b);
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += ab(i, k) * std::conj(a(j, k));
            }
            out(i, j) = s;
        }
    }
    return out;
}

StateVector matvec(const ComplexMatrix& a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw DimensionError("apply: vector length " + std::to_string(v.size()) + " vs matrix dimension " +
                             std::to_string(a.dim()));
    }
    StateVector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

ComplexMatrix projector(std::span<const Complex> psi) {
    ComplexMatrix p(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            p(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return p;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        m = std::max(m, std::abs(ea[k] - eb[k]));
    }
    return m;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    return max_abs_diff(matmul(dagger(u), u), ComplexMatrix::identity(u.dim())) <= tol;
}

bool is_hermitian(const ComplexMatrix& a, double tol) { return max_abs_diff(a, dagger(a)) <= tol; }

double norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

StateVector basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis_state: index out of range");
    }
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

namespace gates {

ComplexMatrix identity(std::size_t dim) { return ComplexMatrix::identity(dim); }

ComplexMatrix hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {{h, h}, {h, -h}};
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix ry(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return {{c, -s}, {s, c}};
}

ComplexMatrix cnot() {
    return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
}

} // namespace gates

} // namespace oqwc
