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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace oqwc {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
///
/// Every matrix in this library is small (dimension <= 16), so storage is a
/// flat vector and all products are the naive triple loop.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero matrix of the given dimension. Throws DimensionError for dim == 0.
    explicit ComplexMatrix(std::size_t dim);

    /// Row-major entries; throws DimensionError if `entries.size() != dim*dim`
    /// and DomainError if any entry is NaN or infinite.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    /// Nested rows, e.g. `{{0, 1}, {1, 0}}`. Rows must form a square.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale) noexcept;

    Complex trace() const noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Matrix product; throws DimensionError when dimensions differ.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product a (x) b; `a` indexes the most significant factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b * a^dagger without forming a^dagger.
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product.
StateVector matvec(const ComplexMatrix& a, std::span<const Complex> v);

/// Outer product |psi><psi|.
ComplexMatrix projector(std::span<const Complex> psi);

/// Largest absolute entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& u, double tol);
bool is_hermitian(const ComplexMatrix& a, double tol);

double norm(std::span<const Complex> v);

/// Computational basis vector |index> of the given dimension.
StateVector basis_state(std::size_t dim, std::size_t index);

namespace gates {

ComplexMatrix identity(std::size_t dim = 2);
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_z();

// R_y(angle) = [[cos(angle/2), -sin(angle/2)], [sin(angle/2), cos(angle/2)]],
// so R_y(angle)|0> = cos(angle/2)|0> + sin(angle/2)|1>.
ComplexMatrix ry(double angle);

/// Two-qubit CNOT, control on the first (most significant) qubit.
ComplexMatrix cnot();

} // namespace gates

} // namespace oqwc
