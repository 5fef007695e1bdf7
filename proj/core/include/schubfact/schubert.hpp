#pragma once

#include "schubfact/permutation.hpp"
#include "schubfact/polynomial.hpp"

namespace schubfact {

// Divided difference: (f - f with x_i, x_{i+1} exchanged) / (x_i - x_{i+1}).
// The division is always exact; computed term by term in closed form.
Polynomial divided_difference(const Polynomial& f, int i);

// x1^{n-1} * x2^{n-2} * ... * x_{n-1}: the Schubert polynomial of the
// longest element of S_n.
Monomial staircase_monomial(int n);

// Schubert polynomial as the weight sum over all pipe dreams of w.
Polynomial schubert_via_pipe_dreams(const Permutation& w);

// Schubert polynomial by descending from the longest element of S_n with
// divided differences, always taking the smallest admissible descent.
Polynomial schubert_via_divided_differences(const Permutation& w);

}  // namespace schubfact
