#pragma once

#include <string>
#include <vector>

#include "artinforge/polynomial.hpp"
#include "artinforge/quotient.hpp"

namespace artinforge::lab {

// Binomial ideal ⟨Π_{j≠i} x_j − x_i : 1 <= i <= n⟩ in x_1..x_n; for n = 2 the
// degenerate choice ⟨x_1, x_2⟩.
Ideal binomial_ideal(int n);

/// Monomial generators of the GRevLex initial ideal predicted in closed form:
/// x_i^2 (i < n), x_1⋯x_{n-1}, and x_n^{2j+1}·x_T for |T| = n-2-j.
std::vector<Monomial> expected_initial_generators(int n);

struct BasisMonomial {
  Monomial monomial;
  int j = 0;  // |T| = n-2-j
  int s = 0;  // exponent of x_n, 0 <= s <= 2j
};

// x_n^s·x_T for T ⊂ {1..n-1}, |T| = n-2-j, 0 <= s <= 2j.
std::vector<BasisMonomial> expected_standard_monomials(int n);

// ⟨x_i^2 − x_n^2 (i < n), Π_{j≠i} x_j (1 <= i <= n)⟩
Ideal homogeneous_ideal(int n);

// Same ideal written with x_{n-1}^2 as the reference square.
Ideal homogeneous_ideal_alt(int n);

/// Complete intersection L in x_1..x_{n-1}: x_i^2 − x_{n-1}^2 for i <= n-2,
/// and x_1⋯x_{n-1}. Indexed by the n of the ambient family.
Ideal complete_intersection(int n);

/// L + ⟨x_n p_i, x_n z − x_{n-1}^2⟩ in x_1..x_n, z (z is variable n, 0-based),
/// where p_i is the product of x_1..x_{n-1} without x_i.
Ideal unprojection_ideal(int n);

// Σ m^2 over the monomials m of degree n-2 in y_1..y_n.
DualPolynomial dual_socle_generator(int n);

enum class IdealKind { I, JExpected, KExpected, L, Q };

IdealKind parse_ideal_kind(const std::string& name);
Ideal build_ideal(IdealKind which, int n);
// Names of the variables of build_ideal(which, n).
VariableNames ideal_variable_names(IdealKind which, int n);

}  // namespace artinforge::lab
