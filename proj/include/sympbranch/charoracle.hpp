#pragma once

#include "sympbranch/laurent.hpp"
#include "sympbranch/weights.hpp"

namespace sympbranch {

// Schur polynomial s_lambda(x_1..x_k) as the bialternant ratio
// det(x_j^{lambda_i + k - i}) / det(x_j^{k - i}); lambda is padded with
// zeros to length k.  Requires length(lambda) <= k.
MultiLaurentPoly schur(const DominantWeight& lambda, std::size_t k);

// Character of the irreducible Sp_{2n}-module of highest weight lambda
// (length n), as the alternant ratio with row exponents
// l_i = lambda_i + n - i + 1 over m_i = n - i + 1.
MultiLaurentPoly sp_char(const DominantWeight& lambda, std::size_t n);

// Evaluation at all variables = 1.
Int dim_from_char(const MultiLaurentPoly& c);

// Checks s_{lambda^+}(x_1..x_{n-1}, q, q^{-1}) =
//   sum over mu << lambda^+ of s_mu(x_1..x_{n-1}) * prod ch F^{r_i(mu, lambda^+)}.
bool verify_gl_branching_identity(const DominantWeight& lambda, std::size_t n);

// Checks sp_char(lambda, n) at (x_1..x_{n-1}, q) =
//   sum over mu << lambda of sp_char(mu, n-1) * prod ch F^{r_i(mu, lambda^+)}.
// Requires n >= 2.
bool verify_sp_branching_identity(const DominantWeight& lambda, std::size_t n);

}  // namespace sympbranch
