#pragma once

#include <functional>
#include <vector>

#include "hecke/multipoly.hpp"

namespace hecke {

using Operator = std::function<MultiPoly(const MultiPoly&)>;

// Operator indices are 1-based as in the algebra; T_0 is the affine generator.
MultiPoly apply_T(int i, int power, const MultiPoly& f);
// T_0 through the divided-difference formula with s_0 (used to cross-check apply_T(0, ...)).
MultiPoly apply_T0_divided(const MultiPoly& f);
// Applies T_{w[0]}^{p} ... T_{w[k-1]}^{p}, rightmost first.
MultiPoly apply_T_word(const std::vector<int>& word, int power, const MultiPoly& f);
MultiPoly apply_omega(int power, const MultiPoly& f);
MultiPoly apply_Y(int i, int power, const MultiPoly& f);
MultiPoly apply_D(int i, const MultiPoly& f);
MultiPoly apply_scriptD(int i, const MultiPoly& f);
MultiPoly apply_scriptD_hat_form(int i, const MultiPoly& f);
MultiPoly apply_scriptD_product_form(int i, const MultiPoly& f);
MultiPoly apply_e(int i, const MultiPoly& f);
MultiPoly apply_bigE(int i, const MultiPoly& f);

enum class Raise { Phi1, Phi2 };
enum class Lower { Psi1, Psi2 };
MultiPoly apply_raise(Raise which, const MultiPoly& f);
MultiPoly apply_lower(Lower which, const MultiPoly& f);
MultiPoly apply_lower_adjoint(const MultiPoly& f);  // Psi_1^* = -q E_n T_{n-1} ... T_1

// Sum over all permutations of T_sigma, each through its bubble-sort word.
MultiPoly apply_uplus(const MultiPoly& f, int max_n = 5);
std::vector<std::vector<int>> bubble_sort_words(int n);

MultiPoly apply_h(int i, const MultiPoly& f);
MultiPoly apply_h_hat(int i, const MultiPoly& f);

// Conjugation by the coefficient involution: f -> tilde(op(tilde(f))).
Operator tilde_conjugate(Operator op);
Operator hat_conjugate(Operator op);

}  // namespace hecke
