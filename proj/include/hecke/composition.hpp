#pragma once

#include <string>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

using Composition = std::vector<int>;
using Partition = std::vector<int>;  // weakly decreasing, padded with zeros to length n

int size_of(const Composition& eta);
Partition sorted_partition(const Composition& eta);  // eta^+
Partition conjugate(const Partition& lambda);          // lambda', without padding
bool is_partition(const Composition& eta);

// All compositions of `degree` into n parts, lexicographically decreasing.
std::vector<Composition> compositions(int n, int degree);
std::vector<Composition> compositions_up_to(int n, int max_degree);
std::vector<Partition> partitions(int n, int degree);
// Distinct rearrangements of lambda, lexicographically decreasing.
std::vector<Composition> orbit(const Partition& lambda);

bool dominates(const Partition& mu, const Partition& lambda);  // mu <= lambda in dominance
// nu < eta in the order used for triangularity; false for different degrees.
bool comp_less(const Composition& nu, const Composition& eta);

// Largest-first linear extension of comp_less on a set of same-degree compositions.
std::vector<Composition> topological_order(std::vector<Composition> set);

std::vector<ExactScalar> spectral_vector(const Composition& eta);
// t^{delta} = (1, t, ..., t^{n-1}).
std::vector<ExactScalar> principal_point(int n);

struct Node {
    int row;  // 0-based part index i
    int col;  // 1-based column j
};
std::vector<Node> nodes(const Composition& eta);
int arm(const Composition& eta, const Node& s);
int leg(const Composition& eta, const Node& s);
int coarm(const Composition& eta, const Node& s);
int coleg(const Composition& eta, const Node& s);

struct CompositionConstants {
    ExactScalar d, d_prime, e;
    int a_stat = 0, l_stat = 0, lprime_stat = 0;
    int b_plus = 0, b_conj = 0;  // b(eta^+), b((eta^+)')
};
CompositionConstants composition_constants(const Composition& eta);

int b_statistic(const Partition& lambda);  // sum (i-1) lambda_i
int min_perm_length(const Composition& eta);
ExactScalar alpha_coefficient(const Composition& eta);
ExactScalar alpha_coefficient_from_stats(const Composition& eta);

Composition phi_map(const Composition& eta);  // (eta_2, ..., eta_n, eta_1 + 1)
Composition psi_map(const Composition& eta);  // (eta_n - 1, eta_1, ..., eta_{n-1}); DomainError if eta_n = 0
Composition swap_map(const Composition& eta, int i);  // swaps parts i, i+1 (1-based)

// [n]_t! = prod_{i=1}^n (1 + t + ... + t^{i-1}).
ExactScalar t_factorial(int n);
// P_lambda(1, t, ..., t^{n-1}) in closed form.
ExactScalar principal_value_P(const Partition& lambda);
// (alpha)^{(q,t)}_lambda = prod_s (t^{l'(s)} - q^{a'(s)} alpha).
ExactScalar generalized_pochhammer(const ExactScalar& alpha, const Partition& lambda);

Composition parse_composition(const std::string& text);
std::string composition_string(const Composition& eta);

}  // namespace hecke
