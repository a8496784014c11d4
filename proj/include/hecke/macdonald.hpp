#pragma once

#include <map>
#include <utility>

#include "hecke/composition.hpp"
#include "hecke/report.hpp"

namespace hecke {

enum class Orientation { standard, inverted };

struct MacdonaldRecord {
    Composition eta;
    Orientation orientation = Orientation::standard;
    MultiPoly poly;
    std::vector<ExactScalar> spectral;
};

// Write-once memo for one run: polynomials, operator words applied to 1,
// and Cherednik actions on monomials.  Not thread-safe; use one per thread.
class Workspace {
public:
    const MultiPoly& E(const Composition& eta);
    const MultiPoly& E_tilde(const Composition& eta);
    const MultiPoly& P(const Partition& lambda);
    // e_1^{nu_1} ... e_n^{nu_n} . 1 and the same word in E_i.
    const MultiPoly& e_word(const Composition& nu);
    const MultiPoly& E_word(const Composition& nu);

    // Al-Salam-Carlitz families (implemented in asc.cpp).
    const MultiPoly& EV(const Composition& eta);         // operator pipeline
    const MultiPoly& EV_series(const Composition& eta);  // series pipeline
    const MultiPoly& EU(const Composition& eta);         // reflection pipeline
    const MultiPoly& EU_series(const Composition& eta);  // series pipeline
    const MultiPoly& G(const Composition& eta);          // shifted Macdonald
    const MultiPoly& P_tilde(const Partition& lambda);

private:
    const MultiPoly& Y_on_monomial(int i, const Composition& mu);

    std::map<Composition, MultiPoly> E_, E_tilde_, P_, P_tilde_, e_word_, E_word_;
    std::map<Composition, MultiPoly> EV_, EV_series_, EU_, EU_series_, G_;
    std::map<std::pair<int, Composition>, MultiPoly> Y_mono_;
};

MacdonaldRecord nonsym_macdonald(const Composition& eta, Orientation orientation, Workspace& ws);
MacdonaldRecord nonsym_macdonald(const Composition& eta, Orientation orientation = Orientation::standard);

MultiPoly sym_macdonald(const Partition& lambda, Workspace& ws);

// Verifies substitution at (1, t, ..., t^{n-1}) against t^{l} e / d and
// returns the closed form; a mismatch raises IdentityViolation.
ExactScalar principal_specialization(const Composition& eta, Workspace& ws);

// Substitution of the symmetric polynomial at (1, t, ..., t^{n-1}).
ExactScalar principal_value_check(const Partition& lambda, Workspace& ws);

// Evaluates an operator polynomial sum_nu c_nu X^nu . 1 given the cached words.
MultiPoly apply_operator_polynomial(const MultiPoly& coefficients,
                                    const std::function<const MultiPoly&(const Composition&)>& word);

std::vector<OperatorReport> raising_lowering_replay(const Composition& eta, Workspace& ws);
OperatorReport uplus_action_replay(const Composition& eta, Workspace& ws);
OperatorReport thm11_replay(const Composition& eta, Workspace& ws);
std::vector<OperatorReport> node_constant_replay(const Composition& eta);

// Every check of the Macdonald criterion for all |eta| <= max_degree.
SuiteReport macdonald_suite(int n, int max_degree, Workspace& ws);

}  // namespace hecke
