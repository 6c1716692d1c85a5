#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabilis/rational.hpp"

namespace stabilis {

// Exact rational linear program. Variables have optional finite bounds
// (nullopt = unbounded on that side); the default is x >= 0.
class LinearProgram {
public:
    enum class Sense { Maximize, Minimize };
    enum class Rel { Le, Ge, Eq };

    struct Constraint {
        std::vector<std::pair<int, Rational>> terms;  // (variable index, coefficient)
        Rel rel;
        Rational rhs;
    };

    int add_variable(std::string name, std::optional<Rational> lo = Rational(0),
                     std::optional<Rational> hi = std::nullopt);
    void set_objective(int var, const Rational& coef);
    void add_constraint(std::vector<std::pair<int, Rational>> terms, Rel rel, Rational rhs);

    Sense sense = Sense::Maximize;

    std::size_t num_variables() const { return names_.size(); }
    std::size_t num_constraints() const { return constraints_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const Rational& objective(int var) const { return objective_[var]; }
    const std::optional<Rational>& lower(int var) const { return lo_[var]; }
    const std::optional<Rational>& upper(int var) const { return hi_[var]; }

    // Self-describing text form (objective line, then one constraint per
    // line with rational coefficients); debugging aid, not bit-exact mandated.
    std::string dump() const;

private:
    std::vector<std::string> names_;
    std::vector<std::optional<Rational>> lo_, hi_;
    std::vector<Rational> objective_;
    std::vector<Constraint> constraints_;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> values;  // by variable index, valid when Optimal

    bool optimal() const { return status == LPStatus::Optimal; }
};

// Primal simplex with Bland's anti-cycling rule, exact rational pivots,
// two phases. Deterministic: smallest-index entering and leaving variables.
LPSolution simplex_solve(const LinearProgram& lp);

}  // namespace stabilis
