#pragma once

#include <optional>
#include <vector>

namespace overlap {

struct TwoSatLiteral {
    int var = 0;  // 0-based
    bool positive = true;
};

/// A binary clause (a or b), tagged with the constraint rule (1..5) that
/// produced it and, for pattern rules, the index of the source occurrence
/// in the corresponding occurrence list (-1 otherwise).
struct TwoSatClause {
    TwoSatLiteral a, b;
    int rule = 0;
    int source = -1;
};

struct TwoSatFormula {
    int num_vars = 0;
    std::vector<TwoSatClause> clauses;
};

/// Strongly-connected-component decision with a deterministic assignment:
/// the empty formula yields all-false.  Returns nullopt when unsatisfiable.
std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f);

}  // namespace overlap
