#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "overlap/twosat.hpp"
#include "test_support.hpp"

using namespace overlap;

namespace {

bool satisfies(const TwoSatFormula& f, const std::vector<bool>& a) {
    for (const TwoSatClause& clause : f.clauses) {
        bool left = a[clause.a.var] == clause.a.positive;
        bool right = a[clause.b.var] == clause.b.positive;
        if (!left && !right) return false;
    }
    return true;
}

bool satisfiable_bruteforce(const TwoSatFormula& f) {
    for (int mask = 0; mask < (1 << f.num_vars); ++mask) {
        std::vector<bool> a(f.num_vars);
        for (int v = 0; v < f.num_vars; ++v) a[v] = (mask >> v) & 1;
        if (satisfies(f, a)) return true;
    }
    return false;
}

TwoSatClause clause(int va, bool pa, int vb, bool pb) {
    return {{va, pa}, {vb, pb}, 0, -1};
}

}  // namespace

TEST_SUITE("twosat") {
    TEST_CASE("empty formula gets the all false assignment") {
        TwoSatFormula f;
        f.num_vars = 3;
        auto a = solve_2sat(f);
        REQUIRE(a.has_value());
        CHECK(*a == std::vector<bool>{false, false, false});
    }

    TEST_CASE("forced literals") {
        TwoSatFormula f;
        f.num_vars = 2;
        f.clauses = {clause(0, true, 0, true), clause(0, false, 1, true)};
        auto a = solve_2sat(f);
        REQUIRE(a.has_value());
        CHECK((*a)[0]);
        CHECK((*a)[1]);
    }

    TEST_CASE("contradiction is unsat") {
        TwoSatFormula f;
        f.num_vars = 1;
        f.clauses = {clause(0, true, 0, true), clause(0, false, 0, false)};
        CHECK_FALSE(solve_2sat(f).has_value());
    }

    TEST_CASE("agrees with brute force on random formulas") {
        std::mt19937 gen(53);
        for (int trial = 0; trial < 400; ++trial) {
            TwoSatFormula f;
            f.num_vars = 1 + testsupport::draw(gen, 6);
            int m = testsupport::draw(gen, 13);
            for (int i = 0; i < m; ++i)
                f.clauses.push_back(clause(testsupport::draw(gen, f.num_vars),
                                           testsupport::draw(gen, 2) == 0,
                                           testsupport::draw(gen, f.num_vars),
                                           testsupport::draw(gen, 2) == 0));
            auto a = solve_2sat(f);
            CHECK(a.has_value() == satisfiable_bruteforce(f));
            if (a) CHECK(satisfies(f, *a));
        }
    }

    TEST_CASE("assignments are reproducible") {
        TwoSatFormula f;
        f.num_vars = 4;
        f.clauses = {clause(0, true, 1, true), clause(2, false, 3, true),
                     clause(1, false, 2, true)};
        auto first = solve_2sat(f);
        auto second = solve_2sat(f);
        REQUIRE(first.has_value());
        CHECK(*first == *second);
    }
}
