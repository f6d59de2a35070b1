#include <doctest.h>

#include <cmath>

#include "dichi/binding.hpp"

using namespace dichi;

namespace {

BigInt factorial(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

// The defining sum, written out directly.
BigInt by_definition(unsigned c, unsigned x) {
    const BigInt top = factorial(x + c);
    BigInt s = (BigInt(1) << x) * top;
    for (unsigned i = 0; i <= x; ++i) s += (BigInt(1) << (i + 2)) * top / factorial(x + c - i);
    return s;
}

}  // namespace

TEST_CASE("small values") {
    CHECK(binding_function(3, 1) == 84);
    CHECK(binding_function(3, 2) == 844);
    CHECK(4 * 120 + (4 + 40 + 320) == 844);
    for (unsigned c : {3u, 6u, 7u}) CHECK(binding_function(c, 1) > 1);
}

TEST_CASE("case constants") {
    CHECK(case_constant(PatternId::Q4) == 3);
    CHECK(case_constant(PatternId::Q4Prime) == 3);
    CHECK(case_constant(PatternId::P4Forward) == 6);
    CHECK(case_constant(PatternId::A4) == 7);
}

TEST_CASE("definition, recurrence and closed-form bound agree") {
    for (unsigned c : {3u, 6u, 7u}) {
        for (unsigned x = 1; x <= 25; ++x) {
            CHECK(binding_function(c, x) == by_definition(c, x));
            if (x >= 2) CHECK(binding_function(c, x) == 2 * (x + c) * binding_function(c, x - 1) + 4);
            CHECK(within_closed_form_bound(c, x));
        }
    }
}

TEST_CASE("log_of") {
    CHECK(log_of(BigInt(1)) == doctest::Approx(0.0));
    CHECK(log_of(BigInt(844)) == doctest::Approx(std::log(844.0)));
    const BigInt big = BigInt(1) << 4000;
    CHECK(log_of(big) == doctest::Approx(4000 * std::log(2.0)));
}

TEST_CASE("budget levels") {
    const BindingBudget b(3, 4);
    CHECK(b.omega() == 4);
    CHECK(b.at(0) == 1);
    CHECK(b.at(2) == 844);
    CHECK(b.gamma(2) == 84);
    // Two dipolar sets at level x fit in f_c(x).
    for (std::size_t x = 2; x <= 4; ++x) CHECK(2 * b.dipolar_bound(x) == b.at(x));
}
