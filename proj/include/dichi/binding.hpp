#ifndef DICHI_BINDING_HPP
#define DICHI_BINDING_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dichi/patterns.hpp"

namespace dichi {

using BigInt = boost::multiprecision::cpp_int;

/// 3 for Q4 and Q4Prime, 6 for P4Forward, 7 for A4.
unsigned case_constant(PatternId h);

/// f_c(x) = 2^x (x+c)! + sum_{i=0..x} 2^{i+2} (x+c)! / (x+c-i)!, exactly.
/// Requires c >= 1 and x >= 1 (x = 0 is accepted and evaluates the same
/// formula, which is only used as a convenience base).
BigInt binding_function(unsigned c, unsigned x);

/// Natural log of a positive big integer, accurate to double precision.
double log_of(const BigInt& v);

/// log f_c(x) <= (x+c+1.5) log(x+c) + tol.
bool within_closed_form_bound(unsigned c, unsigned x, double tol = 1e-9);

/// Palette sizes f_c(1..omega) for one run of the engine.
class BindingBudget {
public:
    BindingBudget(unsigned c, std::size_t omega);

    unsigned c() const noexcept { return c_; }
    std::size_t omega() const noexcept { return levels_.size(); }
    /// f_c(x) for 1 <= x <= omega; 1 for x == 0 (an empty neighborhood or a
    /// single vertex needs at most one color).
    const BigInt& at(std::size_t x) const;
    /// gamma at clique level x: f_c(x - 1).
    const BigInt& gamma(std::size_t x) const { return at(x - 1); }
    /// (x + c) * gamma(x) + 2: what one dipolar set may use at level x.
    BigInt dipolar_bound(std::size_t x) const;

private:
    unsigned c_;
    std::vector<BigInt> levels_;
    BigInt one_ = 1;
};

}  // namespace dichi

#endif
