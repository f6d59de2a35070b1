#include "dichi/binding.hpp"

#include <cmath>
#include <stdexcept>

namespace dichi {

unsigned case_constant(PatternId h) {
    switch (h) {
    case PatternId::Q4:
    case PatternId::Q4Prime: return 3;
    case PatternId::P4Forward: return 6;
    case PatternId::A4: return 7;
    }
    return 7;
}

BigInt binding_function(unsigned c, unsigned x) {
    const unsigned m = x + c;
    BigInt fact = 1;
    for (unsigned k = 2; k <= m; ++k) fact *= k;

    BigInt total = (BigInt(1) << x) * fact;
    // (x+c)!/(x+c-i)! is the falling factorial m (m-1) ... (m-i+1).
    BigInt falling = 1;
    for (unsigned i = 0; i <= x; ++i) {
        if (i > 0) falling *= (m - i + 1);
        total += (BigInt(1) << (i + 2)) * falling;
    }
    return total;
}

double log_of(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log of a non-positive integer");
    const std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 53) return std::log(v.convert_to<double>());
    // Keep the top 53 bits; the rest only perturbs the mantissa.
    const std::size_t shift = bits - 53;
    const double top = BigInt(v >> shift).convert_to<double>();
    return std::log(top) + static_cast<double>(shift) * std::log(2.0);
}

bool within_closed_form_bound(unsigned c, unsigned x, double tol) {
    const double m = static_cast<double>(x + c);
    return log_of(binding_function(c, x)) <= (m + 1.5) * std::log(m) + tol;
}

BindingBudget::BindingBudget(unsigned c, std::size_t omega) : c_(c) {
    levels_.reserve(omega);
    for (std::size_t x = 1; x <= omega; ++x) levels_.push_back(binding_function(c, static_cast<unsigned>(x)));
}

const BigInt& BindingBudget::at(std::size_t x) const {
    if (x == 0) return one_;
    if (x > levels_.size()) throw std::out_of_range("binding level above the budget's clique number");
    return levels_[x - 1];
}

BigInt BindingBudget::dipolar_bound(std::size_t x) const {
    return BigInt(x + c_) * gamma(x) + 2;
}

}  // namespace dichi
