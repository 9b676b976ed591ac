#ifndef WLG_BIGINT_HPP
#define WLG_BIGINT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace wlg {

using Integer = mpz_class;

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

inline Integer parse_integer(std::string_view text)
{
    Integer out;
    if (text.empty() || out.set_str(std::string(text), 10) != 0) {
        throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    }
    return out;
}

/// Factorials 0!..limit!, grown on demand. Not thread-safe while growing;
/// call reserve() before sharing across threads.
class FactorialTable {
public:
    FactorialTable() : table_{Integer(1)} {}

    void reserve(std::size_t limit)
    {
        table_.reserve(limit + 1);
        while (table_.size() <= limit) {
            const auto k = table_.size();
            table_.push_back(table_.back() * static_cast<unsigned long>(k));
        }
    }

    const Integer& operator()(std::size_t k)
    {
        reserve(k);
        return table_[k];
    }

    const Integer& at(std::size_t k) const { return table_.at(k); }
    std::size_t limit() const { return table_.size() - 1; }

private:
    std::vector<Integer> table_;
};

/// Exact quotient; a nonzero remainder is a hard error.
inline Integer exact_quotient(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw InexactDivision("division by zero");
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InexactDivision(to_decimal(num) + " is not divisible by " + to_decimal(den));
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace wlg

#endif // WLG_BIGINT_HPP
