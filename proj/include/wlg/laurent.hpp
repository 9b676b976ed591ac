#ifndef WLG_LAURENT_HPP
#define WLG_LAURENT_HPP

// Sparse Laurent polynomials over arbitrary-precision integers, and the
// constant-term kernels used to compute period sequences.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace wlg {

using Exponent = std::vector<int>;

struct Term {
    Exponent exps;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Terms are kept sorted lexicographically by exponent, without zero
/// coefficients or repeated exponents.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(std::size_t num_vars) : num_vars_(num_vars)
    {
        if (num_vars == 0) {
            throw InvalidPolynomial("a Laurent polynomial needs at least one variable");
        }
    }

    static LaurentPolynomial from_terms(std::size_t num_vars, std::vector<Term> terms)
    {
        LaurentPolynomial out(num_vars);
        for (const auto& t : terms) {
            if (t.exps.size() != num_vars) {
                throw InvalidPolynomial("exponent vector of length " + std::to_string(t.exps.size()) +
                                        " in a polynomial with " + std::to_string(num_vars) + " variables");
            }
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
        for (auto& t : terms) {
            if (!out.terms_.empty() && out.terms_.back().exps == t.exps) {
                out.terms_.back().coeff += t.coeff;
            } else {
                out.terms_.push_back(std::move(t));
            }
        }
        out.drop_zeros();
        return out;
    }

    static LaurentPolynomial monomial(Exponent exps, Integer coeff = 1)
    {
        const auto n = exps.size();
        std::vector<Term> terms;
        terms.push_back({std::move(exps), std::move(coeff)});
        return from_terms(n, std::move(terms));
    }

    static LaurentPolynomial constant(std::size_t num_vars, Integer c)
    {
        return monomial(Exponent(num_vars, 0), std::move(c));
    }

    /// The variable x_i, or x_i^power.
    static LaurentPolynomial variable(std::size_t num_vars, std::size_t i, int power = 1)
    {
        Exponent e(num_vars, 0);
        e.at(i) = power;
        return monomial(std::move(e));
    }

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of x^exps, zero when absent.
    Integer coeff(const Exponent& exps) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                                   [](const Term& t, const Exponent& e) { return t.exps < e; });
        if (it != terms_.end() && it->exps == exps) {
            return it->coeff;
        }
        return 0;
    }

    /// Per-coordinate minimum and maximum exponent over the support.
    std::pair<Exponent, Exponent> exponent_box() const
    {
        Exponent lo(num_vars_, std::numeric_limits<int>::max());
        Exponent hi(num_vars_, std::numeric_limits<int>::min());
        for (const auto& t : terms_) {
            for (std::size_t c = 0; c < num_vars_; ++c) {
                lo[c] = std::min(lo[c], t.exps[c]);
                hi[c] = std::max(hi[c], t.exps[c]);
            }
        }
        return {lo, hi};
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    void drop_zeros()
    {
        std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
    }

    std::size_t num_vars_;
    std::vector<Term> terms_;
};

namespace detail {

inline void require_same_vars(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (a.num_vars() != b.num_vars()) {
        throw DimensionMismatch("polynomials in " + std::to_string(a.num_vars()) + " and " +
                                std::to_string(b.num_vars()) + " variables");
    }
}

/// Mixed-radix packing of exponent vectors inside a box into one integer,
/// first coordinate most significant, so key order is lexicographic order.
class ExponentPacker {
public:
    ExponentPacker(const Exponent& lo, const Exponent& hi) : lo_(lo), stride_(lo.size(), 0)
    {
        unsigned __int128 span = 1;
        for (std::size_t c = lo.size(); c-- > 0;) {
            stride_[c] = static_cast<std::int64_t>(span);
            span *= static_cast<unsigned __int128>(static_cast<std::int64_t>(hi[c]) - lo[c] + 1);
            if (span > (static_cast<unsigned __int128>(1) << 62)) {
                ok_ = false;
                return;
            }
        }
    }

    bool ok() const { return ok_; }

    std::int64_t pack(const Exponent& e) const
    {
        std::int64_t key = 0;
        for (std::size_t c = 0; c < e.size(); ++c) {
            key += (static_cast<std::int64_t>(e[c]) - lo_[c]) * stride_[c];
        }
        return key;
    }

    /// Key offset produced by adding `e` to an exponent inside the box.
    std::int64_t delta(const Exponent& e) const
    {
        std::int64_t key = 0;
        for (std::size_t c = 0; c < e.size(); ++c) {
            key += static_cast<std::int64_t>(e[c]) * stride_[c];
        }
        return key;
    }

    Exponent unpack(std::int64_t key) const
    {
        Exponent e(lo_.size());
        for (std::size_t c = 0; c < e.size(); ++c) {
            e[c] = static_cast<int>(key / stride_[c] + lo_[c]);
            key %= stride_[c];
        }
        return e;
    }

private:
    Exponent lo_;
    std::vector<std::int64_t> stride_;
    bool ok_ = true;
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int v : e) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

inline Exponent add_exponents(const Exponent& a, const Exponent& b)
{
    Exponent out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) {
        out[c] = a[c] + b[c];
    }
    return out;
}

} // namespace detail

inline LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    detail::require_same_vars(a, b);
    std::vector<Term> merged;
    merged.reserve(a.size() + b.size());
    merged.insert(merged.end(), a.terms().begin(), a.terms().end());
    merged.insert(merged.end(), b.terms().begin(), b.terms().end());
    return LaurentPolynomial::from_terms(a.num_vars(), std::move(merged));
}

inline LaurentPolynomial negate(const LaurentPolynomial& a)
{
    auto terms = a.terms();
    for (auto& t : terms) {
        t.coeff = -t.coeff;
    }
    return LaurentPolynomial::from_terms(a.num_vars(), std::move(terms));
}

inline LaurentPolynomial mul(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    detail::require_same_vars(a, b);
    const auto n = a.num_vars();
    if (a.is_zero() || b.is_zero()) {
        return LaurentPolynomial(n);
    }
    auto [alo, ahi] = a.exponent_box();
    auto [blo, bhi] = b.exponent_box();
    const auto lo = detail::add_exponents(alo, blo);
    const auto hi = detail::add_exponents(ahi, bhi);
    const detail::ExponentPacker packer(lo, hi);

    std::vector<Term> out;
    if (packer.ok()) {
        const detail::ExponentPacker pa(alo, ahi);
        std::vector<std::int64_t> kb;
        kb.reserve(b.size());
        for (const auto& t : b.terms()) {
            kb.push_back(packer.delta(t.exps));
        }
        std::unordered_map<std::int64_t, Integer> acc;
        acc.reserve(a.size() * b.size() / 2 + 16);
        for (const auto& ta : a.terms()) {
            const auto base = packer.pack(ta.exps);
            for (std::size_t i = 0; i < b.size(); ++i) {
                acc[base + kb[i]] += ta.coeff * b.terms()[i].coeff;
            }
        }
        std::vector<std::pair<std::int64_t, Integer>> sorted(acc.begin(), acc.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.reserve(sorted.size());
        for (auto& [key, c] : sorted) {
            if (c != 0) {
                out.push_back({packer.unpack(key), std::move(c)});
            }
        }
    } else {
        std::map<Exponent, Integer> acc;
        for (const auto& ta : a.terms()) {
            for (const auto& tb : b.terms()) {
                acc[detail::add_exponents(ta.exps, tb.exps)] += ta.coeff * tb.coeff;
            }
        }
        for (auto& [e, c] : acc) {
            out.push_back({e, std::move(c)});
        }
    }
    return LaurentPolynomial::from_terms(n, std::move(out));
}

inline LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) { return add(a, b); }
inline LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return add(a, negate(b)); }
inline LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) { return mul(a, b); }

/// f^m by repeated multiplication; for sparse polynomials whose support
/// grows polynomially this beats squaring.
inline LaurentPolynomial pow(const LaurentPolynomial& f, unsigned m)
{
    auto out = LaurentPolynomial::constant(f.num_vars(), 1);
    for (unsigned i = 0; i < m; ++i) {
        out = mul(out, f);
    }
    return out;
}

inline Integer constant_term(const LaurentPolynomial& f)
{
    return f.coeff(Exponent(f.num_vars(), 0));
}

struct PeriodSequence {
    std::vector<Integer> coefficients;

    friend bool operator==(const PeriodSequence&, const PeriodSequence&) = default;
};

namespace detail {

// Constant term of f^m. The running product f^j keeps only exponents v that
// can still return to the origin in the remaining r = m - j factors:
//   v_c + r * max_c >= 0  and  v_c + r * min_c <= 0  for every coordinate c.
// The last factor is folded in as a dot product against f.
template <typename Key, typename Index, typename KeyOf, typename StepKey>
Integer pruned_constant_term(const LaurentPolynomial& f, unsigned m, const Exponent& lo, const Exponent& hi,
                             KeyOf key_of, StepKey step_key)
{
    const auto n = f.num_vars();
    const auto& ft = f.terms();
    std::vector<Key> fkey;
    fkey.reserve(ft.size());
    for (const auto& t : ft) {
        fkey.push_back(step_key(t.exps));
    }

    auto reachable = [&](const Exponent& v, long long r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (v[c] + r * hi[c] < 0 || v[c] + r * lo[c] > 0) {
                return false;
            }
        }
        return true;
    };

    std::vector<Exponent> exps{Exponent(n, 0)};
    std::vector<Integer> coeffs{Integer(1)};
    std::vector<Key> keys{key_of(exps[0])};
    if (!reachable(exps[0], m)) {
        return 0;
    }

    for (unsigned j = 1; j < m; ++j) {
        const long long remaining = m - j;
        std::vector<Exponent> next_exps;
        std::vector<Integer> next_coeffs;
        std::vector<Key> next_keys;
        Index slot;
        slot.reserve(exps.size() * 4 + 16);
        constexpr std::int64_t pruned = -1;
        for (std::size_t u = 0; u < exps.size(); ++u) {
            for (std::size_t e = 0; e < ft.size(); ++e) {
                auto key = keys[u] + fkey[e];
                auto [it, inserted] = slot.try_emplace(key, pruned);
                if (inserted) {
                    auto v = add_exponents(exps[u], ft[e].exps);
                    if (!reachable(v, remaining)) {
                        continue;
                    }
                    it->second = static_cast<std::int64_t>(next_exps.size());
                    next_exps.push_back(std::move(v));
                    next_coeffs.emplace_back(0);
                    next_keys.push_back(key);
                } else if (it->second == pruned) {
                    continue;
                }
                mpz_addmul(next_coeffs[it->second].get_mpz_t(), coeffs[u].get_mpz_t(), ft[e].coeff.get_mpz_t());
            }
        }
        exps = std::move(next_exps);
        coeffs = std::move(next_coeffs);
        keys = std::move(next_keys);
    }

    Integer total = 0;
    for (std::size_t u = 0; u < exps.size(); ++u) {
        Exponent neg(n);
        for (std::size_t c = 0; c < n; ++c) {
            neg[c] = -exps[u][c];
        }
        const auto c = f.coeff(neg);
        if (c != 0) {
            mpz_addmul(total.get_mpz_t(), coeffs[u].get_mpz_t(), c.get_mpz_t());
        }
    }
    return total;
}

// Vector-valued keys for boxes too large to pack; "adding" keys rebuilds the
// exponent.
struct WideKey {
    Exponent e;
    WideKey operator+(const WideKey& o) const { return {add_exponents(e, o.e)}; }
    friend bool operator==(const WideKey&, const WideKey&) = default;
};

struct WideKeyHash {
    std::size_t operator()(const WideKey& k) const noexcept { return ExponentHash{}(k.e); }
};

} // namespace detail

/// Constant term of f^m without materializing the unreachable part of f^m.
inline Integer pruned_constant_term(const LaurentPolynomial& f, unsigned m)
{
    if (m == 0) {
        return 1;
    }
    if (f.is_zero()) {
        return 0;
    }
    const auto [lo, hi] = f.exponent_box();
    Exponent box_lo(lo.size()), box_hi(hi.size());
    for (std::size_t c = 0; c < lo.size(); ++c) {
        box_lo[c] = std::min(0, static_cast<int>(m - 1) * lo[c]);
        box_hi[c] = std::max(0, static_cast<int>(m - 1) * hi[c]);
    }
    const detail::ExponentPacker packer(box_lo, box_hi);
    if (packer.ok()) {
        return detail::pruned_constant_term<std::int64_t, std::unordered_map<std::int64_t, std::int64_t>>(
            f, m, lo, hi, [&](const Exponent& e) { return packer.pack(e); },
            [&](const Exponent& e) { return packer.delta(e); });
    }
    return detail::pruned_constant_term<detail::WideKey,
                                        std::unordered_map<detail::WideKey, std::int64_t, detail::WideKeyHash>>(
        f, m, lo, hi, [](const Exponent& e) { return detail::WideKey{e}; },
        [](const Exponent& e) { return detail::WideKey{e}; });
}

/// Constant term of the fully expanded power.
inline Integer naive_constant_term(const LaurentPolynomial& f, unsigned m)
{
    return constant_term(pow(f, m));
}

enum class ConstantTermKernel { pruned, naive };

struct PeriodOptions {
    ConstantTermKernel kernel = ConstantTermKernel::pruned;
    unsigned threads = 1;
};

/// b_0..b_N, b_i the constant term of f^i. Each b_m is computed
/// independently, so different m may run on different threads.
inline PeriodSequence period_sequence(const LaurentPolynomial& f, unsigned N, PeriodOptions options = {})
{
    PeriodSequence out;
    out.coefficients.assign(N + 1, Integer(0));
    out.coefficients[0] = 1;
    auto compute = [&](unsigned m) {
        return options.kernel == ConstantTermKernel::pruned ? pruned_constant_term(f, m)
                                                            : naive_constant_term(f, m);
    };
    const unsigned threads = std::max(1u, std::min(options.threads, N));
    if (threads <= 1) {
        for (unsigned m = 1; m <= N; ++m) {
            out.coefficients[m] = compute(m);
        }
        return out;
    }
    // Largest m first: those dominate the running time.
    std::atomic<unsigned> next{N};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (unsigned m = next--; m >= 1 && m <= N; m = next--) {
                out.coefficients[m] = compute(m);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return out;
}

} // namespace wlg

#endif // WLG_LAURENT_HPP
