#include "equijac/linalg.hpp"

#include <algorithm>

namespace equijac {

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(const RatMatrix& input) {
    RatMatrix m = input;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
        // Clear denominators and divide by the content.
        mpz_class lcm(1), gcd(0);
        for (const auto& x : v)
            if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        for (auto& x : v) x *= Rational(lcm);
        for (const auto& x : v)
            if (x != 0) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
        if (gcd != 0)
            for (auto& x : v) x /= Rational(gcd);
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace equijac
