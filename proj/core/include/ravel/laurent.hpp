#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ravel {

// Integer Laurent polynomial in A. Stored densely from the lowest non-zero term.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t c) : LaurentPoly(monomial(c, 0)) {}  // NOLINT: constants convert
    static LaurentPoly monomial(std::int64_t c, int e);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    std::int64_t coeff(int e) const;
    std::vector<std::pair<int, std::int64_t>> terms() const;

    LaurentPoly shifted(int e) const;
    LaurentPoly reflected() const;  // A -> A^-1

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return std::pair(a.lo_, a.c_) < std::pair(b.lo_, b.c_);
    }

    // "exponent:coefficient" pairs, ascending, space separated; "0" for zero.
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    void trim();
    int lo_ = 0;
    std::vector<std::int64_t> c_;
};

LaurentPoly pow(const LaurentPoly& p, int k);

}  // namespace ravel
