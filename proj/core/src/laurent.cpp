#include "ravel/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ravel {

LaurentPoly LaurentPoly::monomial(std::int64_t c, int e) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = e;
        p.c_ = {c};
    }
    return p;
}

std::int64_t LaurentPoly::coeff(int e) const {
    if (is_zero() || e < lo_ || e > max_exp()) return 0;
    return c_[e - lo_];
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
    std::vector<std::pair<int, std::int64_t>> t;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) t.emplace_back(lo_ + static_cast<int>(i), c_[i]);
    return t;
}

void LaurentPoly::trim() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    if (b > 0 || e < c_.size()) c_ = std::vector<std::int64_t>(c_.begin() + b, c_.begin() + e);
    lo_ += static_cast<int>(b);
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += e;
    return p;
}

LaurentPoly LaurentPoly::reflected() const {
    LaurentPoly p;
    if (is_zero()) return p;
    p.lo_ = -max_exp();
    p.c_.assign(c_.rbegin(), c_.rend());
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(lo_, o.lo_);
    const int hi = std::max(max_exp(), o.max_exp());
    std::vector<std::int64_t> c(hi - lo + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] += o.c_[i];
    lo_ = lo;
    c_ = std::move(c);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    LaurentPoly neg = o;
    for (auto& x : neg.c_) x = -x;
    return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.lo_ = a.lo_ + b.lo_;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

LaurentPoly pow(const LaurentPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
    LaurentPoly r(1);
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms()) {
        os << (first ? "" : " ") << e << ':' << c;
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly p;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "0") continue;
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad polynomial term '" + tok + "'");
        p += monomial(std::stoll(tok.substr(colon + 1)), std::stoi(tok.substr(0, colon)));
    }
    return p;
}

}  // namespace ravel
