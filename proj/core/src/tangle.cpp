#include "ravel/tangle.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ravel/diagram.hpp"

namespace ravel {

BoxVector::BoxVector(std::vector<int> boxes) : boxes_(std::move(boxes)) {
    if (boxes_.empty()) throw std::invalid_argument("box vector needs at least one box");
    int s = 0;
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
        int a = boxes_[i];
        if (a == 0 && i > 0) throw std::invalid_argument("box " + std::to_string(i + 1) + " is empty");
        if (a == 0) continue;
        int sa = a > 0 ? 1 : -1;
        if (s != 0 && sa != s) throw std::invalid_argument("box signs are mixed; form is not alternating");
        s = sa;
    }
}

BoxVector BoxVector::infinity() {
    BoxVector t;
    t.boxes_.clear();
    t.infinity_ = true;
    return t;
}

int BoxVector::crossing_count() const {
    int c = 0;
    for (int a : boxes_) c += a < 0 ? -a : a;
    return c;
}

int BoxVector::sign() const {
    for (int a : boxes_)
        if (a != 0) return a > 0 ? 1 : -1;
    return 0;
}

BoxVector BoxVector::mirrored() const {
    if (infinity_) return *this;
    std::vector<int> b = boxes_;
    for (int& a : b) a = -a;
    return BoxVector(std::move(b));
}

Fraction Fraction::make(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a fraction");
    if (q < 0) p = -p, q = -q;
    if (q == 0) return infinity();
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    return {p / g, q / g};
}

std::string Fraction::str() const {
    if (is_infinity()) return "inf";
    return std::to_string(p) + "/" + std::to_string(q);
}

const char* to_string(Parity p) {
    switch (p) {
    case Parity::Zero: return "0";
    case Parity::Infinity: return "inf";
    case Parity::One: return "1";
    }
    return "?";
}

Fraction fraction(const BoxVector& t) {
    if (t.is_infinity()) return Fraction::infinity();
    const auto& b = t.boxes();
    std::int64_t p = b.back(), q = 1;
    for (int i = static_cast<int>(b.size()) - 2; i >= 0; --i) {
        // a + 1/(p/q) = (a p + q) / p
        std::int64_t np = b[i] * p + q;
        q = p;
        p = np;
    }
    return Fraction::make(p, q);
}

Parity parity_from_fraction(const Fraction& f) {
    if (f.p % 2 == 0) return Parity::Zero;
    if (f.q % 2 == 0) return Parity::Infinity;
    return Parity::One;
}

Parity parity(const BoxVector& t) { return trace_strands(build_tangle_diagram(t)).parity(); }

bool is_horizontal(const BoxVector& t) { return fraction(t).is_integer(); }

bool is_trivial_vertical(const BoxVector& t) { return fraction(t).is_infinity(); }

int MontesinosPresentation::crossing_count() const {
    int c = 0;
    for (const auto& t : summands) c += t.crossing_count();
    return c;
}

MontesinosPresentation MontesinosPresentation::mirrored() const {
    MontesinosPresentation m;
    for (const auto& t : summands) m.summands.push_back(t.mirrored());
    return m;
}

std::string ValidationReport::summary() const {
    if (violations.empty()) return "standard form";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "; " : "") << violations[i].message;
    return os.str();
}

ValidationReport validate_standard_form(const MontesinosPresentation& m) {
    ValidationReport r;
    if (m.summands.empty()) {
        r.violations.push_back({ViolationKind::Empty, 0, "presentation has no summands"});
        return r;
    }
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        const BoxVector& t = m.summands[i];
        const std::string where = "summand " + std::to_string(i + 1);
        if (!t.is_infinity()) {
            try {
                BoxVector check(t.boxes());
            } catch (const std::invalid_argument& e) {
                r.violations.push_back({ViolationKind::Malformed, i + 1, where + " malformed: " + e.what()});
                continue;
            }
        }
        Fraction f = fraction(t);
        if (f.is_infinity() || f.p == 0)
            r.violations.push_back({ViolationKind::TrivialSummand, i + 1, where + " is trivial (" + f.str() + ")"});
        else if (n > 1 && f.is_integer())
            r.violations.push_back(
                {ViolationKind::HorizontalSummand, i + 1, where + " is horizontal (" + f.str() + ")"});
    }
    return r;
}

AlgebraicExpr AlgebraicExpr::leaf(BoxVector t) {
    auto n = std::make_shared<Node>();
    n->tangle = std::move(t);
    return AlgebraicExpr(std::move(n));
}

AlgebraicExpr AlgebraicExpr::sum(AlgebraicExpr a, AlgebraicExpr b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->left = std::make_shared<const AlgebraicExpr>(std::move(a));
    n->right = std::make_shared<const AlgebraicExpr>(std::move(b));
    return AlgebraicExpr(std::move(n));
}

AlgebraicExpr AlgebraicExpr::product(AlgebraicExpr a, AlgebraicExpr b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->left = std::make_shared<const AlgebraicExpr>(std::move(a));
    n->right = std::make_shared<const AlgebraicExpr>(std::move(b));
    return AlgebraicExpr(std::move(n));
}

int AlgebraicExpr::leaf_count() const {
    if (kind() == Kind::Leaf) return 1;
    return left().leaf_count() + right().leaf_count();
}

std::vector<BoxVector> AlgebraicExpr::leaves() const {
    if (kind() == Kind::Leaf) return {tangle()};
    auto l = left().leaves();
    auto r = right().leaves();
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

}  // namespace ravel
