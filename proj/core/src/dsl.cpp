#include "ravel/dsl.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace ravel {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ParsedInput input() {
        ParsedInput out;
        skip();
        if (eat('M')) {
            expect('[');
            do {
                out.presentation.summands.push_back(summand());
            } while (eat(','));
            expect(']');
            while (peek() == 'v') out.insertion.addresses.push_back(insertion());
        } else if (eat('A')) {
            expect('[');
            out.expr = expr();
            expect(']');
        } else {
            fail("expected 'M[' or 'A['");
        }
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        skip();
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    int integer() {
        const std::size_t start = pos_;
        if (start >= s_.size()) fail("expected an integer");
        std::size_t end = pos_;
        if (end < s_.size() && (s_[end] == '-' || s_[end] == '+')) ++end;
        while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
        int v = 0;
        const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, s_.data() + end, v);
        if (ec != std::errc{} || ptr != s_.data() + end) fail("expected an integer");
        pos_ = end;
        skip();
        return v;
    }

    BoxVector summand() {
        const std::size_t start = pos_;
        if (s_.substr(pos_, 3) == "inf") {
            pos_ += 3;
            skip();
            return BoxVector::infinity();
        }
        expect('[');
        std::vector<int> boxes;
        do {
            boxes.push_back(integer());
        } while (eat(','));
        expect(']');
        try {
            return BoxVector(std::move(boxes));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    CrossingAddress insertion() {
        expect('v');
        expect('(');
        CrossingAddress a;
        a.summand = integer();
        expect(',');
        a.box = integer();
        expect(',');
        a.pos = integer();
        expect(')');
        return a;
    }

    AlgebraicExpr factor() {
        if (eat('(')) {
            AlgebraicExpr e = expr();
            expect(')');
            return e;
        }
        return AlgebraicExpr::leaf(summand());
    }

    AlgebraicExpr term() {
        AlgebraicExpr e = factor();
        while (eat('*')) e = AlgebraicExpr::product(e, factor());
        return e;
    }

    AlgebraicExpr expr() {
        AlgebraicExpr e = term();
        while (eat('+')) e = AlgebraicExpr::sum(e, term());
        return e;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedInput parse_input(std::string_view text) { return Parser(text).input(); }

std::string print_box_vector(const BoxVector& t) {
    if (t.is_infinity()) return "inf";
    std::string s = "[";
    for (int k = 0; k < t.box_count(); ++k) {
        if (k) s += ",";
        s += std::to_string(t.boxes()[k]);
    }
    return s + "]";
}

std::string print_presentation(const MontesinosPresentation& m, const VertexInsertion& v) {
    std::string s = "M[";
    for (int i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += print_box_vector(m.summands[i]);
    }
    s += "]";
    for (const auto& a : v.addresses) s += " " + a.str();
    return s;
}

namespace {

// prec: 0 inside a sum, 1 inside a product
std::string print_expr_at(const AlgebraicExpr& e, int prec) {
    switch (e.kind()) {
    case AlgebraicExpr::Kind::Leaf: return print_box_vector(e.tangle());
    case AlgebraicExpr::Kind::Sum: {
        // a right-nested sum keeps its brackets so the left-to-right parse rebuilds the same tree
        const int right_prec = e.right().kind() == AlgebraicExpr::Kind::Sum ? 1 : 0;
        std::string s = print_expr_at(e.left(), 0) + "+" + print_expr_at(e.right(), right_prec);
        return prec > 0 ? "(" + s + ")" : s;
    }
    case AlgebraicExpr::Kind::Product: {
        std::string right = print_expr_at(e.right(), 1);
        if (e.right().kind() == AlgebraicExpr::Kind::Product) right = "(" + right + ")";
        return print_expr_at(e.left(), 1) + "*" + right;
    }
    }
    return "";
}

}  // namespace

std::string print_expr(const AlgebraicExpr& e) { return "A[" + print_expr_at(e, 0) + "]"; }

std::string print_input(const ParsedInput& in) {
    return in.is_algebraic() ? print_expr(*in.expr) : print_presentation(in.presentation, in.insertion);
}

}  // namespace ravel
