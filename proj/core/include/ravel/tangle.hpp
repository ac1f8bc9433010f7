#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ravel {

// A rational tangle in alternating 3-braid form. Box 1 twists the west ends
// and may be empty; every later box must carry at least one crossing, and all
// boxes share one sign. The trivial vertical tangle has no such form and gets
// its own encoding.
class BoxVector {
public:
    BoxVector() : boxes_{0} {}
    explicit BoxVector(std::vector<int> boxes);

    static BoxVector infinity();

    bool is_infinity() const { return infinity_; }
    const std::vector<int>& boxes() const { return boxes_; }
    int box_count() const { return static_cast<int>(boxes_.size()); }
    int crossing_count() const;
    int sign() const;  // +1, -1, or 0 when there are no crossings
    BoxVector mirrored() const;

    friend bool operator==(const BoxVector&, const BoxVector&) = default;
    friend auto operator<=>(const BoxVector&, const BoxVector&) = default;

private:
    std::vector<int> boxes_;
    bool infinity_ = false;
};

// p/q in lowest terms with q >= 0; infinity is 1/0.
struct Fraction {
    std::int64_t p = 0;
    std::int64_t q = 1;

    static Fraction make(std::int64_t p, std::int64_t q);
    static Fraction infinity() { return {1, 0}; }
    bool is_infinity() const { return q == 0; }
    bool is_integer() const { return q == 1; }
    std::string str() const;
    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

enum class Parity { Zero, Infinity, One };

const char* to_string(Parity p);

// a1 + 1/(a2 + 1/(... + 1/am)); box 1 is the outermost twist of the west ends.
Fraction fraction(const BoxVector& t);
Parity parity_from_fraction(const Fraction& f);
Parity parity(const BoxVector& t);  // traced on the diagram
bool is_horizontal(const BoxVector& t);
bool is_trivial_vertical(const BoxVector& t);

struct MontesinosPresentation {
    std::vector<BoxVector> summands;

    int size() const { return static_cast<int>(summands.size()); }
    int crossing_count() const;
    MontesinosPresentation mirrored() const;
    friend bool operator==(const MontesinosPresentation&, const MontesinosPresentation&) = default;
};

enum class ViolationKind { Empty, TrivialSummand, HorizontalSummand, Malformed };

struct Violation {
    ViolationKind kind;
    int summand;  // 1-based, 0 for the presentation as a whole
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate_standard_form(const MontesinosPresentation& m);

// Binary tree of rational leaves joined by tangle sum and product.
class AlgebraicExpr {
public:
    enum class Kind { Leaf, Sum, Product };

    static AlgebraicExpr leaf(BoxVector t);
    static AlgebraicExpr sum(AlgebraicExpr a, AlgebraicExpr b);
    static AlgebraicExpr product(AlgebraicExpr a, AlgebraicExpr b);

    Kind kind() const { return node_->kind; }
    const BoxVector& tangle() const { return node_->tangle; }
    const AlgebraicExpr& left() const { return *node_->left; }
    const AlgebraicExpr& right() const { return *node_->right; }
    int leaf_count() const;
    std::vector<BoxVector> leaves() const;  // left to right

private:
    struct Node {
        Kind kind = Kind::Leaf;
        BoxVector tangle;
        std::shared_ptr<const AlgebraicExpr> left, right;
    };
    explicit AlgebraicExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace ravel
