#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ravel/diagram.hpp"
#include "ravel/tangle.hpp"

namespace ravel {

// (summand, box, position), all 1-based; positions count from the left of the box.
struct CrossingAddress {
    int summand = 0;
    int box = 0;
    int pos = 0;
    std::string str() const;
    friend bool operator==(const CrossingAddress&, const CrossingAddress&) = default;
    friend auto operator<=>(const CrossingAddress&, const CrossingAddress&) = default;
};

struct VertexInsertion {
    std::vector<CrossingAddress> addresses;
    friend bool operator==(const VertexInsertion&, const VertexInsertion&) = default;
};

// One summand T_i' after insertion. Boxes keep their original index, slots
// keep their original position, so addresses stay meaningful through
// normalization.
struct DecoratedSummand {
    BoxVector original;
    std::vector<BraidBox> boxes;  // empty for the infinity tangle

    bool is_infinity() const { return original.is_infinity(); }
    int vertex_count() const;
    int crossing_count() const;
    std::vector<CrossingAddress> vertices(int summand) const;  // left to right
    // Box index of the rightmost / leftmost vertex, 0 if there is none.
    int rightmost_vertex_box() const;
    int leftmost_vertex_box() const;
    int crossings_right_of_rightmost_vertex() const;
    Diagram diagram(int summand) const;
};

struct DecoratedPresentation {
    MontesinosPresentation presentation;  // T, before insertion and normalization
    VertexInsertion insertion;
    std::vector<DecoratedSummand> summands;

    int size() const { return static_cast<int>(summands.size()); }
    const DecoratedSummand& summand(int i) const { return summands.at(i - 1); }
    int vertex_count() const;
    std::optional<CrossingAddress> rightmost_vertex(int i) const;
    std::optional<CrossingAddress> leftmost_vertex(int i) const;
    DecoratedPresentation mirrored() const;
    Diagram diagram() const;  // open T'
    Diagram closure() const;  // V(T')
};

// Throws std::invalid_argument for an empty insertion, duplicate or dangling addresses.
DecoratedPresentation apply_insertion(const MontesinosPresentation& m, const VertexInsertion& v);

DecoratedPresentation normalize_sa1(const DecoratedPresentation& d);
DecoratedPresentation normalize_sa2(const DecoratedPresentation& d);
DecoratedPresentation normalize(const DecoratedPresentation& d);  // SA1 then SA2
bool is_normalized(const DecoratedPresentation& d);

// Boxes of T_i strictly right of its rightmost vertex; [0] when there are none.
BoxVector subtangle_right(const DecoratedPresentation& d, int i);

// Do the two right-hand ends of the single vertex of T_i' close up inside T_i'?
bool has_loop_at(const DecoratedPresentation& d, int i);

struct ConditionResult {
    bool pass = false;
    int summand = 0;  // first offending summand, 0 when none
    std::string note;
};

struct ExceptionalReport {
    bool exceptional = false;
    int infinity_summand = 0;  // j of condition (1), 0 when not unique
    std::array<ConditionResult, 4> conditions;
    std::string summary() const;
};

// Needs a normalized insertion into a standard-form presentation.
ExceptionalReport is_exceptional(const DecoratedPresentation& d);

}  // namespace ravel
