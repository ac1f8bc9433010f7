#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ravel/insertion.hpp"
#include "ravel/tangle.hpp"

namespace ravel {

struct CatalogBounds {
    int max_summands = 3;
    int max_crossings = 6;  // per summand
    int min_vertices = 0;
    int max_vertices = 0;
    bool both_signs = true;
};

// One BoxVector per fraction, fewest crossings first; order is fixed.
std::vector<BoxVector> catalog_box_vectors(int max_crossings, bool both_signs = true);

struct CatalogEntry {
    std::uint64_t index = 0;
    MontesinosPresentation presentation;
    VertexInsertion insertion;
};

// Insertions of `vertices` vertices into m, one per distinct normalized result.
std::vector<VertexInsertion> catalog_insertions(const MontesinosPresentation& m, int vertices);

// Shape of a normalized insertion; equal keys give identical closures.
std::string normalized_key(const DecoratedPresentation& d);

class Catalog {
public:
    explicit Catalog(CatalogBounds b);

    const CatalogBounds& bounds() const { return bounds_; }
    std::uint64_t presentation_count() const;

    // Standard-form presentations in catalog order.
    void for_each_presentation(const std::function<bool(const MontesinosPresentation&)>& f) const;

    // Visits entries with index >= cursor in order until f returns false.
    // Returns the index after the last visited entry.
    std::uint64_t for_each(std::uint64_t cursor, const std::function<bool(const CatalogEntry&)>& f) const;

private:
    CatalogBounds bounds_;
    std::vector<BoxVector> single_;  // n = 1: every non-trivial fraction
    std::vector<BoxVector> multi_;   // n > 1: non-integer fractions
};

}  // namespace ravel
