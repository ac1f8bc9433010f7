#include "ravel/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ravel {

namespace {

void compositions(std::vector<int>& cur, int left, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int a = 1; a <= left; ++a) {
        cur.push_back(a);
        compositions(cur, left - a, out);
        cur.pop_back();
    }
}

bool catalog_less(const BoxVector& a, const BoxVector& b) {
    if (a.crossing_count() != b.crossing_count()) return a.crossing_count() < b.crossing_count();
    if (a.sign() != b.sign()) return a.sign() > b.sign();
    std::vector<int> x = a.boxes(), y = b.boxes();
    for (int& v : x) v = std::abs(v);
    for (int& v : y) v = std::abs(v);
    return x < y;
}

}  // namespace

std::vector<BoxVector> catalog_box_vectors(int max_crossings, bool both_signs) {
    std::vector<std::vector<int>> raw;
    for (int a1 = 0; a1 <= max_crossings; ++a1) {
        std::vector<int> cur{a1};
        compositions(cur, max_crossings - a1, raw);
    }
    std::map<Fraction, BoxVector> best;
    auto offer = [&](const BoxVector& b) {
        const Fraction f = fraction(b);
        auto it = best.find(f);
        if (it == best.end() || catalog_less(b, it->second)) best.insert_or_assign(f, b);
    };
    for (const auto& v : raw) {
        BoxVector b(v);
        offer(b);
        if (both_signs && b.crossing_count() > 0) offer(b.mirrored());
    }
    std::vector<BoxVector> out;
    for (const auto& [f, b] : best) out.push_back(b);
    std::sort(out.begin(), out.end(), catalog_less);
    return out;
}

std::string normalized_key(const DecoratedPresentation& d) {
    std::string k;
    for (const auto& s : d.summands) {
        k += '|';
        if (s.is_infinity()) {
            k += "inf";
            continue;
        }
        for (const auto& b : s.boxes) {
            int v = 0;
            for (const auto& slot : b.slots) v += slot.vertex;
            k += std::to_string(b.sign * static_cast<int>(b.slots.size())) + "/" + std::to_string(v) + ",";
        }
    }
    return k;
}

std::vector<VertexInsertion> catalog_insertions(const MontesinosPresentation& m, int vertices) {
    std::vector<CrossingAddress> all;
    for (int i = 0; i < m.size(); ++i) {
        const auto& t = m.summands[i];
        if (t.is_infinity()) continue;
        for (int j = 0; j < t.box_count(); ++j)
            for (int p = 1; p <= std::abs(t.boxes()[j]); ++p) all.push_back({i + 1, j + 1, p});
    }
    std::vector<VertexInsertion> out;
    if (vertices < 1 || vertices > static_cast<int>(all.size())) return out;
    std::set<std::string> seen;
    std::vector<int> pick(vertices);
    for (int k = 0; k < vertices; ++k) pick[k] = k;
    const int n = static_cast<int>(all.size());
    for (;;) {
        VertexInsertion v;
        for (int k : pick) v.addresses.push_back(all[k]);
        if (seen.insert(normalized_key(normalize(apply_insertion(m, v)))).second) out.push_back(std::move(v));
        int k = vertices - 1;
        while (k >= 0 && pick[k] == n - vertices + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < vertices; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Catalog::Catalog(CatalogBounds b) : bounds_(b) {
    if (b.max_summands < 0 || b.max_crossings < 0 || b.min_vertices < 0 || b.max_vertices < b.min_vertices)
        throw std::invalid_argument("catalog bounds must be non-negative and ordered");
    for (const auto& t : catalog_box_vectors(b.max_crossings, b.both_signs)) {
        const Fraction f = fraction(t);
        if (f.p == 0) continue;
        single_.push_back(t);
        if (!f.is_integer()) multi_.push_back(t);
    }
}

std::uint64_t Catalog::presentation_count() const {
    std::uint64_t total = 0;
    for (int n = 1; n <= bounds_.max_summands; ++n) {
        std::uint64_t c = 1;
        for (int k = 0; k < n; ++k) c *= n == 1 ? single_.size() : multi_.size();
        total += c;
    }
    return total;
}

void Catalog::for_each_presentation(const std::function<bool(const MontesinosPresentation&)>& f) const {
    for (int n = 1; n <= bounds_.max_summands; ++n) {
        const auto& pool = n == 1 ? single_ : multi_;
        if (pool.empty()) continue;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            MontesinosPresentation m;
            for (std::size_t i : idx) m.summands.push_back(pool[i]);
            if (!f(m)) return;
            int k = n - 1;
            while (k >= 0 && ++idx[k] == pool.size()) idx[k--] = 0;
            if (k < 0) break;
        }
    }
}

std::uint64_t Catalog::for_each(std::uint64_t cursor, const std::function<bool(const CatalogEntry&)>& f) const {
    std::uint64_t index = 0;
    bool stopped = false;
    for_each_presentation([&](const MontesinosPresentation& m) {
        if (bounds_.max_vertices == 0) {
            if (index >= cursor && !f({index, m, {}})) {
                stopped = true;
                return false;
            }
            ++index;
            return true;
        }
        for (int k = std::max(bounds_.min_vertices, 0); k <= bounds_.max_vertices; ++k) {
            if (k == 0) {
                if (index >= cursor && !f({index, m, {}})) {
                    stopped = true;
                    return false;
                }
                ++index;
                continue;
            }
            for (auto& v : catalog_insertions(m, k)) {
                if (index >= cursor && !f({index, m, std::move(v)})) {
                    stopped = true;
                    return false;
                }
                ++index;
            }
        }
        return true;
    });
    return stopped ? index + 1 : index;
}

}  // namespace ravel
