#include "nbhd/vertex_set.hpp"

namespace nbhd {

std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits(); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : kept) {
            if (k.is_subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    sort_lex(kept);
    return kept;
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
    std::vector<VertexSet> current{VertexSet{}};
    for (VertexSet e : edges) {
        std::vector<VertexSet> next;
        next.reserve(current.size());
        for (VertexSet t : current) {
            if (t.intersects(e)) {
                next.push_back(t);
                continue;
            }
            for (VertexId v : e) {
                VertexSet grown = t;
                grown.insert(v);
                next.push_back(grown);
            }
        }
        current = inclusion_minimal(std::move(next));
    }
    sort_lex(current);
    return current;
}

}  // namespace nbhd
