#include "regionpath/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace regionpath {

namespace {

// Compact arc endpoints into a CSR view keyed by `key`, segments ascending.
void build_csr(NodeId n, const std::vector<Arc>& arcs, bool by_source,
               std::vector<NodeId>& flat, std::vector<std::size_t>& offsets) {
    offsets.assign(n + 1, 0);
    for (const auto& [u, v] : arcs) ++offsets[(by_source ? u : v) + 1];
    for (NodeId i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    flat.resize(arcs.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : arcs) {
        const NodeId key = by_source ? u : v;
        flat[cursor[key]++] = by_source ? v : u;
    }
    for (NodeId i = 0; i < n; ++i) {
        std::sort(flat.begin() + offsets[i], flat.begin() + offsets[i + 1]);
    }
}

}  // namespace

Graph Graph::from_arcs(NodeId n, const std::vector<Arc>& arcs) {
    for (const auto& [u, v] : arcs) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("arc endpoint out of range: " + std::to_string(u) +
                                        "->" + std::to_string(v));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop rejected at node " + std::to_string(u));
        }
    }
    Graph g;
    g.n_ = n;
    g.arc_count_ = arcs.size();
    build_csr(n, arcs, true, g.s_flat_, g.s_off_);
    build_csr(n, arcs, false, g.b_flat_, g.b_off_);
    for (NodeId u = 0; u < n; ++u) {
        const auto out = g.out_neighbors(u);
        if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
            throw std::invalid_argument("duplicate arc from node " + std::to_string(u));
        }
    }
    g.mode_ = classify(g);
    return g;
}

bool Graph::has_arc(NodeId u, NodeId v) const {
    if (u >= n_) return false;
    const auto out = out_neighbors(u);
    return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Arc> Graph::arcs_sorted() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v : out_neighbors(u)) out.emplace_back(u, v);
    }
    return out;
}

GraphMode classify(const Graph& g) {
    bool all_paired = true;
    bool none_paired = true;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.out_neighbors(u)) {
            const bool paired = g.has_arc(v, u);
            all_paired = all_paired && paired;
            none_paired = none_paired && !paired;
        }
    }
    if (all_paired) return GraphMode::Simple;
    if (none_paired) return GraphMode::Directed;
    return GraphMode::Mixed;
}

Graph grid_graph(NodeId k) {
    if (k < 1) throw std::invalid_argument("grid side length must be >= 1");
    const NodeId n = k * k;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(4) * k * (k - 1));
    const auto id = [k](NodeId r, NodeId c) { return r * k + c; };
    for (NodeId r = 0; r < k; ++r) {
        for (NodeId c = 0; c < k; ++c) {
            if (c + 1 < k) {
                arcs.emplace_back(id(r, c), id(r, c + 1));
                arcs.emplace_back(id(r, c + 1), id(r, c));
            }
            if (r + 1 < k) {
                arcs.emplace_back(id(r, c), id(r + 1, c));
                arcs.emplace_back(id(r + 1, c), id(r, c));
            }
        }
    }
    return Graph::from_arcs(n, arcs);
}

GridCorners grid_corners(NodeId k) {
    if (k < 1) throw std::invalid_argument("grid side length must be >= 1");
    return GridCorners{0, k - 1, k * (k - 1), k * k - 1};
}

Graph dodecahedron_graph() {
    static constexpr int kLcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<Arc> arcs;
    arcs.reserve(60);
    for (NodeId i = 0; i < 20; ++i) {
        const NodeId ring = (i + 1) % 20;
        const NodeId chord = static_cast<NodeId>((i + 20 + kLcf[i % 10]) % 20);
        arcs.emplace_back(i, ring);
        arcs.emplace_back(ring, i);
        if (i < chord) {
            arcs.emplace_back(i, chord);
            arcs.emplace_back(chord, i);
        }
    }
    return Graph::from_arcs(20, arcs);
}

namespace {

void check_positive(const std::vector<Weight>& values) {
    if (values.empty()) throw std::invalid_argument("assignment array must be non-empty");
    for (Weight w : values) {
        if (!(w > 0)) throw std::invalid_argument("assignment array values must be > 0");
    }
}

// Inverse CDF of N(mu, sigma) by bisection on the stdlib erf.
double normal_quantile(double p, double mu, double sigma) {
    double lo = mu - 12.0 * sigma;
    double hi = mu + 12.0 * sigma;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double cdf = 0.5 * (1.0 + std::erf((mid - mu) / (sigma * std::sqrt(2.0))));
        if (cdf < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

AssignmentArray even_array(std::size_t n) {
    AssignmentArray a;
    a.kind = DensityKind::Even;
    a.values.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) a.values.push_back(static_cast<Weight>(i));
    check_positive(a.values);
    return a;
}

AssignmentArray scaled_array(std::size_t n, Weight c) {
    if (!(c > 0)) throw std::invalid_argument("scale factor must be > 0");
    AssignmentArray a;
    a.kind = DensityKind::Scaled;
    a.values.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) a.values.push_back(c * static_cast<Weight>(i));
    check_positive(a.values);
    return a;
}

AssignmentArray normal_array(std::size_t n) {
    AssignmentArray a;
    a.kind = DensityKind::Normal;
    a.values.reserve(n);
    const double mu = static_cast<double>(n) / 2.0;
    const double sigma = static_cast<double>(n) / 6.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(n + 1);
        double v = std::round(normal_quantile(p, mu, sigma));
        v = std::min(std::max(v, 1.0), static_cast<double>(n));
        a.values.push_back(v);
    }
    check_positive(a.values);
    return a;
}

AssignmentArray dumbbell_array(std::size_t n) {
    AssignmentArray a;
    a.kind = DensityKind::Dumbbell;
    a.values.reserve(n);
    const double lo_max = std::max(1.0, std::round(static_cast<double>(n) * 0.1));
    const double hi_min = std::max(lo_max, std::round(static_cast<double>(n) * 0.9));
    const std::size_t lower = (n + 1) / 2;
    const auto spread = [](std::size_t j, std::size_t m, double a0, double b0) {
        if (m <= 1) return a0;
        return std::round(a0 + static_cast<double>(j) * (b0 - a0) / static_cast<double>(m - 1));
    };
    for (std::size_t j = 0; j < lower; ++j) {
        a.values.push_back(spread(j, lower, 1.0, lo_max));
    }
    for (std::size_t j = 0; j < n - lower; ++j) {
        a.values.push_back(spread(j, n - lower, hi_min, static_cast<double>(n)));
    }
    check_positive(a.values);
    return a;
}

AssignmentArray random_gap_array(std::size_t n, SplitMix64& rng) {
    AssignmentArray a;
    a.kind = DensityKind::RandomGap;
    a.values.reserve(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += 1.0 + 4.0 * rng.unit();
        a.values.push_back(acc);
    }
    check_positive(a.values);
    return a;
}

AssignmentArray make_assignment(DensityKind kind, std::size_t n, Weight c, SplitMix64& rng) {
    switch (kind) {
        case DensityKind::Even: return even_array(n);
        case DensityKind::Scaled: return scaled_array(n, c);
        case DensityKind::Normal: return normal_array(n);
        case DensityKind::Dumbbell: return dumbbell_array(n);
        case DensityKind::RandomGap: return random_gap_array(n, rng);
    }
    throw std::invalid_argument("unknown density kind");
}

Weight WeightTable::at(NodeId u, NodeId v) const {
    const auto found = find(u, v);
    if (!found) {
        throw std::out_of_range("no weight for arc " + std::to_string(u) + "->" +
                                std::to_string(v));
    }
    return *found;
}

std::optional<Weight> WeightTable::find(NodeId u, NodeId v) const {
    if (u >= rows_.size()) return std::nullopt;
    const auto& row = rows_[u];
    const auto it = std::lower_bound(row.begin(), row.end(), v,
                                     [](const auto& entry, NodeId key) { return entry.first < key; });
    if (it == row.end() || it->first != v) return std::nullopt;
    return it->second;
}

void WeightTable::set(NodeId u, NodeId v, Weight w) {
    if (!(w > 0)) throw std::invalid_argument("arc weights must be > 0");
    if (u >= rows_.size()) rows_.resize(u + 1);
    auto& row = rows_[u];
    const auto it = std::lower_bound(row.begin(), row.end(), v,
                                     [](const auto& entry, NodeId key) { return entry.first < key; });
    if (it != row.end() && it->first == v) {
        it->second = w;
        return;
    }
    row.insert(it, {v, w});
    ++size_;
}

WeightTable assign_weights(const Graph& g, const AssignmentArray& a, std::uint64_t seed) {
    check_positive(a.values);
    WeightTable w;
    SplitMix64 rng(seed);
    detail::for_each_draw_arc(g, [&](NodeId u, NodeId v, bool mirror) {
        const Weight value = a.values[rng.below(a.values.size())];
        w.set(u, v, value);
        if (mirror) w.set(v, u, value);
    });
    return w;
}

}  // namespace regionpath
