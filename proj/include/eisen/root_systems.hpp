#ifndef EISEN_ROOT_SYSTEMS_HPP
#define EISEN_ROOT_SYSTEMS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

// Split root systems of types A-G in exact integer arithmetic, maximal
// parabolics, and the grading of the nilradical by the removed simple root.
//
// Roots are integer coefficient vectors over the simple roots. Simple roots
// follow Bourbaki numbering (0-based): B_n has alpha_{n-1} short, C_n has
// alpha_{n-1} long, F_4 has alpha_0, alpha_1 long, G_2 has alpha_0 short and
// alpha_1 long, and E_n has alpha_1 attached to alpha_3.
namespace eisen
{

using Root = std::vector<int>;

struct CartanLabel
{
    char type;
    int rank;

    friend bool operator==(const CartanLabel &, const CartanLabel &) = default;
    friend auto operator<=>(const CartanLabel &, const CartanLabel &) = default;
};

inline std::string to_string(const CartanLabel &l)
{
    return std::string(1, l.type) + std::to_string(l.rank);
}

inline bool is_valid_type(char type, int rank)
{
    switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

class RootSystem
{
public:
    CartanLabel label() const noexcept { return label_; }
    char cartan_type() const noexcept { return label_.type; }
    int rank() const noexcept { return label_.rank; }

    // cartan(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>> &cartan_matrix() const noexcept { return cartan_; }
    const std::vector<std::vector<int>> &gram_matrix() const noexcept { return gram_; }

    std::vector<Root> simple_roots() const
    {
        std::vector<Root> out;
        for (int i = 0; i < rank(); ++i) {
            Root r(static_cast<std::size_t>(rank()), 0);
            r[static_cast<std::size_t>(i)] = 1;
            out.push_back(r);
        }
        return out;
    }

    // Ordered by height, then lexicographically by coefficients.
    const std::vector<Root> &positive_roots() const noexcept { return positive_; }

    // <beta, alpha_i^vee> for beta in coefficient coordinates.
    int pairing(const Root &beta, int i) const
    {
        int v = 0;
        for (int j = 0; j < rank(); ++j) {
            v += beta[static_cast<std::size_t>(j)] * cartan(j, i);
        }
        return v;
    }

    Root reflect(const Root &beta, int i) const
    {
        Root out = beta;
        out[static_cast<std::size_t>(i)] -= pairing(beta, i);
        return out;
    }

    // Root system from an explicit symmetric Gram matrix of the simple roots.
    static RootSystem from_gram(CartanLabel label, std::vector<std::vector<int>> gram)
    {
        RootSystem rs;
        rs.label_ = label;
        rs.gram_ = std::move(gram);
        const auto n = rs.gram_.size();
        rs.cartan_.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[j][j];
            }
        }
        rs.generate_positive_roots();
        return rs;
    }

private:
    void generate_positive_roots()
    {
        std::set<Root> seen;
        std::vector<Root> frontier = simple_roots();
        seen.insert(frontier.begin(), frontier.end());
        while (!frontier.empty()) {
            std::vector<Root> next;
            for (const auto &beta : frontier) {
                for (int i = 0; i < rank(); ++i) {
                    Root r = reflect(beta, i);
                    // s_i permutes the positive roots other than alpha_i.
                    if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) {
                        continue;
                    }
                    if (seen.insert(r).second) {
                        next.push_back(r);
                    }
                }
            }
            frontier = std::move(next);
        }
        positive_.assign(seen.begin(), seen.end());
        std::sort(positive_.begin(), positive_.end(), [](const Root &a, const Root &b) {
            const int ha = std::accumulate(a.begin(), a.end(), 0);
            const int hb = std::accumulate(b.begin(), b.end(), 0);
            return ha != hb ? ha < hb : a < b;
        });
    }

    CartanLabel label_{'A', 1};
    std::vector<std::vector<int>> gram_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
};

namespace detail
{

// Gram matrix (alpha_i, alpha_j) scaled to integers.
inline std::vector<std::vector<int>> gram_for(char type, int n)
{
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<int>> g(un, std::vector<int>(un, 0));
    auto link = [&](int i, int j, int v) {
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    };
    auto len = [&](int i, int v) { g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v; };

    switch (type) {
    case 'A':
        for (int i = 0; i < n; ++i) len(i, 2);
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'B': // long 4, short 2
        for (int i = 0; i + 1 < n; ++i) len(i, 4);
        len(n - 1, 2);
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case 'C': // short 2, long 4
        for (int i = 0; i + 1 < n; ++i) len(i, 2);
        len(n - 1, 4);
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) len(i, 2);
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case 'E':
        for (int i = 0; i < n; ++i) len(i, 2);
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        len(0, 4); len(1, 4); len(2, 2); len(3, 2);
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case 'G':
        len(0, 2); len(1, 6);
        link(0, 1, -3);
        break;
    default: break;
    }
    return g;
}

} // namespace detail

inline RootSystem build_root_system(char type, int rank)
{
    if (!is_valid_type(type, rank)) {
        throw InvalidTypeError(std::string("no simple root system of type ") + type + std::to_string(rank));
    }
    return RootSystem::from_gram({type, rank}, detail::gram_for(type, rank));
}

// Degrees of the basic invariants.
inline std::vector<int> weyl_degrees(char type, int n)
{
    if (!is_valid_type(type, n)) {
        throw InvalidTypeError(std::string("no simple root system of type ") + type + std::to_string(n));
    }
    std::vector<int> d;
    switch (type) {
    case 'A':
        for (int k = 2; k <= n + 1; ++k) d.push_back(k);
        break;
    case 'B':
    case 'C':
        for (int k = 1; k <= n; ++k) d.push_back(2 * k);
        break;
    case 'D':
        for (int k = 1; k < n; ++k) d.push_back(2 * k);
        d.push_back(n);
        break;
    case 'E':
        if (n == 6) d = {2, 5, 6, 8, 9, 12};
        if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
        if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
    default: break;
    }
    return d;
}

inline std::uint64_t weyl_order_closed_form(char type, int rank)
{
    std::uint64_t order = 1;
    for (int d : weyl_degrees(type, rank)) {
        order *= static_cast<std::uint64_t>(d);
    }
    return order;
}

/// |W| as the orbit size of rho under the simple reflections, acting on
/// fundamental-weight coordinates (rho is regular, so the orbit is free).
/// Throws ResourceError once the orbit exceeds element_cap.
inline std::uint64_t weyl_group_order_generated(const RootSystem &rs, std::uint64_t element_cap = 1'000'000)
{
    const int n = rs.rank();
    if (n > 8) {
        throw ResourceError("weyl_group_order: rank above 8 is not supported by the orbit encoding");
    }
    auto pack = [n](const std::vector<int> &w) {
        std::uint64_t key = 0;
        for (int i = 0; i < n; ++i) {
            key = (key << 8) | static_cast<std::uint8_t>(w[static_cast<std::size_t>(i)] + 128);
        }
        return key;
    };
    std::vector<int> rho(static_cast<std::size_t>(n), 1);
    std::unordered_set<std::uint64_t> seen{pack(rho)};
    std::vector<std::vector<int>> frontier{rho};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &w : frontier) {
            for (int i = 0; i < n; ++i) {
                // s_i(lambda) = lambda - lambda_i alpha_i, alpha_i = sum_j cartan(i, j) omega_j
                std::vector<int> v = w;
                const int li = w[static_cast<std::size_t>(i)];
                for (int j = 0; j < n; ++j) {
                    v[static_cast<std::size_t>(j)] -= li * rs.cartan(i, j);
                }
                if (seen.insert(pack(v)).second) {
                    if (seen.size() > element_cap) {
                        throw ResourceError("weyl_group_order: more than " + std::to_string(element_cap) +
                                            " elements");
                    }
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

/// |W(rs)|: exhaustive generation, except E_7 and E_8, which use the
/// product of the degrees.
inline std::uint64_t weyl_group_order(const RootSystem &rs, std::uint64_t element_cap = 1'000'000)
{
    if (rs.cartan_type() == 'E' && rs.rank() >= 7) {
        return weyl_order_closed_form(rs.cartan_type(), rs.rank());
    }
    return weyl_group_order_generated(rs, element_cap);
}

class ParabolicDatum
{
public:
    ParabolicDatum(RootSystem system, int removed_index) : system_(std::move(system)), removed_(removed_index)
    {
        if (removed_index < 0 || removed_index >= system_.rank()) {
            throw PreconditionError("ParabolicDatum: removed_index out of range");
        }
    }

    const RootSystem &system() const noexcept { return system_; }
    int removed_index() const noexcept { return removed_; }

    int coefficient(const Root &r) const { return r[static_cast<std::size_t>(removed_)]; }

    std::vector<Root> levi_roots() const
    {
        std::vector<Root> out;
        for (const auto &r : system_.positive_roots()) {
            if (coefficient(r) == 0) {
                out.push_back(r);
            }
        }
        return out;
    }

private:
    RootSystem system_;
    int removed_;
};

namespace detail
{

// Identify a connected Dynkin diagram from its Cartan matrix.
inline CartanLabel classify_component(const std::vector<std::vector<int>> &c)
{
    const int n = static_cast<int>(c.size());
    auto at = [&](int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    int long_i = -1;
    int long_j = -1;
    bool triple = false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && at(i, j) != 0) {
                adj[static_cast<std::size_t>(i)].push_back(j);
            }
            if (at(i, j) == -3) {
                triple = true;
            }
            if (at(i, j) == -2) { // alpha_i long, alpha_j short
                long_i = i;
                long_j = j;
            }
        }
    }
    if (n == 1) {
        return {'A', 1};
    }
    if (triple) {
        return {'G', 2};
    }
    if (long_i >= 0) {
        if (n == 2) {
            return {'B', 2};
        }
        const bool long_end = adj[static_cast<std::size_t>(long_i)].size() == 1;
        const bool short_end = adj[static_cast<std::size_t>(long_j)].size() == 1;
        if (!long_end && !short_end) {
            return {'F', 4};
        }
        // B_n: the double bond ends in a short root; C_n: in a long root.
        return short_end ? CartanLabel{'B', n} : CartanLabel{'C', n};
    }
    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (adj[static_cast<std::size_t>(i)].size() == 3) {
            branch = i;
        }
    }
    if (branch < 0) {
        return {'A', n};
    }
    std::vector<int> arms;
    for (int start : adj[static_cast<std::size_t>(branch)]) {
        int prev = branch;
        int cur = start;
        int length = 1;
        while (adj[static_cast<std::size_t>(cur)].size() == 2) {
            const auto &nb = adj[static_cast<std::size_t>(cur)];
            const int nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
            ++length;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
        return {'D', n};
    }
    return {'E', n};
}

} // namespace detail

/// Simple factors of the Levi subsystem spanned by the remaining simple roots,
/// one per connected block of the induced Cartan matrix, ordered by their
/// smallest simple-root index.
inline std::vector<CartanLabel> levi_type(const ParabolicDatum &p)
{
    const auto &rs = p.system();
    const int n = rs.rank();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<CartanLabel> out;
    for (int start = 0; start < n; ++start) {
        if (start == p.removed_index() || component[static_cast<std::size_t>(start)] >= 0) {
            continue;
        }
        std::vector<int> members{start};
        component[static_cast<std::size_t>(start)] = start;
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (int j = 0; j < n; ++j) {
                if (j != p.removed_index() && component[static_cast<std::size_t>(j)] < 0 &&
                    rs.cartan(members[k], j) != 0) {
                    component[static_cast<std::size_t>(j)] = start;
                    members.push_back(j);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<std::vector<int>> sub(members.size(), std::vector<int>(members.size()));
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) {
                sub[a][b] = rs.cartan(members[a], members[b]);
            }
        }
        out.push_back(detail::classify_component(sub));
    }
    return out;
}

inline std::string levi_string(const std::vector<CartanLabel> &levi)
{
    if (levi.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &l : levi) {
        out += (out.empty() ? "" : "x") + to_string(l);
    }
    return out;
}

struct NilradicalLevel
{
    int a;
    std::vector<Root> roots;
    int dimension;
};

struct AdjointDecomposition
{
    std::vector<NilradicalLevel> levels;

    std::size_t m() const noexcept { return levels.size(); }

    std::vector<int> dimensions() const
    {
        std::vector<int> d;
        for (const auto &l : levels) {
            d.push_back(l.dimension);
        }
        return d;
    }
};

/// Nilradical roots grouped by their coefficient j >= 1 at the removed simple
/// root; level j carries a_j = j. Each level is taken as one constituent r_j
/// of the adjoint action of the Levi; only its dimension is checked.
inline AdjointDecomposition nilradical_decomposition(const ParabolicDatum &p)
{
    std::map<int, std::vector<Root>> by_level;
    for (const auto &r : p.system().positive_roots()) {
        if (const int c = p.coefficient(r); c > 0) {
            by_level[c].push_back(r);
        }
    }
    AdjointDecomposition d;
    for (auto &[a, roots] : by_level) {
        const int dim = static_cast<int>(roots.size());
        d.levels.push_back({a, std::move(roots), dim});
    }
    return d;
}

struct DecompositionRow
{
    CartanLabel system;
    int removed_index;
    std::vector<CartanLabel> levi;
    int m;
    std::vector<int> dims;
    std::vector<int> a;
};

/// One row per maximal parabolic of each listed type, in input order and then
/// by removed index.
inline std::vector<DecompositionRow> enumerate_table(const std::vector<CartanLabel> &types)
{
    std::vector<DecompositionRow> rows;
    for (const auto &t : types) {
        const RootSystem rs = build_root_system(t.type, t.rank);
        for (int i = 0; i < rs.rank(); ++i) {
            const ParabolicDatum p(rs, i);
            const auto dec = nilradical_decomposition(p);
            DecompositionRow row{t, i, levi_type(p), static_cast<int>(dec.m()), dec.dimensions(), {}};
            for (const auto &l : dec.levels) {
                row.a.push_back(l.a);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace eisen

#endif
