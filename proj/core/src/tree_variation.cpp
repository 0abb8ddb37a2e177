#include "bentsmith/tree_variation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bentsmith/error.hpp"

namespace bentsmith {

namespace {

constexpr int kMaxAttempts = 16;
constexpr std::size_t kNumFunctions = std::size(kFunctionSet);

Node random_terminal(const TerminalSet& terms, RandomStream& rng)
{
    return terms.terminal(uniform_int<std::size_t>(rng, 0, terms.size() - 1));
}

void grow_into(std::vector<Node>& out, const TerminalSet& terms, int depth, bool full, RandomStream& rng)
{
    if (depth == 0) {
        out.push_back(random_terminal(terms, rng));
        return;
    }
    Op op;
    if (full) {
        op = kFunctionSet[uniform_int<std::size_t>(rng, 0, kNumFunctions - 1)];
    } else {
        const auto k = uniform_int<std::size_t>(rng, 0, kNumFunctions + terms.size() - 1);
        if (k >= kNumFunctions) {
            out.push_back(terms.terminal(k - kNumFunctions));
            return;
        }
        op = kFunctionSet[k];
    }
    out.push_back({op, 0});
    for (int c = 0; c < arity(op); ++c) grow_into(out, terms, depth - 1, full, rng);
}

std::vector<std::size_t> children(const ExprTree& t, std::size_t i)
{
    std::vector<std::size_t> out;
    std::size_t c = i + 1;
    for (int k = 0; k < arity(t[i].op); ++k) {
        out.push_back(c);
        c = t.subtree_end(c);
    }
    return out;
}

/// Node pairs reachable from the roots through nodes of equal arity.
void common_region(const ExprTree& a, std::size_t ia, const ExprTree& b, std::size_t ib,
                   std::vector<std::pair<std::size_t, std::size_t>>& out)
{
    out.emplace_back(ia, ib);
    if (arity(a[ia].op) != arity(b[ib].op)) return;
    const auto ca = children(a, ia);
    const auto cb = children(b, ib);
    for (std::size_t k = 0; k < ca.size(); ++k) common_region(a, ca[k], b, cb[k], out);
}

void uniform_into(const ExprTree& a, std::size_t ia, const ExprTree& b, std::size_t ib, std::vector<Node>& out,
                  RandomStream& rng)
{
    const int ar = arity(a[ia].op);
    if (ar > 0 && ar == arity(b[ib].op)) {
        // interior of the common region: swap node labels only
        out.push_back(coin(rng) ? a[ia] : b[ib]);
        const auto ca = children(a, ia);
        const auto cb = children(b, ib);
        for (std::size_t k = 0; k < ca.size(); ++k) uniform_into(a, ca[k], b, cb[k], out, rng);
        return;
    }
    // boundary: whole subtrees are inherited
    const auto& src = coin(rng) ? a : b;
    const auto at = &src == &a ? ia : ib;
    const auto nodes = src.nodes();
    out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(at),
               nodes.begin() + static_cast<std::ptrdiff_t>(src.subtree_end(at)));
}

std::map<std::vector<int>, std::size_t> coordinates(const ExprTree& t)
{
    std::map<std::vector<int>, std::size_t> out;
    std::vector<int> path;
    auto walk = [&](auto&& self, std::size_t i) -> void {
        out.emplace(path, i);
        const auto cs = children(t, i);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            path.push_back(static_cast<int>(k));
            self(self, cs[k]);
            path.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

std::optional<ExprTree> simple_cx(const ExprTree& a, const ExprTree& b, RandomStream& rng)
{
    const auto ia = uniform_int<std::size_t>(rng, 0, a.size() - 1);
    const auto ib = uniform_int<std::size_t>(rng, 0, b.size() - 1);
    return a.replace(ia, b.subtree(ib));
}

std::optional<ExprTree> uniform_cx(const ExprTree& a, const ExprTree& b, RandomStream& rng)
{
    std::vector<Node> out;
    uniform_into(a, 0, b, 0, out, rng);
    return ExprTree(std::move(out));
}

// Size-fair: the inserted subtree may be at most 2s + 1 nodes where s is the
// size of the removed one; among those candidates smaller, equal and larger
// sizes are chosen with equal probability, then a subtree of that class
// uniformly.
std::optional<ExprTree> size_fair_cx(const ExprTree& a, const ExprTree& b, RandomStream& rng)
{
    const auto ia = uniform_int<std::size_t>(rng, 0, a.size() - 1);
    const auto removed = a.subtree_size(ia);
    std::vector<std::size_t> smaller, equal, larger;
    for (std::size_t ib = 0; ib < b.size(); ++ib) {
        const auto s = b.subtree_size(ib);
        if (s < removed)
            smaller.push_back(ib);
        else if (s == removed)
            equal.push_back(ib);
        else if (s <= 2 * removed + 1)
            larger.push_back(ib);
    }
    std::vector<const std::vector<std::size_t>*> classes;
    for (const auto* c : {&smaller, &equal, &larger})
        if (!c->empty()) classes.push_back(c);
    if (classes.empty()) return std::nullopt;
    const auto& pick = *classes[uniform_int<std::size_t>(rng, 0, classes.size() - 1)];
    const auto ib = pick[uniform_int<std::size_t>(rng, 0, pick.size() - 1)];
    return a.replace(ia, b.subtree(ib));
}

std::optional<ExprTree> one_point_cx(const ExprTree& a, const ExprTree& b, RandomStream& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> region;
    common_region(a, 0, b, 0, region);
    const auto [ia, ib] = region[uniform_int<std::size_t>(rng, 0, region.size() - 1)];
    return a.replace(ia, b.subtree(ib));
}

std::optional<ExprTree> context_preserving_cx(const ExprTree& a, const ExprTree& b, RandomStream& rng)
{
    const auto ca = coordinates(a);
    const auto cb = coordinates(b);
    std::vector<std::pair<std::size_t, std::size_t>> matches;
    for (const auto& [path, ia] : ca)
        if (auto it = cb.find(path); it != cb.end()) matches.emplace_back(ia, it->second);
    const auto [ia, ib] = matches[uniform_int<std::size_t>(rng, 0, matches.size() - 1)];
    return a.replace(ia, b.subtree(ib));
}

}  // namespace

DepthPolicy::DepthPolicy(int depth) : max_depth(depth)
{
    if (depth < 1) throw ConfigInvalid("max tree depth must be >= 1, got " + std::to_string(depth));
}

DepthPolicy DepthPolicy::for_vars(int n, bool literal_min)
{
    const int depth = literal_min ? std::min(5, n - 5) : std::max(5, n - 5);
    return DepthPolicy(std::max(1, depth));
}

std::string_view to_string(TreeCrossover kind) noexcept
{
    switch (kind) {
        case TreeCrossover::Simple: return "simple";
        case TreeCrossover::Uniform: return "uniform";
        case TreeCrossover::SizeFair: return "size-fair";
        case TreeCrossover::OnePoint: return "one-point";
        case TreeCrossover::ContextPreserving: return "context-preserving";
    }
    return "?";
}

ExprTree grow_tree(const TerminalSet& terms, int max_depth, RandomStream& rng)
{
    std::vector<Node> out;
    grow_into(out, terms, max_depth, false, rng);
    return ExprTree(std::move(out));
}

ExprTree full_tree(const TerminalSet& terms, int depth, RandomStream& rng)
{
    std::vector<Node> out;
    grow_into(out, terms, depth, true, rng);
    return ExprTree(std::move(out));
}

ExprTree ramped_tree(const TerminalSet& terms, const DepthPolicy& policy, RandomStream& rng)
{
    const int lo = std::min(2, policy.max_depth);
    const int depth = uniform_int(rng, lo, policy.max_depth);
    return coin(rng) ? grow_tree(terms, depth, rng) : full_tree(terms, depth, rng);
}

ExprTree mut_subtree(const ExprTree& t, const TerminalSet& terms, const DepthPolicy& policy, RandomStream& rng)
{
    const auto depths = t.node_depths();
    const auto i = uniform_int<std::size_t>(rng, 0, t.size() - 1);
    const int room = std::max(0, policy.max_depth - depths[i]);
    return t.replace(i, grow_tree(terms, room, rng));
}

ExprTree cx_tree(TreeCrossover kind, const ExprTree& a, const ExprTree& b, const DepthPolicy& policy,
                 RandomStream& rng)
{
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::optional<ExprTree> child;
        switch (kind) {
            case TreeCrossover::Simple: child = simple_cx(a, b, rng); break;
            case TreeCrossover::Uniform: child = uniform_cx(a, b, rng); break;
            case TreeCrossover::SizeFair: child = size_fair_cx(a, b, rng); break;
            case TreeCrossover::OnePoint: child = one_point_cx(a, b, rng); break;
            case TreeCrossover::ContextPreserving: child = context_preserving_cx(a, b, rng); break;
        }
        if (child && child->depth() <= policy.max_depth) return *std::move(child);
    }
    return a;
}

ExprTree cx_tree(const ExprTree& a, const ExprTree& b, const DepthPolicy& policy, RandomStream& rng)
{
    const auto kind = kTreeCrossovers[uniform_int<std::size_t>(rng, 0, std::size(kTreeCrossovers) - 1)];
    return cx_tree(kind, a, b, policy, rng);
}

}  // namespace bentsmith
