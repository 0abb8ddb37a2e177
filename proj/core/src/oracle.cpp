#include "bentsmith/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <thread>

#include "bentsmith/error.hpp"

namespace bentsmith::oracle {

namespace {

// Direct classification built only from wht_direct; independent of classify().
struct Verdict {
    bool bent = false;
    bool self_dual = false;
    bool anti_self_dual = false;
};

Verdict judge(const TruthTable& tt)
{
    const auto ws = wht_direct(tt);
    const int n = tt.num_vars();
    Verdict v;
    if (n % 2 != 0) return v;
    const std::int32_t flat = 1 << (n / 2);
    bool sd = true, asd = true;
    for (std::size_t a = 0; a < tt.size(); ++a) {
        const auto c = ws.coeffs[a];
        if (std::abs(c) != flat) return v;
        const bool dual_bit = c < 0;
        sd = sd && dual_bit == tt.get(a);
        asd = asd && dual_bit != tt.get(a);
    }
    v.bent = true;
    v.self_dual = sd;
    v.anti_self_dual = asd;
    return v;
}

TruthTable from_index(int n, std::uint64_t index)
{
    TruthTable tt(n);
    for (std::size_t i = 0; i < tt.size(); ++i) tt.set(i, (index >> i) & 1U);
    return tt;
}

void tally(CensusReport& r, const TruthTable& tt)
{
    const auto v = judge(tt);
    ++r.examined;
    r.count_bent += v.bent;
    if (v.self_dual) {
        ++r.count_self_dual;
        r.self_dual.push_back(tt);
    }
    if (v.anti_self_dual) {
        ++r.count_anti_self_dual;
        r.anti_self_dual.push_back(tt);
    }
}

}  // namespace

WalshSpectrum wht_direct(const TruthTable& tt)
{
    const int n = tt.num_vars();
    if (n > kDirectWhtMaxVars)
        throw TooLarge("direct transform limited to n <= 12, got n = " + std::to_string(n));
    WalshSpectrum ws{n, std::vector<std::int32_t>(tt.size())};
    for (std::size_t a = 0; a < tt.size(); ++a) {
        std::int32_t sum = 0;
        for (std::size_t x = 0; x < tt.size(); ++x) {
            const unsigned dot = static_cast<unsigned>(std::popcount(a & x)) & 1U;
            sum += ((tt.get(x) ? 1U : 0U) ^ dot) ? -1 : 1;
        }
        ws.coeffs[a] = sum;
    }
    return ws;
}

bool eval_tree_at(const ExprTree& tree, int num_vars, std::size_t input, std::span<const TruthTable> seeds)
{
    std::size_t i = 0;
    auto eval = [&](auto&& self) -> bool {
        const Node node = tree[i++];
        switch (node.op) {
            case Op::Var:
                if (node.index >= num_vars) throw UnboundVariable("variable outside input range");
                return (input >> (num_vars - 1 - node.index)) & 1U;
            case Op::Seed: {
                if (node.index >= seeds.size()) throw MissingSeed("seed not bound");
                const auto& s = seeds[node.index];
                return s.get(input & (s.size() - 1));
            }
            case Op::Not: return !self(self);
            case Op::If: {
                const bool c = self(self);
                const bool t = self(self);
                const bool e = self(self);
                return c ? t : e;
            }
            default: break;
        }
        const bool a = self(self);
        const bool b = self(self);
        switch (node.op) {
            case Op::Or: return a || b;
            case Op::Xor: return a != b;
            case Op::And: return a && b;
            case Op::And2: return a && !b;
            case Op::Xnor: return a == b;
            default: return false;
        }
    };
    return eval(eval);
}

TruthTable eval_tree_naive(const ExprTree& tree, int num_vars, std::span<const TruthTable> seeds)
{
    TruthTable tt(num_vars);
    for (std::size_t x = 0; x < tt.size(); ++x) tt.set(x, eval_tree_at(tree, num_vars, x, seeds));
    return tt;
}

CensusReport census(int n, unsigned jobs)
{
    if (n != 2 && n != 4)
        throw TooLarge("exhaustive census supports n in {2, 4}; use the sampled mode for n = " + std::to_string(n));
    const std::uint64_t total = std::uint64_t{1} << (std::size_t{1} << n);
    jobs = std::max(1U, jobs);

    std::vector<CensusReport> parts(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
            auto& part = parts[j];
            part.n = n;
            const std::uint64_t lo = total * j / jobs;
            const std::uint64_t hi = total * (j + 1) / jobs;
            for (std::uint64_t idx = lo; idx < hi; ++idx) tally(part, from_index(n, idx));
        });
    }
    for (auto& w : workers) w.join();

    CensusReport r;
    r.n = n;
    for (auto& p : parts) {
        r.examined += p.examined;
        r.count_bent += p.count_bent;
        r.count_self_dual += p.count_self_dual;
        r.count_anti_self_dual += p.count_anti_self_dual;
        r.self_dual.insert(r.self_dual.end(), p.self_dual.begin(), p.self_dual.end());
        r.anti_self_dual.insert(r.anti_self_dual.end(), p.anti_self_dual.begin(), p.anti_self_dual.end());
    }
    return r;
}

CensusReport census_sampled(int n, std::uint64_t samples, RandomStream& rng)
{
    if (n > kDirectWhtMaxVars) throw TooLarge("sampled census limited to n <= 12");
    CensusReport r;
    r.n = n;
    r.exhaustive = false;
    for (std::uint64_t s = 0; s < samples; ++s) {
        TruthTable tt(n);
        for (auto& w : tt.words()) w = rng();
        tt.normalize();
        tally(r, tt);
    }
    return r;
}

}  // namespace bentsmith::oracle
