#include "bentsmith/expr_tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bentsmith/error.hpp"

namespace bentsmith {

std::string_view op_name(Op op) noexcept
{
    switch (op) {
        case Op::Var: return "VAR";
        case Op::Seed: return "SEED";
        case Op::Not: return "NOT";
        case Op::Or: return "OR";
        case Op::Xor: return "XOR";
        case Op::And: return "AND";
        case Op::And2: return "AND2";
        case Op::Xnor: return "XNOR";
        case Op::If: return "IF";
    }
    return "?";
}

TerminalSet TerminalSet::direct(int n)
{
    if (n < 1 || n > kMaxVariables) throw ConfigInvalid("variable count out of range: " + std::to_string(n));
    return {n, n, 0, 1};
}

TerminalSet TerminalSet::construction(int seed_vars, int num_seeds)
{
    if (seed_vars < 1 || seed_vars + 2 > kMaxVariables)
        throw ConfigInvalid("seed variable count out of range: " + std::to_string(seed_vars));
    if (num_seeds < 0 || num_seeds > 4) throw ConfigInvalid("at most four seed terminals are supported");
    return {seed_vars + 2, 2, num_seeds, 0};
}

Node TerminalSet::terminal(std::size_t k) const noexcept
{
    if (k < static_cast<std::size_t>(free_vars)) return {Op::Var, static_cast<std::uint8_t>(k)};
    return {Op::Seed, static_cast<std::uint8_t>(k - static_cast<std::size_t>(free_vars))};
}

ExprTree::ExprTree(std::vector<Node> nodes) : nodes_(std::move(nodes))
{
    if (nodes_.empty()) throw ParseError("empty expression tree");
    std::size_t need = 1;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (need == 0) throw ParseError("trailing nodes after a complete tree");
        need += static_cast<std::size_t>(arity(nodes_[i].op));
        --need;
    }
    if (need != 0) throw ParseError("incomplete expression tree: missing operands");
}

std::size_t ExprTree::subtree_end(std::size_t i) const noexcept
{
    std::size_t need = 1;
    while (need > 0) {
        need += static_cast<std::size_t>(arity(nodes_[i].op));
        --need;
        ++i;
    }
    return i;
}

std::vector<int> ExprTree::node_depths() const
{
    std::vector<int> depths(nodes_.size());
    // pending[k] = remaining children of the k-th open ancestor
    std::vector<int> pending;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        depths[i] = static_cast<int>(pending.size());
        if (!pending.empty()) --pending.back();
        if (arity(nodes_[i].op) > 0)
            pending.push_back(arity(nodes_[i].op));
        while (!pending.empty() && pending.back() == 0) pending.pop_back();
    }
    return depths;
}

int ExprTree::depth() const
{
    const auto d = node_depths();
    return *std::max_element(d.begin(), d.end());
}

ExprTree ExprTree::subtree(std::size_t i) const
{
    return ExprTree(std::vector<Node>(nodes_.begin() + static_cast<std::ptrdiff_t>(i),
                                      nodes_.begin() + static_cast<std::ptrdiff_t>(subtree_end(i))));
}

ExprTree ExprTree::replace(std::size_t i, const ExprTree& donor) const
{
    std::vector<Node> out;
    out.reserve(nodes_.size() + donor.size());
    const auto end = subtree_end(i);
    out.insert(out.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), donor.nodes_.begin(), donor.nodes_.end());
    out.insert(out.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(end), nodes_.end());
    return ExprTree(std::move(out));
}

bool ExprTree::uses_seeds() const noexcept
{
    return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.op == Op::Seed; });
}

namespace {

void print(const ExprTree& t, std::size_t& i, const TerminalSet& terms, std::string& out)
{
    const Node node = t[i++];
    if (node.op == Op::Var) {
        out += 'x';
        out += std::to_string(node.index + terms.var_base);
        return;
    }
    if (node.op == Op::Seed) {
        out += 'f';
        out += std::to_string(node.index);
        return;
    }
    out += op_name(node.op);
    out += '(';
    for (int c = 0; c < arity(node.op); ++c) {
        if (c > 0) out += ", ";
        print(t, i, terms, out);
    }
    out += ')';
}

class Parser {
  public:
    Parser(std::string_view text, const TerminalSet& terms) : text_(text), terms_(terms) {}

    std::vector<Node> run()
    {
        parse_node();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return std::move(nodes_);
    }

  private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view identifier()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an operator or terminal");
        return text_.substr(start, pos_ - start);
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static bool parse_index(std::string_view digits, int& value)
    {
        if (digits.empty()) return false;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        return ec == std::errc{} && ptr == digits.data() + digits.size();
    }

    void parse_node()
    {
        const auto id = identifier();
        for (Op op : kFunctionSet) {
            if (id == op_name(op)) {
                nodes_.push_back({op, 0});
                expect('(');
                for (int c = 0; c < arity(op); ++c) {
                    if (c > 0) expect(',');
                    parse_node();
                }
                expect(')');
                return;
            }
        }
        int idx = 0;
        if (id.size() >= 2 && id[0] == 'x' && parse_index(id.substr(1), idx)) {
            const int pos = idx - terms_.var_base;
            if (pos < 0 || pos >= terms_.free_vars) throw UnboundVariable("variable " + std::string(id) + " is not bound");
            nodes_.push_back({Op::Var, static_cast<std::uint8_t>(pos)});
            return;
        }
        if (id.size() >= 2 && id[0] == 'f' && parse_index(id.substr(1), idx)) {
            if (idx < 0 || idx >= terms_.num_seeds) throw MissingSeed("seed " + std::string(id) + " is not bound");
            nodes_.push_back({Op::Seed, static_cast<std::uint8_t>(idx)});
            return;
        }
        fail("unknown symbol '" + std::string(id) + "'");
    }

    std::string_view text_;
    const TerminalSet& terms_;
    std::size_t pos_ = 0;
    std::vector<Node> nodes_;
};

std::vector<std::uint64_t> lift(const TruthTable& seed, int num_vars)
{
    const std::size_t words = word_count(num_vars);
    std::vector<std::uint64_t> out(words);
    const auto src = seed.words();
    if (seed.num_vars() >= 6) {
        for (std::size_t w = 0; w < words; ++w) out[w] = src[w % src.size()];
        return out;
    }
    std::uint64_t pattern = src[0];
    for (std::size_t width = seed.size(); width < 64; width *= 2) pattern |= pattern << width;
    std::fill(out.begin(), out.end(), pattern & low_mask(num_vars));
    return out;
}

}  // namespace

std::string ExprTree::to_string(const TerminalSet& terms) const
{
    std::string out;
    std::size_t i = 0;
    print(*this, i, terms, out);
    return out;
}

ExprTree ExprTree::parse(std::string_view text, const TerminalSet& terms)
{
    return ExprTree(Parser(text, terms).run());
}

TreeEvaluator::TreeEvaluator(int num_vars, std::span<const TruthTable> seeds)
    : n_(num_vars), words_(word_count(num_vars))
{
    for (int v = 1; v <= num_vars; ++v) {
        const auto tt = TruthTable::variable(num_vars, v);
        vars_.emplace_back(tt.words().begin(), tt.words().end());
    }
    for (const auto& s : seeds) {
        if (s.num_vars() > num_vars)
            throw SizeMismatch("seed has more variables than the evaluated function");
        seeds_.push_back(lift(s, num_vars));
    }
}

TruthTable TreeEvaluator::operator()(const ExprTree& tree)
{
    const auto nodes = tree.nodes();
    if (stack_.size() < nodes.size() * words_) stack_.resize(nodes.size() * words_);
    std::size_t top = 0;  // number of occupied slots
    const auto W = words_;
    auto slot = [&](std::size_t k) { return stack_.data() + k * W; };

    for (std::size_t i = nodes.size(); i-- > 0;) {
        const Node node = nodes[i];
        switch (node.op) {
            case Op::Var: {
                if (node.index >= vars_.size())
                    throw UnboundVariable("variable position " + std::to_string(node.index) + " exceeds n = " +
                                          std::to_string(n_));
                std::copy(vars_[node.index].begin(), vars_[node.index].end(), slot(top++));
                break;
            }
            case Op::Seed: {
                if (node.index >= seeds_.size())
                    throw MissingSeed("tree references f" + std::to_string(node.index) + " but only " +
                                      std::to_string(seeds_.size()) + " seeds are bound");
                std::copy(seeds_[node.index].begin(), seeds_[node.index].end(), slot(top++));
                break;
            }
            case Op::Not: {
                auto* a = slot(top - 1);
                for (std::size_t w = 0; w < W; ++w) a[w] = ~a[w];
                break;
            }
            case Op::If: {
                // operands: c on top, then t, then e; result written into e's slot
                const auto* c = slot(top - 1);
                const auto* t = slot(top - 2);
                auto* e = slot(top - 3);
                for (std::size_t w = 0; w < W; ++w) e[w] = (c[w] & t[w]) | (~c[w] & e[w]);
                top -= 2;
                break;
            }
            default: {
                const auto* a = slot(top - 1);
                auto* b = slot(top - 2);
                switch (node.op) {
                    case Op::Or:
                        for (std::size_t w = 0; w < W; ++w) b[w] = a[w] | b[w];
                        break;
                    case Op::Xor:
                        for (std::size_t w = 0; w < W; ++w) b[w] = a[w] ^ b[w];
                        break;
                    case Op::And:
                        for (std::size_t w = 0; w < W; ++w) b[w] = a[w] & b[w];
                        break;
                    case Op::And2:
                        for (std::size_t w = 0; w < W; ++w) b[w] = a[w] & ~b[w];
                        break;
                    case Op::Xnor:
                        for (std::size_t w = 0; w < W; ++w) b[w] = ~(a[w] ^ b[w]);
                        break;
                    default: break;
                }
                --top;
                break;
            }
        }
    }

    TruthTable out(n_);
    std::copy(slot(0), slot(0) + W, out.words().begin());
    out.normalize();
    return out;
}

TruthTable eval_tree(const ExprTree& tree, int n)
{
    TreeEvaluator eval(n);
    return eval(tree);
}

}  // namespace bentsmith
