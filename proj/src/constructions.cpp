#include "diffposet/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace diffposet {

namespace {

using Partition = std::vector<int>;

// All partitions of n with parts <= max_part, lexicographically decreasing.
void gen_partitions(int n, int max_part, Partition& stack, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(stack);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        stack.push_back(first);
        gen_partitions(n - first, first, stack, out);
        stack.pop_back();
    }
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition stack;
    gen_partitions(n, n == 0 ? 1 : n, stack, out);
    return out;
}

std::string partition_label(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

// Shapes obtained by adding one box while staying a partition.
std::vector<Partition> box_additions(const Partition& p)
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == 0 || p[i - 1] > p[i]) {
            Partition q = p;
            ++q[i];
            out.push_back(std::move(q));
        }
    }
    Partition q = p;
    q.push_back(1);
    out.push_back(std::move(q));
    return out;
}

// {1,2}-words of digit sum n in lexicographic order (1 < 2).
std::vector<std::string> words_of(int n)
{
    if (n == 0)
        return {""};
    std::vector<std::string> out;
    for (const auto& w : words_of(n - 1))
        out.push_back("1" + w);
    if (n >= 2)
        for (const auto& w : words_of(n - 2))
            out.push_back("2" + w);
    return out;
}

std::vector<std::string> word_covers(const std::string& w)
{
    std::vector<std::string> out;
    const auto first_one = w.find('1');
    const std::size_t limit = first_one == std::string::npos ? w.size() : first_one;
    for (std::size_t q = 0; q <= limit; ++q) {
        std::string v = w;
        v.insert(q, 1, '1');
        out.push_back(std::move(v));
    }
    if (first_one != std::string::npos) {
        std::string v = w;
        v[first_one] = '2';
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

GradedPoset build_young(int top_rank)
{
    if (top_rank < 0)
        throw std::invalid_argument("build_young: negative top rank");

    std::vector<int> sizes;
    std::vector<std::vector<GradedPoset::Edge>> edges(static_cast<std::size_t>(top_rank));
    std::vector<std::vector<std::string>> labels;

    std::vector<Partition> current = partitions_of(0);
    for (int n = 0; n <= top_rank; ++n) {
        sizes.push_back(static_cast<int>(current.size()));
        std::vector<std::string> rank_labels;
        for (const auto& p : current)
            rank_labels.push_back(partition_label(p));
        labels.push_back(std::move(rank_labels));

        if (n == top_rank)
            break;
        std::vector<Partition> next = partitions_of(n + 1);
        std::map<Partition, int> index;
        for (int j = 0; j < static_cast<int>(next.size()); ++j)
            index[next[static_cast<std::size_t>(j)]] = j;
        for (int i = 0; i < static_cast<int>(current.size()); ++i)
            for (const auto& q : box_additions(current[static_cast<std::size_t>(i)]))
                edges[static_cast<std::size_t>(n)].push_back({i, index.at(q)});
        current = std::move(next);
    }
    return GradedPoset(std::move(sizes), std::move(edges), 1, std::move(labels));
}

GradedPoset build_young_fibonacci(int top_rank)
{
    if (top_rank < 0)
        throw std::invalid_argument("build_young_fibonacci: negative top rank");

    std::vector<int> sizes;
    std::vector<std::vector<GradedPoset::Edge>> edges(static_cast<std::size_t>(top_rank));
    std::vector<std::vector<std::string>> labels;

    std::vector<std::string> current = words_of(0);
    for (int n = 0; n <= top_rank; ++n) {
        sizes.push_back(static_cast<int>(current.size()));
        std::vector<std::string> rank_labels;
        for (const auto& w : current)
            rank_labels.push_back(w.empty() ? "e" : w);
        labels.push_back(std::move(rank_labels));

        if (n == top_rank)
            break;
        std::vector<std::string> next = words_of(n + 1);
        std::map<std::string, int> index;
        for (int j = 0; j < static_cast<int>(next.size()); ++j)
            index[next[static_cast<std::size_t>(j)]] = j;
        for (int i = 0; i < static_cast<int>(current.size()); ++i)
            for (const auto& v : word_covers(current[static_cast<std::size_t>(i)]))
                edges[static_cast<std::size_t>(n)].push_back({i, index.at(v)});
        current = std::move(next);
    }
    return GradedPoset(std::move(sizes), std::move(edges), 1, std::move(labels));
}

namespace {

// One product element: the factor ranks and the factor element indices.
struct ProductElem {
    std::vector<int> ranks;
    std::vector<int> indices;

    bool operator<(const ProductElem& rhs) const
    {
        // Rank compositions with the first factor's rank descending, then
        // element indices ascending: keeps the first factor's chain first.
        for (std::size_t f = 0; f < ranks.size(); ++f)
            if (ranks[f] != rhs.ranks[f])
                return ranks[f] > rhs.ranks[f];
        return indices < rhs.indices;
    }
};

void gen_product_rank(const std::vector<GradedPoset>& factors, std::size_t f, int remaining,
                      ProductElem& stack, std::vector<ProductElem>& out)
{
    if (f + 1 == factors.size()) {
        stack.ranks[f] = remaining;
        for (int i = 0; i < factors[f].rank_size(remaining); ++i) {
            stack.indices[f] = i;
            out.push_back(stack);
        }
        return;
    }
    for (int r = remaining; r >= 0; --r) {
        stack.ranks[f] = r;
        for (int i = 0; i < factors[f].rank_size(r); ++i) {
            stack.indices[f] = i;
            gen_product_rank(factors, f + 1, remaining - r, stack, out);
        }
    }
}

std::vector<ProductElem> product_rank(const std::vector<GradedPoset>& factors, int n)
{
    std::vector<ProductElem> out;
    ProductElem stack;
    stack.ranks.resize(factors.size());
    stack.indices.resize(factors.size());
    gen_product_rank(factors, 0, n, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

GradedPoset build_product(const std::vector<GradedPoset>& factors, int top_rank)
{
    if (factors.size() < 2)
        throw std::invalid_argument("build_product: need at least two factors");
    if (top_rank < 1)
        throw std::invalid_argument("build_product: top rank must be >= 1");
    for (const auto& f : factors)
        if (f.top_rank() < top_rank)
            throw std::invalid_argument("build_product: factor truncated below the requested rank");

    std::vector<int> sizes;
    std::vector<std::vector<GradedPoset::Edge>> edges(static_cast<std::size_t>(top_rank));
    std::vector<std::vector<std::string>> labels;

    std::vector<ProductElem> current = product_rank(factors, 0);
    for (int n = 0; n <= top_rank; ++n) {
        sizes.push_back(static_cast<int>(current.size()));
        std::vector<std::string> rank_labels;
        for (const auto& e : current) {
            std::string s = "(";
            for (std::size_t f = 0; f < factors.size(); ++f) {
                if (f)
                    s += ",";
                s += factors[f].describe(e.ranks[f], e.indices[f]);
            }
            s += ")";
            rank_labels.push_back(std::move(s));
        }
        labels.push_back(std::move(rank_labels));

        if (n == top_rank)
            break;
        std::vector<ProductElem> next = product_rank(factors, n + 1);
        std::map<ProductElem, int> index;
        for (int j = 0; j < static_cast<int>(next.size()); ++j)
            index[next[static_cast<std::size_t>(j)]] = j;
        for (int i = 0; i < static_cast<int>(current.size()); ++i) {
            const auto& e = current[static_cast<std::size_t>(i)];
            for (std::size_t f = 0; f < factors.size(); ++f)
                for (int j : factors[f].covers_above(e.ranks[f], e.indices[f])) {
                    ProductElem up = e;
                    ++up.ranks[f];
                    up.indices[f] = j;
                    edges[static_cast<std::size_t>(n)].push_back({i, index.at(up)});
                }
        }
        current = std::move(next);
    }

    std::optional<int> r_sum = 0;
    for (const auto& f : factors) {
        if (!f.declared_r()) {
            r_sum.reset();
            break;
        }
        *r_sum += *f.declared_r();
    }
    return GradedPoset(std::move(sizes), std::move(edges), r_sum, std::move(labels));
}

GradedPoset build_family(const FamilySpec& spec)
{
    switch (spec.family) {
    case FamilySpec::Family::young:
        return build_young(spec.top_rank);
    case FamilySpec::Family::young_fibonacci:
        return build_young_fibonacci(spec.top_rank);
    case FamilySpec::Family::product: {
        std::vector<GradedPoset> factors;
        factors.reserve(spec.factors.size());
        for (auto f : spec.factors) {
            // Factors must reach the product's truncation rank.
            f.top_rank = std::max(f.top_rank, spec.top_rank);
            factors.push_back(build_family(f));
        }
        return build_product(factors, spec.top_rank);
    }
    }
    throw std::logic_error("build_family: unknown family");
}

} // namespace diffposet
