#include "diffposet/hasse_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace diffposet {

namespace {

// "<rank>:<index>" with both parts nonnegative integers.
bool parse_ref(const std::string& token, int& rank, int& index)
{
    const auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
        return false;
    try {
        std::size_t used = 0;
        rank = std::stoi(token.substr(0, colon), &used);
        if (used != colon)
            return false;
        const std::string rest = token.substr(colon + 1);
        index = std::stoi(rest, &used);
        if (used != rest.size())
            return false;
    } catch (const std::exception&) {
        return false;
    }
    return rank >= 0 && index >= 0;
}

} // namespace

GradedPoset parse_hasse(std::istream& in)
{
    std::string line;
    int lineno = 0;

    std::vector<int> sizes;
    std::optional<int> declared_r;
    std::vector<std::vector<GradedPoset::Edge>> edges;
    std::vector<std::vector<std::string>> labels;
    std::size_t labels_seen = 0;
    bool have_header = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            // Optional label comment: "# label <n>:<i> <text>"
            std::istringstream ls(line.substr(1));
            std::string word;
            if (ls >> word && word == "label") {
                std::string ref, text;
                int n = 0, i = 0;
                if (ls >> ref && parse_ref(ref, n, i)) {
                    std::getline(ls, text);
                    if (!text.empty() && text.front() == ' ')
                        text.erase(text.begin());
                    if (have_header && n < static_cast<int>(sizes.size()) &&
                        i < sizes[static_cast<std::size_t>(n)] && !text.empty()) {
                        auto& slot = labels[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
                        if (slot.empty())
                            ++labels_seen;
                        slot = text;
                    }
                }
            }
            continue;
        }

        std::istringstream ss(line);
        std::string head;
        ss >> head;
        if (head == "rank_sizes:") {
            if (have_header)
                throw ParseError(lineno, "duplicate rank_sizes header");
            int p = 0;
            while (ss >> p) {
                if (p <= 0)
                    throw ParseError(lineno, "rank sizes must be positive");
                sizes.push_back(p);
            }
            if (!ss.eof())
                throw ParseError(lineno, "malformed rank_sizes header");
            if (sizes.empty())
                throw ParseError(lineno, "rank_sizes header lists no ranks");
            if (sizes.front() != 1)
                throw ParseError(lineno, "rank 0 must hold exactly the minimum element");
            have_header = true;
            edges.resize(sizes.size() - 1);
            labels.resize(sizes.size());
            for (std::size_t n = 0; n < sizes.size(); ++n)
                labels[n].resize(static_cast<std::size_t>(sizes[n]));
        } else if (head == "r:") {
            if (!have_header)
                throw ParseError(lineno, "r line before rank_sizes header");
            int r = 0;
            if (!(ss >> r) || r <= 0)
                throw ParseError(lineno, "r must be a positive integer");
            std::string extra;
            if (ss >> extra)
                throw ParseError(lineno, "trailing tokens after r");
            declared_r = r;
        } else if (head == "edge") {
            if (!have_header)
                throw ParseError(lineno, "edge line before rank_sizes header");
            std::string from, to, extra;
            if (!(ss >> from >> to))
                throw ParseError(lineno, "edge needs two <rank>:<index> references");
            if (ss >> extra)
                throw ParseError(lineno, "trailing tokens after edge");
            int n1 = 0, i = 0, n2 = 0, j = 0;
            if (!parse_ref(from, n1, i) || !parse_ref(to, n2, j))
                throw ParseError(lineno, "malformed <rank>:<index> reference");
            if (n2 != n1 + 1)
                throw ParseError(lineno, "edge must join consecutive ranks");
            if (n1 + 1 >= static_cast<int>(sizes.size()))
                throw ParseError(lineno, "edge rank exceeds declared top rank");
            if (i >= sizes[static_cast<std::size_t>(n1)] ||
                j >= sizes[static_cast<std::size_t>(n2)])
                throw ParseError(lineno, "edge index exceeds declared rank size");
            auto& level = edges[static_cast<std::size_t>(n1)];
            const GradedPoset::Edge e{i, j};
            for (const auto& seen : level)
                if (seen == e)
                    throw ParseError(lineno, "duplicate edge");
            level.push_back(e);
        } else {
            throw ParseError(lineno, "unrecognized directive '" + head + "'");
        }
    }

    if (!have_header)
        throw ParseError(lineno, "missing rank_sizes header");

    std::size_t label_slots = 0;
    for (int p : sizes)
        label_slots += static_cast<std::size_t>(p);
    if (labels_seen != label_slots)
        labels.clear(); // incomplete labels are dropped

    try {
        return GradedPoset(std::move(sizes), std::move(edges), declared_r, std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

GradedPoset parse_hasse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_hasse(in);
}

void write_hasse(std::ostream& out, const GradedPoset& poset)
{
    out << "# diffposet-hasse v1\n";
    out << "rank_sizes:";
    for (int p : poset.rank_sizes())
        out << ' ' << p;
    out << '\n';
    if (poset.declared_r())
        out << "r: " << *poset.declared_r() << '\n';
    if (poset.has_labels())
        for (int n = 0; n <= poset.top_rank(); ++n)
            for (int i = 0; i < poset.rank_size(n); ++i)
                out << "# label " << n << ':' << i << ' ' << poset.label(n, i) << '\n';
    for (int n = 0; n < poset.top_rank(); ++n)
        for (const auto& [i, j] : poset.edges(n))
            out << "edge " << n << ':' << i << ' ' << n + 1 << ':' << j << '\n';
}

void write_hasse_file(const std::string& path, const GradedPoset& poset)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    write_hasse(out, poset);
    if (!out.flush())
        throw std::runtime_error("failed writing " + path);
}

} // namespace diffposet
