#include "rsat/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace rsat {

namespace {

PatternGraph complete(int k)
{
    std::vector<VertexPair> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            es.emplace_back(u, v);
    return PatternGraph(k, std::move(es));
}

PatternGraph path(int k)
{
    std::vector<VertexPair> es;
    for (int v = 0; v + 1 < k; ++v)
        es.emplace_back(v, v + 1);
    return PatternGraph(k, std::move(es));
}

PatternGraph cycle(int k)
{
    std::vector<VertexPair> es;
    for (int v = 0; v + 1 < k; ++v)
        es.emplace_back(v, v + 1);
    es.emplace_back(0, k - 1);
    return PatternGraph(k, std::move(es));
}

} // namespace

std::optional<PatternGraph> named_pattern(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });

    if (s.size() == 2 && (s[0] == 'k' || s[0] == 'p' || s[0] == 'c') && std::isdigit(static_cast<unsigned char>(s[1]))) {
        int k = s[1] - '0';
        if (s[0] == 'k' && k >= 2 && k <= 6)
            return complete(k);
        if (s[0] == 'p' && k >= 2 && k <= 6)
            return path(k);
        if (s[0] == 'c' && k >= 3 && k <= 8)
            return cycle(k);
    }
    if (s == "triangle")
        return complete(3);
    if (s == "paw") // triangle 0-1-2 plus pendant vertex 3 attached to 2
        return PatternGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    if (s == "diamond") // K4 minus the edge 2-3
        return PatternGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (s == "book2" || s == "b2") // pages 2 and 3 over the spine 0-1
        return PatternGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (s == "wheel4" || s == "w4") // hub 0, rim cycle 1-2-3-4
        return PatternGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
    return std::nullopt;
}

std::vector<std::string> named_pattern_names()
{
    std::vector<std::string> names;
    for (int k = 2; k <= 6; ++k)
        names.push_back("k" + std::to_string(k));
    for (int k = 2; k <= 6; ++k)
        names.push_back("p" + std::to_string(k));
    for (int k = 3; k <= 8; ++k)
        names.push_back("c" + std::to_string(k));
    names.insert(names.end(), {"triangle", "paw", "diamond", "book2", "wheel4"});
    return names;
}

} // namespace rsat
