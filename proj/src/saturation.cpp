#include "rsat/saturation.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsat {

namespace {

void check_palette_covers(const ColouredGraph& g, const Palette& p)
{
    if (!p.is_bounded())
        return;
    auto used = used_colours(g);
    if (!used.empty() && used.back() >= *p.limit)
        throw Error("graph uses colour " + std::to_string(used.back())
            + " outside the bounded palette of size " + std::to_string(*p.limit));
}

bool colour_is_bad(const ColouredGraph& g, const PatternGraph& h, VertexPair e, Colour c)
{
    ColouredGraph ge = g.with_edge(e.first, e.second, c);
    SearchConstraint constraint;
    constraint.required_edge = e;
    return !find_rainbow_embedding(ge, h, constraint).has_value();
}

} // namespace

BadColourSet bad_colours(const ColouredGraph& g, const PatternGraph& h, VertexPair e, const Palette& p)
{
    e = ordered(e.first, e.second);
    if (g.has_edge(e.first, e.second))
        throw Error("(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is an edge, not a non-edge");
    check_palette_covers(g, p);

    BadColourSet out;
    if (p.is_bounded()) {
        for (Colour c = 0; c < *p.limit; ++c)
            if (colour_is_bad(g, h, e, c))
                out.colours.push_back(c);
        return out;
    }
    for (Colour c : used_colours(g))
        if (colour_is_bad(g, h, e, c))
            out.colours.push_back(c);
    out.fresh_bad = colour_is_bad(g, h, e, fresh_colour(g));
    return out;
}

std::optional<Colour> is_bad(const ColouredGraph& g, const PatternGraph& h, VertexPair e, const Palette& p)
{
    e = ordered(e.first, e.second);
    if (g.has_edge(e.first, e.second))
        throw Error("(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is an edge, not a non-edge");
    check_palette_covers(g, p);

    if (p.is_bounded()) {
        for (Colour c = 0; c < *p.limit; ++c)
            if (colour_is_bad(g, h, e, c))
                return c;
        return std::nullopt;
    }
    for (Colour c : used_colours(g))
        if (colour_is_bad(g, h, e, c))
            return c;
    if (Colour f = fresh_colour(g); colour_is_bad(g, h, e, f))
        return f;
    return std::nullopt;
}

SaturationReport saturation_report(const ColouredGraph& g, const PatternGraph& h, const Palette& p,
    const ReportOptions& opts)
{
    check_palette_covers(g, p);
    SaturationReport report;
    report.palette_too_small = p.is_bounded() && *p.limit < h.edge_count();
    report.rainbow_witness = find_rainbow_embedding(g, h);
    report.has_rainbow = report.rainbow_witness.has_value();

    const auto nonedges = g.non_edges();
    std::vector<BadColourSet> bad(nonedges.size());
    if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(nonedges.size()); ++i)
            bad[i] = bad_colours(g, h, nonedges[i], p);
    }
    else {
        for (size_t i = 0; i < nonedges.size(); ++i)
            bad[i] = bad_colours(g, h, nonedges[i], p);
    }
    for (size_t i = 0; i < nonedges.size(); ++i)
        if (!bad[i].empty())
            report.bad_nonedges.push_back({nonedges[i], std::move(bad[i])});
    report.is_saturated = !report.has_rainbow && report.bad_nonedges.empty();
    return report;
}

AbsorbResult absorb(const ColouredGraph& g, const PatternGraph& h, const Palette& p)
{
    check_palette_covers(g, p);
    if (find_rainbow_embedding(g, h).has_value())
        throw Error("absorb: input already contains a rainbow copy of the pattern");

    // The set of candidate non-edges is fixed up front; badness of each is
    // re-evaluated against the graph built so far.
    std::vector<VertexPair> initially_bad;
    {
        const auto nonedges = g.non_edges();
        std::vector<char> bad(nonedges.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(nonedges.size()); ++i)
            bad[i] = is_bad(g, h, nonedges[i], p).has_value();
        for (size_t i = 0; i < nonedges.size(); ++i)
            if (bad[i])
                initially_bad.push_back(nonedges[i]);
    }

    AbsorbResult result{g, {}};
    for (VertexPair e : initially_bad) {
        auto c = is_bad(result.graph, h, e, p);
        if (!c)
            continue;
        result.graph = result.graph.with_edge(e.first, e.second, *c);
        result.added.emplace_back(e, *c);
    }
    return result;
}

} // namespace rsat
