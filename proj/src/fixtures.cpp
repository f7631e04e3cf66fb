#include "clawreconf/fixtures.hpp"

#include <algorithm>
#include <string>

#include "clawreconf/errors.hpp"
#include "fixture_texts.hpp"

namespace clawreconf {

const std::vector<std::string_view>& fixture_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& [name, text] : detail::kFixtureTexts) out.push_back(name);
        return out;
    }();
    return names;
}

std::string_view fixture_text(std::string_view name) {
    for (const auto& [key, text] : detail::kFixtureTexts) {
        if (key == name) return text;
    }
    throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

Graph fixture(std::string_view name) { return parse_graph(fixture_text(name)); }

VertexSet vertices_by_label(const Graph& g, std::initializer_list<std::string_view> labels) {
    VertexSet out;
    for (std::string_view label : labels) {
        const auto v = g.find_label(label);
        if (!v) throw PreconditionError("unknown label '" + std::string(label) + "'");
        out.push_back(*v);
    }
    return normalized(std::move(out));
}

}  // namespace clawreconf
