#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "clawreconf/graph.hpp"

namespace clawreconf {

/// Named test graphs: P3, P4, P5, C6, CLAW and FIG1. The texts are the files
/// under fixtures/graphs, compiled in.
const std::vector<std::string_view>& fixture_names();

/// Throws PreconditionError for an unknown name.
std::string_view fixture_text(std::string_view name);
Graph fixture(std::string_view name);

/// Sorted ids of the given labels. Throws PreconditionError on an unknown label.
VertexSet vertices_by_label(const Graph& g, std::initializer_list<std::string_view> labels);

}  // namespace clawreconf
