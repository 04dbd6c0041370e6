#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ftmd/decomposition.hpp"
#include "ftmd/graph.hpp"

namespace ftmd::families {

/// Vertices numbered along the walk.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,t}; the centre is vertex 0.
Graph star(int leaves);
/// Triangle {0,1,2} with pendant 3 attached to 2.
Graph paw();
/// Q_d on binary labels; u ~ v iff labels differ in one bit.
Graph hypercube(int dimension);
/// Two triangles sharing vertex 2.
Graph bowtie();

/// The five-piece worked example: K_4, K_3, paw, C_8, K_5 joined through
/// anchors a1..a4, with the C_8 anchors antipodal and the paw anchored at
/// its pendant vertex.
Decomposition figure2();

/// Generator dispatch used by the CLI. `family` is one of path, cycle,
/// complete, star, paw, hypercube, bowtie, figure2. Throws
/// IllegalParameter on unknown names, missing or out-of-range parameters.
std::variant<Graph, Decomposition> generate(const std::string& family,
                                            const std::vector<int>& params);

}  // namespace ftmd::families
