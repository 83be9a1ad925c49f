#pragma once

#include "perfmat/graph.hpp"

namespace perfmat::families {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();

}  // namespace perfmat::families
