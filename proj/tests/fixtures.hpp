// Small hand-built instances shared by the unit tests. Vertex 0 is always s;
// the comment on each builder gives the rest of the layout.

#pragma once

#include "tracking/graph.hpp"

#include <initializer_list>

namespace fixtures {

using tracking::Graph;
using tracking::Instance;
using tracking::VertexId;

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

inline Instance instance_of(std::size_t n, VertexId s, VertexId t,
                            std::initializer_list<std::pair<VertexId, VertexId>> edges, long long k = 0) {
  return Instance{graph_of(n, edges), s, t, k};
}

// s=0, a=1, t=2, b=3: the cycle s-a-t-b-s.
inline Instance c4(long long k = 0) { return instance_of(4, 0, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, k); }

// C4 plus the chord (a,b).
inline Instance c4_chord(long long k = 0) {
  return instance_of(4, 0, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}, k);
}

// s=0, a=1, b=2, c=3, t=4.
inline Instance path5(long long k = 0) { return instance_of(5, 0, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, k); }

// s=0, a=1, b=2, t=3.
inline Instance path4(long long k = 0) { return instance_of(4, 0, 3, {{0, 1}, {1, 2}, {2, 3}}, k); }

inline Instance single_edge(long long k = 0) { return instance_of(2, 0, 1, {{0, 1}}, k); }

// s=0, t=1, b=2 with edges s-t, s-b, b-t.
inline Instance triangle(long long k = 0) { return instance_of(3, 0, 1, {{0, 1}, {0, 2}, {2, 1}}, k); }

// Theta graph with three length-2 paths (middles 2,3,4) and a pendant
// vertex 5 hanging off middle vertex 2.
inline Instance theta3_pendant(long long k = 0) {
  return instance_of(6, 0, 1, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {2, 5}}, k);
}

// Complete graph on {s=0, t=1, 2, 3}.
inline Instance k4(long long k = 0) {
  return instance_of(4, 0, 1, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, k);
}

// Two vertex-disjoint triangles {0,1,2} and {3,4,5}.
inline Graph two_triangles() { return graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

// The cycle 0-1-2-3-4-0.
inline Graph c5() { return graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

// Two triangles {2,3,4} and {5,6,7} hung on the s-t path 0-2-5-1 through
// the vertices 2 and 5.
inline Instance triangles_on_path(long long k = 0) {
  return instance_of(8, 0, 1, {{0, 2}, {2, 5}, {5, 1}, {2, 3}, {3, 4}, {4, 2}, {5, 6}, {6, 7}, {7, 5}}, k);
}

// t=1 - s=0 - c=2, plus the cycle c-a-x-b-c with a=3, x=4, b=5. Everything
// past c is reachable from s and t only through c.
inline Instance pendant_cycle() {
  return instance_of(6, 0, 1, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
}

} // namespace fixtures
