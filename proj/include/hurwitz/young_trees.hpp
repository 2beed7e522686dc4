#pragma once

#include "hurwitz/numeric.hpp"
#include "hurwitz/partition.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace hurwitz {

/// A cell of a Young diagram, 1-indexed: row i, column j.
struct Box {
    int row = 1;
    int col = 1;

    auto operator<=>(const Box&) const = default;
};

/// Throws DomainError unless the box lies inside lambda.
void require_inside(const Partition& lambda, const Box& box);

/// Boxes plus the row/column adjacency between them: two boxes are joined
/// when they share a row or a column and no other box of the set lies
/// strictly between them.
struct BoxGraph {
    std::vector<Box> boxes;                       // row-major order
    std::vector<std::pair<int, int>> edges;       // indices into boxes, first < second

    bool is_tree() const;
};

/// A set of r boxes whose induced graph is connected and acyclic.
struct YoungTree {
    BoxGraph graph;

    int order() const { return static_cast<int>(graph.boxes.size()); }
    bool operator==(const YoungTree& other) const { return graph.boxes == other.graph.boxes; }
};

/// Induced adjacency graph on `boxes`, which must be distinct and inside lambda.
BoxGraph induced_graph(const Partition& lambda, std::vector<Box> boxes);

/// Every Young tree of order r in lambda, ordered lexicographically by the
/// row-major box list. Filters all r-subsets of the diagram.
std::vector<YoungTree> enumerate_trees(const Partition& lambda, int r);

/// Number of edges joining two boxes of the same column.
int vert(const YoungTree& tree);

/// prod over maximal simple (collinear) paths p of l(p)!, where l(p) counts edges.
Integer weight(const YoungTree& tree);

/// sum over Young trees of order r of (-1)^vert * weight; equals the central
/// character f_{(r,1^{d-r})}(lambda) for r >= 2. For r = 1 it is d.
Integer f_via_trees(const Partition& lambda, int r);

/// Closed forms of f_{(r,1^{d-r})}(lambda) for r = 2, 3, 4 in terms of the
/// Frobenius coordinates a_i = lambda'_i - i, b_i = lambda_i - i along the diagonal.
Integer frobenius_f(int r, const Partition& lambda);

/// Image of a box under the map that slides every box of row i >= 2, column
/// j >= 2 to the right end of the first row, row by row. The image lies in
/// the hook (d + 1 - l(lambda), 1^{l(lambda) - 1}).
Box straighten(const Partition& lambda, const Box& box);

/// The hook diagram (d + 1 - l(lambda), 1^{l(lambda) - 1}) that straighten maps into.
Partition straightened_shape(const Partition& lambda);

/// Young trees lying in a single row or column: sum_i C(lambda_i, r) + sum_i C(lambda'_i, r)
/// for r >= 2; |lambda| for r = 1.
Integer count_straight_trees(const Partition& lambda, int r);

bool is_straight(const YoungTree& tree);

}  // namespace hurwitz
