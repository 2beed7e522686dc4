#include "hurwitz/young_trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace hurwitz {

namespace {

std::string to_text(const Box& b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

void require_order(const Partition& lambda, int r)
{
    if (r < 1 || r > lambda.size())
        throw DomainError("tree order " + std::to_string(r) + " outside 1.." + std::to_string(lambda.size()));
}

/// Sizes of the collinear groups: tree boxes per row, then per column.
std::vector<int> line_counts(const YoungTree& tree)
{
    std::map<int, int> rows, cols;
    for (const Box& b : tree.graph.boxes) {
        ++rows[b.row];
        ++cols[b.col];
    }
    std::vector<int> out;
    for (auto [_, n] : rows)
        out.push_back(n);
    for (auto [_, n] : cols)
        out.push_back(n);
    return out;
}

}  // namespace

void require_inside(const Partition& lambda, const Box& box)
{
    if (box.row < 1 || box.col < 1 || box.row > lambda.length() ||
        box.col > lambda[static_cast<std::size_t>(box.row - 1)]) {
        throw DomainError("box " + to_text(box) + " lies outside diagram (" + format(lambda) + ")");
    }
}

bool BoxGraph::is_tree() const
{
    const auto n = boxes.size();
    if (n == 0 || edges.size() != n - 1)
        return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (auto [a, b] : edges) {
        auto ra = find(static_cast<std::size_t>(a));
        auto rb = find(static_cast<std::size_t>(b));
        if (ra == rb)
            return false;
        parent[ra] = rb;
        --components;
    }
    return components == 1;
}

BoxGraph induced_graph(const Partition& lambda, std::vector<Box> boxes)
{
    for (const Box& b : boxes)
        require_inside(lambda, b);
    std::sort(boxes.begin(), boxes.end());
    if (std::adjacent_find(boxes.begin(), boxes.end()) != boxes.end())
        throw DomainError("duplicate box in tree candidate");

    BoxGraph g{std::move(boxes), {}};
    std::map<int, std::vector<int>> by_row, by_col;
    for (int i = 0; i < static_cast<int>(g.boxes.size()); ++i) {
        by_row[g.boxes[static_cast<std::size_t>(i)].row].push_back(i);
        by_col[g.boxes[static_cast<std::size_t>(i)].col].push_back(i);
    }
    // Row-major order keeps each row group sorted by column and each column
    // group sorted by row, so neighbours in a group have nothing between them.
    for (const auto* groups : {&by_row, &by_col}) {
        for (const auto& [_, members] : *groups) {
            for (std::size_t t = 1; t < members.size(); ++t)
                g.edges.emplace_back(members[t - 1], members[t]);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<YoungTree> enumerate_trees(const Partition& lambda, int r)
{
    require_order(lambda, r);
    std::vector<Box> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            cells.push_back({i + 1, j + 1});

    std::vector<YoungTree> trees;
    const auto n = static_cast<int>(cells.size());
    std::vector<int> pick(static_cast<std::size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<Box> subset;
        subset.reserve(pick.size());
        for (int idx : pick)
            subset.push_back(cells[static_cast<std::size_t>(idx)]);
        BoxGraph g = induced_graph(lambda, std::move(subset));
        if (g.is_tree())
            trees.push_back(YoungTree{std::move(g)});

        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return trees;
}

int vert(const YoungTree& tree)
{
    const auto& boxes = tree.graph.boxes;
    return static_cast<int>(std::count_if(tree.graph.edges.begin(), tree.graph.edges.end(), [&](auto e) {
        return boxes[static_cast<std::size_t>(e.first)].col == boxes[static_cast<std::size_t>(e.second)].col;
    }));
}

Integer weight(const YoungTree& tree)
{
    // all tree boxes of one row (or column) form a single maximal path
    Integer w = 1;
    for (int n : line_counts(tree))
        if (n > 1)
            w *= factorial(static_cast<unsigned>(n - 1));
    return w;
}

Integer f_via_trees(const Partition& lambda, int r)
{
    Integer total = 0;
    for (const YoungTree& t : enumerate_trees(lambda, r)) {
        if (vert(t) % 2)
            total -= weight(t);
        else
            total += weight(t);
    }
    return total;
}

Integer frobenius_f(int r, const Partition& lambda)
{
    if (r < 2 || r > 4)
        throw DomainError("closed form available only for r = 2, 3, 4; got r = " + std::to_string(r));
    const int d = lambda.size();
    if (d < r)
        throw DomainError("frobenius_f needs |lambda| >= r");

    Partition lc = conjugate(lambda);
    Integer sum = 0;
    for (int i = 1; i <= lambda.length() && lambda[static_cast<std::size_t>(i - 1)] >= i; ++i) {
        Integer b = lambda[static_cast<std::size_t>(i - 1)] - i;
        Integer a = lc[static_cast<std::size_t>(i - 1)] - i;
        Integer bb = b * (b + 1);
        Integer aa = a * (a + 1);
        switch (r) {
        case 2:
            sum += bb - aa;
            break;
        case 3:
            sum += bb * (2 * b + 1) + aa * (2 * a + 1);
            break;
        default:
            sum += bb * bb - aa * aa - (4 * d - 6) * (bb - aa);
            break;
        }
    }

    Rational value;
    switch (r) {
    case 2:
        value = make_rational(sum, 2);
        break;
    case 3:
        value = make_rational(sum, 6) - make_rational(Integer(d) * (d - 1), 2);
        break;
    default:
        value = make_rational(sum, 4);
        break;
    }
    if (!is_integral(value))
        throw InternalError("closed form for r=" + std::to_string(r) + " not integral at (" + format(lambda) + ")");
    return value.get_num();
}

Partition straightened_shape(const Partition& lambda)
{
    if (lambda.empty())
        return Partition();
    return Partition::cycle_class(lambda.size() + 1 - lambda.length(), lambda.size());
}

Box straighten(const Partition& lambda, const Box& box)
{
    require_inside(lambda, box);
    if (box.row == 1 || box.col == 1)
        return box;
    int above = 0;
    for (int k = 1; k < box.row; ++k)
        above += lambda[static_cast<std::size_t>(k - 1)];
    // first row holds sum_{k<i} lambda_k - (i - 2) boxes when row i is reached
    return Box{1, above - box.row + box.col + 1};
}

Integer count_straight_trees(const Partition& lambda, int r)
{
    require_order(lambda, r);
    if (r == 1)
        return lambda.size();
    Integer total = 0;
    for (int p : lambda.parts())
        total += binomial(p, r);
    const Partition columns = conjugate(lambda);
    for (int p : columns.parts())
        total += binomial(p, r);
    return total;
}

bool is_straight(const YoungTree& tree)
{
    const auto& boxes = tree.graph.boxes;
    if (boxes.empty())
        return true;
    bool one_row = std::all_of(boxes.begin(), boxes.end(), [&](const Box& b) { return b.row == boxes[0].row; });
    bool one_col = std::all_of(boxes.begin(), boxes.end(), [&](const Box& b) { return b.col == boxes[0].col; });
    return one_row || one_col;
}

}  // namespace hurwitz
