#include "lll/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lll {

namespace {

int site_class(const Point& p, int modulus)
{
    long s = 0;
    for (int c : p) s += c;
    return static_cast<int>(((s % modulus) + modulus) % modulus);
}

Point add(const Point& a, const Point& b)
{
    Point r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Point sub(const Point& a, const Point& b)
{
    Point r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

// Builds a unit from positions and edges given by position pairs; vertices are numbered in sorted position order.
LatticeUnit make_unit(std::string name, std::set<Point> points, const std::set<std::pair<Point, Point>>& bonds)
{
    LatticeUnit u;
    u.name = std::move(name);
    std::map<Point, int> id;
    for (const auto& p : points) {
        u.position.push_back(p);
        id[p] = static_cast<int>(u.position.size());
    }
    std::set<Edge> es;
    for (const auto& [a, b] : bonds) es.insert(make_edge(id.at(a), id.at(b)));
    u.graph = DependencyGraph(static_cast<int>(points.size()), std::vector<Edge>(es.begin(), es.end()));
    return u;
}

}  // namespace

ExpandedLattice expand_translational_unit(const DependencyGraph& unit, const std::vector<Point>& embedding,
                                          const std::vector<Point>& shifts, const std::vector<int>& repetitions,
                                          int class_modulus)
{
    if (static_cast<int>(embedding.size()) != unit.size())
        throw std::invalid_argument("embedding size does not match unit");
    if (shifts.size() != repetitions.size()) throw std::invalid_argument("one repetition count per shift vector");
    if (class_modulus < 1) throw std::invalid_argument("class modulus must be positive");
    std::size_t dim = embedding.empty() ? 0 : embedding[0].size();
    std::set<Point> unit_points;
    for (const auto& p : embedding) {
        if (p.size() != dim) throw std::invalid_argument("embedding dimensions differ");
        if (!unit_points.insert(p).second) throw std::invalid_argument("two unit vertices share a position");
    }
    for (const auto& s : shifts)
        if (s.size() != dim) throw std::invalid_argument("shift dimension mismatch");
    for (int r : repetitions)
        if (r < 1) throw std::invalid_argument("repetitions must be positive");

    std::vector<Point> offsets{Point(dim, 0)};
    for (std::size_t a = 0; a < shifts.size(); ++a) {
        std::vector<Point> next;
        for (const auto& o : offsets)
            for (int k = 0; k < repetitions[a]; ++k) {
                Point t(o);
                for (std::size_t c = 0; c < dim; ++c) t[c] += k * shifts[a][c];
                next.push_back(t);
            }
        offsets.swap(next);
    }

    std::set<Point> points;
    std::set<std::pair<Point, Point>> bonds;
    for (const auto& o : offsets) {
        for (const auto& p : embedding) points.insert(add(p, o));
        for (auto [u, v] : unit.edges()) {
            Point a = add(embedding[u - 1], o), b = add(embedding[v - 1], o);
            bonds.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
        }
    }

    std::set<std::pair<int, Point>> bond_types;
    for (auto [u, v] : unit.edges()) {
        const Point &a = embedding[u - 1], &b = embedding[v - 1];
        bond_types.insert({site_class(a, class_modulus), sub(b, a)});
        bond_types.insert({site_class(b, class_modulus), sub(a, b)});
    }
    for (const auto& a : points)
        for (const auto& [cls, d] : bond_types) {
            if (cls != site_class(a, class_modulus)) continue;
            Point b = add(a, d);
            if (points.count(b)) bonds.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
        }

    std::map<Point, int> unit_id;
    for (std::size_t k = 0; k < embedding.size(); ++k) unit_id[embedding[k]] = static_cast<int>(k) + 1;
    for (const auto& o : offsets)
        for (const auto& [a, b] : bonds) {
            auto ia = unit_id.find(sub(a, o)), ib = unit_id.find(sub(b, o));
            if (ia == unit_id.end() || ib == unit_id.end()) continue;
            if (!unit.adjacent(ia->second, ib->second))
                throw std::invalid_argument("overlapping copies disagree about an edge");
        }

    ExpandedLattice out;
    std::map<Point, int> id;
    for (const auto& p : points) {
        out.position.push_back(p);
        id[p] = static_cast<int>(out.position.size());
    }
    std::vector<Edge> es;
    for (const auto& [a, b] : bonds) es.push_back(make_edge(id[a], id[b]));
    out.graph = DependencyGraph(static_cast<int>(points.size()), es);
    return out;
}

LatticeUnit square_unit(int side)
{
    std::set<Point> pts;
    std::set<std::pair<Point, Point>> bonds;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) {
            pts.insert({x, y});
            if (x + 1 < side) bonds.insert({{x, y}, {x + 1, y}});
            if (y + 1 < side) bonds.insert({{x, y}, {x, y + 1}});
        }
    auto u = make_unit("square", pts, bonds);
    u.shifts = {{side, 0}, {0, side}};
    u.lattice_degree = 4;
    return u;
}

LatticeUnit cubic_unit(int side)
{
    std::set<Point> pts;
    std::set<std::pair<Point, Point>> bonds;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            for (int z = 0; z < side; ++z) {
                pts.insert({x, y, z});
                if (x + 1 < side) bonds.insert({{x, y, z}, {x + 1, y, z}});
                if (y + 1 < side) bonds.insert({{x, y, z}, {x, y + 1, z}});
                if (z + 1 < side) bonds.insert({{x, y, z}, {x, y, z + 1}});
            }
    auto u = make_unit("cubic", pts, bonds);
    u.shifts = {{side, 0, 0}, {0, side, 0}, {0, 0, side}};
    u.lattice_degree = 6;
    return u;
}

LatticeUnit hexagonal_unit()
{
    // A hexagon is a 2x1 brick with lower-left corner (x, y), x + y even.
    const std::vector<std::vector<int>> rows = {{2, 4, 6}, {1, 3, 5, 7}, {0, 2, 4, 6, 8}, {1, 3, 5, 7}, {2, 4, 6}};
    std::set<Point> pts;
    std::set<std::pair<Point, Point>> bonds;
    for (int y = 0; y < static_cast<int>(rows.size()); ++y)
        for (int x : rows[y]) {
            for (int yy : {y, y + 1}) {
                for (int dx = 0; dx <= 2; ++dx) pts.insert({x + dx, yy});
                bonds.insert({{x, yy}, {x + 1, yy}});
                bonds.insert({{x + 1, yy}, {x + 2, yy}});
            }
            bonds.insert({{x, y}, {x, y + 1}});
            bonds.insert({{x + 2, y}, {x + 2, y + 1}});
        }
    auto u = make_unit("hexagonal", pts, bonds);
    u.class_modulus = 2;
    u.shifts = {{8, 0}, {4, 4}};
    u.lattice_degree = 3;
    return u;
}

LatticeUnit builtin_lattice(const std::string& name)
{
    if (name == "square") return square_unit();
    if (name == "hexagonal") return hexagonal_unit();
    if (name == "cubic") return cubic_unit();
    throw std::invalid_argument("unknown lattice '" + name + "' (square, hexagonal, cubic)");
}

}  // namespace lll
