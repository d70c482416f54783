#ifndef LLL_LATTICE_HPP
#define LLL_LATTICE_HPP

#include <string>
#include <vector>

#include "lll/graphs.hpp"

namespace lll {

using Point = std::vector<int>;

// A finite graph with an integer-lattice embedding. `class_modulus` says which translations
// are symmetries of the ambient lattice: t is one iff sum(t) is divisible by it.
struct LatticeUnit {
    std::string name;
    DependencyGraph graph;
    std::vector<Point> position;  // position[v-1]
    int class_modulus = 1;
    std::vector<Point> shifts;    // translation vectors used to tile the lattice
    int lattice_degree = 0;       // max degree of the infinite lattice
};

struct ExpandedLattice {
    DependencyGraph graph;
    std::vector<Point> position;
};

// Copies of the unit at every offset sum_a k_a * shifts[a] with 0 <= k_a < repetitions[a], merged by
// position. Two vertices are joined when some copy joins them, or when their displacement is a bond
// vector of the unit at a site of the same class (this supplies the bonds between adjacent copies).
// Throws if two copies disagree about an edge between shared positions.
ExpandedLattice expand_translational_unit(const DependencyGraph& unit, const std::vector<Point>& embedding,
                                          const std::vector<Point>& shifts, const std::vector<int>& repetitions,
                                          int class_modulus = 1);

LatticeUnit square_unit(int side = 5);
LatticeUnit cubic_unit(int side = 3);
// 19 hexagons in rows of 3,4,5,4,3 on the brick-wall embedding of the honeycomb.
LatticeUnit hexagonal_unit();
LatticeUnit builtin_lattice(const std::string& name);  // "square", "hexagonal", "cubic"

}  // namespace lll

#endif
