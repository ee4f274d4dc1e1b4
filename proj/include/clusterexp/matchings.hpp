#ifndef CLUSTEREXP_MATCHINGS_HPP
#define CLUSTEREXP_MATCHINGS_HPP

#include <vector>

#include "clusterexp/laurent.hpp"
#include "clusterexp/quiver.hpp"

namespace clusterexp {

// A perfect matching of angles: one angle per triangle, one per marked
// vertex. Kept sorted by (triangle, vertex).
using AngleMatching = std::vector<Angle>;

// A maximal discrete subset: arrow ids of an ice quiver, sorted.
using DiscreteSubset = std::vector<int>;

// All subsets of A(T) with exactly one angle per triangle index and one per
// vertex index, in lexicographic order.
std::vector<AngleMatching> enumerate_angle_matchings(const Triangulation& T);

// f^[i,j] as the sum over angle matchings of T^[i,j] of the product of the
// opposite arcs' variables.
LaurentPoly angle_formula(const Triangulation& T, int i, int j);

enum class DiscreteMethod { BRUTE_FORCE, VIA_RHO };

// Maximal subsets D of the arrows of Q such that no directed path of length
// >= 0 in the non-frozen subquiver leads from the target of one member to
// the source of another. BRUTE_FORCE scans all arrow subsets (SIZE_LIMIT
// above 22 arrows); VIA_RHO maps every angle matching of T through rho.
// Both return the same families, sorted.
std::vector<DiscreteSubset> enumerate_discrete_subsets(const Triangulation& T,
                                                       const IceQuiver& Q,
                                                       DiscreteMethod method);

// Image of one angle matching under rho, verified to be a maximal discrete
// subset (VERIFICATION_FAILED otherwise: that would falsify the bijection).
DiscreteSubset rho_image(const Triangulation& T, const AngleMatching& A);

// f^[i,j] as the sum over maximal discrete subsets of the ice quiver of
// T^[i,j] of the product of the third-arc variables.
LaurentPoly discrete_formula(const Triangulation& T, int i, int j);

}  // namespace clusterexp

#endif
