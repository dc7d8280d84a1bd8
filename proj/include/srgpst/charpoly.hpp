#pragma once
// Exact characteristic polynomials and vertex-deleted variants via
// fraction-free (Bareiss) determinants evaluated at integer nodes followed by
// exact interpolation. All results are monic integer polynomials represented
// over the rationals.

#include <gmpxx.h>
#include <vector>

#include "srgpst/graph.hpp"
#include "srgpst/polynomial.hpp"

namespace srgpst {

// Determinant of an integer matrix, exact, O(n^3) with polynomially bounded
// intermediates (Bareiss).
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

// det(tI - M) for an integer square matrix M.
RatPoly charpoly(const std::vector<std::vector<mpz_class>>& m);
// det(tI - M) for a rational square matrix M (used as the perturbed-matrix
// oracle: scale to integers, interpolate, undo the scaling).
RatPoly charpoly_rational(const std::vector<std::vector<mpq_class>>& m);
// det(tI - A) of a graph.
RatPoly charpoly(const LabeledGraph& g);

// The characteristic-polynomial family at an ordered vertex pair (u, v):
//   phi       det(tI - A)
//   phi_u     the same with u deleted; phi_v with v deleted
//   phi_uv    the signed (u, v) cofactor of tI - A, equal to
//             phi * ((tI - A)^{-1})_{uv}; a polynomial of degree <= n-2
//   phi_pair  both u and v deleted
// They satisfy phi_uv^2 = phi_u*phi_v - phi*phi_pair identically.
struct PhiFamily {
    RatPoly phi, phi_u, phi_v, phi_uv, phi_pair;
};
PhiFamily phi_polys(const LabeledGraph& g, int u, int v);

// A graph is 1-walk-regular when A^l has constant diagonal and is constant
// over edges, for every power l up to n. Vertex-transitive graphs need not
// qualify (the triangular prism fails at l = 2).
bool is_one_walk_regular(const LabeledGraph& g);

}  // namespace srgpst
