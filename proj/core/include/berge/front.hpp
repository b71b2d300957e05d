#pragma once

#include <vector>

#include "berge/rational.hpp"
#include "berge/residue.hpp"

namespace berge::front {

/// Combinatorial data of a toroidal front projection in L(p, q):
/// writhe, cusp counts, and the intersection numbers a = <alpha, f(L)>,
/// b = <f(L), beta>.
struct FrontData {
    i64 w;
    i64 c_u;
    i64 c_d;
    i64 a;
    i64 b;
    i64 p;

    FrontData(i64 w_, i64 c_u_, i64 c_d_, i64 a_, i64 b_, i64 p_);
};

/// tb = w - (c_u + c_d)/2 + ab/p, exact.
Rational tb(const FrontData& fd);

/// rot = (c_d - c_u)/2 + (a + b)/p, exact.
Rational rot(const FrontData& fd);

/// Self-linking of the positive transverse pushoff:
/// w - c_d + (ab - a - b)/p. Coded independently of tb and rot; equals
/// tb - rot identically.
Rational sl_push(const FrontData& fd);

/// Self-linking of the negative pushoff: tb + rot.
Rational sl_push_negative(const FrontData& fd);

/// True when b == a*q (mod p); holds for every closed front.
bool class_congruence_holds(const FrontData& fd, i64 q);

/// Grid-number-one front on the p-column discretization of the Heegaard
/// torus. The beta-parallel arc enters column start_column and advances by
/// q columns per wrap; the alpha-parallel connector joins its endpoints.
/// sign_a / sign_b record the orientation (signs of a and b).
struct GridOneFront {
    i64 p;
    i64 q;
    i64 wraps;
    i64 start_column;
    int sign_a;
    int sign_b;

    GridOneFront(i64 p_, i64 q_, i64 wraps_, i64 start_column_, int sign_a_, int sign_b_);
};

/// Columns [ (start + j*q) mod p : j = 0..wraps-1 ]. Pairwise distinct
/// since gcd(p, q) = 1 and wraps <= p.
std::vector<i64> gn1_strand_columns(const GridOneFront& gf);

/// Connector travel direction along the torus: +1 toward increasing
/// columns, -1 toward decreasing.
enum class ConnectorDir : int { Right = +1, Left = -1 };

/// Signed count of transverse crossings between the connector's interior
/// and the full-height strand columns. All crossings share one sign for a
/// fixed orientation pair; (+,+) crossings count +1.
i64 gn1_writhe(const GridOneFront& gf, ConnectorDir dir);

/// Signed beta-intersection number of the connector for the given route.
i64 gn1_beta_count(const GridOneFront& gf, ConnectorDir dir);

/// FrontData assembled from the grid geometry: a = sign_a * wraps,
/// b from the route, w from gn1_writhe, cusps from the orientation table
/// ((+,+) -> two upward cusps, (-,-) -> two downward, mixed -> none).
FrontData front_from_grid(const GridOneFront& gf, ConnectorDir dir);

struct TorusDualFront {
    GridOneFront grid;
    FrontData data;
};

/// The dual of (ik+1)-surgery on the (i, k) torus knot: p = ik + 1,
/// q = (-i^2) mod p, k wraps, orientation (+,+), connector routed through
/// the guaranteed gap of i empty columns, so the front has writhe zero and
/// exactly two upward cusps.
TorusDualFront torus_dual_front(i64 i, i64 k);

} // namespace berge::front
