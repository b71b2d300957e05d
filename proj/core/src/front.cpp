#include "berge/front.hpp"

#include <unordered_set>

namespace berge::front {

FrontData::FrontData(i64 w_, i64 c_u_, i64 c_d_, i64 a_, i64 b_, i64 p_)
    : w(w_), c_u(c_u_), c_d(c_d_), a(a_), b(b_), p(p_) {
    if (p < 2) throw InvalidParameterError("FrontData: p must be >= 2");
    if (c_u < 0 || c_d < 0) throw InvalidParameterError("FrontData: negative cusp count");
    if ((c_u + c_d) % 2 != 0)
        throw InvalidParameterError("FrontData: cusps of a closed front pair up");
}

Rational tb(const FrontData& fd) {
    return Rational(fd.w) - Rational(checked_add(fd.c_u, fd.c_d), 2) +
           Rational(checked_mul(fd.a, fd.b), fd.p);
}

Rational rot(const FrontData& fd) {
    return Rational(checked_sub(fd.c_d, fd.c_u), 2) +
           Rational(checked_add(fd.a, fd.b), fd.p);
}

Rational sl_push(const FrontData& fd) {
    i64 num = checked_sub(checked_mul(fd.a, fd.b), checked_add(fd.a, fd.b));
    return Rational(checked_sub(fd.w, fd.c_d)) + Rational(num, fd.p);
}

Rational sl_push_negative(const FrontData& fd) {
    return tb(fd) + rot(fd);
}

bool class_congruence_holds(const FrontData& fd, i64 q) {
    return mod_floor(fd.b, fd.p) == mod_floor(checked_mul(fd.a, q), fd.p);
}

GridOneFront::GridOneFront(i64 p_, i64 q_, i64 wraps_, i64 start_column_, int sign_a_, int sign_b_)
    : p(p_), q(q_), wraps(wraps_), start_column(start_column_), sign_a(sign_a_), sign_b(sign_b_) {
    if (p < 2) throw InvalidParameterError("GridOneFront: p must be >= 2");
    if (q < 0 || q >= p || gcd_i64(p, q) != 1)
        throw InvalidParameterError("GridOneFront: q must lie in [0, p) with gcd(p, q) = 1");
    if (wraps < 1 || wraps > p)
        throw InvalidParameterError("GridOneFront: wraps must lie in [1, p]");
    if (start_column < 0 || start_column >= p)
        throw InvalidParameterError("GridOneFront: start column out of range");
    if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
        throw InvalidParameterError("GridOneFront: orientation signs must be +-1");
}

std::vector<i64> gn1_strand_columns(const GridOneFront& gf) {
    std::vector<i64> cols;
    cols.reserve(static_cast<std::size_t>(gf.wraps));
    i64 c = gf.start_column;
    for (i64 j = 0; j < gf.wraps; ++j) {
        cols.push_back(c);
        c = mod_floor(c + gf.q, gf.p);
    }
    return cols;
}

namespace {

// Terminal column of the beta-parallel arc: start + wraps*q.
i64 end_column(const GridOneFront& gf) {
    return mod_floor(checked_add(gf.start_column, checked_mul(gf.wraps, gf.q)), gf.p);
}

// Number of column steps the connector takes for the given route. The
// connector joins the arc endpoints; which endpoint it leaves from depends
// on the traversal orientation (sign_a).
i64 connector_span(const GridOneFront& gf, ConnectorDir dir) {
    i64 s = gf.start_column;
    i64 e = end_column(gf);
    i64 d = static_cast<i64>(dir);
    i64 from = gf.sign_a > 0 ? e : s;
    i64 to = gf.sign_a > 0 ? s : e;
    return mod_floor(checked_mul(d, checked_sub(to, from)), gf.p);
}

// Count of full-height strands inside the connector's interior.
i64 interior_crossings(const GridOneFront& gf, ConnectorDir dir) {
    i64 s = gf.start_column;
    i64 e = end_column(gf);
    i64 d = static_cast<i64>(dir);
    i64 from = gf.sign_a > 0 ? e : s;
    i64 span = connector_span(gf, dir);
    if (span == 0) return 0;

    i64 count = 0;
    i64 c = mod_floor(gf.start_column + gf.q, gf.p);
    for (i64 j = 1; j < gf.wraps; ++j) {
        i64 offset = mod_floor(checked_mul(d, checked_sub(c, from)), gf.p);
        if (offset >= 1 && offset <= span - 1) ++count;
        c = mod_floor(c + gf.q, gf.p);
    }
    return count;
}

} // namespace

i64 gn1_beta_count(const GridOneFront& gf, ConnectorDir dir) {
    i64 d = static_cast<i64>(dir);
    return checked_mul(-d, connector_span(gf, dir));
}

i64 gn1_writhe(const GridOneFront& gf, ConnectorDir dir) {
    i64 crossings = interior_crossings(gf, dir);
    // The route fixes the sign of b: a rightward connector crosses beta
    // negatively. Every crossing then carries sign(a) * sign(b).
    i64 route_sign_b = -static_cast<i64>(dir);
    return checked_mul(static_cast<i64>(gf.sign_a) * route_sign_b, crossings);
}

FrontData front_from_grid(const GridOneFront& gf, ConnectorDir dir) {
    i64 a = checked_mul(static_cast<i64>(gf.sign_a), gf.wraps);
    i64 b = gn1_beta_count(gf, dir);
    if (b != 0 && sign_of(b) != gf.sign_b)
        throw InvalidParameterError("front_from_grid: route direction contradicts sign of b");
    i64 w = gn1_writhe(gf, dir);
    i64 c_u = 0, c_d = 0;
    if (gf.sign_a > 0 && gf.sign_b > 0) {
        c_u = 2;
    } else if (gf.sign_a < 0 && gf.sign_b < 0) {
        c_d = 2;
    }
    FrontData fd(w, c_u, c_d, a, b, gf.p);
    // A closed front always satisfies b == a*q (mod p); if this fires the
    // column model itself is broken.
    if (!class_congruence_holds(fd, gf.q))
        throw InvalidParameterError("front_from_grid: closure congruence violated");
    return fd;
}

TorusDualFront torus_dual_front(i64 i, i64 k) {
    if (i < 2 || k < 2) throw InvalidParameterError("torus_dual_front: need i, k >= 2");
    if (gcd_i64(i, k) != 1) throw InvalidParameterError("torus_dual_front: i, k must be coprime");
    i64 p = checked_add(checked_mul(i, k), 1);
    i64 q = mod_floor(checked_neg(checked_mul(i, i)), p);
    GridOneFront gf(p, q, k, 0, +1, +1);
    // The endpoint lands i columns past the start and the i - 1 columns
    // between them are empty, so the left route crosses nothing.
    FrontData fd = front_from_grid(gf, ConnectorDir::Left);
    if (fd.b != i)
        throw InvalidParameterError("torus_dual_front: connector span is not i");
    return {gf, fd};
}

} // namespace berge::front
