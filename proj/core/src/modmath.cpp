#include "berge/modmath.hpp"

#include <cmath>

namespace berge::modmath {

Bezout ext_gcd(i64 x, i64 y) {
    if (x == 0 && y == 0) throw InvalidParameterError("ext_gcd(0, 0)");
    // Iterative extended Euclid on (x, y); tracks u*x + v*y = r.
    i64 old_r = x, r = y;
    i64 old_u = 1, u = 0;
    i64 old_v = 0, v = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t;
        t = old_r - checked_mul(q, r);
        old_r = r;
        r = t;
        t = old_u - checked_mul(q, u);
        old_u = u;
        u = t;
        t = old_v - checked_mul(q, v);
        old_v = v;
        v = t;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_u = checked_neg(old_u);
        old_v = checked_neg(old_v);
    }
    return {old_r, old_u, old_v};
}

Residue mod_inverse(i64 a, i64 p) {
    if (p < 2) throw InvalidParameterError("mod_inverse: modulus must be >= 2");
    i64 ar = mod_floor(a, p);
    Bezout bz = ext_gcd(ar, p);
    if (bz.g != 1)
        throw NotInvertibleError(std::to_string(a) + " is not invertible mod " + std::to_string(p));
    return Residue(bz.u, p);
}

Residue Residue_inverse_impl(const Residue& r) {
    return mod_inverse(r.value(), r.modulus());
}

Residue sl_class(const Residue& a) {
    Residue inv = mod_inverse(a.value(), a.modulus());
    return Residue(-1, a.modulus()) - a + inv;
}

namespace {

// Floor of sqrt(n) for n >= 0, exact.
i64 isqrt(i64 n) {
    if (n < 0) throw InvalidParameterError("isqrt of negative");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::vector<EisensteinRep> primitive_reps_eisenstein(i64 p) {
    if (p < 2) throw InvalidParameterError("primitive_reps_eisenstein: p must be >= 2");
    std::vector<EisensteinRep> reps;
    // For fixed r, s is the positive root of s^2 + rs + (r^2 - p) = 0,
    // so each r contributes at most one pair and r-ascending order is
    // already lexicographic.
    for (i64 r = 1; checked_add(checked_mul(r, r), checked_add(r, 1)) <= p; ++r) {
        i64 disc = checked_sub(checked_mul(4, p), checked_mul(3, checked_mul(r, r)));
        if (disc < 0) break;
        i64 root = isqrt(disc);
        if (root * root != disc) continue;
        if ((root - r) % 2 != 0) continue;
        i64 s = (root - r) / 2;
        if (s < 1) continue;
        if (gcd_i64(r, s) != 1) continue;
        reps.push_back({r, s});
    }
    return reps;
}

std::vector<Residue> roots_x2_x_1(i64 p) {
    if (p < 2) throw InvalidParameterError("roots_x2_x_1: p must be >= 2");
    std::vector<Residue> roots;
    // Walk x^2 + x + 1 mod p incrementally; the step from x to x+1 adds 2x + 2.
    i64 val = 1 % p; // x = 0
    for (i64 x = 0; x < p; ++x) {
        if (val == 0) roots.emplace_back(x, p);
        val += 2 * x + 2;
        val %= p;
    }
    return roots;
}

i64 fib_form(i64 x, i64 y) {
    return checked_sub(checked_add(checked_mul(x, x), checked_mul(x, y)), checked_mul(y, y));
}

FibPairResult fib_pair_normalize(i64 a, i64 b) {
    if (a <= 0 || b <= 0) throw InvalidParameterError("fib_pair_normalize: need a, b > 0");
    if (gcd_i64(a, b) != 1) throw InvalidParameterError("fib_pair_normalize: a, b must be coprime");
    i64 n = checked_neg(fib_form(a, b)); // b^2 - ab - a^2
    if (checked_abs(n) <= 1)
        throw DegenerateModulusError("fib_pair_normalize: |b^2 - ab - a^2| <= 1");

    FibPairResult out;
    if (n < 0 && a > b) {
        out.c = a;
        out.d = b;
        return out; // trace stays empty
    }

    i64 x = a, y = b;
    out.trace.pairs.emplace_back(x, y);
    // Terminates by the Fibonacci-ratio argument; guard generously anyway.
    const std::size_t limit = 4 * 64 + 8;
    while (!(x > y && y > 0)) {
        if (out.trace.pairs.size() > limit)
            throw InvalidParameterError("fib_pair_normalize failed to terminate");
        i64 nx = checked_sub(y, x);
        i64 ny = x;
        x = nx;
        y = ny;
        out.trace.pairs.emplace_back(x, y);
        if (x <= 0 || y <= 0) {
            // Valid inputs stay in the positive quadrant until the stopping
            // index; leaving it means the precondition was violated.
            throw InvalidParameterError("fib_pair_normalize left the positive quadrant");
        }
    }
    out.c = x;
    out.d = y;
    return out;
}

} // namespace berge::modmath

namespace berge {

Residue Residue::inverse() const {
    return modmath::mod_inverse(value_, modulus_);
}

} // namespace berge
