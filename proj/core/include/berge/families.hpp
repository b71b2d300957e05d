#pragma once

#include <string>
#include <vector>

#include "berge/residue.hpp"

namespace berge::families {

enum class Family { I, II, III, IV, V, VII, VIII, IX, X };

const char* family_name(Family f);
Family parse_family(const std::string& name);

/// One Berge dual: family tag, raw parameters, surgery coefficient p,
/// -chi of the knot, the candidate homology classes mod p, and free-form
/// provenance notes.
struct BergeDualRecord {
    Family family;
    std::vector<i64> params;
    i64 p;
    i64 chi_neg;
    std::vector<Residue> a_candidates;
    std::vector<std::string> notes;
};

/// Dual of (ik + sign)-surgery on the (i, k) torus knot. Candidates are
/// {k, -k} mod p; the {i, -i} classes are their images under a -> -a^{-1}.
BergeDualRecord type_I(i64 i, i64 k, int sign);

/// 2-cables of torus knots: i, k >= 4 with gcd(i, k) = 2, p = ik + sign,
/// -chi = (ik - i - k) + sign.
BergeDualRecord type_II(i64 i, i64 k, int sign);

/// Raw parameters for Types III-V. Type VI is a subcase of V.
struct TypeIIIVParams {
    Family family; // III, IV or V
    int delta;
    int eps;
    i64 A;
    i64 k;
    i64 t;
};

/// Quantities derived from a Type III-V tuple. delta (and with it b) is
/// canonicalized so that b > 0: a tuple with b < 0 describes the mirror
/// knot, and only the positive-surgery representative is recorded.
struct IIIVDerived {
    i64 B;
    i64 b_raw;        // before canonicalization
    i64 b;            // > 0
    int delta;        // after canonicalization
    int delta_raw;
    i64 a_param;      // 0 for III, 1 for IV and V
    i64 p;            // |B*b + A*delta|
    i64 chi_neg;
    bool flipped;
};

IIIVDerived derive_iiiv(const TypeIIIVParams& params);

BergeDualRecord type_III_V(const TypeIIIVParams& params);

/// Knots on the fiber surface of the trefoil: p = r^2 + rs + s^2,
/// -chi = p - 2(r + s), single candidate r^2 s^{-2} mod p.
BergeDualRecord type_VII(i64 r, i64 s);

/// Knots on the fiber surface of the figure eight: r > s >= 2 coprime,
/// p = r^2 + rs - s^2, -chi = x(r, s), candidates {r s^{-1}, -r s^{-1}}.
BergeDualRecord type_VIII(i64 r, i64 s);

/// Type VIII from a general coprime pair (a, b) with |b^2 - ab - a^2| = p:
/// the pair is first normalized to r > s via the (x, y) -> (y - x, x)
/// iteration.
BergeDualRecord type_VIII_from_pair(i64 a, i64 b);

/// Sporadic families, parameterized by j outside {0, -1}.
BergeDualRecord type_IX_X(Family f, i64 j);

/// q = (-a^{-2}) mod p; derived, never an independent input.
Residue q_of(const BergeDualRecord& rec, const Residue& a);

/// b_K = (a * q) mod p = (-a^{-1}) mod p.
Residue b_of(const BergeDualRecord& rec, const Residue& a);

/// x(r, s) = (2m-1)rs - m(m-1)s^2 - r^2 + s^2 - 2s with m the unique
/// integer satisfying (m-1)s < r < ms. Throws DegenerateCableError when
/// s divides r.
i64 x_rs(i64 r, i64 s);

/// Stable one-line serialization: family, params, p, chi_neg,
/// a_candidates, notes; integers in decimal.
std::string to_line(const BergeDualRecord& rec);

} // namespace berge::families
