#include "berge/families.hpp"

#include <sstream>

#include "berge/modmath.hpp"

namespace berge::families {

const char* family_name(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
        case Family::V: return "V";
        case Family::VII: return "VII";
        case Family::VIII: return "VIII";
        case Family::IX: return "IX";
        case Family::X: return "X";
    }
    throw InvalidParameterError("unknown family tag");
}

Family parse_family(const std::string& name) {
    if (name == "I") return Family::I;
    if (name == "II") return Family::II;
    if (name == "III") return Family::III;
    if (name == "IV") return Family::IV;
    if (name == "V") return Family::V;
    if (name == "VII") return Family::VII;
    if (name == "VIII") return Family::VIII;
    if (name == "IX") return Family::IX;
    if (name == "X") return Family::X;
    throw InvalidParameterError("unknown family tag: " + name);
}

namespace {

void check_record(const BergeDualRecord& rec) {
    if (rec.p < 2) throw InvalidParameterError("record with p < 2");
    if (rec.chi_neg < -1 || mod_floor(rec.chi_neg, 2) != 1)
        throw InvalidParameterError("record chi_neg must be odd and >= -1");
    for (const Residue& a : rec.a_candidates) {
        // Throws NotInvertibleError when a shares a factor with p.
        (void)a.inverse();
    }
}

std::vector<Residue> plus_minus(i64 v, i64 p) {
    Residue a(v, p);
    return {a, -a};
}

} // namespace

BergeDualRecord type_I(i64 i, i64 k, int sign) {
    if (i < 2 || k < 2) throw InvalidParameterError("type I: need i, k >= 2");
    if (sign != 1 && sign != -1) throw InvalidParameterError("type I: sign must be +-1");
    if (gcd_i64(i, k) != 1) throw InvalidParameterError("type I: i, k must be coprime");
    BergeDualRecord rec;
    rec.family = Family::I;
    rec.params = {i, k, sign};
    rec.p = checked_add(checked_mul(i, k), sign);
    rec.chi_neg = checked_sub(checked_mul(i, k), checked_add(i, k));
    rec.a_candidates = plus_minus(k, rec.p);
    rec.notes = {"classes +-" + std::to_string(i) + " equal the images of -+" +
                 std::to_string(k) + " under a -> -a^-1"};
    check_record(rec);
    return rec;
}

BergeDualRecord type_II(i64 i, i64 k, int sign) {
    if (i < 4 || k < 4) throw InvalidParameterError("type II: need i, k >= 4");
    if (sign != 1 && sign != -1) throw InvalidParameterError("type II: sign must be +-1");
    if (gcd_i64(i, k) != 2) throw InvalidParameterError("type II: need gcd(i, k) = 2");
    BergeDualRecord rec;
    rec.family = Family::II;
    rec.params = {i, k, sign};
    rec.p = checked_add(checked_mul(i, k), sign);
    rec.chi_neg = checked_add(checked_sub(checked_mul(i, k), checked_add(i, k)), sign);
    rec.a_candidates = plus_minus(k, rec.p);
    check_record(rec);
    return rec;
}

IIIVDerived derive_iiiv(const TypeIIIVParams& prm) {
    if (prm.delta != 1 && prm.delta != -1) throw InvalidParameterError("III-V: delta must be +-1");
    if (prm.eps != 1 && prm.eps != -1) throw InvalidParameterError("III-V: eps must be +-1");
    if (prm.k < 0) throw InvalidParameterError("III-V: need k >= 0");

    IIIVDerived d{};
    d.delta_raw = prm.delta;
    i64 cA; // c*A with c = 2 for III, 1 for IV and V
    switch (prm.family) {
        case Family::III:
            if (prm.A < 2) throw InvalidParameterError("type III: need A >= 2");
            d.B = checked_sub(checked_mul(prm.A, checked_add(3, checked_mul(2, prm.k))), prm.eps);
            d.a_param = 0;
            cA = checked_mul(2, prm.A);
            break;
        case Family::IV: {
            if (prm.A < 5 || prm.A % 2 == 0) throw InvalidParameterError("type IV: need A >= 5 odd");
            i64 twiceB = checked_sub(checked_mul(prm.A, checked_add(5, checked_mul(2, prm.k))), prm.eps);
            if (twiceB % 2 != 0) throw InvalidParameterError("type IV: B not integral");
            d.B = twiceB / 2;
            d.a_param = 1;
            cA = prm.A;
            break;
        }
        case Family::V: {
            if (prm.A < 3 || prm.A % 2 == 0) throw InvalidParameterError("type V: need A >= 3 odd");
            i64 l = prm.eps == 1 ? checked_add(2, prm.k) : checked_add(3, prm.k);
            d.B = checked_add(checked_mul(prm.A, l), prm.eps);
            d.a_param = 1;
            cA = prm.A;
            break;
        }
        default:
            throw InvalidParameterError("derive_iiiv: family must be III, IV or V");
    }
    if (d.B <= checked_mul(2, prm.A))
        throw InvalidParameterError("III-V: derived B must exceed 2A");

    d.b_raw = checked_mul(checked_mul(-prm.delta, prm.eps),
                          checked_add(cA, checked_mul(prm.t, d.B)));
    if (d.b_raw == 0) throw InvalidParameterError("III-V: b must be nonzero");

    // Flipping delta flips b and replaces the knot by its mirror; keep the
    // positive-braid representative, whose surgery coefficient is positive.
    if (d.b_raw < 0) {
        d.b = checked_neg(d.b_raw);
        d.delta = -prm.delta;
        d.flipped = true;
    } else {
        d.b = d.b_raw;
        d.delta = prm.delta;
        d.flipped = false;
    }

    d.p = checked_abs(checked_add(checked_mul(d.B, d.b), checked_mul(prm.A, d.delta)));
    if (d.p < 2) throw InvalidParameterError("III-V: p < 2");
    i64 term = checked_mul(d.b, checked_sub(d.B, 1));
    i64 mid = checked_mul(static_cast<i64>(d.delta), checked_sub(prm.A, d.a_param));
    d.chi_neg = checked_sub(checked_add(term, mid), d.B);
    return d;
}

BergeDualRecord type_III_V(const TypeIIIVParams& prm) {
    IIIVDerived d = derive_iiiv(prm);
    BergeDualRecord rec;
    rec.family = prm.family;
    rec.params = {prm.delta, prm.eps, prm.A, prm.k, prm.t};
    rec.p = d.p;
    rec.chi_neg = d.chi_neg;
    rec.a_candidates = plus_minus(d.B, rec.p);
    rec.notes = {"B=" + std::to_string(d.B) + " b=" + std::to_string(d.b) +
                 " delta=" + std::to_string(d.delta)};
    if (d.flipped) rec.notes.push_back("mirror representative: delta and b sign-flipped");
    check_record(rec);
    return rec;
}

BergeDualRecord type_VII(i64 r, i64 s) {
    if (r < 1 || s < 1) throw InvalidParameterError("type VII: need r, s >= 1");
    if (gcd_i64(r, s) != 1) throw InvalidParameterError("type VII: r, s must be coprime");
    i64 p = checked_add(checked_add(checked_mul(r, r), checked_mul(r, s)), checked_mul(s, s));
    if (p < 2) throw InvalidParameterError("type VII: p < 2");
    BergeDualRecord rec;
    rec.family = Family::VII;
    rec.params = {r, s};
    rec.p = p;
    rec.chi_neg = checked_sub(p, checked_mul(2, checked_add(r, s)));
    Residue sr(s, p);
    Residue inv_s2 = (sr * sr).inverse();
    rec.a_candidates = {Residue(checked_mul(r, r), p) * inv_s2};
    check_record(rec);
    return rec;
}

i64 x_rs(i64 r, i64 s) {
    if (r < 1 || s < 1) throw InvalidParameterError("x_rs: need r, s > 0");
    if (gcd_i64(r, s) != 1) throw InvalidParameterError("x_rs: r, s must be coprime");
    if (r % s == 0) throw DegenerateCableError("x_rs: s divides r");
    i64 m = r / s + 1; // unique m with (m-1)s < r < ms
    i64 t1 = checked_mul(checked_sub(checked_mul(2, m), 1), checked_mul(r, s));
    i64 t2 = checked_mul(checked_mul(m, checked_sub(m, 1)), checked_mul(s, s));
    i64 t3 = checked_mul(r, r);
    i64 t4 = checked_mul(s, s);
    i64 t5 = checked_mul(2, s);
    return checked_sub(checked_add(checked_sub(checked_sub(t1, t2), t3), t4), t5);
}

BergeDualRecord type_VIII(i64 r, i64 s) {
    if (s < 2 || r <= s) throw InvalidParameterError("type VIII: need r > s >= 2");
    if (gcd_i64(r, s) != 1) throw InvalidParameterError("type VIII: r, s must be coprime");
    i64 p = checked_sub(checked_add(checked_mul(r, r), checked_mul(r, s)), checked_mul(s, s));
    BergeDualRecord rec;
    rec.family = Family::VIII;
    rec.params = {r, s};
    rec.p = p;
    rec.chi_neg = x_rs(r, s);
    Residue a = Residue(r, p) * Residue(s, p).inverse();
    rec.a_candidates = {a, -a};
    check_record(rec);
    return rec;
}

BergeDualRecord type_VIII_from_pair(i64 a, i64 b) {
    modmath::FibPairResult norm = modmath::fib_pair_normalize(a, b);
    if (norm.d < 2)
        throw DegenerateCableError("type VIII: normalized pair has s = 1");
    return type_VIII(norm.c, norm.d);
}

BergeDualRecord type_IX_X(Family f, i64 j) {
    if (f != Family::IX && f != Family::X)
        throw InvalidParameterError("type_IX_X: family must be IX or X");
    if (j == 0 || j == -1) throw InvalidParameterError("j must avoid {0,-1}");
    i64 j2 = checked_mul(j, j);
    BergeDualRecord rec;
    rec.family = f;
    rec.params = {j};
    if (f == Family::IX) {
        rec.p = checked_add(checked_add(checked_mul(22, j2), checked_mul(9, j)), 1);
        rec.a_candidates = plus_minus(checked_add(checked_mul(11, j), 2), rec.p);
        rec.chi_neg = j > 0 ? checked_sub(checked_mul(22, j2), 1)
                            : checked_add(checked_add(checked_mul(22, j2), checked_mul(18, j)), 3);
    } else {
        rec.p = checked_add(checked_add(checked_mul(22, j2), checked_mul(13, j)), 2);
        rec.a_candidates = plus_minus(checked_add(checked_mul(11, j), 3), rec.p);
        rec.chi_neg = j > 0 ? checked_sub(checked_add(checked_mul(22, j2), checked_mul(4, j)), 1)
                            : checked_add(checked_add(checked_mul(22, j2), checked_mul(22, j)), 5);
    }
    check_record(rec);
    return rec;
}

Residue q_of(const BergeDualRecord& rec, const Residue& a) {
    if (a.modulus() != rec.p) throw ModulusMismatchError("q_of: candidate modulus != record p");
    Residue inv2 = (a * a).inverse();
    return -inv2;
}

Residue b_of(const BergeDualRecord& rec, const Residue& a) {
    if (a.modulus() != rec.p) throw ModulusMismatchError("b_of: candidate modulus != record p");
    return -a.inverse();
}

std::string to_line(const BergeDualRecord& rec) {
    std::ostringstream os;
    os << "family=" << family_name(rec.family);
    os << " params=";
    for (std::size_t i = 0; i < rec.params.size(); ++i) {
        if (i) os << ",";
        os << rec.params[i];
    }
    os << " p=" << rec.p;
    os << " chi_neg=" << rec.chi_neg;
    os << " a_candidates=";
    for (std::size_t i = 0; i < rec.a_candidates.size(); ++i) {
        if (i) os << ",";
        os << rec.a_candidates[i].value();
    }
    os << " notes=";
    for (std::size_t i = 0; i < rec.notes.size(); ++i) {
        if (i) os << ";";
        os << rec.notes[i];
    }
    return os.str();
}

} // namespace berge::families
