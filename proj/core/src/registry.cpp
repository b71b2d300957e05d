#include "berge/verify.hpp"

namespace berge::verify {

// The data table of sanctioned congruence holds. Everything the sweeps may
// legitimately see with residual zero is listed here; a hold matching no
// row is a violation.
const std::vector<RegistryEntry>& exception_registry() {
    using CR = RegistryEntry::CandidateRule;
    static const std::vector<RegistryEntry> table = {
        // Duals of (ik+1)-surgery on torus knots, class a = k: the bound
        // is sharp (writhe-zero front), so the congruence holds.
        {Family::I, +1, 0, 0, CR::PlusSecond, 0, 0, Classification::ExpectedTorus,
         "torus dual, p = ik+1, a = k: sharp bound"},
        // The (3,5) torus knot at p = 16, class a = -k: the congruence
        // holds but the actual maximal self-linking is -9/16 < -chi/p.
        {Family::I, +1, 3, 5, CR::MinusSecond, 0, 0, Classification::DocumentedException,
         "(3,5), p=16, a=-5: congruence holds, equality fails (p*sl = -9)"},
        {Family::I, +1, 5, 3, CR::MinusSecond, 0, 0, Classification::DocumentedException,
         "(5,3), p=16, a=-3: same knot as (3,5) with swapped parameters"},
        // Type III with canonical b = 1 is the trefoil dual (p = 7); the
        // only III-V tuple class where the congruence holds, at a = -B.
        {Family::III, 0, 0, 0, CR::MinusB, 1, 0, Classification::ExpectedTorus,
         "trefoil dual (b = 1, p = 7), a = -B"},
        // Type VII with r = 1 lies on a standard torus; the congruence
        // holds for its single candidate class.
        {Family::VII, 0, 0, 0, CR::SingleCandidate, 0, 1, Classification::ExpectedTorus,
         "r = 1: knot isotopic onto a standard torus"},
    };
    return table;
}

namespace {

bool entry_matches(const RegistryEntry& e, const BergeDualRecord& rec, const Residue& cand) {
    if (e.family != rec.family) return false;
    switch (rec.family) {
        case Family::I:
        case Family::II: {
            i64 i = rec.params.at(0), k = rec.params.at(1), sign = rec.params.at(2);
            if (e.sign != 0 && e.sign != sign) return false;
            if (e.i != 0 && e.i != i) return false;
            if (e.k != 0 && e.k != k) return false;
            if (e.rule == RegistryEntry::CandidateRule::PlusSecond)
                return cand == Residue(k, rec.p);
            if (e.rule == RegistryEntry::CandidateRule::MinusSecond)
                return cand == -Residue(k, rec.p);
            return false;
        }
        case Family::III:
        case Family::IV:
        case Family::V: {
            families::TypeIIIVParams prm{rec.family,
                                         static_cast<int>(rec.params.at(0)),
                                         static_cast<int>(rec.params.at(1)),
                                         rec.params.at(2),
                                         rec.params.at(3),
                                         rec.params.at(4)};
            families::IIIVDerived d = families::derive_iiiv(prm);
            if (e.canonical_b != 0 && d.b != e.canonical_b) return false;
            if (e.rule == RegistryEntry::CandidateRule::MinusB)
                return cand == -Residue(d.B, rec.p);
            return false;
        }
        case Family::VII: {
            if (e.r_equals != 0 && rec.params.at(0) != e.r_equals) return false;
            return e.rule == RegistryEntry::CandidateRule::SingleCandidate;
        }
        default:
            return false;
    }
}

} // namespace

std::optional<Classification> registry_lookup(const BergeDualRecord& rec, const Residue& cand) {
    for (const RegistryEntry& e : exception_registry())
        if (entry_matches(e, rec, cand)) return e.classification;
    return std::nullopt;
}

} // namespace berge::verify
