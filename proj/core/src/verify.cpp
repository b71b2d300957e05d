#include "berge/verify.hpp"

#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include "berge/modmath.hpp"

namespace berge::verify {

Residue congruence_residual(i64 p, const Residue& a, i64 chi_neg) {
    if (a.modulus() != p) throw ModulusMismatchError("congruence_residual: modulus mismatch");
    return modmath::sl_class(a) - Residue(chi_neg, p);
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::ExpectedTorus: return "expected-torus";
        case Classification::DocumentedException: return "documented-exception";
        case Classification::FailsAsPredicted: return "fails-as-predicted";
        case Classification::Violation: return "violation";
    }
    throw InvalidParameterError("unknown classification");
}

CongruenceReport classify(const BergeDualRecord& rec) {
    CongruenceReport report;
    report.record = rec;
    bool any_violation = false;
    bool any_documented = false;
    bool any_expected = false;
    for (const Residue& a : rec.a_candidates) {
        CandidateResult cr{a, congruence_residual(rec.p, a, rec.chi_neg), false, std::nullopt};
        cr.holds = cr.residual.is_zero();
        if (cr.holds) {
            cr.sanctioned = registry_lookup(rec, a);
            if (!cr.sanctioned) {
                any_violation = true;
            } else if (*cr.sanctioned == Classification::DocumentedException) {
                any_documented = true;
            } else {
                any_expected = true;
            }
        }
        report.candidates.push_back(cr);
    }
    if (any_violation)
        report.classification = Classification::Violation;
    else if (any_documented)
        report.classification = Classification::DocumentedException;
    else if (any_expected)
        report.classification = Classification::ExpectedTorus;
    else
        report.classification = Classification::FailsAsPredicted;
    return report;
}

Residue iiiv_case_value(int a_sign, int b_sign, i64 A, i64 B, int delta, i64 a_param, i64 p) {
    if ((a_sign != 1 && a_sign != -1) || (b_sign != 1 && b_sign != -1))
        throw InvalidParameterError("iiiv_case_value: signs must be +-1");
    i64 dA = checked_mul(static_cast<i64>(delta), A);
    i64 da = checked_mul(static_cast<i64>(delta), a_param);
    i64 value;
    if (a_sign > 0 && b_sign > 0) {
        value = checked_add(checked_mul(checked_sub(1, da), B), dA);
    } else if (a_sign > 0 && b_sign < 0) {
        value = checked_sub(checked_add(checked_mul(2, checked_mul(dA, B)),
                                        checked_mul(checked_sub(1, da), B)),
                            dA);
    } else if (a_sign < 0 && b_sign > 0) {
        value = checked_add(checked_sub(checked_mul(2, checked_mul(B, B)), dA),
                            checked_mul(checked_sub(da, 1), B));
    } else {
        value = checked_add(checked_add(checked_sub(checked_mul(2, checked_mul(B, B)),
                                                    checked_mul(2, checked_mul(dA, B))),
                                        dA),
                            checked_mul(checked_sub(da, 1), B));
    }
    return Residue(value, p);
}

i64 ixx_closed_residual(Family f, i64 j, int candidate_sign) {
    if (j == 0 || j == -1) throw InvalidParameterError("ixx_closed_residual: j must avoid {0,-1}");
    if (candidate_sign != 1 && candidate_sign != -1)
        throw InvalidParameterError("ixx_closed_residual: candidate sign must be +-1");
    bool pos = j > 0;
    if (f == Family::IX) {
        if (candidate_sign > 0) return pos ? checked_add(checked_mul(24, j), 6)
                                           : checked_add(checked_mul(42, j), 10);
        return pos ? checked_add(checked_mul(42, j), 8) : checked_add(checked_mul(24, j), 4);
    }
    if (f == Family::X) {
        if (candidate_sign > 0) return pos ? checked_add(checked_mul(24, j), 8)
                                           : checked_add(checked_mul(42, j), 14);
        return pos ? checked_add(checked_mul(42, j), 12) : checked_add(checked_mul(24, j), 6);
    }
    throw InvalidParameterError("ixx_closed_residual: family must be IX or X");
}

FdtcBound fdtc_bound(i64 p, i64 g) {
    if (p < 2) throw InvalidParameterError("fdtc_bound: p must be >= 2");
    if (g < 1) throw InvalidParameterError("fdtc_bound: g must be >= 1");
    return {Rational(2, p), p > checked_sub(checked_mul(2, g), 1)};
}

// ---------------------------------------------------------------------
// Sweeps

namespace {

void require_range(const ParamRange& r, const char* what) {
    if (!r.valid())
        throw InvalidParameterError(std::string("sweep: empty or inverted range for ") + what);
}

std::vector<int> sweep_signs(const SweepSpec& spec) {
    std::vector<int> signs;
    if (spec.sign_minus) signs.push_back(-1);
    if (spec.sign_plus) signs.push_back(+1);
    if (signs.empty()) throw InvalidParameterError("sweep: no surgery sign selected");
    return signs;
}

} // namespace

std::vector<std::vector<i64>> enumerate_tuples(const SweepSpec& spec) {
    std::vector<std::vector<i64>> tuples;
    switch (spec.family) {
        case Family::I: {
            require_range(spec.i, "i");
            require_range(spec.k, "k");
            std::vector<int> signs = sweep_signs(spec);
            for (i64 i = spec.i.lo; i <= spec.i.hi; ++i)
                for (i64 k = spec.k.lo; k <= spec.k.hi; ++k) {
                    if (i < 2 || k < 2 || gcd_i64(i, k) != 1) continue;
                    for (int sg : signs) tuples.push_back({i, k, sg});
                }
            break;
        }
        case Family::II: {
            require_range(spec.i, "i");
            require_range(spec.k, "k");
            std::vector<int> signs = sweep_signs(spec);
            for (i64 i = spec.i.lo; i <= spec.i.hi; ++i)
                for (i64 k = spec.k.lo; k <= spec.k.hi; ++k) {
                    if (i < 4 || k < 4 || gcd_i64(i, k) != 2) continue;
                    for (int sg : signs) tuples.push_back({i, k, sg});
                }
            break;
        }
        case Family::III:
        case Family::IV:
        case Family::V: {
            require_range(spec.A, "A");
            require_range(spec.k2, "k");
            require_range(spec.t, "t");
            for (int delta : {-1, +1})
                for (int eps : {-1, +1})
                    for (i64 A = spec.A.lo; A <= spec.A.hi; ++A) {
                        if (spec.family == Family::III && A < 2) continue;
                        if (spec.family == Family::IV && (A < 5 || A % 2 == 0)) continue;
                        if (spec.family == Family::V && (A < 3 || A % 2 == 0)) continue;
                        for (i64 k = std::max<i64>(spec.k2.lo, 0); k <= spec.k2.hi; ++k)
                            for (i64 t = spec.t.lo; t <= spec.t.hi; ++t)
                                tuples.push_back({delta, eps, A, k, t});
                    }
            break;
        }
        case Family::VII: {
            require_range(spec.r, "r");
            require_range(spec.s, "s");
            for (i64 r = std::max<i64>(spec.r.lo, 1); r <= spec.r.hi; ++r)
                for (i64 s = std::max<i64>(spec.s.lo, 1); s <= spec.s.hi; ++s) {
                    if (gcd_i64(r, s) != 1) continue;
                    tuples.push_back({r, s});
                }
            break;
        }
        case Family::VIII: {
            require_range(spec.r, "r");
            require_range(spec.s, "s");
            for (i64 r = spec.r.lo; r <= spec.r.hi; ++r)
                for (i64 s = spec.s.lo; s <= spec.s.hi; ++s) {
                    if (s < 2 || r <= s || gcd_i64(r, s) != 1) continue;
                    tuples.push_back({r, s});
                }
            break;
        }
        case Family::IX:
        case Family::X: {
            require_range(spec.j, "j");
            for (i64 j = spec.j.lo; j <= spec.j.hi; ++j) {
                if (j == 0 || j == -1) continue;
                tuples.push_back({j});
            }
            break;
        }
    }
    return tuples;
}

BergeDualRecord record_for_tuple(Family family, const std::vector<i64>& tuple) {
    switch (family) {
        case Family::I:
            return families::type_I(tuple.at(0), tuple.at(1), static_cast<int>(tuple.at(2)));
        case Family::II:
            return families::type_II(tuple.at(0), tuple.at(1), static_cast<int>(tuple.at(2)));
        case Family::III:
        case Family::IV:
        case Family::V:
            return families::type_III_V({family, static_cast<int>(tuple.at(0)),
                                         static_cast<int>(tuple.at(1)), tuple.at(2), tuple.at(3),
                                         tuple.at(4)});
        case Family::VII:
            return families::type_VII(tuple.at(0), tuple.at(1));
        case Family::VIII:
            return families::type_VIII(tuple.at(0), tuple.at(1));
        case Family::IX:
        case Family::X:
            return families::type_IX_X(family, tuple.at(0));
    }
    throw InvalidParameterError("record_for_tuple: unknown family");
}

namespace {

void tally(SweepSummary& summary, const CongruenceReport& report) {
    summary.total += 1;
    for (const CandidateResult& c : report.candidates)
        if (c.holds) summary.holds += 1;
    if (report.classification == Classification::Violation) summary.violations += 1;
}

} // namespace

SweepSummary sweep(const SweepSpec& spec, int jobs, const ReportSink& sink) {
    if (jobs < 1) throw InvalidParameterError("sweep: jobs must be >= 1");
    std::vector<std::vector<i64>> tuples = enumerate_tuples(spec);
    SweepSummary summary;

    if (jobs == 1) {
        for (const std::vector<i64>& tuple : tuples) {
            CongruenceReport report = classify(record_for_tuple(spec.family, tuple));
            tally(summary, report);
            if (sink) sink(report);
        }
        return summary;
    }

    // Parallel workers with ordered emission: results are buffered by task
    // index and flushed strictly in enumeration order, so the stream is
    // byte-identical to the single-threaded run.
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, CongruenceReport> ready;
    std::size_t next_take = 0;
    std::size_t next_emit = 0;
    const std::size_t window = static_cast<std::size_t>(jobs) * 8;
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            std::size_t idx;
            {
                std::unique_lock lk(mu);
                cv.wait(lk, [&] {
                    return failure || next_take >= tuples.size() || next_take < next_emit + window;
                });
                if (failure || next_take >= tuples.size()) return;
                idx = next_take++;
            }
            try {
                CongruenceReport report = classify(record_for_tuple(spec.family, tuples[idx]));
                std::unique_lock lk(mu);
                ready.emplace(idx, std::move(report));
                while (!ready.empty() && ready.begin()->first == next_emit) {
                    CongruenceReport out = std::move(ready.begin()->second);
                    ready.erase(ready.begin());
                    ++next_emit;
                    tally(summary, out);
                    if (sink) sink(out);
                }
                cv.notify_all();
            } catch (...) {
                std::unique_lock lk(mu);
                if (!failure) failure = std::current_exception();
                cv.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    if (next_emit != tuples.size())
        throw Error("sweep: ordered emission did not drain");
    return summary;
}

} // namespace berge::verify
