#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "berge/braid.hpp"
#include "berge/front.hpp"
#include "berge/io.hpp"
#include "berge/modmath.hpp"
#include "berge/verify.hpp"

namespace {

using namespace berge;

int parse_sign(const std::string& s, const char* what) {
    if (s == "+" || s == "+1" || s == "1") return +1;
    if (s == "-" || s == "-1") return -1;
    throw InvalidParameterError(std::string(what) + " must be + or -");
}

verify::ParamRange parse_range(const std::string& s, const char* what) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            i64 v = std::stoll(s);
            return {v, v};
        }
        verify::ParamRange r{std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
        if (!r.valid()) throw InvalidParameterError(std::string(what) + ": min exceeds max");
        return r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidParameterError(std::string(what) + ": expected LO:HI or N");
    }
}

void print_record(const families::BergeDualRecord& rec) {
    std::cout << families::to_line(rec) << "\n";
}

struct FamilyArgs {
    std::string family;
    i64 i = 0, k = 0;
    std::string sign = "+";
    std::string delta = "+", eps = "+";
    i64 A = 0, kk = 0, t = 0;
    i64 r = 0, s = 0;
    i64 j = 0;
};

families::BergeDualRecord build_family_record(const FamilyArgs& fa) {
    families::Family fam = families::parse_family(fa.family);
    switch (fam) {
        case families::Family::I:
            return families::type_I(fa.i, fa.k, parse_sign(fa.sign, "--sign"));
        case families::Family::II:
            return families::type_II(fa.i, fa.k, parse_sign(fa.sign, "--sign"));
        case families::Family::III:
        case families::Family::IV:
        case families::Family::V:
            return families::type_III_V({fam, parse_sign(fa.delta, "--delta"),
                                         parse_sign(fa.eps, "--eps"), fa.A, fa.kk, fa.t});
        case families::Family::VII:
            return families::type_VII(fa.r, fa.s);
        case families::Family::VIII:
            return families::type_VIII(fa.r, fa.s);
        case families::Family::IX:
        case families::Family::X:
            return families::type_IX_X(fam, fa.j);
    }
    throw InvalidParameterError("unknown family");
}

struct SweepArgs {
    std::string family;
    std::string i, k, A, kk, t, r, s, j;
    std::string signs = "both";
    std::string format = "json-lines";
    std::string output;
    int jobs = 1;
};

verify::SweepSpec build_sweep_spec(const SweepArgs& sa) {
    verify::SweepSpec spec;
    spec.family = families::parse_family(sa.family);
    if (sa.signs == "both") {
        spec.sign_plus = spec.sign_minus = true;
    } else {
        int sg = parse_sign(sa.signs, "--signs");
        spec.sign_plus = sg > 0;
        spec.sign_minus = sg < 0;
    }
    auto need = [](const std::string& v, const char* what) {
        if (v.empty()) throw InvalidParameterError(std::string("sweep: missing range ") + what);
        return parse_range(v, what);
    };
    switch (spec.family) {
        case families::Family::I:
        case families::Family::II:
            spec.i = need(sa.i, "--i");
            spec.k = need(sa.k, "--k");
            break;
        case families::Family::III:
        case families::Family::IV:
        case families::Family::V:
            spec.A = need(sa.A, "--A");
            spec.k2 = need(sa.kk, "--k");
            spec.t = need(sa.t, "--t");
            break;
        case families::Family::VII:
        case families::Family::VIII:
            spec.r = need(sa.r, "--r");
            spec.s = need(sa.s, "--s");
            break;
        case families::Family::IX:
        case families::Family::X:
            spec.j = need(sa.j, "--j");
            break;
    }
    return spec;
}

int run_sweep(const SweepArgs& sa) {
    verify::SweepSpec spec = build_sweep_spec(sa);
    if (sa.jobs < 1) throw InvalidParameterError("--jobs must be >= 1");
    io::OutputFormat format = io::parse_format(sa.format);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!sa.output.empty()) {
        file.open(sa.output);
        if (!file) throw InvalidParameterError("cannot open output file " + sa.output);
        out = &file;
    }
    io::ReportWriter writer(*out, format);
    verify::SweepSummary summary =
        verify::sweep(spec, sa.jobs, [&](const verify::CongruenceReport& r) { writer.write(r); });
    out->flush();
    std::cerr << "summary total=" << summary.total << " holds=" << summary.holds
              << " violations=" << summary.violations << "\n";
    return summary.violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of lens-space surgery duals and congruence sweeps"};
    app.require_subcommand(1);

    FamilyArgs fa;
    CLI::App* family = app.add_subcommand("family", "Print the record for one parameter tuple");
    family->add_option("family", fa.family, "Family tag (I II III IV V VII VIII IX X)")->required();
    family->add_option("--i", fa.i);
    family->add_option("--k", fa.k);
    family->add_option("--sign", fa.sign, "Surgery sign for I/II (+ or -)");
    family->add_option("--delta", fa.delta);
    family->add_option("--eps", fa.eps);
    family->add_option("--A", fa.A);
    family->add_option("--kparam", fa.kk, "k parameter for III-V");
    family->add_option("--t", fa.t);
    family->add_option("--r", fa.r);
    family->add_option("--s", fa.s);
    family->add_option("--j", fa.j);

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep a family and classify every record");
    sweep->add_option("--family", sa.family)->required();
    sweep->add_option("--i", sa.i, "Range LO:HI");
    sweep->add_option("--k", sa.k, "Range LO:HI");
    sweep->add_option("--A", sa.A, "Range LO:HI");
    sweep->add_option("--kparam", sa.kk, "Range LO:HI for the III-V k parameter");
    sweep->add_option("--t", sa.t, "Range LO:HI");
    sweep->add_option("--r", sa.r, "Range LO:HI");
    sweep->add_option("--s", sa.s, "Range LO:HI");
    sweep->add_option("--j", sa.j, "Range LO:HI");
    sweep->add_option("--signs", sa.signs, "+, - or both (default both)");
    sweep->add_option("--format", sa.format, "json-lines or csv");
    sweep->add_option("--output", sa.output, "Output path (default stdout)");
    sweep->add_option("--jobs", sa.jobs, "Worker threads (default 1)");

    CLI::App* front_cmd = app.add_subcommand("front", "Toroidal front computations");
    i64 fr_i = 0, fr_k = 0;
    CLI::App* torus = front_cmd->add_subcommand("torus-dual", "Front of a torus-knot dual");
    torus->add_option("--i", fr_i)->required();
    torus->add_option("--k", fr_k)->required();
    i64 fd_w = 0, fd_cu = 0, fd_cd = 0, fd_a = 0, fd_b = 0, fd_p = 0;
    CLI::App* inv = front_cmd->add_subcommand("invariants", "tb/rot/sl from front data");
    inv->add_option("--w", fd_w)->required();
    inv->add_option("--cu", fd_cu)->required();
    inv->add_option("--cd", fd_cd)->required();
    inv->add_option("--a", fd_a)->required();
    inv->add_option("--b", fd_b)->required();
    inv->add_option("--p", fd_p)->required();
    i64 gc_p = 0, gc_q = 0, gc_wraps = 0, gc_start = 0;
    CLI::App* cols = front_cmd->add_subcommand("columns", "Strand columns of a grid-one front");
    cols->add_option("--p", gc_p)->required();
    cols->add_option("--q", gc_q)->required();
    cols->add_option("--wraps", gc_wraps)->required();
    cols->add_option("--start", gc_start)->required();

    CLI::App* braid_cmd = app.add_subcommand("braid", "Braid word computations");
    i64 br_A = 0, br_B = 0, br_b = 0, br_a = 0;
    std::string br_delta = "+";
    CLI::App* chi = braid_cmd->add_subcommand("chi", "-chi by the closed form");
    chi->add_option("--A", br_A)->required();
    chi->add_option("--B", br_B)->required();
    chi->add_option("--b", br_b)->required();
    chi->add_option("--delta", br_delta)->required();
    chi->add_option("--a", br_a)->required();
    CLI::App* oracle = braid_cmd->add_subcommand("oracle", "-chi through the positive braid word");
    oracle->add_option("--A", br_A)->required();
    oracle->add_option("--B", br_B)->required();
    oracle->add_option("--b", br_b)->required();
    oracle->add_option("--delta", br_delta)->required();
    oracle->add_option("--a", br_a)->required();
    i64 br_n = 0;
    CLI::App* word = braid_cmd->add_subcommand("word", "Print the descending cycle word");
    word->add_option("--n", br_n)->required();

    CLI::App* qf = app.add_subcommand("qf", "Quadratic form and modular computations");
    i64 qf_p = 0, qf_a = 0, qf_b = 0;
    CLI::App* eis = qf->add_subcommand("eisenstein", "Primitive representations and roots");
    eis->add_option("--p", qf_p)->required();
    CLI::App* roots = qf->add_subcommand("roots", "Roots of x^2 + x + 1 mod p");
    roots->add_option("--p", qf_p)->required();
    CLI::App* invc = qf->add_subcommand("inverse", "Inverse of a mod p");
    invc->add_option("--a", qf_a)->required();
    invc->add_option("--p", qf_p)->required();
    CLI::App* slc = qf->add_subcommand("slclass", "(-1 - a + a^-1) mod p");
    slc->add_option("--a", qf_a)->required();
    slc->add_option("--p", qf_p)->required();
    CLI::App* norm = qf->add_subcommand("normalize", "Normalize (a, b) to c > d > 0");
    norm->add_option("--a", qf_a)->required();
    norm->add_option("--b", qf_b)->required();

    CLI::App* fdtc = app.add_subcommand("fdtc", "Fractional Dehn twist coefficient bound");
    i64 fd_p2 = 0, fd_g = 0;
    fdtc->add_option("--p", fd_p2)->required();
    fdtc->add_option("--g", fd_g)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (family->parsed()) {
            print_record(build_family_record(fa));
            return 0;
        }
        if (sweep->parsed()) {
            return run_sweep(sa);
        }
        if (front_cmd->parsed()) {
            if (torus->parsed()) {
                front::TorusDualFront td = front::torus_dual_front(fr_i, fr_k);
                Rational sl = front::sl_push(td.data);
                Rational psl = sl * Rational(td.data.p);
                std::cout << "sl = " << sl.str() << ", p*sl = " << psl.str()
                          << ", w = " << td.data.w << "\n";
                return 0;
            }
            if (inv->parsed()) {
                front::FrontData fd(fd_w, fd_cu, fd_cd, fd_a, fd_b, fd_p);
                std::cout << "tb = " << front::tb(fd).str() << ", rot = " << front::rot(fd).str()
                          << ", sl+ = " << front::sl_push(fd).str()
                          << ", sl- = " << front::sl_push_negative(fd).str() << "\n";
                return 0;
            }
            if (cols->parsed()) {
                front::GridOneFront gf(gc_p, gc_q, gc_wraps, gc_start, +1, +1);
                bool first = true;
                for (i64 c : front::gn1_strand_columns(gf)) {
                    if (!first) std::cout << " ";
                    std::cout << c;
                    first = false;
                }
                std::cout << "\n";
                return 0;
            }
            throw InvalidParameterError("front: missing subcommand");
        }
        if (braid_cmd->parsed()) {
            if (chi->parsed()) {
                std::cout << "-chi = "
                          << braid::chi_berge(br_A, br_B, br_b, parse_sign(br_delta, "--delta"), br_a)
                          << "\n";
                return 0;
            }
            if (oracle->parsed()) {
                int d = parse_sign(br_delta, "--delta");
                braid::BraidWord w = braid::materialize(
                    braid::normalize_berge_params(br_A, br_B, br_b, d, br_a));
                std::cout << "-chi = " << braid::chi_berge_oracle(br_A, br_B, br_b, d, br_a)
                          << ", components = " << braid::closure_components(w)
                          << ", letters = " << w.letters.size() << "\n";
                return 0;
            }
            if (word->parsed()) {
                braid::BraidWord w = braid::cycle_word(br_n);
                bool first = true;
                for (const auto& l : w.letters) {
                    if (!first) std::cout << " ";
                    std::cout << (l.sign > 0 ? "s" : "S") << l.index;
                    first = false;
                }
                std::cout << "\n";
                return 0;
            }
            throw InvalidParameterError("braid: missing subcommand");
        }
        if (qf->parsed()) {
            if (eis->parsed()) {
                auto reps = modmath::primitive_reps_eisenstein(qf_p);
                auto rts = modmath::roots_x2_x_1(qf_p);
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    if (i) std::cout << " ";
                    std::cout << "(" << reps[i].r << "," << reps[i].s << ")";
                }
                std::cout << "; roots";
                for (const Residue& r : rts) std::cout << " " << r.value();
                std::cout << "\n";
                return 0;
            }
            if (roots->parsed()) {
                bool first = true;
                for (const Residue& r : modmath::roots_x2_x_1(qf_p)) {
                    if (!first) std::cout << " ";
                    std::cout << r.value();
                    first = false;
                }
                std::cout << "\n";
                return 0;
            }
            if (invc->parsed()) {
                std::cout << modmath::mod_inverse(qf_a, qf_p).value() << "\n";
                return 0;
            }
            if (slc->parsed()) {
                std::cout << modmath::sl_class(Residue(qf_a, qf_p)).value() << "\n";
                return 0;
            }
            if (norm->parsed()) {
                modmath::FibPairResult res = modmath::fib_pair_normalize(qf_a, qf_b);
                std::cout << "c = " << res.c << ", d = " << res.d << ", steps = "
                          << res.trace.steps() << "\n";
                return 0;
            }
            throw InvalidParameterError("qf: missing subcommand");
        }
        if (fdtc->parsed()) {
            verify::FdtcBound b = verify::fdtc_bound(fd_p2, fd_g);
            std::cout << "bound = " << b.bound.str() << ", strict = "
                      << (b.strict ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
