// Command-line front end: builders, verifiers and closures wired into
// reproducible pipelines. Exit codes are the machine interface:
//   0 property holds / build ok, 1 property fails, 2 bad input, 3 internal.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jscheme/closure.hpp"
#include "jscheme/construct.hpp"
#include "jscheme/io.hpp"
#include "jscheme/verify.hpp"

namespace {

using namespace jscheme;

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(std::cout);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw ParseError("cannot write " + out_path);
        writer(os);
    }
}

void emit_rainbow(const std::string& out_path, const Rainbow& x) {
    if (out_path.empty())
        write_rainbow_json(std::cout, x);
    else
        write_rainbow_file(out_path, x);
}

int run_build_wfdf(int d, const std::string& diamond, const std::string& sigma,
                   const std::string& theta, uint64_t seed, const std::string& spec_path,
                   const std::string& emit_spec, bool allow_large, const std::string& out) {
    WfdfSpec spec;
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) throw ParseError("cannot open " + spec_path);
        spec = read_wfdf_spec(in);
    } else {
        if (d < 1) throw SpecInvalid("--d is required (or pass --spec)");
        spec = WfdfSpec::make(d,
                              diamond == "cyclic" ? WfdfSpec::DiamondKind::Cyclic
                                                  : WfdfSpec::DiamondKind::Random,
                              sigma == "identity" ? WfdfSpec::SigmaKind::Identity
                                                  : WfdfSpec::SigmaKind::Random,
                              theta == "plus" ? WfdfSpec::ThetaKind::Plus
                                              : WfdfSpec::ThetaKind::Random,
                              seed);
    }
    if (spec.d > 3 && !allow_large)
        throw SpecInvalid("d > 3 builds get large; pass --allow-large to confirm");
    if (!emit_spec.empty())
        emit(emit_spec, [&](std::ostream& os) { write_wfdf_spec(os, spec); });
    Rainbow x = build_wfdf(spec);
    emit_rainbow(out, x);
    std::cerr << "built scheme of order " << x.order() << ", rank " << x.rank() << "\n";
    return 0;
}

int run_build_cover(int q, int m, const std::string& spec_path, const std::string& out) {
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) throw ParseError("cannot open " + spec_path);
        CoverSpec spec = read_cover_spec(in);
        q = spec.q;
        m = spec.m;
    }
    Rainbow x = build_cyclotomic_base(q, m);
    emit_rainbow(out, x);
    std::cerr << "built base scheme of order " << x.order() << ", rank " << x.rank() << "\n";
    return 0;
}

int run_build_switch(int q, int m, int fiber, const std::string& out) {
    Rainbow base = build_cyclotomic_base(q, m);
    Rainbow x = build_switched(base, m, q, fiber);
    emit_rainbow(out, x);
    std::cerr << "built switched scheme of order " << x.order() << ", rank " << x.rank() << "\n";
    return 0;
}

int run_verify(const std::string& kind, const std::string& path, const std::string& tensor_out) {
    Rainbow x = read_rainbow_file(path, std::cerr);
    CoherenceResult res =
        (kind == "cc") ? is_coherent_configuration(x) : is_jordan_configuration(x);
    const char* what = (kind == "cc") ? "coherent configuration" : "jordan configuration";
    if (res.ok) {
        std::cerr << what << ": holds (order " << x.order() << ", rank " << x.rank() << ")\n";
        if (!tensor_out.empty())
            emit(tensor_out == "-" ? "" : tensor_out,
                 [&](std::ostream& os) { write_tensor(os, *res.tensor); });
        return 0;
    }
    const auto& w = *res.witness;
    std::cerr << what << ": fails for colors C=" << w.C << " D=" << w.D << " on class F=" << w.F
              << ": count " << w.v1 << " at (" << w.a1 << ',' << w.b1 << ") vs " << w.v2 << " at ("
              << w.a2 << ',' << w.b2 << ")\n";
    return 1;
}

int run_closure(const std::string& kind, const std::string& path, const std::string& out,
                bool full_report) {
    Rainbow x = read_rainbow_file(path, std::cerr);
    ClosureReport rep = (kind == "wl") ? wl_closure(x) : jordan_closure(x);
    if (full_report)
        emit(out, [&](std::ostream& os) { write_closure_report(os, rep); });
    else
        emit_rainbow(out, rep.result);
    std::cerr << kind << " closure: rank " << x.rank() << " -> " << rep.result.rank() << " in "
              << rep.rounds << " round(s)\n";
    return 0;
}

int run_proper(const std::string& path, const std::string& out) {
    Rainbow x = read_rainbow_file(path, std::cerr);
    PropernessReport rep = is_proper(x);
    emit(out, [&](std::ostream& os) { write_properness_report(os, rep); });
    if (rep.proper) {
        std::cerr << "proper: symmetrized closure rank " << rep.symmetrized_wl_rank << " > rank "
                  << rep.jordan_rank << " (witness color " << *rep.witness_color << ")\n";
        return 0;
    }
    std::cerr << "improper: symmetrized closure rank equals rank " << rep.jordan_rank << "\n";
    return 1;
}

int run_params(const std::string& path, const std::string& out) {
    Rainbow x = read_rainbow_file(path, std::cerr);
    StructureReport rep = x.structure_report();
    emit(out, [&](std::ostream& os) { write_structure_report(os, x, rep); });
    return 0;
}

int run_srg(const std::string& path, int color, const std::string& out) {
    Rainbow x = read_rainbow_file(path, std::cerr);
    if (color < 0 || color >= x.rank()) throw ParseError("color id out of range");
    auto params = srg_check(x.relation(color));
    if (!params) {
        std::cerr << "color " << color << " is not strongly regular\n";
        return 1;
    }
    emit(out, [&](std::ostream& os) {
        os << "{\"v\": " << params->v << ", \"k\": " << params->k << ", \"lambda\": " << params->lambda
           << ", \"mu\": " << params->mu << "}\n";
    });
    std::cerr << "srg(" << params->v << ',' << params->k << ',' << params->lambda << ','
              << params->mu << ")\n";
    return 0;
}

int run_symmetrize(const std::string& path, const std::string& out) {
    Rainbow x = read_rainbow_file(path, std::cerr);
    Rainbow sym = x.symmetrized();
    emit_rainbow(out, sym);
    std::cerr << "symmetrized: rank " << x.rank() << " -> " << sym.rank() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tooling for coherent configurations and Jordan schemes"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a scheme");
    build->require_subcommand(1);

    auto* wfdf = build->add_subcommand("wfdf", "rank-5 scheme from the hyperplane matching construction");
    int w_d = 0;
    std::string w_diamond = "cyclic", w_sigma = "identity", w_theta = "plus";
    uint64_t w_seed = 0;
    std::string w_spec, w_emit_spec, w_out;
    bool w_allow_large = false;
    wfdf->add_option("--d", w_d, "dimension of the underlying Z_3 space");
    wfdf->add_option("--diamond", w_diamond)->check(CLI::IsMember({"cyclic", "random"}));
    wfdf->add_option("--sigma", w_sigma)->check(CLI::IsMember({"identity", "random"}));
    wfdf->add_option("--theta", w_theta)->check(CLI::IsMember({"plus", "random"}));
    wfdf->add_option("--seed", w_seed, "seed for the random components");
    wfdf->add_option("--spec", w_spec, "full parameter record (JSON) instead of flags");
    wfdf->add_option("--emit-spec", w_emit_spec, "write the parameter record used");
    wfdf->add_flag("--allow-large", w_allow_large, "permit d > 3");
    wfdf->add_option("--out", w_out, "output path (default stdout)");

    auto* cover = build->add_subcommand("cover", "base scheme from the cyclotomic cover");
    int c_q = 0, c_m = 0;
    std::string c_spec, c_out;
    cover->add_option("--q", c_q, "field size (4, 8 or 16)");
    cover->add_option("--m", c_m, "index of the scalar subgroup");
    cover->add_option("--spec", c_spec, "cover parameters (JSON) instead of flags");
    cover->add_option("--out", c_out);

    auto* sw = build->add_subcommand("switch", "proper scheme obtained by switching the base");
    int s_q = 0, s_m = 0, s_fiber = 0;
    std::string s_out;
    sw->add_option("--q", s_q)->required();
    sw->add_option("--m", s_m)->required();
    sw->add_option("--fiber", s_fiber, "fiber to switch across (default 0)");
    sw->add_option("--out", s_out);

    // verify
    auto* verify = app.add_subcommand("verify", "check the coherence or Jordan condition");
    std::string v_kind, v_path, v_tensor;
    verify->add_option("--kind", v_kind)->required()->check(CLI::IsMember({"cc", "jc"}));
    verify->add_option("path", v_path)->required();
    verify->add_option("--tensor", v_tensor, "dump the intersection tensor (path or -)");

    // closure
    auto* closure = app.add_subcommand("closure", "coherent or Jordan stabilization");
    std::string cl_kind, cl_path, cl_out;
    bool cl_report = false;
    closure->add_option("--kind", cl_kind)->required()->check(CLI::IsMember({"wl", "jordan"}));
    closure->add_option("path", cl_path)->required();
    closure->add_option("--out", cl_out);
    closure->add_flag("--report", cl_report, "emit the full closure report instead of the result");

    // proper
    auto* proper = app.add_subcommand("proper", "decide properness of a symmetric Jordan configuration");
    std::string p_path, p_out;
    proper->add_option("path", p_path)->required();
    proper->add_option("--out", p_out);

    // params
    auto* params = app.add_subcommand("params", "structure report (symmetric/homogeneous/regular)");
    std::string pa_path, pa_out;
    params->add_option("path", pa_path)->required();
    params->add_option("--out", pa_out);

    // srg
    auto* srg = app.add_subcommand("srg", "strongly-regular parameters of one color");
    std::string sr_path, sr_out;
    int sr_color = -1;
    srg->add_option("path", sr_path)->required();
    srg->add_option("--color", sr_color)->required();
    srg->add_option("--out", sr_out);

    // symmetrize
    auto* symm = app.add_subcommand("symmetrize", "merge every color with its transpose");
    std::string sy_path, sy_out;
    symm->add_option("path", sy_path)->required();
    symm->add_option("--out", sy_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (wfdf->parsed())
            return run_build_wfdf(w_d, w_diamond, w_sigma, w_theta, w_seed, w_spec, w_emit_spec,
                                  w_allow_large, w_out);
        if (cover->parsed()) return run_build_cover(c_q, c_m, c_spec, c_out);
        if (sw->parsed()) return run_build_switch(s_q, s_m, s_fiber, s_out);
        if (verify->parsed()) return run_verify(v_kind, v_path, v_tensor);
        if (closure->parsed()) return run_closure(cl_kind, cl_path, cl_out, cl_report);
        if (proper->parsed()) return run_proper(p_path, p_out);
        if (params->parsed()) return run_params(pa_path, pa_out);
        if (srg->parsed()) return run_srg(sr_path, sr_color, sr_out);
        if (symm->parsed()) return run_symmetrize(sy_path, sy_out);
    } catch (const TableVerificationFailed& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
