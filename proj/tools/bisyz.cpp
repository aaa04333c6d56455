// Command-line surface for the bigraded syzygy toolkit: classification,
// syzygy generators, Hilbert tables, the degree picture, free resolutions,
// seeded instance generation, and the all-in-one verifier.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bisyz/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitExhausted = 4;

bisyz::InputTriple load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw bisyz::ParseError("cannot open '" + path + "'");
    return bisyz::parse_instance(in);
}

bisyz::BiDeg parse_box(const std::string& text)
{
    std::size_t sep = text.find_first_of("xX");
    if (sep == std::string::npos) throw bisyz::ParseError("box must look like 9x6");
    try {
        long m = std::stol(text.substr(0, sep));
        long n = std::stol(text.substr(sep + 1));
        if (m < 0 || n < 0) throw bisyz::ParseError("box components must be >= 0");
        return {m, n};
    } catch (const std::logic_error&) {
        throw bisyz::ParseError("box must look like 9x6");
    }
}

int cmd_classify(const std::string& file)
{
    bisyz::InputTriple p = load_instance(file);
    bisyz::InstanceClass cls = bisyz::classify(p);
    std::cout << "class: " << bisyz::to_string(cls) << "\n"
              << "resultant: " << bisyz::to_string(bisyz::resultant_21(p).value) << "\n";
    return cls == bisyz::InstanceClass::Degenerate ? kExitDegenerate : kExitPass;
}

int cmd_syzygies(const std::string& file)
{
    using namespace bisyz;
    InputTriple p = load_instance(file);
    if (classify(p) == InstanceClass::Degenerate) {
        std::cerr << "degenerate instance: no syzygy generators\n";
        return kExitDegenerate;
    }
    SyzGens gens = min_generators(p);
    std::cout << "minimal generators (" << gens.gens.size() << "):\n";
    for (const auto& g : gens.gens)
        std::cout << "  " << g.ambient().str() << "  " << g.str()
                  << "  is_syzygy: " << (is_syzygy(p, g) ? "true" : "false") << "\n";
    auto [c1, c2] = syzygies_33(p);
    std::cout << "C^(1) = " << c1.str() << "  is_syzygy: " << (is_syzygy(p, c1) ? "true" : "false")
              << "\n"
              << "C^(2) = " << c2.str() << "  is_syzygy: " << (is_syzygy(p, c2) ? "true" : "false")
              << "\n";
    return kExitPass;
}

int cmd_hilbert(const std::string& file, const std::string& box_text, bool csv)
{
    using namespace bisyz;
    InputTriple p = load_instance(file);
    if (classify(p) == InstanceClass::Degenerate) {
        std::cerr << "degenerate instance: no Hilbert predictions\n";
        return kExitDegenerate;
    }
    DimTable t = dim_table(p, parse_box(box_text));
    std::cout << (csv ? render_hilbert_csv(t) : render_hilbert_table(t));
    if (!t.all_match()) {
        std::cerr << "mismatch at " << t.first_mismatch()->str() << "\n";
        return kExitMismatch;
    }
    return kExitPass;
}

int cmd_picture(const std::string& file, const std::string& box_text)
{
    using namespace bisyz;
    InputTriple p = load_instance(file);
    if (classify(p) == InstanceClass::Degenerate) {
        std::cerr << "degenerate instance: no syzygy picture\n";
        return kExitDegenerate;
    }
    std::cout << render_picture(dim_table(p, parse_box(box_text)));
    return kExitPass;
}

int cmd_resolution(const std::string& file, const std::string& box_text, bool verify)
{
    using namespace bisyz;
    InputTriple p = load_instance(file);
    if (classify(p) == InstanceClass::Degenerate) {
        std::cerr << "degenerate instance: no free resolution\n";
        return kExitDegenerate;
    }
    GradedComplex cx = build_resolution(p);
    std::cout << "betti ranks of R/I:";
    for (auto r : betti_ranks(cx)) std::cout << ' ' << r;
    std::cout << "\nresolution of I:\n";
    for (std::size_t i = 1; i < cx.mods.size(); ++i) {
        std::cout << "  F" << i - 1 << ":";
        for (BiDeg s : cx.mods[i].sorted_shifts()) std::cout << ' ' << s.str();
        std::cout << '\n';
    }
    if (verify) {
        VerifyReport vr = verify_complex(cx, p, parse_box(box_text));
        std::cout << "verify: d2_zero=" << vr.d2_zero << " exactness=" << vr.exactness
                  << " H_I=" << vr.h_agree << " minimal=" << vr.minimal
                  << " shape=" << vr.shape_ok << " euler=" << vr.euler_ok << '\n';
        if (vr.first_fail) std::cout << "first failure: " << vr.detail << '\n';
        if (!vr.pass()) return kExitMismatch;
    }
    return kExitPass;
}

int cmd_gen(const std::string& cls_text, std::uint64_t seed, long bound,
            const std::string& out_path)
{
    using namespace bisyz;
    InstanceClass target =
        cls_text == "generic" ? InstanceClass::Generic : InstanceClass::NonGeneric;
    InputTriple p = gen_instance(target, seed, bound);
    std::string text = format_instance(p);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << text;
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string& file, const std::string& box_text, std::uint64_t seed)
{
    using namespace bisyz;
    InputTriple p = load_instance(file);
    if (classify(p) == InstanceClass::Degenerate) {
        std::cerr << "degenerate instance: nothing to verify\n";
        return kExitDegenerate;
    }
    RunReport rep = run_full_verification(p, parse_box(box_text), seed);
    std::cout << "class: " << to_string(rep.cls) << "\n"
              << "resultant: " << to_string(rep.resultant) << "\n"
              << "generator degrees:";
    for (BiDeg d : rep.gen_degrees) std::cout << ' ' << d.str();
    std::cout << "\n";
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
    return rep.pass() ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact syzygy computations for triples of bidegree-(2,1) forms on P1 x P1"};
    app.require_subcommand(1);

    std::string file, box = "9x6", out_path, cls_text = "generic";
    std::uint64_t seed = 1;
    long bound = 5;
    bool csv = false, verify_flag = false;

    auto* c_classify = app.add_subcommand("classify", "classification and resultant");
    c_classify->add_option("file", file)->required();

    auto* c_syz = app.add_subcommand("syzygies", "minimal generators of the syzygy module");
    c_syz->add_option("file", file)->required();

    auto* c_hilb = app.add_subcommand("hilbert", "predicted vs oracle dimension table");
    c_hilb->add_option("file", file)->required();
    c_hilb->add_option("--box", box, "verification box MxN");
    c_hilb->add_flag("--csv", csv, "emit CSV");

    auto* c_pic = app.add_subcommand("picture", "ASCII picture of the syzygy module");
    c_pic->add_option("file", file)->required();
    c_pic->add_option("--box", box, "picture box MxN");

    auto* c_res = app.add_subcommand("resolution", "minimal free resolution of the ideal");
    c_res->add_option("file", file)->required();
    c_res->add_option("--box", box, "verification box MxN");
    c_res->add_flag("--verify", verify_flag, "run the six resolution checks");

    auto* c_gen = app.add_subcommand("gen", "write a seeded random instance");
    c_gen->add_option("--class", cls_text, "generic|nongeneric")
        ->check(CLI::IsMember({"generic", "nongeneric"}));
    c_gen->add_option("--seed", seed, "RNG seed");
    c_gen->add_option("--bound", bound, "coefficient bound");
    c_gen->add_option("-o,--out", out_path, "output file (stdout if omitted)");

    auto* c_ver = app.add_subcommand("verify", "run every check on an instance");
    c_ver->add_option("file", file)->required();
    c_ver->add_option("--box", box, "verification box MxN");
    c_ver->add_option("--seed", seed, "seed for randomized property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(file);
        if (c_syz->parsed()) return cmd_syzygies(file);
        if (c_hilb->parsed()) return cmd_hilbert(file, box, csv);
        if (c_pic->parsed()) return cmd_picture(file, box);
        if (c_res->parsed()) return cmd_resolution(file, box, verify_flag);
        if (c_gen->parsed()) return cmd_gen(cls_text, seed, bound, out_path);
        if (c_ver->parsed()) return cmd_verify(file, box, seed);
    } catch (const bisyz::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bisyz::GenerationExhausted& e) {
        std::cerr << "generation exhausted: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const bisyz::DegenerateInput& e) {
        std::cerr << "degenerate instance: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const bisyz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitParse;
}
