#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "okp/analysis.hpp"
#include "okp/errors.hpp"
#include "okp/generators.hpp"
#include "okp/json_io.hpp"
#include "okp/oracles.hpp"
#include "okp/render.hpp"
#include "okp/triangulation.hpp"

using okp::json;

namespace {

struct Failure {
    std::string type;
    int code = 1;
    std::string message;
};

Failure classify(const std::exception& e) {
    if (dynamic_cast<const okp::InvalidInputError*>(&e)) {
        return {"invalid-input", 1, e.what()};
    }
    if (dynamic_cast<const okp::BoundViolationError*>(&e)) {
        return {"bound-violation", 2, e.what()};
    }
    if (dynamic_cast<const okp::OracleCapError*>(&e)) {
        return {"oracle-cap", 3, e.what()};
    }
    if (dynamic_cast<const okp::InternalCertificateError*>(&e)) {
        return {"internal-certificate", 4, e.what()};
    }
    return {"unexpected", 1, e.what()};
}

json failure_json(const Failure& f) {
    json inner;
    inner["type"] = f.type;
    inner["message"] = f.message;
    json j;
    j["error"] = inner;
    return j;
}

json read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return okp::parse_json_text(ss.str());
    }
    return okp::parse_json_file(path);
}

void emit(const json& j, bool pretty, std::ostream& out = std::cout) {
    out << j.dump(pretty ? 2 : -1) << "\n";
}

int batch_threads() {
    const char* env = std::getenv("OKP_THREADS");
    if (env == nullptr) return 1;
    try {
        return std::clamp(std::stoi(env), 1, 64);
    } catch (const std::exception&) {
        return 1;
    }
}

int run_analyze_batch(const std::string& dir, const okp::AnalysisOptions& opt,
                      bool pretty) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    {
        std::error_code ec;
        fs::directory_iterator it(dir, ec);
        if (ec) {
            throw okp::InvalidInputError("cannot read directory: " + dir);
        }
        for (const auto& entry : it) {
            if (entry.is_regular_file() && entry.path().extension() == ".json") {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.filename().string() < b.filename().string();
              });
    std::vector<json> results(files.size());
    std::vector<int> codes(files.size(), 0);
    const auto work = [&](size_t start, size_t stride) {
        for (size_t i = start; i < files.size(); i += stride) {
            try {
                const okp::ConvexDrawing d =
                    okp::drawing_from_json(okp::parse_json_file(files[i].string()));
                results[i] = okp::run_analysis(d, opt);
            } catch (const std::exception& e) {
                const Failure f = classify(e);
                results[i] = failure_json(f);
                codes[i] = f.code;
            }
        }
    };
    const size_t threads =
        std::min<size_t>(batch_threads(), std::max<size_t>(files.size(), 1));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; ++t) {
            pool.emplace_back(work, t, threads);
        }
        for (std::thread& t : pool) t.join();
    }
    json out = json::object();
    int max_code = 0;
    for (size_t i = 0; i < files.size(); ++i) {
        out[files[i].filename().string()] = results[i];
        max_code = std::max(max_code, codes[i]);
    }
    emit(out, pretty);
    return max_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convex-drawing triangulations, tree decompositions, and "
                 "separations for outer k-planar graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // ---- analyze ----
    auto* analyze = app.add_subcommand(
        "analyze", "run the full pipeline on a drawing (JSON file or - for stdin)");
    std::string input;
    std::string batch_dir;
    okp::AnalysisOptions opt;
    analyze->add_option("input", input, "drawing JSON file, or - for stdin");
    analyze->add_option("--batch", batch_dir,
                        "analyze every .json file in this directory");
    analyze->add_option("-k,--crossings", opt.k,
                        "crossing budget (default: smallest feasible)");
    analyze->add_flag("--min-k", opt.min_k_mode, "use the min-k-planar regime");
    analyze->add_flag("--checked", opt.checked,
                      "re-derive all piercer lists by brute scans");
    int exit_code = 0;
    analyze->callback([&] {
        if (!batch_dir.empty()) {
            exit_code = run_analyze_batch(batch_dir, opt, pretty);
            return;
        }
        if (input.empty()) {
            throw okp::InvalidInputError("analyze needs an input file or --batch");
        }
        const okp::ConvexDrawing d = okp::drawing_from_json(read_input(input));
        emit(okp::run_analysis(d, opt), pretty);
    });

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "emit a drawing as JSON");
    generate->require_subcommand(1);
    auto* prism = generate->add_subcommand("prism", "stacked prism with M rings of N");
    int pm = 0, pn = 0;
    prism->add_option("M", pm, "number of rings")->required();
    prism->add_option("N", pn, "vertices per ring")->required();
    prism->callback([&] { emit(okp::to_json(okp::stacked_prism(pm, pn)), pretty); });

    int rn = 0, rk = 0;
    std::uint64_t rseed = 0;
    const auto add_random = [&](const char* name, const char* help, bool min_mode) {
        auto* sub = generate->add_subcommand(name, help);
        sub->add_option("N", rn, "vertex count")->required();
        sub->add_option("K", rk, "crossing budget")->required();
        sub->add_option("SEED", rseed, "random seed")->required();
        sub->callback([&, min_mode] {
            const okp::RandomDrawing r =
                min_mode ? okp::random_outer_min_k_planar(rn, rk, rseed)
                         : okp::random_outer_k_planar(rn, rk, rseed);
            json note;
            note["achieved_lcr"] = r.achieved_lcr;
            emit(note, false, std::cerr);
            emit(okp::to_json(r.drawing), pretty);
        });
    };
    add_random("random", "random outer k-planar drawing", false);
    add_random("random-min", "random outer min-k-planar drawing", true);

    // ---- render ----
    auto* render = app.add_subcommand(
        "render", "drawing JSON to SVG, or tree decomposition JSON to DOT");
    std::string render_input, render_out, render_method;
    int render_k = -1;
    render->add_option("input", render_input, "JSON file, or - for stdin")
        ->required();
    render->add_option("-o,--out", render_out, "output file (default: stdout)");
    render
        ->add_option("--method", render_method,
                     "overlay the links of this triangulation")
        ->check(CLI::IsMember({"weak", "strong", "o2p", "min"}));
    render->add_option("-k,--crossings", render_k,
                       "crossing budget for the overlay (default: smallest)");
    render->callback([&] {
        const json j = read_input(render_input);
        std::string text;
        if (j.is_object() && j.contains("bags")) {
            text = okp::render_td_dot(okp::td_from_json(j));
        } else {
            const okp::ConvexDrawing d = okp::drawing_from_json(j);
            okp::Triangulation tri;
            const okp::Triangulation* overlay = nullptr;
            if (!render_method.empty()) {
                const okp::CrossingProfile p =
                    okp::crossing_profile(okp::augment_outer_cycle(d));
                const int k = render_k >= 0 ? render_k
                              : render_method == "min" ? p.min_k_ok_for
                                                       : p.max_count;
                if (render_method == "weak") {
                    tri = okp::triangulate_weak(d, k);
                } else if (render_method == "strong") {
                    tri = okp::triangulate_strong(d, k);
                } else if (render_method == "o2p") {
                    tri = okp::triangulate_o2p(d);
                } else {
                    tri = okp::triangulate_min(d, k);
                }
                overlay = &tri;
            }
            text = okp::render_drawing_svg(d, overlay);
        }
        if (render_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(render_out);
            if (!out) {
                throw okp::InvalidInputError("cannot write file: " + render_out);
            }
            out << text;
        }
    });

    // ---- oracle ----
    auto* oracle = app.add_subcommand(
        "oracle", "exact brute-force baselines on small drawings");
    std::string oracle_kind, oracle_input;
    int oracle_cap = -1;
    oracle->add_option("kind", oracle_kind, "tw | sep | lcr")
        ->required()
        ->check(CLI::IsMember({"tw", "sep", "lcr"}));
    oracle->add_option("input", oracle_input, "drawing JSON file, or - for stdin")
        ->required();
    oracle->add_option("--cap", oracle_cap,
                       "vertex cap (defaults: tw/sep 14, lcr 12)");
    oracle->callback([&] {
        const okp::ConvexDrawing d = okp::drawing_from_json(read_input(oracle_input));
        okp::OracleResult r;
        if (oracle_kind == "tw") {
            r = okp::brute_treewidth(d, oracle_cap >= 0 ? oracle_cap : 14);
        } else if (oracle_kind == "sep") {
            r = okp::brute_min_balanced_separation(d, oracle_cap >= 0 ? oracle_cap : 14);
        } else {
            r = okp::brute_convex_lcr(d, oracle_cap >= 0 ? oracle_cap : 12);
        }
        emit(okp::to_json(r), pretty);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        const Failure f = classify(e);
        emit(failure_json(f), false, std::cerr);
        return f.code;
    }
    return exit_code;
}
