#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latmix/errors.hpp"
#include "latmix/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCapExceeded = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw latmix::ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "text";
    std::size_t max_subsets = latmix::kDefaultMaxSubsets;
    std::uint64_t max_lattice_points = latmix::kDefaultMaxLatticePoints;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("input", opts.input, "input file (JSON or text format), '-' for stdin");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-subsets", opts.max_subsets, "cap on enumerated subsets (2^k)");
    cmd->add_option("--max-lattice-points", opts.max_lattice_points,
                    "cap on lattice point bounding boxes");
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const nlohmann::json& body, const latmix::CollectionDocument& doc,
          const std::string& text, const std::string& format,
          std::chrono::steady_clock::time_point start) {
    if (format == "json") {
        std::cout << latmix::report_document(body, doc, elapsed_ms(start)).dump(2) << "\n";
    } else {
        for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Support-collection analysis: consistency, essential subcollections, and "
                 "discrete invariants of generic consistent Laurent systems"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, invariants_opts, structure_opts, mv_opts;
    auto* analyze = app.add_subcommand("analyze", "defects, essential subcollection, consistency");
    add_common(analyze, analyze_opts);
    auto* invariants = app.add_subcommand("invariants", "full invariant report");
    add_common(invariants, invariants_opts);
    auto* structure = app.add_subcommand("structure", "zero set component structure");
    add_common(structure, structure_opts);
    auto* mixed_volume =
        app.add_subcommand("mixed-volume", "BKK number of the hulls of the listed supports");
    add_common(mixed_volume, mv_opts);

    auto* check = app.add_subcommand("check", "run the oracle cross-validation suite");
    latmix::OracleConfig config;
    std::string check_format = "text";
    check->add_option("--seed", config.random_seed, "random seed");
    check->add_option("--instances", config.instance_count, "instances per oracle");
    check->add_option("--format", check_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (analyze->parsed()) {
            auto doc = latmix::parse_collection(read_input(analyze_opts.input));
            auto rep = latmix::build_defect_report(doc.collection, analyze_opts.max_subsets);
            emit(latmix::defect_report_to_json(rep, doc.collection.size()), doc,
                 latmix::defect_report_to_text(rep), analyze_opts.format, start);
        } else if (invariants->parsed()) {
            auto doc = latmix::parse_collection(read_input(invariants_opts.input));
            auto rep = latmix::full_report(doc.collection, invariants_opts.max_subsets,
                                           invariants_opts.max_lattice_points);
            emit(latmix::invariant_report_to_json(rep), doc,
                 latmix::invariant_report_to_text(rep), invariants_opts.format, start);
        } else if (structure->parsed()) {
            auto doc = latmix::parse_collection(read_input(structure_opts.input));
            auto s = latmix::zero_set_structure(doc.collection, structure_opts.max_subsets);
            emit(latmix::structure_to_json(s), doc, latmix::structure_to_text(s),
                 structure_opts.format, start);
        } else if (mixed_volume->parsed()) {
            auto doc = latmix::parse_collection(read_input(mv_opts.input));
            const auto& a = doc.collection;
            if (a.size() != a.ambient_dim)
                throw latmix::PreconditionError(
                    "mixed-volume: need exactly n supports in dimension n, got " +
                    std::to_string(a.size()) + " in dimension " + std::to_string(a.ambient_dim));
            std::vector<latmix::LatticePolytope> polys;
            for (const auto& s : a.supports) {
                std::vector<std::vector<latmix::Int>> pts;
                for (std::size_t p = 0; p < s.rows; ++p) pts.push_back(s.row(p));
                polys.push_back(latmix::convex_hull_int(pts, a.ambient_dim));
            }
            latmix::Int bkk = latmix::bkk_number(polys);
            if (mv_opts.format == "json") {
                nlohmann::json body;
                body["bkk_number"] = bkk.str();
                emit(body, doc, "", "json", start);
            } else {
                std::cout << bkk << "\n";
            }
        } else if (check->parsed()) {
            auto results = latmix::run_check_suite(config);
            bool ok = true;
            if (check_format == "json") {
                nlohmann::json body = nlohmann::json::array();
                for (const auto& r : results) {
                    nlohmann::json e;
                    e["name"] = r.name;
                    e["instances"] = r.instances;
                    e["failures"] = r.failures;
                    if (!r.first_failure.empty()) e["first_failure"] = r.first_failure;
                    body.push_back(std::move(e));
                    ok = ok && r.failures == 0;
                }
                std::cout << body.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    std::cout << (r.failures == 0 ? "PASS" : "FAIL") << "  " << r.name << "  ("
                              << r.instances << " instances";
                    if (r.failures) std::cout << ", " << r.failures << " failures";
                    std::cout << ")\n";
                    if (!r.first_failure.empty())
                        std::cout << "      first failing instance: " << r.first_failure << "\n";
                    ok = ok && r.failures == 0;
                }
            }
            return ok ? kExitOk : 1;
        }
    } catch (const latmix::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const latmix::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const latmix::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
