#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "corrpack/compose.hpp"
#include "corrpack/error.hpp"
#include "corrpack/instance_gen.hpp"
#include "corrpack/json_io.hpp"
#include "corrpack/lowerbound.hpp"
#include "corrpack/oracle.hpp"
#include "corrpack/planar.hpp"

namespace {

using corrpack::InputError;
using nlohmann::json;

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        corrpack::write_json_file(out, j);
}

corrpack::InstanceFile load_instance(const std::string& path) {
    return corrpack::instance_from_json(corrpack::read_json_file(path));
}

int run_selftest() {
    using namespace corrpack;
    const std::array<ColorSet, 3> canonical = {ColorSet::of({1, 2, 3, 4}),
                                               ColorSet::of({1, 2, 5, 6}),
                                               ColorSet::of({3, 4, 5, 6})};
    int cases = 0;
    for (int f1 : {1, 3})
        for (int f2 : canonical[1].to_vector())
            for (int f3 : canonical[2].to_vector()) {
                if (f1 == f2 || f1 == f3 || f2 == f3) continue;
                const std::array<int, 3> forbidden = {f1, f2, f3};
                const ReservedPartition table =
                    reserved_partition_table(canonical, forbidden);
                const ReservedPartition search =
                    reserved_partition_search(canonical, forbidden);
                ColorSet all;
                for (int j = 0; j < 3; ++j) {
                    if (table.parts[j].size() != 2) return 1;
                    if (table.parts[j].contains(forbidden[j])) return 1;
                    if (table.parts[j] != (table.parts[j] & canonical[j])) return 1;
                    all |= table.parts[j];
                    if (search.parts[j].size() != 2) return 1;
                }
                if (all != ColorSet::full(6)) return 1;
                ++cases;
            }
    const std::array<ColorSet, 3> example = {ColorSet::of({1, 2, 4, 6}),
                                             ColorSet::of({1, 3, 4, 5}),
                                             ColorSet::of({2, 3, 5, 6})};
    const ReservedPartition got = reserved_partition_table(example, {4, 1, 6});
    const ReservedPartition want{{ColorSet::of({1, 6}), ColorSet::of({4, 5}),
                                  ColorSet::of({2, 3})}};
    if (!(got == want)) return 1;

    const NearTriInstance inst =
        make_fixture_instance(FixtureKind::Wheel, 6, 2024);
    const Packing packing = pack_near_triangulation(inst);
    if (!check_packing(inst.emb.g, inst.cover, packing, 3).ok()) return 1;

    const WitnessInfo wit = refute_candidate(candidate_by_rank(0));
    for (const ColorSet& res : wit.residual)
        if (res != ColorSet::of({4, 5})) return 1;

    std::cout << "selftest ok (" << cases << " tabulated partitions, wheel "
              << "packing, first refutation)\n";
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{
        "Disjoint correspondence colorings of clique-sums of planar graphs "
        "and Wagner graphs: constructive 3-packings from 6-covers and the "
        "matching 5-cover lower bound"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::string input, tree_path, packing_path, out;
    int exit_code = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = corrpack::Budget{}.max_nodes;
    int jobs = 1;
    bool verbose = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out, "write the result JSON here (default stdout)");
        cmd->add_flag("--verbose", verbose, "trace progress to stderr");
    };

    // pack
    auto* pack = app.add_subcommand(
        "pack", "compute three disjoint colorings of an instance");
    pack->add_option("--input", input, "instance JSON")->required();
    pack->add_option("--tree", tree_path, "clique-sum tree JSON");
    add_common(pack);
    pack->callback([&] {
        const auto inst = load_instance(input);
        corrpack::Packing packing;
        std::ostream* trace = verbose ? &std::cerr : nullptr;
        if (!tree_path.empty()) {
            const auto tree =
                corrpack::tree_from_json(corrpack::read_json_file(tree_path));
            packing = corrpack::pack_clique_sum(tree, inst.g, inst.cover, trace);
        } else {
            if (!inst.dressing)
                throw InputError(
                    "instance is not a dressed near-triangulation; pass --tree "
                    "for plain graph+cover instances");
            packing = corrpack::pack_near_triangulation(*inst.dressing, trace);
        }
        emit(corrpack::packing_to_json(packing), out);
    });

    // verify
    int required_s = -1;
    auto* verify = app.add_subcommand(
        "verify", "check a packing against an instance; exit 0 iff clean");
    verify->add_option("--input", input, "instance JSON")->required();
    verify->add_option("--packing", packing_path, "packing JSON")->required();
    verify->add_option("--s", required_s,
                       "require this many total colorings (default: the "
                       "packing's own count; 0 allows partial colorings)");
    add_common(verify);
    verify->callback([&] {
        const auto inst = load_instance(input);
        const auto packing =
            corrpack::packing_from_json(corrpack::read_json_file(packing_path));
        const int s = required_s < 0 ? packing.s : required_s;
        const auto report = corrpack::check_packing(inst.g, inst.cover, packing, s);
        emit(corrpack::report_to_json(report), out);
        if (!report.ok()) exit_code = 1;
    });

    // gen
    std::string kind = "key";
    int size = 6;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--kind", kind,
                    "wheel | double-wheel | stacked | grid | key | tree");
    gen->add_option("--size", size, "fixture size parameter");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--tree", tree_path, "where to write the tree JSON (kind=tree)");
    add_common(gen);
    gen->callback([&] {
        using namespace corrpack;
        if (kind == "tree") {
            if (tree_path.empty())
                throw InputError("--tree is required for kind=tree");
            const TreeInstance inst = make_tree_instance(seed);
            write_json_file(tree_path, tree_to_json(inst.tree));
            emit(instance_to_json(make_instance_file(inst.declared, inst.cover)),
                 out);
            return;
        }
        NearTriInstance inst;
        if (kind == "key")
            inst = make_key_instance(seed);
        else
            inst = make_fixture_instance(fixture_kind_from_string(kind), size, seed);
        emit(instance_to_json(make_instance_file(std::move(inst))), out);
    });

    // lowerbound
    auto* lb = app.add_subcommand(
        "lowerbound", "the 5-cover construction that defeats 3-packings");
    lb->require_subcommand(1);
    int samples = 3;
    auto* lb_verify = lb->add_subcommand(
        "verify", "refute all 216000 disjoint W-assignments");
    lb_verify->add_option("--jobs", jobs, "worker threads");
    lb_verify->add_option("--samples", samples, "witnesses to include");
    add_common(lb_verify);
    lb_verify->callback([&] {
        const auto cert = corrpack::verify_nonpackable(jobs, samples);
        emit(corrpack::certificate_to_json(cert), out);
        std::cerr << "checked " << cert.candidates_checked << ", refuted "
                  << cert.candidates_refuted << "\n";
        if (!cert.all_refuted) exit_code = 1;
    });
    std::uint64_t rank = 0;
    auto* lb_refute = lb->add_subcommand(
        "refute", "refute one W-assignment by candidate rank");
    lb_refute->add_option("--rank", rank, "candidate rank, 0..215999")->required();
    add_common(lb_refute);
    lb_refute->callback([&] {
        const auto wit = corrpack::refute_candidate(corrpack::candidate_by_rank(rank));
        json j = corrpack::witness_to_json(wit);
        j["rank"] = rank;
        emit(j, out);
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle->require_subcommand(1);
    int s_count = 3, t_colors = 3;

    auto* oe = oracle->add_subcommand("enumerate", "all proper colorings");
    oe->add_option("--input", input, "instance JSON")->required();
    oe->add_option("--budget", budget, "search node allowance");
    add_common(oe);
    oe->callback([&] {
        const auto inst = load_instance(input);
        const auto colorings =
            corrpack::enumerate_colorings(inst.g, inst.cover, {budget});
        emit(json{{"count", colorings.size()}, {"colorings", colorings}}, out);
    });

    auto* of = oracle->add_subcommand("find-packing", "first s-packing if any");
    of->add_option("--input", input, "instance JSON")->required();
    of->add_option("--s", s_count, "colorings wanted");
    of->add_option("--budget", budget, "search node allowance");
    add_common(of);
    of->callback([&] {
        const auto inst = load_instance(input);
        const auto found =
            corrpack::find_packing_exhaustive(inst.g, inst.cover, s_count, {budget});
        json j{{"found", found.has_value()}};
        if (found) j["packing"] = corrpack::packing_to_json(*found);
        emit(j, out);
    });

    auto* ob = oracle->add_subcommand(
        "bad-cover", "first t-cover of a graph with no s-packing");
    ob->add_option("--input", input, "instance JSON (only its graph is used)")
        ->required();
    ob->add_option("--t", t_colors, "colors per vertex");
    ob->add_option("--s", s_count, "colorings wanted");
    ob->add_option("--budget", budget, "search node allowance");
    add_common(ob);
    ob->callback([&] {
        const auto inst = load_instance(input);
        const auto found =
            corrpack::search_bad_cover(inst.g, t_colors, s_count, {budget});
        json j{{"found", found.has_value()}};
        if (found) j["matchings"] = corrpack::matchings_to_json(*found);
        emit(j, out);
    });

    auto* os = oracle->add_subcommand(
        "second-coloring", "greedy disjoint mate of a given coloring");
    os->add_option("--input", input, "instance JSON with a 5-cover")->required();
    os->add_option("--packing", packing_path, "packing JSON with s = 1")
        ->required();
    add_common(os);
    os->callback([&] {
        const auto inst = load_instance(input);
        const auto given =
            corrpack::packing_from_json(corrpack::read_json_file(packing_path));
        if (given.s != 1 || !given.total())
            throw InputError("--packing must hold exactly one total coloring");
        const auto phi2 =
            corrpack::second_coloring_greedy(inst.g, inst.cover, given.colorings[0]);
        corrpack::Packing both;
        both.s = 2;
        both.colorings = {given.colorings[0], phi2};
        emit(corrpack::packing_to_json(both), out);
    });

    // selftest
    auto* st = app.add_subcommand("selftest", "built-in fixture checks");
    st->callback([&] { exit_code = run_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const corrpack::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const corrpack::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
