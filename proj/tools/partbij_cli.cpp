#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partbij/bijection.hpp"
#include "partbij/classes.hpp"
#include "partbij/identities.hpp"
#include "partbij/partition.hpp"
#include "partbij/series.hpp"

using json = nlohmann::json;
using namespace partbij;

namespace {

// Exit codes: 0 verified/success, 1 domain or verification failure,
// 2 usage or parse error.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string image_text(const Partition& image, bool mixed) {
    if (!mixed)
        return to_text(image);
    long long r1 = image.largest_repeated();
    if (r1 == 0)
        return to_text(image);
    std::vector<long long> prefix, tail;
    for (long long v : image.parts())
        (v > r1 ? prefix : tail).push_back(v);
    return to_mixed_text(Partition::from_nonincreasing(prefix),
                         Partition::from_nonincreasing(tail));
}

struct NamedCheck {
    std::string name;
    std::function<VerificationReport(int)> run;
};

std::vector<NamedCheck> registered_checks() {
    std::vector<NamedCheck> checks;
    for (IdentityId id : all_identities())
        checks.push_back({identity_name(id), [id](int n) { return verify_identity(id, n); }});
    checks.push_back({"fsys", [](int n) { return check_qdifference_system('F', n); }});
    checks.push_back({"esys", [](int n) { return check_qdifference_system('E', n); }});
    checks.push_back({"ef-equal", [](int n) { return check_ef_equal(n); }});
    checks.push_back({"t-gf", [](int n) { return check_t_gf(n); }});
    return checks;
}

int run_verify(const std::string& id, int order, bool as_json) {
    std::vector<NamedCheck> to_run;
    auto checks = registered_checks();
    if (id == "all") {
        to_run = checks;
    } else {
        for (auto& c : checks) {
            if (c.name == id)
                to_run.push_back(c);
        }
        if (to_run.empty()) {
            std::cerr << "unknown check '" << id << "'; known: all";
            for (auto& c : checks)
                std::cerr << ' ' << c.name;
            std::cerr << '\n';
            return kUsage;
        }
    }
    bool all_ok = true;
    json out = json::array();
    for (auto& c : to_run) {
        VerificationReport rep = c.run(order);
        all_ok = all_ok && rep.verified;
        if (as_json) {
            json j{{"check", c.name},
                   {"order", rep.order},
                   {"status", rep.verified ? "verified" : "mismatch"}};
            if (!rep.verified) {
                j["mismatch_exponent"] = rep.mismatch_exponent;
                if (rep.mismatch_a_degree >= 0)
                    j["mismatch_a_degree"] = rep.mismatch_a_degree;
                j["lhs"] = rep.lhs;
                j["rhs"] = rep.rhs;
            }
            out.push_back(std::move(j));
        } else {
            std::cout << rep.describe() << '\n';
        }
    }
    if (as_json)
        std::cout << out.dump() << '\n';
    return all_ok ? kOk : kFail;
}

int run_map(const std::string& text, const std::string& variant, bool inverse, bool as_json) {
    Partition input = parse_partition(text);
    Partition image;
    bool mixed = false;
    if (variant == "f") {
        image = inverse ? f_inverse(input) : f_forward(input);
        mixed = !inverse;
    } else if (variant == "fbar") {
        image = inverse ? fbar_inverse(input) : fbar(input);
    } else {
        std::cerr << "unknown variant '" << variant << "' (expected f or fbar)\n";
        return kUsage;
    }
    std::string rendered = image_text(image, mixed);
    if (as_json)
        std::cout << json{{"source", to_text(input)}, {"image", rendered}}.dump() << '\n';
    else
        std::cout << rendered << '\n';
    return kOk;
}

int run_diagram(const std::string& text, const std::string& variant, bool as_json) {
    Partition input = parse_partition(text);
    SDiagram diag;
    if (variant == "s") {
        diag = s_diagram(input);
    } else if (variant == "sbar") {
        diag = sbar_diagram(input);
    } else {
        std::cerr << "unknown variant '" << variant << "' (expected s or sbar)\n";
        return kUsage;
    }
    if (as_json) {
        json rows = json::array();
        for (const auto& row : diag.rows)
            rows.push_back(row);
        std::cout << rows.dump() << '\n';
    } else {
        std::cout << diag.render();
    }
    return kOk;
}

int run_enumerate(const std::string& spec_text, long long n, bool as_json) {
    ClassSpec spec = ClassSpec::parse(spec_text);
    auto members = enumerate_class(n, spec);
    if (as_json) {
        json out = json::array();
        for (const auto& p : members)
            out.push_back(to_text(p));
        std::cout << json{{"class", spec.name()}, {"n", n}, {"partitions", out},
                          {"count", members.size()}}
                         .dump()
                  << '\n';
    } else {
        for (const auto& p : members)
            std::cout << to_text(p) << '\n';
        std::cout << "count " << members.size() << '\n';
    }
    return kOk;
}

int run_table(const std::string& pair, long long n, bool as_json) {
    struct PairSpec {
        ClassSpec source, target;
        Partition (*map)(const Partition&);
    };
    std::map<std::string, PairSpec> pairs{
        {"g2-a2", {ClassSpec::gordon(3, 2), ClassSpec::a2(), f_forward}},
        {"g1-a1", {ClassSpec::gordon(3, 1), ClassSpec::a1(), f_forward}},
        {"g3-a3", {ClassSpec::gordon(3, 3), ClassSpec::a3(), fbar}},
        {"b1-t", {ClassSpec::bressoud(3, 1), ClassSpec::t(), f_forward}},
    };
    auto it = pairs.find(pair);
    if (it == pairs.end()) {
        std::cerr << "unknown pair '" << pair << "'; known:";
        for (auto& [k, v] : pairs)
            std::cerr << ' ' << k;
        std::cerr << '\n';
        return kUsage;
    }
    auto sources = enumerate_class(n, it->second.source);
    auto targets = enumerate_class(n, it->second.target);
    std::vector<Partition> images;
    json rows = json::array();
    for (const auto& p : sources) {
        Partition image = it->second.map(p);
        images.push_back(image);
        if (as_json)
            rows.push_back({{"source", to_text(p)}, {"image", to_text(image)}});
        else
            std::cout << to_text(p) << " -> " << to_text(image) << '\n';
    }
    std::sort(images.begin(), images.end());
    auto sorted_targets = targets;
    std::sort(sorted_targets.begin(), sorted_targets.end());
    bool counts_equal = sources.size() == targets.size();
    bool image_equals_target = images == sorted_targets;
    if (as_json) {
        std::cout << json{{"pair", pair},
                          {"n", n},
                          {"rows", rows},
                          {"count", sources.size()},
                          {"counts_equal", counts_equal},
                          {"image_equals_target", image_equals_target}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "count " << sources.size() << "; counts_equal "
                  << (counts_equal ? "yes" : "no") << "; image_equals_target "
                  << (image_equals_target ? "yes" : "no") << '\n';
    }
    return counts_equal && image_equals_target ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition bijections and q-series identity verification"};
    app.require_subcommand(1);

    int order = 60;
    bool as_json = false;
    bool inverse = false;
    std::string arg_id, arg_partition, arg_map_variant, arg_diag_variant, arg_class, arg_pair;
    long long arg_n = 0;

    auto* verify = app.add_subcommand("verify", "Verify a registered identity or suite");
    verify->add_option("id", arg_id, "identity id or 'all'")->required();
    verify->add_option("--order", order, "truncation order");
    verify->add_flag("--json", as_json, "JSON output");

    auto* map_cmd = app.add_subcommand("map", "Apply a bijection to a partition");
    map_cmd->add_option("partition", arg_partition, "partition text")->required();
    map_cmd->add_option("--variant", arg_map_variant, "f or fbar")->default_val("f");
    map_cmd->add_flag("--inverse", inverse, "apply the inverse map");
    map_cmd->add_flag("--json", as_json, "JSON output");

    auto* diagram = app.add_subcommand("diagram", "Print the diagram of a partition");
    diagram->add_option("partition", arg_partition, "partition text")->required();
    diagram->add_option("--variant", arg_diag_variant, "s or sbar")->default_val("s");
    diagram->add_flag("--json", as_json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "List class members of weight n");
    enumerate->add_option("class", arg_class, "class spec")->required();
    enumerate->add_option("n", arg_n, "weight")->required();
    enumerate->add_flag("--json", as_json, "JSON output");

    auto* table = app.add_subcommand("table", "Bijection table for one weight");
    table->add_option("pair", arg_pair, "g2-a2, g1-a1, g3-a3, or b1-t")->required();
    table->add_option("n", arg_n, "weight")->required();
    table->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(arg_id, order, as_json);
        if (map_cmd->parsed())
            return run_map(arg_partition, arg_map_variant, inverse, as_json);
        if (diagram->parsed())
            return run_diagram(arg_partition, arg_diag_variant, as_json);
        if (enumerate->parsed())
            return run_enumerate(arg_class, arg_n, as_json);
        if (table->parsed())
            return run_table(arg_pair, arg_n, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
