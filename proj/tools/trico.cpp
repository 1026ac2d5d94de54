#include "CLI11.hpp"
#include "json.hpp"

#include "trico/builtins.hpp"
#include "trico/coverfile.hpp"
#include "trico/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace trico;

namespace {

int do_verify(const std::string& path, bool json, const std::string& expect,
              const std::string& chart_name, bool budget_given, unsigned long long budget) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    std::optional<Chart> chart_override;
    if (chart_name == "V0") chart_override = Chart::V0;
    else if (chart_name == "V1") chart_override = Chart::V1;

    CoverFileData data = parse_cover_file(text, chart_override);
    if (budget_given) data.spair_budget = budget;
    CoverSpec spec = normalize_to_v0(data);
    ClassificationReport rep = classify_cover(spec);

    if (json) std::cout << report_json(spec, rep, path, fnv1a64(text));
    else std::cout << report_text(spec, rep, path);

    if (!expect.empty()) {
        if (to_string(rep.label) != expect) {
            std::cerr << "expected " << expect << ", classified as " << to_string(rep.label)
                      << "\n";
            return 1;
        }
        return 0;
    }
    return rep.label == CaseLabel::Unclassified ? 1 : 0;
}

int do_repro(const std::string& name, bool json) {
    if (name == "appendix") {
        auto checks = run_appendix_checks();
        bool all = true;
        for (const auto& c : checks) all = all && c.pass;
        if (json) {
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["appendix"] = nlohmann::ordered_json::array();
            for (const auto& c : checks) {
                nlohmann::ordered_json item;
                item["name"] = c.name;
                item["pass"] = c.pass;
                if (!c.detail.empty()) item["detail"] = c.detail;
                j["appendix"].push_back(item);
            }
            j["all_pass"] = all;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& c : checks) {
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.pass) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
            }
            std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
        }
        return all ? 0 : 1;
    }

    const BuiltinCase& c = builtin_case(name);
    CoverSpec spec = normalize_to_v0(parse_cover_file(c.text));
    ClassificationReport rep = classify_cover(spec);
    if (json) std::cout << report_json(spec, rep, "builtin:" + name, fnv1a64(c.text));
    else std::cout << report_text(spec, rep, "builtin:" + name);
    if (rep.label != c.expected) {
        std::cerr << "expected " << to_string(c.expected) << ", classified as "
                  << to_string(rep.label) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple covers of the Hirzebruch surface F3 with a 3-to-1 canonical map"};
    app.require_subcommand(1);

    std::string file, expect, chart_name;
    bool verify_json = false;
    unsigned long long budget = 100000;
    auto* verify = app.add_subcommand("verify", "classify a cover description file");
    verify->add_option("file", file, "cover description file")->required();
    verify->add_flag("--json", verify_json, "machine readable report");
    verify->add_option("--expect", expect, "fail unless the classification matches this label")
        ->check(CLI::IsMember(
            {"M1", "M2", "M3", "M4_PinZ", "M4_PnotinZ", "N", "Unclassified"}));
    verify->add_option("--chart", chart_name, "chart the sections are written in")
        ->check(CLI::IsMember({"V0", "V1"}));
    auto* budget_opt =
        verify->add_option("--spair-budget", budget, "cap on reduced S-pairs per basis run");

    std::string repro_name;
    bool repro_json = false;
    auto* repro = app.add_subcommand("repro", "re-run a stored example or the appendix checks");
    repro->add_option("name", repro_name, "M1, M2, M3, M4_PinZ, M4_PnotinZ, N or appendix")
        ->required();
    repro->add_flag("--json", repro_json, "machine readable report");

    long long a = 0, b = 0;
    auto* h0cmd = app.add_subcommand("h0", "dimension of H0 of a*S + b*R");
    h0cmd->add_option("a", a, "coefficient of the negative section")->required();
    h0cmd->add_option("b", b, "coefficient of the ruling fibre")->required();

    long long ba = 0, bb = 0;
    auto* basiscmd = app.add_subcommand("basis", "monomial basis of H0 of a*S + b*R");
    basiscmd->add_option("a", ba, "coefficient of the negative section")->required();
    basiscmd->add_option("b", bb, "coefficient of the ruling fibre")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return do_verify(file, verify_json, expect, chart_name, budget_opt->count() > 0,
                             budget);
        if (repro->parsed()) return do_repro(repro_name, repro_json);
        if (h0cmd->parsed()) {
            std::cout << h0({a, b}) << "\n";
            return 0;
        }
        if (basiscmd->parsed()) {
            for (const auto& m : basis({ba, bb})) std::cout << to_string(m) << "\n";
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
