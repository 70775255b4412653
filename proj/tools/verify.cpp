#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "mink/suites.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<mink::VerificationReport> run_all(std::uint64_t seed, int count,
                                              const std::string& scenario_dir) {
    std::vector<mink::VerificationReport> reports = mink::identity_suite(seed, count);

    if (!fs::is_directory(scenario_dir))
        throw mink::ValidationError("scenario directory not found: " + scenario_dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(scenario_dir))
        if (entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw mink::ValidationError("no scenario files in: " + scenario_dir);

    for (const fs::path& file : files) {
        mink::Scenario sc = mink::load_scenario(file.string());
        const std::string prefix = file.stem().string() + ":";
        for (auto suite : {mink::theorem1_suite(sc), mink::charge_suite(sc)})
            for (mink::VerificationReport& rep : suite) {
                rep.name = prefix + rep.name;
                reports.push_back(std::move(rep));
            }
    }

    for (const char* a0 : {"1/10", "-1/4", "3/7"})
        for (mink::VerificationReport& rep :
             mink::dispersion_suite(mink::parse_rational(a0))) {
            rep.name = std::string("A0=") + a0 + ":" + rep.name;
            reports.push_back(std::move(rep));
        }

    return reports;
}

void write_report_file(const std::string& command, const nlohmann::json& doc) {
    const char* dir = std::getenv("VERIFY_REPORT_DIR");
    if (dir == nullptr || *dir == '\0')
        return;
    fs::create_directories(dir);
    fs::path path = fs::path(dir) / (command + ".json");
    std::ofstream out(path);
    if (!out)
        throw mink::ValidationError("cannot write report file: " + path.string());
    out << doc.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier: polarised Maxwell system, two-row operator "
                 "equivalence, charge invariant, dispersion branches"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int count = 50;
    std::string scenario_file;
    std::string a0_text;
    std::string scenario_dir = "scenarios";

    CLI::App* identities =
        app.add_subcommand("identities", "seeded sweep of the algebra/calculus identities");
    identities->add_option("--seed", seed, "RNG seed")->capture_default_str();
    identities->add_option("--count", count, "instances per identity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* theorem1 = app.add_subcommand(
        "theorem1", "component identity + residual equivalence for a scenario file");
    theorem1->add_option("file", scenario_file, "scenario JSON file")->required();

    CLI::App* charge_cmd = app.add_subcommand(
        "charge", "charge value, frame/gauge invariance and conjugation flip");
    charge_cmd->add_option("file", scenario_file, "scenario JSON file")->required();

    CLI::App* dispersion = app.add_subcommand(
        "dispersion", "solve both sign branches at a constant electric potential");
    dispersion->add_option("--A0", a0_text, "potential strength, exact rational p/q")
        ->required();

    CLI::App* all = app.add_subcommand(
        "all", "identities, every bundled scenario, and a dispersion sweep");
    all->add_option("--seed", seed, "RNG seed")->capture_default_str();
    all->add_option("--count", count, "instances per identity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    all->add_option("--scenario-dir", scenario_dir, "directory of scenario files")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems exit 2, --help exits 0
    }

    try {
        std::string command;
        std::vector<mink::VerificationReport> reports;
        if (identities->parsed()) {
            command = "identities";
            reports = mink::identity_suite(seed, count);
        } else if (theorem1->parsed()) {
            command = "theorem1";
            reports = mink::theorem1_suite(mink::load_scenario(scenario_file));
        } else if (charge_cmd->parsed()) {
            command = "charge";
            reports = mink::charge_suite(mink::load_scenario(scenario_file));
        } else if (dispersion->parsed()) {
            command = "dispersion";
            reports = mink::dispersion_suite(mink::parse_rational(a0_text));
        } else {
            command = "all";
            reports = run_all(seed, count, scenario_dir);
        }
        mink::sort_reports(reports);

        nlohmann::json body = nlohmann::json::array();
        int passed = 0, failed = 0, errored = 0;
        for (const mink::VerificationReport& rep : reports) {
            body.push_back(rep.to_json());
            switch (rep.status) {
            case mink::CheckStatus::Pass: ++passed; break;
            case mink::CheckStatus::Fail: ++failed; break;
            case mink::CheckStatus::Error: ++errored; break;
            }
        }
        nlohmann::json doc{{"command", command}, {"reports", body}};

        std::cout << doc.dump(2) << "\n";
        write_report_file(command, doc);
        std::cerr << reports.size() << " checks: " << passed << " passed, " << failed
                  << " failed, " << errored << " errored\n";
        return failed == 0 && errored == 0 ? 0 : 1;
    } catch (const mink::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
