// Command-line front end: run registered validators on structure-definition
// files and regenerate the canonical fixture gallery.
#include <CLI11.hpp>
#include <json.hpp>

#include <jetgeom/checks.hpp>
#include <jetgeom/error.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

struct FileResult {
    std::string file;
    bool ok = false;
    std::vector<std::string> notes;
    double millis = 0.0;
};

int run_checks(const std::string& name, const std::vector<std::string>& files,
               const std::string& format, unsigned seed) {
    try {
        jetgeom::check_description(name);
    } catch (const jetgeom::Error& e) {
        std::cerr << "error: " << e.what() << " (see list-checks)\n";
        return 2;
    }
    std::vector<FileResult> results;
    for (const std::string& f : files) {
        std::vector<jetgeom::StructObject> objs;
        try {
            objs = jetgeom::read_structfile_file(f);
        } catch (const jetgeom::ParseError& e) {
            std::cerr << "parse error at byte " << e.offset << ": " << e.what() << "\n";
            return 2;
        } catch (const jetgeom::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        FileResult r;
        r.file = f;
        auto t0 = std::chrono::steady_clock::now();
        try {
            jetgeom::Report rep = jetgeom::run_check(name, objs, seed);
            r.ok = rep.ok;
            r.notes = rep.notes;
        } catch (const jetgeom::Error& e) {
            r.ok = false;
            r.notes.push_back(e.what());
        }
        r.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        results.push_back(std::move(r));
    }

    bool all_ok = true;
    for (const FileResult& r : results) all_ok = all_ok && r.ok;

    if (format == "structured") {
        nlohmann::json out;
        out["check"] = name;
        out["seed"] = seed;
        out["ok"] = all_ok;
        out["results"] = nlohmann::json::array();
        for (const FileResult& r : results)
            out["results"].push_back({{"file", r.file}, {"ok", r.ok}, {"notes", r.notes}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const FileResult& r : results) {
            std::cout << (r.ok ? "PASS" : "FAIL") << " " << name << " " << r.file << " ("
                      << r.millis << " ms)\n";
            for (const std::string& n : r.notes) std::cout << "  " << n << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int emit_examples(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create directory " << dir << ": " << ec.message() << "\n";
        return 2;
    }
    for (const auto& [name, contents] : jetgeom::example_gallery()) {
        std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << name << "\n";
            return 2;
        }
        out << contents;
        std::cout << name << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic validators for geometric structure files"};
    app.require_subcommand(1);

    std::string name, format = "text", dir;
    unsigned seed = 0;
    std::vector<std::string> files;

    CLI::App* check = app.add_subcommand("check", "run a registered check on structure files");
    check->add_option("name", name, "registered check name")->required();
    check->add_option("files", files, "structure-definition files")->required();
    check->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    check->add_option("--seed", seed, "seed for randomized suites");

    CLI::App* ex = app.add_subcommand("examples", "regenerate the fixture gallery");
    ex->add_option("dir", dir, "output directory")->required();

    app.add_subcommand("list-checks", "list registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_checks(name, files, format, seed);
        if (ex->parsed()) return emit_examples(dir);
        for (const std::string& n : jetgeom::check_names())
            std::cout << n << "  -  " << jetgeom::check_description(n) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
