// nfa_cli.cpp — command-line front end. Talks to the library exclusively
// through the C API in nfa/nfa.h; JSON in, JSON out.
//
// Exit codes: 0 success, 1 negative mathematical result (an identity fails,
// no isomorphism, census anomalies), 2 usage or domain errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nfa/nfa.h"

namespace {

struct CliError {
    int code;
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open input file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& json_text) {
    std::string pretty = nlohmann::json::parse(json_text).dump(2) + "\n";
    if (path == "-") {
        std::cout << pretty;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError{2, "cannot open output file: " + path};
    out << pretty;
}

std::string take(char* s) {
    if (!s) return "";
    std::string out(s);
    nfa_string_free(s);
    return out;
}

void require_ok(nfa_status status) {
    if (status != NFA_OK) throw CliError{2, nfa_last_error_message()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact second products on null-filiform associative algebras"};
    app.require_subcommand(1);

    std::string domain = "q", out_path = "-", in_path = "-";
    std::string kind, seed_path, params_path, auto_path, form_path, a_path, b_path;
    int n = 0, threads = 0, trials = 20;
    unsigned long long p = 7, rng_seed = 12345;

    auto* cmd_make = app.add_subcommand("make", "construct the null-filiform algebra");
    cmd_make->add_option("--n", n, "dimension")->required();
    cmd_make->add_option("--domain", domain, "coefficient domain (q | fp:<p> | poly:<vars>)");
    cmd_make->add_option("--out", out_path, "output file or -");

    auto* cmd_check = app.add_subcommand("check", "check a compatibility identity");
    cmd_check->add_option("--kind", kind, "identity kind")->required();
    cmd_check->add_option("--in", in_path, "algebra JSON file or -");
    cmd_check->add_option("--threads", threads, "worker threads (0 = all cores)");
    cmd_check->add_option("--out", out_path, "output file or -");

    auto* cmd_derive = app.add_subcommand("derive", "derive a full star table from a seed");
    cmd_derive->add_option("--seed", seed_path, "seed JSON file or -")->required();
    cmd_derive->add_option("--out", out_path, "output file or -");

    auto* cmd_transform = app.add_subcommand("transform", "transform parameters along an automorphism");
    cmd_transform->add_option("--params", params_path, "parameter JSON file or -")->required();
    cmd_transform->add_option("--auto", auto_path, "automorphism JSON file or -")->required();
    cmd_transform->add_option("--out", out_path, "output file or -");

    auto* cmd_normalize = app.add_subcommand("normalize", "normalize parameters to a canonical form");
    cmd_normalize->add_option("--params", params_path, "parameter JSON file or -")->required();
    cmd_normalize->add_option("--out", out_path, "output file or -");

    auto* cmd_realize = app.add_subcommand("realize", "realize a canonical form as a table");
    cmd_realize->add_option("--form", form_path, "canonical form JSON file or -")->required();
    cmd_realize->add_option("--n", n, "dimension")->required();
    cmd_realize->add_option("--domain", domain, "coefficient domain");
    cmd_realize->add_option("--out", out_path, "output file or -");

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force verification at desk scale");
    cmd_oracle->require_subcommand(1);

    auto* cmd_dims = cmd_oracle->add_subcommand("dims", "kernel dimension of the matching identity");
    cmd_dims->add_option("--n", n, "dimension")->required();
    cmd_dims->add_option("--kind", kind, "identity kind")->required();
    cmd_dims->add_option("--p", p, "prime");
    cmd_dims->add_option("--out", out_path, "output file or -");

    auto* cmd_census = cmd_oracle->add_subcommand("census", "orbit census over F_p");
    cmd_census->add_option("--n", n, "dimension")->required();
    cmd_census->add_option("--kind", kind, "identity kind")->required();
    cmd_census->add_option("--p", p, "prime");
    cmd_census->add_option("--threads", threads, "worker threads (0 = all cores)");
    cmd_census->add_option("--out", out_path, "output file or -");

    auto* cmd_iso = cmd_oracle->add_subcommand("iso", "brute-force isomorphism search");
    cmd_iso->add_option("--a", a_path, "first algebra JSON file")->required();
    cmd_iso->add_option("--b", b_path, "second algebra JSON file")->required();
    cmd_iso->add_option("--p", p, "prime");
    cmd_iso->add_option("--out", out_path, "output file or -");

    auto* cmd_audit = cmd_oracle->add_subcommand("audit", "replay the normalization-step formulas");
    cmd_audit->add_option("--n", n, "dimension")->required();
    cmd_audit->add_option("--trials", trials, "random trials");
    cmd_audit->add_option("--rng-seed", rng_seed, "random seed");
    cmd_audit->add_option("--out", out_path, "output file or -");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_make->parsed()) {
            nfa_algebra* alg = nullptr;
            require_ok(nfa_algebra_make_null_filiform(n, domain.c_str(), &alg));
            char* j = nullptr;
            nfa_status st = nfa_algebra_to_json(alg, &j);
            nfa_algebra_free(alg);
            require_ok(st);
            write_output(out_path, take(j));
            return 0;
        }
        if (cmd_check->parsed()) {
            std::string text = read_input(in_path);
            nfa_algebra* alg = nullptr;
            require_ok(nfa_algebra_from_json(text.c_str(), &alg));
            char* report = nullptr;
            int holds = 0;
            nfa_status st = nfa_algebra_check(alg, kind.c_str(), threads, &report, &holds);
            nfa_algebra_free(alg);
            require_ok(st);
            write_output(out_path, take(report));
            return holds ? 0 : 1;
        }
        if (cmd_derive->parsed()) {
            char* out = nullptr;
            require_ok(nfa_derive(read_input(seed_path).c_str(), &out));
            write_output(out_path, take(out));
            return 0;
        }
        if (cmd_transform->parsed()) {
            char* out = nullptr;
            require_ok(nfa_transform(read_input(params_path).c_str(), read_input(auto_path).c_str(),
                                     &out));
            write_output(out_path, take(out));
            return 0;
        }
        if (cmd_normalize->parsed()) {
            char* out = nullptr;
            require_ok(nfa_normalize(read_input(params_path).c_str(), &out));
            write_output(out_path, take(out));
            return 0;
        }
        if (cmd_realize->parsed()) {
            char* out = nullptr;
            require_ok(nfa_realize(read_input(form_path).c_str(), n, domain.c_str(), &out));
            write_output(out_path, take(out));
            return 0;
        }
        if (cmd_dims->parsed()) {
            int dim = 0;
            require_ok(nfa_oracle_dims(n, kind.c_str(), p, &dim));
            write_output(out_path, nlohmann::json{{"n", n}, {"kind", kind}, {"p", p},
                                                  {"dimension", dim}}
                                       .dump());
            return 0;
        }
        if (cmd_census->parsed()) {
            char* report = nullptr;
            require_ok(nfa_oracle_census(n, kind.c_str(), p, threads, &report));
            std::string text = take(report);
            write_output(out_path, text);
            return nlohmann::json::parse(text).at("anomalies").empty() ? 0 : 1;
        }
        if (cmd_iso->parsed()) {
            std::string a = read_input(a_path), b = read_input(b_path);
            char* witness = nullptr;
            int found = 0;
            require_ok(nfa_oracle_iso(a.c_str(), b.c_str(), p, &witness, &found));
            nlohmann::json out{{"found", found != 0}};
            if (found) out["witness"] = nlohmann::json::parse(take(witness));
            write_output(out_path, out.dump());
            return found ? 0 : 1;
        }
        if (cmd_audit->parsed()) {
            char* report = nullptr;
            require_ok(nfa_oracle_audit(n, trials, rng_seed, &report));
            write_output(out_path, take(report));
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
