// Command-line front end over the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "adhm_lab.h"

namespace {

struct Globals {
    uint64_t seed = 1;
    std::string field = "q";
    int order = 8;
    std::string json_out;
    uint64_t budget = 0;
};

std::string read_arg(const std::string& s) {
    // @path reads the file
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw std::runtime_error("cannot read " + s.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int fail(adhm_context* ctx, adhm_status st) {
    std::cerr << "error: " << adhm_last_error(ctx) << "\n";
    return st == ADHM_BUDGET_EXCEEDED ? 2 : 1;
}

void write_result(const Globals& g, const char* text, bool print) {
    auto pretty = nlohmann::json::parse(text).dump(2);
    if (!g.json_out.empty()) {
        std::ofstream(g.json_out) << pretty << "\n";
    }
    if (print) std::cout << pretty << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ADHM data lab: orbit diagrams, moment-map ideals, factorization and instanton characters"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals g;
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--field", g.field, "coefficient field: q or fp:<prime>")->capture_default_str();
    app.add_option("--order", g.order, "truncation order (total q-degree)")->capture_default_str();
    app.add_option("--json-out", g.json_out, "also write the JSON result to this file");
    app.add_option("--budget", g.budget, "Groebner budget in S-pair reductions");

    auto* verify = app.add_subcommand("verify", "run registered checks");
    std::string filter;
    bool list = false, runtime = false;
    verify->add_option("filter", filter, "glob over check ids, e.g. 'kp.*'");
    verify->add_flag("--list", list, "list checks without running them");
    verify->add_flag("--runtime", runtime, "include runtimes in the JSON report");

    auto* abd = app.add_subcommand("abdiagram", "ab-diagram and orbit dimension of a datum");
    std::string abd_in;
    abd->add_option("datum", abd_in, "fixture name (x_I..x_IV), JSON text, or @file")->required();

    auto* gb = app.add_subcommand("groebner", "build an ideal or compute a Groebner basis");
    std::string kind, flavor = "so", ideal_in;
    unsigned N = 3, k = 2;
    bool build_only = false;
    gb->add_option("--kind", kind, "mu, mu_traceless, rho, pi_image_tags, commutator, product");
    gb->add_option("--flavor", flavor, "so or sp")->capture_default_str();
    gb->add_option("--N", N)->capture_default_str();
    gb->add_option("--k", k)->capture_default_str();
    gb->add_option("--ideal", ideal_in, "ideal JSON or @file (instead of --kind)");
    gb->add_flag("--build-only", build_only, "print the generators without computing a basis");

    auto* fac = app.add_subcommand("factorize", "split a datum along the spectrum of B1");
    std::string fac_in, supports;
    fac->add_option("datum", fac_in, "fixture name, JSON text, or @file")->required();
    fac->add_option("--supports", supports, "eigenvalue groups, e.g. '1/2,1/2;-1/2,-1/2'");

    auto* nek = app.add_subcommand("nekrasov", "truncated instanton generating function");
    std::string nflavor = "sp";
    unsigned nN = 2, kmax = 2;
    nek->add_option("--flavor", nflavor, "so or sp")->capture_default_str();
    nek->add_option("--N", nN)->capture_default_str();
    nek->add_option("--kmax", kmax)->capture_default_str();

    auto* fix = app.add_subcommand("fixtures", "list fixtures or print one");
    std::string fix_name;
    fix->add_option("name", fix_name);

    CLI11_PARSE(app, argc, argv);

    adhm_context* ctx = adhm_context_new();
    if (!ctx) return 1;
    struct Free {
        adhm_context* c;
        ~Free() { adhm_context_free(c); }
    } guard{ctx};

    adhm_status st = adhm_set_seed(ctx, g.seed);
    if (st == ADHM_OK) st = adhm_set_field(ctx, g.field.c_str());
    if (st == ADHM_OK && g.budget) st = adhm_set_budget(ctx, g.budget);
    if (st != ADHM_OK) return fail(ctx, st);

    const char* out = nullptr;
    try {
        if (*verify) {
            if (list) {
                if ((st = adhm_list_checks(ctx, &out)) != ADHM_OK) return fail(ctx, st);
                write_result(g, out, true);
                return 0;
            }
            int code = 0;
            if ((st = adhm_verify(ctx, filter.c_str(), runtime, &out, &code)) != ADHM_OK) return fail(ctx, st);
            auto j = nlohmann::json::parse(out);
            if (j["reports"].empty()) std::cerr << "warning: no check matches '" << filter << "'\n";
            for (auto& r : j["reports"]) {
                std::string status = r["status"];
                for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
                std::cout << status << "  " << r["id"].get<std::string>();
                if (r["status"] != "pass") std::cout << "  computed " << r["computed"].dump() << " expected " << r["expected"].dump();
                std::cout << "\n";
            }
            write_result(g, out, false);
            return code;
        }
        if (*abd) {
            st = adhm_abdiagram(ctx, read_arg(abd_in).c_str(), &out);
        } else if (*gb) {
            std::string ideal = ideal_in.empty() ? "" : read_arg(ideal_in);
            if (ideal.empty()) {
                if (kind.empty()) throw std::runtime_error("groebner needs --kind or --ideal");
                st = adhm_build_ideal(ctx, kind.c_str(), N, k, flavor.c_str(), &out);
                if (st == ADHM_OK) ideal = out;
            }
            if (st == ADHM_OK && !build_only) st = adhm_groebner(ctx, ideal.c_str(), &out);
        } else if (*fac) {
            st = adhm_factorize(ctx, read_arg(fac_in).c_str(), supports.c_str(), &out);
        } else if (*nek) {
            st = adhm_nekrasov(ctx, nflavor.c_str(), nN, kmax, g.order, &out);
        } else if (*fix) {
            st = fix_name.empty() ? adhm_list_fixtures(ctx, &out) : adhm_fixture(ctx, fix_name.c_str(), &out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (st != ADHM_OK) return fail(ctx, st);
    write_result(g, out, true);
    return 0;
}
