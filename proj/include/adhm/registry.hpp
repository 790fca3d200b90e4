#ifndef ADHM_REGISTRY_HPP
#define ADHM_REGISTRY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adhm/ideals.hpp"

namespace adhm::registry {

struct Context {
    std::uint64_t seed = 1;
    ideals::GroebnerOptions groebner = ideals::default_options();
};

struct LemmaCheck {
    std::string id;
    std::string claim;  // what is being checked, in plain words
    nlohmann::json expected;
    std::function<nlohmann::json(const Context&)> runner;
};

struct Report {
    std::string id;
    std::string status;  // pass, fail, error
    nlohmann::json computed, expected;
    std::string error;   // error code name when status is error
    double runtime_ms = 0;
};

const std::vector<LemmaCheck>& checks();

// UnknownCheck if the id is not registered
Report run_check(const std::string& id, const Context& ctx);
// shell-style glob over ids; empty filter runs everything
std::vector<Report> run_all(const std::string& filter, const Context& ctx);

// runtime is left out unless asked for, so reports are reproducible byte for byte
nlohmann::json to_json(const Report& r, bool with_runtime = false);
// 0 all pass, 2 some budget exceeded, 1 otherwise
int exit_code(const std::vector<Report>& reports);

// seeded points of mu^-1(0) at (N, k) = (2, 4), SO-data
std::vector<forms::ADHMDatum> sample_mu_zero_n2k4(std::size_t n, std::uint64_t seed);

}  // namespace adhm::registry

#endif
