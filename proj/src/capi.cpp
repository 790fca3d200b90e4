#include "adhm_lab.h"

#include <new>
#include <string>

#include "adhm/factorization.hpp"
#include "adhm/kp.hpp"
#include "adhm/partition.hpp"
#include "adhm/registry.hpp"

using json = nlohmann::json;
using namespace adhm;

struct adhm_context {
    registry::Context reg;
    std::string result;
    std::string error;
};

namespace {

adhm_status to_status(ErrorCode c) { return static_cast<adhm_status>(static_cast<int>(c) + 1); }

template <class F>
adhm_status guarded(adhm_context* ctx, F&& body) {
    if (!ctx) return ADHM_INVALID_ARGUMENT;
    ctx->error.clear();
    try {
        body();
        return ADHM_OK;
    } catch (const Error& e) {
        ctx->error = e.what();
        return to_status(e.code());
    } catch (const json::exception& e) {
        ctx->error = e.what();
        return ADHM_PARSE;
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
        return ADHM_INTERNAL;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return ADHM_INTERNAL;
    }
}

std::string need(const char* s, const char* what) {
    if (!s) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
    return s;
}

// a fixture name, or JSON text
json datum_json(const std::string& in) {
    auto first = in.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (in[first] == '{' || in[first] == '[')) return json::parse(in);
    return fixtures::named(in);
}

void emit(adhm_context* ctx, const json& j, const char** out) {
    ctx->result = j.dump();
    if (out) *out = ctx->result.c_str();
}

}  // namespace

extern "C" {

adhm_context* adhm_context_new(void) { return new (std::nothrow) adhm_context(); }
void adhm_context_free(adhm_context* ctx) { delete ctx; }

adhm_status adhm_set_seed(adhm_context* ctx, uint64_t seed) {
    return guarded(ctx, [&] { ctx->reg.seed = seed; });
}

adhm_status adhm_set_field(adhm_context* ctx, const char* field) {
    return guarded(ctx, [&] { ctx->reg.groebner.field = ideals::FieldSpec::parse(need(field, "field")); });
}

adhm_status adhm_set_budget(adhm_context* ctx, uint64_t budget) {
    return guarded(ctx, [&] { ctx->reg.groebner.budget = budget ? budget : ideals::default_options().budget; });
}

const char* adhm_last_error(const adhm_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* adhm_status_name(adhm_status s) {
    if (s == ADHM_OK) return "Ok";
    if (s < ADHM_OK || s > ADHM_INTERNAL) return "Unknown";
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(s) - 1));
}

adhm_status adhm_verify(adhm_context* ctx, const char* filter, int with_runtime, const char** out, int* exit_code) {
    return guarded(ctx, [&] {
        auto reports = registry::run_all(filter ? filter : "", ctx->reg);
        json arr = json::array();
        for (auto& r : reports) arr.push_back(registry::to_json(r, with_runtime != 0));
        int code = registry::exit_code(reports);
        if (exit_code) *exit_code = code;
        emit(ctx, json{{"seed", ctx->reg.seed}, {"field", ctx->reg.groebner.field.str()}, {"reports", arr}, {"exit_code", code}}, out);
    });
}

adhm_status adhm_list_checks(adhm_context* ctx, const char** out) {
    return guarded(ctx, [&] {
        json arr = json::array();
        for (auto& c : registry::checks()) arr.push_back({{"id", c.id}, {"claim", c.claim}, {"expected", c.expected}});
        emit(ctx, arr, out);
    });
}

adhm_status adhm_abdiagram(adhm_context* ctx, const char* input, const char** out) {
    return guarded(ctx, [&] {
        auto x = forms::datum_from_json(datum_json(need(input, "input")));
        auto d = kp::abdiagram_of(x.i, x.setting);
        emit(ctx, json{{"diagram", kp::to_json(d)}, {"orbit_dim", kp::dim_spo_orbit(d, x.setting.flavor)}}, out);
    });
}

adhm_status adhm_build_ideal(adhm_context* ctx, const char* kind, uint32_t N, uint32_t k, const char* flavor, const char** out) {
    return guarded(ctx, [&] {
        auto I = ideals::build_ideal(need(kind, "kind"), N, k, forms::parse_flavor(need(flavor, "flavor")));
        emit(ctx, ideals::to_json(I), out);
    });
}

adhm_status adhm_groebner(adhm_context* ctx, const char* ideal_json, const char** out) {
    return guarded(ctx, [&] {
        auto I = ideals::ideal_from_json(json::parse(need(ideal_json, "ideal")));
        auto G = ideals::groebner(I, ctx->reg.groebner);
        json basis = json::array();
        for (auto& p : G.basis) basis.push_back(p.str(G.vars));
        emit(ctx,
             json{{"vars", G.vars},
                  {"field", G.field.str()},
                  {"basis", basis},
                  {"dimension", ideals::krull_dimension(G)},
                  {"reductions", G.reductions}},
             out);
    });
}

adhm_status adhm_factorize(adhm_context* ctx, const char* datum, const char* supports, const char** out) {
    return guarded(ctx, [&] {
        auto x = forms::datum_from_json(datum_json(need(datum, "datum")));
        std::vector<std::vector<exactalg::Scalar>> sup;
        if (supports && *supports) sup = factorization::parse_supports(supports);
        auto sp = factorization::split_by_spectrum(x, sup);
        json j = factorization::to_json(sp.data, sp.partition);
        j["g"] = exactalg::to_json(sp.g);
        j["eta"] = sp.partition.eta().str();
        emit(ctx, j, out);
    });
}

adhm_status adhm_nekrasov(adhm_context* ctx, const char* flavor, uint32_t N, uint32_t k_max, int32_t order, const char** out) {
    return guarded(ctx, [&] {
        auto f = forms::parse_flavor(need(flavor, "flavor"));
        emit(ctx, partition::to_json(partition::nekrasov_Z(f, N, k_max, order), f, N), out);
    });
}

adhm_status adhm_list_fixtures(adhm_context* ctx, const char** out) {
    return guarded(ctx, [&] { emit(ctx, fixtures::names(), out); });
}

adhm_status adhm_fixture(adhm_context* ctx, const char* name, const char** out) {
    return guarded(ctx, [&] { emit(ctx, fixtures::named(need(name, "name")), out); });
}

}  // extern "C"
