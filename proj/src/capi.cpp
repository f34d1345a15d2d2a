// extern-C surface over the core library. Handles are heap-allocated
// immutable values; every entry point catches and maps exceptions.

#include "loopcalc/loopcalc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "chain_json.hpp"
#include "geom/homology_numeric.hpp"
#include "spaces.hpp"

using namespace loopcalc;

struct lc_preset {
    SpacePreset value;
};

struct lc_chain {
    FormalChain value;
};

struct lc_family {
    geom::NumericChain chain; // single-part for plain families
    geom::GeomConfig cfg;
};

namespace {

thread_local std::string g_last_error;

lc_status map_code(errc code) {
    switch (code) {
    case errc::invalid_argument: return LC_ERR_INVALID_ARGUMENT;
    case errc::not_found: return LC_ERR_NOT_FOUND;
    case errc::degree_mismatch: return LC_ERR_DEGREE_MISMATCH;
    case errc::curfew_mismatch: return LC_ERR_CURFEW_MISMATCH;
    case errc::not_a_cycle: return LC_ERR_NOT_A_CYCLE;
    case errc::not_power_of_two: return LC_ERR_NOT_POWER_OF_TWO;
    case errc::inexpressible_pairing: return LC_ERR_INEXPRESSIBLE_PAIRING;
    case errc::parse_error: return LC_ERR_PARSE;
    }
    return LC_ERR_INTERNAL;
}

template <typename Fn> lc_status guarded(Fn&& fn) {
    try {
        fn();
        return LC_OK;
    } catch (const calc_error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return LC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lc_status require(bool cond, const char* what) {
    if (cond) return LC_OK;
    g_last_error = what;
    return LC_ERR_INVALID_ARGUMENT;
}

geom::GeomConfig make_cfg(int resolution, int samples) {
    geom::GeomConfig cfg;
    if (resolution > 0) cfg.resolution = resolution;
    if (samples > 0) cfg.samples = samples;
    return cfg;
}

} // namespace

extern "C" {

const char* lc_version(void) { return "1.0.0"; }

const char* lc_status_message(lc_status status) {
    switch (status) {
    case LC_OK: return "ok";
    case LC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LC_ERR_NOT_FOUND: return "not found";
    case LC_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case LC_ERR_CURFEW_MISMATCH: return "curfew mismatch";
    case LC_ERR_NOT_A_CYCLE: return "not a cycle";
    case LC_ERR_NOT_POWER_OF_TWO: return "not a power of two";
    case LC_ERR_INEXPRESSIBLE_PAIRING: return "inexpressible pairing";
    case LC_ERR_PARSE: return "parse error";
    case LC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lc_last_error(void) { return g_last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_preset_open(const char* name, lc_preset** out) {
    if (lc_status s = require(name && out, "lc_preset_open: null argument")) return s;
    return guarded([&] {
        auto p = preset_by_name(name);
        if (!p) throw calc_error(errc::not_found, std::string("unknown preset '") + name + "'");
        *out = new lc_preset{std::move(*p)};
    });
}

void lc_preset_close(lc_preset* preset) { delete preset; }

lc_status lc_preset_name(const lc_preset* preset, char** out) {
    if (lc_status s = require(preset && out, "lc_preset_name: null argument")) return s;
    *out = dup_string(preset->value.name);
    return LC_OK;
}

lc_status lc_preset_generators(const lc_preset* preset, char** out) {
    if (lc_status s = require(preset && out, "lc_preset_generators: null argument")) return s;
    std::string csv;
    for (const auto& g : preset->value.generators) {
        if (!csv.empty()) csv += ",";
        csv += g->id;
    }
    *out = dup_string(csv);
    return LC_OK;
}

lc_status lc_preset_forms(const lc_preset* preset, char** out) {
    if (lc_status s = require(preset && out, "lc_preset_forms: null argument")) return s;
    std::string csv;
    for (const auto& f : preset->value.forms) {
        if (!csv.empty()) csv += ",";
        csv += f.id;
    }
    *out = dup_string(csv);
    return LC_OK;
}

lc_status lc_chain_generator(const lc_preset* preset, const char* id, lc_chain** out) {
    if (lc_status s = require(preset && id && out, "lc_chain_generator: null argument")) return s;
    return guarded([&] { *out = new lc_chain{preset->value.chain(id)}; });
}

lc_status lc_chain_zero(lc_chain** out) {
    if (lc_status s = require(out != nullptr, "lc_chain_zero: null argument")) return s;
    *out = new lc_chain{FormalChain::zero()};
    return LC_OK;
}

lc_status lc_chain_z1(const lc_preset* preset, lc_chain** out) {
    if (lc_status s = require(preset && out, "lc_chain_z1: null argument")) return s;
    return guarded([&] { *out = new lc_chain{build_z1(preset->value)}; });
}

lc_status lc_chain_zl(const lc_preset* preset, uint64_t L, lc_chain** out) {
    if (lc_status s = require(preset && out, "lc_chain_zl: null argument")) return s;
    return guarded([&] { *out = new lc_chain{build_zl(preset->value, L)}; });
}

lc_status lc_chain_sphere_degree_family(const lc_preset* preset, uint64_t L, lc_chain** out) {
    if (lc_status s = require(preset && out, "lc_chain_sphere_degree_family: null argument")) return s;
    return guarded([&] { *out = new lc_chain{sphere_degree_family(preset->value, L)}; });
}

lc_status lc_chain_sphere_hopf_family(const lc_preset* preset, uint64_t L, lc_chain** out) {
    if (lc_status s = require(preset && out, "lc_chain_sphere_hopf_family: null argument")) return s;
    return guarded([&] { *out = new lc_chain{sphere_hopf_family(preset->value, L)}; });
}

lc_status lc_chain_add(const lc_chain* a, const lc_chain* b, lc_chain** out) {
    if (lc_status s = require(a && b && out, "lc_chain_add: null argument")) return s;
    return guarded([&] { *out = new lc_chain{add(a->value, b->value)}; });
}

lc_status lc_chain_scalar(const char* rational, const lc_chain* c, lc_chain** out) {
    if (lc_status s = require(rational && c && out, "lc_chain_scalar: null argument")) return s;
    return guarded([&] { *out = new lc_chain{scalar(rat_from_string(rational), c->value)}; });
}

lc_status lc_chain_product(const lc_chain* a, const lc_chain* b, lc_chain** out) {
    if (lc_status s = require(a && b && out, "lc_chain_product: null argument")) return s;
    return guarded([&] { *out = new lc_chain{product(a->value, b->value)}; });
}

lc_status lc_chain_bracket(const lc_chain* a, const lc_chain* b, lc_chain** out) {
    if (lc_status s = require(a && b && out, "lc_chain_bracket: null argument")) return s;
    return guarded([&] { *out = new lc_chain{bracket(a->value, b->value)}; });
}

lc_status lc_chain_loop_power(uint64_t k, const lc_chain* c, lc_chain** out) {
    if (lc_status s = require(c && out, "lc_chain_loop_power: null argument")) return s;
    return guarded([&] { *out = new lc_chain{loop_power(k, c->value)}; });
}

lc_status lc_chain_boundary(const lc_chain* c, lc_chain** out) {
    if (lc_status s = require(c && out, "lc_chain_boundary: null argument")) return s;
    return guarded([&] { *out = new lc_chain{boundary(c->value)}; });
}

lc_status lc_witness_single_scale(const lc_chain* z1, const lc_chain* z2, lc_chain** out) {
    if (lc_status s = require(z1 && z2 && out, "lc_witness_single_scale: null argument")) return s;
    return guarded([&] { *out = new lc_chain{chain_of(single_scale_witness(z1->value, z2->value))}; });
}

lc_status lc_witness_multiscale(const lc_chain* z1, const lc_chain* z2, uint64_t L, lc_chain** out) {
    if (lc_status s = require(z1 && z2 && out, "lc_witness_multiscale: null argument")) return s;
    return guarded([&] { *out = new lc_chain{multiscale_witness(z1->value, z2->value, L)}; });
}

lc_status lc_witness_naive(const lc_chain* z1, const lc_chain* z2, uint64_t L, lc_chain** out) {
    if (lc_status s = require(z1 && z2 && out, "lc_witness_naive: null argument")) return s;
    return guarded([&] { *out = new lc_chain{naive_witness(z1->value, z2->value, L)}; });
}

int lc_chain_is_zero(const lc_chain* c) { return c && c->value.is_zero() ? 1 : 0; }

int lc_chain_is_cycle(const lc_chain* c) {
    if (!c) return 0;
    try {
        return is_cycle(c->value) ? 1 : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

int lc_chain_equal(const lc_chain* a, const lc_chain* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

int lc_chain_degree(const lc_chain* c) { return c ? c->value.degree() : 0; }

uint64_t lc_chain_terms(const lc_chain* c) { return c ? c->value.term_count() : 0; }

lc_status lc_chain_curfew(const lc_chain* c, char** out) {
    if (lc_status s = require(c && out, "lc_chain_curfew: null argument")) return s;
    *out = dup_string(rat_to_string(c->value.curfew()));
    return LC_OK;
}

lc_status lc_chain_cost(const lc_chain* c, char** suplength_out, char** volume_out) {
    if (lc_status s = require(c && suplength_out && volume_out, "lc_chain_cost: null argument")) return s;
    return guarded([&] {
        CostBound cb = cost_bounds(c->value);
        *suplength_out = dup_string(rat_to_string(cb.suplength));
        *volume_out = dup_string(rat_to_string(cb.volume));
    });
}

lc_status lc_chain_to_json(const lc_chain* c, int indent, char** out) {
    if (lc_status s = require(c && out, "lc_chain_to_json: null argument")) return s;
    return guarded([&] { *out = dup_string(chain_to_json(c->value, indent)); });
}

lc_status lc_chain_from_json(const lc_preset* preset, const char* json, lc_chain** out) {
    if (lc_status s = require(preset && json && out, "lc_chain_from_json: null argument")) return s;
    return guarded([&] { *out = new lc_chain{chain_from_json(preset->value, json)}; });
}

void lc_chain_free(lc_chain* c) { delete c; }

lc_status lc_word_degree(const lc_preset* preset, const char* word, int* out) {
    if (lc_status s = require(preset && word && out, "lc_word_degree: null argument")) return s;
    return guarded([&] { *out = word_degree(preset->value.parse_word(word)); });
}

lc_status lc_pair(const lc_preset* preset, const char* word, const lc_chain* c, char** out) {
    if (lc_status s = require(preset && word && c && out, "lc_pair: null argument")) return s;
    return guarded([&] {
        Rat v = pair_chain(preset->value.parse_word(word), c->value, preset->value.table);
        *out = dup_string(rat_to_string(v));
    });
}

lc_status lc_certify(const lc_preset* preset, const char* word, const char* family, uint64_t L,
                     char** json_out) {
    if (lc_status s = require(preset && word && family && json_out, "lc_certify: null argument")) return s;
    return guarded([&] {
        const SpacePreset& p = preset->value;
        std::string fam = family;
        CycleFamily builder;
        if (fam == "ZL" || fam == "zl")
            builder = [&p](std::uint64_t l) { return build_zl(p, l); };
        else if (fam == "degree" || fam == "example1")
            builder = [&p](std::uint64_t l) { return sphere_degree_family(p, l); };
        else if (fam == "hopf" || fam == "example2")
            builder = [&p](std::uint64_t l) { return sphere_hopf_family(p, l); };
        else
            throw calc_error(errc::not_found, "unknown certificate family '" + fam + "'");
        auto cb = distortion_certificate(p.parse_word(word), builder, L, p.table);
        *json_out = dup_string(certificate_to_json(cb));
    });
}

lc_status lc_family_sweepout(int resolution, int samples, lc_family** out) {
    if (lc_status s = require(out != nullptr, "lc_family_sweepout: null argument")) return s;
    return guarded([&] {
        auto cfg = make_cfg(resolution, samples);
        auto f = new lc_family{{}, cfg};
        f->chain.curfew = 1;
        f->chain.parts.push_back({geom::sweepout_s2(cfg), 1, 1, "sweepout"});
        *out = f;
    });
}

lc_status lc_family_based_sweepout(int resolution, int samples, lc_family** out) {
    if (lc_status s = require(out != nullptr, "lc_family_based_sweepout: null argument")) return s;
    return guarded([&] {
        auto cfg = make_cfg(resolution, samples);
        auto f = new lc_family{{}, cfg};
        f->chain.curfew = 1;
        f->chain.parts.push_back({geom::based_sweepout_s2(cfg), 1, 1, "based_sweepout"});
        *out = f;
    });
}

lc_status lc_family_concat(const lc_family* a, const lc_family* b, lc_family** out) {
    if (lc_status s = require(a && b && out, "lc_family_concat: null argument")) return s;
    if (lc_status s = require(a->chain.parts.size() == 1 && b->chain.parts.size() == 1,
                              "lc_family_concat: operands must be single families"))
        return s;
    return guarded([&] {
        auto f = new lc_family{{}, a->cfg};
        f->chain.curfew = a->chain.curfew + b->chain.curfew;
        f->chain.parts.push_back(
            {geom::concat(a->chain.parts[0].fam, b->chain.parts[0].fam, a->cfg),
             a->chain.parts[0].weight * b->chain.parts[0].weight, 1, "concat"});
        *out = f;
    });
}

lc_status lc_family_power(uint64_t k, const lc_family* f, lc_family** out) {
    if (lc_status s = require(f && out, "lc_family_power: null argument")) return s;
    if (lc_status s = require(f->chain.parts.size() == 1, "lc_family_power: operand must be a single family"))
        return s;
    return guarded([&] {
        auto g = new lc_family{{}, f->cfg};
        g->chain.curfew = f->chain.curfew * static_cast<double>(k);
        g->chain.parts.push_back({geom::power(k, f->chain.parts[0].fam, f->cfg),
                                  f->chain.parts[0].weight, 1, "power"});
        *out = g;
    });
}

lc_status lc_family_p_multiscale(uint64_t L, int resolution, int samples, lc_family** out) {
    if (lc_status s = require(out != nullptr, "lc_family_p_multiscale: null argument")) return s;
    return guarded([&] {
        auto cfg = make_cfg(resolution, samples);
        *out = new lc_family{geom::build_p_numeric(L, cfg), cfg};
    });
}

lc_status lc_family_p_naive(uint64_t L, int resolution, int samples, lc_family** out) {
    if (lc_status s = require(out != nullptr, "lc_family_p_naive: null argument")) return s;
    return guarded([&] {
        auto cfg = make_cfg(resolution, samples);
        *out = new lc_family{geom::build_p_naive_numeric(L, cfg), cfg};
    });
}

int lc_family_arity(const lc_family* f) {
    if (!f || f->chain.parts.empty()) return 0;
    return f->chain.parts[0].fam.arity;
}

lc_status lc_family_suplength(const lc_family* f, double* out) {
    if (lc_status s = require(f && out, "lc_family_suplength: null argument")) return s;
    return guarded([&] { *out = geom::chain_suplength(f->chain); });
}

lc_status lc_family_volume_upper(const lc_family* f, double* value_out, int* converged_out) {
    if (lc_status s = require(f && value_out, "lc_family_volume_upper: null argument")) return s;
    return guarded([&] {
        auto e = geom::chain_volume_upper(f->chain, f->cfg);
        *value_out = e.value;
        if (converged_out) *converged_out = e.converged ? 1 : 0;
    });
}

lc_status lc_family_chen_integral(const lc_family* f, int r, double* out) {
    if (lc_status s = require(f && out, "lc_family_chen_integral: null argument")) return s;
    return guarded([&] { *out = geom::chen_integral_numeric(r, f->chain, f->cfg); });
}

lc_status lc_family_to_json(const lc_family* f, int grid_resolution, char** out) {
    if (lc_status s = require(f && out, "lc_family_to_json: null argument")) return s;
    if (lc_status s = require(f->chain.parts.size() == 1, "lc_family_to_json: operand must be a single family"))
        return s;
    return guarded([&] {
        int grid = grid_resolution > 0 ? grid_resolution : 16;
        *out = dup_string(geom::family_to_json(f->chain.parts[0].fam, grid));
    });
}

void lc_family_free(lc_family* f) { delete f; }

} // extern "C"
