#include "chain_json.hpp"

#include <json.hpp>

namespace loopcalc {

namespace {

using nlohmann::json;

json word_to_json(const Word& w);

json atom_to_json(const Atom& a) {
    json j;
    switch (a.kind) {
    case Atom::Kind::generator: j["base"] = a.gen->id; break;
    case Atom::Kind::witness: {
        json w;
        w["kind"] = a.wit->kind;
        if (a.wit->kind == "naive_step") {
            w["step"] = a.wit->step;
            w["L"] = a.wit->bigL;
        }
        w["z1"] = json::parse(chain_to_json(a.wit->z1));
        w["z2"] = json::parse(chain_to_json(a.wit->z2));
        j["base"] = json{{"witness", w}};
        break;
    }
    case Atom::Kind::scaled_word: j["base"] = json{{"word", word_to_json(a.word->items)}}; break;
    }
    j["scale"] = a.scale;
    return j;
}

json word_to_json(const Word& w) {
    json arr = json::array();
    for (const Atom& a : w) arr.push_back(atom_to_json(a));
    return arr;
}

Word word_from_json(const SpacePreset& preset, const json& arr, const CostModel& model);

Atom atom_from_json(const SpacePreset& preset, const json& j, const CostModel& model) {
    if (!j.is_object() || !j.contains("base"))
        throw calc_error(errc::parse_error, "chain JSON: atom must be an object with 'base'");
    std::uint64_t scale = 1;
    if (j.contains("scale")) {
        if (!j["scale"].is_number_unsigned() || j["scale"].get<std::uint64_t>() == 0)
            throw calc_error(errc::parse_error, "chain JSON: scale must be a positive integer");
        scale = j["scale"].get<std::uint64_t>();
    }
    const json& base = j["base"];
    if (base.is_string()) return make_generator_atom(preset.generator(base.get<std::string>()), scale);
    if (base.is_object() && base.contains("witness")) {
        const json& w = base["witness"];
        if (!w.contains("kind") || !w.contains("z1") || !w.contains("z2"))
            throw calc_error(errc::parse_error, "chain JSON: malformed witness record");
        FormalChain z1 = chain_from_json(preset, w["z1"].dump(), model);
        FormalChain z2 = chain_from_json(preset, w["z2"].dump(), model);
        std::string kind = w["kind"].get<std::string>();
        if (kind == "single_scale") return make_witness_atom(single_scale_witness(z1, z2, model), scale);
        if (kind == "naive_step")
            return make_witness_atom(
                naive_step_witness(w["step"].get<std::uint64_t>(), w["L"].get<std::uint64_t>(), z1, z2, model),
                scale);
        throw calc_error(errc::parse_error, "chain JSON: unknown witness kind '" + kind + "'");
    }
    if (base.is_object() && base.contains("word")) {
        Word inner = word_from_json(preset, base["word"], model);
        if (inner.size() < 2)
            throw calc_error(errc::parse_error, "chain JSON: scaled word must have >= 2 atoms");
        if (scale < 2) throw calc_error(errc::parse_error, "chain JSON: scaled word needs scale >= 2");
        return scale_word(scale, inner)[0];
    }
    throw calc_error(errc::parse_error, "chain JSON: unrecognized atom base");
}

Word word_from_json(const SpacePreset& preset, const json& arr, const CostModel& model) {
    if (!arr.is_array()) throw calc_error(errc::parse_error, "chain JSON: word must be an array");
    Word w;
    for (const json& aj : arr) w.push_back(atom_from_json(preset, aj, model));
    return w;
}

} // namespace

std::string chain_to_json(const FormalChain& c, int indent) {
    json j;
    j["degree"] = c.degree();
    j["curfew"] = rat_to_string(c.curfew());
    json terms = json::array();
    for (const auto& [w, coeff] : c.terms()) {
        json t;
        t["coeff"] = rat_to_string(coeff);
        t["word"] = word_to_json(w);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return indent >= 0 ? j.dump(indent) : j.dump();
}

FormalChain chain_from_json(const SpacePreset& preset, const std::string& text, const CostModel& model) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw calc_error(errc::parse_error, std::string("chain JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw calc_error(errc::parse_error, "chain JSON: expected object with 'terms' array");
    FormalChain c;
    try {
        for (const json& tj : j["terms"]) {
            if (!tj.contains("coeff") || !tj.contains("word"))
                throw calc_error(errc::parse_error, "chain JSON: term needs 'coeff' and 'word'");
            Rat coeff = rat_from_string(tj["coeff"].get<std::string>());
            c.add_term(word_from_json(preset, tj["word"], model), coeff);
        }
    } catch (const json::exception& e) {
        throw calc_error(errc::parse_error, std::string("chain JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw calc_error(errc::parse_error, std::string("chain JSON: ") + e.what());
    }
    if (!c.is_zero() && j.contains("degree") && j["degree"].is_number_integer() &&
        j["degree"].get<int>() != c.degree())
        throw calc_error(errc::parse_error, "chain JSON: declared degree does not match terms");
    if (!c.is_zero() && j.contains("curfew") && j["curfew"].is_string() &&
        rat_from_string(j["curfew"].get<std::string>()) != c.curfew())
        throw calc_error(errc::parse_error, "chain JSON: declared curfew does not match terms");
    return c;
}

} // namespace loopcalc
