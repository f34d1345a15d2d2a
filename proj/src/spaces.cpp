#include "spaces.hpp"

namespace loopcalc {

GeneratorRef SpacePreset::generator(const std::string& id) const {
    for (const auto& g : generators)
        if (g->id == id) return g;
    if (id == "bullet" || id == "•") return bullet_generator();
    throw calc_error(errc::not_found, "unknown generator '" + id + "' in preset " + name);
}

const FormLabel& SpacePreset::form(const std::string& id) const {
    for (const auto& f : forms)
        if (f.id == id) return f;
    throw calc_error(errc::not_found, "unknown form label '" + id + "' in preset " + name);
}

FormWord SpacePreset::parse_word(const std::string& text) const {
    FormWord out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(form(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == ',') {
            flush();
        } else {
            cur += ch;
        }
    }
    flush();
    return out;
}

GeneratorRef bullet_generator() {
    static GeneratorRef bullet = [] {
        GeneratorData d;
        d.id = "bullet";
        d.degree = 0;
        d.curfew = 1;
        d.suplength = 0;
        d.volume = 0;
        d.skeleton = 0;
        d.spherical = false;
        return make_generator(std::move(d));
    }();
    return bullet;
}

SpacePreset preset_y() {
    SpacePreset p;
    p.name = "Y";
    p.dimension = 6;

    auto sphere_gen = [&](const std::string& id) {
        GeneratorData d;
        d.id = id;
        d.degree = 1;
        d.curfew = 1;
        d.suplength = 1;
        d.volume = 1;
        d.skeleton = 2;
        d.spherical = true;
        return make_generator(std::move(d));
    };
    std::vector<GeneratorRef> a;
    for (int i = 1; i <= 4; ++i) a.push_back(sphere_gen("A" + std::to_string(i)));
    GeneratorRef b = sphere_gen("B");

    // The 4-cell chains. Attaching maps give dC_i = [A_i, B] and
    // dD = sum_i [A_i, A_i]; the Samelson sign is absorbed so that the Z_L
    // Jacobi cancellation is exact. The 3-cell volume normalization is zero
    // so the L {L}C_i and L {L}D words do not contribute lower-order volume.
    auto cell_gen = [&](const std::string& id, FormalChain bd) {
        GeneratorData d;
        d.id = id;
        d.degree = 3;
        d.curfew = 2;
        d.suplength = 1;
        d.volume = 0;
        d.skeleton = 6;
        d.spherical = false;
        d.boundary = std::move(bd);
        return make_generator(std::move(d));
    };
    for (int i = 0; i < 4; ++i)
        p.generators.push_back(a[static_cast<std::size_t>(i)]);
    p.generators.push_back(b);
    for (int i = 0; i < 4; ++i) {
        FormalChain bd = bracket(chain_of(a[static_cast<std::size_t>(i)]), chain_of(b));
        p.generators.push_back(cell_gen("C" + std::to_string(i + 1), std::move(bd)));
    }
    FormalChain dd;
    for (int i = 0; i < 4; ++i)
        dd = add(dd, bracket(chain_of(a[static_cast<std::size_t>(i)]), chain_of(a[static_cast<std::size_t>(i)])));
    p.generators.push_back(cell_gen("D", std::move(dd)));

    for (int i = 1; i <= 4; ++i) p.forms.push_back({"a" + std::to_string(i), 2, true, 1});
    p.forms.push_back({"b", 2, true, 1});
    for (int i = 1; i <= 4; ++i) p.forms.push_back({"c" + std::to_string(i), 4, true, 2});
    p.forms.push_back({"d", 4, true, 2});

    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            p.table.set("a" + std::to_string(j), "A" + std::to_string(i), i == j ? 1 : 0);
            p.table.set("c" + std::to_string(j), "C" + std::to_string(i), i == j ? 1 : 0);
        }
    for (int j = 1; j <= 4; ++j) {
        p.table.set("a" + std::to_string(j), "B", 0);
        p.table.set("c" + std::to_string(j), "D", 0);
        p.table.set("b", "A" + std::to_string(j), 0);
        p.table.set("d", "C" + std::to_string(j), 0);
    }
    p.table.set("b", "B", 1);
    p.table.set("d", "D", 1);
    return p;
}

SpacePreset preset_sphere(int n) {
    if (n < 2) throw calc_error(errc::invalid_argument, "sphere preset needs n >= 2");
    SpacePreset p;
    p.name = "S" + std::to_string(n);
    p.dimension = n;
    GeneratorData z;
    z.id = "zeta";
    z.degree = n - 1;
    z.curfew = 1;
    z.suplength = 1;
    z.volume = 1;
    z.skeleton = n;
    z.spherical = true;
    p.generators.push_back(make_generator(std::move(z)));
    p.forms.push_back({"omega", n, true, n - 1});
    p.table.set("omega", "zeta", 1);
    return p;
}

std::optional<SpacePreset> preset_by_name(const std::string& name) {
    if (name == "Y" || name == "y") return preset_y();
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 's')) {
        try {
            int n = std::stoi(name.substr(1));
            if (n >= 2) return preset_sphere(n);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

FormalChain build_z1(const SpacePreset& y) {
    FormalChain z = bracket(y.chain("B"), y.chain("D"));
    for (int i = 1; i <= 4; ++i)
        z = add(z, scalar(2, bracket(y.chain("A" + std::to_string(i)), y.chain("C" + std::to_string(i)))));
    return z;
}

FormalChain build_zl(const SpacePreset& y, std::uint64_t L, const CostModel& model) {
    if (!is_power_of_two(L))
        throw calc_error(errc::not_power_of_two,
                         "Z_L needs L a power of two, got " + std::to_string(L));
    FormalChain bl = loop_power(L, y.chain("B"));

    FormalChain dl = scalar(Rat(L), loop_power(L, y.chain("D")));
    for (int i = 1; i <= 4; ++i) {
        FormalChain ai = y.chain("A" + std::to_string(i));
        dl = add(dl, multiscale_witness(ai, ai, L, model));
    }

    FormalChain z = bracket(bl, dl);
    for (int i = 1; i <= 4; ++i) {
        FormalChain ai = y.chain("A" + std::to_string(i));
        FormalChain cl = scalar(Rat(L), loop_power(L, y.chain("C" + std::to_string(i))));
        cl = add(cl, multiscale_witness(ai, y.chain("B"), L, model));
        z = add(z, scalar(2, bracket(loop_power(L, ai), cl)));
    }
    return z;
}

FormalChain sphere_degree_family(const SpacePreset& s, std::uint64_t L) {
    if (L == 0) throw calc_error(errc::invalid_argument, "family needs L >= 1");
    int n = s.dimension;
    Rat coeff = 1;
    for (int i = 0; i + 1 < n; ++i) coeff *= Rat(L);
    return scalar(coeff, loop_power(L, s.chain("zeta")));
}

FormalChain sphere_hopf_family(const SpacePreset& s, std::uint64_t L) {
    if (L == 0) throw calc_error(errc::invalid_argument, "family needs L >= 1");
    int n = s.dimension;
    if (n % 2 != 0)
        throw calc_error(errc::invalid_argument, "Hopf family needs even sphere dimension");
    Rat coeff = 1;
    for (int i = 0; i < 2 * n - 2; ++i) coeff *= Rat(L);
    FormalChain zl = loop_power(L, s.chain("zeta"));
    return scalar(coeff, bracket(zl, zl));
}

} // namespace loopcalc
