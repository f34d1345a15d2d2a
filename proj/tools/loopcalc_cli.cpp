// loopcalc command-line tool. Talks to the engine exclusively through the
// public C interface in loopcalc/loopcalc.h.
//
// Exit codes: 0 success, 1 verification/check failure, 2 usage or input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loopcalc/loopcalc.h"

namespace {

struct StringOut {
    char* s = nullptr;
    ~StringOut() { lc_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct Chain {
    lc_chain* c = nullptr;
    Chain() = default;
    explicit Chain(lc_chain* p) : c(p) {}
    Chain(Chain&& o) noexcept : c(o.c) { o.c = nullptr; }
    Chain& operator=(Chain&& o) noexcept {
        if (this != &o) {
            lc_chain_free(c);
            c = o.c;
            o.c = nullptr;
        }
        return *this;
    }
    Chain(const Chain&) = delete;
    Chain& operator=(const Chain&) = delete;
    ~Chain() { lc_chain_free(c); }
    lc_chain** out() { return &c; }
    operator lc_chain*() const { return c; }
};

struct Family {
    lc_family* f = nullptr;
    Family() = default;
    Family(Family&& o) noexcept : f(o.f) { o.f = nullptr; }
    Family& operator=(Family&& o) noexcept {
        if (this != &o) {
            lc_family_free(f);
            f = o.f;
            o.f = nullptr;
        }
        return *this;
    }
    Family(const Family&) = delete;
    Family& operator=(const Family&) = delete;
    ~Family() { lc_family_free(f); }
    lc_family** out() { return &f; }
    operator lc_family*() const { return f; }
};

[[noreturn]] void die(lc_status s, const std::string& where) {
    std::cerr << "error: " << where << ": " << lc_status_message(s);
    std::string detail = lc_last_error();
    if (!detail.empty()) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(2);
}

void check(lc_status s, const std::string& where) {
    if (s != LC_OK) die(s, where);
}

struct PresetHandle {
    lc_preset* p = nullptr;
    ~PresetHandle() { lc_preset_close(p); }
};

lc_preset* open_preset(PresetHandle& h, const std::string& space) {
    check(lc_preset_open(space.c_str(), &h.p), "opening preset " + space);
    return h.p;
}

std::vector<std::uint64_t> parse_l_range(const std::string& text, std::uint64_t single) {
    std::vector<std::uint64_t> ls;
    if (text.empty()) {
        ls.push_back(single);
        return ls;
    }
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        ls.push_back(std::stoull(text));
        return ls;
    }
    std::uint64_t lo = std::stoull(text.substr(0, dots));
    std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (lo == 0 || hi < lo) throw CLI::ValidationError("--L-range", "empty or invalid range");
    for (std::uint64_t l = lo; l <= hi; l *= 2) ls.push_back(l);
    return ls;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

double fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int run_verify(const std::string& space, std::uint64_t L, std::uint64_t seed) {
    PresetHandle ph;
    lc_preset* p = open_preset(ph, space);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    StringOut gens;
    check(lc_preset_generators(p, &gens.s), "listing generators");
    std::vector<std::string> ids;
    {
        std::stringstream ss(gens.str());
        std::string id;
        while (std::getline(ss, id, ',')) ids.push_back(id);
    }

    // d(d g) = 0 for every generator
    for (const auto& id : ids) {
        Chain g, d1, d2;
        check(lc_chain_generator(p, id.c_str(), g.out()), "generator " + id);
        check(lc_chain_boundary(g, d1.out()), "boundary");
        check(lc_chain_boundary(d1, d2.out()), "boundary^2");
        report("d(d " + id + ") = 0", lc_chain_is_zero(d2) == 1);
    }

    // graded Jacobi over generator triples, seeded subsample for large sets
    {
        bool ok = true;
        std::uint64_t state = seed ? seed : 1;
        auto next = [&state] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        int checked = 0;
        for (int t = 0; t < 60 && ok; ++t) {
            const auto& x = ids[next() % ids.size()];
            const auto& y = ids[next() % ids.size()];
            const auto& z = ids[next() % ids.size()];
            Chain cx, cy, cz;
            check(lc_chain_generator(p, x.c_str(), cx.out()), "gen");
            check(lc_chain_generator(p, y.c_str(), cy.out()), "gen");
            check(lc_chain_generator(p, z.c_str(), cz.out()), "gen");
            // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
            Chain yz, lhs, xy, xyz, xz, yxz, rhs;
            check(lc_chain_bracket(cy, cz, yz.out()), "bracket");
            check(lc_chain_bracket(cx, yz, lhs.out()), "bracket");
            check(lc_chain_bracket(cx, cy, xy.out()), "bracket");
            check(lc_chain_bracket(xy, cz, xyz.out()), "bracket");
            check(lc_chain_bracket(cx, cz, xz.out()), "bracket");
            check(lc_chain_bracket(cy, xz, yxz.out()), "bracket");
            bool odd = (lc_chain_degree(cx) % 2) && (lc_chain_degree(cy) % 2);
            Chain signed_term;
            check(lc_chain_scalar(odd ? "-1" : "1", yxz, signed_term.out()), "scalar");
            check(lc_chain_add(xyz, signed_term, rhs.out()), "add");
            ok = ok && lc_chain_equal(lhs, rhs) == 1;
            ++checked;
        }
        report("graded Jacobi on " + std::to_string(checked) + " generator triples", ok);
    }

    if (space == "Y" || space == "y") {
        // boundary(Z_L) = 0 up the powers of two
        for (std::uint64_t l = 1; l <= L; l *= 2) {
            Chain zl;
            check(lc_chain_zl(p, l, zl.out()), "Z_L");
            report("boundary(Z_" + std::to_string(l) + ") = 0", lc_chain_is_cycle(zl) == 1);
        }
        // telescope identity for a spherical pair at L
        Chain a1, b;
        check(lc_chain_generator(p, "A1", a1.out()), "gen");
        check(lc_chain_generator(p, "B", b.out()), "gen");
        Chain pw, dp, la, lb, br, ab, lab, slab, want, diff;
        check(lc_witness_multiscale(a1, b, L, pw.out()), "multiscale witness");
        check(lc_chain_boundary(pw, dp.out()), "boundary");
        check(lc_chain_loop_power(L, a1, la.out()), "loop power");
        check(lc_chain_loop_power(L, b, lb.out()), "loop power");
        check(lc_chain_bracket(la, lb, br.out()), "bracket");
        check(lc_chain_bracket(a1, b, ab.out()), "bracket");
        check(lc_chain_loop_power(L, ab, lab.out()), "loop power");
        check(lc_chain_scalar(("-" + std::to_string(L)).c_str(), lab, slab.out()), "scalar");
        check(lc_chain_add(br, slab, want.out()), "add");
        Chain negdp;
        check(lc_chain_scalar("-1", dp, negdp.out()), "scalar");
        check(lc_chain_add(want, negdp, diff.out()), "add");
        report("telescope identity at L = " + std::to_string(L), lc_chain_is_zero(diff) == 1);
        // naive comparator shares the boundary
        Chain nv, dn, negdn, diff2;
        check(lc_witness_naive(a1, b, L, nv.out()), "naive witness");
        check(lc_chain_boundary(nv, dn.out()), "boundary");
        check(lc_chain_scalar("-1", dn, negdn.out()), "scalar");
        check(lc_chain_add(dp, negdn, diff2.out()), "add");
        report("naive comparator boundary matches", lc_chain_is_zero(diff2) == 1);
        // headline pairing
        Chain z1;
        check(lc_chain_z1(p, z1.out()), "Z_1");
        StringOut v;
        check(lc_pair(p, "a1 c1", z1, &v.s), "pair");
        report("<int a1 c1, Z_1> = 2", v.str() == "2");
    }

    std::cout << (failures ? "verification FAILED\n" : "all checks passed\n");
    return failures ? 1 : 0;
}

int run_pair(const std::string& space, const std::string& word, const std::string& chain_id,
             const std::string& chain_file, std::uint64_t L) {
    PresetHandle ph;
    lc_preset* p = open_preset(ph, space);
    Chain c;
    if (!chain_file.empty()) {
        std::ifstream in(chain_file);
        if (!in) die(LC_ERR_NOT_FOUND, "reading " + chain_file);
        std::stringstream ss;
        ss << in.rdbuf();
        check(lc_chain_from_json(p, ss.str().c_str(), c.out()), "parsing chain JSON");
    } else if (chain_id == "Z1") {
        check(lc_chain_z1(p, c.out()), "Z_1");
    } else if (chain_id == "ZL") {
        check(lc_chain_zl(p, L, c.out()), "Z_L");
    } else {
        check(lc_chain_generator(p, chain_id.c_str(), c.out()), "generator " + chain_id);
    }
    StringOut v;
    check(lc_pair(p, word.c_str(), c, &v.s), "pairing");
    std::cout << v.str() << "\n";
    return 0;
}

int run_certify(const std::string& space, const std::string& word, const std::string& family,
                const std::string& range, std::uint64_t L, const std::string& out_path) {
    PresetHandle ph;
    lc_preset* p = open_preset(ph, space);
    auto ls = parse_l_range(range, L);
    std::ostringstream json;
    json << "{\"format_version\":1,\"space\":\"" << space << "\",\"word\":\"" << word
         << "\",\"family\":\"" << family << "\",\"certificates\":[";
    bool first = true;
    int wdeg = 0;
    check(lc_word_degree(p, word.c_str(), &wdeg), "word degree");
    std::cout << "L, value, value*log2(L)/L^" << wdeg + 2 << "\n";
    for (std::uint64_t l : ls) {
        StringOut cert;
        check(lc_certify(p, word.c_str(), family.c_str(), l, &cert.s), "certificate at L=" + std::to_string(l));
        if (!first) json << ",";
        first = false;
        json << cert.str();
        // print the headline ratio: value * log2 L / L^(n+2)
        std::string s = cert.str();
        auto vpos = s.find("\"value\":\"");
        std::string value = s.substr(vpos + 9);
        value = value.substr(0, value.find('"'));
        double val = 0;
        auto slash = value.find('/');
        if (slash == std::string::npos)
            val = std::stod(value);
        else
            val = std::stod(value.substr(0, slash)) / std::stod(value.substr(slash + 1));
        double lg = std::log2(static_cast<double>(l));
        double ratio = lg > 0 ? val * lg / std::pow(static_cast<double>(l), wdeg + 2) : val;
        std::cout << l << ", " << val << ", " << ratio << "\n";
    }
    json << "]}";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << json.str() << "\n";
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << json.str() << "\n";
    }
    return 0;
}

int run_scaling(const std::string& space, const std::string& range, bool numeric, int resolution,
                int samples, const std::string& out_path) {
    PresetHandle ph;
    lc_preset* p = open_preset(ph, space);
    auto ls = parse_l_range(range, 8);
    std::ostringstream csv;
    csv << "# loopcalc scaling report, format_version=1, mode=" << (numeric ? "numeric" : "symbolic")
        << ", space=" << space << "\n";
    csv << "L,suplength,vol_multiscale,vol_naive,chen_value,runtime_ms\n";
    std::vector<double> xs, ym, yn;
    bool truncated = false;
    for (std::uint64_t l : ls) {
        auto t0 = std::chrono::steady_clock::now();
        double sup = 0, vm = 0, vn = 0, chen = 0;
        if (numeric) {
            Family pm, pn, z, zl;
            lc_status s = lc_family_p_multiscale(l, resolution, samples, pm.out());
            if (s != LC_OK) {
                csv << "# truncated: " << lc_status_message(s) << "\n";
                truncated = true;
                break;
            }
            check(lc_family_p_naive(l, resolution, samples, pn.out()), "naive family");
            int conv = 0;
            check(lc_family_volume_upper(pm, &vm, &conv), "volume");
            check(lc_family_volume_upper(pn, &vn, &conv), "volume");
            check(lc_family_suplength(pm, &sup), "suplength");
            check(lc_family_sweepout(resolution, samples, z.out()), "sweepout");
            check(lc_family_power(l, z, zl.out()), "power");
            check(lc_family_chen_integral(zl, 1, &chen), "chen integral");
        } else {
            Chain zl, a1, b, pw, nv;
            check(lc_chain_zl(p, l, zl.out()), "Z_L");
            StringOut sl, vol;
            check(lc_chain_cost(zl, &sl.s, &vol.s), "cost");
            auto to_double = [](const std::string& s) {
                auto slash = s.find('/');
                if (slash == std::string::npos) return std::stod(s);
                return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
            };
            sup = to_double(sl.str());
            check(lc_chain_generator(p, "A1", a1.out()), "gen");
            check(lc_chain_generator(p, "B", b.out()), "gen");
            check(lc_witness_multiscale(a1, b, l, pw.out()), "multiscale");
            check(lc_witness_naive(a1, b, l, nv.out()), "naive");
            StringOut s1, v1, s2, v2, pairv;
            check(lc_chain_cost(pw, &s1.s, &v1.s), "cost");
            check(lc_chain_cost(nv, &s2.s, &v2.s), "cost");
            vm = to_double(v1.str());
            vn = to_double(v2.str());
            check(lc_pair(p, "a1 c1", zl, &pairv.s), "pair");
            chen = to_double(pairv.str());
        }
        double ms = ms_since(t0);
        csv << l << "," << sup << "," << vm << "," << vn << "," << chen << "," << ms << "\n";
        if (l >= 2 && vm > 0 && vn > 0) {
            xs.push_back(static_cast<double>(l));
            ym.push_back(vm);
            yn.push_back(vn);
        }
        std::cout << "L=" << l << " suplength=" << sup << " vol_multiscale=" << vm
                  << " vol_naive=" << vn << " chen=" << chen << " (" << ms << " ms)\n";
    }
    if (xs.size() >= 2) {
        std::cout << "fitted exponents: multiscale " << fit_exponent(xs, ym) << ", naive "
                  << fit_exponent(xs, yn) << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << csv.str();
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << csv.str();
    }
    return truncated ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("loopcalc ") + lc_version() +
                 " - loop-space chain calculus with certified geometric bounds"};
    app.require_subcommand(1);
    app.fallthrough(true); // accept global options after the subcommand

    std::string space = "Y";
    std::string range;
    std::uint64_t L = 64;
    std::uint64_t seed = 1;
    int resolution = 0, samples = 0;
    std::string out_path, word, chain_id = "ZL", chain_file, family = "ZL";
    bool numeric = false, symbolic = false;
    double tolerance = 1e-3;

    app.add_option("--space", space, "preset: Y or S<n>")->capture_default_str();
    app.add_option("--L", L, "scale parameter (power of two where required)")->capture_default_str();
    app.add_option("--L-range", range, "doubling range lo..hi, e.g. 8..128");
    app.add_option("--resolution", resolution, "parameter grid resolution (numeric)");
    app.add_option("--samples", samples, "time samples per loop (numeric)");
    app.add_option("--out", out_path, "output file path");
    app.add_option("--seed", seed, "seed for randomized verification subsets");
    app.add_option("--tolerance", tolerance, "numeric tolerance override");
    app.add_flag("--numeric", numeric, "run the numeric backend");
    app.add_flag("--symbolic", symbolic, "run the symbolic backend (default)");

    auto* verify = app.add_subcommand("verify", "run the formal invariant suite");
    auto* pair = app.add_subcommand("pair", "evaluate an iterated-integral word against a chain");
    pair->add_option("--word", word, "whitespace-separated form labels, e.g. 'a1 c1'")->required();
    pair->add_option("--chain", chain_id, "Z1, ZL, or a generator id")->capture_default_str();
    pair->add_option("--chain-file", chain_file, "chain JSON file");
    auto* scaling = app.add_subcommand("scaling", "sweep L and report cost scaling (CSV)");
    auto* certify = app.add_subcommand("certify", "emit distortion certificates");
    certify->add_option("--word", word, "cohomology word")->capture_default_str();
    certify->add_option("--family", family, "cycle family: ZL, degree, hopf")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(space, L, seed);
        if (pair->parsed()) return run_pair(space, word, chain_id, chain_file, L);
        if (scaling->parsed()) return run_scaling(space, range, numeric && !symbolic, resolution, samples, out_path);
        if (certify->parsed()) {
            if (word.empty()) word = (space == "Y" || space == "y") ? "a1 c1" : "omega";
            return run_certify(space, word, family, range, L, out_path);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
