#include "witness.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace loopcalc {

namespace {

struct SphericalInput {
    GeneratorRef base;
    std::uint64_t scale = 1;
};

SphericalInput parse_spherical(const FormalChain& z, const char* which) {
    if (z.term_count() != 1)
        throw calc_error(errc::invalid_argument,
                         std::string(which) + ": witness input must be a single spherical cycle atom");
    const auto& [word, coeff] = *z.terms().begin();
    if (coeff != 1 || word.size() != 1 || word[0].kind != Atom::Kind::generator)
        throw calc_error(errc::invalid_argument,
                         std::string(which) + ": witness input must be a single spherical cycle atom");
    const Atom& a = word[0];
    if (!a.gen->spherical)
        throw calc_error(errc::invalid_argument, std::string(which) + ": generator " + a.gen->id +
                                                     " is not spherical");
    if (!a.gen->boundary.is_zero())
        throw calc_error(errc::not_a_cycle, std::string(which) + ": generator " + a.gen->id +
                                                " is not a cycle");
    return SphericalInput{a.gen, a.scale};
}

std::string witness_cache_key(const std::string& kind, const SphericalInput& a, const SphericalInput& b,
                              std::uint64_t j, std::uint64_t L) {
    std::ostringstream os;
    os << kind << "|" << a.base->id << "@" << a.scale << "|" << b.base->id << "@" << b.scale;
    if (L != 0) os << "|" << j << "/" << L;
    return os.str();
}

std::unordered_map<std::string, WitnessRef>& witness_cache() {
    static std::unordered_map<std::string, WitnessRef> cache;
    return cache;
}

std::mutex& witness_cache_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

WitnessRef single_scale_witness(const FormalChain& z1, const FormalChain& z2, const CostModel& model) {
    SphericalInput a = parse_spherical(z1, "z1");
    SphericalInput b = parse_spherical(z2, "z2");
    if (z1.curfew() != z2.curfew())
        throw calc_error(errc::curfew_mismatch, "witness inputs must share one curfew (" +
                                                    rat_to_string(z1.curfew()) + " vs " +
                                                    rat_to_string(z2.curfew()) + ")");

    std::string key = witness_cache_key("single_scale", a, b, 0, 0);
    {
        std::lock_guard<std::mutex> lock(witness_cache_mutex());
        auto it = witness_cache().find(key);
        if (it != witness_cache().end()) return it->second;
    }

    int n1 = a.base->degree, n2 = b.base->degree;
    std::uint64_t m = std::max(a.scale, b.scale);
    Rat lip0 = std::max(a.base->suplength, b.base->suplength); // base Lipschitz datum
    Rat sup1 = std::max(z1.terms().begin()->first[0].suplength(), z2.terms().begin()->first[0].suplength());

    Rat lip_pow = 1;
    for (int i = 0; i < n1 + n2; ++i) lip_pow *= lip0;

    auto w = std::make_shared<WitnessData>();
    w->key = key;
    w->kind = "single_scale";
    w->dimension = n1 + n2 + 1;
    w->curfew = 4 * z1.curfew();
    w->suplength = 4 * sup1;
    // Pieces: the two diagonal-to-bouquet brackets and the reparametrization
    // homotopy. P1/P3 carry the input scale so the dyadic telescope sums to
    // exactly C*L*log2(L).
    w->piece_p1 = model.c_witness * lip_pow * lip0 * Rat(m) / 2;
    w->piece_p3 = w->piece_p1;
    w->piece_p2 = model.c_witness * lip_pow * sup1;
    w->volume = w->piece_p1 + w->piece_p2 + w->piece_p3;
    w->skeleton = std::max(z1.terms().begin()->first[0].skeleton(), z2.terms().begin()->first[0].skeleton());
    w->z1 = z1;
    w->z2 = z2;
    w->boundary = sub(scalar(2, loop_power(2, bracket(z1, z2))),
                      bracket(loop_power(2, z1), loop_power(2, z2)));

    WitnessRef ref = w;
    std::lock_guard<std::mutex> lock(witness_cache_mutex());
    auto [it, inserted] = witness_cache().emplace(key, ref);
    return it->second;
}

FormalChain multiscale_witness(const FormalChain& z1, const FormalChain& z2, std::uint64_t L,
                               const CostModel& model) {
    if (!is_power_of_two(L))
        throw calc_error(errc::not_power_of_two, "multiscale witness needs L a power of two, got " +
                                                     std::to_string(L));
    parse_spherical(z1, "z1");
    parse_spherical(z2, "z2");
    unsigned k = log2_exact(L);
    FormalChain out;
    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t half_scale = std::uint64_t(1) << (k - 1 - i);
        WitnessRef piece =
            single_scale_witness(loop_power(half_scale, z1), loop_power(half_scale, z2), model);
        // Negative summands orient the telescope so that the boundary is
        // [{L}Z1,{L}Z2] - L{L}[Z1,Z2].
        Rat coeff = -Rat(std::uint64_t(1) << i);
        out = add(out, scalar(coeff, loop_power(std::uint64_t(1) << i, chain_of(piece))));
    }
    return out;
}

WitnessRef naive_step_witness(std::uint64_t j, std::uint64_t L, const FormalChain& z1,
                              const FormalChain& z2, const CostModel& model) {
    SphericalInput a = parse_spherical(z1, "z1");
    SphericalInput b = parse_spherical(z2, "z2");
    if (z1.curfew() != z2.curfew())
        throw calc_error(errc::curfew_mismatch, "witness inputs must share one curfew");
    if (L < 2 || j < 1 || j >= L)
        throw calc_error(errc::invalid_argument, "naive step index out of range");

    std::string key = witness_cache_key("naive_step", a, b, j, L);
    {
        std::lock_guard<std::mutex> lock(witness_cache_mutex());
        auto it = witness_cache().find(key);
        if (it != witness_cache().end()) return it->second;
    }

    int n1 = a.base->degree, n2 = b.base->degree;
    Rat lip0 = std::max(a.base->suplength, b.base->suplength);
    Rat sup1 = std::max(z1.terms().begin()->first[0].suplength(), z2.terms().begin()->first[0].suplength());
    Rat lip_pow = 1;
    for (int i = 0; i < n1 + n2; ++i) lip_pow *= lip0;
    Rat theta = model.c_witness * lip_pow * (lip0 + sup1);

    auto w = std::make_shared<WitnessData>();
    w->key = key;
    w->kind = "naive_step";
    w->dimension = n1 + n2 + 1;
    w->curfew = 2 * Rat(L) * z1.curfew();
    w->suplength = 2 * Rat(j + 1) * sup1;
    // Reparametrization cost proportional to the current suplength; the first
    // step also carries the diagonal-to-bouquet setup, so the L-1 steps sum
    // to exactly theta * L^2 / 2.
    w->volume = (j == 1) ? 2 * theta : Rat(2 * j + 1) * theta / 2;
    w->skeleton = std::max(z1.terms().begin()->first[0].skeleton(), z2.terms().begin()->first[0].skeleton());
    w->z1 = z1;
    w->z2 = z2;
    w->step = j;
    w->bigL = L;
    FormalChain total = sub(bracket(loop_power(L, z1), loop_power(L, z2)),
                            scalar(Rat(L), loop_power(L, bracket(z1, z2))));
    w->boundary = scalar(Rat(1, L - 1), total);

    WitnessRef ref = w;
    std::lock_guard<std::mutex> lock(witness_cache_mutex());
    auto [it, inserted] = witness_cache().emplace(key, ref);
    return it->second;
}

FormalChain naive_witness(const FormalChain& z1, const FormalChain& z2, std::uint64_t L,
                          const CostModel& model) {
    if (L == 0) throw calc_error(errc::invalid_argument, "naive witness needs L >= 1");
    parse_spherical(z1, "z1");
    parse_spherical(z2, "z2");
    FormalChain out;
    for (std::uint64_t j = 1; j < L; ++j)
        out = add(out, chain_of(naive_step_witness(j, L, z1, z2, model)));
    return out;
}

} // namespace loopcalc
