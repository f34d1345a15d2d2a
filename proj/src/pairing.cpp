#include "pairing.hpp"

#include <sstream>

namespace loopcalc {

int word_degree(const FormWord& w) {
    int d = 0;
    for (const FormLabel& f : w) d += f.degree - 1;
    return d;
}

namespace {

std::string word_text(const FormWord& w) {
    std::string s = "∫";
    for (const FormLabel& f : w) {
        if (s.size() > 3) s += " ";
        s += f.id;
    }
    return s;
}

Rat pair_word(const FormWord& w, std::size_t lo, std::size_t hi, const Word& cw,
              const PairingTable& table);

// Single chain atom. `lo`/`hi` delimit the form sub-word.
Rat pair_atom(const FormWord& w, std::size_t lo, std::size_t hi, const Atom& atom,
              const PairingTable& table) {
    int fdeg = 0;
    for (std::size_t i = lo; i < hi; ++i) fdeg += w[i].degree - 1;
    if (fdeg != atom.degree()) return 0;
    if (lo == hi) return atom.degree() == 0 ? Rat(1) : Rat(0);

    // Every letter vanishes identically on the skeleton carrying this atom.
    bool all_vanish = true;
    for (std::size_t i = lo; i < hi; ++i)
        if (w[i].vanishing_skeleton < atom.skeleton()) {
            all_vanish = false;
            break;
        }
    if (all_vanish) return 0;

    if (atom.scale > 1) {
        if (hi - lo == 1 && w[lo].closed) {
            Atom unscaled = atom;
            unscaled.scale = 1;
            return Rat(atom.scale) * pair_atom(w, lo, hi, unscaled, table);
        }
        throw calc_error(errc::inexpressible_pairing,
                         "inexpressible pairing: " + word_text(FormWord(w.begin() + lo, w.begin() + hi)) +
                             " against a {" + std::to_string(atom.scale) + "}-scaled atom");
    }

    switch (atom.kind) {
    case Atom::Kind::generator:
        if (hi - lo == 1) return table.lookup(w[lo].id, atom.gen->id);
        throw calc_error(errc::inexpressible_pairing,
                         "inexpressible pairing: multi-letter word against generator " + atom.gen->id);
    case Atom::Kind::scaled_word:
        return pair_word(w, lo, hi, atom.word->items, table);
    case Atom::Kind::witness:
        throw calc_error(errc::inexpressible_pairing,
                         "inexpressible pairing: " + word_text(FormWord(w.begin() + lo, w.begin() + hi)) +
                             " against homology witness " + atom.wit->key);
    }
    return 0;
}

// Chen's product lemma over the leading atom of the chain word:
//   <int w, a.rest> = sum_i <int w[..i], a> <int w[i..], rest>.
Rat pair_word(const FormWord& w, std::size_t lo, std::size_t hi, const Word& cw,
              const PairingTable& table) {
    int fdeg = 0;
    for (std::size_t i = lo; i < hi; ++i) fdeg += w[i].degree - 1;
    if (fdeg != word_degree_of(cw)) return 0;
    if (cw.empty()) return lo == hi ? Rat(1) : Rat(0);
    if (cw.size() == 1) return pair_atom(w, lo, hi, cw[0], table);

    Word rest(cw.begin() + 1, cw.end());
    Rat total = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
        int head_deg = 0;
        for (std::size_t j = lo; j < i; ++j) head_deg += w[j].degree - 1;
        if (head_deg != cw[0].degree()) continue;
        Rat head = pair_atom(w, lo, i, cw[0], table);
        if (head == 0) continue;
        Rat tail = pair_word(w, i, hi, rest, table);
        total += head * tail;
    }
    return total;
}

} // namespace

Rat pair_chain(const FormWord& w, const FormalChain& c, const PairingTable& table) {
    if (c.is_zero()) return 0;
    if (word_degree(w) != c.degree()) return 0;
    Rat total = 0;
    for (const auto& [cw, coeff] : c.terms()) total += coeff * pair_word(w, 0, w.size(), cw, table);
    return total;
}

CertifiedBound distortion_certificate(const FormWord& w, const CycleFamily& family, std::uint64_t L,
                                      const PairingTable& table, const CostModel& model) {
    FormalChain z = family(L);
    int n = word_degree(w);
    if (z.is_zero() || z.degree() != n)
        throw calc_error(errc::degree_mismatch, "certificate family has dimension " +
                                                    std::to_string(z.degree()) + ", word needs " +
                                                    std::to_string(n));
    if (!is_cycle(z)) throw calc_error(errc::not_a_cycle, "certificate family is not a cycle");

    CertifiedBound cb;
    cb.L = L;
    CostBound cost = cost_bounds(z, model);
    cb.suplength = cost.suplength;
    cb.volume = cost.volume;
    cb.pairing = pair_chain(w, z, table);
    // lambda*Z saturates the volume budget s^n; a zero volume bound leaves
    // nothing to rescale and the cycle itself certifies its pairing.
    if (cb.volume == 0) {
        cb.lambda = 1;
    } else {
        Rat budget = 1;
        for (int i = 0; i < n; ++i) budget *= cb.suplength;
        cb.lambda = budget / cb.volume;
    }
    cb.value = cb.lambda * cb.pairing;
    return cb;
}

std::string certificate_to_json(const CertifiedBound& cb) {
    std::ostringstream os;
    os << "{\"L\":" << cb.L << ",\"suplength\":\"" << rat_to_string(cb.suplength) << "\""
       << ",\"volume\":\"" << rat_to_string(cb.volume) << "\""
       << ",\"pairing\":\"" << rat_to_string(cb.pairing) << "\""
       << ",\"lambda\":\"" << rat_to_string(cb.lambda) << "\""
       << ",\"value\":\"" << rat_to_string(cb.value) << "\"}";
    return os.str();
}

} // namespace loopcalc
