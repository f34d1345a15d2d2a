#pragma once

// Evaluation of iterated-integral words against formal chains: Chen's product
// splitting, the suspension table for preset generators, the {k} rescaling
// rule for closed one-letter words, and skeleton vanishing. Also the
// certified distortion lower bound built from a cycle family.

#include <functional>
#include <vector>

#include "chain.hpp"

namespace loopcalc {

struct FormLabel {
    std::string id;
    int degree = 1;
    bool closed = true;
    int vanishing_skeleton = 0; // largest skeleton on which the form vanishes identically
};

using FormWord = std::vector<FormLabel>;

struct PairingTable {
    std::map<std::pair<std::string, std::string>, Rat> entries;

    void set(const std::string& form, const std::string& gen, Rat v) {
        entries[{form, gen}] = std::move(v);
    }
    Rat lookup(const std::string& form, const std::string& gen) const {
        auto it = entries.find({form, gen});
        return it == entries.end() ? Rat(0) : it->second;
    }
};

int word_degree(const FormWord& w);

Rat pair_chain(const FormWord& w, const FormalChain& c, const PairingTable& table);

struct CertifiedBound {
    std::uint64_t L = 0;
    Rat suplength; // certificate budget s; asserts delta_w(s) >= value
    Rat volume;    // symbolic volume bound of the un-rescaled cycle
    Rat pairing;
    Rat lambda;
    Rat value;
};

using CycleFamily = std::function<FormalChain(std::uint64_t)>;

CertifiedBound distortion_certificate(const FormWord& w, const CycleFamily& family, std::uint64_t L,
                                      const PairingTable& table, const CostModel& model = CostModel{});

std::string certificate_to_json(const CertifiedBound& cb);

} // namespace loopcalc
