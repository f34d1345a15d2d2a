#pragma once

// Exact symbolic algebra of cubical chains on a based loop space: words of
// atoms (generators, homology witnesses, {k}-scaled sub-words) with rational
// coefficients, the Pontryagin product, graded commutator, boundary, the {k}
// concatenation-power operator, and the geometric cost bookkeeping
// (curfew / suplength / volume bounds).

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace loopcalc {

enum class errc {
    invalid_argument,
    degree_mismatch,
    curfew_mismatch,
    not_a_cycle,
    not_power_of_two,
    inexpressible_pairing,
    parse_error,
    not_found,
};

class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

class FormalChain;
struct GeneratorData;
struct WitnessData;
struct WordBox;

// An atom is a generator, a homology witness, or an opaque {k}-scaled word,
// together with the total scale applied to it. Scale k multiplies curfew and
// suplength by k and leaves the volume bound unchanged.
struct Atom {
    enum class Kind : std::uint8_t { generator = 0, witness = 1, scaled_word = 2 };

    Kind kind = Kind::generator;
    std::shared_ptr<const GeneratorData> gen;
    std::shared_ptr<const WitnessData> wit;
    std::shared_ptr<const WordBox> word; // scaled_word only; inner word length >= 2
    std::uint64_t scale = 1;

    int degree() const;
    Rat curfew() const;
    Rat suplength() const;
    int skeleton() const;
    const std::string& label() const; // generator id or witness key

    int cmp(const Atom& o) const;
    bool operator==(const Atom& o) const { return cmp(o) == 0; }
    bool operator<(const Atom& o) const { return cmp(o) < 0; }
};

using Word = std::vector<Atom>;

struct WordBox {
    Word items;
};

int cmp_words(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return cmp_words(a, b) < 0; }
};

// Cost-recursion constants. The product-volume constant of the metric model
// is not pinned by the theory; it enters once per product (word volume =
// c_prod^(r-1) * prod of atom volumes over the r positive-degree atoms).
struct CostModel {
    Rat c_prod = 1;    // product-volume constant
    Rat c_witness = 1; // single-scale homology constant
};

struct CostBound {
    Rat suplength = 0;
    Rat volume = 0;
};

// Normalized linear combination of words. All words in a nonzero chain share
// one degree and one curfew; the zero chain is the empty term map and is
// compatible with every degree/curfew.
class FormalChain {
public:
    FormalChain() = default;

    static FormalChain zero() { return FormalChain(); }
    static FormalChain from_word(Word w, Rat coeff = 1);
    static FormalChain unit(Rat coeff = 1); // empty word: the curfew-0 constant loop

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; }
    const Rat& curfew() const { return curfew_; }
    const std::map<Word, Rat, WordLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    FormalChain& add_term(const Word& w, const Rat& coeff);

    bool operator==(const FormalChain& o) const;
    bool operator!=(const FormalChain& o) const { return !(*this == o); }

private:
    int degree_ = 0;
    Rat curfew_ = 0;
    std::map<Word, Rat, WordLess> terms_;
};

struct GeneratorData {
    std::string id;
    int degree = 0;
    Rat curfew = 1;
    Rat suplength = 1;
    Rat volume = 1;
    FormalChain boundary; // zero for cycles
    int skeleton = 0;
    bool spherical = false;
};

using GeneratorRef = std::shared_ptr<const GeneratorData>;

// Homology witness: an (n+1)-chain known only through its boundary expression
// and its tracked cost bounds. `key` is the canonical identity used for
// normalization and interning.
struct WitnessData {
    std::string key;
    std::string kind; // "single_scale" | "naive_step"
    int dimension = 0;
    Rat curfew = 0;
    Rat suplength = 0;
    Rat volume = 0;
    int skeleton = 0;
    FormalChain boundary;
    // provenance
    FormalChain z1, z2;
    std::uint64_t step = 0; // naive_step: j
    std::uint64_t bigL = 0; // naive_step: L
    // single-scale piece bounds (p1 + p2 + p3 == volume)
    Rat piece_p1 = 0, piece_p2 = 0, piece_p3 = 0;
};

using WitnessRef = std::shared_ptr<const WitnessData>;

GeneratorRef make_generator(GeneratorData data);

Atom make_generator_atom(GeneratorRef g, std::uint64_t scale = 1);
Atom make_witness_atom(WitnessRef w, std::uint64_t scale = 1);

// {k} applied to a word: composes scales on a single atom, wraps longer words
// opaquely, and is the identity for k = 1.
Word scale_word(std::uint64_t k, const Word& w);

FormalChain chain_of(GeneratorRef g);
FormalChain chain_of(WitnessRef w);

FormalChain add(const FormalChain& a, const FormalChain& b);
FormalChain sub(const FormalChain& a, const FormalChain& b);
FormalChain scalar(const Rat& lambda, const FormalChain& c);
FormalChain product(const FormalChain& a, const FormalChain& b);
FormalChain bracket(const FormalChain& a, const FormalChain& b);
FormalChain loop_power(std::uint64_t k, const FormalChain& c);
FormalChain boundary(const FormalChain& c);
bool is_cycle(const FormalChain& c);

CostBound cost_bounds(const FormalChain& c, const CostModel& model = CostModel{});

int word_degree_of(const Word& w);
Rat word_curfew_of(const Word& w);

std::string chain_brief(const FormalChain& c); // compact debug rendering

} // namespace loopcalc
