#include "chain.hpp"

#include <sstream>

namespace loopcalc {

int Atom::degree() const {
    switch (kind) {
    case Kind::generator: return gen->degree;
    case Kind::witness: return wit->dimension;
    case Kind::scaled_word: return word_degree_of(word->items);
    }
    return 0;
}

Rat Atom::curfew() const {
    Rat base;
    switch (kind) {
    case Kind::generator: base = gen->curfew; break;
    case Kind::witness: base = wit->curfew; break;
    case Kind::scaled_word: base = word_curfew_of(word->items); break;
    }
    return base * Rat(scale);
}

Rat Atom::suplength() const {
    Rat base;
    switch (kind) {
    case Kind::generator: base = gen->suplength; break;
    case Kind::witness: base = wit->suplength; break;
    case Kind::scaled_word: {
        base = 0;
        for (const Atom& a : word->items) base += a.suplength();
        break;
    }
    }
    return base * Rat(scale);
}

int Atom::skeleton() const {
    switch (kind) {
    case Kind::generator: return gen->skeleton;
    case Kind::witness: return wit->skeleton;
    case Kind::scaled_word: {
        int s = 0;
        for (const Atom& a : word->items) s = std::max(s, a.skeleton());
        return s;
    }
    }
    return 0;
}

const std::string& Atom::label() const {
    static const std::string empty;
    switch (kind) {
    case Kind::generator: return gen->id;
    case Kind::witness: return wit->key;
    case Kind::scaled_word: return empty;
    }
    return empty;
}

int Atom::cmp(const Atom& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (kind != Kind::scaled_word) {
        int c = label().compare(o.label());
        if (c != 0) return c < 0 ? -1 : 1;
    } else {
        int c = cmp_words(word->items, o.word->items);
        if (c != 0) return c;
    }
    if (scale != o.scale) return scale < o.scale ? -1 : 1;
    return 0;
}

int cmp_words(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = a[i].cmp(b[i]);
        if (c != 0) return c;
    }
    return 0;
}

int word_degree_of(const Word& w) {
    int d = 0;
    for (const Atom& a : w) d += a.degree();
    return d;
}

Rat word_curfew_of(const Word& w) {
    Rat c = 0;
    for (const Atom& a : w) c += a.curfew();
    return c;
}

FormalChain FormalChain::from_word(Word w, Rat coeff) {
    FormalChain c;
    c.add_term(w, coeff);
    return c;
}

FormalChain FormalChain::unit(Rat coeff) { return from_word(Word{}, std::move(coeff)); }

FormalChain& FormalChain::add_term(const Word& w, const Rat& coeff) {
    if (coeff == 0) return *this;
    int d = word_degree_of(w);
    Rat cf = word_curfew_of(w);
    if (terms_.empty()) {
        degree_ = d;
        curfew_ = cf;
    } else {
        if (d != degree_)
            throw calc_error(errc::degree_mismatch,
                             "mixed-degree sum: " + std::to_string(d) + " vs " + std::to_string(degree_));
        if (cf != curfew_)
            throw calc_error(errc::curfew_mismatch,
                             "mixed-curfew sum: " + rat_to_string(cf) + " vs " + rat_to_string(curfew_));
    }
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) {
        degree_ = 0;
        curfew_ = 0;
    }
    return *this;
}

bool FormalChain::operator==(const FormalChain& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return degree_ == o.degree_ && curfew_ == o.curfew_ && terms_ == o.terms_;
}

GeneratorRef make_generator(GeneratorData data) {
    if (data.degree < 0) throw calc_error(errc::invalid_argument, "generator degree must be >= 0");
    if (data.curfew <= 0) throw calc_error(errc::invalid_argument, "generator curfew must be positive");
    if (data.suplength < 0 || data.volume < 0)
        throw calc_error(errc::invalid_argument, "generator costs must be non-negative");
    if (!data.boundary.is_zero()) {
        if (data.boundary.degree() != data.degree - 1)
            throw calc_error(errc::invalid_argument, "generator boundary degree must be degree-1");
        if (!is_cycle(data.boundary))
            throw calc_error(errc::not_a_cycle, "generator boundary must itself be a cycle");
    }
    return std::make_shared<const GeneratorData>(std::move(data));
}

Atom make_generator_atom(GeneratorRef g, std::uint64_t scale) {
    if (scale == 0) throw calc_error(errc::invalid_argument, "scale must be >= 1");
    Atom a;
    a.kind = Atom::Kind::generator;
    a.gen = std::move(g);
    a.scale = scale;
    return a;
}

Atom make_witness_atom(WitnessRef w, std::uint64_t scale) {
    if (scale == 0) throw calc_error(errc::invalid_argument, "scale must be >= 1");
    Atom a;
    a.kind = Atom::Kind::witness;
    a.wit = std::move(w);
    a.scale = scale;
    return a;
}

Word scale_word(std::uint64_t k, const Word& w) {
    if (k == 0) throw calc_error(errc::invalid_argument, "{k} requires k >= 1");
    if (k == 1 || w.empty()) return w;
    if (w.size() == 1) {
        Word out = w;
        out[0].scale *= k;
        return out;
    }
    Atom a;
    a.kind = Atom::Kind::scaled_word;
    a.word = std::make_shared<const WordBox>(WordBox{w});
    a.scale = k;
    return Word{a};
}

FormalChain chain_of(GeneratorRef g) { return FormalChain::from_word(Word{make_generator_atom(std::move(g))}); }
FormalChain chain_of(WitnessRef w) { return FormalChain::from_word(Word{make_witness_atom(std::move(w))}); }

FormalChain add(const FormalChain& a, const FormalChain& b) {
    FormalChain out = a;
    for (const auto& [w, c] : b.terms()) out.add_term(w, c);
    return out;
}

FormalChain sub(const FormalChain& a, const FormalChain& b) { return add(a, scalar(-1, b)); }

FormalChain scalar(const Rat& lambda, const FormalChain& c) {
    FormalChain out;
    if (lambda == 0) return out;
    for (const auto& [w, coeff] : c.terms()) out.add_term(w, coeff * lambda);
    return out;
}

FormalChain product(const FormalChain& a, const FormalChain& b) {
    FormalChain out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

FormalChain bracket(const FormalChain& a, const FormalChain& b) {
    if (a.is_zero() || b.is_zero()) return FormalChain::zero();
    int sign = (a.degree() % 2 != 0 && b.degree() % 2 != 0) ? -1 : 1;
    return sub(product(a, b), scalar(sign, product(b, a)));
}

FormalChain loop_power(std::uint64_t k, const FormalChain& c) {
    if (k == 0) throw calc_error(errc::invalid_argument, "loop_power requires k >= 1");
    if (k == 1) return c;
    FormalChain out;
    for (const auto& [w, coeff] : c.terms()) out.add_term(scale_word(k, w), coeff);
    return out;
}

namespace {

FormalChain boundary_of_word(const Word& w);

FormalChain boundary_of_atom(const Atom& a) {
    switch (a.kind) {
    case Atom::Kind::generator: return loop_power(a.scale, a.gen->boundary);
    case Atom::Kind::witness: return loop_power(a.scale, a.wit->boundary);
    case Atom::Kind::scaled_word: return loop_power(a.scale, boundary_of_word(a.word->items));
    }
    return FormalChain::zero();
}

// Graded Leibniz rule: d(a1...ar) = sum_i (-1)^(deg a1+...+deg a(i-1)) a1...da_i...ar.
FormalChain boundary_of_word(const Word& w) {
    FormalChain out;
    int sign_deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        FormalChain da = boundary_of_atom(w[i]);
        if (!da.is_zero()) {
            int sign = (sign_deg % 2 != 0) ? -1 : 1;
            for (const auto& [dw, dc] : da.terms()) {
                Word nw;
                nw.reserve(w.size() - 1 + dw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                nw.insert(nw.end(), dw.begin(), dw.end());
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                out.add_term(nw, dc * sign);
            }
        }
        sign_deg += w[i].degree();
    }
    return out;
}

} // namespace

FormalChain boundary(const FormalChain& c) {
    FormalChain out;
    for (const auto& [w, coeff] : c.terms()) {
        FormalChain dw = boundary_of_word(w);
        for (const auto& [t, tc] : dw.terms()) out.add_term(t, tc * coeff);
    }
    return out;
}

bool is_cycle(const FormalChain& c) { return boundary(c).is_zero(); }

namespace {

// Volume factor of one atom in the word-volume product. Degree-0 atoms
// (curfew padding) concatenate 1-Lipschitzly and are cost-neutral.
Rat atom_volume_factor(const Atom& a, const CostModel& model, int* positive_count);

Rat word_volume_bound(const Word& w, const CostModel& model) {
    Rat vol = 1;
    int positives = 0;
    for (const Atom& a : w) vol *= atom_volume_factor(a, model, &positives);
    // 0-dimensional words carry unit mass per coefficient.
    for (int i = 1; i < positives; ++i) vol *= model.c_prod;
    return vol;
}

Rat atom_volume_factor(const Atom& a, const CostModel& model, int* positive_count) {
    if (a.degree() == 0) return 1;
    ++*positive_count;
    switch (a.kind) {
    case Atom::Kind::generator: return a.gen->volume;
    case Atom::Kind::witness: return a.wit->volume;
    case Atom::Kind::scaled_word: return word_volume_bound(a.word->items, model);
    }
    return 1;
}

} // namespace

CostBound cost_bounds(const FormalChain& c, const CostModel& model) {
    CostBound out;
    for (const auto& [w, coeff] : c.terms()) {
        Rat sl = 0;
        for (const Atom& a : w) sl += a.suplength();
        if (sl > out.suplength) out.suplength = sl;
        out.volume += abs(coeff) * word_volume_bound(w, model);
    }
    return out;
}

namespace {

void print_word(std::ostream& os, const Word& w) {
    if (w.empty()) {
        os << "1";
        return;
    }
    bool first = true;
    for (const Atom& a : w) {
        if (!first) os << ".";
        first = false;
        if (a.scale != 1) os << "{" << a.scale << "}";
        switch (a.kind) {
        case Atom::Kind::generator: os << a.gen->id; break;
        case Atom::Kind::witness: os << "[" << a.wit->kind << "]"; break;
        case Atom::Kind::scaled_word:
            os << "(";
            print_word(os, a.word->items);
            os << ")";
            break;
        }
    }
}

} // namespace

std::string chain_brief(const FormalChain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, coeff] : c.terms()) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(coeff) << "*";
        print_word(os, w);
    }
    return os.str();
}

} // namespace loopcalc
