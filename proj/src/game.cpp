#include "scx/game.hpp"

#include "scx/errors.hpp"
#include "scx/random.hpp"

namespace scx {

Game::Game(ComplexPtr complex, std::map<std::uint32_t, double> values)
    : complex_(std::move(complex)), values_(std::move(values)) {
    auto it = values_.find(0);
    if (it != values_.end()) {
        if (it->second != 0.0)
            fail(ErrorCode::invalid_document, "the empty coalition must have value 0");
        values_.erase(it);
    }
    for (const auto& [mask, value] : values_) {
        (void)value;
        if (!complex_->contains(Face(mask)))
            fail(ErrorCode::face_not_in_complex,
                 "game value on {" + face_key(Face(mask)) + "}, which is not a face");
    }
}

double Game::evaluate(Face s) const {
    if (s.empty()) return 0.0;
    if (!complex_->contains(s))
        fail(ErrorCode::face_not_in_complex,
             "evaluate: {" + face_key(s) + "} is not a face");
    auto it = values_.find(s.mask());
    return it == values_.end() ? 0.0 : it->second;
}

Game carrier_game(Face t, ComplexPtr complex, bool strict) {
    if (t.empty() && !strict)
        fail(ErrorCode::empty_carrier_not_strict,
             "carrier game of {} exists only in the strict variant");
    if (!complex->contains(t))
        fail(ErrorCode::face_not_in_complex,
             "carrier: {" + face_key(t) + "} is not a face");
    std::map<std::uint32_t, double> values;
    for (Face s : complex->faces()) {
        if (strict ? t.proper_subset_of(s) : t.subset_of(s)) values[s.mask()] = 1.0;
    }
    values.erase(0);
    return Game(std::move(complex), std::move(values));
}

Game cardinality_game(ComplexPtr complex) {
    std::map<std::uint32_t, double> values;
    for (Face s : complex->faces())
        if (!s.empty()) values[s.mask()] = static_cast<double>(s.cardinality());
    return Game(std::move(complex), std::move(values));
}

Game random_game(ComplexPtr complex, std::uint64_t seed, double lo, double hi) {
    if (lo > hi) fail(ErrorCode::invalid_document, "random game range has lo > hi");
    Rng rng(seed);
    std::map<std::uint32_t, double> values;
    for (Face s : complex->faces()) { // ascending mask order pins the draw order
        if (s.empty()) continue;
        values[s.mask()] = rng.uniform(lo, hi);
    }
    return Game(std::move(complex), std::move(values));
}

Game scale(double c, const Game& v) {
    std::map<std::uint32_t, double> values = v.values();
    for (auto& [mask, value] : values) {
        (void)mask;
        value *= c;
    }
    return Game(v.complex(), std::move(values));
}

Game add(const Game& v, const Game& w) {
    require_same_complex(v, w.complex(), "add");
    std::map<std::uint32_t, double> values = v.values();
    for (const auto& [mask, value] : w.values()) values[mask] += value;
    return Game(v.complex(), std::move(values));
}

double complex_worth(const Game& v, const Subcomplex& k) {
    if (!same_complex(v.complex(), k.parent()))
        fail(ErrorCode::parent_mismatch, "worth: subcomplex belongs to a different complex");
    double total = 0.0;
    for (Face f : k.facets()) total += v.evaluate(f);
    return total;
}

void require_same_complex(const Game& v, const ComplexPtr& other, const char* op) {
    if (!same_complex(v.complex(), other))
        fail(ErrorCode::complex_mismatch,
             std::string(op) + ": operands live on different complexes");
}

} // namespace scx
