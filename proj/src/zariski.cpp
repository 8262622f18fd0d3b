#include "valdim/zariski.hpp"

#include <stdexcept>

namespace valdim {

ZariskiOracle::ZariskiOracle(RingPtr ring) : ring_(std::move(ring)) {}

int ZariskiOracle::intern(const RingElement& a) {
    if (a.ring != ring_) throw std::invalid_argument("atom from a different ring");
    for (size_t i = 0; i < elems_.size(); ++i)
        if (equal(elems_[i].repr, a.repr)) return static_cast<int>(i);
    elems_.push_back(a);
    return static_cast<int>(elems_.size() - 1);
}

const RingElement& ZariskiOracle::atom_element(int id) const {
    if (id < 0 || id >= static_cast<int>(elems_.size()))
        throw std::invalid_argument("atom id out of range");
    return elems_[id];
}

std::string ZariskiOracle::atom_name(int id) const {
    return "D(" + atom_element(id).to_string() + ")";
}

Decision ZariskiOracle::decide(const std::vector<int>& lhs, const std::vector<int>& rhs) const {
    const Field& f = ring_->field;
    int n = ring_->nvars();
    Poly prod = Poly::constant(f, n, 1);
    for (int id : lhs) prod = mul(prod, atom_element(id).repr);
    std::vector<Poly> ideal = ring_->ideal_gens;
    for (int id : rhs) ideal.push_back(atom_element(id).repr);
    bool member = radical_member(prod, f, n, ideal);
    nlohmann::json ev = {{"method", "radical-membership"}, {"member", member}};
    return member ? Decision::proved(std::move(ev)) : Decision::refuted(std::move(ev));
}

JoyalReport joyal_relations_check(const RingPtr& ring, const std::vector<RingElement>& samples) {
    ZariskiOracle oracle(ring);
    JoyalReport report;
    auto expect = [&](const LatticeTerm& a, const LatticeTerm& b, const std::string& what) {
        Decision d = leq(a, b, oracle);
        if (d.status != Tri::Proved) {
            report.ok = false;
            report.failures.push_back(what + " -> " + to_string(d.status));
        }
    };
    int zero = oracle.intern(RingElement::zero(ring));
    int one = oracle.intern(RingElement::one(ring));
    expect(LatticeTerm::atom(zero), LatticeTerm::bottom(), "D(0) <= 0");
    expect(LatticeTerm::top(), LatticeTerm::atom(one), "1 <= D(1)");
    for (const auto& x : samples) {
        for (const auto& y : samples) {
            int ax = oracle.intern(x);
            int ay = oracle.intern(y);
            int sum = oracle.intern(add(x, y));
            int prod = oracle.intern(mul(x, y));
            std::string sx = x.to_string(), sy = y.to_string();
            expect(LatticeTerm::atom(sum),
                   join(LatticeTerm::atom(ax), LatticeTerm::atom(ay)),
                   "D(" + sx + "+" + sy + ") <= D(" + sx + ") v D(" + sy + ")");
            expect(LatticeTerm::atom(prod),
                   meet(LatticeTerm::atom(ax), LatticeTerm::atom(ay)),
                   "D(" + sx + "*" + sy + ") <= D(" + sx + ") ^ D(" + sy + ")");
            expect(meet(LatticeTerm::atom(ax), LatticeTerm::atom(ay)),
                   LatticeTerm::atom(prod),
                   "D(" + sx + ") ^ D(" + sy + ") <= D(" + sx + "*" + sy + ")");
        }
    }
    return report;
}

}  // namespace valdim
